//! Drive the command line in-process: generate an object, then check it.

use svkan::cli::run;

fn main() {
    let dir = std::env::temp_dir().join("svkan-cli-pipeline");
    std::fs::create_dir_all(&dir).expect("temp dir");
    let chain = dir.join("chain.json");
    let object = dir.join("object.json");
    let path = |p: &std::path::Path| p.display().to_string();

    let r = run(["svkan", "gen", "random", "--spec", "S0,D1", "--seed", "1", "--output", &path(&chain)]);
    println!("gen random -> {}", r.status.name());
    let r = run(["svkan", "gen", "dk", "--chain", &path(&chain), "--level", "3", "--output", &path(&object)]);
    println!("gen dk -> {}", r.status.name());

    for args in [
        vec!["validate", "--input"],
        vec!["kan", "--all", "--input"],
        vec!["gamma-check", "--input"],
        vec!["homology", "--input"],
    ] {
        let mut argv = vec!["svkan"];
        argv.extend(&args);
        let target = path(&object);
        argv.push(&target);
        let r = run(argv);
        println!("{} -> {} (exit {})", args[0], r.status.name(), r.status.code());
    }
    let r = run(["svkan", "homology", "--input", &path(&object)]);
    print!("{}", r.stdout());
}
