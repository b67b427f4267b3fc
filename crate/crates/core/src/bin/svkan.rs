use std::io::Write;

fn main() {
    let result = svkan::cli::run(std::env::args_os());
    for line in &result.diagnostics {
        eprintln!("{line}");
    }
    let mut stdout = std::io::stdout().lock();
    let _ = stdout.write_all(result.stdout().as_bytes());
    let _ = stdout.flush();
    std::process::exit(result.status.code());
}
