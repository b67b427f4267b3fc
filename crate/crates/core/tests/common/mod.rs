//! The CLI golden-file suite, shared by the golden tests and the acceptance
//! gate. Each case runs the real binary from the crate root with relative
//! fixture paths, so the recorded output does not depend on where the
//! checkout lives.
//!
//! Set `UPDATE_GOLDEN=1` to rewrite `tests/golden/*.out` from the current
//! binary.

#![allow(dead_code)]

use std::path::{Path, PathBuf};
use std::process::Command;

pub struct Case {
    pub name: &'static str,
    pub args: &'static [&'static str],
    pub exit: i32,
}

const fn case(name: &'static str, args: &'static [&'static str], exit: i32) -> Case {
    Case { name, args, exit }
}

pub const CASES: &[Case] = &[
    case("gen_dk", &["gen", "dk", "--chain", "tests/fixtures/chain12.json", "--level", "2"], 0),
    case("gen_random", &["gen", "random", "--spec", "S0,D1,S2", "--seed", "11"], 0),
    case("gen_example51", &["gen", "example51", "--level", "3"], 0),
    case("gen_string_group", &["gen", "string-group", "--dim", "3", "--level", "3"], 0),
    case("validate_dk12", &["validate", "--input", "tests/fixtures/dk12.json"], 0),
    case("validate_chain", &["validate", "--input", "tests/fixtures/chain_s0d1s2.json"], 0),
    case("validate_example51", &["validate", "--input", "tests/fixtures/example51.json"], 0),
    case("validate_family", &["validate", "--input", "tests/fixtures/string3.json"], 0),
    case("validate_svs_broken", &["validate", "--input", "tests/fixtures/svs_broken.json"], 1),
    case("validate_malformed", &["validate", "--input", "tests/fixtures/malformed.json"], 2),
    case("validate_missing_file", &["validate", "--input", "tests/fixtures/absent.json"], 2),
    case("kan_all_dk12", &["kan", "--input", "tests/fixtures/dk12.json", "--all"], 0),
    case("kan_shaped_dk3", &["kan", "--input", "tests/fixtures/dk3.json", "--shaped"], 0),
    case("kan_generalized_dk3", &["kan", "--input", "tests/fixtures/dk3.json", "--n", "3", "--generalized", "1,2"], 0),
    case("kan_semi_broken", &["kan", "--input", "tests/fixtures/semi_broken.json", "--n", "1", "--i", "0"], 1),
    case("horn_dk12", &["horn", "--input", "tests/fixtures/dk12.json", "--n", "2", "--removed", "1"], 0),
    case(
        "horn_recursive_dk3",
        &["horn", "--input", "tests/fixtures/dk3.json", "--n", "3", "--removed", "1,3", "--recursive"],
        0,
    ),
    case("horn_nothing_removed", &["horn", "--input", "tests/fixtures/dk12.json", "--n", "2", "--removed", ""], 0),
    case("horn_out_of_range", &["horn", "--input", "tests/fixtures/dk12.json", "--n", "5", "--removed", "1"], 2),
    case(
        "fill_linear",
        &[
            "fill",
            "--input",
            "tests/fixtures/dk12.json",
            "--horn",
            "tests/fixtures/horn_2_1.json",
            "--element",
            "tests/fixtures/element_2_1.json",
        ],
        0,
    ),
    case(
        "fill_closed_form",
        &[
            "fill",
            "--input",
            "tests/fixtures/dk3.json",
            "--horn",
            "tests/fixtures/horn_3_13.json",
            "--element",
            "tests/fixtures/element_3_13.json",
            "--generalized",
        ],
        0,
    ),
    case(
        "fill_outside_horn",
        &[
            "fill",
            "--input",
            "tests/fixtures/dk12.json",
            "--horn",
            "tests/fixtures/horn_2_1.json",
            "--element",
            "tests/fixtures/element_2_1_bad.json",
        ],
        2,
    ),
    case("normalize_n", &["normalize", "--input", "tests/fixtures/dk3.json", "--variant", "N"], 0),
    case("normalize_tilde", &["normalize", "--input", "tests/fixtures/dk3.json", "--variant", "tilde"], 0),
    case("gamma_check_dk3", &["gamma-check", "--input", "tests/fixtures/dk3.json"], 0),
    case("gamma_check_semi", &["gamma-check", "--input", "tests/fixtures/semi_broken.json"], 2),
    case("homology_chain", &["homology", "--input", "tests/fixtures/chain_s0d1s2.json"], 0),
    case("homology_dk3", &["homology", "--input", "tests/fixtures/dk3.json"], 0),
    case("tangent_string3", &["tangent", "--input", "tests/fixtures/string3.json"], 0),
    case("tangent_example51", &["tangent", "--input", "tests/fixtures/example51.json", "--variant", "tilde"], 0),
    case(
        "horn_profile_2_1",
        &["horn-profile", "--input", "tests/fixtures/example51.json", "--n", "2", "--removed", "1"],
        1,
    ),
    case(
        "horn_profile_one_kept",
        &["horn-profile", "--input", "tests/fixtures/example51.json", "--n", "2", "--removed", "0,1"],
        0,
    ),
    case("unknown_flag", &["kan", "--input", "tests/fixtures/dk12.json", "--everything"], 2),
];

/// Generator cases whose output is checked in as an input fixture.
pub const FIXTURE_SOURCES: &[(&str, &str)] = &[
    ("gen_dk", "dk12.json"),
    ("gen_random", "chain_s0d1s2.json"),
    ("gen_example51", "example51.json"),
    ("gen_string_group", "string3.json"),
];

pub fn crate_root() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
}

pub fn golden_path(name: &str) -> PathBuf {
    crate_root().join("tests/golden").join(format!("{name}.out"))
}

pub struct Run {
    pub exit: i32,
    pub stdout: Vec<u8>,
}

pub fn run_case(c: &Case) -> Run {
    let out = Command::new(env!("CARGO_BIN_EXE_svkan"))
        .args(c.args)
        .current_dir(crate_root())
        .output()
        .expect("the svkan binary runs");
    Run { exit: out.status.code().unwrap_or(-1), stdout: out.stdout }
}

pub fn run_suite() -> Vec<Run> {
    CASES.iter().map(run_case).collect()
}

fn updating() -> bool {
    std::env::var_os("UPDATE_GOLDEN").is_some_and(|v| v != "0")
}

/// Compares (or, when updating, records) every run against its golden file.
/// Returns one message per mismatch.
pub fn compare_with_golden(runs: &[Run]) -> Vec<String> {
    let mut problems = Vec::new();
    for (c, r) in CASES.iter().zip(runs) {
        if r.exit != c.exit {
            problems.push(format!("{}: exit {} instead of {}", c.name, r.exit, c.exit));
        }
        let path = golden_path(c.name);
        if updating() {
            std::fs::write(&path, &r.stdout).expect("golden directory is writable");
            continue;
        }
        match std::fs::read(&path) {
            Ok(expected) if expected == r.stdout => {}
            Ok(_) => problems.push(format!("{}: stdout differs from {}", c.name, display(&path))),
            Err(_) => problems.push(format!("{}: missing {}", c.name, display(&path))),
        }
    }
    problems
}

fn display(p: &Path) -> String {
    p.strip_prefix(crate_root()).unwrap_or(p).display().to_string()
}
