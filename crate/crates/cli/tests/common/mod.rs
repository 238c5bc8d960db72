//! Golden CLI cases shared by the golden and acceptance targets.

use std::path::{Path, PathBuf};
use std::process::Command;

pub const CASES: &[(&str, &[&str])] = &[
    ("make_w_leibnitz", &["make-w", "leibnitz", "--n", "3"]),
    ("make_w_circulant", &["make-w", "circulant", "--alpha", "1,0,0"]),
    ("make_w_deform", &["make-w", "leibnitz-deform", "--n", "3", "--lambda", "7/3"]),
    ("make_w_deform_one", &["make-w", "leibnitz-deform", "--n", "2", "--lambda", "1"]),
    ("make_w_circulant_e0", &["make-w", "circulant", "--alpha", "1,0"]),
    ("make_w_direct_sum", &["make-w", "direct-sum", "--n", "2"]),
    ("make_w_truncate", &["make-w", "truncate", "--input", "leibnitz4.json"]),
    ("make_w_truncate_shift", &["make-w", "truncate", "--input", "circulant3.json"]),
    ("make_w_missing_n", &["make-w", "leibnitz"]),
    ("validate_valid", &["validate-w", "circulant3.json"]),
    ("validate_asymmetric", &["validate-w", "asymmetric.json"]),
    ("validate_garbled", &["validate-w", "garbled.json"]),
    ("validate_witness_json", &["--format", "json", "validate-w", "witness.json"]),
    ("classify_ones", &["classify", "--alpha", "1,1,1"]),
    ("classify_ones_json", &["--format", "json", "classify", "--alpha", "1,1,1"]),
    ("classify_unit", &["classify", "--alpha", "1,0,0,0"]),
    ("classify_zero", &["classify", "--alpha", "0,0"]),
    ("classify_bad", &["classify", "--alpha", "1,x"]),
    ("certify_leibnitz_sl2", &["certify", "leibnitz3.json", "--algebra", "sl2"]),
    ("certify_witness_sl2", &["certify", "witness.json", "--algebra", "sl2"]),
    ("certify_cap", &["certify", "direct10.json", "--algebra", "gl(4)"]),
    (
        "certify_flags_json",
        &["--format", "json", "certify", "solvable3.json", "--algebra", "heisenberg3", "--center", "--filtration"],
    ),
    ("certify_flags_text", &["certify", "solvable3.json", "--algebra", "sl2", "--center", "--filtration"]),
    ("certify_filtration_semisimple", &["certify", "leibnitz3.json", "--algebra", "sl2", "--filtration"]),
    ("center_heisenberg", &["center", "heisenberg3"]),
    ("center_sl2_json", &["--format", "json", "center", "sl2"]),
    ("center_file", &["center", "affine.json"]),
    ("compat_pass", &["compat", "sl2", "so3"]),
    ("compat_fail", &["compat", "heisenberg3", "affine.json"]),
    ("compat_json", &["--format", "json", "compat", "affine.json", "sl2"]),
    ("spectrum_text", &["spectrum", "--alpha", "1,2,0,-1"]),
    ("spectrum_json", &["--format", "json", "spectrum", "--alpha", "1/2,1/2"]),
    ("sandwich_text", &["--seed", "7", "sandwich-check", "--trials", "6"]),
    ("sandwich_json", &["--format", "json", "--seed", "3", "sandwich-check", "--trials", "4", "--n", "2", "--p", "3"]),
    ("poisson_casimir", &["poisson-bracket", "--algebra", "sl2", "casimir.json", "xi_e.json"]),
    ("poisson_he_json", &["--format", "json", "poisson-bracket", "--algebra", "sl2", "xi_h.json", "xi_e.json"]),
    ("unknown_command", &["frobnicate"]),
];

pub fn tests_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests")
}

pub fn transcript(args: &[&str], threads: &str) -> String {
    let out = Command::new(env!("CARGO_BIN_EXE_lie-ext"))
        .args(args)
        .current_dir(tests_dir().join("fixtures"))
        .env("RAYON_NUM_THREADS", threads)
        .output()
        .expect("binary runs");
    format!(
        "$ lie-ext {}\nexit: {}\n--- stdout\n{}--- stderr\n{}",
        args.join(" "),
        out.status.code().expect("exited normally"),
        String::from_utf8(out.stdout).expect("utf-8 stdout"),
        String::from_utf8(out.stderr).expect("utf-8 stderr"),
    )
}

pub fn golden_path(name: &str) -> PathBuf {
    tests_dir().join("golden").join(format!("{name}.txt"))
}
