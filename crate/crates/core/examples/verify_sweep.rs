//! A seeded cross-method sweep over a family of spaces, as run by
//! `grassint verify`, printed as JSON.

use grassint::cli::{cmd_verify, Family, Output, VerifyArgs};

fn main() {
    let report = cmd_verify(&VerifyArgs {
        family: Family::Lg,
        max_n: 2,
        trials: 4,
        seed: 7,
        timings: false,
        output: Output::Json,
    })
    .unwrap();
    println!("{}", serde_json::to_string_pretty(&report).unwrap());
    assert!(report.all_agree);
}
