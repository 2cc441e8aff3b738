//! The class language: Chern classes, Schur, elementary, complete and power
//! sum polynomials, arithmetic and powers, lowered to Chern roots.

use grassint::symfun::{lower_class, parse_class};

fn main() {
    for text in ["c1^2 - 2*c2", "s[2,1]", "h2 - e2", "p3", "(c1 + c2)^2 - 1/2*s[1,1]"] {
        let expr = parse_class(text).unwrap();
        let lowered = lower_class(&expr, 2).unwrap();
        println!("{text:<26} parsed {expr:<28} in roots: {}", lowered.poly());
    }
    match parse_class("c1 + (") {
        Err(e) => println!("error: {e}"),
        Ok(_) => unreachable!(),
    }
}
