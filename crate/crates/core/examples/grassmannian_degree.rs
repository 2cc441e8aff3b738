//! Degrees of Grassmannians in the Pluecker embedding. The first Chern class
//! of the tautological subbundle is minus the hyperplane class, so the
//! integral of c1^dim is (-1)^dim times the number of standard tableaux of
//! the complementary rectangle, counted here by the hook length formula.

use grassint::localization::localize;
use grassint::spaces::SpaceDescriptor;
use grassint::symfun::{lower_class, parse_class};

fn hook_length_count(rows: u64, cols: u64) -> u64 {
    let cells = rows * cols;
    let mut num: u128 = (1..=cells as u128).product();
    for i in 0..rows {
        for j in 0..cols {
            num /= ((rows - i) + (cols - j) - 1) as u128;
        }
    }
    num as u64
}

fn main() {
    for (m, n) in [(2, 4), (2, 5), (2, 6), (3, 6)] {
        let space = SpaceDescriptor::grass(m, n).unwrap();
        let dim = space.complex_dimension();
        let v = lower_class(&parse_class(&format!("c1^{dim}")).unwrap(), m).unwrap();
        let value = localize(&space, &v).unwrap().value.as_poly();
        println!(
            "G({m},{n}): dim {dim}, integral of c1^{dim} = {value}, tableaux of {}x{m} rectangle = {}",
            n - m,
            hook_length_count((n - m) as u64, m as u64)
        );
    }
}
