//! The integral of c1^k over P^(n-1) = G(1,n), by localization and as a
//! residue at infinity. Below the dimension it vanishes, at the dimension it
//! is (-1)^(n-1), above it is a polynomial in the torus characters.

use grassint::localization::localize;
use grassint::residues::{build_residue_problem, iterated_residue};
use grassint::spaces::SpaceDescriptor;
use grassint::symfun::{lower_class, parse_class};

fn main() {
    let n = 4;
    let space = SpaceDescriptor::grass(1, n).unwrap();
    for k in 0..=n {
        let v = lower_class(&parse_class(&format!("c1^{k}")).unwrap(), 1).unwrap();
        let by_fixed_points = localize(&space, &v).unwrap().value.as_poly();
        let by_residue = iterated_residue(&build_residue_problem(&space, &v).unwrap())
            .unwrap()
            .value;
        assert_eq!(by_fixed_points, by_residue);
        println!("{space}  c1^{k}  ->  {by_fixed_points}");
    }
}
