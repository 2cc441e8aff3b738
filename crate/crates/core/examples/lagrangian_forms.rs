//! Two residue integrands for the Lagrangian Grassmannian LG(n): the first
//! pairs t_i with z_i only and carries a t-only denominator, the second uses
//! all pairs (t_i, z_j). Both reproduce the fixed-point sum.

use grassint::localization::localize;
use grassint::residues::{build_lg_first_form, build_residue_problem, iterated_residue};
use grassint::spaces::SpaceDescriptor;
use grassint::symfun::{lower_class, parse_class};

fn main() {
    let n = 3;
    let space = SpaceDescriptor::lagrangian(n).unwrap();
    for text in ["c1^6", "c1*c2*c3", "s[3,2,1]", "c3^2 + c1^7"] {
        let v = lower_class(&parse_class(text).unwrap(), n).unwrap();
        let first = iterated_residue(&build_lg_first_form(n, &v).unwrap()).unwrap().value;
        let second = iterated_residue(&build_residue_problem(&space, &v).unwrap())
            .unwrap()
            .value;
        let fixed = localize(&space, &v).unwrap().value.as_poly();
        assert!(first == second && second == fixed);
        println!("LG({n})  {text:<12} {fixed}");
    }
}
