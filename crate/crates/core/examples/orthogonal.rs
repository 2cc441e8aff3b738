//! Integrals over the maximal orthogonal Grassmannians OG(n, 2n) and
//! OG(n, 2n+1), whose residue integrands differ from the Lagrangian one only
//! by the extra numerators 2^n z_1...z_n and 2^n.

use grassint::localization::localize;
use grassint::residues::{build_residue_problem, iterated_residue};
use grassint::spaces::SpaceDescriptor;
use grassint::symfun::{lower_class, parse_class};

fn main() {
    for space in ["og:2,even", "og:3,even", "og:2,odd", "og:3,odd"] {
        let space: SpaceDescriptor = space.parse().unwrap();
        let n = space.num_root_variables();
        let dim = space.complex_dimension();
        let v = lower_class(&parse_class(&format!("c1^{dim}")).unwrap(), n).unwrap();
        let residue = iterated_residue(&build_residue_problem(&space, &v).unwrap())
            .unwrap()
            .value;
        assert_eq!(residue, localize(&space, &v).unwrap().value.as_poly());
        println!("{space}: dim {dim}, integral of c1^{dim} = {residue}");
    }
}
