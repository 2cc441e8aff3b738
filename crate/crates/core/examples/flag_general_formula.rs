//! Partial flag varieties have no dedicated residue integrand here; the
//! general formula built from Weyl-group data covers them. Classes need not
//! be symmetric on a flag variety.

use grassint::exact::MultiPoly;
use grassint::localization::localize;
use grassint::residues::{build_general_formula, iterated_residue};
use grassint::spaces::{weyl_data, SpaceDescriptor};
use grassint::symfun::LoweredClass;

fn main() {
    let space = SpaceDescriptor::flag(2, 3).unwrap();
    let data = weyl_data(&space);
    println!(
        "{space}: |W_P| = {}, {} positive roots",
        data.parabolic_order,
        data.positive_roots.len()
    );
    for text in ["z1^3", "z1^2*z2", "z1*z2^2", "z2^3"] {
        let poly: MultiPoly = text.parse().unwrap();
        let v = LoweredClass::new(poly, 2).unwrap();
        let problem = build_general_formula(&space, &v).unwrap();
        let value = iterated_residue(&problem).unwrap().value;
        assert_eq!(value, localize(&space, &v).unwrap().value.as_poly());
        println!("  {text:<8} -> {value}   (prefactor {})", problem.prefactor());
    }
}
