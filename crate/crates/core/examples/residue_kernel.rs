//! A single residue at infinity and an iterated one, with and without a
//! custom processing order.

use grassint::exact::{rat, AffineForm, MultiPoly, VarId};
use grassint::residues::{iterated_residue, residue_at_infinity_step, ResidueProblem};

fn main() {
    let z1 = VarId::z(1);
    let t = |i| VarId::t(i);
    // Res z^3 / ((t1 - z)(t2 - z)) at infinity
    let factors = [AffineForm::difference(t(1), z1), AffineForm::difference(t(2), z1)];
    let step = residue_at_infinity_step(&MultiPoly::var(z1).pow(3), &factors, z1).unwrap();
    println!("Res z^3/((t1 - z)(t2 - z)) = {step}");

    // (z1 - z2)^2 / prod_{i,j}(t_i - z_j), both orders
    let diff = MultiPoly::var(z1) - MultiPoly::var(VarId::z(2));
    let grid: Vec<AffineForm> = (1..=2)
        .flat_map(|i| (1..=2).map(move |j| AffineForm::difference(VarId::t(i), VarId::z(j))))
        .collect();
    let problem = ResidueProblem::new(diff.pow(2), grid, rat(1), vec![]).unwrap();
    let default = iterated_residue(&problem).unwrap().value;
    let swapped = problem.with_var_order(vec![z1, VarId::z(2)]).unwrap();
    println!(
        "Res (z1 - z2)^2 / prod(t_i - z_j) = {default} (either order: {})",
        iterated_residue(&swapped).unwrap().value
    );
}
