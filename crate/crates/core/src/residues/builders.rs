//! Integrands whose iterated residue at infinity equals an integral over one
//! of the supported spaces.

use std::collections::BTreeMap;

use itertools::Itertools;
use num_traits::Zero;

use super::{ResidueError, ResidueProblem};
use crate::exact::{factorial, rat, AffineForm, MultiPoly, Rational, VarId};
use crate::spaces::{orientation, weyl_data, SpaceDescriptor, SpaceKind};
use crate::symfun::LoweredClass;

fn zp(i: u32) -> MultiPoly {
    MultiPoly::var(VarId::z(i))
}

fn prod<I: IntoIterator<Item = MultiPoly>>(factors: I) -> MultiPoly {
    factors.into_iter().fold(MultiPoly::one(), |acc, f| &acc * &f)
}

/// `t_i - z_j`
fn t_minus_z(i: u32, j: u32) -> AffineForm {
    AffineForm::difference(VarId::t(i), VarId::z(j))
}

/// `t_i + z_j`
fn t_plus_z(i: u32, j: u32) -> AffineForm {
    AffineForm::sum(VarId::t(i), VarId::z(j))
}

/// `prod (z_i - z_j)` over ordered pairs `i != j` drawn from `range`.
fn ordered_differences(range: std::ops::RangeInclusive<u32>) -> MultiPoly {
    prod(
        range
            .clone()
            .cartesian_product(range)
            .filter(|(i, j)| i != j)
            .map(|(i, j)| zp(i) - zp(j)),
    )
}

fn check_class(space: &SpaceDescriptor, v: &LoweredClass, expected: u32) -> Result<(), ResidueError> {
    if v.num_roots() != expected {
        return Err(ResidueError::DimensionMismatch {
            space: space.to_string(),
            expected,
            found: v.num_roots(),
        });
    }
    if !matches!(space.kind(), SpaceKind::Flag { .. }) && !v.is_symmetric() {
        return Err(ResidueError::NonSymmetricClass);
    }
    Ok(())
}

/// The space-specific integrand: `m` variables for a Grassmannian, `n` for
/// the isotropic Grassmannians. Flag varieties have no such formula; use
/// [`build_general_formula`].
pub fn build_residue_problem(space: &SpaceDescriptor, v: &LoweredClass) -> Result<ResidueProblem, ResidueError> {
    check_class(space, v, space.num_root_variables())?;
    match space.kind() {
        SpaceKind::Grass { m, n } => {
            let numerator = v.poly() * &ordered_differences(1..=m);
            let factors = (1..=n).cartesian_product(1..=m).map(|(i, j)| t_minus_z(i, j)).collect();
            ResidueProblem::new(numerator, factors, factorial(m).recip(), vec![])
        }
        SpaceKind::Lagrangian { n } | SpaceKind::OrthogonalEven { n } | SpaceKind::OrthogonalOdd { n } => {
            let sums = prod((1..=n).tuple_combinations().map(|(i, j)| zp(i) + zp(j)));
            let mut numerator = &(v.poly() * &ordered_differences(1..=n)) * &sums;
            let two_n = MultiPoly::constant(rat(2).pow(n as i32));
            match space.kind() {
                SpaceKind::OrthogonalEven { .. } => {
                    numerator = &numerator * &(&two_n * &prod((1..=n).map(zp)));
                }
                SpaceKind::OrthogonalOdd { .. } => numerator = &numerator * &two_n,
                _ => {}
            }
            let factors = (1..=n)
                .cartesian_product(1..=n)
                .flat_map(|(i, j)| [t_minus_z(i, j), t_plus_z(i, j)])
                .collect();
            ResidueProblem::new(numerator, factors, factorial(n).recip(), vec![])
        }
        SpaceKind::Flag { .. } => Err(ResidueError::UnsupportedSpace(space.to_string())),
    }
}

/// Integrand of `phi(R) psi(Q)` over a classical Grassmannian in `n`
/// variables. `v_quot` is written in roots `z_1..z_{n-m}` and is shifted to
/// `z_{m+1}..z_n`.
pub fn build_two_bundle_problem(
    space: &SpaceDescriptor,
    v_sub: &LoweredClass,
    v_quot: &LoweredClass,
) -> Result<ResidueProblem, ResidueError> {
    let SpaceKind::Grass { m, n } = space.kind() else {
        return Err(ResidueError::UnsupportedSpace(space.to_string()));
    };
    check_class(space, v_sub, m)?;
    check_class(space, v_quot, n - m)?;
    let shift: BTreeMap<VarId, VarId> = (1..=n - m).map(|k| (VarId::z(k), VarId::z(m + k))).collect();
    let quot = v_quot.poly().rename(&shift);
    let cross = prod((1..=m).cartesian_product(m + 1..=n).map(|(i, j)| zp(i) - zp(j)));
    let numerator = prod([
        v_sub.poly().clone(),
        quot,
        cross,
        ordered_differences(1..=m),
        ordered_differences(m + 1..=n),
    ]);
    let factors = (1..=n).cartesian_product(1..=n).map(|(i, j)| t_minus_z(i, j)).collect();
    ResidueProblem::new(numerator, factors, (factorial(m) * factorial(n - m)).recip(), vec![])
}

/// The Lagrangian integrand with diagonal pairing `(t_i - z_i)(t_i + z_i)`
/// and the `t`-only denominator `prod_{i<j} (t_i + t_j)(t_j - t_i)`.
pub fn build_lg_first_form(n: u32, v: &LoweredClass) -> Result<ResidueProblem, ResidueError> {
    let space = SpaceDescriptor::lagrangian(n).map_err(|e| ResidueError::InvalidProblem(e.to_string()))?;
    check_class(&space, v, n)?;
    let vand = prod((1..=n).tuple_combinations().map(|(i, j)| zp(j) - zp(i)));
    let numerator = v.poly() * &vand;
    let factors = (1..=n).flat_map(|i| [t_minus_z(i, i), t_plus_z(i, i)]).collect();
    let t_denominator = (1..=n)
        .tuple_combinations()
        .flat_map(|(i, j)| {
            [
                AffineForm::sum(VarId::t(i), VarId::t(j)),
                AffineForm::difference(VarId::t(j), VarId::t(i)),
            ]
        })
        .collect();
    ResidueProblem::new(numerator, factors, rat(1), t_denominator)
}

/// Removes from `numerator` one factor proportional to `root`, returning the
/// proportionality constant `factor / root`.
fn cancel_root(numerator: &mut Vec<AffineForm>, root: &AffineForm) -> Result<Rational, ResidueError> {
    let (root_scale, root_monic) = root.normalize();
    let hit = numerator.iter().position(|f| f.normalize().1 == root_monic);
    match (hit, root_monic) {
        (Some(k), Some(_)) => {
            let (scale, _) = numerator.remove(k).normalize();
            Ok(scale / root_scale)
        }
        _ => Err(ResidueError::UncancelledRoot(root.to_string())),
    }
}

/// The Weyl-data integrand: `V * prod_i prod_{x in X_i, x != z_i}(z_i - x)`
/// over `prod_i prod_{x in X_i}(t_i - x)` and the positive roots outside the
/// parabolic. The roots are cancelled against numerator factors up to a
/// scalar, so every remaining denominator factor involves a single `z`. The
/// prefactor carries `1/|W_P|` and the orientation sign of the space.
pub fn build_general_formula(space: &SpaceDescriptor, v: &LoweredClass) -> Result<ResidueProblem, ResidueError> {
    check_class(space, v, space.num_root_variables())?;
    let data = weyl_data(space);
    let mut numerator_factors = Vec::new();
    let mut factors = Vec::new();
    for (orbit, i) in data.character_sets.iter().zip(1..) {
        let zi = AffineForm::var(VarId::z(i));
        for x in orbit {
            factors.push(AffineForm::var(VarId::t(i)).add(&x.neg()));
            if *x != zi {
                numerator_factors.push(zi.add(&x.neg()));
            }
        }
    }
    let mut prefactor = orientation(space) / &data.parabolic_order;
    for root in &data.positive_roots {
        prefactor *= cancel_root(&mut numerator_factors, root)?;
    }
    let numerator = numerator_factors
        .iter()
        .fold(v.poly().clone(), |acc, f| &acc * &f.to_poly());
    debug_assert!(!prefactor.is_zero());
    ResidueProblem::new(numerator, factors, prefactor, vec![])
}
