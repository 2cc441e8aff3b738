//! Iterated residues at infinity of rational functions whose denominators
//! are products of affine forms, each involving a single `z` variable.
//!
//! Convention: `Res_{z=inf} f = -[z^-1] f`, the coefficient taken in the
//! Laurent expansion at infinity; equivalently minus the sum of all finite
//! residues.

mod builders;

pub use builders::{build_general_formula, build_lg_first_form, build_residue_problem, build_two_bundle_problem};

use std::collections::{BTreeMap, BTreeSet};

use num_traits::{One, Zero};
use thiserror::Error;

use crate::exact::{AffineForm, ExactError, MultiPoly, Rational, VarId};
use crate::symfun::complete_upto;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ResidueError {
    #[error("factor {factor} involves more than one z variable")]
    FactorNotUnivariate { factor: String },
    #[error("factor {factor} does not involve {var}")]
    FactorFreeOfVariable { factor: String, var: VarId },
    #[error("invalid residue problem: {0}")]
    InvalidProblem(String),
    #[error("{space} needs a class in {expected} Chern roots, got {found}")]
    DimensionMismatch { space: String, expected: u32, found: u32 },
    #[error("class is not symmetric in its Chern roots")]
    NonSymmetricClass,
    #[error("no residue formula of this kind for {0}")]
    UnsupportedSpace(String),
    #[error("positive root {0} has no matching numerator factor")]
    UncancelledRoot(String),
    #[error("denominator factor {0} vanishes at the chosen specialization")]
    DegenerateSpecialization(String),
    #[error("residue did not reduce to a polynomial in t")]
    NotPolynomial,
    #[error(transparent)]
    Exact(#[from] ExactError),
}

/// One residue at infinity in `var`.
///
/// Every factor must be affine in `var` with no other `z` variable. Writing
/// each factor as `u_l * (a_l - var)`, the result is
/// `(-1)^(r+1) / prod(u_l) * sum_j p_j * h_{j-r+1}(a_1..a_r)` where `p_j` is
/// the coefficient of `var^j` in the numerator and `r` the number of
/// factors.
pub fn residue_at_infinity_step(
    numerator: &MultiPoly,
    factors: &[AffineForm],
    var: VarId,
) -> Result<MultiPoly, ResidueError> {
    let mut unit = Rational::one();
    let mut roots = Vec::with_capacity(factors.len());
    for f in factors {
        let c = f.coefficient(var);
        if c.is_zero() {
            return Err(ResidueError::FactorFreeOfVariable {
                factor: f.to_string(),
                var,
            });
        }
        if f.z_variables().len() > 1 {
            return Err(ResidueError::FactorNotUnivariate { factor: f.to_string() });
        }
        // c*z + rest = (-c) * (-rest/c - z)
        roots.push(f.without(var).scale(&-c.recip()).to_poly());
        unit *= -c;
    }
    let r = factors.len() as u32;
    if r == 0 || numerator.is_zero() {
        return Ok(MultiPoly::zero());
    }
    let coeffs = numerator.coefficients_in(var);
    let top = *coeffs.keys().next_back().unwrap();
    if top + 1 < r {
        return Ok(MultiPoly::zero());
    }
    let h = complete_upto(top + 1 - r, &roots);
    let mut acc = MultiPoly::zero();
    for (j, pj) in coeffs.range(r - 1..) {
        acc += &(pj * &h[(j + 1 - r) as usize]);
    }
    let mut scale = unit.recip();
    if r.is_multiple_of(2) {
        scale = -scale;
    }
    Ok(acc.scale(&scale))
}

/// `prefactor * Res_{z=inf} numerator / prod(factors)`, divided by the
/// `t`-only forms in `t_denominator`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResidueProblem {
    numerator: MultiPoly,
    factors: Vec<AffineForm>,
    var_order: Vec<VarId>,
    prefactor: Rational,
    t_denominator: Vec<AffineForm>,
}

/// Result of an iterated residue: a polynomial in `t`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResidueValue {
    pub value: MultiPoly,
}

impl ResidueProblem {
    /// Uses the default processing order: highest-index `z` first.
    pub fn new(
        numerator: MultiPoly,
        factors: Vec<AffineForm>,
        prefactor: Rational,
        t_denominator: Vec<AffineForm>,
    ) -> Result<Self, ResidueError> {
        let mut vars: BTreeSet<VarId> = numerator.variables().into_iter().filter(|v| v.is_z()).collect();
        for f in &factors {
            match f.z_variables().as_slice() {
                [v] => {
                    vars.insert(*v);
                }
                [] => {
                    return Err(ResidueError::InvalidProblem(format!(
                        "denominator factor {f} has no z variable"
                    )))
                }
                _ => return Err(ResidueError::FactorNotUnivariate { factor: f.to_string() }),
            }
        }
        for f in &t_denominator {
            if !f.z_variables().is_empty() || f.is_zero() {
                return Err(ResidueError::InvalidProblem(format!(
                    "t-denominator factor {f} must be a nonzero form in t"
                )));
            }
        }
        Ok(ResidueProblem {
            numerator,
            factors,
            var_order: vars.into_iter().rev().collect(),
            prefactor,
            t_denominator,
        })
    }

    /// Sets the processing order; must be a permutation of the problem's
    /// `z` variables.
    pub fn with_var_order(mut self, order: Vec<VarId>) -> Result<Self, ResidueError> {
        let mut want = self.var_order.clone();
        let mut got = order.clone();
        want.sort();
        got.sort();
        if want != got {
            return Err(ResidueError::InvalidProblem(format!(
                "variable order {} is not a permutation of {}",
                order.iter().map(VarId::to_string).collect::<Vec<_>>().join(","),
                want.iter().map(VarId::to_string).collect::<Vec<_>>().join(","),
            )));
        }
        self.var_order = order;
        Ok(self)
    }

    pub fn numerator(&self) -> &MultiPoly {
        &self.numerator
    }

    pub fn factors(&self) -> &[AffineForm] {
        &self.factors
    }

    pub fn var_order(&self) -> &[VarId] {
        &self.var_order
    }

    pub fn prefactor(&self) -> &Rational {
        &self.prefactor
    }

    pub fn t_denominator(&self) -> &[AffineForm] {
        &self.t_denominator
    }

    /// Replaces `t` variables by values throughout.
    pub fn specialize(&self, t_values: &BTreeMap<VarId, Rational>) -> Result<ResidueProblem, ResidueError> {
        let factors: Vec<AffineForm> = self.factors.iter().map(|f| f.specialize(t_values)).collect();
        let mut prefactor = self.prefactor.clone();
        let mut t_denominator = Vec::new();
        for f in &self.t_denominator {
            let g = f.specialize(t_values);
            if g.is_zero() {
                return Err(ResidueError::DegenerateSpecialization(f.to_string()));
            }
            match g.linear().is_empty() {
                true => prefactor /= g.constant(),
                false => t_denominator.push(g),
            }
        }
        Ok(ResidueProblem {
            numerator: self.numerator.specialize(t_values),
            factors,
            var_order: self.var_order.clone(),
            prefactor,
            t_denominator,
        })
    }
}

/// Applies [`residue_at_infinity_step`] once per variable in the problem's
/// order, then the prefactor and the exact division by the `t` part.
pub fn iterated_residue(problem: &ResidueProblem) -> Result<ResidueValue, ResidueError> {
    let mut by_var: BTreeMap<VarId, Vec<AffineForm>> = problem.var_order.iter().map(|&v| (v, Vec::new())).collect();
    for f in &problem.factors {
        let v = f.z_variables()[0];
        by_var
            .get_mut(&v)
            .ok_or_else(|| ResidueError::InvalidProblem(format!("{v} missing from the variable order")))?
            .push(f.clone());
    }
    if let Some(v) = problem
        .numerator
        .variables()
        .into_iter()
        .find(|v| v.is_z() && !by_var.contains_key(v))
    {
        return Err(ResidueError::InvalidProblem(format!(
            "{v} missing from the variable order"
        )));
    }

    // A term whose z-exponent is below r - 1 in some variable never reaches z^-1.
    let mut numerator = problem.numerator.clone();
    numerator.retain(|m| {
        by_var
            .iter()
            .all(|(&v, fs)| fs.is_empty() || m.exponent(v) + 1 >= fs.len() as u32)
    });

    for v in &problem.var_order {
        numerator = residue_at_infinity_step(&numerator, &by_var[v], *v)?;
        if numerator.is_zero() {
            break;
        }
    }
    let mut value = numerator.scale(&problem.prefactor);
    for f in &problem.t_denominator {
        value = value.div_exact_affine(f).map_err(|e| match e {
            ExactError::NotDivisible { .. } => ResidueError::NotPolynomial,
            other => other.into(),
        })?;
    }
    Ok(ResidueValue { value })
}
