//! Fixed-point localization: `sum_p V|_p / e_p` over the torus fixed points,
//! either symbolically in `t` or at a numeric specialization of `t`.

use std::collections::BTreeMap;

use num_traits::Zero;
use rayon::prelude::*;
use thiserror::Error;

use crate::exact::{AffineForm, ExactError, MultiPoly, Rational, RationalFn, VarId};
use crate::spaces::{
    enumerate_fixed_points, euler_factors, quotient_root_forms, restricted_root_forms, FixedPoint, SpaceDescriptor,
    SpaceError, SpaceKind,
};
use crate::symfun::LoweredClass;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LocalizationError {
    #[error("class is not symmetric in its Chern roots")]
    NonSymmetricClass,
    #[error("{space} needs a class in {expected} Chern roots, got {found}")]
    DimensionMismatch { space: String, expected: u32, found: u32 },
    #[error("operation not supported on {0}")]
    UnsupportedSpace(String),
    #[error("Euler factor {factor} vanishes at fixed point {point}")]
    DegenerateSpecialization { point: String, factor: String },
    #[error("fixed-point sum did not reduce to a polynomial")]
    NotPolynomial,
    #[error(transparent)]
    Exact(#[from] ExactError),
    #[error(transparent)]
    Space(#[from] SpaceError),
}

/// The value of an integral.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IntegralValue {
    /// Polynomial in `t`.
    Symbolic(MultiPoly),
    /// Value at a specialization of `t`.
    Specialized(Rational),
}

impl IntegralValue {
    pub fn as_poly(&self) -> MultiPoly {
        match self {
            IntegralValue::Symbolic(p) => p.clone(),
            IntegralValue::Specialized(q) => MultiPoly::constant(q.clone()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntegralResult {
    pub value: IntegralValue,
    pub space: SpaceDescriptor,
    pub class: String,
}

fn check_class(space: &SpaceDescriptor, v: &LoweredClass, expected: u32) -> Result<(), LocalizationError> {
    if v.num_roots() != expected {
        return Err(LocalizationError::DimensionMismatch {
            space: space.to_string(),
            expected,
            found: v.num_roots(),
        });
    }
    let flag = matches!(space.kind(), SpaceKind::Flag { .. });
    if !flag && !v.is_symmetric() {
        return Err(LocalizationError::NonSymmetricClass);
    }
    Ok(())
}

fn evaluate_at_roots(v: &LoweredClass, roots: &[AffineForm]) -> MultiPoly {
    let sub: BTreeMap<VarId, MultiPoly> = roots.iter().zip(1..).map(|(r, i)| (VarId::z(i), r.to_poly())).collect();
    v.poly().substitute(&sub)
}

/// Local contribution `V|_p / e_p` (times `V_Q|_p` for the two-bundle form).
fn contribution(
    space: &SpaceDescriptor,
    p: &FixedPoint,
    v: &LoweredClass,
    quotient: Option<&LoweredClass>,
) -> Result<RationalFn, LocalizationError> {
    let mut numerator = evaluate_at_roots(v, &restricted_root_forms(space, p)?);
    if let Some(q) = quotient {
        numerator = &numerator * &evaluate_at_roots(q, &quotient_root_forms(space, p)?);
    }
    Ok(RationalFn::new(numerator, euler_factors(space, p)?)?)
}

fn sum_contributions(
    space: &SpaceDescriptor,
    v: &LoweredClass,
    quotient: Option<&LoweredClass>,
) -> Result<MultiPoly, LocalizationError> {
    let points = enumerate_fixed_points(space);
    let terms: Vec<RationalFn> = points
        .par_iter()
        .map(|p| contribution(space, p, v, quotient))
        .collect::<Result<_, _>>()?;
    RationalFn::sum(&terms).into_poly().map_err(|e| match e {
        ExactError::NotPolynomial => LocalizationError::NotPolynomial,
        other => other.into(),
    })
}

/// Integral of `V(R)` over `space`, as a polynomial in `t`. The fixed-point
/// sum is brought over a common denominator and divided out exactly;
/// failure to cancel is an error.
pub fn localize(space: &SpaceDescriptor, v: &LoweredClass) -> Result<IntegralResult, LocalizationError> {
    check_class(space, v, space.num_root_variables())?;
    Ok(IntegralResult {
        value: IntegralValue::Symbolic(sum_contributions(space, v, None)?),
        space: *space,
        class: v.poly().to_string(),
    })
}

/// Integral of `V_R(R) * V_Q(Q)` over a classical Grassmannian, where `Q` is
/// the quotient bundle. `V_Q` is written in roots `z_1..z_{n-m}`.
pub fn localize_two_bundle(
    space: &SpaceDescriptor,
    v_sub: &LoweredClass,
    v_quot: &LoweredClass,
) -> Result<IntegralResult, LocalizationError> {
    let SpaceKind::Grass { m, n } = space.kind() else {
        return Err(LocalizationError::UnsupportedSpace(space.to_string()));
    };
    check_class(space, v_sub, m)?;
    check_class(space, v_quot, n - m)?;
    Ok(IntegralResult {
        value: IntegralValue::Symbolic(sum_contributions(space, v_sub, Some(v_quot))?),
        space: *space,
        class: format!("({}) * Q({})", v_sub.poly(), v_quot.poly()),
    })
}

fn specialize_impl(
    space: &SpaceDescriptor,
    v: &LoweredClass,
    quotient: Option<&LoweredClass>,
    t_values: &BTreeMap<VarId, Rational>,
) -> Result<Rational, LocalizationError> {
    let mut total = Rational::zero();
    for p in enumerate_fixed_points(space) {
        let mut den = Rational::from_integer(1.into());
        for f in euler_factors(space, &p)? {
            let value = f.eval(t_values)?;
            if value.is_zero() {
                return Err(LocalizationError::DegenerateSpecialization {
                    point: p.to_string(),
                    factor: f.to_string(),
                });
            }
            den *= value;
        }
        let mut num = evaluate_at_roots(v, &restricted_root_forms(space, &p)?).eval(t_values)?;
        if let Some(q) = quotient {
            num *= evaluate_at_roots(q, &quotient_root_forms(space, &p)?).eval(t_values)?;
        }
        total += num / den;
    }
    Ok(total)
}

/// The fixed-point sum with `t` specialized before dividing.
pub fn specialize(
    space: &SpaceDescriptor,
    v: &LoweredClass,
    t_values: &BTreeMap<VarId, Rational>,
) -> Result<Rational, LocalizationError> {
    check_class(space, v, space.num_root_variables())?;
    specialize_impl(space, v, None, t_values)
}

pub fn specialize_two_bundle(
    space: &SpaceDescriptor,
    v_sub: &LoweredClass,
    v_quot: &LoweredClass,
    t_values: &BTreeMap<VarId, Rational>,
) -> Result<Rational, LocalizationError> {
    let SpaceKind::Grass { m, n } = space.kind() else {
        return Err(LocalizationError::UnsupportedSpace(space.to_string()));
    };
    check_class(space, v_sub, m)?;
    check_class(space, v_quot, n - m)?;
    specialize_impl(space, v_sub, Some(v_quot), t_values)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;
    use crate::symfun::{lower_class, parse_class};

    fn class(text: &str, m: u32) -> LoweredClass {
        lower_class(&parse_class(text).unwrap(), m).unwrap()
    }

    fn tvals(vals: &[i64]) -> BTreeMap<VarId, Rational> {
        vals.iter().zip(1..).map(|(&v, i)| (VarId::t(i), rat(v))).collect()
    }

    fn symbolic(r: IntegralResult) -> MultiPoly {
        match r.value {
            IntegralValue::Symbolic(p) => p,
            other => panic!("expected symbolic, got {other:?}"),
        }
    }

    #[test]
    fn projective_line_first_chern_class() {
        // t1/(t2 - t1) + t2/(t1 - t2) = -1
        let g12 = SpaceDescriptor::grass(1, 2).unwrap();
        assert_eq!(
            symbolic(localize(&g12, &class("c1", 1)).unwrap()),
            MultiPoly::constant(rat(-1))
        );
    }

    #[test]
    fn unit_class_integrates_to_zero() {
        for space in ["grass:2,4", "lg:2", "og:3,even", "og:1,odd", "flag:2,3"] {
            let space: SpaceDescriptor = space.parse().unwrap();
            let one = LoweredClass::one(space.num_root_variables());
            assert!(symbolic(localize(&space, &one).unwrap()).is_zero(), "{space}");
        }
    }

    #[test]
    fn two_bundle_examples() {
        let g12 = SpaceDescriptor::grass(1, 2).unwrap();
        let one = LoweredClass::one(1);
        let w1 = class("c1", 1);
        assert!(symbolic(localize_two_bundle(&g12, &one, &one).unwrap()).is_zero());
        assert_eq!(
            symbolic(localize_two_bundle(&g12, &w1, &one).unwrap()),
            MultiPoly::constant(rat(-1))
        );
        assert_eq!(
            symbolic(localize_two_bundle(&g12, &one, &w1).unwrap()),
            MultiPoly::constant(rat(1))
        );
        let lg = SpaceDescriptor::lagrangian(1).unwrap();
        assert!(matches!(
            localize_two_bundle(&lg, &one, &one),
            Err(LocalizationError::UnsupportedSpace(_))
        ));
    }

    #[test]
    fn specialization_examples() {
        let g12 = SpaceDescriptor::grass(1, 2).unwrap();
        assert_eq!(specialize(&g12, &class("c1", 1), &tvals(&[3, 1])).unwrap(), rat(-1));

        let lg1 = SpaceDescriptor::lagrangian(1).unwrap();
        assert!(matches!(
            specialize(&lg1, &class("c1", 1), &tvals(&[0])),
            Err(LocalizationError::DegenerateSpecialization { .. })
        ));

        let g24 = SpaceDescriptor::grass(2, 4).unwrap();
        assert_eq!(
            specialize(&g24, &class("c1^4", 2), &tvals(&[1, 2, 5, 11])).unwrap(),
            rat(2)
        );
    }

    #[test]
    fn errors_for_bad_classes() {
        let g24 = SpaceDescriptor::grass(2, 4).unwrap();
        assert!(matches!(
            localize(&g24, &class("c1", 3)),
            Err(LocalizationError::DimensionMismatch {
                expected: 2,
                found: 3,
                ..
            })
        ));
        let skew = LoweredClass::new(MultiPoly::var(VarId::z(1)), 2).unwrap();
        assert_eq!(localize(&g24, &skew), Err(LocalizationError::NonSymmetricClass));
        // flag varieties take any class
        let fl = SpaceDescriptor::flag(2, 3).unwrap();
        assert!(localize(&fl, &skew).is_ok());
    }
}
