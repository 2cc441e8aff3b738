use std::collections::BTreeMap;

use num_traits::{One, Zero};

use super::{AffineForm, ExactError, MultiPoly, Rational, VarId};

/// A polynomial divided by a product of affine forms. The denominator is
/// never expanded.
#[derive(Clone, Debug)]
pub struct RationalFn {
    numerator: MultiPoly,
    denominator: Vec<AffineForm>,
}

/// Denominator split as `scalar * product of monic forms`, monic forms
/// counted with multiplicity.
struct FactoredDenominator {
    scalar: Rational,
    forms: BTreeMap<AffineForm, u32>,
}

fn factor_denominator(factors: &[AffineForm]) -> FactoredDenominator {
    let mut scalar = Rational::one();
    let mut forms = BTreeMap::new();
    for f in factors {
        let (s, monic) = f.normalize();
        scalar *= s;
        if let Some(m) = monic {
            *forms.entry(m).or_insert(0) += 1;
        }
    }
    FactoredDenominator { scalar, forms }
}

impl RationalFn {
    pub fn new(numerator: MultiPoly, denominator: Vec<AffineForm>) -> Result<Self, ExactError> {
        if denominator.iter().any(AffineForm::is_zero) {
            return Err(ExactError::DivisionByZero);
        }
        Ok(RationalFn { numerator, denominator })
    }

    pub fn from_poly(p: MultiPoly) -> Self {
        RationalFn {
            numerator: p,
            denominator: Vec::new(),
        }
    }

    pub fn numerator(&self) -> &MultiPoly {
        &self.numerator
    }

    pub fn denominator(&self) -> &[AffineForm] {
        &self.denominator
    }

    pub fn denominator_poly(&self) -> MultiPoly {
        self.denominator
            .iter()
            .fold(MultiPoly::one(), |acc, f| &acc * &f.to_poly())
    }

    pub fn mul(&self, other: &RationalFn) -> RationalFn {
        let mut denominator = self.denominator.clone();
        denominator.extend(other.denominator.iter().cloned());
        RationalFn {
            numerator: &self.numerator * &other.numerator,
            denominator,
        }
    }

    pub fn neg(&self) -> RationalFn {
        RationalFn {
            numerator: -&self.numerator,
            denominator: self.denominator.clone(),
        }
    }

    /// Sums rational functions over the least common multiple of their
    /// factored denominators (forms compared up to a scalar).
    pub fn sum<'a, I: IntoIterator<Item = &'a RationalFn>>(items: I) -> RationalFn {
        let items: Vec<&RationalFn> = items.into_iter().collect();
        let factored: Vec<FactoredDenominator> = items.iter().map(|r| factor_denominator(&r.denominator)).collect();
        let mut lcm: BTreeMap<AffineForm, u32> = BTreeMap::new();
        for fd in &factored {
            for (form, &k) in &fd.forms {
                let slot = lcm.entry(form.clone()).or_insert(0);
                *slot = (*slot).max(k);
            }
        }
        let mut numerator = MultiPoly::zero();
        for (item, fd) in items.iter().zip(&factored) {
            let mut term = item.numerator.scale(&fd.scalar.recip());
            for (form, &k) in &lcm {
                let missing = k - fd.forms.get(form).copied().unwrap_or(0);
                for _ in 0..missing {
                    term = &term * &form.to_poly();
                }
            }
            numerator += &term;
        }
        let denominator = lcm
            .into_iter()
            .flat_map(|(f, k)| std::iter::repeat_n(f, k as usize))
            .collect();
        RationalFn { numerator, denominator }
    }

    pub fn add(&self, other: &RationalFn) -> RationalFn {
        RationalFn::sum([self, other])
    }

    /// Divides the numerator by every denominator factor exactly. Fails with
    /// `NotPolynomial` if some factor does not divide.
    pub fn into_poly(self) -> Result<MultiPoly, ExactError> {
        let mut p = self.numerator;
        for f in &self.denominator {
            p = p.div_exact_affine(f).map_err(|e| match e {
                ExactError::NotDivisible { .. } => ExactError::NotPolynomial,
                other => other,
            })?;
        }
        Ok(p)
    }

    /// Equality by cross-multiplication.
    pub fn equals(&self, other: &RationalFn) -> bool {
        &self.numerator * &other.denominator_poly() == &other.numerator * &self.denominator_poly()
    }

    pub fn eval(&self, point: &BTreeMap<VarId, Rational>) -> Result<Rational, ExactError> {
        let mut den = Rational::one();
        for f in &self.denominator {
            den *= f.eval(point)?;
        }
        if den.is_zero() {
            return Err(ExactError::DivisionByZero);
        }
        Ok(self.numerator.eval(point)? / den)
    }
}
