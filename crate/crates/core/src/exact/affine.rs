use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use super::{ExactError, Monomial, MultiPoly, Rational, VarId};

/// `constant + sum_v coeff_v * v`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AffineForm {
    constant: Rational,
    linear: BTreeMap<VarId, Rational>,
}

impl AffineForm {
    pub fn new<I: IntoIterator<Item = (VarId, Rational)>>(constant: Rational, linear: I) -> Self {
        let mut map: BTreeMap<VarId, Rational> = BTreeMap::new();
        for (v, c) in linear {
            *map.entry(v).or_insert_with(Rational::zero) += c;
        }
        map.retain(|_, c| !c.is_zero());
        AffineForm { constant, linear: map }
    }

    pub fn constant_form(c: Rational) -> Self {
        AffineForm::new(c, [])
    }

    pub fn var(v: VarId) -> Self {
        AffineForm::new(Rational::zero(), [(v, Rational::one())])
    }

    /// `a - b` for two variables.
    pub fn difference(a: VarId, b: VarId) -> Self {
        AffineForm::new(Rational::zero(), [(a, Rational::one()), (b, -Rational::one())])
    }

    /// `a + b` for two variables.
    pub fn sum(a: VarId, b: VarId) -> Self {
        AffineForm::new(Rational::zero(), [(a, Rational::one()), (b, Rational::one())])
    }

    /// Converts a polynomial of total degree at most one.
    pub fn from_poly(p: &MultiPoly) -> Option<Self> {
        let mut constant = Rational::zero();
        let mut linear = Vec::new();
        for (m, c) in p.terms() {
            match m.factors() {
                [] => constant = c.clone(),
                [(v, 1)] => linear.push((*v, c.clone())),
                _ => return None,
            }
        }
        Some(AffineForm::new(constant, linear))
    }

    pub fn constant(&self) -> &Rational {
        &self.constant
    }

    pub fn linear(&self) -> &BTreeMap<VarId, Rational> {
        &self.linear
    }

    pub fn coefficient(&self, v: VarId) -> Rational {
        self.linear.get(&v).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.constant.is_zero() && self.linear.is_empty()
    }

    /// The smallest variable with a nonzero coefficient, and that coefficient.
    pub fn leading_term(&self) -> Option<(VarId, &Rational)> {
        self.linear.iter().next().map(|(v, c)| (*v, c))
    }

    pub fn z_variables(&self) -> Vec<VarId> {
        self.linear.keys().copied().filter(|v| v.is_z()).collect()
    }

    /// Drops the `v` term.
    pub fn without(&self, v: VarId) -> AffineForm {
        let mut out = self.clone();
        out.linear.remove(&v);
        out
    }

    pub fn scale(&self, c: &Rational) -> AffineForm {
        AffineForm::new(&self.constant * c, self.linear.iter().map(|(v, a)| (*v, a * c)))
    }

    pub fn neg(&self) -> AffineForm {
        self.scale(&-Rational::one())
    }

    pub fn add(&self, other: &AffineForm) -> AffineForm {
        AffineForm::new(
            &self.constant + &other.constant,
            self.linear
                .iter()
                .chain(other.linear.iter())
                .map(|(v, c)| (*v, c.clone())),
        )
    }

    /// Splits `self = scalar * monic`, where `monic` has leading coefficient
    /// one. A constant form gives `(constant, None)`.
    pub fn normalize(&self) -> (Rational, Option<AffineForm>) {
        match self.leading_term() {
            None => (self.constant.clone(), None),
            Some((_, lead)) => {
                let lead = lead.clone();
                (lead.clone(), Some(self.scale(&lead.recip())))
            }
        }
    }

    pub fn to_poly(&self) -> MultiPoly {
        let mut p = MultiPoly::constant(self.constant.clone());
        for (v, c) in &self.linear {
            p.add_term(Monomial::var(*v), c.clone());
        }
        p
    }

    pub fn eval(&self, point: &BTreeMap<VarId, Rational>) -> Result<Rational, ExactError> {
        let mut acc = self.constant.clone();
        for (v, c) in &self.linear {
            acc += c * point.get(v).ok_or(ExactError::MissingVariable(*v))?;
        }
        Ok(acc)
    }

    /// Substitutes affine images for variables.
    pub fn substitute(&self, images: &BTreeMap<VarId, AffineForm>) -> AffineForm {
        let mut out = AffineForm::constant_form(self.constant.clone());
        for (v, c) in &self.linear {
            let term = match images.get(v) {
                Some(img) => img.scale(c),
                None => AffineForm::new(Rational::zero(), [(*v, c.clone())]),
            };
            out = out.add(&term);
        }
        out
    }

    /// Substitutes values for some variables.
    pub fn specialize(&self, values: &BTreeMap<VarId, Rational>) -> AffineForm {
        let mut constant = self.constant.clone();
        let mut linear = Vec::new();
        for (v, c) in &self.linear {
            match values.get(v) {
                Some(x) => constant += c * x,
                None => linear.push((*v, c.clone())),
            }
        }
        AffineForm::new(constant, linear)
    }
}

impl fmt::Display for AffineForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_poly())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    #[test]
    fn normalize_splits_scalar() {
        let f = AffineForm::new(rat(0), [(VarId::t(1), rat(-2)), (VarId::t(2), rat(-2))]);
        let (s, monic) = f.normalize();
        assert_eq!(s, rat(-2));
        assert_eq!(monic.unwrap(), AffineForm::sum(VarId::t(1), VarId::t(2)));
        assert_eq!(AffineForm::constant_form(rat(3)).normalize(), (rat(3), None));
    }

    #[test]
    fn substitute_and_eval() {
        let f = AffineForm::difference(VarId::z(1), VarId::t(2));
        let images: BTreeMap<_, _> = [(VarId::z(1), AffineForm::var(VarId::t(1)).neg())].into();
        let g = f.substitute(&images);
        assert_eq!(
            g.to_poly(),
            -(MultiPoly::var(VarId::t(1)) + MultiPoly::var(VarId::t(2)))
        );
        let pt: BTreeMap<_, _> = [(VarId::t(1), rat(2)), (VarId::t(2), rat(5))].into();
        assert_eq!(g.eval(&pt).unwrap(), rat(-7));
    }
}
