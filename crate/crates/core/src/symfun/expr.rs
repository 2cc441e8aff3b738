use std::fmt;

use num_traits::Signed;

use super::{complete, elementary, power, roots, schur, Partition, SymfunError};
use crate::exact::{MultiPoly, Rational};

/// Syntax tree of a characteristic-class expression.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ClassExpr {
    Literal(Rational),
    /// `c_i` of the bundle, i.e. `e_i` of its Chern roots.
    Chern(u32),
    Schur(Partition),
    Elementary(u32),
    Complete(u32),
    PowerSum(u32),
    Neg(Box<ClassExpr>),
    Sum(Vec<ClassExpr>),
    Product(Vec<ClassExpr>),
    Pow(Box<ClassExpr>, u32),
}

/// A class written as a polynomial in the Chern roots `z_1..z_m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LoweredClass {
    poly: MultiPoly,
    num_roots: u32,
}

impl LoweredClass {
    /// Wraps a polynomial in `z_1..z_m`. Symmetry is not checked here (flag
    /// varieties accept arbitrary classes); see [`LoweredClass::is_symmetric`].
    pub fn new(poly: MultiPoly, num_roots: u32) -> Result<Self, SymfunError> {
        if let Some(&var) = poly.variables().iter().find(|v| !v.is_z() || v.index() > num_roots) {
            return Err(SymfunError::ForeignVariable { var, roots: num_roots });
        }
        Ok(LoweredClass { poly, num_roots })
    }

    pub fn one(num_roots: u32) -> Self {
        LoweredClass {
            poly: MultiPoly::one(),
            num_roots,
        }
    }

    pub fn poly(&self) -> &MultiPoly {
        &self.poly
    }

    pub fn num_roots(&self) -> u32 {
        self.num_roots
    }

    pub fn is_symmetric(&self) -> bool {
        self.poly.is_symmetric(&roots(self.num_roots))
    }
}

/// Lowers an expression to a symmetric polynomial in `m` Chern roots.
pub fn lower_class(expr: &ClassExpr, m: u32) -> Result<LoweredClass, SymfunError> {
    let poly = lower(expr, m)?;
    Ok(LoweredClass { poly, num_roots: m })
}

fn lower(expr: &ClassExpr, m: u32) -> Result<MultiPoly, SymfunError> {
    Ok(match expr {
        ClassExpr::Literal(q) => MultiPoly::constant(q.clone()),
        ClassExpr::Chern(i) => {
            if *i > m {
                return Err(SymfunError::ChernIndexOutOfRange { index: *i, roots: m });
            }
            elementary(*i, m)
        }
        ClassExpr::Schur(lambda) => schur(lambda, m),
        ClassExpr::Elementary(k) => elementary(*k, m),
        ClassExpr::Complete(k) => complete(*k, m),
        ClassExpr::PowerSum(k) => power(*k, m),
        ClassExpr::Neg(inner) => -lower(inner, m)?,
        ClassExpr::Sum(items) => {
            let mut acc = MultiPoly::zero();
            for item in items {
                acc += &lower(item, m)?;
            }
            acc
        }
        ClassExpr::Product(items) => {
            let mut acc = MultiPoly::one();
            for item in items {
                acc = &acc * &lower(item, m)?;
            }
            acc
        }
        ClassExpr::Pow(base, k) => lower(base, m)?.pow(*k),
    })
}

// Printing precedence levels, loosest first.
const SUM: u8 = 0;
const TERM: u8 = 1;
const FACTOR: u8 = 2;
const ATOM: u8 = 3;

impl ClassExpr {
    fn level(&self) -> u8 {
        match self {
            ClassExpr::Sum(_) => SUM,
            ClassExpr::Product(_) => TERM,
            ClassExpr::Neg(_) | ClassExpr::Pow(..) => FACTOR,
            ClassExpr::Literal(q) if q.is_negative() => FACTOR,
            _ => ATOM,
        }
    }

    fn write_at(&self, f: &mut fmt::Formatter<'_>, min: u8) -> fmt::Result {
        if self.level() < min {
            f.write_str("(")?;
            self.write_at(f, SUM)?;
            return f.write_str(")");
        }
        match self {
            ClassExpr::Literal(q) => write!(f, "{q}"),
            ClassExpr::Chern(i) => write!(f, "c{i}"),
            ClassExpr::Schur(lambda) => write!(f, "s{lambda}"),
            ClassExpr::Elementary(k) => write!(f, "e{k}"),
            ClassExpr::Complete(k) => write!(f, "h{k}"),
            ClassExpr::PowerSum(k) => write!(f, "p{k}"),
            ClassExpr::Neg(inner) => {
                f.write_str("-")?;
                inner.write_at(f, FACTOR)
            }
            ClassExpr::Sum(items) => {
                for (i, item) in items.iter().enumerate() {
                    match (i, item) {
                        (0, _) => item.write_at(f, TERM)?,
                        (_, ClassExpr::Neg(inner)) => {
                            f.write_str(" - ")?;
                            inner.write_at(f, TERM)?;
                        }
                        _ => {
                            f.write_str(" + ")?;
                            item.write_at(f, TERM)?;
                        }
                    }
                }
                Ok(())
            }
            ClassExpr::Product(items) => {
                for (i, item) in items.iter().enumerate() {
                    if i > 0 {
                        f.write_str("*")?;
                    }
                    item.write_at(f, FACTOR)?;
                }
                Ok(())
            }
            ClassExpr::Pow(base, k) => {
                base.write_at(f, ATOM)?;
                write!(f, "^{k}")
            }
        }
    }
}

impl fmt::Display for ClassExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write_at(f, SUM)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{rat, ratio, VarId};

    fn z(i: u32) -> MultiPoly {
        MultiPoly::var(VarId::z(i))
    }

    #[test]
    fn lowering_examples() {
        let c1_4 = ClassExpr::Pow(Box::new(ClassExpr::Chern(1)), 4);
        assert_eq!(lower_class(&c1_4, 2).unwrap().poly(), &(z(1) + z(2)).pow(4));

        let s22 = ClassExpr::Schur(Partition::new(vec![2, 2]).unwrap());
        assert_eq!(lower_class(&s22, 2).unwrap().poly(), &(z(1).pow(2) * z(2).pow(2)));

        let one = ClassExpr::Literal(rat(1));
        assert_eq!(lower_class(&one, 2).unwrap().poly(), &MultiPoly::one());
    }

    #[test]
    fn chern_index_out_of_range() {
        assert_eq!(
            lower_class(&ClassExpr::Chern(3), 2),
            Err(SymfunError::ChernIndexOutOfRange { index: 3, roots: 2 })
        );
        // e_k beyond the rank is simply zero
        assert!(lower_class(&ClassExpr::Elementary(3), 2).unwrap().poly().is_zero());
    }

    #[test]
    fn printer_parenthesizes_by_precedence() {
        let e = ClassExpr::Sum(vec![
            ClassExpr::Schur(Partition::new(vec![2, 2]).unwrap()),
            ClassExpr::Product(vec![ClassExpr::Literal(ratio(3, 2)), ClassExpr::Elementary(2)]),
            ClassExpr::Neg(Box::new(ClassExpr::Pow(
                Box::new(ClassExpr::Sum(vec![ClassExpr::Chern(1), ClassExpr::Chern(2)])),
                2,
            ))),
        ]);
        assert_eq!(e.to_string(), "s[2,2] + 3/2*e2 - (c1 + c2)^2");
        let neg_base = ClassExpr::Pow(Box::new(ClassExpr::Literal(rat(-3))), 2);
        assert_eq!(neg_base.to_string(), "(-3)^2");
    }

    #[test]
    fn foreign_variables_rejected() {
        assert!(LoweredClass::new(z(3), 2).is_err());
        assert!(LoweredClass::new(MultiPoly::var(VarId::t(1)), 2).is_err());
        assert!(LoweredClass::new(z(1) - z(2), 2).is_ok());
    }
}
