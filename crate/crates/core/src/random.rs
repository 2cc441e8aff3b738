//! Seeded generators for test instances: random symmetric classes and
//! admissible specializations of `t`. Every instance draws from its own
//! ChaCha stream, so a sweep is reproducible from `(seed, index)` alone and
//! independent of scheduling.

use std::collections::BTreeMap;

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::exact::{rat, Rational, VarId};
use crate::symfun::ClassExpr;

/// The generator for instance `index` of a run seeded with `seed`.
pub fn instance_rng(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

/// A random product of Chern classes `c_1..c_m` of total degree `degree`,
/// as factors `c_i` or `c_i^k` in decreasing index.
fn chern_monomial<R: Rng>(rng: &mut R, m: u32, degree: u32) -> Vec<ClassExpr> {
    let mut parts = Vec::new();
    let mut left = degree;
    while left > 0 {
        let part = rng.gen_range(1..=left.min(m));
        parts.push(part);
        left -= part;
    }
    parts.sort_unstable_by(|a, b| b.cmp(a));
    parts
        .chunk_by(|a, b| a == b)
        .map(|run| match run.len() {
            1 => ClassExpr::Chern(run[0]),
            k => ClassExpr::Pow(Box::new(ClassExpr::Chern(run[0])), k as u32),
        })
        .collect()
}

/// A random homogeneous class of the given degree in the Chern classes of a
/// rank-`m` bundle: a sum of one to three Chern monomials with small nonzero
/// integer coefficients.
pub fn random_class<R: Rng>(rng: &mut R, m: u32, degree: u32) -> ClassExpr {
    if m == 0 || degree == 0 {
        return ClassExpr::Literal(rat(rng.gen_range(1..=3)));
    }
    let terms = rng.gen_range(1..=3);
    let summands: Vec<ClassExpr> = (0..terms)
        .map(|_| {
            let coeff = rng.gen_range(1..=3i64);
            let negative = rng.gen_bool(0.5);
            let mut factors = chern_monomial(rng, m, degree);
            if coeff != 1 {
                factors.insert(0, ClassExpr::Literal(rat(coeff)));
            }
            let term = match factors.len() {
                1 => factors.pop().unwrap(),
                _ => ClassExpr::Product(factors),
            };
            if negative {
                ClassExpr::Neg(Box::new(term))
            } else {
                term
            }
        })
        .collect();
    if summands.len() == 1 {
        summands.into_iter().next().unwrap()
    } else {
        ClassExpr::Sum(summands)
    }
}

/// `n` distinct positive integers for `t_1..t_n`. Every tangent weight of
/// the supported spaces is `t_i - t_j`, `t_i + t_j` or a nonzero multiple of
/// `t_i`, so none vanishes.
pub fn random_t_values<R: Rng>(rng: &mut R, n: u32) -> BTreeMap<VarId, Rational> {
    let pool = (4 * n as usize).max(8);
    sample(rng, pool, n as usize)
        .into_iter()
        .zip(1..)
        .map(|(v, i)| (VarId::t(i), rat(v as i64 + 1)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symfun::{lower_class, parse_class};

    #[test]
    fn classes_are_homogeneous_and_reparse() {
        let mut rng = instance_rng(11, 0);
        for m in 1..=3 {
            for degree in 0..=6 {
                let expr = random_class(&mut rng, m, degree);
                let v = lower_class(&expr, m).unwrap();
                assert!(
                    v.poly().is_zero() || v.poly().homogeneous_degree() == Some(degree),
                    "{expr}"
                );
                assert_eq!(parse_class(&expr.to_string()).unwrap().to_string(), expr.to_string());
            }
        }
    }

    #[test]
    fn streams_are_reproducible_and_distinct() {
        let draw = |seed, index| random_class(&mut instance_rng(seed, index), 3, 5).to_string();
        assert_eq!(draw(7, 3), draw(7, 3));
        let distinct: std::collections::BTreeSet<String> = (0..20).map(|i| draw(7, i)).collect();
        assert!(distinct.len() > 1);
    }

    #[test]
    fn t_values_are_distinct_and_positive() {
        let mut rng = instance_rng(1, 1);
        for n in 1..=6 {
            let t = random_t_values(&mut rng, n);
            let values: std::collections::BTreeSet<_> = t.values().cloned().collect();
            assert_eq!(values.len(), n as usize);
            assert!(values.iter().all(|v| *v > rat(0)));
        }
    }
}
