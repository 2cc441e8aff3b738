//! The supported homogeneous spaces: classical Grassmannians, the Lagrangian
//! Grassmannian, the two maximal orthogonal Grassmannians and partial flag
//! varieties. Each comes with its torus fixed points, the Chern-root
//! restrictions and tangent weights at those points, and its Weyl-group data.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use num_traits::One;
use thiserror::Error;

use crate::exact::{factorial, rat, AffineForm, MultiPoly, Rational, VarId};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpaceError {
    #[error("invalid space parameters: {0}")]
    InvalidParameters(String),
    #[error("cannot parse space {input:?}: {reason}")]
    Parse { input: String, reason: String },
    #[error("fixed point {point} does not belong to {space}")]
    ForeignFixedPoint { point: String, space: String },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SpaceKind {
    /// `m`-planes in `C^n`.
    Grass { m: u32, n: u32 },
    /// Lagrangian subspaces of `C^{2n}`.
    Lagrangian { n: u32 },
    /// Maximal isotropic subspaces of `C^{2n}`.
    OrthogonalEven { n: u32 },
    /// Maximal isotropic subspaces of `C^{2n+1}`.
    OrthogonalOdd { n: u32 },
    /// Flags `V_1 < ... < V_m` in `C^n` with `dim V_i = i`.
    Flag { m: u32, n: u32 },
}

/// A validated homogeneous space.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SpaceDescriptor {
    kind: SpaceKind,
}

impl SpaceDescriptor {
    pub fn new(kind: SpaceKind) -> Result<Self, SpaceError> {
        let bad = |msg: String| Err(SpaceError::InvalidParameters(msg));
        match kind {
            SpaceKind::Grass { m, n } if m > n => return bad(format!("grass needs m <= n, got m={m}, n={n}")),
            SpaceKind::Grass { n: 0, .. } => return bad("grass needs n >= 1".into()),
            SpaceKind::Lagrangian { n: 0 } | SpaceKind::OrthogonalEven { n: 0 } | SpaceKind::OrthogonalOdd { n: 0 } => {
                return bad("isotropic Grassmannians need n >= 1".into())
            }
            SpaceKind::Flag { m, n } if m == 0 || m > n => {
                return bad(format!("flag needs 1 <= m <= n, got m={m}, n={n}"))
            }
            _ => {}
        }
        Ok(SpaceDescriptor { kind })
    }

    pub fn grass(m: u32, n: u32) -> Result<Self, SpaceError> {
        SpaceDescriptor::new(SpaceKind::Grass { m, n })
    }

    pub fn lagrangian(n: u32) -> Result<Self, SpaceError> {
        SpaceDescriptor::new(SpaceKind::Lagrangian { n })
    }

    pub fn orthogonal_even(n: u32) -> Result<Self, SpaceError> {
        SpaceDescriptor::new(SpaceKind::OrthogonalEven { n })
    }

    pub fn orthogonal_odd(n: u32) -> Result<Self, SpaceError> {
        SpaceDescriptor::new(SpaceKind::OrthogonalOdd { n })
    }

    pub fn flag(m: u32, n: u32) -> Result<Self, SpaceError> {
        SpaceDescriptor::new(SpaceKind::Flag { m, n })
    }

    pub fn kind(&self) -> SpaceKind {
        self.kind
    }

    /// The `n` of the ambient torus `(C^*)^n`.
    pub fn torus_rank(&self) -> u32 {
        match self.kind {
            SpaceKind::Grass { n, .. }
            | SpaceKind::Flag { n, .. }
            | SpaceKind::Lagrangian { n }
            | SpaceKind::OrthogonalEven { n }
            | SpaceKind::OrthogonalOdd { n } => n,
        }
    }

    /// Rank of the tautological bundle, i.e. the number of Chern roots a
    /// class on this space is written in.
    pub fn num_root_variables(&self) -> u32 {
        match self.kind {
            SpaceKind::Grass { m, .. } | SpaceKind::Flag { m, .. } => m,
            _ => self.torus_rank(),
        }
    }

    pub fn complex_dimension(&self) -> u32 {
        match self.kind {
            SpaceKind::Grass { m, n } => m * (n - m),
            SpaceKind::Lagrangian { n } | SpaceKind::OrthogonalOdd { n } => n * (n + 1) / 2,
            SpaceKind::OrthogonalEven { n } => n * (n - 1) / 2,
            SpaceKind::Flag { m, n } => m * (m - 1) / 2 + m * (n - m),
        }
    }

    pub fn is_isotropic(&self) -> bool {
        matches!(
            self.kind,
            SpaceKind::Lagrangian { .. } | SpaceKind::OrthogonalEven { .. } | SpaceKind::OrthogonalOdd { .. }
        )
    }

    /// Sign `s` with `s * prod(table roots at p) = euler_class(p)` for every
    /// fixed point `p`. The tabulated roots `z_i - z_j` of the type-A rows are
    /// the negatives of the tangent weights `t_l - t_k`.
    pub fn orientation_sign(&self) -> i32 {
        match self.kind {
            SpaceKind::Grass { .. } | SpaceKind::Flag { .. } => {
                if self.complex_dimension().is_multiple_of(2) {
                    1
                } else {
                    -1
                }
            }
            _ => 1,
        }
    }
}

impl fmt::Display for SpaceDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            SpaceKind::Grass { m, n } => write!(f, "grass:{m},{n}"),
            SpaceKind::Lagrangian { n } => write!(f, "lg:{n}"),
            SpaceKind::OrthogonalEven { n } => write!(f, "og:{n},even"),
            SpaceKind::OrthogonalOdd { n } => write!(f, "og:{n},odd"),
            SpaceKind::Flag { m, n } => write!(f, "flag:{m},{n}"),
        }
    }
}

impl FromStr for SpaceDescriptor {
    type Err = SpaceError;

    /// Accepts `grass:m,n`, `lg:n`, `og:n,even`, `og:n,odd`, `flag:m,n`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let fail = |reason: String| SpaceError::Parse {
            input: s.to_string(),
            reason,
        };
        let (family, args) = s
            .trim()
            .split_once(':')
            .ok_or_else(|| fail("expected <family>:<parameters>".into()))?;
        let args: Vec<&str> = args.split(',').map(str::trim).collect();
        let int = |tok: &str| -> Result<u32, SpaceError> {
            tok.parse()
                .map_err(|_| fail(format!("{tok:?} is not a nonnegative integer")))
        };
        let arity = |k: usize| -> Result<(), SpaceError> {
            if args.len() == k {
                Ok(())
            } else {
                Err(fail(format!("{family} takes {k} parameter(s), got {}", args.len())))
            }
        };
        let kind = match family {
            "grass" => {
                arity(2)?;
                SpaceKind::Grass {
                    m: int(args[0])?,
                    n: int(args[1])?,
                }
            }
            "flag" => {
                arity(2)?;
                SpaceKind::Flag {
                    m: int(args[0])?,
                    n: int(args[1])?,
                }
            }
            "lg" => {
                arity(1)?;
                SpaceKind::Lagrangian { n: int(args[0])? }
            }
            "og" => {
                arity(2)?;
                let n = int(args[0])?;
                match args[1] {
                    "even" => SpaceKind::OrthogonalEven { n },
                    "odd" => SpaceKind::OrthogonalOdd { n },
                    other => return Err(fail(format!("{other:?} should be \"even\" or \"odd\""))),
                }
            }
            other => return Err(fail(format!("unknown family {other:?}"))),
        };
        SpaceDescriptor::new(kind)
    }
}

/// A torus fixed point.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FixedPoint {
    /// Coordinate subspace spanned by the listed basis vectors (increasing).
    Subset(Vec<u32>),
    /// `+1` at `i` means the `i`-th coordinate enters with `+t_i`.
    Signs(Vec<i8>),
    /// Coordinate flag: `V_i` is spanned by the first `i` listed basis vectors.
    Injection(Vec<u32>),
}

impl fmt::Display for FixedPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FixedPoint::Subset(s) => write!(f, "{{{}}}", s.iter().join(",")),
            FixedPoint::Signs(e) => write!(f, "({})", e.iter().map(|&s| if s > 0 { "+" } else { "-" }).join(",")),
            FixedPoint::Injection(v) => write!(f, "({})", v.iter().join(",")),
        }
    }
}

/// All fixed points in lexicographic order.
pub fn enumerate_fixed_points(space: &SpaceDescriptor) -> Vec<FixedPoint> {
    match space.kind() {
        SpaceKind::Grass { m, n } => (1..=n).combinations(m as usize).map(FixedPoint::Subset).collect(),
        SpaceKind::Flag { m, n } => (1..=n).permutations(m as usize).map(FixedPoint::Injection).collect(),
        _ => (0..space.torus_rank())
            .map(|_| [-1i8, 1])
            .multi_cartesian_product()
            .map(FixedPoint::Signs)
            .collect(),
    }
}

fn t(i: u32) -> AffineForm {
    AffineForm::var(VarId::t(i))
}

fn check_point(space: &SpaceDescriptor, p: &FixedPoint) -> Result<(), SpaceError> {
    let n = space.torus_rank();
    let in_range = |v: &[u32]| v.iter().all(|&k| (1..=n).contains(&k));
    let ok = match (space.kind(), p) {
        (SpaceKind::Grass { m, .. }, FixedPoint::Subset(s)) => {
            s.len() == m as usize && in_range(s) && s.windows(2).all(|w| w[0] < w[1])
        }
        (SpaceKind::Flag { m, .. }, FixedPoint::Injection(f)) => {
            f.len() == m as usize && in_range(f) && f.iter().all_unique()
        }
        (_, FixedPoint::Signs(e)) if space.is_isotropic() => {
            e.len() == n as usize && e.iter().all(|&s| s == 1 || s == -1)
        }
        _ => false,
    };
    if ok {
        Ok(())
    } else {
        Err(SpaceError::ForeignFixedPoint {
            point: p.to_string(),
            space: space.to_string(),
        })
    }
}

/// The Chern roots of the tautological bundle restricted to `p`, as affine
/// forms in `t`.
pub fn restricted_root_forms(space: &SpaceDescriptor, p: &FixedPoint) -> Result<Vec<AffineForm>, SpaceError> {
    check_point(space, p)?;
    Ok(match p {
        FixedPoint::Subset(s) | FixedPoint::Injection(s) => s.iter().map(|&k| t(k)).collect(),
        FixedPoint::Signs(e) => e
            .iter()
            .zip(1..)
            .map(|(&s, i)| if s > 0 { t(i) } else { t(i).neg() })
            .collect(),
    })
}

pub fn restricted_roots(space: &SpaceDescriptor, p: &FixedPoint) -> Result<Vec<MultiPoly>, SpaceError> {
    Ok(restricted_root_forms(space, p)?
        .iter()
        .map(AffineForm::to_poly)
        .collect())
}

/// Indices `l` not used by a subset or injection, increasing.
fn unused_indices(n: u32, used: &[u32]) -> Vec<u32> {
    (1..=n).filter(|l| !used.contains(l)).collect()
}

/// Roots of the quotient bundle at a Grassmannian fixed point: `t_l` for
/// `l` outside the subset.
pub fn quotient_root_forms(space: &SpaceDescriptor, p: &FixedPoint) -> Result<Vec<AffineForm>, SpaceError> {
    check_point(space, p)?;
    match p {
        FixedPoint::Subset(s) => Ok(unused_indices(space.torus_rank(), s).into_iter().map(t).collect()),
        _ => Err(SpaceError::ForeignFixedPoint {
            point: p.to_string(),
            space: space.to_string(),
        }),
    }
}

/// Tangent weights at `p`, whose product is the equivariant Euler class.
pub fn euler_factors(space: &SpaceDescriptor, p: &FixedPoint) -> Result<Vec<AffineForm>, SpaceError> {
    let x = restricted_root_forms(space, p)?;
    let n = space.torus_rank();
    let pair_sums = || x.iter().tuple_combinations().map(|(a, b)| a.add(b)).collect::<Vec<_>>();
    Ok(match (space.kind(), p) {
        (SpaceKind::Grass { .. }, FixedPoint::Subset(s)) => {
            let rest = unused_indices(n, s);
            s.iter()
                .cartesian_product(&rest)
                .map(|(&k, &l)| t(l).add(&t(k).neg()))
                .collect()
        }
        (SpaceKind::Flag { .. }, FixedPoint::Injection(f)) => {
            let rest = unused_indices(n, f);
            let mut w: Vec<AffineForm> = x.iter().tuple_combinations().map(|(a, b)| b.add(&a.neg())).collect();
            for xi in &x {
                w.extend(rest.iter().map(|&l| t(l).add(&xi.neg())));
            }
            w
        }
        (SpaceKind::Lagrangian { .. }, _) => {
            let mut w = pair_sums();
            w.extend(x.iter().map(|xi| xi.scale(&rat(2))));
            w
        }
        (SpaceKind::OrthogonalEven { .. }, _) => pair_sums(),
        (SpaceKind::OrthogonalOdd { .. }, _) => {
            let mut w = pair_sums();
            w.extend(x.iter().cloned());
            w
        }
        _ => unreachable!("checked by restricted_root_forms"),
    })
}

pub fn euler_class(space: &SpaceDescriptor, p: &FixedPoint) -> Result<MultiPoly, SpaceError> {
    Ok(euler_factors(space, p)?
        .iter()
        .fold(MultiPoly::one(), |acc, f| &acc * &f.to_poly()))
}

/// Extends the restricted roots at `p` to values for all of `z_1..z_n`: for
/// type-A spaces the unused `t_l` follow in increasing order.
pub fn completed_roots(space: &SpaceDescriptor, p: &FixedPoint) -> Result<Vec<AffineForm>, SpaceError> {
    let mut x = restricted_root_forms(space, p)?;
    if let FixedPoint::Subset(s) | FixedPoint::Injection(s) = p {
        x.extend(unused_indices(space.torus_rank(), s).into_iter().map(t));
    }
    Ok(x)
}

/// Weyl-group data of `G/P`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeylData {
    /// `X_i`, the orbit of `z_i` under the Weyl group, for `i = 1..n`.
    pub character_sets: Vec<Vec<AffineForm>>,
    /// The positive roots not in the parabolic, as forms in `z`.
    pub positive_roots: Vec<AffineForm>,
    /// `|W_P|`.
    pub parabolic_order: Rational,
}

pub fn weyl_data(space: &SpaceDescriptor) -> WeylData {
    let n = space.torus_rank();
    let z = |i: u32| AffineForm::var(VarId::z(i));
    let diff = |i: u32, j: u32| AffineForm::difference(VarId::z(i), VarId::z(j));
    let sum = |i: u32, j: u32| AffineForm::sum(VarId::z(i), VarId::z(j));
    let type_a_orbit: Vec<AffineForm> = (1..=n).map(z).collect();
    let signed_orbit: Vec<AffineForm> = (1..=n).map(z).chain((1..=n).map(|i| z(i).neg())).collect();
    let pairs = || (1..=n).tuple_combinations::<(u32, u32)>();

    let (orbit, positive_roots, parabolic_order) = match space.kind() {
        SpaceKind::Grass { m, n } => (
            type_a_orbit,
            (1..=m).cartesian_product(m + 1..=n).map(|(i, j)| diff(i, j)).collect(),
            factorial(m) * factorial(n - m),
        ),
        SpaceKind::Flag { m, n } => {
            let mut roots: Vec<AffineForm> = (1..=m).tuple_combinations().map(|(i, j)| diff(i, j)).collect();
            roots.extend((1..=m).cartesian_product(m + 1..=n).map(|(i, j)| diff(i, j)));
            (type_a_orbit, roots, factorial(n - m))
        }
        SpaceKind::Lagrangian { n } => {
            let mut roots: Vec<AffineForm> = pairs().map(|(i, j)| sum(i, j)).collect();
            roots.extend((1..=n).map(|i| z(i).scale(&rat(2))));
            (signed_orbit, roots, factorial(n))
        }
        SpaceKind::OrthogonalEven { n } => (signed_orbit, pairs().map(|(i, j)| sum(i, j)).collect(), factorial(n)),
        SpaceKind::OrthogonalOdd { n } => {
            let mut roots: Vec<AffineForm> = pairs().map(|(i, j)| sum(i, j)).collect();
            roots.extend((1..=n).map(z));
            (signed_orbit, roots, factorial(n))
        }
    };
    WeylData {
        character_sets: vec![orbit; n as usize],
        positive_roots,
        parabolic_order,
    }
}

/// Substitution `z_i -> completed root i` as polynomial images.
pub fn root_substitution(space: &SpaceDescriptor, p: &FixedPoint) -> Result<BTreeMap<VarId, MultiPoly>, SpaceError> {
    Ok(completed_roots(space, p)?
        .iter()
        .zip(1..)
        .map(|(f, i)| (VarId::z(i), f.to_poly()))
        .collect())
}

pub fn orientation(space: &SpaceDescriptor) -> Rational {
    if space.orientation_sign() > 0 {
        Rational::one()
    } else {
        -Rational::one()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tp(i: u32) -> MultiPoly {
        MultiPoly::var(VarId::t(i))
    }

    #[test]
    fn parse_and_display_descriptors() {
        for s in ["grass:2,4", "lg:3", "og:2,even", "og:3,odd", "flag:2,3"] {
            let d: SpaceDescriptor = s.parse().unwrap();
            assert_eq!(d.to_string(), s);
        }
        assert!("grass:5,4".parse::<SpaceDescriptor>().is_err());
        assert!("og:2,middle".parse::<SpaceDescriptor>().is_err());
        assert!("flag:0,3".parse::<SpaceDescriptor>().is_err());
        assert!("lg:x".parse::<SpaceDescriptor>().is_err());
        assert!("proj:3".parse::<SpaceDescriptor>().is_err());
    }

    #[test]
    fn dimensions() {
        assert_eq!(SpaceDescriptor::grass(2, 5).unwrap().complex_dimension(), 6);
        assert_eq!(SpaceDescriptor::lagrangian(3).unwrap().complex_dimension(), 6);
        assert_eq!(SpaceDescriptor::orthogonal_even(3).unwrap().complex_dimension(), 3);
        assert_eq!(SpaceDescriptor::orthogonal_odd(2).unwrap().complex_dimension(), 3);
        assert_eq!(SpaceDescriptor::flag(2, 4).unwrap().complex_dimension(), 5);
        assert_eq!(SpaceDescriptor::flag(3, 3).unwrap().complex_dimension(), 3);
    }

    #[test]
    fn fixed_point_examples() {
        let g24 = SpaceDescriptor::grass(2, 4).unwrap();
        assert_eq!(enumerate_fixed_points(&g24).len(), 6);
        assert_eq!(
            enumerate_fixed_points(&SpaceDescriptor::lagrangian(2).unwrap()).len(),
            4
        );
        assert_eq!(
            enumerate_fixed_points(&SpaceDescriptor::grass(4, 4).unwrap()),
            vec![FixedPoint::Subset(vec![1, 2, 3, 4])]
        );
        let pts = enumerate_fixed_points(&g24);
        assert!(pts.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn restricted_root_examples() {
        let g24 = SpaceDescriptor::grass(2, 4).unwrap();
        assert_eq!(
            restricted_roots(&g24, &FixedPoint::Subset(vec![1, 3])).unwrap(),
            vec![tp(1), tp(3)]
        );
        let lg2 = SpaceDescriptor::lagrangian(2).unwrap();
        assert_eq!(
            restricted_roots(&lg2, &FixedPoint::Signs(vec![1, -1])).unwrap(),
            vec![tp(1), -tp(2)]
        );
        let fl23 = SpaceDescriptor::flag(2, 3).unwrap();
        assert_eq!(
            restricted_roots(&fl23, &FixedPoint::Injection(vec![2, 1])).unwrap(),
            vec![tp(2), tp(1)]
        );
        assert!(restricted_roots(&g24, &FixedPoint::Subset(vec![3, 1])).is_err());
        assert!(restricted_roots(&g24, &FixedPoint::Signs(vec![1, 1])).is_err());
    }

    #[test]
    fn euler_class_examples() {
        for n in 1..=4u32 {
            let proj = SpaceDescriptor::grass(1, n + 1).unwrap();
            for i in 1..=n + 1 {
                let expected = MultiPoly::product(
                    &(1..=n + 1)
                        .filter(|&l| l != i)
                        .map(|l| tp(l) - tp(i))
                        .collect::<Vec<_>>(),
                );
                assert_eq!(euler_class(&proj, &FixedPoint::Subset(vec![i])).unwrap(), expected);
            }
        }
        let lg1 = SpaceDescriptor::lagrangian(1).unwrap();
        assert_eq!(
            euler_class(&lg1, &FixedPoint::Signs(vec![1])).unwrap(),
            tp(1).scale(&rat(2))
        );
        let og2 = SpaceDescriptor::orthogonal_even(2).unwrap();
        assert_eq!(
            euler_class(&og2, &FixedPoint::Signs(vec![1, 1])).unwrap(),
            tp(1) + tp(2)
        );
    }

    #[test]
    fn weyl_data_examples() {
        let g = weyl_data(&SpaceDescriptor::grass(2, 4).unwrap());
        assert_eq!(g.character_sets.len(), 4);
        assert!(g.character_sets.iter().all(|x| x.len() == 4));
        let expected: Vec<AffineForm> = [(1, 3), (1, 4), (2, 3), (2, 4)]
            .iter()
            .map(|&(i, j)| AffineForm::difference(VarId::z(i), VarId::z(j)))
            .collect();
        assert_eq!(g.positive_roots, expected);
        assert_eq!(g.parabolic_order, rat(4));

        let lg = weyl_data(&SpaceDescriptor::lagrangian(2).unwrap());
        assert_eq!(lg.character_sets[0].len(), 4);
        assert_eq!(lg.positive_roots.len(), 3);
        assert!(lg.positive_roots.contains(&AffineForm::sum(VarId::z(1), VarId::z(2))));
        assert!(lg.positive_roots.contains(&AffineForm::var(VarId::z(1)).scale(&rat(2))));
        assert_eq!(lg.parabolic_order, rat(2));

        let og = weyl_data(&SpaceDescriptor::orthogonal_odd(2).unwrap());
        assert_eq!(og.positive_roots.len(), 3);
        assert!(og.positive_roots.contains(&AffineForm::var(VarId::z(2))));
        assert_eq!(og.parabolic_order, rat(2));
    }

    fn all_small_spaces() -> Vec<SpaceDescriptor> {
        let mut out = Vec::new();
        for n in 1..=5 {
            for m in 0..=n {
                out.push(SpaceDescriptor::grass(m, n).unwrap());
                if m >= 1 && n <= 4 {
                    out.push(SpaceDescriptor::flag(m, n).unwrap());
                }
            }
            if n <= 3 {
                out.push(SpaceDescriptor::lagrangian(n).unwrap());
                out.push(SpaceDescriptor::orthogonal_even(n).unwrap());
                out.push(SpaceDescriptor::orthogonal_odd(n).unwrap());
            }
        }
        out
    }

    #[test]
    fn euler_degree_and_root_count_match_dimension() {
        for space in all_small_spaces() {
            let dim = space.complex_dimension();
            assert_eq!(weyl_data(&space).positive_roots.len() as u32, dim, "{space}");
            for p in enumerate_fixed_points(&space) {
                let e = euler_class(&space, &p).unwrap();
                assert_eq!(e.homogeneous_degree(), Some(dim), "{space} at {p}");
            }
        }
    }

    #[test]
    fn euler_class_is_signed_product_of_table_roots() {
        for space in all_small_spaces() {
            let roots = weyl_data(&space).positive_roots;
            let sign = orientation(&space);
            for p in enumerate_fixed_points(&space) {
                let sub = root_substitution(&space, &p).unwrap();
                let product =
                    MultiPoly::product(&roots.iter().map(|r| r.to_poly().substitute(&sub)).collect::<Vec<_>>());
                assert_eq!(product.scale(&sign), euler_class(&space, &p).unwrap(), "{space} at {p}");
            }
        }
    }
}
