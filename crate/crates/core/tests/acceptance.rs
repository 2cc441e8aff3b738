//! Acceptance checks. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any fails.

use std::collections::BTreeMap;
use std::process::Command;
use std::time::{Duration, Instant};

use itertools::Itertools;
use num_bigint::BigInt;
use num_traits::One;
use rand::Rng;

use grassint::cli::{cmd_verify, Family, VerifyArgs};
use grassint::exact::{rat, AffineForm, MultiPoly, Rational, RationalFn, VarId};
use grassint::localization::{localize, specialize};
use grassint::random::{instance_rng, random_class, random_t_values};
use grassint::residues::{
    build_general_formula, build_lg_first_form, build_residue_problem, iterated_residue, residue_at_infinity_step,
};
use grassint::spaces::{enumerate_fixed_points, SpaceDescriptor};
use grassint::symfun::{lower_class, parse_class, LoweredClass};

type Check = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn class(text: &str, m: u32) -> LoweredClass {
    lower_class(&parse_class(text).unwrap(), m).unwrap()
}

/// The value of each method, symbolic in `t`, with its wall time.
fn three_methods(space: &SpaceDescriptor, v: &LoweredClass) -> Vec<(&'static str, MultiPoly, Duration)> {
    let timed = |f: &dyn Fn() -> MultiPoly| {
        let start = Instant::now();
        let value = f();
        (value, start.elapsed())
    };
    let (a, ta) = timed(&|| localize(space, v).unwrap().value.as_poly());
    let (b, tb) = timed(&|| {
        iterated_residue(&build_residue_problem(space, v).unwrap())
            .unwrap()
            .value
    });
    let (c, tc) = timed(&|| {
        iterated_residue(&build_general_formula(space, v).unwrap())
            .unwrap()
            .value
    });
    vec![("localization", a, ta), ("residue", b, tb), ("general", c, tc)]
}

/// `sum_k f(t_k) / prod_{l != k} (t_l - t_k)` over a subset-indexed fixed
/// point set, evaluated directly in rationals.
fn grass_fixed_point_sum(m: usize, t: &[Rational], v: impl Fn(&[Rational]) -> Rational) -> Rational {
    let n = t.len();
    (0..n)
        .combinations(m)
        .map(|subset| {
            let roots: Vec<Rational> = subset.iter().map(|&k| t[k].clone()).collect();
            let mut euler = Rational::one();
            for &k in &subset {
                for l in (0..n).filter(|l| !subset.contains(l)) {
                    euler *= &t[l] - &t[k];
                }
            }
            v(&roots) / euler
        })
        .sum()
}

fn t_vector(values: &BTreeMap<VarId, Rational>) -> Vec<Rational> {
    values.values().cloned().collect()
}

fn criterion_1() -> Check {
    let mut slowest = Duration::ZERO;
    for n in 2..=5u32 {
        let space = SpaceDescriptor::grass(1, n).unwrap();
        let v = class(&format!("c1^{}", n - 1), 1);
        let want = MultiPoly::constant(rat(if n % 2 == 0 { -1 } else { 1 }));
        for (name, value, time) in three_methods(&space, &v) {
            ensure(value == want, || format!("CP^{}: {name} gave {value}", n - 1))?;
            ensure(time < Duration::from_secs(1), || {
                format!("CP^{}: {name} took {time:?}", n - 1)
            })?;
            slowest = slowest.max(time);
        }
        let mut rng = instance_rng(101, n as u64);
        let t = t_vector(&random_t_values(&mut rng, n));
        let oracle = grass_fixed_point_sum(1, &t, |r| r[0].pow(n as i32 - 1));
        ensure(MultiPoly::constant(oracle.clone()) == want, || {
            format!("oracle gave {oracle}")
        })?;
    }
    Ok(format!(
        "c1^(n-1) on P^(n-1) = (-1)^(n-1) for n=2..5, slowest method {slowest:?}"
    ))
}

/// Standard Young tableaux of a `rows x cols` rectangle, by filling cells
/// with 1, 2, ... one at a time.
fn count_syt(rows: usize, cols: usize) -> u64 {
    fn fill(shape: &mut Vec<usize>, cols: usize, left: usize) -> u64 {
        if left == 0 {
            return 1;
        }
        let mut total = 0;
        for r in 0..shape.len() {
            let fits = shape[r] < cols && (r == 0 || shape[r - 1] > shape[r]);
            if fits {
                shape[r] += 1;
                total += fill(shape, cols, left - 1);
                shape[r] -= 1;
            }
        }
        total
    }
    fill(&mut vec![0; rows], cols, rows * cols)
}

fn criterion_2() -> Check {
    let start = Instant::now();
    let mut seen = Vec::new();
    for (m, n) in [(2u32, 4u32), (2, 5)] {
        let space = SpaceDescriptor::grass(m, n).unwrap();
        let oracle = count_syt((n - m) as usize, m as usize);
        let v = class(&format!("c1^{}", space.complex_dimension()), m);
        for (name, value, _) in three_methods(&space, &v) {
            ensure(value == MultiPoly::constant(rat(oracle as i64)), || {
                format!("G({m},{n}): {name} gave {value}, tableaux count {oracle}")
            })?;
        }
        seen.push(format!("deg G({m},{n}) = {oracle}"));
    }
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(10), || format!("took {elapsed:?}"))?;
    Ok(format!("{} (tableaux oracle), {elapsed:?}", seen.join(", ")))
}

fn criterion_3() -> Check {
    let space = SpaceDescriptor::grass(2, 4).unwrap();
    let v = class("s[2,2]", 2);
    for (name, value, _) in three_methods(&space, &v) {
        ensure(value == MultiPoly::one(), || format!("{name} gave {value}"))?;
    }
    for k in 0..3 {
        let t = random_t_values(&mut instance_rng(303, k), 4);
        // s_{2,2}(x, y) = x^2 y^2
        let oracle = grass_fixed_point_sum(2, &t_vector(&t), |r| (&r[0] * &r[1]).pow(2));
        let value = specialize(&space, &v, &t).unwrap();
        ensure(oracle == Rational::one() && value == oracle, || {
            format!("at {t:?}: {value} vs {oracle}")
        })?;
    }
    Ok("s[2,2] on G(2,4) = 1 symbolically and at 3 random points".into())
}

fn verify_all(seed: u64) -> Vec<grassint::cli::VerifyReport> {
    [
        (Family::Grass, 5),
        (Family::Lg, 3),
        (Family::OgEven, 3),
        (Family::OgOdd, 3),
        (Family::Flag, 4),
    ]
    .into_iter()
    .map(|(family, max_n)| {
        cmd_verify(&VerifyArgs {
            family,
            max_n,
            trials: 20,
            seed,
            timings: false,
            output: grassint::cli::Output::Json,
        })
        .unwrap()
    })
    .collect()
}

fn criterion_4_and_6() -> (Check, Check) {
    let start = Instant::now();
    let reports = verify_all(2024);
    let elapsed = start.elapsed();
    let instances: Vec<_> = reports.iter().flat_map(|r| r.instances.iter()).collect();

    let mut per_space: BTreeMap<&str, (usize, std::collections::BTreeSet<u32>)> = BTreeMap::new();
    for inst in &instances {
        let entry = per_space.entry(&inst.space).or_default();
        entry.0 += 1;
        entry.1.insert(inst.degree);
    }
    let sweep = (|| {
        for inst in &instances {
            ensure(inst.agree, || {
                format!("#{} {} {}: {:?}", inst.index, inst.space, inst.class, inst.methods)
            })?;
            let wanted = if inst.space.starts_with("flag") { 2 } else { 3 };
            ensure(inst.methods.len() >= wanted, || {
                format!("{} ran {:?}", inst.space, inst.methods.keys())
            })?;
        }
        for (space, (count, degrees)) in &per_space {
            let dim = instances.iter().find(|i| i.space == *space).unwrap().dimension;
            ensure(*count >= 20, || format!("{space}: only {count} classes"))?;
            ensure((0..=dim + 2).all(|d| degrees.contains(&d)), || {
                format!("{space}: degrees {degrees:?}")
            })?;
        }
        ensure(elapsed < Duration::from_secs(300), || format!("took {elapsed:?}"))?;
        Ok(format!(
            "{} spaces, {} classes, all methods identical, {elapsed:?}",
            per_space.len(),
            instances.len()
        ))
    })();

    let laws = (|| {
        let (mut below, mut at) = (0, 0);
        for inst in &instances {
            ensure(inst.degree_law, || {
                format!("#{} {} {}", inst.index, inst.space, inst.class)
            })?;
            match inst.degree.cmp(&inst.dimension) {
                std::cmp::Ordering::Less => below += 1,
                std::cmp::Ordering::Equal => at += 1,
                _ => {}
            }
        }
        ensure(below > 0 && at > 0, || "degree classes not exercised".into())?;
        Ok(format!(
            "{below} below-dimension zeros, {at} t-free top-degree values, no exceptions"
        ))
    })();
    (sweep, laws)
}

fn criterion_5() -> Check {
    let mut count = 0;
    for n in 1..=3u32 {
        let space = SpaceDescriptor::lagrangian(n).unwrap();
        let dim = space.complex_dimension();
        for k in 0..10u32 {
            let expr = random_class(&mut instance_rng(505, (n * 100 + k) as u64), n, k % (dim + 3));
            let v = lower_class(&expr, n).unwrap();
            let first = iterated_residue(&build_lg_first_form(n, &v).unwrap()).unwrap().value;
            let second = iterated_residue(&build_residue_problem(&space, &v).unwrap())
                .unwrap()
                .value;
            ensure(first == second, || format!("LG({n}) {expr}: {first} vs {second}"))?;
            count += 1;
        }
    }
    Ok(format!(
        "first and second Lagrangian forms identical on {count} classes, n=1..3"
    ))
}

/// `-sum` of the finite residues of `num / prod(root_l - z)` at its simple
/// poles, with the roots being distinct signed `t` variables.
fn minus_finite_residues(num: &MultiPoly, roots: &[AffineForm]) -> MultiPoly {
    let z = VarId::z(1);
    let terms: Vec<RationalFn> = roots
        .iter()
        .enumerate()
        .map(|(l, a)| {
            // residue at z = a_l is N(a_l) / (-prod_{k != l}(a_k - a_l))
            let at_root = num.substitute(&BTreeMap::from([(z, a.to_poly())]));
            let den: Vec<AffineForm> = roots
                .iter()
                .enumerate()
                .filter(|(k, _)| *k != l)
                .map(|(_, b)| b.add(&a.neg()))
                .collect();
            RationalFn::new(-at_root, den).unwrap()
        })
        .collect();
    -RationalFn::sum(&terms).into_poly().unwrap()
}

fn criterion_7() -> Check {
    let z = VarId::z(1);
    let mut rng = instance_rng(707, 0);
    let instances = 150;
    for k in 0..instances {
        let r = rng.gen_range(1..=6u32);
        let roots: Vec<AffineForm> = (1..=r)
            .map(|i| {
                let t = AffineForm::var(VarId::t(i));
                if rng.gen_bool(0.5) {
                    t
                } else {
                    t.neg()
                }
            })
            .collect();
        // factor root - z, written as +-(t_i -+ z) for the kernel
        let factors: Vec<AffineForm> = roots
            .iter()
            .map(|a| {
                let f = a.add(&AffineForm::var(z).neg());
                if rng.gen_bool(0.5) {
                    f
                } else {
                    f.neg()
                }
            })
            .collect();
        let unit = factors
            .iter()
            .map(|f| -f.coefficient(z))
            .fold(Rational::one(), |acc, c| acc * c);
        let degree = rng.gen_range(0..=10u32);
        let num = (0..=degree).fold(MultiPoly::zero(), |acc, j| {
            let c = rat(rng.gen_range(-5..=5));
            let coeff_t = if rng.gen_bool(0.3) {
                MultiPoly::var(VarId::t(rng.gen_range(1..=r)))
            } else {
                MultiPoly::one()
            };
            acc + MultiPoly::var(z).pow(j).scale(&c) * coeff_t
        });
        let got = residue_at_infinity_step(&num, &factors, z).map_err(|e| e.to_string())?;
        let want = minus_finite_residues(&num, &roots).scale(&unit.recip());
        ensure(got == want, || {
            format!("instance {k}: r={r}, numerator {num}: {got} vs {want}")
        })?;
    }
    Ok(format!(
        "{instances} random kernels (r<=6, deg<=10) match minus the finite residues"
    ))
}

fn zp(i: u32) -> MultiPoly {
    MultiPoly::var(VarId::z(i))
}

fn prod(it: impl Iterator<Item = MultiPoly>) -> MultiPoly {
    it.fold(MultiPoly::one(), |acc, f| acc * f)
}

fn criterion_8() -> Check {
    let mut first_holds = Vec::new();
    let mut second_holds = Vec::new();
    for (m, n) in [(1u32, 2u32), (1, 3), (2, 3), (2, 4)] {
        let vand = prod((1..=n).tuple_combinations().map(|(i, j)| zp(i) - zp(j)));
        let pairs = |lo: u32, hi: u32| (lo..=hi).tuple_combinations::<(u32, u32)>();
        let cross = || (1..=m).cartesian_product(m + 1..=n);

        // blocks with i < j, times the cross block z_i - z_j
        let lhs1 = prod(pairs(1, m).chain(pairs(m + 1, n)).map(|(i, j)| zp(i) - zp(j)))
            * prod(cross().map(|(i, j)| zp(i) - zp(j)));
        let claimed_sign = if (m * n) % 2 == 0 { rat(1) } else { rat(-1) };
        ensure(lhs1 == vand, || {
            format!("({m},{n}): first product is not the Vandermonde")
        })?;
        if lhs1 == vand.scale(&claimed_sign) {
            first_holds.push(format!("({m},{n})"));
        }

        // blocks with i > j, times the cross block z_j - z_i
        let lhs2 = prod(pairs(1, m).chain(pairs(m + 1, n)).map(|(j, i)| zp(i) - zp(j)));
        let cross_ji = prod(cross().map(|(i, j)| zp(j) - zp(i)));
        let observed_sign = if (n * (n - 1) / 2) % 2 == 0 { rat(1) } else { rat(-1) };
        ensure(&lhs2 * &cross_ji == vand.scale(&observed_sign), || {
            format!("({m},{n}): second product is not (-1)^C(n,2) Vand / cross")
        })?;
        if &lhs2 * &cross_ji == vand {
            second_holds.push(format!("({m},{n})"));
        }
    }
    // Pinned findings: the first product always equals Vand, so the claimed
    // (-1)^(mn) is right only when mn is even; the second needs an extra
    // (-1)^C(n,2).
    ensure(first_holds == ["(1,2)", "(2,3)", "(2,4)"], || {
        format!("first: {first_holds:?}")
    })?;
    ensure(second_holds == ["(2,4)"], || format!("second: {second_holds:?}"))?;
    Ok("product 1 = Vand (claimed (-1)^(mn) fails at (1,3)); product 2 = (-1)^C(n,2) * claimed right side (which holds only at (2,4))".into())
}

fn binomial(n: u64, k: u64) -> BigInt {
    (0..k).fold(BigInt::one(), |acc, i| acc * (n - i) / (i + 1))
}

fn criterion_9() -> Check {
    let mut checked = 0;
    for n in 1..=8u32 {
        for m in 0..=n {
            let space = SpaceDescriptor::grass(m, n).unwrap();
            let count = enumerate_fixed_points(&space).len();
            ensure(BigInt::from(count) == binomial(n as u64, m as u64), || {
                format!("G({m},{n}): {count}")
            })?;
            checked += 1;
        }
    }
    for n in 1..=6u32 {
        for space in [
            SpaceDescriptor::lagrangian(n),
            SpaceDescriptor::orthogonal_even(n),
            SpaceDescriptor::orthogonal_odd(n),
        ] {
            let space = space.unwrap();
            let count = enumerate_fixed_points(&space).len();
            ensure(count == 1 << n, || format!("{space}: {count}"))?;
            checked += 1;
        }
        for m in 1..=n {
            let space = SpaceDescriptor::flag(m, n).unwrap();
            let count = enumerate_fixed_points(&space).len();
            let falling: usize = (n - m + 1..=n).map(|k| k as usize).product();
            ensure(count == falling, || format!("{space}: {count}"))?;
            checked += 1;
        }
    }
    Ok(format!("{checked} spaces: C(n,m), 2^n and n!/(n-m)! fixed points"))
}

fn criterion_10() -> Check {
    let bin = env!("CARGO_BIN_EXE_grassint");
    let run = |threads: &str| {
        let out = Command::new(bin)
            .args([
                "verify", "--family", "grass", "--max-n", "4", "--trials", "6", "--seed", "99",
            ])
            .env("RAYON_NUM_THREADS", threads)
            .output()
            .expect("run grassint");
        (out.status.code(), out.stdout)
    };
    let (code_a, a) = run("4");
    let (code_b, b) = run("4");
    let (code_c, c) = run("1");
    ensure(code_a == Some(0) && code_b == Some(0) && code_c == Some(0), || {
        format!("exit codes {code_a:?} {code_b:?} {code_c:?}")
    })?;
    ensure(a == b && a == c, || "reports differ between runs".into())?;
    serde_json::from_slice::<serde_json::Value>(&a).map_err(|e| e.to_string())?;

    let lib_a = serde_json::to_string(&verify_all(5)).unwrap();
    let lib_b = serde_json::to_string(&verify_all(5)).unwrap();
    ensure(lib_a == lib_b, || "library sweep reports differ".into())?;
    Ok(format!(
        "{} byte JSON report identical across 3 runs (1 and 4 threads)",
        a.len()
    ))
}

fn main() {
    let (c4, c6) = criterion_4_and_6();
    let results: Vec<(u32, &str, Check)> = vec![
        (1, "projective space anchor", criterion_1()),
        (2, "Grassmannian degrees", criterion_2()),
        (3, "point class", criterion_3()),
        (4, "method equivalence sweep", c4),
        (5, "Lagrangian forms agree", criterion_5()),
        (6, "degree laws", c6),
        (7, "residue kernel oracle", criterion_7()),
        (8, "Vandermonde identities", criterion_8()),
        (9, "fixed-point counts", criterion_9()),
        (10, "deterministic verify report", criterion_10()),
    ];
    let mut failed = 0;
    for (k, name, result) in &results {
        match result {
            Ok(detail) => println!("PASS criterion {k:>2} ({name}): {detail}"),
            Err(detail) => {
                failed += 1;
                println!("FAIL criterion {k:>2} ({name}): {detail}");
            }
        }
    }
    println!("{} of {} criteria passed", results.len() - failed, results.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
