//! Module invariants, each a deterministic check returning `Err` with a
//! description of the first counterexample. Shared by `properties` (one test
//! per invariant) and `acceptance` (all of them as one criterion).

#![allow(dead_code)]

use std::collections::BTreeSet;
use std::sync::{Arc, OnceLock};

use proptest::collection::vec;
use proptest::prelude::*;
use proptest::test_runner::{Config, RngAlgorithm, TestCaseError, TestRng, TestRunner};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use rsre::bench::{self, BenchConfig};
use rsre::decoders::{self, hamming_distance, rs_encode, wb_decode, Mode, RSCode};
use rsre::interpolation::{
    nullspace_solution, solve_koetter_with, verify_divisibility, verify_pointwise, verify_solution, Engine,
    InterpolationProblem, KoetterOptions,
};
use rsre::reencoding::{lift, make_context, reduced_bounds};
use rsre::{lagrange, BiPoly, Field, FieldElement, Poly};

pub const SAMPLES: u32 = 10_000;

pub type Check = fn() -> Result<(), String>;

/// Every invariant with its name, grouped by module.
pub fn all() -> Vec<(&'static str, Check)> {
    vec![
        ("gf2m: field axioms, exhaustive m <= 4", field_axioms_exhaustive as Check),
        ("gf2m: field axioms, sampled m = 5..16", field_axioms_sampled),
        ("gf2m: a^(2^m - 1) = 1", multiplicative_order),
        ("gf2m: addition is an involution, exhaustive m <= 4", add_involution),
        ("polyring: lagrange round trip", lagrange_round_trip),
        ("polyring: division law", division_law),
        ("polyring: exact division of a product", exact_div_of_product),
        ("polyring: degree of a product", product_degree),
        ("bivariate: Taylor identity in Y", taylor_identity),
        ("bivariate: y_shift evaluation", y_shift_eval),
        ("bivariate: multiplicity by brute-force shift", multiplicity_brute_force),
        ("bivariate: y_roots exhaustive, q <= 8, bound <= 3", y_roots_exhaustive),
        ("interpolation: engine agreement", engine_agreement),
        ("interpolation: divisibility <=> pointwise", divisibility_matches_pointwise),
        ("interpolation: Koetter running invariant", koetter_invariant),
        ("interpolation: scalar invariance", scalar_invariance),
        ("reencoding: zero forcing", zero_forcing),
        ("reencoding: multiplicity lemma", multiplicity_lemma),
        ("reencoding: lift equivalence", lift_equivalence),
        ("reencoding: revisited = plain end to end", path_equality),
        ("decoders: mode/engine agreement, 1000 trials", mode_engine_agreement),
        ("decoders: GS at radius t contains WB", gs_contains_wb),
        ("decoders: list soundness", list_soundness),
        ("rsbench: default grid decodes, op-count trends", default_grid),
        ("rsbench: deterministic CSV", deterministic_csv),
    ]
}

pub fn field(m: u32) -> &'static Arc<Field> {
    static FIELDS: OnceLock<Vec<Arc<Field>>> = OnceLock::new();
    let all = FIELDS.get_or_init(|| (2..=16).map(|m| Arc::new(Field::new(m).unwrap())).collect());
    &all[(m - 2) as usize]
}

pub fn runner(cases: u32) -> TestRunner {
    let config = Config {
        cases,
        failure_persistence: None,
        ..Config::default()
    };
    TestRunner::new_with_rng(config, TestRng::deterministic_rng(RngAlgorithm::ChaCha))
}

fn el(f: &Field, v: u32) -> FieldElement {
    FieldElement::from_raw((v as usize % f.order()) as u16)
}

fn poly(f: &Field, raw: &[u32]) -> Poly {
    Poly::from_coeffs(raw.iter().map(|&v| el(f, v)).collect())
}

fn bipoly(f: &Field, raw: &[Vec<u32>]) -> BiPoly {
    BiPoly::from_columns(raw.iter().map(|c| poly(f, c)).collect())
}

fn raw_poly(max_len: usize) -> impl Strategy<Value = Vec<u32>> {
    vec(any::<u32>(), 0..=max_len)
}

fn raw_bipoly(max_cols: usize, max_len: usize) -> impl Strategy<Value = Vec<Vec<u32>>> {
    vec(raw_poly(max_len), 1..=max_cols)
}

fn run<S: Strategy>(
    cases: u32,
    strategy: S,
    test: impl Fn(S::Value) -> Result<(), TestCaseError>,
) -> Result<(), String> {
    runner(cases).run(&strategy, test).map_err(|e| e.to_string())
}

/// `n` distinct elements of `f`, in random order.
fn distinct(f: &Field, n: usize, rng: &mut ChaCha8Rng) -> Vec<FieldElement> {
    let mut all: Vec<FieldElement> = f.elements().collect();
    all.shuffle(rng);
    all.truncate(n);
    all
}

fn random_el(f: &Field, rng: &mut ChaCha8Rng) -> FieldElement {
    FieldElement::from_raw(rng.random_range(0..f.order()) as u16)
}

fn random_nonzero(f: &Field, rng: &mut ChaCha8Rng) -> FieldElement {
    FieldElement::from_raw(rng.random_range(1..f.order()) as u16)
}

fn random_poly(f: &Field, len: usize, rng: &mut ChaCha8Rng) -> Poly {
    Poly::from_coeffs((0..len).map(|_| random_el(f, rng)).collect())
}

// ---- gf2m ----

fn check_axioms(f: &Field, a: FieldElement, b: FieldElement, c: FieldElement) -> Result<(), String> {
    let ok = f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c))
        && f.add(f.add(a, b), c) == f.add(a, f.add(b, c))
        && f.mul(a, b) == f.mul(b, a)
        && f.add(a, b) == f.add(b, a)
        && f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c));
    if ok {
        Ok(())
    } else {
        Err(format!("GF(2^{}) axioms fail at ({a}, {b}, {c})", f.degree()))
    }
}

pub fn field_axioms_exhaustive() -> Result<(), String> {
    for m in 2..=4 {
        let f = field(m);
        for a in f.elements() {
            for b in f.elements() {
                for c in f.elements() {
                    check_axioms(f, a, b, c)?;
                }
            }
            if !a.is_zero() {
                let inverses: Vec<_> = f.elements().filter(|&b| f.mul(a, b) == FieldElement::ONE).collect();
                if inverses != [f.inv(a).unwrap()] {
                    return Err(format!("GF(2^{m}): {a} has inverses {inverses:?}"));
                }
            }
        }
    }
    Ok(())
}

pub fn field_axioms_sampled() -> Result<(), String> {
    for m in 5..=16 {
        let f = field(m);
        let mut rng = ChaCha8Rng::seed_from_u64(m as u64);
        for _ in 0..SAMPLES {
            let (a, b, c) = (random_el(f, &mut rng), random_el(f, &mut rng), random_el(f, &mut rng));
            check_axioms(f, a, b, c)?;
            if !a.is_zero() {
                let inv = f.inv(a).unwrap();
                if f.mul(a, inv) != FieldElement::ONE || f.mul(b, inv) != f.div(b, a).unwrap() {
                    return Err(format!("GF(2^{m}): bad inverse of {a}"));
                }
            }
        }
    }
    Ok(())
}

/// Checks `a^(2^m - 1) = 1` by square-and-multiply through `mul`, independent of
/// the log tables behind `pow`.
pub fn multiplicative_order() -> Result<(), String> {
    for m in 2..=16 {
        let f = field(m);
        let e = f.order() - 1;
        for a in f.elements().skip(1) {
            let mut acc = FieldElement::ONE;
            for bit in (0..m).rev() {
                acc = f.mul(acc, acc);
                if e >> bit & 1 == 1 {
                    acc = f.mul(acc, a);
                }
            }
            if acc != FieldElement::ONE || f.pow(a, e as i64).unwrap() != FieldElement::ONE {
                return Err(format!("GF(2^{m}): {a}^{e} != 1"));
            }
        }
    }
    Ok(())
}

pub fn add_involution() -> Result<(), String> {
    for m in 2..=4 {
        let f = field(m);
        for a in f.elements() {
            for b in f.elements() {
                if f.add(f.add(a, b), b) != a {
                    return Err(format!("GF(2^{m}): ({a} + {b}) + {b} != {a}"));
                }
            }
        }
    }
    Ok(())
}

// ---- polyring ----

pub fn lagrange_round_trip() -> Result<(), String> {
    run(SAMPLES, (2u32..=8, 1usize..=20, any::<u64>()), |(m, n, seed)| {
        let f = field(m);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let n = n.min(f.order());
        let xs = distinct(f, n, &mut rng);
        let pts: Vec<_> = xs.iter().map(|&x| (x, random_el(f, &mut rng))).collect();
        let p = lagrange(&pts, f).unwrap();
        prop_assert!(p.fits_degree(n as i64 - 1));
        for &(x, y) in &pts {
            prop_assert_eq!(p.eval(x, f), y);
        }
        Ok(())
    })
}

pub fn division_law() -> Result<(), String> {
    run(SAMPLES, (2u32..=8, raw_poly(20), raw_poly(10)), |(m, a, b)| {
        let f = field(m);
        let (num, den) = (poly(f, &a), poly(f, &b));
        if den.is_zero() {
            prop_assert!(num.divrem(&den, f).is_err());
            return Ok(());
        }
        let (q, r) = num.divrem(&den, f).unwrap();
        prop_assert_eq!(q.mul(&den, f).add(&r, f), num);
        prop_assert!(r.is_zero() || r.degree() < den.degree());
        Ok(())
    })
}

pub fn exact_div_of_product() -> Result<(), String> {
    run(SAMPLES, (2u32..=8, raw_poly(15), raw_poly(10)), |(m, a, b)| {
        let f = field(m);
        let (a, b) = (poly(f, &a), poly(f, &b));
        if b.is_zero() {
            return Ok(());
        }
        prop_assert_eq!(a.mul(&b, f).exact_div(&b, f).unwrap(), a);
        Ok(())
    })
}

pub fn product_degree() -> Result<(), String> {
    run(SAMPLES, (2u32..=16, raw_poly(15), raw_poly(15)), |(m, a, b)| {
        let f = field(m);
        let (a, b) = (poly(f, &a), poly(f, &b));
        match (a.degree(), b.degree()) {
            (Some(da), Some(db)) => prop_assert_eq!(a.mul(&b, f).degree(), Some(da + db)),
            _ => prop_assert!(a.mul(&b, f).is_zero()),
        }
        Ok(())
    })
}

// ---- bivariate ----

pub fn taylor_identity() -> Result<(), String> {
    run(SAMPLES, (2u32..=8, raw_bipoly(5, 6), any::<[u32; 3]>()), |(m, q, [beta, x, y])| {
        let f = field(m);
        let q = bipoly(f, &q);
        let (beta, x, y) = (el(f, beta), el(f, x), el(f, y));
        let lhs = q.eval(x, f.add(y, beta), f);
        let mut rhs = FieldElement::ZERO;
        let mut power = FieldElement::ONE;
        for b in 0..q.columns().len() {
            rhs = f.add(rhs, f.mul(q.y_hasse(b).eval(x, y, f), power));
            power = f.mul(power, beta);
        }
        prop_assert_eq!(lhs, rhs);
        Ok(())
    })
}

pub fn y_shift_eval() -> Result<(), String> {
    run(SAMPLES, (2u32..=8, raw_bipoly(5, 6), raw_poly(6), any::<[u32; 2]>()), |(m, q, l, [x, y])| {
        let f = field(m);
        let (q, l) = (bipoly(f, &q), poly(f, &l));
        let (x, y) = (el(f, x), el(f, y));
        prop_assert_eq!(q.y_shift(&l, f).eval(x, y, f), q.eval(x, f.add(y, l.eval(x, f)), f));
        Ok(())
    })
}

/// `q(X + x, Y + y)` by direct expansion: Horner in `X + x` per column, then in
/// `Y + y` across columns.
fn translate(q: &BiPoly, x: FieldElement, y: FieldElement, f: &Field) -> BiPoly {
    let y_lin = BiPoly::from_columns(vec![Poly::constant(y), Poly::one()]);
    let mut acc = BiPoly::zero();
    for col in q.columns().iter().rev() {
        let mut c = Poly::zero();
        for &coef in col.coeffs().iter().rev() {
            c = c.mul_linear(x, f).add(&Poly::constant(coef), f);
        }
        acc = acc.mul(&y_lin, f).add(&BiPoly::from_poly(c), f);
    }
    acc
}

fn lowest_total_degree(q: &BiPoly) -> Option<usize> {
    q.columns()
        .iter()
        .enumerate()
        .filter_map(|(j, c)| c.x_valuation().map(|v| v + j))
        .min()
}

pub fn multiplicity_brute_force() -> Result<(), String> {
    // q is built as R(X - x, Y - y) with R's low-degree terms zeroed at random,
    // so multiplicities above 0 and 1 are common.
    run(SAMPLES, (2u32..=5, raw_bipoly(4, 5), 0usize..=4, any::<[u32; 2]>()), |(m, r, cut, [x, y])| {
        let f = field(m);
        let cols: Vec<Poly> = r
            .iter()
            .enumerate()
            .map(|(j, c)| {
                let mut c: Vec<_> = c.iter().map(|&v| el(f, v)).collect();
                for (i, v) in c.iter_mut().enumerate() {
                    if i + j < cut {
                        *v = FieldElement::ZERO;
                    }
                }
                Poly::from_coeffs(c)
            })
            .collect();
        let r = BiPoly::from_columns(cols);
        if r.is_zero() {
            return Ok(());
        }
        let (x, y) = (el(f, x), el(f, y));
        // Characteristic 2: translating by (x, y) twice is the identity.
        let q = translate(&r, x, y, f);
        prop_assert_eq!(translate(&q, x, y, f), r.clone());
        let expected = lowest_total_degree(&r).unwrap();
        prop_assert_eq!(q.multiplicity_at(x, y, f).unwrap(), expected);
        Ok(())
    })
}

pub fn y_roots_exhaustive() -> Result<(), String> {
    // A product of planted factors `Y - P_i` with a random cofactor, or a random q.
    let strategy = (2u32..=3, 1usize..=3, vec(raw_poly(3), 0..=3), raw_bipoly(3, 4), any::<bool>());
    run(SAMPLES, strategy, |(m, bound, planted, cofactor, plant)| {
        let f = field(m);
        let mut q = bipoly(f, &cofactor);
        if plant {
            for p in &planted {
                let root = poly(f, p);
                q = q.mul(&BiPoly::from_columns(vec![root, Poly::one()]), f);
            }
        }
        if q.is_zero() {
            return Ok(());
        }
        let order = f.order();
        let mut expected = BTreeSet::new();
        for code in 0..order.pow(bound as u32) {
            let coeffs = (0..bound)
                .map(|i| FieldElement::from_raw((code / order.pow(i as u32) % order) as u16))
                .collect();
            let p = Poly::from_coeffs(coeffs);
            if q.substitute(&p, f).is_zero() {
                expected.insert(p);
            }
        }
        let found: BTreeSet<Poly> = q.y_roots(bound, f).unwrap().into_iter().collect();
        prop_assert_eq!(found, expected);
        Ok(())
    })
}

// ---- interpolation ----

/// A random solvable problem: `q ≤ 16`, `n ≤ 15`, `s ≤ 2`, `ℓ ≤ 2`, with
/// column caps raised at column 0 until the counting bound holds.
pub fn random_problem(rng: &mut ChaCha8Rng) -> (&'static Arc<Field>, InterpolationProblem) {
    let f = field(rng.random_range(2..=4));
    let n = rng.random_range(1..=15.min(f.order()));
    let s = rng.random_range(1..=2);
    let ell = rng.random_range(0..=2);
    let xs = distinct(f, n, rng);
    let pts: Vec<_> = xs.into_iter().map(|x| (x, random_el(f, rng))).collect();
    let c = (n * s * (s + 1) / 2) as i64;
    let mut bounds: Vec<i64> = (0..=ell).map(|_| rng.random_range(-1..=c)).collect();
    let u: i64 = bounds.iter().map(|&d| (d + 1).max(0)).sum();
    if u <= c {
        bounds[0] = bounds[0].max(-1) + (c - u + 1);
    }
    let prob = InterpolationProblem::new(pts, s, bounds).unwrap();
    assert!(prob.is_solvable());
    (f, prob)
}

pub fn engine_agreement() -> Result<(), String> {
    run(SAMPLES, any::<u64>(), |seed| {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (f, prob) = random_problem(&mut rng);
        for engine in Engine::ALL {
            let q = engine.solve(&prob, f).unwrap().q;
            prop_assert!(verify_solution(&prob, &q, f), "{} failed on {:?}", engine, prob);
        }
        Ok(())
    })
}

/// A candidate that may or may not satisfy the constraints.
pub fn random_candidate(prob: &InterpolationProblem, f: &Field, rng: &mut ChaCha8Rng) -> BiPoly {
    let ncols = prob.bounds().len();
    let solution = || Engine::Koetter.solve(prob, f).unwrap().q;
    match rng.random_range(0..5) {
        0 => solution(),
        1 => solution().mul_poly(&random_poly(f, 3, rng), f),
        2 => {
            let bump = BiPoly::from_columns(
                (0..ncols)
                    .map(|j| if j == rng.random_range(0..ncols) { random_poly(f, 4, rng) } else { Poly::zero() })
                    .collect(),
            );
            solution().add(&bump, f)
        }
        3 => BiPoly::from_columns((0..ncols).map(|_| random_poly(f, 8, rng)).collect()),
        _ => {
            // A vanishing factor of multiplicity s at every point, possibly
            // with one point dropped.
            let mut xs: Vec<_> = prob.points().iter().map(|p| p.0).collect();
            if rng.random_bool(0.5) {
                xs.pop();
            }
            let z = rsre::vanishing(&xs, prob.multiplicity(), f).unwrap();
            BiPoly::from_poly(z).mul(&BiPoly::from_columns((0..ncols).map(|_| random_poly(f, 2, rng)).collect()), f)
        }
    }
}

pub fn divisibility_matches_pointwise() -> Result<(), String> {
    run(SAMPLES, any::<u64>(), |seed| {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (f, prob) = random_problem(&mut rng);
        let q = random_candidate(&prob, f, &mut rng);
        prop_assert_eq!(verify_pointwise(&prob, &q, f), verify_divisibility(&prob, &q, f));
        Ok(())
    })
}

pub fn koetter_invariant() -> Result<(), String> {
    let opts = KoetterOptions {
        check_invariant: true,
        trace: false,
    };
    run(SAMPLES, any::<u64>(), |seed| {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (f, prob) = random_problem(&mut rng);
        let q = solve_koetter_with(&prob, f, opts).unwrap().q;
        prop_assert!(verify_solution(&prob, &q, f));
        Ok(())
    })
}

pub fn scalar_invariance() -> Result<(), String> {
    run(SAMPLES, any::<u64>(), |seed| {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (f, prob) = random_problem(&mut rng);
        let engine = Engine::ALL[rng.random_range(0..2)];
        let q = engine.solve(&prob, f).unwrap().q;
        let c = random_nonzero(f, &mut rng);
        prop_assert!(verify_solution(&prob, &q.scale(c, f), f));
        Ok(())
    })
}

// ---- reencoding ----

pub fn zero_forcing() -> Result<(), String> {
    run(SAMPLES, (2u32..=8, 2usize..=30, any::<u64>()), |(m, n, seed)| {
        let f = field(m);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let n = n.min(f.order());
        let k = rng.random_range(1..n);
        let support = distinct(f, n, &mut rng);
        let y: Vec<_> = (0..n).map(|_| random_el(f, &mut rng)).collect();
        let mut positions: Vec<usize> = (0..n).collect();
        positions.shuffle(&mut rng);
        positions.truncate(k);
        let ctx = make_context(&support, &y, k, Some(&positions), f).unwrap();
        for &i in &positions {
            prop_assert!(ctx.residuals[i].is_zero());
        }
        for i in 0..n {
            prop_assert_eq!(f.add(ctx.residuals[i], ctx.lk.eval(support[i], f)), y[i]);
        }
        Ok(())
    })
}

pub fn multiplicity_lemma() -> Result<(), String> {
    run(SAMPLES, (2u32..=5, 1usize..=4, raw_bipoly(4, 5), raw_poly(4), any::<[u32; 2]>()), |(m, s, r, p, [a, b])| {
        let f = field(m);
        let (a, b) = (el(f, a), el(f, b));
        // R has no monomial of total degree below s; q = R(X - a, Y - b).
        let cols: Vec<Poly> = r
            .iter()
            .enumerate()
            .map(|(j, c)| {
                let zeros = s.saturating_sub(j);
                Poly::from_coeffs(
                    std::iter::repeat_n(FieldElement::ZERO, zeros)
                        .chain(c.iter().map(|&v| el(f, v)))
                        .collect(),
                )
            })
            .collect();
        let q = translate(&BiPoly::from_columns(cols), a, b, f);
        if q.is_zero() {
            return Ok(());
        }
        prop_assert!(q.multiplicity_at(a, b, f).unwrap() >= s);
        // P(a) = b.
        let p = Poly::constant(b).add(&poly(f, &p).mul_linear(a, f), f);
        prop_assert_eq!(p.eval(a, f), b);
        let image = q.substitute(&p, f);
        let (_, rem) = image.divrem(&Poly::linear(a).pow(s, f), f).unwrap();
        prop_assert!(rem.is_zero());
        Ok(())
    })
}

/// One random translated/reduced problem pair and the checks of the
/// re-encoding equivalence. Returns whether the pair was solvable.
pub fn check_lift_instance(rng: &mut ChaCha8Rng) -> Result<bool, String> {
    let f = field(rng.random_range(2..=4));
    let n = rng.random_range(2..=15.min(f.order()));
    let k = rng.random_range(1..n);
    let s = rng.random_range(1..=2);
    let ell = rng.random_range(0..=s);
    let support = distinct(f, n, rng);
    let y: Vec<_> = (0..n).map(|_| random_el(f, rng)).collect();
    let ctx = make_context(&support, &y, k, None, f).map_err(|e| e.to_string())?;
    let c = (n * s * (s + 1) / 2) as i64;
    let bounds: Vec<i64> = (0..=ell).map(|_| rng.random_range(-1..=c + 2)).collect();
    let full = InterpolationProblem::new(ctx.translated_points(), s, bounds.clone()).unwrap();
    let rb = reduced_bounds(&bounds, s, k).unwrap();
    let reduced = InterpolationProblem::new(ctx.reduced_points(f), s, rb).unwrap();

    let ctx_desc = || format!("n={n} k={k} s={s} bounds={bounds:?}");
    if full.is_solvable() && !reduced.is_solvable() {
        return Err(format!("counting bound lost by reduction: {}", ctx_desc()));
    }
    let full_sol = nullspace_solution(&full, f);
    let reduced_sol = nullspace_solution(&reduced, f);
    if full_sol.is_some() != reduced_sol.is_some() {
        return Err(format!(
            "solvability differs (full {}, reduced {}): {}",
            full_sol.is_some(),
            reduced_sol.is_some(),
            ctx_desc()
        ));
    }
    if let Some(r) = &reduced_sol {
        if !verify_solution(&reduced, r, f) {
            return Err(format!("kernel vector fails the reduced problem: {}", ctx_desc()));
        }
        let q = lift(r, &ctx.zk, s, f).unwrap();
        if !verify_solution(&full, &q, f) {
            return Err(format!("lift of a reduced solution fails: {}", ctx_desc()));
        }
    }
    if let Some(q) = &full_sol {
        // Converse: Z_k^(s-j) divides Q_j and the quotient solves the reduced problem.
        let mut cols = Vec::new();
        for (j, col) in q.columns().iter().enumerate() {
            let (quot, rem) = col.divrem(&ctx.zk.pow(s - j, f), f).unwrap();
            if !rem.is_zero() {
                return Err(format!("Z_k^{} does not divide Q_{j}: {}", s - j, ctx_desc()));
            }
            cols.push(quot);
        }
        let r = BiPoly::from_columns(cols);
        if !verify_solution(&reduced, &r, f) {
            return Err(format!("quotient of a full solution fails the reduced problem: {}", ctx_desc()));
        }
    }
    Ok(full_sol.is_some())
}

pub fn lift_equivalence() -> Result<(), String> {
    run(SAMPLES, any::<u64>(), |seed| {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        check_lift_instance(&mut rng).map(|_| ()).map_err(TestCaseError::fail)
    })
}

pub fn path_equality() -> Result<(), String> {
    run(SAMPLES, (3u32..=5, any::<u64>()), |(m, seed)| {
        let f = field(m);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let n = rng.random_range(3..f.order());
        let k = rng.random_range(1..n);
        let code = RSCode::primitive(f.clone(), n, k).unwrap();
        let msg = random_poly(f, k, &mut rng);
        let c = rs_encode(&code, &msg).unwrap();
        let weight = rng.random_range(0..=n);
        let y = bench::inject_errors(&c, weight, rng.random(), f).unwrap();
        for engine in Engine::ALL {
            let plain = wb_decode(&code, &y, engine, Mode::None).unwrap();
            let revisited = wb_decode(&code, &y, engine, Mode::Revisited).unwrap();
            prop_assert_eq!(&plain, &revisited);
            prop_assert_eq!(plain.is_success(), revisited.is_success());
            if weight <= code.t() {
                prop_assert_eq!(plain.message.as_ref(), Some(&msg));
            }
        }
        Ok(())
    })
}

// ---- decoders ----

pub fn mode_engine_agreement() -> Result<(), String> {
    run(1000, (4u32..=6, any::<u64>()), |(m, seed)| {
        let f = field(m);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let n = rng.random_range(2..f.order());
        let k = rng.random_range(1..n);
        let code = RSCode::primitive(f.clone(), n, k).unwrap();
        let msg = random_poly(f, k, &mut rng);
        let weight = rng.random_range(0..=code.t());
        let y = bench::inject_errors(&rs_encode(&code, &msg).unwrap(), weight, rng.random(), f).unwrap();
        let mut outcomes = Vec::new();
        for engine in Engine::ALL {
            for mode in Mode::ALL {
                outcomes.push(wb_decode(&code, &y, engine, mode).unwrap());
            }
        }
        for o in &outcomes {
            prop_assert_eq!(o, &outcomes[0]);
            prop_assert_eq!(o.message.as_ref(), Some(&msg));
            prop_assert_eq!(o.errors_corrected, weight);
        }
        Ok(())
    })
}

pub fn gs_contains_wb() -> Result<(), String> {
    run(SAMPLES, (3u32..=4, any::<u64>()), |(m, seed)| {
        let f = field(m);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let n = rng.random_range(2..f.order());
        let k = rng.random_range(1..n);
        let code = RSCode::primitive(f.clone(), n, k).unwrap();
        let msg = random_poly(f, k, &mut rng);
        let weight = rng.random_range(0..=code.t() + 1);
        let y = bench::inject_errors(&rs_encode(&code, &msg).unwrap(), weight, rng.random(), f).unwrap();
        let wb = wb_decode(&code, &y, Engine::Koetter, Mode::Revisited).unwrap();
        if let Some(p) = wb.message {
            let list = decoders::gs_decode(&code, &y, code.t()).unwrap();
            prop_assert!(list.contains(&p));
        }
        Ok(())
    })
}

pub fn list_soundness() -> Result<(), String> {
    run(SAMPLES, any::<u64>(), |seed| {
        let f = field(4);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let n = rng.random_range(5..=15);
        let k = rng.random_range(2..=n / 2);
        let code = RSCode::primitive(f.clone(), n, k).unwrap();
        let radius = code.t() + rng.random_range(0..=2);
        let msg = random_poly(f, k, &mut rng);
        let weight = rng.random_range(0..=radius + 1).min(n);
        let y = bench::inject_errors(&rs_encode(&code, &msg).unwrap(), weight, rng.random(), f).unwrap();
        let lists = [decoders::gs_decode(&code, &y, radius), decoders::sudan_decode(&code, &y, radius)];
        for list in lists {
            let Ok(list) = list else { continue };
            for p in &list {
                prop_assert!(p.fits_degree(k as i64 - 1));
                prop_assert!(hamming_distance(&rs_encode(&code, p).unwrap(), &y) <= radius);
            }
            if weight <= radius {
                prop_assert!(list.contains(&msg));
            }
        }
        Ok(())
    })
}

// ---- rsbench ----

pub fn default_grid() -> Result<(), String> {
    let config = BenchConfig {
        repeats: 1,
        ..BenchConfig::default()
    };
    let rows = bench::run(&config).map_err(|e| e.to_string())?;
    if rows.len() != 20 * 6 || rows.iter().any(|r| r.failures != 0) {
        return Err("default grid has missing rows or failures".into());
    }
    for m in 4..=8 {
        for engine in Engine::ALL {
            let ops = |mode: Mode| -> Vec<u64> {
                rows.iter()
                    .filter(|r| r.m == m && r.engine == engine && r.mode == mode)
                    .map(|r| r.field_ops)
                    .collect()
            };
            let revisited = ops(Mode::Revisited);
            if revisited.windows(2).any(|w| w[1] > w[0]) {
                return Err(format!("m={m} {engine}: revisited op counts increase with k: {revisited:?}"));
            }
            let usual = ops(Mode::None);
            let (lo, hi) = (usual.iter().min().unwrap(), usual.iter().max().unwrap());
            if *hi as f64 > 1.25 * *lo as f64 {
                return Err(format!("m={m} {engine}: usual op counts vary with k: {usual:?}"));
            }
        }
    }
    Ok(())
}

fn strip_timings(csv: &str) -> String {
    csv.lines()
        .map(|l| {
            let f: Vec<&str> = l.split(',').collect();
            [&f[..6], &f[8..]].concat().join(",")
        })
        .collect::<Vec<_>>()
        .join("\n")
}

pub fn deterministic_csv() -> Result<(), String> {
    let config = BenchConfig {
        m: vec![4, 5, 6],
        iters: 5,
        seed: 1234,
        repeats: 1,
        ..BenchConfig::default()
    };
    let a = bench::to_csv(&bench::run(&config).map_err(|e| e.to_string())?);
    let b = bench::to_csv(&bench::run(&config).map_err(|e| e.to_string())?);
    if strip_timings(&a) != strip_timings(&b) {
        return Err("same config and seed gave different CSV".into());
    }
    let other = bench::to_csv(&bench::run(&BenchConfig { seed: 99, ..config }).map_err(|e| e.to_string())?);
    if strip_timings(&other) == strip_timings(&a) {
        return Err("a different seed gave identical op counts".into());
    }
    Ok(())
}
