use super::{InterpolationProblem, Solution};
use crate::bivariate::BiPoly;
use crate::error::{Error, Result};
use crate::gf2m::{Field, FieldElement};
use crate::poly::{binom_odd, Poly};

#[derive(Debug, Clone, Copy, Default)]
pub struct KoetterOptions {
    /// After every constraint, check that all candidates satisfy every
    /// constraint processed so far. Quadratic overhead; for tests.
    pub check_invariant: bool,
    /// Print per-constraint discrepancies to stderr.
    pub trace: bool,
}

impl KoetterOptions {
    /// Tracing follows the `RSRE_TRACE` environment variable.
    pub fn from_env() -> Self {
        KoetterOptions {
            check_invariant: false,
            trace: std::env::var("RSRE_TRACE").is_ok_and(|v| v == "1"),
        }
    }
}

pub fn solve_koetter(prob: &InterpolationProblem, f: &Field) -> Result<Solution> {
    solve_koetter_with(prob, f, KoetterOptions::from_env())
}

/// Koetter's algorithm over the `ℓ + 1` candidates `g_j = Y^j`.
///
/// Candidates are ranked by their leading term under the order on monomials
/// `X^i Y^j ↦ (i - d_j, j)`. When the caps are affine in `j`, as for every
/// decoder here, this is the `(1, d_0 - d_1)`-weighted degree with ties going to
/// the smaller Y-degree. Under this order a polynomial meets the caps exactly
/// when its leading term has nonpositive weight, so the minimal candidate is
/// admissible whenever any solution is.
pub fn solve_koetter_with(
    prob: &InterpolationProblem,
    f: &Field,
    opts: KoetterOptions,
) -> Result<Solution> {
    prob.ensure_solvable()?;
    let bounds = prob.bounds();
    let ncand = bounds.len();
    let mut cands: Vec<Candidate> = (0..ncand).map(|j| Candidate::y_pow(j, ncand)).collect();
    let mut disc = vec![FieldElement::ZERO; ncand];
    let mut processed = Vec::new();

    for (step, (p, a, b)) in prob.constraints().enumerate() {
        let (x, y) = prob.points()[p];
        for (d, g) in disc.iter_mut().zip(&cands) {
            *d = g.hasse_eval(a, b, x, y, f);
        }
        let chosen = (0..ncand)
            .filter(|&j| !disc[j].is_zero())
            .min_by(|&i, &j| cands[i].lead(bounds).cmp(&cands[j].lead(bounds)));
        if opts.trace {
            let ds: Vec<String> = disc.iter().map(|&d| f.power_name(d)).collect();
            eprintln!(
                "koetter c={step} pt=({},{}) ab=({a},{b}) disc=[{}] pick={}",
                f.power_name(x),
                f.power_name(y),
                ds.join(","),
                chosen.map_or("-".to_string(), |j| j.to_string())
            );
        }
        if let Some(js) = chosen {
            let pivot = cands[js].clone();
            let dstar = disc[js];
            for j in 0..ncand {
                if j != js && !disc[j].is_zero() {
                    cands[j].cross_eliminate(dstar, &pivot, disc[j], f);
                }
            }
            cands[js].mul_x_minus(x, f);
        }
        if opts.check_invariant {
            processed.push((x, y, a, b));
            for (j, g) in cands.iter().enumerate() {
                let q = g.to_bipoly();
                for &(px, py, pa, pb) in &processed {
                    assert!(
                        q.hasse_eval(pa, pb, px, py, f).is_zero(),
                        "candidate {j} violates constraint after step {step}"
                    );
                }
            }
        }
    }

    let q = cands
        .iter()
        .filter(|g| {
            let q = g.to_bipoly();
            prob.within_bounds(&q)
        })
        .min_by(|g, h| g.lead(bounds).cmp(&h.lead(bounds)))
        .map(Candidate::to_bipoly)
        .ok_or(Error::NoSolution)?;
    Ok(Solution {
        q,
        constraints: prob.constraint_count(),
    })
}

/// Dense columns kept free of trailing zeros.
#[derive(Clone)]
struct Candidate {
    cols: Vec<Vec<FieldElement>>,
}

impl Candidate {
    fn y_pow(j: usize, ncols: usize) -> Self {
        let mut cols = vec![Vec::new(); ncols];
        cols[j].push(FieldElement::ONE);
        Candidate { cols }
    }

    fn to_bipoly(&self) -> BiPoly {
        BiPoly::from_columns(self.cols.iter().map(|c| Poly::from_coeffs(c.clone())).collect())
    }

    /// `(max_j (deg g_j - d_j), j)` over nonzero columns, larger `j` winning ties.
    fn lead(&self, bounds: &[i64]) -> (i64, usize) {
        let mut best: Option<(i64, usize)> = None;
        for (j, c) in self.cols.iter().enumerate() {
            if c.is_empty() {
                continue;
            }
            let w = (c.len() as i64 - 1) - bounds[j];
            if best.is_none_or(|(bw, _)| w >= bw) {
                best = Some((w, j));
            }
        }
        best.expect("candidates are never zero")
    }

    fn hasse_eval(
        &self,
        a: usize,
        b: usize,
        x: FieldElement,
        y: FieldElement,
        f: &Field,
    ) -> FieldElement {
        let mut acc = FieldElement::ZERO;
        for j in (b..self.cols.len()).rev() {
            acc = f.mul(acc, y);
            if binom_odd(j, b) {
                acc = f.add(acc, hasse_eval_coeffs(&self.cols[j], a, x, f));
            }
        }
        acc
    }

    /// `self ← d_pivot·self - d_self·pivot`.
    fn cross_eliminate(
        &mut self,
        d_pivot: FieldElement,
        pivot: &Candidate,
        d_self: FieldElement,
        f: &Field,
    ) {
        for (c, pc) in self.cols.iter_mut().zip(&pivot.cols) {
            if c.len() < pc.len() {
                c.resize(pc.len(), FieldElement::ZERO);
            }
            for (i, v) in c.iter_mut().enumerate() {
                let scaled = f.mul(d_pivot, *v);
                let other = pc.get(i).copied().unwrap_or(FieldElement::ZERO);
                *v = f.sub(scaled, f.mul(d_self, other));
            }
            trim(c);
        }
    }

    /// `self ← (X - x)·self`.
    fn mul_x_minus(&mut self, x: FieldElement, f: &Field) {
        for c in &mut self.cols {
            if c.is_empty() {
                continue;
            }
            c.push(FieldElement::ZERO);
            for i in (0..c.len()).rev() {
                let lower = if i > 0 { c[i - 1] } else { FieldElement::ZERO };
                c[i] = f.sub(lower, f.mul(x, c[i]));
            }
            trim(c);
        }
    }
}

fn trim(c: &mut Vec<FieldElement>) {
    while c.last().is_some_and(|v| v.is_zero()) {
        c.pop();
    }
}

fn hasse_eval_coeffs(c: &[FieldElement], a: usize, x: FieldElement, f: &Field) -> FieldElement {
    let mut acc = FieldElement::ZERO;
    for i in (a..c.len()).rev() {
        acc = f.mul(acc, x);
        if binom_odd(i, a) {
            acc = f.add(acc, c[i]);
        }
    }
    acc
}
