//! Re-encoding: translate the received points by the interpolant `L_k` of `k`
//! of them so those `k` residuals vanish, then divide the vanishing factor
//! `Z_k = ∏ (X - α_i)` out of the residual interpolant. The result is a
//! genuinely smaller interpolation problem on `n - k` points that any engine
//! can solve unmodified; [`lift`] and [`unshift`] carry its solution back.
//!
//! [`ReencodingContext`] computes every intermediate polynomial and is the
//! reference path. [`ReencodingPlan`] precomputes the parts that depend only on
//! the support and produces the reduced points directly, which is what the
//! decoders use per received word.

use crate::bivariate::BiPoly;
use crate::error::{Error, Result};
use crate::gf2m::{tally, Field, FieldElement};
use crate::poly::{lagrange, vanishing, Poly};

type Point = (FieldElement, FieldElement);

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReencodingContext {
    support: Vec<FieldElement>,
    chosen: Vec<usize>,
    others: Vec<usize>,
    /// Interpolant of the received word on the chosen positions.
    pub lk: Poly,
    /// `∏_{chosen} (X - α_i)`.
    pub zk: Poly,
    /// `r_i = y_i - L_k(α_i)`, zero on the chosen positions.
    pub residuals: Vec<FieldElement>,
    /// Interpolant of the residuals over the whole support.
    pub ln: Poly,
    /// `L_n / Z_k`.
    pub lnk: Poly,
}

fn check_positions(n: usize, k: usize, positions: Option<&[usize]>) -> Result<(Vec<usize>, Vec<usize>)> {
    if k == 0 || k >= n {
        return Err(Error::BadDimension(format!(
            "re-encoding needs 1 <= k < n, got k={k}, n={n}"
        )));
    }
    let chosen: Vec<usize> = match positions {
        None => (0..k).collect(),
        Some(p) => p.to_vec(),
    };
    if chosen.len() != k {
        return Err(Error::BadDimension(format!(
            "expected {k} re-encoding positions, got {}",
            chosen.len()
        )));
    }
    let mut mark = vec![false; n];
    for &i in &chosen {
        if i >= n || mark[i] {
            return Err(Error::BadDimension(format!(
                "re-encoding position {i} is out of range or repeated"
            )));
        }
        mark[i] = true;
    }
    let others = (0..n).filter(|&i| !mark[i]).collect();
    Ok((chosen, others))
}

/// Builds the context for received word `y` over `support`, forcing zeros at
/// `positions` (the first `k` positions by default).
pub fn make_context(
    support: &[FieldElement],
    y: &[FieldElement],
    k: usize,
    positions: Option<&[usize]>,
    f: &Field,
) -> Result<ReencodingContext> {
    let n = support.len();
    if y.len() != n {
        return Err(Error::BadDimension(format!(
            "received word has length {}, support has {n}",
            y.len()
        )));
    }
    let (chosen, others) = check_positions(n, k, positions)?;
    let chosen_pts: Vec<Point> = chosen.iter().map(|&i| (support[i], y[i])).collect();
    let lk = lagrange(&chosen_pts, f)?;
    let chosen_x: Vec<FieldElement> = chosen.iter().map(|&i| support[i]).collect();
    let zk = vanishing(&chosen_x, 1, f)?;
    let residuals: Vec<FieldElement> = support
        .iter()
        .zip(y)
        .map(|(&a, &yi)| f.sub(yi, lk.eval(a, f)))
        .collect();
    let full: Vec<Point> = support.iter().copied().zip(residuals.iter().copied()).collect();
    let ln = lagrange(&full, f)?;
    let lnk = ln.exact_div(&zk, f)?;
    Ok(ReencodingContext {
        support: support.to_vec(),
        chosen,
        others,
        lk,
        zk,
        residuals,
        ln,
        lnk,
    })
}

impl ReencodingContext {
    pub fn chosen_positions(&self) -> &[usize] {
        &self.chosen
    }

    pub fn other_positions(&self) -> &[usize] {
        &self.others
    }

    pub fn k(&self) -> usize {
        self.chosen.len()
    }

    /// The translated points `(α_i, r_i)` over the whole support.
    pub fn translated_points(&self) -> Vec<Point> {
        self.support
            .iter()
            .copied()
            .zip(self.residuals.iter().copied())
            .collect()
    }

    /// `(α_i, L_{n-k}(α_i))` for the positions that were not zeroed.
    pub fn reduced_points(&self, f: &Field) -> Vec<Point> {
        self.others
            .iter()
            .map(|&i| (self.support[i], self.lnk.eval(self.support[i], f)))
            .collect()
    }
}

/// Column caps for the reduced problem: `d'_j = d_j - k(s - j)`.
pub fn reduced_bounds(bounds: &[i64], s: usize, k: usize) -> Result<Vec<i64>> {
    let ell = bounds.len().saturating_sub(1);
    if s < ell {
        return Err(Error::MultiplicityTooSmall {
            multiplicity: s,
            y_degree: ell,
        });
    }
    Ok(bounds
        .iter()
        .enumerate()
        .map(|(j, &d)| d - (k * (s - j)) as i64)
        .collect())
}

/// `Q_j = R_j · Z_k^(s-j)`: a solution on the reduced points becomes one on the
/// translated points.
pub fn lift(r: &BiPoly, zk: &Poly, s: usize, f: &Field) -> Result<BiPoly> {
    let ell = r.y_degree().unwrap_or(0);
    if s < ell {
        return Err(Error::MultiplicityTooSmall {
            multiplicity: s,
            y_degree: ell,
        });
    }
    let mut power = zk.pow(s - ell, f);
    let mut cols = vec![Poly::zero(); ell + 1];
    for j in (0..=ell).rev() {
        cols[j] = r.column(j).mul(&power, f);
        if j > 0 {
            power = power.mul(zk, f);
        }
    }
    Ok(BiPoly::from_columns(cols))
}

/// Undoes the translation: `Q(X, Y - L_k(X))`.
pub fn unshift(q: &BiPoly, lk: &Poly, f: &Field) -> BiPoly {
    q.y_shift(&lk.neg(f), f)
}

/// Support-dependent precomputation for re-encoding at fixed positions.
///
/// With barycentric weights `w_j = 1 / ∏_{l≠j} (α_j - α_l)` over the chosen
/// positions, `L_{n-k}(α_i) = y_i / Z_k(α_i) - Σ_j w_j y_j / (α_i - α_j)`, so the
/// reduced points cost `O(k(n-k))` per word and never need `L_n`.
#[derive(Debug, Clone)]
pub struct ReencodingPlan {
    support: Vec<FieldElement>,
    chosen: Vec<usize>,
    others: Vec<usize>,
    zk: Poly,
    /// `log w_j` per chosen position.
    log_weights: Vec<u32>,
    /// `Z_k(α_i)` per other position (never zero).
    zk_at_others: Vec<FieldElement>,
    /// Row `j` holds `w_j Z_k / (X - α_j)`, the Lagrange basis polynomial.
    basis: Vec<Vec<FieldElement>>,
}

/// Output of [`ReencodingPlan::reencode`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Reencoded {
    pub lk: Poly,
    pub reduced_points: Vec<Point>,
}

impl ReencodingPlan {
    pub fn new(support: &[FieldElement], k: usize, positions: Option<&[usize]>, f: &Field) -> Result<Self> {
        let n = support.len();
        let (chosen, others) = check_positions(n, k, positions)?;
        let chosen_x: Vec<FieldElement> = chosen.iter().map(|&i| support[i]).collect();
        let zk = vanishing(&chosen_x, 1, f)?;
        let mut log_weights = Vec::with_capacity(k);
        let mut basis = Vec::with_capacity(k);
        for (j, &aj) in chosen_x.iter().enumerate() {
            let mut den = FieldElement::ONE;
            for (l, &al) in chosen_x.iter().enumerate() {
                if l != j {
                    den = f.mul(den, f.sub(aj, al));
                }
            }
            let w = f.inv(den)?;
            log_weights.push(f.log(w).unwrap());
            let (q, _) = zk.divrem(&Poly::linear(aj), f)?;
            let mut row = q.scale(w, f).into_coeffs();
            row.resize(k, FieldElement::ZERO);
            basis.push(row);
        }
        let zk_at_others = others.iter().map(|&i| zk.eval(support[i], f)).collect();
        Ok(ReencodingPlan {
            support: support.to_vec(),
            chosen,
            others,
            zk,
            log_weights,
            zk_at_others,
            basis,
        })
    }

    pub fn k(&self) -> usize {
        self.chosen.len()
    }

    pub fn zk(&self) -> &Poly {
        &self.zk
    }

    pub fn chosen_positions(&self) -> &[usize] {
        &self.chosen
    }

    pub fn other_positions(&self) -> &[usize] {
        &self.others
    }

    /// The interpolant `L_k` of `y` on the chosen positions.
    pub fn lk(&self, y: &[FieldElement], f: &Field) -> Poly {
        let k = self.chosen.len();
        let mut acc = vec![0u16; k];
        for (row, &i) in self.basis.iter().zip(&self.chosen) {
            let Some(ly) = f.log(y[i]) else { continue };
            for (a, &b) in acc.iter_mut().zip(row) {
                *a ^= f.mul_by_log(b, ly).value();
            }
        }
        tally(2 * (k * k) as u64);
        Poly::from_coeffs(acc.into_iter().map(FieldElement::from_raw).collect())
    }

    /// `L_{n-k}(α_i)` at every other position.
    pub fn reduced_values(&self, y: &[FieldElement], f: &Field) -> Vec<FieldElement> {
        // c_j = w_j y_j, kept as logs; zero entries drop out of the sum.
        let c: Vec<(usize, u32)> = self
            .chosen
            .iter()
            .zip(&self.log_weights)
            .filter_map(|(&j, &lw)| f.log(y[j]).map(|ly| (j, lw + ly)))
            .collect();
        self.others
            .iter()
            .zip(&self.zk_at_others)
            .map(|(&i, &z)| {
                let ai = self.support[i];
                let mut acc = f.div(y[i], z).expect("Z_k has no root off the chosen set");
                for &(j, lc) in &c {
                    let diff = f.log(f.sub(ai, self.support[j])).unwrap() as i64;
                    acc = FieldElement::from_raw(acc.value() ^ f.alpha_pow(lc as i64 - diff).value());
                }
                tally(2 * c.len() as u64);
                acc
            })
            .collect()
    }

    /// The reduced points and `L_k` for one received word.
    pub fn reencode(&self, y: &[FieldElement], f: &Field) -> Result<Reencoded> {
        if y.len() != self.support.len() {
            return Err(Error::BadDimension(format!(
                "received word has length {}, support has {}",
                y.len(),
                self.support.len()
            )));
        }
        let values = self.reduced_values(y, f);
        let reduced_points = self
            .others
            .iter()
            .zip(values)
            .map(|(&i, v)| (self.support[i], v))
            .collect();
        Ok(Reencoded {
            lk: self.lk(y, f),
            reduced_points,
        })
    }

    /// The translated points `(α_i, r_i)`, with `r_i = Z_k(α_i) L_{n-k}(α_i)`
    /// off the chosen set and zero on it.
    pub fn translated_points(&self, reduced: &[Point], f: &Field) -> Vec<Point> {
        let mut out: Vec<Point> = self.support.iter().map(|&a| (a, FieldElement::ZERO)).collect();
        for ((&i, &z), &(_, v)) in self.others.iter().zip(&self.zk_at_others).zip(reduced) {
            out[i].1 = f.mul(z, v);
        }
        out
    }
}
