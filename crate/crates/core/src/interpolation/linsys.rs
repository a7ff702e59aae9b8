use super::{InterpolationProblem, Solution};
use crate::bivariate::BiPoly;
use crate::error::{Error, Result};
use crate::gf2m::{tally, Field, FieldElement};
use crate::poly::{binom_odd, Poly};

/// Solves by Gaussian elimination on the constraint matrix whose rows are the
/// Hasse conditions `Q^{[a,b]}(x_i, y_i) = 0`.
pub fn solve_linsys(prob: &InterpolationProblem, f: &Field) -> Result<Solution> {
    prob.ensure_solvable()?;
    let q = nullspace_solution(prob, f).ok_or(Error::NoSolution)?;
    Ok(Solution {
        q,
        constraints: prob.constraint_count(),
    })
}

/// A nonzero kernel vector of the constraint system, if one exists, whether or
/// not the counting bound guarantees it. The first free unknown is set to 1
/// and the others to 0.
pub fn nullspace_solution(prob: &InterpolationProblem, f: &Field) -> Option<BiPoly> {
    let layout = ColumnLayout::new(prob.bounds());
    let cols = layout.total;
    if cols == 0 {
        return None;
    }
    let mut m = build_matrix(prob, &layout, f);
    let rows = prob.constraint_count();
    let pivots = echelon(&mut m, rows, cols, f);

    let mut is_pivot = vec![false; cols];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    let free = is_pivot.iter().position(|&p| !p)?;
    let mut x = vec![FieldElement::ZERO; cols];
    x[free] = FieldElement::ONE;
    for (r, &p) in pivots.iter().enumerate().rev() {
        let row = &m[r * cols..(r + 1) * cols];
        let mut acc = 0u16;
        for c in p + 1..cols {
            acc ^= f.mul_uncounted(FieldElement::from_raw(row[c]), x[c]).value();
        }
        tally(2 * (cols - p - 1) as u64);
        // Pivot entries are normalized to 1.
        x[p] = FieldElement::from_raw(acc);
    }
    Some(layout.to_bipoly(&x))
}

/// Unknown `q_{i,j}` sits at `offset[j] + i`.
struct ColumnLayout {
    offset: Vec<usize>,
    len: Vec<usize>,
    total: usize,
}

impl ColumnLayout {
    fn new(bounds: &[i64]) -> Self {
        let len: Vec<usize> = bounds.iter().map(|&d| (d + 1).max(0) as usize).collect();
        let mut offset = Vec::with_capacity(len.len());
        let mut total = 0;
        for &l in &len {
            offset.push(total);
            total += l;
        }
        ColumnLayout { offset, len, total }
    }

    fn to_bipoly(&self, x: &[FieldElement]) -> BiPoly {
        BiPoly::from_columns(
            self.offset
                .iter()
                .zip(&self.len)
                .map(|(&o, &l)| Poly::from_coeffs(x[o..o + l].to_vec()))
                .collect(),
        )
    }
}

fn powers(base: FieldElement, n: usize, f: &Field) -> Vec<FieldElement> {
    let mut out = Vec::with_capacity(n);
    let mut acc = FieldElement::ONE;
    for _ in 0..n {
        out.push(acc);
        acc = f.mul(acc, base);
    }
    out
}

fn build_matrix(prob: &InterpolationProblem, layout: &ColumnLayout, f: &Field) -> Vec<u16> {
    let cols = layout.total;
    let max_len = layout.len.iter().copied().max().unwrap_or(0);
    let mut m = vec![0u16; prob.constraint_count() * cols];
    for (r, (p, a, b)) in prob.constraints().enumerate() {
        let (x, y) = prob.points()[p];
        let xp = powers(x, max_len, f);
        let yp = powers(y, layout.len.len(), f);
        let row = &mut m[r * cols..(r + 1) * cols];
        for j in (b..layout.len.len()).filter(|&j| binom_odd(j, b)) {
            let yj = yp[j - b];
            for i in (a..layout.len[j]).filter(|&i| binom_odd(i, a)) {
                row[layout.offset[j] + i] = f.mul(xp[i - a], yj).value();
            }
        }
    }
    m
}

/// Row echelon form with unit pivots; returns the pivot column of each leading row.
fn echelon(m: &mut [u16], rows: usize, cols: usize, f: &Field) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(pr) = (r..rows).find(|&i| m[i * cols + c] != 0) else {
            continue;
        };
        if pr != r {
            for k in c..cols {
                m.swap(pr * cols + k, r * cols + k);
            }
        }
        let inv = f.inv(FieldElement::from_raw(m[r * cols + c])).unwrap();
        let linv = f.log(inv).unwrap();
        for k in c..cols {
            m[r * cols + k] = f.mul_by_log(FieldElement::from_raw(m[r * cols + k]), linv).value();
        }
        tally((cols - c) as u64);
        let (head, tail) = m.split_at_mut((r + 1) * cols);
        let pivot_row = &head[r * cols..];
        for row in tail.chunks_exact_mut(cols) {
            let lead = row[c];
            if lead == 0 {
                continue;
            }
            let ll = f.log(FieldElement::from_raw(lead)).unwrap();
            for k in c..cols {
                row[k] ^= f.mul_by_log(FieldElement::from_raw(pivot_row[k]), ll).value();
            }
            tally(2 * (cols - c) as u64);
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}
