//! Bivariate polynomials `Q(X, Y) = Σ_j Q_j(X) Y^j` over GF(2^m).

use crate::error::{Error, Result};
use crate::gf2m::{Field, FieldElement};
use crate::poly::{binom_odd, Poly};

/// Column `j` holds `Q_j(X)`, the coefficient of `Y^j`; the top column is nonzero.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct BiPoly {
    cols: Vec<Poly>,
}

/// A `(1, y_weight)` weighted degree. The Y-weight may be negative.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct WDegree {
    pub y_weight: i64,
}

impl WDegree {
    pub fn new(y_weight: i64) -> Self {
        WDegree { y_weight }
    }
}

/// How [`BiPoly::y_roots_with`] searches for roots.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum RootFinder {
    #[default]
    RothRuckenstein,
    /// Tries every polynomial of degree below the bound. Tiny fields only.
    Exhaustive,
}

impl BiPoly {
    pub fn zero() -> BiPoly {
        BiPoly { cols: Vec::new() }
    }

    /// The polynomial `Y`.
    pub fn y() -> BiPoly {
        BiPoly::from_columns(vec![Poly::zero(), Poly::one()])
    }

    /// `Y^j`.
    pub fn y_pow(j: usize) -> BiPoly {
        let mut cols = vec![Poly::zero(); j + 1];
        cols[j] = Poly::one();
        BiPoly { cols }
    }

    pub fn from_poly(p: Poly) -> BiPoly {
        BiPoly::from_columns(vec![p])
    }

    pub fn from_columns(mut cols: Vec<Poly>) -> BiPoly {
        while cols.last().is_some_and(Poly::is_zero) {
            cols.pop();
        }
        BiPoly { cols }
    }

    pub fn columns(&self) -> &[Poly] {
        &self.cols
    }

    pub fn into_columns(self) -> Vec<Poly> {
        self.cols
    }

    /// `Q_j`, zero past the top column.
    pub fn column(&self, j: usize) -> Poly {
        self.cols.get(j).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.cols.is_empty()
    }

    pub fn y_degree(&self) -> Option<usize> {
        self.cols.len().checked_sub(1)
    }

    pub fn x_degree(&self) -> Option<usize> {
        self.cols.iter().filter_map(Poly::degree).max()
    }

    pub fn add(&self, other: &BiPoly, f: &Field) -> BiPoly {
        let n = self.cols.len().max(other.cols.len());
        BiPoly::from_columns(
            (0..n)
                .map(|j| self.column(j).add(&other.column(j), f))
                .collect(),
        )
    }

    pub fn scale(&self, c: FieldElement, f: &Field) -> BiPoly {
        BiPoly::from_columns(self.cols.iter().map(|p| p.scale(c, f)).collect())
    }

    /// Multiplies every column by the univariate `p`.
    pub fn mul_poly(&self, p: &Poly, f: &Field) -> BiPoly {
        BiPoly::from_columns(self.cols.iter().map(|c| c.mul(p, f)).collect())
    }

    pub fn mul(&self, other: &BiPoly, f: &Field) -> BiPoly {
        if self.is_zero() || other.is_zero() {
            return BiPoly::zero();
        }
        let mut cols = vec![Poly::zero(); self.cols.len() + other.cols.len() - 1];
        for (i, a) in self.cols.iter().enumerate() {
            for (j, b) in other.cols.iter().enumerate() {
                cols[i + j] = cols[i + j].add(&a.mul(b, f), f);
            }
        }
        BiPoly::from_columns(cols)
    }

    pub fn eval(&self, x: FieldElement, y: FieldElement, f: &Field) -> FieldElement {
        let mut acc = FieldElement::ZERO;
        for col in self.cols.iter().rev() {
            acc = f.add(f.mul(acc, y), col.eval(x, f));
        }
        acc
    }

    /// `Q^{[a,b]}(x, y)` without materializing the derivative.
    pub fn hasse_eval(
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
                acc = f.add(acc, self.cols[j].hasse_eval(a, x, f));
            }
        }
        acc
    }

    /// The `(a, b)`-th Hasse derivative, binomials reduced mod 2.
    pub fn hasse(&self, a: usize, b: usize) -> BiPoly {
        BiPoly::from_columns(
            (b..self.cols.len())
                .map(|j| {
                    if binom_odd(j, b) {
                        self.cols[j].hasse(a)
                    } else {
                        Poly::zero()
                    }
                })
                .collect(),
        )
    }

    /// The `b`-th Hasse derivative in `Y`.
    pub fn y_hasse(&self, b: usize) -> BiPoly {
        self.hasse(0, b)
    }

    /// Largest `s` with `Q^{[i,j]}(x, y) = 0` for every `i + j < s`.
    pub fn multiplicity_at(&self, x: FieldElement, y: FieldElement, f: &Field) -> Result<usize> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let mut s = 0;
        loop {
            for i in 0..=s {
                if !self.hasse_eval(i, s - i, x, y, f).is_zero() {
                    return Ok(s);
                }
            }
            s += 1;
        }
    }

    /// `Q(X, Y + L(X))`, by Horner's rule in `Y`.
    pub fn y_shift(&self, l: &Poly, f: &Field) -> BiPoly {
        let mut acc: Vec<Poly> = Vec::with_capacity(self.cols.len());
        for col in self.cols.iter().rev() {
            // acc ← acc·(Y + L) + col
            let mut next = vec![Poly::zero(); acc.len() + 1];
            for (j, c) in acc.iter().enumerate() {
                next[j + 1] = next[j + 1].add(c, f);
                next[j] = next[j].add(&c.mul(l, f), f);
            }
            next[0] = next[0].add(col, f);
            acc = next;
        }
        BiPoly::from_columns(acc)
    }

    /// `Q(X, P(X))`.
    pub fn substitute(&self, p: &Poly, f: &Field) -> Poly {
        let mut acc = Poly::zero();
        for col in self.cols.iter().rev() {
            acc = acc.mul(p, f).add(col, f);
        }
        acc
    }

    /// `max { i + j·w : q_ij ≠ 0 }`.
    pub fn wdeg(&self, w: WDegree) -> Result<i64> {
        self.cols
            .iter()
            .enumerate()
            .filter_map(|(j, c)| c.degree().map(|d| d as i64 + j as i64 * w.y_weight))
            .max()
            .ok_or(Error::ZeroPolynomial)
    }

    /// Every `P` with `deg P < degree_bound` and `Q(X, P(X)) = 0`.
    pub fn y_roots(&self, degree_bound: usize, f: &Field) -> Result<Vec<Poly>> {
        self.y_roots_with(degree_bound, RootFinder::RothRuckenstein, f)
    }

    pub fn y_roots_with(
        &self,
        degree_bound: usize,
        method: RootFinder,
        f: &Field,
    ) -> Result<Vec<Poly>> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if degree_bound == 0 {
            return Err(Error::BadDimension("Y-root degree bound must be at least 1".into()));
        }
        let mut roots = match method {
            RootFinder::RothRuckenstein => {
                let mut out = Vec::new();
                let mut prefix = Vec::with_capacity(degree_bound);
                roth_ruckenstein(self.clone(), degree_bound, &mut prefix, &mut out, f);
                out.retain(|p| self.substitute(p, f).is_zero());
                out
            }
            RootFinder::Exhaustive => self.exhaustive_roots(degree_bound, f),
        };
        roots.sort();
        roots.dedup();
        Ok(roots)
    }

    fn exhaustive_roots(&self, degree_bound: usize, f: &Field) -> Vec<Poly> {
        let q = f.order();
        let total = q.checked_pow(degree_bound as u32).expect("search space too large");
        let mut out = Vec::new();
        for mut idx in 0..total {
            let mut coeffs = Vec::with_capacity(degree_bound);
            for _ in 0..degree_bound {
                coeffs.push(FieldElement::from_raw((idx % q) as u16));
                idx /= q;
            }
            let p = Poly::from_coeffs(coeffs);
            if self.substitute(&p, f).is_zero() {
                out.push(p);
            }
        }
        out
    }

    /// Divides by the largest power of `X` dividing every column.
    fn strip_x_power(self) -> BiPoly {
        let r = self
            .cols
            .iter()
            .filter_map(Poly::x_valuation)
            .min()
            .unwrap_or(0);
        if r == 0 {
            return self;
        }
        BiPoly::from_columns(
            self.cols
                .into_iter()
                .map(|c| {
                    let coeffs = c.into_coeffs();
                    Poly::from_coeffs(coeffs.get(r..).map(<[_]>::to_vec).unwrap_or_default())
                })
                .collect(),
        )
    }
}

/// Roth–Ruckenstein: the next coefficient of a root is a root of `Q(0, Y)`;
/// recurse on `Q(X, XY + γ) / X^r`.
fn roth_ruckenstein(
    q: BiPoly,
    remaining: usize,
    prefix: &mut Vec<FieldElement>,
    out: &mut Vec<Poly>,
    f: &Field,
) {
    let q = q.strip_x_power();
    if remaining == 0 || q.is_zero() {
        out.push(Poly::from_coeffs(prefix.clone()));
        return;
    }
    let at_zero = Poly::from_coeffs(q.cols.iter().map(|c| c.coeff(0)).collect());
    if at_zero.degree().unwrap_or(0) == 0 {
        return;
    }
    for gamma in f.elements() {
        if !at_zero.eval(gamma, f).is_zero() {
            continue;
        }
        let shifted = q.y_shift(&Poly::constant(gamma), f);
        // Y → XY multiplies column j by X^j.
        let next = BiPoly::from_columns(
            shifted
                .cols
                .iter()
                .enumerate()
                .map(|(j, c)| c.shift(j))
                .collect(),
        );
        prefix.push(gamma);
        roth_ruckenstein(next, remaining - 1, prefix, out, f);
        prefix.pop();
    }
}
