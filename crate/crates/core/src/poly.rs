//! Dense univariate polynomials over GF(2^m).

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::gf2m::{tally, Field, FieldElement};

/// Coefficients low-to-high with no trailing zeros; the zero polynomial is empty.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default, PartialOrd, Ord)]
pub struct Poly {
    coeffs: Vec<FieldElement>,
}

impl Poly {
    pub fn zero() -> Poly {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Poly {
        Poly::constant(FieldElement::ONE)
    }

    pub fn constant(c: FieldElement) -> Poly {
        Poly::from_coeffs(vec![c])
    }

    /// The polynomial `X`.
    pub fn x() -> Poly {
        Poly::monomial(FieldElement::ONE, 1)
    }

    pub fn monomial(c: FieldElement, degree: usize) -> Poly {
        let mut coeffs = vec![FieldElement::ZERO; degree + 1];
        coeffs[degree] = c;
        Poly::from_coeffs(coeffs)
    }

    /// `X - root`.
    pub fn linear(root: FieldElement) -> Poly {
        Poly::from_coeffs(vec![root, FieldElement::ONE])
    }

    pub fn from_coeffs(mut coeffs: Vec<FieldElement>) -> Poly {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn coeffs(&self) -> &[FieldElement] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<FieldElement> {
        self.coeffs
    }

    /// `None` stands for the degree of the zero polynomial, below every integer.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// `deg(self) <= bound`, vacuously true for zero.
    pub fn fits_degree(&self, bound: i64) -> bool {
        match self.degree() {
            None => true,
            Some(d) => (d as i64) <= bound,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, i: usize) -> FieldElement {
        self.coeffs.get(i).copied().unwrap_or(FieldElement::ZERO)
    }

    pub fn leading(&self) -> Option<FieldElement> {
        self.coeffs.last().copied()
    }

    /// Number of low-order zero coefficients (the power of `X` dividing `self`).
    pub fn x_valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn add(&self, other: &Poly, _f: &Field) -> Poly {
        let (long, short) = if self.coeffs.len() >= other.coeffs.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (c, s) in coeffs.iter_mut().zip(&short.coeffs) {
            *c = FieldElement::from_raw(c.value() ^ s.value());
        }
        tally(short.coeffs.len() as u64);
        Poly::from_coeffs(coeffs)
    }

    pub fn sub(&self, other: &Poly, f: &Field) -> Poly {
        self.add(other, f)
    }

    /// Additive inverse; the identity in characteristic 2.
    pub fn neg(&self, _f: &Field) -> Poly {
        self.clone()
    }

    pub fn scale(&self, c: FieldElement, f: &Field) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        let lc = f.log(c).unwrap();
        tally(self.coeffs.len() as u64);
        Poly::from_coeffs(self.coeffs.iter().map(|&a| f.mul_by_log(a, lc)).collect())
    }

    pub fn mul(&self, other: &Poly, f: &Field) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![0u16; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            let Some(la) = f.log(a) else { continue };
            for (o, &b) in out[i..].iter_mut().zip(&other.coeffs) {
                *o ^= f.mul_by_log(b, la).value();
            }
        }
        tally(2 * (self.coeffs.len() * other.coeffs.len()) as u64);
        Poly::from_coeffs(out.into_iter().map(FieldElement::from_raw).collect())
    }

    /// Multiplies by `X^k`.
    pub fn shift(&self, k: usize) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![FieldElement::ZERO; k];
        coeffs.extend_from_slice(&self.coeffs);
        Poly { coeffs }
    }

    /// Multiplies by `X - root`.
    pub fn mul_linear(&self, root: FieldElement, f: &Field) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let n = self.coeffs.len();
        let mut coeffs = vec![FieldElement::ZERO; n + 1];
        coeffs[n] = self.coeffs[n - 1];
        for i in (0..n).rev() {
            let lower = if i > 0 { self.coeffs[i - 1] } else { FieldElement::ZERO };
            coeffs[i] = f.sub(lower, f.mul(root, self.coeffs[i]));
        }
        Poly::from_coeffs(coeffs)
    }

    pub fn pow(&self, e: usize, f: &Field) -> Poly {
        let mut out = Poly::one();
        for _ in 0..e {
            out = out.mul(self, f);
        }
        out
    }

    /// Horner evaluation.
    pub fn eval(&self, x: FieldElement, f: &Field) -> FieldElement {
        let mut acc = FieldElement::ZERO;
        for &c in self.coeffs.iter().rev() {
            acc = f.add(f.mul(acc, x), c);
        }
        acc
    }

    /// The `a`-th Hasse derivative evaluated at `x`: `Σ_i C(i, a) c_i x^(i-a)`.
    pub fn hasse_eval(&self, a: usize, x: FieldElement, f: &Field) -> FieldElement {
        if a == 0 {
            return self.eval(x, f);
        }
        let mut acc = FieldElement::ZERO;
        for i in (a..self.coeffs.len()).rev() {
            acc = f.mul(acc, x);
            if binom_odd(i, a) {
                acc = f.add(acc, self.coeffs[i]);
            }
        }
        acc
    }

    /// The `a`-th Hasse derivative as a polynomial.
    pub fn hasse(&self, a: usize) -> Poly {
        Poly::from_coeffs(
            (a..self.coeffs.len())
                .map(|i| {
                    if binom_odd(i, a) {
                        self.coeffs[i]
                    } else {
                        FieldElement::ZERO
                    }
                })
                .collect(),
        )
    }

    /// Long division: `self = quot * den + rem` with `deg(rem) < deg(den)`.
    pub fn divrem(&self, den: &Poly, f: &Field) -> Result<(Poly, Poly)> {
        let Some(dd) = den.degree() else {
            return Err(Error::DivisionByZero);
        };
        let Some(dn) = self.degree() else {
            return Ok((Poly::zero(), Poly::zero()));
        };
        if dn < dd {
            return Ok((Poly::zero(), self.clone()));
        }
        let lead_inv = f.inv(den.coeffs[dd])?;
        let mut rem = self.coeffs.clone();
        let mut quot = vec![FieldElement::ZERO; dn - dd + 1];
        for shift in (0..=dn - dd).rev() {
            let top = rem[shift + dd];
            if top.is_zero() {
                continue;
            }
            let q = f.mul(top, lead_inv);
            quot[shift] = q;
            let lq = f.log(q).unwrap();
            for (r, &d) in rem[shift..shift + dd].iter_mut().zip(&den.coeffs) {
                *r = FieldElement::from_raw(r.value() ^ f.mul_by_log(d, lq).value());
            }
            tally(2 * dd as u64);
            rem[shift + dd] = FieldElement::ZERO;
        }
        rem.truncate(dd);
        Ok((Poly::from_coeffs(quot), Poly::from_coeffs(rem)))
    }

    /// Quotient of a division known to be exact.
    pub fn exact_div(&self, den: &Poly, f: &Field) -> Result<Poly> {
        let (q, r) = self.divrem(den, f)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::InexactDivision)
        }
    }
}

/// `C(i, a) mod 2` by Lucas' theorem: odd iff the bits of `a` are a subset of those of `i`.
#[inline]
pub fn binom_odd(i: usize, a: usize) -> bool {
    i & a == a
}

fn ensure_distinct(xs: impl IntoIterator<Item = FieldElement>) -> Result<()> {
    let mut seen = HashSet::new();
    for x in xs {
        if !seen.insert(x) {
            return Err(Error::DuplicateAbscissa);
        }
    }
    Ok(())
}

/// The unique polynomial of degree `< points.len()` through `points`,
/// by Newton divided differences.
pub fn lagrange(points: &[(FieldElement, FieldElement)], f: &Field) -> Result<Poly> {
    if points.is_empty() {
        return Err(Error::BadDimension(
            "interpolation needs at least one point".into(),
        ));
    }
    ensure_distinct(points.iter().map(|p| p.0))?;
    let n = points.len();
    let xs: Vec<FieldElement> = points.iter().map(|p| p.0).collect();
    let mut dd: Vec<FieldElement> = points.iter().map(|p| p.1).collect();
    for j in 1..n {
        for i in (j..n).rev() {
            let num = f.sub(dd[i], dd[i - 1]);
            dd[i] = f.div(num, f.sub(xs[i], xs[i - j]))?;
        }
    }
    // Nested form: c_{n-1}, then P = P·(X - x_i) + c_i.
    let mut coeffs = vec![FieldElement::ZERO; n];
    coeffs[0] = dd[n - 1];
    for i in (0..n - 1).rev() {
        let len = n - 1 - i;
        for t in (0..=len).rev() {
            let lower = if t > 0 { coeffs[t - 1] } else { FieldElement::ZERO };
            let here = if t < len { coeffs[t] } else { FieldElement::ZERO };
            coeffs[t] = f.sub(lower, f.mul(xs[i], here));
        }
        coeffs[0] = f.add(coeffs[0], dd[i]);
    }
    Ok(Poly::from_coeffs(coeffs))
}

/// `∏ (X - r)^multiplicity` over distinct `roots`.
pub fn vanishing(roots: &[FieldElement], multiplicity: usize, f: &Field) -> Result<Poly> {
    ensure_distinct(roots.iter().copied())?;
    let mut out = Poly::one();
    for &r in roots {
        for _ in 0..multiplicity {
            out = out.mul_linear(r, f);
        }
    }
    Ok(out)
}
