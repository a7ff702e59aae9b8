//! Bivariate interpolation with multiplicities under per-column degree caps.
//!
//! Two interchangeable engines solve the same [`InterpolationProblem`]: dense
//! Gaussian elimination ([`solve_linsys`]) and Koetter's incremental algorithm
//! ([`solve_koetter`]). Neither knows anything about re-encoding.

mod koetter;
mod linsys;

use std::fmt;
use std::str::FromStr;

pub use koetter::{solve_koetter, solve_koetter_with, KoetterOptions};
pub use linsys::{nullspace_solution, solve_linsys};

use crate::bivariate::BiPoly;
use crate::error::{Error, Result};
use crate::gf2m::{Field, FieldElement};
use crate::poly::{lagrange, vanishing};

/// Find a nonzero `Q = Σ_{j<=ℓ} Q_j Y^j` with `deg Q_j <= d_j` having every
/// point as a root of multiplicity at least `s`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InterpolationProblem {
    points: Vec<(FieldElement, FieldElement)>,
    multiplicity: usize,
    bounds: Vec<i64>,
}

impl InterpolationProblem {
    /// `bounds[j]` caps `deg Q_j`; a negative cap forces `Q_j = 0`.
    pub fn new(
        points: Vec<(FieldElement, FieldElement)>,
        multiplicity: usize,
        bounds: Vec<i64>,
    ) -> Result<Self> {
        if multiplicity == 0 {
            return Err(Error::BadDimension("multiplicity must be at least 1".into()));
        }
        if bounds.is_empty() {
            return Err(Error::BadDimension("need at least one degree bound".into()));
        }
        let mut xs: Vec<_> = points.iter().map(|p| p.0).collect();
        xs.sort();
        if xs.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::DuplicateAbscissa);
        }
        Ok(InterpolationProblem {
            points,
            multiplicity,
            bounds,
        })
    }

    pub fn points(&self) -> &[(FieldElement, FieldElement)] {
        &self.points
    }

    pub fn multiplicity(&self) -> usize {
        self.multiplicity
    }

    pub fn bounds(&self) -> &[i64] {
        &self.bounds
    }

    /// `ℓ`, the largest admissible Y-degree.
    pub fn y_degree_cap(&self) -> usize {
        self.bounds.len() - 1
    }

    /// `|points| · s(s+1)/2`.
    pub fn constraint_count(&self) -> usize {
        self.points.len() * self.multiplicity * (self.multiplicity + 1) / 2
    }

    /// `Σ_j max(d_j + 1, 0)`.
    pub fn unknown_count(&self) -> usize {
        self.bounds.iter().map(|&d| (d + 1).max(0) as usize).sum()
    }

    /// More unknowns than constraints, which guarantees a nonzero solution.
    pub fn is_solvable(&self) -> bool {
        self.unknown_count() > self.constraint_count()
    }

    pub(crate) fn ensure_solvable(&self) -> Result<()> {
        if self.is_solvable() {
            Ok(())
        } else {
            Err(Error::NotSolvable {
                unknowns: self.unknown_count(),
                constraints: self.constraint_count(),
            })
        }
    }

    /// The constraints `(point index, a, b)`: points in order, and for each
    /// point the pairs with `a + b < s` in lexicographic order.
    pub fn constraints(&self) -> impl Iterator<Item = (usize, usize, usize)> + '_ {
        let s = self.multiplicity;
        (0..self.points.len()).flat_map(move |p| {
            (0..s).flat_map(move |a| (0..s - a).map(move |b| (p, a, b)))
        })
    }

    /// Whether `q` is nonzero and respects every column cap.
    pub fn within_bounds(&self, q: &BiPoly) -> bool {
        match q.y_degree() {
            None => false,
            Some(dy) if dy > self.y_degree_cap() => false,
            Some(_) => q
                .columns()
                .iter()
                .zip(&self.bounds)
                .all(|(c, &d)| c.fits_degree(d)),
        }
    }
}

/// An interpolation polynomial plus the number of constraints the engine processed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Solution {
    pub q: BiPoly,
    pub constraints: usize,
}

/// Which interpolation engine to run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Engine {
    LinSys,
    Koetter,
}

impl Engine {
    pub const ALL: [Engine; 2] = [Engine::LinSys, Engine::Koetter];

    pub fn solve(self, prob: &InterpolationProblem, f: &Field) -> Result<Solution> {
        match self {
            Engine::LinSys => solve_linsys(prob, f),
            Engine::Koetter => solve_koetter(prob, f),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Engine::LinSys => "linsys",
            Engine::Koetter => "koetter",
        }
    }
}

impl fmt::Display for Engine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Engine {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "linsys" => Ok(Engine::LinSys),
            "koetter" => Ok(Engine::Koetter),
            other => Err(Error::Parse(format!("unknown engine {other:?}"))),
        }
    }
}

/// Every Hasse derivative of order `< s` vanishes at every point.
pub fn verify_pointwise(prob: &InterpolationProblem, q: &BiPoly, f: &Field) -> bool {
    prob.constraints().all(|(p, a, b)| {
        let (x, y) = prob.points[p];
        q.hasse_eval(a, b, x, y, f).is_zero()
    })
}

/// `∏ (X - x_i)^(s-b)` divides `Q^{[b]}(X, L(X))` for every `b < s`, where `L`
/// interpolates the points.
pub fn verify_divisibility(prob: &InterpolationProblem, q: &BiPoly, f: &Field) -> bool {
    if prob.points.is_empty() {
        return true;
    }
    let l = lagrange(&prob.points, f).expect("abscissae are distinct");
    let xs: Vec<_> = prob.points.iter().map(|p| p.0).collect();
    (0..prob.multiplicity).all(|b| {
        let h = q.y_hasse(b).substitute(&l, f);
        let v = vanishing(&xs, prob.multiplicity - b, f).expect("abscissae are distinct");
        h.divrem(&v, f).expect("vanishing polynomial is nonzero").1.is_zero()
    })
}

/// `q` is a nonzero solution: degree caps hold and every point has
/// multiplicity at least `s`. Both characterizations of the multiplicity
/// conditions are evaluated and must agree.
pub fn verify_solution(prob: &InterpolationProblem, q: &BiPoly, f: &Field) -> bool {
    if q.is_zero() {
        return false;
    }
    let pointwise = verify_pointwise(prob, q, f);
    let divisible = verify_divisibility(prob, q, f);
    assert_eq!(
        pointwise, divisible,
        "pointwise and divisibility checks disagree"
    );
    pointwise && prob.within_bounds(q)
}
