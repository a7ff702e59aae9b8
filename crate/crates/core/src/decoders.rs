//! Reed-Solomon encoding and the interpolation decoders: Welch-Berlekamp in
//! three re-encoding modes, Sudan, and Guruswami-Sudan.

use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, OnceLock};

use crate::bivariate::BiPoly;
use crate::error::{Error, FailureReason, Result};
use crate::gf2m::{Field, FieldElement};
use crate::interpolation::{Engine, InterpolationProblem};
use crate::poly::Poly;
use crate::reencoding::{lift, reduced_bounds, unshift, ReencodingPlan};

/// An evaluation code `{(P(α_1), …, P(α_n)) : deg P < k}`.
#[derive(Debug, Clone)]
pub struct RSCode {
    field: Arc<Field>,
    support: Vec<FieldElement>,
    k: usize,
    plan: OnceLock<ReencodingPlan>,
}

impl RSCode {
    pub fn new(field: Arc<Field>, support: Vec<FieldElement>, k: usize) -> Result<RSCode> {
        let n = support.len();
        if k == 0 || k >= n || n > field.order() {
            return Err(Error::BadDimension(format!(
                "need 1 <= k < n <= {}, got k={k}, n={n}",
                field.order()
            )));
        }
        let mut seen = vec![false; field.order()];
        for &a in &support {
            let slot = &mut seen[a.value() as usize];
            if *slot {
                return Err(Error::DuplicateAbscissa);
            }
            *slot = true;
        }
        Ok(RSCode {
            field,
            support,
            k,
            plan: OnceLock::new(),
        })
    }

    /// Support `α^0, …, α^(n-1)`.
    pub fn primitive(field: Arc<Field>, n: usize, k: usize) -> Result<RSCode> {
        if n >= field.order() {
            return Err(Error::BadDimension(format!(
                "a primitive support has at most {} points, got n={n}",
                field.order() - 1
            )));
        }
        let support = (0..n as i64).map(|i| field.alpha_pow(i)).collect();
        RSCode::new(field, support, k)
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn field_arc(&self) -> &Arc<Field> {
        &self.field
    }

    pub fn support(&self) -> &[FieldElement] {
        &self.support
    }

    pub fn n(&self) -> usize {
        self.support.len()
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Unique-decoding radius `⌊(n - k) / 2⌋`.
    pub fn t(&self) -> usize {
        (self.n() - self.k) / 2
    }

    /// Re-encoding on the first `k` positions, built on first use.
    pub fn plan(&self) -> &ReencodingPlan {
        self.plan.get_or_init(|| {
            ReencodingPlan::new(&self.support, self.k, None, &self.field)
                .expect("code dimensions were validated")
        })
    }

    fn check_word(&self, y: &[FieldElement]) -> Result<()> {
        if y.len() != self.n() {
            return Err(Error::BadDimension(format!(
                "received word has length {}, code length is {}",
                y.len(),
                self.n()
            )));
        }
        Ok(())
    }
}

pub fn rs_encode(code: &RSCode, message: &Poly) -> Result<Vec<FieldElement>> {
    if !message.fits_degree(code.k as i64 - 1) {
        return Err(Error::MessageTooLong {
            degree: message.degree().unwrap_or(0),
            k: code.k,
        });
    }
    Ok(code
        .support
        .iter()
        .map(|&a| message.eval(a, &code.field))
        .collect())
}

/// Number of positions where the two words differ.
pub fn hamming_distance(a: &[FieldElement], b: &[FieldElement]) -> usize {
    a.iter().zip(b).filter(|(x, y)| x != y).count()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Mode {
    /// Interpolate the received points directly.
    None,
    /// Re-encode, then interpolate the translated points with the same problem size.
    Original,
    /// Re-encode and interpolate the reduced problem on `n - k` points.
    Revisited,
}

impl Mode {
    pub const ALL: [Mode; 3] = [Mode::None, Mode::Original, Mode::Revisited];

    pub fn name(self) -> &'static str {
        match self {
            Mode::None => "none",
            Mode::Original => "original",
            Mode::Revisited => "revisited",
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "none" | "usual" => Ok(Mode::None),
            "original" => Ok(Mode::Original),
            "revisited" => Ok(Mode::Revisited),
            other => Err(Error::Parse(format!("unknown re-encoding mode {other:?}"))),
        }
    }
}

/// Result of a unique decode. Equality compares what was decoded, not how.
#[derive(Debug, Clone)]
pub struct DecodeOutcome {
    pub message: Option<Poly>,
    pub failure: Option<FailureReason>,
    pub errors_corrected: usize,
    pub engine: Engine,
    pub mode: Mode,
    /// Interpolation constraints processed.
    pub constraints: usize,
}

impl PartialEq for DecodeOutcome {
    fn eq(&self, other: &Self) -> bool {
        self.message == other.message && self.errors_corrected == other.errors_corrected
    }
}

impl Eq for DecodeOutcome {}

impl DecodeOutcome {
    pub fn is_success(&self) -> bool {
        self.message.is_some()
    }

    /// The decoded message, or `DecodingFailure` with the recorded reason.
    pub fn into_message(self) -> Result<Poly> {
        match self.message {
            Some(m) => Ok(m),
            None => Err(Error::DecodingFailure(
                self.failure.unwrap_or(FailureReason::NoInterpolant),
            )),
        }
    }
}

/// Caps `(n - t - 1, n - t - k)` on `(Q_0, Q_1)`.
pub fn wb_bounds(code: &RSCode) -> Vec<i64> {
    let (n, k, t) = (code.n() as i64, code.k as i64, code.t() as i64);
    vec![n - t - 1, n - t - k]
}

/// Welch-Berlekamp decoding up to `t` errors.
pub fn wb_decode(code: &RSCode, y: &[FieldElement], engine: Engine, mode: Mode) -> Result<DecodeOutcome> {
    code.check_word(y)?;
    let f = code.field();
    let bounds = wb_bounds(code);
    let mut outcome = DecodeOutcome {
        message: None,
        failure: None,
        errors_corrected: 0,
        engine,
        mode,
        constraints: 0,
    };

    let q = match mode {
        Mode::None => {
            let pts: Vec<_> = code.support.iter().copied().zip(y.iter().copied()).collect();
            let prob = InterpolationProblem::new(pts, 1, bounds)?;
            outcome.constraints = prob.constraint_count();
            engine.solve(&prob, f).map(|s| s.q)
        }
        Mode::Original => {
            let plan = code.plan();
            let re = plan.reencode(y, f)?;
            let pts = plan.translated_points(&re.reduced_points, f);
            let prob = InterpolationProblem::new(pts, 1, bounds)?;
            outcome.constraints = prob.constraint_count();
            engine.solve(&prob, f).map(|s| unshift(&s.q, &re.lk, f))
        }
        Mode::Revisited => {
            let plan = code.plan();
            let re = plan.reencode(y, f)?;
            let prob = InterpolationProblem::new(re.reduced_points, 1, reduced_bounds(&bounds, 1, code.k)?)?;
            outcome.constraints = prob.constraint_count();
            engine
                .solve(&prob, f)
                .and_then(|s| lift(&s.q, plan.zk(), 1, f))
                .map(|q| unshift(&q, &re.lk, f))
        }
    };
    let Ok(q) = q else {
        outcome.failure = Some(FailureReason::NoInterpolant);
        return Ok(outcome);
    };
    match wb_message(code, y, &q) {
        Ok((message, errors)) => {
            outcome.message = Some(message);
            outcome.errors_corrected = errors;
        }
        Err(reason) => outcome.failure = Some(reason),
    }
    Ok(outcome)
}

/// `-Q_0 / Q_1` with the failure checks of the unique decoder.
///
/// `Q` interpolates every `(α_i, y_i)`, so wherever `Q_1(α_i) ≠ 0` the quotient
/// already takes the value `y_i`; only roots of `Q_1` need checking.
fn wb_message(code: &RSCode, y: &[FieldElement], q: &BiPoly) -> std::result::Result<(Poly, usize), FailureReason> {
    let f = code.field();
    let q1 = q.column(1);
    if q1.is_zero() {
        return Err(FailureReason::ZeroLocator);
    }
    let (message, rem) = q
        .column(0)
        .neg(f)
        .divrem(&q1, f)
        .map_err(|_| FailureReason::ZeroLocator)?;
    if !rem.is_zero() {
        return Err(FailureReason::InexactDivision);
    }
    if !message.fits_degree(code.k as i64 - 1) {
        return Err(FailureReason::MessageTooLong);
    }
    let errors = code
        .support
        .iter()
        .zip(y)
        .filter(|&(&a, &yi)| q1.eval(a, f).is_zero() && message.eval(a, f) != yi)
        .count();
    if errors > code.t() {
        return Err(FailureReason::TooManyErrors);
    }
    Ok((message, errors))
}

/// Caps `s(n - T) - 1 - j(k - 1)` for `j = 0..=ℓ`.
fn list_bounds(code: &RSCode, radius: usize, s: usize, ell: usize) -> Vec<i64> {
    let (n, k) = (code.n() as i64, code.k as i64);
    (0..=ell as i64)
        .map(|j| s as i64 * (n - radius as i64) - 1 - j * (k - 1))
        .collect()
}

fn check_radius(code: &RSCode, radius: usize) -> Result<()> {
    if radius < code.t() || radius >= code.n() {
        return Err(Error::RadiusInfeasible {
            radius,
            n: code.n(),
            k: code.k,
        });
    }
    Ok(())
}

/// Smallest `ℓ ≥ 1` whose caps make the problem solvable, up to `max_ell`.
fn minimal_list_size(code: &RSCode, radius: usize, s: usize, max_ell: usize) -> Option<usize> {
    let c = code.n() * s * (s + 1) / 2;
    let mut unknowns = 0usize;
    let bounds = list_bounds(code, radius, s, max_ell);
    for (ell, &d) in bounds.iter().enumerate() {
        if d < 0 {
            // Later columns are capped even lower; nothing more to gain.
            return None;
        }
        unknowns += d as usize + 1;
        if ell >= 1 && unknowns > c {
            return Some(ell);
        }
    }
    None
}

/// Parameters of a list decoder.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GSParams {
    pub multiplicity: usize,
    pub list_size: usize,
    pub radius: usize,
}

impl GSParams {
    pub fn bounds(&self, code: &RSCode) -> Vec<i64> {
        list_bounds(code, self.radius, self.multiplicity, self.list_size)
    }
}

/// The smallest multiplicity, then the smallest list size, for which the
/// counting bound guarantees an interpolant at radius `radius`.
pub fn gs_params(code: &RSCode, radius: usize) -> Result<GSParams> {
    check_radius(code, radius)?;
    for s in 1..=code.n() {
        if let Some(ell) = minimal_list_size(code, radius, s, s * code.n()) {
            return Ok(GSParams {
                multiplicity: s,
                list_size: ell,
                radius,
            });
        }
    }
    Err(Error::RadiusInfeasible {
        radius,
        n: code.n(),
        k: code.k,
    })
}

/// Sudan parameters: multiplicity one and the smallest workable list size.
pub fn sudan_params(code: &RSCode, radius: usize) -> Result<GSParams> {
    check_radius(code, radius)?;
    minimal_list_size(code, radius, 1, code.n())
        .map(|ell| GSParams {
            multiplicity: 1,
            list_size: ell,
            radius,
        })
        .ok_or(Error::RadiusInfeasible {
            radius,
            n: code.n(),
            k: code.k,
        })
}

/// Candidate messages of `q` whose codewords lie within `radius` of `y`.
fn filter_roots(code: &RSCode, y: &[FieldElement], q: &BiPoly, radius: usize) -> Result<Vec<Poly>> {
    let mut out = Vec::new();
    for p in q.y_roots(code.k, code.field())? {
        if hamming_distance(&rs_encode(code, &p)?, y) <= radius {
            out.push(p);
        }
    }
    Ok(out)
}

/// Sudan list decoding at radius `radius ≥ t`.
pub fn sudan_decode(code: &RSCode, y: &[FieldElement], radius: usize) -> Result<Vec<Poly>> {
    code.check_word(y)?;
    let params = sudan_params(code, radius)?;
    let pts: Vec<_> = code.support.iter().copied().zip(y.iter().copied()).collect();
    let prob = InterpolationProblem::new(pts, 1, params.bounds(code))?;
    let q = Engine::Koetter.solve(&prob, code.field())?.q;
    filter_roots(code, y, &q, radius)
}

/// Guruswami-Sudan list decoding at radius `radius ≥ t`, re-encoding when the
/// multiplicity allows it.
pub fn gs_decode(code: &RSCode, y: &[FieldElement], radius: usize) -> Result<Vec<Poly>> {
    gs_decode_with(code, y, radius, Engine::Koetter)
}

pub fn gs_decode_with(code: &RSCode, y: &[FieldElement], radius: usize, engine: Engine) -> Result<Vec<Poly>> {
    code.check_word(y)?;
    let f = code.field();
    let params = gs_params(code, radius)?;
    let s = params.multiplicity;
    let bounds = params.bounds(code);
    let q = if s >= params.list_size {
        let plan = code.plan();
        let re = plan.reencode(y, f)?;
        let prob = InterpolationProblem::new(re.reduced_points, s, reduced_bounds(&bounds, s, code.k)?)?;
        let r = engine.solve(&prob, f)?.q;
        unshift(&lift(&r, plan.zk(), s, f)?, &re.lk, f)
    } else {
        let pts: Vec<_> = code.support.iter().copied().zip(y.iter().copied()).collect();
        let prob = InterpolationProblem::new(pts, s, bounds)?;
        engine.solve(&prob, f)?.q
    };
    filter_roots(code, y, &q, radius)
}
