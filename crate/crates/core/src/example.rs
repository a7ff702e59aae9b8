//! The RS[7,2] worked example over GF(8), and an exhaustive decoding check of
//! that code.

use std::fmt::Write as _;
use std::sync::Arc;

use crate::bench::apply_errors;
use crate::bivariate::BiPoly;
use crate::decoders::{hamming_distance, rs_encode, wb_decode, Mode, RSCode};
use crate::error::{Error, Result};
use crate::gf2m::{Field, FieldElement};
use crate::interpolation::{verify_solution, Engine, InterpolationProblem};
use crate::poly::Poly;
use crate::reencoding::{lift, make_context, reduced_bounds, unshift};
use crate::text::{self, Notation};

/// The example's code: GF(8) with `α^3 = α + 1`, support `α^0, …, α^6`, `k = 2`.
pub fn example_code() -> RSCode {
    RSCode::primitive(Arc::new(Field::new(3).expect("GF(8) exists")), 7, 2).expect("valid code")
}

pub const MESSAGE: &str = "[a5,a6]";
/// Zero-based error positions and the received symbols there.
pub const ERRORS: [(usize, &str); 2] = [(0, "a5"), (4, "a3")];
/// The published reduced interpolant.
pub const PUBLISHED_S: &str = "Y*[a3,a4,a6] + [a6,a2]";

/// Every intermediate of the worked example, one `name = value` line each, in
/// power notation. Fails if any internal check does.
pub fn print_example() -> Result<String> {
    let code = example_code();
    let f = code.field();
    let n = Notation::Power;
    let message = text::parse_poly(f, MESSAGE, n)?;
    let c = rs_encode(&code, &message)?;
    let (positions, received): (Vec<usize>, Vec<FieldElement>) = ERRORS
        .iter()
        .map(|&(i, v)| f.parse_power_name(v).map(|v| (i, v)))
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .unzip();
    let deltas: Vec<_> = positions.iter().zip(&received).map(|(&i, &v)| f.sub(v, c[i])).collect();
    let y = apply_errors(&c, &positions, &deltas, f)?;

    let ctx = make_context(code.support(), &y, code.k(), None, f)?;
    let reduced_pts = ctx.reduced_points(f);
    let bounds = crate::decoders::wb_bounds(&code);
    let rbounds = reduced_bounds(&bounds, 1, code.k())?;
    let reduced = InterpolationProblem::new(reduced_pts.clone(), 1, rbounds)?;

    let s = text::parse_bipoly(f, PUBLISHED_S, n)?;
    if !verify_solution(&reduced, &s, f) {
        return Err(Error::NoSolution);
    }
    let r = lift(&s, &ctx.zk, 1, f)?;
    let q = unshift(&r, &ctx.lk, f);
    let p = quotient(&q, f)?;

    let mut out = String::new();
    let mut line = |name: &str, value: String| {
        let _ = writeln!(out, "{name} = {value}");
    };
    let word = |w: &[FieldElement]| {
        let parts: Vec<String> = w.iter().map(|&v| f.power_name(v)).collect();
        format!("({})", parts.join(","))
    };
    line("message", text::poly(f, &message, n));
    line("c", word(&c));
    line("y", word(&y));
    line("L_k", text::poly(f, &ctx.lk, n));
    line("r", word(&ctx.residuals));
    line("L_n", text::poly(f, &ctx.ln, n));
    line("Z_k", text::poly(f, &ctx.zk, n));
    line("L_nk", text::poly(f, &ctx.lnk, n));
    line("P_nk", text::points(f, &reduced_pts, n));
    line("S", text::bipoly(f, &s, n));
    for engine in Engine::ALL {
        let se = engine.solve(&reduced, f)?.q;
        let qe = unshift(&lift(&se, &ctx.zk, 1, f)?, &ctx.lk, f);
        let pe = quotient(&qe, f)?;
        if pe != p {
            return Err(Error::NoSolution);
        }
        line(&format!("S[{engine}]"), text::bipoly(f, &se, n));
        line(&format!("P[{engine}]"), text::poly(f, &pe, n));
    }
    line("R", text::bipoly(f, &r, n));
    line("Q", text::bipoly(f, &q, n));
    line("Q1", text::poly(f, &q.column(1), n));
    line("Q0", text::poly(f, &q.column(0), n));
    line("P", text::poly(f, &p, n));
    Ok(out)
}

fn quotient(q: &BiPoly, f: &Field) -> Result<Poly> {
    q.column(0).neg(f).exact_div(&q.column(1), f)
}

/// Counts from [`verify_exhaustive`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct VerifyReport {
    pub messages: usize,
    pub patterns: usize,
    pub decodes: usize,
    pub failures: usize,
}

/// Decodes every message of the example code under every error pattern of
/// weight at most `t = 2`, with each listed engine and mode.
pub fn verify_exhaustive(engines: &[Engine], modes: &[Mode]) -> Result<VerifyReport> {
    let code = example_code();
    let f = code.field();
    let n = code.n();
    let mut patterns: Vec<Vec<(usize, FieldElement)>> = vec![vec![]];
    for i in 0..n {
        for a in f.elements().skip(1) {
            patterns.push(vec![(i, a)]);
            for j in i + 1..n {
                for b in f.elements().skip(1) {
                    patterns.push(vec![(i, a), (j, b)]);
                }
            }
        }
    }
    let mut report = VerifyReport {
        patterns: patterns.len(),
        ..VerifyReport::default()
    };
    for c0 in f.elements() {
        for c1 in f.elements() {
            let msg = Poly::from_coeffs(vec![c0, c1]);
            let c = rs_encode(&code, &msg)?;
            report.messages += 1;
            for pat in &patterns {
                let mut y = c.clone();
                for &(i, e) in pat {
                    y[i] = f.add(y[i], e);
                }
                debug_assert_eq!(hamming_distance(&c, &y), pat.len());
                for &engine in engines {
                    for &mode in modes {
                        let out = wb_decode(&code, &y, engine, mode)?;
                        report.decodes += 1;
                        if out.message.as_ref() != Some(&msg) || out.errors_corrected != pat.len() {
                            report.failures += 1;
                        }
                    }
                }
            }
        }
    }
    Ok(report)
}
