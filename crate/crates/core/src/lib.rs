//! Interpolation-based Reed-Solomon decoding over GF(2^m) with revisited
//! re-encoding: the received word is translated so `k` positions vanish, the
//! vanishing factor is divided out, and an unmodified interpolation engine
//! solves the resulting `(n - k)`-point problem.

pub mod bench;
pub mod bivariate;
pub mod decoders;
pub mod error;
pub mod example;
pub mod gf2m;
pub mod interpolation;
pub mod poly;
pub mod reencoding;
pub mod text;

pub use bivariate::{BiPoly, RootFinder, WDegree};
pub use error::{Error, FailureReason, Result};
pub use gf2m::{count_field_ops, field_ops, reset_field_ops, Field, FieldElement};
pub use poly::{lagrange, vanishing, Poly};
pub use decoders::{gs_decode, gs_params, rs_encode, sudan_decode, wb_decode, DecodeOutcome, GSParams, Mode, RSCode};
pub use interpolation::{Engine, InterpolationProblem, Solution};
pub use reencoding::{make_context, ReencodingContext, ReencodingPlan};
