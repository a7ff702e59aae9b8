//! Correctness-checked decode benchmarks over a grid of codes.

use std::fmt::Write as _;
use std::sync::Arc;
use std::time::{Duration, Instant};

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::decoders::{rs_encode, wb_decode, Mode, RSCode};
use crate::error::{Error, Result};
use crate::gf2m::{count_field_ops, Field, FieldElement};
use crate::interpolation::Engine;
use crate::poly::Poly;

pub const CSV_HEADER: &str = "m,n,k,engine,mode,iters,total_s,mean_us,failures,field_ops";

/// Code rate `num/den`; a cell's dimension is `k = 2^m · num / den`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Rate {
    pub num: u32,
    pub den: u32,
}

impl Rate {
    pub const DEFAULT: [Rate; 4] = [
        Rate { num: 1, den: 2 },
        Rate { num: 5, den: 8 },
        Rate { num: 3, den: 4 },
        Rate { num: 7, den: 8 },
    ];

    pub fn dimension(self, m: u32) -> usize {
        ((1u64 << m) * self.num as u64 / self.den as u64) as usize
    }
}

impl std::str::FromStr for Rate {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("rate must look like 3/4, got {s:?}"));
        let (a, b) = s.trim().split_once('/').ok_or_else(bad)?;
        let num: u32 = a.trim().parse().map_err(|_| bad())?;
        let den: u32 = b.trim().parse().map_err(|_| bad())?;
        if num == 0 || den == 0 || num >= den {
            return Err(bad());
        }
        Ok(Rate { num, den })
    }
}

impl std::fmt::Display for Rate {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

#[derive(Debug, Clone)]
pub struct BenchConfig {
    pub m: Vec<u32>,
    pub rates: Vec<Rate>,
    pub engines: Vec<Engine>,
    pub modes: Vec<Mode>,
    pub iters: usize,
    pub seed: u64,
    /// Errors injected per trial; `None` means the code's `t`.
    pub error_weight: Option<usize>,
    /// Each decode is timed as the fastest of this many back-to-back runs,
    /// which filters out scheduler stalls.
    pub repeats: usize,
}

impl Default for BenchConfig {
    fn default() -> Self {
        BenchConfig {
            m: (4..=8).collect(),
            rates: Rate::DEFAULT.to_vec(),
            engines: Engine::ALL.to_vec(),
            modes: Mode::ALL.to_vec(),
            iters: 100,
            seed: 0,
            error_weight: None,
            repeats: 3,
        }
    }
}

/// One grid cell: a code over `GF(2^m)` of length `2^m - 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Cell {
    pub m: u32,
    pub k: usize,
}

impl BenchConfig {
    /// Cells in grid order, validated.
    pub fn cells(&self) -> Result<Vec<Cell>> {
        let mut out = Vec::new();
        for &m in &self.m {
            Field::default_modulus(m)?;
            let n = (1usize << m) - 1;
            for &rate in &self.rates {
                let k = rate.dimension(m);
                if k == 0 || k >= n {
                    return Err(Error::BadDimension(format!(
                        "rate {rate} gives k={k} for n={n}"
                    )));
                }
                out.push(Cell { m, k });
            }
        }
        Ok(out)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct BenchRow {
    pub m: u32,
    pub n: usize,
    pub k: usize,
    pub engine: Engine,
    pub mode: Mode,
    pub iters: usize,
    pub total: Duration,
    pub failures: usize,
    pub field_ops: u64,
}

impl BenchRow {
    pub fn mean(&self) -> Duration {
        self.total / self.iters.max(1) as u32
    }

    pub fn mean_us(&self) -> f64 {
        self.total.as_secs_f64() * 1e6 / self.iters.max(1) as f64
    }

    pub fn csv_line(&self) -> String {
        format!(
            "{},{},{},{},{},{},{:.3},{:.3},{},{}",
            self.m,
            self.n,
            self.k,
            self.engine,
            self.mode,
            self.iters,
            self.total.as_secs_f64(),
            self.mean_us(),
            self.failures,
            self.field_ops
        )
    }
}

pub fn to_csv(rows: &[BenchRow]) -> String {
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for r in rows {
        let _ = writeln!(out, "{}", r.csv_line());
    }
    out
}

/// Replaces `e` distinct positions of `word` by different, uniformly random
/// symbols. Deterministic in `seed`.
pub fn inject_errors(word: &[FieldElement], e: usize, seed: u64, f: &Field) -> Result<Vec<FieldElement>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    inject_with(word, e, &mut rng, f)
}

fn inject_with(word: &[FieldElement], e: usize, rng: &mut ChaCha8Rng, f: &Field) -> Result<Vec<FieldElement>> {
    if e > word.len() {
        return Err(Error::BadWeight {
            weight: e,
            n: word.len(),
        });
    }
    let mut out = word.to_vec();
    for pos in sample(rng, word.len(), e) {
        let delta = FieldElement::from_raw(rng.random_range(1..f.order()) as u16);
        out[pos] = f.add(out[pos], delta);
    }
    Ok(out)
}

/// Adds `errors[i]` at `positions[i]`.
pub fn apply_errors(
    word: &[FieldElement],
    positions: &[usize],
    errors: &[FieldElement],
    f: &Field,
) -> Result<Vec<FieldElement>> {
    if positions.len() != errors.len() || positions.iter().any(|&p| p >= word.len()) {
        return Err(Error::BadWeight {
            weight: positions.len(),
            n: word.len(),
        });
    }
    let mut out = word.to_vec();
    for (&p, &e) in positions.iter().zip(errors) {
        out[p] = f.add(out[p], e);
    }
    Ok(out)
}

fn splitmix(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Seed of one trial, a hash of everything that identifies it.
pub fn trial_seed(seed: u64, cell: Cell, engine: Engine, mode: Mode, trial: usize) -> u64 {
    let engine_ix = Engine::ALL.iter().position(|&e| e == engine).unwrap() as u64;
    let mode_ix = Mode::ALL.iter().position(|&m| m == mode).unwrap() as u64;
    [cell.m as u64, cell.k as u64, engine_ix, mode_ix, trial as u64]
        .into_iter()
        .fold(splitmix(seed), |h, v| splitmix(h ^ v))
}

/// Random message, its codeword and the received word for one trial.
pub fn trial_word(code: &RSCode, weight: usize, seed: u64) -> Result<(Poly, Vec<FieldElement>)> {
    let f = code.field();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let msg = Poly::from_coeffs(
        (0..code.k())
            .map(|_| FieldElement::from_raw(rng.random_range(0..f.order()) as u16))
            .collect(),
    );
    let c = rs_encode(code, &msg)?;
    let y = inject_with(&c, weight, &mut rng, f)?;
    Ok((msg, y))
}

/// Runs every `(engine, mode)` row of one cell. Trials are interleaved across
/// the variants so drift in machine speed affects them alike.
pub fn run_cell(code: &RSCode, m: u32, config: &BenchConfig) -> Result<Vec<BenchRow>> {
    let cell = Cell { m, k: code.k() };
    let weight = config.error_weight.unwrap_or(code.t());
    let variants: Vec<(Engine, Mode)> = config
        .engines
        .iter()
        .flat_map(|&e| config.modes.iter().map(move |&md| (e, md)))
        .collect();
    let mut rows: Vec<BenchRow> = variants
        .iter()
        .map(|&(engine, mode)| BenchRow {
            m,
            n: code.n(),
            k: code.k(),
            engine,
            mode,
            iters: config.iters,
            total: Duration::ZERO,
            failures: 0,
            field_ops: 0,
        })
        .collect();
    // Build the re-encoding tables and warm caches outside the timed region.
    code.plan();
    let (_, y) = trial_word(code, weight, config.seed)?;
    for &(engine, mode) in &variants {
        wb_decode(code, &y, engine, mode)?;
    }
    for trial in 0..config.iters {
        for (row, &(engine, mode)) in rows.iter_mut().zip(&variants) {
            let seed = trial_seed(config.seed, cell, engine, mode, trial);
            let (msg, y) = trial_word(code, weight, seed)?;
            let start = Instant::now();
            let (out, ops) = count_field_ops(|| wb_decode(code, &y, engine, mode));
            let mut best = start.elapsed();
            for _ in 1..config.repeats {
                let start = Instant::now();
                let again = wb_decode(code, &y, engine, mode);
                best = best.min(start.elapsed());
                drop(again);
            }
            row.total += best;
            row.field_ops += ops;
            if out?.message.as_ref() != Some(&msg) {
                return Err(Error::CellFailure {
                    m,
                    k: code.k(),
                    engine: engine.to_string(),
                    mode: mode.to_string(),
                    trial,
                    seed,
                });
            }
        }
    }
    Ok(rows)
}

/// Every row of the grid, in grid order (m, k, engine, mode).
pub fn run(config: &BenchConfig) -> Result<Vec<BenchRow>> {
    run_with(config, |_| {})
}

/// As [`run`], calling `progress` after each row.
pub fn run_with(config: &BenchConfig, mut progress: impl FnMut(&BenchRow)) -> Result<Vec<BenchRow>> {
    let mut rows = Vec::new();
    let mut field: Option<Arc<Field>> = None;
    for cell in config.cells()? {
        let f = match &field {
            Some(f) if f.degree() == cell.m => f.clone(),
            _ => Arc::new(Field::new(cell.m)?),
        };
        field = Some(f.clone());
        let code = RSCode::primitive(f, (1 << cell.m) - 1, cell.k)?;
        for row in run_cell(&code, cell.m, config)? {
            progress(&row);
            rows.push(row);
        }
    }
    Ok(rows)
}
