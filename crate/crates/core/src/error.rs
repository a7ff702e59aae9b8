use std::fmt;

/// Why a unique decoder gave up on a received word.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FailureReason {
    /// The interpolation engine returned no admissible polynomial.
    NoInterpolant,
    /// `Q_1 = 0`, so there is nothing to divide by.
    ZeroLocator,
    /// `Q_1` does not divide `Q_0`.
    InexactDivision,
    /// The quotient has degree `>= k`.
    MessageTooLong,
    /// The candidate codeword is farther than the decoding radius.
    TooManyErrors,
}

impl fmt::Display for FailureReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            FailureReason::NoInterpolant => "no interpolation polynomial",
            FailureReason::ZeroLocator => "Q1 is zero",
            FailureReason::InexactDivision => "Q1 does not divide Q0",
            FailureReason::MessageTooLong => "quotient degree is at least k",
            FailureReason::TooManyErrors => "distance exceeds the decoding radius",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("extension degree {0} is outside 2..=16")]
    UnsupportedDegree(u32),
    #[error("modulus {modulus:#x} is not an irreducible polynomial of degree {m}")]
    ReducibleModulus { m: u32, modulus: u32 },
    #[error("value {value:#x} is not an element of GF(2^{m})")]
    ElementOutOfRange { m: u32, value: u32 },
    #[error("division by zero")]
    DivisionByZero,
    #[error("polynomial division leaves a nonzero remainder")]
    InexactDivision,
    #[error("interpolation points share an abscissa")]
    DuplicateAbscissa,
    #[error("operation undefined for the zero polynomial")]
    ZeroPolynomial,
    #[error("interpolation problem has {unknowns} unknowns for {constraints} constraints")]
    NotSolvable { unknowns: usize, constraints: usize },
    #[error("interpolation engine found no nonzero solution within the degree bounds")]
    NoSolution,
    #[error("bad dimension: {0}")]
    BadDimension(String),
    #[error("multiplicity {multiplicity} is below the Y-degree {y_degree}")]
    MultiplicityTooSmall { multiplicity: usize, y_degree: usize },
    #[error("message of degree {degree} does not fit dimension {k}")]
    MessageTooLong { degree: usize, k: usize },
    #[error("decoding failure: {0}")]
    DecodingFailure(FailureReason),
    #[error("no interpolation parameters reach radius {radius} for n={n}, k={k}")]
    RadiusInfeasible { radius: usize, n: usize, k: usize },
    #[error("cannot inject {weight} errors into a word of length {n}")]
    BadWeight { weight: usize, n: usize },
    #[error("benchmark cell m={m} k={k} {engine}/{mode} decoded incorrectly (trial {trial}, seed {seed:#018x})")]
    CellFailure {
        m: u32,
        k: usize,
        engine: String,
        mode: String,
        trial: usize,
        seed: u64,
    },
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
