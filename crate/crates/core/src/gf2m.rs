//! Binary extension fields GF(2^m), 2 <= m <= 16, with log/antilog tables.
//!
//! A [`FieldElement`] is a bare `u16` in polynomial basis; every operation goes
//! through a [`Field`] handle. Additions and multiplications performed through
//! the handle are tallied in a per-thread counter (see [`field_ops`]), which the
//! benchmark harness uses as a machine-independent cost measure.

use std::cell::Cell;
use std::fmt;

use crate::error::{Error, Result};

/// Default moduli indexed by `m`, bit `i` holding the coefficient of `x^i`.
/// The class of `x` is primitive for each of them.
const DEFAULT_MODULI: [u32; 17] = [
    0, 0, 0x7, 0xB, 0x13, 0x25, 0x43, 0x89, 0x11D, 0x211, 0x409, 0x805, 0x1053, 0x201B, 0x4443,
    0x8003, 0x1100B,
];

pub const MIN_DEGREE: u32 = 2;
pub const MAX_DEGREE: u32 = 16;

thread_local! {
    static FIELD_OPS: Cell<u64> = const { Cell::new(0) };
}

/// Field additions plus multiplications executed on this thread since the last reset.
pub fn field_ops() -> u64 {
    FIELD_OPS.with(Cell::get)
}

pub fn reset_field_ops() {
    FIELD_OPS.with(|c| c.set(0));
}

/// Runs `f` and returns its result with the number of field operations it executed.
pub fn count_field_ops<R>(f: impl FnOnce() -> R) -> (R, u64) {
    let before = field_ops();
    let out = f();
    (out, field_ops() - before)
}

#[inline]
pub(crate) fn tally(n: u64) {
    FIELD_OPS.with(|c| c.set(c.get() + n));
}

/// An element of GF(2^m): bit `i` is the coefficient of `α^i`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct FieldElement(u16);

impl FieldElement {
    pub const ZERO: FieldElement = FieldElement(0);
    pub const ONE: FieldElement = FieldElement(1);

    /// Wraps a raw value without range checking; prefer [`Field::element`].
    pub const fn from_raw(value: u16) -> Self {
        FieldElement(value)
    }

    pub const fn value(self) -> u16 {
        self.0
    }

    pub const fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:x}", self.0)
    }
}

/// Lowercase hex of the basis encoding.
impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:x}", self.0)
    }
}

#[derive(Clone)]
pub struct Field {
    m: u32,
    modulus: u32,
    generator: FieldElement,
    /// `exp[e] = g^e`, stored twice over so sums of two logs need no reduction.
    exp: Vec<u16>,
    /// `log[v]` for `v != 0`; `log[0]` is unused.
    log: Vec<u32>,
}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Field")
            .field("m", &self.m)
            .field("modulus", &format_args!("{:#x}", self.modulus))
            .finish()
    }
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        self.m == other.m && self.modulus == other.modulus
    }
}

impl Eq for Field {}

impl Field {
    /// The field GF(2^m) with the default modulus for `m`.
    pub fn new(m: u32) -> Result<Field> {
        if !(MIN_DEGREE..=MAX_DEGREE).contains(&m) {
            return Err(Error::UnsupportedDegree(m));
        }
        Field::with_modulus(m, DEFAULT_MODULI[m as usize])
    }

    /// The default modulus used by [`Field::new`].
    pub fn default_modulus(m: u32) -> Result<u32> {
        if !(MIN_DEGREE..=MAX_DEGREE).contains(&m) {
            return Err(Error::UnsupportedDegree(m));
        }
        Ok(DEFAULT_MODULI[m as usize])
    }

    /// GF(2^m) defined by a caller-chosen modulus, which must be irreducible.
    ///
    /// Log tables are taken with respect to `x` when it is primitive, otherwise
    /// with respect to the smallest primitive element.
    pub fn with_modulus(m: u32, modulus: u32) -> Result<Field> {
        if !(MIN_DEGREE..=MAX_DEGREE).contains(&m) {
            return Err(Error::UnsupportedDegree(m));
        }
        let reducible = Error::ReducibleModulus { m, modulus };
        if modulus >> m != 1 || modulus & 1 == 0 || !gf2_irreducible(modulus, m) {
            return Err(reducible);
        }
        let order = 1usize << m;
        let period = order - 1;
        for g in 2..order as u32 {
            let mut exp = vec![0u16; 2 * period];
            let mut log = vec![0u32; order];
            let mut seen = vec![false; order];
            let mut v = 1u32;
            let mut primitive = true;
            for e in 0..period {
                if seen[v as usize] {
                    primitive = false;
                    break;
                }
                seen[v as usize] = true;
                exp[e] = v as u16;
                exp[e + period] = v as u16;
                log[v as usize] = e as u32;
                v = gf2_mulmod(v, g, modulus, m);
            }
            if primitive && v == 1 {
                return Ok(Field {
                    m,
                    modulus,
                    generator: FieldElement(g as u16),
                    exp,
                    log,
                });
            }
        }
        Err(reducible)
    }

    pub fn degree(&self) -> u32 {
        self.m
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    /// Number of elements, `2^m`.
    pub fn order(&self) -> usize {
        1 << self.m
    }

    /// The element the log tables are based on (`α`, the class of `x`, for default moduli).
    pub fn generator(&self) -> FieldElement {
        self.generator
    }

    pub fn element(&self, value: u32) -> Result<FieldElement> {
        if (value as usize) < self.order() {
            Ok(FieldElement(value as u16))
        } else {
            Err(Error::ElementOutOfRange { m: self.m, value })
        }
    }

    /// `g^e` for the generator `g`, any integer `e`.
    pub fn alpha_pow(&self, e: i64) -> FieldElement {
        let period = (self.order() - 1) as i64;
        FieldElement(self.exp[e.rem_euclid(period) as usize])
    }

    /// Discrete log base the generator; `None` for zero.
    pub fn log(&self, a: FieldElement) -> Option<u32> {
        self.check(a);
        (!a.is_zero()).then(|| self.log[a.0 as usize])
    }

    /// All elements in increasing value order.
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> + '_ {
        (0..self.order()).map(|v| FieldElement(v as u16))
    }

    #[inline]
    fn check(&self, a: FieldElement) {
        debug_assert!(
            (a.0 as usize) < self.order(),
            "element {:#x} does not belong to GF(2^{})",
            a.0,
            self.m
        );
    }

    #[inline]
    pub fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.check(a);
        self.check(b);
        tally(1);
        FieldElement(a.0 ^ b.0)
    }

    /// Same as [`Field::add`] in characteristic 2.
    #[inline]
    pub fn sub(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.add(a, b)
    }

    #[inline]
    pub fn neg(&self, a: FieldElement) -> FieldElement {
        a
    }

    #[inline]
    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.check(a);
        self.check(b);
        tally(1);
        self.mul_uncounted(a, b)
    }

    #[inline]
    pub(crate) fn mul_uncounted(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        if a.is_zero() || b.is_zero() {
            return FieldElement::ZERO;
        }
        FieldElement(self.exp[(self.log[a.0 as usize] + self.log[b.0 as usize]) as usize])
    }

    /// Multiplies by an element given through its log, `b = g^log_b`.
    #[inline]
    pub(crate) fn mul_by_log(&self, a: FieldElement, log_b: u32) -> FieldElement {
        if a.is_zero() {
            return FieldElement::ZERO;
        }
        FieldElement(self.exp[(self.log[a.0 as usize] + log_b) as usize])
    }

    pub fn inv(&self, a: FieldElement) -> Result<FieldElement> {
        self.check(a);
        if a.is_zero() {
            return Err(Error::DivisionByZero);
        }
        tally(1);
        let period = (self.order() - 1) as u32;
        Ok(FieldElement(self.exp[((period - self.log[a.0 as usize]) % period) as usize]))
    }

    pub fn div(&self, a: FieldElement, b: FieldElement) -> Result<FieldElement> {
        self.check(a);
        self.check(b);
        if b.is_zero() {
            return Err(Error::DivisionByZero);
        }
        tally(1);
        if a.is_zero() {
            return Ok(FieldElement::ZERO);
        }
        let period = (self.order() - 1) as u32;
        let e = self.log[a.0 as usize] + period - self.log[b.0 as usize];
        Ok(FieldElement(self.exp[e as usize]))
    }

    /// `a^e`; negative exponents invert, so `pow(0, e < 0)` is a division by zero.
    pub fn pow(&self, a: FieldElement, e: i64) -> Result<FieldElement> {
        self.check(a);
        if a.is_zero() {
            return match e {
                0 => Ok(FieldElement::ONE),
                e if e > 0 => Ok(FieldElement::ZERO),
                _ => Err(Error::DivisionByZero),
            };
        }
        tally(1);
        let period = (self.order() - 1) as i64;
        let l = self.log[a.0 as usize] as i64;
        Ok(FieldElement(
            self.exp[(l * e.rem_euclid(period)).rem_euclid(period) as usize],
        ))
    }

    /// Power notation relative to the generator: `0`, `1`, `a`, `a2`, ...
    pub fn power_name(&self, a: FieldElement) -> String {
        match self.log(a) {
            None => "0".to_string(),
            Some(0) => "1".to_string(),
            Some(1) => "a".to_string(),
            Some(e) => format!("a{e}"),
        }
    }

    /// Inverse of [`Field::power_name`]; also accepts `a^N`.
    pub fn parse_power_name(&self, s: &str) -> Result<FieldElement> {
        let s = s.trim();
        match s {
            "0" => return Ok(FieldElement::ZERO),
            "1" => return Ok(FieldElement::ONE),
            "a" => return Ok(self.generator),
            _ => {}
        }
        let e = s
            .strip_prefix('a')
            .map(|r| r.strip_prefix('^').unwrap_or(r))
            .and_then(|r| r.parse::<i64>().ok())
            .ok_or_else(|| Error::Parse(format!("not a field element in power form: {s:?}")))?;
        Ok(self.alpha_pow(e))
    }

    /// Parses the lowercase-hex serialization produced by `Display`.
    pub fn parse_hex(&self, s: &str) -> Result<FieldElement> {
        let v = u32::from_str_radix(s.trim(), 16)
            .map_err(|_| Error::Parse(format!("not a hex field element: {s:?}")))?;
        self.element(v)
    }
}

/// Carry-less product reduced modulo `modulus` (degree `m`).
fn gf2_mulmod(mut a: u32, mut b: u32, modulus: u32, m: u32) -> u32 {
    let mut r = 0u32;
    while b != 0 {
        if b & 1 != 0 {
            r ^= a;
        }
        b >>= 1;
        a <<= 1;
        if a >> m & 1 != 0 {
            a ^= modulus;
        }
    }
    r
}

fn gf2_degree(p: u32) -> i32 {
    31 - p.leading_zeros() as i32
}

fn gf2_rem(mut a: u32, b: u32) -> u32 {
    let db = gf2_degree(b);
    while a != 0 && gf2_degree(a) >= db {
        a ^= b << (gf2_degree(a) - db);
    }
    a
}

/// Trial division by every polynomial of degree 1..=m/2.
fn gf2_irreducible(p: u32, m: u32) -> bool {
    (2u32..1 << (m / 2 + 1)).all(|d| gf2_rem(p, d) != 0)
}
