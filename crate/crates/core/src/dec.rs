//! Fixed-point decimal arithmetic on big integers.
//!
//! A [`Dec`] is `mantissa * 10^(-scale)`. Addition and subtraction are exact,
//! multiplication is exact or rounded to a requested scale, division and
//! square root round to a requested scale. The single rounding mode used
//! everywhere in this crate is round-half-away-from-zero.
//!
//! The module also provides pi and sine at rational multiples of pi, both to
//! an arbitrary number of decimal places; these back the reference oracle and
//! the closed-form eigenvalue.

use std::cmp::Ordering;
use std::fmt;
use std::sync::Mutex;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Signed fixed-point decimal: `mant * 10^(-scale)`.
///
/// Equality and ordering compare numeric values, so `1.50` equals `1.5`.
#[derive(Debug, Clone)]
pub struct Dec {
    mant: BigInt,
    scale: u32,
}

pub(crate) fn pow10(e: u32) -> BigInt {
    BigInt::from(10u32).pow(e)
}

/// Integer division rounded half away from zero. `d` must be nonzero.
pub(crate) fn div_round_half_away(n: &BigInt, d: &BigInt) -> BigInt {
    assert!(!d.is_zero(), "division by zero");
    let (q, r) = n.div_rem(d);
    if r.magnitude() * 2u32 >= *d.magnitude() {
        // push away from zero in the direction of the true quotient
        let bump = if (n.sign() == Sign::Minus) == (d.sign() == Sign::Minus) {
            BigInt::from(1)
        } else {
            BigInt::from(-1)
        };
        q + bump
    } else {
        q
    }
}

impl Dec {
    pub fn new(mant: impl Into<BigInt>, scale: u32) -> Self {
        Dec { mant: mant.into(), scale }
    }

    pub fn zero() -> Self {
        Dec::new(0, 0)
    }

    pub fn one() -> Self {
        Dec::new(1, 0)
    }

    pub fn from_int(v: i64) -> Self {
        Dec::new(v, 0)
    }

    /// Parse a plain decimal literal such as `-12.0345`.
    pub fn parse(text: &str) -> Result<Self> {
        let t = text.trim();
        let (neg, body) = match t.strip_prefix('-') {
            Some(rest) => (true, rest),
            None => (false, t.strip_prefix('+').unwrap_or(t)),
        };
        if body.is_empty() {
            return Err(Error::Parse("empty decimal literal".into()));
        }
        let (int_part, frac_part) = match body.split_once('.') {
            Some((i, f)) => (i, f),
            None => (body, ""),
        };
        if int_part.is_empty() && frac_part.is_empty() {
            return Err(Error::Parse(format!("bad decimal literal {t:?}")));
        }
        if !int_part.chars().all(|c| c.is_ascii_digit())
            || !frac_part.chars().all(|c| c.is_ascii_digit())
        {
            return Err(Error::Parse(format!("bad decimal literal {t:?}")));
        }
        let digits: String = format!("{int_part}{frac_part}");
        let mant: BigInt = if digits.is_empty() {
            BigInt::zero()
        } else {
            digits.parse().map_err(|_| Error::Parse(format!("bad decimal literal {t:?}")))?
        };
        let mant = if neg { -mant } else { mant };
        Ok(Dec::new(mant, frac_part.len() as u32))
    }

    pub fn scale(&self) -> u32 {
        self.scale
    }

    pub fn mantissa(&self) -> &BigInt {
        &self.mant
    }

    pub fn is_zero(&self) -> bool {
        self.mant.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.mant.is_negative()
    }

    pub fn abs(&self) -> Self {
        Dec::new(self.mant.abs(), self.scale)
    }

    pub fn neg(&self) -> Self {
        Dec::new(-&self.mant, self.scale)
    }

    fn aligned(&self, other: &Self) -> (BigInt, BigInt, u32) {
        let scale = self.scale.max(other.scale);
        let a = &self.mant * pow10(scale - self.scale);
        let b = &other.mant * pow10(scale - other.scale);
        (a, b, scale)
    }

    /// Exact sum; result scale is the max of the operand scales.
    pub fn add(&self, other: &Self) -> Self {
        let (a, b, scale) = self.aligned(other);
        Dec::new(a + b, scale)
    }

    /// Exact difference; result scale is the max of the operand scales.
    pub fn sub(&self, other: &Self) -> Self {
        let (a, b, scale) = self.aligned(other);
        Dec::new(a - b, scale)
    }

    /// Exact product; result scale is the sum of the operand scales.
    pub fn mul_exact(&self, other: &Self) -> Self {
        Dec::new(&self.mant * &other.mant, self.scale + other.scale)
    }

    /// Product rounded half-away at `scale`.
    pub fn mul_round(&self, other: &Self, scale: u32) -> Self {
        self.mul_exact(other).rescale(scale)
    }

    /// Quotient rounded half-away at `scale`. Panics on a zero divisor;
    /// callers guard the domain.
    pub fn div_round(&self, other: &Self, scale: u32) -> Self {
        assert!(!other.is_zero(), "Dec::div_round: zero divisor");
        // self/other = mant_a * 10^(scale + scale_b - scale_a) / mant_b, at `scale`
        let shift = scale as i64 + other.scale as i64 - self.scale as i64;
        let (num, den) = if shift >= 0 {
            (&self.mant * pow10(shift as u32), other.mant.clone())
        } else {
            (self.mant.clone(), &other.mant * pow10((-shift) as u32))
        };
        Dec::new(div_round_half_away(&num, &den), scale)
    }

    /// Change scale, rounding half-away when digits are dropped.
    pub fn rescale(&self, scale: u32) -> Self {
        if scale >= self.scale {
            Dec::new(&self.mant * pow10(scale - self.scale), scale)
        } else {
            Dec::new(
                div_round_half_away(&self.mant, &pow10(self.scale - scale)),
                scale,
            )
        }
    }

    /// Square root rounded at `scale`. Panics on negative input; callers
    /// guard the domain.
    pub fn sqrt_round(&self, scale: u32) -> Self {
        assert!(!self.is_negative(), "Dec::sqrt_round: negative input");
        // floor sqrt with two guard digits, then round down to `scale`
        let guard = scale + 2;
        let e = 2 * guard as i64 - self.scale as i64;
        let base: BigUint = if e >= 0 {
            (&self.mant * pow10(e as u32)).magnitude().clone()
        } else {
            (&self.mant / pow10((-e) as u32)).magnitude().clone()
        };
        Dec::new(BigInt::from(base.sqrt()), guard).rescale(scale)
    }

    pub fn min(&self, other: &Self) -> Self {
        if self <= other { self.clone() } else { other.clone() }
    }

    pub fn max(&self, other: &Self) -> Self {
        if self >= other { self.clone() } else { other.clone() }
    }

    /// Nearest f64; fine for reports and diagnostics, not for computation.
    pub fn to_f64(&self) -> f64 {
        // via the decimal string to avoid overflowing intermediate powers
        self.to_string().parse::<f64>().unwrap_or_else(|_| {
            self.mant.to_f64().unwrap_or(f64::NAN) * 10f64.powi(-(self.scale as i32))
        })
    }
}

impl fmt::Display for Dec {
    /// Plain decimal with exactly `scale` fractional digits, e.g. `0.500000000`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let digits = self.mant.magnitude().to_str_radix(10);
        let scale = self.scale as usize;
        let sign = if self.mant.is_negative() { "-" } else { "" };
        if scale == 0 {
            return write!(f, "{sign}{digits}");
        }
        let padded = if digits.len() <= scale {
            format!("{}{}", "0".repeat(scale + 1 - digits.len()), digits)
        } else {
            digits
        };
        let (int_part, frac_part) = padded.split_at(padded.len() - scale);
        write!(f, "{sign}{int_part}.{frac_part}")
    }
}

impl PartialEq for Dec {
    fn eq(&self, other: &Self) -> bool {
        let (a, b, _) = self.aligned(other);
        a == b
    }
}

impl Eq for Dec {}

impl PartialOrd for Dec {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Dec {
    fn cmp(&self, other: &Self) -> Ordering {
        let (a, b, _) = self.aligned(other);
        a.cmp(&b)
    }
}

/// `floor(-log10(|x|))` of a nonzero residual, saturating at the value's own
/// scale for zero. This is the "correct digits" count used in reports.
pub fn digits_correct(residual: &Dec) -> i64 {
    if residual.is_zero() {
        return residual.scale as i64;
    }
    let m = residual.mant.magnitude();
    let d = m.to_str_radix(10).len() as i64;
    let s = residual.scale as i64;
    // |x| = m * 10^-s with 10^(d-1) <= m < 10^d
    if *m == pow10((d - 1) as u32).magnitude().clone() {
        s - d + 1
    } else {
        s - d
    }
}

// pi is cached unrounded at a generous scale; requests round down from it.
static PI_CACHE: Mutex<Option<(u32, BigInt)>> = Mutex::new(None);

/// pi to `scale` decimal places, rounded half-away at the last place.
pub fn pi(scale: u32) -> Dec {
    let mut cache = PI_CACHE.lock().expect("pi cache poisoned");
    let need_raw = scale + 20;
    let recompute = match &*cache {
        Some((raw_scale, _)) => *raw_scale < need_raw,
        None => true,
    };
    if recompute {
        let raw_scale = need_raw.max(150);
        *cache = Some((raw_scale, machin_pi(raw_scale)));
    }
    let (raw_scale, mant) = cache.as_ref().expect("pi cache populated");
    Dec::new(mant.clone(), *raw_scale).rescale(scale)
}

/// Machin's formula: pi = 16 atan(1/5) - 4 atan(1/239), in integer
/// fixed-point at `scale` places. Truncation keeps the result well inside
/// one unit of the 10-places-coarser rounding done by callers.
fn machin_pi(scale: u32) -> BigInt {
    BigInt::from(16) * machin_atan_inv(5, scale) - BigInt::from(4) * machin_atan_inv(239, scale)
}

fn machin_atan_inv(k: u32, scale: u32) -> BigInt {
    let k = BigInt::from(k);
    let k2 = &k * &k;
    let mut power = pow10(scale) / &k; // x^(2i+1) scaled by 10^scale
    let mut sum = power.clone();
    let mut i: u32 = 1;
    loop {
        power /= &k2;
        if power.is_zero() {
            break;
        }
        let term = &power / BigInt::from(2 * i + 1);
        if i % 2 == 1 {
            sum -= term;
        } else {
            sum += term;
        }
        i += 1;
    }
    sum
}

/// `sin(pi * num/den)` for `0 <= num/den <= 1/2`, rounded at `scale`.
///
/// Reduces to an angle in `[0, pi/4]` (using sin x = cos(pi/2 - x) above
/// pi/4) and evaluates the Taylor series there with 15 guard digits. The
/// series is alternating with decreasing terms, so the truncation tail is
/// below one working ulp when the loop stops.
pub(crate) fn sin_pi_frac(num: u64, den: u64, scale: u32) -> Result<Dec> {
    if den == 0 || 2 * num > den {
        return Err(Error::Domain(format!(
            "sin_pi_frac: {num}/{den} outside [0, 1/2]"
        )));
    }
    if num == 0 {
        return Ok(Dec::new(0, scale));
    }
    let w = scale + 15;
    let p = pi(w + 10);
    let angle_at = |n: u64, d: u64| -> Dec {
        // round(pi_mant * n / (d * 10^10)) at scale w
        let numer = p.mantissa() * BigInt::from(n);
        let denom = BigInt::from(d) * pow10(p.scale() - w);
        Dec::new(div_round_half_away(&numer, &denom), w)
    };
    let value = if 4 * num <= den {
        taylor_sin(&angle_at(num, den), w)
    } else {
        // cos of the complement, which lands in [0, pi/4)
        taylor_cos(&angle_at(den - 2 * num, 2 * den), w)
    };
    Ok(value.rescale(scale))
}

fn taylor_sin(x: &Dec, w: u32) -> Dec {
    let x2 = x.mul_round(x, w);
    let mut term = x.clone();
    let mut sum = x.clone();
    let mut k: i64 = 1;
    let mut subtract = true;
    loop {
        term = term
            .mul_round(&x2, w)
            .div_round(&Dec::from_int((2 * k) * (2 * k + 1)), w);
        if term.is_zero() {
            break;
        }
        sum = if subtract { sum.sub(&term) } else { sum.add(&term) };
        subtract = !subtract;
        k += 1;
    }
    sum
}

fn taylor_cos(x: &Dec, w: u32) -> Dec {
    let x2 = x.mul_round(x, w);
    let one = Dec::new(pow10(w), w);
    let mut term = one.clone();
    let mut sum = one;
    let mut k: i64 = 1;
    let mut subtract = true;
    loop {
        term = term
            .mul_round(&x2, w)
            .div_round(&Dec::from_int((2 * k - 1) * (2 * k)), w);
        if term.is_zero() {
            break;
        }
        sum = if subtract { sum.sub(&term) } else { sum.add(&term) };
        subtract = !subtract;
        k += 1;
    }
    sum
}
