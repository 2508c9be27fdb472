//! Exact signed base-60 fixed-point numbers.
//!
//! Notation follows the usual history-of-science convention: digits separated
//! by commas, semicolon as the radix point (`1,24;51,10` = 84.852777...).
//! Addition and multiplication are exact (the fractional-place count grows as
//! needed); rounding happens only in [`Sexagesimal::format`] and the square
//! root, always half-away-from-zero / truncated respectively.

use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::dec::{div_round_half_away, pow10, Dec};
use crate::error::{Error, Result};

/// A signed base-60 fixed-point value with an explicit fractional-place count.
///
/// Digits are most-significant first, each in `0..=59`. The integer part
/// carries no leading zeros except for the single digit `0`; zero itself has
/// positive sign.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Sexagesimal {
    sign: i8,
    integer_digits: Vec<u8>,
    fraction_digits: Vec<u8>,
}

fn pow60(e: u32) -> BigInt {
    BigInt::from(60u32).pow(e)
}

impl Sexagesimal {
    /// Parse notation matching `[-]?d(,d)*(;d(,d)*)?` with each `d` in 0..=59.
    pub fn parse(text: &str) -> Result<Self> {
        let t = text.trim();
        if t.is_empty() {
            return Err(Error::Parse("empty sexagesimal literal".into()));
        }
        let (neg, body) = match t.strip_prefix('-') {
            Some(rest) => (true, rest),
            None => (false, t),
        };
        let (int_text, frac_text) = match body.split_once(';') {
            Some((i, f)) => (i, Some(f)),
            None => (body, None),
        };
        let parse_digits = |part: &str| -> Result<Vec<u8>> {
            part.split(',')
                .map(|raw| {
                    let raw = raw.trim();
                    if raw.is_empty() || !raw.chars().all(|c| c.is_ascii_digit()) {
                        return Err(Error::Parse(format!("bad sexagesimal digit {raw:?}")));
                    }
                    let v: u32 = raw
                        .parse()
                        .map_err(|_| Error::Parse(format!("bad sexagesimal digit {raw:?}")))?;
                    if v > 59 {
                        return Err(Error::MalformedDigit(v));
                    }
                    Ok(v as u8)
                })
                .collect()
        };
        let integer_digits = parse_digits(int_text)?;
        let fraction_digits = match frac_text {
            Some(f) => parse_digits(f)?,
            None => Vec::new(),
        };
        Ok(Self::canonical(
            if neg { -1 } else { 1 },
            integer_digits,
            fraction_digits,
        ))
    }

    fn canonical(sign: i8, mut integer_digits: Vec<u8>, fraction_digits: Vec<u8>) -> Self {
        while integer_digits.len() > 1 && integer_digits[0] == 0 {
            integer_digits.remove(0);
        }
        if integer_digits.is_empty() {
            integer_digits.push(0);
        }
        let is_zero =
            integer_digits.iter().all(|&d| d == 0) && fraction_digits.iter().all(|&d| d == 0);
        Sexagesimal {
            sign: if is_zero { 1 } else { sign },
            integer_digits,
            fraction_digits,
        }
    }

    /// Count of fractional places kept.
    pub fn places(&self) -> u32 {
        self.fraction_digits.len() as u32
    }

    pub fn sign(&self) -> i8 {
        self.sign
    }

    pub fn integer_digits(&self) -> &[u8] {
        &self.integer_digits
    }

    pub fn fraction_digits(&self) -> &[u8] {
        &self.fraction_digits
    }

    /// value * 60^places, as a signed integer
    fn scaled(&self) -> BigInt {
        let mut acc = BigInt::zero();
        for &d in self.integer_digits.iter().chain(&self.fraction_digits) {
            acc = acc * 60 + d;
        }
        if self.sign < 0 {
            -acc
        } else {
            acc
        }
    }

    fn from_scaled(value: BigInt, places: u32) -> Self {
        let sign = if value.is_negative() { -1 } else { 1 };
        let mut mag = value.magnitude().clone();
        let sixty = BigUint::from(60u32);
        let mut frac = vec![0u8; places as usize];
        for slot in frac.iter_mut().rev() {
            let (q, r) = mag.div_rem(&sixty);
            *slot = r.to_string().parse().expect("digit < 60");
            mag = q;
        }
        let mut int_digits = Vec::new();
        while !mag.is_zero() {
            let (q, r) = mag.div_rem(&sixty);
            int_digits.push(r.to_string().parse().expect("digit < 60"));
            mag = q;
        }
        int_digits.reverse();
        Self::canonical(sign, int_digits, frac)
    }

    /// Exact value as a rational number.
    pub fn to_rational(&self) -> BigRational {
        BigRational::new(self.scaled(), pow60(self.places()))
    }

    /// Render a high-precision real in base-60 notation with `places`
    /// fractional digits, rounding half-away-from-zero at the last place.
    pub fn format(x: &Dec, places: u32) -> String {
        Self::from_dec(x, places).to_string()
    }

    /// Same as [`Sexagesimal::format`] but returning the value.
    pub fn from_dec(x: &Dec, places: u32) -> Self {
        let numer = x.mantissa() * pow60(places);
        let scaled = div_round_half_away(&numer, &pow10(x.scale()));
        Self::from_scaled(scaled, places)
    }

    /// Exact sum; fractional places grow to the larger operand's count.
    pub fn add(&self, other: &Self) -> Self {
        let places = self.places().max(other.places());
        let a = self.scaled() * pow60(places - self.places());
        let b = other.scaled() * pow60(places - other.places());
        Self::from_scaled(a + b, places)
    }

    /// Exact product; fractional places add.
    pub fn mul(&self, other: &Self) -> Self {
        Self::from_scaled(self.scaled() * other.scaled(), self.places() + other.places())
    }

    /// Square root truncated to `places` fractional digits (classical
    /// digit-by-digit convention), correct to within one unit in the last
    /// requested place.
    pub fn sqrt(&self, places: u32) -> Result<Self> {
        if self.sign < 0 {
            return Err(Error::Domain("square root of a negative value".into()));
        }
        let p = self.places();
        let v = self.scaled().magnitude().clone();
        let shift = 2 * places as i64 - p as i64;
        let base: BigUint = if shift >= 0 {
            v * pow60(shift as u32).magnitude()
        } else {
            v / pow60((-shift) as u32).magnitude()
        };
        Ok(Self::from_scaled(BigInt::from(base.sqrt()), places))
    }
}

impl fmt::Display for Sexagesimal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.sign < 0 {
            write!(f, "-")?;
        }
        let join = |digits: &[u8]| {
            digits
                .iter()
                .map(|d| d.to_string())
                .collect::<Vec<_>>()
                .join(",")
        };
        write!(f, "{}", join(&self.integer_digits))?;
        if !self.fraction_digits.is_empty() {
            write!(f, ";{}", join(&self.fraction_digits))?;
        }
        Ok(())
    }
}

impl FromStr for Sexagesimal {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::parse(s)
    }
}
