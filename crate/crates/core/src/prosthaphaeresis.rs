//! Multiplication by sine-table lookups:
//! `sin a * sin b = [sin(90° - a + b) - sin(90° - a - b)] / 2`.
//!
//! The two lookup arguments are reduced into table range with
//! `sin(-x) = -sin x` and `sin(90° + x) = sin(90° - x)`; historical lookup
//! semantics (exact grid hits only) are the default, linear interpolation
//! sits behind a flag.

use crate::dec::Dec;
use crate::error::{Error, Result};
use crate::tablegen::SineTable;

/// Outcome of one prosthaphaeretic multiplication.
#[derive(Debug, Clone)]
pub struct ProstResult {
    /// `(lookup_1 - lookup_2) / 2`.
    pub product_estimate: Dec,
    /// The two signed sine values actually used.
    pub table_lookups: (Dec, Dec),
    /// Bound on `|product_estimate - sin a * sin b|` from the table's own
    /// accuracy (plus the interpolation term when interpolation was used).
    pub absolute_error_bound: Dec,
}

// sign * sin(reduced), with reduced in 0..=5400
fn reduce(arcmin: i64) -> (i8, u32) {
    let (sign, t) = if arcmin < 0 { (-1, -arcmin) } else { (1, arcmin) };
    let t = if t > 5400 { 10800 - t } else { t };
    debug_assert!((0..=5400).contains(&t));
    (sign, t as u32)
}

fn lookup(table: &SineTable, sign: i8, t: u32, interpolate: bool) -> Result<(Dec, bool)> {
    let value = if t == 0 {
        Dec::zero()
    } else if let Some(v) = table.get(t) {
        v.clone()
    } else if interpolate {
        let step = table.step();
        let lo_angle = t / step * step;
        let hi_angle = lo_angle + step;
        let lo = if lo_angle == 0 {
            Dec::zero()
        } else {
            table.get(lo_angle).expect("grid angle").clone()
        };
        let hi = table.get(hi_angle).expect("grid angle").clone();
        let w = lo.scale().max(hi.scale()).max(table.precision() + 4);
        let frac = Dec::from_int((t - lo_angle) as i64)
            .div_round(&Dec::from_int(step as i64), w);
        return Ok((
            apply_sign(sign, lo.add(&hi.sub(&lo).mul_round(&frac, w))),
            true,
        ));
    } else {
        return Err(Error::Grid(t as i64, table.step()));
    };
    Ok((apply_sign(sign, value), false))
}

fn apply_sign(sign: i8, v: Dec) -> Dec {
    if sign < 0 {
        v.neg()
    } else {
        v
    }
}

/// Estimate `sin(alpha) * sin(beta)` from two table lookups. Angles are in
/// arcminutes, both in (0, 5400].
pub fn prost_multiply(
    alpha_arcmin: u32,
    beta_arcmin: u32,
    table: &SineTable,
    interpolate: bool,
) -> Result<ProstResult> {
    for angle in [alpha_arcmin, beta_arcmin] {
        if angle == 0 || angle > 5400 {
            return Err(Error::Domain(format!("angle {angle}' outside (0, 5400]")));
        }
    }
    let a = alpha_arcmin as i64;
    let b = beta_arcmin as i64;
    let (s1, t1) = reduce(5400 - a + b);
    let (s2, t2) = reduce(5400 - a - b);
    let (l1, interp1) = lookup(table, s1, t1, interpolate)?;
    let (l2, interp2) = lookup(table, s2, t2, interpolate)?;

    let w = l1.scale().max(l2.scale()).max(table.precision()) + 2;
    let product_estimate = l1.sub(&l2).div_round(&Dec::from_int(2), w);

    // each lookup is off by at most one unit in the table's advertised
    // precision; interpolation adds a curvature term (step in radians)^2 / 8
    let mut bound = Dec::new(1, table.precision());
    if interp1 || interp2 {
        let step_rad = crate::dec::pi(12)
            .mul_round(&Dec::from_int(table.step() as i64), 12)
            .div_round(&Dec::from_int(10800), 12);
        bound = bound.add(&step_rad.mul_round(&step_rad, 16).div_round(&Dec::from_int(8), 12));
    }

    Ok(ProstResult {
        product_estimate,
        table_lookups: (l1, l2),
        absolute_error_bound: bound,
    })
}
