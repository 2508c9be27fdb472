//! The traditional chord-based route to sines: polygon chords, Ptolemy's
//! sum/difference and half-arc theorems, the crd 1° interpolation bracket,
//! the kardaga sines, and Bürgi's own sin 1° approximation.
//!
//! Everything here is built from closed algebraic forms and square roots —
//! never from the Taylor reference oracle — so the resulting tables serve as
//! a method-independent cross-check on the iterative route.

use std::collections::BTreeMap;

use crate::dec::{pow10, Dec};
use crate::error::{Error, Result};
use crate::tablegen::{Provenance, SineTable};

/// Ptolemy-style chord table: chord lengths at fixed arc steps for a given
/// radius, covering arcs up to 180° (10800').
#[derive(Debug, Clone)]
pub struct ChordTable {
    radius: Dec,
    step: u32,
    entries: Vec<(u32, Dec)>,
}

impl ChordTable {
    pub fn radius(&self) -> &Dec {
        &self.radius
    }

    /// Arc step in arcminutes.
    pub fn step(&self) -> u32 {
        self.step
    }

    pub fn entries(&self) -> &[(u32, Dec)] {
        &self.entries
    }

    pub fn chord(&self, arc_arcmin: u32) -> Option<&Dec> {
        if arc_arcmin == 0 || !arc_arcmin.is_multiple_of(self.step) {
            return None;
        }
        self.entries
            .get((arc_arcmin / self.step) as usize - 1)
            .map(|(_, c)| c)
    }
}

pub enum CombineMode {
    Sum,
    Difference,
}

fn check_radius(radius: &Dec) -> Result<()> {
    if radius.is_negative() || radius.is_zero() {
        return Err(Error::Domain("radius must be positive".into()));
    }
    Ok(())
}

// chord of the supplementary arc: crd(180° - a) = sqrt(4R^2 - crd(a)^2)
fn supplement(crd: &Dec, radius: &Dec, w: u32) -> Dec {
    let four_r2 = radius.mul_exact(radius).mul_exact(&Dec::from_int(4));
    let rest = four_r2.sub(&crd.mul_exact(crd));
    // rounding of the operand may leave a vanishing negative remainder at 2R
    if rest.is_negative() {
        Dec::new(0, w)
    } else {
        rest.sqrt_round(w)
    }
}

fn combine_raw(crd_a: &Dec, crd_b: &Dec, radius: &Dec, sum: bool, w: u32) -> Dec {
    let sup_a = supplement(crd_a, radius, w);
    let sup_b = supplement(crd_b, radius, w);
    let cross_a = crd_a.mul_round(&sup_b, w + 5);
    let cross_b = crd_b.mul_round(&sup_a, w + 5);
    let num = if sum { cross_a.add(&cross_b) } else { cross_a.sub(&cross_b) };
    num.div_round(&radius.mul_exact(&Dec::from_int(2)), w)
}

fn half_raw(crd: &Dec, radius: &Dec, w: u32) -> Dec {
    let two_r2 = radius.mul_exact(radius).mul_exact(&Dec::from_int(2));
    let inner = two_r2.sub(&radius.mul_round(&supplement(crd, radius, w + 5), w + 5));
    if inner.is_negative() {
        Dec::new(0, w)
    } else {
        inner.sqrt_round(w)
    }
}

/// Chords of the arcs subtended by the constructible regular polygons
/// (decagon, hexagon, pentagon, square, triangle), keyed by arc degrees.
///
/// Closed forms: crd 36° = R(√5-1)/2, crd 60° = R, crd 72° = R√(10-2√5)/2,
/// crd 90° = R√2, crd 120° = R√3.
pub fn polygon_chords(radius: &Dec, precision: u32) -> Result<BTreeMap<u32, Dec>> {
    check_radius(radius)?;
    let w = precision + 15;
    let five = Dec::from_int(5);
    let sqrt5 = five.sqrt_round(w);
    let mut out = BTreeMap::new();
    out.insert(
        36,
        radius
            .mul_round(&sqrt5.sub(&Dec::one()), w)
            .div_round(&Dec::from_int(2), precision),
    );
    out.insert(60, radius.rescale(precision));
    out.insert(
        72,
        radius
            .mul_round(
                &Dec::from_int(10).sub(&sqrt5.mul_round(&Dec::from_int(2), w)).sqrt_round(w),
                w,
            )
            .div_round(&Dec::from_int(2), precision),
    );
    out.insert(
        90,
        radius.mul_round(&Dec::from_int(2).sqrt_round(w), precision),
    );
    out.insert(
        120,
        radius.mul_round(&Dec::from_int(3).sqrt_round(w), precision),
    );
    Ok(out)
}

/// Chord of the sum or difference of two arcs via Ptolemy's cyclic
/// quadrilateral theorem, using the chords and their supplements.
///
/// The combined arc must stay inside (0°, 180°]; for a difference that means
/// `crd_a > crd_b`, and for a sum it is checked through the supplements
/// (`cos((a+b)/2) >= 0` is `crd_a*crd_b <= sup_a*sup_b`).
pub fn chord_combine(
    crd_a: &Dec,
    crd_b: &Dec,
    radius: &Dec,
    mode: CombineMode,
    precision: u32,
) -> Result<Dec> {
    check_radius(radius)?;
    let two_r = radius.mul_exact(&Dec::from_int(2));
    for c in [crd_a, crd_b] {
        if c.is_negative() || c.is_zero() || *c > two_r {
            return Err(Error::Domain("chord must lie in (0, 2R]".into()));
        }
    }
    let w = precision + 15;
    match mode {
        CombineMode::Difference => {
            if crd_a <= crd_b {
                return Err(Error::Domain(
                    "difference of arcs must be positive".into(),
                ));
            }
            Ok(combine_raw(crd_a, crd_b, radius, false, w).rescale(precision))
        }
        CombineMode::Sum => {
            let sup_a = supplement(crd_a, radius, w);
            let sup_b = supplement(crd_b, radius, w);
            // exactly 180° is legal; chords rounded at `precision` may tip the
            // comparison there by an ulp, so allow that much slack
            let slack = radius
                .mul_exact(&radius.add(&Dec::one()))
                .mul_exact(&Dec::from_int(2))
                .mul_exact(&Dec::new(1, precision));
            if crd_a.mul_exact(crd_b) > sup_a.mul_exact(&sup_b).add(&slack) {
                return Err(Error::Domain("combined arc exceeds 180 degrees".into()));
            }
            Ok(combine_raw(crd_a, crd_b, radius, true, w).rescale(precision))
        }
    }
}

/// Chord of half an arc: `crd(a/2) = sqrt(2R^2 - R*sqrt(4R^2 - crd(a)^2))`.
pub fn chord_half(crd_a: &Dec, radius: &Dec, precision: u32) -> Result<Dec> {
    check_radius(radius)?;
    let two_r = radius.mul_exact(&Dec::from_int(2));
    if crd_a.is_negative() || crd_a.is_zero() || *crd_a > two_r {
        return Err(Error::Domain("chord must lie in (0, 2R]".into()));
    }
    Ok(half_raw(crd_a, radius, precision + 15).rescale(precision))
}

/// Chord of the supplementary arc, `crd(180° - a) = sqrt(4R^2 - crd(a)^2)`.
pub fn chord_supplement(crd_a: &Dec, radius: &Dec, precision: u32) -> Result<Dec> {
    check_radius(radius)?;
    let two_r = radius.mul_exact(&Dec::from_int(2));
    if crd_a.is_negative() || *crd_a > two_r {
        return Err(Error::Domain("chord must lie in [0, 2R]".into()));
    }
    Ok(supplement(crd_a, radius, precision + 15).rescale(precision))
}

// crd 1.5° and crd 0.75° by the classical chain:
// crd 12° = crd(72° - 60°), then four successive halvings.
fn chain_small_chords(radius: &Dec, w: u32) -> (Dec, Dec) {
    let five = Dec::from_int(5);
    let sqrt5 = five.sqrt_round(w);
    let crd60 = radius.clone();
    let crd72 = radius
        .mul_round(
            &Dec::from_int(10).sub(&sqrt5.mul_round(&Dec::from_int(2), w)).sqrt_round(w),
            w,
        )
        .div_round(&Dec::from_int(2), w);
    let crd12 = combine_raw(&crd72, &crd60, radius, false, w);
    let crd6 = half_raw(&crd12, radius, w);
    let crd3 = half_raw(&crd6, radius, w);
    let crd1_5 = half_raw(&crd3, radius, w);
    let crd0_75 = half_raw(&crd1_5, radius, w);
    (crd1_5, crd0_75)
}

/// Lower and upper bounds for crd 1°, from the chord-to-arc monotonicity
/// `crd a / crd b < a/b` for `b < a < 90°`: lower = (2/3)·crd 1.5°,
/// upper = (4/3)·crd 0.75°, both reached by the half-arc chain from the
/// polygon chords. The true crd 1° lies strictly between.
pub fn crd1_bracket(radius: &Dec, precision: u32) -> Result<(Dec, Dec)> {
    check_radius(radius)?;
    let w = precision + 15;
    let (crd1_5, crd0_75) = chain_small_chords(radius, w);
    let lower = crd1_5
        .mul_round(&Dec::from_int(2), w)
        .div_round(&Dec::from_int(3), precision);
    let upper = crd0_75
        .mul_round(&Dec::from_int(4), w)
        .div_round(&Dec::from_int(3), precision);
    Ok((lower, upper))
}

/// Sines of the kardagae (multiples of 15°) from exact forms: 1/2, √2/2,
/// √3/2, 1, and the 15°/75° pair via the half-angle and complement of 30°.
pub fn kardaga_sines(precision: u32) -> Vec<(u32, Dec)> {
    let w = precision + 15;
    let half = Dec::parse("0.5").expect("literal");
    let sin45 = Dec::from_int(2).sqrt_round(w).div_round(&Dec::from_int(2), precision);
    let cos30 = Dec::from_int(3).sqrt_round(w).div_round(&Dec::from_int(2), w);
    // half-angle from 30°: sin 15° = sqrt((1 - cos 30°)/2); complement for 75°
    let sin15 = Dec::one()
        .sub(&cos30)
        .div_round(&Dec::from_int(2), w)
        .sqrt_round(precision);
    let sin75 = Dec::one()
        .add(&cos30)
        .div_round(&Dec::from_int(2), w)
        .sqrt_round(precision);
    vec![
        (15, sin15),
        (30, half.rescale(precision)),
        (45, sin45),
        (60, cos30.rescale(precision)),
        (75, sin75),
        (90, Dec::one().rescale(precision)),
    ]
}

/// Bürgi's approximation of sin 1° from the divided 1.5° arc:
/// `sin 45' + (1/6)·sin 90'`, with both sines taken from the classical
/// half-arc chain (crd 1.5°/2 and crd 3°/2 at R = 1). Absolute error against
/// the true sin 1° is below 2e-8.
pub fn buergi_sin1_approx(precision: u32) -> Dec {
    let w = precision + 15;
    let one = Dec::one();
    // chain at R = 1: need crd 3° and crd 1.5°
    let sqrt5 = Dec::from_int(5).sqrt_round(w);
    let crd72 = Dec::from_int(10)
        .sub(&sqrt5.mul_round(&Dec::from_int(2), w))
        .sqrt_round(w)
        .div_round(&Dec::from_int(2), w);
    let crd12 = combine_raw(&crd72, &one, &one, false, w);
    let crd6 = half_raw(&crd12, &one, w);
    let crd3 = half_raw(&crd6, &one, w);
    let crd1_5 = half_raw(&crd3, &one, w);
    let sin45m = crd1_5.div_round(&Dec::from_int(2), w);
    let sin90m = crd3.div_round(&Dec::from_int(2), w);
    sin45m.add(&sin90m.div_round(&Dec::from_int(6), w)).rescale(precision)
}

/// The classical half-degree chord table: arcs 30', 60', ..., 10800' built by
/// repeated Ptolemy sums of crd 0.5°, which comes from halving the crd 1°
/// bracket midpoint.
pub fn chord_table(radius: &Dec, precision: u32) -> Result<ChordTable> {
    check_radius(radius)?;
    let w = precision + 15;
    let entries = raw_half_degree_chords(radius, w)
        .into_iter()
        .enumerate()
        .map(|(i, c)| ((i as u32 + 1) * 30, c.rescale(precision)))
        .collect();
    Ok(ChordTable { radius: radius.clone(), step: 30, entries })
}

fn raw_half_degree_chords(radius: &Dec, w: u32) -> Vec<Dec> {
    let (crd1_5, crd0_75) = chain_small_chords(radius, w);
    let lower = crd1_5.mul_round(&Dec::from_int(2), w).div_round(&Dec::from_int(3), w);
    let upper = crd0_75.mul_round(&Dec::from_int(4), w).div_round(&Dec::from_int(3), w);
    let crd1 = lower.add(&upper).div_round(&Dec::from_int(2), w);
    let base = half_raw(&crd1, radius, w); // crd 0.5°
    let mut chords = Vec::with_capacity(360);
    chords.push(base.clone());
    for _ in 1..360 {
        chords.push(combine_raw(chords.last().expect("nonempty"), &base, radius, true, w));
    }
    chords
}

/// A sine table derived purely from the chord table: `sin φ = crd 2φ / 2R`,
/// renormalized so the 90° entry is exactly 1.
///
/// The step must divide 5400' and be a multiple of 15', since the classical
/// chain only reaches chords on the half-degree arc grid. Accuracy is limited
/// by the crd 1° bracket midpoint to roughly 3e-6 in sine units.
pub fn ptolemy_sine_table(radius: &Dec, step: u32, precision: u32) -> Result<SineTable> {
    check_radius(radius)?;
    if step == 0 || 5400 % step != 0 {
        return Err(Error::Config(format!("step {step}' does not divide 5400'")));
    }
    if !step.is_multiple_of(15) {
        return Err(Error::Config(format!(
            "step {step}' is off the classical half-degree chord grid (need a multiple of 15')"
        )));
    }
    let w = precision + 15;
    let chords = raw_half_degree_chords(radius, w);
    let two_r = radius.mul_exact(&Dec::from_int(2));
    let count = 5400 / step;
    let mut sines: Vec<Dec> = (1..=count)
        .map(|k| {
            let arc = 2 * k * step; // multiple of 30'
            chords[(arc / 30) as usize - 1].div_round(&two_r, w)
        })
        .collect();
    let last = sines.last().expect("count >= 1").clone();
    for s in sines.iter_mut() {
        *s = s.div_round(&last, w);
    }
    *sines.last_mut().expect("count >= 1") = Dec::new(pow10(w), w);
    let entries = sines
        .into_iter()
        .enumerate()
        .map(|(i, v)| ((i as u32 + 1) * step, v.rescale(precision)))
        .collect();
    SineTable::from_entries(step, entries, precision, Provenance::Ptolemy)
}
