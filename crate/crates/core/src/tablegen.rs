//! Full sine-table production: the degree table from the 90-part iteration,
//! the minute table from a corrected sin 1' seed propagated by the three-term
//! recurrence, and error reporting against the reference oracle.

use crate::dec::{self, pow10, Dec};
use crate::error::{Error, Result};
use crate::kunstweg::{self, reference_sine, DyadicVector, StopRule, PRECISION_CEILING};

/// How a table's values were produced.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Provenance {
    Kunstweg,
    Ptolemy,
    Recurrence,
    Reference,
}

impl Provenance {
    pub fn name(&self) -> &'static str {
        match self {
            Provenance::Kunstweg => "kunstweg",
            Provenance::Ptolemy => "ptolemy",
            Provenance::Recurrence => "recurrence",
            Provenance::Reference => "reference",
        }
    }
}

/// A normalized sine table at a fixed angular step.
///
/// Entries cover `step..=5400` arcminutes, strictly increasing, ending at
/// exactly 1. Values may carry guard digits beyond the advertised `precision`;
/// formatting rounds.
#[derive(Debug, Clone)]
pub struct SineTable {
    step: u32,
    entries: Vec<(u32, Dec)>,
    precision: u32,
    provenance: Provenance,
}

impl SineTable {
    pub(crate) fn from_entries(
        step: u32,
        entries: Vec<(u32, Dec)>,
        precision: u32,
        provenance: Provenance,
    ) -> Result<Self> {
        if step == 0 || 5400 % step != 0 {
            return Err(Error::Config(format!("step {step}' does not divide 5400'")));
        }
        if entries.len() != (5400 / step) as usize {
            return Err(Error::InvalidState(format!(
                "expected {} entries, got {}",
                5400 / step,
                entries.len()
            )));
        }
        for (i, (angle, value)) in entries.iter().enumerate() {
            if *angle != (i as u32 + 1) * step {
                return Err(Error::InvalidState(format!("angle grid broken at index {i}")));
            }
            if value.is_negative() || value.is_zero() || *value > Dec::one() {
                return Err(Error::InvalidState(format!(
                    "value at {angle}' outside (0, 1]"
                )));
            }
            if i > 0 && entries[i - 1].1 >= *value {
                return Err(Error::InvalidState(format!(
                    "values not strictly increasing at {angle}'"
                )));
            }
        }
        if entries.last().expect("nonempty").1 != Dec::one() {
            return Err(Error::InvalidState("90-degree entry must be exactly 1".into()));
        }
        Ok(SineTable { step, entries, precision, provenance })
    }

    pub fn step(&self) -> u32 {
        self.step
    }

    pub fn precision(&self) -> u32 {
        self.precision
    }

    pub fn provenance(&self) -> Provenance {
        self.provenance
    }

    pub fn entries(&self) -> &[(u32, Dec)] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Value at an exact grid angle, if `arcmin` is on the grid.
    pub fn get(&self, arcmin: u32) -> Option<&Dec> {
        if arcmin == 0 || arcmin > 5400 || !arcmin.is_multiple_of(self.step) {
            return None;
        }
        self.entries.get((arcmin / self.step) as usize - 1).map(|(_, v)| v)
    }

    /// The same table restricted to a coarser grid; `step` must be a
    /// multiple of this table's step and divide 5400'.
    pub fn subsample(&self, step: u32) -> Result<SineTable> {
        if step == 0 || !step.is_multiple_of(self.step) || 5400 % step != 0 {
            return Err(Error::Config(format!(
                "step {step}' is not a coarsening of the {}' grid",
                self.step
            )));
        }
        let entries = (1..=5400 / step)
            .map(|k| (k * step, self.get(k * step).expect("on grid").clone()))
            .collect();
        SineTable::from_entries(step, entries, self.precision, self.provenance)
    }
}

/// Sine table for whole degrees via the 90-part iteration, normalized and
/// rounded at `precision` decimal places.
pub fn degree_table(precision: u32) -> Result<SineTable> {
    let seed = DyadicVector::ramp(90)?;
    let (state, _report) = kunstweg::iterate(&seed, StopRule::TargetDigits(precision))?;
    let values = kunstweg::normalize(&state, precision)?;
    let entries = values
        .into_iter()
        .enumerate()
        .map(|(i, v)| ((i as u32 + 1) * 60, v))
        .collect();
    SineTable::from_entries(60, entries, precision, Provenance::Kunstweg)
}

/// The printed sin 1' value from Bürgi's minute-table derivation, kept as a
/// historical regression constant next to the correctly rounded value.
pub const BUERGI_SIN1M_PRINTED: &str = "0.00029088863";
/// sin 1' correctly rounded to the same number of places.
pub const BUERGI_SIN1M_ROUNDED: &str = "0.00029088820";

/// A corrected seed for sin 1', far more accurate than the naive sin 1°/60.
///
/// Takes sin 1° from the 90-part iteration, then applies two corrections:
/// arc recovery (`a = S + S³/6 + 3S⁵/40`, the inverse-sine series) and sine
/// restoration (`sin 1' = a/60 - (a/60)³/6`). The result is within 1e-12 of
/// the true sin 1' (about 4e-16 in practice).
pub fn sin1_minute_seed(precision: u32) -> Result<Dec> {
    if precision + 5 > PRECISION_CEILING {
        return Err(Error::Config(format!(
            "precision {precision} leaves no room for the +5 guard digits under ceiling {PRECISION_CEILING}"
        )));
    }
    let w = precision + 15;
    let seed = DyadicVector::ramp(90)?;
    let (state, _) = kunstweg::iterate(&seed, StopRule::TargetDigits(precision + 5))?;
    let s = kunstweg::normalize(&state, precision + 8)?
        .first()
        .expect("n = 90")
        .clone();

    let s2 = s.mul_round(&s, w);
    let s3 = s2.mul_round(&s, w);
    let s5 = s3.mul_round(&s2, w);
    let arc = s
        .add(&s3.div_round(&Dec::from_int(6), w))
        .add(&s5.mul_round(&Dec::from_int(3), w).div_round(&Dec::from_int(40), w));
    let t = arc.div_round(&Dec::from_int(60), w);
    let t3 = t.mul_round(&t, w).mul_round(&t, w);
    Ok(t.sub(&t3.div_round(&Dec::from_int(6), w)).rescale(precision + 13))
}

// Relative drift of the 90° entry tolerated before normalization: a seed
// within 1e-10 of sin 1' scales the whole run by at most 1e-10/sin 1'.
const SEED_DRIFT_LIMIT: &str = "0.0000006";

/// Minute table: s_0 = 0, s_1 = seed, then the constant-coefficient
/// recurrence `s_{k+1} = 2 cos(1') s_k - s_{k-1}` for all 5400 entries,
/// finally renormalized by the computed 90° entry (which cancels the seed's
/// own scale error and pins sin 90° to exactly 1).
///
/// cos(1') is evaluated once at `precision + 10` digits and the recurrence
/// runs with `precision + 13` working digits; after renormalization every
/// entry is within 10^-precision of the true sine for precision <= 12.
pub fn minute_table(seed: &Dec, precision: u32) -> Result<SineTable> {
    let w = precision + 13;
    // cos(1') = sin(pi/2 - pi/10800)
    let two_cos = dec::sin_pi_frac(5399, 10800, precision + 10)?.mul_exact(&Dec::from_int(2));

    let mut prev = Dec::new(0, w);
    let mut cur = seed.rescale(w);
    let mut values: Vec<Dec> = Vec::with_capacity(5400);
    values.push(cur.clone());
    for _ in 2..=5400u32 {
        let next = two_cos.mul_round(&cur, w).sub(&prev);
        prev = cur;
        cur = next.clone();
        values.push(next);
    }

    let top = values.last().expect("5400 entries").clone();
    let drift = top.sub(&Dec::one()).abs();
    if drift > Dec::parse(SEED_DRIFT_LIMIT).expect("literal") {
        return Err(Error::SeedAccuracy(format!(
            "seed is too far from sin 1': the 90-degree entry came out {top}"
        )));
    }
    for v in values.iter_mut() {
        *v = v.div_round(&top, w);
    }
    *values.last_mut().expect("5400 entries") = Dec::new(pow10(w), w);

    let entries = values
        .into_iter()
        .enumerate()
        .map(|(i, v)| (i as u32 + 1, v))
        .collect();
    SineTable::from_entries(1, entries, precision, Provenance::Recurrence)
}

/// Table of reference-oracle sines, for comparisons and as the error-report
/// baseline in tests. Entries keep 10 guard digits so the fine grid stays
/// strictly increasing near 90°.
pub fn reference_table(step: u32, precision: u32) -> Result<SineTable> {
    if step == 0 || 5400 % step != 0 {
        return Err(Error::Config(format!("step {step}' does not divide 5400'")));
    }
    let entries = (1..=5400 / step)
        .map(|k| Ok((k * step, reference_sine(k * step, precision + 10)?)))
        .collect::<Result<Vec<_>>>()?;
    SineTable::from_entries(step, entries, precision, Provenance::Reference)
}

/// Error statistics of a table against the reference oracle.
#[derive(Debug, Clone, Copy)]
pub struct ErrorReport {
    pub max_abs_error: f64,
    /// Angle (arcminutes) where the maximum occurs.
    pub angle_of_max: u32,
    pub rms: f64,
}

/// Sweep a table against [`reference_sine`] at matching precision.
pub fn table_error_report(table: &SineTable, precision: u32) -> Result<ErrorReport> {
    if table.is_empty() {
        return Err(Error::InvalidState("table is empty".into()));
    }
    let mut max_abs = Dec::zero();
    let mut angle_of_max = table.entries()[0].0;
    let mut sum_sq = 0.0f64;
    for (angle, value) in table.entries() {
        let reference = reference_sine(*angle, precision.max(value.scale()).min(PRECISION_CEILING))?;
        let err = value.sub(&reference).abs();
        if err > max_abs {
            max_abs = err.clone();
            angle_of_max = *angle;
        }
        let e = err.to_f64();
        sum_sq += e * e;
    }
    Ok(ErrorReport {
        max_abs_error: max_abs.to_f64(),
        angle_of_max,
        rms: (sum_sq / table.len() as f64).sqrt(),
    })
}
