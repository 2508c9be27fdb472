//! Bürgi's arithmetical sine iteration over exact dyadic integers.
//!
//! One pass of the "Kunstweg" takes a column of n nonnegative values, halves
//! the bottom entry, accumulates upward into an auxiliary column, then
//! accumulates the auxiliary column downward into the next result column.
//! Normalizing any column by its bottom entry converges quickly to
//! `sin(j*pi/2n)` for j = 1..=n; that is the content of the Perron-Frobenius
//! analysis of the step matrix, whose dominant eigenvalue has the closed form
//! `csc^2(pi/4n)/4`.
//!
//! All column arithmetic is exact: entries are unbounded integers over a
//! shared power-of-two denominator, and halving an odd bottom entry doubles
//! the whole column instead of rounding. Floating point never enters the
//! iteration itself; high-precision decimals appear only when normalizing or
//! reporting.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::Zero;

use crate::dec::{self, digits_correct, div_round_half_away, pow10, Dec};
use crate::error::{Error, Result};

/// Hard ceiling on requested decimal precision for normalization, reference
/// sines, and convergence targets. Generous next to the 9-10 digits the
/// method is historically run to.
pub const PRECISION_CEILING: u32 = 50;

/// Bürgi's own example seed for the nine-part division of the right angle.
pub const BUERGI_SEED: [u64; 9] = [2, 4, 6, 7, 8, 9, 10, 11, 12];

/// Column state of the iteration: entry j (1-based) has true value
/// `numerators[j-1] / 2^scale_exp`. The implicit top entry a_0 = 0 is never
/// stored. At least one entry is nonzero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DyadicVector {
    numerators: Vec<BigUint>,
    scale_exp: u32,
}

impl DyadicVector {
    pub fn new(numerators: Vec<BigUint>, scale_exp: u32) -> Result<Self> {
        if numerators.is_empty() {
            return Err(Error::InvalidState("column must have n >= 1 entries".into()));
        }
        if numerators.iter().all(|x| x.is_zero()) {
            return Err(Error::InvalidState(
                "column must have at least one nonzero entry".into(),
            ));
        }
        Ok(DyadicVector { numerators, scale_exp })
    }

    /// Integer seed at scale 0.
    pub fn from_seed(seed: &[u64]) -> Result<Self> {
        Self::new(seed.iter().map(|&x| BigUint::from(x)).collect(), 0)
    }

    /// The default seed for an n-part division: the linear ramp 1, 2, ..., n.
    pub fn ramp(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidState("part count must be >= 1".into()));
        }
        Self::from_seed(&(1..=n as u64).collect::<Vec<_>>())
    }

    pub fn n(&self) -> usize {
        self.numerators.len()
    }

    pub fn numerators(&self) -> &[BigUint] {
        &self.numerators
    }

    pub fn scale_exp(&self) -> u32 {
        self.scale_exp
    }

    /// Entry values as exact rationals (numerator over 2^scale_exp).
    pub fn to_rationals(&self) -> Vec<BigRational> {
        let den = BigInt::from(2u32).pow(self.scale_exp);
        self.numerators
            .iter()
            .map(|x| BigRational::new(BigInt::from(x.clone()), den.clone()))
            .collect()
    }

    fn bottom(&self) -> &BigUint {
        self.numerators.last().expect("n >= 1")
    }
}

/// The intermediate column of one step: b_n = a_n/2 and b_j = a_j + b_{j+1}
/// descending. Values share the output column's power-of-two scale.
///
/// Stored in computation order b_1..b_n; read bottom-to-top, entry i
/// approximates `sin((2i-1) * pi/4n)` relative to `2 sin(pi/4n) * a_n` of the
/// result column once the iteration has converged.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AuxiliaryColumn {
    values: Vec<BigUint>,
    scale_exp: u32,
}

impl AuxiliaryColumn {
    pub fn n(&self) -> usize {
        self.values.len()
    }

    pub fn values(&self) -> &[BigUint] {
        &self.values
    }

    pub fn scale_exp(&self) -> u32 {
        self.scale_exp
    }
}

/// One two-pass step of the iteration.
///
/// If the bottom entry is odd the whole column is doubled first (raising
/// `scale_exp` by one) so the halving stays integral; the dyadic scale
/// cancels under normalization.
pub fn kunstweg_step(state: &DyadicVector) -> Result<(DyadicVector, AuxiliaryColumn)> {
    if state.numerators.iter().all(|x| x.is_zero()) {
        return Err(Error::InvalidState("all-zero column".into()));
    }
    let n = state.n();
    let mut nums: Vec<BigUint> = state.numerators.clone();
    let mut scale_exp = state.scale_exp;
    if nums[n - 1].is_odd() {
        for x in nums.iter_mut() {
            *x <<= 1;
        }
        scale_exp += 1;
    }

    // ascending pass, bottom to top
    let mut aux = vec![BigUint::zero(); n];
    aux[n - 1] = &nums[n - 1] >> 1;
    for j in (0..n - 1).rev() {
        aux[j] = &nums[j] + &aux[j + 1];
    }

    // descending pass, top to bottom
    let mut next = vec![BigUint::zero(); n];
    next[0] = aux[0].clone();
    for j in 1..n {
        next[j] = &next[j - 1] + &aux[j];
    }

    Ok((
        DyadicVector { numerators: next, scale_exp },
        AuxiliaryColumn { values: aux, scale_exp },
    ))
}

/// Stopping rule for [`iterate`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StopRule {
    /// Run exactly this many steps.
    MaxIterations(usize),
    /// Stop once the largest change of any normalized entry between
    /// successive steps drops below `10^-(digits+1)`.
    TargetDigits(u32),
}

/// Per-run convergence diagnostics.
///
/// `eigenvalue_estimates` holds the bottom-entry growth ratio of each step
/// (the observable the worked example prints); residuals compare normalized
/// entries against the reference sine at the report's working scale, so both
/// residuals and digit counts saturate there.
#[derive(Debug, Clone)]
pub struct ConvergenceReport {
    pub iterations: usize,
    pub eigenvalue_estimates: Vec<Dec>,
    pub closed_form_eigenvalue: Dec,
    /// Final `max_j |a_j/a_n - sin(j*pi/2n)|`.
    pub normalized_residual: Dec,
    /// `floor(-log10(normalized_residual))`, saturating at the working scale.
    pub digits_correct: i64,
    pub residual_history: Vec<Dec>,
    pub digits_history: Vec<i64>,
}

const ESTIMATE_SCALE: u32 = 30;
const ITERATION_HARD_CAP: usize = 10_000;

/// Run the iteration from `seed` until `stop` is satisfied.
pub fn iterate(seed: &DyadicVector, stop: StopRule) -> Result<(DyadicVector, ConvergenceReport)> {
    let n = seed.n();
    let (max_iterations, threshold, work_scale) = match stop {
        StopRule::MaxIterations(0) => {
            return Err(Error::Config("max_iterations must be positive".into()))
        }
        StopRule::MaxIterations(m) => (m, None, ESTIMATE_SCALE),
        StopRule::TargetDigits(0) => {
            return Err(Error::Config("target_digits must be positive".into()))
        }
        StopRule::TargetDigits(d) if d > PRECISION_CEILING => {
            return Err(Error::Config(format!(
                "target_digits {d} exceeds precision ceiling {PRECISION_CEILING}"
            )))
        }
        StopRule::TargetDigits(d) => (ITERATION_HARD_CAP, Some(Dec::new(1, d + 1)), d + 12),
    };

    let reference: Vec<Dec> = (1..=n)
        .map(|j| dec::sin_pi_frac(j as u64, 2 * n as u64, work_scale))
        .collect::<Result<_>>()?;

    let mut state = seed.clone();
    let mut report = ConvergenceReport {
        iterations: 0,
        eigenvalue_estimates: Vec::new(),
        closed_form_eigenvalue: perron_eigenvalue(n, ESTIMATE_SCALE),
        normalized_residual: Dec::new(0, work_scale),
        digits_correct: work_scale as i64,
        residual_history: Vec::new(),
        digits_history: Vec::new(),
    };
    let mut prev_snapshot: Option<Vec<Dec>> = None;

    for _ in 0..max_iterations {
        let old_bottom = state.bottom().clone();
        let old_exp = state.scale_exp;
        let (next, _aux) = kunstweg_step(&state)?;
        report.iterations += 1;

        // bottom-entry growth ratio as true values: exp only ever grows
        let num = BigInt::from(next.bottom().clone()) * pow10(ESTIMATE_SCALE);
        let den = BigInt::from(old_bottom) << (next.scale_exp - old_exp);
        report
            .eigenvalue_estimates
            .push(Dec::new(div_round_half_away(&num, &den), ESTIMATE_SCALE));

        let snapshot = normalized_at(&next, work_scale);
        let residual = snapshot
            .iter()
            .zip(&reference)
            .map(|(v, r)| v.sub(r).abs())
            .max()
            .expect("n >= 1");
        report.digits_correct = digits_correct(&residual);
        report.digits_history.push(report.digits_correct);
        report.residual_history.push(residual.clone());
        report.normalized_residual = residual;

        let converged = match (&threshold, &prev_snapshot) {
            (Some(eps), Some(prev)) => {
                let change = snapshot
                    .iter()
                    .zip(prev)
                    .map(|(a, b)| a.sub(b).abs())
                    .max()
                    .expect("n >= 1");
                change < *eps
            }
            _ => false,
        };
        prev_snapshot = Some(snapshot);
        state = next;
        if converged {
            return Ok((state, report));
        }
    }

    if threshold.is_some() {
        return Err(Error::Config(format!(
            "no convergence within {ITERATION_HARD_CAP} iterations"
        )));
    }
    Ok((state, report))
}

fn normalized_at(state: &DyadicVector, scale: u32) -> Vec<Dec> {
    let bottom = BigInt::from(state.bottom().clone());
    state
        .numerators
        .iter()
        .map(|x| {
            let num = BigInt::from(x.clone()) * pow10(scale);
            Dec::new(div_round_half_away(&num, &bottom), scale)
        })
        .collect()
}

/// Divide every entry by the bottom one, each correctly rounded to
/// `precision` decimal places. The bottom entry maps to exactly 1.
pub fn normalize(state: &DyadicVector, precision: u32) -> Result<Vec<Dec>> {
    if precision > PRECISION_CEILING {
        return Err(Error::Config(format!(
            "precision {precision} exceeds ceiling {PRECISION_CEILING}"
        )));
    }
    if state.bottom().is_zero() {
        return Err(Error::InvalidState("bottom entry is zero".into()));
    }
    Ok(normalized_at(state, precision))
}

/// The step matrix applied densely to an exact rational vector, used as an
/// oracle against [`kunstweg_step`]. Row j is `1, 2, ..., j-1` then `j`
/// repeated, with last column `j/2`; the last row is `1, 2, ..., n-1, n/2`.
pub fn apply_matrix_dense(v: &[BigRational], n: usize) -> Result<Vec<BigRational>> {
    if v.len() != n {
        return Err(Error::Dimension { expected: n, got: v.len() });
    }
    let matrix: Vec<Vec<BigRational>> = (1..=n)
        .map(|j| {
            (1..=n)
                .map(|l| {
                    if l == n {
                        BigRational::new(BigInt::from(j), BigInt::from(2))
                    } else {
                        BigRational::from_integer(BigInt::from(j.min(l)))
                    }
                })
                .collect()
        })
        .collect();
    Ok(matrix
        .iter()
        .map(|row| row.iter().zip(v).map(|(m, x)| m * x).sum())
        .collect())
}

/// The inverse of the step matrix: second differences with adjusted first and
/// last rows — row 1 is `(2, -1, 0, ...)`, interior rows `(-1, 2, -1)`, last
/// row `(0, ..., -2, 2)`.
pub fn second_difference_inverse(v: &[BigRational], n: usize) -> Result<Vec<BigRational>> {
    if v.len() != n {
        return Err(Error::Dimension { expected: n, got: v.len() });
    }
    let two = BigRational::from_integer(BigInt::from(2));
    if n == 1 {
        return Ok(vec![&two * &v[0]]);
    }
    let mut out = Vec::with_capacity(n);
    out.push(&two * &v[0] - &v[1]);
    for j in 1..n - 1 {
        out.push(&two * &v[j] - &v[j - 1] - &v[j + 1]);
    }
    out.push(&two * &v[n - 1] - &two * &v[n - 2]);
    Ok(out)
}

/// Closed form of the dominant eigenvalue, `csc^2(pi/4n)/4`, rounded at
/// `precision` decimal places.
pub fn perron_eigenvalue(n: usize, precision: u32) -> Dec {
    assert!(n >= 1, "part count must be >= 1");
    let w = precision + 15;
    let s = dec::sin_pi_frac(1, 4 * n as u64, w).expect("1/(4n) is in [0, 1/2]");
    let four_s2 = s.mul_round(&s, w).mul_round(&Dec::from_int(4), w);
    Dec::one().div_round(&four_s2, precision)
}

/// Independent oracle: `sin(angle * pi/10800)` for an angle in arcminutes,
/// evaluated by argument reduction and a tail-bounded Taylor series, correctly
/// rounded to `precision` decimal places.
pub fn reference_sine(arcmin: u32, precision: u32) -> Result<Dec> {
    if arcmin > 5400 {
        return Err(Error::Domain(format!(
            "angle {arcmin}' outside 0..=5400"
        )));
    }
    if precision > PRECISION_CEILING {
        return Err(Error::Config(format!(
            "precision {precision} exceeds ceiling {PRECISION_CEILING}"
        )));
    }
    dec::sin_pi_frac(arcmin as u64, 10800, precision)
}
