//! Property and invariant tests: exact algebraic laws of the sexagesimal
//! layer, equivalence of the column step with its dense matrix form, the
//! second-difference inversion, the telescoping identities behind the
//! eigenvalue closed form, and the analytic invariants of generated tables.

use buergi::dec::{pi, Dec};
use buergi::kunstweg::{
    apply_matrix_dense, iterate, kunstweg_step, normalize, perron_eigenvalue, reference_sine,
    second_difference_inverse, DyadicVector, StopRule, BUERGI_SEED,
};
use buergi::sexagesimal::Sexagesimal;
use buergi::tablegen::{minute_table, sin1_minute_seed};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use proptest::prelude::*;

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

fn dec_to_rational(x: &Dec) -> BigRational {
    BigRational::new(x.mantissa().clone(), BigInt::from(10u32).pow(x.scale()))
}

// -------------------- sexagesimal --------------------

proptest! {
    #[test]
    fn sexagesimal_format_round_trip(mant in 0u64..100_000_000, scale in 0u32..=6, places in 0u32..=8) {
        // x in [0, 100) with assorted decimal tails
        let x = Dec::new(mant % (100 * 10u64.pow(scale)), scale);
        let text = Sexagesimal::format(&x, places);
        let back = Sexagesimal::parse(&text).unwrap();
        let diff = (back.to_rational() - dec_to_rational(&x)).abs();
        let half_ulp = BigRational::new(BigInt::from(1), BigInt::from(2) * BigInt::from(60u32).pow(places));
        prop_assert!(diff <= half_ulp, "{text} differs from {x} by {diff}");
    }

    #[test]
    fn sexagesimal_ring_laws(
        a in proptest::collection::vec(0u8..60, 1..4),
        b in proptest::collection::vec(0u8..60, 1..4),
        c in proptest::collection::vec(0u8..60, 1..4),
        fa in proptest::collection::vec(0u8..60, 0..3),
        fb in proptest::collection::vec(0u8..60, 0..3),
        fc in proptest::collection::vec(0u8..60, 0..3),
        sa in prop::bool::ANY,
        sb in prop::bool::ANY,
    ) {
        let mk = |neg: bool, int: &[u8], frac: &[u8]| {
            let digits = |ds: &[u8]| ds.iter().map(|d| d.to_string()).collect::<Vec<_>>().join(",");
            let mut s = String::new();
            if neg { s.push('-'); }
            s.push_str(&digits(int));
            if !frac.is_empty() {
                s.push(';');
                s.push_str(&digits(frac));
            }
            Sexagesimal::parse(&s).unwrap()
        };
        let x = mk(sa, &a, &fa);
        let y = mk(sb, &b, &fb);
        let z = mk(false, &c, &fc);

        // commutativity and associativity of add, commutativity of mul,
        // distributivity -- all on exact values
        prop_assert_eq!(x.add(&y).to_rational(), y.add(&x).to_rational());
        prop_assert_eq!(
            x.add(&y).add(&z).to_rational(),
            x.add(&y.add(&z)).to_rational()
        );
        prop_assert_eq!(x.mul(&y).to_rational(), y.mul(&x).to_rational());
        prop_assert_eq!(
            x.mul(&y.add(&z)).to_rational(),
            x.mul(&y).add(&x.mul(&z)).to_rational()
        );
    }

    #[test]
    fn sexagesimal_sqrt_bound(mant in 0u64..u32::MAX as u64, p in 0u32..=6, places in 0u32..=5) {
        let a = Sexagesimal::format(&Dec::new(mant % 10u64.pow(6 + p.min(3)), p), p.min(3) + 1);
        let a = Sexagesimal::parse(&a).unwrap();
        let r = a.sqrt(places).unwrap();
        let av = a.to_rational();
        let diff = (r.to_rational().pow(2) - av.clone()).abs();
        let bound = rat(2, 1) / BigRational::from_integer(BigInt::from(60u32).pow(places))
            * (BigRational::from_integer(1.into()) + av);
        prop_assert!(diff <= bound);
    }
}

// -------------------- iteration vs dense matrix --------------------

proptest! {
    #[test]
    fn step_equals_dense_matrix(seed in proptest::collection::vec(0u64..10_000, 1..=32)) {
        prop_assume!(seed.iter().any(|&x| x != 0));
        let n = seed.len();
        let state = DyadicVector::from_seed(&seed).unwrap();
        let (next, _) = kunstweg_step(&state).unwrap();
        let dense = apply_matrix_dense(&state.to_rationals(), n).unwrap();
        prop_assert_eq!(next.to_rationals(), dense);
    }

    #[test]
    fn inverse_undoes_dense_matrix(v in proptest::collection::vec((-999i64..1000, 1i64..100), 1..=32)) {
        let v: Vec<BigRational> = v.into_iter().map(|(n, d)| rat(n, d)).collect();
        let n = v.len();
        let through = apply_matrix_dense(&v, n).unwrap();
        let back = second_difference_inverse(&through, n).unwrap();
        prop_assert_eq!(back, v);
    }

    #[test]
    fn telescoping_identities(seq in proptest::collection::vec((-999i64..1000, 1i64..100), 1..=16)) {
        // a_0 = 0 prepended; both identities hold for every 1 <= j <= n
        let mut a = vec![BigRational::zero()];
        a.extend(seq.into_iter().map(|(n, d)| rat(n, d)));
        let n = a.len() - 1;
        let half = rat(1, 2);
        for j in 1..=n {
            // sum_{l<j} l*a_l - sum_{l<j} (l/2)(a_{l-1}+a_{l+1}) = (j*a_{j-1} - (j-1)*a_j)/2
            let lhs1: BigRational = (1..j)
                .map(|l| rat(l as i64, 1) * &a[l] - rat(l as i64, 2) * (&a[l - 1] + &a[l + 1]))
                .sum();
            let rhs1 = &half * (rat(j as i64, 1) * &a[j - 1] - rat(j as i64 - 1, 1) * &a[j]);
            prop_assert_eq!(lhs1, rhs1);

            // sum_{l=j}^{n-1} a_l - sum (a_{l-1}+a_{l+1})/2 = (a_{n-1} - a_n + a_j - a_{j-1})/2
            let lhs2: BigRational = (j..n)
                .map(|l| &a[l] - &half * (&a[l - 1] + &a[l + 1]))
                .sum();
            let rhs2 = &half * (&a[n - 1] - &a[n] + &a[j] - &a[j - 1]);
            prop_assert_eq!(lhs2, rhs2);
        }
    }

    #[test]
    fn normalization_is_scale_invariant(seed in proptest::collection::vec(0u64..5_000, 1..=16), c in 1u64..1000) {
        prop_assume!(*seed.last().unwrap() != 0);
        let base = DyadicVector::from_seed(&seed).unwrap();
        let scaled = DyadicVector::from_seed(&seed.iter().map(|&x| x * c).collect::<Vec<_>>()).unwrap();
        prop_assert_eq!(normalize(&base, 12).unwrap(), normalize(&scaled, 12).unwrap());
    }

    #[test]
    fn one_step_makes_everything_positive(seed in proptest::collection::vec(0u64..1000, 1..=24)) {
        prop_assume!(seed.iter().any(|&x| x != 0));
        let state = DyadicVector::from_seed(&seed).unwrap();
        let (next, _) = kunstweg_step(&state).unwrap();
        for x in next.numerators() {
            prop_assert!(!x.is_zero());
        }
    }
}

// -------------------- analytic invariants --------------------

/// The auxiliary column read bottom-to-top tracks the midpoint sines
/// sin((2i-1)*pi/4n) once normalized by 2 sin(pi/4n) times the new bottom
/// entry, to within 10x the main column's own residual.
#[test]
fn auxiliary_column_tracks_midpoint_sines() {
    let n = 9usize;
    let w = 30u32;
    let half_step: Vec<Dec> = (0..n)
        .map(|i| reference_sine((2 * i as u32 + 1) * 300, w).unwrap())
        .collect(); // sin 5°, 15°, ..., 85°
    let full_step: Vec<Dec> = (1..=n)
        .map(|j| reference_sine(j as u32 * 600, w).unwrap())
        .collect();
    let two_sin_half = reference_sine(300, w).unwrap().mul_round(&Dec::from_int(2), w);

    for seed in [
        DyadicVector::from_seed(&BUERGI_SEED).unwrap(),
        DyadicVector::ramp(9).unwrap(),
        DyadicVector::from_seed(&[1; 9]).unwrap(),
        DyadicVector::from_seed(&[3, 9, 1, 14, 2, 8, 20, 5, 11]).unwrap(),
    ] {
        let mut state = seed;
        let mut aux = None;
        for _ in 0..6 {
            let (next, a) = kunstweg_step(&state).unwrap();
            state = next;
            aux = Some(a);
        }
        let aux = aux.unwrap();

        let normalized = normalize(&state, w).unwrap();
        let main_residual = normalized
            .iter()
            .zip(&full_step)
            .map(|(v, r)| v.sub(r).abs())
            .max()
            .unwrap();

        let bottom = Dec::new(BigInt::from(state.numerators().last().unwrap().clone()), 0);
        let scale_norm = two_sin_half.mul_round(&bottom, w);
        let aux_deviation = (0..n)
            .map(|i| {
                let b = Dec::new(BigInt::from(aux.values()[n - 1 - i].clone()), 0);
                b.div_round(&scale_norm, w).sub(&half_step[i]).abs()
            })
            .max()
            .unwrap();

        let allowance = main_residual.mul_round(&Dec::from_int(10), w);
        assert!(
            aux_deviation < allowance,
            "aux deviation {aux_deviation} vs main residual {main_residual}"
        );
    }
}

/// The reference-sine vector is an eigenvector of the step matrix: evaluated
/// over 30-place inputs, the componentwise residual stays below the
/// propagated input-rounding bound of 1e-26 (row coefficient sums reach
/// ~n^2/2 + mu, so the half-ulp input errors can add up to ~4e-27 at n=90).
#[test]
fn reference_sines_satisfy_the_eigen_equation() {
    let p = 30u32;
    let tolerance = Dec::new(1, 26);
    for n in [2usize, 9, 30, 90] {
        let arc = 5400 / n as u32; // j*pi/2n in arcminutes is j*5400/n
        let v: Vec<Dec> = (1..=n)
            .map(|j| reference_sine(j as u32 * arc, p).unwrap())
            .collect();
        let mu = perron_eigenvalue(n, p);
        let worst = (1..=n)
            .map(|j| {
                let mut lhs = Dec::new(5 * j as i64, 1); // j/2 exactly
                for l in 1..j {
                    lhs = lhs.add(&v[l - 1].mul_exact(&Dec::from_int(l as i64)));
                }
                for l in j..n {
                    lhs = lhs.add(&v[l - 1].mul_exact(&Dec::from_int(j as i64)));
                }
                lhs.sub(&mu.mul_exact(&v[j - 1])).abs()
            })
            .max()
            .unwrap();
        assert!(worst < tolerance, "n={n}: residual {worst}");
    }
}

/// Convergence of the bottom-ratio estimates to the closed-form eigenvalue,
/// and of the normalized entries to the reference sines.
#[test]
fn iteration_converges_for_odd_and_even_part_counts() {
    for n in [1usize, 2, 5, 12] {
        let seed = DyadicVector::ramp(n).unwrap();
        let (state, report) = iterate(&seed, StopRule::TargetDigits(11)).unwrap();
        let normed = normalize(&state, 13).unwrap();
        let eps = Dec::new(1, 11);
        for (j, v) in normed.iter().enumerate() {
            let arc = (j as u32 + 1) * (5400 / n as u32);
            let r = reference_sine(arc, 13).unwrap();
            assert!(v.sub(&r).abs() < eps, "n={n} entry {j}");
        }
        let mu = perron_eigenvalue(n, 25);
        let last = report.eigenvalue_estimates.last().unwrap();
        assert!(last.sub(&mu).abs().div_round(&mu, 20) < Dec::new(1, 8));
    }
}

/// Three-term recurrence coefficients: 2 cos(t) sin(kt) - sin((k-1)t) -
/// sin((k+1)t) vanishes to working accuracy for t = 1' and t = 10 degrees.
#[test]
fn recurrence_identity_holds_at_working_precision() {
    let w = 40u32;
    let tolerance = Dec::new(10, w); // 10 ulp at scale 40
    for (t, ks) in [(1u32, vec![1u32, 2, 59, 600, 2699, 5398]), (600, vec![1, 2, 5, 8])] {
        // cos t = sin(90° - t)
        let cos_t = reference_sine(5400 - t, w).unwrap();
        for k in ks {
            let s_prev = reference_sine((k - 1) * t, w).unwrap();
            let s_k = reference_sine(k * t, w).unwrap();
            let s_next = reference_sine((k + 1) * t, w).unwrap();
            let lhs = cos_t
                .mul_round(&s_k, w)
                .mul_round(&Dec::from_int(2), w)
                .sub(&s_prev)
                .sub(&s_next)
                .abs();
            assert!(lhs < tolerance, "t={t} k={k}: {lhs}");
        }
    }
}

/// Minute-table difference structure: first differences positive and
/// strictly decreasing; second differences negative and proportional to the
/// values with constant ratio 2cos(1') - 2.
#[test]
fn minute_table_difference_structure() {
    let precision = 12u32;
    let seed = sin1_minute_seed(precision).unwrap();
    let table = minute_table(&seed, precision).unwrap();
    let values: Vec<&Dec> = table.entries().iter().map(|(_, v)| v).collect();

    let mut prev_diff = values[0].clone(); // s_1 - s_0
    for k in 1..values.len() {
        let diff = values[k].sub(values[k - 1]);
        assert!(!diff.is_negative() && !diff.is_zero(), "flat at {k}");
        assert!(diff < prev_diff, "first differences not decreasing at {k}");
        prev_diff = diff;
    }

    let w = 30u32;
    let ratio_target = reference_sine(5399, w)
        .unwrap()
        .mul_round(&Dec::from_int(2), w)
        .sub(&Dec::from_int(2));
    // constancy of the ratio to 10^-(precision+2); observed slack is ~1e-22
    let tolerance = Dec::new(1, precision + 2);
    let mut worst = Dec::zero();
    for k in 1..values.len() - 1 {
        let dd = values[k + 1].sub(&values[k].mul_round(&Dec::from_int(2), w)).add(values[k - 1]);
        assert!(dd.is_negative(), "second difference not negative at {k}");
        let ratio = dd.div_round(values[k], w);
        let dev = ratio.sub(&ratio_target).abs();
        if dev > worst {
            worst = dev;
        }
    }
    assert!(worst < tolerance, "worst ratio deviation {worst}");
}

// -------------------- classical chord relations --------------------

/// Doubling an arc with Ptolemy's sum and then halving it returns the
/// original chord, for arcs up to 90 degrees.
#[test]
fn half_undoes_double() {
    use buergi::classical::{chord_combine, chord_half, CombineMode};
    let r = Dec::from_int(60);
    let p = 25u32;
    let tol = Dec::new(1, 20);
    for deg in [5u32, 10, 30, 45, 60, 75, 90] {
        // crd(deg) = 2R sin(deg/2), from the oracle at high precision
        let crd = reference_sine(deg * 30, p + 10)
            .unwrap()
            .mul_round(&Dec::from_int(120), p + 5);
        let doubled = chord_combine(&crd, &crd, &r, CombineMode::Sum, p).unwrap();
        let back = chord_half(&doubled, &r, p).unwrap();
        let dev = back.sub(&crd).abs();
        assert!(dev < tol, "{deg} degrees: deviation {dev}");
    }
}

/// crd(a)^2 + crd(180°-a)^2 = 4R^2 to working precision (unit radius keeps
/// the absolute and relative tolerances aligned).
#[test]
fn supplement_identity() {
    use buergi::classical::chord_supplement;
    let r = Dec::one();
    let p = 20u32;
    let tol = Dec::new(1, 18); // 10^-(p-2)
    for arcmin in [30u32, 600, 1111, 2700, 4000, 5399, 5400] {
        let crd = reference_sine(arcmin, p + 10)
            .unwrap()
            .mul_round(&Dec::from_int(2), p + 5);
        let sup = chord_supplement(&crd, &r, p).unwrap();
        let dev = crd
            .mul_exact(&crd)
            .add(&sup.mul_exact(&sup))
            .sub(&Dec::from_int(4))
            .abs();
        assert!(dev < tol, "{arcmin}': deviation {dev}");
    }
}

// -------------------- oracle self-checks --------------------

/// pi/4 and pi/6 sines against their algebraic values, across precisions.
#[test]
fn reference_sine_agrees_with_algebraic_roots() {
    for p in [10u32, 20, 30, 40, 50] {
        let s45 = reference_sine(2700, p).unwrap();
        let alg = Dec::from_int(2).sqrt_round(p + 5).div_round(&Dec::from_int(2), p);
        assert!(s45.sub(&alg).abs() <= Dec::new(1, p), "p={p}");
        assert_eq!(reference_sine(1800, p).unwrap(), Dec::parse("0.5").unwrap());
    }
}

/// Monotonicity of the oracle across the quarter circle at a fixed precision.
#[test]
fn reference_sine_is_monotone() {
    let mut prev = reference_sine(0, 30).unwrap();
    for arcmin in (60..=5400).step_by(60) {
        let cur = reference_sine(arcmin, 30).unwrap();
        assert!(cur > prev, "not increasing at {arcmin}");
        prev = cur;
    }
}

/// pi at two scales must agree (the cache rounds from one raw expansion).
#[test]
fn pi_is_consistent_across_scales() {
    let long = pi(45);
    let short = pi(20);
    assert_eq!(long.rescale(20), short);
    assert!(long.sub(&Dec::parse("3.14159265358979323846").unwrap()).abs() < Dec::new(1, 19));
}
