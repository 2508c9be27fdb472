//! Bürgi's nine-part worked example: golden copy, rendering, verification.
//!
//! The embedded numbers are the five result columns and four auxiliary
//! columns of the table in the *Fundamentum Astronomiae* (fol. 36r), in
//! decimal. `run` recomputes them from the seed, prints the half-row
//! interleaved layout plus flat per-column lines, and reports any mismatch.

use buergi::kunstweg::{kunstweg_step, normalize, DyadicVector, BUERGI_SEED};
use num_bigint::BigUint;

pub const GOLDEN_COLUMNS: [[u64; 9]; 5] = [
    [2, 4, 6, 7, 8, 9, 10, 11, 12],
    [63, 124, 181, 232, 276, 312, 339, 356, 362],
    [2064, 4065, 5942, 7638, 9102, 10290, 11166, 11703, 11884],
    [67912, 133760, 195543, 251384, 299587, 338688, 367499, 385144, 391086],
    [
        2235060, 4402208, 6435596, 8273441, 9859902, 11146776, 12094962, 12675649, 12871192,
    ],
];

pub const GOLDEN_AUX: [[u64; 9]; 4] = [
    [63, 61, 57, 51, 44, 36, 27, 17, 6],
    [2064, 2001, 1877, 1696, 1464, 1188, 876, 537, 181],
    [67912, 65848, 61783, 55841, 48203, 39101, 28811, 17645, 5942],
    [
        2235060, 2167148, 2033388, 1837845, 1586461, 1286874, 948186, 580687, 195543,
    ],
];

const GOLDEN_RATIO_J1: &str = "0.17364825";
const GOLDEN_RATIO_J8: &str = "0.984807701";

/// Recompute, print, verify. Returns the number of mismatches.
pub fn run() -> usize {
    let mut state = DyadicVector::from_seed(&BUERGI_SEED).expect("seed is valid");
    let mut columns: Vec<Vec<u64>> = vec![BUERGI_SEED.to_vec()];
    let mut auxes: Vec<Vec<u64>> = Vec::new();
    for _ in 0..4 {
        let (next, aux) = kunstweg_step(&state).expect("state stays valid");
        columns.push(to_u64s(next.numerators()));
        auxes.push(to_u64s(aux.values()));
        state = next;
    }

    // half-row interleaved layout: auxiliary entries sit between the main
    // rows, under the column they build
    println!(" deg |   Column 1    Column 2    Column 3    Column 4    Column 5");
    for row in 0..=9usize {
        let mut line = format!("{:>4} |", row * 10);
        for col in columns.iter() {
            let cell = if row == 0 { 0 } else { col[row - 1] };
            line.push_str(&format!("{cell:>11} "));
        }
        println!("{}", line.trim_end());
        if row < 9 {
            let mut aux_line = String::from("     |");
            aux_line.push_str(&" ".repeat(12)); // no auxiliary before column 1
            for aux in auxes.iter() {
                aux_line.push_str(&format!("{:>11} ", aux[row]));
            }
            println!("{}", aux_line.trim_end());
        }
    }
    println!();

    // flat per-column lines
    for (i, col) in columns.iter().enumerate() {
        println!("Col. {}: 0,{}", i + 1, join(col));
        if i < auxes.len() {
            println!("aux {}: {}", i + 1, join(&auxes[i]));
        }
    }
    let halvings: Vec<String> = columns[..4]
        .iter()
        .zip(&auxes)
        .map(|(col, aux)| format!("{}/2 = {}", col[8], aux[8]))
        .collect();
    println!("halvings: {}", halvings.join(", "));

    let at8 = normalize(&state, 8).expect("bottom entry positive");
    let at9 = normalize(&state, 9).expect("bottom entry positive");
    println!(
        "ratios: {} : {} = {}   {} : {} = {}",
        columns[4][0],
        columns[4][8],
        at8[0],
        columns[4][7],
        columns[4][8],
        at9[7]
    );

    // verification against the embedded copy
    let mut mismatches = 0usize;
    let mut checked = 0usize;
    for (i, golden) in GOLDEN_COLUMNS.iter().enumerate() {
        checked += 1; // the implicit top zero
        for (j, want) in golden.iter().enumerate() {
            checked += 1;
            if columns[i][j] != *want {
                mismatches += 1;
                println!("MISMATCH col {} row {}: got {}, want {}", i + 1, j + 1, columns[i][j], want);
            }
        }
    }
    for (i, golden) in GOLDEN_AUX.iter().enumerate() {
        for (j, want) in golden.iter().enumerate() {
            checked += 1;
            if auxes[i][j] != *want {
                mismatches += 1;
                println!("MISMATCH aux {} row {}: got {}, want {}", i + 1, j + 1, auxes[i][j], want);
            }
        }
    }
    if at8[0].to_string() != GOLDEN_RATIO_J1 {
        mismatches += 1;
        println!("MISMATCH ratio j=1: got {}, want {GOLDEN_RATIO_J1}", at8[0]);
    }
    if at9[7].to_string() != GOLDEN_RATIO_J8 {
        mismatches += 1;
        println!("MISMATCH ratio j=8: got {}, want {GOLDEN_RATIO_J8}", at9[7]);
    }

    if mismatches == 0 {
        println!("verified {checked}/86 values against the embedded worked-example copy: OK");
    } else {
        println!("verification FAILED: {mismatches} mismatches");
    }
    mismatches
}

fn to_u64s(values: &[BigUint]) -> Vec<u64> {
    values
        .iter()
        .map(|v| u64::try_from(v).expect("worked example stays below 2^64"))
        .collect()
}

fn join(values: &[u64]) -> String {
    values
        .iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(",")
}
