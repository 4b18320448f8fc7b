//! Shared fixtures and independent oracles for the integration suites.
//!
//! The oracles here deliberately avoid the library's linear-algebra paths:
//! rank is textbook elimination over `Vec<bool>`, decodability is a rank
//! comparison, minimum transmission counts come from plain subset
//! enumeration, and minrank from enumerating every fitting matrix.

#![allow(dead_code)]

use std::collections::BTreeSet;
use std::path::PathBuf;

use index_codes::gf2::BitMatrix;
use index_codes::model::{Case, CaseParams, ProblemSpec};

/// The ten reference instances, in order: (fixture number, case, K, D, lambda).
pub const EXAMPLES: [(usize, Case, usize, usize, Option<usize>); 10] = [
    (1, Case::I, 20, 4, None),
    (2, Case::II, 20, 16, None),
    (3, Case::III, 20, 12, None),
    (4, Case::IV, 20, 8, None),
    (5, Case::V, 21, 4, Some(1)),
    (6, Case::VI, 21, 17, Some(1)),
    (7, Case::VII, 18, 5, Some(1)),
    (8, Case::VIII, 24, 19, Some(1)),
    (9, Case::IX, 19, 5, Some(1)),
    (10, Case::X, 28, 18, Some(2)),
];

pub fn fixture_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/fixtures")
        .join(name)
}

pub fn fixture_text(name: &str) -> String {
    std::fs::read_to_string(fixture_path(name)).unwrap_or_else(|e| panic!("fixture {name}: {e}"))
}

/// Loads a codebook fixture: one symbol per line, space-separated indices.
pub fn fixture_symbols(name: &str) -> Vec<BTreeSet<usize>> {
    fixture_text(name)
        .lines()
        .map(|line| {
            line.split_whitespace()
                .map(|t| t.parse().expect("symbol index"))
                .collect()
        })
        .collect()
}

/// Every divisibility-valid parameter set with K in 2..=max_k.
pub fn valid_params_up_to(max_k: usize) -> Vec<CaseParams> {
    let mut out = Vec::new();
    for case in Case::ALL {
        for k in 2..=max_k {
            for d in 1..k {
                if case.requires_lambda() {
                    for lam in 1..=k {
                        if let Ok(p) = CaseParams::new(case, k, d, Some(lam)) {
                            out.push(p);
                        }
                    }
                } else if let Ok(p) = CaseParams::new(case, k, d, None) {
                    out.push(p);
                }
            }
        }
    }
    out
}

/// Textbook GF(2) row elimination over unpacked rows.
pub fn naive_rank(rows: &[Vec<bool>]) -> usize {
    let mut rows: Vec<Vec<bool>> = rows.to_vec();
    let cols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..cols {
        let Some(pivot) = (rank..rows.len()).find(|&r| rows[r][col]) else {
            continue;
        };
        rows.swap(rank, pivot);
        let pivot_row = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != rank && row[col] {
                for (a, b) in row.iter_mut().zip(&pivot_row) {
                    *a ^= b;
                }
            }
        }
        rank += 1;
    }
    rank
}

pub fn matrix_to_rows(m: &BitMatrix) -> Vec<Vec<bool>> {
    (1..=m.rows())
        .map(|i| (1..=m.cols()).map(|j| m.get(i, j)).collect())
        .collect()
}

/// Decodability by rank comparison: appending e_k to the columns and the
/// antidote unit vectors must not raise the rank.
pub fn oracle_can_decode(problem: &ProblemSpec, matrix: &BitMatrix, k: usize) -> bool {
    let kk = problem.k();
    let mut cols: Vec<Vec<bool>> = (1..=matrix.cols())
        .map(|j| (1..=kk).map(|i| matrix.get(i, j)).collect())
        .collect();
    for &a in problem.antidotes(k) {
        let mut unit = vec![false; kk];
        unit[a - 1] = true;
        cols.push(unit);
    }
    let without = naive_rank(&transpose_bools(&cols, kk));
    let mut unit = vec![false; kk];
    unit[k - 1] = true;
    cols.push(unit);
    let with = naive_rank(&transpose_bools(&cols, kk));
    with == without
}

fn transpose_bools(cols: &[Vec<bool>], rows: usize) -> Vec<Vec<bool>> {
    (0..rows)
        .map(|i| cols.iter().map(|c| c[i]).collect())
        .collect()
}

/// Exhaustive minimum transmission count by subset enumeration in increasing
/// cardinality; `cap` bounds the cardinality tried.
pub fn oracle_min_tx(
    problem: &ProblemSpec,
    matrix: &BitMatrix,
    k: usize,
    cap: usize,
) -> Option<usize> {
    use itertools::Itertools;
    let kk = problem.k();
    let antidotes = problem.antidotes(k);
    let column_sets: Vec<BTreeSet<usize>> = (1..=matrix.cols())
        .map(|j| (1..=kk).filter(|&i| matrix.get(i, j)).collect())
        .collect();
    let n = column_sets.len();
    for cardinality in 1..=cap.min(n) {
        for subset in (0..n).combinations(cardinality) {
            let mut acc: BTreeSet<usize> = BTreeSet::new();
            for &j in &subset {
                for &i in &column_sets[j] {
                    if !acc.remove(&i) {
                        acc.insert(i);
                    }
                }
            }
            // Must be e_k up to antidote coordinates.
            if acc.contains(&k) && acc.iter().all(|&i| i == k || antidotes.contains(&i)) {
                return Some(cardinality);
            }
        }
    }
    None
}

/// Exhaustive minrank: every assignment of the free entries, naive rank each.
pub fn oracle_minrank(problem: &ProblemSpec) -> usize {
    let k = problem.k();
    let free: Vec<(usize, usize)> = problem.edges();
    assert!(free.len() <= 20, "oracle instance too large");
    let mut best = k;
    for mask in 0u64..(1 << free.len()) {
        let mut rows = vec![vec![false; k]; k];
        for (i, row) in rows.iter_mut().enumerate() {
            row[i] = true;
        }
        for (bit, &(i, j)) in free.iter().enumerate() {
            if mask >> bit & 1 == 1 {
                rows[i - 1][j - 1] = true;
            }
        }
        best = best.min(naive_rank(&rows));
    }
    best
}
