//! Decodability certification and exact per-receiver transmission counts.
//!
//! Receiver k decodes iff e_k lies in the span of the code columns together
//! with the unit vectors of its antidote coordinates; equivalently, the
//! system restricted to non-antidote coordinates is solvable. The minimum
//! transmission count is the least number of code symbols whose XOR matches
//! e_k modulo the antidote coordinates. The search is exact: when the
//! restricted system has nullity <= 24 the whole solution coset is swept, and
//! otherwise a cardinality-capped subset search takes over. Ties between
//! minimum witnesses break toward the lexicographically smallest column set.

use std::collections::BTreeMap;

use crate::construct::CodeBook;
use crate::error::{Error, Result};
use crate::gf2::{solve, BitMatrix, BitVector, LinearSolution};
use crate::model::{capacity_one_sided, ProblemSpec};

/// Beyond this nullity the coset sweep would exceed 2^24 candidates and the
/// capped subset search is used instead.
const MAX_NULLITY_SWEEP: usize = 24;

/// Knobs for the transmission-count search.
#[derive(Debug, Clone, Copy)]
pub struct VerifyOptions {
    /// Cardinality cap for the fallback subset search.
    pub max_cardinality: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            max_cardinality: 12,
        }
    }
}

/// Outcome for a single receiver.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ReceiverStatus {
    /// The wanted message is outside the reachable span.
    Undecodable,
    /// Decodable with the given minimum count and witness columns (1-based,
    /// ascending).
    Decoded { min_tx: usize, witness: Vec<usize> },
    /// Decodable, but the capped fallback search gave up before pinning the
    /// minimum. Distinct from `Undecodable` by construction.
    CapExceeded { cap: usize },
}

impl ReceiverStatus {
    pub fn decodable(&self) -> bool {
        !matches!(self, ReceiverStatus::Undecodable)
    }

    pub fn min_tx(&self) -> Option<usize> {
        match self {
            ReceiverStatus::Decoded { min_tx, .. } => Some(*min_tx),
            _ => None,
        }
    }

    pub fn witness(&self) -> Option<&[usize]> {
        match self {
            ReceiverStatus::Decoded { witness, .. } => Some(witness),
            _ => None,
        }
    }
}

/// Per-receiver verification results for one (problem, code) pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecodeReport {
    statuses: Vec<ReceiverStatus>,
}

impl DecodeReport {
    pub fn k(&self) -> usize {
        self.statuses.len()
    }

    /// Status of receiver k (1-based).
    pub fn receiver(&self, k: usize) -> &ReceiverStatus {
        &self.statuses[k - 1]
    }

    pub fn statuses(&self) -> &[ReceiverStatus] {
        &self.statuses
    }

    pub fn all_decodable(&self) -> bool {
        self.statuses.iter().all(|s| s.decodable())
    }

    /// Histogram of exact minimum transmission counts.
    pub fn census(&self) -> BTreeMap<usize, usize> {
        let mut out = BTreeMap::new();
        for s in &self.statuses {
            if let Some(t) = s.min_tx() {
                *out.entry(t).or_insert(0) += 1;
            }
        }
        out
    }
}

fn check_rows(problem: &ProblemSpec, matrix: &BitMatrix) -> Result<()> {
    if matrix.rows() != problem.k() {
        return Err(Error::dimension(format!(
            "matrix has {} rows for a problem with K={}",
            matrix.rows(),
            problem.k()
        )));
    }
    Ok(())
}

/// The system restricted to receiver k's non-antidote coordinates, paired
/// with the restriction of e_k.
fn restricted_system(
    problem: &ProblemSpec,
    matrix: &BitMatrix,
    k: usize,
) -> (BitMatrix, BitVector) {
    let antidotes = problem.antidotes(k);
    let kept: Vec<usize> = (1..=problem.k())
        .filter(|i| !antidotes.contains(i))
        .collect();
    let mut target = BitVector::zeros(kept.len());
    let mut reduced = BitMatrix::zeros(kept.len(), matrix.cols());
    for (out_row, &i) in kept.iter().enumerate() {
        if i == k {
            target.set(out_row + 1, true);
        }
        if matrix.cols() > 0 {
            for j in matrix.row(i).support() {
                reduced.set(out_row + 1, j, true);
            }
        }
    }
    (reduced, target)
}

/// True iff receiver k can recover its message from the code plus its
/// antidotes.
pub fn can_decode(problem: &ProblemSpec, code: &CodeBook, k: usize) -> Result<bool> {
    can_decode_matrix(problem, code.matrix(), k)
}

/// Matrix-level twin of [`can_decode`] for codes loaded from files.
pub fn can_decode_matrix(problem: &ProblemSpec, matrix: &BitMatrix, k: usize) -> Result<bool> {
    check_rows(problem, matrix)?;
    if matrix.cols() == 0 {
        return Ok(false); // own message is never an antidote
    }
    let (reduced, target) = restricted_system(problem, matrix, k);
    Ok(solve(&reduced, &target)?.is_some())
}

/// Exact minimum number of code symbols receiver k must combine, with a
/// witness, per the search contract described at module level.
pub fn min_transmissions(
    problem: &ProblemSpec,
    code: &CodeBook,
    k: usize,
    options: &VerifyOptions,
) -> Result<ReceiverStatus> {
    min_transmissions_matrix(problem, code.matrix(), k, options)
}

/// Matrix-level twin of [`min_transmissions`].
pub fn min_transmissions_matrix(
    problem: &ProblemSpec,
    matrix: &BitMatrix,
    k: usize,
    options: &VerifyOptions,
) -> Result<ReceiverStatus> {
    check_rows(problem, matrix)?;
    if matrix.cols() == 0 {
        return Ok(ReceiverStatus::Undecodable);
    }
    let (reduced, target) = restricted_system(problem, matrix, k);
    let Some(solution) = solve(&reduced, &target)? else {
        return Ok(ReceiverStatus::Undecodable);
    };
    if solution.nullspace.len() <= MAX_NULLITY_SWEEP {
        let (min_tx, witness) = sweep_coset(&solution);
        return Ok(ReceiverStatus::Decoded { min_tx, witness });
    }
    match capped_subset_search(&reduced, &target, options.max_cardinality) {
        Some((min_tx, witness)) => Ok(ReceiverStatus::Decoded { min_tx, witness }),
        None => Ok(ReceiverStatus::CapExceeded {
            cap: options.max_cardinality,
        }),
    }
}

/// Sweeps the full solution coset (particular + span of the nullspace) and
/// returns the minimum-weight solution, lex-smallest support on ties.
fn sweep_coset(solution: &LinearSolution) -> (usize, Vec<usize>) {
    let mut current = solution.particular.clone();
    let mut best_weight = current.weight();
    let mut best_support = current.support();
    let d = solution.nullspace.len();
    // Gray-code walk: one basis XOR per step covers all 2^d solutions.
    for step in 1u64..(1u64 << d) {
        let flip = step.trailing_zeros() as usize;
        current.xor_assign(&solution.nullspace[flip]);
        let w = current.weight();
        if w < best_weight {
            best_weight = w;
            best_support = current.support();
        } else if w == best_weight {
            let s = current.support();
            if s < best_support {
                best_support = s;
            }
        }
    }
    (best_weight, best_support)
}

/// Iterative deepening over witness cardinality, columns in lexicographic
/// order; the first hit at the smallest feasible cardinality is returned.
fn capped_subset_search(
    reduced: &BitMatrix,
    target: &BitVector,
    cap: usize,
) -> Option<(usize, Vec<usize>)> {
    let columns: Vec<BitVector> = reduced.columns();
    let n = columns.len();
    let mut chosen = Vec::new();
    for cardinality in 1..=cap.min(n) {
        let mut acc = BitVector::zeros(target.len());
        if extend_subset(&columns, target, &mut acc, 1, cardinality, &mut chosen) {
            return Some((cardinality, chosen));
        }
    }
    None
}

fn extend_subset(
    columns: &[BitVector],
    target: &BitVector,
    acc: &mut BitVector,
    start: usize,
    remaining: usize,
    chosen: &mut Vec<usize>,
) -> bool {
    if remaining == 0 {
        return acc == target;
    }
    // Enough columns must be left to fill the subset.
    for j in start..=columns.len().saturating_sub(remaining - 1) {
        chosen.push(j);
        acc.xor_assign(&columns[j - 1]);
        if extend_subset(columns, target, acc, j + 1, remaining - 1, chosen) {
            return true;
        }
        acc.xor_assign(&columns[j - 1]);
        chosen.pop();
    }
    false
}

/// Runs the per-receiver search for every receiver.
pub fn verify_all(
    problem: &ProblemSpec,
    code: &CodeBook,
    options: &VerifyOptions,
) -> Result<DecodeReport> {
    verify_all_matrix(problem, code.matrix(), options)
}

/// Matrix-level twin of [`verify_all`].
pub fn verify_all_matrix(
    problem: &ProblemSpec,
    matrix: &BitMatrix,
    options: &VerifyOptions,
) -> Result<DecodeReport> {
    check_rows(problem, matrix)?;
    let statuses = (1..=problem.k())
        .map(|k| min_transmissions_matrix(problem, matrix, k, options))
        .collect::<Result<Vec<_>>>()?;
    Ok(DecodeReport { statuses })
}

/// True iff the code length equals the capacity denominator 1/(K-D) dictates.
pub fn check_optimal_length(code: &CodeBook) -> bool {
    let params = code.params();
    match capacity_one_sided(params.k(), params.d()) {
        Ok(c) => code.len() as u64 == c.denominator(),
        Err(_) => false,
    }
}
