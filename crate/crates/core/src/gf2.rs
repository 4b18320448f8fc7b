//! Dense GF(2) vectors and matrices, bit-packed into `u64` words.
//!
//! This is the substrate for everything else: generator matrices, fitting
//! matrices, span-membership tests and rank computations. Coordinates in the
//! public interface are 1-based throughout; the packed representation is an
//! internal detail. Elimination always picks the leftmost pivot column and
//! the topmost available row, so solutions and ranks are reproducible.

use crate::error::{Error, Result};

const WORD_BITS: usize = 64;

fn words_for(len: usize) -> usize {
    len.div_ceil(WORD_BITS)
}

/// A vector over GF(2). Coordinates are 1-based.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitVector {
    len: usize,
    words: Vec<u64>,
}

impl BitVector {
    /// The all-zero vector of the given length.
    pub fn zeros(len: usize) -> Self {
        assert!(len >= 1, "BitVector length must be positive");
        BitVector {
            len,
            words: vec![0; words_for(len)],
        }
    }

    /// The unit vector e_k (1-based coordinate).
    pub fn unit(len: usize, k: usize) -> Self {
        let mut v = Self::zeros(len);
        v.set(k, true);
        v
    }

    /// Builds a vector with ones exactly at the given 1-based coordinates.
    pub fn from_support<'a, I: IntoIterator<Item = &'a usize>>(len: usize, support: I) -> Self {
        let mut v = Self::zeros(len);
        for &i in support {
            v.set(i, true);
        }
        v
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        false // length is always >= 1
    }

    /// Coordinate access, 1-based.
    pub fn get(&self, i: usize) -> bool {
        assert!(
            i >= 1 && i <= self.len,
            "coordinate {i} out of 1..={}",
            self.len
        );
        let b = i - 1;
        self.words[b / WORD_BITS] >> (b % WORD_BITS) & 1 == 1
    }

    pub fn set(&mut self, i: usize, value: bool) {
        assert!(
            i >= 1 && i <= self.len,
            "coordinate {i} out of 1..={}",
            self.len
        );
        let b = i - 1;
        let mask = 1u64 << (b % WORD_BITS);
        if value {
            self.words[b / WORD_BITS] |= mask;
        } else {
            self.words[b / WORD_BITS] &= !mask;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Number of ones.
    pub fn weight(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Sorted 1-based coordinates of the ones.
    pub fn support(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.weight());
        for (wi, &w) in self.words.iter().enumerate() {
            let mut bits = w;
            while bits != 0 {
                let b = bits.trailing_zeros() as usize;
                out.push(wi * WORD_BITS + b + 1);
                bits &= bits - 1;
            }
        }
        out
    }

    /// In-place XOR. Panics on length mismatch; use [`xor_sum`] for the
    /// checked entry point.
    pub fn xor_assign(&mut self, other: &BitVector) {
        assert_eq!(self.len, other.len, "xor of different lengths");
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    /// 1-based coordinate of the first one, if any.
    fn leading_one(&self) -> Option<usize> {
        for (wi, &w) in self.words.iter().enumerate() {
            if w != 0 {
                return Some(wi * WORD_BITS + w.trailing_zeros() as usize + 1);
            }
        }
        None
    }
}

impl std::fmt::Debug for BitVector {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "BitVector({})",
            self.support()
                .iter()
                .map(|i| i.to_string())
                .collect::<Vec<_>>()
                .join(",")
        )
    }
}

/// Coordinatewise XOR of a non-empty list of equal-length vectors.
pub fn xor_sum(vs: &[BitVector]) -> Result<BitVector> {
    let first = vs
        .first()
        .ok_or_else(|| Error::dimension("xor_sum of an empty list".to_string()))?;
    let mut acc = BitVector::zeros(first.len());
    for v in vs {
        if v.len() != first.len() {
            return Err(Error::dimension(format!(
                "xor_sum over lengths {} and {}",
                first.len(),
                v.len()
            )));
        }
        acc.xor_assign(v);
    }
    Ok(acc)
}

/// A matrix over GF(2), stored as bit-packed rows. Entries are 1-based.
#[derive(Clone, PartialEq, Eq)]
pub struct BitMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BitVector>, // one BitVector of length `cols` per row; empty rows when cols == 0
}

impl BitMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        assert!(rows >= 1, "BitMatrix must have at least one row");
        let data = if cols == 0 {
            Vec::new()
        } else {
            vec![BitVector::zeros(cols); rows]
        };
        BitMatrix { rows, cols, data }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 1..=n {
            m.set(i, i, true);
        }
        m
    }

    /// Builds a matrix from equal-length row vectors.
    pub fn from_rows(rows: Vec<BitVector>) -> Result<Self> {
        let first_len = rows
            .first()
            .ok_or_else(|| Error::dimension("matrix needs at least one row".to_string()))?
            .len();
        for r in &rows {
            if r.len() != first_len {
                return Err(Error::dimension("jagged rows".to_string()));
            }
        }
        Ok(BitMatrix {
            rows: rows.len(),
            cols: first_len,
            data: rows,
        })
    }

    /// Builds a `rows x columns.len()` matrix with the given columns.
    pub fn from_columns(rows: usize, columns: &[BitVector]) -> Result<Self> {
        for c in columns {
            if c.len() != rows {
                return Err(Error::dimension(format!(
                    "column of length {} in a matrix of {} rows",
                    c.len(),
                    rows
                )));
            }
        }
        let mut m = Self::zeros(rows, columns.len());
        for (j, c) in columns.iter().enumerate() {
            for i in c.support() {
                m.set(i, j + 1, true);
            }
        }
        Ok(m)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Entry access, 1-based on both axes.
    pub fn get(&self, i: usize, j: usize) -> bool {
        assert!(i >= 1 && i <= self.rows, "row {i} out of 1..={}", self.rows);
        self.data[i - 1].get(j)
    }

    pub fn set(&mut self, i: usize, j: usize, value: bool) {
        assert!(i >= 1 && i <= self.rows, "row {i} out of 1..={}", self.rows);
        self.data[i - 1].set(j, value);
    }

    /// Row i as a vector (1-based).
    pub fn row(&self, i: usize) -> &BitVector {
        assert!(i >= 1 && i <= self.rows, "row {i} out of 1..={}", self.rows);
        &self.data[i - 1]
    }

    /// Column j as a vector (1-based).
    pub fn column(&self, j: usize) -> BitVector {
        assert!(
            j >= 1 && j <= self.cols,
            "column {j} out of 1..={}",
            self.cols
        );
        let mut v = BitVector::zeros(self.rows);
        for i in 1..=self.rows {
            if self.get(i, j) {
                v.set(i, true);
            }
        }
        v
    }

    pub fn columns(&self) -> Vec<BitVector> {
        (1..=self.cols).map(|j| self.column(j)).collect()
    }

    pub fn transpose(&self) -> BitMatrix {
        let mut t = BitMatrix::zeros(self.cols.max(1), self.rows);
        if self.cols == 0 {
            // A K x 0 matrix transposes to the 1 x K convention-breaking edge;
            // keep a zero row so the type invariant (rows >= 1) holds.
            return t;
        }
        for i in 1..=self.rows {
            for j in self.data[i - 1].support() {
                t.set(j, i, true);
            }
        }
        t
    }

    /// GF(2) row rank.
    pub fn rank(&self) -> usize {
        if self.cols == 0 {
            return 0;
        }
        let mut basis = RowBasis::new();
        for r in &self.data {
            basis.insert(r.clone());
        }
        basis.rank()
    }
}

impl std::fmt::Debug for BitMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "BitMatrix {}x{}", self.rows, self.cols)?;
        for i in 1..=self.rows {
            let line: Vec<&str> = (1..=self.cols)
                .map(|j| if self.get(i, j) { "1" } else { "0" })
                .collect();
            writeln!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}

/// An incrementally maintained row-space basis in echelon form.
///
/// Rows are kept with distinct leading coordinates, so inserting a vector
/// costs one reduction pass and the rank is the number of stored rows.
#[derive(Clone, Default)]
pub(crate) struct RowBasis {
    rows: Vec<BitVector>, // sorted by leading coordinate
}

impl RowBasis {
    pub(crate) fn new() -> Self {
        RowBasis { rows: Vec::new() }
    }

    pub(crate) fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `v` against the basis; inserts the remainder if nonzero.
    /// Returns true when the rank grew.
    pub(crate) fn insert(&mut self, mut v: BitVector) -> bool {
        for b in &self.rows {
            let lead = b.leading_one().expect("basis rows are nonzero");
            if v.get(lead) {
                v.xor_assign(b);
            }
        }
        match v.leading_one() {
            None => false,
            Some(lead) => {
                let pos = self
                    .rows
                    .binary_search_by_key(&lead, |r| r.leading_one().expect("nonzero"))
                    .unwrap_err();
                self.rows.insert(pos, v);
                true
            }
        }
    }
}

/// A solved linear system `A u = b`: one particular solution plus a basis of
/// the null space of `A`. Every solution is `particular` XOR a subset of
/// `nullspace`.
#[derive(Debug, Clone)]
pub struct LinearSolution {
    pub particular: BitVector,
    pub nullspace: Vec<BitVector>,
}

/// Solves `A u = b` over GF(2), where `b` has one coordinate per row of `A`.
///
/// Returns `Ok(None)` when the system is inconsistent. Pivots are chosen
/// leftmost-column-first, topmost-row-first, and free variables are set to
/// zero, so the particular solution is deterministic.
pub fn solve(a: &BitMatrix, b: &BitVector) -> Result<Option<LinearSolution>> {
    if b.len() != a.rows() {
        return Err(Error::dimension(format!(
            "rhs of length {} against {} rows",
            b.len(),
            a.rows()
        )));
    }
    let n = a.cols();
    // Augmented rows: [row | rhs bit] of width n + 1.
    let mut work: Vec<BitVector> = (1..=a.rows())
        .map(|i| {
            let mut w = BitVector::zeros(n + 1);
            for j in a.row(i).support() {
                w.set(j, true);
            }
            if b.get(i) {
                w.set(n + 1, true);
            }
            w
        })
        .collect();

    let mut pivot_row_of_col: Vec<Option<usize>> = vec![None; n]; // 0-based work-row index per column
    let mut next_row = 0;
    for col in 1..=n {
        let Some(found) = (next_row..work.len()).find(|&r| work[r].get(col)) else {
            continue;
        };
        work.swap(next_row, found);
        let pivot = work[next_row].clone();
        for (r, row) in work.iter_mut().enumerate() {
            if r != next_row && row.get(col) {
                row.xor_assign(&pivot);
            }
        }
        pivot_row_of_col[col - 1] = Some(next_row);
        next_row += 1;
    }

    // Inconsistent iff some fully-reduced row is 0 = 1.
    for row in &work[next_row..] {
        if row.get(n + 1) {
            return Ok(None);
        }
    }

    let mut particular = BitVector::zeros(n.max(1));
    if n == 0 {
        // Only the empty assignment exists; consistent iff b = 0, checked above.
        return Ok(Some(LinearSolution {
            particular: BitVector::zeros(1),
            nullspace: Vec::new(),
        }));
    }
    for col in 1..=n {
        if let Some(r) = pivot_row_of_col[col - 1] {
            if work[r].get(n + 1) {
                particular.set(col, true);
            }
        }
    }

    let mut nullspace = Vec::new();
    for free in 1..=n {
        if pivot_row_of_col[free - 1].is_some() {
            continue;
        }
        let mut v = BitVector::zeros(n);
        v.set(free, true);
        for col in 1..=n {
            if let Some(r) = pivot_row_of_col[col - 1] {
                if work[r].get(free) {
                    v.set(col, true);
                }
            }
        }
        nullspace.push(v);
    }

    Ok(Some(LinearSolution {
        particular,
        nullspace,
    }))
}

/// Expresses `target` as a XOR of basis vectors, if possible.
///
/// Returns the 1-based positions (into `basis`) of a witness subset; the
/// subset is the one produced by leftmost-pivot elimination with free
/// coefficients set to zero, so repeated calls agree. `None` means `target`
/// is outside the span.
pub fn solve_membership(target: &BitVector, basis: &[BitVector]) -> Result<Option<Vec<usize>>> {
    for v in basis {
        if v.len() != target.len() {
            return Err(Error::dimension(format!(
                "basis vector of length {} against target of length {}",
                v.len(),
                target.len()
            )));
        }
    }
    if basis.is_empty() {
        return Ok(if target.is_zero() {
            Some(Vec::new())
        } else {
            None
        });
    }
    let a = BitMatrix::from_columns(target.len(), basis)?;
    Ok(solve(&a, target)?.map(|s| s.particular.support()))
}
