//! Exact minrank of a side-information graph over GF(2).
//!
//! A 0-1 matrix fits the graph when its diagonal is all ones and every
//! off-diagonal one sits on an edge (receiver i knows message j). The minrank
//! is the least GF(2) rank over all fitting matrices; it equals the optimal
//! scalar linear code length. The search branches on the free (edge)
//! positions row by row, zero before one, and carries an incremental
//! row-space basis down the tree so a partial assignment is pruned as soon as
//! its completed rows already reach the best rank found. Budgets are hard:
//! exceeding them is an explicit inconclusive error, never a silent wrong
//! answer.

use crate::error::{Error, Result};
use crate::gf2::{BitMatrix, BitVector, RowBasis};
use crate::model::ProblemSpec;

/// Hard bounds on the search.
#[derive(Debug, Clone, Copy)]
pub struct SearchLimits {
    /// Maximum number of free entries (graph edges).
    pub max_edges: usize,
    /// Maximum number of search nodes (entry assignments) to explore.
    pub max_nodes: u64,
}

impl Default for SearchLimits {
    fn default() -> Self {
        SearchLimits {
            max_edges: 26,
            max_nodes: 1 << 26,
        }
    }
}

/// The exact minrank, a witness achieving it, and the search effort.
#[derive(Debug, Clone)]
pub struct MinrankResult {
    pub value: usize,
    pub witness: BitMatrix,
    pub explored: u64,
}

/// Per-edge criticality: does deleting the edge strictly raise the minrank?
#[derive(Debug, Clone)]
pub struct CriticalityReport {
    pub base_value: usize,
    /// One entry per edge (i, j), sorted: the minrank after deleting it and
    /// whether that deletion is strict.
    pub edges: Vec<EdgeCriticality>,
    /// True iff every edge is critical (vacuously true without edges).
    pub overall: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EdgeCriticality {
    pub from: usize,
    pub to: usize,
    pub value_without: usize,
    pub critical: bool,
}

/// True iff `a` fits the side-information graph: all-ones diagonal, and
/// off-diagonal support confined to edges.
pub fn fits(a: &BitMatrix, g: &ProblemSpec) -> Result<bool> {
    let k = g.k();
    if a.rows() != k || a.cols() != k {
        return Err(Error::dimension(format!(
            "fitting matrix must be {k}x{k}, got {}x{}",
            a.rows(),
            a.cols()
        )));
    }
    for i in 1..=k {
        if !a.get(i, i) {
            return Ok(false);
        }
        for j in a.row(i).support() {
            if j != i && !g.antidotes(i).contains(&j) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

struct Search<'a> {
    g: &'a ProblemSpec,
    free: Vec<Vec<usize>>, // per row (0-based), sorted free column list
    limits: SearchLimits,
    explored: u64,
    best_value: usize,
    best_rows: Vec<BitVector>,
    current_rows: Vec<BitVector>,
}

impl Search<'_> {
    fn run(&mut self) -> Result<()> {
        let basis = RowBasis::new();
        self.descend(0, &basis)
    }

    /// Explores all completions of rows `row..`, given the basis of the rows
    /// decided so far.
    fn descend(&mut self, row: usize, basis: &RowBasis) -> Result<()> {
        if basis.rank() >= self.best_value {
            return Ok(()); // completed rows alone already match the best
        }
        if row == self.g.k() {
            self.best_value = basis.rank();
            self.best_rows = self.current_rows.clone();
            return Ok(());
        }
        let mut template = BitVector::zeros(self.g.k());
        template.set(row + 1, true);
        self.assign(row, 0, template, basis)
    }

    /// Branches on the free entries of one row, zero branch first.
    fn assign(
        &mut self,
        row: usize,
        slot: usize,
        value: BitVector,
        basis: &RowBasis,
    ) -> Result<()> {
        if slot == self.free[row].len() {
            let mut next = basis.clone();
            next.insert(value.clone());
            self.current_rows[row] = value;
            return self.descend(row + 1, &next);
        }
        self.explored += 1;
        if self.explored > self.limits.max_nodes {
            return Err(Error::Inconclusive(format!(
                "budget exhausted after {} nodes",
                self.explored
            )));
        }
        self.assign(row, slot + 1, value.clone(), basis)?;
        let mut with_one = value;
        with_one.set(self.free[row][slot], true);
        self.assign(row, slot + 1, with_one, basis)
    }
}

/// Exact minrank by pruned exhaustive search over fitting matrices.
pub fn minrank(g: &ProblemSpec, limits: &SearchLimits) -> Result<MinrankResult> {
    let edges = g.edge_count();
    if edges > limits.max_edges {
        return Err(Error::Inconclusive(format!(
            "{edges} free entries exceed the configured bound of {}",
            limits.max_edges
        )));
    }
    let k = g.k();
    let mut search = Search {
        g,
        free: (1..=k)
            .map(|i| g.antidotes(i).iter().copied().collect())
            .collect(),
        limits: *limits,
        explored: 0,
        best_value: k + 1,
        best_rows: Vec::new(),
        current_rows: vec![BitVector::zeros(k); k],
    };
    search.run()?;
    let witness = BitMatrix::from_rows(search.best_rows)?;
    debug_assert!(fits(&witness, g)?);
    debug_assert_eq!(witness.rank(), search.best_value);
    Ok(MinrankResult {
        value: search.best_value,
        witness,
        explored: search.explored,
    })
}

/// Tests every edge for minrank-criticality: deletion must strictly raise
/// the minrank. The graph is critical iff all edges are.
pub fn is_critical(g: &ProblemSpec, limits: &SearchLimits) -> Result<CriticalityReport> {
    let base = minrank(g, limits)?;
    let mut edges = Vec::new();
    let mut overall = true;
    for (i, j) in g.edges() {
        let reduced = g.without_edge(i, j)?;
        let result = minrank(&reduced, limits)?;
        let critical = result.value > base.value;
        overall &= critical;
        edges.push(EdgeCriticality {
            from: i,
            to: j,
            value_without: result.value,
            critical,
        });
    }
    Ok(CriticalityReport {
        base_value: base.value,
        edges,
        overall,
    })
}
