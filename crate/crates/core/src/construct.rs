//! The ten code constructions.
//!
//! Each constructor turns validated parameters into a codebook of K-D code
//! symbols; symbol j is the set of message indices XOR-ed into transmission j.
//! Symbols are emitted with their leading message index ascending within each
//! family (pair chains first, then tail/patch symbols), which is the column
//! order of the generator matrices. Construction never consults the antidote
//! pattern; decodability against it is the verifier's business.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::gf2::BitMatrix;
use crate::model::{Case, CaseId, CaseParams};

/// A scalar linear code: the ordered code symbols and the K x N generator
/// matrix whose column j is the indicator vector of symbol j.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CodeBook {
    params: CaseParams,
    symbols: Vec<BTreeSet<usize>>,
    matrix: BitMatrix,
}

impl CodeBook {
    fn from_symbols(params: CaseParams, symbols: Vec<BTreeSet<usize>>) -> Self {
        let k = params.k();
        let mut matrix = BitMatrix::zeros(k, symbols.len());
        for (j, symbol) in symbols.iter().enumerate() {
            debug_assert!(!symbol.is_empty(), "empty code symbol");
            for &i in symbol {
                debug_assert!((1..=k).contains(&i));
                matrix.set(i, j + 1, true);
            }
        }
        CodeBook {
            params,
            symbols,
            matrix,
        }
    }

    /// Wraps an externally supplied generator matrix (e.g. parsed from a
    /// file), deriving the symbols from its columns.
    pub fn from_matrix(params: CaseParams, matrix: BitMatrix) -> Result<Self> {
        if matrix.rows() != params.k() {
            return Err(Error::dimension(format!(
                "matrix has {} rows for K={}",
                matrix.rows(),
                params.k()
            )));
        }
        let symbols = (1..=matrix.cols())
            .map(|j| matrix.column(j).support().into_iter().collect())
            .collect();
        Ok(CodeBook {
            params,
            symbols,
            matrix,
        })
    }

    pub fn params(&self) -> &CaseParams {
        &self.params
    }

    /// Code length N (number of transmissions).
    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn symbols(&self) -> &[BTreeSet<usize>] {
        &self.symbols
    }

    pub fn matrix(&self) -> &BitMatrix {
        &self.matrix
    }

    /// A copy with one code symbol removed (1-based), for damage experiments.
    pub fn without_symbol(&self, j: usize) -> Result<Self> {
        if j < 1 || j > self.symbols.len() {
            return Err(Error::invalid(format!(
                "symbol {j} is outside 1..={}",
                self.symbols.len()
            )));
        }
        let mut symbols = self.symbols.clone();
        symbols.remove(j - 1);
        Ok(CodeBook::from_symbols(self.params.clone(), symbols))
    }
}

fn require(params: &CaseParams, case: Case) -> Result<()> {
    if params.case() != CaseId::Named(case) {
        return Err(Error::invalid(format!(
            "parameters are for case {}, not case {case}",
            params.case()
        )));
    }
    Ok(())
}

fn sym<I: IntoIterator<Item = usize>>(indices: I) -> BTreeSet<usize> {
    indices.into_iter().collect()
}

/// Case I: the pair chain x_lead + x_{lead+D} for lead = 1..K-D.
pub fn construct_case_i(params: &CaseParams) -> Result<CodeBook> {
    require(params, Case::I)?;
    let (k, d) = (params.k(), params.d());
    let symbols = (1..=k - d).map(|lead| sym([lead, lead + d])).collect();
    Ok(CodeBook::from_symbols(params.clone(), symbols))
}

/// Case II: one full m-stride orbit per residue, m = K-D.
pub fn construct_case_ii(params: &CaseParams) -> Result<CodeBook> {
    require(params, Case::II)?;
    let (m, n) = (params.m().unwrap(), params.n().unwrap());
    let symbols = (1..=m).map(|i| sym((0..n).map(|t| i + t * m))).collect();
    Ok(CodeBook::from_symbols(params.clone(), symbols))
}

/// Case III: quadruples {lead, lead+m, lead+K/2, lead+m+K/2}, m = D-K/2.
pub fn construct_case_iii(params: &CaseParams) -> Result<CodeBook> {
    require(params, Case::III)?;
    let (k, d) = (params.k(), params.d());
    let m = params.m().unwrap();
    let half = k / 2;
    let symbols = (1..=k - d)
        .map(|lead| sym([lead, lead + m, lead + half, lead + m + half]))
        .collect();
    Ok(CodeBook::from_symbols(params.clone(), symbols))
}

/// Case IV: (p+1)-term m-stride windows starting at each lead, m = K/2-D.
pub fn construct_case_iv(params: &CaseParams) -> Result<CodeBook> {
    require(params, Case::IV)?;
    let (k, d) = (params.k(), params.d());
    let (m, p) = (params.m().unwrap(), params.p().unwrap());
    let symbols = (1..=k - d)
        .map(|lead| sym((0..=p).map(|t| lead + t * m)))
        .collect();
    Ok(CodeBook::from_symbols(params.clone(), symbols))
}

/// Case V: the Case I pair chain truncated at K-D-lambda, then lambda tail
/// sums of D/lambda + 1 terms each closing the cycle.
pub fn construct_case_v(params: &CaseParams) -> Result<CodeBook> {
    require(params, Case::V)?;
    let (k, d) = (params.k(), params.d());
    let lam = params.lambda().unwrap();
    let mut symbols: Vec<BTreeSet<usize>> = (1..=k - d - lam)
        .map(|lead| sym([lead, lead + d]))
        .collect();
    for r in 1..=lam {
        symbols.push(sym((0..=d / lam).map(|t| k - lam + r - t * lam)));
    }
    Ok(CodeBook::from_symbols(params.clone(), symbols))
}

/// Case VI: the Case II orbits shortened to q terms, each patched with one
/// of the last lambda messages.
pub fn construct_case_vi(params: &CaseParams) -> Result<CodeBook> {
    require(params, Case::VI)?;
    let (m, q) = (params.m().unwrap(), params.q().unwrap());
    let lam = params.lambda().unwrap();
    let symbols = (1..=m)
        .map(|i| {
            let mut s = sym((0..q).map(|t| i + t * m));
            s.insert(q * m + 1 + (i - 1) % lam);
            s
        })
        .collect();
    Ok(CodeBook::from_symbols(params.clone(), symbols))
}

/// Case VII: (p+1)-term lambda-stride windows, p = D/lambda.
pub fn construct_case_vii(params: &CaseParams) -> Result<CodeBook> {
    require(params, Case::VII)?;
    let (k, d) = (params.k(), params.d());
    let lam = params.lambda().unwrap();
    let p = params.p().unwrap();
    let symbols = (1..=k - d)
        .map(|lead| sym((0..=p).map(|t| lead + t * lam)))
        .collect();
    Ok(CodeBook::from_symbols(params.clone(), symbols))
}

/// Case VIII: p adjacent pairs spaced K-D apart, 2p terms per symbol.
pub fn construct_case_viii(params: &CaseParams) -> Result<CodeBook> {
    require(params, Case::VIII)?;
    let (k, d) = (params.k(), params.d());
    let lam = params.lambda().unwrap();
    let p = params.p().unwrap();
    let m = k - d;
    let symbols = (1..=m)
        .map(|i| sym((0..p).flat_map(|t| [i + t * lam + t * m, i + (t + 1) * lam + t * m])))
        .collect();
    Ok(CodeBook::from_symbols(params.clone(), symbols))
}

/// Case IX: the pair chain up to K-2D+lambda leads, then p triple sums.
pub fn construct_case_ix(params: &CaseParams) -> Result<CodeBook> {
    require(params, Case::IX)?;
    let (k, d) = (params.k(), params.d());
    let lam = params.lambda().unwrap();
    let (n, p) = (params.n().unwrap(), params.p().unwrap());
    let mut symbols: Vec<BTreeSet<usize>> = (1..=d * (n - 2))
        .map(|lead| sym([lead, lead + d]))
        .collect();
    for i in 0..p {
        symbols.push(sym([
            k - 2 * d + 1 + lam + i,
            k - d + 1 + i,
            k - lam + 1 + i % lam,
        ]));
    }
    Ok(CodeBook::from_symbols(params.clone(), symbols))
}

/// Case X: three orbit families. The first lambda leads carry a full q-term
/// orbit plus an s-2 term lambda-stride run; leads up to p carry a shortened
/// orbit with one back-stepped term; the remaining leads carry a shortened
/// orbit plus an s-1 term lambda-stride run.
pub fn construct_case_x(params: &CaseParams) -> Result<CodeBook> {
    require(params, Case::X)?;
    let lam = params.lambda().unwrap();
    let (m, p) = (params.m().unwrap(), params.p().unwrap());
    let (q, s) = (params.q().unwrap(), params.s().unwrap());
    let mut symbols = Vec::with_capacity(m);
    for lead in 1..=lam {
        let mut set = sym((0..q).map(|t| lead + t * m));
        for t in 1..=s - 2 {
            set.insert(lead + (q - 1) * m + t * lam);
        }
        symbols.push(set);
    }
    for lead in lam + 1..=p {
        let mut set = sym((0..q - 1).map(|t| lead + t * m));
        set.insert(lead + (q - 1) * m - lam);
        symbols.push(set);
    }
    for lead in p + 1..=m {
        let mut set = sym((0..q - 1).map(|t| lead + t * m));
        for t in 1..=s - 1 {
            set.insert(lead + (q - 2) * m + t * lam);
        }
        symbols.push(set);
    }
    Ok(CodeBook::from_symbols(params.clone(), symbols))
}

/// Builds the code for whichever case the parameters belong to.
pub fn construct(params: &CaseParams) -> Result<CodeBook> {
    match params.case() {
        CaseId::General => Err(Error::invalid(
            "no construction for the general two-sided pattern",
        )),
        CaseId::Named(Case::I) => construct_case_i(params),
        CaseId::Named(Case::II) => construct_case_ii(params),
        CaseId::Named(Case::III) => construct_case_iii(params),
        CaseId::Named(Case::IV) => construct_case_iv(params),
        CaseId::Named(Case::V) => construct_case_v(params),
        CaseId::Named(Case::VI) => construct_case_vi(params),
        CaseId::Named(Case::VII) => construct_case_vii(params),
        CaseId::Named(Case::VIII) => construct_case_viii(params),
        CaseId::Named(Case::IX) => construct_case_ix(params),
        CaseId::Named(Case::X) => construct_case_x(params),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn symbols_of(case: Case, k: usize, d: usize, lambda: Option<usize>) -> Vec<Vec<usize>> {
        let params = CaseParams::new(case, k, d, lambda).unwrap();
        construct(&params)
            .unwrap()
            .symbols()
            .iter()
            .map(|s| s.iter().copied().collect())
            .collect()
    }

    #[test]
    fn case_i_small() {
        assert_eq!(
            symbols_of(Case::I, 6, 2, None),
            vec![vec![1, 3], vec![2, 4], vec![3, 5], vec![4, 6]]
        );
    }

    #[test]
    fn case_i_bounds() {
        let syms = symbols_of(Case::I, 20, 4, None);
        assert_eq!(syms.len(), 16);
        assert_eq!(syms[0], vec![1, 5]);
        assert_eq!(syms[15], vec![16, 20]);
    }

    #[test]
    fn case_ii_small() {
        assert_eq!(
            symbols_of(Case::II, 4, 2, None),
            vec![vec![1, 3], vec![2, 4]]
        );
        let syms = symbols_of(Case::II, 20, 16, None);
        assert_eq!(syms.len(), 4);
        assert_eq!(syms[0], vec![1, 5, 9, 13, 17]);
    }

    #[test]
    fn case_iii_small() {
        assert_eq!(symbols_of(Case::III, 4, 3, None), vec![vec![1, 2, 3, 4]]);
        let syms = symbols_of(Case::III, 20, 12, None);
        assert_eq!(syms.len(), 8);
        assert_eq!(syms[0], vec![1, 3, 11, 13]);
    }

    #[test]
    fn case_iv_small() {
        assert_eq!(
            symbols_of(Case::IV, 4, 1, None),
            vec![vec![1, 2], vec![2, 3], vec![3, 4]]
        );
        let syms = symbols_of(Case::IV, 20, 8, None);
        assert_eq!(syms.len(), 12);
        assert_eq!(syms[0], vec![1, 3, 5, 7, 9]);
        assert_eq!(syms[11], vec![12, 14, 16, 18, 20]);
    }

    #[test]
    fn case_v_small() {
        assert_eq!(
            symbols_of(Case::V, 5, 2, Some(1)),
            vec![vec![1, 3], vec![2, 4], vec![3, 4, 5]]
        );
        let syms = symbols_of(Case::V, 21, 4, Some(1));
        assert_eq!(syms.len(), 17);
        assert_eq!(syms[16], vec![17, 18, 19, 20, 21]);
    }

    #[test]
    fn case_vi_small() {
        assert_eq!(
            symbols_of(Case::VI, 5, 3, Some(1)),
            vec![vec![1, 3, 5], vec![2, 4, 5]]
        );
        let syms = symbols_of(Case::VI, 21, 17, Some(1));
        assert_eq!(syms.len(), 4);
        assert_eq!(syms[0], vec![1, 5, 9, 13, 17, 21]);
    }

    #[test]
    fn case_vii_small() {
        assert_eq!(
            symbols_of(Case::VII, 4, 1, Some(1)),
            vec![vec![1, 2], vec![2, 3], vec![3, 4]]
        );
        let syms = symbols_of(Case::VII, 18, 5, Some(1));
        assert_eq!(syms.len(), 13);
        assert_eq!(syms[0], vec![1, 2, 3, 4, 5, 6]);
        assert_eq!(syms[12], vec![13, 14, 15, 16, 17, 18]);
    }

    #[test]
    fn case_viii_small() {
        assert_eq!(
            symbols_of(Case::VIII, 6, 4, Some(1)),
            vec![vec![1, 2, 4, 5], vec![2, 3, 5, 6]]
        );
        let syms = symbols_of(Case::VIII, 24, 19, Some(1));
        assert_eq!(syms.len(), 5);
        assert_eq!(syms[0], vec![1, 2, 7, 8, 13, 14, 19, 20]);
    }

    #[test]
    fn case_ix_small() {
        assert_eq!(
            symbols_of(Case::IX, 5, 2, Some(1)),
            vec![vec![1, 3], vec![2, 4], vec![3, 4, 5]]
        );
        let syms = symbols_of(Case::IX, 19, 5, Some(1));
        assert_eq!(syms.len(), 14);
        assert!(syms.contains(&vec![11, 15, 19]));
        assert!(syms.contains(&vec![14, 18, 19]));
    }

    #[test]
    fn case_x_small() {
        assert_eq!(
            symbols_of(Case::X, 5, 3, Some(1)),
            vec![vec![1, 3, 5], vec![2, 4, 5]]
        );
        let syms = symbols_of(Case::X, 28, 18, Some(2));
        assert_eq!(syms.len(), 10);
        assert_eq!(syms[0], vec![1, 11, 21, 23, 25, 27]);
        assert_eq!(syms[2], vec![3, 13, 21]);
    }

    #[test]
    fn invalid_parameters_are_rejected() {
        assert!(CaseParams::new(Case::I, 6, 4, None).is_err());
        assert!(CaseParams::new(Case::V, 21, 4, Some(3)).is_err());
        // Mismatched params are rejected by the constructor itself.
        let p = CaseParams::new(Case::I, 6, 2, None).unwrap();
        assert!(construct_case_ii(&p).is_err());
    }

    #[test]
    fn length_is_k_minus_d() {
        for (case, k, d, lam) in [
            (Case::I, 20, 4, None),
            (Case::II, 20, 16, None),
            (Case::III, 20, 12, None),
            (Case::IV, 20, 8, None),
            (Case::V, 21, 4, Some(1)),
            (Case::VI, 21, 17, Some(1)),
            (Case::VII, 18, 5, Some(1)),
            (Case::VIII, 24, 19, Some(1)),
            (Case::IX, 19, 5, Some(1)),
            (Case::X, 28, 18, Some(2)),
        ] {
            let code = construct(&CaseParams::new(case, k, d, lam).unwrap()).unwrap();
            assert_eq!(code.len(), k - d, "case {case} K={k} D={d}");
            assert_eq!(code.matrix().rank(), k - d, "case {case} K={k} D={d}");
        }
    }

    #[test]
    fn case_i_and_ii_agree_when_k_is_2d() {
        for d in 1..=10 {
            let k = 2 * d;
            let a = construct(&CaseParams::new(Case::I, k, d, None).unwrap()).unwrap();
            let b = construct(&CaseParams::new(Case::II, k, d, None).unwrap()).unwrap();
            assert_eq!(a.symbols(), b.symbols());
        }
    }
}
