//! Problem instances: symmetric side-information patterns and their capacity.
//!
//! A problem has K messages and K receivers; receiver k wants message k and
//! already knows the messages in its antidote set. The ten named cases are
//! one-sided neighboring patterns cut down in specific ways, each with its own
//! divisibility preconditions. Every subscript is reduced modulo K into 1..K.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};

/// Reduces any integer to the 1-based residue range 1..=k.
pub(crate) fn wrap(index: i64, k: usize) -> usize {
    let k = k as i64;
    ((index - 1).rem_euclid(k) + 1) as usize
}

/// The ten named one-sided antidote patterns.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Case {
    I,
    II,
    III,
    IV,
    V,
    VI,
    VII,
    VIII,
    IX,
    X,
}

impl Case {
    pub const ALL: [Case; 10] = [
        Case::I,
        Case::II,
        Case::III,
        Case::IV,
        Case::V,
        Case::VI,
        Case::VII,
        Case::VIII,
        Case::IX,
        Case::X,
    ];

    /// Cases V..X take the extra spacing parameter lambda.
    pub fn requires_lambda(self) -> bool {
        matches!(
            self,
            Case::V | Case::VI | Case::VII | Case::VIII | Case::IX | Case::X
        )
    }
}

impl fmt::Display for Case {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Case::I => "I",
            Case::II => "II",
            Case::III => "III",
            Case::IV => "IV",
            Case::V => "V",
            Case::VI => "VI",
            Case::VII => "VII",
            Case::VIII => "VIII",
            Case::IX => "IX",
            Case::X => "X",
        };
        f.write_str(s)
    }
}

impl std::str::FromStr for Case {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let t = t
            .strip_prefix("case")
            .or_else(|| t.strip_prefix("Case"))
            .unwrap_or(t);
        match t.to_ascii_uppercase().as_str() {
            "I" | "1" => Ok(Case::I),
            "II" | "2" => Ok(Case::II),
            "III" | "3" => Ok(Case::III),
            "IV" | "4" => Ok(Case::IV),
            "V" | "5" => Ok(Case::V),
            "VI" | "6" => Ok(Case::VI),
            "VII" | "7" => Ok(Case::VII),
            "VIII" | "8" => Ok(Case::VIII),
            "IX" | "9" => Ok(Case::IX),
            "X" | "10" => Ok(Case::X),
            _ => Err(Error::invalid(format!("unknown case {s:?}"))),
        }
    }
}

/// Which family a parameter set belongs to: one of the ten cases, or the
/// general two-sided pattern with U messages back and D messages ahead.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CaseId {
    Named(Case),
    General,
}

impl fmt::Display for CaseId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CaseId::Named(c) => c.fmt(f),
            CaseId::General => f.write_str("GENERAL"),
        }
    }
}

/// Validated parameters for one instance, with the derived quantities the
/// constructions use.
///
/// Derived names follow the constructions: `m`, `n`, `p`, `q` vary per case,
/// and `s` is the group length `(K-D)/lambda` used by cases VIII and X.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CaseParams {
    case: CaseId,
    k: usize,
    u: usize,
    d: usize,
    lambda: Option<usize>,
    m: Option<usize>,
    n: Option<usize>,
    p: Option<usize>,
    q: Option<usize>,
    s: Option<usize>,
}

impl CaseParams {
    /// Validates parameters for one of the ten cases and computes the derived
    /// quantities. The error message names the violated condition.
    pub fn new(case: Case, k: usize, d: usize, lambda: Option<usize>) -> Result<Self> {
        if k < 2 {
            return Err(Error::invalid("K must be at least 2"));
        }
        if d < 1 || d > k - 1 {
            return Err(Error::invalid("D must satisfy 1 <= D <= K-1"));
        }
        if case.requires_lambda() {
            if lambda.is_none() {
                return Err(Error::invalid(format!("case {case} requires lambda")));
            }
        } else if lambda.is_some() {
            return Err(Error::invalid(format!("case {case} takes no lambda")));
        }
        let lam = lambda.unwrap_or(0);
        if case.requires_lambda() && lam < 1 {
            return Err(Error::invalid("lambda must be at least 1"));
        }

        let mut params = CaseParams {
            case: CaseId::Named(case),
            k,
            u: 0,
            d,
            lambda,
            m: None,
            n: None,
            p: None,
            q: None,
            s: None,
        };

        match case {
            Case::I => {
                if !k.is_multiple_of(d) {
                    return Err(Error::invalid("D must divide K"));
                }
                params.n = Some(k / d);
            }
            Case::II => {
                if !k.is_multiple_of(k - d) {
                    return Err(Error::invalid("K-D must divide K"));
                }
                params.m = Some(k - d);
                params.n = Some(k / (k - d));
            }
            Case::III => {
                if !k.is_multiple_of(2) {
                    return Err(Error::invalid("K must be even"));
                }
                if d <= k / 2 {
                    return Err(Error::invalid("D must exceed K/2"));
                }
                let m = d - k / 2;
                if !(k / 2).is_multiple_of(m) {
                    return Err(Error::invalid("D-K/2 must divide K/2"));
                }
                params.m = Some(m);
                params.n = Some((k / 2) / m);
            }
            Case::IV => {
                if !k.is_multiple_of(2) {
                    return Err(Error::invalid("K must be even"));
                }
                if d >= k / 2 {
                    return Err(Error::invalid("D must be less than K/2"));
                }
                let m = k / 2 - d;
                if !d.is_multiple_of(m) {
                    return Err(Error::invalid("K/2-D must divide D"));
                }
                params.m = Some(m);
                params.n = Some(k / m);
                params.p = Some(d / m);
            }
            Case::V => {
                if !d.is_multiple_of(lam) {
                    return Err(Error::invalid("lambda must divide D"));
                }
                if lam >= k || !(k - lam).is_multiple_of(d) {
                    return Err(Error::invalid("D must divide K-lambda"));
                }
                let n = (k - lam) / d;
                if n <= 1 {
                    return Err(Error::invalid("(K-lambda)/D must exceed 1"));
                }
                params.n = Some(n);
            }
            Case::VI => {
                if !(k - d).is_multiple_of(lam) {
                    return Err(Error::invalid("lambda must divide K-D"));
                }
                if lam >= k || !(k - lam).is_multiple_of(k - d) {
                    return Err(Error::invalid("K-D must divide K-lambda"));
                }
                params.m = Some(k - d);
                params.q = Some((k - lam) / (k - d));
            }
            Case::VII => {
                if !d.is_multiple_of(lam) {
                    return Err(Error::invalid("lambda must divide D"));
                }
                if !k.is_multiple_of(d + lam) {
                    return Err(Error::invalid("D+lambda must divide K"));
                }
                params.p = Some(d / lam);
                params.n = Some(k / (d + lam));
            }
            Case::VIII => {
                if !(k - d).is_multiple_of(lam) {
                    return Err(Error::invalid("lambda must divide K-D"));
                }
                if !k.is_multiple_of(k - d + lam) {
                    return Err(Error::invalid("K-D+lambda must divide K"));
                }
                params.m = Some(k - d);
                params.p = Some(k / (k - d + lam));
                params.s = Some((k - d) / lam);
            }
            Case::IX => {
                if !d.is_multiple_of(lam) {
                    return Err(Error::invalid("lambda must divide D"));
                }
                if !(k + lam).is_multiple_of(d) {
                    return Err(Error::invalid("D must divide K+lambda"));
                }
                let n = (k + lam) / d;
                if n <= 2 {
                    return Err(Error::invalid("(K+lambda)/D must exceed 2"));
                }
                params.n = Some(n);
                params.p = Some(k % d); // equals D - lambda
            }
            Case::X => {
                if !(k - d).is_multiple_of(lam) {
                    return Err(Error::invalid("lambda must divide K-D"));
                }
                if !(k + lam).is_multiple_of(k - d) {
                    return Err(Error::invalid("K-D must divide K+lambda"));
                }
                let m = k - d;
                let s = m / lam;
                if s < 2 {
                    return Err(Error::invalid("lambda must not exceed (K-D)/2"));
                }
                params.m = Some(m);
                params.p = Some(m - lam);
                params.q = Some((k + lam) / m);
                params.s = Some(s);
            }
        }
        Ok(params)
    }

    /// Parameters for the general two-sided neighboring pattern.
    pub fn general(k: usize, u: usize, d: usize) -> Result<Self> {
        if k < 2 {
            return Err(Error::invalid("K must be at least 2"));
        }
        if d < 1 {
            return Err(Error::invalid("D must be at least 1"));
        }
        if u + d >= k {
            return Err(Error::invalid("U+D must be at most K-1"));
        }
        Ok(CaseParams {
            case: CaseId::General,
            k,
            u,
            d,
            lambda: None,
            m: None,
            n: None,
            p: None,
            q: None,
            s: None,
        })
    }

    pub fn case(&self) -> CaseId {
        self.case
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn u(&self) -> usize {
        self.u
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn lambda(&self) -> Option<usize> {
        self.lambda
    }

    pub fn m(&self) -> Option<usize> {
        self.m
    }

    pub fn n(&self) -> Option<usize> {
        self.n
    }

    pub fn p(&self) -> Option<usize> {
        self.p
    }

    pub fn q(&self) -> Option<usize> {
        self.q
    }

    pub fn s(&self) -> Option<usize> {
        self.s
    }
}

/// An index coding instance: K receivers, each with an antidote set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProblemSpec {
    k: usize,
    antidotes: Vec<BTreeSet<usize>>,
    origin: Option<CaseParams>,
}

impl ProblemSpec {
    /// Builds an instance from an explicit antidote map (entry k-1 holds the
    /// set for receiver k). Rejects self-antidotes and out-of-range indices.
    pub fn new(k: usize, antidotes: Vec<BTreeSet<usize>>) -> Result<Self> {
        if k < 1 {
            return Err(Error::invalid("K must be at least 1"));
        }
        if antidotes.len() != k {
            return Err(Error::dimension(format!(
                "antidote map has {} entries for K={k}",
                antidotes.len()
            )));
        }
        for (i, set) in antidotes.iter().enumerate() {
            let receiver = i + 1;
            for &j in set {
                if j < 1 || j > k {
                    return Err(Error::invalid(format!(
                        "antidote {j} of receiver {receiver} is outside 1..={k}"
                    )));
                }
                if j == receiver {
                    return Err(Error::invalid(format!(
                        "receiver {receiver} lists its own message as an antidote"
                    )));
                }
            }
        }
        Ok(ProblemSpec {
            k,
            antidotes,
            origin: None,
        })
    }

    /// The pattern of one of the ten cases.
    pub fn from_case(params: &CaseParams) -> Result<Self> {
        let k = params.k();
        let antidotes = (1..=k)
            .map(|r| antidotes_for_case(params, r))
            .collect::<Result<Vec<_>>>()?;
        Ok(ProblemSpec {
            k,
            antidotes,
            origin: Some(params.clone()),
        })
    }

    /// The general two-sided neighboring pattern.
    pub fn general(k: usize, u: usize, d: usize) -> Result<Self> {
        let params = CaseParams::general(k, u, d)?;
        let antidotes = (1..=k)
            .map(|r| antidotes_general(k, u, d, r))
            .collect::<Result<Vec<_>>>()?;
        Ok(ProblemSpec {
            k,
            antidotes,
            origin: Some(params),
        })
    }

    /// The full one-sided window: receiver k knows the next D messages.
    pub fn one_sided(k: usize, d: usize) -> Result<Self> {
        Self::general(k, 0, d)
    }

    /// Complete side information: everyone knows every other message.
    pub fn complete(k: usize) -> Result<Self> {
        if k < 2 {
            return Err(Error::invalid("K must be at least 2"));
        }
        Self::general(k, 0, k - 1)
    }

    /// No side information at all.
    pub fn empty(k: usize) -> Result<Self> {
        Self::new(k, vec![BTreeSet::new(); k])
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn origin(&self) -> Option<&CaseParams> {
        self.origin.as_ref()
    }

    /// Antidote set of receiver k (1-based).
    pub fn antidotes(&self, k: usize) -> &BTreeSet<usize> {
        assert!(k >= 1 && k <= self.k, "receiver {k} out of 1..={}", self.k);
        &self.antidotes[k - 1]
    }

    /// All edges (i, j) of the side-information graph, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 1..=self.k {
            for &j in self.antidotes(i) {
                out.push((i, j));
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.antidotes.iter().map(|s| s.len()).sum()
    }

    /// A copy with one edge deleted. Errors when the edge is absent.
    pub fn without_edge(&self, i: usize, j: usize) -> Result<Self> {
        if i < 1 || i > self.k || !self.antidotes(i).contains(&j) {
            return Err(Error::invalid(format!("({i}, {j}) is not an edge")));
        }
        let mut antidotes = self.antidotes.clone();
        antidotes[i - 1].remove(&j);
        Ok(ProblemSpec {
            k: self.k,
            antidotes,
            origin: None,
        })
    }
}

/// Antidotes of receiver `r` under the general pattern: the U messages before
/// and the D messages after, all indices modulo K.
pub fn antidotes_general(k: usize, u: usize, d: usize, r: usize) -> Result<BTreeSet<usize>> {
    if u + d >= k {
        return Err(Error::invalid("U+D must be at most K-1"));
    }
    if r < 1 || r > k {
        return Err(Error::invalid(format!("receiver {r} is outside 1..={k}")));
    }
    let r = r as i64;
    let mut set = BTreeSet::new();
    for back in 1..=u as i64 {
        set.insert(wrap(r - back, k));
    }
    for ahead in 1..=d as i64 {
        set.insert(wrap(r + ahead, k));
    }
    Ok(set)
}

/// Antidotes of receiver `r` under the pattern the parameters describe.
pub fn antidotes_for_case(params: &CaseParams, r: usize) -> Result<BTreeSet<usize>> {
    let k = params.k();
    if r < 1 || r > k {
        return Err(Error::invalid(format!("receiver {r} is outside 1..={k}")));
    }
    let case = match params.case() {
        CaseId::General => return antidotes_general(k, params.u(), params.d(), r),
        CaseId::Named(c) => c,
    };
    let d = params.d();
    let lam = params.lambda().unwrap_or(0);
    let ri = r as i64;
    let mut set = BTreeSet::new();
    match case {
        Case::I => {
            set.insert(wrap(ri + d as i64, k));
        }
        Case::II => {
            // {r+m, r+2m, ..., r+(n-1)m} with m = K-D
            let m = params.m().unwrap() as i64;
            for t in 1..params.n().unwrap() as i64 {
                set.insert(wrap(ri + t * m, k));
            }
        }
        Case::III => {
            let half = (k / 2) as i64;
            set.insert(wrap(ri + half, k));
            set.insert(wrap(ri + d as i64 - half, k));
            set.insert(wrap(ri + d as i64, k));
        }
        Case::IV => {
            // {r+m, r+2m, ..., r+pm} with m = K/2-D
            let m = params.m().unwrap() as i64;
            for t in 1..=params.p().unwrap() as i64 {
                set.insert(wrap(ri + t * m, k));
            }
        }
        Case::V => {
            if r <= k - d - lam {
                set.insert(wrap(ri + d as i64, k));
            } else {
                for t in 1..=(d / lam) as i64 {
                    set.insert(wrap(ri + t * lam as i64, k));
                }
            }
        }
        Case::VI | Case::X => {
            return antidotes_general(k, 0, d, r);
        }
        Case::VII => {
            for t in 1..=params.p().unwrap() as i64 {
                set.insert(wrap(ri + t * lam as i64, k));
            }
        }
        Case::VIII => {
            // The zig-zag of step lambda then step K-D, 2p-1 terms before
            // reduction: {r + t*lam + t*(K-D)} for t = 1..p-1 and
            // {r + (t+1)*lam + t*(K-D)} for t = 0..p-1.
            let m = (k - d) as i64;
            let lam = lam as i64;
            let p = params.p().unwrap() as i64;
            for t in 1..p {
                set.insert(wrap(ri + t * lam + t * m, k));
            }
            for t in 0..p {
                set.insert(wrap(ri + (t + 1) * lam + t * m, k));
            }
        }
        Case::IX => {
            if r + 2 * d <= k + lam {
                set.insert(wrap(ri + d as i64, k));
            } else {
                for t in 1..=(d / lam) as i64 {
                    set.insert(wrap(ri + t * lam as i64, k));
                }
            }
        }
    }
    debug_assert!(!set.contains(&r), "self-antidote for receiver {r}");
    Ok(set)
}

/// An exact rate in (0, 1], kept reduced.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Rational {
    num: u64,
    den: u64,
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

impl Rational {
    pub fn new(num: u64, den: u64) -> Self {
        assert!(num >= 1 && den >= 1, "rational must be positive");
        assert!(num <= den, "rates never exceed 1");
        let g = gcd(num, den);
        Rational {
            num: num / g,
            den: den / g,
        }
    }

    pub fn one() -> Self {
        Rational { num: 1, den: 1 }
    }

    pub fn numerator(&self) -> u64 {
        self.num
    }

    pub fn denominator(&self) -> u64 {
        self.den
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

/// Capacity per message of the general neighboring pattern:
/// 1 when U+D = K-1, else (min(U,D)+1) / (K + min(U,D) - max(U,D)).
pub fn capacity_general(k: usize, u: usize, d: usize) -> Result<Rational> {
    if u + d > k - 1 {
        return Err(Error::invalid("U+D must be at most K-1"));
    }
    if u + d == k - 1 {
        return Ok(Rational::one());
    }
    let (lo, hi) = (u.min(d) as u64, u.max(d) as u64);
    Ok(Rational::new(lo + 1, k as u64 + lo - hi))
}

/// Capacity per message of the one-sided pattern: 1 when D = K-1, else 1/(K-D).
pub fn capacity_one_sided(k: usize, d: usize) -> Result<Rational> {
    if d >= k {
        return Err(Error::invalid("D must be at most K-1"));
    }
    if d == k - 1 {
        return Ok(Rational::one());
    }
    Ok(Rational::new(1, (k - d) as u64))
}
