//! Short cycles: transpositions `T(i,j)`, 3-cycles `R(i,j,k)` / `L(i,j,k)`,
//! and general one-cycle permutations `R_A` / `L_A` over an arbitrary
//! support.
//!
//! Comparisons against permutations go through the maximal function, and
//! comparisons among the short cycles themselves use the closed-form table,
//! so no Bruhat dominance test is ever needed on these hot paths.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::perm::{MaxFunction, Permutation};

/// An element of the set of 2- and 3-cycles: `T(i,j)` with i < j, or
/// `R(i,j,k)` / `L(i,j,k)` with i < j < k, where `L = R⁻¹`.
///
/// The derived order (variant first, then indices) is the canonical order
/// used for serialization.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CycleElem {
    T(usize, usize),
    R(usize, usize, usize),
    L(usize, usize, usize),
}

use CycleElem::{L, R, T};

impl CycleElem {
    pub fn t(i: usize, j: usize) -> Self {
        assert!(1 <= i && i < j, "T({i},{j}): need 1 <= i < j");
        T(i, j)
    }

    pub fn r(i: usize, j: usize, k: usize) -> Self {
        assert!(1 <= i && i < j && j < k, "R({i},{j},{k}): need 1 <= i < j < k");
        R(i, j, k)
    }

    pub fn l(i: usize, j: usize, k: usize) -> Self {
        assert!(1 <= i && i < j && j < k, "L({i},{j},{k}): need 1 <= i < j < k");
        L(i, j, k)
    }

    pub fn is_transposition(&self) -> bool {
        matches!(self, T(..))
    }

    /// Largest index occurring in the element.
    pub fn max_index(&self) -> usize {
        match *self {
            T(_, j) => j,
            R(_, _, k) | L(_, _, k) => k,
        }
    }

    pub fn inverse(&self) -> Self {
        match *self {
            T(i, j) => T(i, j),
            R(i, j, k) => L(i, j, k),
            L(i, j, k) => R(i, j, k),
        }
    }

    /// Conjugation by w0 in S_n: `x ↦ w0·x·w0`.
    pub fn upend(&self, n: usize) -> Self {
        let m = |i: usize| n + 1 - i;
        match *self {
            T(i, j) => T(m(j), m(i)),
            R(i, j, k) => L(m(k), m(j), m(i)),
            L(i, j, k) => R(m(k), m(j), m(i)),
        }
    }

    /// The element as a permutation of `[n]`.
    pub fn to_perm(&self, n: usize) -> Permutation {
        assert!(self.max_index() <= n);
        let mut entries: Vec<usize> = (1..=n).collect();
        match *self {
            T(i, j) => {
                entries.swap(i - 1, j - 1);
            }
            R(i, j, k) => {
                entries[i - 1] = j;
                entries[j - 1] = k;
                entries[k - 1] = i;
            }
            L(i, j, k) => {
                entries[i - 1] = k;
                entries[j - 1] = i;
                entries[k - 1] = j;
            }
        }
        Permutation::from_one_line(&entries).expect("cycle is a bijection")
    }

    /// Closed-form Bruhat comparison among 2/3-cycles.
    pub fn elem_leq(&self, other: &CycleElem) -> bool {
        // T(i,j) <= T(x,y) iff x <= i < j <= y
        fn tt(i: usize, j: usize, x: usize, y: usize) -> bool {
            x <= i && j <= y
        }
        match (*self, *other) {
            (T(i, j), T(x, y)) => tt(i, j, x, y),
            (R(i, _, k), T(x, y)) | (L(i, _, k), T(x, y)) => tt(i, k, x, y),
            (T(i, j), R(x, y, z)) | (T(i, j), L(x, y, z)) => tt(i, j, x, y) || tt(i, j, y, z),
            (R(i, _, k), L(x, y, z)) | (L(i, _, k), R(x, y, z)) => {
                tt(i, k, x, y) || tt(i, k, y, z)
            }
            (R(i, j, k), R(x, y, z)) | (L(i, j, k), L(x, y, z)) => {
                tt(i, k, x, y) || tt(i, k, y, z) || (x <= i && j == y && k <= z)
            }
        }
    }

    /// Bruhat comparison against a permutation, via the maximal functions of
    /// σ and σ⁻¹.
    pub fn leq_perm_via_max(&self, m: &MaxFunction, m_inv: &MaxFunction) -> bool {
        match *self {
            T(i, j) => m.get(i) >= j && m_inv.get(i) >= j,
            R(i, j, k) => m.get(i) >= j && m.get(j) >= k && m_inv.get(i) >= k,
            L(i, j, k) => m_inv.get(i) >= j && m_inv.get(j) >= k && m.get(i) >= k,
        }
    }

    /// All of the 2/3-cycle set for S_n, in canonical order.
    pub fn all(n: usize) -> Vec<CycleElem> {
        let mut out = Vec::new();
        for i in 1..=n {
            for j in i + 1..=n {
                out.push(T(i, j));
            }
        }
        for i in 1..=n {
            for j in i + 1..=n {
                for k in j + 1..=n {
                    out.push(R(i, j, k));
                }
            }
        }
        for i in 1..=n {
            for j in i + 1..=n {
                for k in j + 1..=n {
                    out.push(L(i, j, k));
                }
            }
        }
        out.sort();
        out
    }
}

impl fmt::Display for CycleElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            T(i, j) => write!(f, "T({i},{j})"),
            R(i, j, k) => write!(f, "R({i},{j},{k})"),
            L(i, j, k) => write!(f, "L({i},{j},{k})"),
        }
    }
}

impl fmt::Debug for CycleElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for CycleElem {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (tag, rest) = s.split_at(s.len().min(1));
        let indices = parse_index_list(rest, s)?;
        match (tag, indices.as_slice()) {
            ("T", [i, j]) if 1 <= *i && i < j => Ok(T(*i, *j)),
            ("R", [i, j, k]) if 1 <= *i && i < j && j < k => Ok(R(*i, *j, *k)),
            ("L", [i, j, k]) if 1 <= *i && i < j && j < k => Ok(L(*i, *j, *k)),
            _ => Err(Error::Parse(format!("invalid cycle element {s:?}"))),
        }
    }
}

fn parse_index_list(body: &str, whole: &str) -> Result<Vec<usize>> {
    let body = body.trim();
    let inner = body
        .strip_prefix('(')
        .and_then(|b| b.strip_suffix(')'))
        .or_else(|| body.strip_prefix('[').and_then(|b| b.strip_suffix(']')))
        .ok_or_else(|| Error::Parse(format!("invalid cycle element {whole:?}")))?;
    inner
        .split(',')
        .map(|p| {
            p.trim()
                .parse::<usize>()
                .map_err(|_| Error::Parse(format!("bad index {p:?} in {whole:?}")))
        })
        .collect()
}

/// Direction of a general cycle: `R_A` walks the support upward,
/// `L_A = R_A⁻¹`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum Direction {
    Right,
    Left,
}

/// A cycle permutation `R_A` or `L_A` over a nonempty, strictly increasing
/// support `A ⊆ [n]`.
///
/// Canonical form: supports of size ≤ 2 always carry direction `Right`
/// (the two directions coincide there), and the identity (any singleton
/// support) is normalized to support `{1}`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GeneralCycle {
    dir: Direction,
    support: Vec<usize>,
}

impl GeneralCycle {
    /// Builds a cycle in canonical form. The support must be nonempty and
    /// strictly increasing.
    pub fn new(dir: Direction, support: Vec<usize>) -> Result<Self> {
        if support.is_empty() {
            return Err(Error::InvalidElem("empty cycle support".into()));
        }
        if support[0] < 1 || !support.windows(2).all(|w| w[0] < w[1]) {
            return Err(Error::InvalidElem(format!(
                "cycle support {support:?} is not strictly increasing in [n]"
            )));
        }
        if support.len() == 1 {
            return Ok(GeneralCycle { dir: Direction::Right, support: vec![1] });
        }
        let dir = if support.len() == 2 { Direction::Right } else { dir };
        Ok(GeneralCycle { dir, support })
    }

    /// The interval cycle `R_[i,j]` (or `L_[i,j]`).
    pub fn interval(dir: Direction, i: usize, j: usize) -> Self {
        assert!(1 <= i && i <= j);
        GeneralCycle::new(dir, (i..=j).collect()).expect("interval support is valid")
    }

    pub fn direction(&self) -> Direction {
        self.dir
    }

    pub fn support(&self) -> &[usize] {
        &self.support
    }

    pub fn is_identity(&self) -> bool {
        self.support.len() == 1
    }

    pub fn max_index(&self) -> usize {
        *self.support.last().unwrap()
    }

    /// True iff the support is a contiguous interval of length ≥ 2.
    pub fn is_interval(&self) -> bool {
        self.support.len() >= 2 && self.support.windows(2).all(|w| w[1] == w[0] + 1)
    }

    pub fn inverse(&self) -> Self {
        let dir = match self.dir {
            _ if self.support.len() <= 2 => Direction::Right,
            Direction::Right => Direction::Left,
            Direction::Left => Direction::Right,
        };
        GeneralCycle { dir, support: self.support.clone() }
    }

    /// The cycle as a permutation of `[n]`: direction `Right` maps
    /// `i1 → i2 → ⋯ → ik → i1`.
    pub fn to_perm(&self, n: usize) -> Permutation {
        assert!(self.max_index() <= n);
        let mut entries: Vec<usize> = (1..=n).collect();
        let k = self.support.len();
        for t in 0..k {
            let from = self.support[t];
            let to = self.support[(t + 1) % k];
            match self.dir {
                Direction::Right => entries[from - 1] = to,
                Direction::Left => entries[to - 1] = from,
            }
        }
        Permutation::from_one_line(&entries).expect("cycle is a bijection")
    }

    /// Bruhat comparison against σ via the maximal functions: `R_A ≤ σ` iff
    /// `M_σ(i_t) ≥ i_{t+1}` for all t < k and `M_{σ⁻¹}(i_1) ≥ i_k`,
    /// and the mirror statement for `L_A`.
    pub fn leq_perm_via_max(&self, m: &MaxFunction, m_inv: &MaxFunction) -> bool {
        let s = &self.support;
        let k = s.len();
        if k == 1 {
            return true;
        }
        let (fwd, bwd) = match self.dir {
            Direction::Right => (m, m_inv),
            Direction::Left => (m_inv, m),
        };
        s.windows(2).all(|w| fwd.get(w[0]) >= w[1]) && bwd.get(s[0]) >= s[k - 1]
    }

    /// All of the cycle set for S_n in canonical form: one entry per distinct
    /// cycle permutation (the identity appears once).
    pub fn all(n: usize) -> Vec<GeneralCycle> {
        assert!(n <= 16, "cycle enumeration is exponential in n");
        let mut out = vec![GeneralCycle { dir: Direction::Right, support: vec![1] }];
        let mut supports: Vec<Vec<usize>> = vec![vec![]];
        for i in 1..=n {
            let mut next = Vec::with_capacity(supports.len() * 2);
            for s in supports {
                let mut with = s.clone();
                with.push(i);
                next.push(s);
                next.push(with);
            }
            supports = next;
        }
        for s in supports {
            match s.len() {
                0 | 1 => {}
                2 => out.push(GeneralCycle { dir: Direction::Right, support: s }),
                _ => {
                    out.push(GeneralCycle { dir: Direction::Right, support: s.clone() });
                    out.push(GeneralCycle { dir: Direction::Left, support: s });
                }
            }
        }
        out.sort();
        out
    }

    /// The special cycles: interval cycles `R_[i,j]`, `L_[i,j]` with i < j,
    /// in canonical form. There are (n-1)² of them.
    pub fn all_special(n: usize) -> Vec<GeneralCycle> {
        let mut out = Vec::new();
        for i in 1..=n {
            for j in i + 1..=n {
                out.push(GeneralCycle::interval(Direction::Right, i, j));
                if j > i + 1 {
                    out.push(GeneralCycle::interval(Direction::Left, i, j));
                }
            }
        }
        out.sort();
        out
    }
}

impl fmt::Display for GeneralCycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_identity() {
            return write!(f, "e");
        }
        let tag = match self.dir {
            Direction::Right => 'R',
            Direction::Left => 'L',
        };
        if self.is_interval() {
            write!(f, "{tag}[{},{}]", self.support[0], self.max_index())
        } else {
            let strs: Vec<String> = self.support.iter().map(|i| i.to_string()).collect();
            write!(f, "{tag}({})", strs.join(","))
        }
    }
}

impl fmt::Debug for GeneralCycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for GeneralCycle {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "e" {
            return GeneralCycle::new(Direction::Right, vec![1]);
        }
        let (tag, rest) = s.split_at(s.len().min(1));
        let dir = match tag {
            "R" => Direction::Right,
            "L" => Direction::Left,
            _ => return Err(Error::Parse(format!("invalid cycle {s:?}"))),
        };
        let indices = parse_index_list(rest, s)?;
        if rest.trim_start().starts_with('[') {
            let [i, j] = indices.as_slice() else {
                return Err(Error::Parse(format!("interval cycle needs two indices: {s:?}")));
            };
            if !(1 <= *i && i <= j) {
                return Err(Error::Parse(format!("invalid interval in {s:?}")));
            }
            Ok(GeneralCycle::interval(dir, *i, *j))
        } else {
            GeneralCycle::new(dir, indices)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn build_cycle_examples() {
        assert_eq!(GeneralCycle::new(Direction::Right, vec![1, 2, 3]).unwrap().to_perm(3), p("231"));
        assert_eq!(GeneralCycle::new(Direction::Left, vec![1, 2, 3]).unwrap().to_perm(3), p("312"));
        assert_eq!(GeneralCycle::interval(Direction::Right, 1, 4).to_perm(4), p("2341"));
        // non-interval support
        assert_eq!(
            GeneralCycle::new(Direction::Right, vec![1, 3, 4]).unwrap().to_perm(4),
            p("3241")
        );
    }

    #[test]
    fn elem_to_perm_examples() {
        assert_eq!(CycleElem::t(1, 2).to_perm(3), p("213"));
        assert_eq!(CycleElem::r(1, 2, 3).to_perm(3), p("231"));
        assert_eq!(CycleElem::l(1, 2, 3).to_perm(3), p("312"));
        assert_eq!(
            CycleElem::r(1, 2, 3).to_perm(3).compose(&CycleElem::l(1, 2, 3).to_perm(3)).unwrap(),
            Permutation::identity(3)
        );
    }

    #[test]
    fn elem_leq_examples() {
        assert!(CycleElem::t(1, 2).elem_leq(&CycleElem::t(1, 3)));
        assert!(!CycleElem::r(1, 2, 3).elem_leq(&CycleElem::l(1, 2, 3)));
        assert!(CycleElem::t(2, 3).elem_leq(&CycleElem::r(1, 3, 4)));
    }

    #[test]
    fn elem_leq_matches_bruhat_small() {
        for n in 1..=5 {
            let elems = CycleElem::all(n);
            for a in &elems {
                for b in &elems {
                    let brute =
                        a.to_perm(n).bruhat_leq(&b.to_perm(n)).unwrap();
                    assert_eq!(a.elem_leq(b), brute, "n={n} {a} <= {b}");
                }
            }
        }
    }

    #[test]
    fn elem_counts() {
        // #C^{2,3}_n = 2*binom(n,3) + binom(n,2)
        for n in 1..=8usize {
            let b3 = n * n.saturating_sub(1) * n.saturating_sub(2) / 6;
            let b2 = n * n.saturating_sub(1) / 2;
            assert_eq!(CycleElem::all(n).len(), 2 * b3 + b2);
        }
    }

    #[test]
    fn cycle_counts() {
        // #C_n = 2^{n+1} - binom(n,2) - 2n - 1, distinct permutations
        for n in 1..=8usize {
            let b2 = n * (n - 1) / 2;
            let expect = (1usize << (n + 1)) - b2 - 2 * n - 1;
            let all = GeneralCycle::all(n);
            assert_eq!(all.len(), expect, "n={n}");
            let mut perms: Vec<Permutation> = all.iter().map(|c| c.to_perm(n)).collect();
            perms.sort();
            perms.dedup();
            assert_eq!(perms.len(), expect, "distinct perms n={n}");
            assert_eq!(GeneralCycle::all_special(n).len(), (n - 1) * (n - 1));
        }
    }

    #[test]
    fn cycle_leq_matches_bruhat() {
        for n in 1..=5 {
            let cycles = GeneralCycle::all(n);
            for sigma in Permutation::all(n) {
                let m = sigma.max_function();
                let mi = sigma.inverse().max_function();
                for c in &cycles {
                    let brute = c.to_perm(n).bruhat_leq(&sigma).unwrap();
                    assert_eq!(c.leq_perm_via_max(&m, &mi), brute, "n={n} {c} <= {sigma}");
                }
            }
        }
    }

    #[test]
    fn parse_display_roundtrip() {
        for s in ["T(1,2)", "R(1,2,3)", "L(2,4,5)"] {
            let e: CycleElem = s.parse().unwrap();
            assert_eq!(e.to_string(), s);
        }
        for s in ["e", "R[1,4]", "L[2,5]", "R(1,3,6)", "L(1,2,5,6)"] {
            let c: GeneralCycle = s.parse().unwrap();
            assert_eq!(c.to_string(), s);
        }
        assert!("T(2,1)".parse::<CycleElem>().is_err());
        assert!("R(1,2)".parse::<CycleElem>().is_err());
        assert!("X(1,2)".parse::<CycleElem>().is_err());
        // L[i,i+1] canonicalizes to R
        assert_eq!("L[1,2]".parse::<GeneralCycle>().unwrap().to_string(), "R[1,2]");
    }
}
