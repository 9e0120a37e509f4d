//! Permutations of `[n] = {1, …, n}` in one-line notation, with the Bruhat
//! order, the maximal function and pattern containment.
//!
//! All public indices and values are 1-based; storage is 0-based and never
//! leaks through the API.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A permutation of `[n]`, stored in one-line notation.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    // map[i] = σ(i+1) - 1
    map: Vec<usize>,
}

impl Permutation {
    /// The identity permutation of `[n]`.
    pub fn identity(n: usize) -> Self {
        assert!(n >= 1, "n must be at least 1");
        Permutation { map: (0..n).collect() }
    }

    /// The longest permutation `w0(i) = n + 1 - i`.
    pub fn longest(n: usize) -> Self {
        assert!(n >= 1, "n must be at least 1");
        Permutation { map: (0..n).rev().collect() }
    }

    /// Builds a permutation from 1-based one-line notation.
    pub fn from_one_line(entries: &[usize]) -> Result<Self> {
        let n = entries.len();
        if n == 0 {
            return Err(Error::InvalidPermutation("empty one-line notation".into()));
        }
        let mut seen = vec![false; n];
        for &v in entries {
            if v < 1 || v > n {
                return Err(Error::InvalidPermutation(format!(
                    "value {v} out of range for n = {n}"
                )));
            }
            if seen[v - 1] {
                return Err(Error::InvalidPermutation(format!("value {v} repeated")));
            }
            seen[v - 1] = true;
        }
        Ok(Permutation { map: entries.iter().map(|&v| v - 1).collect() })
    }

    pub fn n(&self) -> usize {
        self.map.len()
    }

    /// σ(i), 1-based.
    pub fn apply(&self, i: usize) -> usize {
        self.map[i - 1] + 1
    }

    /// One-line notation as 1-based values.
    pub fn one_line(&self) -> Vec<usize> {
        self.map.iter().map(|&v| v + 1).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.map.iter().enumerate().all(|(i, &v)| i == v)
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0usize; self.map.len()];
        for (i, &v) in self.map.iter().enumerate() {
            inv[v] = i;
        }
        Permutation { map: inv }
    }

    /// Composition `(self ∘ other)(x) = self(other(x))`.
    ///
    /// With this convention right multiplication by a transposition acts on
    /// positions: `σ·T(i,j)` swaps the entries of σ at positions i and j.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        if self.n() != other.n() {
            return Err(Error::SizeMismatch { expected: self.n(), got: other.n() });
        }
        Ok(Permutation { map: other.map.iter().map(|&v| self.map[v]).collect() })
    }

    /// `σ·T(i,j)`: swaps the entries at positions i < j.
    pub fn right_mul_transposition(&self, i: usize, j: usize) -> Self {
        assert!(1 <= i && i < j && j <= self.n());
        let mut map = self.map.clone();
        map.swap(i - 1, j - 1);
        Permutation { map }
    }

    /// Number of inversions `#{i < j : σ(i) > σ(j)}`.
    pub fn length(&self) -> usize {
        let n = self.n();
        let mut count = 0;
        for i in 0..n {
            for j in i + 1..n {
                if self.map[i] > self.map[j] {
                    count += 1;
                }
            }
        }
        count
    }

    /// The maximal function `M_σ(i) = max σ([i])`.
    pub fn max_function(&self) -> MaxFunction {
        let mut values = Vec::with_capacity(self.n());
        let mut max = 0;
        for &v in &self.map {
            max = max.max(v + 1);
            values.push(max);
        }
        MaxFunction { values }
    }

    /// The rank table `r(i,j) = #(σ([i]) ∩ [j])` for `i, j ∈ [n]`.
    pub fn rank_table(&self) -> RankTable {
        let n = self.n();
        let mut t = vec![0u16; n * n];
        for i in 0..n {
            let v = self.map[i];
            for j in 0..n {
                let above = if i > 0 { t[(i - 1) * n + j] } else { 0 };
                t[i * n + j] = above + u16::from(v <= j);
            }
        }
        RankTable { n, t }
    }

    /// Bruhat order: `self ≤ other` via the dominance criterion
    /// `#(τ([i]) ∩ [j]) ≥ #(σ([i]) ∩ [j])` for all i, j.
    pub fn bruhat_leq(&self, other: &Self) -> Result<bool> {
        if self.n() != other.n() {
            return Err(Error::SizeMismatch { expected: self.n(), got: other.n() });
        }
        let n = self.n();
        let mut ct = vec![0u16; n];
        let mut cs = vec![0u16; n];
        for i in 0..n {
            for slot in ct.iter_mut().skip(self.map[i]) {
                *slot += 1;
            }
            for slot in cs.iter_mut().skip(other.map[i]) {
                *slot += 1;
            }
            if ct.iter().zip(&cs).any(|(t, s)| t < s) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// True iff some subsequence of `self` is order-isomorphic to `pattern`.
    pub fn contains_pattern(&self, pattern: &Self) -> bool {
        self.find_pattern(pattern).is_some()
    }

    /// The lexicographically first occurrence of `pattern` as 1-based
    /// positions, if any.
    pub fn find_pattern(&self, pattern: &Self) -> Option<Vec<usize>> {
        let n = self.n();
        let m = pattern.n();
        if m > n {
            return None;
        }
        let mut chosen: Vec<usize> = Vec::with_capacity(m);
        if self.pattern_search(pattern, &mut chosen, 0) {
            Some(chosen.iter().map(|&p| p + 1).collect())
        } else {
            None
        }
    }

    fn pattern_search(&self, pattern: &Self, chosen: &mut Vec<usize>, start: usize) -> bool {
        let t = chosen.len();
        if t == pattern.n() {
            return true;
        }
        let n = self.n();
        // not enough positions left
        for p in start..=n.saturating_sub(pattern.n() - t) {
            let ok = chosen.iter().enumerate().all(|(s, &ps)| {
                (pattern.map[s] < pattern.map[t]) == (self.map[ps] < self.map[p])
            });
            if ok {
                chosen.push(p);
                if self.pattern_search(pattern, chosen, p + 1) {
                    return true;
                }
                chosen.pop();
            }
        }
        false
    }

    /// True iff there is no `1 ≤ k < n` with `σ([k]) = [k]`.
    pub fn is_indecomposable(&self) -> bool {
        let n = self.n();
        let mut max = 0;
        for i in 0..n - 1 {
            max = max.max(self.map[i]);
            if max == i {
                return false;
            }
        }
        true
    }

    /// Upending `σ ↦ w0·σ·w0`.
    pub fn upend(&self) -> Self {
        let n = self.n();
        let mut map = vec![0usize; n];
        for i in 0..n {
            map[n - 1 - i] = n - 1 - self.map[i];
        }
        Permutation { map }
    }

    /// All permutations of `[n]` in lexicographic one-line order.
    pub fn all(n: usize) -> AllPerms {
        assert!(n >= 1, "n must be at least 1");
        AllPerms { next: Some(Permutation::identity(n)) }
    }

    /// The permutation with the given lexicographic rank (0-based) among all
    /// of S_n, via the factorial number system.
    pub fn from_lex_rank(n: usize, mut rank: u64) -> Self {
        let mut fact = vec![1u64; n];
        for i in 1..n {
            fact[i] = fact[i - 1] * i as u64;
        }
        let mut pool: Vec<usize> = (0..n).collect();
        let mut map = Vec::with_capacity(n);
        for i in (0..n).rev() {
            let d = (rank / fact[i]) as usize;
            rank %= fact[i];
            map.push(pool.remove(d));
        }
        Permutation { map }
    }

    /// Advances to the next permutation in lexicographic order, in place.
    /// Returns false (leaving the maximum untouched) when already at w0.
    fn next_lex(&mut self) -> bool {
        let map = &mut self.map;
        let n = map.len();
        if n < 2 {
            return false;
        }
        let mut i = n - 1;
        while i > 0 && map[i - 1] >= map[i] {
            i -= 1;
        }
        if i == 0 {
            return false;
        }
        let mut j = n - 1;
        while map[j] <= map[i - 1] {
            j -= 1;
        }
        map.swap(i - 1, j);
        map[i..].reverse();
        true
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation({self})")
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let strs: Vec<String> = self.map.iter().map(|&v| (v + 1).to_string()).collect();
        write!(f, "{}", strs.join(","))
    }
}

impl FromStr for Permutation {
    type Err = Error;

    /// Accepts comma-separated one-line notation ("2,3,1") and, for n ≤ 9,
    /// the compact digit form ("231").
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Err(Error::Parse("empty permutation".into()));
        }
        let entries: Vec<usize> = if s.contains(',') {
            s.split(',')
                .map(|p| {
                    p.trim()
                        .parse::<usize>()
                        .map_err(|_| Error::Parse(format!("bad entry {p:?} in permutation")))
                })
                .collect::<Result<_>>()?
        } else if s.len() == 1 || s.chars().all(|c| c.is_ascii_digit()) {
            if s.len() > 9 {
                return Err(Error::Parse(
                    "compact digit form only supported for n <= 9; use commas".into(),
                ));
            }
            s.chars()
                .map(|c| {
                    c.to_digit(10)
                        .map(|d| d as usize)
                        .ok_or_else(|| Error::Parse(format!("bad digit {c:?} in permutation")))
                })
                .collect::<Result<_>>()?
        } else {
            return Err(Error::Parse(format!("cannot parse permutation {s:?}")));
        };
        Permutation::from_one_line(&entries)
    }
}

/// Iterator over S_n in lexicographic order.
pub struct AllPerms {
    next: Option<Permutation>,
}

impl Iterator for AllPerms {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        if succ.next_lex() {
            self.next = Some(succ);
        }
        Some(current)
    }
}

/// The maximal function of a permutation: `values[i] = max σ([i])`, 1-based.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MaxFunction {
    values: Vec<usize>,
}

impl MaxFunction {
    pub fn n(&self) -> usize {
        self.values.len()
    }

    /// `M_σ(i)`, 1-based.
    pub fn get(&self, i: usize) -> usize {
        self.values[i - 1]
    }

    pub fn values(&self) -> Vec<usize> {
        self.values.clone()
    }

    /// Pointwise comparison `self(i) ≤ other(i)` for all i.
    pub fn leq_pointwise(&self, other: &MaxFunction) -> bool {
        self.values.iter().zip(&other.values).all(|(a, b)| a <= b)
    }
}

/// Rank table of a permutation: `get(i,j) = #(σ([i]) ∩ [j])`, 1-based.
#[derive(Clone, Debug)]
pub struct RankTable {
    n: usize,
    t: Vec<u16>,
}

impl RankTable {
    pub fn get(&self, i: usize, j: usize) -> u16 {
        self.t[(i - 1) * self.n + (j - 1)]
    }

    /// Dominance comparison: true iff `self.get(i,j) ≥ other.get(i,j)`
    /// for all i, j, i.e. the owner of `self` is ≤ the owner of `other`
    /// in the Bruhat order.
    pub fn dominates(&self, other: &RankTable) -> bool {
        debug_assert_eq!(self.n, other.n);
        self.t.iter().zip(&other.t).all(|(a, b)| a >= b)
    }
}

pub fn factorial(n: usize) -> u64 {
    (1..=n as u64).product()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn compose_examples() {
        // inverse pair
        assert_eq!(p("231").compose(&p("312")).unwrap(), Permutation::identity(3));
        // identity is neutral
        assert_eq!(Permutation::identity(3).compose(&p("231")).unwrap(), p("231"));
        // T12 * T23 = R_{1,2,3} = (231)
        assert_eq!(p("213").compose(&p("132")).unwrap(), p("231"));
    }

    #[test]
    fn compose_size_mismatch() {
        assert!(matches!(
            p("21").compose(&p("231")),
            Err(Error::SizeMismatch { .. })
        ));
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(p("312").inverse(), p("231"));
        assert_eq!(Permutation::identity(4).inverse(), Permutation::identity(4));
        let w0 = Permutation::longest(5);
        assert_eq!(w0.inverse(), w0);
    }

    #[test]
    fn length_examples() {
        assert_eq!(Permutation::identity(4).length(), 0);
        assert_eq!(Permutation::longest(4).length(), 6);
        assert_eq!(p("231").length(), 2);
    }

    #[test]
    fn bruhat_examples() {
        assert!(p("213").bruhat_leq(&p("231")).unwrap());
        assert!(p("231").bruhat_leq(&p("321")).unwrap());
        assert!(!p("2341").bruhat_leq(&p("4312")).unwrap());
        assert!(matches!(
            p("21").bruhat_leq(&p("231")),
            Err(Error::SizeMismatch { .. })
        ));
    }

    #[test]
    fn max_function_examples() {
        assert_eq!(Permutation::identity(4).max_function().values(), vec![1, 2, 3, 4]);
        assert_eq!(Permutation::longest(4).max_function().values(), vec![4, 4, 4, 4]);
        assert_eq!(p("231").max_function().values(), vec![2, 3, 3]);
    }

    #[test]
    fn pattern_examples() {
        assert!(p("3412").contains_pattern(&p("3412")));
        assert!(!p("365214").contains_pattern(&p("4231")));
        assert!(p("45231").contains_pattern(&p("3412")));
        assert!(!p("123").contains_pattern(&p("21")));
        assert!(!p("21").contains_pattern(&p("231")));
    }

    #[test]
    fn indecomposable_examples() {
        assert!(p("2341").is_indecomposable());
        assert!(!p("213").is_indecomposable());
        assert!(Permutation::identity(1).is_indecomposable());
    }

    #[test]
    fn parse_and_display() {
        assert_eq!(p("2,3,1"), p("231"));
        assert_eq!(p("231").to_string(), "2,3,1");
        assert!("232".parse::<Permutation>().is_err());
        assert!("2,4,1".parse::<Permutation>().is_err());
        assert!("".parse::<Permutation>().is_err());
        assert_eq!(p("1").n(), 1);
    }

    #[test]
    fn all_perms_lexicographic() {
        let perms: Vec<Permutation> = Permutation::all(3).collect();
        assert_eq!(perms.len(), 6);
        assert_eq!(perms[0], p("123"));
        assert_eq!(perms[5], p("321"));
        let mut sorted = perms.clone();
        sorted.sort();
        assert_eq!(perms, sorted);
        assert_eq!(Permutation::all(1).count(), 1);
    }

    #[test]
    fn lex_rank_matches_iteration() {
        for (r, sigma) in Permutation::all(4).enumerate() {
            assert_eq!(Permutation::from_lex_rank(4, r as u64), sigma);
        }
    }

    #[test]
    fn upend_conjugates() {
        let sigma = p("231");
        let w0 = Permutation::longest(3);
        let expect = w0.compose(&sigma).unwrap().compose(&w0).unwrap();
        assert_eq!(sigma.upend(), expect);
    }

    #[test]
    fn rank_table_dominance_matches_bruhat() {
        let perms: Vec<Permutation> = Permutation::all(4).collect();
        let tables: Vec<RankTable> = perms.iter().map(|q| q.rank_table()).collect();
        for (a, ta) in perms.iter().zip(&tables) {
            for (b, tb) in perms.iter().zip(&tables) {
                assert_eq!(a.bruhat_leq(b).unwrap(), ta.dominates(tb));
            }
        }
    }
}
