//! Decorated Dyck paths and their bijections with admissible sets and
//! smooth permutations, including the reduced-word factorization through
//! interval cycles.
//!
//! A path is a weakly increasing `f : [n] → [n]` with `f(i) ≥ i`; a
//! decoration is a `{0,1}`-coloring `g` with `g(i) = 0` whenever
//! `f(f(i)) = f(i)` and `g(i) = g(i+1)` whenever `i < n` and
//! `f(i+1) < f(f(i))`.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::admissible::AdmissibleSet;
use crate::cycles::CycleElem;
use crate::error::{Error, Result};
use crate::perm::Permutation;

/// A Dyck path with decoration.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DecoratedPath {
    f: Vec<usize>,
    g: Vec<bool>,
}

/// Validity of the path part alone.
pub fn is_valid_path(f: &[usize]) -> bool {
    let n = f.len();
    n >= 1
        && f.iter().enumerate().all(|(i, &v)| v > i && v <= n)
        && f.windows(2).all(|w| w[0] <= w[1])
}

/// Validity of a decoration for a given valid path.
pub fn is_valid_decoration(f: &[usize], g: &[bool]) -> bool {
    let n = f.len();
    if g.len() != n || !is_valid_path(f) {
        return false;
    }
    let fv = |i: usize| f[i - 1];
    for i in 1..=n {
        if fv(fv(i)) == fv(i) && g[i - 1] {
            return false;
        }
        if i < n && fv(i + 1) < fv(fv(i)) && g[i - 1] != g[i] {
            return false;
        }
    }
    true
}

impl DecoratedPath {
    pub fn new(f: Vec<usize>, g: Vec<bool>) -> Result<Self> {
        if !is_valid_path(&f) {
            return Err(Error::InvalidPath(format!("{f:?} is not a valid path")));
        }
        if !is_valid_decoration(&f, &g) {
            return Err(Error::InvalidDecoration(format!(
                "{:?} is not a valid decoration of {f:?}",
                g.iter().map(|&b| b as u8).collect::<Vec<_>>()
            )));
        }
        Ok(DecoratedPath { f, g })
    }

    /// Path with the all-zero decoration (always valid).
    pub fn undecorated(f: Vec<usize>) -> Result<Self> {
        let n = f.len();
        DecoratedPath::new(f, vec![false; n])
    }

    pub fn identity(n: usize) -> Self {
        DecoratedPath { f: (1..=n).collect(), g: vec![false; n] }
    }

    pub fn n(&self) -> usize {
        self.f.len()
    }

    /// f(i), 1-based.
    pub fn f(&self, i: usize) -> usize {
        self.f[i - 1]
    }

    /// g(i), 1-based.
    pub fn g(&self, i: usize) -> bool {
        self.g[i - 1]
    }

    pub fn f_vec(&self) -> &[usize] {
        &self.f
    }

    pub fn g_vec(&self) -> &[bool] {
        &self.g
    }

    /// `ℓ(f) = Σ (f(i) - i)`; equals the length of the permutation the path
    /// encodes.
    pub fn path_length(&self) -> usize {
        self.f.iter().enumerate().map(|(i, &v)| v - (i + 1)).sum()
    }

    /// The path of an admissible set: `f(i) = max({i} ∪ {j : T(i,j) ∈ A})`
    /// and `g(i) = 1` iff `i < f(i) < n` and `R(i, f(i), f(i)+1) ∈ A`.
    pub fn from_admissible(a: &AdmissibleSet) -> Self {
        let n = a.n();
        let mut f: Vec<usize> = (1..=n).collect();
        for (i, j) in a.t_pairs() {
            f[i - 1] = f[i - 1].max(j);
        }
        let mut g = vec![false; n];
        for i in 1..=n {
            let fi = f[i - 1];
            if i < fi && fi < n && a.contains(&CycleElem::r(i, fi, fi + 1)) {
                g[i - 1] = true;
            }
        }
        let path = DecoratedPath { f, g };
        debug_assert!(is_valid_decoration(&path.f, &path.g));
        path
    }

    /// The admissible set of a decorated path: transpositions from the
    /// region below the path, and for each chain `(i,j), (j,k)` the 3-cycle
    /// `R(i,j,k)` iff `(i,k)` is below the path or `g(i) = 1`, and
    /// `L(i,j,k)` iff `(i,k)` is below the path or `g(i) = 0`.
    pub fn to_admissible(&self) -> AdmissibleSet {
        let n = self.n();
        let in_lambda = |i: usize, j: usize| i < j && j <= self.f(i);
        let mut elems: BTreeSet<CycleElem> = BTreeSet::new();
        for i in 1..=n {
            for j in i + 1..=self.f(i) {
                elems.insert(CycleElem::t(i, j));
                for k in j + 1..=self.f(j) {
                    if in_lambda(i, k) || self.g(i) {
                        elems.insert(CycleElem::r(i, j, k));
                    }
                    if in_lambda(i, k) || !self.g(i) {
                        elems.insert(CycleElem::l(i, j, k));
                    }
                }
            }
        }
        AdmissibleSet::from_elems(n, elems).expect("path encodes an admissible set")
    }

    /// The smooth permutation of the path together with a reduced word in
    /// adjacent transpositions (entry `a` denotes `T(a,a+1)`).
    ///
    /// The permutation is the product
    /// `L[j1,f(j1)] ⋯ L[jl,f(jl)] · R[ik,f(ik)] ⋯ R[i1,f(i1)]`
    /// where `g⁻¹(0) = {i1 < ⋯ < ik}` and `g⁻¹(1) = {j1 < ⋯ < jl}`; each
    /// interval cycle expands to its adjacent-transposition word.
    pub fn sigma(&self) -> (Permutation, Vec<usize>) {
        let n = self.n();
        let mut word: Vec<usize> = Vec::with_capacity(self.path_length());
        // L factors: increasing over g = 1; L[i,j] = s_{j-1} … s_i
        for i in 1..=n {
            if self.g(i) {
                word.extend((i..self.f(i)).rev());
            }
        }
        // R factors: decreasing over g = 0; R[i,j] = s_i … s_{j-1}
        for i in (1..=n).rev() {
            if !self.g(i) {
                word.extend(i..self.f(i));
            }
        }
        let mut sigma = Permutation::identity(n);
        for &a in &word {
            sigma = sigma
                .compose(&CycleElem::t(a, a + 1).to_perm(n))
                .expect("sizes match");
        }
        (sigma, word)
    }

    /// The inverse decoration: `σ(f, g)⁻¹ = σ(f, g̃)` where `g̃(i) = 0` if
    /// `f(f(i)) = f(i)` and `1 - g(i)` otherwise.
    pub fn inverse_decoration(&self) -> Self {
        let n = self.n();
        let g = (1..=n)
            .map(|i| self.f(self.f(i)) != self.f(i) && !self.g(i))
            .collect();
        let path = DecoratedPath { f: self.f.clone(), g };
        debug_assert!(is_valid_decoration(&path.f, &path.g));
        path
    }

    /// Classification flags read off the path alone.
    pub fn classify(&self) -> PathClass {
        let n = self.n();
        PathClass {
            avoids_231: self.g.iter().all(|&b| !b),
            avoids_321: (1..n).all(|i| self.f(i) <= i + 1),
            indecomposable: (1..n).all(|i| self.f(i) > i),
        }
    }

    /// Induced Bruhat comparison on paths (experimental hook; nothing is
    /// asserted about the structure of this order).
    pub fn induced_leq(&self, other: &DecoratedPath) -> Result<bool> {
        self.sigma().0.bruhat_leq(&other.sigma().0)
    }
}

impl fmt::Display for DecoratedPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let fs: Vec<String> = self.f.iter().map(|v| v.to_string()).collect();
        let gs: Vec<String> = self.g.iter().map(|&b| (b as u8).to_string()).collect();
        write!(f, "f={}; g={}", fs.join(","), gs.join(","))
    }
}

impl fmt::Debug for DecoratedPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for DecoratedPath {
    type Err = Error;

    /// Parses `"f=2,3,3; g=1,0,0"`; the `g` part may be omitted and then
    /// defaults to the all-zero decoration.
    fn from_str(s: &str) -> Result<Self> {
        let mut f: Option<Vec<usize>> = None;
        let mut g: Option<Vec<bool>> = None;
        for part in s.split(';') {
            let part = part.trim();
            if part.is_empty() {
                continue;
            }
            if let Some(rest) = part.strip_prefix("f=") {
                let vals = parse_usize_list(rest)?;
                f = Some(vals);
            } else if let Some(rest) = part.strip_prefix("g=") {
                let vals = parse_usize_list(rest)?;
                let bits = vals
                    .iter()
                    .map(|&v| match v {
                        0 => Ok(false),
                        1 => Ok(true),
                        _ => Err(Error::Parse(format!("decoration entry {v} not in {{0,1}}"))),
                    })
                    .collect::<Result<Vec<bool>>>()?;
                g = Some(bits);
            } else {
                return Err(Error::Parse(format!("unexpected path component {part:?}")));
            }
        }
        let f = f.ok_or_else(|| Error::Parse("missing f= component".into()))?;
        let g = g.unwrap_or_else(|| vec![false; f.len()]);
        DecoratedPath::new(f, g)
    }
}

fn parse_usize_list(s: &str) -> Result<Vec<usize>> {
    s.split(',')
        .map(|p| {
            p.trim()
                .parse::<usize>()
                .map_err(|_| Error::Parse(format!("bad integer {p:?}")))
        })
        .collect()
}

/// Flags of the classification read off (f, g).
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct PathClass {
    pub avoids_231: bool,
    pub avoids_321: bool,
    pub indecomposable: bool,
}

/// Number of decorations of a path: `2^#{i ∈ [n-1] : f(i) < f(f(i)) = f(i+1)}`.
pub fn count_decorations(f: &[usize]) -> u64 {
    assert!(is_valid_path(f));
    let n = f.len();
    let fv = |i: usize| f[i - 1];
    let exponent = (1..n).filter(|&i| fv(i) < fv(fv(i)) && fv(fv(i)) == fv(i + 1)).count();
    1u64 << exponent
}

/// All valid path functions for n, in colexicographic order (the sequence
/// is advanced like a counter with f(1) least significant).
pub fn all_f_vectors(n: usize) -> AllFVectors {
    assert!(n >= 1);
    AllFVectors { next: Some((1..=n).collect()) }
}

pub struct AllFVectors {
    next: Option<Vec<usize>>,
}

impl Iterator for AllFVectors {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let current = self.next.take()?;
        let n = current.len();
        let mut succ = current.clone();
        let mut advanced = false;
        for i in 0..n {
            let cap = if i + 1 < n { succ[i + 1] } else { n };
            if succ[i] < cap {
                succ[i] += 1;
                for (r, slot) in succ.iter_mut().enumerate().take(i) {
                    *slot = r + 1;
                }
                advanced = true;
                break;
            }
        }
        if advanced {
            self.next = Some(succ);
        }
        Some(current)
    }
}

/// All decorations of a path, in binary-counter order over the free
/// positions (forced and copied entries filled in by the decoration rules).
pub fn decorations_of(f: &[usize]) -> Vec<Vec<bool>> {
    assert!(is_valid_path(f));
    let n = f.len();
    let fv = |i: usize| f[i - 1];

    #[derive(Clone, Copy)]
    enum Slot {
        Zero,
        CopyNext,
        Free(usize),
    }
    let mut slots = vec![Slot::Zero; n];
    let mut free_count = 0;
    for i in 1..=n {
        slots[i - 1] = if fv(fv(i)) == fv(i) {
            Slot::Zero
        } else if i < n && fv(i + 1) < fv(fv(i)) {
            Slot::CopyNext
        } else {
            let s = Slot::Free(free_count);
            free_count += 1;
            s
        };
    }
    let mut out = Vec::with_capacity(1 << free_count);
    for mask in 0u64..(1u64 << free_count) {
        let mut g = vec![false; n];
        for i in (1..=n).rev() {
            g[i - 1] = match slots[i - 1] {
                Slot::Zero => false,
                Slot::CopyNext => g[i],
                Slot::Free(b) => mask >> b & 1 == 1,
            };
        }
        debug_assert!(is_valid_decoration(f, &g));
        out.push(g);
    }
    out
}

/// All decorated paths for n: paths in colex order, decorations in counter
/// order.
pub fn all_decorated_paths(n: usize) -> Vec<DecoratedPath> {
    let mut out = Vec::new();
    for f in all_f_vectors(n) {
        for g in decorations_of(&f) {
            out.push(DecoratedPath { f: f.clone(), g });
        }
    }
    out
}
