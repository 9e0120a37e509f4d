//! Essential and coessential sets: grid subsets of `[n-1]²` that determine
//! Bruhat comparison from below, the class of grids attached to smooth
//! permutations, and the maps tying grids to decorated paths and admissible
//! sets.

use std::collections::BTreeSet;
use std::fmt;

use itertools::Itertools;
use serde_json::{json, Value};

use crate::admissible::AdmissibleSet;
use crate::cycles::CycleElem;
use crate::dyck::DecoratedPath;
use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::tables::parse_n_header;

/// A set of grid points `(i,j) ∈ [n-1]²`. The ambient n is carried
/// explicitly since the point set does not determine it.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GridSet {
    n: usize,
    points: BTreeSet<(usize, usize)>,
}

impl GridSet {
    pub fn new(n: usize, points: BTreeSet<(usize, usize)>) -> Result<Self> {
        assert!(n >= 1);
        for &(i, j) in &points {
            if i < 1 || j < 1 || i >= n || j >= n {
                return Err(Error::Parse(format!("point ({i},{j}) outside [n-1]^2 for n={n}")));
            }
        }
        Ok(GridSet { n, points })
    }

    pub fn empty(n: usize) -> Self {
        assert!(n >= 1);
        GridSet { n, points: BTreeSet::new() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn contains(&self, i: usize, j: usize) -> bool {
        self.points.contains(&(i, j))
    }

    pub fn points(&self) -> &BTreeSet<(usize, usize)> {
        &self.points
    }

    pub fn iter(&self) -> impl Iterator<Item = &(usize, usize)> {
        self.points.iter()
    }

    /// Membership in the grid class of smooth permutations: any two distinct
    /// points p, q with `min(q) ≥ min(p)` must satisfy `i_q ≥ i_p`,
    /// `j_q ≥ j_p`, `max(q) > max(p)` and `min(q) > min(p)`.
    pub fn in_grid_class(&self) -> bool {
        for &(i1, j1) in &self.points {
            for &(i2, j2) in &self.points {
                if (i1, j1) == (i2, j2) {
                    continue;
                }
                if i2.min(j2) >= i1.min(j1)
                    && !(i2 >= i1
                        && j2 >= j1
                        && i2.max(j2) > i1.max(j1)
                        && i2.min(j2) > i1.min(j1))
                {
                    return false;
                }
            }
        }
        true
    }

    /// Text form: header `n=<n>`, then one `i,j` line per point, sorted.
    pub fn to_text(&self) -> String {
        let mut out = format!("n={}\n", self.n);
        for &(i, j) in &self.points {
            out.push_str(&format!("{i},{j}\n"));
        }
        out
    }

    pub fn from_text(text: &str) -> Result<Self> {
        let mut lines = text.lines().filter(|l| !l.trim().is_empty());
        let header = lines.next().ok_or_else(|| Error::Parse("missing n= header".into()))?;
        let n = parse_n_header(header)?;
        let mut points = BTreeSet::new();
        for line in lines {
            let parts: Vec<&str> = line.trim().split(',').collect();
            let [i, j] = parts.as_slice() else {
                return Err(Error::Parse(format!("bad grid point {line:?}")));
            };
            let i: usize =
                i.trim().parse().map_err(|_| Error::Parse(format!("bad point {line:?}")))?;
            let j: usize =
                j.trim().parse().map_err(|_| Error::Parse(format!("bad point {line:?}")))?;
            points.insert((i, j));
        }
        GridSet::new(n, points)
    }

    pub fn to_json(&self) -> String {
        let pts: Vec<Value> = self.points.iter().map(|&(i, j)| json!([i, j])).collect();
        json!({ "n": self.n, "points": pts }).to_string()
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let v: Value =
            serde_json::from_str(text).map_err(|e| Error::Parse(format!("bad json: {e}")))?;
        let n = v["n"].as_u64().ok_or_else(|| Error::Parse("missing \"n\"".into()))? as usize;
        let arr =
            v["points"].as_array().ok_or_else(|| Error::Parse("missing \"points\"".into()))?;
        let mut points = BTreeSet::new();
        for item in arr {
            let pair: Option<Vec<usize>> = item
                .as_array()
                .map(|a| a.iter().map(|x| x.as_u64().map(|u| u as usize)).collect())
                .unwrap_or(None);
            match pair.as_deref() {
                Some([i, j]) => {
                    points.insert((*i, *j));
                }
                _ => return Err(Error::Parse(format!("bad grid point {item}"))),
            }
        }
        GridSet::new(n, points)
    }
}

impl fmt::Display for GridSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.points.is_empty() {
            return write!(f, "(empty)");
        }
        let strs: Vec<String> = self.points.iter().map(|&(i, j)| format!("{i},{j}")).collect();
        write!(f, "{}", strs.join(" "))
    }
}

impl fmt::Debug for GridSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GridSet(n={}, {{{}}})", self.n, self)
    }
}

/// The essential set: points `(i,j)` with `σ(i) ≤ j < σ(i+1)` and
/// `σ⁻¹(j) ≤ i < σ⁻¹(j+1)`.
pub fn essential_set(sigma: &Permutation) -> GridSet {
    let n = sigma.n();
    let inv = sigma.inverse();
    let mut points = BTreeSet::new();
    for i in 1..n {
        if sigma.apply(i) >= sigma.apply(i + 1) {
            continue;
        }
        for j in sigma.apply(i)..sigma.apply(i + 1) {
            if j >= n {
                break;
            }
            if inv.apply(j) <= i && i < inv.apply(j + 1) {
                points.insert((i, j));
            }
        }
    }
    GridSet { n, points }
}

/// The coessential core: essential points with `σ([i]) ⊆ [j]` or
/// `σ⁻¹([j]) ⊆ [i]`. Equals the essential set exactly when σ is defined by
/// inclusions, in particular for smooth σ.
pub fn coessential_core(sigma: &Permutation) -> GridSet {
    let n = sigma.n();
    let m = sigma.max_function();
    let mi = sigma.inverse().max_function();
    let points = essential_set(sigma)
        .points
        .into_iter()
        .filter(|&(i, j)| m.get(i) <= j || mi.get(j) <= i)
        .collect();
    GridSet { n, points }
}

/// The grid of a decorated path: for every ascent `f(i+1) > f(i)` with
/// `i ∈ [n-1]`, the point `(i, f(i))` when `g(i) = 1` and `(f(i), i)` when
/// `g(i) = 0`.
pub fn grid_from_path(path: &DecoratedPath) -> GridSet {
    let n = path.n();
    let mut points = BTreeSet::new();
    for i in 1..n {
        if path.f(i + 1) > path.f(i) {
            if path.g(i) {
                points.insert((i, path.f(i)));
            } else {
                points.insert((path.f(i), i));
            }
        }
    }
    debug_assert!(points.iter().all(|&(i, j)| i < n && j < n));
    GridSet { n, points }
}

/// Inverse of `grid_from_path` on the grid class:
/// `f(k) = min({n} ∪ {max(i,j) : (i,j) ∈ E ∩ [k,n)²})` and `g(i) = 1` iff
/// `(j, f(j)) ∈ E ∩ Δ` for `j = max f⁻¹(f(i))`, where
/// `Δ = {(i,j) : 1 ≤ i < j < n}`.
pub fn path_from_grid(grid: &GridSet) -> Result<DecoratedPath> {
    if !grid.in_grid_class() {
        return Err(Error::NotInGridClass);
    }
    let n = grid.n;
    let mut f = Vec::with_capacity(n);
    for k in 1..=n {
        let fk = grid
            .points
            .iter()
            .filter(|&&(i, j)| i >= k && j >= k)
            .map(|&(i, j)| i.max(j))
            .chain(std::iter::once(n))
            .min()
            .unwrap();
        f.push(fk);
    }
    let fv = |i: usize| f[i - 1];
    // Δ membership needs explicit boundary tests: strictly above the
    // diagonal and strictly left of column n.
    let in_delta = |i: usize, j: usize| 1 <= i && i < j && j < n;
    let mut g = Vec::with_capacity(n);
    for i in 1..=n {
        let j = (i..=n).take_while(|&r| fv(r) == fv(i)).last().unwrap();
        g.push(grid.contains(j, fv(j)) && in_delta(j, fv(j)));
    }
    DecoratedPath::new(f, g)
}

/// The admissible set encoded by a grid in the grid class: `T(i,j)` when
/// `E ∩ [i,j)² = ∅`; `R(i,j,k)` when additionally `E ∩ ([j,k) × [i,k)) = ∅`;
/// `L(i,j,k)` when `E ∩ ([i,j) × [i,k)) = ∅` and `E ∩ [j,k)² = ∅`.
pub fn admissible_from_grid(grid: &GridSet) -> Result<AdmissibleSet> {
    if !grid.in_grid_class() {
        return Err(Error::NotInGridClass);
    }
    let n = grid.n;
    let meets = |rows: std::ops::Range<usize>, cols: std::ops::Range<usize>| {
        grid.points
            .iter()
            .any(|&(i, j)| rows.contains(&i) && cols.contains(&j))
    };
    let mut elems = BTreeSet::new();
    for i in 1..=n {
        for j in i + 1..=n {
            if !meets(i..j, i..j) {
                elems.insert(CycleElem::t(i, j));
            }
            for k in j + 1..=n {
                if !meets(i..j, i..j) && !meets(j..k, i..k) {
                    elems.insert(CycleElem::r(i, j, k));
                }
                if !meets(i..j, i..k) && !meets(j..k, j..k) {
                    elems.insert(CycleElem::l(i, j, k));
                }
            }
        }
    }
    AdmissibleSet::from_elems(n, elems)
}

/// Bruhat comparison restricted to the essential set of σ:
/// `τ ≤ σ` iff `#(τ([i]) ∩ [j]) ≥ #(σ([i]) ∩ [j])` for all
/// `(i,j) ∈ E(σ)`.
pub fn bruhat_leq_via_essential(tau: &Permutation, sigma: &Permutation) -> Result<bool> {
    if tau.n() != sigma.n() {
        return Err(Error::SizeMismatch { expected: sigma.n(), got: tau.n() });
    }
    let rt = tau.rank_table();
    let rs = sigma.rank_table();
    Ok(essential_set(sigma)
        .points
        .iter()
        .all(|&(i, j)| rt.get(i, j) >= rs.get(i, j)))
}

/// All members of the grid class for n. Any member has at most n-1 points
/// (their coordinate minima are pairwise distinct), so only subsets up to
/// that size are scanned.
pub fn enumerate_grid_class(n: usize) -> Vec<GridSet> {
    let cells: Vec<(usize, usize)> =
        (1..n).flat_map(|i| (1..n).map(move |j| (i, j))).collect();
    let mut out = Vec::new();
    for size in 0..n.max(1) {
        for combo in cells.iter().combinations(size) {
            let grid = GridSet {
                n,
                points: combo.into_iter().copied().collect(),
            };
            if grid.in_grid_class() {
                out.push(grid);
            }
        }
    }
    out.sort();
    out
}
