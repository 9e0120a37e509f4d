//! Tables of a permutation: the set of transpositions below it, the set of
//! 2/3-cycles below it, and the set of general cycles below it, together
//! with the three classification predicates (smooth, covexillary, defined
//! by inclusions).

use std::collections::BTreeSet;
use std::fmt;

use serde_json::{json, Value};

use crate::cycles::{CycleElem, Direction, GeneralCycle};
use crate::error::{Error, Result};
use crate::perm::Permutation;

/// A set of 2/3-cycles for a fixed n, kept in canonical sorted order.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Table23 {
    n: usize,
    elems: BTreeSet<CycleElem>,
}

impl Table23 {
    pub fn new(n: usize, elems: BTreeSet<CycleElem>) -> Result<Self> {
        assert!(n >= 1);
        for e in &elems {
            if e.max_index() > n {
                return Err(Error::InvalidElem(format!("{e} out of range for n = {n}")));
            }
        }
        Ok(Table23 { n, elems })
    }

    pub fn empty(n: usize) -> Self {
        assert!(n >= 1);
        Table23 { n, elems: BTreeSet::new() }
    }

    /// The full set of 2/3-cycles of S_n.
    pub fn full(n: usize) -> Self {
        Table23 { n, elems: CycleElem::all(n).into_iter().collect() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    pub fn contains(&self, e: &CycleElem) -> bool {
        self.elems.contains(e)
    }

    pub fn contains_t(&self, i: usize, j: usize) -> bool {
        self.elems.contains(&CycleElem::t(i, j))
    }

    pub fn iter(&self) -> impl Iterator<Item = &CycleElem> {
        self.elems.iter()
    }

    pub fn elems(&self) -> &BTreeSet<CycleElem> {
        &self.elems
    }

    /// The transposition part, in canonical order.
    pub fn t_part(&self) -> Vec<CycleElem> {
        self.elems.iter().filter(|e| e.is_transposition()).copied().collect()
    }

    pub fn is_subset(&self, other: &Table23) -> bool {
        self.n == other.n && self.elems.is_subset(&other.elems)
    }

    /// Elementwise inverse.
    pub fn inverse(&self) -> Self {
        Table23 { n: self.n, elems: self.elems.iter().map(|e| e.inverse()).collect() }
    }

    /// Elementwise conjugation by w0.
    pub fn upend(&self) -> Self {
        Table23 { n: self.n, elems: self.elems.iter().map(|e| e.upend(self.n)).collect() }
    }

    /// Structured text form: header line `n=<n>`, then one element per line
    /// in canonical order.
    pub fn to_text(&self) -> String {
        let mut out = format!("n={}\n", self.n);
        for e in &self.elems {
            out.push_str(&e.to_string());
            out.push('\n');
        }
        out
    }

    pub fn from_text(text: &str) -> Result<Self> {
        let mut lines = text.lines().filter(|l| !l.trim().is_empty());
        let header = lines.next().ok_or_else(|| Error::Parse("missing n= header".into()))?;
        let n = parse_n_header(header)?;
        let mut elems = BTreeSet::new();
        for line in lines {
            elems.insert(line.trim().parse::<CycleElem>()?);
        }
        Table23::new(n, elems)
    }

    /// JSON form: `{"elems":[["T",1,2],["R",1,2,3]],"n":3}`.
    pub fn to_json(&self) -> String {
        let elems: Vec<Value> = self.elems.iter().map(elem_to_json).collect();
        json!({ "n": self.n, "elems": elems }).to_string()
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let v: Value =
            serde_json::from_str(text).map_err(|e| Error::Parse(format!("bad json: {e}")))?;
        let n = v["n"].as_u64().ok_or_else(|| Error::Parse("missing \"n\"".into()))? as usize;
        let arr =
            v["elems"].as_array().ok_or_else(|| Error::Parse("missing \"elems\"".into()))?;
        let mut elems = BTreeSet::new();
        for item in arr {
            elems.insert(elem_from_json(item)?);
        }
        Table23::new(n, elems)
    }
}

impl fmt::Debug for Table23 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Table23(n={}, {{", self.n)?;
        let mut first = true;
        for e in &self.elems {
            if !first {
                write!(f, ", ")?;
            }
            write!(f, "{e}")?;
            first = false;
        }
        write!(f, "}})")
    }
}

pub(crate) fn elem_to_json(e: &CycleElem) -> Value {
    match *e {
        CycleElem::T(i, j) => json!(["T", i, j]),
        CycleElem::R(i, j, k) => json!(["R", i, j, k]),
        CycleElem::L(i, j, k) => json!(["L", i, j, k]),
    }
}

pub(crate) fn elem_from_json(v: &Value) -> Result<CycleElem> {
    let arr = v.as_array().ok_or_else(|| Error::Parse(format!("bad element {v}")))?;
    let tag = arr.first().and_then(Value::as_str).unwrap_or_default();
    let nums: Option<Vec<usize>> =
        arr[1..].iter().map(|x| x.as_u64().map(|u| u as usize)).collect();
    match (tag, nums.as_deref()) {
        ("T", Some([i, j])) if 1 <= *i && i < j => Ok(CycleElem::t(*i, *j)),
        ("R", Some([i, j, k])) if 1 <= *i && i < j && j < k => Ok(CycleElem::r(*i, *j, *k)),
        ("L", Some([i, j, k])) if 1 <= *i && i < j && j < k => Ok(CycleElem::l(*i, *j, *k)),
        _ => Err(Error::Parse(format!("bad element {v}"))),
    }
}

pub(crate) fn parse_n_header(line: &str) -> Result<usize> {
    let rest = line
        .trim()
        .strip_prefix("n=")
        .ok_or_else(|| Error::Parse(format!("expected n=<n> header, got {line:?}")))?;
    let n: usize =
        rest.trim().parse().map_err(|_| Error::Parse(format!("bad n in header {line:?}")))?;
    if n == 0 {
        return Err(Error::Parse("n must be at least 1".into()));
    }
    Ok(n)
}

/// A set of general cycles for a fixed n, in canonical form.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CycleTable {
    n: usize,
    elems: BTreeSet<GeneralCycle>,
}

impl CycleTable {
    pub fn new(n: usize, elems: BTreeSet<GeneralCycle>) -> Self {
        assert!(elems.iter().all(|c| c.max_index() <= n));
        CycleTable { n, elems }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    pub fn contains(&self, c: &GeneralCycle) -> bool {
        self.elems.contains(c)
    }

    pub fn iter(&self) -> impl Iterator<Item = &GeneralCycle> {
        self.elems.iter()
    }

    pub fn is_subset(&self, other: &CycleTable) -> bool {
        self.n == other.n && self.elems.is_subset(&other.elems)
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("n={}\n", self.n);
        for c in &self.elems {
            out.push_str(&c.to_string());
            out.push('\n');
        }
        out
    }

    pub fn from_text(text: &str) -> Result<Self> {
        let mut lines = text.lines().filter(|l| !l.trim().is_empty());
        let header = lines.next().ok_or_else(|| Error::Parse("missing n= header".into()))?;
        let n = parse_n_header(header)?;
        let mut elems = BTreeSet::new();
        for line in lines {
            let cycle: GeneralCycle = line.trim().parse()?;
            if cycle.max_index() > n {
                return Err(Error::InvalidElem(format!("{cycle} out of range for n = {n}")));
            }
            elems.insert(cycle);
        }
        Ok(CycleTable { n, elems })
    }
}

/// The 2-table: transpositions below σ, computed from the maximal functions.
pub fn table_t(sigma: &Permutation) -> BTreeSet<CycleElem> {
    let n = sigma.n();
    let m = sigma.max_function();
    let mi = sigma.inverse().max_function();
    let mut out = BTreeSet::new();
    for i in 1..=n {
        let bound = m.get(i).min(mi.get(i));
        for j in i + 1..=bound {
            out.insert(CycleElem::t(i, j));
        }
    }
    out
}

/// The 2-3-table `C(σ)`: all 2/3-cycles below σ.
pub fn table_23(sigma: &Permutation) -> Table23 {
    let n = sigma.n();
    let m = sigma.max_function();
    let mi = sigma.inverse().max_function();
    let elems = CycleElem::all(n)
        .into_iter()
        .filter(|e| e.leq_perm_via_max(&m, &mi))
        .collect();
    Table23 { n, elems }
}

/// The cycle table `D(σ)` (all general cycles below σ), or only its special
/// part (interval cycles) when `special_only` is set.
pub fn table_d(sigma: &Permutation, special_only: bool) -> CycleTable {
    let n = sigma.n();
    let m = sigma.max_function();
    let mi = sigma.inverse().max_function();
    let candidates =
        if special_only { GeneralCycle::all_special(n) } else { GeneralCycle::all(n) };
    let elems = candidates.into_iter().filter(|c| c.leq_perm_via_max(&m, &mi)).collect();
    CycleTable { n, elems }
}

/// Smoothness: `ℓ(σ) = #C_T(σ)`, equivalently avoidance of 4231 and 3412.
/// Both definitions are evaluated for n ≤ 8 and must agree.
pub fn is_smooth(sigma: &Permutation) -> bool {
    let by_patterns = !sigma.contains_pattern(&pat_4231()) && !sigma.contains_pattern(&pat_3412());
    if sigma.n() <= 8 {
        let by_table = sigma.length() == table_t(sigma).len();
        assert_eq!(
            by_table, by_patterns,
            "smoothness definitions disagree on {sigma}; this is a bug"
        );
    }
    by_patterns
}

/// Covexillarity: avoidance of 3412.
pub fn is_covexillary(sigma: &Permutation) -> bool {
    !sigma.contains_pattern(&pat_3412())
}

/// Defined by inclusions: avoidance of 4231, 35142, 42513 and 351624.
pub fn is_defined_by_inclusions(sigma: &Permutation) -> bool {
    static PATTERNS: [&[usize]; 4] =
        [&[4, 2, 3, 1], &[3, 5, 1, 4, 2], &[4, 2, 5, 1, 3], &[3, 5, 1, 6, 2, 4]];
    PATTERNS.iter().all(|pat| {
        let pi = Permutation::from_one_line(pat).unwrap();
        !sigma.contains_pattern(&pi)
    })
}

/// Cross-check for `is_defined_by_inclusions` at small n: σ is defined by
/// inclusions iff for every τ, `τ ≤ σ ⟺ D_spcl(τ) ⊆ D_spcl(σ)`.
/// Exhaustive over S_n; intended for n ≤ 7.
pub fn is_defined_by_inclusions_via_tables(sigma: &Permutation) -> bool {
    let n = sigma.n();
    let d_sigma = table_d(sigma, true);
    for tau in Permutation::all(n) {
        let forward = tau.bruhat_leq(sigma).unwrap();
        let by_tables = table_d(&tau, true).is_subset(&d_sigma);
        if forward != by_tables {
            return false;
        }
    }
    true
}

fn pat_4231() -> Permutation {
    Permutation::from_one_line(&[4, 2, 3, 1]).unwrap()
}

fn pat_3412() -> Permutation {
    Permutation::from_one_line(&[3, 4, 1, 2]).unwrap()
}

/// Reconstructs `D(σ)` for covexillary σ from `C(σ)` alone, by the
/// recursion on support size:
/// `R_{i1..ir} ≤ σ` iff `R_{i1,i_{r-1},i_r} ≤ σ`, or `R_{i1,i2,i_r} ≤ σ`,
/// or (`T_{i1,i_{r-1}} ≰ σ`, `T_{i2,i_r} ≰ σ`, and both length-(r-1)
/// truncations are ≤ σ); mirror statement for L.
pub fn reconstruct_d_from_c(sigma: &Permutation) -> Result<CycleTable> {
    if !is_covexillary(sigma) {
        return Err(Error::NotCovexillary);
    }
    let n = sigma.n();
    let c = table_23(sigma);
    let mut included: BTreeSet<GeneralCycle> = BTreeSet::new();
    included.insert(GeneralCycle::new(Direction::Right, vec![1])?);

    // supports grouped by size, increasing
    let mut supports_by_size: Vec<Vec<Vec<usize>>> = vec![Vec::new(); n + 1];
    let mut stack: Vec<Vec<usize>> = vec![vec![]];
    for i in 1..=n {
        let mut next = Vec::with_capacity(stack.len() * 2);
        for s in stack {
            let mut with = s.clone();
            with.push(i);
            next.push(s);
            next.push(with);
        }
        stack = next;
    }
    for s in stack {
        if s.len() >= 2 {
            supports_by_size[s.len()].push(s);
        }
    }

    for size in 2..=n {
        for s in &supports_by_size[size] {
            for dir in [Direction::Right, Direction::Left] {
                if size == 2 && dir == Direction::Left {
                    continue;
                }
                let present = if size == 2 {
                    c.contains(&CycleElem::t(s[0], s[1]))
                } else if size == 3 {
                    let e = match dir {
                        Direction::Right => CycleElem::r(s[0], s[1], s[2]),
                        Direction::Left => CycleElem::l(s[0], s[1], s[2]),
                    };
                    c.contains(&e)
                } else {
                    let (i1, i2) = (s[0], s[1]);
                    let (ir1, ir) = (s[size - 2], s[size - 1]);
                    let three = |a, b, cc| match dir {
                        Direction::Right => CycleElem::r(a, b, cc),
                        Direction::Left => CycleElem::l(a, b, cc),
                    };
                    if c.contains(&three(i1, ir1, ir)) || c.contains(&three(i1, i2, ir)) {
                        true
                    } else if !c.contains_t(i1, ir1) && !c.contains_t(i2, ir) {
                        let drop_last =
                            GeneralCycle::new(dir, s[..size - 1].to_vec())?;
                        let drop_first = GeneralCycle::new(dir, s[1..].to_vec())?;
                        included.contains(&drop_last) && included.contains(&drop_first)
                    } else {
                        false
                    }
                };
                if present {
                    included.insert(GeneralCycle::new(dir, s.clone())?);
                }
            }
        }
    }
    Ok(CycleTable { n, elems: included })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn set(elems: &[&str]) -> BTreeSet<CycleElem> {
        elems.iter().map(|s| s.parse().unwrap()).collect()
    }

    #[test]
    fn table_t_examples() {
        assert_eq!(table_t(&p("231")), set(&["T(1,2)", "T(2,3)"]));
        assert_eq!(table_t(&p("312")), set(&["T(1,2)", "T(2,3)"]));
        assert!(table_t(&Permutation::identity(4)).is_empty());
    }

    #[test]
    fn table_23_examples() {
        let full4 = Table23::full(4);
        let missing = set(&["T(1,4)", "R(1,2,4)", "L(1,2,4)", "R(1,3,4)", "L(1,3,4)"]);
        let expect: BTreeSet<CycleElem> =
            full4.elems().difference(&missing).copied().collect();
        assert_eq!(*table_23(&p("3412")).elems(), expect);

        let full5 = Table23::full(5);
        let missing5 = set(&["T(1,5)", "L(1,2,5)", "L(1,3,5)", "L(1,4,5)"]);
        let expect5: BTreeSet<CycleElem> =
            full5.elems().difference(&missing5).copied().collect();
        assert_eq!(*table_23(&p("45231")).elems(), expect5);

        assert!(table_23(&Permutation::identity(3)).is_empty());
    }

    #[test]
    fn table_23_matches_brute_force() {
        for n in 1..=5 {
            for sigma in Permutation::all(n) {
                let fast = table_23(&sigma);
                let brute: BTreeSet<CycleElem> = CycleElem::all(n)
                    .into_iter()
                    .filter(|e| e.to_perm(n).bruhat_leq(&sigma).unwrap())
                    .collect();
                assert_eq!(*fast.elems(), brute, "n={n} sigma={sigma}");
            }
        }
    }

    #[test]
    fn table_d_examples() {
        assert!(table_d(&Permutation::identity(3), true).is_empty());
        // D(w0) in S_3 is all of C_3, 6 elements including the identity
        assert_eq!(table_d(&Permutation::longest(3), false).len(), 6);
        // (231) special cycles, canonical form
        let d = table_d(&p("231"), true);
        let expect: BTreeSet<GeneralCycle> =
            ["R[1,2]", "R[2,3]", "R[1,3]"].iter().map(|s| s.parse().unwrap()).collect();
        assert_eq!(d.elems, expect);
    }

    #[test]
    fn table_d_matches_brute_force() {
        for n in 1..=5 {
            for sigma in Permutation::all(n) {
                let fast = table_d(&sigma, false);
                let brute: BTreeSet<GeneralCycle> = GeneralCycle::all(n)
                    .into_iter()
                    .filter(|c| c.to_perm(n).bruhat_leq(&sigma).unwrap())
                    .collect();
                assert_eq!(fast.elems, brute, "n={n} sigma={sigma}");
            }
        }
    }

    #[test]
    fn smoothness_examples() {
        assert!(is_smooth(&p("231")));
        assert!(!is_smooth(&p("3412")));
        assert!(is_smooth(&p("365214")));
    }

    #[test]
    fn covexillary_examples() {
        assert!(!is_covexillary(&p("3412")));
        assert!(!is_covexillary(&p("45231")));
        assert!(is_covexillary(&p("4231")));
    }

    #[test]
    fn dbi_examples() {
        assert!(!is_defined_by_inclusions(&p("4231")));
        assert!(is_defined_by_inclusions(&p("3412")));
        assert!(is_defined_by_inclusions(&Permutation::identity(4)));
    }

    #[test]
    fn dbi_cross_check() {
        for n in 1..=5 {
            for sigma in Permutation::all(n) {
                assert_eq!(
                    is_defined_by_inclusions(&sigma),
                    is_defined_by_inclusions_via_tables(&sigma),
                    "n={n} sigma={sigma}"
                );
            }
        }
    }

    #[test]
    fn reconstruct_examples() {
        assert_eq!(
            reconstruct_d_from_c(&Permutation::identity(3)).unwrap().elems,
            table_d(&Permutation::identity(3), false).elems
        );
        assert_eq!(reconstruct_d_from_c(&p("231")).unwrap(), table_d(&p("231"), false));
        let w0 = Permutation::longest(4);
        assert_eq!(reconstruct_d_from_c(&w0).unwrap(), table_d(&w0, false));
        assert_eq!(reconstruct_d_from_c(&p("3412")), Err(Error::NotCovexillary));
    }

    #[test]
    fn reconstruct_matches_direct_up_to_5() {
        for n in 1..=5 {
            for sigma in Permutation::all(n) {
                if is_covexillary(&sigma) {
                    assert_eq!(
                        reconstruct_d_from_c(&sigma).unwrap(),
                        table_d(&sigma, false),
                        "n={n} sigma={sigma}"
                    );
                }
            }
        }
    }

    #[test]
    fn cycle_table_text_roundtrip() {
        let d = table_d(&p("45231"), false);
        assert_eq!(CycleTable::from_text(&d.to_text()).unwrap(), d);
        assert_eq!(CycleTable::from_text(&d.to_text()).unwrap().to_text(), d.to_text());
    }

    #[test]
    fn serialization_roundtrips() {
        let t = table_23(&p("45231"));
        assert_eq!(Table23::from_text(&t.to_text()).unwrap(), t);
        assert_eq!(Table23::from_json(&t.to_json()).unwrap(), t);
        let empty = Table23::empty(3);
        assert_eq!(Table23::from_text(&empty.to_text()).unwrap(), empty);
        // byte-exact determinism
        assert_eq!(t.to_text(), Table23::from_text(&t.to_text()).unwrap().to_text());
        assert_eq!(t.to_json(), Table23::from_json(&t.to_json()).unwrap().to_json());
    }
}
