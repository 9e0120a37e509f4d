//! Admissible sets of 2/3-cycles, wedges and derived sets, compatible
//! orders with their elementary-move graph, and the reconstruction map π
//! sending an admissible set to the smooth permutation it characterizes.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use crate::cycles::CycleElem;
use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::tables::{table_23, Table23};

/// A downward-closed subset A of the 2/3-cycles such that
/// `R(i,j,l), L(i,k,l) ∈ A` forces `T(i,l) ∈ A`, and
/// `T(i,j), T(j,k) ∈ A` forces `R(i,j,k) ∈ A` or `L(i,j,k) ∈ A`.
///
/// These are exactly the 2-3-tables of smooth permutations.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AdmissibleSet {
    inner: Table23,
}

/// Which of A or A⁻¹ carries the wedge.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Side {
    Direct,
    Inverse,
}

/// A wedge `T(i,j)` for an admissible set: `T(i-1,i) ∉ A` (or i = 1) and
/// `R(i,j,j+1) ∉ A` (or j = n).
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Wedge {
    pub side: Side,
    pub i: usize,
    pub j: usize,
}

/// Dense membership view used by the admissibility check and the
/// enumeration; all lookups are O(1).
struct Dense {
    n: usize,
    t: Vec<bool>,
    r: Vec<bool>,
    l: Vec<bool>,
}

impl Dense {
    fn new(table: &Table23) -> Self {
        let n = table.n();
        let mut d = Dense {
            n,
            t: vec![false; n * n],
            r: vec![false; n * n * n],
            l: vec![false; n * n * n],
        };
        for e in table.iter() {
            d.insert(e);
        }
        d
    }

    fn insert(&mut self, e: &CycleElem) {
        let n = self.n;
        match *e {
            CycleElem::T(i, j) => self.t[(i - 1) * n + (j - 1)] = true,
            CycleElem::R(i, j, k) => self.r[((i - 1) * n + (j - 1)) * n + (k - 1)] = true,
            CycleElem::L(i, j, k) => self.l[((i - 1) * n + (j - 1)) * n + (k - 1)] = true,
        }
    }

    fn t(&self, i: usize, j: usize) -> bool {
        self.t[(i - 1) * self.n + (j - 1)]
    }

    fn r(&self, i: usize, j: usize, k: usize) -> bool {
        self.r[((i - 1) * self.n + (j - 1)) * self.n + (k - 1)]
    }

    fn l(&self, i: usize, j: usize, k: usize) -> bool {
        self.l[((i - 1) * self.n + (j - 1)) * self.n + (k - 1)]
    }
}

/// Checks the three admissibility conditions. Downward closure is tested
/// through local closure rules read off the comparison table for 2/3-cycles
/// (O(#A·n) lookups), not by generic poset search.
pub fn check_admissible(table: &Table23) -> Result<()> {
    let d = Dense::new(table);
    let n = table.n();
    let fail = |msg: String| Err(Error::NotAdmissible(msg));

    // downward closure
    for e in table.iter() {
        match *e {
            CycleElem::T(i, j) => {
                if j - i >= 2 {
                    if !d.t(i + 1, j) || !d.t(i, j - 1) {
                        return fail(format!("not downward closed below {e}"));
                    }
                    for y in i + 1..j {
                        if !d.r(i, y, j) || !d.l(i, y, j) {
                            return fail(format!("not downward closed below {e}"));
                        }
                    }
                }
            }
            CycleElem::R(i, j, k) => {
                if !d.t(i, j)
                    || !d.t(j, k)
                    || (i + 1 < j && !d.r(i + 1, j, k))
                    || (j < k - 1 && !d.r(i, j, k - 1))
                {
                    return fail(format!("not downward closed below {e}"));
                }
            }
            CycleElem::L(i, j, k) => {
                if !d.t(i, j)
                    || !d.t(j, k)
                    || (i + 1 < j && !d.l(i + 1, j, k))
                    || (j < k - 1 && !d.l(i, j, k - 1))
                {
                    return fail(format!("not downward closed below {e}"));
                }
            }
        }
    }

    // R(i,j,l), L(i,k,l) present forces T(i,l)
    for i in 1..=n {
        for l in i + 2..=n {
            if d.t(i, l) {
                continue;
            }
            let has_r = (i + 1..l).any(|j| d.r(i, j, l));
            let has_l = (i + 1..l).any(|k| d.l(i, k, l));
            if has_r && has_l {
                return fail(format!("R(i,·,l) and L(i,·,l) present but T({i},{l}) missing"));
            }
        }
    }

    // T(i,j), T(j,k) present forces R(i,j,k) or L(i,j,k)
    for i in 1..=n {
        for j in i + 1..=n {
            if !d.t(i, j) {
                continue;
            }
            for k in j + 1..=n {
                if d.t(j, k) && !d.r(i, j, k) && !d.l(i, j, k) {
                    return fail(format!(
                        "T({i},{j}), T({j},{k}) present but neither 3-cycle on ({i},{j},{k})"
                    ));
                }
            }
        }
    }
    Ok(())
}

pub fn is_admissible(table: &Table23) -> bool {
    check_admissible(table).is_ok()
}

/// Reference implementation of the admissibility check: downward closure by
/// pairwise comparisons over the whole 2/3-cycle set. Quadratic; used to
/// validate `check_admissible`.
pub fn is_admissible_naive(table: &Table23) -> bool {
    let n = table.n();
    let all = CycleElem::all(n);
    for x in table.iter() {
        for y in &all {
            if y.elem_leq(x) && !table.contains(y) {
                return false;
            }
        }
    }
    for i in 1..=n {
        for l in i + 2..=n {
            let has_r = (i + 1..l).any(|j| table.contains(&CycleElem::r(i, j, l)));
            let has_l = (i + 1..l).any(|k| table.contains(&CycleElem::l(i, k, l)));
            if has_r && has_l && !table.contains_t(i, l) {
                return false;
            }
        }
    }
    for i in 1..=n {
        for j in i + 1..=n {
            for k in j + 1..=n {
                if table.contains_t(i, j)
                    && table.contains_t(j, k)
                    && !table.contains(&CycleElem::r(i, j, k))
                    && !table.contains(&CycleElem::l(i, j, k))
                {
                    return false;
                }
            }
        }
    }
    true
}

impl AdmissibleSet {
    pub fn new(table: Table23) -> Result<Self> {
        check_admissible(&table)?;
        Ok(AdmissibleSet { inner: table })
    }

    pub fn empty(n: usize) -> Self {
        AdmissibleSet { inner: Table23::empty(n) }
    }

    /// The full 2/3-cycle set, i.e. C(w0).
    pub fn full(n: usize) -> Self {
        AdmissibleSet { inner: Table23::full(n) }
    }

    pub fn from_elems(n: usize, elems: BTreeSet<CycleElem>) -> Result<Self> {
        AdmissibleSet::new(Table23::new(n, elems)?)
    }

    /// The 2-3-table of σ, when admissible (always the case for covexillary
    /// σ, in particular for smooth σ).
    pub fn of_permutation(sigma: &Permutation) -> Result<Self> {
        AdmissibleSet::new(table_23(sigma))
    }

    pub fn table(&self) -> &Table23 {
        &self.inner
    }

    pub fn into_table(self) -> Table23 {
        self.inner
    }

    pub fn n(&self) -> usize {
        self.inner.n()
    }

    pub fn len(&self) -> usize {
        self.inner.len()
    }

    pub fn is_empty(&self) -> bool {
        self.inner.is_empty()
    }

    pub fn contains(&self, e: &CycleElem) -> bool {
        self.inner.contains(e)
    }

    pub fn contains_t(&self, i: usize, j: usize) -> bool {
        self.inner.contains_t(i, j)
    }

    pub fn iter(&self) -> impl Iterator<Item = &CycleElem> {
        self.inner.iter()
    }

    /// The transposition part A_T as (i, j) pairs, canonical order.
    pub fn t_pairs(&self) -> Vec<(usize, usize)> {
        self.inner
            .iter()
            .filter_map(|e| match *e {
                CycleElem::T(i, j) => Some((i, j)),
                _ => None,
            })
            .collect()
    }

    /// The inverted set A⁻¹; admissibility is preserved.
    pub fn inverse(&self) -> Self {
        AdmissibleSet::new(self.inner.inverse()).expect("inverse of admissible is admissible")
    }

    /// The upended set w0·A·w0; admissibility is preserved.
    pub fn upend(&self) -> Self {
        AdmissibleSet::new(self.inner.upend()).expect("upend of admissible is admissible")
    }

    /// Finds the canonical wedge: take `T(i,j) ∈ A_T` with i minimal and j
    /// maximal for that i; it is a wedge for A or for A⁻¹ (or both). The
    /// direct side is preferred. Returns None exactly for the empty set.
    pub fn find_wedge(&self) -> Option<Wedge> {
        let n = self.n();
        let (i, j) = *self.t_pairs().iter().min_by_key(|&&(i, j)| (i, n - j))?;
        debug_assert!(i == 1 || !self.contains_t(i - 1, i));
        if j == n || !self.contains(&CycleElem::r(i, j, j + 1)) {
            return Some(Wedge { side: Side::Direct, i, j });
        }
        if j == n || !self.contains(&CycleElem::l(i, j, j + 1)) {
            return Some(Wedge { side: Side::Inverse, i, j });
        }
        unreachable!("minimal-i/maximal-j candidate must be a wedge for A or A^-1")
    }

    fn is_direct_wedge(&self, i: usize, j: usize) -> bool {
        let n = self.n();
        self.contains_t(i, j)
            && (i == 1 || !self.contains_t(i - 1, i))
            && (j == n || !self.contains(&CycleElem::r(i, j, j + 1)))
    }

    /// All direct wedges of A, in canonical order.
    pub fn direct_wedges(&self) -> Vec<(usize, usize)> {
        self.t_pairs().into_iter().filter(|&(i, j)| self.is_direct_wedge(i, j)).collect()
    }

    /// The derived set of A with respect to a direct wedge `T(i,j)`:
    /// `A ∖ ({T(i,j)} ∪ {L(i,j,k) : k > j} ∪ {R(i,k,j) : i < k < j})`.
    pub fn derived_set(&self, i: usize, j: usize) -> Result<Self> {
        if !self.is_direct_wedge(i, j) {
            return Err(Error::NotAWedge { i, j });
        }
        let n = self.n();
        let mut elems = self.inner.elems().clone();
        elems.remove(&CycleElem::t(i, j));
        for k in j + 1..=n {
            elems.remove(&CycleElem::l(i, j, k));
        }
        for k in i + 1..j {
            elems.remove(&CycleElem::r(i, k, j));
        }
        Ok(AdmissibleSet::from_elems(n, elems).expect("derived set is admissible"))
    }

    /// The iterated derived set A° with respect to a direct wedge `T(i,j)`:
    /// `A ∖ ({T(i,k) : i < k ≤ j} ∪ {L(i,k,l) : i < k < l} ∪
    /// {R(i,k,l) : i < k < l ≤ j})`, equal to deriving j - i times with
    /// respect to T(i,j), T(i,j-1), …, T(i,i+1).
    pub fn iterated_derived_set(&self, i: usize, j: usize) -> Result<Self> {
        if !self.is_direct_wedge(i, j) {
            return Err(Error::NotAWedge { i, j });
        }
        let n = self.n();
        let mut elems = self.inner.elems().clone();
        for k in i + 1..=j {
            elems.remove(&CycleElem::t(i, k));
        }
        for k in i + 1..=n {
            for l in k + 1..=n {
                elems.remove(&CycleElem::l(i, k, l));
                if l <= j {
                    elems.remove(&CycleElem::r(i, k, l));
                }
            }
        }
        let result = AdmissibleSet::from_elems(n, elems)
            .expect("iterated derived set is admissible");
        debug_assert_eq!(result, self.iterated_derived_slow(i, j), "closed form vs repeated");
        Ok(result)
    }

    fn iterated_derived_slow(&self, i: usize, j: usize) -> Self {
        let mut current = self.clone();
        for k in (i + 1..=j).rev() {
            current = current.derived_set(i, k).expect("T(i,k) stays a wedge while deriving");
        }
        current
    }

    /// A compatible order for A, built by the wedge recursion: find the
    /// canonical wedge (switching to A⁻¹ with order reversal when it sits on
    /// the inverse side), recurse on the iterated derived set, and append
    /// the wedge column T(i,j), T(i,j-1), …, T(i,i+1) after everything else.
    /// Implemented with an explicit loop rather than recursion.
    pub fn compatible_order(&self) -> CompatibleOrder {
        let mut front: Vec<(usize, usize)> = Vec::new();
        let mut back_rev: Vec<(usize, usize)> = Vec::new();
        let mut work = self.clone();
        let mut flipped = false;
        while let Some(wedge) = work.find_wedge() {
            if wedge.side == Side::Inverse {
                work = work.inverse();
                flipped = !flipped;
            }
            let (i, j) = (wedge.i, wedge.j);
            debug_assert!(work.is_direct_wedge(i, j));
            if flipped {
                // this column sits at the front of the remaining gap, reversed
                front.extend((i + 1..=j).map(|k| (i, k)));
            } else {
                back_rev.extend((i + 1..=j).map(|k| (i, k)));
            }
            work = work.iterated_derived_set(i, j).expect("wedge verified above");
        }
        front.extend(back_rev.into_iter().rev());
        let order = CompatibleOrder { sequence: front };
        debug_assert!(self.is_compatible_order(&order));
        order
    }

    /// Checks conditions (one triple at a time) for a total order on A_T:
    /// with `T(i,j), T(j,k) ∈ A`, if `T(i,k) ∈ A` the middle element must
    /// sit strictly between the other two; otherwise `T(i,j)` precedes
    /// `T(j,k)` iff `R(i,j,k) ∈ A`.
    pub fn is_compatible_order(&self, order: &CompatibleOrder) -> bool {
        let pairs = self.t_pairs();
        if order.sequence.len() != pairs.len() {
            return false;
        }
        let n = self.n();
        let mut pos = vec![usize::MAX; n * n];
        let idx = |i: usize, j: usize| (i - 1) * n + (j - 1);
        for (p, &(i, j)) in order.sequence.iter().enumerate() {
            if i < 1 || i >= j || j > n || !self.contains_t(i, j) || pos[idx(i, j)] != usize::MAX
            {
                return false;
            }
            pos[idx(i, j)] = p;
        }
        for i in 1..=n {
            for j in i + 1..=n {
                if !self.contains_t(i, j) {
                    continue;
                }
                for k in j + 1..=n {
                    if !self.contains_t(j, k) {
                        continue;
                    }
                    let pij = pos[idx(i, j)];
                    let pjk = pos[idx(j, k)];
                    if self.contains_t(i, k) {
                        let pik = pos[idx(i, k)];
                        let asc = pij < pik && pik < pjk;
                        let desc = pjk < pik && pik < pij;
                        if !asc && !desc {
                            return false;
                        }
                    } else {
                        let has_r = self.contains(&CycleElem::r(i, j, k));
                        if has_r != (pij < pjk) {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    /// All compatible orders for A, by backtracking with the order
    /// conditions checked incrementally on each appended element.
    /// Output is deterministic (lexicographic in the canonical element
    /// order). Intended for small A_T.
    pub fn enumerate_compatible_orders(&self) -> Vec<CompatibleOrder> {
        let pairs = self.t_pairs();
        let m = pairs.len();
        let index_of = |i: usize, j: usize| pairs.iter().position(|&p| p == (i, j));

        // fixed precedence edges from triples without the long transposition
        let mut edges: Vec<(usize, usize)> = Vec::new();
        // (a, mid, b) triples where mid must sit strictly between a and b
        let mut triples: Vec<(usize, usize, usize)> = Vec::new();
        for &(i, j) in &pairs {
            for k in j + 1..=self.n() {
                if !self.contains_t(j, k) {
                    continue;
                }
                let a = index_of(i, j).unwrap();
                let b = index_of(j, k).unwrap();
                if let Some(mid) = index_of(i, k) {
                    triples.push((a, mid, b));
                } else if self.contains(&CycleElem::r(i, j, k)) {
                    edges.push((a, b));
                } else {
                    edges.push((b, a));
                }
            }
        }

        let mut result = Vec::new();
        let mut placed = vec![false; m];
        let mut pos = vec![usize::MAX; m];
        let mut seq: Vec<usize> = Vec::with_capacity(m);
        self.order_backtrack(&pairs, &edges, &triples, &mut placed, &mut pos, &mut seq, &mut result);
        result
    }

    #[allow(clippy::too_many_arguments)]
    fn order_backtrack(
        &self,
        pairs: &[(usize, usize)],
        edges: &[(usize, usize)],
        triples: &[(usize, usize, usize)],
        placed: &mut Vec<bool>,
        pos: &mut Vec<usize>,
        seq: &mut Vec<usize>,
        result: &mut Vec<CompatibleOrder>,
    ) {
        let m = pairs.len();
        if seq.len() == m {
            result.push(CompatibleOrder {
                sequence: seq.iter().map(|&x| pairs[x]).collect(),
            });
            return;
        }
        'candidates: for t in 0..m {
            if placed[t] {
                continue;
            }
            for &(x, y) in edges {
                if (y == t && !placed[x]) || (x == t && placed[y]) {
                    continue 'candidates;
                }
            }
            for &(a, mid, b) in triples {
                if t == mid {
                    if placed[a] == placed[b] {
                        continue 'candidates;
                    }
                } else if t == a {
                    match (placed[mid], placed[b]) {
                        (false, false) => {}
                        (true, true) => {
                            if pos[b] > pos[mid] {
                                continue 'candidates;
                            }
                        }
                        _ => continue 'candidates,
                    }
                } else if t == b {
                    match (placed[mid], placed[a]) {
                        (false, false) => {}
                        (true, true) => {
                            if pos[a] > pos[mid] {
                                continue 'candidates;
                            }
                        }
                        _ => continue 'candidates,
                    }
                }
            }
            placed[t] = true;
            pos[t] = seq.len();
            seq.push(t);
            self.order_backtrack(pairs, edges, triples, placed, pos, seq, result);
            seq.pop();
            pos[t] = usize::MAX;
            placed[t] = false;
        }
    }

    /// All compatible orders reachable from `order` in one elementary move:
    /// swapping two adjacent commuting transpositions, or reversing a
    /// consecutive braid triple T(i,j), T(i,k), T(j,k) (in either
    /// direction). Results are sorted and deduplicated.
    pub fn elementary_neighbors(&self, order: &CompatibleOrder) -> Vec<CompatibleOrder> {
        debug_assert!(self.is_compatible_order(order));
        let seq = &order.sequence;
        let mut out: BTreeSet<CompatibleOrder> = BTreeSet::new();
        for p in 0..seq.len().saturating_sub(1) {
            let (a, b) = (seq[p], seq[p + 1]);
            let disjoint = a.0 != b.0 && a.0 != b.1 && a.1 != b.0 && a.1 != b.1;
            if disjoint {
                let mut next = seq.clone();
                next.swap(p, p + 1);
                let next = CompatibleOrder { sequence: next };
                debug_assert!(self.is_compatible_order(&next));
                out.insert(next);
            }
        }
        for p in 0..seq.len().saturating_sub(2) {
            let (x, y, z) = (seq[p], seq[p + 1], seq[p + 2]);
            let ascending = x.0 == y.0 && y.1 == z.1 && x.1 == z.0;
            let descending = x.1 == y.1 && y.0 == z.0 && x.0 == z.1;
            if ascending || descending {
                let mut next = seq.clone();
                next.swap(p, p + 2);
                let next = CompatibleOrder { sequence: next };
                debug_assert!(self.is_compatible_order(&next));
                out.insert(next);
            }
        }
        out.into_iter().collect()
    }

    /// BFS over elementary moves: do the moves connect all compatible
    /// orders? Intended for small A_T.
    pub fn compat_graph_connected(&self) -> bool {
        let all = self.enumerate_compatible_orders();
        if all.len() <= 1 {
            return true;
        }
        let all_set: BTreeSet<&CompatibleOrder> = all.iter().collect();
        let mut seen: BTreeSet<CompatibleOrder> = BTreeSet::new();
        let mut queue = VecDeque::new();
        seen.insert(all[0].clone());
        queue.push_back(all[0].clone());
        while let Some(current) = queue.pop_front() {
            for next in self.elementary_neighbors(&current) {
                debug_assert!(all_set.contains(&next));
                if seen.insert(next.clone()) {
                    queue.push_back(next);
                }
            }
        }
        seen.len() == all.len()
    }

    /// The smooth permutation π(A): the product of A_T along a compatible
    /// order. `C(π(A)) = A`.
    pub fn pi(&self) -> Permutation {
        let n = self.n();
        let order = self.compatible_order();
        let mut product = Permutation::identity(n);
        for &(i, j) in &order.sequence {
            product = product
                .compose(&CycleElem::t(i, j).to_perm(n))
                .expect("sizes match by construction");
        }
        product
    }

    /// Brute-force π: the Bruhat maximum of `{τ : C(τ) = A}`, cross-checked
    /// against the maximum of `{τ : C_T(τ) = A_T, C(τ) ⊆ A}`. Exhaustive
    /// over S_n; intended for small n. Errors if either maximum fails to
    /// exist or the two disagree.
    pub fn pi_oracle(&self) -> Result<Permutation> {
        let n = self.n();
        let t_part: Vec<CycleElem> = self.inner.t_part();
        let mut exact: Vec<Permutation> = Vec::new();
        let mut dominated: Vec<Permutation> = Vec::new();
        for tau in Permutation::all(n) {
            let c = table_23(&tau);
            if c == self.inner {
                exact.push(tau.clone());
            }
            if c.t_part() == t_part && c.is_subset(&self.inner) {
                dominated.push(tau);
            }
        }
        let max_exact = bruhat_maximum(&exact)
            .ok_or_else(|| Error::NoMaximum("{t : C(t) = A} has no greatest element".into()))?;
        let max_dom = bruhat_maximum(&dominated).ok_or_else(|| {
            Error::NoMaximum("{t : C_T(t) = A_T, C(t) in A} has no greatest element".into())
        })?;
        if max_exact != max_dom {
            return Err(Error::NoMaximum(format!(
                "the two maxima disagree: {max_exact} vs {max_dom}"
            )));
        }
        Ok(max_exact)
    }

    /// All admissible sets for S_n, grouped by their downward-closed
    /// transposition part. For each free triple (i,j,k), where T(i,j) and
    /// T(j,k) are present but T(i,k) is not, exactly one of R/L belongs to
    /// the set; triples sharing an outer pair or nested around the same
    /// middle must choose the same letter, which cuts the assignment space
    /// down to the admissible ones. A final full admissibility check guards
    /// the pruning.
    pub fn enumerate(n: usize) -> Vec<AdmissibleSet> {
        let mut result = Vec::new();
        for f in crate::dyck::all_f_vectors(n) {
            // gamma = downward-closed transposition set of f
            let mut base: BTreeSet<CycleElem> = BTreeSet::new();
            let t_in = |i: usize, j: usize| j <= f[i - 1];
            for i in 1..=n {
                for j in i + 1..=f[i - 1] {
                    base.insert(CycleElem::t(i, j));
                }
            }
            let mut free: Vec<(usize, usize, usize)> = Vec::new();
            for i in 1..=n {
                for j in i + 1..=n {
                    if !t_in(i, j) {
                        continue;
                    }
                    for k in j + 1..=n {
                        if !t_in(j, k) {
                            continue;
                        }
                        if t_in(i, k) {
                            base.insert(CycleElem::r(i, j, k));
                            base.insert(CycleElem::l(i, j, k));
                        } else {
                            free.push((i, j, k));
                        }
                    }
                }
            }

            // group free triples that must take the same letter
            let mut group: Vec<usize> = (0..free.len()).collect();
            fn find(group: &mut [usize], x: usize) -> usize {
                let mut root = x;
                while group[root] != root {
                    root = group[root];
                }
                let mut cur = x;
                while group[cur] != root {
                    let next = group[cur];
                    group[cur] = root;
                    cur = next;
                }
                root
            }
            for a in 0..free.len() {
                for b in a + 1..free.len() {
                    let (ai, aj, ak) = free[a];
                    let (bi, bj, bk) = free[b];
                    let same_outer = ai == bi && ak == bk;
                    let nested =
                        aj == bj && ((bi <= ai && ak <= bk) || (ai <= bi && bk <= ak));
                    if same_outer || nested {
                        let (ra, rb) = (find(&mut group, a), find(&mut group, b));
                        group[ra] = rb;
                    }
                }
            }
            let mut roots: Vec<usize> = Vec::new();
            let leaders: Vec<usize> = (0..free.len())
                .map(|x| {
                    let r = find(&mut group, x);
                    if let Some(p) = roots.iter().position(|&q| q == r) {
                        p
                    } else {
                        roots.push(r);
                        roots.len() - 1
                    }
                })
                .collect();

            assert!(roots.len() <= 60, "free-group count exploded; n too large");
            for mask in 0u64..(1u64 << roots.len()) {
                let mut elems = base.clone();
                for (idx, &(i, j, k)) in free.iter().enumerate() {
                    if mask >> leaders[idx] & 1 == 1 {
                        elems.insert(CycleElem::r(i, j, k));
                    } else {
                        elems.insert(CycleElem::l(i, j, k));
                    }
                }
                let table = Table23::new(n, elems).expect("indices in range");
                if let Ok(set) = AdmissibleSet::new(table) {
                    result.push(set);
                }
            }
        }
        result.sort();
        result
    }

    pub fn to_text(&self) -> String {
        self.inner.to_text()
    }

    pub fn from_text(text: &str) -> Result<Self> {
        AdmissibleSet::new(Table23::from_text(text)?)
    }

    pub fn to_json(&self) -> String {
        self.inner.to_json()
    }

    pub fn from_json(text: &str) -> Result<Self> {
        AdmissibleSet::new(Table23::from_json(text)?)
    }
}

impl fmt::Debug for AdmissibleSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Admissible{:?}", self.inner)
    }
}

/// Greatest element of a list of permutations under the Bruhat order, if it
/// exists. Uses the grading: the greatest element must be the unique
/// longest one.
pub fn bruhat_maximum(perms: &[Permutation]) -> Option<Permutation> {
    let best = perms.iter().max_by_key(|p| p.length())?;
    let ties = perms.iter().filter(|p| p.length() == best.length()).count();
    if ties != 1 {
        return None;
    }
    for p in perms {
        if !p.bruhat_leq(best).expect("same n") {
            return None;
        }
    }
    Some(best.clone())
}

/// A strict total order on the transposition part of an admissible set,
/// listed ascending.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CompatibleOrder {
    sequence: Vec<(usize, usize)>,
}

impl CompatibleOrder {
    pub fn new(sequence: Vec<(usize, usize)>) -> Self {
        CompatibleOrder { sequence }
    }

    pub fn len(&self) -> usize {
        self.sequence.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sequence.is_empty()
    }

    pub fn transpositions(&self) -> &[(usize, usize)] {
        &self.sequence
    }

    /// The product of the listed transpositions in S_n.
    pub fn product(&self, n: usize) -> Permutation {
        let mut out = Permutation::identity(n);
        for &(i, j) in &self.sequence {
            out = out.compose(&CycleElem::t(i, j).to_perm(n)).expect("sizes match");
        }
        out
    }

    /// Restriction to the transpositions contained in `subset`.
    pub fn restrict_to(&self, subset: &AdmissibleSet) -> CompatibleOrder {
        CompatibleOrder {
            sequence: self
                .sequence
                .iter()
                .copied()
                .filter(|&(i, j)| subset.contains_t(i, j))
                .collect(),
        }
    }
}

impl fmt::Display for CompatibleOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.sequence.is_empty() {
            return write!(f, "(empty)");
        }
        let strs: Vec<String> =
            self.sequence.iter().map(|&(i, j)| format!("T({i},{j})")).collect();
        write!(f, "{}", strs.join(" < "))
    }
}

impl fmt::Debug for CompatibleOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Experimental hook for the open question: given smooth σ1 ≤ σ2, search
/// for a compatible order for C(σ2) whose restriction to C_T(σ1) is
/// compatible for C(σ1). Returns the first witness in canonical order, or
/// None if no compatible order restricts. Nothing is asserted about when a
/// witness must exist.
pub fn restriction_witness(
    sigma1: &Permutation,
    sigma2: &Permutation,
) -> Result<Option<CompatibleOrder>> {
    let a1 = AdmissibleSet::of_permutation(sigma1)?;
    let a2 = AdmissibleSet::of_permutation(sigma2)?;
    for order in a2.enumerate_compatible_orders() {
        if a1.is_compatible_order(&order.restrict_to(&a1)) {
            return Ok(Some(order));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tables::table_23;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn adm(elems: &[&str], n: usize) -> AdmissibleSet {
        AdmissibleSet::from_elems(n, elems.iter().map(|s| s.parse().unwrap()).collect())
            .unwrap()
    }

    #[test]
    fn admissibility_examples() {
        assert!(!is_admissible(&table_23(&p("3412"))));
        assert!(is_admissible(&table_23(&p("45231"))));
        assert!(is_admissible(&Table23::empty(4)));
    }

    #[test]
    fn fast_check_matches_naive() {
        // all 2-3-tables at n <= 4, plus every subset of the full set at n = 3
        for n in 1..=4 {
            for sigma in Permutation::all(n) {
                let t = table_23(&sigma);
                assert_eq!(is_admissible(&t), is_admissible_naive(&t), "C({sigma})");
            }
        }
        let all3 = CycleElem::all(3);
        for mask in 0u32..1 << all3.len() {
            let elems: BTreeSet<CycleElem> = all3
                .iter()
                .enumerate()
                .filter(|(b, _)| mask >> b & 1 == 1)
                .map(|(_, e)| *e)
                .collect();
            let t = Table23::new(3, elems).unwrap();
            assert_eq!(is_admissible(&t), is_admissible_naive(&t), "mask={mask}");
        }
    }

    #[test]
    fn find_wedge_examples() {
        let a312 = AdmissibleSet::of_permutation(&p("312")).unwrap();
        assert_eq!(a312.find_wedge(), Some(Wedge { side: Side::Direct, i: 1, j: 2 }));
        let a231 = AdmissibleSet::of_permutation(&p("231")).unwrap();
        assert_eq!(a231.find_wedge(), Some(Wedge { side: Side::Inverse, i: 1, j: 2 }));
        assert_eq!(AdmissibleSet::empty(3).find_wedge(), None);
    }

    #[test]
    fn derived_set_examples() {
        let a312 = AdmissibleSet::of_permutation(&p("312")).unwrap();
        assert_eq!(a312.derived_set(1, 2).unwrap(), adm(&["T(2,3)"], 3));
        assert_eq!(
            a312.derived_set(1, 2).unwrap().table(),
            &table_23(&p("132"))
        );

        let single = adm(&["T(1,2)"], 2);
        assert_eq!(single.derived_set(1, 2).unwrap(), AdmissibleSet::empty(2));

        let full3 = AdmissibleSet::full(3);
        assert_eq!(
            full3.derived_set(1, 3).unwrap(),
            adm(&["T(1,2)", "T(2,3)", "L(1,2,3)"], 3)
        );
        // not a wedge: R(1,2,3) is present in C((231))
        let a231 = AdmissibleSet::of_permutation(&p("231")).unwrap();
        assert_eq!(a231.derived_set(1, 2), Err(Error::NotAWedge { i: 1, j: 2 }));
    }

    #[test]
    fn iterated_derived_examples() {
        let full3 = AdmissibleSet::full(3);
        assert_eq!(full3.iterated_derived_set(1, 3).unwrap(), adm(&["T(2,3)"], 3));
        let single = adm(&["T(1,2)"], 2);
        assert_eq!(single.iterated_derived_set(1, 2).unwrap(), AdmissibleSet::empty(2));
        let a312 = AdmissibleSet::of_permutation(&p("312")).unwrap();
        assert_eq!(a312.iterated_derived_set(1, 2).unwrap(), adm(&["T(2,3)"], 3));
    }

    #[test]
    fn compatible_order_examples() {
        assert!(AdmissibleSet::empty(3).compatible_order().is_empty());

        let a231 = adm(&["T(1,2)", "T(2,3)", "R(1,2,3)"], 3);
        assert_eq!(a231.compatible_order().transpositions(), &[(1, 2), (2, 3)]);

        let full3 = AdmissibleSet::full(3);
        let order = full3.compatible_order();
        let asc = order.transpositions() == [(1, 2), (1, 3), (2, 3)];
        let desc = order.transpositions() == [(2, 3), (1, 3), (1, 2)];
        assert!(asc || desc, "got {order}");
    }

    #[test]
    fn is_compatible_order_examples() {
        let full3 = AdmissibleSet::full(3);
        assert!(full3.is_compatible_order(&CompatibleOrder::new(vec![(1, 2), (1, 3), (2, 3)])));
        assert!(!full3.is_compatible_order(&CompatibleOrder::new(vec![(1, 2), (2, 3), (1, 3)])));
        assert!(AdmissibleSet::empty(3).is_compatible_order(&CompatibleOrder::new(vec![])));
    }

    #[test]
    fn enumerate_orders_examples() {
        assert_eq!(AdmissibleSet::full(4).enumerate_compatible_orders().len(), 16);
        assert_eq!(AdmissibleSet::full(3).enumerate_compatible_orders().len(), 2);
        assert_eq!(AdmissibleSet::empty(3).enumerate_compatible_orders().len(), 1);
    }

    #[test]
    fn elementary_neighbors_examples() {
        let full3 = AdmissibleSet::full(3);
        let asc = CompatibleOrder::new(vec![(1, 2), (1, 3), (2, 3)]);
        let neighbors = full3.elementary_neighbors(&asc);
        assert_eq!(neighbors, vec![CompatibleOrder::new(vec![(2, 3), (1, 3), (1, 2)])]);

        assert!(AdmissibleSet::empty(3)
            .elementary_neighbors(&CompatibleOrder::new(vec![]))
            .is_empty());

        let disjoint = adm(&["T(1,2)", "T(3,4)"], 4);
        let neighbors =
            disjoint.elementary_neighbors(&CompatibleOrder::new(vec![(1, 2), (3, 4)]));
        assert_eq!(neighbors, vec![CompatibleOrder::new(vec![(3, 4), (1, 2)])]);
    }

    #[test]
    fn graph_connected_examples() {
        assert!(AdmissibleSet::full(4).compat_graph_connected());
        let a231 = AdmissibleSet::of_permutation(&p("231")).unwrap();
        assert!(a231.compat_graph_connected());
    }

    #[test]
    fn pi_examples() {
        assert_eq!(AdmissibleSet::empty(4).pi(), Permutation::identity(4));
        assert_eq!(AdmissibleSet::full(4).pi(), Permutation::longest(4));
        let a231 = adm(&["T(1,2)", "T(2,3)", "R(1,2,3)"], 3);
        assert_eq!(a231.pi(), p("231"));
    }

    #[test]
    fn pi_oracle_examples() {
        let a231 = adm(&["T(1,2)", "T(2,3)", "R(1,2,3)"], 3);
        assert_eq!(a231.pi_oracle().unwrap(), p("231"));
        assert_eq!(AdmissibleSet::empty(3).pi_oracle().unwrap(), Permutation::identity(3));
        assert_eq!(AdmissibleSet::full(4).pi_oracle().unwrap(), p("4321"));
    }

    #[test]
    fn invert_upend_examples() {
        let a231 = adm(&["T(1,2)", "T(2,3)", "R(1,2,3)"], 3);
        assert_eq!(a231.inverse(), adm(&["T(1,2)", "T(2,3)", "L(1,2,3)"], 3));
        assert_eq!(AdmissibleSet::empty(3).upend(), AdmissibleSet::empty(3));
        let full = AdmissibleSet::full(4);
        assert_eq!(full.inverse(), full);
    }

    #[test]
    fn enumerate_counts_small() {
        // #A_n = #smooth(S_n) = 1, 2, 6, 22 for n = 1..4
        assert_eq!(AdmissibleSet::enumerate(1).len(), 1);
        assert_eq!(AdmissibleSet::enumerate(2).len(), 2);
        assert_eq!(AdmissibleSet::enumerate(3).len(), 6);
        assert_eq!(AdmissibleSet::enumerate(4).len(), 22);
    }

    #[test]
    fn enumerate_matches_exhaustive_subsets_n3() {
        // ground truth at n = 3: filter all subsets of the nonempty cycle set
        let all3 = CycleElem::all(3);
        let mut truth = Vec::new();
        for mask in 0u32..1 << all3.len() {
            let elems: BTreeSet<CycleElem> = all3
                .iter()
                .enumerate()
                .filter(|(b, _)| mask >> b & 1 == 1)
                .map(|(_, e)| *e)
                .collect();
            let t = Table23::new(3, elems).unwrap();
            if is_admissible_naive(&t) {
                truth.push(AdmissibleSet { inner: t });
            }
        }
        truth.sort();
        assert_eq!(AdmissibleSet::enumerate(3), truth);
    }

    #[test]
    fn pi_stays_iterative_on_deep_tables() {
        // 36 transpositions; exercises the explicit-stack recursion
        assert_eq!(AdmissibleSet::full(9).pi(), Permutation::longest(9));
        assert_eq!(AdmissibleSet::full(9).compatible_order().len(), 36);
    }

    #[test]
    fn serialization_roundtrip() {
        let a = AdmissibleSet::of_permutation(&p("45231")).unwrap();
        assert_eq!(AdmissibleSet::from_text(&a.to_text()).unwrap(), a);
        assert_eq!(AdmissibleSet::from_json(&a.to_json()).unwrap(), a);
        // rejects the non-admissible table of (3412)
        let bad = table_23(&p("3412"));
        assert!(AdmissibleSet::from_text(&bad.to_text()).is_err());
    }

    #[test]
    fn restriction_hook_runs() {
        let w = restriction_witness(&p("213"), &p("231")).unwrap();
        assert!(w.is_some());
    }
}
