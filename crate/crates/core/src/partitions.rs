//! Block subgroups of S_n attached to set partitions of `[n]`, the blockwise
//! product order, the restriction of admissible sets to a block, and the
//! characterization of smoothness through existence of blockwise maxima,
//! with constructive witnesses for the failure direction.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use itertools::Itertools;

use crate::admissible::{bruhat_maximum, AdmissibleSet};
use crate::cycles::CycleElem;
use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::tables::{is_defined_by_inclusions, is_smooth};

/// A set partition of `[n]`. Blocks are kept sorted internally (elements
/// ascending, blocks by minimum).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition {
    n: usize,
    blocks: Vec<Vec<usize>>,
}

impl Partition {
    pub fn new(n: usize, mut blocks: Vec<Vec<usize>>) -> Result<Self> {
        let mut seen = vec![false; n + 1];
        let mut covered = 0;
        for block in &mut blocks {
            if block.is_empty() {
                return Err(Error::InvalidPartition("empty block".into()));
            }
            block.sort_unstable();
            for &x in block.iter() {
                if x < 1 || x > n {
                    return Err(Error::InvalidPartition(format!("element {x} outside [{n}]")));
                }
                if seen[x] {
                    return Err(Error::InvalidPartition(format!("element {x} repeated")));
                }
                seen[x] = true;
                covered += 1;
            }
        }
        if covered != n {
            return Err(Error::InvalidPartition(format!("blocks do not cover [{n}]")));
        }
        blocks.sort_by_key(|b| b[0]);
        Ok(Partition { n, blocks })
    }

    /// The all-singletons partition.
    pub fn singletons(n: usize) -> Self {
        Partition { n, blocks: (1..=n).map(|x| vec![x]).collect() }
    }

    /// The one-block partition.
    pub fn trivial(n: usize) -> Self {
        Partition { n, blocks: vec![(1..=n).collect()] }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }

    /// All set partitions of `[n]`, enumerated through restricted growth
    /// strings in lexicographic order.
    pub fn all(n: usize) -> Vec<Partition> {
        assert!(n >= 1);
        let mut out = Vec::new();
        let mut rgs = vec![0usize; n];
        loop {
            let classes = rgs.iter().max().unwrap() + 1;
            let mut blocks = vec![Vec::new(); classes];
            for (i, &c) in rgs.iter().enumerate() {
                blocks[c].push(i + 1);
            }
            out.push(Partition { n, blocks });
            // advance the restricted growth string
            let mut pos = n;
            loop {
                if pos <= 1 {
                    return out;
                }
                pos -= 1;
                let cap = 1 + rgs[..pos].iter().max().copied().unwrap_or(0);
                if rgs[pos] < cap {
                    rgs[pos] += 1;
                    for slot in rgs.iter_mut().skip(pos + 1) {
                        *slot = 0;
                    }
                    break;
                }
            }
        }
    }

    /// True iff τ preserves every block.
    pub fn preserved_by(&self, tau: &Permutation) -> bool {
        tau.n() == self.n
            && self.blocks.iter().all(|block| {
                block.iter().all(|&x| block.binary_search(&tau.apply(x)).is_ok())
            })
    }

    /// The blockwise components of τ ∈ S_X, pulled back through the order
    /// isomorphisms onto [#X].
    pub fn components(&self, tau: &Permutation) -> Result<Vec<Permutation>> {
        if !self.preserved_by(tau) {
            return Err(Error::NotBlockwise);
        }
        Ok(self
            .blocks
            .iter()
            .map(|block| component_in_block(block, tau))
            .collect())
    }

    /// τ_X: acts as τ on the given block, identically elsewhere.
    pub fn block_restriction(&self, tau: &Permutation, block_index: usize) -> Result<Permutation> {
        if !self.preserved_by(tau) {
            return Err(Error::NotBlockwise);
        }
        let block = &self.blocks[block_index];
        let mut entries: Vec<usize> = (1..=self.n).collect();
        for &x in block {
            entries[x - 1] = tau.apply(x);
        }
        Permutation::from_one_line(&entries)
    }

    /// All elements of the block subgroup S_X, each with its components.
    /// The size is the product of the block factorials.
    pub fn subgroup_elements(&self) -> Vec<(Permutation, Vec<Permutation>)> {
        let per_block: Vec<Vec<Permutation>> = self
            .blocks
            .iter()
            .map(|b| Permutation::all(b.len()).collect())
            .collect();
        per_block
            .iter()
            .map(|v| v.iter())
            .multi_cartesian_product()
            .map(|combo| {
                let mut entries: Vec<usize> = (1..=self.n).collect();
                for (block, comp) in self.blocks.iter().zip(&combo) {
                    for a in 1..=block.len() {
                        entries[block[a - 1] - 1] = block[comp.apply(a) - 1];
                    }
                }
                let full = Permutation::from_one_line(&entries).expect("blockwise bijection");
                (full, combo.into_iter().cloned().collect())
            })
            .collect()
    }

    /// The blockwise product order: τ1 ≤ τ2 iff every component comparison
    /// holds in the Bruhat order of the block.
    pub fn product_leq(&self, tau1: &Permutation, tau2: &Permutation) -> Result<bool> {
        let c1 = self.components(tau1)?;
        let c2 = self.components(tau2)?;
        for (a, b) in c1.iter().zip(&c2) {
            if !a.bruhat_leq(b)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let strs: Vec<String> = self
            .blocks
            .iter()
            .map(|b| b.iter().map(|x| x.to_string()).join(","))
            .collect();
        write!(f, "{}", strs.join("|"))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Partition({self})")
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Parses the `1,3,4|2|5` block format; n is the total element count.
    fn from_str(s: &str) -> Result<Self> {
        let mut blocks = Vec::new();
        let mut count = 0;
        for part in s.trim().split('|') {
            let block: Vec<usize> = part
                .split(',')
                .map(|p| {
                    p.trim()
                        .parse::<usize>()
                        .map_err(|_| Error::Parse(format!("bad element {p:?} in partition")))
                })
                .collect::<Result<_>>()?;
            count += block.len();
            blocks.push(block);
        }
        Partition::new(count, blocks)
    }
}

fn component_in_block(block: &[usize], tau: &Permutation) -> Permutation {
    let entries: Vec<usize> = block
        .iter()
        .map(|&x| block.binary_search(&tau.apply(x)).expect("block preserved") + 1)
        .collect();
    Permutation::from_one_line(&entries).expect("component is a bijection")
}

/// `ι_X(τ)`: τ in `S_{#X}` acting on the block `X ⊆ [n]` through the order
/// isomorphism, fixing the complement.
pub fn embed_in_block(n: usize, block: &[usize], tau: &Permutation) -> Result<Permutation> {
    if tau.n() != block.len() {
        return Err(Error::SizeMismatch { expected: block.len(), got: tau.n() });
    }
    if block.is_empty()
        || block.windows(2).any(|w| w[0] >= w[1])
        || block[0] < 1
        || *block.last().unwrap() > n
    {
        return Err(Error::InvalidPartition(format!("bad block {block:?} for n={n}")));
    }
    let mut entries: Vec<usize> = (1..=n).collect();
    for a in 1..=block.len() {
        entries[block[a - 1] - 1] = block[tau.apply(a) - 1];
    }
    Permutation::from_one_line(&entries)
}

/// A_X = ι_X⁻¹(A): the admissible set on [#X] of elements whose embedding
/// lies in A.
pub fn restrict_admissible(a: &AdmissibleSet, block: &[usize]) -> AdmissibleSet {
    assert!(
        !block.is_empty()
            && block[0] >= 1
            && *block.last().unwrap() <= a.n()
            && block.windows(2).all(|w| w[0] < w[1]),
        "block must be a nonempty strictly increasing subset of [n]"
    );
    let m = block.len();
    let lift = |x: usize| block[x - 1];
    let elems: BTreeSet<CycleElem> = CycleElem::all(m)
        .into_iter()
        .filter(|e| {
            let lifted = match *e {
                CycleElem::T(i, j) => CycleElem::t(lift(i), lift(j)),
                CycleElem::R(i, j, k) => CycleElem::r(lift(i), lift(j), lift(k)),
                CycleElem::L(i, j, k) => CycleElem::l(lift(i), lift(j), lift(k)),
            };
            a.contains(&lifted)
        })
        .collect();
    AdmissibleSet::from_elems(m, elems).expect("restriction of admissible is admissible")
}

/// `σ[X] = max{τ ∈ S_{#X} : ι_X(τ) ≤ σ}` for smooth σ, computed as
/// π(C(σ)_X). The maximum always exists here and is itself smooth.
pub fn sigma_bracket(sigma: &Permutation, block: &[usize]) -> Result<Permutation> {
    if !is_smooth(sigma) {
        return Err(Error::NotSmooth);
    }
    let a = AdmissibleSet::of_permutation(sigma)?;
    Ok(restrict_admissible(&a, block).pi())
}

/// Brute-force counterpart of `sigma_bracket`, valid for any σ: the Bruhat
/// maximum of `{τ ∈ S_{#X} : ι_X(τ) ≤ σ}` when it exists.
pub fn sigma_bracket_oracle(sigma: &Permutation, block: &[usize]) -> Option<Permutation> {
    let candidates: Vec<Permutation> = Permutation::all(block.len())
        .filter(|tau| {
            embed_in_block(sigma.n(), block, tau)
                .expect("valid block")
                .bruhat_leq(sigma)
                .expect("same n")
        })
        .collect();
    bruhat_maximum(&candidates)
}

/// Outcome of the blockwise maximum computation.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum PartitionMax {
    Maximum(Permutation),
    /// No maximum; the blockwise-maximal elements of the set are returned
    /// as witnesses.
    NoMaximum { maximal: Vec<Permutation> },
}

/// The maximum of `S_X ∩ (S_n)_{≤σ}` with respect to the blockwise product
/// order, if it exists. Computed by brute force over the block subgroup;
/// for smooth σ the result is additionally certified against the
/// admissible-set construction `ι((σ[X])_X)`.
pub fn partition_max(sigma: &Permutation, partition: &Partition) -> PartitionMax {
    assert_eq!(sigma.n(), partition.n(), "partition and permutation sizes differ");
    let members: Vec<(Permutation, Vec<Permutation>)> = partition
        .subgroup_elements()
        .into_iter()
        .filter(|(tau, _)| tau.bruhat_leq(sigma).expect("same n"))
        .collect();

    let result = blockwise_maximum(&members);

    if is_smooth(sigma) {
        let theory = theory_maximum(sigma, partition);
        match &result {
            PartitionMax::Maximum(m) => assert_eq!(
                *m, theory,
                "blockwise maximum disagrees with the admissible-set construction for {sigma}"
            ),
            PartitionMax::NoMaximum { .. } => {
                panic!("smooth {sigma} must admit a blockwise maximum")
            }
        }
    }
    result
}

fn theory_maximum(sigma: &Permutation, partition: &Partition) -> Permutation {
    let a = AdmissibleSet::of_permutation(sigma).expect("smooth tables are admissible");
    let mut entries: Vec<usize> = (1..=sigma.n()).collect();
    for block in partition.blocks() {
        let bracket = restrict_admissible(&a, block).pi();
        for x in 1..=block.len() {
            entries[block[x - 1] - 1] = block[bracket.apply(x) - 1];
        }
    }
    Permutation::from_one_line(&entries).expect("blockwise bijection")
}

fn blockwise_maximum(members: &[(Permutation, Vec<Permutation>)]) -> PartitionMax {
    // the maximum, if any, is the unique member of greatest blockwise length
    let blocklen =
        |comps: &[Permutation]| comps.iter().map(|c| c.length()).sum::<usize>();
    let best = members.iter().map(|(_, c)| blocklen(c)).max().expect("identity is a member");
    let top: Vec<&(Permutation, Vec<Permutation>)> =
        members.iter().filter(|(_, c)| blocklen(c) == best).collect();
    let leq = |a: &[Permutation], b: &[Permutation]| {
        a.iter().zip(b).all(|(x, y)| x.bruhat_leq(y).expect("same n"))
    };
    if top.len() == 1 && members.iter().all(|(_, c)| leq(c, &top[0].1)) {
        return PartitionMax::Maximum(top[0].0.clone());
    }
    let mut maximal: Vec<Permutation> = members
        .iter()
        .filter(|(_, c)| {
            !members
                .iter()
                .any(|(_, c2)| c2 != c && leq(c, c2))
        })
        .map(|(tau, _)| tau.clone())
        .collect();
    maximal.sort();
    PartitionMax::NoMaximum { maximal }
}

/// For non-smooth σ, a partition over which `S_X ∩ (S_n)_{≤σ}` has no
/// blockwise maximum. When σ is not defined by inclusions the witness comes
/// from a pattern occurrence and has exactly two blocks; otherwise σ is
/// 4231-avoiding and the witness is a single cycle-support block plus
/// singletons. The returned partition is certified by `partition_max`.
pub fn witness_partition(sigma: &Permutation) -> Result<Partition> {
    if is_smooth(sigma) {
        return Err(Error::SmoothInput);
    }
    let partition = if !is_defined_by_inclusions(sigma) {
        pattern_branch_witness(sigma)
    } else {
        cycle_branch_witness(sigma)
    };
    let certified = matches!(
        partition_max(sigma, &partition),
        PartitionMax::NoMaximum { .. }
    );
    assert!(certified, "witness partition {partition} failed to defeat the maximum for {sigma}");
    Ok(partition)
}

/// Witness for σ not defined by inclusions. An occurrence of 4231, 35142,
/// 42513 or 351624 yields τ ≰ σ whose block restrictions are all ≤ σ; the
/// two-class relation separating the occurrence's cycles defeats the
/// maximum.
fn pattern_branch_witness(sigma: &Permutation) -> Partition {
    let n = sigma.n();
    // (pattern, index of the central position a1 within the occurrence)
    let patterns: [(&[usize], usize); 4] = [
        (&[4, 2, 3, 1], 0),
        (&[3, 5, 1, 4, 2], 1),
        (&[4, 2, 5, 1, 3], 0),
        (&[3, 5, 1, 6, 2, 4], 1),
    ];
    let (occurrence, offset) = patterns
        .iter()
        .find_map(|&(pat, offset)| {
            let pi = Permutation::from_one_line(pat).expect("pattern literal");
            sigma.find_pattern(&pi).map(|occ| (occ, offset))
        })
        .expect("not defined by inclusions, so some pattern occurs");

    // occurrence values sorted ascending align with the labels b_s … b_t
    let mut vals: Vec<usize> = occurrence.iter().map(|&x| sigma.apply(x)).collect();
    vals.sort_unstable();
    // positions a1 < a2 < a3 < a4 and values b1 < b2 < b3 < b4 of the
    // central 4231-shaped configuration
    let a = &occurrence[offset..offset + 4];
    let b = &vals[offset..offset + 4];

    let mut entries = sigma.one_line();
    // boundary letters return to sorted position; the center crosses over
    if offset == 1 {
        entries[occurrence[0] - 1] = vals[0];
    }
    if offset + 4 < occurrence.len() {
        entries[occurrence[occurrence.len() - 1] - 1] = vals[vals.len() - 1];
    }
    entries[a[0] - 1] = b[3];
    entries[a[1] - 1] = b[2];
    entries[a[2] - 1] = b[1];
    entries[a[3] - 1] = b[0];
    let mut tau = Permutation::from_one_line(&entries).expect("rearranged occurrence");

    // separate a1 from a2 and a3 from a4 into distinct cycles of tau
    let same_cycle = |t: &Permutation, x: usize, y: usize| {
        let mut cur = t.apply(x);
        while cur != x {
            if cur == y {
                return true;
            }
            cur = t.apply(cur);
        }
        false
    };
    if same_cycle(&tau, a[0], a[1]) {
        tau = tau.right_mul_transposition(a[0], a[1]);
    }
    if same_cycle(&tau, a[2], a[3]) {
        tau = tau.right_mul_transposition(a[2], a[3]);
    }

    // group cycles into two classes with a1 ≁ a2 and a3 ≁ a4
    let mut cycle_id = vec![usize::MAX; n + 1];
    let mut next_id = 0;
    for x in 1..=n {
        if cycle_id[x] == usize::MAX {
            let mut cur = x;
            loop {
                cycle_id[cur] = next_id;
                cur = tau.apply(cur);
                if cur == x {
                    break;
                }
            }
            next_id += 1;
        }
    }
    let mut class = vec![usize::MAX; next_id];
    class[cycle_id[a[0]]] = 0;
    class[cycle_id[a[1]]] = 1;
    let (c3, c4) = (cycle_id[a[2]], cycle_id[a[3]]);
    match (class[c3], class[c4]) {
        (usize::MAX, usize::MAX) => {
            class[c3] = 0;
            class[c4] = 1;
        }
        (usize::MAX, assigned) => class[c3] = 1 - assigned,
        (assigned, usize::MAX) => class[c4] = 1 - assigned,
        (x, y) => assert_ne!(x, y, "a3 and a4 collapsed into one class"),
    }
    for slot in class.iter_mut() {
        if *slot == usize::MAX {
            *slot = 0;
        }
    }
    let blocks: Vec<Vec<usize>> = (0..2)
        .map(|c| (1..=n).filter(|&x| class[cycle_id[x]] == c).collect())
        .collect();
    let partition = Partition::new(n, blocks).expect("two classes cover [n]");

    // the construction promises tau itself defeats the maximum
    debug_assert!(!tau.bruhat_leq(sigma).unwrap());
    debug_assert!((0..partition.block_count()).all(|bi| {
        partition.block_restriction(&tau, bi).unwrap().bruhat_leq(sigma).unwrap()
    }));
    partition
}

/// Witness for σ defined by inclusions (hence 4231-avoiding) but not
/// smooth: an index i with both `M_σ(M_{σ⁻¹}(i)) > M_σ(i) > i` and
/// `M_{σ⁻¹}(M_σ(i)) > M_{σ⁻¹}(i) > i` exists; with j = M_σ(i) and
/// k = M_{σ⁻¹}(i) the block {i} ∪ [min(j,k), max(j,k)+1] plus singletons
/// traps two incomparable cycles below σ.
fn cycle_branch_witness(sigma: &Permutation) -> Partition {
    let n = sigma.n();
    let m = sigma.max_function();
    let mi = sigma.inverse().max_function();
    let i = (1..=n)
        .find(|&i| {
            m.get(i) > i
                && mi.get(i) > i
                && m.get(mi.get(i)) > m.get(i)
                && mi.get(m.get(i)) > mi.get(i)
        })
        .expect("a 4231-avoiding non-smooth permutation has such an index");
    let j = m.get(i);
    let k = mi.get(i);
    let (lo, hi) = (j.min(k), j.max(k));
    debug_assert!(hi < n);
    let mut block: Vec<usize> = vec![i];
    block.extend(lo..=hi + 1);
    let mut blocks = vec![block.clone()];
    for x in 1..=n {
        if !block.contains(&x) {
            blocks.push(vec![x]);
        }
    }
    Partition::new(n, blocks).expect("cycle block plus singletons")
}

/// Facts about the Bruhat interval below the right cyclic shift in S_r,
/// all verified by enumeration over S_r. Used as a test oracle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclicShiftReport {
    pub r: usize,
    pub interval_size: usize,
    pub boolean_lattice: bool,
    pub maximal_elements: Vec<Permutation>,
    pub maximal_as_predicted: bool,
    pub geq_iff_last_entry_one: bool,
    pub four_conditions_equivalent: bool,
}

impl CyclicShiftReport {
    pub fn all_hold(&self) -> bool {
        self.interval_size == 1 << (self.r - 1)
            && self.boolean_lattice
            && self.maximal_as_predicted
            && self.maximal_elements.len() == self.r - 1
            && self.geq_iff_last_entry_one
            && self.four_conditions_equivalent
    }
}

/// Verifies the cyclic-shift interval facts for S_r, r > 1: the interval
/// below the shift is a Boolean lattice of rank r-1 realized by subword
/// products of adjacent transpositions; the maximal elements strictly below
/// the shift are shift·T(i,r); τ ≥ shift iff τ(r) = 1; and the four
/// equivalent upper-bound conditions.
pub fn cyclic_shift_report(r: usize) -> CyclicShiftReport {
    assert!(r > 1, "r must exceed 1");
    let shift = GeneralCycleShift::new(r);
    let interval: Vec<Permutation> = Permutation::all(r)
        .filter(|tau| tau.bruhat_leq(&shift.perm).unwrap())
        .collect();

    // subword products of s_1 s_2 … s_{r-1} realize the Boolean lattice
    let mut products: Vec<(u32, Permutation)> = Vec::with_capacity(1 << (r - 1));
    for mask in 0u32..1 << (r - 1) {
        let mut prod = Permutation::identity(r);
        for i in 1..r {
            if mask >> (i - 1) & 1 == 1 {
                prod = prod.compose(&CycleElem::t(i, i + 1).to_perm(r)).unwrap();
            }
        }
        products.push((mask, prod));
    }
    let mut boolean_lattice = {
        let mut perms: Vec<&Permutation> = products.iter().map(|(_, p)| p).collect();
        perms.sort();
        perms.dedup();
        perms.len() == 1 << (r - 1)
    };
    let mut sorted_interval = interval.clone();
    sorted_interval.sort();
    let mut sorted_products: Vec<Permutation> =
        products.iter().map(|(_, p)| p.clone()).collect();
    sorted_products.sort();
    boolean_lattice &= sorted_interval == sorted_products;
    for (ma, pa) in &products {
        for (mb, pb) in &products {
            boolean_lattice &=
                pa.bruhat_leq(pb).unwrap() == (ma & !mb == 0);
        }
    }

    let maximal_elements: Vec<Permutation> = {
        let below: Vec<&Permutation> =
            interval.iter().filter(|t| **t != shift.perm).collect();
        let mut maxima: Vec<Permutation> = below
            .iter()
            .filter(|t| {
                !below
                    .iter()
                    .any(|u| *u != **t && t.bruhat_leq(u).unwrap())
            })
            .map(|t| (*t).clone())
            .collect();
        maxima.sort();
        maxima
    };
    let mut predicted: Vec<Permutation> =
        (1..r).map(|i| shift.perm.right_mul_transposition(i, r)).collect();
    predicted.sort();
    let maximal_as_predicted = maximal_elements == predicted;

    let geq_iff_last_entry_one = Permutation::all(r)
        .all(|tau| shift.perm.bruhat_leq(&tau).unwrap() == (tau.apply(r) == 1));

    let shift_sq = shift.perm.compose(&shift.perm).unwrap();
    let t1r = shift.perm.right_mul_transposition(1, r);
    let tr1r = shift.perm.right_mul_transposition(r - 1, r);
    let four_conditions_equivalent = Permutation::all(r).all(|s| {
        let ca = interval
            .iter()
            .filter(|t| **t != shift.perm)
            .all(|t| t.bruhat_leq(&s).unwrap());
        let cb = t1r.bruhat_leq(&s).unwrap() && tr1r.bruhat_leq(&s).unwrap();
        let cc = s.apply(r) == 1 || (s.apply(r) == 2 && s.apply(r - 1) == 1);
        let cd = shift.perm.bruhat_leq(&s).unwrap() || shift_sq.bruhat_leq(&s).unwrap();
        ca == cb && cb == cc && cc == cd
    });

    CyclicShiftReport {
        r,
        interval_size: interval.len(),
        boolean_lattice,
        maximal_elements,
        maximal_as_predicted,
        geq_iff_last_entry_one,
        four_conditions_equivalent,
    }
}

struct GeneralCycleShift {
    perm: Permutation,
}

impl GeneralCycleShift {
    fn new(r: usize) -> Self {
        let entries: Vec<usize> = (1..=r).map(|x| if x == r { 1 } else { x + 1 }).collect();
        GeneralCycleShift { perm: Permutation::from_one_line(&entries).unwrap() }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn part(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn embed_examples() {
        let tau = p("231");
        assert_eq!(embed_in_block(3, &[1, 2, 3], &tau).unwrap(), tau);
        assert_eq!(embed_in_block(4, &[1, 3], &p("21")).unwrap(), p("3214"));
        assert_eq!(embed_in_block(5, &[2], &p("1")).unwrap(), Permutation::identity(5));
    }

    #[test]
    fn product_leq_examples() {
        let parity = part("1,3|2,4");
        let t13 = p("3214");
        assert!(parity.product_leq(&t13, &t13).unwrap());
        let trivial = Partition::trivial(4);
        for a in Permutation::all(4) {
            for b in Permutation::all(4) {
                assert_eq!(
                    trivial.product_leq(&a, &b).unwrap(),
                    a.bruhat_leq(&b).unwrap()
                );
            }
        }
        assert!(parity.product_leq(&t13, &p("3412")).unwrap());
        assert!(parity.product_leq(&p("2143"), &t13).is_err());
    }

    #[test]
    fn restrict_examples() {
        let full = AdmissibleSet::full(4);
        assert_eq!(restrict_admissible(&full, &[1, 2, 3]), AdmissibleSet::full(3));
        assert_eq!(
            restrict_admissible(&AdmissibleSet::empty(4), &[1, 3]),
            AdmissibleSet::empty(2)
        );
        let restricted = restrict_admissible(&full, &[1, 3]);
        assert_eq!(restricted, AdmissibleSet::full(2));
    }

    #[test]
    fn sigma_bracket_examples() {
        let w0 = Permutation::longest(4);
        assert_eq!(sigma_bracket(&w0, &[1, 3, 4]).unwrap(), Permutation::longest(3));
        // T(1,3) is not below (231), so the bracket on {1,3} is trivial
        assert_eq!(sigma_bracket(&p("231"), &[1, 3]).unwrap(), Permutation::identity(2));
        assert_eq!(sigma_bracket(&p("3412"), &[1, 2]), Err(Error::NotSmooth));
    }

    #[test]
    fn sigma_bracket_matches_oracle() {
        for n in 2..=5 {
            let blocks: Vec<Vec<usize>> = (1u32..1 << n)
                .map(|mask| (1..=n).filter(|&x| mask >> (x - 1) & 1 == 1).collect())
                .filter(|b: &Vec<usize>| !b.is_empty())
                .collect();
            for sigma in Permutation::all(n) {
                if !is_smooth(&sigma) {
                    continue;
                }
                for block in &blocks {
                    assert_eq!(
                        Some(sigma_bracket(&sigma, block).unwrap()),
                        sigma_bracket_oracle(&sigma, block),
                        "sigma={sigma} block={block:?}"
                    );
                }
            }
        }
    }

    #[test]
    fn partition_enumeration_counts() {
        // Bell numbers 1, 2, 5, 15, 52, 203
        let bell = [1, 2, 5, 15, 52, 203];
        for (i, &b) in bell.iter().enumerate() {
            assert_eq!(Partition::all(i + 1).len(), b);
        }
    }

    #[test]
    fn partition_parse_display() {
        assert_eq!(part("1,3,4|2|5").to_string(), "1,3,4|2|5");
        assert_eq!(part("2|1,3,4|5").to_string(), "1,3,4|2|5");
        assert!("1,3|2,3".parse::<Partition>().is_err());
        assert!("1,2|4".parse::<Partition>().is_err());
    }

    #[test]
    fn partition_max_examples() {
        let singles = Partition::singletons(4);
        assert_eq!(
            partition_max(&p("2341"), &singles),
            PartitionMax::Maximum(Permutation::identity(4))
        );
        let w0 = Permutation::longest(4);
        assert_eq!(
            partition_max(&w0, &part("1,2|3,4")),
            PartitionMax::Maximum(p("2143"))
        );
        match partition_max(&p("3412"), &part("1,3,4|2")) {
            PartitionMax::NoMaximum { maximal } => assert!(maximal.len() > 1),
            other => panic!("expected no maximum, got {other:?}"),
        }
    }

    #[test]
    fn witness_examples() {
        assert_eq!(witness_partition(&p("3412")).unwrap(), part("1,3,4|2"));
        // (4231) is not defined by inclusions: the pattern branch applies
        let w = witness_partition(&p("4231")).unwrap();
        assert_eq!(w.block_count(), 2);
        assert_eq!(witness_partition(&p("1234")), Err(Error::SmoothInput));
    }

    #[test]
    fn witness_covers_all_nonsmooth_s5() {
        for sigma in Permutation::all(5) {
            if !is_smooth(&sigma) {
                // certification happens inside witness_partition
                witness_partition(&sigma).unwrap();
            }
        }
    }

    #[test]
    fn cyclic_shift_examples() {
        let rep = cyclic_shift_report(3);
        assert_eq!(rep.interval_size, 4);
        assert!(rep.all_hold());

        let rep2 = cyclic_shift_report(2);
        assert_eq!(rep2.interval_size, 2);
        assert!(rep2.all_hold());

        let rep4 = cyclic_shift_report(4);
        assert_eq!(rep4.maximal_elements.len(), 3);
        assert!(rep4.all_hold());
    }
}
