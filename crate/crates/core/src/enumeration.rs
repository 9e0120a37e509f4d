//! Counting smooth permutations and their subclasses three independent
//! ways: brute-force pattern scans, decorated-path generation, and exact
//! integer recurrences. All counts are arbitrary-precision.

use std::collections::BTreeSet;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::dyck::{all_f_vectors, count_decorations, decorations_of, DecoratedPath};
use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::tables::is_smooth;

/// An exact integer sequence indexed by n = 1, 2, ….
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CountSeries {
    values: Vec<BigUint>,
}

impl CountSeries {
    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// The value at index n (1-based).
    pub fn get(&self, n: usize) -> &BigUint {
        &self.values[n - 1]
    }

    pub fn values(&self) -> &[BigUint] {
        &self.values
    }
}

/// How to count smooth permutations.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CountMethod {
    /// Brute-force 4231/3412 avoidance over all of S_n.
    Patterns,
    /// Generation of decorated Dyck paths.
    Paths,
    /// The exact integer recurrence.
    Recurrence,
}

/// Subclasses of smooth permutations with closed-form counts.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum PermClass {
    Avoid231,
    Avoid321,
    Indecomposable,
}

/// How to count a subclass.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ClassMethod {
    /// Brute-force pattern scan over S_n.
    Patterns,
    /// Path-flag counting over decorated Dyck paths.
    Paths,
    /// Catalan / Fibonacci / recurrence formula.
    Formula,
}

/// Number of smooth permutations in S_n.
pub fn count_smooth(n: usize, method: CountMethod) -> BigUint {
    assert!(n >= 1);
    match method {
        CountMethod::Patterns => {
            BigUint::from(Permutation::all(n).filter(is_smooth_ref).count())
        }
        CountMethod::Paths => all_f_vectors(n)
            .map(|f| BigUint::from(count_decorations(&f)))
            .sum(),
        CountMethod::Recurrence => series_smooth(n).get(n).clone(),
    }
}

fn is_smooth_ref(sigma: &Permutation) -> bool {
    is_smooth(sigma)
}

/// Number of permutations of the given class in S_n. All three classes are
/// subsets of the smooth permutations.
pub fn count_class(n: usize, class: PermClass, method: ClassMethod) -> BigUint {
    assert!(n >= 1);
    match method {
        ClassMethod::Patterns => {
            let count = Permutation::all(n)
                .filter(|sigma| match class {
                    PermClass::Avoid231 => {
                        !sigma.contains_pattern(&"231".parse().unwrap())
                    }
                    PermClass::Avoid321 => {
                        is_smooth(sigma) && !sigma.contains_pattern(&"321".parse().unwrap())
                    }
                    PermClass::Indecomposable => is_smooth(sigma) && sigma.is_indecomposable(),
                })
                .count();
            BigUint::from(count)
        }
        ClassMethod::Paths => {
            let count = all_f_vectors(n)
                .flat_map(|f| {
                    decorations_of(&f)
                        .into_iter()
                        .map(move |g| DecoratedPath::new(f.clone(), g).unwrap())
                })
                .filter(|path| {
                    let flags = path.classify();
                    match class {
                        PermClass::Avoid231 => flags.avoids_231,
                        PermClass::Avoid321 => flags.avoids_321,
                        PermClass::Indecomposable => flags.indecomposable,
                    }
                })
                .count();
            BigUint::from(count)
        }
        ClassMethod::Formula => match class {
            PermClass::Avoid231 => catalan(n),
            PermClass::Avoid321 => fibonacci(2 * n - 1),
            PermClass::Indecomposable => series_indecomposable(n).get(n).clone(),
        },
    }
}

/// Catalan number `C_n = binom(2n, n) / (n + 1)`.
pub fn catalan(n: usize) -> BigUint {
    binomial(2 * n, n) / BigUint::from(n + 1)
}

/// Fibonacci number with `F_1 = F_2 = 1`.
pub fn fibonacci(k: usize) -> BigUint {
    assert!(k >= 1);
    let (mut a, mut b) = (BigUint::one(), BigUint::one());
    for _ in 2..k {
        let next = &a + &b;
        a = b;
        b = next;
    }
    if k == 1 {
        a
    } else {
        b
    }
}

pub fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let mut result = BigUint::one();
    for t in 0..k.min(n - k) {
        result = result * BigUint::from(n - t) / BigUint::from(t + 1);
    }
    result
}

/// Number of Dyck paths for n, obtained by generation (equals the Catalan
/// number).
pub fn count_dyck(n: usize) -> BigUint {
    BigUint::from(all_f_vectors(n).count())
}

/// The sequence of indecomposable smooth counts, from the recurrence
/// `a_n = a_{n-1} + 2 Σ_{i=1}^{n-2} C_{i-1} a_{n-i}` with `a_1 = 1`.
pub fn series_indecomposable(len: usize) -> CountSeries {
    assert!(len >= 1);
    let cats: Vec<BigUint> = (0..len).map(catalan).collect();
    let mut values: Vec<BigUint> = Vec::with_capacity(len);
    values.push(BigUint::one());
    for n in 2..=len {
        let mut v = values[n - 2].clone();
        for i in 1..=n - 2 {
            v += BigUint::from(2u32) * &cats[i - 1] * &values[n - i - 1];
        }
        values.push(v);
    }
    CountSeries { values }
}

/// The sequence of smooth counts, from the convolution
/// `p_n = a_n + Σ_{i=1}^{n-1} a_i p_{n-i}` over the indecomposable series.
pub fn series_smooth(len: usize) -> CountSeries {
    assert!(len >= 1);
    let indec = series_indecomposable(len);
    let mut values: Vec<BigUint> = Vec::with_capacity(len);
    for n in 1..=len {
        let mut v = indec.get(n).clone();
        for i in 1..n {
            v += indec.get(i) * &values[n - i - 1];
        }
        values.push(v);
    }
    CountSeries { values }
}

/// Checks that the indecomposable series annihilates its generating
/// function's reciprocal: with `B(x) = Σ binom(2k,k) x^k`, the coefficients
/// must satisfy `a_{m+1} = Σ_{k=0}^{m-1} binom(2k,k) a_{m-k}` for
/// 1 ≤ m < len and `a_1 = 1`.
pub fn indecomposable_series_satisfies_equation(series: &CountSeries) -> bool {
    if series.is_empty() || *series.get(1) != BigUint::one() {
        return false;
    }
    for m in 1..series.len() {
        let sum: BigUint = (0..m).map(|k| binomial(2 * k, k) * series.get(m - k)).sum();
        if *series.get(m + 1) != sum {
            return false;
        }
    }
    true
}

/// Checks the smooth analogue: `p_{m+1} = p_m + Σ_{k=0}^{m-1}
/// binom(2k,k) p_{m-k}` for 1 ≤ m < len and `p_1 = 1`.
pub fn smooth_series_satisfies_equation(series: &CountSeries) -> bool {
    if series.is_empty() || *series.get(1) != BigUint::one() {
        return false;
    }
    for m in 1..series.len() {
        let sum: BigUint = (0..m).map(|k| binomial(2 * k, k) * series.get(m - k)).sum();
        if *series.get(m + 1) != series.get(m) + sum {
            return false;
        }
    }
    true
}

/// Number of admissible sets with a prescribed transposition part Γ
/// (as (i, j) pairs): `2^r` where r counts the indices `i < n` such that
/// some chain `T(i,j), T(j,k) ∈ Γ` has `T(i,k) ∉ Γ`, while every such chain
/// has `T(i+1,k) ∈ Γ`. Γ must be downward closed.
pub fn count_admissible_with_table(
    n: usize,
    gamma: &BTreeSet<(usize, usize)>,
) -> Result<BigUint> {
    for &(i, j) in gamma {
        if i < 1 || i >= j || j > n {
            return Err(Error::InvalidElem(format!("T({i},{j}) out of range for n={n}")));
        }
        // downward closure in the transposition order
        if (j - i >= 2) && (!gamma.contains(&(i + 1, j)) || !gamma.contains(&(i, j - 1))) {
            return Err(Error::NotDownwardClosed);
        }
    }
    let has = |i: usize, j: usize| gamma.contains(&(i, j));
    let mut r = 0u32;
    for i in 1..n {
        let mut exists_open = false;
        let mut shifted_closed = true;
        for j in i + 1..=n {
            if !has(i, j) {
                continue;
            }
            for k in j + 1..=n {
                if !has(j, k) {
                    continue;
                }
                if !has(i, k) {
                    exists_open = true;
                }
                if i + 1 < k && !has(i + 1, k) {
                    shifted_closed = false;
                }
            }
        }
        if exists_open && shifted_closed {
            r += 1;
        }
    }
    Ok(BigUint::from(2u32).pow(r))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::admissible::AdmissibleSet;

    fn big(v: u64) -> BigUint {
        BigUint::from(v)
    }

    #[test]
    fn count_smooth_examples() {
        assert_eq!(count_smooth(4, CountMethod::Patterns), big(22));
        assert_eq!(count_smooth(1, CountMethod::Paths), big(1));
        assert_eq!(count_smooth(3, CountMethod::Recurrence), big(6));
    }

    #[test]
    fn three_way_agreement() {
        for n in 1..=7 {
            let a = count_smooth(n, CountMethod::Patterns);
            let b = count_smooth(n, CountMethod::Paths);
            let c = count_smooth(n, CountMethod::Recurrence);
            assert_eq!(a, b, "n={n}");
            assert_eq!(b, c, "n={n}");
        }
    }

    #[test]
    fn count_class_examples() {
        assert_eq!(count_class(4, PermClass::Avoid231, ClassMethod::Formula), big(14));
        assert_eq!(count_class(4, PermClass::Avoid321, ClassMethod::Formula), big(13));
        assert_eq!(count_class(4, PermClass::Indecomposable, ClassMethod::Formula), big(11));
        for class in [PermClass::Avoid231, PermClass::Avoid321, PermClass::Indecomposable] {
            for n in 1..=6 {
                let f = count_class(n, class, ClassMethod::Formula);
                let p = count_class(n, class, ClassMethod::Patterns);
                let d = count_class(n, class, ClassMethod::Paths);
                assert_eq!(f, p, "{class:?} n={n}");
                assert_eq!(p, d, "{class:?} n={n}");
            }
        }
    }

    #[test]
    fn series_examples() {
        let indec = series_indecomposable(5);
        let expect: Vec<BigUint> = [1u64, 1, 3, 11, 43].iter().map(|&v| big(v)).collect();
        assert_eq!(indec.values(), expect.as_slice());

        let smooth = series_smooth(4);
        let expect: Vec<BigUint> = [1u64, 2, 6, 22].iter().map(|&v| big(v)).collect();
        assert_eq!(smooth.values(), expect.as_slice());

        assert_eq!(series_indecomposable(1).get(1), &big(1));
    }

    #[test]
    fn functional_equations_to_order_30() {
        assert!(indecomposable_series_satisfies_equation(&series_indecomposable(30)));
        assert!(smooth_series_satisfies_equation(&series_smooth(30)));
    }

    #[test]
    fn admissible_with_table_examples() {
        assert_eq!(
            count_admissible_with_table(3, &BTreeSet::new()).unwrap(),
            big(1)
        );
        let two: BTreeSet<(usize, usize)> = [(1, 2), (2, 3)].into_iter().collect();
        assert_eq!(count_admissible_with_table(3, &two).unwrap(), big(2));
        let full: BTreeSet<(usize, usize)> =
            [(1, 2), (1, 3), (2, 3)].into_iter().collect();
        assert_eq!(count_admissible_with_table(3, &full).unwrap(), big(1));
        let not_closed: BTreeSet<(usize, usize)> = [(1, 3)].into_iter().collect();
        assert_eq!(
            count_admissible_with_table(3, &not_closed),
            Err(Error::NotDownwardClosed)
        );
    }

    #[test]
    fn admissible_with_table_matches_enumeration() {
        for n in 1..=5 {
            let all = AdmissibleSet::enumerate(n);
            let mut by_gamma: std::collections::BTreeMap<Vec<(usize, usize)>, u64> =
                std::collections::BTreeMap::new();
            for a in &all {
                *by_gamma.entry(a.t_pairs()).or_insert(0) += 1;
            }
            for f in all_f_vectors(n) {
                let gamma: BTreeSet<(usize, usize)> = (1..=n)
                    .flat_map(|i| (i + 1..=f[i - 1]).map(move |j| (i, j)))
                    .collect();
                let expect = by_gamma
                    .get(&gamma.iter().copied().collect::<Vec<_>>())
                    .copied()
                    .unwrap_or(0);
                assert_eq!(
                    count_admissible_with_table(n, &gamma).unwrap(),
                    big(expect),
                    "n={n} gamma={gamma:?}"
                );
            }
        }
    }

    #[test]
    fn count_helpers() {
        assert_eq!(catalan(3), big(5));
        assert_eq!(fibonacci(7), big(13));
        assert_eq!(count_dyck(3), big(5));
        assert_eq!(binomial(6, 3), big(20));
        assert_eq!(binomial(3, 5), big(0));
        // Fibonacci values for the 321-avoiding smooth counts, n = 1..6
        let expect = [1u64, 2, 5, 13, 34, 89];
        for (i, &v) in expect.iter().enumerate() {
            assert_eq!(fibonacci(2 * (i + 1) - 1), big(v));
        }
    }
}
