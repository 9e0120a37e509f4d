//! The retraction from covexillary permutations onto smooth ones, its
//! brute-force oracle, and the constructive one-inversion ascent step that
//! realizes the retraction as a chain of covexillary permutations with a
//! common 2-3-table.

use crate::admissible::{AdmissibleSet, bruhat_maximum};
use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::tables::{is_covexillary, is_smooth, table_23};

/// π(C(τ)) for covexillary τ: the minimal smooth permutation above τ.
/// Idempotent and order preserving on covexillary permutations.
pub fn smooth_closure(tau: &Permutation) -> Result<Permutation> {
    if !is_covexillary(tau) {
        return Err(Error::NotCovexillary);
    }
    Ok(AdmissibleSet::new(table_23(tau))
        .expect("covexillary tables are admissible")
        .pi())
}

/// Result of the brute-force minimal-smooth-above search.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum MinSmoothAbove {
    Unique(Permutation),
    /// Two or more minimal smooth elements above the input.
    Multiple(Vec<Permutation>),
}

/// The minimal elements of `{σ smooth : σ ≥ τ}`, by exhaustive search over
/// S_n. For covexillary τ the result is `Unique(smooth_closure(τ))`.
pub fn min_smooth_above_oracle(tau: &Permutation) -> MinSmoothAbove {
    let n = tau.n();
    let above: Vec<Permutation> = Permutation::all(n)
        .filter(|s| is_smooth(s) && tau.bruhat_leq(s).unwrap())
        .collect();
    let mut minimal: Vec<Permutation> = above
        .iter()
        .filter(|s| !above.iter().any(|t| *t != **s && t.bruhat_leq(s).unwrap()))
        .cloned()
        .collect();
    minimal.sort();
    if minimal.len() == 1 {
        MinSmoothAbove::Unique(minimal.pop().unwrap())
    } else {
        MinSmoothAbove::Multiple(minimal)
    }
}

/// One ascent step for covexillary non-smooth τ: positions j < k such that
/// some i < j < k < l realizes `τ(l) < τ(j) < τ(k) < τ(i)`, the product
/// `τ·T(j,k)` is again covexillary, adds exactly one inversion, and has the
/// same 2-3-table as τ. Iterating reaches `smooth_closure(τ)`.
pub fn covex_ascent_step(tau: &Permutation) -> Result<(usize, usize)> {
    if !is_covexillary(tau) {
        return Err(Error::NotCovexillary);
    }
    if is_smooth(tau) {
        return Err(Error::SmoothInput);
    }

    // outer pair: minimal i, then maximal l, with a 4231 configuration inside
    let (i, l) = choose_outer_pair(tau).expect("covexillary non-smooth contains 4231");

    // ensure B1 = ∅, passing to the inverse if needed (inversion swaps
    // A0 ↔ B0 and A1 ↔ B1 and transports P through τ)
    let (rho, oi, ol, flipped) = if b1_empty(tau, i, l) {
        (tau.clone(), i, l, false)
    } else {
        (tau.inverse(), tau.apply(l), tau.apply(i), true)
    };
    debug_assert!(b1_empty(&rho, oi, ol));

    let p = p_set(&rho, oi, ol);
    debug_assert!(!p.is_empty());
    let a0: Vec<usize> =
        (1..oi).filter(|&a| rho.apply(ol) < rho.apply(a) && rho.apply(a) < rho.apply(oi)).collect();
    let a1: Vec<usize> = (ol + 1..=rho.n())
        .filter(|&a| rho.apply(ol) < rho.apply(a) && rho.apply(a) < rho.apply(oi))
        .collect();
    let p0: Vec<(usize, usize)> = p
        .iter()
        .copied()
        .filter(|&(j, _)| a0.iter().all(|&a| rho.apply(j) > rho.apply(a)))
        .collect();
    let p1: Vec<(usize, usize)> = p
        .iter()
        .copied()
        .filter(|&(_, k)| a1.iter().all(|&a| rho.apply(k) < rho.apply(a)))
        .collect();

    let (j, k) = if !p0.is_empty() {
        // lexicographically minimal, left to right
        *p0.iter().min().unwrap()
    } else if !p1.is_empty() {
        // lexicographically maximal, right to left
        *p1.iter().max_by_key(|&&(j, k)| (k, j)).unwrap()
    } else {
        // j maximal, then k minimal for that j
        let jmax = p.iter().map(|&(j, _)| j).max().unwrap();
        let kmin = p.iter().filter(|&&(j, _)| j == jmax).map(|&(_, k)| k).min().unwrap();
        (jmax, kmin)
    };

    let (j, k) = if flipped { (rho.apply(j), rho.apply(k)) } else { (j, k) };
    debug_assert!(j < k);

    let next = tau.right_mul_transposition(j, k);
    assert!(
        is_covexillary(&next),
        "ascent step from {tau} chose T({j},{k}) but {next} is not covexillary; this is a bug"
    );
    debug_assert_eq!(next.length(), tau.length() + 1);
    debug_assert_eq!(table_23(&next), table_23(tau));
    Ok((j, k))
}

/// The full ascent chain from covexillary τ to its smooth closure,
/// inclusive on both ends. Each consecutive pair differs by one inversion
/// and all entries share the 2-3-table of τ.
pub fn ascend_to_smooth(tau: &Permutation) -> Result<Vec<Permutation>> {
    if !is_covexillary(tau) {
        return Err(Error::NotCovexillary);
    }
    let mut chain = vec![tau.clone()];
    let mut current = tau.clone();
    while !is_smooth(&current) {
        let (j, k) = covex_ascent_step(&current)?;
        current = current.right_mul_transposition(j, k);
        chain.push(current.clone());
    }
    Ok(chain)
}

fn choose_outer_pair(tau: &Permutation) -> Option<(usize, usize)> {
    let n = tau.n();
    for i in 1..=n {
        for l in (i + 3..=n).rev() {
            if !p_set(tau, i, l).is_empty() {
                return Some((i, l));
            }
        }
    }
    None
}

fn p_set(tau: &Permutation, i: usize, l: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for j in i + 1..l {
        if !(tau.apply(l) < tau.apply(j) && tau.apply(j) < tau.apply(i)) {
            continue;
        }
        for k in j + 1..l {
            if tau.apply(j) < tau.apply(k) && tau.apply(k) < tau.apply(i) {
                out.push((j, k));
            }
        }
    }
    out
}

fn b1_empty(tau: &Permutation, i: usize, l: usize) -> bool {
    let inv = tau.inverse();
    !(tau.apply(i) + 1..=tau.n()).any(|b| i < inv.apply(b) && inv.apply(b) < l)
}

/// Oracle helper: all smooth permutations with the given 2-table.
/// Exhaustive over S_n.
pub fn smooth_with_same_t_table(tau: &Permutation) -> Vec<Permutation> {
    let t = crate::tables::table_t(tau);
    Permutation::all(tau.n())
        .filter(|s| is_smooth(s) && crate::tables::table_t(s) == t)
        .collect()
}

/// Re-exported for tests: Bruhat maximum over a list (None when absent).
pub fn maximum_of(perms: &[Permutation]) -> Option<Permutation> {
    bruhat_maximum(perms)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn closure_examples() {
        assert_eq!(smooth_closure(&p("231")).unwrap(), p("231"));
        assert_eq!(smooth_closure(&p("4231")).unwrap(), p("4321"));
        let e = Permutation::identity(4);
        assert_eq!(smooth_closure(&e).unwrap(), e);
        assert_eq!(smooth_closure(&p("3412")), Err(Error::NotCovexillary));
    }

    #[test]
    fn oracle_examples() {
        assert_eq!(
            min_smooth_above_oracle(&p("3412")),
            MinSmoothAbove::Multiple(vec![p("3421"), p("4312")])
        );
        assert_eq!(min_smooth_above_oracle(&p("4231")), MinSmoothAbove::Unique(p("4321")));
        assert_eq!(min_smooth_above_oracle(&p("231")), MinSmoothAbove::Unique(p("231")));
    }

    #[test]
    fn ascent_examples() {
        assert_eq!(covex_ascent_step(&p("4231")).unwrap(), (2, 3));
        let chain = ascend_to_smooth(&p("4231")).unwrap();
        assert_eq!(chain, vec![p("4231"), p("4321")]);
        assert_eq!(covex_ascent_step(&p("231")), Err(Error::SmoothInput));
        assert_eq!(covex_ascent_step(&p("3412")), Err(Error::NotCovexillary));
    }

    #[test]
    fn ascent_chain_properties_s5() {
        for tau in Permutation::all(5) {
            if !is_covexillary(&tau) || is_smooth(&tau) {
                continue;
            }
            let chain = ascend_to_smooth(&tau).unwrap();
            let closure = smooth_closure(&tau).unwrap();
            assert_eq!(*chain.last().unwrap(), closure);
            assert_eq!(chain.len(), closure.length() - tau.length() + 1);
            for w in chain.windows(2) {
                assert_eq!(w[1].length(), w[0].length() + 1);
                assert!(is_covexillary(&w[1]));
                assert_eq!(table_23(&w[1]), table_23(&tau));
            }
        }
    }

    #[test]
    fn ascent_step_agrees_with_feasibility_scan() {
        // the constructive choice must land in the brute-force feasible set:
        // pairs (j,k) inside some crossing configuration whose swap stays
        // covexillary
        for n in 4..=5 {
            for tau in Permutation::all(n) {
                if !is_covexillary(&tau) || is_smooth(&tau) {
                    continue;
                }
                let feasible: Vec<(usize, usize)> = (1..=n)
                    .flat_map(|j| (j + 1..=n).map(move |k| (j, k)))
                    .filter(|&(j, k)| {
                        let crossing = (1..j).any(|i| {
                            (k + 1..=n).any(|l| {
                                tau.apply(l) < tau.apply(j)
                                    && tau.apply(j) < tau.apply(k)
                                    && tau.apply(k) < tau.apply(i)
                            })
                        });
                        crossing && is_covexillary(&tau.right_mul_transposition(j, k))
                    })
                    .collect();
                assert!(!feasible.is_empty(), "{tau}");
                let chosen = covex_ascent_step(&tau).unwrap();
                assert!(feasible.contains(&chosen), "{tau} chose {chosen:?}");
            }
        }
    }

    #[test]
    fn table_obstruction_example() {
        // no smooth permutation with the 2-table of (462513) lies above it
        let tau = p("462513");
        let same = smooth_with_same_t_table(&tau);
        let mut sorted = same.clone();
        sorted.sort();
        assert_eq!(sorted, vec![p("456321"), p("654123")]);
        assert!(same.iter().all(|s| !tau.bruhat_leq(s).unwrap()));
    }

    #[test]
    fn admissible_but_incomparable_example() {
        // C((345612)) is admissible and (345612) <= (654312), yet the
        // closure (345621) is not below (654312)
        let tau = p("345612");
        let sigma = p("654312");
        let a = AdmissibleSet::new(table_23(&tau)).unwrap();
        assert!(tau.bruhat_leq(&sigma).unwrap());
        assert!(is_smooth(&sigma));
        assert_eq!(a.pi(), p("345621"));
        assert!(!a.pi().bruhat_leq(&sigma).unwrap());
    }
}
