//! The exhaustive verification harness driven by `smoothperm verify`.
//!
//! Each suite checks one named suite of properties over all relevant
//! objects up to the requested n (individual checks carry their own caps
//! where pair sweeps would explode) and reports case counts and
//! counterexamples.

use std::time::Instant;

use num_bigint::BigUint;

use smoothperm::admissible::AdmissibleSet;
use smoothperm::covexillary::{
    ascend_to_smooth, min_smooth_above_oracle, smooth_closure, smooth_with_same_t_table,
    MinSmoothAbove,
};
use smoothperm::dyck::{all_decorated_paths, decorations_of, DecoratedPath};
use smoothperm::enumeration::{self, ClassMethod, CountMethod, PermClass};
use smoothperm::essential::{
    admissible_from_grid, bruhat_leq_via_essential, coessential_core, enumerate_grid_class,
    essential_set, grid_from_path, path_from_grid,
};
use smoothperm::partitions::{partition_max, witness_partition, Partition, PartitionMax};
use smoothperm::perm::{factorial, Permutation};
use smoothperm::tables::{is_covexillary, is_smooth, table_23};

/// Outcome of one verification suite.
#[derive(Clone, Debug)]
pub struct VerificationReport {
    pub theorem: String,
    pub n_max: usize,
    pub cases: u64,
    pub failures: Vec<String>,
    pub seconds: f64,
}

impl VerificationReport {
    pub fn pass(&self) -> bool {
        self.failures.is_empty()
    }
}

const MAX_RECORDED_FAILURES: usize = 8;

struct Recorder {
    cases: u64,
    failures: Vec<String>,
}

impl Recorder {
    fn new() -> Self {
        Recorder { cases: 0, failures: Vec::new() }
    }

    fn check(&mut self, ok: bool, witness: impl Fn() -> String) {
        self.cases += 1;
        if !ok && self.failures.len() < MAX_RECORDED_FAILURES {
            self.failures.push(witness());
        }
    }

    fn into_report(self, theorem: &str, n_max: usize, started: Instant) -> VerificationReport {
        VerificationReport {
            theorem: theorem.to_string(),
            n_max,
            cases: self.cases,
            failures: self.failures,
            seconds: started.elapsed().as_secs_f64(),
        }
    }
}

/// Splits 0..n! into `jobs` lexicographic chunks and folds `check` over
/// each permutation; failure strings are merged in chunk order so output
/// does not depend on scheduling.
fn sweep_perms(
    n: usize,
    jobs: usize,
    check: impl Fn(&Permutation) -> Vec<String> + Sync,
) -> (u64, Vec<String>) {
    let total = factorial(n);
    let jobs = jobs.max(1).min(total as usize).max(1);
    let chunk = total.div_ceil(jobs as u64);
    let results: Vec<(u64, Vec<String>)> = std::thread::scope(|scope| {
        let mut handles = Vec::new();
        for w in 0..jobs as u64 {
            let check = &check;
            let lo = w * chunk;
            let hi = ((w + 1) * chunk).min(total);
            handles.push(scope.spawn(move || {
                let mut cases = 0u64;
                let mut failures = Vec::new();
                if lo < hi {
                    let mut sigma = Permutation::from_lex_rank(n, lo);
                    let mut rank = lo;
                    loop {
                        cases += 1;
                        if failures.len() < MAX_RECORDED_FAILURES {
                            failures.extend(check(&sigma));
                        }
                        rank += 1;
                        if rank >= hi {
                            break;
                        }
                        sigma = Permutation::from_lex_rank(n, rank);
                    }
                }
                (cases, failures)
            }));
        }
        handles.into_iter().map(|h| h.join().expect("worker panicked")).collect()
    });
    let mut cases = 0;
    let mut failures = Vec::new();
    for (c, f) in results {
        cases += c;
        failures.extend(f);
    }
    failures.truncate(MAX_RECORDED_FAILURES);
    (cases, failures)
}

/// Suite 1.1: the 2-3-table is a bijection onto admissible sets, with the
/// brute-force maximum as inverse.
pub fn verify_bijection(n_max: usize, jobs: usize) -> VerificationReport {
    let started = Instant::now();
    let mut rec = Recorder::new();
    for n in 1..=n_max {
        let (cases, failures) = sweep_perms(n, jobs, |sigma| {
            let mut bad = Vec::new();
            if is_smooth(sigma) {
                match AdmissibleSet::new(table_23(sigma)) {
                    Ok(a) => {
                        if a.pi() != *sigma {
                            bad.push(format!("pi(C({sigma})) != {sigma}"));
                        }
                    }
                    Err(e) => bad.push(format!("C({sigma}) not admissible: {e}")),
                }
            }
            bad
        });
        rec.cases += cases;
        rec.failures.extend(failures);

        let admissible = AdmissibleSet::enumerate(n);
        let smooth_count = enumeration::count_smooth(n, CountMethod::Patterns);
        rec.check(
            smooth_count == enumeration::count_smooth(n, CountMethod::Paths),
            || format!("n={n}: smooth count disagrees with path count"),
        );
        rec.check(admissible.len() == all_decorated_paths(n).len(), || {
            format!("n={n}: #admissible != #paths")
        });
        rec.check(admissible.len() == enumerate_grid_class(n).len(), || {
            format!("n={n}: #admissible != #grids")
        });
        rec.check(smooth_count == BigUint::from(admissible.len()), || {
            format!("n={n}: #smooth != #admissible")
        });
        for a in &admissible {
            rec.check(table_23(&a.pi()) == *a.table(), || format!("C(pi(A)) != A at {a:?}"));
            if n <= 5 {
                rec.check(a.pi_oracle().map(|m| m == a.pi()).unwrap_or(false), || {
                    format!("pi oracle disagrees at {a:?}")
                });
            }
        }
    }
    rec.into_report("1.1", n_max, started)
}

/// Suite 1.2: compatible orders exist, all give the same product, and the
/// elementary-move graph is connected. Order enumeration is capped at n=5.
pub fn verify_compatible_orders(n_max: usize, _jobs: usize) -> VerificationReport {
    let started = Instant::now();
    let mut rec = Recorder::new();
    for n in 1..=n_max.min(5) {
        for a in AdmissibleSet::enumerate(n) {
            let sigma = a.pi();
            let orders = a.enumerate_compatible_orders();
            rec.check(!orders.is_empty(), || format!("no compatible order for {a:?}"));
            for order in &orders {
                rec.check(a.is_compatible_order(order), || {
                    format!("enumerated order not compatible: {order}")
                });
                rec.check(order.product(n) == sigma, || {
                    format!("product variance at {a:?}: {order}")
                });
            }
            rec.check(a.compat_graph_connected(), || format!("move graph split at {a:?}"));
        }
    }
    if n_max >= 4 {
        let full4 = AdmissibleSet::full(4);
        rec.check(full4.enumerate_compatible_orders().len() == 16, || {
            "full set at n=4 must have 16 compatible orders".to_string()
        });
    }
    rec.into_report("1.2", n_max, started)
}

/// Suite 1.3: smooth permutations admit blockwise maxima over every
/// partition; non-smooth ones are defeated by a certified witness.
pub fn verify_partition_maxima(n_max: usize, jobs: usize) -> VerificationReport {
    let started = Instant::now();
    let mut rec = Recorder::new();
    for n in 1..=n_max {
        let partitions = Partition::all(n);
        let (cases, failures) = sweep_perms(n, jobs, |sigma| {
            let mut bad = Vec::new();
            if is_smooth(sigma) {
                for part in &partitions {
                    match partition_max(sigma, part) {
                        PartitionMax::Maximum(m) => {
                            let smooth_components = part
                                .components(&m)
                                .map(|cs| cs.iter().all(is_smooth))
                                .unwrap_or(false);
                            if !smooth_components {
                                bad.push(format!(
                                    "maximum of {sigma} over {part} has a non-smooth component"
                                ));
                            }
                        }
                        PartitionMax::NoMaximum { .. } => {
                            bad.push(format!("smooth {sigma} has no maximum over {part}"))
                        }
                    }
                }
            } else if witness_partition(sigma).is_err() {
                bad.push(format!("no witness partition for non-smooth {sigma}"));
            }
            bad
        });
        // smooth permutations contribute one case per partition, the rest
        // one witness each
        let smooth = u64::try_from(&enumeration::count_smooth(n, CountMethod::Recurrence))
            .expect("small n");
        rec.cases += smooth * partitions.len() as u64 + (cases - smooth);
        rec.failures.extend(failures);
        rec.failures.truncate(MAX_RECORDED_FAILURES);
    }
    rec.into_report("1.3", n_max, started)
}

/// Suite 1.4: decorated paths biject with smooth permutations through a
/// reduced product of interval cycles, and the path flags classify the
/// subclasses with their closed-form counts.
pub fn verify_dyck_bijection(n_max: usize, _jobs: usize) -> VerificationReport {
    let started = Instant::now();
    let mut rec = Recorder::new();
    let pat231: Permutation = "231".parse().unwrap();
    let pat321: Permutation = "321".parse().unwrap();
    for n in 1..=n_max {
        let mut images = Vec::new();
        for path in all_decorated_paths(n) {
            let (sigma, word) = path.sigma();
            rec.check(is_smooth(&sigma), || format!("sigma({path}) not smooth"));
            rec.check(word.len() == sigma.length(), || format!("word not reduced at {path}"));
            rec.check(sigma == path.to_admissible().pi(), || {
                format!("sigma({path}) != pi(A(path))")
            });
            let flags = path.classify();
            rec.check(flags.avoids_231 == !sigma.contains_pattern(&pat231), || {
                format!("231 flag wrong at {path}")
            });
            rec.check(flags.avoids_321 == !sigma.contains_pattern(&pat321), || {
                format!("321 flag wrong at {path}")
            });
            rec.check(flags.indecomposable == sigma.is_indecomposable(), || {
                format!("indecomposable flag wrong at {path}")
            });
            let (inv, _) = path.inverse_decoration().sigma();
            rec.check(inv == sigma.inverse(), || format!("inverse decoration at {path}"));
            images.push(sigma);
        }
        images.sort();
        images.dedup();
        rec.check(
            BigUint::from(images.len())
                == enumeration::count_smooth(n, CountMethod::Recurrence),
            || format!("n={n}: path images miss some smooth permutation"),
        );
        // decoration counting formula against generation
        for f in smoothperm::dyck::all_f_vectors(n) {
            rec.check(
                decorations_of(&f).len() as u64 == smoothperm::dyck::count_decorations(&f),
                || format!("decoration count at f={f:?}"),
            );
        }
        for class in [PermClass::Avoid231, PermClass::Avoid321, PermClass::Indecomposable] {
            rec.check(
                enumeration::count_class(n, class, ClassMethod::Formula)
                    == enumeration::count_class(n, class, ClassMethod::Paths),
                || format!("n={n}: {class:?} formula vs paths"),
            );
        }
    }
    rec.check(
        enumeration::indecomposable_series_satisfies_equation(
            &enumeration::series_indecomposable(30),
        ),
        || "indecomposable generating function equation fails".to_string(),
    );
    rec.check(
        enumeration::smooth_series_satisfies_equation(&enumeration::series_smooth(30)),
        || "smooth generating function equation fails".to_string(),
    );
    rec.into_report("1.4", n_max, started)
}

/// Suite 1.5: the covexillary-to-smooth map is an idempotent,
/// order-preserving retraction onto the minimal smooth element above, with
/// a constructive one-inversion ascent.
pub fn verify_covexillary_retraction(n_max: usize, _jobs: usize) -> VerificationReport {
    let started = Instant::now();
    let mut rec = Recorder::new();
    for n in 1..=n_max {
        let covex: Vec<Permutation> =
            Permutation::all(n).filter(is_covexillary).collect();
        let closures: Vec<Permutation> =
            covex.iter().map(|t| smooth_closure(t).unwrap()).collect();
        for (tau, closure) in covex.iter().zip(&closures) {
            rec.check(is_smooth(closure), || format!("closure of {tau} not smooth"));
            rec.check(tau.bruhat_leq(closure).unwrap(), || format!("closure below {tau}"));
            rec.check(smooth_closure(closure).unwrap() == *closure, || {
                format!("closure not idempotent at {tau}")
            });
            rec.check(
                min_smooth_above_oracle(tau) == MinSmoothAbove::Unique(closure.clone()),
                || format!("closure of {tau} is not the unique minimum"),
            );
            let chain = ascend_to_smooth(tau).unwrap();
            rec.check(
                chain.last() == Some(closure)
                    && chain.len() == closure.length() - tau.length() + 1,
                || format!("ascent chain wrong at {tau}"),
            );
        }
        for (a, ca) in covex.iter().zip(&closures) {
            for (b, cb) in covex.iter().zip(&closures) {
                if a.bruhat_leq(b).unwrap() {
                    rec.check(ca.bruhat_leq(cb).unwrap(), || {
                        format!("order preservation fails at {a} <= {b}")
                    });
                }
            }
        }
    }
    if n_max >= 4 {
        rec.check(
            min_smooth_above_oracle(&"3412".parse().unwrap())
                == MinSmoothAbove::Multiple(vec![
                    "3421".parse().unwrap(),
                    "4312".parse().unwrap(),
                ]),
            || "(3412) must have two minimal smooth elements above".to_string(),
        );
    }
    if n_max >= 6 {
        let tau: Permutation = "345612".parse().unwrap();
        let sigma: Permutation = "654312".parse().unwrap();
        let a = AdmissibleSet::new(table_23(&tau)).expect("C((345612)) admissible");
        rec.check(
            tau.bruhat_leq(&sigma).unwrap() && !a.pi().bruhat_leq(&sigma).unwrap(),
            || "(345612)/(654312) incomparability control failed".to_string(),
        );
        let tau: Permutation = "462513".parse().unwrap();
        let mut same = smooth_with_same_t_table(&tau);
        same.sort();
        rec.check(
            same == vec!["456321".parse().unwrap(), "654123".parse().unwrap()]
                && same.iter().all(|s| !tau.bruhat_leq(s).unwrap()),
            || "(462513) obstruction control failed".to_string(),
        );
    }
    rec.into_report("1.5", n_max, started)
}

/// Suite 1.6: essential sets of smooth permutations are exactly the grid
/// class, the coessential core agrees on smooth inputs, the diagram with
/// paths and admissible sets commutes, and restricted rank comparison
/// recovers the Bruhat order.
pub fn verify_essential_sets(n_max: usize, jobs: usize) -> VerificationReport {
    let started = Instant::now();
    let mut rec = Recorder::new();
    for n in 1..=n_max {
        let (cases, failures) = sweep_perms(n, jobs, |sigma| {
            let mut bad = Vec::new();
            let core = coessential_core(sigma);
            // comparable core points strictly increase in max and min
            for &(i1, j1) in core.points() {
                for &(i2, j2) in core.points() {
                    if (i1, j1) != (i2, j2)
                        && i2 >= i1
                        && j2 >= j1
                        && (i2.max(j2) <= i1.max(j1) || i2.min(j2) <= i1.min(j1))
                    {
                        bad.push(format!("core points of {sigma} fail to increase"));
                    }
                }
            }
            if is_smooth(sigma) {
                if essential_set(sigma) != core {
                    bad.push(format!("essential != coessential at smooth {sigma}"));
                }
                let path = DecoratedPath::from_admissible(
                    &AdmissibleSet::new(table_23(sigma)).unwrap(),
                );
                if grid_from_path(&path) != core {
                    bad.push(format!("diagram breaks at {sigma}"));
                }
            }
            bad
        });
        rec.cases += cases;
        rec.failures.extend(failures);
        rec.failures.truncate(MAX_RECORDED_FAILURES);

        let class = enumerate_grid_class(n);
        let mut images: Vec<_> = Permutation::all(n)
            .filter(is_smooth)
            .map(|s| essential_set(&s))
            .collect();
        images.sort();
        rec.check(images.windows(2).all(|w| w[0] != w[1]), || {
            format!("n={n}: essential sets collide on smooth permutations")
        });
        rec.check(images == class, || format!("n={n}: image differs from grid class"));
        for grid in &class {
            let path = path_from_grid(grid).unwrap();
            rec.check(grid_from_path(&path) == *grid, || format!("grid round trip {grid:?}"));
            rec.check(
                admissible_from_grid(grid).map(|a| a == path.to_admissible()).unwrap_or(false),
                || format!("grid/admissible mismatch at {grid:?}"),
            );
            let sigma = path.sigma().0;
            rec.check(coessential_core(&sigma) == *grid, || {
                format!("inverse map fails at {grid:?}")
            });
        }
        if n <= 5 {
            for tau in Permutation::all(n) {
                for sigma in Permutation::all(n) {
                    rec.check(
                        bruhat_leq_via_essential(&tau, &sigma).unwrap()
                            == tau.bruhat_leq(&sigma).unwrap(),
                        || format!("essential comparison at {tau} vs {sigma}"),
                    );
                }
            }
        }
        if n <= 4 {
            // minimality: no essential point can be dropped
            let all: Vec<Permutation> = Permutation::all(n).collect();
            for sigma in &all {
                let rs = sigma.rank_table();
                let full = essential_set(sigma);
                for &drop in full.points() {
                    let reduced: Vec<(usize, usize)> =
                        full.points().iter().copied().filter(|&q| q != drop).collect();
                    rec.check(
                        all.iter().any(|tau| {
                            let rt = tau.rank_table();
                            reduced.iter().all(|&(i, j)| rt.get(i, j) >= rs.get(i, j))
                                != tau.bruhat_leq(sigma).unwrap()
                        }),
                        || format!("essential point {drop:?} of {sigma} is redundant"),
                    );
                }
            }
        }
    }
    rec.into_report("1.6", n_max, started)
}

type Suite = fn(usize, usize) -> VerificationReport;

pub fn run_suites(
    selector: &str,
    n_max: usize,
    jobs: usize,
) -> Result<Vec<VerificationReport>, String> {
    let all: [(&str, Suite); 6] = [
        ("1.1", verify_bijection),
        ("1.2", verify_compatible_orders),
        ("1.3", verify_partition_maxima),
        ("1.4", verify_dyck_bijection),
        ("1.5", verify_covexillary_retraction),
        ("1.6", verify_essential_sets),
    ];
    if selector == "all" {
        return Ok(all.iter().map(|(_, f)| f(n_max, jobs)).collect());
    }
    match all.iter().find(|(id, _)| *id == selector) {
        Some((_, f)) => Ok(vec![f(n_max, jobs)]),
        None => Err(format!(
            "unknown theorem {selector:?}; expected one of 1.1, 1.2, 1.3, 1.4, 1.5, 1.6 or all"
        )),
    }
}

/// Rough upper bound on the permutation sweeps a full run would touch,
/// printed when the default n cap is overridden.
pub fn estimated_cases(n_max: usize) -> u64 {
    (1..=n_max).map(factorial).sum::<u64>().saturating_mul(2)
}

/// Counts permutations satisfying a predicate, fanned out over
/// lexicographic chunks of S_n. The result is independent of the worker
/// count.
pub fn count_perms_parallel(
    n: usize,
    jobs: usize,
    pred: impl Fn(&Permutation) -> bool + Sync,
) -> u64 {
    let total = factorial(n);
    let jobs = jobs.max(1).min(total as usize).max(1);
    let chunk = total.div_ceil(jobs as u64);
    let counts: Vec<u64> = std::thread::scope(|scope| {
        let mut handles = Vec::new();
        for w in 0..jobs as u64 {
            let pred = &pred;
            let lo = w * chunk;
            let hi = ((w + 1) * chunk).min(total);
            handles.push(scope.spawn(move || {
                let mut count = 0u64;
                for rank in lo..hi {
                    if pred(&Permutation::from_lex_rank(n, rank)) {
                        count += 1;
                    }
                }
                count
            }));
        }
        handles.into_iter().map(|h| h.join().expect("worker panicked")).collect()
    });
    counts.into_iter().sum()
}
