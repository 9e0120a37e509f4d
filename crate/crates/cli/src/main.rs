//! Command-line interface: classification, tables, the bijections between
//! smooth permutations / admissible sets / decorated paths / grid sets,
//! enumeration, and the exhaustive verification harness.
//!
//! Exit codes: 0 success, 1 usage error, 2 invalid input,
//! 3 verification failure.

#![forbid(unsafe_code)]

mod render;
mod verify;

use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use smoothperm::admissible::{AdmissibleSet, CompatibleOrder};
use smoothperm::covexillary::{ascend_to_smooth, covex_ascent_step, smooth_closure};
use smoothperm::dyck::DecoratedPath;
use smoothperm::enumeration::{self, ClassMethod, CountMethod, PermClass};
use smoothperm::essential::{coessential_core, essential_set, path_from_grid, GridSet};
use smoothperm::partitions::{partition_max, Partition, PartitionMax};
use smoothperm::perm::Permutation;
use smoothperm::tables::{
    is_covexillary, is_defined_by_inclusions, is_smooth, reconstruct_d_from_c, table_23,
    table_d, table_t, Table23,
};

#[derive(Parser)]
#[command(name = "smoothperm", version, about = "Bruhat-order combinatorics of smooth permutations")]
struct Cli {
    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Worker threads for exhaustive sweeps (0 = available parallelism)
    #[arg(long, global = true, default_value_t = 0)]
    jobs: usize,
    /// Reserved; all operations are deterministic
    #[arg(long, global = true)]
    seed: Option<u64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Classification flags of a permutation
    Classify {
        /// One-line notation, e.g. "2,3,1" or "231"
        perm: String,
    },
    /// Tables of a permutation
    Table {
        perm: String,
        /// Which table to print
        #[arg(long, value_enum)]
        which: WhichTable,
    },
    /// The smooth permutation encoded by an admissible set
    Pi {
        #[command(flatten)]
        set: SetInput,
        /// Also print a compatible order
        #[arg(long)]
        order: bool,
        /// Also print a reduced word in adjacent transpositions
        #[arg(long)]
        word: bool,
    },
    /// Compatible orders of an admissible set
    Compat {
        #[command(flatten)]
        set: SetInput,
        /// Enumerate all compatible orders instead of printing one
        #[arg(long)]
        enumerate: bool,
        /// Check a candidate order, e.g. "T(1,2) < T(2,3)"
        #[arg(long)]
        check: Option<String>,
    },
    /// Decorated Dyck path encoding of smooth permutations
    Dyck {
        #[command(subcommand)]
        action: DyckAction,
    },
    /// Essential and coessential sets
    Essential {
        #[command(subcommand)]
        action: EssentialAction,
    },
    /// Count smooth permutations and subclasses
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = ClassArg::Smooth)]
        class: ClassArg,
        /// Counting method; all applicable methods when omitted
        #[arg(long, value_enum)]
        method: Option<MethodArg>,
        /// Print the whole series up to n instead of a single count
        #[arg(long)]
        series: bool,
    },
    /// Run the exhaustive verification suites
    Verify {
        /// Largest n to sweep (default 6; larger values print an estimate)
        #[arg(long, default_value_t = 6)]
        n: usize,
        /// Run every suite
        #[arg(long)]
        all: bool,
        /// Run one suite: 1.1, 1.2, 1.3, 1.4, 1.5 or 1.6
        #[arg(long)]
        theorem: Option<String>,
    },
    /// Blockwise maximum of the interval below a permutation
    #[command(name = "partition-max")]
    PartitionMax {
        perm: String,
        /// Blocks separated by '|', elements by ',', e.g. "1,3,4|2|5"
        partition: String,
    },
    /// Minimal smooth permutation above a covexillary one
    Closure { perm: String },
    /// Covexillary ascent step(s) toward the smooth closure
    Ascend {
        perm: String,
        /// Print the whole chain instead of a single step
        #[arg(long)]
        trace: bool,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum WhichTable {
    T,
    C23,
    D,
    Dspcl,
    /// D reconstructed from the 2-3-table (covexillary inputs)
    DFromC,
    Essential,
    Coessential,
}

#[derive(Subcommand)]
enum DyckAction {
    /// Smooth permutation -> decorated path
    Encode {
        perm: String,
        #[arg(long)]
        render: bool,
    },
    /// Decorated path -> smooth permutation
    Decode {
        /// "f=2,3,3; g=1,0,0" (g optional, defaults to zero)
        path: String,
        #[arg(long)]
        render: bool,
    },
}

#[derive(Subcommand)]
enum EssentialAction {
    /// Essential and coessential sets of a permutation
    Of {
        perm: String,
        #[arg(long)]
        render: bool,
    },
    /// Smooth permutation attached to a grid in the admissible class
    Decode {
        /// Points "i,j" separated by spaces or semicolons; empty for none
        grid: String,
        #[arg(long)]
        n: usize,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ClassArg {
    Smooth,
    Avoid231,
    Avoid321,
    Indecomposable,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    Patterns,
    Paths,
    Recurrence,
}

#[derive(Args)]
struct SetInput {
    /// Set file: "n=<n>" header then one element per line (or JSON)
    #[arg(long, conflicts_with_all = ["elems", "n"])]
    file: Option<PathBuf>,
    /// Inline elements, e.g. "T(1,2) T(2,3) R(1,2,3)" (may be empty)
    #[arg(long, requires = "n")]
    elems: Option<String>,
    /// Ambient n for --elems
    #[arg(long)]
    n: Option<usize>,
}

enum CliError {
    Usage(String),
    Invalid(String),
    VerifyFailed,
}

impl From<smoothperm::Error> for CliError {
    fn from(e: smoothperm::Error) -> Self {
        CliError::Invalid(e.to_string())
    }
}

impl SetInput {
    fn load(&self) -> Result<AdmissibleSet, CliError> {
        if let Some(path) = &self.file {
            let text = std::fs::read_to_string(path)
                .map_err(|e| CliError::Invalid(format!("cannot read {}: {e}", path.display())))?;
            let set = if text.trim_start().starts_with('{') {
                AdmissibleSet::from_json(&text)?
            } else {
                AdmissibleSet::from_text(&text)?
            };
            return Ok(set);
        }
        match (&self.elems, self.n) {
            (Some(elems), Some(n)) => {
                let mut parsed = std::collections::BTreeSet::new();
                for token in elems.split([' ', ';']).filter(|t| !t.trim().is_empty()) {
                    parsed.insert(token.trim().parse::<smoothperm::CycleElem>()?);
                }
                Ok(AdmissibleSet::from_elems(n, parsed)?)
            }
            _ => Err(CliError::Usage(
                "provide either --file or --elems together with --n".to_string(),
            )),
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = e.print();
                return ExitCode::SUCCESS;
            }
            eprintln!("{e}");
            return ExitCode::from(1);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Usage(msg)) => {
            eprintln!("usage error: {msg}");
            ExitCode::from(1)
        }
        Err(CliError::Invalid(msg)) => {
            eprintln!("invalid input: {msg}");
            ExitCode::from(2)
        }
        Err(CliError::VerifyFailed) => ExitCode::from(3),
    }
}

fn parse_perm(s: &str) -> Result<Permutation, CliError> {
    Permutation::from_str(s).map_err(|e| CliError::Invalid(e.to_string()))
}

fn run(cli: Cli) -> Result<(), CliError> {
    let jobs = if cli.jobs == 0 {
        std::thread::available_parallelism().map(|p| p.get()).unwrap_or(1)
    } else {
        cli.jobs
    };
    let format = cli.format;
    match cli.command {
        Command::Classify { perm } => {
            let sigma = parse_perm(&perm)?;
            let flags = [
                ("smooth", is_smooth(&sigma)),
                ("covexillary", is_covexillary(&sigma)),
                ("dbi", is_defined_by_inclusions(&sigma)),
                ("indecomposable", sigma.is_indecomposable()),
            ];
            match format {
                Format::Text => {
                    let line: Vec<String> = flags
                        .iter()
                        .map(|(k, v)| format!("{k}:{}", if *v { "yes" } else { "no" }))
                        .collect();
                    println!("{}", line.join(" "));
                }
                Format::Json => {
                    let mut obj = serde_json::Map::new();
                    obj.insert("perm".into(), json!(sigma.to_string()));
                    for (k, v) in flags {
                        obj.insert(k.into(), json!(v));
                    }
                    println!("{}", Value::Object(obj));
                }
            }
        }
        Command::Table { perm, which } => {
            let sigma = parse_perm(&perm)?;
            let (text, json_value): (String, Value) = match which {
                WhichTable::T => {
                    let t = Table23::new(sigma.n(), table_t(&sigma))
                        .expect("2-table is in range");
                    (t.to_text(), parse_json(&t.to_json()))
                }
                WhichTable::C23 => {
                    let t = table_23(&sigma);
                    (t.to_text(), parse_json(&t.to_json()))
                }
                WhichTable::D | WhichTable::Dspcl => {
                    if which == WhichTable::D && sigma.n() > 16 {
                        return Err(CliError::Invalid(
                            "full cycle tables are exponential in n; limited to n <= 16".into(),
                        ));
                    }
                    let t = table_d(&sigma, which == WhichTable::Dspcl);
                    let elems: Vec<String> = t.iter().map(|c| c.to_string()).collect();
                    (t.to_text(), json!({ "n": t.n(), "elems": elems }))
                }
                WhichTable::DFromC => {
                    if sigma.n() > 16 {
                        return Err(CliError::Invalid(
                            "full cycle tables are exponential in n; limited to n <= 16".into(),
                        ));
                    }
                    let t = reconstruct_d_from_c(&sigma)?;
                    let elems: Vec<String> = t.iter().map(|c| c.to_string()).collect();
                    (t.to_text(), json!({ "n": t.n(), "elems": elems }))
                }
                WhichTable::Essential => {
                    let g = essential_set(&sigma);
                    (g.to_text(), parse_json(&g.to_json()))
                }
                WhichTable::Coessential => {
                    let g = coessential_core(&sigma);
                    (g.to_text(), parse_json(&g.to_json()))
                }
            };
            match format {
                Format::Text => print!("{text}"),
                Format::Json => println!("{json_value}"),
            }
        }
        Command::Pi { set, order, word } => {
            let a = set.load()?;
            let sigma = a.pi();
            let compat = order.then(|| a.compatible_order());
            let reduced = word.then(|| DecoratedPath::from_admissible(&a).sigma().1);
            match format {
                Format::Text => {
                    println!("{sigma}");
                    if let Some(o) = compat {
                        println!("order: {o}");
                    }
                    if let Some(w) = reduced {
                        let parts: Vec<String> =
                            w.iter().map(|a| format!("s{a}")).collect();
                        println!("word: {}", parts.join(" "));
                    }
                }
                Format::Json => {
                    let mut obj = serde_json::Map::new();
                    obj.insert("perm".into(), json!(sigma.to_string()));
                    if let Some(o) = compat {
                        obj.insert("order".into(), order_to_json(&o));
                    }
                    if let Some(w) = reduced {
                        obj.insert("word".into(), json!(w));
                    }
                    println!("{}", Value::Object(obj));
                }
            }
        }
        Command::Compat { set, enumerate, check } => {
            let a = set.load()?;
            if let Some(candidate) = check {
                let order = parse_order(&candidate)?;
                let ok = a.is_compatible_order(&order);
                match format {
                    Format::Text => println!("compatible: {}", if ok { "yes" } else { "no" }),
                    Format::Json => println!("{}", json!({ "compatible": ok })),
                }
            } else if enumerate {
                let orders = a.enumerate_compatible_orders();
                match format {
                    Format::Text => {
                        for o in &orders {
                            println!("{o}");
                        }
                        println!("count: {}", orders.len());
                    }
                    Format::Json => {
                        let arr: Vec<Value> = orders.iter().map(order_to_json).collect();
                        println!("{}", json!({ "orders": arr, "count": arr.len() }));
                    }
                }
            } else {
                let o = a.compatible_order();
                match format {
                    Format::Text => println!("{o}"),
                    Format::Json => println!("{}", json!({ "order": order_to_json(&o) })),
                }
            }
        }
        Command::Dyck { action } => match action {
            DyckAction::Encode { perm, render } => {
                let sigma = parse_perm(&perm)?;
                if !is_smooth(&sigma) {
                    return Err(CliError::Invalid(format!(
                        "{sigma} is not smooth; only smooth permutations have path encodings"
                    )));
                }
                let a = AdmissibleSet::of_permutation(&sigma)?;
                let path = DecoratedPath::from_admissible(&a);
                match format {
                    Format::Text => {
                        println!("{path}");
                        if render {
                            print!("{}", render::render_path(&path));
                        }
                    }
                    Format::Json => println!("{}", json!({ "path": path.to_string() })),
                }
            }
            DyckAction::Decode { path, render } => {
                let path: DecoratedPath =
                    path.parse().map_err(|e: smoothperm::Error| CliError::Invalid(e.to_string()))?;
                let (sigma, _) = path.sigma();
                match format {
                    Format::Text => {
                        println!("{sigma}");
                        if render {
                            print!("{}", render::render_path(&path));
                        }
                    }
                    Format::Json => println!("{}", json!({ "perm": sigma.to_string() })),
                }
            }
        },
        Command::Essential { action } => match action {
            EssentialAction::Of { perm, render } => {
                let sigma = parse_perm(&perm)?;
                let e = essential_set(&sigma);
                let core = coessential_core(&sigma);
                match format {
                    Format::Text => {
                        println!("essential: {e}");
                        println!("coessential: {core}");
                        if render {
                            print!("{}", render::render_grid(&e));
                        }
                    }
                    Format::Json => println!(
                        "{}",
                        json!({
                            "essential": parse_json(&e.to_json()),
                            "coessential": parse_json(&core.to_json()),
                        })
                    ),
                }
            }
            EssentialAction::Decode { grid, n } => {
                let mut points = std::collections::BTreeSet::new();
                for token in grid.split([' ', ';']).filter(|t| !t.trim().is_empty()) {
                    let parts: Vec<&str> = token.trim().split(',').collect();
                    let [i, j] = parts.as_slice() else {
                        return Err(CliError::Invalid(format!("bad grid point {token:?}")));
                    };
                    let i: usize = i
                        .parse()
                        .map_err(|_| CliError::Invalid(format!("bad grid point {token:?}")))?;
                    let j: usize = j
                        .parse()
                        .map_err(|_| CliError::Invalid(format!("bad grid point {token:?}")))?;
                    points.insert((i, j));
                }
                let grid = GridSet::new(n, points)?;
                let path = path_from_grid(&grid)?;
                let (sigma, _) = path.sigma();
                match format {
                    Format::Text => println!("{sigma}"),
                    Format::Json => println!("{}", json!({ "perm": sigma.to_string() })),
                }
            }
        },
        Command::Enumerate { n, class, method, series } => {
            if n > 6 && matches!(method, None | Some(MethodArg::Patterns)) {
                eprintln!(
                    "note: n={n} exceeds the default cap 6; the pattern sweep touches {} permutations",
                    smoothperm::perm::factorial(n)
                );
            }
            let rows = enumerate_rows(n, class, method, series, jobs);
            match format {
                Format::Text => {
                    println!("# n,class,method,count");
                    for (rn, rc, rm, count) in &rows {
                        println!("{rn},{rc},{rm},{count}");
                    }
                }
                Format::Json => {
                    let arr: Vec<Value> = rows
                        .iter()
                        .map(|(rn, rc, rm, count)| {
                            json!({ "n": rn, "class": rc, "method": rm, "count": count })
                        })
                        .collect();
                    println!("{}", Value::Array(arr));
                }
            }
        }
        Command::Verify { n, all, theorem } => {
            let selector = match (&theorem, all) {
                (Some(t), false) => t.clone(),
                (None, _) => "all".to_string(),
                (Some(_), true) => {
                    return Err(CliError::Usage("--all conflicts with --theorem".into()))
                }
            };
            if n > 6 {
                eprintln!(
                    "note: n={n} exceeds the default cap 6; expect on the order of {} cases",
                    verify::estimated_cases(n)
                );
            }
            let reports =
                verify::run_suites(&selector, n, jobs).map_err(CliError::Usage)?;
            let mut all_pass = true;
            match format {
                Format::Text => {
                    for r in &reports {
                        all_pass &= r.pass();
                        println!(
                            "theorem {}  n<={}  cases={}  failures={}  {}  ({:.2}s)",
                            r.theorem,
                            r.n_max,
                            r.cases,
                            r.failures.len(),
                            if r.pass() { "PASS" } else { "FAIL" },
                            r.seconds
                        );
                        for f in &r.failures {
                            println!("  counterexample: {f}");
                        }
                    }
                }
                Format::Json => {
                    let arr: Vec<Value> = reports
                        .iter()
                        .map(|r| {
                            all_pass &= r.pass();
                            json!({
                                "theorem": r.theorem,
                                "n_max": r.n_max,
                                "cases": r.cases,
                                "failures": r.failures,
                                "pass": r.pass(),
                                "seconds": r.seconds,
                            })
                        })
                        .collect();
                    println!("{}", Value::Array(arr));
                }
            }
            if !all_pass {
                return Err(CliError::VerifyFailed);
            }
        }
        Command::PartitionMax { perm, partition } => {
            let sigma = parse_perm(&perm)?;
            let part: Partition = partition
                .parse()
                .map_err(|e: smoothperm::Error| CliError::Invalid(e.to_string()))?;
            if part.n() != sigma.n() {
                return Err(CliError::Invalid(format!(
                    "partition covers [{}] but the permutation has n={}",
                    part.n(),
                    sigma.n()
                )));
            }
            let subgroup_size: f64 = part
                .blocks()
                .iter()
                .map(|b| smoothperm::perm::factorial(b.len()) as f64)
                .product();
            if subgroup_size > 5e6 {
                return Err(CliError::Invalid(format!(
                    "block subgroup has about {subgroup_size:.1e} elements; refusing the sweep"
                )));
            }
            match partition_max(&sigma, &part) {
                PartitionMax::Maximum(m) => match format {
                    Format::Text => println!("{m}"),
                    Format::Json => {
                        println!("{}", json!({ "maximum": m.to_string() }))
                    }
                },
                PartitionMax::NoMaximum { maximal } => match format {
                    Format::Text => {
                        println!("NO-MAXIMUM");
                        for m in &maximal {
                            println!("maximal: {m}");
                        }
                    }
                    Format::Json => {
                        let arr: Vec<String> =
                            maximal.iter().map(|m| m.to_string()).collect();
                        println!("{}", json!({ "maximum": Value::Null, "maximal": arr }));
                    }
                },
            }
        }
        Command::Closure { perm } => {
            let sigma = parse_perm(&perm)?;
            let closure = smooth_closure(&sigma)?;
            match format {
                Format::Text => println!("{closure}"),
                Format::Json => println!("{}", json!({ "closure": closure.to_string() })),
            }
        }
        Command::Ascend { perm, trace } => {
            let sigma = parse_perm(&perm)?;
            if trace {
                let chain = ascend_to_smooth(&sigma)?;
                match format {
                    Format::Text => {
                        for step in &chain {
                            println!("{step}");
                        }
                    }
                    Format::Json => {
                        let arr: Vec<String> =
                            chain.iter().map(|s| s.to_string()).collect();
                        println!("{}", json!({ "chain": arr }));
                    }
                }
            } else {
                let (j, k) = covex_ascent_step(&sigma)?;
                let next = sigma.right_mul_transposition(j, k);
                match format {
                    Format::Text => println!("T({j},{k}) -> {next}"),
                    Format::Json => println!(
                        "{}",
                        json!({ "transposition": [j, k], "next": next.to_string() })
                    ),
                }
            }
        }
    }
    Ok(())
}

fn parse_json(s: &str) -> Value {
    serde_json::from_str(s).expect("library emits valid json")
}

fn order_to_json(order: &CompatibleOrder) -> Value {
    let arr: Vec<Value> =
        order.transpositions().iter().map(|&(i, j)| json!([i, j])).collect();
    Value::Array(arr)
}

fn parse_order(s: &str) -> Result<CompatibleOrder, CliError> {
    let mut sequence = Vec::new();
    for token in s.split(['<', ' ', ';']).filter(|t| !t.trim().is_empty()) {
        let elem: smoothperm::CycleElem = token.trim().parse()?;
        match elem {
            smoothperm::CycleElem::T(i, j) => sequence.push((i, j)),
            other => {
                return Err(CliError::Invalid(format!(
                    "orders consist of transpositions, got {other}"
                )))
            }
        }
    }
    Ok(CompatibleOrder::new(sequence))
}

fn enumerate_rows(
    n: usize,
    class: ClassArg,
    method: Option<MethodArg>,
    series: bool,
    jobs: usize,
) -> Vec<(usize, String, String, String)> {
    let methods: Vec<MethodArg> = match method {
        Some(m) => vec![m],
        None => vec![MethodArg::Patterns, MethodArg::Paths, MethodArg::Recurrence],
    };
    let ns: Vec<usize> = if series { (1..=n).collect() } else { vec![n] };
    let class_name = match class {
        ClassArg::Smooth => "smooth",
        ClassArg::Avoid231 => "avoid231",
        ClassArg::Avoid321 => "avoid321",
        ClassArg::Indecomposable => "indecomposable",
    };
    let mut rows = Vec::new();
    for &rn in &ns {
        for &m in &methods {
            let (method_name, count) = match (class, m) {
                (_, MethodArg::Patterns) => {
                    ("patterns", pattern_count_parallel(rn, class, jobs).to_string())
                }
                (ClassArg::Smooth, MethodArg::Paths) => {
                    ("paths", enumeration::count_smooth(rn, CountMethod::Paths).to_string())
                }
                (ClassArg::Smooth, MethodArg::Recurrence) => (
                    "recurrence",
                    enumeration::count_smooth(rn, CountMethod::Recurrence).to_string(),
                ),
                (_, MethodArg::Paths) => (
                    "paths",
                    enumeration::count_class(rn, to_class(class), ClassMethod::Paths).to_string(),
                ),
                (_, MethodArg::Recurrence) => (
                    "formula",
                    enumeration::count_class(rn, to_class(class), ClassMethod::Formula)
                        .to_string(),
                ),
            };
            rows.push((rn, class_name.to_string(), method_name.to_string(), count));
        }
    }
    rows
}

/// Brute-force pattern counts, fanned out over lexicographic chunks.
fn pattern_count_parallel(n: usize, class: ClassArg, jobs: usize) -> u64 {
    let pat231: Permutation = "231".parse().unwrap();
    let pat321: Permutation = "321".parse().unwrap();
    verify::count_perms_parallel(n, jobs, |sigma| match class {
        ClassArg::Smooth => is_smooth(sigma),
        ClassArg::Avoid231 => !sigma.contains_pattern(&pat231),
        ClassArg::Avoid321 => is_smooth(sigma) && !sigma.contains_pattern(&pat321),
        ClassArg::Indecomposable => is_smooth(sigma) && sigma.is_indecomposable(),
    })
}

fn to_class(c: ClassArg) -> PermClass {
    match c {
        ClassArg::Smooth => unreachable!("smooth handled separately"),
        ClassArg::Avoid231 => PermClass::Avoid231,
        ClassArg::Avoid321 => PermClass::Avoid321,
        ClassArg::Indecomposable => PermClass::Indecomposable,
    }
}
