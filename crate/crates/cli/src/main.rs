//! `fusionring`: fusion ideals, fusion products, Steinberg bases and verification.
//!
//! Exit codes: 0 success, 1 verification failure or internal error, 2 usage error.

use std::process::ExitCode;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use fusion_core::character::coeff_json;
use fusion_core::fusion::{compare_with_verlinde, fusion_product, fusion_table};
use fusion_core::ideal::{derive_fusion_ideal, derive_kernel, theorem1_generators, Classification};
use fusion_core::steinberg::fixed_vertex;
use fusion_core::verify::{all_checks, run_cases, tier_cases, Case, Check, Status, VerifyOptions};
use fusion_core::{CharacterRing, Error, LieType, RootDatum, Weight, SCHEMA};

#[derive(Parser, Debug)]
#[command(name = "fusionring", version, about = "Exact fusion rings of simple, simply connected Lie groups")]
struct Cli {
    /// Worker threads; overrides FUSION_THREADS.
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Accepted for scripts: every computation is deterministic.
    #[arg(long, global = true)]
    seedless: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Generators of the level k fusion ideal.
    Ideal(IdealArgs),
    /// Steinberg basis, kernel classification and derived generators.
    Derive(LevelArgs),
    /// Fusion products and structure constants.
    Fusion(FusionArgs),
    /// Steinberg basis of a parabolic, or the affine basis at a level.
    Steinberg(SteinbergArgs),
    /// Run verification checks.
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
    Tsv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Source {
    Derive,
    Table,
}

#[derive(Args, Debug)]
struct LevelArgs {
    /// Type code such as A2, G2 or E8.
    lie_type: String,
    #[arg(long, short = 'k')]
    level: i64,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Args, Debug)]
struct IdealArgs {
    #[command(flatten)]
    base: LevelArgs,
    #[arg(long, value_enum, default_value = "table")]
    source: Source,
    /// Allow exceptional tables below their level bound; output is marked non-golden.
    #[arg(long)]
    experimental: bool,
}

#[derive(Args, Debug)]
struct FusionArgs {
    #[command(flatten)]
    base: LevelArgs,
    /// Print every structure constant N_{λμ}^ν.
    #[arg(long, conflicts_with = "product")]
    table: bool,
    /// Product of two alcove weights, e.g. --product 1,0 0,1.
    #[arg(long, num_args = 2, value_names = ["LAMBDA", "MU"])]
    product: Option<Vec<String>>,
    /// Compare with the Verlinde formula.
    #[arg(long)]
    check: bool,
    #[arg(long, default_value_t = 1e-6)]
    tolerance: f64,
}

#[derive(Args, Debug)]
struct SteinbergArgs {
    lie_type: String,
    /// Node left out of the parabolic; defaults to the fixed vertex of the type.
    #[arg(long)]
    vertex: Option<usize>,
    /// Explicit parabolic subset, e.g. 2,3,4.
    #[arg(long, value_delimiter = ',', conflicts_with = "vertex")]
    subset: Option<Vec<usize>>,
    /// Also build the affine basis at this level.
    #[arg(long, short = 'k')]
    level: Option<i64>,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    lie_type: Option<String>,
    #[arg(long, short = 'k', requires = "lie_type")]
    level: Option<i64>,
    /// Run every check for the case.
    #[arg(long)]
    all: bool,
    /// Checks to run: oracle, vanish, ideal, pipeline.
    #[arg(long, value_delimiter = ',')]
    check: Vec<String>,
    /// Run a predefined tier (0, 1 or 2) instead of a single case.
    #[arg(long, conflicts_with_all = ["lie_type", "all", "check"])]
    tier: Option<u8>,
    /// Truncation bound for the lattice check.
    #[arg(long)]
    bound: Option<i64>,
    #[arg(long, default_value_t = 1e-6)]
    tolerance: f64,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

/// Command failure mapped to an exit code.
enum Failure {
    Usage(String),
    Runtime(String),
    Verification,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::InvalidType(_)
            | Error::InvalidNode { .. }
            | Error::Parse(_)
            | Error::OutsideAlcove(..)
            | Error::BelowBound { .. }
            | Error::Parity(_)
            | Error::Unsupported(_)
            | Error::NotDominant(_) => Failure::Usage(e.to_string()),
            e => Failure::Runtime(e.to_string()),
        }
    }
}

type CmdResult = Result<(), Failure>;

/// `println!` that exits quietly when stdout is closed, e.g. by `head`.
macro_rules! out {
    ($($t:tt)*) => {{
        use std::io::Write;
        if writeln!(std::io::stdout(), $($t)*).is_err() {
            std::process::exit(0);
        }
    }};
}

fn ring(code: &str) -> Result<CharacterRing, Failure> {
    let t: LieType = code.parse()?;
    Ok(CharacterRing::new(Arc::new(RootDatum::new(t)?)))
}

fn parse_weight(s: &str, rank: usize) -> Result<Weight, Failure> {
    let body = s.trim().trim_start_matches('[').trim_end_matches(']');
    let coords: Vec<i64> = body
        .split(',')
        .map(|c| c.trim().parse::<i64>())
        .collect::<Result<_, _>>()
        .map_err(|_| Failure::Usage(format!("cannot parse weight {s:?}")))?;
    if coords.len() != rank {
        return Err(Failure::Usage(format!("weight {s:?} needs {rank} coordinates")));
    }
    Ok(Weight::new(&coords))
}

fn print_json(v: &Value) {
    out!("{}", serde_json::to_string_pretty(v).expect("serializable"));
}

fn word_json(word: &[u8]) -> Value {
    json!(word)
}

fn cmd_ideal(a: &IdealArgs) -> CmdResult {
    let r = ring(&a.base.lie_type)?;
    let d = r.datum();
    let gens = match a.source {
        Source::Derive => derive_fusion_ideal(&r, a.base.level)?,
        Source::Table => theorem1_generators(&r, a.base.level, a.experimental)?,
    };
    match a.base.format {
        Format::Json => print_json(&gens.to_json(d)),
        Format::Text | Format::Tsv => {
            let mut lines: Vec<(Vec<(Weight, _)>, String)> =
                gens.generators.iter().map(|g| (g.sorted_terms(d), g.display(d))).collect();
            lines.sort();
            for (_, s) in lines {
                out!("{s}");
            }
        }
    }
    Ok(())
}

fn classification_json(w: &Weight, c: &Classification) -> Value {
    match c {
        Classification::Singular => json!({"weight": w, "kind": "singular"}),
        Classification::Paired { partner } => json!({"weight": w, "kind": "paired", "partner": partner}),
        Classification::CentralPaired { partner, coefficient } => {
            json!({"weight": w, "kind": "central-paired", "partner": partner, "coefficient": coefficient})
        }
        Classification::OrthogonalPaired { partner } => {
            json!({"weight": w, "kind": "orthogonal-paired", "partner": partner})
        }
        Classification::ProjectedSingular => json!({"weight": w, "kind": "projected-singular"}),
    }
}

fn cmd_derive(a: &LevelArgs) -> CmdResult {
    let r = ring(&a.lie_type)?;
    let d = r.datum();
    let (ab, kernel) = derive_kernel(&r, a.level)?;
    let gens = derive_fusion_ideal(&r, a.level)?;
    let classes: Vec<Value> = kernel.classification.iter().map(|(w, c)| classification_json(w, c)).collect();
    let stats = kernel.orthogonal.as_ref().map(|s| {
        json!({
            "projected": s.projected, "projected_in_basis": s.projected_in_basis, "singular": s.singular,
            "above": s.above, "below": s.below, "reflecting": s.reflecting, "pairs": s.pairs,
        })
    });
    match a.format {
        Format::Json => print_json(&json!({
            "schema": SCHEMA,
            "type": d.lie_type().code(),
            "level": a.level,
            "vertex": ab.vertex,
            "transform": ab.describe(),
            "edge_only": ab.edge_only,
            "ab_e": ab.ab_e,
            "ab_v": ab.ab_v,
            "classification": classes,
            "orthogonal": stats,
            "generators": gens.to_json(d)["generators"],
        })),
        Format::Text | Format::Tsv => {
            out!("type {} level {} vertex {}: {}", d.lie_type(), a.level, ab.vertex, ab.describe());
            out!("AB_e ({}):", ab.ab_e.len());
            for (i, w) in ab.ab_e.iter().enumerate() {
                let class = kernel.classification_of(w).map(|c| format!("{c:?}")).unwrap_or_else(|| "vertex".into());
                out!("  {:>3}  {w}  {class}", i + 1);
            }
            if let Some(s) = stats {
                out!("orthogonal statistics: {s}");
            }
            out!("generators ({}):", gens.len());
            for g in &gens.generators {
                out!("  {}", g.display(d));
            }
        }
    }
    Ok(())
}

fn cmd_fusion(a: &FusionArgs) -> CmdResult {
    let r = ring(&a.base.lie_type)?;
    let d = r.datum();
    let k = a.base.level;
    let mut failed = false;
    let oracle = if a.check {
        let c = compare_with_verlinde(&r, k, a.tolerance)?;
        failed = !c.mismatches.is_empty();
        Some(json!({
            "coefficients": c.coefficients,
            "mismatches": c.mismatches.len(),
            "residual_below_tolerance": c.max_residual < a.tolerance,
        }))
    } else {
        None
    };
    if let Some(p) = &a.product {
        let lambda = parse_weight(&p[0], d.rank())?;
        let mu = parse_weight(&p[1], d.rank())?;
        let e = fusion_product(&r, &lambda, &mu, k)?;
        match a.base.format {
            Format::Json => print_json(&json!({
                "schema": SCHEMA, "type": d.lie_type().code(), "level": k,
                "lambda": lambda, "mu": mu, "product": e.to_json(d), "oracle": oracle,
            })),
            Format::Text | Format::Tsv => {
                let terms: Vec<String> = e
                    .sorted_terms(d)
                    .iter()
                    .rev()
                    .map(|(w, c)| if *c == 1.into() { w.to_string() } else { format!("{c}*{w}") })
                    .collect();
                out!("{lambda} x {mu} = {}", if terms.is_empty() { "0".into() } else { terms.join(" + ") });
            }
        }
    } else if a.table {
        let alcove = d.enumerate_alcove(k);
        let table = fusion_table(&r, k)?;
        match a.base.format {
            Format::Json => {
                let n = alcove.len();
                let nested: Vec<Vec<Vec<Value>>> = (0..n)
                    .map(|i| {
                        (0..n)
                            .map(|j| (0..n).map(|l| coeff_json(&table[(i * n + j) * n + l].value)).collect())
                            .collect()
                    })
                    .collect();
                print_json(&json!({
                    "schema": SCHEMA, "type": d.lie_type().code(), "level": k,
                    "alcove": alcove, "table": nested, "oracle": oracle,
                }));
            }
            Format::Tsv => {
                out!("lambda\tmu\tnu\tN");
                for c in &table {
                    out!("{}\t{}\t{}\t{}", c.lambda, c.mu, c.nu, c.value);
                }
            }
            Format::Text => {
                for c in table.iter().filter(|c| c.value != 0.into()) {
                    out!("N({}, {}; {}) = {}", c.lambda, c.mu, c.nu, c.value);
                }
            }
        }
    } else {
        let alcove = d.enumerate_alcove(k);
        match a.base.format {
            Format::Json => print_json(&json!({
                "schema": SCHEMA, "type": d.lie_type().code(), "level": k, "alcove": alcove, "oracle": oracle,
            })),
            Format::Text | Format::Tsv => {
                for w in alcove {
                    out!("{w}");
                }
            }
        }
    }
    if let (Some(o), Format::Text | Format::Tsv) = (&oracle, a.base.format) {
        eprintln!("oracle: {o}");
    }
    if failed {
        Err(Failure::Verification)
    } else {
        Ok(())
    }
}

fn cmd_steinberg(a: &SteinbergArgs) -> CmdResult {
    let r = ring(&a.lie_type)?;
    let d = r.datum();
    let vertex = a.vertex.unwrap_or_else(|| fixed_vertex(d));
    let subset: Vec<usize> = match &a.subset {
        Some(s) => s.clone(),
        None => (1..=d.rank()).filter(|&j| j != vertex).collect(),
    };
    let basis = d.steinberg_basis(&subset)?;
    let affine = match a.level {
        Some(k) => Some(d.affine_steinberg_basis(vertex, k)?),
        None => None,
    };
    match a.format {
        Format::Json => {
            let entries: Vec<Value> = basis
                .entries
                .iter()
                .map(|e| json!({"word": word_json(&e.word), "positive_weight": e.positive_weight, "basis_weight": e.basis_weight}))
                .collect();
            let mut v = json!({
                "schema": SCHEMA, "type": d.lie_type().code(), "subset": basis.subset, "entries": entries,
            });
            if let Some(ab) = &affine {
                v["affine"] = json!({
                    "level": ab.level, "vertex": ab.vertex, "transform": ab.describe(),
                    "edge_only": ab.edge_only, "ab_e": ab.ab_e, "ab_v": ab.ab_v,
                });
            }
            print_json(&v);
        }
        Format::Text | Format::Tsv => {
            let sep = if a.format == Format::Tsv { "\t" } else { "  " };
            for (i, e) in basis.entries.iter().enumerate() {
                let word: Vec<String> = e.word.iter().map(|x| x.to_string()).collect();
                let word = if word.is_empty() { "1".to_string() } else { word.join(".") };
                let ab = affine.as_ref().map(|ab| format!("{sep}{}", ab.ab_e[i])).unwrap_or_default();
                out!("{}{sep}{word}{sep}{}{sep}{}{ab}", i + 1, e.positive_weight, e.basis_weight);
            }
            if let Some(ab) = &affine {
                out!("# {}; AB_v = {:?}", ab.describe(), ab.ab_v);
            }
        }
    }
    Ok(())
}

fn cmd_verify(a: &VerifyArgs) -> CmdResult {
    let opts = VerifyOptions { tolerance: a.tolerance, bound: a.bound };
    let cases: Vec<Case> = if let Some(tier) = a.tier {
        if tier > 2 {
            return Err(Failure::Usage(format!("tier {tier} does not exist")));
        }
        tier_cases(tier)
    } else {
        let code = a.lie_type.as_deref().ok_or_else(|| Failure::Usage("give a type and --level, or --tier".into()))?;
        let k = a.level.ok_or_else(|| Failure::Usage("--level is required".into()))?;
        let t: LieType = code.parse()?;
        if a.all || a.check.is_empty() {
            all_checks(t, k)
        } else {
            let checks: Vec<Check> = a.check.iter().map(|c| c.parse()).collect::<Result<_, _>>()?;
            checks.into_iter().map(|check| Case { lie_type: t, level: k, check }).collect()
        }
    };
    let reports = run_cases(&cases, &opts);
    match a.format {
        Format::Json => print_json(&json!({
            "schema": SCHEMA,
            "reports": reports.iter().map(|r| r.to_json()).collect::<Vec<_>>(),
        })),
        Format::Tsv => {
            for r in &reports {
                out!("{}", r.tsv_line());
            }
        }
        Format::Text => {
            for r in &reports {
                let tag = match r.status {
                    Status::Pass => "PASS",
                    Status::Fail => "FAIL",
                    Status::Skipped => "SKIP",
                };
                out!("{tag} {} {}", r.case.id(), r.details);
                if let Some(c) = &r.counterexample {
                    out!("     counterexample: {c}");
                    out!("     reproduce: {}", r.case.reproduce());
                }
            }
        }
    }
    if reports.iter().any(|r| r.status == Status::Fail) {
        Err(Failure::Verification)
    } else {
        Ok(())
    }
}

fn configure_threads(flag: Option<usize>) -> Result<(), Failure> {
    let env = std::env::var("FUSION_THREADS").ok();
    let n = match (flag, env) {
        (Some(n), _) => Some(n),
        (None, Some(s)) => Some(s.parse().map_err(|_| Failure::Usage(format!("FUSION_THREADS={s:?} is not a number")))?),
        (None, None) => None,
    };
    if let Some(n) = n {
        rayon::ThreadPoolBuilder::new().num_threads(n).build_global().map_err(|e| Failure::Runtime(e.to_string()))?;
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = configure_threads(cli.threads).and_then(|_| match &cli.command {
        Command::Ideal(a) => cmd_ideal(a),
        Command::Derive(a) => cmd_derive(a),
        Command::Fusion(a) => cmd_fusion(a),
        Command::Steinberg(a) => cmd_steinberg(a),
        Command::Verify(a) => cmd_verify(a),
    });
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification) => ExitCode::from(1),
        Err(Failure::Runtime(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(m)) => {
            eprintln!("usage error: {m}");
            ExitCode::from(2)
        }
    }
}
