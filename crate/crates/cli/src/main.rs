use anyhow::{bail, Context};
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use sombor_core::families::{construct, Family, FamilySpec};
use sombor_core::graph::{canonical_form, parse_edge_list, write_edge_list, CanonicalForm};
use sombor_core::oracle::{enumerate_rank, EnumerationTask, RankEntry, Universe, Verifier, VerifyOptions};
use sombor_core::report::{format_sig, ClaimId, EdgeList, Number, PrecisionPolicy, ReportDocument, VerificationReport};
use sombor_core::{sombor_index, FormulaId, SomborValue};
use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

const DIGITS: usize = 12;

#[derive(Parser)]
#[command(name = "sombor", version, about = "Sombor index of graphs and extremal quasi-tree checks")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Sombor index of a graph given as an edge-list file.
    So {
        file: PathBuf,
        /// Also print the edge degree pairs and the exact radical form.
        #[arg(long)]
        terms: bool,
    },
    /// Write a member of a named family as an edge list.
    Gen {
        /// S, Sprime, Sdprime, Q, Qstar, Qprime or Qdprime.
        family: Family,
        #[arg(long)]
        n: usize,
        /// Apex degree; ignored by the tree families.
        #[arg(long, default_value_t = 1)]
        k: usize,
        /// Output file; standard output when absent.
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
    /// Evaluate a closed-form bound.
    Formula {
        /// phi, phi-prime, phi-star, phi-dprime or f.
        id: FormulaId,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        terms: bool,
    },
    /// Top index levels of an enumerated universe.
    Rank {
        #[arg(long)]
        n: usize,
        /// Apex degree, required for quasi-trees.
        #[arg(long)]
        k: Option<usize>,
        #[arg(long, value_enum, default_value_t = UniverseArg::QuasiTree)]
        universe: UniverseArg,
        #[arg(long, default_value_t = 3)]
        top: usize,
        /// Worker threads; defaults to the available parallelism.
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Check a claim, or every claim with `all`.
    Verify {
        claim: String,
        /// Orders for enumeration-backed claims: `a` or `a..b`.
        #[arg(long, value_parser = parse_range)]
        n: Option<(usize, usize)>,
        /// Apex degrees: `a` or `a..b`.
        #[arg(long, value_parser = parse_range)]
        k: Option<(usize, usize)>,
        /// Largest order for formula sweeps (grid size for the scalar lemmas).
        #[arg(long)]
        nmax: Option<usize>,
        /// Random instances for the move contracts.
        #[arg(long, default_value_t = 10_000)]
        samples: usize,
        #[arg(long, default_value_t = VerifyOptions::default().seed)]
        seed: u64,
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        #[arg(long)]
        json: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum UniverseArg {
    QuasiTree,
    Tree,
    Unicyclic,
}

fn parse_range(s: &str) -> Result<(usize, usize), String> {
    let parse = |t: &str| t.trim().parse::<usize>().map_err(|e| format!("{t:?}: {e}"));
    let (lo, hi) = match s.split_once("..") {
        Some((a, b)) => (parse(a)?, parse(b.trim_start_matches('='))?),
        None => {
            let v = parse(s)?;
            (v, v)
        }
    };
    if lo > hi {
        return Err(format!("empty range {s}"));
    }
    Ok((lo, hi))
}

/// Failures that map to exit code 1; everything else exits with 2.
struct ClaimFailed;

impl std::fmt::Debug for ClaimFailed {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str("verification failed")
    }
}

impl std::fmt::Display for ClaimFailed {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str("verification failed")
    }
}

impl std::error::Error for ClaimFailed {}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) if e.is::<ClaimFailed>() => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> anyhow::Result<()> {
    match command {
        Command::So { file, terms } => cmd_so(&file, terms),
        Command::Gen { family, n, k, output } => cmd_gen(family, n, k, output.as_deref()),
        Command::Formula { id, n, k, terms } => cmd_formula(id, n, k, terms),
        Command::Rank {
            n,
            k,
            universe,
            top,
            jobs,
            json,
        } => cmd_rank(n, k, universe, top, jobs, json.as_deref()),
        Command::Verify {
            claim,
            n,
            k,
            nmax,
            samples,
            seed,
            jobs,
            json,
        } => {
            let opts = VerifyOptions {
                n_range: n,
                k_range: k,
                n_max: nmax,
                samples,
                seed,
            };
            cmd_verify(&claim, &opts, jobs, json.as_deref())
        }
    }
}

fn print_terms(value: &SomborValue) {
    if let Some(pairs) = value.pairs() {
        let mut counts: BTreeMap<(usize, usize), usize> = BTreeMap::new();
        for &p in pairs {
            *counts.entry(p).or_insert(0) += 1;
        }
        for ((a, b), c) in counts {
            println!("  {c} x ({a},{b})  sqrt({})", a * a + b * b);
        }
    }
    let exact: Vec<String> = value
        .radicals()
        .terms()
        .map(|(c, r)| if r == 1 { format!("{c}") } else { format!("{c}*sqrt({r})") })
        .collect();
    println!("  = {}", if exact.is_empty() { "0".into() } else { exact.join(" + ") });
}

fn cmd_so(file: &Path, terms: bool) -> anyhow::Result<()> {
    let text = std::fs::read_to_string(file).with_context(|| format!("reading {}", file.display()))?;
    let g = parse_edge_list(&text).with_context(|| format!("parsing {}", file.display()))?;
    let value = sombor_index(&g);
    println!("{}", format_sig(value.value, DIGITS));
    if terms {
        print_terms(&value);
    }
    Ok(())
}

fn cmd_gen(family: Family, n: usize, k: usize, output: Option<&Path>) -> anyhow::Result<()> {
    let spec = FamilySpec::new(family, n, k)?;
    let (g, witness) = construct(spec)?;
    let text = write_edge_list(&g);
    let line = format!("{spec}: apex {} with k = {}", witness.apex, witness.k);
    match output {
        Some(path) => {
            std::fs::write(path, text).with_context(|| format!("writing {}", path.display()))?;
            println!("{line}");
        }
        None => {
            print!("{text}");
            eprintln!("{line}");
        }
    }
    Ok(())
}

fn cmd_formula(id: FormulaId, n: usize, k: usize, terms: bool) -> anyhow::Result<()> {
    let value = id.evaluate(n, k)?;
    println!("{}", format_sig(value.value, DIGITS));
    if terms {
        print_terms(&value.to_sombor_value());
    }
    Ok(())
}

#[derive(Serialize)]
struct RankDocument {
    tool_version: String,
    invocation: Vec<String>,
    universe: String,
    n: usize,
    k: Option<usize>,
    levels: Vec<RankLevel>,
    precision: PrecisionPolicy,
}

#[derive(Serialize)]
struct RankLevel {
    level: usize,
    value: Number,
    labeled_count: u64,
    representatives: Vec<RankRepresentative>,
}

#[derive(Serialize)]
struct RankRepresentative {
    family: Vec<String>,
    labeled_count: u64,
    graph: EdgeList,
}

/// Names of the family members of order `n` and apex degree `k`, by shape.
fn family_names(n: usize, k: usize) -> BTreeMap<CanonicalForm, Vec<String>> {
    let mut names: BTreeMap<CanonicalForm, Vec<String>> = BTreeMap::new();
    for spec in FamilySpec::all(n, n).filter(|s| s.k == k) {
        let (g, _) = construct(spec).expect("valid member");
        names.entry(canonical_form(&g).expect("small order")).or_default().push(spec.display_name());
    }
    names
}

fn cmd_rank(n: usize, k: Option<usize>, universe: UniverseArg, top: usize, jobs: usize, json: Option<&Path>) -> anyhow::Result<()> {
    let (universe, name_k) = match (universe, k) {
        (UniverseArg::QuasiTree, Some(k)) => (Universe::QuasiTree { n, k }, k),
        (UniverseArg::QuasiTree, None) => bail!("--k is required for the quasi-tree universe"),
        (UniverseArg::Tree, _) => (Universe::Tree { n }, 1),
        (UniverseArg::Unicyclic, _) => (Universe::Unicyclic { n }, 2),
    };
    let entries = enumerate_rank(&EnumerationTask::new(universe).top(top).jobs(jobs))?;
    let names = family_names(n, name_k);
    let levels: Vec<RankLevel> = entries.iter().map(|e| rank_level(e, &names)).collect();

    println!("{universe}: {} labelled graphs", universe.labeled_size());
    println!("{:>5}  {:>16}  {:>9}  representatives", "level", "SO", "labelled");
    for level in &levels {
        for (i, rep) in level.representatives.iter().enumerate() {
            let name = if rep.family.is_empty() { "-".to_string() } else { rep.family.join(" = ") };
            let edges: Vec<String> = rep.graph.edges.iter().map(|[u, v]| format!("{u}-{v}")).collect();
            if i == 0 {
                print!("{:>5}  {:>16}  {:>9}", level.level, level.value.decimal, level.labeled_count);
            } else {
                print!("{:>5}  {:>16}  {:>9}", "", "", "");
            }
            println!("  {name} ({} labelled) {}", rep.labeled_count, edges.join(" "));
        }
    }
    if let Some(path) = json {
        let doc = RankDocument {
            tool_version: env!("CARGO_PKG_VERSION").to_string(),
            invocation: std::env::args().collect(),
            universe: universe.to_string(),
            n,
            k,
            levels,
            precision: PrecisionPolicy::default(),
        };
        write_json(path, &doc)?;
    }
    Ok(())
}

fn rank_level(entry: &RankEntry, names: &BTreeMap<CanonicalForm, Vec<String>>) -> RankLevel {
    RankLevel {
        level: entry.level,
        value: Number::from(&entry.value),
        labeled_count: entry.labeled_count,
        representatives: entry
            .reps
            .iter()
            .map(|r| RankRepresentative {
                family: names.get(&r.form).cloned().unwrap_or_default(),
                labeled_count: r.labeled_count,
                graph: EdgeList::from(&r.graph),
            })
            .collect(),
    }
}

fn cmd_verify(claim: &str, opts: &VerifyOptions, jobs: usize, json: Option<&Path>) -> anyhow::Result<()> {
    let mut verifier = Verifier::new(jobs);
    let reports = if claim == "all" {
        verifier.verify_all(opts)?
    } else {
        let id: ClaimId = claim.parse().map_err(anyhow::Error::msg)?;
        vec![verifier.verify(id, opts)?]
    };
    for r in &reports {
        print_report(r);
    }
    let doc = ReportDocument::new(std::env::args().collect(), reports);
    if let Some(path) = json {
        write_json(path, &doc)?;
    }
    if doc.passed() {
        Ok(())
    } else {
        Err(ClaimFailed.into())
    }
}

fn print_report(r: &VerificationReport) {
    let status = if r.passed() { "pass" } else { "FAIL" };
    println!(
        "{:<20} {status}  {} cases, n in [{}, {}], {} ms",
        r.claim.as_str(),
        r.checked,
        r.params.n_min,
        r.params.n_max,
        r.runtime_ms
    );
    for d in &r.details {
        let mark = match (d.passed, d.informational) {
            (true, false) => "ok",
            (false, false) => "FAIL",
            (true, true) => "info ok",
            (false, true) => "info differs",
        };
        let at = match (d.n, d.k) {
            (Some(n), Some(k)) => format!("n={n} k={k} "),
            (Some(n), None) => format!("n={n} "),
            _ => String::new(),
        };
        let values = match (&d.expected, &d.observed) {
            (Some(e), Some(o)) => format!(": expected {}, observed {}", e.decimal, o.decimal),
            _ => String::new(),
        };
        println!("  [{mark}] {at}{}{values}", d.label);
    }
    for note in &r.notes {
        println!("  note: {note}");
    }
}

fn write_json<T: Serialize>(path: &Path, value: &T) -> anyhow::Result<()> {
    let text = serde_json::to_string_pretty(value)?;
    std::fs::write(path, text + "\n").with_context(|| format!("writing {}", path.display()))
}
