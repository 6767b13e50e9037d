//! `caring`: construct, verify, search and capacity subcommands.
//!
//! Exit status: 0 when every check passes, 1 on a verification failure
//! (the witness is printed), 2 on a usage or input error, 3 when a search
//! budget runs out.

mod args;

use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use caring_core::colorings::{
    binary_four_color_rounds, encode_rounds_to_ternary, hamiltonian_decomposition_coloring,
    paired_one_factorization_coloring, three_color_rounds_from_labels, BinaryLabeling,
    ColoringRounds,
};
use caring_core::designs::{is_good_kts, kts_coloring, kts_power_of_three};
use caring_core::extremal::{
    exact_a, exact_b, exact_f, exact_g, exact_p, ramsey_feasible, Parameter, SearchBudget,
};
use caring_core::graph::{EdgeColoring, PatternKind};
use caring_core::io::{
    read_certificate, read_coloring_input, write_certificate, write_coloring, write_kts,
    write_rounds, ColoringInput,
};
use caring_core::shannon::{
    certified_capacity_bound, lex_first_clique, max_clique, or_power, verify_certificate,
    BaseGraph, CapacityBound, CliqueBudget, CliqueCertificate, GraphDescriptor,
};
use caring_core::verify::{
    is_caring, monochromatic_free, rainbow_everywhere, rounds_rainbow_p4,
    rounds_triangle_multicolored, Verdict, VerifyReport,
};
use caring_core::Error;
use clap::Parser;
use serde::Serialize;
use sha2::{Digest, Sha256};

use args::{
    BudgetArgs, CapacityAction, CapacityArgs, Cli, Command, Construct, Encoding, SearchArgs,
    SearchParam, VerifyArgs, VerifyMode,
};

enum Failure {
    Verification(String),
    Usage(String),
    Budget(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Verification(_) => 1,
            Failure::Usage(_) => 2,
            Failure::Budget(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Verification(m) | Failure::Usage(m) | Failure::Budget(m) => m,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::BudgetExceeded { .. } => Failure::Budget(e.to_string()),
            Error::LabelProperty { .. } => Failure::Verification(e.to_string()),
            other => Failure::Usage(other.to_string()),
        }
    }
}

type Run = Result<(), Failure>;

fn usage(msg: impl Into<String>) -> Failure {
    Failure::Usage(msg.into())
}

fn io_failure(path: &Path, e: io::Error) -> Failure {
    usage(format!("{}: {e}", path.display()))
}

struct Context {
    reproducible: bool,
    /// Hash of the command line (less `--workers`) and of any input read.
    config_hash: String,
}

#[derive(Serialize)]
struct Envelope<'a, T: Serialize> {
    tool: &'static str,
    version: &'static str,
    config_hash: &'a str,
    report: T,
}

impl Context {
    fn print_json<T: Serialize>(&self, report: T) -> Run {
        let env = Envelope {
            tool: "caring",
            version: env!("CARGO_PKG_VERSION"),
            config_hash: &self.config_hash,
            report,
        };
        let text = serde_json::to_string_pretty(&env).map_err(|e| usage(e.to_string()))?;
        emit(None, &format!("{text}\n"))
    }
}

fn emit(path: Option<&Path>, text: &str) -> Run {
    match path {
        Some(p) if p != Path::new("-") => fs::write(p, text).map_err(|e| io_failure(p, e)),
        _ => {
            let mut out = io::stdout().lock();
            out.write_all(text.as_bytes())
                .and_then(|_| out.flush())
                .map_err(|e| usage(format!("stdout: {e}")))
        }
    }
}

fn read_input(path: Option<&PathBuf>) -> Result<String, Failure> {
    match path {
        Some(p) if p != Path::new("-") => fs::read_to_string(p).map_err(|e| io_failure(p, e)),
        _ => {
            let mut s = String::new();
            io::stdin()
                .read_to_string(&mut s)
                .map_err(|e| usage(format!("stdin: {e}")))?;
            Ok(s)
        }
    }
}

fn sha256_hex(bytes: &[u8]) -> String {
    Sha256::digest(bytes).iter().map(|b| format!("{b:02x}")).collect()
}

fn config_hash(cli: &Cli, input: Option<&str>) -> String {
    let mut text = serde_json::to_string(cli).expect("config serializes");
    if let Some(input) = input {
        text.push('\n');
        text.push_str(&sha256_hex(input.as_bytes()));
    }
    sha256_hex(text.as_bytes())
}

fn time_cap(b: &BudgetArgs) -> Result<Option<Duration>, Failure> {
    match b.budget_seconds {
        None => Ok(None),
        Some(s) if s.is_finite() && s > 0.0 => Ok(Some(Duration::from_secs_f64(s))),
        Some(s) => Err(usage(format!("budget must be a positive number of seconds, got {s}"))),
    }
}

fn construct(what: &Construct) -> Run {
    match what {
        Construct::Kts { t, coloring, out } => {
            let ks = kts_power_of_three(*t)?;
            let text = if *coloring {
                write_coloring(&kts_coloring(&ks)?)
            } else {
                write_kts(&ks)
            };
            eprintln!("KTS({}) with {} classes", ks.n(), ks.class_count());
            emit(out.as_deref(), &text)
        }
        Construct::Ham { n, out } => {
            let c = hamiltonian_decomposition_coloring(*n)?;
            eprintln!("K_{n} in {} Hamiltonian cycles", c.k());
            emit(out.as_deref(), &write_coloring(&c))
        }
        Construct::Onefact { n, out } => {
            let c = paired_one_factorization_coloring(*n)?;
            eprintln!("K_{n} in {} paired matchings", c.k());
            emit(out.as_deref(), &write_coloring(&c))
        }
        Construct::Rounds {
            n,
            encoding,
            rounds_out,
        } => {
            let rounds = match encoding {
                Encoding::Four => binary_four_color_rounds(*n)?,
                Encoding::Ternary => encode_rounds_to_ternary(&binary_four_color_rounds(*n)?)?,
                Encoding::Three => three_color_rounds_from_labels(&BinaryLabeling::standard(*n))?,
            };
            eprintln!("{} rounds over {} colors", rounds.len(), rounds.palette());
            emit(rounds_out.as_deref(), &write_rounds(&rounds))
        }
    }
}

fn single_round(input: &ColoringInput, mode: VerifyMode) -> Result<EdgeColoring, Failure> {
    match input {
        ColoringInput::Kts(ks) => Ok(kts_coloring(ks)?),
        ColoringInput::Rounds(r) if r.len() == 1 => Ok(r.rounds()[0].clone()),
        ColoringInput::Rounds(r) => Err(usage(format!(
            "{mode:?} checks a single coloring, the input has {} rounds",
            r.len()
        ))),
    }
}

fn as_rounds(input: &ColoringInput) -> Result<ColoringRounds, Failure> {
    match input {
        ColoringInput::Rounds(r) => Ok(r.clone()),
        ColoringInput::Kts(ks) => {
            let c = kts_coloring(ks)?;
            Ok(ColoringRounds::new(c.n(), c.k(), vec![c])?)
        }
    }
}

#[derive(Serialize)]
struct KtsGoodReport {
    check: &'static str,
    n: usize,
    passed: bool,
    witness: Option<[usize; 4]>,
}

fn verify(ctx: &Context, args: &VerifyArgs, text: &str) -> Run {
    let mode = args.resolved_mode().map_err(usage)?;
    let input = read_coloring_input(text)?;
    let report: VerifyReport = match mode {
        VerifyMode::KtsGood => {
            let ColoringInput::Kts(ks) = &input else {
                return Err(usage("kts-good needs a Kirkman system as input"));
            };
            let verdict = is_good_kts(ks)?;
            let passed = verdict.passed();
            let witness = verdict.witness().copied();
            ctx.print_json(KtsGoodReport {
                check: "kts_good",
                n: ks.n(),
                passed,
                witness,
            })?;
            return match witness {
                None => Ok(()),
                Some(q) => Err(Failure::Verification(format!(
                    "quadruple {q:?} sees fewer than 4 classes"
                ))),
            };
        }
        VerifyMode::Caring => is_caring(&single_round(&input, mode)?, args.pattern),
        VerifyMode::Mono => monochromatic_free(&single_round(&input, mode)?, args.pattern),
        VerifyMode::Rainbow => rainbow_everywhere(&single_round(&input, mode)?, args.pattern),
        VerifyMode::RoundsP4 => {
            if args.pattern != PatternKind::P4 {
                return Err(usage("rounds-p4 checks P4 only"));
            }
            rounds_rainbow_p4(&as_rounds(&input)?)
        }
        VerifyMode::RoundsTriangle => {
            rounds_triangle_multicolored(&as_rounds(&input)?, args.required)?
        }
    };
    ctx.print_json(&report)?;
    match (&report.passed, &report.witness) {
        (true, _) => Ok(()),
        (false, w) => Err(Failure::Verification(format!("{} failed: {w:?}", report.check))),
    }
}

fn search_budget(args: &SearchArgs, param: Parameter) -> Result<SearchBudget, Failure> {
    let mut budget = SearchBudget::default_for(param);
    if let Some(cap) = time_cap(&args.budget)? {
        budget = budget.with_time_cap(cap);
    }
    if let Some(nodes) = args.budget.node_cap {
        budget = budget.with_node_cap(nodes);
    }
    if let Some(v) = args.max_vertices {
        budget.max_vertices = v;
    }
    Ok(budget)
}

fn search(ctx: &Context, args: &SearchArgs) -> Run {
    let kind_label = match args.param {
        SearchParam::B | SearchParam::G | SearchParam::A => args.pattern.to_string(),
        SearchParam::F => format!("p{}q{}", args.p, args.q),
        SearchParam::P => "P4x3".to_string(),
        SearchParam::Ramsey => format!("k{}", args.k),
    };
    let param = match args.param {
        SearchParam::B => Parameter::B(args.pattern),
        SearchParam::G => Parameter::G(args.pattern),
        SearchParam::A => Parameter::A(args.pattern),
        SearchParam::F => Parameter::F { q: args.q },
        SearchParam::P => Parameter::P,
        SearchParam::Ramsey => Parameter::Ramsey { k: args.k },
    };
    let budget = search_budget(args, param)?;
    if let Some(dir) = &args.witness_dir {
        fs::create_dir_all(dir).map_err(|e| io_failure(dir, e))?;
    }

    let mut out = csv::Writer::from_writer(io::stdout().lock());
    let csv_err = |e: csv::Error| usage(format!("stdout: {e}"));
    out.write_record(["parameter", "n", "kind", "value", "nodes", "seconds"])
        .map_err(csv_err)?;
    let mut failure = None;
    for n in args.n.lo..=args.n.hi {
        let found = match args.param {
            SearchParam::Ramsey => ramsey_feasible(n, args.k, &budget).map(|f| Row {
                value: f.feasible.to_string(),
                nodes: f.nodes,
                seconds: f.seconds,
                witness: f.witness.as_ref().map(write_coloring),
            }),
            other => match other {
                SearchParam::B => exact_b(n, args.pattern, &budget),
                SearchParam::G => exact_g(n, args.pattern, &budget),
                SearchParam::A => exact_a(n, args.pattern, &budget),
                SearchParam::F => exact_f(n, args.p, args.q, &budget),
                _ => exact_p(n, &budget),
            }
            .map(|o| Row {
                value: o.value.to_string(),
                nodes: o.nodes,
                seconds: o.seconds,
                witness: Some(write_rounds(&o.witness)),
            }),
        };
        let row = match found {
            Ok(row) => row,
            Err(e) => {
                failure = Some(Failure::from(e));
                break;
            }
        };
        let seconds = if ctx.reproducible {
            String::new()
        } else {
            format!("{:.6}", row.seconds)
        };
        out.write_record([
            param.name().to_string(),
            n.to_string(),
            kind_label.clone(),
            row.value,
            row.nodes.to_string(),
            seconds,
        ])
        .map_err(csv_err)?;
        if let (Some(dir), Some(text)) = (&args.witness_dir, row.witness) {
            let path = dir.join(format!("{}_{}_n{n}.txt", param.name(), kind_label));
            fs::write(&path, text).map_err(|e| io_failure(&path, e))?;
        }
    }
    out.flush().map_err(|e| usage(format!("stdout: {e}")))?;
    failure.map_or(Ok(()), Err)
}

struct Row {
    value: String,
    nodes: u64,
    seconds: f64,
    witness: Option<String>,
}

fn clique_budget(b: &BudgetArgs) -> Result<CliqueBudget, Failure> {
    let mut budget = CliqueBudget::default();
    if let Some(cap) = time_cap(b)? {
        budget.time_cap = cap;
    }
    if let Some(nodes) = b.node_cap {
        budget.node_cap = nodes;
    }
    Ok(budget)
}

fn descriptor_from_flags(args: &CapacityArgs) -> Result<Option<GraphDescriptor>, Failure> {
    match (&args.graph, args.power) {
        (None, None) => Ok(None),
        (Some(g), power) => {
            let base: BaseGraph = g.parse()?;
            let power = power.unwrap_or(1);
            if power == 0 {
                return Err(usage("--power must be at least 1"));
            }
            Ok(Some(GraphDescriptor { base, power }))
        }
        (None, Some(_)) => Err(usage("--power needs --graph")),
    }
}

#[derive(Serialize)]
struct CapacityReport {
    #[serde(flatten)]
    bound: CapacityBound,
    verified_pairs: Option<usize>,
    clique: Option<Vec<String>>,
}

fn capacity(ctx: &Context, args: &CapacityArgs, certificate_text: Option<&str>) -> Run {
    let flags = descriptor_from_flags(args)?;
    match args.resolved_action() {
        CapacityAction::Certify => {
            let text = certificate_text.ok_or_else(|| usage("certify needs --certificate"))?;
            let cert = read_certificate(text)?;
            if let Some(d) = &flags {
                if *d != cert.descriptor {
                    return Err(usage(format!(
                        "certificate is for {}, but {d} was requested",
                        cert.descriptor
                    )));
                }
            }
            if let Verdict::Fail((i, j)) = verify_certificate(&cert)? {
                let d = &cert.descriptor;
                return Err(Failure::Verification(format!(
                    "vertices {i} ({}) and {j} ({}) are not adjacent",
                    d.format_sequence(&cert.vertices[i]),
                    d.format_sequence(&cert.vertices[j])
                )));
            }
            let pairs = cert.size() * (cert.size() - 1) / 2;
            ctx.print_json(CapacityReport {
                bound: certified_capacity_bound(&cert)?,
                verified_pairs: Some(pairs),
                clique: None,
            })
        }
        action @ (CapacityAction::Bound | CapacityAction::Clique) => {
            let d = flags.ok_or_else(|| usage("--graph is required"))?;
            let budget = clique_budget(&args.budget)?;
            let power = d.power_graph();
            let g = or_power(power.base(), d.power, args.cap)?;
            let found = max_clique(&g, &budget);
            // the parallel search may return any maximum clique
            let vertices = if found.exact {
                lex_first_clique(&g, found.size()).expect("a clique of this size exists")
            } else {
                found.vertices
            };
            let bound = CapacityBound {
                graph: d.to_string(),
                t: d.power,
                clique_size: vertices.len(),
                bound: (vertices.len() as f64).powf(1.0 / d.power as f64),
                exact: found.exact,
            };
            let clique = if action == CapacityAction::Clique {
                let cert = CliqueCertificate {
                    descriptor: d.clone(),
                    vertices: vertices.iter().map(|&v| power.sequence(v)).collect(),
                };
                if verify_certificate(&cert)? != Verdict::Pass {
                    return Err(Failure::Verification("solver clique failed verification".into()));
                }
                if let Some(out) = &args.out {
                    emit(Some(out), &write_certificate(&cert))?;
                }
                Some(cert.vertices.iter().map(|s| d.format_sequence(s)).collect())
            } else {
                None
            };
            let exact = bound.exact;
            ctx.print_json(CapacityReport {
                bound,
                verified_pairs: None,
                clique,
            })?;
            if exact {
                Ok(())
            } else {
                Err(Failure::Budget("clique search budget exhausted; bound is a lower bound only".into()))
            }
        }
    }
}

fn run(cli: &Cli) -> Run {
    if let Some(w) = cli.workers {
        if w == 0 {
            return Err(usage("--workers must be positive"));
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(w)
            .build_global()
            .map_err(|e| usage(e.to_string()))?;
    }
    let input = match &cli.command {
        Command::Verify(v) => Some(read_input(v.input.as_ref())?),
        Command::Capacity(c) => match &c.certificate {
            Some(p) => Some(read_input(Some(p))?),
            None => None,
        },
        _ => None,
    };
    let ctx = Context {
        reproducible: cli.reproducible,
        config_hash: config_hash(cli, input.as_deref()),
    };
    match &cli.command {
        Command::Construct(what) => construct(what),
        Command::Verify(v) => verify(&ctx, v, input.as_deref().unwrap_or("")),
        Command::Search(s) => search(&ctx, s),
        Command::Capacity(c) => capacity(&ctx, c, input.as_deref()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("caring: {}", f.message());
            ExitCode::from(f.code())
        }
    }
}
