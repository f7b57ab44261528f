//! Command-line front end. [`run`] takes its streams as arguments so the
//! binary stays a one-liner and tests can drive every command in-process.

use std::ffi::OsString;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand};
use num_rational::Ratio;
use serde_json::json;

use crate::dims::{DimensionReport, SearchBudget};
use crate::error::{Error, Result};
use crate::family::{parse_family, SetFamily};
use crate::graph::{build_graph, graph_stats, ratio_decimal, ratio_string, CliqueOutcome, Mode, DEFAULT_CLIQUE_BUDGET};
use crate::lab::{
    explore_family, explore_questions, gen_named, gen_random, reproduce_table, verify_family, ExploreConfig,
    NamedFamily, NamedParams, RandomConfig,
};
use crate::shifting::{complete_classical_shift, complete_d_shift, d_shift, shift_classical, ShiftTrace};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "halfcube", version, about = "1,2-inclusion graphs, shifting and clique-VC-dimension")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Every dimension of a family, with witnesses under --json.
    Dims(DimsArgs),
    /// Size, density, degeneracy and clique number of the inclusion graph.
    Graph(GraphArgs),
    /// One d-shift, one classical shift, or complete shifting.
    Shift(ShiftArgs),
    /// Density bound, shift properties and bouquet checks; exit 1 on failure.
    Verify(VerifyArgs),
    /// Named or random family.
    Gen(GenArgs),
    /// Summary table over S0 … S4; exit 1 on mismatch.
    Table(TableArgs),
    /// JSON lines comparing density with (vcsdim*)² and vcd·ω.
    Explore(ExploreArgs),
}

#[derive(Args, Debug, Clone)]
pub struct IoArgs {
    /// Input family file, `-` for standard input.
    #[arg(long = "in", value_name = "FILE", default_value = "-")]
    pub input: String,
    /// Write output to FILE instead of standard output.
    #[arg(long, value_name = "FILE")]
    pub out: Option<PathBuf>,
    #[arg(long)]
    pub json: bool,
}

#[derive(Args, Debug, Clone)]
pub struct BudgetArg {
    /// Node budget for dimension and clique searches.
    #[arg(long, value_name = "NODES")]
    pub budget: Option<u64>,
}

impl BudgetArg {
    fn search(&self) -> SearchBudget {
        let mut b = SearchBudget::default();
        if let Some(n) = self.budget {
            b.max_nodes = n;
        }
        b
    }

    fn clique(&self) -> u64 {
        self.budget.unwrap_or(DEFAULT_CLIQUE_BUDGET)
    }
}

#[derive(Args, Debug)]
pub struct DimsArgs {
    #[command(flatten)]
    pub io: IoArgs,
    #[command(flatten)]
    pub budget: BudgetArg,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum GraphMode {
    G1,
    G12,
}

#[derive(Args, Debug)]
pub struct GraphArgs {
    #[command(flatten)]
    pub io: IoArgs,
    #[command(flatten)]
    pub budget: BudgetArg,
    #[arg(long, value_enum, default_value = "g12")]
    pub mode: GraphMode,
    /// Print statistics (the default unless --edges is given alone).
    #[arg(long)]
    pub stats: bool,
    /// Print the edge list.
    #[arg(long)]
    pub edges: bool,
    /// Compute the clique number (default).
    #[arg(long, overrides_with = "no_clique")]
    pub clique: bool,
    #[arg(long = "no-clique")]
    pub no_clique: bool,
}

#[derive(Args, Debug)]
pub struct ShiftArgs {
    #[command(flatten)]
    pub io: IoArgs,
    /// d-shift by the pair {i, j}.
    #[arg(long, value_name = "I,J", value_parser = parse_pair)]
    pub pair: Option<(usize, usize)>,
    /// Classical shift by one element.
    #[arg(long, value_name = "E")]
    pub element: Option<usize>,
    /// Shift to the fixpoint.
    #[arg(long)]
    pub complete: bool,
    /// With --complete, use classical shifts instead of d-shifts.
    #[arg(long)]
    pub classical: bool,
    /// Include the step-by-step trace (JSON only).
    #[arg(long)]
    pub trace: bool,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub io: IoArgs,
    #[command(flatten)]
    pub budget: BudgetArg,
    /// Check this d-shift instead of every step of complete d-shifting.
    #[arg(long, value_name = "I,J", value_parser = parse_pair)]
    pub pair: Option<(usize, usize)>,
}

#[derive(Args, Debug)]
pub struct GenArgs {
    #[arg(long)]
    pub name: Option<String>,
    #[arg(long)]
    pub m: Option<usize>,
    #[arg(long)]
    pub k: Option<usize>,
    #[arg(long)]
    pub r: Option<usize>,
    /// Random family of n sets over m elements.
    #[arg(long, value_name = "M,N", value_parser = parse_pair)]
    pub random: Option<(usize, usize)>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long)]
    pub even: bool,
    #[arg(long)]
    pub pointed: bool,
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long)]
    pub json: bool,
}

#[derive(Args, Debug)]
pub struct TableArgs {
    #[arg(long, default_value_t = 4)]
    pub m: usize,
    #[arg(long, default_value_t = 2)]
    pub k: usize,
    #[command(flatten)]
    pub budget: BudgetArg,
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long)]
    pub json: bool,
}

#[derive(Args, Debug)]
pub struct ExploreArgs {
    /// Explore one family from FILE (`-` for standard input) instead of a sweep.
    #[arg(long = "in", value_name = "FILE")]
    pub input: Option<String>,
    #[arg(long, value_name = "M,N", value_parser = parse_pair)]
    pub random: Option<(usize, usize)>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = 100)]
    pub trials: u64,
    #[arg(long)]
    pub even: bool,
    #[arg(long)]
    pub pointed: bool,
    /// Flag records with ratio > C1·(vcsdim*)².
    #[arg(long, default_value = "1", value_parser = parse_ratio)]
    pub c1: Ratio<u64>,
    /// Flag records with ratio > C2·vcd·ω.
    #[arg(long, default_value = "1", value_parser = parse_ratio)]
    pub c2: Ratio<u64>,
    #[command(flatten)]
    pub budget: BudgetArg,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

fn parse_pair(s: &str) -> std::result::Result<(usize, usize), String> {
    let (a, b) = s.split_once(',').ok_or_else(|| format!("expected two integers `a,b`, got {s:?}"))?;
    let p = |t: &str| t.trim().parse::<usize>().map_err(|e| format!("{t:?}: {e}"));
    Ok((p(a)?, p(b)?))
}

fn parse_ratio(s: &str) -> std::result::Result<Ratio<u64>, String> {
    Ratio::from_str(s.trim()).map_err(|e| format!("{s:?}: {e}"))
}

/// What a command produced and the exit code it implies.
struct Output {
    text: String,
    code: i32,
}

impl Output {
    fn ok(text: String) -> Self {
        Output { text, code: EXIT_OK }
    }
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::SearchBudgetExceeded { .. } | Error::CliqueBudgetExceeded(_) => EXIT_BUDGET,
        Error::TableMismatch(_) => EXIT_FAILED,
        _ => EXIT_INPUT,
    }
}

struct Ctx<'a> {
    stdin: &'a mut dyn Read,
}

impl Ctx<'_> {
    fn read_family(&mut self, path: &str) -> Result<SetFamily> {
        let text = if path == "-" {
            let mut s = String::new();
            self.stdin.read_to_string(&mut s).map_err(|e| Error::BadFormat(format!("standard input: {e}")))?;
            s
        } else {
            std::fs::read_to_string(path).map_err(|e| Error::BadFormat(format!("{path}: {e}")))?
        };
        parse_family(&text)
    }
}

fn pretty(v: &serde_json::Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json values serialize");
    s.push('\n');
    s
}

fn dims(ctx: &mut Ctx, a: &DimsArgs) -> Result<Output> {
    let fam = ctx.read_family(&a.io.input)?;
    let r = DimensionReport::compute(&fam, &a.budget.search())?;
    if a.io.json {
        return Ok(Output::ok(pretty(&r.to_json())));
    }
    let opt = |v: Option<usize>| v.map_or("-".to_string(), |v| v.to_string());
    let mut s = String::new();
    s.push_str(&format!("vcd          {}\n", r.vcd.value));
    s.push_str(&format!("vccdim       {}\n", opt(r.vccdim.as_ref().map(|d| d.value))));
    s.push_str(&format!(
        "vccdim*      {} (twist {}{})\n",
        r.vccdim_star.value,
        r.vccdim_star.twist,
        if r.vccdim_star.lifted { ", lifted" } else { "" }
    ));
    s.push_str(&format!("vcsdim       {}\n", opt(r.vcsdim.as_ref().map(|d| d.value))));
    s.push_str(&format!("vcsdim*      {} (twist {})\n", r.vcsdim_star.value, r.vcsdim_star.twist));
    s.push_str(&format!("2VC          {}\n", r.two_vc.value));
    Ok(Output::ok(s))
}

fn graph(ctx: &mut Ctx, a: &GraphArgs) -> Result<Output> {
    let fam = ctx.read_family(&a.io.input)?;
    let mode = match a.mode {
        GraphMode::G1 => Mode::G1,
        GraphMode::G12 => Mode::G12,
    };
    let g = build_graph(&fam, mode);
    let want_stats = a.stats || !a.edges;
    let want_clique = !a.no_clique || a.clique;
    let stats = want_stats.then(|| graph_stats(&g, want_clique, a.budget.clique()));
    let code = match stats.as_ref().map(|s| &s.clique) {
        Some(CliqueOutcome::BudgetExceeded { .. }) => EXIT_BUDGET,
        _ => EXIT_OK,
    };
    let edges = a.edges.then(|| g.edge_list());
    let text = if a.io.json {
        pretty(&json!({
            "stats": stats.as_ref().map(|s| s.to_json()),
            "edges": edges.as_ref().map(|e| serde_json::to_value(e).expect("edge list serializes")),
        }))
    } else {
        let mut s = String::new();
        if let Some(st) = &stats {
            s.push_str(&format!("n={}\ne={}\n", st.n, st.e));
            s.push_str(&format!("density={} ({})\n", ratio_string(st.density), ratio_decimal(st.density)));
            s.push_str(&format!("degeneracy={}\n", st.degeneracy.value));
            match &st.clique {
                CliqueOutcome::Found { size, .. } => s.push_str(&format!("omega={size}\n")),
                CliqueOutcome::BudgetExceeded { nodes } => {
                    s.push_str(&format!("omega=unknown (budget of {nodes} nodes exceeded)\n"))
                }
                CliqueOutcome::NotRequested => {}
            }
        }
        if let Some(e) = &edges {
            s.push_str(&e.to_text());
        }
        s
    };
    Ok(Output { text, code })
}

fn shift(ctx: &mut Ctx, a: &ShiftArgs) -> Result<Output> {
    let fam = ctx.read_family(&a.io.input)?;
    let chosen = [a.pair.is_some(), a.element.is_some(), a.complete].iter().filter(|&&b| b).count();
    if chosen != 1 {
        return Err(Error::BadParam("shift needs exactly one of --pair, --element, --complete".into()));
    }
    if a.classical && !a.complete {
        return Err(Error::BadParam("--classical only applies with --complete".into()));
    }
    let trace: ShiftTrace = if let Some((i, j)) = a.pair {
        let (out, step) = d_shift(&fam, i, j)?;
        single_step_trace(&fam, out, step)
    } else if let Some(e) = a.element {
        let (out, step) = shift_classical(&fam, e)?;
        single_step_trace(&fam, out, step)
    } else if a.classical {
        complete_classical_shift(&fam)
    } else {
        complete_d_shift(&fam)?
    };
    let text = if a.io.json {
        let mut v = json!({ "family": trace.final_family.to_json() });
        if a.trace {
            v["trace"] = trace.to_json();
        }
        pretty(&v)
    } else {
        trace.final_family.to_text()
    };
    Ok(Output::ok(text))
}

fn single_step_trace(fam: &SetFamily, out: SetFamily, step: crate::shifting::ShiftStep) -> ShiftTrace {
    let potential = vec![fam.sum_sizes(), out.sum_sizes()];
    ShiftTrace { initial: fam.clone(), steps: vec![step], final_family: out, potential }
}

fn verify(ctx: &mut Ctx, a: &VerifyArgs) -> Result<Output> {
    let fam = ctx.read_family(&a.io.input)?;
    let r = verify_family(&fam, a.pair, &a.budget.search())?;
    let code = if r.all_pass() { EXIT_OK } else { EXIT_FAILED };
    let text = if a.io.json {
        pretty(&r.to_json())
    } else {
        let d = &r.density;
        let mut s = format!(
            "density {} <= C({},2) = {}: {}\n",
            ratio_string(d.ratio),
            d.d,
            d.bound,
            if d.holds { "holds" } else { "VIOLATED" }
        );
        let checks = r.shift.iter().flat_map(|p| &p.checks).chain(r.bouquet.iter().flat_map(|b| &b.report.checks));
        for c in checks {
            s.push_str(&format!("{} {}\n", if c.pass { "pass" } else { "FAIL" }, c.name));
            if let Some(ce) = &c.counterexample {
                s.push_str(&format!("  {}\n", ce.replace('\n', "\n  ")));
            }
        }
        s.push_str(if r.all_pass() { "all checks pass\n" } else { "verification failed\n" });
        s
    };
    Ok(Output { text, code })
}

fn gen(a: &GenArgs) -> Result<Output> {
    let fam = match (&a.name, a.random) {
        (Some(_), Some(_)) => return Err(Error::BadParam("give --name or --random, not both".into())),
        (None, None) => return Err(Error::BadParam("gen needs --name or --random".into())),
        (Some(name), None) => {
            let name: NamedFamily = name.parse()?;
            gen_named(name, &NamedParams { m: a.m, k: a.k, r: a.r })?
        }
        (None, Some((m, n))) => gen_random(&RandomConfig {
            m,
            n,
            seed: a.seed,
            stream: 0,
            require_even: a.even,
            require_pointed: a.pointed,
        })?,
    };
    Ok(Output::ok(if a.json { pretty(&fam.to_json()) } else { fam.to_text() }))
}

fn table(a: &TableArgs) -> Result<Output> {
    let r = reproduce_table(a.m, a.k, &a.budget.search())?;
    let code = if r.all_match() { EXIT_OK } else { EXIT_FAILED };
    let text = if a.json { pretty(&r.to_json()) } else { r.to_text() };
    Ok(Output { text, code })
}

fn explore(ctx: &mut Ctx, a: &ExploreArgs) -> Result<Output> {
    let (m, n) = a.random.unwrap_or((0, 0));
    let mut cfg = ExploreConfig::new(m, n, a.seed, a.trials);
    cfg.require_even = a.even;
    cfg.require_pointed = a.pointed;
    cfg.c1 = a.c1;
    cfg.c2 = a.c2;
    cfg.budget = a.budget.search();
    cfg.clique_budget = a.budget.clique();
    match (&a.input, a.random) {
        (Some(_), Some(_)) => Err(Error::BadParam("give --in or --random, not both".into())),
        (None, None) => Err(Error::BadParam("explore needs --random m,n or --in".into())),
        (Some(path), None) => {
            let fam = ctx.read_family(path)?;
            let r = explore_family(&fam, &cfg)?;
            Ok(Output::ok(format!("{}\n", r.to_json())))
        }
        (None, Some(_)) => {
            let run = explore_questions(&cfg)?;
            let code = if run.is_partial() { EXIT_BUDGET } else { EXIT_OK };
            Ok(Output { text: run.to_jsonl(), code })
        }
    }
}

fn out_path(cmd: &Command) -> Option<&PathBuf> {
    match cmd {
        Command::Dims(a) => a.io.out.as_ref(),
        Command::Graph(a) => a.io.out.as_ref(),
        Command::Shift(a) => a.io.out.as_ref(),
        Command::Verify(a) => a.io.out.as_ref(),
        Command::Gen(a) => a.out.as_ref(),
        Command::Table(a) => a.out.as_ref(),
        Command::Explore(a) => a.out.as_ref(),
    }
}

/// Parses `args` (program name first) and runs one command.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let rendered = e.render().to_string();
            let _ = if e.use_stderr() { stderr.write_all(rendered.as_bytes()) } else { stdout.write_all(rendered.as_bytes()) };
            return code;
        }
    };
    let mut ctx = Ctx { stdin };
    let result = match &cli.command {
        Command::Dims(a) => dims(&mut ctx, a),
        Command::Graph(a) => graph(&mut ctx, a),
        Command::Shift(a) => shift(&mut ctx, a),
        Command::Verify(a) => verify(&mut ctx, a),
        Command::Gen(a) => gen(a),
        Command::Table(a) => table(a),
        Command::Explore(a) => explore(&mut ctx, a),
    };
    match result {
        Ok(out) => {
            let written = match out_path(&cli.command) {
                Some(path) => std::fs::write(path, out.text.as_bytes()),
                None => stdout.write_all(out.text.as_bytes()),
            };
            match written {
                Ok(()) => out.code,
                Err(e) => {
                    let _ = writeln!(stderr, "error: cannot write output: {e}");
                    EXIT_INPUT
                }
            }
        }
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            exit_code(&e)
        }
    }
}

/// [`run`] on the process's own arguments and streams.
pub fn main_with_std() -> i32 {
    let stdin = io::stdin();
    let stdout = io::stdout();
    let stderr = io::stderr();
    run(std::env::args_os(), &mut stdin.lock(), &mut stdout.lock(), &mut stderr.lock())
}
