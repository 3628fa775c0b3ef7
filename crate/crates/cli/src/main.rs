use std::io::Write;
use std::path::Path;
use std::process::ExitCode;

use abelian_core::construct::{codim1_ideal, codim2_ideal_nilpotent, Codim, ConstructionTrace};
use abelian_core::corpus::{self, parse, parse_vectors, AlgebraFile, AnyAlgebra, FAMILY_SPECS};
use abelian_core::engine::{
    self, alpha_simple, decide_abelian_subalgebra, enumerate_borel_root_ideals, invariants, BoundRecord, EngineConfig,
    InvariantResult, LogEntry, Mode, SimpleType, Target, Witness,
};
use abelian_core::lie::{classify_with, StructureReport};
use abelian_core::selftest::{run_criterion, SelftestConfig};
use abelian_core::{Error, Field, LieAlgebra, Subspace};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

#[derive(Parser, Debug)]
#[command(name = "lie-abelian", version, about = "Abelian subalgebras and ideals of maximal dimension")]
struct Cli {
    /// Closure decides over the algebraic closure; ground only reports witnesses over the input field.
    #[arg(long, value_enum, global = true, default_value_t = ModeArg::Closure)]
    mode: ModeArg,
    /// Reduction steps allowed per pivot pattern.
    #[arg(long, global = true, env = "LIE_ABELIAN_BUDGET", default_value_t = engine::PATTERN_BUDGET)]
    budget: u64,
    /// Reduction steps allowed per decision.
    #[arg(long, global = true, default_value_t = engine::DECISION_BUDGET)]
    decision_budget: u64,
    #[arg(long, value_enum, global = true, default_value_t = Format::Table)]
    format: Format,
    /// Seed for the random changes of basis in `selftest`.
    #[arg(long, global = true, default_value_t = 2024)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum ModeArg {
    Closure,
    Ground,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Machine,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Parse an algebra and verify antisymmetry and the Jacobi identity.
    Check { input: String },
    /// alpha, beta, series, structural flags and bounds.
    Invariants { input: String },
    /// Turn an abelian subalgebra of codimension 1 or 2 into an abelian ideal.
    ConstructIdeal {
        input: String,
        /// Basis of the abelian subalgebra, one vector per line. Found by search when absent.
        #[arg(long)]
        subalgebra: Option<String>,
    },
    /// alpha of a complex simple Lie algebra.
    SimpleAlpha {
        #[arg(long = "type")]
        ty: SimpleType,
        #[arg(long)]
        rank: u64,
    },
    /// Abelian root ideals of the Borel subalgebra of sl_{rank+1}.
    BorelCount {
        #[arg(long)]
        rank: usize,
    },
    /// Shipped algebras and family specs.
    Corpus {
        #[command(subcommand)]
        action: CorpusAction,
    },
    /// Run the acceptance checks.
    Selftest {
        /// Only this criterion (1..=10).
        #[arg(long)]
        criterion: Option<usize>,
    },
}

#[derive(Subcommand, Debug)]
enum CorpusAction {
    List,
    /// Print a shipped file or a family member in the text format.
    Emit {
        name: String,
    },
}

/// Output of one command.
struct Report {
    table: String,
    machine: Value,
}

/// Failure after partial output, e.g. a failed selftest criterion.
enum Failure {
    Error(Error),
    Report(Report, u8),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Error(e)
    }
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::PreconditionFailed(_) | Error::MaximalityViolated(_) => 2,
        Error::Undecided(_) => 3,
        Error::Soundness(_) => 4,
        _ => 1,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(report) => {
            emit(&report, cli.format);
            ExitCode::SUCCESS
        }
        Err(Failure::Report(report, code)) => {
            emit(&report, cli.format);
            ExitCode::from(code)
        }
        Err(Failure::Error(e)) => {
            let code = exit_code(&e);
            match cli.format {
                Format::Table => eprintln!("error: {e}"),
                Format::Machine => println!("{}", json!({ "error": e.to_string(), "exit_code": code })),
            }
            ExitCode::from(code)
        }
    }
}

fn emit(report: &Report, format: Format) {
    let text = match format {
        Format::Table => report.table.clone(),
        Format::Machine => serde_json::to_string_pretty(&report.machine).expect("json values serialize") + "\n",
    };
    let _ = std::io::stdout().lock().write_all(text.as_bytes());
}

fn engine_config(cli: &Cli) -> Result<EngineConfig, Error> {
    if cli.budget == 0 || cli.decision_budget == 0 {
        return Err(Error::BadParameter("budgets must be positive".into()));
    }
    Ok(EngineConfig { decision_budget: cli.decision_budget, ..EngineConfig::default() }.with_pattern_budget(cli.budget))
}

fn mode(cli: &Cli) -> Mode {
    match cli.mode {
        ModeArg::Closure => Mode::Closure,
        ModeArg::Ground => Mode::Ground,
    }
}

/// A path, a shipped file name, or a family spec, in that order.
fn load(input: &str) -> Result<AlgebraFile, Error> {
    let path = Path::new(input);
    if path.is_file() {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::BadParameter(format!("cannot read {}: {e}", path.display())))?;
        return parse(&text);
    }
    if let Some(text) = corpus::shipped_file(input) {
        return parse(text);
    }
    Ok(AlgebraFile { algebra: corpus::family(input)?, annotations: Vec::new() })
}

fn run(cli: &Cli) -> Result<Report, Failure> {
    let config = engine_config(cli)?;
    match &cli.command {
        Command::Check { input } => Ok(check(input)?),
        Command::Invariants { input } => {
            let file = load(input)?;
            Ok(match &file.algebra {
                AnyAlgebra::Q(g) => invariants_report(g, &file, mode(cli), &config)?,
                AnyAlgebra::QI(g) => invariants_report(g, &file, mode(cli), &config)?,
            })
        }
        Command::ConstructIdeal { input, subalgebra } => {
            let file = load(input)?;
            let text = match subalgebra {
                Some(p) => {
                    Some(std::fs::read_to_string(p).map_err(|e| Error::BadParameter(format!("cannot read {p}: {e}")))?)
                }
                None => None,
            };
            Ok(match &file.algebra {
                AnyAlgebra::Q(g) => construct_report(g, text.as_deref(), &config)?,
                AnyAlgebra::QI(g) => construct_report(g, text.as_deref(), &config)?,
            })
        }
        Command::SimpleAlpha { ty, rank } => {
            let a = alpha_simple(*ty, *rank)?;
            Ok(Report {
                table: format!("alpha({ty}{rank}) = {a}\n"),
                machine: json!({ "type": ty.to_string(), "rank": rank, "alpha": a }),
            })
        }
        Command::BorelCount { rank } => {
            let b = enumerate_borel_root_ideals(*rank)?;
            let mut table = format!("rank {rank}: {} abelian root ideals\n", b.count());
            for ideal in &b.ideals {
                let roots: Vec<String> = ideal.iter().map(|(i, j)| format!("E{i}{j}")).collect();
                table.push_str(&format!("  {{{}}}\n", roots.join(", ")));
            }
            Ok(Report { table, machine: json!({ "rank": rank, "count": b.count(), "ideals": b.ideals }) })
        }
        Command::Corpus { action: CorpusAction::List } => {
            let shipped = corpus::shipped()?;
            let mut table = String::from("shipped files:\n");
            for (name, f) in &shipped {
                table.push_str(&format!("  {name:<18} {} dim {}\n", f.algebra.name(), f.algebra.dim()));
            }
            table.push_str("family specs:\n");
            for (spec, desc) in FAMILY_SPECS {
                table.push_str(&format!("  {spec:<18} {desc}\n"));
            }
            let files: Vec<Value> = shipped
                .iter()
                .map(|(name, f)| json!({ "file": name, "name": f.algebra.name(), "dim": f.algebra.dim() }))
                .collect();
            let specs: Vec<Value> = FAMILY_SPECS.iter().map(|(s, d)| json!({ "spec": s, "description": d })).collect();
            Ok(Report { table, machine: json!({ "files": files, "families": specs }) })
        }
        Command::Corpus { action: CorpusAction::Emit { name } } => {
            let text = match corpus::shipped_file(name) {
                Some(t) => t.to_string(),
                None => corpus::family(name)?.to_text(),
            };
            Ok(Report { machine: json!({ "text": text }), table: text })
        }
        Command::Selftest { criterion } => {
            let sc = SelftestConfig { engine: config, seed: cli.seed, ..SelftestConfig::default() };
            let ids: Vec<usize> = match criterion {
                Some(c) if (1..=10).contains(c) => vec![*c],
                Some(c) => return Err(Error::BadParameter(format!("no criterion {c}")).into()),
                None => (1..=10).collect(),
            };
            let mut table = String::new();
            let mut rows = Vec::new();
            let mut failed = 0;
            for id in ids {
                let r = run_criterion(id, &sc);
                table.push_str(&r.line());
                table.push('\n');
                failed += usize::from(!r.passed);
                rows.push(json!({
                    "id": r.id,
                    "title": r.title,
                    "passed": r.passed,
                    "detail": r.detail,
                    "seconds": r.elapsed.as_secs_f64(),
                }));
            }
            table.push_str(&format!("{} passed, {failed} failed\n", rows.len() - failed));
            let report = Report { table, machine: json!({ "criteria": rows, "failed": failed }) };
            if failed > 0 {
                Err(Failure::Report(report, 4))
            } else {
                Ok(report)
            }
        }
    }
}

fn check(input: &str) -> Result<Report, Error> {
    let file = load(input)?;
    let (name, dim, field) = (file.algebra.name().to_string(), file.algebra.dim(), file.algebra.tag());
    Ok(Report {
        table: format!("{name}: valid Lie algebra of dimension {dim} over {field}\n"),
        machine: json!({ "name": name, "dim": dim, "field": field.to_string(), "valid": true }),
    })
}

fn tokens<F: Field>(rows: &[Vec<F>]) -> Vec<Vec<String>> {
    rows.iter().map(|r| r.iter().map(Field::token).collect()).collect()
}

fn subspace_rows<F: Field>(s: &Subspace<F>) -> Vec<Vec<String>> {
    tokens(&s.basis_vectors())
}

fn target_name(t: Target) -> &'static str {
    match t {
        Target::AbelianSubalgebra => "abelian subalgebra",
        Target::AbelianIdeal => "abelian ideal",
    }
}

fn log_json(e: &LogEntry) -> Value {
    json!({
        "target": target_name(e.target),
        "mode": e.mode.to_string(),
        "k": e.k,
        "decision": e.decision.to_string(),
        "patterns": e.patterns,
        "refuted": e.refuted,
        "undecided": e.undecided,
        "reductions": e.reductions,
        "note": e.note,
    })
}

fn witness_json<F: Field>(w: &Option<Witness<F>>) -> Value {
    match w {
        None => Value::Null,
        Some(w) => json!({
            "needs_extension": matches!(w, Witness::Extended(_)),
            "rows": w.rows(),
        }),
    }
}

fn invariant_json<F: Field>(r: &InvariantResult<F>) -> Value {
    json!({
        "value": r.value,
        "lower": r.lower,
        "upper": r.upper,
        "mode": r.mode.to_string(),
        "witness": witness_json(&r.witness),
    })
}

fn invariant_cell<F: Field>(r: &InvariantResult<F>) -> String {
    match r.value {
        Some(v) => v.to_string(),
        None => format!("{}..{}", r.lower, r.upper),
    }
}

fn bound_json(b: &BoundRecord) -> Value {
    json!({ "target": target_name(b.target), "lower": b.lower, "upper": b.upper, "source": b.source })
}

fn structure_json(s: &StructureReport) -> Value {
    json!({
        "abelian": s.is_abelian,
        "nilpotent": s.is_nilpotent,
        "solvable": s.is_solvable,
        "filiform": s.is_filiform,
        "semisimple": s.is_semisimple,
        "characteristically_nilpotent": s.is_characteristically_nilpotent,
        "almost_abelian": s.is_almost_abelian,
        "nilpotency_class": s.nilpotency_class,
        "derived_length": s.derived_length,
        "k_abelian_index": s.k_abelian_index,
        "derivation_dim": s.derivation_dim,
        "lower_central_dims": s.lower_central_dims,
        "derived_dims": s.derived_dims,
    })
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn invariants_report<F: Field>(
    g: &LieAlgebra<F>,
    file: &AlgebraFile,
    mode: Mode,
    config: &EngineConfig,
) -> Result<Report, Failure> {
    let report = invariants(g, mode, config)?;
    let s = classify_with(g, config);
    let mut t = String::new();
    t.push_str(&format!("algebra     {} (dim {}, field {})\n", g.name(), g.dim(), g.field_tag()));
    t.push_str(&format!("mode        {mode}\n"));
    t.push_str(&format!("alpha       {}\n", invariant_cell(&report.alpha)));
    t.push_str(&format!("beta        {}\n", invariant_cell(&report.beta)));
    for (label, w) in [("alpha witness", &report.alpha.witness), ("beta witness", &report.beta.witness)] {
        if let Some(w) = w {
            let rows: Vec<String> = w.rows().iter().map(|r| format!("[{}]", r.join(" "))).collect();
            t.push_str(&format!("{label:<13} {}\n", rows.join(" ")));
        }
    }
    t.push_str(&format!("lower central dims  {:?}\n", s.lower_central_dims));
    t.push_str(&format!("derived dims        {:?}\n", s.derived_dims));
    let flags = [
        ("abelian", s.is_abelian),
        ("nilpotent", s.is_nilpotent),
        ("solvable", s.is_solvable),
        ("filiform", s.is_filiform),
        ("semisimple", s.is_semisimple),
        ("characteristically nilpotent", s.is_characteristically_nilpotent),
    ];
    for (name, v) in flags {
        t.push_str(&format!("{name:<30} {}\n", yes_no(v)));
    }
    t.push_str(&format!("{:<30} {}\n", "almost abelian", s.is_almost_abelian.map_or("undecided", yes_no)));
    t.push_str(&format!("{:<30} {}\n", "derivation algebra dim", s.derivation_dim));
    for b in &report.bounds {
        t.push_str(&format!("bound  {} in [{}, {}]  ({})\n", target_name(b.target), b.lower, b.upper, b.source));
    }
    t.push_str("decision log:\n");
    for e in report.log() {
        t.push_str(&format!(
            "  {:<18} {:<7} k={:<2} {:<9} patterns={} refuted={} undecided={} reductions={}{}\n",
            target_name(e.target),
            e.mode,
            e.k,
            e.decision,
            e.patterns,
            e.refuted,
            e.undecided,
            e.reductions,
            e.note.as_deref().map(|n| format!("  ({n})")).unwrap_or_default()
        ));
    }
    let mut mismatches = Vec::new();
    for (key, r) in [("alpha", &report.alpha), ("beta", &report.beta)] {
        if let (Some(expected), Some(v)) = (file.expected(key).and_then(|a| a.as_usize()), r.value) {
            if mode == Mode::Closure && expected != v {
                mismatches.push(format!("{key} = {v}, file expects {expected}"));
            }
        }
    }
    let (report_alpha_open, report_beta_open) = (report.alpha.value.is_none(), report.beta.value.is_none());
    let machine = json!({
        "name": g.name(),
        "dim": g.dim(),
        "field": g.field_tag().to_string(),
        "mode": mode.to_string(),
        "mismatches": mismatches,
        "alpha": invariant_json(&report.alpha),
        "beta": invariant_json(&report.beta),
        "structure": structure_json(&s),
        "bounds": report.bounds.iter().map(bound_json).collect::<Vec<_>>(),
        "log": report.log().map(log_json).collect::<Vec<_>>(),
    });
    let report = Report { table: t, machine };
    if !mismatches.is_empty() {
        return Err(Failure::Report(report, exit_code(&Error::Soundness(mismatches.join("; ")))));
    }
    if mode == Mode::Closure && (report_alpha_open || report_beta_open) {
        return Err(Failure::Report(report, exit_code(&Error::Undecided(String::new()))));
    }
    Ok(report)
}

fn trace_json<F: Field>(tr: &ConstructionTrace<F>) -> Value {
    json!({
        "codim": match tr.codim { Codim::One => 1, Codim::Two => 2 },
        "short_circuit": tr.short_circuit,
        "basis": tokens(&tr.basis),
        "swaps": tr.swaps,
        "rescales": tr.rescales.iter().map(|(v, c)| json!({ "vector": v, "factor": c.token() })).collect::<Vec<_>>(),
        "coefficients": tr.coefficients.iter().map(Field::token).collect::<Vec<_>>(),
        "v": tokens(&tr.v),
        "ell": tr.ell,
        "lambda": tr.lambda.as_ref().map(Field::token),
        "checks": tr.checks.iter().map(|(name, ok)| json!({ "check": name, "passed": ok })).collect::<Vec<_>>(),
        "output": subspace_rows(&tr.output),
    })
}

fn construct_report<F: Field>(
    g: &LieAlgebra<F>,
    subalgebra: Option<&str>,
    config: &EngineConfig,
) -> Result<Report, Error> {
    let n = g.dim();
    let a = match subalgebra {
        Some(text) => Subspace::span(n, parse_vectors::<F>(text, n)?)?,
        None => {
            let k = engine::alpha(g, Mode::Closure, config)?.require()?;
            if k + 2 < n {
                return Err(Error::PreconditionFailed(format!("alpha = {k} is below n-2 = {}", n.saturating_sub(2))));
            }
            let o = decide_abelian_subalgebra(g, k, Mode::Ground, config);
            match o.witness {
                Some(Witness::Ground(s)) => s,
                _ => {
                    return Err(Error::Undecided(format!(
                        "no abelian subalgebra of dimension {k} found over the ground field"
                    )))
                }
            }
        }
    };
    let (ideal, trace) = match n.checked_sub(a.dim()) {
        Some(1) => codim1_ideal(g, &a)?,
        Some(2) => codim2_ideal_nilpotent(g, &a)?,
        _ => {
            return Err(Error::PreconditionFailed(format!(
                "subalgebra of dimension {} has codimension other than 1 or 2",
                a.dim()
            )))
        }
    };
    let fmt_rows = |rows: Vec<Vec<String>>| -> String {
        rows.iter().map(|r| format!("[{}]", r.join(" "))).collect::<Vec<_>>().join(" ")
    };
    let mut t = String::new();
    t.push_str(&format!("algebra   {} (dim {n})\n", g.name()));
    t.push_str(&format!("input     {}\n", fmt_rows(subspace_rows(&a))));
    match &trace.short_circuit {
        Some(reason) => t.push_str(&format!("unchanged: {reason}\n")),
        None => {
            for s in &trace.swaps {
                t.push_str(&format!("swap      {s}\n"));
            }
            for (v, c) in &trace.rescales {
                t.push_str(&format!("rescale   {v} by {}\n", c.token()));
            }
            let coeffs: Vec<String> = trace.coefficients.iter().map(Field::token).collect();
            t.push_str(&format!("coefficients {}\n", coeffs.join(" ")));
            if let Some(l) = trace.ell {
                t.push_str(&format!("ell       {l}\n"));
            }
            if let Some(l) = &trace.lambda {
                t.push_str(&format!("lambda    {}\n", l.token()));
            }
            for (name, ok) in &trace.checks {
                t.push_str(&format!("check     {name}: {}\n", if *ok { "ok" } else { "FAILED" }));
            }
        }
    }
    t.push_str(&format!("ideal     {}\n", fmt_rows(subspace_rows(&ideal))));
    Ok(Report {
        table: t,
        machine: json!({
            "name": g.name(),
            "dim": n,
            "input": subspace_rows(&a),
            "ideal": subspace_rows(&ideal),
            "trace": trace_json(&trace),
        }),
    })
}
