//! `qhecke`: command-line front end for the qhecke library.
//!
//! Exit status is 0 on success, 1 when a verification or certificate check
//! fails, and 2 on usage errors (bad literals, unreadable input, size limits).

mod sweep;

use std::fmt::Write as _;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use qhecke::filtration::{filtration_v_with, filtration_x, k_alpha, verify_appendix, y_module, FiltrationReport, Tiebreak};
use qhecke::greene::predict_shape_detailed;
use qhecke::hecke::{interval_module, module_v, module_x, CombModule, Outcome};
use qhecke::insertion::{build_pq, insert, TwoLineArray};
use qhecke::qsym::{basis_elem, expand_in, f_elem, Basis, QSymElem};
use qhecke::{Composition, Error, Filling, Perm};
use serde_json::{json, Value};

const DEFAULT_MAX_N: usize = 8;

#[derive(Parser)]
#[command(name = "qhecke", version, about = "Young composition tableaux, 0-Hecke modules and their filtrations")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Insert one letter into a Young composition tableau.
    Insert {
        /// Tableau JSON file, or `-` for stdin (empty input is the empty tableau).
        #[arg(long)]
        tableau: String,
        #[arg(long)]
        letter: usize,
        /// Also print the cells touched by the insertion.
        #[arg(long)]
        trace: bool,
        #[arg(long)]
        json: bool,
    },
    /// Column-recording insertion of a word.
    RskHat {
        #[arg(long, value_parser = parse_word)]
        word: Word,
        #[arg(long)]
        json: bool,
    },
    /// Predict the insertion shape of a word from its increasing subsequences.
    Shape {
        #[arg(long, value_parser = parse_word)]
        word: Word,
        /// Recompute the shape by insertion and compare.
        #[arg(long)]
        oracle: bool,
        #[arg(long)]
        json: bool,
    },
    /// Expand a quasisymmetric function in a named basis.
    Expand {
        /// `KIND:ALPHA` with KIND one of f, schur, qs, yqs, dualimm, ext, or `@FILE` holding element JSON.
        #[arg(long, value_parser = parse_elem)]
        elem: ElemSpec,
        #[arg(long, value_enum)]
        basis: BasisName,
        #[arg(long)]
        json: bool,
    },
    /// Build a 0-Hecke module and print its action table.
    Module {
        #[arg(value_enum, ignore_case = true)]
        kind: ModuleKind,
        /// Composition for V and X.
        #[arg(long, value_parser = parse_composition)]
        alpha: Option<Composition>,
        /// Bottom of the interval.
        #[arg(long, value_parser = parse_perm)]
        lo: Option<Perm>,
        /// Top of the interval.
        #[arg(long, value_parser = parse_perm)]
        hi: Option<Perm>,
        /// Read a module dump produced by `--json` (kind `load`).
        #[arg(long)]
        from: Option<String>,
        #[arg(long)]
        json: bool,
        /// Print Graphviz instead of the table.
        #[arg(long)]
        dot: bool,
    },
    /// Distinguished filtration of V or X.
    Filtrate {
        #[arg(long, value_enum, ignore_case = true)]
        module: TableauModule,
        #[arg(long, value_parser = parse_composition)]
        alpha: Composition,
        /// Order for recording tableaux of equal partition shape (V only).
        #[arg(long, value_enum, default_value_t = TiebreakArg::Descending)]
        tiebreak: TiebreakArg,
        /// Write the interval's action graph as Graphviz to this file.
        #[arg(long)]
        dot: Option<PathBuf>,
        /// Write the JSON report to this file, or to stdout when no file is given.
        #[arg(long, num_args = 0..=1, default_missing_value = "-")]
        json: Option<String>,
    },
    /// The basis of the top quotient of V and its characteristic.
    Kalpha {
        #[arg(long, value_parser = parse_composition)]
        alpha: Composition,
        #[arg(long)]
        json: bool,
    },
    /// Check the facts certifying that X_(5,2,1) has no interval filtration.
    VerifyAppendix {
        #[arg(long)]
        json: bool,
    },
    /// Run every bulk property suite up to size n.
    Sweep {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ModuleKind {
    V,
    X,
    Interval,
    Load,
}

#[derive(Clone, Copy, ValueEnum)]
enum TableauModule {
    V,
    X,
}

#[derive(Clone, Copy, ValueEnum)]
enum TiebreakArg {
    Descending,
    Ascending,
}

#[derive(Clone, Copy, ValueEnum)]
enum BasisName {
    Schur,
    Qs,
    Yqs,
    Dualimm,
    Ext,
}

impl BasisName {
    fn basis(self) -> Basis {
        match self {
            BasisName::Schur => Basis::Schur,
            BasisName::Qs => Basis::QuasiSchur,
            BasisName::Yqs => Basis::YoungQuasiSchur,
            BasisName::Dualimm => Basis::DualImmaculate,
            BasisName::Ext => Basis::ExtendedSchur,
        }
    }
}

#[derive(Clone)]
struct Word(Vec<usize>);

#[derive(Clone)]
enum ElemSpec {
    Named { kind: String, alpha: Composition },
    File(PathBuf),
}

/// Why a command did not succeed.
enum Failure {
    /// Bad input; exit status 2.
    Usage(String),
    /// A computed object failed a check; exit status 1.
    Check(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Certificate(_) => Failure::Check(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type CmdResult = Result<Output, Failure>;

/// Text to print plus whether every check in it passed.
struct Output {
    text: String,
    ok: bool,
}

impl Output {
    fn ok(text: String) -> Self {
        Output { text, ok: true }
    }
}

fn parse_composition(s: &str) -> Result<Composition, String> {
    s.parse().map_err(|_| format!("`{s}` is not a composition literal such as 2,2,2"))
}

fn parse_perm(s: &str) -> Result<Perm, String> {
    s.parse().map_err(|_| format!("`{s}` is not a permutation such as 615243 or 6,1,5,2,4,3"))
}

fn parse_word(s: &str) -> Result<Word, String> {
    let letters: Option<Vec<usize>> = if s.contains(',') {
        s.split(',').map(|t| t.trim().parse().ok().filter(|&x| x > 0)).collect()
    } else {
        s.chars().map(|ch| ch.to_digit(10).filter(|&d| d > 0).map(|d| d as usize)).collect()
    };
    match letters {
        Some(w) if !w.is_empty() => Ok(Word(w)),
        _ => Err(format!("`{s}` is not a word of positive letters such as 52783146 or 5,2,7")),
    }
}

fn parse_elem(s: &str) -> Result<ElemSpec, String> {
    if let Some(path) = s.strip_prefix('@') {
        return Ok(ElemSpec::File(path.into()));
    }
    let (kind, alpha) = s.split_once(':').ok_or_else(|| format!("`{s}` is not of the form KIND:ALPHA"))?;
    if !["f", "schur", "qs", "yqs", "dualimm", "ext"].contains(&kind) {
        return Err(format!("unknown element kind `{kind}`"));
    }
    Ok(ElemSpec::Named { kind: kind.to_string(), alpha: parse_composition(alpha)? })
}

fn max_n() -> Result<usize, Failure> {
    match std::env::var("QHECKE_MAX_N") {
        Ok(v) => v.trim().parse().map_err(|_| Failure::Usage(format!("QHECKE_MAX_N=`{v}` is not a number"))),
        Err(_) => Ok(DEFAULT_MAX_N),
    }
}

fn within_limit(what: &str, n: usize) -> Result<(), Failure> {
    let limit = max_n()?;
    if n > limit {
        return Err(Failure::Usage(format!("{what} has size {n}, above the limit {limit} (set QHECKE_MAX_N to raise it)")));
    }
    Ok(())
}

fn read_input(source: &str) -> Result<String, Failure> {
    let mut text = String::new();
    if source == "-" {
        io::stdin().read_to_string(&mut text)?;
    } else {
        text = std::fs::read_to_string(source).map_err(|e| Failure::Usage(format!("`{source}`: {e}")))?;
    }
    Ok(text)
}

fn parse_json(text: &str, source: &str) -> Result<Value, Failure> {
    serde_json::from_str(text).map_err(|e| Failure::Usage(format!("`{source}`: {e}")))
}

/// Reads a filling; an insertion trace is accepted through its `result`.
fn read_tableau(source: &str) -> Result<Filling, Failure> {
    let text = read_input(source)?;
    if text.trim().is_empty() {
        return Ok(Filling::empty());
    }
    let mut v = parse_json(&text, source)?;
    if let Some(result) = v.get_mut("result") {
        v = result.take();
    }
    serde_json::from_value(v).map_err(|e| Failure::Usage(format!("`{source}`: {e}")))
}

fn pretty_json(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("values serialize");
    s.push('\n');
    s
}

fn set_text(s: &std::collections::BTreeSet<usize>) -> String {
    format!("{{{}}}", s.iter().map(usize::to_string).collect::<Vec<_>>().join(","))
}

fn indent(block: &str) -> String {
    block.lines().map(|l| format!("  {l}\n")).collect()
}

fn run_insert(source: &str, letter: usize, trace: bool, as_json: bool) -> CmdResult {
    let t = read_tableau(source)?;
    within_limit("tableau", t.size() + 1)?;
    let tr = insert(&t, letter)?;
    if as_json {
        let v = if trace { serde_json::to_value(&tr).expect("traces serialize") } else { tr.result.to_json() };
        return Ok(Output::ok(pretty_json(&v)));
    }
    let mut out = tr.result.pretty();
    if trace {
        let cells: Vec<String> = tr.insertion_sequence.iter().map(ToString::to_string).collect();
        let _ = writeln!(out, "insertion sequence: {}", cells.join(" "));
        let _ = writeln!(out, "new cell: {}", tr.new_cell);
    }
    Ok(Output::ok(out))
}

fn run_rsk_hat(word: &[usize], as_json: bool) -> CmdResult {
    within_limit("word", word.len())?;
    let (p, q) = build_pq(&TwoLineArray::from_word(word)?);
    if as_json {
        let v = json!({"word": word, "p_hat": p, "q_hat": q});
        return Ok(Output::ok(pretty_json(&v)));
    }
    let text = format!(
        "P̂ (shape {}):\n{}Q̂ (shape {}):\n{}",
        p.shape(),
        indent(&p.pretty()),
        q.shape(),
        indent(&q.pretty())
    );
    Ok(Output::ok(text))
}

fn run_shape(word: &[usize], oracle: bool, as_json: bool) -> CmdResult {
    within_limit("word", word.len())?;
    let d = predict_shape_detailed(word)?;
    let inserted = oracle.then(|| build_pq(&TwoLineArray::from_word(word).expect("checked word")).0.shape());
    let ok = inserted.as_ref().is_none_or(|s| s == &d.shape);
    if as_json {
        let mut v = serde_json::to_value(&d).expect("predictions serialize");
        if let Some(s) = &inserted {
            v["inserted"] = json!(s);
            v["agrees"] = json!(ok);
        }
        return Ok(Output { text: pretty_json(&v), ok });
    }
    let mut out = format!("λ = {}\n", d.lambda);
    let chain: Vec<String> = d.chain.iter().map(set_text).collect();
    let _ = writeln!(out, "mIES chain: {}", chain.join(" ⊂ "));
    let _ = writeln!(out, "predicted shape: {}", d.shape);
    if let Some(s) = inserted {
        let verdict = if ok { "agrees" } else { "DIFFERS" };
        let _ = writeln!(out, "inserted shape: {s} ({verdict})");
    }
    Ok(Output { text: out, ok })
}

fn run_expand(spec: &ElemSpec, basis: BasisName, as_json: bool) -> CmdResult {
    let x: QSymElem = match spec {
        ElemSpec::File(path) => {
            let source = path.to_string_lossy();
            let v = parse_json(&read_input(&source)?, &source)?;
            serde_json::from_value(v).map_err(|e| Failure::Usage(format!("`{source}`: {e}")))?
        }
        ElemSpec::Named { kind, alpha } => {
            within_limit("composition", alpha.size())?;
            let named = |b| basis_elem(b, alpha).as_ref().clone();
            match kind.as_str() {
                "f" => f_elem(alpha),
                "schur" => {
                    if !alpha.is_partition() {
                        return Err(Failure::Usage(format!("schur needs a partition, got `{alpha}`")));
                    }
                    named(Basis::Schur)
                }
                "qs" => named(Basis::QuasiSchur),
                "yqs" => named(Basis::YoungQuasiSchur),
                "dualimm" => named(Basis::DualImmaculate),
                _ => named(Basis::ExtendedSchur),
            }
        }
    };
    within_limit("degree", x.degree())?;
    let e = expand_in(&x, basis.basis())?;
    if as_json {
        let coeffs: serde_json::Map<String, Value> = e.coeffs.iter().map(|(a, c)| (a.dot_key(), json!(c))).collect();
        let v = json!({"element": x, "basis": format!("{:?}", basis.basis()), "coeffs": coeffs, "positive": e.positive});
        return Ok(Output::ok(pretty_json(&v)));
    }
    let mut out = format!("element: {x}\n");
    let _ = writeln!(out, "basis: {:?} ({:?} solve)", basis.basis(), e.method);
    for (a, c) in &e.coeffs {
        let _ = writeln!(out, "  {c:>4}  {a}");
    }
    let _ = writeln!(out, "positive: {}", e.positive);
    Ok(Output::ok(out))
}

fn action_table(m: &CombModule) -> String {
    let width = m.labels().iter().map(|l| l.chars().count()).max().unwrap_or(1).max(5);
    let mut out = format!("{:<width$}", "basis");
    for i in 1..m.n() {
        let _ = write!(out, "  {:<width$}", format!("π{i}"));
    }
    out.push('\n');
    for b in 0..m.dim() {
        let _ = write!(out, "{:<width$}", m.label(b));
        for i in 1..m.n() {
            let cell = match m.act(i, b) {
                Outcome::Fix => "fix".to_string(),
                Outcome::Kill => "0".to_string(),
                Outcome::Move(t) => m.label(t).to_string(),
            };
            let _ = write!(out, "  {cell:<width$}");
        }
        out.push('\n');
    }
    out
}

fn run_module(
    kind: ModuleKind,
    alpha: Option<Composition>,
    lo: Option<Perm>,
    hi: Option<Perm>,
    from: Option<String>,
    as_json: bool,
    dot: bool,
) -> CmdResult {
    let need_alpha = || alpha.clone().ok_or_else(|| Failure::Usage("this module needs --alpha".into()));
    let m = match kind {
        ModuleKind::V | ModuleKind::X => {
            let a = need_alpha()?;
            within_limit("composition", a.size())?;
            if matches!(kind, ModuleKind::V) {
                module_v(&a)?
            } else {
                module_x(&a)?
            }
        }
        ModuleKind::Interval => {
            let (Some(lo), Some(hi)) = (lo, hi) else {
                return Err(Failure::Usage("interval needs --lo and --hi".into()));
            };
            within_limit("permutation", lo.n())?;
            interval_module(&lo, &hi)?
        }
        ModuleKind::Load => {
            let source = from.ok_or_else(|| Failure::Usage("load needs --from".into()))?;
            CombModule::from_json(&parse_json(&read_input(&source)?, &source)?)?
        }
    };
    let violation = m.relation_violation();
    let text = if as_json {
        pretty_json(&m.to_json())
    } else if dot {
        m.to_dot()
    } else {
        let mut out = action_table(&m);
        let _ = writeln!(out, "dimension {}, characteristic {}", m.dim(), m.full_characteristic());
        if let Some(v) = &violation {
            let _ = writeln!(out, "relations FAIL: {v}");
        }
        out
    };
    Ok(Output { text, ok: violation.is_none() })
}

fn filtration_text(r: &FiltrationReport) -> String {
    let mut out = format!("interval [{}, {}] with {} elements\n", r.interval.lo, r.interval.hi, r.interval.len());
    for (k, s) in r.strata.iter().enumerate() {
        let members: Vec<String> = s.members.iter().map(ToString::to_string).collect();
        let _ = writeln!(out, "stratum {}: γ = {}, recording {}", k + 1, s.gamma, s.recording);
        let _ = writeln!(out, "  members: {}", members.join(" "));
    }
    let status = |ok: bool| if ok { "ok" } else { "FAIL" };
    let _ = writeln!(out, "submodule chain: {}", status(r.submodule_chain_ok));
    let _ = writeln!(out, "layer characteristics: {}", status(r.characteristics_ok));
    out
}

fn write_file(path: &Path, text: &str) -> Result<(), Failure> {
    std::fs::write(path, text).map_err(|e| Failure::Usage(format!("`{}`: {e}", path.display())))
}

fn run_filtrate(
    module: TableauModule,
    alpha: &Composition,
    tiebreak: TiebreakArg,
    dot: Option<PathBuf>,
    json_target: Option<String>,
) -> CmdResult {
    within_limit("composition", alpha.size())?;
    let report = match module {
        TableauModule::V => {
            let t = match tiebreak {
                TiebreakArg::Descending => Tiebreak::ShapeDescending,
                TiebreakArg::Ascending => Tiebreak::ShapeAscending,
            };
            filtration_v_with(alpha, t)?
        }
        TableauModule::X => filtration_x(alpha)?,
    };
    if let Some(path) = dot {
        write_file(&path, &interval_module(&report.interval.lo, &report.interval.hi)?.to_dot())?;
    }
    let ok = report.is_verified();
    let text = match json_target.as_deref() {
        Some("-") => pretty_json(&report.to_json()),
        Some(path) => {
            write_file(Path::new(path), &pretty_json(&report.to_json()))?;
            filtration_text(&report)
        }
        None => filtration_text(&report),
    };
    Ok(Output { text, ok })
}

fn run_kalpha(alpha: &Composition, as_json: bool) -> CmdResult {
    within_limit("composition", alpha.size())?;
    let k = k_alpha(alpha)?;
    let ch = y_module(alpha)?.full_characteristic();
    if as_json {
        let v = json!({"alpha": alpha, "elements": k.iter().map(ToString::to_string).collect::<Vec<_>>(), "characteristic": ch});
        return Ok(Output::ok(pretty_json(&v)));
    }
    let mut out = format!("K_{alpha}: {} elements\n", k.len());
    for s in &k {
        let _ = writeln!(out, "  {s}");
    }
    let _ = writeln!(out, "characteristic: {ch}");
    Ok(Output::ok(out))
}

fn run_verify_appendix(as_json: bool) -> CmdResult {
    let r = verify_appendix().or_else(|e| match e {
        Error::Certificate(_) => qhecke::filtration::appendix_report(),
        other => Err(other),
    })?;
    let ok = r.all_hold();
    if as_json {
        return Ok(Output { text: pretty_json(&r.to_json()), ok });
    }
    let mut groups: Vec<(&str, usize, usize)> = Vec::new();
    for f in &r.facts {
        match groups.iter_mut().find(|(g, _, _)| *g == f.group) {
            Some(entry) => {
                entry.1 += 1;
                entry.2 += usize::from(f.holds);
            }
            None => groups.push((f.group, 1, usize::from(f.holds))),
        }
    }
    let width = groups.iter().map(|(g, _, _)| g.chars().count()).max().unwrap_or(0);
    let mut out = String::new();
    for (g, total, held) in groups {
        let verdict = if held == total { "PASS" } else { "FAIL" };
        let _ = writeln!(out, "{verdict}  {g:<width$}  {held}/{total} facts on the {}-element interval", r.interval_size);
    }
    Ok(Output { text: out, ok })
}

fn run(cli: Cli) -> CmdResult {
    match cli.command {
        Command::Insert { tableau, letter, trace, json } => run_insert(&tableau, letter, trace, json),
        Command::RskHat { word, json } => run_rsk_hat(&word.0, json),
        Command::Shape { word, oracle, json } => run_shape(&word.0, oracle, json),
        Command::Expand { elem, basis, json } => run_expand(&elem, basis, json),
        Command::Module { kind, alpha, lo, hi, from, json, dot } => run_module(kind, alpha, lo, hi, from, json, dot),
        Command::Filtrate { module, alpha, tiebreak, dot, json } => run_filtrate(module, &alpha, tiebreak, dot, json),
        Command::Kalpha { alpha, json } => run_kalpha(&alpha, json),
        Command::VerifyAppendix { json } => run_verify_appendix(json),
        Command::Sweep { n, json } => {
            within_limit("sweep", n)?;
            let rows = sweep::run(n);
            let ok = rows.iter().all(|r| r.failures.is_empty());
            let text = if json { pretty_json(&sweep::to_json(&rows)) } else { sweep::table(&rows) };
            Ok(Output { text, ok })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(out) => {
            let mut stdout = io::stdout().lock();
            let _ = stdout.write_all(out.text.as_bytes());
            let _ = stdout.flush();
            if out.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(Failure::Check(msg)) => {
            eprintln!("qhecke: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("qhecke: {msg}");
            ExitCode::from(2)
        }
    }
}
