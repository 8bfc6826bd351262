//! Command-line front end.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::PathBuf;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use contracta_core::defcheck::{self, HomCandidate, TestAlgebra};
use contracta_core::freealg::OrderSpec;
use contracta_core::knit::{self, DynkinType, MarkedDynkin};
use contracta_core::ncgb::{self, Quotient, Verdict, DEFAULT_CEILING};
use contracta_core::quiverpres::{abelianize, builtin_spec, contract, Builtin};
use contracta_core::structalg::FiniteAlgebra;
use contracta_core::{Alphabet, Error, KillSet, Presentation, Rational};
use num_traits::{ToPrimitive, Zero};
use serde::Deserialize;

use crate::format::{self, FormatError};
use crate::report::{self, Report};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 1;
pub const EXIT_INFINITE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "contracta", version, about = "Contraction algebras of quivers with relations")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Text)]
    pub format: OutputFormat,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Text,
    Json,
}

#[derive(Debug, Clone, Args)]
pub struct Input {
    /// Presentation file.
    #[arg(conflicts_with = "builtin", required_unless_present = "builtin")]
    pub file: Option<PathBuf>,
    /// Builtin presentation, `name` or `name:n`.
    #[arg(long)]
    pub builtin: Option<String>,
    /// Vertices to contract away, comma separated.
    #[arg(long, value_delimiter = ',')]
    pub kill: Vec<String>,
    /// Generator precedence, highest first, e.g. `x>y`.
    #[arg(long)]
    pub order: Option<String>,
    /// Reverse the declaration-order precedence.
    #[arg(long)]
    pub reverse: bool,
    /// Largest degree cap tried by completion.
    #[arg(long, env = "CONTRACTA_DEGREE_CEILING", default_value_t = DEFAULT_CEILING)]
    pub ceiling: usize,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Gröbner basis and standard monomials.
    Gb(Input),
    /// Dimension of the contraction.
    Width(Input),
    /// Dimension of the abelianized contraction.
    Cwidth(Input),
    /// Print the contracted presentation.
    Contract(Input),
    /// Whether the contraction is commutative.
    Commute(Input),
    /// Whether the contraction is self-injective.
    Selfinj(Input),
    /// Dimension of n/n^2 for the augmentation ideal n.
    Tangent(Input),
    /// Knit on a marked Dynkin diagram.
    Knit {
        /// `A1`, `D4`, `E6`, `E7`, `E8(5)`, `E8(6)`, or a type such as `D5` with `--mark`.
        #[arg(long = "type")]
        kind: String,
        /// Marked vertex index for a plain type.
        #[arg(long)]
        mark: Option<usize>,
    },
    /// Check whether an assignment defines a homomorphism into a test algebra.
    Checkhom {
        #[command(flatten)]
        input: Input,
        /// `dual`, `trunc:k`, a builtin spec or a presentation file.
        #[arg(long, required_unless_present = "gamma_table", conflicts_with = "gamma_table")]
        gamma: Option<String>,
        /// JSON file `{"labels": [...], "table": [[[...]]]}`.
        #[arg(long)]
        gamma_table: Option<PathBuf>,
        /// `generator=expression` over the test algebra's basis labels.
        #[arg(long, value_delimiter = ';')]
        map: Vec<String>,
    },
    /// Print a builtin presentation, or list them.
    Builtin { name: Option<String> },
    /// Knitting lower bounds on the marked diagrams.
    Table,
}

/// Result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

enum Failure {
    Input(String),
    Infinite(usize),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::InfiniteOrUnknown { cap } | Error::GroebnerBudget { cap } => Failure::Infinite(cap),
            other => Failure::Input(other.to_string()),
        }
    }
}

impl From<FormatError> for Failure {
    fn from(e: FormatError) -> Self {
        match e {
            FormatError::Core(c) => c.into(),
            other => Failure::Input(other.to_string()),
        }
    }
}

type Run<T> = std::result::Result<T, Failure>;

struct Loaded {
    label: String,
    presentation: Presentation,
    order: OrderSpec,
    ceiling: usize,
}

impl Loaded {
    fn order_name(&self, p: &Presentation) -> String {
        self.order.resolve(p.alphabet()).describe(p.alphabet())
    }
}

fn load_presentation(file: Option<&PathBuf>, spec: Option<&str>) -> Run<(String, Presentation)> {
    match (file, spec) {
        (_, Some(spec)) => Ok((spec.to_string(), builtin_spec(spec)?)),
        (Some(path), None) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
            let p = format::parse_presentation(&text)
                .map_err(|e| Failure::Input(format!("{}:{e}", path.display())))?;
            Ok((path.display().to_string(), p))
        }
        (None, None) => Err(Failure::Input("no input given".into())),
    }
}

fn parse_order(text: Option<&str>, reverse: bool) -> OrderSpec {
    let precedence = text
        .map(|t| {
            t.split(['>', ','])
                .map(str::trim)
                .filter(|s| !s.is_empty())
                .map(String::from)
                .collect()
        })
        .unwrap_or_default();
    OrderSpec {
        precedence,
        reversed: reverse,
    }
}

fn load(input: &Input) -> Run<Loaded> {
    if input.ceiling == 0 {
        return Err(Failure::Input("degree ceiling must be positive".into()));
    }
    let (label, presentation) = load_presentation(input.file.as_ref(), input.builtin.as_deref())?;
    let presentation = presentation.validated()?;
    Ok(Loaded {
        label,
        presentation,
        order: parse_order(input.order.as_deref(), input.reverse),
        ceiling: input.ceiling,
    })
}

fn kill_set(p: &Presentation, names: &[String]) -> Run<Option<KillSet>> {
    if names.is_empty() {
        return Ok(None);
    }
    let refs: Vec<&str> = names.iter().map(String::as_str).collect();
    Ok(Some(KillSet::new(p.quiver(), &refs)?))
}

fn contracted(l: &Loaded, kill: &[String]) -> Run<Presentation> {
    Ok(match kill_set(&l.presentation, kill)? {
        Some(k) => contract(&l.presentation, &k)?,
        None => l.presentation.clone(),
    })
}

fn finite_quotient(l: &Loaded, p: &Presentation) -> Run<Quotient> {
    let q = ncgb::quotient(p, &l.order.resolve(p.alphabet()), l.ceiling)?;
    match q.verdict() {
        Verdict::Finite(_) => Ok(q),
        Verdict::InfiniteOrUnknown { cap } => Err(Failure::Infinite(cap)),
    }
}

fn algebra(l: &Loaded, p: &Presentation) -> Run<FiniteAlgebra> {
    Ok(FiniteAlgebra::build(&finite_quotient(l, p)?)?)
}

fn basis_labels(q: &Quotient) -> Vec<String> {
    let a = q.basis.alphabet();
    q.monomials.words().map(|w| a.render(w)).collect()
}

/// Runs one parsed invocation.
pub fn execute(cli: &Cli) -> Outcome {
    let json = cli.format == OutputFormat::Json;
    let (name, input_label) = describe_command(&cli.command);
    let mut report = Report::new(name, &input_label, "");
    let mut text = String::new();
    let mut rows = None;
    let (code, stderr) = match dispatch(&cli.command, &mut report, &mut text) {
        Ok(r) => {
            rows = r;
            (EXIT_OK, String::new())
        }
        Err(Failure::Input(msg)) => {
            report.verdict = report::ERROR.into();
            report.error = Some(msg.clone());
            (EXIT_INPUT, format!("error: {msg}\n"))
        }
        Err(Failure::Infinite(cap)) => {
            report.verdict = report::INFINITE_OR_UNKNOWN.into();
            report.degree_cap = Some(cap);
            text = format!("infinite_or_unknown (degree cap {cap})\n");
            (EXIT_INFINITE, String::new())
        }
    };
    let stdout = if json {
        let mut s = match rows {
            Some(rows) => serde_json::to_string_pretty(&rows),
            None => serde_json::to_string_pretty(&report),
        }
        .expect("reports serialize");
        s.push('\n');
        s
    } else {
        text
    };
    Outcome { code, stdout, stderr }
}

fn describe_command(c: &Command) -> (&'static str, String) {
    let label = |i: &Input| {
        i.builtin
            .clone()
            .or_else(|| i.file.as_ref().map(|f| f.display().to_string()))
            .unwrap_or_default()
    };
    match c {
        Command::Gb(i) => ("gb", label(i)),
        Command::Width(i) => ("width", label(i)),
        Command::Cwidth(i) => ("cwidth", label(i)),
        Command::Contract(i) => ("contract", label(i)),
        Command::Commute(i) => ("commute", label(i)),
        Command::Selfinj(i) => ("selfinj", label(i)),
        Command::Tangent(i) => ("tangent", label(i)),
        Command::Knit { kind, .. } => ("knit", kind.clone()),
        Command::Checkhom { input, .. } => ("checkhom", label(input)),
        Command::Builtin { name } => ("builtin", name.clone().unwrap_or_default()),
        Command::Table => ("table", String::new()),
    }
}

/// Fills `report` and the text output. Returns per-row reports for commands
/// whose JSON form is an array.
fn dispatch(c: &Command, report: &mut Report, out: &mut String) -> Run<Option<Vec<Report>>> {
    match c {
        Command::Gb(i) => {
            let l = load(i)?;
            let p = contracted(&l, &i.kill)?;
            report.input = l.label.clone();
            report.order = l.order_name(&p);
            let q = ncgb::quotient(&p, &l.order.resolve(p.alphabet()), l.ceiling)?;
            let elements: Vec<String> = q.basis.elements().iter().map(ToString::to_string).collect();
            let _ = writeln!(out, "order: {}", report.order);
            let _ = writeln!(out, "groebner basis ({} elements):", elements.len());
            for e in &elements {
                let _ = writeln!(out, "  {e}");
            }
            report.groebner = Some(elements);
            match q.verdict() {
                Verdict::Finite(d) => {
                    let basis = basis_labels(&q);
                    let _ = writeln!(out, "standard monomials: {}", basis.join(", "));
                    let _ = writeln!(out, "dimension: {d}");
                    report.basis = Some(basis);
                    report.dimension = Some(d);
                    report.verdict = report::FINITE.into();
                    Ok(None)
                }
                Verdict::InfiniteOrUnknown { cap } => {
                    let _ = writeln!(out, "infinite_or_unknown (degree cap {cap})");
                    Err(Failure::Infinite(cap))
                }
            }
        }
        Command::Width(i) | Command::Cwidth(i) => {
            let l = load(i)?;
            let mut p = contracted(&l, &i.kill)?;
            if matches!(c, Command::Cwidth(_)) {
                p = abelianize(&p)?;
            }
            report.input = l.label.clone();
            report.order = l.order_name(&p);
            let q = finite_quotient(&l, &p)?;
            let d = q.verdict().dimension().expect("finite");
            report.dimension = Some(d);
            report.basis = Some(basis_labels(&q));
            report.verdict = report::FINITE.into();
            let _ = writeln!(out, "{d}");
            Ok(None)
        }
        Command::Contract(i) => {
            let l = load(i)?;
            if i.kill.is_empty() {
                return Err(Failure::Input("contract needs --kill".into()));
            }
            let p = contracted(&l, &i.kill)?;
            report.input = l.label.clone();
            report.order = l.order_name(&p);
            let text = format::print_presentation(&p);
            out.push_str(&text);
            report.presentation = Some(text);
            Ok(None)
        }
        Command::Commute(i) | Command::Selfinj(i) | Command::Tangent(i) => {
            let l = load(i)?;
            let p = contracted(&l, &i.kill)?;
            report.input = l.label.clone();
            report.order = l.order_name(&p);
            if !p.quiver().is_single_vertex() {
                return Err(Error::NotLocal.into());
            }
            let a = algebra(&l, &p)?;
            report.dimension = Some(a.dim());
            report.verdict = report::FINITE.into();
            match c {
                Command::Commute(_) => {
                    let v = a.is_commutative();
                    report.commutative = Some(v);
                    let _ = writeln!(out, "{v}");
                }
                Command::Selfinj(_) => {
                    let v = a.is_self_injective();
                    report.self_injective = Some(v);
                    let _ = writeln!(out, "{v}");
                }
                _ => {
                    let t = a.tangent_dimension();
                    report.tangent = Some(t);
                    let _ = writeln!(out, "{t}");
                }
            }
            Ok(None)
        }
        Command::Knit { kind, mark } => {
            let d = marked_diagram(kind, *mark)?;
            let run = knit::knit(&d);
            let seq: Vec<u64> = run.marked_sequence.iter().map(|x| x.to_u64().expect("small")).collect();
            let total = run.total.to_u64().expect("small");
            let _ = writeln!(out, "total {total}");
            let _ = writeln!(
                out,
                "sequence {}",
                seq.iter().map(u64::to_string).collect::<Vec<_>>().join(",")
            );
            report.knit_total = Some(total);
            report.knit_sequence = Some(seq);
            Ok(None)
        }
        Command::Checkhom {
            input,
            gamma,
            gamma_table,
            map,
        } => {
            let l = load(input)?;
            let p = contracted(&l, &input.kill)?;
            report.input = l.label.clone();
            report.order = l.order_name(&p);
            let g = test_algebra(gamma.as_deref(), gamma_table.as_ref(), &l)?;
            let h = candidate(&p, &g, map)?;
            let ok = defcheck::verify_hom(&p, &g, &h)?;
            report.verdict = if ok { report::ACCEPTED } else { report::REJECTED }.into();
            let _ = writeln!(out, "{}", report.verdict);
            Ok(None)
        }
        Command::Builtin { name } => match name {
            Some(spec) => {
                let p = builtin_spec(spec)?;
                report.order = OrderSpec::default().resolve(p.alphabet()).describe(p.alphabet());
                let text = format::print_presentation(&p);
                out.push_str(&text);
                report.presentation = Some(text);
                Ok(None)
            }
            None => {
                for b in Builtin::ALL {
                    let suffix = if b.is_parametric() { ":n" } else { "" };
                    let _ = writeln!(out, "{}{suffix}", b.name());
                }
                Ok(None)
            }
        },
        Command::Table => {
            let rows = knit::lower_bound_table();
            let mut reports = Vec::new();
            for row in &rows {
                let total = row.total.to_u64().expect("small");
                let _ = writeln!(out, "{:<6} >= {total}", row.label);
                let mut r = Report::new("table", row.label, "");
                r.knit_total = Some(total);
                r.knit_sequence = Some(
                    knit::knit(&row.diagram)
                        .marked_sequence
                        .iter()
                        .map(|x| x.to_u64().expect("small"))
                        .collect(),
                );
                reports.push(r);
            }
            Ok(Some(reports))
        }
    }
}

fn marked_diagram(kind: &str, mark: Option<usize>) -> Run<MarkedDynkin> {
    if mark.is_none() {
        if let Some(d) = MarkedDynkin::named(kind) {
            return Ok(d);
        }
    }
    let bad = || Failure::Input(format!("unknown Dynkin type `{kind}`"));
    let (head, rest) = kind.split_at(kind.len().min(1));
    let n: usize = rest.parse().map_err(|_| bad())?;
    let t = match (head, n) {
        ("A", n) => DynkinType::A(n),
        ("D", n) => DynkinType::D(n),
        ("E", 6) => DynkinType::E6,
        ("E", 7) => DynkinType::E7,
        ("E", 8) => DynkinType::E8,
        _ => return Err(bad()),
    };
    let mark = mark.ok_or_else(|| Failure::Input(format!("`{kind}` needs --mark")))?;
    MarkedDynkin::new(t, mark).map_err(|e| Failure::Input(e.to_string()))
}

#[derive(Deserialize)]
#[serde(untagged)]
enum Entry {
    Int(i64),
    Text(String),
}

#[derive(Deserialize)]
struct TableFile {
    labels: Vec<String>,
    table: Vec<Vec<Vec<Entry>>>,
}

fn rational(e: &Entry) -> Run<Rational> {
    match e {
        Entry::Int(n) => Ok(Rational::from_integer((*n).into())),
        Entry::Text(s) => s
            .trim()
            .parse::<Rational>()
            .map_err(|_| Failure::Input(format!("bad table entry `{s}`"))),
    }
}

fn test_algebra(gamma: Option<&str>, table: Option<&PathBuf>, l: &Loaded) -> Run<TestAlgebra> {
    if let Some(path) = table {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
        let t: TableFile = serde_json::from_str(&text)
            .map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
        let rows = t
            .table
            .iter()
            .map(|r| r.iter().map(|c| c.iter().map(rational).collect()).collect())
            .collect::<Run<Vec<Vec<Vec<Rational>>>>>()?;
        return Ok(TestAlgebra::new(FiniteAlgebra::from_table(t.labels, rows)?)?);
    }
    let spec = gamma.expect("clap requires one of --gamma and --gamma-table");
    if spec == "dual" {
        return Ok(TestAlgebra::dual_numbers());
    }
    if let Some(k) = spec.strip_prefix("trunc:") {
        let k: usize = k
            .parse()
            .ok()
            .filter(|&k| k >= 1)
            .ok_or_else(|| Failure::Input(format!("bad truncation `{spec}`")))?;
        return Ok(TestAlgebra::truncated(k));
    }
    let path = PathBuf::from(spec);
    let (_, p) = if path.exists() {
        load_presentation(Some(&path), None)?
    } else {
        load_presentation(None, Some(spec))?
    };
    Ok(TestAlgebra::from_presentation(&p.validated()?, &l.order, l.ceiling)?)
}

/// Reads `gen=expr` entries; expressions are polynomials in the test
/// algebra's identifier-shaped basis labels, evaluated with its table.
fn candidate(p: &Presentation, g: &TestAlgebra, map: &[String]) -> Run<HomCandidate> {
    let a = g.algebra();
    let names: Vec<String> = a
        .labels()
        .iter()
        .filter(|s| s.chars().all(|c| c.is_ascii_alphanumeric() || c == '_') && s.starts_with(|c: char| c.is_ascii_alphabetic() || c == '_'))
        .cloned()
        .collect();
    let label_index: Vec<usize> = names
        .iter()
        .map(|n| a.labels().iter().position(|l| l == n).expect("label"))
        .collect();
    let gamma_alphabet: Arc<Alphabet> = Alphabet::new(names.clone())?;
    let generators = p.alphabet();
    let mut assignment: Vec<Option<Vec<Rational>>> = vec![None; generators.len()];
    for entry in map.iter().map(|s| s.trim()).filter(|s| !s.is_empty()) {
        let (lhs, rhs) = entry
            .split_once('=')
            .ok_or_else(|| Failure::Input(format!("map entry `{entry}` is not `generator=expression`")))?;
        let gen = generators
            .index_of(lhs.trim())
            .ok_or_else(|| Failure::Input(format!("unknown generator `{}`", lhs.trim())))?;
        let poly = format::parse_poly(rhs, &gamma_alphabet).map_err(|e| Failure::Input(format!("map `{entry}`: {e}")))?;
        let mut v = vec![Rational::zero(); a.dim()];
        for (w, c) in poly.terms() {
            let mut acc = a.unit();
            for &l in w.letters() {
                acc = a.mul(&acc, &a.basis_vector(label_index[l as usize]));
            }
            for (o, x) in v.iter_mut().zip(acc) {
                *o += c * x;
            }
        }
        assignment[gen as usize] = Some(v);
    }
    let missing: Vec<&str> = assignment
        .iter()
        .enumerate()
        .filter(|(_, v)| v.is_none())
        .map(|(i, _)| generators.name(i as u32))
        .collect();
    if !missing.is_empty() {
        return Err(Failure::Input(format!("no image given for {}", missing.join(", "))));
    }
    Ok(HomCandidate {
        assignment: assignment.into_iter().map(Option::unwrap).collect(),
    })
}

/// Parses arguments and runs. Usage errors exit with the input-error code.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => execute(&cli),
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let rendered = e.render().to_string();
            if e.use_stderr() {
                Outcome {
                    code,
                    stdout: String::new(),
                    stderr: rendered,
                }
            } else {
                Outcome {
                    code,
                    stdout: rendered,
                    stderr: String::new(),
                }
            }
        }
    }
}
