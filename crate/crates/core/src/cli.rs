//! The `liestruct` command line tool.
//!
//! Exit codes: 0 on success, 1 when the analysis finds something negative
//! (a Jacobi violation, an obstruction, a divergent contraction), 2 on
//! usage, input and parse errors.

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::catalog::{catalog_build, CATALOG};
use crate::cochain::Cochain;
use crate::cohomology::{cohomology_report, NORMALIZATION};
use crate::contraction::{contract, iw_family, ww_family, ParametricFamily};
use crate::deformation::{integrate, perturbation_decompose, Integration};
use crate::document::{parse, parse_family, AlgebraDocument};
use crate::error::Error;
use crate::law::StructureClass;
use crate::variety::{orbit_dimension, rigidity_verdict, RigidityStatus};
use crate::{Law, PerturbedLaw};

#[derive(Debug, Parser)]
#[command(name = "liestruct", version, about = "Exact computations on Lie algebra laws")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Kv,
}

#[derive(Debug, Args)]
struct Input {
    /// A law file, or `catalog:<name>`.
    source: String,
    /// Catalog parameter `key=value`; may be repeated.
    #[arg(long = "param", value_name = "KEY=VALUE")]
    params: Vec<String>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check the Jacobi identity.
    Check(Input),
    /// Series, center, derivations and orbit dimension.
    Invariants(Input),
    /// Dimensions of cochains, cocycles, coboundaries and cohomology up to order 3.
    Cohomology(Input),
    /// The cohomological rigidity test.
    Rigidity(Input),
    /// Contract along a one-parameter family and print the limit.
    Contract {
        #[command(flatten)]
        input: Input,
        /// Diagonal family eps^n1, .., eps^nk.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true, group = "family_kind")]
        weights: Option<Vec<i64>>,
        /// Inonu-Wigner family fixing the first p basis vectors.
        #[arg(long, value_name = "P", group = "family_kind")]
        iw: Option<usize>,
        /// Family file made of `map eJ = ...` lines.
        #[arg(long, value_name = "FILE", group = "family_kind")]
        family: Option<PathBuf>,
    },
    /// Integrate an infinitesimal deformation.
    Deform {
        #[command(flatten)]
        input: Input,
        /// Law file holding the 2-cocycle phi_1.
        #[arg(long, value_name = "FILE")]
        cocycle: PathBuf,
        /// Highest order to integrate.
        #[arg(long, default_value_t = 3)]
        order: usize,
    },
    /// Flag decomposition of a perturbed law written with eps terms.
    Decompose(Input),
    /// List catalog entries or print one as a law file.
    Catalog {
        name: Option<String>,
        #[arg(long = "param", value_name = "KEY=VALUE")]
        params: Vec<String>,
    },
}

/// What a command printed and how it exited.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn usage(message: impl Into<String>) -> Self {
        Self { code: 2, stdout: String::new(), stderr: format!("error: {}\n", message.into()) }
    }

    fn negative(stdout: String, message: impl Into<String>) -> Self {
        Self { code: 1, stdout, stderr: format!("{}\n", message.into()) }
    }
}

/// A report rendered either as text lines or as `key=value` lines.
struct Report {
    format: Format,
    text: Vec<String>,
    kv: Vec<String>,
}

impl Report {
    fn new(format: Format) -> Self {
        let header = format!("# {NORMALIZATION}");
        Self { format, text: vec![header.clone()], kv: vec![header] }
    }

    fn plain(format: Format) -> Self {
        Self { format, text: Vec::new(), kv: Vec::new() }
    }

    fn field(&mut self, label: &str, key: &str, value: impl ToString) -> &mut Self {
        let value = value.to_string();
        self.text.push(format!("{label}: {value}"));
        self.kv.push(format!("{key}={value}"));
        self
    }

    fn line(&mut self, text: impl Into<String>, kv: &[(&str, String)]) -> &mut Self {
        self.text.push(text.into());
        self.kv.extend(kv.iter().map(|(k, v)| format!("{k}={v}")));
        self
    }

    fn law(&mut self, prefix: &str, indent: &str, law: &Law) -> &mut Self {
        let doc = AlgebraDocument::from_law(law, None);
        let text = doc.to_string();
        let mut any = false;
        for line in text.lines().filter(|l| l.starts_with("bracket")) {
            any = true;
            self.text.push(format!("{indent}{line}"));
            let (lhs, rhs) = line.split_once(" = ").expect("serialized bracket");
            let pair = lhs.trim_start_matches("bracket ").replace(' ', ".");
            self.kv.push(format!("{prefix}bracket.{pair}={rhs}"));
        }
        if !any {
            self.text.push(format!("{indent}0"));
            self.kv.push(format!("{prefix}zero=true"));
        }
        self
    }

    fn render(&self) -> String {
        let lines = if self.format == Format::Text { &self.text } else { &self.kv };
        let mut out = lines.join("\n");
        out.push('\n');
        out
    }
}

fn join<T: ToString>(values: &[T], sep: &str) -> String {
    values.iter().map(ToString::to_string).collect::<Vec<_>>().join(sep)
}

fn parse_params(params: &[String]) -> Result<Vec<(String, String)>, Outcome> {
    params
        .iter()
        .map(|p| {
            p.split_once('=')
                .map(|(k, v)| (k.trim().to_string(), v.trim().to_string()))
                .ok_or_else(|| Outcome::usage(format!("parameter `{p}` is not of the form key=value")))
        })
        .collect()
}

struct Loaded {
    name: Option<String>,
    doc: AlgebraDocument,
}

fn load(input: &Input) -> Result<Loaded, Outcome> {
    let params = parse_params(&input.params)?;
    if let Some(name) = input.source.strip_prefix("catalog:") {
        let entry = catalog_build(name, &params).map_err(|e| Outcome::usage(e.to_string()))?;
        let doc = AlgebraDocument::from_law(&entry.law, Some(name));
        return Ok(Loaded { name: Some(name.to_string()), doc });
    }
    if !params.is_empty() {
        return Err(Outcome::usage("--param only applies to catalog inputs"));
    }
    let doc = read_document(&PathBuf::from(&input.source))?;
    Ok(Loaded { name: doc.name.clone(), doc })
}

fn read_text(path: &PathBuf) -> Result<String, Outcome> {
    std::fs::read_to_string(path).map_err(|e| Outcome::usage(format!("cannot read {}: {e}", path.display())))
}

fn read_document(path: &PathBuf) -> Result<AlgebraDocument, Outcome> {
    let text = read_text(path)?;
    parse(&text).map_err(|e| Outcome::usage(format!("{}: {e}", path.display())))
}

fn constant_law(doc: &AlgebraDocument) -> Result<Law, Outcome> {
    doc.to_law().map_err(|e| Outcome::usage(e.to_string()))
}

fn jacobi_report(report: &mut Report, law: &Law) -> bool {
    let validation = law.validate_law();
    if validation.is_valid() {
        report.line("Jacobi: OK", &[("jacobi", "ok".into())]);
        return true;
    }
    let count = validation.violations.len();
    report.line("Jacobi: FAILED", &[("jacobi", "failed".into())]);
    report.field("violations", "violations", count);
    for (n, v) in validation.violations.iter().enumerate() {
        let (i, j, k) = v.triple;
        let key = |s: &str| format!("violation.{}.{s}", n + 1);
        report.text.push(format!(
            "violation: (e{}, e{}, e{}) component e{} residual {}",
            i + 1,
            j + 1,
            k + 1,
            v.component + 1,
            v.residual
        ));
        report.kv.push(format!("{}={},{},{}", key("triple"), i + 1, j + 1, k + 1));
        report.kv.push(format!("{}={}", key("component"), v.component + 1));
        report.kv.push(format!("{}={}", key("residual"), v.residual));
    }
    false
}

/// Loads a constant law and insists on Jacobi; the failure outcome carries
/// the violation report.
fn load_lie(input: &Input, format: Format) -> Result<(Loaded, Law), Outcome> {
    let loaded = load(input)?;
    let law = constant_law(&loaded.doc)?;
    let mut report = Report::new(format);
    if !jacobi_report(&mut report, &law) {
        return Err(Outcome::negative(report.render(), "input is not a Lie law"));
    }
    let law = law.into_verified().expect("checked above");
    Ok((loaded, law))
}

fn identify(report: &mut Report, loaded: &Loaded, law: &Law) {
    if let Some(name) = &loaded.name {
        report.field("name", "name", name);
    }
    report.field("dim", "dim", law.dim());
}

fn check(input: &Input, format: Format) -> Result<Outcome, Outcome> {
    let loaded = load(input)?;
    let law = constant_law(&loaded.doc)?;
    let mut report = Report::new(format);
    identify(&mut report, &loaded, &law);
    let ok = jacobi_report(&mut report, &law);
    Ok(Outcome { code: if ok { 0 } else { 1 }, stdout: report.render(), stderr: String::new() })
}

fn invariants(input: &Input, format: Format) -> Result<Outcome, Outcome> {
    let (loaded, law) = load_lie(input, format)?;
    let mut report = Report::new(format);
    identify(&mut report, &loaded, &law);
    match law.classify_structure() {
        StructureClass::Abelian => {
            report.field("class", "class", "abelian");
        }
        StructureClass::Nilpotent { nilindex, filiform } => {
            let kind = if filiform { ", filiform" } else { "" };
            report.line(
                format!("class: nilpotent (nilindex {nilindex}{kind})"),
                &[("class", "nilpotent".into()), ("nilindex", nilindex.to_string()), ("filiform", filiform.to_string())],
            );
        }
        StructureClass::Solvable { solvindex } => {
            report.line(
                format!("class: solvable (solvindex {solvindex})"),
                &[("class", "solvable".into()), ("solvindex", solvindex.to_string())],
            );
        }
        StructureClass::Neither => {
            report.line("class: neither nilpotent nor solvable", &[("class", "neither".into())]);
        }
    }
    let lower = law.lower_central_series();
    let derived = law.derived_series();
    report.field("lower central series dims", "lower_central", join(&lower.dims, ","));
    report.field("derived series dims", "derived", join(&derived.dims, ","));
    report.field("center dim", "center", law.center().len());
    report.field("derivations dim", "derivations", law.derivations().len());
    report.field("orbit dim", "orbit_dim", orbit_dimension(&law));
    Ok(Outcome { code: 0, stdout: report.render(), stderr: String::new() })
}

fn cohomology(input: &Input, format: Format) -> Result<Outcome, Outcome> {
    let (loaded, law) = load_lie(input, format)?;
    let mut report = Report::new(format);
    identify(&mut report, &loaded, &law);
    let c = cohomology_report(&law);
    report.line(format!("{:<3}{:>8}{:>8}{:>8}{:>8}", "p", "C^p", "Z^p", "B^p", "H^p"), &[]);
    for d in &c.degrees {
        let p = d.order;
        report.line(
            format!("{:<3}{:>8}{:>8}{:>8}{:>8}", p, d.cochains, d.cocycles, d.coboundaries, d.cohomology),
            &[
                (&format!("c{p}"), d.cochains.to_string()),
                (&format!("z{p}"), d.cocycles.to_string()),
                (&format!("b{p}"), d.coboundaries.to_string()),
                (&format!("h{p}"), d.cohomology.to_string()),
            ],
        );
    }
    Ok(Outcome { code: 0, stdout: report.render(), stderr: String::new() })
}

fn rigidity(input: &Input, format: Format) -> Result<Outcome, Outcome> {
    let (loaded, law) = load_lie(input, format)?;
    let mut report = Report::new(format);
    identify(&mut report, &loaded, &law);
    let v = rigidity_verdict(&law);
    report.field("dim B2", "b2", v.b2);
    report.field("dim Z2", "z2", v.z2);
    report.line(
        format!("orbit dim: {} of {}", v.orbit_dim, v.ambient),
        &[("orbit_dim", v.orbit_dim.to_string()), ("ambient", v.ambient.to_string())],
    );
    let (word, key) = match v.status {
        RigidityStatus::Rigid => ("RIGID", "rigid"),
        RigidityStatus::Inconclusive => ("INCONCLUSIVE", "inconclusive"),
    };
    report.line(format!("H2 = {} → {word}", v.h2), &[("h2", v.h2.to_string()), ("verdict", key.into())]);
    report.field("note", "note", v.note);
    Ok(Outcome { code: 0, stdout: report.render(), stderr: String::new() })
}

fn document_output(format: Format, law: &Law) -> String {
    match format {
        Format::Text => AlgebraDocument::from_law(law, None).to_string(),
        Format::Kv => {
            let mut report = Report::plain(format);
            report.field("dim", "dim", law.dim());
            report.law("", "", law);
            report.render()
        }
    }
}

fn contraction(
    input: &Input,
    weights: &Option<Vec<i64>>,
    iw: Option<usize>,
    family: &Option<PathBuf>,
    format: Format,
) -> Result<Outcome, Outcome> {
    let (_, law) = load_lie(input, format)?;
    let n = law.dim();
    let family = if let Some(w) = weights {
        if w.len() != n {
            return Err(Outcome::usage(format!("expected {n} weights, found {}", w.len())));
        }
        ww_family(w)
    } else if let Some(p) = iw {
        if p > n {
            return Err(Outcome::usage(format!("--iw {p} exceeds the dimension {n}")));
        }
        let indices: Vec<usize> = (0..p).collect();
        match iw_family(&law, &indices) {
            Ok(f) => f,
            Err(e) => return Err(Outcome::negative(String::new(), e.to_string())),
        }
    } else if let Some(path) = family {
        let text = read_text(path)?;
        let matrix = parse_family(&text).map_err(|e| Outcome::usage(format!("{}: {e}", path.display())))?;
        if matrix.rows() != n {
            return Err(Outcome::usage(format!("family has dimension {}, law has {n}", matrix.rows())));
        }
        ParametricFamily::new(matrix).map_err(|e| Outcome::usage(format!("{}: {e}", path.display())))?
    } else {
        return Err(Outcome::usage("one of --weights, --iw or --family is required"));
    };
    match contract(&law, &family) {
        Ok(limit) => Ok(Outcome { code: 0, stdout: document_output(format, &limit), stderr: String::new() }),
        Err(e @ Error::DivergentEntry { .. }) => Err(Outcome::negative(String::new(), e.to_string())),
        Err(e) => Err(Outcome::usage(e.to_string())),
    }
}

fn deform(input: &Input, cocycle: &PathBuf, order: usize, format: Format) -> Result<Outcome, Outcome> {
    let (loaded, law) = load_lie(input, format)?;
    let phi_doc = read_document(cocycle)?;
    let phi_law = constant_law(&phi_doc)?;
    if phi_law.dim() != law.dim() {
        return Err(Outcome::usage(format!("cocycle has dimension {}, law has {}", phi_law.dim(), law.dim())));
    }
    let phi = Cochain::from_law(&phi_law);
    let mut report = Report::new(format);
    identify(&mut report, &loaded, &law);
    report.field("requested order", "order", order);
    match integrate(&law, &phi, order) {
        Err(Error::NotACocycle) => {
            report.line("phi1 is not a 2-cocycle", &[("cocycle", "false".into())]);
            Ok(Outcome::negative(report.render(), "the given cochain is not a 2-cocycle"))
        }
        Err(e) => Err(Outcome::usage(e.to_string())),
        Ok(Integration::Complete(d)) => {
            report.line(format!("integrated to order {}", d.truncation_order()), &[("status", "complete".into())]);
            for p in 1..=order.max(1) {
                let term = d.coefficient(p).to_law().expect("bilinear");
                report.line(format!("phi{p}:"), &[]);
                report.law(&format!("phi{p}."), "  ", &term);
            }
            Ok(Outcome { code: 0, stdout: report.render(), stderr: String::new() })
        }
        Ok(Integration::Obstructed { partial, degree, obstruction }) => {
            report.line(
                format!("obstructed at order {degree}"),
                &[("status", "obstructed".into()), ("obstructed_order", degree.to_string())],
            );
            for p in 1..degree {
                report.line(format!("phi{p}:"), &[]);
                report.law(&format!("phi{p}."), "  ", &partial.coefficient(p).to_law().expect("bilinear"));
            }
            report.line("obstruction representative (3-cocycle, not a coboundary):", &[]);
            for (t, k, c) in nonzero_components(&obstruction.representative) {
                report.line(
                    format!("  ({}) component e{}: {}", join(&t.iter().map(|x| format!("e{}", x + 1)).collect::<Vec<_>>(), ", "), k + 1, c),
                    &[(&format!("obstruction.{}.e{}", join(&t.iter().map(|x| x + 1).collect::<Vec<_>>(), "."), k + 1), c.to_string())],
                );
            }
            Ok(Outcome::negative(report.render(), format!("deformation is obstructed at order {degree}")))
        }
    }
}

fn nonzero_components(c: &Cochain<crate::GaussianRational>) -> Vec<(Vec<usize>, usize, crate::GaussianRational)> {
    let n = c.dim();
    let mut out = Vec::new();
    for t in crate::tuples::combinations(n, c.arity()) {
        for (k, v) in c.eval_basis(&t).into_iter().enumerate() {
            if !num_traits::Zero::is_zero(&v) {
                out.push((t.clone(), k, v));
            }
        }
    }
    out
}

fn decompose(input: &Input, format: Format) -> Result<Outcome, Outcome> {
    let loaded = load(input)?;
    let perturbed: PerturbedLaw = loaded.doc.to_perturbed();
    let mut base_entries = Vec::new();
    let n = perturbed.dim();
    for i in 0..n {
        for j in i + 1..n {
            for (k, x) in perturbed.bracket_basis(i, j).into_iter().enumerate() {
                let c = x.limit_at_zero().map_err(|_| {
                    Outcome::usage(format!("[e{},e{}] has a negative power of eps", i + 1, j + 1))
                })?;
                base_entries.push((i, j, k, c));
            }
        }
    }
    let base = Law::from_entries(n, base_entries).expect("indices in range");
    let mut report = Report::new(format);
    identify(&mut report, &loaded, &base);
    report.line("base law:", &[]);
    report.law("base.", "  ", &base);
    if !jacobi_report(&mut report, &base) {
        return Ok(Outcome::negative(report.render(), "the eps = 0 law is not a Lie law"));
    }
    match perturbation_decompose(&perturbed, &base) {
        Ok(dec) => {
            report.field("flag length", "length", dec.flag.len());
            for (i, phi) in dec.cochains.iter().enumerate() {
                let m = &dec.flag.multipliers[i];
                let b = &dec.flag.cumulative[i];
                report.line(
                    format!("term {}: multiplier {m}, cumulative {b}", i + 1),
                    &[(&format!("term{}.multiplier", i + 1), m.to_string()), (&format!("term{}.cumulative", i + 1), b.to_string())],
                );
                report.law(&format!("term{}.", i + 1), "  ", &phi.to_law().expect("bilinear"));
            }
            Ok(Outcome { code: 0, stdout: report.render(), stderr: String::new() })
        }
        Err(e @ Error::FirstTermNotCocycle) => Ok(Outcome::negative(report.render(), e.to_string())),
        Err(e) => Err(Outcome::usage(e.to_string())),
    }
}

fn catalog(name: &Option<String>, params: &[String], format: Format) -> Result<Outcome, Outcome> {
    let Some(name) = name else {
        let mut report = Report::plain(format);
        for (name, params, description) in CATALOG {
            let shown = if params.is_empty() { String::new() } else { format!(" [{params}]") };
            report.line(format!("{name}{shown}: {description}"), &[(&format!("catalog.{name}"), description.to_string())]);
        }
        return Ok(Outcome { code: 0, stdout: report.render(), stderr: String::new() });
    };
    let params = parse_params(params)?;
    let entry = catalog_build(name, &params).map_err(|e| Outcome::usage(e.to_string()))?;
    let stdout = match format {
        Format::Text => AlgebraDocument::from_law(&entry.law, Some(name)).to_string(),
        Format::Kv => {
            let mut report = Report::plain(format);
            report.field("name", "name", name);
            report.field("dim", "dim", entry.law.dim());
            report.law("", "", &entry.law);
            report.render()
        }
    };
    Ok(Outcome { code: 0, stdout, stderr: String::new() })
}

/// Runs the tool on `args`, the first of which is the program name.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            return if code == 0 {
                Outcome { code, stdout: text, stderr: String::new() }
            } else {
                Outcome { code: 2, stdout: String::new(), stderr: text }
            };
        }
    };
    let format = cli.format;
    let result = match &cli.command {
        Command::Check(input) => check(input, format),
        Command::Invariants(input) => invariants(input, format),
        Command::Cohomology(input) => cohomology(input, format),
        Command::Rigidity(input) => rigidity(input, format),
        Command::Contract { input, weights, iw, family } => contraction(input, weights, *iw, family, format),
        Command::Deform { input, cocycle, order } => deform(input, cocycle, *order, format),
        Command::Decompose(input) => decompose(input, format),
        Command::Catalog { name, params } => catalog(name, params, format),
    };
    result.unwrap_or_else(|outcome| outcome)
}
