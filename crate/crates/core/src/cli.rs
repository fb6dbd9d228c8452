//! Command-line frontend.
//!
//! Exit codes: 0 success, 1 negative verdict (an axiom fails, no solution
//! exists, a certificate is refused), 2 broken input (I/O, parse, shapes,
//! unknown names), 3 theorem hypotheses not met.

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use serde::Deserialize;
use serde_json::{json, Map, Value};

use crate::catalog::{builtin_names, builtin_with_field, yau_twist};
use crate::error::{Error, Result};
use crate::format::{matrix_value, parse_document, to_canonical_string, Document, FieldOverride, Splitting};
use crate::hom_core::{check_hom_hopf, Convention};
use crate::hom_rep::{check_comodule_algebra, check_hom_comodule, check_relative_hopf_module, ComoduleAlgebra};
use crate::integrals::{check_extension, check_total_integral, extend_comodule_map, solve_total_integral, TotalIntegral};
use crate::linalg::{AffineSolutionSet, Field, Matrix};
use crate::maschke::{check_short_exact, check_splitting, maschke_split};
use crate::report::AxiomReport;
use crate::separability::{
    check_normalized_integral, check_nu, extract_normalized_integral, extraction_object, nu_map,
    solve_normalized_integral, NormalizedIntegral,
};

#[derive(Debug, Parser)]
#[command(name = "homhopf", version, about = "Exact checks and constructions for monoidal Hom-Hopf algebras")]
struct Cli {
    /// Emit the report as JSON.
    #[arg(long, global = true)]
    json: bool,
    /// Coassociativity convention for Hom-coalgebra checks.
    #[arg(long, global = true)]
    convention: Option<Convention>,
    /// Rebuild the input over this field ("Q" or "GF(p)").
    #[arg(long, global = true)]
    field: Option<Field>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check every block of a structure file.
    Check { file: PathBuf },
    /// Yau twist of a classical Hopf algebra by a Hopf automorphism.
    Twist {
        file: PathBuf,
        /// JSON file {"format": 1, "aut": [[...]]}.
        #[arg(long)]
        aut: PathBuf,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Emit a built-in structure file.
    Builtin {
        name: Option<String>,
        #[arg(long)]
        list: bool,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Solve for total integrals of the comodule algebra.
    Integral {
        file: PathBuf,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Solve for normalized integrals of the comodule algebra.
    NormalizedIntegral {
        file: PathBuf,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Separability verdict for the forgetful functor, with certificates.
    Separability { file: PathBuf },
    /// Average the splitting of the file's sequence into relative-module maps.
    Maschke {
        file: PathBuf,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Extend the file's comodule map along its inclusion.
    Extend {
        file: PathBuf,
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

/// What a command produced: exit code, JSON report, and human-readable text.
struct Outcome {
    code: i32,
    report: Value,
    text: String,
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Io(_)
        | Error::Parse { .. }
        | Error::DimensionMismatch { .. }
        | Error::FieldMismatch(..)
        | Error::UnknownBuiltin { .. }
        | Error::Invalid(_) => 2,
        Error::HypothesesNotMet { .. } => 3,
        Error::Uncertified { .. } | Error::NoEquivariantRetraction | Error::NotInvertible { .. } | Error::Internal(_) => 1,
    }
}

pub fn main() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    let json = cli.json;
    match run(cli) {
        Ok(out) => {
            emit(json, &out.report, &out.text);
            out.code
        }
        Err(e) => {
            let code = exit_code(&e);
            let report = error_value(&e);
            if json {
                println!("{}", pretty(&report));
            } else {
                eprintln!("error: {e}");
                if let Error::Uncertified { report, .. } = &e {
                    eprint!("{}", report_text(report));
                }
            }
            code
        }
    }
}

fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("report serializes")
}

fn emit(json: bool, report: &Value, text: &str) {
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    let _ = if json {
        writeln!(out, "{}", pretty(report))
    } else {
        write!(out, "{text}")
    };
}

fn error_value(e: &Error) -> Value {
    let kind = match e {
        Error::DimensionMismatch { .. } => "dimension-mismatch",
        Error::NotInvertible { .. } => "not-invertible",
        Error::FieldMismatch(..) => "field-mismatch",
        Error::Parse { .. } => "parse",
        Error::Uncertified { .. } => "uncertified",
        Error::HypothesesNotMet { .. } => "hypotheses-not-met",
        Error::NoEquivariantRetraction => "no-equivariant-retraction",
        Error::UnknownBuiltin { .. } => "unknown-builtin",
        Error::Invalid(_) => "invalid",
        Error::Internal(_) => "internal",
        Error::Io(_) => "io",
    };
    let mut v = json!({ "error": kind, "message": e.to_string(), "exit_code": exit_code(e) });
    match e {
        Error::HypothesesNotMet { condition, witness } => {
            v["condition"] = json!(condition);
            v["witness"] = json!(witness);
        }
        Error::Uncertified { report, .. } => v["report"] = report_value(report),
        Error::Parse { location, .. } => v["location"] = json!(location),
        _ => {}
    }
    v
}

fn report_value(r: &AxiomReport) -> Value {
    serde_json::to_value(r).expect("report serializes")
}

fn report_text(r: &AxiomReport) -> String {
    let mut s = String::new();
    for v in r.violations.iter().take(20) {
        s.push_str(&format!(
            "  {} at {:?}: {} != {}\n",
            v.axiom,
            v.indices,
            v.lhs.join(" "),
            v.rhs.join(" ")
        ));
    }
    if r.violations.len() > 20 {
        s.push_str(&format!("  ... {} more\n", r.violations.len() - 20));
    }
    s
}

fn load(path: &Path, field: Option<Field>) -> Result<Document> {
    let bytes = std::fs::read(path)?;
    let over = field.map(FieldOverride::To).unwrap_or_default();
    parse_document(&bytes, over)
}

fn write_document(path: &Path, doc: &Document) -> Result<()> {
    std::fs::write(path, to_canonical_string(doc))?;
    Ok(())
}

fn run(cli: Cli) -> Result<Outcome> {
    let field = cli.field;
    match cli.command {
        Command::Check { file } => check(&load(&file, field)?, cli.convention),
        Command::Twist { file, aut, output } => twist(&load(&file, field)?, &aut, field, output.as_deref()),
        Command::Builtin { name, list, output } => builtin(name, list, field, output.as_deref()),
        Command::Integral { file, output } => integral(load(&file, field)?, output.as_deref()),
        Command::NormalizedIntegral { file, output } => normalized(load(&file, field)?, output.as_deref()),
        Command::Separability { file } => separability(&load(&file, field)?),
        Command::Maschke { file, output } => maschke(load(&file, field)?, output.as_deref()),
        Command::Extend { file, output } => extend(load(&file, field)?, output.as_deref()),
    }
}

/// Ordered named reports, rendered as text and JSON together.
struct Sections(Vec<(String, AxiomReport)>);

impl Sections {
    fn new() -> Self {
        Sections(Vec::new())
    }

    fn add(&mut self, name: &str, r: AxiomReport) {
        self.0.push((name.to_string(), r));
    }

    fn pass(&self) -> bool {
        self.0.iter().all(|(_, r)| r.pass)
    }

    fn value(&self) -> Value {
        let mut m = Map::new();
        for (n, r) in &self.0 {
            m.insert(n.clone(), report_value(r));
        }
        Value::Object(m)
    }

    fn text(&self) -> String {
        let mut s = String::new();
        for (n, r) in &self.0 {
            s.push_str(&format!("{} {n}: {}\n", if r.pass { "PASS" } else { "FAIL" }, r.summary()));
            s.push_str(&report_text(r));
        }
        s
    }
}

/// Fails with `Uncertified` unless the Hopf algebra and comodule algebra pass.
fn require_base(doc: &Document) -> Result<ComoduleAlgebra> {
    let mut r = check_hom_hopf(&doc.hopf, doc.convention.unwrap_or_default())?;
    let a = doc.comodule_algebra();
    r.merge(check_comodule_algebra(&a)?);
    if !r.pass {
        return Err(Error::Uncertified {
            what: "Hom-Hopf algebra and comodule algebra".into(),
            report: r,
        });
    }
    Ok(a)
}

fn check(doc: &Document, convention: Option<Convention>) -> Result<Outcome> {
    let conv = convention.or(doc.convention).unwrap_or_default();
    let mut s = Sections::new();
    s.add("hopf", check_hom_hopf(&doc.hopf, conv)?);
    let a = doc.comodule_algebra();
    if doc.comodule_algebra.is_some() {
        s.add("comodule_algebra", check_comodule_algebra(&a)?);
    }
    if let Some(m) = &doc.module {
        s.add("module", check_relative_hopf_module(m, &a)?);
    }
    if let Some(phi) = &doc.phi {
        s.add("phi", check_total_integral(phi, &a)?);
    }
    if let Some(theta) = &doc.theta {
        s.add("theta", check_normalized_integral(theta, &a)?);
    }
    if let Some(seq) = &doc.sequence {
        s.add("sequence", check_short_exact(seq, &a)?);
        if let Some(sp) = &doc.splitting {
            s.add("splitting", check_splitting(seq, &sp.section, &sp.retraction)?);
        }
    }
    if let Some(x) = &doc.extension {
        let h = &doc.hopf;
        let mut r = check_hom_comodule(&x.v, h.coalgebra())?;
        r.merge(check_hom_comodule(&x.w, h.coalgebra())?);
        s.add("extension", r);
        if let Some(e) = &x.result {
            s.add("extension_result", check_extension(e, &x.f, &x.incl, &x.w, &doc.module())?);
        }
    }
    let pass = s.pass();
    Ok(Outcome {
        code: if pass { 0 } else { 1 },
        report: json!({ "verb": "check", "convention": conv, "pass": pass, "sections": s.value() }),
        text: format!("convention: {conv}\n{}{}\n", s.text(), if pass { "certified" } else { "not certified" }),
    })
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct AutFile {
    format: u32,
    aut: Vec<Vec<String>>,
}

fn twist(doc: &Document, aut_path: &Path, field: Option<Field>, output: Option<&Path>) -> Result<Outcome> {
    let bytes = std::fs::read(aut_path)?;
    let de = &mut serde_json::Deserializer::from_slice(&bytes);
    let raw: AutFile = serde_path_to_error::deserialize(de)
        .map_err(|e| Error::parse(format!("aut: {}", e.path()), e.inner().to_string()))?;
    if raw.format != crate::format::FORMAT_VERSION {
        return Err(Error::parse("aut: format", format!("unsupported format version {}", raw.format)));
    }
    let f = doc.field();
    let d = doc.hopf.dim();
    if raw.aut.len() != d {
        return Err(Error::parse("aut: aut", format!("expected {d} rows, found {}", raw.aut.len())));
    }
    let mut data = Vec::new();
    for (i, row) in raw.aut.iter().enumerate() {
        if row.len() != d {
            return Err(Error::parse(format!("aut: aut[{i}]"), format!("expected {d} entries")));
        }
        for (j, s) in row.iter().enumerate() {
            let v = if field.is_some() { f.parse_lenient(s) } else { f.parse_canonical(s) };
            data.push(v.map_err(|m| Error::parse(format!("aut: aut[{i}][{j}]"), m))?);
        }
    }
    let aut = Matrix::from_vec(f, d, d, data)?;
    let twisted = yau_twist(&doc.hopf, &aut)?;
    let out = Document::new(std::sync::Arc::new(twisted));
    let text = to_canonical_string(&out);
    if let Some(p) = output {
        write_document(p, &out)?;
    }
    Ok(Outcome {
        code: 0,
        report: json!({ "verb": "twist", "pass": true, "document": crate::format::to_value(&out) }),
        text: if output.is_some() { "twisted structure certified\n".into() } else { text },
    })
}

fn builtin(name: Option<String>, list: bool, field: Option<Field>, output: Option<&Path>) -> Result<Outcome> {
    if list || name.is_none() {
        let names = builtin_names();
        return Ok(Outcome {
            code: 0,
            report: json!({ "verb": "builtin", "names": names }),
            text: names.iter().map(|n| format!("{n}\n")).collect(),
        });
    }
    let name = name.unwrap_or_default();
    let b = builtin_with_field(&name, field)?;
    let doc = Document::from_bundle(&b);
    if let Some(p) = output {
        write_document(p, &doc)?;
    }
    Ok(Outcome {
        code: 0,
        report: crate::format::to_value(&doc),
        text: if output.is_some() { format!("wrote {name}\n") } else { to_canonical_string(&doc) },
    })
}

fn solution_value(set: &AffineSolutionSet, rows: usize, cols: usize, field: Field) -> Result<(Value, Option<Matrix>)> {
    let Some(p) = &set.particular else {
        return Ok((json!({ "nonempty": false }), None));
    };
    let particular = Matrix::from_vec(field, rows, cols, p.clone())?;
    let mut null = Vec::new();
    for v in &set.nullspace_basis {
        null.push(matrix_value(&Matrix::from_vec(field, rows, cols, v.clone())?));
    }
    Ok((
        json!({
            "nonempty": true,
            "particular": matrix_value(&particular),
            "nullspace_dimension": set.nullspace_basis.len(),
            "nullspace_basis": null,
        }),
        Some(particular),
    ))
}

fn matrix_text(m: &Matrix) -> String {
    m.to_rows()
        .iter()
        .map(|r| format!("  [{}]\n", r.iter().map(|s| s.to_string()).collect::<Vec<_>>().join(", ")))
        .collect()
}

fn integral(mut doc: Document, output: Option<&Path>) -> Result<Outcome> {
    let a = require_base(&doc)?;
    let set = solve_total_integral(&a)?;
    let (value, particular) = solution_value(&set, a.dim(), a.hopf().dim(), a.field())?;
    let Some(phi) = particular else {
        return Ok(Outcome {
            code: 1,
            report: json!({ "verb": "integral", "solutions": value }),
            text: "none: no total integral exists\n".into(),
        });
    };
    let cert = TotalIntegral::certify(phi.clone(), &a)?;
    let text = format!(
        "total integral (particular solution, {} free parameter(s)):\n{}",
        set.nullspace_basis.len(),
        matrix_text(cert.phi())
    );
    if let Some(p) = output {
        doc.phi = Some(phi);
        write_document(p, &doc)?;
    }
    Ok(Outcome {
        code: 0,
        report: json!({ "verb": "integral", "solutions": value, "certificate": report_value(cert.report()) }),
        text,
    })
}

fn normalized(mut doc: Document, output: Option<&Path>) -> Result<Outcome> {
    let a = require_base(&doc)?;
    let dh = a.hopf().dim();
    let set = solve_normalized_integral(&a)?;
    let (value, particular) = solution_value(&set, a.dim(), dh * dh, a.field())?;
    let Some(theta) = particular else {
        return Ok(Outcome {
            code: 1,
            report: json!({ "verb": "normalized-integral", "separable": false, "solutions": value }),
            text: "none: no normalized integral exists; the forgetful functor is not separable\n".into(),
        });
    };
    let cert = NormalizedIntegral::certify(theta.clone(), &a)?;
    let text = format!(
        "normalized integral (particular solution, {} free parameter(s)):\n{}",
        set.nullspace_basis.len(),
        matrix_text(cert.theta())
    );
    if let Some(p) = output {
        doc.theta = Some(theta);
        write_document(p, &doc)?;
    }
    Ok(Outcome {
        code: 0,
        report: json!({
            "verb": "normalized-integral",
            "separable": true,
            "solutions": value,
            "certificate": report_value(cert.report()),
        }),
        text,
    })
}

fn separability(doc: &Document) -> Result<Outcome> {
    let a = require_base(doc)?;
    let theta = match &doc.theta {
        Some(t) => NormalizedIntegral::certify(t.clone(), &a)?,
        None => {
            let dh = a.hopf().dim();
            let set = solve_normalized_integral(&a)?;
            let Some(p) = set.particular else {
                return Ok(Outcome {
                    code: 1,
                    report: json!({ "verb": "separability", "separable": false }),
                    text: "not separable: no normalized integral exists\n".into(),
                });
            };
            NormalizedIntegral::certify(Matrix::from_vec(a.field(), a.dim(), dh * dh, p)?, &a)?
        }
    };
    let m = doc.module();
    let mut s = Sections::new();
    s.add("theta", theta.report().clone());
    let nu = nu_map(&m, &theta, &a)?;
    s.add("nu", check_nu(&m, &nu, &a)?);
    let object = extraction_object(&a)?;
    let extracted = extract_normalized_integral(&nu_map(&object, &theta, &a)?, &a)?;
    s.add("extracted_theta", extracted.report().clone());
    let pass = s.pass();
    Ok(Outcome {
        code: if pass { 0 } else { 1 },
        report: json!({
            "verb": "separability",
            "separable": pass,
            "theta": matrix_value(theta.theta()),
            "sections": s.value(),
        }),
        text: format!("{}{}\n", s.text(), if pass { "separable" } else { "certificate failed" }),
    })
}

fn integral_for(doc: &Document, a: &ComoduleAlgebra) -> Result<TotalIntegral> {
    match &doc.phi {
        Some(phi) => TotalIntegral::certify(phi.clone(), a),
        None => {
            let set = solve_total_integral(a)?;
            let Some(p) = set.particular else {
                return Err(Error::HypothesesNotMet {
                    condition: "total-integral-exists".into(),
                    witness: "no total integral".into(),
                });
            };
            TotalIntegral::certify(Matrix::from_vec(a.field(), a.dim(), a.hopf().dim(), p)?, a)
        }
    }
}

fn maschke(mut doc: Document, output: Option<&Path>) -> Result<Outcome> {
    let a = require_base(&doc)?;
    let Some(seq) = doc.sequence.clone() else {
        return Err(Error::Invalid("the file has no sequence block".into()));
    };
    let phi = integral_for(&doc, &a)?;
    let split = maschke_split(&seq, &phi, &a)?;
    let text = format!(
        "section:\n{}retraction:\n{}{}\n",
        matrix_text(&split.section),
        matrix_text(&split.retraction),
        split.report.summary()
    );
    let report = json!({
        "verb": "maschke",
        "pass": true,
        "section": matrix_value(&split.section),
        "retraction": matrix_value(&split.retraction),
        "certificate": report_value(&split.report),
    });
    if let Some(p) = output {
        doc.splitting = Some(Splitting {
            section: split.section,
            retraction: split.retraction,
        });
        doc.phi = Some(phi.phi().clone());
        write_document(p, &doc)?;
    }
    Ok(Outcome { code: 0, report, text })
}

fn extend(mut doc: Document, output: Option<&Path>) -> Result<Outcome> {
    let a = require_base(&doc)?;
    let Some(x) = doc.extension.clone() else {
        return Err(Error::Invalid("the file has no extension block".into()));
    };
    let phi = integral_for(&doc, &a)?;
    let m = doc.module();
    let e = extend_comodule_map(&x.f, &x.incl, &x.v, &x.w, &m, &phi, &a)?;
    let cert = check_extension(&e, &x.f, &x.incl, &x.w, &m)?;
    let text = format!("extension:\n{}{}\n", matrix_text(&e), cert.summary());
    let report = json!({
        "verb": "extend",
        "pass": cert.pass,
        "result": matrix_value(&e),
        "certificate": report_value(&cert),
    });
    if let Some(p) = output {
        if let Some(ext) = doc.extension.as_mut() {
            ext.result = Some(e);
        }
        doc.phi = Some(phi.phi().clone());
        write_document(p, &doc)?;
    }
    Ok(Outcome { code: 0, report, text })
}
