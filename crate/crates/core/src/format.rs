//! The JSON structure file: parsing with located errors and a canonical,
//! byte-stable serializer.
//!
//! A file always carries a Hom-Hopf algebra at top level. Optional blocks add
//! a comodule algebra (default: `H` over itself), a relative module (default:
//! the regular one), a total integral `phi`, a normalized integral `theta`, a
//! short exact sequence with its splitting, and a comodule-map extension
//! problem.
//!
//! Sparse tensors list nonzero entries only:
//! - `mult`, `action`: `{i, j, k, c}` means `e_i · e_j ∋ c·e_k`;
//! - `comult`, `coaction`: `{k, i, j, c}` means `Δ(e_k) ∋ c·e_i ⊗ e_j`.
//!
//! Dense matrices are lists of rows, `[out][in]`; `theta` has one column per
//! pair `(g, h)`, `g` major.

use std::collections::BTreeSet;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::catalog::Bundle;
use crate::error::{Error, Result};
use crate::hom_core::{default_basis, Convention, HomAlgebra, HomHopfAlgebra};
use crate::hom_rep::{regular_relative_module, ComoduleAlgebra, HomComodule, RelativeHopfModule};
use crate::linalg::{Field, Matrix, Scalar};
use crate::maschke::ShortExactSequence;

pub const FORMAT_VERSION: u32 = 1;

type Rows = Vec<Vec<String>>;

#[derive(Debug, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
struct ProductEntry {
    i: usize,
    j: usize,
    k: usize,
    c: String,
}

#[derive(Debug, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
struct CoproductEntry {
    k: usize,
    i: usize,
    j: usize,
    c: String,
}

#[derive(Debug, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
struct RawFile {
    format: u32,
    field: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    convention: Option<Convention>,
    dim: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    basis: Option<Vec<String>>,
    alpha: Rows,
    mult: Vec<ProductEntry>,
    unit: Vec<String>,
    comult: Vec<CoproductEntry>,
    counit: Vec<String>,
    antipode: Rows,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    comodule_algebra: Option<RawComoduleAlgebra>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    module: Option<RawModule>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    phi: Option<Rows>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    theta: Option<Rows>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    sequence: Option<RawSequence>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    splitting: Option<RawSplitting>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    extension: Option<RawExtension>,
}

#[derive(Debug, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
struct RawComoduleAlgebra {
    dim: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    basis: Option<Vec<String>>,
    beta: Rows,
    mult: Vec<ProductEntry>,
    unit: Vec<String>,
    coaction: Vec<CoproductEntry>,
}

#[derive(Debug, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
struct RawModule {
    dim: usize,
    mu: Rows,
    action: Vec<ProductEntry>,
    coaction: Vec<CoproductEntry>,
}

#[derive(Debug, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
struct RawComodule {
    dim: usize,
    mu: Rows,
    coaction: Vec<CoproductEntry>,
}

#[derive(Debug, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
struct RawSequence {
    m: RawModule,
    n: RawModule,
    p: RawModule,
    f: Rows,
    g: Rows,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    section: Option<Rows>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    retraction: Option<Rows>,
}

#[derive(Debug, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
struct RawSplitting {
    section: Rows,
    retraction: Rows,
}

#[derive(Debug, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
struct RawExtension {
    v: RawComodule,
    w: RawComodule,
    f: Rows,
    incl: Rows,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    result: Option<Rows>,
}

/// A comodule-map extension problem `f: V → M` along `incl: V ↪ W`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Extension {
    pub v: HomComodule,
    pub w: HomComodule,
    pub f: Matrix,
    pub incl: Matrix,
    pub result: Option<Matrix>,
}

/// Certified relative-module splittings as stored in a file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Splitting {
    pub section: Matrix,
    pub retraction: Matrix,
}

/// A parsed structure file.
#[derive(Clone, Debug)]
pub struct Document {
    pub convention: Option<Convention>,
    pub hopf: Arc<HomHopfAlgebra>,
    /// `None` means `H` over itself.
    pub comodule_algebra: Option<ComoduleAlgebra>,
    /// `None` means the regular relative module of the comodule algebra.
    pub module: Option<RelativeHopfModule>,
    pub phi: Option<Matrix>,
    pub theta: Option<Matrix>,
    pub sequence: Option<ShortExactSequence>,
    pub splitting: Option<Splitting>,
    pub extension: Option<Extension>,
}

impl Document {
    pub fn new(hopf: Arc<HomHopfAlgebra>) -> Self {
        Document {
            convention: None,
            hopf,
            comodule_algebra: None,
            module: None,
            phi: None,
            theta: None,
            sequence: None,
            splitting: None,
            extension: None,
        }
    }

    /// A built-in bundle with its known total integral.
    pub fn from_bundle(b: &Bundle) -> Self {
        let mut doc = Document::new(b.hopf.clone());
        if b.comodule_algebra != ComoduleAlgebra::regular(b.hopf.clone()) {
            doc.comodule_algebra = Some(b.comodule_algebra.clone());
        }
        doc.phi = b.integral.as_ref().map(|t| t.phi().clone());
        doc
    }

    pub fn field(&self) -> Field {
        self.hopf.field()
    }

    pub fn comodule_algebra(&self) -> ComoduleAlgebra {
        self.comodule_algebra
            .clone()
            .unwrap_or_else(|| ComoduleAlgebra::regular(self.hopf.clone()))
    }

    pub fn module(&self) -> RelativeHopfModule {
        self.module
            .clone()
            .unwrap_or_else(|| regular_relative_module(&self.comodule_algebra()))
    }
}

/// How scalars are read.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum FieldOverride {
    /// Use the file's field and require canonical scalar strings.
    #[default]
    None,
    /// Rebuild over this field, mapping any rational literal into it.
    To(Field),
}

struct Ctx {
    field: Field,
    lenient: bool,
}

impl Ctx {
    fn scalar(&self, loc: &str, s: &str) -> Result<Scalar> {
        let r = if self.lenient {
            self.field.parse_lenient(s)
        } else {
            self.field.parse_canonical(s)
        };
        r.map_err(|m| Error::parse(loc, m))
    }

    fn vector(&self, loc: &str, v: &[String], len: usize) -> Result<Vec<Scalar>> {
        if v.len() != len {
            return Err(Error::parse(loc, format!("expected {len} entries, found {}", v.len())));
        }
        v.iter()
            .enumerate()
            .map(|(i, s)| self.scalar(&format!("{loc}[{i}]"), s))
            .collect()
    }

    fn matrix(&self, loc: &str, rows: &Rows, r: usize, c: usize) -> Result<Matrix> {
        if rows.len() != r {
            return Err(Error::parse(loc, format!("expected {r} rows, found {}", rows.len())));
        }
        let mut data = Vec::with_capacity(r * c);
        for (i, row) in rows.iter().enumerate() {
            data.extend(self.vector(&format!("{loc}[{i}]"), row, c)?);
        }
        Matrix::from_vec(self.field, r, c, data)
    }

    /// `{i, j, k, c}` entries into a `dk × (di·dj)` matrix.
    fn product(&self, loc: &str, entries: &[ProductEntry], di: usize, dj: usize, dk: usize) -> Result<Matrix> {
        let mut m = Matrix::zeros(self.field, dk, di * dj);
        let mut seen = BTreeSet::new();
        for (n, e) in entries.iter().enumerate() {
            let at = format!("{loc}[{n}]");
            index(&at, "i", e.i, di)?;
            index(&at, "j", e.j, dj)?;
            index(&at, "k", e.k, dk)?;
            if !seen.insert((e.i, e.j, e.k)) {
                return Err(Error::parse(at, "duplicate entry"));
            }
            m.set(e.k, e.i * dj + e.j, self.scalar(&format!("{at}.c"), &e.c)?);
        }
        Ok(m)
    }

    /// `{k, i, j, c}` entries into a `(di·dj) × dk` matrix.
    fn coproduct(&self, loc: &str, entries: &[CoproductEntry], dk: usize, di: usize, dj: usize) -> Result<Matrix> {
        let mut m = Matrix::zeros(self.field, di * dj, dk);
        let mut seen = BTreeSet::new();
        for (n, e) in entries.iter().enumerate() {
            let at = format!("{loc}[{n}]");
            index(&at, "k", e.k, dk)?;
            index(&at, "i", e.i, di)?;
            index(&at, "j", e.j, dj)?;
            if !seen.insert((e.k, e.i, e.j)) {
                return Err(Error::parse(at, "duplicate entry"));
            }
            m.set(e.i * dj + e.j, e.k, self.scalar(&format!("{at}.c"), &e.c)?);
        }
        Ok(m)
    }

    fn module(&self, loc: &str, raw: &RawModule, da: usize, dh: usize) -> Result<RelativeHopfModule> {
        let d = positive(&format!("{loc}.dim"), raw.dim)?;
        let mu = self.matrix(&format!("{loc}.mu"), &raw.mu, d, d)?;
        let action = self.product(&format!("{loc}.action"), &raw.action, d, da, d)?;
        let coaction = self.coproduct(&format!("{loc}.coaction"), &raw.coaction, d, d, dh)?;
        RelativeHopfModule::new(mu, action, coaction, da, dh).map_err(|e| locate(loc, e))
    }

    fn comodule(&self, loc: &str, raw: &RawComodule, dh: usize) -> Result<HomComodule> {
        let d = positive(&format!("{loc}.dim"), raw.dim)?;
        let mu = self.matrix(&format!("{loc}.mu"), &raw.mu, d, d)?;
        let coaction = self.coproduct(&format!("{loc}.coaction"), &raw.coaction, d, d, dh)?;
        HomComodule::new(mu, coaction, dh).map_err(|e| locate(loc, e))
    }
}

fn index(loc: &str, key: &str, v: usize, bound: usize) -> Result<()> {
    if v >= bound {
        return Err(Error::parse(
            format!("{loc}.{key}"),
            format!("index {v} out of range 0..{bound}"),
        ));
    }
    Ok(())
}

fn positive(loc: &str, d: usize) -> Result<usize> {
    if d == 0 {
        return Err(Error::parse(loc, "dimension must be positive"));
    }
    Ok(d)
}

fn locate(loc: &str, e: Error) -> Error {
    match e {
        Error::DimensionMismatch { .. } | Error::Invalid(_) => Error::parse(loc, e.to_string()),
        other => other,
    }
}

fn basis(loc: &str, names: &Option<Vec<String>>, prefix: &str, dim: usize) -> Result<Vec<String>> {
    match names {
        None => Ok(default_basis(prefix, dim)),
        Some(v) if v.len() == dim => Ok(v.clone()),
        Some(v) => Err(Error::parse(loc, format!("expected {dim} names, found {}", v.len()))),
    }
}

/// Parses a structure file; scalars must be canonical for the file's field
/// unless an override is given.
pub fn parse_document(bytes: &[u8], field_override: FieldOverride) -> Result<Document> {
    let de = &mut serde_json::Deserializer::from_slice(bytes);
    let raw: RawFile = serde_path_to_error::deserialize(de).map_err(|e| {
        let path = e.path().to_string();
        Error::parse(if path == "." { "document".to_string() } else { path }, e.inner().to_string())
    })?;
    if raw.format != FORMAT_VERSION {
        return Err(Error::parse("format", format!("unsupported format version {}", raw.format)));
    }
    let file_field: Field = raw.field.parse().map_err(|e| match e {
        Error::Parse { message, .. } => Error::parse("field", message),
        other => other,
    })?;
    let ctx = match field_override {
        FieldOverride::None => Ctx {
            field: file_field,
            lenient: false,
        },
        FieldOverride::To(f) => Ctx { field: f, lenient: true },
    };

    let d = positive("dim", raw.dim)?;
    let names = basis("basis", &raw.basis, "e", d)?;
    let alpha = ctx.matrix("alpha", &raw.alpha, d, d)?;
    let mult = ctx.product("mult", &raw.mult, d, d, d)?;
    let unit = ctx.vector("unit", &raw.unit, d)?;
    let comult = ctx.coproduct("comult", &raw.comult, d, d, d)?;
    let counit = ctx.vector("counit", &raw.counit, d)?;
    let antipode = ctx.matrix("antipode", &raw.antipode, d, d)?;
    let hopf = Arc::new(HomHopfAlgebra::new(names, mult, unit, comult, counit, antipode, alpha)?);

    let comodule_algebra = match &raw.comodule_algebra {
        None => None,
        Some(c) => {
            let da = positive("comodule_algebra.dim", c.dim)?;
            let names = basis("comodule_algebra.basis", &c.basis, "a", da)?;
            let beta = ctx.matrix("comodule_algebra.beta", &c.beta, da, da)?;
            let mult = ctx.product("comodule_algebra.mult", &c.mult, da, da, da)?;
            let unit = ctx.vector("comodule_algebra.unit", &c.unit, da)?;
            let coaction = ctx.coproduct("comodule_algebra.coaction", &c.coaction, da, da, d)?;
            let alg = HomAlgebra::new(names, mult, unit, beta)?;
            Some(ComoduleAlgebra::new(hopf.clone(), alg, coaction).map_err(|e| locate("comodule_algebra", e))?)
        }
    };
    let mut doc = Document::new(hopf);
    doc.convention = raw.convention;
    doc.comodule_algebra = comodule_algebra;
    let da = doc.comodule_algebra().dim();

    if let Some(m) = &raw.module {
        doc.module = Some(ctx.module("module", m, da, d)?);
    }
    if let Some(p) = &raw.phi {
        doc.phi = Some(ctx.matrix("phi", p, da, d)?);
    }
    if let Some(t) = &raw.theta {
        doc.theta = Some(ctx.matrix("theta", t, da, d * d)?);
    }
    if let Some(s) = &raw.sequence {
        let m = ctx.module("sequence.m", &s.m, da, d)?;
        let n = ctx.module("sequence.n", &s.n, da, d)?;
        let p = ctx.module("sequence.p", &s.p, da, d)?;
        let (dm, dn, dp) = (m.dim(), n.dim(), p.dim());
        let f = ctx.matrix("sequence.f", &s.f, dn, dm)?;
        let g = ctx.matrix("sequence.g", &s.g, dp, dn)?;
        let section = s
            .section
            .as_ref()
            .map(|x| ctx.matrix("sequence.section", x, dn, dp))
            .transpose()?;
        let retraction = s
            .retraction
            .as_ref()
            .map(|x| ctx.matrix("sequence.retraction", x, dm, dn))
            .transpose()?;
        doc.sequence = Some(ShortExactSequence {
            m,
            n,
            p,
            f,
            g,
            section,
            retraction,
        });
    }
    if let Some(s) = &raw.splitting {
        let Some(seq) = &doc.sequence else {
            return Err(Error::parse("splitting", "a splitting needs a sequence block"));
        };
        let (dm, dn, dp) = (seq.m.dim(), seq.n.dim(), seq.p.dim());
        doc.splitting = Some(Splitting {
            section: ctx.matrix("splitting.section", &s.section, dn, dp)?,
            retraction: ctx.matrix("splitting.retraction", &s.retraction, dm, dn)?,
        });
    }
    if let Some(x) = &raw.extension {
        let v = ctx.comodule("extension.v", &x.v, d)?;
        let w = ctx.comodule("extension.w", &x.w, d)?;
        let dm = doc.module().dim();
        let f = ctx.matrix("extension.f", &x.f, dm, v.dim())?;
        let incl = ctx.matrix("extension.incl", &x.incl, w.dim(), v.dim())?;
        let result = x
            .result
            .as_ref()
            .map(|r| ctx.matrix("extension.result", r, dm, w.dim()))
            .transpose()?;
        doc.extension = Some(Extension { v, w, f, incl, result });
    }
    Ok(doc)
}

fn rows(m: &Matrix) -> Rows {
    m.to_rows()
        .iter()
        .map(|r| r.iter().map(Scalar::to_canonical).collect())
        .collect()
}

fn vector(v: &[Scalar]) -> Vec<String> {
    v.iter().map(Scalar::to_canonical).collect()
}

/// Nonzero entries of a `dk × (di·dj)` matrix, sorted by `(i, j, k)`.
fn product_entries(m: &Matrix, dj: usize) -> Vec<ProductEntry> {
    let mut out = Vec::new();
    for col in 0..m.cols() {
        for k in 0..m.rows() {
            let v = m.get(k, col);
            if !v.is_zero() {
                out.push(ProductEntry {
                    i: col / dj,
                    j: col % dj,
                    k,
                    c: v.to_canonical(),
                });
            }
        }
    }
    out
}

/// Nonzero entries of a `(di·dj) × dk` matrix, sorted by `(k, i, j)`.
fn coproduct_entries(m: &Matrix, dj: usize) -> Vec<CoproductEntry> {
    let mut out = Vec::new();
    for k in 0..m.cols() {
        for row in 0..m.rows() {
            let v = m.get(row, k);
            if !v.is_zero() {
                out.push(CoproductEntry {
                    k,
                    i: row / dj,
                    j: row % dj,
                    c: v.to_canonical(),
                });
            }
        }
    }
    out
}

fn raw_module(m: &RelativeHopfModule) -> RawModule {
    RawModule {
        dim: m.dim(),
        mu: rows(m.mu()),
        action: product_entries(m.action(), m.module().algebra_dim()),
        coaction: coproduct_entries(m.coaction(), m.comodule().coalgebra_dim()),
    }
}

fn raw_comodule(c: &HomComodule) -> RawComodule {
    RawComodule {
        dim: c.dim(),
        mu: rows(c.mu()),
        coaction: coproduct_entries(c.coaction(), c.coalgebra_dim()),
    }
}

fn names_if_custom(names: &[String], prefix: &str) -> Option<Vec<String>> {
    if names == default_basis(prefix, names.len()).as_slice() {
        None
    } else {
        Some(names.to_vec())
    }
}

/// The document as a JSON value with sorted keys.
pub fn to_value(doc: &Document) -> Value {
    let h = &doc.hopf;
    let d = h.dim();
    let raw = RawFile {
        format: FORMAT_VERSION,
        field: doc.field().to_string(),
        convention: doc.convention,
        dim: d,
        basis: names_if_custom(h.basis(), "e"),
        alpha: rows(h.alpha()),
        mult: product_entries(h.mult(), d),
        unit: vector(h.unit()),
        comult: coproduct_entries(h.comult(), d),
        counit: vector(h.counit()),
        antipode: rows(h.antipode()),
        comodule_algebra: doc.comodule_algebra.as_ref().map(|a| RawComoduleAlgebra {
            dim: a.dim(),
            basis: names_if_custom(a.algebra().basis(), "a"),
            beta: rows(a.beta()),
            mult: product_entries(a.mult(), a.dim()),
            unit: vector(a.algebra().unit()),
            coaction: coproduct_entries(a.coaction(), d),
        }),
        module: doc.module.as_ref().map(raw_module),
        phi: doc.phi.as_ref().map(rows),
        theta: doc.theta.as_ref().map(rows),
        sequence: doc.sequence.as_ref().map(|s| RawSequence {
            m: raw_module(&s.m),
            n: raw_module(&s.n),
            p: raw_module(&s.p),
            f: rows(&s.f),
            g: rows(&s.g),
            section: s.section.as_ref().map(rows),
            retraction: s.retraction.as_ref().map(rows),
        }),
        splitting: doc.splitting.as_ref().map(|s| RawSplitting {
            section: rows(&s.section),
            retraction: rows(&s.retraction),
        }),
        extension: doc.extension.as_ref().map(|x| RawExtension {
            v: raw_comodule(&x.v),
            w: raw_comodule(&x.w),
            f: rows(&x.f),
            incl: rows(&x.incl),
            result: x.result.as_ref().map(rows),
        }),
    };
    serde_json::to_value(raw).expect("structure file serializes")
}

/// Canonical text: sorted keys, two-space indentation, trailing newline.
pub fn to_canonical_string(doc: &Document) -> String {
    let mut s = serde_json::to_string_pretty(&to_value(doc)).expect("value serializes");
    s.push('\n');
    s
}

/// A dense matrix of canonical scalar strings, as used in reports.
pub fn matrix_value(m: &Matrix) -> Value {
    serde_json::to_value(rows(m)).expect("rows serialize")
}
