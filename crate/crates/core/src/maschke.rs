//! The averaging operator `f ↦ f_φ` and Maschke-type splitting of short
//! exact sequences of relative Hom-Hopf modules.

use crate::error::{Error, Result};
use crate::hom_rep::{check_relative_hopf_module, is_morphism, ComoduleAlgebra, MorphismKind, RelativeHopfModule};
use crate::integrals::{lambda_map, TotalIntegral};
use crate::linalg::{rank, solve_affine_system, Matrix};
use crate::report::AxiomReport;
use crate::separability::{basis_name, check_centrality};

/// `0 → M → N → P → 0` with optional A-linear splittings.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShortExactSequence {
    pub m: RelativeHopfModule,
    pub n: RelativeHopfModule,
    pub p: RelativeHopfModule,
    pub f: Matrix,
    pub g: Matrix,
    pub section: Option<Matrix>,
    pub retraction: Option<Matrix>,
}

fn prefixed(report: AxiomReport, prefix: &str) -> AxiomReport {
    let mut out = AxiomReport::new();
    for mut v in report.violations {
        v.axiom = format!("{prefix}{}", v.axiom);
        out.push(v);
    }
    out
}

fn shape(context: &str, m: &Matrix, rows: usize, cols: usize) -> Result<()> {
    if m.rows() != rows || m.cols() != cols {
        return Err(Error::dims(context, rows * cols, m.rows() * m.cols()));
    }
    Ok(())
}

/// Exactness, morphism conditions on `f` and `g`, and the conditions on the
/// supplied splittings.
pub fn check_short_exact(seq: &ShortExactSequence, a: &ComoduleAlgebra) -> Result<AxiomReport> {
    let (dm, dn, dp) = (seq.m.dim(), seq.n.dim(), seq.p.dim());
    shape("map M -> N", &seq.f, dn, dm)?;
    shape("map N -> P", &seq.g, dp, dn)?;
    let mut report = AxiomReport::new();
    for (name, obj) in [("M", &seq.m), ("N", &seq.n), ("P", &seq.p)] {
        report.merge(prefixed(check_relative_hopf_module(obj, a)?, &format!("{name}:")));
    }
    let rf = rank(&seq.f);
    let rg = rank(&seq.g);
    if rf != dm {
        report.fail("f-injective", &format!("rank {rf} < {dm}"));
    }
    if rg != dp {
        report.fail("g-surjective", &format!("rank {rg} < {dp}"));
    }
    if !seq.g.mul(&seq.f).is_zero() || rf + rg != dn {
        report.fail("exactness", "image of f differs from kernel of g");
    }
    report.merge(prefixed(is_morphism(&seq.f, &seq.m, &seq.n, MorphismKind::Relative)?, "f:"));
    report.merge(prefixed(is_morphism(&seq.g, &seq.n, &seq.p, MorphismKind::Relative)?, "g:"));
    if let Some(s) = &seq.section {
        shape("section P -> N", s, dn, dp)?;
        report.merge(prefixed(is_morphism(s, &seq.p, &seq.n, MorphismKind::Module)?, "section:"));
        report.check_equal("section-identity", &seq.g.mul(s), &Matrix::identity(s.field(), dp), &[dp]);
    }
    if let Some(r) = &seq.retraction {
        shape("retraction N -> M", r, dm, dn)?;
        report.merge(prefixed(is_morphism(r, &seq.n, &seq.m, MorphismKind::Module)?, "retraction:"));
        report.check_equal("retraction-identity", &r.mul(&seq.f), &Matrix::identity(r.field(), dm), &[dm]);
    }
    Ok(report)
}

/// `h_φ = λ_M∘(h ⊗ id)∘ρ_N` for a structure-map-intertwining `h: N → M`.
///
/// `h_φ` is colinear; it is A-linear when `h` is and `Im φ` is central; and
/// it equals `h` when `h` is already colinear.
pub fn phi_average(
    h: &Matrix,
    source: &RelativeHopfModule,
    target: &RelativeHopfModule,
    phi: &TotalIntegral,
    a: &ComoduleAlgebra,
) -> Result<Matrix> {
    shape("averaged map", h, target.dim(), source.dim())?;
    if h.mul(source.mu()) != target.mu().mul(h) {
        return Err(Error::HypothesesNotMet {
            condition: "mu-intertwining".into(),
            witness: "map does not commute with the structure maps".into(),
        });
    }
    let lam = lambda_map(target, phi, a)?;
    Ok(lam.mul(&h.kron(&a.hopf().identity())).mul(source.coaction()))
}

/// Certified relative-module splittings of a short exact sequence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MaschkeSplitting {
    pub section: Matrix,
    pub retraction: Matrix,
    pub report: AxiomReport,
}

/// Solves `f·x = y` column by column for an injective `f`.
fn divide_left(f: &Matrix, y: &Matrix) -> Result<Matrix> {
    let mut out = Matrix::zeros(f.field(), f.cols(), y.cols());
    for c in 0..y.cols() {
        let s = solve_affine_system(f, &y.column(c))?;
        let Some(x) = s.particular else {
            return Err(Error::Internal("column outside the image of f".into()));
        };
        for (r, v) in x.into_iter().enumerate() {
            out.set(r, c, v);
        }
    }
    Ok(out)
}

/// Any linear right inverse of a surjective `g`.
fn right_inverse(g: &Matrix) -> Result<Matrix> {
    let id = Matrix::identity(g.field(), g.rows());
    let mut out = Matrix::zeros(g.field(), g.cols(), g.rows());
    for c in 0..g.rows() {
        let s = solve_affine_system(g, &id.column(c))?;
        let Some(x) = s.particular else {
            return Err(Error::Internal("g is not surjective".into()));
        };
        for (r, v) in x.into_iter().enumerate() {
            out.set(r, c, v);
        }
    }
    Ok(out)
}

/// Averages the supplied A-linear splitting(s) into relative-module ones
/// and derives the missing side from the produced one.
pub fn maschke_split(seq: &ShortExactSequence, phi: &TotalIntegral, a: &ComoduleAlgebra) -> Result<MaschkeSplitting> {
    let pre = check_short_exact(seq, a)?;
    if !pre.pass {
        return Err(Error::Uncertified {
            what: "short exact sequence".into(),
            report: pre,
        });
    }
    if seq.section.is_none() && seq.retraction.is_none() {
        return Err(Error::Invalid("a section or a retraction is required".into()));
    }
    phi.require()?;
    let central = check_centrality(phi.phi(), a)?;
    if let Some(v) = central.violations.iter().find(|v| v.axiom == "phi-central") {
        let h = a.hopf();
        let witness = match v.indices.as_slice() {
            [x, y] => format!("({}, {})", basis_name(h.basis(), *y), basis_name(a.algebra().basis(), *x)),
            _ => String::new(),
        };
        return Err(Error::HypothesesNotMet {
            condition: "phi-central".into(),
            witness,
        });
    }

    let id_n = Matrix::identity(a.field(), seq.n.dim());
    let section_avg = match &seq.section {
        Some(s) => Some(phi_average(s, &seq.p, &seq.n, phi, a)?),
        None => None,
    };
    let retraction_avg = match &seq.retraction {
        Some(r) => Some(phi_average(r, &seq.n, &seq.m, phi, a)?),
        None => None,
    };
    let (section, retraction) = match (section_avg, retraction_avg) {
        (Some(s), Some(r)) => (s, r),
        (Some(s), None) => {
            let r = divide_left(&seq.f, &id_n.sub(&s.mul(&seq.g))?)?;
            (s, r)
        }
        (None, Some(r)) => {
            let s = id_n.sub(&seq.f.mul(&r))?.mul(&right_inverse(&seq.g)?);
            (s, r)
        }
        (None, None) => unreachable!("checked above"),
    };

    let mut report = AxiomReport::new();
    report.merge(prefixed(is_morphism(&section, &seq.p, &seq.n, MorphismKind::Relative)?, "section:"));
    report.merge(prefixed(is_morphism(&retraction, &seq.n, &seq.m, MorphismKind::Relative)?, "retraction:"));
    let (dm, dp) = (seq.m.dim(), seq.p.dim());
    report.check_equal("section-identity", &seq.g.mul(&section), &Matrix::identity(a.field(), dp), &[dp]);
    report.check_equal("retraction-identity", &retraction.mul(&seq.f), &Matrix::identity(a.field(), dm), &[dm]);
    if seq.section.is_none() || seq.retraction.is_none() {
        let sum = seq.f.mul(&retraction).add(&section.mul(&seq.g))?;
        report.check_equal("split-identity", &sum, &id_n, &[seq.n.dim()]);
    }
    if !report.pass {
        return Err(Error::Internal(format!("averaged splitting fails: {}", report.summary())));
    }
    Ok(MaschkeSplitting {
        section,
        retraction,
        report,
    })
}

/// Checks a claimed relative-module splitting of a sequence.
pub fn check_splitting(
    seq: &ShortExactSequence,
    section: &Matrix,
    retraction: &Matrix,
) -> Result<AxiomReport> {
    let (dm, dn, dp) = (seq.m.dim(), seq.n.dim(), seq.p.dim());
    shape("section P -> N", section, dn, dp)?;
    shape("retraction N -> M", retraction, dm, dn)?;
    let mut report = AxiomReport::new();
    report.merge(prefixed(is_morphism(section, &seq.p, &seq.n, MorphismKind::Relative)?, "section:"));
    report.merge(prefixed(is_morphism(retraction, &seq.n, &seq.m, MorphismKind::Relative)?, "retraction:"));
    let f = section.field();
    report.check_equal("section-identity", &seq.g.mul(section), &Matrix::identity(f, dp), &[dp]);
    report.check_equal("retraction-identity", &retraction.mul(&seq.f), &Matrix::identity(f, dm), &[dm]);
    Ok(report)
}

/// `0 → A → A ⊕ A → A → 0` over the regular module, with the inclusion of
/// the first summand, the projection onto the second, and the given map
/// `P → N` as section.
pub fn doubled_regular_sequence(a: &ComoduleAlgebra, section: Option<Matrix>) -> Result<ShortExactSequence> {
    let r = crate::hom_rep::regular_relative_module(a);
    let n = crate::hom_rep::direct_sum(&r, &r)?;
    let d = r.dim();
    let (i1, _, _, p2) = crate::hom_rep::direct_sum_maps(d, d, a.field());
    Ok(ShortExactSequence {
        m: r.clone(),
        n,
        p: r,
        f: i1,
        g: p2,
        section,
        retraction: None,
    })
}
