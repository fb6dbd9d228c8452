//! Total integrals, the retraction `λ_M`, coinvariants, the trace map and
//! constructive injectivity of relative Hom-Hopf modules as comodules.

use serde::Serialize;

use crate::adjunction::{induced_action, induced_coaction};
use crate::error::{Error, Result};
use crate::hom_core::HomHopfAlgebra;
use crate::hom_rep::{
    check_comodule_morphism, check_hom_comodule, check_relative_hopf_module, ComoduleAlgebra, HomComodule,
    RelativeHopfModule,
};
use crate::linalg::{kernel_basis, rank, solve_affine_map, AffineSolutionSet, Matrix, Scalar};
use crate::report::AxiomReport;
use crate::separability::check_centrality;
use crate::tensor::Legs;

/// A candidate total integral `φ: H → A` with the report of its check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TotalIntegral {
    phi: Matrix,
    report: AxiomReport,
}

impl TotalIntegral {
    /// Checks `phi` and keeps the outcome; never fails on axiom violations.
    pub fn new(phi: Matrix, a: &ComoduleAlgebra) -> Result<Self> {
        let report = check_total_integral(&phi, a)?;
        Ok(TotalIntegral { phi, report })
    }

    /// Like [`TotalIntegral::new`] but refuses maps that fail the check.
    pub fn certify(phi: Matrix, a: &ComoduleAlgebra) -> Result<Self> {
        let t = TotalIntegral::new(phi, a)?;
        t.require()?;
        Ok(t)
    }

    pub fn phi(&self) -> &Matrix {
        &self.phi
    }

    pub fn is_certified(&self) -> bool {
        self.report.pass
    }

    pub fn report(&self) -> &AxiomReport {
        &self.report
    }

    pub(crate) fn require(&self) -> Result<()> {
        if self.report.pass {
            Ok(())
        } else {
            Err(Error::Uncertified {
                what: "total integral".into(),
                report: self.report.clone(),
            })
        }
    }
}

fn check_phi_shape(phi: &Matrix, a: &ComoduleAlgebra) -> Result<()> {
    let (da, dh) = (a.dim(), a.hopf().dim());
    if phi.rows() != da || phi.cols() != dh {
        return Err(Error::dims("map H -> A", da * dh, phi.rows() * phi.cols()));
    }
    Ok(())
}

/// `ρ_A∘φ = (φ ⊗ id)∘Δ`, `φ∘α = β∘φ` and `φ(1_H) = 1_A`.
pub fn check_total_integral(phi: &Matrix, a: &ComoduleAlgebra) -> Result<AxiomReport> {
    check_phi_shape(phi, a)?;
    let h = a.hopf();
    let dh = h.dim();
    let mut report = AxiomReport::new();
    report.check_equal(
        "integral-colinearity",
        &a.coaction().mul(phi),
        &phi.kron(&h.identity()).mul(h.comult()),
        &[dh],
    );
    report.check_equal("integral-equivariance", &phi.mul(h.alpha()), &a.beta().mul(phi), &[dh]);
    report.check_equal(
        "integral-normalization",
        &phi.mul(&h.unit_matrix()),
        &a.algebra().unit_matrix(),
        &[],
    );
    Ok(report)
}

fn residual(report_pairs: &[(Matrix, Matrix)]) -> Result<Vec<Scalar>> {
    let mut out = Vec::new();
    for (l, r) in report_pairs {
        out.extend(l.sub(r)?.to_vec());
    }
    Ok(out)
}

/// All total integrals as an affine space of `dim(A) × dim(H)` matrices,
/// flattened row-major.
pub fn solve_total_integral(a: &ComoduleAlgebra) -> Result<AffineSolutionSet> {
    let h = a.hopf();
    let id = h.identity();
    let unit_a = a.algebra().unit_matrix();
    solve_affine_map(a.field(), a.dim(), h.dim(), |phi| {
        residual(&[
            (a.coaction().mul(phi), phi.kron(&id).mul(h.comult())),
            (phi.mul(h.alpha()), a.beta().mul(phi)),
            (phi.mul(&h.unit_matrix()), unit_a.clone()),
        ])
    })
}

/// `λ_M : M ⊗ H → M`, `m ⊗ h ↦ μ(m₀)·φ(S(m₁)·α⁻¹(h))`.
///
/// For involutive `α` and `μ` this is `μ⁻¹(m₀)·φ(S(m₁)α(h))`. The powers
/// are the only ones that make `λ_M∘ρ_M = id` and colinearity hold for
/// every structure map; both are asserted before the matrix is returned.
pub fn lambda_map(m: &RelativeHopfModule, phi: &TotalIntegral, a: &ComoduleAlgebra) -> Result<Matrix> {
    phi.require()?;
    let lam = lambda_unchecked(m, phi.phi(), a)?;
    let report = check_lambda(m, &lam, a, false)?;
    if !report.pass {
        return Err(Error::Internal(format!("lambda fails its postconditions: {}", report.summary())));
    }
    Ok(lam)
}

pub(crate) fn lambda_unchecked(m: &RelativeHopfModule, phi: &Matrix, a: &ComoduleAlgebra) -> Result<Matrix> {
    let h = a.hopf();
    let (dm, dh) = (m.dim(), h.dim());
    Ok(Legs::basis(m.field(), &[dm, dh])
        .split(0, m.coaction(), dm, dh)?
        .map(0, m.mu())?
        .map(1, h.antipode())?
        .map(2, h.alpha_inv()?)?
        .merge(1, h.mult())?
        .map(1, phi)?
        .merge(0, m.action())?
        .into_matrix())
}

/// Retraction, colinearity and, when `with_linearity` is set, A-linearity of
/// a map `M ⊗ H → M` for the structures of `G(M)`.
pub fn check_lambda(
    m: &RelativeHopfModule,
    lam: &Matrix,
    a: &ComoduleAlgebra,
    with_linearity: bool,
) -> Result<AxiomReport> {
    let h = a.hopf();
    let (dm, dh, da) = (m.dim(), h.dim(), a.dim());
    let mut report = AxiomReport::new();
    report.check_equal(
        "lambda-retraction",
        &lam.mul(m.coaction()),
        &Matrix::identity(m.field(), dm),
        &[dm],
    );
    let rho_g = induced_coaction(m.mu_inv()?, h)?;
    report.check_equal(
        "lambda-colinearity",
        &m.coaction().mul(lam),
        &lam.kron(&h.identity()).mul(&rho_g),
        &[dm, dh],
    );
    if with_linearity {
        let act_g = induced_action(m.module(), a)?;
        report.check_equal(
            "lambda-a-linearity",
            &lam.mul(&act_g),
            &m.action().mul(&lam.kron(&Matrix::identity(m.field(), da))),
            &[dm, dh, da],
        );
    }
    Ok(report)
}

/// A subspace of coinvariants: a basis and the inclusion matrix whose columns
/// are that basis.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoinvariantData {
    #[serde(serialize_with = "ser_vecs")]
    pub basis: Vec<Vec<Scalar>>,
    #[serde(skip)]
    pub inclusion: Matrix,
}

fn ser_vecs<S: serde::Serializer>(v: &[Vec<Scalar>], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(|x| x.iter().map(ToString::to_string).collect::<Vec<_>>()))
}

impl CoinvariantData {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}

/// `M₀ = {m : ρ(m) = μ⁻¹(m) ⊗ 1_H}`.
pub fn coinvariants(x: &HomComodule, h: &HomHopfAlgebra) -> Result<CoinvariantData> {
    let trivial = x.mu_inv()?.kron(&h.unit_matrix());
    let basis = kernel_basis(&x.coaction().sub(&trivial)?);
    let mut inclusion = Matrix::zeros(x.field(), x.dim(), basis.len());
    for (c, v) in basis.iter().enumerate() {
        for (r, s) in v.iter().enumerate() {
            inclusion.set(r, c, s.clone());
        }
    }
    Ok(CoinvariantData { basis, inclusion })
}

/// The coinvariant subalgebra `C ⊆ A`.
pub fn coinvariant_subalgebra(a: &ComoduleAlgebra) -> Result<CoinvariantData> {
    coinvariants(&a.as_comodule(), a.hopf())
}

/// `τ_M : m ↦ m₀·φ(S(m₁))`; the image lying in `M₀` is asserted.
pub fn trace_map(m: &RelativeHopfModule, phi: &TotalIntegral, a: &ComoduleAlgebra) -> Result<Matrix> {
    phi.require()?;
    let tau = trace_unchecked(m, phi.phi(), a)?;
    let h = a.hopf();
    let trivial = m.mu_inv()?.kron(&h.unit_matrix());
    if !m.coaction().sub(&trivial)?.mul(&tau).is_zero() {
        return Err(Error::Internal("trace map leaves the coinvariants".into()));
    }
    Ok(tau)
}

fn trace_unchecked(m: &RelativeHopfModule, phi: &Matrix, a: &ComoduleAlgebra) -> Result<Matrix> {
    let h = a.hopf();
    let (dm, dh) = (m.dim(), h.dim());
    Ok(Legs::basis(m.field(), &[dm])
        .split(0, m.coaction(), dm, dh)?
        .map(1, &phi.mul(h.antipode()))?
        .merge(0, m.action())?
        .into_matrix())
}

/// `x·c` for every column `x` of `xs` and every basis vector `c` of `C`,
/// as the columns of one matrix (x index major).
fn act_on_columns(action: &Matrix, xs: &Matrix, cs: &Matrix) -> Matrix {
    action.mul(&xs.kron(cs))
}

/// The trace map properties: image in `M₀`, identity on `M₀`, `M₀` stable
/// under `C`, and, when `Im φ` is central, right `C`-linearity of `τ_M`,
/// which makes `τ_M` a split surjection onto `M₀` of right `C`-modules.
pub fn check_trace_map(m: &RelativeHopfModule, phi: &TotalIntegral, a: &ComoduleAlgebra) -> Result<AxiomReport> {
    phi.require()?;
    let h = a.hopf();
    let dm = m.dim();
    let tau = trace_unchecked(m, phi.phi(), a)?;
    let m0 = coinvariants(m.comodule(), h)?;
    let c = coinvariant_subalgebra(a)?;
    let trivial = m.mu_inv()?.kron(&h.unit_matrix());
    let defect = m.coaction().sub(&trivial)?;
    let mut report = AxiomReport::new();

    report.check_equal(
        "trace-image-coinvariant",
        &defect.mul(&tau),
        &Matrix::zeros(m.field(), defect.rows(), dm),
        &[dm],
    );
    report.check_equal(
        "trace-identity-on-coinvariants",
        &tau.mul(&m0.inclusion),
        &m0.inclusion,
        &[m0.dim()],
    );
    let m0c = act_on_columns(m.action(), &m0.inclusion, &c.inclusion);
    if rank(&m0.inclusion) != rank(&m0.inclusion.transpose().vstack(&m0c.transpose())?.transpose()) {
        report.fail("coinvariants-c-stable", "M0 . C is not contained in M0");
    }
    if check_centrality(phi.phi(), a)?.pass {
        let id = Matrix::identity(m.field(), dm);
        report.check_equal(
            "trace-right-c-linearity",
            &tau.mul(&act_on_columns(m.action(), &id, &c.inclusion)),
            &act_on_columns(m.action(), &tau, &c.inclusion),
            &[dm, c.dim()],
        );
    }
    Ok(report)
}

/// `τ_A(c·a) = c·τ_A(a)` for `c` in the coinvariant subalgebra.
pub fn check_trace_left_c_linear(phi: &TotalIntegral, a: &ComoduleAlgebra) -> Result<AxiomReport> {
    phi.require()?;
    let r = crate::hom_rep::regular_relative_module(a);
    let tau = trace_unchecked(&r, phi.phi(), a)?;
    let c = coinvariant_subalgebra(a)?;
    let da = a.dim();
    let id = Matrix::identity(a.field(), da);
    let mut report = AxiomReport::new();
    report.check_equal(
        "trace-left-c-linearity",
        &tau.mul(&a.mult().mul(&c.inclusion.kron(&id))),
        &a.mult().mul(&c.inclusion.kron(&tau)),
        &[c.dim(), da],
    );
    Ok(report)
}

/// Extends a colinear `f: V → M` along a comodule inclusion `V → W` to a
/// colinear `E: W → M` with `E∘incl = f`, via `E = λ_M∘((f∘p) ⊗ id)∘ρ_W`
/// for a structure-map-intertwining linear retraction `p` of the inclusion.
pub fn extend_comodule_map(
    f: &Matrix,
    incl: &Matrix,
    v: &HomComodule,
    w: &HomComodule,
    m: &RelativeHopfModule,
    phi: &TotalIntegral,
    a: &ComoduleAlgebra,
) -> Result<Matrix> {
    phi.require()?;
    let h = a.hopf();
    let mut pre = check_hom_comodule(v, h.coalgebra())?;
    pre.merge(check_hom_comodule(w, h.coalgebra())?);
    pre.merge(check_relative_hopf_module(m, a)?);
    pre.merge(check_comodule_morphism(f, v, m.comodule())?);
    pre.merge(check_comodule_morphism(incl, v, w)?);
    if rank(incl) != v.dim() {
        pre.fail("inclusion-injective", "inclusion has a kernel");
    }
    if !pre.pass {
        return Err(Error::Uncertified {
            what: "extension data".into(),
            report: pre,
        });
    }

    let (dv, dw) = (v.dim(), w.dim());
    let id_v = Matrix::identity(a.field(), dv);
    let solution = solve_affine_map(a.field(), dv, dw, |p| {
        residual(&[(p.mul(incl), id_v.clone()), (p.mul(w.mu()), v.mu().mul(p))])
    })?;
    let Some(p) = solution.particular else {
        return Err(Error::NoEquivariantRetraction);
    };
    let p = Matrix::from_vec(a.field(), dv, dw, p)?;

    let lam = lambda_map(m, phi, a)?;
    let e = lam.mul(&f.mul(&p).kron(&h.identity())).mul(w.coaction());

    let post = check_extension(&e, f, incl, w, m)?;
    if !post.pass {
        return Err(Error::Internal(format!("extension fails: {}", post.summary())));
    }
    Ok(e)
}

/// `E∘incl = f` and colinearity of `E: W → M`.
pub fn check_extension(
    e: &Matrix,
    f: &Matrix,
    incl: &Matrix,
    w: &HomComodule,
    m: &RelativeHopfModule,
) -> Result<AxiomReport> {
    if e.rows() != m.dim() || e.cols() != w.dim() {
        return Err(Error::dims("extension W -> M", m.dim() * w.dim(), e.rows() * e.cols()));
    }
    let mut report = AxiomReport::new();
    report.check_equal("extension-restricts", &e.mul(incl), f, &[incl.cols()]);
    report.merge(check_comodule_morphism(e, w, m.comodule())?);
    Ok(report)
}
