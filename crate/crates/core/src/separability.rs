//! Normalized `(A, β)`-integrals, the separability certificate `ν∘η = id`,
//! extraction of a normalized integral from a retraction, and the
//! conversions between total and normalized integrals.
//!
//! A normalized integral `θ: H ⊗ H → A` is a `dim(A) × dim(H)²` matrix whose
//! column `g·dim(H) + h` holds `θ(g ⊗ h)`.

use crate::adjunction::{induce, induced_action, induced_coaction};
use crate::error::{Error, Result};
use crate::hom_core::antipode_inverse;
use crate::hom_rep::{ComoduleAlgebra, HomModule, RelativeHopfModule};
use crate::integrals::TotalIntegral;
#[cfg(test)]
use crate::integrals::check_total_integral;
use crate::linalg::{solve_affine_map, AffineSolutionSet, Matrix, Scalar};
use crate::report::AxiomReport;
use crate::tensor::Legs;

/// A candidate normalized integral with the report of its check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormalizedIntegral {
    theta: Matrix,
    report: AxiomReport,
}

impl NormalizedIntegral {
    pub fn new(theta: Matrix, a: &ComoduleAlgebra) -> Result<Self> {
        let report = check_normalized_integral(&theta, a)?;
        Ok(NormalizedIntegral { theta, report })
    }

    pub fn certify(theta: Matrix, a: &ComoduleAlgebra) -> Result<Self> {
        let t = NormalizedIntegral::new(theta, a)?;
        t.require()?;
        Ok(t)
    }

    pub fn theta(&self) -> &Matrix {
        &self.theta
    }

    pub fn is_certified(&self) -> bool {
        self.report.pass
    }

    pub fn report(&self) -> &AxiomReport {
        &self.report
    }

    fn require(&self) -> Result<()> {
        if self.report.pass {
            Ok(())
        } else {
            Err(Error::Uncertified {
                what: "normalized integral".into(),
                report: self.report.clone(),
            })
        }
    }
}

struct Condition {
    name: &'static str,
    lhs: Matrix,
    rhs: Matrix,
    dims: Vec<usize>,
}

/// Both sides of every defining identity of a normalized integral.
fn theta_conditions(theta: &Matrix, a: &ComoduleAlgebra) -> Result<Vec<Condition>> {
    let h = a.hopf();
    let f = a.field();
    let (dh, da) = (h.dim(), a.dim());
    if theta.rows() != da || theta.cols() != dh * dh {
        return Err(Error::dims("map H ⊗ H -> A", da * dh * dh, theta.rows() * theta.cols()));
    }
    let alpha = h.alpha();
    let alpha_inv = h.alpha_inv()?;
    let beta = a.beta();
    let rho = a.coaction();
    let mut out = Vec::new();

    out.push(Condition {
        name: "theta-equivariance",
        lhs: theta.mul(&alpha.kron(alpha)),
        rhs: beta.mul(theta),
        dims: vec![dh, dh],
    });

    // θ(α⁻¹(g) ⊗ h₁) ⊗ α(h₂) = β(t₀) ⊗ g₁ t₁ with t = θ(g₂ ⊗ α⁻¹(h))
    let lhs = Legs::basis(f, &[dh, dh])
        .split(1, h.comult(), dh, dh)?
        .map(0, alpha_inv)?
        .merge(0, theta)?
        .map(1, alpha)?
        .into_matrix();
    let rhs = Legs::basis(f, &[dh, dh])
        .map(1, alpha_inv)?
        .split(0, h.comult(), dh, dh)?
        .merge(1, theta)?
        .split(1, rho, da, dh)?
        .swap(0)?
        .merge(1, h.mult())?
        .map(0, beta)?
        .into_matrix();
    out.push(Condition {
        name: "theta-coaction-compatibility",
        lhs,
        rhs,
        dims: vec![dh, dh],
    });

    out.push(Condition {
        name: "theta-normalization",
        lhs: theta.mul(h.comult()),
        rhs: a.algebra().unit_matrix().mul(&h.counit_matrix()),
        dims: vec![dh],
    });

    // β²(a₀₀)·θ(α⁻¹(g)a₀₁ ⊗ α⁻¹(h)α⁻¹(a₁)) = θ(g ⊗ h)·a
    let beta2 = beta.mul(beta);
    let lhs = Legs::basis(f, &[dh, dh, da])
        .split(2, rho, da, dh)?
        .split(2, rho, da, dh)?
        .permute(&[2, 0, 3, 1, 4])?
        .map(0, &beta2)?
        .map(1, alpha_inv)?
        .merge(1, h.mult())?
        .map(2, alpha_inv)?
        .map(3, alpha_inv)?
        .merge(2, h.mult())?
        .merge(1, theta)?
        .merge(0, a.mult())?
        .into_matrix();
    let rhs = Legs::basis(f, &[dh, dh, da]).merge(0, theta)?.merge(0, a.mult())?.into_matrix();
    out.push(Condition {
        name: "theta-right-linearity",
        lhs,
        rhs,
        dims: vec![dh, dh, da],
    });
    Ok(out)
}

pub fn check_normalized_integral(theta: &Matrix, a: &ComoduleAlgebra) -> Result<AxiomReport> {
    let mut report = AxiomReport::new();
    for c in theta_conditions(theta, a)? {
        report.check_equal(c.name, &c.lhs, &c.rhs, &c.dims);
    }
    Ok(report)
}

/// All normalized integrals as an affine space of `dim(A) × dim(H)²`
/// matrices flattened row-major. Empty means the forgetful functor is not
/// separable for this comodule algebra.
pub fn solve_normalized_integral(a: &ComoduleAlgebra) -> Result<AffineSolutionSet> {
    let dh = a.hopf().dim();
    solve_affine_map(a.field(), a.dim(), dh * dh, |theta| {
        let mut out: Vec<Scalar> = Vec::new();
        for c in theta_conditions(theta, a)? {
            out.extend(c.lhs.sub(&c.rhs)?.to_vec());
        }
        Ok(out)
    })
}

/// `ν_M : M ⊗ H → M`, `m ⊗ h ↦ μ(m₀)·θ(m₁ ⊗ α⁻¹(h))`. A-linearity,
/// colinearity and `ν_M∘η_M = id` are asserted before returning.
pub fn nu_map(m: &RelativeHopfModule, theta: &NormalizedIntegral, a: &ComoduleAlgebra) -> Result<Matrix> {
    theta.require()?;
    let h = a.hopf();
    let (dm, dh) = (m.dim(), h.dim());
    let nu = Legs::basis(m.field(), &[dm, dh])
        .split(0, m.coaction(), dm, dh)?
        .map(2, h.alpha_inv()?)?
        .merge(1, theta.theta())?
        .map(0, m.mu())?
        .merge(0, m.action())?
        .into_matrix();
    let report = check_nu(m, &nu, a)?;
    if !report.pass {
        return Err(Error::Internal(format!("nu fails its postconditions: {}", report.summary())));
    }
    Ok(nu)
}

/// A-linearity and colinearity of `ν: G(M) → M` and `ν∘η_M = id_M`.
pub fn check_nu(m: &RelativeHopfModule, nu: &Matrix, a: &ComoduleAlgebra) -> Result<AxiomReport> {
    let h = a.hopf();
    let (dm, dh, da) = (m.dim(), h.dim(), a.dim());
    if nu.rows() != dm || nu.cols() != dm * dh {
        return Err(Error::dims("map M ⊗ H -> M", dm * dm * dh, nu.rows() * nu.cols()));
    }
    let f = m.field();
    let mut report = AxiomReport::new();
    let act_g = induced_action(m.module(), a)?;
    report.check_equal(
        "nu-a-linearity",
        &nu.mul(&act_g),
        &m.action().mul(&nu.kron(&Matrix::identity(f, da))),
        &[dm, dh, da],
    );
    let rho_g = induced_coaction(m.mu_inv()?, h)?;
    report.check_equal(
        "nu-colinearity",
        &m.coaction().mul(nu),
        &nu.kron(&h.identity()).mul(&rho_g),
        &[dm, dh],
    );
    report.check_equal("nu-retraction", &nu.mul(m.coaction()), &Matrix::identity(f, dm), &[dm]);
    report.check_equal(
        "nu-mu-intertwining",
        &nu.mul(&m.mu().kron(h.alpha())),
        &m.mu().mul(nu),
        &[dm, dh],
    );
    Ok(report)
}

/// `φ(h) = θ(1_H ⊗ α⁻¹(h))`.
///
/// The untwisted slot map `h ↦ θ(1_H ⊗ h)` satisfies
/// `ρ_A(θ(1 ⊗ h)) = θ(1 ⊗ h₁) ⊗ α(h₂)` and is colinear only when `α = id`;
/// see [`unit_slot_map`].
pub fn integral_from_normalized(theta: &NormalizedIntegral, a: &ComoduleAlgebra) -> Result<TotalIntegral> {
    theta.require()?;
    let h = a.hopf();
    let phi = unit_slot_map(theta.theta(), a)?.mul(h.alpha_inv()?);
    let t = TotalIntegral::new(phi, a)?;
    if !t.is_certified() {
        return Err(Error::Internal(format!(
            "integral from a normalized integral fails: {}",
            t.report().summary()
        )));
    }
    Ok(t)
}

/// `h ↦ θ(1_H ⊗ h)`, uncertified.
pub fn unit_slot_map(theta: &Matrix, a: &ComoduleAlgebra) -> Result<Matrix> {
    let h = a.hopf();
    Ok(Legs::basis(a.field(), &[h.dim()])
        .apply(0, 0, &h.unit_matrix(), &[h.dim()])?
        .merge(0, theta)?
        .into_matrix())
}

pub(crate) fn basis_name(names: &[String], i: usize) -> String {
    names.get(i).cloned().unwrap_or_else(|| format!("e{i}"))
}

/// `θ(g ⊗ h) = φ(h·S⁻¹(g))`, available when `Im φ` is central and `φ`
/// satisfies the coaction-commutation condition.
pub fn normalized_from_integral(phi: &TotalIntegral, a: &ComoduleAlgebra) -> Result<NormalizedIntegral> {
    phi.require()?;
    let h = a.hopf();
    let central = check_centrality(phi.phi(), a)?;
    if let Some(v) = central.violations.first() {
        let witness = match v.indices.as_slice() {
            [x, y] if v.axiom == "phi-central" => {
                format!("({}, {})", basis_name(h.basis(), *y), basis_name(a.algebra().basis(), *x))
            }
            [x, y] => format!("({}, {})", basis_name(h.basis(), *x), basis_name(h.basis(), *y)),
            _ => String::new(),
        };
        return Err(Error::HypothesesNotMet {
            condition: v.axiom.clone(),
            witness,
        });
    }
    let s_inv = antipode_inverse(h)?;
    let dh = h.dim();
    let theta = Legs::basis(a.field(), &[dh, dh])
        .map(0, &s_inv)?
        .swap(0)?
        .merge(0, h.mult())?
        .map(0, phi.phi())?
        .into_matrix();
    let t = NormalizedIntegral::new(theta, a)?;
    if !t.is_certified() {
        return Err(Error::Internal(format!(
            "normalized integral from a central integral fails: {}",
            t.report().summary()
        )));
    }
    Ok(t)
}

/// `φ(h)·a = a·φ(h)` for all basis `h, a` (reported with indices `(a, h)`),
/// and `g φ(h)₁ ⊗ φ(h)₀ = φ(h)₁ g ⊗ φ(h)₀` for all basis `g, h`.
pub fn check_centrality(phi: &Matrix, a: &ComoduleAlgebra) -> Result<AxiomReport> {
    let h = a.hopf();
    let f = a.field();
    let (dh, da) = (h.dim(), a.dim());
    if phi.rows() != da || phi.cols() != dh {
        return Err(Error::dims("map H -> A", da * dh, phi.rows() * phi.cols()));
    }
    let mut report = AxiomReport::new();
    let left = Legs::basis(f, &[da, dh]).map(1, phi)?.swap(0)?.merge(0, a.mult())?.into_matrix();
    let right = Legs::basis(f, &[da, dh]).map(1, phi)?.merge(0, a.mult())?.into_matrix();
    report.check_equal("phi-central", &left, &right, &[da, dh]);

    let split = Legs::basis(f, &[dh, dh]).map(1, phi)?.split(1, a.coaction(), da, dh)?;
    let lhs = split.clone().permute(&[0, 2, 1])?.merge(0, h.mult())?.into_matrix();
    let rhs = split.permute(&[2, 0, 1])?.merge(0, h.mult())?.into_matrix();
    report.check_equal("phi-coaction-commutation", &lhs, &rhs, &[dh, dh]);
    Ok(report)
}

/// Reads a normalized integral off a retraction `ν` of the unit on the
/// object `A ⊗ H`: `θ(h ⊗ g) = β((id ⊗ ε) ν((1_A ⊗ α⁻¹(h)) ⊗ g))`.
///
/// `ν` must be A-linear, colinear and satisfy `ν∘η = id`; the extracted
/// integral is checked and returned with its report either way.
pub fn extract_normalized_integral(nu: &Matrix, a: &ComoduleAlgebra) -> Result<NormalizedIntegral> {
    let h = a.hopf();
    let (dh, da) = (h.dim(), a.dim());
    let object = induce(&HomModule::regular(a.algebra()), a)?.relative;
    let pre = check_nu(&object, nu, a)?;
    if !pre.pass {
        return Err(Error::Uncertified {
            what: "retraction on A ⊗ H".into(),
            report: pre,
        });
    }
    let theta = Legs::basis(a.field(), &[dh, dh])
        .map(0, h.alpha_inv()?)?
        .apply(0, 0, &a.algebra().unit_matrix(), &[da])?
        .apply(0, 3, nu, &[da, dh])?
        .apply(1, 1, &h.counit_matrix(), &[])?
        .map(0, a.beta())?
        .into_matrix();
    NormalizedIntegral::new(theta, a)
}

/// The object `A ⊗ H` on which retractions are extracted.
pub fn extraction_object(a: &ComoduleAlgebra) -> Result<RelativeHopfModule> {
    Ok(induce(&HomModule::regular(a.algebra()), a)?.relative)
}
