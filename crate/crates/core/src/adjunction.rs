//! The induction functor `G(M) = M ⊗ H`, the unit and counit of its
//! adjunction with the forgetful functor, and the triangle identities.
//!
//! The basis of `M ⊗ H` is enumerated with the `M` index major.

use crate::error::{Error, Result};
use crate::hom_core::HomHopfAlgebra;
use crate::hom_rep::{check_hom_module, check_relative_hopf_module, ComoduleAlgebra, HomModule, RelativeHopfModule};
use crate::linalg::Matrix;
use crate::report::AxiomReport;
use crate::tensor::Legs;

/// `G(M)` together with the module it was induced from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InducedModule {
    pub relative: RelativeHopfModule,
    pub source: HomModule,
}

/// Action `(m ⊗ h)·a = m·a₀ ⊗ h a₁` on `M ⊗ H`.
pub(crate) fn induced_action(m: &HomModule, a: &ComoduleAlgebra) -> Result<Matrix> {
    let h = a.hopf();
    let (dm, dh, da) = (m.dim(), h.dim(), a.dim());
    Ok(Legs::basis(m.field(), &[dm, dh, da])
        .split(2, a.coaction(), da, dh)?
        .swap(1)?
        .merge(2, h.mult())?
        .merge(0, m.action())?
        .into_matrix())
}

/// Coaction `m ⊗ h ↦ (μ⁻¹(m) ⊗ h₁) ⊗ α(h₂)` on `M ⊗ H`.
pub(crate) fn induced_coaction(mu_inv: &Matrix, h: &HomHopfAlgebra) -> Result<Matrix> {
    let (dm, dh) = (mu_inv.rows(), h.dim());
    Ok(Legs::basis(h.field(), &[dm, dh])
        .split(1, h.comult(), dh, dh)?
        .map(0, mu_inv)?
        .map(2, h.alpha())?
        .into_matrix())
}

/// `G(M)` for a Hom-module `M`; the module must pass its axioms.
pub fn induce(m: &HomModule, a: &ComoduleAlgebra) -> Result<InducedModule> {
    let report = check_hom_module(m, a.algebra())?;
    if !report.pass {
        return Err(Error::Uncertified {
            what: "module to induce".into(),
            report,
        });
    }
    let h = a.hopf();
    let action = induced_action(m, a)?;
    let coaction = induced_coaction(m.mu_inv()?, h)?;
    let relative = RelativeHopfModule::new(m.mu().kron(h.alpha()), action, coaction, a.dim(), h.dim())?;
    Ok(InducedModule {
        relative,
        source: m.clone(),
    })
}

/// `η_M = ρ_M : M → G(F(M))`.
pub fn unit_map(m: &RelativeHopfModule) -> Matrix {
    m.coaction().clone()
}

/// `δ_N : N ⊗ H → N`, `n ⊗ h ↦ ε(h) μ(n)`.
///
/// This is `(id ⊗ ε)` followed by the right unitor of the Hom-category,
/// which carries the factor `μ`; with it both triangle identities hold
/// exactly for every structure map.
pub fn counit_map(n: &HomModule, h: &HomHopfAlgebra) -> Matrix {
    n.mu().kron(&h.counit_matrix())
}

/// `G(f) = f ⊗ id_H`.
pub fn induce_map(f: &Matrix, h: &HomHopfAlgebra) -> Matrix {
    f.kron(&h.identity())
}

/// `G(δ_N)∘η_{G(N)} = id_{G(N)}` and `δ_{F(M)}∘F(η_M) = id_{F(M)}`.
pub fn check_adjunction_triangles(m: &RelativeHopfModule, n: &HomModule, a: &ComoduleAlgebra) -> Result<AxiomReport> {
    let h = a.hopf();
    let mut report = AxiomReport::new();
    let g = induce(n, a)?;
    let lhs = induce_map(&counit_map(n, h), h).mul(&unit_map(&g.relative));
    report.check_equal(
        "triangle-induced",
        &lhs,
        &Matrix::identity(n.field(), g.relative.dim()),
        &[n.dim(), h.dim()],
    );
    let lhs = counit_map(m.module(), h).mul(&unit_map(m));
    report.check_equal("triangle-forgetful", &lhs, &Matrix::identity(m.field(), m.dim()), &[m.dim()]);
    Ok(report)
}

/// Re-verifies an induced module against the relative Hom-Hopf module axioms.
pub fn check_induced(g: &InducedModule, a: &ComoduleAlgebra) -> Result<AxiomReport> {
    check_relative_hopf_module(&g.relative, a)
}
