//! Right Hom-modules, right Hom-comodules, comodule algebras and relative
//! Hom-Hopf modules, with their axiom checkers and morphism predicates.
//!
//! An action is a `dim(M) × dim(M)·dim(A)` matrix (column `m·dim(A) + a`
//! holds `e_m · e_a`); a coaction is `dim(M)·dim(H) × dim(M)` (column `m`
//! holds `ρ(e_m)` with the `M` leg major).

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hom_core::{check_hom_algebra, HomAlgebra, HomCoalgebra, HomHopfAlgebra};
use crate::linalg::{invert_matrix, Field, Matrix};
use crate::report::AxiomReport;
use crate::tensor::Legs;

fn square(context: &str, m: &Matrix) -> Result<usize> {
    if !m.is_square() {
        return Err(Error::dims(context, m.rows(), m.cols()));
    }
    Ok(m.rows())
}

/// A right Hom-module `(M, μ)` over some Hom-algebra of dimension
/// `algebra_dim`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomModule {
    mu: Matrix,
    mu_inv: Option<Matrix>,
    action: Matrix,
    algebra_dim: usize,
}

impl HomModule {
    pub fn new(mu: Matrix, action: Matrix, algebra_dim: usize) -> Result<Self> {
        let d = square("module structure map", &mu)?;
        if action.rows() != d || action.cols() != d * algebra_dim {
            return Err(Error::dims("module action", d * d * algebra_dim, action.rows() * action.cols()));
        }
        let mu_inv = invert_matrix(&mu).ok();
        Ok(HomModule {
            mu,
            mu_inv,
            action,
            algebra_dim,
        })
    }

    /// `A` acting on itself by multiplication, with `μ = β`.
    pub fn regular(a: &HomAlgebra) -> Self {
        HomModule::new(a.alpha().clone(), a.mult().clone(), a.dim()).expect("algebra shapes are valid")
    }

    pub fn dim(&self) -> usize {
        self.mu.rows()
    }

    pub fn field(&self) -> Field {
        self.mu.field()
    }

    pub fn mu(&self) -> &Matrix {
        &self.mu
    }

    pub fn mu_inv(&self) -> Result<&Matrix> {
        self.mu_inv.as_ref().ok_or_else(|| Error::NotInvertible {
            context: "module structure map".into(),
        })
    }

    pub fn action(&self) -> &Matrix {
        &self.action
    }

    pub fn algebra_dim(&self) -> usize {
        self.algebra_dim
    }
}

/// A right Hom-comodule `(M, μ)` over a Hom-coalgebra of dimension
/// `coalgebra_dim`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomComodule {
    mu: Matrix,
    mu_inv: Option<Matrix>,
    coaction: Matrix,
    coalgebra_dim: usize,
}

impl HomComodule {
    pub fn new(mu: Matrix, coaction: Matrix, coalgebra_dim: usize) -> Result<Self> {
        let d = square("comodule structure map", &mu)?;
        if coaction.rows() != d * coalgebra_dim || coaction.cols() != d {
            return Err(Error::dims(
                "comodule coaction",
                d * d * coalgebra_dim,
                coaction.rows() * coaction.cols(),
            ));
        }
        let mu_inv = invert_matrix(&mu).ok();
        Ok(HomComodule {
            mu,
            mu_inv,
            coaction,
            coalgebra_dim,
        })
    }

    /// `H` coacting on itself by `Δ`, with `μ = α`.
    pub fn regular(c: &HomCoalgebra) -> Self {
        HomComodule::new(c.gamma().clone(), c.comult().clone(), c.dim()).expect("coalgebra shapes are valid")
    }

    /// The trivial coaction `m ↦ μ⁻¹(m) ⊗ 1_H`.
    pub fn trivial(mu: Matrix, h: &HomHopfAlgebra) -> Result<Self> {
        let mu_inv = invert_matrix(&mu)?;
        HomComodule::new(mu, mu_inv.kron(&h.unit_matrix()), h.dim())
    }

    pub fn dim(&self) -> usize {
        self.mu.rows()
    }

    pub fn field(&self) -> Field {
        self.mu.field()
    }

    pub fn mu(&self) -> &Matrix {
        &self.mu
    }

    pub fn mu_inv(&self) -> Result<&Matrix> {
        self.mu_inv.as_ref().ok_or_else(|| Error::NotInvertible {
            context: "comodule structure map".into(),
        })
    }

    pub fn coaction(&self) -> &Matrix {
        &self.coaction
    }

    pub fn coalgebra_dim(&self) -> usize {
        self.coalgebra_dim
    }
}

/// A Hom-algebra `(A, β)` with a coaction `ρ_A` of a fixed Hom-Hopf algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComoduleAlgebra {
    hopf: Arc<HomHopfAlgebra>,
    algebra: HomAlgebra,
    coaction: Matrix,
}

impl ComoduleAlgebra {
    pub fn new(hopf: Arc<HomHopfAlgebra>, algebra: HomAlgebra, coaction: Matrix) -> Result<Self> {
        if hopf.field() != algebra.field() {
            return Err(Error::FieldMismatch(hopf.field().to_string(), algebra.field().to_string()));
        }
        let (d, n) = (algebra.dim(), hopf.dim());
        if coaction.rows() != d * n || coaction.cols() != d {
            return Err(Error::dims("comodule algebra coaction", d * d * n, coaction.rows() * coaction.cols()));
        }
        Ok(ComoduleAlgebra {
            hopf,
            algebra,
            coaction,
        })
    }

    /// `H` over itself with `ρ = Δ`.
    pub fn regular(hopf: Arc<HomHopfAlgebra>) -> Self {
        let algebra = hopf.algebra().clone();
        let coaction = hopf.comult().clone();
        ComoduleAlgebra::new(hopf, algebra, coaction).expect("regular shapes are valid")
    }

    /// `A` with the trivial coaction `a ↦ β⁻¹(a) ⊗ 1_H`.
    pub fn trivial(hopf: Arc<HomHopfAlgebra>, algebra: HomAlgebra) -> Result<Self> {
        let coaction = algebra.alpha_inv()?.kron(&hopf.unit_matrix());
        ComoduleAlgebra::new(hopf, algebra, coaction)
    }

    pub fn hopf(&self) -> &HomHopfAlgebra {
        &self.hopf
    }

    pub fn hopf_arc(&self) -> &Arc<HomHopfAlgebra> {
        &self.hopf
    }

    pub fn algebra(&self) -> &HomAlgebra {
        &self.algebra
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn field(&self) -> Field {
        self.algebra.field()
    }

    pub fn beta(&self) -> &Matrix {
        self.algebra.alpha()
    }

    pub fn beta_inv(&self) -> Result<&Matrix> {
        self.algebra.alpha_inv()
    }

    pub fn mult(&self) -> &Matrix {
        self.algebra.mult()
    }

    pub fn coaction(&self) -> &Matrix {
        &self.coaction
    }

    pub fn as_comodule(&self) -> HomComodule {
        HomComodule::new(self.beta().clone(), self.coaction.clone(), self.hopf.dim()).expect("validated shapes")
    }

    pub fn with_coaction(&self, coaction: Matrix) -> Result<Self> {
        ComoduleAlgebra::new(self.hopf.clone(), self.algebra.clone(), coaction)
    }
}

/// A right relative Hom-Hopf module: a Hom-module over `(A, β)` and a
/// Hom-comodule over `(H, α)` on one carrier with one structure map.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelativeHopfModule {
    module: HomModule,
    comodule: HomComodule,
}

impl RelativeHopfModule {
    pub fn new(mu: Matrix, action: Matrix, coaction: Matrix, algebra_dim: usize, hopf_dim: usize) -> Result<Self> {
        let module = HomModule::new(mu.clone(), action, algebra_dim)?;
        let comodule = HomComodule::new(mu, coaction, hopf_dim)?;
        Ok(RelativeHopfModule { module, comodule })
    }

    pub fn dim(&self) -> usize {
        self.module.dim()
    }

    pub fn field(&self) -> Field {
        self.module.field()
    }

    pub fn mu(&self) -> &Matrix {
        self.module.mu()
    }

    pub fn mu_inv(&self) -> Result<&Matrix> {
        self.module.mu_inv()
    }

    pub fn action(&self) -> &Matrix {
        self.module.action()
    }

    pub fn coaction(&self) -> &Matrix {
        self.comodule.coaction()
    }

    /// The underlying Hom-module; this is the forgetful functor.
    pub fn module(&self) -> &HomModule {
        &self.module
    }

    pub fn comodule(&self) -> &HomComodule {
        &self.comodule
    }

    pub fn with_coaction(&self, coaction: Matrix) -> Result<Self> {
        RelativeHopfModule::new(
            self.mu().clone(),
            self.action().clone(),
            coaction,
            self.module.algebra_dim(),
            self.comodule.coalgebra_dim(),
        )
    }

    pub fn with_action(&self, action: Matrix) -> Result<Self> {
        RelativeHopfModule::new(
            self.mu().clone(),
            action,
            self.coaction().clone(),
            self.module.algebra_dim(),
            self.comodule.coalgebra_dim(),
        )
    }
}

fn expect_dim(context: &str, expected: usize, found: usize) -> Result<()> {
    if expected != found {
        return Err(Error::dims(context, expected, found));
    }
    Ok(())
}

pub fn check_hom_module(m: &HomModule, a: &HomAlgebra) -> Result<AxiomReport> {
    expect_dim("module over algebra", a.dim(), m.algebra_dim())?;
    let mut report = AxiomReport::new();
    let f = m.field();
    let (dm, da) = (m.dim(), a.dim());
    let act = m.action();
    let beta = a.alpha();
    if m.mu_inv().is_err() {
        report.fail("mu-invertible", "module structure map is singular");
    }

    // (m·a)·β(b) = μ(m)·(ab)
    let lhs = Legs::basis(f, &[dm, da, da]).merge(0, act)?.map(1, beta)?.merge(0, act)?.into_matrix();
    let rhs = Legs::basis(f, &[dm, da, da]).merge(1, a.mult())?.map(0, m.mu())?.merge(0, act)?.into_matrix();
    report.check_equal("module-hom-associativity", &lhs, &rhs, &[dm, da, da]);

    let unit = Legs::basis(f, &[dm]).apply(1, 0, &a.unit_matrix(), &[da])?.merge(0, act)?.into_matrix();
    report.check_equal("unit-action", &unit, m.mu(), &[dm]);

    report.check_equal(
        "mu-action-compatibility",
        &m.mu().mul(act),
        &act.mul(&m.mu().kron(beta)),
        &[dm, da],
    );
    Ok(report)
}

pub fn check_hom_comodule(m: &HomComodule, c: &HomCoalgebra) -> Result<AxiomReport> {
    expect_dim("comodule over coalgebra", c.dim(), m.coalgebra_dim())?;
    let mut report = AxiomReport::new();
    let f = m.field();
    let (dm, dh) = (m.dim(), c.dim());
    let rho = m.coaction();

    let (Ok(mu_inv), Ok(gamma_inv)) = (m.mu_inv(), c.gamma_inv()) else {
        report.fail("mu-invertible", "comodule or coalgebra structure map is singular");
        return Ok(report);
    };

    // m₀₀ ⊗ m₀₁ ⊗ γ⁻¹(m₁) = μ⁻¹(m₀) ⊗ Δ(m₁)
    let lhs = Legs::basis(f, &[dm]).split(0, rho, dm, dh)?.map(1, gamma_inv)?.split(0, rho, dm, dh)?.into_matrix();
    let rhs = Legs::basis(f, &[dm]).split(0, rho, dm, dh)?.map(0, mu_inv)?.split(1, c.comult(), dh, dh)?.into_matrix();
    report.check_equal("comodule-coassociativity", &lhs, &rhs, &[dm]);

    let counit = Legs::basis(f, &[dm]).split(0, rho, dm, dh)?.apply(1, 1, &c.counit_matrix(), &[])?.into_matrix();
    report.check_equal("comodule-counitality", &counit, mu_inv, &[dm]);

    report.check_equal(
        "mu-coaction-compatibility",
        &rho.mul(m.mu()),
        &m.mu().kron(c.gamma()).mul(rho),
        &[dm],
    );
    Ok(report)
}

/// Algebra and comodule axioms of `(A, β, ρ_A)` plus multiplicativity and
/// unitality of the coaction.
pub fn check_comodule_algebra(a: &ComoduleAlgebra) -> Result<AxiomReport> {
    let h = a.hopf();
    let mut report = check_hom_algebra(a.algebra())?;
    report.merge(check_hom_comodule(&a.as_comodule(), h.coalgebra())?);
    let f = a.field();
    let (da, dh) = (a.dim(), h.dim());
    let rho = a.coaction();

    // ρ(ab) = a₀b₀ ⊗ a₁b₁
    let lhs = rho.mul(a.mult());
    let rhs = Legs::basis(f, &[da, da])
        .split(1, rho, da, dh)?
        .split(0, rho, da, dh)?
        .swap(1)?
        .merge(2, h.mult())?
        .merge(0, a.mult())?
        .into_matrix();
    report.check_equal("coaction-multiplicative", &lhs, &rhs, &[da, da]);

    let unit = a.algebra().unit_matrix();
    report.check_equal("coaction-unit", &rho.mul(&unit), &unit.kron(&h.unit_matrix()), &[]);
    Ok(report)
}

/// Module and comodule axioms plus `ρ(m·a) = m₀·a₀ ⊗ m₁a₁`.
pub fn check_relative_hopf_module(m: &RelativeHopfModule, a: &ComoduleAlgebra) -> Result<AxiomReport> {
    let h = a.hopf();
    let mut report = check_hom_module(m.module(), a.algebra())?;
    report.merge(check_hom_comodule(m.comodule(), h.coalgebra())?);
    let f = m.field();
    let (dm, da, dh) = (m.dim(), a.dim(), h.dim());

    let lhs = m.coaction().mul(m.action());
    let rhs = Legs::basis(f, &[dm, da])
        .split(1, a.coaction(), da, dh)?
        .split(0, m.coaction(), dm, dh)?
        .swap(1)?
        .merge(2, h.mult())?
        .merge(0, m.action())?
        .into_matrix();
    report.check_equal("relative-compatibility", &lhs, &rhs, &[dm, da]);
    Ok(report)
}

/// Which structure a morphism has to preserve.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MorphismKind {
    Module,
    Comodule,
    Relative,
}

fn check_map_shape(f: &Matrix, source: usize, target: usize) -> Result<()> {
    if f.rows() != target || f.cols() != source {
        return Err(Error::dims("morphism", target * source, f.rows() * f.cols()));
    }
    Ok(())
}

/// `f∘μ = μ'∘f` and `f(m·a) = f(m)·a`.
pub fn check_module_morphism(f: &Matrix, source: &HomModule, target: &HomModule) -> Result<AxiomReport> {
    check_map_shape(f, source.dim(), target.dim())?;
    expect_dim("algebra of target module", source.algebra_dim(), target.algebra_dim())?;
    let mut report = AxiomReport::new();
    let da = source.algebra_dim();
    report.check_equal("mu-intertwining", &f.mul(source.mu()), &target.mu().mul(f), &[source.dim()]);
    let id_a = Matrix::identity(f.field(), da);
    report.check_equal(
        "action-preservation",
        &f.mul(source.action()),
        &target.action().mul(&f.kron(&id_a)),
        &[source.dim(), da],
    );
    Ok(report)
}

/// `f∘μ = μ'∘f` and `ρ'∘f = (f ⊗ id)∘ρ`.
pub fn check_comodule_morphism(f: &Matrix, source: &HomComodule, target: &HomComodule) -> Result<AxiomReport> {
    check_map_shape(f, source.dim(), target.dim())?;
    expect_dim("coalgebra of target comodule", source.coalgebra_dim(), target.coalgebra_dim())?;
    let mut report = AxiomReport::new();
    let dh = source.coalgebra_dim();
    report.check_equal("mu-intertwining", &f.mul(source.mu()), &target.mu().mul(f), &[source.dim()]);
    let id_h = Matrix::identity(f.field(), dh);
    report.check_equal(
        "coaction-preservation",
        &target.coaction().mul(f),
        &f.kron(&id_h).mul(source.coaction()),
        &[source.dim()],
    );
    Ok(report)
}

pub fn is_morphism(
    f: &Matrix,
    source: &RelativeHopfModule,
    target: &RelativeHopfModule,
    kind: MorphismKind,
) -> Result<AxiomReport> {
    match kind {
        MorphismKind::Module => check_module_morphism(f, source.module(), target.module()),
        MorphismKind::Comodule => check_comodule_morphism(f, source.comodule(), target.comodule()),
        MorphismKind::Relative => {
            let mut report = check_module_morphism(f, source.module(), target.module())?;
            let co = check_comodule_morphism(f, source.comodule(), target.comodule())?;
            for v in co.violations {
                if v.axiom != "mu-intertwining" {
                    report.push(v);
                }
            }
            Ok(report)
        }
    }
}

/// `A` as a relative Hom-Hopf module over itself.
pub fn regular_relative_module(a: &ComoduleAlgebra) -> RelativeHopfModule {
    RelativeHopfModule::new(
        a.beta().clone(),
        a.mult().clone(),
        a.coaction().clone(),
        a.dim(),
        a.hopf().dim(),
    )
    .expect("comodule algebra shapes are valid")
}

/// Re-indexes a `rows_legs → cols_legs` structure matrix of one summand into
/// the carrier of a direct sum. `offset` is the summand's first index in the
/// sum, `total` the sum's dimension, and `inner` the size of the fixed leg
/// that sits after the carrier leg on each side (1 if none).
fn embed_block(
    m: &Matrix,
    offset: usize,
    total: usize,
    row_inner: usize,
    col_inner: usize,
) -> Matrix {
    let mut out = Matrix::zeros(m.field(), total * row_inner, total * col_inner);
    for r in 0..m.rows() {
        let (rm, ri) = (r / row_inner, r % row_inner);
        for c in 0..m.cols() {
            let v = m.get(r, c);
            if v.is_zero() {
                continue;
            }
            let (cm, ci) = (c / col_inner, c % col_inner);
            out.set((offset + rm) * row_inner + ri, (offset + cm) * col_inner + ci, v.clone());
        }
    }
    out
}

/// Componentwise direct sum `M ⊕ N`; the basis of `M` comes first.
pub fn direct_sum(m: &RelativeHopfModule, n: &RelativeHopfModule) -> Result<RelativeHopfModule> {
    let da = m.module().algebra_dim();
    let dh = m.comodule().coalgebra_dim();
    expect_dim("direct sum algebra", da, n.module().algebra_dim())?;
    expect_dim("direct sum coalgebra", dh, n.comodule().coalgebra_dim())?;
    let total = m.dim() + n.dim();
    let mu = m.mu().direct_sum(n.mu());
    let action = embed_block(m.action(), 0, total, 1, da).add(&embed_block(n.action(), m.dim(), total, 1, da))?;
    let coaction =
        embed_block(m.coaction(), 0, total, dh, 1).add(&embed_block(n.coaction(), m.dim(), total, dh, 1))?;
    RelativeHopfModule::new(mu, action, coaction, da, dh)
}

/// Inclusion of the first and second summand and the two projections of
/// `M ⊕ N`, as `(i₁, i₂, p₁, p₂)`.
pub fn direct_sum_maps(m_dim: usize, n_dim: usize, field: Field) -> (Matrix, Matrix, Matrix, Matrix) {
    let total = m_dim + n_dim;
    let mut i1 = Matrix::zeros(field, total, m_dim);
    let mut i2 = Matrix::zeros(field, total, n_dim);
    for k in 0..m_dim {
        i1.set(k, k, field.one());
    }
    for k in 0..n_dim {
        i2.set(m_dim + k, k, field.one());
    }
    (i1.clone(), i2.clone(), i1.transpose(), i2.transpose())
}

/// `ρ` applied twice with `ε` on the middle leg; equals `μ⁻¹∘ρ` for a
/// certified comodule.
pub fn contracted_double_coaction(m: &HomComodule, c: &HomCoalgebra) -> Result<Matrix> {
    let (dm, dh) = (m.dim(), c.dim());
    Ok(Legs::basis(m.field(), &[dm])
        .split(0, m.coaction(), dm, dh)?
        .split(0, m.coaction(), dm, dh)?
        .apply(1, 1, &c.counit_matrix(), &[])?
        .into_matrix())
}
