//! Monoidal Hom-algebras, Hom-coalgebras and Hom-Hopf algebras given by
//! structure constants, with exact axiom checkers.
//!
//! Multiplication is stored as a `dim × dim²` matrix (column `i·dim + j`
//! holds `eᵢ·eⱼ`), comultiplication as `dim² × dim` (column `k` holds
//! `Δ(e_k)`), so the order-3 tensors `m[i][j][k]` and `d[k][i][j]` are read
//! off directly. All checks run on basis tuples, which is complete by
//! multilinearity.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{invert_matrix, Field, Matrix, Scalar};
use crate::report::AxiomReport;
use crate::tensor::Legs;

/// Which form of Hom-coassociativity to check.
///
/// `Categorical` puts `γ⁻¹` on the outer right leg, matching the comodule
/// axiom and the associator of the Hom-category. `Printed` puts `γ` there.
/// The two agree whenever `γ² = id`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Convention {
    #[default]
    Categorical,
    Printed,
}

impl fmt::Display for Convention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Convention::Categorical => write!(f, "categorical"),
            Convention::Printed => write!(f, "printed"),
        }
    }
}

impl FromStr for Convention {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "categorical" => Ok(Convention::Categorical),
            "printed" => Ok(Convention::Printed),
            other => Err(Error::parse("convention", format!("unknown convention '{other}'"))),
        }
    }
}

pub(crate) fn default_basis(prefix: &str, dim: usize) -> Vec<String> {
    (0..dim).map(|i| format!("{prefix}{i}")).collect()
}

fn check_square(context: &str, m: &Matrix, dim: usize) -> Result<()> {
    if m.rows() != dim || m.cols() != dim {
        return Err(Error::dims(context, dim * dim, m.rows() * m.cols()));
    }
    Ok(())
}

fn check_shape(context: &str, m: &Matrix, rows: usize, cols: usize) -> Result<()> {
    if m.rows() != rows || m.cols() != cols {
        return Err(Error::dims(context, rows * cols, m.rows() * m.cols()));
    }
    Ok(())
}

/// A monoidal Hom-algebra candidate `(A, m, 1_A, α)`; axioms are not
/// enforced at construction, see [`check_hom_algebra`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomAlgebra {
    basis: Vec<String>,
    mult: Matrix,
    unit: Vec<Scalar>,
    alpha: Matrix,
    alpha_inv: Option<Matrix>,
}

impl HomAlgebra {
    pub fn new(basis: Vec<String>, mult: Matrix, unit: Vec<Scalar>, alpha: Matrix) -> Result<Self> {
        let d = basis.len();
        check_shape("multiplication", &mult, d, d * d)?;
        if unit.len() != d {
            return Err(Error::dims("unit vector", d, unit.len()));
        }
        check_square("structure map", &alpha, d)?;
        let alpha_inv = invert_matrix(&alpha).ok();
        Ok(HomAlgebra {
            basis,
            mult,
            unit,
            alpha,
            alpha_inv,
        })
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn field(&self) -> Field {
        self.alpha.field()
    }

    pub fn basis(&self) -> &[String] {
        &self.basis
    }

    pub fn mult(&self) -> &Matrix {
        &self.mult
    }

    pub fn unit(&self) -> &[Scalar] {
        &self.unit
    }

    pub fn unit_matrix(&self) -> Matrix {
        Matrix::column_vector(self.field(), &self.unit)
    }

    pub fn alpha(&self) -> &Matrix {
        &self.alpha
    }

    pub fn alpha_inv(&self) -> Result<&Matrix> {
        self.alpha_inv.as_ref().ok_or_else(|| Error::NotInvertible {
            context: "algebra structure map".into(),
        })
    }

    /// `α^k` for any integer `k`.
    pub fn alpha_pow(&self, k: i32) -> Result<Matrix> {
        Ok(crate::linalg::matrix_power(&self.alpha, self.alpha_inv()?, k))
    }

    pub fn multiply(&self, x: &[Scalar], y: &[Scalar]) -> Result<Vec<Scalar>> {
        let xy = Matrix::column_vector(self.field(), x).kron(&Matrix::column_vector(self.field(), y));
        self.mult.apply(&xy.column(0))
    }

    pub fn with_mult(&self, mult: Matrix) -> Result<Self> {
        HomAlgebra::new(self.basis.clone(), mult, self.unit.clone(), self.alpha.clone())
    }
}

/// A monoidal Hom-coalgebra candidate `(C, Δ, ε, γ)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomCoalgebra {
    basis: Vec<String>,
    comult: Matrix,
    counit: Vec<Scalar>,
    gamma: Matrix,
    gamma_inv: Option<Matrix>,
}

impl HomCoalgebra {
    pub fn new(basis: Vec<String>, comult: Matrix, counit: Vec<Scalar>, gamma: Matrix) -> Result<Self> {
        let d = basis.len();
        check_shape("comultiplication", &comult, d * d, d)?;
        if counit.len() != d {
            return Err(Error::dims("counit vector", d, counit.len()));
        }
        check_square("structure map", &gamma, d)?;
        let gamma_inv = invert_matrix(&gamma).ok();
        Ok(HomCoalgebra {
            basis,
            comult,
            counit,
            gamma,
            gamma_inv,
        })
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn field(&self) -> Field {
        self.gamma.field()
    }

    pub fn basis(&self) -> &[String] {
        &self.basis
    }

    pub fn comult(&self) -> &Matrix {
        &self.comult
    }

    pub fn counit(&self) -> &[Scalar] {
        &self.counit
    }

    /// `ε` as a `1 × dim` matrix.
    pub fn counit_matrix(&self) -> Matrix {
        Matrix::row_vector(self.field(), &self.counit)
    }

    pub fn gamma(&self) -> &Matrix {
        &self.gamma
    }

    pub fn gamma_inv(&self) -> Result<&Matrix> {
        self.gamma_inv.as_ref().ok_or_else(|| Error::NotInvertible {
            context: "coalgebra structure map".into(),
        })
    }
}

/// A monoidal Hom-Hopf algebra candidate: algebra and coalgebra on one
/// carrier sharing the structure map `α`, plus an antipode `S`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomHopfAlgebra {
    algebra: HomAlgebra,
    coalgebra: HomCoalgebra,
    antipode: Matrix,
}

impl HomHopfAlgebra {
    #[allow(clippy::too_many_arguments)]
    pub fn new(
        basis: Vec<String>,
        mult: Matrix,
        unit: Vec<Scalar>,
        comult: Matrix,
        counit: Vec<Scalar>,
        antipode: Matrix,
        alpha: Matrix,
    ) -> Result<Self> {
        let algebra = HomAlgebra::new(basis.clone(), mult, unit, alpha.clone())?;
        let coalgebra = HomCoalgebra::new(basis, comult, counit, alpha)?;
        check_square("antipode", &antipode, algebra.dim())?;
        Ok(HomHopfAlgebra {
            algebra,
            coalgebra,
            antipode,
        })
    }

    pub fn algebra(&self) -> &HomAlgebra {
        &self.algebra
    }

    pub fn coalgebra(&self) -> &HomCoalgebra {
        &self.coalgebra
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn field(&self) -> Field {
        self.algebra.field()
    }

    pub fn basis(&self) -> &[String] {
        self.algebra.basis()
    }

    pub fn mult(&self) -> &Matrix {
        self.algebra.mult()
    }

    pub fn unit(&self) -> &[Scalar] {
        self.algebra.unit()
    }

    pub fn unit_matrix(&self) -> Matrix {
        self.algebra.unit_matrix()
    }

    pub fn comult(&self) -> &Matrix {
        self.coalgebra.comult()
    }

    pub fn counit(&self) -> &[Scalar] {
        self.coalgebra.counit()
    }

    pub fn counit_matrix(&self) -> Matrix {
        self.coalgebra.counit_matrix()
    }

    pub fn alpha(&self) -> &Matrix {
        self.algebra.alpha()
    }

    pub fn alpha_inv(&self) -> Result<&Matrix> {
        self.algebra.alpha_inv()
    }

    pub fn alpha_pow(&self, k: i32) -> Result<Matrix> {
        self.algebra.alpha_pow(k)
    }

    pub fn antipode(&self) -> &Matrix {
        &self.antipode
    }

    pub fn identity(&self) -> Matrix {
        Matrix::identity(self.field(), self.dim())
    }

    /// `η∘ε`, the unit of the convolution algebra.
    pub fn unit_counit(&self) -> Matrix {
        self.unit_matrix().mul(&self.counit_matrix())
    }

    /// Same data with one structure tensor replaced; used by the twist and by
    /// corruption tests.
    pub fn replace(
        &self,
        mult: Option<Matrix>,
        comult: Option<Matrix>,
        antipode: Option<Matrix>,
        alpha: Option<Matrix>,
    ) -> Result<Self> {
        HomHopfAlgebra::new(
            self.basis().to_vec(),
            mult.unwrap_or_else(|| self.mult().clone()),
            self.unit().to_vec(),
            comult.unwrap_or_else(|| self.comult().clone()),
            self.counit().to_vec(),
            antipode.unwrap_or_else(|| self.antipode.clone()),
            alpha.unwrap_or_else(|| self.alpha().clone()),
        )
    }

    pub fn with_unit_counit(&self, unit: Vec<Scalar>, counit: Vec<Scalar>) -> Result<Self> {
        HomHopfAlgebra::new(
            self.basis().to_vec(),
            self.mult().clone(),
            unit,
            self.comult().clone(),
            counit,
            self.antipode.clone(),
            self.alpha().clone(),
        )
    }
}

pub fn check_hom_algebra(a: &HomAlgebra) -> Result<AxiomReport> {
    let mut report = AxiomReport::new();
    let f = a.field();
    let d = a.dim();
    let m = a.mult();
    let al = a.alpha();

    if a.alpha_inv().is_err() {
        report.fail("alpha-invertible", "structure map is singular");
    }

    let lhs = al.mul(m);
    let rhs = m.mul(&al.kron(al));
    report.check_equal("alpha-multiplicative", &lhs, &rhs, &[d, d]);

    let u = a.unit_matrix();
    report.check_equal("alpha-unit", &al.mul(&u), &u, &[]);

    // α(a)(bc) = (ab)α(c)
    let lhs = Legs::basis(f, &[d, d, d]).map(0, al)?.merge(1, m)?.merge(0, m)?.into_matrix();
    let rhs = Legs::basis(f, &[d, d, d]).merge(0, m)?.map(1, al)?.merge(0, m)?.into_matrix();
    report.check_equal("hom-associativity", &lhs, &rhs, &[d, d, d]);

    // a·1 = 1·a = α(a)
    let right = Legs::basis(f, &[d]).apply(1, 0, &u, &[d])?.merge(0, m)?.into_matrix();
    report.check_equal("hom-unitality-right", &right, al, &[d]);
    let left = Legs::basis(f, &[d]).apply(0, 0, &u, &[d])?.merge(0, m)?.into_matrix();
    report.check_equal("hom-unitality-left", &left, al, &[d]);
    Ok(report)
}

pub fn check_hom_coalgebra(c: &HomCoalgebra, convention: Convention) -> Result<AxiomReport> {
    let mut report = AxiomReport::new();
    let f = c.field();
    let d = c.dim();
    let delta = c.comult();
    let g = c.gamma();
    let eps = c.counit_matrix();

    report.check_equal("gamma-comultiplicative", &delta.mul(g), &g.kron(g).mul(delta), &[d]);
    report.check_equal("counit-invariance", &eps.mul(g), &eps, &[d]);

    let Ok(gi) = c.gamma_inv() else {
        report.fail("gamma-invertible", "structure map is singular");
        return Ok(report);
    };

    // γ⁻¹(c₁) ⊗ c₂₁ ⊗ c₂₂ = c₁₁ ⊗ c₁₂ ⊗ γ^{∓1}(c₂)
    let outer = match convention {
        Convention::Categorical => gi,
        Convention::Printed => g,
    };
    let lhs = Legs::basis(f, &[d]).split(0, delta, d, d)?.map(0, gi)?.split(1, delta, d, d)?.into_matrix();
    let rhs = Legs::basis(f, &[d]).split(0, delta, d, d)?.split(0, delta, d, d)?.map(2, outer)?.into_matrix();
    report.check_equal("hom-coassociativity", &lhs, &rhs, &[d]);

    // ε(c₁)c₂ = ε(c₂)c₁ = γ⁻¹(c)
    let left = Legs::basis(f, &[d]).split(0, delta, d, d)?.apply(0, 1, &eps, &[])?.into_matrix();
    report.check_equal("hom-counitality-left", &left, gi, &[d]);
    let right = Legs::basis(f, &[d]).split(0, delta, d, d)?.apply(1, 1, &eps, &[])?.into_matrix();
    report.check_equal("hom-counitality-right", &right, gi, &[d]);
    Ok(report)
}

/// Algebra and coalgebra axioms together with the compatibility of `Δ`, `ε`
/// with the product and unit.
pub fn check_hom_bialgebra(h: &HomHopfAlgebra, convention: Convention) -> Result<AxiomReport> {
    let mut report = check_hom_algebra(h.algebra())?;
    report.merge(check_hom_coalgebra(h.coalgebra(), convention)?);
    let f = h.field();
    let d = h.dim();
    let m = h.mult();
    let delta = h.comult();
    let eps = h.counit_matrix();
    let u = h.unit_matrix();

    // Δ(ab) = a₁b₁ ⊗ a₂b₂
    let lhs = delta.mul(m);
    let rhs = Legs::basis(f, &[d, d])
        .split(1, delta, d, d)?
        .split(0, delta, d, d)?
        .swap(1)?
        .merge(2, m)?
        .merge(0, m)?
        .into_matrix();
    report.check_equal("comult-multiplicative", &lhs, &rhs, &[d, d]);
    report.check_equal("comult-unit", &delta.mul(&u), &u.kron(&u), &[]);
    report.check_equal("counit-multiplicative", &eps.mul(m), &eps.kron(&eps), &[d, d]);
    report.check_equal(
        "counit-unit",
        &eps.mul(&u),
        &Matrix::identity(f, 1),
        &[],
    );
    Ok(report)
}

/// Full Hom-Hopf check: bialgebra axioms, both antipode identities and
/// `S∘α = α∘S`.
pub fn check_hom_hopf(h: &HomHopfAlgebra, convention: Convention) -> Result<AxiomReport> {
    let mut report = check_hom_bialgebra(h, convention)?;
    let d = h.dim();
    let s = h.antipode();
    let id = h.identity();
    let target = h.unit_counit();
    let left = convolution_product(s, &id, h.coalgebra(), h.algebra())?;
    report.check_equal("antipode-left", &left, &target, &[d]);
    let right = convolution_product(&id, s, h.coalgebra(), h.algebra())?;
    report.check_equal("antipode-right", &right, &target, &[d]);
    report.check_equal("antipode-commutes-alpha", &s.mul(h.alpha()), &h.alpha().mul(s), &[d]);
    Ok(report)
}

/// `(f ∗ g)(c) = f(c₁)·g(c₂)`.
pub fn convolution_product(f: &Matrix, g: &Matrix, from: &HomCoalgebra, to: &HomAlgebra) -> Result<Matrix> {
    for (name, map) in [("left convolution factor", f), ("right convolution factor", g)] {
        check_shape(name, map, to.dim(), from.dim())?;
    }
    let c = from.dim();
    Ok(Legs::basis(from.field(), &[c])
        .split(0, from.comult(), c, c)?
        .map(0, f)?
        .map(1, g)?
        .merge(0, to.mult())?
        .into_matrix())
}

pub fn antipode_inverse(h: &HomHopfAlgebra) -> Result<Matrix> {
    invert_matrix(h.antipode()).map_err(|_| Error::NotInvertible {
        context: "antipode".into(),
    })
}
