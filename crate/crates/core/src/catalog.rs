//! The Yau twist and the library of built-in examples.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::hom_core::{check_hom_hopf, Convention, HomHopfAlgebra};
use crate::hom_rep::{regular_relative_module, ComoduleAlgebra, RelativeHopfModule};
use crate::integrals::{solve_total_integral, TotalIntegral};
use crate::linalg::{invert_matrix, Field, Matrix};
use crate::report::AxiomReport;

/// Group algebra of the cyclic group of order `n` with basis `e, g, g^2, …`.
pub fn group_algebra(field: Field, n: usize) -> Result<HomHopfAlgebra> {
    if n == 0 {
        return Err(Error::Invalid("cyclic group order must be positive".into()));
    }
    let mut mult = Matrix::zeros(field, n, n * n);
    let mut comult = Matrix::zeros(field, n * n, n);
    let mut antipode = Matrix::zeros(field, n, n);
    for i in 0..n {
        for j in 0..n {
            mult.set((i + j) % n, i * n + j, field.one());
        }
        comult.set(i * n + i, i, field.one());
        antipode.set((n - i) % n, i, field.one());
    }
    let basis = (0..n)
        .map(|i| match i {
            0 => "e".to_string(),
            1 => "g".to_string(),
            _ => format!("g^{i}"),
        })
        .collect();
    let mut unit = vec![field.zero(); n];
    unit[0] = field.one();
    HomHopfAlgebra::new(
        basis,
        mult,
        unit,
        comult,
        vec![field.one(); n],
        antipode,
        Matrix::identity(field, n),
    )
}

/// Sweedler's four-dimensional Hopf algebra with basis `1, g, x, gx`:
/// `g² = 1`, `x² = 0`, `xg = -gx`, `Δ(x) = x⊗1 + g⊗x`, `S(x) = -gx`.
pub fn sweedler(field: Field) -> Result<HomHopfAlgebra> {
    if field.characteristic() == 2 {
        return Err(Error::Invalid("Sweedler's algebra needs characteristic other than 2".into()));
    }
    let n = 4;
    let mut mult = Matrix::zeros(field, n, n * n);
    let table: [(usize, usize, usize, i64); 12] = [
        (0, 0, 0, 1),
        (0, 1, 1, 1),
        (0, 2, 2, 1),
        (0, 3, 3, 1),
        (1, 0, 1, 1),
        (1, 1, 0, 1),
        (1, 2, 3, 1),
        (1, 3, 2, 1),
        (2, 0, 2, 1),
        (2, 1, 3, -1),
        (3, 0, 3, 1),
        (3, 1, 2, -1),
    ];
    for (i, j, k, c) in table {
        mult.set(k, i * n + j, field.int(c));
    }
    let mut comult = Matrix::zeros(field, n * n, n);
    for (k, i, j) in [(0, 0, 0), (1, 1, 1), (2, 2, 0), (2, 1, 2), (3, 3, 1), (3, 0, 3)] {
        comult.set(i * n + j, k, field.one());
    }
    let antipode = Matrix::from_ints(field, &[&[1, 0, 0, 0], &[0, 1, 0, 0], &[0, 0, 0, 1], &[0, 0, -1, 0]]);
    HomHopfAlgebra::new(
        ["1", "g", "x", "gx"].iter().map(|s| s.to_string()).collect(),
        mult,
        vec![field.one(), field.zero(), field.zero(), field.zero()],
        comult,
        vec![field.one(), field.one(), field.zero(), field.zero()],
        antipode,
        Matrix::identity(field, n),
    )
}

/// `g^i ↦ g^{ik}` on the cyclic group algebra of order `n`.
pub fn cyclic_power_map(field: Field, n: usize, k: usize) -> Matrix {
    let mut m = Matrix::zeros(field, n, n);
    for i in 0..n {
        m.set((i * k) % n, i, field.one());
    }
    m
}

/// `g ↦ g`, `x ↦ c·x` on Sweedler's algebra.
pub fn sweedler_scaling(field: Field, c: i64) -> Matrix {
    let mut m = Matrix::identity(field, 4);
    m.set(2, 2, field.int(c));
    m.set(3, 3, field.int(c));
    m
}

/// Checks that `aut` is an invertible Hopf algebra map commuting with `S`.
pub fn check_hopf_automorphism(h: &HomHopfAlgebra, aut: &Matrix) -> Result<AxiomReport> {
    let d = h.dim();
    if aut.rows() != d || aut.cols() != d {
        return Err(Error::dims("automorphism", d * d, aut.rows() * aut.cols()));
    }
    let mut report = AxiomReport::new();
    if invert_matrix(aut).is_err() {
        report.fail("aut-invertible", "automorphism is singular");
    }
    report.check_equal("aut-multiplicative", &aut.mul(h.mult()), &h.mult().mul(&aut.kron(aut)), &[d, d]);
    let u = h.unit_matrix();
    report.check_equal("aut-unit", &aut.mul(&u), &u, &[]);
    report.check_equal("aut-comultiplicative", &h.comult().mul(aut), &aut.kron(aut).mul(h.comult()), &[d]);
    let eps = h.counit_matrix();
    report.check_equal("aut-counit", &eps.mul(aut), &eps, &[d]);
    report.check_equal("aut-antipode", &h.antipode().mul(aut), &aut.mul(h.antipode()), &[d]);
    Ok(report)
}

/// Twists a classical Hopf algebra by a Hopf automorphism: `m_α = α∘m`,
/// `Δ_α = Δ∘α⁻¹`, same unit, counit and antipode, structure map `α`.
///
/// The result is certified under the categorical convention before it is
/// returned.
pub fn yau_twist(h: &HomHopfAlgebra, aut: &Matrix) -> Result<HomHopfAlgebra> {
    if !h.alpha().is_identity() {
        return Err(Error::Invalid("twist input must be classical (identity structure map)".into()));
    }
    let classical = check_hom_hopf(h, Convention::Categorical)?;
    if !classical.pass {
        return Err(Error::Uncertified {
            what: "classical Hopf algebra".into(),
            report: classical,
        });
    }
    let report = check_hopf_automorphism(h, aut)?;
    if !report.pass {
        return Err(Error::Uncertified {
            what: "Hopf automorphism".into(),
            report,
        });
    }
    let aut_inv = invert_matrix(aut)?;
    let twisted = h.replace(
        Some(aut.mul(h.mult())),
        Some(h.comult().mul(&aut_inv)),
        None,
        Some(aut.clone()),
    )?;
    let check = check_hom_hopf(&twisted, Convention::Categorical)?;
    if !check.pass {
        return Err(Error::Internal(format!("twisted structure fails its axioms: {}", check.summary())));
    }
    Ok(twisted)
}

/// A Hom-Hopf algebra with a comodule algebra over it, the regular relative
/// module of that algebra, and a total integral where one is known.
#[derive(Clone, Debug)]
pub struct Bundle {
    pub name: String,
    pub hopf: Arc<HomHopfAlgebra>,
    pub comodule_algebra: ComoduleAlgebra,
    pub regular: RelativeHopfModule,
    pub integral: Option<TotalIntegral>,
}

impl Bundle {
    /// Bundle with `A = H` and `ρ_A = Δ`; the identity is a total integral.
    pub fn regular(name: &str, hopf: HomHopfAlgebra) -> Result<Self> {
        let hopf = Arc::new(hopf);
        let a = ComoduleAlgebra::regular(hopf.clone());
        let integral = TotalIntegral::certify(hopf.identity(), &a)?;
        Bundle::assemble(name, a, Some(integral))
    }

    /// Bundle over an arbitrary comodule algebra; the integral, if any, is the
    /// solver's particular solution.
    pub fn over(name: &str, a: ComoduleAlgebra) -> Result<Self> {
        let solution = solve_total_integral(&a)?;
        let integral = match solution.particular {
            Some(v) => {
                let phi = Matrix::from_vec(a.field(), a.dim(), a.hopf().dim(), v)?;
                Some(TotalIntegral::certify(phi, &a)?)
            }
            None => None,
        };
        Bundle::assemble(name, a, integral)
    }

    fn assemble(name: &str, a: ComoduleAlgebra, integral: Option<TotalIntegral>) -> Result<Self> {
        Ok(Bundle {
            name: name.to_string(),
            hopf: a.hopf_arc().clone(),
            regular: regular_relative_module(&a),
            comodule_algebra: a,
            integral,
        })
    }
}

const NAMES: &[&str] = &[
    "C2",
    "C4",
    "C4-twisted",
    "H4",
    "H4-twisted",
    "H4-scaled",
    "C2-trivial",
    "C3-F7",
    "C3-F7-twisted",
    "C2-F2",
    "C2-F3",
];

pub fn builtin_names() -> Vec<String> {
    NAMES.iter().map(|s| s.to_string()).collect()
}

/// The built-in bundle `name` over its default field.
pub fn builtin(name: &str) -> Result<Bundle> {
    builtin_with_field(name, None)
}

/// The built-in bundle `name`, optionally rebuilt over another field.
pub fn builtin_with_field(name: &str, field: Option<Field>) -> Result<Bundle> {
    let default = match name {
        "C3-F7" | "C3-F7-twisted" => Field::Prime(7),
        "C2-F2" => Field::Prime(2),
        "C2-F3" => Field::Prime(3),
        _ => Field::Rationals,
    };
    let f = field.unwrap_or(default);
    let hopf = match name {
        "C2" | "C2-F2" | "C2-F3" => group_algebra(f, 2)?,
        "C4" => group_algebra(f, 4)?,
        "C4-twisted" => yau_twist(&group_algebra(f, 4)?, &cyclic_power_map(f, 4, 3))?,
        "H4" => sweedler(f)?,
        "H4-twisted" => yau_twist(&sweedler(f)?, &sweedler_scaling(f, -1))?,
        "H4-scaled" => yau_twist(&sweedler(f)?, &sweedler_scaling(f, 2))?,
        "C3-F7" => group_algebra(f, 3)?,
        "C3-F7-twisted" => yau_twist(&group_algebra(f, 3)?, &cyclic_power_map(f, 3, 2))?,
        "C2-trivial" => {
            let hopf = Arc::new(group_algebra(f, 2)?);
            let a = ComoduleAlgebra::trivial(hopf.clone(), hopf.algebra().clone())?;
            return Bundle::over(name, a);
        }
        _ => {
            return Err(Error::UnknownBuiltin {
                name: name.to_string(),
                available: builtin_names(),
            })
        }
    };
    Bundle::regular(name, hopf)
}

/// The bundles every catalog-wide property is quantified over.
pub fn standard_catalog() -> Vec<Bundle> {
    ["C2", "C4", "C4-twisted", "H4", "H4-twisted", "H4-scaled"]
        .iter()
        .map(|n| builtin(n).expect("built-in bundles construct"))
        .collect()
}
