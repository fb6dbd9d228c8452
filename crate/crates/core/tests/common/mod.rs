//! Shared test support: direct-sum oracles over structure constants, random
//! generators and the CLI fixture set.
//!
//! The oracles evaluate every identity element by element with explicit sums
//! over structure constants and never go through the library's tensor
//! pipeline, so agreement with the library checkers is a two-route check.

#![allow(dead_code)]

use std::path::PathBuf;
use std::sync::Arc;

use homhopf::catalog::{builtin, builtin_with_field, Bundle};
use homhopf::format::{to_canonical_string, Document, Extension};
use homhopf::hom_core::HomHopfAlgebra;
use homhopf::hom_rep::{direct_sum_maps, ComoduleAlgebra, HomComodule, RelativeHopfModule};
use homhopf::linalg::{invert_matrix, solve_affine_map};
use homhopf::maschke::{doubled_regular_sequence, ShortExactSequence};
use homhopf::{Field, Matrix, Scalar};
use rand::Rng;
use serde_json::Value;

pub type V = Vec<Scalar>;

pub fn zeros(f: Field, n: usize) -> V {
    vec![f.zero(); n]
}

pub fn unit_vec(f: Field, n: usize, i: usize) -> V {
    let mut v = zeros(f, n);
    v[i] = f.one();
    v
}

pub fn axpy(acc: &mut [Scalar], c: &Scalar, x: &[Scalar]) {
    for (a, b) in acc.iter_mut().zip(x) {
        *a += &(c * b);
    }
}

pub fn apply(m: &Matrix, x: &[Scalar]) -> V {
    (0..m.rows())
        .map(|r| {
            let mut s = m.field().zero();
            for (c, xc) in x.iter().enumerate() {
                if !xc.is_zero() {
                    s += &(m.get(r, c) * xc);
                }
            }
            s
        })
        .collect()
}

/// `Σ xᵢ yⱼ (eᵢ ⋆ eⱼ)` for a structure matrix with column `i·dj + j`.
pub fn bilinear(m: &Matrix, dj: usize, x: &[Scalar], y: &[Scalar]) -> V {
    let mut out = zeros(m.field(), m.rows());
    for (i, xi) in x.iter().enumerate() {
        if xi.is_zero() {
            continue;
        }
        for (j, yj) in y.iter().enumerate() {
            if yj.is_zero() {
                continue;
            }
            axpy(&mut out, &(xi * yj), &m.column(i * dj + j));
        }
    }
    out
}

/// Nonzero terms `(i, j, c)` of a split map `e_k ↦ Σ c·eᵢ ⊗ eⱼ`.
pub fn terms(m: &Matrix, dj: usize, k: usize) -> Vec<(usize, usize, Scalar)> {
    (0..m.rows())
        .filter(|&r| !m.get(r, k).is_zero())
        .map(|r| (r / dj, r % dj, m.get(r, k).clone()))
        .collect()
}

/// Split map applied to a vector, as a table `t[i][j]`.
pub fn split(m: &Matrix, di: usize, dj: usize, x: &[Scalar]) -> Vec<V> {
    let f = m.field();
    let mut t = vec![zeros(f, dj); di];
    for (k, xk) in x.iter().enumerate() {
        if xk.is_zero() {
            continue;
        }
        for (i, j, c) in terms(m, dj, k) {
            t[i][j] += &(&c * xk);
        }
    }
    t
}

/// `x ⊗ y` flattened with `x` major.
pub fn outer(x: &[Scalar], y: &[Scalar]) -> V {
    let mut out = Vec::with_capacity(x.len() * y.len());
    for a in x {
        for b in y {
            out.push(a * b);
        }
    }
    out
}

pub fn add(x: &mut [Scalar], y: &[Scalar]) {
    for (a, b) in x.iter_mut().zip(y) {
        *a += b;
    }
}

pub fn scaled(c: &Scalar, x: &[Scalar]) -> V {
    x.iter().map(|v| c * v).collect()
}

pub fn matrix_from_columns(f: Field, rows: usize, cols: &[V]) -> Matrix {
    let mut m = Matrix::zeros(f, rows, cols.len());
    for (c, v) in cols.iter().enumerate() {
        for (r, s) in v.iter().enumerate() {
            m.set(r, c, s.clone());
        }
    }
    m
}

// ---------------------------------------------------------------------------
// Hopf-level oracles
// ---------------------------------------------------------------------------

pub struct HopfOracle<'a> {
    pub h: &'a HomHopfAlgebra,
    pub d: usize,
    pub f: Field,
    pub alpha_inv: Matrix,
}

impl<'a> HopfOracle<'a> {
    pub fn new(h: &'a HomHopfAlgebra) -> Self {
        HopfOracle {
            h,
            d: h.dim(),
            f: h.field(),
            alpha_inv: invert_matrix(h.alpha()).expect("invertible structure map"),
        }
    }

    pub fn e(&self, i: usize) -> V {
        unit_vec(self.f, self.d, i)
    }

    pub fn mul(&self, x: &[Scalar], y: &[Scalar]) -> V {
        bilinear(self.h.mult(), self.d, x, y)
    }

    pub fn alpha(&self, x: &[Scalar]) -> V {
        apply(self.h.alpha(), x)
    }

    pub fn alpha_inv(&self, x: &[Scalar]) -> V {
        apply(&self.alpha_inv, x)
    }

    pub fn s(&self, x: &[Scalar]) -> V {
        apply(self.h.antipode(), x)
    }

    pub fn eps(&self, x: &[Scalar]) -> Scalar {
        let mut s = self.f.zero();
        for (c, xi) in self.h.counit().iter().zip(x) {
            s += &(c * xi);
        }
        s
    }

    pub fn one(&self) -> V {
        self.h.unit().to_vec()
    }

    pub fn delta_terms(&self, k: usize) -> Vec<(usize, usize, Scalar)> {
        terms(self.h.comult(), self.d, k)
    }

    /// `α(a)(bc) = (ab)α(c)` on every basis triple.
    pub fn hom_associative(&self) -> bool {
        (0..self.d).all(|a| {
            (0..self.d).all(|b| {
                (0..self.d).all(|c| {
                    let l = self.mul(&self.alpha(&self.e(a)), &self.mul(&self.e(b), &self.e(c)));
                    let r = self.mul(&self.mul(&self.e(a), &self.e(b)), &self.alpha(&self.e(c)));
                    l == r
                })
            })
        })
    }

    /// `t(c₁) ⊗ c₂₁ ⊗ c₂₂ = c₁₁ ⊗ c₁₂ ⊗ t(c₂)` with `t = γ⁻¹` (categorical)
    /// or `t = γ` (printed).
    pub fn hom_coassociative(&self, printed: bool) -> bool {
        let d = self.d;
        let t = |x: &[Scalar]| if printed { self.alpha(x) } else { self.alpha_inv(x) };
        (0..d).all(|k| {
            let mut lhs = zeros(self.f, d * d * d);
            let mut rhs = zeros(self.f, d * d * d);
            for (i, j, c) in self.delta_terms(k) {
                for (p, q, c2) in self.delta_terms(j) {
                    let v = outer(&outer(&t(&self.e(i)), &self.e(p)), &self.e(q));
                    axpy(&mut lhs, &(&c * &c2), &v);
                }
                for (p, q, c2) in self.delta_terms(i) {
                    let v = outer(&outer(&self.e(p), &self.e(q)), &t(&self.e(j)));
                    axpy(&mut rhs, &(&c * &c2), &v);
                }
            }
            lhs == rhs
        })
    }
}

// ---------------------------------------------------------------------------
// Module-level oracles
// ---------------------------------------------------------------------------

pub struct ModOracle<'a> {
    pub m: &'a RelativeHopfModule,
    pub a: &'a ComoduleAlgebra,
    pub hop: HopfOracle<'a>,
    pub dm: usize,
    pub da: usize,
    pub dh: usize,
    pub f: Field,
}

impl<'a> ModOracle<'a> {
    pub fn new(m: &'a RelativeHopfModule, a: &'a ComoduleAlgebra) -> Self {
        ModOracle {
            m,
            a,
            hop: HopfOracle::new(a.hopf()),
            dm: m.dim(),
            da: a.dim(),
            dh: a.hopf().dim(),
            f: m.field(),
        }
    }

    pub fn act(&self, x: &[Scalar], y: &[Scalar]) -> V {
        bilinear(self.m.action(), self.da, x, y)
    }

    pub fn mu(&self, x: &[Scalar]) -> V {
        apply(self.m.mu(), x)
    }

    /// `(m ⊗ h)` coefficient table of `ρ_M(x)`.
    pub fn rho(&self, x: &[Scalar]) -> Vec<V> {
        split(self.m.coaction(), self.dm, self.dh, x)
    }

    /// `λ(m ⊗ h) = μ(m₀)·φ(S(m₁)·α⁻¹(h))` on every basis pair.
    pub fn lambda(&self, phi: &Matrix) -> Matrix {
        let h = &self.hop;
        let mut cols = Vec::new();
        for m in 0..self.dm {
            for x in 0..self.dh {
                let mut out = zeros(self.f, self.dm);
                for (i, j, c) in terms(self.m.coaction(), self.dh, m) {
                    let inner = h.mul(&h.s(&h.e(j)), &h.alpha_inv(&h.e(x)));
                    let v = self.act(&self.mu(&unit_vec(self.f, self.dm, i)), &apply(phi, &inner));
                    axpy(&mut out, &c, &v);
                }
                cols.push(out);
            }
        }
        matrix_from_columns(self.f, self.dm, &cols)
    }

    /// `ν(m ⊗ h) = μ(m₀)·θ(m₁ ⊗ α⁻¹(h))`.
    pub fn nu(&self, theta: &Matrix) -> Matrix {
        let h = &self.hop;
        let mut cols = Vec::new();
        for m in 0..self.dm {
            for x in 0..self.dh {
                let mut out = zeros(self.f, self.dm);
                for (i, j, c) in terms(self.m.coaction(), self.dh, m) {
                    let t = bilinear(theta, self.dh, &h.e(j), &h.alpha_inv(&h.e(x)));
                    let v = self.act(&self.mu(&unit_vec(self.f, self.dm, i)), &t);
                    axpy(&mut out, &c, &v);
                }
                cols.push(out);
            }
        }
        matrix_from_columns(self.f, self.dm, &cols)
    }

    /// `m ↦ m₀·φ(S(m₁))`.
    pub fn trace(&self, phi: &Matrix) -> Matrix {
        let h = &self.hop;
        let cols: Vec<V> = (0..self.dm)
            .map(|m| {
                let mut out = zeros(self.f, self.dm);
                for (i, j, c) in terms(self.m.coaction(), self.dh, m) {
                    let v = self.act(&unit_vec(self.f, self.dm, i), &apply(phi, &h.s(&h.e(j))));
                    axpy(&mut out, &c, &v);
                }
                out
            })
            .collect();
        matrix_from_columns(self.f, self.dm, &cols)
    }

    /// `λ∘ρ` evaluated element by element.
    pub fn after_coaction(&self, map: &Matrix) -> Matrix {
        let cols: Vec<V> = (0..self.dm)
            .map(|m| {
                let t = self.rho(&unit_vec(self.f, self.dm, m));
                let mut out = zeros(self.f, map.rows());
                for (i, row) in t.iter().enumerate() {
                    for (j, c) in row.iter().enumerate() {
                        if !c.is_zero() {
                            axpy(&mut out, c, &map.column(i * self.dh + j));
                        }
                    }
                }
                out
            })
            .collect();
        matrix_from_columns(self.f, map.rows(), &cols)
    }

    /// `ρ(x) = μ⁻¹(x) ⊗ 1` for the given vector.
    pub fn is_coinvariant(&self, x: &[Scalar]) -> bool {
        let mu_inv = invert_matrix(self.m.mu()).expect("invertible");
        let lhs: V = self.rho(x).concat();
        lhs == outer(&apply(&mu_inv, x), &self.hop.one())
    }
}

// ---------------------------------------------------------------------------
// Integral oracles
// ---------------------------------------------------------------------------

pub struct AlgOracle<'a> {
    pub a: &'a ComoduleAlgebra,
    pub hop: HopfOracle<'a>,
    pub da: usize,
    pub dh: usize,
    pub f: Field,
}

impl<'a> AlgOracle<'a> {
    pub fn new(a: &'a ComoduleAlgebra) -> Self {
        AlgOracle {
            a,
            hop: HopfOracle::new(a.hopf()),
            da: a.dim(),
            dh: a.hopf().dim(),
            f: a.field(),
        }
    }

    pub fn e(&self, i: usize) -> V {
        unit_vec(self.f, self.da, i)
    }

    pub fn mul(&self, x: &[Scalar], y: &[Scalar]) -> V {
        bilinear(self.a.mult(), self.da, x, y)
    }

    pub fn beta(&self, x: &[Scalar]) -> V {
        apply(self.a.beta(), x)
    }

    pub fn one(&self) -> V {
        self.a.algebra().unit().to_vec()
    }

    pub fn rho_terms(&self, k: usize) -> Vec<(usize, usize, Scalar)> {
        terms(self.a.coaction(), self.dh, k)
    }

    /// `ρ(x)` as a flat `A ⊗ H` vector.
    pub fn rho(&self, x: &[Scalar]) -> V {
        split(self.a.coaction(), self.da, self.dh, x).concat()
    }

    /// Colinearity, equivariance and normalization of `φ: H → A`.
    pub fn is_total_integral(&self, phi: &Matrix) -> bool {
        let h = &self.hop;
        for x in 0..self.dh {
            let lhs = self.rho(&phi.column(x));
            let mut rhs = zeros(self.f, self.da * self.dh);
            for (i, j, c) in h.delta_terms(x) {
                axpy(&mut rhs, &c, &outer(&phi.column(i), &h.e(j)));
            }
            if lhs != rhs {
                return false;
            }
            if apply(phi, &h.alpha(&h.e(x))) != self.beta(&phi.column(x)) {
                return false;
            }
        }
        apply(phi, &h.one()) == self.one()
    }

    pub fn theta(&self, theta: &Matrix, g: &[Scalar], h: &[Scalar]) -> V {
        bilinear(theta, self.dh, g, h)
    }

    /// The four defining identities of a normalized integral.
    pub fn is_normalized_integral(&self, theta: &Matrix) -> bool {
        let hp = &self.hop;
        let (da, dh, f) = (self.da, self.dh, self.f);
        let beta2 = |x: &[Scalar]| self.beta(&self.beta(x));
        for g in 0..dh {
            for h in 0..dh {
                let (eg, eh) = (hp.e(g), hp.e(h));
                // equivariance
                if self.theta(theta, &hp.alpha(&eg), &hp.alpha(&eh)) != self.beta(&self.theta(theta, &eg, &eh)) {
                    return false;
                }
                // θ(α⁻¹(g) ⊗ h₁) ⊗ α(h₂) = β(t₀) ⊗ g₁ t₁, t = θ(g₂ ⊗ α⁻¹(h))
                let mut lhs = zeros(f, da * dh);
                for (i, j, c) in hp.delta_terms(h) {
                    let t = self.theta(theta, &hp.alpha_inv(&eg), &hp.e(i));
                    axpy(&mut lhs, &c, &outer(&t, &hp.alpha(&hp.e(j))));
                }
                let mut rhs = zeros(f, da * dh);
                for (p, q, c) in hp.delta_terms(g) {
                    let t = self.theta(theta, &hp.e(q), &hp.alpha_inv(&eh));
                    for (k, tk) in t.iter().enumerate() {
                        if tk.is_zero() {
                            continue;
                        }
                        for (b, y, c2) in self.rho_terms(k) {
                            let coeff = &(&c * tk) * &c2;
                            axpy(&mut rhs, &coeff, &outer(&self.beta(&self.e(b)), &hp.mul(&hp.e(p), &hp.e(y))));
                        }
                    }
                }
                if lhs != rhs {
                    return false;
                }
                // β²(a₀₀)·θ(α⁻¹(g)a₀₁ ⊗ α⁻¹(h)α⁻¹(a₁)) = θ(g ⊗ h)·a
                for a in 0..da {
                    let mut lhs = zeros(f, da);
                    for (b, y, c) in self.rho_terms(a) {
                        for (b2, y2, c2) in self.rho_terms(b) {
                            let left = hp.mul(&hp.alpha_inv(&eg), &hp.e(y2));
                            let right = hp.mul(&hp.alpha_inv(&eh), &hp.alpha_inv(&hp.e(y)));
                            let v = self.mul(&beta2(&self.e(b2)), &self.theta(theta, &left, &right));
                            axpy(&mut lhs, &(&c * &c2), &v);
                        }
                    }
                    if lhs != self.mul(&self.theta(theta, &eg, &eh), &self.e(a)) {
                        return false;
                    }
                }
            }
            // θ(h₁ ⊗ h₂) = ε(h) 1
            let mut lhs = zeros(f, da);
            for (i, j, c) in hp.delta_terms(g) {
                axpy(&mut lhs, &c, &self.theta(theta, &hp.e(i), &hp.e(j)));
            }
            if lhs != scaled(&hp.eps(&hp.e(g)), &self.one()) {
                return false;
            }
        }
        true
    }

    /// `φ(h)·a = a·φ(h)` on every basis pair.
    pub fn image_is_central(&self, phi: &Matrix) -> bool {
        (0..self.dh).all(|x| {
            (0..self.da).all(|a| self.mul(&phi.column(x), &self.e(a)) == self.mul(&self.e(a), &phi.column(x)))
        })
    }
}

// ---------------------------------------------------------------------------
// Enumeration over finite fields
// ---------------------------------------------------------------------------

/// All `rows × cols` matrices over GF(p), in lexicographic order of their
/// row-major entries.
pub fn all_matrices(f: Field, rows: usize, cols: usize) -> Vec<Matrix> {
    let Field::Prime(p) = f else { panic!("finite field required") };
    let n = rows * cols;
    let total = (p as usize).pow(n as u32);
    (0..total)
        .map(|mut k| {
            let data: Vec<Scalar> = (0..n)
                .map(|_| {
                    let v = f.int((k % p as usize) as i64);
                    k /= p as usize;
                    v
                })
                .collect();
            Matrix::from_vec(f, rows, cols, data).unwrap()
        })
        .collect()
}

// ---------------------------------------------------------------------------
// Random data
// ---------------------------------------------------------------------------

/// A nonzero small rational (or residue).
pub fn random_nonzero<R: Rng>(rng: &mut R, f: Field) -> Scalar {
    loop {
        let num: i64 = rng.random_range(-5..=5);
        let den: i64 = rng.random_range(1..=3);
        let s = f.ratio(&num.into(), &den.into()).unwrap();
        if !s.is_zero() {
            return s;
        }
    }
}

pub fn random_combination<R: Rng>(rng: &mut R, f: Field, basis: &[V], len: usize) -> V {
    let mut out = zeros(f, len);
    for v in basis {
        let c = f.int(rng.random_range(-3..=3));
        axpy(&mut out, &c, v);
    }
    out
}

/// Basis of the structure-map-intertwining A-linear maps `source → target`.
pub fn a_linear_maps(source: &RelativeHopfModule, target: &RelativeHopfModule, da: usize) -> Vec<Matrix> {
    let f = source.field();
    let id_a = Matrix::identity(f, da);
    let set = solve_affine_map(f, target.dim(), source.dim(), |x| {
        let mut r = x.mul(source.action()).sub(&target.action().mul(&x.kron(&id_a)))?.to_vec();
        r.extend(x.mul(source.mu()).sub(&target.mu().mul(x))?.to_vec());
        Ok(r)
    })
    .unwrap();
    set.nullspace_basis
        .into_iter()
        .map(|v| Matrix::from_vec(f, target.dim(), source.dim(), v).unwrap())
        .collect()
}

// ---------------------------------------------------------------------------
// CLI fixtures
// ---------------------------------------------------------------------------

pub fn fixture_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests").join("fixtures")
}

fn doc_of(b: &Bundle) -> Document {
    Document::from_bundle(b)
}

fn text_with(doc: &Document, edit: impl FnOnce(&mut Value)) -> String {
    let mut v = homhopf::format::to_value(doc);
    edit(&mut v);
    let mut s = serde_json::to_string_pretty(&v).unwrap();
    s.push('\n');
    s
}

/// `p ↦ (g·p, p)` on `C₂ ⊕ C₂`.
pub fn closed_form_section(f: Field) -> Matrix {
    Matrix::from_ints(f, &[&[0, 1], &[1, 0], &[1, 0], &[0, 1]])
}

pub fn sequence_with_section(a: &ComoduleAlgebra, section: Matrix) -> ShortExactSequence {
    doubled_regular_sequence(a, Some(section)).unwrap()
}

/// The deterministic fixture set used by the CLI tests, as `(file, text)`.
pub fn fixtures() -> Vec<(&'static str, String)> {
    let q = Field::Rationals;
    let mut out = Vec::new();

    for (file, name) in [
        ("c2.json", "C2"),
        ("c4.json", "C4"),
        ("c4-twisted.json", "C4-twisted"),
        ("h4-twisted.json", "H4-twisted"),
        ("h4-scaled.json", "H4-scaled"),
        ("c2-trivial.json", "C2-trivial"),
    ] {
        out.push((file, to_canonical_string(&doc_of(&builtin(name).unwrap()))));
    }
    out.push((
        "c2-gf3.json",
        to_canonical_string(&doc_of(&builtin_with_field("C2", Some(Field::Prime(3))).unwrap())),
    ));

    // H4 with one multiplication constant changed
    let h4 = builtin("H4").unwrap();
    let mut mult = h4.hopf.mult().clone();
    let v = mult.get(2, 2 * 4 + 1).clone();
    mult.set(2, 2 * 4 + 1, &v + &q.one());
    let bad = h4.hopf.replace(Some(mult), None, None, None).unwrap();
    out.push(("h4-corrupt.json", to_canonical_string(&Document::new(Arc::new(bad)))));

    let c2 = builtin("C2").unwrap();
    let mut doc = doc_of(&c2);
    doc.sequence = Some(sequence_with_section(&c2.comodule_algebra, closed_form_section(q)));
    out.push(("c2-maschke.json", to_canonical_string(&doc)));

    let c4t = builtin("C4-twisted").unwrap();
    let a = &c4t.comodule_algebra;
    let r = &c4t.regular;
    let (i1, i2, _, _) = direct_sum_maps(4, 4, q);
    let t = a_linear_maps(r, r, 4)
        .into_iter()
        .find(|t| !homhopf::hom_rep::is_morphism(t, r, r, homhopf::hom_rep::MorphismKind::Comodule).unwrap().pass)
        .expect("a non-colinear A-linear map exists");
    let section = i2.add(&i1.mul(&t)).unwrap();
    let mut doc = doc_of(&c4t);
    doc.sequence = Some(sequence_with_section(a, section));
    out.push(("c4-twisted-maschke.json", to_canonical_string(&doc)));

    let h4t = builtin("H4-twisted").unwrap();
    let mut doc = doc_of(&h4t);
    let d = Matrix::identity(q, 4);
    let section = Matrix::zeros(q, 4, 4).vstack(&d).unwrap();
    doc.sequence = Some(sequence_with_section(&h4t.comodule_algebra, section));
    out.push(("h4-bundle-bad-center.json", to_canonical_string(&doc)));

    // V = span{e} inside W = C₂ as a comodule, f(e) = e into the regular module
    let mut doc = doc_of(&c2);
    let w = HomComodule::regular(c2.hopf.coalgebra());
    let v = HomComodule::new(Matrix::identity(q, 1), Matrix::from_ints(q, &[&[1], &[0]]), 2).unwrap();
    doc.extension = Some(Extension {
        v,
        w,
        f: Matrix::from_ints(q, &[&[1], &[0]]),
        incl: Matrix::from_ints(q, &[&[1], &[0]]),
        result: None,
    });
    out.push(("c2-extend.json", to_canonical_string(&doc)));

    // W has a Jordan-block structure map, so no intertwining retraction onto V exists
    let mut doc = doc_of(&c2);
    let mu_w = Matrix::from_ints(q, &[&[1, 1], &[0, 1]]);
    let mu_w_inv = Matrix::from_ints(q, &[&[1, -1], &[0, 1]]);
    let unit_h = Matrix::from_ints(q, &[&[1], &[0]]);
    let w = HomComodule::new(mu_w, mu_w_inv.kron(&unit_h), 2).unwrap();
    let v = HomComodule::new(Matrix::identity(q, 1), Matrix::from_ints(q, &[&[1], &[0]]), 2).unwrap();
    doc.extension = Some(Extension {
        v,
        w,
        f: Matrix::from_ints(q, &[&[1], &[0]]),
        incl: Matrix::from_ints(q, &[&[1], &[0]]),
        result: None,
    });
    out.push(("c2-extend-jordan.json", to_canonical_string(&doc)));

    let c2doc = doc_of(&c2);
    out.push((
        "bad-index.json",
        text_with(&c2doc, |v| v["mult"][1]["k"] = Value::from(2)),
    ));
    out.push((
        "bad-rational.json",
        text_with(&c2doc, |v| v["unit"][0] = Value::from("2/2")),
    ));
    out.push((
        "bad-field.json",
        text_with(&c2doc, |v| v["field"] = Value::from("GF(4)")),
    ));
    out.push((
        "bad-key.json",
        text_with(&c2doc, |v| v["colour"] = Value::from("blue")),
    ));

    out.push((
        "c4-aut.json",
        "{\n  \"aut\": [\n    [\"1\", \"0\", \"0\", \"0\"],\n    [\"0\", \"0\", \"0\", \"1\"],\n    [\"0\", \"0\", \"1\", \"0\"],\n    [\"0\", \"1\", \"0\", \"0\"]\n  ],\n  \"format\": 1\n}\n".to_string(),
    ));
    out.push((
        "c4-bad-aut.json",
        "{\n  \"aut\": [\n    [\"1\", \"0\", \"0\", \"0\"],\n    [\"0\", \"0\", \"1\", \"0\"],\n    [\"0\", \"1\", \"0\", \"0\"],\n    [\"0\", \"0\", \"0\", \"1\"]\n  ],\n  \"format\": 1\n}\n".to_string(),
    ));
    out
}
