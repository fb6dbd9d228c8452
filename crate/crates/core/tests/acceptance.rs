//! Acceptance suite: one PASS/FAIL line per criterion.
//!
//! Runs without the libtest harness. Every identity is checked by exact
//! equality; the only pinned quantities are the sample sizes, the seed and
//! the time budget below. Criteria listed in `KNOWN_UNATTAINABLE` are
//! implemented faithfully and expected to report FAIL; the process exits
//! nonzero if any other criterion fails or one of those starts passing.

mod common;

use std::collections::BTreeSet;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::Command;
use std::sync::Arc;
use std::time::{Duration, Instant};

use common::*;
use homhopf::adjunction::{check_adjunction_triangles, induce};
use homhopf::catalog::{builtin, builtin_with_field, standard_catalog, Bundle};
use homhopf::format::{parse_document, to_canonical_string, FieldOverride};
use homhopf::hom_core::{check_hom_coalgebra, check_hom_hopf, Convention, HomHopfAlgebra};
use homhopf::hom_rep::{
    check_comodule_algebra, check_hom_comodule, check_hom_module, check_relative_hopf_module, direct_sum,
    is_morphism, regular_relative_module, ComoduleAlgebra, HomModule, MorphismKind, RelativeHopfModule,
};
use homhopf::integrals::{
    check_lambda, check_trace_left_c_linear, check_trace_map, lambda_map, solve_total_integral, trace_map,
    TotalIntegral,
};
use homhopf::linalg::invert_matrix;
use homhopf::maschke::{check_short_exact, doubled_regular_sequence, maschke_split};
use homhopf::separability::{
    check_centrality, check_nu, extract_normalized_integral, extraction_object, integral_from_normalized,
    normalized_from_integral, nu_map, solve_normalized_integral, NormalizedIntegral,
};
use homhopf::{AxiomReport, Error, Field, Matrix};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const SEED: u64 = 0x5eed_0f_4a11;
const CORRUPTIONS_PER_BUNDLE: usize = 20;
const RANDOM_SECTIONS_PER_BUNDLE: usize = 50;
const TIME_BUDGET: Duration = Duration::from_secs(60);
const KNOWN_UNATTAINABLE: &[u32] = &[2, 8];

type Check = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn lib<T>(r: homhopf::Result<T>, ctx: &str) -> Result<T, String> {
    r.map_err(|e| format!("{ctx}: {e}"))
}

fn pass(r: &AxiomReport, ctx: &str) -> Result<(), String> {
    ensure(r.pass, || format!("{ctx}: {}", r.summary()))
}

fn identity_integral(b: &Bundle) -> Result<TotalIntegral, String> {
    let d = b.hopf.dim();
    lib(TotalIntegral::certify(Matrix::identity(b.hopf.field(), d), &b.comodule_algebra), &b.name)
}

/// Regular, induced `G(A)` and doubled `A ⊕ A`.
fn test_modules(a: &ComoduleAlgebra) -> Result<Vec<(&'static str, RelativeHopfModule)>, String> {
    let r = regular_relative_module(a);
    let g = lib(induce(&HomModule::regular(a.algebra()), a), "G(A)")?.relative;
    let rr = lib(direct_sum(&r, &r), "A+A")?;
    Ok(vec![("A", r), ("G(A)", g), ("A+A", rr)])
}

// ---------------------------------------------------------------------------

fn battery(h: &HomHopfAlgebra, a: &ComoduleAlgebra, m: &RelativeHopfModule) -> homhopf::Result<AxiomReport> {
    let mut r = check_hom_hopf(h, Convention::Categorical)?;
    r.merge(check_comodule_algebra(a)?);
    r.merge(check_hom_module(m.module(), a.algebra())?);
    r.merge(check_hom_comodule(m.comodule(), h.coalgebra())?);
    r.merge(check_relative_hopf_module(m, a)?);
    Ok(r)
}

/// The library's verdicts on the two defining identities must agree with the
/// direct-sum oracle.
fn oracle_agrees(h: &HomHopfAlgebra, r: &AxiomReport) -> Result<(), String> {
    if invert_matrix(h.alpha()).is_err() {
        return Ok(());
    }
    let o = HopfOracle::new(h);
    ensure(o.hom_associative() != r.violates("hom-associativity"), || {
        "oracle disagrees on hom-associativity".into()
    })?;
    ensure(o.hom_coassociative(false) != r.violates("hom-coassociativity"), || {
        "oracle disagrees on hom-coassociativity".into()
    })
}

fn corrupt<R: Rng>(rng: &mut R, m: &Matrix) -> Matrix {
    let mut out = m.clone();
    let (r, c) = (rng.random_range(0..m.rows()), rng.random_range(0..m.cols()));
    let v = m.get(r, c) + &random_nonzero(rng, m.field());
    out.set(r, c, v);
    out
}

fn corrupt_vec<R: Rng>(rng: &mut R, v: &[homhopf::Scalar]) -> Vec<homhopf::Scalar> {
    let f = v[0].field();
    let mut out = v.to_vec();
    let i = rng.random_range(0..v.len());
    out[i] = &v[i] + &random_nonzero(rng, f);
    out
}

fn criterion_1() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let names = ["C2", "C4", "H4", "C4-twisted", "H4-twisted", "H4-scaled"];
    let mut caught = 0;
    for name in names {
        let b = lib(builtin(name), name)?;
        let a = &b.comodule_algebra;
        let r = lib(battery(&b.hopf, a, &b.regular), name)?;
        pass(&r, name)?;
        oracle_agrees(&b.hopf, &r)?;
        for k in 0..CORRUPTIONS_PER_BUNDLE {
            let h = &b.hopf;
            let target = rng.random_range(0..8);
            let (hh, aa, mm, what) = if target < 6 {
                let hh = match target {
                    0 => h.replace(Some(corrupt(&mut rng, h.mult())), None, None, None),
                    1 => h.replace(None, Some(corrupt(&mut rng, h.comult())), None, None),
                    2 => h.replace(None, None, Some(corrupt(&mut rng, h.antipode())), None),
                    3 => h.replace(None, None, None, Some(corrupt(&mut rng, h.alpha()))),
                    4 => h.with_unit_counit(corrupt_vec(&mut rng, h.unit()), h.counit().to_vec()),
                    _ => h.with_unit_counit(h.unit().to_vec(), corrupt_vec(&mut rng, h.counit())),
                };
                let hh = Arc::new(lib(hh, "corruption")?);
                let aa = ComoduleAlgebra::regular(hh.clone());
                let mm = regular_relative_module(&aa);
                let what = ["mult", "comult", "antipode", "alpha", "unit", "counit"][target];
                (hh, aa, mm, what)
            } else if target == 6 {
                let aa = lib(a.with_coaction(corrupt(&mut rng, a.coaction())), "corruption")?;
                let mm = regular_relative_module(&aa);
                (h.clone(), aa, mm, "coaction")
            } else {
                let mm = lib(b.regular.with_action(corrupt(&mut rng, b.regular.action())), "corruption")?;
                (h.clone(), a.clone(), mm, "action")
            };
            let r = lib(battery(&hh, &aa, &mm), &format!("{name} corruption {k}"))?;
            ensure(!r.pass && !r.failed_axioms().is_empty(), || {
                format!("{name}: corruption {k} of {what} went unnoticed")
            })?;
            oracle_agrees(&hh, &r).map_err(|e| format!("{name} corruption {k} of {what}: {e}"))?;
            caught += 1;
        }
    }
    Ok(format!("{} bundles certified; {caught} corruptions each named a violated axiom", names.len()))
}

fn criterion_2() -> Check {
    let verdict = |name: &str, conv: Convention| -> Result<(bool, bool), String> {
        let b = lib(builtin(name), name)?;
        let lib_pass = !lib(check_hom_coalgebra(b.hopf.coalgebra(), conv), name)?.violates("hom-coassociativity");
        let oracle = HopfOracle::new(&b.hopf).hom_coassociative(conv == Convention::Printed);
        ensure(lib_pass == oracle, || format!("{name}: library and oracle disagree under {conv:?}"))?;
        Ok((lib_pass, oracle))
    };
    let (c4_cat, _) = verdict("C4", Convention::Categorical)?;
    let (c4_pr, _) = verdict("C4", Convention::Printed)?;
    let (t_cat, _) = verdict("C4-twisted", Convention::Categorical)?;
    let (t_pr, _) = verdict("C4-twisted", Convention::Printed)?;
    let (s_cat, _) = verdict("H4-scaled", Convention::Categorical)?;
    let (s_pr, _) = verdict("H4-scaled", Convention::Printed)?;
    ensure(c4_cat && c4_pr, || "C4 must pass under both conventions".into())?;
    ensure(t_cat, || "C4-twisted must pass under the categorical convention".into())?;
    let extra = format!("H4-scaled categorical={s_cat} printed={s_pr}");
    ensure(!t_pr, || {
        format!("C4-twisted also passes under the printed convention (its twist is an involution); {extra}")
    })?;
    Ok(format!("C4 passes both; C4-twisted discriminates; {extra}"))
}

fn naive_triangles(m: &RelativeHopfModule, n: &HomModule, a: &ComoduleAlgebra) -> Result<(), String> {
    let f = a.field();
    let o = HopfOracle::new(a.hopf());
    let dh = o.d;
    // δ_M(ρ(m)) = μ(m₀) ε(m₁)
    for k in 0..m.dim() {
        let mut out = zeros(f, m.dim());
        for (i, j, c) in terms(m.coaction(), dh, k) {
            axpy(&mut out, &(&c * &o.eps(&o.e(j))), &apply(m.mu(), &unit_vec(f, m.dim(), i)));
        }
        ensure(out == unit_vec(f, m.dim(), k), || "forgetful triangle fails in the oracle".into())?;
    }
    // (δ_N ⊗ id)(ρ_G(n ⊗ h)) with ρ_G(n ⊗ h) = (μ⁻¹n ⊗ h₁) ⊗ α(h₂)
    let mu_inv = invert_matrix(n.mu()).map_err(|e| e.to_string())?;
    for x in 0..n.dim() {
        for h in 0..dh {
            let mut out = zeros(f, n.dim() * dh);
            let nn = apply(n.mu(), &apply(&mu_inv, &unit_vec(f, n.dim(), x)));
            for (i, j, c) in o.delta_terms(h) {
                let coeff = &c * &o.eps(&o.e(i));
                axpy(&mut out, &coeff, &outer(&nn, &o.alpha(&o.e(j))));
            }
            ensure(out == outer(&unit_vec(f, n.dim(), x), &o.e(h)), || {
                "induced triangle fails in the oracle".into()
            })?;
        }
    }
    Ok(())
}

fn criterion_3() -> Check {
    let mut pairs = 0;
    for b in standard_catalog() {
        let a = &b.comodule_algebra;
        let ms = test_modules(a)?;
        let ns = vec![HomModule::regular(a.algebra()), ms[1].1.module().clone()];
        for (mname, m) in &ms {
            for n in &ns {
                let r = lib(check_adjunction_triangles(m, n, a), &b.name)?;
                pass(&r, &format!("{} M={mname}", b.name))?;
                naive_triangles(m, n, a).map_err(|e| format!("{} M={mname}: {e}", b.name))?;
                pairs += 1;
            }
        }
    }
    Ok(format!("{pairs} (M, N) pairs satisfy both triangle identities"))
}

fn criterion_4() -> Check {
    let mut checked = 0;
    let mut linear = 0;
    for b in standard_catalog() {
        let a = &b.comodule_algebra;
        let phi = identity_integral(&b)?;
        let central = lib(check_centrality(phi.phi(), a), &b.name)?.pass;
        for (mname, m) in test_modules(a)? {
            let ctx = format!("{} M={mname}", b.name);
            let lam = lib(lambda_map(&m, &phi, a), &ctx)?;
            pass(&lib(check_lambda(&m, &lam, a, central), &ctx)?, &ctx)?;
            let o = ModOracle::new(&m, a);
            ensure(o.lambda(phi.phi()) == lam, || format!("{ctx}: oracle lambda differs"))?;
            ensure(o.after_coaction(&lam).is_identity(), || format!("{ctx}: oracle retraction fails"))?;
            checked += 1;
            linear += usize::from(central);
        }
    }
    Ok(format!("{checked} modules: retraction and colinearity exact; A-linearity exact on {linear} central ones"))
}

fn criterion_5() -> Check {
    let mut checked = 0;
    for b in standard_catalog() {
        let a = &b.comodule_algebra;
        let phi = identity_integral(&b)?;
        pass(&lib(check_trace_left_c_linear(&phi, a), &b.name)?, &b.name)?;
        for (mname, m) in test_modules(a)? {
            let ctx = format!("{} M={mname}", b.name);
            pass(&lib(check_trace_map(&m, &phi, a), &ctx)?, &ctx)?;
            let tau = lib(trace_map(&m, &phi, a), &ctx)?;
            let o = ModOracle::new(&m, a);
            ensure(o.trace(phi.phi()) == tau, || format!("{ctx}: oracle trace differs"))?;
            for c in 0..m.dim() {
                ensure(o.is_coinvariant(&tau.column(c)), || format!("{ctx}: image leaves M0 in the oracle"))?;
            }
            checked += 1;
        }
    }
    Ok(format!("trace properties hold on {checked} modules"))
}

fn key(m: &Matrix) -> String {
    m.to_vec().iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
}

fn criterion_6() -> Check {
    let mut summary = Vec::new();
    for p in [2u64, 3] {
        let f = Field::Prime(p);
        for name in ["C2", "C2-trivial"] {
            let b = lib(builtin_with_field(name, Some(f)), name)?;
            let a = &b.comodule_algebra;
            let (da, dh) = (a.dim(), a.hopf().dim());
            let o = AlgOracle::new(a);

            let brute: BTreeSet<String> = all_matrices(f, da, dh)
                .iter()
                .filter(|m| o.is_total_integral(m))
                .map(key)
                .collect();
            let solved: BTreeSet<String> = lib(solve_total_integral(a), name)?
                .enumerate(f)
                .into_iter()
                .map(|v| key(&Matrix::from_vec(f, da, dh, v).unwrap()))
                .collect();
            ensure(brute == solved, || {
                format!("{name} over {f}: {} total integrals by enumeration, {} by solver", brute.len(), solved.len())
            })?;

            let brute_t: BTreeSet<String> = all_matrices(f, da, dh * dh)
                .iter()
                .filter(|m| o.is_normalized_integral(m))
                .map(key)
                .collect();
            let solved_t: BTreeSet<String> = lib(solve_normalized_integral(a), name)?
                .enumerate(f)
                .into_iter()
                .map(|v| key(&Matrix::from_vec(f, da, dh * dh, v).unwrap()))
                .collect();
            ensure(brute_t == solved_t, || {
                format!(
                    "{name} over {f}: {} normalized integrals by enumeration, {} by solver",
                    brute_t.len(),
                    solved_t.len()
                )
            })?;
            summary.push(format!("{name}/{f}: {}+{}", brute.len(), brute_t.len()));
        }
    }
    Ok(format!("solver sets equal enumeration ({})", summary.join(", ")))
}

fn solver_thetas(a: &ComoduleAlgebra) -> Result<Vec<Matrix>, String> {
    let f = a.field();
    let (da, dh) = (a.dim(), a.hopf().dim());
    let set = lib(solve_normalized_integral(a), "solver")?;
    let Some(p) = set.particular.clone() else {
        return Err("no normalized integral found".into());
    };
    let mut out = vec![Matrix::from_vec(f, da, dh * dh, p).unwrap()];
    let k = set.nullspace_basis.len();
    for i in 0..k {
        let coeffs: Vec<_> = (0..k).map(|j| if i == j { f.one() } else { f.zero() }).collect();
        let v = set.element(&coeffs).unwrap();
        out.push(Matrix::from_vec(f, da, dh * dh, v).unwrap());
    }
    Ok(out)
}

fn criterion_7() -> Check {
    let mut certified = 0;
    for name in ["C2", "C4-twisted"] {
        let b = lib(builtin(name), name)?;
        let a = &b.comodule_algebra;
        let o = AlgOracle::new(a);
        for theta in solver_thetas(a)? {
            let t = lib(NormalizedIntegral::certify(theta.clone(), a), name)?;
            ensure(o.is_normalized_integral(&theta), || format!("{name}: oracle rejects a solver theta"))?;
            for (mname, m) in test_modules(a)? {
                let ctx = format!("{name} M={mname}");
                let nu = lib(nu_map(&m, &t, a), &ctx)?;
                pass(&lib(check_nu(&m, &nu, a), &ctx)?, &ctx)?;
                ensure(ModOracle::new(&m, a).nu(&theta) == nu, || format!("{ctx}: oracle nu differs"))?;
            }
            let obj = lib(extraction_object(a), name)?;
            let nu = lib(nu_map(&obj, &t, a), name)?;
            let back = lib(extract_normalized_integral(&nu, a), name)?;
            ensure(back.is_certified(), || format!("{name}: extracted theta fails: {}", back.report().summary()))?;
            ensure(o.is_normalized_integral(back.theta()), || format!("{name}: oracle rejects extracted theta"))?;
            certified += 1;
        }
    }
    Ok(format!("{certified} solver integrals: nu certified on every module, extraction certified"))
}

fn criterion_8() -> Check {
    let mut notes = Vec::new();
    let mut failures = Vec::new();
    for name in ["C2", "C4-twisted"] {
        let b = lib(builtin(name), name)?;
        let a = &b.comodule_algebra;
        let phi = identity_integral(&b)?;
        let theta = lib(normalized_from_integral(&phi, a), name)?;
        let back = lib(integral_from_normalized(&theta, a), name)?;
        let expected = a.beta().mul(phi.phi());
        if back.phi() == &expected {
            notes.push(format!("{name} round trip = beta.phi"));
        } else if back.phi() == phi.phi() {
            failures.push(format!("{name} round trip returns phi, and beta.phi is not a total integral there"));
        } else {
            failures.push(format!("{name} round trip returns neither beta.phi nor phi"));
        }
    }
    let b = lib(builtin("H4-twisted"), "H4-twisted")?;
    let phi = identity_integral(&b)?;
    match normalized_from_integral(&phi, &b.comodule_algebra) {
        Err(Error::HypothesesNotMet { condition, witness }) if witness == "(x, g)" => {
            notes.push(format!("H4-twisted refused: {condition} {witness}"))
        }
        other => failures.push(format!("H4-twisted: expected a centrality refusal with witness (x, g), got {other:?}")),
    }
    if failures.is_empty() {
        Ok(notes.join("; "))
    } else {
        Err(failures.join("; "))
    }
}

/// `s_φ(p) = Σ λ_N(s(p₀) ⊗ p₁)` with `λ_N` from the oracle.
fn naive_average(s: &Matrix, n: &RelativeHopfModule, p: &RelativeHopfModule, a: &ComoduleAlgebra, phi: &Matrix) -> Matrix {
    let on = ModOracle::new(n, a);
    let lam = on.lambda(phi);
    let f = a.field();
    let dh = a.hopf().dim();
    let cols: Vec<V> = (0..p.dim())
        .map(|k| {
            let mut out = zeros(f, n.dim());
            for (i, j, c) in terms(p.coaction(), dh, k) {
                let v = apply(&lam, &outer(&s.column(i), &unit_vec(f, dh, j)));
                axpy(&mut out, &c, &v);
            }
            out
        })
        .collect();
    matrix_from_columns(f, n.dim(), &cols)
}

fn criterion_9() -> Check {
    let q = Field::Rationals;
    let c2 = lib(builtin("C2"), "C2")?;
    let a = &c2.comodule_algebra;
    let phi = identity_integral(&c2)?;
    let seq = lib(doubled_regular_sequence(a, Some(closed_form_section(q))), "C2")?;
    let sp = lib(maschke_split(&seq, &phi, a), "C2 closed form")?;
    let expected = Matrix::from_ints(q, &[&[1, 0], &[0, 1], &[1, 0], &[0, 1]]);
    ensure(sp.section == expected, || format!("closed form averages to {:?}", sp.section.to_rows()))?;
    ensure(seq.g.mul(&sp.section).is_identity(), || "g.s_phi is not the identity".into())?;
    pass(&sp.report, "closed form")?;
    pass(&lib(is_morphism(&sp.section, &seq.p, &seq.n, MorphismKind::Relative), "C2")?, "closed form")?;

    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 9);
    let mut done = 0;
    for name in ["C2", "C4-twisted"] {
        let b = lib(builtin(name), name)?;
        let a = &b.comodule_algebra;
        let phi = identity_integral(&b)?;
        let r = &b.regular;
        let da = a.dim();
        let basis: Vec<V> = a_linear_maps(r, r, da).iter().map(Matrix::to_vec).collect();
        let (i1, i2, _, _) = homhopf::hom_rep::direct_sum_maps(da, da, a.field());
        let mut drawn = 0;
        while drawn < RANDOM_SECTIONS_PER_BUNDLE {
            let t = Matrix::from_vec(a.field(), da, da, random_combination(&mut rng, a.field(), &basis, da * da)).unwrap();
            if lib(is_morphism(&t, r, r, MorphismKind::Comodule), name)?.pass {
                continue;
            }
            drawn += 1;
            let section = i2.add(&i1.mul(&t)).unwrap();
            let seq = lib(doubled_regular_sequence(a, Some(section.clone())), name)?;
            pass(&lib(check_short_exact(&seq, a), name)?, &format!("{name} random sequence"))?;
            ensure(!lib(is_morphism(&section, &seq.p, &seq.n, MorphismKind::Comodule), name)?.pass, || {
                format!("{name}: drawn section is colinear")
            })?;
            let sp = lib(maschke_split(&seq, &phi, a), name)?;
            pass(&sp.report, &format!("{name} random section"))?;
            ensure(sp.section == naive_average(&section, &seq.n, &seq.p, a, phi.phi()), || {
                format!("{name}: oracle average differs")
            })?;
            ensure(seq.g.mul(&sp.section).is_identity(), || format!("{name}: g.s_phi != id"))?;
            done += 1;
        }
    }
    Ok(format!("closed form s_phi(p) = (p, p) certified; {done} random non-colinear sections certified"))
}

// ---------------------------------------------------------------------------
// CLI
// ---------------------------------------------------------------------------

struct Run {
    code: i32,
    stdout: Vec<u8>,
}

fn cli(args: &[&str]) -> Result<Run, String> {
    let out = Command::new(env!("CARGO_BIN_EXE_homhopf"))
        .args(args)
        .current_dir(fixture_dir())
        .output()
        .map_err(|e| format!("cannot run the binary: {e}"))?;
    Ok(Run {
        code: out.status.code().unwrap_or(-1),
        stdout: out.stdout,
    })
}

fn expect_code(args: &[&str], code: i32) -> Result<Run, String> {
    let r = cli(args)?;
    ensure(r.code == code, || format!("`homhopf {}` exited {} (expected {code})", args.join(" "), r.code))?;
    Ok(r)
}

fn scratch() -> PathBuf {
    let d = std::env::temp_dir().join(format!("homhopf-acceptance-{}", std::process::id()));
    fs::create_dir_all(&d).unwrap();
    d
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn criterion_10() -> Check {
    let dir = scratch();
    let out = |n: &str| dir.join(n);

    // canonical serialization is byte-stable
    expect_code(&["builtin", "C4-twisted", "--output", s(&out("a.json"))], 0)?;
    expect_code(&["builtin", "C4-twisted", "--output", s(&out("b.json"))], 0)?;
    let a = fs::read(out("a.json")).unwrap();
    ensure(a == fs::read(out("b.json")).unwrap(), || "builtin output is not byte-stable".into())?;
    ensure(a == fs::read(fixture_dir().join("c4-twisted.json")).unwrap(), || {
        "builtin output differs from the committed fixture".into()
    })?;
    let doc = lib(parse_document(&a, FieldOverride::None), "reparse")?;
    ensure(to_canonical_string(&doc).as_bytes() == a.as_slice(), || "reserialization changes bytes".into())?;
    let r1 = expect_code(&["--json", "check", "c4-twisted-maschke.json"], 0)?;
    let r2 = expect_code(&["--json", "check", "c4-twisted-maschke.json"], 0)?;
    ensure(r1.stdout == r2.stdout, || "check report is not byte-stable".into())?;

    // every emitted certificate re-certifies
    let emitters: Vec<(Vec<&str>, &str)> = vec![
        (vec!["integral", "c4-twisted.json"], "integral.json"),
        (vec!["normalized-integral", "c2.json"], "theta-c2.json"),
        (vec!["normalized-integral", "c4-twisted.json"], "theta-c4t.json"),
        (vec!["maschke", "c2-maschke.json"], "split-c2.json"),
        (vec!["maschke", "c4-twisted-maschke.json"], "split-c4t.json"),
        (vec!["extend", "c2-extend.json"], "extend.json"),
        (vec!["twist", "c4.json", "--aut", "c4-aut.json"], "twist.json"),
        (vec!["builtin", "H4-scaled"], "h4s.json"),
        (vec!["--field", "GF(3)", "builtin", "C2"], "c2-gf3.json"),
    ];
    for (args, file) in &emitters {
        let path = out(file);
        let mut full = args.clone();
        full.extend(["--output", s(&path)]);
        expect_code(&full, 0)?;
        let first = fs::read(&path).unwrap();
        expect_code(&full, 0)?;
        ensure(first == fs::read(&path).unwrap(), || format!("{file} is not byte-stable"))?;
        expect_code(&["check", s(&path)], 0)?;
    }
    let twisted = lib(parse_document(&fs::read(out("twist.json")).unwrap(), FieldOverride::None), "twist")?;
    ensure(twisted.hopf == doc.hopf, || "twist of C4 by g -> g^3 differs from C4-twisted".into())?;
    ensure(
        fs::read(out("c2-gf3.json")).unwrap() == fs::read(fixture_dir().join("c2-gf3.json")).unwrap(),
        || "field override output differs from the committed fixture".into(),
    )?;

    // exit-code taxonomy
    let matrix: Vec<(Vec<&str>, i32)> = vec![
        (vec!["check", "c2.json"], 0),
        (vec!["check", "h4-twisted.json"], 0),
        (vec!["builtin", "--list"], 0),
        (vec!["separability", "c4-twisted.json"], 0),
        (vec!["--field", "GF(3)", "check", "c2.json"], 0),
        (vec!["check", "h4-corrupt.json"], 1),
        (vec!["extend", "c2-extend-jordan.json"], 1),
        (vec!["twist", "c4.json", "--aut", "c4-bad-aut.json"], 1),
        (vec!["check", "bad-index.json"], 2),
        (vec!["check", "bad-rational.json"], 2),
        (vec!["check", "bad-field.json"], 2),
        (vec!["check", "bad-key.json"], 2),
        (vec!["check", "c4-aut.json"], 2),
        (vec!["check", "no-such-file.json"], 2),
        (vec!["builtin", "C5"], 2),
        (vec!["frobnicate"], 2),
        (vec!["maschke", "h4-bundle-bad-center.json"], 3),
    ];
    for (args, code) in &matrix {
        expect_code(args, *code)?;
    }
    let _ = fs::remove_dir_all(&dir);
    Ok(format!(
        "byte-stable; {} certificates re-certified; {} exit-code cases",
        emitters.len(),
        matrix.len()
    ))
}

// ---------------------------------------------------------------------------

fn main() {
    let criteria: [(u32, &str, fn() -> Check); 10] = [
        (1, "axiom soundness", criterion_1),
        (2, "convention discriminator", criterion_2),
        (3, "adjunction triangles", criterion_3),
        (4, "lambda retraction", criterion_4),
        (5, "trace map", criterion_5),
        (6, "solver vs enumeration", criterion_6),
        (7, "separability certificate", criterion_7),
        (8, "conversion round trip", criterion_8),
        (9, "maschke averaging", criterion_9),
        (10, "cli determinism", criterion_10),
    ];
    let mut unexpected = Vec::new();
    for (n, name, run) in criteria {
        let start = Instant::now();
        let mut result = run();
        let elapsed = start.elapsed();
        if elapsed > TIME_BUDGET {
            result = Err(format!("took {elapsed:.1?}, budget {TIME_BUDGET:?}"));
        }
        let known = KNOWN_UNATTAINABLE.contains(&n);
        match &result {
            Ok(detail) => println!("criterion {n} ({name}): PASS [{elapsed:.2?}] {detail}"),
            Err(detail) => {
                let tag = if known { " (known unattainable)" } else { "" };
                println!("criterion {n} ({name}): FAIL{tag} [{elapsed:.2?}] {detail}");
            }
        }
        if result.is_ok() == known {
            unexpected.push(n);
        }
    }
    if !unexpected.is_empty() {
        eprintln!("unexpected outcome for criteria {unexpected:?}");
        std::process::exit(1);
    }
}
