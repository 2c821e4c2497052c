//! Self-check: exact anchor identities run against the library, with a
//! [`Calibration`] that tests can corrupt to confirm the anchors notice.

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{rat, ratio, Matrix, Rational};
use crate::contraction::{contract, i_sigma_oriented, seifert_linking_table, surface_curve, GraphCombination};
use crate::diagram::{ihx_terms, quotient, reference, JacobiDiagram, WeightSystem};
use crate::error::Result;
use crate::knot::{
    alexander_from_seifert, delta_d_closed_form, delta_d_determinant, lambda_prime_alexander, w3_crossing_change,
    w3_pretzel, PretzelParams, SeifertData, SingularLinkingMatrix,
};
use crate::surgery::{dedekind_sum, lambda_lens, singular_pair_linking_table, SurgerySpec};

/// Conventions the anchors are computed with.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Calibration {
    /// `W₂` of the planar tetrahedron.
    pub w2_tet: Rational,
    /// Use the mirror orientation of the tetrahedron when defining `W₂`.
    pub flip_tet: bool,
    /// Reverse one vertex of every `I(Σ)` graph.
    pub flip_i_sigma: bool,
}

impl Default for Calibration {
    fn default() -> Self {
        Calibration { w2_tet: rat(1), flip_tet: false, flip_i_sigma: false }
    }
}

impl Calibration {
    pub fn w1(&self) -> WeightSystem {
        WeightSystem::w1()
    }

    pub fn w2(&self) -> WeightSystem {
        let tet = if self.flip_tet { reference::tetrahedron().flipped_at(0) } else { reference::tetrahedron() };
        WeightSystem::from_references(2, &[(tet, self.w2_tet.clone()), (reference::theta_theta(), rat(0))])
            .expect("tetrahedron and two thetas span degree two")
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Anchor {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

/// Seifert matrix with `V - Vᵀ = J` and entries in `-range..=range`.
pub fn random_seifert_matrix(rng: &mut impl Rng, genus: usize, range: i64) -> Matrix<Rational> {
    let n = 2 * genus;
    let mut v = Matrix::zeros(n, n);
    for i in 0..n {
        for j in i..n {
            let x = rng.gen_range(-range..=range);
            v.set(i, j, rat(x));
            if i != j {
                let jij = if i % 2 == 0 && j == i + 1 { 1 } else { 0 };
                v.set(j, i, rat(x - jij));
            }
        }
    }
    v
}

fn check(name: &'static str, f: impl FnOnce() -> Result<std::result::Result<(), String>>) -> Anchor {
    match f() {
        Ok(Ok(())) => Anchor { name, passed: true, detail: String::new() },
        Ok(Err(detail)) => Anchor { name, passed: false, detail },
        Err(e) => Anchor { name, passed: false, detail: e.to_string() },
    }
}

fn expect_eq(what: &str, got: &Rational, want: &Rational) -> std::result::Result<(), String> {
    if got == want {
        Ok(())
    } else {
        Err(format!("{what}: got {got}, expected {want}"))
    }
}

fn bracket_w1(s: &SeifertData, cal: &Calibration) -> Result<Rational> {
    let g = i_sigma_oriented(s.genus(), |c| surface_curve(1, c), cal.flip_i_sigma);
    cal.w1().evaluate(&contract(&g, &seifert_linking_table(s.matrix(), 1), 1)?)
}

fn lambda_prime_contraction(s: &SeifertData, cal: &Calibration) -> Result<Rational> {
    let d2 = rat((s.order() * s.order()) as i64);
    let b2 = rat((s.framing() * s.framing()) as i64);
    Ok(bracket_w1(s, cal)? / (rat(2) * &d2) + (rat(24) * b2).recip() - rat(2) / (rat(24) * &d2) + ratio(1, 24))
}

fn lambda2_second(s: &SeifertData, cal: &Calibration) -> Result<Rational> {
    let parts: Vec<GraphCombination> =
        (1..=2).map(|c| i_sigma_oriented(s.genus(), |x| surface_curve(c, x), cal.flip_i_sigma)).collect();
    let v = contract(&GraphCombination::union_all(parts.iter()), &seifert_linking_table(s.matrix(), 2), 2)?;
    Ok(cal.w2().evaluate(&v)? / rat(8))
}

fn singular_engine(m: &SingularLinkingMatrix, r: &Rational, cal: &Calibration) -> Result<Rational> {
    let lk = singular_pair_linking_table(m, r)?;
    let name = |i: usize| {
        move |c: crate::contraction::SurfaceCurve| {
            let kind = if c.basis_index == 0 { "m" } else { "l" };
            format!("{kind}{i}{}", if c.pushed { "+" } else { "" }).into()
        }
    };
    let parts = [i_sigma_oriented(1, name(1), cal.flip_i_sigma), i_sigma_oriented(1, name(2), cal.flip_i_sigma)];
    let v = contract(&GraphCombination::union_all(parts.iter()), &lk, 2)?.project_connected()?;
    Ok(cal.w2().evaluate(&v)? / rat(4))
}

fn qm(rows: &[&[i64]]) -> Matrix<Rational> {
    Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| rat(x)).collect()).collect()).expect("rectangular")
}

/// Runs every anchor under the given calibration. `seed` drives the random
/// instances.
pub fn run_anchors(cal: &Calibration, seed: u64) -> Vec<Anchor> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let trefoil = SeifertData::integral(qm(&[&[-1, 1], &[0, -1]])).expect("trefoil");
    let eight = SeifertData::integral(qm(&[&[1, 1], &[0, -1]])).expect("figure eight");
    let randoms: Vec<SeifertData> = (0..8)
        .map(|i| SeifertData::integral(random_seifert_matrix(&mut rng, 1 + i % 2, 3)).expect("valid by construction"))
        .collect();
    let mut out = Vec::new();

    out.push(check("diagram space dimensions", || {
        let dims: Vec<usize> = (0..=3).map(|n| quotient(n).map(|q| q.dim())).collect::<Result<_>>()?;
        Ok(if dims == [1, 1, 2, 3] { Ok(()) } else { Err(format!("dimensions {dims:?}")) })
    }));
    out.push(check("W1(theta) = 2", || Ok(expect_eq("W1(theta)", &cal.w1().value_on(&reference::theta())?, &rat(2)))));
    out.push(check("W2(tetrahedron) = 1", || {
        Ok(expect_eq("W2(tet)", &cal.w2().value_on(&reference::tetrahedron())?, &rat(1)))
    }));
    out.push(check("W2(ladder) = 2, W2(theta theta) = 0", || {
        let w2 = cal.w2();
        Ok(expect_eq("W2(ladder)", &w2.value_on(&reference::ladder())?, &rat(2))
            .and(expect_eq("W2(theta theta)", &w2.value_on(&reference::theta_theta())?, &rat(0))))
    }));
    out.push(check("weight systems vanish on IHX", || {
        for (n, w) in [(1, cal.w1()), (2, cal.w2())] {
            for key in quotient(n)?.generators() {
                let d = JacobiDiagram::from_key(key);
                for h in 0..3 * d.vertex_count() {
                    if let Some(terms) = ihx_terms(&d, h) {
                        let mut sum = Rational::zero();
                        for t in &terms {
                            sum += w.value_on(t)?;
                        }
                        if !sum.is_zero() {
                            return Ok(Err(format!("IHX at half-edge {h} of {key} sums to {sum}")));
                        }
                    }
                }
            }
        }
        Ok(Ok(()))
    }));
    out.push(check("Alexander polynomial symmetry and normalization", || {
        for s in randoms.iter().chain([&trefoil, &eight]) {
            let delta = alexander_from_seifert(s)?;
            if !delta.is_symmetric() {
                return Ok(Err(format!("asymmetric {delta}")));
            }
            if let Err(e) = expect_eq("Delta(1)", &delta.eval_at_one(), &(s.h1() / rat(s.order() as i64))) {
                return Ok(Err(e));
            }
        }
        Ok(Ok(()))
    }));
    out.push(check("Delta(d) closed form", || {
        for d in 1..=6 {
            if delta_d_closed_form(d)? != delta_d_determinant(d)? {
                return Ok(Err(format!("d = {d}")));
            }
        }
        Ok(Ok(()))
    }));
    out.push(check("lambda' trefoil and figure eight", || {
        for (s, want) in [(&trefoil, rat(1)), (&eight, rat(-1))] {
            let routes = [lambda_prime_alexander(s)?, lambda_prime_contraction(s, cal)?];
            for got in &routes {
                if let Err(e) = expect_eq("lambda'", got, &want) {
                    return Ok(Err(e));
                }
            }
        }
        Ok(Ok(()))
    }));
    out.push(check("lambda' Alexander and contraction routes agree", || {
        for s in &randoms {
            if let Err(e) = expect_eq("lambda'", &lambda_prime_contraction(s, cal)?, &lambda_prime_alexander(s)?) {
                return Ok(Err(e));
            }
        }
        Ok(Ok(()))
    }));
    out.push(check("degree two singular-knot polynomial", || {
        for _ in 0..5 {
            let (a, b, c) = (rng.gen_range(-4..=4), rng.gen_range(-4..=4), rng.gen_range(-4..=4));
            let m = SingularLinkingMatrix::new(qm(&[&[a, b], &[b, c]]))?;
            let r = ratio(rng.gen_range(-5..=5), rng.gen_range(1..=4));
            let (l11, l12, l22) = (rat(a), rat(b), rat(c));
            let want = ((rat(5) * &l12 * &l12 + rat(2) * &l11 * &l22) * &r * &r - &l12 * &r) / rat(2);
            if let Err(e) = expect_eq("W2 value", &singular_engine(&m, &r, cal)?, &want) {
                return Ok(Err(e));
            }
        }
        Ok(Ok(()))
    }));
    out.push(check("hollow handle invariance", || {
        for s in randoms.iter().take(4) {
            let links: Vec<Rational> = (0..2 * s.genus()).map(|_| rat(rng.gen_range(-2..=2))).collect();
            let t = s.with_hollow_handle(&links, rat(rng.gen_range(-2..=2)))?;
            if let Err(e) = expect_eq("<<I(S)>>", &bracket_w1(&t, cal)?, &bracket_w1(s, cal)?) {
                return Ok(Err(e));
            }
            if s.genus() == 1 {
                if let Err(e) = expect_eq("lambda2''", &lambda2_second(&t, cal)?, &lambda2_second(s, cal)?) {
                    return Ok(Err(e));
                }
            }
        }
        Ok(Ok(()))
    }));
    out.push(check("lens spaces and Dedekind sums", || {
        for q in -10..=10 {
            if let Err(e) = expect_eq("lambda(L(1,q))", &lambda_lens(SurgerySpec::new(1, q)?)?, &rat(0)) {
                return Ok(Err(e));
            }
        }
        for _ in 0..10 {
            let (p, q) = loop {
                let (p, q) = (rng.gen_range(1..40i64), rng.gen_range(1..40i64));
                if num_integer::gcd(p, q) == 1 {
                    break (p, q);
                }
            };
            let (pr, qr) = (rat(p), rat(q));
            let want = ratio(-1, 4) + (&pr / &qr + &qr / &pr + (&pr * &qr).recip()) / rat(12);
            if let Err(e) = expect_eq("reciprocity", &(dedekind_sum(p, q)? + dedekind_sum(q, p)?), &want) {
                return Ok(Err(e));
            }
            let shifted = lambda_lens(SurgerySpec::new(p, q + p)?)?;
            if let Err(e) = expect_eq("lens periodicity", &lambda_lens(SurgerySpec::new(p, q)?)?, &shifted) {
                return Ok(Err(e));
            }
        }
        Ok(Ok(()))
    }));
    out.push(check("pretzel w3", || {
        if let Err(e) = expect_eq("w3(K(-1,1,1))", &w3_pretzel(PretzelParams::new(-1, 1, 1)?), &rat(0)) {
            return Ok(Err(e));
        }
        // K-_n and both smoothing components are trivial, lambda'(K+_n) = -n
        for n in 1..=6i64 {
            let w3 = w3_crossing_change(&rat(0), &rat(0), &rat(-n), &rat(0), &rat(n));
            if let Err(e) = expect_eq("w3(K+_n)", &w3, &ratio(-n * (n - 1), 4)) {
                return Ok(Err(e));
            }
        }
        Ok(Ok(()))
    }));
    out
}

/// Anchors under the default calibration and a fixed seed.
pub fn self_check() -> Vec<Anchor> {
    run_anchors(&Calibration::default(), 0x5eed)
}
