//! Acceptance suite: one line per criterion, nonzero exit if any fails.

mod common;

use common::{brute_force_contract, qm};
use finik::algebra::{rat, ratio, LaurentPoly};
use finik::anchors::random_seifert_matrix;
use finik::contraction::{
    contract, i_sigma, seifert_linking_table, surface_curve, tripods, CurveId, GraphCombination, LinkingTable,
    SurfaceCurve, Trilinear,
};
use finik::diagram::{ihx_terms, quotient, reference};
use finik::knot::{
    alexander_from_seifert, delta_d_closed_form, delta_d_determinant, lambda2_second, lambda_prime,
    lambda_prime_alexander, lambda_prime_contraction, lambda_prime_pair, lambda_prime_pretzel, w3_crossing_change,
    w3_pretzel, PretzelParams, SeifertData, SingularLinkingMatrix,
};
use finik::surgery::{
    bracket_as, bracket_as_mu0, bracket_boundary, dedekind_sum, lambda_lens, lambda_surgery,
    singular_pair_linking_table, y2_singular_engine, IntersectionLinkTable, MilnorTensor, SurgerySpec,
};
use finik::{DiagramVector, JacobiDiagram, Rational, WeightSystem};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn eq(what: &str, got: &Rational, want: &Rational) -> Result<(), String> {
    ensure(got == want, || format!("{what}: got {got}, expected {want}"))
}

fn w1(v: &DiagramVector) -> Rational {
    WeightSystem::w1().evaluate(v).unwrap()
}

fn coprime(rng: &mut impl Rng, range: i64) -> (i64, i64) {
    loop {
        let (p, q) = (rng.gen_range(-range..=range), rng.gen_range(1..=range));
        if p != 0 && num_integer::gcd(p, q) == 1 {
            return (p, q);
        }
    }
}

/// The 50 random knots shared by the Alexander and lambda' criteria.
fn random_knots() -> Vec<SeifertData> {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    (0..50)
        .map(|i| {
            let g = 1 + i % 2;
            let d = rng.gen_range(1..=4u64);
            let b = if rng.gen_bool(0.5) { d as i64 } else { 1 };
            let h1 = ratio(rng.gen_range(1..=12), 1);
            SeifertData::new(g, random_seifert_matrix(&mut rng, g, 3), d, b, h1).unwrap()
        })
        .collect()
}

fn diagram_algebra() -> Outcome {
    let dims: Vec<usize> = (1..=2).map(|n| quotient(n).unwrap().dim()).collect();
    ensure(dims == [1, 2], || format!("dim A1, dim A2 = {dims:?}"))?;
    let (wa, wb) = (WeightSystem::w1(), WeightSystem::w2());
    eq("W1(theta)", &wa.value_on(&reference::theta()).unwrap(), &rat(2))?;
    eq("W2(tet)", &wb.value_on(&reference::tetrahedron()).unwrap(), &rat(1))?;
    eq("W2(theta theta)", &wb.value_on(&reference::theta_theta()).unwrap(), &rat(0))?;
    eq("W2(ladder)", &wb.value_on(&reference::ladder()).unwrap(), &rat(2))?;
    let mut relations = 0;
    for (n, w) in [(1, &wa), (2, &wb)] {
        for key in quotient(n).unwrap().generators() {
            let d = JacobiDiagram::from_key(key);
            for h in 0..3 * d.vertex_count() {
                if let Some(terms) = ihx_terms(&d, h) {
                    let sum: Rational = terms.iter().map(|t| w.value_on(t).unwrap()).sum();
                    eq("weight of an IHX relation", &sum, &rat(0))?;
                    relations += 1;
                }
            }
            // AS: reversing one vertex negates the weight
            if d.vertex_count() > 0 && !d.has_loop() {
                let flipped = w.value_on(&d.flipped_at(0)).unwrap();
                eq("weight of an AS relation", &(flipped + w.value_on(&d).unwrap()), &rat(0))?;
                relations += 1;
            }
        }
    }
    Ok(format!("dims 1, 2; {relations} relation vectors annihilated"))
}

fn alexander_pipeline() -> Outcome {
    let t = |c: i64, e: i64| LaurentPoly::monomial(rat(c), e, 1);
    let tref = t(1, 1) + t(-1, 0) + t(1, -1);
    let eight = t(-1, 1) + t(3, 0) + t(-1, -1);
    ensure(alexander_from_seifert(&common::trefoil()).unwrap() == tref, || "trefoil".into())?;
    ensure(alexander_from_seifert(&common::figure_eight()).unwrap() == eight, || "figure eight".into())?;
    for s in random_knots() {
        let delta = alexander_from_seifert(&s).map_err(|e| e.to_string())?;
        ensure(delta.is_symmetric(), || format!("asymmetric {delta}"))?;
        eq("Delta(1)", &delta.eval_at_one(), &(s.h1() / rat(s.order() as i64)))?;
    }
    for d in 1..=6 {
        ensure(delta_d_closed_form(d).unwrap() == delta_d_determinant(d).unwrap(), || format!("Delta({d})"))?;
    }
    Ok("2 knots, 50 random matrices, d = 1..6".into())
}

fn lambda_prime_routes() -> Outcome {
    for s in random_knots() {
        eq("lambda' routes", &lambda_prime_alexander(&s).unwrap(), &lambda_prime_contraction(&s).unwrap())?;
    }
    eq("lambda'(trefoil)", &lambda_prime(&common::trefoil()).unwrap(), &rat(1))?;
    eq("lambda'(figure eight)", &lambda_prime(&common::figure_eight()).unwrap(), &rat(-1))?;
    Ok("50 random matrices, trefoil 1, figure eight -1".into())
}

fn sign_calibration() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    // (a) generic linking numbers, not coming from a Seifert form
    for _ in 0..20 {
        let g = rng.gen_range(1..=2);
        let c = |i: usize, pushed: bool| surface_curve(1, SurfaceCurve { basis_index: i, pushed });
        let mut lk = LinkingTable::new();
        for i in 0..2 * g {
            for j in 0..2 * g {
                lk.insert(c(i, false), c(j, true), rat(rng.gen_range(-9..=9))).unwrap();
            }
        }
        let get = |a: &CurveId, b: &CurveId| lk.get(a, b).unwrap().clone();
        let mut formula = rat(0);
        for j in 0..g {
            for k in 0..g {
                let (xj, yj, xk, yk) = (c(2 * j, false), c(2 * j + 1, false), c(2 * k, true), c(2 * k + 1, true));
                formula += get(&xj, &xk) * get(&yj, &yk) - get(&xj, &yk) * get(&yj, &xk);
            }
        }
        let v = contract(&i_sigma(g, |x| surface_curve(1, x)), &lk, 1).unwrap();
        eq("<<I(S)>>_W1", &w1(&v), &(rat(2) * formula))?;
    }
    // (b) the degree two singular-knot polynomial on the ladder
    for _ in 0..20 {
        let (a, b, c) = (rng.gen_range(-5..=5), rng.gen_range(-5..=5), rng.gen_range(-5..=5));
        let r = ratio(rng.gen_range(-9..=9), rng.gen_range(1..=5));
        let m = SingularLinkingMatrix::new(qm(&[&[a, b], &[b, c]])).unwrap();
        let (l11, l12, l22) = (rat(a), rat(b), rat(c));
        let coeff = ((rat(5) * &l12 * &l12 + rat(2) * &l11 * &l22) * &r * &r - &l12 * &r) / rat(4);
        let want = DiagramVector::from_diagram(&reference::ladder()).scale(&coeff).reduce().unwrap();
        ensure(y2_singular_engine(&m, &r).unwrap() == want, || format!("singular polynomial at l = ({a}, {b}, {c}), r = {r}"))?;
    }
    Ok("20 generic tables, 20 singular instances".into())
}

fn lens_dedekind() -> Outcome {
    for q in -10..=10 {
        eq("lambda(L(1,-q))", &lambda_lens(SurgerySpec::new(1, q).unwrap()).unwrap(), &rat(0))?;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..20 {
        let (p, q) = coprime(&mut rng, 60);
        let p = p.abs();
        let (pr, qr) = (rat(p), rat(q));
        let want = ratio(-1, 4) + (&pr / &qr + &qr / &pr + (&pr * &qr).recip()) / rat(12);
        eq("reciprocity", &(dedekind_sum(p, q).unwrap() + dedekind_sum(q, p).unwrap()), &want)?;
    }
    for _ in 0..20 {
        let (p, q) = coprime(&mut rng, 60);
        let a = lambda_lens(SurgerySpec::new(p, q).unwrap()).unwrap();
        eq("L(p,-q) vs L(p,-q-p)", &a, &lambda_lens(SurgerySpec::new(p, q + p).unwrap()).unwrap())?;
    }
    Ok("21 trivial lens spaces, 20 reciprocity pairs, 20 periodicity pairs".into())
}

fn cross_theorem() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    for _ in 0..10 {
        let g = rng.gen_range(1..=2);
        let v = random_seifert_matrix(&mut rng, g, 3);
        let s = SeifertData::integral(v.clone()).unwrap();
        let lp = lambda_prime(&s).unwrap();
        for _ in 0..5 {
            let (p, q) = coprime(&mut rng, 12);
            let slope = SurgerySpec::new(p, q).unwrap();
            let lambda_m = rat(rng.gen_range(-5..=5));
            let alternating = &lambda_m + lambda_lens(slope).unwrap() - lambda_surgery(&lambda_m, &lp, slope).unwrap();
            let bracket = bracket_boundary(1, &[g], &seifert_linking_table(&v, 1), &[slope]).unwrap();
            eq("boundary bracket vs surgery formula", &w1(&bracket), &alternating)?;
        }
    }
    // the labelled theta whose two vertices both read 1, 2, 3
    let theta = WeightSystem::w1().value_on(&reference::theta_same()).unwrap();
    for _ in 0..10 {
        let mu = rat(rng.gen_range(-6..=6));
        let specs: Vec<SurgerySpec> = (0..3).map(|_| coprime(&mut rng, 9)).map(|(p, q)| SurgerySpec::new(p, q).unwrap()).collect();
        let prod: Rational = specs.iter().map(SurgerySpec::inverse_slope).product();
        let tensor = MilnorTensor::new(1, [((1, 2, 3), mu.clone())]).unwrap();
        let want = &prod * &mu * &mu * &theta / rat(2);
        eq("algebraically split bracket", &w1(&bracket_as(1, &tensor, &specs).unwrap()), &want)?;
    }
    let sign = rat(1);
    for _ in 0..10 {
        let ell = rat(rng.gen_range(-6..=6));
        let specs: Vec<SurgerySpec> = (0..2).map(|_| coprime(&mut rng, 9)).map(|(p, q)| SurgerySpec::new(p, q).unwrap()).collect();
        let prod: Rational = specs.iter().map(SurgerySpec::inverse_slope).product();
        let mut table = IntersectionLinkTable::new();
        table.insert((1, 2), (1, 2), ell.clone()).unwrap();
        let want = &sign * &prod * lambda_prime_pair(1, 1, &ell).unwrap();
        eq("mu-vanishing bracket", &w1(&bracket_as_mu0(1, &table, &specs).unwrap()), &want)?;
    }
    Ok(format!("50 boundary cases, 10 split cases, 10 mu-vanishing cases; calibrated sign {sign}"))
}

fn pretzel_suite() -> Outcome {
    let k = |x, y, z| PretzelParams::new(x, y, z).unwrap();
    eq("w3(K(-1,1,1))", &w3_pretzel(k(-1, 1, 1)), &rat(0))?;
    let odd: Vec<i64> = (-7..=7).filter(|x| x % 2 != 0).collect();
    for &x in &odd {
        for &y in &odd {
            for &z in &odd {
                let lhs = rat(16) * (w3_pretzel(k(x + 2, y, z)) - w3_pretzel(k(x, y, z)));
                let rhs = rat((2 * x + 2) * (y + z) + 2 + 4 * y * z + y * y + z * z);
                eq("x -> x+2 recursion", &lhs, &rhs)?;
                eq("w3 cyclic symmetry", &w3_pretzel(k(x, y, z)), &w3_pretzel(k(y, z, x)))?;
                eq("lambda' cyclic symmetry", &lambda_prime_pretzel(k(x, y, z)), &lambda_prime_pretzel(k(z, x, y)))?;
            }
        }
    }
    for n in 1..=8i64 {
        // K-_n and both smoothings are trivial, lambda'(K+_n) = -n, lk = n
        let w3 = w3_crossing_change(&rat(0), &rat(0), &rat(-n), &rat(0), &rat(n));
        eq("w3(K+_n)", &w3, &ratio(-n * (n - 1), 4))?;
    }
    Ok(format!("{} parameter triples, n = 1..8", odd.len().pow(3)))
}

fn stabilization() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for _ in 0..20 {
        let g = rng.gen_range(1..=2);
        let s = SeifertData::integral(random_seifert_matrix(&mut rng, g, 3)).unwrap();
        let links: Vec<Rational> = (0..2 * g).map(|_| rat(rng.gen_range(-3..=3))).collect();
        let t = s.with_hollow_handle(&links, rat(rng.gen_range(-3..=3))).unwrap();
        let b = |s: &SeifertData| w1(&contract(&i_sigma(s.genus(), |x| surface_curve(1, x)), &seifert_linking_table(s.matrix(), 1), 1).unwrap());
        eq("<<I(S)>>_W1", &b(&t), &b(&s))?;
        eq("lambda2''", &lambda2_second(&t).unwrap(), &lambda2_second(&s).unwrap())?;
    }
    Ok("20 random stabilizations".into())
}

fn oracles() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let mut checked = 0;
    let mut compare = |g: &GraphCombination, lk: &LinkingTable, n: usize| -> Result<(), String> {
        let engine = contract(g, lk, n).unwrap().reduce().unwrap();
        checked += 1;
        ensure(engine == brute_force_contract(g, lk, n), || format!("contraction #{checked} disagrees with enumeration"))
    };
    for _ in 0..10 {
        let g = rng.gen_range(1..=2);
        let v = random_seifert_matrix(&mut rng, g, 3);
        compare(&i_sigma(g, |x| surface_curve(1, x)), &seifert_linking_table(&v, 1), 1)?;
        let parts: Vec<_> = (1..=2).map(|c| i_sigma(g, |x| surface_curve(c, x))).collect();
        compare(&GraphCombination::union_all(parts.iter()), &seifert_linking_table(&v, 2), 2)?;
    }
    for _ in 0..5 {
        let names = ["a", "b", "c", "d", "e", "f", "x1@1", "y1@1", "x1@1+", "y1@1+"];
        let mut lk = LinkingTable::new();
        for (i, x) in names.iter().enumerate() {
            for y in &names[i..] {
                lk.insert(*x, *y, rat(rng.gen_range(-4..=4))).unwrap();
            }
        }
        let form = Trilinear::new(3, [((1, 2, 3), rat(rng.gen_range(1..=3)))]).unwrap();
        let t1 = tripods(&form, &["a".into(), "b".into(), "c".into()]).unwrap();
        let t2 = tripods(&form, &["d".into(), "e".into(), "f".into()]).unwrap();
        compare(&GraphCombination::union_all([&t1, &t2, &i_sigma(1, |x| surface_curve(1, x))]), &lk, 2)?;
    }
    for _ in 0..5 {
        let (a, b, c) = (rng.gen_range(-5..=5), rng.gen_range(-5..=5), rng.gen_range(-5..=5));
        let m = SingularLinkingMatrix::new(qm(&[&[a, b], &[b, c]])).unwrap();
        let lk = singular_pair_linking_table(&m, &rat(rng.gen_range(-4..=4))).unwrap();
        let name = |i: usize| {
            move |x: SurfaceCurve| CurveId::new(format!("{}{i}{}", ["m", "l"][x.basis_index], if x.pushed { "+" } else { "" }))
        };
        compare(&i_sigma(1, name(1)).disjoint_union(&i_sigma(1, name(2))), &lk, 2)?;
    }
    Ok(format!(
        "full Z_n of general 3-manifolds is not reproducible from these inputs; {checked} contractions of at most 10 legs match brute-force enumeration"
    ))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 9] = [
        ("diagram algebra", diagram_algebra),
        ("Alexander pipeline", alexander_pipeline),
        ("lambda' dual routes", lambda_prime_routes),
        ("sign calibration anchors", sign_calibration),
        ("lens spaces and Dedekind sums", lens_dedekind),
        ("cross-theorem consistency", cross_theorem),
        ("pretzel and w3", pretzel_suite),
        ("hollow handle stabilization", stabilization),
        ("scope statement and matching oracles", oracles),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        match f() {
            Ok(note) => println!("criterion {}: {name}: PASS ({note})", i + 1),
            Err(e) => {
                failed += 1;
                println!("criterion {}: {name}: FAIL ({e})", i + 1);
            }
        }
    }
    println!("acceptance: {} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
