//! Acceptance suite: one test per criterion, each printing a pass line
//! with its measured wall time. Every comparison is exact (integer,
//! rational, or residue equality); there are no floating tolerances
//! anywhere in the crate.

use std::time::Instant;

use num_bigint::BigInt;

use qsym_core::composition::{compositions_of_weight, compositions_up_to_weight, Composition};
use qsym_core::congruence::{
    check_theorem, fit_coefficients, generator_values, verify_weight_table, CheckConfig, FitCaps,
    GenExpr, TableSet,
};
use qsym_core::mhs::{eval_exact, eval_mod_p, SumKind};
use qsym_core::modp::{bernoulli_mod_p, primes_in_range, ExactRational, PrimeCtx};
use qsym_core::qsym::{expand_phi, Basis, QSymElem, TensorElem};

fn gen_m(parts: &[u32]) -> QSymElem {
    QSymElem::generator(Basis::M, Composition::new(parts.to_vec()).unwrap())
}

fn report(criterion: u32, label: &str, start: Instant) {
    println!(
        "criterion {criterion} [PASS] {label} ({} ms)",
        start.elapsed().as_millis()
    );
}

#[test]
fn criterion_01_algebra_identities() {
    let start = Instant::now();
    let product = gen_m(&[2]).stuffle(&gen_m(&[3])).unwrap();
    assert_eq!(product, "M(2,3) + M(3,2) + M(5)".parse().unwrap());

    let e2 = QSymElem::generator(Basis::E, Composition::new(vec![2]).unwrap());
    let e3 = QSymElem::generator(Basis::E, Composition::new(vec![3]).unwrap());
    let e_product = e2
        .convert_to(Basis::M)
        .stuffle(&e3.convert_to(Basis::M))
        .unwrap()
        .convert_to(Basis::E);
    assert_eq!(e_product, "E(2,3) + E(3,2) - E(5)".parse().unwrap());
    report(1, "stuffle product and E-basis mirror", start);
}

#[test]
fn criterion_02_phi6_oracle() {
    let start = Instant::now();
    let comps = compositions_up_to_weight(5);
    let mut pairs = 0usize;
    for i in &comps {
        for j in &comps {
            if i.weight() + j.weight() > 6 {
                continue;
            }
            let a = QSymElem::generator(Basis::M, i.clone());
            let b = QSymElem::generator(Basis::M, j.clone());
            let lhs = expand_phi(&a.stuffle(&b).unwrap(), 6);
            let rhs = expand_phi(&a, 6).mul(&expand_phi(&b, 6));
            assert_eq!(lhs, rhs, "phi_6 disagrees at {i} * {j}");
            pairs += 1;
        }
    }
    // Exhaustive count of ordered nonempty pairs with total weight ≤ 6.
    assert_eq!(pairs, 129, "exhaustive pair count");
    report(2, &format!("phi_6 homomorphism on all {pairs} pairs"), start);
}

#[test]
fn criterion_03_hopf_suite() {
    let start = Instant::now();
    for i in compositions_up_to_weight(7) {
        let e = QSymElem::generator(Basis::M, i.clone());
        let closed = e.antipode();
        assert_eq!(closed, e.antipode_splitting().unwrap(), "antipode routes at {i}");
        assert_eq!(closed.antipode(), e, "S^2 at {i}");
        // S(F_I) = (−1)^|I| F_{reverse(dual(I))}
        let f = QSymElem::generator(Basis::F, i.clone());
        let sign = if i.weight() % 2 == 0 { BigInt::from(1) } else { BigInt::from(-1) };
        let want = QSymElem::from_term(Basis::F, i.reverse().dual().unwrap(), sign);
        assert_eq!(f.antipode(), want, "S on F basis at {i}");
    }
    for i in compositions_up_to_weight(6) {
        let e = QSymElem::generator(Basis::M, i.clone());
        // Σ S(e_(1)) * e_(2) = ε(e)·1 (= 0 in positive weight)
        let mut acc = QSymElem::zero(Basis::M);
        for ((l, r), coeff) in e.coproduct().unwrap().terms() {
            let term = QSymElem::generator(Basis::M, l.clone())
                .antipode()
                .stuffle(&QSymElem::generator(Basis::M, r.clone()))
                .unwrap()
                .scale(coeff);
            acc = acc.add(&term);
        }
        assert!(acc.is_zero(), "antipode axiom at {i}");
        // ΔS = (S ⊗ S)Δ^op
        let lhs = e.antipode().coproduct().unwrap();
        let rhs: TensorElem = e
            .coproduct()
            .unwrap()
            .flip()
            .map_factors(|c| QSymElem::generator(Basis::M, c.clone()).antipode());
        assert_eq!(lhs, rhs, "Delta-S intertwining at {i}");
    }
    report(3, "antipode routes, S^2, Hopf axiom, F-basis antipode", start);
}

#[test]
fn criterion_04_duality_sweeps() {
    let start = Instant::now();
    let primes = primes_in_range(11, 101);
    let tables = TableSet::builtin();
    let cfg = CheckConfig { max_weight: Some(8) };
    for id in ["4.5", "4.6", "4.7"] {
        let report = check_theorem(id, &primes, cfg, &tables).unwrap();
        assert!(report.passed(), "{}", report.render_text());
        assert_eq!(report.skipped, 0, "{id} skipped instances");
        assert!(report.total >= primes.len() * 255, "{id} coverage");
    }
    report(4, "reversal, duality and psi-duality at weight <= 8, 11..101", start);
}

#[test]
fn criterion_05_height_one() {
    let start = Instant::now();
    let tables = TableSet::builtin();
    let primes = primes_in_range(3, 101);
    let exact = check_theorem("5.3", &primes, CheckConfig::default(), &tables).unwrap();
    assert!(exact.passed(), "{}", exact.render_text());
    let modp = check_theorem("5.4", &primes, CheckConfig::default(), &tables).unwrap();
    assert!(modp.passed(), "{}", modp.render_text());
    // Thm 5.1 / 5.2 across h, k ≤ 6 (weights up to 11).
    let cfg = CheckConfig { max_weight: Some(11) };
    for id in ["5.1", "5.2"] {
        let r = check_theorem(id, &primes, cfg, &tables).unwrap();
        assert!(r.passed(), "{}", r.render_text());
    }
    report(5, "height-one formulas, sign law and symmetry", start);
}

#[test]
fn criterion_06_bernoulli_congruences() {
    let start = Instant::now();
    // the hand-checked instance: S_(2,1)(10) = 4 = B_8 mod 11
    let ctx = PrimeCtx::new(11).unwrap();
    let exact = eval_exact(SumKind::Weak, &Composition::new(vec![2, 1]).unwrap(), 10);
    assert_eq!(ctx.res_rational(&exact).unwrap().value(), 4);
    assert_eq!(
        eval_mod_p(SumKind::Weak, &Composition::new(vec![2, 1]).unwrap(), &ctx).value(),
        4
    );
    assert_eq!(bernoulli_mod_p(8, &ctx).unwrap().value(), 4);

    let tables = TableSet::builtin();
    let primes = primes_in_range(5, 101);
    let r = check_theorem("6.1", &primes, CheckConfig::default(), &tables).unwrap();
    assert!(r.passed(), "{}", r.render_text());
    assert!(r.total > 0);
    report(6, "double-sum Bernoulli formula, i+j <= 9, p <= 101", start);
}

#[test]
fn criterion_07_weight_tables() {
    let start = Instant::now();
    let tables = TableSet::builtin();
    for weight in 3..=9u32 {
        let primes = primes_in_range(weight as u64 + 2, 101);
        let r = verify_weight_table(weight, &primes, &tables).unwrap();
        assert!(r.passed(), "weight {weight}: {}", r.render_text());
        assert_eq!(r.skipped, 0, "weight {weight} skipped instances");
    }
    // theorem-level extras: the B_{p-3}^2 form of Thm 7.2 and the full
    // row set of Thm 7.5 run through the registry ids.
    for (id, bound) in [("7.1", 6u64), ("7.2", 7), ("7.3", 8), ("7.4", 9), ("7.5", 10)] {
        let primes = primes_in_range(bound + 1, 101);
        let r = check_theorem(id, &primes, CheckConfig::default(), &tables).unwrap();
        assert!(r.passed(), "{id}: {}", r.render_text());
    }
    report(7, "weight tables 3..9 complete at all primes through 101", start);
}

#[test]
fn criterion_08_paper_numeric_table() {
    let start = Instant::now();
    let tables = TableSet::builtin();
    let expected: [(u64, [u64; 3]); 3] =
        [(67, [7, 0, 4]), (877, [253, 0, 354]), (16843, [16690, 14820, 0])];
    for (p, want) in expected {
        let got: Vec<u64> = generator_values(9, p, &tables)
            .unwrap()
            .into_iter()
            .map(|(_, v)| v.value())
            .collect();
        assert_eq!(got, want.to_vec(), "generator triple at p={p}");
    }
    // p = 37 remark: S(6,1,1) = 7 and S(4,1) = 0
    let ctx = PrimeCtx::new(37).unwrap();
    assert_eq!(
        eval_mod_p(SumKind::Weak, &Composition::new(vec![6, 1, 1]).unwrap(), &ctx).value(),
        7
    );
    assert!(eval_mod_p(SumKind::Weak, &Composition::new(vec![4, 1]).unwrap(), &ctx).is_zero());
    // B_{p-3} vanishes at the irregular prime 16843; the spec pins this
    // subcase under five seconds.
    let big = Instant::now();
    let ctx = PrimeCtx::new(16843).unwrap();
    assert!(bernoulli_mod_p(16840, &ctx).unwrap().is_zero());
    assert!(big.elapsed().as_secs() < 5, "p=16843 Bernoulli took too long");
    report(8, "paper's generator values at 37, 67, 877, 16843", start);
}

#[test]
fn criterion_09_zhao_consistency() {
    let start = Instant::now();
    let tables = TableSet::builtin();
    let primes = primes_in_range(12, 500);
    let r = check_theorem("zhao", &primes, CheckConfig::default(), &tables).unwrap();
    assert!(r.passed(), "{}", r.render_text());
    assert_eq!(r.total, primes.len());
    // reported as a conjecture consistency check, never as a theorem
    assert!(r.id.contains("conjecture"));
    report(9, &format!("Zhao relation consistent at {} primes <= 500", r.total), start);
}

#[test]
fn criterion_10_fit_recovers_table_rows() {
    let start = Instant::now();
    let tables = TableSet::builtin();
    let table9 = tables.get(9).unwrap();
    // Rows whose generator subset omits at least one of the three
    // weight-9 generators: on those the fit is well-posed (the full
    // triple satisfies a conjectured linear dependency at every tested
    // prime, so three-generator rows are only determined up to it — see
    // the companion fit test in the library).
    let eligible: Vec<(GenExpr, Vec<(GenExpr, ExactRational)>)> = table9
        .rows
        .iter()
        .filter(|(_, rhs)| rhs.terms().count() < 3)
        .map(|(lhs, rhs)| {
            (
                lhs.clone(),
                rhs.terms().map(|(g, c)| (g.clone(), c.clone())).collect(),
            )
        })
        .collect();
    assert!(eligible.len() >= 10, "need ten eligible rows, found {}", eligible.len());
    // Deterministic "random" choice of ten rows: a fixed-seed linear
    // congruential shuffle of the indices.
    let mut order: Vec<usize> = (0..eligible.len()).collect();
    let mut state = 0x5eed_cafe_u64;
    for i in (1..order.len()).rev() {
        state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
        order.swap(i, (state >> 33) as usize % (i + 1));
    }
    let fit_primes = [211u64, 223, 227, 229, 233, 239, 241];
    for &idx in order.iter().take(10) {
        let (lhs, terms) = &eligible[idx];
        let generators: Vec<GenExpr> = terms.iter().map(|(g, _)| g.clone()).collect();
        let expected: Vec<ExactRational> = terms.iter().map(|(_, c)| c.clone()).collect();
        let outcome =
            fit_coefficients(lhs, &generators, &fit_primes, FitCaps::default()).unwrap();
        assert_eq!(outcome.coefficients, expected, "fit of row {lhs}");
        assert_eq!(outcome.validation_prime, 241);
    }
    report(10, "fit recovered 10 weight-9 rows from 6 primes + validation", start);
}
