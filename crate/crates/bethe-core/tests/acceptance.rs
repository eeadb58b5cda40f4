//! Acceptance suite: one test per criterion, each printing a pass/fail
//! line. Exact criteria admit no tolerance; numerical ones carry their
//! stated thresholds.

use bethe_core::bethe::{count_check, residual, solve_newton, BetheConfig, SolveOptions};
use bethe_core::exactmath::Poly;
use bethe_core::fundop::{exp_kernel_checks, kernel_check_trig, xxx_frame_check};
use bethe_core::gaudin::{
    a_w_matrix, build_gaudin, canonical_limit_angles, check_weight_flip, conjecture_check,
    dwg_commutation_check, dwg_operator, float_descendant_roots, verify_bethe_eigen,
    weight_function, Sl2Tensor,
};
use bethe_core::numeric::{sine_angle, vec_norm, C64};
use bethe_core::population::{
    check_degree_law, check_degree_weight_consistency, check_edge_involution, check_relations,
    check_weight_consistency, fold_check, generate, weyl_label, Population,
};
use bethe_core::rational::{parse_rational, rat, rat_int};
use bethe_core::reproduce::{
    reproduce, verify_critical_point, FamilyKind, PolyTuple, Problem, Weight,
};
use bethe_core::rootdata::{fold_plan, Family, MultWeight, RootSystem, WeightVec};
use std::sync::OnceLock;
use std::time::Instant;

fn wv(coords: &[&str]) -> WeightVec {
    WeightVec(coords.iter().map(|s| parse_rational(s).unwrap()).collect())
}

fn ones_problem(fam: Family, rank: usize, family: FamilyKind) -> Problem {
    let rs = RootSystem::make(fam, rank).unwrap();
    let ones = WeightVec(vec![rat_int(1); rank]);
    let z = match family {
        FamilyKind::Xxx { .. } => rat(1, 3),
        _ => rat_int(1),
    };
    Problem::new(rs, vec![ones], vec![z], family).unwrap()
}

fn sl2_problem(lams: &[i64], zs: &[&str], family: FamilyKind) -> Problem {
    let rs = RootSystem::make(Family::A, 1).unwrap();
    Problem::new(
        rs,
        lams.iter().map(|&x| WeightVec(vec![rat_int(x)])).collect(),
        zs.iter().map(|s| parse_rational(s).unwrap()).collect(),
        family,
    )
    .unwrap()
}

fn generic_weight(rank: usize) -> WeightVec {
    WeightVec((1..=rank).map(|i| rat(1, 2 * i as i64 + 3)).collect())
}

/// The trig populations of criterion 2, generated once and shared; the
/// build time is recorded so the runtime budget is attributed to the
/// generation itself regardless of which test initializes the fixture.
struct TrigFixture {
    items: Vec<(&'static str, Problem, Population)>,
    build_secs: f64,
}

fn trig_fixture() -> &'static TrigFixture {
    static FIX: OnceLock<TrigFixture> = OnceLock::new();
    FIX.get_or_init(|| {
        let start = Instant::now();
        let mut items = Vec::new();
        for (name, fam, rank) in [
            ("A2", Family::A, 2),
            ("A3", Family::A, 3),
            ("B2", Family::B, 2),
            ("C3", Family::C, 3),
            ("G2", Family::G, 2),
        ] {
            let p = ones_problem(fam, rank, FamilyKind::Trig);
            let lam = Weight::Additive(generic_weight(rank));
            let budget = 4 * p.rs.weyl_order().unwrap() as usize;
            let pop = generate(&p, PolyTuple::trivial(rank), lam, budget).unwrap();
            items.push((name, p, pop));
        }
        TrigFixture {
            items,
            build_secs: start.elapsed().as_secs_f64(),
        }
    })
}

/// The exponential and difference populations of criterion 7.
struct AltFixture {
    exp: Vec<(&'static str, Problem, Population)>,
    xxx: Vec<(&'static str, Problem, Population)>,
}

fn alt_fixture() -> &'static AltFixture {
    static FIX: OnceLock<AltFixture> = OnceLock::new();
    FIX.get_or_init(|| {
        let mut exp = Vec::new();
        let mut xxx = Vec::new();
        for (name, fam) in [("A2", Family::A), ("B2", Family::B)] {
            let p = ones_problem(fam, 2, FamilyKind::Exp);
            let lam = Weight::Additive(generic_weight(2));
            let budget = 4 * p.rs.weyl_order().unwrap() as usize;
            let pop = generate(&p, PolyTuple::trivial(2), lam, budget).unwrap();
            exp.push((name, p, pop));

            let p = ones_problem(fam, 2, FamilyKind::Xxx { h: rat_int(1) });
            let kappa = Weight::Mult(MultWeight::new(vec![rat_int(2), rat_int(3)]).unwrap());
            let budget = 4 * p.rs.weyl_order().unwrap() as usize;
            let pop = generate(&p, PolyTuple::trivial(2), kappa, budget).unwrap();
            xxx.push((name, p, pop));
        }
        AltFixture { exp, xxx }
    })
}

fn report(criterion: &str, passed: bool) {
    println!(
        "criterion {criterion}: {}",
        if passed { "PASS" } else { "FAIL" }
    );
    assert!(passed, "criterion {criterion} failed");
}

#[test]
fn criterion_01_sl2_seed_population() {
    let start = Instant::now();
    let p = sl2_problem(&[1], &["1"], FamilyKind::Trig);
    let lam = wv(&["5/3"]);

    // the critical tuple y = x - 5/8 and its descendant 1
    let seed = PolyTuple::new(vec![Poly::from_roots(&[rat(5, 8)])]);
    let weight = Weight::Additive(lam.clone());
    let mut ok = verify_critical_point(&p, &seed, &weight, &[1]).is_critical();
    let desc = reproduce(&p, &seed, &weight, 0).unwrap();
    ok &= desc.tuple.0[0] == Poly::one();
    ok &= desc.weight == Weight::Additive(wv(&["-11/3"]));

    // involution is exact
    let back = reproduce(&p, &desc.tuple, &desc.weight, 0).unwrap();
    ok &= back.tuple == seed && back.weight == weight;

    // the population is the unordered pair {(y, 5/3), (1, -11/3)}
    let pop = generate(&p, seed.clone(), weight, 8).unwrap();
    ok &= pop.len() == 2 && pop.is_closed();
    let weights: Vec<_> = pop.nodes.iter().map(|n| n.weight.clone()).collect();
    ok &= weights.contains(&Weight::Additive(wv(&["5/3"])))
        && weights.contains(&Weight::Additive(wv(&["-11/3"])));
    let tuples: Vec<_> = pop.nodes.iter().map(|n| n.tuple.clone()).collect();
    ok &= tuples.contains(&seed) && tuples.contains(&PolyTuple::trivial(1));

    let elapsed = start.elapsed().as_secs_f64();
    ok &= elapsed < 0.1;
    println!("  sl2 seed population in {elapsed:.4} s");
    report("01 sl2 seed population", ok);
}

#[test]
fn criterion_02_population_cardinality_is_weyl_order() {
    let expected = [
        ("A2", 6usize),
        ("A3", 24),
        ("B2", 8),
        ("C3", 48),
        ("G2", 12),
    ];
    let fixture = trig_fixture();
    let mut ok = true;
    for ((name, p, pop), (ename, count)) in fixture.items.iter().zip(expected) {
        assert_eq!(*name, ename);
        let label = weyl_label(p, pop).unwrap();
        let good =
            pop.len() == count && pop.failures.is_empty() && pop.is_closed() && label.bijective;
        println!(
            "  {name}: {} nodes (expected {count}), failures {}, tau bijective {}",
            pop.len(),
            pop.failures.len(),
            label.bijective
        );
        ok &= good;
    }
    println!("  populations generated in {:.2} s", fixture.build_secs);
    ok &= fixture.build_secs < 10.0;
    report("02 population cardinality = |W|", ok);
}

#[test]
fn criterion_03_relation_suite() {
    let fixture = trig_fixture();
    let mut ok = true;
    for (name, p, pop) in &fixture.items {
        let rel = check_relations(p, pop);
        println!(
            "  {name}: {} relations checked, {} violations",
            rel.checked,
            rel.violations.len()
        );
        ok &= rel.passed();
        ok &= check_edge_involution(pop).is_ok();
    }
    report("03 relation suite", ok);
}

#[test]
fn criterion_04_degree_law_all_families() {
    let mut ok = true;
    for (name, p, pop) in &trig_fixture().items {
        let r = check_degree_law(p, pop);
        println!("  trig {name}: {:?}", r.as_ref().err());
        ok &= r.is_ok();
    }
    let alt = alt_fixture();
    for (name, p, pop) in alt.exp.iter().chain(&alt.xxx) {
        let r = check_degree_law(p, pop);
        println!("  {:?} {name}: {:?}", p.family, r.as_ref().err());
        ok &= r.is_ok();
    }
    report("04 degree law on every edge", ok);
}

#[test]
fn criterion_05_kernel_reconstruction_type_a() {
    let start = Instant::now();
    let fixture = trig_fixture();
    let mut ok = true;
    for (name, p, pop) in &fixture.items {
        if !matches!(*name, "A2" | "A3") {
            continue;
        }
        let rep = kernel_check_trig(p, pop).unwrap();
        let failures: Vec<_> = rep.items.iter().filter(|i| !i.passed).collect();
        println!(
            "  {name}: {} kernel checks, {} failures",
            rep.items.len(),
            failures.len()
        );
        for f in &failures {
            println!("    {}: {}", f.name, f.detail);
        }
        ok &= rep.passed();
    }
    let elapsed = start.elapsed().as_secs_f64();
    println!("  kernel suites in {elapsed:.2} s");
    ok &= elapsed < 5.0;
    report("05 type A kernel reconstruction", ok);
}

#[test]
fn criterion_06_folding_embeddings() {
    let mut ok = true;

    // B2 -> A3 and G2 -> C3: the targets are generated at the folded data
    let fixture = trig_fixture();
    let by_name = |n: &str| {
        fixture
            .items
            .iter()
            .find(|(name, _, _)| *name == n)
            .unwrap()
    };
    for src_name in ["B2", "G2"] {
        let (_, src_p, src_pop) = by_name(src_name);
        let plan = fold_plan(&src_p.rs).unwrap();
        let lam_src = src_pop.nodes[0].weight.as_additive().unwrap();
        let tgt_problem = Problem::new(
            plan.target.clone(),
            vec![plan.fold_weight(&src_p.lambdas[0])],
            src_p.zs.clone(),
            FamilyKind::Trig,
        )
        .unwrap();
        let order = tgt_problem.rs.weyl_order().unwrap() as usize;
        let tgt_pop = generate(
            &tgt_problem,
            PolyTuple::trivial(3),
            Weight::Additive(plan.fold_weight(lam_src)),
            4 * order,
        )
        .unwrap();
        let rep = fold_check(&plan, src_pop, &tgt_pop);
        println!(
            "  {src_name} -> {:?}: {} nodes checked into {} targets, {} violations",
            plan.target.family(),
            rep.checked,
            tgt_pop.len(),
            rep.violations.len()
        );
        ok &= rep.passed() && tgt_pop.len() == order;
    }

    // B3 -> A5 spot check
    let b3 = ones_problem(Family::B, 3, FamilyKind::Trig);
    let lam3 = generic_weight(3);
    let pop_b3 = generate(
        &b3,
        PolyTuple::trivial(3),
        Weight::Additive(lam3.clone()),
        4 * 48,
    )
    .unwrap();
    let plan = fold_plan(&b3.rs).unwrap();
    let a5 = Problem::new(
        plan.target.clone(),
        vec![plan.fold_weight(&b3.lambdas[0])],
        b3.zs.clone(),
        FamilyKind::Trig,
    )
    .unwrap();
    let pop_a5 = generate(
        &a5,
        PolyTuple::trivial(5),
        Weight::Additive(plan.fold_weight(&lam3)),
        4 * 720,
    )
    .unwrap();
    let rep = fold_check(&plan, &pop_b3, &pop_a5);
    println!(
        "  B3 -> A5: source {} nodes, target {} nodes, {} violations",
        pop_b3.len(),
        pop_a5.len(),
        rep.violations.len()
    );
    ok &= pop_b3.len() == 48 && pop_a5.len() == 720 && rep.passed();

    report("06 folding embeddings", ok);
}

#[test]
fn criterion_07_exponential_and_xxx_families() {
    let alt = alt_fixture();
    let mut ok = true;
    for (name, p, pop) in &alt.exp {
        let expected = p.rs.weyl_order().unwrap() as usize;
        let label = weyl_label(p, pop).unwrap();
        let rel = check_relations(p, pop);
        println!(
            "  exp {name}: {} nodes (|W| = {expected}), tau bijective {}, relations ok {}",
            pop.len(),
            label.bijective,
            rel.passed()
        );
        ok &= pop.len() == expected && pop.is_closed() && label.bijective && rel.passed();
        ok &= check_degree_law(p, pop).is_ok();
        ok &= check_weight_consistency(p, pop).is_ok();
        ok &= check_degree_weight_consistency(p, pop).is_ok();
    }
    for (name, p, pop) in &alt.xxx {
        let expected = p.rs.weyl_order().unwrap() as usize;
        let label = weyl_label(p, pop).unwrap();
        let rel = check_relations(p, pop);
        println!(
            "  xxx {name}: {} nodes (|W| = {expected}), tau bijective {}, relations ok {}",
            pop.len(),
            label.bijective,
            rel.passed()
        );
        ok &= pop.len() == expected && pop.is_closed() && label.bijective && rel.passed();
        ok &= check_degree_law(p, pop).is_ok();
        ok &= check_weight_consistency(p, pop).is_ok();
    }

    // section 6 / section 7 kernel and divisibility checks on A2
    let (_, p_exp, pop_exp) = &alt.exp[0];
    let rep = exp_kernel_checks(p_exp, pop_exp).unwrap();
    println!("  exp kernel A2: {} checks", rep.items.len());
    ok &= rep.passed();
    let (_, p_xxx, pop_xxx) = &alt.xxx[0];
    let rep = xxx_frame_check(p_xxx, pop_xxx).unwrap();
    println!("  xxx frame A2: {} checks", rep.items.len());
    ok &= rep.passed();

    report("07 exponential and XXX families", ok);
}

#[test]
fn criterion_08_solution_counts_vs_multiplicity() {
    let start = Instant::now();
    let opts = SolveOptions {
        attempts: 200,
        tol: 1e-10,
        dedup_tol: 1e-6,
        ..SolveOptions::default()
    };
    let mut ok = true;
    let instances: Vec<(Vec<i64>, usize, u64)> = vec![
        (vec![1, 1], 1, 2),
        (vec![2, 2], 2, 3),
        (vec![1, 1, 1], 1, 3),
    ];
    for family in ["trig", "exp", "xxx"] {
        for (lams, l, expected) in &instances {
            let (p, weight) = match family {
                "trig" => (
                    sl2_problem(lams, &["1", "2", "3"][..lams.len()], FamilyKind::Trig),
                    Weight::Additive(wv(&["7/5"])),
                ),
                "exp" => (
                    sl2_problem(lams, &["1", "2", "3"][..lams.len()], FamilyKind::Exp),
                    Weight::Additive(wv(&["7/5"])),
                ),
                _ => (
                    sl2_problem(
                        lams,
                        &["1", "5/2", "17/4"][..lams.len()],
                        FamilyKind::Xxx { h: rat_int(1) },
                    ),
                    Weight::Mult(MultWeight::new(vec![rat_int(2)]).unwrap()),
                ),
            };
            let rep = count_check(&p, &weight, *l, &opts).unwrap();
            println!(
                "  {family} Lambda={lams:?} l={l}: found {} multiplicity {} (expected {expected})",
                rep.found, rep.multiplicity
            );
            ok &= rep.multiplicity == *expected;
            ok &= rep.matches && rep.within_bound;
        }
    }
    let elapsed = start.elapsed().as_secs_f64();
    println!("  counts in {elapsed:.2} s");
    ok &= elapsed < 30.0;
    report("08 solution counts vs multiplicity", ok);
}

#[test]
fn criterion_09_gaudin_eigenvectors() {
    let mut ok = true;
    let instances: Vec<(Vec<i64>, Vec<&str>)> = vec![
        (vec![1, 1], vec!["1", "2"]),
        (vec![1, 1, 2], vec!["1", "2", "3"]),
    ];
    let opts = SolveOptions {
        attempts: 250,
        ..SolveOptions::default()
    };
    for (lams, zs) in &instances {
        let p = sl2_problem(lams, zs, FamilyKind::Trig);
        let weight = Weight::Additive(wv(&["23/10"]));
        let total: i64 = lams.iter().sum();
        for l in 0..=2usize {
            let mult = bethe_core::bethe::weight_multiplicity_sl2(
                &lams.iter().map(|&x| x as u32).collect::<Vec<_>>(),
                l,
            );
            if mult == 0 {
                continue;
            }
            let sols = solve_newton(&p, &weight, &[l], &opts);
            println!(
                "  Lambda={lams:?} l={l}: {} solutions (multiplicity {mult})",
                sols.len()
            );
            ok &= !sols.is_empty();
            for sol in &sols {
                let rep = verify_bethe_eigen(&p, &weight, sol).unwrap();
                let worst = rep.residuals.iter().cloned().fold(0.0, f64::max);
                ok &= worst <= 1e-8;
                if worst > 1e-8 {
                    println!("    eigen residual {worst:.3e} too large at l={l}");
                }
            }
        }
        // commuting Hamiltonians at the eigenvector parameter
        let tensor = Sl2Tensor::new(lams.iter().map(|&x| x as u32).collect());
        let zf: Vec<f64> = zs
            .iter()
            .map(|s| bethe_core::rational::to_f64(&parse_rational(s).unwrap()))
            .collect();
        let lam_inf = total as f64 - 2.0;
        let hs = build_gaudin(&tensor, &zf, C64::new(2.3 + 1.0 + lam_inf / 2.0, 0.0));
        for i in 0..hs.len() {
            for j in i + 1..hs.len() {
                let rel = hs[i].commutator_norm(&hs[j]) / (hs[i].norm_fro() * hs[j].norm_fro());
                ok &= rel <= 1e-12;
            }
        }
    }
    report("09 Gaudin eigenvector property", ok);
}

#[test]
fn criterion_10_dynamical_weyl_suite() {
    let start = Instant::now();
    let mut ok = true;

    // (a) weight flip, exactly, at lambda in {10, 20}
    for lams in [vec![1u32, 1], vec![2, 1]] {
        let tensor = Sl2Tensor::new(lams.clone());
        for lam in [10i64, 20] {
            let a = dwg_operator(&tensor, &rat_int(lam)).unwrap();
            ok &= check_weight_flip(&tensor, &a);
        }
    }
    println!("  (a) weight flip exact: {ok}");

    // (b) commutation identity at lambda in {10, 20}
    let mut b_ok = true;
    for lams in [vec![1u32, 1], vec![2, 1]] {
        let tensor = Sl2Tensor::new(lams);
        for lam in [10i64, 20] {
            let res = dwg_commutation_check(&tensor, &[1.0, 2.0], &rat_int(lam)).unwrap();
            b_ok &= res <= 1e-10;
        }
    }
    println!("  (b) commutation <= 1e-10: {b_ok}");
    ok &= b_ok;

    // (c) projective limit at lambda = 10^4
    let mut c_ok = true;
    for lams in [vec![1u32, 1], vec![2, 1]] {
        let tensor = Sl2Tensor::new(lams);
        let angles = canonical_limit_angles(&tensor, &rat_int(10_000)).unwrap();
        let worst = angles.iter().cloned().fold(0.0, f64::max);
        c_ok &= worst <= 1e-3;
    }
    println!("  (c) canonical limit <= 1e-3: {c_ok}");
    ok &= c_ok;

    // (d) conjecture pipeline for n <= 2, l <= 2, lambda in {10, 20}
    let mut d_ok = true;
    let opts = SolveOptions {
        attempts: 200,
        ..SolveOptions::default()
    };
    let pipeline: Vec<(Vec<i64>, Vec<&str>, Vec<usize>)> = vec![
        (vec![1], vec!["1"], vec![0]),
        (vec![1, 1], vec!["1", "2"], vec![0, 1, 2]),
    ];
    for (lams, zs, ls) in &pipeline {
        let p = sl2_problem(lams, zs, FamilyKind::Trig);
        for &lam in &[10u32, 20] {
            for &l in ls {
                let cases = conjecture_check(&p, lam, l, &opts).unwrap();
                d_ok &= !cases.is_empty();
                for case in &cases {
                    if case.descendant_off_diagonal {
                        d_ok &= case.sine <= 1e-6;
                        if case.sine > 1e-6 {
                            println!(
                                "    pipeline angle {:.2e} at Lambda={lams:?} l={l} lam={lam}",
                                case.sine
                            );
                        }
                    }
                }
            }
        }
    }
    println!("  (d) conjecture pipeline <= 1e-6: {d_ok}");
    ok &= d_ok;

    let elapsed = start.elapsed().as_secs_f64();
    println!("  dynamical Weyl suite in {elapsed:.2} s");
    ok &= elapsed < 60.0;
    report("10 dynamical Weyl suite", ok);
}

#[test]
fn criterion_11_negative_controls() {
    let mut ok = true;

    // corrupted tuples fail verify
    let p = sl2_problem(&[1], &["1"], FamilyKind::Trig);
    let weight = Weight::Additive(wv(&["5/3"]));
    let corrupted = PolyTuple::new(vec![Poly::from_roots(&[rat(1, 2)])]);
    ok &= !verify_critical_point(&p, &corrupted, &weight, &[1]).is_critical();
    let on_t = PolyTuple::new(vec![Poly::from_roots(&[rat_int(1)])]);
    ok &= !verify_critical_point(&p, &on_t, &weight, &[1]).is_critical();
    println!("  corrupted tuples rejected: {ok}");

    // non-critical t: eigen residual bounded below on the criterion-9 instance
    let p9 = sl2_problem(&[1, 1], &["1", "2"], FamilyKind::Trig);
    let w9 = Weight::Additive(wv(&["23/10"]));
    let bad = BetheConfig {
        coords: vec![vec![C64::new(0.777, 0.1)]],
    };
    let rep = verify_bethe_eigen(&p9, &w9, &bad).unwrap();
    let worst = rep.residuals.iter().cloned().fold(0.0, f64::max);
    println!("  non-critical eigen residual {worst:.3e}");
    ok &= worst >= 1e-2;
    // and its true residual is far from zero too
    let r = residual(&bad, &p9, &w9).unwrap();
    ok &= vec_norm(&r) >= 1e-2;

    // non-critical t: conjecture angle bounded below on a criterion-10 instance
    let lam = 20u32;
    let opts = SolveOptions {
        attempts: 150,
        ..SolveOptions::default()
    };
    let sols = solve_newton(
        &p9,
        &Weight::Additive(WeightVec(vec![rat_int(lam as i64)])),
        &[1],
        &opts,
    );
    let mut t = sols[0].coords[0].clone();
    t[0] += C64::new(0.37, 0.11);
    let tensor = Sl2Tensor::new(vec![1, 1]);
    let zc = [C64::new(1.0, 0.0), C64::new(2.0, 0.0)];
    let t_w = float_descendant_roots(&p9, lam, &t).unwrap();
    let omega_t = weight_function(&tensor, &zc, &t).unwrap();
    let omega_tw = weight_function(&tensor, &zc, &t_w).unwrap();
    let a = a_w_matrix(&tensor, &rat_int(lam as i64)).unwrap();
    let image = a.apply_c(&omega_t);
    let angle = sine_angle(&image, &omega_tw);
    println!("  non-critical conjecture angle {angle:.3e}");
    ok &= angle >= 1e-2;

    report("11 negative controls", ok);
}
