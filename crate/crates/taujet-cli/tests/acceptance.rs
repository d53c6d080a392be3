//! Acceptance suite: eleven criteria, one test and one printed verdict line
//! each. Every comparison is exact unless the criterion itself states a
//! tolerance. Expected values were fixed by independent computation before
//! this crate was written; the tests reconstruct claimed closed forms from
//! scratch rather than calling back into the code path under test.

use std::process::Command;

use taujet_core::analysis::{
    generation_deviation, jump_decomposition, log_derivative_sum, long_horizon_compare,
    ode_residual, parity_analysis, selfsimilar_identity, ReflectMode,
};
use taujet_core::{
    build_branch, BranchSolution, Closure, JetQ, PolyQ, RationalPair, Ratio, ScaleSchedule,
    ScheduleRule,
};

const CAP: usize = taujet_core::cascade::POLY_DEPTH_CAP;

fn q(n: i64, d: i64) -> Ratio {
    Ratio::new(n, d)
}

fn branch(eps: Ratio, generation: usize, depth: usize, closure: Closure) -> BranchSolution {
    let schedule = ScaleSchedule::make(eps, depth, generation, ScheduleRule::PowerTower)
        .expect("valid schedule");
    build_branch(schedule, depth, closure).expect("valid branch")
}

fn verdict(number: u32, description: &str, pass: bool) {
    let tag = if pass { "PASS" } else { "FAIL" };
    println!("[{tag}] criterion {number}: {description}");
    assert!(pass, "criterion {number} failed: {description}");
}

#[test]
fn criterion_01_standard_solution_recovery() {
    // Unscaled, linear closure, depth 5: the branch IS the polynomial 1 − η.
    let b = branch(Ratio::zero(), 1, 5, Closure::Linear);
    let straight = &PolyQ::one() - &PolyQ::var();
    let pair = b.rational(CAP).expect("within depth cap");
    let exact = pair.equivalent(&RationalPair::from_poly(straight.clone()));
    let series = b.jet(5) == JetQ::from_poly(&straight, 5);
    verdict(
        1,
        "unscaled linear-closure branch equals 1 - eta exactly",
        exact && series,
    );
}

#[test]
fn criterion_02_normalization_and_c1_matching() {
    let mut pass = true;
    for eps in [Ratio::zero(), q(1, 10), q(1, 3)] {
        for depth in [2usize, 4, 6] {
            for generation in [1usize, 2] {
                let b = branch(eps.clone(), generation, depth, Closure::One);
                let jet = b.jet(2);
                pass &= jet.coeff(0).is_one() && *jet.coeff(1) == -Ratio::one();
            }
        }
    }
    verdict(
        2,
        "tau(0) = 1 and tau'(0) = -1 exactly across the full parameter grid",
        pass,
    );
}

#[test]
fn criterion_03_jump_structure() {
    // Scaled run: the ledger closes and the first term is exact.
    let b = branch(q(1, 10), 1, 6, Closure::One);
    let jump = jump_decomposition(&b).expect("first-generation, depth >= 2");
    let mut ledger = Ratio::from_int(2);
    for term in &jump.terms {
        ledger = &ledger - term;
    }
    let ledger_closes = jump.total == ledger && jump.closure_term.is_zero();
    let first_term = jump.terms[0] == q(22, 9);

    // Independent dense route at depth 3: the jump is the second derivative
    // of the rational form at the origin, computed by polynomial calculus.
    let b3 = branch(q(1, 10), 1, 3, Closure::One);
    let jump3 = jump_decomposition(&b3).expect("first-generation, depth >= 2");
    let pair = b3.rational(CAP).expect("within depth cap");
    let dense_second = pair
        .derive()
        .derive()
        .eval(&Ratio::zero())
        .expect("no pole at the origin");
    let cross = jump3.total == dense_second && jump3.total == q(-8, 90009);

    // Unscaled control: no jump at all.
    let b0 = branch(Ratio::zero(), 1, 6, Closure::One);
    let zero = jump_decomposition(&b0).expect("valid").total.is_zero();

    verdict(
        3,
        "jump ledger closes, T1 = 22/9, dense cross-check agrees, zero when unscaled",
        ledger_closes && first_term && cross && zero,
    );
}

#[test]
fn criterion_04_deviation_orders() {
    let mut pass = true;
    for generation in [1usize, 2, 3] {
        let b = branch(q(1, 10), generation, 6, Closure::One);
        let report = generation_deviation(&b, 20).expect("window covers 2^k");
        let expected = 1usize << generation;
        let log = report.log_jet.as_ref().expect("scaled cascade deviates");
        let clean = (0..expected).all(|i| log.coeff(i).is_zero());
        pass &= report.clean_below_expected
            && clean
            && report.leading.as_ref().map(|(k, _)| *k) == Some(expected);
    }
    verdict(
        4,
        "generation k first deviates at order 2^k with a spotless log below it",
        pass,
    );
}

#[test]
fn criterion_05_residual_law_unscaled() {
    let mut pass = true;
    for depth in [2usize, 3, 4] {
        let m = 1usize << depth;
        let window = m + 2;
        let b = branch(Ratio::zero(), 1, depth, Closure::One);
        let report = ode_residual(&b, window);
        pass &= report.leading_order == Some(m - 1)
            && report.leading_coefficient == -Ratio::from_int(m as i64);

        // Closed-form oracle, built from scratch: the truncated branch is
        // (1 − η)/(1 − η^m), whose residual is −m·η^{m−1}(1−η)²/(1−η^m)².
        let one_minus = &JetQ::one(window) - &JetQ::var(window);
        let geom = JetQ::from_poly(
            &(&PolyQ::one() - &PolyQ::monomial(Ratio::one(), m)),
            window,
        );
        let geom_sq_inv = geom.mul(&geom).recip().expect("unit constant");
        let monomial = JetQ::from_poly(
            &PolyQ::monomial(-Ratio::from_int(m as i64), m - 1),
            window,
        );
        let oracle = monomial.mul(&one_minus.mul(&one_minus)).mul(&geom_sq_inv);
        pass &= report.residual == oracle;
    }
    verdict(
        5,
        "unscaled one-closure residual is exactly -m eta^(m-1)(1-eta)^2/(1-eta^m)^2, m = 2^N",
        pass,
    );
}

#[test]
fn criterion_06_two_path_consistency() {
    let order = 16usize;
    let mut pass = true;
    for eps in [Ratio::zero(), q(1, 10), q(1, 3)] {
        for depth in [2usize, 4, 6] {
            for generation in [1usize, 2] {
                let b = branch(eps.clone(), generation, depth, Closure::One);
                let guarded = b.jet(order + 1);
                let total = &guarded.derive()
                    + &guarded.truncate(order).mul(&log_derivative_sum(&b, order));
                pass &= total.is_zero();
            }
        }
    }
    verdict(
        6,
        "d tau + tau * S vanishes at every order <= K across the full grid",
        pass,
    );
}

#[test]
fn criterion_07_parity() {
    let order = 8usize;
    let unscaled = branch(Ratio::zero(), 1, 4, Closure::One);
    let symmetric = parity_analysis(&unscaled, order, ReflectMode::LevelZeroOnly)
        .asymmetry
        .is_zero();
    let mut broken = true;
    for eps in [q(1, 10), q(1, 3)] {
        let b = branch(eps, 1, 4, Closure::One);
        let asymmetry = parity_analysis(&b, order, ReflectMode::LevelZeroOnly).asymmetry;
        broken &= !asymmetry.is_zero() && !asymmetry.is_negative();
    }
    verdict(
        7,
        "reflection symmetry is exact when unscaled and strictly broken when scaled",
        symmetric && broken,
    );
}

#[test]
fn criterion_08_base_level_self_similar_identity() {
    let mut pass = true;
    for eps in [Ratio::zero(), q(1, 10), q(1, 3)] {
        let schedule = ScaleSchedule::make(eps, 1, 1, ScheduleRule::PowerTower).expect("valid");
        let report = selfsimilar_identity(&schedule, 0);
        pass &= report.holds_exactly && report.defect.is_zero();
    }
    verdict(
        8,
        "the level 0 -> 1 factorization identity reduces to the exact zero rational function",
        pass,
    );
}

#[test]
fn criterion_09_normalization_constant() {
    let scaled = branch(q(1, 10), 1, 2, Closure::One);
    let unscaled = branch(Ratio::zero(), 1, 2, Closure::One);
    verdict(
        9,
        "C = 90009/100000 at defect 1/10 depth 2, and C = 1 when unscaled",
        *scaled.normalization_constant() == Ratio::parse("90009/100000").unwrap()
            && unscaled.normalization_constant().is_one(),
    );
}

#[test]
fn criterion_10_long_horizon() {
    let rows = long_horizon_compare(&q(1, 1000), &Ratio::one(), &Ratio::from_int(1000), 2, 256)
        .expect("valid grid");
    let at_horizon = rows.last().expect("grid has rows");
    // |abs_dev − 1| ≤ 2⁻²⁰⁰, measured exactly on the rational readback.
    let error = (at_horizon.abs_dev.to_ratio() - Ratio::one()).abs();
    let bound = q(1, 2).pow(200);
    verdict(
        10,
        "the absolute deviation at t = 1000 is 1.0 to within 2^-200 relative",
        error <= bound,
    );
}

#[test]
fn criterion_11_determinism() {
    let run = || {
        Command::new(env!("CARGO_BIN_EXE_taujet"))
            .args(["verify", "--epsilon", "1/10", "--levels", "6", "--jet-order", "16"])
            .output()
            .expect("binary runs")
    };
    let first = run();
    let second = run();
    let both_pass = first.status.success() && second.status.success();
    let identical = first.stdout == second.stdout && !first.stdout.is_empty();
    verdict(
        11,
        "two identical verify invocations emit byte-identical JSON",
        both_pass && identical,
    );
}
