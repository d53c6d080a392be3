//! The invariant suite behind `taujet verify`.
//!
//! Each check states a mathematical claim about the configured cascade,
//! computes both sides exactly, and records expected versus actual as exact
//! rational strings. Controls that have closed forms (the unscaled cascade,
//! the level-0 identity) run alongside the configured parameters, so a run
//! always contains some checks whose expected values are known a priori and
//! some that probe the configured branch.
//!
//! The suite never loosens a comparison: every check is an exact equality or
//! an exact sign condition. A failing check is reported, not repaired.

use taujet_core::analysis::{
    convergence_diagnostics, generation_deviation, jump_decomposition, log_derivative_sum,
    ode_residual, parity_analysis, phi_residual, selfsimilar_identity, ReflectMode,
};
use taujet_core::{
    build_branch, BranchSolution, Closure, Error, JetQ, Ratio, ScaleSchedule, ScheduleRule,
};

use crate::config::CommonArgs;
use crate::report::CheckRow;

type Result<T> = std::result::Result<T, Error>;

struct Suite {
    checks: Vec<CheckRow>,
}

impl Suite {
    fn record(&mut self, name: &str, claim: &str, expected: String, actual: String, pass: bool) {
        self.checks.push(CheckRow {
            name: name.to_string(),
            claim: claim.to_string(),
            expected,
            actual,
            status: if pass { "pass" } else { "fail" }.to_string(),
        });
    }

    /// Exact equality of two rationals.
    fn equal(&mut self, name: &str, claim: &str, expected: &Ratio, actual: &Ratio) {
        self.record(
            name,
            claim,
            expected.to_string(),
            actual.to_string(),
            expected == actual,
        );
    }

    /// A jet that the claim says vanishes identically; the reported actual
    /// value is the sum of absolute coefficients, zero iff the jet is zero.
    fn vanishes(&mut self, name: &str, claim: &str, defect: &JetQ) {
        let total = defect
            .coeffs()
            .iter()
            .fold(Ratio::zero(), |acc, c| &acc + &c.abs());
        self.record(
            name,
            claim,
            Ratio::zero().to_string(),
            total.to_string(),
            total.is_zero(),
        );
    }
}

/// Runs the full suite. `Ok` carries the check rows and the overall verdict;
/// `Err` is reserved for usage and resource problems (bad parameter
/// combinations, depth over the dense cap), which abort instead of failing.
pub fn run_suite(args: &CommonArgs) -> Result<(Vec<CheckRow>, bool)> {
    let mut suite = Suite { checks: Vec::new() };
    let depth = args.levels();
    let order = args.jet_order();
    let cap = args.poly_cap();

    // --- Schedule invariants -------------------------------------------------
    let schedule = args.schedule()?;
    args.vlog("checking schedule invariants");
    let epsilon0 = schedule.epsilon_at(0);
    suite.equal(
        "schedule-origin-unscaled",
        "the base level is unscaled: epsilon_0 = 0",
        &Ratio::zero(),
        &epsilon0,
    );

    let offender = (0..=depth)
        .map(|n| (n, schedule.epsilon_at(n)))
        .find(|(_, e)| e.is_negative() || *e >= Ratio::one());
    suite.record(
        "schedule-range",
        "every per-level defect lies in [0, 1)",
        "all defects in [0, 1)".to_string(),
        match &offender {
            None => "all defects in [0, 1)".to_string(),
            Some((n, e)) => format!("epsilon_{n} = {e}"),
        },
        offender.is_none(),
    );

    let scaled = (0..=depth).any(|n| !schedule.epsilon_at(n).is_zero());

    // --- Branch normalization and matching ----------------------------------
    let branch = build_branch(schedule.clone(), depth, args.closure())?;
    args.vlog("checking normalization and first-derivative matching");
    let tau = branch.jet(order);
    suite.equal(
        "branch-normalization",
        "the inner branch is normalized: tau(0) = 1",
        &Ratio::one(),
        tau.coeff(0),
    );
    let normalized = tau.coeff(0).is_one();
    suite.equal(
        "branch-slope",
        "the branches match in first derivative: tau'(0) = -1 against tau_plus'(0) = +1",
        &(-Ratio::one()),
        tau.coeff(1),
    );

    // --- Level structure -----------------------------------------------------
    args.vlog("checking level structure");
    let levels = branch.levels_jet(2);
    let linear_defect = levels[1..]
        .iter()
        .fold(Ratio::zero(), |acc, level| {
            &acc + &level.eta_prime.coeff(1).abs()
        });
    suite.equal(
        "upper-levels-quadratic",
        "levels past the base have no linear term: [eta^1] eta_n' = 0 for n >= 1",
        &Ratio::zero(),
        &linear_defect,
    );

    // Dense route; depth over the cap aborts here with a resource error.
    let dense_levels = branch.levels_poly(cap)?;
    let top_degree = dense_levels[depth].eta_prime.degree();
    suite.record(
        "depth-degree-law",
        "the depth-N iterate is a polynomial of degree exactly 2^N",
        format!("degree {}", 1usize << depth),
        match top_degree {
            Some(d) => format!("degree {d}"),
            None => "zero polynomial".to_string(),
        },
        top_degree == Some(1usize << depth),
    );

    let pair = branch.rational(cap)?;
    let num = JetQ::from_poly(&pair.num, order);
    let den = JetQ::from_poly(&pair.den, order);
    let dense_series = num.mul(&den.recip().expect("branch denominator has nonzero constant"));
    suite.vanishes(
        "jet-dense-consistency",
        "the truncated product and the dense rational form agree through order K",
        &(&tau - &dense_series),
    );

    // --- Derivative identities -----------------------------------------------
    args.vlog("checking derivative identities");
    let guarded = branch.jet(order + 1);
    let dtau = guarded.derive();
    let sum = log_derivative_sum(&branch, order);
    suite.vanishes(
        "derivative-identity",
        "differentiating through the factors matches direct differentiation: d tau + tau * S = 0",
        &(&dtau + &guarded.truncate(order).mul(&sum)),
    );

    let residual = ode_residual(&branch, order);
    let c2 = guarded.coeff(2).clone();
    let minus_two_c2 = -(&c2 + &c2);
    suite.equal(
        "residual-linear-link",
        "the residual's linear coefficient is minus twice the curvature: [eta^1] r = -2 c_2",
        &minus_two_c2,
        residual.residual.coeff(1),
    );

    // --- Jump decomposition (first-generation cascades of depth >= 2) --------
    if branch.schedule().generation() == 1 && depth >= 2 {
        args.vlog("checking the jump decomposition");
        let jump = jump_decomposition(&branch)?;
        let mut ledger = Ratio::from_int(2);
        for term in &jump.terms {
            ledger = &ledger - term;
        }
        ledger = &ledger - &jump.closure_term;
        suite.equal(
            "jump-identity",
            "the second-derivative jump closes its ledger: total = 2 - sum T_k - closure term",
            &ledger,
            &jump.total,
        );
        suite.equal(
            "jump-curvature-link",
            "the jump equals twice the curvature of the inner branch: total = 2 c_2",
            &(&c2 + &c2),
            &jump.total,
        );
    }

    // Dense cross-check of the curvature: half the second symbolic derivative
    // of the rational form at the origin, an independent differentiation
    // route. Quotient-rule polynomials grow like 2^{2N}, so the cross-check
    // runs at a bounded control depth with the configured schedule.
    let cross_depth = depth.min(3);
    let cross_branch = build_branch(schedule.clone(), cross_depth, args.closure())?;
    let cross_c2 = cross_branch.jet(2).coeff(2).clone();
    let cross_pair = cross_branch.rational(cap)?;
    let second = cross_pair.derive().derive();
    let dense_c2 = second.eval(&Ratio::zero())? * Ratio::new(1, 2);
    suite.equal(
        "curvature-dense-cross-check",
        "half the dense second derivative at the origin equals the series curvature c_2 (control depth)",
        &cross_c2,
        &dense_c2,
    );

    // --- Normalization constant ----------------------------------------------
    args.vlog("checking the normalization constant");
    let diagnostics = convergence_diagnostics(&schedule, depth);
    let partial = diagnostics
        .partial_products
        .last()
        .cloned()
        .unwrap_or_else(Ratio::one);
    suite.equal(
        "normalization-consistency",
        "the reported constant C is the product of the origin factors over levels 1..=N",
        &partial,
        branch.normalization_constant(),
    );
    if !scaled {
        suite.equal(
            "normalization-unscaled",
            "an unscaled cascade has C = 1 exactly",
            &Ratio::one(),
            branch.normalization_constant(),
        );
    }

    // --- Self-similar base identity ------------------------------------------
    args.vlog("checking the self-similar base identity");
    for level in 0..=1usize.min(depth - 1) {
        let identity = selfsimilar_identity(&schedule, level);
        let defect_size = identity
            .defect
            .num
            .coeffs()
            .iter()
            .fold(Ratio::zero(), |acc, c| &acc + &c.abs());
        suite.record(
            &format!("self-similar-level-{level}"),
            "the level factorization identity t'_-/t'_+ - t'_- f'/f = 1 holds exactly",
            Ratio::zero().to_string(),
            defect_size.to_string(),
            identity.holds_exactly && defect_size.is_zero(),
        );
    }

    // --- Unscaled controls ----------------------------------------------------
    args.vlog("running unscaled controls");
    let control_depth = depth.min(8);
    let control_schedule = ScaleSchedule::new(Ratio::zero(), 1, ScheduleRule::PowerTower)?;
    let control = build_branch(control_schedule.clone(), control_depth, Closure::Linear)?;
    let control_order = order.min(8);
    let straight = JetQ::from_coeffs(vec![Ratio::one(), -Ratio::one()], control_order);
    suite.vanishes(
        "telescoping-control",
        "the unscaled linear-closure product collapses exactly to 1 - eta",
        &(&control.jet(control_order) - &straight),
    );
    let control_residual = ode_residual(&control, control_order);
    suite.vanishes(
        "residual-telescoped-control",
        "the collapsed unscaled branch solves the equation exactly: r = 0",
        &control_residual.residual,
    );

    let law_depth = 3usize;
    let law_order = 1usize << law_depth; // one past the leading order 2^N - 1
    let law_branch = build_branch(
        ScaleSchedule::new(Ratio::zero(), 1, ScheduleRule::PowerTower)?,
        law_depth,
        Closure::One,
    )?;
    let law = ode_residual(&law_branch, law_order);
    let expected_order = law_order - 1;
    let expected_coeff = -Ratio::from_int(1i64 << law_depth);
    suite.record(
        "residual-unscaled-law",
        "the unscaled one-closure residual leads at order 2^N - 1 with coefficient -2^N",
        format!("order {expected_order}, coefficient {expected_coeff}"),
        match law.leading_order {
            Some(k) => format!("order {k}, coefficient {}", law.leading_coefficient),
            None => "no surviving term".to_string(),
        },
        law.leading_order == Some(expected_order) && law.leading_coefficient == expected_coeff,
    );

    let control_parity = parity_analysis(&control, control_order, ReflectMode::LevelZeroOnly);
    suite.equal(
        "parity-control",
        "the unscaled linear-closure pair is exactly reflection symmetric",
        &Ratio::zero(),
        &control_parity.asymmetry,
    );

    // --- Compensated observable ----------------------------------------------
    args.vlog("checking the compensated observable");
    let probe = Ratio::new(1, 7);
    let phi = phi_residual(&probe, &branch, order);
    let r_guarded = ode_residual(&branch, order + 1).residual;
    let t_inv = (&JetQ::one(order + 1) - &JetQ::var(order + 1))
        .recip()
        .expect("1 - eta has unit constant term");
    let scaled_r = r_guarded.mul(&t_inv).scale(&probe).truncate(order);
    suite.vanishes(
        "phi-compensation",
        "the compensated observable phi = e*tau/t obeys t dphi/dt = (e/t) r coefficientwise",
        &(&phi - &scaled_r),
    );

    // --- Parity breaking -------------------------------------------------------
    if scaled {
        args.vlog("checking parity breaking");
        let parity = parity_analysis(&branch, order, ReflectMode::LevelZeroOnly);
        suite.record(
            "parity-breaking",
            "a scaled cascade breaks the reflection symmetry: asymmetry > 0",
            "positive".to_string(),
            parity.asymmetry.to_string(),
            !parity.asymmetry.is_zero() && !parity.asymmetry.is_negative(),
        );
    }

    // --- Generation deviation ---------------------------------------------------
    // Requires the log of a unit-constant series, so it only runs once
    // normalization has been established.
    if normalized {
        args.vlog("checking the generation deviation order");
        deviation_check(&mut suite, args, &branch, scaled)?;
    }

    let overall = suite.checks.iter().all(|c| c.status == "pass");
    Ok((suite.checks, overall))
}

fn deviation_check(
    suite: &mut Suite,
    args: &CommonArgs,
    branch: &BranchSolution,
    scaled: bool,
) -> Result<()> {
    let report = generation_deviation(branch, args.jet_order())?;
    let expected = report.expected_order;
    if scaled {
        suite.record(
            "deviation-order",
            "ln(tau/tau_standard) is clean below order 2^k and deviates exactly there",
            format!("first deviation at order {expected}"),
            match &report.leading {
                Some((k, c)) => format!("first deviation at order {k} (coefficient {c})"),
                None => "no deviation in the window".to_string(),
            },
            report.clean_below_expected
                && report.leading.as_ref().map(|(k, _)| *k) == Some(expected),
        );
    } else {
        suite.record(
            "deviation-order",
            "an unscaled cascade never deviates from the standard solution",
            "no deviation".to_string(),
            match &report.leading {
                Some((k, c)) => format!("deviation at order {k} (coefficient {c})"),
                None => "no deviation".to_string(),
            },
            report.leading.is_none() && report.clean_below_expected,
        );
    }
    Ok(())
}
