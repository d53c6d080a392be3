//! One function per subcommand, each mapping parsed flags to library calls
//! and packaging the result into a serializable report.

use taujet_core::analysis::{
    convergence_diagnostics, generation_deviation, jump_decomposition, long_horizon_compare,
    ode_residual, parity_analysis, ReflectMode,
};
use taujet_core::{build_branch, Error, JetQ, PolyQ, RationalPair, Ratio};

use crate::config::{CommonArgs, CompareArgs, JumpScanArgs, ParityArgs};
use crate::report::{
    jet_strings, ratio_strings, CompareCliReport, CompareCliRow, ConfigEcho, DecimalValue,
    GenerationCliReport, JetsReport, JumpRow, JumpScanReport, ParityCliReport, ResidualCliReport,
    ScheduleCliReport, ScheduleRow, TelescopeReport,
};

type Result<T> = std::result::Result<T, Error>;

pub fn jets(args: &CommonArgs) -> Result<JetsReport> {
    let branch = args.branch()?;
    let order = args.jet_order();
    args.vlog(&format!(
        "expanding depth-{} branch pair through order {order}",
        branch.depth()
    ));
    Ok(JetsReport {
        config: ConfigEcho::new("jets", args),
        normalization_constant: branch.normalization_constant().to_string(),
        tau_minus: jet_strings(&branch.jet(order)),
        tau_plus: jet_strings(&branch.plus_jet(order)),
    })
}

pub fn residual(args: &CommonArgs) -> Result<ResidualCliReport> {
    let branch = args.branch()?;
    let report = ode_residual(&branch, args.jet_order());
    Ok(ResidualCliReport {
        config: ConfigEcho::new("residual", args),
        residual: jet_strings(&report.residual),
        leading_order: report.leading_order,
        leading_coefficient: report.leading_coefficient.to_string(),
    })
}

pub fn jump_scan(args: &JumpScanArgs) -> Result<JumpScanReport> {
    let common = &args.common;
    if common.schedule_list.is_some() {
        return Err(Error::domain(
            "--schedule-list fixes every level, so there is no defect grid to scan",
        ));
    }
    let mut grid = args.grid.clone();
    grid.sort();
    let mut rows = Vec::with_capacity(grid.len());
    for epsilon in &grid {
        common.vlog(&format!("decomposing the jump at defect {epsilon}"));
        let schedule = common.schedule_at(epsilon)?;
        let branch = build_branch(schedule, common.levels(), common.closure())?;
        let jump = jump_decomposition(&branch)?;
        rows.push(JumpRow {
            epsilon: epsilon.to_string(),
            total: jump.total.to_string(),
            terms: ratio_strings(&jump.terms),
            closure_term: jump.closure_term.to_string(),
            identity_holds: jump.identity_holds,
        });
    }
    let mut config = ConfigEcho::new("jump-scan", common);
    config.grid = Some(grid.iter().map(Ratio::to_string).collect());
    Ok(JumpScanReport { config, rows })
}

pub fn parity(args: &ParityArgs) -> Result<ParityCliReport> {
    let common = &args.common;
    let branch = common.branch()?;
    let mode = if args.reflect_all {
        ReflectMode::AllFactors
    } else {
        ReflectMode::LevelZeroOnly
    };
    let report = parity_analysis(&branch, common.jet_order(), mode);
    let mut config = ConfigEcho::new("parity", common);
    config.reflect_all = Some(args.reflect_all);
    Ok(ParityCliReport {
        config,
        reflect_mode: match mode {
            ReflectMode::LevelZeroOnly => "level-zero-only".to_string(),
            ReflectMode::AllFactors => "all-factors".to_string(),
        },
        symmetric: report.asymmetry.is_zero(),
        asymmetry: report.asymmetry.to_string(),
        tau_minus: jet_strings(&report.tau_minus),
        tau_plus: jet_strings(&report.tau_plus),
        reflected_minus: jet_strings(&report.reflected_minus),
        reflected_plus: jet_strings(&report.reflected_plus),
    })
}

pub fn generation(args: &CommonArgs) -> Result<GenerationCliReport> {
    let branch = args.branch()?;
    let report = generation_deviation(&branch, args.jet_order())?;
    Ok(GenerationCliReport {
        config: ConfigEcho::new("generation", args),
        expected_order: report.expected_order,
        clean_below_expected: report.clean_below_expected,
        leading_order: report.leading.as_ref().map(|(k, _)| *k),
        leading_coefficient: report.leading.as_ref().map(|(_, c)| c.to_string()),
        log_coefficients: report.log_jet.as_ref().map(jet_strings),
    })
}

pub fn telescope(args: &CommonArgs) -> Result<TelescopeReport> {
    let schedule = args.schedule()?;
    let depth = args.levels();
    if (0..=depth).any(|n| !schedule.epsilon_at(n).is_zero()) {
        return Err(Error::domain(
            "the product collapse is an identity of the unscaled cascade; run with every defect zero",
        ));
    }
    let branch = build_branch(schedule, depth, args.closure())?;
    let order = args.jet_order();
    // The depth cap gates everything dense, including the collapsed form,
    // whose denominator has degree 2^N.
    let branch_pair = branch.rational(args.poly_cap())?;

    // Independently collapsed closed form: the unscaled product telescopes to
    // (1 − η)/(1 − η^{2^N}), and the linear closure cancels the denominator.
    let one_minus_eta = PolyQ::one() - PolyQ::var();
    let collapsed_pair = match args.closure() {
        taujet_core::Closure::Linear => RationalPair::from_poly(one_minus_eta),
        taujet_core::Closure::One => {
            let top_degree = 1usize
                .checked_shl(depth as u32)
                .ok_or_else(|| Error::resource("collapse degree 2^N overflows"))?;
            let den = PolyQ::one() - PolyQ::monomial(Ratio::one(), top_degree);
            RationalPair::new(one_minus_eta, den)?
        }
    };
    let product = branch.jet(order);
    let num = JetQ::from_poly(&collapsed_pair.num, order);
    let den = JetQ::from_poly(&collapsed_pair.den, order);
    let collapsed = num.mul(&den.recip().expect("collapsed denominator has unit constant"));
    let identical = product == collapsed && branch_pair.equivalent(&collapsed_pair);

    Ok(TelescopeReport {
        config: ConfigEcho::new("telescope", args),
        product: jet_strings(&product),
        collapsed: jet_strings(&collapsed),
        collapsed_numerator: ratio_strings(collapsed_pair.num.coeffs()),
        collapsed_denominator: ratio_strings(collapsed_pair.den.coeffs()),
        identical,
    })
}

pub fn compare(args: &CompareArgs) -> Result<CompareCliReport> {
    let common = &args.common;
    let rows = long_horizon_compare(
        &common.epsilon,
        &args.t_lo,
        &args.t_hi,
        args.steps as usize,
        common.precision(),
    )?;
    let mut config = ConfigEcho::new("compare", common);
    config.t_lo = Some(args.t_lo.to_string());
    config.t_hi = Some(args.t_hi.to_string());
    config.steps = Some(args.steps);
    Ok(CompareCliReport {
        config,
        rows: rows
            .iter()
            .map(|row| CompareCliRow {
                t: DecimalValue::of(&row.t),
                tau_s: DecimalValue::of(&row.tau_s),
                tau_g: DecimalValue::of(&row.tau_g),
                abs_dev: DecimalValue::of(&row.abs_dev),
                rel_dev: DecimalValue::of(&row.rel_dev),
            })
            .collect(),
    })
}

pub fn schedule(args: &CommonArgs) -> Result<ScheduleCliReport> {
    let schedule = args.schedule()?;
    let branch = args.branch()?;
    let depth = args.levels();
    let diagnostics = convergence_diagnostics(&schedule, depth);
    let factors = branch.factor_origin_values();
    let rows = (0..=depth)
        .map(|n| ScheduleRow {
            level: n,
            epsilon: schedule.epsilon_at(n).to_string(),
            alpha: schedule.alpha_at(n).to_string(),
            origin_factor: factors[n].to_string(),
            deviation: (n >= 1).then(|| diagnostics.deviations[n - 1].to_string()),
            partial_product: (n >= 1).then(|| diagnostics.partial_products[n - 1].to_string()),
        })
        .collect();
    Ok(ScheduleCliReport {
        config: ConfigEcho::new("schedule", args),
        origin_is_unscaled: schedule.origin_is_unscaled(),
        strictly_decreasing_after_first: diagnostics.strictly_decreasing_after_first(),
        normalization_constant: branch.normalization_constant().to_string(),
        rows,
    })
}
