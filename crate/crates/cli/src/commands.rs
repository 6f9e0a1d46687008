//! The four subcommands: decompose, plan, certify, simulate.

use std::collections::BTreeSet;
use std::path::Path;
use std::time::Instant;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use mindswap_core::machine::{replay, validate_plan, MachineError, MachineState};
use mindswap_core::oracle::{self, formula_check};
use mindswap_core::solver::{
    classic_min_count, construct_factorization, make_restoration_plan, min_undo_count, PlanMode,
    SolveError,
};
use mindswap_core::{Label, Permutation, SwapSequence};

use crate::logfile::SwapLog;
use crate::report::{self, print_json};
use crate::{CliError, ModeArg};

/// Where a displacement came from: raw cycle notation, or a replayed log
/// whose machine state (used pairs) matters for planning.
enum Input {
    Cycles(Permutation),
    Log(SwapLog, MachineState),
}

fn resolve_input(cycles: Option<&str>, log: Option<&Path>) -> Result<Input, CliError> {
    match (cycles, log) {
        (Some(text), None) => {
            let p = Permutation::parse_cycles(text).map_err(|e| CliError::Usage(e.to_string()))?;
            Ok(Input::Cycles(p))
        }
        (None, Some(path)) => {
            let log = SwapLog::load(path)?;
            if log.len() == 0 {
                return Ok(Input::Cycles(Permutation::identity()));
            }
            let state = replay(&log.to_sequence(), []).map_err(|e| match e {
                MachineError::PairReused {
                    pair,
                    index: Some(i),
                } => CliError::Constraint(format!(
                    "pair {pair} reused at line {} of {}",
                    log.line_of(i),
                    path.display()
                )),
                other => CliError::Constraint(other.to_string()),
            })?;
            Ok(Input::Log(log, state))
        }
        _ => Err(CliError::Usage(
            "provide exactly one input: a cycle-notation string or --log FILE".into(),
        )),
    }
}

pub fn decompose(cycles: Option<&str>, log: Option<&Path>, json: bool) -> Result<(), CliError> {
    // Decomposition is pure arithmetic on the net displacement, so a log is
    // read as a plain product here; machine legality is simulate's job.
    let p = match (cycles, log) {
        (Some(text), None) => {
            Permutation::parse_cycles(text).map_err(|e| CliError::Usage(e.to_string()))?
        }
        (None, Some(path)) => SwapLog::load(path)?.to_sequence().product(),
        _ => {
            return Err(CliError::Usage(
                "provide exactly one input: a cycle-notation string or --log FILE".into(),
            ))
        }
    };
    let d = p.decompose();
    if json {
        print_json(&report::DecomposeReport {
            cycles: d.cycles().to_vec(),
            n: d.n(),
            m: d.m(),
            r: d.r(),
            parity: p.parity().to_string(),
        });
    } else {
        println!(
            "{p}  n={} m={} r={} parity={}",
            d.n(),
            d.m(),
            d.r(),
            p.parity()
        );
    }
    Ok(())
}

/// Two smallest positive labels outside `taken`.
fn default_helpers(taken: &BTreeSet<Label>) -> Vec<Label> {
    let mut out = Vec::new();
    let mut candidate = 1;
    while out.len() < 2 {
        if !taken.contains(&candidate) {
            out.push(candidate);
        }
        candidate += 1;
    }
    out
}

pub fn plan(
    cycles: Option<&str>,
    log: Option<&Path>,
    mode: Option<ModeArg>,
    helpers: Option<Vec<Label>>,
    max_depth: Option<usize>,
    json: bool,
) -> Result<(), CliError> {
    let input = resolve_input(cycles, log)?;
    let (target, state, history) = match &input {
        Input::Cycles(p) => (
            p.clone(),
            MachineState::displaced([], p.clone()).ok(),
            None,
        ),
        Input::Log(log, state) => (
            state.displacement().clone(),
            Some(state.clone()),
            Some(log.to_sequence()),
        ),
    };

    let mode = mode.unwrap_or(if history.is_some() {
        ModeArg::History
    } else {
        ModeArg::Theorem
    });
    let mode_name = match mode {
        ModeArg::Theorem => "theorem",
        ModeArg::History => "history",
    };

    if target.is_identity() {
        if json {
            print_json(&report::PlanReport {
                n: 0,
                m: 0,
                r: 0,
                min_swaps: 0,
                classic_min: 0,
                plan: Vec::new(),
                helpers: Vec::new(),
                mode: mode_name.into(),
                restored: true,
            });
        } else {
            println!("already restored: everyone is in their own body (0 swaps needed)");
        }
        return Ok(());
    }

    let mut taken: BTreeSet<Label> = target.support().collect();
    if let Some(h) = &history {
        taken.extend(h.swaps().iter().flat_map(|t| [t.low(), t.high()]));
    }
    let helpers = helpers.unwrap_or_else(|| default_helpers(&taken));
    for h in &helpers {
        if *h == 0 {
            return Err(CliError::Usage("helper labels start at 1".into()));
        }
    }

    let d = target.decompose();
    let budget = min_undo_count(&d).expect("non-identity");
    let classic = classic_min_count(&d).expect("non-identity");

    let plan = match mode {
        ModeArg::Theorem => {
            let fact = construct_factorization(&target, &helpers).map_err(solve_to_cli)?;
            SwapSequence::chronological(fact.factors.swaps().to_vec())
        }
        ModeArg::History => {
            let history = history.as_ref().ok_or_else(|| {
                CliError::Usage("history mode needs a swap log; pass --log FILE".into())
            })?;
            make_restoration_plan(history, &helpers, PlanMode::History, max_depth)
                .map_err(solve_to_cli)?
        }
    };

    // Never print an unvalidated plan.
    let state = state.expect("non-identity input yields a state");
    let verdict = validate_plan(&state, &plan);
    if !verdict.is_valid() {
        let mut msg = String::from("plan failed validation:");
        if !verdict.restored {
            msg.push_str(" does not restore everyone;");
        }
        for v in &verdict.violations {
            msg.push_str(&format!(" swap #{} reuses pair {};", v.index + 1, v.pair));
        }
        if matches!(mode, ModeArg::Theorem) && history.is_some() {
            msg.push_str(" the theorem plan collides with this history, try --mode history");
        }
        return Err(CliError::Constraint(msg));
    }

    let helpers_used: Vec<Label> = plan
        .swaps()
        .iter()
        .flat_map(|t| [t.low(), t.high()])
        .filter(|l| !target.moves(*l))
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();

    if json {
        print_json(&report::PlanReport {
            n: budget.n,
            m: budget.m,
            r: budget.r,
            min_swaps: budget.min_swaps,
            classic_min: classic,
            plan: report::pairs(&plan),
            helpers: helpers_used,
            mode: mode_name.into(),
            restored: verdict.restored,
        });
    } else {
        println!("displacement: {target}  n={} m={} r={}", budget.n, budget.m, budget.r);
        println!("classic minimum (repeats allowed, nothing forbidden): {classic}");
        println!("minimum avoiding the displacement's own swaps (M): {}", budget.min_swaps);
        let swaps: Vec<String> = plan.swaps().iter().map(|t| t.to_string()).collect();
        println!(
            "plan ({} swaps, {mode_name} mode, chronological): {}",
            plan.len(),
            swaps.join(" ")
        );
        if !helpers_used.is_empty() {
            let h: Vec<String> = helpers_used.iter().map(|l| l.to_string()).collect();
            println!("helper bodies: {}", h.join(", "));
        }
        println!(
            "validation: restored, no pair reused, plan length {} M",
            if verdict.matches_budget == Some(true) {
                "equals"
            } else {
                "differs from"
            }
        );
    }
    Ok(())
}

fn solve_to_cli(e: SolveError) -> CliError {
    match e {
        SolveError::SearchBudgetExceeded { .. } => CliError::Budget(e.to_string()),
        SolveError::NeedHelpers { .. } => CliError::Usage(format!("{e}; pass --helpers A,B")),
        other => CliError::Constraint(other.to_string()),
    }
}

pub fn certify(n_max: usize, samples: usize, json: bool) -> Result<(), CliError> {
    if !(2..=8).contains(&n_max) {
        return Err(CliError::Usage(
            "--n-max must be between 2 and 8 (desk scale)".into(),
        ));
    }
    let start = Instant::now();
    let (mode, checked, mismatches, outsider_rechecks) = if n_max <= 6 {
        let report = oracle::certify_formula(n_max);
        let mut mismatches: Vec<_> = report.mismatches;
        mismatches.extend(report.outsider_mismatches);
        (
            "exhaustive".to_string(),
            report.checked,
            mismatches,
            report.outsider_rechecks,
        )
    } else {
        // Above 6 labels, exhaustive enumeration stops being a quick desk
        // check; sample instances instead, deterministically seeded.
        let mut rng = ChaCha8Rng::seed_from_u64(0xBEEF);
        let mut mismatches = Vec::new();
        let mut checked = 0;
        while checked < samples {
            let size = rng.gen_range(2..=n_max);
            let mut labels: Vec<Label> = (1..=n_max as Label).collect();
            labels.shuffle(&mut rng);
            let mut chosen: Vec<Label> = labels[..size].to_vec();
            chosen.sort_unstable();
            let mut images = chosen.clone();
            images.shuffle(&mut rng);
            let p = Permutation::from_mapping(chosen.into_iter().zip(images))
                .expect("shuffle is a bijection");
            if p.is_identity() {
                continue;
            }
            let check = formula_check(&p, 0);
            checked += 1;
            if !check.agrees {
                mismatches.push(oracle::CertifyMismatch {
                    target: p,
                    expected: check.expected,
                    found: check.found,
                });
            }
        }
        ("sampled".to_string(), checked, mismatches, 0)
    };
    let elapsed = start.elapsed();

    if json {
        print_json(&report::CertifyJson {
            n_max,
            mode: mode.clone(),
            checked,
            mismatches: mismatches
                .iter()
                .map(|m| report::MismatchJson {
                    target: m.target.to_string(),
                    expected: m.expected,
                    found: m.found,
                })
                .collect(),
            outsider_rechecks,
            elapsed_ms: elapsed.as_millis(),
        });
    } else {
        println!("mode: {mode} (n-max = {n_max})");
        println!("instances checked: {checked}");
        println!("mismatches: {}", mismatches.len());
        for m in &mismatches {
            println!(
                "  {} expected {} found {:?}",
                m.target, m.expected, m.found
            );
        }
        if outsider_rechecks > 0 {
            println!("outsider rechecks: {outsider_rechecks}");
        }
        println!("elapsed: {elapsed:?}");
    }
    if mismatches.is_empty() {
        Ok(())
    } else {
        Err(CliError::Constraint(format!(
            "{} formula mismatches found",
            mismatches.len()
        )))
    }
}

pub fn simulate(log_path: &Path, plan_path: &Path, json: bool) -> Result<(), CliError> {
    let log = SwapLog::load(log_path)?;
    let plan = SwapLog::load(plan_path)?;

    if log.len() == 0 && plan.len() == 0 {
        if json {
            print_json(&report::SimulateReport {
                restored: true,
                log_swaps: 0,
                plan_swaps: 0,
                total_swaps: 0,
                violations: Vec::new(),
            });
        } else {
            println!("verdict: restored, 0 total swaps");
        }
        return Ok(());
    }

    // Seed the roster with the plan's bodies so an empty log still yields
    // a state to validate against.
    let roster = plan
        .to_sequence()
        .swaps()
        .iter()
        .flat_map(|t| [t.low(), t.high()])
        .collect::<Vec<_>>();
    let state = replay(&log.to_sequence(), roster).map_err(|e| match e {
        MachineError::PairReused {
            pair,
            index: Some(i),
        } => CliError::Constraint(format!(
            "pair {pair} reused at line {} of {}",
            log.line_of(i),
            log_path.display()
        )),
        other => CliError::Constraint(other.to_string()),
    })?;

    let verdict = validate_plan(&state, &plan.to_sequence());
    let violations: Vec<report::ViolationJson> = verdict
        .violations
        .iter()
        .map(|v| report::ViolationJson {
            pair: report::pair(&v.pair),
            line: plan.line_of(v.index),
            kind: match v.kind {
                mindswap_core::machine::ViolationKind::UsedInHistory => "used-in-log".into(),
                mindswap_core::machine::ViolationKind::RepeatedInPlan => "repeated-in-plan".into(),
            },
        })
        .collect();

    if json {
        print_json(&report::SimulateReport {
            restored: verdict.restored,
            log_swaps: log.len(),
            plan_swaps: plan.len(),
            total_swaps: log.len() + plan.len(),
            violations,
        });
    } else {
        println!("log: {} swaps, displacement {}", log.len(), state.displacement());
        println!("plan: {} swaps", plan.len());
        for v in &verdict.violations {
            println!(
                "violation: pair {} at line {} of {} ({})",
                v.pair,
                plan.line_of(v.index),
                plan_path.display(),
                match v.kind {
                    mindswap_core::machine::ViolationKind::UsedInHistory => "already used in log",
                    mindswap_core::machine::ViolationKind::RepeatedInPlan => "repeated in plan",
                }
            );
        }
        println!(
            "verdict: {}, {} total swaps",
            if verdict.restored { "restored" } else { "not restored" },
            log.len() + plan.len()
        );
    }

    if verdict.is_valid() {
        Ok(())
    } else {
        let mut reasons = Vec::new();
        if !verdict.restored {
            reasons.push("not everyone is home".to_string());
        }
        if !verdict.violations.is_empty() {
            reasons.push(format!("{} pair-reuse violations", verdict.violations.len()));
        }
        Err(CliError::Constraint(reasons.join("; ")))
    }
}
