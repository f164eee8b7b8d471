//! Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use twistcox::marking::doubles_consistent;
use twistcox::roots::f4_root_identity;
use twistcox::search::pair_partition_twist;
use twistcox::twist::{apply_twist_generators, enumerate_twists};
use twistcox::verify::{self, rigid_names, CheckReport};
use twistcox::{
    catalog, classify, complexity, find_conjugator, minimize_complexity, ComplexityValue, Gen,
    GeneratingSet, Group, Params, SearchLimits,
};

use common::{
    brute_complexity, brute_order, cosine_positive_definite, word_determinant, FLOAT_TOL, ORDER_CAP,
};

const BUDGETS_SECS: [u64; 10] = [1, 60, 60, 120, 120, 60, 120, 300, 300, 600];
const BRAID_TRIALS: usize = 1000;
const PARITY_RADIUS: usize = 6;
const INVERSION_RADIUS: usize = 4;
const FOLD_RADIUS: usize = 6;
const CONJUGATOR_RADIUS: usize = 8;
const SEQUENCES_PER_INSTANCE: usize = 3;
const MAX_DEPTH: usize = 3;
const SEED: u64 = 0x7715_7c0c;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn check(report: twistcox::Result<CheckReport>) -> Result<usize, String> {
    let report = report.map_err(|e| e.to_string())?;
    ensure(report.passed(), || {
        format!("{}: {}", report.name, report.failures.join("; "))
    })?;
    Ok(report.checked)
}

fn f4_roots() -> Outcome {
    let report = f4_root_identity().map_err(|e| e.to_string())?;
    ensure(report.passed(), || report.to_string())?;
    Ok(format!(
        "{} identities and the final sum hold exactly",
        report.identities.len()
    ))
}

fn classification() -> Outcome {
    let mut subsets = 0;
    for (name, g) in catalog::all() {
        for j in g.all().subsets().filter(|j| !j.is_empty()) {
            subsets += 1;
            let t = classify(&g, j);
            let brute = brute_order(&g, j, ORDER_CAP);
            match (t.order(), brute) {
                (Some(a), Some(b)) => ensure(a == b as u128, || {
                    format!("{name} {}: order {a} vs oracle {b}", g.fmt_set(j))
                })?,
                (None, None) => {}
                (Some(a), None) => ensure(a > ORDER_CAP as u128, || {
                    format!(
                        "{name} {}: finite {a} but oracle exceeded cap",
                        g.fmt_set(j)
                    )
                })?,
                (None, Some(b)) => {
                    return Err(format!(
                        "{name} {}: infinite but oracle found {b}",
                        g.fmt_set(j)
                    ))
                }
            }
            if j.len() <= 4 {
                ensure(cosine_positive_definite(&g, j) == t.is_finite(), || {
                    format!("{name} {}: Sylvester disagrees", g.fmt_set(j))
                })?;
            }
        }
    }
    let mut known: Vec<(String, twistcox::DefiningGraph, u128)> = (2..=6)
        .map(|m| (format!("I2({m})"), catalog::dihedral(m), 2 * m as u128))
        .collect();
    known.push(("A3".into(), catalog::linear(&[3, 3]), 24));
    known.push(("B3".into(), catalog::linear(&[4, 3]), 48));
    known.push(("H3".into(), catalog::linear(&[5, 3]), 120));
    known.push(("F4".into(), catalog::linear(&[3, 4, 3]), 1152));
    for (name, g, order) in &known {
        let all = g.all();
        ensure(classify(g, all).order() == Some(*order), || {
            format!("{name}: classify gives {:?}", classify(g, all).order())
        })?;
        ensure(
            brute_order(g, all, ORDER_CAP) == Some(*order as usize),
            || format!("{name}: oracle disagrees"),
        )?;
        ensure(cosine_positive_definite(g, all), || {
            format!("{name}: cosine matrix not positive definite")
        })?;
    }
    Ok(format!(
        "{subsets} catalog subsets and {} known orders agree with both oracles",
        known.len()
    ))
}

fn braid_move(g: &twistcox::DefiningGraph, w: &mut [Gen], p: usize) -> bool {
    if p + 1 >= w.len() || w[p] == w[p + 1] {
        return false;
    }
    let (a, b) = (w[p], w[p + 1]);
    let Some(m) = g.m(a, b).map(|m| m as usize) else {
        return false;
    };
    if p + m > w.len() || (0..m).any(|i| w[p + i] != if i % 2 == 0 { a } else { b }) {
        return false;
    }
    for i in 0..m {
        w[p + i] = if i % 2 == 0 { b } else { a };
    }
    true
}

fn word_engine() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let (mut moves, mut walls) = (0usize, 0usize);
    for (name, graph) in catalog::all() {
        let g = Group::new(graph.clone());
        let gens: Vec<Gen> = graph.gens().collect();
        for _ in 0..BRAID_TRIALS {
            let random: Vec<Gen> = (0..rng.gen_range(4..16))
                .map(|_| *gens.choose(&mut rng).unwrap())
                .collect();
            let x = g.canonicalize(&random).map_err(|e| e.to_string())?;
            let mut w = g.word(x);
            for _ in 0..20 {
                let p = rng.gen_range(0..w.len().max(1));
                if braid_move(&graph, &mut w, p) {
                    moves += 1;
                }
            }
            ensure(g.canonicalize(&w).ok() == Some(x), || {
                format!("{name}: braid moves changed {}", g.fmt(x))
            })?;
            let s = *gens.choose(&mut rng).unwrap();
            let mut cancelling = w.clone();
            let p = rng.gen_range(0..=w.len());
            cancelling.splice(p..p, [s, s]);
            ensure(g.canonicalize(&cancelling).ok() == Some(x), || {
                format!("{name}: inserting a cancelling pair changed {}", g.fmt(x))
            })?;
            w.insert(rng.gen_range(0..=w.len()), s);
            w.insert(rng.gen_range(0..=w.len()), s);
            let spread = g.canonicalize(&w).map_err(|e| e.to_string())?;
            ensure(g.length(spread) % 2 == g.length(x) % 2, || {
                format!("{name}: parity broken by inserting {}", graph.name(s))
            })?;
        }
        let ball = g
            .enumerate_ball(PARITY_RADIUS, 1_000_000)
            .map_err(|e| e.to_string())?;
        let side = |r, c| g.length(g.multiply(r, c)) > g.length(c);
        for &x in &ball {
            let det = word_determinant(&graph, &g.word(x));
            let sign = if g.length(x).is_multiple_of(2) {
                1.0
            } else {
                -1.0
            };
            ensure((det - sign).abs() < FLOAT_TOL * 1e3, || {
                format!("{name}: det {det} for {}", g.fmt(x))
            })?;
            for &s in &gens {
                let xs = g.mul_gen(x, s);
                ensure(g.length(xs).abs_diff(g.length(x)) == 1, || {
                    format!("{name}: length parity at {}", g.fmt(x))
                })?;
                let r = g.conjugate(x, g.generator(s));
                for &t in &gens {
                    let xt = g.mul_gen(x, t);
                    walls += 1;
                    ensure((side(r, x) != side(r, xt)) == (s == t), || {
                        format!("{name}: wall of {} at {}", g.fmt(r), g.fmt(x))
                    })?;
                }
            }
        }
        let reflections: Vec<_> = g
            .enumerate_ball(2 * INVERSION_RADIUS - 1, 1_000_000)
            .map_err(|e| e.to_string())?
            .into_iter()
            .filter(|&r| g.is_reflection(r))
            .collect();
        for x in g
            .enumerate_ball(INVERSION_RADIUS, 1_000_000)
            .map_err(|e| e.to_string())?
        {
            let separating = reflections
                .iter()
                .filter(|&&r| side(r, g.identity()) != side(r, x))
                .count();
            ensure(separating == g.length(x), || {
                format!("{name}: {} walls separate 1 from {}", separating, g.fmt(x))
            })?;
        }
    }
    Ok(format!("{BRAID_TRIALS} perturbations per instance ({moves} braid moves), {walls} wall-crossing cases"))
}

fn params() -> Params {
    Params::default()
}

fn move_invariance() -> Outcome {
    let n = check(verify::move_invariance(&["Q3", "Q4", "Q5", "E1"], params()))?;
    Ok(format!("{n} move edges, no exceptions"))
}

fn component_markings() -> Outcome {
    let names = rigid_names();
    let a = check(verify::component_markings(&names, params()))?;
    let b = check(verify::k_support_components(&names, params()))?;
    Ok(format!(
        "{a} marking groups and {b} supports on {}",
        names.join(",")
    ))
}

fn good_exposed() -> Outcome {
    let n = check(verify::good_exposed(&rigid_names()))?;
    Ok(format!("{n} (L, pair, r) cases"))
}

fn twist_correctness() -> Outcome {
    let a = check(verify::twist_labels(params()))?;
    let b = check(verify::exposed_preserved())?;
    Ok(format!("{a} twisted label sets, {b} exposedness cases"))
}

fn folding_lemma() -> Outcome {
    let n = check(verify::fold_lemma(
        &["Q3", "Q4", "Q5"],
        FOLD_RADIUS,
        params(),
    ))?;
    Ok(format!("{n} chamber pairs"))
}

fn complexity_pipeline() -> Outcome {
    for (name, graph) in catalog::all() {
        let g = Group::new(graph);
        let k = complexity(&GeneratingSet::standard(&g, params()))
            .map_err(|e| format!("{name}: {e}"))?;
        ensure(k == ComplexityValue::default(), || {
            format!("{name}: standard set has K = {k}")
        })?;
    }
    let g = Group::new(catalog::q3());
    let els: Vec<_> = ["a", "s", "t", "s t s b s t s"]
        .iter()
        .map(|w| g.parse(w).unwrap())
        .collect();
    let gs = GeneratingSet::from_elements(
        &g,
        &["a", "s", "t", "b"],
        els.clone(),
        Params {
            radius: 8,
            ..params()
        },
    )
    .map_err(|e| e.to_string())?;
    let k = complexity(&gs).map_err(|e| e.to_string())?;
    let oracle = brute_complexity(&g, &els, 6);
    ensure((k.k1, k.k2) == oracle, || {
        format!("twisted Q3: K = {k}, oracle {oracle:?}")
    })?;
    ensure(oracle.0 == 4, || format!("oracle K1 = {}", oracle.0))?;
    let (s, t) = (gs.graph().gen("s").unwrap(), gs.graph().gen("t").unwrap());
    ensure(
        !doubles_consistent(&gs, s, t).map_err(|e| e.to_string())?,
        || "double {s,t} is consistent".into(),
    )?;
    let tau = pair_partition_twist(&gs, s, t).map_err(|e| e.to_string())?;
    let after = complexity(&apply_twist_generators(&gs, tau).map_err(|e| e.to_string())?)
        .map_err(|e| e.to_string())?;
    ensure(after < k, || {
        format!("partition twist {} gives {after}", tau.display(gs.graph()))
    })?;
    Ok(format!(
        "standard sets (0, 0); twisted Q3 K = {k} matches oracle; partition twist {} gives {after}",
        tau.display(gs.graph())
    ))
}

fn main_theorem_pipeline() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut runs = Vec::new();
    for (name, graph) in [
        ("Q3", catalog::q3()),
        ("Q4", catalog::q4()),
        ("Q5", catalog::q5()),
    ] {
        let g = Group::new(graph);
        let standard = GeneratingSet::standard(&g, params());
        for _ in 0..SEQUENCES_PER_INSTANCE {
            let depth = rng.gen_range(1..=MAX_DEPTH);
            let mut gs = GeneratingSet::standard(&g, params());
            let mut labels = Vec::new();
            for _ in 0..depth {
                let twists: Vec<_> = enumerate_twists(gs.graph())
                    .into_iter()
                    .filter(|t| t.j.len() <= 2)
                    .collect();
                let Some(&tau) = twists.choose(&mut rng) else {
                    break;
                };
                labels.push(tau.display(gs.graph()));
                gs = apply_twist_generators(&gs, tau).map_err(|e| format!("{name}: {e}"))?;
            }
            let m = minimize_complexity(&gs, SearchLimits::default())
                .map_err(|e| format!("{name} {labels:?}: {e}"))?;
            ensure(m.value == ComplexityValue::default(), || {
                format!("{name} {labels:?}: minimum {}", m.value)
            })?;
            let w = find_conjugator(
                &g,
                m.best.elements(),
                standard.elements(),
                CONJUGATOR_RADIUS,
                1_000_000,
            )
            .map_err(|e| format!("{name} {labels:?}: {e}"))?;
            runs.push(format!(
                "{name}[{}→{} in {}, |w|={}]",
                labels.len(),
                m.start_value,
                m.sequence.len(),
                g.length(w)
            ));
        }
    }
    Ok(runs.join(" "))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("F4 root computation", f4_roots),
        ("classification vs oracle", classification),
        ("word-engine soundness", word_engine),
        ("move invariance", move_invariance),
        ("same-component markings", component_markings),
        ("good/exposed calculus", good_exposed),
        ("twist correctness", twist_correctness),
        ("folding lemma", folding_lemma),
        ("complexity pipeline", complexity_pipeline),
        ("minimization reaches a conjugate", main_theorem_pipeline),
    ];
    let mut failed = 0;
    for (i, ((name, f), budget)) in criteria.into_iter().zip(BUDGETS_SECS).enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|_| Err("panicked".into()));
        let elapsed = start.elapsed();
        let outcome = outcome.and_then(|detail| {
            ensure(elapsed <= Duration::from_secs(budget), || {
                format!("took {elapsed:.1?}, budget {budget}s")
            })?;
            Ok(detail)
        });
        match outcome {
            Ok(detail) => println!(
                "criterion {:>2} PASS {name} ({elapsed:.2?}): {detail}",
                i + 1
            ),
            Err(detail) => {
                failed += 1;
                println!(
                    "criterion {:>2} FAIL {name} ({elapsed:.2?}): {detail}",
                    i + 1
                );
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", 10 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
