//! Named instance checks of the structural results the toolkit relies on.

use std::collections::BTreeMap;
use std::fmt;

use itertools::Itertools;

use crate::catalog;
use crate::classify::{
    irreducible_spherical_subsets, is_fc, is_spherical, maximal_spherical_subsets,
};
use crate::error::{CoxError, Result};
use crate::folding::{folded_map, standard_folding, FoldingKind};
use crate::graph::{DefiningGraph, GenSet};
use crate::marking::{
    bases_with_core, delta, delta_pair, doubles, doubles_consistent, is_base, is_exposed,
    is_good_element, is_good_pair, k_support, make_marking, marking_halfspace, markings_with_core,
    move_equivalent, move_neighbors, peripheral_doubles, simple_base, simple_markings, Base,
    GeneratingSet, Marking,
};
use crate::params::Params;
use crate::roots::f4_root_identity;
use crate::twist::{
    apply_twist_generators, enumerate_twists, exposedness_failures, is_k_rigid, weakly_separates,
};
use crate::word::Group;

/// Names accepted by [`run`].
pub const CHECKS: &[&str] = &[
    "f4-roots",
    "move-invariance",
    "component-markings",
    "k-support",
    "good-exposed",
    "twist-labels",
    "exposed-preserved",
    "fold-lemma",
    "doubles",
    "delta-independence",
];

#[derive(Debug, Clone, Default)]
pub struct CheckReport {
    pub name: String,
    pub lines: Vec<String>,
    pub checked: usize,
    pub failures: Vec<String>,
}

impl CheckReport {
    fn new(name: &str) -> CheckReport {
        CheckReport {
            name: name.into(),
            ..Default::default()
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    fn expect(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failures.push(what());
        }
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "check: {}", self.name)?;
        for l in &self.lines {
            writeln!(f, "  {l}")?;
        }
        for x in &self.failures {
            writeln!(f, "  FAIL {x}")?;
        }
        writeln!(
            f,
            "{}: {} cases, {} failures",
            if self.passed() { "PASS" } else { "FAIL" },
            self.checked,
            self.failures.len()
        )
    }
}

pub fn run(name: &str, params: Params) -> Result<CheckReport> {
    match name {
        "f4-roots" => f4_roots(),
        "move-invariance" => move_invariance(&["Q3", "Q4", "Q5", "E1"], params),
        "component-markings" => component_markings(&rigid_names(), params),
        "k-support" => k_support_components(&rigid_names(), params),
        "good-exposed" => good_exposed(&rigid_names()),
        "twist-labels" => twist_labels(params),
        "exposed-preserved" => exposed_preserved(),
        "fold-lemma" => fold_lemma(&["Q3", "Q4", "Q5"], 6, params),
        "doubles" => doubles_check(params),
        "delta-independence" => delta_independence(&rigid_names(), params),
        _ => Err(CoxError::Invalid(format!(
            "unknown check {name:?}; known: {}",
            CHECKS.join(", ")
        ))),
    }
}

/// Catalog instances that are 3-rigid, irreducible, non-spherical and FC.
pub fn rigid_names() -> Vec<&'static str> {
    catalog::all()
        .into_iter()
        .filter(|(_, g)| {
            let all = g.all();
            is_k_rigid(g, 3) && g.is_irreducible(all) && !is_spherical(g, all) && is_fc(g)
        })
        .map(|(n, _)| n)
        .collect()
}

fn graph(name: &str) -> Result<DefiningGraph> {
    catalog::by_name(name).ok_or_else(|| CoxError::Invalid(format!("unknown instance {name}")))
}

/// Calls `f` on the standard set of each instance and on its image under every twist with `|J| ≤ 2`.
pub fn for_each_set(
    names: &[&str],
    params: Params,
    mut f: impl FnMut(&str, &GeneratingSet) -> Result<()>,
) -> Result<()> {
    for &name in names {
        let g = Group::new(graph(name)?);
        let gs = GeneratingSet::standard(&g, params);
        f(name, &gs)?;
        for tau in enumerate_twists(gs.graph())
            .into_iter()
            .filter(|t| t.j.len() <= 2)
        {
            let twisted = apply_twist_generators(&gs, tau)?;
            f(
                &format!("{name} twisted by {}", tau.display(gs.graph())),
                &twisted,
            )?;
        }
    }
    Ok(())
}

pub fn f4_roots() -> Result<CheckReport> {
    let mut report = CheckReport::new("f4-roots");
    match f4_root_identity() {
        Ok(r) => {
            report.lines.extend(r.to_string().lines().map(String::from));
            report.checked = r.identities.len() + 2;
        }
        Err(e) => report.failures.push(e.to_string()),
    }
    Ok(report)
}

/// Every M1/M2 edge between markings joins markings with the same halfspace.
pub fn move_invariance(names: &[&str], params: Params) -> Result<CheckReport> {
    let mut report = CheckReport::new("move-invariance");
    for_each_set(names, params, |label, gs| {
        let mut edges = 0;
        for s in gs.graph().gens() {
            for mu in markings_with_core(gs, s)? {
                let h = marking_halfspace(gs, mu)?;
                for nu in move_neighbors(gs, mu) {
                    edges += 1;
                    let same = marking_halfspace(gs, nu)? == h;
                    report.expect(same, || {
                        format!("{label}: {} -> {}", mu.display(gs), nu.display(gs))
                    });
                }
            }
        }
        report.lines.push(format!("{label}: {edges} move edges"));
        Ok(())
    })?;
    Ok(report)
}

/// Markings `((s, w·wᵢ), mᵢ)` extending a base `(s, w)` with support `I`, where `wᵢ` multiplies
/// distinct letters of `Jᵢ \ I` and no irreducible spherical proper superset of `I` weakly
/// separates: those whose `Kᵢ` share a component of `S \ (I ∪ I⊥)` are move-equivalent and
/// share their halfspace.
pub fn component_markings(names: &[&str], params: Params) -> Result<CheckReport> {
    let mut report = CheckReport::new("component-markings");
    for_each_set(names, params, |label, gs| {
        let g = gs.graph();
        let reference = gs.reference();
        let irreducible = irreducible_spherical_subsets(g);
        let mut count = 0;
        for s in g.gens() {
            let bases = bases_with_core(gs, s)?;
            for &i in irreducible.iter().filter(|i| i.contains(s)) {
                if irreducible
                    .iter()
                    .any(|&j| j != i && i.is_subset(j) && weakly_separates(g, j))
                {
                    continue;
                }
                let comps = g.components(g.outside(i));
                for base in bases.iter().filter(|b| b.support(gs) == i) {
                    let mut groups: BTreeMap<usize, Vec<Marking>> = BTreeMap::new();
                    for &j in irreducible.iter().filter(|j| i.is_subset(**j)) {
                        let extra = j.minus(i).to_vec();
                        for k in 0..=extra.len() {
                            for letters in extra.iter().copied().permutations(k) {
                                let w = letters
                                    .iter()
                                    .fold(base.w, |acc, &x| reference.mul_gen(acc, x));
                                if !is_base(gs, s, w) {
                                    continue;
                                }
                                let extended = Base { core: s, w };
                                if extended.support(gs) != j {
                                    continue;
                                }
                                for m in g.gens() {
                                    let Ok(mu) = make_marking(gs, extended, m) else {
                                        continue;
                                    };
                                    let kset = if j == i {
                                        GenSet::single(m)
                                    } else {
                                        j.minus(i.union(g.perp(i)))
                                    };
                                    if let Some(c) = comps.iter().position(|c| kset.is_subset(*c)) {
                                        groups.entry(c).or_default().push(mu);
                                    }
                                }
                            }
                        }
                    }
                    for members in groups.values() {
                        let first = members[0];
                        let h = marking_halfspace(gs, first)?;
                        for &mu in &members[1..] {
                            count += 1;
                            let ok =
                                move_equivalent(gs, first, mu)? && marking_halfspace(gs, mu)? == h;
                            report.expect(ok, || {
                                format!("{label}: {} vs {}", first.display(gs), mu.display(gs))
                            });
                        }
                    }
                }
            }
        }
        report
            .lines
            .push(format!("{label}: {count} same-component comparisons"));
        Ok(())
    })?;
    Ok(report)
}

/// `K^μ_I` of a simple marking is nonempty and lies in exactly one component of `S \ (I ∪ I⊥)`.
pub fn k_support_components(names: &[&str], params: Params) -> Result<CheckReport> {
    let mut report = CheckReport::new("k-support");
    for_each_set(names, params, |label, gs| {
        let g = gs.graph();
        for s in g.gens() {
            for mu in simple_markings(gs, s, GenSet::single(s))? {
                let j = mu.support(gs);
                for i in irreducible_spherical_subsets(g)
                    .into_iter()
                    .filter(|i| i.contains(s) && i.is_subset(j))
                {
                    let k = k_support(gs, mu, i);
                    let owners = g
                        .components(g.outside(i))
                        .into_iter()
                        .filter(|c| k.is_subset(*c))
                        .count();
                    report.expect(!k.is_empty() && (j == i || owners == 1), || {
                        format!(
                            "{label}: K of {} over {} is {}",
                            mu.display(gs),
                            g.fmt_set(i),
                            g.fmt_set(k)
                        )
                    });
                }
            }
        }
        Ok(())
    })?;
    Ok(report)
}

/// A good pair has a good element; if no non-commuting pair of `L` is good for `r`, `L` is exposed.
pub fn good_exposed(names: &[&str]) -> Result<CheckReport> {
    let mut report = CheckReport::new("good-exposed");
    for &name in names {
        let g = graph(name)?;
        let mut cases = 0;
        for l in irreducible_spherical_subsets(&g) {
            for r in g.gens().filter(|&r| !is_spherical(&g, l.with(r))) {
                let mut any_good = false;
                for s in l.iter() {
                    for t in l.iter().filter(|&t| t.0 > s.0 && g.diagram_edge(s, t)) {
                        cases += 1;
                        if is_good_pair(&g, l, s, t, r) {
                            any_good = true;
                            let ok = is_good_element(&g, l, s, r) || is_good_element(&g, l, t, r);
                            report.expect(ok, || {
                                format!(
                                    "{name}: {{{},{}}} good for {} without a good element",
                                    g.name(s),
                                    g.name(t),
                                    g.name(r)
                                )
                            });
                        }
                    }
                }
                report.expect(any_good || is_exposed(&g, l), || {
                    format!(
                        "{name}: {} has no good pair for {} but is not exposed",
                        g.fmt_set(l),
                        g.name(r)
                    )
                });
            }
        }
        report
            .lines
            .push(format!("{name}: {cases} (L, pair, r) cases"));
    }
    Ok(report)
}

/// Twisted labels agree with product orders of the twisted generators, and FC is preserved.
pub fn twist_labels(params: Params) -> Result<CheckReport> {
    let mut report = CheckReport::new("twist-labels");
    for (name, graph) in catalog::all() {
        let g = Group::new(graph);
        let gs = GeneratingSet::standard(&g, params);
        let twists = enumerate_twists(gs.graph());
        for &tau in &twists {
            let twisted = apply_twist_generators(&gs, tau);
            report.expect(twisted.is_ok(), || {
                format!(
                    "{name} {}: {}",
                    tau.display(gs.graph()),
                    twisted
                        .as_ref()
                        .err()
                        .map(ToString::to_string)
                        .unwrap_or_default()
                )
            });
            if let Ok(t) = twisted {
                report.expect(is_fc(t.graph()) == is_fc(gs.graph()), || {
                    format!("{name} {}: FC changed", tau.display(gs.graph()))
                });
            }
        }
        report
            .lines
            .push(format!("{name}: {} twists", twists.len()));
    }
    Ok(report)
}

/// Exposed parts of size three stay exposed after every twist.
pub fn exposed_preserved() -> Result<CheckReport> {
    let mut report = CheckReport::new("exposed-preserved");
    for (name, g) in catalog::all() {
        for tau in enumerate_twists(&g) {
            let bad = exposedness_failures(&g, tau)?;
            report.expect(bad.is_empty(), || {
                format!(
                    "{name} {}: {} parts lose exposedness",
                    tau.display(&g),
                    bad.len()
                )
            });
        }
    }
    Ok(report)
}

/// For the standard foldings of every double, on both fundamental domains: the folded map does
/// not increase gallery distance, with equality exactly when `f` is injective on some path.
pub fn fold_lemma(names: &[&str], radius: usize, params: Params) -> Result<CheckReport> {
    let mut report = CheckReport::new("fold-lemma");
    for &name in names {
        let g = Group::new(graph(name)?);
        let gs = GeneratingSet::standard(&g, params);
        let ball = g.enumerate_ball(radius, params.cap)?;
        for (s, t) in doubles(gs.graph()) {
            let m = gs.graph().m(s, t).unwrap_or(0);
            let mut kinds = vec![if m % 2 == 1 {
                FoldingKind::Odd
            } else {
                FoldingKind::Even
            }];
            if m == 3 {
                kinds.push(FoldingKind::Example);
            }
            let (d1, d2) = gs.domains(GenSet::single(s).with(t))?;
            for kind in kinds {
                let f = standard_folding(&g, gs.element(s), gs.element(t), kind, params.cutoff)?;
                for v in [&d1, &d2] {
                    let images: Vec<_> = ball
                        .iter()
                        .map(|&c| Ok((f.locate(&g, v, c)?, folded_map(&g, &f, v, c)?)))
                        .collect::<Result<_>>()?;
                    for i in 0..ball.len() {
                        for j in i..ball.len() {
                            let (d, fd) = (
                                g.distance(ball[i], ball[j]),
                                g.distance(images[i].1, images[j].1),
                            );
                            let inj = f.injective_on_some_path(images[i].0, images[j].0);
                            report.expect(fd < d || (fd == d && inj), || {
                                format!("{name} {kind:?} {}{}: {} {} (d={d}, folded={fd}, injective={inj})", gs.graph().name(s), gs.graph().name(t), g.fmt(ball[i]), g.fmt(ball[j]))
                            });
                        }
                    }
                }
            }
        }
        report.lines.push(format!(
            "{name}: ball of radius {radius} has {} chambers",
            ball.len()
        ));
    }
    Ok(report)
}

/// Standard sets have consistent doubles; twisted Q3 has the peripheral inconsistent double `{s,t}`.
pub fn doubles_check(params: Params) -> Result<CheckReport> {
    let mut report = CheckReport::new("doubles");
    for name in rigid_names() {
        let g = Group::new(graph(name)?);
        let gs = GeneratingSet::standard(&g, params);
        for (s, t) in doubles(gs.graph()) {
            let ok = doubles_consistent(&gs, s, t)?;
            report.expect(ok, || {
                format!(
                    "{name}: standard double {{{},{}}} inconsistent",
                    gs.graph().name(s),
                    gs.graph().name(t)
                )
            });
        }
    }
    let g = Group::new(catalog::q3());
    let gs = GeneratingSet::standard(&g, params);
    let st = gs.graph().subset(&["s", "t"])?;
    let b = gs.graph().subset(&["b"])?;
    let twisted = apply_twist_generators(&gs, crate::twist::ElementaryTwist { j: st, b })?;
    let (s, t) = (gs.graph().gen_or_err("s")?, gs.graph().gen_or_err("t")?);
    report.expect(!doubles_consistent(&twisted, s, t)?, || {
        "twisted Q3: {s,t} is consistent".into()
    });
    let peripheral = peripheral_doubles(&twisted)?;
    report.expect(peripheral == vec![(s, t)], || {
        format!("twisted Q3: peripheral doubles {peripheral:?}")
    });
    report
        .lines
        .push("twisted Q3: {s,t} inconsistent and peripheral".into());
    Ok(report)
}

/// Selected domains agree across good pairs and across non-leaf cores.
pub fn delta_independence(names: &[&str], params: Params) -> Result<CheckReport> {
    let mut report = CheckReport::new("delta-independence");
    for_each_set(names, params, |label, gs| {
        let g = gs.graph();
        for l in irreducible_spherical_subsets(g)
            .into_iter()
            .filter(|l| l.len() >= 2)
        {
            for i in maximal_spherical_subsets(g)? {
                let mut picks = Vec::new();
                for r in i.iter() {
                    for s in l.iter() {
                        for t in l
                            .iter()
                            .filter(|&t| t.0 > s.0 && is_good_pair(g, l, s, t, r))
                        {
                            match delta_pair(gs, l, s, t, r) {
                                Ok(d) => picks.push(d),
                                Err(e) => report
                                    .expect(false, || format!("{label}: {}: {e}", g.fmt_set(l))),
                            }
                        }
                    }
                }
                if let Some(first) = picks.first() {
                    let ok = picks.iter().all(|d| d == first);
                    report.expect(ok, || {
                        format!(
                            "{label}: {} towards {} depends on the pair",
                            g.fmt_set(l),
                            g.fmt_set(i)
                        )
                    });
                }
            }
            if l.len() < 3 {
                continue;
            }
            for r in g.gens().filter(|&r| !is_spherical(g, l.with(r))) {
                let cores: Vec<_> = l
                    .iter()
                    .filter(|&x| l.iter().filter(|&y| y != x && g.diagram_edge(x, y)).count() >= 2)
                    .collect();
                let mut picks = Vec::new();
                for &s in &cores {
                    let mu = make_marking(gs, simple_base(gs, s, l)?, r)?;
                    picks.push(delta(gs, mu, l)?);
                }
                if let Some(first) = picks.first() {
                    let ok = picks.iter().all(|d| d == first);
                    report.expect(ok, || {
                        format!(
                            "{label}: Δ for {} and {} depends on the core",
                            g.fmt_set(l),
                            g.name(r)
                        )
                    });
                }
            }
        }
        report.lines.push(format!("{label}: done"));
        Ok(())
    })?;
    Ok(report)
}
