//! Complexity minimization over twist sequences, conjugator search and partition twists.

use std::collections::{HashMap, HashSet};

use crate::complexity::{complexity, ComplexityValue};
use crate::error::{CoxError, Result};
use crate::graph::{Gen, GenSet};
use crate::marking::{component_halfspace, core_component_halfspace, GeneratingSet};
use crate::twist::{apply_twist_generators, enumerate_twists, validate_twist, ElementaryTwist};
use crate::word::{Element, Group, ProductOrder};

/// Bounds for [`minimize_complexity`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchLimits {
    pub depth: usize,
    /// Nodes kept per level, ranked by complexity then by twist sequence.
    pub beam: Option<usize>,
    /// Total generating sets evaluated.
    pub cap: usize,
}

impl Default for SearchLimits {
    fn default() -> Self {
        SearchLimits {
            depth: 8,
            beam: None,
            cap: 100_000,
        }
    }
}

pub struct Minimization<'g> {
    pub best: GeneratingSet<'g>,
    pub value: ComplexityValue,
    pub sequence: Vec<ElementaryTwist>,
    pub start_value: ComplexityValue,
    pub evaluated: usize,
    /// Twists with `|J| ≥ 3` that were found and not applied.
    pub skipped_large: usize,
    /// Nodes dropped because a bounded computation ran out.
    pub exhausted: usize,
    /// False when a cap, the beam, the depth or an exhausted node cut the search short.
    pub complete: bool,
}

struct Node<'g> {
    gs: GeneratingSet<'g>,
    value: ComplexityValue,
    sequence: Vec<ElementaryTwist>,
}

fn is_resource_error(e: &CoxError) -> bool {
    matches!(
        e,
        CoxError::RadiusExhausted { .. }
            | CoxError::CapExhausted { .. }
            | CoxError::InconclusiveRadius { .. }
    )
}

/// Breadth-first search over generator-level twist sequences with `|J| ≤ 2`, stopping at the
/// first level that reaches `(0, 0)`.
pub fn minimize_complexity<'g>(
    gs: &GeneratingSet<'g>,
    limits: SearchLimits,
) -> Result<Minimization<'g>> {
    gs.check_pipeline()?;
    let start_value = complexity(gs)?;
    let start = Node {
        gs: clone_set(gs)?,
        value: start_value,
        sequence: Vec::new(),
    };
    let mut seen: HashSet<Vec<Element>> = HashSet::from([gs.key()]);
    let mut best = Node {
        gs: clone_set(gs)?,
        value: start_value,
        sequence: Vec::new(),
    };
    let mut frontier = vec![start];
    let (mut evaluated, mut skipped_large, mut exhausted) = (1usize, 0usize, 0usize);
    let mut complete = true;
    let mut level = 0;
    while best.value != ComplexityValue::default() && !frontier.is_empty() {
        if level == limits.depth {
            complete = false;
            break;
        }
        level += 1;
        let mut next: Vec<Node<'g>> = Vec::new();
        'expand: for node in &frontier {
            for tau in enumerate_twists(node.gs.graph()) {
                if tau.j.len() > 2 {
                    skipped_large += 1;
                    continue;
                }
                let child = apply_twist_generators(&node.gs, tau)?;
                if !seen.insert(child.key()) {
                    continue;
                }
                if evaluated >= limits.cap {
                    complete = false;
                    break 'expand;
                }
                evaluated += 1;
                let value = match complexity(&child) {
                    Ok(v) => v,
                    Err(e) if is_resource_error(&e) => {
                        exhausted += 1;
                        complete = false;
                        continue;
                    }
                    Err(e) => return Err(e),
                };
                let mut sequence = node.sequence.clone();
                sequence.push(tau);
                next.push(Node {
                    gs: child,
                    value,
                    sequence,
                });
            }
        }
        next.sort_by(|x, y| {
            x.value
                .cmp(&y.value)
                .then_with(|| x.sequence.cmp(&y.sequence))
        });
        if let Some(first) = next.first() {
            if first.value < best.value {
                best = Node {
                    gs: clone_set(&first.gs)?,
                    value: first.value,
                    sequence: first.sequence.clone(),
                };
            }
        }
        if let Some(beam) = limits.beam {
            if next.len() > beam {
                next.truncate(beam);
                complete = false;
            }
        }
        frontier = next;
    }
    Ok(Minimization {
        best: best.gs,
        value: best.value,
        sequence: best.sequence,
        start_value,
        evaluated,
        skipped_large,
        exhausted,
        complete,
    })
}

fn clone_set<'g>(gs: &GeneratingSet<'g>) -> Result<GeneratingSet<'g>> {
    GeneratingSet::with_graph(
        gs.ambient(),
        gs.graph().clone(),
        gs.elements().to_vec(),
        *gs.params(),
    )
}

/// Least-length `w` (ShortLex among equals) with `w·S·w⁻¹ = target` as sets.
pub fn find_conjugator(
    g: &Group,
    s: &[Element],
    target: &[Element],
    radius: usize,
    cap: usize,
) -> Result<Element> {
    let goal: HashSet<Element> = target.iter().copied().collect();
    if goal.len() != s.len() {
        return Err(CoxError::Invalid(
            "sets of different sizes are never conjugate".into(),
        ));
    }
    g.enumerate_ball(radius, cap)?
        .into_iter()
        .find(|&w| s.iter().all(|&x| goal.contains(&g.conjugate(w, x))))
        .ok_or(CoxError::RadiusExhausted { radius })
}

/// Every spherical pair of `S` is conjugate into `target` by a single element.
///
/// `Ok(false)` is returned only when some pair's product order occurs in no pair of `target`;
/// a pair left unresolved inside the ball yields `RadiusExhausted`.
pub fn angle_compatible_check(
    gs: &GeneratingSet,
    target: &[Element],
    radius: usize,
) -> Result<bool> {
    let g = gs.ambient();
    let cutoff = gs.params().cutoff;
    let mut by_order: HashMap<u32, Vec<(Element, Element)>> = HashMap::new();
    for (i, &x) in target.iter().enumerate() {
        for &y in &target[i + 1..] {
            if let ProductOrder::Finite(m) = g.product_order(x, y, cutoff) {
                by_order.entry(m).or_default().push((x, y));
            }
        }
    }
    let goal: HashSet<Element> = target.iter().copied().collect();
    let ball = g.enumerate_ball(radius, gs.params().cap)?;
    let graph = gs.graph();
    for a in graph.gens() {
        for b in graph.gens().filter(|b| b.0 > a.0) {
            let Some(m) = graph.m(a, b) else { continue };
            if !by_order.contains_key(&m) {
                return Ok(false);
            }
            let (x, y) = (gs.element(a), gs.element(b));
            if !ball
                .iter()
                .any(|&w| goal.contains(&g.conjugate(w, x)) && goal.contains(&g.conjugate(w, y)))
            {
                return Err(CoxError::RadiusExhausted { radius });
            }
        }
    }
    Ok(true)
}

/// The twist with the given `J` and conjugated side `B`, checked to respect components.
pub fn partition_twist(gs: &GeneratingSet, j: GenSet, b: GenSet) -> Result<ElementaryTwist> {
    let tau = ElementaryTwist { j, b };
    validate_twist(gs.graph(), tau)?;
    Ok(tau)
}

/// Groups components of `S \ ({s,t} ∪ {s,t}⊥)` by `Φ_s^{t,A}`; `B` is the group missing the
/// least generator.
pub fn pair_partition_twist(gs: &GeneratingSet, s: Gen, t: Gen) -> Result<ElementaryTwist> {
    let st = GenSet::single(s).with(t);
    let g = gs.graph();
    let groups = group_components(g.components(g.outside(st)), |a| {
        component_halfspace(gs, s, t, a)
    })?;
    let b = match groups.as_slice() {
        [first, second] => {
            if first.0.first() < second.0.first() {
                second.0
            } else {
                first.0
            }
        }
        _ => {
            return Err(CoxError::Invalid(format!(
                "all components of {} share one halfspace",
                g.fmt_set(st)
            )))
        }
    };
    partition_twist(gs, st, b)
}

/// Groups components of `S \ (s ∪ s⊥)` by `Φ_s^A`; `B` is the smaller group, or the one missing
/// the least generator on a tie.
pub fn core_partition_twist(gs: &GeneratingSet, s: Gen) -> Result<ElementaryTwist> {
    let single = GenSet::single(s);
    let g = gs.graph();
    let groups = group_components(g.components(g.outside(single)), |a| {
        core_component_halfspace(gs, s, a)
    })?;
    let b = match groups.as_slice() {
        [x, y] => {
            let key = |p: &(GenSet, usize)| (std::cmp::Reverse(p.1), p.0.first());
            if key(x) > key(y) {
                x.0
            } else {
                y.0
            }
        }
        _ => {
            return Err(CoxError::Invalid(format!(
                "all components of {} share one halfspace",
                g.fmt_set(single)
            )))
        }
    };
    partition_twist(gs, single, b)
}

/// Unions of components per halfspace value, with the number of components in each.
fn group_components<H: PartialEq>(
    comps: Vec<GenSet>,
    mut halfspace: impl FnMut(GenSet) -> Result<H>,
) -> Result<Vec<(GenSet, usize)>> {
    let mut groups: Vec<(H, GenSet, usize)> = Vec::new();
    for a in comps {
        let h = halfspace(a)?;
        match groups.iter_mut().find(|(k, _, _)| *k == h) {
            Some(entry) => {
                entry.1 = entry.1.union(a);
                entry.2 += 1;
            }
            None => groups.push((h, a, 1)),
        }
    }
    Ok(groups.into_iter().map(|(_, set, n)| (set, n)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::marking::{doubles_consistent, tests::twisted_q3};
    use crate::params::Params;

    #[test]
    fn conjugator_of_a_conjugate_set() {
        let g = Group::new(catalog::q3());
        let s: Vec<Element> = g.graph().gens().map(|x| g.generator(x)).collect();
        assert_eq!(
            find_conjugator(&g, &s, &s, 4, 10_000).unwrap(),
            g.identity()
        );
        let w = g.parse("s t").unwrap();
        let conj: Vec<Element> = s.iter().map(|&x| g.conjugate(w, x)).collect();
        let found = find_conjugator(&g, &conj, &s, 6, 10_000).unwrap();
        assert_eq!(g.length(found), 2);
        assert_eq!(found, g.inverse(w));
    }

    #[test]
    fn twisted_q3_is_not_conjugate_within_small_radius() {
        let g = Group::new(catalog::q3());
        let gs = twisted_q3(&g);
        let s: Vec<Element> = g.graph().gens().map(|x| g.generator(x)).collect();
        assert_eq!(
            find_conjugator(&g, gs.elements(), &s, 6, 100_000),
            Err(CoxError::RadiusExhausted { radius: 6 })
        );
    }

    #[test]
    fn angle_compatibility() {
        let g = Group::new(catalog::q3());
        let s: Vec<Element> = g.graph().gens().map(|x| g.generator(x)).collect();
        let standard = GeneratingSet::standard(&g, Params::default());
        assert!(angle_compatible_check(&standard, &s, 4).unwrap());
        assert!(angle_compatible_check(&twisted_q3(&g), &s, 6).unwrap());

        let d = Group::new(catalog::dihedral(6));
        let std6: Vec<Element> = d.graph().gens().map(|x| d.generator(x)).collect();
        let els = vec![d.parse("s").unwrap(), d.parse("t s t").unwrap()];
        let odd = GeneratingSet::from_elements(&d, &["x", "y"], els, Params::default()).unwrap();
        assert_eq!(odd.graph().m(Gen(0), Gen(1)), Some(3));
        assert!(!angle_compatible_check(&odd, &std6, 6).unwrap());
    }

    #[test]
    fn partition_twist_restores_q3() {
        let g = Group::new(catalog::q3());
        let gs = twisted_q3(&g);
        let (s, t) = (gs.graph().gen("s").unwrap(), gs.graph().gen("t").unwrap());
        assert!(!doubles_consistent(&gs, s, t).unwrap());
        let tau = pair_partition_twist(&gs, s, t).unwrap();
        assert_eq!(tau.b, gs.graph().subset(&["b"]).unwrap());
        let back = apply_twist_generators(&gs, tau).unwrap();
        assert_eq!(
            back.key(),
            GeneratingSet::standard(&g, Params::default()).key()
        );
        assert!(complexity(&back).unwrap() < complexity(&gs).unwrap());

        let standard = GeneratingSet::standard(&g, Params::default());
        assert!(matches!(
            pair_partition_twist(&standard, s, t),
            Err(CoxError::Invalid(_))
        ));
        assert!(partition_twist(
            &standard,
            GenSet::single(s).with(t),
            gs.graph().subset(&["a", "b"]).unwrap()
        )
        .is_err());
    }

    #[test]
    fn minimization_of_twisted_q3() {
        let g = Group::new(catalog::q3());
        let gs = twisted_q3(&g);
        let out = minimize_complexity(&gs, SearchLimits::default()).unwrap();
        assert_eq!(out.value, ComplexityValue::default());
        assert_eq!(out.sequence.len(), 1);
        assert!(out.complete);
        let s: Vec<Element> = g.graph().gens().map(|x| g.generator(x)).collect();
        find_conjugator(&g, out.best.elements(), &s, 8, 100_000).unwrap();

        let standard = GeneratingSet::standard(&g, Params::default());
        let same = minimize_complexity(&standard, SearchLimits::default()).unwrap();
        assert!(same.sequence.is_empty() && same.evaluated == 1);
    }
}
