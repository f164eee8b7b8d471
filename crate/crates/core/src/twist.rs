//! Elementary twists, rigidity and twist classes of defining graphs.

use std::collections::{HashMap, VecDeque};
use std::fmt;

use itertools::Itertools;

use crate::classify::{irreducible_spherical_subsets, is_spherical, maximal_spherical_subsets};
use crate::error::{CoxError, Result};
use crate::graph::{DefiningGraph, Gen, GenSet, Label};
use crate::marking::{is_exposed, GeneratingSet};
use crate::word::Group;

/// Conjugation of the side `b` of `S \ (J ∪ J⊥)` by the longest element of `J`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ElementaryTwist {
    pub j: GenSet,
    pub b: GenSet,
}

impl ElementaryTwist {
    /// The fixed side `A`.
    pub fn a(&self, g: &DefiningGraph) -> GenSet {
        g.outside(self.j).minus(self.b)
    }

    pub fn display(&self, g: &DefiningGraph) -> String {
        format!("J={} B={}", g.fmt_set(self.j), g.fmt_set(self.b))
    }
}

/// `S \ (J ∪ J⊥)` has at least two components.
pub fn weakly_separates(g: &DefiningGraph, j: GenSet) -> bool {
    g.components(g.outside(j)).len() >= 2
}

/// An irreducible spherical weakly separating set with at least `k` elements.
pub fn rigidity_witness(g: &DefiningGraph, k: usize) -> Option<GenSet> {
    irreducible_spherical_subsets(g)
        .into_iter()
        .find(|&j| j.len() >= k && weakly_separates(g, j))
}

pub fn is_k_rigid(g: &DefiningGraph, k: usize) -> bool {
    rigidity_witness(g, k).is_none()
}

pub fn validate_twist(g: &DefiningGraph, tau: ElementaryTwist) -> Result<()> {
    let j = tau.j;
    g.check_subset(j.union(tau.b))?;
    if j.is_empty() || !g.is_irreducible(j) || !is_spherical(g, j) {
        return Err(CoxError::Invalid(format!(
            "{} is not irreducible spherical",
            g.fmt_set(j)
        )));
    }
    let outside = g.outside(j);
    if tau.b.is_empty() || !tau.b.is_subset(outside) || tau.b == outside {
        return Err(CoxError::Invalid(format!(
            "{} is not a proper side",
            g.fmt_set(tau.b)
        )));
    }
    for c in g.components(outside) {
        if !c.is_subset(tau.b) && !c.intersection(tau.b).is_empty() {
            return Err(CoxError::Invalid(format!(
                "{} splits the component {}",
                g.fmt_set(tau.b),
                g.fmt_set(c)
            )));
        }
    }
    Ok(())
}

/// All elementary twists; `B` never contains the least generator of `S \ (J ∪ J⊥)`.
pub fn enumerate_twists(g: &DefiningGraph) -> Vec<ElementaryTwist> {
    let mut out = Vec::new();
    for j in irreducible_spherical_subsets(g) {
        let comps = g.components(g.outside(j));
        if comps.len() < 2 {
            continue;
        }
        let movable = &comps[1..];
        for mask in 1u64..(1 << movable.len()) {
            let b = movable
                .iter()
                .enumerate()
                .filter(|(i, _)| mask & (1 << i) != 0)
                .fold(GenSet::EMPTY, |acc, (_, &c)| acc.union(c));
            out.push(ElementaryTwist { j, b });
        }
    }
    out
}

/// The defining graph after the twist: labels between `B` and `J` go through the opposition.
pub fn apply_twist_graph(g: &DefiningGraph, tau: ElementaryTwist) -> Result<DefiningGraph> {
    validate_twist(g, tau)?;
    let op = Group::new(g.clone()).opposition(tau.j)?;
    let mut out = g.clone();
    for b in tau.b.iter() {
        for j in tau.j.iter() {
            out.set_label(b, j, g.label(b, op[&j]))?;
        }
    }
    Ok(out)
}

/// The twisted generating set: each `b ∈ B` becomes `w_J·b·w_J`. Labels are re-checked
/// against product orders in the ambient group.
pub fn apply_twist_generators<'g>(
    gs: &GeneratingSet<'g>,
    tau: ElementaryTwist,
) -> Result<GeneratingSet<'g>> {
    let graph = apply_twist_graph(gs.graph(), tau)?;
    let amb = gs.ambient();
    let w = gs.image(gs.reference().longest_element(tau.j)?);
    let elements = gs
        .graph()
        .gens()
        .map(|x| {
            if tau.b.contains(x) {
                amb.conjugate(w, gs.element(x))
            } else {
                gs.element(x)
            }
        })
        .collect();
    GeneratingSet::with_graph(amb, graph, elements, *gs.params())
}

/// The spherical subset corresponding to `L` after the twist.
pub fn l_tau(g: &DefiningGraph, l: GenSet, tau: ElementaryTwist) -> Result<GenSet> {
    let a = tau.a(g);
    if !l.intersection(a).is_empty() && !l.intersection(tau.b).is_empty() {
        return Err(CoxError::Invalid(format!(
            "{} meets both sides",
            g.fmt_set(l)
        )));
    }
    if l.intersection(tau.b).is_empty() {
        return Ok(l);
    }
    through_opposition(g, l, tau.j)
}

/// Image of `set` under conjugation by `w_J`, as labels.
fn through_opposition(g: &DefiningGraph, set: GenSet, j: GenSet) -> Result<GenSet> {
    let op = Group::new(g.clone()).opposition(j)?;
    Ok(set
        .iter()
        .map(|x| if j.contains(x) { op[&x] } else { x })
        .collect())
}

/// Label-preserving canonical encoding: the least upper-triangle label sequence over all
/// vertex orders.
pub fn canonical_key(g: &DefiningGraph) -> Result<Vec<u32>> {
    Ok(canonical_order(g)?.1)
}

fn encode(g: &DefiningGraph, order: &[Gen]) -> Vec<u32> {
    let mut key = Vec::with_capacity(order.len() * order.len() / 2);
    for (i, &x) in order.iter().enumerate() {
        for &y in &order[i + 1..] {
            key.push(match g.label(x, y) {
                Label::Finite(m) => m,
                Label::Infinite => 0,
            });
        }
    }
    key
}

fn canonical_order(g: &DefiningGraph) -> Result<(Vec<Gen>, Vec<u32>)> {
    const MAX_RANK: usize = 8;
    if g.rank() > MAX_RANK {
        return Err(CoxError::Unsupported(format!(
            "canonical form needs rank ≤ {MAX_RANK}"
        )));
    }
    let best = g
        .gens()
        .permutations(g.rank())
        .map(|order| {
            let key = encode(g, &order);
            (key, order)
        })
        .min()
        .map(|(key, order)| (order, key))
        .unwrap_or_default();
    Ok(best)
}

/// The graph relabelled into canonical vertex order.
pub fn canonical_form(g: &DefiningGraph) -> Result<DefiningGraph> {
    Ok(g.permuted(&canonical_order(g)?.0))
}

/// Graphs reachable by elementary twists, up to label-preserving isomorphism.
#[derive(Debug, Clone)]
pub struct TwistClass {
    pub members: Vec<DefiningGraph>,
    pub keys: Vec<Vec<u32>>,
    pub complete: bool,
}

impl fmt::Display for TwistClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "members: {}{}",
            self.members.len(),
            if self.complete { "" } else { " (partial)" }
        )?;
        for (g, key) in self.members.iter().zip(&self.keys) {
            let key: Vec<String> = key
                .iter()
                .map(|m| if *m == 0 { "-".into() } else { m.to_string() })
                .collect();
            writeln!(f, "  [{}] rank {}", key.join(" "), g.rank())?;
        }
        Ok(())
    }
}

pub fn twist_class(g: &DefiningGraph, cap: usize) -> Result<TwistClass> {
    let mut index: HashMap<Vec<u32>, usize> = HashMap::new();
    let mut members = Vec::new();
    let mut keys = Vec::new();
    let mut queue = VecDeque::new();
    let start = canonical_key(g)?;
    index.insert(start.clone(), 0);
    members.push(g.clone());
    keys.push(start);
    queue.push_back(0);
    let mut complete = true;
    while let Some(i) = queue.pop_front() {
        let current = members[i].clone();
        for tau in enumerate_twists(&current) {
            let next = apply_twist_graph(&current, tau)?;
            let key = canonical_key(&next)?;
            if index.contains_key(&key) {
                continue;
            }
            if members.len() >= cap {
                complete = false;
                continue;
            }
            index.insert(key.clone(), members.len());
            queue.push_back(members.len());
            members.push(next);
            keys.push(key);
        }
    }
    Ok(TwistClass {
        members,
        keys,
        complete,
    })
}

/// Whether every member of the twist class is 3-rigid; `Err` if the class exceeds `cap`.
pub fn all_equivalents_3_rigid(g: &DefiningGraph, cap: usize) -> Result<bool> {
    let class = twist_class(g, cap)?;
    if !class.complete {
        return Err(CoxError::CapExhausted { cap });
    }
    Ok(class.members.iter().all(|m| is_k_rigid(m, 3)))
}

/// Maximal irreducible parts of maximal spherical subsets, each with its ambient maximal set.
pub fn maximal_irreducible_parts(g: &DefiningGraph) -> Result<Vec<(GenSet, GenSet)>> {
    let mut out = Vec::new();
    for l in maximal_spherical_subsets(g)? {
        for part in g.diagram_components(l) {
            out.push((l, part));
        }
    }
    Ok(out)
}

/// Counterexamples to exposedness preservation under `tau`: parts of size three that are
/// exposed before the twist but whose images are not.
pub fn exposedness_failures(g: &DefiningGraph, tau: ElementaryTwist) -> Result<Vec<GenSet>> {
    let twisted = apply_twist_graph(g, tau)?;
    let mut bad = Vec::new();
    for (l, part) in maximal_irreducible_parts(g)? {
        if part.len() != 3 || !is_exposed(g, part) {
            continue;
        }
        let image = if l.intersection(tau.b).is_empty() {
            part
        } else {
            through_opposition(g, part, tau.j)?
        };
        if !is_exposed(&twisted, image) {
            bad.push(part);
        }
    }
    Ok(bad)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::classify::is_fc;
    use crate::params::Params;

    fn set(g: &DefiningGraph, names: &[&str]) -> GenSet {
        g.subset(names).unwrap()
    }

    #[test]
    fn separation() {
        let q3 = catalog::q3();
        assert!(weakly_separates(&q3, set(&q3, &["s", "t"])));
        assert!(weakly_separates(&q3, set(&q3, &["s"])));
        let e2 = catalog::e2();
        assert!(weakly_separates(&e2, set(&e2, &["s", "t", "p"])));
        assert!(!is_k_rigid(&e2, 3));
        assert_eq!(rigidity_witness(&e2, 3), Some(set(&e2, &["s", "t", "p"])));
        assert!(is_k_rigid(&q3, 3));
        assert!(is_k_rigid(&catalog::e1(), 3));
        assert!(is_k_rigid(&catalog::e3(), 3));
    }

    #[test]
    fn twist_lists() {
        let q3 = catalog::q3();
        let found: Vec<String> = enumerate_twists(&q3)
            .iter()
            .map(|t| t.display(&q3))
            .collect();
        assert_eq!(found, ["J={s} B={t,b}", "J={t} B={b}", "J={s,t} B={b}"]);
        let e1 = catalog::e1();
        let found: Vec<String> = enumerate_twists(&e1)
            .iter()
            .map(|t| t.display(&e1))
            .collect();
        assert_eq!(found, ["J={t} B={q}", "J={s,t} B={q}", "J={t,p} B={q}"]);
        assert!(enumerate_twists(&catalog::linear(&[3, 3, 3])).is_empty());
    }

    #[test]
    fn twisted_graphs() {
        let q3 = catalog::q3();
        let tau = ElementaryTwist {
            j: set(&q3, &["s", "t"]),
            b: set(&q3, &["b"]),
        };
        let star = apply_twist_graph(&q3, tau).unwrap();
        let m = |x: &str, y: &str| star.m(star.gen(x).unwrap(), star.gen(y).unwrap());
        assert_eq!(
            (m("a", "s"), m("s", "t"), m("s", "b"), m("t", "b")),
            (Some(4), Some(3), Some(4), None)
        );
        assert!(is_fc(&star));
        let q4 = catalog::q4();
        let tau4 = ElementaryTwist {
            j: set(&q4, &["s", "t"]),
            b: set(&q4, &["b"]),
        };
        assert_eq!(apply_twist_graph(&q4, tau4).unwrap(), q4);
        assert!(validate_twist(
            &q3,
            ElementaryTwist {
                j: set(&q3, &["s"]),
                b: set(&q3, &["t"])
            }
        )
        .is_err());
    }

    #[test]
    fn twisted_generators() {
        let g = Group::new(catalog::q3());
        let gs = GeneratingSet::standard(&g, Params::default());
        let q3 = gs.graph().clone();
        let tau = ElementaryTwist {
            j: set(&q3, &["s", "t"]),
            b: set(&q3, &["b"]),
        };
        let tw = apply_twist_generators(&gs, tau).unwrap();
        assert_eq!(g.fmt(tw.element(q3.gen("b").unwrap())), "s t s b s t s");
        let back = apply_twist_generators(&tw, tau).unwrap();
        assert_eq!(back.elements(), gs.elements());
    }

    #[test]
    fn l_tau_examples() {
        let q3 = catalog::q3();
        let tau = ElementaryTwist {
            j: set(&q3, &["s", "t"]),
            b: set(&q3, &["b"]),
        };
        assert_eq!(
            l_tau(&q3, set(&q3, &["s", "t"]), tau).unwrap(),
            set(&q3, &["s", "t"])
        );
        assert_eq!(
            l_tau(&q3, set(&q3, &["t", "b"]), tau).unwrap(),
            set(&q3, &["s", "b"])
        );
        assert_eq!(
            l_tau(&q3, set(&q3, &["a", "s"]), tau).unwrap(),
            set(&q3, &["a", "s"])
        );
    }

    #[test]
    fn classes() {
        let q3 = twist_class(&catalog::q3(), 100).unwrap();
        assert!(q3.complete);
        assert_eq!(q3.members.len(), 2);
        assert_eq!(twist_class(&catalog::q4(), 100).unwrap().members.len(), 1);
        assert!(all_equivalents_3_rigid(&catalog::q3(), 100).unwrap());
        assert!(matches!(
            all_equivalents_3_rigid(&catalog::q3(), 1),
            Err(CoxError::CapExhausted { .. })
        ));
    }

    #[test]
    fn canonical_keys_ignore_names() {
        let q3 = catalog::q3();
        let perm: Vec<Gen> = [3, 1, 0, 2].iter().map(|&i| Gen(i)).collect();
        assert_eq!(
            canonical_key(&q3).unwrap(),
            canonical_key(&q3.permuted(&perm)).unwrap()
        );
        assert_ne!(
            canonical_key(&q3).unwrap(),
            canonical_key(&catalog::q4()).unwrap()
        );
    }
}
