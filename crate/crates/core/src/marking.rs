//! Generating sets inside an ambient group, bases, markings, moves, marking halfspaces,
//! domain selection and the rigidity predicates built on them.

use std::collections::{BTreeSet, HashSet, VecDeque};
use std::fmt;

use crate::classify::{
    irreducible_spherical_subsets, is_fc, is_spherical, maximal_spherical_subsets,
};
use crate::error::{CoxError, Result};
use crate::geometry::{
    self, geometric_domains, halfspace_containing_wall, is_geometric_pair, FundamentalDomain,
    Halfspace, Residue, Wall,
};
use crate::graph::{DefiningGraph, Gen, GenSet, Label};
use crate::params::Params;
use crate::word::{Element, Group, ProductOrder};

/// A Coxeter generating set `S` given by involutions of an ambient group `W(S′)`.
///
/// Besides the ambient images it carries its own defining graph and a reference group built
/// on that graph, in which words in `S` are reduced.
pub struct GeneratingSet<'g> {
    ambient: &'g Group,
    graph: DefiningGraph,
    elements: Vec<Element>,
    reference: Group,
    params: Params,
}

impl fmt::Debug for GeneratingSet<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut m = f.debug_map();
        for x in self.graph.gens() {
            m.entry(&self.graph.name(x), &self.ambient.fmt(self.element(x)));
        }
        m.finish()
    }
}

impl<'g> GeneratingSet<'g> {
    /// The standard generators of the ambient group.
    pub fn standard(ambient: &'g Group, params: Params) -> Self {
        let graph = ambient.graph().clone();
        let elements = graph.gens().map(|x| ambient.generator(x)).collect();
        GeneratingSet {
            ambient,
            reference: Group::new(graph.clone()),
            graph,
            elements,
            params,
        }
    }

    /// Builds the defining graph from product orders of the given involutions.
    pub fn from_elements<S: AsRef<str>>(
        ambient: &'g Group,
        names: &[S],
        elements: Vec<Element>,
        params: Params,
    ) -> Result<Self> {
        if names.len() != elements.len() {
            return Err(CoxError::Invalid("one name per element required".into()));
        }
        let mut graph = DefiningGraph::new(names)?;
        for (i, &x) in elements.iter().enumerate() {
            check_involution(ambient, x)?;
            for (j, &y) in elements.iter().enumerate().skip(i + 1) {
                match ambient.product_order(x, y, params.cutoff) {
                    ProductOrder::Finite(1) => {
                        return Err(CoxError::Invalid(format!(
                            "{} and {} coincide",
                            graph.names()[i],
                            graph.names()[j]
                        )))
                    }
                    ProductOrder::Finite(k) => {
                        graph.set_label(Gen(i as u8), Gen(j as u8), Label::Finite(k))?
                    }
                    ProductOrder::InfiniteAtCutoff(_) => {}
                }
            }
        }
        Ok(GeneratingSet {
            ambient,
            reference: Group::new(graph.clone()),
            graph,
            elements,
            params,
        })
    }

    /// Pairs an explicit graph with elements, checking every label against product orders.
    pub fn with_graph(
        ambient: &'g Group,
        graph: DefiningGraph,
        elements: Vec<Element>,
        params: Params,
    ) -> Result<Self> {
        if graph.rank() != elements.len() {
            return Err(CoxError::GraphMismatch);
        }
        for &x in &elements {
            check_involution(ambient, x)?;
        }
        for a in graph.gens() {
            for b in graph.gens().filter(|b| b.0 > a.0) {
                let order =
                    ambient.product_order(elements[a.index()], elements[b.index()], params.cutoff);
                let ok = match (graph.label(a, b), order) {
                    (Label::Finite(m), ProductOrder::Finite(k)) => m == k,
                    (Label::Infinite, ProductOrder::InfiniteAtCutoff(_)) => true,
                    _ => false,
                };
                if !ok {
                    return Err(CoxError::GraphMismatch);
                }
            }
        }
        Ok(GeneratingSet {
            ambient,
            reference: Group::new(graph.clone()),
            graph,
            elements,
            params,
        })
    }

    pub fn ambient(&self) -> &'g Group {
        self.ambient
    }

    pub fn graph(&self) -> &DefiningGraph {
        &self.graph
    }

    pub fn reference(&self) -> &Group {
        &self.reference
    }

    pub fn params(&self) -> &Params {
        &self.params
    }

    pub fn with_params(self, params: Params) -> Self {
        GeneratingSet { params, ..self }
    }

    pub fn element(&self, x: Gen) -> Element {
        self.elements[x.index()]
    }

    pub fn elements(&self) -> &[Element] {
        &self.elements
    }

    pub fn elements_of(&self, set: GenSet) -> Vec<Element> {
        set.iter().map(|x| self.element(x)).collect()
    }

    /// Ambient image of a reference-group element.
    pub fn image(&self, w: Element) -> Element {
        self.image_word(&self.reference.word(w))
    }

    pub fn image_word(&self, letters: &[Gen]) -> Element {
        letters.iter().fold(self.ambient.identity(), |acc, &x| {
            self.ambient.multiply(acc, self.element(x))
        })
    }

    pub fn wall(&self, x: Gen) -> Wall {
        Wall {
            reflection: self.element(x),
        }
    }

    /// Sorted ambient elements; equal keys mean equal generating sets.
    pub fn key(&self) -> Vec<Element> {
        let mut k = self.elements.clone();
        k.sort();
        k
    }

    /// `name := word` lines with words in the ambient generators.
    pub fn word_lines(&self) -> Vec<String> {
        self.graph
            .gens()
            .map(|x| {
                format!(
                    "{} := {}",
                    self.graph.name(x),
                    self.ambient.fmt(self.element(x))
                )
            })
            .collect()
    }

    /// Irreducible, non-spherical and of type FC.
    pub fn check_pipeline(&self) -> Result<()> {
        let all = self.graph.all();
        if !self.graph.is_irreducible(all) {
            return Err(CoxError::Unsupported("generating set is reducible".into()));
        }
        if is_spherical(&self.graph, all) {
            return Err(CoxError::Unsupported("generating set is spherical".into()));
        }
        if !is_fc(&self.graph) {
            return Err(CoxError::Unsupported(
                "generating set is not of type FC".into(),
            ));
        }
        Ok(())
    }

    /// The vertex set of the maximal cell fixed by `⟨L⟩`.
    pub fn cell(&self, l: GenSet) -> Result<Residue> {
        geometry::fixed_maximal_cell(self.ambient, &self.elements_of(l), &self.params)
    }

    /// The two geometric fundamental domains for an irreducible spherical `L`.
    pub fn domains(&self, l: GenSet) -> Result<(FundamentalDomain, FundamentalDomain)> {
        geometric_domains(self.ambient, &self.elements_of(l), &self.params)
    }

    /// Frame chambers `D_L` of a spherical `L`, which may be reducible.
    pub fn frame(&self, l: GenSet) -> Result<Vec<Element>> {
        let cell = self.cell(l)?;
        geometry::frame_chambers(self.ambient, &cell, &self.elements_of(l), self.params.cap)
    }
}

fn check_involution(g: &Group, x: Element) -> Result<()> {
    g.check(x)?;
    if g.is_identity(x) || !g.is_involution(x) {
        return Err(CoxError::Invalid(format!(
            "{} is not an involution",
            g.fmt(x)
        )));
    }
    Ok(())
}

/// A base `(core, w)` with `w` an element of the reference group.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Base {
    pub core: Gen,
    pub w: Element,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Marking {
    pub base: Base,
    pub marker: Gen,
}

impl Base {
    pub fn support(&self, gs: &GeneratingSet) -> GenSet {
        gs.reference.support(self.w).with(self.core)
    }

    pub fn letters(&self, gs: &GeneratingSet) -> Vec<Gen> {
        gs.reference.word(self.w)
    }

    pub fn is_simple(&self, gs: &GeneratingSet) -> bool {
        let support = gs.reference.support(self.w);
        gs.reference.length(self.w) == support.len() && !support.contains(self.core)
    }

    pub fn display(&self, gs: &GeneratingSet) -> String {
        let g = &gs.graph;
        format!(
            "({}, \"{}\")",
            g.name(self.core),
            g.fmt_word(&self.letters(gs))
        )
    }
}

impl Marking {
    pub fn core(&self) -> Gen {
        self.base.core
    }

    pub fn support(&self, gs: &GeneratingSet) -> GenSet {
        self.base.support(gs)
    }

    pub fn display(&self, gs: &GeneratingSet) -> String {
        format!(
            "({}, {})",
            self.base.display(gs),
            gs.graph.name(self.marker)
        )
    }
}

/// Whether `(core, w)` is a base: `w·c₀` is at distance `l(w)` from the wall of `core` in the
/// reference complex and the support is spherical.
pub fn is_base(gs: &GeneratingSet, core: Gen, w: Element) -> bool {
    let g = &gs.reference;
    let wall = Wall {
        reflection: g.generator(core),
    };
    geometry::distance_to_wall(g, w, wall) == g.length(w)
        && is_spherical(&gs.graph, g.support(w).with(core))
}

/// The base with the given core and letters, rejecting non-reduced letter sequences.
pub fn make_base(gs: &GeneratingSet, core: Gen, letters: &[Gen]) -> Result<Base> {
    let w = gs.reference.canonicalize(letters)?;
    if gs.reference.length(w) != letters.len() || !is_base(gs, core, w) {
        return Err(CoxError::Invalid(format!(
            "({}, \"{}\") is not a base",
            gs.graph.name(core),
            gs.graph.fmt_word(letters)
        )));
    }
    Ok(Base { core, w })
}

/// The simple base with support `j` and core `s`: the first ordering of `j \ {s}` in
/// generator order whose prefixes keep `{s, j₁, …, jᵢ}` irreducible.
pub fn simple_base(gs: &GeneratingSet, s: Gen, j: GenSet) -> Result<Base> {
    let graph = &gs.graph;
    if !j.contains(s) || !graph.is_irreducible(j) || !is_spherical(graph, j) {
        return Err(CoxError::Invalid(format!(
            "{} is not irreducible spherical containing the core",
            graph.fmt_set(j)
        )));
    }
    fn extend(graph: &DefiningGraph, have: GenSet, rest: GenSet, out: &mut Vec<Gen>) -> bool {
        if rest.is_empty() {
            return true;
        }
        for x in rest.iter() {
            if graph.is_irreducible(have.with(x)) {
                out.push(x);
                if extend(graph, have.with(x), rest.without(x), out) {
                    return true;
                }
                out.pop();
            }
        }
        false
    }
    let mut letters = Vec::new();
    if !extend(graph, GenSet::single(s), j.without(s), &mut letters) {
        return Err(CoxError::Internal(
            "no irreducible ordering of an irreducible set".into(),
        ));
    }
    make_base(gs, s, &letters)
}

pub fn make_marking(gs: &GeneratingSet, base: Base, marker: Gen) -> Result<Marking> {
    if !is_base(gs, base.core, base.w) {
        return Err(CoxError::Invalid("not a base".into()));
    }
    if is_spherical(&gs.graph, base.support(gs).with(marker)) {
        return Err(CoxError::NotAMarking);
    }
    Ok(Marking { base, marker })
}

/// `Φ_s^μ`: the halfspace of the wall of the core containing `w·𝒲_m`.
pub fn marking_halfspace(gs: &GeneratingSet, mu: Marking) -> Result<Halfspace> {
    let amb = gs.ambient;
    let w = gs.image(mu.base.w);
    let other = Wall {
        reflection: amb.conjugate(w, gs.element(mu.marker)),
    };
    halfspace_containing_wall(amb, gs.wall(mu.core()), other, gs.params.cutoff)
}

/// Markings reached by one M1 or M2 move.
pub fn move_neighbors(gs: &GeneratingSet, mu: Marking) -> Vec<Marking> {
    let graph = &gs.graph;
    let mut out = Vec::new();
    for m in graph.neighbors(mu.marker).iter() {
        if let Ok(nu) = make_marking(gs, mu.base, m) {
            out.push(nu);
        }
    }
    for j in graph.neighbors(mu.marker).iter() {
        let w = gs.reference.mul_gen(mu.base.w, j);
        if is_base(gs, mu.core(), w) {
            if let Ok(nu) = make_marking(gs, Base { core: mu.core(), w }, mu.marker) {
                out.push(nu);
            }
        }
    }
    out.sort();
    out.dedup();
    out
}

/// The move-equivalence class of `mu`.
pub fn move_class(gs: &GeneratingSet, mu: Marking) -> Vec<Marking> {
    let mut seen: HashSet<Marking> = HashSet::from([mu]);
    let mut queue = VecDeque::from([mu]);
    let mut out = vec![mu];
    while let Some(x) = queue.pop_front() {
        for y in move_neighbors(gs, x) {
            if seen.insert(y) {
                out.push(y);
                queue.push_back(y);
            }
        }
    }
    out
}

pub fn move_equivalent(gs: &GeneratingSet, mu: Marking, nu: Marking) -> Result<bool> {
    if mu.core() != nu.core() {
        return Err(CoxError::Invalid("markings have different cores".into()));
    }
    Ok(move_class(gs, mu).contains(&nu))
}

/// Every base with the given core.
pub fn bases_with_core(gs: &GeneratingSet, s: Gen) -> Result<Vec<Base>> {
    let mut found = BTreeSet::new();
    for j in maximal_spherical_subsets(&gs.graph)?
        .into_iter()
        .filter(|j| j.contains(s))
    {
        for w in gs.reference.parabolic_elements(j, gs.params.cap)? {
            if is_base(gs, s, w) {
                found.insert(Base { core: s, w });
            }
        }
    }
    Ok(found.into_iter().collect())
}

/// Every marking with the given core.
pub fn markings_with_core(gs: &GeneratingSet, s: Gen) -> Result<Vec<Marking>> {
    let mut out = Vec::new();
    for base in bases_with_core(gs, s)? {
        for m in gs.graph.gens() {
            if let Ok(mu) = make_marking(gs, base, m) {
                out.push(mu);
            }
        }
    }
    Ok(out)
}

/// Simple markings with core `s` whose support contains `within`.
pub fn simple_markings(gs: &GeneratingSet, s: Gen, within: GenSet) -> Result<Vec<Marking>> {
    let mut out = Vec::new();
    for j in irreducible_spherical_subsets(&gs.graph) {
        if !j.contains(s) || !within.is_subset(j) {
            continue;
        }
        let base = simple_base(gs, s, j)?;
        for m in gs.graph.gens() {
            if let Ok(mu) = make_marking(gs, base, m) {
                out.push(mu);
            }
        }
    }
    Ok(out)
}

/// A simple marking with core `s` and support containing `i`: supports by size then generator
/// order, markers in generator order.
pub fn find_simple_marking(gs: &GeneratingSet, i: GenSet, s: Gen) -> Result<Marking> {
    simple_markings(gs, s, i)?
        .into_iter()
        .next()
        .ok_or_else(|| {
            CoxError::Internal(format!("no simple marking over {}", gs.graph.fmt_set(i)))
        })
}

/// `K^μ_I`.
pub fn k_support(gs: &GeneratingSet, mu: Marking, i: GenSet) -> GenSet {
    let j = mu.support(gs);
    if j != i {
        j.minus(i.union(gs.graph.perp(i)))
    } else {
        GenSet::single(mu.marker)
    }
}

/// A simple marking with core `s`, support containing `t` and `K^μ_{s,t}` inside `a`.
pub fn component_marking(gs: &GeneratingSet, s: Gen, t: Gen, a: GenSet) -> Result<Marking> {
    let st = GenSet::single(s).with(t);
    for k in a.iter() {
        let candidate = match make_base(gs, s, &[t]).and_then(|b| make_marking(gs, b, k)) {
            Ok(mu) => mu,
            Err(_) => find_simple_marking(gs, st.with(k), s)?,
        };
        if k_support(gs, candidate, st).is_subset(a) {
            return Ok(candidate);
        }
    }
    Err(CoxError::Internal(format!(
        "no marking for component {}",
        gs.graph.fmt_set(a)
    )))
}

/// `Φ_s^{t,A}`.
pub fn component_halfspace(gs: &GeneratingSet, s: Gen, t: Gen, a: GenSet) -> Result<Halfspace> {
    marking_halfspace(gs, component_marking(gs, s, t, a)?)
}

/// A simple marking with core `s` and `K^μ_s` inside `a`, a component of `S \ (s ∪ s⊥)`.
pub fn core_component_marking(gs: &GeneratingSet, s: Gen, a: GenSet) -> Result<Marking> {
    let single = GenSet::single(s);
    for k in a.iter() {
        let candidate = match make_marking(
            gs,
            Base {
                core: s,
                w: gs.reference.identity(),
            },
            k,
        ) {
            Ok(mu) => mu,
            Err(_) => find_simple_marking(gs, single.with(k), s)?,
        };
        if k_support(gs, candidate, single).is_subset(a) {
            return Ok(candidate);
        }
    }
    Err(CoxError::Internal(format!(
        "no marking for component {}",
        gs.graph.fmt_set(a)
    )))
}

/// `Φ_s^A` for a component `A` of `S \ (s ∪ s⊥)`.
pub fn core_component_halfspace(gs: &GeneratingSet, s: Gen, a: GenSet) -> Result<Halfspace> {
    marking_halfspace(gs, core_component_marking(gs, s, a)?)
}

/// `Δ^μ`: the geometric fundamental domain for `L` inside `Φ_s^μ`.
pub fn delta(gs: &GeneratingSet, mu: Marking, l: GenSet) -> Result<FundamentalDomain> {
    if !mu.support(gs).is_subset(l) {
        return Err(CoxError::Invalid("marking support is not inside L".into()));
    }
    let phi = marking_halfspace(gs, mu)?;
    let (d1, d2) = gs.domains(l)?;
    let amb = gs.ambient;
    let inside = |d: &FundamentalDomain| {
        d.halfspace_for(phi.wall.reflection) == Some(phi) && phi.contains(amb, d.representative)
    };
    match (inside(&d1), inside(&d2)) {
        (true, false) => Ok(d1),
        (false, true) => Ok(d2),
        _ => Err(CoxError::DomainSelectionFailed(mu.display(gs))),
    }
}

/// `Δ^{(s,t),r}` for `L`.
pub fn delta_ordered(
    gs: &GeneratingSet,
    l: GenSet,
    s: Gen,
    t: Gen,
    r: Gen,
) -> Result<FundamentalDomain> {
    let base = make_base(gs, s, &[t])?;
    delta(gs, make_marking(gs, base, r)?, l)
}

/// `Δ^{{s,t},r}`, computed from every good one of `s, t`; the results must agree.
pub fn delta_pair(
    gs: &GeneratingSet,
    l: GenSet,
    s: Gen,
    t: Gen,
    r: Gen,
) -> Result<FundamentalDomain> {
    let g = &gs.graph;
    if !is_good_pair(g, l, s, t, r) {
        return Err(CoxError::Invalid(format!(
            "{{{},{}}} is not good",
            g.name(s),
            g.name(t)
        )));
    }
    let mut picks = Vec::new();
    if is_good_element(g, l, s, r) {
        picks.push(delta_ordered(gs, l, s, t, r)?);
    }
    if is_good_element(g, l, t, r) {
        picks.push(delta_ordered(gs, l, t, s, r)?);
    }
    match picks.as_slice() {
        [] => Err(CoxError::Internal(
            "good pair without a good element".into(),
        )),
        [d] => Ok(d.clone()),
        [d, e] if d == e => Ok(d.clone()),
        _ => Err(CoxError::VerificationFailed(
            "the two good elements select different domains".into(),
        )),
    }
}

/// `Δ^{L,r}`: the common `Δ^{(s,t),r}` over non-commuting `s, t ∈ L` with `{s,t,r}` non-spherical.
pub fn delta_l_r(gs: &GeneratingSet, l: GenSet, r: Gen) -> Result<FundamentalDomain> {
    let g = &gs.graph;
    let mut found: Option<FundamentalDomain> = None;
    for s in l.iter() {
        for t in l.iter().filter(|&t| t != s && g.diagram_edge(s, t)) {
            if is_spherical(g, GenSet::single(s).with(t).with(r)) {
                continue;
            }
            let d = delta_ordered(gs, l, s, t, r)?;
            match &found {
                None => found = Some(d),
                Some(e) if *e == d => {}
                Some(_) => {
                    return Err(CoxError::VerificationFailed(
                        "Δ^{L,r} depends on the pair".into(),
                    ))
                }
            }
        }
    }
    found.ok_or_else(|| CoxError::Invalid("no pair in L is non-spherical with r".into()))
}

/// The component of `outside` containing `r`, if any.
fn component_containing(g: &DefiningGraph, outside: GenSet, r: Gen) -> Option<GenSet> {
    g.components(outside).into_iter().find(|c| c.contains(r))
}

/// `t ∈ L` is good with respect to `r`.
pub fn is_good_element(g: &DefiningGraph, l: GenSet, t: Gen, r: Gen) -> bool {
    if r == t || g.adjacent(r, t) {
        return false;
    }
    let single = GenSet::single(t);
    let rest = l.minus(single.union(g.perp(single)));
    if rest.is_empty() {
        return false;
    }
    match component_containing(g, g.outside(single), r) {
        Some(c) => rest.is_subset(c),
        None => false,
    }
}

/// The non-commuting pair `{s, t} ⊆ L` is good with respect to `r`.
pub fn is_good_pair(g: &DefiningGraph, l: GenSet, s: Gen, t: Gen, r: Gen) -> bool {
    let st = GenSet::single(s).with(t);
    if s == t || !g.diagram_edge(s, t) || is_spherical(g, st.with(r)) {
        return false;
    }
    let rest = l.minus(st.union(g.perp(st)));
    if rest.is_empty() {
        return false;
    }
    match component_containing(g, g.outside(st), r) {
        Some(c) => rest.is_subset(c),
        None => false,
    }
}

/// `L` has at most two elements, or three with at least two isolated from `S \ (L ∪ L⊥)`.
pub fn is_exposed(g: &DefiningGraph, l: GenSet) -> bool {
    match l.len() {
        0..=2 => true,
        3 => {
            let outside = g.outside(l);
            l.iter()
                .filter(|&x| outside.iter().all(|y| !g.adjacent(x, y)))
                .count()
                >= 2
        }
        _ => false,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ComponentSize {
    Big,
    Small,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ComponentKind {
    pub size: ComponentSize,
    pub exposed: bool,
}

/// Big when some `r ∈ A` has `{s,t,r}` non-spherical; exposed when some `p ∈ A` makes
/// `{s,t,p}` irreducible spherical and exposed.
pub fn component_kind(g: &DefiningGraph, s: Gen, t: Gen, a: GenSet) -> ComponentKind {
    let st = GenSet::single(s).with(t);
    let big = a.iter().any(|r| !is_spherical(g, st.with(r)));
    let exposed = a.iter().any(|p| {
        let l = st.with(p);
        g.is_irreducible(l) && is_spherical(g, l) && is_exposed(g, l)
    });
    ComponentKind {
        size: if big {
            ComponentSize::Big
        } else {
            ComponentSize::Small
        },
        exposed,
    }
}

/// Irreducible spherical pairs, in generator order.
pub fn doubles(g: &DefiningGraph) -> Vec<(Gen, Gen)> {
    let mut out = Vec::new();
    for s in g.gens() {
        for t in g.gens().filter(|t| t.0 > s.0) {
            if g.diagram_edge(s, t) && g.m(s, t).is_some() {
                out.push((s, t));
            }
        }
    }
    out
}

/// Every pair of halfspaces from simple markings with support containing `{s,t}` and core in
/// `{s,t}` is geometric; same-core halfspaces must coincide.
pub fn doubles_consistent(gs: &GeneratingSet, s: Gen, t: Gen) -> Result<bool> {
    let st = GenSet::single(s).with(t);
    let collect = |core: Gen| -> Result<Vec<Halfspace>> {
        let mut hs: Vec<Halfspace> = Vec::new();
        for mu in simple_markings(gs, core, st)? {
            let h = marking_halfspace(gs, mu)?;
            if !hs.contains(&h) {
                hs.push(h);
            }
        }
        Ok(hs)
    };
    let (hs, ht) = (collect(s)?, collect(t)?);
    if hs.len() > 1 || ht.len() > 1 {
        return Ok(false);
    }
    match (hs.first(), ht.first()) {
        (Some(&h1), Some(&h2)) => is_geometric_pair(gs.ambient, h1, h2, &gs.params),
        _ => Ok(true),
    }
}

pub fn has_consistent_doubles(gs: &GeneratingSet) -> Result<bool> {
    for (s, t) in doubles(&gs.graph) {
        if !doubles_consistent(gs, s, t)? {
            return Ok(false);
        }
    }
    Ok(true)
}

pub fn components_compatible(
    gs: &GeneratingSet,
    s: Gen,
    t: Gen,
    a1: GenSet,
    a2: GenSet,
) -> Result<bool> {
    Ok(
        component_halfspace(gs, s, t, a1)? == component_halfspace(gs, s, t, a2)?
            && component_halfspace(gs, t, s, a1)? == component_halfspace(gs, t, s, a2)?,
    )
}

pub fn self_compatible(gs: &GeneratingSet, s: Gen, t: Gen, a: GenSet) -> Result<bool> {
    is_geometric_pair(
        gs.ambient,
        component_halfspace(gs, s, t, a)?,
        component_halfspace(gs, t, s, a)?,
        &gs.params,
    )
}

/// Number of maximal spherical `L` whose cell meets `sV ∪ V ∪ tV`.
pub fn consistency_count(
    gs: &GeneratingSet,
    s: Gen,
    t: Gen,
    v: &FundamentalDomain,
) -> Result<usize> {
    let amb = gs.ambient;
    let translates = [gs.element(s), amb.identity(), gs.element(t)];
    let mut count = 0;
    for l in maximal_spherical_subsets(&gs.graph)? {
        let chambers = gs.cell(l)?.chambers(amb, gs.params.cap)?;
        let hit = chambers.iter().any(|&c| {
            translates
                .iter()
                .any(|&x| v.contains(amb, amb.multiply(x, c)))
        });
        if hit {
            count += 1;
        }
    }
    Ok(count)
}

/// Inconsistent doubles whose consistency count is maximal over both domains.
pub fn peripheral_doubles(gs: &GeneratingSet) -> Result<Vec<(Gen, Gen)>> {
    let mut scored = Vec::new();
    for (s, t) in doubles(&gs.graph) {
        if doubles_consistent(gs, s, t)? {
            continue;
        }
        let (d1, d2) = gs.domains(GenSet::single(s).with(t))?;
        let best = consistency_count(gs, s, t, &d1)?.max(consistency_count(gs, s, t, &d2)?);
        scored.push(((s, t), best));
    }
    let top = scored.iter().map(|&(_, c)| c).max();
    Ok(scored
        .into_iter()
        .filter(|&(_, c)| Some(c) == top)
        .map(|(p, _)| p)
        .collect())
}
