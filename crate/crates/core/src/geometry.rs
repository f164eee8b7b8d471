//! Walls, halfspaces, residues and fundamental domains of the Davis complex.
//!
//! Chambers are group elements. A chamber `c` lies on the identity side of the wall of a
//! reflection `r` iff `l(r·c) > l(c)`.

use std::collections::{HashMap, HashSet};

use crate::classify::is_spherical;
use crate::error::{CoxError, Result};
use crate::graph::GenSet;
use crate::params::Params;
use crate::word::{Element, Group, ProductOrder};

/// The wall fixed by a reflection.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Wall {
    pub reflection: Element,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    IdentitySide,
    OtherSide,
}

/// One of the two halfspaces of a wall.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Halfspace {
    pub wall: Wall,
    pub identity_side: bool,
}

impl Halfspace {
    pub fn opposite(self) -> Halfspace {
        Halfspace {
            wall: self.wall,
            identity_side: !self.identity_side,
        }
    }

    pub fn contains(self, g: &Group, c: Element) -> bool {
        (side_of_wall(g, c, self.wall) == Side::IdentitySide) == self.identity_side
    }
}

/// Coset `anchor·⟨gens⟩` with `anchor` its shortest element.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Residue {
    pub anchor: Element,
    pub gens: GenSet,
}

impl Residue {
    pub fn new(g: &Group, c: Element, gens: GenSet) -> Residue {
        Residue {
            anchor: g.min_coset_rep(c, gens),
            gens,
        }
    }

    /// All chambers of a spherical residue.
    pub fn chambers(&self, g: &Group, cap: usize) -> Result<Vec<Element>> {
        Ok(g.parabolic_elements(self.gens, cap)?
            .into_iter()
            .map(|v| g.multiply(self.anchor, v))
            .collect())
    }
}

/// Intersection of one halfspace per wall, with a chamber inside it.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FundamentalDomain {
    pub halfspaces: Vec<Halfspace>,
    pub representative: Element,
}

impl FundamentalDomain {
    pub fn contains(&self, g: &Group, c: Element) -> bool {
        self.halfspaces.iter().all(|h| h.contains(g, c))
    }

    /// The halfspace stored for the wall of `reflection`.
    pub fn halfspace_for(&self, reflection: Element) -> Option<Halfspace> {
        self.halfspaces
            .iter()
            .copied()
            .find(|h| h.wall.reflection == reflection)
    }
}

pub fn wall(g: &Group, reflection: Element) -> Result<Wall> {
    g.reflection_form(reflection)?;
    Ok(Wall { reflection })
}

pub fn side_of_wall(g: &Group, c: Element, w: Wall) -> Side {
    let rc = g.multiply(w.reflection, c);
    if g.length(rc) > g.length(c) {
        Side::IdentitySide
    } else {
        Side::OtherSide
    }
}

fn halfspace_of(g: &Group, w: Wall, c: Element) -> Halfspace {
    Halfspace {
        wall: w,
        identity_side: side_of_wall(g, c, w) == Side::IdentitySide,
    }
}

/// The halfspace of `w` containing every chamber of `k`.
pub fn halfspace_containing_chambers(g: &Group, w: Wall, k: &[Element]) -> Result<Halfspace> {
    let first = *k
        .first()
        .ok_or_else(|| CoxError::Invalid("empty chamber set".into()))?;
    let h = halfspace_of(g, w, first);
    if k.iter().all(|&c| h.contains(g, c)) {
        Ok(h)
    } else {
        Err(CoxError::NotSeparated)
    }
}

/// The halfspace of `w` containing the wall `other`, which must be disjoint from `w`.
pub fn halfspace_containing_wall(
    g: &Group,
    w: Wall,
    other: Wall,
    cutoff: u32,
) -> Result<Halfspace> {
    if let ProductOrder::Finite(order) = g.product_order(w.reflection, other.reflection, cutoff) {
        return Err(CoxError::WallsIntersect { order });
    }
    let split = g.reflection_form(other.reflection)?;
    let u = split.conjugator;
    let ru = g.multiply(other.reflection, u);
    halfspace_containing_chambers(g, w, &[u, ru])
}

/// A chamber is incident to a wall iff it is an endpoint of an edge crossed by the wall.
pub fn incident(g: &Group, c: Element, w: Wall) -> bool {
    let x = g.multiply(g.multiply(g.inverse(c), w.reflection), c);
    g.length(x) == 1
}

/// Gallery distance from `c` to the nearest chamber incident to `w`.
///
/// If `c⁻¹·r·c = u·s·u⁻¹` with `u` shortest, then `c·u` is incident and no incident chamber is
/// closer, so the distance is `(l(c⁻¹·r·c) - 1) / 2`.
pub fn distance_to_wall(g: &Group, c: Element, w: Wall) -> usize {
    let x = g.multiply(g.multiply(g.inverse(c), w.reflection), c);
    (g.length(x) - 1) / 2
}

pub fn gallery_distance(g: &Group, c1: Element, c2: Element) -> usize {
    g.distance(c1, c2)
}

/// Minimum gallery distance between two nonempty chamber sets.
pub fn set_distance(g: &Group, x: &[Element], y: &[Element]) -> usize {
    let mut best = usize::MAX;
    for &a in x {
        let ainv = g.inverse(a);
        for &b in y {
            best = best.min(g.length(g.multiply(ainv, b)));
            if best == 0 {
                return 0;
            }
        }
    }
    best
}

/// Elements of the finite subgroup generated by `gens`, in BFS order.
pub fn subgroup_elements(g: &Group, gens: &[Element], cap: usize) -> Result<Vec<Element>> {
    let mut out = vec![g.identity()];
    let mut seen: HashSet<Element> = out.iter().copied().collect();
    let mut i = 0;
    while i < out.len() {
        let x = out[i];
        for &s in gens {
            let y = g.multiply(x, s);
            if seen.insert(y) {
                out.push(y);
                if out.len() > cap {
                    return Err(CoxError::CapExhausted { cap });
                }
            }
        }
        i += 1;
    }
    Ok(out)
}

/// The maximal cell fixed by the finite group generated by `elements`.
///
/// Chambers are searched in BFS order; the first chamber `c` for which all `c⁻¹·l·c`
/// lie in one spherical standard parabolic subgroup anchors the cell.
pub fn fixed_maximal_cell(g: &Group, elements: &[Element], params: &Params) -> Result<Residue> {
    let graph = g.graph();
    let accept = |c: Element| -> Option<GenSet> {
        let cinv = g.inverse(c);
        let support = elements
            .iter()
            .map(|&l| g.support(g.multiply(g.multiply(cinv, l), c)))
            .fold(GenSet::EMPTY, GenSet::union);
        is_spherical(graph, support).then_some(support)
    };
    let mut support = GenSet::EMPTY;
    let found = g.search_from(g.identity(), params.radius, |c| match accept(c) {
        Some(s) => {
            support = s;
            true
        }
        None => false,
    });
    let (c, _) = found.ok_or(CoxError::RadiusExhausted {
        radius: params.radius,
    })?;
    let gens = extend_to_maximal_spherical(graph, support);
    Ok(Residue::new(g, c, gens))
}

/// Greedy extension in generator order to an inclusion-maximal spherical subset.
pub fn extend_to_maximal_spherical(graph: &crate::graph::DefiningGraph, j: GenSet) -> GenSet {
    graph.gens().fold(j, |acc, x| {
        let bigger = acc.with(x);
        if bigger != acc && is_spherical(graph, bigger) {
            bigger
        } else {
            acc
        }
    })
}

/// Chambers of the residue incident to the wall of every element of `elements`.
pub fn frame_chambers(
    g: &Group,
    r: &Residue,
    elements: &[Element],
    cap: usize,
) -> Result<Vec<Element>> {
    let walls: Vec<Wall> = elements
        .iter()
        .map(|&l| wall(g, l))
        .collect::<Result<_>>()?;
    let mut out: Vec<Element> = r
        .chambers(g, cap)?
        .into_iter()
        .filter(|&c| walls.iter().all(|&w| incident(g, c, w)))
        .collect();
    out.sort_by(|&a, &b| g.shortlex_cmp(a, b));
    Ok(out)
}

/// The two geometric fundamental domains of an irreducible spherical set of reflections.
///
/// The first domain is the one whose frame chamber is ShortLex-least.
pub fn geometric_domains(
    g: &Group,
    elements: &[Element],
    params: &Params,
) -> Result<(FundamentalDomain, FundamentalDomain)> {
    let cell = fixed_maximal_cell(g, elements, params)?;
    let frame = frame_chambers(g, &cell, elements, params.cap)?;
    if frame.len() != 2 {
        return Err(CoxError::Internal(format!(
            "expected 2 frame chambers, found {}",
            frame.len()
        )));
    }
    let walls: Vec<Wall> = elements
        .iter()
        .map(|&l| wall(g, l))
        .collect::<Result<_>>()?;
    let domain = |rep: Element| FundamentalDomain {
        halfspaces: walls.iter().map(|&w| halfspace_of(g, w, rep)).collect(),
        representative: rep,
    };
    Ok((domain(frame[0]), domain(frame[1])))
}

/// `h1 ∩ h2` is a fundamental domain for the finite group generated by the two wall
/// reflections. Both walls belong to that group, so `h1 ∩ h2` is a union of its sectors and every
/// orbit meets each sector once; the orbit of the identity chamber therefore decides.
pub fn is_geometric_pair(g: &Group, h1: Halfspace, h2: Halfspace, params: &Params) -> Result<bool> {
    if h1.wall == h2.wall {
        return Err(CoxError::Invalid(
            "both halfspaces belong to the same wall".into(),
        ));
    }
    let (p, r) = (h1.wall.reflection, h2.wall.reflection);
    let orbit = match g.product_order(p, r, params.cutoff) {
        ProductOrder::Finite(_) => subgroup_elements(g, &[p, r], params.cap)?,
        ProductOrder::InfiniteAtCutoff(_) => {
            return Err(CoxError::InconclusiveRadius {
                radius: params.radius,
            })
        }
    };
    Ok(orbit
        .iter()
        .filter(|&&x| h1.contains(g, x) && h2.contains(g, x))
        .count()
        == 1)
}

/// Reflections of the finite group generated by `elements`.
pub fn reflections_of(g: &Group, elements: &[Element], cap: usize) -> Result<Vec<Element>> {
    let all = subgroup_elements(g, elements, cap)?;
    let mut out: Vec<Element> = Vec::new();
    let mut seen = HashSet::new();
    for &x in &all {
        for &l in elements {
            let r = g.conjugate(x, l);
            if seen.insert(r) {
                out.push(r);
            }
        }
    }
    out.sort_by(|&a, &b| g.shortlex_cmp(a, b));
    Ok(out)
}

/// Sector of a chamber for an irreducible spherical set of reflections: the unique `h` in the
/// generated group such that `h⁻¹·c` has the sign vector of the first geometric domain.
pub fn sector_of(g: &Group, elements: &[Element], c: Element, params: &Params) -> Result<Element> {
    let (d1, _) = geometric_domains(g, elements, params)?;
    let refl = reflections_of(g, elements, params.cap)?;
    let walls: Vec<Wall> = refl
        .into_iter()
        .map(|reflection| Wall { reflection })
        .collect();
    let signs = |x: Element| -> Vec<bool> {
        walls
            .iter()
            .map(|&w| side_of_wall(g, x, w) == Side::IdentitySide)
            .collect()
    };
    let target = signs(d1.representative);
    let group = subgroup_elements(g, elements, params.cap)?;
    let mut memo: HashMap<Element, Vec<bool>> = HashMap::new();
    let mut hits = group.into_iter().filter(|&h| {
        let x = g.quotient(h, c);
        memo.entry(x).or_insert_with(|| signs(x)) == &target
    });
    let first = hits
        .next()
        .ok_or_else(|| CoxError::Internal("chamber lies in no sector".into()))?;
    if hits.next().is_some() {
        return Err(CoxError::Internal("chamber lies in two sectors".into()));
    }
    Ok(first)
}
