//! The complexity `K(S) = (K1, K2)` of a generating set relative to the ambient standard set.

use std::fmt;

use crate::classify::{is_spherical, maximal_spherical_subsets};
use crate::error::{CoxError, Result};
use crate::geometry::{halfspace_containing_chambers, set_distance};
use crate::graph::{Gen, GenSet};
use crate::marking::{delta_pair, is_exposed, is_good_pair, simple_base, GeneratingSet};
use crate::word::Element;

/// Ordered lexicographically: `k1` first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct ComplexityValue {
    pub k1: usize,
    pub k2: usize,
}

impl fmt::Display for ComplexityValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.k1, self.k2)
    }
}

pub fn complexity_less(x: ComplexityValue, y: ComplexityValue) -> bool {
    x < y
}

/// Cells and frames of every maximal spherical subset.
pub struct Cells {
    pub maximal: Vec<GenSet>,
    pub cells: Vec<Vec<Element>>,
    pub frames: Vec<Vec<Element>>,
}

impl Cells {
    pub fn new(gs: &GeneratingSet) -> Result<Cells> {
        let maximal = maximal_spherical_subsets(gs.graph())?;
        let mut cells = Vec::with_capacity(maximal.len());
        let mut frames = Vec::with_capacity(maximal.len());
        for &l in &maximal {
            let cell = gs.cell(l)?;
            cells.push(cell.chambers(gs.ambient(), gs.params().cap)?);
            frames.push(gs.frame(l)?);
        }
        Ok(Cells {
            maximal,
            cells,
            frames,
        })
    }
}

/// Vertices of the diagram of `part` with at least two diagram neighbours in `part`.
fn non_leaves(gs: &GeneratingSet, part: GenSet) -> Vec<Gen> {
    let g = gs.graph();
    part.iter()
        .filter(|&x| {
            part.iter()
                .filter(|&y| y != x && g.diagram_edge(x, y))
                .count()
                >= 2
        })
        .collect()
}

/// The first `r ∈ I` and non-commuting pair of `part` good with respect to it.
fn good_witness(gs: &GeneratingSet, part: GenSet, i: GenSet) -> Option<(Gen, Gen, Gen)> {
    let g = gs.graph();
    for r in i.iter().filter(|&r| !is_spherical(g, part.with(r))) {
        for s in part.iter() {
            for t in part.iter().filter(|&t| t.0 > s.0) {
                if is_good_pair(g, part, s, t, r) {
                    return Some((s, t, r));
                }
            }
        }
    }
    None
}

/// `E_{L,I}` for maximal spherical `L = cells.maximal[li]`, `I = cells.maximal[ii]`.
///
/// A non-exposed part not inside `I` is resolved through a good pair and cross-checked at every
/// non-leaf core against the halfspace containing `w·C_I`. Without a good pair (possible only
/// when `S` is not 3-rigid) the non-leaf characterisation alone decides.
pub fn e_set(gs: &GeneratingSet, cells: &Cells, li: usize, ii: usize) -> Result<Vec<Element>> {
    let g = gs.graph();
    let amb = gs.ambient();
    let (l, i) = (cells.maximal[li], cells.maximal[ii]);
    let mut e = cells.frames[li].clone();
    for part in g.diagram_components(l) {
        if is_exposed(g, part) || part.is_subset(i) {
            continue;
        }
        let mut domain = match good_witness(gs, part, i) {
            Some((s, t, r)) => Some(delta_pair(gs, part, s, t, r)?),
            None => None,
        };
        for core in non_leaves(gs, part) {
            let w = gs.image(simple_base(gs, core, part)?.w);
            let shifted: Vec<Element> = cells.cells[ii]
                .iter()
                .map(|&c| amb.multiply(w, c))
                .collect();
            let phi = halfspace_containing_chambers(amb, gs.wall(core), &shifted)?;
            match &domain {
                Some(d) if d.halfspace_for(gs.element(core)) != Some(phi) => {
                    return Err(CoxError::VerificationFailed(format!(
                        "E-set of {} towards {} disagrees with the core {} characterisation",
                        g.fmt_set(part),
                        g.fmt_set(i),
                        g.name(core)
                    )))
                }
                Some(_) => {}
                None => {
                    let (d1, d2) = gs.domains(part)?;
                    domain = Some(if d1.halfspace_for(gs.element(core)) == Some(phi) {
                        d1
                    } else {
                        d2
                    });
                }
            }
        }
        let domain = domain.ok_or_else(|| {
            CoxError::Internal(format!(
                "no E-set rule for {} towards {}",
                g.fmt_set(part),
                g.fmt_set(i)
            ))
        })?;
        e.retain(|&c| domain.contains(amb, c));
    }
    Ok(e)
}

/// Per-pair contributions, for reports.
#[derive(Debug, Clone)]
pub struct ComplexityTerm {
    pub l: GenSet,
    pub i: GenSet,
    pub cell_distance: usize,
    pub e_distance: usize,
}

pub fn complexity_terms(gs: &GeneratingSet) -> Result<Vec<ComplexityTerm>> {
    let cells = Cells::new(gs)?;
    let n = cells.maximal.len();
    let es: Vec<Vec<Vec<Element>>> = (0..n)
        .map(|li| {
            (0..n)
                .map(|ii| {
                    if li == ii {
                        Ok(Vec::new())
                    } else {
                        e_set(gs, &cells, li, ii)
                    }
                })
                .collect()
        })
        .collect::<Result<_>>()?;
    let amb = gs.ambient();
    let mut terms = Vec::new();
    for (li, row) in es.iter().enumerate() {
        for ii in (0..n).filter(|&ii| ii != li) {
            terms.push(ComplexityTerm {
                l: cells.maximal[li],
                i: cells.maximal[ii],
                cell_distance: set_distance(amb, &cells.cells[li], &cells.cells[ii]),
                e_distance: set_distance(amb, &row[ii], &es[ii][li]),
            });
        }
    }
    Ok(terms)
}

/// Sums over ordered pairs `L ≠ I` of maximal spherical subsets.
pub fn complexity(gs: &GeneratingSet) -> Result<ComplexityValue> {
    let terms = complexity_terms(gs)?;
    Ok(ComplexityValue {
        k1: terms.iter().map(|t| t.cell_distance).sum(),
        k2: terms.iter().map(|t| t.e_distance).sum(),
    })
}
