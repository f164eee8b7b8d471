//! Finite-type classification, FC and maximal spherical subsets.

use std::fmt;

use crate::error::{CoxError, Result};
use crate::graph::{DefiningGraph, Gen, GenSet, Label};

/// Irreducible finite Coxeter families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    A,
    B,
    D,
    E6,
    E7,
    E8,
    F4,
    H3,
    H4,
    I2(u32),
}

/// One irreducible factor of a finite parabolic subgroup.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FiniteFactor {
    pub family: Family,
    pub rank: usize,
    pub members: GenSet,
}

impl FiniteFactor {
    /// Group order.
    pub fn order(&self) -> u128 {
        let n = self.rank as u128;
        let fact = |k: u128| (1..=k).product::<u128>();
        match self.family {
            Family::A => fact(n + 1),
            Family::B => (1u128 << n) * fact(n),
            Family::D => (1u128 << (n - 1)) * fact(n),
            Family::E6 => 51_840,
            Family::E7 => 2_903_040,
            Family::E8 => 696_729_600,
            Family::F4 => 1_152,
            Family::H3 => 120,
            Family::H4 => 14_400,
            Family::I2(m) => 2 * m as u128,
        }
    }

    /// Number of reflections, equal to the length of the longest element.
    pub fn reflections(&self) -> usize {
        let n = self.rank;
        match self.family {
            Family::A => n * (n + 1) / 2,
            Family::B => n * n,
            Family::D => n * (n - 1),
            Family::E6 => 36,
            Family::E7 => 63,
            Family::E8 => 120,
            Family::F4 => 24,
            Family::H3 => 15,
            Family::H4 => 60,
            Family::I2(m) => m as usize,
        }
    }
}

impl fmt::Display for FiniteFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.family {
            Family::A => write!(f, "A{}", self.rank),
            Family::B => write!(f, "B{}", self.rank),
            Family::D => write!(f, "D{}", self.rank),
            Family::I2(m) => write!(f, "I2({m})"),
            other => write!(f, "{other:?}"),
        }
    }
}

/// Verdict of [`classify`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum SphericalType {
    Finite(Vec<FiniteFactor>),
    Infinite,
}

impl SphericalType {
    pub fn is_finite(&self) -> bool {
        matches!(self, SphericalType::Finite(_))
    }

    pub fn order(&self) -> Option<u128> {
        match self {
            SphericalType::Finite(fs) => Some(fs.iter().map(FiniteFactor::order).product()),
            SphericalType::Infinite => None,
        }
    }

    pub fn reflections(&self) -> Option<usize> {
        match self {
            SphericalType::Finite(fs) => Some(fs.iter().map(FiniteFactor::reflections).sum()),
            SphericalType::Infinite => None,
        }
    }
}

impl fmt::Display for SphericalType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SphericalType::Infinite => write!(f, "Infinite"),
            SphericalType::Finite(fs) if fs.is_empty() => write!(f, "Finite(trivial)"),
            SphericalType::Finite(fs) => {
                let parts: Vec<String> = fs.iter().map(|x| x.to_string()).collect();
                write!(f, "Finite({})", parts.join(" x "))
            }
        }
    }
}

fn classify_component(g: &DefiningGraph, comp: GenSet) -> Option<FiniteFactor> {
    let members = comp.to_vec();
    let n = members.len();
    let factor = |family| {
        Some(FiniteFactor {
            family,
            rank: n,
            members: comp,
        })
    };
    if n == 1 {
        return factor(Family::A);
    }
    let mut edges = Vec::new();
    for (i, &x) in members.iter().enumerate() {
        for &y in &members[i + 1..] {
            match g.label(x, y) {
                Label::Infinite => return None,
                Label::Finite(2) => {}
                Label::Finite(m) => edges.push((x, y, m)),
            }
        }
    }
    if n == 2 {
        let m = edges[0].2;
        return factor(match m {
            3 => Family::A,
            4 => Family::B,
            _ => Family::I2(m),
        });
    }
    if edges.len() != n - 1 {
        return None;
    }
    let degree = |v: Gen| edges.iter().filter(|e| e.0 == v || e.1 == v).count();
    let big: Vec<&(Gen, Gen, u32)> = edges.iter().filter(|e| e.2 > 3).collect();
    let max_deg = members.iter().map(|&v| degree(v)).max().unwrap_or(0);
    match big.as_slice() {
        [] => {
            if max_deg <= 2 {
                return factor(Family::A);
            }
            let branches: Vec<Gen> = members
                .iter()
                .copied()
                .filter(|&v| degree(v) >= 3)
                .collect();
            if branches.len() != 1 || degree(branches[0]) != 3 {
                return None;
            }
            let centre = branches[0];
            let mut arms: Vec<usize> = edges
                .iter()
                .filter_map(|e| match (e.0 == centre, e.1 == centre) {
                    (true, _) => Some(e.1),
                    (_, true) => Some(e.0),
                    _ => None,
                })
                .map(|start| arm_length(&edges, centre, start))
                .collect();
            arms.sort_unstable();
            match arms.as_slice() {
                [1, 1, _] => factor(Family::D),
                [1, 2, 2] => factor(Family::E6),
                [1, 2, 3] => factor(Family::E7),
                [1, 2, 4] => factor(Family::E8),
                _ => None,
            }
        }
        [&(x, y, m)] => {
            if max_deg > 2 || m > 5 {
                return None;
            }
            let at_end = degree(x) == 1 || degree(y) == 1;
            match (m, at_end, n) {
                (4, true, _) => factor(Family::B),
                (4, false, 4) => factor(Family::F4),
                (5, true, 3) => factor(Family::H3),
                (5, true, 4) => factor(Family::H4),
                _ => None,
            }
        }
        _ => None,
    }
}

fn arm_length(edges: &[(Gen, Gen, u32)], centre: Gen, start: Gen) -> usize {
    let (mut prev, mut cur, mut len) = (centre, start, 1);
    loop {
        let next = edges.iter().find_map(|e| {
            if e.0 == cur && e.1 != prev {
                Some(e.1)
            } else if e.1 == cur && e.0 != prev {
                Some(e.0)
            } else {
                None
            }
        });
        match next {
            Some(nx) => {
                prev = cur;
                cur = nx;
                len += 1;
            }
            None => return len,
        }
    }
}

/// Classifies the parabolic subgroup generated by `j` by matching each diagram component
/// against the finite families.
pub fn classify(g: &DefiningGraph, j: GenSet) -> SphericalType {
    let mut factors = Vec::new();
    for comp in g.diagram_components(j) {
        match classify_component(g, comp) {
            Some(f) => factors.push(f),
            None => return SphericalType::Infinite,
        }
    }
    SphericalType::Finite(factors)
}

pub fn is_spherical(g: &DefiningGraph, j: GenSet) -> bool {
    classify(g, j).is_finite()
}

/// Maximal cliques of the defining graph, each sorted by generator order, listed in label order.
pub fn maximal_cliques(g: &DefiningGraph) -> Vec<GenSet> {
    fn bron_kerbosch(
        g: &DefiningGraph,
        r: GenSet,
        mut p: GenSet,
        mut x: GenSet,
        out: &mut Vec<GenSet>,
    ) {
        if p.is_empty() && x.is_empty() {
            out.push(r);
            return;
        }
        for v in p.iter() {
            let nb = g.neighbors(v);
            bron_kerbosch(g, r.with(v), p.intersection(nb), x.intersection(nb), out);
            p = p.without(v);
            x = x.with(v);
        }
    }
    let mut out = Vec::new();
    if g.rank() > 0 {
        bron_kerbosch(g, GenSet::EMPTY, g.all(), GenSet::EMPTY, &mut out);
    }
    out.sort_by(|a, b| a.label_cmp(*b));
    out
}

/// True iff every clique of the defining graph is spherical.
pub fn is_fc(g: &DefiningGraph) -> bool {
    maximal_cliques(g).into_iter().all(|c| is_spherical(g, c))
}

/// Inclusion-maximal spherical subsets; these are the maximal cliques of an FC graph.
pub fn maximal_spherical_subsets(g: &DefiningGraph) -> Result<Vec<GenSet>> {
    let cliques = maximal_cliques(g);
    if cliques.iter().any(|&c| !is_spherical(g, c)) {
        return Err(CoxError::Unsupported("graph is not of type FC".into()));
    }
    Ok(cliques)
}

/// Irreducible spherical subsets in order of size, then label order.
pub fn irreducible_spherical_subsets(g: &DefiningGraph) -> Vec<GenSet> {
    let mut out: Vec<GenSet> = g
        .all()
        .subsets()
        .filter(|&j| g.is_irreducible(j) && is_spherical(g, j))
        .collect();
    out.sort_by(|a, b| a.len().cmp(&b.len()).then(a.label_cmp(*b)));
    out
}
