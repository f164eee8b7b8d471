//! Defining graphs and generator subsets.

use std::fmt;

use crate::error::{CoxError, Result};

/// Maximum number of generators a graph may carry.
pub const MAX_RANK: usize = 64;

/// Index of a generator inside its [`DefiningGraph`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Gen(pub u8);

impl Gen {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

/// A set of generators stored as a bitmask.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct GenSet(pub u64);

impl GenSet {
    pub const EMPTY: GenSet = GenSet(0);

    pub fn full(rank: usize) -> GenSet {
        if rank >= 64 {
            GenSet(u64::MAX)
        } else {
            GenSet((1u64 << rank) - 1)
        }
    }

    pub fn single(g: Gen) -> GenSet {
        GenSet(1 << g.0)
    }

    pub fn contains(self, g: Gen) -> bool {
        self.0 >> g.0 & 1 == 1
    }

    pub fn insert(&mut self, g: Gen) {
        self.0 |= 1 << g.0;
    }

    pub fn with(self, g: Gen) -> GenSet {
        GenSet(self.0 | 1 << g.0)
    }

    pub fn without(self, g: Gen) -> GenSet {
        GenSet(self.0 & !(1 << g.0))
    }

    pub fn union(self, o: GenSet) -> GenSet {
        GenSet(self.0 | o.0)
    }

    pub fn intersection(self, o: GenSet) -> GenSet {
        GenSet(self.0 & o.0)
    }

    pub fn minus(self, o: GenSet) -> GenSet {
        GenSet(self.0 & !o.0)
    }

    pub fn is_subset(self, o: GenSet) -> bool {
        self.0 & !o.0 == 0
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    /// Least member in generator order.
    pub fn first(self) -> Option<Gen> {
        (self.0 != 0).then(|| Gen(self.0.trailing_zeros() as u8))
    }

    pub fn iter(self) -> impl Iterator<Item = Gen> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let g = bits.trailing_zeros() as u8;
                bits &= bits - 1;
                Some(Gen(g))
            }
        })
    }

    /// Members in generator order.
    pub fn to_vec(self) -> Vec<Gen> {
        self.iter().collect()
    }

    /// Comparison by sorted member lists, used for deterministic listings.
    pub fn label_cmp(self, o: GenSet) -> std::cmp::Ordering {
        self.to_vec().cmp(&o.to_vec())
    }

    /// All subsets of `self`, in increasing bitmask order.
    pub fn subsets(self) -> impl Iterator<Item = GenSet> {
        let full = self.0;
        let mut cur: Option<u64> = Some(0);
        std::iter::from_fn(move || {
            let c = cur?;
            cur = if c == full {
                None
            } else {
                Some((c.wrapping_sub(full)) & full)
            };
            Some(GenSet(c))
        })
    }
}

impl FromIterator<Gen> for GenSet {
    fn from_iter<I: IntoIterator<Item = Gen>>(iter: I) -> Self {
        let mut s = GenSet::EMPTY;
        for g in iter {
            s.insert(g);
        }
        s
    }
}

/// Label of a pair of distinct generators.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Label {
    Finite(u32),
    Infinite,
}

impl Label {
    pub fn finite(self) -> Option<u32> {
        match self {
            Label::Finite(m) => Some(m),
            Label::Infinite => None,
        }
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::Finite(m) => write!(f, "{m}"),
            Label::Infinite => write!(f, "inf"),
        }
    }
}

/// Generators with symmetric pairwise labels; an absent pair carries label infinity.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DefiningGraph {
    names: Vec<String>,
    labels: Vec<Option<u32>>,
}

impl DefiningGraph {
    /// A graph on `names` with no edges.
    pub fn new<S: AsRef<str>>(names: &[S]) -> Result<Self> {
        if names.len() > MAX_RANK {
            return Err(CoxError::Unsupported(format!(
                "at most {MAX_RANK} generators"
            )));
        }
        let names: Vec<String> = names.iter().map(|s| s.as_ref().to_string()).collect();
        for (i, n) in names.iter().enumerate() {
            if n.is_empty() || n.chars().any(char::is_whitespace) {
                return Err(CoxError::Invalid(format!("bad generator name {n:?}")));
            }
            if names[..i].contains(n) {
                return Err(CoxError::Invalid(format!("duplicate generator {n}")));
            }
        }
        let k = names.len();
        Ok(DefiningGraph {
            names,
            labels: vec![None; k * k],
        })
    }

    /// Builds a graph from generator names and finite edges.
    pub fn from_edges<S: AsRef<str>>(names: &[S], edges: &[(&str, &str, u32)]) -> Result<Self> {
        let mut g = DefiningGraph::new(names)?;
        for &(a, b, m) in edges {
            let (a, b) = (g.gen_or_err(a)?, g.gen_or_err(b)?);
            g.set_label(a, b, Label::Finite(m))?;
        }
        Ok(g)
    }

    pub fn set_label(&mut self, a: Gen, b: Gen, label: Label) -> Result<()> {
        if a == b {
            return Err(CoxError::Invalid("labels are irreflexive".into()));
        }
        if a.index() >= self.rank() || b.index() >= self.rank() {
            return Err(CoxError::InvalidSubset("generator out of range".into()));
        }
        let m = match label {
            Label::Finite(m) if m < 2 => {
                return Err(CoxError::Invalid(format!("label {m} below 2")));
            }
            Label::Finite(m) => Some(m),
            Label::Infinite => None,
        };
        let k = self.rank();
        self.labels[a.index() * k + b.index()] = m;
        self.labels[b.index() * k + a.index()] = m;
        Ok(())
    }

    pub fn rank(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, g: Gen) -> &str {
        &self.names[g.index()]
    }

    pub fn gens(&self) -> impl Iterator<Item = Gen> {
        (0..self.rank() as u8).map(Gen)
    }

    pub fn all(&self) -> GenSet {
        GenSet::full(self.rank())
    }

    pub fn gen(&self, name: &str) -> Option<Gen> {
        self.names
            .iter()
            .position(|n| n == name)
            .map(|i| Gen(i as u8))
    }

    pub fn gen_or_err(&self, name: &str) -> Result<Gen> {
        self.gen(name)
            .ok_or_else(|| CoxError::InvalidSubset(format!("unknown generator {name}")))
    }

    /// Parses a set of generator names.
    pub fn subset(&self, names: &[&str]) -> Result<GenSet> {
        names.iter().map(|n| self.gen_or_err(n)).collect()
    }

    pub fn check_subset(&self, t: GenSet) -> Result<()> {
        if t.is_subset(self.all()) {
            Ok(())
        } else {
            Err(CoxError::InvalidSubset("member not in graph".into()))
        }
    }

    /// Label of a pair; `Finite(1)` on the diagonal.
    pub fn label(&self, a: Gen, b: Gen) -> Label {
        if a == b {
            return Label::Finite(1);
        }
        match self.labels[a.index() * self.rank() + b.index()] {
            Some(m) => Label::Finite(m),
            None => Label::Infinite,
        }
    }

    pub fn m(&self, a: Gen, b: Gen) -> Option<u32> {
        self.label(a, b).finite()
    }

    /// Adjacent in the defining graph: distinct with a finite label.
    pub fn adjacent(&self, a: Gen, b: Gen) -> bool {
        a != b && self.m(a, b).is_some()
    }

    pub fn commute(&self, a: Gen, b: Gen) -> bool {
        a != b && self.m(a, b) == Some(2)
    }

    /// Edge of the Coxeter-Dynkin diagram: label at least 3 or infinite.
    pub fn diagram_edge(&self, a: Gen, b: Gen) -> bool {
        a != b && self.m(a, b) != Some(2)
    }

    pub fn neighbors(&self, a: Gen) -> GenSet {
        self.gens().filter(|&b| self.adjacent(a, b)).collect()
    }

    /// Finite edges as `(a, b, m)` with `a < b`.
    pub fn edges(&self) -> Vec<(Gen, Gen, u32)> {
        let mut out = Vec::new();
        for a in self.gens() {
            for b in self.gens().filter(|&b| b > a) {
                if let Some(m) = self.m(a, b) {
                    out.push((a, b, m));
                }
            }
        }
        out
    }

    fn components_by(&self, t: GenSet, linked: impl Fn(Gen, Gen) -> bool) -> Vec<GenSet> {
        let mut rest = t;
        let mut out = Vec::new();
        while let Some(start) = rest.first() {
            let mut comp = GenSet::single(start);
            let mut frontier = vec![start];
            while let Some(x) = frontier.pop() {
                for y in rest.minus(comp).iter() {
                    if linked(x, y) {
                        comp.insert(y);
                        frontier.push(y);
                    }
                }
            }
            rest = rest.minus(comp);
            out.push(comp);
        }
        out
    }

    /// Connected components of the defining graph induced on `t`, ordered by least member.
    pub fn components(&self, t: GenSet) -> Vec<GenSet> {
        self.components_by(t, |a, b| self.adjacent(a, b))
    }

    /// Validating form of [`DefiningGraph::components`].
    pub fn components_of(&self, t: GenSet) -> Result<Vec<GenSet>> {
        self.check_subset(t)?;
        Ok(self.components(t))
    }

    /// Connected components of the Coxeter-Dynkin diagram induced on `t`.
    pub fn diagram_components(&self, t: GenSet) -> Vec<GenSet> {
        self.components_by(t, |a, b| self.diagram_edge(a, b))
    }

    /// Generators outside `j` commuting with every member of `j`.
    pub fn perp(&self, j: GenSet) -> GenSet {
        self.all()
            .minus(j)
            .iter()
            .filter(|&g| j.iter().all(|x| self.commute(g, x)))
            .collect()
    }

    /// Validating form of [`DefiningGraph::perp`].
    pub fn perp_of(&self, j: GenSet) -> Result<GenSet> {
        self.check_subset(j)?;
        if j.is_empty() {
            return Err(CoxError::InvalidSubset("empty subset".into()));
        }
        Ok(self.perp(j))
    }

    pub fn is_irreducible(&self, j: GenSet) -> bool {
        !j.is_empty() && self.diagram_components(j).len() == 1
    }

    /// `S \ (j ∪ j⊥)`.
    pub fn outside(&self, j: GenSet) -> GenSet {
        self.all().minus(j).minus(self.perp(j))
    }

    /// Renders a subset as `{a,b}`.
    pub fn fmt_set(&self, t: GenSet) -> String {
        let names: Vec<&str> = t.iter().map(|g| self.name(g)).collect();
        format!("{{{}}}", names.join(","))
    }

    pub fn fmt_word(&self, w: &[Gen]) -> String {
        w.iter()
            .map(|&g| self.name(g))
            .collect::<Vec<_>>()
            .join(" ")
    }

    /// Relabels so that generator `i` of the result is generator `perm[i]` of `self`.
    pub fn permuted(&self, perm: &[Gen]) -> DefiningGraph {
        let names: Vec<String> = perm.iter().map(|&g| self.name(g).to_string()).collect();
        let k = self.rank();
        let mut labels = vec![None; k * k];
        for i in 0..k {
            for j in 0..k {
                if i != j {
                    labels[i * k + j] = self.m(perm[i], perm[j]);
                }
            }
        }
        DefiningGraph { names, labels }
    }

    /// Induced subgraph on `t`, generators kept in order.
    pub fn induced(&self, t: GenSet) -> DefiningGraph {
        let keep = t.to_vec();
        self.permuted(&keep)
    }
}
