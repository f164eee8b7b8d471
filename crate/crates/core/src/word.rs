//! Word problem for a Coxeter system.
//!
//! Elements live in a lazily grown arena. Each node stores its ShortLex-least reduced word,
//! its right descent set and links to its neighbours in the right weak order. A new node
//! `x·s` is created only after its descents have been derived from braid moves on the last
//! letters, so every element is created exactly once and equality is identity of nodes.

use std::cell::RefCell;
use std::cmp::Ordering;
use std::collections::{HashMap, HashSet, VecDeque};
use std::sync::atomic::{AtomicU32, Ordering as AtomicOrdering};

use crate::error::{CoxError, Result};
use crate::graph::{DefiningGraph, Gen, GenSet};

const NONE: u32 = u32::MAX;

static NEXT_GROUP: AtomicU32 = AtomicU32::new(1);

/// A group element, valid only for the [`Group`] that produced it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Element {
    group: u32,
    id: u32,
}

/// Outcome of [`Group::product_order`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ProductOrder {
    Finite(u32),
    InfiniteAtCutoff(u32),
}

impl ProductOrder {
    pub fn is_finite(self) -> bool {
        matches!(self, ProductOrder::Finite(_))
    }
}

/// A reflection together with its canonical split `element = u·s·u⁻¹`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Reflection {
    pub element: Element,
    pub conjugator: Element,
    pub generator: Gen,
}

#[derive(Default)]
struct Arena {
    words: Vec<Box<[Gen]>>,
    descents: Vec<GenSet>,
    links: Vec<u32>,
}

/// A Coxeter group given by its defining graph, with a memoized word engine.
pub struct Group {
    graph: DefiningGraph,
    tag: u32,
    rank: usize,
    m: Vec<Option<u32>>,
    arena: RefCell<Arena>,
}

impl std::fmt::Debug for Group {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Group")
            .field("graph", &self.graph)
            .field("nodes", &self.node_count())
            .finish()
    }
}

impl Group {
    pub fn new(graph: DefiningGraph) -> Group {
        let rank = graph.rank();
        let mut m = vec![None; rank * rank];
        for a in graph.gens() {
            for b in graph.gens() {
                if a != b {
                    m[a.index() * rank + b.index()] = graph.m(a, b);
                }
            }
        }
        let arena = Arena {
            words: vec![Box::new([])],
            descents: vec![GenSet::EMPTY],
            links: vec![NONE; rank],
        };
        Group {
            graph,
            tag: NEXT_GROUP.fetch_add(1, AtomicOrdering::Relaxed),
            rank,
            m,
            arena: RefCell::new(arena),
        }
    }

    pub fn graph(&self) -> &DefiningGraph {
        &self.graph
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Number of elements materialised so far.
    pub fn node_count(&self) -> usize {
        self.arena.borrow().words.len()
    }

    fn el(&self, id: u32) -> Element {
        Element {
            group: self.tag,
            id,
        }
    }

    pub fn owns(&self, x: Element) -> bool {
        x.group == self.tag
    }

    pub fn check(&self, x: Element) -> Result<()> {
        if self.owns(x) {
            Ok(())
        } else {
            Err(CoxError::GraphMismatch)
        }
    }

    fn own(&self, x: Element) -> u32 {
        assert!(self.owns(x), "element used with a foreign group");
        x.id
    }

    pub fn identity(&self) -> Element {
        self.el(0)
    }

    pub fn generator(&self, g: Gen) -> Element {
        self.mul_gen(self.identity(), g)
    }

    pub fn is_identity(&self, x: Element) -> bool {
        self.own(x) == 0
    }

    /// Canonical (ShortLex-least) reduced word.
    pub fn word(&self, x: Element) -> Vec<Gen> {
        self.arena.borrow().words[self.own(x) as usize].to_vec()
    }

    pub fn length(&self, x: Element) -> usize {
        self.arena.borrow().words[self.own(x) as usize].len()
    }

    pub fn right_descents(&self, x: Element) -> GenSet {
        self.arena.borrow().descents[self.own(x) as usize]
    }

    pub fn left_descents(&self, x: Element) -> GenSet {
        let inv = self.inverse(x);
        self.right_descents(inv)
    }

    /// Generators occurring in the canonical word; all reduced words share this set.
    pub fn support(&self, x: Element) -> GenSet {
        self.word(x).into_iter().collect()
    }

    pub fn fmt(&self, x: Element) -> String {
        let w = self.word(x);
        if w.is_empty() {
            "e".to_string()
        } else {
            self.graph.fmt_word(&w)
        }
    }

    fn label(&self, a: usize, b: usize) -> Option<u32> {
        self.m[a * self.rank + b]
    }

    /// Right multiplication by one generator.
    pub fn mul_gen(&self, x: Element, s: Gen) -> Element {
        let id = self.own(x);
        assert!(s.index() < self.rank, "generator out of range");
        let mut arena = self.arena.borrow_mut();
        let y = self.step(&mut arena, id, s.index());
        self.el(y)
    }

    fn step(&self, a: &mut Arena, x: u32, s: usize) -> u32 {
        let n = self.rank;
        let cached = a.links[x as usize * n + s];
        if cached != NONE {
            return cached;
        }
        // `s` is an ascent of `x`; derive every descent of `y = x·s` and the matching lower neighbour.
        let mut lower: Vec<(usize, u32)> = vec![(s, x)];
        for d in 0..n {
            if d == s {
                continue;
            }
            let Some(m) = self.label(d, s) else { continue };
            let m = m as usize;
            let mut cur = x;
            let mut letter = d;
            let mut ok = true;
            for _ in 0..m - 1 {
                if !a.descents[cur as usize].contains(Gen(letter as u8)) {
                    ok = false;
                    break;
                }
                cur = a.links[cur as usize * n + letter];
                letter = if letter == d { s } else { d };
            }
            if !ok {
                continue;
            }
            // y·d = u·(alternating word of length m-1 ending in s)
            let mut z = cur;
            let mut letter = if (m - 1) % 2 == 1 { s } else { d };
            for _ in 0..m - 1 {
                z = self.step(a, z, letter);
                letter = if letter == d { s } else { d };
            }
            lower.push((d, z));
        }
        let word = lower
            .iter()
            .map(|&(d, z)| {
                let mut w = a.words[z as usize].to_vec();
                w.push(Gen(d as u8));
                w
            })
            .min()
            .expect("at least one lower neighbour");
        let y = a.words.len() as u32;
        a.words.push(word.into_boxed_slice());
        a.descents
            .push(lower.iter().map(|&(d, _)| Gen(d as u8)).collect());
        a.links.extend(std::iter::repeat_n(NONE, n));
        for &(d, z) in &lower {
            a.links[y as usize * n + d] = z;
            a.links[z as usize * n + d] = y;
        }
        y
    }

    /// Canonical element of a raw word.
    pub fn canonicalize(&self, word: &[Gen]) -> Result<Element> {
        if let Some(g) = word.iter().find(|g| g.index() >= self.rank) {
            return Err(CoxError::InvalidWord(format!(
                "letter {} out of range",
                g.0
            )));
        }
        Ok(self.eval(word))
    }

    /// Canonical element of a word given by generator names.
    pub fn parse(&self, text: &str) -> Result<Element> {
        let letters = self.parse_letters(text)?;
        Ok(self.eval(&letters))
    }

    /// Splits `text` into generator names, by whitespace or, failing that, by single characters.
    pub fn parse_letters(&self, text: &str) -> Result<Vec<Gen>> {
        let parts: Vec<String> =
            if text.split_whitespace().count() > 1 || self.graph.gen(text.trim()).is_some() {
                text.split_whitespace().map(str::to_string).collect()
            } else {
                text.trim().chars().map(|c| c.to_string()).collect()
            };
        parts
            .iter()
            .filter(|p| p.as_str() != "e")
            .map(|p| {
                self.graph
                    .gen(p)
                    .ok_or_else(|| CoxError::InvalidWord(format!("unknown letter {p}")))
            })
            .collect()
    }

    fn eval(&self, word: &[Gen]) -> Element {
        word.iter()
            .fold(self.identity(), |x, &g| self.mul_gen(x, g))
    }

    pub fn multiply(&self, x: Element, y: Element) -> Element {
        self.own(y);
        let w = self.word(y);
        w.iter().fold(x, |acc, &g| self.mul_gen(acc, g))
    }

    pub fn try_multiply(&self, x: Element, y: Element) -> Result<Element> {
        self.check(x)?;
        self.check(y)?;
        Ok(self.multiply(x, y))
    }

    pub fn inverse(&self, x: Element) -> Element {
        let mut w = self.word(x);
        w.reverse();
        self.eval(&w)
    }

    /// `w·x·w⁻¹`.
    pub fn conjugate(&self, w: Element, x: Element) -> Element {
        let wx = self.multiply(w, x);
        self.multiply(wx, self.inverse(w))
    }

    /// `x⁻¹·y`, whose length is the gallery distance between chambers `x` and `y`.
    pub fn quotient(&self, x: Element, y: Element) -> Element {
        self.multiply(self.inverse(x), y)
    }

    pub fn distance(&self, x: Element, y: Element) -> usize {
        self.length(self.quotient(x, y))
    }

    pub fn is_involution(&self, x: Element) -> bool {
        !self.is_identity(x) && self.is_identity(self.multiply(x, x))
    }

    /// Least `k ≤ cutoff` with `(xy)^k = 1`.
    pub fn product_order(&self, x: Element, y: Element, cutoff: u32) -> ProductOrder {
        let g = self.multiply(x, y);
        let mut p = g;
        for k in 1..=cutoff {
            if self.is_identity(p) {
                return ProductOrder::Finite(k);
            }
            p = self.multiply(p, g);
        }
        ProductOrder::InfiniteAtCutoff(cutoff)
    }

    /// Canonical split of a reflection, peeling the least left descent on both sides.
    pub fn reflection_form(&self, g: Element) -> Result<Reflection> {
        if self.is_identity(g) || self.length(g).is_multiple_of(2) || !self.is_involution(g) {
            return Err(CoxError::NotAReflection);
        }
        let mut prefix = Vec::new();
        let mut cur = g;
        while self.length(cur) > 1 {
            let d = self.word(cur)[0];
            let dg = self.generator(d);
            let next = self.conjugate(dg, cur);
            if self.length(next) + 2 != self.length(cur) {
                return Err(CoxError::NotAReflection);
            }
            prefix.push(d);
            cur = next;
        }
        let generator = self.word(cur)[0];
        let conjugator = self.eval(&prefix);
        if self.length(conjugator) != prefix.len()
            || self.conjugate(conjugator, self.generator(generator)) != g
        {
            return Err(CoxError::NotAReflection);
        }
        Ok(Reflection {
            element: g,
            conjugator,
            generator,
        })
    }

    pub fn is_reflection(&self, g: Element) -> bool {
        self.reflection_form(g).is_ok()
    }

    pub fn shortlex_cmp(&self, x: Element, y: Element) -> Ordering {
        let (a, b) = (self.word(x), self.word(y));
        a.len().cmp(&b.len()).then_with(|| a.cmp(&b))
    }

    /// All elements of length at most `radius` in BFS order, each level in ShortLex order.
    pub fn enumerate_ball(&self, radius: usize, cap: usize) -> Result<Vec<Element>> {
        self.ball_in(GenSet::full(self.rank), radius, cap)
    }

    /// Ball of the standard parabolic subgroup generated by `gens`.
    pub fn ball_in(&self, gens: GenSet, radius: usize, cap: usize) -> Result<Vec<Element>> {
        let mut out = vec![self.identity()];
        let mut level = vec![self.identity()];
        for _ in 0..radius {
            let mut seen = HashSet::new();
            let mut next = Vec::new();
            for &x in &level {
                let desc = self.right_descents(x);
                for s in gens.iter().filter(|&s| !desc.contains(s)) {
                    let y = self.mul_gen(x, s);
                    if seen.insert(y) {
                        next.push(y);
                    }
                }
            }
            if next.is_empty() {
                break;
            }
            next.sort_by(|&a, &b| self.shortlex_cmp(a, b));
            out.extend(next.iter().copied());
            if out.len() > cap {
                return Err(CoxError::RadiusExhausted { radius });
            }
            level = next;
        }
        Ok(out)
    }

    /// Every element of a finite standard parabolic subgroup.
    pub fn parabolic_elements(&self, gens: GenSet, cap: usize) -> Result<Vec<Element>> {
        let all = self.ball_in(gens, usize::MAX, cap)?;
        Ok(all)
    }

    /// Longest element of a spherical standard parabolic subgroup.
    pub fn longest_element(&self, j: GenSet) -> Result<Element> {
        if !crate::classify::is_spherical(&self.graph, j) {
            return Err(CoxError::NotSpherical);
        }
        let mut x = self.identity();
        while let Some(s) = j.minus(self.right_descents(x)).first() {
            x = self.mul_gen(x, s);
        }
        Ok(x)
    }

    /// The permutation `j ↦ w_J·j·w_J` of an irreducible spherical `j`.
    pub fn opposition(&self, j: GenSet) -> Result<HashMap<Gen, Gen>> {
        if !self.graph.is_irreducible(j) {
            return Err(CoxError::Invalid(
                "opposition needs an irreducible subset".into(),
            ));
        }
        let w = self.longest_element(j)?;
        let mut map = HashMap::new();
        for g in j.iter() {
            let img = self.conjugate(w, self.generator(g));
            let word = self.word(img);
            if word.len() != 1 {
                return Err(CoxError::Internal(
                    "longest element does not normalise J".into(),
                ));
            }
            map.insert(g, word[0]);
        }
        Ok(map)
    }

    /// Minimal coset representative of `x·⟨j⟩`.
    pub fn min_coset_rep(&self, x: Element, j: GenSet) -> Element {
        let mut cur = x;
        while let Some(s) = self.right_descents(cur).intersection(j).first() {
            cur = self.mul_gen(cur, s);
        }
        cur
    }

    /// BFS over chambers reachable from `start`, stopping at the first accepted one.
    pub fn search_from<F: FnMut(Element) -> bool>(
        &self,
        start: Element,
        max_depth: usize,
        mut accept: F,
    ) -> Option<(Element, usize)> {
        let mut seen = HashSet::from([start]);
        let mut queue = VecDeque::from([(start, 0usize)]);
        while let Some((c, d)) = queue.pop_front() {
            if accept(c) {
                return Some((c, d));
            }
            if d == max_depth {
                continue;
            }
            for g in self.graph.gens() {
                let n = self.mul_gen(c, g);
                if seen.insert(n) {
                    queue.push_back((n, d + 1));
                }
            }
        }
        None
    }
}
