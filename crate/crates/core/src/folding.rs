//! Foldings of a dihedral parabolic `⟨s,t⟩` onto `{s, Id, t}` and the induced folded maps.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{CoxError, Result};
use crate::geometry::FundamentalDomain;
use crate::word::{Element, Group, ProductOrder};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Letter {
    S,
    T,
}

impl Letter {
    fn other(self) -> Letter {
        match self {
            Letter::S => Letter::T,
            Letter::T => Letter::S,
        }
    }
}

/// Element of `⟨s,t⟩` as an alternating reduced word. The longest element is stored starting with `s`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DihedralWord {
    pub len: usize,
    pub first: Letter,
}

impl DihedralWord {
    pub const IDENTITY: DihedralWord = DihedralWord {
        len: 0,
        first: Letter::S,
    };

    pub fn letters(self) -> impl Iterator<Item = Letter> {
        (0..self.len).map(move |i| {
            if i % 2 == 0 {
                self.first
            } else {
                self.first.other()
            }
        })
    }

    fn last(self) -> Option<Letter> {
        self.letters().last()
    }
}

/// The dihedral group of order `2m`, `m ≥ 2` finite.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Dihedral {
    pub m: usize,
}

impl Dihedral {
    fn normalize(self, len: usize, first: Letter) -> DihedralWord {
        if len == 0 || len == self.m {
            DihedralWord {
                len,
                first: Letter::S,
            }
        } else {
            DihedralWord { len, first }
        }
    }

    fn ending_with(self, len: usize, last: Letter) -> DihedralWord {
        let first = if len % 2 == 1 { last } else { last.other() };
        self.normalize(len, first)
    }

    pub fn letter(self, x: Letter) -> DihedralWord {
        self.normalize(1, x)
    }

    pub fn mul_letter(self, w: DihedralWord, x: Letter) -> DihedralWord {
        if w.len == self.m {
            return self.ending_with(self.m - 1, x.other());
        }
        match w.last() {
            None => self.letter(x),
            Some(l) if l == x => self.ending_with(w.len - 1, x.other()),
            Some(_) => self.normalize(w.len + 1, w.first),
        }
    }

    pub fn multiply(self, a: DihedralWord, b: DihedralWord) -> DihedralWord {
        b.letters().fold(a, |acc, x| self.mul_letter(acc, x))
    }

    pub fn longest(self) -> DihedralWord {
        self.normalize(self.m, Letter::S)
    }

    /// All `2m` elements in BFS order from the identity.
    pub fn elements(self) -> Vec<DihedralWord> {
        let mut out = vec![DihedralWord::IDENTITY];
        for len in 1..self.m {
            out.push(self.normalize(len, Letter::S));
            out.push(self.normalize(len, Letter::T));
        }
        out.push(self.longest());
        out
    }

    /// Position on the Cayley cycle `Id, s, st, …, w_st, …, ts, t`.
    fn position(self, w: DihedralWord) -> usize {
        if w.first == Letter::S {
            w.len
        } else {
            2 * self.m - w.len
        }
    }

    fn at_position(self, p: usize) -> DihedralWord {
        let p = p % (2 * self.m);
        if p <= self.m {
            self.normalize(p, Letter::S)
        } else {
            self.normalize(2 * self.m - p, Letter::T)
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FoldValue {
    S,
    Id,
    T,
}

impl FoldValue {
    fn word(self, d: Dihedral) -> DihedralWord {
        match self {
            FoldValue::S => d.letter(Letter::S),
            FoldValue::Id => DihedralWord::IDENTITY,
            FoldValue::T => d.letter(Letter::T),
        }
    }

    fn from_word(w: DihedralWord) -> Option<FoldValue> {
        match (w.len, w.first) {
            (0, _) => Some(FoldValue::Id),
            (1, Letter::S) => Some(FoldValue::S),
            (1, Letter::T) => Some(FoldValue::T),
            _ => None,
        }
    }
}

impl fmt::Display for FoldValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FoldValue::S => "s",
            FoldValue::Id => "Id",
            FoldValue::T => "t",
        })
    }
}

/// Which standard folding to build.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FoldingKind {
    /// Odd `m`: `w_st·w` on `{w_st s, w_st, w_st t}`.
    Odd,
    /// Even `m`: `Id` on `{w_st s, w_st, w_st t}`.
    Even,
    /// `m = 3`: identity on `{s, Id, t}`, left multiplication by `w_st` elsewhere.
    Example,
}

/// A map `⟨s,t⟩ → {s, Id, t}` for reflections `s, t` of the ambient group.
#[derive(Debug, Clone)]
pub struct Folding {
    pub s: Element,
    pub t: Element,
    pub dihedral: Dihedral,
    pub values: BTreeMap<DihedralWord, FoldValue>,
}

impl Folding {
    pub fn new(
        g: &Group,
        s: Element,
        t: Element,
        values: BTreeMap<DihedralWord, FoldValue>,
        cutoff: u32,
    ) -> Result<Folding> {
        let dihedral = dihedral_of(g, s, t, cutoff)?;
        if dihedral.elements().iter().any(|w| !values.contains_key(w))
            || values.len() != 2 * dihedral.m
        {
            return Err(CoxError::Invalid(
                "folding must be defined exactly on the dihedral group".into(),
            ));
        }
        Ok(Folding {
            s,
            t,
            dihedral,
            values,
        })
    }

    pub fn value(&self, w: DihedralWord) -> FoldValue {
        self.values[&w]
    }

    /// The ambient element spelled by a dihedral word.
    pub fn eval(&self, g: &Group, w: DihedralWord) -> Element {
        w.letters().fold(g.identity(), |acc, x| {
            g.multiply(
                acc,
                match x {
                    Letter::S => self.s,
                    Letter::T => self.t,
                },
            )
        })
    }

    /// The unique `w ∈ ⟨s,t⟩` with `c ∈ w·V`, searched in BFS order.
    pub fn locate(&self, g: &Group, v: &FundamentalDomain, c: Element) -> Result<DihedralWord> {
        self.dihedral
            .elements()
            .into_iter()
            .find(|&w| v.contains(g, g.quotient(self.eval(g, w), c)))
            .ok_or_else(|| {
                CoxError::Internal(format!("chamber {} lies in no translate of V", g.fmt(c)))
            })
    }

    /// Whether `f` is injective on the vertices of one of the two arcs from `w` to `w2`.
    pub fn injective_on_some_path(&self, w: DihedralWord, w2: DihedralWord) -> bool {
        let d = self.dihedral;
        let n = 2 * d.m;
        let (p, q) = (d.position(w), d.position(w2));
        let forward = (q + n - p) % n;
        let arcs = [
            (0..=forward)
                .map(|k| d.at_position(p + k))
                .collect::<Vec<_>>(),
            (0..=(n - forward) % n)
                .map(|k| d.at_position(p + n - k))
                .collect(),
        ];
        arcs.iter().any(|arc| {
            let mut seen: Vec<FoldValue> = arc.iter().map(|&x| self.value(x)).collect();
            seen.sort();
            seen.dedup();
            seen.len() == arc.len()
        })
    }
}

fn dihedral_of(g: &Group, s: Element, t: Element, cutoff: u32) -> Result<Dihedral> {
    match g.product_order(s, t, cutoff) {
        ProductOrder::Finite(m) if m >= 3 => Ok(Dihedral { m: m as usize }),
        ProductOrder::Finite(m) => Err(CoxError::Invalid(format!(
            "pair is not irreducible spherical (m = {m})"
        ))),
        ProductOrder::InfiniteAtCutoff(_) => Err(CoxError::NotSpherical),
    }
}

/// Both clauses `f(wx) ∈ {f(w), f(w)x}` for `x ∈ {s, t}` over the whole dihedral group.
pub fn is_folding(f: &Folding) -> bool {
    let d = f.dihedral;
    d.elements().into_iter().all(|w| {
        [Letter::S, Letter::T].into_iter().all(|x| {
            let fw = f.value(w);
            let fwx = f.value(d.mul_letter(w, x));
            fwx == fw || FoldValue::from_word(d.mul_letter(fw.word(d), x)) == Some(fwx)
        })
    })
}

pub fn standard_folding(
    g: &Group,
    s: Element,
    t: Element,
    kind: FoldingKind,
    cutoff: u32,
) -> Result<Folding> {
    let d = dihedral_of(g, s, t, cutoff)?;
    let ok = match kind {
        FoldingKind::Odd => d.m % 2 == 1,
        FoldingKind::Even => d.m % 2 == 0,
        FoldingKind::Example => d.m == 3,
    };
    if !ok {
        return Err(CoxError::Invalid(format!(
            "{kind:?} folding does not apply to m = {}",
            d.m
        )));
    }
    let w0 = d.longest();
    let top = [d.mul_letter(w0, Letter::S), w0, d.mul_letter(w0, Letter::T)];
    let values = d
        .elements()
        .into_iter()
        .map(|w| {
            let v = if let Some(v) = FoldValue::from_word(w) {
                v
            } else if top.contains(&w) {
                match kind {
                    FoldingKind::Even => FoldValue::Id,
                    _ => FoldValue::from_word(d.multiply(w0, w))
                        .expect("w_st maps the top triple to the bottom one"),
                }
            } else if w.first == Letter::S {
                FoldValue::S
            } else {
                FoldValue::T
            };
            (w, v)
        })
        .collect();
    let f = Folding {
        s,
        t,
        dihedral: d,
        values,
    };
    if !is_folding(&f) {
        return Err(CoxError::Internal(format!(
            "standard {kind:?} folding fails the folding condition"
        )));
    }
    Ok(f)
}

/// `f(w)·w⁻¹·c` for the `w` with `c ∈ w·V`.
pub fn folded_map(g: &Group, f: &Folding, v: &FundamentalDomain, c: Element) -> Result<Element> {
    let w = f.locate(g, v, c)?;
    Ok(g.multiply(
        f.eval(g, f.value(w).word(f.dihedral)),
        g.quotient(f.eval(g, w), c),
    ))
}
