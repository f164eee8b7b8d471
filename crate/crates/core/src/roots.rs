//! Exact root computations in the reflection representation of F4.

use std::fmt;
use std::ops::{Add, Mul, Sub};

use num_rational::Ratio;

use crate::error::{CoxError, Result};

pub type Q = Ratio<i64>;

/// A vector of `E^4` with rational coordinates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Vec4(pub [Q; 4]);

impl Vec4 {
    pub fn from_ints(x: [i64; 4]) -> Vec4 {
        Vec4(x.map(Q::from_integer))
    }

    pub fn dot(self, o: Vec4) -> Q {
        self.0.iter().zip(o.0).map(|(&a, b)| a * b).sum()
    }

    /// Orthogonal reflection in the hyperplane perpendicular to `root`.
    pub fn reflect(self, root: Vec4) -> Vec4 {
        self - root * (Q::from_integer(2) * self.dot(root) / root.dot(root))
    }
}

impl Add for Vec4 {
    type Output = Vec4;
    fn add(self, o: Vec4) -> Vec4 {
        Vec4(std::array::from_fn(|i| self.0[i] + o.0[i]))
    }
}

impl Sub for Vec4 {
    type Output = Vec4;
    fn sub(self, o: Vec4) -> Vec4 {
        Vec4(std::array::from_fn(|i| self.0[i] - o.0[i]))
    }
}

impl Mul<Q> for Vec4 {
    type Output = Vec4;
    fn mul(self, k: Q) -> Vec4 {
        Vec4(self.0.map(|x| x * k))
    }
}

impl fmt::Display for Vec4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// Simple roots for consecutive diagram vertices `u, s, t, p` (labels 3, 4, 3).
#[derive(Debug, Clone, Copy)]
pub struct F4Roots {
    pub u: Vec4,
    pub s: Vec4,
    pub t: Vec4,
    pub p: Vec4,
}

impl Default for F4Roots {
    fn default() -> Self {
        let h = Q::new(-1, 2);
        F4Roots {
            u: Vec4::from_ints([1, -1, 0, 0]),
            s: Vec4::from_ints([0, 1, -1, 0]),
            t: Vec4::from_ints([0, 0, 1, 0]),
            p: Vec4([h; 4]),
        }
    }
}

impl F4Roots {
    fn named(&self) -> [(char, Vec4); 4] {
        [('u', self.u), ('s', self.s), ('t', self.t), ('p', self.p)]
    }

    fn root(&self, c: char) -> Vec4 {
        self.named()
            .into_iter()
            .find(|&(n, _)| n == c)
            .map(|(_, v)| v)
            .expect("known simple root")
    }

    /// `x₁x₂…x_k·α`, the rightmost letter acting first.
    pub fn act(&self, word: &str, v: Vec4) -> Vec4 {
        word.chars()
            .rev()
            .fold(v, |acc, c| acc.reflect(self.root(c)))
    }

    /// Integer combination `Σ kᵢ·α_i` over `(u, s, t, p)`.
    pub fn combination(&self, k: [i64; 4]) -> Vec4 {
        self.named()
            .iter()
            .zip(k)
            .fold(Vec4::from_ints([0; 4]), |acc, (&(_, r), c)| {
                acc + r * Q::from_integer(c)
            })
    }

    /// `cos²(π/m)` read off the Gram matrix for each pair, with the expected label.
    pub fn gram_labels(&self) -> Vec<(char, char, u32, bool)> {
        let expected = |a: char, b: char| match (a, b) {
            ('u', 's') => 3,
            ('s', 't') => 4,
            ('t', 'p') => 3,
            _ => 2,
        };
        let cos2 = |m: u32| match m {
            2 => Q::from_integer(0),
            3 => Q::new(1, 4),
            4 => Q::new(1, 2),
            _ => unreachable!(),
        };
        let named = self.named();
        let mut out = Vec::new();
        for (i, &(a, x)) in named.iter().enumerate() {
            for &(b, y) in &named[i + 1..] {
                let m = expected(a, b);
                let d = x.dot(y);
                let ok = d * d / (x.dot(x) * y.dot(y)) == cos2(m) && d <= Q::from_integer(0);
                out.push((a, b, m, ok));
            }
        }
        out
    }
}

/// One identity `word·α_x = Σ kᵢ·α_i`.
#[derive(Debug, Clone)]
pub struct RootIdentity {
    pub label: String,
    pub lhs: Vec4,
    pub rhs: Vec4,
}

impl RootIdentity {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

#[derive(Debug, Clone)]
pub struct F4Report {
    pub gram_ok: bool,
    pub identities: Vec<RootIdentity>,
    pub sum_identity: RootIdentity,
}

impl F4Report {
    pub fn passed(&self) -> bool {
        self.gram_ok && self.identities.iter().all(RootIdentity::holds) && self.sum_identity.holds()
    }
}

impl fmt::Display for F4Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "gram matrix labels (3, 4, 3): {}",
            if self.gram_ok { "ok" } else { "MISMATCH" }
        )?;
        for id in self
            .identities
            .iter()
            .chain(std::iter::once(&self.sum_identity))
        {
            writeln!(
                f,
                "{}: {} [{}]",
                id.label,
                id.lhs,
                if id.holds() { "ok" } else { "MISMATCH" }
            )?;
        }
        if self.passed() {
            writeln!(
                f,
                "positivity: <v,uα_s> > 0 and <v,ptuα_s> > 0 force <v,uspα_t> > 0"
            )?;
        }
        Ok(())
    }
}

/// Checks the six intermediate identities and `uα_s + ptuα_s = 2·uspα_t` exactly.
pub fn f4_root_identity() -> Result<F4Report> {
    let r = F4Roots::default();
    let table: [(&str, &str, char, [i64; 4]); 6] = [
        ("uα_s = α_u+α_s", "u", 's', [1, 1, 0, 0]),
        ("tuα_s = α_u+α_s+2α_t", "tu", 's', [1, 1, 2, 0]),
        ("ptuα_s = α_u+α_s+2α_t+2α_p", "ptu", 's', [1, 1, 2, 2]),
        ("pα_t = α_t+α_p", "p", 't', [0, 0, 1, 1]),
        ("spα_t = α_s+α_t+α_p", "sp", 't', [0, 1, 1, 1]),
        ("uspα_t = α_u+α_s+α_t+α_p", "usp", 't', [1, 1, 1, 1]),
    ];
    let identities: Vec<RootIdentity> = table
        .iter()
        .map(|&(label, word, x, k)| RootIdentity {
            label: label.into(),
            lhs: r.act(word, r.root(x)),
            rhs: r.combination(k),
        })
        .collect();
    let sum_identity = RootIdentity {
        label: "uα_s + ptuα_s = 2·uspα_t".into(),
        lhs: r.act("u", r.s) + r.act("ptu", r.s),
        rhs: r.act("usp", r.t) * Q::from_integer(2),
    };
    let report = F4Report {
        gram_ok: r.gram_labels().iter().all(|g| g.3),
        identities,
        sum_identity,
    };
    if !report.passed() {
        return Err(CoxError::VerificationFailed(format!(
            "F4 root identities:\n{report}"
        )));
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_identities_hold() {
        let report = f4_root_identity().unwrap();
        assert!(report.passed());
        assert_eq!(report.identities.len(), 6);
    }

    #[test]
    fn reflections_are_involutions() {
        let r = F4Roots::default();
        let v = Vec4([
            Q::new(3, 7),
            Q::new(-2, 5),
            Q::from_integer(1),
            Q::new(1, 3),
        ]);
        for c in ['u', 's', 't', 'p'] {
            let w = c.to_string();
            assert_eq!(r.act(&w, r.act(&w, v)), v);
            assert_eq!(r.act(&w, r.root(c)), r.root(c) * Q::from_integer(-1));
        }
    }

    #[test]
    fn word_orders_match_labels() {
        let r = F4Roots::default();
        let v = Vec4([
            Q::new(3, 7),
            Q::new(-2, 5),
            Q::from_integer(1),
            Q::new(1, 3),
        ]);
        for (pair, m) in [
            ("us", 3),
            ("st", 4),
            ("tp", 3),
            ("ut", 2),
            ("up", 2),
            ("sp", 2),
        ] {
            let word = pair.repeat(m);
            assert_eq!(r.act(&word, v), v, "{pair}");
            assert_ne!(r.act(&pair.repeat(m - 1), v), v, "{pair}");
        }
    }

    #[test]
    fn perturbed_root_breaks_an_identity() {
        let r = F4Roots {
            t: Vec4::from_ints([0, 0, 2, 0]),
            ..F4Roots::default()
        };
        assert_ne!(
            r.act("u", r.s) + r.act("ptu", r.s),
            r.act("usp", r.t) * Q::from_integer(2)
        );
    }
}
