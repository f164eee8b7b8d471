//! Brute-force oracles that use nothing beyond the word engine's multiplication and lengths.
#![allow(dead_code)]

use std::collections::{HashMap, HashSet, VecDeque};
use std::f64::consts::PI;

use twistcox::{DefiningGraph, Element, Gen, GenSet, Group, Label};

pub const FLOAT_TOL: f64 = 1e-9;
pub const ORDER_CAP: usize = 5000;

type Matrix = Vec<Vec<f64>>;

/// Bilinear form of the geometric representation: `-cos(π/m)`, `-1` for infinity.
pub fn cosine_matrix(g: &DefiningGraph, gens: &[Gen]) -> Matrix {
    gens.iter()
        .map(|&a| {
            gens.iter()
                .map(|&b| {
                    if a == b {
                        1.0
                    } else {
                        match g.label(a, b) {
                            Label::Finite(m) => -(PI / m as f64).cos(),
                            _ => -1.0,
                        }
                    }
                })
                .collect()
        })
        .collect()
}

fn determinant(mut m: Matrix) -> f64 {
    let n = m.len();
    let mut det = 1.0;
    for col in 0..n {
        let pivot = (col..n)
            .max_by(|&i, &j| m[i][col].abs().total_cmp(&m[j][col].abs()))
            .unwrap();
        if m[pivot][col].abs() < 1e-15 {
            return 0.0;
        }
        if pivot != col {
            m.swap(pivot, col);
            det = -det;
        }
        det *= m[col][col];
        for row in col + 1..n {
            let f = m[row][col] / m[col][col];
            let pivot_row = m[col].clone();
            for (x, p) in m[row].iter_mut().zip(pivot_row).skip(col) {
                *x -= f * p;
            }
        }
    }
    det
}

/// Sylvester's criterion on the cosine matrix of `j`.
pub fn cosine_positive_definite(g: &DefiningGraph, j: GenSet) -> bool {
    let b = cosine_matrix(g, &j.to_vec());
    (1..=b.len()).all(|k| determinant(b[..k].iter().map(|r| r[..k].to_vec()).collect()) > FLOAT_TOL)
}

/// Matrices of the simple reflections of the whole graph.
pub fn reflection_matrices(g: &DefiningGraph) -> Vec<Matrix> {
    let gens: Vec<Gen> = g.gens().collect();
    let b = cosine_matrix(g, &gens);
    let n = gens.len();
    (0..n)
        .map(|s| {
            let mut m: Matrix = (0..n)
                .map(|i| (0..n).map(|j| if i == j { 1.0 } else { 0.0 }).collect())
                .collect();
            for j in 0..n {
                m[s][j] -= 2.0 * b[s][j];
            }
            m
        })
        .collect()
}

fn mat_mul(a: &Matrix, b: &Matrix) -> Matrix {
    let n = a.len();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| (0..n).map(|k| a[i][k] * b[k][j]).sum())
                .collect()
        })
        .collect()
}

fn key(m: &Matrix) -> Vec<i64> {
    m.iter()
        .flatten()
        .map(|x| (x * 1e6).round() as i64)
        .collect()
}

/// Order of the matrix group generated by the reflections in `j`; `None` past `cap`.
pub fn brute_order(g: &DefiningGraph, j: GenSet, cap: usize) -> Option<usize> {
    let mats = reflection_matrices(g);
    let n = g.rank();
    let id: Matrix = (0..n)
        .map(|i| (0..n).map(|k| if i == k { 1.0 } else { 0.0 }).collect())
        .collect();
    let mut seen = HashSet::from([key(&id)]);
    let mut queue = VecDeque::from([id]);
    while let Some(m) = queue.pop_front() {
        for s in j.iter() {
            let next = mat_mul(&m, &mats[s.index()]);
            if seen.insert(key(&next)) {
                if seen.len() > cap {
                    return None;
                }
                queue.push_back(next);
            }
        }
    }
    Some(seen.len())
}

/// Determinant of the representing matrix of a word.
pub fn word_determinant(g: &DefiningGraph, word: &[Gen]) -> f64 {
    let mats = reflection_matrices(g);
    let n = g.rank();
    let mut m: Matrix = (0..n)
        .map(|i| (0..n).map(|k| if i == k { 1.0 } else { 0.0 }).collect())
        .collect();
    for s in word {
        m = mat_mul(&m, &mats[s.index()]);
    }
    determinant(m)
}

/// Closure of `gens` under multiplication; `None` past `cap`.
pub fn closure(g: &Group, gens: &[Element], cap: usize) -> Option<Vec<Element>> {
    let mut seen = vec![g.identity()];
    let mut index: HashSet<Element> = seen.iter().copied().collect();
    let mut i = 0;
    while i < seen.len() {
        let x = seen[i];
        for &y in gens {
            let z = g.multiply(x, y);
            if index.insert(z) {
                if index.len() > cap {
                    return None;
                }
                seen.push(z);
            }
        }
        i += 1;
    }
    Some(seen)
}

/// Maximal subsets of `elements` generating a finite group.
pub fn maximal_finite_subsets(g: &Group, elements: &[Element]) -> Vec<Vec<usize>> {
    let n = elements.len();
    let finite: Vec<u64> = (1u64..1 << n)
        .filter(|&mask| {
            let sub: Vec<Element> = (0..n)
                .filter(|i| mask >> i & 1 == 1)
                .map(|i| elements[i])
                .collect();
            closure(g, &sub, ORDER_CAP).is_some()
        })
        .collect();
    finite
        .iter()
        .filter(|&&m| !finite.iter().any(|&o| o != m && o & m == m))
        .map(|&m| (0..n).filter(|i| m >> i & 1 == 1).collect())
        .collect()
}

fn min_element(g: &Group, xs: &[Element]) -> Element {
    *xs.iter().min_by(|&&a, &&b| g.shortlex_cmp(a, b)).unwrap()
}

/// The unique coset `c⟨J⟩`, `J` maximal spherical in the reference, containing every `c⁻¹hc` for
/// `h` in the finite group `h_group`; found by scanning anchors in a ball.
pub fn fixed_cell(g: &Group, h_group: &[Element], radius: usize) -> Vec<Element> {
    let graph = g.graph();
    let spherical: Vec<GenSet> = graph
        .all()
        .subsets()
        .filter(|j| !j.is_empty() && brute_order(graph, *j, ORDER_CAP).is_some())
        .collect();
    let maximal: Vec<GenSet> = spherical
        .iter()
        .copied()
        .filter(|&j| !spherical.iter().any(|&o| o != j && j.is_subset(o)))
        .collect();
    let mut cells: HashMap<Element, Vec<Element>> = HashMap::new();
    for c in g.enumerate_ball(radius, 1_000_000).unwrap() {
        let ci = g.inverse(c);
        for &j in &maximal {
            if h_group
                .iter()
                .all(|&h| g.support(g.multiply(g.multiply(ci, h), c)).is_subset(j))
            {
                let parabolic: Vec<Element> = closure(
                    g,
                    &j.iter().map(|s| g.generator(s)).collect::<Vec<_>>(),
                    ORDER_CAP,
                )
                .unwrap();
                let coset: Vec<Element> = parabolic.iter().map(|&v| g.multiply(c, v)).collect();
                cells.entry(min_element(g, &coset)).or_insert(coset);
            }
        }
    }
    assert_eq!(cells.len(), 1, "expected a unique fixed maximal cell");
    cells.into_values().next().unwrap()
}

/// Chambers `c` of the cell with `c⁻¹xc` a simple reflection for every `x`.
pub fn incident_frame(g: &Group, cell: &[Element], xs: &[Element]) -> Vec<Element> {
    cell.iter()
        .copied()
        .filter(|&c| {
            xs.iter()
                .all(|&x| g.length(g.multiply(g.multiply(g.inverse(c), x), c)) == 1)
        })
        .collect()
}

pub fn set_distance(g: &Group, a: &[Element], b: &[Element]) -> usize {
    a.iter()
        .flat_map(|&x| b.iter().map(move |&y| (x, y)))
        .map(|(x, y)| g.length(g.multiply(g.inverse(x), y)))
        .min()
        .unwrap()
}

/// `(K1, K2)` by brute force, valid when every maximal finite subset has at most two elements.
pub fn brute_complexity(g: &Group, elements: &[Element], radius: usize) -> (usize, usize) {
    let parts = maximal_finite_subsets(g, elements);
    assert!(
        parts.iter().all(|p| p.len() <= 2),
        "oracle needs irreducible parts of size at most two"
    );
    let mut cells = Vec::new();
    let mut frames = Vec::new();
    for p in &parts {
        let xs: Vec<Element> = p.iter().map(|&i| elements[i]).collect();
        let h = closure(g, &xs, ORDER_CAP).unwrap();
        let cell = fixed_cell(g, &h, radius);
        frames.push(incident_frame(g, &cell, &xs));
        cells.push(cell);
    }
    let mut k = (0, 0);
    for l in 0..parts.len() {
        for i in (0..parts.len()).filter(|&i| i != l) {
            k.0 += set_distance(g, &cells[l], &cells[i]);
            k.1 += set_distance(g, &frames[l], &frames[i]);
        }
    }
    k
}
