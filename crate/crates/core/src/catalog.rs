//! Named test instances.

use crate::graph::DefiningGraph;

fn build(names: &[&str], edges: &[(&str, &str, u32)]) -> DefiningGraph {
    DefiningGraph::from_edges(names, edges).expect("catalog instance is well formed")
}

/// Path of four generators `a s t b` with the given labels.
pub fn path4(labels: [u32; 3]) -> DefiningGraph {
    build(
        &["a", "s", "t", "b"],
        &[
            ("a", "s", labels[0]),
            ("s", "t", labels[1]),
            ("t", "b", labels[2]),
        ],
    )
}

pub fn q3() -> DefiningGraph {
    path4([4, 3, 4])
}

pub fn q4() -> DefiningGraph {
    path4([4, 4, 4])
}

pub fn q5() -> DefiningGraph {
    path4([3, 5, 3])
}

pub fn e1() -> DefiningGraph {
    build(
        &["s", "t", "p", "q"],
        &[("s", "t", 3), ("t", "p", 3), ("s", "p", 2), ("t", "q", 4)],
    )
}

pub fn e2() -> DefiningGraph {
    build(
        &["s", "t", "p", "q", "x"],
        &[
            ("s", "t", 3),
            ("t", "p", 3),
            ("s", "p", 2),
            ("t", "q", 4),
            ("p", "x", 3),
        ],
    )
}

pub fn e3() -> DefiningGraph {
    build(
        &["s", "t", "p", "q", "x"],
        &[
            ("s", "t", 3),
            ("t", "p", 3),
            ("s", "p", 2),
            ("t", "q", 4),
            ("p", "x", 3),
            ("q", "x", 3),
        ],
    )
}

/// Path `u s t p` with labels (3,4,3) and commuting non-neighbours, of type F4.
pub fn f4g() -> DefiningGraph {
    build(
        &["u", "s", "t", "p"],
        &[
            ("u", "s", 3),
            ("s", "t", 4),
            ("t", "p", 3),
            ("u", "t", 2),
            ("u", "p", 2),
            ("s", "p", 2),
        ],
    )
}

/// Two generators with label `m`.
pub fn dihedral(m: u32) -> DefiningGraph {
    build(&["s", "t"], &[("s", "t", m)])
}

/// A linear diagram with the given consecutive labels; remaining pairs commute.
pub fn linear(labels: &[u32]) -> DefiningGraph {
    let names: Vec<String> = (0..=labels.len()).map(|i| format!("g{i}")).collect();
    let mut edges: Vec<(String, String, u32)> = Vec::new();
    for i in 0..names.len() {
        for j in i + 1..names.len() {
            let m = if j == i + 1 { labels[i] } else { 2 };
            edges.push((names[i].clone(), names[j].clone(), m));
        }
    }
    let e: Vec<(&str, &str, u32)> = edges
        .iter()
        .map(|(a, b, m)| (a.as_str(), b.as_str(), *m))
        .collect();
    build(&names.iter().map(String::as_str).collect::<Vec<_>>(), &e)
}

/// All named instances with their names.
pub fn all() -> Vec<(&'static str, DefiningGraph)> {
    vec![
        ("Q3", q3()),
        ("Q4", q4()),
        ("Q5", q5()),
        ("E1", e1()),
        ("E2", e2()),
        ("E3", e3()),
        ("F4G", f4g()),
    ]
}

pub fn by_name(name: &str) -> Option<DefiningGraph> {
    all()
        .into_iter()
        .find(|(n, _)| n.eq_ignore_ascii_case(name))
        .map(|(_, g)| g)
}
