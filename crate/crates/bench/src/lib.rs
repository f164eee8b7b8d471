//! Fixtures shared by the benchmarks.

use twistcox::{catalog, GeneratingSet, Group, Params};

/// The quadrilateral group with `b` replaced by its conjugate under `sts`.
pub fn twisted_q3(g: &Group) -> GeneratingSet<'_> {
    let els = ["a", "s", "t", "s t s b s t s"]
        .iter()
        .map(|w| g.parse(w).expect("word in Q3"))
        .collect();
    GeneratingSet::from_elements(
        g,
        &["a", "s", "t", "b"],
        els,
        Params {
            radius: 8,
            ..Params::default()
        },
    )
    .expect("twisted Q3 is a generating set")
}

pub fn q3_group() -> Group {
    Group::new(catalog::q3())
}
