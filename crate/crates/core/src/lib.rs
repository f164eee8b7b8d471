//! Exact computations with Coxeter generating sets.

pub mod catalog;
pub mod classify;
pub mod complexity;
pub mod error;
pub mod folding;
pub mod geometry;
pub mod graph;
pub mod marking;
pub mod params;
pub mod roots;
pub mod search;
pub mod twist;
pub mod verify;
pub mod word;

pub use classify::{
    classify, is_fc, is_spherical, maximal_spherical_subsets, Family, FiniteFactor, SphericalType,
};
pub use complexity::{complexity, ComplexityValue};
pub use error::{CoxError, Result};
pub use folding::{FoldValue, Folding, FoldingKind};
pub use geometry::{FundamentalDomain, Halfspace, Residue, Side, Wall};
pub use graph::{DefiningGraph, Gen, GenSet, Label};
pub use marking::{Base, GeneratingSet, Marking};
pub use params::Params;
pub use search::{find_conjugator, minimize_complexity, Minimization, SearchLimits};
pub use twist::ElementaryTwist;
pub use verify::CheckReport;
pub use word::{Element, Group, ProductOrder, Reflection};
