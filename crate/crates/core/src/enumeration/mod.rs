//! Two-class pairs: the x/y/z bijection, exhaustive generators, and the
//! closed-form counts they are checked against.

mod compositions;
pub mod formulas;
pub mod pairs;
pub mod xyz;

pub use compositions::WeakCompositions;
pub use formulas::{burnside_combine, closed_formulas, count_symmetric_direct, CountRecord};
pub use pairs::{enumerate_bipartite_canonical, enumerate_pairs, Pairs};
pub use xyz::{
    decompositions, pair_to_xyz, separation_violated_xyz, xyz_to_pair, XyzDecomposition,
};
