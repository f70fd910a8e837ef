//! Simple games parameterized by equivalence classes of players.
//!
//! A simple game is stored as its antichain of minimal winning coalitions
//! ([`SimpleGame`]). Grouping equivalent players turns it into a pair
//! `(n̄, M)` of class sizes and minimal winning profiles ([`VectorGame`]),
//! and [`canonical_form`] picks one pair per isomorphism class.
//!
//! For two classes the pairs are counted exactly, both by generators
//! ([`enumeration::enumerate_pairs`], [`enumeration::enumerate_bipartite_canonical`])
//! and by closed forms ([`enumeration::closed_formulas`]). The [`oracle`]
//! module recounts everything by brute force over all labeled games.
//!
//! ```
//! use simple_games::{canonical_form, VectorGame};
//!
//! let pair = VectorGame::new(vec![2, 4], vec![vec![1, 2], vec![0, 3]]).unwrap();
//! let game = pair.expand().unwrap();
//! assert_eq!(game.min_winning().len(), 16);
//! let canon = canonical_form(&game);
//! assert_eq!(canon.n_bar(), &[4, 2]);
//! assert_eq!(canon.rows(), &[vec![3, 0], vec![2, 1]]);
//! ```

pub mod canonical;
pub mod coalition;
pub mod enumeration;
pub mod error;
pub mod game;
pub mod oracle;
pub mod vector;

pub use canonical::{canonical_form, is_isomorphic};
pub use coalition::{Coalition, MAX_PLAYERS};
pub use error::{Error, Result};
pub use game::{Partition, SimpleGame, WeightedSpec};
pub use vector::{
    column_major, lex_compare, matrix_lex_compare, minimal_winning_vectors, partial_compare,
    ConditionReport, Dominance, VectorGame, Violation,
};
