//! The `(n̄, M)` parameterization: a count vector of class sizes and a matrix
//! whose rows are the minimal winning profiles.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::coalition::{Coalition, MAX_PLAYERS};
use crate::error::{Error, Result};
use crate::game::{check_permutation, Partition, SimpleGame};

/// Outcome of comparing two vectors under the componentwise order.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Dominance {
    Less,
    Equal,
    Greater,
    Incomparable,
}

pub fn partial_compare(x: &[u32], y: &[u32]) -> Result<Dominance> {
    if x.len() != y.len() {
        return Err(Error::LengthMismatch {
            left: x.len(),
            right: y.len(),
        });
    }
    Ok(dominance(x, y))
}

fn dominance(x: &[u32], y: &[u32]) -> Dominance {
    let le = x.iter().zip(y).all(|(a, b)| a <= b);
    let ge = x.iter().zip(y).all(|(a, b)| a >= b);
    match (le, ge) {
        (true, true) => Dominance::Equal,
        (true, false) => Dominance::Less,
        (false, true) => Dominance::Greater,
        (false, false) => Dominance::Incomparable,
    }
}

/// `x ⪯ y` componentwise; lengths must match.
#[inline]
pub(crate) fn dominated_by(x: &[u32], y: &[u32]) -> bool {
    x.iter().zip(y).all(|(a, b)| a <= b)
}

pub fn lex_compare(x: &[u32], y: &[u32]) -> Result<Ordering> {
    if x.len() != y.len() {
        return Err(Error::LengthMismatch {
            left: x.len(),
            right: y.len(),
        });
    }
    Ok(x.cmp(y))
}

/// Matrix entries read column by column: `x[0][0], x[1][0], …, x[0][1], …`.
pub fn column_major(rows: &[Vec<u32>]) -> Vec<u32> {
    let t = rows.first().map_or(0, Vec::len);
    (0..t)
        .flat_map(|j| rows.iter().map(move |row| row[j]))
        .collect()
}

/// Lexicographic comparison of two equally shaped matrices by their
/// column-major flattenings.
pub fn matrix_lex_compare(x: &[Vec<u32>], y: &[Vec<u32>]) -> Result<Ordering> {
    let shape = |m: &[Vec<u32>]| (m.len(), m.first().map_or(0, Vec::len));
    if shape(x) != shape(y) || x.iter().chain(y).any(|r| r.len() != shape(x).1) {
        return Err(Error::ShapeMismatch(format!(
            "{}x{} vs {}x{}",
            shape(x).0,
            shape(x).1,
            shape(y).0,
            shape(y).1
        )));
    }
    Ok(column_major(x).cmp(&column_major(y)))
}

/// A count vector `n̄` paired with a matrix of minimal winning vectors.
///
/// Construction only checks the shape: `n̄` nonempty with positive entries,
/// at least one row, and every row as wide as `n̄`. Everything else is
/// reported by [`VectorGame::check_conditions`].
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawVectorGame")]
pub struct VectorGame {
    n_bar: Vec<u32>,
    matrix: Vec<Vec<u32>>,
}

#[derive(Deserialize)]
struct RawVectorGame {
    n_bar: Vec<u32>,
    matrix: Vec<Vec<u32>>,
}

impl TryFrom<RawVectorGame> for VectorGame {
    type Error = Error;

    fn try_from(raw: RawVectorGame) -> Result<Self> {
        VectorGame::new(raw.n_bar, raw.matrix)
    }
}

impl VectorGame {
    pub fn new(n_bar: Vec<u32>, matrix: Vec<Vec<u32>>) -> Result<Self> {
        if n_bar.is_empty() {
            return Err(Error::ShapeMismatch("count vector is empty".into()));
        }
        if n_bar.contains(&0) {
            return Err(Error::ShapeMismatch("count vector has a zero entry".into()));
        }
        if matrix.is_empty() {
            return Err(Error::ShapeMismatch("matrix has no rows".into()));
        }
        if let Some(row) = matrix.iter().find(|row| row.len() != n_bar.len()) {
            return Err(Error::ShapeMismatch(format!(
                "row of width {} for {} classes",
                row.len(),
                n_bar.len()
            )));
        }
        Ok(VectorGame { n_bar, matrix })
    }

    pub(crate) fn new_unchecked(n_bar: Vec<u32>, matrix: Vec<Vec<u32>>) -> Self {
        debug_assert!(VectorGame::new(n_bar.clone(), matrix.clone()).is_ok());
        VectorGame { n_bar, matrix }
    }

    pub fn n_bar(&self) -> &[u32] {
        &self.n_bar
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.matrix
    }

    /// Total number of players.
    pub fn n(&self) -> usize {
        self.n_bar.iter().map(|&k| k as usize).sum()
    }

    /// Number of classes.
    pub fn t(&self) -> usize {
        self.n_bar.len()
    }

    /// Number of minimal winning vectors.
    pub fn r(&self) -> usize {
        self.matrix.len()
    }

    pub fn check_conditions(&self) -> ConditionReport {
        let mut failures = Vec::new();
        let t = self.t();

        let mut bounds_ok = true;
        for (h, row) in self.matrix.iter().enumerate() {
            if !dominated_by(row, &self.n_bar) {
                bounds_ok = false;
                failures.push(Violation::RowOutOfBounds { row: h });
            }
        }

        let mut structural_ok = bounds_ok;
        if self.matrix.len() == 1 && self.matrix[0].iter().all(|&v| v == 0) {
            structural_ok = false;
            failures.push(Violation::EmptyCoalitionWins);
        }
        for a in 0..self.r() {
            for b in a + 1..self.r() {
                if dominance(&self.matrix[a], &self.matrix[b]) != Dominance::Incomparable {
                    structural_ok = false;
                    failures.push(Violation::RowsComparable {
                        first: a,
                        second: b,
                    });
                }
            }
        }
        for h in 1..self.r() {
            if self.matrix[h - 1] <= self.matrix[h] {
                structural_ok = false;
                failures.push(Violation::RowsNotDecreasing { row: h - 1 });
            }
        }

        let mut separation_ok = true;
        for i in 0..t {
            for j in i + 1..t {
                if !self.separable(i, j) {
                    separation_ok = false;
                    failures.push(Violation::ClassesNotSeparable {
                        first: i,
                        second: j,
                    });
                }
            }
        }

        let mut canonical_ok = true;
        if let Some(k) = (1..t).find(|&k| self.n_bar[k - 1] < self.n_bar[k]) {
            canonical_ok = false;
            failures.push(Violation::CountVectorNotDecreasing { position: k - 1 });
        }
        if let Some(pi) = self.larger_stabilizer_image() {
            canonical_ok = false;
            failures.push(Violation::NotLexMaximal { permutation: pi });
        }

        ConditionReport {
            structural_ok,
            bounds_ok,
            separation_ok,
            canonical_ok,
            failures,
        }
    }

    /// Some row, shifted by one player from class `j` to class `i` or back,
    /// stays in bounds and becomes losing.
    fn separable(&self, i: usize, j: usize) -> bool {
        let mut candidate = vec![0u32; self.t()];
        for row in &self.matrix {
            for (from, to) in [(j, i), (i, j)] {
                if row[from] == 0 || row[to] >= self.n_bar[to] {
                    continue;
                }
                candidate.copy_from_slice(row);
                candidate[from] -= 1;
                candidate[to] += 1;
                if !self.matrix.iter().any(|m| dominated_by(m, &candidate)) {
                    return true;
                }
            }
        }
        false
    }

    /// Brute force over every class permutation that fixes `n̄`; returns the
    /// first one whose image beats `M` in column-major order.
    fn larger_stabilizer_image(&self) -> Option<Vec<usize>> {
        let own = column_major(&self.matrix);
        let t = self.t();
        let mut perm = Vec::with_capacity(t);
        let mut used = vec![false; t];
        let mut found = None;
        self.walk_stabilizer(&mut perm, &mut used, &mut |pi| {
            let image = self.permuted_unchecked(pi);
            if column_major(&image.matrix) > own {
                found = Some(pi.to_vec());
                return true;
            }
            false
        });
        found
    }

    fn walk_stabilizer(
        &self,
        perm: &mut Vec<usize>,
        used: &mut [bool],
        visit: &mut dyn FnMut(&[usize]) -> bool,
    ) -> bool {
        let k = perm.len();
        if k == self.t() {
            return visit(perm);
        }
        for j in 0..self.t() {
            if used[j] || self.n_bar[j] != self.n_bar[k] {
                continue;
            }
            used[j] = true;
            perm.push(j);
            let stop = self.walk_stabilizer(perm, used, visit);
            perm.pop();
            used[j] = false;
            if stop {
                return true;
            }
        }
        false
    }

    /// `(n̄^π, M^π)`: column `k` of the result is column `pi[k]` of the input
    /// (0-indexed); rows are re-sorted in decreasing lexicographic order.
    pub fn apply_class_permutation(&self, pi: &[usize]) -> Result<VectorGame> {
        check_permutation(pi, self.t())?;
        Ok(self.permuted_unchecked(pi))
    }

    fn permuted_unchecked(&self, pi: &[usize]) -> VectorGame {
        let n_bar = pi.iter().map(|&j| self.n_bar[j]).collect();
        let mut matrix: Vec<Vec<u32>> = self
            .matrix
            .iter()
            .map(|row| pi.iter().map(|&j| row[j]).collect())
            .collect();
        matrix.sort_unstable_by(|a, b| b.cmp(a));
        VectorGame { n_bar, matrix }
    }

    /// The coalition-level game: classes are consecutive blocks of players
    /// and a coalition wins iff its profile dominates some row.
    ///
    /// Requires bounds, incomparable rows in strictly decreasing order, and
    /// a non-empty winning profile; separation is not required.
    pub fn expand(&self) -> Result<SimpleGame> {
        if self.n() > MAX_PLAYERS {
            return Err(Error::TooManyPlayers {
                n: self.n(),
                max: MAX_PLAYERS,
            });
        }
        let report = self.check_conditions();
        if !report.structural_ok {
            let structural = report
                .failures
                .into_iter()
                .filter(Violation::is_structural)
                .collect();
            return Err(Error::InvalidVectorGame(structural));
        }

        let mut offsets = Vec::with_capacity(self.t());
        let mut start = 0u32;
        for &size in &self.n_bar {
            offsets.push(start);
            start += size;
        }

        let mut coalitions = Vec::new();
        for row in &self.matrix {
            let mut partial = vec![0u64];
            for (k, &count) in row.iter().enumerate() {
                let choices = k_subsets(self.n_bar[k], count);
                let shift = offsets[k];
                partial = partial
                    .iter()
                    .flat_map(|&p| choices.iter().map(move |&c| p | c << shift))
                    .collect();
            }
            coalitions.extend(partial.into_iter().map(Coalition::from_bits));
        }
        Ok(SimpleGame::from_antichain_unchecked(self.n(), coalitions))
    }
}

impl fmt::Display for VectorGame {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[u32]| v.iter().map(u32::to_string).collect::<Vec<_>>().join(",");
        write!(f, "({})", join(&self.n_bar))?;
        f.write_str(" [")?;
        for (h, row) in self.matrix.iter().enumerate() {
            if h > 0 {
                f.write_str(",")?;
            }
            write!(f, "[{}]", join(row))?;
        }
        f.write_str("]")
    }
}

/// All `k`-element subsets of `0..size` as bit masks (Gosper's hack).
fn k_subsets(size: u32, k: u32) -> Vec<u64> {
    if k == 0 {
        return vec![0];
    }
    let limit = 1u64 << size;
    let mut out = Vec::new();
    let mut s = (1u64 << k) - 1;
    while s < limit {
        out.push(s);
        let low = s & s.wrapping_neg();
        let ripple = s + low;
        s = (((ripple ^ s) >> 2) / low) | ripple;
    }
    out
}

/// Distinct profiles of the minimal winning coalitions under `p`, sorted in
/// strictly decreasing lexicographic order.
pub fn minimal_winning_vectors(game: &SimpleGame, p: &Partition) -> Vec<Vec<u32>> {
    let mut rows: Vec<Vec<u32>> = game.min_winning().iter().map(|&s| p.profile(s)).collect();
    rows.sort_unstable_by(|a, b| b.cmp(a));
    rows.dedup();
    rows
}

/// A violated condition. Row and class indices are 0-based here and
/// rendered 1-based by `Display`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    RowOutOfBounds {
        row: usize,
    },
    /// A single all-zero row would make the empty coalition winning.
    EmptyCoalitionWins,
    RowsComparable {
        first: usize,
        second: usize,
    },
    RowsNotDecreasing {
        row: usize,
    },
    ClassesNotSeparable {
        first: usize,
        second: usize,
    },
    CountVectorNotDecreasing {
        position: usize,
    },
    NotLexMaximal {
        permutation: Vec<usize>,
    },
}

impl Violation {
    pub fn is_structural(&self) -> bool {
        matches!(
            self,
            Violation::RowOutOfBounds { .. }
                | Violation::EmptyCoalitionWins
                | Violation::RowsComparable { .. }
                | Violation::RowsNotDecreasing { .. }
        )
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::RowOutOfBounds { row } => write!(f, "bounds: row {} exceeds n_bar", row + 1),
            Violation::EmptyCoalitionWins => {
                f.write_str("bounds: the zero row makes the empty coalition winning")
            }
            Violation::RowsComparable { first, second } => {
                write!(
                    f,
                    "incomparability: rows {} and {} are comparable",
                    first + 1,
                    second + 1
                )
            }
            Violation::RowsNotDecreasing { row } => {
                write!(
                    f,
                    "ordering: row {} is not lexicographically above row {}",
                    row + 1,
                    row + 2
                )
            }
            Violation::ClassesNotSeparable { first, second } => {
                write!(
                    f,
                    "separation: classes {} and {} cannot be told apart",
                    first + 1,
                    second + 1
                )
            }
            Violation::CountVectorNotDecreasing { position } => {
                write!(
                    f,
                    "canonical: n_bar increases after position {}",
                    position + 1
                )
            }
            Violation::NotLexMaximal { permutation } => {
                let p: Vec<String> = permutation.iter().map(|j| (j + 1).to_string()).collect();
                write!(
                    f,
                    "canonical: class permutation ({}) gives a larger matrix",
                    p.join(",")
                )
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConditionReport {
    /// Bounds, a non-empty winning profile, incomparable rows, strictly
    /// decreasing rows.
    pub structural_ok: bool,
    pub bounds_ok: bool,
    /// Every pair of classes can be separated by a one-player shift.
    pub separation_ok: bool,
    /// `n̄` weakly decreasing and `M` maximal over the stabilizer of `n̄`.
    pub canonical_ok: bool,
    pub failures: Vec<Violation>,
}

impl ConditionReport {
    pub fn all_ok(&self) -> bool {
        self.structural_ok && self.bounds_ok && self.separation_ok && self.canonical_ok
    }
}
