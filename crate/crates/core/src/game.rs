//! Coalition-level simple games.

use serde::{Deserialize, Serialize};

use crate::coalition::{Coalition, MAX_PLAYERS};
use crate::error::{Error, Result};

/// A simple game on players `0..n`, stored as its antichain of minimal
/// winning coalitions.
///
/// The antichain is kept sorted by [`Coalition`]'s order (size, then
/// lexicographic members), so two games are equal iff they have the same
/// winning coalitions.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawGame", into = "RawGame")]
pub struct SimpleGame {
    n: usize,
    min_winning: Vec<Coalition>,
}

#[derive(Serialize, Deserialize)]
struct RawGame {
    n: usize,
    min_winning: Vec<Vec<usize>>,
}

impl TryFrom<RawGame> for SimpleGame {
    type Error = Error;

    fn try_from(raw: RawGame) -> Result<Self> {
        check_player_count(raw.n)?;
        let sets = raw
            .min_winning
            .iter()
            .map(|p| Coalition::from_one_indexed(p, raw.n))
            .collect::<Result<Vec<_>>>()?;
        SimpleGame::from_minimal_winning(raw.n, sets)
    }
}

impl From<SimpleGame> for RawGame {
    fn from(g: SimpleGame) -> Self {
        RawGame {
            n: g.n,
            min_winning: g.min_winning.iter().map(|c| c.to_one_indexed()).collect(),
        }
    }
}

fn check_player_count(n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::NoPlayers);
    }
    if n > MAX_PLAYERS {
        return Err(Error::TooManyPlayers {
            n,
            max: MAX_PLAYERS,
        });
    }
    Ok(())
}

impl SimpleGame {
    /// Builds the game whose winning coalitions are the supersets of `sets`.
    ///
    /// `sets` must be a nonempty antichain of nonempty coalitions on `n`
    /// players. Repeated coalitions are collapsed.
    pub fn from_minimal_winning<I>(n: usize, sets: I) -> Result<Self>
    where
        I: IntoIterator<Item = Coalition>,
    {
        check_player_count(n)?;
        let mut sets: Vec<Coalition> = sets.into_iter().collect();
        sets.sort_unstable();
        sets.dedup();
        if sets.is_empty() {
            return Err(Error::EmptyFamily);
        }
        for &s in &sets {
            if s.is_empty() {
                return Err(Error::EmptyCoalition);
            }
            if !s.fits(n) {
                let player = s.max_player().unwrap_or(0) + 1;
                return Err(Error::PlayerOutOfRange { player, n });
            }
        }
        // Sorted by size, so only an earlier set can be a subset of a later one.
        for (k, &big) in sets.iter().enumerate() {
            if let Some(&small) = sets[..k].iter().find(|s| s.is_subset(big)) {
                return Err(Error::NotAntichain {
                    subset: small.to_string(),
                    superset: big.to_string(),
                });
            }
        }
        Ok(SimpleGame {
            n,
            min_winning: sets,
        })
    }

    /// Caller guarantees `sets` is a valid nonempty antichain on `n` players.
    pub(crate) fn from_antichain_unchecked(n: usize, mut sets: Vec<Coalition>) -> Self {
        sets.sort_unstable();
        debug_assert!(!sets.is_empty() && sets.iter().all(|s| !s.is_empty() && s.fits(n)));
        SimpleGame {
            n,
            min_winning: sets,
        }
    }

    /// The weighted game `v(S) = 1` iff the weight of `S` reaches the quota.
    ///
    /// Walks the power set, so this is only practical for small `n`.
    pub fn from_weighted(spec: &WeightedSpec) -> Self {
        let w = &spec.weights;
        let n = w.len();
        let mut mw = Vec::new();
        for s in Coalition::full(n).subsets() {
            let weight: u64 = s.players().map(|p| w[p]).sum();
            if weight >= spec.quota && s.players().all(|p| weight - w[p] < spec.quota) {
                mw.push(s);
            }
        }
        SimpleGame::from_antichain_unchecked(n, mw)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn min_winning(&self) -> &[Coalition] {
        &self.min_winning
    }

    pub fn grand_coalition(&self) -> Coalition {
        Coalition::full(self.n)
    }

    /// `v(s)`, rejecting coalitions that mention players outside the game.
    pub fn value(&self, s: Coalition) -> Result<bool> {
        if !s.fits(self.n) {
            let player = s.max_player().unwrap_or(0) + 1;
            return Err(Error::PlayerOutOfRange { player, n: self.n });
        }
        Ok(self.wins(s))
    }

    /// Unchecked `v(s)`: some minimal winning coalition lies inside `s`.
    #[inline]
    pub fn wins(&self, s: Coalition) -> bool {
        self.min_winning.iter().any(|m| m.is_subset(s))
    }

    /// Losing coalitions whose every one-player extension wins, sorted.
    pub fn maximal_losing(&self) -> Vec<Coalition> {
        let full = self.grand_coalition();
        let mut out: Vec<Coalition> = full
            .subsets()
            .filter(|&s| {
                !self.wins(s) && full.difference(s).players().all(|p| self.wins(s.with(p)))
            })
            .collect();
        out.sort_unstable();
        out
    }

    /// Whether players `i` and `j` (0-indexed) are equivalent, checked
    /// directly over every coalition avoiding both.
    pub fn are_equivalent(&self, i: usize, j: usize) -> Result<bool> {
        for p in [i, j] {
            if p >= self.n {
                return Err(Error::PlayerOutOfRange {
                    player: p + 1,
                    n: self.n,
                });
            }
        }
        if i == j {
            return Err(Error::SamePlayer(i + 1));
        }
        Ok(self.equivalent_unchecked(i, j))
    }

    fn equivalent_unchecked(&self, i: usize, j: usize) -> bool {
        let rest = self.grand_coalition().without(i).without(j);
        rest.subsets()
            .all(|s| self.wins(s.with(i)) == self.wins(s.with(j)))
    }

    /// Same answer as [`SimpleGame::are_equivalent`]: `i` and `j` are
    /// equivalent iff swapping them maps the minimal winning coalitions into
    /// themselves (and so onto, being an involution).
    fn swap_invariant(&self, i: usize, j: usize) -> bool {
        self.min_winning.iter().all(|&c| {
            c.contains(i) == c.contains(j)
                || self.min_winning.binary_search(&c.swapped(i, j)).is_ok()
        })
    }

    /// Equivalence classes of players, largest first, ties broken by the
    /// smallest member.
    pub fn equivalence_partition(&self) -> Partition {
        // equivalent players lie in equally many minimal winning coalitions
        let mut degree = vec![0usize; self.n];
        for c in &self.min_winning {
            for p in c.players() {
                degree[p] += 1;
            }
        }
        let mut classes: Vec<Coalition> = Vec::new();
        for p in 0..self.n {
            let home = classes.iter_mut().find(|c| {
                let rep = c.min_player().expect("classes are nonempty");
                degree[rep] == degree[p] && self.swap_invariant(rep, p)
            });
            match home {
                Some(c) => *c = c.with(p),
                None => classes.push(Coalition::singleton(p)),
            }
        }
        Partition::ordered(self.n, classes)
    }

    /// Renames player `p` to `perm[p]` (0-indexed).
    pub fn relabel(&self, perm: &[usize]) -> Result<Self> {
        check_permutation(perm, self.n)?;
        let sets = self
            .min_winning
            .iter()
            .map(|c| Coalition::from_players(c.players().map(|p| perm[p])))
            .collect();
        Ok(SimpleGame::from_antichain_unchecked(self.n, sets))
    }
}

pub(crate) fn check_permutation(perm: &[usize], len: usize) -> Result<()> {
    if perm.len() != len {
        return Err(Error::NotAPermutation(len));
    }
    let mut seen = vec![false; len];
    for &p in perm {
        if p >= len || std::mem::replace(&mut seen[p], true) {
            return Err(Error::NotAPermutation(len));
        }
    }
    Ok(())
}

/// Weights and quota of a weighted game.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightedSpec {
    weights: Vec<u64>,
    quota: u64,
}

impl WeightedSpec {
    pub fn new(weights: Vec<u64>, quota: u64) -> Result<Self> {
        check_player_count(weights.len())?;
        if quota == 0 {
            return Err(Error::ZeroQuota);
        }
        let total: u64 = weights.iter().sum();
        if quota > total {
            return Err(Error::QuotaExceedsWeight { quota, total });
        }
        Ok(WeightedSpec { weights, quota })
    }

    pub fn weights(&self) -> &[u64] {
        &self.weights
    }

    pub fn quota(&self) -> u64 {
        self.quota
    }
}

/// An ordered partition of the players into nonempty classes.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Partition {
    n: usize,
    classes: Vec<Coalition>,
}

impl Partition {
    /// Validates that `classes` are disjoint, nonempty and cover `0..n`.
    pub fn new(n: usize, classes: Vec<Coalition>) -> Result<Self> {
        check_player_count(n)?;
        let mut seen = Coalition::EMPTY;
        for &c in &classes {
            if c.is_empty() {
                return Err(Error::InvalidPartition("empty class".into()));
            }
            if !c.fits(n) {
                return Err(Error::InvalidPartition(format!(
                    "class {c} exceeds {n} players"
                )));
            }
            if !c.intersection(seen).is_empty() {
                return Err(Error::InvalidPartition(format!(
                    "class {c} overlaps another"
                )));
            }
            seen = seen.union(c);
        }
        if seen != Coalition::full(n) {
            return Err(Error::InvalidPartition(
                "classes do not cover all players".into(),
            ));
        }
        Ok(Partition { n, classes })
    }

    fn ordered(n: usize, mut classes: Vec<Coalition>) -> Self {
        classes.sort_by_key(|c| (std::cmp::Reverse(c.len()), c.min_player()));
        Partition { n, classes }
    }

    /// Consecutive blocks of the given sizes: the first `sizes[0]` players,
    /// then the next `sizes[1]`, and so on.
    pub fn blocks(sizes: &[u32]) -> Result<Self> {
        let mut classes = Vec::with_capacity(sizes.len());
        let mut start = 0usize;
        for &s in sizes {
            let end = start + s as usize;
            if end > MAX_PLAYERS {
                return Err(Error::TooManyPlayers {
                    n: end,
                    max: MAX_PLAYERS,
                });
            }
            classes.push(Coalition::from_players(start..end));
            start = end;
        }
        Partition::new(start, classes)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn t(&self) -> usize {
        self.classes.len()
    }

    pub fn classes(&self) -> &[Coalition] {
        &self.classes
    }

    pub fn sizes(&self) -> Vec<u32> {
        self.classes.iter().map(|c| c.len() as u32).collect()
    }

    /// Per-class member counts of `s`.
    pub fn profile(&self, s: Coalition) -> Vec<u32> {
        self.classes
            .iter()
            .map(|c| c.intersection(s).len() as u32)
            .collect()
    }
}
