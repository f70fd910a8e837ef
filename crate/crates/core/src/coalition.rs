//! Coalitions as fixed-width bit sets over player indices.
//!
//! Players are indexed from 0 internally. Everything that leaves the crate
//! (JSON, error messages, `Display`) uses 1-based player numbers.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// Width of the bit set, and therefore the largest supported player count.
pub const MAX_PLAYERS: usize = 64;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Coalition(u64);

impl Coalition {
    pub const EMPTY: Coalition = Coalition(0);

    pub const fn from_bits(bits: u64) -> Self {
        Coalition(bits)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    /// The grand coalition on `n` players.
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_PLAYERS);
        if n >= MAX_PLAYERS {
            Coalition(u64::MAX)
        } else {
            Coalition((1u64 << n) - 1)
        }
    }

    pub fn singleton(player: usize) -> Self {
        debug_assert!(player < MAX_PLAYERS);
        Coalition(1u64 << player)
    }

    /// Builds a coalition from 0-indexed players.
    pub fn from_players<I: IntoIterator<Item = usize>>(players: I) -> Self {
        players.into_iter().fold(Coalition::EMPTY, |c, p| c.with(p))
    }

    /// Builds a coalition from 1-indexed players, rejecting anything outside `1..=n`.
    pub fn from_one_indexed(players: &[usize], n: usize) -> Result<Self> {
        let mut c = Coalition::EMPTY;
        for &p in players {
            if p == 0 || p > n {
                return Err(Error::PlayerOutOfRange { player: p, n });
            }
            c = c.with(p - 1);
        }
        Ok(c)
    }

    pub fn to_one_indexed(self) -> Vec<usize> {
        self.players().map(|p| p + 1).collect()
    }

    pub fn contains(self, player: usize) -> bool {
        player < MAX_PLAYERS && self.0 >> player & 1 == 1
    }

    #[must_use]
    pub fn with(self, player: usize) -> Self {
        Coalition(self.0 | 1u64 << player)
    }

    #[must_use]
    pub fn without(self, player: usize) -> Self {
        Coalition(self.0 & !(1u64 << player))
    }

    /// The image of `self` under the transposition of players `i` and `j`.
    pub fn swapped(self, i: usize, j: usize) -> Self {
        if self.contains(i) == self.contains(j) {
            self
        } else {
            Coalition(self.0 ^ (1u64 << i) ^ (1u64 << j))
        }
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset(self, other: Coalition) -> bool {
        self.0 & other.0 == self.0
    }

    #[must_use]
    pub fn union(self, other: Coalition) -> Self {
        Coalition(self.0 | other.0)
    }

    #[must_use]
    pub fn intersection(self, other: Coalition) -> Self {
        Coalition(self.0 & other.0)
    }

    #[must_use]
    pub fn difference(self, other: Coalition) -> Self {
        Coalition(self.0 & !other.0)
    }

    /// True iff every member is a player of an `n`-player game.
    pub fn fits(self, n: usize) -> bool {
        self.is_subset(Coalition::full(n))
    }

    pub fn min_player(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn max_player(self) -> Option<usize> {
        (self.0 != 0).then(|| 63 - self.0.leading_zeros() as usize)
    }

    /// Members in ascending order, 0-indexed.
    pub fn players(self) -> Players {
        Players(self.0)
    }

    /// Every subset of this coalition, including the empty set and itself.
    pub fn subsets(self) -> Subsets {
        Subsets {
            mask: self.0,
            next: Some(self.0),
        }
    }
}

/// Orders by size, then lexicographically by the ascending member lists.
impl Ord for Coalition {
    fn cmp(&self, other: &Self) -> Ordering {
        // for equal sizes the member lists first differ at the lowest
        // player in exactly one of them, and that side is smaller
        self.len().cmp(&other.len()).then_with(|| {
            let diff = self.0 ^ other.0;
            if diff == 0 {
                Ordering::Equal
            } else if self.0 & diff & diff.wrapping_neg() != 0 {
                Ordering::Less
            } else {
                Ordering::Greater
            }
        })
    }
}

impl PartialOrd for Coalition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Coalition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Coalition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, p) in self.players().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}", p + 1)?;
        }
        f.write_str("}")
    }
}

#[derive(Clone, Debug)]
pub struct Players(u64);

impl Iterator for Players {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let p = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(p)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let k = self.0.count_ones() as usize;
        (k, Some(k))
    }
}

impl ExactSizeIterator for Players {}

/// Submask enumeration in decreasing numeric order.
#[derive(Clone, Debug)]
pub struct Subsets {
    mask: u64,
    next: Option<u64>,
}

impl Iterator for Subsets {
    type Item = Coalition;

    fn next(&mut self) -> Option<Coalition> {
        let cur = self.next?;
        self.next = (cur != 0).then(|| (cur - 1) & self.mask);
        Some(Coalition(cur))
    }
}
