//! Streams of two-class pairs `(n̄, M)`.
//!
//! Output order: `n̄` ascending, then `M` descending by its column-major
//! flattening. Each `n̄` is generated as one batch, sorted, and emitted.

use std::cmp::{Ordering, Reverse};

use crate::coalition::MAX_PLAYERS;
use crate::enumeration::xyz::{separation_violated_xyz, xyz_to_pair, XyzDecomposition};
use crate::enumeration::WeakCompositions;
use crate::error::{Error, Result};
use crate::vector::{column_major, VectorGame};

fn check_n(n: u32) -> Result<()> {
    if n < 2 || n as usize > MAX_PLAYERS {
        return Err(Error::UnsupportedN {
            n: n as usize,
            min: 2,
            max: MAX_PLAYERS,
        });
    }
    Ok(())
}

/// The stream order on pairs.
pub fn stream_order(a: &VectorGame, b: &VectorGame) -> Ordering {
    a.n_bar()
        .cmp(b.n_bar())
        .then_with(|| column_major(b.rows()).cmp(&column_major(a.rows())))
}

/// Every pair on `n` players with two positive classes (both orderings of
/// `n̄`) whose rows are in bounds, incomparable, sorted, and separate the
/// classes.
pub fn enumerate_pairs(n: u32) -> Result<Pairs> {
    check_n(n)?;
    Ok(Pairs {
        n,
        next_first: 1,
        batch: Vec::new().into_iter(),
    })
}

/// One representative per isomorphism class of games with exactly two
/// equivalence classes: `n̄₁ ≥ n̄₂`, and for `n̄₁ = n̄₂` the first column must
/// dominate the reversed second column lexicographically.
pub fn enumerate_bipartite_canonical(n: u32) -> Result<impl Iterator<Item = VectorGame>> {
    Ok(enumerate_pairs(n)?.filter(|vg| vg.n_bar()[0] >= vg.n_bar()[1] && swap_condition_holds(vg)))
}

/// `(m¹₁, …, mʳ₁) ≥ (mʳ₂, …, m¹₂)` when both classes have equal size;
/// trivially true otherwise.
pub fn swap_condition_holds(vg: &VectorGame) -> bool {
    if vg.n_bar()[0] != vg.n_bar()[1] {
        return true;
    }
    let first = vg.rows().iter().map(|row| row[0]);
    let second_reversed = vg.rows().iter().rev().map(|row| row[1]);
    first.cmp(second_reversed) != Ordering::Less
}

#[derive(Debug)]
pub struct Pairs {
    n: u32,
    next_first: u32,
    batch: std::vec::IntoIter<VectorGame>,
}

impl Iterator for Pairs {
    type Item = VectorGame;

    fn next(&mut self) -> Option<VectorGame> {
        loop {
            if let Some(vg) = self.batch.next() {
                return Some(vg);
            }
            if self.next_first >= self.n {
                return None;
            }
            let n1 = self.next_first;
            self.next_first += 1;
            self.batch = pairs_for_counts(n1, self.n - n1).into_iter();
        }
    }
}

/// All separating pairs with `n̄ = (n1, n2)`, in stream order.
pub fn pairs_for_counts(n1: u32, n2: u32) -> Vec<VectorGame> {
    let n = n1 + n2;
    let n_bar = vec![n1, n2];
    let mut out = Vec::new();

    // r = 1: a single row other than (0, 0) and (n1, n2) that separates.
    for a in 0..=n1 {
        for b in 0..=n2 {
            if (a, b) == (0, 0) || (a, b) == (n1, n2) {
                continue;
            }
            let vg = VectorGame::new_unchecked(n_bar.clone(), vec![vec![a, b]]);
            if vg.check_conditions().separation_ok {
                out.push(vg);
            }
        }
    }

    // r ≥ 2: split the slack of each class between its gaps and its z.
    let mut r = 2usize;
    while (r as u32 - 1) <= n1.min(n2) {
        let slack1 = n1 - (r as u32 - 1);
        let slack2 = n2 - (r as u32 - 1);
        for xz in WeakCompositions::new(slack1, r + 1) {
            for yz in WeakCompositions::new(slack2, r + 1) {
                let d = XyzDecomposition {
                    x: xz[..r].to_vec(),
                    y: yz[..r].to_vec(),
                    z1: xz[r],
                    z2: yz[r],
                };
                if !separation_violated_xyz(&d) {
                    out.push(xyz_to_pair(n, &d).expect("slack split sums correctly"));
                }
            }
        }
        r += 1;
    }

    // one n̄ per batch, so only the matrix key matters
    out.sort_by_cached_key(|vg| Reverse(column_major(vg.rows())));
    out
}
