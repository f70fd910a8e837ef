//! Canonical `(n̄, M)` representatives of isomorphism classes.
//!
//! Classes are first ordered by decreasing size. Among the class
//! permutations that fix `n̄`, the one whose matrix is largest in
//! column-major order is kept. The search is a branch and bound over
//! column assignments: once columns `0..k` are chosen, the first `k`
//! columns of the re-sorted matrix no longer depend on later choices, so a
//! prefix that already falls below the best leaf can be dropped, and so can
//! any child whose next column is below that of a sibling.

use std::cmp::Ordering;

use crate::game::SimpleGame;
use crate::vector::{minimal_winning_vectors, VectorGame};

pub fn canonical_form(game: &SimpleGame) -> VectorGame {
    let partition = game.equivalence_partition();
    let n_bar = partition.sizes();
    let rows = minimal_winning_vectors(game, &partition);
    let (_, matrix) = max_over_stabilizer(&n_bar, &rows);
    VectorGame::new_unchecked(n_bar, matrix)
}

pub fn is_isomorphic(a: &SimpleGame, b: &SimpleGame) -> bool {
    a.n() == b.n()
        && a.min_winning().len() == b.min_winning().len()
        && canonical_form(a) == canonical_form(b)
}

/// Largest `M^π` over permutations `π` with `n̄^π = n̄`; `n̄` must be weakly
/// decreasing. Returns the permutation (column `k` of the result is input
/// column `π[k]`) together with the permuted, re-sorted matrix.
pub(crate) fn max_over_stabilizer(n_bar: &[u32], rows: &[Vec<u32>]) -> (Vec<usize>, Vec<Vec<u32>>) {
    debug_assert!(n_bar.windows(2).all(|w| w[0] >= w[1]));
    let t = n_bar.len();
    let mut search = Search {
        n_bar,
        rows,
        used: vec![false; t],
        perm: Vec::with_capacity(t),
        columns: Vec::with_capacity(t),
        best: None,
    };
    let groups = vec![(0..rows.len()).collect::<Vec<_>>()];
    search.descend(&groups);
    let best = search.best.expect("the identity is always reached");
    let matrix = best
        .order
        .iter()
        .map(|&h| best.perm.iter().map(|&j| rows[h][j]).collect())
        .collect();
    (best.perm, matrix)
}

struct Best {
    perm: Vec<usize>,
    /// Input row indices in image order.
    order: Vec<usize>,
    columns: Vec<Vec<u32>>,
}

struct Search<'a> {
    n_bar: &'a [u32],
    rows: &'a [Vec<u32>],
    used: Vec<bool>,
    perm: Vec<usize>,
    /// Image columns fixed by the current prefix.
    columns: Vec<Vec<u32>>,
    best: Option<Best>,
}

impl Search<'_> {
    /// `groups` lists row indices in image order, split wherever the
    /// prefix columns differ.
    fn descend(&mut self, groups: &[Vec<usize>]) {
        let k = self.perm.len();
        if let Some(best) = &self.best {
            match self.columns.as_slice().cmp(&best.columns[..k]) {
                Ordering::Less => return,
                Ordering::Equal if k == self.n_bar.len() => return,
                _ => {}
            }
        }
        if k == self.n_bar.len() {
            self.best = Some(Best {
                perm: self.perm.clone(),
                order: groups.iter().flatten().copied().collect(),
                columns: self.columns.clone(),
            });
            return;
        }
        // a child with a smaller next column can never overtake a sibling
        let children: Vec<(usize, Vec<Vec<usize>>, Vec<u32>)> = (0..self.n_bar.len())
            .filter(|&j| !self.used[j] && self.n_bar[j] == self.n_bar[k])
            .map(|j| {
                let (refined, column) = refine(groups, self.rows, j);
                (j, refined, column)
            })
            .collect();
        let Some(top) = children.iter().map(|c| &c.2).max().cloned() else {
            return;
        };
        for (j, refined, column) in children {
            if column != top {
                continue;
            }
            self.used[j] = true;
            self.perm.push(j);
            self.columns.push(column);
            self.descend(&refined);
            self.columns.pop();
            self.perm.pop();
            self.used[j] = false;
        }
    }
}

/// Orders each group by column `j` descending, splitting on value changes.
/// Returns the refined groups and the resulting image column.
fn refine(groups: &[Vec<usize>], rows: &[Vec<u32>], j: usize) -> (Vec<Vec<usize>>, Vec<u32>) {
    let mut refined = Vec::with_capacity(groups.len());
    let mut column = Vec::with_capacity(rows.len());
    for group in groups {
        let mut g = group.clone();
        g.sort_by(|&a, &b| rows[b][j].cmp(&rows[a][j]));
        let mut start = 0;
        for end in 1..=g.len() {
            if end == g.len() || rows[g[end]][j] != rows[g[start]][j] {
                refined.push(g[start..end].to_vec());
                start = end;
            }
        }
        column.extend(g.iter().map(|&h| rows[h][j]));
    }
    (refined, column)
}
