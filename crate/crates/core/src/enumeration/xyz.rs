//! Stars-and-bars coordinates for two-class pairs with `r ≥ 2` rows.
//!
//! A pair `((n̄₁, n̄₂), M)` with strictly decreasing first column and strictly
//! increasing second column is determined by the gaps between consecutive
//! entries (`x`, `y`) and the slack left in each class (`z1`, `z2`). All of
//! them together sum to `n + 2 − 2r`.

use crate::enumeration::WeakCompositions;
use crate::error::{Error, Result};
use crate::vector::VectorGame;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct XyzDecomposition {
    pub x: Vec<u32>,
    pub y: Vec<u32>,
    pub z1: u32,
    pub z2: u32,
}

impl XyzDecomposition {
    /// Splits a flat `(x1..xr, y1..yr, z1, z2)` tuple.
    pub fn from_parts(parts: &[u32]) -> Result<Self> {
        if parts.len() < 6 || !parts.len().is_multiple_of(2) {
            return Err(Error::ShapeMismatch(format!(
                "{} parts do not describe r >= 2",
                parts.len()
            )));
        }
        let r = (parts.len() - 2) / 2;
        Ok(XyzDecomposition {
            x: parts[..r].to_vec(),
            y: parts[r..2 * r].to_vec(),
            z1: parts[2 * r],
            z2: parts[2 * r + 1],
        })
    }

    pub fn r(&self) -> usize {
        self.x.len()
    }

    pub fn total(&self) -> u64 {
        self.x.iter().chain(&self.y).map(|&v| v as u64).sum::<u64>()
            + self.z1 as u64
            + self.z2 as u64
    }
}

/// `n + 2 − 2r`, the amount distributed among the `2r + 2` coordinates.
pub fn slack(n: u32, r: usize) -> i64 {
    n as i64 + 2 - 2 * r as i64
}

pub fn xyz_to_pair(n: u32, d: &XyzDecomposition) -> Result<VectorGame> {
    let r = d.r();
    if r < 2 || d.y.len() != r {
        return Err(Error::ShapeMismatch(format!(
            "x has {} entries and y has {}, need equal lengths of at least 2",
            d.x.len(),
            d.y.len()
        )));
    }
    let expected = slack(n, r);
    if d.total() as i64 != expected {
        return Err(Error::DecompositionSum {
            actual: d.total(),
            expected,
        });
    }
    let r32 = r as u32;
    let sum_x: u32 = d.x.iter().sum();
    let sum_y: u32 = d.y.iter().sum();
    let n_bar = vec![d.z1 + r32 - 1 + sum_x, d.z2 + r32 - 1 + sum_y];

    // row i (1-based): (r − i + x_1 + … + x_{r−i+1}, i − 1 + y_1 + … + y_i)
    let matrix = (1..=r)
        .map(|i| {
            let first = (r - i) as u32 + d.x[..=r - i].iter().sum::<u32>();
            let second = (i - 1) as u32 + d.y[..i].iter().sum::<u32>();
            vec![first, second]
        })
        .collect();
    VectorGame::new(n_bar, matrix)
}

/// Inverse of [`xyz_to_pair`]: recovers the gaps and slacks, failing if any
/// comes out negative.
pub fn pair_to_xyz(vg: &VectorGame) -> Result<XyzDecomposition> {
    if vg.t() != 2 {
        return Err(Error::NotDecomposable(format!(
            "{} classes, need 2",
            vg.t()
        )));
    }
    let r = vg.r();
    if r < 2 {
        return Err(Error::NotDecomposable(
            "a single row has no decomposition".into(),
        ));
    }
    let m = |i: usize, j: usize| vg.rows()[i - 1][j - 1] as i64;
    let mut x = Vec::with_capacity(r);
    x.push(m(r, 1));
    for h in 2..=r {
        x.push(m(r - h + 1, 1) - m(r - h + 2, 1) - 1);
    }
    let mut y = Vec::with_capacity(r);
    y.push(m(1, 2));
    for i in 2..=r {
        y.push(m(i, 2) - m(i - 1, 2) - 1);
    }
    let z1 = vg.n_bar()[0] as i64 - (r as i64 - 1) - x.iter().sum::<i64>();
    let z2 = vg.n_bar()[1] as i64 - (r as i64 - 1) - y.iter().sum::<i64>();

    let to_u32 = |v: i64, what: &str| {
        u32::try_from(v).map_err(|_| Error::NotDecomposable(format!("{what} = {v}")))
    };
    Ok(XyzDecomposition {
        x: x.iter()
            .enumerate()
            .map(|(k, &v)| to_u32(v, &format!("x{}", k + 1)))
            .collect::<Result<_>>()?,
        y: y.iter()
            .enumerate()
            .map(|(k, &v)| to_u32(v, &format!("y{}", k + 1)))
            .collect::<Result<_>>()?,
        z1: to_u32(z1, "z1")?,
        z2: to_u32(z2, "z2")?,
    })
}

/// True iff the pair of `d` cannot separate its two classes: all higher gaps
/// vanish and each of the two corner rows is blocked by a zero slack or gap.
pub fn separation_violated_xyz(d: &XyzDecomposition) -> bool {
    d.x[1..].iter().all(|&v| v == 0)
        && d.y[1..].iter().all(|&v| v == 0)
        && (d.y[0] == 0 || d.z1 == 0)
        && (d.x[0] == 0 || d.z2 == 0)
}

/// Every decomposition for `n` players and `r` rows, in colexicographic
/// order of the flat `(x, y, z1, z2)` tuple. Empty when `n + 2 − 2r < 0`.
pub fn decompositions(n: u32, r: usize) -> impl Iterator<Item = XyzDecomposition> {
    let total = slack(n, r);
    let compositions =
        (r >= 2 && total >= 0).then(|| WeakCompositions::new(total as u32, 2 * r + 2));
    compositions
        .into_iter()
        .flatten()
        .map(|c| XyzDecomposition::from_parts(&c).expect("2r + 2 parts"))
}
