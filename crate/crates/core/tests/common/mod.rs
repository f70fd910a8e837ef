//! Reference implementations that share no code with the library beyond
//! its public constructors.

#![allow(dead_code)]

use rand::seq::SliceRandom;
use rand::Rng;
use simple_games::{Coalition, SimpleGame};

/// Truth table of `game`: bit `s` is set iff coalition `s` wins.
pub fn truth_table(game: &SimpleGame) -> Vec<bool> {
    let n = game.n();
    let mws: Vec<u64> = game.min_winning().iter().map(|c| c.bits()).collect();
    (0..1u64 << n)
        .map(|s| mws.iter().any(|&m| m & !s == 0))
        .collect()
}

/// Exchanges bits `i` and `j` of `s`.
pub fn swap_bits(s: u64, i: usize, j: usize) -> u64 {
    let bi = (s >> i) & 1;
    let bj = (s >> j) & 1;
    if bi == bj {
        s
    } else {
        s ^ (1 << i) ^ (1 << j)
    }
}

/// Players `i` and `j` are interchangeable iff swapping them leaves every
/// coalition's value unchanged.
pub fn swap_invariant(table: &[bool], i: usize, j: usize) -> bool {
    (0..table.len() as u64).all(|s| table[s as usize] == table[swap_bits(s, i, j) as usize])
}

/// Number of classes of the swap-invariance relation.
pub fn class_count(table: &[bool], n: usize) -> usize {
    let mut reps: Vec<usize> = Vec::new();
    for i in 0..n {
        if !reps.iter().any(|&r| swap_invariant(table, r, i)) {
            reps.push(i);
        }
    }
    reps.len()
}

/// Minimal sets of a family of bitmasks.
pub fn minimal_sets(family: &[u64]) -> Vec<u64> {
    let mut out: Vec<u64> = family
        .iter()
        .copied()
        .filter(|&a| !family.iter().any(|&b| b != a && b & a == b))
        .collect();
    out.sort_unstable();
    out.dedup();
    out
}

/// A game whose minimal winning coalitions are the minimal members of
/// `seeds`; empty seeds fall back to the grand coalition.
pub fn game_from_seeds(n: usize, seeds: &[u64]) -> SimpleGame {
    let mask = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let family: Vec<u64> = seeds.iter().map(|s| s & mask).filter(|&s| s != 0).collect();
    let family = if family.is_empty() {
        vec![mask]
    } else {
        family
    };
    let sets = minimal_sets(&family).into_iter().map(Coalition::from_bits);
    SimpleGame::from_minimal_winning(n, sets).expect("minimal sets form an antichain")
}

pub fn random_game<R: Rng>(rng: &mut R, max_n: usize) -> SimpleGame {
    let n = rng.gen_range(1..=max_n);
    let k = rng.gen_range(1..=6);
    let density = rng.gen_range(0.2..0.8);
    let seeds: Vec<u64> = (0..k)
        .map(|_| {
            (0..n)
                .filter(|_| rng.gen_bool(density))
                .fold(0u64, |s, p| s | 1 << p)
        })
        .collect();
    game_from_seeds(n, &seeds)
}

pub fn random_permutation<R: Rng>(rng: &mut R, n: usize) -> Vec<usize> {
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    perm
}

/// All permutations of `0..n` in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current: Vec<usize> = (0..n).collect();
    loop {
        out.push(current.clone());
        let Some(i) = (1..n).rev().find(|&i| current[i - 1] < current[i]) else {
            return out;
        };
        let j = (i..n).rev().find(|&j| current[j] > current[i - 1]).unwrap();
        current.swap(i - 1, j);
        current[i..].reverse();
    }
}

/// Labeled simple games on `n ≤ 4` players counted from all Boolean
/// functions, together with the number of isomorphism classes for each
/// class count `t`.
pub fn monotone_census(n: usize) -> (u64, Vec<u64>) {
    assert!(n <= 4);
    let points = 1usize << n;
    let perms = permutations(n);
    let mut labeled = 0u64;
    let mut orbits_by_t = vec![0u64; n + 1];
    let mut seen = std::collections::HashSet::new();
    for f in 0u64..1 << points {
        let value = |s: usize| (f >> s) & 1 == 1;
        if value(0) || !value(points - 1) {
            continue;
        }
        let monotone = (0..points).all(|s| !value(s) || (0..n).all(|p| value(s | 1 << p)));
        if !monotone {
            continue;
        }
        labeled += 1;
        let orbit_min = perms
            .iter()
            .map(|perm| {
                (0..points).fold(0u64, |g, s| {
                    let image = (0..n)
                        .filter(|&p| s >> p & 1 == 1)
                        .fold(0, |m, p| m | 1 << perm[p]);
                    g | ((f >> s) & 1) << image
                })
            })
            .min()
            .unwrap();
        if seen.insert(orbit_min) {
            let table: Vec<bool> = (0..points).map(value).collect();
            orbits_by_t[class_count(&table, n)] += 1;
        }
    }
    (labeled, orbits_by_t)
}
