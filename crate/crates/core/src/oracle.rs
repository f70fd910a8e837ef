//! Brute-force ground truth over every labeled simple game.
//!
//! A labeled game on `n` players is a nonempty antichain of nonempty
//! coalitions. They are generated depth first over coalitions ordered by
//! size then members, so a candidate can only be blocked by an already
//! chosen subset of itself. Games are grouped by [`canonical_form`].

use std::collections::{BTreeMap, HashMap};

use rayon::prelude::*;
use serde::Serialize;

use crate::canonical::canonical_form;
use crate::coalition::Coalition;
use crate::enumeration::{closed_formulas, enumerate_bipartite_canonical};
use crate::error::{Error, Result};
use crate::game::SimpleGame;
use crate::vector::VectorGame;

pub const ORACLE_MAX_N: usize = 6;

/// Monotone Boolean functions on `n` variables minus the two constants.
const LABELED_GAMES: [u64; ORACLE_MAX_N + 1] = [0, 1, 4, 18, 166, 7_579, 7_828_352];

fn check_range(n: usize, min: usize) -> Result<()> {
    if n < min || n > ORACLE_MAX_N {
        return Err(Error::UnsupportedN {
            n,
            min,
            max: ORACLE_MAX_N,
        });
    }
    Ok(())
}

/// Every labeled simple game on `n` players, exactly once.
pub fn enumerate_labeled_games(n: usize) -> Result<LabeledGames> {
    check_range(n, 1)?;
    Ok(LabeledGames::new(n, None))
}

/// Nonempty coalitions on `n` players in generation order.
fn ordered_coalitions(n: usize) -> Vec<Coalition> {
    let mut all: Vec<Coalition> = Coalition::full(n)
        .subsets()
        .filter(|c| !c.is_empty())
        .collect();
    all.sort_unstable();
    all
}

#[derive(Clone, Debug)]
pub struct LabeledGames {
    n: usize,
    coalitions: Vec<Coalition>,
    /// Indices into `coalitions` of the current antichain, increasing.
    stack: Vec<usize>,
    /// Restricts the stream to antichains whose first coalition is this one.
    first: Option<usize>,
    started: bool,
    done: bool,
}

impl LabeledGames {
    fn new(n: usize, first: Option<usize>) -> Self {
        let coalitions = ordered_coalitions(n);
        let done = first.is_some_and(|f| f >= coalitions.len());
        LabeledGames {
            n,
            coalitions,
            stack: Vec::new(),
            first,
            started: false,
            done,
        }
    }

    /// The games whose smallest minimal winning coalition is the `first`-th
    /// coalition in generation order; the streams for `0..2^n − 1` partition
    /// the full stream.
    pub fn starting_with(n: usize, first: usize) -> Result<Self> {
        check_range(n, 1)?;
        Ok(LabeledGames::new(n, Some(first)))
    }

    fn admissible(&self, candidate: usize) -> bool {
        let c = self.coalitions[candidate];
        self.stack.iter().all(|&j| !self.coalitions[j].is_subset(c))
    }

    fn next_admissible(&self, from: usize) -> Option<usize> {
        (from..self.coalitions.len()).find(|&c| self.admissible(c))
    }

    fn current(&self) -> SimpleGame {
        let sets = self.stack.iter().map(|&j| self.coalitions[j]).collect();
        SimpleGame::from_antichain_unchecked(self.n, sets)
    }

    fn advance(&mut self) -> bool {
        if !self.started {
            self.started = true;
            self.stack.push(self.first.unwrap_or(0));
            return true;
        }
        let top = *self.stack.last().expect("running stream has a top");
        if let Some(c) = self.next_admissible(top + 1) {
            self.stack.push(c);
            return true;
        }
        while let Some(popped) = self.stack.pop() {
            if self.stack.is_empty() && self.first.is_some() {
                return false;
            }
            if let Some(c) = self.next_admissible(popped + 1) {
                self.stack.push(c);
                return true;
            }
        }
        false
    }
}

impl Iterator for LabeledGames {
    type Item = SimpleGame;

    fn next(&mut self) -> Option<SimpleGame> {
        if self.done {
            return None;
        }
        if self.advance() {
            Some(self.current())
        } else {
            self.done = true;
            None
        }
    }
}

/// Canonical forms of all labeled games on `n` players, with the number of
/// labeled games behind each.
#[derive(Clone, Debug)]
pub struct Classification {
    pub n: usize,
    pub labeled_total: u64,
    pub classes: BTreeMap<VectorGame, u64>,
}

impl Classification {
    pub fn by_t(&self) -> BTreeMap<usize, u64> {
        let mut by_t = BTreeMap::new();
        for key in self.classes.keys() {
            *by_t.entry(key.t()).or_insert(0) += 1;
        }
        by_t
    }

    pub fn canonical_forms_with_t(&self, t: usize) -> impl Iterator<Item = &VectorGame> {
        self.classes.keys().filter(move |k| k.t() == t)
    }

    pub fn report(&self) -> ClassificationReport {
        ClassificationReport {
            n: self.n,
            labeled_total: self.labeled_total,
            by_t: self.by_t(),
            checks: Vec::new(),
        }
    }
}

/// Tallies every labeled game by canonical form. Work is split by the first
/// coalition of each antichain; partial tallies are merged by addition.
pub fn classify(n: usize) -> Result<Classification> {
    check_range(n, 1)?;
    let partitions = (1usize << n) - 1;
    let (labeled_total, classes) = (0..partitions)
        .into_par_iter()
        .map(|first| {
            let mut tally: HashMap<VectorGame, u64> = HashMap::new();
            let mut count = 0u64;
            for game in LabeledGames::new(n, Some(first)) {
                count += 1;
                *tally.entry(canonical_form(&game)).or_insert(0) += 1;
            }
            (count, tally)
        })
        .reduce(
            || (0, HashMap::new()),
            |(ca, mut ta), (cb, tb)| {
                for (k, v) in tb {
                    *ta.entry(k).or_insert(0) += v;
                }
                (ca + cb, ta)
            },
        );
    Ok(Classification {
        n,
        labeled_total,
        classes: classes.into_iter().collect(),
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassificationReport {
    pub n: usize,
    pub labeled_total: u64,
    /// Number of isomorphism classes with `t` equivalence classes.
    pub by_t: BTreeMap<usize, u64>,
    #[serde(rename = "checks")]
    pub checks: Vec<Check>,
}

impl ClassificationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn isomorphism_classes(&self) -> u64 {
        self.by_t.values().sum()
    }
}

pub fn classify_by_t(n: usize) -> Result<ClassificationReport> {
    Ok(classify(n)?.report())
}

/// Classifies all labeled games and compares the result with the closed
/// forms and the canonical generator.
pub fn cross_validate(n: usize) -> Result<ClassificationReport> {
    check_range(n, 2)?;
    let classification = classify(n)?;
    let mut report = classification.report();
    let t2 = report.by_t.get(&2).copied().unwrap_or(0);

    let formula = closed_formulas(n as u32)?.bipartite;
    let mut generated: Vec<VectorGame> = enumerate_bipartite_canonical(n as u32)?.collect();
    generated.sort_unstable();
    let oracle_forms: Vec<VectorGame> = classification.canonical_forms_with_t(2).cloned().collect();

    let mut check = |name: &str, pass: bool| {
        report.checks.push(Check {
            name: name.to_string(),
            pass,
        });
    };
    check("theorem_bipartite", formula == t2.into());
    check("generator_bipartite_count", generated.len() as u64 == t2);
    check("t1_quota_games", report_t1(&classification) == n as u64);
    check("canonical_forms_match", oracle_forms == generated);
    check(
        "labeled_total_dedekind",
        classification.labeled_total == LABELED_GAMES[n],
    );
    Ok(report)
}

fn report_t1(c: &Classification) -> u64 {
    c.canonical_forms_with_t(1).count() as u64
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mw(game: &SimpleGame) -> Vec<Vec<usize>> {
        game.min_winning()
            .iter()
            .map(|c| c.to_one_indexed())
            .collect()
    }

    #[test]
    fn small_streams() {
        let one: Vec<_> = enumerate_labeled_games(1)
            .unwrap()
            .map(|g| mw(&g))
            .collect();
        assert_eq!(one, vec![vec![vec![1]]]);

        let mut two: Vec<_> = enumerate_labeled_games(2)
            .unwrap()
            .map(|g| mw(&g))
            .collect();
        two.sort();
        assert_eq!(
            two,
            vec![
                vec![vec![1]],
                vec![vec![1], vec![2]],
                vec![vec![1, 2]],
                vec![vec![2]]
            ]
        );
        assert_eq!(enumerate_labeled_games(3).unwrap().count(), 18);
    }

    #[test]
    fn partitioned_streams_cover_everything() {
        for n in 1..=4 {
            let whole: Vec<SimpleGame> = enumerate_labeled_games(n).unwrap().collect();
            let parts: Vec<SimpleGame> = (0..(1 << n) - 1)
                .flat_map(|f| LabeledGames::starting_with(n, f).unwrap())
                .collect();
            assert_eq!(whole, parts, "n={n}");
        }
        assert_eq!(LabeledGames::starting_with(2, 3).unwrap().count(), 0);
    }

    #[test]
    fn range_checks() {
        assert!(enumerate_labeled_games(0).is_err());
        assert!(enumerate_labeled_games(7).is_err());
        assert!(classify_by_t(7).is_err());
        assert!(cross_validate(1).is_err());
    }

    #[test]
    fn by_t_small() {
        let r = classify_by_t(1).unwrap();
        assert_eq!(r.by_t, BTreeMap::from([(1, 1)]));
        let r = classify_by_t(2).unwrap();
        assert_eq!(r.by_t, BTreeMap::from([(1, 2), (2, 1)]));
        assert_eq!(r.labeled_total, 4);
        let r = classify_by_t(3).unwrap();
        assert_eq!(r.by_t, BTreeMap::from([(1, 3), (2, 5)]));
    }

    #[test]
    fn report_json() {
        let r = cross_validate(2).unwrap();
        assert!(r.passed());
        let json = serde_json::to_string(&r).unwrap();
        assert!(json.starts_with(r#"{"n":2,"labeled_total":4,"by_t":{"1":2,"2":1},"checks":[{"name":"theorem_bipartite","pass":true}"#), "{json}");
    }
}
