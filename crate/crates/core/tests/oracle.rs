mod common;

use std::collections::{BTreeMap, HashSet};

use simple_games::oracle::{classify, enumerate_labeled_games, LabeledGames};
use simple_games::{canonical_form, Coalition, SimpleGame};

use common::{monotone_census, truth_table};

#[test]
fn labeled_games_match_truth_table_census() {
    for n in 1..=4 {
        let (labeled, orbits_by_t) = monotone_census(n);
        let classification = classify(n).unwrap();
        assert_eq!(classification.labeled_total, labeled, "n={n}");
        let expected: BTreeMap<usize, u64> = orbits_by_t
            .iter()
            .enumerate()
            .filter(|&(_, &c)| c > 0)
            .map(|(t, &c)| (t, c))
            .collect();
        assert_eq!(classification.by_t(), expected, "n={n}");
    }
}

#[test]
fn stream_has_no_duplicates() {
    for n in 1..=5 {
        let tables: Vec<Vec<bool>> = enumerate_labeled_games(n)
            .unwrap()
            .map(|g| truth_table(&g))
            .collect();
        let distinct: HashSet<&Vec<bool>> = tables.iter().collect();
        assert_eq!(distinct.len(), tables.len(), "n={n}");
    }
}

#[test]
fn tallies_add_up() {
    for n in 1..=5 {
        let c = classify(n).unwrap();
        assert_eq!(c.classes.values().sum::<u64>(), c.labeled_total);
        for (key, &count) in &c.classes {
            assert!(key.check_conditions().all_ok(), "{key}");
            assert!(count >= 1);
        }
    }
}

#[test]
fn class_sizes_are_orbit_sizes() {
    // the dictator class on 3 players has 3 labelings, unanimity one
    let c = classify(3).unwrap();
    let dictator = SimpleGame::from_minimal_winning(3, [Coalition::singleton(0)]).unwrap();
    assert_eq!(c.classes[&canonical_form(&dictator)], 3);
    let unanimity = SimpleGame::from_minimal_winning(3, [Coalition::full(3)]).unwrap();
    let unanimity = canonical_form(&unanimity);
    assert_eq!(c.classes[&unanimity], 1);
}

#[test]
fn partitioned_counts_do_not_depend_on_split() {
    let n = 4;
    let mut by_first = 0u64;
    for first in 0..(1 << n) - 1 {
        by_first += LabeledGames::starting_with(n, first).unwrap().count() as u64;
    }
    assert_eq!(by_first, enumerate_labeled_games(n).unwrap().count() as u64);
}
