use simple_games::enumeration::formulas::asymptotic_ratio;
use simple_games::enumeration::xyz::decompositions;
use simple_games::enumeration::{
    burnside_combine, closed_formulas, count_symmetric_direct, enumerate_bipartite_canonical,
    enumerate_pairs, pair_to_xyz, separation_violated_xyz, xyz_to_pair,
};
use simple_games::oracle::{cross_validate, Check};
use simple_games::{canonical_form, VectorGame};

/// Largest n for the exhaustive xyz round trip.
const BIJECTION_MAX_N: u32 = 12;
/// Largest n for expanding and recanonicalizing every canonical pair.
const FIXED_POINT_MAX_N: u32 = 10;
const IDENTITY_MAX_N: u32 = 200;

pub fn run(max_n: u32, oracle_max_n: u32) -> Vec<Check> {
    let mut checks = Vec::new();
    let mut push = |name: String, pass: bool| checks.push(Check { name, pass });

    push(
        "bipartite_values".into(),
        (2..=6)
            .map(|n| closed_formulas(n).map(|r| r.bipartite))
            .collect::<Result<Vec<_>, _>>()
            .is_ok_and(|v| v == [1u32, 5, 17, 42, 103].map(Into::into)),
    );
    push(
        format!("formula_identities_2_{IDENTITY_MAX_N}"),
        (2..=IDENTITY_MAX_N).all(|n| {
            closed_formulas(n).is_ok_and(|r| {
                &r.cases - &r.violations + &r.r1_count == r.total_pairs
                    && burnside_combine(&r.total_pairs, &r.symmetric)
                        .is_ok_and(|b| b == r.bipartite)
            })
        }),
    );
    push(
        format!("symmetric_direct_2_{IDENTITY_MAX_N}"),
        (2..=IDENTITY_MAX_N).all(|n| {
            n % 2 == 1
                || matches!(
                    (count_symmetric_direct(n), closed_formulas(n)),
                    (Ok(d), Ok(r)) if d == r.symmetric
                )
        }),
    );
    push(
        "asymptotic_ratio_30".into(),
        asymptotic_ratio(30).is_ok_and(|r| (r - 1.0).abs() < 1e-3),
    );
    push("worked_example".into(), worked_example());

    for n in 2..=max_n {
        let Ok(record) = closed_formulas(n) else {
            push(format!("closed_formulas_n{n}"), false);
            continue;
        };
        let pairs = enumerate_pairs(n).map(|it| it.count() as u64);
        push(
            format!("pairs_n{n}"),
            pairs.is_ok_and(|c| record.total_pairs == c.into()),
        );

        let canonical: Vec<VectorGame> = match enumerate_bipartite_canonical(n) {
            Ok(it) => it.collect(),
            Err(_) => Vec::new(),
        };
        push(
            format!("canonical_n{n}"),
            record.bipartite == (canonical.len() as u64).into(),
        );
        if n <= FIXED_POINT_MAX_N {
            push(
                format!("canonical_fixed_point_n{n}"),
                canonical
                    .iter()
                    .all(|c| c.expand().is_ok_and(|g| canonical_form(&g) == *c)),
            );
        }
        if n <= BIJECTION_MAX_N {
            push(format!("bijection_n{n}"), bijection_holds(n));
        }
        if n <= oracle_max_n {
            match cross_validate(n as usize) {
                Ok(report) => {
                    for c in report.checks {
                        push(format!("oracle_n{n}_{}", c.name), c.pass);
                    }
                }
                Err(_) => push(format!("oracle_n{n}"), false),
            }
        }
    }
    checks
}

fn worked_example() -> bool {
    let Ok(pair) = VectorGame::new(vec![4, 2], vec![vec![3, 0], vec![2, 1]]) else {
        return false;
    };
    let Ok(game) = pair.expand() else {
        return false;
    };
    let classes: Vec<Vec<usize>> = game
        .equivalence_partition()
        .classes()
        .iter()
        .map(|c| c.to_one_indexed())
        .collect();
    game.min_winning().len() == 16 && classes == [vec![1, 2, 3, 4], vec![5, 6]]
}

fn bijection_holds(n: u32) -> bool {
    (2..=n as usize / 2 + 1).all(|r| {
        decompositions(n, r).all(|d| {
            let Ok(pair) = xyz_to_pair(n, &d) else {
                return false;
            };
            pair_to_xyz(&pair).is_ok_and(|back| back == d)
                && separation_violated_xyz(&d) != pair.check_conditions().separation_ok
        })
    })
}
