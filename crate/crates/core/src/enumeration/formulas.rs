//! Exact closed-form counts for two-class pairs.
//!
//! Every division is checked for exactness before it happens; a remainder
//! is reported as an error rather than truncated.

use num_bigint::{BigInt, BigUint};
use num_integer::{binomial, Integer};
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// All closed-form counts for one `n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CountRecord {
    pub n: u32,
    /// Decompositions over all `r ≥ 2`, before the separation filter.
    #[serde(serialize_with = "decimal")]
    pub cases: BigUint,
    /// Decompositions with `r ≥ 2` that fail separation.
    #[serde(serialize_with = "decimal")]
    pub violations: BigUint,
    /// Separating single-row pairs.
    #[serde(rename = "r1", serialize_with = "decimal")]
    pub r1_count: BigUint,
    /// Separating pairs counting both orderings of `n̄`.
    #[serde(serialize_with = "decimal")]
    pub total_pairs: BigUint,
    /// Pairs fixed by swapping the two classes.
    #[serde(serialize_with = "decimal")]
    pub symmetric: BigUint,
    /// Non-isomorphic games with exactly two equivalence classes.
    #[serde(serialize_with = "decimal")]
    pub bipartite: BigUint,
}

fn decimal<S: Serializer>(v: &BigUint, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(v)
}

impl CountRecord {
    pub const CSV_HEADER: [&'static str; 7] = [
        "n",
        "cases",
        "violations",
        "r1",
        "total_pairs",
        "symmetric",
        "bipartite",
    ];
}

fn check_n(n: u32) -> Result<()> {
    if n < 2 {
        return Err(Error::UnsupportedN {
            n: n as usize,
            min: 2,
            max: u32::MAX as usize,
        });
    }
    Ok(())
}

fn pow2(e: u32) -> BigInt {
    BigInt::one() << e
}

fn big(v: i64) -> BigInt {
    BigInt::from(v)
}

fn unsigned(v: BigInt) -> Result<BigUint> {
    if v.is_negative() {
        return Err(Error::Negative(v.to_string()));
    }
    Ok(v.magnitude().clone())
}

fn exact_div(numerator: BigInt, divisor: u32) -> Result<BigInt> {
    let (q, rem) = numerator.div_rem(&BigInt::from(divisor));
    if !rem.is_zero() {
        return Err(Error::Indivisible {
            numerator: numerator.to_string(),
            divisor,
        });
    }
    Ok(q)
}

fn choose(n: u32, k: u32) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    binomial(BigInt::from(n), BigInt::from(k))
}

/// `2^{n+2} − C(n+3, 1) − C(n+3, 3)`.
pub fn cases(n: u32) -> Result<BigUint> {
    check_n(n)?;
    unsigned(pow2(n + 2) - choose(n + 3, 1) - choose(n + 3, 3))
}

/// `Σ_{r=2}^{⌊n/2⌋+1} C(n+3, 2r+1)`, the uncollapsed form of [`cases`].
pub fn cases_by_sum(n: u32) -> Result<BigUint> {
    check_n(n)?;
    let sum: BigInt = (2..=n / 2 + 1).map(|r| choose(n + 3, 2 * r + 1)).sum();
    unsigned(sum)
}

/// The parity split `4(n − ⌊n/2⌋ − 1)⌊n/2⌋ (+1 for even n)`, checked
/// against `(n − 1)²`.
pub fn violations(n: u32) -> Result<BigUint> {
    check_n(n)?;
    let half = big((n / 2) as i64);
    let mut split: BigInt = big(4) * (big(n as i64) - &half - 1) * &half;
    if n.is_multiple_of(2) {
        split += 1;
    }
    let square = big(n as i64 - 1).pow(2);
    if split != square {
        return Err(Error::FormulaMismatch {
            what: "separation violations",
            left: split.to_string(),
            right: square.to_string(),
        });
    }
    unsigned(split)
}

/// `(n³ + 6n² − 13n + 6) / 6`.
pub fn r1_count(n: u32) -> Result<BigUint> {
    check_n(n)?;
    let n = big(n as i64);
    unsigned(exact_div(
        n.pow(3) + big(6) * n.pow(2) - big(13) * &n + 6,
        6,
    )?)
}

/// `2^{n+2} − n² − 3n − 4`.
pub fn total_pairs(n: u32) -> Result<BigUint> {
    check_n(n)?;
    let nn = big(n as i64);
    unsigned(pow2(n + 2) - nn.pow(2) - big(3) * &nn - 4)
}

/// `2^{m+1} − 2m − 2` with `m = n/2` for even `n`; zero for odd `n`.
pub fn symmetric(n: u32) -> Result<BigUint> {
    check_n(n)?;
    if n % 2 == 1 {
        return Ok(BigUint::zero());
    }
    let m = n / 2;
    unsigned(pow2(m + 1) - big(2 * m as i64) - 2)
}

/// Non-isomorphic simple games on `n` players with two equivalence classes.
pub fn bipartite(n: u32) -> Result<BigUint> {
    check_n(n)?;
    let nn = big(n as i64);
    let value = if n % 2 == 1 {
        pow2(n + 1) - exact_div(nn.pow(2) + big(3) * &nn + 4, 2)?
    } else {
        pow2(n + 1) + pow2(n / 2) - exact_div(nn.pow(2) + big(4) * &nn + 6, 2)?
    };
    unsigned(value)
}

pub fn closed_formulas(n: u32) -> Result<CountRecord> {
    Ok(CountRecord {
        n,
        cases: cases(n)?,
        violations: violations(n)?,
        r1_count: r1_count(n)?,
        total_pairs: total_pairs(n)?,
        symmetric: symmetric(n)?,
        bipartite: bipartite(n)?,
    })
}

/// Orbit count for the two-element group swapping the classes:
/// `(total + fixed) / 2`.
pub fn burnside_combine(total: &BigUint, fixed: &BigUint) -> Result<BigUint> {
    let sum = total + fixed;
    if fixed > total || sum.is_odd() {
        return Err(Error::BurnsideParity {
            total: total.to_string(),
            fixed: fixed.to_string(),
        });
    }
    Ok(sum >> 1u32)
}

/// Swap-symmetric pairs for even `n = 2m`, summed term by term: solutions
/// of `Σx + z₁ = m + 1 − r` over `2 ≤ r ≤ m + 1`, minus the non-separating
/// ones (two per `r ≤ m`, one at `r = m + 1`), plus `m − 1` single-row pairs
/// on the diagonal.
pub fn count_symmetric_direct(n: u32) -> Result<BigUint> {
    check_n(n)?;
    if n % 2 == 1 {
        return Err(Error::OddN(n as usize));
    }
    let m = n / 2;
    let solutions: BigInt = (2..=m + 1).map(|r| choose(m + 1, r)).sum();
    let violations = 1 + (2..=m).map(|_| 2i64).sum::<i64>();
    let diagonal = m as i64 - 1;
    unsigned(solutions - violations + diagonal)
}

/// `bipartite(n) / 2^{n+1}` as a float.
pub fn asymptotic_ratio(n: u32) -> Result<f64> {
    let b = bipartite(n)?;
    let scale = BigUint::one() << (n + 1);
    // scale both down together to stay inside f64 range
    let shift = (n + 1).saturating_sub(900);
    let num = (&b >> shift).to_f64().unwrap_or(f64::INFINITY);
    let den = (scale >> shift).to_f64().unwrap_or(f64::INFINITY);
    Ok(num / den)
}
