//! Frozen fixture tables for the verification suites.

use crate::exact::rat_from_str;
use crate::groupring::CycPoly;

/// The published torsion polynomials T_{p,q} for every coprime pair
/// q < p <= 10, as coefficients of t^0 .. t^{p-1}. Each is defined up
/// to translation, so comparisons go through translate-equivalence.
pub const TORSION_TABLES: &[(u64, u64, &[&str])] = &[
    (2, 1, &["1/8", "-1/8"]),
    (3, 1, &["1/9", "-2/9", "1/9"]),
    (3, 2, &["-1/9", "2/9", "-1/9"]),
    (4, 1, &["1/16", "3/16", "1/16", "-5/16"]),
    (4, 3, &["1/16", "3/16", "1/16", "-5/16"]),
    (5, 1, &["1/5", "0", "-2/5", "0", "1/5"]),
    (5, 2, &["-1/5", "1/5", "0", "1/5", "-1/5"]),
    (5, 3, &["-1/5", "1/5", "0", "1/5", "-1/5"]),
    (5, 4, &["0", "-1/5", "2/5", "-1/5", "0"]),
    (6, 1, &["-5/72", "13/72", "19/72", "13/72", "-5/72", "-35/72"]),
    (6, 5, &["5/72", "-13/72", "-19/72", "-13/72", "5/72", "35/72"]),
    (7, 1, &["2/7", "1/7", "-1/7", "-4/7", "-1/7", "1/7", "2/7"]),
    (7, 2, &["-2/7", "1/7", "0", "2/7", "0", "1/7", "-2/7"]),
    (7, 3, &["-1/7", "0", "2/7", "-2/7", "2/7", "0", "-1/7"]),
    (7, 4, &["-2/7", "1/7", "0", "2/7", "0", "1/7", "-2/7"]),
    (7, 5, &["-1/7", "0", "2/7", "-2/7", "2/7", "0", "-1/7"]),
    (7, 6, &["1/7", "-2/7", "-1/7", "4/7", "-1/7", "-2/7", "1/7"]),
    (
        8,
        1,
        &["-7/32", "3/32", "9/32", "11/32", "9/32", "3/32", "-7/32", "-21/32"],
    ),
    (
        8,
        3,
        &["5/32", "7/32", "-3/32", "7/32", "5/32", "-9/32", "-3/32", "-9/32"],
    ),
    (
        8,
        5,
        &["9/32", "3/32", "9/32", "-5/32", "-7/32", "3/32", "-7/32", "-5/32"],
    ),
    (
        8,
        7,
        &["-9/32", "-3/32", "7/32", "-11/32", "7/32", "-3/32", "-9/32", "21/32"],
    ),
    (
        9,
        1,
        &["10/27", "7/27", "1/27", "-8/27", "-20/27", "-8/27", "1/27", "7/27", "10/27"],
    ),
    (
        9,
        2,
        &["-10/27", "2/27", "-1/27", "8/27", "2/27", "8/27", "-1/27", "2/27", "-10/27"],
    ),
    (
        9,
        4,
        &["1/27", "-2/27", "-8/27", "10/27", "-2/27", "10/27", "-8/27", "-2/27", "1/27"],
    ),
    (
        9,
        5,
        &["-10/27", "2/27", "-1/27", "8/27", "2/27", "8/27", "-1/27", "2/27", "-10/27"],
    ),
    (
        9,
        7,
        &["-8/27", "-2/27", "10/27", "1/27", "-2/27", "1/27", "10/27", "-2/27", "-8/27"],
    ),
    (
        9,
        8,
        &["8/27", "-7/27", "-10/27", "-1/27", "20/27", "-1/27", "-10/27", "-7/27", "8/27"],
    ),
    (
        10,
        1,
        &["-3/8", "-1/40", "9/40", "3/8", "17/40", "3/8", "9/40", "-1/40", "-3/8", "-33/40"],
    ),
    (
        10,
        3,
        &["-1/40", "1/40", "-9/40", "9/40", "3/8", "9/40", "-9/40", "1/40", "-1/40", "-3/8"],
    ),
    (
        10,
        7,
        &["-9/40", "9/40", "-1/40", "1/40", "3/8", "1/40", "-1/40", "9/40", "-9/40", "-3/8"],
    ),
    (
        10,
        9,
        &["-9/40", "-3/8", "3/8", "1/40", "-17/40", "1/40", "3/8", "-3/8", "-9/40", "33/40"],
    ),
];

/// How a printed table row relates to the torsion polynomial computed
/// under the Chern-class labeling (the labeling that satisfies the
/// product identity T (1-t)(1-t^q) = 1-hat exactly when gcd(p,q-1) = 1,
/// and hence is pinned by it).
///
/// `Translate`: equal up to a power of t, as published.
///
/// `Relabel`: equal only after also re-identifying the group generator,
/// t -> t^m for a unit m. The published polynomial then satisfies the
/// product identity with (1 - t^m)(1 - t^{mq}) instead of
/// (1 - t)(1 - t^q): those rows were evidently produced with a
/// different isomorphism H^2 = Z_p, which the presentation of SW as an
/// element of Q[H]/H leaves unspecified.
///
/// `OrientationErratum`: the single row (4,3) duplicates the printed
/// (4,1) polynomial verbatim. L(4,3) is L(4,1) with reversed
/// orientation and the true value is -involution of it; the computed
/// polynomial is confirmed independently by exact agreement with the
/// Milnor torsion representative.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TableMatch {
    Translate,
    Relabel,
    OrientationErratum,
}

/// The verified classification of every printed row.
pub fn expected_table_match(p: u64, q: u64) -> TableMatch {
    match (p, q) {
        (4, 3) => TableMatch::OrientationErratum,
        (5, 3) | (5, 4) | (7, 3) | (7, 4) | (7, 5) | (7, 6) | (8, 7) | (9, 4) | (9, 5)
        | (9, 7) | (9, 8) | (10, 3) | (10, 7) | (10, 9) => TableMatch::Relabel,
        _ => TableMatch::Translate,
    }
}

/// Parses one fixture row into a polynomial.
pub fn torsion_table_poly(coeffs: &[&str]) -> CycPoly {
    let coeffs = coeffs
        .iter()
        .map(|s| rat_from_str(s).expect("fixture coefficients parse"))
        .collect();
    CycPoly::from_coeffs(coeffs).expect("fixture rows are nonempty")
}
