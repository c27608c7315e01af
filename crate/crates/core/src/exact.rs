//! Arbitrary-precision integers and rationals plus the handful of
//! number-theoretic helpers everything else is built on.
//!
//! Every quantity in this crate is exact: integers are [`Int`]
//! (arbitrary precision), scalars are [`Rat`] (always stored in lowest
//! terms with positive denominator, so equality is canonical-form
//! equality). Floating point never appears.

use num_integer::Integer as _;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub use num_bigint::BigInt as Int;
pub type Rat = num_rational::BigRational;

/// Integer from a machine word.
pub fn int(n: i64) -> Int {
    Int::from(n)
}

/// Rational n/d. Panics on d = 0 (division by zero is always a hard error).
pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(int(n), int(d))
}

/// Rational from an integer.
pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(int(n))
}

/// Nonnegative greatest common divisor; gcd(0,0) = 0.
pub fn gcd(a: &Int, b: &Int) -> Int {
    a.gcd(b)
}

/// Smallest nonnegative representative of x mod m. Requires m >= 1.
pub fn normalize_mod(x: &Int, m: &Int) -> Int {
    assert!(m >= &Int::one(), "normalize_mod needs m >= 1");
    x.mod_floor(m)
}

/// Inverse of a mod m, in [0, m). Requires m >= 1; for m = 1 the
/// (unique) residue 0 is returned.
pub fn mod_inverse(a: &Int, m: &Int) -> Result<Int> {
    if m < &Int::one() {
        return Err(Error::BadModulus { got: m.clone(), min: 1 });
    }
    if m.is_one() {
        return Ok(Int::zero());
    }
    let a = a.mod_floor(m);
    let eg = a.extended_gcd(m);
    if !eg.gcd.is_one() {
        return Err(Error::NotCoprime { a, b: m.clone() });
    }
    Ok(eg.x.mod_floor(m))
}

/// Largest integer <= x.
pub fn floor(x: &Rat) -> Int {
    x.floor().to_integer()
}

/// Smallest integer >= x.
pub fn ceil(x: &Rat) -> Int {
    x.ceil().to_integer()
}

/// Fractional part x - floor(x), always in [0, 1).
pub fn frac(x: &Rat) -> Rat {
    x - Rat::from_integer(floor(x))
}

/// Canonical string form "n" or "n/d" in lowest terms.
pub fn rat_to_string(x: &Rat) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Parse the canonical string form back. Round-trips bit-exactly with
/// [`rat_to_string`].
pub fn rat_from_str(s: &str) -> Result<Rat> {
    let parse_int = |t: &str| -> Result<Int> {
        t.parse::<Int>().map_err(|_| Error::BadModulus { got: Int::zero(), min: 0 })
    };
    match s.split_once('/') {
        None => Ok(Rat::from_integer(parse_int(s)?)),
        Some((n, d)) => {
            let den = parse_int(d)?;
            if den.is_zero() {
                return Err(Error::ZeroDenominator);
            }
            Ok(Rat::new(parse_int(n)?, den))
        }
    }
}

/// Decimal approximation for human-facing text output only.
pub fn rat_to_f64(x: &Rat) -> f64 {
    let scale = int(1_000_000_000);
    let scaled = (x * Rat::from_integer(scale.clone())).round().to_integer();
    let (q, r) = scaled.div_rem(&scale);
    let q: f64 = q.to_string().parse().unwrap_or(0.0);
    let r: f64 = r.to_string().parse().unwrap_or(0.0);
    q + r / 1e9
}

/// sign(x) as an integer -1, 0, 1.
pub fn sign(x: &Rat) -> i64 {
    if x.is_zero() {
        0
    } else if x.is_positive() {
        1
    } else {
        -1
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use rand::{Rng, SeedableRng};

    #[test]
    fn gcd_examples() {
        assert_eq!(gcd(&int(12), &int(8)), int(4));
        assert_eq!(gcd(&int(7), &int(0)), int(7));
        assert_eq!(gcd(&int(0), &int(0)), int(0));
        // the n of L(9,4)
        assert_eq!(gcd(&int(9), &int(3)), int(3));
        assert_eq!(gcd(&int(-12), &int(8)), int(4));
    }

    #[test]
    fn mod_inverse_examples() {
        assert_eq!(mod_inverse(&int(2), &int(7)).unwrap(), int(4));
        assert_eq!(mod_inverse(&int(1), &int(5)).unwrap(), int(1));
        assert_eq!(mod_inverse(&int(7), &int(1)).unwrap(), int(0));
        // (p-2, p) for p = 5, against exhaustive search over residues
        let p = int(5);
        let a = int(3);
        let brute = (0..5)
            .map(int)
            .find(|x| normalize_mod(&(&a * x), &p).is_one())
            .unwrap();
        assert_eq!(mod_inverse(&a, &p).unwrap(), brute);
        assert_eq!(brute, int(2));
        assert!(matches!(
            mod_inverse(&int(4), &int(8)),
            Err(Error::NotCoprime { .. })
        ));
    }

    #[test]
    fn mod_inverse_random_roundtrip() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0x5ee1);
        let mut done = 0;
        while done < 1000 {
            let m: i64 = rng.gen_range(1..=1_000_000);
            let a: i64 = rng.gen_range(-2_000_000..=2_000_000);
            let (a, m) = (int(a), int(m));
            if !gcd(&a, &m).is_one() {
                continue;
            }
            let inv = mod_inverse(&a, &m).unwrap();
            assert_eq!(normalize_mod(&(&a * &inv), &m), normalize_mod(&Int::one(), &m));
            assert!(inv >= Int::zero() && inv < m);
            done += 1;
        }
    }

    #[test]
    fn normalize_mod_examples() {
        assert_eq!(normalize_mod(&int(-1), &int(7)), int(6));
        assert_eq!(normalize_mod(&int(14), &int(7)), int(0));
        assert_eq!(normalize_mod(&int(-14), &int(5)), int(1));
    }

    #[test]
    fn floor_ceil_frac_examples() {
        assert_eq!(ceil(&rat(8, 5)), int(2));
        assert_eq!(frac(&rat(-1, 3)), rat(2, 3));
        assert_eq!(frac(&rat_int(3)), rat_int(0));
        assert_eq!(floor(&rat(-7, 2)), int(-4));
        assert_eq!(ceil(&rat(-7, 2)), int(-3));
    }

    #[test]
    fn string_roundtrip() {
        for s in ["3", "-5/16", "0", "7/3", "-1"] {
            let x = rat_from_str(s).unwrap();
            assert_eq!(rat_to_string(&x), s);
        }
        // canonicalization on parse
        assert_eq!(rat_to_string(&rat_from_str("4/8").unwrap()), "1/2");
        assert_eq!(rat_to_string(&rat_from_str("3/-6").unwrap()), "-1/2");
        assert!(rat_from_str("1/0").is_err());
    }

    proptest! {
        #[test]
        fn add_sub_cancels(an in -500i64..500, ad in 1i64..40, bn in -500i64..500, bd in 1i64..40) {
            let a = rat(an, ad);
            let b = rat(bn, bd);
            prop_assert_eq!(&(&a + &b) - &b, a.clone());
            prop_assert_eq!(&a + &b, &b + &a);
        }

        #[test]
        fn mod_floor_reconstructs(x in -10_000i64..10_000, m in 1i64..500) {
            let (xi, mi) = (int(x), int(m));
            let r = normalize_mod(&xi, &mi);
            let q = floor(&Rat::new(xi.clone(), mi.clone()));
            prop_assert_eq!(r + mi * q, xi);
        }

        #[test]
        fn frac_in_unit_interval(n in -10_000i64..10_000, d in 1i64..500) {
            let f = frac(&rat(n, d));
            prop_assert!(f >= rat_int(0) && f < rat_int(1));
        }

        #[test]
        fn string_roundtrip_random(n in -100_000i64..100_000, d in 1i64..10_000) {
            let x = rat(n, d);
            prop_assert_eq!(rat_from_str(&rat_to_string(&x)).unwrap(), x);
        }
    }
}
