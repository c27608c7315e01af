//! Sawtooth function and Dedekind-Rademacher sums.
//!
//! The double sawtooth sum
//!
//! ```text
//! s(beta, alpha; x, y) = sum_{r=1..alpha} ((x + beta(r+y)/alpha)) (((r+y)/alpha))
//! ```
//!
//! is provided twice: [`dr_sum_brute`] evaluates the defining sum term
//! by term and serves as the independent oracle, while [`dr_sum_fast`]
//! runs the reciprocity/shift recursion in O(log alpha) steps. The two
//! agree exactly on every input where both are defined.

use num_integer::Integer as _;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::{frac, gcd, rat, Int, Rat};

/// Periodic sawtooth ((x)): 0 at integers, {x} - 1/2 elsewhere.
pub fn sawtooth(x: &Rat) -> Rat {
    if x.is_integer() {
        Rat::zero()
    } else {
        frac(x) - rat(1, 2)
    }
}

/// psi_2(x) = B_2({x}) where B_2(z) = z^2 - z + 1/6.
pub fn bernoulli_psi2(x: &Rat) -> Rat {
    let z = frac(x);
    &z * &z - z + rat(1, 6)
}

/// Argument pack for a Dedekind-Rademacher sum s(beta, alpha; x, y).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RademacherArgs {
    pub beta: Int,
    pub alpha: Int,
    pub x: Rat,
    pub y: Rat,
}

impl RademacherArgs {
    /// Requires alpha >= 1. Coprimality of beta and alpha is only needed
    /// by the fast evaluator, which checks it itself.
    pub fn new(beta: Int, alpha: Int, x: Rat, y: Rat) -> Result<Self> {
        if alpha < Int::one() {
            return Err(Error::BadModulus { got: alpha, min: 1 });
        }
        Ok(RademacherArgs { beta, alpha, x, y })
    }
}

/// The defining sum, term by term. Exact; O(alpha).
pub fn dr_sum_brute(args: &RademacherArgs) -> Rat {
    dr_brute(&args.beta, &args.alpha, &args.x, &args.y)
}

/// See [`dr_sum_brute`].
pub fn dr_brute(beta: &Int, alpha: &Int, x: &Rat, y: &Rat) -> Rat {
    assert!(alpha >= &Int::one(), "Rademacher sum needs alpha >= 1");
    let step = Rat::new(Int::one(), alpha.clone());
    let beta_step = Rat::new(beta.clone(), alpha.clone());
    // running values of (r+y)/alpha and x + beta (r+y)/alpha
    let mut t = (y + Rat::one()) * &step;
    let mut u = x + &beta_step * (y + Rat::one());
    let mut acc = Rat::zero();
    let mut r = Int::one();
    loop {
        acc += sawtooth(&u) * sawtooth(&t);
        if &r == alpha {
            break;
        }
        r += 1;
        t += &step;
        u += &beta_step;
    }
    acc
}

/// Reciprocity-based evaluator; equals [`dr_sum_brute`] exactly.
///
/// Recursion: reduce beta mod alpha by the shift law
/// s(beta, alpha; x, y) = s(beta - m alpha, alpha; x + m y, y), apply
/// reciprocity to swap the roles of alpha and beta, and terminate at
/// modulus 1 with s(beta, 1; x, y) = ((beta y + x)) ((y)).
pub fn dr_sum_fast(args: &RademacherArgs) -> Result<Rat> {
    dr_fast(&args.beta, &args.alpha, &args.x, &args.y)
}

/// See [`dr_sum_fast`].
pub fn dr_fast(beta: &Int, alpha: &Int, x: &Rat, y: &Rat) -> Result<Rat> {
    if alpha < &Int::one() {
        return Err(Error::BadModulus { got: alpha.clone(), min: 1 });
    }
    if alpha.is_one() {
        return Ok(sawtooth(&(Rat::from_integer(beta.clone()) * y + x)) * sawtooth(y));
    }
    let m = beta.div_floor(alpha);
    let b = beta - &m * alpha;
    let x = x + Rat::from_integer(m) * y;
    if !gcd(&b, alpha).is_one() {
        return Err(Error::NotCoprime { a: b, b: alpha.clone() });
    }
    let rhs = reciprocity_rhs(&b, alpha, &x, y);
    Ok(rhs - dr_fast(alpha, &b, y, &x)?)
}

/// Right-hand side R(beta, alpha; x, y) of the reciprocity law, so that
/// s(beta, alpha; x, y) + s(alpha, beta; y, x) = R(beta, alpha; x, y).
/// Symmetric: R(alpha, beta; y, x) = R(beta, alpha; x, y).
pub fn reciprocity_rhs(beta: &Int, alpha: &Int, x: &Rat, y: &Rat) -> Rat {
    let a = Rat::from_integer(alpha.clone());
    let b = Rat::from_integer(beta.clone());
    if x.is_integer() && y.is_integer() {
        rat(-1, 4) + (&a * &a + &b * &b + Rat::one()) / (rat(12, 1) * &a * &b)
    } else {
        sawtooth(x) * sawtooth(y)
            + (&b * &b * bernoulli_psi2(y)
                + bernoulli_psi2(&(&b * y + &a * x))
                + &a * &a * bernoulli_psi2(x))
                / (rat(2, 1) * &a * &b)
    }
}

/// Classical Dedekind sum s(q, p) = s(q, p; 0, 0). Requires p >= 1 and
/// gcd(q, p) = 1.
pub fn dedekind_sum(q: &Int, p: &Int) -> Result<Rat> {
    dr_fast(q, p, &Rat::zero(), &Rat::zero())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, rat_int};
    use proptest::prelude::*;

    fn args(beta: i64, alpha: i64, x: Rat, y: Rat) -> RademacherArgs {
        RademacherArgs::new(int(beta), int(alpha), x, y).unwrap()
    }

    #[test]
    fn sawtooth_examples() {
        assert_eq!(sawtooth(&rat_int(0)), rat_int(0));
        assert_eq!(sawtooth(&rat(1, 2)), rat_int(0));
        assert_eq!(sawtooth(&rat(1, 3)), rat(-1, 6));
        assert_eq!(sawtooth(&rat(-1, 3)), rat(1, 6));
    }

    #[test]
    fn psi2_examples() {
        assert_eq!(bernoulli_psi2(&rat_int(0)), rat(1, 6));
        assert_eq!(bernoulli_psi2(&rat(1, 2)), rat(-1, 12));
        assert_eq!(bernoulli_psi2(&rat(7, 3)), rat(-1, 18));
    }

    #[test]
    fn brute_examples() {
        assert_eq!(dr_sum_brute(&args(1, 2, rat_int(0), rat_int(0))), rat_int(0));
        assert_eq!(dr_sum_brute(&args(1, 3, rat_int(0), rat_int(0))), rat(1, 18));
        // base case sum at alpha = 1 collapses to ((beta y + x)) ((y))
        let (x, y) = (rat(2, 5), rat(1, 3));
        let expect = sawtooth(&(rat_int(4) * &y + &x)) * sawtooth(&y);
        assert_eq!(dr_sum_brute(&args(4, 1, x, y)), expect);
    }

    #[test]
    fn dedekind_sum_examples() {
        assert_eq!(dedekind_sum(&int(1), &int(2)).unwrap(), rat_int(0));
        assert_eq!(dedekind_sum(&int(1), &int(4)).unwrap(), rat(1, 8));
        assert_eq!(dedekind_sum(&int(1), &int(5)).unwrap(), rat(1, 5));
        assert_eq!(dedekind_sum(&int(2), &int(5)).unwrap(), rat_int(0));
        assert!(dedekind_sum(&int(2), &int(4)).is_err());
    }

    #[test]
    fn rec1_spot_check() {
        // s(3,5) + s(5,3) = -1/4 + (25+9+1)/180 = -1/18
        let lhs = dedekind_sum(&int(3), &int(5)).unwrap() + dedekind_sum(&int(5), &int(3)).unwrap();
        assert_eq!(lhs, rat(-1, 18));
    }

    #[test]
    fn ded2_small_p() {
        // 4(s(2,p) - s(1,p)) = -p/6 + 1/(6p) at p = 5, 7, 9
        for p in [5i64, 7, 9] {
            let lhs = rat_int(4)
                * (dedekind_sum(&int(2), &int(p)).unwrap()
                    - dedekind_sum(&int(1), &int(p)).unwrap());
            assert_eq!(lhs, rat(-p, 6) + rat(1, 6 * p));
        }
    }

    #[test]
    fn fast_equals_brute_small_grid() {
        let xs = [rat_int(0), rat(1, 2), rat(-1, 3), rat(2, 5), rat(7, 3)];
        for alpha in 1i64..=12 {
            for beta in 1..=alpha {
                if gcd(&int(beta), &int(alpha)) != int(1) {
                    continue;
                }
                for x in &xs {
                    for y in &xs {
                        let a = args(beta, alpha, x.clone(), y.clone());
                        assert_eq!(dr_sum_fast(&a).unwrap(), dr_sum_brute(&a), "{a:?}");
                    }
                }
            }
        }
    }

    #[test]
    fn fast_handles_negative_and_large_beta() {
        for (beta, alpha) in [(-3i64, 7i64), (23, 7), (-1, 5), (12, 5)] {
            let a = args(beta, alpha, rat(1, 5), rat(-1, 2));
            assert_eq!(dr_sum_fast(&a).unwrap(), dr_sum_brute(&a));
        }
        // s(p-2, p) = -s(2, p) in particular
        assert_eq!(
            dedekind_sum(&int(5), &int(7)).unwrap(),
            -dedekind_sum(&int(2), &int(7)).unwrap()
        );
    }

    #[test]
    fn parity_identity() {
        // s(-beta, alpha; -x, y) = -s(beta, alpha; x, y), checked on the oracle
        for (beta, alpha) in [(2i64, 7i64), (3, 5), (1, 4)] {
            let x = rat(2, 5);
            let y = rat(1, 3);
            let lhs = dr_sum_brute(&args(-beta, alpha, -x.clone(), y.clone()));
            let rhs = -dr_sum_brute(&args(beta, alpha, x, y));
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn not_coprime_detected() {
        let a = args(4, 6, rat_int(0), rat_int(0));
        assert!(matches!(dr_sum_fast(&a), Err(Error::NotCoprime { .. })));
    }

    proptest! {
        #[test]
        fn sawtooth_periodic_and_odd(n in -400i64..400, d in 1i64..40) {
            let x = rat(n, d);
            prop_assert_eq!(sawtooth(&(&x + rat_int(1))), sawtooth(&x));
            prop_assert_eq!(sawtooth(&-&x), -sawtooth(&x));
            let v = sawtooth(&x);
            prop_assert!(v > rat(-1, 2) && v < rat(1, 2));
        }

        #[test]
        fn fast_equals_brute_random(beta in -60i64..60, alpha in 1i64..40,
                                    xn in -12i64..12, xd in 1i64..8,
                                    yn in -12i64..12, yd in 1i64..8) {
            prop_assume!(gcd(&int(beta.rem_euclid(alpha.max(1))), &int(alpha)).is_one() || alpha == 1);
            let a = args(beta, alpha, rat(xn, xd), rat(yn, yd));
            prop_assert_eq!(dr_sum_fast(&a).unwrap(), dr_sum_brute(&a));
        }
    }
}
