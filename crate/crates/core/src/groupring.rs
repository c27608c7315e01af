//! Exact arithmetic in the rational group algebra Q[Z_p].
//!
//! Elements are polynomials in t with t^p = 1, stored densely as p
//! rational coefficients. Provides the augmentation map, the projection
//! onto its kernel, the involution t -> t^{-1}, the sawtooth polynomial
//! f(t), and translate-equivalence A ~ t^n B.

use std::fmt;

use num_traits::{One, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::dedekind::sawtooth;
use crate::error::{Error, Result};
use crate::exact::{int, rat_from_str, rat_to_string, Rat};

/// An element of Q[Z_p]: coefficient i belongs to t^i.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycPoly {
    p: usize,
    coeffs: Vec<Rat>,
}

impl CycPoly {
    pub fn from_coeffs(coeffs: Vec<Rat>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::BadModulus { got: int(0), min: 1 });
        }
        Ok(CycPoly { p: coeffs.len(), coeffs })
    }

    pub fn zero(p: usize) -> Self {
        assert!(p >= 1);
        CycPoly { p, coeffs: vec![Rat::zero(); p] }
    }

    pub fn constant(p: usize, c: Rat) -> Self {
        let mut out = Self::zero(p);
        out.coeffs[0] = c;
        out
    }

    pub fn one(p: usize) -> Self {
        Self::constant(p, Rat::one())
    }

    /// t^k with k taken mod p (negative k allowed).
    pub fn monomial(p: usize, k: i64) -> Self {
        let mut out = Self::zero(p);
        let idx = k.rem_euclid(p as i64) as usize;
        out.coeffs[idx] = Rat::one();
        out
    }

    pub fn modulus(&self) -> usize {
        self.p
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> &Rat {
        &self.coeffs[i % self.p]
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        if self.p != other.p {
            return Err(Error::ModulusMismatch { left: self.p, right: other.p });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        Ok(CycPoly { p: self.p, coeffs })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a - b)
            .collect();
        Ok(CycPoly { p: self.p, coeffs })
    }

    pub fn neg(&self) -> Self {
        CycPoly { p: self.p, coeffs: self.coeffs.iter().map(|a| -a).collect() }
    }

    pub fn scale(&self, c: &Rat) -> Self {
        CycPoly { p: self.p, coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    /// Cyclic convolution; exponents add mod p.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let p = self.p;
        let mut coeffs = vec![Rat::zero(); p];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let k = (i + j) % p;
                coeffs[k] += a * b;
            }
        }
        Ok(CycPoly { p, coeffs })
    }

    /// t^n * self.
    pub fn shift(&self, n: i64) -> Self {
        let p = self.p as i64;
        let n = n.rem_euclid(p) as usize;
        let mut coeffs = vec![Rat::zero(); self.p];
        for (i, a) in self.coeffs.iter().enumerate() {
            coeffs[(i + n) % self.p] = a.clone();
        }
        CycPoly { p: self.p, coeffs }
    }

    /// Ring endomorphism t -> t^m: coefficient of t^j accumulates onto
    /// t^{jm mod p}. An automorphism iff gcd(m, p) = 1.
    pub fn substitute(&self, m: i64) -> Self {
        let p = self.p as i64;
        let mut coeffs = vec![Rat::zero(); self.p];
        for (j, a) in self.coeffs.iter().enumerate() {
            let target = ((j as i64) * m).rem_euclid(p) as usize;
            coeffs[target] += a;
        }
        CycPoly { p: self.p, coeffs }
    }

    /// The involution induced by h -> h^{-1}.
    pub fn involution(&self) -> Self {
        self.substitute(-1)
    }

    /// Augmentation: sum of coefficients. A ring morphism to Q.
    pub fn aug(&self) -> Rat {
        self.coeffs.iter().sum()
    }

    /// Projection onto ker aug: R - (aug(R)/p) Sigma.
    pub fn proj(&self) -> Self {
        let avg = self.aug() / Rat::from_integer(int(self.p as i64));
        let coeffs = self.coeffs.iter().map(|a| a - &avg).collect();
        CycPoly { p: self.p, coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|a| a.is_zero())
    }
}

/// Sigma = 1 + t + ... + t^{p-1}.
pub fn sigma(p: usize) -> CycPoly {
    assert!(p >= 1);
    CycPoly { p, coeffs: vec![Rat::one(); p] }
}

/// 1-hat = 1 - Sigma/p, the identity of ker aug.
pub fn one_hat(p: usize) -> CycPoly {
    CycPoly::one(p)
        .sub(&sigma(p).scale(&Rat::new(int(1), int(p as i64))))
        .expect("same modulus")
}

/// f(t) = sum_{j in I_p} ((j/p)) t^j.
pub fn f_poly(p: usize) -> CycPoly {
    assert!(p >= 1);
    let coeffs = (0..p)
        .map(|j| sawtooth(&Rat::new(int(j as i64), int(p as i64))))
        .collect();
    CycPoly { p, coeffs }
}

/// Least n in [0, p) with a = t^n b, if any.
pub fn translate_equiv(a: &CycPoly, b: &CycPoly) -> Result<Option<usize>> {
    a.check_same(b)?;
    let p = a.p;
    'outer: for n in 0..p {
        for i in 0..p {
            if a.coeffs[(i + n) % p] != b.coeffs[i] {
                continue 'outer;
            }
        }
        return Ok(Some(n));
    }
    Ok(None)
}

impl fmt::Display for CycPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            match i {
                0 => write!(f, "{}", rat_to_string(c))?,
                1 => write!(f, "{}*t", rat_to_string(c))?,
                _ => write!(f, "{}*t^{}", rat_to_string(c), i)?,
            }
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct CycPolyRepr {
    p: u64,
    coeffs: Vec<String>,
}

impl Serialize for CycPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        CycPolyRepr {
            p: self.p as u64,
            coeffs: self.coeffs.iter().map(rat_to_string).collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for CycPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let repr = CycPolyRepr::deserialize(deserializer)?;
        if repr.p == 0 || repr.p as usize != repr.coeffs.len() {
            return Err(D::Error::custom("coeffs length must equal p >= 1"));
        }
        let coeffs = repr
            .coeffs
            .iter()
            .map(|s| rat_from_str(s).map_err(D::Error::custom))
            .collect::<std::result::Result<Vec<_>, _>>()?;
        Ok(CycPoly { p: repr.p as usize, coeffs })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{gcd, rat, rat_int};
    use proptest::prelude::*;

    fn poly(coeffs: &[(i64, i64)]) -> CycPoly {
        CycPoly::from_coeffs(coeffs.iter().map(|&(n, d)| rat(n, d)).collect()).unwrap()
    }

    #[test]
    fn sigma_annihilates_one_minus_t() {
        for p in 1..=12 {
            let lhs = sigma(p)
                .mul(&CycPoly::one(p).sub(&CycPoly::monomial(p, 1)).unwrap())
                .unwrap();
            assert!(lhs.is_zero());
        }
    }

    #[test]
    fn one_hat_is_idempotent() {
        for p in 2..=10 {
            let h = one_hat(p);
            assert_eq!(h.mul(&h).unwrap(), h);
            assert_eq!(h.aug(), rat_int(0));
        }
    }

    #[test]
    fn convolution_example() {
        // (1 - t) * t^{p-1} at p = 3 has coefficients (-1, 0, 1)
        let p = 3;
        let lhs = CycPoly::one(p)
            .sub(&CycPoly::monomial(p, 1))
            .unwrap()
            .mul(&CycPoly::monomial(p, 2))
            .unwrap();
        assert_eq!(lhs, poly(&[(-1, 1), (0, 1), (1, 1)]));
    }

    #[test]
    fn named_constants() {
        assert_eq!(sigma(3), poly(&[(1, 1), (1, 1), (1, 1)]));
        assert_eq!(one_hat(2), poly(&[(1, 2), (-1, 2)]));
        assert_eq!(sigma(5).aug(), rat_int(5));
    }

    #[test]
    fn proj_examples() {
        for p in 2..=8 {
            assert!(sigma(p).proj().is_zero());
            assert_eq!(CycPoly::one(p).proj(), one_hat(p));
        }
    }

    #[test]
    fn involution_examples() {
        assert_eq!(CycPoly::monomial(5, 1).involution(), CycPoly::monomial(5, 4));
        assert_eq!(sigma(7).involution(), sigma(7));
        for p in 2..=20 {
            assert_eq!(f_poly(p).involution(), f_poly(p).neg());
        }
    }

    #[test]
    fn substitute_examples() {
        let f = f_poly(9);
        assert_eq!(f.substitute(1), f);
        assert_eq!(CycPoly::monomial(7, 1).substitute(8), CycPoly::monomial(7, 1));
    }

    #[test]
    fn f_poly_values() {
        assert_eq!(f_poly(2), poly(&[(0, 1), (0, 1)]));
        assert_eq!(f_poly(3), poly(&[(0, 1), (-1, 6), (1, 6)]));
    }

    #[test]
    fn inverse_identity_sample() {
        // (1/2 - f(t^m)) (1 - t^m) = 1-hat for gcd(m, p) = 1
        for p in 2usize..=20 {
            for m in 1..p {
                if gcd(&int(m as i64), &int(p as i64)) != int(1) {
                    continue;
                }
                let lhs = CycPoly::constant(p, rat(1, 2))
                    .sub(&f_poly(p).substitute(m as i64))
                    .unwrap()
                    .mul(&CycPoly::one(p).sub(&CycPoly::monomial(p, m as i64)).unwrap())
                    .unwrap();
                assert_eq!(lhs, one_hat(p), "p={p} m={m}");
            }
        }
    }

    #[test]
    fn translate_equiv_examples() {
        let a = poly(&[(1, 2), (0, 1), (3, 1)]);
        assert_eq!(translate_equiv(&a, &a).unwrap(), Some(0));
        assert_eq!(translate_equiv(&a.shift(1), &a).unwrap(), Some(1));
        let t52 = poly(&[(-1, 5), (1, 5), (0, 1), (1, 5), (-1, 5)]);
        let n = translate_equiv(&t52, &t52.involution()).unwrap().unwrap();
        assert_eq!(t52, t52.involution().shift(n as i64));
        assert_eq!(n, 4);
        let b = poly(&[(1, 1), (0, 1), (0, 1)]);
        let c = poly(&[(2, 1), (0, 1), (0, 1)]);
        assert_eq!(translate_equiv(&b, &c).unwrap(), None);
        assert!(translate_equiv(&b, &sigma(4)).is_err());
    }

    #[test]
    fn json_schema() {
        let a = poly(&[(1, 2), (-5, 16), (3, 1)]);
        let json = serde_json::to_string(&a).unwrap();
        assert_eq!(json, r#"{"p":3,"coeffs":["1/2","-5/16","3"]}"#);
        let back: CycPoly = serde_json::from_str(&json).unwrap();
        assert_eq!(back, a);
        assert!(serde_json::from_str::<CycPoly>(r#"{"p":2,"coeffs":["1"]}"#).is_err());
    }

    #[test]
    fn display_renders_all_terms() {
        let a = poly(&[(1, 2), (0, 1), (-5, 16)]);
        assert_eq!(a.to_string(), "1/2 + 0*t + -5/16*t^2");
    }

    fn arb_poly(p: usize) -> impl Strategy<Value = CycPoly> {
        proptest::collection::vec((-20i64..20, 1i64..8), p)
            .prop_map(|v| CycPoly::from_coeffs(v.into_iter().map(|(n, d)| rat(n, d)).collect()).unwrap())
    }

    fn arb_triple() -> impl Strategy<Value = (CycPoly, CycPoly, CycPoly)> {
        (1usize..14).prop_flat_map(|p| (arb_poly(p), arb_poly(p), arb_poly(p)))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn ring_axioms((a, b, c) in arb_triple()) {
            let p = a.modulus();
            prop_assert_eq!(a.mul(&b).unwrap(), b.mul(&a).unwrap());
            prop_assert_eq!(
                a.mul(&b).unwrap().mul(&c).unwrap(),
                a.mul(&b.mul(&c).unwrap()).unwrap()
            );
            prop_assert_eq!(
                a.mul(&b.add(&c).unwrap()).unwrap(),
                a.mul(&b).unwrap().add(&a.mul(&c).unwrap()).unwrap()
            );
            // aug is a ring morphism
            prop_assert_eq!(a.mul(&b).unwrap().aug(), a.aug() * b.aug());
            // proj is idempotent and lands in ker aug
            prop_assert_eq!(a.proj().proj(), a.proj());
            prop_assert_eq!(a.proj().aug(), rat_int(0));
            // one_hat acts as identity on ker aug
            prop_assert_eq!(one_hat(p).mul(&a.proj()).unwrap(), a.proj());
        }

        #[test]
        fn substitute_is_endomorphism((a, b, _c) in arb_triple(), m in -15i64..15) {
            prop_assert_eq!(
                a.mul(&b).unwrap().substitute(m),
                a.substitute(m).mul(&b.substitute(m)).unwrap()
            );
            prop_assert_eq!(
                a.add(&b).unwrap().substitute(m),
                a.substitute(m).add(&b.substitute(m)).unwrap()
            );
        }
    }
}
