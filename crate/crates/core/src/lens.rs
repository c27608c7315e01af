//! Lens spaces L(p,q), their two geometric Seifert structures, and the
//! spin^c bookkeeping: enumeration, the (rho, gamma_1, gamma_2) data of
//! each structure, and the Chern-class bijection with Z_p.
//!
//! The minus structure (alpha = p / gcd(p, q-1)) is the canonical one:
//! the Seiberg-Witten, Froyshov and torsion pipelines all run on it.
//! The plus structure is carried only far enough to compare the two
//! eta-invariant functions at the level of value multisets.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{int, mod_inverse, normalize_mod, rat, Int, Rat};

/// A lens space with p >= 2, 1 <= q < p, gcd(p, q) = 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LensSpace {
    p: u64,
    q: u64,
}

/// Which geometric Seifert structure: alpha = p / gcd(p, q -/+ 1).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StructureSign {
    Plus,
    Minus,
}

/// Derived Seifert package of one geometric structure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeometricSeifertData {
    pub sign: StructureSign,
    pub p: u64,
    pub q: u64,
    /// gcd(p, q-1) for minus, gcd(p, q+1) for plus; always positive.
    /// The signed quantity beta1 + beta2 equals +n (minus) or -n (plus).
    pub n: u64,
    pub alpha: u64,
    pub beta1: Int,
    pub beta2: Int,
    /// omega_i = (-beta_i) mod alpha.
    pub omega1: u64,
    pub omega2: u64,
    /// q_i = inverse of omega_i mod alpha (0 when alpha = 1).
    pub q1: u64,
    pub q2: u64,
    /// Rational Euler number -(beta1 + beta2)/alpha.
    pub ell: Rat,
    pub kappa: Rat,
    pub chi: Rat,
}

/// One spin^c structure, indexed by (k, j) in I_n x I_alpha.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SpincIndex {
    pub k: u64,
    pub j: u64,
}

/// Normalizes q into [1, p); rejects p < 2 and non-coprime pairs.
pub fn make_lens(p: u64, q: i64) -> Result<LensSpace> {
    if p < 2 {
        return Err(Error::BadModulus { got: int(p as i64), min: 2 });
    }
    let q = (q as i128).rem_euclid(p as i128) as u64;
    if num_integer::gcd(p, q) != 1 {
        return Err(Error::NotCoprime { a: int(p as i64), b: int(q as i64) });
    }
    Ok(LensSpace { p, q })
}

impl LensSpace {
    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    /// The canonical (minus) geometric structure.
    pub fn minus_structure(&self) -> GeometricSeifertData {
        geometric_structure(self, StructureSign::Minus)
    }
}

/// Derives the full Seifert package of the chosen geometric structure.
pub fn geometric_structure(lens: &LensSpace, sign: StructureSign) -> GeometricSeifertData {
    let (p, q) = (lens.p, lens.q);
    let twist = match sign {
        StructureSign::Minus => q - 1,
        StructureSign::Plus => q + 1,
    };
    let n = num_integer::gcd(p, twist);
    debug_assert!(n >= 1);
    let alpha = p / n;

    // beta2 solves beta2 * (twist/n) = -1 mod alpha; beta1 completes
    // beta1 + beta2 = n (minus) or -n (plus).
    let beta2 = if alpha == 1 {
        Int::from(0)
    } else {
        let unit = int(((twist / n) % alpha) as i64);
        let inv = mod_inverse(&unit, &int(alpha as i64))
            .expect("twist/n is a unit mod alpha by construction");
        normalize_mod(&-inv, &int(alpha as i64))
    };
    let sum = match sign {
        StructureSign::Minus => int(n as i64),
        StructureSign::Plus => int(-(n as i64)),
    };
    let beta1 = &sum - &beta2;

    let alpha_i = int(alpha as i64);
    let omega1 = u64::try_from(normalize_mod(&-&beta1, &alpha_i)).unwrap();
    let omega2 = u64::try_from(normalize_mod(&-&beta2, &alpha_i)).unwrap();
    let inv_of = |w: u64| -> u64 {
        if alpha == 1 {
            0
        } else {
            u64::try_from(mod_inverse(&int(w as i64), &alpha_i).expect("omega_i is a unit mod alpha"))
                .unwrap()
        }
    };

    GeometricSeifertData {
        sign,
        p,
        q,
        n,
        alpha,
        omega1,
        omega2,
        q1: inv_of(omega1),
        q2: inv_of(omega2),
        ell: Rat::new(-sum.clone(), alpha_i.clone()),
        kappa: rat(-2, alpha as i64),
        chi: rat(2, alpha as i64),
        beta1,
        beta2,
    }
}

impl GeometricSeifertData {
    /// +1 for the minus structure (beta1 + beta2 = n > 0), -1 for plus.
    fn n_sign(&self) -> i64 {
        match self.sign {
            StructureSign::Minus => 1,
            StructureSign::Plus => -1,
        }
    }

    /// All p spin^c indices in lexicographic (k, j) order.
    pub fn spinc_enumerate(&self) -> Vec<SpincIndex> {
        let mut out = Vec::with_capacity(self.p as usize);
        for k in 0..self.n {
            for j in 0..self.alpha {
                out.push(SpincIndex { k, j });
            }
        }
        out
    }

    /// rho(k, j) = k/n, in [0, 1).
    pub fn rho(&self, idx: &SpincIndex) -> Rat {
        debug_assert!(idx.k < self.n && idx.j < self.alpha);
        rat(idx.k as i64, self.n as i64)
    }

    /// gamma_1(k, j) = j.
    pub fn gamma1(&self, idx: &SpincIndex) -> u64 {
        debug_assert!(idx.k < self.n && idx.j < self.alpha);
        idx.j
    }

    /// gamma_2(k, j), reduced into [0, alpha). On the minus structure it
    /// is k - 1 - j; the plus structure carries the opposite sign of
    /// beta1 + beta2 and reads -(k-1) - 2 - j.
    pub fn gamma2(&self, idx: &SpincIndex) -> u64 {
        debug_assert!(idx.k < self.n && idx.j < self.alpha);
        let s = self.n_sign() as i128;
        let raw = s * (idx.k as i128 - 1) - (1 - s) - idx.j as i128;
        raw.rem_euclid(self.alpha as i128) as u64
    }

    /// First Chern class of the spin^c structure, as an element of Z_p:
    /// e(k, j) = q(k-1) - (q-1)j mod p. Minus structure only.
    pub fn chern_class(&self, idx: &SpincIndex) -> Result<u64> {
        if self.sign != StructureSign::Minus {
            return Err(Error::UnsupportedStructure);
        }
        debug_assert!(idx.k < self.n && idx.j < self.alpha);
        let (p, q) = (self.p as i128, self.q as i128);
        let e = q * (idx.k as i128 - 1) - (q - 1) * idx.j as i128;
        Ok(e.rem_euclid(p) as u64)
    }

    /// Inverse of [`Self::chern_class`]: the index whose Chern class is m.
    pub fn chern_inverse(&self, m: u64) -> Result<SpincIndex> {
        Ok(self.chern_table()?[(m % self.p) as usize])
    }

    /// Table mapping each m in Z_p to the spin^c index with Chern class m.
    pub fn chern_table(&self) -> Result<Vec<SpincIndex>> {
        if self.sign != StructureSign::Minus {
            return Err(Error::UnsupportedStructure);
        }
        let mut table = vec![None; self.p as usize];
        for idx in self.spinc_enumerate() {
            let m = self.chern_class(&idx)? as usize;
            debug_assert!(table[m].is_none(), "chern_class must be injective");
            table[m] = Some(idx);
        }
        Ok(table
            .into_iter()
            .map(|slot| slot.expect("chern_class is onto Z_p"))
            .collect())
    }
}
