//! Continued fractions, Hirzebruch-Jung expansions, linear plumbing
//! intersection forms, and the Elkies invariant.
//!
//! The Elkies invariant of a negative definite form q is
//! rank(q) + max q^#(xi, xi) over characteristic vectors xi. In the
//! dual basis q^# is the inverse Gram matrix and the characteristic
//! vectors form the coset v0 + 2Z^rank with v0 = diag mod 2, so the
//! maximum is a closest-vector computation: minimize the positive
//! definite form -G^{-1} over the coset. We run an exact LDL^T
//! decomposition over Q and a depth-first enumeration with pruning,
//! seeded by the bound from v0 itself.

use num_integer::Integer as _;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{floor, gcd, int, rat, rat_to_string, Int, Rat};

/// Weight sequence [n_1, ..., n_k] with evaluation
/// n_1 - 1/[n_2, ..., n_k]. Nonempty; last weight nonzero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ContinuedFraction {
    weights: Vec<Int>,
}

impl ContinuedFraction {
    pub fn new(weights: Vec<Int>) -> Result<Self> {
        match weights.last() {
            None => Err(Error::BadModulus { got: int(0), min: 1 }),
            Some(w) if w.is_zero() => Err(Error::ZeroDenominator),
            Some(_) => Ok(ContinuedFraction { weights }),
        }
    }

    pub fn weights(&self) -> &[Int] {
        &self.weights
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}

/// Evaluates the continued fraction from the right.
pub fn cf_eval(cf: &ContinuedFraction) -> Result<Rat> {
    let mut val: Option<Rat> = None;
    for w in cf.weights.iter().rev() {
        let w = Rat::from_integer(w.clone());
        val = Some(match val {
            None => w,
            Some(v) => {
                if v.is_zero() {
                    return Err(Error::ZeroDenominator);
                }
                w - v.recip()
            }
        });
    }
    Ok(val.expect("weights nonempty"))
}

/// Hirzebruch-Jung expansion <w_1, ..., w_k> of p/q: every partial tail
/// has the sign of the value and |w_i| = ceil |tail|. For p > q > 0 all
/// weights are >= 2 and the recursion is the ceiling Euclid algorithm
/// w_1 = ceil(p/q), then p/q -> q/(w_1 q - p).
pub fn hj_expand(p: &Int, q: &Int) -> Result<ContinuedFraction> {
    if q.is_zero() {
        return Err(Error::ZeroDenominator);
    }
    if !gcd(p, q).is_one() {
        return Err(Error::NotCoprime { a: p.clone(), b: q.clone() });
    }
    if p.is_zero() {
        // zero admits no expansion with the sign rules
        return Err(Error::ZeroDenominator);
    }
    let mut x = Rat::new(p.clone(), q.clone());
    let mut weights = Vec::new();
    loop {
        let w = if x.is_positive() {
            -floor(&-x.clone())
        } else {
            floor(&x)
        }; // sign(x) * ceil(|x|)
        weights.push(w.clone());
        let rem = Rat::from_integer(w) - &x;
        if rem.is_zero() {
            return ContinuedFraction::new(weights);
        }
        x = rem.recip();
    }
}

/// Symmetric integer matrix of a plumbing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntersectionForm {
    gram: Vec<Vec<Int>>,
}

impl IntersectionForm {
    pub fn new(gram: Vec<Vec<Int>>) -> Self {
        let n = gram.len();
        assert!(n >= 1, "empty form");
        for row in &gram {
            assert_eq!(row.len(), n, "gram matrix must be square");
        }
        for i in 0..n {
            for j in 0..i {
                assert_eq!(gram[i][j], gram[j][i], "gram matrix must be symmetric");
            }
        }
        IntersectionForm { gram }
    }

    pub fn diagonal(entries: &[i64]) -> Self {
        let n = entries.len();
        let mut gram = vec![vec![Int::zero(); n]; n];
        for (i, &e) in entries.iter().enumerate() {
            gram[i][i] = int(e);
        }
        Self::new(gram)
    }

    pub fn rank(&self) -> usize {
        self.gram.len()
    }

    pub fn gram(&self) -> &[Vec<Int>] {
        &self.gram
    }

    /// Block sum with another form.
    pub fn direct_sum(&self, other: &IntersectionForm) -> IntersectionForm {
        let (n, m) = (self.rank(), other.rank());
        let mut gram = vec![vec![Int::zero(); n + m]; n + m];
        for i in 0..n {
            gram[i][..n].clone_from_slice(&self.gram[i]);
        }
        for i in 0..m {
            for j in 0..m {
                gram[n + i][n + j] = other.gram[i][j].clone();
            }
        }
        IntersectionForm { gram }
    }

    fn is_tridiagonal(&self) -> bool {
        let n = self.rank();
        for i in 0..n {
            for j in 0..n {
                if i.abs_diff(j) > 1 && !self.gram[i][j].is_zero() {
                    return false;
                }
            }
        }
        true
    }

    /// Leading principal minors D_1, ..., D_rank by the continuant
    /// recurrence; only valid on tridiagonal matrices.
    fn tridiagonal_minors(&self) -> Vec<Int> {
        let n = self.rank();
        let mut minors = Vec::with_capacity(n);
        let mut prev2 = Int::one();
        let mut prev1 = self.gram[0][0].clone();
        minors.push(prev1.clone());
        for i in 1..n {
            let off = &self.gram[i][i - 1];
            let d = &self.gram[i][i] * &prev1 - off * off * &prev2;
            minors.push(d.clone());
            prev2 = prev1;
            prev1 = d;
        }
        minors
    }

    /// True iff (-1)^i D_i > 0 for every leading principal minor D_i.
    pub fn is_negative_definite(&self) -> bool {
        if self.is_tridiagonal() {
            return self
                .tridiagonal_minors()
                .iter()
                .enumerate()
                .all(|(i, d)| if i % 2 == 0 { d.is_negative() } else { d.is_positive() });
        }
        // fraction-free elimination without pivoting: the pivots are the
        // successive leading minors; a zero or wrong-signed one decides
        let n = self.rank();
        let mut a = self.gram.clone();
        let mut prev = Int::one();
        for k in 0..n {
            let minor = a[k][k].clone();
            let want_negative = k % 2 == 0;
            if minor.is_zero() || minor.is_negative() != want_negative {
                return false;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &a[k][k] * &a[i][j] - &a[i][k] * &a[k][j];
                    a[i][j] = num.div_floor(&prev);
                }
            }
            prev = minor;
        }
        true
    }

    /// Exact determinant (fraction-free elimination with row pivoting).
    pub fn determinant(&self) -> Int {
        if self.is_tridiagonal() {
            return self.tridiagonal_minors().pop().expect("rank >= 1");
        }
        let n = self.rank();
        let mut a = self.gram.clone();
        let mut prev = Int::one();
        let mut sign = 1i64;
        for k in 0..n {
            if a[k][k].is_zero() {
                match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                    Some(i) => {
                        a.swap(k, i);
                        sign = -sign;
                    }
                    None => return Int::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &a[k][k] * &a[i][j] - &a[i][k] * &a[k][j];
                    a[i][j] = num.div_floor(&prev);
                }
            }
            prev = a[k][k].clone();
        }
        if sign < 0 {
            -prev
        } else {
            prev
        }
    }

    /// Exact inverse Gram matrix, i.e. the Gram matrix of the dual form
    /// q^# in dual-basis coordinates. None if singular.
    pub fn dual_gram(&self) -> Option<Vec<Vec<Rat>>> {
        let n = self.rank();
        let mut a: Vec<Vec<Rat>> = self
            .gram
            .iter()
            .map(|row| row.iter().map(|x| Rat::from_integer(x.clone())).collect())
            .collect();
        let mut inv: Vec<Vec<Rat>> = (0..n)
            .map(|i| (0..n).map(|j| if i == j { Rat::one() } else { Rat::zero() }).collect())
            .collect();
        for k in 0..n {
            let pivot_row = (k..n).find(|&i| !a[i][k].is_zero())?;
            a.swap(k, pivot_row);
            inv.swap(k, pivot_row);
            let pivot = a[k][k].clone();
            for j in 0..n {
                a[k][j] /= &pivot;
                inv[k][j] /= &pivot;
            }
            for i in 0..n {
                if i == k || a[i][k].is_zero() {
                    continue;
                }
                let factor = a[i][k].clone();
                for j in 0..n {
                    let t = &factor * &a[k][j];
                    a[i][j] -= t;
                    let t = &factor * &inv[k][j];
                    inv[i][j] -= t;
                }
            }
        }
        Some(inv)
    }

    /// Base point of the characteristic coset: diag(gram) mod 2, so the
    /// characteristic vectors are exactly v0 + 2Z^rank.
    pub fn characteristic_v0(&self) -> Vec<Int> {
        (0..self.rank())
            .map(|i| self.gram[i][i].mod_floor(&int(2)))
            .collect()
    }
}

/// Tridiagonal Gram matrix of the linear plumbing on weights w_i:
/// diagonal -w_i, off-diagonal 1 on adjacent vertices.
pub fn linear_plumbing_form(cf: &ContinuedFraction) -> IntersectionForm {
    let n = cf.len();
    let mut gram = vec![vec![Int::zero(); n]; n];
    for (i, w) in cf.weights().iter().enumerate() {
        gram[i][i] = -w;
        if i + 1 < n {
            gram[i][i + 1] = Int::one();
            gram[i + 1][i] = Int::one();
        }
    }
    IntersectionForm { gram }
}

/// See [`IntersectionForm::is_negative_definite`].
pub fn is_negative_definite(form: &IntersectionForm) -> bool {
    form.is_negative_definite()
}

/// Elkies invariant rank(q) + max over characteristic vectors of the
/// dual square norm. Errors unless the form is negative definite.
pub fn elkies_theta(form: &IntersectionForm) -> Result<Rat> {
    if !form.is_negative_definite() {
        return Err(Error::NotNegativeDefinite);
    }
    let n = form.rank();
    let ginv = form.dual_gram().expect("definite forms are invertible");
    // A = -G^{-1} is positive definite; minimize v^T A v over the coset
    let a: Vec<Vec<Rat>> = ginv
        .iter()
        .map(|row| row.iter().map(|x| -x).collect())
        .collect();

    // exact LDL^T: A = L D L^T, L unit lower triangular
    let mut l = vec![vec![Rat::zero(); n]; n];
    let mut d = vec![Rat::zero(); n];
    for i in 0..n {
        let mut di = a[i][i].clone();
        for k in 0..i {
            di -= &l[i][k] * &l[i][k] * &d[k];
        }
        d[i] = di;
        l[i][i] = Rat::one();
        for j in i + 1..n {
            let mut v = a[j][i].clone();
            for k in 0..i {
                v -= &l[j][k] * &l[i][k] * &d[k];
            }
            l[j][i] = v / &d[i];
        }
    }

    let v0: Vec<Rat> = form
        .characteristic_v0()
        .into_iter()
        .map(Rat::from_integer)
        .collect();
    let q_of = |v: &[Rat]| -> Rat {
        let mut total = Rat::zero();
        for i in 0..n {
            let mut w = v[i].clone();
            for j in i + 1..n {
                w += &l[j][i] * &v[j];
            }
            total += &d[i] * &w * &w;
        }
        total
    };
    let mut best = q_of(&v0);

    // depth-first over levels n-1 .. 0; at each level v_i runs over the
    // residue v0_i + 2Z, swept outward from the continuous minimizer
    struct Dfs<'a> {
        n: usize,
        l: &'a [Vec<Rat>],
        d: &'a [Rat],
        v0: &'a [Rat],
        v: Vec<Rat>,
        best: Rat,
    }
    impl Dfs<'_> {
        fn go(&mut self, level: isize, partial: Rat) {
            if level < 0 {
                // strictly better by the pruning rule
                self.best = partial;
                return;
            }
            let i = level as usize;
            let mut c = Rat::zero();
            for j in i + 1..self.n {
                c += &self.l[j][i] * &self.v[j];
            }
            // v_i = v0_i + 2t; center t* = (-c - v0_i)/2, rounded
            let center = (-&c - &self.v0[i]) / rat(2, 1);
            let t0 = floor(&(center + rat(1, 2)));
            for dir in [0i64, 1] {
                let mut t = if dir == 0 { t0.clone() } else { &t0 - 1 };
                loop {
                    let vi = &self.v0[i] + rat(2, 1) * Rat::from_integer(t.clone());
                    let w = &vi + &c;
                    let term = &self.d[i] * &w * &w;
                    let sub = &partial + term;
                    if sub >= self.best {
                        break;
                    }
                    self.v[i] = vi;
                    self.go(level - 1, sub);
                    if dir == 0 {
                        t += 1;
                    } else {
                        t -= 1;
                    }
                }
            }
        }
    }
    let mut dfs = Dfs { n, l: &l, d: &d, v0: &v0, v: vec![Rat::zero(); n], best };
    dfs.go(n as isize - 1, Rat::zero());
    best = dfs.best;

    Ok(Rat::from_integer(int(n as i64)) - best)
}

/// Elkies invariant of the canonical Hirzebruch-Jung plumbing of L(p,q).
pub fn theta_pq(p: u64, q: u64) -> Result<Rat> {
    if !(1 <= q && q < p) {
        return Err(Error::BadModulus { got: int(q as i64), min: 1 });
    }
    let cf = hj_expand(&int(p as i64), &int(q as i64))?;
    elkies_theta(&linear_plumbing_form(&cf))
}

/// Machine-readable record of the canonical plumbing of L(p,q).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PlumbingRecord {
    pub p: u64,
    pub q: u64,
    pub hj_weights: Vec<i64>,
    pub gram: Vec<Vec<i64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub theta: Option<String>,
}

/// Assembles the record; `with_theta` also runs the Elkies enumeration.
pub fn plumbing_record(p: u64, q: u64, with_theta: bool) -> Result<PlumbingRecord> {
    if !(1 <= q && q < p) {
        return Err(Error::BadModulus { got: int(q as i64), min: 1 });
    }
    let cf = hj_expand(&int(p as i64), &int(q as i64))?;
    let form = linear_plumbing_form(&cf);
    let theta = if with_theta {
        Some(rat_to_string(&elkies_theta(&form)?))
    } else {
        None
    };
    let to_i64 = |x: &Int| i64::try_from(x).expect("desk-scale weights fit i64");
    Ok(PlumbingRecord {
        p,
        q,
        hj_weights: cf.weights().iter().map(to_i64).collect(),
        gram: form.gram().iter().map(|row| row.iter().map(to_i64).collect()).collect(),
        theta,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cf(weights: &[i64]) -> ContinuedFraction {
        ContinuedFraction::new(weights.iter().map(|&w| int(w)).collect()).unwrap()
    }

    #[test]
    fn cf_eval_examples() {
        // decompositions are not unique: [2,2] and [3,1,3] both give 3/2
        assert_eq!(cf_eval(&cf(&[2, 2])).unwrap(), rat(3, 2));
        assert_eq!(cf_eval(&cf(&[3, 1, 3])).unwrap(), rat(3, 2));
        assert_eq!(cf_eval(&cf(&[2, 3])).unwrap(), rat(5, 3));
        assert_eq!(cf_eval(&cf(&[2, 3, 2])).unwrap(), rat(8, 5));
        assert_eq!(cf_eval(&cf(&[-2, -2])).unwrap(), rat(-3, 2));
        assert!(matches!(cf_eval(&cf(&[1, 1, 1])), Err(Error::ZeroDenominator)));
        assert!(ContinuedFraction::new(vec![int(2), int(0)]).is_err());
        assert!(ContinuedFraction::new(vec![]).is_err());
    }

    #[test]
    fn hj_examples() {
        assert_eq!(hj_expand(&int(8), &int(5)).unwrap(), cf(&[2, 3, 2]));
        for k in 1i64..=6 {
            assert_eq!(hj_expand(&int(4 * k + 1), &int(2)).unwrap(), cf(&[2 * k + 1, 2]));
        }
        for p in 2i64..=9 {
            assert_eq!(hj_expand(&int(p), &int(1)).unwrap(), cf(&[p]));
        }
        assert_eq!(hj_expand(&int(3), &int(-2)).unwrap(), cf(&[-2, -2]));
        assert!(matches!(hj_expand(&int(8), &int(6)), Err(Error::NotCoprime { .. })));
        assert!(matches!(hj_expand(&int(8), &int(0)), Err(Error::ZeroDenominator)));
    }

    #[test]
    fn hj_roundtrip_small() {
        for p in 2i64..=40 {
            for q in 1..p {
                if gcd(&int(p), &int(q)).is_one() {
                    let e = hj_expand(&int(p), &int(q)).unwrap();
                    assert_eq!(cf_eval(&e).unwrap(), rat(p, q));
                    assert!(e.weights().iter().all(|w| w >= &int(2)));
                }
            }
        }
    }

    #[test]
    fn plumbing_form_examples() {
        let form = linear_plumbing_form(&cf(&[5, 2]));
        assert_eq!(form.gram()[0], vec![int(-5), int(1)]);
        assert_eq!(form.gram()[1], vec![int(1), int(-2)]);
        let single = linear_plumbing_form(&cf(&[7]));
        assert_eq!(single.gram()[0], vec![int(-7)]);
        let l32 = linear_plumbing_form(&cf(&[2, 2]));
        assert_eq!(l32.determinant(), int(3));
    }

    #[test]
    fn negative_definiteness() {
        assert!(IntersectionForm::diagonal(&[-1]).is_negative_definite());
        for p in 1..6 {
            assert!(IntersectionForm::diagonal(&[-p]).is_negative_definite());
        }
        assert!(linear_plumbing_form(&cf(&[2, 2])).is_negative_definite());
        assert!(!IntersectionForm::diagonal(&[1]).is_negative_definite());
        assert!(!IntersectionForm::new(vec![
            vec![int(-1), int(2)],
            vec![int(2), int(-1)],
        ])
        .is_negative_definite());
        assert!(!IntersectionForm::diagonal(&[-1, 0]).is_negative_definite());
    }

    #[test]
    fn minors_recurrence_matches_pivoted_determinant() {
        // a simultaneous row/column permutation keeps the determinant and
        // definiteness but breaks the tridiagonal fast path
        for p in 2i64..=25 {
            for q in 1..p {
                if !gcd(&int(p), &int(q)).is_one() {
                    continue;
                }
                let form = linear_plumbing_form(&hj_expand(&int(p), &int(q)).unwrap());
                let n = form.rank();
                if n < 3 {
                    continue;
                }
                let perm: Vec<usize> = (0..n).step_by(2).chain((1..n).step_by(2)).collect();
                let gram: Vec<Vec<Int>> = perm
                    .iter()
                    .map(|&i| perm.iter().map(|&j| form.gram()[i][j].clone()).collect())
                    .collect();
                let permuted = IntersectionForm::new(gram);
                assert!(!permuted.is_tridiagonal());
                assert_eq!(permuted.determinant(), form.determinant());
                assert_eq!(permuted.is_negative_definite(), form.is_negative_definite());
            }
        }
        // zero leading pivot exercises the row-swap branch
        let hyperbolic = IntersectionForm::new(vec![vec![int(0), int(1)], vec![int(1), int(0)]]);
        assert_eq!(hyperbolic.determinant(), int(-1));
        assert!(!hyperbolic.is_negative_definite());
    }

    #[test]
    fn elkies_examples() {
        // even form: zero vector is characteristic
        let even = IntersectionForm::new(vec![vec![int(-2), int(1)], vec![int(1), int(-2)]]);
        assert_eq!(elkies_theta(&even).unwrap(), rat(2, 1));
        // S_{p,1} = (-p)
        for p in [3i64, 5, 7, 9] {
            let form = IntersectionForm::diagonal(&[-p]);
            assert_eq!(elkies_theta(&form).unwrap(), rat(1, 1) - rat(1, p));
        }
        for p in [2i64, 4, 8] {
            let form = IntersectionForm::diagonal(&[-p]);
            assert_eq!(elkies_theta(&form).unwrap(), rat(1, 1));
        }
        // S_{4k+1,2}
        for k in 1i64..=5 {
            let form = IntersectionForm::new(vec![
                vec![int(-(2 * k + 1)), int(1)],
                vec![int(1), int(-2)],
            ]);
            assert_eq!(
                elkies_theta(&form).unwrap(),
                rat(2, 1) - rat(2, 4 * k + 1)
            );
        }
        assert!(matches!(
            elkies_theta(&IntersectionForm::diagonal(&[1])),
            Err(Error::NotNegativeDefinite)
        ));
    }

    #[test]
    fn theta_pq_examples() {
        assert_eq!(theta_pq(7, 1).unwrap(), rat(6, 7));
        assert_eq!(theta_pq(7, 2).unwrap(), rat(2, 1));
        assert_eq!(theta_pq(9, 2).unwrap(), rat(16, 9));
        assert!(theta_pq(7, 0).is_err());
        assert!(theta_pq(6, 3).is_err());
    }

    #[test]
    fn theta_stable_under_minus_one_summand() {
        let minus_one = IntersectionForm::diagonal(&[-1]);
        let samples: Vec<IntersectionForm> = vec![
            IntersectionForm::diagonal(&[-3]),
            IntersectionForm::diagonal(&[-2, -5]),
            linear_plumbing_form(&cf(&[2, 3, 2])),
            linear_plumbing_form(&cf(&[4, 2, 2])),
            IntersectionForm::new(vec![vec![int(-2), int(1)], vec![int(1), int(-2)]]),
        ];
        for form in samples {
            let theta = elkies_theta(&form).unwrap();
            assert_eq!(elkies_theta(&form.direct_sum(&minus_one)).unwrap(), theta);
        }
    }

    /// Exhaustive box search over the characteristic coset, radius 10.
    fn theta_box_oracle(form: &IntersectionForm) -> Rat {
        let n = form.rank();
        let ginv = form.dual_gram().unwrap();
        let v0 = form.characteristic_v0();
        let mut best: Option<Rat> = None;
        let mut v = vec![Int::zero(); n];
        fn rec(
            i: usize,
            n: usize,
            v: &mut Vec<Int>,
            v0: &[Int],
            ginv: &[Vec<Rat>],
            best: &mut Option<Rat>,
        ) {
            if i == n {
                let mut q = Rat::zero();
                for a in 0..n {
                    for b in 0..n {
                        q += &ginv[a][b]
                            * Rat::from_integer(v[a].clone())
                            * Rat::from_integer(v[b].clone());
                    }
                }
                if best.as_ref().map_or(true, |b| q > *b) {
                    *best = Some(q);
                }
                return;
            }
            let mut x = -int(10) + &v0[i];
            while x <= int(10) {
                v[i] = x.clone();
                rec(i + 1, n, v, v0, ginv, best);
                x += 2;
            }
        }
        rec(0, n, &mut v, &v0, &ginv, &mut best);
        Rat::from_integer(int(n as i64)) + best.unwrap()
    }

    #[test]
    fn enumeration_matches_box_oracle() {
        let forms: Vec<IntersectionForm> = vec![
            IntersectionForm::diagonal(&[-1]),
            IntersectionForm::diagonal(&[-5]),
            IntersectionForm::diagonal(&[-2, -3]),
            IntersectionForm::diagonal(&[-1, -4, -6]),
            linear_plumbing_form(&cf(&[2, 2, 2])),
            linear_plumbing_form(&cf(&[3, 2, 4])),
            linear_plumbing_form(&cf(&[5, 2])),
            linear_plumbing_form(&cf(&[6, 3, 2])),
            IntersectionForm::new(vec![
                vec![int(-4), int(2), int(0)],
                vec![int(2), int(-3), int(1)],
                vec![int(0), int(1), int(-5)],
            ]),
            IntersectionForm::new(vec![vec![int(-6), int(3)], vec![int(3), int(-2)]]),
        ];
        for form in forms {
            assert!(form.is_negative_definite(), "{form:?}");
            assert_eq!(
                elkies_theta(&form).unwrap(),
                theta_box_oracle(&form),
                "{form:?}"
            );
        }
    }

    #[test]
    fn dual_gram_is_inverse() {
        let form = linear_plumbing_form(&cf(&[2, 3, 2]));
        let inv = form.dual_gram().unwrap();
        let n = form.rank();
        for i in 0..n {
            for j in 0..n {
                let mut acc = Rat::zero();
                for k in 0..n {
                    acc += Rat::from_integer(form.gram()[i][k].clone()) * &inv[k][j];
                }
                let expect = if i == j { Rat::one() } else { Rat::zero() };
                assert_eq!(acc, expect);
            }
        }
    }

    #[test]
    fn characteristic_v0_parity() {
        let form = IntersectionForm::new(vec![vec![int(-3), int(1)], vec![int(1), int(-2)]]);
        assert_eq!(form.characteristic_v0(), vec![int(1), int(0)]);
    }
}
