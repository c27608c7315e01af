//! Seiberg-Witten-theoretic invariants of L(p,q).
//!
//! For the positive-scalar-curvature metrics carried by a geometric
//! Seifert structure there are no irreducible monopoles, so everything
//! reduces to eta invariants: sw(sigma) = F(sigma)/8 where
//! F = 4 eta_dir + eta_sign. Both eta invariants depend on the metric
//! parameter r only through the basis function chi r^2 - ell^2 r^4, and
//! the combination F cancels that dependence exactly. [`EtaValue`]
//! keeps the dependence symbolic so the cancellation is asserted, not
//! sampled.
//!
//! From F we assemble
//! - the Froyshov invariant: max of F over the p spin^c structures,
//! - the SW polynomial SW_{p,q} = (1/8) sum_m F(c(m)) t^m in Q[Z_p],
//! - the Casson-Walker invariant CW = -(p/2) s(q,p) (Lescop normalization),
//! - the torsion part T_{p,q} = SW_{p,q} - (CW/p) Sigma,
//! and compare T_{p,q} with the Milnor-Turaev torsion through the
//! sawtooth polynomial f(t).

use num_traits::Zero;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::dedekind::{dedekind_sum, dr_fast, sawtooth};
use crate::error::{Error, Result};
use crate::exact::{frac, int, rat, rat_from_str, rat_to_string, Rat};
use crate::groupring::{f_poly, one_hat, translate_equiv, CycPoly};
use crate::lens::{GeometricSeifertData, LensSpace, SpincIndex, StructureSign};

/// An eta invariant, recorded as constant + r_coeff * (chi r^2 - ell^2 r^4).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EtaValue {
    pub constant: Rat,
    pub r_coeff: Rat,
}

impl EtaValue {
    /// Evaluate at a concrete deformation parameter r.
    pub fn eval(&self, data: &GeometricSeifertData, r: &Rat) -> Rat {
        let r2 = r * r;
        let basis = &data.chi * &r2 - &data.ell * &data.ell * &r2 * &r2;
        &self.constant + &self.r_coeff * basis
    }
}

fn sign_ell(data: &GeometricSeifertData) -> Rat {
    match data.sign {
        StructureSign::Minus => rat(-1, 1),
        StructureSign::Plus => rat(1, 1),
    }
}

/// Dedekind sum s(omega_i, alpha); zero when alpha = 1.
fn structure_dedekind(data: &GeometricSeifertData) -> (Rat, Rat) {
    let alpha = int(data.alpha as i64);
    let s1 = dedekind_sum(&int(data.omega1 as i64), &alpha).expect("omega1 coprime to alpha");
    let s2 = dedekind_sum(&int(data.omega2 as i64), &alpha).expect("omega2 coprime to alpha");
    (s1, s2)
}

/// Eta invariant of the odd-signature operator:
/// -sign(ell) + ell/3 - 4 s(omega_1, alpha) - 4 s(omega_2, alpha),
/// with r-coefficient 2 ell / 3. The Dedekind terms vanish for alpha = 1.
pub fn eta_sign(data: &GeometricSeifertData) -> EtaValue {
    let (s1, s2) = structure_dedekind(data);
    let ell = &data.ell;
    EtaValue {
        constant: -sign_ell(data) + ell / rat(3, 1) - rat(4, 1) * (s1 + s2),
        r_coeff: rat(2, 3) * ell,
    }
}

/// Eta invariant of the Dirac operator of one spin^c structure.
///
/// alpha = 1 is the smooth circle-bundle case indexed by k alone;
/// alpha > 1 splits on rho = 0 versus rho > 0. The r-coefficient is
/// -ell/6 in every branch.
pub fn eta_dir(data: &GeometricSeifertData, idx: &SpincIndex) -> EtaValue {
    let ell = &data.ell;
    let r_coeff = ell / rat(-6, 1);
    let ell6 = ell / rat(6, 1);

    if data.alpha == 1 {
        let k = rat(idx.k as i64, 1);
        let constant = if idx.k == 0 {
            ell6
        } else {
            ell6 + &k * &k / ell - sign_ell(data) * &k
        };
        return EtaValue { constant, r_coeff };
    }

    let alpha = int(data.alpha as i64);
    let alpha_r = rat(data.alpha as i64, 1);
    let g1 = rat(data.gamma1(idx) as i64, 1);
    let g2 = rat(data.gamma2(idx) as i64, 1);
    let (w1, w2) = (int(data.omega1 as i64), int(data.omega2 as i64));
    let (q1g1, q2g2) = (
        rat((data.q1 * data.gamma1(idx)) as i64, 1),
        rat((data.q2 * data.gamma2(idx)) as i64, 1),
    );

    let constant = if idx.k == 0 {
        // rho = 0
        let s_1 = dr_fast(&w1, &alpha, &(&g1 / &alpha_r), &Rat::zero()).expect("coprime");
        let s_2 = dr_fast(&w2, &alpha, &(&g2 / &alpha_r), &Rat::zero()).expect("coprime");
        ell6
            - rat(2, 1) * (s_1 + s_2)
            - sawtooth(&(&q1g1 / &alpha_r))
            - sawtooth(&(&q2g2 / &alpha_r))
    } else {
        let rho = data.rho(idx);
        let x1 = (&g1 + Rat::from_integer(w1.clone()) * &rho) / &alpha_r;
        let x2 = (&g2 + Rat::from_integer(w2.clone()) * &rho) / &alpha_r;
        let s_1 = dr_fast(&w1, &alpha, &x1, &-&rho).expect("coprime");
        let s_2 = dr_fast(&w2, &alpha, &x2, &-&rho).expect("coprime");
        (rat(1, 1) - rat(1, data.alpha as i64)) * (rat(1, 1) - rat(2, 1) * &rho)
            - ell * &rho * (rat(1, 1) - &rho)
            + rat(2, 1) * &rho
            + ell6
            - rat(2, 1) * (s_1 + s_2)
            - frac(&((&q1g1 + &rho) / &alpha_r))
            - frac(&((&q2g2 + &rho) / &alpha_r))
    };
    EtaValue { constant, r_coeff }
}

/// F(sigma) = 4 eta_dir + eta_sign, whose r-dependence cancels exactly.
/// The returned rational is the constant part.
pub fn f_value(data: &GeometricSeifertData, idx: &SpincIndex) -> Result<Rat> {
    assemble_f(&eta_sign(data), data, idx)
}

fn assemble_f(es: &EtaValue, data: &GeometricSeifertData, idx: &SpincIndex) -> Result<Rat> {
    let ed = eta_dir(data, idx);
    let r = rat(4, 1) * &ed.r_coeff + &es.r_coeff;
    if !r.is_zero() {
        return Err(Error::RDependenceNonzero);
    }
    Ok(rat(4, 1) * ed.constant + &es.constant)
}

/// The closed form of F, independently of the eta assembly: the Case A
/// quadratic for alpha = 1, and the Dedekind-Rademacher expression for
/// alpha > 1 (split exactly on k = 0).
pub fn f_closed_form(data: &GeometricSeifertData, idx: &SpincIndex) -> Rat {
    let ell = &data.ell;
    let sgn = sign_ell(data);

    if data.alpha == 1 {
        let k = rat(idx.k as i64, 1);
        return rat(4, 1) / ell * &k * &k - rat(4, 1) * &sgn * &k + ell - &sgn;
    }

    let alpha = int(data.alpha as i64);
    let alpha_r = rat(data.alpha as i64, 1);
    let (s1, s2) = structure_dedekind(data);
    let g1 = rat(data.gamma1(idx) as i64, 1);
    let g2 = rat(data.gamma2(idx) as i64, 1);
    let (w1, w2) = (int(data.omega1 as i64), int(data.omega2 as i64));
    let (q1g1, q2g2) = (
        rat((data.q1 * data.gamma1(idx)) as i64, 1),
        rat((data.q2 * data.gamma2(idx)) as i64, 1),
    );
    let rho = data.rho(idx);

    let x1 = (&g1 + Rat::from_integer(w1.clone()) * &rho) / &alpha_r;
    let x2 = (&g2 + Rat::from_integer(w2.clone()) * &rho) / &alpha_r;
    let rad1 = dr_fast(&w1, &alpha, &x1, &-&rho).expect("coprime");
    let rad2 = dr_fast(&w2, &alpha, &x2, &-&rho).expect("coprime");

    let base = ell - &sgn - rat(4, 1) * (s1 + s2) - rat(8, 1) * (rad1 + rad2);
    if idx.k == 0 {
        base - rat(4, 1) * (sawtooth(&(&q1g1 / &alpha_r)) + sawtooth(&(&q2g2 / &alpha_r)))
    } else {
        base + rat(4, 1) * (rat(1, 1) - rat(1, data.alpha as i64)) * (rat(1, 1) - rat(2, 1) * &rho)
            - rat(4, 1) * ell * &rho * (rat(1, 1) - &rho)
            + rat(8, 1) * &rho
            - rat(4, 1) * (frac(&((&q1g1 + &rho) / &alpha_r)) + frac(&((&q2g2 + &rho) / &alpha_r)))
    }
}

/// Sorted multiset of the p values of F on a structure.
pub fn f_multiset(data: &GeometricSeifertData) -> Result<Vec<Rat>> {
    let es = eta_sign(data);
    let mut vals = data
        .spinc_enumerate()
        .iter()
        .map(|idx| assemble_f(&es, data, idx))
        .collect::<Result<Vec<_>>>()?;
    vals.sort();
    Ok(vals)
}

/// Froyshov invariant with the full argmax record.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FroyshovResult {
    pub value: Rat,
    pub argmax: Vec<SpincIndex>,
}

/// Maximum of F over all p spin^c structures of the minus structure,
/// recording every index attaining it (lexicographic order).
pub fn froyshov_full(lens: &LensSpace) -> FroyshovResult {
    let data = lens.minus_structure();
    let es = eta_sign(&data);
    let mut best: Option<Rat> = None;
    let mut argmax = Vec::new();
    for idx in data.spinc_enumerate() {
        let v = assemble_f(&es, &data, &idx).expect("r-dependence cancels structurally");
        match &best {
            Some(b) if *b > v => {}
            Some(b) if *b == v => argmax.push(idx),
            _ => {
                best = Some(v);
                argmax = vec![idx];
            }
        }
    }
    FroyshovResult { value: best.expect("p >= 2 spin^c structures"), argmax }
}

/// Froyshov invariant of L(p,q).
pub fn froyshov(lens: &LensSpace) -> Rat {
    froyshov_full(lens).value
}

/// Casson-Walker invariant -(p/2) s(q,p), Lescop normalization.
pub fn casson_walker(lens: &LensSpace) -> Rat {
    let s = dedekind_sum(&int(lens.q() as i64), &int(lens.p() as i64)).expect("coprime pair");
    rat(-(lens.p() as i64), 2) * s
}

/// SW polynomial: coefficient of t^m is F(c(m))/8, with c the inverse
/// of the Chern-class bijection on the minus structure.
pub fn sw_poly(lens: &LensSpace) -> CycPoly {
    let data = lens.minus_structure();
    let es = eta_sign(&data);
    let table = data.chern_table().expect("minus structure");
    let coeffs = table
        .iter()
        .map(|idx| {
            assemble_f(&es, &data, idx).expect("r-dependence cancels structurally") / rat(8, 1)
        })
        .collect();
    CycPoly::from_coeffs(coeffs).expect("p >= 2")
}

/// T_{p,q} = Proj(SW_{p,q}); augmentation-free by construction.
pub fn torsion_part(lens: &LensSpace) -> CycPoly {
    sw_poly(lens).proj()
}

/// The Milnor-Turaev torsion representative
/// proj((1/2 - f(t)) (1/2 - f(t^q))), an element of ker aug satisfying
/// tau (1-t)(1-t^q) = 1-hat exactly.
pub fn milnor_torsion(lens: &LensSpace) -> CycPoly {
    let p = lens.p() as usize;
    let f = f_poly(p);
    let half = CycPoly::constant(p, rat(1, 2));
    let a = half.sub(&f).expect("same modulus");
    let b = half.sub(&f.substitute(lens.q() as i64)).expect("same modulus");
    a.mul(&b).expect("same modulus").proj()
}

/// Outcome of multiplying T_{p,q} by (1-t)(1-t^q) and comparing with
/// 1-hat up to translation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TorsionIdentity {
    pub product: CycPoly,
    /// Least n with product = t^n * 1-hat, if any. n = 0 means the
    /// identity holds exactly.
    pub shift: Option<usize>,
}

/// Checks T_{p,q} (1-t)(1-t^q) ~ 1-hat.
pub fn torsion_identity_check(lens: &LensSpace) -> TorsionIdentity {
    let p = lens.p() as usize;
    let t = torsion_part(lens);
    let one = CycPoly::one(p);
    let u = one.sub(&CycPoly::monomial(p, 1)).expect("same modulus");
    let v = one.sub(&CycPoly::monomial(p, lens.q() as i64)).expect("same modulus");
    let product = t.mul(&u).expect("same modulus").mul(&v).expect("same modulus");
    let shift = translate_equiv(&product, &one_hat(p)).expect("same modulus");
    TorsionIdentity { product, shift }
}

/// Per-identity outcome of the generating-function lemma for n = 1:
/// the coefficient sums A_i, B_i built directly from Rademacher and
/// sawtooth sums against their closed forms in the polynomial f.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LemmaAbReport {
    pub b1: bool,
    pub b2: bool,
    pub a1: bool,
    pub a2: bool,
}

impl LemmaAbReport {
    pub fn all_ok(&self) -> bool {
        self.b1 && self.b2 && self.a1 && self.a2
    }
}

/// Builds A_i = sum_m s(omega_i, alpha; gamma_i(c(m))/alpha, 0) t^m and
/// B_i = sum_m ((q_i gamma_i(c(m)) / alpha)) t^m, then compares:
///   B_1 = -t^{-q} f(t^{-q})           B_2 = -t^{-1} f(t^{-1})
///   A_1 = -t^{-q} f(t^{-q}) f(t^{q-1})  A_2 = t^{-1} f(t^{-1}) f(t^{q-1})
///
/// The four identities are stated for gcd(p, q-1) = 1; the report
/// records how they fare on any input (p = 2 passes vacuously since f
/// vanishes there).
pub fn lemma_ab_check(lens: &LensSpace) -> Result<LemmaAbReport> {
    let data = lens.minus_structure();
    let p = lens.p() as usize;
    let q = lens.q() as i64;
    let alpha = int(data.alpha as i64);
    let alpha_r = rat(data.alpha as i64, 1);
    let table = data.chern_table()?;

    let mut a = [CycPoly::zero(p), CycPoly::zero(p)];
    let mut b = [CycPoly::zero(p), CycPoly::zero(p)];
    for (m, idx) in table.iter().enumerate() {
        let gammas = [data.gamma1(idx), data.gamma2(idx)];
        let omegas = [data.omega1, data.omega2];
        let qs = [data.q1, data.q2];
        for i in 0..2 {
            let x = rat(gammas[i] as i64, 1) / &alpha_r;
            let s = dr_fast(&int(omegas[i] as i64), &alpha, &x, &Rat::zero())?;
            let term = CycPoly::monomial(p, m as i64);
            a[i] = a[i].add(&term.scale(&s))?;
            let st = sawtooth(&(rat((qs[i] * gammas[i]) as i64, 1) / &alpha_r));
            b[i] = b[i].add(&term.scale(&st))?;
        }
    }

    let f = f_poly(p);
    let tf = CycPoly::monomial(p, 1).mul(&f)?;
    let tf_mq = tf.substitute(-q); // t^{-q} f(t^{-q})
    let tf_m1 = tf.substitute(-1); // t^{-1} f(t^{-1})
    let f_qm1 = f.substitute(q - 1);

    Ok(LemmaAbReport {
        b1: b[0] == tf_mq.neg(),
        b2: b[1] == tf_m1.neg(),
        a1: a[0] == tf_mq.mul(&f_qm1)?.neg(),
        a2: a[1] == tf_m1.mul(&f_qm1)?,
    })
}

/// The full per-lens-space record.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SWResult {
    pub lens: LensSpace,
    pub sw_poly: CycPoly,
    pub cw: Rat,
    pub torsion_part: CycPoly,
    pub froyshov: Rat,
    pub argmax_indices: Vec<SpincIndex>,
    /// Shift of T (1-t)(1-t^q) against 1-hat; None records a failure.
    pub torsion_shift: Option<usize>,
}

/// Computes everything for one lens space.
pub fn sw_result(lens: &LensSpace) -> SWResult {
    let sw = sw_poly(lens);
    let cw = casson_walker(lens);
    let torsion = sw.proj();
    let froy = froyshov_full(lens);
    let identity = torsion_identity_check(lens);
    SWResult {
        lens: *lens,
        sw_poly: sw,
        cw,
        torsion_part: torsion,
        froyshov: froy.value,
        argmax_indices: froy.argmax,
        torsion_shift: identity.shift,
    }
}

#[derive(Serialize, Deserialize)]
struct SWResultRepr {
    p: u64,
    q: u64,
    froyshov: String,
    cw: String,
    sw: CycPoly,
    #[serde(rename = "T")]
    torsion: CycPoly,
    torsion_shift: Option<usize>,
    argmax: Vec<(u64, u64)>,
}

impl Serialize for SWResult {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        SWResultRepr {
            p: self.lens.p(),
            q: self.lens.q(),
            froyshov: rat_to_string(&self.froyshov),
            cw: rat_to_string(&self.cw),
            sw: self.sw_poly.clone(),
            torsion: self.torsion_part.clone(),
            torsion_shift: self.torsion_shift,
            argmax: self.argmax_indices.iter().map(|i| (i.k, i.j)).collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for SWResult {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let repr = SWResultRepr::deserialize(deserializer)?;
        let lens = crate::lens::make_lens(repr.p, repr.q as i64).map_err(D::Error::custom)?;
        Ok(SWResult {
            lens,
            sw_poly: repr.sw,
            cw: rat_from_str(&repr.cw).map_err(D::Error::custom)?,
            torsion_part: repr.torsion,
            froyshov: rat_from_str(&repr.froyshov).map_err(D::Error::custom)?,
            argmax_indices: repr.argmax.iter().map(|&(k, j)| SpincIndex { k, j }).collect(),
            torsion_shift: repr.torsion_shift,
        })
    }
}
