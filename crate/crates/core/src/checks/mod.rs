//! Named verification suites.
//!
//! Every identity and fixture the crate is supposed to satisfy is
//! packaged here as a [`Check`] producing witness-bearing failure
//! strings, grouped into the suites exposed by the command-line
//! `check` command. The acceptance test target drives the same
//! functions at their published bounds.

pub mod fixtures;

use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::conjectures::{conjecture1_scan, conjecture2_scan};
use crate::dedekind::{dedekind_sum, dr_brute, dr_fast, reciprocity_rhs, sawtooth};
use crate::exact::{int, rat, rat_int, rat_to_string, Int, Rat};
use crate::groupring::{f_poly, one_hat, sigma, translate_equiv, CycPoly};
use crate::lens::{geometric_structure, make_lens, LensSpace, StructureSign};
use crate::plumbing::{
    cf_eval, elkies_theta, hj_expand, linear_plumbing_form, theta_pq, IntersectionForm,
};
use crate::sw::{
    casson_walker, eta_dir, eta_sign, f_closed_form, f_multiset, f_value, froyshov,
    lemma_ab_check, milnor_torsion, sw_poly, torsion_identity_check, torsion_part,
};

/// Outcome of one named check.
#[derive(Debug, Clone)]
pub struct Check {
    pub label: &'static str,
    pub cases: u64,
    pub failures: Vec<String>,
}

impl Check {
    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Outcome of a whole suite.
#[derive(Debug, Clone)]
pub struct SuiteReport {
    pub suite: String,
    pub checks: Vec<Check>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(Check::ok)
    }

    pub fn total_cases(&self) -> u64 {
        self.checks.iter().map(|c| c.cases).sum()
    }
}

fn coprime_pairs(p_max: u64) -> Vec<(u64, u64)> {
    (2..=p_max)
        .flat_map(|p| (1..p).map(move |q| (p, q)))
        .filter(|&(p, q)| num_integer::gcd(p, q) == 1)
        .collect()
}

fn lens(p: u64, q: u64) -> LensSpace {
    make_lens(p, q as i64).expect("coprime pair")
}

/// The nine x,y values of the oracle grids.
fn xy_grid() -> Vec<Rat> {
    vec![
        rat_int(0),
        rat(1, 2),
        rat(-1, 2),
        rat(1, 3),
        rat(-1, 3),
        rat(2, 5),
        rat(-2, 5),
        rat(7, 3),
        rat(-7, 3),
    ]
}

fn par_pairs_check(
    label: &'static str,
    pairs: Vec<(u64, u64)>,
    f: impl Fn(u64, u64) -> Option<String> + Sync,
) -> Check {
    let cases = pairs.len() as u64;
    let failures = pairs.into_par_iter().filter_map(|(p, q)| f(p, q)).collect();
    Check { label, cases, failures }
}

// --- Dedekind-Rademacher checks -----------------------------------------

/// Fast evaluator against the defining sum on the exhaustive grid:
/// alpha <= alpha_max, coprime beta, nine x,y values.
pub fn dr_oracle_exhaustive(alpha_max: u64) -> Check {
    let grid = xy_grid();
    let per_alpha: Vec<(u64, Vec<String>)> = (1..=alpha_max)
        .into_par_iter()
        .map(|alpha| {
            let mut cases = 0;
            let mut failures = Vec::new();
            for beta in 1..=alpha {
                if num_integer::gcd(beta, alpha) != 1 {
                    continue;
                }
                let (b, a) = (int(beta as i64), int(alpha as i64));
                for x in &grid {
                    for y in &grid {
                        cases += 1;
                        let fast = dr_fast(&b, &a, x, y).expect("coprime");
                        let brute = dr_brute(&b, &a, x, y);
                        if fast != brute {
                            failures.push(format!(
                                "s({beta},{alpha};{},{}) fast {} != brute {}",
                                rat_to_string(x),
                                rat_to_string(y),
                                rat_to_string(&fast),
                                rat_to_string(&brute)
                            ));
                        }
                    }
                }
            }
            (cases, failures)
        })
        .collect();
    let cases = per_alpha.iter().map(|(c, _)| c).sum();
    let failures = per_alpha.into_iter().flat_map(|(_, f)| f).collect();
    Check { label: "Dedekind-Rademacher fast = brute, exhaustive grid", cases, failures }
}

/// Random oracle instances with alpha <= alpha_max.
pub fn dr_oracle_random(count: u64, alpha_max: u64) -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(0xdede_cafe);
    let mut failures = Vec::new();
    let mut done = 0;
    while done < count {
        let alpha: i64 = rng.gen_range(1..=alpha_max as i64);
        let beta: i64 = rng.gen_range(-2 * alpha_max as i64..=2 * alpha_max as i64);
        if alpha > 1 && num_integer::gcd(beta.rem_euclid(alpha), alpha) != 1 {
            continue;
        }
        let x = rat(rng.gen_range(-20..=20), rng.gen_range(1..=10));
        let y = rat(rng.gen_range(-20..=20), rng.gen_range(1..=10));
        let (b, a) = (int(beta), int(alpha));
        let fast = dr_fast(&b, &a, &x, &y).expect("coprime");
        if fast != dr_brute(&b, &a, &x, &y) {
            failures.push(format!("random instance s({beta},{alpha};{x},{y})"));
        }
        done += 1;
    }
    Check { label: "Dedekind-Rademacher fast = brute, random instances", cases: count, failures }
}

/// Reciprocity: both sums by brute force against the closed right-hand
/// side, on coprime alpha, beta <= bound and the nine x,y values.
pub fn reciprocity_laws(bound: u64) -> Check {
    let grid = xy_grid();
    let pairs: Vec<(u64, u64)> = (1..=bound)
        .flat_map(|a| (1..=a).map(move |b| (a, b)))
        .filter(|&(a, b)| num_integer::gcd(a, b) == 1)
        .collect();
    let per_pair: Vec<(u64, Vec<String>)> = pairs
        .into_par_iter()
        .map(|(alpha, beta)| {
            let (a, b) = (int(alpha as i64), int(beta as i64));
            let mut cases = 0;
            let mut failures = Vec::new();
            for x in &grid {
                for y in &grid {
                    cases += 1;
                    let lhs = dr_brute(&b, &a, x, y) + dr_brute(&a, &b, y, x);
                    let rhs = reciprocity_rhs(&b, &a, x, y);
                    if lhs != rhs {
                        failures.push(format!(
                            "reciprocity at ({beta},{alpha};{},{})",
                            rat_to_string(x),
                            rat_to_string(y)
                        ));
                    }
                }
            }
            (cases, failures)
        })
        .collect();
    let cases = per_pair.iter().map(|(c, _)| c).sum();
    let failures = per_pair.into_iter().flat_map(|(_, f)| f).collect();
    Check { label: "reciprocity laws (integer and non-integer branch)", cases, failures }
}

/// Shift law s(beta, alpha; x, y) = s(beta - m alpha, alpha; x + m y, y),
/// both sides by the defining sum, |m| <= 5.
pub fn shift_law(bound: u64) -> Check {
    let grid = xy_grid();
    let per_alpha: Vec<(u64, Vec<String>)> = (1..=bound)
        .into_par_iter()
        .map(|alpha| {
            let mut cases = 0;
            let mut failures = Vec::new();
            let a = int(alpha as i64);
            for beta in 1..=alpha {
                if num_integer::gcd(beta, alpha) != 1 {
                    continue;
                }
                let b = int(beta as i64);
                for x in &grid {
                    for y in &grid {
                        let base = dr_brute(&b, &a, x, y);
                        for m in [-5i64, -2, -1, 1, 2, 5] {
                            cases += 1;
                            let shifted_beta = &b - int(m) * &a;
                            let shifted_x = x + rat_int(m) * y;
                            if dr_brute(&shifted_beta, &a, &shifted_x, y) != base {
                                failures.push(format!(
                                    "shift law at ({beta},{alpha}), m={m}, x={}, y={}",
                                    rat_to_string(x),
                                    rat_to_string(y)
                                ));
                            }
                        }
                    }
                }
            }
            (cases, failures)
        })
        .collect();
    let cases = per_alpha.iter().map(|(c, _)| c).sum();
    let failures = per_alpha.into_iter().flat_map(|(_, f)| f).collect();
    Check { label: "shift law on the defining sums", cases, failures }
}

/// Base case s(beta, 1; x, y) = ((beta y + x)) ((y)) against the
/// defining sum at alpha = 1.
pub fn base_case_rec4() -> Check {
    let grid = xy_grid();
    let mut cases = 0;
    let mut failures = Vec::new();
    for beta in -12i64..=12 {
        let b = int(beta);
        for x in &grid {
            for y in &grid {
                cases += 1;
                let closed = sawtooth(&(rat_int(beta) * y + x)) * sawtooth(y);
                let brute = dr_brute(&b, &Int::one(), x, y);
                let fast = dr_fast(&b, &Int::one(), x, y).expect("alpha 1");
                if closed != brute || fast != brute {
                    failures.push(format!("base case at beta={beta}, x={x}, y={y}"));
                }
            }
        }
    }
    Check { label: "modulus-1 base case ((beta y + x))((y))", cases, failures }
}

/// Distribution identity: sum over mu in I_m of (((mu + w)/m)) = ((w)).
pub fn kub_identity(m_max: u64) -> Check {
    let ws = [rat_int(0), rat(1, 2), rat(1, 3), rat(5, 7), rat(13, 4)];
    let mut cases = 0;
    let mut failures = Vec::new();
    for m in 1..=m_max {
        for w in &ws {
            cases += 1;
            let mut acc = Rat::zero();
            for mu in 0..m {
                acc += sawtooth(&((rat_int(mu as i64) + w) / rat_int(m as i64)));
            }
            if acc != sawtooth(w) {
                failures.push(format!("distribution identity at m={m}, w={w}"));
            }
        }
    }
    Check { label: "sawtooth distribution identity", cases, failures }
}

/// 4(s(2,p) - s(1,p)) = -p/6 + 1/(6p) for odd p.
pub fn ded2_identity(p_max: u64) -> Check {
    let mut cases = 0;
    let mut failures = Vec::new();
    for p in (3..=p_max).step_by(2) {
        cases += 1;
        let lhs = rat_int(4)
            * (dedekind_sum(&int(2), &int(p as i64)).expect("odd p")
                - dedekind_sum(&int(1), &int(p as i64)).expect("p >= 1"));
        if lhs != rat(-(p as i64), 6) + rat(1, 6 * p as i64) {
            failures.push(format!("4(s(2,{p}) - s(1,{p}))"));
        }
    }
    Check { label: "difference identity 4(s(2,p) - s(1,p))", cases, failures }
}

/// s(omega_1, alpha) + s(omega_2, alpha) = s(q,p) - 1/(6p) - n^2/(12p) + 1/4
/// with the Seifert data of the minus structure.
pub fn ouyang_identity(p_max: u64) -> Check {
    par_pairs_check("Ouyang identity on Seifert data", coprime_pairs(p_max), |p, q| {
        let d = lens(p, q).minus_structure();
        let alpha = int(d.alpha as i64);
        let lhs = dedekind_sum(&int(d.omega1 as i64), &alpha).expect("coprime")
            + dedekind_sum(&int(d.omega2 as i64), &alpha).expect("coprime");
        let rhs = dedekind_sum(&int(q as i64), &int(p as i64)).expect("coprime")
            - rat(1, 6 * p as i64)
            - rat((d.n * d.n) as i64, 12 * p as i64)
            + rat(1, 4);
        (lhs != rhs).then(|| format!("Ouyang identity at L({p},{q})"))
    })
}

/// Parity normalization s(-beta, alpha; -x, y) = -s(beta, alpha; x, y),
/// on the brute oracle.
pub fn parity_normalization() -> Check {
    let grid = xy_grid();
    let mut cases = 0;
    let mut failures = Vec::new();
    for alpha in 1u64..=20 {
        for beta in 1..=alpha {
            if num_integer::gcd(beta, alpha) != 1 {
                continue;
            }
            let (b, a) = (int(beta as i64), int(alpha as i64));
            for x in &grid {
                for y in &grid {
                    cases += 1;
                    if dr_brute(&-&b, &a, &-x, y) != -dr_brute(&b, &a, x, y) {
                        failures.push(format!("parity at ({beta},{alpha},{x},{y})"));
                    }
                }
            }
        }
    }
    Check { label: "parity normalization on the oracle", cases, failures }
}

// --- group-ring checks ----------------------------------------------------

/// (1/2 - f(t^m)) (1 - t^m) = 1-hat for every p <= p_max and every unit m.
pub fn inverse_identity(p_max: u64) -> Check {
    let per_p: Vec<(u64, Vec<String>)> = (2..=p_max)
        .into_par_iter()
        .map(|p| {
            let mut cases = 0;
            let mut failures = Vec::new();
            let pp = p as usize;
            let f = f_poly(pp);
            let target = one_hat(pp);
            for m in 1..p {
                if num_integer::gcd(m, p) != 1 {
                    continue;
                }
                cases += 1;
                let lhs = CycPoly::constant(pp, rat(1, 2))
                    .sub(&f.substitute(m as i64))
                    .expect("modulus")
                    .mul(&CycPoly::one(pp).sub(&CycPoly::monomial(pp, m as i64)).expect("modulus"))
                    .expect("modulus");
                if lhs != target {
                    failures.push(format!("inverse identity at p={p}, m={m}"));
                }
            }
            (cases, failures)
        })
        .collect();
    let cases = per_p.iter().map(|(c, _)| c).sum();
    let failures = per_p.into_iter().flat_map(|(_, f)| f).collect();
    Check { label: "sawtooth-polynomial inverse identity", cases, failures }
}

/// Ring axioms, augmentation morphism, projection and involution
/// behavior on seeded random elements.
pub fn groupring_random_axioms() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(0x6109_ab01);
    let mut cases = 0;
    let mut failures = Vec::new();
    for round in 0..60 {
        let p = rng.gen_range(1..=50usize);
        let mut random_poly = |p: usize| {
            CycPoly::from_coeffs(
                (0..p)
                    .map(|_| rat(rng.gen_range(-30..=30), rng.gen_range(1..=9)))
                    .collect(),
            )
            .expect("nonempty")
        };
        let a = random_poly(p);
        let b = random_poly(p);
        let c = random_poly(p);
        cases += 1;
        let ok = a.mul(&b).unwrap() == b.mul(&a).unwrap()
            && a.mul(&b).unwrap().mul(&c).unwrap() == a.mul(&b.mul(&c).unwrap()).unwrap()
            && a.mul(&b.add(&c).unwrap()).unwrap()
                == a.mul(&b).unwrap().add(&a.mul(&c).unwrap()).unwrap()
            && a.mul(&b).unwrap().aug() == a.aug() * b.aug()
            && a.proj().aug().is_zero()
            && one_hat(p).mul(&a.proj()).unwrap() == a.proj()
            && a.involution().involution() == a
            && sigma(p).mul(&a).unwrap() == sigma(p).scale(&a.aug());
        if !ok {
            failures.push(format!("ring axiom round {round} at p={p}"));
        }
    }
    Check { label: "group-ring axioms on random elements", cases, failures }
}

// --- Seiberg-Witten checks -------------------------------------------------

/// aug(SW_{p,q}) = -(p/2) s(q,p) on every coprime pair.
pub fn cw_theorem(p_max: u64) -> Check {
    par_pairs_check("aug(SW) equals the Casson-Walker invariant", coprime_pairs(p_max), |p, q| {
        let l = lens(p, q);
        let (lhs, rhs) = (sw_poly(&l).aug(), casson_walker(&l));
        (lhs != rhs).then(|| {
            format!("L({p},{q}): aug(SW) = {}, CW = {}", rat_to_string(&lhs), rat_to_string(&rhs))
        })
    })
}

/// The r-coefficient of 4 eta_dir + eta_sign vanishes identically, and
/// the eta-assembled F equals the closed form, for every spin^c index
/// of the canonical structure. (The plus structure gets the same
/// treatment in the module tests and implicitly through the multiset
/// comparison, which assembles its F values the same way.)
pub fn r_independence_and_two_path(p_max: u64) -> Check {
    par_pairs_check("r-independence and closed-form agreement of F", coprime_pairs(p_max), |p, q| {
        let d = lens(p, q).minus_structure();
        let es = eta_sign(&d);
        for idx in d.spinc_enumerate() {
            let ed = eta_dir(&d, &idx);
            if !(rat(4, 1) * &ed.r_coeff + &es.r_coeff).is_zero() {
                return Some(format!("r-dependence survives at L({p},{q}) {idx:?}"));
            }
            match f_value(&d, &idx) {
                Err(e) => return Some(format!("L({p},{q}) {idx:?}: {e}")),
                Ok(v) => {
                    if v != f_closed_form(&d, &idx) {
                        return Some(format!("two-path mismatch at L({p},{q}) {idx:?}"));
                    }
                }
            }
        }
        None
    })
}

/// The involution carries SW_{p,q} to a translate of itself.
pub fn conjugation_symmetry(p_max: u64) -> Check {
    par_pairs_check("conjugation symmetry of the SW polynomial", coprime_pairs(p_max), |p, q| {
        let sw = sw_poly(&lens(p, q));
        translate_equiv(&sw.involution(), &sw)
            .expect("same modulus")
            .is_none()
            .then(|| format!("involution(SW) is no translate of SW at L({p},{q})"))
    })
}

/// The two geometric structures produce the same multiset of F values.
pub fn structure_multiset_equality(p_max: u64) -> Check {
    par_pairs_check("F-value multisets of the two structures", coprime_pairs(p_max), |p, q| {
        let l = lens(p, q);
        let minus = f_multiset(&geometric_structure(&l, StructureSign::Minus));
        let plus = f_multiset(&geometric_structure(&l, StructureSign::Plus));
        match (minus, plus) {
            (Ok(a), Ok(b)) if a == b => None,
            _ => Some(format!("structure multisets differ at L({p},{q})")),
        }
    })
}

// --- torsion checks ---------------------------------------------------------

/// T_{p,q} reproduces every published table, each at its verified match
/// level: up to translation where the printing is convention-consistent,
/// up to translation plus generator relabeling where it is not, and via
/// the orientation correction for the duplicated (4,3) row. See
/// [`fixtures::TableMatch`] for the classification; any change of level
/// in either direction fails the check.
pub fn torsion_tables_match() -> Check {
    use fixtures::TableMatch;
    let mut cases = 0;
    let mut failures = Vec::new();
    for (p, q, coeffs) in fixtures::TORSION_TABLES {
        cases += 1;
        let (p, q) = (*p, *q);
        let l = lens(p, q);
        let computed = torsion_part(&l);
        let table = fixtures::torsion_table_poly(coeffs);

        let achieved = if translate_equiv(&computed, &table).expect("same modulus").is_some() {
            TableMatch::Translate
        } else if (2..p)
            .filter(|&m| num_integer::gcd(m, p) == 1)
            .any(|m| {
                translate_equiv(&computed, &table.substitute(m as i64))
                    .expect("same modulus")
                    .is_some()
            })
        {
            TableMatch::Relabel
        } else {
            // only acceptable for the known erratum: the true value must
            // be -involution of the printed one and must agree with the
            // Milnor torsion representative
            let corrected = table.involution().neg();
            let matches_corrected =
                translate_equiv(&computed, &corrected).expect("same modulus").is_some();
            let matches_milnor =
                translate_equiv(&computed, &milnor_torsion(&l)).expect("same modulus").is_some();
            if matches_corrected && matches_milnor {
                TableMatch::OrientationErratum
            } else {
                failures.push(format!("T_{{{p},{q}}} matches nothing at all: {computed}"));
                continue;
            }
        };

        let expected = fixtures::expected_table_match(p, q);
        if achieved != expected {
            failures.push(format!(
                "T_{{{p},{q}}} matched at level {achieved:?}, expected {expected:?}"
            ));
        }
    }
    Check { label: "published torsion tables at their verified match levels", cases, failures }
}

/// T_{p,q} (1-t)(1-t^q) ~ 1-hat; exactly (shift 0) when gcd(p,q-1) = 1.
pub fn torsion_identity(p_max: u64) -> Check {
    par_pairs_check("torsion product identity", coprime_pairs(p_max), |p, q| {
        let l = lens(p, q);
        let n = num_integer::gcd(p, q - 1);
        let r = torsion_identity_check(&l);
        match r.shift {
            None => Some(format!("T(1-t)(1-t^q) is no translate of 1-hat at L({p},{q})")),
            Some(s) if n == 1 && s != 0 => {
                Some(format!("expected exact equality at L({p},{q}), got shift {s}"))
            }
            Some(_) => None,
        }
    })
}

/// The torsion representative satisfies its defining equation exactly.
pub fn milnor_defining_identity(p_max: u64) -> Check {
    par_pairs_check("Milnor torsion defining identity", coprime_pairs(p_max), |p, q| {
        let l = lens(p, q);
        let pp = p as usize;
        let tau = milnor_torsion(&l);
        let u = CycPoly::one(pp).sub(&CycPoly::monomial(pp, 1)).expect("modulus");
        let v = CycPoly::one(pp).sub(&CycPoly::monomial(pp, q as i64)).expect("modulus");
        let prod = tau.mul(&u).expect("modulus").mul(&v).expect("modulus");
        (!tau.aug().is_zero() || prod != one_hat(pp))
            .then(|| format!("tau (1-t)(1-t^q) != 1-hat at L({p},{q})"))
    })
}

/// T_{p,q} ~ tau_{p,q}. Proved for gcd(p, q-1) = 1 and confirmed
/// numerically in general, so the sweep covers every coprime pair.
pub fn milnor_matches_torsion(p_max: u64) -> Check {
    par_pairs_check("T matches the Milnor torsion up to translation", coprime_pairs(p_max), |p, q| {
        let l = lens(p, q);
        translate_equiv(&torsion_part(&l), &milnor_torsion(&l))
            .expect("same modulus")
            .is_none()
            .then(|| format!("T !~ tau at L({p},{q})"))
    })
}

/// The four generating-function identities on the first `count` pairs
/// with gcd(p, q-1) = 1, q >= 2, p <= p_max.
pub fn lemma_ab_identities(count: usize, p_max: u64) -> Check {
    let pairs: Vec<(u64, u64)> = coprime_pairs(p_max)
        .into_iter()
        .filter(|&(p, q)| q >= 2 && num_integer::gcd(p, q - 1) == 1)
        .take(count)
        .collect();
    par_pairs_check("generating-function identities for A_i, B_i", pairs, |p, q| {
        match lemma_ab_check(&lens(p, q)) {
            Ok(report) if report.all_ok() => None,
            Ok(report) => Some(format!("identities fail at L({p},{q}): {report:?}")),
            Err(e) => Some(format!("L({p},{q}): {e}")),
        }
    })
}

// --- Froyshov closed-form families ------------------------------------------

/// All published closed-form Froyshov families.
pub fn froyshov_tables() -> Check {
    let mut cases = 0;
    let mut failures = Vec::new();
    let mut expect = |p: u64, q: u64, want: Rat, family: &str| {
        cases += 1;
        let got = froyshov(&lens(p, q));
        if got != want {
            failures.push(format!(
                "{family}: Froy(L({p},{q})) = {}, expected {}",
                rat_to_string(&got),
                rat_to_string(&want)
            ));
        }
    };

    // q = 1: 1 for even p, 1 - 1/p for odd p
    for p in 2..=50 {
        let want = if p % 2 == 0 { rat_int(1) } else { rat(1, 1) - rat(1, p as i64) };
        expect(p, 1, want, "q=1 family");
    }
    // q = p-1: p - 1
    for p in 3..=30u64 {
        expect(p, p - 1, rat_int(p as i64 - 1), "q=p-1 family");
    }
    // q = 2, odd p: 2 when p = 4k-1, 2 - 2/p when p = 4k+1
    for p in (3..=101u64).step_by(2) {
        let want = if p % 4 == 3 { rat_int(2) } else { rat(2, 1) - rat(2, p as i64) };
        expect(p, 2, want, "q=2 family");
    }
    // q = 3 residue families
    for k in 1..=10i64 {
        expect((6 * k - 2) as u64, 3, rat_int(3), "q=3, p=6k-2");
        expect((6 * k - 1) as u64, 3, rat(2, 1) - rat(2 * k, 6 * k - 1), "q=3, p=6k-1");
        expect((6 * k + 1) as u64, 3, rat(3, 1) - rat(3, 6 * k + 1), "q=3, p=6k+1");
        expect((6 * k + 2) as u64, 3, rat(2, 1) - rat(k + 1, 3 * k + 1), "q=3, p=6k+2");
    }
    // q = 4 residue families
    for k in 1..=10i64 {
        expect((8 * k - 3) as u64, 4, rat_int(4), "q=4, p=8k-3");
        expect((8 * k - 1) as u64, 4, rat_int(2), "q=4, p=8k-1");
        expect((8 * k + 1) as u64, 4, rat(4, 1) - rat(4, 8 * k + 1), "q=4, p=8k+1");
        expect((8 * k + 3) as u64, 4, rat(2, 1) - rat(4, 8 * k + 3), "q=4, p=8k+3");
    }
    // q = 5 residue families
    for k in 1..=8i64 {
        expect((10 * k - 4) as u64, 5, rat_int(5), "q=5, p=10k-4");
        expect((10 * k - 3) as u64, 5, rat(3, 1) - rat(4 * k - 1, 10 * k - 3), "q=5, p=10k-3");
        expect((10 * k - 2) as u64, 5, rat(3, 1) - rat(2 * k, 5 * k - 1), "q=5, p=10k-2");
        expect((10 * k - 1) as u64, 5, rat(2, 1) - rat(2 * k, 10 * k - 1), "q=5, p=10k-1");
        expect((10 * k + 1) as u64, 5, rat(5, 1) - rat(5, 10 * k + 1), "q=5, p=10k+1");
        expect((10 * k + 2) as u64, 5, rat(3, 1) - rat(2 * k + 2, 5 * k + 1), "q=5, p=10k+2");
        expect((10 * k + 3) as u64, 5, rat(3, 1) - rat(4 * k + 3, 10 * k + 3), "q=5, p=10k+3");
        expect((10 * k + 4) as u64, 5, rat(2, 1) - rat(k + 2, 5 * k + 2), "q=5, p=10k+4");
    }
    // L(p^2, p+1): p + 1 for even p, p + 1 - (p+1)/p^2 for odd p
    for p in 2..=12i64 {
        let want = if p % 2 == 0 {
            rat_int(p + 1)
        } else {
            rat_int(p + 1) - rat(p + 1, p * p)
        };
        expect((p * p) as u64, (p + 1) as u64, want, "rational-ball family");
    }
    // the worked example
    expect(5, 2, rat(8, 5), "worked example");

    Check { label: "Froyshov closed-form families", cases, failures }
}

// --- Elkies checks -----------------------------------------------------------

/// Theta_{p,1} and Theta_{p,2} against their closed forms.
pub fn elkies_closed_forms(p_max: u64) -> Check {
    let mut cases = 0;
    let mut failures = Vec::new();
    for p in 2..=p_max {
        cases += 1;
        let want = if p % 2 == 0 { rat_int(1) } else { rat(1, 1) - rat(1, p as i64) };
        if theta_pq(p, 1).expect("valid") != want {
            failures.push(format!("Theta_{{{p},1}}"));
        }
    }
    for p in (3..=p_max).step_by(2) {
        cases += 1;
        let want = if p % 4 == 3 { rat_int(2) } else { rat(2, 1) - rat(2, p as i64) };
        if theta_pq(p, 2).expect("valid") != want {
            failures.push(format!("Theta_{{{p},2}}"));
        }
    }
    Check { label: "Elkies invariant closed forms for q = 1, 2", cases, failures }
}

/// Even forms have Theta = rank (the zero vector is characteristic and
/// the enumeration must find it).
pub fn even_form_shortcut() -> Check {
    let mut forms: Vec<IntersectionForm> = Vec::new();
    // all-2 chains: canonical plumbings of L(p, p-1)
    for p in 3..=12 {
        forms.push(linear_plumbing_form(
            &hj_expand(&int(p), &int(p - 1)).expect("coprime"),
        ));
    }
    // the 2x2 even plumbings [[-2k, 1], [1, -2]]
    for k in 1..=5i64 {
        forms.push(IntersectionForm::new(vec![
            vec![int(-2 * k), int(1)],
            vec![int(1), int(-2)],
        ]));
    }
    forms.push(IntersectionForm::diagonal(&[-2, -4, -6]));

    let mut cases = 0;
    let mut failures = Vec::new();
    for form in forms {
        cases += 1;
        let even = form.gram().iter().enumerate().all(|(i, row)| (&row[i] % int(2)).is_zero());
        let theta = elkies_theta(&form).expect("negative definite");
        if !even || theta != rat_int(form.rank() as i64) {
            failures.push(format!("even-form value at rank {}", form.rank()));
        }
    }
    Check { label: "even forms have Theta = rank", cases, failures }
}

/// Theta is unchanged by adding a (-1) summand.
pub fn theta_stability() -> Check {
    let minus_one = IntersectionForm::diagonal(&[-1]);
    let mut forms: Vec<IntersectionForm> = vec![
        IntersectionForm::diagonal(&[-1]),
        IntersectionForm::diagonal(&[-3]),
        IntersectionForm::diagonal(&[-4]),
        IntersectionForm::diagonal(&[-2, -2]),
        IntersectionForm::diagonal(&[-3, -5]),
        IntersectionForm::diagonal(&[-2, -3, -7]),
    ];
    for (p, q) in [(5, 2), (7, 3), (8, 3), (9, 2), (11, 4), (12, 5), (13, 5), (15, 4), (17, 3), (18, 5), (19, 7), (20, 9), (23, 7), (25, 6)] {
        forms.push(linear_plumbing_form(&hj_expand(&int(p), &int(q)).expect("coprime")));
    }
    let mut cases = 0;
    let mut failures = Vec::new();
    for form in forms {
        cases += 1;
        let theta = elkies_theta(&form).expect("negative definite");
        if elkies_theta(&form.direct_sum(&minus_one)).expect("negative definite") != theta {
            failures.push(format!("instability at rank {}", form.rank()));
        }
    }
    Check { label: "Theta stable under (-1) summands", cases, failures }
}

/// Hirzebruch-Jung round-trip and |det| = p for every coprime pair.
pub fn det_and_cf_roundtrip(p_max: u64) -> Check {
    par_pairs_check("HJ round-trip and plumbing determinant", coprime_pairs(p_max), |p, q| {
        let cf = match hj_expand(&int(p as i64), &int(q as i64)) {
            Ok(cf) => cf,
            Err(e) => return Some(format!("hj_expand({p},{q}): {e}")),
        };
        if cf_eval(&cf).expect("well-formed") != rat(p as i64, q as i64) {
            return Some(format!("cf round-trip fails at ({p},{q})"));
        }
        let form = linear_plumbing_form(&cf);
        if !form.is_negative_definite() {
            return Some(format!("plumbing of ({p},{q}) not negative definite"));
        }
        let det = form.determinant();
        if det.abs() != int(p as i64) {
            return Some(format!("|det S_{{{p},{q}}}| = {det}, expected {p}"));
        }
        None
    })
}

// --- conjecture scans ----------------------------------------------------------

/// Proved sub-cases of the two conjecture scans: the q in {1,2} rows of
/// the Elkies comparison, and the residue families that restate the
/// published tables. Everything else only needs to be witness-bearing.
pub fn conjecture_proved_cases() -> Check {
    let mut cases = 0;
    let mut failures = Vec::new();

    let c2 = conjecture2_scan(30);
    for row in &c2.rows {
        if row.q <= 2 {
            cases += 1;
            if !row.equal {
                failures.push(format!("proved Elkies case differs at L({},{})", row.p, row.q));
            }
        }
    }

    for (q, k_max) in [(2u64, 10u64), (3, 10), (4, 10), (5, 8)] {
        let report = conjecture1_scan(q, k_max);
        for fam in &report.families {
            cases += 1;
            if !fam.conforms {
                failures.push(format!(
                    "residue family u={} at q={q} does not fit: {:?}",
                    fam.u, fam.violations
                ));
            }
        }
        cases += 1;
        if !report.bound_violations.is_empty() {
            failures.push(format!("bound Froy <= q violated at q={q}"));
        }
        // the q-1 family claim must at least be reported with witnesses
        cases += 1;
        if report.family_check.is_empty() {
            failures.push(format!("q-1 family report empty at q={q}"));
        }
    }

    Check { label: "conjecture scans, proved sub-cases", cases, failures }
}

// --- suites ------------------------------------------------------------------

pub const SUITE_NAMES: &[&str] =
    &["dedekind", "groupring", "cw", "torsion", "froyshov-tables", "elkies", "all"];

/// Runs one named suite. `p_max` overrides the principal sweep bound;
/// secondary sweeps are clamped to their published defaults.
pub fn run_suite(name: &str, p_max: Option<u64>) -> Option<SuiteReport> {
    let m = |default: u64| p_max.map_or(default, |v| v.min(default));
    let checks = match name {
        "dedekind" => vec![
            dr_oracle_exhaustive(60),
            dr_oracle_random(500, 500),
            reciprocity_laws(50),
            shift_law(m(25)),
            base_case_rec4(),
            kub_identity(100),
            ded2_identity(p_max.unwrap_or(100)),
            ouyang_identity(p_max.unwrap_or(100)),
            parity_normalization(),
        ],
        "groupring" => vec![inverse_identity(p_max.unwrap_or(50)), groupring_random_axioms()],
        "cw" => vec![
            cw_theorem(p_max.unwrap_or(100)),
            r_independence_and_two_path(m(60)),
            conjugation_symmetry(m(60)),
            structure_multiset_equality(m(60)),
        ],
        "torsion" => vec![
            torsion_tables_match(),
            torsion_identity(p_max.unwrap_or(60)),
            milnor_defining_identity(m(50)),
            milnor_matches_torsion(m(50)),
            lemma_ab_identities(30, m(60)),
        ],
        "froyshov-tables" => vec![froyshov_tables()],
        "elkies" => vec![
            elkies_closed_forms(m(50)),
            even_form_shortcut(),
            theta_stability(),
            det_and_cf_roundtrip(p_max.unwrap_or(200)),
        ],
        "all" => {
            let mut checks = Vec::new();
            for sub in ["dedekind", "groupring", "cw", "torsion", "froyshov-tables", "elkies"] {
                checks.extend(run_suite(sub, p_max)?.checks);
            }
            checks.push(conjecture_proved_cases());
            checks
        }
        _ => return None,
    };
    Some(SuiteReport { suite: name.to_string(), checks })
}
