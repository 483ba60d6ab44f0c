//! Deterministic property suites.
//!
//! Each suite checks one block of structural facts with a seeded
//! sampler, and returns one line per check. The CLI `verify` subcommand
//! and the acceptance test target both run these functions; the
//! defaults pin every tolerance stated for the artifact.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::gaussian::{omega_reps, reduce_mod, GaussianInt};
use crate::hecke::{alpha_matrix, hecke_decompose, is_left_equivalent, xi_classify, HeckeFactors};
use crate::hyperbolic::{
    flt_apply, hyperbolic_distance, in_f, in_f1, in_f1_brute_force, in_picard, induced_action,
    reduce_gamma, reduce_picard, H3Point,
};
use crate::matrix::Mat2;
use crate::orthogonal::{
    closure_check, conj3, conj3_closed_form, coset_reps, gamma_membership, is_so3_gaussian,
    is_xi12, rotation_r, t_one_minus_i,
};
use crate::realform::{
    conj_eta, gamma_int_membership, gamma_inv_r, in_fr, reduce_gamma_int, relation_check,
    rho_is_valid, t_two, w_rep, RealCoset,
};
use crate::rng::SplitMix64;
use crate::sample::{inversion_s, random_gamma_element, random_sl2_zi, translation};

/// One pass/fail line of a suite run.
#[derive(Debug, Clone, serde::Serialize)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl CheckResult {
    fn new(name: &str, passed: bool, detail: String) -> Self {
        CheckResult {
            name: name.to_string(),
            passed,
            detail,
        }
    }
}

/// Common options for a suite run.
#[derive(Debug, Clone, Copy)]
pub struct SuiteOptions {
    pub samples: usize,
    pub seed: u64,
    pub eps: f64,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions {
            samples: 500,
            seed: 7,
            eps: crate::DEFAULT_EPS,
        }
    }
}

pub const SUITE_NAMES: &[&str] = &[
    "conj3", "cosets", "residues", "hecke", "picard", "gamma", "f1", "realform", "relation",
    "torsion",
];

/// Run a named suite ("all" runs every suite in order).
pub fn run_suite(name: &str, opts: SuiteOptions) -> Result<Vec<CheckResult>> {
    match name {
        "conj3" => Ok(suite_conj3(opts)),
        "cosets" => Ok(suite_cosets(opts)),
        "residues" => Ok(suite_residues()),
        "hecke" => Ok(suite_hecke(opts)),
        "picard" => Ok(suite_picard(opts)),
        "gamma" => Ok(suite_gamma(opts)),
        "f1" => Ok(suite_f1(opts)),
        "realform" => Ok(suite_realform(opts)),
        "relation" => Ok(suite_relation(opts)),
        "torsion" => Ok(suite_torsion()),
        "all" => {
            let mut out = Vec::new();
            for suite in SUITE_NAMES {
                out.extend(run_suite(suite, opts)?);
            }
            Ok(out)
        }
        other => Err(Error::Parse(format!("unknown verify suite '{other}'"))),
    }
}

/// conj3 is an exact homomorphism with orthogonal image; the printed
/// positive sign at entry (3,2) would break orthogonality.
pub fn suite_conj3(opts: SuiteOptions) -> Vec<CheckResult> {
    let mut rng = SplitMix64::new(opts.seed);
    let pairs = opts.samples.clamp(1, 200);
    let mut hom_ok = true;
    let mut orth_ok = true;
    let mut closed_ok = true;
    for _ in 0..pairs {
        let x = random_sl2_zi(&mut rng, 8);
        let y = random_sl2_zi(&mut rng, 8);
        let cx = conj3(&x).expect("det 1");
        let cy = conj3(&y).expect("det 1");
        hom_ok &= conj3(&x.mul(&y)).expect("det 1") == cx.mul(&cy);
        orth_ok &= cx.is_special_orthogonal() && cy.is_special_orthogonal();
        closed_ok &= conj3_closed_form(&x).expect("det 1") == cx;
    }
    let wrong_sign_fails = {
        // Rebuild the image of T_{1+i} with the +i(ac+bd) sign at (3,2);
        // exact orthogonality must fail.
        let g = crate::orthogonal::t_one_plus_i();
        let mut m = conj3_closed_form(&g).expect("det 1");
        m.rows[2][1] = m.rows[2][1].neg();
        !m.is_special_orthogonal()
    };
    vec![
        CheckResult::new("conj3/homomorphism", hom_ok, format!("{pairs} exact pairs")),
        CheckResult::new(
            "conj3/orthogonality",
            orth_ok,
            format!("{pairs} samples, MtM = I, det = 1"),
        ),
        CheckResult::new(
            "conj3/closed-form-agrees",
            closed_ok,
            format!("{pairs} samples"),
        ),
        CheckResult::new(
            "conj3/printed-sign-fails",
            wrong_sign_fails,
            "entry (3,2) with +i(ac+bd) breaks MtM = I on T_{1+i}".into(),
        ),
    ]
}

/// The six-coset structure of the preimage of SO3(Z[i]).
pub fn suite_cosets(opts: SuiteOptions) -> Vec<CheckResult> {
    let reps = coset_reps();
    let reps_integral = reps
        .iter()
        .all(|(_, rep)| rep.is_sl2() && is_so3_gaussian(&conj3(rep).expect("det 1")));
    let mut pairwise = true;
    for (i, (_, r1)) in reps.iter().enumerate() {
        for (j, (_, r2)) in reps.iter().enumerate() {
            let h = r1.mul(&r2.inverse_unimodular().expect("det 1"));
            pairwise &= is_xi12(&h) == (i == j);
        }
    }
    let report = closure_check(opts.samples, opts.seed);
    let closure_ok = report.failures.is_empty();
    let diag_closed = report
        .family_counts
        .iter()
        .all(|((fx, fy, fp), _)| !(fx == "Diagonal" && fy == "Diagonal") || fp == "Diagonal");
    let inv_inv_hits_both = {
        let to = |fam: &str| {
            report
                .family_counts
                .iter()
                .filter(|((fx, fy, fp), _)| fx == "Inversion" && fy == "Inversion" && fp == fam)
                .map(|(_, c)| c)
                .sum::<usize>()
        };
        to("Diagonal") > 0 && to("Inversion") > 0
    };
    let mut rng = SplitMix64::new(opts.seed ^ 0x5eed);
    let mut label_unique = true;
    for _ in 0..opts.samples.min(200) {
        let g = random_gamma_element(&mut rng, 6);
        let matches = reps
            .iter()
            .filter(|(_, rep)| is_xi12(&g.mul(&rep.inverse_unimodular().expect("det 1"))))
            .count();
        label_unique &= matches == 1;
    }
    vec![
        CheckResult::new(
            "cosets/reps-integral",
            reps_integral,
            "all 6 reps map into SO3(Z[i])".into(),
        ),
        CheckResult::new(
            "cosets/pairwise-distinct",
            pairwise,
            "rep_i rep_j^-1 in Xi12 iff i = j".into(),
        ),
        CheckResult::new(
            "cosets/closure",
            closure_ok,
            format!(
                "{} random pairs, {} failures",
                report.pairs,
                report.failures.len()
            ),
        ),
        CheckResult::new(
            "cosets/diagonal-family-closed",
            diag_closed,
            "diag x diag stays diagonal".into(),
        ),
        CheckResult::new(
            "cosets/inversion-products-split",
            inv_inv_hits_both,
            "inversion x inversion realizes both families".into(),
        ),
        CheckResult::new(
            "cosets/label-unique",
            label_unique,
            "members match exactly one rep".into(),
        ),
    ]
}

/// Residue systems for the ramified powers (1+i)^n, n = 1..12.
pub fn suite_residues() -> Vec<CheckResult> {
    let mut formula_ok = true;
    let mut count_ok = true;
    let mut box_ok = true;
    let mut power = GaussianInt::one();
    for n in 1..=12u32 {
        power = power.mul(&GaussianInt::one_plus_i());
        let y = power.standard_associate().expect("nonzero").1;
        let reps = omega_reps(&y).expect("nonzero").reps;
        count_ok &= reps.len() as u64 == 1 << n;
        let r_bound = 1i64 << n.div_ceil(2);
        let s_bound = 1i64 << (n - n.div_ceil(2));
        let expected: Vec<GaussianInt> = (0..s_bound)
            .flat_map(|s| (0..r_bound).map(move |r| GaussianInt::new(r, s)))
            .collect();
        formula_ok &= reps == expected;
        // Pairwise incongruence: reduce_mod is a class function, so the
        // representatives being its fixed points puts them in distinct
        // classes. Completeness: an exhaustive coefficient box scan
        // reduces into the system.
        let rep_set: std::collections::HashSet<GaussianInt> = reps.iter().cloned().collect();
        for rep in &reps {
            box_ok &= reduce_mod(rep, &y).expect("nonzero") == *rep;
        }
        let scan = r_bound.max(s_bound);
        for re in -scan..=scan {
            for im in -scan..=scan {
                let w = GaussianInt::new(re, im);
                let r = reduce_mod(&w, &y).expect("nonzero");
                box_ok &= rep_set.contains(&r) && y.divides(&w.sub(&r));
            }
        }
    }
    vec![
        CheckResult::new(
            "residues/dyadic-formula",
            formula_ok,
            "Hermite box equals the dyadic box for n = 1..12".into(),
        ),
        CheckResult::new("residues/count", count_ok, "|Omega| = 2^n".into()),
        CheckResult::new(
            "residues/reduction-lands-in-box",
            box_ok,
            "exhaustive coefficient scans".into(),
        ),
    ]
}

/// Exhaustive Hecke decomposition scan: entries of norm <= 2, det != 0.
pub fn suite_hecke(opts: SuiteOptions) -> Vec<CheckResult> {
    let values: Vec<GaussianInt> = {
        let mut v = Vec::new();
        for re in -1i64..=1 {
            for im in -1i64..=1 {
                v.push(GaussianInt::new(re, im));
            }
        }
        v
    };
    let mut mats: Vec<(Mat2, GaussianInt, HeckeFactors)> = Vec::new();
    for a in &values {
        for b in &values {
            for c in &values {
                for d in &values {
                    let det = a.mul(d).sub(&b.mul(c));
                    if det.is_zero() {
                        continue;
                    }
                    let m = Mat2::from_gaussian_entries(a.clone(), b.clone(), c.clone(), d.clone());
                    let f = hecke_decompose(&m).expect("nonzero det");
                    mats.push((m, det, f));
                }
            }
        }
    }
    let mut round_trip = true;
    for (m, n, f) in &mats {
        let alpha = alpha_matrix(n, &f.m, &f.x).expect("valid label");
        round_trip &= f.gamma.mul(&alpha) == *m && f.gamma.is_sl2() && f.gamma.is_gaussian();
    }
    // Orbit labels agree exactly when the matrices are left-equivalent.
    let mut agreement = true;
    let mut by_det: std::collections::BTreeMap<String, Vec<&(Mat2, GaussianInt, HeckeFactors)>> =
        std::collections::BTreeMap::new();
    for item in &mats {
        by_det.entry(item.1.to_string()).or_default().push(item);
    }
    for group in by_det.values() {
        for (i, (m1, _, f1)) in group.iter().enumerate() {
            for (m2, _, f2) in group.iter().skip(i + 1) {
                let same_label = f1.m == f2.m && f1.x == f2.x;
                let equivalent = is_left_equivalent(m1, m2).expect("nonzero det");
                if same_label != equivalent {
                    agreement = false;
                }
            }
        }
    }
    // Xi12 left-orbit refinement: the Xi class of the gamma factor is a
    // left Xi12 invariant within one SL2 orbit.
    let mut rng = SplitMix64::new(opts.seed);
    let mut refinement = true;
    for _ in 0..opts.samples.min(300) {
        let idx = rng.index(mats.len());
        let (m, _, f) = &mats[idx];
        let xi = crate::sample::random_xi12(&mut rng, 6);
        let shifted = hecke_decompose(&xi.mul(m)).expect("same det");
        refinement &= shifted.m == f.m && shifted.x == f.x;
        refinement &= xi_classify(&shifted.gamma).expect("unimodular")
            == xi_classify(&f.gamma).expect("unimodular");
    }
    vec![
        CheckResult::new(
            "hecke/round-trip",
            round_trip,
            format!(
                "{} matrices with entry norm <= 2 recompose exactly",
                mats.len()
            ),
        ),
        CheckResult::new(
            "hecke/label-iff-equivalent",
            agreement,
            "orbit labels match SL2(Z[i]) left-equivalence".into(),
        ),
        CheckResult::new(
            "hecke/xi12-refinement",
            refinement,
            "labels and Xi class of gamma are left-Xi12 invariants".into(),
        ),
    ]
}

fn random_h3(rng: &mut SplitMix64) -> H3Point {
    H3Point::new(
        rng.range_f64(-4.0, 4.0),
        rng.range_f64(-4.0, 4.0),
        rng.range_f64(0.05, 3.0),
    )
}

fn distance_to_picard_boundary(z: &H3Point) -> f64 {
    let norm2 = z.x1 * z.x1 + z.x2 * z.x2 + z.y * z.y;
    [0.5 - z.x1.abs(), z.x2, 0.5 - z.x2, (norm2 - 1.0).abs()]
        .into_iter()
        .fold(f64::INFINITY, f64::min)
}

fn distance_to_f_boundary(z: &H3Point) -> f64 {
    let r2 = (z.x() - Complex64::new(1.0, 0.0)).norm_sqr() + z.y * z.y;
    [z.x1 - 1.0, z.x2, 2.0 - z.x1 - z.x2, (r2 - 2.0).abs()]
        .into_iter()
        .fold(f64::INFINITY, f64::min)
}

/// Picard tiling: reduction lands in the domain with an exact SL2(Z[i])
/// witness, and the reduced point is a class invariant away from the
/// boundary.
pub fn suite_picard(opts: SuiteOptions) -> Vec<CheckResult> {
    let mut rng = SplitMix64::new(opts.seed);
    let mut in_domain = true;
    let mut witness_ok = true;
    let mut invariant = true;
    let mut compared = 0usize;
    for _ in 0..opts.samples {
        let z = random_h3(&mut rng);
        let r = reduce_picard(&z, opts.eps).expect("y > 0");
        in_domain &= in_picard(&r.point, opts.eps);
        witness_ok &= r.gamma.is_gaussian() && r.gamma.is_sl2();
        witness_ok &= hyperbolic_distance(&flt_apply(&r.gamma, &z), &r.point) < 1e-9;
        let moved = flt_apply(&random_sl2_zi(&mut rng, 8), &z);
        let r2 = reduce_picard(&moved, opts.eps).expect("y > 0");
        in_domain &= in_picard(&r2.point, opts.eps);
        if distance_to_picard_boundary(&r.point) > 1e-6
            && distance_to_picard_boundary(&r2.point) > 1e-6
        {
            compared += 1;
            invariant &= hyperbolic_distance(&r.point, &r2.point) < 1e-6;
        }
    }
    vec![
        CheckResult::new(
            "picard/in-domain",
            in_domain,
            format!("{} random points", opts.samples),
        ),
        CheckResult::new(
            "picard/witness-exact",
            witness_ok,
            "replay error < 1e-9".into(),
        ),
        CheckResult::new(
            "picard/orbit-invariance",
            invariant,
            format!("{compared} interior comparisons"),
        ),
    ]
}

/// Ford-domain tiling for the preimage of SO3(Z[i]).
pub fn suite_gamma(opts: SuiteOptions) -> Vec<CheckResult> {
    let mut rng = SplitMix64::new(opts.seed);
    let mut in_domain = true;
    let mut witness_ok = true;
    let mut member_ok = true;
    let mut iter_ok = true;
    let mut invariant = true;
    let mut monotone = true;
    let mut compared = 0usize;
    for _ in 0..opts.samples {
        let z = random_h3(&mut rng);
        let r = reduce_gamma(&z, opts.eps).expect("y > 0");
        in_domain &= in_f(&r.point, opts.eps);
        member_ok &= gamma_membership(&r.gamma).expect("det 1").is_some();
        witness_ok &= hyperbolic_distance(&flt_apply(&r.gamma, &z), &r.point) < 1e-9;
        iter_ok &= r.iterations <= 100;
        // phi1 = -log y never increases under reduction.
        monotone &= r.point.y >= z.y * (1.0 - 1e-9);
        let gamma = random_gamma_element(&mut rng, 8);
        let moved = flt_apply(&gamma, &z);
        let r2 = reduce_gamma(&moved, opts.eps).expect("y > 0");
        in_domain &= in_f(&r2.point, opts.eps);
        if distance_to_f_boundary(&r.point) > 1e-6 && distance_to_f_boundary(&r2.point) > 1e-6 {
            compared += 1;
            invariant &= hyperbolic_distance(&r.point, &r2.point) < 1e-6;
        }
    }
    vec![
        CheckResult::new(
            "gamma/in-domain",
            in_domain,
            format!("{} random points", opts.samples),
        ),
        CheckResult::new(
            "gamma/witness-exact",
            witness_ok,
            "replay error < 1e-9".into(),
        ),
        CheckResult::new(
            "gamma/witness-membership",
            member_ok,
            "witnesses pass gamma_membership".into(),
        ),
        CheckResult::new("gamma/iterations", iter_ok, "iteration count <= 100".into()),
        CheckResult::new(
            "gamma/height-monotone",
            monotone,
            "reduced height is maximal".into(),
        ),
        CheckResult::new(
            "gamma/orbit-invariance",
            invariant,
            format!("{compared} interior comparisons"),
        ),
    ]
}

/// The nearest-center shortcut for F1 equals the full quantifier.
pub fn suite_f1(opts: SuiteOptions) -> Vec<CheckResult> {
    let mut rng = SplitMix64::new(opts.seed);
    let mut agree = true;
    for _ in 0..opts.samples {
        let z = random_h3(&mut rng);
        agree &= in_f1(&z, opts.eps) == in_f1_brute_force(&z, 5.0, opts.eps);
    }
    vec![CheckResult::new(
        "f1/shortcut-equals-quantifier",
        agree,
        format!(
            "{} points against all centers within radius 5",
            opts.samples
        ),
    )]
}

/// Real-form membership, integrality, the index-2 coset, and the H^2
/// tiling.
pub fn suite_realform(opts: SuiteOptions) -> Vec<CheckResult> {
    let mut rng = SplitMix64::new(opts.seed);
    let gens = [
        inversion_s(),
        w_rep(),
        t_two(),
        gamma_inv_r(),
        translation(GaussianInt::one()),
    ];
    let mut equivalence = true;
    let mut embeds = true;
    for _ in 0..opts.samples.min(200) {
        let mut acc = Mat2::identity();
        for _ in 0..(rng.index(6) + 1) {
            acc = acc.mul(&gens[rng.index(gens.len())]);
        }
        let member = gamma_int_membership(&acc).expect("real det 1");
        let integral = conj_eta(&acc).expect("real det 1").is_rational_integral();
        equivalence &= member.is_some() == integral;
        if member.is_some() {
            embeds &= gamma_membership(&acc).expect("det 1").is_some();
        }
    }
    let w = w_rep();
    let index_two = gamma_int_membership(&w).expect("real det 1") == Some(RealCoset::W)
        && !w.is_gaussian()
        && w.mul(&w) == inversion_s()
        && conj_eta(&w).expect("real det 1").is_rational_integral();
    let mut reps_ok = true;
    for rep in [Mat2::identity(), w.clone()] {
        reps_ok &= conj_eta(&rep).expect("real det 1").is_rational_integral();
    }
    let mut pseudos = true;
    for _ in 0..50 {
        let mut acc = Mat2::identity();
        for _ in 0..(rng.index(5) + 1) {
            acc = acc.mul(&gens[rng.index(gens.len())]);
        }
        let m = conj_eta(&acc).expect("real det 1");
        pseudos &= m.is_special_pseudo_orthogonal();
    }
    // Tiling of H^2.
    let mut tiling = true;
    let mut compared = 0usize;
    let member_gens = [inversion_s(), w.clone(), t_two(), gamma_inv_r()];
    for _ in 0..opts.samples {
        let z = crate::hyperbolic::H2Point::new(rng.range_f64(-4.0, 4.0), rng.range_f64(0.05, 3.0));
        let r = reduce_gamma_int(&z, opts.eps).expect("y > 0");
        tiling &= in_fr(&r.point, opts.eps);
        let mut acc = Mat2::identity();
        for _ in 0..(rng.index(8) + 1) {
            acc = acc.mul(&member_gens[rng.index(member_gens.len())]);
        }
        let moved = crate::hyperbolic::flt_apply_h2(&acc, &z);
        let r2 = reduce_gamma_int(&moved, opts.eps).expect("y > 0");
        tiling &= in_fr(&r2.point, opts.eps);
        let boundary = |p: &crate::hyperbolic::H2Point| {
            [
                (p.x).abs(),
                (2.0 - p.x).abs(),
                ((p.x - 1.0) * (p.x - 1.0) + p.y * p.y - 2.0).abs(),
            ]
            .into_iter()
            .fold(f64::INFINITY, f64::min)
        };
        if boundary(&r.point) > 1e-6 && boundary(&r2.point) > 1e-6 {
            compared += 1;
            tiling &=
                (r.point.x - r2.point.x).abs() < 1e-6 && (r.point.y - r2.point.y).abs() < 1e-6;
        }
    }
    vec![
        CheckResult::new(
            "realform/membership-iff-integral",
            equivalence,
            "gamma_int_membership matches conj_eta integrality".into(),
        ),
        CheckResult::new(
            "realform/members-embed",
            embeds,
            "members also pass gamma_membership".into(),
        ),
        CheckResult::new(
            "realform/index-two",
            index_two,
            "w is the non-identity coset, w^2 = S".into(),
        ),
        CheckResult::new(
            "realform/reps-integral",
            reps_ok,
            "both coset reps map to integer matrices".into(),
        ),
        CheckResult::new(
            "realform/signature",
            pseudos,
            "MtJM = J, det = 1 exactly".into(),
        ),
        CheckResult::new(
            "realform/tiling",
            tiling,
            format!("{compared} interior comparisons on H^2"),
        ),
    ]
}

/// The relation between the real and complex fundamental domains.
pub fn suite_relation(opts: SuiteOptions) -> Vec<CheckResult> {
    let rho_ok = rho_is_valid();
    let report = relation_check(opts.samples, opts.eps, opts.seed);
    vec![
        CheckResult::new(
            "relation/rho-valid",
            rho_ok,
            "rho = T_1 R^2 T_1^-1 is a member".into(),
        ),
        CheckResult::new(
            "relation/domains",
            report.violations.is_empty(),
            format!(
                "{} + {} interior points, {} violations",
                report.checked_fr_to_union,
                report.checked_union_to_fr,
                report.violations.len()
            ),
        ),
    ]
}

/// Exact torsion facts: the quarter-turn about 1 has order four modulo
/// translations and fixes 1.
pub fn suite_torsion() -> Vec<CheckResult> {
    let m = t_one_minus_i().mul(&rotation_r());
    let order4 = m.pow(4) == Mat2::identity().neg() && m.pow(8) == Mat2::identity();
    let mut distinct = true;
    for k in 1..4u32 {
        let p = m.pow(k);
        for candidate in [p.clone(), p.neg()] {
            let unipotent = candidate.c.is_zero()
                && candidate.a.is_one()
                && candidate.d.is_one()
                && candidate
                    .b
                    .as_gaussian()
                    .is_some_and(|w| GaussianInt::one_plus_i().divides(w));
            if unipotent {
                distinct = false;
            }
        }
    }
    let fixes_one = {
        let image = induced_action(&m, (1.0, 0.0)).expect("phi1 stabilizer");
        (image.0 - 1.0).abs() < 1e-12 && image.1.abs() < 1e-12
    };
    let rotation = {
        let image = induced_action(&m, (2.0, 0.0)).expect("phi1 stabilizer");
        (image.0 - 1.0).abs() < 1e-12 && (image.1 - 1.0).abs() < 1e-12
    };
    vec![
        CheckResult::new(
            "torsion/order-four",
            order4,
            "(T_{1-i} R)^4 = -I exactly".into(),
        ),
        CheckResult::new(
            "torsion/distinct-mod-translations",
            distinct,
            "powers 1..3 are not unipotent translations".into(),
        ),
        CheckResult::new(
            "torsion/fixes-one",
            fixes_one,
            "z -> iz + 1 - i fixes 1".into(),
        ),
        CheckResult::new("torsion/quarter-turn", rotation, "2 maps to 1 + i".into()),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_suites_pass_with_small_samples() {
        let opts = SuiteOptions {
            samples: 60,
            seed: 7,
            eps: crate::DEFAULT_EPS,
        };
        let results = run_suite("all", opts).unwrap();
        for r in &results {
            assert!(r.passed, "{}: {}", r.name, r.detail);
        }
        assert!(results.len() >= 20);
    }

    #[test]
    fn unknown_suite_is_rejected() {
        assert!(run_suite("nonsense", SuiteOptions::default()).is_err());
    }
}
