//! The split real form: conj_eta: SL(2,R) -> SO(2,1), exact membership
//! in SO(2,1)_Z, the Ford domain on the upper half-plane, and the
//! geometric relation to the complex domain.
//!
//! The basis eta = {[[0,1],[1,0]], [[0,1],[-1,0]], [[1,0],[0,-1]]} spans
//! a real form of sl2 on which the half-trace form has Gram matrix
//! J = diag(1,-1,1). Conjugation by a real det-1 matrix read off in eta
//! lands in SO(J) = SO(2,1), and the integral points pull back to
//! (Xi12 intersect SL2(Z)) together with one extra coset represented by
//! (1/sqrt2) [[1,-1],[1,1]].
//!
//! On the upper half-plane the corresponding Ford domain is
//! F_R = {0 <= x <= 2, (x-1)^2 + y^2 >= 2}. Embedding H^2 into H^3 as
//! the vertical plane over the real axis, F_R equals the trace of
//! F(G) union rho F(G), where rho = T_1 R^2 T_1^{-1} rotates by pi
//! about 1.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::gaussian::{CycloNum, GaussianInt};
use crate::hecke::{xi_classify, XiClass};
use crate::hyperbolic::{
    flt_apply, flt_apply_h2, in_f, H2Point, H3Point, ReductionResult, WordLetter,
};
use crate::matrix::{Mat2, Mat3};
use crate::orthogonal;
use crate::rng::SplitMix64;
use crate::sample::translation;
use crate::MAX_REDUCTION_ITERATIONS;

/// Basis vector eta1 = X1.
fn basis_eta1() -> Mat2 {
    Mat2::from_ints(0, 1, 1, 0)
}

/// Basis vector eta2 = -i X2 = [[0,1],[-1,0]].
fn basis_eta2() -> Mat2 {
    Mat2::from_ints(0, 1, -1, 0)
}

/// Basis vector eta3 = Y.
fn basis_eta3() -> Mat2 {
    Mat2::from_ints(1, 0, 0, -1)
}

/// The image of a real det-1 matrix under conjugation in the basis eta.
/// The output satisfies M^t J M = J and det M = 1 exactly.
pub fn conj_eta(g: &Mat2) -> Result<Mat3> {
    if !g.is_sl2() {
        return Err(Error::NotUnimodular(g.det().to_string()));
    }
    for e in g.entries() {
        if !e.is_real() {
            return Err(Error::NonRealEntry(e.to_string()));
        }
    }
    let g_inv = g.inverse_unimodular()?;
    let mut out = Mat3::identity();
    for (col, basis) in [basis_eta1(), basis_eta2(), basis_eta3()]
        .into_iter()
        .enumerate()
    {
        let image = g.mul(&basis).mul(&g_inv);
        debug_assert!(image.a.add(&image.d).is_zero());
        // x eta1 + w eta2 + y eta3 = [[y, x+w], [x-w, -y]].
        let x = image.b.add(&image.c).div_2();
        let w = image.b.sub(&image.c).div_2();
        let y = image.a.clone();
        out.rows[0][col] = x;
        out.rows[1][col] = w;
        out.rows[2][col] = y;
    }
    Ok(out)
}

/// Right-coset tag of the integral real form: the identity coset
/// (Xi12 intersect SL2(Z)) or the W coset.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RealCoset {
    Identity,
    W,
}

impl std::fmt::Display for RealCoset {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            RealCoset::Identity => write!(f, "Identity"),
            RealCoset::W => write!(f, "W"),
        }
    }
}

impl Serialize for RealCoset {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// The coset representative w = (1/sqrt2) [[1,-1],[1,1]]; w^2 = S.
pub fn w_rep() -> Mat2 {
    Mat2::from_ints(1, -1, 1, 1).scale(&CycloNum::inv_sqrt2())
}

/// The upper-triangular factor (1/sqrt2) [[1,-1],[0,2]] of the W coset:
/// membership tests divide by it and classify the quotient.
fn w_column_factor() -> Mat2 {
    Mat2::from_ints(1, -1, 0, 2).scale(&CycloNum::inv_sqrt2())
}

/// Translation by 2, the generator of the phi1 stabilizer.
pub fn t_two() -> Mat2 {
    translation(GaussianInt::new(2, 0))
}

/// The inversion step of the real reduction:
/// (1/sqrt2) [[-1,-1],[1,-1]], with isometric circle centered at 1 of
/// radius sqrt2.
pub fn gamma_inv_r() -> Mat2 {
    Mat2::from_ints(-1, -1, 1, -1).scale(&CycloNum::inv_sqrt2())
}

/// rho = T_1 R^2 T_1^{-1} = [[i, -2i], [0, -i]]; acts on the boundary
/// as z -> 2 - z, rotation by pi about 1.
pub fn rho() -> Mat2 {
    Mat2::from_gaussian_entries(
        GaussianInt::i(),
        GaussianInt::new(0, -2),
        GaussianInt::zero(),
        GaussianInt::i().neg(),
    )
}

fn is_rational_sl2(g: &Mat2) -> bool {
    use num_traits::Zero;
    g.is_sl2()
        && g.entries()
            .iter()
            .all(|e| e.as_gaussian().is_some_and(|z| z.im.is_zero()))
}

/// Membership of a real det-1 matrix in the preimage of SO(2,1)_Z:
/// either an SL2(Z) element reducing to I or S mod 2 patterns (the
/// Xi12 condition), or an element of the W coset. Cross-checked by
/// exact integrality of conj_eta in the test suites.
pub fn gamma_int_membership(g: &Mat2) -> Result<Option<RealCoset>> {
    if !g.is_sl2() {
        return Err(Error::NotUnimodular(g.det().to_string()));
    }
    for e in g.entries() {
        if !e.is_real() {
            return Err(Error::NonRealEntry(e.to_string()));
        }
    }
    if is_rational_sl2(g) && xi_classify(g)? == XiClass::Xi12 {
        return Ok(Some(RealCoset::Identity));
    }
    let h = g.mul(&w_column_factor().inverse_unimodular()?);
    if is_rational_sl2(&h) && xi_classify(&h)? == XiClass::Xi2 {
        return Ok(Some(RealCoset::W));
    }
    Ok(None)
}

/// Membership in F_R = {0 <= x <= 2, (x-1)^2 + y^2 >= 2} with eps slack.
pub fn in_fr(z: &H2Point, eps: f64) -> bool {
    z.x >= -eps && z.x <= 2.0 + eps && (z.x - 1.0) * (z.x - 1.0) + z.y * z.y >= 2.0 - eps
}

/// Reduce a point of the upper half-plane into F_R, returning an exact
/// witness in the preimage of SO(2,1)_Z.
pub fn reduce_gamma_int(z: &H2Point, eps: f64) -> Result<ReductionResult<H2Point>> {
    if !z.y.is_finite() || z.y <= 0.0 {
        return Err(Error::NonPositiveHeight);
    }
    let inv = gamma_inv_r();
    let mut witness = Mat2::identity();
    let mut word: Vec<WordLetter> = Vec::new();
    let mut cur = *z;
    let mut iterations = 0usize;
    loop {
        iterations += 1;
        if iterations > MAX_REDUCTION_ITERATIONS {
            return Err(Error::NonConvergence(MAX_REDUCTION_ITERATIONS));
        }
        // Center x into [0, 2] by translations of 2Z; on a tie prefer
        // the smaller translation amount.
        let half = (cur.x - 1.0) / 2.0;
        let mut n = half.floor();
        let hi_dist = (half - n - 1.0).abs();
        let lo_dist = (half - n).abs();
        if hi_dist < lo_dist - 1e-12 || (hi_dist - lo_dist).abs() <= 1e-12 {
            n += 1.0;
        }
        if n != 0.0 {
            let t = translation(GaussianInt::new(-2 * n as i64, 0));
            witness = t.mul(&witness);
            cur = flt_apply_h2(&t, &cur);
            word.push(WordLetter {
                generator: "T_2".into(),
                exponent: -n as i64,
            });
        }
        if (cur.x - 1.0) * (cur.x - 1.0) + cur.y * cur.y < 2.0 - eps {
            witness = inv.mul(&witness);
            cur = flt_apply_h2(&inv, &cur);
            word.push(WordLetter {
                generator: "gamma_inv_R".into(),
                exponent: 1,
            });
        } else {
            break;
        }
    }
    if witness.a.to_complex().re < -1e-12 {
        witness = witness.neg();
        word.push(WordLetter {
            generator: "-I".into(),
            exponent: 1,
        });
    }

    debug_assert!(in_fr(&cur, eps.max(1e-12)));
    debug_assert!(gamma_int_membership(&witness)?.is_some());
    Ok(ReductionResult {
        gamma: witness,
        point: cur,
        word,
        iterations,
    })
}

/// Embed the upper half-plane into the half-space as the vertical plane
/// over the real axis.
pub fn embed_h2(z: &H2Point) -> H3Point {
    H3Point {
        x1: z.x,
        x2: 0.0,
        y: z.y,
    }
}

/// Report of the domain-relation check F_R = (F union rho F) cap H^2.
#[derive(Debug, Clone, Serialize)]
pub struct RelationReport {
    pub samples_per_direction: usize,
    pub checked_fr_to_union: usize,
    pub checked_union_to_fr: usize,
    pub violations: Vec<String>,
}

/// Sample the relation in both directions: points of F_R embed into
/// F(G) union rho F(G), and plane points of that union satisfy the F_R
/// inequalities. Points within 1e-6 of the relevant domain boundaries
/// are skipped, matching the boundary-identification caveat.
pub fn relation_check(samples: usize, eps: f64, seed: u64) -> RelationReport {
    let mut rng = SplitMix64::new(seed);
    let rho_mat = rho();
    let mut violations = Vec::new();
    let band = 1e-6;

    let mut checked_fr = 0usize;
    let mut produced = 0usize;
    while produced < samples {
        let z = H2Point::new(rng.range_f64(-0.5, 2.5), rng.range_f64(0.05, 4.0));
        produced += 1;
        if !in_fr(&z, 0.0) {
            continue;
        }
        // Stay away from the three boundary walls of F_R.
        let circle = ((z.x - 1.0) * (z.x - 1.0) + z.y * z.y - 2.0).abs();
        if z.x < band || (2.0 - z.x) < band || circle < band {
            continue;
        }
        checked_fr += 1;
        let emb = embed_h2(&z);
        let in_union = in_f(&emb, eps) || in_f(&flt_apply(&rho_mat, &emb), eps);
        if !in_union {
            violations.push(format!("F_R point ({}, {}) not in F union rho F", z.x, z.y));
        }
    }

    let mut checked_union = 0usize;
    produced = 0;
    while produced < samples {
        let z = H3Point::new(rng.range_f64(-0.5, 2.5), 0.0, rng.range_f64(0.05, 4.0));
        produced += 1;
        let member = in_f(&z, eps) || in_f(&flt_apply(&rho_mat, &z), eps);
        if !member {
            continue;
        }
        let circle = ((z.x1 - 1.0) * (z.x1 - 1.0) + z.y * z.y - 2.0).abs();
        if z.x1 < band || (2.0 - z.x1) < band || circle < band {
            continue;
        }
        checked_union += 1;
        if !in_fr(&H2Point::new(z.x1, z.y), eps) {
            violations.push(format!("union point ({}, {}) not in F_R", z.x1, z.y));
        }
    }

    RelationReport {
        samples_per_direction: samples,
        checked_fr_to_union: checked_fr,
        checked_union_to_fr: checked_union,
        violations,
    }
}

/// Exact sanity facts about rho used by the relation: rho is a member
/// of the preimage of SO3(Z[i]) and equals T_1 R^2 T_1^{-1}.
pub fn rho_is_valid() -> bool {
    let t1 = translation(GaussianInt::one());
    let r2 = orthogonal::rotation_r().pow(2);
    let composed = t1.mul(&r2).mul(&t1.inverse_unimodular().expect("det 1"));
    composed == rho()
        && orthogonal::gamma_membership(&rho())
            .map(|m| m.is_some())
            .unwrap_or(false)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sample::inversion_s;

    fn mat_i(a: i64, b: i64, c: i64, d: i64) -> Mat2 {
        Mat2::from_ints(a, b, c, d)
    }

    fn mat3_from_ints(entries: [i64; 9]) -> Mat3 {
        let mut out = Mat3::identity();
        for (idx, v) in entries.into_iter().enumerate() {
            out.rows[idx / 3][idx % 3] = CycloNum::from_int(v);
        }
        out
    }

    #[test]
    fn conj_eta_identity() {
        assert_eq!(conj_eta(&Mat2::identity()).unwrap(), Mat3::identity());
    }

    #[test]
    fn conj_eta_of_translation_by_two() {
        let m = conj_eta(&mat_i(1, 2, 0, 1)).unwrap();
        assert_eq!(m, mat3_from_ints([-1, 2, -2, -2, 3, -2, 2, -2, 1]));
        assert!(m.is_special_pseudo_orthogonal());
        assert!(m.is_rational_integral());
    }

    #[test]
    fn conj_eta_of_w_rep() {
        let m = conj_eta(&w_rep()).unwrap();
        assert_eq!(m, mat3_from_ints([0, 0, 1, 0, 1, 0, -1, 0, 0]));
        assert!(m.is_special_pseudo_orthogonal());
    }

    #[test]
    fn conj_eta_rejects_non_real() {
        let g = translation(GaussianInt::i());
        assert!(matches!(conj_eta(&g), Err(Error::NonRealEntry(_))));
    }

    #[test]
    fn conj_eta_is_homomorphic_with_central_kernel() {
        let gens = [
            inversion_s(),
            w_rep(),
            t_two(),
            gamma_inv_r(),
            mat_i(1, 1, 0, 1),
        ];
        let mut rng = SplitMix64::new(19);
        let sample = |rng: &mut SplitMix64| {
            let mut acc = Mat2::identity();
            for _ in 0..(rng.index(5) + 1) {
                acc = acc.mul(&gens[rng.index(gens.len())]);
            }
            acc
        };
        for _ in 0..100 {
            let x = sample(&mut rng);
            let y = sample(&mut rng);
            assert_eq!(
                conj_eta(&x.mul(&y)).unwrap(),
                conj_eta(&x).unwrap().mul(&conj_eta(&y).unwrap())
            );
            let is_central = x == Mat2::identity() || x == Mat2::identity().neg();
            assert_eq!(conj_eta(&x).unwrap() == Mat3::identity(), is_central);
        }
        assert_eq!(conj_eta(&Mat2::identity().neg()).unwrap(), Mat3::identity());
    }

    #[test]
    fn eta_basis_gram_matrix_is_j() {
        // B(X, Y) = Tr(XY)/2 on the eta basis gives diag(1, -1, 1).
        let eta = [basis_eta1(), basis_eta2(), basis_eta3()];
        for (i, a) in eta.iter().enumerate() {
            for (j, b) in eta.iter().enumerate() {
                let product = a.mul(b);
                let half_trace = product.a.add(&product.d).div_2();
                let expected = if i == j {
                    if i == 1 {
                        CycloNum::from_int(-1)
                    } else {
                        CycloNum::one()
                    }
                } else {
                    CycloNum::zero()
                };
                assert_eq!(half_trace, expected, "B(eta{}, eta{})", i + 1, j + 1);
            }
        }
    }

    #[test]
    fn membership_examples() {
        assert_eq!(
            gamma_int_membership(&inversion_s()).unwrap(),
            Some(RealCoset::Identity)
        );
        assert_eq!(gamma_int_membership(&w_rep()).unwrap(), Some(RealCoset::W));
        assert_eq!(gamma_int_membership(&mat_i(1, 1, 0, 1)).unwrap(), None);
    }

    #[test]
    fn membership_matches_integrality() {
        let gens = [
            inversion_s(),
            w_rep(),
            t_two(),
            gamma_inv_r(),
            mat_i(1, 1, 0, 1),
        ];
        let mut rng = SplitMix64::new(3);
        for _ in 0..200 {
            let mut acc = Mat2::identity();
            let len = rng.index(6) + 1;
            for _ in 0..len {
                acc = acc.mul(&gens[rng.index(gens.len())]);
            }
            let member = gamma_int_membership(&acc).unwrap().is_some();
            let integral = conj_eta(&acc).unwrap().is_rational_integral();
            assert_eq!(member, integral, "matrix {acc:?}");
        }
    }

    #[test]
    fn index_two_facts() {
        let w = w_rep();
        assert!(!w.is_gaussian());
        assert_eq!(w.mul(&w), inversion_s());
        assert_eq!(
            gamma_int_membership(&w.mul(&w)).unwrap(),
            Some(RealCoset::Identity)
        );
    }

    #[test]
    fn members_embed_into_complex_group() {
        let gens = [inversion_s(), w_rep(), t_two(), gamma_inv_r()];
        let mut rng = SplitMix64::new(31);
        for _ in 0..100 {
            let mut acc = Mat2::identity();
            for _ in 0..(rng.index(5) + 1) {
                acc = acc.mul(&gens[rng.index(gens.len())]);
            }
            assert!(orthogonal::gamma_membership(&acc).unwrap().is_some());
        }
    }

    #[test]
    fn fr_membership_examples() {
        assert!(in_fr(&H2Point::new(0.0, 1.0), 1e-9));
        assert!(!in_fr(&H2Point::new(1.0, 1.0), 1e-9));
        assert!(in_fr(&H2Point::new(1.0, 2.0), 1e-9));
    }

    #[test]
    fn reduce_examples() {
        let r = reduce_gamma_int(&H2Point::new(0.5, 3.0), 1e-9).unwrap();
        assert_eq!(r.gamma, Mat2::identity());

        let r = reduce_gamma_int(&H2Point::new(1.0, 0.5), 1e-9).unwrap();
        assert!(r.word.iter().any(|l| l.generator == "gamma_inv_R"));
        assert!(in_fr(&r.point, 1e-9));

        let start = H2Point::new(7.3, 0.4);
        let r = reduce_gamma_int(&start, 1e-9).unwrap();
        assert!(in_fr(&r.point, 1e-9));
        let replay = flt_apply_h2(&r.gamma, &start);
        assert!((replay.x - r.point.x).abs() < 1e-9 && (replay.y - r.point.y).abs() < 1e-9);
    }

    #[test]
    fn words_reconstruct_witnesses() {
        let letter = |tag: &str| -> Mat2 {
            match tag {
                "T_2" => t_two(),
                "gamma_inv_R" => gamma_inv_r(),
                "-I" => Mat2::identity().neg(),
                other => panic!("unexpected tag {other}"),
            }
        };
        let mut rng = SplitMix64::new(13);
        for _ in 0..60 {
            let z = H2Point::new(rng.range_f64(-8.0, 8.0), rng.range_f64(0.05, 3.0));
            let r = reduce_gamma_int(&z, 1e-9).unwrap();
            let mut acc = Mat2::identity();
            for l in &r.word {
                let base = letter(&l.generator);
                let step = if l.exponent >= 0 {
                    base.pow(l.exponent as u32)
                } else {
                    base.inverse_unimodular().unwrap().pow((-l.exponent) as u32)
                };
                acc = step.mul(&acc);
            }
            assert_eq!(acc, r.gamma, "word replay at ({}, {})", z.x, z.y);
        }
    }

    #[test]
    fn rho_validates() {
        assert!(rho_is_valid());
    }

    #[test]
    fn relation_examples() {
        // The vertex i lies on the rho F side of the union.
        let v = embed_h2(&H2Point::new(0.0, 1.0));
        assert!(!in_f(&v, 1e-9));
        assert!(in_f(&flt_apply(&rho(), &v), 1e-9));
        // An interior point of the right half lies in F directly.
        assert!(in_f(&embed_h2(&H2Point::new(1.5, 1.5)), 1e-9));

        let report = relation_check(300, 1e-9, 17);
        assert!(report.violations.is_empty(), "{:?}", report.violations);
        assert!(report.checked_fr_to_union > 50);
        assert!(report.checked_union_to_fr > 50);
    }

    #[test]
    fn gamma_inv_r_is_a_w_coset_member() {
        assert_eq!(
            gamma_int_membership(&gamma_inv_r()).unwrap(),
            Some(RealCoset::W)
        );
    }
}
