//! The spin cover conj: SL(2,C) -> SO(3,C) and the integral points
//! SO3(Z[i]).
//!
//! The half-trace form B(X,Y) = Tr(XY)/2 on sl2 has the orthonormal
//! basis X1 = [[0,1],[1,0]], X2 = [[0,i],[-i,0]], Y = [[1,0],[0,-1]].
//! Conjugation X -> g X g^{-1} preserves B, and reading it off in this
//! basis gives a surjection onto SO(3,C) with kernel {+-I}. `conj3`
//! computes the 3x3 image exactly by conjugating the three basis
//! vectors; `conj3_closed_form` is the equivalent polynomial formula.
//!
//! The preimage of SO3(Z[i]) in SL(2,C) is a union of six right cosets
//! of the subgroup Xi12, two "diagonal" and four "inversion" cosets,
//! with explicit representatives involving w8 and 1/(1+i). Membership
//! is decided by exact integrality of the conjugation image, and the
//! coset label by multiplying against the stored representatives.

use std::fmt;
use std::sync::LazyLock;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::gaussian::{CycloNum, GaussianInt};
use crate::hecke::{red2, BitMat2};
use crate::matrix::{Mat2, Mat3};
use crate::rng::SplitMix64;
use crate::sample;

/// Basis vector X1 of sl2.
fn basis_x1() -> Mat2 {
    Mat2::from_ints(0, 1, 1, 0)
}

/// Basis vector X2 = i(X1' - X2').
fn basis_x2() -> Mat2 {
    Mat2::from_gaussian_entries(
        GaussianInt::zero(),
        GaussianInt::i(),
        GaussianInt::i().neg(),
        GaussianInt::zero(),
    )
}

/// Basis vector Y.
fn basis_y() -> Mat2 {
    Mat2::from_ints(1, 0, 0, -1)
}

/// Coordinates of a traceless matrix [[y, x1 + i x2], [x1 - i x2, -y]]
/// in the basis {X1, X2, Y}; exact because division by 2 and 2i stays
/// in the cyclotomic ring.
fn sl2_coordinates(m: &Mat2) -> (CycloNum, CycloNum, CycloNum) {
    let x1 = m.b.add(&m.c).div_2();
    let x2 = m.b.sub(&m.c).div_2i();
    let y = m.a.clone();
    (x1, x2, y)
}

/// The image of g under the spin cover, computed by exact conjugation
/// of the three basis vectors. Requires det g = 1.
pub fn conj3(g: &Mat2) -> Result<Mat3> {
    if !g.is_sl2() {
        return Err(Error::NotUnimodular(g.det().to_string()));
    }
    let g_inv = g.inverse_unimodular()?;
    let mut out = Mat3::identity();
    for (col, basis) in [basis_x1(), basis_x2(), basis_y()].into_iter().enumerate() {
        let image = g.mul(&basis).mul(&g_inv);
        debug_assert!(
            image.a.add(&image.d).is_zero(),
            "conjugation preserves trace zero"
        );
        let (x1, x2, y) = sl2_coordinates(&image);
        out.rows[0][col] = x1;
        out.rows[1][col] = x2;
        out.rows[2][col] = y;
    }
    Ok(out)
}

/// Polynomial form of the spin cover. Entry (3,2) is -i(ac + bd); the
/// opposite sign fails exact orthogonality (see the acceptance tests,
/// which pin this against basis conjugation).
pub fn conj3_closed_form(g: &Mat2) -> Result<Mat3> {
    if !g.is_sl2() {
        return Err(Error::NotUnimodular(g.det().to_string()));
    }
    let (a, b, c, d) = (&g.a, &g.b, &g.c, &g.d);
    let (a2, b2, c2, d2) = (a.mul(a), b.mul(b), c.mul(c), d.mul(d));
    let i = CycloNum::i();
    let mut out = Mat3::identity();
    out.rows[0][0] = a2.sub(&c2).add(&d2).sub(&b2).div_2();
    out.rows[0][1] = i.mul(&a2.sub(&c2).add(&b2).sub(&d2)).div_2();
    out.rows[0][2] = c.mul(d).sub(&a.mul(b));
    out.rows[1][0] = i.mul(&b2.add(&d2).sub(&a2).sub(&c2)).div_2();
    out.rows[1][1] = a2.add(&c2).add(&b2).add(&d2).div_2();
    out.rows[1][2] = i.mul(&a.mul(b).add(&c.mul(d)));
    out.rows[2][0] = b.mul(d).sub(&a.mul(c));
    out.rows[2][1] = i.mul(&a.mul(c).add(&b.mul(d))).neg();
    out.rows[2][2] = a.mul(d).add(&b.mul(c));
    Ok(out)
}

/// Membership in SO3(Z[i]): Gaussian-integral entries and exact complex
/// special orthogonality.
pub fn is_so3_gaussian(m: &Mat3) -> bool {
    m.is_gaussian() && m.is_special_orthogonal()
}

/// Label of one of the six right Xi12-cosets of the preimage of
/// SO3(Z[i]); epsilon is meaningful only for the inversion family.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CosetLabel {
    Diagonal { delta: u8 },
    Inversion { delta: u8, epsilon: u8 },
}

impl fmt::Display for CosetLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CosetLabel::Diagonal { delta } => write!(f, "Diagonal,\u{3b4}={delta}"),
            CosetLabel::Inversion { delta, epsilon } => {
                write!(f, "Inversion,\u{3b4}={delta},\u{3b5}={epsilon}")
            }
        }
    }
}

impl Serialize for CosetLabel {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// Rotation R_{pi/2} = diag(w8, 1/w8); its boundary action rotates C by
/// a quarter turn about 0.
pub fn rotation_r() -> Mat2 {
    Mat2::new(
        CycloNum::omega8(),
        CycloNum::zero(),
        CycloNum::zero(),
        CycloNum::omega8_inv(),
    )
}

/// Translation by 1+i.
pub fn t_one_plus_i() -> Mat2 {
    sample::translation(GaussianInt::one_plus_i())
}

/// Translation by 1-i.
pub fn t_one_minus_i() -> Mat2 {
    sample::translation(GaussianInt::new(1, -1))
}

/// The inversion step of the Ford-domain reduction:
/// (1/(1+i)) [[i, -2-i], [i, -i]], equal to rep(Inversion,0,0) times the
/// translation by -1+3i. Its isometric sphere is centered at 1 with
/// radius sqrt(2).
pub fn gamma_inv() -> Mat2 {
    let m = Mat2::from_gaussian_entries(
        GaussianInt::i(),
        GaussianInt::new(-2, -1),
        GaussianInt::i(),
        GaussianInt::i().neg(),
    );
    scale_div_one_plus_i(&m)
}

fn scale_div_one_plus_i(m: &Mat2) -> Mat2 {
    Mat2::new(
        m.a.div_one_plus_i(),
        m.b.div_one_plus_i(),
        m.c.div_one_plus_i(),
        m.d.div_one_plus_i(),
    )
}

static COSET_REPS: LazyLock<Vec<(CosetLabel, Mat2)>> = LazyLock::new(|| {
    let mut reps = Vec::with_capacity(6);
    for delta in 0..2u8 {
        let scalar = if delta == 0 {
            CycloNum::one()
        } else {
            CycloNum::omega8_inv()
        };
        let diag = Mat2::from_gaussian_entries(
            GaussianInt::one().mul_i_pow(delta),
            GaussianInt::zero(),
            GaussianInt::zero(),
            GaussianInt::one(),
        );
        reps.push((CosetLabel::Diagonal { delta }, diag.scale(&scalar)));
    }
    for delta in 0..2u8 {
        for epsilon in 0..2u8 {
            let i_d1 = GaussianInt::one().mul_i_pow(1 + delta);
            let i_e = GaussianInt::one().mul_i_pow(epsilon);
            let m = Mat2::from_gaussian_entries(
                i_d1.clone(),
                i_e.clone(),
                i_d1,
                GaussianInt::new(2, 0).add(&i_e),
            );
            let scalar = if delta == 0 {
                CycloNum::one()
            } else {
                CycloNum::omega8_inv()
            };
            reps.push((
                CosetLabel::Inversion { delta, epsilon },
                scale_div_one_plus_i(&m.scale(&scalar)),
            ));
        }
    }
    // Startup self-check: every representative is unimodular and maps
    // into SO3(Z[i]).
    for (label, rep) in &reps {
        assert!(rep.is_sl2(), "coset rep {label} must have det 1");
        let image = conj3(rep).expect("det 1");
        assert!(
            is_so3_gaussian(&image),
            "conj3 of coset rep {label} must be integral orthogonal"
        );
    }
    reps
});

/// The six coset representatives, self-checked on first use.
pub fn coset_reps() -> &'static [(CosetLabel, Mat2)] {
    &COSET_REPS
}

/// True iff g lies in the subgroup Xi12: Gaussian, det 1, and residue
/// pattern I or S mod (1+i).
pub fn is_xi12(g: &Mat2) -> bool {
    if !g.is_gaussian() || !g.is_sl2() {
        return false;
    }
    let r = red2(g).expect("gaussian");
    r == BitMat2::IDENTITY || r == BitMat2::S_BAR
}

/// Decide membership of g in the preimage of SO3(Z[i]) and return the
/// coset label when it is a member. Decided by exact integrality of
/// conj3(g), with the label found by multiplying against the stored
/// representatives.
pub fn gamma_membership(g: &Mat2) -> Result<Option<CosetLabel>> {
    if !g.is_sl2() {
        return Err(Error::NotUnimodular(g.det().to_string()));
    }
    if !is_so3_gaussian(&conj3(g)?) {
        return Ok(None);
    }
    let mut found = None;
    for (label, rep) in coset_reps() {
        let h = g.mul(&rep.inverse_unimodular()?);
        if is_xi12(&h) {
            debug_assert!(found.is_none(), "coset labels are unique");
            found = Some(*label);
            if !cfg!(debug_assertions) {
                break;
            }
        }
    }
    debug_assert!(found.is_some(), "members always match one representative");
    Ok(found)
}

/// Membership in the stabilizer of the first Iwasawa coordinate inside
/// the preimage of SO3(Z[i]): lower-left entry zero and full membership.
pub fn gamma_phi1_membership(g: &Mat2) -> Result<bool> {
    if !g.is_sl2() {
        return Err(Error::NotUnimodular(g.det().to_string()));
    }
    Ok(g.c.is_zero() && gamma_membership(g)?.is_some())
}

/// Which of the two coset families a member belongs to.
fn family_of(label: CosetLabel) -> &'static str {
    match label {
        CosetLabel::Diagonal { .. } => "Diagonal",
        CosetLabel::Inversion { .. } => "Inversion",
    }
}

/// Outcome of the random closure check: products of random members must
/// again be members, and the report tallies which family each product
/// lands in, keyed by the input family pair.
#[derive(Debug, Clone, Serialize)]
pub struct ClosureReport {
    pub pairs: usize,
    pub failures: Vec<String>,
    /// (family of x, family of y, family of x*y) -> count.
    pub family_counts: Vec<((String, String, String), usize)>,
}

/// Multiply `samples` random pairs drawn from the six coset families and
/// verify membership of every product.
pub fn closure_check(samples: usize, seed: u64) -> ClosureReport {
    let mut rng = SplitMix64::new(seed);
    let mut failures = Vec::new();
    let mut counts: std::collections::BTreeMap<(String, String, String), usize> =
        std::collections::BTreeMap::new();
    for _ in 0..samples {
        let x = sample::random_gamma_element(&mut rng, 6);
        let y = sample::random_gamma_element(&mut rng, 6);
        let fx = gamma_membership(&x)
            .expect("det 1")
            .expect("member by construction");
        let fy = gamma_membership(&y)
            .expect("det 1")
            .expect("member by construction");
        let product = x.mul(&y);
        match gamma_membership(&product) {
            Ok(Some(fp)) => {
                *counts
                    .entry((
                        family_of(fx).to_string(),
                        family_of(fy).to_string(),
                        family_of(fp).to_string(),
                    ))
                    .or_insert(0) += 1;
            }
            _ => failures.push(
                serde_json::to_string(&(&x, &y)).unwrap_or_else(|_| "<serialize error>".into()),
            ),
        }
    }
    ClosureReport {
        pairs: samples,
        failures,
        family_counts: counts.into_iter().collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sample::{random_sl2_zi, translation};

    fn g(re: i64, im: i64) -> GaussianInt {
        GaussianInt::new(re, im)
    }

    fn t1() -> Mat2 {
        translation(GaussianInt::one())
    }

    #[test]
    fn beta_basis_is_orthonormal_for_half_trace() {
        // B(X, Y) = Tr(XY)/2 takes the identity Gram matrix on
        // {X1, X2, Y}, which is what makes conj3 land in SO(3).
        let beta = [basis_x1(), basis_x2(), basis_y()];
        for (i, a) in beta.iter().enumerate() {
            for (j, b) in beta.iter().enumerate() {
                let product = a.mul(b);
                let half_trace = product.a.add(&product.d).div_2();
                let expected = if i == j {
                    CycloNum::one()
                } else {
                    CycloNum::zero()
                };
                assert_eq!(half_trace, expected, "B(beta{}, beta{})", i + 1, j + 1);
            }
        }
    }

    #[test]
    fn conj3_identity() {
        assert_eq!(conj3(&Mat2::identity()).unwrap(), Mat3::identity());
    }

    #[test]
    fn conj3_of_unit_translation_is_not_integral() {
        let m = conj3(&t1()).unwrap();
        // Entry (1,1) is 1/2, so T_1 is not in the preimage of SO3(Z[i]).
        assert_eq!(m.rows[0][0], CycloNum::from_int(1).div_2());
        assert!(!m.is_gaussian());
        assert!(m.is_special_orthogonal());
    }

    #[test]
    fn conj3_of_one_plus_i_translation() {
        let m = conj3(&t_one_plus_i()).unwrap();
        let expect = |entries: [(i64, i64); 9]| -> Mat3 {
            let mut out = Mat3::identity();
            for (idx, (re, im)) in entries.into_iter().enumerate() {
                out.rows[idx / 3][idx % 3] = CycloNum::from_gaussian(g(re, im));
            }
            out
        };
        let expected = expect([
            (1, -1),
            (-1, 0),
            (-1, -1),
            (-1, 0),
            (1, 1),
            (-1, 1),
            (1, 1),
            (1, -1),
            (1, 0),
        ]);
        assert_eq!(m, expected);
        assert!(is_so3_gaussian(&m));
    }

    #[test]
    fn closed_form_matches_basis_conjugation() {
        let mut rng = SplitMix64::new(9);
        for _ in 0..100 {
            let m = random_sl2_zi(&mut rng, 8);
            assert_eq!(conj3(&m).unwrap(), conj3_closed_form(&m).unwrap());
        }
        for (_, rep) in coset_reps() {
            assert_eq!(conj3(rep).unwrap(), conj3_closed_form(rep).unwrap());
        }
    }

    #[test]
    fn is_so3_gaussian_examples() {
        assert!(is_so3_gaussian(&Mat3::identity()));
        assert!(is_so3_gaussian(&conj3(&t_one_plus_i()).unwrap()));
        assert!(!is_so3_gaussian(&conj3(&t1()).unwrap()));
    }

    #[test]
    fn coset_rep_values() {
        let reps = coset_reps();
        assert_eq!(reps[0].1, Mat2::identity());
        assert_eq!(reps[1].1, rotation_r());
        // (Inversion, 0, 0) is (1/(1+i)) [[i, 1], [i, 3]].
        let expected = scale_div_one_plus_i(&Mat2::from_gaussian_entries(
            g(0, 1),
            g(1, 0),
            g(0, 1),
            g(3, 0),
        ));
        assert_eq!(reps[2].1, expected);
    }

    #[test]
    fn membership_examples() {
        assert_eq!(
            gamma_membership(&t_one_plus_i()).unwrap(),
            Some(CosetLabel::Diagonal { delta: 0 })
        );
        assert_eq!(gamma_membership(&t1()).unwrap(), None);
        // gamma_inv = rep(Inversion,0,0) * T_{-1+3i} is a member; its
        // right-coset label works out to epsilon = 1:
        // gamma_inv * rep(Inversion,0,1)^{-1} = [[2+i,-1-i],[1+i,-i]],
        // which is Gaussian with det 1 and residue pattern I.
        assert_eq!(
            gamma_membership(&gamma_inv()).unwrap(),
            Some(CosetLabel::Inversion {
                delta: 0,
                epsilon: 1
            })
        );
    }

    #[test]
    fn gamma_inv_is_rep_times_translation() {
        let t = translation(g(-1, 3));
        assert_eq!(coset_reps()[2].1.mul(&t), gamma_inv());
    }

    #[test]
    fn conj3_is_homomorphic_with_central_kernel() {
        let mut rng = SplitMix64::new(21);
        for _ in 0..100 {
            let x = random_sl2_zi(&mut rng, 8);
            let y = random_sl2_zi(&mut rng, 8);
            assert_eq!(
                conj3(&x.mul(&y)).unwrap(),
                conj3(&x).unwrap().mul(&conj3(&y).unwrap())
            );
            let image = conj3(&x).unwrap();
            let is_central = x == Mat2::identity() || x == Mat2::identity().neg();
            assert_eq!(image == Mat3::identity(), is_central);
        }
        assert_eq!(conj3(&Mat2::identity().neg()).unwrap(), Mat3::identity());
    }

    #[test]
    fn conj3_images_are_orthogonal() {
        let mut rng = SplitMix64::new(33);
        for _ in 0..50 {
            let x = random_sl2_zi(&mut rng, 10);
            assert!(conj3(&x).unwrap().is_special_orthogonal());
        }
    }

    #[test]
    fn six_reps_are_pairwise_inequivalent() {
        let reps = coset_reps();
        for (i, (_, r1)) in reps.iter().enumerate() {
            for (j, (_, r2)) in reps.iter().enumerate() {
                let h = r1.mul(&r2.inverse_unimodular().unwrap());
                assert_eq!(is_xi12(&h), i == j);
            }
        }
    }

    #[test]
    fn phi1_stabilizer_examples() {
        assert!(gamma_phi1_membership(&rotation_r()).unwrap());
        assert!(gamma_phi1_membership(&t_one_minus_i()).unwrap());
        assert!(!gamma_phi1_membership(&t1()).unwrap());
        assert!(!gamma_phi1_membership(&gamma_inv()).unwrap());
    }

    #[test]
    fn phi1_unipotent_part_is_the_even_translations() {
        // Among translations, membership in the stabilizer is exactly
        // divisibility of the shift by 1+i.
        for re in -4i64..=4 {
            for im in -4i64..=4 {
                let w = g(re, im);
                let member = gamma_phi1_membership(&crate::sample::translation(w.clone())).unwrap();
                assert_eq!(member, GaussianInt::one_plus_i().divides(&w), "shift {w}");
            }
        }
    }

    #[test]
    fn phi1_stabilizer_splits_over_the_quarter_turn() {
        // Every sampled stabilizer element factors as a translation in
        // the unipotent part times a unique power of T_{1-i} R, up to
        // sign: g (T_{1-i} R)^{-k} lies in +-U for exactly one k in 0..3.
        let rot = t_one_minus_i().mul(&rotation_r());
        let rot_inv = rot.inverse_unimodular().unwrap();
        let gens = [rotation_r(), t_one_plus_i(), t_one_minus_i(), rot.clone()];
        let mut rng = SplitMix64::new(29);
        for _ in 0..80 {
            let mut acc = Mat2::identity();
            for _ in 0..(rng.index(6) + 1) {
                acc = acc.mul(&gens[rng.index(gens.len())]);
            }
            assert!(gamma_phi1_membership(&acc).unwrap());
            let mut matching = 0;
            let mut shifted = acc.clone();
            for _ in 0..4u32 {
                for candidate in [shifted.clone(), shifted.neg()] {
                    let unipotent_even = candidate.c.is_zero()
                        && candidate.a.is_one()
                        && candidate.d.is_one()
                        && candidate
                            .b
                            .as_gaussian()
                            .is_some_and(|w| GaussianInt::one_plus_i().divides(w));
                    if unipotent_even {
                        matching += 1;
                    }
                }
                shifted = shifted.mul(&rot_inv);
            }
            assert_eq!(matching, 1, "unique coset of the unipotent part");
        }
    }

    #[test]
    fn torsion_element_has_order_four_mod_center() {
        let m = t_one_minus_i().mul(&rotation_r());
        assert_eq!(m.pow(4), Mat2::identity().neg());
        // Powers 1..3 are not unipotent-times-center, so the four coset
        // representatives mod the translation subgroup are distinct.
        for k in 1..4u32 {
            let p = m.pow(k);
            for sign in [p.clone(), p.neg()] {
                let is_unipotent_translation = sign.c.is_zero()
                    && sign.a.is_one()
                    && sign.d.is_one()
                    && sign
                        .b
                        .as_gaussian()
                        .is_some_and(|w| GaussianInt::one_plus_i().divides(w));
                assert!(!is_unipotent_translation, "power {k}");
            }
        }
    }

    #[test]
    fn closure_check_small_run() {
        let report = closure_check(50, 7);
        assert_eq!(report.pairs, 50);
        assert!(report.failures.is_empty());
        // Diagonal-family products of diagonal-family inputs stay diagonal.
        for ((fx, fy, fp), _) in &report.family_counts {
            if fx == "Diagonal" && fy == "Diagonal" {
                assert_eq!(fp, "Diagonal");
            }
        }
    }
}
