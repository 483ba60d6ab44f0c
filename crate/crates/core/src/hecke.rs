//! The SL2(Z[i]) matrix layer: reduction mod (1+i), the Xi subsets, and
//! the Gaussian Hecke decomposition.
//!
//! Z[i]/(1+i) has two elements, identified with {0, 1} via the residue
//! of re + im mod 2. Reducing matrices entrywise sends SL2(Z[i]) onto
//! the six-element group SL2 over that field; the preimages of the
//! residue patterns partition SL2(Z[i]) into Xi12 (a subgroup) and the
//! two shifted classes Xi1, Xi2.
//!
//! A Gaussian matrix of nonzero determinant N factors uniquely as an
//! SL2(Z[i]) element times the upper-triangular representative
//! [[m, x], [0, N/m]] with N/m standard and x in the residue box of
//! N/m; `hecke_decompose` computes that factorization constructively.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gaussian::{ext_ggcd, ggcd, omega_reps, reduce_mod, standard_divisors, GaussianInt};
use crate::matrix::Mat2;

/// 2x2 matrix over Z[i]/(1+i), entries in {0, 1}.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct BitMat2(pub [[u8; 2]; 2]);

impl BitMat2 {
    pub const IDENTITY: BitMat2 = BitMat2([[1, 0], [0, 1]]);
    /// Image of the inversion S = [[0, -1], [1, 0]].
    pub const S_BAR: BitMat2 = BitMat2([[0, 1], [1, 0]]);

    pub fn mul(&self, rhs: &BitMat2) -> BitMat2 {
        let mut out = [[0u8; 2]; 2];
        for (i, row) in out.iter_mut().enumerate() {
            for (j, e) in row.iter_mut().enumerate() {
                *e = (self.0[i][0] & rhs.0[0][j]) ^ (self.0[i][1] & rhs.0[1][j]);
            }
        }
        BitMat2(out)
    }
}

/// Residue of a Gaussian integer mod (1+i): a + bi is congruent to
/// a + b mod 2 because i - 1 is divisible by 1+i.
pub fn red1(z: &GaussianInt) -> u8 {
    use num_integer::Integer;
    use num_traits::ToPrimitive;
    (&z.re + &z.im)
        .mod_floor(&num_bigint::BigInt::from(2))
        .to_u8()
        .unwrap()
}

/// Entrywise reduction of a Gaussian-integral matrix mod (1+i).
pub fn red2(g: &Mat2) -> Result<BitMat2> {
    let [a, b, c, d] = g.gaussian_entries()?;
    Ok(BitMat2([[red1(&a), red1(&b)], [red1(&c), red1(&d)]]))
}

/// The three residue classes of SL2(Z[i]) mod (1+i). The subscript
/// names the column in which zeros appear in the reduced matrices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum XiClass {
    Xi1,
    Xi2,
    Xi12,
}

/// Classify an SL2(Z[i]) element by its residue pattern mod (1+i).
pub fn xi_classify(g: &Mat2) -> Result<XiClass> {
    if !g.is_sl2() {
        return Err(Error::NotUnimodular(g.det().to_string()));
    }
    let r = red2(g)?;
    Ok(classify_bits(&r).expect("unimodular matrices reduce into SL2 of the residue field"))
}

/// Classification at the residue level; `None` for the three singular
/// bit patterns that cannot arise from SL2.
pub fn classify_bits(r: &BitMat2) -> Option<XiClass> {
    match r.0 {
        [[1, 0], [0, 1]] | [[0, 1], [1, 0]] => Some(XiClass::Xi12),
        [[0, 1], [1, 1]] | [[1, 1], [0, 1]] => Some(XiClass::Xi1),
        [[1, 1], [1, 0]] | [[1, 0], [1, 1]] => Some(XiClass::Xi2),
        _ => None,
    }
}

/// The orbit representative alpha^N(m, x) = [[m, x], [0, N/m]].
pub fn alpha_matrix(n: &GaussianInt, m: &GaussianInt, x: &GaussianInt) -> Result<Mat2> {
    if n.is_zero() {
        return Err(Error::SingularMatrix);
    }
    if m.is_zero() || !m.divides(n) {
        return Err(Error::Precondition(format!(
            "m = {m} does not divide N = {n}"
        )));
    }
    let n_over_m = n.exact_div(m);
    if !n_over_m.is_standard() {
        return Err(Error::Precondition(format!(
            "N/m = {n_over_m} is not standard"
        )));
    }
    if reduce_mod(x, &n_over_m)? != *x {
        return Err(Error::Precondition(format!(
            "x = {x} is not a residue representative mod N/m = {n_over_m}"
        )));
    }
    Ok(Mat2::from_gaussian_entries(
        m.clone(),
        x.clone(),
        GaussianInt::zero(),
        n_over_m,
    ))
}

/// The unique factorization alpha = gamma * alpha^N(m, x).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HeckeFactors {
    pub gamma: Mat2,
    pub m: GaussianInt,
    pub x: GaussianInt,
}

/// Decompose a Gaussian matrix of nonzero determinant N into its
/// SL2(Z[i]) factor and orbit label (m, x).
///
/// The steps: m = i^e * gcd(a, c) with the exponent e chosen so N/m is
/// standard; (p, r) = (a/m, c/m); any Bezout certificate p*s0 - r*q0 = 1
/// then pins x = reduce_mod(s0*b - q0*d, N/m), independent of the
/// certificate; gamma is recovered by exact division.
pub fn hecke_decompose(alpha: &Mat2) -> Result<HeckeFactors> {
    let [a, b, c, d] = alpha.gaussian_entries()?;
    let n = a.mul(&d).sub(&b.mul(&c));
    if n.is_zero() {
        return Err(Error::SingularMatrix);
    }

    let g0 = ggcd(&a, &c);
    let mut m = None;
    for e in 0..4u8 {
        let cand = g0.mul_i_pow(e);
        let quot = n.exact_div(&cand);
        if quot.is_standard() {
            m = Some(cand);
            break;
        }
    }
    let m = m.expect("one unit multiple of gcd(a, c) makes N/m standard");
    let n_over_m = n.exact_div(&m);

    let p = a.exact_div(&m);
    let r = c.exact_div(&m);
    let (one, s0, q0) = ext_ggcd(&p, &r)?;
    debug_assert!(
        one.is_one(),
        "p and r are coprime after dividing by the gcd"
    );
    let x = reduce_mod(&s0.mul(&b).sub(&q0.mul(&d)), &n_over_m)?;

    // gamma = alpha * [[m, x], [0, N/m]]^{-1}; the divisions by N are
    // exact because the decomposition exists over Z[i].
    let q = b.mul(&m).sub(&a.mul(&x)).exact_div(&n);
    let s = d.mul(&m).sub(&c.mul(&x)).exact_div(&n);
    let gamma = Mat2::from_gaussian_entries(p, q, r, s);
    debug_assert!(gamma.is_sl2());

    Ok(HeckeFactors { gamma, m, x })
}

/// All orbit labels (m, x) with m | N, N/m standard, x in the residue
/// box of N/m. Enumeration relies on trial-division factorization and
/// errors out when norm(N) exceeds `bound`.
pub fn enumerate_orbit_labels(
    n: &GaussianInt,
    bound: u64,
) -> Result<Vec<(GaussianInt, GaussianInt)>> {
    if n.is_zero() {
        return Err(Error::SingularMatrix);
    }
    let mut labels = Vec::new();
    // m is determined by the standard divisor d = N/m as m = N/d.
    for d in standard_divisors(n, bound)? {
        let m = n.exact_div(&d);
        for x in omega_reps(&d)?.reps {
            labels.push((m.clone(), x));
        }
    }
    Ok(labels)
}

/// True iff alpha2 = gamma * alpha1 for some gamma in SL2(Z[i]).
/// Requires equal nonzero determinants; decided by exact division.
pub fn is_left_equivalent(alpha1: &Mat2, alpha2: &Mat2) -> Result<bool> {
    let [a, b, c, d] = alpha1.gaussian_entries()?;
    let [e, f, g, h] = alpha2.gaussian_entries()?;
    let n1 = a.mul(&d).sub(&b.mul(&c));
    let n2 = e.mul(&h).sub(&f.mul(&g));
    if n1.is_zero() || n2.is_zero() {
        return Err(Error::SingularMatrix);
    }
    if n1 != n2 {
        return Ok(false);
    }
    // gamma = alpha2 * adj(alpha1) / N must be Gaussian; its determinant
    // is automatically N^2 / N^2 = 1.
    let cand = [
        e.mul(&d).sub(&f.mul(&c)),
        f.mul(&a).sub(&e.mul(&b)),
        g.mul(&d).sub(&h.mul(&c)),
        h.mul(&a).sub(&g.mul(&b)),
    ];
    Ok(cand.iter().all(|z| n1.divides(z)))
}
