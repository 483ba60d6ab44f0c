//! 2x2 and 3x3 matrices over the cyclotomic ring.
//!
//! One exact matrix kernel serves both the SL2 layer and the orthogonal
//! 3x3 layer; Gaussian-integrality is a predicate, not a separate type,
//! so coset representatives with (1+i)-power denominators and plain
//! integral matrices flow through the same operations.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gaussian::{CycloNum, GaussianInt};

/// Row-major 2x2 matrix over the cyclotomic ring.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "Mat2Json", into = "Mat2Json")]
pub struct Mat2 {
    pub a: CycloNum,
    pub b: CycloNum,
    pub c: CycloNum,
    pub d: CycloNum,
}

#[derive(Serialize, Deserialize)]
struct Mat2Json {
    rows: [[CycloNum; 2]; 2],
}

impl From<Mat2> for Mat2Json {
    fn from(m: Mat2) -> Self {
        Mat2Json {
            rows: [[m.a, m.b], [m.c, m.d]],
        }
    }
}

impl TryFrom<Mat2Json> for Mat2 {
    type Error = String;
    fn try_from(j: Mat2Json) -> std::result::Result<Self, String> {
        let [[a, b], [c, d]] = j.rows;
        Ok(Mat2 { a, b, c, d })
    }
}

impl Mat2 {
    pub fn new(a: CycloNum, b: CycloNum, c: CycloNum, d: CycloNum) -> Self {
        Mat2 { a, b, c, d }
    }

    pub fn identity() -> Self {
        Mat2::new(
            CycloNum::one(),
            CycloNum::zero(),
            CycloNum::zero(),
            CycloNum::one(),
        )
    }

    pub fn from_gaussian_entries(
        a: GaussianInt,
        b: GaussianInt,
        c: GaussianInt,
        d: GaussianInt,
    ) -> Self {
        Mat2::new(
            CycloNum::from_gaussian(a),
            CycloNum::from_gaussian(b),
            CycloNum::from_gaussian(c),
            CycloNum::from_gaussian(d),
        )
    }

    pub fn from_ints(a: i64, b: i64, c: i64, d: i64) -> Self {
        Mat2::from_gaussian_entries(
            GaussianInt::new(a, 0),
            GaussianInt::new(b, 0),
            GaussianInt::new(c, 0),
            GaussianInt::new(d, 0),
        )
    }

    pub fn det(&self) -> CycloNum {
        self.a.mul(&self.d).sub(&self.b.mul(&self.c))
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        Mat2 {
            a: self.a.mul(&rhs.a).add(&self.b.mul(&rhs.c)),
            b: self.a.mul(&rhs.b).add(&self.b.mul(&rhs.d)),
            c: self.c.mul(&rhs.a).add(&self.d.mul(&rhs.c)),
            d: self.c.mul(&rhs.b).add(&self.d.mul(&rhs.d)),
        }
    }

    pub fn neg(&self) -> Self {
        Mat2 {
            a: self.a.neg(),
            b: self.b.neg(),
            c: self.c.neg(),
            d: self.d.neg(),
        }
    }

    pub fn scale(&self, s: &CycloNum) -> Self {
        Mat2 {
            a: self.a.mul(s),
            b: self.b.mul(s),
            c: self.c.mul(s),
            d: self.d.mul(s),
        }
    }

    pub fn is_gaussian(&self) -> bool {
        self.entries().iter().all(|e| e.is_gaussian_int())
    }

    pub fn is_sl2(&self) -> bool {
        self.det().is_one()
    }

    /// Inverse of a determinant-one matrix: [[d, -b], [-c, a]].
    pub fn inverse_unimodular(&self) -> Result<Self> {
        if !self.is_sl2() {
            return Err(Error::NotUnimodular(self.det().to_string()));
        }
        Ok(Mat2 {
            a: self.d.clone(),
            b: self.b.neg(),
            c: self.c.neg(),
            d: self.a.clone(),
        })
    }

    pub fn entries(&self) -> [&CycloNum; 4] {
        [&self.a, &self.b, &self.c, &self.d]
    }

    pub fn gaussian_entries(&self) -> Result<[GaussianInt; 4]> {
        let mut out = Vec::with_capacity(4);
        for e in self.entries() {
            out.push(
                e.as_gaussian()
                    .cloned()
                    .ok_or_else(|| Error::NotGaussian(e.to_string()))?,
            );
        }
        Ok([
            out[0].clone(),
            out[1].clone(),
            out[2].clone(),
            out[3].clone(),
        ])
    }

    pub fn is_real(&self) -> bool {
        self.entries().iter().all(|e| e.is_real())
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Mat2::identity();
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text.trim()).map_err(|e| Error::Parse(e.to_string()))
    }
}

/// Row-major 3x3 matrix over the cyclotomic ring.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "Mat3Json", into = "Mat3Json")]
pub struct Mat3 {
    pub rows: [[CycloNum; 3]; 3],
}

#[derive(Serialize, Deserialize)]
struct Mat3Json {
    rows: [[CycloNum; 3]; 3],
}

impl From<Mat3> for Mat3Json {
    fn from(m: Mat3) -> Self {
        Mat3Json { rows: m.rows }
    }
}

impl TryFrom<Mat3Json> for Mat3 {
    type Error = String;
    fn try_from(j: Mat3Json) -> std::result::Result<Self, String> {
        Ok(Mat3 { rows: j.rows })
    }
}

impl Mat3 {
    pub fn identity() -> Self {
        let mut rows: [[CycloNum; 3]; 3] = Default::default();
        for (i, row) in rows.iter_mut().enumerate() {
            for (j, e) in row.iter_mut().enumerate() {
                *e = if i == j {
                    CycloNum::one()
                } else {
                    CycloNum::zero()
                };
            }
        }
        Mat3 { rows }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let mut rows: [[CycloNum; 3]; 3] = Default::default();
        for (row, lhs_row) in rows.iter_mut().zip(&self.rows) {
            for (j, e) in row.iter_mut().enumerate() {
                let mut acc = CycloNum::zero();
                for (l, rhs_row) in rhs.rows.iter().enumerate() {
                    acc = acc.add(&lhs_row[l].mul(&rhs_row[j]));
                }
                *e = acc;
            }
        }
        Mat3 { rows }
    }

    pub fn transpose(&self) -> Self {
        let mut rows: [[CycloNum; 3]; 3] = Default::default();
        for (i, row) in self.rows.iter().enumerate() {
            for (j, e) in row.iter().enumerate() {
                rows[j][i] = e.clone();
            }
        }
        Mat3 { rows }
    }

    pub fn det(&self) -> CycloNum {
        let r = &self.rows;
        let m = |i: usize, j: usize| &r[i][j];
        let term = |a: &CycloNum, b: &CycloNum, c: &CycloNum| a.mul(&b.mul(c));
        term(m(0, 0), m(1, 1), m(2, 2))
            .add(&term(m(0, 1), m(1, 2), m(2, 0)))
            .add(&term(m(0, 2), m(1, 0), m(2, 1)))
            .sub(&term(m(0, 2), m(1, 1), m(2, 0)))
            .sub(&term(m(0, 0), m(1, 2), m(2, 1)))
            .sub(&term(m(0, 1), m(1, 0), m(2, 2)))
    }

    pub fn is_gaussian(&self) -> bool {
        self.rows.iter().flatten().all(|e| e.is_gaussian_int())
    }

    /// Complex special orthogonality: M^t M = I (transpose, no
    /// conjugation) and det M = 1, both exact.
    pub fn is_special_orthogonal(&self) -> bool {
        self.transpose().mul(self) == Mat3::identity() && self.det().is_one()
    }

    /// Signature-(2,1) orthogonality: M^t J M = J with J = diag(1,-1,1),
    /// and det M = 1, both exact.
    pub fn is_special_pseudo_orthogonal(&self) -> bool {
        let j = Mat3::sig_form_j();
        self.transpose().mul(&j).mul(self) == j && self.det().is_one()
    }

    /// Gram matrix J = diag(1, -1, 1) of the half-trace form restricted
    /// to the real basis of the split form.
    pub fn sig_form_j() -> Self {
        let mut m = Mat3::identity();
        m.rows[1][1] = CycloNum::one().neg();
        m
    }

    /// True when every entry is a rational integer (Gaussian with zero
    /// imaginary part).
    pub fn is_rational_integral(&self) -> bool {
        use num_traits::Zero;
        self.rows.iter().flatten().all(|e| match e.as_gaussian() {
            Some(g) => g.im.is_zero(),
            None => false,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn det_and_inverse() {
        let s = Mat2::from_ints(0, -1, 1, 0);
        assert!(s.is_sl2());
        let inv = s.inverse_unimodular().unwrap();
        assert_eq!(s.mul(&inv), Mat2::identity());

        let not_unimodular = Mat2::from_ints(2, 0, 0, 1);
        assert!(not_unimodular.inverse_unimodular().is_err());
    }

    #[test]
    fn mat3_orthogonality_of_identity() {
        assert!(Mat3::identity().is_special_orthogonal());
        assert!(Mat3::identity().is_special_pseudo_orthogonal());
    }

    #[test]
    fn mat2_json_round_trip() {
        let m = Mat2::from_gaussian_entries(
            GaussianInt::new(1, 0),
            GaussianInt::new(1, 1),
            GaussianInt::new(0, 0),
            GaussianInt::new(1, 0),
        );
        let s = serde_json::to_string(&m).unwrap();
        assert_eq!(s, r#"{"rows":[["1","1+i"],["0","1"]]}"#);
        assert_eq!(Mat2::parse(&s).unwrap(), m);
    }

    #[test]
    fn mat3_det() {
        let mut m = Mat3::identity();
        m.rows[0][1] = CycloNum::from_int(5);
        assert!(m.det().is_one());
    }
}
