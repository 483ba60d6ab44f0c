//! Exact arithmetic in the ring Z[w8, 1/(1+i)], where w8 is the
//! primitive eighth root of unity in the standard quadrant.
//!
//! Since w8^2 = i, the field Q(w8) is the quadratic extension of Q(i)
//! generated by w8, and every element of the subring we care about can
//! be written (u + v*w8) / (1+i)^k with u, v Gaussian integers. This
//! two-term representation gives a short multiplication law:
//!
//!   (u1 + v1 w)(u2 + v2 w) = (u1 u2 + i v1 v2) + (u1 v2 + u2 v1) w,
//!
//! with the denominator exponents adding. A value is kept normalized so
//! that equality is structural: either k = 0, or u and v are not both
//! divisible by (1+i).

use std::fmt;

use num_complex::Complex64;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::int::GaussianInt;
use crate::error::{Error, Result};

/// (u + v*w8) / (1+i)^k, normalized. The default value is zero.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct CycloNum {
    u: GaussianInt,
    v: GaussianInt,
    k: u32,
}

impl CycloNum {
    pub fn new(u: GaussianInt, v: GaussianInt, k: u32) -> Self {
        let mut z = CycloNum { u, v, k };
        z.normalize();
        z
    }

    pub fn zero() -> Self {
        CycloNum {
            u: GaussianInt::zero(),
            v: GaussianInt::zero(),
            k: 0,
        }
    }

    pub fn one() -> Self {
        CycloNum {
            u: GaussianInt::one(),
            v: GaussianInt::zero(),
            k: 0,
        }
    }

    pub fn i() -> Self {
        CycloNum {
            u: GaussianInt::i(),
            v: GaussianInt::zero(),
            k: 0,
        }
    }

    /// The eighth root of unity w8 itself.
    pub fn omega8() -> Self {
        CycloNum {
            u: GaussianInt::zero(),
            v: GaussianInt::one(),
            k: 0,
        }
    }

    /// 1 / w8 = -i * w8.
    pub fn omega8_inv() -> Self {
        CycloNum {
            u: GaussianInt::zero(),
            v: GaussianInt::i().neg(),
            k: 0,
        }
    }

    /// 1 / sqrt(2) = w8 / (1+i).
    pub fn inv_sqrt2() -> Self {
        CycloNum {
            u: GaussianInt::zero(),
            v: GaussianInt::one(),
            k: 1,
        }
    }

    pub fn from_gaussian(u: GaussianInt) -> Self {
        CycloNum {
            u,
            v: GaussianInt::zero(),
            k: 0,
        }
    }

    pub fn from_int(n: i64) -> Self {
        CycloNum::from_gaussian(GaussianInt::new(n, 0))
    }

    pub fn numer_u(&self) -> &GaussianInt {
        &self.u
    }

    pub fn numer_v(&self) -> &GaussianInt {
        &self.v
    }

    pub fn denom_exp(&self) -> u32 {
        self.k
    }

    fn normalize(&mut self) {
        let one_plus_i = GaussianInt::one_plus_i();
        while self.k > 0 && one_plus_i.divides(&self.u) && one_plus_i.divides(&self.v) {
            self.u = self.u.exact_div(&one_plus_i);
            self.v = self.v.exact_div(&one_plus_i);
            self.k -= 1;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.u.is_zero() && self.v.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.k == 0 && self.v.is_zero() && self.u.is_one()
    }

    /// True iff the value lies in Z[i] in normalized form, i.e. k = 0
    /// and no w8 component.
    pub fn is_gaussian_int(&self) -> bool {
        self.k == 0 && self.v.is_zero()
    }

    /// The underlying Gaussian integer, when [`Self::is_gaussian_int`].
    pub fn as_gaussian(&self) -> Option<&GaussianInt> {
        self.is_gaussian_int().then_some(&self.u)
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let k = self.k.max(rhs.k);
        let one_plus_i = GaussianInt::one_plus_i();
        let scale = |z: &GaussianInt, extra: u32| {
            let mut out = z.clone();
            for _ in 0..extra {
                out = out.mul(&one_plus_i);
            }
            out
        };
        CycloNum::new(
            scale(&self.u, k - self.k).add(&scale(&rhs.u, k - rhs.k)),
            scale(&self.v, k - self.k).add(&scale(&rhs.v, k - rhs.k)),
            k,
        )
    }

    pub fn neg(&self) -> Self {
        CycloNum {
            u: self.u.neg(),
            v: self.v.neg(),
            k: self.k,
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let i = GaussianInt::i();
        let u = self.u.mul(&rhs.u).add(&i.mul(&self.v.mul(&rhs.v)));
        let v = self.u.mul(&rhs.v).add(&rhs.u.mul(&self.v));
        CycloNum::new(u, v, self.k + rhs.k)
    }

    /// Division by (1+i): bump the denominator exponent, then normalize.
    pub fn div_one_plus_i(&self) -> Self {
        CycloNum::new(self.u.clone(), self.v.clone(), self.k + 1)
    }

    /// Division by 2 = -i (1+i)^2, exact in this ring.
    pub fn div_2(&self) -> Self {
        // 1/2 = i / (1+i)^2
        self.mul(&CycloNum {
            u: GaussianInt::i(),
            v: GaussianInt::zero(),
            k: 2,
        })
    }

    /// Division by 2i = (1+i)^2, exact in this ring.
    pub fn div_2i(&self) -> Self {
        CycloNum::new(self.u.clone(), self.v.clone(), self.k + 2)
    }

    pub fn mul_gaussian(&self, z: &GaussianInt) -> Self {
        CycloNum::new(self.u.mul(z), self.v.mul(z), self.k)
    }

    /// Complex conjugation. conj(w8) = -i w8 and conj(1/(1+i)^k) =
    /// i^k / (1+i)^k, so the result stays in the ring.
    pub fn conj(&self) -> Self {
        let u = self.u.conj().mul_i_pow((self.k % 4) as u8);
        let v = self.v.conj().mul_i_pow(((self.k + 3) % 4) as u8); // * i^k * (-i)
        CycloNum { u, v, k: self.k }
    }

    /// True iff the value is fixed by complex conjugation, i.e. real.
    pub fn is_real(&self) -> bool {
        *self == self.conj()
    }

    pub fn to_complex(&self) -> Complex64 {
        let w8 = Complex64::new(
            std::f64::consts::FRAC_1_SQRT_2,
            std::f64::consts::FRAC_1_SQRT_2,
        );
        let num = self.u.to_complex() + w8 * self.v.to_complex();
        let denom = Complex64::new(1.0, 1.0).powi(self.k as i32);
        num / denom
    }
}

impl fmt::Display for CycloNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_gaussian_int() {
            write!(f, "{}", self.u)
        } else {
            write!(f, "({} + ({})w8)/(1+i)^{}", self.u, self.v, self.k)
        }
    }
}

/// Wire form of a general cyclotomic value.
#[derive(Serialize, Deserialize)]
struct CycloJson {
    u: GaussianInt,
    v: GaussianInt,
    k: u32,
}

impl Serialize for CycloNum {
    /// Gaussian integers serialize as their literal string; everything
    /// else as the {"u", "v", "k"} object.
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        if self.is_gaussian_int() {
            serializer.serialize_str(&self.u.to_string())
        } else {
            CycloJson {
                u: self.u.clone(),
                v: self.v.clone(),
                k: self.k,
            }
            .serialize(serializer)
        }
    }
}

impl<'de> Deserialize<'de> for CycloNum {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Repr {
            Literal(String),
            Full(CycloJson),
        }
        match Repr::deserialize(deserializer)? {
            Repr::Literal(s) => {
                let g: GaussianInt = s.parse().map_err(D::Error::custom)?;
                Ok(CycloNum::from_gaussian(g))
            }
            Repr::Full(c) => Ok(CycloNum::new(c.u, c.v, c.k)),
        }
    }
}

impl CycloNum {
    /// Parse either a Gaussian literal or the JSON object form.
    pub fn parse(text: &str) -> Result<Self> {
        let trimmed = text.trim();
        if trimmed.starts_with('{') {
            serde_json::from_str(trimmed).map_err(|e| Error::Parse(e.to_string()))
        } else {
            Ok(CycloNum::from_gaussian(trimmed.parse()?))
        }
    }
}
