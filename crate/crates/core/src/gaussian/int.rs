//! Arbitrary-precision Gaussian integers Z[i].
//!
//! The unit group of Z[i] is {1, i, -1, -i}, so ideals have four
//! generators. All normalization here follows the "standard" convention:
//! the unique associate with Re > 0 and Im >= 0 (the open first quadrant
//! together with the positive real axis). Gcds, prime factors and Hecke
//! orbit labels are all stated in terms of standard generators.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// An element of Z[i]. Exact; no operation ever rounds. The default
/// value is zero.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GaussianInt {
    pub re: BigInt,
    pub im: BigInt,
}

impl GaussianInt {
    pub fn new(re: impl Into<BigInt>, im: impl Into<BigInt>) -> Self {
        GaussianInt {
            re: re.into(),
            im: im.into(),
        }
    }

    pub fn zero() -> Self {
        GaussianInt::new(0, 0)
    }

    pub fn one() -> Self {
        GaussianInt::new(1, 0)
    }

    /// The imaginary unit i.
    pub fn i() -> Self {
        GaussianInt::new(0, 1)
    }

    /// 1 + i, the ramified prime above 2.
    pub fn one_plus_i() -> Self {
        GaussianInt::new(1, 1)
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero()
    }

    /// Field norm N(a+bi) = a^2 + b^2. Zero iff the element is zero.
    pub fn norm(&self) -> BigInt {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn conj(&self) -> Self {
        GaussianInt {
            re: self.re.clone(),
            im: -&self.im,
        }
    }

    pub fn neg(&self) -> Self {
        GaussianInt {
            re: -&self.re,
            im: -&self.im,
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        GaussianInt {
            re: &self.re + &rhs.re,
            im: &self.im + &rhs.im,
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        GaussianInt {
            re: &self.re - &rhs.re,
            im: &self.im - &rhs.im,
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        GaussianInt {
            re: &self.re * &rhs.re - &self.im * &rhs.im,
            im: &self.re * &rhs.im + &self.im * &rhs.re,
        }
    }

    /// Multiply by i^j.
    pub fn mul_i_pow(&self, j: u8) -> Self {
        match j % 4 {
            0 => self.clone(),
            1 => GaussianInt {
                re: -&self.im,
                im: self.re.clone(),
            },
            2 => self.neg(),
            _ => GaussianInt {
                re: self.im.clone(),
                im: -&self.re,
            },
        }
    }

    /// True iff `self` divides `rhs` in Z[i].
    pub fn divides(&self, rhs: &Self) -> bool {
        if self.is_zero() {
            return rhs.is_zero();
        }
        let n = self.norm();
        let p = rhs.mul(&self.conj());
        (&p.re % &n).is_zero() && (&p.im % &n).is_zero()
    }

    /// Exact quotient `self / rhs`; panics if the division is not exact.
    /// Callers guard with [`GaussianInt::divides`] or a proven identity.
    pub fn exact_div(&self, rhs: &Self) -> Self {
        assert!(!rhs.is_zero(), "division by zero in Z[i]");
        let n = rhs.norm();
        let p = self.mul(&rhs.conj());
        let (qr, rr) = p.re.div_rem(&n);
        let (qi, ri) = p.im.div_rem(&n);
        assert!(rr.is_zero() && ri.is_zero(), "inexact division in Z[i]");
        GaussianInt { re: qr, im: qi }
    }

    /// True for the standard subset: Re > 0 and Im >= 0, or zero is
    /// excluded. Exactly one of the four associates of a nonzero element
    /// is standard.
    pub fn is_standard(&self) -> bool {
        self.re.is_positive() && !self.im.is_negative()
    }

    /// The unique pair (j, s) with s = i^j * self standard, for self != 0.
    pub fn standard_associate(&self) -> Result<(u8, GaussianInt)> {
        if self.is_zero() {
            return Err(Error::StandardAssociateOfZero);
        }
        for j in 0..4u8 {
            let s = self.mul_i_pow(j);
            if s.is_standard() {
                return Ok((j, s));
            }
        }
        unreachable!("one associate of a nonzero element is standard");
    }

    /// Nearest-integer quotient of self / rhs, rounding each coordinate
    /// to the nearest integer with ties toward minus infinity. The
    /// remainder self - q * rhs then has norm at most norm(rhs) / 2,
    /// which makes the Euclidean algorithm descend strictly.
    pub fn div_round(&self, rhs: &Self) -> Self {
        let n = rhs.norm();
        let p = self.mul(&rhs.conj());
        GaussianInt {
            re: round_half_down(&p.re, &n),
            im: round_half_down(&p.im, &n),
        }
    }

    pub fn to_complex(&self) -> num_complex::Complex64 {
        num_complex::Complex64::new(bigint_to_f64(&self.re), bigint_to_f64(&self.im))
    }
}

/// Nearest integer to p/q (q > 0), ties toward minus infinity:
/// ceil(p/q - 1/2) = floor((2p + q - 1) / (2q)).
fn round_half_down(p: &BigInt, q: &BigInt) -> BigInt {
    let num = BigInt::from(2) * p + q - BigInt::one();
    num.div_floor(&(BigInt::from(2) * q))
}

fn bigint_to_f64(x: &BigInt) -> f64 {
    use num_traits::ToPrimitive;
    x.to_f64().unwrap_or(f64::NAN)
}

/// Greatest common divisor, normalized to the standard generator of the
/// ideal (x, y); ggcd(0, 0) = 0 by convention.
pub fn ggcd(x: &GaussianInt, y: &GaussianInt) -> GaussianInt {
    let mut a = x.clone();
    let mut b = y.clone();
    while !b.is_zero() {
        let q = a.div_round(&b);
        let r = a.sub(&q.mul(&b));
        a = b;
        b = r;
    }
    if a.is_zero() {
        a
    } else {
        a.standard_associate().expect("nonzero").1
    }
}

/// Extended gcd: returns (g, z, w) with x*z - y*w = g = ggcd(x, y).
/// Any valid certificate may be returned; only the identity is promised.
pub fn ext_ggcd(
    x: &GaussianInt,
    y: &GaussianInt,
) -> Result<(GaussianInt, GaussianInt, GaussianInt)> {
    if x.is_zero() && y.is_zero() {
        return Err(Error::ExtGcdOfZeroPair);
    }
    // Invariant: r0 = x*s0 + y*t0 and r1 = x*s1 + y*t1.
    let mut r0 = x.clone();
    let mut r1 = y.clone();
    let mut s0 = GaussianInt::one();
    let mut t0 = GaussianInt::zero();
    let mut s1 = GaussianInt::zero();
    let mut t1 = GaussianInt::one();
    while !r1.is_zero() {
        let q = r0.div_round(&r1);
        let r2 = r0.sub(&q.mul(&r1));
        let s2 = s0.sub(&q.mul(&s1));
        let t2 = t0.sub(&q.mul(&t1));
        r0 = r1;
        s0 = s1;
        t0 = t1;
        r1 = r2;
        s1 = s2;
        t1 = t2;
    }
    let (j, g) = r0
        .standard_associate()
        .expect("nonzero by the zero-pair guard");
    // g = i^j (x*s0 + y*t0), so z = i^j s0 and w = -i^j t0.
    Ok((g, s0.mul_i_pow(j), t0.mul_i_pow(j).neg()))
}

/// An explicit complete set of residue representatives mod `modulus`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResidueSystem {
    pub modulus: GaussianInt,
    pub reps: Vec<GaussianInt>,
}

/// Column data of the Hermite normal form of the Z-lattice (y) in
/// coordinates (re, im): basis vectors (h11, 0) and (v2re, h22).
struct HnfBox {
    h11: BigInt,
    h22: BigInt,
    v2re: BigInt,
}

fn hnf_box(y: &GaussianInt) -> Result<HnfBox> {
    if y.is_zero() {
        return Err(Error::ZeroModulus);
    }
    // Im-parts of the lattice are (b*m + a*n) for integers m, n, so the
    // projection image is gcd(a, b) Z; the kernel is generated by
    // (norm / g, 0).
    let ext = y.im.extended_gcd(&y.re); // im*x + re*y = g
    let g = ext.gcd.clone();
    let h11 = y.norm().div_floor(&g);
    // y * (m + n i) with im-part g: m = ext.x, n = ext.y.
    let v2re = &y.re * &ext.x - &y.im * &ext.y;
    Ok(HnfBox { h11, h22: g, v2re })
}

/// The residue system for `y`: the Hermite box {r + s i : 0 <= r < h11,
/// 0 <= s < h22}. For y the standard associate of (1+i)^n this is
/// exactly the dyadic box {0 <= r < 2^ceil(n/2), 0 <= s < 2^(n-ceil(n/2))}.
pub fn omega_reps(y: &GaussianInt) -> Result<ResidueSystem> {
    let hnf = hnf_box(y)?;
    let mut reps = Vec::new();
    let mut s = BigInt::zero();
    while s < hnf.h22 {
        let mut r = BigInt::zero();
        while r < hnf.h11 {
            reps.push(GaussianInt {
                re: r.clone(),
                im: s.clone(),
            });
            r += 1;
        }
        s += 1;
    }
    Ok(ResidueSystem {
        modulus: y.clone(),
        reps,
    })
}

/// Canonical representative of x mod y inside the Hermite box of
/// [`omega_reps`]. Depends only on the residue class of x.
pub fn reduce_mod(x: &GaussianInt, y: &GaussianInt) -> Result<GaussianInt> {
    let hnf = hnf_box(y)?;
    let s = x.im.mod_floor(&hnf.h22);
    let q2 = (&x.im - &s).div_floor(&hnf.h22);
    let shifted_re = &x.re - q2 * &hnf.v2re;
    let r = shifted_re.mod_floor(&hnf.h11);
    Ok(GaussianInt { re: r, im: s })
}

/// Prime factorization by trial division over standard candidates in
/// ascending norm. Returns standard primes with multiplicities plus the
/// remaining unit exponent j, so that self = i^j * prod p^e. Errors when
/// norm(n) exceeds `bound`; this is a test/enumeration oracle, not a
/// production factoring path.
pub fn factor(n: &GaussianInt, bound: u64) -> Result<(u8, Vec<(GaussianInt, u32)>)> {
    use num_traits::ToPrimitive;
    if n.is_zero() {
        return Err(Error::Precondition("cannot factor zero".into()));
    }
    let norm = n.norm();
    if norm.to_u64().is_none_or(|v| v > bound) {
        return Err(Error::FactorizationBudget {
            norm: norm.to_string(),
            bound,
        });
    }

    let mut rem = n.clone();
    let mut factors: Vec<(GaussianInt, u32)> = Vec::new();
    let mut m: u64 = 2;
    loop {
        let nr = rem
            .norm()
            .to_u64()
            .expect("shrinks below the checked bound");
        if nr == 1 || m * m > nr {
            break;
        }
        for cand in standard_of_norm(m) {
            let mut e = 0u32;
            while cand.divides(&rem) {
                rem = rem.exact_div(&cand);
                e += 1;
            }
            if e > 0 {
                factors.push((cand, e));
            }
        }
        m += 1;
    }
    if rem.norm() > BigInt::one() {
        // No divisor of norm <= sqrt remains, so the cofactor is prime.
        let (_, p) = rem.standard_associate()?;
        factors.push((p, 1));
    }
    let mut prod = GaussianInt::one();
    for (p, e) in &factors {
        for _ in 0..*e {
            prod = prod.mul(p);
        }
    }
    let unit = n.exact_div(&prod);
    for j in 0..4u8 {
        if unit == GaussianInt::one().mul_i_pow(j) {
            return Ok((j, factors));
        }
    }
    unreachable!("cofactor of the prime part is a unit")
}

/// Standard elements of the given norm, ascending by real part.
fn standard_of_norm(m: u64) -> Vec<GaussianInt> {
    let mut out = Vec::new();
    let mut a: u64 = 1;
    while a * a <= m {
        let b2 = m - a * a;
        let b = (b2 as f64).sqrt().round() as u64;
        if b * b == b2 {
            out.push(GaussianInt::new(a as i64, b as i64));
        }
        a += 1;
    }
    out.sort_by(|x, y| x.re.cmp(&y.re));
    out
}

/// All standard divisors of n (one per divisor ideal), in no particular
/// order beyond determinism.
pub fn standard_divisors(n: &GaussianInt, bound: u64) -> Result<Vec<GaussianInt>> {
    let (_, factors) = factor(n, bound)?;
    let mut divs = vec![GaussianInt::one()];
    for (p, e) in &factors {
        let mut next = Vec::with_capacity(divs.len() * (*e as usize + 1));
        for d in &divs {
            let mut acc = d.clone();
            next.push(acc.clone());
            for _ in 0..*e {
                acc = acc.mul(p);
                next.push(acc.standard_associate()?.1);
            }
        }
        divs = next;
    }
    Ok(divs)
}

impl fmt::Display for GaussianInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            return write!(f, "{}", self.re);
        }
        let im_mag = self.im.abs();
        let im_str = if im_mag.is_one() {
            String::new()
        } else {
            im_mag.to_string()
        };
        if self.re.is_zero() {
            let sign = if self.im.is_negative() { "-" } else { "" };
            write!(f, "{sign}{im_str}i")
        } else {
            let sign = if self.im.is_negative() { "-" } else { "+" };
            write!(f, "{}{sign}{im_str}i", self.re)
        }
    }
}

impl FromStr for GaussianInt {
    type Err = Error;

    /// Parses the text literal grammar: optional sign, decimal integer,
    /// optional +/- decimal integer followed by `i`. Pure-imaginary
    /// forms like "i", "-i", "2i" are accepted; the Unicode minus sign
    /// is treated as '-'.
    fn from_str(s: &str) -> Result<Self> {
        let cleaned: String = s
            .chars()
            .filter(|c| !c.is_whitespace())
            .map(|c| if c == '\u{2212}' { '-' } else { c })
            .collect();
        if cleaned.is_empty() {
            return Err(Error::Parse("empty Gaussian integer literal".into()));
        }
        // Split into signed terms.
        let mut terms: Vec<String> = Vec::new();
        let mut cur = String::new();
        for (idx, ch) in cleaned.chars().enumerate() {
            if (ch == '+' || ch == '-') && idx != 0 && !cur.is_empty() {
                terms.push(std::mem::take(&mut cur));
            }
            cur.push(ch);
        }
        terms.push(cur);
        if terms.len() > 2 {
            return Err(Error::Parse(format!("too many terms in '{s}'")));
        }

        let mut re: Option<BigInt> = None;
        let mut im: Option<BigInt> = None;
        for term in &terms {
            if let Some(body) = term.strip_suffix('i') {
                if im.is_some() {
                    return Err(Error::Parse(format!("duplicate imaginary term in '{s}'")));
                }
                let value = match body {
                    "" | "+" => BigInt::one(),
                    "-" => -BigInt::one(),
                    digits => digits
                        .parse::<BigInt>()
                        .map_err(|_| Error::Parse(format!("bad imaginary part in '{s}'")))?,
                };
                im = Some(value);
            } else {
                if re.is_some() {
                    return Err(Error::Parse(format!("duplicate real term in '{s}'")));
                }
                let value = term
                    .parse::<BigInt>()
                    .map_err(|_| Error::Parse(format!("bad real part in '{s}'")))?;
                re = Some(value);
            }
        }
        Ok(GaussianInt {
            re: re.unwrap_or_else(BigInt::zero),
            im: im.unwrap_or_else(BigInt::zero),
        })
    }
}

impl Serialize for GaussianInt {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for GaussianInt {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(re: i64, im: i64) -> GaussianInt {
        GaussianInt::new(re, im)
    }

    #[test]
    fn standard_associate_examples() {
        assert_eq!(g(1, 1).standard_associate().unwrap(), (0, g(1, 1)));
        assert_eq!(g(1, -1).standard_associate().unwrap(), (1, g(1, 1)));
        assert_eq!(g(2, 0).standard_associate().unwrap(), (0, g(2, 0)));
        assert_eq!(
            g(0, 0).standard_associate(),
            Err(Error::StandardAssociateOfZero)
        );
    }

    #[test]
    fn standard_factorization_of_two() {
        // 2 = i^3 (1+i)^2
        let rhs = g(1, 1).mul(&g(1, 1)).mul_i_pow(3);
        assert_eq!(rhs, g(2, 0));
        let (unit, factors) = factor(&g(2, 0), 100).unwrap();
        assert_eq!(unit, 3);
        assert_eq!(factors, vec![(g(1, 1), 2)]);
    }

    #[test]
    fn exactly_one_standard_associate() {
        for re in -3i64..=3 {
            for im in -3i64..=3 {
                let z = g(re, im);
                if z.is_zero() {
                    continue;
                }
                let count = (0..4u8).filter(|&j| z.mul_i_pow(j).is_standard()).count();
                assert_eq!(count, 1, "associates of {z}");
            }
        }
    }

    #[test]
    fn ggcd_examples() {
        assert_eq!(ggcd(&g(0, 0), &g(3, 1)), g(3, 1));
        assert_eq!(ggcd(&g(2, 0), &g(1, 1)), g(1, 1));
        // 5 = (2+i)(2-i), 3+i = (1+i)(2-i); standard associate of 2-i is 1+2i.
        assert_eq!(ggcd(&g(5, 0), &g(3, 1)), g(1, 2));
        assert_eq!(ggcd(&g(0, 0), &g(0, 0)), g(0, 0));
    }

    #[test]
    fn ggcd_divides_both() {
        for (x, y) in [
            (g(12, 7), g(3, -9)),
            (g(-4, 2), g(6, 6)),
            (g(0, 5), g(5, 0)),
        ] {
            let d = ggcd(&x, &y);
            assert!(d.divides(&x) && d.divides(&y));
            assert!(d.is_standard());
        }
    }

    #[test]
    fn ext_ggcd_certificate_identity() {
        let cases = [
            (g(1, 0), g(0, 0)),
            (g(2, 0), g(1, 1)),
            (g(5, 0), g(3, 1)),
            (g(-7, 3), g(4, -11)),
            (g(0, 1), g(0, 0)),
        ];
        for (x, y) in cases {
            let (gcd, z, w) = ext_ggcd(&x, &y).unwrap();
            assert_eq!(x.mul(&z).sub(&y.mul(&w)), gcd, "certificate for ({x}, {y})");
            assert_eq!(gcd, ggcd(&x, &y));
        }
        assert_eq!(ext_ggcd(&g(0, 0), &g(0, 0)), Err(Error::ExtGcdOfZeroPair));
    }

    #[test]
    fn omega_reps_examples() {
        let w = omega_reps(&g(1, 1)).unwrap();
        assert_eq!(w.reps, vec![g(0, 0), g(1, 0)]);

        let w = omega_reps(&g(2, 0)).unwrap();
        assert_eq!(w.reps, vec![g(0, 0), g(1, 0), g(0, 1), g(1, 1)]);

        let w = omega_reps(&g(2, 2)).unwrap();
        let expected: Vec<GaussianInt> =
            (0..2).flat_map(|s| (0..4).map(move |r| g(r, s))).collect();
        assert_eq!(w.reps, expected);

        assert_eq!(omega_reps(&g(0, 0)), Err(Error::ZeroModulus));
    }

    #[test]
    fn omega_matches_dyadic_box_for_ramified_powers() {
        // For y standard associate of (1+i)^n the Hermite box must equal
        // {r + si : 0 <= r < 2^ceil(n/2), 0 <= s < 2^(n - ceil(n/2))}.
        let mut power = GaussianInt::one();
        for n in 1..=12u32 {
            power = power.mul(&g(1, 1));
            let y = power.standard_associate().unwrap().1;
            let reps = omega_reps(&y).unwrap().reps;
            let r_bound = 1i64 << n.div_ceil(2);
            let s_bound = 1i64 << (n - n.div_ceil(2));
            let expected: Vec<GaussianInt> = (0..s_bound)
                .flat_map(|s| (0..r_bound).map(move |r| g(r, s)))
                .collect();
            assert_eq!(reps, expected, "n = {n}");
            assert_eq!(reps.len() as u64, 1 << n);
        }
    }

    #[test]
    fn reduce_mod_examples() {
        assert_eq!(reduce_mod(&g(0, 0), &g(1, 1)).unwrap(), g(0, 0));
        assert_eq!(reduce_mod(&g(-1, 0), &g(1, 1)).unwrap(), g(1, 0));
        // 3i - i = 2i is divisible by 2; the other three box elements fail.
        assert_eq!(reduce_mod(&g(0, 3), &g(2, 0)).unwrap(), g(0, 1));
    }

    #[test]
    fn reduce_mod_is_canonical_and_congruent() {
        let moduli = [g(1, 1), g(2, 0), g(3, 1), g(-2, 5), g(0, 3)];
        for y in &moduli {
            for re in -6i64..=6 {
                for im in -6i64..=6 {
                    let x = g(re, im);
                    let r = reduce_mod(&x, y).unwrap();
                    assert!(y.divides(&x.sub(&r)), "congruence for {x} mod {y}");
                    assert_eq!(reduce_mod(&r, y).unwrap(), r, "idempotence for {x} mod {y}");
                }
            }
        }
    }

    #[test]
    fn residue_count_matches_norm() {
        use num_traits::ToPrimitive;
        for y in [g(1, 1), g(2, 0), g(3, 0), g(2, 1), g(-3, 4)] {
            let reps = omega_reps(&y).unwrap().reps;
            assert_eq!(reps.len(), y.norm().to_usize().unwrap());
            // Pairwise incongruent: each rep is its own canonical form.
            for r in &reps {
                assert_eq!(&reduce_mod(r, &y).unwrap(), r);
            }
        }
    }

    #[test]
    fn literal_round_trip() {
        for s in ["0", "1", "-7", "i", "-i", "3-2i", "1+i", "12i", "-5+9i"] {
            let z: GaussianInt = s.parse().unwrap();
            assert_eq!(z.to_string(), s, "canonical form of {s}");
        }
        // Non-canonical spellings parse to the same value.
        assert_eq!("0+1i".parse::<GaussianInt>().unwrap(), g(0, 1));
        assert_eq!("+3".parse::<GaussianInt>().unwrap(), g(3, 0));
        assert_eq!("3\u{2212}2i".parse::<GaussianInt>().unwrap(), g(3, -2));
        assert!("2+3".parse::<GaussianInt>().is_err());
        assert!("".parse::<GaussianInt>().is_err());
        assert!("ii".parse::<GaussianInt>().is_err());
    }

    #[test]
    fn display_parse_round_trip_is_identity() {
        for re in -9i64..=9 {
            for im in -9i64..=9 {
                let z = g(re, im);
                let back: GaussianInt = z.to_string().parse().unwrap();
                assert_eq!(back, z);
            }
        }
        let big = GaussianInt::new(
            "123456789012345678901234567890".parse::<BigInt>().unwrap(),
            "-98765432109876543210".parse::<BigInt>().unwrap(),
        );
        let back: GaussianInt = big.to_string().parse().unwrap();
        assert_eq!(back, big);
    }

    #[test]
    fn division_helpers() {
        assert!(g(1, 1).divides(&g(2, 0)));
        assert!(!g(2, 0).divides(&g(1, 1)));
        assert_eq!(g(2, 0).exact_div(&g(1, 1)), g(1, -1));
        let q = g(7, -3).div_round(&g(2, 1));
        let r = g(7, -3).sub(&q.mul(&g(2, 1)));
        assert!(r.norm() <= g(2, 1).norm() / 2);
    }

    #[test]
    fn standard_divisors_of_small_elements() {
        let mut d2 = standard_divisors(&g(2, 0), 100).unwrap();
        d2.sort();
        let mut expect = vec![g(1, 0), g(1, 1), g(2, 0)];
        expect.sort();
        assert_eq!(d2, expect);

        let d5 = standard_divisors(&g(5, 0), 100).unwrap();
        assert_eq!(d5.len(), 4); // 1, 2+i, 1+2i, 5
    }
}
