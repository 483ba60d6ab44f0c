//! The quaternion upper half-space model of hyperbolic 3-space, the
//! Mobius action of SL(2,C), the explicit fundamental domains, and the
//! reduction algorithms.
//!
//! Points are x1 + x2 i + y j with y > 0. Geometry runs in binary64;
//! the group-element witnesses composed during reduction stay exact in
//! the cyclotomic ring, and the witness is authoritative: it is
//! re-applied to the original input as a consistency check.
//!
//! Two reductions are provided. `reduce_picard` moves a point into the
//! classical Picard domain of SL2(Z[i]). `reduce_gamma` moves a point
//! into the Ford-type domain F(G) of the preimage of SO3(Z[i]): first
//! recenter x so the nearest point of the coset 1 + (1+i)Z[i] is 1,
//! then invert on the sphere ||x-1||^2 + y^2 = 2 while the point is
//! inside it (each inversion strictly increases y), and finally rotate
//! about 1 by a quarter-turn power to land in the triangle G with
//! vertices 1, 2, 1+i.

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::gaussian::GaussianInt;
use crate::matrix::Mat2;
use crate::orthogonal::{self, gamma_inv, rotation_r, t_one_minus_i};
use crate::sample::{inversion_s, translation};
use crate::MAX_REDUCTION_ITERATIONS;

/// A point x1 + x2 i + y j of the upper half-space.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct H3Point {
    pub x1: f64,
    pub x2: f64,
    pub y: f64,
}

impl H3Point {
    pub fn new(x1: f64, x2: f64, y: f64) -> Self {
        H3Point { x1, x2, y }
    }

    /// The complex boundary coordinate x1 + i x2.
    pub fn x(&self) -> Complex64 {
        Complex64::new(self.x1, self.x2)
    }
}

/// A point x + y j of the upper half-plane.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct H2Point {
    pub x: f64,
    pub y: f64,
}

impl H2Point {
    pub fn new(x: f64, y: f64) -> Self {
        H2Point { x, y }
    }
}

/// Iwasawa coordinates (-log y, x1, x2).
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct IwasawaCoords {
    pub t1: f64,
    pub t2: f64,
    pub t3: f64,
}

pub fn iwasawa(z: &H3Point) -> Result<IwasawaCoords> {
    if !z.y.is_finite() || z.y <= 0.0 {
        return Err(Error::NonPositiveHeight);
    }
    Ok(IwasawaCoords {
        t1: -z.y.ln(),
        t2: z.x1,
        t3: z.x2,
    })
}

pub fn iwasawa_inv(t: &IwasawaCoords) -> H3Point {
    H3Point {
        x1: t.t2,
        x2: t.t3,
        y: (-t.t1).exp(),
    }
}

/// Fractional linear action of a determinant-one matrix on the upper
/// half-space, evaluated in quaternion arithmetic: with x the complex
/// boundary part, the denominator is ||c z + d||^2 = |c x + d|^2 +
/// |c|^2 y^2, the new boundary part is ((a x + b) conj(c x + d) +
/// a conj(c) y^2) / D and the new height is y / D.
pub fn flt_apply(g: &Mat2, z: &H3Point) -> H3Point {
    debug_assert!(g.is_sl2(), "fractional linear action expects det 1");
    let a = g.a.to_complex();
    let b = g.b.to_complex();
    let c = g.c.to_complex();
    let d = g.d.to_complex();
    let x = z.x();
    let cxd = c * x + d;
    let denom = cxd.norm_sqr() + c.norm_sqr() * z.y * z.y;
    let new_x = ((a * x + b) * cxd.conj() + a * c.conj() * z.y * z.y) / denom;
    let new_y = z.y / denom;
    debug_assert!(new_y > 0.0, "the action preserves the upper half-space");
    H3Point {
        x1: new_x.re,
        x2: new_x.im,
        y: new_y,
    }
}

/// Action of a real determinant-one matrix on the upper half-plane.
pub fn flt_apply_h2(g: &Mat2, z: &H2Point) -> H2Point {
    debug_assert!(g.is_real(), "H^2 action expects real entries");
    let w = flt_apply(
        g,
        &H3Point {
            x1: z.x,
            x2: 0.0,
            y: z.y,
        },
    );
    debug_assert!(
        w.x2.abs() < 1e-9,
        "real matrices preserve the real-axis plane"
    );
    H2Point { x: w.x1, y: w.y }
}

/// Hyperbolic distance between two points of the upper half-space.
pub fn hyperbolic_distance(z: &H3Point, w: &H3Point) -> f64 {
    let dx = (z.x() - w.x()).norm_sqr();
    let dy = (z.y - w.y) * (z.y - w.y);
    let c = 1.0 + (dx + dy) / (2.0 * z.y * w.y);
    c.acosh()
}

/// Membership in the Picard domain: x1 in [-1/2, 1/2], x2 in [0, 1/2],
/// ||z||^2 >= 1, each within eps slack.
pub fn in_picard(z: &H3Point, eps: f64) -> bool {
    z.x1.abs() <= 0.5 + eps
        && z.x2 >= -eps
        && z.x2 <= 0.5 + eps
        && z.x1 * z.x1 + z.x2 * z.x2 + z.y * z.y >= 1.0 - eps
}

/// The lattice rounding at the core of the F1 test and the reduction:
/// candidates for the nearest point of 1 + (1+i)Z[i] to x, with ties
/// broken toward the lexicographically smallest translation amount
/// w = -(1+i)n in (Re, Im).
fn nearest_coset_step(x: Complex64) -> (GaussianInt, Complex64) {
    // Solve (x - 1) / (1+i) = g and round g to the nearest lattice point.
    let g = (x - Complex64::new(1.0, 0.0)) / Complex64::new(1.0, 1.0);
    nearest_step_common(g, |n| {
        let w = Complex64::new(1.0, 1.0) * n;
        (-w, Complex64::new(1.0, 0.0) + w)
    })
}

/// Nearest Gaussian integer to x with the same tie rule (translation
/// amount is -n).
fn nearest_gaussian_step(x: Complex64) -> (GaussianInt, Complex64) {
    nearest_step_common(x, |n| (-n, n))
}

fn nearest_step_common(
    g: Complex64,
    realize: impl Fn(Complex64) -> (Complex64, Complex64),
) -> (GaussianInt, Complex64) {
    debug_assert!(
        g.re.abs() < 4.5e15 && g.im.abs() < 4.5e15,
        "coordinates within exact f64 range"
    );
    struct Candidate {
        dist: f64,
        key: (f64, f64),
        n: (i64, i64),
        center: Complex64,
    }
    let fr = g.re.floor();
    let fi = g.im.floor();
    let mut best: Option<Candidate> = None;
    for dr in 0..2i64 {
        for di in 0..2i64 {
            let n = Complex64::new(fr + dr as f64, fi + di as f64);
            let (w, center) = realize(n);
            let dist = (g - n).norm_sqr();
            let key = (w.re, w.im);
            let better = match &best {
                None => true,
                Some(b) => dist < b.dist - 1e-12 || (dist < b.dist + 1e-12 && key < b.key),
            };
            if better {
                best = Some(Candidate {
                    dist,
                    key,
                    n: (n.re as i64, n.im as i64),
                    center,
                });
            }
        }
    }
    let best = best.expect("candidate grid is nonempty");
    (GaussianInt::new(best.n.0, best.n.1), best.center)
}

/// Membership in F1: ||x - d||^2 + y^2 >= 2 for every d in the coset
/// 1 + (1+i)Z[i]. The nearest coset point dominates all others, so the
/// infinite family reduces to one inequality.
pub fn in_f1(z: &H3Point, eps: f64) -> bool {
    let (_, center) = nearest_coset_step(z.x());
    (z.x() - center).norm_sqr() + z.y * z.y >= 2.0 - eps
}

/// Brute-force version of the F1 test quantified over all coset points
/// within the given radius of x; test oracle for [`in_f1`]. The lattice
/// scan box is sized from |x| so every candidate within the radius is
/// visited.
pub fn in_f1_brute_force(z: &H3Point, radius: f64, eps: f64) -> bool {
    let x = z.x();
    // |m + ni| = |d - 1| / sqrt2 <= (|x| + radius + 1) / sqrt2.
    let bound = ((x.norm() + radius + 1.0) / std::f64::consts::SQRT_2).ceil() as i64 + 1;
    for m in -bound..=bound {
        for n in -bound..=bound {
            // d = 1 + (1+i)(m + ni)
            let d = Complex64::new(1.0 + (m - n) as f64, (m + n) as f64);
            if (d - x).norm() <= radius && (x - d).norm_sqr() + z.y * z.y < 2.0 - eps {
                return false;
            }
        }
    }
    true
}

/// Membership in the triangle G with vertices 1, 2, 1+i, as half-plane
/// inequalities with eps slack.
pub fn in_triangle_g(x1: f64, x2: f64, eps: f64) -> bool {
    x1 >= 1.0 - eps && x2 >= -eps && x1 + x2 <= 2.0 + eps
}

/// Membership in the Ford-type fundamental domain F(G): boundary part in
/// the triangle and outside the sphere of radius sqrt(2) about 1.
pub fn in_f(z: &H3Point, eps: f64) -> bool {
    let r2 = (z.x() - Complex64::new(1.0, 0.0)).norm_sqr() + z.y * z.y;
    in_triangle_g(z.x1, z.x2, eps) && r2 >= 2.0 - eps
}

/// Induced boundary action of an element of the phi1 stabilizer: an
/// upper-triangular det-1 matrix acts on C as z -> a^2 z + a b, and the
/// action is independent of the height.
pub fn induced_action(g: &Mat2, t: (f64, f64)) -> Result<(f64, f64)> {
    if !orthogonal::gamma_phi1_membership(g)? {
        return Err(Error::NotPhi1Stabilizer);
    }
    let a = g.a.to_complex();
    let b = g.b.to_complex();
    let z = Complex64::new(t.0, t.1);
    let image = a * a * z + a * b;
    Ok((image.re, image.im))
}

/// One letter of a reduction word: a named generator and its exponent.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WordLetter {
    pub generator: String,
    pub exponent: i64,
}

/// Outcome of a reduction: the exact witness, the reduced point, the
/// generator word realizing the witness, and the loop count.
#[derive(Debug, Clone, Serialize)]
pub struct ReductionResult<P = H3Point> {
    pub gamma: Mat2,
    pub point: P,
    pub word: Vec<WordLetter>,
    pub iterations: usize,
}

struct Reducer {
    witness: Mat2,
    word: Vec<WordLetter>,
}

impl Reducer {
    fn new() -> Self {
        Reducer {
            witness: Mat2::identity(),
            word: Vec::new(),
        }
    }

    fn apply(&mut self, step: &Mat2, z: &H3Point) -> H3Point {
        self.witness = step.mul(&self.witness);
        flt_apply(step, z)
    }

    fn push(&mut self, generator: &str, exponent: i64) {
        if exponent != 0 {
            self.word.push(WordLetter {
                generator: generator.to_string(),
                exponent,
            });
        }
    }

    /// Flip the witness sign so the (1,1) entry has nonnegative real
    /// part; pure-imaginary entries are left alone.
    fn normalize_sign(&mut self) {
        if self.witness.a.to_complex().re < -1e-12 {
            self.witness = self.witness.neg();
            self.push("-I", 1);
        }
    }
}

/// Reduce a point into the Ford-type domain F(G) of the preimage of
/// SO3(Z[i]), returning an exact witness in that group.
pub fn reduce_gamma(z: &H3Point, eps: f64) -> Result<ReductionResult> {
    if !z.y.is_finite() || z.y <= 0.0 {
        return Err(Error::NonPositiveHeight);
    }
    let inv = gamma_inv();
    let mut red = Reducer::new();
    let mut cur = *z;
    let mut iterations = 0usize;
    loop {
        iterations += 1;
        if iterations > MAX_REDUCTION_ITERATIONS {
            return Err(Error::NonConvergence(MAX_REDUCTION_ITERATIONS));
        }
        // Recenter: translate by w = -(1+i)n so the nearest point of
        // 1 + (1+i)Z[i] becomes 1 itself.
        let (n, _) = nearest_coset_step(cur.x());
        if !n.is_zero() {
            let w = GaussianInt::one_plus_i().mul(&n).neg();
            let t = translation(w);
            cur = red.apply(&t, &cur);
            // (1+i)-lattice translations split over the two generators:
            // -(1+i)n = T_{1+i}^(-n_re) T_{1-i}^(n_im).
            use num_traits::ToPrimitive;
            red.push("T_1+i", -n.re.to_i64().expect("bounded geometry"));
            red.push("T_1-i", n.im.to_i64().expect("bounded geometry"));
        }
        let r2 = (cur.x() - Complex64::new(1.0, 0.0)).norm_sqr() + cur.y * cur.y;
        if r2 < 2.0 - eps {
            // Strictly inside the isometric sphere: invert. The height
            // gains the factor 2 / r2 > 1.
            cur = red.apply(&inv, &cur);
            red.push("gamma_inv", 1);
        } else {
            break;
        }
    }
    // Quarter-turn about 1 moving x into the triangle; the smallest
    // power wins ties on the boundary.
    let rot = t_one_minus_i().mul(&rotation_r());
    let mut x = cur.x();
    let mut chosen = None;
    for k in 0..4u32 {
        if in_triangle_g(x.re, x.im, eps) {
            chosen = Some(k);
            break;
        }
        x = Complex64::new(0.0, 1.0) * x + Complex64::new(1.0, -1.0);
    }
    let k = chosen.expect("some quarter-turn lands in the triangle");
    if k > 0 {
        let rk = rot.pow(k);
        cur = red.apply(&rk, &cur);
        red.push("T_1-i*R", k as i64);
    }
    red.normalize_sign();

    debug_assert!(in_f(&cur, eps.max(1e-12)));
    debug_assert!(orthogonal::gamma_membership(&red.witness)?.is_some());
    let replayed = flt_apply(&red.witness, z);
    debug_assert!(
        hyperbolic_distance(&replayed, &cur) < 1e-6,
        "witness replay agrees with the tracked point"
    );
    let _ = replayed;
    Ok(ReductionResult {
        gamma: red.witness,
        point: cur,
        word: red.word,
        iterations,
    })
}

/// Reduce a point into the Picard domain of SL2(Z[i]), returning an
/// exact unimodular Gaussian witness.
pub fn reduce_picard(z: &H3Point, eps: f64) -> Result<ReductionResult> {
    if !z.y.is_finite() || z.y <= 0.0 {
        return Err(Error::NonPositiveHeight);
    }
    let s = inversion_s();
    // diag(i, -i) acts on the boundary as x -> -x.
    let point_flip = Mat2::from_gaussian_entries(
        GaussianInt::i(),
        GaussianInt::zero(),
        GaussianInt::zero(),
        GaussianInt::i().neg(),
    );
    let mut red = Reducer::new();
    let mut cur = *z;
    let mut iterations = 0usize;
    loop {
        iterations += 1;
        if iterations > MAX_REDUCTION_ITERATIONS {
            return Err(Error::NonConvergence(MAX_REDUCTION_ITERATIONS));
        }
        let (n, _) = nearest_gaussian_step(cur.x());
        if !n.is_zero() {
            let t = translation(n.neg());
            cur = red.apply(&t, &cur);
            use num_traits::ToPrimitive;
            red.push("T_1", -n.re.to_i64().expect("bounded geometry"));
            red.push("T_i", -n.im.to_i64().expect("bounded geometry"));
        }
        if cur.x2 < 0.0 {
            cur = red.apply(&point_flip, &cur);
            red.push("N", 1);
        }
        if cur.x1 * cur.x1 + cur.x2 * cur.x2 + cur.y * cur.y < 1.0 - eps {
            cur = red.apply(&s, &cur);
            red.push("S", 1);
        } else {
            break;
        }
    }
    red.normalize_sign();

    debug_assert!(in_picard(&cur, eps.max(1e-12)));
    debug_assert!(red.witness.is_gaussian() && red.witness.is_sl2());
    Ok(ReductionResult {
        gamma: red.witness,
        point: cur,
        word: red.word,
        iterations,
    })
}
