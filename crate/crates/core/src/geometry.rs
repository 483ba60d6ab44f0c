//! Geometry export of the fixed fundamental domains: vertices, face
//! data, and sampled cross-section polylines for drawing.
//!
//! Cross-sections of the two 3-dimensional domains at a height y are
//! planar regions of the form {theta in [lo, hi], r(y) <= rho <=
//! rho_max(theta)} in polar coordinates about the relevant sphere
//! center, so one sweep routine serves both. The 2-dimensional real
//! domain slices to x-intervals.

use serde::Serialize;

use crate::error::{Error, Result};

/// Number of angular samples in a full sweep.
const SWEEP_STEPS: usize = 192;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum DomainTag {
    Picard,
    Gamma,
    GammaInt,
}

impl DomainTag {
    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "picard" => Ok(DomainTag::Picard),
            "gamma" => Ok(DomainTag::Gamma),
            "gamma-int" | "gammaInt" | "gamma_int" => Ok(DomainTag::GammaInt),
            other => Err(Error::UnknownDomain(other.to_string())),
        }
    }
}

/// A vertex of the domain polytope; the cusp at infinity is a
/// distinguished tag, never a float.
#[derive(Debug, Clone, Serialize)]
#[serde(untagged)]
pub enum Vertex {
    Infinity { infinity: bool },
    Finite { coords: Vec<f64>, symbolic: String },
}

impl Vertex {
    fn finite(coords: &[f64], symbolic: &str) -> Self {
        Vertex::Finite {
            coords: coords.to_vec(),
            symbolic: symbolic.to_string(),
        }
    }

    fn infinity() -> Self {
        Vertex::Infinity { infinity: true }
    }
}

/// A bounding face: either an affine constraint on the boundary
/// coordinates or a hemisphere/circle constraint.
#[derive(Debug, Clone, Serialize)]
#[serde(tag = "type", rename_all = "kebab-case")]
pub enum Face {
    /// normal . x >= offset (or <= for `upper == true`), y-independent.
    Plane {
        normal: Vec<f64>,
        offset: f64,
        upper: bool,
        equation: String,
    },
    /// ||x - center||^2 + y^2 >= radius2.
    Hemisphere {
        center: Vec<f64>,
        radius2: f64,
        equation: String,
    },
}

/// Cross-section at one height: closed polyline loops (or, for the
/// 2-dimensional domain, degenerate two-point interval segments).
#[derive(Debug, Clone, Serialize)]
pub struct Slice {
    pub y: f64,
    pub loops: Vec<Vec<[f64; 2]>>,
}

#[derive(Debug, Clone, Serialize)]
pub struct DomainGeometry {
    pub which: DomainTag,
    pub vertices: Vec<Vertex>,
    pub faces: Vec<Face>,
    pub slices: Vec<Slice>,
}

/// Export the named fundamental domain, with cross-sections sampled at
/// the requested heights.
pub fn export_domain(which: DomainTag, slice_heights: &[f64]) -> DomainGeometry {
    match which {
        DomainTag::Gamma => DomainGeometry {
            which,
            vertices: vec![
                Vertex::finite(&[1.0, 0.0, std::f64::consts::SQRT_2], "1+sqrt2 j"),
                Vertex::finite(&[2.0, 0.0, 1.0], "2+j"),
                Vertex::finite(&[1.0, 1.0, 1.0], "1+i+j"),
                Vertex::infinity(),
            ],
            faces: vec![
                Face::Plane {
                    normal: vec![1.0, 0.0],
                    offset: 1.0,
                    upper: false,
                    equation: "x1 >= 1".into(),
                },
                Face::Plane {
                    normal: vec![0.0, 1.0],
                    offset: 0.0,
                    upper: false,
                    equation: "x2 >= 0".into(),
                },
                Face::Plane {
                    normal: vec![1.0, 1.0],
                    offset: 2.0,
                    upper: true,
                    equation: "x1 + x2 <= 2".into(),
                },
                Face::Hemisphere {
                    center: vec![1.0, 0.0],
                    radius2: 2.0,
                    equation: "||x - 1||^2 + y^2 >= 2".into(),
                },
            ],
            slices: slice_heights
                .iter()
                .map(|&y| Slice {
                    y,
                    loops: polar_sweep_loops(
                        [1.0, 0.0],
                        0.0,
                        std::f64::consts::FRAC_PI_2,
                        |theta| 1.0 / (theta.cos() + theta.sin()),
                        (2.0 - y * y).max(0.0).sqrt(),
                    ),
                })
                .collect(),
        },
        DomainTag::Picard => {
            let s3 = 3.0f64.sqrt() / 2.0;
            let s2 = 0.5f64.sqrt();
            DomainGeometry {
                which,
                vertices: vec![
                    Vertex::finite(&[0.5, 0.0, s3], "1/2 + sqrt(3)/2 j"),
                    Vertex::finite(&[-0.5, 0.0, s3], "-1/2 + sqrt(3)/2 j"),
                    Vertex::finite(&[0.5, 0.5, s2], "1/2 + i/2 + sqrt(1/2) j"),
                    Vertex::finite(&[-0.5, 0.5, s2], "-1/2 + i/2 + sqrt(1/2) j"),
                    Vertex::infinity(),
                ],
                faces: vec![
                    Face::Plane {
                        normal: vec![1.0, 0.0],
                        offset: -0.5,
                        upper: false,
                        equation: "x1 >= -1/2".into(),
                    },
                    Face::Plane {
                        normal: vec![1.0, 0.0],
                        offset: 0.5,
                        upper: true,
                        equation: "x1 <= 1/2".into(),
                    },
                    Face::Plane {
                        normal: vec![0.0, 1.0],
                        offset: 0.0,
                        upper: false,
                        equation: "x2 >= 0".into(),
                    },
                    Face::Plane {
                        normal: vec![0.0, 1.0],
                        offset: 0.5,
                        upper: true,
                        equation: "x2 <= 1/2".into(),
                    },
                    Face::Hemisphere {
                        center: vec![0.0, 0.0],
                        radius2: 1.0,
                        equation: "||z||^2 >= 1".into(),
                    },
                ],
                slices: slice_heights
                    .iter()
                    .map(|&y| Slice {
                        y,
                        loops: polar_sweep_loops(
                            [0.0, 0.0],
                            0.0,
                            std::f64::consts::PI,
                            picard_rho_max,
                            (1.0 - y * y).max(0.0).sqrt(),
                        ),
                    })
                    .collect(),
            }
        }
        DomainTag::GammaInt => DomainGeometry {
            which,
            vertices: vec![
                Vertex::finite(&[0.0, 1.0], "i"),
                Vertex::finite(&[2.0, 1.0], "2+i"),
                Vertex::infinity(),
            ],
            faces: vec![
                Face::Plane {
                    normal: vec![1.0],
                    offset: 0.0,
                    upper: false,
                    equation: "x >= 0".into(),
                },
                Face::Plane {
                    normal: vec![1.0],
                    offset: 2.0,
                    upper: true,
                    equation: "x <= 2".into(),
                },
                Face::Hemisphere {
                    center: vec![1.0],
                    radius2: 2.0,
                    equation: "(x-1)^2 + y^2 >= 2".into(),
                },
            ],
            slices: slice_heights.iter().map(|&y| gamma_int_slice(y)).collect(),
        },
    }
}

fn picard_rho_max(theta: f64) -> f64 {
    let c = theta.cos().abs();
    let s = theta.sin();
    let from_x = if c > 1e-12 { 0.5 / c } else { f64::INFINITY };
    let from_y = if s > 1e-12 { 0.5 / s } else { f64::INFINITY };
    from_x.min(from_y)
}

/// Boundary loops of {theta in [lo, hi], r <= rho <= rho_max(theta)}:
/// outer curve forward, inner arc backward, radial edges as straight
/// closing segments. An empty result means the slice is empty.
fn polar_sweep_loops(
    center: [f64; 2],
    theta_lo: f64,
    theta_hi: f64,
    rho_max: impl Fn(f64) -> f64,
    r: f64,
) -> Vec<Vec<[f64; 2]>> {
    let thetas: Vec<f64> = (0..=SWEEP_STEPS)
        .map(|k| theta_lo + (theta_hi - theta_lo) * k as f64 / SWEEP_STEPS as f64)
        .collect();
    let alive: Vec<bool> = thetas.iter().map(|&t| rho_max(t) >= r - 1e-12).collect();

    let point = |theta: f64, rho: f64| -> [f64; 2] {
        [center[0] + rho * theta.cos(), center[1] + rho * theta.sin()]
    };

    let mut loops = Vec::new();
    let mut k = 0;
    while k <= SWEEP_STEPS {
        if !alive[k] {
            k += 1;
            continue;
        }
        let start = k;
        while k < SWEEP_STEPS && alive[k + 1] {
            k += 1;
        }
        let end = k;
        let mut path: Vec<[f64; 2]> = Vec::new();
        for &t in &thetas[start..=end] {
            path.push(point(t, rho_max(t)));
        }
        if r > 1e-12 {
            for &t in thetas[start..=end].iter().rev() {
                path.push(point(t, r));
            }
        } else {
            path.push(center);
        }
        path.push(path[0]);
        loops.push(path);
        k += 1;
    }
    loops
}

/// Slice of the 2-dimensional real domain {0 <= x <= 2,
/// (x-1)^2 + y^2 >= 2} at height y: zero, one or two x-intervals,
/// emitted as two-point segments.
fn gamma_int_slice(y: f64) -> Slice {
    let r2 = 2.0 - y * y;
    let mut loops = Vec::new();
    if r2 <= 0.0 {
        loops.push(vec![[0.0, y], [2.0, y]]);
    } else {
        let r = r2.sqrt();
        if r < 1.0 {
            loops.push(vec![[0.0, y], [1.0 - r, y]]);
            loops.push(vec![[1.0 + r, y], [2.0, y]]);
        }
        // r >= 1 means the slice is empty: the domain starts at y = 1.
    }
    Slice { y, loops }
}

/// Minimal flat SVG rendering of exported slices, one path per loop.
pub fn slices_to_svg(geometry: &DomainGeometry) -> String {
    let mut min = [f64::INFINITY; 2];
    let mut max = [f64::NEG_INFINITY; 2];
    for slice in &geometry.slices {
        for path in &slice.loops {
            for p in path {
                for (axis, &v) in p.iter().enumerate() {
                    min[axis] = min[axis].min(v);
                    max[axis] = max[axis].max(v);
                }
            }
        }
    }
    if !min[0].is_finite() {
        min = [0.0, 0.0];
        max = [1.0, 1.0];
    }
    let pad = 0.1 * ((max[0] - min[0]).max(max[1] - min[1]).max(1e-3));
    let (x0, y0) = (min[0] - pad, min[1] - pad);
    let (w, h) = (max[0] - min[0] + 2.0 * pad, max[1] - min[1] + 2.0 * pad);
    let mut svg = format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"{x0} {y0} {w} {h}\" width=\"480\" height=\"480\">\n"
    );
    let colors = [
        "#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#8c564b", "#e377c2",
    ];
    for (idx, slice) in geometry.slices.iter().enumerate() {
        let color = colors[idx % colors.len()];
        for path in &slice.loops {
            let d: Vec<String> = path
                .iter()
                .enumerate()
                .map(|(i, p)| {
                    // Flip the second axis so larger values draw upward.
                    let cmd = if i == 0 { 'M' } else { 'L' };
                    format!("{cmd}{:.5},{:.5}", p[0], y0 + h - (p[1] - y0))
                })
                .collect();
            svg.push_str(&format!(
                "  <path d=\"{}\" fill=\"none\" stroke=\"{color}\" stroke-width=\"{:.4}\"/>\n",
                d.join(" "),
                0.01 * w.max(h),
            ));
        }
    }
    svg.push_str("</svg>\n");
    svg
}
