//! Browser bindings for the fundamental-domain explorer.
//!
//! Three operations back the demo page: reduce a point and get the
//! exact witness, export domain cross-sections for drawing, and analyze
//! a matrix (membership, coset, Hecke label). Everything crosses the
//! boundary as JSON strings so the page stays framework-free.

use wasm_bindgen::prelude::wasm_bindgen;

use ford_core::geometry::{export_domain, DomainTag};
use ford_core::hecke::{hecke_decompose, xi_classify};
use ford_core::hyperbolic::{reduce_gamma, reduce_picard, H2Point, H3Point};
use ford_core::matrix::Mat2;
use ford_core::orthogonal::{conj3, gamma_membership};
use ford_core::realform::{gamma_int_membership, reduce_gamma_int};

fn error_json(message: impl std::fmt::Display) -> String {
    serde_json::json!({ "error": message.to_string() }).to_string()
}

/// Reduce a point into the chosen fundamental domain. `group` is one of
/// "picard", "gamma", "gamma-int"; for "gamma-int" the x2 coordinate is
/// ignored and (x1, y) is treated as a half-plane point.
#[wasm_bindgen]
pub fn reduce_point(group: &str, x1: f64, x2: f64, y: f64, eps: f64) -> String {
    let eps = if eps > 0.0 {
        eps
    } else {
        ford_core::DEFAULT_EPS
    };
    let result = match group {
        "picard" => reduce_picard(&H3Point::new(x1, x2, y), eps)
            .map(|r| serde_json::to_string(&r).expect("serializable")),
        "gamma" => reduce_gamma(&H3Point::new(x1, x2, y), eps)
            .map(|r| serde_json::to_string(&r).expect("serializable")),
        "gamma-int" => reduce_gamma_int(&H2Point::new(x1, y), eps)
            .map(|r| serde_json::to_string(&r).expect("serializable")),
        other => return error_json(format!("unknown group '{other}'")),
    };
    result.unwrap_or_else(error_json)
}

/// Cross-sections and face data of a fundamental domain; `heights` is a
/// comma-separated list of y values.
#[wasm_bindgen]
pub fn domain_slices(which: &str, heights: &str) -> String {
    let tag = match DomainTag::parse(which) {
        Ok(tag) => tag,
        Err(e) => return error_json(e),
    };
    let ys: Vec<f64> = heights
        .split(',')
        .filter_map(|p| p.trim().parse::<f64>().ok())
        .collect();
    serde_json::to_string(&export_domain(tag, &ys)).expect("serializable")
}

/// Analyze a 2x2 matrix given as {"rows": [[..],[..]]} JSON: reduction
/// class, membership in the SO3(Z[i]) preimage, real-form membership
/// when the entries are real, and the Hecke orbit label for nonzero
/// non-unit determinants.
#[wasm_bindgen]
pub fn analyze_matrix(matrix_json: &str) -> String {
    let m = match Mat2::parse(matrix_json) {
        Ok(m) => m,
        Err(e) => return error_json(e),
    };
    let det = m.det();
    let mut out = serde_json::Map::new();
    out.insert(
        "det".into(),
        serde_json::to_value(&det).expect("serializable"),
    );
    if m.is_sl2() {
        match gamma_membership(&m) {
            Ok(label) => {
                out.insert("member".into(), label.is_some().into());
                out.insert(
                    "coset".into(),
                    label
                        .map(|l| l.to_string().into())
                        .unwrap_or(serde_json::Value::Null),
                );
            }
            Err(e) => return error_json(e),
        }
        if let Ok(image) = conj3(&m) {
            out.insert("conj3_gaussian".into(), image.is_gaussian().into());
        }
        if m.is_gaussian() {
            if let Ok(class) = xi_classify(&m) {
                out.insert(
                    "xi_class".into(),
                    serde_json::to_value(class).expect("enum"),
                );
            }
        }
        if m.is_real() {
            if let Ok(label) = gamma_int_membership(&m) {
                out.insert(
                    "real_coset".into(),
                    label
                        .map(|l| l.to_string().into())
                        .unwrap_or(serde_json::Value::Null),
                );
            }
        }
    } else if m.is_gaussian() && !det.is_zero() {
        match hecke_decompose(&m) {
            Ok(f) => {
                out.insert(
                    "hecke_gamma".into(),
                    serde_json::to_value(&f.gamma).expect("mat"),
                );
                out.insert(
                    "hecke_m".into(),
                    serde_json::to_value(&f.m).expect("gaussian"),
                );
                out.insert(
                    "hecke_x".into(),
                    serde_json::to_value(&f.x).expect("gaussian"),
                );
            }
            Err(e) => return error_json(e),
        }
    }
    serde_json::Value::Object(out).to_string()
}
