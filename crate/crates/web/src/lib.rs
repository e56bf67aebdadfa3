//! wasm-bindgen entry points for the browser demo. Every export returns a JSON
//! string; the plain functions in [`demo`] do the work and are testable natively.

pub mod demo;

use wasm_bindgen::prelude::*;

/// Parses `.agrp` text and checks the almost group axioms.
#[wasm_bindgen(js_name = verifyGroup)]
pub fn verify_group(text: &str) -> Result<String, JsError> {
    demo::verify_group(text).map_err(|e| JsError::new(&e))
}

/// Reverses `Φ_{α,P₁}Φ_{β,P₂}` for rank-one projections onto real directions
/// at angles `angle1`, `angle2` (radians).
#[wasm_bindgen(js_name = reversePair)]
pub fn reverse_pair(
    alpha_re: f64,
    alpha_im: f64,
    beta_re: f64,
    beta_im: f64,
    angle1: f64,
    angle2: f64,
) -> Result<String, JsError> {
    demo::reverse_pair(alpha_re, alpha_im, beta_re, beta_im, angle1, angle2)
        .map_err(|e| JsError::new(&e))
}

/// Multiplication table and self-duality checks of the bicrossproduct for a
/// named matched pair (`Z2`, `Z3`, `Z4`, `S3`).
#[wasm_bindgen(js_name = bicrossTable)]
pub fn bicross_table(pair: &str, dual: bool) -> Result<String, JsError> {
    demo::bicross_table(pair, dual).map_err(|e| JsError::new(&e))
}
