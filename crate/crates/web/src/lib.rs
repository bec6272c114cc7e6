//! WebAssembly bindings for the static demo page in `www/`.
//!
//! Every exported function returns a JSON string; the plain Rust versions
//! in [`ops`] are what the bindings call and what the host tests exercise.

use wasm_bindgen::prelude::*;

pub mod ops;

fn js(r: Result<String, String>) -> Result<String, JsValue> {
    r.map_err(|e| JsValue::from_str(&e))
}

/// Witness drawing of a family member: `{svg, drawing, seg, claim, style, valid}`.
#[wasm_bindgen]
pub fn witness(family: &str, k: usize, style: &str) -> Result<String, JsValue> {
    js(ops::witness(family, k, style))
}

/// Draws a graph given in the text format with `bi3d` or `bend`.
#[wasm_bindgen]
pub fn draw_graph(graph: &str, alg: &str) -> Result<String, JsValue> {
    js(ops::draw_graph(graph, alg))
}

/// Validates and counts a drawing in the JSON format.
#[wasm_bindgen]
pub fn check_drawing(drawing: &str, style: &str) -> Result<String, JsValue> {
    js(ops::check_drawing(drawing, style))
}

#[wasm_bindgen]
pub fn families() -> String {
    ops::families()
}
