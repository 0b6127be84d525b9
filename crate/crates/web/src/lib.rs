//! wasm-bindgen exports for the demo page in `www/`. Every export takes a
//! spec string and returns a JSON string; failures come back as
//! `{"error": "..."}` so the page never has to catch exceptions.

use nicepar::classify::is_nice;
use nicepar::jordan::{dimension_report, jordan_form};
use nicepar::parabolic::coloring_to_blocks;
use nicepar::richardson::{build_matrix, RichardsonMatrix};
use nicepar::{Error, ParabolicSpec};
use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

fn respond(r: Result<Value, Error>) -> String {
    match r {
        Ok(v) => v.to_string(),
        Err(e) => json!({ "error": e.to_string() }).to_string(),
    }
}

fn parse(spec: &str) -> Result<ParabolicSpec, Error> {
    spec.trim().parse()
}

#[wasm_bindgen]
pub fn classify(spec: &str) -> String {
    respond(parse(spec).map(|s| {
        let v = is_nice(&s);
        let blocks = coloring_to_blocks(&s).ok();
        json!({
            "spec": s.to_string(),
            "blocks": blocks.as_ref().map(|b| b.blocks().to_vec()),
            "nice": v.nice,
            "rule": v.rule.tag(),
        })
    }))
}

#[wasm_bindgen]
pub fn jordan(spec: &str) -> String {
    respond(parse(spec).and_then(|s| {
        let b = coloring_to_blocks(&s)?;
        let d = dimension_report(&b)?;
        Ok(json!({
            "spec": s.to_string(),
            "blocks": b.blocks(),
            "partition": d.partition.parts(),
            "dual": d.dual.parts(),
            "ranks": jordan_form(&b)?.ranks,
            "centralizer_dim": d.centralizer_dim,
            "levi_dim": d.levi_dim,
            "nice": d.nice(),
        }))
    }))
}

/// Dense grid of the Richardson matrix with block boundaries and the
/// `gl_N` root of every chosen position.
#[wasm_bindgen]
pub fn richardson_grid(spec: &str) -> String {
    respond(parse(spec).and_then(|s| {
        let b = coloring_to_blocks(&s)?;
        let m = build_matrix(&b)?;
        let mut grid = vec![vec![0i8; m.size]; m.size];
        for e in &m.entries {
            grid[e.row - 1][e.col - 1] = e.value;
        }
        let roots: Vec<Value> = m
            .support_roots
            .iter()
            .map(|&(i, j)| json!({ "row": i, "col": j, "root": RichardsonMatrix::root_label(i, j) }))
            .collect();
        Ok(json!({
            "spec": s.to_string(),
            "blocks": m.blocks,
            "size": m.size,
            "grid": grid,
            "roots": roots,
        }))
    }))
}
