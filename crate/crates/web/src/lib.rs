//! WebAssembly bindings for the browser demo in `www/`.
//!
//! Each operation has a plain Rust form returning JSON text (tested on the
//! host) and a `wasm_bindgen` wrapper that turns errors into JS exceptions.

use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

use chevalley::closed_form::closed_constant;
use chevalley::folding::{fold, folded_table, fold_for};
use chevalley::io::RootSystemDocument;
use chevalley::{
    build_cartan, build_inductive, default_epsilon, folding_source, generate_roots, CartanMatrix, CartanType, Root,
    SignFunction,
};

/// Largest rank accepted from the page, to keep a click responsive.
const MAX_RANK: usize = 12;

fn parse_type(label: &str) -> Result<CartanType, String> {
    let ty: CartanType = label.trim().parse().map_err(|e: chevalley::Error| e.to_string())?;
    if ty.rank() > MAX_RANK {
        return Err(format!("rank {} is above the demo limit of {MAX_RANK}", ty.rank()));
    }
    Ok(ty)
}

fn epsilon(cm: &CartanMatrix, flipped: bool) -> SignFunction {
    let eps = default_epsilon(cm);
    if flipped {
        eps.flip()
    } else {
        eps
    }
}

/// Roots, Cartan matrix and sign function of a type.
pub fn root_system_json(label: &str, flipped: bool) -> Result<String, String> {
    let cm = build_cartan(parse_type(label)?);
    let rs = generate_roots(&cm);
    let doc = RootSystemDocument::new(&rs);
    let mut v = serde_json::to_value(&doc).map_err(|e| e.to_string())?;
    v["epsilon"] = json!(epsilon(&cm, flipped).values());
    v["compact"] = json!(rs.roots().iter().map(Root::to_string).collect::<Vec<_>>());
    Ok(v.to_string())
}

/// `N(alpha, beta)` from the inductive table, with the root string, and the
/// same constant computed by the closed formula (A, D, E) or by folding
/// (B, C, F, G).
pub fn structure_constant_json(label: &str, flipped: bool, alpha: &str, beta: &str) -> Result<String, String> {
    let ty = parse_type(label)?;
    let cm = build_cartan(ty);
    let rs = generate_roots(&cm);
    let eps = epsilon(&cm, flipped);
    let find = |s: &str| -> Result<usize, String> {
        let r: Root = s.trim().parse().map_err(|e: chevalley::Error| e.to_string())?;
        rs.find(&r).ok_or_else(|| format!("{r} is not a root of {ty}"))
    };
    let (a, b) = (find(alpha)?, find(beta)?);
    let table = build_inductive(&rs, &eps).map_err(|e| e.to_string())?;
    let mut out = json!({
        "type": ty.to_string(),
        "alpha": rs.root(a).to_string(),
        "beta": rs.root(b).to_string(),
    });
    if a == b || b == rs.neg(a) {
        out["sum"] = Value::Null;
        out["N"] = json!(0);
        if b == rs.neg(a) {
            out["coroot"] = json!(table.opposite(a));
            out["height"] = json!(rs.height(a));
        }
        return Ok(out.to_string());
    }
    let (p, q) = rs.string_lengths(a, b).map_err(|e| e.to_string())?;
    out["p"] = json!(p);
    out["q"] = json!(q);
    let Some(s) = rs.sum(a, b) else {
        out["sum"] = Value::Null;
        out["N"] = json!(0);
        return Ok(out.to_string());
    };
    let n = table.constant(a, b);
    out["sum"] = json!(rs.root(s).to_string());
    out["N"] = json!(n);
    if ty.is_simply_laced() {
        out["closed"] = json!(closed_constant(&rs, &eps, a, b).map_err(|e| e.to_string())?);
    } else {
        let (parent, auto) = folding_source(ty).map_err(|e| e.to_string())?;
        let fs = fold(&generate_roots(&parent), &epsilon(&parent, flipped), &auto).map_err(|e| e.to_string())?;
        let ft = folded_table(&fs).map_err(|e| e.to_string())?;
        out["folded"] = json!(ft.constant(a, b));
        out["parent"] = json!(parent.cartan_type().to_string());
    }
    Ok(out.to_string())
}

/// Orbit table of the fold producing `target` (B, C, F or G).
pub fn fold_summary_json(target: &str) -> Result<String, String> {
    let fs = fold_for(parse_type(target)?).map_err(|e| e.to_string())?;
    let rows: Vec<Value> = fs
        .orbit_table()
        .iter()
        .map(|r| {
            json!({
                "members": r.members.iter().map(Root::to_string).collect::<Vec<_>>(),
                "restriction": r.restriction,
                "text": r.to_string(),
            })
        })
        .collect();
    Ok(json!({
        "parent": fs.parent().cartan().cartan_type().to_string(),
        "target": fs.folded_cartan().cartan_type().to_string(),
        "order": fs.order(),
        "orbits": fs.automorphism().labelled_orbits(),
        "folded_cartan": fs.folded_cartan().entries(),
        "rows": rows,
    })
    .to_string())
}

#[wasm_bindgen(js_name = rootSystem)]
pub fn root_system(label: &str, flipped: bool) -> Result<String, JsError> {
    root_system_json(label, flipped).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen(js_name = structureConstant)]
pub fn structure_constant(label: &str, flipped: bool, alpha: &str, beta: &str) -> Result<String, JsError> {
    structure_constant_json(label, flipped, alpha, beta).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen(js_name = foldSummary)]
pub fn fold_summary(target: &str) -> Result<String, JsError> {
    fold_summary_json(target).map_err(|e| JsError::new(&e))
}
