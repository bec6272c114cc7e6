use serde_json::{json, Value};

use segforge::construct::{draw_bicubic_3d, draw_bicubic_bend, draw_witness, witness_styles, Claim};
use segforge::drawing::{audit, decompose, from_json, to_json, to_svg, validate};
use segforge::families::FamilyId;
use segforge::geom::generic_project;
use segforge::{Drawing, DrawingStyle, Graph};

fn err<E: ToString>(e: E) -> String {
    e.to_string()
}

fn svg_of(d: &Drawing) -> Result<String, String> {
    if d.dim() == 3 {
        to_svg(&generic_project(d).map_err(err)?).map_err(err)
    } else {
        to_svg(d).map_err(err)
    }
}

fn counts(d: &Drawing, g: &Graph) -> Result<Value, String> {
    let seg = decompose(d).map_err(err)?.count();
    if !g.is_cubic() {
        return Ok(json!({ "seg": seg, "b": d.bend_count() }));
    }
    let a = audit(d, g).map_err(err)?;
    Ok(json!({
        "seg": seg,
        "f": a.counts.flat,
        "t": a.counts.tripods,
        "b": a.counts.bends,
        "identity": a.identity_holds(),
    }))
}

/// Families that have witness drawings, with their styles.
pub fn families() -> String {
    let list: Vec<Value> = FamilyId::ALL
        .iter()
        .filter(|f| !witness_styles(**f).is_empty())
        .map(|f| json!({ "name": f.name(), "styles": witness_styles(*f).iter().map(|s| s.to_string()).collect::<Vec<_>>() }))
        .collect();
    Value::Array(list).to_string()
}

pub fn witness(family: &str, k: usize, style: &str) -> Result<String, String> {
    let family: FamilyId = family.parse().map_err(err)?;
    let style = if style.is_empty() { None } else { Some(style.parse::<DrawingStyle>()?) };
    let w = draw_witness(family, k, style).map_err(err)?;
    let valid = validate(&w.drawing, &w.graph, w.style).map_err(err)?.is_valid();
    let claim = match w.claim {
        Claim::Exact(n) => format!("= {n}"),
        Claim::AtMost(n) => format!("<= {n}"),
    };
    Ok(json!({
        "svg": svg_of(&w.drawing)?,
        "drawing": to_json(&w.drawing),
        "counts": counts(&w.drawing, &w.graph)?,
        "claim": claim,
        "style": w.style.to_string(),
        "valid": valid,
    })
    .to_string())
}

pub fn draw_graph(graph: &str, alg: &str) -> Result<String, String> {
    let g = Graph::parse(graph).map_err(err)?;
    let (d, style) = match alg {
        "bi3d" => (draw_bicubic_3d(&g).map_err(err)?, DrawingStyle::Free3d),
        "bend" => (draw_bicubic_bend(&g).map_err(err)?, DrawingStyle::Bend2d),
        other => return Err(format!("unknown algorithm `{other}`")),
    };
    let valid = validate(&d, &g, style).map_err(err)?.is_valid();
    Ok(json!({
        "svg": svg_of(&d)?,
        "drawing": to_json(&d),
        "counts": counts(&d, &g)?,
        "style": style.to_string(),
        "valid": valid,
    })
    .to_string())
}

pub fn check_drawing(drawing: &str, style: &str) -> Result<String, String> {
    let d = from_json(drawing).map_err(err)?;
    let style: DrawingStyle = style.parse()?;
    let g = d.graph();
    let report = validate(&d, &g, style).map_err(err)?;
    Ok(json!({
        "valid": report.is_valid(),
        "report": report.to_string(),
        "counts": counts(&d, &g)?,
    })
    .to_string())
}
