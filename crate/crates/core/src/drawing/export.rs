use std::fmt::Write;

use crate::geom::format_q;

use super::{decompose, Drawing, DrawingError};

/// SVG rendering of a planar drawing: one `<path>` per maximal segment and a
/// circle per vertex.
pub fn to_svg(d: &Drawing) -> Result<String, DrawingError> {
    if d.dim() != 2 {
        return Err(DrawingError::DimensionMismatch { expected: 2, found: d.dim() });
    }
    let dec = decompose(d)?;
    let mut pts: Vec<[f64; 2]> = d.vertices().iter().map(|p| xy(&p.to_f64())).collect();
    for (_, _, bends) in d.edges() {
        pts.extend(bends.iter().map(|p| xy(&p.to_f64())));
    }
    let (mut lo, mut hi) = ([f64::MAX; 2], [f64::MIN; 2]);
    for p in &pts {
        for i in 0..2 {
            lo[i] = lo[i].min(p[i]);
            hi[i] = hi[i].max(p[i]);
        }
    }
    if pts.is_empty() {
        lo = [0.0; 2];
        hi = [1.0; 2];
    }
    let span = (hi[0] - lo[0]).max(hi[1] - lo[1]).max(1e-9);
    let size = 600.0;
    let margin = 20.0;
    let k = (size - 2.0 * margin) / span;
    let map = |p: [f64; 2]| (margin + (p[0] - lo[0]) * k, size - margin - (p[1] - lo[1]) * k);

    let mut s = String::new();
    writeln!(s, r#"<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" viewBox="0 0 {size} {size}">"#).unwrap();
    writeln!(s, r#"<g fill="none" stroke="black" stroke-width="2">"#).unwrap();
    for seg in &dec.segments {
        let (x0, y0) = map(xy(&seg.start.to_f64()));
        let (x1, y1) = map(xy(&seg.end.to_f64()));
        writeln!(s, r#"<path d="M {x0:.3} {y0:.3} L {x1:.3} {y1:.3}"/>"#).unwrap();
    }
    writeln!(s, "</g>").unwrap();
    writeln!(s, r#"<g fill="white" stroke="black">"#).unwrap();
    for (i, p) in d.vertices().iter().enumerate() {
        let (x, y) = map(xy(&p.to_f64()));
        writeln!(s, r#"<circle cx="{x:.3}" cy="{y:.3}" r="4"><title>{i}</title></circle>"#).unwrap();
    }
    writeln!(s, "</g>\n</svg>").unwrap();
    Ok(s)
}

fn xy(c: &[f64]) -> [f64; 2] {
    [c[0], c[1]]
}

/// Line-set text: a point list (vertices first, then bends) followed by one
/// index polyline per edge.
pub fn to_lines3d(d: &Drawing) -> String {
    let mut points: Vec<String> = Vec::new();
    let fmt = |p: &crate::geom::Point| {
        let z = p.z();
        format!("{} {} {}", format_q(p.x()), format_q(p.y()), format_q(&z))
    };
    for p in d.vertices() {
        points.push(fmt(p));
    }
    let mut lines = Vec::new();
    for (u, v, bends) in d.edges() {
        let mut idx = vec![u];
        for b in bends {
            points.push(fmt(b));
            idx.push(points.len() - 1);
        }
        idx.push(v);
        lines.push(idx);
    }
    let mut s = format!("# lines3d\npoints {}\n", points.len());
    for p in &points {
        s.push_str(p);
        s.push('\n');
    }
    s.push_str(&format!("polylines {}\n", lines.len()));
    for l in &lines {
        let parts: Vec<String> = l.iter().map(ToString::to_string).collect();
        s.push_str(&format!("{} {}\n", l.len(), parts.join(" ")));
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::Point;
    use crate::graph::Graph;

    #[test]
    fn svg_has_one_path_per_segment() {
        let g = Graph::from_edges(3, &[(0, 1), (1, 2)]);
        let d = Drawing::straight(2, vec![Point::int2(0, 0), Point::int2(1, 1), Point::int2(2, 2)], &g).unwrap();
        let svg = to_svg(&d).unwrap();
        assert_eq!(svg.matches("<path").count(), 1);
        assert_eq!(svg.matches("<circle").count(), 3);
    }

    #[test]
    fn lines3d_lists_bends_after_vertices() {
        let mut d = Drawing::new(3, vec![Point::int3(0, 0, 0), Point::int3(2, 0, 0)]).unwrap();
        d.add_edge(0, 1, vec![Point::int3(1, 1, 1)]).unwrap();
        assert_eq!(to_lines3d(&d), "# lines3d\npoints 3\n0 0 0\n2 0 0\n1 1 1\npolylines 1\n3 0 2 1\n");
    }
}
