//! SVG pictures of polygons and OFF files of 3-dimensional polytopes.
//!
//! Both work in an orthonormal basis of the direction space of the affine
//! hull, so a polytope lying in a hyperplane (a weight polytope of type A)
//! is drawn in its own dimension. Vertex cycles come from the exact edge
//! graph; floating point only enters for coordinates and orientation.

use std::fmt::Write;

use horopoly::rootsys::RootSystem;
use horopoly::{Polytope, Vector};

use crate::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Svg,
    Off,
}

#[derive(Clone, Debug, Default)]
pub struct Overlay {
    /// Draw the root hyperplanes of this root system as dashed rays.
    pub walls: Option<RootSystem>,
    /// Mark the vertices with dots.
    pub points: bool,
    /// Number the vertices.
    pub labels: bool,
}

const SIZE: f64 = 400.0;
const MARGIN: f64 = 20.0;

/// `x` rounded to 12 significant digits, without trailing zeros. Values
/// below `1e-12` in size, rounding noise for these pictures, print as 0.
pub fn fmt_num(x: f64) -> String {
    if x.abs() < 1e-12 {
        return "0".into();
    }
    let rounded: f64 = format!("{x:.11e}").parse().expect("formatted float parses");
    format!("{rounded}")
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Orthonormal basis of the direction space, from Gram-Schmidt on the
/// projected standard basis vectors.
fn basis(p: &Polytope) -> Vec<Vec<f64>> {
    let proj = p.direction_projector();
    let m = p.ambient_dim();
    let mut out: Vec<Vec<f64>> = Vec::new();
    for i in 0..m {
        let mut v = proj.project(&Vector::unit(m, i)).to_f64();
        for b in &out {
            let c = dot(&v, b);
            v.iter_mut().zip(b).for_each(|(x, y)| *x -= c * y);
        }
        let len = dot(&v, &v).sqrt();
        if len > 1e-9 {
            out.push(v.into_iter().map(|x| x / len).collect());
        }
        if out.len() == p.affine_dim() {
            break;
        }
    }
    out
}

fn coords(basis: &[Vec<f64>], x: &[f64]) -> Vec<f64> {
    basis.iter().map(|b| dot(b, x)).collect()
}

/// Vertices of a polygon face in cyclic order, starting from its smallest
/// index and walking the edge graph.
fn cycle(members: &[usize], edges: &[(usize, usize)]) -> Vec<usize> {
    let local: Vec<(usize, usize)> =
        edges.iter().copied().filter(|(a, b)| members.contains(a) && members.contains(b)).collect();
    let mut order = vec![members[0]];
    let mut prev = usize::MAX;
    while order.len() < members.len() {
        let cur = *order.last().expect("nonempty");
        let next = local
            .iter()
            .filter_map(|&(a, b)| if a == cur { Some(b) } else if b == cur { Some(a) } else { None })
            .filter(|&n| n != prev && !order.contains(&n))
            .min()
            .expect("polygon edges form a cycle");
        prev = cur;
        order.push(next);
    }
    order
}

fn edges(p: &Polytope) -> Vec<(usize, usize)> {
    p.face_lattice()
        .into_iter()
        .filter(|f| f.dim() == 1)
        .map(|f| (f.vertex_indices()[0], f.vertex_indices()[1]))
        .collect()
}

fn signed_area(points: &[Vec<f64>]) -> f64 {
    (0..points.len())
        .map(|i| {
            let (a, b) = (&points[i], &points[(i + 1) % points.len()]);
            a[0] * b[1] - a[1] * b[0]
        })
        .sum()
}

pub fn render(p: &Polytope, format: Format, overlay: &Overlay) -> Result<String, CliError> {
    let dim = p.affine_dim();
    if dim > 3 {
        return Err(CliError::Precondition(format!("cannot render a polytope of dimension {dim}")));
    }
    match format {
        Format::Svg if dim == 2 => svg(p, overlay),
        Format::Off if dim == 3 => Ok(off(p)),
        Format::Svg => Err(CliError::Invalid(format!("svg needs a polygon, got dimension {dim}"))),
        Format::Off => Err(CliError::Invalid(format!("off needs a 3-dimensional polytope, got dimension {dim}"))),
    }
}

/// The default format for the dimension of `p`.
pub fn format_for(p: &Polytope) -> Result<Format, CliError> {
    match p.affine_dim() {
        2 => Ok(Format::Svg),
        3 => Ok(Format::Off),
        d => Err(CliError::Precondition(format!("cannot render a polytope of dimension {d}"))),
    }
}

fn svg(p: &Polytope, overlay: &Overlay) -> Result<String, CliError> {
    let basis = basis(p);
    let members: Vec<usize> = (0..p.vertices().len()).collect();
    let mut order = cycle(&members, &edges(p));
    let pts: Vec<Vec<f64>> = p.vertices().iter().map(|v| coords(&basis, &v.to_f64())).collect();
    let ordered: Vec<Vec<f64>> = order.iter().map(|&i| pts[i].clone()).collect();
    if signed_area(&ordered) < 0.0 {
        order[1..].reverse();
    }
    let radius = pts.iter().map(|c| dot(c, c).sqrt()).fold(0.0, f64::max).max(1e-12) * 1.15;
    let scale = (SIZE / 2.0 - MARGIN) / radius;
    let map = |c: &[f64]| (fmt_num(SIZE / 2.0 + scale * c[0]), fmt_num(SIZE / 2.0 - scale * c[1]));

    let mut out = String::new();
    writeln!(out, r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {SIZE} {SIZE}" width="{SIZE}" height="{SIZE}">"#).unwrap();
    if let Some(rs) = &overlay.walls {
        check_walls(p, rs)?;
        for alpha in rs.positive_roots() {
            let a = coords(&basis, &alpha.to_f64());
            let len = dot(&a, &a).sqrt();
            let dir = [-a[1] / len, a[0] / len];
            for s in [1.0, -1.0] {
                let end = [s * dir[0] * radius, s * dir[1] * radius];
                let (x0, y0) = map(&[0.0, 0.0]);
                let (x1, y1) = map(&end);
                writeln!(out, r#"  <line class="wall" x1="{x0}" y1="{y0}" x2="{x1}" y2="{y1}" stroke="gray" stroke-dasharray="4 4"/>"#).unwrap();
            }
        }
    }
    let path: Vec<String> = order
        .iter()
        .enumerate()
        .map(|(k, &i)| {
            let (x, y) = map(&pts[i]);
            format!("{}{x} {y}", if k == 0 { "M" } else { "L" })
        })
        .collect();
    writeln!(out, r#"  <path d="{} Z" fill="none" stroke="black"/>"#, path.join(" ")).unwrap();
    for &i in &order {
        let (x, y) = map(&pts[i]);
        if overlay.points {
            writeln!(out, r#"  <circle cx="{x}" cy="{y}" r="3"/>"#).unwrap();
        }
        if overlay.labels {
            writeln!(out, r#"  <text x="{x}" y="{y}" font-size="12" dx="4" dy="-4">{i}</text>"#).unwrap();
        }
    }
    out.push_str("</svg>\n");
    Ok(out)
}

fn check_walls(p: &Polytope, rs: &RootSystem) -> Result<(), CliError> {
    if rs.ambient_dim() != p.ambient_dim() || rs.rank() != p.affine_dim() {
        return Err(CliError::Invalid(format!("root system {} does not match the polytope", rs.label())));
    }
    Ok(())
}

/// OFF file: vertices in the 3-dimensional coordinates of the affine hull
/// and one outward-oriented cycle per facet. The header counts are
/// `f_0 f_2 f_1`.
fn off(p: &Polytope) -> String {
    let basis = basis(p);
    let pts: Vec<Vec<f64>> = p.vertices().iter().map(|v| coords(&basis, &v.to_f64())).collect();
    let edges = edges(p);
    let mut out = String::new();
    writeln!(out, "OFF").unwrap();
    writeln!(out, "{} {} {}", pts.len(), p.facets().len(), edges.len()).unwrap();
    for c in &pts {
        writeln!(out, "{}", c.iter().map(|x| fmt_num(*x)).collect::<Vec<_>>().join(" ")).unwrap();
    }
    for (i, h) in p.facets().iter().enumerate() {
        let mut order = cycle(p.facet_vertices(i), &edges);
        let outward: Vec<f64> = coords(&basis, &h.normal().to_f64()).into_iter().map(|x| -x).collect();
        let (a, b, c) = (&pts[order[0]], &pts[order[1]], &pts[order[2]]);
        let u: Vec<f64> = (0..3).map(|k| b[k] - a[k]).collect();
        let w: Vec<f64> = (0..3).map(|k| c[k] - b[k]).collect();
        let n = [u[1] * w[2] - u[2] * w[1], u[2] * w[0] - u[0] * w[2], u[0] * w[1] - u[1] * w[0]];
        if dot(&n, &outward) < 0.0 {
            order[1..].reverse();
        }
        let idx: Vec<String> = order.iter().map(|i| i.to_string()).collect();
        writeln!(out, "{} {}", order.len(), idx.join(" ")).unwrap();
    }
    out
}
