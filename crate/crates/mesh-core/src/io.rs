//! OFF and OBJ mesh text formats, plus OBJ polyline export for paths.
//!
//! OFF layout: header line `OFF`, counts line `nv nf ne`, vertex lines
//! `x y z`, face lines `3 i j k`. OBJ uses `v`/`f` records with 1-based
//! indices. Floats are written with Rust's shortest round-trip formatting,
//! so write → read is exact.

use std::fmt::Write as _;
use std::path::Path;

use crate::error::MeshError;
use crate::polytope::Polytope;
use crate::Point3;

pub fn write_off(p: &Polytope) -> String {
    let mut s = String::new();
    s.push_str("OFF\n");
    let _ = writeln!(s, "{} {} {}", p.num_vertices(), p.num_facets(), p.num_edges());
    for v in p.vertices() {
        let _ = writeln!(s, "{} {} {}", v.x, v.y, v.z);
    }
    for f in p.facets() {
        let _ = writeln!(s, "3 {} {} {}", f[0], f[1], f[2]);
    }
    s
}

pub fn write_obj(p: &Polytope) -> String {
    let mut s = String::new();
    for v in p.vertices() {
        let _ = writeln!(s, "v {} {} {}", v.x, v.y, v.z);
    }
    for f in p.facets() {
        let _ = writeln!(s, "f {} {} {}", f[0] + 1, f[1] + 1, f[2] + 1);
    }
    s
}

/// OBJ polyline (`v` records plus one `l` record) for external path viewing.
pub fn write_obj_polyline(points: &[Point3]) -> String {
    let mut s = String::new();
    for v in points {
        let _ = writeln!(s, "v {} {} {}", v.x, v.y, v.z);
    }
    let indices: Vec<String> = (1..=points.len()).map(|i| i.to_string()).collect();
    let _ = writeln!(s, "l {}", indices.join(" "));
    s
}

pub fn parse_off(text: &str) -> Result<Polytope, MeshError> {
    let mut lines = meaningful_lines(text);
    let header = lines.next().ok_or_else(|| MeshError::MeshParse("empty OFF file".into()))?;
    if header.trim() != "OFF" {
        return Err(MeshError::MeshParse(format!("expected OFF header, got {header:?}")));
    }
    let counts = lines.next().ok_or_else(|| MeshError::MeshParse("missing counts line".into()))?;
    let mut it = counts.split_whitespace();
    let nv: usize = parse_num(it.next(), "vertex count")?;
    let nf: usize = parse_num(it.next(), "face count")?;
    let _ne: usize = parse_num(it.next().or(Some("0")), "edge count")?;

    let mut vertices = Vec::with_capacity(nv);
    for _ in 0..nv {
        let line = lines.next().ok_or_else(|| MeshError::MeshParse("truncated vertex list".into()))?;
        vertices.push(parse_vertex(line)?);
    }
    let mut facets = Vec::with_capacity(nf);
    for _ in 0..nf {
        let line = lines.next().ok_or_else(|| MeshError::MeshParse("truncated face list".into()))?;
        let mut it = line.split_whitespace();
        let arity: usize = parse_num(it.next(), "face arity")?;
        if arity != 3 {
            return Err(MeshError::MeshParse(format!("only triangular faces supported, got arity {arity}")));
        }
        let i: usize = parse_num(it.next(), "face index")?;
        let j: usize = parse_num(it.next(), "face index")?;
        let k: usize = parse_num(it.next(), "face index")?;
        facets.push([i, j, k]);
    }
    Polytope::from_parts(vertices, facets)
}

pub fn parse_obj(text: &str) -> Result<Polytope, MeshError> {
    let mut vertices = Vec::new();
    let mut facets = Vec::new();
    for line in meaningful_lines(text) {
        let mut it = line.split_whitespace();
        match it.next() {
            Some("v") => {
                let rest: Vec<&str> = it.collect();
                vertices.push(parse_vertex(&rest.join(" "))?);
            }
            Some("f") => {
                let idx: Result<Vec<usize>, MeshError> = it
                    .map(|tok| {
                        let head = tok.split('/').next().unwrap_or("");
                        head.parse::<usize>()
                            .map_err(|_| MeshError::MeshParse(format!("bad face index {tok:?}")))
                    })
                    .collect();
                let idx = idx?;
                if idx.len() != 3 {
                    return Err(MeshError::MeshParse(format!(
                        "only triangular faces supported, got {}-gon",
                        idx.len()
                    )));
                }
                if idx.iter().any(|&i| i == 0) {
                    return Err(MeshError::MeshParse("OBJ face indices are 1-based".into()));
                }
                facets.push([idx[0] - 1, idx[1] - 1, idx[2] - 1]);
            }
            _ => {} // ignore other records
        }
    }
    Polytope::from_parts(vertices, facets)
}

/// Loads OFF or OBJ based on the file extension (defaulting to OFF content sniffing).
pub fn load_mesh(path: &Path) -> Result<Polytope, MeshError> {
    let text = std::fs::read_to_string(path)?;
    match path.extension().and_then(|e| e.to_str()) {
        Some("obj") => parse_obj(&text),
        Some("off") => parse_off(&text),
        _ => {
            if text.trim_start().starts_with("OFF") {
                parse_off(&text)
            } else {
                parse_obj(&text)
            }
        }
    }
}

pub fn save_off(p: &Polytope, path: &Path) -> Result<(), MeshError> {
    std::fs::write(path, write_off(p))?;
    Ok(())
}

pub fn save_obj(p: &Polytope, path: &Path) -> Result<(), MeshError> {
    std::fs::write(path, write_obj(p))?;
    Ok(())
}

fn meaningful_lines(text: &str) -> impl Iterator<Item = &str> {
    text.lines()
        .map(|l| l.trim())
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
}

fn parse_num<T: std::str::FromStr>(tok: Option<&str>, what: &str) -> Result<T, MeshError> {
    tok.ok_or_else(|| MeshError::MeshParse(format!("missing {what}")))?
        .parse::<T>()
        .map_err(|_| MeshError::MeshParse(format!("bad {what}: {tok:?}")))
}

fn parse_vertex(line: &str) -> Result<Point3, MeshError> {
    let mut it = line.split_whitespace();
    let x: f64 = parse_num(it.next(), "vertex coordinate")?;
    let y: f64 = parse_num(it.next(), "vertex coordinate")?;
    let z: f64 = parse_num(it.next(), "vertex coordinate")?;
    if !(x.is_finite() && y.is_finite() && z.is_finite()) {
        return Err(MeshError::MeshParse("non-finite vertex coordinate".into()));
    }
    Ok(Point3::new(x, y, z))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hull::convex_hull;

    #[test]
    fn off_round_trip_exact() {
        let pts = vec![
            Point3::new(0.1 + 0.2, 1.0 / 3.0, 1.0),
            Point3::new(1.0, -1.0, -1.0),
            Point3::new(-1.0, 1.0, -1.0),
            Point3::new(-1.0, -1.0, 1.0),
            Point3::new(0.9, 0.9, 0.9),
        ];
        let p = convex_hull(&pts).unwrap();
        let text = write_off(&p);
        let q = parse_off(&text).unwrap();
        assert_eq!(p.num_vertices(), q.num_vertices());
        for (a, b) in p.vertices().iter().zip(q.vertices()) {
            assert_eq!(a, b); // shortest round-trip formatting is exact
        }
        assert_eq!(write_off(&q), text);
    }

    #[test]
    fn obj_round_trip() {
        let pts = vec![
            Point3::new(1.0, 1.0, 1.0),
            Point3::new(1.0, -1.0, -1.0),
            Point3::new(-1.0, 1.0, -1.0),
            Point3::new(-1.0, -1.0, 1.0),
        ];
        let p = convex_hull(&pts).unwrap();
        let q = parse_obj(&write_obj(&p)).unwrap();
        assert_eq!(p.num_facets(), q.num_facets());
    }

    #[test]
    fn malformed_off_rejected() {
        assert!(matches!(parse_off("not a mesh"), Err(MeshError::MeshParse(_))));
        assert!(matches!(parse_off("OFF\n3 1 0\n0 0 0\n1 0 0\n0 1 0\n4 0 1 2 0\n"), Err(MeshError::MeshParse(_))));
    }

    #[test]
    fn polyline_export() {
        let pts = vec![Point3::new(0.0, 0.0, 0.0), Point3::new(1.0, 0.5, 0.0)];
        let s = write_obj_polyline(&pts);
        assert!(s.contains("l 1 2"));
    }
}
