//! Sampling branches and surfaces for export. Maps are evaluated exactly at
//! rational grid points; conversion to `f64` happens only when writing.

use std::fmt::Write as _;

use num_traits::ToPrimitive;

use super::{Branch, DiscriminantError};
use crate::{QPoly, Rational};

/// `n` evenly spaced rationals from `lo` to `hi` inclusive.
pub fn grid(lo: &Rational, hi: &Rational, n: usize) -> Result<Vec<Rational>, DiscriminantError> {
    if n < 2 {
        return Err(DiscriminantError::Invalid("resolution must be at least 2".into()));
    }
    let step = (hi - lo) / Rational::from_integer(((n - 1) as i64).into());
    Ok((0..n)
        .map(|i| lo + &step * Rational::from_integer((i as i64).into()))
        .collect())
}

fn f(r: &Rational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

/// Quad mesh of a two-parameter map.
#[derive(Debug, Clone, PartialEq)]
pub struct Mesh {
    pub vertices: Vec<[f64; 3]>,
    /// Zero-based vertex indices, counter-clockwise in parameter space.
    pub faces: Vec<[usize; 4]>,
}

impl Mesh {
    pub fn to_obj(&self) -> String {
        let mut out = String::new();
        for v in &self.vertices {
            let _ = writeln!(out, "v {} {} {}", v[0], v[1], v[2]);
        }
        for q in &self.faces {
            let _ = writeln!(out, "f {} {} {} {}", q[0] + 1, q[1] + 1, q[2] + 1, q[3] + 1);
        }
        out
    }
}

/// Samples of a one-parameter map.
#[derive(Debug, Clone, PartialEq)]
pub struct Polyline {
    pub rows: Vec<(f64, [f64; 3])>,
}

impl Polyline {
    pub fn to_csv(&self) -> String {
        let mut out = String::from("param,a1,a2,value\n");
        for (p, v) in &self.rows {
            let _ = writeln!(out, "{p},{},{},{}", v[0], v[1], v[2]);
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum MeshOutput {
    Surface(Mesh),
    Curve(Polyline),
}

impl MeshOutput {
    /// OBJ for surfaces, CSV for curves.
    pub fn render(&self) -> String {
        match self {
            MeshOutput::Surface(m) => m.to_obj(),
            MeshOutput::Curve(c) => c.to_csv(),
        }
    }

    pub fn extension(&self) -> &'static str {
        match self {
            MeshOutput::Surface(_) => "obj",
            MeshOutput::Curve(_) => "csv",
        }
    }
}

/// Samples a map with one or two parameters over `ranges`.
pub fn mesh_map(
    map: &[QPoly; 3],
    ranges: &[(Rational, Rational)],
    resolution: usize,
) -> Result<MeshOutput, DiscriminantError> {
    let arity = map[0].context().arity();
    if ranges.len() != arity {
        return Err(DiscriminantError::Invalid(format!(
            "{arity} parameter(s) but {} range(s)",
            ranges.len()
        )));
    }
    let eval = |pt: &[Rational]| [f(&map[0].eval(pt)), f(&map[1].eval(pt)), f(&map[2].eval(pt))];
    match arity {
        1 => {
            let ts = grid(&ranges[0].0, &ranges[0].1, resolution)?;
            Ok(MeshOutput::Curve(Polyline {
                rows: ts.iter().map(|t| (f(t), eval(std::slice::from_ref(t)))).collect(),
            }))
        }
        2 => {
            let ps = grid(&ranges[0].0, &ranges[0].1, resolution)?;
            let qs = grid(&ranges[1].0, &ranges[1].1, resolution)?;
            let n = resolution;
            let mut vertices = Vec::with_capacity(n * n);
            for p in &ps {
                for q in &qs {
                    vertices.push(eval(&[p.clone(), q.clone()]));
                }
            }
            let mut faces = Vec::with_capacity((n - 1) * (n - 1));
            for i in 0..n - 1 {
                for j in 0..n - 1 {
                    let k = i * n + j;
                    faces.push([k, k + n, k + n + 1, k + 1]);
                }
            }
            Ok(MeshOutput::Surface(Mesh { vertices, faces }))
        }
        _ => Err(DiscriminantError::Invalid(
            "only one- or two-parameter maps can be meshed".into(),
        )),
    }
}

pub fn mesh_branch(
    br: &Branch,
    ranges: &[(Rational, Rational)],
    resolution: usize,
) -> Result<MeshOutput, DiscriminantError> {
    mesh_map(&br.map, ranges, resolution)
}
