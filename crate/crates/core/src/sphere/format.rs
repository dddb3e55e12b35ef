//! Plain-text polytope files.
//!
//! ```text
//! n 4
//! # comment
//! f 0 1 2
//! f 0 1 3
//! f 0 2 3
//! f 1 2 3
//! ```
//!
//! Polyhedral files list faces as cycles, `c v1 v2 ... vk`; a file may mix `f`
//! and `c` lines. Vertices are 0-indexed and `#` starts a comment.

use std::fmt::Write;

use crate::error::{Error, Result};

use super::polyhedral::PolyhedralSphere;
use super::triangulation::{Face, Triangulation};
use super::Polytope;

pub fn parse_polytope(text: &str) -> Result<Polytope> {
    let mut declared = None;
    let mut cycles: Vec<Vec<usize>> = Vec::new();
    let mut all_triangles = true;
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.split('#').next().unwrap().trim();
        if line.is_empty() {
            continue;
        }
        let mut tokens = line.split_whitespace();
        let tag = tokens.next().unwrap();
        let nums: Vec<usize> = tokens
            .map(|tok| {
                tok.parse::<usize>()
                    .map_err(|_| Error::Parse { line: line_no, message: format!("invalid integer `{tok}`") })
            })
            .collect::<Result<_>>()?;
        match tag {
            "n" => {
                if declared.is_some() {
                    return Err(Error::Parse { line: line_no, message: "duplicate `n` line".into() });
                }
                if nums.len() != 1 {
                    return Err(Error::Parse { line: line_no, message: "expected `n <count>`".into() });
                }
                declared = Some(nums[0]);
            }
            "f" | "c" => {
                if declared.is_none() {
                    return Err(Error::Parse { line: line_no, message: "face before `n` line".into() });
                }
                if tag == "f" && nums.len() != 3 {
                    return Err(Error::Parse { line: line_no, message: "`f` needs exactly 3 vertices".into() });
                }
                if let Some(&v) = nums.iter().find(|&&v| v >= declared.unwrap()) {
                    return Err(Error::Parse {
                        line: line_no,
                        message: format!("vertex {v} out of range for n = {}", declared.unwrap()),
                    });
                }
                all_triangles &= nums.len() == 3;
                cycles.push(nums);
            }
            other => {
                return Err(Error::Parse { line: line_no, message: format!("unknown record `{other}`") });
            }
        }
    }
    let n = declared.ok_or(Error::Parse { line: 0, message: "missing `n` line".into() })?;
    let polytope = if all_triangles {
        let faces: Vec<Face> = cycles.iter().map(|c| [c[0], c[1], c[2]]).collect();
        Polytope::Simplicial(Triangulation::from_faces(&faces)?)
    } else {
        Polytope::Polyhedral(PolyhedralSphere::from_cycles(&cycles)?)
    };
    if polytope.n() != n {
        return Err(Error::NotASphere(format!("vertex {} lies in no face", polytope.n())));
    }
    Ok(polytope)
}

pub fn write_triangulation(t: &Triangulation) -> String {
    let mut s = format!("n {}\n", t.n());
    for f in t.faces() {
        writeln!(s, "f {} {} {}", f[0], f[1], f[2]).unwrap();
    }
    s
}

pub fn write_polyhedral(p: &PolyhedralSphere) -> String {
    let mut s = format!("n {}\n", p.n());
    for f in p.faces() {
        s.push('c');
        for v in f {
            write!(s, " {v}").unwrap();
        }
        s.push('\n');
    }
    s
}
