//! Text formats: edge lists, witness structures and OV instances.
//!
//! Blank lines and lines starting with `#` are ignored everywhere. Line
//! numbers in errors are 1-based and refer to the original text.

use std::fmt::Write as _;

use crate::error::{parse_err, Error, Result};
use crate::graph::Graph;
use crate::reductions::OvInstance;
use crate::set::VertexSet;
use crate::witness::{Shape, WitnessStructure};

/// Non-empty, non-comment lines with their line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn numbers<const N: usize>(line: usize, s: &str) -> Result<[usize; N]> {
    let parts: Vec<&str> = s.split_whitespace().collect();
    if parts.len() != N {
        return Err(parse_err(line, format!("expected {N} integers, found {:?}", s)));
    }
    let mut out = [0; N];
    for (slot, p) in out.iter_mut().zip(parts) {
        *slot = p
            .parse()
            .map_err(|_| parse_err(line, format!("not a non-negative integer: {p:?}")))?;
    }
    Ok(out)
}

/// Header `n m`, then `m` lines `u v` with 0-based ids.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = content_lines(text);
    let (hline, header) = lines.next().ok_or_else(|| parse_err(1, "missing header `n m`"))?;
    let [n, m] = numbers::<2>(hline, header)?;
    let mut edges = Vec::with_capacity(m);
    let mut seen = std::collections::HashSet::new();
    let mut last_line = hline;
    for (line, s) in lines {
        last_line = line;
        if edges.len() == m {
            return Err(parse_err(line, format!("more than the declared {m} edges")));
        }
        let [u, v] = numbers::<2>(line, s)?;
        if u >= n || v >= n {
            return Err(parse_err(line, format!("vertex {} out of range for n = {n}", u.max(v))));
        }
        if u == v {
            return Err(parse_err(line, format!("self-loop at {u}")));
        }
        if !seen.insert((u.min(v), u.max(v))) {
            return Err(parse_err(line, format!("duplicate edge {u} {v}")));
        }
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(parse_err(
            last_line,
            format!("declared {m} edges, found {}", edges.len()),
        ));
    }
    Graph::new(n, edges).map_err(|e| parse_err(hline, e.to_string()))
}

pub fn render_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.vertex_count(), g.edge_count());
    for &(u, v) in g.edges() {
        writeln!(out, "{u} {v}").expect("writing to a string");
    }
    out
}

/// `shape`, `length` and `cost` header lines, then `i: v1 v2 ...` per part.
pub fn emit_witness(w: &WitnessStructure) -> String {
    let mut out = format!("shape {}\nlength {}\ncost {}\n", w.shape, w.len(), w.cost());
    for (i, p) in w.parts.iter().enumerate() {
        let members: Vec<String> = p.iter().map(|v| v.to_string()).collect();
        writeln!(out, "{}: {}", i + 1, members.join(" ")).expect("writing to a string");
    }
    out
}

pub fn parse_witness(text: &str) -> Result<WitnessStructure> {
    let mut shape = None;
    let mut length = None;
    let mut cost = None;
    let mut parts: Vec<VertexSet> = Vec::new();
    let mut last_line = 1;
    for (line, s) in content_lines(text) {
        last_line = line;
        if let Some((index, members)) = s.split_once(':') {
            let index: usize = index
                .trim()
                .parse()
                .map_err(|_| parse_err(line, format!("bad part index {:?}", index.trim())))?;
            if index != parts.len() + 1 {
                return Err(parse_err(line, format!("expected part {}, found {index}", parts.len() + 1)));
            }
            let mut part = VertexSet::new();
            for tok in members.split_whitespace() {
                let v: usize = tok
                    .parse()
                    .map_err(|_| parse_err(line, format!("bad vertex {tok:?}")))?;
                if !part.insert(v) {
                    return Err(parse_err(line, format!("vertex {v} listed twice")));
                }
            }
            parts.push(part);
            continue;
        }
        let (key, value) = s
            .split_once(char::is_whitespace)
            .ok_or_else(|| parse_err(line, format!("unrecognised line {s:?}")))?;
        let value = value.trim();
        let number = || {
            value
                .parse::<usize>()
                .map_err(|_| parse_err(line, format!("bad {key} value {value:?}")))
        };
        match key {
            "shape" => {
                shape = Some(match value {
                    "path" => Shape::Path,
                    "cycle" => Shape::Cycle,
                    _ => return Err(parse_err(line, format!("unknown shape {value:?}"))),
                })
            }
            "length" => length = Some((line, number()?)),
            "cost" => cost = Some((line, number()?)),
            _ => return Err(parse_err(line, format!("unknown key {key:?}"))),
        }
    }
    let shape = shape.ok_or_else(|| parse_err(last_line, "missing `shape` line"))?;
    let w = WitnessStructure::new(shape, parts);
    if let Some((line, l)) = length {
        if l != w.len() {
            return Err(parse_err(line, format!("length {l} but {} parts", w.len())));
        }
    }
    if let Some((line, c)) = cost {
        if w.parts.iter().any(|p| p.is_empty()) || c != w.cost() {
            return Err(parse_err(line, format!("stated cost {c} does not match the parts")));
        }
    }
    Ok(w)
}

/// `n d`, then `n` lines of `d` space-separated bits for X, then `n` for Y.
pub fn parse_ov(text: &str) -> Result<OvInstance> {
    let mut lines = content_lines(text);
    let (hline, header) = lines.next().ok_or_else(|| parse_err(1, "missing header `n d`"))?;
    let [n, d] = numbers::<2>(hline, header)?;
    let mut vectors = Vec::with_capacity(2 * n);
    for (line, s) in lines {
        if vectors.len() == 2 * n {
            return Err(parse_err(line, format!("more than the declared {} vectors", 2 * n)));
        }
        let bits = s
            .split_whitespace()
            .map(|t| match t {
                "0" => Ok(false),
                "1" => Ok(true),
                _ => Err(parse_err(line, format!("not a bit: {t:?}"))),
            })
            .collect::<Result<Vec<bool>>>()?;
        if bits.len() != d {
            return Err(parse_err(line, format!("expected {d} bits, found {}", bits.len())));
        }
        vectors.push(bits);
    }
    if vectors.len() != 2 * n {
        return Err(parse_err(hline, format!("declared {} vectors, found {}", 2 * n, vectors.len())));
    }
    let ys = vectors.split_off(n);
    OvInstance::new(vectors, ys).map_err(|e| match e {
        Error::InvalidInstance(m) => parse_err(hline, m),
        other => other,
    })
}

pub fn render_ov(inst: &OvInstance) -> String {
    let mut out = format!("{} {}\n", inst.n(), inst.d());
    for v in inst.xs().iter().chain(inst.ys()) {
        let bits: Vec<&str> = v.iter().map(|&b| if b { "1" } else { "0" }).collect();
        writeln!(out, "{}", bits.join(" ")).expect("writing to a string");
    }
    out
}
