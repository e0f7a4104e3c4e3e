//! graph6 and edge-list text formats.
//!
//! graph6 reference: <https://users.cecs.anu.edu.au/~bdm/data/formats.txt>.
//! Only the single-byte size prefix (n <= 62) is supported; that covers
//! everything this crate solves exactly.

use crate::error::{Error, Result};
use crate::graph::Graph;

pub const GRAPH6_MAX_N: usize = 62;

/// Parses one graph6 line.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let bytes = text.trim_end_matches(['\r', '\n']).as_bytes();
    if bytes.is_empty() {
        return Err(Error::parse(0, "empty input"));
    }
    let b0 = bytes[0];
    if b0 == b'~' {
        return Err(Error::parse(0, "multi-byte size prefix (n > 62) unsupported"));
    }
    if !(63..=125).contains(&b0) {
        return Err(Error::parse(0, format!("size byte {b0} out of range 63..=125")));
    }
    let n = (b0 - 63) as usize;
    if n == 0 {
        return Err(Error::parse(0, "graph of order 0 unsupported"));
    }
    let nbits = n * (n - 1) / 2;
    let nbytes = nbits.div_ceil(6);
    if bytes.len() != 1 + nbytes {
        return Err(Error::parse(
            bytes.len().min(1 + nbytes),
            format!("expected {} bytes for n={n}, got {}", 1 + nbytes, bytes.len()),
        ));
    }
    let mut g = Graph::new(n)?;
    let mut bit = 0usize;
    // bits run over the upper triangle column by column
    for v in 1..n {
        for u in 0..v {
            let byte = bytes[1 + bit / 6];
            if !(63..=126).contains(&byte) {
                return Err(Error::parse(1 + bit / 6, format!("byte {byte} out of range 63..=126")));
            }
            if (byte - 63) >> (5 - bit % 6) & 1 == 1 {
                g.add_edge(u, v)?;
            }
            bit += 1;
        }
    }
    // padding bits of the final byte must be zero
    if nbits % 6 != 0 {
        let last = bytes[1 + nbytes - 1] - 63;
        let pad = 6 - nbits % 6;
        if last & ((1 << pad) - 1) != 0 {
            return Err(Error::parse(nbytes, "trailing bits not zero-padded"));
        }
    }
    Ok(g)
}

pub fn emit_graph6(g: &Graph) -> Result<String> {
    let n = g.n();
    if n > GRAPH6_MAX_N {
        return Err(Error::Unsupported(format!("graph6 output limited to n <= 62, got {n}")));
    }
    let nbits = n * (n - 1) / 2;
    let mut out = vec![63 + n as u8];
    let mut acc = 0u8;
    let mut filled = 0usize;
    for v in 1..n {
        for u in 0..v {
            acc = (acc << 1) | u8::from(g.has_edge(u, v));
            filled += 1;
            if filled == 6 {
                out.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
    debug_assert_eq!(out.len(), 1 + nbits.div_ceil(6));
    Ok(String::from_utf8(out).unwrap())
}

/// Parses the edge-list format: first line `n m`, then `m` lines `u v`
/// with `0 <= u < v < n`.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut offset = 0usize;
    let mut lines = Vec::new();
    for line in text.lines() {
        lines.push((offset, line));
        offset += line.len() + 1;
    }
    let mut it = lines.iter().filter(|(_, l)| !l.trim().is_empty());
    let &(off, header) = it.next().ok_or_else(|| Error::parse(0, "empty input"))?;
    let mut nums = header.split_whitespace();
    let n: usize = parse_num(nums.next(), off, "n")?;
    let m: usize = parse_num(nums.next(), off, "m")?;
    if nums.next().is_some() {
        return Err(Error::parse(off, "header must be exactly `n m`"));
    }
    let mut g = Graph::new(n)?;
    let mut count = 0usize;
    for &(off, line) in it {
        let mut nums = line.split_whitespace();
        let u: usize = parse_num(nums.next(), off, "u")?;
        let v: usize = parse_num(nums.next(), off, "v")?;
        if nums.next().is_some() {
            return Err(Error::parse(off, "edge line must be exactly `u v`"));
        }
        if u >= v {
            return Err(Error::parse(off, format!("edges must satisfy u < v, got {u} {v}")));
        }
        g.add_edge(u, v).map_err(|e| Error::parse(off, e.to_string()))?;
        count += 1;
    }
    if count != m {
        return Err(Error::parse(offset, format!("header promised {m} edges, found {count}")));
    }
    Ok(g)
}

fn parse_num(tok: Option<&str>, offset: usize, what: &str) -> Result<usize> {
    tok.ok_or_else(|| Error::parse(offset, format!("missing {what}")))?
        .parse()
        .map_err(|e| Error::parse(offset, format!("bad {what}: {e}")))
}

pub fn emit_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.m());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

/// Input format auto-detection: a first line starting with a digit is an
/// edge list, anything else is graph6.
pub fn parse_auto(text: &str) -> Result<Graph> {
    let first = text.trim_start().bytes().next();
    match first {
        Some(b) if b.is_ascii_digit() => parse_edge_list(text),
        _ => parse_graph6(text),
    }
}
