//! Text formats: the `mgf` multigraph format, graph6 for simple graphs, DOT
//! export, and the compact string form of canonical codes.
//!
//! `mgf`: first non-comment line `n m`, then `m` lines `u v k` meaning
//! `e(u, v) = k`. `#` starts a comment. Several blocks may follow each other.

use std::fmt::Write as _;

use crate::canon::CanonicalCode;
use crate::error::{Error, Result};
use crate::graph::Multigraph;

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, msg: msg.into() }
}

pub fn write_mgf(g: &Multigraph) -> String {
    let mut s = String::new();
    let pairs: Vec<_> = g.pairs().collect();
    writeln!(s, "{} {}", g.n(), pairs.len()).unwrap();
    for (u, v, k) in pairs {
        writeln!(s, "{u} {v} {k}").unwrap();
    }
    s
}

/// Parses a single `mgf` graph; trailing content other than comments is an error.
pub fn parse_mgf(text: &str) -> Result<Multigraph> {
    let mut blocks = parse_mgf_blocks(text)?;
    match blocks.len() {
        1 => Ok(blocks.pop().unwrap()),
        0 => Err(parse_err(1, "no graph found")),
        k => Err(parse_err(1, format!("expected one graph, found {k}"))),
    }
}

/// Parses consecutive `mgf` blocks.
pub fn parse_mgf_blocks(text: &str) -> Result<Vec<Multigraph>> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap().trim()))
        .filter(|(_, l)| !l.is_empty());
    let mut out = Vec::new();
    while let Some((lno, header)) = lines.next() {
        let nums = parse_numbers(lno, header)?;
        let [n, m] = nums[..] else {
            return Err(parse_err(lno, "header must be `n m`"));
        };
        let mut edges = Vec::with_capacity(m);
        for _ in 0..m {
            let (lno, line) = lines.next().ok_or_else(|| parse_err(lno, format!("expected {m} edge lines")))?;
            let nums = parse_numbers(lno, line)?;
            let [u, v, k] = nums[..] else {
                return Err(parse_err(lno, "edge line must be `u v k`"));
            };
            edges.push((u, v, k as u32));
        }
        out.push(Multigraph::build(n, &edges).map_err(|e| parse_err(lno, e.to_string()))?);
    }
    Ok(out)
}

fn parse_numbers(line: usize, s: &str) -> Result<Vec<usize>> {
    s.split_whitespace()
        .map(|t| t.parse::<usize>().map_err(|_| parse_err(line, format!("not a number: {t:?}"))))
        .collect()
}

/// Standard graph6 encoding of the underlying simple graph.
pub fn write_graph6(g: &Multigraph) -> String {
    let n = g.n();
    let mut bytes: Vec<u8> = Vec::new();
    if n <= 62 {
        bytes.push(n as u8 + 63);
    } else {
        bytes.push(126);
        for shift in [12, 6, 0] {
            bytes.push(((n >> shift) & 63) as u8 + 63);
        }
    }
    let mut acc = 0u8;
    let mut nbits = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | u8::from(g.mult(i, j) > 0);
            nbits += 1;
            if nbits == 6 {
                bytes.push(acc + 63);
                acc = 0;
                nbits = 0;
            }
        }
    }
    if nbits > 0 {
        bytes.push((acc << (6 - nbits)) + 63);
    }
    String::from_utf8(bytes).unwrap()
}

pub fn parse_graph6(line: &str) -> Result<Multigraph> {
    let line = line.trim();
    let line = line.strip_prefix(">>graph6<<").unwrap_or(line);
    let bytes = line.as_bytes();
    if bytes.is_empty() {
        return Err(parse_err(1, "empty graph6 string"));
    }
    if bytes.iter().any(|&b| !(63..=126).contains(&b)) {
        return Err(parse_err(1, "graph6 bytes must lie in 63..=126"));
    }
    let (n, rest) = if bytes[0] == 126 {
        if bytes.len() < 4 || bytes[1] == 126 {
            return Err(parse_err(1, "unsupported graph6 size prefix"));
        }
        let n = bytes[1..4].iter().fold(0usize, |a, &b| (a << 6) | (b - 63) as usize);
        (n, &bytes[4..])
    } else {
        ((bytes[0] - 63) as usize, &bytes[1..])
    };
    let need = (n * n.saturating_sub(1) / 2).div_ceil(6);
    if rest.len() != need {
        return Err(parse_err(1, format!("graph6 body for n={n} needs {need} bytes, got {}", rest.len())));
    }
    let mut g = Multigraph::empty(n)?;
    let mut bit = 0usize;
    for j in 1..n {
        for i in 0..j {
            let byte = rest[bit / 6] - 63;
            if byte & (1 << (5 - bit % 6)) != 0 {
                g = g.with_multiplicity(i, j, 1)?;
            }
            bit += 1;
        }
    }
    Ok(g)
}

/// Reads a graph given either as `mgf` text or as a single graph6 line.
pub fn parse_graph_auto(text: &str) -> Result<Multigraph> {
    let trimmed: Vec<&str> = text
        .lines()
        .map(|l| l.split('#').next().unwrap().trim())
        .filter(|l| !l.is_empty())
        .collect();
    let looks_graph6 = trimmed.len() == 1 && !trimmed[0].contains(char::is_whitespace) && trimmed[0].parse::<usize>().is_err();
    if looks_graph6 || text.trim_start().starts_with(">>graph6<<") {
        parse_graph6(trimmed.first().copied().unwrap_or(""))
    } else {
        parse_mgf(text)
    }
}

pub fn to_dot(g: &Multigraph, name: &str) -> String {
    let mut s = String::new();
    writeln!(s, "graph {name} {{").unwrap();
    for v in 0..g.n() {
        writeln!(s, "  {v};").unwrap();
    }
    for (u, v, k) in g.pairs() {
        if k == 1 {
            writeln!(s, "  {u} -- {v};").unwrap();
        } else {
            writeln!(s, "  {u} -- {v} [label={k}];").unwrap();
        }
    }
    s.push_str("}\n");
    s
}

const DIGITS: &[u8] = b"0123456789abcdefghijklmnopqrstuvwxyz";

/// `n:` followed by one base-36 digit per upper-triangle entry; a `/` suffix
/// carries vertex colours when any is nonzero. Falls back to comma-separated
/// decimals after `n=` when a multiplicity exceeds 35.
pub fn code_to_string(code: &CanonicalCode) -> String {
    let mut s = String::new();
    let small = code.upper.iter().chain(&code.colors).all(|&k| k < 36);
    if small {
        write!(s, "{}:", code.n).unwrap();
        s.extend(code.upper.iter().map(|&k| DIGITS[k as usize] as char));
        if code.colors.iter().any(|&c| c != 0) {
            s.push('/');
            s.extend(code.colors.iter().map(|&k| DIGITS[k as usize] as char));
        }
    } else {
        write!(s, "{}=", code.n).unwrap();
        let parts: Vec<String> = code.upper.iter().map(u32::to_string).collect();
        s.push_str(&parts.join(","));
        if code.colors.iter().any(|&c| c != 0) {
            let parts: Vec<String> = code.colors.iter().map(u32::to_string).collect();
            s.push('/');
            s.push_str(&parts.join(","));
        }
    }
    s
}

pub fn code_from_string(s: &str) -> Result<CanonicalCode> {
    let bad = |msg: &str| parse_err(1, format!("bad canonical code {s:?}: {msg}"));
    let (n_str, rest, small) = if let Some((a, b)) = s.split_once(':') {
        (a, b, true)
    } else if let Some((a, b)) = s.split_once('=') {
        (a, b, false)
    } else {
        return Err(bad("missing separator"));
    };
    let n: usize = n_str.parse().map_err(|_| bad("vertex count"))?;
    let (body, colors) = match rest.split_once('/') {
        Some((a, b)) => (a, Some(b)),
        None => (rest, None),
    };
    let decode = |t: &str| -> Result<Vec<u32>> {
        if small {
            t.chars()
                .map(|c| c.to_digit(36).ok_or_else(|| bad("digit")))
                .collect()
        } else if t.is_empty() {
            Ok(Vec::new())
        } else {
            t.split(',').map(|x| x.parse::<u32>().map_err(|_| bad("number"))).collect()
        }
    };
    let upper = decode(body)?;
    if upper.len() != n * n.saturating_sub(1) / 2 {
        return Err(bad("wrong length"));
    }
    let colors = match colors {
        Some(c) => decode(c)?,
        None => vec![0; n],
    };
    if colors.len() != n {
        return Err(bad("wrong colour count"));
    }
    Ok(CanonicalCode { n, colors, upper })
}
