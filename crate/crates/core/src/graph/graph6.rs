//! graph6 encoding.
//!
//! The order header uses one byte (`n + 63`) for `n <= 62` and the
//! `~` prefix with three 6-bit groups for `63 <= n <= 258047`; only
//! orders up to [`MAX_ORDER`](super::MAX_ORDER) can be decoded. The
//! upper triangle is read column by column (`(0,1), (0,2), (1,2), ...`),
//! packed big-endian into 6-bit groups, each offset by 63.

use super::{Graph, GraphError, MAX_ORDER};

pub fn graph6_encode(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(b'~');
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + 63);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for v in 1..n {
        for u in 0..v {
            acc = acc << 1 | g.has_edge(u, v) as u8;
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
    String::from_utf8(out).expect("graph6 output is ASCII")
}

pub fn graph6_decode(input: &[u8]) -> Result<Graph, GraphError> {
    let input = input.strip_prefix(b">>graph6<<").unwrap_or(input);
    let input = trim_newline(input);
    let bad = |msg: &str| GraphError::Graph6(msg.to_string());
    let first = *input.first().ok_or_else(|| bad("empty input"))?;
    let (n, body) = if first == b'~' {
        if input.get(1) == Some(&b'~') {
            return Err(bad("orders above 258047 are not supported"));
        }
        if input.len() < 4 {
            return Err(bad("truncated order header"));
        }
        let mut n = 0usize;
        for &b in &input[1..4] {
            n = n << 6 | sextet(b)? as usize;
        }
        (n, &input[4..])
    } else {
        (sextet(first)? as usize, &input[1..])
    };
    if n > MAX_ORDER {
        return Err(GraphError::OrderTooLarge {
            order: n,
            max: MAX_ORDER,
        });
    }
    let bit_count = n * n.saturating_sub(1) / 2;
    let byte_count = bit_count.div_ceil(6);
    if body.len() < byte_count {
        return Err(bad("truncated adjacency bit field"));
    }
    if body.len() > byte_count {
        return Err(bad("trailing bytes after adjacency bit field"));
    }
    let mut g = Graph::new(n)?;
    let mut k = 0;
    for v in 1..n {
        for u in 0..v {
            let byte = sextet(body[k / 6])?;
            if byte >> (5 - k % 6) & 1 == 1 {
                g.add_edge(u, v)?;
            }
            k += 1;
        }
    }
    if bit_count % 6 != 0 {
        let last = sextet(body[byte_count - 1])?;
        if last & ((1 << (6 - bit_count % 6)) - 1) != 0 {
            return Err(bad("nonzero padding bits"));
        }
    }
    Ok(g)
}

fn sextet(b: u8) -> Result<u8, GraphError> {
    if (63..=126).contains(&b) {
        Ok(b - 63)
    } else {
        Err(GraphError::Graph6(format!(
            "byte {b:#04x} outside the printable graph6 range"
        )))
    }
}

fn trim_newline(mut s: &[u8]) -> &[u8] {
    while let Some((&last, rest)) = s.split_last() {
        if last == b'\n' || last == b'\r' {
            s = rest;
        } else {
            break;
        }
    }
    s
}
