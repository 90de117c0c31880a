//! The graph6 text encoding.
//!
//! A line is the order `N(n)` followed by the upper triangle of the
//! adjacency matrix read column by column (`x(0,1), x(0,2), x(1,2), x(0,3),
//! ..`), packed into 6-bit groups, each printed as the byte `63 + group`.
//! Orders up to 62 use one byte; orders up to 258047 use `~` and three more
//! bytes. The 8-byte form for larger orders is rejected.

use alloc::string::String;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest order representable in the short (one byte) form.
pub const SHORT_FORM_MAX: usize = 62;
/// Largest order this codec accepts.
pub const MAX_ORDER: usize = 258_047;

const HEADER: &str = ">>graph6<<";

fn err(offset: usize, reason: &'static str) -> Error {
    Error::Graph6 { offset, reason }
}

fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

pub fn encode(g: &Graph) -> String {
    let n = g.order();
    assert!(n <= MAX_ORDER, "graph6 supports orders up to {MAX_ORDER}");
    let mut out = Vec::with_capacity(4 + pair_count(n).div_ceil(6));
    if n <= SHORT_FORM_MAX {
        out.push(63 + n as u8);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(63 + ((n >> shift) & 0x3f) as u8);
        }
    }
    let mut group = 0u8;
    let mut filled = 0;
    for v in 1..n {
        for u in 0..v {
            group = group << 1 | g.has_edge(u, v) as u8;
            filled += 1;
            if filled == 6 {
                out.push(63 + group);
                group = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(63 + (group << (6 - filled)));
    }
    // every byte is in 63..=126
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}

/// Decodes one graph6 line. A trailing line terminator and a leading
/// `>>graph6<<` header are accepted.
pub fn decode(line: &str) -> Result<Graph> {
    let line = line.strip_suffix('\n').unwrap_or(line);
    let line = line.strip_suffix('\r').unwrap_or(line);
    let (skip, body) = match line.strip_prefix(HEADER) {
        Some(rest) => (HEADER.len(), rest.as_bytes()),
        None => (0, line.as_bytes()),
    };
    let at = |i: usize| skip + i;

    for (i, &b) in body.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(err(at(i), "byte outside the graph6 range 63..=126"));
        }
    }
    let (n, mut pos) = match body.first() {
        None => return Err(err(at(0), "empty input")),
        Some(&126) => {
            if body.get(1) == Some(&126) {
                return Err(err(at(1), "unsupported 8-byte order form"));
            }
            if body.len() < 4 {
                return Err(err(at(body.len()), "truncated order field"));
            }
            let n = body[1..4]
                .iter()
                .fold(0usize, |acc, &b| acc << 6 | (b - 63) as usize);
            if n <= SHORT_FORM_MAX {
                return Err(err(at(0), "long order form used for a short order"));
            }
            (n, 4)
        }
        Some(&b) => ((b - 63) as usize, 1),
    };

    let expected = pair_count(n).div_ceil(6);
    if body.len() < pos + expected {
        return Err(err(at(body.len()), "truncated adjacency data"));
    }
    if body.len() > pos + expected {
        return Err(err(at(pos + expected), "trailing bytes after adjacency data"));
    }

    let mut g = Graph::empty(n);
    let mut bit = 0;
    let mut group = 0u8;
    for v in 1..n {
        for u in 0..v {
            if bit % 6 == 0 {
                group = body[pos] - 63;
                pos += 1;
            }
            if group >> (5 - bit % 6) & 1 == 1 {
                g.add_edge_unchecked(u, v);
            }
            bit += 1;
        }
    }
    if bit % 6 != 0 {
        let pad = 6 - bit % 6;
        if group & ((1u8 << pad) - 1) != 0 {
            return Err(err(at(pos - 1), "nonzero padding bits"));
        }
    }
    g.finish();
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;

    #[test]
    fn small_fixtures() {
        assert_eq!(encode(&generators::complete(1)), "@");
        assert_eq!(encode(&generators::complete(3)), "Bw");
        assert_eq!(encode(&generators::path(3)), "Bg");
        assert_eq!(encode(&Graph::empty(0)), "?");
        assert_eq!(decode("Bw").unwrap(), generators::complete(3));
        assert_eq!(decode("Bg\n").unwrap(), generators::path(3));
        assert_eq!(decode(">>graph6<<@").unwrap(), generators::complete(1));
    }

    #[test]
    fn figure1_round_trip() {
        let g = generators::figure1();
        assert_eq!(decode(&encode(&g)).unwrap(), g);
    }

    #[test]
    fn long_form() {
        let g = generators::path(70);
        let s = encode(&g);
        assert_eq!(&s[..4], "~?@E");
        assert_eq!(decode(&s).unwrap(), g);
    }

    #[test]
    fn malformed_lines() {
        assert_eq!(decode(""), Err(err(0, "empty input")));
        assert_eq!(decode("B"), Err(err(1, "truncated adjacency data")));
        assert_eq!(decode("Bww"), Err(err(2, "trailing bytes after adjacency data")));
        assert_eq!(decode("B "), Err(err(1, "byte outside the graph6 range 63..=126")));
        assert_eq!(decode("Bx"), Err(err(1, "nonzero padding bits")));
        assert_eq!(decode("~~??????"), Err(err(1, "unsupported 8-byte order form")));
        assert_eq!(decode("~?"), Err(err(2, "truncated order field")));
    }
}
