//! graph6 encoding of simple undirected graphs.
//!
//! A graph6 line is a size header followed by the upper triangle of the
//! adjacency matrix, column by column: `(0,1), (0,2), (1,2), (0,3), ...`.
//! Bits are packed six per byte, most significant first, zero padded, and
//! every byte is offset by 63 so the line is printable ASCII.
//!
//! Header forms: `n + 63` for `n <= 62`; `126` plus three bytes (18 bits)
//! for `n <= 258047`; `126 126` plus six bytes (36 bits) beyond that.

use crate::error::{Error, Result};
use crate::graph::Graph;

const BIAS: u8 = 63;
const MAX_BYTE: u8 = 126;
const SHORT_MAX: usize = 62;
const MEDIUM_MAX: usize = 258_047;
const LONG_MAX: usize = (1 << 36) - 1;

fn malformed(msg: impl Into<String>) -> Error {
    Error::Graph6(msg.into())
}

fn data_len(n: usize) -> usize {
    let bits = n * n.saturating_sub(1) / 2;
    bits.div_ceil(6)
}

fn push_header(out: &mut Vec<u8>, n: usize) {
    if n <= SHORT_MAX {
        out.push(n as u8 + BIAS);
    } else if n <= MEDIUM_MAX {
        out.push(MAX_BYTE);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + BIAS);
        }
    } else {
        assert!(n <= LONG_MAX, "graph6 cannot encode order {n}");
        out.extend([MAX_BYTE, MAX_BYTE]);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + BIAS);
        }
    }
}

/// Returns `(n, header_len)`.
fn read_header(bytes: &[u8]) -> Result<(usize, usize)> {
    let group = |b: &[u8]| -> Result<usize> {
        b.iter().try_fold(0usize, |acc, &c| {
            if !(BIAS..=MAX_BYTE).contains(&c) {
                return Err(malformed(format!("header byte {c} outside 63..126")));
            }
            Ok((acc << 6) | (c - BIAS) as usize)
        })
    };
    match bytes {
        [] => Err(malformed("empty line")),
        [MAX_BYTE, MAX_BYTE, rest @ ..] => {
            let digits = rest.get(..6).ok_or_else(|| malformed("truncated 8-byte header"))?;
            let n = group(digits)?;
            if n <= MEDIUM_MAX {
                return Err(malformed("non-canonical 8-byte header"));
            }
            Ok((n, 8))
        }
        [MAX_BYTE, rest @ ..] => {
            let digits = rest.get(..3).ok_or_else(|| malformed("truncated 4-byte header"))?;
            let n = group(digits)?;
            if n <= SHORT_MAX {
                return Err(malformed("non-canonical 4-byte header"));
            }
            Ok((n, 4))
        }
        [c, ..] if (BIAS..MAX_BYTE).contains(c) => Ok(((c - BIAS) as usize, 1)),
        [c, ..] => Err(malformed(format!("header byte {c} outside 63..126"))),
    }
}

/// Decodes one graph6 line. Surrounding whitespace and an optional
/// `>>graph6<<` prefix are accepted.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let text = text.trim();
    let text = text.strip_prefix(">>graph6<<").unwrap_or(text);
    let bytes = text.as_bytes();
    let (n, header_len) = read_header(bytes)?;
    let data = &bytes[header_len..];
    let expected = data_len(n);
    if data.len() != expected {
        return Err(malformed(format!(
            "order {n} needs {expected} data bytes, found {}",
            data.len()
        )));
    }
    if let Some(&c) = data.iter().find(|c| !(BIAS..=MAX_BYTE).contains(*c)) {
        return Err(malformed(format!("data byte {c} outside 63..126")));
    }

    let total_bits = n * n.saturating_sub(1) / 2;
    let mut edges = Vec::new();
    let (mut i, mut j) = (0u32, 1u32);
    for k in 0..total_bits {
        let byte = data[k / 6] - BIAS;
        if byte & (0x20 >> (k % 6)) != 0 {
            edges.push((i, j));
        }
        i += 1;
        if i == j {
            i = 0;
            j += 1;
        }
    }
    if total_bits % 6 != 0 {
        let last = data[expected - 1] - BIAS;
        let pad_mask = (1u8 << (6 - total_bits % 6)) - 1;
        if last & pad_mask != 0 {
            return Err(malformed("nonzero padding bits"));
        }
    }
    // Column-major order yields edges sorted by (j, i); normalize to (i, j).
    edges.sort_unstable();
    Ok(Graph::from_normalized(n, edges))
}

/// Encodes `g` as a graph6 line (without trailing newline).
pub fn write_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::with_capacity(8 + data_len(n));
    push_header(&mut out, n);
    let start = out.len();
    out.resize(start + data_len(n), 0);
    for (u, v) in g.edges() {
        // Bit position of (u, v), u < v, in column-major upper-triangle order.
        let k = v * (v - 1) / 2 + u;
        out[start + k / 6] |= 0x20 >> (k % 6);
    }
    for b in &mut out[start..] {
        *b += BIAS;
    }
    String::from_utf8(out).expect("graph6 output is ASCII")
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Independent encoder: builds the literal bit string, pads it, and
    /// slices it into 6-character groups.
    fn oracle_encode(n: usize, edges: &[(usize, usize)]) -> String {
        assert!(n <= 62);
        let mut bits = String::new();
        for j in 1..n {
            for i in 0..j {
                let present = edges.contains(&(i, j)) || edges.contains(&(j, i));
                bits.push(if present { '1' } else { '0' });
            }
        }
        while bits.len() % 6 != 0 {
            bits.push('0');
        }
        let mut out = String::new();
        out.push((n as u8 + 63) as char);
        for chunk in bits.as_bytes().chunks(6) {
            let v = u8::from_str_radix(std::str::from_utf8(chunk).unwrap(), 2).unwrap();
            out.push((v + 63) as char);
        }
        out
    }

    #[test]
    fn small_examples() {
        let k2 = parse_graph6("A_").unwrap();
        assert_eq!((k2.order(), k2.size()), (2, 1));
        let e2 = parse_graph6("A?").unwrap();
        assert_eq!((e2.order(), e2.size()), (2, 0));
        let k1 = parse_graph6("@").unwrap();
        assert_eq!((k1.order(), k1.size()), (1, 0));
        assert_eq!(oracle_encode(2, &[(0, 1)]), "A_");
        assert_eq!(oracle_encode(2, &[]), "A?");
        assert_eq!(oracle_encode(1, &[]), "@");
        assert_eq!(write_graph6(&k2), "A_");
        assert_eq!(write_graph6(&e2), "A?");
        assert_eq!(write_graph6(&Graph::empty(0)), "?");
    }

    #[test]
    fn matches_oracle_on_fixed_graphs() {
        let cases: Vec<(usize, Vec<(usize, usize)>)> = vec![
            (5, vec![(0, 2), (0, 4), (1, 3), (3, 4)]),
            (4, vec![(0, 1), (1, 2), (2, 3)]),
            (7, (0..7).flat_map(|i| (i + 1..7).map(move |j| (i, j))).collect()),
            (13, vec![(0, 12), (5, 6), (11, 12)]),
        ];
        for (n, edges) in cases {
            let g = Graph::from_edge_list(n, edges.iter().copied()).unwrap();
            let expected = oracle_encode(n, &edges);
            assert_eq!(write_graph6(&g), expected);
            assert_eq!(parse_graph6(&expected).unwrap(), g);
        }
        // Known reference string for the 5-vertex graph with edges
        // 0-2, 0-4, 1-3, 3-4.
        assert_eq!(oracle_encode(5, &[(0, 2), (0, 4), (1, 3), (3, 4)]), "DQc");
    }

    #[test]
    fn extended_header() {
        let g = Graph::from_edge_list(100, [(0, 99), (42, 43)]).unwrap();
        let s = write_graph6(&g);
        assert_eq!(&s.as_bytes()[..4], &[126, 63, 63 + 1, 63 + 36]);
        assert_eq!(s.len(), 4 + (100 * 99 / 2usize).div_ceil(6));
        assert_eq!(parse_graph6(&s).unwrap(), g);
    }

    #[test]
    fn rejects_malformed() {
        assert!(parse_graph6("").is_err());
        // trailing padding bit set: K2 uses one bit, '@'+1 sets the last one
        assert!(matches!(parse_graph6("A@"), Err(Error::Graph6(_))));
        // wrong length
        assert!(parse_graph6("A").is_err());
        assert!(parse_graph6("A__").is_err());
        // byte outside range
        assert!(parse_graph6("A ").is_err());
        assert!(parse_graph6("B\x7f").is_err());
        // non-canonical extended header
        assert!(parse_graph6("~??B").is_err());
        // truncated extended header
        assert!(parse_graph6("~?").is_err());
    }

    #[test]
    fn accepts_header_prefix_and_whitespace() {
        assert_eq!(parse_graph6(">>graph6<<A_\n").unwrap().size(), 1);
    }
}
