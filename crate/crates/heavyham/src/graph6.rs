//! graph6 encoding and decoding, bit-exact to the standard format:
//! 6-bit chunks over the column-major upper adjacency triangle, each
//! chunk offset by 63 into printable ASCII.

use thiserror::Error;

use crate::graph::Graph;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum Graph6Error {
    #[error("empty record")]
    Empty,
    #[error("illegal character {0:?} (graph6 uses ASCII 63..=126)")]
    IllegalChar(char),
    #[error("record truncated: expected {expected} payload characters, got {got}")]
    Truncated { expected: usize, got: usize },
    #[error("record has {got} payload characters, expected {expected}")]
    TrailingData { expected: usize, got: usize },
    #[error("nonzero padding bits")]
    BadPadding,
    #[error("unsupported vertex count {0}")]
    UnsupportedOrder(u64),
    #[error("line {line}: {source}")]
    AtLine {
        line: usize,
        #[source]
        source: Box<Graph6Error>,
    },
}

fn payload_len(n: usize) -> usize {
    (n * (n.saturating_sub(1)) / 2).div_ceil(6)
}

pub fn encode(g: &Graph) -> String {
    let n = g.n();
    let mut out = String::new();
    if n <= 62 {
        out.push((n as u8 + 63) as char);
    } else {
        // 126 then 18 bits big-endian in 6-bit chunks
        out.push('~');
        for shift in [12, 6, 0] {
            out.push(((n >> shift & 0x3f) as u8 + 63) as char);
        }
    }
    let mut chunk = 0u8;
    let mut filled = 0;
    for v in 1..n {
        for u in 0..v {
            chunk <<= 1;
            if g.adjacent(u, v) {
                chunk |= 1;
            }
            filled += 1;
            if filled == 6 {
                out.push((chunk + 63) as char);
                chunk = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        chunk <<= 6 - filled;
        out.push((chunk + 63) as char);
    }
    out
}

pub fn decode(record: &str) -> Result<Graph, Graph6Error> {
    let record = record.strip_prefix(">>graph6<<").unwrap_or(record);
    let bytes = record.trim_end().as_bytes();
    if bytes.is_empty() {
        return Err(Graph6Error::Empty);
    }
    for &b in bytes {
        if !(63..=126).contains(&b) {
            return Err(Graph6Error::IllegalChar(b as char));
        }
    }
    let (n, header_len) = if bytes[0] == b'~' {
        if bytes.len() >= 4 && bytes[1] == b'~' {
            return Err(Graph6Error::UnsupportedOrder(u64::MAX));
        }
        if bytes.len() < 4 {
            return Err(Graph6Error::Truncated {
                expected: 4,
                got: bytes.len(),
            });
        }
        let n = ((bytes[1] as usize - 63) << 12)
            | ((bytes[2] as usize - 63) << 6)
            | (bytes[3] as usize - 63);
        (n, 4)
    } else {
        ((bytes[0] - 63) as usize, 1)
    };
    if n == 0 {
        return Err(Graph6Error::UnsupportedOrder(0));
    }
    let expected = payload_len(n);
    let payload = &bytes[header_len..];
    if payload.len() < expected {
        return Err(Graph6Error::Truncated {
            expected,
            got: payload.len(),
        });
    }
    if payload.len() > expected {
        return Err(Graph6Error::TrailingData {
            expected,
            got: payload.len(),
        });
    }
    let mut g = Graph::empty(n);
    let mut bit_index = 0usize;
    let total_bits = n * (n - 1) / 2;
    let mut pairs = Vec::with_capacity(total_bits);
    for v in 1..n {
        for u in 0..v {
            pairs.push((u, v));
        }
    }
    for &b in payload {
        let chunk = b - 63;
        for k in (0..6).rev() {
            let bit = chunk >> k & 1;
            if bit_index < total_bits {
                if bit == 1 {
                    let (u, v) = pairs[bit_index];
                    g.add_edge_unchecked(u, v);
                }
            } else if bit == 1 {
                return Err(Graph6Error::BadPadding);
            }
            bit_index += 1;
        }
    }
    Ok(g)
}

/// Decodes one record per line, skipping blank lines; errors carry the
/// 1-based line number.
pub fn decode_lines(text: &str) -> Result<Vec<Graph>, Graph6Error> {
    let mut out = Vec::new();
    for (i, line) in text.lines().enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        let g = decode(line).map_err(|e| Graph6Error::AtLine {
            line: i + 1,
            source: Box::new(e),
        })?;
        out.push(g);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn the_three_vertex_single_edge_record() {
        let g = decode("B_").unwrap();
        assert_eq!(g.n(), 3);
        assert_eq!(g.edges(), vec![(0, 1)]);
        assert_eq!(encode(&g), "B_");
    }

    #[test]
    fn known_encodings() {
        // complete graph on 5 vertices
        let k5 = Graph::complete(5);
        let rec = encode(&k5);
        assert_eq!(decode(&rec).unwrap(), k5);
        // empty-ish graph
        let e3 = Graph::new(3, &[]).unwrap();
        assert_eq!(encode(&e3), "B?");
    }

    #[test]
    fn errors_are_specific() {
        assert_eq!(decode(""), Err(Graph6Error::Empty));
        assert!(matches!(decode("B\u{7}"), Err(Graph6Error::IllegalChar(_))));
        assert!(matches!(decode("D"), Err(Graph6Error::Truncated { .. })));
        assert!(matches!(
            decode("B__"),
            Err(Graph6Error::TrailingData { .. })
        ));
        // 'B' header (n=3) has 3 data bits; set a padding bit: 63 + 1 = '@'
        assert_eq!(decode("B@"), Err(Graph6Error::BadPadding));
    }

    #[test]
    fn line_errors_carry_positions() {
        let err = decode_lines("B_\n\nB\u{7}\n").unwrap_err();
        match err {
            Graph6Error::AtLine { line, .. } => assert_eq!(line, 3),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn header_prefix_is_tolerated() {
        assert_eq!(decode(">>graph6<<B_").unwrap().edges(), vec![(0, 1)]);
    }

    #[test]
    fn round_trips_random_graphs() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0x6a);
        for _ in 0..300 {
            let n = rng.gen_range(1..=70);
            let mut g = Graph::empty(n);
            for u in 0..n {
                for v in u + 1..n {
                    if rng.gen_bool(0.3) {
                        g.add_edge_unchecked(u, v);
                    }
                }
            }
            let rec = encode(&g);
            let back = decode(&rec).unwrap();
            assert_eq!(back, g);
            assert_eq!(encode(&back), rec);
        }
    }
}
