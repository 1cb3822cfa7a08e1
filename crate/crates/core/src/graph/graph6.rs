//! graph6 text encoding (one graph per line).
//!
//! Layout: `N(n)` followed by the upper triangle of the adjacency matrix
//! in column order `(0,1), (0,2), (1,2), (0,3), ...`, packed six bits per
//! byte, most significant bit first, zero-padded, each byte offset by 63.

use super::{Graph, GraphBuilder};
use crate::error::{Error, Result};

const HEADER: &str = ">>graph6<<";
const MAX_ORDER: usize = 68_719_476_735;

fn push_order(out: &mut Vec<u8>, n: usize) {
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + 63);
        }
    } else {
        assert!(n <= MAX_ORDER, "graph too large for graph6");
        out.extend([126, 126]);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + 63);
        }
    }
}

pub fn encode(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::new();
    push_order(&mut out, n);
    let mut acc = 0u8;
    let mut filled = 0;
    for v in 1..n {
        for u in 0..v {
            acc = (acc << 1) | g.has_edge(u, v) as u8;
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
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

fn parse_err(offset: usize, reason: impl Into<String>) -> Error {
    Error::Parse {
        offset,
        reason: reason.into(),
    }
}

fn sextet(bytes: &[u8], at: usize) -> Result<u64> {
    match bytes.get(at) {
        Some(&b) if (63..=126).contains(&b) => Ok((b - 63) as u64),
        Some(&b) => Err(parse_err(at, format!("byte 0x{b:02x} outside 63..=126"))),
        None => Err(parse_err(at, "unexpected end of input")),
    }
}

/// Decodes one graph6 line. A leading `>>graph6<<` header and trailing
/// line terminators are accepted; anything else that is not bit-exact
/// graph6 (wrong length, nonzero padding, bad bytes) is rejected with the
/// offending byte offset.
pub fn decode(line: &str) -> Result<Graph> {
    let line = line.trim_end_matches(['\n', '\r']);
    let base = if line.starts_with(HEADER) {
        HEADER.len()
    } else {
        0
    };
    let bytes = &line.as_bytes()[base..];
    if bytes.is_empty() {
        return Err(parse_err(base, "empty input"));
    }
    if let Some(bad) = bytes.iter().position(|b| !(63..=126).contains(b)) {
        return Err(parse_err(
            base + bad,
            format!("byte 0x{:02x} outside 63..=126", bytes[bad]),
        ));
    }
    let (n, mut at) = if bytes[0] != 126 {
        (
            sextet(bytes, 0).map_err(|e| shift_err(e, base))? as usize,
            1,
        )
    } else if bytes.get(1) != Some(&126) {
        let mut n = 0u64;
        for i in 1..4 {
            n = (n << 6) | sextet(bytes, i).map_err(|e| shift_err(e, base))?;
        }
        if n < 63 {
            return Err(parse_err(
                base,
                format!("order {n} must use the short form"),
            ));
        }
        (n as usize, 4)
    } else {
        let mut n = 0u64;
        for i in 2..8 {
            n = (n << 6) | sextet(bytes, i).map_err(|e| shift_err(e, base))?;
        }
        if n <= 258_047 {
            return Err(parse_err(
                base,
                format!("order {n} must use a shorter form"),
            ));
        }
        (n as usize, 8)
    };
    let bits = n * n.saturating_sub(1) / 2;
    let expected = at + bits.div_ceil(6);
    if bytes.len() != expected {
        return Err(parse_err(
            base + bytes.len().min(expected),
            format!(
                "expected {expected} bytes for {n} vertices, found {}",
                bytes.len()
            ),
        ));
    }
    let mut b = GraphBuilder::new(n);
    let mut word = 0u64;
    let mut left = 0;
    let mut pairs = (1..n).flat_map(|v| (0..v).map(move |u| (u, v)));
    for _ in 0..bits {
        if left == 0 {
            word = sextet(bytes, at).map_err(|e| shift_err(e, base))?;
            at += 1;
            left = 6;
        }
        left -= 1;
        let (u, v) = pairs.next().expect("pair count matches bit count");
        if (word >> left) & 1 == 1 {
            b.add_edge(u, v)?;
        }
    }
    if left > 0 && word & ((1 << left) - 1) != 0 {
        return Err(parse_err(base + at - 1, "nonzero padding bits"));
    }
    Ok(b.build())
}

fn shift_err(e: Error, base: usize) -> Error {
    match e {
        Error::Parse { offset, reason } => Error::Parse {
            offset: offset + base,
            reason,
        },
        other => other,
    }
}

/// Decodes a multi-line payload, skipping blank lines. Parse errors name
/// the 1-based line; offsets stay relative to that line.
pub fn decode_all(text: &str) -> Result<Vec<Graph>> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| {
            decode(l).map_err(|e| match e {
                Error::Parse { offset, reason } => Error::Parse {
                    offset,
                    reason: format!("{reason} (line {})", i + 1),
                },
                other => other,
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{gnp, StandardGraph};
    use proptest::prelude::*;

    #[test]
    fn known_encodings() {
        assert_eq!(encode(&Graph::empty(0)), "?");
        assert_eq!(encode(&Graph::empty(1)), "@");
        // K4: 6 one-bits -> 63 + 63
        assert_eq!(encode(&StandardGraph::Complete(4).build().unwrap()), "C~");
        // petgraph's reference example: A-C, A-E, B-D, D-E on 5 vertices
        let g = Graph::from_edges(5, [(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(encode(&g), "DQc");
        let g63 = Graph::empty(63);
        assert!(encode(&g63).starts_with("~??~"));
        assert_eq!(decode(&encode(&g63)).unwrap(), g63);
    }

    #[test]
    fn k4_round_trip() {
        let k4 = StandardGraph::Complete(4).build().unwrap();
        assert_eq!(decode(&encode(&k4)).unwrap(), k4);
        assert_eq!(decode(">>graph6<<C~\n").unwrap(), k4);
    }

    #[test]
    fn rejects_malformed_input() {
        assert!(matches!(decode("not-graph6!"), Err(Error::Parse { .. })));
        assert!(matches!(decode(""), Err(Error::Parse { offset: 0, .. })));
        // truncated body
        assert!(matches!(decode("D"), Err(Error::Parse { .. })));
        // extra byte
        assert!(matches!(decode("C~~"), Err(Error::Parse { .. })));
        // n=3 has 3 bits; padding bits must be zero
        assert!(matches!(decode("Bx"), Err(Error::Parse { offset: 1, .. })));
        assert!(decode("Bw").is_ok());
        // bad byte reported at its offset
        match decode("D Qc") {
            Err(Error::Parse { offset, .. }) => assert_eq!(offset, 1),
            other => panic!("{other:?}"),
        }
        // long form for a small order is not canonical graph6
        assert!(decode("~??E").is_err());
    }

    #[test]
    fn decode_all_skips_blank_lines() {
        let gs = decode_all("C~\n\nDQc\n").unwrap();
        assert_eq!(gs.len(), 2);
        assert_eq!(gs[1].size(), 4);
    }

    #[test]
    fn seeded_round_trips() {
        for seed in 0..1000u64 {
            let n = (seed % 33) as usize;
            let p = (seed % 7) as f64 / 6.0;
            let g = gnp(n, p, seed).unwrap();
            let line = encode(&g);
            assert_eq!(decode(&line).unwrap(), g);
            assert_eq!(encode(&decode(&line).unwrap()), line);
        }
    }

    proptest! {
        #[test]
        fn round_trip_identity(n in 0usize..80, p in 0.0f64..=1.0, seed in any::<u64>()) {
            let g = gnp(n, p, seed).unwrap();
            prop_assert_eq!(decode(&encode(&g)).unwrap(), g);
        }
    }
}
