//! graph6 encoding, as produced by nauty's `geng`.
//!
//! The header encodes `n` (one byte `n + 63` for `n <= 62`, otherwise `~`
//! followed by three bytes of 6 bits each). The body is the upper triangle of
//! the adjacency matrix in column order, `x(0,1) x(0,2) x(1,2) x(0,3) ...`,
//! packed 6 bits per byte with the most significant bit first and each byte
//! offset by 63.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::{VertexSet, MAX_VERTICES};

const HEADER: &str = ">>graph6<<";

pub fn parse_graph6(line: &str) -> Result<Graph> {
    let line = line.trim_end_matches(['\n', '\r']);
    let line = line.strip_prefix(HEADER).unwrap_or(line);
    let bytes = line.as_bytes();
    let mut sixes = bytes.iter().enumerate().map(|(i, &b)| {
        if (63..=126).contains(&b) {
            Ok(b - 63)
        } else {
            Err(Error::Graph6(format!("byte {i} ({b:#04x}) is outside 63..=126")))
        }
    });

    let first = sixes
        .next()
        .ok_or_else(|| Error::Graph6("empty input".into()))??;
    let n = if first == 63 {
        let mut n = 0usize;
        for _ in 0..3 {
            let b = sixes
                .next()
                .ok_or_else(|| Error::Graph6("truncated long header".into()))??;
            if b == 63 {
                return Err(Error::Graph6("eight-byte headers are not supported".into()));
            }
            n = n << 6 | b as usize;
        }
        n
    } else {
        first as usize
    };
    if n == 0 || n > MAX_VERTICES {
        return Err(Error::Graph6(format!(
            "vertex count {n} outside supported range 1..={MAX_VERTICES}"
        )));
    }

    let bits = n * (n - 1) / 2;
    let needed = bits.div_ceil(6);
    let body: Vec<u8> = sixes.collect::<Result<_>>()?;
    if body.len() < needed {
        return Err(Error::Graph6(format!(
            "truncated payload: {} of {needed} bytes",
            body.len()
        )));
    }
    if body.len() > needed {
        return Err(Error::Graph6(format!(
            "{} trailing bytes after payload",
            body.len() - needed
        )));
    }

    let bit = |k: usize| body[k / 6] >> (5 - k % 6) & 1 == 1;
    let mut adj = vec![VertexSet::EMPTY; n];
    let mut k = 0;
    for v in 1..n {
        for u in 0..v {
            if bit(k) {
                adj[u].insert(v);
                adj[v].insert(u);
            }
            k += 1;
        }
    }
    if (bits..needed * 6).any(bit) {
        return Err(Error::Graph6("nonzero padding bits".into()));
    }
    Ok(Graph::from_adjacency(adj))
}

pub fn to_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for v in 1..n {
        for u in 0..v {
            acc = acc << 1 | g.is_adjacent(u, v) as u8;
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
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}

/// Parses every nonblank line of a graph6 corpus file.
pub fn parse_graph6_lines(text: &str) -> impl Iterator<Item = Result<Graph>> + '_ {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty())
        .map(parse_graph6)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn hand_decoded() {
        // 'A' = 2 vertices; '_' = 95 - 63 = 0b100000 -> x(0,1) = 1
        assert_eq!(parse_graph6("A_").unwrap(), Graph::complete(2).unwrap());
        // 'B' = 3 vertices; '?' = 0 -> no edges
        assert_eq!(parse_graph6("B?").unwrap(), Graph::empty(3).unwrap());
        // 'w' = 119 - 63 = 0b111000 -> all three pairs
        assert_eq!(parse_graph6("Bw").unwrap(), Graph::complete(3).unwrap());
        assert_eq!(
            parse_graph6(">>graph6<<Bw\n").unwrap(),
            Graph::complete(3).unwrap()
        );
    }

    #[test]
    fn malformed() {
        assert!(matches!(parse_graph6(""), Err(Error::Graph6(_))));
        assert!(matches!(parse_graph6(" _"), Err(Error::Graph6(_))));
        // 4 vertices need one payload byte
        assert!(matches!(parse_graph6("C"), Err(Error::Graph6(_))));
        assert!(matches!(parse_graph6("A__"), Err(Error::Graph6(_))));
        // padding bit set
        assert!(matches!(parse_graph6("A`"), Err(Error::Graph6(_))));
        assert!(matches!(parse_graph6("~??"), Err(Error::Graph6(_))));
        assert!(matches!(parse_graph6("?"), Err(Error::Graph6(_))));
    }

    #[test]
    fn long_header() {
        let g = Graph::path(64).unwrap();
        let s = to_graph6(&g);
        assert!(s.starts_with("~?@?"));
        assert_eq!(parse_graph6(&s).unwrap(), g);
    }

    proptest! {
        #[test]
        fn reencode_is_identity(n in 1usize..=20, bits in proptest::collection::vec(any::<bool>(), 190)) {
            let pairs: Vec<(usize, usize)> = (1..n).flat_map(|v| (0..v).map(move |u| (u, v))).collect();
            let edges: Vec<_> = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| bits[*i])
                .map(|(_, &e)| e)
                .collect();
            let g = Graph::from_edge_list(n, &edges).unwrap();
            let line = to_graph6(&g);
            let back = parse_graph6(&line).unwrap();
            prop_assert_eq!(&back, &g);
            prop_assert_eq!(to_graph6(&back), line);
        }
    }
}
