//! graph6 encoding: `N(n)` followed by the upper triangle of the adjacency
//! matrix in column order, six bits per printable byte (value + 63).

use thiserror::Error;

use super::Graph;

const HEADER: &[u8] = b">>graph6<<";
const MAX_ORDER: usize = 68_719_476_735;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Graph6Error {
    #[error("empty input")]
    Empty,
    #[error("byte {byte:#04x} at offset {offset} is outside 63..=126")]
    BadByte { offset: usize, byte: u8 },
    #[error("truncated vertex count")]
    TruncatedOrder,
    #[error("expected {expected} adjacency bytes, found {found}")]
    Length { expected: usize, found: usize },
    #[error("padding bits are set in the last byte")]
    Padding,
    #[error("{0} vertices is too many to load")]
    TooLarge(usize),
}

fn six_bits(bytes: &[u8], offset: usize) -> Result<Vec<u8>, Graph6Error> {
    bytes
        .iter()
        .enumerate()
        .map(|(i, &b)| match b {
            63..=126 => Ok(b - 63),
            _ => Err(Graph6Error::BadByte { offset: offset + i, byte: b }),
        })
        .collect()
}

fn encode_order(n: usize, out: &mut Vec<u8>) {
    let groups = match n {
        0..=62 => 1,
        63..=258_047 => {
            out.push(126);
            3
        }
        _ => {
            out.extend([126, 126]);
            6
        }
    };
    for g in (0..groups).rev() {
        out.push(((n >> (6 * g)) & 63) as u8 + 63);
    }
}

/// Splits off `N(n)`, returning `n` and the number of bytes consumed.
fn decode_order(bytes: &[u8]) -> Result<(usize, usize), Graph6Error> {
    let first = *bytes.first().ok_or(Graph6Error::Empty)?;
    let (skip, groups) = match (first, bytes.get(1)) {
        (126, Some(126)) => (2, 6),
        (126, _) => (1, 3),
        _ => (0, 1),
    };
    let digits = bytes.get(skip..skip + groups).ok_or(Graph6Error::TruncatedOrder)?;
    let n = six_bits(digits, skip)?.iter().fold(0usize, |acc, &d| (acc << 6) | d as usize);
    Ok((n, skip + groups))
}

pub fn encode(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::new();
    encode_order(n, &mut out);
    let (mut acc, mut len) = (0u8, 0);
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            len += 1;
            if len == 6 {
                out.push(acc + 63);
                (acc, len) = (0, 0);
            }
        }
    }
    if len > 0 {
        out.push((acc << (6 - len)) + 63);
    }
    String::from_utf8(out).expect("printable ASCII")
}

/// Decodes one graph. An optional `>>graph6<<` header and one trailing
/// newline are accepted; anything else after the adjacency bytes is an error.
pub fn decode(bytes: &[u8]) -> Result<Graph, Graph6Error> {
    let bytes = bytes.strip_prefix(HEADER).unwrap_or(bytes);
    let bytes = bytes
        .strip_suffix(b"\r\n")
        .or_else(|| bytes.strip_suffix(b"\n"))
        .unwrap_or(bytes);
    let (n, used) = decode_order(bytes)?;
    if n > MAX_ORDER || n > 1 << 16 {
        return Err(Graph6Error::TooLarge(n));
    }
    let bits = n * n.saturating_sub(1) / 2;
    let expected = bits.div_ceil(6);
    let body = &bytes[used..];
    if body.len() != expected {
        return Err(Graph6Error::Length {
            expected,
            found: body.len(),
        });
    }
    let digits = six_bits(body, used)?;
    let pad = expected * 6 - bits;
    if pad > 0 && digits[expected - 1] & ((1 << pad) - 1) != 0 {
        return Err(Graph6Error::Padding);
    }
    let mut g = Graph::empty(n);
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if digits[k / 6] >> (5 - k % 6) & 1 == 1 {
                g.add_edge(i, j);
            }
            k += 1;
        }
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::construct::{cycle, petersen};

    #[test]
    fn five_vertex_strings() {
        let c5 = decode(b"Dhc").unwrap();
        assert_eq!(c5.edges().collect::<Vec<_>>(), vec![(0, 1), (0, 4), (1, 2), (2, 3), (3, 4)]);
        assert_eq!(encode(&cycle(5)), "Dhc");
        assert_eq!(decode(b">>graph6<<Dhc\n").unwrap(), c5);
        // "DQc" is the path 2-0-4-3-1, not a cycle.
        let p5 = decode(b"DQc").unwrap();
        assert_eq!(p5.edges().collect::<Vec<_>>(), vec![(0, 2), (0, 4), (1, 3), (3, 4)]);
    }

    #[test]
    fn round_trips() {
        for g in [petersen(), cycle(9)] {
            let back = decode(encode(&g).as_bytes()).unwrap();
            assert_eq!(back.edges().collect::<Vec<_>>(), g.edges().collect::<Vec<_>>());
        }
    }

    #[test]
    fn empty_graphs_round_trip() {
        for n in 1..=62usize {
            let text = encode(&Graph::empty(n));
            assert_eq!(text.as_bytes()[0], n as u8 + 63);
            assert!(text.bytes().skip(1).all(|b| b == 63));
            assert_eq!(decode(text.as_bytes()).unwrap(), Graph::empty(n));
        }
    }

    #[test]
    fn long_order_prefix() {
        let g = Graph::from_edges(100, (0..99).map(|i| (i, i + 1)));
        let text = encode(&g);
        assert!(text.starts_with("~?@c"));
        assert_eq!(decode(text.as_bytes()).unwrap(), g);
    }

    #[test]
    fn malformed_inputs() {
        assert_eq!(decode(b""), Err(Graph6Error::Empty));
        assert_eq!(decode(b"~?"), Err(Graph6Error::TruncatedOrder));
        assert_eq!(decode(b"DQ"), Err(Graph6Error::Length { expected: 2, found: 1 }));
        assert_eq!(decode(b"DQcc"), Err(Graph6Error::Length { expected: 2, found: 3 }));
        // 10 bits in two bytes: the last two bits of 'd' are padding.
        assert_eq!(decode(b"DQd"), Err(Graph6Error::Padding));
        assert_eq!(decode(b"DQ "), Err(Graph6Error::BadByte { offset: 2, byte: b' ' }));
    }
}
