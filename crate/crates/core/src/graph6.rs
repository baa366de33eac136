//! graph6 encoding (McKay's format).
//!
//! The order `n` is written as one byte `n + 63` when `n <= 62`, as `~` followed by three
//! 6-bit groups when `n <= 258047`, and as `~~` followed by six groups up to
//! `68719476735`. The upper triangle follows column by column, `(0,1), (0,2), (1,2),
//! (0,3), ...`, packed six bits per byte (most significant first), zero-padded, each
//! byte offset by 63.

use thiserror::Error;

use crate::graph::{Graph, GraphBuilder};

pub const MAX_ORDER: u64 = 68_719_476_735;
const HEADER: &[u8] = b">>graph6<<";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("graph order {0} exceeds the graph6 limit")]
    TooLarge(u64),
    #[error("empty input")]
    Empty,
    #[error("byte {byte:#04x} at offset {offset} is outside the graph6 range 63..=126")]
    BadByte { offset: usize, byte: u8 },
    #[error("expected {expected} bytes, found {found}")]
    WrongLength { expected: usize, found: usize },
    #[error("nonzero padding bits in final byte at offset {0}")]
    BadPadding(usize),
    #[error("order {0} does not fit in memory on this platform")]
    Unaddressable(u64),
}

fn encode_order(n: u64, out: &mut Vec<u8>) {
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    } else {
        out.push(126);
        out.push(126);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
}

/// Encodes `g` as a graph6 string without header or trailing newline.
pub fn encode(g: &Graph) -> Result<String, Graph6Error> {
    let n = g.order();
    if n as u64 > MAX_ORDER {
        return Err(Graph6Error::TooLarge(n as u64));
    }
    let mut out = Vec::with_capacity(8 + (n * n.saturating_sub(1) / 2).div_ceil(6));
    encode_order(n as u64, &mut out);
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
    Ok(String::from_utf8(out).expect("graph6 bytes are ASCII"))
}

fn sixbits(bytes: &[u8], offset: usize) -> Result<u64, Graph6Error> {
    match bytes.get(offset) {
        Some(&b) if (63..=126).contains(&b) => Ok((b - 63) as u64),
        Some(&b) => Err(Graph6Error::BadByte { offset, byte: b }),
        None => Err(Graph6Error::WrongLength {
            expected: offset + 1,
            found: bytes.len(),
        }),
    }
}

/// Decodes one graph6 string; an optional `>>graph6<<` header is accepted.
///
/// Offsets in errors are relative to the start of `input`, header included.
pub fn decode(input: &[u8]) -> Result<Graph, Graph6Error> {
    let start = if input.starts_with(HEADER) { HEADER.len() } else { 0 };
    let bytes = &input[start..];
    if bytes.is_empty() {
        return Err(Graph6Error::Empty);
    }
    let at = |e: Graph6Error| match e {
        Graph6Error::BadByte { offset, byte } => Graph6Error::BadByte {
            offset: offset + start,
            byte,
        },
        Graph6Error::BadPadding(offset) => Graph6Error::BadPadding(offset + start),
        other => other,
    };

    let (n, mut pos) = if bytes[0] != 126 {
        (sixbits(bytes, 0).map_err(at)?, 1)
    } else if bytes.get(1) != Some(&126) {
        let mut n = 0;
        for i in 1..4 {
            n = (n << 6) | sixbits(bytes, i).map_err(at)?;
        }
        (n, 4)
    } else {
        let mut n = 0;
        for i in 2..8 {
            n = (n << 6) | sixbits(bytes, i).map_err(at)?;
        }
        (n, 8)
    };
    let order = usize::try_from(n).map_err(|_| Graph6Error::Unaddressable(n))?;
    let pairs = order
        .checked_mul(order.saturating_sub(1))
        .ok_or(Graph6Error::Unaddressable(n))?
        / 2;
    let body = pairs.div_ceil(6);
    if bytes.len() != pos + body {
        return Err(Graph6Error::WrongLength {
            expected: start + pos + body,
            found: input.len(),
        });
    }

    let mut b = GraphBuilder::new(order);
    let (mut u, mut v) = (0usize, 1usize);
    let mut seen = 0;
    while pos < bytes.len() {
        let chunk = sixbits(bytes, pos).map_err(at)?;
        for shift in (0..6).rev() {
            let bit = (chunk >> shift) & 1 == 1;
            if seen < pairs {
                if bit {
                    b.add_edge(u, v).expect("pair in range");
                }
                seen += 1;
                u += 1;
                if u == v {
                    u = 0;
                    v += 1;
                }
            } else if bit {
                return Err(Graph6Error::BadPadding(start + pos));
            }
        }
        pos += 1;
    }
    Ok(b.build())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixed_vectors() {
        assert_eq!(encode(&Graph::complete(3)).unwrap(), "Bw");
        assert_eq!(encode(&Graph::empty(1)).unwrap(), "@");
        assert_eq!(encode(&Graph::empty(0)).unwrap(), "?");
        let c5 = Graph::cycle(5);
        assert_eq!(decode(encode(&c5).unwrap().as_bytes()).unwrap(), c5);
    }

    #[test]
    fn known_strings() {
        let p = Graph::petersen();
        let s = encode(&p).unwrap();
        assert_eq!(decode(s.as_bytes()).unwrap(), p);
        // K4 is "C~"
        assert_eq!(encode(&Graph::complete(4)).unwrap(), "C~");
        assert_eq!(decode(b"C~").unwrap(), Graph::complete(4));
    }

    #[test]
    fn long_order_prefix() {
        let g = Graph::cycle(63);
        let s = encode(&g).unwrap();
        assert_eq!(&s.as_bytes()[..4], &[126, 63, 63, 63 + 63]);
        assert_eq!(decode(s.as_bytes()).unwrap(), g);
        let mut prefix = Vec::new();
        encode_order(258_048, &mut prefix);
        assert_eq!(prefix, [126, 126, 63, 63, 63, 126, 63, 63]);
    }

    #[test]
    fn header_is_optional() {
        assert_eq!(decode(b">>graph6<<Bw").unwrap(), Graph::complete(3));
    }

    #[test]
    fn malformed_inputs() {
        assert_eq!(decode(b""), Err(Graph6Error::Empty));
        assert_eq!(
            decode(b"B "),
            Err(Graph6Error::BadByte {
                offset: 1,
                byte: b' '
            })
        );
        assert_eq!(
            decode(b">>graph6<<B "),
            Err(Graph6Error::BadByte {
                offset: 11,
                byte: b' '
            })
        );
        assert_eq!(
            decode(b"Bww"),
            Err(Graph6Error::WrongLength {
                expected: 2,
                found: 3
            })
        );
        assert!(matches!(decode(b"C"), Err(Graph6Error::WrongLength { .. })));
        // K3 uses 3 of the 6 bits; "B~" sets padding bits
        assert_eq!(decode(b"B~"), Err(Graph6Error::BadPadding(1)));
    }
}
