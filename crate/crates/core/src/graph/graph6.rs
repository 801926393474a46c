use super::{configured_width, Graph, VertexSet};
use crate::error::Graph6Error;

const HEADER: &[u8] = b">>graph6<<";
const BIAS: u8 = 63;

/// Parses a single graph6 line using the configured vertex width.
pub fn parse_graph6(text: &[u8]) -> Result<Graph, Graph6Error> {
    parse_graph6_with_width(text, configured_width())
}

/// Parses a single graph6 line, rejecting graphs with more than `width` vertices.
///
/// An optional `>>graph6<<` header and one trailing line terminator are accepted.
pub fn parse_graph6_with_width(text: &[u8], width: usize) -> Result<Graph, Graph6Error> {
    let mut body = text.strip_prefix(HEADER).unwrap_or(text);
    if let Some(b) = body.strip_suffix(b"\n") {
        body = b.strip_suffix(b"\r").unwrap_or(b);
    }
    if body.is_empty() {
        return Err(Graph6Error::Empty);
    }
    if let Some((offset, &byte)) = body.iter().enumerate().find(|(_, &b)| !(BIAS..=126).contains(&b)) {
        return Err(Graph6Error::NonPrintable { byte, offset });
    }

    let (n, rest) = decode_order(body)?;
    if n == 0 {
        return Err(Graph6Error::ZeroVertices);
    }
    if n > width {
        return Err(Graph6Error::TooWide { n, width });
    }

    let bits = n * (n - 1) / 2;
    let expected = bits.div_ceil(6);
    if rest.len() < expected {
        return Err(Graph6Error::Truncated { expected, found: rest.len() });
    }
    if rest.len() > expected {
        return Err(Graph6Error::Trailing(rest.len() - expected));
    }
    let pad = expected * 6 - bits;
    if pad > 0 && (rest[expected - 1] - BIAS) & ((1 << pad) - 1) != 0 {
        return Err(Graph6Error::Padding);
    }

    let mut adj = vec![VertexSet::empty(); n];
    let mut k = 0;
    for v in 1..n {
        for u in 0..v {
            let chunk = rest[k / 6] - BIAS;
            if (chunk >> (5 - k % 6)) & 1 == 1 {
                adj[u].insert(v);
                adj[v].insert(u);
            }
            k += 1;
        }
    }
    Graph::from_adjacency(adj).map_err(|_| Graph6Error::BadLength)
}

fn decode_order(body: &[u8]) -> Result<(usize, &[u8]), Graph6Error> {
    let six = |bytes: &[u8]| bytes.iter().fold(0usize, |acc, &b| (acc << 6) | (b - BIAS) as usize);
    if body[0] != 126 {
        return Ok(((body[0] - BIAS) as usize, &body[1..]));
    }
    if body.len() >= 2 && body[1] == 126 {
        if body.len() < 8 {
            return Err(Graph6Error::BadLength);
        }
        let n = six(&body[2..8]);
        if n <= 258047 {
            return Err(Graph6Error::BadLength);
        }
        return Ok((n, &body[8..]));
    }
    if body.len() < 4 {
        return Err(Graph6Error::BadLength);
    }
    let n = six(&body[1..4]);
    if n <= 62 {
        return Err(Graph6Error::BadLength);
    }
    Ok((n, &body[4..]))
}

/// Encodes a graph as a graph6 line (no header, no newline).
pub fn emit_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(n as u8 + BIAS);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + BIAS);
        }
    }
    let mut chunk = 0u8;
    let mut filled = 0;
    for v in 1..n {
        for u in 0..v {
            chunk = (chunk << 1) | g.has_edge(u, v) as u8;
            filled += 1;
            if filled == 6 {
                out.push(chunk + BIAS);
                chunk = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((chunk << (6 - filled)) + BIAS);
    }
    String::from_utf8(out).expect("graph6 output is ASCII")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_malformed() {
        assert_eq!(parse_graph6(b""), Err(Graph6Error::Empty));
        assert_eq!(parse_graph6(b">>graph6<<"), Err(Graph6Error::Empty));
        assert!(matches!(parse_graph6(b"D\x01c"), Err(Graph6Error::NonPrintable { offset: 1, .. })));
        assert_eq!(parse_graph6(b"?"), Err(Graph6Error::ZeroVertices));
        assert!(matches!(parse_graph6(b"D~"), Err(Graph6Error::Truncated { .. })));
        assert!(matches!(parse_graph6(b"D~{??"), Err(Graph6Error::Trailing(2))));
        assert_eq!(parse_graph6(b"~??"), Err(Graph6Error::BadLength));
        // n = 62 written in long form is not canonical
        assert_eq!(parse_graph6(b"~??}"), Err(Graph6Error::BadLength));
        // K5 needs 10 bits; the last two must be zero
        assert_eq!(parse_graph6(b"D~~"), Err(Graph6Error::Padding));
    }

    #[test]
    fn width_is_enforced() {
        let g = Graph::from_fn(70, |u, v| v == u + 1).unwrap();
        let line = emit_graph6(&g);
        assert_eq!(
            parse_graph6_with_width(line.as_bytes(), 64),
            Err(Graph6Error::TooWide { n: 70, width: 64 })
        );
        assert_eq!(parse_graph6_with_width(line.as_bytes(), 128).unwrap(), g);
    }

    #[test]
    fn single_vertex() {
        let k1 = Graph::from_edges(1, &[]).unwrap();
        assert_eq!(emit_graph6(&k1), "@");
        assert_eq!(parse_graph6(b"@").unwrap(), k1);
    }

    #[test]
    fn header_and_newline_accepted() {
        let g = parse_graph6(b">>graph6<<D~{\r\n").unwrap();
        assert_eq!(g.edge_count(), 10);
    }
}
