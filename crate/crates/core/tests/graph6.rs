//! graph6 against reference strings produced by networkx and against a second,
//! deliberately naive encoder.

use factorcrit::graph::parse_graph6_with_width;
use factorcrit::{emit_graph6, parse_graph6, Graph};
use proptest::prelude::*;

/// Bit-string encoder written straight from the format description.
fn naive_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = String::new();
    if n < 63 {
        out.push((n as u8 + 63) as char);
    } else if n < 258048 {
        out.push('~');
        for shift in [12, 6, 0] {
            out.push((((n >> shift) & 63) as u8 + 63) as char);
        }
    } else {
        unimplemented!("orders this large are out of scope");
    }
    let mut bits = String::new();
    for j in 1..n {
        for i in 0..j {
            bits.push(if g.has_edge(i, j) { '1' } else { '0' });
        }
    }
    while !bits.len().is_multiple_of(6) {
        bits.push('0');
    }
    for chunk in bits.as_bytes().chunks(6) {
        let v = u8::from_str_radix(std::str::from_utf8(chunk).unwrap(), 2).unwrap();
        out.push((v + 63) as char);
    }
    out
}

fn networkx_petersen() -> Graph {
    let edges = [
        (0, 1), (0, 4), (0, 5), (1, 2), (1, 6), (2, 3), (2, 7), (3, 4),
        (3, 8), (4, 9), (5, 7), (5, 8), (6, 8), (6, 9), (7, 9),
    ];
    Graph::from_edges(10, &edges).unwrap()
}

#[test]
fn networkx_reference_strings() {
    assert_eq!(emit_graph6(&networkx_petersen()), "IheA@GUAo");
    assert_eq!(emit_graph6(&Graph::from_fn(5, |_, _| true).unwrap()), "D~{");
    assert_eq!(emit_graph6(&Graph::from_edges(1, &[]).unwrap()), "@");
    let c13 = Graph::from_fn(13, |u, v| v - u == 1 || (u == 0 && v == 12)).unwrap();
    assert_eq!(emit_graph6(&c13), "LhCGGC@?G?_@_@");

    let gnm = [
        (0, 2), (0, 3), (0, 5), (0, 8), (0, 9), (1, 2), (1, 4), (1, 5), (1, 9), (2, 3),
        (2, 4), (2, 5), (2, 6), (2, 7), (2, 12), (3, 7), (3, 8), (3, 10), (3, 11), (3, 12),
        (4, 5), (4, 6), (4, 9), (5, 11), (6, 8), (7, 11), (7, 12), (9, 10), (10, 11), (11, 12),
    ];
    let g = Graph::from_edges(13, &gnm).unwrap();
    assert_eq!(emit_graph6(&g), "L\\ZhPaQq?_ahKP");
    assert_eq!(parse_graph6(b"L\\ZhPaQq?_ahKP").unwrap(), g);
}

#[test]
fn long_length_prefix() {
    let path: Vec<(usize, usize)> = (0..69).map(|i| (i, i + 1)).collect();
    let g = Graph::from_edges(70, &path).unwrap();
    let text = emit_graph6(&g);
    assert!(text.starts_with("~?@EhCGGC@?G?_@?@??_?G?@??C"));
    assert_eq!(text, naive_graph6(&g));
    assert_eq!(parse_graph6_with_width(text.as_bytes(), 128).unwrap(), g);
    assert!(parse_graph6(text.as_bytes()).unwrap_err().to_string().contains("70"));
}

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let mut it = bits.into_iter();
            Graph::from_fn(n, |_, _| it.next().unwrap()).unwrap()
        })
    })
}

proptest! {
    #[test]
    fn round_trip(g in arb_graph(64)) {
        let text = emit_graph6(&g);
        prop_assert_eq!(&text, &naive_graph6(&g));
        prop_assert_eq!(parse_graph6(text.as_bytes()).unwrap(), g);
    }

    #[test]
    fn mutated_padding_is_rejected(n in 2usize..40) {
        let g = Graph::from_edges(n, &[]).unwrap();
        let text = emit_graph6(&g).into_bytes();
        let pad = (6 - (n * (n - 1) / 2) % 6) % 6;
        if pad > 0 {
            let mut bad = text.clone();
            *bad.last_mut().unwrap() += 1;
            prop_assert!(parse_graph6(&bad).is_err());
        }
    }
}
