use std::collections::VecDeque;

use crate::graph::Graph;

/// Unit-capacity augmenting-path max flow on a dense residual matrix.
struct FlowNet {
    size: usize,
    cap: Vec<i32>,
}

impl FlowNet {
    fn new(size: usize) -> Self {
        FlowNet { size, cap: vec![0; size * size] }
    }

    fn add(&mut self, a: usize, b: usize, c: i32) {
        self.cap[a * self.size + b] += c;
    }

    /// Max flow from `s` to `t`, stopping once it reaches `limit`.
    #[allow(clippy::needless_range_loop)]
    fn max_flow(&mut self, s: usize, t: usize, limit: usize) -> usize {
        let n = self.size;
        let mut flow = 0;
        let mut prev = vec![usize::MAX; n];
        while flow < limit {
            prev.iter_mut().for_each(|p| *p = usize::MAX);
            prev[s] = s;
            let mut queue = VecDeque::from([s]);
            'bfs: while let Some(u) = queue.pop_front() {
                for w in 0..n {
                    if prev[w] == usize::MAX && self.cap[u * n + w] > 0 {
                        prev[w] = u;
                        if w == t {
                            break 'bfs;
                        }
                        queue.push_back(w);
                    }
                }
            }
            if prev[t] == usize::MAX {
                break;
            }
            let mut v = t;
            while v != s {
                let u = prev[v];
                self.cap[u * n + v] -= 1;
                self.cap[v * n + u] += 1;
                v = u;
            }
            flow += 1;
        }
        flow
    }
}

/// Maximum number of internally disjoint `s`–`t` paths for non-adjacent `s`, `t`.
pub(crate) fn local_vertex_connectivity(g: &Graph, s: usize, t: usize, limit: usize) -> usize {
    let n = g.n();
    let big = n as i32;
    // vertex v splits into v_in = 2v and v_out = 2v+1
    let mut net = FlowNet::new(2 * n);
    for v in 0..n {
        let c = if v == s || v == t { big } else { 1 };
        net.add(2 * v, 2 * v + 1, c);
        for w in g.neighbors(v) {
            net.add(2 * v + 1, 2 * w, big);
        }
    }
    net.max_flow(2 * s + 1, 2 * t, limit)
}

/// Maximum number of edge-disjoint `s`–`t` paths.
pub(crate) fn local_edge_connectivity(g: &Graph, s: usize, t: usize, limit: usize) -> usize {
    let n = g.n();
    let mut net = FlowNet::new(n);
    for (u, v) in g.edges() {
        net.add(u, v, 1);
        net.add(v, u, 1);
    }
    net.max_flow(s, t, limit)
}
