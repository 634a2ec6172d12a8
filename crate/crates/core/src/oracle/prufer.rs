use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

/// The labelled tree on `0..n` encoded by `seq` (length `n - 2`).
pub fn prufer_decode(seq: &[usize], n: usize) -> Result<Graph> {
    if n < 2 || seq.len() != n - 2 {
        return Err(Error::arg(format!(
            "a Prüfer sequence for n={n} has length {}, got {}",
            n.saturating_sub(2),
            seq.len()
        )));
    }
    if let Some(&s) = seq.iter().find(|&&s| s >= n) {
        return Err(Error::arg(format!("Prüfer entry {s} out of range 0..{n}")));
    }
    Ok(Graph::from_edges_unchecked(n, decode_edges(seq, n)))
}

pub(super) fn decode_edges(seq: &[usize], n: usize) -> Vec<(Vertex, Vertex)> {
    let mut edges = Vec::with_capacity(n - 1);
    let mut scratch = vec![0; n];
    decode_into(seq, n, &mut edges, &mut scratch);
    edges
}

/// Linear-time decoding into `edges`; `scratch` must hold `n` entries.
pub(super) fn decode_into(seq: &[usize], n: usize, edges: &mut Vec<(Vertex, Vertex)>, scratch: &mut [usize]) {
    edges.clear();
    let degree = &mut scratch[..n];
    degree.iter_mut().for_each(|d| *d = 1);
    for &s in seq {
        degree[s] += 1;
    }
    let mut ptr = degree.iter().position(|&d| d == 1).expect("a tree has leaves");
    let mut leaf = ptr;
    for &v in seq {
        edges.push((leaf.min(v), leaf.max(v)));
        degree[v] -= 1;
        if degree[v] == 1 && v < ptr {
            leaf = v;
        } else {
            ptr += 1;
            while degree[ptr] != 1 {
                ptr += 1;
            }
            leaf = ptr;
        }
    }
    edges.push((leaf, n - 1));
}

/// `sqrt(a^2 + b^2)` for degrees up to `n`.
pub(super) struct Weights {
    stride: usize,
    table: Vec<f64>,
}

impl Weights {
    pub fn new(n: usize) -> Self {
        let stride = n + 1;
        let table = (0..stride * stride)
            .map(|i| crate::sombor::edge_weight(i / stride, i % stride))
            .collect();
        Weights { stride, table }
    }

    #[inline]
    pub fn get(&self, a: usize, b: usize) -> f64 {
        self.table[a * self.stride + b]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn base_case_and_star() {
        let k2 = prufer_decode(&[], 2).unwrap();
        assert_eq!(k2.edges().collect::<Vec<_>>(), vec![(0, 1)]);
        let s = prufer_decode(&[0, 0], 4).unwrap();
        assert_eq!(s.deg(0), 3);
        assert!(s.is_tree());
    }

    #[test]
    fn known_sequence() {
        // 3 3 3 4 on six vertices: leaves 0,1,2 hang on 3, then 3-4, 4-5
        let g = prufer_decode(&[3, 3, 3, 4], 6).unwrap();
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 3), (1, 3), (2, 3), (3, 4), (4, 5)]);
    }

    #[test]
    fn bijective_for_small_orders() {
        for n in 3..=6usize {
            let len = n - 2;
            let mut seen = HashSet::new();
            for i in 0..n.pow(len as u32) {
                let seq: Vec<usize> = (0..len).map(|j| i / n.pow(j as u32) % n).collect();
                let g = prufer_decode(&seq, n).unwrap();
                assert!(g.is_tree());
                seen.insert(g.edges().collect::<Vec<_>>());
            }
            assert_eq!(seen.len(), n.pow(len as u32), "n={n}");
        }
    }

    #[test]
    fn rejects_bad_sequences() {
        assert!(prufer_decode(&[4], 3).is_err());
        assert!(prufer_decode(&[0], 4).is_err());
        assert!(prufer_decode(&[], 1).is_err());
    }
}
