//! Undirected simple graphs on dense vertex labels `0..n`.
//!
//! Graph values are immutable: every editing operation returns a new graph
//! and leaves its input untouched.

mod canonical;
mod edgelist;

pub use canonical::{canonical_form, canonical_labeling, CanonicalForm, MAX_CANONICAL_ORDER};
pub use edgelist::{parse_edge_list, write_edge_list};

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

pub type Vertex = usize;

/// Simple undirected graph with sorted adjacency lists.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<Vertex>>,
    m: usize,
}

/// Certificate that `apex` can be removed to leave a tree.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct QuasiTreeWitness {
    pub apex: Vertex,
    pub k: usize,
}

impl QuasiTreeWitness {
    /// Checks the certificate against `g`.
    pub fn verify(&self, g: &Graph) -> bool {
        self.apex < g.n()
            && self.k >= 1
            && g.deg(self.apex) == self.k
            && g.without_vertex(self.apex).map(|h| h.is_tree()).unwrap_or(false)
    }
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
            m: 0,
        }
    }

    /// Builds a graph from an edge list, rejecting loops, repeated edges and
    /// out-of-range endpoints.
    pub fn from_edges(n: usize, edges: &[(Vertex, Vertex)]) -> Result<Self> {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            check_vertex(u, n)?;
            check_vertex(v, n)?;
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for (u, list) in adj.iter_mut().enumerate() {
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                return Err(Error::EdgePresent(u.min(w[0]), u.max(w[0])));
            }
        }
        Ok(Graph {
            adj,
            m: edges.len(),
        })
    }

    /// Builds a graph from edges already known to be simple and in range.
    pub(crate) fn from_edges_unchecked(n: usize, edges: impl IntoIterator<Item = (Vertex, Vertex)>) -> Self {
        let mut adj = vec![Vec::new(); n];
        let mut m = 0;
        for (u, v) in edges {
            adj[u].push(v);
            adj[v].push(u);
            m += 1;
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        let g = Graph { adj, m };
        debug_assert!(g.is_simple());
        g
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.m
    }

    /// Degree of `v`, or an error when `v` is not a vertex.
    pub fn degree(&self, v: Vertex) -> Result<usize> {
        check_vertex(v, self.n())?;
        Ok(self.adj[v].len())
    }

    /// Unchecked degree; panics when `v` is out of range.
    #[inline]
    pub fn deg(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    #[inline]
    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u < self.n() && v < self.n() && self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(Vec::len).collect()
    }

    /// Degrees sorted in non-increasing order.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d = self.degrees();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn is_connected(&self) -> bool {
        let n = self.n();
        if n == 0 {
            return false;
        }
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = stack.pop() {
            for &v in &self.adj[u] {
                if !seen[v] {
                    seen[v] = true;
                    count += 1;
                    stack.push(v);
                }
            }
        }
        count == n
    }

    /// Connected with `m = n - 1`. The order-zero graph is not a tree.
    pub fn is_tree(&self) -> bool {
        self.n() >= 1 && self.m + 1 == self.n() && self.is_connected()
    }

    /// Connected with `m = n`.
    pub fn is_unicyclic(&self) -> bool {
        self.m == self.n() && self.is_connected()
    }

    /// Every non-isolated vertex whose removal leaves a tree, in increasing
    /// vertex order.
    pub fn quasi_tree_witnesses(&self) -> Vec<QuasiTreeWitness> {
        let n = self.n();
        if n < 2 || self.m + 2 < n {
            return Vec::new();
        }
        (0..n)
            .filter(|&u| self.deg(u) >= 1 && self.m - self.deg(u) + 2 == n && self.connected_without(u))
            .map(|u| QuasiTreeWitness {
                apex: u,
                k: self.deg(u),
            })
            .collect()
    }

    fn connected_without(&self, removed: Vertex) -> bool {
        let n = self.n();
        let Some(start) = (0..n).find(|&v| v != removed) else {
            return false;
        };
        let mut seen = vec![false; n];
        seen[removed] = true;
        seen[start] = true;
        let mut stack = vec![start];
        let mut count = 1;
        while let Some(u) = stack.pop() {
            for &v in &self.adj[u] {
                if !seen[v] {
                    seen[v] = true;
                    count += 1;
                    stack.push(v);
                }
            }
        }
        count + 1 == n
    }

    /// `G + uv`; errors if the edge exists or would be a loop.
    pub fn with_edge(&self, u: Vertex, v: Vertex) -> Result<Graph> {
        check_vertex(u, self.n())?;
        check_vertex(v, self.n())?;
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        if self.has_edge(u, v) {
            return Err(Error::EdgePresent(u.min(v), u.max(v)));
        }
        let mut g = self.clone();
        insert_sorted(&mut g.adj[u], v);
        insert_sorted(&mut g.adj[v], u);
        g.m += 1;
        Ok(g)
    }

    /// `G - uv`; errors if the edge is absent.
    pub fn without_edge(&self, u: Vertex, v: Vertex) -> Result<Graph> {
        check_vertex(u, self.n())?;
        check_vertex(v, self.n())?;
        if !self.has_edge(u, v) {
            return Err(Error::EdgeMissing(u.min(v), u.max(v)));
        }
        let mut g = self.clone();
        g.adj[u].retain(|&w| w != v);
        g.adj[v].retain(|&w| w != u);
        g.m -= 1;
        Ok(g)
    }

    /// `G - v`, relabelling the remaining vertices to `0..n-1` in order.
    pub fn without_vertex(&self, v: Vertex) -> Result<Graph> {
        check_vertex(v, self.n())?;
        let shift = |w: Vertex| if w > v { w - 1 } else { w };
        let adj: Vec<Vec<Vertex>> = self
            .adj
            .iter()
            .enumerate()
            .filter(|&(u, _)| u != v)
            .map(|(_, list)| list.iter().filter(|&&w| w != v).map(|&w| shift(w)).collect())
            .collect();
        Ok(Graph {
            adj,
            m: self.m - self.deg(v),
        })
    }

    /// Image of the graph under `perm`, where vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[Vertex]) -> Result<Graph> {
        let n = self.n();
        if perm.len() != n {
            return Err(Error::arg(format!("permutation of length {} for order {n}", perm.len())));
        }
        let mut seen = vec![false; n];
        for &p in perm {
            check_vertex(p, n)?;
            if std::mem::replace(&mut seen[p], true) {
                return Err(Error::arg(format!("{p} repeated in permutation")));
            }
        }
        Ok(Graph::from_edges_unchecked(
            n,
            self.edges().map(|(u, v)| (perm[u], perm[v])),
        ))
    }

    fn is_simple(&self) -> bool {
        let sym = self
            .adj
            .iter()
            .enumerate()
            .all(|(u, list)| list.iter().all(|&v| v != u && self.adj[v].binary_search(&u).is_ok()));
        let no_dup = self.adj.iter().all(|l| l.windows(2).all(|w| w[0] < w[1]));
        let total: usize = self.adj.iter().map(Vec::len).sum();
        sym && no_dup && total == 2 * self.m
    }
}

fn check_vertex(v: Vertex, n: usize) -> Result<()> {
    if v < n {
        Ok(())
    } else {
        Err(Error::VertexOutOfRange { vertex: v, n })
    }
}

fn insert_sorted(list: &mut Vec<Vertex>, v: Vertex) {
    let pos = list.binary_search(&v).unwrap_or_else(|p| p);
    list.insert(pos, v);
}


#[cfg(test)]
mod tests {
    use super::fixtures::*;
    use super::*;

    #[test]
    fn degree_queries() {
        assert_eq!(star(5).degree(0), Ok(4));
        let k2 = path(2);
        assert_eq!(k2.degree(0), Ok(1));
        assert_eq!(k2.degree(1), Ok(1));
        assert_eq!(k2.degree(2), Err(Error::VertexOutOfRange { vertex: 2, n: 2 }));
    }

    #[test]
    fn rejects_non_simple_input() {
        assert_eq!(Graph::from_edges(3, &[(1, 1)]), Err(Error::SelfLoop(1)));
        assert_eq!(Graph::from_edges(3, &[(0, 1), (1, 0)]), Err(Error::EdgePresent(0, 1)));
        assert!(matches!(Graph::from_edges(3, &[(0, 3)]), Err(Error::VertexOutOfRange { .. })));
    }

    #[test]
    fn tree_recognition() {
        assert!(path(4).is_tree());
        assert!(!cycle(3).is_tree());
        let two_edges = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(!two_edges.is_tree());
        assert!(!Graph::empty(0).is_tree());
        assert!(Graph::empty(1).is_tree());
    }

    #[test]
    fn witnesses_of_small_graphs() {
        // removing the hub leaves three isolated vertices, so only leaves qualify
        let s4 = star(4);
        let w = s4.quasi_tree_witnesses();
        assert_eq!(
            w,
            (1..4).map(|apex| QuasiTreeWitness { apex, k: 1 }).collect::<Vec<_>>()
        );
        assert!(w.iter().all(|w| w.verify(&s4)));
        assert!(!QuasiTreeWitness { apex: 0, k: 3 }.verify(&s4));

        let c3 = cycle(3);
        assert_eq!(
            c3.quasi_tree_witnesses(),
            (0..3).map(|apex| QuasiTreeWitness { apex, k: 2 }).collect::<Vec<_>>()
        );

        let two_k2 = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(two_k2.quasi_tree_witnesses().is_empty());
    }

    #[test]
    fn edits_return_new_graphs() {
        let c3 = cycle(3);
        let p3 = c3.without_edge(0, 2).unwrap();
        assert_eq!(p3, path(3));
        assert_eq!(c3.m(), 3);
        assert_eq!(path(3).with_edge(0, 2).unwrap(), c3);
        assert_eq!(c3.with_edge(0, 1), Err(Error::EdgePresent(0, 1)));
        assert_eq!(path(3).without_edge(0, 2), Err(Error::EdgeMissing(0, 2)));

        let rest = star(4).without_vertex(0).unwrap();
        assert_eq!(rest.n(), 3);
        assert_eq!(rest.m(), 0);
    }

    #[test]
    fn vertex_deletion_preserves_relative_order() {
        let p4 = path(4);
        let g = p4.without_vertex(1).unwrap();
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(1, 2)]);
    }
}
