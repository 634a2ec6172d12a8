//! Canonical forms for small graphs.
//!
//! Colour refinement produces an ordered, label-invariant partition; the
//! search then individualises vertices of the first non-singleton cell and
//! keeps the lexicographically largest relabelled edge list found at the
//! leaves. Branches that differ only by swapping two twin vertices (same
//! neighbourhood apart from each other) are explored once, since the
//! transposition is an automorphism fixing the current partition.

use super::{Graph, Vertex};
use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::fmt;

/// Largest order accepted by [`canonical_form`].
pub const MAX_CANONICAL_ORDER: usize = 16;

/// Relabelling-invariant encoding: byte 0 is the order, then one byte per
/// edge packing `(u << 4) | v` with `u < v`, edges sorted.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CanonicalForm(Vec<u8>);

impl CanonicalForm {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn order(&self) -> usize {
        self.0[0] as usize
    }

    /// The canonically labelled graph this form encodes.
    pub fn to_graph(&self) -> Graph {
        let edges = self.0[1..].iter().map(|&b| ((b >> 4) as usize, (b & 0xf) as usize));
        Graph::from_edges_unchecked(self.order(), edges)
    }
}

impl fmt::Debug for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalForm(n={};", self.order())?;
        for b in &self.0[1..] {
            write!(f, " {}-{}", b >> 4, b & 0xf)?;
        }
        write!(f, ")")
    }
}

pub fn canonical_form(g: &Graph) -> Result<CanonicalForm> {
    canonical_labeling(g).map(|(form, _)| form)
}

/// Canonical form together with the labelling that produces it:
/// `g.relabel(&perm)` equals `form.to_graph()`.
pub fn canonical_labeling(g: &Graph) -> Result<(CanonicalForm, Vec<Vertex>)> {
    let n = g.n();
    if n > MAX_CANONICAL_ORDER {
        return Err(Error::UnsupportedSize {
            what: "canonical form",
            n,
            max: MAX_CANONICAL_ORDER,
        });
    }
    let masks: Vec<u32> = (0..n)
        .map(|u| g.neighbors(u).iter().fold(0u32, |acc, &v| acc | 1 << v))
        .collect();
    let mut search = Search {
        g,
        masks,
        best: None,
    };
    let colors = search.refine(vec![0; n]);
    search.descend(colors);
    let (code, perm) = search.best.expect("search visits at least one leaf");
    let mut bytes = Vec::with_capacity(code.len() + 1);
    bytes.push(n as u8);
    bytes.extend(code);
    Ok((CanonicalForm(bytes), perm))
}

struct Search<'a> {
    g: &'a Graph,
    masks: Vec<u32>,
    best: Option<(Vec<u8>, Vec<Vertex>)>,
}

impl Search<'_> {
    /// Refines `colors` to the coarsest equitable partition below it. Colours
    /// are ranks `0..cells`, ordered by a label-free signature.
    fn refine(&self, mut colors: Vec<usize>) -> Vec<usize> {
        let n = colors.len();
        let mut cells = count_cells(&colors);
        loop {
            let sigs: Vec<(usize, Vec<usize>)> = (0..n)
                .map(|v| {
                    let mut nb: Vec<usize> = self.g.neighbors(v).iter().map(|&w| colors[w]).collect();
                    nb.sort_unstable();
                    (colors[v], nb)
                })
                .collect();
            let mut distinct: Vec<&(usize, Vec<usize>)> = sigs.iter().collect();
            distinct.sort();
            distinct.dedup();
            colors = sigs
                .iter()
                .map(|s| distinct.binary_search(&s).expect("signature present"))
                .collect();
            if distinct.len() == cells {
                return colors;
            }
            cells = distinct.len();
        }
    }

    fn descend(&mut self, colors: Vec<usize>) {
        let n = colors.len();
        let mut size = vec![0usize; n];
        for &c in &colors {
            size[c] += 1;
        }
        let Some(target) = (0..n).find(|&c| size[c] > 1) else {
            self.leaf(&colors);
            return;
        };
        let cell: Vec<Vertex> = (0..n).filter(|&v| colors[v] == target).collect();
        let mut explored: Vec<Vertex> = Vec::with_capacity(cell.len());
        for &v in &cell {
            if explored.iter().any(|&w| self.twins(v, w)) {
                continue;
            }
            explored.push(v);
            let split: Vec<usize> = colors
                .iter()
                .enumerate()
                .map(|(u, &c)| if u == v { 2 * c } else { 2 * c + 1 })
                .collect();
            let next = self.refine(normalize(&split));
            self.descend(next);
        }
    }

    fn twins(&self, a: Vertex, b: Vertex) -> bool {
        (self.masks[a] & !(1 << b)) == (self.masks[b] & !(1 << a))
    }

    fn leaf(&mut self, perm: &[usize]) {
        let mut code: Vec<u8> = self
            .g
            .edges()
            .map(|(u, v)| {
                let (a, b) = (perm[u].min(perm[v]), perm[u].max(perm[v]));
                ((a as u8) << 4) | b as u8
            })
            .collect();
        code.sort_unstable();
        match &self.best {
            Some((best, _)) if *best >= code => {}
            _ => self.best = Some((code, perm.to_vec())),
        }
    }
}

fn count_cells(colors: &[usize]) -> usize {
    let mut c = colors.to_vec();
    c.sort_unstable();
    c.dedup();
    c.len()
}

fn normalize(colors: &[usize]) -> Vec<usize> {
    let mut distinct = colors.to_vec();
    distinct.sort_unstable();
    distinct.dedup();
    colors
        .iter()
        .map(|c| distinct.binary_search(c).expect("colour present"))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::super::fixtures::*;
    use super::*;

    fn permutations(n: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for p in permutations(n - 1) {
            for i in 0..n {
                let mut q = p.clone();
                q.insert(i, n - 1);
                out.push(q);
            }
        }
        out
    }

    #[test]
    fn relabelled_paths_agree() {
        let a = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        let b = Graph::from_edges(3, &[(1, 0), (0, 2)]).unwrap();
        assert_eq!(canonical_form(&a).unwrap(), canonical_form(&b).unwrap());
    }

    #[test]
    fn path_and_star_differ() {
        assert_ne!(canonical_form(&path(4)).unwrap(), canonical_form(&star(4)).unwrap());
    }

    #[test]
    fn labeling_reproduces_form() {
        let g = Graph::from_edges(6, &[(0, 3), (3, 5), (5, 1), (1, 0), (2, 4), (4, 0)]).unwrap();
        let (form, perm) = canonical_labeling(&g).unwrap();
        assert_eq!(g.relabel(&perm).unwrap(), form.to_graph());
    }

    #[test]
    fn every_permutation_of_small_graphs_agrees() {
        let graphs = [
            cycle(6),
            Graph::from_edges(6, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5)]).unwrap(),
            Graph::from_edges(6, &[(0, 1), (0, 2), (0, 3), (3, 4), (3, 5), (1, 2)]).unwrap(),
        ];
        for g in &graphs {
            let reference = canonical_form(g).unwrap();
            for p in permutations(g.n()) {
                assert_eq!(canonical_form(&g.relabel(&p).unwrap()).unwrap(), reference);
            }
        }
    }

    #[test]
    fn non_isomorphic_with_equal_degree_sequences() {
        // C6 versus two triangles: both 2-regular on six vertices
        let two_triangles =
            Graph::from_edges(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]).unwrap();
        assert_ne!(canonical_form(&cycle(6)).unwrap(), canonical_form(&two_triangles).unwrap());
    }

    /// Brute-force isomorphism count over all graphs on five vertices: there
    /// are 34 isomorphism classes.
    #[test]
    fn counts_all_classes_on_five_vertices() {
        let pairs: Vec<(usize, usize)> = (0..5).flat_map(|u| (u + 1..5).map(move |v| (u, v))).collect();
        let mut forms = std::collections::BTreeSet::new();
        for mask in 0u32..(1 << pairs.len()) {
            let edges: Vec<_> = (0..pairs.len()).filter(|i| mask >> i & 1 == 1).map(|i| pairs[i]).collect();
            forms.insert(canonical_form(&Graph::from_edges(5, &edges).unwrap()).unwrap());
        }
        assert_eq!(forms.len(), 34);
    }

    #[test]
    fn size_cap() {
        assert!(canonical_form(&star(16)).is_ok());
        assert!(matches!(
            canonical_form(&star(17)),
            Err(Error::UnsupportedSize { n: 17, max: 16, .. })
        ));
    }
}
