//! Exhaustive enumeration and top-level ranking by Sombor index.
//!
//! Three labelled universes are supported:
//!
//! * [`Universe::QuasiTree`]: a labelled tree on `0..n-1` (Prüfer sequence of
//!   length `n-3`) plus the apex `n-1` joined to a `k`-subset of it;
//! * [`Universe::Tree`]: labelled trees on `n` vertices;
//! * [`Universe::Unicyclic`]: a labelled tree plus one non-edge `uv`, kept only
//!   when `uv` is the lexicographically largest edge of the resulting cycle,
//!   so every labelled unicyclic graph is produced exactly once.
//!
//! Only graphs attaining a retained level are decoded and canonicalised.

mod levels;
mod prufer;
pub mod verify;

pub use prufer::prufer_decode;
pub use verify::{Verifier, VerifyOptions};

use crate::error::{Error, Result};
use crate::graph::{canonical_form, CanonicalForm, Graph};
use crate::sombor::{sombor_index, SomborValue};
use levels::TopLevels;
use prufer::{decode_edges, Weights};
use rayon::prelude::*;
use std::collections::{BTreeMap, BTreeSet};

pub const MAX_ENUMERATION_ORDER: usize = 10;
pub const DEFAULT_TOP: usize = 3;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Universe {
    QuasiTree { n: usize, k: usize },
    Tree { n: usize },
    Unicyclic { n: usize },
}

impl Universe {
    pub fn n(self) -> usize {
        match self {
            Universe::QuasiTree { n, .. } | Universe::Tree { n } | Universe::Unicyclic { n } => n,
        }
    }

    pub fn validate(self) -> Result<()> {
        let n = self.n();
        if n > MAX_ENUMERATION_ORDER {
            return Err(Error::UnsupportedSize {
                what: "enumeration",
                n,
                max: MAX_ENUMERATION_ORDER,
            });
        }
        if n < 4 {
            return Err(Error::arg(format!("enumeration needs n >= 4, got {n}")));
        }
        if let Universe::QuasiTree { n, k } = self {
            if !(1..n).contains(&k) {
                return Err(Error::arg(format!("apex degree must satisfy 1 <= k <= n-1, got n={n} k={k}")));
            }
        }
        Ok(())
    }

    /// Number of labelled objects the enumeration visits.
    pub fn labeled_size(self) -> u64 {
        let pow = |b: usize, e: usize| (b as u64).pow(e as u32);
        match self {
            Universe::QuasiTree { n, k } => pow(n - 1, n - 3) * binomial(n - 1, k),
            Universe::Tree { n } => pow(n, n - 2),
            Universe::Unicyclic { n } => pow(n, n - 2) * (binomial(n, 2) - (n as u64 - 1)),
        }
    }
}

impl std::fmt::Display for Universe {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Universe::QuasiTree { n, k } => write!(f, "quasi-trees n={n} k={k}"),
            Universe::Tree { n } => write!(f, "trees n={n}"),
            Universe::Unicyclic { n } => write!(f, "unicyclic n={n}"),
        }
    }
}

fn binomial(n: usize, k: usize) -> u64 {
    (0..k).fold(1u64, |acc, i| acc * (n - i) as u64 / (i as u64 + 1))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EnumerationTask {
    pub universe: Universe,
    /// Number of distinct index levels to keep.
    pub top: usize,
    /// Worker threads; 0 uses every available core.
    pub jobs: usize,
}

impl EnumerationTask {
    pub fn new(universe: Universe) -> Self {
        EnumerationTask {
            universe,
            top: DEFAULT_TOP,
            jobs: 0,
        }
    }

    pub fn quasi_tree(n: usize, k: usize) -> Self {
        Self::new(Universe::QuasiTree { n, k })
    }

    pub fn top(mut self, top: usize) -> Self {
        self.top = top;
        self
    }

    pub fn jobs(mut self, jobs: usize) -> Self {
        self.jobs = jobs;
        self
    }
}

/// One isomorphism class attaining a level.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Representative {
    pub form: CanonicalForm,
    /// The first labelled member met by the enumeration.
    pub graph: Graph,
    pub labeled_count: u64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct RankEntry {
    /// 1 for the maximum.
    pub level: usize,
    pub value: SomborValue,
    /// Pairwise non-isomorphic, sorted by canonical form.
    pub reps: Vec<Representative>,
    pub labeled_count: u64,
}

impl RankEntry {
    pub fn forms(&self) -> impl Iterator<Item = &CanonicalForm> {
        self.reps.iter().map(|r| &r.form)
    }

    /// The sole representative, if the level has exactly one class.
    pub fn unique(&self) -> Option<&Representative> {
        match self.reps.as_slice() {
            [r] => Some(r),
            _ => None,
        }
    }
}

pub fn enumerate_rank(task: &EnumerationTask) -> Result<Vec<RankEntry>> {
    task.universe.validate()?;
    if task.top == 0 {
        return Err(Error::arg("top must be at least 1"));
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(task.jobs)
        .build()
        .map_err(|e| Error::arg(format!("thread pool: {e}")))?;
    let universe = task.universe;
    pool.install(|| {
        let partitions = partitions(universe);
        let levels = partitions
            .into_par_iter()
            .map(|prefix| scan(universe, &prefix, task.top))
            .reduce(|| TopLevels::new(task.top), TopLevels::merge);
        Ok(finish(universe, levels))
    })
}

/// Every labelled member of a small universe, by canonical form.
pub fn census(universe: Universe) -> Result<BTreeMap<CanonicalForm, u64>> {
    universe.validate()?;
    if universe.n() > 7 {
        return Err(Error::UnsupportedSize {
            what: "census",
            n: universe.n(),
            max: 7,
        });
    }
    let mut out = BTreeMap::new();
    for id in all_ids(universe) {
        if let Some(g) = decode_id(universe, id) {
            *out.entry(canonical_form(&g)?).or_insert(0) += 1;
        }
    }
    Ok(out)
}

/// Decodes an enumeration id; `None` for tree-plus-edge ids whose edge is
/// already present or is not the canonical choice of its unicyclic graph.
pub fn decode_id(universe: Universe, id: u64) -> Option<Graph> {
    match universe {
        Universe::QuasiTree { n, .. } => {
            let t = n - 1;
            let mask = id & 0xffff;
            let mut edges = decode_edges(&digits(id >> 16, t, t - 2), t);
            edges.extend((0..t).filter(|i| mask >> i & 1 == 1).map(|i| (i, t)));
            Some(Graph::from_edges_unchecked(n, edges))
        }
        Universe::Tree { n } => Some(Graph::from_edges_unchecked(n, decode_edges(&digits(id, n, n - 2), n))),
        Universe::Unicyclic { n } => {
            let (u, v) = ((id >> 4 & 0xf) as usize, (id & 0xf) as usize);
            let tree = decode_edges(&digits(id >> 8, n, n - 2), n);
            if u >= v || v >= n || tree.contains(&(u, v)) || !closes_at_max_edge(&tree, n, u, v) {
                return None;
            }
            let mut edges = tree;
            edges.push((u, v));
            Some(Graph::from_edges_unchecked(n, edges))
        }
    }
}

fn digits(mut index: u64, base: usize, len: usize) -> Vec<usize> {
    let mut seq = vec![0; len];
    for d in seq.iter_mut().rev() {
        *d = (index % base as u64) as usize;
        index /= base as u64;
    }
    seq
}

/// Vertex count and length of the underlying Prüfer sequences.
fn tree_shape(universe: Universe) -> (usize, usize) {
    match universe {
        Universe::QuasiTree { n, .. } => (n - 1, n - 3),
        Universe::Tree { n } | Universe::Unicyclic { n } => (n, n - 2),
    }
}

/// Work units: Prüfer prefixes of length up to 2.
fn partitions(universe: Universe) -> Vec<Vec<usize>> {
    let (t, len) = tree_shape(universe);
    let p = len.min(2);
    (0..t.pow(p as u32) as u64).map(|i| digits(i, t, p)).collect()
}

fn all_ids(universe: Universe) -> Vec<u64> {
    let mut ids = Vec::new();
    for prefix in partitions(universe) {
        for_each_tree(universe, &prefix, |index, _| match universe {
            Universe::QuasiTree { n, k } => {
                ids.extend(subset_masks(n - 1, k).into_iter().map(|m| index << 16 | m as u64));
            }
            Universe::Tree { .. } => ids.push(index),
            Universe::Unicyclic { n } => {
                for u in 0..n {
                    for v in u + 1..n {
                        ids.push(index << 8 | (u << 4 | v) as u64);
                    }
                }
            }
        });
    }
    ids
}

fn subset_masks(t: usize, k: usize) -> Vec<u32> {
    (0u32..1 << t).filter(|m| m.count_ones() as usize == k).collect()
}

/// Calls `f(sequence index, sequence)` for every sequence with `prefix`.
fn for_each_tree(universe: Universe, prefix: &[usize], mut f: impl FnMut(u64, &[usize])) {
    let (t, len) = tree_shape(universe);
    let free = len - prefix.len();
    let mut seq = vec![0; len];
    seq[..prefix.len()].copy_from_slice(prefix);
    let base = prefix.iter().fold(0u64, |acc, &d| acc * t as u64 + d as u64) * (t as u64).pow(free as u32);
    let count = (t as u64).pow(free as u32);
    for j in 0..count {
        f(base + j, &seq);
        for d in seq[prefix.len()..].iter_mut().rev() {
            *d += 1;
            if *d < t {
                break;
            }
            *d = 0;
        }
    }
}

/// Top levels of one partition.
fn scan(universe: Universe, prefix: &[usize], top: usize) -> TopLevels {
    let mut levels = TopLevels::new(top);
    let n = universe.n();
    let w = Weights::new(n);
    let (t, _) = tree_shape(universe);
    let mut edges = Vec::with_capacity(n);
    let mut deg = vec![0usize; n];
    let mut scratch = vec![0usize; n];
    match universe {
        Universe::QuasiTree { k, .. } => {
            let masks = subset_masks(t, k);
            for_each_tree(universe, prefix, |index, seq| {
                tree_degrees(seq, t, &mut deg);
                prufer::decode_into(seq, t, &mut edges, &mut scratch);
                for &mask in &masks {
                    let d = |i: usize| deg[i] + (mask >> i & 1) as usize;
                    let mut so = 0.0;
                    for &(a, b) in &edges {
                        so += w.get(d(a), d(b));
                    }
                    for i in (0..t).filter(|i| mask >> i & 1 == 1) {
                        so += w.get(k, d(i));
                    }
                    levels.offer(so, index << 16 | mask as u64, || {
                        let mut pairs: Vec<_> = edges.iter().map(|&(a, b)| (d(a), d(b))).collect();
                        pairs.extend((0..t).filter(|i| mask >> i & 1 == 1).map(|i| (k, d(i))));
                        pairs
                    });
                }
            });
        }
        Universe::Tree { .. } => {
            for_each_tree(universe, prefix, |index, seq| {
                tree_degrees(seq, n, &mut deg);
                prufer::decode_into(seq, n, &mut edges, &mut scratch);
                let so = edges.iter().map(|&(a, b)| w.get(deg[a], deg[b])).sum();
                levels.offer(so, index, || edges.iter().map(|&(a, b)| (deg[a], deg[b])).collect());
            });
        }
        Universe::Unicyclic { .. } => {
            let mut adjacent = vec![0u16; n];
            for_each_tree(universe, prefix, |index, seq| {
                tree_degrees(seq, n, &mut deg);
                prufer::decode_into(seq, n, &mut edges, &mut scratch);
                adjacent.iter_mut().for_each(|a| *a = 0);
                for &(a, b) in &edges {
                    adjacent[a] |= 1 << b;
                    adjacent[b] |= 1 << a;
                }
                for (u, &row) in adjacent.iter().enumerate() {
                    for v in u + 1..n {
                        if row >> v & 1 == 1 {
                            continue;
                        }
                        let d = |i: usize| deg[i] + usize::from(i == u || i == v);
                        let so = edges.iter().map(|&(a, b)| w.get(d(a), d(b))).sum::<f64>() + w.get(d(u), d(v));
                        if so < levels.threshold() || !closes_at_max_edge(&edges, n, u, v) {
                            continue;
                        }
                        levels.offer(so, index << 8 | (u << 4 | v) as u64, || {
                            let mut pairs: Vec<_> = edges.iter().map(|&(a, b)| (d(a), d(b))).collect();
                            pairs.push((d(u), d(v)));
                            pairs
                        });
                    }
                }
            });
        }
    }
    levels
}

fn tree_degrees(seq: &[usize], t: usize, deg: &mut [usize]) {
    deg[..t].iter_mut().for_each(|d| *d = 1);
    for &s in seq {
        deg[s] += 1;
    }
}

/// Whether `uv` (with `u < v`) exceeds every tree edge on the `u`-`v` path.
fn closes_at_max_edge(tree: &[(usize, usize)], n: usize, u: usize, v: usize) -> bool {
    let mut parent = vec![usize::MAX; n];
    let mut stack = vec![u];
    parent[u] = u;
    while let Some(x) = stack.pop() {
        for &(a, b) in tree {
            let y = if a == x { b } else if b == x { a } else { continue };
            if parent[y] == usize::MAX {
                parent[y] = x;
                stack.push(y);
            }
        }
    }
    let mut x = v;
    while x != u {
        let p = parent[x];
        if (p.min(x), p.max(x)) > (u, v) {
            return false;
        }
        x = p;
    }
    true
}

fn finish(universe: Universe, levels: TopLevels) -> Vec<RankEntry> {
    levels
        .into_levels()
        .into_iter()
        .enumerate()
        .map(|(i, (_, mut ids))| {
            ids.sort_unstable();
            let classified: Vec<(CanonicalForm, u64)> = ids
                .par_iter()
                .map(|&id| {
                    let g = decode_id(universe, id).expect("retained ids are canonical");
                    (canonical_form(&g).expect("enumeration order is small"), id)
                })
                .collect();
            let mut classes: BTreeMap<CanonicalForm, (u64, u64)> = BTreeMap::new();
            for (form, id) in classified {
                let e = classes.entry(form).or_insert((0, id));
                e.0 += 1;
                e.1 = e.1.min(id);
            }
            let reps: Vec<Representative> = classes
                .into_iter()
                .map(|(form, (count, id))| Representative {
                    form,
                    graph: decode_id(universe, id).expect("retained ids are canonical"),
                    labeled_count: count,
                })
                .collect();
            let first = decode_id(universe, ids[0]).expect("retained ids are canonical");
            RankEntry {
                level: i + 1,
                value: sombor_index(&first),
                reps,
                labeled_count: ids.len() as u64,
            }
        })
        .collect()
}

/// Distinct canonical forms over every `k` of the quasi-tree universe.
pub fn quasi_tree_classes(n: usize) -> Result<BTreeSet<CanonicalForm>> {
    let mut out = BTreeSet::new();
    for k in 1..n {
        out.extend(census(Universe::QuasiTree { n, k })?.into_keys());
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{construct, Family, FamilySpec};
    use crate::formulas;

    fn form_of(family: Family, n: usize, k: usize) -> CanonicalForm {
        canonical_form(&construct(FamilySpec::new(family, n, k).unwrap()).unwrap().0).unwrap()
    }

    #[test]
    fn order_four_has_five_quasi_tree_classes() {
        // P4, K_{1,3}, C4, paw, diamond
        assert_eq!(quasi_tree_classes(4).unwrap().len(), 5);
    }

    #[test]
    fn order_five_universe_size() {
        let total: u64 = (1..5).map(|k| census(Universe::QuasiTree { n: 5, k }).unwrap().values().sum::<u64>()).sum();
        assert_eq!(total, 16 * (4 + 6 + 4 + 1));
        for k in 1..5 {
            let u = Universe::QuasiTree { n: 5, k };
            assert_eq!(census(u).unwrap().values().sum::<u64>(), u.labeled_size());
        }
    }

    #[test]
    fn every_visited_graph_has_the_apex_witness() {
        for k in 1..6 {
            let u = Universe::QuasiTree { n: 6, k };
            for id in all_ids(u) {
                let g = decode_id(u, id).unwrap();
                assert!(crate::graph::QuasiTreeWitness { apex: 5, k }.verify(&g));
            }
        }
    }

    #[test]
    fn unicyclic_universe_counts_each_graph_once() {
        // labelled connected unicyclic graphs on 5 vertices: 222
        let u = Universe::Unicyclic { n: 5 };
        let graphs: Vec<Graph> = all_ids(u).into_iter().filter_map(|id| decode_id(u, id)).collect();
        assert_eq!(graphs.len(), 222);
        assert!(graphs.iter().all(Graph::is_unicyclic));
        let distinct: std::collections::HashSet<_> = graphs.iter().collect();
        assert_eq!(distinct.len(), graphs.len());
    }

    #[test]
    fn max_of_q52() {
        let r = enumerate_rank(&EnumerationTask::quasi_tree(5, 2).top(1)).unwrap();
        assert_eq!(r.len(), 1);
        let phi = formulas::phi(5, 2).unwrap().value;
        assert!((r[0].value.value - phi).abs() < 1e-9);
        assert!((phi - 20.01891).abs() < 1e-5);
        assert_eq!(r[0].unique().unwrap().form, form_of(Family::Q, 5, 2));
    }

    #[test]
    fn trees_as_quasi_trees_of_order_six() {
        let r = enumerate_rank(&EnumerationTask::quasi_tree(6, 1)).unwrap();
        let expected = [Family::S, Family::Sprime, Family::Sdprime];
        for (entry, family) in r.iter().zip(expected) {
            assert_eq!(entry.unique().unwrap().form, form_of(family, 6, 1), "level {}", entry.level);
        }
        // the apex is a fixed leaf, so only the hub label varies
        assert_eq!(r[0].labeled_count, 5);
    }

    #[test]
    fn tree_universe_counts_labelled_stars() {
        let r = enumerate_rank(&EnumerationTask::new(Universe::Tree { n: 6 }).top(1)).unwrap();
        assert_eq!(r[0].labeled_count, 6);
    }

    #[test]
    fn q76_and_q_prime_76() {
        let r = enumerate_rank(&EnumerationTask::quasi_tree(7, 6).top(2)).unwrap();
        assert_eq!(r[0].unique().unwrap().form, form_of(Family::Q, 7, 6));
        assert_eq!(r[1].unique().unwrap().form, form_of(Family::Qprime, 7, 6));
    }

    #[test]
    fn levels_strictly_decrease() {
        let r = enumerate_rank(&EnumerationTask::quasi_tree(7, 3).top(6)).unwrap();
        assert_eq!(r.len(), 6);
        for w in r.windows(2) {
            assert_eq!(crate::sombor::compare(&w[0].value, &w[1].value).ordering, std::cmp::Ordering::Greater);
        }
    }

    #[test]
    fn independent_of_worker_count() {
        let task = EnumerationTask::quasi_tree(7, 3).top(4);
        let one = enumerate_rank(&task.clone().jobs(1)).unwrap();
        let four = enumerate_rank(&task.jobs(4)).unwrap();
        assert_eq!(one, four);
    }

    #[test]
    fn size_guards() {
        assert!(matches!(
            enumerate_rank(&EnumerationTask::quasi_tree(11, 2)),
            Err(Error::UnsupportedSize { .. })
        ));
        assert!(enumerate_rank(&EnumerationTask::quasi_tree(6, 6)).is_err());
        assert!(enumerate_rank(&EnumerationTask::quasi_tree(6, 2).top(0)).is_err());
    }
}
