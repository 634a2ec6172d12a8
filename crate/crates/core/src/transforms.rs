//! Sombor-increasing graph moves.
//!
//! * [`apply_swap`] replaces `uv, xy` by `uy, xv`. Degrees are unchanged, and
//!   when `d(u) >= d(x)` and `d(v) >= d(y)` the index does not decrease, with
//!   equality exactly when one of the two degree comparisons is tight.
//! * [`apply_rotation`] replaces `yz` by `xy`. When `x` dominates `z` in the
//!   sense of [`dominates`], the index strictly increases.
//!
//! The moves are purely mechanical: they do not require the degree
//! hypotheses and may disconnect the graph.

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};
use crate::oracle::prufer_decode;
use crate::report::{ClaimId, DetailRecord, EdgeList, Number, ParamRange, VerificationReport};
use crate::sombor::{compare, sombor_index};
use rand::seq::IndexedRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::cmp::Ordering;
use std::time::Instant;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SwapMove {
    pub u: Vertex,
    pub v: Vertex,
    pub x: Vertex,
    pub y: Vertex,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct RotationMove {
    pub x: Vertex,
    pub y: Vertex,
    pub z: Vertex,
}

impl SwapMove {
    pub fn validate(&self, g: &Graph) -> Result<()> {
        let SwapMove { u, v, x, y } = *self;
        for w in [u, v, x, y] {
            g.degree(w)?;
        }
        let vs = [u, v, x, y];
        if (0..4).any(|i| (i + 1..4).any(|j| vs[i] == vs[j])) {
            return Err(Error::InvalidMove(format!("vertices {vs:?} are not distinct")));
        }
        if !g.has_edge(u, v) || !g.has_edge(x, y) {
            return Err(Error::InvalidMove(format!("{u}{v} and {x}{y} must both be edges")));
        }
        if g.has_edge(u, y) || g.has_edge(x, v) {
            return Err(Error::InvalidMove(format!("{u}{y} and {x}{v} must both be non-edges")));
        }
        Ok(())
    }

    /// `d(u) >= d(x)` and `d(v) >= d(y)`.
    pub fn degree_condition(&self, g: &Graph) -> bool {
        g.deg(self.u) >= g.deg(self.x) && g.deg(self.v) >= g.deg(self.y)
    }

    /// Whether the move leaves the index unchanged under the degree condition.
    pub fn is_tight(&self, g: &Graph) -> bool {
        g.deg(self.u) == g.deg(self.x) || g.deg(self.v) == g.deg(self.y)
    }
}

impl RotationMove {
    pub fn validate(&self, g: &Graph) -> Result<()> {
        let RotationMove { x, y, z } = *self;
        for w in [x, y, z] {
            g.degree(w)?;
        }
        if x == y || y == z || x == z {
            return Err(Error::InvalidMove(format!("vertices {x}, {y}, {z} are not distinct")));
        }
        if g.has_edge(x, y) {
            return Err(Error::InvalidMove(format!("{x}{y} must be a non-edge")));
        }
        if !g.has_edge(y, z) {
            return Err(Error::InvalidMove(format!("{y}{z} must be an edge")));
        }
        Ok(())
    }
}

/// `d(x) >= d(z)` and every neighbour of `x` other than `z` has degree at
/// most that of every neighbour of `z` other than `x`.
pub fn dominates(g: &Graph, x: Vertex, z: Vertex) -> Result<bool> {
    g.degree(x)?;
    g.degree(z)?;
    if x == z {
        return Err(Error::arg(format!("dominance needs distinct vertices, got {x} twice")));
    }
    if g.deg(x) < g.deg(z) {
        return Ok(false);
    }
    let max_x = g.neighbors(x).iter().filter(|&&w| w != z).map(|&w| g.deg(w)).max();
    let min_z = g.neighbors(z).iter().filter(|&&w| w != x).map(|&w| g.deg(w)).min();
    Ok(match (max_x, min_z) {
        (Some(a), Some(b)) => a <= b,
        _ => true,
    })
}

pub fn apply_swap(g: &Graph, m: SwapMove) -> Result<Graph> {
    m.validate(g)?;
    g.without_edge(m.u, m.v)?
        .without_edge(m.x, m.y)?
        .with_edge(m.u, m.y)?
        .with_edge(m.x, m.v)
}

pub fn apply_rotation(g: &Graph, m: RotationMove) -> Result<Graph> {
    m.validate(g)?;
    g.without_edge(m.y, m.z)?.with_edge(m.x, m.y)
}

/// Random labelled graph for contract sampling: either a random tree with a
/// few extra edges or a dense `G(n, p)`.
pub fn random_graph<R: Rng>(rng: &mut R, n_min: usize, n_max: usize) -> Graph {
    let n = rng.random_range(n_min..=n_max);
    if rng.random_bool(0.6) {
        let seq: Vec<usize> = (0..n - 2).map(|_| rng.random_range(0..n)).collect();
        let mut g = prufer_decode(&seq, n).expect("valid sequence");
        for _ in 0..rng.random_range(0..=3) {
            let (a, b) = (rng.random_range(0..n), rng.random_range(0..n));
            if a != b && !g.has_edge(a, b) {
                g = g.with_edge(a, b).expect("absent edge");
            }
        }
        g
    } else {
        let p = rng.random_range(0.15..0.75);
        let edges: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .filter(|_| rng.random_bool(p))
            .collect();
        Graph::from_edges(n, &edges).expect("simple")
    }
}

/// Random valid swap on `g` satisfying the degree condition, if one is found
/// among a few random edge pairs.
pub fn sample_swap<R: Rng>(rng: &mut R, g: &Graph) -> Option<SwapMove> {
    let edges: Vec<(Vertex, Vertex)> = g.edges().collect();
    if edges.len() < 2 {
        return None;
    }
    for _ in 0..8 {
        let &(a, b) = edges.choose(rng)?;
        let &(c, d) = edges.choose(rng)?;
        let mut options: Vec<SwapMove> = [(a, b), (b, a)]
            .into_iter()
            .flat_map(|(u, v)| [(c, d), (d, c)].into_iter().map(move |(x, y)| SwapMove { u, v, x, y }))
            .filter(|m| m.validate(g).is_ok() && m.degree_condition(g))
            .collect();
        if !options.is_empty() {
            let i = rng.random_range(0..options.len());
            return Some(options.swap_remove(i));
        }
    }
    None
}

/// Random valid rotation on `g` with `x` dominating `z`, if one is found.
pub fn sample_rotation<R: Rng>(rng: &mut R, g: &Graph) -> Option<RotationMove> {
    let n = g.n();
    for _ in 0..8 {
        let z = rng.random_range(0..n);
        let &y = g.neighbors(z).choose(rng)?;
        let candidates: Vec<Vertex> = (0..n).filter(|&x| x != z && x != y && !g.has_edge(x, y)).collect();
        let &x = candidates.choose(rng)?;
        if dominates(g, x, z).expect("distinct vertices") {
            return Some(RotationMove { x, y, z });
        }
    }
    None
}

/// Randomised check of the swap inequality over `samples` instances.
pub fn check_swap_contract(samples: usize, seed: u64) -> VerificationReport {
    let started = Instant::now();
    let mut report = VerificationReport::new(ClaimId::Lemma23, ParamRange::new(4, 10, "random swaps with d(u)>=d(x), d(v)>=d(y)"));
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (mut strict, mut tight) = (0, 0);
    let mut attempts = 0usize;
    while report.checked < samples && attempts < 1000 * samples.max(1) {
        attempts += 1;
        let g = random_graph(&mut rng, 4, 10);
        let Some(m) = sample_swap(&mut rng, &g) else { continue };
        let h = apply_swap(&g, m).expect("validated move");
        let (before, after) = (sombor_index(&g), sombor_index(&h));
        let ord = compare(&after, &before).ordering;
        let expected = if m.is_tight(&g) { Ordering::Equal } else { Ordering::Greater };
        match expected {
            Ordering::Equal => tight += 1,
            _ => strict += 1,
        }
        let ok = ord == expected && g.degrees() == h.degrees();
        report.check(ok, || {
            let mut d = DetailRecord::new(Some(g.n()), None, format!("swap {m:?}"), false)
                .values(Number::from(&before), Number::from(&after));
            d.representatives = vec![EdgeList::from(&g), EdgeList::from(&h)];
            d
        });
    }
    if report.checked < samples {
        report.push(DetailRecord::new(None, None, format!("only {} of {samples} samples drawn", report.checked), false));
    }
    report.note(format!("{strict} strict increases, {tight} equality cases"));
    report.finish(started)
}

/// Randomised check of the rotation inequality over `samples` instances.
pub fn check_rotation_contract(samples: usize, seed: u64) -> VerificationReport {
    let started = Instant::now();
    let mut report = VerificationReport::new(ClaimId::Lemma24, ParamRange::new(4, 10, "random rotations with x dominating z"));
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut adjacent = 0;
    let mut attempts = 0usize;
    while report.checked < samples && attempts < 1000 * samples.max(1) {
        attempts += 1;
        let g = random_graph(&mut rng, 4, 10);
        let Some(m) = sample_rotation(&mut rng, &g) else { continue };
        let h = apply_rotation(&g, m).expect("validated move");
        if g.has_edge(m.x, m.z) {
            adjacent += 1;
        }
        let (before, after) = (sombor_index(&g), sombor_index(&h));
        let degrees_ok = (0..g.n()).all(|w| {
            let want = match w {
                w if w == m.x => g.deg(w) + 1,
                w if w == m.z => g.deg(w) - 1,
                w => g.deg(w),
            };
            h.deg(w) == want
        });
        let ok = compare(&after, &before).ordering == Ordering::Greater && degrees_ok;
        report.check(ok, || {
            let mut d = DetailRecord::new(Some(g.n()), None, format!("rotation {m:?}"), false)
                .values(Number::from(&before), Number::from(&after));
            d.representatives = vec![EdgeList::from(&g), EdgeList::from(&h)];
            d
        });
    }
    if report.checked < samples {
        report.push(DetailRecord::new(None, None, format!("only {} of {samples} samples drawn", report.checked), false));
    }
    report.note(format!("{adjacent} samples with x adjacent to z"));
    report.finish(started)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::fixtures::*;

    #[test]
    fn star_hub_dominates_leaf() {
        let s = star(5);
        assert!(dominates(&s, 0, 3).unwrap());
        assert!(dominates(&s, 0, 0).is_err());
    }

    #[test]
    fn p4_inner_vertices_dominate_each_other() {
        let p = path(4);
        assert!(dominates(&p, 1, 2).unwrap());
        assert!(dominates(&p, 2, 1).unwrap());
    }

    #[test]
    fn double_star_larger_hub_dominates() {
        // hubs 0 (four leaves) and 1 (two leaves)
        let g = Graph::from_edges(8, &[(0, 1), (0, 2), (0, 3), (0, 4), (0, 5), (1, 6), (1, 7)]).unwrap();
        assert!(dominates(&g, 0, 1).unwrap());
        assert!(!dominates(&g, 1, 0).unwrap());
    }

    #[test]
    fn swap_on_p5_is_tight() {
        let g = path(5);
        let m = SwapMove { u: 2, v: 3, x: 0, y: 1 };
        // uv = 23, xy = 01; uy = 21 is an edge of P5, so this orientation is invalid
        assert!(apply_swap(&g, m).is_err());
        // the degree-valid orientation u=3, v=2 (d=2,2) against x=0, y=1 (d=1,2)
        let m = SwapMove { u: 3, v: 2, x: 0, y: 1 };
        assert!(m.degree_condition(&g));
        assert!(m.is_tight(&g));
        let h = apply_swap(&g, m).unwrap();
        assert_eq!(compare(&sombor_index(&h), &sombor_index(&g)).ordering, Ordering::Equal);
        assert_eq!(h.degrees(), g.degrees());
    }

    #[test]
    fn swap_strict_instance_on_trees_of_order_7() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let found = (0..10_000).find_map(|_| {
            let seq: Vec<usize> = (0..5).map(|_| rng.random_range(0..7)).collect();
            let g = prufer_decode(&seq, 7).unwrap();
            let m = sample_swap(&mut rng, &g)?;
            (g.deg(m.u) > g.deg(m.x) && g.deg(m.v) > g.deg(m.y)).then_some((g, m))
        });
        let (g, m) = found.expect("strict instance exists");
        let h = apply_swap(&g, m).unwrap();
        assert_eq!(compare(&sombor_index(&h), &sombor_index(&g)).ordering, Ordering::Greater);
    }

    #[test]
    fn swap_rejects_invalid_moves() {
        let g = cycle(4);
        assert!(matches!(apply_swap(&g, SwapMove { u: 0, v: 1, x: 0, y: 3 }), Err(Error::InvalidMove(_))));
        assert!(matches!(apply_swap(&g, SwapMove { u: 0, v: 2, x: 1, y: 3 }), Err(Error::InvalidMove(_))));
        assert!(apply_swap(&g, SwapMove { u: 0, v: 1, x: 9, y: 3 }).is_err());
    }

    #[test]
    fn rotating_pendant_path_onto_hub() {
        // star on 0..4 with a pendant path 4-5
        let g = star(5).without_vertex(4).unwrap();
        let g = Graph::from_edges(6, &g.edges().chain([(0, 4), (4, 5)]).collect::<Vec<_>>()).unwrap();
        let m = RotationMove { x: 0, y: 5, z: 4 };
        assert!(dominates(&g, 0, 4).unwrap());
        let h = apply_rotation(&g, m).unwrap();
        assert!(sombor_index(&h).value > sombor_index(&g).value);
    }

    #[test]
    fn broom_to_star_trace_is_increasing() {
        // broom: path 0-1-2-3 with leaves 4,5,6 on vertex 0
        let mut g = Graph::from_edges(7, &[(0, 1), (1, 2), (2, 3), (0, 4), (0, 5), (0, 6)]).unwrap();
        let mut trace = vec![sombor_index(&g).value];
        loop {
            let hub = (0..g.n()).max_by_key(|&v| (g.deg(v), std::cmp::Reverse(v))).unwrap();
            let mv = (0..g.n()).filter(|&z| z != hub).find_map(|z| {
                let y = *g.neighbors(z).iter().find(|&&y| y != hub && !g.has_edge(hub, y))?;
                dominates(&g, hub, z).unwrap().then_some(RotationMove { x: hub, y, z })
            });
            let Some(m) = mv else { break };
            g = apply_rotation(&g, m).unwrap();
            trace.push(sombor_index(&g).value);
        }
        assert!(trace.windows(2).all(|w| w[1] > w[0]), "{trace:?}");
        assert_eq!(g.max_degree(), 6);
        assert!(g.is_tree());
    }

    #[test]
    fn rotation_applies_without_dominance() {
        let g = path(4);
        // 3 does not dominate 0 here, but the move is still mechanical
        let m = RotationMove { x: 3, y: 1, z: 0 };
        assert!(apply_rotation(&g, m).is_ok());
        assert!(apply_rotation(&g, RotationMove { x: 0, y: 1, z: 2 }).is_err());
    }

    #[test]
    fn contracts_small_sample() {
        let swap = check_swap_contract(500, 1);
        assert!(swap.passed(), "{:?}", swap.failures().next());
        assert_eq!(swap.checked, 500);
        let rot = check_rotation_contract(500, 2);
        assert!(rot.passed(), "{:?}", rot.failures().next());
        assert_eq!(rot.checked, 500);
    }
}
