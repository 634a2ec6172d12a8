//! Fixed inputs shared by the benchmarks.

use sombor_core::families::{construct, Family, FamilySpec};
use sombor_core::oracle::prufer_decode;
use sombor_core::Graph;

/// A named family member, built once per benchmark group.
pub fn family(family: Family, n: usize, k: usize) -> Graph {
    construct(FamilySpec::new(family, n, k).expect("valid member")).expect("constructible").0
}

/// A tree of order `n` from a deterministic Prüfer sequence, plus `extra`
/// chords between vertices with spread-out labels.
pub fn scrambled(n: usize, extra: usize) -> Graph {
    let seq: Vec<usize> = (0..n - 2).map(|i| (i * 7 + 3) % n).collect();
    let mut g = prufer_decode(&seq, n).expect("valid sequence");
    let mut added = 0;
    let mut u = 0;
    while added < extra && u < n * n {
        let (a, b) = (u % n, (u * 5 + 2) % n);
        if a != b && !g.has_edge(a, b) {
            g = g.with_edge(a, b).expect("simple edge");
            added += 1;
        }
        u += 1;
    }
    g
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixtures_have_the_requested_shape() {
        let g = scrambled(12, 3);
        assert_eq!((g.n(), g.m()), (12, 14));
        assert!(family(Family::Qstar, 9, 2).is_connected());
    }
}
