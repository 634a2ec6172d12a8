use crate::sombor::{compare, SomborValue, ESCALATION_THRESHOLD};
use std::cmp::Ordering;

/// The `top` highest distinct index levels seen so far, each with the ids
/// of the labelled graphs attaining it.
pub(super) struct TopLevels {
    top: usize,
    levels: Vec<(SomborValue, Vec<u64>)>,
}

impl TopLevels {
    pub fn new(top: usize) -> Self {
        TopLevels {
            top,
            levels: Vec::with_capacity(top + 1),
        }
    }

    /// Values below this cannot reach a retained level.
    #[inline]
    pub fn threshold(&self) -> f64 {
        match self.levels.last() {
            Some((v, _)) if self.levels.len() == self.top => v.value - ESCALATION_THRESHOLD,
            _ => f64::NEG_INFINITY,
        }
    }

    /// Records graph `id` with approximate value `value`; `pairs` (edge degree
    /// pairs) is only built for graphs that may reach a retained level.
    #[inline]
    pub fn offer(&mut self, value: f64, id: u64, pairs: impl FnOnce() -> Vec<(usize, usize)>) {
        if value < self.threshold() {
            return;
        }
        let candidate = SomborValue::from_pairs(pairs());
        self.insert(candidate, vec![id]);
    }

    fn insert(&mut self, candidate: SomborValue, ids: Vec<u64>) {
        for i in 0..self.levels.len() {
            match compare(&candidate, &self.levels[i].0).ordering {
                Ordering::Equal => {
                    self.levels[i].1.extend(ids);
                    return;
                }
                Ordering::Greater => {
                    self.levels.insert(i, (candidate, ids));
                    self.levels.truncate(self.top);
                    return;
                }
                Ordering::Less => {}
            }
        }
        if self.levels.len() < self.top {
            self.levels.push((candidate, ids));
        }
    }

    pub fn merge(mut self, other: TopLevels) -> TopLevels {
        for (value, ids) in other.levels {
            self.insert(value, ids);
        }
        self
    }

    pub fn into_levels(self) -> Vec<(SomborValue, Vec<u64>)> {
        self.levels
    }
}
