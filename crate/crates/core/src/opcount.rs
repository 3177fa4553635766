//! Elementary-operation counters for empirical complexity runs.

/// Named monotone counters incremented by the fast parametrizing-set
/// extraction. The unit is a documented proxy for elementary work:
///
/// * `district_visits` — one per vertex slot initialized and one per
///   sibling incidence scanned whenever a district is obtained (each
///   district computation therefore costs at least `n`, matching its
///   `O(n + e)` bound);
/// * `tail_tests` — one per membership-plus-adjacency test on a tail
///   element;
/// * `pair_inserts` — one per size-2 set emitted;
/// * `triple_candidates` — one per candidate triple examined, whether or
///   not it is emitted.
///
/// Counts are deterministic for a fixed graph.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct OpCounter {
    pub district_visits: u64,
    pub tail_tests: u64,
    pub pair_inserts: u64,
    pub triple_candidates: u64,
}

impl OpCounter {
    pub fn total(&self) -> u64 {
        self.district_visits + self.tail_tests + self.pair_inserts + self.triple_candidates
    }

    /// Associative merge, so partial counters from sharded runs can be
    /// combined in any order.
    pub fn merge(&mut self, other: &OpCounter) {
        self.district_visits += other.district_visits;
        self.tail_tests += other.tail_tests;
        self.pair_inserts += other.pair_inserts;
        self.triple_candidates += other.triple_candidates;
    }
}
