//! Heads, tails and parametrizing sets.
//!
//! A vertex set `H` is a head when it is its own barren subset and lies in
//! a single district of the subgraph induced on its ancestors; its tail is
//! the rest of that district plus the district's parents. The
//! parametrizing set of a graph collects every head together with every
//! subset of its tail (plus the cliques of the undirected part). Two
//! routes compute the size-limited variants: a definitional brute force
//! built on head enumeration, and a fast `O(ne^2)` extraction for MAGs
//! that works from parent lists and bidirected edges only and never
//! materializes triangles.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::graph::{EdgeKind, MixedGraph};
use crate::opcount::OpCounter;
use crate::set::VertexSet;

/// Vertex budget for head enumeration.
pub const HEAD_ENUM_GUARD: usize = 20;
/// Vertex budget for the full parametrizing-set expansion.
pub const PARAM_SET_GUARD: usize = 16;

/// A head together with its tail.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct HeadTail {
    pub head: VertexSet,
    pub tail: VertexSet,
}

/// Which parametrizing-set variant a [`ParamSet`] holds.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ParamSetKind {
    /// Every head united with every subset of its tail, plus cliques of
    /// the undirected part.
    Full,
    /// The members of size 2 or 3.
    S3,
    /// The members of size 2 or 3 whose vertices carry exactly 1 or 2
    /// pairwise adjacencies.
    S3Tilde,
}

/// A canonical collection of vertex sets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParamSet {
    kind: ParamSetKind,
    sets: BTreeSet<VertexSet>,
}

impl ParamSet {
    fn new(kind: ParamSetKind) -> ParamSet {
        ParamSet {
            kind,
            sets: BTreeSet::new(),
        }
    }

    pub fn kind(&self) -> ParamSetKind {
        self.kind
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    pub fn contains(&self, set: &VertexSet) -> bool {
        self.sets.contains(set)
    }

    pub fn iter(&self) -> impl Iterator<Item = &VertexSet> {
        self.sets.iter()
    }

    /// The member sets as sorted label lists, for comparison across graphs
    /// whose index assignments differ.
    pub fn to_label_sets(&self, g: &MixedGraph) -> BTreeSet<Vec<String>> {
        self.sets.iter().map(|s| g.labels_of(s)).collect()
    }

    /// One line per set, `{a,b,c}` with labels sorted lexicographically;
    /// lines ordered by set size, then lexicographically.
    pub fn serialize(&self, g: &MixedGraph) -> String {
        let mut rows: Vec<Vec<String>> = self.sets.iter().map(|s| g.labels_of(s)).collect();
        rows.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        let mut out = String::new();
        for row in rows {
            out.push('{');
            out.push_str(&row.join(","));
            out.push_str("}\n");
        }
        out
    }
}

fn undirected_mask(g: &MixedGraph) -> Vec<bool> {
    (0..g.n() as u32)
        .map(|v| !g.neighbours_of(v).is_empty())
        .collect()
}

/// Tests the two head conditions for `H`: `barren(H) = H`, and `H` inside
/// a single district of the subgraph induced on `an(H)`. Heads live in the
/// directed part, so `H` must be nonempty and avoid vertices with
/// undirected edges.
pub fn is_head(g: &MixedGraph, h: &VertexSet) -> Result<bool> {
    check_head_domain(g, h)?;
    Ok(head_conditions(g, h))
}

fn check_head_domain(g: &MixedGraph, h: &VertexSet) -> Result<()> {
    if h.is_empty() {
        return Err(Error::EmptyHead);
    }
    for v in h {
        g.check_vertex(v)?;
        if !g.neighbours_of(v).is_empty() {
            return Err(Error::HeadInUndirectedPart(g.label(v).to_string()));
        }
    }
    Ok(())
}

fn head_conditions(g: &MixedGraph, h: &VertexSet) -> bool {
    if g.barren(h).expect("vertices checked") != *h {
        return false;
    }
    let an = g.ancestors_mask(h);
    let first = h.iter().next().expect("nonempty");
    let dis = g.district_mask(first, &an);
    h.iter().all(|v| dis[v as usize])
}

/// The tail of a head: `(dis_{an(H)}(H) \ H) ∪ pa(dis_{an(H)}(H))`.
/// Errors when `H` is not a head.
pub fn tail(g: &MixedGraph, h: &VertexSet) -> Result<VertexSet> {
    check_head_domain(g, h)?;
    if !head_conditions(g, h) {
        return Err(Error::NotAHead(format!("{:?}", g.labels_of(h))));
    }
    Ok(tail_of_head(g, h))
}

fn tail_of_head(g: &MixedGraph, h: &VertexSet) -> VertexSet {
    let an = g.ancestors_mask(h);
    let first = h.iter().next().expect("nonempty");
    let dis_mask = g.district_mask(first, &an);
    let dis = VertexSet::from_mask(&dis_mask);
    let pa = g.parents_set(&dis).expect("valid");
    dis.difference(h).union(&pa)
}

/// Enumerates every head of the graph with its tail, by subset search over
/// the directed part pruned by the barren condition. The number of heads
/// can be exponential; guarded to `n <= 20`.
pub fn enumerate_heads(g: &MixedGraph) -> Result<Vec<HeadTail>> {
    let n = g.n();
    if n > HEAD_ENUM_GUARD {
        return Err(Error::GuardExceeded(format!(
            "head enumeration needs n <= {HEAD_ENUM_GUARD}, got {n}"
        )));
    }
    let in_u = undirected_mask(g);
    let d: Vec<u32> = (0..n as u32).filter(|&v| !in_u[v as usize]).collect();
    // Ancestor bitmasks over the original indices.
    let an_bits: Vec<u64> = (0..n as u32)
        .map(|v| {
            let mask = g.ancestors_mask(&VertexSet::singleton(v));
            mask.iter()
                .enumerate()
                .fold(0u64, |acc, (i, &m)| if m { acc | (1 << i) } else { acc })
        })
        .collect();

    let mut out = Vec::new();
    for bits in 1u64..(1 << d.len()) {
        let mut h_bits = 0u64;
        for (i, &v) in d.iter().enumerate() {
            if (bits >> i) & 1 == 1 {
                h_bits |= 1 << v;
            }
        }
        // barren(H) = H: no member has another member among its ancestors.
        let mut antichain = true;
        let mut members = h_bits;
        while members != 0 {
            let v = members.trailing_zeros();
            members &= members - 1;
            if an_bits[v as usize] & h_bits != 1 << v {
                antichain = false;
                break;
            }
        }
        if !antichain {
            continue;
        }
        let h: VertexSet = (0..n as u32).filter(|&v| (h_bits >> v) & 1 == 1).collect();
        if head_conditions(g, &h) {
            let tail = tail_of_head(g, &h);
            out.push(HeadTail { head: h, tail });
        }
    }
    out.sort_by(|a, b| {
        (a.head.len(), &a.head, &a.tail).cmp(&(b.head.len(), &b.head, &b.tail))
    });
    Ok(out)
}

/// The full parametrizing set: every head united with every subset of its
/// tail, plus all cliques of the undirected part. Guarded to `n <= 16`.
pub fn param_set_full(g: &MixedGraph) -> Result<ParamSet> {
    let n = g.n();
    if n > PARAM_SET_GUARD {
        return Err(Error::GuardExceeded(format!(
            "parametrizing-set expansion needs n <= {PARAM_SET_GUARD}, got {n}"
        )));
    }
    let mut out = ParamSet::new(ParamSetKind::Full);
    for ht in enumerate_heads(g)? {
        let tail: Vec<u32> = ht.tail.iter().collect();
        for bits in 0u64..(1 << tail.len()) {
            let mut s = ht.head.clone();
            for (i, &t) in tail.iter().enumerate() {
                if (bits >> i) & 1 == 1 {
                    s.insert(t);
                }
            }
            out.sets.insert(s);
        }
    }
    // Cliques of the undirected part (complete under undirected adjacency).
    let u: Vec<u32> = VertexSet::from_mask(&undirected_mask(g)).iter().collect();
    for bits in 1u64..(1 << u.len()) {
        let members: Vec<u32> = u
            .iter()
            .enumerate()
            .filter(|&(i, _)| (bits >> i) & 1 == 1)
            .map(|(_, &v)| v)
            .collect();
        let complete = members.iter().enumerate().all(|(i, &a)| {
            members[i + 1..]
                .iter()
                .all(|&b| g.neighbours_of(a).binary_search(&b).is_ok())
        });
        if complete {
            out.sets.insert(VertexSet::from_vec(members));
        }
    }
    Ok(out)
}

fn adjacency_count(g: &MixedGraph, s: &VertexSet) -> usize {
    let items: Vec<u32> = s.iter().collect();
    let mut count = 0;
    for (i, &a) in items.iter().enumerate() {
        for &b in &items[i + 1..] {
            if g.adjacent(a, b) {
                count += 1;
            }
        }
    }
    count
}

/// Members of the parametrizing set of size 2 or 3, by brute force.
pub fn s3_brute(g: &MixedGraph) -> Result<ParamSet> {
    let full = param_set_full(g)?;
    let mut out = ParamSet::new(ParamSetKind::S3);
    out.sets = full
        .sets
        .into_iter()
        .filter(|s| (2..=3).contains(&s.len()))
        .collect();
    Ok(out)
}

/// Members of size 2 or 3 carrying exactly 1 or 2 pairwise adjacencies, by
/// brute force. This drops triangles (and triples with no adjacency), which
/// is what makes the fast route subquadratic in dense districts.
pub fn s3_tilde_brute(g: &MixedGraph) -> Result<ParamSet> {
    let s3 = s3_brute(g)?;
    let mut out = ParamSet::new(ParamSetKind::S3Tilde);
    out.sets = s3
        .sets
        .into_iter()
        .filter(|s| (1..=2).contains(&adjacency_count(g, s)))
        .collect();
    Ok(out)
}

/// Output of one instrumented fast extraction.
#[derive(Clone, Debug)]
pub struct FastRun {
    pub sets: ParamSet,
    pub ops: OpCounter,
    /// Distinct size-3 heads confirmed by the district membership test.
    pub heads3: u64,
}

/// Errors unless `g` is a MAG (single edge per pair, ancestral, maximal).
pub fn ensure_mag(g: &MixedGraph) -> Result<()> {
    if !g.single_edge_per_pair() {
        return Err(Error::NotAMag("a pair of vertices carries parallel edges".into()));
    }
    if !g.validate_ancestral() {
        return Err(Error::NotAMag("graph is not ancestral".into()));
    }
    if !g.validate_maximal() {
        return Err(Error::NotAMag("graph is not maximal".into()));
    }
    Ok(())
}

/// Fast extraction of the 1-or-2-adjacency parametrizing sets of size 2
/// and 3 for a MAG. Validates the input; see
/// [`s3_tilde_fast_unchecked`] for the trusting variant.
pub fn s3_tilde_fast(g: &MixedGraph) -> Result<ParamSet> {
    ensure_mag(g)?;
    Ok(s3_tilde_fast_unchecked(g).sets)
}

/// Fast extraction without revalidating the input. The caller guarantees
/// `g` is a MAG — for instance because it came out of
/// [`crate::projection::project_to_mag`].
pub fn s3_tilde_fast_unchecked(g: &MixedGraph) -> FastRun {
    fast_run(g, true)
}

/// The fast extraction with or without the adjacency filters on emitted
/// triples. With `filter_adjacent = false` the output is the size-2/3
/// parametrizing sets that carry *some* adjacency, minus the undirected
/// triangles — used by the bookkeeping tests.
pub(crate) fn fast_run(g: &MixedGraph, filter_adjacent: bool) -> FastRun {
    let n = g.n();
    let mut sets = BTreeSet::new();
    let mut ops = OpCounter::default();
    let mut heads3 = 0u64;

    let an_masks: Vec<Vec<bool>> = (0..n as u32)
        .map(|v| g.ancestors_mask(&VertexSet::singleton(v)))
        .collect();
    let district_ids = g.district_ids();

    // Directed edges: each parent contributes a pair, and each unshielded
    // pair of parents an unshielded-collider triple.
    for v in 0..n as u32 {
        let pa = g.parents_of(v);
        for &w in pa {
            ops.pair_inserts += 1;
            sets.insert(VertexSet::from_vec(vec![v, w]));
        }
        for (i, &w) in pa.iter().enumerate() {
            for &z in &pa[i + 1..] {
                ops.triple_candidates += 1;
                if filter_adjacent && g.adjacent(w, z) {
                    continue;
                }
                sets.insert(VertexSet::from_vec(vec![v, w, z]));
            }
        }
    }

    // Bidirected edges: the pair itself, triples through the pair's tail,
    // and size-3 heads found by the district membership test.
    for e in g.edges_of_kind(EdgeKind::Bidirected) {
        let (v, w) = if g.topo_position(e.u) < g.topo_position(e.v) {
            (e.u, e.v)
        } else {
            (e.v, e.u)
        };
        ops.pair_inserts += 1;
        sets.insert(VertexSet::from_vec(vec![v, w]));

        let mut an_vw = an_masks[v as usize].clone();
        for (slot, &m) in an_vw.iter_mut().zip(&an_masks[w as usize]) {
            *slot |= m;
        }

        // tail({v,w}) = dis ∪ pa(dis) minus the pair itself.
        let dis = district_counted(g, v, &an_vw, &mut ops);
        let mut tail_mask = dis.clone();
        for x in 0..n as u32 {
            if dis[x as usize] {
                for &p in g.parents_of(x) {
                    tail_mask[p as usize] = true;
                }
            }
        }
        tail_mask[v as usize] = false;
        tail_mask[w as usize] = false;
        for z in 0..n as u32 {
            if !tail_mask[z as usize] {
                continue;
            }
            ops.tail_tests += 1;
            if filter_adjacent && g.adjacent(z, v) && g.adjacent(z, w) {
                continue;
            }
            sets.insert(VertexSet::from_vec(vec![v, w, z]));
        }

        // Candidate third members: siblings of an({v,w}) in the district of
        // v, no ancestral relation with the pair.
        let de_vw = g.descendants_mask(&VertexSet::from_vec(vec![v, w]));
        let mut candidate = vec![false; n];
        for x in 0..n as u32 {
            if !an_vw[x as usize] {
                continue;
            }
            for &s in g.siblings_of(x) {
                let s_us = s as usize;
                if district_ids[s_us] == district_ids[v as usize]
                    && !an_vw[s_us]
                    && !de_vw[s_us]
                {
                    candidate[s_us] = true;
                }
            }
        }
        for z in 0..n as u32 {
            if !candidate[z as usize] {
                continue;
            }
            ops.triple_candidates += 1;
            if filter_adjacent && g.adjacent(z, v) && g.adjacent(z, w) {
                continue;
            }
            let mut an_vwz = an_vw.clone();
            for (slot, &m) in an_vwz.iter_mut().zip(&an_masks[z as usize]) {
                *slot |= m;
            }
            let dis3 = district_counted(g, v, &an_vwz, &mut ops);
            if dis3[z as usize] && sets.insert(VertexSet::from_vec(vec![v, w, z])) {
                heads3 += 1;
            }
        }
    }

    // Undirected part: connected pairs.
    for e in g.edges_of_kind(EdgeKind::Undirected) {
        ops.pair_inserts += 1;
        sets.insert(VertexSet::from_vec(vec![e.u, e.v]));
    }

    FastRun {
        sets: ParamSet {
            kind: ParamSetKind::S3Tilde,
            sets,
        },
        ops,
        heads3,
    }
}

/// District BFS with the operation accounting described on [`OpCounter`]:
/// every district obtain pays `n` for its working arrays plus one unit per
/// sibling incidence scanned.
fn district_counted(g: &MixedGraph, v: u32, within: &[bool], ops: &mut OpCounter) -> Vec<bool> {
    let n = g.n();
    ops.district_visits += n as u64;
    let mut seen = vec![false; n];
    seen[v as usize] = true;
    let mut stack = vec![v];
    while let Some(x) = stack.pop() {
        for &s in g.siblings_of(x) {
            ops.district_visits += 1;
            if within[s as usize] && !std::mem::replace(&mut seen[s as usize], true) {
                stack.push(s);
            }
        }
    }
    seen
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::format::parse;

    const EXAMPLE_A: &str = "!type mag\n1 <-> 2\n2 <-> 3\n3 -> 1\n3 -> 4\n2 -> 4\n";
    const EXAMPLE_B: &str = "!type mag\n2 -> 1\n2 -> 3\n4 -> 3\n3 -> 1\n4 -> 2\n";
    const EXAMPLE_C: &str = "!type mag\n1 <-> 2\n2 <-> 3\n3 <-> 4\n1 <-> 3\n2 -> 4\n";
    const SUMMARY_EX: &str = "!type summary\n1 - 2\n2 -> 4\n4 -> 3\n3 <-> 4\n";

    fn g(text: &str) -> MixedGraph {
        parse(text).unwrap()
    }

    fn vs(g: &MixedGraph, labels: &[&str]) -> VertexSet {
        labels.iter().map(|l| g.vertex(l).unwrap()).collect()
    }

    fn head_tail_labels(g: &MixedGraph, hts: &[HeadTail]) -> Vec<(Vec<String>, Vec<String>)> {
        hts.iter()
            .map(|ht| (g.labels_of(&ht.head), g.labels_of(&ht.tail)))
            .collect()
    }

    fn lbl(items: &[(&[&str], &[&str])]) -> Vec<(Vec<String>, Vec<String>)> {
        items
            .iter()
            .map(|(h, t)| {
                (
                    h.iter().map(|s| s.to_string()).collect(),
                    t.iter().map(|s| s.to_string()).collect(),
                )
            })
            .collect()
    }

    #[test]
    fn head_checks_on_example_a() {
        let a = g(EXAMPLE_A);
        assert!(is_head(&a, &vs(&a, &["1", "2"])).unwrap());
        assert!(!is_head(&a, &vs(&a, &["1", "4"])).unwrap());
        for v in ["1", "2", "3", "4"] {
            assert!(is_head(&a, &vs(&a, &[v])).unwrap());
        }
        assert!(matches!(is_head(&a, &VertexSet::new()), Err(Error::EmptyHead)));
    }

    #[test]
    fn heads_reject_undirected_part() {
        let s = g(SUMMARY_EX);
        assert!(matches!(
            is_head(&s, &vs(&s, &["1"])),
            Err(Error::HeadInUndirectedPart(_))
        ));
    }

    #[test]
    fn tails_of_named_heads() {
        let b = g(EXAMPLE_B);
        assert_eq!(b.labels_of(&tail(&b, &vs(&b, &["1"])).unwrap()), ["2", "3"]);
        let c = g(EXAMPLE_C);
        assert_eq!(
            c.labels_of(&tail(&c, &vs(&c, &["1", "3", "4"])).unwrap()),
            ["2"]
        );
        let s = g(SUMMARY_EX);
        assert_eq!(s.labels_of(&tail(&s, &vs(&s, &["3"])).unwrap()), ["2", "4"]);
        assert_eq!(s.labels_of(&tail(&s, &vs(&s, &["4"])).unwrap()), ["2"]);
        // Not a head: error.
        assert!(matches!(
            tail(&c, &vs(&c, &["2", "4"])),
            Err(Error::NotAHead(_))
        ));
    }

    #[test]
    fn head_tables_for_the_three_examples() {
        let a = g(EXAMPLE_A);
        assert_eq!(
            head_tail_labels(&a, &enumerate_heads(&a).unwrap()),
            lbl(&[
                (&["1"], &["3"]),
                (&["2"], &[]),
                (&["3"], &[]),
                (&["4"], &["2", "3"]),
                (&["1", "2"], &["3"]),
                (&["2", "3"], &[]),
            ])
        );
        let b = g(EXAMPLE_B);
        assert_eq!(
            head_tail_labels(&b, &enumerate_heads(&b).unwrap()),
            lbl(&[
                (&["1"], &["2", "3"]),
                (&["2"], &["4"]),
                (&["3"], &["2", "4"]),
                (&["4"], &[]),
            ])
        );
        let c = g(EXAMPLE_C);
        assert_eq!(
            head_tail_labels(&c, &enumerate_heads(&c).unwrap()),
            lbl(&[
                (&["1"], &[]),
                (&["2"], &[]),
                (&["3"], &[]),
                (&["4"], &["2"]),
                (&["1", "2"], &[]),
                (&["1", "3"], &[]),
                (&["2", "3"], &[]),
                (&["3", "4"], &["2"]),
                (&["1", "2", "3"], &[]),
                (&["1", "3", "4"], &["2"]),
            ])
        );
    }

    #[test]
    fn singleton_heads_of_empty_graph() {
        let e = g("vertex 1\nvertex 2\nvertex 3");
        let heads = enumerate_heads(&e).unwrap();
        assert_eq!(heads.len(), 3);
        assert!(heads.iter().all(|ht| ht.head.len() == 1 && ht.tail.is_empty()));
    }

    fn label_sets(g: &MixedGraph, p: &ParamSet) -> Vec<Vec<String>> {
        let mut rows: Vec<Vec<String>> = p.to_label_sets(g).into_iter().collect();
        rows.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        rows
    }

    fn rows(items: &[&[&str]]) -> Vec<Vec<String>> {
        let mut rows: Vec<Vec<String>> = items
            .iter()
            .map(|r| r.iter().map(|s| s.to_string()).collect())
            .collect();
        rows.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        rows
    }

    #[test]
    fn parametrizing_sets_of_example_a() {
        let a = g(EXAMPLE_A);
        let full = param_set_full(&a).unwrap();
        assert_eq!(
            label_sets(&a, &full),
            rows(&[
                &["1"], &["2"], &["3"], &["4"],
                &["1", "2"], &["1", "3"], &["2", "3"], &["2", "4"], &["3", "4"],
                &["1", "2", "3"], &["2", "3", "4"],
            ])
        );
        // Exactly the four missing sets.
        let missing: Vec<Vec<String>> = rows(&[
            &["1", "4"],
            &["1", "2", "4"],
            &["1", "3", "4"],
            &["1", "2", "3", "4"],
        ]);
        for m in &missing {
            let set: VertexSet = m.iter().map(|l| a.vertex(l).unwrap()).collect();
            assert!(!full.contains(&set));
        }
        assert_eq!(full.len() + missing.len(), 15);
    }

    #[test]
    fn parametrizing_sets_of_example_c() {
        let c = g(EXAMPLE_C);
        let full = param_set_full(&c).unwrap();
        assert_eq!(
            label_sets(&c, &full),
            rows(&[
                &["1"], &["2"], &["3"], &["4"],
                &["1", "2"], &["1", "3"], &["2", "3"], &["2", "4"], &["3", "4"],
                &["1", "2", "3"], &["1", "3", "4"], &["2", "3", "4"],
                &["1", "2", "3", "4"],
            ])
        );
    }

    #[test]
    fn single_vertex_parametrizing_set() {
        let g1 = g("vertex v");
        let full = param_set_full(&g1).unwrap();
        assert_eq!(label_sets(&g1, &full), rows(&[&["v"]]));
    }

    #[test]
    fn size_limited_sets_of_the_examples() {
        let a = g(EXAMPLE_A);
        assert_eq!(
            label_sets(&a, &s3_brute(&a).unwrap()),
            rows(&[
                &["1", "2"], &["1", "3"], &["2", "3"], &["2", "4"], &["3", "4"],
                &["1", "2", "3"], &["2", "3", "4"],
            ])
        );
        assert_eq!(
            label_sets(&a, &s3_tilde_brute(&a).unwrap()),
            rows(&[&["1", "2"], &["1", "3"], &["2", "3"], &["2", "4"], &["3", "4"]])
        );
        let c = g(EXAMPLE_C);
        assert_eq!(
            label_sets(&c, &s3_tilde_brute(&c).unwrap()),
            rows(&[
                &["1", "2"], &["1", "3"], &["2", "3"], &["2", "4"], &["3", "4"],
                &["1", "3", "4"],
            ])
        );
    }

    #[test]
    fn complete_bidirected_triangle_keeps_pairs_only() {
        let t = g("!type mag\na <-> b\nb <-> c\na <-> c");
        assert_eq!(
            label_sets(&t, &s3_tilde_brute(&t).unwrap()),
            rows(&[&["a", "b"], &["a", "c"], &["b", "c"]])
        );
        assert_eq!(
            label_sets(&t, &s3_tilde_fast(&t).unwrap()),
            rows(&[&["a", "b"], &["a", "c"], &["b", "c"]])
        );
    }

    #[test]
    fn fast_route_matches_brute_force_on_examples() {
        for text in [EXAMPLE_A, EXAMPLE_B, EXAMPLE_C] {
            let g = g(text);
            assert_eq!(
                s3_tilde_fast(&g).unwrap().to_label_sets(&g),
                s3_tilde_brute(&g).unwrap().to_label_sets(&g)
            );
        }
        // The two equivalent examples share their output.
        let a = g(EXAMPLE_A);
        let b = g(EXAMPLE_B);
        assert_eq!(
            s3_tilde_fast(&a).unwrap().to_label_sets(&a),
            s3_tilde_fast(&b).unwrap().to_label_sets(&b)
        );
    }

    #[test]
    fn fast_route_rejects_non_mags() {
        let nonmax = g("1 <-> 3\n2 <-> 4\n3 <-> 4\n3 -> 2\n4 -> 1");
        assert!(matches!(s3_tilde_fast(&nonmax), Err(Error::NotAMag(_))));
        let nonanc = g("1 <-> 3\n1 -> 2\n2 -> 3");
        assert!(matches!(s3_tilde_fast(&nonanc), Err(Error::NotAMag(_))));
    }

    #[test]
    fn undirected_extension() {
        // An undirected MAG component contributes its connected pairs but
        // not its triangles.
        let m = g("!type mag\na - b\nb - c\na - c\nd -> e");
        let fast = s3_tilde_fast(&m).unwrap();
        assert_eq!(
            label_sets(&m, &fast),
            rows(&[&["a", "b"], &["a", "c"], &["b", "c"], &["d", "e"]])
        );
        assert_eq!(
            fast.to_label_sets(&m),
            s3_tilde_brute(&m).unwrap().to_label_sets(&m)
        );
        // The full set still carries the clique.
        let full = param_set_full(&m).unwrap();
        let clique: VertexSet = ["a", "b", "c"].iter().map(|l| m.vertex(l).unwrap()).collect();
        assert!(full.contains(&clique));
    }

    #[test]
    fn summary_graph_parametrizing_set() {
        let s = g(SUMMARY_EX);
        let full = param_set_full(&s).unwrap();
        assert_eq!(
            label_sets(&s, &full),
            rows(&[
                &["1"], &["2"], &["3"], &["4"],
                &["1", "2"], &["2", "3"], &["2", "4"], &["3", "4"],
                &["2", "3", "4"],
            ])
        );
    }

    #[test]
    fn guards_reject_large_graphs() {
        let labels: Vec<String> = (0..21).map(|i| format!("v{i}")).collect();
        let big = MixedGraph::new(labels, vec![], crate::graph::GraphType::Admg).unwrap();
        assert!(matches!(enumerate_heads(&big), Err(Error::GuardExceeded(_))));
        let labels: Vec<String> = (0..17).map(|i| format!("v{i}")).collect();
        let mid = MixedGraph::new(labels, vec![], crate::graph::GraphType::Admg).unwrap();
        assert!(matches!(param_set_full(&mid), Err(Error::GuardExceeded(_))));
        assert!(enumerate_heads(&mid).is_ok());
    }

    #[test]
    fn pair_membership_iff_adjacent_on_random_mags() {
        // For a MAG, a pair is in the parametrizing set exactly when it is
        // adjacent; size-2 heads are exactly the bidirected edges.
        let mut checked = 0;
        for seed in 0..30u64 {
            let admg = crate::bench::random_admg(&crate::bench::GenConfig {
                n: 6,
                model: crate::bench::EdgeModel::FixedEdges { e: 9 },
                p_bidirected: 0.5,
                seed,
            })
            .unwrap();
            let mag = crate::projection::project_to_mag(&admg).unwrap().mag;
            let full = param_set_full(&mag).unwrap();
            for a in 0..mag.n() as u32 {
                for b in a + 1..mag.n() as u32 {
                    let pair = VertexSet::from_vec(vec![a, b]);
                    assert_eq!(full.contains(&pair), mag.adjacent(a, b));
                    let sib = mag.siblings_of(a).binary_search(&b).is_ok();
                    assert_eq!(is_head(&mag, &pair).unwrap(), sib);
                    checked += 1;
                }
            }
        }
        assert!(checked > 0);
    }

    #[test]
    fn bookkeeping_of_emitted_sets_on_random_mags() {
        // The unfiltered fast route plus undirected triangles equals the
        // size-2/3 sets with some adjacency, and the per-origin families
        // partition the size-3 layer.
        for seed in 100..140u64 {
            let admg = crate::bench::random_admg(&crate::bench::GenConfig {
                n: 7,
                model: crate::bench::EdgeModel::FixedEdges { e: 10 },
                p_bidirected: 0.5,
                seed,
            })
            .unwrap();
            let mag = crate::projection::project_to_mag(&admg).unwrap().mag;
            let full = param_set_full(&mag).unwrap();
            let s3: BTreeSet<VertexSet> = full
                .iter()
                .filter(|s| (2..=3).contains(&s.len()))
                .cloned()
                .collect();
            let s3_hat: BTreeSet<VertexSet> = s3
                .iter()
                .filter(|s| adjacency_count(&mag, s) > 0)
                .cloned()
                .collect();
            let unfiltered = fast_run(&mag, false);
            let got: BTreeSet<VertexSet> = unfiltered.sets.iter().cloned().collect();
            // No undirected component in these graphs, so no triangle term.
            assert_eq!(got, s3_hat, "seed {seed}");

            // Classify the size-3 layer by origin and check disjoint cover.
            let heads: Vec<HeadTail> = enumerate_heads(&mag).unwrap();
            let mut h1: BTreeSet<VertexSet> = BTreeSet::new();
            for v in 0..mag.n() as u32 {
                let pa = mag.parents_of(v);
                for (i, &w) in pa.iter().enumerate() {
                    for &z in &pa[i + 1..] {
                        h1.insert(VertexSet::from_vec(vec![v, w, z]));
                    }
                }
            }
            let mut h2: BTreeSet<VertexSet> = BTreeSet::new();
            for e in mag.edges_of_kind(EdgeKind::Bidirected) {
                let pair = VertexSet::from_vec(vec![e.u, e.v]);
                for z in &tail(&mag, &pair).unwrap() {
                    let mut s = pair.clone();
                    s.insert(z);
                    h2.insert(s);
                }
            }
            let h3: BTreeSet<VertexSet> = heads
                .iter()
                .filter(|ht| ht.head.len() == 3)
                .map(|ht| ht.head.clone())
                .collect();
            let s2: BTreeSet<VertexSet> =
                s3.iter().filter(|s| s.len() == 2).cloned().collect();
            assert!(h1.is_disjoint(&h2), "seed {seed}");
            assert!(h1.is_disjoint(&h3), "seed {seed}");
            assert!(h2.is_disjoint(&h3), "seed {seed}");
            let mut union = s2.clone();
            union.extend(h1.iter().cloned());
            union.extend(h2.iter().cloned());
            union.extend(h3.iter().cloned());
            assert_eq!(union, s3, "seed {seed}");
        }
    }

    #[test]
    fn dag_specialization() {
        // For a DAG the fast output is exactly the adjacent pairs plus the
        // unshielded colliders.
        for seed in 0..40u64 {
            let dag = crate::bench::random_sparse_dag(7, 2.0, seed).unwrap();
            let run = s3_tilde_fast_unchecked(&dag);
            let mut expect: BTreeSet<VertexSet> = BTreeSet::new();
            for e in dag.edges() {
                expect.insert(VertexSet::from_vec(vec![e.u, e.v]));
            }
            for v in 0..dag.n() as u32 {
                let pa = dag.parents_of(v);
                for (i, &w) in pa.iter().enumerate() {
                    for &z in &pa[i + 1..] {
                        if !dag.adjacent(w, z) {
                            expect.insert(VertexSet::from_vec(vec![v, w, z]));
                        }
                    }
                }
            }
            let got: BTreeSet<VertexSet> = run.sets.iter().cloned().collect();
            assert_eq!(got, expect, "seed {seed}");
        }
    }

    #[test]
    fn serialization_order() {
        let a = g(EXAMPLE_A);
        let text = s3_tilde_fast(&a).unwrap().serialize(&a);
        assert_eq!(text, "{1,2}\n{1,3}\n{2,3}\n{2,4}\n{3,4}\n");
    }
}
