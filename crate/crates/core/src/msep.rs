//! m-separation.
//!
//! Two independent decision procedures are provided. [`m_separated`] is the
//! normative fast test: a reachability search over walk states
//! `(vertex, incoming mark)` in which a walk may pass through a vertex as a
//! collider only if the vertex is in the conditioning set, and as a
//! noncollider only if it is not. A walk with these rules exists exactly
//! when an m-connecting path (colliders ancestral to the conditioning set,
//! noncolliders outside it) exists, so the search runs in `O(n + e)`
//! without computing ancestor sets. [`m_connected_oracle`] enumerates
//! simple paths exhaustively and applies the path-level definition
//! directly; it is exponential and guarded to small graphs, and exists so
//! the fast test can be checked against it.

use crate::error::{Error, Result};
use crate::graph::{EdgeKind, MixedGraph};
use crate::set::VertexSet;

/// Vertex budget for the exhaustive routines in this module.
pub const EXHAUSTIVE_GUARD: usize = 12;

/// End mark of an edge at one of its endpoints.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Mark {
    Tail,
    Head,
}

/// Incidence view of a vertex: `(other endpoint, mark here, mark there)`.
/// A pair carrying a directed and a bidirected edge contributes two
/// entries, so parallel edges are distinct path steps.
fn incidences(g: &MixedGraph, v: u32) -> impl Iterator<Item = (u32, Mark, Mark)> + '_ {
    let pa = g.parents_of(v).iter().map(|&p| (p, Mark::Head, Mark::Tail));
    let ch = g.children_of(v).iter().map(|&c| (c, Mark::Tail, Mark::Head));
    let sib = g.siblings_of(v).iter().map(|&s| (s, Mark::Head, Mark::Head));
    let nbr = g
        .neighbours_of(v)
        .iter()
        .map(|&u| (u, Mark::Tail, Mark::Tail));
    pa.chain(ch).chain(sib).chain(nbr)
}

/// One m-separation statement `a ⟂ b | C`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SepQuery {
    a: u32,
    b: u32,
    c: VertexSet,
}

impl SepQuery {
    /// Validates endpoints and conditioning set against `g`: `a != b`,
    /// all vertices in range, and `a, b` outside `C`.
    pub fn new(g: &MixedGraph, a: u32, b: u32, c: VertexSet) -> Result<SepQuery> {
        g.check_vertex(a)?;
        g.check_vertex(b)?;
        for v in &c {
            g.check_vertex(v)?;
        }
        if a == b {
            return Err(Error::InvalidQuery(format!(
                "endpoints coincide: '{}'",
                g.label(a)
            )));
        }
        if c.contains(a) || c.contains(b) {
            return Err(Error::InvalidQuery(
                "conditioning set contains an endpoint".into(),
            ));
        }
        Ok(SepQuery { a, b, c })
    }

    pub fn a(&self) -> u32 {
        self.a
    }

    pub fn b(&self) -> u32 {
        self.b
    }

    pub fn conditioning(&self) -> &VertexSet {
        &self.c
    }
}

/// True when `a` and `b` are m-separated given `C` in `g`.
pub fn m_separated(g: &MixedGraph, q: &SepQuery) -> bool {
    !walk_reachable(g, q)
}

fn walk_reachable(g: &MixedGraph, q: &SepQuery) -> bool {
    let n = g.n();
    let in_c = q.c.to_mask(n);
    // visited[(v, incoming mark)]
    let mut visited = vec![[false; 2]; n];
    let mut stack: Vec<(u32, Mark)> = Vec::new();

    for (w, _, mark_there) in incidences(g, q.a) {
        if w == q.b {
            return true;
        }
        let slot = &mut visited[w as usize][mark_there as usize];
        if !std::mem::replace(slot, true) {
            stack.push((w, mark_there));
        }
    }

    while let Some((v, incoming)) = stack.pop() {
        for (w, mark_here, mark_there) in incidences(g, v) {
            let collider = incoming == Mark::Head && mark_here == Mark::Head;
            let open = if collider {
                in_c[v as usize]
            } else {
                !in_c[v as usize]
            };
            if !open {
                continue;
            }
            if w == q.b {
                return true;
            }
            let slot = &mut visited[w as usize][mark_there as usize];
            if !std::mem::replace(slot, true) {
                stack.push((w, mark_there));
            }
        }
    }
    false
}

/// Exhaustive oracle: true when some simple path between the endpoints is
/// m-connecting given `C` (every noncollider outside `C`, every collider an
/// ancestor of `C`). Guarded to `n <= 12`.
pub fn m_connected_oracle(g: &MixedGraph, q: &SepQuery) -> Result<bool> {
    if g.n() > EXHAUSTIVE_GUARD {
        return Err(Error::GuardExceeded(format!(
            "path enumeration needs n <= {EXHAUSTIVE_GUARD}, got {}",
            g.n()
        )));
    }
    let in_c = q.c.to_mask(g.n());
    let an_c = g.ancestors_mask(&q.c);
    let mut on_path = vec![false; g.n()];
    on_path[q.a as usize] = true;
    Ok(connect_dfs(g, q.a, None, q.b, &in_c, &an_c, &mut on_path))
}

fn connect_dfs(
    g: &MixedGraph,
    v: u32,
    incoming: Option<Mark>,
    b: u32,
    in_c: &[bool],
    an_c: &[bool],
    on_path: &mut Vec<bool>,
) -> bool {
    for (w, mark_here, mark_there) in incidences(g, v) {
        if let Some(m) = incoming {
            let collider = m == Mark::Head && mark_here == Mark::Head;
            let open = if collider {
                an_c[v as usize]
            } else {
                !in_c[v as usize]
            };
            if !open {
                continue;
            }
        }
        if w == b {
            return true;
        }
        if on_path[w as usize] {
            continue;
        }
        on_path[w as usize] = true;
        let found = connect_dfs(g, w, Some(mark_there), b, in_c, an_c, on_path);
        on_path[w as usize] = false;
        if found {
            return true;
        }
    }
    false
}

/// All true m-separation statements of a graph, keyed by vertex label so
/// signatures of different graphs over the same labels are comparable.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SepSignature {
    entries: Vec<(String, String, Vec<String>)>,
}

impl SepSignature {
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[(String, String, Vec<String>)] {
        &self.entries
    }

    /// First statement present in exactly one of the two signatures,
    /// together with whether it holds in `self`.
    pub fn first_difference(&self, other: &SepSignature) -> Option<(bool, (String, String, Vec<String>))> {
        let a: std::collections::BTreeSet<_> = self.entries.iter().collect();
        let b: std::collections::BTreeSet<_> = other.entries.iter().collect();
        let only_a = a.difference(&b).next();
        let only_b = b.difference(&a).next();
        match (only_a, only_b) {
            (Some(x), Some(y)) => {
                if x <= y {
                    Some((true, (*x).clone()))
                } else {
                    Some((false, (*y).clone()))
                }
            }
            (Some(x), None) => Some((true, (*x).clone())),
            (None, Some(y)) => Some((false, (*y).clone())),
            (None, None) => None,
        }
    }

    /// One line per statement: `a b | c1,c2,...`.
    pub fn serialize(&self) -> String {
        let mut out = String::new();
        for (a, b, c) in &self.entries {
            out.push_str(a);
            out.push(' ');
            out.push_str(b);
            out.push_str(" |");
            if !c.is_empty() {
                out.push(' ');
                out.push_str(&c.join(","));
            }
            out.push('\n');
        }
        out
    }
}

/// Computes the full separation signature by running [`m_separated`] on
/// every pair and every conditioning set. Guarded to `n <= 12`.
pub fn sep_signature(g: &MixedGraph) -> Result<SepSignature> {
    let n = g.n();
    if n > EXHAUSTIVE_GUARD {
        return Err(Error::GuardExceeded(format!(
            "signature needs n <= {EXHAUSTIVE_GUARD}, got {n}"
        )));
    }
    let mut entries = Vec::new();
    for a in 0..n as u32 {
        for b in a + 1..n as u32 {
            let free: Vec<u32> = (0..n as u32).filter(|&v| v != a && v != b).collect();
            for bits in 0..(1u32 << free.len()) {
                let c: VertexSet = free
                    .iter()
                    .enumerate()
                    .filter(|&(i, _)| (bits >> i) & 1 == 1)
                    .map(|(_, &v)| v)
                    .collect();
                let q = SepQuery::new(g, a, b, c).expect("valid by construction");
                if m_separated(g, &q) {
                    let (mut la, mut lb) =
                        (g.label(a).to_string(), g.label(b).to_string());
                    if la > lb {
                        std::mem::swap(&mut la, &mut lb);
                    }
                    let mut lc: Vec<String> = q
                        .conditioning()
                        .iter()
                        .map(|v| g.label(v).to_string())
                        .collect();
                    lc.sort();
                    entries.push((la, lb, lc));
                }
            }
        }
    }
    entries.sort();
    Ok(SepSignature { entries })
}

/// A path `<x, q1, ..., qm, b, y>` that discriminates the collider status
/// of `b`: `x` and `y` nonadjacent, every `q_i` a collider on the path and
/// a parent of `y`, and `b` adjacent to `y` with an arrowhead at `y`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct DiscriminatingPath {
    /// The path vertices `x, q1, ..., qm, b, y` in order.
    pub vertices: Vec<u32>,
    /// The vertex whose collider status the path discriminates (always the
    /// second-to-last entry).
    pub discriminated: u32,
}

impl DiscriminatingPath {
    /// Whether the discriminated vertex is a collider on this path, i.e.
    /// both of its path edges carry an arrowhead at it.
    pub fn is_collider(&self, g: &MixedGraph) -> bool {
        let k = self.vertices.len();
        let (qm, b, y) = (self.vertices[k - 3], self.vertices[k - 2], self.vertices[k - 1]);
        has_edge(g, b, qm, EdgeKind::Bidirected) && has_edge(g, b, y, EdgeKind::Bidirected)
    }
}

fn has_edge(g: &MixedGraph, u: u32, v: u32, kind: EdgeKind) -> bool {
    match kind {
        EdgeKind::Directed => g.parents_of(v).binary_search(&u).is_ok(),
        EdgeKind::Bidirected => g.siblings_of(u).binary_search(&v).is_ok(),
        EdgeKind::Undirected => g.neighbours_of(u).binary_search(&v).is_ok(),
    }
}

/// Arrowhead at `v` on some edge joining `u` and `v`.
fn arrow_into(g: &MixedGraph, u: u32, v: u32) -> bool {
    has_edge(g, u, v, EdgeKind::Directed) || has_edge(g, u, v, EdgeKind::Bidirected)
}

/// Checks whether the vertex sequence `<x, q1..qm, b, y>` satisfies the
/// discriminating-path conditions in `g`.
pub fn is_discriminating_path(g: &MixedGraph, vertices: &[u32]) -> bool {
    let k = vertices.len();
    if k < 4 {
        return false;
    }
    let mut distinct = vertices.to_vec();
    distinct.sort_unstable();
    distinct.dedup();
    if distinct.len() != k {
        return false;
    }
    if vertices.iter().any(|&v| v as usize >= g.n()) {
        return false;
    }
    let x = vertices[0];
    let qs = &vertices[1..k - 2];
    let b = vertices[k - 2];
    let y = vertices[k - 1];
    if g.adjacent(x, y) {
        return false;
    }
    if !arrow_into(g, x, qs[0]) {
        return false;
    }
    for w in qs.windows(2) {
        if !has_edge(g, w[0], w[1], EdgeKind::Bidirected) {
            return false;
        }
    }
    for &q in qs {
        if !has_edge(g, q, y, EdgeKind::Directed) {
            return false;
        }
    }
    arrow_into(g, b, *qs.last().unwrap()) && arrow_into(g, b, y)
}

/// Enumerates every discriminating path, with the vertex it discriminates.
/// Exponential; guarded to `n <= 12`.
pub fn find_discriminating_paths(g: &MixedGraph) -> Result<Vec<DiscriminatingPath>> {
    let n = g.n();
    if n > EXHAUSTIVE_GUARD {
        return Err(Error::GuardExceeded(format!(
            "discriminating-path search needs n <= {EXHAUSTIVE_GUARD}, got {n}"
        )));
    }
    let mut out = Vec::new();
    for y in 0..n as u32 {
        let parents_of_y = g.parents_of(y);
        for b in 0..n as u32 {
            if b == y || !arrow_into(g, b, y) {
                continue;
            }
            for x in 0..n as u32 {
                if x == y || x == b || g.adjacent(x, y) {
                    continue;
                }
                for &q1 in parents_of_y {
                    if q1 == x || q1 == b || !arrow_into(g, x, q1) {
                        continue;
                    }
                    let mut chain = vec![q1];
                    extend_chain(g, x, b, y, parents_of_y, &mut chain, &mut out);
                }
            }
        }
    }
    out.sort();
    out.dedup();
    Ok(out)
}

fn extend_chain(
    g: &MixedGraph,
    x: u32,
    b: u32,
    y: u32,
    parents_of_y: &[u32],
    chain: &mut Vec<u32>,
    out: &mut Vec<DiscriminatingPath>,
) {
    let qm = *chain.last().unwrap();
    if arrow_into(g, b, qm) {
        let mut vertices = Vec::with_capacity(chain.len() + 3);
        vertices.push(x);
        vertices.extend_from_slice(chain);
        vertices.push(b);
        vertices.push(y);
        out.push(DiscriminatingPath {
            vertices,
            discriminated: b,
        });
    }
    for &q in parents_of_y {
        if q == x || q == b || chain.contains(&q) {
            continue;
        }
        if has_edge(g, qm, q, EdgeKind::Bidirected) {
            chain.push(q);
            extend_chain(g, x, b, y, parents_of_y, chain, out);
            chain.pop();
        }
    }
}
