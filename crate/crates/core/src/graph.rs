//! The mixed-graph data structure and its structural queries.
//!
//! A single [`MixedGraph`] type covers DAGs, ADMGs, MAGs and summary
//! graphs. Vertices are dense indices `0..n` with unique string labels;
//! edges are directed (`u -> v`), bidirected (`u <-> v`) or undirected
//! (`u - v`). The directed part is always acyclic. A pair of vertices may
//! carry both a directed and a bidirected edge (needed for summary graphs
//! and ADMGs); the `mag` graph type restricts pairs to a single edge.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::set::VertexSet;

/// The three edge kinds of a mixed graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum EdgeKind {
    /// `u -> v`: `u` is a parent of `v`.
    Directed,
    /// `u <-> v`: `u` and `v` are siblings.
    Bidirected,
    /// `u - v`: `u` and `v` are neighbours.
    Undirected,
}

impl EdgeKind {
    pub fn symbol(self) -> &'static str {
        match self {
            EdgeKind::Directed => "->",
            EdgeKind::Bidirected => "<->",
            EdgeKind::Undirected => "-",
        }
    }
}

/// One edge. Directed edges run `u -> v`; bidirected and undirected edges
/// are stored canonically with `u < v`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    pub u: u32,
    pub v: u32,
    pub kind: EdgeKind,
}

impl Edge {
    pub fn new(u: u32, v: u32, kind: EdgeKind) -> Edge {
        match kind {
            EdgeKind::Directed => Edge { u, v, kind },
            _ => Edge {
                u: u.min(v),
                v: u.max(v),
                kind,
            },
        }
    }
}

/// Declared type of a graph file. The parser and constructor enforce the
/// matching structural invariants; the semantic checks (ancestrality,
/// maximality) are separate queries.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum GraphType {
    Dag,
    #[default]
    Admg,
    Mag,
    Summary,
}

impl GraphType {
    pub fn name(self) -> &'static str {
        match self {
            GraphType::Dag => "dag",
            GraphType::Admg => "admg",
            GraphType::Mag => "mag",
            GraphType::Summary => "summary",
        }
    }

    pub fn from_name(s: &str) -> Option<GraphType> {
        match s {
            "dag" => Some(GraphType::Dag),
            "admg" => Some(GraphType::Admg),
            "mag" => Some(GraphType::Mag),
            "summary" => Some(GraphType::Summary),
            _ => None,
        }
    }

    fn allows(self, kind: EdgeKind) -> bool {
        match self {
            GraphType::Dag => kind == EdgeKind::Directed,
            GraphType::Admg => kind != EdgeKind::Undirected,
            GraphType::Mag | GraphType::Summary => true,
        }
    }
}

/// A mixed graph with labelled vertices.
///
/// Immutable after construction; all queries are read-only and safe to
/// call concurrently.
#[derive(Clone, Debug)]
pub struct MixedGraph {
    labels: Vec<String>,
    index: HashMap<String, u32>,
    edges: Vec<Edge>,
    parents: Vec<Vec<u32>>,
    children: Vec<Vec<u32>>,
    siblings: Vec<Vec<u32>>,
    neighbours: Vec<Vec<u32>>,
    /// Position of each vertex in the cached topological order of the
    /// directed part (ties broken by vertex index).
    topo_pos: Vec<u32>,
    /// Row-major adjacency bitmap (any edge kind).
    adj: Vec<bool>,
    gtype: GraphType,
}

impl MixedGraph {
    /// Builds a graph and validates the structural invariants: labels
    /// unique and nonempty, no self-loops, no duplicate edges, per-type
    /// edge-kind restrictions, acyclic directed part, at most one edge per
    /// pair for `mag`, and the undirected-at-the-top condition for
    /// `summary`.
    pub fn new(
        labels: Vec<String>,
        edges: Vec<(u32, u32, EdgeKind)>,
        gtype: GraphType,
    ) -> Result<MixedGraph> {
        let n = labels.len();
        let mut index = HashMap::with_capacity(n);
        for (i, label) in labels.iter().enumerate() {
            if label.is_empty() || label.chars().any(char::is_whitespace) {
                return Err(Error::InvalidLabel(label.clone()));
            }
            if index.insert(label.clone(), i as u32).is_some() {
                return Err(Error::DuplicateLabel(label.clone()));
            }
        }

        let mut canon: Vec<Edge> = Vec::with_capacity(edges.len());
        for &(u, v, kind) in &edges {
            for w in [u, v] {
                if w as usize >= n {
                    return Err(Error::VertexOutOfRange { index: w, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(labels[u as usize].clone()));
            }
            if !gtype.allows(kind) {
                return Err(Error::EdgeKindForbidden {
                    gtype: gtype.name().to_string(),
                    edge: format!(
                        "{} {} {}",
                        labels[u as usize],
                        kind.symbol(),
                        labels[v as usize]
                    ),
                });
            }
            canon.push(Edge::new(u, v, kind));
        }
        canon.sort_unstable();
        for w in canon.windows(2) {
            if w[0] == w[1] {
                return Err(Error::DuplicateEdge(format!(
                    "{} {} {}",
                    labels[w[0].u as usize],
                    w[0].kind.symbol(),
                    labels[w[0].v as usize]
                )));
            }
        }

        if gtype == GraphType::Mag {
            let mut pairs: Vec<(u32, u32)> = canon
                .iter()
                .map(|e| (e.u.min(e.v), e.u.max(e.v)))
                .collect();
            pairs.sort_unstable();
            for w in pairs.windows(2) {
                if w[0] == w[1] {
                    return Err(Error::MultiEdgeInMag(
                        labels[w[0].0 as usize].clone(),
                        labels[w[0].1 as usize].clone(),
                    ));
                }
            }
        }

        let mut parents = vec![Vec::new(); n];
        let mut children = vec![Vec::new(); n];
        let mut siblings = vec![Vec::new(); n];
        let mut neighbours = vec![Vec::new(); n];
        let mut adj = vec![false; n * n];
        for e in &canon {
            let (u, v) = (e.u as usize, e.v as usize);
            adj[u * n + v] = true;
            adj[v * n + u] = true;
            match e.kind {
                EdgeKind::Directed => {
                    parents[v].push(e.u);
                    children[u].push(e.v);
                }
                EdgeKind::Bidirected => {
                    siblings[u].push(e.v);
                    siblings[v].push(e.u);
                }
                EdgeKind::Undirected => {
                    neighbours[u].push(e.v);
                    neighbours[v].push(e.u);
                }
            }
        }
        for list in parents
            .iter_mut()
            .chain(&mut children)
            .chain(&mut siblings)
            .chain(&mut neighbours)
        {
            list.sort_unstable();
        }

        let topo_pos = topological_positions(n, &children, &parents, &labels)?;

        let graph = MixedGraph {
            labels,
            index,
            edges: canon,
            parents,
            children,
            siblings,
            neighbours,
            topo_pos,
            adj,
            gtype,
        };

        if gtype == GraphType::Summary {
            graph.check_undirected_top()?;
        }
        Ok(graph)
    }

    fn check_undirected_top(&self) -> Result<()> {
        for e in self.edges_of_kind(EdgeKind::Undirected) {
            for w in [e.u, e.v] {
                let w = w as usize;
                if !self.parents[w].is_empty() || !self.siblings[w].is_empty() {
                    return Err(Error::UndirectedNotTop(format!(
                        "{} - {}",
                        self.labels[e.u as usize], self.labels[e.v as usize]
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.labels.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn gtype(&self) -> GraphType {
        self.gtype
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edges_of_kind(&self, kind: EdgeKind) -> impl Iterator<Item = &Edge> {
        self.edges.iter().filter(move |e| e.kind == kind)
    }

    pub fn label(&self, v: u32) -> &str {
        &self.labels[v as usize]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// Looks a vertex up by label.
    pub fn vertex(&self, label: &str) -> Option<u32> {
        self.index.get(label).copied()
    }

    pub fn require_vertex(&self, label: &str) -> Result<u32> {
        self.vertex(label)
            .ok_or_else(|| Error::UnknownVertex(label.to_string()))
    }

    pub fn check_vertex(&self, v: u32) -> Result<()> {
        if (v as usize) < self.n() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                index: v,
                n: self.n(),
            })
        }
    }

    pub fn parents_of(&self, v: u32) -> &[u32] {
        &self.parents[v as usize]
    }

    pub fn children_of(&self, v: u32) -> &[u32] {
        &self.children[v as usize]
    }

    pub fn siblings_of(&self, v: u32) -> &[u32] {
        &self.siblings[v as usize]
    }

    pub fn neighbours_of(&self, v: u32) -> &[u32] {
        &self.neighbours[v as usize]
    }

    /// True when any edge joins `u` and `v`.
    pub fn adjacent(&self, u: u32, v: u32) -> bool {
        self.adj[u as usize * self.n() + v as usize]
    }

    /// Position of `v` in the cached topological order of the directed part.
    pub fn topo_position(&self, v: u32) -> u32 {
        self.topo_pos[v as usize]
    }

    /// Labels of `set`, sorted lexicographically.
    pub fn labels_of(&self, set: &VertexSet) -> Vec<String> {
        let mut out: Vec<String> = set.iter().map(|v| self.labels[v as usize].clone()).collect();
        out.sort();
        out
    }

    /// Union of `pa(w)` over `w` in `set`. Does not add `set` itself.
    pub fn parents_set(&self, set: &VertexSet) -> Result<VertexSet> {
        self.union_of(set, |v| &self.parents[v as usize])
    }

    /// Union of `sib(w)` over `w` in `set`. Does not add `set` itself.
    pub fn siblings_set(&self, set: &VertexSet) -> Result<VertexSet> {
        self.union_of(set, |v| &self.siblings[v as usize])
    }

    fn union_of<'a, F>(&'a self, set: &VertexSet, f: F) -> Result<VertexSet>
    where
        F: Fn(u32) -> &'a [u32],
    {
        let mut out = Vec::new();
        for v in set {
            self.check_vertex(v)?;
            out.extend_from_slice(f(v));
        }
        Ok(VertexSet::from_vec(out))
    }

    /// Ancestors of `set`, including `set` itself.
    pub fn ancestors(&self, set: &VertexSet) -> Result<VertexSet> {
        Ok(VertexSet::from_mask(&self.closure_mask(set, &self.parents)?))
    }

    /// Descendants of `set`, including `set` itself.
    pub fn descendants(&self, set: &VertexSet) -> Result<VertexSet> {
        Ok(VertexSet::from_mask(
            &self.closure_mask(set, &self.children)?,
        ))
    }

    /// Anteriors of `set`: vertices reaching `set` by paths whose edges are
    /// undirected or directed towards `set`. Includes `set` itself.
    pub fn anteriors(&self, set: &VertexSet) -> Result<VertexSet> {
        let mut mask = vec![false; self.n()];
        let mut stack: Vec<u32> = Vec::new();
        for v in set {
            self.check_vertex(v)?;
            if !std::mem::replace(&mut mask[v as usize], true) {
                stack.push(v);
            }
        }
        while let Some(v) = stack.pop() {
            for &w in self.parents[v as usize]
                .iter()
                .chain(&self.neighbours[v as usize])
            {
                if !std::mem::replace(&mut mask[w as usize], true) {
                    stack.push(w);
                }
            }
        }
        Ok(VertexSet::from_mask(&mask))
    }

    /// Reachability closure over `step` lists, as a mask. Includes `set`.
    fn closure_mask(&self, set: &VertexSet, step: &[Vec<u32>]) -> Result<Vec<bool>> {
        let mut mask = vec![false; self.n()];
        let mut stack: Vec<u32> = Vec::new();
        for v in set {
            self.check_vertex(v)?;
            if !std::mem::replace(&mut mask[v as usize], true) {
                stack.push(v);
            }
        }
        while let Some(v) = stack.pop() {
            for &w in &step[v as usize] {
                if !std::mem::replace(&mut mask[w as usize], true) {
                    stack.push(w);
                }
            }
        }
        Ok(mask)
    }

    pub(crate) fn ancestors_mask(&self, set: &VertexSet) -> Vec<bool> {
        self.closure_mask(set, &self.parents).expect("valid set")
    }

    pub(crate) fn descendants_mask(&self, set: &VertexSet) -> Vec<bool> {
        self.closure_mask(set, &self.children).expect("valid set")
    }

    /// District of `v` in the subgraph induced on `within`: the connected
    /// component of `v` under bidirected edges restricted to `within`.
    pub fn district(&self, v: u32, within: &VertexSet) -> Result<VertexSet> {
        self.check_vertex(v)?;
        if !within.contains(v) {
            return Err(Error::InvalidQuery(format!(
                "district root '{}' not inside the restriction set",
                self.label(v)
            )));
        }
        let mask = within.to_mask(self.n());
        Ok(VertexSet::from_mask(&self.district_mask(v, &mask)))
    }

    /// District BFS restricted by a membership mask. `v` must satisfy the mask.
    pub(crate) fn district_mask(&self, v: u32, within: &[bool]) -> Vec<bool> {
        let mut seen = vec![false; self.n()];
        seen[v as usize] = true;
        let mut stack = vec![v];
        while let Some(x) = stack.pop() {
            for &w in &self.siblings[x as usize] {
                if within[w as usize] && !std::mem::replace(&mut seen[w as usize], true) {
                    stack.push(w);
                }
            }
        }
        seen
    }

    /// The districts of the whole graph, a partition of the vertices,
    /// ordered by smallest member.
    pub fn districts(&self) -> Vec<VertexSet> {
        let n = self.n();
        let all = vec![true; n];
        let mut assigned = vec![false; n];
        let mut out = Vec::new();
        for v in 0..n as u32 {
            if assigned[v as usize] {
                continue;
            }
            let mask = self.district_mask(v, &all);
            for (i, &m) in mask.iter().enumerate() {
                if m {
                    assigned[i] = true;
                }
            }
            out.push(VertexSet::from_mask(&mask));
        }
        out
    }

    /// District id per vertex, consistent with [`MixedGraph::districts`].
    pub(crate) fn district_ids(&self) -> Vec<u32> {
        let mut ids = vec![u32::MAX; self.n()];
        for (i, d) in self.districts().iter().enumerate() {
            for v in d {
                ids[v as usize] = i as u32;
            }
        }
        ids
    }

    /// Members of `set` with no proper descendant inside `set`.
    pub fn barren(&self, set: &VertexSet) -> Result<VertexSet> {
        for v in set {
            self.check_vertex(v)?;
        }
        let mut out = Vec::new();
        'members: for v in set {
            // BFS over descendants of v, stopping early on another member.
            let mut seen = vec![false; self.n()];
            seen[v as usize] = true;
            let mut stack = vec![v];
            while let Some(x) = stack.pop() {
                for &w in &self.children[x as usize] {
                    if set.contains(w) {
                        continue 'members;
                    }
                    if !std::mem::replace(&mut seen[w as usize], true) {
                        stack.push(w);
                    }
                }
            }
            out.push(v);
        }
        Ok(VertexSet::from_vec(out))
    }

    /// Vertices incident to an undirected edge (the undirected part `U`).
    pub fn undirected_part(&self) -> VertexSet {
        (0..self.n() as u32)
            .filter(|&v| !self.neighbours[v as usize].is_empty())
            .collect()
    }

    /// True when every undirected edge joins two vertices that have no
    /// parents and no siblings.
    pub fn validate_summary(&self) -> bool {
        self.check_undirected_top().is_ok()
    }

    /// Splits a summary graph into its undirected component and the
    /// directed/bidirected remainder, as induced subgraphs. Directed edges
    /// from the undirected part into the remainder belong to neither side;
    /// they stay visible as parent relations of the whole graph, which is
    /// what tail computations use.
    pub fn split_summary(&self) -> Result<(MixedGraph, MixedGraph)> {
        self.check_undirected_top()
            .map_err(|e| Error::NotSummary(e.to_string()))?;
        let u = self.undirected_part();
        let d = VertexSet::from_vec((0..self.n() as u32).collect()).difference(&u);
        let gu = self.induced_subgraph(&u)?;
        let mut gd = self.induced_subgraph(&d)?;
        gd.gtype = GraphType::Admg;
        Ok((gu, gd))
    }

    /// Subgraph induced on `keep`: the vertices of `keep` (reindexed
    /// densely, original order) and every edge with both endpoints kept.
    pub fn induced_subgraph(&self, keep: &VertexSet) -> Result<MixedGraph> {
        for v in keep {
            self.check_vertex(v)?;
        }
        let mut remap = vec![u32::MAX; self.n()];
        let mut labels = Vec::with_capacity(keep.len());
        for (i, v) in keep.iter().enumerate() {
            remap[v as usize] = i as u32;
            labels.push(self.labels[v as usize].clone());
        }
        let edges = self
            .edges
            .iter()
            .filter(|e| keep.contains(e.u) && keep.contains(e.v))
            .map(|e| (remap[e.u as usize], remap[e.v as usize], e.kind))
            .collect();
        MixedGraph::new(labels, edges, self.gtype)
    }

    /// Checks both ancestrality conditions: no vertex has a sibling among
    /// its ancestors, and undirected-edge endpoints have no parents and no
    /// siblings.
    pub fn validate_ancestral(&self) -> bool {
        for v in 0..self.n() as u32 {
            if self.siblings[v as usize].is_empty() {
                continue;
            }
            let an = self.ancestors_mask(&VertexSet::singleton(v));
            if self.siblings[v as usize].iter().any(|&s| an[s as usize]) {
                return false;
            }
        }
        self.check_undirected_top().is_ok()
    }

    /// Checks maximality: every nonadjacent pair of vertices can be
    /// m-separated. Computed by projecting onto a Markov equivalent MAG
    /// and testing whether the adjacencies are unchanged (nonadjacent
    /// pairs joined by an inducing path become adjacent in the projection).
    pub fn validate_maximal(&self) -> bool {
        let projected = match crate::projection::project_to_mag(self) {
            Ok(r) => r.mag,
            Err(_) => return false,
        };
        for u in 0..self.n() as u32 {
            for v in u + 1..self.n() as u32 {
                if self.adjacent(u, v) != projected.adjacent(u, v) {
                    return false;
                }
            }
        }
        true
    }

    /// True when the graph is a MAG: at most one edge per pair, ancestral
    /// and maximal.
    pub fn validate_mag(&self) -> bool {
        self.single_edge_per_pair() && self.validate_ancestral() && self.validate_maximal()
    }

    pub(crate) fn single_edge_per_pair(&self) -> bool {
        let mut pairs: Vec<(u32, u32)> = self
            .edges
            .iter()
            .map(|e| (e.u.min(e.v), e.u.max(e.v)))
            .collect();
        pairs.sort_unstable();
        pairs.windows(2).all(|w| w[0] != w[1])
    }

    /// Edges keyed by label, for structural comparison across graphs whose
    /// index assignments differ.
    pub fn edge_set_by_label(&self) -> std::collections::BTreeSet<(String, String, EdgeKind)> {
        self.edges
            .iter()
            .map(|e| {
                let (a, b) = (self.label(e.u).to_string(), self.label(e.v).to_string());
                match e.kind {
                    EdgeKind::Directed => (a, b, e.kind),
                    _ => (a.clone().min(b.clone()), a.max(b), e.kind),
                }
            })
            .collect()
    }

    /// Unordered adjacent label pairs (the skeleton).
    pub fn skeleton_by_label(&self) -> std::collections::BTreeSet<(String, String)> {
        self.edges
            .iter()
            .map(|e| {
                let (a, b) = (self.label(e.u).to_string(), self.label(e.v).to_string());
                (a.clone().min(b.clone()), a.max(b))
            })
            .collect()
    }

    /// Same labelled vertices and same labelled edges.
    pub fn same_structure(&self, other: &MixedGraph) -> bool {
        let mut la: Vec<&String> = self.labels.iter().collect();
        let mut lb: Vec<&String> = other.labels.iter().collect();
        la.sort();
        lb.sort();
        la == lb && self.edge_set_by_label() == other.edge_set_by_label()
    }
}

/// Kahn's algorithm over the directed part; ties broken by vertex index so
/// the order is deterministic. Returns per-vertex positions.
fn topological_positions(
    n: usize,
    children: &[Vec<u32>],
    parents: &[Vec<u32>],
    labels: &[String],
) -> Result<Vec<u32>> {
    let mut indegree: Vec<usize> = parents.iter().map(Vec::len).collect();
    let mut heap = std::collections::BinaryHeap::new();
    for v in 0..n {
        if indegree[v] == 0 {
            heap.push(std::cmp::Reverse(v as u32));
        }
    }
    let mut pos = vec![u32::MAX; n];
    let mut next = 0u32;
    while let Some(std::cmp::Reverse(v)) = heap.pop() {
        pos[v as usize] = next;
        next += 1;
        for &c in &children[v as usize] {
            indegree[c as usize] -= 1;
            if indegree[c as usize] == 0 {
                heap.push(std::cmp::Reverse(c));
            }
        }
    }
    if (next as usize) < n {
        let stuck = (0..n).find(|&v| pos[v] == u32::MAX).unwrap();
        return Err(Error::DirectedCycle(labels[stuck].clone()));
    }
    Ok(pos)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::format::parse;

    fn g(text: &str) -> MixedGraph {
        parse(text).unwrap()
    }

    /// Two bidirected edges over a directed core; heads of sizes 1 and 2.
    const EXAMPLE_A: &str = "!type mag\n1 <-> 2\n2 <-> 3\n3 -> 1\n3 -> 4\n2 -> 4\n";
    /// A DAG with the same skeleton as `EXAMPLE_A`.
    const EXAMPLE_B: &str = "!type mag\n2 -> 1\n2 -> 3\n4 -> 3\n3 -> 1\n4 -> 2\n";
    /// Four bidirected edges; carries a head of size 3 with a tail.
    const EXAMPLE_C: &str = "!type mag\n1 <-> 2\n2 <-> 3\n3 <-> 4\n1 <-> 3\n2 -> 4\n";

    #[test]
    fn direct_construction() {
        let g = g("1 -> 2\n2 <-> 3");
        assert_eq!(g.n(), 3);
        let two = g.vertex("2").unwrap();
        assert_eq!(g.parents_of(two), &[g.vertex("1").unwrap()]);
        assert_eq!(g.siblings_of(two), &[g.vertex("3").unwrap()]);
    }

    #[test]
    fn two_cycle_rejected() {
        let err = parse("1 -> 2\n2 -> 1").unwrap_err();
        assert!(matches!(err, Error::DirectedCycle(_)));
    }

    #[test]
    fn self_loop_rejected() {
        assert!(matches!(parse("1 -> 1"), Err(Error::SelfLoop(_))));
    }

    #[test]
    fn duplicate_edge_rejected() {
        assert!(matches!(
            parse("1 <-> 2\n2 <-> 1"),
            Err(Error::DuplicateEdge(_))
        ));
    }

    #[test]
    fn mag_type_rejects_parallel_edges() {
        assert!(matches!(
            parse("!type mag\n1 -> 2\n1 <-> 2"),
            Err(Error::MultiEdgeInMag(_, _))
        ));
        // The same pair is fine for the default admg type.
        assert!(parse("1 -> 2\n1 <-> 2").is_ok());
    }

    #[test]
    fn dag_type_rejects_bidirected() {
        assert!(matches!(
            parse("!type dag\n1 <-> 2"),
            Err(Error::EdgeKindForbidden { .. })
        ));
    }

    #[test]
    fn summary_type_rejects_undirected_below_top() {
        assert!(matches!(
            parse("!type summary\n1 - 2\n3 -> 2"),
            Err(Error::UndirectedNotTop(_))
        ));
        assert!(parse("!type summary\n1 - 2\n2 -> 3").is_ok());
    }

    #[test]
    fn ancestors_of_sink() {
        let g = g(EXAMPLE_A);
        let four = g.vertex("4").unwrap();
        let an = g.ancestors(&VertexSet::singleton(four)).unwrap();
        assert_eq!(g.labels_of(&an), ["2", "3", "4"]);
        assert!(g.ancestors(&VertexSet::new()).unwrap().is_empty());
    }

    #[test]
    fn parents_and_siblings_sets() {
        let a = g(EXAMPLE_A);
        let four = a.vertex("4").unwrap();
        let pa = a.parents_set(&VertexSet::singleton(four)).unwrap();
        assert_eq!(a.labels_of(&pa), ["2", "3"]);
        assert!(a.siblings_set(&VertexSet::new()).unwrap().is_empty());
        let two = a.vertex("2").unwrap();
        let sib = a.siblings_set(&VertexSet::singleton(two)).unwrap();
        assert_eq!(a.labels_of(&sib), ["1", "3"]);
        // The DAG variant: parents of 4 are empty, parents of 3 are {2,4}.
        let b = g(EXAMPLE_B);
        let three = b.vertex("3").unwrap();
        let pa =
            b.parents_set(&VertexSet::singleton(three)).unwrap();
        assert_eq!(b.labels_of(&pa), ["2", "4"]);
    }

    #[test]
    fn districts_and_restriction() {
        let c = g(EXAMPLE_C);
        let three = c.vertex("3").unwrap();
        let all: VertexSet = (0..4).collect();
        assert_eq!(c.district(three, &all).unwrap().len(), 4);

        let a = g(EXAMPLE_A);
        let four = a.vertex("4").unwrap();
        let an4 = a.ancestors(&VertexSet::singleton(four)).unwrap();
        // Inside {2,3,4} the only bidirected edge is 2<->3, so 4 is alone.
        assert_eq!(
            a.district(four, &an4).unwrap(),
            VertexSet::singleton(four)
        );
        // Isolated vertex.
        let iso = g("vertex a\nvertex b");
        assert_eq!(
            iso.district(0, &VertexSet::singleton(0)).unwrap(),
            VertexSet::singleton(0)
        );
        // Root outside the restriction set errors.
        assert!(a.district(four, &VertexSet::singleton(0)).is_err());
    }

    #[test]
    fn district_partition() {
        let a = g(EXAMPLE_A);
        let parts = a.districts();
        let total: usize = parts.iter().map(VertexSet::len).sum();
        assert_eq!(total, a.n());
    }

    #[test]
    fn barren_subsets() {
        let b = g(EXAMPLE_B);
        let all: VertexSet = (0..4).collect();
        let barren = b.barren(&all).unwrap();
        assert_eq!(b.labels_of(&barren), ["1"]);
        assert!(b.barren(&VertexSet::new()).unwrap().is_empty());
        // An antichain is its own barren subset.
        let pair: VertexSet = [b.vertex("1").unwrap(), b.vertex("3").unwrap()]
            .into_iter()
            .collect();
        assert_eq!(b.barren(&pair).unwrap(), pair);
    }

    #[test]
    fn anteriors_follow_undirected_edges() {
        let s = g("!type summary\n1 - 2\n2 -> 4\n4 -> 3\n3 <-> 4");
        let three = s.vertex("3").unwrap();
        let ant = s.anteriors(&VertexSet::singleton(three)).unwrap();
        assert_eq!(s.labels_of(&ant), ["1", "2", "3", "4"]);
        // Without undirected edges, anteriors reduce to ancestors.
        let a = g(EXAMPLE_A);
        for v in 0..a.n() as u32 {
            let vs = VertexSet::singleton(v);
            assert_eq!(a.anteriors(&vs).unwrap(), a.ancestors(&vs).unwrap());
        }
        // A parentless vertex with no undirected edges is its own anterior set.
        let two = s.vertex("2").unwrap();
        let one = s.vertex("1").unwrap();
        let ant2 = s.anteriors(&VertexSet::singleton(two)).unwrap();
        assert_eq!(ant2, [one, two].into_iter().collect());
    }

    #[test]
    fn split_summary_parts() {
        let s = g("!type summary\n1 - 2\n2 -> 4\n4 -> 3\n3 <-> 4");
        let (gu, gd) = s.split_summary().unwrap();
        assert_eq!(gu.n(), 2);
        assert_eq!(gu.edge_count(), 1);
        assert_eq!(gd.n(), 2);
        // 4 -> 3 and 3 <-> 4 survive; 2 -> 4 crosses the split and is dropped.
        assert_eq!(gd.edge_count(), 2);
        // An ADMG splits into an empty undirected part and itself.
        let a = g(EXAMPLE_A);
        let (gu, gd) = a.split_summary().unwrap();
        assert_eq!(gu.n(), 0);
        assert_eq!(gd.n(), a.n());
        assert!(gd.same_structure(&a));
        // An all-undirected graph has an empty directed part.
        let u = g("!type summary\n1 - 2\n2 - 3");
        let (gu, gd) = u.split_summary().unwrap();
        assert_eq!(gu.n(), 3);
        assert_eq!(gd.n(), 0);
    }

    #[test]
    fn ancestral_and_maximal_verdicts() {
        // Ancestral but not maximal.
        let nonmax = g("1 <-> 3\n2 <-> 4\n3 <-> 4\n3 -> 2\n4 -> 1");
        assert!(nonmax.validate_ancestral());
        assert!(!nonmax.validate_maximal());
        // Maximal but not ancestral.
        let nonanc = g("1 <-> 3\n1 -> 2\n2 -> 3");
        assert!(!nonanc.validate_ancestral());
        assert!(nonanc.validate_maximal());
        // Both.
        let mag = g("!type mag\n1 <-> 2\n2 <-> 4\n3 <-> 4\n3 -> 2\n4 -> 1");
        assert!(mag.validate_ancestral());
        assert!(mag.validate_maximal());
        assert!(mag.validate_mag());
    }

    #[test]
    fn topological_order_is_deterministic() {
        let g = g("!type dag\na -> c\nb -> c");
        assert!(g.topo_position(0) < g.topo_position(2));
        assert!(g.topo_position(1) < g.topo_position(2));
        assert!(g.topo_position(0) < g.topo_position(1));
    }
}
