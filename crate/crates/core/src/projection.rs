//! Projection onto Markov equivalent MAGs.
//!
//! [`project_to_mag`] converts an ADMG or summary graph into a Markov
//! equivalent MAG in `O(n^2 e)`: the directed edges of the output are the
//! tails of the individual vertices and the bidirected edges are the heads
//! of size 2, found by a district membership test per unordered pair.
//! Undirected edges are copied unchanged. [`project_latent`] is the
//! classical declarative projection of a DAG or summary graph with latent
//! variables, built directly on inducing-path search; it is exponential
//! and guarded, and doubles as an independent check of the fast route.

use crate::error::{Error, Result};
use crate::graph::{Edge, EdgeKind, GraphType, MixedGraph};
use crate::msep::EXHAUSTIVE_GUARD;
use crate::set::VertexSet;

/// Why an edge is present in a projected MAG.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EdgeProvenance {
    /// `w -> v` because `w` is in the tail of `v`.
    TailMembership,
    /// `v <-> w` because `{v, w}` is a head.
    PairHead,
    /// Undirected edge copied from the input.
    PreservedUndirected,
}

impl EdgeProvenance {
    pub fn name(self) -> &'static str {
        match self {
            EdgeProvenance::TailMembership => "tail-membership",
            EdgeProvenance::PairHead => "size-2-head",
            EdgeProvenance::PreservedUndirected => "preserved-undirected",
        }
    }
}

/// A projected MAG with the edges that were not in the input and a
/// justification for every output edge.
#[derive(Clone, Debug)]
pub struct ProjectionResult {
    pub mag: MixedGraph,
    /// Edges of the output absent from the input (indices are shared, the
    /// projection never renames vertices).
    pub added_edges: Vec<Edge>,
    pub provenance: Vec<(Edge, EdgeProvenance)>,
}

/// Projects an ADMG or summary graph onto a Markov equivalent MAG over the
/// same vertices: `w -> v` exactly when `w` is in the tail of `v`, and
/// `v <-> w` exactly when `{v, w}` is a head; undirected edges are kept.
pub fn project_to_mag(g: &MixedGraph) -> Result<ProjectionResult> {
    if !g.validate_summary() {
        return Err(Error::NotSummary(
            "undirected edges must join parentless, siblingless vertices".into(),
        ));
    }
    let n = g.n();
    let an_masks: Vec<Vec<bool>> = (0..n as u32)
        .map(|v| g.ancestors_mask(&VertexSet::singleton(v)))
        .collect();
    let district_ids = g.district_ids();

    let mut provenance: Vec<(Edge, EdgeProvenance)> = Vec::new();

    // Directed edges from tails: tail(v) = dis_{an(v)}(v) ∪ pa(dis) \ {v}.
    for v in 0..n as u32 {
        let dis = g.district_mask(v, &an_masks[v as usize]);
        let mut tail = dis.clone();
        for x in 0..n as u32 {
            if dis[x as usize] {
                for &p in g.parents_of(x) {
                    tail[p as usize] = true;
                }
            }
        }
        tail[v as usize] = false;
        for w in 0..n as u32 {
            if tail[w as usize] {
                provenance.push((Edge::new(w, v, EdgeKind::Directed), EdgeProvenance::TailMembership));
            }
        }
    }

    // Bidirected edges from heads of size 2: pairs with no ancestral
    // relation, in the same district, connected within their joint
    // ancestor set.
    for v in 0..n as u32 {
        for w in v + 1..n as u32 {
            if an_masks[v as usize][w as usize] || an_masks[w as usize][v as usize] {
                continue;
            }
            if district_ids[v as usize] != district_ids[w as usize] {
                continue;
            }
            let mut an_vw = an_masks[v as usize].clone();
            for (slot, &m) in an_vw.iter_mut().zip(&an_masks[w as usize]) {
                *slot |= m;
            }
            let dis = g.district_mask(v, &an_vw);
            if dis[w as usize] {
                provenance.push((Edge::new(v, w, EdgeKind::Bidirected), EdgeProvenance::PairHead));
            }
        }
    }

    for e in g.edges_of_kind(EdgeKind::Undirected) {
        provenance.push((*e, EdgeProvenance::PreservedUndirected));
    }

    provenance.sort_by_key(|(e, _)| *e);
    let edges: Vec<(u32, u32, EdgeKind)> =
        provenance.iter().map(|(e, _)| (e.u, e.v, e.kind)).collect();
    let mag = MixedGraph::new(g.labels().to_vec(), edges, GraphType::Mag)?;

    let input: std::collections::BTreeSet<Edge> = g.edges().iter().copied().collect();
    let added_edges = mag
        .edges()
        .iter()
        .filter(|e| !input.contains(e))
        .copied()
        .collect();

    Ok(ProjectionResult {
        mag,
        added_edges,
        provenance,
    })
}

/// True when some path between `a` and `b` has every collider in
/// `an({a,b})` and every noncollider in `latent`. Such a path forces the
/// pair to be adjacent in any MAG over the margin. Exponential; guarded to
/// `n <= 12`.
pub fn inducing_path_exists(
    g: &MixedGraph,
    a: u32,
    b: u32,
    latent: &VertexSet,
) -> Result<bool> {
    if g.n() > EXHAUSTIVE_GUARD {
        return Err(Error::GuardExceeded(format!(
            "inducing-path search needs n <= {EXHAUSTIVE_GUARD}, got {}",
            g.n()
        )));
    }
    g.check_vertex(a)?;
    g.check_vertex(b)?;
    for v in latent {
        g.check_vertex(v)?;
    }
    if a == b || latent.contains(a) || latent.contains(b) {
        return Err(Error::InvalidQuery(
            "endpoints must be distinct observed vertices".into(),
        ));
    }
    let an_ab = g.ancestors_mask(&VertexSet::from_vec(vec![a, b]));
    let in_l = latent.to_mask(g.n());
    let mut on_path = vec![false; g.n()];
    on_path[a as usize] = true;
    Ok(inducing_dfs(g, a, None, b, &an_ab, &in_l, &mut on_path))
}

/// Arrives at `v` via an edge whose mark at `v` is `incoming` (`true` for
/// an arrowhead); extends over simple paths.
fn inducing_dfs(
    g: &MixedGraph,
    v: u32,
    incoming: Option<bool>,
    b: u32,
    an_ab: &[bool],
    in_l: &[bool],
    on_path: &mut Vec<bool>,
) -> bool {
    let steps: Vec<(u32, bool, bool)> = g
        .parents_of(v)
        .iter()
        .map(|&p| (p, true, false))
        .chain(g.children_of(v).iter().map(|&c| (c, false, true)))
        .chain(g.siblings_of(v).iter().map(|&s| (s, true, true)))
        .chain(g.neighbours_of(v).iter().map(|&u| (u, false, false)))
        .collect();
    for (w, head_here, head_there) in steps {
        if let Some(head_in) = incoming {
            let collider = head_in && head_here;
            let open = if collider {
                an_ab[v as usize]
            } else {
                in_l[v as usize]
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
        let found = inducing_dfs(g, w, Some(head_there), b, an_ab, in_l, on_path);
        on_path[w as usize] = false;
        if found {
            return true;
        }
    }
    false
}

/// Projects a DAG or summary graph with latent vertices `latent` onto a
/// MAG over the observed margin: inducing-path pairs become adjacent, and
/// each edge is oriented by anterior relations in the input (`a -> b` when
/// `a` is anterior to `b` only, undirected when both are anterior to one
/// another, bidirected when neither is). Guarded to `n <= 12`.
pub fn project_latent(g: &MixedGraph, latent: &VertexSet) -> Result<MixedGraph> {
    for v in latent {
        g.check_vertex(v)?;
    }
    let observed: Vec<u32> = (0..g.n() as u32).filter(|v| !latent.contains(*v)).collect();
    if observed.is_empty() {
        return Err(Error::InvalidQuery("no observed vertices remain".into()));
    }
    let ant_masks: Vec<Vec<bool>> = (0..g.n() as u32)
        .map(|v| {
            g.anteriors(&VertexSet::singleton(v))
                .expect("valid vertex")
                .to_mask(g.n())
        })
        .collect();

    let mut remap = vec![u32::MAX; g.n()];
    let mut labels = Vec::with_capacity(observed.len());
    for (i, &v) in observed.iter().enumerate() {
        remap[v as usize] = i as u32;
        labels.push(g.label(v).to_string());
    }
    let mut edges = Vec::new();
    for (i, &a) in observed.iter().enumerate() {
        for &b in &observed[i + 1..] {
            if !inducing_path_exists(g, a, b, latent)? {
                continue;
            }
            let a_ant_b = ant_masks[b as usize][a as usize];
            let b_ant_a = ant_masks[a as usize][b as usize];
            let (u, v, kind) = match (a_ant_b, b_ant_a) {
                (true, true) => (a, b, EdgeKind::Undirected),
                (true, false) => (a, b, EdgeKind::Directed),
                (false, true) => (b, a, EdgeKind::Directed),
                (false, false) => (a, b, EdgeKind::Bidirected),
            };
            edges.push((remap[u as usize], remap[v as usize], kind));
        }
    }
    MixedGraph::new(labels, edges, GraphType::Mag)
}
