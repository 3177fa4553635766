//! Markov-equivalence decisions.
//!
//! Three independent routes are provided so each can be validated against
//! the others: comparison of the fast size-2/3 parametrizing sets
//! ([`equiv_mags`], extended to ADMGs and summary graphs by projecting
//! first in [`equiv_admgs`]), the skeleton / unshielded-collider /
//! discriminating-path criterion ([`equiv_path_criterion`]), and full
//! separation signatures ([`equiv_signature`]). Vertices are matched by
//! label, never by index. Negative verdicts always carry a witness.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::graph::MixedGraph;
use crate::heads;
use crate::msep::{self, EXHAUSTIVE_GUARD};
use crate::projection;

/// Which decision procedure produced a report.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EquivMethod {
    /// Comparison of the size-2/3 parametrizing sets.
    S3Tilde,
    /// Skeletons, unshielded colliders and discriminating paths.
    PathCriterion,
    /// Full separation signatures.
    Signature,
}

/// Evidence that two graphs are not Markov equivalent.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    /// A parametrizing set present in exactly one graph.
    ParamSetDiff { set: Vec<String>, in_first: bool },
    /// A separation statement holding in exactly one graph.
    SeparationDiff {
        a: String,
        b: String,
        c: Vec<String>,
        separated_in_first: bool,
    },
    /// An adjacency present in exactly one skeleton.
    SkeletonDiff { pair: (String, String), in_first: bool },
    /// An unshielded collider present in exactly one graph.
    ColliderDiff {
        triple: (String, String, String),
        collider_in_first: bool,
    },
    /// A path discriminating in both graphs whose discriminated vertex has
    /// different collider status.
    PathColliderDiff {
        path: Vec<String>,
        vertex: String,
        collider_in_first: bool,
    },
}

impl std::fmt::Display for Witness {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Witness::ParamSetDiff { set, in_first } => write!(
                f,
                "parametrizing set {{{}}} only in the {} graph",
                set.join(","),
                if *in_first { "first" } else { "second" }
            ),
            Witness::SeparationDiff {
                a,
                b,
                c,
                separated_in_first,
            } => write!(
                f,
                "{a} and {b} are m-separated given {{{}}} only in the {} graph",
                c.join(","),
                if *separated_in_first { "first" } else { "second" }
            ),
            Witness::SkeletonDiff { pair, in_first } => write!(
                f,
                "{} and {} are adjacent only in the {} graph",
                pair.0,
                pair.1,
                if *in_first { "first" } else { "second" }
            ),
            Witness::ColliderDiff {
                triple,
                collider_in_first,
            } => write!(
                f,
                "unshielded triple ({},{},{}) is a collider only in the {} graph",
                triple.0,
                triple.1,
                triple.2,
                if *collider_in_first { "first" } else { "second" }
            ),
            Witness::PathColliderDiff {
                path,
                vertex,
                collider_in_first,
            } => write!(
                f,
                "on the discriminating path <{}>, {vertex} is a collider only in the {} graph",
                path.join(","),
                if *collider_in_first { "first" } else { "second" }
            ),
        }
    }
}

/// Outcome of an equivalence test. When `equivalent` is false, `witness`
/// names a concrete difference.
#[derive(Clone, Debug)]
pub struct EquivalenceReport {
    pub equivalent: bool,
    pub method: EquivMethod,
    pub witness: Option<Witness>,
}

impl EquivalenceReport {
    fn yes(method: EquivMethod) -> EquivalenceReport {
        EquivalenceReport {
            equivalent: true,
            method,
            witness: None,
        }
    }

    fn no(method: EquivMethod, witness: Witness) -> EquivalenceReport {
        EquivalenceReport {
            equivalent: false,
            method,
            witness: Some(witness),
        }
    }
}

fn check_same_labels(g1: &MixedGraph, g2: &MixedGraph) -> Result<()> {
    let mut a: Vec<&String> = g1.labels().iter().collect();
    let mut b: Vec<&String> = g2.labels().iter().collect();
    a.sort();
    b.sort();
    if a != b {
        return Err(Error::VertexSetMismatch(format!(
            "first has {} vertices, second has {}",
            g1.n(),
            g2.n()
        )));
    }
    Ok(())
}

/// Decides Markov equivalence of two MAGs over the same labelled vertex
/// set by comparing their fast size-2/3 parametrizing sets.
pub fn equiv_mags(g1: &MixedGraph, g2: &MixedGraph) -> Result<EquivalenceReport> {
    check_same_labels(g1, g2)?;
    heads::ensure_mag(g1)?;
    heads::ensure_mag(g2)?;
    let s1 = heads::s3_tilde_fast_unchecked(g1).sets.to_label_sets(g1);
    let s2 = heads::s3_tilde_fast_unchecked(g2).sets.to_label_sets(g2);
    Ok(compare_label_sets(&s1, &s2, EquivMethod::S3Tilde))
}

fn compare_label_sets(
    s1: &BTreeSet<Vec<String>>,
    s2: &BTreeSet<Vec<String>>,
    method: EquivMethod,
) -> EquivalenceReport {
    if s1 == s2 {
        return EquivalenceReport::yes(method);
    }
    let only1 = s1.difference(s2).next();
    let only2 = s2.difference(s1).next();
    let (set, in_first) = match (only1, only2) {
        (Some(x), Some(y)) if x <= y => (x.clone(), true),
        (Some(_), Some(y)) => (y.clone(), false),
        (Some(x), None) => (x.clone(), true),
        (None, Some(y)) => (y.clone(), false),
        (None, None) => unreachable!("sets differ"),
    };
    EquivalenceReport::no(method, Witness::ParamSetDiff { set, in_first })
}

/// Decides Markov equivalence of two ADMGs or summary graphs by projecting
/// each onto its Markov equivalent MAG and comparing those.
pub fn equiv_admgs(g1: &MixedGraph, g2: &MixedGraph) -> Result<EquivalenceReport> {
    check_same_labels(g1, g2)?;
    let m1 = projection::project_to_mag(g1)?.mag;
    let m2 = projection::project_to_mag(g2)?.mag;
    equiv_mags(&m1, &m2)
}

/// Decides equivalence of two MAGs by the classical three-part criterion:
/// same adjacencies, same unshielded colliders, and agreeing collider
/// status on every path that discriminates in both graphs. Exponential in
/// the discriminating-path enumeration; guarded to `n <= 12`.
pub fn equiv_path_criterion(g1: &MixedGraph, g2: &MixedGraph) -> Result<EquivalenceReport> {
    check_same_labels(g1, g2)?;
    heads::ensure_mag(g1)?;
    heads::ensure_mag(g2)?;
    if g1.n() > EXHAUSTIVE_GUARD {
        return Err(Error::GuardExceeded(format!(
            "path criterion needs n <= {EXHAUSTIVE_GUARD}, got {}",
            g1.n()
        )));
    }
    let method = EquivMethod::PathCriterion;

    // (i) same adjacencies
    let sk1 = g1.skeleton_by_label();
    let sk2 = g2.skeleton_by_label();
    if sk1 != sk2 {
        let only1 = sk1.difference(&sk2).next();
        let (pair, in_first) = match (only1, sk2.difference(&sk1).next()) {
            (Some(x), _) => (x.clone(), true),
            (None, Some(y)) => (y.clone(), false),
            (None, None) => unreachable!(),
        };
        return Ok(EquivalenceReport::no(method, Witness::SkeletonDiff { pair, in_first }));
    }

    // (ii) same unshielded colliders
    let c1 = unshielded_colliders(g1);
    let c2 = unshielded_colliders(g2);
    if c1 != c2 {
        let (triple, collider_in_first) = match (c1.difference(&c2).next(), c2.difference(&c1).next()) {
            (Some(x), _) => (x.clone(), true),
            (None, Some(y)) => (y.clone(), false),
            (None, None) => unreachable!(),
        };
        return Ok(EquivalenceReport::no(
            method,
            Witness::ColliderDiff {
                triple,
                collider_in_first,
            },
        ));
    }

    // (iii) collider status along paths discriminating in both graphs
    let to_g2: Vec<u32> = (0..g1.n() as u32)
        .map(|v| g2.vertex(g1.label(v)).expect("labels checked"))
        .collect();
    for path in msep::find_discriminating_paths(g1)? {
        let mapped: Vec<u32> = path.vertices.iter().map(|&v| to_g2[v as usize]).collect();
        if !msep::is_discriminating_path(g2, &mapped) {
            continue;
        }
        let in_first = path.is_collider(g1);
        let mapped_path = msep::DiscriminatingPath {
            vertices: mapped,
            discriminated: to_g2[path.discriminated as usize],
        };
        if in_first != mapped_path.is_collider(g2) {
            return Ok(EquivalenceReport::no(
                method,
                Witness::PathColliderDiff {
                    path: path.vertices.iter().map(|&v| g1.label(v).to_string()).collect(),
                    vertex: g1.label(path.discriminated).to_string(),
                    collider_in_first: in_first,
                },
            ));
        }
    }
    Ok(EquivalenceReport::yes(method))
}

/// Unshielded collider triples `(a, b, c)` keyed by label, with the outer
/// pair in canonical order.
fn unshielded_colliders(g: &MixedGraph) -> BTreeSet<(String, String, String)> {
    let mut out = BTreeSet::new();
    for b in 0..g.n() as u32 {
        let into_b: Vec<u32> = g
            .parents_of(b)
            .iter()
            .chain(g.siblings_of(b))
            .copied()
            .collect();
        for (i, &a) in into_b.iter().enumerate() {
            for &c in &into_b[i + 1..] {
                if a != c && !g.adjacent(a, c) {
                    let (la, lc) = (g.label(a).to_string(), g.label(c).to_string());
                    let (la, lc) = if la <= lc { (la, lc) } else { (lc, la) };
                    out.insert((la, g.label(b).to_string(), lc));
                }
            }
        }
    }
    out
}

/// Decides equivalence by comparing the full separation signatures — the
/// defining notion, used as the ultimate oracle. Guarded to `n <= 12`.
pub fn equiv_signature(g1: &MixedGraph, g2: &MixedGraph) -> Result<EquivalenceReport> {
    check_same_labels(g1, g2)?;
    let s1 = msep::sep_signature(g1)?;
    let s2 = msep::sep_signature(g2)?;
    match s1.first_difference(&s2) {
        None => Ok(EquivalenceReport::yes(EquivMethod::Signature)),
        Some((separated_in_first, (a, b, c))) => Ok(EquivalenceReport::no(
            EquivMethod::Signature,
            Witness::SeparationDiff {
                a,
                b,
                c,
                separated_in_first,
            },
        )),
    }
}

/// Adjacency in the m-separation sense: `v` and `w` are adjacent exactly
/// when no conditioning set separates them. Edge-adjacent pairs qualify
/// immediately; for the rest this coincides with adjacency in the
/// projected MAG, which keeps the test polynomial.
pub fn msep_adjacent(g: &MixedGraph, v: u32, w: u32) -> Result<bool> {
    g.check_vertex(v)?;
    g.check_vertex(w)?;
    if v == w {
        return Err(Error::InvalidQuery("vertices coincide".into()));
    }
    if g.adjacent(v, w) {
        return Ok(true);
    }
    let mag = projection::project_to_mag(g)?.mag;
    Ok(mag.adjacent(v, w))
}
