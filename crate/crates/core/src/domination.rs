//! Constructive (r-1)-tuple total and r-tuple dominating sets of connected
//! r-regular graphs.
//!
//! Both constructions color an auxiliary graph so that every neighborhood
//! is rainbow, then drop the largest color class. A vertex with `r`
//! distinctly colored neighbors loses at most one of them, so the rest is
//! `(r-1)`-tuple totally dominating; with closed neighborhoods of size
//! `r + 1` the same argument gives `r`-tuple domination. The only graphs
//! where the auxiliary graph needs one color more than the degree bound are
//! the projective-plane incidence graphs (total case) and the diameter-2
//! Moore graphs (closed case); both are answered exactly.

use std::fmt;

use serde::Serialize;

use crate::aux::{closed_square_graph, common_neighbor_graph};
use crate::coloring::{brooks_coloring, find_complete_components, Coloring};
use crate::error::{Error, Hypothesis, Result};
use crate::graph::{Graph, Vertex, VertexSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Variant {
    /// `|N(v) ∩ S| >= k` for every `v`.
    Total,
    /// `|N[v] ∩ S| >= k` for every `v`.
    Closed,
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Variant::Total => "total",
            Variant::Closed => "closed",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Branch {
    GenericColoring,
    ProjectivePlaneExact,
    MooreExact,
}

impl fmt::Display for Branch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Branch::GenericColoring => "generic-coloring",
            Branch::ProjectivePlaneExact => "projective-plane-exact",
            Branch::MooreExact => "moore-exact",
        })
    }
}

/// Output of a construction: the set together with the guarantee it meets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DominationCertificate {
    pub set: VertexSet,
    pub variant: Variant,
    pub k: usize,
    pub branch: Branch,
    /// Number of colors of the auxiliary coloring; 0 on the exact branches.
    pub colors_used: usize,
    /// The guaranteed size is `bound_numerator / bound_denominator * n`.
    pub bound_numerator: usize,
    pub bound_denominator: usize,
}

impl DominationCertificate {
    pub fn size(&self) -> usize {
        self.set.len()
    }

    /// `floor(bound_numerator * n / bound_denominator)`.
    pub fn bound_floor(&self) -> usize {
        self.bound_numerator * self.set.universe() / self.bound_denominator
    }

    pub fn bound_value(&self) -> f64 {
        self.bound_numerator as f64 * self.set.universe() as f64 / self.bound_denominator as f64
    }

    /// Re-runs the matching verifier on `g`.
    pub fn verify(&self, g: &Graph) -> bool {
        match self.variant {
            Variant::Total => verify_total(g, &self.set, self.k),
            Variant::Closed => verify_closed(g, &self.set, self.k),
        }
    }
}

/// Number of open neighbors of `v` inside `s`, plus `v` itself for the
/// closed variant.
pub fn coverage(g: &Graph, s: &VertexSet, v: Vertex, variant: Variant) -> usize {
    let own = usize::from(variant == Variant::Closed && s.contains(v));
    s.count_in(g.neighbors(v)) + own
}

/// First vertex (by id) covered fewer than `k` times, if any.
pub fn first_deficient(g: &Graph, s: &VertexSet, k: usize, variant: Variant) -> Option<Vertex> {
    (0..g.n()).find(|&v| coverage(g, s, v, variant) < k)
}

pub fn verify_total(g: &Graph, s: &VertexSet, k: usize) -> bool {
    first_deficient(g, s, k, Variant::Total).is_none()
}

pub fn verify_closed(g: &Graph, s: &VertexSet, k: usize) -> bool {
    first_deficient(g, s, k, Variant::Closed).is_none()
}

/// All vertices except the largest color class (lowest color index on ties).
pub fn set_from_coloring(g: &Graph, col: &Coloring) -> VertexSet {
    let mut dropped: Option<&VertexSet> = None;
    for class in col.classes() {
        if dropped.is_none_or(|d| class.len() > d.len()) {
            dropped = Some(class);
        }
    }
    match dropped {
        Some(class) => class.complement(),
        None => VertexSet::new(g.n()),
    }
}

/// Checks the shared hypotheses and returns the common degree r.
fn regular_degree(g: &Graph, min_r: usize) -> Result<usize> {
    if !g.is_connected() || g.n() == 0 {
        return Err(Error::Precondition(Hypothesis::Connected));
    }
    let r = g
        .regularity()
        .ok_or(Error::Precondition(Hypothesis::Regular))?;
    if r < min_r {
        return Err(Error::Precondition(Hypothesis::DegreeAtLeast {
            required: min_r,
            found: r,
        }));
    }
    Ok(r)
}

/// An `(r-1)`-tuple total dominating set of a connected r-regular graph,
/// r >= 3, of size at most `(r(r-1) - 1) / (r(r-1)) * n`, or exactly
/// `2r(r-1)` (optimal) for the incidence graph of a projective plane of
/// order r-1.
pub fn total_dominating_r_minus_1(g: &Graph) -> Result<DominationCertificate> {
    let r = regular_degree(g, 3)?;
    let palette = r * (r - 1);
    let aux = common_neighbor_graph(g);
    let cliques = find_complete_components(&aux, palette + 1);
    let covered: usize = cliques.iter().map(VertexSet::len).sum();

    if covered == g.n() {
        // Two K_{r(r-1)+1} components: g is bipartite and each part is a
        // plane's point (or line) set. Dropping one vertex per part leaves
        // every vertex with exactly r-1 members among its r neighbors.
        let (left, right) = g
            .bipartition()
            .expect("a graph whose common-neighbor graph is disconnected is bipartite");
        let mut set = VertexSet::full(g.n());
        for part in [&left, &right] {
            let lowest = part.iter().next().expect("parts are nonempty");
            set.remove(lowest);
        }
        return Ok(DominationCertificate {
            set,
            variant: Variant::Total,
            k: r - 1,
            branch: Branch::ProjectivePlaneExact,
            colors_used: 0,
            bound_numerator: palette,
            bound_denominator: palette + 1,
        });
    }
    if covered > 0 {
        return Err(Error::Unsupported(format!(
            "common-neighbor graph has a K_{} component but is not a projective-plane \
             incidence graph; this contradicts the structure theorem for r-regular graphs",
            palette + 1
        )));
    }

    let col = brooks_coloring(&aux);
    debug_assert!(col.num_colors() <= palette);
    Ok(DominationCertificate {
        set: set_from_coloring(g, &col),
        variant: Variant::Total,
        k: r - 1,
        branch: Branch::GenericColoring,
        colors_used: col.num_colors(),
        bound_numerator: palette - 1,
        bound_denominator: palette,
    })
}

/// An `r`-tuple dominating set of a connected r-regular graph, r >= 2, of
/// size at most `(r^2 - 1) / r^2 * n`, or exactly `n - 1 = r^2` (optimal) for
/// a Moore graph of diameter 2.
pub fn dominating_r(g: &Graph) -> Result<DominationCertificate> {
    let r = regular_degree(g, 2)?;
    let palette = r * r;
    let n = g.n();
    let aux = closed_square_graph(g);

    if n == palette + 1 && aux.edge_count() == n * (n - 1) / 2 {
        let mut set = VertexSet::full(n);
        set.remove(n - 1);
        return Ok(DominationCertificate {
            set,
            variant: Variant::Closed,
            k: r,
            branch: Branch::MooreExact,
            colors_used: 0,
            bound_numerator: palette,
            bound_denominator: palette + 1,
        });
    }

    let col = brooks_coloring(&aux);
    debug_assert!(col.num_colors() <= palette);
    Ok(DominationCertificate {
        set: set_from_coloring(g, &col),
        variant: Variant::Closed,
        k: r,
        branch: Branch::GenericColoring,
        colors_used: col.num_colors(),
        bound_numerator: palette - 1,
        bound_denominator: palette,
    })
}
