//! Earlier probabilistic upper bounds on the k-tuple (total) domination
//! numbers, evaluated next to the coloring-based bounds for comparison.
//!
//! Values are reported unfloored. A bound larger than `n` says nothing
//! (every vertex set has at most `n` members) and is flagged vacuous.

use std::fmt;

use crate::graph::Graph;

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Bound {
    Value(f64),
    /// The formula's hypotheses fail; the string names the failed one.
    Inapplicable(&'static str),
}

impl Bound {
    pub fn value(self) -> Option<f64> {
        match self {
            Bound::Value(v) => Some(v),
            Bound::Inapplicable(_) => None,
        }
    }

    pub fn is_vacuous(self, n: usize) -> bool {
        self.value().is_some_and(|v| v > n as f64)
    }
}

impl fmt::Display for Bound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Bound::Value(v) => write!(f, "{v:.3}"),
            Bound::Inapplicable(_) => f.write_str("n/a"),
        }
    }
}

fn binomial(n: usize, m: usize) -> f64 {
    if m > n {
        return 0.0;
    }
    let m = m.min(n - m);
    (0..m).fold(1.0, |acc, i| acc * (n - i) as f64 / (i + 1) as f64)
}

fn mean_over_vertices(g: &Graph, f: impl Fn(usize) -> f64) -> f64 {
    if g.n() == 0 {
        return 0.0;
    }
    g.degrees().map(f).sum::<f64>() / g.n() as f64
}

/// Average of `C(d(v) + 1, m)` over the vertices.
pub fn d_tilde(g: &Graph, m: usize) -> f64 {
    mean_over_vertices(g, |d| binomial(d + 1, m))
}

/// Average of `C(d(v), m)` over the vertices.
pub fn d_hat(g: &Graph, m: usize) -> f64 {
    mean_over_vertices(g, |d| binomial(d, m))
}

/// `(ln(δ-k+2) + ln d̃_{k-1} + 1) / (δ-k+2) · n`, for `1 <= k <= δ+1`.
pub fn probabilistic_closed_bound(g: &Graph, k: usize) -> Bound {
    let delta = g.min_degree();
    if k == 0 || k > delta + 1 {
        return Bound::Inapplicable("requires 1 <= k <= min degree + 1");
    }
    let span = (delta + 2 - k) as f64;
    Bound::Value((span.ln() + d_tilde(g, k - 1).ln() + 1.0) / span * g.n() as f64)
}

/// `(ln(δ-k) + ln d̂_k + 1) / (δ-k) · n`, for `δ > k >= 1`.
pub fn probabilistic_total_bound(g: &Graph, k: usize) -> Bound {
    let delta = g.min_degree();
    if k == 0 || k >= delta {
        return Bound::Inapplicable("requires min degree > k >= 1");
    }
    let span = (delta - k) as f64;
    Bound::Value((span.ln() + d_hat(g, k).ln() + 1.0) / span * g.n() as f64)
}

/// The coloring-based bounds for an r-regular graph on `n` vertices:
/// `(r(r-1)-1)/(r(r-1)) · n` for (r-1)-tuple total domination (r >= 3) and
/// `(r²-1)/r² · n` for r-tuple domination (r >= 2).
pub fn coloring_bounds(r: usize, n: usize) -> (Bound, Bound) {
    let n = n as f64;
    let total = if r >= 3 {
        let c = (r * (r - 1)) as f64;
        Bound::Value((c - 1.0) / c * n)
    } else {
        Bound::Inapplicable("requires r >= 3")
    };
    let closed = if r >= 2 {
        let c = (r * r) as f64;
        Bound::Value((c - 1.0) / c * n)
    } else {
        Bound::Inapplicable("requires r >= 2")
    };
    (total, closed)
}

/// All four bounds for one graph. For an r-regular graph the total slot uses
/// `k = r - 1` and the closed slot `k = r`; otherwise the minimum degree δ
/// stands in for r and the coloring bounds are inapplicable.
#[derive(Clone, Debug, PartialEq)]
pub struct BoundReport {
    pub n: usize,
    pub r: Option<usize>,
    /// k of the total slot; `None` when δ < 2.
    pub total_k: Option<usize>,
    pub closed_k: usize,
    /// `d̃_{closed_k - 1}`.
    pub d_tilde: f64,
    /// `d̂_{total_k}`.
    pub d_hat: Option<f64>,
    pub prob_closed: Bound,
    pub prob_total: Bound,
    pub coloring_total: Bound,
    pub coloring_closed: Bound,
}

pub fn compare_report(g: &Graph) -> BoundReport {
    let r = g.regularity();
    let delta = g.min_degree();
    let closed_k = delta.max(1);
    let total_k = (delta >= 2).then(|| delta - 1);
    let (coloring_total, coloring_closed) = match r {
        Some(r) => coloring_bounds(r, g.n()),
        None => (
            Bound::Inapplicable("graph is not regular"),
            Bound::Inapplicable("graph is not regular"),
        ),
    };
    BoundReport {
        n: g.n(),
        r,
        total_k,
        closed_k,
        d_tilde: d_tilde(g, closed_k - 1),
        d_hat: total_k.map(|k| d_hat(g, k)),
        prob_closed: probabilistic_closed_bound(g, closed_k),
        prob_total: total_k.map_or(Bound::Inapplicable("requires min degree >= 2"), |k| {
            probabilistic_total_bound(g, k)
        }),
        coloring_total,
        coloring_closed,
    }
}
