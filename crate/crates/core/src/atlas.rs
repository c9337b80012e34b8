//! Named graphs: projective-plane incidence graphs, Moore graphs of
//! diameter 2, and a few standard families used as test corpora.

use crate::error::{Error, Result};
use crate::graph::{Distance, Graph};

/// Orders q for which a Desarguesian plane PG(2, q) is built.
pub const SUPPORTED_PLANE_ORDERS: [usize; 7] = [2, 3, 4, 5, 7, 8, 9];

/// GF(p^k) with elements encoded as base-p digit strings of polynomial
/// coefficients (constant term least significant), given by full tables.
struct FiniteField {
    q: usize,
    add: Vec<usize>,
    mul: Vec<usize>,
}

impl FiniteField {
    /// `modulus` lists `c_0..c_{k-1}` of the monic irreducible
    /// `x^k + c_{k-1} x^{k-1} + ... + c_0` over GF(p).
    fn new(p: usize, modulus: &[usize]) -> Self {
        let k = modulus.len().max(1);
        let q = p.pow(k as u32);
        let digits = |mut a: usize| {
            let mut out = vec![0; k];
            for d in out.iter_mut() {
                *d = a % p;
                a /= p;
            }
            out
        };
        let encode = |coeffs: &[usize]| coeffs.iter().rev().fold(0, |acc, &c| acc * p + c);

        let mut add = vec![0; q * q];
        let mut mul = vec![0; q * q];
        for a in 0..q {
            let da = digits(a);
            for b in 0..q {
                let db = digits(b);
                let sum: Vec<usize> = da.iter().zip(&db).map(|(x, y)| (x + y) % p).collect();
                add[a * q + b] = encode(&sum);

                let mut prod = vec![0; 2 * k - 1];
                for (i, x) in da.iter().enumerate() {
                    for (j, y) in db.iter().enumerate() {
                        prod[i + j] = (prod[i + j] + x * y) % p;
                    }
                }
                // x^k ≡ -(c_0 + ... + c_{k-1} x^{k-1})
                for deg in (k..prod.len()).rev() {
                    let lead = prod[deg];
                    if lead == 0 {
                        continue;
                    }
                    prod[deg] = 0;
                    for (i, &c) in modulus.iter().enumerate() {
                        let t = deg - k + i;
                        prod[t] = (prod[t] + (p - c) * lead) % p;
                    }
                }
                mul[a * q + b] = encode(&prod[..k]);
            }
        }
        FiniteField { q, add, mul }
    }

    fn of_order(q: usize) -> Option<Self> {
        Some(match q {
            2 | 3 | 5 | 7 => FiniteField::new(q, &[0]),
            4 => FiniteField::new(2, &[1, 1]),
            8 => FiniteField::new(2, &[1, 1, 0]),
            9 => FiniteField::new(3, &[1, 0]),
            _ => return None,
        })
    }

    fn add(&self, a: usize, b: usize) -> usize {
        self.add[a * self.q + b]
    }

    fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.q + b]
    }
}

/// Incidence graph of PG(2, q): the q²+q+1 points (ids `0..N`) followed by
/// the q²+q+1 lines (ids `N..2N`), a point joined to each line through it.
pub fn projective_plane_incidence(q: usize) -> Result<Graph> {
    let field = FiniteField::of_order(q).ok_or_else(|| {
        let why = if q == 6 {
            "no projective plane of order 6 exists"
        } else {
            "no construction available"
        };
        Error::invalid(format!(
            "unsupported plane order {q} ({why}); supported orders: {SUPPORTED_PLANE_ORDERS:?}"
        ))
    })?;
    // Normalized representatives: first nonzero coordinate equals 1.
    let mut reps = Vec::new();
    for a in 0..q {
        for b in 0..q {
            for c in 0..q {
                let first = [a, b, c].into_iter().find(|&x| x != 0);
                if first == Some(1) {
                    reps.push([a, b, c]);
                }
            }
        }
    }
    let count = reps.len();
    debug_assert_eq!(count, q * q + q + 1);
    let mut edges = Vec::with_capacity(count * (q + 1));
    for (i, p) in reps.iter().enumerate() {
        for (j, l) in reps.iter().enumerate() {
            let dot = (0..3).fold(0, |acc, t| field.add(acc, field.mul(p[t], l[t])));
            if dot == 0 {
                edges.push((i, count + j));
            }
        }
    }
    Graph::from_edges(2 * count, edges)
}

/// The Heawood graph from its LCF code [5, -5]^7.
pub fn heawood() -> Graph {
    let n = 14;
    let mut edges: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    edges.extend((0..n).step_by(2).map(|i| (i, (i + 5) % n)));
    Graph::from_edges(n, edges).expect("static construction")
}

/// Outer pentagon 0..5, inner pentagram 5..10, spokes `i ~ i + 5`.
pub fn petersen() -> Graph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
        edges.push((i, i + 5));
    }
    Graph::from_edges(10, edges).expect("static construction")
}

/// Five pentagons `P_h` and five pentagrams `Q_i`; vertex `j` of `P_h` is
/// joined to vertex `h·i + j (mod 5)` of `Q_i`.
pub fn hoffman_singleton() -> Graph {
    let p = |h: usize, j: usize| 5 * h + j;
    let q = |i: usize, j: usize| 25 + 5 * i + j;
    let mut edges = Vec::new();
    for h in 0..5 {
        for j in 0..5 {
            edges.push((p(h, j), p(h, (j + 1) % 5)));
            edges.push((q(h, j), q(h, (j + 2) % 5)));
        }
    }
    for h in 0..5 {
        for i in 0..5 {
            for j in 0..5 {
                edges.push((p(h, j), q(i, (h * i + j) % 5)));
            }
        }
    }
    Graph::from_edges(50, edges).expect("static construction")
}

/// The Moore graph of diameter 2 and degree r, for r in {2, 3, 7}.
pub fn moore_graph(r: usize) -> Result<Graph> {
    let g = match r {
        2 => cycle(5)?,
        3 => petersen(),
        7 => hoffman_singleton(),
        57 => {
            return Err(Error::Unsupported(
                "existence of a Moore graph of degree 57 and diameter 2 is unknown".into(),
            ))
        }
        _ => {
            return Err(Error::invalid(format!(
                "no Moore graph of diameter 2 and degree {r}; they exist for r in {{2, 3, 7}}"
            )))
        }
    };
    let valid = g.n() == moore_order(r, 2)
        && g.regularity() == Some(r)
        && g.diameter() == Distance::Finite(2);
    if !valid {
        return Err(Error::Generation(format!(
            "degree-{r} Moore graph failed validation"
        )));
    }
    Ok(g)
}

/// Largest possible order `1 + r Σ_{i<d} (r-1)^i` of an r-regular graph of
/// diameter d.
pub fn moore_order(r: usize, d: usize) -> usize {
    1 + r * (0..d).map(|i| (r - 1).pow(i as u32)).sum::<usize>()
}

fn require(ok: bool, what: &str) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::invalid(what.to_string()))
    }
}

pub fn cycle(n: usize) -> Result<Graph> {
    require(n >= 3, "cycle needs n >= 3")?;
    Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
}

pub fn complete(n: usize) -> Result<Graph> {
    require(n >= 1, "complete graph needs n >= 1")?;
    Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
}

/// Parts `0..a` and `a..a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> Result<Graph> {
    require(
        a >= 1 && b >= 1,
        "complete bipartite graph needs both parts nonempty",
    )?;
    Graph::from_edges(a + b, (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v))))
}

/// Vertices are bit strings of length d, adjacent when they differ in one bit.
pub fn hypercube(d: usize) -> Result<Graph> {
    require((1..=20).contains(&d), "hypercube needs 1 <= d <= 20")?;
    let n = 1 << d;
    Graph::from_edges(
        n,
        (0..n).flat_map(|u| {
            (0..d)
                .map(move |b| (u, u ^ (1 << b)))
                .filter(|&(u, v)| u < v)
        }),
    )
}

/// Two n-cycles `0..n` and `n..2n` joined by the matching `i ~ i + n`.
pub fn prism(n: usize) -> Result<Graph> {
    require(n >= 3, "prism needs n >= 3")?;
    let mut edges = Vec::new();
    for i in 0..n {
        edges.push((i, (i + 1) % n));
        edges.push((n + i, n + (i + 1) % n));
        edges.push((i, n + i));
    }
    Graph::from_edges(2 * n, edges)
}

/// Parses a family spec such as `cycle:5`, `complete:4`, `kbip:3,3`,
/// `hypercube:3`, `prism:3`, `heawood`, `petersen`, `pg2:3`, `moore:7`.
pub fn named(spec: &str) -> Result<Graph> {
    let (name, args) = spec.split_once(':').unwrap_or((spec, ""));
    let nums: Vec<usize> = if args.is_empty() {
        Vec::new()
    } else {
        args.split(',')
            .map(|a| {
                a.trim()
                    .parse()
                    .map_err(|_| Error::invalid(format!("bad number {a:?} in {spec:?}")))
            })
            .collect::<Result<_>>()?
    };
    let arity = |want: usize| {
        require(
            nums.len() == want,
            &format!("{name} takes {want} argument(s), got {}", nums.len()),
        )
    };
    match name {
        "heawood" => arity(0).map(|_| heawood()),
        "petersen" => arity(0).map(|_| petersen()),
        "hoffman-singleton" => arity(0).map(|_| hoffman_singleton()),
        "pg2" => arity(1).and_then(|_| projective_plane_incidence(nums[0])),
        "moore" => arity(1).and_then(|_| moore_graph(nums[0])),
        "cycle" => arity(1).and_then(|_| cycle(nums[0])),
        "complete" => arity(1).and_then(|_| complete(nums[0])),
        "kbip" | "complete-bipartite" => {
            arity(2).and_then(|_| complete_bipartite(nums[0], nums[1]))
        }
        "hypercube" => arity(1).and_then(|_| hypercube(nums[0])),
        "prism" => arity(1).and_then(|_| prism(nums[0])),
        _ => Err(Error::invalid(format!("unknown atlas graph {name:?}"))),
    }
}
