//! Acceptance suite: one line per criterion, nonzero exit if any fails.
//!
//! Run with `cargo test -p tupledom --test acceptance`.

mod common;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use common::{disjoint_union, exhaustive_gamma, gnp, rng};
use rand::seq::index::sample;
use rand::Rng;
use tupledom::atlas;
use tupledom::bounds::{coloring_bounds, probabilistic_closed_bound, probabilistic_total_bound};
use tupledom::coloring::brooks_coloring;
use tupledom::domination::{dominating_r, total_dominating_r_minus_1, verify_closed, verify_total};
use tupledom::exact::{exact_gamma, exact_gamma_total, DEFAULT_BUDGET};
use tupledom::generators::random_regular;
use tupledom::io::{parse_dimacs, parse_graph6, write_dimacs, write_graph6};
use tupledom::{Branch, Distance, Graph, Variant, VertexSet};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn check(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(limit: Duration, started: Instant) -> Result<(), String> {
    let spent = started.elapsed();
    check(spent < limit, || format!("took {spent:?}, limit {limit:?}"))
}

/// Cubic graphs for the r = 3 sweep: 100 draws with n cycling over 8..=50.
fn cubic_corpus() -> Vec<Graph> {
    (0..100u64)
        .map(|i| {
            let n = 8 + 2 * (i as usize % 22);
            random_regular(n, 3, 1_000 + i).expect("cubic generation")
        })
        .collect()
}

/// 50 connected r-regular graphs with 2r <= n <= 60 and n·r even.
fn regular_corpus(r: usize, salt: u64) -> Vec<Graph> {
    let sizes: Vec<usize> = (2 * r..=60).filter(|n| (n * r).is_multiple_of(2)).collect();
    (0..50u64)
        .map(|i| {
            let n = sizes[(i as usize * 7) % sizes.len()];
            random_regular(n, r, salt + i).expect("regular generation")
        })
        .collect()
}

fn ac1_heawood_golden() -> Outcome {
    let started = Instant::now();
    let h = atlas::heawood();
    let exact = exact_gamma_total(&h, 2, DEFAULT_BUDGET).optimum();
    check(exact == Some(12), || format!("exact γ×2,t = {exact:?}"))?;
    let cert = total_dominating_r_minus_1(&h).map_err(|e| e.to_string())?;
    check(cert.branch == Branch::ProjectivePlaneExact, || {
        format!("branch {}", cert.branch)
    })?;
    check(cert.size() == 12 && cert.verify(&h), || {
        format!("size {}", cert.size())
    })?;
    within(Duration::from_secs(5), started)?;
    Ok(format!(
        "exact 12, construction 12 ({:?})",
        started.elapsed()
    ))
}

fn ac2_cubic_sweep() -> Outcome {
    let started = Instant::now();
    let mut worst = 0.0f64;
    for (i, g) in cubic_corpus().iter().enumerate() {
        let n = g.n();
        let cert = total_dominating_r_minus_1(g).map_err(|e| format!("graph {i}: {e}"))?;
        check(verify_total(g, &cert.set, 2), || {
            format!("graph {i} (n={n}) fails verifier")
        })?;
        check(cert.size() <= 5 * n / 6, || {
            format!("graph {i} (n={n}): size {} > {}", cert.size(), 5 * n / 6)
        })?;
        worst = worst.max(cert.size() as f64 / n as f64);
    }
    within(Duration::from_secs(60), started)?;
    Ok(format!(
        "100 graphs, max |D|/n = {worst:.3} <= 0.833 ({:?})",
        started.elapsed()
    ))
}

fn ac3_total_general_r() -> Outcome {
    let mut count = 0;
    for r in [4, 5] {
        let palette = r * (r - 1);
        for (i, g) in regular_corpus(r, 20_000 * r as u64).iter().enumerate() {
            let n = g.n();
            let cert = total_dominating_r_minus_1(g).map_err(|e| format!("r={r} #{i}: {e}"))?;
            check(verify_total(g, &cert.set, r - 1), || {
                format!("r={r} #{i} fails verifier")
            })?;
            let bound = (palette - 1) * n / palette;
            check(cert.size() <= bound, || {
                format!("r={r} #{i} (n={n}): size {} > {bound}", cert.size())
            })?;
            count += 1;
        }
    }
    Ok(format!("{count} graphs, zero violations"))
}

fn ac4_closed_sweep() -> Outcome {
    let mut count = 0;
    for r in [3, 4, 5] {
        for (i, g) in regular_corpus(r, 40_000 * r as u64).iter().enumerate() {
            let n = g.n();
            let cert = dominating_r(g).map_err(|e| format!("r={r} #{i}: {e}"))?;
            check(verify_closed(g, &cert.set, r), || {
                format!("r={r} #{i} fails verifier")
            })?;
            let bound = (r * r - 1) * n / (r * r);
            check(cert.size() <= bound, || {
                format!("r={r} #{i} (n={n}): size {} > {bound}", cert.size())
            })?;
            count += 1;
        }
    }
    for (g, size) in [(atlas::petersen(), 9), (atlas::cycle(5).unwrap(), 4)] {
        let cert = dominating_r(&g).map_err(|e| e.to_string())?;
        check(
            cert.branch == Branch::MooreExact && cert.size() == size,
            || format!("n={}: branch {} size {}", g.n(), cert.branch, cert.size()),
        )?;
        check(cert.verify(&g), || {
            "Moore certificate fails verifier".into()
        })?;
    }
    Ok(format!(
        "{count} graphs, Petersen 9 and C5 4 on moore-exact"
    ))
}

fn ac5_projective_plane() -> Outcome {
    let started = Instant::now();
    let g = atlas::projective_plane_incidence(3).map_err(|e| e.to_string())?;
    check(g.n() == 26 && g.regularity() == Some(4), || {
        "PG(2,3) shape".into()
    })?;
    let cert = total_dominating_r_minus_1(&g).map_err(|e| e.to_string())?;
    check(cert.branch == Branch::ProjectivePlaneExact, || {
        format!("branch {}", cert.branch)
    })?;
    check(cert.size() == 24 && verify_total(&g, &cert.set, 3), || {
        format!("size {}", cert.size())
    })?;
    let (left, right) = g.bipartition().ok_or("not bipartite")?;
    let mut mutations = 0;
    for part in [left, right] {
        let members = part.to_vec();
        for (i, &a) in members.iter().enumerate() {
            for &b in &members[i + 1..] {
                let mut s = VertexSet::full(g.n());
                s.remove(a);
                s.remove(b);
                check(!verify_total(&g, &s, 3), || {
                    format!("V - {{{a},{b}}} still dominates")
                })?;
                mutations += 1;
            }
        }
    }
    for x in cert.set.iter() {
        let mut s = cert.set.clone();
        s.remove(x);
        check(!verify_total(&g, &s, 3), || {
            format!("certificate minus {x} still dominates")
        })?;
    }
    within(Duration::from_secs(30), started)?;
    Ok(format!(
        "size 24, {mutations} same-part removals all fail ({:?})",
        started.elapsed()
    ))
}

fn ac6_oracle_sandwich() -> Outcome {
    let corpus = [
        ("K4", atlas::complete(4).unwrap()),
        ("K3,3", atlas::complete_bipartite(3, 3).unwrap()),
        ("Q3", atlas::hypercube(3).unwrap()),
        ("prism3", atlas::prism(3).unwrap()),
        ("Petersen", atlas::petersen()),
        ("Heawood", atlas::heawood()),
    ];
    let mut rows = Vec::new();
    for (name, g) in &corpus {
        let r = g.regularity().expect("corpus is regular");
        let certs = [
            (Variant::Total, r - 1, total_dominating_r_minus_1(g)),
            (Variant::Closed, r, dominating_r(g)),
        ];
        for (variant, k, cert) in certs {
            let cert = cert.map_err(|e| format!("{name}: {e}"))?;
            let exact = exact_gamma(g, k, variant, DEFAULT_BUDGET)
                .optimum()
                .ok_or_else(|| format!("{name} {variant}: no exact optimum"))?;
            if g.n() <= 16 {
                let brute = exhaustive_gamma(g, k, variant);
                check(brute == Some(exact), || {
                    format!("{name} {variant}: exact {exact} vs enumeration {brute:?}")
                })?;
            }
            check(
                exact <= cert.size() && cert.size() <= cert.bound_floor(),
                || {
                    format!(
                        "{name} {variant}: exact {exact}, construction {}, bound {}",
                        cert.size(),
                        cert.bound_floor()
                    )
                },
            )?;
            check(cert.verify(g), || {
                format!("{name} {variant}: verifier fails")
            })?;
            rows.push(format!(
                "{name}/{variant}:{exact}<={}<={}",
                cert.size(),
                cert.bound_floor()
            ));
        }
    }
    Ok(rows.join(" "))
}

fn brooks_corpus() -> Vec<Graph> {
    let mut out = Vec::new();
    let mut rng = rng(7_000);
    for i in 0..500u64 {
        let g = match i % 5 {
            0 => {
                let n = rng.gen_range(1..=60);
                gnp(n, rng.gen_range(0.02..0.4), i)
            }
            1 => {
                let r: usize = rng.gen_range(3..=5);
                let sizes: Vec<usize> =
                    (2 * r..=60).filter(|n| (n * r).is_multiple_of(2)).collect();
                random_regular(sizes[rng.gen_range(0..sizes.len())], r, i).unwrap()
            }
            2 => {
                // Complete and odd-cycle components next to a random part.
                let m = rng.gen_range(1..=8);
                let c = 2 * rng.gen_range(1..=6) + 1;
                let base = gnp(rng.gen_range(1..=40), rng.gen_range(0.05..0.3), i);
                let with_clique = disjoint_union(&base, &atlas::complete(m).unwrap());
                disjoint_union(&with_clique, &atlas::cycle(c).unwrap())
            }
            3 => {
                let r = rng.gen_range(3..=4);
                let n = 2 * rng.gen_range(4..=25);
                tupledom::aux::common_neighbor_graph(&random_regular(n, r, i).unwrap())
            }
            _ => {
                // A hub of degree 4 joined to two copies of K_{d+1} minus an
                // edge; 4-regular with a cut vertex when d = 4.
                let d = rng.gen_range(3..=6);
                let copies = 2;
                let mut edges = Vec::new();
                let mut next = 1;
                for _ in 0..copies {
                    let block: Vec<usize> = (next..next + d + 1).collect();
                    next += d + 1;
                    for a in 0..=d {
                        for b in a + 1..=d {
                            if (a, b) != (0, 1) {
                                edges.push((block[a], block[b]));
                            }
                        }
                    }
                    edges.push((0, block[0]));
                    edges.push((0, block[1]));
                }
                Graph::from_edges(next, edges).unwrap()
            }
        };
        out.push(g);
    }
    out
}

fn ac7_brooks_suite() -> Outcome {
    let corpus = brooks_corpus();
    let mut checked_components = 0;
    for (i, g) in corpus.iter().enumerate() {
        let col = brooks_coloring(g);
        check(col.is_proper_for(g), || {
            format!("graph {i}: improper coloring")
        })?;
        for comp in g.components() {
            let m = comp.len();
            let delta = comp
                .iter()
                .map(|&v| g.neighbors(v).len())
                .max()
                .unwrap_or(0);
            let mut colors: Vec<usize> = comp.iter().map(|&v| col.color(v)).collect();
            colors.sort_unstable();
            colors.dedup();
            let complete = comp.iter().all(|&v| g.neighbors(v).len() + 1 == m);
            let odd_cycle = m >= 3 && m % 2 == 1 && comp.iter().all(|&v| g.neighbors(v).len() == 2);
            if complete {
                check(colors.len() == m, || {
                    format!("graph {i}: K_{m} got {}", colors.len())
                })?;
            } else if odd_cycle {
                check(colors.len() == 3, || {
                    format!("graph {i}: odd cycle got {}", colors.len())
                })?;
            } else {
                check(colors.len() <= delta, || {
                    format!(
                        "graph {i}: component of Δ={delta} got {} colors",
                        colors.len()
                    )
                })?;
            }
            checked_components += 1;
        }
    }
    Ok(format!(
        "500 graphs, {checked_components} components within bounds"
    ))
}

fn ac8_comparators() -> Outcome {
    let mut corpus: Vec<Graph> = cubic_corpus();
    for r in [4, 5] {
        corpus.extend(regular_corpus(r, 20_000 * r as u64));
    }
    for r in [3, 4, 5] {
        corpus.extend(regular_corpus(r, 40_000 * r as u64));
    }
    corpus.extend([
        atlas::heawood(),
        atlas::petersen(),
        atlas::projective_plane_incidence(3).unwrap(),
        atlas::projective_plane_incidence(4).unwrap(),
    ]);
    let mut compared = 0;
    let mut vacuous = 0;
    for (i, g) in corpus.iter().enumerate() {
        let r = g.regularity().expect("sweep corpora are regular");
        if !(3..=5).contains(&r) || !g.is_connected() {
            continue;
        }
        let (total, closed) = coloring_bounds(r, g.n());
        let (total, closed) = (total.value().unwrap(), closed.value().unwrap());
        if let Some(t22) = probabilistic_total_bound(g, r - 1).value() {
            check(total < t22, || {
                format!("graph {i}: total {total} >= prob_total {t22}")
            })?;
            vacuous += usize::from(t22 > g.n() as f64);
        }
        let t11 = probabilistic_closed_bound(g, r)
            .value()
            .ok_or_else(|| format!("graph {i}: prob_closed n/a"))?;
        check(closed < t11, || {
            format!("graph {i}: closed {closed} >= prob_closed {t11}")
        })?;
        compared += 1;
    }
    Ok(format!(
        "{compared} graphs, both comparisons hold ({vacuous} vacuous prob_total values)"
    ))
}

/// Bit-string graph6 encoder used as an independent oracle: builds the
/// upper-triangle string explicitly, pads, and maps each 6-char chunk.
fn oracle_graph6(g: &Graph) -> String {
    let n = g.n();
    assert!(n <= 62);
    let mut bits = String::new();
    for j in 1..n {
        for i in 0..j {
            bits.push(if g.has_edge(i, j) { '1' } else { '0' });
        }
    }
    while !bits.len().is_multiple_of(6) {
        bits.push('0');
    }
    let mut out = String::new();
    out.push(char::from(n as u8 + 63));
    for chunk in bits.as_bytes().chunks(6) {
        let value = u8::from_str_radix(std::str::from_utf8(chunk).unwrap(), 2).unwrap();
        out.push(char::from(value + 63));
    }
    out
}

fn ac9_round_trips() -> Outcome {
    let k4 = atlas::complete(4).unwrap();
    check(
        oracle_graph6(&k4) == "C~" && write_graph6(&k4) == "C~",
        || format!("K4 encodes to {:?}", write_graph6(&k4)),
    )?;
    let mut rng = rng(9_000);
    for i in 0..200u64 {
        let n = if i < 20 {
            i as usize
        } else {
            rng.gen_range(1..=200)
        };
        let g = gnp(n, rng.gen_range(0.0..0.6), i);
        let g6 = write_graph6(&g);
        let back = parse_graph6(&g6).map_err(|e| format!("fuzz {i}: {e}"))?;
        check(back == g && write_graph6(&back) == g6, || {
            format!("fuzz {i}: graph6 mismatch")
        })?;
        if n <= 62 {
            check(oracle_graph6(&g) == g6, || {
                format!("fuzz {i}: differs from oracle")
            })?;
        }
        let dimacs = write_dimacs(&g);
        let back = parse_dimacs(&dimacs).map_err(|e| format!("fuzz {i}: {e}"))?;
        check(back == g && write_dimacs(&back) == dimacs, || {
            format!("fuzz {i}: DIMACS mismatch")
        })?;
    }
    Ok("200 graphs round-trip in both formats; K4 = \"C~\"".into())
}

fn ac10_hoffman_singleton() -> Outcome {
    let started = Instant::now();
    let g = atlas::moore_graph(7).map_err(|e| e.to_string())?;
    check(g.regularity() == Some(7), || "not 7-regular".into())?;
    check(g.n() == 50 && g.n() == atlas::moore_order(7, 2), || {
        format!("n = {}", g.n())
    })?;
    check(g.diameter() == Distance::Finite(2), || {
        format!("diameter {}", g.diameter())
    })?;
    check(g.girth() == Distance::Finite(5), || {
        format!("girth {}", g.girth())
    })?;
    let cert = dominating_r(&g).map_err(|e| e.to_string())?;
    check(
        cert.branch == Branch::MooreExact && cert.size() == 49,
        || format!("branch {} size {}", cert.branch, cert.size()),
    )?;
    check(cert.verify(&g), || "certificate fails verifier".into())?;
    let mut rng = rng(10_000);
    for trial in 0..1_000 {
        let kept = sample(&mut rng, 50, 48);
        let s = VertexSet::from_vertices(50, kept.iter()).unwrap();
        check(!verify_closed(&g, &s, 7), || {
            format!("sample {trial} dominates")
        })?;
    }
    within(Duration::from_secs(60), started)?;
    Ok(format!(
        "n=50, diameter 2, girth 5, size 49, 1000 samples fail ({:?})",
        started.elapsed()
    ))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("AC1  Heawood golden", ac1_heawood_golden),
        ("AC2  cubic total sweep", ac2_cubic_sweep),
        ("AC3  total sweep r in {4,5}", ac3_total_general_r),
        ("AC4  closed sweep r in {3,4,5}", ac4_closed_sweep),
        ("AC5  projective plane exactness", ac5_projective_plane),
        ("AC6  oracle sandwich", ac6_oracle_sandwich),
        ("AC7  Brooks property suite", ac7_brooks_suite),
        ("AC8  comparator bounds", ac8_comparators),
        ("AC9  format round-trips", ac9_round_trips),
        ("AC10 Hoffman-Singleton", ac10_hoffman_singleton),
    ];
    let mut failed = 0;
    for (name, run) in criteria {
        match run() {
            Ok(detail) => println!("[PASS] {name}: {detail}"),
            Err(reason) => {
                failed += 1;
                println!("[FAIL] {name}: {reason}");
            }
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
