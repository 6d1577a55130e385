//! One line per acceptance criterion. Pass criterion numbers as arguments to
//! run a subset, e.g. `cargo test --test acceptance -- 2 9`; add `--strict`
//! to let the timing criterion fail the run.

mod common;

use std::collections::HashSet;
use std::ops::ControlFlow;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use common::*;
use rand::rngs::StdRng;
use rand::Rng;
use twinedge::deciders::{decide_bounded_degree, decide_cochordal, decide_cocomp, decide_split};
use twinedge::gadgets::{
    build_h, gadget_extensions, sat_to_allodd_instance, CnfFormula, FALSE, GADGET_EDGES, RED, TRUE,
};
use twinedge::graph::{connected_components, Graph};
use twinedge::oracle::{
    all_odd_all_optimal, chi_it_bruteforce, chi_it_predict, chromatic_number, connected_catalog,
    exists_inducing, for_each_optimal_partition, optimal_coloring, optimal_coloring_with_even_class, Limits,
    OracleError, Partition,
};
use twinedge::twin::{build_component_even_t, build_component_odd_t};
use twinedge::{construct, monotone_extend, verify_twin, TwinError, VertexColoring};

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: String) -> Outcome {
    Outcome { pass, detail }
}

// ---------------------------------------------------------------------------
// 1. chi'_it by exhaustive search equals the parity prediction
// ---------------------------------------------------------------------------

fn criterion_1() -> Outcome {
    let limits = Limits::default();
    let mut checked = 0;
    let mut mismatches = Vec::new();
    let mut catalog_sizes = Vec::new();
    let check = |g: &Graph, what: String, mismatches: &mut Vec<String>| {
        let brute = chi_it_bruteforce(g, &limits);
        let predicted = chi_it_predict(g, &limits);
        match (brute, predicted) {
            (Ok(a), Ok(b)) if a == b => {}
            (a, b) => mismatches.push(format!("{what}: search {a:?}, prediction {b:?}")),
        }
    };
    for n in 1..=7 {
        let catalog = connected_catalog(n);
        catalog_sizes.push(catalog.len());
        if n == 2 {
            continue;
        }
        for (i, g) in catalog.iter().enumerate() {
            check(g, format!("catalog n={n} #{i}"), &mut mismatches);
            checked += 1;
        }
    }
    let mut r = rng(0xC1);
    let mut random = 0;
    while random < 200 {
        let n = r.random_range(3..=10);
        let m = r.random_range(1..=10);
        let g = make_nice(&gnm(&mut r, n, m));
        if g.m() == 0 {
            continue;
        }
        check(&g, format!("random {:?}", g.edges()), &mut mismatches);
        random += 1;
        checked += 1;
    }
    let counts_ok = catalog_sizes == [1, 1, 2, 6, 21, 112, 853];
    outcome(
        counts_ok && mismatches.is_empty(),
        format!(
            "catalog sizes {catalog_sizes:?}, {checked} graphs ({random} random), {} mismatches{}",
            mismatches.len(),
            first(&mismatches)
        ),
    )
}

fn first(items: &[String]) -> String {
    items.first().map(|s| format!("; first: {s}")).unwrap_or_default()
}

// ---------------------------------------------------------------------------
// 2. construct always verifies, with the predicted modulus
// ---------------------------------------------------------------------------

/// Disjoint cliques and odd cycles colored so that every class in each
/// component is odd, with `k = 2 (mod 4)`.
fn all_odd_instance(r: &mut StdRng) -> (Graph, VertexColoring) {
    let k = if r.random_bool(0.5) { 2 } else { 6 };
    let mut g = Graph::empty(0);
    let mut colors = Vec::new();
    while g.n() < 12 {
        if k == 2 {
            // P_{4j+2} has two sides of odd size 2j+1.
            let j = r.random_range(1..3);
            let len = 4 * j + 2;
            g = g.disjoint_union(&Graph::path(len));
            colors.extend((0..len).map(|v| v % 2));
        } else {
            g = g.disjoint_union(&Graph::complete(6));
            colors.extend(0..6);
        }
    }
    (g, VertexColoring::new(k, colors).unwrap())
}

fn criterion_2() -> Outcome {
    let mut r = rng(0xC2);
    let mut failures = Vec::new();
    let mut promoted = 0;
    for i in 0..1000 {
        let (g, f) = if i % 10 == 0 {
            all_odd_instance(&mut r)
        } else {
            let n = r.random_range(1..=30);
            let p = r.random_range(0.0..0.4);
            let g = make_nice(&gnp(&mut r, n, p));
            let base = if g.m() == 0 { 1 } else { g.max_degree() + 1 };
            let k = base + r.random_range(0..4);
            match random_proper_coloring(&mut r, &g, k) {
                Some(f) => (g, f),
                None => continue,
            }
        };
        let expected = expected_modulus(&g, &f);
        match construct(&g, &f) {
            Ok((s, _)) => {
                let valid = verify_twin(&g, &s).map(|v| v.is_valid()).unwrap_or(false);
                if !valid || s.modulus() != expected {
                    failures.push(format!(
                        "#{i}: valid {valid}, modulus {} vs {expected}",
                        s.modulus()
                    ));
                }
                if s.modulus() == f.k() + 1 && f.k() > 1 {
                    promoted += 1;
                }
            }
            Err(e) => failures.push(format!("#{i}: {e}")),
        }
    }
    outcome(
        failures.is_empty(),
        format!(
            "1000 instances, {promoted} needed k+1, {} failures{}",
            failures.len(),
            first(&failures)
        ),
    )
}

// ---------------------------------------------------------------------------
// 3. Named fixtures
// ---------------------------------------------------------------------------

fn criterion_3() -> Outcome {
    let limits = Limits::default();
    let k4k2 = Graph::new(
        6,
        [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (3, 4), (4, 5)],
    )
    .unwrap();
    let fixtures = [
        ("Petersen", Graph::petersen(), 3),
        ("C8", Graph::cycle(8), 2),
        ("P6", Graph::path(6), 3),
        ("K4 + pendant path", k4k2, 4),
        ("K1,3", Graph::star(3), 3),
        ("K6", Graph::complete(6), 7),
    ];
    let mut results = Vec::new();
    let mut pass = true;
    for (name, g, expected) in fixtures {
        let value = match chi_it_bruteforce(&g, &limits) {
            Ok(v) => format!("{v}"),
            Err(OracleError::SizeLimit { .. }) => {
                chi_it_predict(&g, &limits).map_or("error".into(), |v| format!("{v} by parity"))
            }
            Err(e) => format!("{e}"),
        };
        let ok = value.split_whitespace().next() == Some(&expected.to_string());
        pass &= ok;
        results.push(format!("{name}={value}"));
    }
    let k6 = Graph::complete(6);
    let f = VertexColoring::new(6, (0..6).collect()).unwrap();
    let modulus = construct(&k6, &f).map(|(s, _)| s.modulus()).unwrap_or(0);
    pass &= modulus == 7;
    results.push(format!("construct(K6) modulus={modulus}"));
    outcome(pass, results.join(", "))
}

// ---------------------------------------------------------------------------
// 4. Exact induction on non-bipartite graphs
// ---------------------------------------------------------------------------

fn criterion_4() -> Outcome {
    let mut r = rng(0xC4);
    let limits = Limits::default();
    let mut failures = Vec::new();
    let (mut odd, mut even_sum, mut odd_sum) = (0, 0, 0);
    let mut done = 0;
    while done < 200 {
        let n = r.random_range(3..=10);
        let extra = r.random_range(1..=10 - (n - 1).min(9));
        let g = random_connected(&mut r, n, extra);
        if g.m() > 10 || is_bipartite(&g) {
            continue;
        }
        let t = if r.random_bool(0.5) { 3 } else { 4 };
        let Some(f) = random_proper_coloring(&mut r, &g, t) else {
            continue;
        };
        done += 1;
        let comp: Vec<usize> = (0..n).collect();
        let sum: usize = f.colors().iter().sum();
        let tag = format!("{:?} f={:?} t={t}", g.edges(), f.colors());
        if t % 2 == 1 {
            odd += 1;
            match build_component_odd_t(&g, &comp, &f, t) {
                Ok(s) if vertex_sums(&g, s.values(), t) == f.colors() => {}
                other => failures.push(format!("{tag}: {other:?}")),
            }
            continue;
        }
        let built = build_component_even_t(&g, &comp, &f, t);
        if sum % 2 == 0 {
            even_sum += 1;
            match built {
                Ok(s) if vertex_sums(&g, s.values(), t) == f.colors() => {}
                other => failures.push(format!("{tag}: {other:?}")),
            }
        } else {
            odd_sum += 1;
            if !matches!(built, Err(TwinError::OddSum { .. })) {
                failures.push(format!("{tag}: built despite odd sum"));
            }
            let exists = brute_edge_search(&g, t, |sums| sums == f.colors());
            let oracle = exists_inducing(&g, &f, t, &limits).map(|s| s.is_some());
            if exists || oracle != Ok(false) {
                failures.push(format!("{tag}: exhaustive search found an inducing coloring"));
            }
        }
    }
    outcome(
        failures.is_empty(),
        format!(
            "200 graphs: {odd} odd t, {even_sum} even t with even sum, {odd_sum} even t with odd sum (exhaustive), {} failures{}",
            failures.len(),
            first(&failures)
        ),
    )
}

// ---------------------------------------------------------------------------
// 5. Monotonicity
// ---------------------------------------------------------------------------

/// An optimal coloring in which no component has all classes odd, when one
/// exists: each component of chromatic number `chi` gets a coloring with an
/// even class if it has one.
fn coloring_avoiding_all_odd(g: &Graph, limits: &Limits) -> VertexColoring {
    let k = chromatic_number(g, limits).unwrap().max(1);
    let mut colors = vec![0; g.n()];
    for comp in connected_components(g) {
        let h = g.induced_subgraph(&comp);
        let partition: Partition = match optimal_coloring_with_even_class(&h, limits).unwrap() {
            Some(p) => p,
            None => {
                let c = optimal_coloring(&h, limits).unwrap();
                (0..c.k())
                    .map(|x| (0..h.n()).filter(|&v| c.color(v) == x).collect())
                    .collect()
            }
        };
        for (label, class) in partition.iter().enumerate() {
            for &v in class {
                colors[comp[v]] = label;
            }
        }
    }
    VertexColoring::new(k, colors).unwrap()
}

fn criterion_5() -> Outcome {
    let mut r = rng(0xC5);
    let limits = Limits::default();
    let mut failures = Vec::new();
    let mut checks = 0;
    for i in 0..100 {
        let n = r.random_range(1..=12);
        let p = r.random_range(0.1..0.8);
        let g = make_nice(&gnp(&mut r, n, p));
        let chi_it = chi_it_predict(&g, &limits).unwrap();
        let f = coloring_avoiding_all_odd(&g, &limits);
        for t in chi_it..=chi_it + 4 {
            checks += 1;
            let result = if t < f.k() {
                Err(TwinError::BelowPalette {
                    requested: t,
                    k: f.k(),
                })
            } else {
                monotone_extend(&g, &f, t)
            };
            match result {
                Ok((s, _)) if s.modulus() == t && verify_twin(&g, &s).unwrap().is_valid() => {}
                Ok((s, _)) => failures.push(format!("#{i} t={t}: modulus {}", s.modulus())),
                Err(e) => failures.push(format!("#{i} t={t}: {e}")),
            }
        }
    }
    outcome(
        failures.is_empty(),
        format!(
            "100 graphs, {checks} (graph, t) pairs, {} failures{}",
            failures.len(),
            first(&failures)
        ),
    )
}

// ---------------------------------------------------------------------------
// 6. Reduction correctness
// ---------------------------------------------------------------------------

fn satisfiable(f: &CnfFormula) -> bool {
    (0u32..1 << f.num_vars).any(|bits| {
        f.clauses.iter().all(|c| {
            c.iter()
                .any(|&l| (bits >> (l.unsigned_abs() - 1) & 1 == 1) == (l > 0))
        })
    })
}

/// Clauses over variables `1..=v`, as sorted literal triples.
fn clauses(v: i32) -> Vec<[i32; 3]> {
    let lits: Vec<i32> = (1..=v).flat_map(|x| [x, -x]).collect();
    let mut out = Vec::new();
    for a in 0..lits.len() {
        for b in a..lits.len() {
            for c in b..lits.len() {
                out.push([lits[a], lits[b], lits[c]]);
            }
        }
    }
    out
}

/// Every formula with `v <= 3` variables, all used, and one to three
/// distinct clauses.
fn small_formulas() -> Vec<CnfFormula> {
    let mut out = Vec::new();
    for v in 1..=3 {
        let cs = clauses(v);
        let mut sets: Vec<Vec<[i32; 3]>> = Vec::new();
        for a in 0..cs.len() {
            sets.push(vec![cs[a]]);
            for b in a + 1..cs.len() {
                sets.push(vec![cs[a], cs[b]]);
                for c in b + 1..cs.len() {
                    sets.push(vec![cs[a], cs[b], cs[c]]);
                }
            }
        }
        for set in sets {
            let used: HashSet<u32> = set.iter().flatten().map(|l| l.unsigned_abs()).collect();
            if used.len() == v as usize {
                out.push(CnfFormula::new(v as usize, set).unwrap());
            }
        }
    }
    out
}

fn criterion_6() -> Outcome {
    let limits = Limits::with_max_vertices(128);
    let mut formulas = small_formulas();
    let exhaustive = formulas.len();
    let mut r = rng(0xC6);
    for _ in 0..50 {
        let v = r.random_range(3..=5);
        let m = r.random_range(2..=5);
        let cs = (0..m)
            .map(|_| [0; 3].map(|_| r.random_range(1..=v) * if r.random_bool(0.5) { 1 } else { -1 }))
            .collect();
        formulas.push(CnfFormula::new(v as usize, cs).unwrap());
    }
    let mut failures = Vec::new();
    let (mut sat_count, mut skipped, mut largest) = (0, 0, 0);
    for f in &formulas {
        let inst = sat_to_allodd_instance(f, 3).unwrap();
        if inst.graph.n() > limits.max_vertices {
            skipped += 1;
            continue;
        }
        largest = largest.max(inst.graph.n());
        let sat = satisfiable(f);
        sat_count += usize::from(sat);
        match optimal_coloring_with_even_class(&inst.graph, &limits) {
            Ok(even) if even.is_some() == sat => {}
            Ok(_) => failures.push(format!("{:?}: satisfiable {sat}", f.clauses)),
            Err(e) => failures.push(format!("{:?}: {e}", f.clauses)),
        }
    }
    outcome(
        failures.is_empty(),
        format!(
            "{exhaustive} exhaustive + 50 random formulas, {sat_count} satisfiable, {skipped} skipped over the limit, largest graph {largest} vertices, {} mismatches{}",
            failures.len(),
            first(&failures)
        ),
    )
}

// ---------------------------------------------------------------------------
// 7. Gadget properties
// ---------------------------------------------------------------------------

fn gadget_census_holds() -> Result<(), String> {
    for x in [TRUE, FALSE] {
        let other = TRUE + FALSE - x;
        for code in 0..8u32 {
            let lits = [0, 1, 2].map(|i| if code >> i & 1 == 1 { TRUE } else { FALSE });
            let mut found = Vec::new();
            for a in 0..243usize {
                let mut col = [0; 9];
                let mut rest = a;
                for slot in col[..5].iter_mut() {
                    *slot = rest % 3;
                    rest /= 3;
                }
                col[5..8].copy_from_slice(&lits);
                col[8] = x;
                if GADGET_EDGES.iter().all(|&(u, v)| col[u] != col[v]) {
                    found.push([col[0], col[1], col[2], col[3], col[4]]);
                }
            }
            if found.len() != gadget_extensions(lits, x).len() {
                return Err(format!("extension count differs for {lits:?}, X={x}"));
            }
            if lits.contains(&x) == found.is_empty() {
                return Err(format!("feasibility wrong for {lits:?}, X={x}"));
            }
            for a in &found {
                let count = |c: usize| a.iter().filter(|&&y| y == c).count();
                if (count(x), count(other), count(RED)) != (1, 2, 2) {
                    return Err(format!("census {a:?} for {lits:?}, X={x}"));
                }
            }
        }
    }
    Ok(())
}

fn h_rigid(p: usize, ell: usize, k: usize) -> Result<usize, String> {
    let h = build_h(p, ell, k).map_err(|e| e.to_string())?;
    let mut bad = None;
    let mut count = 0;
    let chi = for_each_optimal_partition(&h.graph, &Limits::with_max_vertices(64), |part| {
        count += 1;
        let class_of = |v: usize| part.iter().position(|c| c.contains(&v)).unwrap();
        let s_class = class_of(h.s[0]);
        let mono = h.s.iter().all(|&x| class_of(x) == s_class);
        let once = h.cliques.iter().all(|clique| {
            let mut cs: Vec<usize> = clique.iter().map(|&v| class_of(v)).collect();
            cs.sort_unstable();
            cs == (0..k).filter(|&c| c != s_class).collect::<Vec<_>>()
        });
        if mono && once {
            ControlFlow::Continue(())
        } else {
            bad = Some(part.clone());
            ControlFlow::Break(())
        }
    })
    .map_err(|e| e.to_string())?;
    match bad {
        Some(part) => Err(format!("H({p},{ell}) k={k}: non-rigid coloring {part:?}")),
        None if chi != k => Err(format!("H({p},{ell}) k={k}: chromatic number {chi}")),
        None => Ok(count),
    }
}

fn criterion_7() -> Outcome {
    let mut notes = Vec::new();
    let mut pass = true;
    match gadget_census_holds() {
        Ok(()) => notes.push("clause gadget census and infeasible case hold".to_string()),
        Err(e) => {
            pass = false;
            notes.push(e);
        }
    }
    for (p, ell, k) in [(4, 2, 3), (4, 3, 4)] {
        match h_rigid(p, ell, k) {
            Ok(count) => notes.push(format!("H({p},{ell}) k={k} rigid over {count} optimal colorings")),
            Err(e) => {
                pass = false;
                notes.push(e);
            }
        }
    }
    outcome(pass, notes.join(", "))
}

// ---------------------------------------------------------------------------
// 8. Polynomial deciders against the exhaustive oracle
// ---------------------------------------------------------------------------

fn bounded_instance(r: &mut StdRng) -> (Graph, usize) {
    let k = r.random_range(2..=5);
    let mut g = Graph::complete(k);
    while g.n() + k <= 12 && r.random_bool(0.5) {
        g = g.disjoint_union(&Graph::complete(k));
    }
    if k >= 3 && g.n() + k - 1 <= 12 && r.random_bool(0.3) {
        g = g.disjoint_union(&Graph::path(k - 1));
    }
    if k == 3 && g.n() + 5 <= 12 && r.random_bool(0.3) {
        g = g.disjoint_union(&Graph::cycle(5));
    }
    (g, k)
}

fn criterion_8() -> Outcome {
    let limits = Limits::default();
    let mut r = rng(0xC8);
    let mut lines = Vec::new();
    let mut pass = true;
    type Case = Box<dyn Fn(&mut StdRng) -> Result<(Graph, bool), String>>;
    let cases: Vec<(&str, Case)> = vec![
        (
            "split",
            Box::new(|r: &mut StdRng| {
                let (c, i) = (r.random_range(1..=6), r.random_range(0..=6));
                let g = random_split(r, c, i);
                decide_split(&g).map(|v| (g, v)).map_err(|e| e.to_string())
            }),
        ),
        (
            "co-chordal",
            Box::new(|r: &mut StdRng| {
                let n = r.random_range(1..=12);
                let g = random_chordal_graph(r, n).complement();
                decide_cochordal(&g).map(|v| (g, v)).map_err(|e| e.to_string())
            }),
        ),
        (
            "co-comparability",
            Box::new(|r: &mut StdRng| {
                let n = r.random_range(1..=12);
                let span = r.random_range(4..=24);
                let (g, order) = random_interval(r, n, span);
                let k = chromatic_number(&g, &Limits::default()).unwrap();
                decide_cocomp(&g, &order, k)
                    .map(|v| (g, v))
                    .map_err(|e| e.to_string())
            }),
        ),
        (
            "bounded degree",
            Box::new(|r: &mut StdRng| {
                let (g, k) = bounded_instance(r);
                decide_bounded_degree(&g, k)
                    .map(|v| (g, v))
                    .map_err(|e| e.to_string())
            }),
        ),
    ];
    for (name, case) in &cases {
        let (mut agree, mut yes, mut errors) = (0, 0, Vec::new());
        for _ in 0..250 {
            match case(&mut r) {
                Ok((g, verdict)) => {
                    let truth = all_odd_all_optimal(&g, &limits).unwrap();
                    if truth == verdict {
                        agree += 1;
                    } else {
                        errors.push(format!("{:?}", g.edges()));
                    }
                    yes += usize::from(verdict);
                }
                Err(e) => errors.push(e),
            }
        }
        pass &= errors.is_empty();
        lines.push(format!("{name} {agree}/250 ({yes} yes)"));
        if let Some(e) = errors.first() {
            lines.push(format!("{name} first disagreement {e}"));
        }
    }
    outcome(pass, lines.join(", "))
}

/// Chordal graph: each new vertex joins a clique of the graph so far.
fn random_chordal_graph(r: &mut StdRng, n: usize) -> Graph {
    let mut adj = vec![vec![false; n]; n];
    let mut edges = Vec::new();
    for v in 1..n {
        if !r.random_bool(0.85) {
            continue;
        }
        let u = r.random_range(0..v);
        let mut clique = vec![u];
        for w in 0..v {
            if w != u && r.random_bool(0.6) && clique.iter().all(|&c| adj[c][w]) {
                clique.push(w);
            }
        }
        for &c in &clique {
            adj[c][v] = true;
            adj[v][c] = true;
            edges.push((c, v));
        }
    }
    Graph::new(n, edges).unwrap()
}

// ---------------------------------------------------------------------------
// 9. Linear scaling of construct
// ---------------------------------------------------------------------------

/// Sparse random nice graph with about `size` vertices plus edges (average
/// degree 4) and a greedy coloring.
fn sparse_instance(size: usize, seed: u64) -> (Graph, VertexColoring) {
    let mut r = rng(seed);
    let n = size / 3;
    let m = size - n;
    let mut seen = HashSet::with_capacity(m);
    let mut edges = Vec::with_capacity(m);
    while edges.len() < m {
        let u = r.random_range(0..n);
        let v = r.random_range(0..n);
        if u != v && seen.insert((u.min(v), u.max(v))) {
            edges.push((u, v));
        }
    }
    let g = make_nice(&Graph::new(n, edges).unwrap());
    let mut colors = vec![usize::MAX; n];
    let mut k = 1;
    for v in 0..n {
        let used: HashSet<usize> = g.neighbors(v).map(|w| colors[w]).collect();
        let c = (0..).find(|c| !used.contains(c)).unwrap();
        colors[v] = c;
        k = k.max(c + 1);
    }
    (g, VertexColoring::new(k, colors).unwrap())
}

fn best_of(runs: usize, g: &Graph, f: &VertexColoring) -> Result<Duration, String> {
    let mut best = Duration::MAX;
    for _ in 0..runs {
        let start = Instant::now();
        let (s, _) = construct(g, f).map_err(|e| e.to_string())?;
        best = best.min(start.elapsed());
        if !verify_twin(g, &s).map_err(|e| e.to_string())?.is_valid() {
            return Err("construct output does not verify".into());
        }
    }
    Ok(best)
}

fn criterion_9() -> Outcome {
    let (g_small, f_small) = sparse_instance(100_000, 0xC9);
    let (g_large, f_large) = sparse_instance(1_000_000, 0xC9 + 1);
    let small = best_of(5, &g_small, &f_small);
    let large = best_of(3, &g_large, &f_large);
    match (small, large) {
        (Ok(small), Ok(large)) => {
            let ratio = large.as_secs_f64() / small.as_secs_f64().max(1e-9);
            outcome(
                ratio <= 15.0 && large <= Duration::from_secs(10),
                format!(
                    "|V|+|E|=1e5: {:.1} ms, 1e6: {:.1} ms, ratio {ratio:.2} (limit 15), 1e6 limit 10 s",
                    small.as_secs_f64() * 1e3,
                    large.as_secs_f64() * 1e3
                ),
            )
        }
        (a, b) => outcome(false, format!("{a:?} {b:?}")),
    }
}

// ---------------------------------------------------------------------------

fn main() -> ExitCode {
    let selected: Vec<usize> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    // Timing criteria depend on the host's cache sizes, so they are reported
    // but do not fail the run; `--strict` makes them count.
    let strict = std::env::args().any(|a| a == "--strict");
    let criteria: [(&str, fn() -> Outcome, bool); 9] = [
        ("oracle dichotomy", criterion_1, false),
        ("constructor soundness", criterion_2, false),
        ("named fixtures", criterion_3, false),
        ("exact induction", criterion_4, false),
        ("monotonicity", criterion_5, false),
        ("reduction correctness", criterion_6, false),
        ("gadget properties", criterion_7, false),
        ("polynomial deciders", criterion_8, false),
        ("linear-time construction", criterion_9, true),
    ];
    let mut failed = Vec::new();
    let mut blocking = 0;
    for (i, (name, run, timing)) in criteria.iter().enumerate() {
        let number = i + 1;
        if !selected.is_empty() && !selected.contains(&number) {
            continue;
        }
        let start = Instant::now();
        let o = run();
        let verdict = if o.pass { "PASS" } else { "FAIL" };
        if !o.pass {
            failed.push(number);
            blocking += usize::from(strict || !timing);
        }
        println!(
            "criterion {number} [{verdict}] {name}: {} ({:.1}s)",
            o.detail,
            start.elapsed().as_secs_f64()
        );
    }
    if failed.is_empty() {
        println!("all selected acceptance criteria passed");
    } else {
        println!("failing criteria: {failed:?}");
    }
    if blocking == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
