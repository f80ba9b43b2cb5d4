#![allow(dead_code)]

use flis::graph::{random_gnp, random_tree, Family, Graph};

/// Named families (all orders up to 10), seeded random graphs and random
/// trees. Every graph has at most 12 vertices.
pub fn corpus() -> Vec<(String, Graph)> {
    let mut out = Vec::new();
    let mut push = |name: String, fam: Family| out.push((name, fam.generate().unwrap()));
    for n in 1..=8 {
        push(format!("K{n}"), Family::Complete(n));
    }
    for n in 3..=10 {
        push(format!("C{n}"), Family::Cycle(n));
    }
    for n in 3..=9 {
        push(format!("W{n}"), Family::Wheel(n));
    }
    for p in 1..=5 {
        for q in p..=(10 - p) {
            push(format!("K{p},{q}"), Family::CompleteBipartite(p, q));
        }
    }
    for d in 1..=3 {
        push(format!("Q{d}"), Family::Hypercube(d));
    }
    for n in 1..=10 {
        push(format!("P{n}"), Family::Path(n));
    }
    for q in 1..=9 {
        push(format!("S{q}"), Family::Star(q));
    }
    for (i, density) in [0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9]
        .into_iter()
        .enumerate()
    {
        for seed in 0..6u64 {
            let n = 6 + (seed as usize + i) % 7;
            out.push((
                format!("gnp({n},{density},{seed})"),
                random_gnp(n, density, 100 + seed),
            ));
        }
    }
    for seed in 0..20u64 {
        let n = 3 + (seed as usize % 10);
        out.push((format!("tree({n},{seed})"), random_tree(n, seed)));
    }
    out.push(("empty3".into(), Graph::empty(3)));
    out.push((
        "two-triangles".into(),
        Graph::from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap(),
    ));
    out
}

/// Prints and returns the verdict line for one acceptance criterion.
pub fn report(id: &str, title: &str, outcome: Result<String, String>) {
    match &outcome {
        Ok(detail) => println!("[PASS] {id} {title}: {detail}"),
        Err(why) => println!("[FAIL] {id} {title}: {why}"),
    }
    if let Err(why) = outcome {
        panic!("{id} failed: {why}");
    }
}
