#![allow(dead_code)]

use chromakac::{generate_graph, Family, Graph};

pub const RANDOM_PROBABILITIES: [f64; 3] = [0.3, 0.5, 0.8];

pub struct CorpusGraph {
    pub name: String,
    /// `--gen` argument that regenerates the graph, if it is a single family
    /// member.
    pub gen: Option<String>,
    pub graph: Graph,
}

fn family(f: Family, n: usize) -> CorpusGraph {
    CorpusGraph {
        name: format!("{f}:{n}"),
        gen: Some(format!("{f}:{n}")),
        graph: generate_graph(f, n, None, None).unwrap(),
    }
}

/// The 20 seeded random graphs: sizes cycle through 5, 6, 7 and edge
/// probabilities through 0.3, 0.5, 0.8.
pub fn random_specs() -> Vec<(usize, f64, u64)> {
    (0..20u64)
        .map(|i| (5 + (i % 3) as usize, RANDOM_PROBABILITIES[(i / 3 % 3) as usize], 1000 + i))
        .collect()
}

pub fn k2_plus_k3() -> Graph {
    let k2 = generate_graph(Family::Complete, 2, None, None).unwrap();
    let k3 = generate_graph(Family::Complete, 3, None, None).unwrap();
    k2.disjoint_union(&k3).unwrap()
}

pub fn corpus() -> Vec<CorpusGraph> {
    let mut out = Vec::new();
    out.extend((1..=7).map(|n| family(Family::Path, n)));
    out.extend((3..=7).map(|n| family(Family::Cycle, n)));
    out.extend((2..=6).map(|n| family(Family::Complete, n)));
    out.extend((2..=6).map(|n| family(Family::Star, n)));
    for (n, p, seed) in random_specs() {
        let spec = format!("random:{n}:p={p}:seed={seed}");
        out.push(CorpusGraph {
            name: spec.clone(),
            graph: generate_graph(Family::Random, n, Some(seed), Some(p)).unwrap(),
            gen: Some(spec),
        });
    }
    out.push(CorpusGraph { name: "K2+K3".into(), gen: None, graph: k2_plus_k3() });
    out
}
