#![allow(dead_code)]

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use segforge::graph::{is_biconnected, Graph};

/// Random biconnected simple cubic graph on `n` vertices (configuration
/// model with rejection).
pub fn random_bicubic(n: usize, seed: u64) -> Graph {
    assert!(n >= 4 && n % 2 == 0);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        let mut stubs: Vec<usize> = (0..3 * n).map(|i| i / 3).collect();
        stubs.shuffle(&mut rng);
        let edges: Vec<(usize, usize)> = stubs.chunks(2).map(|c| (c[0], c[1])).collect();
        if let Ok(g) = Graph::new(n, edges) {
            if is_biconnected(&g) {
                return g;
            }
        }
    }
}

pub fn k4() -> Graph {
    Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
}

pub fn k33() -> Graph {
    let mut e = Vec::new();
    for a in 0..3 {
        for b in 3..6 {
            e.push((a, b));
        }
    }
    Graph::from_edges(6, &e)
}

pub fn prism() -> Graph {
    Graph::from_edges(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3), (1, 4), (2, 5)])
}

pub fn cube() -> Graph {
    let mut e = Vec::new();
    for v in 0..8usize {
        for b in 0..3 {
            let w = v ^ (1 << b);
            if v < w {
                e.push((v, w));
            }
        }
    }
    Graph::from_edges(8, &e)
}

pub fn petersen() -> Graph {
    let mut e = Vec::new();
    for i in 0..5 {
        e.push((i, (i + 1) % 5));
        e.push((i, i + 5));
        e.push((i + 5, (i + 2) % 5 + 5));
    }
    Graph::from_edges(10, &e)
}

/// Generalized Petersen graph GP(8, 3).
pub fn moebius_kantor() -> Graph {
    let mut e = Vec::new();
    for i in 0..8 {
        e.push((i, (i + 1) % 8));
        e.push((i, i + 8));
        e.push((i + 8, (i + 3) % 8 + 8));
    }
    Graph::from_edges(16, &e)
}

/// The named part of the corpus.
pub fn named_corpus() -> Vec<(&'static str, Graph)> {
    vec![
        ("K4", k4()),
        ("K3,3", k33()),
        ("prism", prism()),
        ("Q3", cube()),
        ("Petersen", petersen()),
        ("Moebius-Kantor", moebius_kantor()),
    ]
}
