//! Test-side oracles, written without the crate's algorithms.
#![allow(dead_code)]

use nalgebra::DMatrix;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use robustnet::Graph;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Uniform random spanning tree shape plus extra random edges; always connected.
pub fn random_connected(n: usize, m: usize, rng: &mut ChaCha8Rng) -> Graph {
    assert!(n >= 1 && m + 1 >= n && m <= n * (n - 1) / 2);
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let mut edges = std::collections::BTreeSet::new();
    for i in 1..n {
        let j = rng.gen_range(0..i);
        let (a, b) = (order[i], order[j]);
        edges.insert((a.min(b), a.max(b)));
    }
    while edges.len() < m {
        let a = rng.gen_range(0..n);
        let b = rng.gen_range(0..n);
        if a != b {
            edges.insert((a.min(b), a.max(b)));
        }
    }
    Graph::from_edges(n, edges).unwrap()
}

/// Any simple graph on n nodes, each pair present with probability p.
pub fn random_graph(n: usize, p: f64, rng: &mut ChaCha8Rng) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges).unwrap()
}

/// Minimum number of edges crossing any cut separating s from t, by
/// enumerating every node subset containing s but not t. n <= 12.
pub fn min_cut_bruteforce(g: &Graph, s: usize, t: usize) -> usize {
    let n = g.n();
    assert!(n <= 12);
    let mut best = usize::MAX;
    for mask in 0u32..(1 << n) {
        if mask >> s & 1 == 0 || mask >> t & 1 == 1 {
            continue;
        }
        let crossing = g
            .edges()
            .iter()
            .filter(|&&(u, v)| (mask >> u & 1) != (mask >> v & 1))
            .count();
        best = best.min(crossing);
    }
    best
}

/// Spanning trees counted by checking every (n-1)-edge subset for acyclicity.
pub fn spanning_trees_bruteforce(g: &Graph) -> u64 {
    let n = g.n();
    let edges = g.edges();
    if n <= 1 {
        return 1;
    }
    let k = n - 1;
    let mut count = 0;
    let mut pick: Vec<usize> = (0..k).collect();
    if edges.len() < k {
        return 0;
    }
    loop {
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut x = x;
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        let mut acyclic = true;
        for &e in &pick {
            let (a, b) = edges[e];
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            if ra == rb {
                acyclic = false;
                break;
            }
            parent[ra] = rb;
        }
        if acyclic {
            count += 1;
        }
        // next k-combination of 0..edges.len()
        let mut i = k;
        loop {
            if i == 0 {
                return count;
            }
            i -= 1;
            if pick[i] < edges.len() - k + i {
                pick[i] += 1;
                for j in i + 1..k {
                    pick[j] = pick[j - 1] + 1;
                }
                break;
            }
        }
    }
}

/// Sum of pairwise effective resistances from the Laplacian pseudoinverse
/// `(L + J/n)^-1 - J/n`, solved by LU.
pub fn egr_pseudoinverse(g: &Graph) -> f64 {
    let n = g.n();
    let nf = n as f64;
    let mut l = DMatrix::<f64>::zeros(n, n);
    for &(u, v) in g.edges() {
        l[(u, v)] -= 1.0;
        l[(v, u)] -= 1.0;
        l[(u, u)] += 1.0;
        l[(v, v)] += 1.0;
    }
    let shifted = l.add_scalar(1.0 / nf);
    let inv = shifted.lu().try_inverse().expect("connected graph");
    let pinv = inv.add_scalar(-1.0 / nf);
    let mut total = 0.0;
    for i in 0..n {
        for j in i + 1..n {
            total += pinv[(i, i)] + pinv[(j, j)] - 2.0 * pinv[(i, j)];
        }
    }
    total
}

/// Pearson correlation, textbook two-pass form.
pub fn pearson(x: &[f64], y: &[f64]) -> f64 {
    let n = x.len() as f64;
    let mx = x.iter().sum::<f64>() / n;
    let my = y.iter().sum::<f64>() / n;
    let mut sxy = 0.0;
    let mut sxx = 0.0;
    let mut syy = 0.0;
    for (a, b) in x.iter().zip(y) {
        sxy += (a - mx) * (b - my);
        sxx += (a - mx) * (a - mx);
        syy += (b - my) * (b - my);
    }
    sxy / (sxx * syy).sqrt()
}
