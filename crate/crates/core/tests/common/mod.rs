//! Independent oracles shared by the integration suites. Nothing here calls
//! the canonical labelling, the generator or the closed-form counters.
#![allow(dead_code)]

use std::collections::BTreeMap;

use itertools::Itertools;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use turan_core::Graph;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Erdős–Rényi graph with edge probability `p`.
pub fn random_graph(n: usize, p: f64, rng: &mut ChaCha8Rng) -> Graph {
    let mut g = Graph::empty(n).unwrap();
    for v in 1..n {
        for u in 0..v {
            if rng.gen_bool(p) {
                g.add_edge(u, v);
            }
        }
    }
    g
}

pub fn random_permutation(n: usize, rng: &mut ChaCha8Rng) -> Vec<usize> {
    let mut perm: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        perm.swap(i, rng.gen_range(0..=i));
    }
    perm
}

/// Pairs `u < v` in graph6 column order.
fn pairs(n: usize) -> Vec<(usize, usize)> {
    (1..n).flat_map(|v| (0..v).map(move |u| (u, v))).collect()
}

fn pair_index(n: usize) -> Vec<Vec<usize>> {
    let mut idx = vec![vec![usize::MAX; n]; n];
    for (i, (u, v)) in pairs(n).into_iter().enumerate() {
        idx[u][v] = i;
        idx[v][u] = i;
    }
    idx
}

/// Isomorphism classes of order-`n` graphs per size, by walking all
/// `2^C(n,2)` labelled graphs and marking each new graph's full orbit under
/// the symmetric group.
pub fn labelled_dedup_counts(n: usize) -> BTreeMap<usize, u64> {
    let ps = pairs(n);
    let idx = pair_index(n);
    let maps: Vec<Vec<usize>> = (0..n)
        .permutations(n)
        .map(|perm| ps.iter().map(|&(u, v)| idx[perm[u]][perm[v]]).collect())
        .collect();
    let total = 1usize << ps.len();
    let mut seen = vec![false; total];
    let mut counts = BTreeMap::new();
    for mask in 0..total {
        if seen[mask] {
            continue;
        }
        *counts.entry(mask.count_ones() as usize).or_insert(0) += 1;
        for map in &maps {
            let mut image = 0usize;
            let mut m = mask;
            while m != 0 {
                let b = m.trailing_zeros() as usize;
                image |= 1 << map[b];
                m &= m - 1;
            }
            seen[image] = true;
        }
    }
    counts
}

/// Isomorphism classes per size by Pólya counting: the average over all
/// vertex permutations of `prod (1 + x^len)` over the cycles the permutation
/// induces on vertex pairs.
pub fn polya_counts(n: usize) -> Vec<u64> {
    let ps = pairs(n);
    let idx = pair_index(n);
    let m = ps.len();
    let mut sum = vec![0u128; m + 1];
    let mut perms = 0u128;
    for perm in (0..n).permutations(n) {
        perms += 1;
        let mut visited = vec![false; m];
        let mut poly = vec![0u128; m + 1];
        poly[0] = 1;
        for start in 0..m {
            if visited[start] {
                continue;
            }
            let mut len = 0;
            let mut i = start;
            while !visited[i] {
                visited[i] = true;
                len += 1;
                let (u, v) = ps[i];
                i = idx[perm[u]][perm[v]];
            }
            for d in (len..=m).rev() {
                poly[d] += poly[d - len];
            }
        }
        for d in 0..=m {
            sum[d] += poly[d];
        }
    }
    sum.into_iter()
        .map(|s| {
            assert_eq!(s % perms, 0);
            (s / perms) as u64
        })
        .collect()
}

pub fn permute(g: &Graph, perm: &[usize]) -> Graph {
    let edges: Vec<_> = g
        .edges()
        .into_iter()
        .map(|(u, v)| (perm[u], perm[v]))
        .collect();
    Graph::from_edges(g.order(), &edges).unwrap()
}

/// Isomorphism by trying every vertex bijection.
pub fn brute_isomorphic(g: &Graph, h: &Graph) -> bool {
    if g.order() != h.order() || g.size() != h.size() {
        return false;
    }
    let n = g.order();
    (0..n).permutations(n).any(|perm| {
        g.edges()
            .into_iter()
            .all(|(u, v)| h.has_edge(perm[u], perm[v]))
    })
}

pub fn brute_automorphisms(g: &Graph) -> u64 {
    let n = g.order();
    (0..n)
        .permutations(n)
        .filter(|perm| {
            g.edges()
                .into_iter()
                .all(|(u, v)| g.has_edge(perm[u], perm[v]))
        })
        .count() as u64
}

/// Subgraphs of `g` isomorphic to `h`: every vertex subset of the right size,
/// every edge subset of the right size inside it, checked by brute force.
pub fn brute_copies(g: &Graph, h: &Graph) -> u64 {
    let mut total = 0;
    for verts in (0..g.order()).combinations(h.order()) {
        let inside: Vec<(usize, usize)> = verts
            .iter()
            .tuple_combinations()
            .filter(|(&a, &b)| g.has_edge(a, b))
            .map(|(&a, &b)| (a, b))
            .collect();
        for chosen in inside.iter().combinations(h.size()) {
            let local: Vec<(usize, usize)> = chosen
                .iter()
                .map(|&&(a, b)| {
                    let pa = verts.iter().position(|&x| x == a).unwrap();
                    let pb = verts.iter().position(|&x| x == b).unwrap();
                    (pa, pb)
                })
                .collect();
            let sub = Graph::from_edges(h.order(), &local).unwrap();
            if !sub.has_isolated_vertex() && brute_isomorphic(&sub, h) {
                total += 1;
            }
        }
    }
    total
}

/// Plain graph6 writer for orders below 63, written from the format
/// description: `N(n)` then the upper triangle column by column, six bits per
/// byte, zero padded, each byte offset by 63.
pub fn graph6_reference(g: &Graph) -> String {
    let n = g.order();
    assert!(n < 63);
    let mut out = vec![(n + 63) as u8];
    let bits: Vec<bool> = pairs(n)
        .into_iter()
        .map(|(u, v)| g.has_edge(u, v))
        .collect();
    for chunk in bits.chunks(6) {
        let mut byte = 0u8;
        for (i, &b) in chunk.iter().enumerate() {
            if b {
                byte |= 1 << (5 - i);
            }
        }
        out.push(byte + 63);
    }
    String::from_utf8(out).unwrap()
}

/// Hamiltonian cycle through vertex 0, by depth-first search.
pub fn hamiltonian_cycle(g: &Graph) -> Option<Vec<usize>> {
    fn extend(g: &Graph, path: &mut Vec<usize>, used: &mut Vec<bool>) -> bool {
        let n = g.order();
        let last = *path.last().unwrap();
        if path.len() == n {
            return g.has_edge(last, path[0]);
        }
        for w in 0..n {
            if !used[w] && g.has_edge(last, w) {
                used[w] = true;
                path.push(w);
                if extend(g, path, used) {
                    return true;
                }
                path.pop();
                used[w] = false;
            }
        }
        false
    }
    let n = g.order();
    if n < 3 {
        return None;
    }
    let mut path = vec![0];
    let mut used = vec![false; n];
    used[0] = true;
    extend(g, &mut path, &mut used).then_some(path)
}
