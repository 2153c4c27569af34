//! Classical routes to the chromatic polynomial that never touch the bond
//! lattice. They serve as ground truth for the lattice-based routes.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::limits::Limits;
use crate::poly::{Polynomial, RationalPoly};

/// Deletion-contraction, `P(G) = P(G - e) - P(G / e)`, always pivoting on the
/// lexicographically smallest edge and memoising on the compacted adjacency.
pub fn deletion_contraction(g: &Graph, limits: &Limits) -> Result<Polynomial> {
    Limits::check("vertices", g.order() as u128, limits.max_vertices as u128)?;
    let adj: Vec<u32> = (0..g.order()).map(|v| g.neighbors(v).bits()).collect();
    let mut memo = HashMap::new();
    Ok(dc(adj, &mut memo))
}

fn dc(adj: Vec<u32>, memo: &mut HashMap<Vec<u32>, Polynomial>) -> Polynomial {
    // The smallest vertex with any neighbour only has larger neighbours.
    let Some(u) = adj.iter().position(|&m| m != 0) else {
        return Polynomial::monomial(adj.len());
    };
    if let Some(p) = memo.get(&adj) {
        return p.clone();
    }
    let v = adj[u].trailing_zeros() as usize;

    let mut deleted = adj.clone();
    deleted[u] &= !(1 << v);
    deleted[v] &= !(1 << u);

    let mut merged = adj.clone();
    merged[u] = (adj[u] | adj[v]) & !(1 << u) & !(1 << v);
    for (w, m) in merged.iter_mut().enumerate() {
        if w != u && *m >> v & 1 == 1 {
            *m = (*m & !(1 << v)) | 1 << u;
        }
    }
    merged.remove(v);
    let contracted: Vec<u32> = merged.into_iter().map(|m| drop_bit(m, v)).collect();

    let result = &dc(deleted, memo) - &dc(contracted, memo);
    memo.insert(adj, result.clone());
    result
}

/// Removes bit `v` from `mask`, shifting higher bits down by one.
fn drop_bit(mask: u32, v: usize) -> u32 {
    let low = mask & ((1u32 << v) - 1);
    let high = if v + 1 >= 32 { 0 } else { (mask >> (v + 1)) << v };
    low | high
}

/// Number of proper colourings of `g` with `q` colours, by trying every
/// colour assignment vertex by vertex.
pub fn coloring_count(g: &Graph, q: u64, limits: &Limits) -> Result<u64> {
    Limits::check("colours", q as u128, limits.max_colors as u128)?;
    Limits::check("vertices for colouring", g.order() as u128, limits.max_coloring_vertices as u128)?;
    let mut colours = vec![0u64; g.order()];
    Ok(count_colourings(g, q, 0, &mut colours))
}

fn count_colourings(g: &Graph, q: u64, v: usize, colours: &mut [u64]) -> u64 {
    if v == g.order() {
        return 1;
    }
    let mut total = 0;
    for c in 0..q {
        if g.neighbors(v).iter().filter(|&w| w < v).all(|w| colours[w] != c) {
            colours[v] = c;
            total += count_colourings(g, q, v + 1, colours);
        }
    }
    total
}

/// Lagrange interpolation of the colouring counts at `q = 0, 1, ..., l`.
pub fn interpolated(g: &Graph, limits: &Limits) -> Result<Polynomial> {
    let l = g.order();
    let points: Vec<(i64, BigInt)> = (0..=l as u64)
        .map(|q| Ok((q as i64, BigInt::from(coloring_count(g, q, limits)?))))
        .collect::<Result<_>>()?;
    let poly = lagrange(&points);
    poly.to_integer()
        .ok_or_else(|| Error::Invariant(format!("interpolated chromatic polynomial has a fractional coefficient: {poly:?}")))
}

/// The unique polynomial of degree `< points.len()` through `points`.
pub fn lagrange(points: &[(i64, BigInt)]) -> RationalPoly {
    let mut out = RationalPoly::zero();
    for (i, (xi, yi)) in points.iter().enumerate() {
        let mut basis = RationalPoly::constant(BigRational::from_integer(yi.clone()));
        for (j, (xj, _)) in points.iter().enumerate() {
            if i == j {
                continue;
            }
            let factor = RationalPoly::new(vec![
                BigRational::new((-xj).into(), (xi - xj).into()),
                BigRational::new(1.into(), (xi - xj).into()),
            ]);
            basis = &basis * &factor;
        }
        out = &out + &basis;
    }
    out
}

/// `c_k(G)`: the number of ordered partitions of the vertex set into `k`
/// independent sets, indexed by `k` (entry 0 is always zero).
pub fn ordered_independent_partition_counts(g: &Graph, limits: &Limits) -> Result<Vec<BigInt>> {
    Limits::check("vertices for independent partitions", g.order() as u128, limits.max_coloring_vertices as u128)?;
    let mut unordered = vec![0u64; g.order() + 1];
    let mut blocks: Vec<u32> = Vec::new();
    independent_partitions(g, 0, &mut blocks, &mut unordered);
    let mut fact = BigInt::one();
    let mut out = vec![BigInt::zero(); g.order() + 1];
    for (k, &count) in unordered.iter().enumerate().skip(1) {
        fact *= k;
        out[k] = BigInt::from(count) * &fact;
    }
    Ok(out)
}

fn independent_partitions(g: &Graph, v: usize, blocks: &mut Vec<u32>, counts: &mut [u64]) {
    if v == g.order() {
        counts[blocks.len()] += 1;
        return;
    }
    let nbrs = g.neighbors(v).bits();
    for i in 0..blocks.len() {
        if blocks[i] & nbrs == 0 {
            blocks[i] |= 1 << v;
            independent_partitions(g, v + 1, blocks, counts);
            blocks[i] &= !(1 << v);
        }
    }
    blocks.push(1 << v);
    independent_partitions(g, v + 1, blocks, counts);
    blocks.pop();
}

/// `Σ_k c_k(G) C(q, k)`.
pub fn independent_partitions_polynomial(g: &Graph, limits: &Limits) -> Result<Polynomial> {
    let counts = ordered_independent_partition_counts(g, limits)?;
    let mut total = RationalPoly::zero();
    for (k, c) in counts.iter().enumerate() {
        if !c.is_zero() {
            total = &total + &RationalPoly::binomial(k).scale(&BigRational::from_integer(c.clone()));
        }
    }
    total
        .to_integer()
        .ok_or_else(|| Error::Invariant("independent-partition expansion has a fractional coefficient".into()))
}

/// Number of orientations of `g` without a directed cycle, by checking all
/// `2^|E|` orientations.
pub fn acyclic_orientation_count(g: &Graph, limits: &Limits) -> Result<u64> {
    let edges = g.edges();
    Limits::check("edges for orientation enumeration", edges.len() as u128, limits.max_orientation_edges as u128)?;
    let n = g.order();
    let mut count = 0;
    let mut out = vec![0u32; n];
    for mask in 0u64..1 << edges.len() {
        out.iter_mut().for_each(|m| *m = 0);
        for (i, &(u, v)) in edges.iter().enumerate() {
            if mask >> i & 1 == 1 {
                out[u] |= 1 << v;
            } else {
                out[v] |= 1 << u;
            }
        }
        if is_acyclic(&out) {
            count += 1;
        }
    }
    Ok(count)
}

/// Kahn's algorithm on a digraph given by out-neighbour bitmasks.
fn is_acyclic(out: &[u32]) -> bool {
    let n = out.len();
    let mut indeg = vec![0u32; n];
    for m in out {
        for (w, d) in indeg.iter_mut().enumerate() {
            *d += m >> w & 1;
        }
    }
    let mut ready: Vec<usize> = (0..n).filter(|&v| indeg[v] == 0).collect();
    let mut removed = 0;
    while let Some(v) = ready.pop() {
        removed += 1;
        for w in 0..n {
            if out[v] >> w & 1 == 1 {
                indeg[w] -= 1;
                if indeg[w] == 0 {
                    ready.push(w);
                }
            }
        }
    }
    removed == n
}
