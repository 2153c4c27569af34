//! The bond lattice of a graph: partitions of the vertex set into connected
//! blocks, ordered by refinement.
//!
//! Elements are stored once in a fixed linear extension: fewest blocks first,
//! ties broken lexicographically on the blocks written as sorted vertex
//! lists. The top element (for a connected graph) is therefore index 0 and
//! the all-singletons partition is always the last index. Every cover
//! `π → π'` (π' refines π by splitting one block in two) points from a lower
//! index to a higher one.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::graph::{for_each_connected_superset, Graph, VertexSet};
use crate::limits::Limits;

/// A partition of the vertex set into connected blocks, kept sorted by each
/// block's minimum vertex so that equality is structural.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ConnectedPartition {
    blocks: Vec<VertexSet>,
}

impl ConnectedPartition {
    /// Validates and canonicalises `blocks` against `g`.
    pub fn new(g: &Graph, mut blocks: Vec<VertexSet>) -> Result<Self> {
        let mut seen = VertexSet::EMPTY;
        for &b in &blocks {
            if b.is_empty() {
                return Err(Error::InvalidParameter("partition has an empty block".into()));
            }
            if !b.is_disjoint(seen) {
                return Err(Error::InvalidParameter(format!("block {b:?} overlaps another block")));
            }
            if !b.is_subset(g.vertices()) {
                return Err(Error::InvalidParameter(format!("block {b:?} leaves the vertex range")));
            }
            if !g.is_connected(b) {
                return Err(Error::InvalidParameter(format!("block {b:?} is not connected")));
            }
            seen = seen.union(b);
        }
        if seen != g.vertices() {
            return Err(Error::InvalidParameter("blocks do not cover every vertex".into()));
        }
        blocks.sort_by_key(|b| b.min_vertex());
        Ok(ConnectedPartition { blocks })
    }

    pub fn from_vertex_lists(g: &Graph, lists: &[&[usize]]) -> Result<Self> {
        if lists.iter().flat_map(|l| l.iter()).any(|&v| v >= g.order()) {
            return Err(Error::InvalidParameter("vertex outside the graph".into()));
        }
        ConnectedPartition::new(g, lists.iter().map(|l| VertexSet::from_vertices(l.iter().copied())).collect())
    }

    pub(crate) fn from_sorted_blocks(blocks: Vec<VertexSet>) -> Self {
        debug_assert!(blocks.windows(2).all(|w| w[0].min_vertex() < w[1].min_vertex()));
        ConnectedPartition { blocks }
    }

    /// The partition into singletons.
    pub fn bottom(l: usize) -> Self {
        ConnectedPartition { blocks: (0..l).map(VertexSet::singleton).collect() }
    }

    pub fn blocks(&self) -> &[VertexSet] {
        &self.blocks
    }

    /// Number of blocks.
    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    /// Number of blocks with more than one vertex; zero exactly for the
    /// bottom element.
    pub fn nonsingleton_count(&self) -> usize {
        self.blocks.iter().filter(|b| b.len() > 1).count()
    }

    pub fn is_bottom(&self) -> bool {
        self.nonsingleton_count() == 0
    }

    /// Whether every block of `self` lies inside some block of `coarser`.
    pub fn refines(&self, coarser: &ConnectedPartition) -> bool {
        self.blocks.iter().all(|b| coarser.blocks.iter().any(|c| b.is_subset(*c)))
    }

    /// The partition with `block` replaced by the two halves `a` and `b`.
    pub fn split(&self, block: VertexSet, a: VertexSet, b: VertexSet) -> ConnectedPartition {
        let mut blocks: Vec<VertexSet> = self.blocks.iter().copied().filter(|&x| x != block).collect();
        blocks.push(a);
        blocks.push(b);
        blocks.sort_by_key(|x| x.min_vertex());
        ConnectedPartition { blocks }
    }

    pub fn to_vertex_lists(&self) -> Vec<Vec<usize>> {
        self.blocks.iter().map(|b| b.to_vec()).collect()
    }
}

impl fmt::Display for ConnectedPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in &self.blocks {
            let inner: Vec<String> = b.iter().map(|v| v.to_string()).collect();
            write!(f, "{{{}}}", inner.join(","))?;
        }
        Ok(())
    }
}

impl fmt::Debug for ConnectedPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// One cover relation out of an element: `block` is split into `split.0`
/// (which holds the block's minimum vertex) and `split.1`, giving the element
/// at index `target`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Cover {
    pub target: usize,
    pub block: VertexSet,
    pub split: (VertexSet, VertexSet),
}

#[derive(Clone, Debug)]
pub struct BondLattice {
    order: usize,
    elements: Vec<ConnectedPartition>,
    index: HashMap<ConnectedPartition, usize>,
    covers: Vec<Vec<Cover>>,
}

impl BondLattice {
    /// Enumerates every connected partition of `g`.
    ///
    /// Blocks are grown one at a time: the smallest unassigned vertex opens a
    /// new block, which is extended only through connected supersets drawn
    /// from the unassigned vertices. Each partition is produced exactly once.
    pub fn enumerate(g: &Graph, limits: &Limits) -> Result<Self> {
        Limits::check("vertices", g.order() as u128, limits.max_vertices as u128)?;
        let mut elements = Vec::new();
        let mut blocks = Vec::with_capacity(g.order());
        assign_blocks(g, g.vertices(), &mut blocks, &mut elements, limits.max_lattice)?;

        elements.sort_by_cached_key(|p: &ConnectedPartition| (p.len(), p.to_vertex_lists()));
        let index: HashMap<ConnectedPartition, usize> =
            elements.iter().enumerate().map(|(i, p)| (p.clone(), i)).collect();

        let covers = elements
            .iter()
            .map(|p| {
                let mut out = Vec::new();
                for &block in p.blocks() {
                    for (a, b) in connected_splits(g, block) {
                        let target = index[&p.split(block, a, b)];
                        out.push(Cover { target, block, split: (a, b) });
                    }
                }
                out
            })
            .collect();

        Ok(BondLattice { order: g.order(), elements, index, covers })
    }

    /// Number of vertices of the underlying graph.
    pub fn graph_order(&self) -> usize {
        self.order
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[ConnectedPartition] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &ConnectedPartition {
        &self.elements[i]
    }

    pub fn index_of(&self, p: &ConnectedPartition) -> Result<usize> {
        self.index.get(p).copied().ok_or_else(|| Error::NotInLattice(p.to_string()))
    }

    pub fn bottom_index(&self) -> usize {
        self.elements.len() - 1
    }

    pub fn bottom(&self) -> &ConnectedPartition {
        &self.elements[self.bottom_index()]
    }

    /// `l - |π|`.
    pub fn rank(&self, i: usize) -> usize {
        self.order - self.elements[i].len()
    }

    /// Covers out of the element at index `i`.
    pub fn covers(&self, i: usize) -> &[Cover] {
        &self.covers[i]
    }

    /// Elements covered by `p`, each with the split that produces it.
    pub fn covers_of(&self, p: &ConnectedPartition) -> Result<Vec<(ConnectedPartition, (VertexSet, VertexSet))>> {
        let i = self.index_of(p)?;
        Ok(self.covers[i].iter().map(|c| (self.elements[c.target].clone(), c.split)).collect())
    }

    /// Indices of every element `≤` the element at `i` (including `i`),
    /// in increasing index order.
    pub fn interval_indices(&self, i: usize) -> Vec<usize> {
        let mut seen = vec![false; self.len()];
        let mut stack = vec![i];
        seen[i] = true;
        let mut out = Vec::new();
        while let Some(j) = stack.pop() {
            out.push(j);
            for c in &self.covers[j] {
                if !seen[c.target] {
                    seen[c.target] = true;
                    stack.push(c.target);
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// The sub-lattice `{π : 0̂ ≤ π ≤ sigma}`, keeping the relative order of
    /// this lattice's linear extension.
    pub fn interval_below(&self, sigma: &ConnectedPartition) -> Result<BondLattice> {
        let top = self.index_of(sigma)?;
        let keep = self.interval_indices(top);
        let mut remap = vec![usize::MAX; self.len()];
        for (new, &old) in keep.iter().enumerate() {
            remap[old] = new;
        }
        let elements: Vec<ConnectedPartition> = keep.iter().map(|&i| self.elements[i].clone()).collect();
        let covers = keep
            .iter()
            .map(|&i| self.covers[i].iter().map(|c| Cover { target: remap[c.target], ..*c }).collect())
            .collect();
        let index = elements.iter().enumerate().map(|(i, p)| (p.clone(), i)).collect();
        Ok(BondLattice { order: self.order, elements, index, covers })
    }

    /// `μ(0̂, π)` for every element, by index, from the defining relations
    /// `μ(0̂, 0̂) = 1` and `Σ_{0̂ ≤ π ≤ σ} μ(0̂, π) = 0` for `σ ≠ 0̂`.
    pub fn mobius(&self) -> Vec<BigInt> {
        let n = self.len();
        let mut mu = vec![BigInt::zero(); n];
        let bottom = self.bottom_index();
        mu[bottom] = BigInt::one();
        // Everything strictly below index i has a larger index.
        for i in (0..bottom).rev() {
            let below: BigInt = self.interval_indices(i).into_iter().filter(|&j| j != i).map(|j| &mu[j]).sum();
            mu[i] = -below;
        }
        mu
    }
}

fn assign_blocks(
    g: &Graph,
    remaining: VertexSet,
    blocks: &mut Vec<VertexSet>,
    out: &mut Vec<ConnectedPartition>,
    cap: usize,
) -> Result<()> {
    let Some(v) = remaining.min_vertex() else {
        Limits::check("bond lattice elements", out.len() as u128 + 1, cap as u128)?;
        out.push(ConnectedPartition::from_sorted_blocks(blocks.clone()));
        return Ok(());
    };
    let mut candidates = Vec::new();
    for_each_connected_superset(g, VertexSet::singleton(v), remaining, &mut |s| candidates.push(s));
    for s in candidates {
        blocks.push(s);
        assign_blocks(g, remaining.difference(s), blocks, out, cap)?;
        blocks.pop();
    }
    Ok(())
}

/// Unordered splits `block = a ⊔ b` with both halves connected; `a` always
/// holds the block's minimum vertex.
pub fn connected_splits(g: &Graph, block: VertexSet) -> Vec<(VertexSet, VertexSet)> {
    let Some(m) = block.min_vertex() else { return Vec::new() };
    let rest = block.without(m);
    rest.subsets()
        .map(|sub| sub.with(m))
        .filter(|&a| a != block)
        .map(|a| (a, block.difference(a)))
        .filter(|&(a, b)| g.is_connected(a) && g.is_connected(b))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate_graph, parse_graph, Family};

    fn lat(g: &Graph) -> BondLattice {
        BondLattice::enumerate(g, &Limits::default()).unwrap()
    }

    fn k(n: usize) -> Graph {
        generate_graph(Family::Complete, n, None, None).unwrap()
    }

    fn path(n: usize) -> Graph {
        generate_graph(Family::Path, n, None, None).unwrap()
    }

    fn part(g: &Graph, lists: &[&[usize]]) -> ConnectedPartition {
        ConnectedPartition::from_vertex_lists(g, lists).unwrap()
    }

    /// Every set partition of `0..n` as block lists, by brute-force
    /// restricted-growth strings.
    fn all_set_partitions(n: usize) -> Vec<Vec<VertexSet>> {
        fn rec(i: usize, n: usize, blocks: &mut Vec<VertexSet>, out: &mut Vec<Vec<VertexSet>>) {
            if i == n {
                out.push(blocks.clone());
                return;
            }
            for j in 0..blocks.len() {
                blocks[j] = blocks[j].with(i);
                rec(i + 1, n, blocks, out);
                blocks[j] = blocks[j].without(i);
            }
            blocks.push(VertexSet::singleton(i));
            rec(i + 1, n, blocks, out);
            blocks.pop();
        }
        let mut out = Vec::new();
        rec(0, n, &mut Vec::new(), &mut out);
        out
    }

    #[test]
    fn triangle_lattice() {
        let g = k(3);
        let l = lat(&g);
        assert_eq!(l.len(), 5);
        assert!(l.bottom().is_bottom());
        assert_eq!(l.bottom().len(), 3);
        assert_eq!(l.element(0), &part(&g, &[&[0, 1, 2]]));
        for mid in [part(&g, &[&[0], &[1, 2]]), part(&g, &[&[0, 2], &[1]]), part(&g, &[&[0, 1], &[2]])] {
            l.index_of(&mid).unwrap();
        }
    }

    #[test]
    fn path3_lattice_excludes_disconnected_block() {
        let g = path(3);
        let l = lat(&g);
        assert_eq!(l.len(), 4);
        assert!(ConnectedPartition::from_vertex_lists(&g, &[&[0, 2], &[1]]).is_err());
        l.index_of(&part(&g, &[&[0, 1], &[2]])).unwrap();
        l.index_of(&part(&g, &[&[0], &[1, 2]])).unwrap();
    }

    #[test]
    fn edgeless_lattice_is_a_point() {
        let l = lat(&Graph::edgeless(3).unwrap());
        assert_eq!(l.len(), 1);
        assert!(l.covers(0).is_empty());
        assert_eq!(l.mobius(), vec![BigInt::one()]);
    }

    #[test]
    fn enumeration_matches_filtered_set_partitions() {
        for g in [path(5), k(4), generate_graph(Family::Cycle, 6, None, None).unwrap(),
                  generate_graph(Family::Random, 7, Some(11), Some(0.4)).unwrap()] {
            let l = lat(&g);
            let mut brute: Vec<ConnectedPartition> = all_set_partitions(g.order())
                .into_iter()
                .filter(|bs| bs.iter().all(|&b| g.is_connected(b)))
                .map(|bs| ConnectedPartition::new(&g, bs).unwrap())
                .collect();
            assert_eq!(l.len(), brute.len());
            brute.sort_by_key(|p| p.to_vertex_lists());
            for p in &brute {
                l.index_of(p).unwrap();
            }
        }
    }

    #[test]
    fn bell_numbers_for_complete_graphs() {
        // B(n+1) = Σ C(n,k) B(k)
        let mut bell = vec![1u64];
        for n in 0..6usize {
            let mut binom = 1u64;
            let mut next = 0u64;
            for k in 0..=n {
                next += binom * bell[k];
                binom = binom * (n - k) as u64 / (k + 1) as u64;
            }
            bell.push(next);
        }
        assert_eq!(&bell[3..6], &[5, 15, 52]);
        for n in 1..=6 {
            assert_eq!(lat(&k(n)).len() as u64, bell[n]);
        }
    }

    #[test]
    fn covers_of_triangle_top() {
        let g = k(3);
        let l = lat(&g);
        let covers = l.covers_of(&part(&g, &[&[0, 1, 2]])).unwrap();
        assert_eq!(covers.len(), 3);
        let splits: Vec<_> = covers.iter().map(|(_, s)| *s).collect();
        let s = |v: &[usize]| VertexSet::from_vertices(v.iter().copied());
        assert!(splits.contains(&(s(&[0]), s(&[1, 2]))));
        assert!(splits.contains(&(s(&[0, 1]), s(&[2]))));
        assert!(splits.contains(&(s(&[0, 2]), s(&[1]))));
        assert!(l.covers_of(l.bottom()).unwrap().is_empty());
    }

    #[test]
    fn covers_of_path3_top() {
        let g = path(3);
        let l = lat(&g);
        let s = |v: &[usize]| VertexSet::from_vertices(v.iter().copied());
        let splits: Vec<_> = l.covers_of(&part(&g, &[&[0, 1, 2]])).unwrap().into_iter().map(|(_, s)| s).collect();
        assert_eq!(splits.len(), 2);
        assert!(splits.contains(&(s(&[0]), s(&[1, 2]))));
        assert!(splits.contains(&(s(&[0, 1]), s(&[2]))));
    }

    #[test]
    fn foreign_partition_is_a_lookup_error() {
        let g = k(3);
        let l = lat(&g);
        let other = lat(&k(4));
        assert!(matches!(l.covers_of(other.bottom()), Err(Error::NotInLattice(_))));
        assert!(l.interval_below(other.bottom()).is_err());
    }

    #[test]
    fn cover_structure() {
        for g in [k(4), path(5), generate_graph(Family::Star, 5, None, None).unwrap()] {
            let l = lat(&g);
            for i in 0..l.len() {
                for c in l.covers(i) {
                    assert!(c.target > i, "covers must point forward in the extension");
                    let (from, to) = (l.element(i), l.element(c.target));
                    assert_eq!(to.len(), from.len() + 1);
                    assert!(to.refines(from));
                    assert_eq!(c.split.0.union(c.split.1), c.block);
                    assert!(from.blocks().contains(&c.block));
                    assert!(to.blocks().contains(&c.split.0) && to.blocks().contains(&c.split.1));
                }
                assert_eq!(l.covers(i).is_empty(), i == l.bottom_index());
            }
            for w in l.elements().windows(2) {
                assert!(w[0].len() <= w[1].len());
            }
        }
    }

    #[test]
    fn maximal_chains_have_length_equal_to_rank() {
        fn chain_lengths(l: &BondLattice, i: usize, out: &mut Vec<usize>, depth: usize) {
            if l.covers(i).is_empty() {
                out.push(depth);
            }
            for c in l.covers(i) {
                chain_lengths(l, c.target, out, depth + 1);
            }
        }
        for n in 1..=5 {
            for g in [k(n), path(n)] {
                let l = lat(&g);
                for i in 0..l.len() {
                    let mut lens = Vec::new();
                    chain_lengths(&l, i, &mut lens, 0);
                    assert!(lens.iter().all(|&d| d == l.rank(i)));
                }
            }
        }
    }

    #[test]
    fn intervals() {
        let g = k(3);
        let l = lat(&g);
        assert_eq!(l.interval_below(l.bottom()).unwrap().len(), 1);
        assert_eq!(l.interval_below(l.element(0)).unwrap().len(), 5);
        let sigma = part(&g, &[&[0], &[1, 2]]);
        let iv = l.interval_below(&sigma).unwrap();
        assert_eq!(iv.len(), 2);
        assert_eq!(iv.element(0), &sigma);
        assert!(iv.bottom().is_bottom());
    }

    #[test]
    fn interval_is_bond_lattice_of_restricted_graph() {
        let g = generate_graph(Family::Random, 6, Some(4), Some(0.6)).unwrap();
        let l = lat(&g);
        for sigma in l.elements() {
            let iv = l.interval_below(sigma).unwrap();
            let direct = lat(&g.restrict_to_blocks(sigma.blocks()));
            assert_eq!(iv.len(), direct.len());
            for p in direct.elements() {
                iv.index_of(p).unwrap();
            }
        }
    }

    #[test]
    fn disconnected_lattice_is_product() {
        let g = parse_graph("4\n0 1\n2 3").unwrap();
        assert_eq!(lat(&g).len(), 4);
        let g = k(2).disjoint_union(&k(3)).unwrap();
        assert_eq!(lat(&g).len(), 2 * 5);
    }

    #[test]
    fn triangle_mobius() {
        let g = k(3);
        let l = lat(&g);
        let mu = l.mobius();
        assert_eq!(mu[l.bottom_index()], BigInt::one());
        assert_eq!(mu[0], BigInt::from(2));
        for i in 1..4 {
            assert_eq!(mu[i], BigInt::from(-1));
        }
    }

    #[test]
    fn mobius_interval_sums_vanish() {
        for g in [k(5), path(6), generate_graph(Family::Random, 6, Some(8), Some(0.5)).unwrap()] {
            let l = lat(&g);
            let mu = l.mobius();
            for i in 0..l.len() {
                let s: BigInt = l.interval_indices(i).iter().map(|&j| &mu[j]).sum();
                assert_eq!(s.is_zero(), i != l.bottom_index());
            }
        }
    }

    #[test]
    fn lattice_cap_reports_count() {
        let limits = Limits { max_lattice: 10, ..Limits::default() };
        match BondLattice::enumerate(&k(4), &limits) {
            Err(Error::LimitExceeded { reached, limit, .. }) => {
                assert_eq!(limit, 10);
                assert_eq!(reached, 11);
            }
            other => panic!("{other:?}"),
        }
        let limits = Limits { max_vertices: 3, ..Limits::default() };
        assert!(BondLattice::enumerate(&k(4), &limits).is_err());
    }
}
