//! Multiplicities of the roots `β(S) = Σ_{v ∈ S} α_v` for connected supports
//! `S`, from the Peterson recurrence specialised to multiplicity-free roots:
//!
//! ```text
//! mult β(S) = Σ_{S = A ⊔ B, A, B connected} e(A, B) / e(S) · mult β(A) · mult β(B)
//! ```
//!
//! with `mult β({v}) = 1`. The lattice path sum over cover weights is computed
//! separately and never reads the multiplicity table.

use std::cell::RefCell;
use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::lattice::{connected_splits, BondLattice, ConnectedPartition};

/// Memoised root multiplicities for one graph. Single-threaded: the memo is a
/// `RefCell`, so build one table per thread.
#[derive(Debug)]
pub struct MultTable<'g> {
    graph: &'g Graph,
    memo: RefCell<HashMap<VertexSet, BigInt>>,
}

impl<'g> MultTable<'g> {
    pub fn new(graph: &'g Graph) -> Self {
        MultTable { graph, memo: RefCell::new(HashMap::new()) }
    }

    pub fn graph(&self) -> &Graph {
        self.graph
    }

    /// Multiplicity of `β(s)`.
    ///
    /// Panics if `s` is empty or does not induce a connected subgraph.
    pub fn mult_root(&self, s: VertexSet) -> BigInt {
        assert!(!s.is_empty() && self.graph.is_connected(s), "mult_root: support {s:?} is not connected");
        self.mult_root_unchecked(s)
    }

    fn mult_root_unchecked(&self, s: VertexSet) -> BigInt {
        if s.len() == 1 {
            return BigInt::one();
        }
        if let Some(m) = self.memo.borrow().get(&s) {
            return m.clone();
        }
        // Σ e(A,B) mult(A) mult(B) over unordered connected splits; dividing
        // by e(S) must leave an integer.
        let mut numerator = BigInt::zero();
        for (a, b) in connected_splits(self.graph, s) {
            let cross = self.graph.cross_edge_count(a, b);
            numerator += BigInt::from(cross) * self.mult_root_unchecked(a) * self.mult_root_unchecked(b);
        }
        let (value, rem) = numerator.div_rem(&BigInt::from(self.graph.edge_count(s)));
        assert!(rem.is_zero(), "Peterson recurrence gave a non-integer multiplicity for {s:?}");
        self.memo.borrow_mut().insert(s, value.clone());
        value
    }

    /// Product of the block multiplicities of `p`.
    pub fn mult_partition(&self, p: &ConnectedPartition) -> BigInt {
        p.blocks().iter().map(|&b| self.mult_root(b)).product()
    }
}

/// Exact weight of a cover in the bond lattice, in `(0, 1]`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct EdgeWeight(pub BigRational);

impl EdgeWeight {
    pub fn value(&self) -> &BigRational {
        &self.0
    }
}

/// `w(π, π') = (1 / d(π)) · e(A, B) / e(S)` for the cover of `π` that splits
/// the block `S = A ⊔ B`.
///
/// Panics if `S` is not a non-singleton block of `p` or the halves are not a
/// connected split of it.
pub fn edge_weight(g: &Graph, p: &ConnectedPartition, split: (VertexSet, VertexSet)) -> EdgeWeight {
    let (a, b) = split;
    let block = a.union(b);
    check_split(g, p, a, b);
    let d = p.nonsingleton_count();
    EdgeWeight(BigRational::new(g.cross_edge_count(a, b).into(), (d * g.edge_count(block)).into()))
}

/// The same weight written through the root form:
/// `(1 / d(π)) · 2⟨β(A), β(B)⟩ / ⟨β(S), β(S) - 2ρ⟩`.
pub fn edge_weight_from_form(g: &Graph, p: &ConnectedPartition, split: (VertexSet, VertexSet)) -> EdgeWeight {
    let (a, b) = split;
    check_split(g, p, a, b);
    let d = p.nonsingleton_count() as i64;
    let num = 2 * g.root_form(a, b);
    let den = d * g.form_beta_beta_minus_2rho(a.union(b));
    EdgeWeight(BigRational::new(num.into(), den.into()))
}

fn check_split(g: &Graph, p: &ConnectedPartition, a: VertexSet, b: VertexSet) {
    let block = a.union(b);
    assert!(
        !a.is_empty() && !b.is_empty() && a.is_disjoint(b) && p.blocks().contains(&block),
        "edge_weight: {a:?} | {b:?} is not a split of a block of {p}"
    );
    assert!(g.is_connected(a) && g.is_connected(b), "edge_weight: split half is not connected");
}

/// `Σ_{paths π → 0̂} w(p)` for every element of `lat`, by index. Dynamic
/// programme over the linear extension: `f(0̂) = 1`,
/// `f(π) = Σ_{π → π'} w(π, π') f(π')`.
pub fn path_sums(lat: &BondLattice, g: &Graph) -> Vec<BigRational> {
    let n = lat.len();
    let mut f = vec![BigRational::zero(); n];
    f[lat.bottom_index()] = BigRational::one();
    for i in (0..lat.bottom_index()).rev() {
        let p = lat.element(i);
        let mut acc = BigRational::zero();
        for c in lat.covers(i) {
            acc += edge_weight(g, p, c.split).0 * &f[c.target];
        }
        f[i] = acc;
    }
    f
}

/// Path sum from a single element.
pub fn path_sum(lat: &BondLattice, g: &Graph, p: &ConnectedPartition) -> Result<BigRational> {
    let i = lat.index_of(p)?;
    let sums = path_sums(lat, g);
    Ok(sums[i].clone())
}

/// Largest vertex count accepted by [`path_sum_by_enumeration`].
pub const LITERAL_PATH_MAX_VERTICES: usize = 4;

/// Path sum by walking every individual path down to `0̂` and multiplying
/// edge weights. Exponential; only for validating [`path_sums`] on tiny
/// graphs.
pub fn path_sum_by_enumeration(lat: &BondLattice, g: &Graph, p: &ConnectedPartition) -> Result<BigRational> {
    if g.order() > LITERAL_PATH_MAX_VERTICES {
        return Err(Error::LimitExceeded {
            what: "vertices for literal path enumeration",
            limit: LITERAL_PATH_MAX_VERTICES as u128,
            reached: g.order() as u128,
        });
    }
    fn walk(lat: &BondLattice, g: &Graph, i: usize, weight: BigRational, total: &mut BigRational) {
        if i == lat.bottom_index() {
            *total += weight;
            return;
        }
        let p = lat.element(i);
        for c in lat.covers(i) {
            walk(lat, g, c.target, &weight * edge_weight(g, p, c.split).0, total);
        }
    }
    let mut total = BigRational::zero();
    walk(lat, g, lat.index_of(p)?, BigRational::one(), &mut total);
    Ok(total)
}
