//! The weight matrix `W` on the bond lattice and the identity
//! `P(G, q) = ζᵀ W^l ζ`.

use std::collections::BTreeMap;

use num_rational::BigRational;

use crate::graph::Graph;
use crate::lattice::BondLattice;
use crate::multiplicity::edge_weight;
use crate::poly::RationalPoly;

/// Sparse square matrix over `Q[q]`, rows indexed in the lattice's linear
/// extension. Each row holds its nonzero entries keyed by column.
#[derive(Clone, Debug, PartialEq)]
pub struct WeightMatrix {
    rows: Vec<BTreeMap<usize, RationalPoly>>,
}

impl WeightMatrix {
    /// `W[π][π'] = -w(π, π')` for each cover, `W[0̂][0̂] = q`, zero elsewhere.
    pub fn new(g: &Graph, lat: &BondLattice) -> Self {
        let mut rows: Vec<BTreeMap<usize, RationalPoly>> = vec![BTreeMap::new(); lat.len()];
        for (i, row) in rows.iter_mut().enumerate() {
            let p = lat.element(i);
            for c in lat.covers(i) {
                let w = edge_weight(g, p, c.split);
                row.insert(c.target, RationalPoly::constant(-w.0));
            }
        }
        rows[lat.bottom_index()].insert(lat.bottom_index(), RationalPoly::q());
        WeightMatrix { rows }
    }

    pub fn identity(n: usize) -> Self {
        let one = RationalPoly::constant(BigRational::from_integer(1.into()));
        WeightMatrix { rows: (0..n).map(|i| BTreeMap::from([(i, one.clone())])).collect() }
    }

    pub fn order(&self) -> usize {
        self.rows.len()
    }

    pub fn entry(&self, i: usize, j: usize) -> RationalPoly {
        self.rows[i].get(&j).cloned().unwrap_or_default()
    }

    /// Number of stored nonzero entries.
    pub fn nonzeros(&self) -> usize {
        self.rows.iter().map(BTreeMap::len).sum()
    }

    pub fn is_upper_triangular(&self) -> bool {
        self.rows.iter().enumerate().all(|(i, row)| row.keys().all(|&j| j >= i))
    }

    pub fn diagonal(&self) -> Vec<RationalPoly> {
        (0..self.order()).map(|i| self.entry(i, i)).collect()
    }

    pub fn mul(&self, rhs: &WeightMatrix) -> WeightMatrix {
        assert_eq!(self.order(), rhs.order(), "matrix orders differ");
        let rows = self
            .rows
            .iter()
            .map(|row| {
                let mut acc: BTreeMap<usize, RationalPoly> = BTreeMap::new();
                for (&k, a) in row {
                    for (&j, b) in &rhs.rows[k] {
                        acc.entry(j).or_default().add_product(a, b);
                    }
                }
                acc.retain(|_, v| !v.is_zero());
                acc
            })
            .collect();
        WeightMatrix { rows }
    }

    /// `self^k` by `k` successive multiplications.
    pub fn pow(&self, k: usize) -> WeightMatrix {
        (0..k).fold(WeightMatrix::identity(self.order()), |acc, _| acc.mul(self))
    }

    /// `ζᵀ M ζ`, the sum of all entries.
    pub fn sum_entries(&self) -> RationalPoly {
        let mut total = RationalPoly::zero();
        for entry in self.rows.iter().flat_map(BTreeMap::values) {
            total = &total + entry;
        }
        total
    }
}
