//! Every route to the chromatic polynomial `P(G, q)`, the `q`-Kostant
//! partition function at `β(Π)`, and the two numeric corollaries about
//! acyclic orientations and Coxeter classes.
//!
//! Lattice routes:
//!
//! * bond lattice: `Σ_π (-1)^{l-|π|} mult π · q^{|π|}`
//! * Möbius: `Σ_π μ(0̂, π) q^{|π|}`
//! * path sum: multiplicities replaced by weighted path sums to `0̂`
//! * matrix: `ζᵀ W^l ζ`
//!
//! Classical routes live in [`oracles`].

pub mod matrix;
pub mod oracles;

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::lattice::{BondLattice, ConnectedPartition};
use crate::limits::Limits;
use crate::multiplicity::{path_sums, MultTable};
use crate::poly::{Polynomial, RationalPoly};

pub use matrix::WeightMatrix;
pub use oracles::{
    acyclic_orientation_count, coloring_count, deletion_contraction, independent_partitions_polynomial,
    interpolated, ordered_independent_partition_counts,
};

fn signed(l: usize, blocks: usize, value: BigInt) -> BigInt {
    if (l - blocks) % 2 == 1 {
        -value
    } else {
        value
    }
}

/// `Σ_π (-1)^{l-|π|} mult π · q^{|π|}` over a precomputed lattice (or any
/// interval of it).
pub fn bond_lattice_sum(g: &Graph, lat: &BondLattice) -> Polynomial {
    let table = MultTable::new(g);
    let mut p = Polynomial::zero();
    for e in lat.elements() {
        p.add_term(&signed(g.order(), e.len(), table.mult_partition(e)), e.len());
    }
    p
}

pub fn chromatic_bond_lattice(g: &Graph, limits: &Limits) -> Result<Polynomial> {
    Ok(bond_lattice_sum(g, &BondLattice::enumerate(g, limits)?))
}

/// `P(G(Σ), q)` as the bond-lattice sum restricted to `[0̂, Σ]`. The result
/// has degree `l`: `G(Σ)` keeps every vertex.
pub fn chromatic_interval(g: &Graph, lat: &BondLattice, sigma: &ConnectedPartition) -> Result<Polynomial> {
    Ok(bond_lattice_sum(g, &lat.interval_below(sigma)?))
}

pub fn mobius_sum(lat: &BondLattice) -> Polynomial {
    let mut p = Polynomial::zero();
    for (e, mu) in lat.elements().iter().zip(lat.mobius()) {
        p.add_term(&mu, e.len());
    }
    p
}

pub fn chromatic_mobius(g: &Graph, limits: &Limits) -> Result<Polynomial> {
    Ok(mobius_sum(&BondLattice::enumerate(g, limits)?))
}

/// `Σ_{paths p → 0̂} (-1)^{len p} w(p) q^{l - len p}`, grouped by starting
/// element.
pub fn path_sum_polynomial(g: &Graph, lat: &BondLattice) -> Result<Polynomial> {
    let l = g.order();
    let mut coeffs = vec![BigRational::zero(); l + 1];
    for (e, f) in lat.elements().iter().zip(path_sums(lat, g)) {
        if (l - e.len()) % 2 == 1 {
            coeffs[e.len()] -= f;
        } else {
            coeffs[e.len()] += f;
        }
    }
    RationalPoly::new(coeffs)
        .to_integer()
        .ok_or_else(|| Error::Invariant("path-sum chromatic polynomial has a fractional coefficient".into()))
}

pub fn chromatic_path_sum(g: &Graph, limits: &Limits) -> Result<Polynomial> {
    path_sum_polynomial(g, &BondLattice::enumerate(g, limits)?)
}

pub fn matrix_power_polynomial(g: &Graph, lat: &BondLattice) -> Result<Polynomial> {
    let w = WeightMatrix::new(g, lat);
    let total = w.pow(g.order()).sum_entries();
    total
        .to_integer()
        .ok_or_else(|| Error::Invariant("ζᵀ W^l ζ has a fractional coefficient".into()))
}

pub fn chromatic_matrix_power(g: &Graph, limits: &Limits) -> Result<Polynomial> {
    matrix_power_polynomial(g, &BondLattice::enumerate(g, limits)?)
}

/// `K(β(Π); q) = Σ_π mult π · q^{|π|}`.
pub fn kostant_sum(g: &Graph, lat: &BondLattice) -> Polynomial {
    let table = MultTable::new(g);
    let mut p = Polynomial::zero();
    for e in lat.elements() {
        p.add_term(&table.mult_partition(e), e.len());
    }
    p
}

pub fn q_kostant_at_beta(g: &Graph, limits: &Limits) -> Result<Polynomial> {
    Ok(kostant_sum(g, &BondLattice::enumerate(g, limits)?))
}

/// `mult β(Π)` for a connected graph, the count of conjugacy classes of
/// Coxeter elements.
pub fn coxeter_class_count(g: &Graph) -> Result<BigInt> {
    if !g.is_connected_graph() {
        return Err(Error::Disconnected(format!("{} components", g.components().len())));
    }
    Ok(MultTable::new(g).mult_root(g.vertices()))
}

/// Named computation routes, as accepted by the command line.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Method {
    BondLattice,
    Mobius,
    PathSum,
    Matrix,
    DeletionContraction,
    Interpolate,
    IndependentPartitions,
    Kostant,
}

impl Method {
    /// The seven routes that must all produce `P(G, q)`.
    pub const CHROMATIC: [Method; 7] = [
        Method::BondLattice,
        Method::Mobius,
        Method::PathSum,
        Method::Matrix,
        Method::DeletionContraction,
        Method::Interpolate,
        Method::IndependentPartitions,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Method::BondLattice => "bond-lattice",
            Method::Mobius => "mobius",
            Method::PathSum => "path-sum",
            Method::Matrix => "matrix",
            Method::DeletionContraction => "deletion-contraction",
            Method::Interpolate => "interpolate",
            Method::IndependentPartitions => "independent-partitions",
            Method::Kostant => "kostant",
        }
    }

    pub fn uses_lattice(self) -> bool {
        matches!(self, Method::BondLattice | Method::Mobius | Method::PathSum | Method::Matrix | Method::Kostant)
    }

    /// Runs this route, reusing `lat` when the route needs a lattice.
    pub fn run_with(self, g: &Graph, lat: Option<&BondLattice>, limits: &Limits) -> Result<Polynomial> {
        let owned;
        let lat = match (self.uses_lattice(), lat) {
            (false, _) => None,
            (true, Some(l)) => Some(l),
            (true, None) => {
                owned = BondLattice::enumerate(g, limits)?;
                Some(&owned)
            }
        };
        match (self, lat) {
            (Method::BondLattice, Some(l)) => Ok(bond_lattice_sum(g, l)),
            (Method::Mobius, Some(l)) => Ok(mobius_sum(l)),
            (Method::PathSum, Some(l)) => path_sum_polynomial(g, l),
            (Method::Matrix, Some(l)) => matrix_power_polynomial(g, l),
            (Method::Kostant, Some(l)) => Ok(kostant_sum(g, l)),
            (Method::DeletionContraction, _) => deletion_contraction(g, limits),
            (Method::Interpolate, _) => interpolated(g, limits),
            (Method::IndependentPartitions, _) => independent_partitions_polynomial(g, limits),
            (_, None) => unreachable!("lattice routes always have a lattice here"),
        }
    }

    pub fn run(self, g: &Graph, limits: &Limits) -> Result<Polynomial> {
        self.run_with(g, None, limits)
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        [Method::Kostant]
            .into_iter()
            .chain(Method::CHROMATIC)
            .find(|m| m.name() == s)
            .ok_or_else(|| Error::InvalidParameter(format!("unknown method {s:?}")))
    }
}
