//! Chromatic polynomials of simple graphs computed through the bond lattice
//! and the root multiplicities of the Kac-Moody algebra whose Dynkin diagram
//! is the graph, with classical routes kept alongside as oracles.
//!
//! ```
//! use chromakac::{chromatic::Method, generate_graph, limits::Limits, Family};
//!
//! let k3 = generate_graph(Family::Complete, 3, None, None).unwrap();
//! let p = Method::PathSum.run(&k3, &Limits::default()).unwrap();
//! assert_eq!(p.to_string(), "q^3 - 3q^2 + 2q");
//! ```

pub mod chromatic;
pub mod cli;
pub mod error;
pub mod graph;
pub mod lattice;
pub mod limits;
pub mod multiplicity;
pub mod poly;
pub mod report;

pub use error::{Error, Result};
pub use graph::{generate_graph, parse_graph, Family, Graph, VertexSet};
pub use lattice::{BondLattice, ConnectedPartition};
pub use multiplicity::MultTable;
pub use poly::Polynomial;
