//! Square colouring, maximum average degree and discharging audits for
//! sparse graphs.
//!
//! * [`graph`] and [`io`]: the graph type, the square operator, DIMACS/JSON.
//! * [`constructions`]: graph families with large cliques in their squares.
//! * [`density`]: exact potentials and maximum-density subgraphs.
//! * [`coloring`]: cliques, chromatic number, list colouring, choosability.
//! * [`discharging`]: the charge rules, structural predicates, audits and the
//!   symbolic case sweep.

pub mod bitset;
pub mod coloring;
pub mod constructions;
pub mod density;
pub mod discharging;
pub mod error;
pub mod flow;
pub mod graph;
pub mod io;
pub mod ratio;

pub use error::{ConstructionError, DensityError, DischargeError, GraphError, SolveError};
pub use graph::{degree_histogram, induced_subgraph, square, Graph, GraphBuilder, Vertex};
pub use ratio::Rational;
