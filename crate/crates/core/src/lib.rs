//! Spectral radius and signless Laplacian index of simple graphs, together
//! with the degree-based bounds that estimate them.
//!
//! ```
//! use degspec::{mu, solve_y, Family, DEFAULT_TOL};
//!
//! let g = Family::Wheel(4).build().unwrap();
//! let y = solve_y(&g.degree_sequence());
//! assert!((mu(&g, DEFAULT_TOL).unwrap().value - 3.0).abs() < 1e-9);
//! assert!((y.y - 4.0).abs() < 1e-12);
//! ```

pub mod bounds;
pub mod enumerate;
pub mod families;
pub mod graph;
pub mod graph6;
pub mod harness;
pub mod partite;
pub mod report;
pub mod spectral;
pub mod y_solver;

pub use bounds::{BoundEntry, BoundError, BoundReport, FamilyMinimum, Irregularity, Side, Target};
pub use families::{Family, FamilyError, SplitMix64};
pub use graph::{DegreeSequence, Graph, GraphError, LineDegreeSequence};
pub use graph6::{parse_graph6, write_graph6, Graph6Error};
pub use partite::{CliqueCertificate, PartiteError, PartitionCertificate};
pub use report::{analyze, Analysis, AnalysisConfig};
pub use spectral::{mu, q_index, SpectralConfig, SpectralError, SpectralValue, DEFAULT_TOL};
pub use y_solver::{solve_y, solve_z, YSolution};
