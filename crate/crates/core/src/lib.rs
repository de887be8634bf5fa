//! Solvers for the planar single-facility weighted obnoxious location problem.
//!
//! Given `n` demand points with positive weights and a convex feasible region,
//! find the point of the region that maximizes the smallest weighted Euclidean
//! distance to the demand points.
//!
//! The crate provides:
//!
//! - [`geom`]: frame transforms, circle/segment intersections, signed areas
//!   and point-in-triangle classification.
//! - [`apollonius`]: weighted bisectors (Apollonius circles) and the exact
//!   solver for the three-point problem.
//! - [`mesh`]: convex hull, Delaunay triangulation and midpoint subdivision.
//! - [`objective`]: the maximin objective with incumbent pruning, and region
//!   membership.
//! - [`solvers`]: the two Big Triangle Small Triangle variants, the Apollonius
//!   candidate enumeration and a multi-start local search baseline.
//! - [`instances`]: the reproducible benchmark generator and CSV I/O.
//!
//! ```
//! use maximin_core::instances::{generate, InstanceSpec};
//! use maximin_core::solvers::{apollonius_global, SolverConfig};
//!
//! let inst = generate(&InstanceSpec::new(20)).unwrap();
//! let sol = apollonius_global(&inst, &SolverConfig::default());
//! assert!(sol.objective > 0.0);
//! ```

pub mod apollonius;
mod error;
pub mod geom;
pub mod instances;
pub mod mesh;
pub mod objective;
pub mod solvers;

pub use apollonius::{Bisector, TriangleSolution, WeightedPoint};
pub use error::{Error, Result};
pub use geom::{Containment, Point, Segment, Triangle};
pub use mesh::{ConvexPolygon, Triangulation};
pub use objective::{Evaluation, Instance, RegionKind};
pub use solvers::{Solution, SolverConfig, SolverStats};
