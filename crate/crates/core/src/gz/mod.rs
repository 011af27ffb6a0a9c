//! Gelfand-Zetlin polytopes and their Kogan faces.

pub mod ehrhart;
pub mod face;
pub mod lattice;
pub mod pattern;
pub mod weight;

pub use ehrhart::{ehrhart, face_volume, EhrhartPolynomial};
pub use face::{
    all_edges, all_reduced_kogan, dimension, enumerate_reduced_kogan, schubert_fk, Edge, EdgeKind,
    FaceDiagram,
};
pub use lattice::{count_lattice_points, count_union, lattice_points, union_points};
pub use pattern::GzPattern;
pub use weight::StrictWeight;
