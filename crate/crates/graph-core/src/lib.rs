//! Plane graphs with exact integer weights: embeddings, faces, shortest
//! paths, set partitions and the JSON exchange format.

pub mod embed;
pub mod error;
pub mod graph;
pub mod io;
pub mod partition;
pub mod paths;
pub mod random;
pub mod solution;
pub mod weight;

pub use embed::EmbeddingBuilder;
pub use error::{GraphError, InputError, PartitionError, PathError};
pub use graph::{flatten, flatten_vertices, twin, Edge, Face, PlanarGraph, SimpleGraph, WeightedGraph};
pub use io::{GraphDocument, Instance};
pub use partition::{partition_join, partition_project, Partition};
pub use paths::{dijkstra, shortest_path};
pub use solution::{Dsu, SteinerSolution};
pub use weight::Weight;
