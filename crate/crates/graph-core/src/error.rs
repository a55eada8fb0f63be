use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("malformed rotation: {0}")]
    MalformedRotation(String),
    #[error("Euler check failed for a component: V={vertices} E={edges} F={faces}")]
    EulerViolation {
        vertices: usize,
        edges: usize,
        faces: usize,
    },
    #[error("edge {edge} is a self-loop at vertex {vertex}")]
    SelfLoop { edge: usize, vertex: usize },
    #[error("edge {edge} references a vertex outside 0..{n}")]
    VertexOutOfRange { edge: usize, n: usize },
    #[error("coincident edge directions at vertex {0}")]
    DegenerateDrawing(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PathError {
    #[error("vertex {target} is unreachable from {from}")]
    Unreachable { from: usize, target: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PartitionError {
    #[error("element {0} is not in the ground set")]
    NotSubset(usize),
    #[error("element {0} appears in more than one block")]
    Overlap(usize),
    #[error("empty block")]
    EmptyBlock,
}

#[derive(Debug, Error)]
pub enum InputError {
    #[error("JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("terminal {0} is not a vertex")]
    BadTerminal(usize),
    #[error("terminal face {0} does not match any face of the embedding")]
    FaceNotFound(usize),
    #[error("vertex count mismatch: {0}")]
    Shape(String),
}
