use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("{got} terminals exceed the cap of {cap}")]
    TerminalCapExceeded { got: usize, cap: usize },
    #[error("terminal {0} cannot be connected to the others")]
    Unreachable(usize),
    #[error("terminal {0} is not a vertex")]
    BadTerminal(usize),
    #[error("{edges} edges exceed the brute-force cap of {cap}")]
    TooLarge { edges: usize, cap: usize },
    #[error("terminal {0} is not on the given face")]
    TerminalOffFace(usize),
    #[error("face {0} does not exist")]
    NoSuchFace(usize),
    #[error("no portals given")]
    NoPortals,
}
