use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("word `{0}` is not in h^1 (it must be empty or start with y)")]
    NotInH1(String),
    #[error("truncation orders differ: {0} vs {1}")]
    OrderMismatch(usize, usize),
    #[error("truncation order must be at least 1")]
    ZeroOrder,
    #[error("(a + t)^-k with a = 0 and k = {0} has a pole at t = 0")]
    PoleAtZero(u32),
    #[error("tuples of different depths: {0} vs {1}")]
    DepthMismatch(usize, usize),
    #[error("split position {pos} out of range for depth {depth}")]
    SplitOutOfRange { pos: usize, depth: usize },
    #[error("bad index `{0}`: entries must be positive integers")]
    BadIndex(String),

    #[error("tree has no vertices")]
    EmptyTree,
    #[error("vertex {0} does not exist")]
    UnknownVertex(usize),
    #[error("edge {0} is a loop")]
    SelfLoop(usize),
    #[error("{vertices} vertices need exactly {} edges, found {edges}", vertices - 1)]
    EdgeCount { vertices: usize, edges: usize },
    #[error("tree is not connected")]
    NotConnected,
    #[error("terminal vertex {0} is white")]
    TerminalNotBlack(usize),
    #[error("root is white")]
    RootNotBlack,
    #[error("index is not essentially positive")]
    NotEssentiallyPositive,
    #[error("pair is not harvestable")]
    NotHarvestable,
    #[error("edge {edge} has a vanishing base with positive index")]
    DegenerateBase { edge: usize },
    #[error("invalid tree: {0}")]
    InvalidTree(Box<Error>),
    #[error("syntax error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },

    #[error("unknown verification suite `{0}`")]
    UnknownSuite(String),
}
