use std::fmt;

/// Which line of a table a Latin-square violation was found on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Line {
    Row,
    Col,
}

impl fmt::Display for Line {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Line::Row => f.write_str("row"),
            Line::Col => f.write_str("column"),
        }
    }
}

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("table is not square or has out-of-range entries: {0}")]
    Shape(String),
    #[error("not a Latin square: {line} {index} repeats value {value}")]
    NotLatinSquare { line: Line, index: usize, value: usize },
    #[error("element 0 is not an identity: {row}*{col} = {got}")]
    NoIdentity { row: usize, col: usize, got: usize },
    #[error("element {0} has no two-sided inverse")]
    InversesUndefined(usize),
    #[error("loop is not a Bol loop")]
    NotBol,
    #[error("loop is not a Bruck loop")]
    NotBruck,
    #[error("set is not a subloop")]
    NotSubloop,
    #[error("not a normal subloop or subgroup")]
    NotNormal,
    #[error("set is not a subgroup")]
    NotSubgroup,
    #[error("not a group: {0}")]
    NotGroup(String),
    #[error("K is not a transversal of H^g for g = {g} (coset of {coset} hit twice)")]
    NotTransversal { g: usize, coset: usize },
    #[error("coset {0} contains no unique representative from K")]
    AmbiguousRepresentative(usize),
    #[error("not a subfolder: {0}")]
    NotSubfolder(String),
    #[error("group order {order} exceeds cap {cap}")]
    CapExceeded { order: u128, cap: u128 },
    #[error("tau does not extend to an automorphism: {0}")]
    ExtensionInconsistent(String),
    #[error("group order {0} is even")]
    EvenOrder(usize),
    #[error("map is not an involutory automorphism")]
    NotInvolutory,
    #[error("order {order} exceeds bound {bound}")]
    BoundExceeded { order: usize, bound: usize },
    #[error("manifest mismatch: {0}")]
    ManifestMismatch(String),
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
