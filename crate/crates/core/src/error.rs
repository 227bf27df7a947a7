use std::fmt;

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// A single reason a relation fails to be a preorder.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Violation {
    /// `(i, i)` is missing.
    NotReflexive { element: usize },
    /// `i ≿ j` and `j ≿ k` hold but `i ≿ k` does not.
    NotTransitive { i: usize, j: usize, k: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Violation::NotReflexive { element } => write!(f, "not reflexive at {element}"),
            Violation::NotTransitive { i, j, k } => {
                write!(
                    f,
                    "not transitive: ({i},{j}) and ({j},{k}) but not ({i},{k})"
                )
            }
        }
    }
}

/// Every witness found while validating a relation.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct ViolationList(pub Vec<Violation>);

impl ViolationList {
    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Violation> {
        self.0.iter()
    }
}

impl fmt::Display for ViolationList {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} violation(s)", self.0.len())?;
        if let Some(first) = self.0.first() {
            write!(f, ", first: {first}")?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum Error {
    #[error("ground set must contain at least one element")]
    EmptyGround,
    #[error("ground set has {0} elements; at most 64 are supported")]
    GroundTooLarge(usize),
    #[error("duplicate label `{0}`")]
    DuplicateLabel(String),
    #[error("unknown label `{0}`")]
    UnknownLabel(String),
    #[error("element index {index} out of range for a ground set of size {size}")]
    IndexOutOfRange { index: usize, size: usize },
    #[error("relation is not a preorder: {0}")]
    NotPreorder(ViolationList),
    #[error("subset must be nonempty")]
    EmptySubset,
    #[error("relations are defined on different ground sets")]
    GroundMismatch,
    #[error("relation is not total: `{0}` and `{1}` are incomparable")]
    NotTotal(String, String),
    #[error("candidate is not a completion of the base relation")]
    NotACompletion,
    #[error("blocks do not partition the ground set")]
    NotAPartition,
    #[error("{what} is infeasible: size {size} exceeds the limit of {limit}")]
    TooLarge {
        what: &'static str,
        size: u128,
        limit: u128,
    },
    #[error("sequence must be nonempty")]
    EmptySequence,
    #[error("bad parameter: {0}")]
    BadParameter(String),
    #[error("parameter mismatch: {0}")]
    ParameterMismatch(String),
    #[error("malformed document: {0}")]
    Document(String),
}

impl Error {
    pub(crate) fn too_large(
        what: &'static str,
        size: impl Into<u128>,
        limit: impl Into<u128>,
    ) -> Self {
        Error::TooLarge {
            what,
            size: size.into(),
            limit: limit.into(),
        }
    }
}
