use thiserror::Error;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parameters ({0}, {1}) are not coprime")]
    NotCoprime(i64, i64),
    #[error("invalid input: {0}")]
    InvalidInput(&'static str),
    #[error("not applicable: {0}")]
    Inapplicable(&'static str),
    #[error("no integer solution to the Bezout identity for r = {r}, n^2 s = {n2s}")]
    NotSolvable { r: i64, n2s: i64 },
    #[error("unknown family `{0}`")]
    UnknownFamily(alloc::string::String),
    #[error("expected {expected} relators, found {found}")]
    RelatorCount { expected: usize, found: usize },
    #[error("cannot parse word: {0}")]
    WordSyntax(&'static str),
    #[error("arithmetic overflow")]
    Overflow,
}
