use thiserror::Error;

/// Everything that can go wrong while building or checking a finite structure.
///
/// Witness-carrying variants report the lexicographically first offending
/// indices so that failures are reproducible.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed table: {0}")]
    MalformedTable(String),

    #[error("table is not associative: ({i}*{j})*{k} != {i}*({j}*{k})")]
    NonAssociative { i: usize, j: usize, k: usize },

    #[error("designated identity fails the identity law at element {0}")]
    BadIdentity(usize),

    #[error("element {0} has no two-sided inverse")]
    NotAGroup(usize),

    #[error("map is not multiplicative: f({s}*{t}) != f({s})*f({t})")]
    NotMultiplicative { s: usize, t: usize },

    #[error("map does not send the identity to the identity")]
    IdentityNotPreserved,

    #[error("map sends original element {0} outside the target semigroup")]
    LeavesSemigroup(usize),

    #[error("map has length {got}, expected {expected}")]
    MapLength { got: usize, expected: usize },

    #[error(
        "composition domain mismatch: target of the first map is not the source of the second"
    )]
    DomainMismatch,

    #[error("codomain mismatch: {0}")]
    CodomainMismatch(String),

    #[error("size limit exceeded: construction needs {requested} elements, cap is {cap}")]
    SizeLimitExceeded { requested: u128, cap: usize },

    #[error("search budget exceeded: search space {requested} exceeds budget {budget}")]
    BudgetExceeded { requested: u128, budget: u128 },

    #[error("partition is not a congruence: classes of {a} and {b} are not compatible")]
    IncompatiblePartition { a: usize, b: usize },

    #[error("unknown family: {0}")]
    UnknownFamily(String),

    #[error("element {0} is not idempotent")]
    NotIdempotent(usize),

    #[error("subset is not a subgroup: {0}")]
    NotASubgroup(String),

    #[error("subset is not closed under multiplication: {0}")]
    NotClosed(String),

    #[error("map is not surjective")]
    NotSurjective,

    #[error("left action of the maximal subgroup is not free: {h} fixes {r}")]
    FreenessViolation { h: usize, r: usize },

    #[error("left action is not by automorphisms of the right action at h={h}, r={r}, m={m}")]
    AutomorphismViolation { h: usize, r: usize, m: usize },

    #[error("monoid does not act faithfully on the R-class: {a} and {b} act identically")]
    NotFaithfulOnR { a: usize, b: usize },

    #[error("generators do not generate the monoid ({reached} of {order} elements reached)")]
    GeneratorsDontGenerate { reached: usize, order: usize },

    #[error("word uses letter {0:?} which is not a generator label")]
    UnknownLetter(char),

    #[error("signature hypothesis fails: [w^2] != [w^{k}] in the expansion")]
    HypothesisFails { k: usize },

    #[error("no factorization witness found for w^{k}")]
    NoWitness { k: usize },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("invalid action: {0}")]
    InvalidAction(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
