use thiserror::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("generator list is empty")]
    EmptyGenerators,

    #[error("every generator is the zero vector")]
    AllZeroGenerators,

    #[error("vector has length {got}, expected {expected}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("generators span a rank-{span} sublattice of Z^{rank}; re-embed before building cones")]
    NotPointed { rank: usize, span: usize },

    #[error("the weight cone contains a line (the monoid has units); only pointed weight cones are supported")]
    ContainsLine,

    #[error("ambient rank {rank} exceeds the face-enumeration cap {cap}")]
    RankTooLarge { rank: usize, cap: usize },

    #[error("generators do not generate the ambient lattice Z^{rank} as a group (index {index})")]
    GeneratorsDoNotGenerate { rank: usize, index: String },

    #[error("ray {ray} is not normal to face {face}")]
    NotNormalRay { ray: usize, face: usize },

    #[error("no saturation point found below the search limit {limit}; this contradicts almost-saturation of the full cone and indicates a bug")]
    SaturationSearchExceeded { limit: u32 },

    #[error("point {point} is not in the monoid")]
    NotInMonoid { point: String },

    #[error("point {point} is not in the lattice generated by the monoid generators")]
    NotInLattice { point: String },

    #[error("cannot compute the orbit contraction: faces {faces:?} have unknown invariance verdicts")]
    UnknownVerdictsPresent { faces: Vec<usize> },

    #[error("face {face} has {count} minimal invariant faces above it; uniqueness is guaranteed and this indicates a bug")]
    NonUniqueMinimal { face: usize, count: usize },

    #[error("internal invariant violated: {0}")]
    Internal(String),
}
