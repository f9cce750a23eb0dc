use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("invalid character {character:?} at index {position}")]
    InvalidCharacter { position: usize, character: char },
    #[error("invalid chain step {character:?} at index {position} (expected s, t, S or T)")]
    InvalidStep { position: usize, character: char },
    #[error("mixed chain polarity: steps must be all of s/t or all of S/T")]
    MixedPolarity,
    #[error("malformed automorphism {0:?}: expected \"a -> <word>; b -> <word>\"")]
    MalformedAutomorphism(String),
    #[error("unknown named automorphism {0:?}")]
    UnknownName(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("images a -> {image_a}, b -> {image_b} do not form a basis of F2")]
    InvalidAutomorphism { image_a: String, image_b: String },
    #[error("invalid Whitehead map: multiplier {0} or its inverse lies in the defining set")]
    InvalidWhitehead(char),
    #[error("word {0} has zero cyclic length; length ratios are undefined")]
    ZeroCyclicLength(String),
    #[error("intermediate image of length {length} exceeds the cap of {cap}")]
    ImageTooLong { length: usize, cap: usize },
    #[error("catalog depth {requested} exceeds the configured cap of {cap}")]
    DepthTooLarge { requested: usize, cap: usize },
    #[error("contract violation: {0}")]
    Contract(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
