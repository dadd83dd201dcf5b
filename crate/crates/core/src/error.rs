use thiserror::Error;

/// Which 2x2 block of the X pattern a positivity check refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Block {
    /// Outer block: rho11, rho44 and the coherence rho14.
    Outer,
    /// Inner block: rho22, rho33 and the coherence rho23.
    Inner,
}

impl std::fmt::Display for Block {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Block::Outer => f.write_str("rho11*rho44 >= |rho14|^2"),
            Block::Inner => f.write_str("rho22*rho33 >= |rho23|^2"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("trace is {trace}, expected 1")]
    Trace { trace: f64 },
    #[error("positivity violated ({block}): populations product {product}, coherence squared {coherence_sq}")]
    Positivity {
        block: Block,
        product: f64,
        coherence_sq: f64,
    },
    #[error("population {index} is {value}, outside [0, 1]")]
    Population { index: usize, value: f64 },
    #[error("non-finite matrix element")]
    NonFinite,
    #[error("{what} = {value} is out of domain")]
    Domain { what: &'static str, value: f64 },
    #[error("measurement outcome {outcome} has zero probability")]
    DegenerateOutcome { outcome: usize },
    #[error("state lacks the rho11=rho44, rho22=rho33, real-coherence symmetry")]
    NotSymmetric,
    #[error("negative discord {0}")]
    NegativeDiscord(f64),
    #[error("unknown family `{0}`")]
    UnknownFamily(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
