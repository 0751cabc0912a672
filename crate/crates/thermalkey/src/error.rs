use thiserror::Error;

/// Errors produced by the library.
///
/// Validation errors (bad inputs, contract violations) are distinguished from
/// numerical failures (non-converged quadrature, degenerate ground states);
/// the CLI maps the former to exit code 1 and the latter to exit code 2.
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),

    #[error("matrix is not Hermitian (max |A - A^H| entry = {0:.3e})")]
    NotHermitian(f64),

    #[error("duplicate site {0} in Pauli string")]
    DuplicateSite(usize),

    #[error("site {site} out of range for {n} qubits")]
    SiteOutOfRange { site: usize, n: usize },

    #[error("chain of {n} sites exceeds the dense-diagonalization cap of {cap} sites")]
    ChainTooLong { n: usize, cap: usize },

    #[error("chain needs at least 2 sites (got {0})")]
    ChainTooShort(usize),

    #[error("eigenvalue {requested} not in the spectrum (nearest is {nearest})")]
    EigenvalueNotInSpectrum { requested: f64, nearest: f64 },

    #[error("inverse temperature must be finite and nonnegative (got {0})")]
    InvalidBeta(f64),

    #[error("generator does not commute with the Hamiltonian (‖[H,G]‖_F = {0:.3e})")]
    NonCommutingGenerator(f64),

    #[error("symmetry sector at eigenvalue {0} is empty")]
    EmptySector(f64),

    #[error("no sector above q = {0} to mix with")]
    NoNextSector(f64),

    #[error("mixing weight must lie in [0, 1/2] (got {0})")]
    InvalidMixing(f64),

    #[error("invalid POVM: mu·‖O_A‖_∞ = {0:.6} exceeds 1; elements would be indefinite")]
    InvalidPovm(f64),

    #[error("state carries no energy data; the spectral form needs a thermal state")]
    NotThermal,

    #[error("supports of O_A and O_B overlap")]
    OverlappingSupports,

    #[error("degenerate measurement branch (outcome probability {0:.3e})")]
    DegenerateBranch(f64),

    #[error("degenerate B measurement: ⟨O_B⟩² equals the squared spectral norm")]
    DegenerateBMeasurement,

    #[error("quadrature did not converge: doubling past {nodes} nodes still moved the value by {delta:.3e}")]
    QuadratureNonConvergence { nodes: usize, delta: f64 },

    #[error("degenerate ground state (gap {gap:.3e}): {context}")]
    DegenerateGroundState { gap: f64, context: String },

    #[error("{0}")]
    InvalidInput(String),
}

impl Error {
    /// True for failures of the numerics rather than of the input.
    pub fn is_numerical(&self) -> bool {
        matches!(
            self,
            Error::QuadratureNonConvergence { .. } | Error::DegenerateGroundState { .. }
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
