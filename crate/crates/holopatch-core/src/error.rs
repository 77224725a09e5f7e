use thiserror::Error;

/// Errors shared across the hologram synthesis and evaluation pipeline.
#[derive(Debug, Error)]
pub enum HoloError {
    #[error("invalid optical config: {0}")]
    InvalidConfig(String),

    #[error("patch side {patch_side} below minimum of 2 pixels (F={pixel_count}, grid {grid_side}x{grid_side})")]
    PatchTooSmall {
        pixel_count: usize,
        grid_side: usize,
        patch_side: usize,
    },

    #[error("{count} target(s) outside the addressable volume (indices {indices:?})")]
    OutOfBounds { count: usize, indices: Vec<usize> },

    #[error("frame count {frames} exceeds target count {targets}")]
    TooManyFrames { frames: usize, targets: usize },

    #[error("cost matrix contains a non-finite entry at ({row}, {col})")]
    NonFiniteCost { row: usize, col: usize },

    #[error("cost matrix has {rows} rows but only {cols} columns; need rows <= cols")]
    NotEnoughSlots { rows: usize, cols: usize },

    #[error("volume capacity exhausted: failed to place target {placed} of {requested} after {attempts} attempts")]
    CapacityExhausted {
        placed: usize,
        requested: usize,
        attempts: usize,
    },

    #[error("empty target volume: no depth plane contains a target")]
    EmptyTargetVolume,

    #[error("target disks overlap on plane dz={dz} (targets {a} and {b})")]
    DiskOverlap { dz: f64, a: usize, b: usize },

    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),

    #[error("malformed file {path}: {reason}")]
    Malformed { path: String, reason: String },

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, HoloError>;
