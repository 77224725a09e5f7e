//! Point-cloud holography toolkit.
//!
//! Computes spatial light modulator (SLM) phase masks that pattern sparse 3D
//! point clouds in a 2f optical system, and evaluates them with an FFT-based
//! diffraction simulator.
//!
//! The fast path partitions the SLM into per-target pixel patches, assigns
//! targets to patches by regional diffraction efficiency (an exact linear sum
//! assignment), and synthesizes each patch deterministically from the 3D
//! steering phase. An iterative Gerchberg-Saxton baseline at configurable
//! sampling density is provided for comparison, along with contrast /
//! accuracy / efficiency metrics and a peak-identification pipeline over
//! rendered intensity volumes.

pub mod assign;
pub mod cloud;
pub mod efficiency;
pub mod error;
pub mod fft2;
pub mod gs;
pub mod io;
pub mod metrics;
pub mod optics;
pub mod patchwork;
pub mod wavesim;

pub use assign::{assign, build_cost_matrix, solve_assignment, CostMatrix, PatchAssignment, PatchSlot};
pub use cloud::{depth_planes, generate_cloud};
pub use efficiency::{corner_case_efficiency, regional_efficiency};
pub use error::HoloError;
pub use gs::{gs_compute, gs_decomposed, GsConfig};
pub use optics::{
    patch_format, steering_phase, OpticalConfig, PatchFormat, PhaseMask, PointCloud,
    QuantizedMask, TargetPoint,
};
pub use patchwork::{compute_masks, MaskSet, TimingReport};
pub use wavesim::{
    build_target_volume, field_from_mask, propagate_to_plane, render_volume, BinaryVolume,
    IntensityVolume,
};
