//! Acoustic scene classification with teacher-student learning.
//!
//! The crate covers the full desk-scale pipeline: a deterministic synthetic
//! corpus generator, raw-waveform and spectrogram CNN front-ends built on a
//! small reverse-mode autodiff engine, temperature-softened soft labels with
//! multi-segment teacher inputs, embedding-distance distillation, a linear
//! SVM scoring back-end, and score-sum ensembling with report generation.

pub mod cli;
pub mod config;
pub mod distill;
pub mod dsp;
pub mod error;
pub mod eval;
pub mod gradcheck;
pub mod nnet;
pub mod pipeline;
pub mod svm;
pub mod synthgen;
pub mod trainer;
pub mod util;

pub use error::{Error, Result};

/// Toolkit version stamped into report provenance.
pub const VERSION: &str = env!("CARGO_PKG_VERSION");
