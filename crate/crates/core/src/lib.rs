//! Post-hoc out-of-distribution (OOD) detection scoring and failure-detection
//! evaluation for image classifiers, with a deterministic desk-scale inference
//! engine and a counterfactual-artefact synthetic benchmark generator.
//!
//! The crate is organised around a simple flow:
//!
//! 1. [`synth`] generates a benchmark: artefact-free training images, ID test
//!    images, OOD test images carrying an injected artefact, pixel-exact
//!    artefact masks, and artefact-free counterfactual twins.
//! 2. [`model`] trains a small feed-forward network and exposes forward
//!    passes, exact input gradients, Monte-Carlo dropout sampling, hidden
//!    feature extraction, and LRP relevance maps.
//! 3. [`detect`] computes per-sample OOD scores: twelve confidence-based
//!    methods reading the output layer, and four feature-based methods
//!    (Mahalanobis and friends, Gram-matrix deviation) reading hidden layers.
//!    All scores follow one sign convention: higher means more in-distribution.
//! 4. [`eval`] measures AUROC for OOD detection and failure detection, applies
//!    percentile gates singly and in sequence, categorises prediction impact
//!    against counterfactuals, and aggregates multi-seed reports.
//!
//! [`io`] provides the bit-exact file interchange (NPY arrays, CSV manifests
//! and score tables) so externally produced feature/logit dumps can stand in
//! for the built-in model, and [`pipeline`] chains everything behind the
//! `oodgate` CLI.

pub mod detect;
pub mod eval;
pub mod io;
pub mod model;
pub mod pipeline;
pub mod rng;
pub mod synth;
pub mod tensor;

pub use tensor::{Dtype, Tensor, TensorError};
