//! SMS spam classification testbed.
//!
//! The crate trains linear spam classifiers over hashed character n-grams,
//! simulates federated training with FedAVG, attacks models with
//! imperceptible Unicode perturbations and training-set poisoning, hardens
//! them with adversarial training, and evaluates screenshot-triage and
//! OCR post-processing heuristics. Every operation is deterministic given
//! its inputs and a seed.

pub mod advtext;
pub mod corpus;
pub mod error;
pub mod features;
pub mod fedsim;
pub mod harness;
pub mod metrics;
pub mod model;
pub mod ocrpost;
pub mod poison;
pub mod report;
pub mod seed;
pub mod synthetic;
pub mod triage;

pub use error::{Error, Result};
