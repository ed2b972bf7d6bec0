//! Deterministic simulator and library for semi-supervised federated
//! network-intrusion detection on IoT gateways.
//!
//! The building blocks:
//!
//! - [`nncore`] — dense autoencoders with analytic backpropagation, Adam,
//!   and the shrink-regularized reconstruction loss.
//! - [`detector`] — anomaly scorers: plain reconstruction error and the
//!   stripped-encoder + centroid-distance hybrid.
//! - [`data`] — CSV ingestion, z-score normalization, Dirichlet non-IID
//!   partitioning with Jensen-Shannon measurement, local splits, and a
//!   synthetic benchmark generator.
//! - [`federation`] — the round protocol with FedAvg, FedProx, and
//!   MSE-weighted aggregation over a shared development dataset.
//! - [`eval`] — rank-based ROC-AUC, result summaries, latent export.
//! - [`experiment`] — config-driven orchestration of repeated seeded runs.
//!
//! Everything is seeded: the pair (config, master seed) fixes every number
//! this crate produces.

pub mod data;
pub mod detector;
pub mod error;
pub mod eval;
pub mod experiment;
pub mod federation;
pub mod nncore;
pub mod rng;

pub use error::{Error, Result};
