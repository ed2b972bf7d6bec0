//! Dense feed-forward autoencoder with analytic backpropagation.
//!
//! The model is a stack of [`DenseLayer`]s split into an encoder and a
//! decoder ([`ModelParams`]). Training minimizes the reconstruction MSE,
//! optionally augmented with a shrink penalty on the latent norm
//! ([`sae_loss`]) and a proximal penalty toward an anchor model
//! ([`backward`]). Optimization is plain mini-batch Adam ([`adam_step`],
//! [`train_local`]) with early stopping on a validation split.
//!
//! All arithmetic is in `f64`; given the same seed, every function here is
//! bit-reproducible.

mod adam;
mod layer;
mod loss;
mod model;
mod train;

pub use adam::{adam_step, AdamState};
pub use layer::{Activation, DenseLayer};
pub use loss::{ae_loss, backward, sae_loss, ProxTerm};
pub use model::{Gradients, LayerGrad, ModelParams};
pub use train::{train_local, TrainConfig};
