use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::nncore::layer::{Activation, DenseLayer};

/// Full autoencoder parameters: the unit of federation exchange.
///
/// The decoder mirrors the encoder's dimensions in reverse, so the final
/// decoder output lives in the input space. The default architecture is
/// `input -> hidden -> latent -> hidden -> input` with tanh on the hidden
/// layers and identity on the latent and output layers (data is z-scored
/// and therefore unbounded).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ModelParams {
    encoder: Vec<DenseLayer>,
    decoder: Vec<DenseLayer>,
}

impl ModelParams {
    /// Latent width rule: `m = floor(1 + sqrt(n))` for input width `n`.
    pub fn latent_rule(input_dim: usize) -> usize {
        (1.0 + (input_dim as f64).sqrt()).floor() as usize
    }

    /// Hidden width: `ceil((n + m) / 2)`.
    pub fn hidden_rule(input_dim: usize, latent_dim: usize) -> usize {
        (input_dim + latent_dim).div_ceil(2)
    }

    /// Glorot-initialized autoencoder for `input_dim` features. The latent
    /// width follows [`Self::latent_rule`] unless overridden.
    pub fn new_seeded(
        input_dim: usize,
        latent_override: Option<usize>,
        rng: &mut ChaCha8Rng,
    ) -> Result<Self> {
        if input_dim == 0 {
            return Err(Error::InvalidConfig("input_dim must be > 0".into()));
        }
        let latent = match latent_override {
            Some(m) if m == 0 => {
                return Err(Error::InvalidConfig("latent override must be > 0".into()))
            }
            Some(m) => m,
            None => Self::latent_rule(input_dim),
        };
        let hidden = Self::hidden_rule(input_dim, latent);
        let encoder = vec![
            DenseLayer::glorot(input_dim, hidden, Activation::Tanh, rng)?,
            DenseLayer::glorot(hidden, latent, Activation::Identity, rng)?,
        ];
        let decoder = vec![
            DenseLayer::glorot(latent, hidden, Activation::Tanh, rng)?,
            DenseLayer::glorot(hidden, input_dim, Activation::Identity, rng)?,
        ];
        Self::from_layers(encoder, decoder)
    }

    /// Assembles a model from explicit layers, checking the chain and
    /// mirror invariants.
    pub fn from_layers(encoder: Vec<DenseLayer>, decoder: Vec<DenseLayer>) -> Result<Self> {
        if encoder.is_empty() || decoder.is_empty() {
            return Err(Error::InvalidConfig(
                "encoder and decoder need at least one layer".into(),
            ));
        }
        for stack in [&encoder, &decoder] {
            for pair in stack.windows(2) {
                if pair[0].out_dim() != pair[1].in_dim() {
                    return Err(Error::DimMismatch {
                        context: "layer chain",
                        expected: pair[0].out_dim(),
                        got: pair[1].in_dim(),
                    });
                }
            }
        }
        let enc_dims: Vec<usize> = std::iter::once(encoder[0].in_dim())
            .chain(encoder.iter().map(|l| l.out_dim()))
            .collect();
        let dec_dims: Vec<usize> = std::iter::once(decoder[0].in_dim())
            .chain(decoder.iter().map(|l| l.out_dim()))
            .collect();
        let mirrored: Vec<usize> = enc_dims.iter().rev().copied().collect();
        if dec_dims != mirrored {
            return Err(Error::InvalidConfig(format!(
                "decoder dims {dec_dims:?} must mirror encoder dims {enc_dims:?} in reverse"
            )));
        }
        Ok(Self { encoder, decoder })
    }

    #[inline]
    pub fn input_dim(&self) -> usize {
        self.encoder[0].in_dim()
    }

    #[inline]
    pub fn latent_dim(&self) -> usize {
        self.encoder.last().expect("non-empty").out_dim()
    }

    #[inline]
    pub fn encoder(&self) -> &[DenseLayer] {
        &self.encoder
    }

    #[inline]
    pub fn decoder(&self) -> &[DenseLayer] {
        &self.decoder
    }

    /// Encoder forward pass: compresses `x` to its latent representation.
    pub fn encode(&self, x: &[f64]) -> Result<Vec<f64>> {
        if x.len() != self.input_dim() {
            return Err(Error::DimMismatch {
                context: "encoder input",
                expected: self.input_dim(),
                got: x.len(),
            });
        }
        let mut h = x.to_vec();
        for layer in &self.encoder {
            h = layer.forward(&h);
        }
        Ok(h)
    }

    /// Decoder forward pass: maps a latent vector back to the input space.
    pub fn decode(&self, h: &[f64]) -> Result<Vec<f64>> {
        if h.len() != self.latent_dim() {
            return Err(Error::DimMismatch {
                context: "decoder input",
                expected: self.latent_dim(),
                got: h.len(),
            });
        }
        let mut y = h.to_vec();
        for layer in &self.decoder {
            y = layer.forward(&y);
        }
        Ok(y)
    }

    /// Encoder followed by decoder.
    pub fn reconstruct(&self, x: &[f64]) -> Result<Vec<f64>> {
        self.decode(&self.encode(x)?)
    }

    /// All layers, encoder first.
    pub fn all_layers(&self) -> impl Iterator<Item = &DenseLayer> {
        self.encoder.iter().chain(self.decoder.iter())
    }

    pub(crate) fn all_layers_mut(&mut self) -> impl Iterator<Item = &mut DenseLayer> {
        self.encoder.iter_mut().chain(self.decoder.iter_mut())
    }

    pub fn layer_count(&self) -> usize {
        self.encoder.len() + self.decoder.len()
    }

    pub fn param_count(&self) -> usize {
        self.all_layers()
            .map(|l| l.weights().len() + l.biases().len())
            .sum()
    }

    /// Iterator over every scalar parameter, weights before biases per layer.
    pub fn param_iter(&self) -> impl Iterator<Item = f64> + '_ {
        self.all_layers()
            .flat_map(|l| l.weights().iter().chain(l.biases().iter()).copied())
    }

    /// Replaces the decoder with one of identical shape.
    pub fn set_decoder(&mut self, decoder: Vec<DenseLayer>) -> Result<()> {
        let replaced = Self::from_layers(self.encoder.clone(), decoder)?;
        *self = replaced;
        Ok(())
    }

    /// Euclidean distance between two models over all parameters.
    pub fn l2_distance(&self, other: &Self) -> Result<f64> {
        if !self.same_shape(other) {
            return Err(Error::InvalidInput(
                "models have different shapes".into(),
            ));
        }
        let sum: f64 = self
            .param_iter()
            .zip(other.param_iter())
            .map(|(a, b)| (a - b) * (a - b))
            .sum();
        Ok(sum.sqrt())
    }

    pub fn same_shape(&self, other: &Self) -> bool {
        self.layer_count() == other.layer_count()
            && self.all_layers().zip(other.all_layers()).all(|(a, b)| {
                a.in_dim() == b.in_dim()
                    && a.out_dim() == b.out_dim()
                    && a.activation() == b.activation()
            })
    }

    pub fn check_finite(&self) -> Result<()> {
        if self.all_layers().all(|l| l.is_finite()) {
            Ok(())
        } else {
            Err(Error::Numeric("non-finite model parameter".into()))
        }
    }
}

/// Per-layer gradient buffers, shaped like the layer they belong to.
#[derive(Debug, Clone, PartialEq)]
pub struct LayerGrad {
    pub d_weights: Vec<f64>,
    pub d_biases: Vec<f64>,
}

/// Gradient (or moment) structure shaped like [`ModelParams`].
#[derive(Debug, Clone, PartialEq)]
pub struct Gradients {
    pub layers: Vec<LayerGrad>,
}

impl Gradients {
    pub fn zeros_like(params: &ModelParams) -> Self {
        let layers = params
            .all_layers()
            .map(|l| LayerGrad {
                d_weights: vec![0.0; l.weights().len()],
                d_biases: vec![0.0; l.biases().len()],
            })
            .collect();
        Self { layers }
    }

    /// Iterator over every scalar gradient entry.
    pub fn entry_iter(&self) -> impl Iterator<Item = f64> + '_ {
        self.layers
            .iter()
            .flat_map(|l| l.d_weights.iter().chain(l.d_biases.iter()).copied())
    }

    pub fn mul_assign(&mut self, factor: f64) {
        for layer in &mut self.layers {
            for g in layer.d_weights.iter_mut().chain(layer.d_biases.iter_mut()) {
                *g *= factor;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::rng_from_seed;

    #[test]
    fn latent_rule_matches_floor_formula() {
        assert_eq!(ModelParams::latent_rule(115), 11); // floor(1 + 10.72)
        assert_eq!(ModelParams::latent_rule(8), 3);
        assert_eq!(ModelParams::latent_rule(4), 3);
        assert_eq!(ModelParams::latent_rule(1), 2);
    }

    #[test]
    fn default_architecture_dims() {
        let mut rng = rng_from_seed(0);
        let m = ModelParams::new_seeded(8, None, &mut rng).unwrap();
        assert_eq!(m.input_dim(), 8);
        assert_eq!(m.latent_dim(), 3);
        // hidden = ceil((8 + 3) / 2) = 6
        assert_eq!(m.encoder()[0].out_dim(), 6);
        assert_eq!(m.decoder()[0].out_dim(), 6);
        assert_eq!(m.decoder()[1].out_dim(), 8);
        m.check_finite().unwrap();
    }

    #[test]
    fn mirror_invariant_rejected_when_broken() {
        let enc = vec![
            DenseLayer::zeros(4, 3, Activation::Tanh).unwrap(),
            DenseLayer::zeros(3, 2, Activation::Identity).unwrap(),
        ];
        let dec = vec![
            DenseLayer::zeros(2, 4, Activation::Tanh).unwrap(),
            DenseLayer::zeros(4, 4, Activation::Identity).unwrap(),
        ];
        assert!(ModelParams::from_layers(enc, dec).is_err());
    }

    #[test]
    fn encode_rejects_wrong_width() {
        let mut rng = rng_from_seed(0);
        let m = ModelParams::new_seeded(4, None, &mut rng).unwrap();
        assert!(m.encode(&[1.0, 2.0]).is_err());
        assert!(m.decode(&[1.0]).is_err());
    }
}
