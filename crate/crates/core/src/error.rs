//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("shape mismatch in {op}: left {left:?}, right {right:?}")]
    ShapeMismatch {
        op: &'static str,
        left: Vec<usize>,
        right: Vec<usize>,
    },
    #[error("{op}: expected {expected}, got shape {got:?}")]
    InvalidShape {
        op: &'static str,
        expected: String,
        got: Vec<usize>,
    },
    #[error("conv2d kernel must be 3x3, got {0}x{1}")]
    KernelSize(usize, usize),
    #[error("conv2d stride must be 1 or 2, got {0}")]
    InvalidStride(usize),
    #[error("backward requires a scalar loss, got shape {0:?}")]
    NonScalarLoss(Vec<usize>),
    #[error("masked mean over an empty mask")]
    EmptyMask,
    #[error("label vector has no positive class")]
    NoLabels,
    #[error("invalid config: {0}")]
    Config(String),
    #[error("decode error: {0}")]
    Decode(String),
    #[error("non-finite loss at step {step} (seed {seed}, images {image_ids:?})")]
    NonFiniteLoss {
        step: u64,
        seed: u64,
        image_ids: Vec<u32>,
    },
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
