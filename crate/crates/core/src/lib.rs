//! Randomized wet-paper syndrome coding.
//!
//! Syndrome coding hides a message in the syndrome of a cover vector. Wet
//! positions must stay untouched, which makes classical wet-paper coding
//! fail with positive probability. Reserving the last `r` syndrome symbols
//! as a free tail removes that failure for perfect codes once `r` reaches
//! [`wpc::min_r`]. The [`zzw`] module layers Hamming, Reed–Solomon and
//! parity channels so `r` can change from one cover to the next without
//! telling the recipient in advance.

pub mod analysis;
pub mod codes;
pub mod error;
pub mod gf;
pub mod io;
pub mod matrix;
pub mod wpc;
pub mod zzw;

pub use codes::{Code, CodeFamily, CodeSpec, GolayVariant, ParityCheckMatrix, Syndrome};
pub use error::{Error, Result};
pub use gf::{Field, FieldElement};
pub use matrix::Matrix;
pub use wpc::{CoverObject, EmbedSolution};
