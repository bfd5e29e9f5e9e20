//! Multisegments, preprojective-algebra oracles and pole orders of
//! intertwining operators for `GL_n` over a p-adic field.

pub mod az;
pub mod error;
pub mod linalg;
pub mod matching;
pub mod multiseg;
pub mod par;
pub mod pi_oracle;
pub mod poles;
pub mod qrep;
pub mod random;

/// `2^31 - 1`.
pub const DEFAULT_PRIME: u64 = 2_147_483_647;

pub use az::{az_involution, az_is_involution_check};
pub use error::{Error, Result};
pub use multiseg::{
    arranged_form, euler_plus, grdim, is_balanced, is_ladder, is_regular, is_speh, sym_form, DimVector,
    Multisegment, PatternKind, PatternWitness, Segment,
};
pub use pi_oracle::SampleConfig;
