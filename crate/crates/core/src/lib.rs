//! Combinational `X mod P` circuits built from the positive-polarity
//! Reed-Muller (Zhegalkin) expansion of each residue bit.
//!
//! The pipeline runs in four stages:
//!
//! 1. [`truth`] tabulates every output bit `S_i` of `X mod P` over all `2^n`
//!    inputs (truth vectors and truth numbers).
//! 2. [`transform`] converts each truth vector to its Reed-Muller spectrum,
//!    either with the GF(2) butterfly or with the combinatorial
//!    binomial-parity method.
//! 3. [`polynomial`] reads the spectrum as an XOR of AND terms.
//! 4. [`emit`] joins the polynomials into one VHDL, Verilog, ANF-text or
//!    JSON design, after [`verify`] has checked every input exhaustively.
//!
//! ```
//! use xmodp::{generate_verified, ConverterSpec, Method};
//!
//! let spec = ConverterSpec::new(3, 3).unwrap();
//! let conv = generate_verified(&spec, Method::Fast).unwrap();
//! assert!(conv.is_verified());
//! assert_eq!(conv.poly(1).unwrap().masks(), vec![1, 3, 4, 6, 7]);
//! ```

pub mod cli;
pub mod emit;
pub mod error;
pub mod generate;
pub mod model;
pub mod polynomial;
pub mod transform;
pub mod truth;
pub mod verify;

pub use emit::{emit, emit_report, EmitOptions, Format};
pub use error::{Error, Result};
pub use generate::{generate, generate_verified};
pub use model::{
    decode_residue, delta_of, AnfPolynomial, CircuitStats, ConverterSpec, ModConverter, Monomial, PackedBits,
    RmSpectrum, TruthNumbers, TruthVector, N_MAX,
};
pub use transform::Method;
pub use verify::{verify_converter, VerificationReport};
