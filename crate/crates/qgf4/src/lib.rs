//! Additive codes over GF(4) and the quantum error-correcting codes they
//! define.
//!
//! An additive code is an F₂-linear subspace of GF(4)ⁿ. When such a code
//! is self-orthogonal under the trace inner product
//! u ∗ v = Σ Tr(uᵢ·v̄ᵢ), it describes an n-qubit stabilizer code with
//! parameters [[n, k, d]], where 2^{n−k} is the code's size and d is the
//! least weight in C^⊥ \ C. This crate provides, entirely in exact
//! arithmetic:
//!
//! * the core objects — scalars ([`gf4`]), bit-sliced vectors
//!   ([`vector`]), codes with canonical bases, duality, weight
//!   distributions, and quantum parameters ([`code`], [`enumerator`]);
//! * equivalence and automorphisms under the monomial group at small
//!   length ([`equiv`]);
//! * code constructions: direct sums, length/dimension modifications,
//!   pasting, concatenation, binary (CSS-style) codes, the distance-3
//!   family on 2^m coordinates, and u|u+v combinations
//!   ([`constructions`]);
//! * cyclic, constacyclic, and shift-conjugate structure, including
//!   Hamming-dual and BCH-style designed-distance codes ([`cyclic`],
//!   [`poly`]);
//! * upper bounds: sphere packing, monotone rank bounds, shadow
//!   constraints, and an exact rational linear-programming feasibility
//!   test with certificates ([`bounds`]);
//! * enumeration and classification of self-dual codes at small length
//!   ([`selfdual`]);
//! * a catalog of named codes and tabulated best-known parameters
//!   ([`catalog`], [`table`]);
//! * the text file format shared with the command-line tool ([`io`]).

pub mod bounds;
pub mod catalog;
pub mod code;
pub mod constructions;
pub mod cyclic;
pub mod enumerator;
pub mod equiv;
pub mod f2;
pub mod gf4;
pub mod io;
pub mod poly;
pub mod selfdual;
pub mod table;
pub mod vector;

pub use code::{AdditiveCode, QuantumParams, StandardForm};
pub use enumerator::{macwilliams, WeightEnumerator};
pub use gf4::Gf4;
pub use vector::{Gf4Vector, SymplecticVector};

/// Errors reported by this crate.
#[derive(thiserror::Error, Clone, PartialEq, Eq, Debug)]
pub enum Error {
    /// A character outside the `{0,1,w,W}` alphabet.
    #[error("invalid code character {0:?} (alphabet is 0, 1, w, W)")]
    BadChar(char),
    /// A malformed code file.
    #[error("malformed code file: {0}")]
    Parse(String),
    /// An enumeration would exceed the codeword budget.
    #[error("enumeration needs 2^{log2_needed} codewords, budget is 2^{log2_budget}")]
    BudgetExceeded {
        /// log₂ of the required codeword count.
        log2_needed: u32,
        /// log₂ of the allowed codeword count.
        log2_budget: u32,
    },
    /// A quantum operation was applied to a non-self-orthogonal code.
    #[error("code is not self-orthogonal under the trace inner product")]
    NotSelfOrthogonal,
    /// A linear-code operation was applied to a nonlinear code.
    #[error("code is not GF(4)-linear")]
    NotLinear,
    /// The dual-distribution transform produced a non-integer, meaning
    /// the (distribution, rank) pair cannot come from a real code.
    #[error("dual distribution is not integral for the given rank")]
    NonIntegralTransform,
    /// A brute-force group scan was requested beyond its length limit.
    #[error("length {n} exceeds the brute-force equivalence limit {limit}")]
    LengthTooLarge {
        /// The requested length.
        n: usize,
        /// The configured limit.
        limit: usize,
    },
    /// A construction's input requirement failed; the message names it.
    #[error("construction precondition violated: {0}")]
    Precondition(&'static str),
    /// No word of the requested weight exists where one was required.
    #[error("no dual word of weight {0} exists")]
    NoSuchWord(usize),
    /// A filesystem failure while reading or writing a code file.
    #[error("i/o error: {0}")]
    Io(String),
}

/// An enumeration budget: operations that walk all 2^r codewords of a
/// code refuse to run when r exceeds this bound.
///
/// The default allows 2^28 codewords.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Budget {
    log2: u32,
}

impl Budget {
    /// A budget of 2^log2 codewords.
    pub fn log2(log2: u32) -> Budget {
        Budget { log2 }
    }

    /// The bound as a log₂.
    pub fn get_log2(self) -> u32 {
        self.log2
    }

    /// Errors if 2^needed exceeds the budget.
    pub fn check(self, needed: u32) -> Result<(), Error> {
        if needed > self.log2 {
            Err(Error::BudgetExceeded {
                log2_needed: needed,
                log2_budget: self.log2,
            })
        } else {
            Ok(())
        }
    }
}

impl Default for Budget {
    fn default() -> Budget {
        Budget { log2: 28 }
    }
}
