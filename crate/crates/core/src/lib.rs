//! Positional-extraction random number generation.
//!
//! The generators in this crate produce symbol streams without arithmetic on
//! the symbols themselves: a *mask* string is indexed by symbol value, the
//! resulting position lists are used to extract parts of a *source* string,
//! and the parts are attached to form the next mask (which is also the
//! emitted block). A *chooser* stream selects which symbol-permuted variant
//! of the source is read at each step.
//!
//! Modules:
//!
//! - [`seq`] — alphabet-generic symbol strings, position indexing,
//!   extraction, attachment, and symbol permutations.
//! - [`algo1`] — the one-shot binary extractor.
//! - [`algo2`] — the iterative binary generator with halt/cycle detection,
//!   gain accounting, and input recycling.
//! - [`dualmask`] — two masks applied simultaneously, partitioning a source
//!   into four streams.
//! - [`nary`] — the radix-N generalization driven by a factorial-number-system
//!   chooser over the N! symbol-permuted sources.
//! - [`cascade`] — the bootstrap pipeline that feeds radix-j chooser streams
//!   from lower-radix generators, grounded in a binary generator.
//! - [`stats`] — the statistical verification battery.
//! - [`seedio`] — seed-file parsing, serialization, and bit packing.

pub mod algo1;
pub mod algo2;
pub mod cascade;
pub mod dualmask;
pub mod nary;
pub mod seedio;
pub mod seq;
pub mod stats;
mod stream;

pub use seq::{PositionIndex, SymbolPermutation, SymbolString};
pub use stream::SymbolStream;
