//! Translation words and the pyramid of isotopes they connect.

pub mod pyramid;
pub mod word;

pub use pyramid::*;
pub use word::{word_length, Letter, TranslationWord, WordLength, WordTriple};
