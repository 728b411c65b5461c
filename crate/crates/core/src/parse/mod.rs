//! Compound recognition, composition-expression parsing, coefficient
//! normalization and unit resolution.

pub mod expr;
pub mod grammar;
pub mod lexicon;
pub mod normalize;
pub mod unit;

pub use expr::{BinOp, Expr, ExprError};
pub use grammar::{parse_composition, CompositionNode, ParseError, ParsedComposition, PatternTag};
pub use lexicon::{lex_compounds, CompoundLexicon, ELEMENT_SYMBOLS};
pub use normalize::{normalize, NormalizeError, NormalizedComposition};
pub use unit::{resolve_unit, UnitResolution};
