//! Webs as canonical combinatorial maps, their algebra and reduction.

mod graph;
mod reduce;
mod sum;
mod word;

pub use graph::{Face, VertexKind, Web, WebError};
pub(crate) use graph::Builder;
pub use reduce::{reduce_web, Reduced, Reducer, Strategy};
pub use sum::WebSum;
pub use word::{Sign, Word, WordParseError};
