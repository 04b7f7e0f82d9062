//! Oriented tangle diagrams as slice sequences and their skein evaluation.

mod colored;
mod diagram;
mod evaluate;
mod print;

pub use colored::{
    cable, colored_closed, colored_invariant, colored_invariant_at, components,
    default_insertion_points, ColoredError, Components,
};
pub use diagram::{CrossingCounts, Over, ParseError, Slice, SliceError, TangleDiagram};
pub use evaluate::{
    crossing_weights, evaluate, evaluate_closed, evaluate_streamed, evaluate_with,
    writhe_correction_check,
};
pub use print::web_to_diagram;
