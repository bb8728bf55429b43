//! Gödel-numbering front ends: programs as naturals, a concrete formal
//! theory (the MIU rewriting system) with its theorem set made listable,
//! and the four-color predicate over small planar graphs.

mod fourcolor;
mod godel;
mod miu;

pub use fourcolor::{
    enumerate_planar_graphs, four_colorable, fourcolor_counterexample_enumerator,
    is_planar, isomorphism_classes, p_of_n, parse_graph, render_graph, Coloring,
    CounterexampleEnumerator, Graph, GraphError, GuardViolation,
};
pub use godel::{canonicalize_program, decode_program, encode_program};
pub use miu::{
    index_of_sentence, miu_theorems, miu_theorems_capped, sentence_of_index,
    theorem_set_enumerator, Sentence, SentenceError, TheoremEnumerator,
    DEFAULT_LENGTH_CAP,
};
