pub mod dioph;
pub mod machine;
pub mod numbers;
pub mod reductions;
pub mod sets;
pub mod topo;

pub use dioph::{DiophantineFamily, IntPolynomial, Monomial, SearchResult, SearchStrategy};
pub use machine::{Instruction, MachineState, Program, RunOutcome, RunStatus};
pub use reductions::{Coloring, Graph, GuardViolation, Sentence};
pub use sets::{DecidablePredicate, Enumerator, Pull};
pub use topo::{HomologyResult, IntegerMatrix, Presentation, SimplicialComplex};
