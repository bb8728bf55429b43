//! Gödel numbering of register-machine programs.
//!
//! A program maps to `pair(count, tuple(instruction codes))`; each
//! instruction to the 4-tuple `(kind, variable index, target index, label
//! code)`. Indices come from per-program first-occurrence symbol tables, so
//! the encoding is invariant under renaming, and decoding names symbols
//! canonically (`V0, V1, ...` and `L0, L1, ...`). Every natural decodes to
//! some program: kinds are read modulo 3 and a repeated label keeps its
//! first occurrence only.

use std::collections::HashMap;

use num_bigint::BigUint;
use num_traits::ToPrimitive;

use crate::machine::{Instruction, InstructionKind, Program};
use crate::sets::{pair_big, tuple_decode_big, tuple_encode_big, unpair_big};

struct SymbolTable {
    indices: HashMap<String, u64>,
}

impl SymbolTable {
    fn new() -> SymbolTable {
        SymbolTable {
            indices: HashMap::new(),
        }
    }

    fn index(&mut self, name: &str) -> u64 {
        let next = self.indices.len() as u64;
        *self.indices.entry(name.to_string()).or_insert(next)
    }
}

fn kind_code(kind: InstructionKind) -> u64 {
    match kind {
        InstructionKind::Increment => 0,
        InstructionKind::Decrement => 1,
        InstructionKind::BranchNonzero => 2,
    }
}

/// Injective (up to renaming) code of a program.
pub fn encode_program(p: &Program) -> BigUint {
    let mut vars = SymbolTable::new();
    let mut labels = SymbolTable::new();
    let mut codes = Vec::with_capacity(p.len());
    for instr in p.instructions() {
        // Scan order fixes the tables: attached label first, then target.
        let label_code = match &instr.label {
            Some(l) => labels.index(l) + 1,
            None => 0,
        };
        let target_code = match &instr.target {
            Some(t) => labels.index(t),
            None => 0,
        };
        let var_code = vars.index(&instr.variable);
        codes.push(tuple_encode_big(&[
            BigUint::from(kind_code(instr.kind)),
            BigUint::from(var_code),
            BigUint::from(target_code),
            BigUint::from(label_code),
        ]));
    }
    pair_big(&BigUint::from(p.len()), &tuple_encode_big(&codes))
}

/// Total inverse: every natural is the code of some program, and
/// `decode_program(encode_program(p))` equals `p` up to canonical renaming.
pub fn decode_program(n: &BigUint) -> Program {
    let (count, body) = unpair_big(n);
    let count = count.to_usize().expect("program length beyond address space");
    if count == 0 {
        return Program::new(vec![]).unwrap();
    }
    let codes = tuple_decode_big(&body, count);
    let mut instructions = Vec::with_capacity(count);
    let mut seen_labels: Vec<u64> = Vec::new();
    for code in &codes {
        let fields = tuple_decode_big(code, 4);
        let kind = match (&fields[0] % 3u32).to_u64().unwrap() {
            0 => InstructionKind::Increment,
            1 => InstructionKind::Decrement,
            _ => InstructionKind::BranchNonzero,
        };
        let variable = format!("V{}", &fields[1]);
        let target = if kind == InstructionKind::BranchNonzero {
            Some(format!("L{}", &fields[2]))
        } else {
            None
        };
        let label = match fields[3].to_u64() {
            Some(0) | None => None,
            Some(l) => {
                // Keep only the first occurrence of a label index.
                if seen_labels.contains(&(l - 1)) {
                    None
                } else {
                    seen_labels.push(l - 1);
                    Some(format!("L{}", l - 1))
                }
            }
        };
        instructions.push(Instruction {
            kind,
            variable,
            target,
            label,
        });
    }
    Program::new(instructions).unwrap()
}

/// Rename variables to `V0, V1, ...` and labels to `L0, L1, ...` by first
/// occurrence; the canonical representative of the alpha-equivalence class.
pub fn canonicalize_program(p: &Program) -> Program {
    let mut vars = SymbolTable::new();
    let mut labels = SymbolTable::new();
    let mut instructions = Vec::with_capacity(p.len());
    for instr in p.instructions() {
        let label = instr
            .label
            .as_ref()
            .map(|l| format!("L{}", labels.index(l)));
        let target = instr
            .target
            .as_ref()
            .map(|t| format!("L{}", labels.index(t)));
        let variable = format!("V{}", vars.index(&instr.variable));
        instructions.push(Instruction {
            kind: instr.kind,
            variable,
            target,
            label,
        });
    }
    Program::new(instructions).unwrap()
}
