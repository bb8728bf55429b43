//! The three-instruction register machine: `INC`, `DEC` (monus), and
//! `IFNZ ... GOTO ...`, operating on variables holding naturals.
//!
//! Conventions: inputs arrive in `X1..Xn`, the output is read from `Y`,
//! every other variable starts at 0. Falling past the last instruction or
//! jumping to a label no instruction carries halts the machine. Runs are
//! fuel-bounded; exhausting fuel is a normal outcome, not an error.

use std::collections::BTreeMap;
use std::fmt;

/// Opcode of a machine instruction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum InstructionKind {
    Increment,
    Decrement,
    BranchNonzero,
}

/// One instruction, optionally carrying a label of its own.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Instruction {
    pub kind: InstructionKind,
    pub variable: String,
    /// Jump target; present exactly when `kind` is `BranchNonzero`.
    pub target: Option<String>,
    /// Label attached to this instruction, if any.
    pub label: Option<String>,
}

impl Instruction {
    pub fn inc(variable: &str) -> Self {
        Instruction {
            kind: InstructionKind::Increment,
            variable: variable.to_string(),
            target: None,
            label: None,
        }
    }

    pub fn dec(variable: &str) -> Self {
        Instruction {
            kind: InstructionKind::Decrement,
            variable: variable.to_string(),
            target: None,
            label: None,
        }
    }

    pub fn ifnz(variable: &str, target: &str) -> Self {
        Instruction {
            kind: InstructionKind::BranchNonzero,
            variable: variable.to_string(),
            target: Some(target.to_string()),
            label: None,
        }
    }

    pub fn with_label(mut self, label: &str) -> Self {
        self.label = Some(label.to_string());
        self
    }
}

/// An ordered sequence of instructions with pairwise-distinct labels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Program {
    instructions: Vec<Instruction>,
    label_index: BTreeMap<String, usize>,
}

/// Error constructing or parsing a program.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ProgramError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("line {line}: duplicate label {label}")]
    DuplicateLabel { line: usize, label: String },
}

impl Program {
    /// Build a program, checking the distinct-labels invariant. `lines`
    /// gives a source line per instruction for error reporting; constructed
    /// programs pass an empty slice and report position as index + 1.
    pub fn new(instructions: Vec<Instruction>) -> Result<Program, ProgramError> {
        let mut label_index = BTreeMap::new();
        for (i, instr) in instructions.iter().enumerate() {
            if let Some(label) = &instr.label {
                if label_index.insert(label.clone(), i).is_some() {
                    return Err(ProgramError::DuplicateLabel {
                        line: i + 1,
                        label: label.clone(),
                    });
                }
            }
        }
        Ok(Program {
            instructions,
            label_index,
        })
    }

    pub fn instructions(&self) -> &[Instruction] {
        &self.instructions
    }

    pub fn len(&self) -> usize {
        self.instructions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.instructions.is_empty()
    }

    /// Index of the instruction carrying `label`, if any.
    pub fn resolve_label(&self, label: &str) -> Option<usize> {
        self.label_index.get(label).copied()
    }
}

/// Program counter: either an instruction index or halted.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Pc {
    At(usize),
    Halted,
}

/// A snapshot of execution: variable values, program counter, step count.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MachineState {
    pub values: BTreeMap<String, u64>,
    pub pc: Pc,
    pub steps: u64,
}

impl MachineState {
    /// Initial state: `inputs` bound to `X1..Xn`, pc at the first
    /// instruction (or halted immediately for the empty program).
    pub fn initial(program: &Program, inputs: &[u64]) -> MachineState {
        let mut values = BTreeMap::new();
        for (i, &v) in inputs.iter().enumerate() {
            values.insert(format!("X{}", i + 1), v);
        }
        let pc = if program.is_empty() { Pc::Halted } else { Pc::At(0) };
        MachineState { values, pc, steps: 0 }
    }

    /// Value of a variable; unmentioned variables read as 0.
    pub fn value(&self, variable: &str) -> u64 {
        self.values.get(variable).copied().unwrap_or(0)
    }
}

/// How a run ended.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RunStatus {
    Halted,
    FuelExhausted,
}

/// Result of a fuel-bounded run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunOutcome {
    pub status: RunStatus,
    /// Value of `Y` at termination.
    pub output: u64,
    pub final_state: MachineState,
}

/// Execute one instruction. Panics if the state is already halted.
pub fn step(program: &Program, state: &MachineState) -> MachineState {
    let pc = match state.pc {
        Pc::At(i) => i,
        Pc::Halted => panic!("step on a halted machine"),
    };
    let instr = &program.instructions()[pc];
    let mut values = state.values.clone();
    let current = values.get(&instr.variable).copied().unwrap_or(0);
    let next_pc = match instr.kind {
        InstructionKind::Increment => {
            values.insert(instr.variable.clone(), current + 1);
            pc + 1
        }
        InstructionKind::Decrement => {
            values.insert(instr.variable.clone(), current.saturating_sub(1));
            pc + 1
        }
        InstructionKind::BranchNonzero => {
            if current != 0 {
                let target = instr.target.as_deref().expect("branch without target");
                match program.resolve_label(target) {
                    Some(i) => i,
                    // Jump to an undefined label halts.
                    None => program.len(),
                }
            } else {
                pc + 1
            }
        }
    };
    let pc = if next_pc >= program.len() { Pc::Halted } else { Pc::At(next_pc) };
    MachineState {
        values,
        pc,
        steps: state.steps + 1,
    }
}

/// Run `program` on `inputs` for at most `fuel` steps.
pub fn run(program: &Program, inputs: &[u64], fuel: u64) -> RunOutcome {
    let mut state = MachineState::initial(program, inputs);
    while state.pc != Pc::Halted && state.steps < fuel {
        state = step(program, &state);
    }
    let status = if state.pc == Pc::Halted {
        RunStatus::Halted
    } else {
        RunStatus::FuelExhausted
    };
    RunOutcome {
        status,
        output: state.value("Y"),
        final_state: state,
    }
}

fn is_token(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric())
}

/// Parse program text: one instruction per line, optional `LABEL:` prefix,
/// `#` comments, blank lines ignored.
pub fn parse_program(text: &str) -> Result<Program, ProgramError> {
    let mut instructions = Vec::new();
    let mut label_lines: BTreeMap<String, usize> = BTreeMap::new();
    for (lineno, raw) in text.lines().enumerate() {
        let lineno = lineno + 1;
        let line = match raw.find('#') {
            Some(i) => &raw[..i],
            None => raw,
        };
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let syntax = |message: String| ProgramError::Syntax { line: lineno, message };
        let (label, rest) = match line.find(':') {
            Some(i) => {
                let label = line[..i].trim();
                if !is_token(label) {
                    return Err(syntax(format!("bad label {label:?}")));
                }
                (Some(label.to_string()), line[i + 1..].trim())
            }
            None => (None, line),
        };
        if let Some(label) = &label {
            if let Some(first) = label_lines.insert(label.clone(), lineno) {
                return Err(ProgramError::DuplicateLabel {
                    line: first.max(lineno),
                    label: label.clone(),
                });
            }
        }
        let tokens: Vec<&str> = rest.split_whitespace().collect();
        let mut instr = match tokens.as_slice() {
            ["INC", var] if is_token(var) => Instruction::inc(var),
            ["DEC", var] if is_token(var) => Instruction::dec(var),
            ["IFNZ", var, "GOTO", target] if is_token(var) && is_token(target) => {
                Instruction::ifnz(var, target)
            }
            _ => return Err(syntax(format!("cannot parse instruction {rest:?}"))),
        };
        instr.label = label;
        instructions.push(instr);
    }
    Program::new(instructions)
}

/// Canonical text for a program; `parse_program(render_program(p)) == p`.
pub fn render_program(program: &Program) -> String {
    let max_label = program
        .instructions()
        .iter()
        .filter_map(|i| i.label.as_ref().map(|l| l.len()))
        .max();
    let mut out = String::new();
    for instr in program.instructions() {
        match (max_label, &instr.label) {
            (Some(w), Some(label)) => {
                out.push_str(label);
                out.push(':');
                for _ in 0..w + 2 - label.len() {
                    out.push(' ');
                }
            }
            (Some(w), None) => {
                for _ in 0..w + 3 {
                    out.push(' ');
                }
            }
            (None, _) => {}
        }
        match instr.kind {
            InstructionKind::Increment => {
                out.push_str("INC ");
                out.push_str(&instr.variable);
            }
            InstructionKind::Decrement => {
                out.push_str("DEC ");
                out.push_str(&instr.variable);
            }
            InstructionKind::BranchNonzero => {
                out.push_str("IFNZ ");
                out.push_str(&instr.variable);
                out.push_str(" GOTO ");
                out.push_str(instr.target.as_deref().unwrap_or("?"));
            }
        }
        out.push('\n');
    }
    out
}

impl fmt::Display for Program {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render_program(self))
    }
}

/// Reference program computing `Y = X1 + X2`.
pub const ADD_PROGRAM: &str = include_str!("../../fixtures/add.prog");

/// Reference program computing `Y = X1 * X2`.
pub const MUL_PROGRAM: &str = include_str!("../../fixtures/mul.prog");
