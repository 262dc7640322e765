use thiserror::Error;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("lex error at {pos}: unexpected character {ch:?}")]
pub struct LexError {
    pub pos: usize,
    pub ch: char,
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("parse error at {pos}: expected {expected}")]
    Syntax { pos: usize, expected: String },
    #[error("arity error at {pos}: {func} takes {expected} argument, got {found}")]
    Arity {
        pos: usize,
        func: &'static str,
        expected: usize,
        found: usize,
    },
}

impl ParseError {
    pub fn pos(&self) -> usize {
        match self {
            ParseError::Syntax { pos, .. } | ParseError::Arity { pos, .. } => *pos,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EvalErrorKind {
    /// Division by (or `inv` of) Λ or a zero divisor.
    NotInvertible,
    TypeError(String),
    /// Overflow to an infinite or NaN component.
    NonFinite,
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("evaluation error at {pos}: {}", describe(.kind))]
pub struct EvalError {
    pub pos: usize,
    pub kind: EvalErrorKind,
}

fn describe(kind: &EvalErrorKind) -> String {
    match kind {
        EvalErrorKind::NotInvertible => "NotInvertible: divisor is zero or a zero divisor".into(),
        EvalErrorKind::TypeError(msg) => format!("TypeError: {msg}"),
        EvalErrorKind::NonFinite => "NonFinite: result overflowed".into(),
    }
}

/// Any failure while turning a line of input into a value.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum CalcError {
    #[error(transparent)]
    Lex(#[from] LexError),
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Eval(#[from] EvalError),
}

impl CalcError {
    pub fn pos(&self) -> usize {
        match self {
            CalcError::Lex(e) => e.pos,
            CalcError::Parse(e) => e.pos(),
            CalcError::Eval(e) => e.pos,
        }
    }

    /// Process exit code: 1 for evaluation errors, 2 for lex/parse errors.
    pub fn exit_code(&self) -> i32 {
        match self {
            CalcError::Eval(_) => 1,
            CalcError::Lex(_) | CalcError::Parse(_) => 2,
        }
    }
}
