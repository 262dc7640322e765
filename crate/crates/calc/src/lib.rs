//! A small expression language over ternions, with a CLI front end.
//!
//! ```
//! use ternion_calc::{eval_str, format_result, OutputMode};
//!
//! let r = eval_str("iG*iG + oneG", 1e-9).unwrap();
//! assert_eq!(format_result(&r, OutputMode::Tuple), "(0, 0, 0)");
//! ```

pub mod cli;
pub mod error;
pub mod eval;
pub mod format;
pub mod lexer;
pub mod parser;

pub use error::{CalcError, EvalError, EvalErrorKind, LexError, ParseError};
pub use eval::{evaluate, EvalResult};
pub use format::{format_json_line, format_number, format_result, OutputMode};
pub use lexer::{tokenize, Token, TokenKind};
pub use parser::{parse, Expr, ExprNode};

/// Default relative tolerance for invertibility decisions.
pub const DEFAULT_TOL: f64 = ternion::DEFAULT_REL_TOL;

/// Tokenize, parse and evaluate `input`.
pub fn eval_str(input: &str, rel_tol: f64) -> Result<EvalResult, CalcError> {
    let tokens = tokenize(input)?;
    let expr = parse(&tokens)?;
    Ok(evaluate(&expr, rel_tol)?)
}
