//! Tree-walking evaluator.

use ternion::seminorm::abs_value;
use ternion::structure::{self, proj_d, proj_g, reduce_mod_d, split};
use ternion::{AlgebraError, SplitForm, Ternion};

use crate::error::{EvalError, EvalErrorKind};
use crate::parser::{BinaryOp, Expr, ExprNode, Func, UnaryOp};

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum EvalResult {
    TernionValue(Ternion),
    RealValue(f64),
    SplitValue(SplitForm),
}

impl EvalResult {
    fn type_name(&self) -> &'static str {
        match self {
            EvalResult::TernionValue(_) => "ternion",
            EvalResult::RealValue(_) => "real",
            EvalResult::SplitValue(_) => "split",
        }
    }

    fn is_finite(&self) -> bool {
        match self {
            EvalResult::TernionValue(t) => t.is_finite(),
            EvalResult::RealValue(r) => r.is_finite(),
            EvalResult::SplitValue(s) => s.is_finite(),
        }
    }
}

use EvalResult::{RealValue, SplitValue, TernionValue};

/// Evaluate `node`. `rel_tol` is the relative tolerance used to decide
/// invertibility: `x` is treated as a zero divisor when it is within
/// `rel_tol · max(1, ‖x‖∞)` of 𝔻 ∪ 𝔾.
pub fn evaluate(node: &Expr, rel_tol: f64) -> Result<EvalResult, EvalError> {
    let pos = node.pos;
    let fail = |kind| EvalError { pos, kind };
    let type_error = |msg: String| fail(EvalErrorKind::TypeError(msg));

    let value = match &node.node {
        ExprNode::Literal(t) => TernionValue(*t),
        ExprNode::RealLiteral(r) => RealValue(*r),
        ExprNode::ConstRef(c) => TernionValue(c.value()),
        ExprNode::Triple(parts) => {
            let mut c = [0.0; 3];
            for (slot, part) in c.iter_mut().zip(parts.iter()) {
                match evaluate(part, rel_tol)? {
                    RealValue(r) => *slot = r,
                    other => {
                        return Err(EvalError {
                            pos: part.pos,
                            kind: EvalErrorKind::TypeError(format!(
                                "triple components must be real, found {}",
                                other.type_name()
                            )),
                        })
                    }
                }
            }
            TernionValue(Ternion::from_array(c))
        }
        ExprNode::Unary(UnaryOp::Neg, inner) => match evaluate(inner, rel_tol)? {
            TernionValue(t) => TernionValue(-t),
            RealValue(r) => RealValue(-r),
            SplitValue(_) => return Err(type_error("cannot negate a split value".into())),
        },
        ExprNode::Binary(op, l, r) => {
            let (a, b) = (evaluate(l, rel_tol)?, evaluate(r, rel_tol)?);
            binary(*op, a, b, rel_tol).map_err(fail)?
        }
        ExprNode::Power(base, n) => match evaluate(base, rel_tol)? {
            TernionValue(t) => TernionValue(t.powi(*n)),
            RealValue(r) => RealValue(match i32::try_from(*n) {
                Ok(k) => r.powi(k),
                Err(_) => r.powf(*n as f64),
            }),
            SplitValue(_) => {
                return Err(type_error("cannot raise a split value to a power".into()))
            }
        },
        ExprNode::Call(func, args) => {
            let arg = evaluate(&args[0], rel_tol)?;
            let TernionValue(x) = arg else {
                return Err(type_error(format!(
                    "{} expects a ternion, found {}",
                    func.name(),
                    arg.type_name()
                )));
            };
            match func {
                Func::Conj => TernionValue(x.conj()),
                Func::Norm => RealValue(abs_value(x)),
                Func::A => RealValue(x.quad_forms().a),
                Func::B => RealValue(x.quad_forms().b),
                Func::ProjD => TernionValue(proj_d(x)),
                Func::ProjG => TernionValue(proj_g(x)),
                Func::Inv => TernionValue(invert(x, rel_tol).map_err(fail)?),
                Func::Reduce => TernionValue(reduce_mod_d(x)),
                Func::Split => SplitValue(split(x)),
            }
        }
    };
    if value.is_finite() {
        Ok(value)
    } else {
        Err(fail(EvalErrorKind::NonFinite))
    }
}

fn invert(x: Ternion, rel_tol: f64) -> Result<Ternion, EvalErrorKind> {
    structure::invert(x, x.scaled_tol(rel_tol)).map_err(|e| match e {
        AlgebraError::NonFinite => EvalErrorKind::NonFinite,
        _ => EvalErrorKind::NotInvertible,
    })
}

fn binary(
    op: BinaryOp,
    a: EvalResult,
    b: EvalResult,
    rel_tol: f64,
) -> Result<EvalResult, EvalErrorKind> {
    let mismatch = |what: &str| {
        EvalErrorKind::TypeError(format!(
            "cannot {what} {} and {}",
            a.type_name(),
            b.type_name()
        ))
    };
    Ok(match (op, a, b) {
        (_, SplitValue(_), _) | (_, _, SplitValue(_)) => {
            return Err(mismatch("combine"));
        }
        (BinaryOp::Add, RealValue(x), RealValue(y)) => RealValue(x + y),
        (BinaryOp::Add, TernionValue(x), TernionValue(y)) => TernionValue(x + y),
        (BinaryOp::Add, ..) => return Err(mismatch("add")),
        (BinaryOp::Sub, RealValue(x), RealValue(y)) => RealValue(x - y),
        (BinaryOp::Sub, TernionValue(x), TernionValue(y)) => TernionValue(x - y),
        (BinaryOp::Sub, ..) => return Err(mismatch("subtract")),
        (BinaryOp::Mul, RealValue(x), RealValue(y)) => RealValue(x * y),
        (BinaryOp::Mul, RealValue(k), TernionValue(t))
        | (BinaryOp::Mul, TernionValue(t), RealValue(k)) => TernionValue(t.scale(k)),
        (BinaryOp::Mul, TernionValue(x), TernionValue(y)) => TernionValue(x * y),
        (BinaryOp::Div, _, RealValue(0.0)) => return Err(EvalErrorKind::NotInvertible),
        (BinaryOp::Div, RealValue(x), RealValue(y)) => RealValue(x / y),
        (BinaryOp::Div, TernionValue(x), RealValue(y)) => TernionValue(x.scale(1.0 / y)),
        (BinaryOp::Div, RealValue(k), TernionValue(y)) => {
            TernionValue(invert(y, rel_tol)?.scale(k))
        }
        (BinaryOp::Div, TernionValue(x), TernionValue(y)) => TernionValue(x * invert(y, rel_tol)?),
    })
}
