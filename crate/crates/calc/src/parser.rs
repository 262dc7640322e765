//! Recursive-descent parser.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := factor (('*' | '/') factor)*
//! factor := unary ('^' integer)?
//! unary  := '-' unary | atom
//! atom   := number | ident | ident '(' expr ')'
//!         | '(' expr ',' expr ',' expr ')' | '(' expr ')'
//! ```

use ternion::sigma::J;
use ternion::structure::{I_G, ONE_D, ONE_G};
use ternion::Ternion;

use crate::error::ParseError;
use crate::lexer::{Token, TokenKind};

/// Trees deeper than this are rejected so evaluation cannot exhaust the stack.
pub const MAX_DEPTH: u32 = 256;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Constant {
    One,
    U,
    V,
    Delta,
    J,
    OneD,
    OneG,
    IG,
    Zero,
}

impl Constant {
    pub const ALL: [Constant; 9] = [
        Constant::One,
        Constant::U,
        Constant::V,
        Constant::Delta,
        Constant::J,
        Constant::OneD,
        Constant::OneG,
        Constant::IG,
        Constant::Zero,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Constant::One => "one",
            Constant::U => "u",
            Constant::V => "v",
            Constant::Delta => "delta",
            Constant::J => "j",
            Constant::OneD => "oneD",
            Constant::OneG => "oneG",
            Constant::IG => "iG",
            Constant::Zero => "zero",
        }
    }

    pub fn from_name(name: &str) -> Option<Constant> {
        Constant::ALL.into_iter().find(|c| c.name() == name)
    }

    pub fn value(self) -> Ternion {
        match self {
            Constant::One => Ternion::ONE,
            Constant::U => Ternion::U,
            Constant::V => Ternion::V,
            Constant::Delta => Ternion::DELTA,
            Constant::J => J,
            Constant::OneD => ONE_D,
            Constant::OneG => ONE_G,
            Constant::IG => I_G,
            Constant::Zero => Ternion::ZERO,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Func {
    Conj,
    Norm,
    A,
    B,
    ProjD,
    ProjG,
    Inv,
    Reduce,
    Split,
}

impl Func {
    pub const ALL: [Func; 9] = [
        Func::Conj,
        Func::Norm,
        Func::A,
        Func::B,
        Func::ProjD,
        Func::ProjG,
        Func::Inv,
        Func::Reduce,
        Func::Split,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Func::Conj => "conj",
            Func::Norm => "norm",
            Func::A => "A",
            Func::B => "B",
            Func::ProjD => "projD",
            Func::ProjG => "projG",
            Func::Inv => "inv",
            Func::Reduce => "reduce",
            Func::Split => "split",
        }
    }

    pub fn from_name(name: &str) -> Option<Func> {
        Func::ALL.into_iter().find(|f| f.name() == name)
    }

    pub fn arity(self) -> usize {
        1
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum UnaryOp {
    Neg,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BinaryOp {
    Add,
    Sub,
    Mul,
    Div,
}

#[derive(Clone, Debug, PartialEq)]
pub enum ExprNode {
    /// A triple whose three components are numeric literals.
    Literal(Ternion),
    RealLiteral(f64),
    ConstRef(Constant),
    /// A triple of arbitrary real-valued expressions.
    Triple(Box<[Expr; 3]>),
    Unary(UnaryOp, Box<Expr>),
    Binary(BinaryOp, Box<Expr>, Box<Expr>),
    Power(Box<Expr>, u64),
    Call(Func, Vec<Expr>),
}

/// A node with the character offset it was parsed from (the operator for
/// unary/binary nodes, the function name for calls).
#[derive(Clone, Debug, PartialEq)]
pub struct Expr {
    pub node: ExprNode,
    pub pos: usize,
    depth: u32,
}

impl Expr {
    fn new(node: ExprNode, pos: usize) -> Result<Expr, ParseError> {
        let child_depth = match &node {
            ExprNode::Literal(_) | ExprNode::RealLiteral(_) | ExprNode::ConstRef(_) => 0,
            ExprNode::Triple(c) => c.iter().map(|e| e.depth).max().unwrap_or(0),
            ExprNode::Unary(_, c) | ExprNode::Power(c, _) => c.depth,
            ExprNode::Binary(_, l, r) => l.depth.max(r.depth),
            ExprNode::Call(_, args) => args.iter().map(|e| e.depth).max().unwrap_or(0),
        };
        let depth = child_depth + 1;
        if depth > MAX_DEPTH {
            return Err(too_deep(pos));
        }
        Ok(Expr { node, pos, depth })
    }

    pub fn depth(&self) -> u32 {
        self.depth
    }
}

fn too_deep(pos: usize) -> ParseError {
    ParseError::Syntax {
        pos,
        expected: format!("an expression nested at most {MAX_DEPTH} levels deep"),
    }
}

/// Parse a full token list into a single expression.
pub fn parse(tokens: &[Token]) -> Result<Expr, ParseError> {
    let end = tokens
        .last()
        .map(|t| t.pos + t.text.chars().count())
        .unwrap_or(0);
    let mut p = Parser {
        tokens,
        at: 0,
        end,
        nesting: 0,
    };
    let e = p.expr()?;
    if let Some(t) = p.peek() {
        return Err(ParseError::Syntax {
            pos: t.pos,
            expected: "an operator or end of input".into(),
        });
    }
    Ok(e)
}

struct Parser<'a> {
    tokens: &'a [Token],
    at: usize,
    end: usize,
    nesting: u32,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&'a Token> {
        self.tokens.get(self.at)
    }

    fn peek_kind(&self) -> Option<TokenKind> {
        self.peek().map(|t| t.kind)
    }

    fn pos(&self) -> usize {
        self.peek().map_or(self.end, |t| t.pos)
    }

    fn bump(&mut self) -> &'a Token {
        let t = &self.tokens[self.at];
        self.at += 1;
        t
    }

    fn expect(&mut self, kind: TokenKind, what: &str) -> Result<&'a Token, ParseError> {
        if self.peek_kind() == Some(kind) {
            Ok(self.bump())
        } else {
            Err(ParseError::Syntax {
                pos: self.pos(),
                expected: what.into(),
            })
        }
    }

    fn enter(&mut self) -> Result<(), ParseError> {
        self.nesting += 1;
        if self.nesting > MAX_DEPTH {
            return Err(too_deep(self.pos()));
        }
        Ok(())
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        self.enter()?;
        let mut lhs = self.term()?;
        while let Some(op @ (TokenKind::Plus | TokenKind::Minus)) = self.peek_kind() {
            let pos = self.bump().pos;
            let rhs = self.term()?;
            let op = if op == TokenKind::Plus {
                BinaryOp::Add
            } else {
                BinaryOp::Sub
            };
            lhs = Expr::new(ExprNode::Binary(op, Box::new(lhs), Box::new(rhs)), pos)?;
        }
        self.nesting -= 1;
        Ok(lhs)
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.factor()?;
        while let Some(op @ (TokenKind::Star | TokenKind::Slash)) = self.peek_kind() {
            let pos = self.bump().pos;
            let rhs = self.factor()?;
            let op = if op == TokenKind::Star {
                BinaryOp::Mul
            } else {
                BinaryOp::Div
            };
            lhs = Expr::new(ExprNode::Binary(op, Box::new(lhs), Box::new(rhs)), pos)?;
        }
        Ok(lhs)
    }

    fn factor(&mut self) -> Result<Expr, ParseError> {
        let base = self.unary()?;
        if self.peek_kind() != Some(TokenKind::Caret) {
            return Ok(base);
        }
        let pos = self.bump().pos;
        let exp = self.expect(TokenKind::Number, "a nonnegative integer exponent")?;
        let n = if exp.text.bytes().all(|b| b.is_ascii_digit()) {
            exp.text.parse::<u64>().ok()
        } else {
            None
        };
        let n = n.ok_or_else(|| ParseError::Syntax {
            pos: exp.pos,
            expected: "a nonnegative integer exponent".into(),
        })?;
        Expr::new(ExprNode::Power(Box::new(base), n), pos)
    }

    fn unary(&mut self) -> Result<Expr, ParseError> {
        if self.peek_kind() == Some(TokenKind::Minus) {
            let pos = self.bump().pos;
            self.enter()?;
            let inner = self.unary()?;
            self.nesting -= 1;
            return Expr::new(ExprNode::Unary(UnaryOp::Neg, Box::new(inner)), pos);
        }
        self.atom()
    }

    fn atom(&mut self) -> Result<Expr, ParseError> {
        let Some(tok) = self.peek() else {
            return Err(ParseError::Syntax {
                pos: self.end,
                expected: "an expression".into(),
            });
        };
        match tok.kind {
            TokenKind::Number => {
                self.bump();
                let value: f64 = tok.text.parse().map_err(|_| ParseError::Syntax {
                    pos: tok.pos,
                    expected: "a number".into(),
                })?;
                Expr::new(ExprNode::RealLiteral(value), tok.pos)
            }
            TokenKind::Ident => {
                self.bump();
                if self.peek_kind() == Some(TokenKind::LParen) {
                    self.call(tok)
                } else if let Some(c) = Constant::from_name(&tok.text) {
                    Expr::new(ExprNode::ConstRef(c), tok.pos)
                } else if Func::from_name(&tok.text).is_some() {
                    Err(ParseError::Syntax {
                        pos: self.pos(),
                        expected: format!("'(' after {}", tok.text),
                    })
                } else {
                    Err(ParseError::Syntax {
                        pos: tok.pos,
                        expected: "a known constant or function name".into(),
                    })
                }
            }
            TokenKind::LParen => self.parenthesized(),
            _ => Err(ParseError::Syntax {
                pos: tok.pos,
                expected: "an expression".into(),
            }),
        }
    }

    fn call(&mut self, name: &Token) -> Result<Expr, ParseError> {
        let func = Func::from_name(&name.text).ok_or_else(|| ParseError::Syntax {
            pos: name.pos,
            expected: "a known function name".into(),
        })?;
        self.bump(); // '('
        let mut args = Vec::new();
        if self.peek_kind() != Some(TokenKind::RParen) {
            args.push(self.expr()?);
            while self.peek_kind() == Some(TokenKind::Comma) {
                self.bump();
                args.push(self.expr()?);
            }
        }
        self.expect(TokenKind::RParen, "',' or ')'")?;
        if args.len() != func.arity() {
            return Err(ParseError::Arity {
                pos: name.pos,
                func: func.name(),
                expected: func.arity(),
                found: args.len(),
            });
        }
        Expr::new(ExprNode::Call(func, args), name.pos)
    }

    fn parenthesized(&mut self) -> Result<Expr, ParseError> {
        let open = self.bump().pos;
        let first = self.expr()?;
        if self.peek_kind() == Some(TokenKind::RParen) {
            self.bump();
            return Ok(first);
        }
        self.expect(TokenKind::Comma, "',' or ')'")?;
        let second = self.expr()?;
        self.expect(TokenKind::Comma, "','")?;
        let third = self.expr()?;
        self.expect(TokenKind::RParen, "')'")?;
        let parts = [first, second, third];
        let literal: Option<Vec<f64>> = parts.iter().map(numeric_literal).collect();
        match literal {
            Some(c) => Expr::new(ExprNode::Literal(Ternion::new(c[0], c[1], c[2])), open),
            None => Expr::new(ExprNode::Triple(Box::new(parts)), open),
        }
    }
}

/// `n` or `-n` for a number literal `n`.
fn numeric_literal(e: &Expr) -> Option<f64> {
    match &e.node {
        ExprNode::RealLiteral(v) => Some(*v),
        ExprNode::Unary(UnaryOp::Neg, inner) => match inner.node {
            ExprNode::RealLiteral(v) => Some(-v),
            _ => None,
        },
        _ => None,
    }
}
