//! Tokenizer for the expression language.

use crate::error::LexError;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TokenKind {
    Number,
    Ident,
    LParen,
    RParen,
    Comma,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Token {
    pub kind: TokenKind,
    /// Exact slice of the input.
    pub text: String,
    /// 0-based character offset of the first character.
    pub pos: usize,
}

/// Split `input` into tokens, skipping whitespace.
///
/// Numbers are `digits[.digits][(e|E)[+|-]digits]` or `.digits[...]`;
/// identifiers are an ASCII letter or `_` followed by ASCII alphanumerics or `_`.
pub fn tokenize(input: &str) -> Result<Vec<Token>, LexError> {
    let chars: Vec<char> = input.chars().collect();
    let mut tokens = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        let start = i;
        let kind = match c {
            '(' => Some(TokenKind::LParen),
            ')' => Some(TokenKind::RParen),
            ',' => Some(TokenKind::Comma),
            '+' => Some(TokenKind::Plus),
            '-' => Some(TokenKind::Minus),
            '*' => Some(TokenKind::Star),
            '/' => Some(TokenKind::Slash),
            '^' => Some(TokenKind::Caret),
            _ => None,
        };
        let kind = if let Some(k) = kind {
            i += 1;
            k
        } else if c.is_ascii_digit()
            || (c == '.' && chars.get(i + 1).is_some_and(|d| d.is_ascii_digit()))
        {
            i = scan_number(&chars, i);
            TokenKind::Number
        } else if c.is_ascii_alphabetic() || c == '_' {
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            TokenKind::Ident
        } else {
            return Err(LexError { pos: i, ch: c });
        };
        tokens.push(Token {
            kind,
            text: chars[start..i].iter().collect(),
            pos: start,
        });
    }
    Ok(tokens)
}

fn scan_number(chars: &[char], mut i: usize) -> usize {
    let digits = |mut i: usize| {
        while i < chars.len() && chars[i].is_ascii_digit() {
            i += 1;
        }
        i
    };
    i = digits(i);
    if chars.get(i) == Some(&'.') {
        i = digits(i + 1);
    }
    if matches!(chars.get(i), Some('e' | 'E')) {
        let mut j = i + 1;
        if matches!(chars.get(j), Some('+' | '-')) {
            j += 1;
        }
        if chars.get(j).is_some_and(|d| d.is_ascii_digit()) {
            i = digits(j);
        }
    }
    i
}

#[cfg(test)]
mod tests {
    use super::*;
    use TokenKind::*;

    fn kinds(s: &str) -> Vec<TokenKind> {
        tokenize(s).unwrap().into_iter().map(|t| t.kind).collect()
    }

    #[test]
    fn triple() {
        assert_eq!(
            kinds("(1, 2, 3)"),
            vec![LParen, Number, Comma, Number, Comma, Number, RParen]
        );
        let toks = tokenize("(1, 2, 3)").unwrap();
        assert_eq!(toks[3].text, "2");
        assert_eq!(toks[3].pos, 4);
    }

    #[test]
    fn idents_and_operators() {
        let toks = tokenize("u*u").unwrap();
        assert_eq!(
            toks.iter().map(|t| t.kind).collect::<Vec<_>>(),
            vec![Ident, Star, Ident]
        );
        assert_eq!(toks[2].text, "u");
        assert_eq!(
            kinds("oneG^2 / -x_1"),
            vec![Ident, Caret, Number, Slash, Minus, Ident]
        );
    }

    #[test]
    fn number_forms() {
        for s in ["0", "12", "1.5", "1.", ".25", "1e3", "2.5E-7", "6e+2"] {
            let t = tokenize(s).unwrap();
            assert_eq!(t.len(), 1, "{s}");
            assert_eq!(t[0].text, s);
            assert!(t[0].text.parse::<f64>().is_ok());
        }
        // a dangling exponent marker is an identifier
        assert_eq!(kinds("1e"), vec![Number, Ident]);
        assert_eq!(kinds("1e+"), vec![Number, Ident, Plus]);
    }

    #[test]
    fn rejects_unknown_characters() {
        assert_eq!(tokenize("3 @ 4"), Err(LexError { pos: 2, ch: '@' }));
        assert_eq!(tokenize("u·v"), Err(LexError { pos: 1, ch: '·' }));
        // positions count characters, not bytes
        assert_eq!(tokenize("ü ?").unwrap_err().pos, 0);
        assert_eq!(tokenize("  .").unwrap_err(), LexError { pos: 2, ch: '.' });
    }

    #[test]
    fn texts_reassemble_input() {
        let input = " conj( (1.5,  -2e3,u) )^2 ";
        let toks = tokenize(input).unwrap();
        let chars: Vec<char> = input.chars().collect();
        let mut rebuilt: Vec<char> = chars.clone();
        for c in rebuilt.iter_mut() {
            if !c.is_whitespace() {
                *c = '\0';
            }
        }
        for t in &toks {
            for (k, c) in t.text.chars().enumerate() {
                rebuilt[t.pos + k] = c;
            }
        }
        assert_eq!(rebuilt, chars);
    }
}
