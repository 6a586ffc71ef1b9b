//! Text form of relationship polynomials.
//!
//! The grammar is
//!
//! ```text
//! expr   := term ('+' term)*
//! term   := factor (['*'] factor)*
//! factor := ident | '(' expr ')'
//! ```
//!
//! with `*` optional between factors: `abc+d` and `a*b*c+d` read the same.
//! To keep juxtaposition unambiguous, an identifier here is one letter
//! followed by optional digits — `abc` is the product of `a`, `b` and `c`,
//! and `x1y2` the product of `x1` and `y2`. Subjects with longer word ids
//! can only come from the pairwise relation form. Whitespace separates
//! tokens and is otherwise ignored. Error positions are 1-based character
//! offsets into the input.

use super::{GroupError, PolynomialExpr, Subject};

#[derive(Debug, Clone, PartialEq, Eq)]
enum TokenKind {
    Ident(String),
    Plus,
    Star,
    LParen,
    RParen,
}

#[derive(Debug, Clone)]
struct Token {
    kind: TokenKind,
    pos: usize,
}

fn syntax(position: usize, message: impl Into<String>) -> GroupError {
    GroupError::PolynomialSyntax { position, message: message.into() }
}

fn tokenize(text: &str) -> Result<Vec<Token>, GroupError> {
    let chars: Vec<char> = text.chars().collect();
    let mut tokens = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let pos = i + 1;
        let c = chars[i];
        match c {
            c if c.is_whitespace() => i += 1,
            '+' => {
                tokens.push(Token { kind: TokenKind::Plus, pos });
                i += 1;
            }
            '*' => {
                tokens.push(Token { kind: TokenKind::Star, pos });
                i += 1;
            }
            '(' => {
                tokens.push(Token { kind: TokenKind::LParen, pos });
                i += 1;
            }
            ')' => {
                tokens.push(Token { kind: TokenKind::RParen, pos });
                i += 1;
            }
            c if c.is_ascii_alphabetic() => {
                let start = i;
                i += 1;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let id: String = chars[start..i].iter().collect();
                tokens.push(Token { kind: TokenKind::Ident(id), pos });
            }
            other => return Err(syntax(pos, format!("unexpected character {other:?}"))),
        }
    }
    Ok(tokens)
}

struct Parser {
    tokens: Vec<Token>,
    next: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.next)
    }

    fn advance(&mut self) -> Option<Token> {
        let token = self.tokens.get(self.next).cloned();
        if token.is_some() {
            self.next += 1;
        }
        token
    }

    fn eat(&mut self, kind: &TokenKind) -> bool {
        if self.peek().map(|t| &t.kind) == Some(kind) {
            self.next += 1;
            true
        } else {
            false
        }
    }

    fn here(&self) -> usize {
        self.peek().map_or(self.end, |t| t.pos)
    }

    fn expr(&mut self) -> Result<PolynomialExpr, GroupError> {
        let mut terms = vec![self.term()?];
        while self.eat(&TokenKind::Plus) {
            terms.push(self.term()?);
        }
        Ok(PolynomialExpr::sum(terms))
    }

    fn term(&mut self) -> Result<PolynomialExpr, GroupError> {
        let mut factors = vec![self.factor()?];
        loop {
            if self.eat(&TokenKind::Star) {
                factors.push(self.factor()?);
            } else if matches!(
                self.peek().map(|t| &t.kind),
                Some(TokenKind::Ident(_)) | Some(TokenKind::LParen)
            ) {
                factors.push(self.factor()?);
            } else {
                break;
            }
        }
        Ok(PolynomialExpr::product(factors))
    }

    fn factor(&mut self) -> Result<PolynomialExpr, GroupError> {
        let pos = self.here();
        match self.advance().map(|t| t.kind) {
            Some(TokenKind::Ident(id)) => {
                let subject = Subject::new(id).expect("tokenizer produces valid ids");
                Ok(PolynomialExpr::variable(subject))
            }
            Some(TokenKind::LParen) => {
                let inner = self.expr()?;
                if !self.eat(&TokenKind::RParen) {
                    return Err(syntax(self.here(), "expected ')'"));
                }
                Ok(inner)
            }
            Some(TokenKind::Plus) => Err(syntax(pos, "expected a variable or '(', found '+'")),
            Some(TokenKind::Star) => Err(syntax(pos, "expected a variable or '(', found '*'")),
            Some(TokenKind::RParen) => {
                Err(syntax(pos, "expected a variable or '(', found ')'"))
            }
            None => Err(syntax(pos, "expected a variable or '('")),
        }
    }
}

/// Parses the textual form of a relationship polynomial into its canonical
/// tree, rejecting syntax errors and repeated variables with the 1-based
/// position of the offence.
pub fn parse_polynomial(text: &str) -> Result<PolynomialExpr, GroupError> {
    let tokens = tokenize(text)?;
    let mut seen: Vec<&str> = Vec::new();
    for token in &tokens {
        if let TokenKind::Ident(id) = &token.kind {
            if seen.contains(&id.as_str()) {
                return Err(syntax(token.pos, format!("duplicate variable {id}")));
            }
            seen.push(id);
        }
    }
    let mut parser = Parser { tokens, next: 0, end: text.chars().count() + 1 };
    let expr = parser.expr()?;
    if let Some(token) = parser.peek() {
        let what = match &token.kind {
            TokenKind::Ident(id) => format!("variable {id}"),
            TokenKind::Plus => "'+'".to_string(),
            TokenKind::Star => "'*'".to_string(),
            TokenKind::LParen => "'('".to_string(),
            TokenKind::RParen => "')'".to_string(),
        };
        return Err(syntax(token.pos, format!("unexpected {what}")));
    }
    Ok(expr)
}
