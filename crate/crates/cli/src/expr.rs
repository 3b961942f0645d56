//! Set expressions over named modern sets.
//!
//! ```text
//! expr   := expr "\/" term | term
//! term   := term "/\" factor | factor
//! factor := "~" factor | IDENT | "(" expr ")"
//! ```
//!
//! Both binary operators are left-associative and `~` binds tightest. The
//! Unicode forms `∨`, `∧`, `¬` are accepted as aliases. Operand order is kept
//! in the tree: `A /\ B` and `B /\ A` are different expressions.

use std::fmt;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum SetExpr {
    Ident(String),
    Complement(Box<SetExpr>),
    Intersection(Box<SetExpr>, Box<SetExpr>),
    Union(Box<SetExpr>, Box<SetExpr>),
}

impl SetExpr {
    pub fn ident(name: &str) -> Self {
        SetExpr::Ident(name.to_string())
    }

    pub fn complement(e: SetExpr) -> Self {
        SetExpr::Complement(Box::new(e))
    }

    pub fn intersection(l: SetExpr, r: SetExpr) -> Self {
        SetExpr::Intersection(Box::new(l), Box::new(r))
    }

    pub fn union(l: SetExpr, r: SetExpr) -> Self {
        SetExpr::Union(Box::new(l), Box::new(r))
    }

    /// 0 for unions, 1 for intersections, 2 for everything that binds tighter.
    fn precedence(&self) -> u8 {
        match self {
            SetExpr::Union(..) => 0,
            SetExpr::Intersection(..) => 1,
            SetExpr::Complement(_) | SetExpr::Ident(_) => 2,
        }
    }

    /// Identifiers in order of first appearance.
    pub fn identifiers(&self) -> Vec<&str> {
        fn walk<'a>(e: &'a SetExpr, out: &mut Vec<&'a str>) {
            match e {
                SetExpr::Ident(name) => {
                    if !out.contains(&name.as_str()) {
                        out.push(name);
                    }
                }
                SetExpr::Complement(inner) => walk(inner, out),
                SetExpr::Intersection(l, r) | SetExpr::Union(l, r) => {
                    walk(l, out);
                    walk(r, out);
                }
            }
        }
        let mut out = Vec::new();
        walk(self, &mut out);
        out
    }
}

/// Prints with the fewest parentheses that parse back to the same tree.
impl fmt::Display for SetExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let child = |f: &mut fmt::Formatter<'_>, e: &SetExpr, min: u8| {
            if e.precedence() < min {
                write!(f, "({e})")
            } else {
                write!(f, "{e}")
            }
        };
        match self {
            SetExpr::Ident(name) => f.write_str(name),
            SetExpr::Complement(inner) => {
                f.write_str("~")?;
                child(f, inner, 2)
            }
            SetExpr::Intersection(l, r) => {
                child(f, l, 1)?;
                f.write_str(" /\\ ")?;
                child(f, r, 2)
            }
            SetExpr::Union(l, r) => {
                child(f, l, 0)?;
                f.write_str(" \\/ ")?;
                child(f, r, 1)
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("syntax error at column {column}: {message}")]
pub struct ParseError {
    /// 1-based, counted in characters.
    pub column: usize,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Union,
    Inter,
    Not,
    LParen,
    RParen,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Ident(name) => write!(f, "identifier `{name}`"),
            Tok::Union => f.write_str("`\\/`"),
            Tok::Inter => f.write_str("`/\\`"),
            Tok::Not => f.write_str("`~`"),
            Tok::LParen => f.write_str("`(`"),
            Tok::RParen => f.write_str("`)`"),
        }
    }
}

/// Token with its first and last column.
struct Spanned {
    tok: Tok,
    start: usize,
    end: usize,
}

fn lex(src: &str) -> Result<Vec<Spanned>, ParseError> {
    let chars: Vec<char> = src.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let col = i + 1;
        let single = |tok| Spanned {
            tok,
            start: col,
            end: col,
        };
        match c {
            c if c.is_whitespace() => {
                i += 1;
                continue;
            }
            '\\' | '/' => {
                let (want, tok) = if c == '\\' {
                    ('/', Tok::Union)
                } else {
                    ('\\', Tok::Inter)
                };
                if chars.get(i + 1) != Some(&want) {
                    return Err(ParseError {
                        column: col,
                        message: format!("unknown token `{c}` (did you mean `{c}{want}`?)"),
                    });
                }
                out.push(Spanned {
                    tok,
                    start: col,
                    end: col + 1,
                });
                i += 2;
                continue;
            }
            '∨' => out.push(single(Tok::Union)),
            '∧' => out.push(single(Tok::Inter)),
            '~' | '¬' => out.push(single(Tok::Not)),
            '(' => out.push(single(Tok::LParen)),
            ')' => out.push(single(Tok::RParen)),
            c if c.is_ascii_alphabetic() => {
                let start = i;
                while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                    i += 1;
                }
                out.push(Spanned {
                    tok: Tok::Ident(chars[start..i].iter().collect()),
                    start: start + 1,
                    end: i,
                });
                continue;
            }
            other => {
                return Err(ParseError {
                    column: col,
                    message: format!("unknown token `{other}`"),
                })
            }
        }
        i += 1;
    }
    Ok(out)
}

struct Parser {
    toks: Vec<Spanned>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|s| &s.tok)
    }

    /// Errors at end of input point at the last character of the last token.
    fn error(&self, expected: &str) -> ParseError {
        match self.toks.get(self.pos) {
            Some(s) => ParseError {
                column: s.start,
                message: format!("expected {expected}, found {}", s.tok),
            },
            None => ParseError {
                column: self.toks.last().map_or(1, |s| s.end),
                message: format!("expected {expected}, found end of input"),
            },
        }
    }

    fn expr(&mut self) -> Result<SetExpr, ParseError> {
        let mut lhs = self.term()?;
        while self.peek() == Some(&Tok::Union) {
            self.pos += 1;
            let rhs = self.term()?;
            lhs = SetExpr::union(lhs, rhs);
        }
        Ok(lhs)
    }

    fn term(&mut self) -> Result<SetExpr, ParseError> {
        let mut lhs = self.factor()?;
        while self.peek() == Some(&Tok::Inter) {
            self.pos += 1;
            let rhs = self.factor()?;
            lhs = SetExpr::intersection(lhs, rhs);
        }
        Ok(lhs)
    }

    fn factor(&mut self) -> Result<SetExpr, ParseError> {
        match self.peek().cloned() {
            Some(Tok::Not) => {
                self.pos += 1;
                Ok(SetExpr::complement(self.factor()?))
            }
            Some(Tok::Ident(name)) => {
                self.pos += 1;
                Ok(SetExpr::Ident(name))
            }
            Some(Tok::LParen) => {
                let open = self.toks[self.pos].start;
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(&Tok::RParen) {
                    return Err(self.error(&format!("`)` to close `(` at column {open}")));
                }
                self.pos += 1;
                Ok(inner)
            }
            _ => Err(self.error("a set name, `~` or `(`")),
        }
    }
}

pub fn parse_expression(src: &str) -> Result<SetExpr, ParseError> {
    let mut p = Parser {
        toks: lex(src)?,
        pos: 0,
    };
    let e = p.expr()?;
    if p.pos < p.toks.len() {
        return Err(p.error("an operator or end of input"));
    }
    Ok(e)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn id(n: &str) -> SetExpr {
        SetExpr::ident(n)
    }

    #[test]
    fn precedence_and_order() {
        assert_eq!(
            parse_expression("A \\/ B /\\ C").unwrap(),
            SetExpr::union(id("A"), SetExpr::intersection(id("B"), id("C")))
        );
        assert_ne!(
            parse_expression("A /\\ B").unwrap(),
            parse_expression("B /\\ A").unwrap()
        );
    }

    #[test]
    fn unclosed_paren_column() {
        let err = parse_expression("~(A \\/ B").unwrap_err();
        assert_eq!(err.column, 8);
    }

    #[test]
    fn unknown_tokens() {
        assert_eq!(parse_expression("A & B").unwrap_err().column, 3);
        assert_eq!(parse_expression("A \\ B").unwrap_err().column, 3);
        assert_eq!(parse_expression("1A").unwrap_err().column, 1);
        assert_eq!(parse_expression("").unwrap_err().column, 1);
        assert_eq!(parse_expression("A B").unwrap_err().column, 3);
    }

    #[test]
    fn unicode_aliases() {
        assert_eq!(
            parse_expression("¬A ∨ B ∧ C").unwrap(),
            parse_expression("~A \\/ B /\\ C").unwrap()
        );
    }

    #[test]
    fn display_uses_minimal_parens() {
        let e = parse_expression("(A \\/ B) /\\ ~(C /\\ D) \\/ (E \\/ F)").unwrap();
        assert_eq!(e.to_string(), "(A \\/ B) /\\ ~(C /\\ D) \\/ (E \\/ F)");
        let e = parse_expression("((A))").unwrap();
        assert_eq!(e.to_string(), "A");
        assert_eq!(e.identifiers(), ["A"]);
    }
}
