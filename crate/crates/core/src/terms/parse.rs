//! Recursive-descent parser for the ASCII term grammar.
//!
//! ```text
//! term   := sum
//! sum    := join ('+' join)*            -- s + t  =  -s -> t        (pointed only)
//! join   := meet ('\/' meet)*
//! meet   := arrow ('/\' arrow)*
//! arrow  := resid ('->' arrow)?         -- s -> t =  s \ t          (commutative only)
//! resid  := fuse (('\' | '/') fuse)?    -- non-associative
//! fuse   := unary ('*' unary)*
//! unary  := '~' unary | '-' unary | atom   -- ~s = s \ e, -s = s \ f
//! atom   := ident | 'e' | 'f' | '(' term ')'
//! ```
//!
//! Binary operators other than `->` associate to the left. Sequents are
//! `t1, ..., tn => u1, ..., um`; inequations are `s <= t`.

use super::{Sequent, Term, Theory};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParseError {
    #[error("syntax error at column {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("f not allowed in theory {theory} (column {pos})")]
    FNotAllowed { pos: usize, theory: String },
    #[error("connective `{connective}` not in signature of theory {theory} (column {pos})")]
    NotInSignature {
        pos: usize,
        connective: &'static str,
        theory: String,
    },
    #[error("theory {theory} needs exactly one term on the right, found {found}")]
    Succedent { theory: String, found: usize },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Tok {
    Ident,
    E,
    F,
    LParen,
    RParen,
    Meet,
    Join,
    Star,
    Backslash,
    Slash,
    Arrow,
    Tilde,
    Minus,
    Plus,
    Comma,
    Turnstile,
    LessEq,
    End,
}

#[derive(Clone, Debug)]
struct Token {
    kind: Tok,
    text: String,
    /// 1-based column.
    pos: usize,
}

fn lex(src: &str) -> Result<Vec<Token>, ParseError> {
    let chars: Vec<char> = src.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let pos = i + 1;
        let next = chars.get(i + 1).copied();
        let (kind, len) = match (c, next) {
            (c, _) if c.is_whitespace() => {
                i += 1;
                continue;
            }
            ('/', Some('\\')) => (Tok::Meet, 2),
            ('\\', Some('/')) => (Tok::Join, 2),
            ('-', Some('>')) => (Tok::Arrow, 2),
            ('=', Some('>')) => (Tok::Turnstile, 2),
            ('<', Some('=')) => (Tok::LessEq, 2),
            ('/', _) => (Tok::Slash, 1),
            ('\\', _) | ('∖', _) => (Tok::Backslash, 1),
            ('*', _) | ('·', _) => (Tok::Star, 1),
            ('~', _) | ('∼', _) => (Tok::Tilde, 1),
            ('-', _) | ('¬', _) => (Tok::Minus, 1),
            ('+', _) => (Tok::Plus, 1),
            ('(', _) => (Tok::LParen, 1),
            (')', _) => (Tok::RParen, 1),
            (',', _) => (Tok::Comma, 1),
            ('∧', _) => (Tok::Meet, 1),
            ('∨', _) => (Tok::Join, 1),
            ('→', _) => (Tok::Arrow, 1),
            ('⇒', _) => (Tok::Turnstile, 1),
            ('≤', _) => (Tok::LessEq, 1),
            (c, _) if c.is_ascii_alphabetic() || c == '_' => {
                let start = i;
                let mut j = i + 1;
                while j < chars.len()
                    && (chars[j].is_ascii_alphanumeric() || chars[j] == '_' || chars[j] == '\'')
                {
                    j += 1;
                }
                let text: String = chars[start..j].iter().collect();
                let kind = match text.as_str() {
                    "e" => Tok::E,
                    "f" => Tok::F,
                    _ => Tok::Ident,
                };
                out.push(Token { kind, text, pos });
                i = j;
                continue;
            }
            (c, _) => {
                return Err(ParseError::Syntax {
                    pos,
                    msg: format!("unexpected character `{c}`"),
                })
            }
        };
        out.push(Token {
            kind,
            text: chars[i..i + len].iter().collect(),
            pos,
        });
        i += len;
    }
    out.push(Token {
        kind: Tok::End,
        text: String::new(),
        pos: chars.len() + 1,
    });
    Ok(out)
}

/// What the active signature permits.
#[derive(Clone, Copy, Debug)]
struct Policy {
    theory: Option<Theory>,
    pointed: bool,
    arrow: bool,
    lattice: bool,
    fuse: bool,
}

impl Policy {
    fn for_theory(th: Theory) -> Policy {
        Policy {
            theory: Some(th),
            pointed: th.pointed(),
            arrow: th.exchange(),
            lattice: th.has_lattice(),
            fuse: th.has_fuse(),
        }
    }

    fn unrestricted() -> Policy {
        Policy {
            theory: None,
            pointed: true,
            arrow: true,
            lattice: true,
            fuse: true,
        }
    }

    fn theory_name(&self) -> String {
        self.theory
            .map(|t| t.name().to_string())
            .unwrap_or_else(|| "(any)".into())
    }
}

struct Parser {
    toks: Vec<Token>,
    at: usize,
    policy: Policy,
}

impl Parser {
    fn peek(&self) -> &Token {
        &self.toks[self.at]
    }

    fn bump(&mut self) -> Token {
        let t = self.toks[self.at].clone();
        if t.kind != Tok::End {
            self.at += 1;
        }
        t
    }

    fn eat(&mut self, kind: Tok) -> Option<Token> {
        if self.peek().kind == kind {
            Some(self.bump())
        } else {
            None
        }
    }

    fn syntax<T>(&self, msg: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError::Syntax {
            pos: self.peek().pos,
            msg: msg.into(),
        })
    }

    fn require_f(&self, pos: usize) -> Result<(), ParseError> {
        if self.policy.pointed {
            Ok(())
        } else {
            Err(ParseError::FNotAllowed {
                pos,
                theory: self.policy.theory_name(),
            })
        }
    }

    fn require(&self, ok: bool, pos: usize, connective: &'static str) -> Result<(), ParseError> {
        if ok {
            Ok(())
        } else {
            Err(ParseError::NotInSignature {
                pos,
                connective,
                theory: self.policy.theory_name(),
            })
        }
    }

    fn term(&mut self) -> Result<Term, ParseError> {
        let mut acc = self.join()?;
        while let Some(tok) = self.eat(Tok::Plus) {
            self.require_f(tok.pos)?;
            let rhs = self.join()?;
            acc = Term::ldiv(Term::ldiv(acc, Term::F), rhs);
        }
        Ok(acc)
    }

    fn join(&mut self) -> Result<Term, ParseError> {
        let mut acc = self.meet()?;
        while let Some(tok) = self.eat(Tok::Join) {
            self.require(self.policy.lattice, tok.pos, "\\/")?;
            let rhs = self.meet()?;
            acc = Term::join(acc, rhs);
        }
        Ok(acc)
    }

    fn meet(&mut self) -> Result<Term, ParseError> {
        let mut acc = self.arrow()?;
        while let Some(tok) = self.eat(Tok::Meet) {
            self.require(self.policy.lattice, tok.pos, "/\\")?;
            let rhs = self.arrow()?;
            acc = Term::meet(acc, rhs);
        }
        Ok(acc)
    }

    fn arrow(&mut self) -> Result<Term, ParseError> {
        let lhs = self.resid()?;
        if let Some(tok) = self.eat(Tok::Arrow) {
            self.require(self.policy.arrow, tok.pos, "->")?;
            let rhs = self.arrow()?;
            return Ok(Term::ldiv(lhs, rhs));
        }
        Ok(lhs)
    }

    fn resid(&mut self) -> Result<Term, ParseError> {
        let lhs = self.fuse()?;
        let kind = self.peek().kind;
        if kind != Tok::Backslash && kind != Tok::Slash {
            return Ok(lhs);
        }
        self.bump();
        let rhs = self.fuse()?;
        if matches!(self.peek().kind, Tok::Backslash | Tok::Slash) {
            return self.syntax("residuals do not associate; add parentheses");
        }
        Ok(if kind == Tok::Backslash {
            Term::ldiv(lhs, rhs)
        } else {
            Term::rdiv(lhs, rhs)
        })
    }

    fn fuse(&mut self) -> Result<Term, ParseError> {
        let mut acc = self.unary()?;
        while let Some(tok) = self.eat(Tok::Star) {
            self.require(self.policy.fuse, tok.pos, "*")?;
            let rhs = self.unary()?;
            acc = Term::fuse(acc, rhs);
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<Term, ParseError> {
        if self.eat(Tok::Tilde).is_some() {
            let inner = self.unary()?;
            return Ok(Term::ldiv(inner, Term::E));
        }
        if let Some(tok) = self.eat(Tok::Minus) {
            self.require_f(tok.pos)?;
            let inner = self.unary()?;
            return Ok(Term::ldiv(inner, Term::F));
        }
        self.atom()
    }

    fn atom(&mut self) -> Result<Term, ParseError> {
        let tok = self.peek().clone();
        match tok.kind {
            Tok::Ident => {
                self.bump();
                Ok(Term::var(&tok.text))
            }
            Tok::E => {
                self.bump();
                Ok(Term::E)
            }
            Tok::F => {
                self.require_f(tok.pos)?;
                self.bump();
                Ok(Term::F)
            }
            Tok::LParen => {
                self.bump();
                let t = self.term()?;
                if self.eat(Tok::RParen).is_none() {
                    return self.syntax("expected `)`");
                }
                Ok(t)
            }
            Tok::End => self.syntax("unexpected end of input"),
            _ => self.syntax(format!("unexpected `{}`", tok.text)),
        }
    }

    fn term_list(&mut self, stop: Tok) -> Result<Vec<Term>, ParseError> {
        let mut out = Vec::new();
        if self.peek().kind == stop {
            return Ok(out);
        }
        loop {
            out.push(self.term()?);
            if self.eat(Tok::Comma).is_none() {
                return Ok(out);
            }
        }
    }

    fn finish(&mut self) -> Result<(), ParseError> {
        if self.peek().kind == Tok::End {
            Ok(())
        } else {
            self.syntax(format!("unexpected `{}`", self.peek().text))
        }
    }
}

fn parser(text: &str, policy: Policy) -> Result<Parser, ParseError> {
    Ok(Parser {
        toks: lex(text)?,
        at: 0,
        policy,
    })
}

/// Parse a term in the signature of `theory`.
pub fn parse_term(text: &str, theory: Theory) -> Result<Term, ParseError> {
    let mut p = parser(text, Policy::for_theory(theory))?;
    let t = p.term()?;
    p.finish()?;
    Ok(t)
}

/// Parse a term with every connective enabled (including `f`, `->`, `+`).
pub fn parse_term_unchecked(text: &str) -> Result<Term, ParseError> {
    let mut p = parser(text, Policy::unrestricted())?;
    let t = p.term()?;
    p.finish()?;
    Ok(t)
}

/// Parse `t1, ..., tn => u` (or a multiple-conclusion sequent in CA).
pub fn parse_sequent(text: &str, theory: Theory) -> Result<Sequent, ParseError> {
    let mut p = parser(text, Policy::for_theory(theory))?;
    let left = p.term_list(Tok::Turnstile)?;
    if p.eat(Tok::Turnstile).is_none() {
        return p.syntax("expected `,` or `=>`");
    }
    let right = p.term_list(Tok::End)?;
    p.finish()?;
    if !theory.multi_conclusion() && right.len() != 1 {
        return Err(ParseError::Succedent {
            theory: theory.name().to_string(),
            found: right.len(),
        });
    }
    Ok(Sequent { left, right })
}

/// Parse `s <= t`, also accepting the sequent form `s => t`.
pub fn parse_inequation(text: &str, theory: Option<Theory>) -> Result<(Term, Term), ParseError> {
    let policy = theory
        .map(Policy::for_theory)
        .unwrap_or_else(Policy::unrestricted);
    let mut p = parser(text, policy)?;
    let lhs = p.term()?;
    if p.eat(Tok::LessEq).is_none() && p.eat(Tok::Turnstile).is_none() {
        return p.syntax("expected `<=`");
    }
    let rhs = p.term()?;
    p.finish()?;
    Ok((lhs, rhs))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x() -> Term {
        Term::var("x")
    }
    fn y() -> Term {
        Term::var("y")
    }

    #[test]
    fn residual_of_variable() {
        assert_eq!(
            parse_term("x \\ x", Theory::Icrl).unwrap(),
            Term::ldiv(x(), x())
        );
    }

    #[test]
    fn double_tilde_expands() {
        assert_eq!(
            parse_term("~~x", Theory::Icrl).unwrap(),
            Term::ldiv(Term::ldiv(x(), Term::E), Term::E)
        );
    }

    #[test]
    fn casari_sum_expands_through_negation() {
        // -x + y  =  (-x) + y  =  -(-x) -> y
        let neg_x = Term::ldiv(x(), Term::F);
        let expected = Term::ldiv(Term::ldiv(neg_x, Term::F), y());
        assert_eq!(parse_term("-x + y", Theory::Ca).unwrap(), expected);
        assert_eq!(
            parse_term("x + y", Theory::Ca).unwrap(),
            Term::ldiv(Term::ldiv(x(), Term::F), y())
        );
    }

    #[test]
    fn precedence_table() {
        // * binds tighter than \, which binds tighter than /\, then \/.
        let t = parse_term("x * y \\ x /\\ y \\/ e", Theory::Icrl).unwrap();
        let expected = Term::join(
            Term::meet(Term::ldiv(Term::fuse(x(), y()), x()), y()),
            Term::E,
        );
        assert_eq!(t, expected);
        assert_eq!(
            parse_term("~x * y", Theory::Icrl).unwrap(),
            Term::fuse(Term::ldiv(x(), Term::E), y())
        );
        assert_eq!(
            parse_term("x -> y -> x", Theory::Cicrl).unwrap(),
            Term::ldiv(x(), Term::ldiv(y(), x()))
        );
    }

    #[test]
    fn chained_residuals_are_rejected() {
        let err = parse_term("x \\ y \\ x", Theory::Icrl).unwrap_err();
        assert!(matches!(err, ParseError::Syntax { pos: 7, .. }), "{err:?}");
        assert!(parse_term("x / y \\ x", Theory::Icrl).is_err());
        assert!(parse_term("(x \\ y) \\ x", Theory::Icrl).is_ok());
    }

    #[test]
    fn signature_errors() {
        assert!(matches!(
            parse_term("x * f", Theory::Icrl),
            Err(ParseError::FNotAllowed { pos: 5, .. })
        ));
        assert!(matches!(
            parse_term("-x", Theory::Cicrl),
            Err(ParseError::FNotAllowed { .. })
        ));
        assert!(matches!(
            parse_term("x /\\ y", Theory::Sirm),
            Err(ParseError::NotInSignature {
                connective: "/\\",
                ..
            })
        ));
        assert!(matches!(
            parse_term("x * y", Theory::PseudoBci),
            Err(ParseError::NotInSignature {
                connective: "*",
                ..
            })
        ));
        assert!(matches!(
            parse_term("x -> y", Theory::Icrl),
            Err(ParseError::NotInSignature {
                connective: "->",
                ..
            })
        ));
    }

    #[test]
    fn syntax_errors_carry_positions() {
        assert!(matches!(
            parse_term("(x * y", Theory::Rl),
            Err(ParseError::Syntax { pos: 7, .. })
        ));
        assert!(matches!(
            parse_term("x $ y", Theory::Rl),
            Err(ParseError::Syntax { pos: 3, .. })
        ));
        assert!(parse_term("", Theory::Rl).is_err());
    }

    #[test]
    fn sequents() {
        let s = parse_sequent("x, x \\ e, y => y", Theory::Icrl).unwrap();
        assert_eq!(s.left.len(), 3);
        assert_eq!(s.right, vec![y()]);
        let empty = parse_sequent("=> e", Theory::Icrl).unwrap();
        assert!(empty.left.is_empty());
        assert!(matches!(
            parse_sequent("x =>", Theory::Icrl),
            Err(ParseError::Succedent { found: 0, .. })
        ));
        let ca = parse_sequent("f, x => x, f", Theory::Ca).unwrap();
        assert_eq!(ca.right.len(), 2);
        assert!(parse_sequent("f =>", Theory::Ca).unwrap().right.is_empty());
        assert!(parse_sequent("=>", Theory::Ca).unwrap().left.is_empty());
    }

    #[test]
    fn unicode_aliases() {
        assert_eq!(
            parse_term_unchecked("x ∧ y ∨ e").unwrap(),
            parse_term_unchecked("x /\\ y \\/ e").unwrap()
        );
        assert_eq!(
            parse_term_unchecked("∼x · y").unwrap(),
            parse_term_unchecked("~x * y").unwrap()
        );
    }

    #[test]
    fn inequations() {
        let (l, r) = parse_inequation("x * (x \\ e) <= e", Some(Theory::Icrl)).unwrap();
        assert_eq!(l, Term::fuse(x(), Term::ldiv(x(), Term::E)));
        assert_eq!(r, Term::E);
        assert!(parse_inequation("x => y", None).is_ok());
        assert!(parse_inequation("x y", None).is_err());
    }
}
