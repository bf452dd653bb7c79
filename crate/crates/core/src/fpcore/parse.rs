//! Text grammar for presentations:
//!
//! ```text
//! presentation := '<' genlist '|' rellist '>'
//! genlist      := ident (',' ident)*          (may be empty: "< | >")
//! rellist      := empty | relator (',' relator)*
//! relator      := word | word '=' word
//! word         := '1' | factor ('*' factor)*
//! factor       := ident ('^' int)? | '(' word ')' ('^' int)? | '[' word ',' word ']' ('^' int)?
//! ```
//!
//! Whitespace is ignored. `u = v` is stored as `u v^-1`.

use std::collections::HashMap;

use super::presentation::Presentation;
use super::word::{commutator, Word};
use super::FpError;

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Ident(String),
    Int(i64),
    Sym(char),
}

struct Lexer {
    toks: Vec<(usize, Tok)>,
    end: usize,
}

fn lex(text: &str) -> Result<Lexer, FpError> {
    let mut toks = Vec::new();
    let bytes: Vec<(usize, char)> = text.char_indices().collect();
    let mut i = 0;
    while i < bytes.len() {
        let (pos, c) = bytes[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_alphabetic() {
            let mut s = String::new();
            while i < bytes.len() && (bytes[i].1.is_ascii_alphanumeric() || bytes[i].1 == '_') {
                s.push(bytes[i].1);
                i += 1;
            }
            toks.push((pos, Tok::Ident(s)));
        } else if c.is_ascii_digit() || c == '-' {
            let mut s = String::new();
            s.push(c);
            i += 1;
            // "- 3" is accepted; whitespace is insignificant everywhere
            while i < bytes.len() && bytes[i].1.is_whitespace() && c == '-' {
                i += 1;
            }
            while i < bytes.len() && bytes[i].1.is_ascii_digit() {
                s.push(bytes[i].1);
                i += 1;
            }
            let n = s.parse::<i64>().map_err(|_| FpError::Parse {
                pos,
                message: format!("invalid integer '{s}'"),
            })?;
            toks.push((pos, Tok::Int(n)));
        } else if "<>|,*^()[]=".contains(c) {
            toks.push((pos, Tok::Sym(c)));
            i += 1;
        } else {
            return Err(FpError::Parse {
                pos,
                message: format!("unexpected character '{c}'"),
            });
        }
    }
    Ok(Lexer {
        toks,
        end: text.len(),
    })
}

struct Parser<'a> {
    lexer: &'a Lexer,
    at: usize,
    names: HashMap<String, usize>,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.lexer.toks.get(self.at).map(|(_, t)| t)
    }

    fn pos(&self) -> usize {
        self.lexer
            .toks
            .get(self.at)
            .map_or(self.lexer.end, |(p, _)| *p)
    }

    fn err<T>(&self, message: impl Into<String>) -> Result<T, FpError> {
        Err(FpError::Parse {
            pos: self.pos(),
            message: message.into(),
        })
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.lexer.toks.get(self.at).map(|(_, t)| t.clone());
        self.at += 1;
        t
    }

    fn expect(&mut self, c: char) -> Result<(), FpError> {
        match self.peek() {
            Some(Tok::Sym(s)) if *s == c => {
                self.at += 1;
                Ok(())
            }
            Some(t) => {
                let t = t.clone();
                self.err(format!("expected '{c}', found {}", describe(&t)))
            }
            None => self.err(format!("expected '{c}', found end of input")),
        }
    }

    fn at_sym(&self, c: char) -> bool {
        matches!(self.peek(), Some(Tok::Sym(s)) if *s == c)
    }

    fn exponent(&mut self) -> Result<i64, FpError> {
        if !self.at_sym('^') {
            return Ok(1);
        }
        self.at += 1;
        match self.bump() {
            Some(Tok::Int(n)) => Ok(n),
            _ => {
                self.at -= 1;
                self.err("expected integer exponent after '^'")
            }
        }
    }

    fn word(&mut self) -> Result<Word, FpError> {
        let mut w = self.factor()?;
        while self.at_sym('*') {
            self.at += 1;
            let f = self.factor()?;
            w = w.concat(&f);
        }
        Ok(w)
    }

    fn factor(&mut self) -> Result<Word, FpError> {
        let pos = self.pos();
        match self.peek().cloned() {
            Some(Tok::Ident(name)) => {
                self.at += 1;
                let g = *self
                    .names
                    .get(&name)
                    .ok_or(FpError::UndeclaredGenerator { name, pos })?;
                let e = self.exponent()?;
                Ok(Word::power_of(g, e))
            }
            Some(Tok::Int(1)) => {
                self.at += 1;
                Ok(Word::empty())
            }
            Some(Tok::Sym('(')) => {
                self.at += 1;
                let w = self.word()?;
                self.expect(')')?;
                let e = self.exponent()?;
                Ok(w.pow(e))
            }
            Some(Tok::Sym('[')) => {
                self.at += 1;
                let u = self.word()?;
                self.expect(',')?;
                let v = self.word()?;
                self.expect(']')?;
                let e = self.exponent()?;
                Ok(commutator(&u, &v).pow(e))
            }
            Some(t) => self.err(format!(
                "expected a generator, '1', '(' or '[', found {}",
                describe(&t)
            )),
            None => self.err("unexpected end of input"),
        }
    }

    fn relator(&mut self) -> Result<Word, FpError> {
        let lhs = self.word()?;
        if self.at_sym('=') {
            self.at += 1;
            let rhs = self.word()?;
            Ok(lhs.concat(&rhs.inverse()))
        } else {
            Ok(lhs)
        }
    }
}

fn describe(t: &Tok) -> String {
    match t {
        Tok::Ident(s) => format!("identifier '{s}'"),
        Tok::Int(n) => format!("integer {n}"),
        Tok::Sym(c) => format!("'{c}'"),
    }
}

/// Parses `< a, b | a^2, b^3, (a*b)^3 >` style text.
pub fn parse_presentation(text: &str) -> Result<Presentation, FpError> {
    let lexer = lex(text)?;
    let mut p = Parser {
        lexer: &lexer,
        at: 0,
        names: HashMap::new(),
    };
    p.expect('<')?;
    let mut generators: Vec<String> = Vec::new();
    if !p.at_sym('|') {
        loop {
            let pos = p.pos();
            match p.bump() {
                Some(Tok::Ident(name)) => {
                    if p.names.contains_key(&name) {
                        return Err(FpError::DuplicateGenerator(name));
                    }
                    p.names.insert(name.clone(), generators.len());
                    generators.push(name);
                }
                _ => {
                    return Err(FpError::Parse {
                        pos,
                        message: "expected generator name".into(),
                    })
                }
            }
            if p.at_sym(',') {
                p.at += 1;
            } else {
                break;
            }
        }
    }
    p.expect('|')?;
    let mut relators = Vec::new();
    if !p.at_sym('>') {
        loop {
            relators.push(p.relator()?);
            if p.at_sym(',') {
                p.at += 1;
            } else {
                break;
            }
        }
    }
    p.expect('>')?;
    if p.peek().is_some() {
        return p.err("trailing input after '>'");
    }
    Presentation::new(generators, relators)
}

/// Parses a single word over the generators of `p`.
pub fn parse_word(p: &Presentation, text: &str) -> Result<Word, FpError> {
    let lexer = lex(text)?;
    let names = p
        .generators()
        .iter()
        .enumerate()
        .map(|(i, n)| (n.clone(), i))
        .collect();
    let mut parser = Parser {
        lexer: &lexer,
        at: 0,
        names,
    };
    let w = parser.relator()?;
    if parser.peek().is_some() {
        return parser.err("trailing input after word");
    }
    Ok(w)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_triangle_group() {
        let p = parse_presentation("< a, b | a^2, b^3, (a*b)^3 >").unwrap();
        assert_eq!(p.generators(), &["a", "b"]);
        assert_eq!(p.relators()[0].runs(), &[(0, 2)]);
        assert_eq!(p.relators()[1].runs(), &[(1, 3)]);
        assert_eq!(
            p.relators()[2].runs(),
            &[(0, 1), (1, 1), (0, 1), (1, 1), (0, 1), (1, 1)]
        );
    }

    #[test]
    fn equation_becomes_relator() {
        let p = parse_presentation("< x, y | x*y*x = y*x*y >").unwrap();
        assert_eq!(
            p.relators()[0].runs(),
            &[(0, 1), (1, 1), (0, 1), (1, -1), (0, -1), (1, -1)]
        );
    }

    #[test]
    fn commutator_sugar() {
        let p = parse_presentation("< a, b | [a,b] >").unwrap();
        assert_eq!(p.relators()[0].runs(), &[(0, 1), (1, 1), (0, -1), (1, -1)]);
    }

    #[test]
    fn identity_word_and_negative_exponents() {
        let p = parse_presentation("<a|a^-2 = 1, 1>").unwrap();
        assert_eq!(p.relators()[0].runs(), &[(0, -2)]);
        assert!(p.relators()[1].is_empty());
    }

    #[test]
    fn error_cases() {
        assert!(matches!(
            parse_presentation("< a | b >"),
            Err(FpError::UndeclaredGenerator { ref name, pos: 6 }) if name == "b"
        ));
        assert!(matches!(
            parse_presentation("< a, a | >"),
            Err(FpError::DuplicateGenerator(_))
        ));
        assert!(matches!(
            parse_presentation("< a | a^ >"),
            Err(FpError::Parse { pos: 9, .. })
        ));
        assert!(matches!(
            parse_presentation("< a | a"),
            Err(FpError::Parse { .. })
        ));
        assert!(matches!(
            parse_presentation("< a | a > x"),
            Err(FpError::Parse { .. })
        ));
        assert!(matches!(
            parse_presentation("< a | a $ >"),
            Err(FpError::Parse { pos: 8, .. })
        ));
    }

    #[test]
    fn trivial_presentation_text() {
        let p = parse_presentation("< | >").unwrap();
        assert_eq!(p.ngens(), 0);
        assert!(p.relators().is_empty());
    }
}
