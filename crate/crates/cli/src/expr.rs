//! Boolean expressions over the ten classification flag names, with `!`,
//! `&&`, `||`, and parentheses.

use ringlab_core::{ClassificationProfile, FLAGS};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FlagExpr {
    Flag(&'static str),
    Not(Box<FlagExpr>),
    And(Box<FlagExpr>, Box<FlagExpr>),
    Or(Box<FlagExpr>, Box<FlagExpr>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Not,
    And,
    Or,
    LParen,
    RParen,
    Ident(String),
}

fn lex(text: &str) -> Result<Vec<Tok>, String> {
    let mut toks = Vec::new();
    let bytes = text.as_bytes();
    let mut pos = 0;
    while pos < bytes.len() {
        let c = bytes[pos] as char;
        match c {
            ' ' | '\t' | '\n' | '\r' => pos += 1,
            '!' => {
                toks.push(Tok::Not);
                pos += 1;
            }
            '(' => {
                toks.push(Tok::LParen);
                pos += 1;
            }
            ')' => {
                toks.push(Tok::RParen);
                pos += 1;
            }
            '&' | '|' => {
                if pos + 1 >= bytes.len() || bytes[pos + 1] != bytes[pos] {
                    return Err(format!("expected '{c}{c}' at offset {pos}"));
                }
                toks.push(if c == '&' { Tok::And } else { Tok::Or });
                pos += 2;
            }
            _ if c.is_ascii_alphabetic() || c == '_' => {
                let start = pos;
                while pos < bytes.len()
                    && ((bytes[pos] as char).is_ascii_alphanumeric() || bytes[pos] == b'_')
                {
                    pos += 1;
                }
                toks.push(Tok::Ident(text[start..pos].to_string()));
            }
            _ => return Err(format!("unexpected character '{c}' at offset {pos}")),
        }
    }
    Ok(toks)
}

struct Parser {
    toks: Vec<Tok>,
    pos: usize,
}

impl Parser {
    fn or(&mut self) -> Result<FlagExpr, String> {
        let mut left = self.and()?;
        while self.toks.get(self.pos) == Some(&Tok::Or) {
            self.pos += 1;
            left = FlagExpr::Or(Box::new(left), Box::new(self.and()?));
        }
        Ok(left)
    }

    fn and(&mut self) -> Result<FlagExpr, String> {
        let mut left = self.unary()?;
        while self.toks.get(self.pos) == Some(&Tok::And) {
            self.pos += 1;
            left = FlagExpr::And(Box::new(left), Box::new(self.unary()?));
        }
        Ok(left)
    }

    fn unary(&mut self) -> Result<FlagExpr, String> {
        match self.toks.get(self.pos) {
            Some(Tok::Not) => {
                self.pos += 1;
                Ok(FlagExpr::Not(Box::new(self.unary()?)))
            }
            Some(Tok::LParen) => {
                self.pos += 1;
                let inner = self.or()?;
                if self.toks.get(self.pos) != Some(&Tok::RParen) {
                    return Err("missing ')'".into());
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(Tok::Ident(name)) => match FLAGS.iter().find(|&&f| f == name) {
                Some(&flag) => {
                    self.pos += 1;
                    Ok(FlagExpr::Flag(flag))
                }
                None => Err(format!("unknown flag '{name}'; flags are {}", FLAGS.join(", "))),
            },
            Some(other) => Err(format!("unexpected token {other:?}")),
            None => Err("unexpected end of expression".into()),
        }
    }
}

impl FlagExpr {
    pub fn parse(text: &str) -> Result<FlagExpr, String> {
        let toks = lex(text)?;
        if toks.is_empty() {
            return Err("empty expression".into());
        }
        let mut parser = Parser { toks, pos: 0 };
        let expr = parser.or()?;
        if parser.pos != parser.toks.len() {
            return Err(format!("trailing input after expression: {:?}", parser.toks[parser.pos]));
        }
        Ok(expr)
    }

    pub fn eval(&self, profile: &ClassificationProfile) -> bool {
        match self {
            FlagExpr::Flag(name) => profile.get(name).expect("parser admits only known flags"),
            FlagExpr::Not(inner) => !inner.eval(profile),
            FlagExpr::And(a, b) => a.eval(profile) && b.eval(profile),
            FlagExpr::Or(a, b) => a.eval(profile) || b.eval(profile),
        }
    }
}
