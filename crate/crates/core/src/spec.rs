use std::fmt;
use std::sync::Arc;

use crate::construct::{idealization, product, quotient, zmod, ModuleSpec};
use crate::error::CoreError;
use crate::ring::FiniteRing;

/// How an idealization's module action is derived.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ActionKind {
    /// Members are an ideal of the base ring; the action is multiplication.
    Natural,
    /// Members live in the first factor of a product base; a product
    /// element acts through its first coordinate.
    FirstFactor,
}

/// Abstract syntax of the ring construction language.
///
/// Grammar, loosest to tightest binding:
/// `A x B x C` (n-ary product), `A (+) {m1,m2}` (idealization), `A/(g1,g2)`
/// (quotient), atoms `Z<n>`, `( ... )`, and the functional form
/// `idealization(A x B, proj1, {m1,m2})` for a first-coordinate action.
/// Integers are element indices of the base ring. Whitespace is optional.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RingSpec {
    Zmod(usize),
    Product(Vec<RingSpec>),
    Quotient(Box<RingSpec>, Vec<usize>),
    Idealization(Box<RingSpec>, ActionKind, Vec<usize>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Znum(usize),
    Int(usize),
    Kw(String),
    LParen,
    RParen,
    LBrace,
    RBrace,
    Comma,
    Slash,
    OPlus,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Znum(n) => write!(f, "Z{n}"),
            Tok::Int(n) => write!(f, "{n}"),
            Tok::Kw(k) => write!(f, "{k}"),
            Tok::LParen => write!(f, "("),
            Tok::RParen => write!(f, ")"),
            Tok::LBrace => write!(f, "{{"),
            Tok::RBrace => write!(f, "}}"),
            Tok::Comma => write!(f, ","),
            Tok::Slash => write!(f, "/"),
            Tok::OPlus => write!(f, "(+)"),
        }
    }
}

fn lex(text: &str) -> Result<Vec<Tok>, CoreError> {
    let bytes = text.as_bytes();
    let mut toks = Vec::new();
    let mut i = 0;
    let read_int = |i: &mut usize| -> Result<usize, CoreError> {
        let mut value: usize = 0;
        while *i < bytes.len() && bytes[*i].is_ascii_digit() {
            value = value
                .checked_mul(10)
                .and_then(|v| v.checked_add((bytes[*i] - b'0') as usize))
                .ok_or_else(|| CoreError::InvalidSpec("integer literal overflows".into()))?;
            *i += 1;
        }
        Ok(value)
    };
    while i < bytes.len() {
        let c = bytes[i];
        match c {
            b' ' | b'\t' | b'\r' | b'\n' => i += 1,
            b'(' => {
                if bytes[i..].starts_with(b"(+)") {
                    toks.push(Tok::OPlus);
                    i += 3;
                } else {
                    toks.push(Tok::LParen);
                    i += 1;
                }
            }
            b')' => {
                toks.push(Tok::RParen);
                i += 1;
            }
            b'{' => {
                toks.push(Tok::LBrace);
                i += 1;
            }
            b'}' => {
                toks.push(Tok::RBrace);
                i += 1;
            }
            b',' => {
                toks.push(Tok::Comma);
                i += 1;
            }
            b'/' => {
                toks.push(Tok::Slash);
                i += 1;
            }
            b'Z' if i + 1 < bytes.len() && bytes[i + 1].is_ascii_digit() => {
                i += 1;
                toks.push(Tok::Znum(read_int(&mut i)?));
            }
            b'0'..=b'9' => toks.push(Tok::Int(read_int(&mut i)?)),
            b'a'..=b'z' => {
                let start = i;
                while i < bytes.len() && (bytes[i].is_ascii_lowercase() || bytes[i].is_ascii_digit())
                {
                    i += 1;
                }
                toks.push(Tok::Kw(text[start..i].to_string()));
            }
            other => {
                return Err(CoreError::InvalidSpec(format!(
                    "parse error at token {}: unrecognized character '{}'",
                    toks.len() + 1,
                    other as char
                )));
            }
        }
    }
    Ok(toks)
}

struct Parser {
    toks: Vec<Tok>,
    pos: usize,
}

impl Parser {
    fn err<T>(&self, msg: &str) -> Result<T, CoreError> {
        let found = match self.toks.get(self.pos) {
            Some(t) => format!("found '{t}'"),
            None => "found end of input".to_string(),
        };
        Err(CoreError::InvalidSpec(format!(
            "parse error at token {}: {msg}, {found}",
            self.pos + 1
        )))
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn eat(&mut self, expected: &Tok, what: &str) -> Result<(), CoreError> {
        if self.peek() == Some(expected) {
            self.pos += 1;
            Ok(())
        } else {
            self.err(what)
        }
    }

    fn int_list(&mut self, close: Tok, what: &str) -> Result<Vec<usize>, CoreError> {
        let mut items = Vec::new();
        if self.peek() == Some(&close) {
            self.pos += 1;
            return Ok(items);
        }
        loop {
            match self.peek() {
                Some(&Tok::Int(v)) => {
                    items.push(v);
                    self.pos += 1;
                }
                _ => return self.err(what),
            }
            match self.peek() {
                Some(Tok::Comma) => self.pos += 1,
                Some(t) if *t == close => {
                    self.pos += 1;
                    return Ok(items);
                }
                _ => return self.err("expected ',' or closing delimiter"),
            }
        }
    }

    fn product(&mut self) -> Result<RingSpec, CoreError> {
        let first = self.idealized()?;
        let mut factors = vec![first];
        while matches!(self.peek(), Some(Tok::Kw(k)) if k == "x") {
            self.pos += 1;
            factors.push(self.idealized()?);
        }
        if factors.len() == 1 {
            Ok(factors.pop().expect("nonempty"))
        } else {
            Ok(RingSpec::Product(factors))
        }
    }

    fn idealized(&mut self) -> Result<RingSpec, CoreError> {
        let mut spec = self.quotiented()?;
        while self.peek() == Some(&Tok::OPlus) {
            self.pos += 1;
            self.eat(&Tok::LBrace, "expected '{' after '(+)'")?;
            let members = self.int_list(Tok::RBrace, "expected a module member index")?;
            spec = RingSpec::Idealization(Box::new(spec), ActionKind::Natural, members);
        }
        Ok(spec)
    }

    fn quotiented(&mut self) -> Result<RingSpec, CoreError> {
        let mut spec = self.atom()?;
        while self.peek() == Some(&Tok::Slash) {
            self.pos += 1;
            self.eat(&Tok::LParen, "expected '(' after '/'")?;
            let gens = self.int_list(Tok::RParen, "expected a generator index")?;
            spec = RingSpec::Quotient(Box::new(spec), gens);
        }
        Ok(spec)
    }

    fn atom(&mut self) -> Result<RingSpec, CoreError> {
        match self.peek().cloned() {
            Some(Tok::Znum(n)) => {
                self.pos += 1;
                Ok(RingSpec::Zmod(n))
            }
            Some(Tok::LParen) => {
                self.pos += 1;
                let inner = self.product()?;
                self.eat(&Tok::RParen, "expected ')'")?;
                Ok(inner)
            }
            Some(Tok::Kw(k)) if k == "idealization" => {
                self.pos += 1;
                self.eat(&Tok::LParen, "expected '(' after 'idealization'")?;
                let base = self.product()?;
                self.eat(&Tok::Comma, "expected ',' after the base ring")?;
                match self.peek() {
                    Some(Tok::Kw(k)) if k == "proj1" => self.pos += 1,
                    _ => return self.err("expected 'proj1'"),
                }
                self.eat(&Tok::Comma, "expected ',' after 'proj1'")?;
                self.eat(&Tok::LBrace, "expected '{'")?;
                let members = self.int_list(Tok::RBrace, "expected a module member index")?;
                self.eat(&Tok::RParen, "expected ')'")?;
                Ok(RingSpec::Idealization(Box::new(base), ActionKind::FirstFactor, members))
            }
            _ => self.err("expected a ring spec"),
        }
    }
}

// Binding strength used by the printer; higher binds tighter.
fn level(spec: &RingSpec) -> u8 {
    match spec {
        RingSpec::Product(_) => 0,
        RingSpec::Idealization(_, ActionKind::Natural, _) => 1,
        RingSpec::Quotient(..) => 2,
        RingSpec::Zmod(_) | RingSpec::Idealization(_, ActionKind::FirstFactor, _) => 3,
    }
}

fn print_at(spec: &RingSpec, min_level: u8, out: &mut String) {
    let own = level(spec);
    if own < min_level {
        out.push('(');
        print_at(spec, 0, out);
        out.push(')');
        return;
    }
    let join_ints = |items: &[usize]| -> String {
        items.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",")
    };
    match spec {
        RingSpec::Zmod(n) => out.push_str(&format!("Z{n}")),
        RingSpec::Product(factors) => {
            for (k, f) in factors.iter().enumerate() {
                if k > 0 {
                    out.push_str(" x ");
                }
                print_at(f, 1, out);
            }
        }
        RingSpec::Idealization(base, ActionKind::Natural, members) => {
            print_at(base, 1, out);
            out.push_str(&format!(" (+) {{{}}}", join_ints(members)));
        }
        RingSpec::Quotient(base, gens) => {
            print_at(base, 2, out);
            out.push_str(&format!("/({})", join_ints(gens)));
        }
        RingSpec::Idealization(base, ActionKind::FirstFactor, members) => {
            out.push_str("idealization(");
            print_at(base, 0, out);
            out.push_str(&format!(", proj1, {{{}}})", join_ints(members)));
        }
    }
}

impl fmt::Display for RingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut out = String::new();
        print_at(self, 0, &mut out);
        f.write_str(&out)
    }
}

impl RingSpec {
    /// Parses spec text; errors carry the 1-based token position.
    pub fn parse(text: &str) -> Result<RingSpec, CoreError> {
        let toks = lex(text)?;
        if toks.is_empty() {
            return Err(CoreError::InvalidSpec("parse error at token 1: empty spec".into()));
        }
        let mut parser = Parser { toks, pos: 0 };
        let spec = parser.product()?;
        if parser.pos != parser.toks.len() {
            return parser.err("expected end of input");
        }
        Ok(spec)
    }

    /// Builds the ring, enforcing `cap` on the order of every constructed
    /// ring (factors included) and validating the final operation tables.
    /// The ring's label is the canonical printed form of this spec.
    pub fn build(&self, cap: usize) -> Result<Arc<FiniteRing>, CoreError> {
        let mut ring = self.build_unvalidated(cap)?;
        {
            let r = Arc::get_mut(&mut ring).expect("freshly built ring has one owner");
            r.set_label(self.to_string());
        }
        let report = ring.validate();
        if let Some(first) = report.violations.first() {
            return Err(CoreError::Internal(format!(
                "constructed ring {} fails validation: {first}",
                ring.label()
            )));
        }
        Ok(ring)
    }

    fn build_unvalidated(&self, cap: usize) -> Result<Arc<FiniteRing>, CoreError> {
        match self {
            RingSpec::Zmod(n) => {
                if *n > cap {
                    return Err(CoreError::CapExceeded { order: *n, cap });
                }
                Ok(Arc::new(zmod(*n)?))
            }
            RingSpec::Product(factors) => {
                let built: Vec<Arc<FiniteRing>> = factors
                    .iter()
                    .map(|f| f.build_unvalidated(cap))
                    .collect::<Result<_, _>>()?;
                let order: usize = built.iter().map(|f| f.order()).product();
                if order > cap {
                    return Err(CoreError::CapExceeded { order, cap });
                }
                Ok(Arc::new(product(&built)?))
            }
            RingSpec::Quotient(base, gens) => {
                let base_ring = base.build_unvalidated(cap)?;
                Ok(quotient(&base_ring, gens)?.ring)
            }
            RingSpec::Idealization(base, kind, members) => {
                let mut unique = members.to_vec();
                unique.sort_unstable();
                unique.dedup();
                match kind {
                    ActionKind::Natural => {
                        let base_ring = base.build_unvalidated(cap)?;
                        let order = base_ring.order() * unique.len().max(1);
                        if order > cap {
                            return Err(CoreError::CapExceeded { order, cap });
                        }
                        let module = ModuleSpec::natural(&base_ring, members)?;
                        Ok(Arc::new(idealization(&base_ring, &module)?))
                    }
                    ActionKind::FirstFactor => {
                        let RingSpec::Product(factor_specs) = base.as_ref() else {
                            return Err(CoreError::InvalidSpec(
                                "proj1 action requires a product base".into(),
                            ));
                        };
                        let built: Vec<Arc<FiniteRing>> = factor_specs
                            .iter()
                            .map(|f| f.build_unvalidated(cap))
                            .collect::<Result<_, _>>()?;
                        let dims: Vec<usize> = built.iter().map(|f| f.order()).collect();
                        let base_order: usize = dims.iter().product();
                        let order = base_order * unique.len().max(1);
                        if base_order > cap || order > cap {
                            return Err(CoreError::CapExceeded {
                                order: order.max(base_order),
                                cap,
                            });
                        }
                        let base_ring = Arc::new(product(&built)?);
                        let module = ModuleSpec::first_factor(&built[0], &dims, members)?;
                        Ok(Arc::new(idealization(&base_ring, &module)?))
                    }
                }
            }
        }
    }
}
