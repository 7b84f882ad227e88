//! Parser for Temperley–Lieb expressions.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary (('*')? unary)*          juxtaposition multiplies
//! unary  := ('-' | '+') unary | power
//! power  := atom ('^' ['-'] INT)?
//! atom   := INT | 'A' | 'delta' | 'Id' [INT] | 'e' INT ('e' INT)*
//!         | '(' expr ')' | ('bar' | 'sigma') '(' expr ')'
//!         | ('w' | 'u') '(' ('Id' [INT] | INT) ')'
//! ```
//!
//! `*` between two elements is composition; a scalar added to a square
//! element stands for that multiple of the identity. Negative powers are
//! allowed only for units `±A^n`.

use num_bigint::BigInt;
use thiserror::Error;

use crate::coeff::LaurentPoly;
use crate::sliding;
use crate::tl::TlElement;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExprError {
    #[error("syntax error at column {col}: {msg}")]
    Syntax { col: usize, msg: String },
    #[error("type error at column {col}: {msg}")]
    Type { col: usize, msg: String },
}

/// Parses an element of `TL(k, k)` (or any `TL(m, n)` when `k` is absent
/// and every generator carries its own strand count through `Id<k>`).
pub fn parse_element(text: &str, k: Option<usize>) -> Result<TlElement, ExprError> {
    let mut p = Parser::new(text, k)?;
    let v = p.expr()?;
    p.expect_end()?;
    match v {
        Value::Elem(x) => Ok(x),
        Value::Scalar(c) => match k {
            Some(k) => Ok(TlElement::identity(k).scale(&c)),
            None => Err(ExprError::Type {
                col: 1,
                msg: "expression is a scalar; a strand count is needed to read it as an element".into(),
            }),
        },
    }
}

/// Parses a Laurent polynomial such as `A^10 - A^6`.
pub fn parse_scalar(text: &str) -> Result<LaurentPoly, ExprError> {
    let mut p = Parser::new(text, None)?;
    let v = p.expr()?;
    p.expect_end()?;
    match v {
        Value::Scalar(c) => Ok(c),
        Value::Elem(_) => Err(ExprError::Type { col: 1, msg: "expected a scalar".into() }),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
}

#[derive(Clone, Debug)]
enum Value {
    Scalar(LaurentPoly),
    Elem(TlElement),
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end_col: usize,
    k: Option<usize>,
}

fn lex(text: &str) -> Result<Vec<(usize, Tok)>, ExprError> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        let col = i + 1;
        if c.is_ascii_whitespace() {
            i += 1;
            continue;
        }
        let simple = match c {
            '+' => Some(Tok::Plus),
            '-' => Some(Tok::Minus),
            '*' => Some(Tok::Star),
            '^' => Some(Tok::Caret),
            '(' | '[' => Some(Tok::LParen),
            ')' | ']' => Some(Tok::RParen),
            _ => None,
        };
        if let Some(t) = simple {
            out.push((col, t));
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            out.push((col, Tok::Int(text[start..i].parse().unwrap())));
        } else if c.is_ascii_alphabetic() || c == '_' {
            let start = i;
            while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                i += 1;
            }
            out.push((col, Tok::Ident(text[start..i].to_string())));
        } else {
            let ch = text[i..].chars().next().unwrap();
            return Err(ExprError::Syntax { col, msg: format!("unexpected character `{ch}`") });
        }
    }
    Ok(out)
}

/// Splits `e1e2e13` into `[1, 2, 13]`.
fn generator_word(ident: &str) -> Option<Vec<usize>> {
    let mut out = Vec::new();
    let mut rest = ident;
    while !rest.is_empty() {
        let tail = rest.strip_prefix('e')?;
        let digits = tail.bytes().take_while(u8::is_ascii_digit).count();
        if digits == 0 {
            return None;
        }
        out.push(tail[..digits].parse().ok()?);
        rest = &tail[digits..];
    }
    (!out.is_empty()).then_some(out)
}

impl Parser {
    fn new(text: &str, k: Option<usize>) -> Result<Self, ExprError> {
        Ok(Self { toks: lex(text)?, pos: 0, end_col: text.len() + 1, k })
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn col(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end_col, |(c, _)| *c)
    }

    fn next(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|(_, t)| t.clone());
        self.pos += 1;
        t
    }

    fn syntax<T>(&self, msg: impl Into<String>) -> Result<T, ExprError> {
        Err(ExprError::Syntax { col: self.col(), msg: msg.into() })
    }

    fn expect(&mut self, t: Tok, what: &str) -> Result<(), ExprError> {
        if self.peek() == Some(&t) {
            self.pos += 1;
            Ok(())
        } else {
            self.syntax(format!("expected {what}"))
        }
    }

    fn expect_end(&self) -> Result<(), ExprError> {
        if self.pos < self.toks.len() {
            return self.syntax("unexpected trailing input");
        }
        Ok(())
    }

    fn expr(&mut self) -> Result<Value, ExprError> {
        let mut acc = self.term()?;
        loop {
            let col = self.col();
            match self.peek() {
                Some(Tok::Plus) => {
                    self.pos += 1;
                    let rhs = self.term()?;
                    acc = add(acc, rhs, col)?;
                }
                Some(Tok::Minus) => {
                    self.pos += 1;
                    let rhs = self.term()?;
                    acc = add(acc, negate(rhs), col)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Value, ExprError> {
        let mut acc = self.unary()?;
        loop {
            let col = self.col();
            match self.peek() {
                Some(Tok::Star) => {
                    self.pos += 1;
                }
                Some(Tok::Int(_) | Tok::Ident(_) | Tok::LParen) => {}
                _ => return Ok(acc),
            }
            let rhs = self.unary()?;
            acc = mul(acc, rhs, col)?;
        }
    }

    fn unary(&mut self) -> Result<Value, ExprError> {
        if self.peek() == Some(&Tok::Minus) {
            self.pos += 1;
            return Ok(negate(self.unary()?));
        }
        if self.peek() == Some(&Tok::Plus) {
            self.pos += 1;
            return self.unary();
        }
        self.power()
    }

    fn power(&mut self) -> Result<Value, ExprError> {
        let base = self.atom()?;
        if self.peek() != Some(&Tok::Caret) {
            return Ok(base);
        }
        self.pos += 1;
        let col = self.col();
        let paren = self.peek() == Some(&Tok::LParen);
        if paren {
            self.pos += 1;
        }
        let neg = self.peek() == Some(&Tok::Minus);
        if neg {
            self.pos += 1;
        }
        let n = match self.next() {
            Some(Tok::Int(n)) => n,
            _ => {
                self.pos -= 1;
                return self.syntax("expected an integer exponent");
            }
        };
        if paren {
            self.expect(Tok::RParen, "`)`")?;
        }
        let n: u32 = n.try_into().map_err(|_| ExprError::Syntax { col, msg: "exponent too large".into() })?;
        match base {
            Value::Scalar(c) => {
                let p = c.pow(n);
                if !neg {
                    return Ok(Value::Scalar(p));
                }
                match p.unit_inverse() {
                    Some(inv) => Ok(Value::Scalar(inv)),
                    None => Err(ExprError::Type { col, msg: format!("negative power of the non-unit `{c}`") }),
                }
            }
            Value::Elem(x) => {
                if neg {
                    return Err(ExprError::Type { col, msg: "negative power of an element".into() });
                }
                if x.m() != x.n() {
                    return Err(ExprError::Type { col, msg: "power of a non-square element".into() });
                }
                let mut acc = TlElement::identity(x.m());
                for _ in 0..n {
                    acc = acc.compose(&x).unwrap();
                }
                Ok(Value::Elem(acc))
            }
        }
    }

    fn strand_count(&self, explicit: Option<usize>, col: usize, what: &str) -> Result<usize, ExprError> {
        match (explicit, self.k) {
            (Some(n), Some(k)) if n != k => {
                Err(ExprError::Type { col, msg: format!("{what} has {n} strands but the context has {k}") })
            }
            (Some(n), _) => Ok(n),
            (None, Some(k)) => Ok(k),
            (None, None) => Err(ExprError::Type { col, msg: format!("{what} needs a strand count") }),
        }
    }

    fn atom(&mut self) -> Result<Value, ExprError> {
        let col = self.col();
        match self.next() {
            Some(Tok::Int(n)) => Ok(Value::Scalar(LaurentPoly::constant(n))),
            Some(Tok::LParen) => {
                let v = self.expr()?;
                self.expect(Tok::RParen, "`)`")?;
                Ok(v)
            }
            Some(Tok::Ident(name)) => self.ident(&name, col),
            Some(_) => {
                self.pos -= 1;
                self.syntax("expected a term")
            }
            None => self.syntax("unexpected end of input"),
        }
    }

    fn ident(&mut self, name: &str, col: usize) -> Result<Value, ExprError> {
        match name {
            "A" => return Ok(Value::Scalar(LaurentPoly::a())),
            "delta" => return Ok(Value::Scalar(LaurentPoly::delta())),
            "bar" | "sigma" => {
                self.expect(Tok::LParen, "`(`")?;
                let inner = self.expr()?;
                self.expect(Tok::RParen, "`)`")?;
                return Ok(match inner {
                    Value::Scalar(c) if name == "bar" => Value::Scalar(c.conjugate()),
                    Value::Scalar(c) => Value::Scalar(c),
                    Value::Elem(x) if name == "bar" => Value::Elem(x.bar()),
                    Value::Elem(x) => {
                        if x.m() != x.n() {
                            return Err(ExprError::Type { col, msg: "sigma needs a square element".into() });
                        }
                        Value::Elem(x.sigma())
                    }
                });
            }
            "w" | "u" => {
                self.expect(Tok::LParen, "`(`")?;
                let arg_col = self.col();
                let explicit = match self.next() {
                    Some(Tok::Int(n)) => Some(to_usize(&n, arg_col)?),
                    Some(Tok::Ident(id)) if id == "Id" => None,
                    Some(Tok::Ident(id)) if id.starts_with("Id") => match id[2..].parse::<usize>() {
                        Ok(n) => Some(n),
                        Err(_) => {
                            return Err(ExprError::Syntax { col: arg_col, msg: format!("unknown identifier `{id}`") })
                        }
                    },
                    _ => {
                        return Err(ExprError::Syntax {
                            col: arg_col,
                            msg: format!("{name}(...) takes an identity such as Id4"),
                        })
                    }
                };
                self.expect(Tok::RParen, "`)`")?;
                let k = self.strand_count(explicit, arg_col, "the identity")?;
                let x = if name == "w" { sliding::w_id(k) } else { sliding::u_id(k) };
                return x.map(Value::Elem).map_err(|e| ExprError::Type { col: arg_col, msg: e.to_string() });
            }
            _ => {}
        }
        if let Some(rest) = name.strip_prefix("Id") {
            let explicit = if rest.is_empty() {
                None
            } else {
                Some(
                    rest.parse::<usize>()
                        .map_err(|_| ExprError::Syntax { col, msg: format!("unknown identifier `{name}`") })?,
                )
            };
            let k = self.strand_count(explicit, col, "Id")?;
            return Ok(Value::Elem(TlElement::identity(k)));
        }
        if let Some(word) = generator_word(name) {
            let k = self.strand_count(None, col, &format!("`{name}`"))?;
            let mut acc = TlElement::identity(k);
            for i in word {
                let g = TlElement::generator(k, i).map_err(|e| ExprError::Type { col, msg: e.to_string() })?;
                acc = acc.compose(&g).unwrap();
            }
            return Ok(Value::Elem(acc));
        }
        Err(ExprError::Syntax { col, msg: format!("unknown identifier `{name}`") })
    }
}

fn to_usize(n: &BigInt, col: usize) -> Result<usize, ExprError> {
    n.try_into().map_err(|_| ExprError::Syntax { col, msg: "number too large".into() })
}

fn negate(v: Value) -> Value {
    match v {
        Value::Scalar(c) => Value::Scalar(-c),
        Value::Elem(x) => Value::Elem(-x),
    }
}

fn promote(c: &LaurentPoly, like: &TlElement, col: usize) -> Result<TlElement, ExprError> {
    if like.m() != like.n() {
        return Err(ExprError::Type { col, msg: "cannot add a scalar to a non-square element".into() });
    }
    Ok(TlElement::identity(like.m()).scale(c))
}

fn add(a: Value, b: Value, col: usize) -> Result<Value, ExprError> {
    let type_err = |e: crate::tl::TlError| ExprError::Type { col, msg: e.to_string() };
    Ok(match (a, b) {
        (Value::Scalar(x), Value::Scalar(y)) => Value::Scalar(x + y),
        (Value::Elem(x), Value::Elem(y)) => Value::Elem(x.checked_add(&y).map_err(type_err)?),
        (Value::Scalar(c), Value::Elem(x)) | (Value::Elem(x), Value::Scalar(c)) => {
            Value::Elem(promote(&c, &x, col)?.checked_add(&x).map_err(type_err)?)
        }
    })
}

fn mul(a: Value, b: Value, col: usize) -> Result<Value, ExprError> {
    Ok(match (a, b) {
        (Value::Scalar(x), Value::Scalar(y)) => Value::Scalar(x * y),
        (Value::Scalar(c), Value::Elem(x)) | (Value::Elem(x), Value::Scalar(c)) => Value::Elem(x.scale(&c)),
        (Value::Elem(x), Value::Elem(y)) => {
            Value::Elem(x.compose(&y).map_err(|e| ExprError::Type { col, msg: e.to_string() })?)
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tl::Diagram;

    #[test]
    fn tl_reduction_on_parse() {
        let x = parse_element("e1*e2*e1", Some(4)).unwrap();
        assert_eq!(x, TlElement::generator(4, 1).unwrap());
        assert_eq!(parse_element("e1e2e1", Some(4)).unwrap(), x);
        let sq = parse_element("e1^2", Some(3)).unwrap();
        assert_eq!(sq, x_k(3, 1).scale(&LaurentPoly::delta()));
    }

    fn x_k(k: usize, i: usize) -> TlElement {
        TlElement::generator(k, i).unwrap()
    }

    #[test]
    fn scalars_and_units() {
        assert_eq!(parse_scalar("A^10 - A^6").unwrap().to_string(), "A^10 - A^6");
        assert_eq!(parse_scalar("(A^2+A^-2)*(A^2-A^-2)").unwrap(), LaurentPoly::from_terms([(4, 1), (-4, -1)]));
        assert_eq!(parse_scalar("(-A^3)^-1").unwrap(), LaurentPoly::monomial(-1, -3));
        assert!(matches!(parse_scalar("(1+A)^-1"), Err(ExprError::Type { .. })));
        assert_eq!(parse_scalar("delta").unwrap(), LaurentPoly::delta());
    }

    #[test]
    fn scalar_plus_element_is_identity_multiple() {
        let x = parse_element("1 + e1", Some(2)).unwrap();
        assert_eq!(x, TlElement::identity(2) + x_k(2, 1));
        assert_eq!(parse_element("A^2", Some(3)).unwrap(), TlElement::identity(3).scale(&LaurentPoly::a_pow(2)));
    }

    #[test]
    fn juxtaposition_and_brackets() {
        let a = parse_element("(A^8-1)[e2e3 + e3e2]", Some(4)).unwrap();
        let b = parse_element("(A^8 - 1)*(e2*e3 + e3*e2)", Some(4)).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn mirror_of_w2() {
        let x = parse_element("bar(w(Id2))", None).unwrap();
        assert_eq!(x.to_string(), "A^-2*Id2 + (1 - A^4)*e1");
        let y = parse_element("sigma(e1*e2)", Some(4)).unwrap();
        assert_eq!(y, parse_element("e3*e2", Some(4)).unwrap());
    }

    #[test]
    fn errors_carry_columns() {
        assert_eq!(
            parse_element("e1 + ", Some(3)),
            Err(ExprError::Syntax { col: 6, msg: "unexpected end of input".into() })
        );
        assert!(matches!(parse_element("e1 $ e2", Some(3)), Err(ExprError::Syntax { col: 4, .. })));
        assert!(matches!(parse_element("e4", Some(4)), Err(ExprError::Type { col: 1, .. })));
        assert!(matches!(parse_element("Id3 * Id4", None), Err(ExprError::Type { col: 5, .. })));
        assert!(matches!(parse_element("e1", None), Err(ExprError::Type { .. })));
        assert!(matches!(parse_element("foo", Some(2)), Err(ExprError::Syntax { .. })));
        assert!(matches!(parse_element("(e1", Some(2)), Err(ExprError::Syntax { .. })));
    }

    #[test]
    fn round_trip_of_printed_elements() {
        let x = parse_element("A^6*w(Id4) - Id4", Some(4)).unwrap();
        let again = parse_element(&x.to_string(), Some(4)).unwrap();
        assert_eq!(x, again);
        let d = Diagram::identity(3);
        assert_eq!(parse_element(&TlElement::from_diagram(d).to_string(), None).unwrap(), TlElement::identity(3));
    }
}
