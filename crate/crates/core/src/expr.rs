//! Class expressions such as `2*lambda - 1/2 Hn + Hh`.

use crate::divisor::{canonical_symbol, DivisorClass, Space};
use crate::error::{Error, Result};
use crate::rational::{parse_q, qi, Q};

const MAX_LEN: usize = 1 << 16;

fn err(pos: usize, msg: impl Into<String>) -> Error {
    Error::Parse { pos, msg: msg.into() }
}

fn is_symbol_start(c: char) -> bool {
    c.is_alphabetic()
}

fn is_symbol_char(c: char) -> bool {
    c.is_alphanumeric() || matches!(c, '_' | '\'' | '′')
}

struct Cursor<'a> {
    s: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn peek(&self) -> Option<char> {
        self.s[self.pos..].chars().next()
    }

    fn skip_ws(&mut self) {
        while let Some(c) = self.peek().filter(|c| c.is_whitespace()) {
            self.pos += c.len_utf8();
        }
    }

    fn take_while(&mut self, f: impl Fn(char) -> bool) -> &'a str {
        let start = self.pos;
        while let Some(c) = self.peek().filter(|&c| f(c)) {
            self.pos += c.len_utf8();
        }
        &self.s[start..self.pos]
    }
}

/// Terms `(symbol, coefficient)` in source order; repeated symbols are kept.
pub fn parse_terms(s: &str) -> Result<Vec<(&'static str, Q)>> {
    if s.len() > MAX_LEN {
        return Err(err(MAX_LEN, "expression too long"));
    }
    let mut c = Cursor { s, pos: 0 };
    c.skip_ws();
    if c.peek().is_none() {
        return Err(err(0, "empty expression"));
    }
    let mut out = vec![];
    let mut first = true;
    loop {
        c.skip_ws();
        let mut sign = qi(1);
        match c.peek() {
            Some('+') => c.pos += 1,
            Some('-') | Some('−') => {
                c.pos += c.peek().unwrap().len_utf8();
                sign = qi(-1);
            }
            Some(_) if first => {}
            Some(ch) => return Err(err(c.pos, format!("expected '+' or '-', found {ch:?}"))),
            None => return Err(err(c.pos, "dangling operator")),
        }
        first = false;
        c.skip_ws();
        let coeff_pos = c.pos;
        let coeff_text = c.take_while(|ch| ch.is_ascii_digit() || ch == '/');
        let coeff = if coeff_text.is_empty() {
            qi(1)
        } else {
            parse_q(coeff_text).map_err(|e| match e {
                Error::Parse { pos, msg } => err(coeff_pos + pos, msg),
                other => other,
            })?
        };
        c.skip_ws();
        if c.peek() == Some('*') {
            if coeff_text.is_empty() {
                return Err(err(c.pos, "'*' without coefficient"));
            }
            c.pos += 1;
            c.skip_ws();
        }
        let sym_pos = c.pos;
        match c.peek() {
            Some(ch) if is_symbol_start(ch) => {
                let sym = c.take_while(is_symbol_char);
                let canon = canonical_symbol(sym).ok_or_else(|| err(sym_pos, format!("unknown symbol {sym:?}")))?;
                out.push((canon, sign * coeff));
            }
            _ if coeff_text == "0" && out.is_empty() => {
                c.skip_ws();
                if c.peek().is_some() {
                    return Err(err(c.pos, "trailing input after 0"));
                }
                return Ok(out);
            }
            _ => return Err(err(sym_pos, "expected basis symbol")),
        }
        c.skip_ws();
        if c.peek().is_none() {
            return Ok(out);
        }
    }
}

/// Parses an expression into a class on `space`.
pub fn parse_class(s: &str, space: Space) -> Result<DivisorClass> {
    let terms = parse_terms(s)?;
    let space = space.validate()?;
    for (sym, _) in &terms {
        if space.index(sym).is_none() {
            return Err(Error::SpaceMismatch { expected: space.to_string(), got: format!("symbol {sym}") });
        }
    }
    DivisorClass::from_terms(space, &terms)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;

    #[test]
    fn basic() {
        let c = parse_class("2*lambda - 1/2 Hn + Hh", Space::F(19)).unwrap();
        assert_eq!(c.coeffs(), &[qi(2), q(-1, 2), qi(1), qi(0)]);
        assert_eq!(parse_class("0", Space::F(19)).unwrap(), DivisorClass::zero(Space::F(19)));
        assert_eq!(parse_class(&c.to_string(), Space::F(19)).unwrap(), c);
    }

    #[test]
    fn errors() {
        assert!(matches!(parse_terms("2*"), Err(Error::Parse { pos: 2, .. })));
        assert!(parse_terms("Hx").is_err());
        assert!(parse_terms("1/0 Hh").is_err());
        assert!(parse_terms("Hh Hn").is_err());
        assert!(parse_class("Hu", Space::F(18)).is_err());
    }
}
