use alloc::format;
use alloc::string::String;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use super::multi::MultiPoly;
use crate::error::ParseError;

/// Parses an expression over `vars` into expanded canonical form.
///
/// Grammar: `+ - * / ^`, parentheses, integer literals and identifiers.
/// Exponents are nonnegative integer literals; division is only allowed by a
/// nonzero constant. Implicit multiplication (`2x`) is rejected.
pub fn parse(text: &str, vars: &[String]) -> Result<MultiPoly, ParseError> {
    let mut parser = Parser {
        src: text.as_bytes(),
        pos: 0,
        vars,
    };
    let p = parser.expr()?;
    parser.skip_ws();
    if parser.pos < parser.src.len() {
        return Err(ParseError::new(
            parser.pos,
            format!("unexpected character '{}'", parser.src[parser.pos] as char),
        ));
    }
    Ok(p)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    vars: &'a [String],
}

impl Parser<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn nvars(&self) -> usize {
        self.vars.len()
    }

    fn expr(&mut self) -> Result<MultiPoly, ParseError> {
        let mut acc = self.term()?;
        while let Some(c @ (b'+' | b'-')) = self.peek() {
            self.pos += 1;
            let rhs = self.term()?;
            acc = if c == b'+' { &acc + &rhs } else { &acc - &rhs };
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<MultiPoly, ParseError> {
        let mut acc = self.unary()?;
        while let Some(c @ (b'*' | b'/')) = self.peek() {
            let at = self.pos;
            self.pos += 1;
            let rhs = self.unary()?;
            if c == b'*' {
                acc = &acc * &rhs;
            } else {
                let divisor = constant_value(&rhs)
                    .ok_or_else(|| ParseError::new(at, "division by a non-constant"))?;
                if divisor.is_zero() {
                    return Err(ParseError::new(at, "division by zero"));
                }
                acc = acc.scale(&(BigRational::from_integer(1.into()) / divisor));
            }
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<MultiPoly, ParseError> {
        match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                Ok(-&self.unary()?)
            }
            Some(b'+') => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<MultiPoly, ParseError> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.skip_ws();
            let start = self.pos;
            let digits = self.digits();
            if digits.is_empty() {
                return Err(ParseError::new(start, "expected exponent"));
            }
            let e: u32 = digits
                .parse()
                .map_err(|_| ParseError::new(start, "exponent too large"))?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn digits(&mut self) -> &str {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        core::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits")
    }

    fn atom(&mut self) -> Result<MultiPoly, ParseError> {
        let n = self.nvars();
        match self.peek() {
            None => Err(ParseError::new(self.pos, "unexpected end of input")),
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(ParseError::new(self.pos, "expected ')'"));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => {
                let start = self.pos;
                let value: BigInt = self
                    .digits()
                    .parse()
                    .map_err(|_| ParseError::new(start, "bad integer literal"))?;
                if let Some(c) = self.src.get(self.pos) {
                    if c.is_ascii_alphabetic() || *c == b'_' {
                        return Err(ParseError::new(
                            self.pos,
                            "implicit multiplication is not allowed",
                        ));
                    }
                }
                Ok(MultiPoly::constant(n, BigRational::from_integer(value)))
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let start = self.pos;
                while self.pos < self.src.len()
                    && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
                {
                    self.pos += 1;
                }
                let name = core::str::from_utf8(&self.src[start..self.pos]).expect("ascii");
                let index = self.vars.iter().position(|v| v == name).ok_or_else(|| {
                    ParseError::new(start, format!("unknown variable '{}'", name))
                })?;
                Ok(MultiPoly::var(n, index).expect("index from variable list"))
            }
            Some(c) => Err(ParseError::new(
                self.pos,
                format!("unexpected character '{}'", c as char),
            )),
        }
    }
}

fn constant_value(p: &MultiPoly) -> Option<BigRational> {
    match p.total_degree() {
        None => Some(BigRational::zero()),
        Some(0) => Some(p.constant_term()),
        Some(_) => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use alloc::vec::Vec;

    fn names(v: &[&str]) -> Vec<String> {
        v.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn expansion() {
        let xyz = names(&["x", "y", "z"]);
        assert_eq!(parse("x^2 + y^2", &xyz).unwrap().num_terms(), 2);
        let m = parse("x*y*z", &xyz).unwrap();
        assert_eq!(m.num_terms(), 1);
        assert_eq!(m.total_degree(), Some(3));
        let xy = names(&["x", "y"]);
        assert_eq!(
            parse("(x+y)^2 - x^2 - 2*x*y", &xy).unwrap(),
            parse("y^2", &xy).unwrap()
        );
        assert_eq!(
            parse("3/4*x - x/4", &xy).unwrap(),
            parse("x/2", &xy).unwrap()
        );
        assert_eq!(parse("-x^2", &xy).unwrap().to_string(), "-x0^2");
    }

    #[test]
    fn errors() {
        let xy = names(&["x", "y"]);
        assert_eq!(parse("x + w", &xy).unwrap_err().position, 4);
        assert_eq!(parse("2x", &xy).unwrap_err().position, 1);
        assert!(parse("x +", &xy).is_err());
        assert!(parse("(x + y", &xy).is_err());
        assert!(parse("x / y", &xy).is_err());
        assert!(parse("x / 0", &xy).is_err());
        assert!(parse("x ^ y", &xy).is_err());
        assert!(parse("x y", &xy).is_err());
    }
}
