use num_traits::One;
use splinekit_core::exactla::Rational;
use splinekit_core::polyring::{Exponent, HPoly, VarSet};

use super::{parse_rational, ParseError};

struct Cursor<'a> {
    text: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn peek(&self) -> Option<char> {
        self.text[self.pos..].chars().next()
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.pos += 1;
        }
    }

    fn error(&self, at: usize, message: impl Into<String>) -> ParseError {
        let before = &self.text[..at];
        let line = before.matches('\n').count() + 1;
        let column = before.rsplit('\n').next().map_or(0, |l| l.chars().count()) + 1;
        ParseError::new(line, column, message)
    }

    fn take_while(&mut self, f: impl Fn(char) -> bool) -> &'a str {
        let start = self.pos;
        while self.peek().is_some_and(&f) {
            self.pos += self.peek().map_or(0, char::len_utf8);
        }
        &self.text[start..self.pos]
    }

    fn factor(&mut self, coeff: &mut Rational, exp: &mut Exponent) -> Result<(), ParseError> {
        self.skip_ws();
        let at = self.pos;
        match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                let s = self.take_while(|c| c.is_ascii_digit() || c == '/');
                *coeff *= parse_rational(s).map_err(|m| self.error(at, m))?;
            }
            Some(c @ ('x' | 'y' | 'z')) => {
                self.pos += 1;
                let i = (c as u8 - b'x') as usize;
                self.skip_ws();
                let mut k = 1;
                if self.peek() == Some('^') {
                    self.pos += 1;
                    self.skip_ws();
                    let at = self.pos;
                    let s = self.take_while(|c| c.is_ascii_digit());
                    k = s.parse().map_err(|_| self.error(at, "expected an exponent"))?;
                }
                exp[i] += k;
            }
            Some(c) => return Err(self.error(at, format!("unexpected {c:?}"))),
            None => return Err(self.error(at, "unexpected end of input")),
        }
        Ok(())
    }
}

/// Parses `c*x^a*y^b*z^c + ...` into `Q[x, y, z]`; every term must have the
/// same total degree.
pub fn parse_poly(text: &str) -> Result<HPoly, ParseError> {
    let mut cur = Cursor { text, pos: 0 };
    let mut terms: Vec<(Exponent, Rational)> = Vec::new();
    let mut degree = None;
    cur.skip_ws();
    if cur.peek().is_none() {
        return Err(cur.error(0, "empty polynomial"));
    }
    let mut first = true;
    loop {
        cur.skip_ws();
        let start = cur.pos;
        let mut coeff = Rational::one();
        match cur.peek() {
            Some('+') => cur.pos += 1,
            Some('-') => {
                cur.pos += 1;
                coeff = -coeff;
            }
            _ if first => {}
            Some(c) => return Err(cur.error(start, format!("expected '+' or '-', found {c:?}"))),
            None => break,
        }
        first = false;
        let mut exp = [0u32; 3];
        cur.factor(&mut coeff, &mut exp)?;
        loop {
            cur.skip_ws();
            if cur.peek() != Some('*') {
                break;
            }
            cur.pos += 1;
            cur.factor(&mut coeff, &mut exp)?;
        }
        let d: u32 = exp.iter().sum();
        match degree {
            None => degree = Some(d),
            Some(e) if e != d => {
                return Err(cur.error(start, format!("term of degree {d} in a polynomial of degree {e}")))
            }
            _ => {}
        }
        terms.push((exp, coeff));
        cur.skip_ws();
        if cur.peek().is_none() {
            break;
        }
    }
    HPoly::from_terms(VarSet::XYZ, &terms).map_err(|e| cur.error(0, e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use splinekit_core::exactla::{rat, ratio};
    use splinekit_core::polyring::Var;

    #[test]
    fn terms() {
        let f = parse_poly("3*x^2*y - 1/2*z^3 + y*y*x").unwrap();
        assert_eq!(f.degree(), 3);
        assert_eq!(f.coeff(&[2, 1, 0]), rat(3));
        assert_eq!(f.coeff(&[1, 2, 0]), rat(1));
        assert_eq!(f.coeff(&[0, 0, 3]), ratio(-1, 2));
        assert_eq!(parse_poly(&f.to_string()).unwrap(), f);
        let y = HPoly::var(VarSet::XYZ, Var::Y).unwrap();
        assert_eq!(parse_poly("-y").unwrap(), y.scale(&rat(-1)));
        assert_eq!(parse_poly("7").unwrap().degree(), 0);
    }

    #[test]
    fn rejects() {
        let e = parse_poly("x^2 + y").unwrap_err();
        assert_eq!((e.line, e.column), (1, 5));
        assert!(parse_poly("x +").is_err());
        assert!(parse_poly("2 x").is_err());
        assert!(parse_poly("w").is_err());
        assert!(parse_poly("").is_err());
        assert!(parse_poly("x^").is_err());
    }
}
