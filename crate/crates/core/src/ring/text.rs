//! The bit-exact polynomial text grammar: terms in decreasing graded-lex
//! order, `15/2*t^2` style coefficients, `t^-2` style exponents, Gaussian
//! coefficients as `(a+bi)`. Parsing accepts exactly what rendering emits
//! (plus redundant whitespace, explicit `1*` factors, and `^1` exponents).

use num::{BigInt, BigRational, One, Signed, Zero};

use super::{CoeffDomain, Coefficient, LaurentPoly, Monomial, Ring, Var};
use crate::error::{Error, Result};

fn render_rational(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

fn render_gaussian(re: &BigRational, im: &BigRational) -> String {
    if im.is_negative() {
        format!("({}-{}i)", render_rational(re), render_rational(&-im))
    } else {
        format!("({}+{}i)", render_rational(re), render_rational(im))
    }
}

fn render_vars(ring: &Ring, m: &Monomial) -> String {
    let mut parts = Vec::new();
    for (i, v) in ring.vars.iter().enumerate() {
        let e = m.exp(i);
        if e == 0 {
            continue;
        }
        if e == 1 {
            parts.push(v.as_char().to_string());
        } else {
            parts.push(format!("{}^{}", v.as_char(), e));
        }
    }
    parts.join("*")
}

pub(super) fn render_poly(p: &LaurentPoly) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let ring = p.ring();
    let mut out = String::new();
    for (idx, (m, c)) in p.terms_desc().enumerate() {
        let vars = render_vars(&ring, m);
        let (re, im) = c.parts();
        let (joiner, body) = if !c.is_real() {
            let cs = render_gaussian(&re, &im);
            let body = if vars.is_empty() { cs } else { format!("{cs}*{vars}") };
            (" + ", body)
        } else {
            let neg = re.is_negative();
            let mag = re.abs();
            let body = if vars.is_empty() {
                render_rational(&mag)
            } else if mag.is_one() {
                vars
            } else {
                format!("{}*{vars}", render_rational(&mag))
            };
            (if neg { " - " } else { " + " }, body)
        };
        if idx == 0 {
            if joiner == " - " {
                out.push('-');
            }
        } else {
            out.push_str(joiner);
        }
        out.push_str(&body);
    }
    out
}

struct Parser<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(s: &'a str) -> Parser<'a> {
        Parser { bytes: s.as_bytes(), pos: 0 }
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::PolyParse { msg: msg.into(), offset: self.pos })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<u8> {
        let b = self.peek()?;
        self.pos += 1;
        Some(b)
    }

    fn eat(&mut self, b: u8) -> bool {
        if self.peek() == Some(b) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn parse_uint(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos == start {
            return self.err("expected a number");
        }
        let s = std::str::from_utf8(&self.bytes[start..self.pos]).unwrap();
        Ok(s.parse().unwrap())
    }

    fn parse_int(&mut self) -> Result<BigInt> {
        let neg = self.eat(b'-');
        if !neg {
            self.eat(b'+');
        }
        let n = self.parse_uint()?;
        Ok(if neg { -n } else { n })
    }

    /// `num` or `num/den`, unsigned.
    fn parse_unsigned_rational(&mut self) -> Result<BigRational> {
        let n = self.parse_uint()?;
        if self.eat(b'/') {
            let d = self.parse_uint()?;
            if d.is_zero() {
                return self.err("zero denominator");
            }
            Ok(BigRational::new(n, d))
        } else {
            Ok(BigRational::from(n))
        }
    }

    fn parse_signed_rational(&mut self) -> Result<BigRational> {
        let neg = self.eat(b'-');
        if !neg {
            self.eat(b'+');
        }
        let r = self.parse_unsigned_rational()?;
        Ok(if neg { -r } else { r })
    }

    /// `(re+imi)` or `(re-imi)`.
    fn parse_gaussian(&mut self) -> Result<(BigRational, BigRational)> {
        let re = self.parse_signed_rational()?;
        let sign = match self.bump() {
            Some(b'+') => 1,
            Some(b'-') => -1,
            _ => return self.err("expected `+` or `-` in Gaussian coefficient"),
        };
        let im = self.parse_unsigned_rational()?;
        if !self.eat(b'i') {
            return self.err("expected `i` in Gaussian coefficient");
        }
        if !self.eat(b')') {
            return self.err("expected `)` closing Gaussian coefficient");
        }
        let im = if sign < 0 { -im } else { im };
        Ok((re, im))
    }

    fn coerce(&self, ring: Ring, re: BigRational, im: BigRational) -> Result<Coefficient> {
        match ring.domain {
            CoeffDomain::Rational => {
                if !im.is_zero() {
                    return Err(Error::PolyParse {
                        msg: "Gaussian coefficient in a rational-coefficient ring".into(),
                        offset: self.pos,
                    });
                }
                Ok(Coefficient::Rat(re))
            }
            CoeffDomain::Gaussian => Ok(Coefficient::Gauss { re, im }),
            CoeffDomain::Gf2 => {
                if !im.is_zero() || !re.denom().is_one() {
                    return Err(Error::PolyParse {
                        msg: "GF(2) coefficients must be integers".into(),
                        offset: self.pos,
                    });
                }
                let odd = re.numer().bit(0);
                Ok(Coefficient::F2(odd))
            }
        }
    }

    /// One term: optional coefficient, optional variable factors.
    fn parse_term(&mut self, ring: Ring) -> Result<LaurentPoly> {
        let mut coeff: Option<Coefficient> = None;
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let (re, im) = self.parse_gaussian()?;
                coeff = Some(self.coerce(ring, re, im)?);
            }
            Some(b) if b.is_ascii_digit() => {
                let r = self.parse_unsigned_rational()?;
                coeff = Some(self.coerce(ring, r, BigRational::zero())?);
            }
            _ => {}
        }
        let mut exps = vec![0i64; ring.arity()];
        let mut saw_var = false;
        loop {
            if coeff.is_some() || saw_var {
                // factors are joined by `*`
                let save = self.pos;
                if !self.eat(b'*') {
                    break;
                }
                if !matches!(self.peek(), Some(c) if c.is_ascii_alphabetic()) {
                    self.pos = save;
                    break;
                }
            } else if !matches!(self.peek(), Some(c) if c.is_ascii_alphabetic()) {
                break;
            }
            let c = self.bump().unwrap() as char;
            let var = match Var::from_char(c) {
                Some(v) => v,
                None => return self.err(format!("unknown variable `{c}`")),
            };
            let idx = match ring.vars.index_of(var) {
                Some(i) => i,
                None => return self.err(format!("variable `{c}` not in ring {ring}")),
            };
            let e = if self.eat(b'^') {
                let n = self.parse_int()?;
                i64::try_from(n).map_err(|_| Error::PolyParse {
                    msg: "exponent out of range".into(),
                    offset: self.pos,
                })?
            } else {
                1
            };
            exps[idx] = exps[idx].checked_add(e).ok_or(Error::PolyParse {
                msg: "exponent out of range".into(),
                offset: self.pos,
            })?;
            saw_var = true;
        }
        if coeff.is_none() && !saw_var {
            return self.err("expected a term");
        }
        let c = coeff.unwrap_or_else(|| Coefficient::one(ring.domain));
        Ok(LaurentPoly::monomial(ring, Monomial::from_exps(&exps), c))
    }

    fn parse_poly(&mut self, ring: Ring) -> Result<LaurentPoly> {
        let mut acc = LaurentPoly::zero(ring);
        let mut first = true;
        loop {
            let negate = match self.peek() {
                Some(b'-') => {
                    self.pos += 1;
                    true
                }
                Some(b'+') => {
                    self.pos += 1;
                    false
                }
                None if !first => break,
                None => return self.err("empty polynomial"),
                _ if first => false,
                _ => return self.err("expected `+` or `-` between terms"),
            };
            let term = self.parse_term(ring)?;
            acc = acc.try_add(&if negate { term.neg() } else { term })?;
            first = false;
            if self.peek().is_none() {
                break;
            }
        }
        Ok(acc)
    }
}

/// Parse a polynomial in the text grammar over the given ring.
pub fn parse_poly(s: &str, ring: Ring) -> Result<LaurentPoly> {
    let mut p = Parser::new(s);
    p.parse_poly(ring)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn renders_spec_examples() {
        let ring = Ring::rational(&[Var::T]);
        let p = parse_poly("3*t^4 + 15/2*t^2 + 3", ring).unwrap();
        assert_eq!(p.to_string(), "3*t^4 + 15/2*t^2 + 3");

        let gf = Ring::gf2(&[Var::X]);
        let q = parse_poly("x^8 + x^6 + x^2 + 1", gf).unwrap();
        assert_eq!(q.to_string(), "x^8 + x^6 + x^2 + 1");
    }

    #[test]
    fn round_trips_negative_exponents_and_gaussians() {
        let ring = Ring::gaussian(&[Var::T]);
        for s in ["2 + t^-2", "(1+1i)*t - (0+2i)", "t^2 - 2*t + 1", "0", "-t^3 + 1/2"] {
            let p = parse_poly(s, ring).unwrap();
            let r = p.to_string();
            let p2 = parse_poly(&r, ring).unwrap();
            assert_eq!(p, p2, "grammar round trip for `{s}` -> `{r}`");
        }
        // canonical spelling is regenerated
        let p = parse_poly("t^-2 + 2", ring).unwrap();
        assert_eq!(p.to_string(), "2 + t^-2");
    }

    #[test]
    fn rejects_unknown_tokens() {
        let ring = Ring::rational(&[Var::T]);
        assert!(parse_poly("t + z", ring).is_err());
        assert!(parse_poly("t ^^ 2", ring).is_err());
        assert!(parse_poly("q", ring).is_err());
    }

    #[test]
    fn gf2_coefficients_reduce_mod_2() {
        let gf = Ring::gf2(&[Var::X]);
        let p = parse_poly("2*x + 3", gf).unwrap();
        assert_eq!(p.to_string(), "1");
    }
}
