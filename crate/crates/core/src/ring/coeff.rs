use std::fmt;

use num::{BigInt, BigRational, One, Signed, Zero};

/// The supported exact coefficient domains. Gaussian integers are the
/// `Gaussian` domain restricted to integral values; they surface through the
/// gaussian-integer-content unit mode rather than as a separate domain tag.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum CoeffDomain {
    Rational,
    Gaussian,
    Gf2,
}

/// An exact coefficient in one of the three domains.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum Coefficient {
    Rat(BigRational),
    Gauss { re: BigRational, im: BigRational },
    F2(bool),
}

impl Coefficient {
    pub fn domain(&self) -> CoeffDomain {
        match self {
            Coefficient::Rat(_) => CoeffDomain::Rational,
            Coefficient::Gauss { .. } => CoeffDomain::Gaussian,
            Coefficient::F2(_) => CoeffDomain::Gf2,
        }
    }

    pub fn zero(domain: CoeffDomain) -> Coefficient {
        Coefficient::from_int(domain, 0)
    }

    pub fn one(domain: CoeffDomain) -> Coefficient {
        Coefficient::from_int(domain, 1)
    }

    pub fn from_int(domain: CoeffDomain, n: i64) -> Coefficient {
        match domain {
            CoeffDomain::Rational => Coefficient::Rat(BigRational::from(BigInt::from(n))),
            CoeffDomain::Gaussian => Coefficient::Gauss {
                re: BigRational::from(BigInt::from(n)),
                im: BigRational::zero(),
            },
            CoeffDomain::Gf2 => Coefficient::F2(n.rem_euclid(2) == 1),
        }
    }

    pub fn from_ratio(domain: CoeffDomain, num: i64, den: i64) -> Coefficient {
        assert!(den != 0, "zero denominator");
        match domain {
            CoeffDomain::Rational => {
                Coefficient::Rat(BigRational::new(BigInt::from(num), BigInt::from(den)))
            }
            CoeffDomain::Gaussian => Coefficient::Gauss {
                re: BigRational::new(BigInt::from(num), BigInt::from(den)),
                im: BigRational::zero(),
            },
            CoeffDomain::Gf2 => {
                assert!(den % 2 != 0, "denominator not invertible mod 2");
                Coefficient::F2(num.rem_euclid(2) == 1)
            }
        }
    }

    /// Gaussian rational a+bi.
    pub fn gauss_ratio(re: (i64, i64), im: (i64, i64)) -> Coefficient {
        Coefficient::Gauss {
            re: BigRational::new(BigInt::from(re.0), BigInt::from(re.1)),
            im: BigRational::new(BigInt::from(im.0), BigInt::from(im.1)),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Coefficient::Rat(r) => r.is_zero(),
            Coefficient::Gauss { re, im } => re.is_zero() && im.is_zero(),
            Coefficient::F2(b) => !b,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Coefficient::Rat(r) => r.is_one(),
            Coefficient::Gauss { re, im } => re.is_one() && im.is_zero(),
            Coefficient::F2(b) => *b,
        }
    }

    fn check(a: &Coefficient, b: &Coefficient) {
        debug_assert_eq!(a.domain(), b.domain(), "coefficient domain mismatch");
    }

    pub fn add(&self, other: &Coefficient) -> Coefficient {
        Coefficient::check(self, other);
        match (self, other) {
            (Coefficient::Rat(a), Coefficient::Rat(b)) => Coefficient::Rat(a + b),
            (Coefficient::Gauss { re: ar, im: ai }, Coefficient::Gauss { re: br, im: bi }) => {
                Coefficient::Gauss { re: ar + br, im: ai + bi }
            }
            (Coefficient::F2(a), Coefficient::F2(b)) => Coefficient::F2(a ^ b),
            _ => unreachable!(),
        }
    }

    pub fn sub(&self, other: &Coefficient) -> Coefficient {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Coefficient {
        match self {
            Coefficient::Rat(a) => Coefficient::Rat(-a),
            Coefficient::Gauss { re, im } => Coefficient::Gauss { re: -re, im: -im },
            Coefficient::F2(a) => Coefficient::F2(*a),
        }
    }

    pub fn mul(&self, other: &Coefficient) -> Coefficient {
        Coefficient::check(self, other);
        match (self, other) {
            (Coefficient::Rat(a), Coefficient::Rat(b)) => Coefficient::Rat(a * b),
            (Coefficient::Gauss { re: ar, im: ai }, Coefficient::Gauss { re: br, im: bi }) => {
                Coefficient::Gauss {
                    re: ar * br - ai * bi,
                    im: ar * bi + ai * br,
                }
            }
            (Coefficient::F2(a), Coefficient::F2(b)) => Coefficient::F2(a & b),
            _ => unreachable!(),
        }
    }

    /// Multiplicative inverse; `None` for zero. All three domains are fields.
    pub fn inverse(&self) -> Option<Coefficient> {
        if self.is_zero() {
            return None;
        }
        Some(match self {
            Coefficient::Rat(a) => Coefficient::Rat(a.recip()),
            Coefficient::Gauss { re, im } => {
                let norm = re * re + im * im;
                Coefficient::Gauss {
                    re: re / &norm,
                    im: -(im / &norm),
                }
            }
            Coefficient::F2(_) => Coefficient::F2(true),
        })
    }

    pub fn div(&self, other: &Coefficient) -> Coefficient {
        self.mul(&other.inverse().expect("division by zero coefficient"))
    }

    /// Complex conjugate; identity on the other domains.
    pub fn conj(&self) -> Coefficient {
        match self {
            Coefficient::Gauss { re, im } => Coefficient::Gauss { re: re.clone(), im: -im },
            other => other.clone(),
        }
    }

    /// Real and imaginary parts as rationals (imaginary part zero outside
    /// the Gaussian domain).
    pub fn parts(&self) -> (BigRational, BigRational) {
        match self {
            Coefficient::Rat(a) => (a.clone(), BigRational::zero()),
            Coefficient::Gauss { re, im } => (re.clone(), im.clone()),
            Coefficient::F2(b) => (
                if *b { BigRational::one() } else { BigRational::zero() },
                BigRational::zero(),
            ),
        }
    }

    pub fn is_real(&self) -> bool {
        match self {
            Coefficient::Gauss { im, .. } => im.is_zero(),
            _ => true,
        }
    }

    /// True for the units of the gaussian-integer-content mode: ±1 and ±i
    /// (for the rational domain ±1; for GF(2) the element 1).
    pub fn is_content_unit(&self) -> bool {
        match self {
            Coefficient::Rat(a) => a.is_one() || (-a).is_one(),
            Coefficient::Gauss { re, im } => {
                (im.is_zero() && (re.is_one() || (-re).is_one()))
                    || (re.is_zero() && (im.is_one() || (-im).is_one()))
            }
            Coefficient::F2(b) => *b,
        }
    }
}

impl fmt::Display for Coefficient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Coefficient::Rat(a) => write!(f, "{a}"),
            Coefficient::Gauss { re, im } => {
                if im.is_zero() {
                    write!(f, "{re}")
                } else if im.is_negative() {
                    write!(f, "({re}{im}i)")
                } else {
                    write!(f, "({re}+{im}i)")
                }
            }
            Coefficient::F2(b) => write!(f, "{}", if *b { 1 } else { 0 }),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gaussian_inverse() {
        // (1+i)^-1 = (1-i)/2
        let c = Coefficient::gauss_ratio((1, 1), (1, 1));
        let inv = c.inverse().unwrap();
        assert_eq!(inv, Coefficient::gauss_ratio((1, 2), (-1, 2)));
        assert!(c.mul(&inv).is_one());
    }

    #[test]
    fn gf2_addition_is_xor() {
        let one = Coefficient::one(CoeffDomain::Gf2);
        assert!(one.add(&one).is_zero());
    }

    #[test]
    fn rationals_kept_in_lowest_terms() {
        let c = Coefficient::from_ratio(CoeffDomain::Rational, 4, -6);
        match c {
            Coefficient::Rat(r) => {
                assert_eq!(r.numer(), &BigInt::from(-2));
                assert_eq!(r.denom(), &BigInt::from(3));
            }
            _ => unreachable!(),
        }
    }
}
