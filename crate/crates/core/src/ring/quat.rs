use std::fmt;

use num::BigRational;

use super::{CoeffDomain, Coefficient, LaurentPoly, Ring};
use crate::matrix::RingMatrix;

/// A quaternion with Laurent polynomial components along 1, i, j, k. The
/// polynomial variable is central, so components have rational (real)
/// coefficients and multiplication follows i^2 = j^2 = k^2 = ijk = -1.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Quaternion {
    parts: [LaurentPoly; 4],
}

impl Quaternion {
    pub fn new(parts: [LaurentPoly; 4]) -> Quaternion {
        let ring = parts[0].ring();
        assert_eq!(ring.domain, CoeffDomain::Rational, "quaternion components are real");
        for p in &parts[1..] {
            assert_eq!(p.ring(), ring, "quaternion components share one ring");
        }
        Quaternion { parts }
    }

    pub fn zero(ring: Ring) -> Quaternion {
        Quaternion::new([
            LaurentPoly::zero(ring),
            LaurentPoly::zero(ring),
            LaurentPoly::zero(ring),
            LaurentPoly::zero(ring),
        ])
    }

    pub fn one(ring: Ring) -> Quaternion {
        let mut q = Quaternion::zero(ring);
        q.parts[0] = LaurentPoly::one(ring);
        q
    }

    /// Basis unit: 0 -> 1, 1 -> i, 2 -> j, 3 -> k.
    pub fn basis(ring: Ring, idx: usize) -> Quaternion {
        let mut q = Quaternion::zero(ring);
        q.parts[idx] = LaurentPoly::one(ring);
        q
    }

    pub fn scalar(p: LaurentPoly) -> Quaternion {
        let ring = p.ring();
        let mut q = Quaternion::zero(ring);
        q.parts[0] = p;
        q
    }

    pub fn ring(&self) -> Ring {
        self.parts[0].ring()
    }

    pub fn parts(&self) -> &[LaurentPoly; 4] {
        &self.parts
    }

    pub fn is_zero(&self) -> bool {
        self.parts.iter().all(|p| p.is_zero())
    }

    pub fn add(&self, other: &Quaternion) -> Quaternion {
        Quaternion::new([
            self.parts[0].try_add(&other.parts[0]).expect("same ring"),
            self.parts[1].try_add(&other.parts[1]).expect("same ring"),
            self.parts[2].try_add(&other.parts[2]).expect("same ring"),
            self.parts[3].try_add(&other.parts[3]).expect("same ring"),
        ])
    }

    pub fn neg(&self) -> Quaternion {
        Quaternion::new([
            self.parts[0].neg(),
            self.parts[1].neg(),
            self.parts[2].neg(),
            self.parts[3].neg(),
        ])
    }

    pub fn sub(&self, other: &Quaternion) -> Quaternion {
        self.add(&other.neg())
    }

    /// Hamilton product; the Laurent variable commutes with i, j, k.
    pub fn mul(&self, other: &Quaternion) -> Quaternion {
        let [a1, a2, a3, a4] = &self.parts;
        let [b1, b2, b3, b4] = &other.parts;
        let m = |x: &LaurentPoly, y: &LaurentPoly| x.try_mul(y).expect("same ring");
        let sum = |terms: [LaurentPoly; 4]| {
            terms
                .into_iter()
                .reduce(|a, b| a.try_add(&b).expect("same ring"))
                .unwrap()
        };
        Quaternion::new([
            sum([m(a1, b1), m(a2, b2).neg(), m(a3, b3).neg(), m(a4, b4).neg()]),
            sum([m(a1, b2), m(a2, b1), m(a3, b4), m(a4, b3).neg()]),
            sum([m(a1, b3), m(a3, b1), m(a4, b2), m(a2, b4).neg()]),
            sum([m(a1, b4), m(a4, b1), m(a2, b3), m(a3, b2).neg()]),
        ])
    }

    pub fn conj(&self) -> Quaternion {
        Quaternion::new([
            self.parts[0].clone(),
            self.parts[1].neg(),
            self.parts[2].neg(),
            self.parts[3].neg(),
        ])
    }

    /// α1^2 + α2^2 + α3^2 + α4^2.
    pub fn norm(&self) -> LaurentPoly {
        self.parts
            .iter()
            .map(|p| p.try_mul(p).expect("same ring"))
            .reduce(|a, b| a.try_add(&b).expect("same ring"))
            .unwrap()
    }

    /// The standard representation into 2x2 matrices over Gaussian-rational
    /// Laurent polynomials:
    ///
    /// ```text
    /// α1 + α2 i + α3 j + α4 k  |->  [ α1+α2i   α3+α4i ]
    ///                               [ -α3+α4i  α1-α2i ]
    /// ```
    pub fn to_matrix(&self) -> RingMatrix {
        let src = self.ring();
        let dst = Ring::new(CoeffDomain::Gaussian, src.vars);
        let gauss = |re: &LaurentPoly, im: &LaurentPoly, neg_re: bool, neg_im: bool| {
            let mut out = LaurentPoly::zero(dst);
            for (m, c) in re.terms() {
                let (r, _) = c.parts();
                let r = if neg_re { -r } else { r };
                let g = Coefficient::Gauss { re: r, im: BigRational::from_integer(0.into()) };
                out = out
                    .try_add(&LaurentPoly::monomial(dst, m.clone(), g))
                    .unwrap();
            }
            for (m, c) in im.terms() {
                let (r, _) = c.parts();
                let r = if neg_im { -r } else { r };
                let g = Coefficient::Gauss { re: BigRational::from_integer(0.into()), im: r };
                out = out
                    .try_add(&LaurentPoly::monomial(dst, m.clone(), g))
                    .unwrap();
            }
            out
        };
        let [a1, a2, a3, a4] = &self.parts;
        RingMatrix::from_rows(
            dst,
            vec![
                vec![gauss(a1, a2, false, false), gauss(a3, a4, false, false)],
                vec![gauss(a3, a4, true, false), gauss(a1, a2, false, true)],
            ],
        )
        .expect("2x2 shape")
    }
}

impl fmt::Display for Quaternion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names = ["", "i", "j", "k"];
        let mut wrote = false;
        for (p, n) in self.parts.iter().zip(names) {
            if p.is_zero() {
                continue;
            }
            if wrote {
                write!(f, " + ")?;
            }
            write!(f, "({p}){n}")?;
            wrote = true;
        }
        if !wrote {
            write!(f, "0")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{parse_poly, Var};

    fn qt() -> Ring {
        Ring::rational(&[Var::T])
    }

    fn q(parts: [&str; 4]) -> Quaternion {
        Quaternion::new(parts.map(|s| parse_poly(s, qt()).unwrap()))
    }

    #[test]
    fn basis_products() {
        let ring = qt();
        let i = Quaternion::basis(ring, 1);
        let j = Quaternion::basis(ring, 2);
        let k = Quaternion::basis(ring, 3);
        assert_eq!(i.mul(&j), k);
        assert_eq!(j.mul(&k), i);
        assert_eq!(k.mul(&i), j);
        assert_eq!(i.mul(&i), Quaternion::one(ring).neg());
    }

    #[test]
    fn t_is_central() {
        // (-tj)(t^-1 j) = -j^2 = 1
        let a = q(["0", "0", "-t", "0"]);
        let b = q(["0", "0", "t^-1", "0"]);
        assert_eq!(a.mul(&b), Quaternion::one(qt()));
    }

    #[test]
    fn one_plus_i_squared() {
        let a = q(["1", "1", "0", "0"]);
        assert_eq!(a.mul(&a), q(["0", "2", "0", "0"]));
    }

    #[test]
    fn representation_of_basis_elements() {
        let ring = Ring::gaussian(&[Var::T]);
        let one = Quaternion::one(qt()).to_matrix();
        assert!(one.is_identity());

        let j = Quaternion::basis(qt(), 2).to_matrix();
        assert_eq!(j.entry(0, 1), &parse_poly("1", ring).unwrap());
        assert_eq!(j.entry(1, 0), &parse_poly("-1", ring).unwrap());
        assert!(j.entry(0, 0).is_zero());

        // t*k -> [[0, it],[it, 0]]
        let tk = Quaternion::new([
            parse_poly("0", qt()).unwrap(),
            parse_poly("0", qt()).unwrap(),
            parse_poly("0", qt()).unwrap(),
            parse_poly("t", qt()).unwrap(),
        ])
        .to_matrix();
        let it = parse_poly("(0+1i)*t", ring).unwrap();
        assert_eq!(tk.entry(0, 1), &it);
        assert_eq!(tk.entry(1, 0), &it);
    }
}
