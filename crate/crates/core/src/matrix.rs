//! Dense matrices over the commutative ring Λ, with exact determinants by
//! two independent algorithms (fraction-free Bareiss elimination and
//! memoized cofactor expansion).

use std::fmt;

use crate::error::{Error, Result};
use crate::ring::{Coefficient, LaurentPoly, Monomial, Ring};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum DetAlgorithm {
    Bareiss,
    Cofactor,
}

/// A rows x cols matrix of Laurent polynomials sharing one ring.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RingMatrix {
    ring: Ring,
    rows: usize,
    cols: usize,
    entries: Vec<LaurentPoly>,
}

impl RingMatrix {
    pub fn from_rows(ring: Ring, rows: Vec<Vec<LaurentPoly>>) -> Result<RingMatrix> {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        let mut entries = Vec::with_capacity(r * c);
        for row in rows {
            if row.len() != c {
                return Err(Error::DimensionMismatch("ragged rows".into()));
            }
            for e in row {
                if e.ring() != ring {
                    return Err(Error::DimensionMismatch(
                        "matrix entries must share one ring".into(),
                    ));
                }
                entries.push(e);
            }
        }
        Ok(RingMatrix { ring, rows: r, cols: c, entries })
    }

    pub fn from_fn(
        ring: Ring,
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> LaurentPoly,
    ) -> RingMatrix {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                let e = f(i, j);
                debug_assert_eq!(e.ring(), ring);
                entries.push(e);
            }
        }
        RingMatrix { ring, rows, cols, entries }
    }

    pub fn zero(ring: Ring, rows: usize, cols: usize) -> RingMatrix {
        RingMatrix::from_fn(ring, rows, cols, |_, _| LaurentPoly::zero(ring))
    }

    pub fn identity(ring: Ring, n: usize) -> RingMatrix {
        RingMatrix::from_fn(ring, n, n, |i, j| {
            if i == j {
                LaurentPoly::one(ring)
            } else {
                LaurentPoly::zero(ring)
            }
        })
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn entry(&self, i: usize, j: usize) -> &LaurentPoly {
        &self.entries[i * self.cols + j]
    }

    pub fn set_entry(&mut self, i: usize, j: usize, p: LaurentPoly) {
        debug_assert_eq!(p.ring(), self.ring);
        self.entries[i * self.cols + j] = p;
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    let e = self.entry(i, j);
                    if i == j {
                        e.is_one()
                    } else {
                        e.is_zero()
                    }
                })
            })
    }

    /// `Some((c, m))` when the matrix is `c * m * I` for a nonzero
    /// coefficient `c` and monomial `m`, i.e. a unit of Λ times the identity.
    pub fn as_unit_scalar(&self) -> Option<(Coefficient, Monomial)> {
        if !self.is_square() || self.rows == 0 {
            return None;
        }
        let d = self.entry(0, 0);
        if !d.is_ring_unit() {
            return None;
        }
        for i in 0..self.rows {
            for j in 0..self.cols {
                let e = self.entry(i, j);
                if i == j {
                    if e != d {
                        return None;
                    }
                } else if !e.is_zero() {
                    return None;
                }
            }
        }
        let (m, c) = d.leading().unwrap();
        Some((c.clone(), m.clone()))
    }

    pub fn add(&self, other: &RingMatrix) -> Result<RingMatrix> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimensionMismatch(format!(
                "add {}x{} vs {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = self.clone();
        for (a, b) in out.entries.iter_mut().zip(&other.entries) {
            *a = a.try_add(b)?;
        }
        Ok(out)
    }

    pub fn sub(&self, other: &RingMatrix) -> Result<RingMatrix> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> RingMatrix {
        let mut out = self.clone();
        for e in &mut out.entries {
            *e = e.neg();
        }
        out
    }

    pub fn scale(&self, c: &Coefficient) -> RingMatrix {
        let mut out = self.clone();
        for e in &mut out.entries {
            *e = e.scale(c);
        }
        out
    }

    pub fn scale_poly(&self, p: &LaurentPoly) -> RingMatrix {
        let mut out = self.clone();
        for e in &mut out.entries {
            *e = e.try_mul(p).expect("same ring");
        }
        out
    }

    /// Exact matrix product.
    pub fn mul(&self, other: &RingMatrix) -> Result<RingMatrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "mul {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let ring = self.ring;
        let mut out = RingMatrix::zero(ring, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.entry(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.entry(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let prod = a.try_mul(b)?;
                    let cur = out.entry(i, j).try_add(&prod)?;
                    out.set_entry(i, j, cur);
                }
            }
        }
        Ok(out)
    }

    pub fn transpose(&self) -> RingMatrix {
        RingMatrix::from_fn(self.ring, self.cols, self.rows, |i, j| self.entry(j, i).clone())
    }

    /// Assemble a matrix from a grid of equally-sized square blocks.
    pub fn from_blocks(blocks: &[Vec<&RingMatrix>]) -> RingMatrix {
        let d = blocks[0][0].rows;
        let ring = blocks[0][0].ring;
        let brows = blocks.len();
        let bcols = blocks[0].len();
        RingMatrix::from_fn(ring, brows * d, bcols * d, |i, j| {
            blocks[i / d][j / d].entry(i % d, j % d).clone()
        })
    }

    /// Exact determinant. Both algorithms agree; `Bareiss` controls
    /// intermediate expression swell, `Cofactor` is the independent oracle.
    pub fn determinant(&self, algorithm: DetAlgorithm) -> Result<LaurentPoly> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch(format!(
                "determinant of {}x{}",
                self.rows, self.cols
            )));
        }
        Ok(match algorithm {
            DetAlgorithm::Bareiss => self.det_bareiss(),
            DetAlgorithm::Cofactor => self.det_cofactor(),
        })
    }

    /// True iff the determinant is nonzero, i.e. the matrix is invertible
    /// over the fraction field of Λ.
    pub fn is_nonsingular(&self) -> bool {
        self.is_square() && !self.det_bareiss().is_zero()
    }

    pub(crate) fn det_bareiss(&self) -> LaurentPoly {
        let n = self.rows;
        let ring = self.ring;
        if n == 0 {
            return LaurentPoly::one(ring);
        }
        // Clear Laurent denominators row by row, tracking the total shift.
        let mut total_shift = Monomial::unit(ring.arity());
        let mut m: Vec<Vec<LaurentPoly>> = Vec::with_capacity(n);
        for i in 0..n {
            let mut mins = vec![i64::MAX; ring.arity()];
            for j in 0..n {
                let e = self.entry(i, j);
                if e.is_zero() {
                    continue;
                }
                let em = e.min_exps();
                for (k, min) in mins.iter_mut().enumerate() {
                    *min = (*min).min(em.exp(k));
                }
            }
            if mins.iter().any(|&v| v == i64::MAX) {
                return LaurentPoly::zero(ring); // all-zero row
            }
            let shift = Monomial::from_exps(&mins);
            total_shift = total_shift.mul(&shift);
            let inv = shift.inverse();
            m.push((0..n).map(|j| self.entry(i, j).mul_monomial(&inv)).collect());
        }

        let mut sign_neg = false;
        let mut prev = LaurentPoly::one(ring);
        for k in 0..n - 1 {
            if m[k][k].is_zero() {
                match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                    Some(r) => {
                        m.swap(k, r);
                        sign_neg = !sign_neg;
                    }
                    None => return LaurentPoly::zero(ring),
                }
            }
            let pivot = m[k][k].clone();
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = pivot
                        .try_mul(&m[i][j])
                        .unwrap()
                        .try_sub(&m[i][k].try_mul(&m[k][j]).unwrap())
                        .unwrap();
                    m[i][j] = if num.is_zero() {
                        num
                    } else {
                        num.div_exact(&prev).expect("Bareiss division is exact")
                    };
                }
                m[i][k] = LaurentPoly::zero(ring);
            }
            prev = pivot;
        }
        let mut det = m[n - 1][n - 1].clone();
        if sign_neg {
            det = det.neg();
        }
        det.mul_monomial(&total_shift)
    }

    fn det_cofactor(&self) -> LaurentPoly {
        let n = self.rows;
        let ring = self.ring;
        assert!(n <= 63, "cofactor expansion limited to 63 columns");
        let full: u64 = if n == 0 { 0 } else { (1u64 << n) - 1 };
        let mut memo: std::collections::HashMap<u64, LaurentPoly> =
            std::collections::HashMap::new();
        self.det_cofactor_rec(full, n, &mut memo, ring)
    }

    fn det_cofactor_rec(
        &self,
        colmask: u64,
        n: usize,
        memo: &mut std::collections::HashMap<u64, LaurentPoly>,
        ring: Ring,
    ) -> LaurentPoly {
        let size = colmask.count_ones() as usize;
        if size == 0 {
            return LaurentPoly::one(ring);
        }
        if let Some(v) = memo.get(&colmask) {
            return v.clone();
        }
        let row = n - size;
        let mut acc = LaurentPoly::zero(ring);
        let mut parity_neg = false;
        for j in 0..n {
            if colmask & (1 << j) == 0 {
                continue;
            }
            let e = self.entry(row, j);
            if !e.is_zero() {
                let minor = self.det_cofactor_rec(colmask & !(1 << j), n, memo, ring);
                let term = e.try_mul(&minor).unwrap();
                acc = acc
                    .try_add(&if parity_neg { term.neg() } else { term })
                    .unwrap();
            }
            parity_neg = !parity_neg;
        }
        memo.insert(colmask, acc.clone());
        acc
    }

    /// Inverse over Λ, when the determinant is a unit (a nonzero coefficient
    /// times a monomial). Returns `Ok(None)` for square non-invertible input.
    pub fn inverse(&self) -> Result<Option<RingMatrix>> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch(format!(
                "inverse of {}x{}",
                self.rows, self.cols
            )));
        }
        let det = self.det_bareiss();
        let det_inv = match det.unit_inverse() {
            Some(d) => d,
            None => return Ok(None),
        };
        let n = self.rows;
        let adj = RingMatrix::from_fn(self.ring, n, n, |i, j| {
            // cofactor C_ji
            let minor = self.minor(j, i);
            let d = minor.det_bareiss();
            if (i + j) % 2 == 1 {
                d.neg()
            } else {
                d
            }
        });
        Ok(Some(adj.map(|p| p.try_mul(&det_inv).unwrap())))
    }

    pub(crate) fn minor(&self, drop_row: usize, drop_col: usize) -> RingMatrix {
        RingMatrix::from_fn(self.ring, self.rows - 1, self.cols - 1, |i, j| {
            let si = if i >= drop_row { i + 1 } else { i };
            let sj = if j >= drop_col { j + 1 } else { j };
            self.entry(si, sj).clone()
        })
    }

    pub fn map(&self, f: impl Fn(&LaurentPoly) -> LaurentPoly) -> RingMatrix {
        RingMatrix::from_fn(self.ring, self.rows, self.cols, |i, j| f(self.entry(i, j)))
    }
}

/// A matrix over the fraction field of Λ, stored as `num / den`. Used where
/// intermediate inverses (e.g. switch completion formulas) leave Λ even
/// though the final result returns to it.
#[derive(Clone, Debug)]
pub struct FracMatrix {
    num: RingMatrix,
    den: LaurentPoly,
}

impl FracMatrix {
    pub fn from_exact(m: RingMatrix) -> FracMatrix {
        let den = LaurentPoly::one(m.ring());
        FracMatrix { num: m, den }
    }

    /// Inverse over the fraction field; `None` when the determinant is zero.
    pub fn inverse(&self) -> Result<Option<FracMatrix>> {
        if !self.num.is_square() {
            return Err(Error::DimensionMismatch(format!(
                "inverse of {}x{}",
                self.num.rows(),
                self.num.cols()
            )));
        }
        let det = self.num.det_bareiss();
        if det.is_zero() {
            return Ok(None);
        }
        let n = self.num.rows();
        let adj = RingMatrix::from_fn(self.num.ring(), n, n, |i, j| {
            let minor = self.num.minor(j, i).det_bareiss();
            if (i + j) % 2 == 1 {
                minor.neg()
            } else {
                minor
            }
        });
        Ok(Some(FracMatrix { num: adj.scale_poly(&self.den), den: det }))
    }

    pub fn mul(&self, other: &FracMatrix) -> Result<FracMatrix> {
        Ok(FracMatrix {
            num: self.num.mul(&other.num)?,
            den: self.den.try_mul(&other.den)?,
        })
    }

    pub fn mul_exact(&self, other: &RingMatrix) -> Result<FracMatrix> {
        Ok(FracMatrix { num: self.num.mul(other)?, den: self.den.clone() })
    }

    pub fn sub(&self, other: &FracMatrix) -> Result<FracMatrix> {
        let left = self.num.scale_poly(&other.den);
        let right = other.num.scale_poly(&self.den);
        Ok(FracMatrix {
            num: left.sub(&right)?,
            den: self.den.try_mul(&other.den)?,
        })
    }

    pub fn identity(ring: Ring, n: usize) -> FracMatrix {
        FracMatrix::from_exact(RingMatrix::identity(ring, n))
    }

    pub fn is_identity(&self) -> bool {
        let scaled = RingMatrix::identity(self.num.ring(), self.num.rows())
            .scale_poly(&self.den);
        self.num == scaled
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// Back to Λ if the denominator divides every entry.
    pub fn to_exact(&self) -> Option<RingMatrix> {
        let mut out = self.num.clone();
        for i in 0..out.rows() {
            for j in 0..out.cols() {
                let e = out.entry(i, j);
                if e.is_zero() {
                    continue;
                }
                out.set_entry(i, j, e.div_exact(&self.den)?);
            }
        }
        Some(out)
    }
}

impl PartialEq for FracMatrix {
    fn eq(&self, other: &Self) -> bool {
        // num1/den1 == num2/den2 iff num1*den2 == num2*den1
        self.num.scale_poly(&other.den) == other.num.scale_poly(&self.den)
    }
}

impl fmt::Display for RingMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rendered: Vec<Vec<String>> = (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.entry(i, j).to_string()).collect())
            .collect();
        let widths: Vec<usize> = (0..self.cols)
            .map(|j| rendered.iter().map(|row| row[j].len()).max().unwrap_or(0))
            .collect();
        for row in &rendered {
            write!(f, "[ ")?;
            for (j, cell) in row.iter().enumerate() {
                write!(f, "{cell:>width$}", width = widths[j])?;
                if j + 1 < self.cols {
                    write!(f, "  ")?;
                }
            }
            writeln!(f, " ]")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{parse_poly, Quaternion, Var};

    fn qt() -> Ring {
        Ring::rational(&[Var::T])
    }

    fn m(ring: Ring, rows: &[&[&str]]) -> RingMatrix {
        RingMatrix::from_rows(
            ring,
            rows.iter()
                .map(|r| r.iter().map(|s| parse_poly(s, ring).unwrap()).collect())
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn multiplication_examples() {
        let ring = qt();
        let a = m(ring, &[&["t", "0"], &["0", "1"]]);
        let b = m(ring, &[&["1", "1"], &["0", "1"]]);
        let ab = a.mul(&b).unwrap();
        assert_eq!(ab, m(ring, &[&["t", "t"], &["0", "1"]]));
        let i = RingMatrix::identity(ring, 2);
        assert_eq!(i.mul(&ab).unwrap(), ab);
    }

    #[test]
    fn determinant_of_identity_and_singular() {
        let ring = qt();
        for alg in [DetAlgorithm::Bareiss, DetAlgorithm::Cofactor] {
            assert!(RingMatrix::identity(ring, 4).determinant(alg).unwrap().is_one());
            let sing = m(ring, &[&["1", "1"], &["1", "1"]]);
            assert!(sing.determinant(alg).unwrap().is_zero());
            // 0x0 determinant is 1 by convention
            assert!(RingMatrix::zero(ring, 0, 0).determinant(alg).unwrap().is_one());
        }
    }

    #[test]
    fn determinant_with_laurent_entries() {
        let ring = qt();
        let a = m(ring, &[&["t^-1", "1"], &["1", "t"]]);
        for alg in [DetAlgorithm::Bareiss, DetAlgorithm::Cofactor] {
            assert!(a.determinant(alg).unwrap().is_zero());
        }
        let b = m(ring, &[&["t^-1", "2"], &["1", "t"]]);
        assert_eq!(b.determinant(DetAlgorithm::Bareiss).unwrap(), parse_poly("-1", ring).unwrap());
        assert_eq!(
            b.determinant(DetAlgorithm::Bareiss).unwrap(),
            b.determinant(DetAlgorithm::Cofactor).unwrap()
        );
    }

    #[test]
    fn monomial_matrix_inverse() {
        let ring = qt();
        let t = m(ring, &[&["t"]]);
        let inv = t.inverse().unwrap().unwrap();
        assert_eq!(inv, m(ring, &[&["t^-1"]]));
        let sing = m(ring, &[&["1", "1"], &["1", "1"]]);
        assert!(sing.inverse().unwrap().is_none());
        // 1+t is not a unit of Λ
        let nonunit = m(ring, &[&["1 + t"]]);
        assert!(nonunit.inverse().unwrap().is_none());
    }

    #[test]
    fn representation_inverse_of_one_plus_i() {
        let one_i = Quaternion::new([
            parse_poly("1", qt()).unwrap(),
            parse_poly("1", qt()).unwrap(),
            parse_poly("0", qt()).unwrap(),
            parse_poly("0", qt()).unwrap(),
        ]);
        let half = Quaternion::new([
            parse_poly("1/2", qt()).unwrap(),
            parse_poly("-1/2", qt()).unwrap(),
            parse_poly("0", qt()).unwrap(),
            parse_poly("0", qt()).unwrap(),
        ]);
        let inv = one_i.to_matrix().inverse().unwrap().unwrap();
        assert_eq!(inv, half.to_matrix());
    }
}
