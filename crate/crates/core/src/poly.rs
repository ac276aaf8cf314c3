//! Exact Laurent polynomial arithmetic over arbitrary-precision integers.
//!
//! This is the coefficient ring for the Alexander matrix. Everything here is
//! exact; there is no floating point anywhere in the crate.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::fmt;

/// A Laurent polynomial in one variable `T` with `BigInt` coefficients.
///
/// Stored densely as `coeffs[i]` = coefficient of `T^(min_deg + i)`. The
/// representation is kept trimmed: a nonzero polynomial has nonzero first and
/// last coefficients, and zero is represented by an empty coefficient vector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LaurentPoly {
    min_deg: i64,
    coeffs: Vec<BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly { min_deg: 0, coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        LaurentPoly::monomial(0, BigInt::one())
    }

    pub fn monomial(deg: i64, coeff: impl Into<BigInt>) -> Self {
        let c: BigInt = coeff.into();
        if c.is_zero() {
            return LaurentPoly::zero();
        }
        LaurentPoly { min_deg: deg, coeffs: vec![c] }
    }

    /// Builds from `(degree, coefficient)` pairs; repeated degrees accumulate.
    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, C)>,
        C: Into<BigInt>,
    {
        let mut acc = LaurentPoly::zero();
        for (d, c) in terms {
            acc = &acc + &LaurentPoly::monomial(d, c);
        }
        acc
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn min_deg(&self) -> Option<i64> {
        if self.is_zero() {
            None
        } else {
            Some(self.min_deg)
        }
    }

    pub fn max_deg(&self) -> Option<i64> {
        if self.is_zero() {
            None
        } else {
            Some(self.min_deg + self.coeffs.len() as i64 - 1)
        }
    }

    pub fn coeff(&self, deg: i64) -> BigInt {
        if self.is_zero() {
            return BigInt::zero();
        }
        let idx = deg - self.min_deg;
        if idx < 0 || idx >= self.coeffs.len() as i64 {
            BigInt::zero()
        } else {
            self.coeffs[idx as usize].clone()
        }
    }

    /// Iterates over `(degree, coefficient)` pairs of nonzero terms.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(i, c)| (self.min_deg + i as i64, c))
    }

    fn trim(mut self) -> Self {
        while self.coeffs.last().map_or(false, |c| c.is_zero()) {
            self.coeffs.pop();
        }
        let lead_zeros = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead_zeros > 0 {
            self.coeffs.drain(..lead_zeros);
            self.min_deg += lead_zeros as i64;
        }
        if self.coeffs.is_empty() {
            self.min_deg = 0;
        }
        self
    }

    pub fn shifted(&self, by: i64) -> Self {
        if self.is_zero() {
            return LaurentPoly::zero();
        }
        LaurentPoly { min_deg: self.min_deg + by, coeffs: self.coeffs.clone() }
    }

    pub fn neg(&self) -> Self {
        LaurentPoly { min_deg: self.min_deg, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    pub fn eval_at_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    pub fn eval_at_minus_one(&self) -> BigInt {
        let mut acc = BigInt::zero();
        for (d, c) in self.terms() {
            if d.rem_euclid(2) == 0 {
                acc += c;
            } else {
                acc -= c;
            }
        }
        acc
    }

    /// Exact division; panics if `self` is not a multiple of `divisor`.
    ///
    /// Only called from Bareiss elimination, where divisibility is a theorem.
    pub fn exact_div(&self, divisor: &LaurentPoly) -> Self {
        assert!(!divisor.is_zero(), "division by zero polynomial");
        if self.is_zero() {
            return LaurentPoly::zero();
        }
        // Work with plain polynomial parts; the monomial shift is restored at the end.
        let shift = self.min_deg - divisor.min_deg;
        let mut rem = self.coeffs.clone();
        let div = &divisor.coeffs;
        let dlen = div.len();
        let dlead = &div[dlen - 1];
        assert!(rem.len() >= dlen, "exact_div: degree too small");
        let qlen = rem.len() - dlen + 1;
        let mut quot = vec![BigInt::zero(); qlen];
        for qi in (0..qlen).rev() {
            let top = rem[qi + dlen - 1].clone();
            if top.is_zero() {
                continue;
            }
            let (q, r) = num_integer::Integer::div_rem(&top, dlead);
            assert!(r.is_zero(), "exact_div: leading coefficient not divisible");
            for (k, dc) in div.iter().enumerate() {
                rem[qi + k] -= &q * dc;
            }
            quot[qi] = q;
        }
        assert!(rem.iter().all(|c| c.is_zero()), "exact_div: nonzero remainder");
        LaurentPoly { min_deg: shift, coeffs: quot }.trim()
    }
}

impl std::ops::Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let lo = self.min_deg.min(rhs.min_deg);
        let hi = (self.min_deg + self.coeffs.len() as i64).max(rhs.min_deg + rhs.coeffs.len() as i64);
        let mut coeffs = vec![BigInt::zero(); (hi - lo) as usize];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[(self.min_deg - lo) as usize + i] += c;
        }
        for (i, c) in rhs.coeffs.iter().enumerate() {
            coeffs[(rhs.min_deg - lo) as usize + i] += c;
        }
        LaurentPoly { min_deg: lo, coeffs }.trim()
    }
}

impl std::ops::Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self + &rhs.neg()
    }
}

impl std::ops::Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        LaurentPoly { min_deg: self.min_deg + rhs.min_deg, coeffs }.trim()
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (d, c) in self.terms() {
            if first {
                first = false;
            } else if c.is_positive() {
                write!(f, " + ")?;
            } else {
                write!(f, " - ")?;
            }
            let mag = c.abs();
            let lead_neg = first && c.is_negative();
            let sign = if !first || !lead_neg { "" } else { "-" };
            let _ = sign;
            let prefix = if c.is_negative() && first { "-" } else { "" };
            match d {
                0 => write!(f, "{prefix}{mag}")?,
                1 if mag.is_one() => write!(f, "{prefix}T")?,
                1 => write!(f, "{prefix}{mag}*T")?,
                _ if mag.is_one() => write!(f, "{prefix}T^{d}")?,
                _ => write!(f, "{prefix}{mag}*T^{d}")?,
            }
        }
        Ok(())
    }
}

/// Determinant of a square matrix over `Z[T, T^-1]` by fraction-free Bareiss
/// elimination. Exact: every division is a theorem-backed exact division.
pub fn bareiss_determinant(matrix: &[Vec<LaurentPoly>]) -> LaurentPoly {
    let n = matrix.len();
    if n == 0 {
        return LaurentPoly::one();
    }
    let mut m: Vec<Vec<LaurentPoly>> = matrix.to_vec();
    for row in &m {
        assert_eq!(row.len(), n, "determinant of a non-square matrix");
    }
    let mut sign = 1i32;
    let mut prev = LaurentPoly::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let swap = (k + 1..n).find(|&r| !m[r][k].is_zero());
            match swap {
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
                None => return LaurentPoly::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = &(&m[i][j] * &m[k][k]) - &(&m[i][k] * &m[k][j]);
                m[i][j] = t.exact_div(&prev);
            }
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if sign < 0 {
        det.neg()
    } else {
        det
    }
}

/// Plain cofactor expansion. Exponentially slow; kept as an independent
/// cross-check for the Bareiss path on small matrices.
pub fn cofactor_determinant(matrix: &[Vec<LaurentPoly>]) -> LaurentPoly {
    let n = matrix.len();
    if n == 0 {
        return LaurentPoly::one();
    }
    if n == 1 {
        return matrix[0][0].clone();
    }
    let mut det = LaurentPoly::zero();
    for j in 0..n {
        if matrix[0][j].is_zero() {
            continue;
        }
        let minor: Vec<Vec<LaurentPoly>> = matrix[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|(c, _)| *c != j)
                    .map(|(_, p)| p.clone())
                    .collect()
            })
            .collect();
        let term = &matrix[0][j] * &cofactor_determinant(&minor);
        det = if j % 2 == 0 { &det + &term } else { &det - &term };
    }
    det
}
