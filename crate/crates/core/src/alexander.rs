//! Alexander polynomial from the Wirtinger presentation.
//!
//! One generator per overpass, one relation per crossing. Fox derivatives of
//! the relations give an integer Laurent matrix whose (n-1) x (n-1) minor
//! determines the polynomial up to a unit; we normalize to the symmetric
//! representative with positive value at 1.

use crate::diagram::{Diagram, UnionFind};
use crate::error::{Error, Result};
use crate::poly::{bareiss_determinant, LaurentPoly};
use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive};

/// A symmetrized knot Alexander polynomial: coefficients for T^-g .. T^g
/// with coeffs[i] == coeffs[2g - i] and value 1 at T = 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlexanderPolynomial {
    coeffs: Vec<i64>,
}

impl AlexanderPolynomial {
    /// Builds the palindrome a_g, .., a_1, a_0, a_1, .., a_g from its upper
    /// half [a_0, .., a_g].
    pub fn from_half(half: &[i64]) -> AlexanderPolynomial {
        assert!(!half.is_empty());
        let mut coeffs: Vec<i64> = half.iter().rev().copied().collect();
        coeffs.extend_from_slice(&half[1..]);
        let p = AlexanderPolynomial { coeffs };
        assert_eq!(p.eval_at_one(), 1);
        p
    }

    /// Half-span of the polynomial; equals the Seifert genus for an
    /// alternating knot.
    pub fn genus(&self) -> i64 {
        (self.coeffs.len() as i64 - 1) / 2
    }

    /// Coefficient of T^i (or T^-i).
    pub fn a(&self, i: i64) -> i64 {
        let g = self.genus();
        if i.abs() > g {
            0
        } else {
            self.coeffs[(i + g) as usize]
        }
    }

    /// All coefficients, ascending from T^-g to T^g.
    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn eval_at_one(&self) -> i64 {
        self.coeffs.iter().sum()
    }

    /// The knot determinant |delta(-1)|.
    pub fn determinant(&self) -> i64 {
        let g = self.genus();
        (-g..=g).map(|i| if i.rem_euclid(2) == 0 { self.a(i) } else { -self.a(i) }).sum::<i64>().abs()
    }

    /// An alternating knot fibers exactly when the leading coefficient is a
    /// unit.
    pub fn is_fibered(&self) -> bool {
        self.a(self.genus()).abs() == 1
    }

    pub fn to_laurent(&self) -> LaurentPoly {
        let g = self.genus();
        LaurentPoly::from_terms((-g..=g).map(|i| (i, self.a(i))))
    }

    pub fn mul(&self, other: &AlexanderPolynomial) -> AlexanderPolynomial {
        let p = &self.to_laurent() * &other.to_laurent();
        let g = self.genus() + other.genus();
        let coeffs = (-g..=g)
            .map(|i| p.coeff(i).to_i64().expect("product coefficient fits in i64"))
            .collect();
        AlexanderPolynomial { coeffs }
    }
}

impl std::fmt::Display for AlexanderPolynomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.to_laurent())
    }
}

/// Groups the arcs into overpasses and returns each arc's generator index.
/// Generators are numbered by their lowest arc.
fn overpass_generators(d: &Diagram) -> (Vec<usize>, usize) {
    let mut uf = UnionFind::new(d.arc_count());
    for c in d.crossings() {
        let over_in = c.over_in_slot as usize;
        uf.union(c.arcs[over_in], c.arcs[(over_in + 2) % 4]);
    }
    let mut gen_of = vec![usize::MAX; d.arc_count()];
    let mut count = 0;
    for arc in 0..d.arc_count() {
        let root = uf.find(arc);
        if gen_of[root] == usize::MAX {
            gen_of[root] = count;
            count += 1;
        }
        gen_of[arc] = gen_of[root];
    }
    (gen_of, count)
}

/// The Alexander matrix of the Wirtinger presentation: one row per relation,
/// one column per overpass generator, entries already abelianized.
pub fn wirtinger_matrix(d: &Diagram) -> Vec<Vec<LaurentPoly>> {
    let (gen_of, gens) = overpass_generators(d);
    let mut rows = Vec::with_capacity(d.crossing_count());
    for c in d.crossings() {
        let mut row = vec![LaurentPoly::zero(); gens];
        let over = gen_of[c.arcs[c.over_in_slot as usize]];
        let under_in = gen_of[c.arcs[0]];
        let under_out = gen_of[c.arcs[2]];
        let t = LaurentPoly::monomial(1, 1);
        let one = LaurentPoly::one();
        // Fox derivatives of w x w^-1 y^-1 (positive) and w^-1 x w y^-1
        // (negative), each scaled by a unit.
        let (dw, dx, dy) = if c.sign.value() > 0 {
            (&one - &t, t, one.neg())
        } else {
            (&t - &one, one, t.neg())
        };
        row[over] = &row[over] + &dw;
        row[under_in] = &row[under_in] + &dx;
        row[under_out] = &row[under_out] + &dy;
        rows.push(row);
    }
    rows
}

/// Computes the normalized Alexander polynomial of a knot diagram.
pub fn alexander_polynomial(d: &Diagram) -> Result<AlexanderPolynomial> {
    if d.mu() != 1 {
        return Err(Error::NotKnot { mu: d.mu() });
    }
    if d.crossing_count() == 0 {
        return Ok(AlexanderPolynomial { coeffs: vec![1] });
    }
    let full = wirtinger_matrix(d);
    let n = full.len();
    assert_eq!(full[0].len(), n, "a knot diagram has one overpass per crossing");
    let minor: Vec<Vec<LaurentPoly>> =
        full[..n - 1].iter().map(|row| row[..n - 1].to_vec()).collect();
    let det = bareiss_determinant(&minor);
    if det.is_zero() {
        return Err(Error::ZeroDeterminantUnexpected);
    }
    normalize(det)
}

/// Rescales a raw determinant by a unit to the symmetric representative with
/// value +1 at T = 1.
fn normalize(det: LaurentPoly) -> Result<AlexanderPolynomial> {
    let lo = det.min_deg().unwrap();
    let hi = det.max_deg().unwrap();
    let span = hi - lo;
    if span % 2 != 0 {
        return Err(Error::NotSymmetrizable { details: format!("odd span {span}") });
    }
    let g = span / 2;
    let centered = det.shifted(-lo - g);
    for i in 0..=g {
        if centered.coeff(i) != centered.coeff(-i) {
            return Err(Error::NotSymmetrizable {
                details: format!("coefficients at T^{i} and T^-{i} differ"),
            });
        }
    }
    let at_one = centered.eval_at_one();
    if at_one.abs() != BigInt::one() {
        return Err(Error::NotSymmetrizable { details: format!("value {at_one} at T = 1") });
    }
    let flip = BigInt::from(if at_one.is_negative() { -1 } else { 1 });
    let coeffs = (-g..=g)
        .map(|i| (centered.coeff(i) * &flip).to_i64().expect("coefficient fits in i64"))
        .collect();
    Ok(AlexanderPolynomial { coeffs })
}
