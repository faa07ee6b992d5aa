//! The ring `R` of integer-valued polynomials.
//!
//! An [`IntPoly`] is stored by its integer coordinates in the binomial basis
//! `C(t,0), C(t,1), C(t,2), ...`, which spans exactly the polynomials taking
//! integer values on all integers. Addition is coordinatewise; products are
//! formed by evaluating on enough consecutive integers and re-expanding, so
//! no rational number is ever materialised.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Generalised binomial coefficient `C(n, k)` for any integer `n`.
pub fn binomial(n: &BigInt, k: usize) -> BigInt {
    let mut c = BigInt::one();
    for j in 0..k {
        c = c * (n - BigInt::from(j));
        // exact: the running product of j+1 consecutive integers is divisible
        c = c / BigInt::from(j + 1);
    }
    c
}

/// An element of `Int[t]`, kept canonical: no trailing zero coordinates.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn zero() -> Self {
        IntPoly::default()
    }

    pub fn constant(c: BigInt) -> Self {
        IntPoly::from_binomial_coeffs(vec![c])
    }

    pub fn from_i64(c: i64) -> Self {
        IntPoly::constant(BigInt::from(c))
    }

    /// The polynomial `t` itself, i.e. `C(t,1)`.
    pub fn t() -> Self {
        IntPoly::from_binomial_coeffs(vec![BigInt::zero(), BigInt::one()])
    }

    /// The basis polynomial `C(t,k)`.
    pub fn choose_t(k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = BigInt::one();
        IntPoly::from_binomial_coeffs(coeffs)
    }

    pub fn from_binomial_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn binomial_coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Degree of the polynomial; the zero polynomial reports 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn evaluate(&self, n: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        let mut binom = BigInt::one(); // C(n, 0)
        for (k, c) in self.coeffs.iter().enumerate() {
            if k > 0 {
                // C(n, k) = C(n, k-1) * (n - k + 1) / k, exact at every step
                binom = binom * (n - BigInt::from(k - 1)) / BigInt::from(k);
            }
            acc += c * &binom;
        }
        acc
    }

    pub fn evaluate_i64(&self, n: i64) -> BigInt {
        self.evaluate(&BigInt::from(n))
    }

    /// The unique polynomial of degree `< values.len()` taking the given
    /// values at `base, base+1, ...`. Such a polynomial is integer valued on
    /// enough consecutive integers to lie in `Int[t]`, so the binomial
    /// coordinates it returns are integers.
    pub fn interpolate(base: i64, values: &[BigInt]) -> Self {
        assert!(!values.is_empty(), "interpolate needs at least one sample");
        let deg = values.len() - 1;
        // Newton coefficients at the shifted points: forward differences.
        let newton = forward_differences(values);
        // Re-express in the C(t,k) basis by reading off values at 0..=deg
        // and differencing again. All arithmetic stays in Z.
        let values_at_zero: Vec<BigInt> = (0..=deg)
            .map(|x| {
                let shifted = BigInt::from(x as i64 - base);
                newton
                    .iter()
                    .enumerate()
                    .map(|(j, d)| d * binomial(&shifted, j))
                    .sum()
            })
            .collect();
        IntPoly::from_binomial_coeffs(forward_differences(&values_at_zero))
    }

    pub fn add(&self, other: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n)
            .map(|k| {
                let a = self.coeffs.get(k).cloned().unwrap_or_default();
                let b = other.coeffs.get(k).cloned().unwrap_or_default();
                a + b
            })
            .collect();
        IntPoly::from_binomial_coeffs(coeffs)
    }

    pub fn sub(&self, other: &IntPoly) -> IntPoly {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> IntPoly {
        IntPoly::from_binomial_coeffs(self.coeffs.iter().map(|c| -c).collect())
    }

    pub fn scale(&self, k: &BigInt) -> IntPoly {
        IntPoly::from_binomial_coeffs(self.coeffs.iter().map(|c| c * k).collect())
    }

    /// Exact product, re-expanded in the binomial basis by sampling on
    /// `0..=deg(p)+deg(q)` consecutive integers.
    pub fn mul(&self, other: &IntPoly) -> IntPoly {
        if self.is_zero() || other.is_zero() {
            return IntPoly::zero();
        }
        let deg = self.degree() + other.degree();
        let values: Vec<BigInt> = (0..=deg as i64)
            .map(|x| self.evaluate_i64(x) * other.evaluate_i64(x))
            .collect();
        IntPoly::interpolate(0, &values)
    }

    /// JSON form `{"binomial": [c0, c1, ...]}` with exact integer entries.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({ "binomial": self.coeffs.iter().map(json_int).collect::<Vec<_>>() })
    }

    pub fn from_json(value: &serde_json::Value) -> Result<Self> {
        let arr = value
            .get("binomial")
            .and_then(|v| v.as_array())
            .ok_or_else(|| Error::Json("expected {\"binomial\": [..]}".into()))?;
        let coeffs = arr.iter().map(bigint_from_json).collect::<Result<Vec<_>>>()?;
        Ok(IntPoly::from_binomial_coeffs(coeffs))
    }
}

fn forward_differences(values: &[BigInt]) -> Vec<BigInt> {
    let mut work = values.to_vec();
    let mut out = Vec::with_capacity(values.len());
    out.push(work[0].clone());
    for round in 1..values.len() {
        for i in 0..values.len() - round {
            work[i] = &work[i + 1] - &work[i];
        }
        out.push(work[0].clone());
    }
    out
}

/// Exact integer as a JSON number (arbitrary precision).
pub fn json_int(n: &BigInt) -> serde_json::Value {
    let number = serde_json::Number::from_str(&n.to_string())
        .expect("decimal integer is a valid JSON number");
    serde_json::Value::Number(number)
}

pub fn bigint_from_json(value: &serde_json::Value) -> Result<BigInt> {
    match value {
        serde_json::Value::Number(n) => n
            .to_string()
            .parse()
            .map_err(|_| Error::Json(format!("not an integer: {n}"))),
        serde_json::Value::String(s) => s
            .parse()
            .map_err(|_| Error::Json(format!("not an integer: {s:?}"))),
        other => Err(Error::Json(format!("expected integer, got {other}"))),
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let magnitude = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if k == 0 {
                write!(f, "{magnitude}")?;
            } else if magnitude.is_one() {
                write!(f, "C(t,{k})")?;
            } else {
                write!(f, "{magnitude}*C(t,{k})")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn interpolate_constant() {
        let p = IntPoly::interpolate(0, &[5.into(), 5.into(), 5.into()]);
        assert_eq!(p, IntPoly::from_i64(5));
    }

    #[test]
    fn interpolate_linear() {
        let p = IntPoly::interpolate(0, &[0.into(), 1.into(), 2.into(), 3.into()]);
        assert_eq!(p, IntPoly::t());
    }

    #[test]
    fn interpolate_shifted_binomial() {
        // samples of C(t-2, 2) at t = 2..6
        let p = IntPoly::interpolate(2, &[0.into(), 0.into(), 1.into(), 3.into(), 6.into()]);
        // C(t-2,2) = 3 - 2*C(t,1) + C(t,2): check coordinates and a paper value
        assert_eq!(
            p.binomial_coeffs(),
            &[BigInt::from(3), BigInt::from(-2), BigInt::from(1)]
        );
        assert_eq!(p.evaluate_i64(5), BigInt::from(3));
        for (i, expected) in [0i64, 0, 1, 3, 6].into_iter().enumerate() {
            assert_eq!(p.evaluate_i64(2 + i as i64), BigInt::from(expected));
        }
    }

    #[test]
    fn mul_t_by_t() {
        let sq = IntPoly::t().mul(&IntPoly::t());
        assert_eq!(
            sq.binomial_coeffs(),
            &[BigInt::zero(), BigInt::one(), BigInt::from(2)]
        );
        for n in -3i64..=3 {
            assert_eq!(sq.evaluate_i64(n), BigInt::from(n * n));
        }
    }

    #[test]
    fn add_zero_is_identity() {
        let p = IntPoly::choose_t(3).scale(&BigInt::from(7));
        assert_eq!(p.add(&IntPoly::zero()), p);
    }

    #[test]
    fn display_forms() {
        let p = IntPoly::from_binomial_coeffs(vec![3.into(), (-2).into(), 1.into()]);
        assert_eq!(p.to_string(), "3 - 2*C(t,1) + C(t,2)");
        assert_eq!(IntPoly::zero().to_string(), "0");
    }

    #[test]
    fn json_round_trip() {
        let p = IntPoly::from_binomial_coeffs(vec![
            BigInt::parse_bytes(b"123456789012345678901234567890", 10).unwrap(),
            (-7).into(),
        ]);
        let v = p.to_json();
        assert_eq!(IntPoly::from_json(&v).unwrap(), p);
    }

    fn arb_poly() -> impl Strategy<Value = IntPoly> {
        proptest::collection::vec(-20i64..=20, 0..6)
            .prop_map(|cs| IntPoly::from_binomial_coeffs(cs.into_iter().map(BigInt::from).collect()))
    }

    proptest! {
        #[test]
        fn evaluation_is_ring_homomorphism(p in arb_poly(), q in arb_poly(), n in -10i64..=10) {
            let x = BigInt::from(n);
            prop_assert_eq!(p.add(&q).evaluate(&x), p.evaluate(&x) + q.evaluate(&x));
            prop_assert_eq!(p.mul(&q).evaluate(&x), p.evaluate(&x) * q.evaluate(&x));
            prop_assert_eq!(p.sub(&q).evaluate(&x), p.evaluate(&x) - q.evaluate(&x));
        }

        #[test]
        fn interpolation_reproduces(p in arb_poly(), base in -5i64..=5) {
            let samples: Vec<BigInt> = (0..=p.degree() as i64).map(|i| p.evaluate_i64(base + i)).collect();
            prop_assert_eq!(IntPoly::interpolate(base, &samples), p);
        }
    }
}
