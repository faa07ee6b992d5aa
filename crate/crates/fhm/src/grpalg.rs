//! The integral group algebra of `S_n`, centraliser class sums, and
//! Jucys-Murphy elements.
//!
//! Elements are sparse integer combinations of permutations with a fixed
//! ambient `n`. The class sums over marked cycle shapes form a basis of the
//! subalgebra commuting with every permutation that fixes `1..=m`, and
//! [`decompose`](GroupAlgebraElement::decompose) recovers coordinates in
//! that basis.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::intpoly::bigint_from_json;
use crate::perm::Permutation;
use crate::shapes::MarkedCycleShape;
use crate::symfunc::{self, EPolynomial, Partition, Ring};

/// Default cap on the number of terms a class sum may have.
pub const DEFAULT_TERM_CAP: u64 = 10_000_000;

/// Current term cap; `FHM_TERM_CAP` overrides the default.
pub fn term_cap() -> u64 {
    std::env::var("FHM_TERM_CAP")
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(DEFAULT_TERM_CAP)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupAlgebraElement {
    n: usize,
    terms: BTreeMap<Permutation, BigInt>,
}

impl GroupAlgebraElement {
    pub fn zero(n: usize) -> Self {
        GroupAlgebraElement {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(Permutation::identity(), BigInt::one());
        GroupAlgebraElement { n, terms }
    }

    pub fn from_permutation(n: usize, p: Permutation) -> Result<Self> {
        if let Some(point) = p.support().find(|&i| i > n) {
            return Err(Error::SupportEscapes { point, n });
        }
        let mut terms = BTreeMap::new();
        terms.insert(p, BigInt::one());
        Ok(GroupAlgebraElement { n, terms })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> &BTreeMap<Permutation, BigInt> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn add_term(&mut self, p: Permutation, c: BigInt) {
        let entry = self.terms.entry(p).or_default();
        *entry += c;
        if entry.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    pub fn add(&self, other: &GroupAlgebraElement) -> GroupAlgebraElement {
        assert_eq!(self.n, other.n, "ambient mismatch in addition");
        let mut out = self.clone();
        for (p, c) in &other.terms {
            out.add_term(p.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &GroupAlgebraElement) -> GroupAlgebraElement {
        self.add(&other.scale(&BigInt::from(-1)))
    }

    pub fn scale(&self, k: &BigInt) -> GroupAlgebraElement {
        if k.is_zero() {
            return GroupAlgebraElement::zero(self.n);
        }
        GroupAlgebraElement {
            n: self.n,
            terms: self.terms.iter().map(|(p, c)| (p.clone(), c * k)).collect(),
        }
    }

    /// Convolution product; the right factor acts first, matching
    /// [`Permutation::compose`].
    pub fn mul(&self, other: &GroupAlgebraElement) -> Result<GroupAlgebraElement> {
        if self.n != other.n {
            return Err(Error::AmbientMismatch {
                left: self.n,
                right: other.n,
            });
        }
        let mut out = GroupAlgebraElement::zero(self.n);
        for (p, a) in &self.terms {
            for (q, b) in &other.terms {
                out.add_term(p.compose(q), a * b);
            }
        }
        Ok(out)
    }

    /// Sum of the class of `shape` inside `S_n`; the zero element exactly
    /// when the degree exceeds `n`. Refuses classes above the term cap.
    pub fn class_sum(shape: &MarkedCycleShape, n: usize) -> Result<GroupAlgebraElement> {
        let size = shape.class_size(n)?;
        if size > BigInt::from(term_cap()) {
            return Err(Error::TermCap {
                size,
                cap: term_cap(),
            });
        }
        let mut out = GroupAlgebraElement::zero(n);
        for member in shape.class_members(n)? {
            out.add_term(member, BigInt::one());
        }
        Ok(out)
    }

    /// Coordinates in the class-sum basis. Errors unless the element is
    /// constant on every m-class it touches, with each class complete.
    pub fn decompose(&self, m: usize) -> Result<BTreeMap<MarkedCycleShape, BigInt>> {
        if self.n < m {
            return Err(Error::DegreeBound(format!(
                "ambient n = {} is smaller than m = {m}",
                self.n
            )));
        }
        let mut per_class: BTreeMap<MarkedCycleShape, (BigInt, usize)> = BTreeMap::new();
        for (p, c) in &self.terms {
            let shape = MarkedCycleShape::shape_of(p, m);
            match per_class.get_mut(&shape) {
                None => {
                    per_class.insert(shape, (c.clone(), 1));
                }
                Some((coeff, count)) => {
                    if coeff != c {
                        return Err(Error::NotInCentraliser(format!(
                            "coefficients differ on the class of {shape}"
                        )));
                    }
                    *count += 1;
                }
            }
        }
        let mut out = BTreeMap::new();
        for (shape, (coeff, count)) in per_class {
            if BigInt::from(count) != shape.class_size(self.n)? {
                return Err(Error::NotInCentraliser(format!(
                    "class of {shape} is only partially present"
                )));
            }
            out.insert(shape, coeff);
        }
        Ok(out)
    }

    /// Whether the element commutes with every permutation fixing `1..=m`.
    /// It is enough to check the adjacent transpositions of `m+1..=n`.
    pub fn centralises(&self, m: usize) -> bool {
        for i in (m + 1)..self.n {
            let s = GroupAlgebraElement::from_permutation(self.n, Permutation::transposition(i, i + 1))
                .expect("generator fits the ambient group");
            let left = s.mul(self).expect("same ambient");
            let right = self.mul(&s).expect("same ambient");
            if left != right {
                return false;
            }
        }
        true
    }

    /// The Jucys-Murphy element `L_i = sum_{j < i} (j, i)`; `L_1 = 0`.
    pub fn jucys_murphy(i: usize, n: usize) -> Result<GroupAlgebraElement> {
        if i == 0 || i > n {
            return Err(Error::IndexOutOfRange {
                what: "Jucys-Murphy",
                index: i,
                bound: n,
            });
        }
        let mut out = GroupAlgebraElement::zero(n);
        for j in 1..i {
            out.add_term(Permutation::transposition(j, i), BigInt::one());
        }
        Ok(out)
    }

    fn jm_values(n: usize) -> Vec<GroupAlgebraElement> {
        (1..=n)
            .map(|i| GroupAlgebraElement::jucys_murphy(i, n).expect("index in range"))
            .collect()
    }

    /// Evaluate an integer polynomial in the elementary symmetric functions
    /// at the Jucys-Murphy elements of `S_n`.
    pub fn eval_epoly_at_jm(p: &EPolynomial, n: usize) -> GroupAlgebraElement {
        let values = GroupAlgebraElement::jm_values(n);
        symfunc::eval_epolynomial(p, &values, &GroupAlgebraElement::identity(n))
    }

    /// Evaluate the monomial symmetric polynomial `m_alpha` at the
    /// Jucys-Murphy elements of `S_n`.
    pub fn eval_monomial_at_jm(alpha: &Partition, n: usize) -> GroupAlgebraElement {
        let values = GroupAlgebraElement::jm_values(n);
        symfunc::eval_monomial_sym(alpha, &values, &GroupAlgebraElement::identity(n))
    }

    /// Conjugate by the involution exchanging `i` and `n + i` for `i` in
    /// `1..=m`; carries the centraliser of the first `m` points onto the
    /// centraliser of the last `m`.
    pub fn twist(&self, n: usize, m: usize) -> Result<GroupAlgebraElement> {
        if self.n < n + m {
            return Err(Error::AmbientMismatch {
                left: self.n,
                right: n + m,
            });
        }
        let mut sigma = Permutation::identity();
        for i in 1..=m {
            sigma = sigma.compose(&Permutation::transposition(i, n + i));
        }
        let terms = self
            .terms
            .iter()
            .map(|(p, c)| (p.conjugate_by(&sigma), c.clone()))
            .collect();
        Ok(GroupAlgebraElement { n: self.n, terms })
    }

    /// JSON form `{"n": n, "terms": [{"perm": "(1,2)", "coeff": "3"}, ...]}`
    /// with coefficients as decimal strings, sorted by permutation text.
    pub fn to_json(&self) -> serde_json::Value {
        let mut terms: Vec<(String, &BigInt)> = self
            .terms
            .iter()
            .map(|(p, c)| (p.to_string(), c))
            .collect();
        terms.sort();
        serde_json::json!({
            "n": self.n,
            "terms": terms
                .into_iter()
                .map(|(p, c)| serde_json::json!({ "perm": p, "coeff": c.to_string() }))
                .collect::<Vec<_>>(),
        })
    }

    pub fn from_json(value: &serde_json::Value) -> Result<Self> {
        let n = value
            .get("n")
            .and_then(|v| v.as_u64())
            .ok_or_else(|| Error::Json("expected integer field \"n\"".into()))? as usize;
        let terms = value
            .get("terms")
            .and_then(|v| v.as_array())
            .ok_or_else(|| Error::Json("expected array field \"terms\"".into()))?;
        let mut out = GroupAlgebraElement::zero(n);
        for term in terms {
            let perm_text = term
                .get("perm")
                .and_then(|v| v.as_str())
                .ok_or_else(|| Error::Json("term needs a \"perm\" string".into()))?;
            let coeff = term
                .get("coeff")
                .ok_or_else(|| Error::Json("term needs a \"coeff\"".into()))?;
            let p = Permutation::parse(perm_text)?;
            if let Some(point) = p.support().find(|&i| i > n) {
                return Err(Error::SupportEscapes { point, n });
            }
            out.add_term(p, bigint_from_json(coeff)?);
        }
        Ok(out)
    }
}

impl Ring for GroupAlgebraElement {
    fn ring_zero(&self) -> Self {
        GroupAlgebraElement::zero(self.n)
    }
    fn ring_one(&self) -> Self {
        GroupAlgebraElement::identity(self.n)
    }
    fn ring_add(&self, other: &Self) -> Self {
        self.add(other)
    }
    fn ring_mul(&self, other: &Self) -> Self {
        self.mul(other).expect("ambient mismatch in ring product")
    }
    fn ring_scale(&self, k: &BigInt) -> Self {
        self.scale(k)
    }
}

/// `a_{lambda,mu}^{nu}(n)`: the number of factorisations `g h = omega` with
/// `g` in the class of `lambda` and `h` in the class of `mu`, for one fixed
/// representative `omega` of the class of `nu`. Enumerates `g` and tests
/// `h = g^{-1} omega` for membership.
pub fn pair_count(
    lambda: &MarkedCycleShape,
    mu: &MarkedCycleShape,
    nu: &MarkedCycleShape,
    n: usize,
) -> Result<BigInt> {
    if lambda.m() != mu.m() || lambda.m() != nu.m() {
        return Err(Error::AmbientMismatch {
            left: lambda.m(),
            right: mu.m().max(nu.m()),
        });
    }
    if nu.deg() > n {
        return Err(Error::DegreeBound(format!(
            "nu = {nu} has degree {} > n = {n}",
            nu.deg()
        )));
    }
    let omega = nu.representative(n)?;
    let mut count = BigInt::zero();
    for g in lambda.class_members(n)? {
        let h = g.inverse().compose(&omega);
        if mu.is_member(&h, n)? {
            count += 1;
        }
    }
    Ok(count)
}

/// All multiplicities `a_{lambda,mu}^{nu}(n)` at once: fix one member of the
/// larger class, sweep the smaller class, and tally the shapes of the
/// products. Conjugation equivariance makes the tally independent of the
/// fixed member, so each multiplicity is `|CL(lambda)| * tally / |CL(nu)|`.
pub fn product_multiplicities(
    lambda: &MarkedCycleShape,
    mu: &MarkedCycleShape,
    n: usize,
) -> Result<BTreeMap<MarkedCycleShape, BigInt>> {
    assert_eq!(lambda.m(), mu.m(), "shapes must share m");
    let m = lambda.m();
    let lambda_size = lambda.class_size(n)?;
    let mu_size = mu.class_size(n)?;
    if lambda_size.is_zero() || mu_size.is_zero() {
        return Ok(BTreeMap::new());
    }
    let smaller = lambda_size.clone().min(mu_size.clone());
    if smaller > BigInt::from(term_cap()) {
        return Err(Error::TermCap {
            size: smaller,
            cap: term_cap(),
        });
    }
    // iterate over the smaller class
    let mut tally: BTreeMap<MarkedCycleShape, usize> = BTreeMap::new();
    let outer_size = if lambda_size <= mu_size {
        let fixed = mu.representative(n)?;
        for g in lambda.class_members(n)? {
            *tally.entry(MarkedCycleShape::shape_of(&g.compose(&fixed), m)).or_default() += 1;
        }
        mu_size
    } else {
        let fixed = lambda.representative(n)?;
        for h in mu.class_members(n)? {
            *tally.entry(MarkedCycleShape::shape_of(&fixed.compose(&h), m)).or_default() += 1;
        }
        lambda_size
    };
    let mut out = BTreeMap::new();
    for (nu, count) in tally {
        let pairs = &outer_size * BigInt::from(count);
        let nu_size = nu.class_size(n)?;
        let (multiplicity, remainder) = pairs.div_rem(&nu_size);
        assert!(
            remainder.is_zero(),
            "pair tally not divisible by the class size of {nu}"
        );
        out.insert(nu, multiplicity);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::shapes::enumerate_shapes;

    fn shape(m: usize, text: &str) -> MarkedCycleShape {
        MarkedCycleShape::parse(m, text).unwrap()
    }

    fn perm(text: &str) -> Permutation {
        Permutation::parse(text).unwrap()
    }

    #[test]
    fn identity_is_neutral_and_convolution_is_exact() {
        let x = GroupAlgebraElement::class_sum(&shape(0, "(*,*)"), 4).unwrap();
        let one = GroupAlgebraElement::identity(4);
        assert_eq!(one.mul(&x).unwrap(), x);
        assert_eq!(x.mul(&one).unwrap(), x);
        let t = GroupAlgebraElement::from_permutation(3, perm("(1,2)")).unwrap();
        assert_eq!(t.mul(&t).unwrap(), GroupAlgebraElement::identity(3));
        assert!(x.mul(&GroupAlgebraElement::identity(5)).is_err());
    }

    #[test]
    fn mul_associative_on_random_triples() {
        // small fixed sample; exactness is the point
        let a = GroupAlgebraElement::jucys_murphy(3, 5).unwrap();
        let b = GroupAlgebraElement::class_sum(&shape(0, "(*,*,*)"), 5).unwrap();
        let c = GroupAlgebraElement::jucys_murphy(5, 5).unwrap();
        let left = a.mul(&b).unwrap().mul(&c).unwrap();
        let right = a.mul(&b.mul(&c).unwrap()).unwrap();
        assert_eq!(left, right);
    }

    #[test]
    fn class_sum_examples() {
        for m in 0..=2 {
            for n in m..=5 {
                assert_eq!(
                    GroupAlgebraElement::class_sum(&MarkedCycleShape::empty(m), n).unwrap(),
                    GroupAlgebraElement::identity(n)
                );
            }
        }
        assert!(GroupAlgebraElement::class_sum(&shape(2, "(1,2)(*,*)"), 3)
            .unwrap()
            .is_zero());
        let transpositions = GroupAlgebraElement::class_sum(&shape(0, "(*,*)"), 3).unwrap();
        let mut expected = GroupAlgebraElement::zero(3);
        for t in ["(1,2)", "(1,3)", "(2,3)"] {
            expected.add_term(perm(t), BigInt::one());
        }
        assert_eq!(transpositions, expected);
    }

    #[test]
    fn worked_product_in_s4_and_s5() {
        // K(lambda) K(mu) = 2 K(tau1) + 3 K(tau2) + C(n-2,2) K(tau3)
        let lambda = shape(2, "(1,2)(*,*)");
        let mu = shape(2, "(1)(2)(*,*)");
        for n in [4usize, 5, 6] {
            let product = GroupAlgebraElement::class_sum(&lambda, n)
                .unwrap()
                .mul(&GroupAlgebraElement::class_sum(&mu, n).unwrap())
                .unwrap();
            let coords = product.decompose(2).unwrap();
            let binom = BigInt::from(((n - 2) * (n - 3) / 2) as u64);
            let mut expected = BTreeMap::new();
            if n >= 6 {
                expected.insert(shape(2, "(1,2)(*,*)(*,*)"), BigInt::from(2));
            }
            if n >= 5 {
                expected.insert(shape(2, "(1,2)(*,*,*)"), BigInt::from(3));
            }
            expected.insert(shape(2, "(1,2)"), binom);
            assert_eq!(coords, expected, "n = {n}");
        }
    }

    #[test]
    fn decompose_detects_non_centralising_elements() {
        let single = GroupAlgebraElement::from_permutation(3, perm("(1,2)")).unwrap();
        assert!(single.decompose(0).is_err());
        assert!(!single.centralises(0));
        assert!(single.centralises(2));
        assert!(GroupAlgebraElement::zero(4).decompose(1).unwrap().is_empty());
        let sum = GroupAlgebraElement::class_sum(&shape(1, "(1,*)"), 4).unwrap();
        assert_eq!(
            sum.decompose(1).unwrap(),
            BTreeMap::from([(shape(1, "(1,*)"), BigInt::one())])
        );
        assert!(sum.centralises(1));
    }

    #[test]
    fn class_sums_centralise() {
        for m in 0..=2 {
            for lambda in enumerate_shapes(m, 4) {
                let sum = GroupAlgebraElement::class_sum(&lambda, 5).unwrap();
                assert!(sum.centralises(m), "{lambda}");
            }
        }
    }

    #[test]
    fn jucys_murphy_basics() {
        assert!(GroupAlgebraElement::jucys_murphy(1, 4).unwrap().is_zero());
        let l3 = GroupAlgebraElement::jucys_murphy(3, 4).unwrap();
        let mut expected = GroupAlgebraElement::zero(4);
        expected.add_term(perm("(1,3)"), BigInt::one());
        expected.add_term(perm("(2,3)"), BigInt::one());
        assert_eq!(l3, expected);
        assert!(GroupAlgebraElement::jucys_murphy(5, 4).is_err());
        assert!(GroupAlgebraElement::jucys_murphy(0, 4).is_err());
    }

    #[test]
    fn jm_relations_hold() {
        for n in 2..=6 {
            let jm = GroupAlgebraElement::jm_values(n);
            for i in 0..n {
                for j in 0..n {
                    assert_eq!(jm[i].mul(&jm[j]).unwrap(), jm[j].mul(&jm[i]).unwrap());
                }
            }
            for i in 1..n {
                let s = GroupAlgebraElement::from_permutation(
                    n,
                    Permutation::transposition(i, i + 1),
                )
                .unwrap();
                // L_{i+1} = s_i L_i s_i + s_i
                let conjugated = s.mul(&jm[i - 1]).unwrap().mul(&s).unwrap().add(&s);
                assert_eq!(jm[i], conjugated, "n = {n}, i = {i}");
                for j in 1..=n {
                    if j != i && j != i + 1 {
                        assert_eq!(
                            s.mul(&jm[j - 1]).unwrap(),
                            jm[j - 1].mul(&s).unwrap(),
                            "commutation n = {n}, i = {i}, j = {j}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn elementary_in_jm_equals_reduced_degree_class_sums() {
        // e_1 at n = 3 is the full transposition class
        let e1 = GroupAlgebraElement::eval_epoly_at_jm(&EPolynomial::e(1), 3);
        assert_eq!(
            e1,
            GroupAlgebraElement::class_sum(&shape(0, "(*,*)"), 3).unwrap()
        );
        // e_2 at n = 4 = K((*,*,*)) + K((*,*)(*,*))
        let e2 = GroupAlgebraElement::eval_epoly_at_jm(&EPolynomial::e(2), 4);
        let expected = GroupAlgebraElement::class_sum(&shape(0, "(*,*,*)"), 4)
            .unwrap()
            .add(&GroupAlgebraElement::class_sum(&shape(0, "(*,*)(*,*)"), 4).unwrap());
        assert_eq!(e2, expected);
        // e_k vanishes for k > n
        assert!(GroupAlgebraElement::eval_epoly_at_jm(&EPolynomial::e(3), 2).is_zero());
        // e_k(L) is central
        for n in 2..=5 {
            for k in 1..=3 {
                let e = GroupAlgebraElement::eval_epoly_at_jm(&EPolynomial::e(k), n);
                assert!(e.centralises(0), "e_{k} at n = {n}");
            }
        }
    }

    #[test]
    fn pair_count_examples() {
        let lambda = shape(2, "(1,2)(*,*)");
        let mu = shape(2, "(1)(2)(*,*)");
        let tau2 = shape(2, "(1,2)(*,*,*)");
        assert_eq!(pair_count(&lambda, &mu, &tau2, 5).unwrap(), BigInt::from(3));
        assert_eq!(
            pair_count(&lambda, &MarkedCycleShape::empty(2), &lambda, 5).unwrap(),
            BigInt::one()
        );
        assert!(pair_count(&lambda, &mu, &tau2, 3).is_err(), "degree above n");
    }

    #[test]
    fn pair_count_matches_full_convolution() {
        for m in 0..=1 {
            let shapes = enumerate_shapes(m, 4);
            for lambda in &shapes {
                for mu in &shapes {
                    for n in lambda.deg().max(mu.deg())..=6 {
                        let product = GroupAlgebraElement::class_sum(lambda, n)
                            .unwrap()
                            .mul(&GroupAlgebraElement::class_sum(mu, n).unwrap())
                            .unwrap();
                        let coords = product.decompose(m).unwrap();
                        let fast = product_multiplicities(lambda, mu, n).unwrap();
                        assert_eq!(coords, fast, "{lambda} * {mu} at n = {n}");
                        for (nu, coeff) in &coords {
                            assert_eq!(
                                &pair_count(lambda, mu, nu, n).unwrap(),
                                coeff,
                                "{lambda} * {mu} -> {nu} at n = {n}"
                            );
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn twist_basics() {
        let id = GroupAlgebraElement::identity(5);
        assert_eq!(id.twist(3, 2).unwrap(), id);
        let x = GroupAlgebraElement::class_sum(&shape(2, "(1,*)(2)"), 5).unwrap();
        let twisted = x.twist(3, 2).unwrap();
        assert_eq!(twisted.twist(3, 2).unwrap(), x, "involution");
        assert!(x.twist(4, 2).is_err(), "ambient too small");
    }

    #[test]
    fn json_round_trip() {
        let x = GroupAlgebraElement::jucys_murphy(3, 4)
            .unwrap()
            .scale(&BigInt::from(-7));
        let v = x.to_json();
        assert_eq!(GroupAlgebraElement::from_json(&v).unwrap(), x);
        assert!(GroupAlgebraElement::from_json(&serde_json::json!({
            "n": 2,
            "terms": [{"perm": "(1,3)", "coeff": "1"}]
        }))
        .is_err());
    }
}
