//! The interpolation algebra spanned by formal class sums `K(lambda)` over
//! the ring of integer-valued polynomials.
//!
//! The product of two basis elements is determined by the structure
//! polynomials `f_{lambda,mu}^{nu}(t)`: the unique integer-valued polynomial
//! whose value at every `n >= m` is the multiplicity of the class sum of
//! `nu` in the product of the class sums of `lambda` and `mu` inside `S_n`.
//! Each polynomial has degree at most
//! `D = ||lambda||^m + ||mu||^m - ||nu||^m`, so it is pinned by sampling the
//! multiplicities at the `D + 1` consecutive points starting at
//! `N0 = m + ||lambda||^m + ||mu||^m` (where every class involved is already
//! non-empty) and interpolating; the sample at `N0 + D + 1` is held out and
//! re-checked against the interpolant.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, Mutex};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use once_cell::sync::Lazy;

use crate::error::{Error, Result};
use crate::grpalg::{product_multiplicities, GroupAlgebraElement};
use crate::intpoly::{binomial, IntPoly};
use crate::perm::Permutation;
use crate::shapes::MarkedCycleShape;
use crate::symfunc::{monomial_to_e, partitions_of, Partition, Ring};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FHElement {
    m: usize,
    terms: BTreeMap<MarkedCycleShape, IntPoly>,
}

type PairTable = Arc<BTreeMap<MarkedCycleShape, IntPoly>>;

static PAIR_CACHE: Lazy<Mutex<HashMap<(MarkedCycleShape, MarkedCycleShape), PairTable>>> =
    Lazy::new(|| Mutex::new(HashMap::new()));

/// All non-zero structure polynomials `f_{lambda,mu}^{nu}(t)` for a fixed
/// pair, keyed by `nu`. Results are memoised per pair.
pub fn structure_polynomials(
    lambda: &MarkedCycleShape,
    mu: &MarkedCycleShape,
) -> Result<PairTable> {
    assert_eq!(lambda.m(), mu.m(), "shapes must share m");
    let key = (lambda.clone(), mu.clone());
    if let Some(table) = PAIR_CACHE.lock().unwrap().get(&key) {
        return Ok(table.clone());
    }

    let m = lambda.m();
    let stars = lambda.norm_upper() + mu.norm_upper();
    let base = m + stars;
    let window: Vec<usize> = (base..=base + stars + 1).collect();
    let mut samples: BTreeMap<MarkedCycleShape, Vec<BigInt>> = BTreeMap::new();
    for (offset, &n) in window.iter().enumerate() {
        for (nu, count) in product_multiplicities(lambda, mu, n)? {
            samples
                .entry(nu)
                .or_insert_with(|| vec![BigInt::zero(); window.len()])[offset] = count;
        }
    }

    let support_bound = lambda.member_support() + mu.member_support();
    let sign = lambda.member_sign() * mu.member_sign();
    let mut table = BTreeMap::new();
    for (nu, values) in samples {
        assert!(
            nu.norm_upper() <= stars
                && nu.member_support() <= support_bound
                && nu.member_sign() == sign,
            "{nu} appeared in {lambda} * {mu} outside the candidate bounds"
        );
        let degree_bound = stars - nu.norm_upper();
        let poly = IntPoly::interpolate(base as i64, &values[..=degree_bound]);
        let held_out = (base + degree_bound + 1) as i64;
        assert_eq!(
            poly.evaluate_i64(held_out),
            values[degree_bound + 1],
            "interpolant for {lambda} * {mu} -> {nu} fails at the held-out point"
        );
        if !poly.is_zero() {
            table.insert(nu, poly);
        }
    }
    let table = Arc::new(table);
    PAIR_CACHE.lock().unwrap().insert(key, table.clone());
    Ok(table)
}

/// The structure polynomial for a single triple; zero when `nu` needs more
/// stars than `lambda` and `mu` provide.
pub fn structure_polynomial(
    lambda: &MarkedCycleShape,
    mu: &MarkedCycleShape,
    nu: &MarkedCycleShape,
) -> Result<IntPoly> {
    if nu.m() != lambda.m() {
        return Err(Error::AmbientMismatch {
            left: lambda.m(),
            right: nu.m(),
        });
    }
    if nu.norm_upper() > lambda.norm_upper() + mu.norm_upper() {
        return Ok(IntPoly::zero());
    }
    let table = structure_polynomials(lambda, mu)?;
    Ok(table.get(nu).cloned().unwrap_or_else(IntPoly::zero))
}

/// The leading term of `K(lambda) K(mu)`: the monoid product together with
/// its constant multiplicity, a product of binomial coefficients over the
/// shared star-only cycle lengths.
pub fn leading_term(
    lambda: &MarkedCycleShape,
    mu: &MarkedCycleShape,
) -> Result<(MarkedCycleShape, BigInt)> {
    let product = lambda.product(mu)?;
    let mut constant = BigInt::one();
    for (&len, &l) in lambda.star_cycles() {
        let k = mu.star_cycles().get(&len).copied().unwrap_or(0);
        constant *= binomial(&BigInt::from(l + k), l);
    }
    Ok((product, constant))
}

impl FHElement {
    pub fn zero(m: usize) -> Self {
        FHElement {
            m,
            terms: BTreeMap::new(),
        }
    }

    /// The identity `K` of the trivial shape.
    pub fn one(m: usize) -> Self {
        FHElement::basis(MarkedCycleShape::empty(m))
    }

    pub fn basis(shape: MarkedCycleShape) -> Self {
        let m = shape.m();
        let mut terms = BTreeMap::new();
        terms.insert(shape, IntPoly::from_i64(1));
        FHElement { m, terms }
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn terms(&self) -> &BTreeMap<MarkedCycleShape, IntPoly> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Highest shape degree in the support.
    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().map(|s| s.deg()).max()
    }

    pub fn coefficient(&self, shape: &MarkedCycleShape) -> IntPoly {
        self.terms.get(shape).cloned().unwrap_or_else(IntPoly::zero)
    }

    pub fn add_term(&mut self, shape: MarkedCycleShape, poly: IntPoly) {
        assert_eq!(shape.m(), self.m, "shape has the wrong number of marks");
        let entry = self.terms.entry(shape).or_insert_with(IntPoly::zero);
        *entry = entry.add(&poly);
        if entry.is_zero() {
            self.terms.retain(|_, p| !p.is_zero());
        }
    }

    pub fn add(&self, other: &FHElement) -> FHElement {
        assert_eq!(self.m, other.m, "mark mismatch in addition");
        let mut out = self.clone();
        for (shape, poly) in &other.terms {
            out.add_term(shape.clone(), poly.clone());
        }
        out
    }

    pub fn sub(&self, other: &FHElement) -> FHElement {
        self.add(&other.scale_int(&BigInt::from(-1)))
    }

    pub fn scale(&self, poly: &IntPoly) -> FHElement {
        if poly.is_zero() {
            return FHElement::zero(self.m);
        }
        FHElement {
            m: self.m,
            terms: self
                .terms
                .iter()
                .map(|(s, p)| (s.clone(), p.mul(poly)))
                .collect(),
        }
    }

    pub fn scale_int(&self, k: &BigInt) -> FHElement {
        self.scale(&IntPoly::constant(k.clone()))
    }

    /// Bilinear extension of the structure-polynomial product.
    pub fn mul(&self, other: &FHElement) -> Result<FHElement> {
        assert_eq!(self.m, other.m, "mark mismatch in product");
        let mut out = FHElement::zero(self.m);
        for (lambda, p) in &self.terms {
            for (mu, q) in &other.terms {
                let pq = p.mul(q);
                for (nu, f) in structure_polynomials(lambda, mu)?.iter() {
                    out.add_term(nu.clone(), pq.mul(f));
                }
            }
        }
        Ok(out)
    }

    /// Specialise `t -> n` and replace each formal class sum by the concrete
    /// one in `S_n`; a ring homomorphism.
    pub fn project(&self, n: usize) -> Result<GroupAlgebraElement> {
        if n < self.m {
            return Err(Error::DegreeBound(format!(
                "projection target n = {n} is smaller than m = {}",
                self.m
            )));
        }
        let mut out = GroupAlgebraElement::zero(n);
        for (shape, poly) in &self.terms {
            let coeff = poly.evaluate_i64(n as i64);
            if coeff.is_zero() || shape.deg() > n {
                continue;
            }
            out = out.add(&GroupAlgebraElement::class_sum(shape, n)?.scale(&coeff));
        }
        Ok(out)
    }

    /// JSON form `{"m": m, "terms": [{"shape": text, "poly": {...}}]}`,
    /// sorted by canonical shape text.
    pub fn to_json(&self) -> serde_json::Value {
        let mut terms: Vec<(String, &IntPoly)> =
            self.terms.iter().map(|(s, p)| (s.text(), p)).collect();
        terms.sort_by(|a, b| a.0.cmp(&b.0));
        serde_json::json!({
            "m": self.m,
            "terms": terms
                .into_iter()
                .map(|(s, p)| serde_json::json!({ "shape": s, "poly": p.to_json() }))
                .collect::<Vec<_>>(),
        })
    }

    pub fn from_json(value: &serde_json::Value) -> Result<Self> {
        let m = value
            .get("m")
            .and_then(|v| v.as_u64())
            .ok_or_else(|| Error::Json("expected integer field \"m\"".into()))? as usize;
        let terms = value
            .get("terms")
            .and_then(|v| v.as_array())
            .ok_or_else(|| Error::Json("expected array field \"terms\"".into()))?;
        let mut out = FHElement::zero(m);
        for term in terms {
            let shape_text = term
                .get("shape")
                .and_then(|v| v.as_str())
                .ok_or_else(|| Error::Json("term needs a \"shape\" string".into()))?;
            let poly = term
                .get("poly")
                .ok_or_else(|| Error::Json("term needs a \"poly\"".into()))?;
            out.add_term(
                MarkedCycleShape::parse(m, shape_text)?,
                IntPoly::from_json(poly)?,
            );
        }
        Ok(out)
    }
}

impl fmt::Display for FHElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (shape, poly) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({poly})*K[{shape}]")?;
        }
        Ok(())
    }
}

impl Ring for FHElement {
    fn ring_zero(&self) -> Self {
        FHElement::zero(self.m)
    }
    fn ring_one(&self) -> Self {
        FHElement::one(self.m)
    }
    fn ring_add(&self, other: &Self) -> Self {
        self.add(other)
    }
    fn ring_mul(&self, other: &Self) -> Self {
        self.mul(other).expect("product hit a guard rail")
    }
    fn ring_scale(&self, k: &BigInt) -> Self {
        self.scale_int(k)
    }
}

/// `E_k`: the sum of `K` over all mark-free shapes of reduced degree `k`,
/// lifted by adjoining trivial mark cycles. `E_0` is the identity.
pub fn elem_e(k: usize, m: usize) -> FHElement {
    let mut out = FHElement::zero(m);
    for alpha in partitions_of(k, false) {
        let shape = MarkedCycleShape::bar(&alpha)
            .lift(m)
            .expect("bar shapes carry no marks");
        out.add_term(shape, IntPoly::from_i64(1));
    }
    out
}

/// `M_alpha`: the monomial symmetric function expressed through the
/// elements `E_k`. Projects onto `m_alpha` at the Jucys-Murphy elements.
pub fn elem_m(alpha: &Partition, m: usize) -> Result<FHElement> {
    let epoly = monomial_to_e(alpha);
    let mut acc = FHElement::zero(m);
    for (emono, coeff) in epoly.terms() {
        let mut prod = FHElement::one(m);
        for &k in emono.parts() {
            prod = prod.mul(&elem_e(k, m))?;
        }
        acc = acc.add(&prod.scale_int(coeff));
    }
    Ok(acc)
}

/// `Y_i = K(u_i) + sum_{j<i} K((j,i))`.
pub fn elem_y(i: usize, m: usize) -> Result<FHElement> {
    if i == 0 || i > m {
        return Err(Error::IndexOutOfRange {
            what: "mark",
            index: i,
            bound: m,
        });
    }
    let mut out = FHElement::basis(MarkedCycleShape::u(m, i)?);
    for j in 1..i {
        let shape = MarkedCycleShape::from_mark_permutation(m, Permutation::transposition(j, i))?;
        out.add_term(shape, IntPoly::from_i64(1));
    }
    Ok(out)
}

/// Embed an element of the group algebra of the marks: linear extension of
/// `pi -> K(pi)`.
pub fn embed_group_algebra(x: &GroupAlgebraElement, m: usize) -> Result<FHElement> {
    let mut out = FHElement::zero(m);
    for (p, c) in x.terms() {
        if let Some(point) = p.support().find(|&i| i > m) {
            return Err(Error::SupportEscapes { point, n: m });
        }
        out.add_term(
            MarkedCycleShape::from_mark_permutation(m, p.clone())?,
            IntPoly::constant(c.clone()),
        );
    }
    Ok(out)
}

/// Embed an element with no marks by adjoining trivial mark cycles.
pub fn embed_markless(x: &FHElement, m: usize) -> Result<FHElement> {
    let mut out = FHElement::zero(m);
    for (shape, poly) in x.terms() {
        out.add_term(shape.lift(m)?, poly.clone());
    }
    Ok(out)
}

/// Coordinates of a mark-free element in the basis `{M_alpha}`, found by
/// stripping maximal terms in the order (reduced degree, cycle count).
/// Since each `M_alpha` is an integer polynomial in the `E_k`, this also
/// witnesses membership in the span of products of the `E_k`.
pub fn monomial_basis_coordinates(x: &FHElement) -> Result<BTreeMap<Partition, IntPoly>> {
    assert_eq!(x.m(), 0, "monomial coordinates apply to mark-free elements");
    let mut remaining = x.clone();
    let mut out: BTreeMap<Partition, IntPoly> = BTreeMap::new();
    while !remaining.is_zero() {
        let top = remaining
            .terms()
            .keys()
            .map(|s| (s.star_reduced_degree(), s.star_cycle_count()))
            .max()
            .expect("non-zero element has a maximal term");
        // strip every term sitting at the maximal order position at once;
        // they are pairwise incomparable and each matches one M_alpha leader
        let leaders: Vec<(MarkedCycleShape, IntPoly)> = remaining
            .terms()
            .iter()
            .filter(|(s, _)| (s.star_reduced_degree(), s.star_cycle_count()) == top)
            .map(|(s, p)| (s.clone(), p.clone()))
            .collect();
        for (shape, coeff) in leaders {
            let alpha = shape.star_partition();
            remaining = remaining.sub(&elem_m(&alpha, 0)?.scale(&coeff));
            out.insert(alpha, coeff);
        }
        if let Some(next) = remaining
            .terms()
            .keys()
            .map(|s| (s.star_reduced_degree(), s.star_cycle_count()))
            .max()
        {
            assert!(
                next < top,
                "elimination against the M basis failed to descend"
            );
        }
    }
    out.retain(|_, p| !p.is_zero());
    Ok(out)
}
