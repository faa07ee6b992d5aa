//! Finite-variable symmetric polynomials: partitions, the elementary and
//! monomial bases, and the monomial-to-elementary basis change.
//!
//! Symmetric functions in infinitely many variables are represented
//! operationally: every computation happens in enough concrete variables for
//! the degree at hand, which is faithful there.

use std::collections::BTreeMap;
use std::fmt;

use itertools::Itertools;
use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::intpoly::{bigint_from_json, json_int, IntPoly};

/// A weakly decreasing list of positive integers.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        if parts.iter().any(|&p| p == 0) {
            return Err(Error::Parse("partition parts must be positive".into()));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition::default()
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn length(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn conjugate(&self) -> Partition {
        if self.parts.is_empty() {
            return Partition::empty();
        }
        let parts = (1..=self.parts[0])
            .map(|i| self.parts.iter().filter(|&&p| p >= i).count())
            .collect();
        Partition { parts }
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.parts
                .iter()
                .map(|&p| json_int(&BigInt::from(p)))
                .collect(),
        )
    }

    pub fn from_json(value: &serde_json::Value) -> Result<Self> {
        let arr = value
            .as_array()
            .ok_or_else(|| Error::Json("expected partition as integer array".into()))?;
        let parts = arr
            .iter()
            .map(|v| {
                let n = bigint_from_json(v)?;
                usize::try_from(&n).map_err(|_| Error::Json(format!("bad partition part {n}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.parts.iter().join(","))
    }
}

/// All partitions of `k`, in descending lexicographic order. With
/// `proper = true` only parts `>= 2` are allowed.
pub fn partitions_of(k: usize, proper: bool) -> Vec<Partition> {
    let min_part = if proper { 2 } else { 1 };
    let mut out = Vec::new();
    let mut prefix = Vec::new();
    gen_partitions(k, k, min_part, &mut prefix, &mut out);
    out
}

fn gen_partitions(
    k: usize,
    max_part: usize,
    min_part: usize,
    prefix: &mut Vec<usize>,
    out: &mut Vec<Partition>,
) {
    if k == 0 {
        out.push(Partition {
            parts: prefix.clone(),
        });
        return;
    }
    let mut p = k.min(max_part);
    while p >= min_part {
        prefix.push(p);
        gen_partitions(k - p, p, min_part, prefix, out);
        prefix.pop();
        p -= 1;
    }
}

/// An integer combination of monomials in the elementary symmetric functions
/// `e_1, e_2, ...`. Keys are the multisets of subscripts, stored as
/// partitions; no zero coefficients are kept.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct EPolynomial {
    terms: BTreeMap<Partition, BigInt>,
}

impl EPolynomial {
    pub fn zero() -> Self {
        EPolynomial::default()
    }

    pub fn one() -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(Partition::empty(), BigInt::from(1));
        EPolynomial { terms }
    }

    /// The single generator `e_k` (`e_0 = 1`).
    pub fn e(k: usize) -> Self {
        if k == 0 {
            return EPolynomial::one();
        }
        let mut terms = BTreeMap::new();
        terms.insert(Partition { parts: vec![k] }, BigInt::from(1));
        EPolynomial { terms }
    }

    pub fn terms(&self) -> &BTreeMap<Partition, BigInt> {
        &self.terms
    }

    pub fn add_term(&mut self, emono: Partition, coeff: BigInt) {
        let entry = self.terms.entry(emono).or_default();
        *entry += coeff;
        if entry.is_zero() {
            self.terms.retain(|_, c| !c.is_zero());
        }
    }

    /// Full monomial expansion in `nvars` variables; keys are exponent
    /// vectors of length `nvars`.
    pub fn expand(&self, nvars: usize) -> BTreeMap<Vec<usize>, BigInt> {
        let mut out = BTreeMap::new();
        for (emono, coeff) in &self.terms {
            for (key, c) in expand_elementary_monomial(emono, nvars) {
                add_coeff(&mut out, key, c * coeff);
            }
        }
        out
    }
}

impl fmt::Display for EPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let rendered = self
            .terms
            .iter()
            .map(|(mono, c)| {
                let name = if mono.is_empty() {
                    "1".to_string()
                } else {
                    mono.parts().iter().map(|k| format!("e{k}")).join("*")
                };
                format!("{c}*{name}")
            })
            .join(" + ");
        write!(f, "{rendered}")
    }
}

fn add_coeff(map: &mut BTreeMap<Vec<usize>, BigInt>, key: Vec<usize>, c: BigInt) {
    let entry = map.entry(key).or_default();
    *entry += c;
    if entry.is_zero() {
        map.retain(|_, v| !v.is_zero());
    }
}

/// Expand the product of the named `e_k` in `nvars` variables.
pub fn expand_elementary_monomial(
    emono: &Partition,
    nvars: usize,
) -> BTreeMap<Vec<usize>, BigInt> {
    let mut acc = BTreeMap::new();
    acc.insert(vec![0usize; nvars], BigInt::from(1));
    for &k in emono.parts() {
        let mut next = BTreeMap::new();
        if k > nvars {
            return BTreeMap::new(); // e_k = 0 in fewer than k variables
        }
        for subset in (0..nvars).combinations(k) {
            for (key, c) in &acc {
                let mut new_key = key.clone();
                for &i in &subset {
                    new_key[i] += 1;
                }
                add_coeff(&mut next, new_key, c.clone());
            }
        }
        acc = next;
    }
    acc
}

/// Expand the monomial symmetric polynomial `m_alpha` in `nvars` variables:
/// the sum of all distinct monomials whose exponent multiset is `alpha`.
pub fn expand_monomial_sym(alpha: &Partition, nvars: usize) -> BTreeMap<Vec<usize>, BigInt> {
    let mut out = BTreeMap::new();
    let l = alpha.length();
    if l > nvars {
        return out; // m_alpha = 0 in fewer variables than parts
    }
    if l == 0 {
        out.insert(vec![0usize; nvars], BigInt::from(1));
        return out;
    }
    let arrangements: std::collections::BTreeSet<Vec<usize>> = alpha
        .parts()
        .iter()
        .copied()
        .permutations(l)
        .collect();
    for positions in (0..nvars).combinations(l) {
        for arrangement in &arrangements {
            let mut key = vec![0usize; nvars];
            for (&pos, &exp) in positions.iter().zip(arrangement) {
                key[pos] = exp;
            }
            out.insert(key, BigInt::from(1));
        }
    }
    out
}

/// Collect a full monomial expansion of a symmetric polynomial into
/// coordinates in the monomial basis by reading off the canonical
/// (weakly decreasing) monomials.
pub fn collect_m_coords(expansion: &BTreeMap<Vec<usize>, BigInt>) -> BTreeMap<Partition, BigInt> {
    let mut out = BTreeMap::new();
    for (key, c) in expansion {
        if key.windows(2).all(|w| w[0] >= w[1]) {
            let parts: Vec<usize> = key.iter().copied().take_while(|&e| e > 0).collect();
            out.insert(Partition { parts }, c.clone());
        }
    }
    out
}

/// Express `m_alpha` as an integer polynomial in `e_1, e_2, ...` by
/// triangular elimination against the expansions `e_{beta'}` in `|alpha|`
/// variables. The result is verified by re-expansion before returning.
pub fn monomial_to_e(alpha: &Partition) -> EPolynomial {
    let k = alpha.size();
    if k == 0 {
        return EPolynomial::one();
    }
    let nvars = k;
    let mut remaining: BTreeMap<Partition, BigInt> = BTreeMap::new();
    remaining.insert(alpha.clone(), BigInt::from(1));
    let mut result = EPolynomial::zero();
    while let Some((beta, coeff)) = remaining.iter().next_back().map(|(b, c)| (b.clone(), c.clone()))
    {
        // e_{beta'} = m_beta + strictly dominated terms, so eliminating the
        // lexicographically greatest remaining key makes strict progress
        let emono = beta.conjugate();
        let expansion = collect_m_coords(&expand_elementary_monomial(&emono, nvars));
        assert_eq!(
            expansion.get(&beta),
            Some(&BigInt::from(1)),
            "triangular solve inconsistency: e-expansion lost its leading term"
        );
        for (key, c) in expansion {
            let entry = remaining.entry(key).or_default();
            *entry -= &coeff * c;
        }
        remaining.retain(|_, c| !c.is_zero());
        if let Some((top, _)) = remaining.iter().next_back() {
            assert!(
                *top < beta,
                "triangular solve inconsistency: elimination did not descend"
            );
        }
        result.add_term(emono, coeff);
    }
    assert_eq!(
        result.expand(nvars),
        expand_monomial_sym(alpha, nvars),
        "triangular solve inconsistency: re-expansion mismatch"
    );
    result
}

/// Minimal commutative-ring interface for exact evaluation of symmetric
/// polynomials at concrete elements. `&self` supplies ambient context
/// (the underlying group or basis data) for `zero`/`one`.
pub trait Ring: Clone {
    fn ring_zero(&self) -> Self;
    fn ring_one(&self) -> Self;
    fn ring_add(&self, other: &Self) -> Self;
    fn ring_mul(&self, other: &Self) -> Self;
    fn ring_scale(&self, k: &BigInt) -> Self;
}

impl Ring for IntPoly {
    fn ring_zero(&self) -> Self {
        IntPoly::zero()
    }
    fn ring_one(&self) -> Self {
        IntPoly::from_i64(1)
    }
    fn ring_add(&self, other: &Self) -> Self {
        self.add(other)
    }
    fn ring_mul(&self, other: &Self) -> Self {
        self.mul(other)
    }
    fn ring_scale(&self, k: &BigInt) -> Self {
        self.scale(k)
    }
}

/// `e_k(values)`: sum over all k-element subsets of the product. The values
/// must pairwise commute for this to be well defined.
pub fn eval_elementary<T: Ring>(k: usize, values: &[T], one: &T) -> T {
    if k == 0 {
        return one.clone();
    }
    if k > values.len() {
        return one.ring_zero();
    }
    let mut acc = one.ring_zero();
    for subset in values.iter().combinations(k) {
        let mut prod = one.clone();
        for v in subset {
            prod = prod.ring_mul(v);
        }
        acc = acc.ring_add(&prod);
    }
    acc
}

/// Evaluate an integer polynomial in the `e_k` at concrete values.
pub fn eval_epolynomial<T: Ring>(p: &EPolynomial, values: &[T], one: &T) -> T {
    let mut acc = one.ring_zero();
    for (emono, coeff) in p.terms() {
        let mut prod = one.clone();
        for &k in emono.parts() {
            prod = prod.ring_mul(&eval_elementary(k, values, one));
        }
        acc = acc.ring_add(&prod.ring_scale(coeff));
    }
    acc
}

/// `m_alpha(values)` evaluated directly from the monomial expansion over
/// `values.len()` variables.
pub fn eval_monomial_sym<T: Ring>(alpha: &Partition, values: &[T], one: &T) -> T {
    let nvars = values.len();
    let mut acc = one.ring_zero();
    if alpha.length() > nvars {
        return acc;
    }
    if alpha.is_empty() {
        return one.clone();
    }
    for (key, coeff) in expand_monomial_sym(alpha, nvars) {
        let mut prod = one.clone();
        for (i, &exp) in key.iter().enumerate() {
            for _ in 0..exp {
                prod = prod.ring_mul(&values[i]);
            }
        }
        acc = acc.ring_add(&prod.ring_scale(&coeff));
    }
    acc
}

/// The product `m_alpha * m_beta` re-collected in the monomial basis,
/// computed faithfully in `|alpha| + |beta|` variables.
pub fn monomial_product(alpha: &Partition, beta: &Partition) -> BTreeMap<Partition, BigInt> {
    let nvars = (alpha.size() + beta.size()).max(1);
    let left = expand_monomial_sym(alpha, nvars);
    let right = expand_monomial_sym(beta, nvars);
    let mut product: BTreeMap<Vec<usize>, BigInt> = BTreeMap::new();
    for (ka, ca) in &left {
        for (kb, cb) in &right {
            let key: Vec<usize> = ka.iter().zip(kb).map(|(a, b)| a + b).collect();
            add_coeff(&mut product, key, ca * cb);
        }
    }
    collect_m_coords(&product)
}
