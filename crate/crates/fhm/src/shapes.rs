//! Marked cycle shapes: the combinatorial index set for centraliser classes.
//!
//! An m-marked cycle shape is a finite multiset of cycles over the marks
//! `1..=m` and a star symbol, where each mark appears exactly once and
//! star-only cycles have length at least two. Equivalently it is a triple
//! `(pi, d, l)`: a permutation `pi` of the marks, a vector `d` giving the
//! number of stars inserted after each mark, and a multiset `l` of star-only
//! cycle lengths. Under that identification the set of shapes is a monoid:
//!
//! ```text
//! (pi u^d c^l)(sigma u^e c^k) = (pi sigma) u^{sigma.d + e} c^{l + k},
//! (sigma.d)(i) = d(sigma^{-1}(i))
//! ```
//!
//! Shapes index the orbits of conjugation by the subgroup fixing `1..=m`
//! pointwise, and everything here is exact: membership tests, enumeration,
//! counting by three independent methods, and orbit cardinalities.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use itertools::Itertools;
use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::intpoly::binomial;
use crate::perm::Permutation;
use crate::symfunc::{partitions_of, Partition};

/// Hard limit for brute-force orbit enumeration.
pub const ORBIT_GUARD: usize = 9;

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MarkedCycleShape {
    m: usize,
    pi: Permutation,
    d: Vec<usize>,
    star_cycles: BTreeMap<usize, usize>,
}

/// The combinatorial statistics of a shape.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShapeStats {
    pub norm: usize,
    pub norm_upper_m: usize,
    pub norm_lower_m: usize,
    pub deg_m: usize,
    pub reduced_degree: Option<usize>,
}

impl MarkedCycleShape {
    pub fn new(
        m: usize,
        pi: Permutation,
        d: Vec<usize>,
        star_cycles: BTreeMap<usize, usize>,
    ) -> Result<Self> {
        if let Some(point) = pi.support().find(|&i| i > m) {
            return Err(Error::InvalidShape(format!(
                "mark permutation moves {point}, outside 1..={m}"
            )));
        }
        if d.len() != m {
            return Err(Error::InvalidShape(format!(
                "star vector has length {}, expected {m}",
                d.len()
            )));
        }
        let star_cycles: BTreeMap<usize, usize> = star_cycles
            .into_iter()
            .filter(|&(_, mult)| mult > 0)
            .collect();
        if let Some((&len, _)) = star_cycles.iter().find(|&(&len, _)| len < 2) {
            return Err(Error::InvalidShape(format!(
                "star-only cycle of length {len}; must be at least two"
            )));
        }
        Ok(MarkedCycleShape {
            m,
            pi,
            d,
            star_cycles,
        })
    }

    /// The identity shape: every mark in a trivial cycle, no stars.
    pub fn empty(m: usize) -> Self {
        MarkedCycleShape {
            m,
            pi: Permutation::identity(),
            d: vec![0; m],
            star_cycles: BTreeMap::new(),
        }
    }

    /// The generator `u_i`: one star after mark `i`, all marks fixed.
    pub fn u(m: usize, i: usize) -> Result<Self> {
        if i == 0 || i > m {
            return Err(Error::IndexOutOfRange {
                what: "mark",
                index: i,
                bound: m,
            });
        }
        let mut d = vec![0; m];
        d[i - 1] = 1;
        MarkedCycleShape::new(m, Permutation::identity(), d, BTreeMap::new())
    }

    /// A mark-only shape from a permutation supported on the marks.
    pub fn from_mark_permutation(m: usize, pi: Permutation) -> Result<Self> {
        MarkedCycleShape::new(m, pi, vec![0; m], BTreeMap::new())
    }

    /// The star-only shape with cycle lengths `alpha_i + 1`.
    pub fn bar(alpha: &Partition) -> Self {
        let mut star_cycles: BTreeMap<usize, usize> = BTreeMap::new();
        for &a in alpha.parts() {
            *star_cycles.entry(a + 1).or_default() += 1;
        }
        MarkedCycleShape {
            m: 0,
            pi: Permutation::identity(),
            d: Vec::new(),
            star_cycles,
        }
    }

    /// Inverse of [`MarkedCycleShape::bar`]: the partition with parts
    /// `length - 1` over the star-only cycles.
    pub fn star_partition(&self) -> Partition {
        let mut parts = Vec::new();
        for (&len, &mult) in self.star_cycles.iter().rev() {
            for _ in 0..mult {
                parts.push(len - 1);
            }
        }
        Partition::new(parts).expect("cycle lengths are at least two")
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn mark_permutation(&self) -> &Permutation {
        &self.pi
    }

    pub fn star_vector(&self) -> &[usize] {
        &self.d
    }

    pub fn star_cycles(&self) -> &BTreeMap<usize, usize> {
        &self.star_cycles
    }

    /// Number of stars: `Sum d(i) + Sum len * mult`.
    pub fn norm_upper(&self) -> usize {
        let stars_in_marked: usize = self.d.iter().sum();
        let stars_in_star_only: usize = self.star_cycles.iter().map(|(&l, &m)| l * m).sum();
        stars_in_marked + stars_in_star_only
    }

    /// Number of marks moved by the mark permutation.
    pub fn norm_lower(&self) -> usize {
        self.pi.support_size()
    }

    pub fn norm(&self) -> usize {
        self.norm_upper() + self.norm_lower()
    }

    pub fn deg(&self) -> usize {
        self.norm_upper() + self.m
    }

    /// Support size of any member permutation. Unlike [`Self::norm`] this
    /// also counts marks that sit in a trivial mark orbit but carry stars.
    pub fn member_support(&self) -> usize {
        let marks_in_long_cycles = (1..=self.m)
            .filter(|&i| self.pi.moves(i) || self.d[i - 1] > 0)
            .count();
        marks_in_long_cycles + self.norm_upper()
    }

    /// Sign of every member permutation.
    pub fn member_sign(&self) -> i8 {
        let transpositions = self.member_support() - self.cycle_count();
        if transpositions % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// Number of non-trivial cycles of any member permutation.
    fn cycle_count(&self) -> usize {
        let star_only: usize = self.star_cycles.values().sum();
        let marked = self
            .mark_orbits()
            .iter()
            .filter(|orbit| orbit.len() >= 2 || orbit.iter().any(|&i| self.d[i - 1] > 0))
            .count();
        star_only + marked
    }

    pub fn star_cycle_count(&self) -> usize {
        self.star_cycles.values().sum()
    }

    /// Reduced degree of the star-only part: stars minus star-only cycles.
    pub fn star_reduced_degree(&self) -> usize {
        self.star_cycles.iter().map(|(&l, &m)| (l - 1) * m).sum()
    }

    /// Reduced degree; defined for shapes without marks only.
    pub fn reduced_degree(&self) -> Result<usize> {
        if self.m != 0 {
            return Err(Error::DegreeBound(format!(
                "reduced degree is defined for m = 0, not m = {}",
                self.m
            )));
        }
        Ok(self.star_reduced_degree())
    }

    pub fn stats(&self) -> ShapeStats {
        ShapeStats {
            norm: self.norm(),
            norm_upper_m: self.norm_upper(),
            norm_lower_m: self.norm_lower(),
            deg_m: self.deg(),
            reduced_degree: self.reduced_degree().ok(),
        }
    }

    /// Monoid product.
    pub fn product(&self, other: &MarkedCycleShape) -> Result<MarkedCycleShape> {
        if self.m != other.m {
            return Err(Error::AmbientMismatch {
                left: self.m,
                right: other.m,
            });
        }
        let pi = self.pi.compose(&other.pi);
        let sigma_inv = other.pi.inverse();
        let d: Vec<usize> = (1..=self.m)
            .map(|i| self.d[sigma_inv.apply(i) - 1] + other.d[i - 1])
            .collect();
        let mut star_cycles = self.star_cycles.clone();
        for (&len, &mult) in &other.star_cycles {
            *star_cycles.entry(len).or_default() += mult;
        }
        MarkedCycleShape::new(self.m, pi, d, star_cycles)
    }

    /// Adjoin trivial mark cycles to a shape without marks.
    pub fn lift(&self, m: usize) -> Result<MarkedCycleShape> {
        if self.m != 0 {
            return Err(Error::InvalidShape(format!(
                "lift applies to shapes with m = 0, not m = {}",
                self.m
            )));
        }
        Ok(MarkedCycleShape {
            m,
            pi: Permutation::identity(),
            d: vec![0; m],
            star_cycles: self.star_cycles.clone(),
        })
    }

    /// Membership test for the class of this shape inside `S_n`: star-only
    /// cycle counts must match, and following `sigma` from each mark must
    /// pass `d(i)` non-marks before reaching `pi(i)`.
    pub fn is_member(&self, sigma: &Permutation, n: usize) -> Result<bool> {
        if n < self.m {
            return Err(Error::DegreeBound(format!(
                "ambient n = {n} is smaller than m = {}",
                self.m
            )));
        }
        if let Some(point) = sigma.support().find(|&p| p > n) {
            return Err(Error::SupportEscapes { point, n });
        }
        for i in 1..=self.m {
            let mut next = sigma.apply(i);
            let mut stars = 0usize;
            while next > self.m {
                stars += 1;
                next = sigma.apply(next);
            }
            if next != self.pi.apply(i) || stars != self.d[i - 1] {
                return Ok(false);
            }
        }
        let mut star_only: BTreeMap<usize, usize> = BTreeMap::new();
        for cycle in sigma.cycles() {
            if cycle.iter().all(|&p| p > self.m) {
                *star_only.entry(cycle.len()).or_default() += 1;
            }
        }
        Ok(star_only == self.star_cycles)
    }

    /// The unique shape whose class contains `sigma`.
    pub fn shape_of(sigma: &Permutation, m: usize) -> MarkedCycleShape {
        let mut images = BTreeMap::new();
        let mut d = vec![0usize; m];
        for i in 1..=m {
            let mut next = sigma.apply(i);
            let mut stars = 0usize;
            while next > m {
                stars += 1;
                next = sigma.apply(next);
            }
            if next != i {
                images.insert(i, next);
            }
            d[i - 1] = stars;
        }
        let mut star_cycles: BTreeMap<usize, usize> = BTreeMap::new();
        for cycle in sigma.cycles() {
            if cycle.iter().all(|&p| p > m) {
                *star_cycles.entry(cycle.len()).or_default() += 1;
            }
        }
        MarkedCycleShape {
            m,
            pi: Permutation::from_images(images).expect("walk yields a bijection"),
            d,
            star_cycles,
        }
    }

    /// Mark orbits of `pi` over all of `1..=m` (trivial orbits included),
    /// each starting at its least mark, sorted by that mark.
    fn mark_orbits(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.m + 1];
        let mut orbits = Vec::new();
        for start in 1..=self.m {
            if seen[start] {
                continue;
            }
            let mut orbit = vec![start];
            seen[start] = true;
            let mut next = self.pi.apply(start);
            while next != start {
                orbit.push(next);
                seen[next] = true;
                next = self.pi.apply(next);
            }
            orbits.push(orbit);
        }
        orbits
    }

    /// The canonical member: stars are filled left to right, in canonical
    /// text order, with the smallest unused elements of `[n] \ [m]`.
    pub fn representative(&self, n: usize) -> Result<Permutation> {
        if self.deg() > n {
            return Err(Error::DegreeBound(format!(
                "shape of degree {} has no members in S_{n}",
                self.deg()
            )));
        }
        let mut fresh = self.m + 1;
        let mut cycles = Vec::new();
        for orbit in self.mark_orbits() {
            let mut cycle = Vec::new();
            for &mark in &orbit {
                cycle.push(mark);
                for _ in 0..self.d[mark - 1] {
                    cycle.push(fresh);
                    fresh += 1;
                }
            }
            cycles.push(cycle);
        }
        for (&len, &mult) in self.star_cycles.iter().rev() {
            for _ in 0..mult {
                let cycle: Vec<usize> = (fresh..fresh + len).collect();
                fresh += len;
                cycles.push(cycle);
            }
        }
        Permutation::from_cycles(&cycles)
    }

    /// All members of the class inside `S_n`.
    pub fn class_members(&self, n: usize) -> Result<Vec<Permutation>> {
        if n < self.m {
            return Err(Error::DegreeBound(format!(
                "ambient n = {n} is smaller than m = {}",
                self.m
            )));
        }
        let template = self.representative(n.max(self.deg()))?;
        let slots: Vec<usize> = (self.m + 1..=self.deg()).collect();
        let pool: Vec<usize> = (self.m + 1..=n).collect();
        if slots.len() > pool.len() {
            return Ok(Vec::new());
        }
        let mut members = BTreeSet::new();
        for assignment in pool.iter().copied().permutations(slots.len()) {
            let mut relabel = BTreeMap::new();
            for (&slot, &value) in slots.iter().zip(&assignment) {
                relabel.insert(slot, value);
            }
            let images: BTreeMap<usize, usize> = template
                .support()
                .map(|i| {
                    let j = template.apply(i);
                    (
                        *relabel.get(&i).unwrap_or(&i),
                        *relabel.get(&j).unwrap_or(&j),
                    )
                })
                .collect();
            members.insert(Permutation::from_images(images).expect("relabelling a bijection"));
        }
        Ok(members.into_iter().collect())
    }

    /// `|CL_{n,m}|`, by the closed product formula: the falling factorial
    /// `(n-m)(n-m-1)...` over the stars, divided by the stabiliser order
    /// `b = prod mult! * len^mult` of the star-only cycles.
    pub fn class_size(&self, n: usize) -> Result<BigInt> {
        if n < self.m {
            return Err(Error::DegreeBound(format!(
                "ambient n = {n} is smaller than m = {}",
                self.m
            )));
        }
        let s = self.norm_upper();
        let mut numerator = BigInt::one();
        for j in 0..s {
            numerator *= BigInt::from(n as i64 - self.m as i64 - j as i64);
        }
        if numerator.is_zero() || n < self.deg() {
            return Ok(BigInt::zero());
        }
        Ok(numerator / self.stabiliser_order())
    }

    /// `b`: the order of the subgroup of permutations of the star entries
    /// fixing a member; star-only cycles of equal length may be permuted and
    /// each rotated.
    pub fn stabiliser_order(&self) -> BigInt {
        let mut b = BigInt::one();
        for (&len, &mult) in &self.star_cycles {
            for j in 1..=mult {
                b *= BigInt::from(j);
            }
            for _ in 0..mult {
                b *= BigInt::from(len);
            }
        }
        b
    }

    /// Canonical text: marked cycles first (least mark leading, sorted by
    /// least mark, trivial mark cycles included), then star-only cycles by
    /// decreasing length. The empty 0-marked shape prints as `id`.
    pub fn text(&self) -> String {
        if self.m == 0 && self.star_cycles.is_empty() {
            return "id".to_string();
        }
        let mut out = String::new();
        for orbit in self.mark_orbits() {
            out.push('(');
            let mut first = true;
            for &mark in &orbit {
                if !first {
                    out.push(',');
                }
                first = false;
                out.push_str(&mark.to_string());
                for _ in 0..self.d[mark - 1] {
                    out.push_str(",*");
                }
            }
            out.push(')');
        }
        for (&len, &mult) in self.star_cycles.iter().rev() {
            for _ in 0..mult {
                out.push('(');
                out.push_str(&vec!["*"; len].join(","));
                out.push(')');
            }
        }
        out
    }

    /// Parse a shape over marks `1..=m`. Every mark must occur exactly once
    /// (trivial mark cycles written out); star-only cycles need length >= 2.
    pub fn parse(m: usize, text: &str) -> Result<Self> {
        let text = text.trim();
        if text == "id" {
            if m == 0 {
                return Ok(MarkedCycleShape::empty(0));
            }
            return Err(Error::Parse(format!(
                "\"id\" denotes the empty 0-marked shape; write the trivial cycles for m = {m}"
            )));
        }
        enum Token {
            Mark(usize),
            Star,
        }
        let mut groups: Vec<Vec<Token>> = Vec::new();
        let mut rest = text;
        while !rest.is_empty() {
            let Some(stripped) = rest.strip_prefix('(') else {
                return Err(Error::Parse(format!("expected '(' at: {rest:?}")));
            };
            let Some(close) = stripped.find(')') else {
                return Err(Error::Parse("unbalanced parenthesis".into()));
            };
            let body = &stripped[..close];
            let mut group = Vec::new();
            for tok in body.split(',') {
                let tok = tok.trim();
                if tok == "*" {
                    group.push(Token::Star);
                } else {
                    let mark: usize = tok
                        .parse()
                        .map_err(|_| Error::Parse(format!("bad cycle entry {tok:?}")))?;
                    if mark == 0 || mark > m {
                        return Err(Error::Parse(format!("mark {mark} outside 1..={m}")));
                    }
                    group.push(Token::Mark(mark));
                }
            }
            groups.push(group);
            rest = &stripped[close + 1..];
        }
        if groups.is_empty() {
            return Err(Error::Parse("empty shape text".into()));
        }

        let mut seen = vec![false; m + 1];
        let mut images = BTreeMap::new();
        let mut d = vec![0usize; m];
        let mut star_cycles: BTreeMap<usize, usize> = BTreeMap::new();
        for group in &groups {
            let mark_positions: Vec<usize> = group
                .iter()
                .enumerate()
                .filter_map(|(k, t)| match t {
                    Token::Mark(_) => Some(k),
                    Token::Star => None,
                })
                .collect();
            if mark_positions.is_empty() {
                if group.len() < 2 {
                    return Err(Error::Parse(
                        "star-only cycle must have length at least two".into(),
                    ));
                }
                *star_cycles.entry(group.len()).or_default() += 1;
                continue;
            }
            for (idx, &pos) in mark_positions.iter().enumerate() {
                let Token::Mark(mark) = group[pos] else {
                    unreachable!()
                };
                if seen[mark] {
                    return Err(Error::Parse(format!("mark {mark} appears twice")));
                }
                seen[mark] = true;
                let next_pos = mark_positions[(idx + 1) % mark_positions.len()];
                let Token::Mark(next_mark) = group[next_pos] else {
                    unreachable!()
                };
                // stars strictly between this mark and the next, cyclically
                let stars = if idx + 1 < mark_positions.len() {
                    next_pos - pos - 1
                } else {
                    (group.len() - pos - 1) + mark_positions[0]
                };
                d[mark - 1] = stars;
                if next_mark != mark {
                    images.insert(mark, next_mark);
                }
            }
        }
        if let Some(missing) = (1..=m).find(|&i| !seen[i]) {
            return Err(Error::Parse(format!("mark {missing} is missing")));
        }
        let pi = Permutation::from_images(images)
            .map_err(|e| Error::Parse(format!("mark cycles are inconsistent: {e}")))?;
        MarkedCycleShape::new(m, pi, d, star_cycles)
    }

    /// JSON form `{"m": m, "cycles": "<canonical text>"}`.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({ "m": self.m, "cycles": self.text() })
    }

    pub fn from_json(value: &serde_json::Value) -> Result<Self> {
        let m = value
            .get("m")
            .and_then(|v| v.as_u64())
            .ok_or_else(|| Error::Json("expected integer field \"m\"".into()))?;
        let cycles = value
            .get("cycles")
            .and_then(|v| v.as_str())
            .ok_or_else(|| Error::Json("expected string field \"cycles\"".into()))?;
        MarkedCycleShape::parse(m as usize, cycles)
    }
}

impl fmt::Display for MarkedCycleShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.text())
    }
}

/// All permutations of the given points, as finite-support permutations.
pub fn permutations_of_points(points: &[usize]) -> Vec<Permutation> {
    points
        .iter()
        .copied()
        .permutations(points.len())
        .map(|image| {
            let map: BTreeMap<usize, usize> =
                points.iter().copied().zip(image).collect();
            Permutation::from_images(map).expect("permutation of a finite set")
        })
        .collect()
}

/// Exactly the shapes of degree at most `degree_bound`, sorted by
/// `(degree, canonical text)`. Empty when `degree_bound < m`.
pub fn enumerate_shapes(m: usize, degree_bound: usize) -> Vec<MarkedCycleShape> {
    if degree_bound < m {
        return Vec::new();
    }
    let marks: Vec<usize> = (1..=m).collect();
    let mark_perms = permutations_of_points(&marks);
    let mut out = Vec::new();
    for stars in 0..=degree_bound - m {
        for marked_stars in 0..=stars {
            let star_weight = stars - marked_stars;
            let star_multisets: Vec<BTreeMap<usize, usize>> = partitions_of(star_weight, true)
                .into_iter()
                .map(|p| {
                    let mut mult: BTreeMap<usize, usize> = BTreeMap::new();
                    for &part in p.parts() {
                        *mult.entry(part).or_default() += 1;
                    }
                    mult
                })
                .collect();
            if star_multisets.is_empty() {
                continue;
            }
            for d in compositions(marked_stars, m) {
                for star_cycles in &star_multisets {
                    for pi in &mark_perms {
                        out.push(
                            MarkedCycleShape::new(m, pi.clone(), d.clone(), star_cycles.clone())
                                .expect("enumerated data is valid"),
                        );
                    }
                }
            }
        }
    }
    out.sort_by_cached_key(|s| (s.deg(), s.text()));
    out
}

/// All ways to write `total` as an ordered sum of `parts` nonnegative parts.
fn compositions(total: usize, parts: usize) -> Vec<Vec<usize>> {
    if parts == 0 {
        return if total == 0 { vec![Vec::new()] } else { Vec::new() };
    }
    let mut out = Vec::new();
    for first in 0..=total {
        for mut rest in compositions(total - first, parts - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CountMethod {
    GenFunc,
    Closed,
    Enumerate,
}

/// `|Lambda_n(m)|` (graded) or `|Lambda_{<=n}(m)|` (cumulative), by exact
/// generating-function expansion, the closed binomial-sum formula, or direct
/// enumeration. All three agree; the closed form exists only cumulatively.
pub fn count_shapes(m: usize, n: usize, method: CountMethod, graded: bool) -> Result<BigInt> {
    match method {
        CountMethod::GenFunc => {
            let series = graded_count_series(m, n);
            if graded {
                Ok(series[n].clone())
            } else {
                Ok(series.iter().sum())
            }
        }
        CountMethod::Closed => {
            if graded {
                return Err(Error::DegreeBound(
                    "the closed formula counts cumulatively; use genfunc or enumerate for graded counts"
                        .into(),
                ));
            }
            let mut m_factorial = BigInt::one();
            for j in 1..=m {
                m_factorial *= BigInt::from(j);
            }
            let partition_counts = partition_count_table(n);
            let mut total = BigInt::zero();
            for a in m..=n {
                let b = n - a;
                let choose = binomial(&BigInt::from(a as i64 - 1), a - m);
                total += &m_factorial * choose * &partition_counts[b];
            }
            Ok(total)
        }
        CountMethod::Enumerate => {
            let shapes = enumerate_shapes(m, n);
            let count = if graded {
                shapes.iter().filter(|s| s.deg() == n).count()
            } else {
                shapes.len()
            };
            Ok(BigInt::from(count))
        }
    }
}

/// Coefficients of `m! t^m (1-t)^{-m} prod_{k>=2} (1-t^k)^{-1}` up to `t^n`.
fn graded_count_series(m: usize, n: usize) -> Vec<BigInt> {
    let mut series = vec![BigInt::zero(); n + 1];
    if m > n {
        return series;
    }
    let mut m_factorial = BigInt::one();
    for j in 1..=m {
        m_factorial *= BigInt::from(j);
    }
    series[m] = m_factorial;
    // multiply by (1 - t)^{-m}: m rounds of prefix sums
    for _ in 0..m {
        for i in 1..=n {
            let prev = series[i - 1].clone();
            series[i] += prev;
        }
    }
    // multiply by (1 - t^k)^{-1} for k = 2..=n
    for k in 2..=n {
        for i in k..=n {
            let prev = series[i - k].clone();
            series[i] += prev;
        }
    }
    series
}

fn partition_count_table(n: usize) -> Vec<BigInt> {
    let mut table = vec![BigInt::zero(); n + 1];
    table[0] = BigInt::one();
    for part in 1..=n {
        for total in part..=n {
            let prev = table[total - part].clone();
            table[total] += prev;
        }
    }
    table
}

/// Brute-force orbit of a tuple of permutations under conjugation by all
/// permutations of `[n] \ [m]`, guarded to tiny `n`.
pub fn orbit_enumerate(
    tuple: &[Permutation],
    m: usize,
    n: usize,
) -> Result<BTreeSet<Vec<Permutation>>> {
    if n > ORBIT_GUARD {
        return Err(Error::OrbitGuard {
            n,
            limit: ORBIT_GUARD,
        });
    }
    for p in tuple {
        if let Some(point) = p.support().find(|&i| i > n) {
            return Err(Error::SupportEscapes { point, n });
        }
    }
    let free: Vec<usize> = (m + 1..=n).collect();
    let mut orbit = BTreeSet::new();
    for tau in permutations_of_points(&free) {
        let conjugated: Vec<Permutation> = tuple.iter().map(|p| p.conjugate_by(&tau)).collect();
        orbit.insert(conjugated);
    }
    Ok(orbit)
}
