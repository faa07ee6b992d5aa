//! Permutations of the positive integers with finite support.
//!
//! A [`Permutation`] stores only its moved points, so the same value works as
//! an element of any `S_n` large enough to contain its support. Composition
//! follows the convention `(p * q)(i) = p(q(i))`: the right factor acts
//! first. All higher layers of the crate inherit this single choice.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};

/// A finite-support bijection of `{1, 2, 3, ...}`.
///
/// The internal map holds exactly the moved points: `i -> p(i)` with
/// `p(i) != i`. Structural equality therefore decides equality as functions.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    map: BTreeMap<usize, usize>,
}

impl Permutation {
    pub fn identity() -> Self {
        Permutation::default()
    }

    /// Build from an explicit image map. Fixed points are stripped; the map
    /// must be injective with equal domain and codomain.
    pub fn from_images(images: BTreeMap<usize, usize>) -> Result<Self> {
        let mut map = BTreeMap::new();
        let mut seen = std::collections::BTreeSet::new();
        for (&i, &j) in &images {
            if i == 0 || j == 0 {
                return Err(Error::Parse("points must be positive".into()));
            }
            if !seen.insert(j) {
                return Err(Error::Parse(format!("image {j} repeated; not a bijection")));
            }
            if i != j {
                map.insert(i, j);
            }
        }
        for &j in map.values() {
            if !images.contains_key(&j) {
                return Err(Error::Parse(format!(
                    "image {j} missing from domain; not a bijection on the support"
                )));
            }
        }
        Ok(Permutation { map })
    }

    pub fn transposition(a: usize, b: usize) -> Self {
        assert!(a >= 1 && b >= 1 && a != b, "transposition needs two distinct points");
        let mut map = BTreeMap::new();
        map.insert(a, b);
        map.insert(b, a);
        Permutation { map }
    }

    /// Build from disjoint cycles; length-1 cycles are ignored.
    pub fn from_cycles(cycles: &[Vec<usize>]) -> Result<Self> {
        let mut map = BTreeMap::new();
        for cycle in cycles {
            for window in 0..cycle.len() {
                let a = cycle[window];
                let b = cycle[(window + 1) % cycle.len()];
                if a == 0 {
                    return Err(Error::Parse("points must be positive".into()));
                }
                if cycle.len() == 1 {
                    continue;
                }
                if map.insert(a, b).is_some() {
                    return Err(Error::Parse(format!("point {a} appears in two cycles")));
                }
            }
        }
        Permutation::from_images(map)
    }

    pub fn apply(&self, i: usize) -> usize {
        *self.map.get(&i).unwrap_or(&i)
    }

    pub fn is_identity(&self) -> bool {
        self.map.is_empty()
    }

    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.map.keys().copied()
    }

    pub fn support_size(&self) -> usize {
        self.map.len()
    }

    pub fn max_moved(&self) -> Option<usize> {
        self.map.keys().next_back().copied()
    }

    pub fn moves(&self, i: usize) -> bool {
        self.map.contains_key(&i)
    }

    /// `(self * other)(i) = self(other(i))`: `other` acts first.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        let mut map = BTreeMap::new();
        for &i in self.map.keys().chain(other.map.keys()) {
            let j = self.apply(other.apply(i));
            if i != j {
                map.insert(i, j);
            }
        }
        Permutation { map }
    }

    pub fn inverse(&self) -> Permutation {
        let map = self.map.iter().map(|(&i, &j)| (j, i)).collect();
        Permutation { map }
    }

    /// Conjugation `t * self * t^{-1}`; relabels the support by `t`.
    pub fn conjugate_by(&self, t: &Permutation) -> Permutation {
        let map = self
            .map
            .iter()
            .map(|(&i, &j)| (t.apply(i), t.apply(j)))
            .collect();
        Permutation { map }
    }

    pub fn pow(&self, k: usize) -> Permutation {
        let mut out = Permutation::identity();
        for _ in 0..k {
            out = self.compose(&out);
        }
        out
    }

    /// Disjoint cycles of length >= 2, each rotated so its least entry leads,
    /// sorted by least entry.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let mut seen = std::collections::BTreeSet::new();
        for &start in self.map.keys() {
            if seen.contains(&start) {
                continue;
            }
            let mut cycle = vec![start];
            seen.insert(start);
            let mut next = self.apply(start);
            while next != start {
                cycle.push(next);
                seen.insert(next);
                next = self.apply(next);
            }
            out.push(cycle);
        }
        // keys are visited in increasing order, so each cycle already starts
        // at its minimum and the list is sorted by that minimum
        out
    }

    /// `+1` for even permutations, `-1` for odd.
    pub fn sign(&self) -> i8 {
        let transpositions: usize = self.cycles().iter().map(|c| c.len() - 1).sum();
        if transpositions % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// Parse cycle notation, e.g. `(1,7,8,4,9)(2,6)`, or `id`.
    pub fn parse(text: &str) -> Result<Self> {
        let text = text.trim();
        if text == "id" {
            return Ok(Permutation::identity());
        }
        let mut cycles = Vec::new();
        let mut rest = text;
        while !rest.is_empty() {
            let Some(stripped) = rest.strip_prefix('(') else {
                return Err(Error::Parse(format!("expected '(' at: {rest:?}")));
            };
            let Some(close) = stripped.find(')') else {
                return Err(Error::Parse("unbalanced parenthesis".into()));
            };
            let body = &stripped[..close];
            let mut cycle = Vec::new();
            for tok in body.split(',') {
                let tok = tok.trim();
                let n: usize = tok
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad cycle entry {tok:?}")))?;
                if n == 0 {
                    return Err(Error::Parse("points must be positive".into()));
                }
                cycle.push(n);
            }
            cycles.push(cycle);
            rest = &stripped[close + 1..];
        }
        if cycles.is_empty() {
            return Err(Error::Parse("empty permutation text".into()));
        }
        Permutation::from_cycles(&cycles)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_identity() {
            return write!(f, "id");
        }
        for cycle in self.cycles() {
            write!(f, "(")?;
            for (k, point) in cycle.iter().enumerate() {
                if k > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{point}")?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn perm(text: &str) -> Permutation {
        Permutation::parse(text).unwrap()
    }

    #[test]
    fn compose_identity_cases() {
        let id = Permutation::identity();
        assert_eq!(id.compose(&id), id);
        let t = perm("(1,2)");
        assert_eq!(t.compose(&t), id);
    }

    #[test]
    fn compose_right_factor_acts_first() {
        // hand evaluation of (1 2) . (2 3) under (p.q)(i) = p(q(i)):
        //   1 -> 1 -> 2,  2 -> 3 -> 3,  3 -> 2 -> 1
        let p = perm("(1,2)");
        let q = perm("(2,3)");
        assert_eq!(p.compose(&q), perm("(1,2,3)"));
        // and the other association for contrast
        assert_eq!(q.compose(&p), perm("(1,3,2)"));
    }

    #[test]
    fn conjugate_relabels_support() {
        let id = Permutation::identity();
        assert_eq!(perm("(1,2)").conjugate_by(&id), perm("(1,2)"));
        assert_eq!(perm("(3,4,5)").conjugate_by(&perm("(3,6)")), perm("(4,5,6)"));
    }

    #[test]
    fn conjugate_fixing_marks_keeps_mark_pattern() {
        // t fixes 1 and 2, so (1 3)(2 4) stays of the form (1 a)(2 b)
        let p = perm("(1,3)(2,4)");
        let t = perm("(3,5,4,6)");
        let c = p.conjugate_by(&t);
        assert_eq!(c, perm("(1,5)(2,6)"));
        let a = c.apply(1);
        let b = c.apply(2);
        assert!(a > 2 && b > 2 && a != b);
    }

    #[test]
    fn cycle_decomposition_canonical() {
        assert!(Permutation::identity().cycles().is_empty());
        let p = perm("(2,6)(1,7,8,4,9)");
        assert_eq!(p.cycles(), vec![vec![1, 7, 8, 4, 9], vec![2, 6]]);
    }

    #[test]
    fn parse_rejects_malformed() {
        assert!(Permutation::parse("(1,2").is_err());
        assert!(Permutation::parse("(1,2)(2,3)").is_err());
        assert!(Permutation::parse("(0,1)").is_err());
        assert!(Permutation::parse("").is_err());
        assert!(Permutation::parse("(1,x)").is_err());
    }

    #[test]
    fn sign_multiplicative() {
        let p = perm("(1,2,3)");
        let q = perm("(4,5)");
        assert_eq!(p.sign(), 1);
        assert_eq!(q.sign(), -1);
        assert_eq!(p.compose(&q).sign(), -1);
    }

    prop_compose! {
        fn arb_perm()(images in proptest::collection::vec(0..8usize, 8)) -> Permutation {
            // sort the pairs (value, index) to get a random bijection of 1..=8
            let mut pairs: Vec<(usize, usize)> = images.iter().copied().zip(1..=8usize).collect();
            pairs.sort();
            let map = pairs.iter().enumerate().map(|(k, &(_, v))| (k + 1, v)).collect();
            Permutation::from_images(map).unwrap()
        }
    }

    proptest! {
        #[test]
        fn compose_associative(p in arb_perm(), q in arb_perm(), r in arb_perm()) {
            prop_assert_eq!(p.compose(&q).compose(&r), p.compose(&q.compose(&r)));
        }

        #[test]
        fn conjugation_preserves_cycle_type(p in arb_perm(), t in arb_perm()) {
            let mut left: Vec<usize> = p.cycles().iter().map(|c| c.len()).collect();
            let mut right: Vec<usize> = p.conjugate_by(&t).cycles().iter().map(|c| c.len()).collect();
            left.sort();
            right.sort();
            prop_assert_eq!(left, right);
            prop_assert_eq!(p.conjugate_by(&t).conjugate_by(&t.inverse()), p);
        }

        #[test]
        fn cycles_round_trip(p in arb_perm()) {
            prop_assert_eq!(Permutation::from_cycles(&p.cycles()).unwrap(), p.clone());
            prop_assert_eq!(Permutation::parse(&p.to_string()).unwrap(), p);
        }
    }
}
