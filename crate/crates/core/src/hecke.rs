//! The Hecke algebra `H_N` of type `A_{N-1}` in the standard basis `T_w`.
//!
//! Generators satisfy `(T_i - q)(T_i + q^{-1}) = 0` plus the braid relations.
//! In classical mode (`q = 1`) this is the group algebra of `S_N` and the
//! product is plain composition of permutations.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::mode::Mode;
use crate::permutations::Permutation;
use crate::qfield::RatFunc;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HeckeElement {
    rank: usize,
    mode: Mode,
    terms: BTreeMap<Permutation, RatFunc>,
}

impl HeckeElement {
    pub fn zero(rank: usize, mode: Mode) -> Self {
        HeckeElement { rank, mode, terms: BTreeMap::new() }
    }

    pub fn one(rank: usize, mode: Mode) -> Self {
        HeckeElement::basis(Permutation::identity(rank), mode)
    }

    /// `T_w`.
    pub fn basis(w: Permutation, mode: Mode) -> Self {
        let rank = w.rank();
        let mut terms = BTreeMap::new();
        terms.insert(w, RatFunc::one());
        HeckeElement { rank, mode, terms }
    }

    /// `T_i`.
    pub fn generator(i: usize, rank: usize, mode: Mode) -> Result<Self> {
        Ok(HeckeElement::basis(Permutation::generator(i, rank)?, mode))
    }

    /// `T_i` for `e = 1`, `T_i^{-1} = T_i + (q^{-1} - q)` for `e = -1`.
    pub fn generator_power(i: usize, e: i32, rank: usize, mode: Mode) -> Result<Self> {
        let t = HeckeElement::generator(i, rank, mode)?;
        match e {
            1 => Ok(t),
            -1 => Ok(t.add(&HeckeElement::one(rank, mode).scale(&-mode.q_diff()))),
            _ => Err(Error::InvalidParams(format!("generator exponent must be ±1, got {e}"))),
        }
    }

    /// `T_w` for a word in the generators, each raised to ±1.
    pub fn from_signed_word(word: &[(usize, i32)], rank: usize, mode: Mode) -> Result<Self> {
        let mut acc = HeckeElement::one(rank, mode);
        for &(i, e) in word {
            acc = acc.mul(&HeckeElement::generator_power(i, e, rank, mode)?)?;
        }
        Ok(acc)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Permutation, &RatFunc)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, w: &Permutation) -> RatFunc {
        self.terms.get(w).cloned().unwrap_or_else(RatFunc::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, w: Permutation, c: &RatFunc) {
        if c.is_zero() {
            return;
        }
        let w = if w.rank() < self.rank { w.widen(self.rank) } else { w };
        match self.terms.get_mut(&w) {
            Some(existing) => {
                *existing = &*existing + c;
                if existing.is_zero() {
                    self.terms.remove(&w);
                }
            }
            None => {
                self.terms.insert(w, c.clone());
            }
        }
    }

    pub fn add(&self, other: &HeckeElement) -> HeckeElement {
        let rank = self.rank.max(other.rank);
        let mut out = self.widen(rank);
        for (w, c) in &other.terms {
            out.add_term(w.widen(rank), c);
        }
        out
    }

    pub fn sub(&self, other: &HeckeElement) -> HeckeElement {
        self.add(&other.scale(&RatFunc::from_int(-1)))
    }

    pub fn scale(&self, c: &RatFunc) -> HeckeElement {
        let mut out = HeckeElement::zero(self.rank, self.mode);
        for (w, a) in &self.terms {
            out.add_term(w.clone(), &(a * c));
        }
        out
    }

    /// Same element in `H_rank` through the inclusion `H_N ⊂ H_rank`.
    pub fn widen(&self, rank: usize) -> HeckeElement {
        assert!(rank >= self.rank, "cannot widen to a smaller rank");
        HeckeElement {
            rank,
            mode: self.mode,
            terms: self.terms.iter().map(|(w, c)| (w.widen(rank), c.clone())).collect(),
        }
    }

    /// Image under `T_i ↦ T_{i+k}`, placed in `H_new_rank`.
    pub fn shift_up(&self, k: usize, new_rank: usize) -> Result<HeckeElement> {
        if new_rank < self.rank + k {
            return Err(Error::InsufficientRank { needed: self.rank + k, got: new_rank });
        }
        let mut out = HeckeElement::zero(new_rank, self.mode);
        for (w, c) in &self.terms {
            out.add_term(w.shift_up(k).widen(new_rank), c);
        }
        Ok(out)
    }

    pub fn mul(&self, other: &HeckeElement) -> Result<HeckeElement> {
        if self.rank != other.rank {
            return Err(Error::RankMismatch(self.rank, other.rank));
        }
        if self.mode != other.mode {
            return Err(Error::ModeMismatch(self.mode.to_string(), other.mode.to_string()));
        }
        let mut out = HeckeElement::zero(self.rank, self.mode);
        if self.mode.is_classical() {
            for (a, ca) in &self.terms {
                for (b, cb) in &other.terms {
                    out.add_term(a.compose(b), &(ca * cb));
                }
            }
            return Ok(out);
        }
        for (b, cb) in &other.terms {
            let word = b.reduced_word();
            let mut partial = self.clone();
            for &i in &word {
                partial = partial.mul_generator(i);
            }
            out = out.add(&partial.scale(cb));
        }
        Ok(out)
    }

    /// Right multiplication by `T_i`.
    fn mul_generator(&self, i: usize) -> HeckeElement {
        let mut out = HeckeElement::zero(self.rank, self.mode);
        for (w, c) in &self.terms {
            for (v, a) in mul_basis_by_generator(w, i, self.mode).expect("generator in range").terms {
                out.add_term(v, &(c * &a));
            }
        }
        out
    }
}

/// `T_w T_i`: `T_{ws_i}` when the length goes up, otherwise
/// `T_{ws_i} + (q - q^{-1}) T_w`.
pub fn mul_basis_by_generator(w: &Permutation, i: usize, mode: Mode) -> Result<HeckeElement> {
    let s = Permutation::generator(i, w.rank())?;
    let ws = w.compose(&s);
    let mut out = HeckeElement::basis(ws, mode);
    if w.has_right_descent(i) {
        out.add_term(w.clone(), &mode.q_diff());
    }
    Ok(out)
}

impl fmt::Display for HeckeElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(w, c)| {
                let word: Vec<String> = w.images().iter().map(|x| x.to_string()).collect();
                let basis = format!("T[{}]", word.join(","));
                if c.is_one() {
                    basis
                } else {
                    format!("({c})*{basis}")
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qfield::RatFunc;

    const Q: Mode = Mode::Quantum;

    fn t(i: usize, n: usize) -> HeckeElement {
        HeckeElement::generator(i, n, Q).unwrap()
    }

    fn prod(xs: &[&HeckeElement]) -> HeckeElement {
        let mut acc = HeckeElement::one(xs[0].rank(), xs[0].mode());
        for x in xs {
            acc = acc.mul(x).unwrap();
        }
        acc
    }

    #[test]
    fn basis_times_generator() {
        let id = Permutation::identity(3);
        let s1 = Permutation::generator(1, 3).unwrap();
        assert_eq!(mul_basis_by_generator(&id, 1, Q).unwrap(), HeckeElement::basis(s1.clone(), Q));
        let expected = HeckeElement::one(3, Q).add(&HeckeElement::basis(s1.clone(), Q).scale(&Q.q_diff()));
        assert_eq!(mul_basis_by_generator(&s1, 1, Q).unwrap(), expected);
        let s1s2 = s1.compose(&Permutation::generator(2, 3).unwrap());
        assert_eq!(mul_basis_by_generator(&s1, 2, Q).unwrap(), HeckeElement::basis(s1s2, Q));
        assert!(mul_basis_by_generator(&s1, 3, Q).is_err());
    }

    #[test]
    fn braid_and_inverse() {
        assert_eq!(prod(&[&t(1, 3), &t(2, 3), &t(1, 3)]), prod(&[&t(2, 3), &t(1, 3), &t(2, 3)]));
        let a = t(1, 3).add(&t(2, 3).scale(&RatFunc::q()));
        assert_eq!(a.mul(&HeckeElement::one(3, Q)).unwrap(), a);
        let inv = HeckeElement::generator_power(1, -1, 2, Q).unwrap();
        let expected = t(1, 2).add(&HeckeElement::one(2, Q).scale(&(&RatFunc::q_pow(-1) - &RatFunc::q())));
        assert_eq!(inv, expected);
        assert_eq!(inv.mul(&t(1, 2)).unwrap(), HeckeElement::one(2, Q));
        assert_eq!(t(1, 2).mul(&inv).unwrap(), HeckeElement::one(2, Q));
    }

    #[test]
    fn rank_mismatch_is_an_error() {
        assert!(t(1, 2).mul(&t(1, 3)).is_err());
        assert!(HeckeElement::generator(3, 3, Q).is_err());
    }

    #[test]
    fn shift_examples() {
        assert_eq!(t(1, 2).shift_up(1, 3).unwrap(), t(2, 3));
        assert_eq!(HeckeElement::one(2, Q).shift_up(3, 5).unwrap(), HeckeElement::one(5, Q));
        let w = prod(&[&t(1, 3), &t(2, 3)]);
        assert_eq!(w.shift_up(2, 5).unwrap(), prod(&[&t(3, 5), &t(4, 5)]));
        assert!(t(1, 2).shift_up(2, 3).is_err());
    }

    #[test]
    fn classical_product_is_composition() {
        // q = 1 through the generic generator recursion agrees with composition
        let one = Mode::Specialized { num: 1, den: 1 };
        for a in Permutation::all(3) {
            for b in Permutation::all(3) {
                let generic = HeckeElement::basis(a.clone(), one).mul(&HeckeElement::basis(b.clone(), one)).unwrap();
                let classical = HeckeElement::basis(a.clone(), Mode::Classical)
                    .mul(&HeckeElement::basis(b.clone(), Mode::Classical))
                    .unwrap();
                assert_eq!(generic.terms().collect::<Vec<_>>(), classical.terms().collect::<Vec<_>>());
            }
        }
    }

    #[test]
    fn display() {
        let x = t(1, 2).add(&HeckeElement::one(2, Q).scale(&RatFunc::q()));
        assert_eq!(x.to_string(), "(q)*T[1,2] + T[2,1]");
    }
}
