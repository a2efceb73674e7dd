//! The super-extension algebra `T̃(V) = ⊕_d V^{⊗d} ⊗_{H_d} H_∞`, truncated to a
//! finite rank `N`.
//!
//! `H_N` is free as a left `H_d`-module on `{T_w}` with `w` running over the
//! minimal representatives of `S_d \ S_N`, so every element has a unique
//! normal form `Σ c · e_I ⊗ T_w`. In classical mode the Hecke algebra is the
//! group algebra and the balanced tensor product is over `Q S_d`.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::hecke::HeckeElement;
use crate::mode::Mode;
use crate::permutations::Permutation;
use crate::qfield::RatFunc;
use crate::superspace::{SuperSig, SuperTensor, TensorIndex};

/// A basis pair `(I, w)` of the induced module.
pub type BasisPair = (TensorIndex, Permutation);

#[derive(Clone, Debug)]
pub struct ExtElement {
    sig: SuperSig,
    mode: Mode,
    degree: usize,
    rank: usize,
    terms: BTreeMap<BasisPair, RatFunc>,
}

impl ExtElement {
    pub fn zero(sig: SuperSig, mode: Mode, degree: usize, rank: usize) -> Self {
        ExtElement { sig, mode, degree, rank: rank.max(degree), terms: BTreeMap::new() }
    }

    /// `1 ⊗ 1`, the unit of the algebra.
    pub fn unit(sig: SuperSig, mode: Mode) -> Self {
        ExtElement::from_hecke(sig, &HeckeElement::one(0, mode))
    }

    /// `e_j ⊗ 1`.
    pub fn vector(sig: SuperSig, mode: Mode, j: usize) -> Result<Self> {
        let index = TensorIndex::checked(sig, vec![j])?;
        ExtElement::normal_form(sig, &index, &HeckeElement::one(1, mode))
    }

    /// `e_I ⊗ 1` in rank `rank`.
    pub fn tensor(sig: SuperSig, mode: Mode, index: &TensorIndex, rank: usize) -> Result<Self> {
        ExtElement::normal_form(sig, index, &HeckeElement::one(rank.max(index.degree()), mode))
    }

    /// `1 ⊗ h`, a degree-zero element.
    pub fn from_hecke(sig: SuperSig, h: &HeckeElement) -> Self {
        let mut out = ExtElement::zero(sig, h.mode(), 0, h.rank());
        for (w, c) in h.terms() {
            out.add_term((TensorIndex::empty(), w.clone()), c);
        }
        out
    }

    /// Normal form of `e_I ⊗ h`.
    pub fn normal_form(sig: SuperSig, index: &TensorIndex, h: &HeckeElement) -> Result<Self> {
        ExtElement::from_tensor_hecke(&SuperTensor::basis(sig, index.clone()), h)
    }

    /// Normal form of `t ⊗ h`: each `T_σ` is split as `T_u T_w` with `u ∈ S_d`
    /// and `w` minimal, and `T_u` moves across to act on `t`.
    pub fn from_tensor_hecke(t: &SuperTensor, h: &HeckeElement) -> Result<Self> {
        let d = t.degree();
        if h.rank() < d {
            return Err(Error::InsufficientRank { needed: d, got: h.rank() });
        }
        let mut out = ExtElement::zero(t.sig(), h.mode(), d, h.rank());
        for (sigma, c) in h.terms() {
            let (u, w) = sigma.coset_factorize(d);
            let moved = if u.is_identity() {
                t.clone()
            } else {
                let u = u.narrow(d).expect("left factor lies in S_d");
                t.act_hecke(&HeckeElement::basis(u, h.mode()))?
            };
            for (j, a) in moved.terms() {
                out.add_term((j.clone(), w.clone()), &(a * c));
            }
        }
        Ok(out)
    }

    pub fn sig(&self) -> SuperSig {
        self.sig
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn terms(&self) -> impl Iterator<Item = (&BasisPair, &RatFunc)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, index: &TensorIndex, w: &Permutation) -> RatFunc {
        let key = (index.clone(), w.widen(self.rank.max(w.rank())));
        self.terms.get(&key).cloned().unwrap_or_else(RatFunc::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, key: BasisPair, c: &RatFunc) {
        if c.is_zero() {
            return;
        }
        let key = if key.1.rank() < self.rank { (key.0, key.1.widen(self.rank)) } else { key };
        match self.terms.get_mut(&key) {
            Some(existing) => {
                *existing = &*existing + c;
                if existing.is_zero() {
                    self.terms.remove(&key);
                }
            }
            None => {
                self.terms.insert(key, c.clone());
            }
        }
    }

    /// Same element regarded in `V^{⊗d} ⊗ H_rank`.
    pub fn widen(&self, rank: usize) -> ExtElement {
        if rank <= self.rank {
            return self.clone();
        }
        ExtElement {
            rank,
            terms: self.terms.iter().map(|((i, w), c)| ((i.clone(), w.widen(rank)), c.clone())).collect(),
            ..self.clone()
        }
    }

    /// Restriction to a smaller rank, if every `w` fixes the points above it.
    pub fn narrow(&self, rank: usize) -> Option<ExtElement> {
        if rank >= self.rank {
            return Some(self.widen(rank));
        }
        if rank < self.degree {
            return None;
        }
        let mut terms = BTreeMap::new();
        for ((i, w), c) in &self.terms {
            terms.insert((i.clone(), w.narrow(rank)?), c.clone());
        }
        Some(ExtElement { rank, terms, ..self.clone() })
    }

    /// Sum; a zero summand of another degree is absorbed.
    pub fn add(&self, other: &ExtElement) -> ExtElement {
        if other.is_zero() && other.degree != self.degree {
            return self.clone();
        }
        if self.is_zero() && other.degree != self.degree {
            return other.clone();
        }
        assert_eq!(self.degree, other.degree, "adding elements of different degrees");
        let rank = self.rank.max(other.rank);
        let mut out = self.widen(rank);
        for (key, c) in &other.terms {
            out.add_term(key.clone(), c);
        }
        out
    }

    pub fn sub(&self, other: &ExtElement) -> ExtElement {
        self.add(&other.scale(&RatFunc::from_int(-1)))
    }

    pub fn scale(&self, c: &RatFunc) -> ExtElement {
        let mut out = ExtElement::zero(self.sig, self.mode, self.degree, self.rank);
        if c.is_zero() {
            return out;
        }
        for (key, a) in &self.terms {
            out.terms.insert(key.clone(), a * c);
        }
        out
    }

    fn check_compatible(&self, other: &ExtElement) -> Result<()> {
        if self.mode != other.mode {
            return Err(Error::ModeMismatch(self.mode.to_string(), other.mode.to_string()));
        }
        if self.sig != other.sig {
            return Err(Error::SignatureMismatch);
        }
        Ok(())
    }

    /// `(e_J ⊗ T_τ) · (e_I ⊗ T_σ) = e_J e_I ⊗ T_τ^{↑|I|} T_σ`.
    pub fn product(&self, other: &ExtElement) -> Result<ExtElement> {
        self.check_compatible(other)?;
        let shift = other.degree;
        let degree = self.degree + other.degree;
        let rank = (self.rank + shift).max(other.rank).max(degree);
        let mut out = ExtElement::zero(self.sig, self.mode, degree, rank);
        for ((j, tau), a) in &self.terms {
            let left = HeckeElement::basis(tau.clone(), self.mode).shift_up(shift, rank)?;
            for ((i, sigma), b) in &other.terms {
                let right = HeckeElement::basis(sigma.widen(rank), self.mode);
                let h = left.mul(&right)?;
                let tensor = SuperTensor::basis(self.sig, j.concat(i));
                let piece = ExtElement::from_tensor_hecke(&tensor, &h)?;
                out = out.add(&piece.scale(&(a * b)));
            }
        }
        Ok(out)
    }

    /// The right action `π(h)(φ) = φ · h`.
    pub fn right_act(&self, h: &HeckeElement) -> Result<ExtElement> {
        if self.mode != h.mode() {
            return Err(Error::ModeMismatch(self.mode.to_string(), h.mode().to_string()));
        }
        let rank = self.rank.max(h.rank());
        let h = h.widen(rank);
        let mut out = ExtElement::zero(self.sig, self.mode, self.degree, rank);
        for ((i, w), c) in &self.terms {
            let prod = HeckeElement::basis(w.widen(rank), self.mode).mul(&h)?;
            let piece = ExtElement::normal_form(self.sig, i, &prod)?;
            out = out.add(&piece.scale(c));
        }
        Ok(out)
    }

    /// Applies a linear map to the tensor factor, keeping the Hecke factor:
    /// `x.(e_I ⊗ T_w) = (x.e_I) ⊗ T_w`.
    pub fn map_tensor(&self, degree: usize, f: impl Fn(&TensorIndex) -> Result<SuperTensor>) -> Result<ExtElement> {
        let mut out = ExtElement::zero(self.sig, self.mode, degree, self.rank);
        for ((i, w), c) in &self.terms {
            for (j, a) in f(i)?.terms() {
                out.add_term((j.clone(), w.clone()), &(a * c));
            }
        }
        Ok(out)
    }

    /// Basis pairs `(I, w)` of `V^{⊗d} ⊗ H_rank`, tensor index major.
    pub fn basis_pairs(sig: SuperSig, degree: usize, rank: usize) -> Vec<BasisPair> {
        let reps = Permutation::minimal_coset_reps(degree, rank);
        TensorIndex::all(sig.dim(), degree)
            .into_iter()
            .flat_map(|i| reps.iter().map(move |w| (i.clone(), w.clone())))
            .collect()
    }

    /// The basis element `e_I ⊗ T_w` for a minimal representative `w`.
    pub fn basis_element(sig: SuperSig, mode: Mode, pair: &BasisPair) -> ExtElement {
        let (i, w) = pair;
        let mut out = ExtElement::zero(sig, mode, i.degree(), w.rank());
        out.terms.insert(pair.clone(), RatFunc::one());
        out
    }

    pub fn basis(sig: SuperSig, mode: Mode, degree: usize, rank: usize) -> Vec<ExtElement> {
        ExtElement::basis_pairs(sig, degree, rank).iter().map(|p| ExtElement::basis_element(sig, mode, p)).collect()
    }

    /// Number of basis pairs, `(m+n)^d · N! / d!`.
    pub fn dimension(sig: SuperSig, degree: usize, rank: usize) -> usize {
        let falling: usize = (degree + 1..=rank).product();
        sig.dim().pow(degree as u32) * falling
    }
}

impl PartialEq for ExtElement {
    fn eq(&self, other: &Self) -> bool {
        if self.is_zero() && other.is_zero() {
            return true;
        }
        if self.degree != other.degree || self.sig != other.sig || self.mode != other.mode {
            return false;
        }
        let rank = self.rank.max(other.rank);
        self.widen(rank).terms == other.widen(rank).terms
    }
}

impl fmt::Display for ExtElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|((i, w), c)| {
                let word: Vec<String> = w.images().iter().map(|x| x.to_string()).collect();
                let basis = format!("{i} ⊗ T[{}]", word.join(","));
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
