//! The superspace `V = Q(q)^{m|n}`, its tensor powers, and the right actions of
//! `S_d` (signed permutations) and `H_d` on `V^{⊗d}`.
//!
//! A tensor index `I = (i_d, ..., i_1)` is stored in written order, so
//! position `p` (counted from the right, starting at 1) holds `i_p`.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hecke::HeckeElement;
use crate::mode::Mode;
use crate::permutations::Permutation;
use crate::qfield::RatFunc;

/// Dimensions `(m | n)` of the even and odd parts.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SuperSig {
    pub m: usize,
    pub n: usize,
}

impl SuperSig {
    pub fn new(m: usize, n: usize) -> Result<Self> {
        if m + n == 0 {
            return Err(Error::InvalidParams("m + n must be at least 1".into()));
        }
        Ok(SuperSig { m, n })
    }

    pub fn dim(self) -> usize {
        self.m + self.n
    }

    /// `î`: 0 for `i ≤ m`, 1 otherwise.
    pub fn parity(self, i: usize) -> Result<u8> {
        if i == 0 || i > self.dim() {
            return Err(Error::IndexOutOfRange { index: i, dim: self.dim() });
        }
        Ok(self.parity_of(i))
    }

    pub(crate) fn parity_of(self, i: usize) -> u8 {
        u8::from(i > self.m)
    }

    /// `q_i = q^{(-1)^î}`.
    pub fn q_index(self, i: usize, mode: Mode) -> RatFunc {
        mode.q_pow(self.q_exponent(i))
    }

    /// `±1`, the exponent of `q` in `q_i`.
    pub fn q_exponent(self, i: usize) -> i64 {
        if self.parity_of(i) == 0 {
            1
        } else {
            -1
        }
    }

    /// `(-1)^{î ĵ}` as ±1.
    pub(crate) fn koszul(self, i: usize, j: usize) -> i64 {
        if self.parity_of(i) * self.parity_of(j) == 1 {
            -1
        } else {
            1
        }
    }

    pub fn indices(self) -> std::ops::RangeInclusive<usize> {
        1..=self.dim()
    }
}

/// `γ(i, j) = 1` if `i > j`, else `-1`.
pub fn gamma(i: usize, j: usize) -> i32 {
    if i > j {
        1
    } else {
        -1
    }
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct TensorIndex {
    written: Vec<usize>,
}

impl TensorIndex {
    /// From `(i_d, ..., i_1)` as written.
    pub fn new(written: Vec<usize>) -> Self {
        TensorIndex { written }
    }

    pub fn empty() -> Self {
        TensorIndex { written: Vec::new() }
    }

    pub fn checked(sig: SuperSig, written: Vec<usize>) -> Result<Self> {
        for &i in &written {
            sig.parity(i)?;
        }
        Ok(TensorIndex { written })
    }

    pub fn degree(&self) -> usize {
        self.written.len()
    }

    pub fn written(&self) -> &[usize] {
        &self.written
    }

    /// `i_p`.
    pub fn at(&self, p: usize) -> usize {
        self.written[self.written.len() - p]
    }

    /// `I·σ = (i_{σ(d)}, ..., i_{σ(1)})`.
    pub fn act(&self, sigma: &Permutation) -> TensorIndex {
        let d = self.degree();
        TensorIndex { written: (1..=d).rev().map(|p| self.at(sigma.apply(p))).collect() }
    }

    /// `I·s_k`.
    pub fn swap(&self, k: usize) -> TensorIndex {
        let d = self.degree();
        let mut written = self.written.clone();
        written.swap(d - k, d - k - 1);
        TensorIndex { written }
    }

    /// The juxtaposition `J I`, with `J` on the left.
    pub fn concat(&self, right: &TensorIndex) -> TensorIndex {
        let mut written = self.written.clone();
        written.extend_from_slice(&right.written);
        TensorIndex { written }
    }

    /// `I` with position `p` omitted.
    pub fn omit(&self, p: usize) -> TensorIndex {
        let mut written = self.written.clone();
        written.remove(self.written.len() - p);
        TensorIndex { written }
    }

    /// `m_k(I)`.
    pub fn multiplicity(&self, k: usize) -> usize {
        self.written.iter().filter(|&&i| i == k).count()
    }

    /// Parities `(|i_d|, ..., |i_1|)` in written order.
    pub fn parities(&self, sig: SuperSig) -> Vec<u8> {
        self.written.iter().map(|&i| sig.parity_of(i)).collect()
    }

    /// Sum of the parities at positions `above+1 ..= d`.
    pub fn parity_above(&self, sig: SuperSig, above: usize) -> u8 {
        let d = self.degree();
        (above + 1..=d).map(|p| sig.parity_of(self.at(p))).sum::<u8>() % 2
    }

    /// `[dim]^d` in lexicographic written order.
    pub fn all(dim: usize, d: usize) -> Vec<TensorIndex> {
        let mut out = vec![TensorIndex::empty()];
        for _ in 0..d {
            out = out
                .into_iter()
                .flat_map(|t| {
                    (1..=dim).map(move |i| {
                        let mut w = t.written.clone();
                        w.push(i);
                        TensorIndex { written: w }
                    })
                })
                .collect();
        }
        out
    }

    /// Indices with `i_d ≤ i_{d-1} ≤ ... ≤ i_1`.
    pub fn all_weakly_increasing(dim: usize, d: usize) -> Vec<TensorIndex> {
        TensorIndex::all(dim, d).into_iter().filter(|t| t.written.windows(2).all(|w| w[0] <= w[1])).collect()
    }
}

impl fmt::Display for TensorIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.written.iter().map(|i| i.to_string()).collect();
        write!(f, "e[{}]", parts.join(","))
    }
}

/// Koszul sign `ε` of `(v_d ⊗ ... ⊗ v_1)·σ`, parities given in written order.
pub fn sign_eps(parities: &[u8], sigma: &Permutation) -> i64 {
    let d = parities.len();
    let mut current = parities.to_vec();
    let mut sign = 1;
    for k in sigma.reduced_word() {
        let (a, b) = (d - k, d - k - 1);
        if current[a] * current[b] == 1 {
            sign = -sign;
        }
        current.swap(a, b);
    }
    sign
}

/// A vector of `V^{⊗d}` in the basis `e_I`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SuperTensor {
    sig: SuperSig,
    degree: usize,
    terms: BTreeMap<TensorIndex, RatFunc>,
}

impl SuperTensor {
    pub fn zero(sig: SuperSig, degree: usize) -> Self {
        SuperTensor { sig, degree, terms: BTreeMap::new() }
    }

    pub fn basis(sig: SuperSig, index: TensorIndex) -> Self {
        let mut t = SuperTensor::zero(sig, index.degree());
        t.terms.insert(index, RatFunc::one());
        t
    }

    pub fn from_written(sig: SuperSig, written: &[usize]) -> Self {
        SuperTensor::basis(sig, TensorIndex::new(written.to_vec()))
    }

    pub fn sig(&self) -> SuperSig {
        self.sig
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn terms(&self) -> impl Iterator<Item = (&TensorIndex, &RatFunc)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, index: &TensorIndex) -> RatFunc {
        self.terms.get(index).cloned().unwrap_or_else(RatFunc::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, index: TensorIndex, c: &RatFunc) {
        debug_assert_eq!(index.degree(), self.degree);
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&index) {
            Some(existing) => {
                *existing = &*existing + c;
                if existing.is_zero() {
                    self.terms.remove(&index);
                }
            }
            None => {
                self.terms.insert(index, c.clone());
            }
        }
    }

    pub fn add(&self, other: &SuperTensor) -> SuperTensor {
        let mut out = self.clone();
        for (i, c) in &other.terms {
            out.add_term(i.clone(), c);
        }
        out
    }

    pub fn sub(&self, other: &SuperTensor) -> SuperTensor {
        self.add(&other.scale(&RatFunc::from_int(-1)))
    }

    pub fn scale(&self, c: &RatFunc) -> SuperTensor {
        let mut out = SuperTensor::zero(self.sig, self.degree);
        if c.is_zero() {
            return out;
        }
        for (i, a) in &self.terms {
            out.terms.insert(i.clone(), a * c);
        }
        out
    }

    /// Applies a map defined on basis tensors, extended linearly.
    pub fn map_basis(&self, degree: usize, f: impl Fn(&TensorIndex) -> SuperTensor) -> SuperTensor {
        let mut out = SuperTensor::zero(self.sig, degree);
        for (i, c) in &self.terms {
            for (j, a) in f(i).terms {
                out.add_term(j, &(&a * c));
            }
        }
        out
    }

    /// Signed right action of `σ ∈ S_d`.
    pub fn act_sym(&self, sigma: &Permutation) -> Result<SuperTensor> {
        if sigma.rank() > self.degree.max(1) {
            if !sigma.narrow(self.degree).is_some() {
                return Err(Error::RankMismatch(sigma.rank(), self.degree));
            }
        }
        let sig = self.sig;
        Ok(self.map_basis(self.degree, |i| {
            let sign = sign_eps(&i.parities(sig), sigma);
            SuperTensor::basis(sig, i.act(sigma)).scale(&RatFunc::from_int(sign))
        }))
    }

    /// Right action of `T_k^{±1}`.
    pub fn act_hecke_gen(&self, k: usize, e: i32, mode: Mode) -> Result<SuperTensor> {
        if k == 0 || k >= self.degree {
            return Err(Error::PositionOutOfRange { position: k, degree: self.degree });
        }
        let sig = self.sig;
        let forward = self.map_basis(self.degree, |i| {
            let (a, b) = (i.at(k), i.at(k + 1));
            let swapped = || SuperTensor::basis(sig, i.swap(k)).scale(&RatFunc::from_int(sig.koszul(a, b)));
            if a > b {
                swapped()
            } else if a == b {
                let sign = if sig.parity_of(a) == 1 { -1 } else { 1 };
                SuperTensor::basis(sig, i.clone()).scale(&(&RatFunc::from_int(sign) * &sig.q_index(a, mode)))
            } else {
                swapped().add(&SuperTensor::basis(sig, i.clone()).scale(&mode.q_diff()))
            }
        });
        match e {
            1 => Ok(forward),
            -1 => Ok(forward.sub(&self.scale(&mode.q_diff()))),
            _ => Err(Error::InvalidParams(format!("generator exponent must be ±1, got {e}"))),
        }
    }

    /// Right action of a Hecke algebra element of rank at most the degree.
    pub fn act_hecke(&self, h: &HeckeElement) -> Result<SuperTensor> {
        let mut out = SuperTensor::zero(self.sig, self.degree);
        for (w, c) in h.terms() {
            let w = w.narrow(self.degree.max(1)).ok_or(Error::RankMismatch(h.rank(), self.degree))?;
            let image = if h.mode().is_classical() {
                self.act_sym(&w)?
            } else {
                let mut acc = self.clone();
                for k in w.reduced_word() {
                    acc = acc.act_hecke_gen(k, 1, h.mode())?;
                }
                acc
            };
            out = out.add(&image.scale(c));
        }
        Ok(out)
    }
}

impl fmt::Display for SuperTensor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(i, c)| if c.is_one() { i.to_string() } else { format!("({c})*{i}") })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}
