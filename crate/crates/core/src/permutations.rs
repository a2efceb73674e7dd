//! Symmetric groups `S_N` in one-line notation.
//!
//! Composition is `(a * b)(i) = a(b(i))`; a word `s_{i_1} s_{i_2} ... s_{i_k}`
//! is the product in that order. Points are numbered from 1.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(rank: usize) -> Self {
        Permutation { images: (1..=rank).collect() }
    }

    /// The simple transposition `s_i = (i i+1)`.
    pub fn generator(i: usize, rank: usize) -> Result<Self> {
        if i == 0 || i >= rank {
            return Err(Error::GeneratorOutOfRange { index: i, rank });
        }
        let mut images: Vec<usize> = (1..=rank).collect();
        images.swap(i - 1, i);
        Ok(Permutation { images })
    }

    /// One-line notation `[σ(1), ..., σ(N)]`.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            if x == 0 || x > n || seen[x - 1] {
                return Err(Error::InvalidPermutation(format!("{images:?} is not a bijection of 1..={n}")));
            }
            seen[x - 1] = true;
        }
        Ok(Permutation { images })
    }

    /// The cycle `(i_1 i_2 ... i_k)` in `S_rank`.
    pub fn from_cycle(entries: &[usize], rank: usize) -> Result<Self> {
        let mut images: Vec<usize> = (1..=rank).collect();
        let mut seen = vec![false; rank];
        for &e in entries {
            if e == 0 || e > rank {
                return Err(Error::InvalidPermutation(format!("cycle entry {e} outside 1..={rank}")));
            }
            if seen[e - 1] {
                return Err(Error::InvalidPermutation(format!("repeated cycle entry {e}")));
            }
            seen[e - 1] = true;
        }
        for (r, &e) in entries.iter().enumerate() {
            images[e - 1] = entries[(r + 1) % entries.len()];
        }
        Ok(Permutation { images })
    }

    /// Product of the simple transpositions in `word`, left to right.
    pub fn from_word(word: &[usize], rank: usize) -> Result<Self> {
        let mut p = Permutation::identity(rank);
        for &i in word {
            if i == 0 || i >= rank {
                return Err(Error::GeneratorOutOfRange { index: i, rank });
            }
            p.images.swap(i - 1, i);
        }
        Ok(p)
    }

    pub fn rank(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// `σ(p)`; points beyond the rank are fixed.
    pub fn apply(&self, p: usize) -> usize {
        if p >= 1 && p <= self.images.len() {
            self.images[p - 1]
        } else {
            p
        }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(k, &x)| x == k + 1)
    }

    /// `self ∘ other`, widening to the larger rank.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        let n = self.rank().max(other.rank());
        Permutation { images: (1..=n).map(|p| self.apply(other.apply(p))).collect() }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.rank()];
        for (k, &x) in self.images.iter().enumerate() {
            images[x - 1] = k + 1;
        }
        Permutation { images }
    }

    /// Coxeter length, the number of inversions.
    pub fn length(&self) -> usize {
        let n = self.rank();
        let mut count = 0;
        for a in 0..n {
            for b in a + 1..n {
                if self.images[a] > self.images[b] {
                    count += 1;
                }
            }
        }
        count
    }

    /// `ℓ(σ s_i) < ℓ(σ)`.
    pub fn has_right_descent(&self, i: usize) -> bool {
        self.apply(i) > self.apply(i + 1)
    }

    /// `ℓ(s_i σ) < ℓ(σ)`.
    pub fn has_left_descent(&self, i: usize) -> bool {
        let inv = self.inverse();
        inv.apply(i) > inv.apply(i + 1)
    }

    /// A reduced word, found by repeatedly stripping the smallest right descent.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut w = self.images.clone();
        let mut rev = Vec::new();
        'outer: loop {
            for i in 1..w.len() {
                if w[i - 1] > w[i] {
                    w.swap(i - 1, i);
                    rev.push(i);
                    continue 'outer;
                }
            }
            break;
        }
        rev.reverse();
        rev
    }

    /// `s_top s_{top-1} ... s_bottom`, or the identity when `bottom > top`.
    pub fn descending_run(top: usize, bottom: usize, rank: usize) -> Permutation {
        let word: Vec<usize> = if bottom > top { Vec::new() } else { (bottom..=top).rev().collect() };
        Permutation::from_word(&word, rank).expect("run within rank")
    }

    /// The unique factorization `σ = σ_1 σ_2 ... σ_{d-1}` with
    /// `σ_i ∈ {1, s_i, s_i s_{i-1}, ..., s_i ... s_1}`.
    pub fn staircase_decompose(&self) -> Vec<Permutation> {
        let d = self.rank();
        if d < 2 {
            return Vec::new();
        }
        let mut factors = vec![Permutation::identity(d); d - 1];
        let mut rest = self.clone();
        for top in (1..d).rev() {
            // σ_top = s_top ... s_j sends j to top + 1
            let j = rest.inverse().apply(top + 1);
            let factor = Permutation::descending_run(top, j, d);
            rest = rest.compose(&factor.inverse());
            factors[top - 1] = factor;
        }
        debug_assert!(rest.is_identity());
        factors
    }

    /// Factors `σ = u w` with `u ∈ S_d` and `w` the minimal-length element of
    /// the right coset `S_d σ`.
    pub fn coset_factorize(&self, d: usize) -> (Permutation, Permutation) {
        let n = self.rank();
        let d = d.min(n);
        let inv = self.inverse();
        let mut low: Vec<usize> = (1..=d).map(|j| inv.apply(j)).collect();
        low.sort_unstable();
        let mut w_inv = inv.images.clone();
        w_inv[..d].copy_from_slice(&low);
        let w = Permutation { images: w_inv }.inverse();
        let u = self.compose(&w.inverse());
        (u, w)
    }

    /// `w` is the shortest element of `S_d w`.
    pub fn is_minimal_coset_rep(&self, d: usize) -> bool {
        (1..d.min(self.rank())).all(|i| !self.has_left_descent(i))
    }

    /// Image under `s_i ↦ s_{i+k}`, in `S_{rank+k}`.
    pub fn shift_up(&self, k: usize) -> Permutation {
        let mut images: Vec<usize> = (1..=k).collect();
        images.extend(self.images.iter().map(|&x| x + k));
        Permutation { images }
    }

    /// Same permutation regarded in `S_rank` with `rank ≥ self.rank()`.
    pub fn widen(&self, rank: usize) -> Permutation {
        assert!(rank >= self.rank(), "cannot widen to a smaller rank");
        let mut images = self.images.clone();
        images.extend(self.rank() + 1..=rank);
        Permutation { images }
    }

    /// Restriction to `S_rank` when every point above `rank` is fixed.
    pub fn narrow(&self, rank: usize) -> Option<Permutation> {
        if rank >= self.rank() {
            return Some(self.widen(rank));
        }
        if self.images[rank..].iter().enumerate().all(|(k, &x)| x == rank + k + 1) {
            Some(Permutation { images: self.images[..rank].to_vec() })
        } else {
            None
        }
    }

    /// All of `S_n`, lexicographic in one-line notation.
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut current: Vec<usize> = (1..=n).collect();
        loop {
            out.push(Permutation { images: current.clone() });
            // next lexicographic permutation
            let Some(i) = (1..n).rev().find(|&i| current[i - 1] < current[i]) else { break };
            let j = (i..n).rev().find(|&j| current[j] > current[i - 1]).unwrap();
            current.swap(i - 1, j);
            current[i..].reverse();
        }
        out
    }

    /// Minimal representatives of `S_d \ S_n`, lexicographic.
    pub fn minimal_coset_reps(d: usize, n: usize) -> Vec<Permutation> {
        Permutation::all(n).into_iter().filter(|w| w.is_minimal_coset_rep(d)).collect()
    }

    /// Disjoint cycles of length at least two, each starting at its smallest point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.rank();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 1..=n {
            if seen[start - 1] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start - 1] = true;
            let mut p = self.apply(start);
            while p != start {
                seen[p - 1] = true;
                cycle.push(p);
                p = self.apply(p);
            }
            if cycle.len() > 1 {
                out.push(cycle);
            }
        }
        out
    }

    /// Parses cycle notation such as `(1 2 3)(5 6)` into `S_rank`.
    pub fn parse_cycles(s: &str, rank: usize) -> Result<Permutation> {
        let mut p = Permutation::identity(rank);
        let mut rest = s.trim();
        while !rest.is_empty() {
            let body_end = rest
                .strip_prefix('(')
                .and_then(|r| r.find(')'))
                .ok_or_else(|| Error::InvalidPermutation(format!("malformed cycle notation {s:?}")))?;
            let body = &rest[1..=body_end];
            let entries = body
                .split(|c: char| c.is_whitespace() || c == ',')
                .filter(|t| !t.is_empty())
                .map(|t| t.parse::<usize>().map_err(|_| Error::InvalidPermutation(format!("bad entry {t:?}"))))
                .collect::<Result<Vec<_>>>()?;
            if !entries.is_empty() {
                p = p.compose(&Permutation::from_cycle(&entries, rank)?);
            }
            rest = rest[body_end + 2..].trim_start();
        }
        Ok(p)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for c in cycles {
            let body: Vec<String> = c.iter().map(|x| x.to_string()).collect();
            write!(f, "({})", body.join(" "))?;
        }
        Ok(())
    }
}

impl FromStr for Permutation {
    type Err = Error;

    /// Cycle notation; the rank is the largest point mentioned.
    fn from_str(s: &str) -> Result<Self> {
        let rank = s
            .split(|c: char| !c.is_ascii_digit())
            .filter_map(|t| t.parse::<usize>().ok())
            .max()
            .unwrap_or(0);
        Permutation::parse_cycles(s, rank)
    }
}
