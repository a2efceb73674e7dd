//! Exact linear algebra over `Q(q)`: operator matrices, commutants, algebra
//! closures, and end-to-end double centralizer verification on the induced
//! modules `V^{⊗d} ⊗_{H_d} H_{d+k}`.

use std::collections::{BTreeMap, HashMap};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::extension::{BasisPair, ExtElement};
use crate::glmn::QGenerator;
use crate::hecke::HeckeElement;
use crate::mode::Mode;
use crate::operators::{annihilations, classical_unit, creations, left_hecke, quantum_action};
use crate::permutations::Permutation;
use crate::qfield::RatFunc;
use crate::superspace::{SuperSig, TensorIndex};

/// Default bound on the module dimension accepted by [`verify_duality`].
pub const DEFAULT_DIM_CAP: usize = 64;

/// A dense matrix over `Q(q)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<RatFunc>,
}

impl ExactMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        ExactMatrix { rows, cols, entries: vec![RatFunc::zero(); rows * cols] }
    }

    pub fn identity(size: usize) -> Self {
        let mut m = ExactMatrix::zeros(size, size);
        for i in 0..size {
            m.set(i, i, RatFunc::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<RatFunc>>) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.len());
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::SizeMismatch("ragged rows".into()));
        }
        Ok(ExactMatrix { rows: rows.len(), cols, entries: rows.into_iter().flatten().collect() })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &RatFunc {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, value: RatFunc) {
        self.entries[r * self.cols + c] = value;
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(RatFunc::is_zero)
    }

    pub fn mul(&self, other: &ExactMatrix) -> Result<ExactMatrix> {
        if self.cols != other.rows {
            return Err(Error::SizeMismatch(format!("{}x{} times {}x{}", self.rows, self.cols, other.rows, other.cols)));
        }
        let mut out = ExactMatrix::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = other.get(k, c);
                    if !b.is_zero() {
                        let v = out.get(r, c) + &(a * b);
                        out.set(r, c, v);
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn sub(&self, other: &ExactMatrix) -> Result<ExactMatrix> {
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(Error::SizeMismatch("matrix difference".into()));
        }
        let entries = self.entries.iter().zip(&other.entries).map(|(a, b)| a - b).collect();
        Ok(ExactMatrix { rows: self.rows, cols: self.cols, entries })
    }

    pub fn commutes_with(&self, other: &ExactMatrix) -> Result<bool> {
        Ok(self.mul(other)?.sub(&other.mul(self)?)?.is_zero())
    }

    /// Entries in row-major order.
    pub fn entries(&self) -> &[RatFunc] {
        &self.entries
    }

    fn to_sparse(&self) -> SparseVec {
        dense_to_sparse(&self.entries)
    }

    fn from_dense(rows: usize, cols: usize, entries: Vec<RatFunc>) -> ExactMatrix {
        ExactMatrix { rows, cols, entries }
    }
}

type SparseVec = BTreeMap<usize, RatFunc>;

fn dense_to_sparse(v: &[RatFunc]) -> SparseVec {
    v.iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(i, x)| (i, x.clone())).collect()
}

/// A subspace kept in reduced row echelon form; pivots are chosen as the
/// first nonzero coordinate of each incoming vector.
#[derive(Clone, Debug, Default)]
pub struct Echelon {
    len: usize,
    rows: Vec<SparseVec>,
    pivot_of_row: Vec<usize>,
    row_of_pivot: HashMap<usize, usize>,
}

impl Echelon {
    pub fn new(len: usize) -> Self {
        Echelon { len, ..Default::default() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    fn reduce(&self, mut v: SparseVec) -> SparseVec {
        let mut cursor = 0;
        loop {
            let next = v.range(cursor..).find(|(c, _)| self.row_of_pivot.contains_key(c)).map(|(c, a)| (*c, a.clone()));
            let Some((col, factor)) = next else { break };
            for (c, x) in &self.rows[self.row_of_pivot[&col]] {
                let updated = v.get(c).cloned().unwrap_or_else(RatFunc::zero) - &(&factor * x);
                if updated.is_zero() {
                    v.remove(c);
                } else {
                    v.insert(*c, updated);
                }
            }
            cursor = col + 1;
        }
        v
    }

    /// Inserts a vector; returns whether it enlarged the subspace.
    fn insert(&mut self, v: SparseVec) -> bool {
        let v = self.reduce(v);
        let Some((&pivot, lead)) = v.iter().next() else { return false };
        let inv = lead.inv().expect("nonzero pivot");
        let row: SparseVec = v.iter().map(|(c, x)| (*c, x * &inv)).collect();
        for other in &mut self.rows {
            if let Some(factor) = other.get(&pivot).cloned() {
                for (c, x) in &row {
                    let updated = other.get(c).cloned().unwrap_or_else(RatFunc::zero) - &(&factor * x);
                    if updated.is_zero() {
                        other.remove(c);
                    } else {
                        other.insert(*c, updated);
                    }
                }
            }
        }
        self.row_of_pivot.insert(pivot, self.rows.len());
        self.pivot_of_row.push(pivot);
        self.rows.push(row);
        true
    }

    /// Adds a dense vector; returns whether it enlarged the subspace.
    pub fn push(&mut self, v: &[RatFunc]) -> bool {
        self.insert(dense_to_sparse(v))
    }

    pub fn contains(&self, v: &[RatFunc]) -> bool {
        self.reduce(dense_to_sparse(v)).is_empty()
    }

    /// Basis of the solution space of `row · x = 0` for all stored rows.
    pub fn kernel(&self) -> Vec<Vec<RatFunc>> {
        let free: Vec<usize> = (0..self.len).filter(|c| !self.row_of_pivot.contains_key(c)).collect();
        free.iter()
            .map(|&f| {
                let mut x = vec![RatFunc::zero(); self.len];
                x[f] = RatFunc::one();
                for (row, &p) in self.rows.iter().zip(&self.pivot_of_row) {
                    if let Some(a) = row.get(&f) {
                        x[p] = -a.clone();
                    }
                }
                x
            })
            .collect()
    }
}

/// Dimension and a basis of `{X : XG = GX for all G}`.
pub fn commutant(actions: &[ExactMatrix], size: usize) -> Result<(usize, Vec<ExactMatrix>)> {
    let s = size;
    for a in actions {
        if a.rows != s || a.cols != s {
            return Err(Error::SizeMismatch("commutant needs square matrices of one size".into()));
        }
    }
    let n = s * s;
    let mut ech = Echelon::new(n);
    for g in actions {
        for a in 0..s {
            for b in 0..s {
                // (XG - GX)_{ab} = Σ_c X_{ac} G_{cb} - Σ_c G_{ac} X_{cb}
                let mut row = SparseVec::new();
                for c in 0..s {
                    let gcb = g.get(c, b);
                    if !gcb.is_zero() {
                        let e = row.entry(a * s + c).or_insert_with(RatFunc::zero);
                        *e = &*e + gcb;
                    }
                    let gac = g.get(a, c);
                    if !gac.is_zero() {
                        let e = row.entry(c * s + b).or_insert_with(RatFunc::zero);
                        *e = &*e - gac;
                    }
                }
                row.retain(|_, v| !v.is_zero());
                if !row.is_empty() {
                    ech.insert(row);
                    if ech.rank() == n {
                        return Ok((0, Vec::new()));
                    }
                }
            }
        }
    }
    let basis: Vec<ExactMatrix> = ech.kernel().into_iter().map(|x| ExactMatrix::from_dense(s, s, x)).collect();
    Ok((basis.len(), basis))
}

/// Dimension of the span of `matrices`, with the members that enlarged it.
pub fn span(matrices: impl IntoIterator<Item = ExactMatrix>) -> (usize, Vec<ExactMatrix>) {
    let mut ech: Option<Echelon> = None;
    let mut independent = Vec::new();
    for m in matrices {
        let e = ech.get_or_insert_with(|| Echelon::new(m.rows * m.cols));
        if e.insert(m.to_sparse()) {
            independent.push(m);
        }
    }
    (independent.len(), independent)
}

/// The smallest unital subalgebra containing `generators`, built by
/// repeated left multiplication starting from the identity.
pub fn algebra_closure(generators: &[ExactMatrix], size: usize) -> Result<(usize, Vec<ExactMatrix>)> {
    for g in generators {
        if g.rows != size || g.cols != size {
            return Err(Error::SizeMismatch("closure needs square matrices of one size".into()));
        }
    }
    let mut ech = Echelon::new(size * size);
    let identity = ExactMatrix::identity(size);
    ech.insert(identity.to_sparse());
    let mut basis = vec![identity];
    let mut frontier = 0;
    while frontier < basis.len() {
        let x = basis[frontier].clone();
        frontier += 1;
        for g in generators {
            let y = g.mul(&x)?;
            if ech.insert(y.to_sparse()) {
                basis.push(y);
            }
        }
    }
    Ok((basis.len(), basis))
}

/// `V^{⊗d} ⊗_{H_d} H_rank` with its normal-form basis.
#[derive(Clone, Debug)]
pub struct InducedModule {
    pub sig: SuperSig,
    pub mode: Mode,
    pub degree: usize,
    pub rank: usize,
    pairs: Vec<BasisPair>,
    position: HashMap<BasisPair, usize>,
}

impl InducedModule {
    pub fn new(sig: SuperSig, mode: Mode, degree: usize, rank: usize) -> Result<Self> {
        if rank < degree {
            return Err(Error::InsufficientRank { needed: degree, got: rank });
        }
        let pairs = ExtElement::basis_pairs(sig, degree, rank);
        let position = pairs.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        Ok(InducedModule { sig, mode, degree, rank, pairs, position })
    }

    pub fn dim(&self) -> usize {
        self.pairs.len()
    }

    pub fn pairs(&self) -> &[BasisPair] {
        &self.pairs
    }

    pub fn basis(&self) -> Vec<ExtElement> {
        self.pairs.iter().map(|p| ExtElement::basis_element(self.sig, self.mode, p)).collect()
    }

    /// Coordinates of an element of this module.
    pub fn coordinates(&self, phi: &ExtElement) -> Result<Vec<RatFunc>> {
        let mut out = vec![RatFunc::zero(); self.dim()];
        if phi.is_zero() {
            return Ok(out);
        }
        if phi.degree() != self.degree {
            return Err(Error::NotDegreePreserving(phi.degree() as i64 - self.degree as i64));
        }
        let narrowed = phi
            .narrow(self.rank)
            .ok_or_else(|| Error::OutsideModule(format!("element needs rank {}", phi.rank())))?;
        for (pair, c) in narrowed.terms() {
            let &i = self.position.get(pair).ok_or_else(|| Error::OutsideModule(format!("{pair:?}")))?;
            out[i] = c.clone();
        }
        Ok(out)
    }

    /// Matrix of a module endomorphism; column `j` holds the image of basis `j`.
    pub fn to_matrix(&self, op: impl Fn(&ExtElement) -> Result<ExtElement>) -> Result<ExactMatrix> {
        let s = self.dim();
        let mut m = ExactMatrix::zeros(s, s);
        for (j, b) in self.basis().iter().enumerate() {
            for (i, v) in self.coordinates(&op(b)?)?.into_iter().enumerate() {
                m.set(i, j, v);
            }
        }
        Ok(m)
    }

    /// `π(T_r)` for `r = 1, …, rank-1`.
    pub fn hecke_generators(&self) -> Result<Vec<ExactMatrix>> {
        (1..self.rank)
            .map(|r| {
                let t = HeckeElement::generator(r, self.rank, self.mode)?;
                self.to_matrix(|phi| phi.right_act(&t))
            })
            .collect()
    }

    /// `π(T_w)` for every `w ∈ S_rank`.
    pub fn hecke_image(&self) -> Result<Vec<ExactMatrix>> {
        Permutation::all(self.rank)
            .into_iter()
            .map(|w| {
                let t = HeckeElement::basis(w, self.mode);
                self.to_matrix(|phi| phi.right_act(&t))
            })
            .collect()
    }

    /// Matrices of `L(e_J) L(T_w) L(e_{i_1}^*) ⋯ L(e_{i_d}^*)` over all `J`, `w`, `I`.
    pub fn span_adk_generators(&self) -> Result<Vec<ExactMatrix>> {
        let indices = TensorIndex::all(self.sig.dim(), self.degree);
        let perms = Permutation::all(self.rank);
        let basis = self.basis();
        let s = self.dim();
        let mut out = Vec::new();
        for i in &indices {
            let lowered: Vec<ExtElement> = basis.iter().map(|b| annihilations(i, b)).collect::<Result<_>>()?;
            for w in &perms {
                let h = HeckeElement::basis(w.clone(), self.mode);
                let moved: Vec<ExtElement> = lowered.iter().map(|x| left_hecke(&h, x)).collect::<Result<_>>()?;
                for j in &indices {
                    let mut m = ExactMatrix::zeros(s, s);
                    for (col, x) in moved.iter().enumerate() {
                        for (row, v) in self.coordinates(&creations(j, x)?)?.into_iter().enumerate() {
                            m.set(row, col, v);
                        }
                    }
                    out.push(m);
                }
            }
        }
        Ok(out)
    }

    /// Generators of the image of the (quantum) enveloping algebra: all
    /// `E_ij` classically, `K_i^{±1}, E_i, F_i` otherwise.
    pub fn enveloping_generators(&self) -> Result<Vec<ExactMatrix>> {
        let dim = self.sig.dim();
        let mut out = Vec::new();
        if self.mode.is_classical() {
            for i in 1..=dim {
                for j in 1..=dim {
                    out.push(self.to_matrix(|phi| classical_unit(i, j, phi))?);
                }
            }
        } else {
            let mut gens = Vec::new();
            for i in 1..=dim {
                gens.push(QGenerator::K(i));
                gens.push(QGenerator::KInv(i));
            }
            for i in 1..dim {
                gens.push(QGenerator::E(i));
                gens.push(QGenerator::F(i));
            }
            for g in gens {
                out.push(self.to_matrix(|phi| quantum_action(g, phi))?);
            }
        }
        Ok(out)
    }
}

/// Outcome of a double centralizer verification.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DualityReport {
    pub m: usize,
    pub n: usize,
    pub d: usize,
    pub k: usize,
    pub mode: Mode,
    pub dim_module: usize,
    pub dim_commutant: usize,
    pub dim_span_adk: usize,
    pub dim_bicommutant: usize,
    pub dim_hecke_image: usize,
    /// Dimension of the algebra generated by the enveloping algebra action (`k = 0` only).
    pub dim_enveloping: Option<usize>,
    pub containment_checked: bool,
    pub passed: bool,
}

fn check_specialization(mode: Mode, top: usize) -> Result<()> {
    if let Mode::Specialized { num, den } = mode {
        if num == 0 || den == 0 || num.abs() == den.abs() {
            return Err(Error::InvalidParams(format!("q = {num}/{den} must be a rational other than 0 and ±1")));
        }
        for j in 1..=top as i64 {
            if mode.q_int(j).is_zero() {
                return Err(Error::InvalidParams(format!("[{j}] vanishes at q = {num}/{den}")));
            }
        }
    }
    Ok(())
}

/// Verifies that the span of creation/Hecke/annihilation chains is the full
/// commutant of the right Hecke action on `V^{⊗d} ⊗_{H_d} H_{d+k}`, and that
/// its own commutant is the image of `H_{d+k}`. For `k = 0` the algebra
/// generated by the enveloping algebra action is compared as well.
pub fn verify_duality(m: usize, n: usize, d: usize, k: usize, mode: Mode, dim_cap: usize) -> Result<DualityReport> {
    let sig = SuperSig::new(m, n)?;
    if d == 0 || k > d {
        return Err(Error::InvalidParams(format!("need d ≥ 1 and 0 ≤ k ≤ d, got d = {d}, k = {k}")));
    }
    check_specialization(mode, d + k)?;
    let dim = ExtElement::dimension(sig, d, d + k);
    if dim > dim_cap {
        return Err(Error::ResourceCap { dim, cap: dim_cap });
    }
    let module = InducedModule::new(sig, mode, d, d + k)?;
    let gens = module.hecke_generators()?;
    let (dim_commutant, _) = commutant(&gens, module.dim())?;

    let spanning = module.span_adk_generators()?;
    let mut containment = true;
    for x in &spanning {
        for g in &gens {
            if !x.commutes_with(g)? {
                containment = false;
            }
        }
    }
    let (dim_span_adk, independent) = span(spanning);
    let (dim_bicommutant, _) = commutant(&independent, module.dim())?;
    let (dim_hecke_image, _) = span(module.hecke_image()?);

    let mut dim_enveloping = None;
    if k == 0 {
        let env = module.enveloping_generators()?;
        for x in &env {
            for g in &gens {
                if !x.commutes_with(g)? {
                    containment = false;
                }
            }
        }
        dim_enveloping = Some(algebra_closure(&env, module.dim())?.0);
    }

    let passed = containment
        && dim_commutant == dim_span_adk
        && dim_bicommutant == dim_hecke_image
        && dim_enveloping.map_or(true, |e| e == dim_commutant);
    Ok(DualityReport {
        m,
        n,
        d,
        k,
        mode,
        dim_module: module.dim(),
        dim_commutant,
        dim_span_adk,
        dim_bicommutant,
        dim_hecke_image,
        dim_enveloping,
        containment_checked: containment,
        passed,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::operators::{annihilation, creation};

    const Q: Mode = Mode::Quantum;
    const C: Mode = Mode::Classical;

    fn r(x: i64) -> RatFunc {
        RatFunc::from_int(x)
    }

    #[test]
    fn identity_matrix_of_identity_operator() {
        let module = InducedModule::new(SuperSig::new(1, 1).unwrap(), Q, 2, 3).unwrap();
        assert_eq!(module.to_matrix(|x| Ok(x.clone())).unwrap(), ExactMatrix::identity(12));
    }

    #[test]
    fn creation_annihilation_on_v() {
        let module = InducedModule::new(SuperSig::new(1, 1).unwrap(), Q, 1, 1).unwrap();
        let m = module.to_matrix(|x| creation(1, &annihilation(1, x)?)).unwrap();
        let expected = ExactMatrix::from_rows(vec![vec![r(1), r(0)], vec![r(0), r(0)]]).unwrap();
        assert_eq!(m, expected);
    }

    #[test]
    fn hecke_generator_matrix_from_three_case_rule() {
        // basis order e[1,1], e[1,2], e[2,1], e[2,2]
        let module = InducedModule::new(SuperSig::new(1, 1).unwrap(), Q, 2, 2).unwrap();
        let t = &module.hecke_generators().unwrap()[0];
        let q = RatFunc::q();
        let qi = RatFunc::q_pow(-1);
        let z = r(0);
        let expected = ExactMatrix::from_rows(vec![
            vec![q.clone(), z.clone(), z.clone(), z.clone()],
            vec![z.clone(), z.clone(), r(1), z.clone()],
            vec![z.clone(), r(1), &q - &qi, z.clone()],
            vec![z.clone(), z.clone(), z.clone(), -qi.clone()],
        ])
        .unwrap();
        assert_eq!(t, &expected);
    }

    #[test]
    fn commutant_examples() {
        let (dim, _) = commutant(&[ExactMatrix::identity(3)], 3).unwrap();
        assert_eq!(dim, 9);
        for mode in [Q, C] {
            let module = InducedModule::new(SuperSig::new(1, 1).unwrap(), mode, 2, 2).unwrap();
            let (dim, basis) = commutant(&module.hecke_generators().unwrap(), 4).unwrap();
            assert_eq!(dim, 8);
            let t = &module.hecke_generators().unwrap()[0];
            assert!(basis.iter().all(|x| x.commutes_with(t).unwrap()));
        }
    }

    #[test]
    fn closure_examples() {
        assert_eq!(algebra_closure(&[], 4).unwrap().0, 1);
        let module = InducedModule::new(SuperSig::new(1, 1).unwrap(), Q, 2, 2).unwrap();
        assert_eq!(algebra_closure(&module.hecke_generators().unwrap(), 4).unwrap().0, 2);
    }

    #[test]
    fn kernel_of_small_system() {
        // x0 + x1 = 0, x2 = 0 in four unknowns
        let mut e = Echelon::new(4);
        e.insert([(0, r(1)), (1, r(1))].into_iter().collect());
        e.insert([(2, r(5))].into_iter().collect());
        let ker = e.kernel();
        assert_eq!(ker.len(), 2);
        for x in ker {
            assert!((&x[0] + &x[1]).is_zero() && x[2].is_zero());
        }
        assert!(e.contains(&[r(2), r(2), r(1), r(0)]));
        assert!(!e.contains(&[r(0), r(0), r(0), r(1)]));
    }

    #[test]
    fn span_adk_at_degree_one() {
        let module = InducedModule::new(SuperSig::new(1, 1).unwrap(), Q, 1, 1).unwrap();
        let (dim, _) = span(module.span_adk_generators().unwrap());
        assert_eq!(dim, 4);
    }

    #[test]
    fn small_dualities() {
        for mode in [Q, C] {
            let report = verify_duality(1, 1, 2, 0, mode, DEFAULT_DIM_CAP).unwrap();
            assert!(report.passed, "{report:?}");
            assert_eq!(report.dim_commutant, 8);
            assert_eq!(report.dim_enveloping, Some(8));
        }
        let report = verify_duality(1, 1, 1, 0, Q, DEFAULT_DIM_CAP).unwrap();
        assert!(report.passed);
        assert_eq!((report.dim_commutant, report.dim_hecke_image), (4, 1));
    }

    #[test]
    fn resource_cap_and_parameters() {
        assert!(matches!(verify_duality(1, 1, 2, 1, Q, 8), Err(Error::ResourceCap { dim: 12, cap: 8 })));
        assert!(verify_duality(1, 1, 2, 3, Q, 64).is_err());
        assert!(verify_duality(1, 1, 2, 0, Mode::Specialized { num: 0, den: 1 }, 64).is_err());
        assert!(verify_duality(1, 1, 2, 0, Mode::Specialized { num: -1, den: 1 }, 64).is_err());
    }
}
