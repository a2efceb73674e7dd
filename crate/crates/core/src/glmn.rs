//! Actions of `U(gl(m|n))` and `U_q(gl(m|n))` on `V^{⊗d}`.
//!
//! The quantum action comes from the iterated coproduct
//! `Δ(K_i) = K_i ⊗ K_i`, `Δ(E_i) = 1 ⊗ E_i + E_i ⊗ K_i K_{i+1}^{-1}`,
//! `Δ(F_i) = F_i ⊗ 1 + K_{i+1} K_i^{-1} ⊗ F_i`, with the super sign rule
//! `(a ⊗ b)(v ⊗ w) = (-1)^{|b||v|} av ⊗ bw`. Only `E_m` and `F_m` are odd.

use std::fmt;

use crate::error::{Error, Result};
use crate::mode::Mode;
use crate::qfield::RatFunc;
use crate::superspace::{SuperSig, SuperTensor, TensorIndex};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum QGenerator {
    K(usize),
    KInv(usize),
    E(usize),
    F(usize),
    /// The root vector `E_{ij}`, `i ≠ j`; `E_{i,i+1} = E_i`, `E_{i+1,i} = F_i`.
    Root(usize, usize),
}

impl QGenerator {
    pub fn validate(self, sig: SuperSig) -> Result<()> {
        let dim = sig.dim();
        let in_range = |i: usize, top: usize| i >= 1 && i <= top;
        let ok = match self {
            QGenerator::K(i) | QGenerator::KInv(i) => in_range(i, dim),
            QGenerator::E(i) | QGenerator::F(i) => in_range(i, dim.saturating_sub(1)),
            QGenerator::Root(i, j) => i != j && in_range(i, dim) && in_range(j, dim),
        };
        if ok {
            Ok(())
        } else {
            Err(Error::InvalidParams(format!("generator {self} undefined for gl({}|{})", sig.m, sig.n)))
        }
    }

    /// Parity as an element of the superalgebra.
    pub fn parity(self, sig: SuperSig) -> u8 {
        match self {
            QGenerator::K(_) | QGenerator::KInv(_) => 0,
            QGenerator::E(i) | QGenerator::F(i) => u8::from(i == sig.m),
            QGenerator::Root(i, j) => (sig.parity_of(i) + sig.parity_of(j)) % 2,
        }
    }
}

impl fmt::Display for QGenerator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            QGenerator::K(i) => write!(f, "K{i}"),
            QGenerator::KInv(i) => write!(f, "K{i}^-1"),
            QGenerator::E(i) => write!(f, "E{i}"),
            QGenerator::F(i) => write!(f, "F{i}"),
            QGenerator::Root(i, j) => write!(f, "E({i},{j})"),
        }
    }
}

/// `q_i^{e · m_i(I)}`, the eigenvalue of `K_i^e` on `e_I`.
pub fn k_eigenvalue(sig: SuperSig, mode: Mode, i: usize, e: i64, index: &TensorIndex) -> RatFunc {
    let count = index.multiplicity(i) as i64;
    mode.q_pow(sig.q_exponent(i) * e * count)
}

/// The natural representation on `V`.
pub fn act_on_v(sig: SuperSig, mode: Mode, g: QGenerator, j: usize) -> Result<SuperTensor> {
    g.validate(sig)?;
    sig.parity(j)?;
    let e = |k: usize| SuperTensor::from_written(sig, &[k]);
    Ok(match g {
        QGenerator::K(i) => e(j).scale(&k_eigenvalue(sig, mode, i, 1, &TensorIndex::new(vec![j]))),
        QGenerator::KInv(i) => e(j).scale(&k_eigenvalue(sig, mode, i, -1, &TensorIndex::new(vec![j]))),
        QGenerator::E(i) if j == i + 1 => e(i),
        QGenerator::F(i) if j == i => e(i + 1),
        QGenerator::E(_) | QGenerator::F(_) => SuperTensor::zero(sig, 1),
        QGenerator::Root(..) => act_rho_d(g, &e(j), mode)?,
    })
}

/// `ρ_d(g)` on a tensor of any degree.
pub fn act_rho_d(g: QGenerator, t: &SuperTensor, mode: Mode) -> Result<SuperTensor> {
    let sig = t.sig();
    g.validate(sig)?;
    let d = t.degree();
    let odd = g.parity(sig) == 1;
    match g {
        QGenerator::K(i) | QGenerator::KInv(i) => {
            let e = if matches!(g, QGenerator::K(_)) { 1 } else { -1 };
            Ok(t.map_basis(d, |idx| SuperTensor::basis(sig, idx.clone()).scale(&k_eigenvalue(sig, mode, i, e, idx))))
        }
        QGenerator::E(i) => Ok(t.map_basis(d, |idx| {
            // E_i in slot p, identity above, K_i K_{i+1}^{-1} below
            let mut out = SuperTensor::zero(sig, d);
            for p in 1..=d {
                if idx.at(p) != i + 1 {
                    continue;
                }
                let below = TensorIndex::new(idx.written()[d - p + 1..].to_vec());
                let mut coeff = &k_eigenvalue(sig, mode, i, 1, &below) * &k_eigenvalue(sig, mode, i + 1, -1, &below);
                if odd && idx.parity_above(sig, p) == 1 {
                    coeff = -coeff;
                }
                out.add_term(replace(idx, p, i), &coeff);
            }
            out
        })),
        QGenerator::F(i) => Ok(t.map_basis(d, |idx| {
            // F_i in slot p, K_{i+1} K_i^{-1} above, identity below
            let mut out = SuperTensor::zero(sig, d);
            for p in 1..=d {
                if idx.at(p) != i {
                    continue;
                }
                let above = TensorIndex::new(idx.written()[..d - p].to_vec());
                let mut coeff = &k_eigenvalue(sig, mode, i + 1, 1, &above) * &k_eigenvalue(sig, mode, i, -1, &above);
                if odd && idx.parity_above(sig, p) == 1 {
                    coeff = -coeff;
                }
                out.add_term(replace(idx, p, i + 1), &coeff);
            }
            out
        })),
        QGenerator::Root(i, j) => {
            let k = if i < j { j - 1 } else { i - 1 };
            act_root_via(i, j, k, t, mode)
        }
    }
}

/// `E_{ij}` through the intermediate index `k` strictly between `i` and `j`:
/// `E_{ij} = E_{ik} E_{kj} - q_k E_{kj} E_{ik}` for `i < j` and
/// `E_{ij} = E_{ik} E_{kj} - q_k^{-1} E_{kj} E_{ik}` for `i > j`.
pub fn act_root_via(i: usize, j: usize, k: usize, t: &SuperTensor, mode: Mode) -> Result<SuperTensor> {
    let sig = t.sig();
    QGenerator::Root(i, j).validate(sig)?;
    if i + 1 == j {
        return act_rho_d(QGenerator::E(i), t, mode);
    }
    if j + 1 == i {
        return act_rho_d(QGenerator::F(j), t, mode);
    }
    if !(i.min(j) < k && k < i.max(j)) {
        return Err(Error::InvalidParams(format!("{k} does not lie strictly between {i} and {j}")));
    }
    let ik = QGenerator::Root(i, k);
    let kj = QGenerator::Root(k, j);
    let first = act_rho_d(ik, &act_rho_d(kj, t, mode)?, mode)?;
    let second = act_rho_d(kj, &act_rho_d(ik, t, mode)?, mode)?;
    let exponent = if i < j { 1 } else { -1 };
    Ok(first.sub(&second.scale(&sig.q_index(k, mode).pow(exponent))))
}

/// The classical matrix unit `E_{ij}` acting through `ρ_d`.
pub fn act_rho_d_classical(i: usize, j: usize, t: &SuperTensor) -> Result<SuperTensor> {
    let sig = t.sig();
    sig.parity(i)?;
    sig.parity(j)?;
    let d = t.degree();
    let odd = (sig.parity_of(i) + sig.parity_of(j)) % 2 == 1;
    Ok(t.map_basis(d, |idx| {
        let mut out = SuperTensor::zero(sig, d);
        for p in 1..=d {
            if idx.at(p) == j {
                let sign = if odd && idx.parity_above(sig, p) == 1 { -1 } else { 1 };
                out.add_term(replace(idx, p, i), &RatFunc::from_int(sign));
            }
        }
        out
    }))
}

fn replace(idx: &TensorIndex, p: usize, value: usize) -> TensorIndex {
    let mut written = idx.written().to_vec();
    let d = written.len();
    written[d - p] = value;
    TensorIndex::new(written)
}

/// A word of generators, written as an operator product (rightmost acts first).
pub type Word = Vec<QGenerator>;

/// A linear combination of words.
pub type Expr = Vec<(RatFunc, Word)>;

pub fn eval_word(word: &[QGenerator], t: &SuperTensor, mode: Mode) -> Result<SuperTensor> {
    word.iter().rev().try_fold(t.clone(), |acc, &g| act_rho_d(g, &acc, mode))
}

pub fn eval_expr(expr: &Expr, t: &SuperTensor, mode: Mode) -> Result<SuperTensor> {
    let mut out = SuperTensor::zero(t.sig(), t.degree());
    for (c, word) in expr {
        out = out.add(&eval_word(word, t, mode)?.scale(c));
    }
    Ok(out)
}

fn expr_mul(a: &Expr, b: &Expr) -> Expr {
    let mut out = Vec::new();
    for (ca, wa) in a {
        for (cb, wb) in b {
            let mut w = wa.clone();
            w.extend_from_slice(wb);
            out.push((ca * cb, w));
        }
    }
    out
}

fn word(gs: &[QGenerator]) -> Expr {
    vec![(RatFunc::one(), gs.to_vec())]
}

/// One instance of a defining relation, `lhs = rhs`.
#[derive(Clone, Debug)]
pub struct Relation {
    pub id: &'static str,
    pub instance: String,
    pub lhs: Expr,
    pub rhs: Expr,
}

/// Stable identifiers of the relation families of the presentation.
pub const RELATION_IDS: &[&str] = &[
    "k-commute",
    "k-inverse",
    "k-e",
    "k-f",
    "e-f",
    "e-commute",
    "f-commute",
    "serre-e",
    "serre-f",
    "odd-square-e",
    "odd-square-f",
    "quartic-e",
    "quartic-f",
];

/// Every instance of the defining relations of `U_q(gl(m|n))`.
pub fn relations(sig: SuperSig, mode: Mode) -> Vec<Relation> {
    use QGenerator::{E, F, K, KInv};
    let dim = sig.dim();
    let m = sig.m;
    let q = |i: usize, e: i64| sig.q_index(i, mode).pow(e);
    let mut out = Vec::new();
    let mut push = |id: &'static str, instance: String, lhs: Expr, rhs: Expr| {
        out.push(Relation { id, instance, lhs, rhs });
    };
    let zero: Expr = Vec::new();
    let one: Expr = vec![(RatFunc::one(), Vec::new())];
    let simple: Vec<usize> = (1..dim).collect();
    for i in 1..=dim {
        for j in 1..=dim {
            push("k-commute", format!("K{i} K{j}"), word(&[K(i), K(j)]), word(&[K(j), K(i)]));
        }
        push("k-inverse", format!("K{i} K{i}^-1"), word(&[K(i), KInv(i)]), one.clone());
        push("k-inverse", format!("K{i}^-1 K{i}"), word(&[KInv(i), K(i)]), one.clone());
        for &j in &simple {
            let delta = |a: usize, b: usize| i64::from(a == b);
            let ke = delta(i, j) - delta(i, j + 1);
            push("k-e", format!("K{i} E{j}"), word(&[K(i), E(j)]), vec![(q(i, ke), vec![E(j), K(i)])]);
            push("k-f", format!("K{i} F{j}"), word(&[K(i), F(j)]), vec![(q(i, -ke), vec![F(j), K(i)])]);
        }
    }
    for &i in &simple {
        for &j in &simple {
            let sign = if i == m && j == m { -1 } else { 1 };
            let lhs = vec![(RatFunc::one(), vec![E(i), F(j)]), (RatFunc::from_int(-sign), vec![F(j), E(i)])];
            let rhs = if i == j {
                let c = (&q(i, 1) - &q(i, -1)).inv().expect("q_i - q_i^{-1} is invertible for generic q");
                vec![(c.clone(), vec![K(i), KInv(i + 1)]), (-c, vec![KInv(i), K(i + 1)])]
            } else {
                zero.clone()
            };
            push("e-f", format!("E{i} F{j}"), lhs, rhs);
            if i.abs_diff(j) > 1 {
                push("e-commute", format!("E{i} E{j}"), word(&[E(i), E(j)]), word(&[E(j), E(i)]));
                push("f-commute", format!("F{i} F{j}"), word(&[F(i), F(j)]), word(&[F(j), F(i)]));
            }
            if i != m && i.abs_diff(j) == 1 {
                let c = -(&q(i, 1) + &q(i, -1));
                for (id, g) in [("serre-e", E as fn(usize) -> QGenerator), ("serre-f", F as fn(usize) -> QGenerator)] {
                    let lhs = vec![
                        (RatFunc::one(), vec![g(i), g(i), g(j)]),
                        (c.clone(), vec![g(i), g(j), g(i)]),
                        (RatFunc::one(), vec![g(j), g(i), g(i)]),
                    ];
                    push(id, format!("{} {}", g(i), g(j)), lhs, zero.clone());
                }
            }
        }
    }
    if m >= 1 && m < dim {
        push("odd-square-e", format!("E{m}^2"), word(&[E(m), E(m)]), zero.clone());
        push("odd-square-f", format!("F{m}^2"), word(&[F(m), F(m)]), zero.clone());
    }
    if m >= 2 && m + 2 <= dim {
        let qq = |e: i64| mode.q_pow(e);
        for (id, g) in [("quartic-e", E as fn(usize) -> QGenerator), ("quartic-f", F as fn(usize) -> QGenerator)] {
            let (a, b, c) = (g(m - 1), g(m), g(m + 1));
            let long: Expr = vec![
                (RatFunc::one(), vec![a, b, c]),
                (-qq(-1), vec![a, c, b]),
                (-qq(1), vec![b, c, a]),
                (RatFunc::one(), vec![c, b, a]),
            ];
            let mut lhs = expr_mul(&word(&[b]), &long);
            lhs.extend(expr_mul(&long, &word(&[b])));
            push(id, format!("{b} with the long root vector"), lhs, zero.clone());
        }
    }
    out
}

/// Whether every instance of the relation family `id` holds on `V^{⊗d}`.
pub fn check_relation(id: &str, sig: SuperSig, d: usize, mode: Mode) -> Result<bool> {
    if !RELATION_IDS.contains(&id) {
        return Err(Error::UnknownRelation(id.to_string()));
    }
    if mode.is_classical() {
        return Err(Error::InvalidParams("quantum group relations need q ≠ 1".into()));
    }
    for rel in relations(sig, mode).into_iter().filter(|r| r.id == id) {
        if !relation_holds(&rel, sig, d, mode)? {
            return Ok(false);
        }
    }
    Ok(true)
}

pub fn relation_holds(rel: &Relation, sig: SuperSig, d: usize, mode: Mode) -> Result<bool> {
    for idx in TensorIndex::all(sig.dim(), d) {
        let t = SuperTensor::basis(sig, idx);
        if eval_expr(&rel.lhs, &t, mode)? != eval_expr(&rel.rhs, &t, mode)? {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: Mode = Mode::Quantum;

    fn sig(m: usize, n: usize) -> SuperSig {
        SuperSig::new(m, n).unwrap()
    }

    #[test]
    fn natural_representation() {
        let s = sig(1, 1);
        let e = |k: usize| SuperTensor::from_written(s, &[k]);
        assert_eq!(act_on_v(s, Q, QGenerator::K(1), 1).unwrap(), e(1).scale(&RatFunc::q()));
        assert_eq!(act_on_v(s, Q, QGenerator::K(2), 2).unwrap(), e(2).scale(&RatFunc::q_pow(-1)));
        assert_eq!(act_on_v(s, Q, QGenerator::E(1), 2).unwrap(), e(1));
        assert!(act_on_v(s, Q, QGenerator::F(1), 2).unwrap().is_zero());
        assert_eq!(act_on_v(s, Q, QGenerator::F(1), 1).unwrap(), e(2));
        assert!(act_on_v(s, Q, QGenerator::E(2), 1).is_err());
    }

    #[test]
    fn k_eigenvalues_on_tensors() {
        let s = sig(2, 1);
        for idx in TensorIndex::all(3, 3) {
            let t = SuperTensor::basis(s, idx.clone());
            for j in 1..=3 {
                let expected = s.q_index(j, Q).pow(idx.multiplicity(j) as i64);
                assert_eq!(act_rho_d(QGenerator::K(j), &t, Q).unwrap(), t.scale(&expected));
            }
        }
    }

    #[test]
    fn coproduct_by_hand() {
        // Δ(E_1) = 1 ⊗ E_1 + E_1 ⊗ K_1 K_2^{-1} on e_2 ⊗ e_2, m = n = 1:
        // (1 ⊗ E_1)(e_2 ⊗ e_2) = (-1)^{|E_1||e_2|} e_2 ⊗ e_1 = -e_2 ⊗ e_1
        // (E_1 ⊗ K_1K_2^{-1})(e_2 ⊗ e_2) = e_1 ⊗ q_2^{-1} e_2 = q e_1 ⊗ e_2
        let s = sig(1, 1);
        let t = SuperTensor::from_written(s, &[2, 2]);
        let expected = SuperTensor::from_written(s, &[2, 1])
            .scale(&RatFunc::from_int(-1))
            .add(&SuperTensor::from_written(s, &[1, 2]).scale(&RatFunc::q()));
        assert_eq!(act_rho_d(QGenerator::E(1), &t, Q).unwrap(), expected);
    }

    #[test]
    fn classical_matrix_units() {
        let s = sig(1, 1);
        let t = SuperTensor::from_written(s, &[1, 1]);
        assert_eq!(act_rho_d_classical(1, 1, &t).unwrap(), t.scale(&RatFunc::from_int(2)));
        for d in 1..=3 {
            for idx in TensorIndex::all(2, d) {
                let t = SuperTensor::basis(s, idx);
                let sum = (1..=2).fold(SuperTensor::zero(s, d), |acc, i| acc.add(&act_rho_d_classical(i, i, &t).unwrap()));
                assert_eq!(sum, t.scale(&RatFunc::from_int(d as i64)));
            }
        }
    }

    #[test]
    fn presentation_examples() {
        assert!(check_relation("k-inverse", sig(1, 1), 2, Q).unwrap());
        assert!(check_relation("e-f", sig(1, 1), 2, Q).unwrap());
        assert!(check_relation("odd-square-e", sig(1, 1), 2, Q).unwrap());
        assert!(check_relation("no-such-relation", sig(1, 1), 2, Q).is_err());
    }

    #[test]
    fn presentation_holds() {
        for (m, n) in [(1, 1), (2, 1), (1, 2)] {
            for d in 1..=2 {
                for id in RELATION_IDS {
                    assert!(check_relation(id, sig(m, n), d, Q).unwrap(), "{id} for ({m}|{n}) d={d}");
                }
            }
        }
    }

    #[test]
    fn quartic_relations_where_defined() {
        let rels = relations(sig(2, 2), Q);
        let quartic: Vec<&Relation> = rels.iter().filter(|r| r.id.starts_with("quartic")).collect();
        assert_eq!(quartic.len(), 2);
        for r in quartic {
            assert!(relation_holds(r, sig(2, 2), 2, Q).unwrap());
        }
        assert!(relations(sig(2, 1), Q).iter().all(|r| !r.id.starts_with("quartic")));
    }

    #[test]
    fn root_vectors_independent_of_intermediate_index() {
        let s = sig(2, 2);
        for idx in TensorIndex::all(4, 2) {
            let t = SuperTensor::basis(s, idx);
            for (i, j) in [(1, 4), (4, 1)] {
                let a = act_root_via(i, j, 2, &t, Q).unwrap();
                let b = act_root_via(i, j, 3, &t, Q).unwrap();
                assert_eq!(a, b);
            }
        }
    }
}
