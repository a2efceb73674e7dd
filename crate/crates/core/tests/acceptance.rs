//! End-to-end acceptance suite: every criterion is checked exactly and
//! reported on one line; the process fails if any criterion fails.

use std::time::Instant;

use superschur::centralizer::{verify_duality, DualityReport, DEFAULT_DIM_CAP};
use superschur::identities::{self, Scope, Tally};
use superschur::superspace::SuperSig;
use superschur::{Mode, Result};

const Q: Mode = Mode::Quantum;
const C: Mode = Mode::Classical;
const BOTH: [Mode; 2] = [Q, C];

/// All `(m, n)` with `1 ≤ m + n ≤ top`.
fn signatures(top: usize) -> Vec<(usize, usize)> {
    (1..=top).flat_map(|s| (0..=s).map(move |m| (m, s - m))).collect()
}

fn scope(m: usize, n: usize, mode: Mode, degree: usize, rank: usize) -> Result<Scope> {
    Scope::new(m, n, mode, degree, rank)
}

fn verdict(tally: Tally) -> (bool, String) {
    (tally.holds(), tally.summary())
}

fn hecke_presentation() -> Result<(bool, String)> {
    let mut t = Tally::default();
    for mode in BOTH {
        t.absorb(identities::hecke_relations(4, mode)?);
        t.absorb(identities::hecke_triple_identity(4, mode)?);
    }
    Ok(verdict(t))
}

fn tensor_module() -> Result<(bool, String)> {
    let mut t = Tally::default();
    for (m, n) in [(1, 1), (2, 1), (1, 2)] {
        for mode in BOTH {
            t.absorb(identities::tensor_hecke_action(SuperSig::new(m, n)?, 3, mode)?);
        }
    }
    Ok(verdict(t))
}

fn annihilation_well_defined() -> Result<(bool, String)> {
    let mut t = Tally::default();
    for (m, n) in signatures(3) {
        for mode in BOTH {
            for rank in 1..=4 {
                t.absorb(identities::left_operators_commute_with_hecke(&scope(m, n, mode, rank.min(3), rank)?)?);
            }
        }
    }
    Ok(verdict(t))
}

fn number_operator() -> Result<(bool, String)> {
    let mut t = Tally::default();
    for (m, n) in signatures(3) {
        for d in 1..=3 {
            t.absorb(identities::number_operator(&scope(m, n, Q, d, d)?)?);
        }
    }
    Ok(verdict(t))
}

fn commutation_relations() -> Result<(bool, String)> {
    let mut t = Tally::default();
    for (m, n) in signatures(3) {
        for mode in BOTH {
            for rank in 2..=3 {
                t.absorb(identities::creation_annihilation_relations(&scope(m, n, mode, 2, rank)?)?);
            }
        }
    }
    Ok(verdict(t))
}

fn euler_operators() -> Result<(bool, String)> {
    let mut t = Tally::default();
    for (m, n) in signatures(2) {
        for mode in BOTH {
            t.absorb(identities::euler_operator(&scope(m, n, mode, 3, 3)?)?);
        }
    }
    Ok(verdict(t))
}

fn factorials() -> Result<(bool, String)> {
    let mut t = Tally::default();
    for mode in BOTH {
        for (m, n) in signatures(2) {
            t.absorb(identities::factorial_identities(&scope(m, n, mode, 3, 3)?)?);
        }
        for (m, n) in [(2, 1), (1, 2)] {
            t.absorb(identities::factorial_identities(&scope(m, n, mode, 2, 2)?)?);
        }
    }
    Ok(verdict(t))
}

fn quantum_group_presentation() -> Result<(bool, String)> {
    let mut t = Tally::default();
    for (m, n) in [(1, 1), (2, 1), (1, 2), (2, 2)] {
        t.absorb(identities::quantum_group_relations(&scope(m, n, Q, 2, 2)?)?);
    }
    Ok(verdict(t))
}

fn root_vectors() -> Result<(bool, String)> {
    let mut t = Tally::default();
    for (m, n) in signatures(3) {
        for d in 1..=3 {
            let s = scope(m, n, Q, d, d)?;
            t.absorb(identities::root_vector_identities(&s)?);
            t.absorb(identities::raising_lowering_recursion(&s)?);
        }
    }
    Ok(verdict(t))
}

fn describe(r: &DualityReport) -> String {
    format!(
        "({},{},{},{}) module {} commutant {} span {} bicommutant {} image {}",
        r.m, r.n, r.d, r.k, r.dim_module, r.dim_commutant, r.dim_span_adk, r.dim_bicommutant, r.dim_hecke_image
    )
}

fn dualities(mode: Mode, cases: &[(usize, usize, usize, usize)], cross_check: Option<Mode>) -> Result<(bool, String)> {
    let mut ok = true;
    let mut parts = Vec::new();
    for &(m, n, d, k) in cases {
        let r = verify_duality(m, n, d, k, mode, DEFAULT_DIM_CAP)?;
        ok &= r.passed && r.containment_checked;
        if let Some(special) = cross_check {
            let s = verify_duality(m, n, d, k, special, DEFAULT_DIM_CAP)?;
            let same = (s.dim_commutant, s.dim_span_adk, s.dim_bicommutant, s.dim_hecke_image)
                == (r.dim_commutant, r.dim_span_adk, r.dim_bicommutant, r.dim_hecke_image);
            ok &= s.passed && same;
        }
        parts.push(describe(&r));
    }
    Ok((ok, parts.join("; ")))
}

fn enveloping_closures() -> Result<(bool, String)> {
    let mut ok = true;
    let mut parts = Vec::new();
    for (mode, d) in [(C, 2), (C, 3), (Q, 2)] {
        let r = verify_duality(1, 1, d, 0, mode, DEFAULT_DIM_CAP)?;
        let closure = r.dim_enveloping.unwrap_or(0);
        ok &= r.containment_checked && closure == r.dim_commutant;
        parts.push(format!("{mode} d={d}: closure {closure} commutant {}", r.dim_commutant));
    }
    Ok((ok, parts.join("; ")))
}

fn main() {
    let special = Mode::Specialized { num: 5, den: 7 };
    type Criterion = (&'static str, Box<dyn Fn() -> Result<(bool, String)>>);
    let criteria: Vec<Criterion> = vec![
        ("Hecke presentation and triple identity", Box::new(hecke_presentation)),
        ("Hecke action on tensor space", Box::new(tensor_module)),
        ("creation/annihilation commute with right Hecke action", Box::new(annihilation_well_defined)),
        ("number operators", Box::new(number_operator)),
        ("creation/annihilation commutation relations", Box::new(commutation_relations)),
        ("Euler operators", Box::new(euler_operators)),
        ("factorial identities", Box::new(factorials)),
        ("quantum group presentation on tensor space", Box::new(quantum_group_presentation)),
        ("root vectors and raising/lowering recursion", Box::new(root_vectors)),
        ("classical double centralizer", Box::new(|| dualities(C, &[(1, 1, 2, 0), (1, 1, 2, 1), (1, 1, 3, 0)], None))),
        ("quantum double centralizer", Box::new(move || dualities(Q, &[(1, 1, 2, 0), (1, 1, 2, 1), (2, 1, 2, 0)], Some(special)))),
        ("enveloping algebra closures equal commutants", Box::new(enveloping_closures)),
    ];
    let mut failures = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let (ok, detail) = run().unwrap_or_else(|e| (false, format!("error: {e}")));
        if !ok {
            failures += 1;
        }
        println!(
            "{} criterion {:>2} {name}: {detail} [{:.2}s]",
            if ok { "PASS" } else { "FAIL" },
            i + 1,
            start.elapsed().as_secs_f64()
        );
    }
    println!("acceptance: {} of {} criteria passed", criteria.len() - failures, criteria.len());
    if failures > 0 {
        std::process::exit(1);
    }
}
