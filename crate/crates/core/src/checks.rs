//! Registry of named verification checks and a runner producing ordered outcomes.

use std::cell::OnceCell;

use serde::{Deserialize, Serialize};

use crate::centralizer::{verify_duality, DualityReport, DEFAULT_DIM_CAP};
use crate::error::{Error, Result};
use crate::extension::ExtElement;
use crate::identities::{self, Scope, Tally};
use crate::mode::Mode;
use crate::superspace::SuperSig;

/// Parameters of one verification run.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RunParams {
    pub mode: Mode,
    pub m: usize,
    pub n: usize,
    pub d: usize,
    pub k: usize,
    pub dim_cap: usize,
}

impl RunParams {
    pub fn new(mode: Mode, m: usize, n: usize, d: usize, k: usize) -> Self {
        RunParams { mode, m, n, d, k, dim_cap: DEFAULT_DIM_CAP }
    }

    /// Rejects parameters outside the supported range.
    pub fn validate(&self) -> Result<()> {
        SuperSig::new(self.m, self.n)?;
        if self.d == 0 || self.k > self.d {
            return Err(Error::InvalidParams(format!("need d ≥ 1 and 0 ≤ k ≤ d, got d = {}, k = {}", self.d, self.k)));
        }
        if let Mode::Specialized { num, den } = self.mode {
            if num == 0 || den == 0 || num.abs() == den.abs() {
                return Err(Error::InvalidParams(format!("q = {num}/{den} must be a rational other than 0 and ±1")));
            }
            for j in 1..=(self.d + self.k) as i64 {
                if self.mode.q_int(j).is_zero() {
                    return Err(Error::InvalidParams(format!("[{j}] vanishes at q = {num}/{den}")));
                }
            }
        }
        Ok(())
    }

    fn rank(&self) -> usize {
        self.d + self.k
    }

    fn scope(&self) -> Result<Scope> {
        Scope::new(self.m, self.n, self.mode, self.d, self.rank())
    }

    fn module_dim(&self) -> Result<usize> {
        Ok(ExtElement::dimension(SuperSig::new(self.m, self.n)?, self.d, self.rank()))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

impl Status {
    pub fn label(self) -> &'static str {
        match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Skipped => "SKIP",
        }
    }
}

/// Result of one named check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckOutcome {
    pub name: String,
    pub status: Status,
    pub detail: String,
}

/// Shared state of a run: the parameters and the (lazily computed) duality report.
pub struct Context {
    pub params: RunParams,
    duality: OnceCell<std::result::Result<DualityReport, Error>>,
}

impl Context {
    pub fn new(params: RunParams) -> Self {
        Context { params, duality: OnceCell::new() }
    }

    /// The double centralizer verification, computed at most once per run.
    pub fn duality(&self) -> &std::result::Result<DualityReport, Error> {
        self.duality.get_or_init(|| {
            let p = &self.params;
            verify_duality(p.m, p.n, p.d, p.k, p.mode, p.dim_cap)
        })
    }

    /// The duality report if it was requested by some check.
    pub fn duality_if_computed(&self) -> Option<&DualityReport> {
        self.duality.get().and_then(|r| r.as_ref().ok())
    }
}

type Runner = fn(&Context) -> Result<Verdict>;

/// What a check returns before it is named.
pub enum Verdict {
    Tally(Tally),
    Decided { passed: bool, detail: String },
    Skipped(String),
}

/// A registered check.
pub struct Check {
    pub name: &'static str,
    pub description: &'static str,
    /// Whether the check builds operators on the induced module, and so is
    /// subject to the dimension cap.
    pub uses_module: bool,
    run: Runner,
}

impl Check {
    pub fn run(&self, ctx: &Context) -> CheckOutcome {
        let verdict = match ctx.params.module_dim() {
            Ok(dim) if self.uses_module && dim > ctx.params.dim_cap => {
                Ok(Verdict::Skipped(format!("module dimension {dim} exceeds the cap {}", ctx.params.dim_cap)))
            }
            _ => (self.run)(ctx),
        };
        let (status, detail) = match verdict {
            Ok(Verdict::Tally(t)) => (if t.holds() { Status::Pass } else { Status::Fail }, t.summary()),
            Ok(Verdict::Decided { passed, detail }) => (if passed { Status::Pass } else { Status::Fail }, detail),
            Ok(Verdict::Skipped(reason)) => (Status::Skipped, reason),
            Err(Error::ResourceCap { dim, cap }) => (Status::Skipped, format!("module dimension {dim} exceeds the cap {cap}")),
            Err(e) => (Status::Fail, format!("error: {e}")),
        };
        CheckOutcome { name: self.name.to_string(), status, detail }
    }
}

fn quantum_only(ctx: &Context, f: impl FnOnce(&Scope) -> Result<Tally>) -> Result<Verdict> {
    if ctx.params.mode.is_classical() {
        return Ok(Verdict::Skipped("stated for generic q only".into()));
    }
    Ok(Verdict::Tally(f(&ctx.params.scope()?)?))
}

fn on_scope(ctx: &Context, f: impl FnOnce(&Scope) -> Result<Tally>) -> Result<Verdict> {
    Ok(Verdict::Tally(f(&ctx.params.scope()?)?))
}

fn duality_verdict(ctx: &Context) -> Result<Verdict> {
    match ctx.duality() {
        Ok(r) => Ok(Verdict::Decided {
            passed: r.passed,
            detail: format!(
                "module {}, commutant {}, span {}, bicommutant {}, Hecke image {}, containment {}",
                r.dim_module,
                r.dim_commutant,
                r.dim_span_adk,
                r.dim_bicommutant,
                r.dim_hecke_image,
                if r.containment_checked { "holds" } else { "fails" }
            ),
        }),
        Err(e) => Err(e.clone()),
    }
}

fn closure_verdict(ctx: &Context) -> Result<Verdict> {
    if ctx.params.k != 0 {
        return Ok(Verdict::Skipped("compares with the enveloping algebra only for k = 0".into()));
    }
    match ctx.duality() {
        Ok(r) => {
            let env = r.dim_enveloping.unwrap_or(0);
            Ok(Verdict::Decided {
                passed: env == r.dim_commutant && r.containment_checked,
                detail: format!("generated algebra {env}, commutant {}", r.dim_commutant),
            })
        }
        Err(e) => Err(e.clone()),
    }
}

/// All checks, sorted by name.
pub const CHECKS: &[Check] = &[
    Check {
        name: "cartan-commutation",
        description: "K_j L(e_i) = q_j^{δ_ij} L(e_i) K_j, K_j L(e_i^*) = q_j^{-δ_ij} L(e_i^*) K_j, K_j L(T_k) = L(T_k) K_j",
        uses_module: true,
        run: |ctx| quantum_only(ctx, identities::cartan_commutation),
    },
    Check {
        name: "chains-in-enveloping-image",
        description: "L(e_{i_h})⋯L(e_{i_1}) L(e_{i_1}^*)⋯L(e_{i_h}^*) lies in the image of the enveloping algebra",
        uses_module: true,
        run: |ctx| on_scope(ctx, identities::chains_in_enveloping_image),
    },
    Check {
        name: "creation-annihilation-relations",
        description: "commutation relations among L(e_i), L(e_j^*) and left Hecke multiplications",
        uses_module: true,
        run: |ctx| on_scope(ctx, identities::creation_annihilation_relations),
    },
    Check {
        name: "double-centralizer",
        description: "span of creation/Hecke/annihilation chains = commutant of H_{d+k}; its commutant = image of H_{d+k}",
        uses_module: true,
        run: duality_verdict,
    },
    Check {
        name: "enveloping-closure",
        description: "for k = 0, the algebra generated by the (quantum) enveloping algebra action equals the commutant of H_d",
        uses_module: true,
        run: closure_verdict,
    },
    Check {
        name: "enveloping-hecke-commute",
        description: "the (quantum) enveloping algebra action commutes with the right Hecke action",
        uses_module: true,
        run: |ctx| on_scope(ctx, identities::enveloping_commutes_with_hecke),
    },
    Check {
        name: "euler-operator",
        description: "the Euler operator A_d acts as the identity on degree d; classically Σ_i L(e_i) L(e_i^*) = d",
        uses_module: true,
        run: |ctx| on_scope(ctx, identities::euler_operator),
    },
    Check {
        name: "factorial-identities",
        description: "creation/annihilation chains act by multiplicity factorials and by [K_i]^h_!",
        uses_module: true,
        run: |ctx| on_scope(ctx, identities::factorial_identities),
    },
    Check {
        name: "hecke-relations",
        description: "quadratic, braid and distant commutation relations in H_{d+k}",
        uses_module: false,
        run: |ctx| Ok(Verdict::Tally(identities::hecke_relations(ctx.params.rank(), ctx.params.mode)?)),
    },
    Check {
        name: "hecke-triple-identity",
        description: "T_1^{γ(i,j)} T_2^{γ(i,k)} T_1^{γ(j,k)} = T_2^{γ(j,k)} T_1^{γ(i,k)} T_2^{γ(i,j)} in H_3",
        uses_module: false,
        run: |ctx| Ok(Verdict::Tally(identities::hecke_triple_identity(ctx.params.m + ctx.params.n, ctx.params.mode)?)),
    },
    Check {
        name: "left-operators-hecke-commute",
        description: "L(e_j), L(e_j^*) and L(T_s) commute with the right Hecke action",
        uses_module: true,
        run: |ctx| on_scope(ctx, identities::left_operators_commute_with_hecke),
    },
    Check {
        name: "number-operator",
        description: "L(e_j) L(e_j^*) = (K_j - K_j^{-1})/(q_j - q_j^{-1}); classically L(e_i) L(e_j^*) = E_ij",
        uses_module: true,
        run: |ctx| on_scope(ctx, identities::number_operator),
    },
    Check {
        name: "quantum-group-relations",
        description: "the defining relations of U_q(gl(m|n)) hold on V^{⊗e}, e ≤ d",
        uses_module: true,
        run: |ctx| quantum_only(ctx, identities::quantum_group_relations),
    },
    Check {
        name: "raising-lowering-recursion",
        description: "L(e_i) L(e_{i+1}^*) and L(e_{i+1}) L(e_i^*) split along the first tensor factor",
        uses_module: true,
        run: |ctx| on_scope(ctx, identities::raising_lowering_recursion),
    },
    Check {
        name: "root-vector-identities",
        description: "E_ij K_i^{-1} = L(e_i) L(e_j^*) and K_i E_ji = L(e_j) L(e_i^*) for i < j",
        uses_module: true,
        run: |ctx| quantum_only(ctx, identities::root_vector_identities),
    },
    Check {
        name: "tensor-hecke-action",
        description: "the right action of H_d on V^{⊗d} satisfies the Hecke relations",
        uses_module: true,
        run: |ctx| {
            let p = &ctx.params;
            Ok(Verdict::Tally(identities::tensor_hecke_action(SuperSig::new(p.m, p.n)?, p.d, p.mode)?))
        },
    },
    Check {
        name: "triple-operator-identity",
        description: "L(e_i) L(e_j) L(e_k^*) rewritten through L(e_k^*) moved right",
        uses_module: true,
        run: |ctx| on_scope(ctx, identities::triple_operator_identity),
    },
];

pub fn find(name: &str) -> Option<&'static Check> {
    CHECKS.iter().find(|c| c.name == name)
}

/// Runs the named checks (all when `names` is empty), ordered by name.
pub fn run_checks(ctx: &Context, names: &[String]) -> Result<Vec<CheckOutcome>> {
    let mut selected: Vec<&Check> = if names.is_empty() {
        CHECKS.iter().collect()
    } else {
        names
            .iter()
            .map(|n| find(n).ok_or_else(|| Error::UnknownCheck(n.clone())))
            .collect::<Result<_>>()?
    };
    selected.sort_by_key(|c| c.name);
    selected.dedup_by_key(|c| c.name);
    Ok(selected.iter().map(|c| c.run(ctx)).collect())
}
