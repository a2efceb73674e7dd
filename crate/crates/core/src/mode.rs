//! Choice of the deformation parameter.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::qfield::{q_int, rational, RatFunc};

/// Which value the Hecke parameter `q` takes.
///
/// `Classical` is `q = 1`: Hecke algebras become group algebras and the
/// `q`-tensor action becomes the signed permutation action.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Classical,
    Quantum,
    /// Quantum with `q` evaluated at `num / den`.
    Specialized { num: i64, den: i64 },
}

impl Mode {
    pub fn is_classical(self) -> bool {
        matches!(self, Mode::Classical)
    }

    /// `q^e` in this mode.
    pub fn q_pow(self, e: i64) -> RatFunc {
        match self {
            Mode::Classical => RatFunc::one(),
            Mode::Quantum => RatFunc::q_pow(e),
            Mode::Specialized { num, den } => RatFunc::from_rational(rational(num, den)).pow(e),
        }
    }

    pub fn q(self) -> RatFunc {
        self.q_pow(1)
    }

    /// `q - q^{-1}`.
    pub fn q_diff(self) -> RatFunc {
        &self.q_pow(1) - &self.q_pow(-1)
    }

    /// The quantum integer `[k] = (q^k - q^{-k}) / (q - q^{-1})` for any integer
    /// `k`; it equals `k` in classical mode.
    pub fn q_int(self, k: i64) -> RatFunc {
        match self {
            Mode::Classical => RatFunc::from_int(k),
            Mode::Quantum | Mode::Specialized { .. } => {
                let magnitude = self.coerce(&q_int(k.unsigned_abs() as u32));
                if k < 0 {
                    -magnitude
                } else {
                    magnitude
                }
            }
        }
    }

    /// `[k]!` in this mode.
    pub fn q_factorial(self, k: u32) -> RatFunc {
        (1..=k as i64).fold(RatFunc::one(), |acc, j| &acc * &self.q_int(j))
    }

    /// Specializes a generic coefficient into this mode.
    pub fn coerce(self, f: &RatFunc) -> RatFunc {
        match self {
            Mode::Quantum => f.clone(),
            Mode::Classical => RatFunc::from_rational(f.specialize(&rational(1, 1)).expect("no pole at q = 1")),
            Mode::Specialized { num, den } => {
                RatFunc::from_rational(f.specialize(&rational(num, den)).expect("pole at specialization"))
            }
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Mode::Classical => write!(f, "classical"),
            Mode::Quantum => write!(f, "quantum"),
            Mode::Specialized { num, den } => write!(f, "quantum@{num}/{den}"),
        }
    }
}
