//! Scenario files: a TOML description of one instance plus sampling controls.

use std::fmt;
use std::path::Path;
use std::str::FromStr;

use quadstruct::clifford::EKind;
use quadstruct::scalars::{is_sum_of_two_squares, rat};
use quadstruct::{Field, PrimeField, Rationals};
use serde::{Deserialize, Serialize};

use crate::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Kind {
    E6,
    E7,
    E8,
    PqQuadratic,
    PqQuaternion,
    MatrixSplit,
    CdBiquaternion,
}

impl Kind {
    pub fn name(self) -> &'static str {
        match self {
            Kind::E6 => "e6",
            Kind::E7 => "e7",
            Kind::E8 => "e8",
            Kind::PqQuadratic => "pq_quadratic",
            Kind::PqQuaternion => "pq_quaternion",
            Kind::MatrixSplit => "matrix_split",
            Kind::CdBiquaternion => "cd_biquaternion",
        }
    }

    pub fn e_kind(self) -> Option<EKind> {
        match self {
            Kind::E6 => Some(EKind::E6),
            Kind::E7 => Some(EKind::E7),
            Kind::E8 => Some(EKind::E8),
            _ => None,
        }
    }

    /// Parameter keys the kind accepts, required ones first.
    fn keys(self) -> (&'static [&'static str], &'static [&'static str]) {
        match self {
            Kind::E6 | Kind::E8 => (&["gamma_sq", "s"], &[]),
            Kind::E7 => (&["gamma_sq", "s"], &["check_norm"]),
            Kind::PqQuadratic => (&["d", "coeffs"], &[]),
            Kind::PqQuaternion => (&["a", "b", "coeffs"], &[]),
            Kind::MatrixSplit => (&["eta"], &[]),
            Kind::CdBiquaternion => (&["q1", "q2", "mu"], &[]),
        }
    }
}

/// Scalar backend: `rational` or `fp:P`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub enum Backend {
    #[default]
    Rational,
    Prime(u64),
}

impl FromStr for Backend {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let s = s.trim();
        if s == "rational" {
            return Ok(Backend::Rational);
        }
        let p = s
            .strip_prefix("fp:")
            .ok_or_else(|| format!("unknown field backend {s:?}; expected \"rational\" or \"fp:P\""))?;
        let p: u64 = p.parse().map_err(|_| format!("bad prime in {s:?}"))?;
        PrimeField::new(p).map_err(|e| e.to_string())?;
        Ok(Backend::Prime(p))
    }
}

impl TryFrom<String> for Backend {
    type Error = String;

    fn try_from(s: String) -> Result<Self, String> {
        s.parse()
    }
}

impl From<Backend> for String {
    fn from(b: Backend) -> String {
        b.to_string()
    }
}

impl fmt::Display for Backend {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Backend::Rational => write!(f, "rational"),
            Backend::Prime(p) => write!(f, "fp:{p}"),
        }
    }
}

/// Instance parameters as scalar strings in the chosen backend.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Params {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub gamma_sq: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub s: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub d: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub a: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub b: Option<String>,
    /// Hermitian coefficients: multiples of `γ` for `pq_quadratic`, pure
    /// quaternions `"c_i,c_j,c_ij"` for `pq_quaternion`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub coeffs: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub eta: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mu: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub q1: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub q2: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub check_norm: Option<bool>,
}

impl Params {
    fn present(&self) -> Vec<&'static str> {
        let mut out = Vec::new();
        let mut add = |set: bool, k: &'static str| {
            if set {
                out.push(k);
            }
        };
        add(self.gamma_sq.is_some(), "gamma_sq");
        add(self.s.is_some(), "s");
        add(self.d.is_some(), "d");
        add(self.a.is_some(), "a");
        add(self.b.is_some(), "b");
        add(self.coeffs.is_some(), "coeffs");
        add(self.eta.is_some(), "eta");
        add(self.mu.is_some(), "mu");
        add(self.q1.is_some(), "q1");
        add(self.q2.is_some(), "q2");
        add(self.check_norm.is_some(), "check_norm");
        out
    }
}

fn default_samples() -> usize {
    200
}

fn default_height() -> u32 {
    9
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ScenarioConfig {
    pub kind: Kind,
    #[serde(default)]
    pub field: Backend,
    #[serde(default = "default_samples")]
    pub samples: usize,
    #[serde(default)]
    pub seed: u64,
    /// Bound on numerators and denominators of random rational samples.
    #[serde(default = "default_height")]
    pub height: u32,
    #[serde(default)]
    pub params: Params,
}

/// Reads and validates a scenario file.
pub fn load_scenario(path: &Path) -> Result<ScenarioConfig, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Config(format!("{}: {e}", path.display())))?;
    let cfg = parse_scenario(&text).map_err(|e| match e {
        CliError::Config(m) => CliError::Config(format!("{}: {m}", path.display())),
        other => other,
    })?;
    Ok(cfg)
}

pub fn parse_scenario(text: &str) -> Result<ScenarioConfig, CliError> {
    let cfg: ScenarioConfig = toml::from_str(text).map_err(|e| CliError::Config(e.to_string()))?;
    cfg.validate()?;
    Ok(cfg)
}

/// Scenario parameters parsed into a concrete field.
#[derive(Clone, Debug)]
pub enum KindParams<F: Field> {
    EType { kind: EKind, gamma_sq: F::Elem, s: Vec<F::Elem> },
    PqQuadratic { d: F::Elem, coeffs: Vec<F::Elem> },
    PqQuaternion { a: F::Elem, b: F::Elem, coeffs: Vec<[F::Elem; 3]> },
    MatrixSplit { eta: F::Elem },
    CdBiquaternion { q1: [F::Elem; 2], q2: [F::Elem; 2], mu: F::Elem },
}

impl ScenarioConfig {
    pub fn with_field(mut self, field: Backend) -> Result<Self, CliError> {
        self.field = field;
        self.validate()?;
        Ok(self)
    }

    /// Arity, parsing and kind constraints; returns informational notes.
    pub fn validate(&self) -> Result<Vec<String>, CliError> {
        let (required, optional) = self.kind.keys();
        for key in self.params.present() {
            if !required.contains(&key) && !optional.contains(&key) {
                return Err(CliError::Config(format!("params.{key} is not used by kind {}", self.kind.name())));
            }
        }
        match self.field {
            Backend::Rational => self.validate_in(&Rationals),
            Backend::Prime(p) => self.validate_in(&PrimeField::new(p)?),
        }
    }

    fn validate_in<F: Field>(&self, f: &F) -> Result<Vec<String>, CliError> {
        let parsed = self.parse_params(f)?;
        let mut notes = Vec::new();
        if let KindParams::EType { kind, gamma_sq, s } = &parsed {
            if f.is_zero(gamma_sq) || f.is_square(gamma_sq) == Some(true) {
                return Err(CliError::Config("gamma_sq must be a non-square (E = K(gamma) is a field)".into()));
            }
            if s.iter().any(|c| f.is_zero(c)) {
                return Err(CliError::Config("every s_i must be nonzero".into()));
            }
            if *kind == EKind::E8 {
                let prod = s.iter().fold(f.one(), |acc, c| f.mul(&acc, c));
                if prod != f.from_i64(-1) {
                    return Err(CliError::Config(format!(
                        "e8 requires s_2s_3s_4s_5s_6=-1, got product {}",
                        f.format(&prod)
                    )));
                }
            }
            if *kind == EKind::E7 && self.params.check_norm == Some(true) {
                notes.push(self.e7_norm_note(f, gamma_sq, s)?);
            }
        }
        Ok(notes)
    }

    /// `s₂s₃s₄ ∉ N(E)`, decided over ℚ for `γ² = −1` by the two-squares criterion.
    fn e7_norm_note<F: Field>(&self, f: &F, gamma_sq: &F::Elem, s: &[F::Elem]) -> Result<String, CliError> {
        let prod = s.iter().fold(f.one(), |acc, c| f.mul(&acc, c));
        let shown = f.format(&prod);
        if self.field != Backend::Rational || f.format(gamma_sq) != "-1" {
            return Ok(format!("s_2s_3s_4 = {shown}: norm condition not decided for this field and gamma_sq"));
        }
        let q = Rationals.parse(&shown)?;
        match is_sum_of_two_squares(&q) {
            Some(false) => Ok(format!("s_2s_3s_4 = {shown} is not a sum of two squares, so s_2s_3s_4 is not in N(E)")),
            Some(true) => Err(CliError::Config(format!(
                "e7 requires s_2s_3s_4 not in N(E), but {shown} is a sum of two squares"
            ))),
            None => Ok(format!("s_2s_3s_4 = {shown}: too large to factor, norm condition not decided")),
        }
    }

    pub fn parse_params<F: Field>(&self, f: &F) -> Result<KindParams<F>, CliError> {
        let p = &self.params;
        let scalar = |key: &str, v: &Option<String>| -> Result<F::Elem, CliError> {
            let s = v.as_ref().ok_or_else(|| CliError::Config(format!("params.{key} is required for kind {}", self.kind.name())))?;
            f.parse(s).map_err(|e| CliError::Config(format!("params.{key}: {e}")))
        };
        let list = |key: &str, v: &Option<Vec<String>>, arity: Option<usize>| -> Result<Vec<String>, CliError> {
            let l = v.as_ref().ok_or_else(|| CliError::Config(format!("params.{key} is required for kind {}", self.kind.name())))?;
            match arity {
                Some(n) if l.len() != n => Err(CliError::Config(format!(
                    "params.{key} must have {n} entries for kind {}, got {}",
                    self.kind.name(),
                    l.len()
                ))),
                None if l.is_empty() => Err(CliError::Config(format!("params.{key} must not be empty"))),
                _ => Ok(l.clone()),
            }
        };
        let parse = |key: &str, s: &str| f.parse(s).map_err(|e| CliError::Config(format!("params.{key}: {e}")));
        let pair = |key: &str, v: &Option<Vec<String>>| -> Result<[F::Elem; 2], CliError> {
            let l = list(key, v, Some(2))?;
            Ok([parse(key, &l[0])?, parse(key, &l[1])?])
        };
        Ok(match self.kind {
            Kind::E6 | Kind::E7 | Kind::E8 => {
                let kind = self.kind.e_kind().expect("e-type");
                let s = list("s", &p.s, Some(kind.s_arity()))?;
                let s = s.iter().map(|c| parse("s", c)).collect::<Result<_, _>>()?;
                KindParams::EType { kind, gamma_sq: scalar("gamma_sq", &p.gamma_sq)?, s }
            }
            Kind::PqQuadratic => {
                let coeffs = list("coeffs", &p.coeffs, None)?;
                let coeffs = coeffs.iter().map(|c| parse("coeffs", c)).collect::<Result<_, _>>()?;
                KindParams::PqQuadratic { d: scalar("d", &p.d)?, coeffs }
            }
            Kind::PqQuaternion => {
                let coeffs = list("coeffs", &p.coeffs, None)?
                    .iter()
                    .map(|c| {
                        let v = f.parse_vector(c).map_err(|e| CliError::Config(format!("params.coeffs: {e}")))?;
                        <[F::Elem; 3]>::try_from(v).map_err(|v| {
                            CliError::Config(format!("params.coeffs: a pure quaternion has 3 coordinates, got {}", v.len()))
                        })
                    })
                    .collect::<Result<_, _>>()?;
                KindParams::PqQuaternion { a: scalar("a", &p.a)?, b: scalar("b", &p.b)?, coeffs }
            }
            Kind::MatrixSplit => KindParams::MatrixSplit { eta: scalar("eta", &p.eta)? },
            Kind::CdBiquaternion => KindParams::CdBiquaternion {
                q1: pair("q1", &p.q1)?,
                q2: pair("q2", &p.q2)?,
                mu: scalar("mu", &p.mu)?,
            },
        })
    }
}

/// The demo scenario used by the library tests: E8 over ℚ with `γ² = −1`.
pub fn demo_e8() -> ScenarioConfig {
    let s = [rat(2, 1), rat(3, 1), rat(1, 2), rat(5, 1), rat(-1, 15)];
    ScenarioConfig {
        kind: Kind::E8,
        field: Backend::Rational,
        samples: 200,
        seed: 0,
        height: 9,
        params: Params {
            gamma_sq: Some("-1".into()),
            s: Some(s.iter().map(|c| Rationals.format(c)).collect()),
            ..Params::default()
        },
    }
}
