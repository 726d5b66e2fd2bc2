//! Ready-made delta series for the standard families of polynomial
//! sequences, each paired with closed-form oracles for its Stirling
//! triangles and associated logarithm.

mod build;
mod moments;
mod oracles;
mod registry;

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::fps::{DeltaSeries, FpsError};
use crate::scalar::{Rat, Scalar, ScalarError};
use crate::stirling::StirlingError;

pub use moments::{a2_series, moment_delta, uniform_log_coeff, uniform_moments, MomentKind, MomentSeq};
pub use oracles::{central_t1, central_t1_lambda, central_t2, central_t2_lambda, oracle_log, oracle_s1, oracle_s2};
pub use registry::{registry, registry_json, RegistryEntry};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PresetError {
    #[error("preset '{0}' involves lambda; pass --lambda symbolic or a rational value")]
    LambdaModeRequired(String),
    #[error("unknown preset '{0}'")]
    UnknownPreset(String),
    #[error("no closed-form {what} oracle for preset '{id}'")]
    NoOracle { id: String, what: &'static str },
    #[error("the first moment E[Y] must be nonzero")]
    ZeroFirstMoment,
    #[error("invalid distribution: {0}")]
    BadDistribution(String),
    #[error("order must be at least 1")]
    BadOrder,
    #[error(transparent)]
    Fps(#[from] FpsError),
    #[error(transparent)]
    Stirling(#[from] StirlingError),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}

pub type Result<T> = std::result::Result<T, PresetError>;

/// How λ enters a computation.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub enum LambdaMode {
    /// No λ allowed (classical objects only).
    #[default]
    Absent,
    /// λ kept as an indeterminate.
    Symbolic,
    /// λ replaced by a rational number.
    Value(Rat),
}

impl LambdaMode {
    /// The scalar standing for λ, if any.
    pub fn scalar(&self) -> Option<Scalar> {
        match self {
            LambdaMode::Absent => None,
            LambdaMode::Symbolic => Some(Scalar::lambda()),
            LambdaMode::Value(r) => Some(Scalar::Q(r.clone())),
        }
    }
}

impl FromStr for LambdaMode {
    type Err = ScalarError;

    /// `"symbolic"`, `"absent"`/`"none"`, or a rational such as `-1/2`.
    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s.trim() {
            "symbolic" | "l" | "lambda" => Ok(LambdaMode::Symbolic),
            "absent" | "none" => Ok(LambdaMode::Absent),
            other => Ok(LambdaMode::Value(other.parse()?)),
        }
    }
}

impl fmt::Display for LambdaMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LambdaMode::Absent => f.write_str("absent"),
            LambdaMode::Symbolic => f.write_str("symbolic"),
            LambdaMode::Value(r) => write!(f, "{r}"),
        }
    }
}

/// The preset families. Everything except `Probabilistic` is a fixed
/// formula in `t` (and possibly λ).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Family {
    Identity,
    DegFalling,
    Rising,
    DegRising,
    Central,
    CentralBell,
    DegCentralBell,
    LahBell,
    DegLahBell,
    Bell,
    PartialDegBell,
    FullDegBell,
    MittagLeffler,
    LaguerreM1,
    Probabilistic(MomentKind),
}

/// The fourteen fixed families in their conventional order.
pub const FIXED_FAMILIES: [Family; 14] = [
    Family::Identity,
    Family::DegFalling,
    Family::Rising,
    Family::DegRising,
    Family::Central,
    Family::CentralBell,
    Family::DegCentralBell,
    Family::LahBell,
    Family::DegLahBell,
    Family::Bell,
    Family::PartialDegBell,
    Family::FullDegBell,
    Family::MittagLeffler,
    Family::LaguerreM1,
];

impl Family {
    pub fn id(&self) -> String {
        let s = match self {
            Family::Identity => "identity",
            Family::DegFalling => "deg_falling",
            Family::Rising => "rising",
            Family::DegRising => "deg_rising",
            Family::Central => "central",
            Family::CentralBell => "central_bell",
            Family::DegCentralBell => "deg_central_bell",
            Family::LahBell => "lah_bell",
            Family::DegLahBell => "deg_lah_bell",
            Family::Bell => "bell",
            Family::PartialDegBell => "partial_deg_bell",
            Family::FullDegBell => "full_deg_bell",
            Family::MittagLeffler => "mittag_leffler",
            Family::LaguerreM1 => "laguerre_m1",
            Family::Probabilistic(k) => return format!("probabilistic:{k}"),
        };
        s.to_string()
    }

    /// Conventional example letter.
    pub fn letter(&self) -> char {
        match self {
            Family::Probabilistic(_) => 'a',
            Family::Identity => 'b',
            Family::DegFalling => 'c',
            Family::Rising => 'd',
            Family::DegRising => 'e',
            Family::Central => 'f',
            Family::CentralBell => 'g',
            Family::DegCentralBell => 'h',
            Family::LahBell => 'i',
            Family::DegLahBell => 'j',
            Family::Bell => 'k',
            Family::PartialDegBell => 'l',
            Family::FullDegBell => 'm',
            Family::MittagLeffler => 'n',
            Family::LaguerreM1 => 'o',
        }
    }

    /// Whether `f` depends on λ (so a λ-mode must be given).
    pub fn is_degenerate(&self) -> bool {
        matches!(
            self,
            Family::DegFalling
                | Family::DegRising
                | Family::DegCentralBell
                | Family::DegLahBell
                | Family::PartialDegBell
                | Family::FullDegBell
        )
    }

    /// The classical family obtained at λ = 0. Both degenerate factorials
    /// collapse to `xⁿ` there; the rising family is instead the λ = 1 case of
    /// the degenerate rising one.
    pub fn classical_partner(&self) -> Option<Family> {
        match self {
            Family::DegFalling | Family::DegRising => Some(Family::Identity),
            Family::DegCentralBell => Some(Family::CentralBell),
            Family::DegLahBell => Some(Family::LahBell),
            Family::PartialDegBell | Family::FullDegBell => Some(Family::Bell),
            _ => None,
        }
    }

    /// `f` written in the expression grammar accepted by `--f`.
    pub fn expr(&self) -> Option<&'static str> {
        Some(match self {
            Family::Identity => "t",
            Family::DegFalling => "(exp(lambda*t)-1)/lambda",
            Family::Rising => "1-exp(-t)",
            Family::DegRising => "(1-exp(-lambda*t))/lambda",
            Family::Central => "exp(t/2)-exp(-t/2)",
            Family::CentralBell => "2*log((t+sqrt(t^2+4))/2)",
            Family::DegCentralBell => "(exp(2*lambda*log((t+sqrt(t^2+4))/2))-1)/lambda",
            Family::LahBell => "t/(1+t)",
            Family::DegLahBell => "(exp(lambda*t)-1)/(lambda+exp(lambda*t)-1)",
            Family::Bell => "log(1+t)",
            Family::PartialDegBell => "(exp(lambda*log(1+t))-1)/lambda",
            Family::FullDegBell => "(exp(lambda*log(1+(exp(lambda*t)-1)/lambda))-1)/lambda",
            Family::MittagLeffler => "(exp(t)-1)/(exp(t)+1)",
            Family::LaguerreM1 => "t/(t-1)",
            Family::Probabilistic(_) => return None,
        })
    }

    /// Human-readable formula for `f`.
    pub fn formula(&self) -> &'static str {
        match self {
            Family::Identity => "f(t) = t",
            Family::DegFalling => "f(t) = (e^(λt) - 1)/λ",
            Family::Rising => "f(t) = 1 - e^(-t)",
            Family::DegRising => "f(t) = (1 - e^(-λt))/λ",
            Family::Central => "f(t) = e^(t/2) - e^(-t/2)",
            Family::CentralBell => "f(t) = 2 log((t + sqrt(t^2 + 4))/2)",
            Family::DegCentralBell => "f(t) = log_λ(((t + sqrt(t^2 + 4))/2)^2)",
            Family::LahBell => "f(t) = t/(1 + t)",
            Family::DegLahBell => "f(t) = (e^(λt) - 1)/(λ + e^(λt) - 1)",
            Family::Bell => "f(t) = log(1 + t)",
            Family::PartialDegBell => "f(t) = log_λ(1 + t)",
            Family::FullDegBell => "f(t) = log_λ(1 + (e^(λt) - 1)/λ)",
            Family::MittagLeffler => "f(t) = (e^t - 1)/(e^t + 1)",
            Family::LaguerreM1 => "f(t) = t/(t - 1)",
            Family::Probabilistic(_) => "fbar(t) = log E[e_λ^Y(t)]",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.id())
    }
}

impl FromStr for Family {
    type Err = PresetError;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if let Some(fam) = FIXED_FAMILIES.iter().find(|f| f.id() == s) {
            return Ok(fam.clone());
        }
        if s == "probabilistic" {
            return Ok(Family::Probabilistic(MomentKind::Uniform));
        }
        if let Some(rest) = s.strip_prefix("probabilistic:") {
            return Ok(Family::Probabilistic(rest.parse()?));
        }
        Err(PresetError::UnknownPreset(s.to_string()))
    }
}

/// A delta series from one family at a fixed order and λ-mode.
#[derive(Debug, Clone)]
pub struct Preset {
    family: Family,
    lambda: LambdaMode,
    f: DeltaSeries,
    moments: Option<MomentSeq>,
}

impl Preset {
    pub fn family(&self) -> &Family {
        &self.family
    }

    pub fn id(&self) -> String {
        self.family.id()
    }

    pub fn lambda_mode(&self) -> &LambdaMode {
        &self.lambda
    }

    /// λ as a scalar; `0` when the mode is absent.
    pub fn lam(&self) -> Scalar {
        self.lambda.scalar().unwrap_or_else(Scalar::zero)
    }

    pub fn f(&self) -> &DeltaSeries {
        &self.f
    }

    pub fn order(&self) -> usize {
        self.f.order()
    }

    /// The moment sequence behind a probabilistic preset.
    pub fn moments(&self) -> Option<&MomentSeq> {
        self.moments.as_ref()
    }
}

/// Builds the preset `id` with `f` known to `order`.
pub fn make_preset(id: &str, order: usize, lambda: LambdaMode) -> Result<Preset> {
    let family: Family = id.parse()?;
    make_family(&family, order, lambda)
}

pub fn make_family(family: &Family, order: usize, lambda: LambdaMode) -> Result<Preset> {
    if order == 0 {
        return Err(PresetError::BadOrder);
    }
    if family.is_degenerate() && lambda == LambdaMode::Absent {
        return Err(PresetError::LambdaModeRequired(family.id()));
    }
    let lam = lambda.scalar().unwrap_or_else(Scalar::zero);
    let (f, moments) = match family {
        Family::Probabilistic(kind) => {
            let m = MomentSeq::new(kind.clone(), lam)?;
            (moment_delta(&m, order)?, Some(m))
        }
        fixed => (build::fixed_f(fixed, &lam, order)?, None),
    };
    Ok(Preset { family: family.clone(), lambda, f, moments })
}

/// The presets every verification sweep covers: the fourteen fixed families
/// plus the uniform and deterministic `Y = 1` moment presets.
pub fn corpus_ids() -> Vec<String> {
    let mut ids: Vec<String> = FIXED_FAMILIES.iter().map(Family::id).collect();
    ids.push("probabilistic:uniform".into());
    ids.push("probabilistic:const:1".into());
    ids
}

/// λ-mode to use for a corpus member when sweeping: symbolic for families
/// that involve λ, absent otherwise.
pub fn default_mode(family: &Family) -> LambdaMode {
    if family.is_degenerate() || matches!(family, Family::Probabilistic(_)) {
        LambdaMode::Symbolic
    } else {
        LambdaMode::Absent
    }
}

#[cfg(test)]
mod tests;
