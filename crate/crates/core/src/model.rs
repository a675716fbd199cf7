//! Problem data: material properties, phase-change temperatures and the
//! condition imposed at the fixed face, plus validation of the standing
//! hypotheses.

use std::fmt;

use serde::{Deserialize, Serialize};

/// Thermophysical properties of the three phases.
///
/// Phase 1 is the initial solid at temperature `D`, phase 2 the intermediate
/// phase between the `C` and `B` isotherms, phase 3 the phase adjacent to the
/// heated face. Density is common to all phases.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MaterialProperties {
    /// Conductivities, W/(m·K).
    pub k1: f64,
    pub k2: f64,
    pub k3: f64,
    /// Specific heats, J/(kg·K).
    pub c1: f64,
    pub c2: f64,
    pub c3: f64,
    /// Density, kg/m³.
    pub rho: f64,
    /// Latent heat of the `C` transition (phase 1 → 2), J/kg.
    pub l1: f64,
    /// Latent heat of the `B` transition (phase 2 → 3), J/kg.
    pub l2: f64,
}

/// Thermal diffusivities `k/(ρc)` of the three phases, m²/s.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Diffusivities {
    pub alpha1: f64,
    pub alpha2: f64,
    pub alpha3: f64,
}

impl MaterialProperties {
    pub fn diffusivities(&self) -> Diffusivities {
        Diffusivities {
            alpha1: self.k1 / (self.rho * self.c1),
            alpha2: self.k2 / (self.rho * self.c2),
            alpha3: self.k3 / (self.rho * self.c3),
        }
    }

    /// Latent heats per unit volume `(ρℓ₁, ρℓ₂)`.
    pub fn volumetric_latent_heats(&self) -> (f64, f64) {
        (self.rho * self.l1, self.rho * self.l2)
    }

    pub fn stefan_numbers(&self, temps: &PhaseTemps) -> StefanNumbers {
        StefanNumbers {
            ste1: self.c1 * (temps.c - temps.d) / self.l1,
            ste2: self.c2 * (temps.b - temps.c) / self.l2,
        }
    }
}

/// Phase-change temperatures `B > C` and the initial temperature `D`, in kelvin.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PhaseTemps {
    #[serde(rename = "B")]
    pub b: f64,
    #[serde(rename = "C")]
    pub c: f64,
    #[serde(rename = "D")]
    pub d: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct StefanNumbers {
    pub ste1: f64,
    pub ste2: f64,
}

/// Condition imposed at the fixed face `x = 0`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase")]
pub enum BoundarySpec {
    /// `k₃ ∂Φ/∂x(0,t) = h₀/√t · (Φ(0,t) − A∞)`; `h0` in kg/(K·s^(5/2)).
    Robin {
        h0: f64,
        #[serde(rename = "A_inf")]
        a_inf: f64,
    },
    /// `Φ(0,t) = A`.
    Dirichlet {
        #[serde(rename = "A")]
        a: f64,
    },
    /// `k₃ ∂Φ/∂x(0,t) = −q₀/√t`; `q0` in kg/s^(5/2).
    Neumann { q0: f64 },
}

impl BoundarySpec {
    pub fn kind(&self) -> BoundaryKind {
        match self {
            BoundarySpec::Robin { .. } => BoundaryKind::Robin,
            BoundarySpec::Dirichlet { .. } => BoundaryKind::Dirichlet,
            BoundarySpec::Neumann { .. } => BoundaryKind::Neumann,
        }
    }

    /// The bulk temperature of a Robin condition, if any.
    pub fn a_inf(&self) -> Option<f64> {
        match *self {
            BoundarySpec::Robin { a_inf, .. } => Some(a_inf),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BoundaryKind {
    Robin,
    Dirichlet,
    Neumann,
}

impl fmt::Display for BoundaryKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BoundaryKind::Robin => "robin",
            BoundaryKind::Dirichlet => "dirichlet",
            BoundaryKind::Neumann => "neumann",
        })
    }
}

impl std::str::FromStr for BoundaryKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "robin" => Ok(BoundaryKind::Robin),
            "dirichlet" => Ok(BoundaryKind::Dirichlet),
            "neumann" => Ok(BoundaryKind::Neumann),
            other => Err(format!("unknown boundary kind `{other}`")),
        }
    }
}

/// A complete problem: the JSON document read by the CLI.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ParameterSet {
    #[serde(flatten)]
    pub props: MaterialProperties,
    #[serde(flatten)]
    pub temps: PhaseTemps,
    pub boundary: BoundarySpec,
}

impl ParameterSet {
    pub fn from_json(text: &str) -> serde_json::Result<Self> {
        serde_json::from_str(text)
    }

    pub fn validate(&self) -> Vec<Violation> {
        validate(&self.props, &self.temps, &self.boundary)
    }
}

/// One violated hypothesis, with a stable machine-readable code.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Violation {
    pub code: &'static str,
    pub message: String,
}

impl Violation {
    pub fn new(code: &'static str, message: impl Into<String>) -> Self {
        Violation {
            code,
            message: message.into(),
        }
    }
}

pub mod codes {
    pub const NON_FINITE: &str = "NON_FINITE";
    pub const NON_POSITIVE_PROPERTY: &str = "NON_POSITIVE_PROPERTY";
    pub const TEMPS_NOT_STRICT: &str = "TEMPS_NOT_STRICT";
    pub const DIFFUSIVITY_ORDER: &str = "DIFFUSIVITY_ORDER";
    pub const ROBIN_H0: &str = "ROBIN_H0_NOT_POSITIVE";
    pub const ROBIN_A_INF: &str = "ROBIN_A_INF_NOT_ABOVE_B";
    pub const DIRICHLET_A: &str = "DIRICHLET_A_NOT_ABOVE_B";
    pub const NEUMANN_Q0: &str = "NEUMANN_Q0_NOT_POSITIVE";
    pub const MISSING_A_INF: &str = "MISSING_A_INF";
    pub const A_INF_NOT_ABOVE_A: &str = "A_INF_NOT_ABOVE_A";
    pub const ROBIN_DENOMINATOR: &str = "ROBIN_DENOMINATOR_NOT_POSITIVE";
    pub const SAME_KIND: &str = "SAME_KIND";
    pub const BAD_ARGUMENT: &str = "BAD_ARGUMENT";
}

/// Checks material properties and temperatures.
///
/// `α₂ = α₃` is accepted; only `α₂ < α₃` is a violation.
pub fn validate_material(props: &MaterialProperties, temps: &PhaseTemps) -> Vec<Violation> {
    let mut out = Vec::new();
    let named = [
        ("k1", props.k1),
        ("k2", props.k2),
        ("k3", props.k3),
        ("c1", props.c1),
        ("c2", props.c2),
        ("c3", props.c3),
        ("rho", props.rho),
        ("l1", props.l1),
        ("l2", props.l2),
    ];
    let mut properties_ok = true;
    for (name, value) in named {
        if !value.is_finite() {
            out.push(Violation::new(
                codes::NON_FINITE,
                format!("{name} = {value} is not finite"),
            ));
            properties_ok = false;
        } else if value <= 0.0 {
            out.push(Violation::new(
                codes::NON_POSITIVE_PROPERTY,
                format!("{name} = {value} must be strictly positive"),
            ));
            properties_ok = false;
        }
    }
    for (name, value) in [("B", temps.b), ("C", temps.c), ("D", temps.d)] {
        if !value.is_finite() {
            out.push(Violation::new(
                codes::NON_FINITE,
                format!("{name} = {value} is not finite"),
            ));
        }
    }
    if !(temps.b > temps.c && temps.c > temps.d) {
        out.push(Violation::new(
            codes::TEMPS_NOT_STRICT,
            format!(
                "phase-change temperatures must satisfy B > C > D, got B = {}, C = {}, D = {}",
                temps.b, temps.c, temps.d
            ),
        ));
    }
    if properties_ok {
        let alpha = props.diffusivities();
        if alpha.alpha2 < alpha.alpha3 {
            out.push(Violation::new(
                codes::DIFFUSIVITY_ORDER,
                format!(
                    "diffusivities must satisfy alpha2 >= alpha3, got alpha2 = {:e}, alpha3 = {:e}",
                    alpha.alpha2, alpha.alpha3
                ),
            ));
        }
    }
    out
}

/// Checks a boundary datum against the temperatures.
pub fn validate_boundary(temps: &PhaseTemps, bc: &BoundarySpec) -> Vec<Violation> {
    let mut out = Vec::new();
    match *bc {
        BoundarySpec::Robin { h0, a_inf } => {
            if !(h0.is_finite() && h0 > 0.0) {
                out.push(Violation::new(codes::ROBIN_H0, format!("h0 = {h0} must be positive")));
            }
            if !(a_inf.is_finite() && a_inf > temps.b) {
                out.push(Violation::new(
                    codes::ROBIN_A_INF,
                    format!("A_inf = {a_inf} must exceed B = {}", temps.b),
                ));
            }
        }
        BoundarySpec::Dirichlet { a } => {
            if !(a.is_finite() && a > temps.b) {
                out.push(Violation::new(
                    codes::DIRICHLET_A,
                    format!("A = {a} must exceed B = {}", temps.b),
                ));
            }
        }
        BoundarySpec::Neumann { q0 } => {
            if !(q0.is_finite() && q0 > 0.0) {
                out.push(Violation::new(codes::NEUMANN_Q0, format!("q0 = {q0} must be positive")));
            }
        }
    }
    out
}

/// Every violated hypothesis of a full problem; empty when the data are valid.
pub fn validate(props: &MaterialProperties, temps: &PhaseTemps, bc: &BoundarySpec) -> Vec<Violation> {
    let mut out = validate_material(props, temps);
    out.extend(validate_boundary(temps, bc));
    out
}

/// The parameter sets used for the temperature colour maps of the three
/// benchmark problems (identical material constants, `B, C, D = 328, 324, 320 K`).
pub mod presets {
    use super::*;

    pub fn material() -> MaterialProperties {
        MaterialProperties {
            k1: 0.2,
            k2: 0.2,
            k3: 0.2,
            c1: 2.0,
            c2: 2.0,
            c3: 2.0,
            rho: 770.0,
            l1: 160.0,
            l2: 150.0,
        }
    }

    pub fn temps() -> PhaseTemps {
        PhaseTemps {
            b: 328.0,
            c: 324.0,
            d: 320.0,
        }
    }

    /// `h0 = 100`, `A_inf = 334 K`.
    pub fn robin() -> ParameterSet {
        with(BoundarySpec::Robin {
            h0: 100.0,
            a_inf: 334.0,
        })
    }

    /// `A = 331 K`.
    pub fn dirichlet() -> ParameterSet {
        with(BoundarySpec::Dirichlet { a: 331.0 })
    }

    /// `q0 = 300`.
    pub fn neumann() -> ParameterSet {
        with(BoundarySpec::Neumann { q0: 300.0 })
    }

    pub fn with(boundary: BoundarySpec) -> ParameterSet {
        ParameterSet {
            props: material(),
            temps: temps(),
            boundary,
        }
    }
}
