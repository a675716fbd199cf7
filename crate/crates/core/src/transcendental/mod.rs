//! Scalar functions of the similarity variable whose roots fix the two
//! front coefficients, and the bracketed root finder used to solve them.
//!
//! With `ξ₁` the outer (`C` isotherm) coefficient and `ξ₂` the inner (`B`
//! isotherm) one, the Stefan condition at the outer front reads
//! `erf(ξ₂√(α₁/α₂)) = H(ξ₁)`, and the condition at the inner front becomes
//! `Q(ξ₁) = G(ξ₂)` where `G` depends on the condition at the fixed face:
//! `T` (Robin), `V` (Dirichlet) or `P` (Neumann).

mod root;

pub use root::{find_root_monotone, RootError, UpperBracket, BRACKET_WIDTH, MAX_DOUBLINGS};

use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::model::{validate_material, BoundarySpec, Diffusivities, MaterialProperties, PhaseTemps, StefanNumbers};
use crate::specfun::{erf, erf_inv, erfc, erfc_inv, erfcx};

/// Residual tolerance for `H(z₀) = 0`.
pub const Z0_TOLERANCE: f64 = 1e-13;

/// Residual tolerance for the front equation `Q = G∘inner`.
pub const FRONT_TOLERANCE: f64 = 1e-12;

/// Offset above `z₀` where the front-equation bracket starts.
pub const Z0_OFFSET: f64 = 1e-12;

/// Validated material data with every derived constant, including `z₀`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ProblemContext {
    props: MaterialProperties,
    temps: PhaseTemps,
    alpha: Diffusivities,
    ste: StefanNumbers,
    /// Coefficient of the latent-heat term in `H`.
    h_coef: f64,
    z0: f64,
}

impl ProblemContext {
    /// Validates the material data, derives diffusivities and Stefan
    /// numbers, and solves for `z₀`.
    pub fn new(props: MaterialProperties, temps: PhaseTemps) -> Result<Self> {
        let violations = validate_material(&props, &temps);
        if !violations.is_empty() {
            return Err(Error::Validation(violations));
        }
        let alpha = props.diffusivities();
        if alpha.alpha2 == alpha.alpha3 {
            log::warn!("alpha2 == alpha3: accepted, the exponential factor of T and V is identically 1");
        }
        let ste = props.stefan_numbers(&temps);
        let h_coef = ste.ste2 / PI.sqrt() * props.l2 / props.l1 * (props.k2 * props.c1 / (props.k1 * props.c2)).sqrt();
        let mut ctx = ProblemContext {
            props,
            temps,
            alpha,
            ste,
            h_coef,
            z0: f64::NAN,
        };
        ctx.z0 = solve_z0(&ctx)?;
        log::debug!("z0 = {}", ctx.z0);
        Ok(ctx)
    }

    pub fn props(&self) -> &MaterialProperties {
        &self.props
    }

    pub fn temps(&self) -> &PhaseTemps {
        &self.temps
    }

    pub fn alpha(&self) -> &Diffusivities {
        &self.alpha
    }

    pub fn stefan_numbers(&self) -> &StefanNumbers {
        &self.ste
    }

    /// The unique positive zero of `H`.
    pub fn z0(&self) -> f64 {
        self.z0
    }

    /// `erf(z₀√(α₁/α₂))`, which appears in every threshold.
    pub fn erf_z0(&self) -> f64 {
        erf(self.z0 * self.r12())
    }

    /// `√(α₁/α₂)`
    pub fn r12(&self) -> f64 {
        (self.alpha.alpha1 / self.alpha.alpha2).sqrt()
    }

    /// `√(α₁/α₃)`
    pub fn r13(&self) -> f64 {
        (self.alpha.alpha1 / self.alpha.alpha3).sqrt()
    }

    /// `φ(z) = z + Ste₁/√π · exp(−z²)/erfc(z)`
    pub fn phi(&self, z: f64) -> f64 {
        z + self.ste.ste1 / PI.sqrt() / erfcx(z)
    }

    /// `H(z) = erf(z√(α₁/α₂)) − Ste₂/√π · ℓ₂/ℓ₁ · √(k₂c₁/(k₁c₂)) · exp(−z²α₁/α₂)/φ(z)`
    pub fn h_func(&self, z: f64) -> f64 {
        let r = self.r12();
        erf(z * r) - self.h_coef * (-(z * r) * (z * r)).exp() / self.phi(z)
    }

    /// `Q(z) = ℓ₁/ℓ₂ · φ(z) · exp(z²α₁/α₂)`
    pub fn q_func(&self, z: f64) -> f64 {
        let r = z * self.r12();
        self.props.l1 / self.props.l2 * self.phi(z) * (r * r).exp()
    }

    /// `1 − H(z)`, formed without cancellation so that it keeps full
    /// relative precision where `H(z)` rounds to 1.
    pub fn h_complement(&self, z: f64) -> f64 {
        let r = self.r12();
        erfc(z * r) + self.h_coef * (-(z * r) * (z * r)).exp() / self.phi(z)
    }

    /// Inner coefficient implied by an outer one: `√(α₂/α₁)·erf⁻¹(H(z))`.
    ///
    /// Defined for `z > z₀`, where `H(z) ∈ (0, 1)`. Far from `z₀` the inverse
    /// is taken on `1 − H(z)` instead.
    pub fn inner_coefficient(&self, z: f64) -> Result<f64> {
        if !(z > self.z0) {
            return Err(Error::Domain(format!(
                "outer coefficient {z} must exceed z0 = {}",
                self.z0
            )));
        }
        let h = self.h_func(z);
        let w = if h <= 0.5 {
            erf_inv(h)?
        } else {
            erfc_inv(self.h_complement(z))?
        };
        Ok(w / self.r12())
    }

    /// Shared factor `exp(−z²α₁(1/α₃ − 1/α₂))`; identically 1 when `α₂ = α₃`.
    fn decay(&self, z: f64) -> f64 {
        let a = &self.alpha;
        (-z * z * a.alpha1 * (1.0 / a.alpha3 - 1.0 / a.alpha2)).exp()
    }

    fn latent_drift(&self, z: f64) -> f64 {
        let r = z * self.r12();
        z * (r * r).exp()
    }

    /// Robin right-hand side `T(z)`, `z > 0`.
    pub fn t_func(&self, z: f64, h0: f64, a_inf: f64) -> f64 {
        let p = &self.props;
        let t = &self.temps;
        let coef =
            self.ste.ste2 / (PI.sqrt() * p.c2) * (a_inf - t.b) / (t.b - t.c) * (p.k3 * p.c1 * p.c3 / p.k1).sqrt();
        let resistance = p.k3 / (h0 * (PI * self.alpha.alpha3).sqrt());
        coef * self.decay(z) / (resistance + erf(z * self.r13())) - self.latent_drift(z)
    }

    /// `U(z) = T(√(α₂/α₁)·erf⁻¹(H(z)))`, defined for `z > z₀`.
    pub fn u_func(&self, z: f64, h0: f64, a_inf: f64) -> Result<f64> {
        Ok(self.t_func(self.inner_coefficient(z)?, h0, a_inf))
    }

    /// Dirichlet right-hand side `V(z)`, `z > 0`.
    pub fn v_func(&self, z: f64, a: f64) -> f64 {
        let p = &self.props;
        let coef = (a - self.temps.b) / p.l2 * (p.c1 * p.c3 * p.k3 / (PI * p.k1)).sqrt();
        coef * self.decay(z) / erf(z * self.r13()) - self.latent_drift(z)
    }

    /// Neumann right-hand side `P(z)`, `z ≥ 0`.
    pub fn p_func(&self, z: f64, q0: f64) -> f64 {
        let p = &self.props;
        let r2 = z * self.r12();
        let r3 = z * self.r13();
        (r2 * r2).exp() * (-z + q0 / p.l2 * (p.c1 / (p.rho * p.k1)).sqrt() * (-r3 * r3).exp())
    }

    /// Right-hand side of the inner-front equation for the given face condition.
    pub fn surface_rhs(&self, bc: &BoundarySpec, z: f64) -> f64 {
        match *bc {
            BoundarySpec::Robin { h0, a_inf } => self.t_func(z, h0, a_inf),
            BoundarySpec::Dirichlet { a } => self.v_func(z, a),
            BoundarySpec::Neumann { q0 } => self.p_func(z, q0),
        }
    }

    /// `Q(z) − G(inner(z))`: strictly increasing on `(z₀, ∞)`; its root is
    /// the outer coefficient.
    ///
    /// Far out, where `1 − H(z)` underflows, the inner coefficient is
    /// unbounded and the residual is reported as `+∞`.
    pub fn front_residual(&self, bc: &BoundarySpec, z: f64) -> Result<f64> {
        if z > self.z0 && self.h_complement(z) == 0.0 {
            return Ok(f64::INFINITY);
        }
        Ok(self.q_func(z) - self.surface_rhs(bc, self.inner_coefficient(z)?))
    }

    /// Solves the front equation on `(z₀, ∞)` for the outer coefficient.
    pub fn solve_outer(&self, bc: &BoundarySpec) -> Result<f64> {
        let lo = self.z0 + Z0_OFFSET;
        let mut failure = None;
        let root = find_root_monotone(
            |z| match self.front_residual(bc, z) {
                // overflow far out still carries the sign
                Ok(v) if v.is_infinite() => f64::MAX.copysign(v),
                Ok(v) => v,
                Err(e) => {
                    failure.get_or_insert(e);
                    f64::NAN
                }
            },
            lo,
            UpperBracket::Doubling(self.z0.max(1.0)),
            FRONT_TOLERANCE,
        );
        if let Some(e) = failure {
            return Err(e);
        }
        Ok(root?)
    }
}

/// The unique positive zero of `H`, bracketed from `[0, 1]` by doubling.
pub fn solve_z0(ctx: &ProblemContext) -> Result<f64> {
    let h0 = ctx.h_func(0.0);
    if !(h0 < 0.0) {
        return Err(Error::Domain(format!("H(0) = {h0} is not negative")));
    }
    Ok(find_root_monotone(
        |z| ctx.h_func(z),
        0.0,
        UpperBracket::Doubling(1.0),
        Z0_TOLERANCE,
    )?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::presets;

    fn reference() -> ProblemContext {
        ProblemContext::new(presets::material(), presets::temps()).unwrap()
    }

    #[test]
    fn phi_at_origin() {
        let ctx = reference();
        assert!((ctx.phi(0.0) - 0.05 / PI.sqrt()).abs() < 1e-17);
        assert!((ctx.phi(0.0) - 0.028_209_479_177_387_815).abs() < 1e-16);
    }

    #[test]
    fn phi_is_finite_far_out() {
        let ctx = reference();
        for z in [5.9, 6.0, 6.1, 30.0, 1e3] {
            let v = ctx.phi(z);
            assert!(v.is_finite() && v > z, "phi({z}) = {v}");
        }
    }

    #[test]
    fn h_at_origin_uses_both_stefan_numbers() {
        let ctx = reference();
        let p = ctx.props();
        let ste = ctx.stefan_numbers();
        let expected = -(ste.ste2 / ste.ste1) * (p.l2 / p.l1) * (p.k2 * p.c1 / (p.k1 * p.c2)).sqrt();
        assert!((ctx.h_func(0.0) - expected).abs() < 1e-15);
        assert!(ctx.h_func(0.0) < 0.0);
        assert!((ctx.h_func(40.0) - 1.0).abs() < 1e-15);
    }

    #[test]
    fn z0_is_a_zero_of_h() {
        let ctx = reference();
        assert!(ctx.z0() > 0.0);
        assert!(ctx.h_func(ctx.z0()).abs() <= Z0_TOLERANCE);
    }

    #[test]
    fn q_at_origin() {
        let ctx = reference();
        assert!((ctx.q_func(0.0) - 160.0 / 150.0 * 0.05 / PI.sqrt()).abs() < 1e-15);
        assert!((ctx.q_func(0.0) - 0.030_090_111_122_547_002).abs() < 1e-14);
        assert!(ctx.q_func(10.0) > ctx.q_func(5.0) && ctx.q_func(5.0) > ctx.q_func(1.0));
    }

    #[test]
    fn p_at_origin() {
        let ctx = reference();
        let expected = 300.0 / 150.0 * (2.0_f64 / (770.0 * 0.2)).sqrt();
        assert!((ctx.p_func(0.0, 300.0) - expected).abs() < 1e-15);
        assert!((ctx.p_func(0.0, 300.0) - 0.227_921_152_919_275_9).abs() < 1e-12);
        assert!(ctx.p_func(5.0, 300.0) < 0.0);
    }

    #[test]
    fn v_blows_up_near_zero_and_falls_far_out() {
        let ctx = reference();
        assert!(ctx.v_func(1e-9, 331.0) > 1e6);
        assert!(ctx.v_func(3.0, 331.0) < ctx.v_func(2.0, 331.0));
        assert!(ctx.v_func(6.0, 331.0) < -1e3);
    }

    #[test]
    fn t_tends_to_v_as_h0_grows() {
        let ctx = reference();
        for z in [0.05, 0.1, 0.5] {
            let t = ctx.t_func(z, 1e12, 334.0);
            let v = ctx.v_func(z, 334.0);
            assert!(((t - v) / v).abs() < 1e-8, "z = {z}: {t} vs {v}");
        }
    }

    #[test]
    fn u_requires_z_above_z0() {
        let ctx = reference();
        assert!(ctx.u_func(ctx.z0(), 100.0, 334.0).is_err());
        assert!(ctx.u_func(0.5 * ctx.z0(), 100.0, 334.0).is_err());
        let u = ctx.u_func(ctx.z0() + 1e-9, 100.0, 334.0).unwrap();
        assert!(u.is_finite() && u > 0.0);
    }

    #[test]
    fn complement_matches_h_and_stays_positive() {
        let ctx = reference();
        for z in [0.0, 0.1, 0.5, 1.0, 2.0] {
            assert!((ctx.h_complement(z) - (1.0 - ctx.h_func(z))).abs() < 1e-15);
        }
        assert!(ctx.h_func(8.0) == 1.0 && ctx.h_complement(8.0) > 0.0);
        let far = ctx.inner_coefficient(8.0).unwrap();
        assert!(far > 7.9 && far < 8.0);
    }

    #[test]
    fn u_decreases_past_saturation() {
        let ctx = reference();
        let z0 = ctx.z0();
        let mut prev = f64::INFINITY;
        for i in 1..=1000 {
            let u = ctx.u_func(z0 + 8.0 * i as f64 / 1000.0, 100.0, 334.0).unwrap();
            assert!(u < prev, "{i}");
            prev = u;
        }
    }
}
