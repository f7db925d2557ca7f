//! Registry of identities satisfied by `Γ_{a,r}`, `sin_{a,r}` and `Ψ_{a,r}`.
//!
//! Each entry evaluates both sides through closed forms and knows which
//! affine arguments must stay away from poles, so that a grid can be
//! screened before evaluation.

use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::{
    beta_ratio, beta_ratio_alt, duplication_constant, gamma_ar, gamma_ar_at_r, gamma_ar_constant,
    gamma_ar_real, gamma_neg_squared, mu_ar, multiplication_constant,
    multiplication_constant_product, psi_ar, shift_constants, shift_q_alt, sin_ar, triple_constant,
    triple_constant_closed, ArithParams,
};
use crate::classical::{
    cos_pi, digamma, gamma_fn, gamma_real, ln_gamma_abs, near_nonpositive_integer_within,
    pow_real_base, sin_pi, EULER_GAMMA,
};
use crate::{rel_residual, GammaError, Result};

macro_rules! identities {
    ($($variant:ident => $name:literal),* $(,)?) => {
        #[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
        pub enum IdentityId {
            $($variant),*
        }

        impl IdentityId {
            /// Every identity, in registry order.
            pub const ALL: &'static [IdentityId] = &[$(IdentityId::$variant),*];

            pub fn name(self) -> &'static str {
                match self {
                    $(IdentityId::$variant => $name),*
                }
            }
        }

        impl FromStr for IdentityId {
            type Err = GammaError;

            fn from_str(s: &str) -> Result<Self> {
                match s {
                    $($name => Ok(IdentityId::$variant),)*
                    other => Err(GammaError::UnknownIdentity(other.to_string())),
                }
            }
        }
    };
}

identities! {
    ScaleSeq => "scale_seq",
    SquareSeq => "square_seq",
    Recurrence => "recurrence",
    Complement => "complement",
    Duplication => "duplication",
    Multiplication => "multiplication",
    Triple => "triple",
    PsiRecurrence => "psi_recurrence",
    Split => "split",
    BetaRatioForms => "beta_ratio_forms",
    Shift => "shift",
    Rescale => "rescale",
    ReciprocalSin => "reciprocal_sin",
    AaSin => "aa_sin",
    AaConst => "aa_const",
    AaClosed => "aa_closed",
    AaRecurrence => "aa_recurrence",
    AaComplement => "aa_complement",
    AaCrossscale => "aa_crossscale",
    AaPsi => "aa_psi",
    SinScale => "sin_scale",
    SinShiftR => "sin_shift_r",
    SinShiftHalf => "sin_shift_half",
    SinReflectHalf => "sin_reflect_half",
    SinMult => "sin_mult",
    SinDouble => "sin_double",
    ClassicalSinCos => "classical_sin_cos",
    EulerRelation => "euler_relation",
}

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl Serialize for IdentityId {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(self.name())
    }
}

impl<'de> Deserialize<'de> for IdentityId {
    fn deserialize<D: serde::Deserializer<'de>>(
        deserializer: D,
    ) -> std::result::Result<Self, D::Error> {
        let name = String::deserialize(deserializer)?;
        name.parse().map_err(serde::de::Error::custom)
    }
}

impl IdentityId {
    /// Names of the extra parameters the identity reads.
    pub fn required_extras(self) -> &'static [&'static str] {
        use IdentityId::*;
        match self {
            ScaleSeq => &["alpha"],
            Multiplication | Split | SinMult => &["n"],
            BetaRatioForms => &["n", "k"],
            Shift => &["h"],
            SinScale => &["lambda"],
            AaCrossscale => &["b"],
            _ => &[],
        }
    }

    /// Identities that do not depend on `(a, r)`.
    pub fn parameter_free(self) -> bool {
        matches!(
            self,
            IdentityId::ClassicalSinCos | IdentityId::EulerRelation
        )
    }

    /// Identities stated for `a = r` only.
    pub fn needs_equal_params(self) -> bool {
        use IdentityId::*;
        matches!(
            self,
            AaSin | AaConst | AaClosed | AaRecurrence | AaComplement | AaCrossscale | AaPsi
        )
    }

    /// Whether the identity is stated for `p` with these extras; the error
    /// says why not.
    pub fn check_applicable(self, p: &ArithParams, extra: &Extra) -> Result<()> {
        use IdentityId::*;
        if self.parameter_free() {
            return Ok(());
        }
        p.validate()?;
        let (a, r) = (p.a(), p.r());
        let fail = |why: String| {
            Err(GammaError::Domain(format!(
                "{self} at (a, r) = ({a}, {r}): {why}"
            )))
        };
        if self.needs_equal_params() && (a - r).abs() > 1e-12 * a.abs().max(1.0) {
            return fail("requires a = r".into());
        }
        match self {
            SquareSeq if !(r > 0.0 && a > 1.0) => {
                fail("requires r > 0 and a > 1 so that every a_n > 1".into())
            }
            ScaleSeq => {
                let alpha = extra.require_alpha(self)?;
                if !(alpha > 0.0) || r < 0.0 {
                    return fail(format!("requires alpha > 0 and r > 0, got alpha = {alpha}"));
                }
                Ok(())
            }
            Multiplication | Split | SinMult => extra.require_n(self).map(|_| ()),
            BetaRatioForms => {
                let (n, k) = (extra.require_n(self)?, extra.require_k(self)?);
                if !(n >= 2 && k >= 1 && k < n) {
                    return fail(format!("requires 1 <= k <= n - 1, got n = {n}, k = {k}"));
                }
                Ok(())
            }
            Shift => {
                let h = extra.require_h(self)?;
                ArithParams::new(a - h, r)
                    .map(|_| ())
                    .or_else(|_| fail(format!("h = {h} leaves a - h invalid")))
            }
            SinScale => {
                let lambda = extra.require_lambda(self)?;
                if lambda == 0.0 || !lambda.is_finite() {
                    return fail("requires lambda != 0".into());
                }
                Ok(())
            }
            AaCrossscale => {
                let b = extra.require_b(self)?;
                if !(b > 0.0 && b.is_finite()) {
                    return fail(format!("requires b > 0, got {b}"));
                }
                Ok(())
            }
            SinReflectHalf if (a - r / 2.0).abs() <= 1e-12 * a.abs().max(1.0) => {
                fail("requires a != r/2".into())
            }
            _ => Ok(()),
        }
    }
}

/// Identity-specific parameters; absent fields are not serialized.
#[derive(Debug, Clone, Copy, Default, PartialEq, Serialize, Deserialize)]
pub struct Extra {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lambda: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub h: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub b: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub alpha: Option<f64>,
}

fn missing(id: IdentityId, field: &str) -> GammaError {
    GammaError::Domain(format!("identity {id} needs the extra parameter `{field}`"))
}

impl Extra {
    pub fn with_n(n: u32) -> Self {
        Self {
            n: Some(n),
            ..Self::default()
        }
    }

    pub fn with_nk(n: u32, k: u32) -> Self {
        Self {
            n: Some(n),
            k: Some(k),
            ..Self::default()
        }
    }

    pub fn with_lambda(lambda: f64) -> Self {
        Self {
            lambda: Some(lambda),
            ..Self::default()
        }
    }

    pub fn with_h(h: f64) -> Self {
        Self {
            h: Some(h),
            ..Self::default()
        }
    }

    pub fn with_b(b: f64) -> Self {
        Self {
            b: Some(b),
            ..Self::default()
        }
    }

    pub fn with_alpha(alpha: f64) -> Self {
        Self {
            alpha: Some(alpha),
            ..Self::default()
        }
    }

    pub fn is_empty(&self) -> bool {
        *self == Self::default()
    }

    fn require_n(&self, id: IdentityId) -> Result<u32> {
        match self.n {
            Some(n) if n >= 1 => Ok(n),
            Some(_) => Err(GammaError::Domain(format!("identity {id} needs n >= 1"))),
            None => Err(missing(id, "n")),
        }
    }

    fn require_k(&self, id: IdentityId) -> Result<u32> {
        self.k.ok_or_else(|| missing(id, "k"))
    }

    fn require_lambda(&self, id: IdentityId) -> Result<f64> {
        self.lambda.ok_or_else(|| missing(id, "lambda"))
    }

    fn require_h(&self, id: IdentityId) -> Result<f64> {
        self.h.ok_or_else(|| missing(id, "h"))
    }

    fn require_b(&self, id: IdentityId) -> Result<f64> {
        self.b.ok_or_else(|| missing(id, "b"))
    }

    fn require_alpha(&self, id: IdentityId) -> Result<f64> {
        self.alpha.ok_or_else(|| missing(id, "alpha"))
    }
}

/// A place an identity cannot be evaluated.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Critical {
    /// `scale·s + offset` must avoid `0, −1, −2, …` (a gamma pole, or a
    /// zero of a `sin_{a,r}` in a denominator).
    GammaArg { scale: f64, offset: f64 },
    /// `s` must avoid this point (a vanishing denominator).
    Point(f64),
}

impl Critical {
    /// Distance in the `s` plane from `s` to the nearest excluded point.
    pub fn distance(&self, s: Complex64) -> f64 {
        match *self {
            Critical::Point(c) => (s - c).norm(),
            Critical::GammaArg { scale, offset } => {
                let z = scale * s + offset;
                if scale == 0.0 {
                    return if near_nonpositive_integer_within(z, 0.0) {
                        0.0
                    } else {
                        f64::INFINITY
                    };
                }
                let m = (-z.re).round().max(0.0);
                (z + m).norm() / scale.abs()
            }
        }
    }
}

/// Affine arguments of the identity's terms that must avoid poles.
pub fn critical_args(id: IdentityId, p: &ArithParams, extra: &Extra) -> Result<Vec<Critical>> {
    use IdentityId::*;
    id.check_applicable(p, extra)?;
    let (a, r) = (p.a(), p.r());
    let x0 = p.x0();
    // Γ_{a,r}(c·s + d)
    let ga = |c: f64, d: f64| Critical::GammaArg {
        scale: c / r,
        offset: (d + a) / r,
    };
    // zeros of sin_{a,r}(s)
    let sin_zeros = [
        Critical::GammaArg {
            scale: 1.0 / r,
            offset: x0,
        },
        Critical::GammaArg {
            scale: -1.0 / r,
            offset: x0,
        },
    ];
    let mut out = Vec::new();
    match id {
        ScaleSeq => out.push(ga(extra.require_alpha(id)?, 0.0)),
        SquareSeq => {
            out.push(ga(1.0, 0.0));
            out.extend(sin_zeros);
        }
        Recurrence | PsiRecurrence => out.extend([ga(1.0, r), ga(1.0, 0.0)]),
        Complement => {
            out.extend([ga(1.0, 0.0), ga(-1.0, r)]);
            out.extend(sin_zeros);
        }
        Duplication => out.extend([ga(1.0, 0.0), ga(1.0, r / 2.0), ga(2.0, a)]),
        Multiplication => {
            let n = f64::from(extra.require_n(id)?);
            for k in 0..extra.require_n(id)? {
                out.push(ga(1.0, f64::from(k) * r / n));
            }
            out.push(ga(n, (n - 1.0) * a));
        }
        Triple => {
            for k in 0..3 {
                out.push(ga(1.0, f64::from(k) * r / 3.0));
            }
            out.push(ga(3.0, 2.0 * a));
        }
        Split => {
            let n = extra.require_n(id)?;
            let big_r = f64::from(n) * r;
            out.push(ga(1.0, 0.0));
            for k in 0..n {
                out.push(Critical::GammaArg {
                    scale: 1.0 / big_r,
                    offset: (a + f64::from(k) * r) / big_r,
                });
            }
        }
        BetaRatioForms => {
            let big_r = f64::from(extra.require_n(id)?) * r;
            let shifted = a + f64::from(extra.require_k(id)?) * r;
            out.extend([
                Critical::GammaArg {
                    scale: 1.0 / big_r,
                    offset: a / big_r,
                },
                Critical::GammaArg {
                    scale: 1.0 / big_r,
                    offset: shifted / big_r,
                },
                Critical::GammaArg {
                    scale: 1.0 / big_r,
                    offset: 0.0,
                },
            ]);
        }
        Shift | Rescale | AaClosed | AaPsi => out.push(ga(1.0, 0.0)),
        ReciprocalSin => out.extend([ga(1.0, 0.0), ga(-1.0, 0.0)]),
        AaSin | ClassicalSinCos => out.push(Critical::Point(0.0)),
        AaConst | SinScale | SinReflectHalf | SinMult | SinDouble => {}
        AaRecurrence => out.extend([ga(1.0, a), ga(1.0, 0.0)]),
        AaComplement => out.extend([
            ga(1.0, 0.0),
            ga(-1.0, a),
            Critical::GammaArg {
                scale: 1.0 / a,
                offset: 0.0,
            },
            Critical::GammaArg {
                scale: -1.0 / a,
                offset: 0.0,
            },
        ]),
        AaCrossscale => out.push(ga(a / extra.require_b(id)?, 0.0)),
        SinShiftR => out.extend([Critical::Point(a - r), Critical::Point(-a)]),
        SinShiftHalf => out.push(Critical::Point(a - r / 2.0)),
        EulerRelation => out.push(Critical::GammaArg {
            scale: 1.0,
            offset: 0.0,
        }),
    }
    Ok(out)
}

fn real(x: f64) -> Complex64 {
    Complex64::new(x, 0.0)
}

fn nonzero(v: Complex64, s: Complex64) -> Result<Complex64> {
    if v == Complex64::new(0.0, 0.0) {
        Err(GammaError::PoleProximity(s))
    } else {
        Ok(v)
    }
}

/// `(LHS, RHS)` pairs of the identity at `s`, each through closed forms.
/// Identities bundling several equations return one pair per equation.
pub fn identity_sides(
    id: IdentityId,
    p: &ArithParams,
    s: Complex64,
    extra: &Extra,
) -> Result<Vec<(Complex64, Complex64)>> {
    use IdentityId::*;
    id.check_applicable(p, extra)?;
    let (a, r) = (p.a(), p.r());
    let x0 = p.x0();
    let g = |u: Complex64| gamma_ar(p, u);
    let sin = |u: Complex64| sin_ar(p, u);
    let sin_at = |a2: f64, r2: f64, u: Complex64| sin_ar(&ArithParams::new_unchecked(a2, r2), u);
    let pairs = match id {
        ScaleSeq => {
            let alpha = extra.require_alpha(id)?;
            let g_alpha = gamma_ar_real(p, alpha)?;
            let scaled = ArithParams::new(a / alpha, r / alpha)?;
            vec![(
                g(alpha * s)?,
                pow_real_base(g_alpha, s)? * gamma_ar(&scaled, s)?,
            )]
        }
        SquareSeq => {
            let mu = mu_ar(p)?;
            let neg = ArithParams::new(-a, -r)?;
            let t = s * s;
            let rhs = pow_real_base(mu, s - t)? * gamma_neg_squared(p, t)?
                / nonzero(gamma_ar(&neg, s)?, s)?;
            vec![(g(s)?, rhs)]
        }
        Recurrence => {
            let alpha = super::alpha_const(p)?;
            vec![(g(s + r)?, alpha.powf(r) * (s + a) / r * g(s)?)]
        }
        Complement => {
            let rhs = (1.0 - s / a) * gamma_ar_at_r(p)? / nonzero(sin(s)?, s)?;
            vec![(g(s)? * g(r - s)?, rhs)]
        }
        Duplication => {
            let c = duplication_constant(p)?;
            let direct = gamma_ar_real(p, r / 2.0)? / gamma_ar_real(p, a)?;
            let lhs = pow_real_base(2.0, 2.0 * s / r)? * g(s)? * g(s + r / 2.0)?;
            vec![(lhs, c * g(2.0 * s + a)?), (real(c), real(direct))]
        }
        Multiplication => {
            let n = extra.require_n(id)?;
            let nf = f64::from(n);
            let k_closed = multiplication_constant(p, n)?;
            let k_product = multiplication_constant_product(p, n)?;
            let mut lhs = pow_real_base(nf, nf * s / r)?;
            for k in 0..n {
                lhs *= g(s + f64::from(k) * r / nf)?;
            }
            vec![
                (lhs, k_closed * g(nf * s + (nf - 1.0) * a)?),
                (real(k_closed), real(k_product)),
            ]
        }
        Triple => {
            let cte = triple_constant(p)?;
            let rhs = cte
                * pow_real_base(3.0, 3.0 * s / r)?
                * g(s)?
                * g(s + r / 3.0)?
                * g(s + 2.0 * r / 3.0)?;
            vec![
                (g(3.0 * s + 2.0 * a)?, rhs),
                (real(cte), real(triple_constant_closed(p)?)),
            ]
        }
        PsiRecurrence => vec![(psi_ar(p, s + r)? - psi_ar(p, s)?, (s + a).inv())],
        Split => {
            let n = extra.require_n(id)?;
            let big_r = f64::from(n) * r;
            let mut rhs = real(1.0);
            for k in 0..n {
                rhs *= gamma_ar(&ArithParams::new(a + f64::from(k) * r, big_r)?, s)?;
            }
            vec![(g(s)?, rhs)]
        }
        BetaRatioForms => {
            let (n, k) = (extra.require_n(id)?, extra.require_k(id)?);
            let big_r = f64::from(n) * r;
            let num = gamma_ar(&ArithParams::new(a, big_r)?, s)?;
            let den = gamma_ar(&ArithParams::new(a + f64::from(k) * r, big_r)?, s)?;
            let direct = num / nonzero(den, s)?;
            vec![
                (beta_ratio(p, n, k, s)?, direct),
                (beta_ratio_alt(p, n, k, s)?, direct),
            ]
        }
        Shift => {
            let h = extra.require_h(id)?;
            let (c, q) = shift_constants(p, h)?;
            let shifted = ArithParams::new(a - h, r)?;
            let mut pairs = vec![(gamma_ar(&shifted, s + h)?, c * pow_real_base(q, s)? * g(s)?)];
            if !near_nonpositive_integer_within(real(-h / r), 1e-6) {
                pairs.push((real(shift_q_alt(p, h)?), real(q)));
            }
            pairs
        }
        Rescale => {
            let base = gamma_ar_at_r(p)? / x0;
            let rhs = pow_real_base(base, s / r)? * gamma_fn(s / r + x0)? / gamma_real(x0)?;
            vec![(g(s)?, rhs)]
        }
        ReciprocalSin => vec![(sin(s)?, (g(s)? * g(-s)?).inv())],
        AaSin => vec![(sin(s)?, a * sin_pi(s / a) / (PI * s))],
        AaConst => {
            let closed = EULER_GAMMA / a + ln_gamma_abs(1.0 + 1.0 / a)?;
            vec![(real(gamma_ar_constant(p)?), real(closed))]
        }
        AaClosed => {
            let base = gamma_real(1.0 + 1.0 / a)?;
            vec![(g(s)?, gamma_fn(1.0 + s / a)? / pow_real_base(base, s)?)]
        }
        AaRecurrence => {
            let factor = gamma_real(1.0 + 1.0 / a)?.powf(-a);
            vec![(g(s + a)?, factor * (s + a) / a * g(s)?)]
        }
        AaComplement => {
            let factor = gamma_real(1.0 + 1.0 / a)?.powf(-a);
            let u = s / a;
            let rhs = factor * (1.0 - u) * PI * u / nonzero(sin_pi(u), s)?;
            vec![(g(s)? * g(a - s)?, rhs)]
        }
        AaCrossscale => {
            let b = extra.require_b(id)?;
            let g_ab = gamma_ar_real(p, a / b)?;
            let rhs = pow_real_base(g_ab, s)? * gamma_ar(&ArithParams::new(b, b)?, s)?;
            vec![(g(a * s / b)?, rhs)]
        }
        AaPsi => {
            let rhs = digamma(1.0 + s / a)? / a - ln_gamma_abs(1.0 + 1.0 / a)?;
            vec![(psi_ar(p, s)?, rhs)]
        }
        SinScale => {
            let lambda = extra.require_lambda(id)?;
            let lhs = sin(s)?;
            vec![
                (lhs, sin_at(lambda * a, lambda * r, lambda * s)?),
                (lhs, sin_at(x0, 1.0, s / r)?),
            ]
        }
        SinShiftR => {
            let y = s / r;
            vec![(sin(s + r)? / (y - x0 + 1.0), -sin(s)? / (y + x0))]
        }
        SinShiftHalf => {
            let y = s / r;
            let ratio = gamma_real(x0)? / gamma_real(x0 + 0.5)?;
            let rhs = -ratio * ratio * sin_at(a + r / 2.0, r, s)?;
            vec![(sin(s + r / 2.0)? / (y - x0 + 0.5), rhs)]
        }
        SinReflectHalf => {
            let low = a - r / 2.0;
            let rhs = (1.0 - s * s / (low * low)) * sin_at(a + r / 2.0, r, s)?;
            vec![(sin_at(low, r, s)?, rhs)]
        }
        SinMult => {
            let n = extra.require_n(id)?;
            let nf = f64::from(n);
            let mut rhs = real(1.0);
            for k in 0..n {
                rhs *= sin_at((a + f64::from(k) * r) / nf, r, s)?;
            }
            vec![(sin(nf * s)?, rhs)]
        }
        SinDouble => vec![(
            sin(2.0 * s)?,
            sin_at(a / 2.0, r, s)? * sin_at(a / 2.0 + r / 2.0, r, s)?,
        )],
        ClassicalSinCos => {
            let s11 = |u: Complex64| sin_at(1.0, 1.0, u);
            let c = |u: Complex64| sin_at(0.5, 1.0, u);
            let half = s + 0.5;
            vec![
                (s11(s)?, sin_pi(s) / (PI * s)),
                (c(s)?, cos_pi(s)),
                (c(s)?, PI * half * s11(half)?),
                (c(s + 1.0)?, -c(s)?),
                (s11(2.0 * s)?, s11(s)? * c(s)?),
                (s11(2.0 * s)?, PI * half * s11(s)? * s11(half)?),
            ]
        }
        EulerRelation => {
            let unit = ArithParams::new(1.0, 1.0)?;
            vec![(gamma_ar(&unit, s)? / s, gamma_fn(s)?)]
        }
    };
    Ok(pairs)
}

/// `max |L − R| / max(|L|, |R|, 1)` over the identity's equations at `s`.
pub fn identity_residual(
    id: IdentityId,
    p: &ArithParams,
    s: Complex64,
    extra: &Extra,
) -> Result<f64> {
    let pairs = identity_sides(id, p, s, extra)?;
    Ok(pairs
        .iter()
        .map(|&(l, r)| rel_residual(l, r))
        .fold(0.0, f64::max))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn names_round_trip() {
        for &id in IdentityId::ALL {
            assert_eq!(id.name().parse::<IdentityId>().unwrap(), id);
        }
        assert_eq!(IdentityId::ALL.len(), 28);
        assert!(matches!(
            "bogus".parse::<IdentityId>(),
            Err(GammaError::UnknownIdentity(_))
        ));
    }

    #[test]
    fn spot_residuals() {
        let unit = ArithParams::new(1.0, 1.0).unwrap();
        let none = Extra::default();
        for s in [c(0.3, 0.0), c(-1.7, 0.7), c(2.8, -2.3)] {
            assert!(identity_residual(IdentityId::Recurrence, &unit, s, &none).unwrap() <= 1e-12);
        }
        assert!(
            identity_residual(IdentityId::Complement, &unit, c(0.5, 0.0), &none).unwrap() <= 1e-10
        );
        assert!(
            identity_residual(IdentityId::SinDouble, &unit, c(0.3, 0.0), &none).unwrap() <= 1e-10
        );
    }

    #[test]
    fn missing_extras_are_reported() {
        let unit = ArithParams::new(1.0, 1.0).unwrap();
        let err = identity_residual(
            IdentityId::Multiplication,
            &unit,
            c(0.3, 0.0),
            &Extra::default(),
        );
        assert!(matches!(err, Err(GammaError::Domain(_))));
    }

    #[test]
    fn critical_distance() {
        let crit = Critical::GammaArg {
            scale: 0.5,
            offset: 1.0,
        };
        // zeros at s = −2, −4, …
        assert!((crit.distance(c(-2.1, 0.0)) - 0.1).abs() < 1e-12);
        assert!((crit.distance(c(3.0, 0.0)) - 5.0).abs() < 1e-12);
        assert!((Critical::Point(1.0).distance(c(1.0, 2.0)) - 2.0).abs() < 1e-15);
    }

    #[test]
    fn extra_serializes_present_fields_only() {
        let json = serde_json::to_string(&Extra::with_nk(3, 2)).unwrap();
        assert_eq!(json, r#"{"n":3,"k":2}"#);
        assert_eq!(serde_json::to_string(&Extra::default()).unwrap(), "{}");
    }
}
