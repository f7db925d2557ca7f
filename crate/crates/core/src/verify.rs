//! Runs the identity registry over a fixed complex grid and aggregates the
//! worst residual per identity and parameter set.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::argamma::identities::{critical_args, identity_residual, Extra, IdentityId};
use crate::argamma::ArithParams;
use crate::{GammaError, Result};

/// Residual threshold used by the default suite.
pub const DEFAULT_THRESHOLD: f64 = 1e-8;

/// The standard `(a, r)` parameter sets.
pub const STANDARD_PARAMS: [(f64, f64); 6] = [
    (1.0, 1.0),
    (2.0, 2.0),
    (0.5, 1.0),
    (3.0, 2.0),
    (2.0, 0.5),
    (1.0, 3.0),
];

/// A rectangular grid `re_points × im_points`, screened per identity.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct GridSpec {
    pub re_points: Vec<f64>,
    pub im_points: Vec<f64>,
    /// Minimum distance between a grid point and any excluded point of
    /// the identity under test.
    pub pole_margin: f64,
}

impl Default for GridSpec {
    /// Real parts `−3.7, −3.2, …, 4.3` (never integers or half-integers),
    /// imaginary parts `0, ±0.7, ±2.3`, margin `0.05`.
    fn default() -> Self {
        Self {
            re_points: (0..17).map(|i| -3.7 + 0.5 * f64::from(i)).collect(),
            im_points: vec![0.0, 0.7, -0.7, 2.3, -2.3],
            pole_margin: 0.05,
        }
    }
}

impl GridSpec {
    /// All grid points, real part major.
    pub fn points(&self) -> Vec<Complex64> {
        self.re_points
            .iter()
            .flat_map(|&re| self.im_points.iter().map(move |&im| Complex64::new(re, im)))
            .collect()
    }

    fn validate(&self) -> Result<()> {
        let finite = self
            .re_points
            .iter()
            .chain(&self.im_points)
            .all(|x| x.is_finite());
        if finite && self.pole_margin >= 0.0 {
            Ok(())
        } else {
            Err(GammaError::Domain(
                "grid points must be finite and pole_margin >= 0".into(),
            ))
        }
    }
}

/// Grid points farther than `pole_margin` from every excluded point of the
/// identity's terms, in grid order.
pub fn build_grid(
    spec: &GridSpec,
    id: IdentityId,
    p: &ArithParams,
    extra: &Extra,
) -> Result<Vec<Complex64>> {
    spec.validate()?;
    let critical = critical_args(id, p, extra)?;
    let points: Vec<Complex64> = spec
        .points()
        .into_iter()
        .filter(|&s| critical.iter().all(|c| c.distance(s) > spec.pole_margin))
        .collect();
    if points.is_empty() {
        return Err(GammaError::EmptyGrid);
    }
    Ok(points)
}

/// Outcome of one identity on one parameter set.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct IdentityReport {
    pub identity: String,
    pub a: f64,
    pub r: f64,
    pub extra: Extra,
    pub points_tested: usize,
    /// `None` when the identity could not be evaluated at all.
    pub max_rel_residual: Option<f64>,
    pub threshold: f64,
    pub pass: bool,
    pub worst_point_re: Option<f64>,
    pub worst_point_im: Option<f64>,
    /// Why the identity could not be evaluated.
    #[serde(skip)]
    pub error: Option<String>,
    /// Points that passed the screening but hit a pole during evaluation.
    #[serde(skip)]
    pub excluded_points: Vec<Complex64>,
}

impl IdentityReport {
    fn failed(
        identity: &str,
        a: f64,
        r: f64,
        extra: Extra,
        threshold: f64,
        err: &GammaError,
    ) -> Self {
        Self {
            identity: identity.to_string(),
            a,
            r,
            extra,
            points_tested: 0,
            max_rel_residual: None,
            threshold,
            pass: false,
            worst_point_re: None,
            worst_point_im: None,
            error: Some(err.to_string()),
            excluded_points: Vec::new(),
        }
    }
}

/// Worst residual of `id` over the screened grid.
pub fn run_identity(
    id: IdentityId,
    p: &ArithParams,
    extra: &Extra,
    grid: &GridSpec,
    threshold: f64,
) -> Result<IdentityReport> {
    let points = build_grid(grid, id, p, extra)?;
    let mut worst: Option<(f64, Complex64)> = None;
    let mut excluded = Vec::new();
    let mut tested = 0;
    for s in points {
        match identity_residual(id, p, s, extra) {
            Ok(res) => {
                tested += 1;
                let res = if res.is_nan() { f64::INFINITY } else { res };
                if worst.is_none_or(|(w, _)| res > w) {
                    worst = Some((res, s));
                }
            }
            Err(GammaError::PoleProximity(_)) => excluded.push(s),
            Err(e) => return Err(e),
        }
    }
    let (max_res, at) = worst.ok_or(GammaError::EmptyGrid)?;
    Ok(IdentityReport {
        identity: id.name().to_string(),
        a: p.a(),
        r: p.r(),
        extra: *extra,
        points_tested: tested,
        max_rel_residual: Some(max_res),
        threshold,
        pass: max_res <= threshold,
        worst_point_re: Some(at.re),
        worst_point_im: Some(at.im),
        error: None,
        excluded_points: excluded,
    })
}

/// The extras each identity runs with in the default suite.
pub fn default_extras(id: IdentityId) -> Vec<Extra> {
    use IdentityId::*;
    match id {
        ScaleSeq => [0.5, 2.0, 3.0].map(Extra::with_alpha).to_vec(),
        Multiplication => [2, 3, 4].map(Extra::with_n).to_vec(),
        Split | SinMult => [2, 3].map(Extra::with_n).to_vec(),
        BetaRatioForms => [(2, 1), (3, 1), (3, 2)]
            .map(|(n, k)| Extra::with_nk(n, k))
            .to_vec(),
        Shift => [0.25, 0.5].map(Extra::with_h).to_vec(),
        SinScale => [0.5, 2.5].map(Extra::with_lambda).to_vec(),
        AaCrossscale => [3.0, 0.5].map(Extra::with_b).to_vec(),
        _ => vec![Extra::default()],
    }
}

fn restrict_extra(id: IdentityId, extra: &Extra) -> Option<Extra> {
    let mut out = Extra::default();
    for &field in id.required_extras() {
        match field {
            "n" => out.n = Some(extra.n?),
            "k" => out.k = Some(extra.k?),
            "lambda" => out.lambda = Some(extra.lambda?),
            "h" => out.h = Some(extra.h?),
            "b" => out.b = Some(extra.b?),
            "alpha" => out.alpha = Some(extra.alpha?),
            _ => unreachable!("unknown extra field {field}"),
        }
    }
    Some(out)
}

/// Which identities, parameter sets and extras a suite run covers.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct SuiteConfig {
    /// Identity names; `None` or `["all"]` selects the whole registry.
    pub identities: Option<Vec<String>>,
    /// `(a, r)` pairs; `None` selects [`STANDARD_PARAMS`].
    pub params: Option<Vec<(f64, f64)>>,
    /// Overrides the default extras of identities whose required fields it
    /// fills.
    pub extra: Option<Extra>,
    pub grid: GridSpec,
    pub threshold: f64,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        Self {
            identities: None,
            params: None,
            extra: None,
            grid: GridSpec::default(),
            threshold: DEFAULT_THRESHOLD,
        }
    }
}

/// One identity on one parameter set with one choice of extras.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SuiteCase {
    pub id: IdentityId,
    pub params: ArithParams,
    pub extra: Extra,
}

/// The combined outcome of a suite run.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub overall_pass: bool,
    pub reports: Vec<IdentityReport>,
}

enum Selection {
    Known(IdentityId),
    Unknown(String),
}

fn selection(config: &SuiteConfig) -> Vec<Selection> {
    match &config.identities {
        None => IdentityId::ALL
            .iter()
            .map(|&id| Selection::Known(id))
            .collect(),
        Some(names) if names.iter().any(|n| n == "all") => IdentityId::ALL
            .iter()
            .map(|&id| Selection::Known(id))
            .collect(),
        Some(names) => names
            .iter()
            .map(|n| match n.parse() {
                Ok(id) => Selection::Known(id),
                Err(_) => Selection::Unknown(n.clone()),
            })
            .collect(),
    }
}

/// Expands the applicable cases of one identity. Parameter-free identities
/// run once, at `(1, 1)`.
pub fn cases_for(id: IdentityId, config: &SuiteConfig) -> (Vec<SuiteCase>, Option<GammaError>) {
    let params: Vec<(f64, f64)> = if id.parameter_free() {
        vec![(1.0, 1.0)]
    } else {
        config
            .params
            .clone()
            .unwrap_or_else(|| STANDARD_PARAMS.to_vec())
    };
    let extras = match config.extra.as_ref().and_then(|e| restrict_extra(id, e)) {
        Some(e) => vec![e],
        None => default_extras(id),
    };
    let mut cases = Vec::new();
    let mut last_err = None;
    for extra in &extras {
        for &(a, r) in &params {
            let checked =
                ArithParams::new(a, r).and_then(|p| id.check_applicable(&p, extra).map(|_| p));
            match checked {
                Ok(p) => cases.push(SuiteCase {
                    id,
                    params: p,
                    extra: *extra,
                }),
                Err(e) => last_err = Some(e),
            }
        }
    }
    (cases, last_err)
}

/// Runs every selected case in a fixed order. Failures become failed
/// reports; an identity with no applicable case reports why.
pub fn run_all(config: &SuiteConfig) -> SuiteReport {
    let mut reports = Vec::new();
    let (a0, r0) = config
        .params
        .as_ref()
        .and_then(|p| p.first().copied())
        .unwrap_or((1.0, 1.0));
    for sel in selection(config) {
        let id = match sel {
            Selection::Known(id) => id,
            Selection::Unknown(name) => {
                let err = GammaError::UnknownIdentity(name.clone());
                reports.push(IdentityReport::failed(
                    &name,
                    a0,
                    r0,
                    Extra::default(),
                    config.threshold,
                    &err,
                ));
                continue;
            }
        };
        let (cases, err) = cases_for(id, config);
        if cases.is_empty() {
            let err = err.unwrap_or(GammaError::EmptyGrid);
            reports.push(IdentityReport::failed(
                id.name(),
                a0,
                r0,
                Extra::default(),
                config.threshold,
                &err,
            ));
            continue;
        }
        for case in cases {
            let report = run_identity(
                case.id,
                &case.params,
                &case.extra,
                &config.grid,
                config.threshold,
            )
            .unwrap_or_else(|e| {
                IdentityReport::failed(
                    case.id.name(),
                    case.params.a(),
                    case.params.r(),
                    case.extra,
                    config.threshold,
                    &e,
                )
            });
            reports.push(report);
        }
    }
    let overall_pass = !reports.is_empty() && reports.iter().all(|r| r.pass);
    SuiteReport {
        overall_pass,
        reports,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_grid_shape() {
        let g = GridSpec::default();
        assert_eq!(g.points().len(), 85);
        for s in g.points() {
            let twice = 2.0 * s.re;
            assert!((twice - twice.round()).abs() > 0.1, "{s} is a half-integer");
        }
    }

    #[test]
    fn huge_margin_empties_the_grid() {
        let g = GridSpec {
            pole_margin: 10.0,
            ..GridSpec::default()
        };
        let p = ArithParams::new(1.0, 1.0).unwrap();
        let r = build_grid(&g, IdentityId::Recurrence, &p, &Extra::default());
        assert_eq!(r, Err(GammaError::EmptyGrid));
    }

    #[test]
    fn unknown_identity_is_isolated() {
        let config = SuiteConfig {
            identities: Some(vec!["bogus".into(), "euler_relation".into()]),
            ..SuiteConfig::default()
        };
        let out = run_all(&config);
        assert_eq!(out.reports.len(), 2);
        assert!(!out.reports[0].pass);
        assert!(out.reports[1].pass);
        assert!(!out.overall_pass);
    }

    #[test]
    fn identical_configs_give_identical_reports() {
        let config = SuiteConfig {
            identities: Some(vec!["complement".into(), "shift".into()]),
            ..SuiteConfig::default()
        };
        let a = serde_json::to_string(&run_all(&config)).unwrap();
        let b = serde_json::to_string(&run_all(&config)).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn restrict_extra_keeps_required_fields() {
        let e = Extra {
            n: Some(3),
            k: Some(1),
            h: Some(0.5),
            ..Extra::default()
        };
        assert_eq!(
            restrict_extra(IdentityId::Split, &e),
            Some(Extra::with_n(3))
        );
        assert_eq!(restrict_extra(IdentityId::SinScale, &e), None);
        assert_eq!(
            restrict_extra(IdentityId::Recurrence, &e),
            Some(Extra::default())
        );
    }
}
