//! Suite configuration, read from TOML. Every field is optional; an empty
//! file gives the default suite.
//!
//! ```toml
//! rel_tol = 1e-12            # quadrature tolerance of the evaluators
//! identities = ["recurrence", "mellin"]
//!
//! [grid]
//! alpha = [0.5, 1.0, 2.0]
//! z = [-2.0, -0.5, 0.0, 0.5, 2.0]
//! pq_pairs = "p-le-q"        # or "all"
//!
//! [tolerances]
//! recurrence = 1e-9
//! ```

use std::path::Path;

use serde::{Deserialize, Serialize};

use super::IDENTITY_IDS;
use crate::error::{domain, Error, Result};
use crate::mlcore::MLParams;
use crate::numcore::{QuadConfig, Scheme, SeriesConfig};

/// Which `(p, q)` combinations of the `p` and `q` lists enter the grid.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum PqPairs {
    /// pairs with `p <= q`
    #[default]
    PLeQ,
    /// the full product
    All,
}

/// Parameter lists whose product is the grid of `(MLParams, z)` tuples.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct GridSpec {
    pub alpha: Vec<f64>,
    pub beta: Vec<f64>,
    pub gamma: Vec<f64>,
    pub c: Vec<f64>,
    pub p: Vec<f64>,
    pub q: Vec<f64>,
    pub z: Vec<f64>,
    pub pq_pairs: PqPairs,
}

impl Default for GridSpec {
    fn default() -> Self {
        Self {
            alpha: vec![0.5, 1.0, 2.0],
            beta: vec![0.5, 1.0, 2.0],
            gamma: vec![1.2],
            c: vec![2.5],
            p: vec![0.0, 0.25, 1.0],
            q: vec![0.0, 0.25, 1.0],
            z: vec![-2.0, -0.5, 0.0, 0.5, 2.0],
            pq_pairs: PqPairs::PLeQ,
        }
    }
}

impl GridSpec {
    /// The default grid with more orders, shifts and arguments.
    pub fn extended() -> Self {
        Self {
            alpha: vec![0.5, 0.75, 1.0, 1.5, 2.0],
            beta: vec![0.5, 1.0, 1.5, 2.0],
            gamma: vec![0.7, 1.2],
            c: vec![1.9, 2.5],
            p: vec![0.0, 0.25, 1.0, 2.0],
            q: vec![0.0, 0.25, 1.0, 2.0],
            z: vec![-2.0, -1.0, -0.5, 0.0, 0.5, 1.0, 2.0],
            pq_pairs: PqPairs::All,
        }
    }

    /// A grid holding exactly one tuple.
    pub fn single(params: MLParams, z: f64) -> Self {
        Self {
            alpha: vec![params.alpha],
            beta: vec![params.beta],
            gamma: vec![params.gamma],
            c: vec![params.c],
            p: vec![params.p],
            q: vec![params.q],
            z: vec![z],
            pq_pairs: PqPairs::All,
        }
    }

    pub fn validate(&self) -> Result<()> {
        let lists = [
            ("alpha", &self.alpha),
            ("beta", &self.beta),
            ("gamma", &self.gamma),
            ("c", &self.c),
            ("p", &self.p),
            ("q", &self.q),
            ("z", &self.z),
        ];
        for (name, list) in lists {
            if list.is_empty() {
                return Err(domain(format!("grid.{name} is empty")));
            }
            if list.iter().any(|v| !v.is_finite()) {
                return Err(domain(format!("grid.{name} contains a non-finite value")));
            }
        }
        for &a in &self.alpha {
            for &b in &self.beta {
                for &g in &self.gamma {
                    for &c in &self.c {
                        for &(p, q) in &self.pq() {
                            MLParams::new(a, b, g, c, p, q)?;
                        }
                    }
                }
            }
        }
        if self.pq().is_empty() {
            return Err(domain("grid has no (p, q) pair with p <= q"));
        }
        Ok(())
    }

    fn pq(&self) -> Vec<(f64, f64)> {
        let mut out = Vec::new();
        for &p in &self.p {
            for &q in &self.q {
                if self.pq_pairs == PqPairs::All || p <= q {
                    out.push((p, q));
                }
            }
        }
        out
    }

    /// Parameter sets in grid order (`z` excluded).
    pub fn param_sets(&self) -> Vec<MLParams> {
        let mut out = Vec::new();
        for &alpha in &self.alpha {
            for &beta in &self.beta {
                for &gamma in &self.gamma {
                    for &c in &self.c {
                        for &(p, q) in &self.pq() {
                            out.push(MLParams { alpha, beta, gamma, c, p, q });
                        }
                    }
                }
            }
        }
        out
    }

    pub fn len(&self) -> usize {
        self.param_sets().len() * self.z.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// Acceptance tolerance of each identity.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct Tolerances {
    pub reduction_chain: f64,
    pub integral_representations: f64,
    pub recurrence: f64,
    pub mellin: f64,
    pub frac_integral_image: f64,
    pub derivative_shift: f64,
    pub power_derivative: f64,
    pub extended_beta: f64,
    pub wright_exponential: f64,
    pub wright_prabhakar: f64,
    pub power_rule: f64,
    pub kernel_collapse: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Self {
            reduction_chain: 1e-10,
            integral_representations: 1e-8,
            recurrence: 1e-9,
            mellin: 1e-5,
            frac_integral_image: 1e-6,
            derivative_shift: 1e-8,
            power_derivative: 1e-8,
            extended_beta: 1e-10,
            wright_exponential: 1e-12,
            wright_prabhakar: 1e-10,
            power_rule: 1e-8,
            kernel_collapse: 1e-10,
        }
    }
}

/// Mellin sweep: `alpha × beta × gamma_c × points × z`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct MellinGrid {
    pub alpha: Vec<f64>,
    pub beta: Vec<f64>,
    pub gamma_c: Vec<[f64; 2]>,
    /// `(s, r)` points
    pub points: Vec<[f64; 2]>,
    pub z: Vec<f64>,
    /// Also integrate the diagonal `p = q` directly (slow).
    pub diagonal: bool,
    /// Also run the full double quadrature at one point (slow).
    pub brute_force: bool,
}

impl Default for MellinGrid {
    fn default() -> Self {
        Self {
            alpha: vec![0.5, 1.0, 2.0],
            beta: vec![0.5, 1.0],
            gamma_c: vec![[1.2, 2.5], [0.7, 1.9]],
            points: vec![[1.0, 1.0], [1.5, 2.0], [0.8, 1.2]],
            z: vec![0.0, 0.25, 0.5],
            diagonal: true,
            brute_force: true,
        }
    }
}

/// Fractional-integral image sweep: `delta × lambda × pq` at fixed `alpha`,
/// `beta`, `z`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct FracGrid {
    pub delta: Vec<f64>,
    pub lambda: Vec<f64>,
    pub pq: Vec<[f64; 2]>,
    pub alpha: f64,
    pub beta: f64,
    pub z: f64,
    /// Tuples with `lambda - delta` below this are left out.
    pub min_gap: f64,
    /// Input index used for the free-index variant is `lambda + printed_c_offset`.
    pub printed_c_offset: f64,
}

impl Default for FracGrid {
    fn default() -> Self {
        Self {
            delta: vec![0.6, 1.2, 1.8],
            lambda: vec![2.0, 2.5, 3.2],
            pq: vec![[0.3, 0.7], [1.0, 0.25]],
            alpha: 1.0,
            beta: 1.5,
            z: 0.8,
            min_gap: 0.05,
            printed_c_offset: 0.5,
        }
    }
}

/// Derivative sweep: `alpha × beta × gamma_c × pq × z × mu`, each at every
/// order in `n`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct DerivativeGrid {
    pub alpha: Vec<f64>,
    pub beta: Vec<f64>,
    pub gamma_c: Vec<[f64; 2]>,
    pub pq: Vec<[f64; 2]>,
    pub z: Vec<f64>,
    /// argument scale in `z^{β-1} E(μ z^α)`
    pub mu: Vec<f64>,
    pub n: Vec<u32>,
}

impl Default for DerivativeGrid {
    fn default() -> Self {
        Self {
            alpha: vec![0.5, 0.8, 1.0, 1.5, 2.0],
            beta: vec![1.3],
            gamma_c: vec![[1.2, 2.5], [0.8, 1.7]],
            pq: vec![[0.0, 0.0], [0.3, 0.6]],
            z: vec![0.6],
            mu: vec![0.7],
            n: vec![1, 2, 3],
        }
    }
}

/// Whole-suite configuration.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct SuiteConfig {
    /// Quadrature relative tolerance of every evaluator.
    pub rel_tol: f64,
    pub abs_tol: f64,
    pub scheme: Scheme,
    /// Series truncation tolerance.
    pub series_rel_tol: f64,
    /// Identity ids to run; empty runs all.
    pub identities: Vec<String>,
    pub grid: GridSpec,
    pub tolerances: Tolerances,
    pub mellin: MellinGrid,
    pub frac: FracGrid,
    pub derivative: DerivativeGrid,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        Self {
            rel_tol: 1e-12,
            abs_tol: 1e-15,
            scheme: Scheme::AdaptiveKronrod,
            series_rel_tol: 1e-14,
            identities: Vec::new(),
            grid: GridSpec::default(),
            tolerances: Tolerances::default(),
            mellin: MellinGrid::default(),
            frac: FracGrid::default(),
            derivative: DerivativeGrid::default(),
        }
    }
}

impl SuiteConfig {
    pub fn parse(text: &str) -> Result<Self> {
        let cfg: Self = toml::from_str(text).map_err(|e| domain(format!("invalid config: {e}")))?;
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|source| Error::Io { path: path.to_path_buf(), source })?;
        Self::parse(&text).map_err(|e| Error::Config {
            path: path.to_path_buf(),
            message: match e {
                Error::Domain(m) => m,
                other => other.to_string(),
            },
        })
    }

    pub fn quad(&self) -> QuadConfig {
        QuadConfig { rel_tol: self.rel_tol, abs_tol: self.abs_tol, scheme: self.scheme, ..QuadConfig::default() }
    }

    pub fn series(&self) -> SeriesConfig {
        SeriesConfig { rel_tol: self.series_rel_tol, ..SeriesConfig::default() }
    }

    pub fn validate(&self) -> Result<()> {
        self.quad().validate()?;
        self.series().validate()?;
        self.grid.validate()?;
        for id in &self.identities {
            if !IDENTITY_IDS.contains(&id.as_str()) {
                return Err(domain(format!("unknown identity {id:?}; known ids: {}", IDENTITY_IDS.join(", "))));
            }
        }
        let m = &self.mellin;
        if [m.alpha.len(), m.beta.len(), m.gamma_c.len(), m.points.len(), m.z.len()].contains(&0) {
            return Err(domain("mellin grid has an empty list"));
        }
        let f = &self.frac;
        if [f.delta.len(), f.lambda.len(), f.pq.len()].contains(&0) {
            return Err(domain("frac grid has an empty list"));
        }
        let d = &self.derivative;
        if [d.alpha.len(), d.beta.len(), d.gamma_c.len(), d.pq.len(), d.z.len(), d.mu.len(), d.n.len()].contains(&0) {
            return Err(domain("derivative grid has an empty list"));
        }
        if d.z.iter().any(|&z| !(z > 0.0)) {
            return Err(domain("derivative.z values must be positive"));
        }
        if !(f.z > 0.0) {
            return Err(domain("frac.z must be positive"));
        }
        Ok(())
    }

    pub fn selected(&self, id: &str) -> bool {
        self.identities.is_empty() || self.identities.iter().any(|s| s == id)
    }
}
