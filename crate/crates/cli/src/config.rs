//! Scenario files.
//!
//! A scenario file is flat TOML with dotted keys, one scenario per file:
//!
//! ```toml
//! geometry.d_source_node = 10.0
//! geometry.d_node_legit = 10.0
//! geometry.d_node_eve = 20.0
//! geometry.pathloss_exponent = 2.0
//! power.tx_power_dbm = 20.0
//! noise.legit = 1.0
//! noise.eve = 1.0
//! noise.relay = 1.0
//! irs.n_elements = 4
//! fading.alpha_1 = 2
//! fading.beta_1 = 1.0
//! fading.alpha_2 = 2
//! fading.beta_2 = 1.0
//! fading.alpha_3 = 2
//! fading.beta_3 = 1.0
//! relay.gain = "auto"
//! sweep.variable = "tx_power_dbm"
//! sweep.from = 0
//! sweep.to = 50
//! sweep.step = 2
//! sweep.architectures = ["irs", "df", "affg"]
//! sweep.methods = ["analytic"]
//! mc.samples = 1000000
//! mc.seed = 1
//! ```
//!
//! Hop 1 is source to surface/relay, hop 2 reaches the legitimate receiver
//! and hop 3 the eavesdropper; the surface and the relays share them.
//! `relay.*`, `sweep.*` and `mc.*` are optional.

use std::collections::BTreeMap;
use std::fmt;
use std::path::Path;

use toml::{Spanned, Value};
use v2i_secrecy_core::analytic::Method;
use v2i_secrecy_core::channels::{
    Architecture, FadingParams, Geometry, NoisePowers, RelayGain, ScenarioIrs, ScenarioRelay, MAX_INTEGER_SHAPE,
};
use v2i_secrecy_core::montecarlo::{McConfig, DEFAULT_CHUNK_SIZE, MIN_SAMPLES};

use crate::sweep::{SweepSpec, SweepVariable, MAX_GRID_POINTS};

/// Monte Carlo defaults used when the file has no `mc.*` keys.
pub const DEFAULT_SAMPLES: u64 = 1_000_000;
/// Default master seed.
pub const DEFAULT_SEED: u64 = 1;

/// A fully validated scenario file.
#[derive(Debug, Clone, PartialEq)]
pub struct Config {
    /// Surface scenario.
    pub irs: ScenarioIrs,
    /// Relay scenario.
    pub relay: ScenarioRelay,
    /// Optional sweep.
    pub sweep: Option<SweepSpec>,
    /// Simulation settings.
    pub mc: McConfig,
}

/// One invariant violation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    /// Dotted key.
    pub key: String,
    /// 1-based line of the offending value, if the key is present.
    pub line: Option<usize>,
    /// What is wrong.
    pub message: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.line {
            Some(line) => write!(f, "line {line}: `{}`: {}", self.key, self.message),
            None => write!(f, "`{}`: {}", self.key, self.message),
        }
    }
}

/// Why a scenario file was rejected.
#[derive(Debug, thiserror::Error)]
pub enum ConfigError {
    /// The file could not be read.
    #[error("cannot read {path}: {source}")]
    Io {
        /// File path.
        path: String,
        /// Underlying error.
        source: std::io::Error,
    },
    /// The file is not valid TOML of the expected shape.
    #[error("syntax error: {0}")]
    Syntax(String),
    /// Every invariant violation found.
    #[error("{} invalid setting(s):\n{}", .0.len(), list(.0))]
    Invalid(Vec<Violation>),
}

fn list(v: &[Violation]) -> String {
    v.iter().map(|x| format!("  {x}")).collect::<Vec<_>>().join("\n")
}

impl ConfigError {
    /// The violations, if any.
    pub fn violations(&self) -> &[Violation] {
        match self {
            ConfigError::Invalid(v) => v,
            _ => &[],
        }
    }
}

const KNOWN: &[(&str, &[&str])] = &[
    ("geometry", &["d_source_node", "d_node_legit", "d_node_eve", "pathloss_exponent"]),
    ("power", &["tx_power_dbm"]),
    ("noise", &["legit", "eve", "relay"]),
    ("irs", &["n_elements"]),
    ("fading", &["alpha_1", "beta_1", "alpha_2", "beta_2", "alpha_3", "beta_3"]),
    ("relay", &["gain"]),
    ("sweep", &["variable", "from", "to", "step", "architectures", "methods"]),
    ("mc", &["samples", "seed", "chunk_size"]),
];

type Section = BTreeMap<String, Spanned<Value>>;

struct Reader<'a> {
    text: &'a str,
    doc: BTreeMap<String, Section>,
    violations: Vec<Violation>,
}

impl<'a> Reader<'a> {
    fn line_of(&self, offset: usize) -> usize {
        self.text[..offset.min(self.text.len())].bytes().filter(|&b| b == b'\n').count() + 1
    }

    fn entry(&self, key: &str) -> Option<&Spanned<Value>> {
        let (section, name) = key.split_once('.')?;
        self.doc.get(section)?.get(name)
    }

    fn line(&self, key: &str) -> Option<usize> {
        self.entry(key).map(|v| self.line_of(v.span().start))
    }

    fn fail(&mut self, key: &str, message: impl Into<String>) {
        let line = self.line(key);
        self.violations.push(Violation { key: key.to_string(), line, message: message.into() });
    }

    fn present(&self, key: &str) -> bool {
        self.entry(key).is_some()
    }

    fn number(&mut self, key: &str, required: bool) -> Option<f64> {
        match self.entry(key).map(|v| v.get_ref().clone()) {
            None => {
                if required {
                    self.fail(key, "missing required key");
                }
                None
            }
            Some(Value::Float(x)) => Some(x),
            Some(Value::Integer(i)) => Some(i as f64),
            Some(other) => {
                self.fail(key, format!("expected a number, found {}", other.type_str()));
                None
            }
        }
    }

    fn positive(&mut self, key: &str) -> Option<f64> {
        let v = self.number(key, true)?;
        if v > 0.0 && v.is_finite() {
            Some(v)
        } else {
            self.fail(key, format!("must be positive, got {v}"));
            None
        }
    }

    fn integer(&mut self, key: &str, min: i64) -> Option<u64> {
        match self.entry(key).map(|v| v.get_ref().clone()) {
            None => None,
            Some(Value::Integer(i)) if i >= min => Some(i as u64),
            Some(Value::Integer(i)) => {
                self.fail(key, format!("must be at least {min}, got {i}"));
                None
            }
            Some(other) => {
                self.fail(key, format!("expected an integer, found {}", other.type_str()));
                None
            }
        }
    }

    fn string_list(&mut self, key: &str) -> Option<Vec<String>> {
        match self.entry(key).map(|v| v.get_ref().clone()) {
            None => None,
            Some(Value::String(s)) => Some(vec![s]),
            Some(Value::Array(items)) => {
                let mut out = Vec::new();
                for item in items {
                    match item {
                        Value::String(s) => out.push(s),
                        other => {
                            self.fail(key, format!("expected strings, found {}", other.type_str()));
                            return None;
                        }
                    }
                }
                Some(out)
            }
            Some(other) => {
                self.fail(key, format!("expected a list of strings, found {}", other.type_str()));
                None
            }
        }
    }
}

/// Reads and validates a scenario file.
pub fn parse_config(path: &Path) -> Result<Config, ConfigError> {
    let text =
        std::fs::read_to_string(path).map_err(|source| ConfigError::Io { path: path.display().to_string(), source })?;
    parse_config_str(&text)
}

/// Validates scenario text; every violation is reported, not just the first.
pub fn parse_config_str(text: &str) -> Result<Config, ConfigError> {
    let doc: BTreeMap<String, Section> = toml::from_str(text).map_err(|e| ConfigError::Syntax(e.to_string()))?;
    let mut r = Reader { text, doc, violations: Vec::new() };

    let unknown: Vec<String> = r
        .doc
        .iter()
        .flat_map(|(section, keys)| keys.keys().map(move |k| format!("{section}.{k}")))
        .filter(|key| {
            let (section, name) = key.split_once('.').unwrap_or_default();
            !KNOWN.iter().any(|(s, names)| *s == section && names.contains(&name))
        })
        .collect();
    for key in unknown {
        r.fail(&key, "unknown key");
    }

    let d1 = r.positive("geometry.d_source_node");
    let d2 = r.positive("geometry.d_node_legit");
    let d3 = r.positive("geometry.d_node_eve");
    let zeta = r.positive("geometry.pathloss_exponent");
    let power = r.number("power.tx_power_dbm", true);
    let w_l = r.positive("noise.legit");
    let w_e = r.positive("noise.eve");
    let w_r = r.positive("noise.relay");
    let n = match r.entry("irs.n_elements") {
        None => {
            r.fail("irs.n_elements", "missing required key");
            None
        }
        Some(_) => r.integer("irs.n_elements", 1),
    };
    let n = n.and_then(|n| match u32::try_from(n) {
        Ok(n) => Some(n),
        Err(_) => {
            r.fail("irs.n_elements", "too large");
            None
        }
    });

    let sweep = parse_sweep(&mut r);
    let architectures = sweep
        .as_ref()
        .map(|s| s.architectures.clone())
        .unwrap_or_else(|| vec![Architecture::Irs, Architecture::Df, Architecture::Affg]);
    let uses_relay = architectures.iter().any(|a| *a != Architecture::Irs);

    let mut fading = [None; 3];
    for (hop, slot) in fading.iter_mut().enumerate() {
        let (ka, kb) = (format!("fading.alpha_{}", hop + 1), format!("fading.beta_{}", hop + 1));
        let alpha = r.positive(&ka);
        let beta = r.positive(&kb);
        if let Some(a) = alpha {
            if uses_relay && !(a.fract() == 0.0 && a <= f64::from(MAX_INTEGER_SHAPE)) {
                r.fail(
                    &ka,
                    format!(
                        "relay scenarios need an integer shape (the finite-sum Gamma survival function \
                         behind the relay formulas requires it), got {a}"
                    ),
                );
            }
        }
        if let (Some(alpha), Some(beta)) = (alpha, beta) {
            *slot = Some(FadingParams { alpha, beta });
        }
    }

    let relay_gain = match r.entry("relay.gain").map(|v| v.get_ref().clone()) {
        None => Some(RelayGain::Auto),
        Some(Value::String(s)) if s == "auto" => Some(RelayGain::Auto),
        Some(Value::Float(_) | Value::Integer(_)) => r.positive("relay.gain").map(RelayGain::Fixed),
        Some(_) => {
            r.fail("relay.gain", "expected \"auto\" or a positive number");
            None
        }
    };

    let samples = r.integer("mc.samples", MIN_SAMPLES as i64).unwrap_or(DEFAULT_SAMPLES);
    let seed = r.integer("mc.seed", 0).unwrap_or(DEFAULT_SEED);
    let chunk_size = r.integer("mc.chunk_size", 1).unwrap_or(DEFAULT_CHUNK_SIZE);

    if !r.violations.is_empty() {
        r.violations.sort_by_key(|v| (v.line.unwrap_or(usize::MAX), v.key.clone()));
        return Err(ConfigError::Invalid(r.violations));
    }
    let (Some(d1), Some(d2), Some(d3), Some(zeta), Some(power), Some(w_l), Some(w_e), Some(w_r), Some(n)) =
        (d1, d2, d3, zeta, power, w_l, w_e, w_r, n)
    else {
        unreachable!("missing values are reported as violations")
    };
    let [Some(f1), Some(f2), Some(f3)] = fading else { unreachable!("reported above") };
    let geometry = Geometry { d_source_node: d1, d_node_legit: d2, d_node_eve: d3, pathloss_exponent: zeta };
    let noise = NoisePowers { legit: w_l, eve: w_e, relay: w_r };
    Ok(Config {
        irs: ScenarioIrs {
            n_elements: n,
            geometry,
            fading_ts: f1,
            fading_sl: f2,
            fading_se: f3,
            tx_power_dbm: power,
            noise,
        },
        relay: ScenarioRelay {
            geometry,
            fading_1: f1,
            fading_2: f2,
            fading_3: f3,
            tx_power_dbm: power,
            noise,
            relay_gain: relay_gain.expect("reported above"),
        },
        sweep,
        mc: McConfig { samples, master_seed: seed, chunk_size },
    })
}

fn parse_sweep(r: &mut Reader<'_>) -> Option<SweepSpec> {
    let keys = ["sweep.variable", "sweep.from", "sweep.to", "sweep.step", "sweep.architectures", "sweep.methods"];
    if !keys.iter().any(|k| r.present(k)) {
        return None;
    }
    let variable = match r.entry("sweep.variable").map(|v| v.get_ref().clone()) {
        None => {
            r.fail("sweep.variable", "missing required key");
            None
        }
        Some(Value::String(s)) => match SweepVariable::parse(&s) {
            Some(v) => Some(v),
            None => {
                r.fail(
                    "sweep.variable",
                    format!("unknown sweep variable `{s}`; expected one of {}", SweepVariable::NAMES),
                );
                None
            }
        },
        Some(_) => {
            r.fail("sweep.variable", "expected a string");
            None
        }
    };
    let from = r.number("sweep.from", true);
    let to = r.number("sweep.to", true);
    let step = r.number("sweep.step", true);
    if let Some(s) = step {
        if !(s > 0.0 && s.is_finite()) {
            r.fail("sweep.step", format!("must be positive, got {s}"));
        }
    }
    if let (Some(f), Some(t)) = (from, to) {
        if !(f <= t) {
            r.fail("sweep.to", format!("must not be below sweep.from ({f}), got {t}"));
        }
    }
    let architectures = match r.string_list("sweep.architectures") {
        None => vec![Architecture::Irs, Architecture::Df, Architecture::Affg],
        Some(names) => {
            let mut out = Vec::new();
            for name in names {
                match parse_architecture(&name) {
                    Some(a) if !out.contains(&a) => out.push(a),
                    Some(_) => {}
                    None => r.fail("sweep.architectures", format!("unknown architecture `{name}`")),
                }
            }
            if out.is_empty() {
                r.fail("sweep.architectures", "at least one architecture is needed");
            }
            out.sort();
            out
        }
    };
    let methods = match r.string_list("sweep.methods") {
        None => vec![Method::Analytic],
        Some(names) => {
            let mut out = Vec::new();
            for name in names {
                match parse_method(&name) {
                    Some(m) if !out.contains(&m) => out.push(m),
                    Some(_) => {}
                    None => r.fail("sweep.methods", format!("unknown method `{name}`")),
                }
            }
            if out.is_empty() {
                r.fail("sweep.methods", "at least one method is needed");
            }
            out.sort();
            out
        }
    };
    let spec = SweepSpec { variable: variable?, from: from?, to: to?, step: step?, architectures, methods };
    if let Err(message) = spec.check_grid() {
        let key = if spec.grid_len() > MAX_GRID_POINTS { "sweep.step" } else { "sweep.from" };
        r.fail(key, message);
        return None;
    }
    Some(spec)
}

/// `irs`, `df` or `affg`.
pub fn parse_architecture(name: &str) -> Option<Architecture> {
    match name.trim().to_ascii_lowercase().as_str() {
        "irs" => Some(Architecture::Irs),
        "df" => Some(Architecture::Df),
        "affg" | "af" => Some(Architecture::Affg),
        _ => None,
    }
}

/// `analytic`, or `monte-carlo` / `mc`.
pub fn parse_method(name: &str) -> Option<Method> {
    match name.trim().to_ascii_lowercase().as_str() {
        "analytic" => Some(Method::Analytic),
        "monte-carlo" | "montecarlo" | "mc" => Some(Method::MonteCarlo),
        _ => None,
    }
}

/// The reference scenario: 10 m to the node, 10 m on to the legitimate
/// receiver, 20 m to the eavesdropper, `ζ = 2`, unit rates and noise, shape
/// 2 on every hop, four elements, 20 dB.
pub fn reference_config() -> Config {
    let f = FadingParams { alpha: 2.0, beta: 1.0 };
    let geometry = Geometry { d_source_node: 10.0, d_node_legit: 10.0, d_node_eve: 20.0, pathloss_exponent: 2.0 };
    let noise = NoisePowers::uniform(1.0);
    Config {
        irs: ScenarioIrs {
            n_elements: 4,
            geometry,
            fading_ts: f,
            fading_sl: f,
            fading_se: f,
            tx_power_dbm: 20.0,
            noise,
        },
        relay: ScenarioRelay {
            geometry,
            fading_1: f,
            fading_2: f,
            fading_3: f,
            tx_power_dbm: 20.0,
            noise,
            relay_gain: RelayGain::Auto,
        },
        sweep: None,
        mc: McConfig { samples: DEFAULT_SAMPLES, master_seed: DEFAULT_SEED, chunk_size: DEFAULT_CHUNK_SIZE },
    }
}

impl Config {
    /// Sets the shape of every hop.
    pub fn with_shapes(mut self, alpha: f64) -> Self {
        for f in [
            &mut self.irs.fading_ts,
            &mut self.irs.fading_sl,
            &mut self.irs.fading_se,
            &mut self.relay.fading_1,
            &mut self.relay.fading_2,
            &mut self.relay.fading_3,
        ] {
            f.alpha = alpha;
        }
        self
    }

    /// Sets the transmit power of both scenarios.
    pub fn with_power(mut self, dbm: f64) -> Self {
        self.irs.tx_power_dbm = dbm;
        self.relay.tx_power_dbm = dbm;
        self
    }
}
