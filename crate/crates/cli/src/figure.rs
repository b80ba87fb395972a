//! Preset sweeps on the reference scenario.
//!
//! The presets are qualitative reproductions: they share the reference
//! geometry, noise and rates and only reproduce the axes and series.

use v2i_secrecy_core::analytic::Method;
use v2i_secrecy_core::channels::Architecture;

use crate::config::{reference_config, Config};
use crate::sweep::{SweepSpec, SweepVariable};

/// Identifiers accepted by [`figure_preset`].
pub const FIGURE_IDS: [u32; 4] = [3, 4, 5, 6];

/// One curve family of a preset: a scenario and its sweep.
#[derive(Debug, Clone, PartialEq)]
pub struct FigureSeries {
    /// Suffix of the output file; empty for single-series presets.
    pub name: &'static str,
    /// Scenario at which the sweep is run.
    pub config: Config,
    /// The sweep.
    pub spec: SweepSpec,
}

const ALL: [Architecture; 3] = [Architecture::Irs, Architecture::Df, Architecture::Affg];

fn power_sweep(architectures: &[Architecture], methods: &[Method]) -> SweepSpec {
    SweepSpec {
        variable: SweepVariable::TxPowerDbm,
        from: 0.0,
        to: 50.0,
        step: 2.0,
        architectures: architectures.to_vec(),
        methods: methods.to_vec(),
    }
}

/// Series of preset `id`:
///
/// * 3: secrecy against power, all architectures, shapes 2 and 3;
/// * 4: both relays against power, shapes 2;
/// * 5: secrecy against eavesdropper distance at 10 and 20 dB;
/// * 6: surface secrecy against source distance for 2, 8, 32 and 64 elements at 10 dB.
pub fn figure_preset(id: u32, methods: &[Method]) -> Option<Vec<FigureSeries>> {
    let base = reference_config();
    let series = match id {
        3 => vec![
            FigureSeries { name: "shape2", config: base.clone(), spec: power_sweep(&ALL, methods) },
            FigureSeries { name: "shape3", config: base.with_shapes(3.0), spec: power_sweep(&ALL, methods) },
        ],
        4 => vec![FigureSeries {
            name: "",
            config: base,
            spec: power_sweep(&[Architecture::Df, Architecture::Affg], methods),
        }],
        5 => [("p10", 10.0), ("p20", 20.0)]
            .into_iter()
            .map(|(name, p)| FigureSeries {
                name,
                config: base.clone().with_power(p),
                spec: SweepSpec {
                    variable: SweepVariable::EveDistanceM,
                    from: 2.0,
                    to: 40.0,
                    step: 2.0,
                    architectures: ALL.to_vec(),
                    methods: methods.to_vec(),
                },
            })
            .collect(),
        6 => [("n2", 2), ("n8", 8), ("n32", 32), ("n64", 64)]
            .into_iter()
            .map(|(name, n)| {
                let mut config = base.clone().with_power(10.0);
                config.irs.n_elements = n;
                FigureSeries {
                    name,
                    config,
                    spec: SweepSpec {
                        variable: SweepVariable::SourceSurfaceDistanceM,
                        from: 1.0,
                        to: 30.0,
                        step: 1.0,
                        architectures: vec![Architecture::Irs],
                        methods: methods.to_vec(),
                    },
                }
            })
            .collect(),
        _ => return None,
    };
    Some(series)
}

/// `out` for a single series, `<stem>_<series>.<ext>` otherwise.
pub fn series_path(out: &std::path::Path, series: &FigureSeries, single: bool) -> std::path::PathBuf {
    if single || series.name.is_empty() {
        return out.to_path_buf();
    }
    let stem = out.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
    let name = match out.extension() {
        Some(ext) => format!("{stem}_{}.{}", series.name, ext.to_string_lossy()),
        None => format!("{stem}_{}", series.name),
    };
    out.with_file_name(name)
}
