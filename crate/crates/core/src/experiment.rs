//! Seeded encode/corrupt/decode experiments behind the `rankcodes` binary.

use std::io::Write;
use std::time::Instant;

use num_rational::Ratio;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::channel::{operator_channel, rank_error_channel, trial_seed};
use crate::error::{Error, Result};
use crate::folded::FoldedGabidulin;
use crate::galois::{Field, FieldDescriptor};
use crate::message::Message;
use crate::subspace_code::SubspaceCode;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    Subspace,
    FoldedGabidulin,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodeParams {
    pub n: usize,
    pub k: usize,
    pub s: usize,
    /// Folding parameter; folded codes only.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub h: Option<usize>,
}

/// Channel grid. Every `(rho, t)` pair is a cell.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Grid {
    #[serde(default = "zero_list")]
    pub rho: Vec<usize>,
    pub t: Vec<usize>,
}

fn zero_list() -> Vec<usize> {
    vec![0]
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    Csv,
    Json,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OutputSpec {
    pub path: String,
    #[serde(default = "default_format")]
    pub format: OutputFormat,
}

fn default_format() -> OutputFormat {
    OutputFormat::Csv
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExperimentConfig {
    pub family: Family,
    pub field: FieldDescriptor,
    pub code: CodeParams,
    /// Omitted: every guaranteed cell plus the first cell past the radius.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub channel: Option<Grid>,
    #[serde(default = "default_trials")]
    pub trials: usize,
    #[serde(default)]
    pub seed: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub output: Option<OutputSpec>,
}

fn default_trials() -> usize {
    100
}

impl ExperimentConfig {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Format(e.to_string()))
    }
}

#[derive(Debug, Clone)]
pub enum Code {
    Subspace(SubspaceCode),
    Folded(FoldedGabidulin),
}

impl Code {
    pub fn build(config: &ExperimentConfig) -> Result<Code> {
        let field = Field::from_descriptor(&config.field)?;
        let CodeParams { n, k, s, h } = config.code;
        match (config.family, h) {
            (Family::Subspace, None) => SubspaceCode::new(&field, n, k, s).map(Code::Subspace),
            (Family::Subspace, Some(_)) => Err(Error::BadParams("h applies to folded codes only".into())),
            (Family::FoldedGabidulin, Some(h)) => FoldedGabidulin::new(&field, n, k, h, s).map(Code::Folded),
            (Family::FoldedGabidulin, None) => Err(Error::BadParams("folded codes need h".into())),
        }
    }

    pub fn field(&self) -> &Field {
        match self {
            Code::Subspace(c) => c.field(),
            Code::Folded(c) => c.field(),
        }
    }

    pub fn k(&self) -> usize {
        match self {
            Code::Subspace(c) => c.k(),
            Code::Folded(c) => c.k(),
        }
    }

    pub fn s(&self) -> usize {
        match self {
            Code::Subspace(c) => c.s(),
            Code::Folded(c) => c.s(),
        }
    }

    /// Whether the decoding guarantee covers this cell.
    pub fn guaranteed(&self, rho: usize, t: usize) -> bool {
        match self {
            Code::Subspace(c) => c.within_guarantee(rho, t),
            Code::Folded(c) => rho == 0 && (t as i64) <= c.max_errors(),
        }
    }

    /// Rejects cells the channel cannot produce.
    pub fn check_cell(&self, rho: usize, t: usize) -> Result<()> {
        match self {
            Code::Subspace(c) => {
                if rho > c.n() {
                    return Err(Error::DimTooLarge { requested: rho, available: c.n() });
                }
                let room = c.ambient_dim() - c.n();
                if t > room {
                    return Err(Error::DimTooLarge { requested: t, available: room });
                }
            }
            Code::Folded(c) => {
                if rho != 0 {
                    return Err(Error::BadParams("folded codes take no erasures".into()));
                }
                let limit = c.g().min(c.h() * c.field().m());
                if t > limit {
                    return Err(Error::RankTooLarge { requested: t, available: limit });
                }
            }
        }
        Ok(())
    }

    /// Guaranteed cells and, per erasure count, the first error count past
    /// the radius (when the channel allows it).
    pub fn default_grid(&self) -> Vec<(usize, usize)> {
        let rhos = match self {
            Code::Subspace(c) => c.n(),
            Code::Folded(_) => 0,
        };
        let mut cells = Vec::new();
        for rho in 0..=rhos {
            let mut t = 0;
            loop {
                if self.check_cell(rho, t).is_err() {
                    break;
                }
                cells.push((rho, t));
                if !self.guaranteed(rho, t) {
                    break;
                }
                t += 1;
            }
        }
        cells
    }
}

/// One row of a sweep.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TrialRecord {
    pub rho: usize,
    pub t: usize,
    pub trial: usize,
    pub success: bool,
    /// Affine dimension of the output list; empty when the decoder returned
    /// nothing.
    pub list_dim: Option<usize>,
    pub guaranteed: bool,
    pub micros: u64,
}

/// One seeded trial: random message, channel, decode.
pub fn run_trial(
    code: &Code,
    rho: usize,
    t: usize,
    trial: usize,
    master_seed: u64,
    timing: bool,
) -> Result<TrialRecord> {
    let mut rng = ChaCha8Rng::seed_from_u64(trial_seed(master_seed, rho, t, trial));
    let field = code.field();
    let u = Message::random(field, code.k(), &mut rng);
    let (decoded, elapsed) = match code {
        Code::Subspace(c) => {
            let v = c.encode(&u)?;
            let received = operator_channel(&v, rho, t, &mut rng)?;
            let start = Instant::now();
            (c.list_decode(&received), start.elapsed())
        }
        Code::Folded(c) => {
            let x = c.encode(&u)?;
            let y = rank_error_channel(field, &x, t, &mut rng)?;
            let start = Instant::now();
            (c.list_decode(&y), start.elapsed())
        }
    };
    let (success, list_dim) = match decoded {
        Ok(list) => (list.contains(&u), list.dim()),
        Err(Error::DegenerateReceivedSpace { .. } | Error::DegenerateParams { .. }) => (false, None),
        Err(e) => return Err(e),
    };
    Ok(TrialRecord {
        rho,
        t,
        trial,
        success,
        list_dim,
        guaranteed: code.guaranteed(rho, t),
        micros: if timing { elapsed.as_micros() as u64 } else { 0 },
    })
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CellSummary {
    pub rho: usize,
    pub t: usize,
    pub trials: usize,
    pub successes: usize,
    pub guaranteed: bool,
    pub max_list_dim: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepResult {
    pub records: Vec<TrialRecord>,
    pub summary: Vec<CellSummary>,
    /// Within-guarantee trials that did not recover the message.
    pub guarantee_misses: usize,
}

#[derive(Debug, Clone, Copy, Default)]
pub struct SweepOptions {
    /// Worker threads; `None` runs sequentially.
    pub parallel: Option<usize>,
    pub timing: bool,
}

/// Cells of the configured grid (or the default grid), validated.
pub fn sweep_cells(code: &Code, config: &ExperimentConfig) -> Result<Vec<(usize, usize)>> {
    let cells = match &config.channel {
        Some(grid) => grid.rho.iter().flat_map(|&rho| grid.t.iter().map(move |&t| (rho, t))).collect(),
        None => code.default_grid(),
    };
    for &(rho, t) in &cells {
        code.check_cell(rho, t)?;
    }
    Ok(cells)
}

/// Runs every trial of every cell. Records come back in `(cell, trial)`
/// order whatever the thread count.
pub fn sweep(config: &ExperimentConfig, opts: SweepOptions) -> Result<SweepResult> {
    let code = Code::build(config)?;
    let cells = sweep_cells(&code, config)?;
    let jobs: Vec<(usize, usize, usize)> =
        cells.iter().flat_map(|&(rho, t)| (0..config.trials).map(move |i| (rho, t, i))).collect();
    let run = |&(rho, t, i): &(usize, usize, usize)| run_trial(&code, rho, t, i, config.seed, opts.timing);
    let records = match opts.parallel {
        Some(threads) if threads > 1 => rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .map_err(|e| Error::BadParams(e.to_string()))?
            .install(|| jobs.par_iter().map(run).collect::<Result<Vec<_>>>())?,
        _ => jobs.iter().map(run).collect::<Result<Vec<_>>>()?,
    };
    let summary = cells
        .iter()
        .map(|&(rho, t)| {
            let rows: Vec<_> = records.iter().filter(|r| r.rho == rho && r.t == t).collect();
            CellSummary {
                rho,
                t,
                trials: rows.len(),
                successes: rows.iter().filter(|r| r.success).count(),
                guaranteed: code.guaranteed(rho, t),
                max_list_dim: rows.iter().filter_map(|r| r.list_dim).max(),
            }
        })
        .collect();
    let guarantee_misses = records.iter().filter(|r| r.guaranteed && !r.success).count();
    Ok(SweepResult { records, summary, guarantee_misses })
}

pub fn write_csv<W: Write>(records: &[TrialRecord], out: W) -> std::io::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    for r in records {
        w.serialize(r)?;
    }
    w.flush()
}

pub fn write_json<W: Write>(config: &ExperimentConfig, result: &SweepResult, out: W) -> std::io::Result<()> {
    #[derive(Serialize)]
    struct Report<'a> {
        config: &'a ExperimentConfig,
        summary: &'a [CellSummary],
        guarantee_misses: usize,
        records: &'a [TrialRecord],
    }
    let report = Report {
        config,
        summary: &result.summary,
        guarantee_misses: result.guarantee_misses,
        records: &result.records,
    };
    serde_json::to_writer_pretty(out, &report)?;
    Ok(())
}

/// Rates and radii as exact numbers.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "family", rename_all = "kebab-case")]
pub enum Info {
    Subspace {
        ambient_dim: usize,
        symbol_rate: String,
        packet_rate: String,
        normalized_radius: String,
        /// `(rho, d at r = n - rho + t_max, t_max)` for each erasure count.
        per_rho: Vec<RhoInfo>,
    },
    FoldedGabidulin {
        g: usize,
        d: usize,
        t_max: i64,
        rate: String,
        normalized_radius: String,
    },
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RhoInfo {
    pub rho: usize,
    pub t_max: i64,
    /// Decoder parameter at the largest guaranteed `t`, if any.
    pub d: Option<usize>,
}

fn ratio(r: Ratio<i64>) -> String {
    r.to_string()
}

pub fn info(code: &Code) -> Result<Info> {
    Ok(match code {
        Code::Subspace(c) => {
            let r0 = c.radius_info(0);
            let per_rho = (0..=c.n())
                .map(|rho| {
                    let t_max = c.radius_info(rho).t_max;
                    let d = (t_max >= 0)
                        .then(|| {
                            let r = c.n() - rho + t_max as usize;
                            crate::subspace_code::decoder_d(r, c.k(), c.s()).ok()
                        })
                        .flatten();
                    RhoInfo { rho, t_max, d }
                })
                .collect();
            Info::Subspace {
                ambient_dim: c.ambient_dim(),
                // Unreduced km/(n(n+sm)) reads better next to the parameters.
                symbol_rate: format!("{}/{}", c.k() * c.field().m(), c.n() * c.ambient_dim()),
                packet_rate: ratio(r0.packet_rate),
                normalized_radius: ratio(r0.normalized_radius),
                per_rho,
            }
        }
        Code::Folded(c) => Info::FoldedGabidulin {
            g: c.g(),
            d: c.decoder_d()?,
            t_max: c.max_errors(),
            rate: ratio(c.rate()),
            normalized_radius: ratio(c.normalized_radius()),
        },
    })
}

impl std::fmt::Display for Info {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Info::Subspace { ambient_dim, symbol_rate, packet_rate, normalized_radius, per_rho } => {
                writeln!(f, "family: subspace")?;
                writeln!(f, "N = {ambient_dim}")?;
                writeln!(f, "R = {symbol_rate}")?;
                writeln!(f, "R* = {packet_rate}")?;
                writeln!(f, "normalized radius = {normalized_radius}")?;
                for r in per_rho {
                    match r.d {
                        Some(d) => writeln!(f, "rho = {}: t_max = {}, d = {d}", r.rho, r.t_max)?,
                        None => writeln!(f, "rho = {}: t_max = {}", r.rho, r.t_max)?,
                    }
                }
                Ok(())
            }
            Info::FoldedGabidulin { g, d, t_max, rate, normalized_radius } => {
                writeln!(f, "family: folded-gabidulin")?;
                writeln!(f, "g = {g}")?;
                writeln!(f, "d = {d}")?;
                writeln!(f, "t_max = {t_max}")?;
                writeln!(f, "R = {rate}")?;
                writeln!(f, "normalized radius = {normalized_radius}")
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn subspace_config() -> ExperimentConfig {
        ExperimentConfig::from_json(
            r#"{"family":"subspace","field":{"p":2,"m":6},"code":{"n":4,"k":2,"s":2},"trials":3,"seed":11}"#,
        )
        .unwrap()
    }

    #[test]
    fn config_parsing() {
        let c = subspace_config();
        assert_eq!(c.family, Family::Subspace);
        assert_eq!(c.field.m, 6);
        assert!(c.channel.is_none());
        assert!(ExperimentConfig::from_json("{}").is_err());
        let folded = ExperimentConfig::from_json(
            r#"{"family":"folded-gabidulin","field":{"p":2,"m":8},"code":{"n":8,"k":2,"s":2,"h":4},
                "channel":{"t":[0,1]},"output":{"path":"x.json","format":"json"}}"#,
        )
        .unwrap();
        assert_eq!(folded.channel.unwrap().rho, vec![0]);
        assert_eq!(folded.trials, 100);
        assert_eq!(folded.output.unwrap().format, OutputFormat::Json);
    }

    #[test]
    fn info_values() {
        let code = Code::build(&subspace_config()).unwrap();
        let Info::Subspace { symbol_rate, packet_rate, per_rho, ambient_dim, .. } = info(&code).unwrap() else {
            panic!("wrong family");
        };
        assert_eq!(ambient_dim, 16);
        assert_eq!(symbol_rate, "12/64");
        assert_eq!(packet_rate, "1/2");
        assert_eq!(per_rho[0].t_max, 5);
        let folded = ExperimentConfig::from_json(
            r#"{"family":"folded-gabidulin","field":{"p":2,"m":8},"code":{"n":8,"k":2,"s":2,"h":4}}"#,
        )
        .unwrap();
        let Info::FoldedGabidulin { d, t_max, .. } = info(&Code::build(&folded).unwrap()).unwrap() else {
            panic!("wrong family");
        };
        assert_eq!((d, t_max), (3, 1));
    }

    #[test]
    fn default_grid_has_one_cell_past_the_radius() {
        let code = Code::build(&subspace_config()).unwrap();
        let grid = code.default_grid();
        assert!(grid.contains(&(0, 5)));
        assert!(grid.contains(&(0, 6)));
        assert!(!grid.contains(&(0, 7)));
        assert!(grid.contains(&(3, 0)));
        assert_eq!(grid.iter().filter(|&&(r, t)| !code.guaranteed(r, t)).count(), 5);
    }

    #[test]
    fn bad_cells_are_rejected() {
        let mut c = subspace_config();
        c.channel = Some(Grid { rho: vec![0], t: vec![13] });
        assert!(sweep(&c, SweepOptions::default()).is_err());
        c.channel = Some(Grid { rho: vec![5], t: vec![0] });
        assert!(sweep(&c, SweepOptions::default()).is_err());
    }

    #[test]
    fn sweep_is_deterministic_and_thread_independent() {
        let c = subspace_config();
        let a = sweep(&c, SweepOptions::default()).unwrap();
        let b = sweep(&c, SweepOptions { parallel: Some(4), timing: false }).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.guarantee_misses, 0);
        let mut x = Vec::new();
        write_csv(&a.records, &mut x).unwrap();
        let text = String::from_utf8(x).unwrap();
        assert!(text.starts_with("rho,t,trial,success,list_dim,guaranteed,micros\n0,0,0,true,"));
    }
}
