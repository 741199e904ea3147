//! Evaluation requests and the three engines behind them.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use serde::Serialize;

use super::CliError;
use crate::closed::ch_rect_fast;
use crate::exact::{Int, Rat};
use crate::mn_oracle::normalized_character;
use crate::stanley::stanley_eval;
use crate::young::{rectangle, Partition};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Oracle,
    Stanley,
    Closed,
}

impl Method {
    pub const ALL: [Method; 3] = [Method::Oracle, Method::Stanley, Method::Closed];

    pub fn name(self) -> &'static str {
        match self {
            Method::Oracle => "oracle",
            Method::Stanley => "stanley",
            Method::Closed => "closed",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Method {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "oracle" => Ok(Method::Oracle),
            "stanley" => Ok(Method::Stanley),
            "closed" => Ok(Method::Closed),
            other => Err(format!(
                "unknown method {other:?} (expected oracle, stanley or closed)"
            )),
        }
    }
}

/// Size limits for the exponential-time engines.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Caps {
    /// Largest `|π|` enumerated over `S_|π|`.
    pub stanley_max_k: usize,
    /// Largest diagram size `n = pq` handed to the Murnaghan–Nakayama recursion.
    pub oracle_max_n: u128,
}

impl Default for Caps {
    fn default() -> Self {
        Self {
            stanley_max_k: 9,
            oracle_max_n: 60,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EvalRequest {
    pub method: Method,
    pub cycle: Partition,
    pub p: i64,
    pub q: i64,
}

impl EvalRequest {
    pub fn n(&self) -> i128 {
        self.p as i128 * self.q as i128
    }

    /// Rejects requests the chosen engine cannot or will not run.
    pub fn validate(&self, caps: &Caps) -> Result<(), CliError> {
        let k = self.cycle.size();
        if k == 0 {
            return Err(CliError::Usage("cycle must be a nonempty partition".into()));
        }
        match self.method {
            Method::Oracle => {
                if self.p < 0 || self.q < 0 {
                    return Err(CliError::Usage("oracle needs p, q >= 0".into()));
                }
                if self.n() as u128 > caps.oracle_max_n {
                    return Err(CliError::Usage(format!(
                        "oracle cap exceeded: n = {} > {}",
                        self.n(),
                        caps.oracle_max_n
                    )));
                }
            }
            Method::Stanley => {
                if k > caps.stanley_max_k {
                    return Err(CliError::Usage(format!(
                        "stanley cap exceeded: |π| = {k} > {}",
                        caps.stanley_max_k
                    )));
                }
            }
            Method::Closed => {
                if self.cycle.len() != 1 {
                    return Err(CliError::Usage(
                        "closed form covers a single cycle only; pass --cycle k".into(),
                    ));
                }
                if self.p < 1 || self.q < 1 {
                    return Err(CliError::Usage("closed form needs p, q >= 1".into()));
                }
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RowInputs {
    pub cycle: Partition,
    pub k: usize,
    pub p: i64,
    pub q: i64,
    pub n: i128,
}

/// One evaluated cell; `value` is an exact decimal string.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReportRow {
    pub inputs: RowInputs,
    pub method: Method,
    pub value: String,
    pub elapsed_ns: u128,
}

pub fn format_value(v: &Rat) -> String {
    if v.is_integer() {
        v.to_integer().to_string()
    } else {
        format!("{}/{}", v.numer(), v.denom())
    }
}

fn compute(req: &EvalRequest) -> Result<Rat, CliError> {
    match req.method {
        Method::Oracle => {
            let shape = rectangle(req.p as usize, req.q as usize);
            Ok(normalized_character(&req.cycle, &shape))
        }
        Method::Stanley => {
            let p = Rat::from_integer(Int::from(req.p));
            let q = Rat::from_integer(Int::from(req.q));
            Ok(stanley_eval(&req.cycle, &p, &q))
        }
        Method::Closed => {
            let k = req.cycle.parts()[0] as u64;
            ch_rect_fast(k, req.p as u64, req.q as u64)
                .map_err(|e| CliError::Internal(format!("closed form failed: {e}")))
        }
    }
}

pub fn cmd_eval(req: &EvalRequest, caps: &Caps) -> Result<ReportRow, CliError> {
    req.validate(caps)?;
    let start = Instant::now();
    let value = compute(req)?;
    let elapsed_ns = start.elapsed().as_nanos();
    Ok(ReportRow {
        inputs: RowInputs {
            cycle: req.cycle.clone(),
            k: req.cycle.size(),
            p: req.p,
            q: req.q,
            n: req.n(),
        },
        method: req.method,
        value: format_value(&value),
        elapsed_ns,
    })
}

/// Runs every permitted engine on `(k) × p × q` for each `k`.
///
/// With `methods = None` engines over their cap are skipped; naming an
/// engine explicitly makes exceeding its cap a usage error. Rows are ordered
/// by `k`, then by engine. Disagreeing values are reported as a mismatch
/// after all rows are computed.
pub fn cmd_bench(
    ks: &[usize],
    p: i64,
    q: i64,
    methods: Option<&[Method]>,
    caps: &Caps,
) -> Result<Vec<ReportRow>, BenchFailure> {
    let mut ks = ks.to_vec();
    ks.sort_unstable();
    ks.dedup();
    let mut rows = Vec::new();
    let mut mismatches = Vec::new();
    for &k in &ks {
        let cycle = Partition::new(vec![k])
            .map_err(|e| BenchFailure::Usage(CliError::Usage(e.to_string())))?;
        let mut values: Vec<&str> = Vec::new();
        let first = rows.len();
        for method in Method::ALL {
            let explicit = methods.is_some_and(|m| m.contains(&method));
            if methods.is_some() && !explicit {
                continue;
            }
            let req = EvalRequest {
                method,
                cycle: cycle.clone(),
                p,
                q,
            };
            match cmd_eval(&req, caps) {
                Ok(row) => rows.push(row),
                Err(e @ CliError::Usage(_)) if explicit => return Err(BenchFailure::Usage(e)),
                Err(CliError::Usage(_)) => {}
                Err(e) => return Err(BenchFailure::Usage(e)),
            }
        }
        for row in &rows[first..] {
            values.push(&row.value);
        }
        if values.windows(2).any(|w| w[0] != w[1]) {
            mismatches.push(k);
        }
    }
    if mismatches.is_empty() {
        Ok(rows)
    } else {
        Err(BenchFailure::Mismatch {
            rows,
            ks: mismatches,
        })
    }
}

#[derive(Debug)]
pub enum BenchFailure {
    Usage(CliError),
    Mismatch {
        rows: Vec<ReportRow>,
        ks: Vec<usize>,
    },
}
