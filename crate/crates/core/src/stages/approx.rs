use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use super::enumerated::parse_u64;
use crate::error::{Error, Result};

/// Stage-sorted `(stage, bit)` entries for one index, starting at stage 0.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Schedule(Vec<(u64, u8)>);

impl Schedule {
    pub fn new(entries: Vec<(u64, u8)>) -> Result<Self> {
        match entries.first() {
            None => return Err(Error::domain("empty schedule")),
            Some(&(s, _)) if s != 0 => {
                return Err(Error::domain("schedule must have an entry at stage 0"))
            }
            _ => {}
        }
        if let Some(w) = entries.windows(2).find(|w| w[0].0 >= w[1].0) {
            return Err(Error::domain(format!(
                "schedule stages not strictly increasing at {} -> {}",
                w[0].0, w[1].0
            )));
        }
        if let Some(&(s, v)) = entries.iter().find(|&&(_, v)| v > 1) {
            return Err(Error::domain(format!(
                "value {v} at stage {s} is not a bit"
            )));
        }
        Ok(Schedule(entries))
    }

    pub fn constant(bit: u8) -> Self {
        Schedule(vec![(0, bit)])
    }

    pub fn entries(&self) -> &[(u64, u8)] {
        &self.0
    }

    pub fn at(&self, stage: u64) -> u8 {
        let idx = self.0.partition_point(|&(s, _)| s <= stage);
        // idx >= 1 because of the stage-0 entry
        self.0[idx - 1].1
    }

    pub fn limit(&self) -> u8 {
        self.0[self.0.len() - 1].1
    }

    pub fn stabilization_stage(&self) -> u64 {
        self.0[self.0.len() - 1].0
    }

    /// Number of value changes along the schedule.
    pub fn mind_changes(&self) -> usize {
        self.0.windows(2).filter(|w| w[0].1 != w[1].1).count()
    }
}

/// A `{0,1}`-valued `f(k, s)` whose limit in `s` exists for every `k`.
///
/// Indices without an explicit schedule (in particular every `k > horizon`)
/// follow the constant default.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LimitApproximation {
    schedules: BTreeMap<u64, Schedule>,
    default: u8,
    horizon: u64,
}

impl LimitApproximation {
    pub fn new(
        schedules: impl IntoIterator<Item = (u64, Schedule)>,
        default: u8,
        horizon: u64,
    ) -> Result<Self> {
        if default > 1 {
            return Err(Error::domain(format!("default {default} is not a bit")));
        }
        let mut map = BTreeMap::new();
        for (k, schedule) in schedules {
            if k > horizon {
                return Err(Error::domain(format!(
                    "index {k} has a schedule beyond horizon {horizon}"
                )));
            }
            if map.insert(k, schedule).is_some() {
                return Err(Error::domain(format!("duplicate schedule for index {k}")));
            }
        }
        Ok(LimitApproximation {
            schedules: map,
            default,
            horizon,
        })
    }

    pub fn horizon(&self) -> u64 {
        self.horizon
    }

    pub fn default_value(&self) -> u8 {
        self.default
    }

    pub fn schedules(&self) -> &BTreeMap<u64, Schedule> {
        &self.schedules
    }

    pub fn schedule(&self, k: u64) -> Option<&Schedule> {
        self.schedules.get(&k)
    }

    /// `f(k, s)`.
    pub fn approx_eval(&self, k: u64, s: u64) -> u8 {
        self.schedules.get(&k).map_or(self.default, |sch| sch.at(s))
    }

    /// `A(k) = lim_s f(k, s)`.
    pub fn limit_value(&self, k: u64) -> u8 {
        self.schedules.get(&k).map_or(self.default, Schedule::limit)
    }

    /// First stage from which `f(k, ·)` is constant.
    pub fn stabilization_stage(&self, k: u64) -> u64 {
        self.schedules
            .get(&k)
            .map_or(0, Schedule::stabilization_stage)
    }

    /// Largest stabilization stage over indices `0..=horizon`.
    pub fn max_stabilization_stage(&self) -> u64 {
        self.schedules
            .values()
            .map(Schedule::stabilization_stage)
            .max()
            .unwrap_or(0)
    }
}

impl fmt::Display for LimitApproximation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, schedule) in &self.schedules {
            write!(f, "{k}:")?;
            for (s, v) in schedule.entries() {
                write!(f, " {s}={v}")?;
            }
            writeln!(f)?;
        }
        writeln!(f, "default {}", self.default)?;
        writeln!(f, "horizon {}", self.horizon)
    }
}

impl FromStr for LimitApproximation {
    type Err = Error;

    /// Lines `k: s0=v0 s1=v1 ...`, then `default v` and `horizon K`.
    fn from_str(s: &str) -> Result<Self> {
        let mut schedules = Vec::new();
        let mut default = None;
        let mut horizon = None;
        for (idx, raw) in s.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            if let Some(rest) = line.strip_prefix("default") {
                default = Some(parse_bit(rest.trim(), line_no)?);
            } else if let Some(rest) = line.strip_prefix("horizon") {
                horizon = Some(parse_u64(rest.trim(), line_no)?);
            } else if let Some((k, entries)) = line.split_once(':') {
                if default.is_some() || horizon.is_some() {
                    return Err(Error::parse(
                        line_no,
                        "schedules must precede `default` and `horizon`",
                    ));
                }
                let k = parse_u64(k.trim(), line_no)?;
                let entries = entries
                    .split_whitespace()
                    .map(|pair| {
                        let (s, v) = pair.split_once('=').ok_or_else(|| {
                            Error::parse(line_no, format!("expected `stage=value`, got `{pair}`"))
                        })?;
                        Ok((parse_u64(s, line_no)?, parse_bit(v, line_no)?))
                    })
                    .collect::<Result<Vec<_>>>()?;
                let schedule =
                    Schedule::new(entries).map_err(|e| Error::parse(line_no, e.to_string()))?;
                schedules.push((k, schedule));
            } else {
                return Err(Error::parse(line_no, format!("unrecognized line `{line}`")));
            }
        }
        let default = default.ok_or_else(|| Error::parse(0, "missing `default v` line"))?;
        let horizon = horizon.ok_or_else(|| Error::parse(0, "missing `horizon K` line"))?;
        LimitApproximation::new(schedules, default, horizon)
    }
}

fn parse_bit(field: &str, line: usize) -> Result<u8> {
    match field {
        "0" => Ok(0),
        "1" => Ok(1),
        _ => Err(Error::parse(line, format!("`{field}` is not 0 or 1"))),
    }
}
