//! Flat `key = value` machine record.
//!
//! Floats are written with Rust's shortest round-trip formatting, so parsing
//! a record yields a bit-identical [`TestResult`]. Wall-clock time is left
//! out to keep reruns byte-identical; it reads back as zero.

use std::collections::HashMap;
use std::fmt::{Display, Write as _};
use std::str::FromStr;

use sdtest_core::procedures::{ContactSet, RecenteringCurve};
use sdtest_core::{
    Approach, Curve, Curves, Functional, Grid, Method, ResampledDistribution, ResamplingPlan, TestConfig,
    TestResult, Tuning, WeightSpec,
};

use crate::error::{CliError, Result};

const FORMAT: &str = "sdtest-record 1";

struct Writer(String);

impl Writer {
    fn put(&mut self, key: &str, value: impl Display) {
        let _ = writeln!(self.0, "{key} = {value}");
    }

    fn float(&mut self, key: &str, v: f64) {
        self.put(key, format_args!("{v:?}"));
    }

    fn floats(&mut self, key: &str, vs: &[f64]) {
        let mut s = String::with_capacity(vs.len() * 20 + 2);
        s.push('[');
        for (i, v) in vs.iter().enumerate() {
            if i > 0 {
                s.push_str(", ");
            }
            let _ = write!(s, "{v:?}");
        }
        s.push(']');
        self.put(key, s);
    }

    fn opt<T: Display>(&mut self, key: &str, v: Option<T>) {
        match v {
            Some(v) => self.put(key, v),
            None => self.put(key, "none"),
        }
    }
}

/// Serializes a result. Deterministic for a given result.
pub fn to_record(result: &TestResult) -> String {
    let mut w = Writer(String::new());
    let cfg = &result.config;
    w.put("format", FORMAT);
    w.put("approach", result.approach);
    w.float("statistic", result.statistic);
    w.float("critical_value", result.critical_value);
    w.float("p_value", result.p_value);
    w.put("reject", result.reject());
    w.float("lambda", result.lambda);
    w.put("samples", result.labels.len());
    for (k, (label, n)) in result.labels.iter().zip(&result.sizes).enumerate() {
        w.put(&format!("label.{k}"), format_args!("{label:?}"));
        w.put(&format!("size.{k}"), n);
    }

    w.put("config.s", cfg.s);
    w.put("config.ngrid", cfg.ngrid);
    w.float("config.alpha", cfg.alpha);
    w.put("config.approach", cfg.approach);
    w.put("config.functional", cfg.functional);
    w.float("config.c", cfg.c);
    w.float("config.a", cfg.a);
    w.float("config.eta", cfg.eta);
    w.opt("config.epsilon", cfg.epsilon.map(|e| format!("{e:?}")));
    w.put("config.ndm_three_point", cfg.ndm_three_point);
    w.put("config.weight.enabled", cfg.weight.enabled);
    w.float("config.weight.z1", cfg.weight.z1);
    w.float("config.weight.z2", cfg.weight.z2);
    w.float("config.weight.a", cfg.weight.a);
    w.float("config.weight.delta", cfg.weight.delta);
    w.put("plan.method", cfg.plan.method);
    w.put("plan.nboot", cfg.plan.nboot);
    w.opt("plan.b1", cfg.plan.b1);
    w.opt("plan.b2", cfg.plan.b2);
    w.put("plan.seed", cfg.plan.seed);

    w.opt("tuning.epsilon", result.tuning.epsilon.map(|e| format!("{e:?}")));
    match &result.tuning.contact {
        Some(cs) => {
            w.float("tuning.contact.threshold", cs.threshold);
            let bits: String = cs.members.iter().map(|&m| if m { '1' } else { '0' }).collect();
            w.put("tuning.contact.members", bits);
        }
        None => w.put("tuning.contact.threshold", "none"),
    }
    match &result.tuning.recentering {
        Some(rc) => {
            w.float("tuning.recentering.threshold", rc.threshold);
            w.floats("tuning.recentering.values", &rc.values);
        }
        None => w.put("tuning.recentering.threshold", "none"),
    }

    w.put("resampled.method", result.resampled.method);
    w.put("resampled.count", result.resampled.len());
    w.floats("resampled.values", &result.resampled.values);
    w.put("curves.order", result.curves.difference.order);
    w.floats("grid", result.grid.points());
    for (k, c) in result.curves.integrated.iter().enumerate() {
        w.floats(&format!("curves.F.{k}"), &c.values);
    }
    w.floats("curves.D", &result.curves.difference.values);
    w.0
}

struct Fields(HashMap<String, String>);

fn bad(msg: impl Into<String>) -> CliError {
    CliError::Record(msg.into())
}

impl Fields {
    fn parse(text: &str) -> Result<Self> {
        let mut map = HashMap::new();
        for (i, raw) in text.lines().enumerate() {
            if raw.trim().is_empty() {
                continue;
            }
            let (k, v) = raw
                .split_once(" = ")
                .ok_or_else(|| bad(format!("line {}: expected 'key = value'", i + 1)))?;
            if map.insert(k.to_owned(), v.to_owned()).is_some() {
                return Err(bad(format!("duplicate key '{k}'")));
            }
        }
        Ok(Self(map))
    }

    fn raw(&self, key: &str) -> Result<&str> {
        self.0.get(key).map(String::as_str).ok_or_else(|| bad(format!("missing key '{key}'")))
    }

    fn get<T: FromStr>(&self, key: &str) -> Result<T> {
        let v = self.raw(key)?;
        v.parse().map_err(|_| bad(format!("{key}: cannot parse '{v}'")))
    }

    fn opt<T: FromStr>(&self, key: &str) -> Result<Option<T>> {
        match self.raw(key)? {
            "none" => Ok(None),
            _ => self.get(key).map(Some),
        }
    }

    fn floats(&self, key: &str) -> Result<Vec<f64>> {
        let v = self.raw(key)?;
        let inner = v
            .strip_prefix('[')
            .and_then(|s| s.strip_suffix(']'))
            .ok_or_else(|| bad(format!("{key}: expected [..]")))?;
        if inner.trim().is_empty() {
            return Ok(Vec::new());
        }
        inner
            .split(", ")
            .map(|x| x.parse().map_err(|_| bad(format!("{key}: cannot parse '{x}'"))))
            .collect()
    }

    fn string(&self, key: &str) -> Result<String> {
        unquote(self.raw(key)?).ok_or_else(|| bad(format!("{key}: malformed string")))
    }
}

/// Inverse of `{:?}` on `str` for the escapes it produces.
fn unquote(s: &str) -> Option<String> {
    let inner = s.strip_prefix('"')?.strip_suffix('"')?;
    let mut out = String::with_capacity(inner.len());
    let mut chars = inner.chars();
    while let Some(c) = chars.next() {
        if c != '\\' {
            out.push(c);
            continue;
        }
        match chars.next()? {
            'n' => out.push('\n'),
            'r' => out.push('\r'),
            't' => out.push('\t'),
            '0' => out.push('\0'),
            '\\' => out.push('\\'),
            '"' => out.push('"'),
            '\'' => out.push('\''),
            'u' => {
                let hex: String = chars.by_ref().skip(1).take_while(|&c| c != '}').collect();
                out.push(char::from_u32(u32::from_str_radix(&hex, 16).ok()?)?);
            }
            _ => return None,
        }
    }
    Some(out)
}

/// Parses a record produced by [`to_record`].
pub fn from_record(text: &str) -> Result<TestResult> {
    let f = Fields::parse(text)?;
    if f.raw("format")? != FORMAT {
        return Err(bad(format!("unsupported format '{}'", f.raw("format")?)));
    }
    let core = |e: sdtest_core::SdError| bad(e.to_string());
    let parse_approach = |key: &str| -> Result<Approach> { f.raw(key)?.parse().map_err(core) };
    let parse_method = |key: &str| -> Result<Method> { f.raw(key)?.parse().map_err(core) };

    let k: usize = f.get("samples")?;
    let mut labels = Vec::with_capacity(k);
    let mut sizes = Vec::with_capacity(k);
    let mut integrated = Vec::with_capacity(k);
    let order: u32 = f.get("curves.order")?;
    for j in 0..k {
        labels.push(f.string(&format!("label.{j}"))?);
        sizes.push(f.get(&format!("size.{j}"))?);
        integrated.push(Curve {
            values: f.floats(&format!("curves.F.{j}"))?,
            order,
        });
    }

    let functional: Functional = f.raw("config.functional")?.parse().map_err(core)?;
    let config = TestConfig {
        s: f.get("config.s")?,
        ngrid: f.get("config.ngrid")?,
        alpha: f.get("config.alpha")?,
        plan: ResamplingPlan {
            method: parse_method("plan.method")?,
            nboot: f.get("plan.nboot")?,
            b1: f.opt("plan.b1")?,
            b2: f.opt("plan.b2")?,
            seed: f.get("plan.seed")?,
        },
        approach: parse_approach("config.approach")?,
        functional,
        c: f.get("config.c")?,
        a: f.get("config.a")?,
        eta: f.get("config.eta")?,
        epsilon: f.opt("config.epsilon")?,
        weight: WeightSpec {
            z1: f.get("config.weight.z1")?,
            z2: f.get("config.weight.z2")?,
            a: f.get("config.weight.a")?,
            delta: f.get("config.weight.delta")?,
            enabled: f.get("config.weight.enabled")?,
        },
        ndm_three_point: f.get("config.ndm_three_point")?,
    };

    let contact = match f.opt::<f64>("tuning.contact.threshold")? {
        Some(threshold) => {
            let bits = f.raw("tuning.contact.members")?;
            let members = bits
                .chars()
                .map(|c| match c {
                    '0' => Ok(false),
                    '1' => Ok(true),
                    _ => Err(bad("tuning.contact.members: expected 0/1")),
                })
                .collect::<Result<_>>()?;
            Some(ContactSet { members, threshold })
        }
        None => None,
    };
    let recentering = match f.opt::<f64>("tuning.recentering.threshold")? {
        Some(threshold) => Some(RecenteringCurve {
            values: f.floats("tuning.recentering.values")?,
            threshold,
        }),
        None => None,
    };

    let values = f.floats("resampled.values")?;
    let count: usize = f.get("resampled.count")?;
    if values.len() != count {
        return Err(bad(format!("resampled.count is {count} but {} values follow", values.len())));
    }

    Ok(TestResult {
        approach: parse_approach("approach")?,
        statistic: f.get("statistic")?,
        critical_value: f.get("critical_value")?,
        p_value: f.get("p_value")?,
        resampled: ResampledDistribution {
            values,
            method: parse_method("resampled.method")?,
        },
        grid: Grid::from_points(f.floats("grid")?).map_err(core)?,
        curves: Curves {
            integrated,
            difference: Curve {
                values: f.floats("curves.D")?,
                order,
            },
        },
        labels,
        sizes,
        lambda: f.get("lambda")?,
        config,
        tuning: Tuning {
            contact,
            recentering,
            epsilon: f.opt("tuning.epsilon")?,
        },
        elapsed: 0.0,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unquote_inverts_debug() {
        for s in ["plain", "with \"quotes\"", "tab\tnew\nline\\", "é ü \u{7f} \u{200b}"] {
            assert_eq!(unquote(&format!("{s:?}")).as_deref(), Some(s));
        }
        assert_eq!(unquote("noquotes"), None);
    }

    #[test]
    fn rejects_garbage() {
        assert!(from_record("format = other").is_err());
        assert!(from_record("nonsense").is_err());
        assert!(from_record("a = 1\na = 2").is_err());
    }
}
