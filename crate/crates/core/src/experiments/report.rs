use std::fmt::Write as _;

use sha2::{Digest, Sha256};

use crate::error::{Error, Result};

/// One checked item of a suite.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Row {
    pub index: usize,
    /// Family or check name.
    pub instance: String,
    /// First 16 hex digits of the SHA-256 of the instance text.
    pub hash: String,
    pub lambda: Option<usize>,
    pub sim: Option<usize>,
    pub refined: Option<usize>,
    pub bound: Option<String>,
    pub pass: bool,
    pub detail: String,
}

impl Row {
    pub fn new(index: usize, instance: impl Into<String>, hashed: &str) -> Row {
        Row {
            index,
            instance: instance.into(),
            hash: short_hash(hashed),
            lambda: None,
            sim: None,
            refined: None,
            bound: None,
            pass: true,
            detail: String::new(),
        }
    }

    /// Records a failed check; the first failure's message is kept.
    pub fn fail(&mut self, msg: impl Into<String>) {
        if self.pass {
            self.detail = msg.into();
        }
        self.pass = false;
    }

    pub fn check(&mut self, ok: bool, msg: impl FnOnce() -> String) {
        if !ok {
            self.fail(msg());
        }
    }
}

pub fn short_hash(text: &str) -> String {
    let digest = Sha256::digest(text.as_bytes());
    digest[..8].iter().fold(String::new(), |mut s, b| {
        let _ = write!(s, "{b:02x}");
        s
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Report {
    pub experiment: String,
    pub seed: u64,
    pub rows: Vec<Row>,
}

impl Report {
    pub fn passed(&self) -> usize {
        self.rows.iter().filter(|r| r.pass).count()
    }

    pub fn failed(&self) -> usize {
        self.rows.len() - self.passed()
    }

    pub fn all_pass(&self) -> bool {
        self.failed() == 0
    }

    pub fn failures(&self) -> impl Iterator<Item = &Row> {
        self.rows.iter().filter(|r| !r.pass)
    }

    pub fn summary(&self) -> String {
        format!(
            "{} seed={} rows={} passed={} failed={}",
            self.experiment,
            self.seed,
            self.rows.len(),
            self.passed(),
            self.failed()
        )
    }

    pub fn to_csv(&self) -> Result<String> {
        let mut w = csv::Writer::from_writer(Vec::new());
        let io = |e: csv::Error| Error::domain(format!("csv: {e}"));
        w.write_record([
            "experiment",
            "index",
            "instance",
            "hash",
            "lambda",
            "sim",
            "refined",
            "bound",
            "pass",
            "detail",
        ])
        .map_err(io)?;
        let opt = |v: Option<usize>| v.map(|x| x.to_string()).unwrap_or_default();
        for r in &self.rows {
            w.write_record([
                self.experiment.clone(),
                r.index.to_string(),
                r.instance.clone(),
                r.hash.clone(),
                opt(r.lambda),
                opt(r.sim),
                opt(r.refined),
                r.bound.clone().unwrap_or_default(),
                r.pass.to_string(),
                r.detail.clone(),
            ])
            .map_err(io)?;
        }
        let bytes = w
            .into_inner()
            .map_err(|e| Error::domain(format!("csv: {e}")))?;
        let mut s = String::from_utf8(bytes).expect("csv output is UTF-8");
        let _ = writeln!(s, "# {}", self.summary());
        Ok(s)
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for r in &self.rows {
            let opt = |v: Option<usize>| v.map_or("-".to_string(), |x| x.to_string());
            let _ = writeln!(
                s,
                "{:>5} {:<14} {} lambda={} sim={} refined={} bound={} {}{}",
                r.index,
                r.instance,
                r.hash,
                opt(r.lambda),
                opt(r.sim),
                opt(r.refined),
                r.bound.as_deref().unwrap_or("-"),
                if r.pass { "PASS" } else { "FAIL" },
                if r.detail.is_empty() {
                    String::new()
                } else {
                    format!(" {}", r.detail)
                },
            );
        }
        let _ = writeln!(s, "{}", self.summary());
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn csv_has_header_rows_and_summary() {
        let mut r = Row::new(0, "uniform", "uniform\nr=2 n=4\n");
        r.lambda = Some(2);
        r.fail("bad, really");
        let rep = Report {
            experiment: "x".into(),
            seed: 1,
            rows: vec![r],
        };
        let csv = rep.to_csv().unwrap();
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines.len(), 3);
        assert!(lines[1].ends_with("false,\"bad, really\""));
        assert_eq!(lines[2], "# x seed=1 rows=1 passed=0 failed=1");
        assert_eq!(short_hash("").len(), 16);
        assert_eq!(short_hash(""), "e3b0c44298fc1c14");
    }
}
