//! Append-only JSONL cache of count rows, keyed by canonical group, the
//! distinguished generator and length, and stamped with the engine version.

use std::fs::{self, File, OpenOptions};
use std::io::{BufRead, BufReader, Write};
use std::path::{Path, PathBuf};

use anyhow::{Context, Result};
use sawlab::saw::{CountsRow, CountsTable};
use sawlab::{Counts, ENGINE_VERSION};
use serde::{Deserialize, Serialize};

#[derive(Debug, Serialize, Deserialize)]
struct Entry {
    engine: String,
    group: String,
    distinguished: Option<usize>,
    n: usize,
    c: String,
    b: Option<Vec<String>>,
    h: Option<Vec<String>>,
}

pub struct Cache {
    path: PathBuf,
}

fn parse_all(xs: &[String]) -> Option<Vec<num_bigint::BigUint>> {
    xs.iter().map(|x| x.parse().ok()).collect()
}

impl Cache {
    pub fn new(path: PathBuf) -> Self {
        Cache { path }
    }

    pub fn path(&self) -> &Path {
        &self.path
    }

    fn entries(&self) -> Result<Vec<Entry>> {
        let file = match File::open(&self.path) {
            Ok(f) => f,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(Vec::new()),
            Err(e) => return Err(e).with_context(|| format!("opening cache {}", self.path.display())),
        };
        file.lock_shared()
            .with_context(|| format!("locking cache {}", self.path.display()))?;
        let mut out = Vec::new();
        for line in BufReader::new(&file).lines() {
            let line = line.with_context(|| format!("reading cache {}", self.path.display()))?;
            match serde_json::from_str::<Entry>(&line) {
                Ok(e) if e.engine == ENGINE_VERSION => out.push(e),
                Ok(_) => {}
                Err(err) => log::warn!("skipping unreadable cache line: {err}"),
            }
        }
        Ok(out)
    }

    /// The table for `group` up to `max_len`, if every row is cached.
    pub fn lookup(
        &self,
        group: &str,
        distinguished: Option<usize>,
        max_len: usize,
        heights: bool,
    ) -> Result<Option<Counts>> {
        let mut rows: Vec<Option<CountsRow<num_bigint::BigUint>>> = vec![None; max_len + 1];
        for e in self.entries()? {
            if e.group != group || e.distinguished != distinguished || e.n > max_len {
                continue;
            }
            if rows[e.n].as_ref().is_some_and(|r| r.b.is_some() || !heights) {
                continue;
            }
            let (b, h) = match (&e.b, &e.h) {
                (Some(b), Some(h)) => (parse_all(b), parse_all(h)),
                _ => (None, None),
            };
            if heights && b.is_none() {
                continue;
            }
            let Ok(c) = e.c.parse() else { continue };
            rows[e.n] = Some(CountsRow {
                n: e.n,
                c,
                b: b.filter(|_| heights),
                h: h.filter(|_| heights),
            });
        }
        let Some(rows) = rows.into_iter().collect::<Option<Vec<_>>>() else {
            return Ok(None);
        };
        Ok(CountsTable::from_rows(group, distinguished, rows).ok())
    }

    pub fn store(&self, table: &Counts) -> Result<()> {
        if let Some(dir) = self.path.parent().filter(|d| !d.as_os_str().is_empty()) {
            fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
        }
        let mut file = OpenOptions::new()
            .create(true)
            .append(true)
            .open(&self.path)
            .with_context(|| format!("opening cache {}", self.path.display()))?;
        file.lock()
            .with_context(|| format!("locking cache {}", self.path.display()))?;
        let strings = |xs: &Option<Vec<num_bigint::BigUint>>| {
            xs.as_ref().map(|v| v.iter().map(ToString::to_string).collect())
        };
        let mut buf = String::new();
        for n in 0..=table.max_len() {
            let row = table.row(n);
            let entry = Entry {
                engine: ENGINE_VERSION.to_string(),
                group: table.group().to_string(),
                distinguished: table.distinguished(),
                n,
                c: row.c.to_string(),
                b: strings(&row.b),
                h: strings(&row.h),
            };
            buf.push_str(&serde_json::to_string(&entry)?);
            buf.push('\n');
        }
        file.write_all(buf.as_bytes())
            .with_context(|| format!("writing cache {}", self.path.display()))?;
        Ok(())
    }
}
