use std::fmt::Write as _;
use std::path::Path;

use itertools::Itertools;
use rayon::prelude::*;
use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::belts::find_belts;
use crate::betti::{betti_sweep, vertices_from_b2, BettiVector};
use crate::error::{Error, Result};
use crate::parallel::with_threads;
use crate::sphere::{CanonicalCode, Triangulation};
use crate::surgery::decompose;

use super::enumerate::{enumerate_layers, EnumerateOptions};

/// One isomorphism class with its derived invariants.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CensusRecord {
    pub code: CanonicalCode,
    pub n: usize,
    pub betti: BettiVector,
    pub belts3: usize,
    pub belts4: usize,
    pub irreducible: bool,
    /// Canonical codes of the irreducible summands, sorted.
    pub leaves: Vec<CanonicalCode>,
}

impl CensusRecord {
    pub fn from_triangulation(t: &Triangulation) -> Result<Self> {
        let n = t.n();
        let betti = betti_sweep(t)?;
        let belts3 = find_belts(t, 3).map_or(0, |b| b.len());
        let belts4 = find_belts(t, 4).map_or(0, |b| b.len());
        Ok(CensusRecord {
            code: t.canonical_code(),
            n,
            betti,
            belts3,
            belts4,
            irreducible: belts3 == 0,
            leaves: decompose(t).leaves(),
        })
    }

    /// The sphere in canonical labelling.
    pub fn triangulation(&self) -> Triangulation {
        self.code.decode().expect("record codes are checked on construction")
    }

    /// `b_{n-k}`.
    pub fn b_from_top(&self, k: usize) -> i64 {
        self.betti.from_top(k)
    }

    fn to_line(&self) -> String {
        format!(
            "n={} code={} b={} belts3={} belts4={} irred={} leaves={}",
            self.n,
            self.code.to_hex(),
            self.betti.values().iter().join(","),
            self.belts3,
            self.belts4,
            u8::from(self.irreducible),
            self.leaves.iter().map(CanonicalCode::to_hex).join(";"),
        )
    }

    fn parse(line: &str) -> Result<Self> {
        let mut fields = [None; 7];
        const KEYS: [&str; 7] = ["n", "code", "b", "belts3", "belts4", "irred", "leaves"];
        for token in line.split_whitespace() {
            let (key, value) =
                token.split_once('=').ok_or_else(|| Error::CorruptDatabase(format!("field without `=`: {token}")))?;
            let slot = KEYS
                .iter()
                .position(|k| *k == key)
                .ok_or_else(|| Error::CorruptDatabase(format!("unknown field `{key}`")))?;
            if fields[slot].replace(value).is_some() {
                return Err(Error::CorruptDatabase(format!("repeated field `{key}`")));
            }
        }
        let get = |i: usize| fields[i].ok_or_else(|| Error::CorruptDatabase(format!("missing field `{}`", KEYS[i])));
        let number = |i: usize| -> Result<usize> {
            get(i)?.parse().map_err(|_| Error::CorruptDatabase(format!("bad value for `{}`", KEYS[i])))
        };
        let corrupt = |e: Error| Error::CorruptDatabase(e.to_string());
        let leaves_text = get(6)?;
        let leaves = if leaves_text.is_empty() {
            Vec::new()
        } else {
            leaves_text.split(';').map(CanonicalCode::from_hex).collect::<Result<Vec<_>>>().map_err(corrupt)?
        };
        let irred = match get(5)? {
            "0" => false,
            "1" => true,
            other => return Err(Error::CorruptDatabase(format!("bad irred flag `{other}`"))),
        };
        let record = CensusRecord {
            n: number(0)?,
            code: CanonicalCode::from_hex(get(1)?).map_err(corrupt)?,
            betti: get(2)?.parse().map_err(corrupt)?,
            belts3: number(3)?,
            belts4: number(4)?,
            irreducible: irred,
            leaves,
        };
        record.check()?;
        Ok(record)
    }

    /// Internal consistency of a record, as enforced on load.
    fn check(&self) -> Result<()> {
        let bad = |m: String| Err(Error::CorruptDatabase(format!("record {}: {m}", self.code)));
        let t = self.code.decode_verified().map_err(|e| Error::CorruptDatabase(e.to_string()))?;
        if t.n() != self.n {
            return bad(format!("code has {} vertices, record says {}", t.n(), self.n));
        }
        if self.betti.n() != self.n {
            return bad("Betti vector has the wrong length".into());
        }
        if vertices_from_b2(self.betti.get(2)).ok() != Some(self.n) {
            return bad(format!("b2 = {} contradicts n = {}", self.betti.get(2), self.n));
        }
        if self.irreducible != (self.belts3 == 0) {
            return bad("irreducible flag disagrees with the 3-belt count".into());
        }
        if self.belts3 as i64 != self.b_from_top(3) {
            return bad("3-belt count differs from b_{n-3}".into());
        }
        if self.leaves.len() != self.belts3 + 1 {
            return bad("leaf count differs from 3-belt count + 1".into());
        }
        if self.irreducible && self.n >= 6 && self.belts4 as i64 != self.b_from_top(4) {
            return bad("4-belt count differs from b_{n-4}".into());
        }
        Ok(())
    }
}

/// Records sorted by `(n, code)` together with the set of complete layers.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CensusDatabase {
    layers: Vec<usize>,
    records: Vec<CensusRecord>,
}

impl CensusDatabase {
    pub fn empty() -> Self {
        CensusDatabase::default()
    }

    /// Enumerates and records every sphere with `4..=max_n` vertices.
    pub fn build(max_n: usize, opts: &EnumerateOptions) -> Result<Self> {
        let layers = enumerate_layers(max_n, opts)?;
        let records = with_threads(opts.threads, || {
            layers
                .iter()
                .flatten()
                .collect::<Vec<_>>()
                .par_iter()
                .map(|t| CensusRecord::from_triangulation(t))
                .collect::<Result<Vec<_>>>()
        })?;
        Ok(CensusDatabase { layers: (4..=max_n).collect(), records })
    }

    pub fn layers(&self) -> &[usize] {
        &self.layers
    }

    pub fn max_n(&self) -> Option<usize> {
        self.layers.last().copied()
    }

    pub fn records(&self) -> &[CensusRecord] {
        &self.records
    }

    pub fn is_complete(&self, n: usize) -> bool {
        self.layers.binary_search(&n).is_ok()
    }

    /// All records on `n` vertices; fails unless that layer is complete.
    pub fn layer(&self, n: usize) -> Result<&[CensusRecord]> {
        if !self.is_complete(n) {
            return Err(Error::IncompleteCensus(n));
        }
        let lo = self.records.partition_point(|r| r.n < n);
        let hi = self.records.partition_point(|r| r.n <= n);
        Ok(&self.records[lo..hi])
    }

    pub fn find(&self, code: &CanonicalCode) -> Option<&CensusRecord> {
        self.records.binary_search_by(|r| (r.n, &r.code).cmp(&(code.vertex_count(), code))).ok().map(|i| &self.records[i])
    }

    pub fn to_text(&self) -> String {
        let mut body = format!("layers={}\n", self.layers.iter().join(","));
        for r in &self.records {
            body.push_str(&r.to_line());
            body.push('\n');
        }
        let digest = hex::encode(Sha256::digest(body.as_bytes()));
        let _ = writeln!(body, "checksum={digest}");
        body
    }

    /// Parses and checks a database. Without a `layers=` header the layers
    /// are taken to be the vertex counts present.
    pub fn from_text(text: &str) -> Result<Self> {
        let trimmed = text.trim_end_matches('\n');
        let (body, last) = match trimmed.rfind('\n') {
            Some(i) => (&text[..=i], &trimmed[i + 1..]),
            None => ("", trimmed),
        };
        let expected = last
            .strip_prefix("checksum=")
            .ok_or_else(|| Error::CorruptDatabase("missing checksum line".into()))?;
        let digest = hex::encode(Sha256::digest(body.as_bytes()));
        if digest != expected {
            return Err(Error::CorruptDatabase("checksum mismatch".into()));
        }
        let mut layers = None;
        let mut records = Vec::new();
        for line in body.lines().filter(|l| !l.trim().is_empty()) {
            if let Some(list) = line.strip_prefix("layers=") {
                let parsed = list
                    .split(',')
                    .filter(|s| !s.is_empty())
                    .map(|s| s.parse::<usize>())
                    .collect::<std::result::Result<Vec<_>, _>>()
                    .map_err(|_| Error::CorruptDatabase(format!("bad layers header `{line}`")))?;
                layers = Some(parsed);
            } else {
                records.push(CensusRecord::parse(line)?);
            }
        }
        if records.windows(2).any(|w| (w[0].n, &w[0].code) >= (w[1].n, &w[1].code)) {
            return Err(Error::CorruptDatabase("records are not sorted by (n, code) or repeat".into()));
        }
        let layers = layers.unwrap_or_else(|| records.iter().map(|r| r.n).dedup().collect());
        if layers.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::CorruptDatabase("layers header is not increasing".into()));
        }
        if let Some(r) = records.iter().find(|r| layers.binary_search(&r.n).is_err()) {
            return Err(Error::CorruptDatabase(format!("record on {} vertices outside the listed layers", r.n)));
        }
        Ok(CensusDatabase { layers, records })
    }

    pub fn save(&self, path: impl AsRef<Path>) -> Result<()> {
        std::fs::write(path, self.to_text())?;
        Ok(())
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        Self::from_text(&std::fs::read_to_string(path)?)
    }
}
