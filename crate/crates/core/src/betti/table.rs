use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Which ring a resolution is taken over.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Over {
    /// The polynomial ring the quotient is presented over.
    Ambient,
    /// The Clements–Lindström ring itself.
    Quotient,
}

impl std::str::FromStr for Over {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "ambient" => Ok(Over::Ambient),
            "quotient" => Ok(Over::Quotient),
            other => Err(Error::Parse(format!("expected ambient or quotient, got {other:?}"))),
        }
    }
}

/// Entries `β_{i,j}` with `i ≤ imax` and `j ≤ jmax` are exact.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Window {
    pub imax: u32,
    pub jmax: u32,
}

/// Graded Betti numbers `β_{i,j}` of a cyclic module `R/I`.
///
/// `i` is the homological degree and `j` the internal degree; `β_{0,0} = 1` unless `I` is the unit ideal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BettiTable {
    over: Over,
    entries: BTreeMap<(u32, u32), u64>,
    window: Window,
}

#[derive(Serialize, Deserialize)]
struct Entry {
    i: u32,
    j: u32,
    b: u64,
}

#[derive(Serialize, Deserialize)]
struct TableJson {
    over: Over,
    window: Window,
    entries: Vec<Entry>,
    totals: Vec<u64>,
}

impl BettiTable {
    pub(crate) fn new(over: Over, window: Window) -> Self {
        BettiTable { over, entries: BTreeMap::new(), window }
    }

    /// Builds the table of `R/I` from the graded Betti numbers of the ideal `I`.
    pub(crate) fn from_ideal_side(over: Over, window: Window, ideal: &BTreeMap<(u32, u32), u64>, unit: bool) -> Self {
        let mut t = BettiTable::new(over, window);
        if unit {
            return t;
        }
        t.add(0, 0, 1);
        for (&(i, j), &b) in ideal {
            if i < window.imax {
                t.add(i + 1, j, b);
            }
        }
        t
    }

    pub(crate) fn add(&mut self, i: u32, j: u32, b: u64) {
        if b > 0 && i <= self.window.imax && j <= self.window.jmax {
            *self.entries.entry((i, j)).or_insert(0) += b;
        }
    }

    pub fn over(&self) -> Over {
        self.over
    }

    pub fn window(&self) -> Window {
        self.window
    }

    /// `β_{i,j}`, zero when absent.
    pub fn get(&self, i: u32, j: u32) -> u64 {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    /// Nonzero entries in `(i, j)` order.
    pub fn entries(&self) -> impl Iterator<Item = (u32, u32, u64)> + '_ {
        self.entries.iter().map(|(&(i, j), &b)| (i, j, b))
    }

    /// `β_i = Σ_j β_{i,j}` for `i = 0..=imax`, trailing zeros dropped.
    pub fn totals(&self) -> Vec<u64> {
        let mut t = vec![0u64; self.window.imax as usize + 1];
        for (&(i, _), &b) in &self.entries {
            t[i as usize] += b;
        }
        while t.last() == Some(&0) {
            t.pop();
        }
        t
    }

    /// Totals of the ideal `I`: `β_i(I) = β_{i+1}(R/I)`. The unit ideal gives `[1]`.
    pub fn ideal_totals(&self) -> Vec<u64> {
        let t = self.totals();
        if t.is_empty() {
            return vec![1];
        }
        t[1..].to_vec()
    }

    /// `max(j - i)` over the nonzero entries, 0 for an empty table.
    pub fn regularity(&self) -> u32 {
        self.entries().map(|(i, j, _)| j.saturating_sub(i)).max().unwrap_or(0)
    }

    /// Same entries, ignoring the ring tag and window.
    pub fn same_entries(&self, other: &BettiTable) -> bool {
        self.entries == other.entries
    }

    /// Restriction to a smaller window.
    pub fn truncate(&self, window: Window) -> BettiTable {
        let mut t = BettiTable::new(self.over, window);
        for (i, j, b) in self.entries() {
            t.add(i, j, b);
        }
        t
    }

    pub fn to_json(&self) -> serde_json::Value {
        let j = TableJson {
            over: self.over,
            window: self.window,
            entries: self.entries().map(|(i, j, b)| Entry { i, j, b }).collect(),
            totals: self.totals(),
        };
        serde_json::to_value(j).expect("plain data")
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Self> {
        let j: TableJson = serde_json::from_value(v.clone()).map_err(|e| Error::Parse(e.to_string()))?;
        let mut t = BettiTable::new(j.over, j.window);
        for e in j.entries {
            t.add(e.i, e.j, e.b);
        }
        Ok(t)
    }

    /// Betti diagram as CSV: one row per `j - i`, one column per `i`.
    pub fn to_csv(&self) -> String {
        let cols = self.totals().len().max(1);
        let rows = self.entries().map(|(i, j, _)| j.saturating_sub(i)).max().map_or(0, |r| r + 1);
        let mut w = csv::Writer::from_writer(Vec::new());
        let mut header = vec!["j-i".to_string()];
        header.extend((0..cols).map(|i| i.to_string()));
        w.write_record(&header).expect("in-memory write");
        for r in 0..rows {
            let mut rec = vec![r.to_string()];
            rec.extend((0..cols as u32).map(|i| self.get(i, i + r).to_string()));
            w.write_record(&rec).expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("in-memory write")).expect("ascii")
    }
}
