//! Distribution of Helly numbers over all free polyominoes of each size.

use std::collections::BTreeMap;
use std::time::Instant;

use rayon::prelude::*;

use crate::engine::{helly_number, HellyResult};
use crate::enumerate::enumerate_free;
use crate::error::{Error, Result};

/// Helly numbers with a CSV column. There is no column for 3.
pub const HELLY_COLUMNS: [usize; 8] = [2, 4, 5, 6, 7, 8, 9, 10];

pub const CSV_HEADER: &str = "n,total,h2,h4,h5,h6,h7,h8,h9,h10,seconds";

#[derive(Debug, Clone, PartialEq)]
pub struct CensusRow {
    pub n: usize,
    pub total: usize,
    pub counts: BTreeMap<usize, usize>,
    pub seconds: f64,
}

impl CensusRow {
    pub fn count(&self, helly: usize) -> usize {
        self.counts.get(&helly).copied().unwrap_or(0)
    }

    /// Everything but the timing column.
    pub fn csv_counts(&self) -> Result<String> {
        if let Some(&h) = self.counts.keys().find(|h| !HELLY_COLUMNS.contains(h)) {
            return Err(Error::Consistency(format!("size {} has Helly number {h}, which has no column", self.n)));
        }
        let cols: Vec<String> = HELLY_COLUMNS.iter().map(|h| self.count(*h).to_string()).collect();
        Ok(format!("{},{},{}", self.n, self.total, cols.join(",")))
    }

    pub fn csv_line(&self) -> Result<String> {
        Ok(format!("{},{:.2}", self.csv_counts()?, self.seconds))
    }
}

/// Helly results for every free polyomino of size `n`, in enumeration order.
pub fn census_results(n: usize, pool: &rayon::ThreadPool) -> Result<Vec<HellyResult>> {
    let shapes: Vec<_> = enumerate_free(n)?.collect();
    pool.install(|| shapes.par_iter().map(helly_number).collect())
}

pub fn summarize(n: usize, results: &[HellyResult], seconds: f64) -> Result<CensusRow> {
    let mut counts = BTreeMap::new();
    for r in results {
        if r.helly_number == 3 {
            return Err(Error::Consistency(format!("{:?} computed Helly number 3", r.polyomino)));
        }
        *counts.entry(r.helly_number).or_insert(0) += 1;
    }
    Ok(CensusRow { n, total: results.len(), counts, seconds })
}

pub fn thread_pool(jobs: usize) -> Result<rayon::ThreadPool> {
    rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .map_err(|e| Error::Consistency(format!("thread pool: {e}")))
}

/// Rows for sizes `1..=max_n`; `on_row` sees each row as soon as it is done.
pub fn run_census(max_n: usize, jobs: usize, mut on_row: impl FnMut(&CensusRow)) -> Result<Vec<CensusRow>> {
    let pool = thread_pool(jobs)?;
    (1..=max_n)
        .map(|n| {
            let start = Instant::now();
            let results = census_results(n, &pool)?;
            let row = summarize(n, &results, start.elapsed().as_secs_f64())?;
            on_row(&row);
            Ok(row)
        })
        .collect()
}

pub fn to_csv(rows: &[CensusRow]) -> Result<String> {
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for row in rows {
        out.push_str(&row.csv_line()?);
        out.push('\n');
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_rows() {
        let rows = run_census(5, 2, |_| {}).unwrap();
        let lines: Vec<String> = rows.iter().map(|r| r.csv_counts().unwrap()).collect();
        assert_eq!(
            lines,
            [
                "1,1,1,0,0,0,0,0,0,0",
                "2,1,1,0,0,0,0,0,0,0",
                "3,2,1,1,0,0,0,0,0,0",
                "4,5,2,3,0,0,0,0,0,0",
                "5,12,1,11,0,0,0,0,0,0",
            ]
        );
    }

    #[test]
    fn missing_column_is_an_error() {
        let row = CensusRow { n: 15, total: 1, counts: BTreeMap::from([(11, 1)]), seconds: 0.0 };
        assert!(matches!(row.csv_line(), Err(Error::Consistency(_))));
    }
}
