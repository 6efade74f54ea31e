//! Side-by-side per-level statistics for Apriori and DHP, and their
//! text, CSV and JSON renderings.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::apriori::{mine_apriori, Algorithm, LevelRecord, MiningResult};
use crate::dhp::{mine_dhp, HashConfig};
use crate::error::{Error, Result};
use crate::model::{CountedItemset, ItemOrderMap, SupportThreshold, TransactionDatabase};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Text,
    Csv,
    Json,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportedItemset {
    pub items: Vec<String>,
    pub support: usize,
}

impl ReportedItemset {
    fn new(order: &ItemOrderMap, counted: &CountedItemset) -> Self {
        ReportedItemset {
            items: order.tokens(&counted.itemset),
            support: counted.support,
        }
    }

    /// `B,C,E / 2`
    pub fn label(&self) -> String {
        format!("{} / {}", self.items.join(","), self.support)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InputSummary {
    pub transactions: usize,
    pub items: usize,
    pub min_sup: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub buckets: Option<usize>,
}

/// One algorithm's numbers for one level.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SideStats {
    pub candidates: usize,
    pub frequent: usize,
    pub db_rows_after: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub candidate_itemsets: Option<Vec<ReportedItemset>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub frequent_itemsets: Option<Vec<ReportedItemset>>,
}

impl SideStats {
    fn from_level(level: &LevelRecord, order: &ItemOrderMap) -> Self {
        let list = |sets: &[CountedItemset]| {
            Some(
                sets.iter()
                    .map(|c| ReportedItemset::new(order, c))
                    .collect(),
            )
        };
        SideStats {
            candidates: level.candidate_count(),
            frequent: level.frequent_count(),
            db_rows_after: level.db_rows_after,
            candidate_itemsets: list(&level.candidates),
            frequent_itemsets: list(&level.frequent),
        }
    }

    /// A level the algorithm never reached; the database is as it left it.
    fn unreached(db_rows: usize) -> Self {
        SideStats {
            candidates: 0,
            frequent: 0,
            db_rows_after: db_rows,
            candidate_itemsets: Some(Vec::new()),
            frequent_itemsets: Some(Vec::new()),
        }
    }

    fn strip_listings(&mut self) {
        self.candidate_itemsets = None;
        self.frequent_itemsets = None;
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LevelComparison {
    pub k: usize,
    pub apriori: SideStats,
    pub dhp: SideStats,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComparisonReport {
    pub schema: u32,
    pub input: InputSummary,
    pub levels: Vec<LevelComparison>,
}

impl ComparisonReport {
    /// Drops the itemset listings, keeping only counts.
    pub fn without_listings(mut self) -> Self {
        for level in &mut self.levels {
            level.apriori.strip_listings();
            level.dhp.strip_listings();
        }
        self
    }

    pub fn from_json(json: &str) -> Result<Self> {
        serde_json::from_str(json).map_err(|e| Error::Parse {
            line: e.line(),
            message: e.to_string(),
        })
    }
}

/// Runs both miners and lines up their levels.
///
/// Fails if the frequent sets differ at any level, or if DHP ever has a
/// candidate that Apriori does not.
pub fn compare(
    db: &TransactionDatabase,
    threshold: SupportThreshold,
    config: &HashConfig,
) -> Result<ComparisonReport> {
    let (apriori, dhp) = std::thread::scope(|s| {
        let dhp = s.spawn(|| mine_dhp(db, threshold, config));
        let apriori = mine_apriori(db, threshold);
        (apriori, dhp.join().expect("dhp miner panicked"))
    });
    let order = db.order();
    let depth = apriori.levels.len().max(dhp.levels.len());
    let mut levels = Vec::with_capacity(depth);
    let empty: Vec<CountedItemset> = Vec::new();

    for k in 1..=depth {
        let a = apriori.level(k);
        let d = dhp.level(k);
        let a_frequent = a.map_or(&empty, |l| &l.frequent);
        let d_frequent = d.map_or(&empty, |l| &l.frequent);
        if a_frequent != d_frequent {
            let only = |x: &[CountedItemset], y: &[CountedItemset]| -> Vec<String> {
                x.iter()
                    .filter(|c| !y.contains(c))
                    .map(|c| ReportedItemset::new(order, c).label())
                    .collect()
            };
            return Err(Error::MinerDisagreement {
                level: k,
                only_apriori: only(a_frequent, d_frequent),
                only_dhp: only(d_frequent, a_frequent),
            });
        }
        if k >= 2 {
            let a_candidates = a.map_or(&empty, |l| &l.candidates);
            let d_candidates = d.map_or(&empty, |l| &l.candidates);
            let dominated = d_candidates
                .iter()
                .all(|c| a_candidates.iter().any(|x| x.itemset == c.itemset));
            if !dominated {
                return Err(Error::CandidateDomination {
                    level: k,
                    apriori: a_candidates.len(),
                    dhp: d_candidates.len(),
                });
            }
        }
        levels.push(LevelComparison {
            k,
            apriori: side(&apriori, k, order, db.len()),
            dhp: side(&dhp, k, order, db.len()),
        });
    }

    Ok(ComparisonReport {
        schema: SCHEMA_VERSION,
        input: InputSummary {
            transactions: db.len(),
            items: db.universe_size(),
            min_sup: threshold.min_sup(),
            buckets: Some(config.bucket_count()),
        },
        levels,
    })
}

fn side(result: &MiningResult, k: usize, order: &ItemOrderMap, db_rows: usize) -> SideStats {
    match result.level(k) {
        Some(level) => SideStats::from_level(level, order),
        None => SideStats::unreached(result.levels.last().map_or(db_rows, |l| l.db_rows_after)),
    }
}

/// A single miner's run in report form.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MiningReport {
    pub schema: u32,
    pub algorithm: Algorithm,
    pub input: InputSummary,
    pub levels: Vec<MinedLevel>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MinedLevel {
    pub k: usize,
    #[serde(flatten)]
    pub stats: SideStats,
}

impl MiningReport {
    pub fn new(
        db: &TransactionDatabase,
        result: &MiningResult,
        config: Option<&HashConfig>,
    ) -> Self {
        MiningReport {
            schema: SCHEMA_VERSION,
            algorithm: result.algorithm,
            input: InputSummary {
                transactions: db.len(),
                items: db.universe_size(),
                min_sup: result.threshold.min_sup(),
                buckets: config.map(HashConfig::bucket_count),
            },
            levels: result
                .levels
                .iter()
                .map(|l| MinedLevel {
                    k: l.k,
                    stats: SideStats::from_level(l, db.order()),
                })
                .collect(),
        }
    }

    pub fn without_listings(mut self) -> Self {
        for level in &mut self.levels {
            level.stats.strip_listings();
        }
        self
    }
}

pub fn render(report: &ComparisonReport, format: Format) -> String {
    match format {
        Format::Text => {
            let title = format!(
                "Apriori vs DHP: {} transactions, {} items, min_sup {}, {} buckets",
                report.input.transactions,
                report.input.items,
                report.input.min_sup,
                report.input.buckets.unwrap_or_default()
            );
            let sides: Vec<(&str, Vec<&SideStats>)> = vec![
                (
                    "Apriori",
                    report.levels.iter().map(|l| &l.apriori).collect(),
                ),
                ("DHP", report.levels.iter().map(|l| &l.dhp).collect()),
            ];
            render_table(&title, report.input.transactions, &sides)
        }
        Format::Csv => {
            let rows = report.levels.iter().flat_map(|l| {
                [
                    (l.k, Algorithm::Apriori, &l.apriori),
                    (l.k, Algorithm::Dhp, &l.dhp),
                ]
            });
            render_csv(rows)
        }
        Format::Json => to_json(report),
    }
}

pub fn render_mining(report: &MiningReport, format: Format) -> String {
    match format {
        Format::Text => {
            let mut title = format!(
                "{}: {} transactions, {} items, min_sup {}",
                report.algorithm.name(),
                report.input.transactions,
                report.input.items,
                report.input.min_sup
            );
            if let Some(buckets) = report.input.buckets {
                let _ = write!(title, ", {buckets} buckets");
            }
            let label = match report.algorithm {
                Algorithm::Apriori => "Apriori",
                Algorithm::Dhp => "DHP",
            };
            let sides = vec![(label, report.levels.iter().map(|l| &l.stats).collect())];
            render_table(&title, report.input.transactions, &sides)
        }
        Format::Csv => render_csv(
            report
                .levels
                .iter()
                .map(|l| (l.k, report.algorithm, &l.stats)),
        ),
        Format::Json => to_json(report),
    }
}

/// One line per itemset, `A,C / 2`.
pub fn render_itemsets(order: &ItemOrderMap, itemsets: &[CountedItemset]) -> String {
    itemsets
        .iter()
        .map(|c| ReportedItemset::new(order, c).label() + "\n")
        .collect()
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut out = serde_json::to_string_pretty(value).expect("report serializes");
    out.push('\n');
    out
}

fn render_csv<'a>(rows: impl Iterator<Item = (usize, Algorithm, &'a SideStats)>) -> String {
    let mut writer = csv::Writer::from_writer(Vec::new());
    writer
        .write_record([
            "k",
            "algorithm",
            "candidates",
            "frequent",
            "db_rows_after",
            "candidate_itemsets",
            "frequent_itemsets",
        ])
        .expect("in-memory write");
    let cell = |sets: &Option<Vec<ReportedItemset>>| {
        sets.as_deref().map_or(String::new(), |sets| {
            sets.iter()
                .map(|s| format!("{}/{}", s.items.join(","), s.support))
                .collect::<Vec<_>>()
                .join(" ")
        })
    };
    for (k, algorithm, stats) in rows {
        writer
            .write_record([
                k.to_string(),
                algorithm.name().to_string(),
                stats.candidates.to_string(),
                stats.frequent.to_string(),
                stats.db_rows_after.to_string(),
                cell(&stats.candidate_itemsets),
                cell(&stats.frequent_itemsets),
            ])
            .expect("in-memory write");
    }
    String::from_utf8(writer.into_inner().expect("in-memory flush")).expect("csv is utf-8")
}

fn plural(n: usize) -> &'static str {
    if n == 1 {
        "itemset"
    } else {
        "itemsets"
    }
}

/// Cell contents for one side of one table row: text lines plus a row count.
struct Cell {
    lines: Vec<String>,
    rows: usize,
}

fn listing_lines(head: String, sets: &Option<Vec<ReportedItemset>>) -> Vec<String> {
    let mut lines = vec![head];
    if let Some(sets) = sets {
        lines.extend(sets.iter().map(|s| format!("  {}", s.label())));
    }
    lines
}

fn render_table(title: &str, transactions: usize, sides: &[(&str, Vec<&SideStats>)]) -> String {
    let levels = sides.first().map_or(0, |(_, stats)| stats.len());
    // (label, one cell per side)
    let mut rows: Vec<(String, Vec<Cell>)> = Vec::new();
    rows.push((
        "   D".to_string(),
        sides
            .iter()
            .map(|_| Cell {
                lines: vec![format!("{transactions} - transactions considered")],
                rows: transactions,
            })
            .collect(),
    ));
    for i in 0..levels {
        let k = i + 1;
        let candidates = sides
            .iter()
            .map(|(_, stats)| {
                let s = stats[i];
                Cell {
                    lines: listing_lines(
                        format!("{} - {} for C{k}", s.candidates, plural(s.candidates)),
                        &s.candidate_itemsets,
                    ),
                    rows: s.db_rows_after,
                }
            })
            .collect();
        rows.push((format!("{k:<2} C{k}"), candidates));
        let frequent = sides
            .iter()
            .map(|(_, stats)| {
                let s = stats[i];
                Cell {
                    lines: listing_lines(
                        format!("{} - {} selected for L{k}", s.frequent, plural(s.frequent)),
                        &s.frequent_itemsets,
                    ),
                    rows: s.db_rows_after,
                }
            })
            .collect();
        rows.push((format!("{k:<2} L{k}"), frequent));
    }

    let label_width = rows
        .iter()
        .map(|(label, _)| label.len())
        .chain(["K  Set".len()])
        .max()
        .unwrap_or(0);
    let side_widths: Vec<(usize, usize)> = sides
        .iter()
        .enumerate()
        .map(|(s, (name, _))| {
            let text = rows
                .iter()
                .flat_map(|(_, cells)| cells[s].lines.iter().map(String::len))
                .chain([name.len()])
                .max()
                .unwrap_or(0);
            let count = rows
                .iter()
                .map(|(_, cells)| cells[s].rows.to_string().len())
                .chain(["Rows".len()])
                .max()
                .unwrap_or(0);
            (text, count)
        })
        .collect();

    let mut out = String::new();
    let _ = writeln!(out, "{title}\n");
    let mut header = format!("{:<label_width$}", "K  Set");
    let mut rule = "-".repeat(label_width + 1);
    for ((name, _), &(text, count)) in sides.iter().zip(&side_widths) {
        let _ = write!(header, " | {name:<text$}  {:>count$}", "Rows");
        rule.push('+');
        rule.push_str(&"-".repeat(text + count + 4));
    }
    push_line(&mut out, &header);
    push_line(&mut out, &rule);

    for (label, cells) in &rows {
        let height = cells.iter().map(|c| c.lines.len()).max().unwrap_or(1);
        for line in 0..height {
            let mut text = if line == 0 {
                format!("{label:<label_width$}")
            } else {
                " ".repeat(label_width)
            };
            for (cell, &(width, count)) in cells.iter().zip(&side_widths) {
                let body = cell.lines.get(line).map_or("", String::as_str);
                let rows = if line == 0 {
                    cell.rows.to_string()
                } else {
                    String::new()
                };
                let _ = write!(text, " | {body:<width$}  {rows:>count$}");
            }
            push_line(&mut out, &text);
        }
    }
    out
}

fn push_line(out: &mut String, line: &str) {
    out.push_str(line.trim_end());
    out.push('\n');
}
