use std::collections::BTreeMap;
use std::fmt::Write;

use blockloewy::lab::{BlockSummary, Claim, InstanceReport, SuiteReport, Verdict, VerificationReport};
use serde::{Deserialize, Serialize};

use crate::Format;

const NOT_COMPUTED: &str = "not computed";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogEntry {
    pub spec: String,
    pub order: usize,
    pub name: String,
}

/// One CSV row per block.
#[derive(Serialize)]
struct BlockRow<'a> {
    group: &'a str,
    p: u32,
    s: u32,
    block: usize,
    principal: bool,
    d: u32,
    defect_group_order: u64,
    defect_group_cyclic: bool,
    center_type: String,
    m: u32,
    r: usize,
    e: usize,
    k: usize,
    l: String,
    loewy_length: usize,
    codims: String,
    fixed_point_loewy_length: usize,
    lambda: usize,
}

fn join<T: ToString>(xs: &[T], sep: &str) -> String {
    xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(sep)
}

fn l_text(l: Option<usize>) -> String {
    l.map_or_else(|| NOT_COMPUTED.to_string(), |l| l.to_string())
}

pub fn suite(report: &SuiteReport, format: Format) -> Result<String, String> {
    match format {
        Format::Json => serde_json::to_string_pretty(report).map(|s| s + "\n").map_err(|e| e.to_string()),
        Format::Csv => csv_blocks(report),
        Format::Text => Ok(text(report)),
    }
}

fn csv_blocks(report: &SuiteReport) -> Result<String, String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    for inst in &report.instances {
        for b in &inst.blocks {
            w.serialize(BlockRow {
                group: &inst.group,
                p: inst.p,
                s: inst.s,
                block: b.index,
                principal: b.principal,
                d: b.defect,
                defect_group_order: b.defect_group_order,
                defect_group_cyclic: b.defect_group_cyclic,
                center_type: join(&b.center_type, ";"),
                m: b.m,
                r: b.r,
                e: b.e,
                k: b.k,
                l: l_text(b.l),
                loewy_length: b.loewy_length,
                codims: join(&b.codims, ";"),
                fixed_point_loewy_length: b.fixed_point_loewy_length,
                lambda: b.lambda,
            })
            .map_err(|e| e.to_string())?;
        }
    }
    let bytes = w.into_inner().map_err(|e| e.to_string())?;
    String::from_utf8(bytes).map_err(|e| e.to_string())
}

pub fn check_line(r: &VerificationReport) -> String {
    let block = r.block.map_or_else(String::new, |b| format!(" B{b}"));
    let values = r.values.iter().map(|(k, v)| format!("{k}={v}")).collect::<Vec<_>>().join(" ");
    let mut line = format!("{:<7} {:<22} {}@{}{block}  {values}", r.verdict.label(), r.claim.id(), r.group, r.p);
    if let Verdict::Skipped { reason } = &r.verdict {
        let _ = write!(line, " ({reason})");
    }
    if let Some(note) = &r.note {
        let _ = write!(line, " [{note}]");
    }
    line
}

fn block_table(out: &mut String, blocks: &[BlockSummary]) {
    let header = ["block", "d", "|D|", "cyclic", "Z(D)", "m", "r", "e", "k", "l", "LL", "c", "LL(fix)", "lambda"];
    let rows: Vec<Vec<String>> = blocks
        .iter()
        .map(|b| {
            vec![
                format!("{}{}", b.index, if b.principal { "*" } else { "" }),
                b.defect.to_string(),
                b.defect_group_order.to_string(),
                if b.defect_group_cyclic { "yes" } else { "no" }.into(),
                format!("[{}]", join(&b.center_type, ",")),
                b.m.to_string(),
                b.r.to_string(),
                b.e.to_string(),
                b.k.to_string(),
                l_text(b.l),
                b.loewy_length.to_string(),
                format!("[{}]", join(&b.codims, ",")),
                b.fixed_point_loewy_length.to_string(),
                b.lambda.to_string(),
            ]
        })
        .collect();
    let widths: Vec<usize> = (0..header.len())
        .map(|c| rows.iter().map(|r| r[c].len()).chain([header[c].len()]).max().unwrap_or(0))
        .collect();
    let mut line = |cells: Vec<&str>| {
        let padded: Vec<String> = cells.iter().zip(&widths).map(|(c, w)| format!("{c:<w$}")).collect();
        let _ = writeln!(out, "  {}", padded.join("  ").trim_end());
    };
    line(header.to_vec());
    for r in &rows {
        line(r.iter().map(String::as_str).collect());
    }
}

fn instance_header(out: &mut String, inst: &InstanceReport) {
    let field = if inst.s == 1 { format!("F_{}", inst.p) } else { format!("F_{}^{}", inst.p, inst.s) };
    let name = if inst.name == inst.group { String::new() } else { format!("{}, ", inst.name) };
    let _ = writeln!(out, "{} ({name}order {}) at p = {}, field {field}", inst.group, inst.order, inst.p);
    if let Some(e) = &inst.error {
        let _ = writeln!(out, "  error: {e}");
    }
}

fn text(report: &SuiteReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "blockloewy {} {}", report.tool_version, report.config.command);
    let single = report.config.command == "analyze";
    for inst in &report.instances {
        instance_header(&mut out, inst);
        if inst.error.is_some() {
            continue;
        }
        block_table(&mut out, &inst.blocks);
        if single {
            for r in &inst.checks {
                let _ = writeln!(out, "  {}", check_line(r));
            }
        }
    }
    if !single {
        let mut per_claim: BTreeMap<Claim, [usize; 3]> = BTreeMap::new();
        for r in report.checks() {
            let slot = match r.verdict {
                Verdict::Pass => 0,
                Verdict::Fail => 1,
                Verdict::Skipped { .. } => 2,
            };
            per_claim.entry(r.claim).or_default()[slot] += 1;
        }
        let _ = writeln!(out, "\n{:<22} {:>5} {:>5} {:>7}", "claim", "pass", "fail", "skipped");
        for (claim, [p, f, s]) in &per_claim {
            let _ = writeln!(out, "{:<22} {p:>5} {f:>5} {s:>7}", claim.id());
        }
        for r in report.checks().filter(|r| r.verdict == Verdict::Fail) {
            let _ = writeln!(out, "{}", check_line(r));
        }
    }
    let c = report.counts();
    let _ = writeln!(
        out,
        "\n{} instances, {} checks: {} pass, {} fail ({} report-only), {} skipped, {} errors",
        report.instances.len(),
        c.pass + c.fail + c.skipped,
        c.pass,
        c.fail,
        c.report_only_fail,
        c.skipped,
        c.errors
    );
    out
}

pub fn catalog(entries: &[CatalogEntry], format: Format) -> Result<String, String> {
    match format {
        Format::Json => serde_json::to_string_pretty(entries).map(|s| s + "\n").map_err(|e| e.to_string()),
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            for e in entries {
                w.serialize(e).map_err(|e| e.to_string())?;
            }
            String::from_utf8(w.into_inner().map_err(|e| e.to_string())?).map_err(|e| e.to_string())
        }
        Format::Text => Ok(entries.iter().map(|e| format!("{} (order {})  {}\n", e.spec, e.order, e.name)).collect()),
    }
}
