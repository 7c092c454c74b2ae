//! Text, CSV and JSON renderings of command results.

use std::io::{self, Write};

use serde::Serialize;

use degspec::bounds::{BoundEntry, Side, Target};
use degspec::harness::{ComparisonTable, PhiMuScan, VerifySummary};
use degspec::Analysis;

/// Version of the JSON schema; bumped on incompatible field changes.
pub const JSON_VERSION: &str = "1";

pub fn json<W: Write, T: Serialize>(out: &mut W, key: &str, value: &T) -> io::Result<()> {
    let mut doc = serde_json::Map::new();
    doc.insert("version".into(), JSON_VERSION.into());
    doc.insert(key.into(), serde_json::to_value(value).map_err(io::Error::other)?);
    serde_json::to_writer_pretty(&mut *out, &doc).map_err(io::Error::other)?;
    writeln!(out)
}

fn side(e: &BoundEntry) -> &'static str {
    match (e.side, e.strict) {
        (Side::Upper, false) => "upper",
        (Side::Upper, true) => "strict-upper",
        (Side::Lower, false) => "lower",
        (Side::Lower, true) => "strict-lower",
    }
}

fn target(t: Target) -> &'static str {
    match t {
        Target::Mu => "mu",
        Target::Q => "q",
        Target::Omega => "omega",
        Target::Phi => "phi",
    }
}

fn flag(b: Option<bool>) -> &'static str {
    match b {
        Some(true) => "yes",
        Some(false) => "no",
        None => "",
    }
}

pub fn bounds_text<W: Write>(out: &mut W, reports: &[Analysis]) -> io::Result<()> {
    for (i, a) in reports.iter().enumerate() {
        if i > 0 {
            writeln!(out)?;
        }
        writeln!(out, "graph {} ({}): n = {}, m = {}", a.graph_id, a.graph6, a.n, a.m)?;
        let degrees: Vec<String> = a.degrees.iter().map(usize::to_string).collect();
        writeln!(out, "  degrees   {}", degrees.join(" "))?;
        writeln!(out, "  mu        {:.12}  (residual {:.1e})", a.mu.value, a.mu.residual)?;
        writeln!(out, "  q         {:.12}  (residual {:.1e})", a.q.value, a.q.residual)?;
        writeln!(out, "  y         {:.12}", a.y.y)?;
        if let Some(z) = &a.z {
            writeln!(out, "  z         {:.12}", z.y)?;
        }
        writeln!(out, "  phi_min   {:.12}  at k = {}", a.phi_min.value, a.phi_min.ell)?;
        if let Some(p) = &a.psi_min {
            writeln!(out, "  psi_min   {:.12}  at k = {}", p.value, p.ell)?;
        }
        if let Some(nu) = &a.irregularity {
            writeln!(out, "  nu        {:.12}", nu.nu)?;
        }
        if let Some(w) = &a.omega {
            writeln!(out, "  omega     {}  clique {:?}", w.size, w.vertices)?;
        }
        if let Some(p) = &a.phi {
            writeln!(out, "  phi       {}  parts {:?}", p.r, p.parts)?;
        }
        for s in &a.skipped {
            writeln!(out, "  skipped   {s}")?;
        }
        writeln!(out, "  {:<22} {:<13} {:<6} {:>18}  exact holds", "bound", "side", "target", "value")?;
        for e in &a.bounds.entries {
            writeln!(
                out,
                "  {:<22} {:<13} {:<6} {:>18.12}  {:<5} {}",
                e.name,
                side(e),
                target(e.target),
                e.value,
                flag(e.exact),
                flag(e.holds)
            )?;
        }
    }
    Ok(())
}

/// Long format: one row per scalar or bound.
pub fn bounds_csv<W: Write>(out: &mut W, reports: &[Analysis]) -> io::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["graph_id", "quantity", "value", "side", "target", "exact", "holds"])?;
    for a in reports {
        let mut scalars: Vec<(&str, String)> = vec![
            ("n", a.n.to_string()),
            ("m", a.m.to_string()),
            ("mu", a.mu.value.to_string()),
            ("q", a.q.value.to_string()),
            ("y", a.y.y.to_string()),
        ];
        if let Some(z) = &a.z {
            scalars.push(("z", z.y.to_string()));
        }
        scalars.push(("phi_min", a.phi_min.value.to_string()));
        scalars.push(("phi_min_index", a.phi_min.ell.to_string()));
        if let Some(p) = &a.psi_min {
            scalars.push(("psi_min", p.value.to_string()));
            scalars.push(("psi_min_index", p.ell.to_string()));
        }
        if let Some(nu) = &a.irregularity {
            scalars.push(("nu", nu.nu.to_string()));
        }
        if let Some(c) = &a.omega {
            scalars.push(("omega", c.size.to_string()));
        }
        if let Some(c) = &a.phi {
            scalars.push(("phi", c.r.to_string()));
        }
        for (name, value) in scalars {
            w.write_record([a.graph_id.as_str(), name, &value, "", "", "", ""])?;
        }
        for e in &a.bounds.entries {
            w.write_record([
                a.graph_id.as_str(),
                &e.name,
                &e.value.to_string(),
                side(e),
                target(e.target),
                flag(e.exact),
                flag(e.holds),
            ])?;
        }
    }
    w.flush()
}

/// Four decimals; `format!` rounds the exact binary value, ties to even.
fn rounded(v: f64) -> String {
    if v.is_nan() {
        String::new()
    } else {
        format!("{v:.4}")
    }
}

pub fn table_csv<W: Write>(out: &mut W, table: &ComparisonTable) -> io::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["graph_id", "n", "m", "q", "thm1", "psi1", "psi2", "psi_min", "ell", "z_plus_1"])?;
    for r in &table.rows {
        w.write_record([
            r.graph_id.clone(),
            r.n.to_string(),
            r.m.to_string(),
            r.q.to_string(),
            r.thm1.to_string(),
            r.psi1.to_string(),
            r.psi2.map(|v| v.to_string()).unwrap_or_default(),
            r.psi_min.to_string(),
            r.ell.to_string(),
            r.z_plus_1.to_string(),
        ])?;
    }
    if let Some(m) = &table.means {
        w.write_record([
            "mean".to_string(),
            String::new(),
            String::new(),
            rounded(m.q),
            rounded(m.thm1),
            rounded(m.psi1),
            rounded(m.psi2),
            rounded(m.psi_min),
            String::new(),
            rounded(m.z_plus_1),
        ])?;
    }
    w.flush()
}

pub fn table_summary<W: Write>(out: &mut W, table: &ComparisonTable) -> io::Result<()> {
    writeln!(out, "rows: {}, skipped edgeless: {}", table.rows.len(), table.skipped_edgeless)?;
    writeln!(
        out,
        "thm1 < psi_min on {} graphs (first: {})",
        table.thm1_wins,
        table.first_thm1_win.as_deref().unwrap_or("-")
    )?;
    writeln!(
        out,
        "psi_min < thm1 on {} graphs (first: {})",
        table.psi_min_wins,
        table.first_psi_min_win.as_deref().unwrap_or("-")
    )
}

pub fn table_text<W: Write>(out: &mut W, table: &ComparisonTable) -> io::Result<()> {
    writeln!(
        out,
        "{:<16} {:>4} {:>4} {:>10} {:>10} {:>10} {:>10} {:>10} {:>4} {:>10}",
        "graph_id", "n", "m", "q", "thm1", "psi1", "psi2", "psi_min", "ell", "z_plus_1"
    )?;
    for r in &table.rows {
        writeln!(
            out,
            "{:<16} {:>4} {:>4} {:>10.4} {:>10.4} {:>10.4} {:>10} {:>10.4} {:>4} {:>10.4}",
            r.graph_id,
            r.n,
            r.m,
            r.q,
            r.thm1,
            r.psi1,
            r.psi2.map(|v| format!("{v:.4}")).unwrap_or_else(|| "-".into()),
            r.psi_min,
            r.ell,
            r.z_plus_1
        )?;
    }
    if let Some(m) = &table.means {
        writeln!(
            out,
            "{:<16} {:>4} {:>4} {:>10} {:>10} {:>10} {:>10} {:>10} {:>4} {:>10}",
            "mean",
            "",
            "",
            rounded(m.q),
            rounded(m.thm1),
            rounded(m.psi1),
            rounded(m.psi2),
            rounded(m.psi_min),
            "",
            rounded(m.z_plus_1)
        )?;
    }
    table_summary(out, table)
}

pub fn verify_text<W: Write>(out: &mut W, summary: &VerifySummary) -> io::Result<()> {
    writeln!(out, "graphs: {}", summary.graphs)?;
    for t in &summary.checks {
        let status = if t.failed == 0 { "PASS" } else { "FAIL" };
        write!(
            out,
            "{status} {:<44} passed {:>7}  failed {:>7}  skipped {:>7}",
            t.name, t.passed, t.failed, t.skipped
        )?;
        if let Some((g6, detail)) = &t.first_counterexample {
            write!(out, "  first counterexample {g6}: {detail}")?;
        }
        writeln!(out)?;
    }
    let failing = summary.checks.iter().filter(|t| t.failed > 0).count();
    writeln!(
        out,
        "{}",
        if failing == 0 {
            "all checks passed".to_string()
        } else {
            format!("{failing} checks failed")
        }
    )
}

pub fn verify_csv<W: Write>(out: &mut W, summary: &VerifySummary) -> io::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["check", "passed", "failed", "skipped", "counterexample", "detail"])?;
    for t in &summary.checks {
        let (g6, detail) = t.first_counterexample.clone().unwrap_or_default();
        w.write_record([
            t.name.to_string(),
            t.passed.to_string(),
            t.failed.to_string(),
            t.skipped.to_string(),
            g6,
            detail,
        ])?;
    }
    w.flush()
}

pub fn scan_text<W: Write>(out: &mut W, scan: &PhiMuScan) -> io::Result<()> {
    writeln!(
        out,
        "examined {} graphs, skipped {} over the phi limit",
        scan.examined, scan.skipped
    )?;
    if scan.witnesses.is_empty() {
        return writeln!(out, "no graph with n/(n - mu) > phi found");
    }
    for w in &scan.witnesses {
        writeln!(out, "{} {}  phi = {}  n/(n - mu) = {:.6}", w.graph_id, w.graph6, w.phi, w.mu_ratio)?;
    }
    Ok(())
}

pub fn scan_csv<W: Write>(out: &mut W, scan: &PhiMuScan) -> io::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["graph_id", "graph6", "phi", "mu_ratio"])?;
    for x in &scan.witnesses {
        w.write_record([x.graph_id.clone(), x.graph6.clone(), x.phi.to_string(), x.mu_ratio.to_string()])?;
    }
    w.flush()
}
