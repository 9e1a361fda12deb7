//! Human-readable tables and the JSON artifact.

use std::io::Write;
use std::path::PathBuf;

use covertrees::VerificationReport;

/// Print a report as an aligned table: parameters, kappa values, census
/// rows with their total, then every check and the overall verdict.
pub fn print_report(report: &VerificationReport) {
    let params: Vec<String> = report
        .params
        .iter()
        .map(|(k, v)| format!("{k}={v}"))
        .collect();
    println!("{} {}", report.run, params.join(" "));

    if !report.kappa.is_empty() {
        println!("kappa");
        let width = report.kappa.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
        for (name, value) in &report.kappa {
            println!("  {name:<width$}  {value}");
        }
    }

    if !report.census.is_empty() {
        println!("census");
        println!("  {:>2}  {:>12}  kappa", "a", "multiplicity");
        for row in &report.census {
            println!(
                "  {:>2}  {:>12}  {}",
                row.cover_type, row.multiplicity, row.kappa
            );
        }
        let total: u64 = report.census.iter().map(|r| r.multiplicity).sum();
        println!("  total {total}");
    }

    if !report.checks.is_empty() {
        println!("checks");
        let width = report
            .checks
            .iter()
            .map(|c| c.name.len())
            .max()
            .unwrap_or(0);
        for check in &report.checks {
            let status = if check.pass { "ok  " } else { "FAIL" };
            println!(
                "  {status}  {:<width$}  lhs={} rhs={}",
                check.name, check.lhs, check.rhs
            );
        }
    }

    println!("overall: {}", if report.passed() { "PASS" } else { "FAIL" });
}

/// Write the JSON artifact when a path was requested; `-` means stdout.
/// Unless `deterministic`, a `generated_at` RFC 3339 timestamp is added.
pub fn write_json_artifact(
    report: &VerificationReport,
    path: &Option<PathBuf>,
    deterministic: bool,
) -> Result<(), String> {
    let Some(path) = path else {
        return Ok(());
    };
    let mut value = report.to_json();
    if !deterministic {
        let timestamp = chrono::Utc::now().to_rfc3339();
        value
            .as_object_mut()
            .expect("reports serialize to objects")
            .insert("generated_at".into(), timestamp.into());
    }
    let text = format!(
        "{}\n",
        serde_json::to_string_pretty(&value).map_err(|e| e.to_string())?
    );
    if path.as_os_str() == "-" {
        std::io::stdout()
            .write_all(text.as_bytes())
            .map_err(|e| e.to_string())
    } else {
        std::fs::write(path, text).map_err(|e| format!("{}: {e}", path.display()))
    }
}
