mod cache;
mod commands;
mod config;
mod error;
mod grammar;
mod report;

use std::io::Write;
use std::process::ExitCode;

use clap::Parser;

use crate::config::RunConfig;
use crate::error::{CliError, ExitStatus};
use crate::report::{Format, Report};

fn main() -> ExitCode {
    let config = RunConfig::parse();
    let status = emit(commands::run(&config), config.format, &mut std::io::stdout().lock());
    ExitCode::from(status as u8)
}

fn emit(result: Result<Report, CliError>, format: Format, out: &mut impl Write) -> ExitStatus {
    let report = match result {
        Ok(r) => r,
        Err(e) => return report_error(&e),
    };
    if let Err(e) = out.write_all(report.render(format).as_bytes()).and_then(|_| out.flush()) {
        return report_error(&CliError::io("writing output", e));
    }
    if report.passed {
        ExitStatus::Pass
    } else {
        ExitStatus::CheckFailed
    }
}

fn report_error(e: &CliError) -> ExitStatus {
    eprintln!("schurq: error[{}]: {e}", e.code());
    e.exit_status()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::report::Table;

    fn report(passed: bool) -> Report {
        Report { passed, pretty: "x".into(), json: serde_json::Value::Null, table: Table::default() }
    }

    #[test]
    fn statuses() {
        let mut sink = Vec::new();
        assert_eq!(emit(Ok(report(true)), Format::Pretty, &mut sink), ExitStatus::Pass);
        assert_eq!(emit(Ok(report(false)), Format::Pretty, &mut sink), ExitStatus::CheckFailed);
        assert_eq!(sink, b"x\nx\n");
        assert_eq!(emit(Err(CliError::usage("bad")), Format::Json, &mut sink), ExitStatus::Usage);
    }
}
