//! Runs every acceptance criterion and prints one PASS/FAIL line per criterion.

use std::process::ExitCode;
use std::time::Instant;

use schroder_lab::verify;

fn main() -> ExitCode {
    let mut failed = 0;
    for c in verify::criteria() {
        let start = Instant::now();
        let report = (c.run)();
        let ok = report.all_passed() && report.summary.total > 0 && report.is_consistent();
        if !ok {
            failed += 1;
            for check in report.checks.iter().filter(|k| !k.pass) {
                eprintln!(
                    "    failed check: {} (expected {:?}, computed {:?})",
                    check.check, check.expected, check.computed
                );
            }
        }
        println!(
            "{} criterion {:>2} ({}): {} [{}/{}] {:.2}s",
            if ok { "PASS" } else { "FAIL" },
            c.id,
            c.key,
            c.title,
            report.summary.passed,
            report.summary.total,
            start.elapsed().as_secs_f64()
        );
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    }
}
