use std::process::ExitCode;

use curvelab_cli::acceptance::{run_criterion, run_suite, SuiteOptions};
use curvelab_cli::args::Fault;

fn main() -> ExitCode {
    let outcomes = run_suite(&SuiteOptions::default());
    let mut ok = true;
    for o in &outcomes {
        println!("{}", o.summary_line());
        ok &= o.pass;
    }

    // the suite has to notice a broken Hasse polynomial
    let faulty = run_criterion(
        1,
        &SuiteOptions {
            only: None,
            fault: Some(Fault::Hasse),
        },
    );
    let caught = !faulty.pass;
    println!(
        "{} fault injection: criterion 1 reports {}",
        if caught { "PASS" } else { "FAIL" },
        if faulty.pass { "PASS" } else { "FAIL" }
    );
    ok &= caught;

    // summaries carry no timing, so reruns must agree line for line
    for id in [1u8, 5, 6, 7] {
        let again = run_criterion(id, &SuiteOptions::default());
        let first = outcomes.iter().find(|o| o.id == id).expect("ran above");
        let same = again.summary_line() == first.summary_line();
        println!(
            "{} rerun of criterion {id} is identical",
            if same { "PASS" } else { "FAIL" }
        );
        ok &= same;
    }

    println!(
        "{} of {} criteria passed",
        outcomes.iter().filter(|o| o.pass).count(),
        outcomes.len()
    );
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
