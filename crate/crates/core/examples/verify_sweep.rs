//! Runs every agreement sweep at the default sizes and prints the reports.
//!
//! ```text
//! cargo run --release --example verify_sweep
//! ```

use qweyl::qrep::IdentityForm;
use qweyl::verify::{run, Bounds, Suite};
use qweyl::Guards;

fn main() -> qweyl::Result<()> {
    let guards = Guards::from_env();
    let bounds = Bounds::default();
    let mut ok = true;
    for report in run(Suite::All, &bounds, IdentityForm::Derived, &guards)? {
        ok &= report.passed();
        println!("{report}");
    }
    for report in run(Suite::Identities, &bounds, IdentityForm::Printed, &guards)? {
        if report.informational {
            println!("{report}");
        }
    }
    std::process::exit(if ok { 0 } else { 1 });
}
