//! The full quintic report, as JSON or text.
//!
//! cargo run --example quintic_report -- text

use dwork::report::{cmd_report, render_text};

fn main() -> dwork::Result<()> {
    let doc = cmd_report()?;
    match std::env::args().nth(1).as_deref() {
        Some("text") => print!("{}", render_text(&doc)),
        _ => print!("{}", doc.to_json()?),
    }
    Ok(())
}
