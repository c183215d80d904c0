//! Parse problem files and print validation findings. Runs over the bundled
//! fixtures, or over the files given as arguments.
//!
//! ```text
//! cargo run -p qualdom --example load_and_validate [file.json ...]
//! ```

use std::path::PathBuf;

use qualdom::io::{parse_problem, ParseError};

fn main() {
    let mut files: Vec<PathBuf> = std::env::args().skip(1).map(PathBuf::from).collect();
    if files.is_empty() {
        let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures");
        files = ["building_design.json", "mixed.json", "cyclic.json"].iter().map(|f| dir.join(f)).collect();
    }
    for file in files {
        let text = match std::fs::read_to_string(&file) {
            Ok(t) => t,
            Err(e) => {
                println!("{}: {e}", file.display());
                continue;
            }
        };
        match parse_problem(&text) {
            Ok(p) => {
                println!(
                    "{}: {} attributes, {} alternatives",
                    file.display(),
                    p.attributes.len(),
                    p.alternatives.len()
                );
                print!("{}", p.validate());
            }
            Err(ParseError::Invalid(report)) => {
                println!("{}: invalid", file.display());
                print!("{report}");
            }
            Err(e) => println!("{}: {e}", file.display()),
        }
    }
}
