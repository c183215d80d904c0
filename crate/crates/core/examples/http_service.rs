//! Serve the HTTP API for a problem file.
//!
//! ```text
//! cargo run -p qualdom --example http_service [file.json] [port]
//! curl localhost:8080/api/dominance?mode=hasse
//! curl -X POST localhost:8080/api/whatif -H 'content-type: application/json' \
//!      -d '{"remove": [{"more": "Energy", "less": "Cost"}]}'
//! ```

use std::net::SocketAddr;
use std::sync::Arc;

use qualdom::io::parse_problem;
use qualdom::service::{serve, Session};

#[tokio::main]
async fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let file = args
        .next()
        .unwrap_or_else(|| concat!(env!("CARGO_MANIFEST_DIR"), "/tests/fixtures/building_design.json").to_string());
    let port: u16 = args.next().map(|p| p.parse()).transpose()?.unwrap_or(8080);
    let problem = parse_problem(&std::fs::read_to_string(&file)?)?;
    let addr = SocketAddr::from(([127, 0, 0, 1], port));
    println!("serving {file} on http://{addr}");
    serve(Arc::new(Session::new(problem)?), addr).await?;
    Ok(())
}
