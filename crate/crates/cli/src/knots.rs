//! Knot files: two-column CSV `u,phi` with strictly increasing `u >= 0`.

use std::io::Read;

use mellin_gamma::TestFunction;
use serde::Deserialize;

#[derive(Debug, thiserror::Error)]
pub enum KnotError {
    #[error("cannot read knot file: {0}")]
    Io(#[from] std::io::Error),
    #[error("malformed knot CSV: {0}")]
    Csv(#[from] csv::Error),
    #[error("knot CSV header must be `u,phi`, found `{0}`")]
    Header(String),
    #[error("knot row {row}: {message}")]
    Row { row: usize, message: String },
    #[error("knot file needs at least two rows")]
    TooShort,
}

#[derive(Debug, Deserialize)]
struct Knot {
    u: f64,
    phi: f64,
}

/// Parse knots from any reader.
pub fn parse_knots<R: Read>(reader: R) -> Result<Vec<(f64, f64)>, KnotError> {
    let mut rdr = csv::ReaderBuilder::new().trim(csv::Trim::All).from_reader(reader);
    let header = rdr.headers()?.clone();
    if header.len() != 2 || &header[0] != "u" || &header[1] != "phi" {
        return Err(KnotError::Header(header.iter().collect::<Vec<_>>().join(",")));
    }
    let mut knots: Vec<(f64, f64)> = Vec::new();
    for (i, rec) in rdr.deserialize::<Knot>().enumerate() {
        let row = i + 2;
        let k = rec?;
        if !(k.u.is_finite() && k.phi.is_finite()) {
            return Err(KnotError::Row {
                row,
                message: "values must be finite".into(),
            });
        }
        if k.u < 0.0 {
            return Err(KnotError::Row {
                row,
                message: format!("u = {} is negative", k.u),
            });
        }
        if let Some(&(prev, _)) = knots.last() {
            if k.u <= prev {
                return Err(KnotError::Row {
                    row,
                    message: format!("u = {} does not increase (previous {prev})", k.u),
                });
            }
        }
        knots.push((k.u, k.phi));
    }
    if knots.len() < 2 {
        return Err(KnotError::TooShort);
    }
    Ok(knots)
}

/// Read a knot file (`-` for standard input) into a piecewise-linear test function.
pub fn load_test_function(path: &str) -> Result<TestFunction, KnotError> {
    let knots = if path == "-" {
        parse_knots(std::io::stdin().lock())?
    } else {
        parse_knots(std::fs::File::open(path)?)?
    };
    TestFunction::piecewise_linear(&knots).map_err(|e| KnotError::Row {
        row: 0,
        message: e.to_string(),
    })
}
