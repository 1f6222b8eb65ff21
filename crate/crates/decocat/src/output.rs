//! CSV output with '#'-prefixed run-metadata headers.
//!
//! Every file starts with comment lines recording the command line,
//! parameter values, seed and RNG algorithm where applicable, the tool
//! version, and a timestamp. Data rows are plain comma-separated values;
//! re-running a command with identical arguments and seed reproduces the
//! data rows byte for byte (only the timestamp line differs).

use std::fmt::Display;
use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::Path;

use crate::cat::GridDensity;
use crate::error::Result;

/// Key-value metadata emitted as '# key: value' comment lines.
#[derive(Debug, Clone)]
pub struct RunMetadata {
    entries: Vec<(String, String)>,
}

impl RunMetadata {
    /// Standard preamble: tool, version, timestamp, and the command line.
    pub fn new(command_line: &str) -> Self {
        Self {
            entries: vec![
                ("tool".into(), "decocat".into()),
                ("version".into(), env!("CARGO_PKG_VERSION").into()),
                ("timestamp".into(), chrono::Utc::now().to_rfc3339()),
                ("command".into(), command_line.into()),
            ],
        }
    }

    /// Reconstructs the command line from the process arguments.
    pub fn from_env_args() -> Self {
        let command_line = std::env::args().collect::<Vec<_>>().join(" ");
        Self::new(&command_line)
    }

    pub fn with(mut self, key: &str, value: impl Display) -> Self {
        self.entries.push((key.into(), value.to_string()));
        self
    }

    pub fn entries(&self) -> &[(String, String)] {
        &self.entries
    }

    pub fn write_header<W: Write>(&self, w: &mut W) -> std::io::Result<()> {
        for (key, value) in &self.entries {
            writeln!(w, "# {key}: {value}")?;
        }
        Ok(())
    }
}

/// Writes a metadata header, a column-name row, and the data rows.
pub fn write_csv<P, R>(path: P, metadata: &RunMetadata, columns: &[&str], rows: R) -> Result<()>
where
    P: AsRef<Path>,
    R: IntoIterator<Item = Vec<String>>,
{
    let mut w = BufWriter::new(File::create(path)?);
    metadata.write_header(&mut w)?;
    writeln!(w, "{}", columns.join(","))?;
    for row in rows {
        writeln!(w, "{}", row.join(","))?;
    }
    w.flush()?;
    Ok(())
}

/// A sampled density as (p, density) rows.
pub fn write_density_csv<P: AsRef<Path>>(
    path: P,
    metadata: &RunMetadata,
    density: &GridDensity,
) -> Result<()> {
    let rows = (0..density.len())
        .map(|i| vec![fmt_float(density.point(i)), fmt_float(density.values()[i])]);
    write_csv(path, metadata, &["p", "density"], rows)
}

/// Shortest representation that round-trips to the same f64.
pub fn fmt_float(x: f64) -> String {
    format!("{x}")
}
