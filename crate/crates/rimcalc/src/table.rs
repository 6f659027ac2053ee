//! The bundled knot table: every prime knot through ten crossings in braid,
//! PD, and DT form, plus two eleven-crossing knots with trivial Alexander
//! polynomial.

use std::path::Path;

use crate::error::{Error, Result};
use crate::knot::{parse_presentation, KnotPresentation, PresentationFormat};

/// The table shipped with the crate, embedded so the binary is
/// self-contained. Regenerate with `scripts/make_knot_table.py`.
pub const BUNDLED_KNOTS_CSV: &str =
    include_str!(concat!(env!("CARGO_MANIFEST_DIR"), "/../../data/knots.csv"));

/// One row of a knot table: a named presentation in some format.
#[derive(Clone, Debug)]
pub struct TableEntry {
    pub name: String,
    pub format: PresentationFormat,
    pub code: String,
}

impl TableEntry {
    pub fn presentation(&self) -> Result<KnotPresentation> {
        parse_presentation(&self.code, self.format)
    }
}

/// Parses CSV text with a `name,format,code` header into table entries.
pub fn read_table_str(text: &str) -> Result<Vec<TableEntry>> {
    let mut reader = csv::Reader::from_reader(text.as_bytes());
    let mut entries = Vec::new();
    for record in reader.records() {
        let record = record.map_err(|e| Error::SyntaxError(format!("bad table row: {e}")))?;
        if record.len() != 3 {
            return Err(Error::SyntaxError(format!(
                "table rows need name,format,code; got {} fields",
                record.len()
            )));
        }
        entries.push(TableEntry {
            name: record[0].to_string(),
            format: record[1].parse()?,
            code: record[2].to_string(),
        });
    }
    Ok(entries)
}

pub fn read_table(path: &Path) -> Result<Vec<TableEntry>> {
    read_table_str(&std::fs::read_to_string(path)?)
}

/// The parsed bundled table.
pub fn bundled_table() -> Result<Vec<TableEntry>> {
    read_table_str(BUNDLED_KNOTS_CSV)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bundled_table_parses() {
        let entries = bundled_table().unwrap();
        assert_eq!(entries.len(), 753);
        assert_eq!(entries[0].name, "3_1");
        assert_eq!(entries[0].format, PresentationFormat::Braid);
        // every knot appears in all three formats
        for chunk in entries.chunks(3) {
            assert_eq!(chunk[0].name, chunk[1].name);
            assert_eq!(chunk[1].name, chunk[2].name);
            let formats: Vec<_> = chunk.iter().map(|e| e.format).collect();
            assert_eq!(
                formats,
                vec![
                    PresentationFormat::Braid,
                    PresentationFormat::Pd,
                    PresentationFormat::Dt
                ]
            );
        }
        // and every presentation parses
        for e in &entries {
            e.presentation()
                .unwrap_or_else(|err| panic!("{} ({}): {err}", e.name, e.format));
        }
    }

    #[test]
    fn malformed_tables_are_rejected() {
        assert!(matches!(
            read_table_str("name,format,code\n3_1,sonata,2: 1 1 1\n"),
            Err(Error::SyntaxError(_))
        ));
        assert!(matches!(
            read_table_str("name,format\n3_1,braid\n"),
            Err(Error::SyntaxError(_))
        ));
    }
}
