use splinekit_core::exactla::QMatrix;

use super::{parse_rational, ParseError};

/// Rows separated by `;` or newlines, entries by `,`. Blank rows are skipped.
pub fn parse_matrix(text: &str) -> Result<QMatrix, ParseError> {
    let mut rows = Vec::new();
    let mut width = None;
    for (ln, line) in text.lines().enumerate() {
        let mut offset = 0;
        for chunk in line.split(';') {
            let start = offset;
            offset += chunk.len() + 1;
            if chunk.trim().is_empty() {
                continue;
            }
            let mut row = Vec::new();
            let mut col = start;
            for entry in chunk.split(',') {
                let pad = entry.len() - entry.trim_start().len();
                let q = parse_rational(entry).map_err(|m| ParseError::new(ln + 1, col + pad + 1, m))?;
                row.push(q);
                col += entry.len() + 1;
            }
            match width {
                None => width = Some(row.len()),
                Some(w) if w != row.len() => {
                    return Err(ParseError::new(
                        ln + 1,
                        start + 1,
                        format!("row has {} entries, expected {w}", row.len()),
                    ))
                }
                _ => {}
            }
            rows.push(row);
        }
    }
    if rows.is_empty() {
        return Err(ParseError::new(1, 1, "empty matrix"));
    }
    Ok(QMatrix::from_rows(rows).expect("rows checked for equal width"))
}

pub fn format_matrix(m: &QMatrix) -> String {
    m.to_string()
}
