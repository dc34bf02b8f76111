use crate::error::{InputError, ParseError};
use crate::expr::parse_jet;

use super::membership::IdealPresentation;

/// Reads an ideal file: `#` starts a comment, the first remaining line is
/// `order: n`, and every further nonblank line is one generator.
///
/// Error positions are byte offsets into the whole file.
pub fn parse_ideal_file(text: &str) -> Result<IdealPresentation, InputError> {
    let mut order: Option<u32> = None;
    let mut generators = Vec::new();
    let mut offset = 0;
    for raw in text.split_inclusive('\n') {
        let start = offset;
        offset += raw.len();
        let line = raw.split('#').next().unwrap_or("");
        let trimmed = line.trim();
        if trimmed.is_empty() {
            continue;
        }
        let lead = line.len() - line.trim_start().len();
        match order {
            None => {
                let value = trimmed
                    .strip_prefix("order:")
                    .and_then(|v| v.trim().parse::<u32>().ok())
                    .ok_or_else(|| ParseError {
                        pos: start + lead,
                        msg: "expected 'order: n'".into(),
                    })?;
                order = Some(value);
            }
            Some(n) => {
                let g = parse_jet(trimmed, n).map_err(|e| match e {
                    InputError::Parse(p) => InputError::Parse(ParseError {
                        pos: start + lead + p.pos,
                        msg: p.msg,
                    }),
                    other => other,
                })?;
                generators.push(g);
            }
        }
    }
    let order = order.ok_or_else(|| ParseError {
        pos: text.len(),
        msg: "missing 'order: n' line".into(),
    })?;
    Ok(IdealPresentation::new(order, generators)?)
}
