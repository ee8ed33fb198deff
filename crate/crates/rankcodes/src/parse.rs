use gf2core::GF2Matrix;

use crate::Error;

/// Parses a plain-text list of binary matrices grouped into codes.
///
/// A line starting with `code` opens a new group.  Within a group,
/// consecutive lines of `0`/`1` characters form the rows of one matrix,
/// and a blank line ends it.  All rows of a matrix must have the same
/// length.  Returns one matrix list per group, in file order.
pub fn read_matrix_lists(text: &str) -> Result<Vec<Vec<GF2Matrix>>, Error> {
    let mut groups: Vec<Vec<GF2Matrix>> = Vec::new();
    let mut rows: Vec<u32> = Vec::new();
    let mut width: Option<(usize, usize)> = None;

    let flush =
        |groups: &mut Vec<Vec<GF2Matrix>>, rows: &mut Vec<u32>, width: &mut Option<(usize, usize)>| {
            if let Some((cols, _)) = width.take() {
                groups
                    .last_mut()
                    .expect("a matrix is always preceded by a group header")
                    .push(GF2Matrix::new(cols, std::mem::take(rows)));
            }
        };

    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() {
            flush(&mut groups, &mut rows, &mut width);
        } else if let Some(rest) = trimmed.strip_prefix("code") {
            if !rest.trim().chars().all(|c| c.is_ascii_digit()) {
                return Err(Error::Malformed {
                    line,
                    reason: format!("bad group header {trimmed:?}"),
                });
            }
            flush(&mut groups, &mut rows, &mut width);
            groups.push(Vec::new());
        } else {
            let mut bits = 0u32;
            for (offset, c) in trimmed.chars().enumerate() {
                bits = bits << 1
                    | match c {
                        '0' => 0,
                        '1' => 1,
                        other => {
                            return Err(Error::Malformed {
                                line,
                                reason: format!("character {other:?} at offset {offset}"),
                            })
                        }
                    };
            }
            match width {
                None => width = Some((trimmed.len(), line)),
                Some((cols, start)) if cols != trimmed.len() => {
                    return Err(Error::Malformed {
                        line,
                        reason: format!(
                            "row of length {} in a matrix of width {cols} started on line {start}",
                            trimmed.len()
                        ),
                    })
                }
                Some(_) => {}
            }
            if groups.is_empty() {
                return Err(Error::Malformed {
                    line,
                    reason: "matrix row before the first group header".into(),
                });
            }
            rows.push(bits);
        }
    }
    flush(&mut groups, &mut rows, &mut width);

    if let Some(empty) = groups.iter().position(|g| g.is_empty()) {
        return Err(Error::Malformed {
            line: text.lines().count(),
            reason: format!("group {} contains no matrix", empty + 1),
        });
    }
    Ok(groups)
}
