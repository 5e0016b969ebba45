//! Small parsers shared by the text forms of functions, partitions and tableaux.

use crate::error::{Error, Result};

/// Parses a comma-separated list of integers. Positions in errors are 1-based
/// character columns of `s`.
pub fn parse_int_list(s: &str) -> Result<Vec<i64>> {
    parse_int_list_at(s, 0)
}

pub(crate) fn parse_int_list_at(s: &str, offset: usize) -> Result<Vec<i64>> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    let mut start = 0usize;
    for piece in s.split(',') {
        let lead = piece.len() - piece.trim_start().len();
        let tok = piece.trim();
        let pos = offset + start + lead + 1;
        if tok.is_empty() {
            return Err(Error::Parse { pos, msg: "missing number".into() });
        }
        let v: i64 = tok.parse().map_err(|_| Error::Parse {
            pos,
            msg: format!("'{tok}' is not an integer"),
        })?;
        out.push(v);
        start += piece.len() + 1;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_lists() {
        assert_eq!(parse_int_list("2, 3,4").unwrap(), vec![2, 3, 4]);
        assert_eq!(parse_int_list("").unwrap(), Vec::<i64>::new());
    }

    #[test]
    fn reports_column() {
        match parse_int_list("1,2,x") {
            Err(Error::Parse { pos, .. }) => assert_eq!(pos, 5),
            other => panic!("{other:?}"),
        }
        match parse_int_list("1,,3") {
            Err(Error::Parse { pos, .. }) => assert_eq!(pos, 3),
            other => panic!("{other:?}"),
        }
    }
}
