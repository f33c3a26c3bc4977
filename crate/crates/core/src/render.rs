/// Left-aligns a grid of cells into columns separated by two spaces, with
/// trailing whitespace trimmed from each line.
pub fn align_columns(cells: &[Vec<String>]) -> String {
    let ncols = cells.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> = (0..ncols)
        .map(|c| cells.iter().filter_map(|r| r.get(c)).map(|s| s.chars().count()).max().unwrap_or(0))
        .collect();
    let mut out = String::new();
    for row in cells {
        let mut line = String::new();
        for (c, cell) in row.iter().enumerate() {
            if c > 0 {
                line.push_str("  ");
            }
            line.push_str(cell);
            for _ in cell.chars().count()..widths[c] {
                line.push(' ');
            }
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn aligns_and_trims() {
        let cells = vec![
            vec!["0".to_string(), "0".to_string(), "0".to_string()],
            vec!["a_2".to_string(), "-a_1".to_string(), "0".to_string()],
        ];
        assert_eq!(align_columns(&cells), "0    0     0\na_2  -a_1  0\n");
    }
}
