use std::fmt::Write;

use ratbound_core::linalg::CMatrix;

/// Two decimals, ties to even.
pub fn round2(v: f64) -> String {
    format!("{:.2}", (v * 100.0).round_ties_even() / 100.0)
}

/// Left-aligned first column, right-aligned rest, two spaces between.
pub fn render_table(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let mut out = String::new();
    let line = |cells: Vec<&str>, out: &mut String| {
        let parts: Vec<String> = cells
            .iter()
            .zip(&widths)
            .enumerate()
            .map(|(i, (c, &w))| if i == 0 { format!("{c:<w$}") } else { format!("{c:>w$}") })
            .collect();
        out.push_str(parts.join("  ").trim_end());
        out.push('\n');
    };
    line(header.to_vec(), &mut out);
    for row in rows {
        line(row.iter().map(String::as_str).collect(), &mut out);
    }
    out
}

/// Matrix Market coordinate complex general, one-based, nonzeros only.
pub fn matrix_market(m: &CMatrix) -> String {
    let entries: Vec<_> = (0..m.nrows())
        .flat_map(|i| (0..m.ncols()).map(move |j| (i, j)))
        .filter(|&(i, j)| m[(i, j)].re != 0.0 || m[(i, j)].im != 0.0)
        .collect();
    let mut out = String::from("%%MatrixMarket matrix coordinate complex general\n");
    writeln!(out, "{} {} {}", m.nrows(), m.ncols(), entries.len()).unwrap();
    for (i, j) in entries {
        let z = m[(i, j)];
        writeln!(out, "{} {} {:?} {:?}", i + 1, j + 1, z.re, z.im).unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use ratbound_core::linalg;

    #[test]
    fn rounding_is_half_even() {
        assert_eq!(round2(0.125), "0.12");
        assert_eq!(round2(0.375), "0.38");
        assert_eq!(round2(12.0), "12.00");
        assert_eq!(round2(2.6448), "2.64");
    }

    #[test]
    fn matrix_market_lists_nonzeros() {
        let m = linalg::from_real_rows(2, 2, &[0.1, 0.0, 0.0, -3.0]);
        assert_eq!(
            matrix_market(&m),
            "%%MatrixMarket matrix coordinate complex general\n2 2 2\n1 1 0.1 0.0\n2 2 -3.0 0.0\n"
        );
    }

    #[test]
    fn table_alignment() {
        let t = render_table(&["a", "bb"], &[vec!["xyz".into(), "1".into()]]);
        assert_eq!(t, "a    bb\nxyz   1\n");
    }
}
