use std::fmt::Write;

use crate::bdiagram::FramedDiagram;
use crate::exactnum::fmt_rational;

fn interval_label(f: &FramedDiagram, j: usize) -> String {
    let ladder = f.deg0().ladder();
    match j {
        0 => format!("(0, {})", fmt_rational(&ladder[0])),
        j if j == ladder.len() => format!("[{}, inf]", fmt_rational(&ladder[j - 1])),
        j => format!("[{}, {})", fmt_rational(&ladder[j - 1]), fmt_rational(&ladder[j])),
    }
}

fn indent(m: &str) -> String {
    m.lines().map(|l| format!("    {l}\n")).collect()
}

/// Plain-text rendering: one row per interval with both ranks, then the
/// step matrices between neighbouring intervals.
pub fn render_table(f: &FramedDiagram) -> String {
    let n = f.deg0().interval_count();
    let labels: Vec<String> = (0..n).map(|j| interval_label(f, j)).collect();
    let width = labels.iter().map(String::len).max().unwrap_or(0).max("interval".len());

    let mut out = String::new();
    let _ = writeln!(out, "{:<width$}  rank0  rank1", "interval");
    for (j, label) in labels.iter().enumerate() {
        let _ = writeln!(
            out,
            "{label:<width$}  {:>5}  {:>5}",
            f.deg0().ranks()[j],
            f.deg1().ranks()[j]
        );
    }
    let _ = writeln!(out, "inf basis: {}", f.inf_basis().join(" "));
    let _ = writeln!(out, "1 basis:   {}", f.one_basis().join(" "));
    for j in (0..n - 1).rev() {
        let _ = writeln!(out, "\n{} -> {}", labels[j + 1], labels[j]);
        for (deg, d) in [(0, f.deg0()), (1, f.deg1())] {
            let _ = writeln!(out, "  degree {deg}:");
            out.push_str(&indent(&d.steps()[j].to_string()));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mdcurve::md_diagram;
    use crate::puiseux::Curve;

    #[test]
    fn cusp_table() {
        let f = md_diagram(&Curve::parse_all(&["x^(3/2)"]).unwrap()).unwrap();
        let t = render_table(&f);
        let expected = "\
interval    rank0  rank1
(0, 1)          1      0
[1, 3/2)        1      1
[3/2, inf]      1      1
inf basis: C1
1 basis:   T1

[3/2, inf] -> [1, 3/2)
  degree 0:
    [1]
  degree 1:
    [2]

[1, 3/2) -> (0, 1)
  degree 0:
    [1]
  degree 1:
    [] (0x1)
";
        assert_eq!(t, expected);
    }
}
