//! ASCII renderings for the CLI: Dyck paths as staircases and grid sets as
//! dot matrices. Purely presentational.

use smoothperm::dyck::DecoratedPath;
use smoothperm::essential::GridSet;

/// Staircase view of a decorated path, one row per i from n down to 1:
/// filled cells up to f(i), with the decoration bit on the right.
pub fn render_path(path: &DecoratedPath) -> String {
    let n = path.n();
    let width = n.to_string().len();
    let mut out = String::new();
    for i in (1..=n).rev() {
        let bar: String = (1..=n).map(|x| if x <= path.f(i) { '#' } else { '.' }).collect();
        out.push_str(&format!("i={i:<width$} {bar}  g={}\n", path.g(i) as u8));
    }
    out
}

/// Dot-matrix view of a grid set on [n-1]²; rows are the first coordinate.
pub fn render_grid(grid: &GridSet) -> String {
    let n = grid.n();
    if n == 1 {
        return "(empty 0x0 grid)\n".to_string();
    }
    let mut out = String::new();
    for i in 1..n {
        let row: Vec<&str> =
            (1..n).map(|j| if grid.contains(i, j) { "*" } else { "." }).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}
