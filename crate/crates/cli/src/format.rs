//! Plain-text rendering of eigenvalues.

/// Formats `x` with one decimal fewer than `tol` resolves, dropping trailing
/// zeros, so `1.9999999999997` at `tol = 1e-10` prints as `2`. Without a
/// tolerance the shortest round-trip form is used.
pub fn value_to_string(x: f64, tol: Option<f64>) -> String {
    let Some(tol) = tol else {
        return format!("{x}");
    };
    let decimals = ((-tol.log10()).floor() - 1.0).clamp(0.0, 17.0) as usize;
    let mut s = format!("{x:.decimals$}");
    if s.contains('.') {
        s.truncate(s.trim_end_matches('0').trim_end_matches('.').len());
    }
    if s == "-0" {
        s.remove(0);
    }
    s
}

pub fn join_values(values: &[f64], tol: Option<f64>) -> String {
    values
        .iter()
        .map(|&x| value_to_string(x, tol))
        .collect::<Vec<_>>()
        .join(" ")
}
