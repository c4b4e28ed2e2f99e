//! Smith normal form over the integers, tracking the row transform and its
//! inverse. Used to split H₁ of a cellulation's chain complex off the cycle
//! lattice when building dual gains.

/// U·M·V = D with U, V unimodular; we keep U, U⁻¹ and the diagonal.
#[derive(Debug, Clone)]
pub struct Snf {
    pub rows: usize,
    pub cols: usize,
    /// Invariant factors on the diagonal of D, length min(rows, cols).
    pub diag: Vec<i128>,
    pub u: Vec<Vec<i128>>,
    pub u_inv: Vec<Vec<i128>>,
}

fn identity(n: usize) -> Vec<Vec<i128>> {
    (0..n)
        .map(|i| (0..n).map(|j| i128::from(i == j)).collect())
        .collect()
}

pub fn smith_normal_form(mut m: Vec<Vec<i128>>) -> Snf {
    let rows = m.len();
    let cols = if rows == 0 { 0 } else { m[0].len() };
    let mut u = identity(rows);
    let mut u_inv = identity(rows);

    // Row ops keep U·M invariant: M ← E·M, U ← E·U, U⁻¹ ← U⁻¹·E⁻¹.
    let swap_rows = |m: &mut Vec<Vec<i128>>, u: &mut Vec<Vec<i128>>, ui: &mut Vec<Vec<i128>>, a: usize, b: usize| {
        m.swap(a, b);
        u.swap(a, b);
        for row in ui.iter_mut() {
            row.swap(a, b);
        }
    };
    let add_row = |m: &mut Vec<Vec<i128>>, u: &mut Vec<Vec<i128>>, ui: &mut Vec<Vec<i128>>, src: usize, dst: usize, c: i128| {
        // row[dst] += c·row[src];  inverse: column[src] -= c·column[dst].
        for j in 0..cols {
            let v = m[src][j].checked_mul(c).and_then(|x| m[dst][j].checked_add(x)).expect("snf overflow");
            m[dst][j] = v;
        }
        for j in 0..u[0].len() {
            let v = u[src][j].checked_mul(c).and_then(|x| u[dst][j].checked_add(x)).expect("snf overflow");
            u[dst][j] = v;
        }
        for row in ui.iter_mut() {
            let v = row[dst].checked_mul(c).and_then(|x| row[src].checked_sub(x)).expect("snf overflow");
            row[src] = v;
        }
    };
    let negate_row = |m: &mut Vec<Vec<i128>>, u: &mut Vec<Vec<i128>>, ui: &mut Vec<Vec<i128>>, a: usize| {
        for v in m[a].iter_mut() {
            *v = -*v;
        }
        for v in u[a].iter_mut() {
            *v = -*v;
        }
        for row in ui.iter_mut() {
            row[a] = -row[a];
        }
    };
    // Column ops change only the column space parametrization; V is not needed
    // by any caller, so it is not tracked.
    let swap_cols = |m: &mut Vec<Vec<i128>>, a: usize, b: usize| {
        for row in m.iter_mut() {
            row.swap(a, b);
        }
    };
    let add_col = |m: &mut Vec<Vec<i128>>, src: usize, dst: usize, c: i128| {
        for row in m.iter_mut() {
            let v = row[src].checked_mul(c).and_then(|x| row[dst].checked_add(x)).expect("snf overflow");
            row[dst] = v;
        }
    };

    let n = rows.min(cols);
    let mut k = 0;
    while k < n {
        // Find a pivot of minimal absolute value in the trailing block.
        let mut pivot: Option<(usize, usize)> = None;
        for i in k..rows {
            for j in k..cols {
                if m[i][j] != 0 {
                    let better = match pivot {
                        None => true,
                        Some((pi, pj)) => m[i][j].abs() < m[pi][pj].abs(),
                    };
                    if better {
                        pivot = Some((i, j));
                    }
                }
            }
        }
        let Some((pi, pj)) = pivot else { break };
        swap_rows(&mut m, &mut u, &mut u_inv, k, pi);
        swap_cols(&mut m, k, pj);
        if m[k][k] < 0 {
            negate_row(&mut m, &mut u, &mut u_inv, k);
        }

        let mut dirty = false;
        for i in k + 1..rows {
            if m[i][k] != 0 {
                let q = m[i][k].div_euclid(m[k][k]);
                add_row(&mut m, &mut u, &mut u_inv, k, i, -q);
                if m[i][k] != 0 {
                    dirty = true;
                }
            }
        }
        for j in k + 1..cols {
            if m[k][j] != 0 {
                let q = m[k][j].div_euclid(m[k][k]);
                add_col(&mut m, k, j, -q);
                if m[k][j] != 0 {
                    dirty = true;
                }
            }
        }
        if dirty {
            continue; // remainders became new, smaller pivot candidates
        }

        // Divisibility pass: fold in any entry the pivot does not divide.
        let mut fixed = None;
        'scan: for i in k + 1..rows {
            for j in k + 1..cols {
                if m[i][j] % m[k][k] != 0 {
                    fixed = Some(i);
                    break 'scan;
                }
            }
        }
        if let Some(i) = fixed {
            add_row(&mut m, &mut u, &mut u_inv, i, k, 1);
            continue;
        }
        k += 1;
    }

    let diag = (0..n).map(|i| m[i][i]).collect();
    Snf { rows, cols, diag, u, u_inv }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn matmul(a: &[Vec<i128>], b: &[Vec<i128>]) -> Vec<Vec<i128>> {
        let n = a.len();
        let k = b.len();
        let m = if k == 0 { 0 } else { b[0].len() };
        let mut out = vec![vec![0; m]; n];
        for i in 0..n {
            for j in 0..m {
                out[i][j] = (0..k).map(|t| a[i][t] * b[t][j]).sum();
            }
        }
        out
    }

    fn check(m: Vec<Vec<i128>>) -> Snf {
        let snf = smith_normal_form(m.clone());
        // U·U⁻¹ = I.
        let prod = matmul(&snf.u, &snf.u_inv);
        for i in 0..snf.rows {
            for j in 0..snf.rows {
                assert_eq!(prod[i][j], i128::from(i == j), "U·U⁻¹ not identity");
            }
        }
        // U·M has the same row span as D up to column ops: check that U·M's
        // rows beyond the rank are zero exactly when diag says so.
        let um = matmul(&snf.u, &m);
        for (i, &d) in snf.diag.iter().enumerate() {
            let row_zero = um[i].iter().all(|&x| x == 0);
            assert_eq!(row_zero, d == 0, "row {i} zero-ness disagrees with diag");
        }
        for row in um.iter().skip(snf.diag.len()) {
            assert!(row.iter().all(|&x| x == 0), "rows beyond min(rows,cols) must vanish");
        }
        // Divisibility chain.
        for w in snf.diag.windows(2) {
            if w[1] != 0 {
                assert!(w[0] != 0 && w[1] % w[0] == 0, "diag not a divisibility chain");
            }
        }
        snf
    }

    #[test]
    fn known_matrix() {
        let m = vec![
            vec![-6, 111, -36, 6],
            vec![5, -672, 210, 74],
            vec![0, -255, 81, 24],
            vec![-7, 255, -81, -10],
        ];
        let snf = check(m);
        assert_eq!(snf.diag, vec![1, 3, 21, 0]);
    }

    #[test]
    fn zero_matrix() {
        let snf = check(vec![vec![0, 0], vec![0, 0], vec![0, 0]]);
        assert_eq!(snf.diag, vec![0, 0]);
    }

    #[test]
    fn tall_matrix_quotient_rows() {
        // Z³ / span{(2,4,6)}: one invariant factor 2, rows 1 and 2 of U·M vanish,
        // so the lifted basis of the free part is U⁻¹·(e₁, e₂).
        let m = vec![vec![2], vec![4], vec![6]];
        let snf = check(m.clone());
        assert_eq!(snf.diag, vec![2]);
        let um = matmul(&snf.u, &m);
        assert!(um[1].iter().all(|&x| x == 0));
        assert!(um[2].iter().all(|&x| x == 0));
    }

    #[test]
    fn wide_matrix() {
        let snf = check(vec![vec![4, 6, 10], vec![6, 12, 18]]);
        assert_eq!(snf.diag, vec![2, 6]);
    }
}
