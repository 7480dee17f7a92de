//! Exact least-distance projection by active-set enumeration.
//!
//! For each subset S of the constraints the projection onto the affine set
//! `{y : G_S y = h_S}` is computed from the normal equations; the feasible
//! candidate closest to `x` is the projection onto the polyhedron. Only
//! practical for a handful of constraints.

pub fn project(x: &[f64], normals: &[Vec<f64>], offsets: &[f64]) -> Vec<f64> {
    let l = normals.len();
    assert!(l <= 12, "enumeration oracle is exponential in the row count");
    let mut best: Option<(f64, Vec<f64>)> = None;
    for mask in 0u32..(1 << l) {
        let rows: Vec<usize> = (0..l).filter(|i| mask & (1 << i) != 0).collect();
        let Some(y) = affine_projection(x, normals, offsets, &rows) else {
            continue;
        };
        let feasible = normals
            .iter()
            .zip(offsets)
            .all(|(g, h)| dot(g, &y) - h <= 1e-9);
        if !feasible {
            continue;
        }
        let d: f64 = x.iter().zip(&y).map(|(a, b)| (a - b) * (a - b)).sum();
        if best.as_ref().is_none_or(|(bd, _)| d < *bd) {
            best = Some((d, y));
        }
    }
    best.expect("nonempty polyhedron has a feasible candidate").1
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(p, q)| p * q).sum()
}

fn affine_projection(x: &[f64], normals: &[Vec<f64>], offsets: &[f64], rows: &[usize]) -> Option<Vec<f64>> {
    let k = rows.len();
    if k == 0 {
        return Some(x.to_vec());
    }
    if k > x.len() {
        return None;
    }
    // (G Gᵀ) μ = G x - h
    let mut mat = vec![vec![0.0; k + 1]; k];
    for (r, &i) in rows.iter().enumerate() {
        for (c, &j) in rows.iter().enumerate() {
            mat[r][c] = dot(&normals[i], &normals[j]);
        }
        mat[r][k] = dot(&normals[i], x) - offsets[i];
    }
    let mu = gauss_solve(mat)?;
    let mut y = x.to_vec();
    for (r, &i) in rows.iter().enumerate() {
        for (yj, gj) in y.iter_mut().zip(&normals[i]) {
            *yj -= mu[r] * gj;
        }
    }
    Some(y)
}

fn gauss_solve(mut a: Vec<Vec<f64>>) -> Option<Vec<f64>> {
    let k = a.len();
    for col in 0..k {
        let piv = (col..k).max_by(|&p, &q| a[p][col].abs().total_cmp(&a[q][col].abs()))?;
        if a[piv][col].abs() < 1e-12 {
            return None;
        }
        a.swap(col, piv);
        let pivot_row = a[col].clone();
        for (r, row) in a.iter_mut().enumerate() {
            if r != col {
                let f = row[col] / pivot_row[col];
                for (v, p) in row[col..=k].iter_mut().zip(&pivot_row[col..=k]) {
                    *v -= f * p;
                }
            }
        }
    }
    Some((0..k).map(|i| a[i][k] / a[i][i]).collect())
}

#[cfg(test)]
mod self_check {
    #[test]
    fn clamp_to_orthant() {
        let y = super::project(&[1.0, -1.0], &[vec![1.0, 0.0], vec![0.0, 1.0]], &[0.0, 0.0]);
        assert!((y[0]).abs() < 1e-12 && (y[1] + 1.0).abs() < 1e-12);
    }
}
