use alloc::vec::Vec;

use super::{SkewShape, WeightVector};

/// Semistandard filling of a skew shape; `rows[r]` holds the entries of row
/// `r` in columns `μ_r..λ_r`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Tableau {
    pub rows: Vec<Vec<u32>>,
}

impl Tableau {
    /// `i`-th entry counts the cells filled with `i + 1`.
    pub fn weight(&self, n: usize) -> WeightVector {
        let mut w = alloc::vec![0i64; n];
        for &e in self.rows.iter().flatten() {
            w[e as usize - 1] += 1;
        }
        w.into()
    }
}

/// All semistandard tableaux of `shape` with entries in `1..=n`: rows weakly
/// increasing, columns strictly increasing.
pub fn ssyt_enumerate(shape: &SkewShape, n: usize) -> Vec<Tableau> {
    let lam = shape.lambda().parts();
    let mu = shape.mu().parts();
    let cells: Vec<(usize, usize)> = (0..lam.len())
        .flat_map(|r| (mu[r] as usize..lam[r] as usize).map(move |c| (r, c)))
        .collect();
    let mut rows: Vec<Vec<u32>> = lam.iter().zip(mu).map(|(&l, &m)| alloc::vec![0; (l - m) as usize]).collect();
    let mut out = Vec::new();
    fill(&cells, 0, mu, n as u32, &mut rows, &mut out);
    out
}

fn fill(cells: &[(usize, usize)], at: usize, mu: &[i64], n: u32, rows: &mut [Vec<u32>], out: &mut Vec<Tableau>) {
    let Some(&(r, c)) = cells.get(at) else {
        out.push(Tableau { rows: rows.to_vec() });
        return;
    };
    let get = |rows: &[Vec<u32>], r: usize, c: usize| -> Option<u32> {
        let m = mu[r] as usize;
        (c >= m).then(|| rows[r].get(c - m).copied()).flatten()
    };
    let mut lo = 1;
    if c > 0 {
        if let Some(left) = get(rows, r, c - 1) {
            lo = lo.max(left);
        }
    }
    if r > 0 {
        if let Some(above) = get(rows, r - 1, c) {
            lo = lo.max(above + 1);
        }
    }
    for v in lo..=n {
        rows[r][c - mu[r] as usize] = v;
        fill(cells, at + 1, mu, n, rows, out);
    }
}
