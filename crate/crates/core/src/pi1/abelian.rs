use alloc::vec::Vec;

/// Isomorphism type of a finitely generated abelian group:
/// `Z^free_rank ⊕ Z/t_1 ⊕ ... ⊕ Z/t_k` with `1 < t_1 | t_2 | ... | t_k`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct AbelianInvariants {
    pub free_rank: usize,
    pub torsion: Vec<u64>,
}

impl AbelianInvariants {
    pub fn trivial() -> Self {
        Self::default()
    }

    pub fn cyclic(order: u64) -> Self {
        match order {
            0 => AbelianInvariants { free_rank: 1, torsion: Vec::new() },
            1 => Self::trivial(),
            n => AbelianInvariants { free_rank: 0, torsion: alloc::vec![n] },
        }
    }

    /// Group order, `0` when infinite.
    pub fn order(&self) -> u64 {
        if self.free_rank > 0 {
            0
        } else {
            self.torsion.iter().product()
        }
    }
}

/// Invariant factors of the cokernel of an integer relation matrix with
/// `cols` columns, via Smith normal form.
pub fn smith_invariants(rows: &[Vec<i64>], cols: usize) -> AbelianInvariants {
    let mut m: Vec<Vec<i128>> =
        rows.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
    let nrows = m.len();
    let mut diag = Vec::new();
    let mut t = 0;
    while t < nrows.min(cols) {
        // smallest nonzero entry in the remaining block
        let pivot = (t..nrows)
            .flat_map(|i| (t..cols).map(move |j| (i, j)))
            .filter(|&(i, j)| m[i][j] != 0)
            .min_by_key(|&(i, j)| m[i][j].abs());
        let Some((pi, pj)) = pivot else { break };
        m.swap(t, pi);
        for row in m.iter_mut() {
            row.swap(t, pj);
        }
        loop {
            let mut clean = true;
            let pv = m[t][t];
            for i in t + 1..nrows {
                let f = m[i][t].div_euclid(pv);
                if f != 0 {
                    let pivot = m[t].clone();
                    for (x, y) in m[i][t..].iter_mut().zip(&pivot[t..]) {
                        *x -= f * y;
                    }
                }
                if m[i][t] != 0 {
                    clean = false;
                }
            }
            for j in t + 1..cols {
                let f = m[t][j].div_euclid(pv);
                if f != 0 {
                    for row in m.iter_mut().skip(t) {
                        row[j] -= f * row[t];
                    }
                }
                if m[t][j] != 0 {
                    clean = false;
                }
            }
            if clean {
                // pivot must divide the rest of the block
                let bad = (t + 1..nrows)
                    .flat_map(|i| (t + 1..cols).map(move |j| (i, j)))
                    .find(|&(i, j)| m[i][j] % pv != 0);
                match bad {
                    Some((i, _)) => {
                        let other = m[i].clone();
                        for (x, y) in m[t][t..].iter_mut().zip(&other[t..]) {
                            *x += y;
                        }
                    }
                    None => break,
                }
            } else {
                let next = (t..nrows)
                    .flat_map(|i| (t..cols).map(move |j| (i, j)))
                    .filter(|&(i, j)| (i == t || j == t) && m[i][j] != 0)
                    .min_by_key(|&(i, j)| m[i][j].abs())
                    .unwrap();
                m.swap(t, next.0);
                for row in m.iter_mut() {
                    row.swap(t, next.1);
                }
            }
        }
        diag.push(m[t][t].unsigned_abs() as u64);
        t += 1;
    }
    let rank = diag.len();
    AbelianInvariants {
        free_rank: cols - rank,
        torsion: diag.into_iter().filter(|&d| d > 1).collect(),
    }
}
