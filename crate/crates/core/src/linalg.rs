//! Dense linear algebra over the prime field `F_p`.

fn inv_mod(x: u64, p: u64) -> u64 {
    let mut acc = 1;
    let (mut base, mut e) = (x % p, p - 2);
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        e >>= 1;
    }
    acc
}

/// Row-reduces `rows` in place modulo `p` and returns the pivot columns.
fn echelon(rows: &mut [Vec<u64>], p: u64) -> Vec<usize> {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..ncols {
        let Some(pr) = (r..rows.len()).find(|&i| rows[i][col] != 0) else {
            continue;
        };
        rows.swap(r, pr);
        let s = inv_mod(rows[r][col], p);
        for x in rows[r].iter_mut() {
            *x = *x * s % p;
        }
        for i in 0..rows.len() {
            if i != r && rows[i][col] != 0 {
                let factor = rows[i][col];
                for j in 0..ncols {
                    let sub = factor * rows[r][j] % p;
                    rows[i][j] = (rows[i][j] + p - sub) % p;
                }
            }
        }
        pivots.push(col);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    pivots
}

fn reduce(matrix: &[Vec<i64>], p: u64) -> Vec<Vec<u64>> {
    matrix
        .iter()
        .map(|row| row.iter().map(|&x| x.rem_euclid(p as i64) as u64).collect())
        .collect()
}

/// Rank of an integer matrix reduced modulo the prime `p`.
pub fn rank_mod_p(matrix: &[Vec<i64>], p: u64) -> usize {
    let mut rows = reduce(matrix, p);
    echelon(&mut rows, p).len()
}

/// Solves `Σ_i x_i · vectors[i] = target` over `F_p`, if a solution exists.
pub fn solve_combination(vectors: &[Vec<i64>], target: &[i64], p: u64) -> Option<Vec<u64>> {
    let n = vectors.len();
    let dim = target.len();
    // augmented system: one row per coordinate, one column per vector, plus target
    let mut rows: Vec<Vec<u64>> = (0..dim)
        .map(|c| {
            let mut row: Vec<u64> = vectors
                .iter()
                .map(|v| v[c].rem_euclid(p as i64) as u64)
                .collect();
            row.push(target[c].rem_euclid(p as i64) as u64);
            row
        })
        .collect();
    let pivots = echelon(&mut rows, p);
    if pivots.contains(&n) {
        return None;
    }
    let mut x = vec![0; n];
    for (r, &col) in pivots.iter().enumerate() {
        x[col] = rows[r][n];
    }
    Some(x)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_examples() {
        assert_eq!(rank_mod_p(&[vec![1]], 3), 1);
        assert_eq!(rank_mod_p(&[vec![3, 6], vec![0, 3]], 3), 0);
        assert_eq!(rank_mod_p(&[vec![1, 2], vec![2, 4]], 5), 1);
        assert_eq!(rank_mod_p(&[vec![1, 2], vec![2, 1]], 3), 1);
        assert_eq!(rank_mod_p(&[vec![1, 2], vec![2, 1]], 5), 2);
        assert_eq!(rank_mod_p(&[], 2), 0);
    }

    #[test]
    fn solve_examples() {
        let vs = vec![vec![1, 0, 1], vec![0, 1, 1]];
        assert_eq!(solve_combination(&vs, &[1, 1, 0], 2), Some(vec![1, 1]));
        assert_eq!(solve_combination(&vs, &[1, 1, 1], 2), None);
        assert_eq!(solve_combination(&vs, &[2, 1, 0], 3), Some(vec![2, 1]));
    }
}
