//! Small prime-field helpers.

pub fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a % p, p - 2, p)
}

pub fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1 % p;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r
}

pub fn is_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| p % d != 0)
}

/// Rank of a matrix over F_p (rows of equal length).
pub fn rank_mod(rows: &[Vec<u64>], p: u64) -> usize {
    let mut m: Vec<Vec<u64>> = rows.to_vec();
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(piv) = (rank..m.len()).find(|&r| m[r][c] != 0) else {
            continue;
        };
        m.swap(rank, piv);
        let inv = inv_mod(m[rank][c], p);
        for x in m[rank].iter_mut() {
            *x = *x * inv % p;
        }
        for r in 0..m.len() {
            if r != rank && m[r][c] != 0 {
                let f = m[r][c];
                for k in 0..cols {
                    m[r][k] = (m[r][k] + p * p - f * m[rank][k] % p) % p;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Solutions of `Σ_c x_c cols[c] = rhs` over F_p: a particular solution and a
/// nullspace basis, or `None` if the system is inconsistent.
pub fn solve_mod(cols: &[Vec<u64>], rhs: &[u64], p: u64) -> Option<(Vec<u64>, Vec<Vec<u64>>)> {
    let k = cols.len();
    let mut m: Vec<Vec<u64>> = (0..rhs.len())
        .map(|r| cols.iter().map(|c| c[r] % p).chain([rhs[r] % p]).collect())
        .collect();
    let mut pivots = Vec::new();
    for c in 0..k {
        let rank = pivots.len();
        let Some(piv) = (rank..m.len()).find(|&r| m[r][c] != 0) else {
            continue;
        };
        m.swap(rank, piv);
        let inv = inv_mod(m[rank][c], p);
        for x in m[rank].iter_mut() {
            *x = *x * inv % p;
        }
        for r in 0..m.len() {
            if r != rank && m[r][c] != 0 {
                let f = m[r][c];
                for j in 0..=k {
                    m[r][j] = (m[r][j] + p * p - f * m[rank][j] % p) % p;
                }
            }
        }
        pivots.push(c);
    }
    if m[pivots.len()..].iter().any(|row| row[k] != 0) {
        return None;
    }
    let mut x = vec![0; k];
    for (r, &c) in pivots.iter().enumerate() {
        x[c] = m[r][k];
    }
    let null = (0..k)
        .filter(|c| !pivots.contains(c))
        .map(|f| {
            let mut v = vec![0; k];
            v[f] = 1;
            for (r, &c) in pivots.iter().enumerate() {
                v[c] = (p - m[r][f]) % p;
            }
            v
        })
        .collect();
    Some((x, null))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverses() {
        for p in [2u64, 3, 5, 7] {
            for a in 1..p {
                assert_eq!(a * inv_mod(a, p) % p, 1);
            }
        }
    }

    #[test]
    fn solve_affine_system() {
        // x + 2y = 1, 2x + 4y = 2 over F_5
        let (x, null) = solve_mod(&[vec![1, 2], vec![2, 4]], &[1, 2], 5).unwrap();
        assert_eq!((x[0] + 2 * x[1]) % 5, 1);
        assert_eq!(null.len(), 1);
        assert_eq!((null[0][0] + 2 * null[0][1]) % 5, 0);
        assert!(solve_mod(&[vec![1, 2], vec![2, 4]], &[1, 3], 5).is_none());
    }

    #[test]
    fn rank() {
        assert_eq!(rank_mod(&[vec![1, 1], vec![1, 1]], 2), 1);
        assert_eq!(rank_mod(&[vec![1, 1], vec![1, 2]], 3), 2);
        assert!(is_prime(3) && !is_prime(4));
    }
}
