use std::fmt;

use crate::error::{Error, Result};

/// Bond label `m(s, s')`; `None` is `∞`.
pub type Bond = Option<u32>;

/// A Coxeter matrix on `n` generators.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct CoxeterMatrix {
    n: usize,
    m: Vec<Bond>,
}

impl CoxeterMatrix {
    /// Builds and validates a matrix given row-major entries.
    pub fn new(n: usize, entries: Vec<Bond>) -> Result<Self> {
        if n == 0 || n > 64 {
            return Err(Error::InvalidMatrix(format!("rank {n} out of range 1..=64")));
        }
        if entries.len() != n * n {
            return Err(Error::InvalidMatrix(format!("expected {} entries, got {}", n * n, entries.len())));
        }
        for i in 0..n {
            if entries[i * n + i] != Some(1) {
                return Err(Error::InvalidMatrix(format!("m({},{}) must be 1", i + 1, i + 1)));
            }
            for j in 0..n {
                if i == j {
                    continue;
                }
                let e = entries[i * n + j];
                if e != entries[j * n + i] {
                    return Err(Error::InvalidMatrix(format!("m({},{}) != m({},{})", i + 1, j + 1, j + 1, i + 1)));
                }
                if let Some(k) = e {
                    if k < 2 {
                        return Err(Error::InvalidMatrix(format!("m({},{}) = {k} must be >= 2", i + 1, j + 1)));
                    }
                }
            }
        }
        Ok(CoxeterMatrix { n, m: entries })
    }

    /// Builds from a symmetric bond function on pairs `i < j`.
    pub fn from_fn(n: usize, f: impl Fn(usize, usize) -> Bond) -> Result<Self> {
        let mut e = vec![Some(1); n * n];
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    e[i * n + j] = f(i.min(j), i.max(j));
                }
            }
        }
        Self::new(n, e)
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> Bond {
        self.m[i * self.n + j]
    }

    /// Dihedral `I2(m)`; `m = None` for the infinite dihedral group.
    pub fn dihedral(m: Bond) -> Result<Self> {
        Self::from_fn(2, |_, _| m)
    }

    /// Type `A_n`.
    pub fn type_a(n: usize) -> Result<Self> {
        Self::from_fn(n, |i, j| Some(if j == i + 1 { 3 } else { 2 }))
    }

    /// Type `B_n` with the double bond between the last two generators.
    pub fn type_b(n: usize) -> Result<Self> {
        Self::from_fn(n, |i, j| {
            Some(if j == i + 1 {
                if j == n - 1 {
                    4
                } else {
                    3
                }
            } else {
                2
            })
        })
    }

    /// Affine type `Ã_{n}` on `n + 1` generators indexed by `Z/(n+1)`.
    pub fn affine_a(n: usize) -> Result<Self> {
        let k = n + 1;
        if k == 2 {
            return Self::dihedral(None);
        }
        Self::from_fn(k, |i, j| Some(if (j - i) % k == 1 || (i + k - j) % k == 1 { 3 } else { 2 }))
    }

    /// Affine type `C̃_p` on `p + 1` generators (chain with double bonds at both ends).
    pub fn affine_c(p: usize) -> Result<Self> {
        Self::from_fn(p + 1, |i, j| {
            Some(if j == i + 1 {
                if i == 0 || j == p {
                    4
                } else {
                    3
                }
            } else {
                2
            })
        })
    }

    /// Whether the matrix is that of `Ã_{n-1}` with generator `i` joined to `i ± 1 mod n`.
    pub fn is_affine_a(&self) -> bool {
        let n = self.n;
        if n < 3 {
            return false;
        }
        for i in 0..n {
            for j in 0..n {
                if i == j {
                    continue;
                }
                let adj = (i + 1) % n == j || (j + 1) % n == i;
                if self.get(i, j) != Some(if adj { 3 } else { 2 }) {
                    return false;
                }
            }
        }
        true
    }

    /// Whether the parabolic subgroup on `gens` is finite (positive-definite Gram matrix).
    pub fn parabolic_is_finite(&self, gens: &[usize]) -> bool {
        let k = gens.len();
        if k == 0 {
            return true;
        }
        if gens.iter().enumerate().any(|(a, &i)| gens[a + 1..].iter().any(|&j| self.get(i, j).is_none())) {
            return false;
        }
        let mut b = vec![vec![0f64; k]; k];
        for (a, &i) in gens.iter().enumerate() {
            for (c, &j) in gens.iter().enumerate() {
                b[a][c] = match self.get(i, j) {
                    Some(1) => 1.0,
                    Some(m) => -(std::f64::consts::PI / m as f64).cos(),
                    None => -1.0,
                };
            }
        }
        // Cholesky: positive definite iff every pivot is positive.
        for col in 0..k {
            let mut d = b[col][col];
            for p in 0..col {
                d -= b[col][p] * b[col][p];
            }
            if d <= 1e-9 {
                return false;
            }
            let d = d.sqrt();
            b[col][col] = d;
            for row in col + 1..k {
                let mut x = b[row][col];
                for p in 0..col {
                    x -= b[row][p] * b[col][p];
                }
                b[row][col] = x / d;
            }
        }
        true
    }

    /// Parses the plain-text system config: `n`, `n` matrix rows, then `n` weights.
    pub fn parse_config(text: &str) -> Result<(CoxeterMatrix, Vec<i64>)> {
        let toks: Vec<&str> = text
            .lines()
            .map(|l| l.split('#').next().unwrap_or(""))
            .flat_map(|l| l.split(|c: char| c.is_whitespace() || c == ','))
            .filter(|t| !t.is_empty())
            .collect();
        let bad = |m: &str| Error::Parse(format!("system config: {m}"));
        let n: usize = toks.first().ok_or_else(|| bad("empty"))?.parse().map_err(|_| bad("rank"))?;
        if toks.len() != 1 + n * n + n {
            return Err(bad(&format!("expected {} tokens after rank, found {}", n * n + n, toks.len() - 1)));
        }
        let mut e = Vec::with_capacity(n * n);
        for t in &toks[1..1 + n * n] {
            e.push(match *t {
                "inf" | "oo" | "∞" => None,
                t => Some(t.parse::<u32>().map_err(|_| bad(&format!("matrix entry '{t}'")))?),
            });
        }
        let w: Vec<i64> = toks[1 + n * n..].iter().map(|t| t.parse().map_err(|_| bad(&format!("weight '{t}'")))).collect::<Result<_>>()?;
        Ok((CoxeterMatrix::new(n, e)?, w))
    }

    pub fn to_config(&self, weights: &[i64]) -> String {
        let mut s = format!("{}\n", self.n);
        for i in 0..self.n {
            let row: Vec<String> = (0..self.n).map(|j| self.get(i, j).map_or("inf".to_string(), |m| m.to_string())).collect();
            s.push_str(&row.join(" "));
            s.push('\n');
        }
        s.push_str(&weights.iter().map(|w| w.to_string()).collect::<Vec<_>>().join(" "));
        s.push('\n');
        s
    }
}

impl fmt::Display for CoxeterMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.n {
            let row: Vec<String> = (0..self.n).map(|j| self.get(i, j).map_or("inf".to_string(), |m| m.to_string())).collect();
            writeln!(f, "{}", row.join(" "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn finiteness() {
        let a3 = CoxeterMatrix::type_a(3).unwrap();
        assert!(a3.parabolic_is_finite(&[0, 1, 2]));
        let aff = CoxeterMatrix::affine_a(2).unwrap();
        assert!(!aff.parabolic_is_finite(&[0, 1, 2]));
        assert!(aff.parabolic_is_finite(&[0, 1]));
        let i2inf = CoxeterMatrix::dihedral(None).unwrap();
        assert!(!i2inf.parabolic_is_finite(&[0, 1]));
        assert!(i2inf.parabolic_is_finite(&[1]));
        let h3 = CoxeterMatrix::from_fn(3, |i, j| Some(if (i, j) == (0, 1) { 5 } else if (i, j) == (1, 2) { 3 } else { 2 })).unwrap();
        assert!(h3.parabolic_is_finite(&[0, 1, 2]));
        let ct2 = CoxeterMatrix::affine_c(2).unwrap();
        assert!(!ct2.parabolic_is_finite(&[0, 1, 2]));
    }

    #[test]
    fn config_roundtrip() {
        let m = CoxeterMatrix::dihedral(None).unwrap();
        let txt = m.to_config(&[1, 2]);
        let (m2, w) = CoxeterMatrix::parse_config(&txt).unwrap();
        assert_eq!(m, m2);
        assert_eq!(w, vec![1, 2]);
    }

    #[test]
    fn rejects_bad_matrix() {
        assert!(CoxeterMatrix::new(2, vec![Some(1), Some(3), Some(4), Some(1)]).is_err());
        assert!(CoxeterMatrix::new(2, vec![Some(2), Some(3), Some(3), Some(1)]).is_err());
    }
}
