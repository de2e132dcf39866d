use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The two boundary lines of the strip: `X` (the line `D`) and `Xi` (the line `Delta`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Side {
    X,
    Xi,
}

/// A splitting of the integers into two translation-invariant sets `X` and `Xi`,
/// recorded as the set of residues (in `1..=period`) lying in `X`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Strip {
    period: usize,
    x_mask: u64,
}

impl Strip {
    pub fn new(period: usize, x_residues: &[i64]) -> Result<Self> {
        if period == 0 {
            return Err(Error::ZeroPeriod);
        }
        if period > 64 {
            return Err(Error::InvalidPartition(format!("period {period} exceeds 64")));
        }
        let mut x_mask = 0u64;
        for &r in x_residues {
            x_mask |= 1 << residue_index(r, period);
        }
        let full = if period == 64 { u64::MAX } else { (1u64 << period) - 1 };
        if x_mask == 0 || x_mask == full {
            return Err(Error::InvalidPartition("X and Xi must both be non-empty".into()));
        }
        Ok(Strip { period, x_mask })
    }

    /// `X` = odd integers, `Xi` = even integers, period `2n`.
    pub fn ctilde(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::RankTooSmall(n));
        }
        let odd: Vec<i64> = (1..=2 * n as i64).step_by(2).collect();
        Strip::new(2 * n, &odd)
    }

    pub fn period(&self) -> usize {
        self.period
    }

    pub fn n(&self) -> i64 {
        self.period as i64
    }

    pub fn side(&self, v: i64) -> Side {
        if self.x_mask >> residue_index(v, self.period) & 1 == 1 {
            Side::X
        } else {
            Side::Xi
        }
    }

    pub fn is_x(&self, v: i64) -> bool {
        self.side(v) == Side::X
    }

    /// True for the odd/even splitting, where `i -> 1 - i` exchanges the sides.
    pub fn is_parity(&self) -> bool {
        self.period.is_multiple_of(2) && (1..=self.n()).all(|v| self.is_x(v) == (v.rem_euclid(2) == 1))
    }

    /// Residues of `X` in `1..=period`.
    pub fn x_residues(&self) -> Vec<i64> {
        (1..=self.n()).filter(|&v| self.is_x(v)).collect()
    }

    pub fn xi_residues(&self) -> Vec<i64> {
        (1..=self.n()).filter(|&v| !self.is_x(v)).collect()
    }

    /// Position of `v` in the boundary order: `X` ascending, then `Xi` descending.
    pub fn boundary_key(&self, v: i64) -> (u8, i64) {
        match self.side(v) {
            Side::X => (0, v),
            Side::Xi => (1, -v),
        }
    }

    /// Residue of `v` in `1..=period`.
    pub fn residue(&self, v: i64) -> i64 {
        residue(v, self.period)
    }
}

pub(crate) fn residue(v: i64, period: usize) -> i64 {
    (v - 1).rem_euclid(period as i64) + 1
}

fn residue_index(v: i64, period: usize) -> u32 {
    (v - 1).rem_euclid(period as i64) as u32
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parity_strip() {
        let s = Strip::ctilde(2).unwrap();
        assert_eq!(s.period(), 4);
        assert!(s.is_x(1) && s.is_x(-3) && !s.is_x(0) && !s.is_x(4));
        assert!(s.is_parity());
        assert_eq!(s.x_residues(), vec![1, 3]);
    }

    #[test]
    fn boundary_order() {
        let s = Strip::ctilde(2).unwrap();
        let mut v = vec![4, 1, 2, 3, 5];
        v.sort_by_key(|&x| s.boundary_key(x));
        assert_eq!(v, vec![1, 3, 5, 4, 2]);
    }

    #[test]
    fn rejects_one_sided() {
        assert!(Strip::new(3, &[1, 2, 3]).is_err());
        assert!(Strip::new(3, &[]).is_err());
        let s = Strip::new(9, &[5, 6, 7, 8, 9]).unwrap();
        assert!(!s.is_parity());
        assert_eq!(s.xi_residues(), vec![1, 2, 3, 4]);
    }
}
