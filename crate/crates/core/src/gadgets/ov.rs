//! Orthogonal Vectors into a complete matrix whose diameter detects an
//! orthogonal pair.

use crate::error::{DmcError, Result};
use crate::matrix::CompleteMatrix;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OvInstance {
    u: Vec<Vec<bool>>,
    v: Vec<Vec<bool>>,
    len: usize,
}

impl OvInstance {
    pub fn new(u: Vec<Vec<bool>>, v: Vec<Vec<bool>>) -> Result<Self> {
        if u.len() != v.len() {
            return Err(DmcError::InvalidParameter(format!(
                "sets have {} and {} vectors",
                u.len(),
                v.len()
            )));
        }
        let len = u.first().or(v.first()).map_or(0, Vec::len);
        if let Some(bad) = u.iter().chain(&v).find(|x| x.len() != len) {
            return Err(DmcError::LengthMismatch { left: len, right: bad.len() });
        }
        Ok(OvInstance { u, v, len })
    }

    /// Vectors written as 0/1 strings.
    pub fn parse<S: AsRef<str>>(u: &[S], v: &[S]) -> Result<Self> {
        let conv = |xs: &[S]| -> Result<Vec<Vec<bool>>> {
            xs.iter()
                .map(|s| {
                    s.as_ref()
                        .chars()
                        .map(|c| match c {
                            '0' => Ok(false),
                            '1' => Ok(true),
                            _ => Err(DmcError::InvalidParameter(format!("bad vector character {c:?}"))),
                        })
                        .collect()
                })
                .collect()
        };
        OvInstance::new(conv(u)?, conv(v)?)
    }

    pub fn n(&self) -> usize {
        self.u.len()
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.u.is_empty()
    }

    pub fn u(&self) -> &[Vec<bool>] {
        &self.u
    }

    pub fn v(&self) -> &[Vec<bool>] {
        &self.v
    }

    /// First orthogonal (u, v) index pair by a quadratic scan.
    pub fn orthogonal_pair(&self) -> Option<(usize, usize)> {
        (0..self.n()).find_map(|a| {
            (0..self.n())
                .find(|&b| self.u[a].iter().zip(&self.v[b]).all(|(&x, &y)| !(x && y)))
                .map(|b| (a, b))
        })
    }
}

/// T ∈ {0,1}^{2n × 6ℓ}: u-rows encode 0/1 as 001/111 then pad with 000,
/// v-rows encode 010/111 then pad with 111. δ(T) = 5ℓ iff some pair is
/// orthogonal.
pub fn gen_ov(inst: &OvInstance) -> Result<CompleteMatrix> {
    let ell = inst.len();
    let encode = |x: &[bool], zero: [bool; 3], pad: bool| -> Vec<bool> {
        let mut row = Vec::with_capacity(6 * ell);
        for &bit in x {
            row.extend(if bit { [true; 3] } else { zero });
        }
        row.extend(std::iter::repeat_n(pad, 3 * ell));
        row
    };
    let rows: Vec<Vec<bool>> = inst
        .u()
        .iter()
        .map(|x| encode(x, [false, false, true], false))
        .chain(inst.v().iter().map(|x| encode(x, [false, true, false], true)))
        .collect();
    CompleteMatrix::from_bits(&rows)
}
