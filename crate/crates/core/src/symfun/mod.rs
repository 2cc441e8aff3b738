//! Symmetric functions in Chern roots and the characteristic-class
//! expression language.

mod expr;
mod parser;
mod partition;

pub use expr::{lower_class, ClassExpr, LoweredClass};
pub use parser::parse_class;
pub use partition::Partition;

use thiserror::Error;

use crate::exact::{MultiPoly, VarId};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SymfunError {
    #[error("chern class c{index} needs at least {index} roots, bundle has {roots}")]
    ChernIndexOutOfRange { index: u32, roots: u32 },
    #[error("syntax error at byte {offset}: {message}; expected one of: {}", expected.join(", "))]
    Syntax {
        offset: usize,
        message: String,
        expected: Vec<String>,
    },
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("class uses variable {var} outside the roots z1..z{roots}")]
    ForeignVariable { var: VarId, roots: u32 },
}

/// The root variables `z_1, ..., z_m`.
pub fn roots(m: u32) -> Vec<VarId> {
    (1..=m).map(VarId::z).collect()
}

fn root_polys(m: u32) -> Vec<MultiPoly> {
    roots(m).into_iter().map(MultiPoly::var).collect()
}

/// `[e_0, ..., e_max]` of the given polynomial arguments.
pub fn elementary_upto(max: u32, args: &[MultiPoly]) -> Vec<MultiPoly> {
    let mut e = vec![MultiPoly::zero(); max as usize + 1];
    e[0] = MultiPoly::one();
    for x in args {
        for k in (1..=max as usize).rev() {
            let step = &e[k - 1] * x;
            e[k] += &step;
        }
    }
    e
}

/// `[h_0, ..., h_max]` of the given polynomial arguments.
pub fn complete_upto(max: u32, args: &[MultiPoly]) -> Vec<MultiPoly> {
    let mut h = vec![MultiPoly::zero(); max as usize + 1];
    h[0] = MultiPoly::one();
    for x in args {
        for k in 1..=max as usize {
            let step = &h[k - 1] * x;
            h[k] += &step;
        }
    }
    h
}

/// `e_k(z_1, ..., z_m)`; zero when `k > m`.
pub fn elementary(k: u32, m: u32) -> MultiPoly {
    if k > m {
        return MultiPoly::zero();
    }
    elementary_upto(k, &root_polys(m)).pop().unwrap()
}

/// `h_k(z_1, ..., z_m)`.
pub fn complete(k: u32, m: u32) -> MultiPoly {
    complete_upto(k, &root_polys(m)).pop().unwrap()
}

/// Power sum `p_k(z_1, ..., z_m)`.
pub fn power(k: u32, m: u32) -> MultiPoly {
    let mut p = MultiPoly::zero();
    for v in roots(m) {
        p += &MultiPoly::var(v).pow(k);
    }
    p
}

/// Schur polynomial `s_lambda(z_1, ..., z_m)` from the Jacobi-Trudi
/// determinant `det(h_{lambda_i - i + j})`.
pub fn schur(lambda: &Partition, m: u32) -> MultiPoly {
    let rows = lambda.len();
    if rows > m as usize {
        return MultiPoly::zero();
    }
    if rows == 0 {
        return MultiPoly::one();
    }
    let max_index = lambda.parts()[0] + rows as u32;
    let h = complete_upto(max_index, &root_polys(m));
    let entry = |i: usize, j: usize| -> MultiPoly {
        let idx = lambda.parts()[i] as i64 - i as i64 + j as i64;
        if idx < 0 {
            MultiPoly::zero()
        } else {
            h[idx as usize].clone()
        }
    };
    let matrix: Vec<Vec<MultiPoly>> = (0..rows).map(|i| (0..rows).map(|j| entry(i, j)).collect()).collect();
    determinant(&matrix)
}

/// Cofactor expansion along the first row.
pub fn determinant(matrix: &[Vec<MultiPoly>]) -> MultiPoly {
    let n = matrix.len();
    let cols: Vec<usize> = (0..n).collect();
    minor(matrix, 0, &cols)
}

fn minor(matrix: &[Vec<MultiPoly>], row: usize, cols: &[usize]) -> MultiPoly {
    if cols.is_empty() {
        return MultiPoly::one();
    }
    let mut acc = MultiPoly::zero();
    for (pos, &c) in cols.iter().enumerate() {
        let entry = &matrix[row][c];
        if entry.is_zero() {
            continue;
        }
        let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
        let term = entry * &minor(matrix, row + 1, &rest);
        if pos % 2 == 0 {
            acc += &term;
        } else {
            acc -= &term;
        }
    }
    acc
}
