//! Graph matrices and a dense cyclic Jacobi eigensolver.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Off-diagonal Frobenius norm at which the Jacobi iteration stops,
/// relative to the Frobenius norm of the input.
pub const JACOBI_RELATIVE_OFF_NORM: f64 = 1e-12;
pub const JACOBI_MAX_SWEEPS: usize = 100;
/// Default eigenvalue tolerance, scaled by `max(1, spectral radius bound)`.
pub const DEFAULT_RELATIVE_TOL: f64 = 1e-8;

/// Which graph matrix to build.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum MatrixKind {
    /// Adjacency matrix `A`.
    A,
    /// Laplacian `D - A`.
    L,
    /// Signless Laplacian `D + A`.
    Q,
}

impl fmt::Display for MatrixKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            MatrixKind::A => "A",
            MatrixKind::L => "L",
            MatrixKind::Q => "Q",
        })
    }
}

impl std::str::FromStr for MatrixKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "A" | "a" => Ok(MatrixKind::A),
            "L" | "l" => Ok(MatrixKind::L),
            "Q" | "q" => Ok(MatrixKind::Q),
            other => Err(Error::Parse(format!("unknown matrix kind {other:?}"))),
        }
    }
}

/// Dense real symmetric matrix, stored in full row-major order.
#[derive(Debug, Clone, PartialEq)]
pub struct SymMatrix {
    order: usize,
    data: Vec<f64>,
}

impl SymMatrix {
    /// Builds from rows; rejects non-square or asymmetric input.
    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self> {
        let order = rows.len();
        if order == 0 {
            return Err(Error::param("matrix order must be at least 1"));
        }
        let mut data = Vec::with_capacity(order * order);
        for row in rows {
            if row.len() != order {
                return Err(Error::param("matrix is not square"));
            }
            data.extend_from_slice(row);
        }
        let m = SymMatrix { order, data };
        for i in 0..order {
            for j in 0..i {
                let (a, b) = (m.get(i, j), m.get(j, i));
                // NaN fails this comparison too and is reported by `spectrum`.
                if a != b && a.is_finite() && b.is_finite() {
                    return Err(Error::param(format!("matrix is not symmetric at ({i}, {j})")));
                }
            }
        }
        Ok(m)
    }

    pub fn diagonal_from(values: &[f64]) -> Result<Self> {
        let rows: Vec<Vec<f64>> = (0..values.len())
            .map(|i| {
                let mut r = vec![0.0; values.len()];
                r[i] = values[i];
                r
            })
            .collect();
        SymMatrix::from_rows(&rows)
    }

    pub fn from_graph(g: &Graph, kind: MatrixKind) -> Self {
        let n = g.order();
        let mut data = vec![0.0; n * n];
        let off = match kind {
            MatrixKind::L => -1.0,
            _ => 1.0,
        };
        for v in 0..n {
            let mut deg = 0;
            for w in g.neighbors(v) {
                data[v * n + w] = off;
                deg += 1;
            }
            if kind != MatrixKind::A {
                data[v * n + v] = deg as f64;
            }
        }
        SymMatrix { order: n, data }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.order + j]
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.data[i * self.order..(i + 1) * self.order]
    }

    pub fn diagonal(&self) -> Vec<f64> {
        (0..self.order).map(|i| self.get(i, i)).collect()
    }

    pub fn trace(&self) -> f64 {
        self.diagonal().iter().sum()
    }

    /// Gershgorin bound on the spectral radius: the largest absolute row sum.
    pub fn gershgorin_radius(&self) -> f64 {
        (0..self.order)
            .map(|i| self.row(i).iter().map(|x| x.abs()).sum::<f64>())
            .fold(0.0, f64::max)
    }

    /// Default absolute tolerance for eigenvalue comparisons on this matrix.
    pub fn default_tol(&self) -> f64 {
        DEFAULT_RELATIVE_TOL * self.gershgorin_radius().max(1.0)
    }

    /// `self * x`.
    pub fn mul_vec(&self, x: &[f64]) -> Vec<f64> {
        (0..self.order)
            .map(|i| self.row(i).iter().zip(x).map(|(a, b)| a * b).sum())
            .collect()
    }
}

impl fmt::Display for SymMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.order {
            let row: Vec<String> = self.row(i).iter().map(|x| format!("{x}")).collect();
            writeln!(f, "{}", row.join(" "))?;
        }
        Ok(())
    }
}

pub fn adjacency(g: &Graph) -> SymMatrix {
    SymMatrix::from_graph(g, MatrixKind::A)
}

pub fn laplacian(g: &Graph) -> SymMatrix {
    SymMatrix::from_graph(g, MatrixKind::L)
}

pub fn signless_laplacian(g: &Graph) -> SymMatrix {
    SymMatrix::from_graph(g, MatrixKind::Q)
}

/// Eigenvalues sorted non-increasing, with the tolerance used to compare them.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Spectrum {
    values: Vec<f64>,
    tol: f64,
}

impl Spectrum {
    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn tol(&self) -> f64 {
        self.tol
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// The `i`-th largest eigenvalue, 1-based.
    pub fn nth(&self, i: usize) -> Option<f64> {
        i.checked_sub(1).and_then(|i| self.values.get(i)).copied()
    }

    pub fn largest(&self) -> f64 {
        self.values[0]
    }

    pub fn smallest(&self) -> f64 {
        *self.values.last().unwrap()
    }

    pub fn sum(&self) -> f64 {
        self.values.iter().sum()
    }

    /// Sum of the `k` largest eigenvalues.
    pub fn kyfan_sum(&self, k: usize) -> Result<f64> {
        if k == 0 || k > self.values.len() {
            return Err(Error::param(format!(
                "k = {k} outside 1..={}",
                self.values.len()
            )));
        }
        Ok(self.values[..k].iter().sum())
    }

    /// Number of eigenvalues within `tol` of `x`.
    pub fn multiplicity(&self, x: f64) -> usize {
        self.values.iter().filter(|v| (*v - x).abs() <= self.tol).count()
    }
}

/// Computes every eigenvalue of `m`. `tol` defaults to
/// [`SymMatrix::default_tol`].
pub fn spectrum(m: &SymMatrix, tol: Option<f64>) -> Result<Spectrum> {
    if let Some(pos) = m.data.iter().position(|x| !x.is_finite()) {
        return Err(Error::NumericInput {
            row: pos / m.order,
            col: pos % m.order,
        });
    }
    let mut values = jacobi_eigenvalues(m.data.clone(), m.order)?;
    values.sort_by(|a, b| b.total_cmp(a));
    Ok(Spectrum {
        values,
        tol: tol.unwrap_or_else(|| m.default_tol()),
    })
}

/// Spectrum of the chosen graph matrix.
pub fn graph_spectrum(g: &Graph, kind: MatrixKind, tol: Option<f64>) -> Result<Spectrum> {
    spectrum(&SymMatrix::from_graph(g, kind), tol)
}

/// Cyclic Jacobi rotations on a full row-major copy; returns the diagonal.
fn jacobi_eigenvalues(mut a: Vec<f64>, n: usize) -> Result<Vec<f64>> {
    let frob: f64 = a.iter().map(|x| x * x).sum::<f64>().sqrt();
    let target = JACOBI_RELATIVE_OFF_NORM * frob;
    let off_norm = |a: &[f64]| -> f64 {
        let mut s = 0.0;
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    s += a[i * n + j] * a[i * n + j];
                }
            }
        }
        s.sqrt()
    };

    let mut sweeps = 0;
    while off_norm(&a) > target {
        if sweeps == JACOBI_MAX_SWEEPS {
            return Err(Error::NoConvergence(sweeps));
        }
        sweeps += 1;
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = a[p * n + q];
                if apq == 0.0 {
                    continue;
                }
                let app = a[p * n + p];
                let aqq = a[q * n + q];
                let theta = (aqq - app) / (2.0 * apq);
                let t = if theta.abs() > 1e150 {
                    0.5 / theta
                } else {
                    theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt())
                };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;

                a[p * n + p] = app - t * apq;
                a[q * n + q] = aqq + t * apq;
                a[p * n + q] = 0.0;
                a[q * n + p] = 0.0;
                for r in 0..n {
                    if r == p || r == q {
                        continue;
                    }
                    let arp = a[r * n + p];
                    let arq = a[r * n + q];
                    let new_rp = c * arp - s * arq;
                    let new_rq = s * arp + c * arq;
                    a[r * n + p] = new_rp;
                    a[p * n + r] = new_rp;
                    a[r * n + q] = new_rq;
                    a[q * n + r] = new_rq;
                }
            }
        }
    }
    Ok((0..n).map(|i| a[i * n + i]).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    fn close(a: &[f64], b: &[f64], tol: f64) -> bool {
        a.len() == b.len() && a.iter().zip(b).all(|(x, y)| (x - y).abs() <= tol)
    }

    #[test]
    fn matrices_of_k2() {
        let k2 = families::complete(2).unwrap();
        assert_eq!(adjacency(&k2).row(0), &[0.0, 1.0]);
        assert_eq!(laplacian(&k2).row(0), &[1.0, -1.0]);
        assert_eq!(signless_laplacian(&k2).row(1), &[1.0, 1.0]);
    }

    #[test]
    fn signless_laplacian_of_triangle() {
        let q = signless_laplacian(&families::complete(3).unwrap());
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(q.get(i, j), if i == j { 2.0 } else { 1.0 });
            }
        }
    }

    #[test]
    fn laplacian_rows_sum_to_zero() {
        let l = laplacian(&families::star(5).unwrap());
        for i in 0..5 {
            assert_eq!(l.row(i).iter().sum::<f64>(), 0.0);
        }
        assert_eq!(l.trace(), 8.0);
        let q = signless_laplacian(&families::star(5).unwrap());
        assert_eq!(q.diagonal(), vec![4.0, 1.0, 1.0, 1.0, 1.0]);
    }

    #[test]
    fn empty_graph_matrices_are_zero() {
        let g = Graph::empty(3).unwrap();
        let a = adjacency(&g);
        assert!((0..3).all(|i| a.row(i).iter().all(|&x| x == 0.0)));
        let sp = spectrum(&a, None).unwrap();
        assert_eq!(sp.values(), &[0.0, 0.0, 0.0]);
    }

    #[test]
    fn triangle_signless_spectrum() {
        let sp = graph_spectrum(&families::complete(3).unwrap(), MatrixKind::Q, None).unwrap();
        assert!(close(sp.values(), &[4.0, 1.0, 1.0], 1e-12));
        assert!((sp.kyfan_sum(2).unwrap() - 5.0).abs() < 1e-12);
    }

    #[test]
    fn two_by_two_closed_form() {
        let m = SymMatrix::from_rows(&[vec![2.0, 3.0], vec![3.0, -1.0]]).unwrap();
        let sp = spectrum(&m, None).unwrap();
        let mid = 0.5;
        let rad = (1.5f64 * 1.5 + 9.0).sqrt();
        assert!(close(sp.values(), &[mid + rad, mid - rad], 1e-12));
    }

    #[test]
    fn kyfan_range() {
        let sp = graph_spectrum(&families::path(4).unwrap(), MatrixKind::Q, None).unwrap();
        assert!(sp.kyfan_sum(0).is_err());
        assert!(sp.kyfan_sum(5).is_err());
        assert!((sp.kyfan_sum(4).unwrap() - 6.0).abs() < 1e-10);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(SymMatrix::from_rows(&[vec![1.0, 2.0], vec![3.0, 1.0]]).is_err());
        assert!(SymMatrix::from_rows(&[vec![1.0, 2.0]]).is_err());
        let m = SymMatrix::from_rows(&[vec![f64::NAN, 0.0], vec![0.0, 1.0]]).unwrap();
        assert!(matches!(spectrum(&m, None), Err(Error::NumericInput { row: 0, col: 0 })));
        let m = SymMatrix::from_rows(&[vec![1.0, f64::INFINITY], vec![f64::INFINITY, 1.0]]).unwrap();
        assert!(matches!(spectrum(&m, None), Err(Error::NumericInput { .. })));
    }

    #[test]
    fn deterministic_output() {
        let g = families::star_plus_edge(9).unwrap();
        let a = graph_spectrum(&g, MatrixKind::Q, None).unwrap();
        let b = graph_spectrum(&g, MatrixKind::Q, None).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn default_tol_scales_with_radius() {
        let q = signless_laplacian(&families::star(11).unwrap());
        assert!((q.default_tol() - 20.0 * DEFAULT_RELATIVE_TOL).abs() < 1e-20);
        let a = adjacency(&Graph::empty(2).unwrap());
        assert_eq!(a.default_tol(), DEFAULT_RELATIVE_TOL);
    }
}
