//! Internal dense linear algebra helpers.
//!
//! Operators are stored as complex matrices, but every built-in model
//! Hamiltonian (and every Pauli string with an even number of Y factors) is
//! real in the computational basis. Eigenbases and transformed observables
//! therefore carry a [`CMat`] that keeps the real representation when one
//! exists; the real path is roughly an order of magnitude faster through the
//! eigensolver and matmul, which is what makes 12-site chains practical here.

use faer::complex_native::c64;
use faer::{Mat, MatRef};

pub(crate) const ZERO: c64 = c64 { re: 0.0, im: 0.0 };

#[inline]
pub(crate) fn cj(z: c64) -> c64 {
    c64::new(z.re, -z.im)
}

#[inline]
pub(crate) fn cabs2(z: c64) -> f64 {
    z.re * z.re + z.im * z.im
}

pub(crate) fn max_abs_entry(m: MatRef<'_, c64>) -> f64 {
    let mut best = 0.0f64;
    for j in 0..m.ncols() {
        for i in 0..m.nrows() {
            best = best.max(cabs2(m[(i, j)]).sqrt());
        }
    }
    best
}

/// Largest entrywise deviation from `M = M^H`.
pub(crate) fn hermiticity_error(m: MatRef<'_, c64>) -> f64 {
    let n = m.nrows();
    let mut worst = 0.0f64;
    for j in 0..n {
        for i in 0..=j {
            let d = m[(i, j)] - cj(m[(j, i)]);
            worst = worst.max(cabs2(d).sqrt());
        }
    }
    worst
}

pub(crate) fn frobenius_c(m: MatRef<'_, c64>) -> f64 {
    let mut s = 0.0;
    for j in 0..m.ncols() {
        for i in 0..m.nrows() {
            s += cabs2(m[(i, j)]);
        }
    }
    s.sqrt()
}

/// Real copy of `m` if every imaginary part is below `tol`, else `None`.
pub(crate) fn as_real(m: MatRef<'_, c64>, tol: f64) -> Option<Mat<f64>> {
    for j in 0..m.ncols() {
        for i in 0..m.nrows() {
            if m[(i, j)].im.abs() > tol {
                return None;
            }
        }
    }
    Some(Mat::from_fn(m.nrows(), m.ncols(), |i, j| m[(i, j)].re))
}

pub(crate) fn to_complex(m: MatRef<'_, f64>) -> Mat<c64> {
    Mat::from_fn(m.nrows(), m.ncols(), |i, j| c64::new(m[(i, j)], 0.0))
}

/// Dense matrix stored real whenever its entries are real.
#[derive(Clone, Debug)]
pub enum CMat {
    Real(Mat<f64>),
    Complex(Mat<c64>),
}

impl CMat {
    pub fn nrows(&self) -> usize {
        match self {
            CMat::Real(m) => m.nrows(),
            CMat::Complex(m) => m.nrows(),
        }
    }

    pub fn ncols(&self) -> usize {
        match self {
            CMat::Real(m) => m.ncols(),
            CMat::Complex(m) => m.ncols(),
        }
    }

    pub fn get(&self, i: usize, j: usize) -> c64 {
        match self {
            CMat::Real(m) => c64::new(m[(i, j)], 0.0),
            CMat::Complex(m) => m[(i, j)],
        }
    }

    pub fn to_complex(&self) -> Mat<c64> {
        match self {
            CMat::Real(m) => to_complex(m.as_ref()),
            CMat::Complex(m) => m.clone(),
        }
    }

    /// `self^H * rhs`, staying real when both factors are real.
    pub(crate) fn adjoint_mul(&self, rhs: &CMat) -> CMat {
        match (self, rhs) {
            (CMat::Real(a), CMat::Real(b)) => CMat::Real(a.transpose() * b),
            _ => {
                let a = self.to_complex();
                let b = rhs.to_complex();
                CMat::Complex(a.adjoint() * b)
            }
        }
    }

    /// Scale column `j` by a real factor, in place.
    pub(crate) fn scale_col(&mut self, j: usize, s: f64) {
        match self {
            CMat::Real(m) => {
                for i in 0..m.nrows() {
                    m[(i, j)] *= s;
                }
            }
            CMat::Complex(m) => {
                for i in 0..m.nrows() {
                    let v = m[(i, j)];
                    m[(i, j)] = c64::new(v.re * s, v.im * s);
                }
            }
        }
    }

    /// Σ_j w_j v_j v_j^H as a complex matrix.
    pub(crate) fn weighted_gram(&self, weights: &[f64]) -> Mat<c64> {
        assert_eq!(self.ncols(), weights.len());
        let mut scaled = self.clone();
        for (j, w) in weights.iter().enumerate() {
            scaled.scale_col(j, w.max(0.0).sqrt());
        }
        match scaled {
            CMat::Real(s) => to_complex((&s * s.transpose()).as_ref()),
            CMat::Complex(s) => &s * s.adjoint(),
        }
    }

    /// Largest deviation of `self^H self` from the identity.
    pub(crate) fn orthonormality_error(&self) -> f64 {
        let g = self.adjoint_mul(self);
        let r = g.ncols();
        let mut worst = 0.0f64;
        for j in 0..r {
            for i in 0..r {
                let expected = if i == j { 1.0 } else { 0.0 };
                let d = g.get(i, j) - c64::new(expected, 0.0);
                worst = worst.max(cabs2(d).sqrt());
            }
        }
        worst
    }
}

/// Action of a Pauli string on computational-basis indices.
///
/// Site `j` of an `n`-site register occupies bit `n-1-j`, so basis index
/// `b` reads as the ket `|q_0 q_1 … q_{n-1}⟩`. A string is a signed
/// permutation: column `c` maps to row `c ^ flip` with entry
/// `unit · (-1)^{popcount(c & sign)}`.
#[derive(Clone, Debug)]
pub(crate) struct PauliAction {
    pub dim: usize,
    pub flip: usize,
    pub sign: usize,
    /// `i^(#Y factors)`; real iff the Y count is even.
    pub unit: c64,
}

impl PauliAction {
    pub(crate) fn new(n: usize, sites: &[(usize, crate::operators::Axis)]) -> Self {
        use crate::operators::Axis;
        let mut flip = 0usize;
        let mut sign = 0usize;
        let mut y_count = 0u32;
        for &(site, axis) in sites {
            let bit = 1usize << (n - 1 - site);
            match axis {
                Axis::X => flip |= bit,
                Axis::Y => {
                    flip |= bit;
                    sign |= bit;
                    y_count += 1;
                }
                Axis::Z => sign |= bit,
            }
        }
        let unit = match y_count % 4 {
            0 => c64::new(1.0, 0.0),
            1 => c64::new(0.0, 1.0),
            2 => c64::new(-1.0, 0.0),
            _ => c64::new(0.0, -1.0),
        };
        PauliAction { dim: 1usize << n, flip, sign, unit }
    }

    #[inline]
    pub(crate) fn entry_sign(&self, col: usize) -> f64 {
        if (col & self.sign).count_ones() % 2 == 0 {
            1.0
        } else {
            -1.0
        }
    }

    pub(crate) fn is_real(&self) -> bool {
        self.unit.im == 0.0
    }

    pub(crate) fn to_matrix(&self) -> Mat<c64> {
        let mut m = Mat::<c64>::zeros(self.dim, self.dim);
        for c in 0..self.dim {
            let v = self.entry_sign(c);
            m[(c ^ self.flip, c)] = c64::new(self.unit.re * v, self.unit.im * v);
        }
        m
    }

    /// `P * m` using the signed-permutation structure (O(d·r) instead of a gemm).
    pub(crate) fn apply_left(&self, m: &CMat) -> CMat {
        let (d, r) = (m.nrows(), m.ncols());
        assert_eq!(d, self.dim);
        match (m, self.is_real()) {
            (CMat::Real(src), true) => {
                let u = self.unit.re;
                let mut out = Mat::<f64>::zeros(d, r);
                for j in 0..r {
                    for c in 0..d {
                        out[(c ^ self.flip, j)] = u * self.entry_sign(c) * src[(c, j)];
                    }
                }
                CMat::Real(out)
            }
            _ => {
                let src = m.to_complex();
                let mut out = Mat::<c64>::zeros(d, r);
                for j in 0..r {
                    for c in 0..d {
                        let s = self.entry_sign(c);
                        let v = src[(c, j)];
                        out[(c ^ self.flip, j)] = c64::new(
                            s * (self.unit.re * v.re - self.unit.im * v.im),
                            s * (self.unit.re * v.im + self.unit.im * v.re),
                        );
                    }
                }
                CMat::Complex(out)
            }
        }
    }

    /// Diagonal matrix element ⟨v|P|v⟩ for column `j` of `basis`.
    pub(crate) fn diag_element(&self, basis: &CMat, j: usize) -> c64 {
        let d = basis.nrows();
        let mut acc = ZERO;
        match basis {
            CMat::Real(b) => {
                let mut re = 0.0;
                for c in 0..d {
                    re += b[(c ^ self.flip, j)] * self.entry_sign(c) * b[(c, j)];
                }
                acc = c64::new(self.unit.re * re, self.unit.im * re);
            }
            CMat::Complex(b) => {
                for c in 0..d {
                    let v = cj(b[(c ^ self.flip, j)]) * b[(c, j)];
                    let s = self.entry_sign(c);
                    acc = acc + c64::new(s * v.re, s * v.im);
                }
                acc = c64::new(
                    self.unit.re * acc.re - self.unit.im * acc.im,
                    self.unit.re * acc.im + self.unit.im * acc.re,
                );
            }
        }
        acc
    }
}

/// `basis^H · op · basis` with the real fast path when possible.
pub(crate) fn conj_transform(basis: &CMat, op: MatRef<'_, c64>) -> CMat {
    match basis {
        CMat::Real(b) => {
            if let Some(opr) = as_real(op, 0.0) {
                let t = &opr * b;
                return CMat::Real(b.transpose() * t);
            }
            let bc = to_complex(b.as_ref());
            let t = op * &bc;
            CMat::Complex(bc.adjoint() * t)
        }
        CMat::Complex(b) => {
            let t = op * b;
            CMat::Complex(b.adjoint() * t)
        }
    }
}

/// `basis^H · P · basis` for a Pauli string, skipping the first gemm.
pub(crate) fn conj_transform_pauli(basis: &CMat, p: &PauliAction) -> CMat {
    let pb = p.apply_left(basis);
    basis.adjoint_mul(&pb)
}

/// Partial trace over the complement of `keep` (sorted ascending site ids).
///
/// The output register relabels the kept sites 0,1,… in ascending order of
/// their original index.
pub(crate) fn partial_trace_mat(m: MatRef<'_, c64>, n: usize, keep: &[usize]) -> Mat<c64> {
    let k = keep.len();
    let traced: Vec<usize> = (0..n).filter(|s| !keep.contains(s)).collect();
    let keep_shift: Vec<u32> = keep.iter().map(|&s| (n - 1 - s) as u32).collect();
    let tr_shift: Vec<u32> = traced.iter().map(|&s| (n - 1 - s) as u32).collect();
    let d_out = 1usize << k;
    let d_tr = 1usize << traced.len();

    let scatter = |bits: usize, shifts: &[u32], width: usize| -> usize {
        let mut out = 0usize;
        for (i, &sh) in shifts.iter().enumerate() {
            if bits >> (width - 1 - i) & 1 == 1 {
                out |= 1usize << sh;
            }
        }
        out
    };

    let mut out = Mat::<c64>::zeros(d_out, d_out);
    for a in 0..d_out {
        let abase = scatter(a, &keep_shift, k);
        for b in 0..d_out {
            let bbase = scatter(b, &keep_shift, k);
            let mut acc = ZERO;
            for t in 0..d_tr {
                let tb = scatter(t, &tr_shift, traced.len());
                acc = acc + m[(abase | tb, bbase | tb)];
            }
            out[(a, b)] = acc;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::operators::Axis;

    #[test]
    fn pauli_action_matches_kronecker_single_y() {
        let p = PauliAction::new(1, &[(0, Axis::Y)]);
        let m = p.to_matrix();
        assert_eq!(m[(1, 0)], c64::new(0.0, 1.0));
        assert_eq!(m[(0, 1)], c64::new(0.0, -1.0));
        assert!(!p.is_real());
    }

    #[test]
    fn pauli_action_zx_is_real() {
        let p = PauliAction::new(2, &[(0, Axis::Z), (1, Axis::X)]);
        assert!(p.is_real());
        let m = p.to_matrix();
        // Z⊗X: |00⟩ -> |01⟩ with +1, |10⟩ -> |11⟩ with -1.
        assert_eq!(m[(0b01, 0b00)], c64::new(1.0, 0.0));
        assert_eq!(m[(0b11, 0b10)], c64::new(-1.0, 0.0));
    }

    #[test]
    fn partial_trace_of_kron_product() {
        // m = a ⊗ b on 2 sites; tracing site 1 leaves tr(b)·a.
        let a = [[1.0, 2.0], [3.0, 4.0]];
        let b = [[5.0, 6.0], [7.0, 8.0]];
        let mut m = Mat::<c64>::zeros(4, 4);
        for i in 0..2 {
            for j in 0..2 {
                for k in 0..2 {
                    for l in 0..2 {
                        m[(2 * i + k, 2 * j + l)] = c64::new(a[i][j] * b[k][l], 0.0);
                    }
                }
            }
        }
        let t = partial_trace_mat(m.as_ref(), 2, &[0]);
        let trb = 13.0;
        for i in 0..2 {
            for j in 0..2 {
                assert!((t[(i, j)].re - trb * a[i][j]).abs() < 1e-12);
                assert!(t[(i, j)].im.abs() < 1e-12);
            }
        }
    }
}
