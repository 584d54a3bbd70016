//! Dense complex linear algebra over tensor-product Hilbert spaces.
//!
//! Site 1 is the leftmost (most significant) tensor factor, so on qubits the
//! computational basis index is read as a big-endian bit string. All values
//! are immutable after construction and every operation is a pure function.

use nalgebra::{DMatrix, DVector};
use num_complex::Complex;

use crate::{Error, Result};

pub type C64 = Complex<f64>;

pub const ZERO: C64 = Complex::new(0.0, 0.0);
pub const ONE: C64 = Complex::new(1.0, 0.0);

/// Default relative eigenvalue cutoff separating support from kernel.
pub const SUPPORT_TOL: f64 = 1e-9;
/// Absolute eigenvalue cutoff used by subspace intersection.
pub const INTERSECT_TOL: f64 = 1e-9;

const HERMITICITY_TOL: f64 = 1e-12;

/// Local dimensions of the subsystems making up the full Hilbert space.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DimensionProfile {
    local_dims: Vec<usize>,
    total_dim: usize,
}

impl DimensionProfile {
    pub fn new(local_dims: Vec<usize>) -> Result<Self> {
        if local_dims.is_empty() {
            return Err(Error::DimensionMismatch("empty dimension list".into()));
        }
        if let Some(&d) = local_dims.iter().find(|&&d| d < 2) {
            return Err(Error::DimensionMismatch(format!(
                "local dimension {d} < 2"
            )));
        }
        let total_dim = local_dims.iter().product();
        Ok(Self {
            local_dims,
            total_dim,
        })
    }

    pub fn qubits(n: usize) -> Self {
        Self::new(vec![2; n]).expect("n >= 1 qubits")
    }

    pub fn n_subsystems(&self) -> usize {
        self.local_dims.len()
    }

    pub fn total_dim(&self) -> usize {
        self.total_dim
    }

    pub fn local_dims(&self) -> &[usize] {
        &self.local_dims
    }

    /// Local dimension of a 1-based site.
    pub fn dim_of(&self, site: usize) -> usize {
        self.local_dims[site - 1]
    }

    pub fn is_all_qubit(&self) -> bool {
        self.local_dims.iter().all(|&d| d == 2)
    }

    /// Stride of each site in the flattened basis index (site 1 leftmost).
    pub fn strides(&self) -> Vec<usize> {
        let n = self.local_dims.len();
        let mut s = vec![1usize; n];
        for a in (0..n.saturating_sub(1)).rev() {
            s[a] = s[a + 1] * self.local_dims[a + 1];
        }
        s
    }

    fn check_sites(&self, sites: &[usize]) -> Result<()> {
        let n = self.n_subsystems();
        let mut seen = vec![false; n + 1];
        for &s in sites {
            if s == 0 || s > n {
                return Err(Error::IndexOutOfRange(format!("site {s} of {n}")));
            }
            if seen[s] {
                return Err(Error::DuplicateIndex(s));
            }
            seen[s] = true;
        }
        Ok(())
    }

    /// Profile of the tensor factor spanned by the given sites (ascending).
    pub fn sub_profile(&self, sites: &[usize]) -> Result<DimensionProfile> {
        self.check_sites(sites)?;
        let mut sorted: Vec<usize> = sites.to_vec();
        sorted.sort_unstable();
        DimensionProfile::new(sorted.iter().map(|&s| self.dim_of(s)).collect())
    }
}

/// A (possibly unnormalized) state vector over a dimension profile.
#[derive(Debug, Clone)]
pub struct Ket {
    amplitudes: DVector<C64>,
    profile: DimensionProfile,
}

impl Ket {
    pub fn new(amplitudes: DVector<C64>, profile: DimensionProfile) -> Result<Self> {
        if amplitudes.len() != profile.total_dim() {
            return Err(Error::DimensionMismatch(format!(
                "amplitude length {} vs total dimension {}",
                amplitudes.len(),
                profile.total_dim()
            )));
        }
        Ok(Self {
            amplitudes,
            profile,
        })
    }

    /// Computational-basis ket of an all-qubit register with `|1>` at the
    /// listed 1-based sites and `|0>` elsewhere.
    pub fn basis(excitations: &[usize], n_qubits: usize) -> Result<Self> {
        let profile = DimensionProfile::qubits(n_qubits);
        profile.check_sites(excitations)?;
        let strides = profile.strides();
        let mut idx = 0usize;
        for &site in excitations {
            idx += strides[site - 1];
        }
        let mut amps = DVector::zeros(profile.total_dim());
        amps[idx] = ONE;
        Ok(Self {
            amplitudes: amps,
            profile,
        })
    }

    pub fn amplitudes(&self) -> &DVector<C64> {
        &self.amplitudes
    }

    pub fn profile(&self) -> &DimensionProfile {
        &self.profile
    }

    pub fn norm(&self) -> f64 {
        self.amplitudes.norm()
    }

    pub fn normalized(&self) -> Result<Self> {
        let n = self.norm();
        if n == 0.0 {
            return Err(Error::InvalidCoefficients("cannot normalize zero ket".into()));
        }
        Ok(Self {
            amplitudes: &self.amplitudes / Complex::new(n, 0.0),
            profile: self.profile.clone(),
        })
    }

    pub fn dot(&self, other: &Ket) -> C64 {
        self.amplitudes.dotc(&other.amplitudes)
    }

    /// Rank-one density operator `|psi><psi|`.
    pub fn projector(&self) -> DenseOperator {
        let d = self.amplitudes.len();
        let mut m = DMatrix::zeros(d, d);
        for i in 0..d {
            for j in 0..d {
                m[(i, j)] = self.amplitudes[i] * self.amplitudes[j].conj();
            }
        }
        DenseOperator {
            entries: m,
            profile: self.profile.clone(),
            hermitian: true,
        }
    }

    /// Excitation number (popcount) of each basis index; qubit profiles only.
    pub fn excitation_of_index(profile: &DimensionProfile, idx: usize) -> usize {
        debug_assert!(profile.is_all_qubit());
        let n = profile.n_subsystems();
        (0..n).map(|a| (idx >> (n - 1 - a)) & 1).sum()
    }
}

/// A dense operator over a dimension profile.
#[derive(Debug, Clone)]
pub struct DenseOperator {
    entries: DMatrix<C64>,
    profile: DimensionProfile,
    hermitian: bool,
}

impl DenseOperator {
    pub fn new(entries: DMatrix<C64>, profile: DimensionProfile) -> Result<Self> {
        Self::check_shape(&entries, &profile)?;
        Ok(Self {
            entries,
            profile,
            hermitian: false,
        })
    }

    /// Construct with the Hermitian flag set; rejects non-Hermitian input.
    pub fn new_hermitian(entries: DMatrix<C64>, profile: DimensionProfile) -> Result<Self> {
        Self::check_shape(&entries, &profile)?;
        let dev = hermiticity_deviation(&entries);
        let scale = entries.iter().map(|c| c.norm()).fold(0.0_f64, f64::max);
        if dev > HERMITICITY_TOL * scale.max(1.0) {
            return Err(Error::NotHermitian(dev));
        }
        Ok(Self {
            entries,
            profile,
            hermitian: true,
        })
    }

    pub fn zeros(profile: DimensionProfile) -> Self {
        let d = profile.total_dim();
        Self {
            entries: DMatrix::zeros(d, d),
            profile,
            hermitian: true,
        }
    }

    pub fn identity(profile: DimensionProfile) -> Self {
        let d = profile.total_dim();
        Self {
            entries: DMatrix::identity(d, d),
            profile,
            hermitian: true,
        }
    }

    fn check_shape(entries: &DMatrix<C64>, profile: &DimensionProfile) -> Result<()> {
        let d = profile.total_dim();
        if entries.nrows() != d || entries.ncols() != d {
            return Err(Error::DimensionMismatch(format!(
                "matrix {}x{} vs total dimension {}",
                entries.nrows(),
                entries.ncols(),
                d
            )));
        }
        Ok(())
    }

    pub fn entries(&self) -> &DMatrix<C64> {
        &self.entries
    }

    pub fn profile(&self) -> &DimensionProfile {
        &self.profile
    }

    pub fn is_hermitian_flagged(&self) -> bool {
        self.hermitian
    }

    pub fn trace(&self) -> C64 {
        self.entries.trace()
    }

    pub fn dim(&self) -> usize {
        self.entries.nrows()
    }

    /// Hilbert-Schmidt inner product `tr(self^dagger other)`.
    pub fn hs_dot(&self, other: &DenseOperator) -> C64 {
        let mut acc = ZERO;
        for j in 0..self.entries.ncols() {
            for i in 0..self.entries.nrows() {
                acc += self.entries[(i, j)].conj() * other.entries[(i, j)];
            }
        }
        acc
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.entries.norm()
    }

    pub fn max_abs(&self) -> f64 {
        self.entries.iter().map(|c| c.norm()).fold(0.0, f64::max)
    }

    pub fn scale(&self, s: C64) -> DenseOperator {
        DenseOperator {
            entries: &self.entries * s,
            profile: self.profile.clone(),
            hermitian: self.hermitian && s.im == 0.0,
        }
    }

    pub fn add(&self, other: &DenseOperator) -> Result<DenseOperator> {
        if self.profile != other.profile {
            return Err(Error::DimensionMismatch("operator sum".into()));
        }
        Ok(DenseOperator {
            entries: &self.entries + &other.entries,
            profile: self.profile.clone(),
            hermitian: self.hermitian && other.hermitian,
        })
    }

    pub fn sub(&self, other: &DenseOperator) -> Result<DenseOperator> {
        Ok(self.add(&other.scale(-ONE))?)
    }

    pub fn matmul(&self, other: &DenseOperator) -> Result<DenseOperator> {
        if self.profile != other.profile {
            return Err(Error::DimensionMismatch("operator product".into()));
        }
        Ok(DenseOperator {
            entries: &self.entries * &other.entries,
            profile: self.profile.clone(),
            hermitian: false,
        })
    }

    pub fn adjoint(&self) -> DenseOperator {
        DenseOperator {
            entries: self.entries.adjoint(),
            profile: self.profile.clone(),
            hermitian: self.hermitian,
        }
    }

    pub fn apply(&self, ket: &Ket) -> Result<Ket> {
        if self.profile != *ket.profile() {
            return Err(Error::DimensionMismatch("operator application".into()));
        }
        Ket::new(&self.entries * ket.amplitudes(), self.profile.clone())
    }

    /// Expectation `<psi| self |psi>`.
    pub fn expectation(&self, ket: &Ket) -> Result<C64> {
        let applied = self.apply(ket)?;
        Ok(ket.dot(&applied))
    }

    /// Re-tag as Hermitian after verifying the deviation is at tolerance.
    pub fn into_hermitian(mut self) -> Result<DenseOperator> {
        let dev = hermiticity_deviation(&self.entries);
        let scale = self.max_abs();
        if dev > HERMITICITY_TOL * scale.max(1.0) {
            return Err(Error::NotHermitian(dev));
        }
        self.hermitian = true;
        Ok(self)
    }

    /// Partial trace onto the tensor factor of the kept 1-based sites.
    ///
    /// Trace and Hermiticity are preserved; the result lives on the kept
    /// sites in ascending order.
    pub fn partial_trace(&self, keep: &[usize]) -> Result<DenseOperator> {
        if keep.is_empty() {
            return Err(Error::IndexOutOfRange("empty keep set".into()));
        }
        self.profile.check_sites(keep)?;
        let mut kept: Vec<usize> = keep.to_vec();
        kept.sort_unstable();
        let out_profile = self.profile.sub_profile(&kept)?;
        let strides = self.profile.strides();
        let n = self.profile.n_subsystems();
        let traced: Vec<usize> = (1..=n).filter(|s| !kept.contains(s)).collect();

        let kept_strides: Vec<usize> = kept.iter().map(|&s| strides[s - 1]).collect();
        let kept_dims: Vec<usize> = kept.iter().map(|&s| self.profile.dim_of(s)).collect();
        let tr_strides: Vec<usize> = traced.iter().map(|&s| strides[s - 1]).collect();
        let tr_dims: Vec<usize> = traced.iter().map(|&s| self.profile.dim_of(s)).collect();

        let d_out = out_profile.total_dim();
        let kept_offsets = enumerate_offsets(&kept_dims, &kept_strides);
        let tr_offsets = enumerate_offsets(&tr_dims, &tr_strides);

        let mut out = DMatrix::zeros(d_out, d_out);
        for (i, &oi) in kept_offsets.iter().enumerate() {
            for (j, &oj) in kept_offsets.iter().enumerate() {
                let mut acc = ZERO;
                for &ok in &tr_offsets {
                    acc += self.entries[(oi + ok, oj + ok)];
                }
                out[(i, j)] = acc;
            }
        }
        Ok(DenseOperator {
            entries: out,
            profile: out_profile,
            hermitian: self.hermitian,
        })
    }

    /// Eigendecomposition of a Hermitian operator.
    ///
    /// Eigenvalues ascending; each eigenvector's largest-magnitude amplitude
    /// is made real positive so the output is deterministic for
    /// nondegenerate spectra.
    pub fn hermitian_eig(&self) -> Result<(DVector<f64>, DMatrix<C64>)> {
        if !self.hermitian {
            return Err(Error::NotHermitian(hermiticity_deviation(&self.entries)));
        }
        Ok(eigh(&self.entries))
    }

    /// Span of eigenvectors with eigenvalue above `tol * lambda_max`.
    ///
    /// The input must be positive semidefinite up to `-tol`; an absolute
    /// floor of 1e-12 applies when the spectrum vanishes.
    pub fn support(&self, tol: f64) -> Result<Subspace> {
        let (kept, _) = self.split_spectrum(tol)?;
        Ok(kept)
    }

    /// Orthogonal complement of the support.
    pub fn kernel(&self, tol: f64) -> Result<Subspace> {
        let (_, dropped) = self.split_spectrum(tol)?;
        Ok(dropped)
    }

    fn split_spectrum(&self, tol: f64) -> Result<(Subspace, Subspace)> {
        let (vals, vecs) = self.hermitian_eig()?;
        let lam_max = vals.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
        if let Some(&lam_min) = vals
            .iter()
            .find(|&&v| v < -tol * lam_max.max(1.0))
        {
            return Err(Error::NotPsd(lam_min));
        }
        let cutoff = if lam_max > 0.0 { tol * lam_max } else { 1e-12 };
        let d = vals.len();
        let sup_idx: Vec<usize> = (0..d).filter(|&i| vals[i] > cutoff).collect();
        let ker_idx: Vec<usize> = (0..d).filter(|&i| vals[i] <= cutoff).collect();
        let pick = |idx: &[usize]| -> Subspace {
            let mut basis = DMatrix::zeros(d, idx.len());
            for (c, &i) in idx.iter().enumerate() {
                basis.set_column(c, &vecs.column(i));
            }
            Subspace {
                basis,
                profile: self.profile.clone(),
            }
        };
        Ok((pick(&sup_idx), pick(&ker_idx)))
    }
}

fn hermiticity_deviation(m: &DMatrix<C64>) -> f64 {
    let mut dev = 0.0_f64;
    for i in 0..m.nrows() {
        for j in i..m.ncols() {
            dev = dev.max((m[(i, j)] - m[(j, i)].conj()).norm());
        }
    }
    dev
}

/// All index offsets of a digit list with the given strides, in row-major
/// (leftmost digit slowest) order.
fn enumerate_offsets(dims: &[usize], strides: &[usize]) -> Vec<usize> {
    let total: usize = dims.iter().product();
    let mut out = Vec::with_capacity(total.max(1));
    if dims.is_empty() {
        out.push(0);
        return out;
    }
    let mut digits = vec![0usize; dims.len()];
    loop {
        out.push(
            digits
                .iter()
                .zip(strides)
                .map(|(&d, &s)| d * s)
                .sum::<usize>(),
        );
        let mut k = dims.len();
        loop {
            if k == 0 {
                return out;
            }
            k -= 1;
            digits[k] += 1;
            if digits[k] < dims[k] {
                break;
            }
            digits[k] = 0;
        }
    }
}

/// Sorted Hermitian eigendecomposition with the phase convention applied.
pub fn eigh(m: &DMatrix<C64>) -> (DVector<f64>, DMatrix<C64>) {
    let d = m.nrows();
    let se = m.clone().symmetric_eigen();
    let mut order: Vec<usize> = (0..d).collect();
    order.sort_by(|&a, &b| se.eigenvalues[a].partial_cmp(&se.eigenvalues[b]).unwrap());
    let mut vals = DVector::zeros(d);
    let mut vecs = DMatrix::zeros(d, d);
    for (c, &i) in order.iter().enumerate() {
        vals[c] = se.eigenvalues[i];
        vecs.set_column(c, &se.eigenvectors.column(i));
    }
    fix_phases(&mut vecs);
    (vals, vecs)
}

/// Rotate each column so its largest-magnitude entry is real positive.
pub fn fix_phases(vecs: &mut DMatrix<C64>) {
    for c in 0..vecs.ncols() {
        let mut best = 0usize;
        let mut best_mag = -1.0_f64;
        for r in 0..vecs.nrows() {
            let mag = vecs[(r, c)].norm();
            if mag > best_mag + 1e-14 {
                best_mag = mag;
                best = r;
            }
        }
        if best_mag > 0.0 {
            let z = vecs[(best, c)];
            let phase = z / Complex::new(z.norm(), 0.0);
            let corr = phase.conj();
            for r in 0..vecs.nrows() {
                vecs[(r, c)] *= corr;
            }
        }
    }
}

/// Orthonormal-column isometry representing a subspace of the full space.
///
/// `r == 0` encodes the zero subspace.
#[derive(Debug, Clone)]
pub struct Subspace {
    basis: DMatrix<C64>,
    profile: DimensionProfile,
}

impl Subspace {
    pub fn new(basis: DMatrix<C64>, profile: DimensionProfile) -> Result<Self> {
        if basis.nrows() != profile.total_dim() {
            return Err(Error::DimensionMismatch(format!(
                "basis rows {} vs total dimension {}",
                basis.nrows(),
                profile.total_dim()
            )));
        }
        let r = basis.ncols();
        let gram = basis.adjoint() * &basis;
        let dev = (&gram - DMatrix::<C64>::identity(r, r)).norm();
        if dev > 1e-10 {
            return Err(Error::DimensionMismatch(format!(
                "basis columns not orthonormal (deviation {dev:.3e})"
            )));
        }
        Ok(Self { basis, profile })
    }

    pub fn full(profile: DimensionProfile) -> Self {
        let d = profile.total_dim();
        Self {
            basis: DMatrix::identity(d, d),
            profile,
        }
    }

    pub fn basis(&self) -> &DMatrix<C64> {
        &self.basis
    }

    pub fn profile(&self) -> &DimensionProfile {
        &self.profile
    }

    pub fn dim(&self) -> usize {
        self.basis.ncols()
    }

    /// Orthogonal projector onto the subspace.
    pub fn projector(&self) -> DenseOperator {
        DenseOperator {
            entries: &self.basis * self.basis.adjoint(),
            profile: self.profile.clone(),
            hermitian: true,
        }
    }

    /// Coordinates of a ket lying (approximately) in the subspace.
    pub fn coords(&self, ket: &Ket) -> DVector<C64> {
        self.basis.adjoint() * ket.amplitudes()
    }

    /// Residual distance of a ket from the subspace.
    pub fn residual(&self, ket: &Ket) -> f64 {
        let inside = &self.basis * (self.basis.adjoint() * ket.amplitudes());
        (ket.amplitudes() - inside).norm()
    }

    /// Frobenius distance between the projectors of two subspaces.
    pub fn projector_distance(&self, other: &Subspace) -> f64 {
        (self.projector().entries - other.projector().entries).norm()
    }

    /// Intersection of subspaces, computed as the kernel of the
    /// projector-deficit sum `sum_k (I - P_k)` with an absolute eigenvalue
    /// cutoff of 1e-9.
    pub fn intersection(subspaces: &[Subspace]) -> Result<Subspace> {
        let first = subspaces
            .first()
            .ok_or_else(|| Error::DimensionMismatch("empty subspace list".into()))?;
        let profile = first.profile.clone();
        let d = profile.total_dim();
        let mut deficit = DMatrix::<C64>::zeros(d, d);
        for s in subspaces {
            if s.profile != profile {
                return Err(Error::DimensionMismatch("subspace profile mismatch".into()));
            }
            deficit += DMatrix::<C64>::identity(d, d) - s.projector().entries;
        }
        let (vals, vecs) = eigh(&deficit);
        let idx: Vec<usize> = (0..d).filter(|&i| vals[i] < INTERSECT_TOL).collect();
        let mut basis = DMatrix::zeros(d, idx.len());
        for (c, &i) in idx.iter().enumerate() {
            basis.set_column(c, &vecs.column(i));
        }
        Ok(Subspace { basis, profile })
    }
}

/// Embed an operator on a set of sites (ascending order) into the full
/// space, acting as the identity elsewhere.
pub fn embed(
    local: &DMatrix<C64>,
    sites: &[usize],
    profile: &DimensionProfile,
) -> Result<DenseOperator> {
    profile.check_sites(sites)?;
    let mut sorted: Vec<usize> = sites.to_vec();
    sorted.sort_unstable();
    let d_local: usize = sorted.iter().map(|&s| profile.dim_of(s)).product();
    if local.nrows() != d_local || local.ncols() != d_local {
        return Err(Error::DimensionMismatch(format!(
            "local operator {}x{} vs neighborhood dimension {}",
            local.nrows(),
            local.ncols(),
            d_local
        )));
    }
    let strides = profile.strides();
    let n = profile.n_subsystems();
    let rest: Vec<usize> = (1..=n).filter(|s| !sorted.contains(s)).collect();
    let loc_strides: Vec<usize> = sorted.iter().map(|&s| strides[s - 1]).collect();
    let loc_dims: Vec<usize> = sorted.iter().map(|&s| profile.dim_of(s)).collect();
    let rest_strides: Vec<usize> = rest.iter().map(|&s| strides[s - 1]).collect();
    let rest_dims: Vec<usize> = rest.iter().map(|&s| profile.dim_of(s)).collect();
    let loc_offsets = enumerate_offsets(&loc_dims, &loc_strides);
    let rest_offsets = enumerate_offsets(&rest_dims, &rest_strides);

    let d = profile.total_dim();
    let mut out = DMatrix::zeros(d, d);
    for (i, &oi) in loc_offsets.iter().enumerate() {
        for (j, &oj) in loc_offsets.iter().enumerate() {
            let v = local[(i, j)];
            if v == ZERO {
                continue;
            }
            for &ok in &rest_offsets {
                out[(oi + ok, oj + ok)] = v;
            }
        }
    }
    let hermitian = hermiticity_deviation(local) <= HERMITICITY_TOL * local.norm().max(1.0);
    let mut op = DenseOperator::new(out, profile.clone())?;
    op.hermitian = hermitian;
    Ok(op)
}

/// Apply `(local x I) |v>` without materializing the embedded matrix.
pub fn apply_embedded(
    local: &DMatrix<C64>,
    sites: &[usize],
    profile: &DimensionProfile,
    v: &DVector<C64>,
) -> Result<DVector<C64>> {
    profile.check_sites(sites)?;
    let mut sorted: Vec<usize> = sites.to_vec();
    sorted.sort_unstable();
    let strides = profile.strides();
    let n = profile.n_subsystems();
    let rest: Vec<usize> = (1..=n).filter(|s| !sorted.contains(s)).collect();
    let loc_strides: Vec<usize> = sorted.iter().map(|&s| strides[s - 1]).collect();
    let loc_dims: Vec<usize> = sorted.iter().map(|&s| profile.dim_of(s)).collect();
    let rest_strides: Vec<usize> = rest.iter().map(|&s| strides[s - 1]).collect();
    let rest_dims: Vec<usize> = rest.iter().map(|&s| profile.dim_of(s)).collect();
    let loc_offsets = enumerate_offsets(&loc_dims, &loc_strides);
    let rest_offsets = enumerate_offsets(&rest_dims, &rest_strides);
    let d = profile.total_dim();
    if v.len() != d {
        return Err(Error::DimensionMismatch("vector length".into()));
    }
    let mut out = DVector::zeros(d);
    for (i, &oi) in loc_offsets.iter().enumerate() {
        for (j, &oj) in loc_offsets.iter().enumerate() {
            let m = local[(i, j)];
            if m == ZERO {
                continue;
            }
            for &ok in &rest_offsets {
                out[oi + ok] += m * v[oj + ok];
            }
        }
    }
    Ok(out)
}

/// Pauli symbols, including the excitation ladder operators.
///
/// The convention is excitation-creating: `sigma^+ |0> = |1>`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Pauli {
    I,
    X,
    Y,
    Z,
    Plus,
    Minus,
}

impl Pauli {
    pub fn matrix(self) -> DMatrix<C64> {
        let i = Complex::new(0.0, 1.0);
        match self {
            Pauli::I => DMatrix::identity(2, 2),
            Pauli::X => DMatrix::from_row_slice(2, 2, &[ZERO, ONE, ONE, ZERO]),
            Pauli::Y => DMatrix::from_row_slice(2, 2, &[ZERO, -i, i, ZERO]),
            Pauli::Z => DMatrix::from_row_slice(2, 2, &[ONE, ZERO, ZERO, -ONE]),
            Pauli::Plus => DMatrix::from_row_slice(2, 2, &[ZERO, ZERO, ONE, ZERO]),
            Pauli::Minus => DMatrix::from_row_slice(2, 2, &[ZERO, ONE, ZERO, ZERO]),
        }
    }
}

/// Single-site Pauli operator embedded into the full space.
pub fn pauli(symbol: Pauli, site: usize, profile: &DimensionProfile) -> Result<DenseOperator> {
    profile.check_sites(&[site])?;
    if profile.dim_of(site) != 2 {
        return Err(Error::DimensionMismatch(format!(
            "site {site} is not a qubit (dimension {})",
            profile.dim_of(site)
        )));
    }
    embed(&symbol.matrix(), &[site], profile)
}

/// Kronecker product in site order (first argument leftmost).
pub fn kron(a: &DMatrix<C64>, b: &DMatrix<C64>) -> DMatrix<C64> {
    a.kronecker(b)
}
