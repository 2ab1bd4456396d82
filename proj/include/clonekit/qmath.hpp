// Copyright 2026 The clonekit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CLONEKIT_QMATH_HPP
#define CLONEKIT_QMATH_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <functional>
#include <numeric>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace clonekit {

template <typename Real>
using Complex = std::complex<Real>;
template <typename Real>
using CMatrix = Eigen::Matrix<Complex<Real>, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Real>
using CVector = Eigen::Matrix<Complex<Real>, Eigen::Dynamic, 1>;

using CMatrixd = CMatrix<double>;
using CVectord = CVector<double>;

/// Module-wide numerical tolerances.
namespace tol {
inline constexpr double hermitian = 1e-12;
inline constexpr double trace = 1e-12;
inline constexpr double norm = 1e-12;
inline constexpr double psd_floor = -1e-10;
inline constexpr double kraus = 1e-10;
}  // namespace tol

/// Ordered subsystem dimensions of a tensor-product space. The first factor is
/// the most significant digit of a flat basis index (big-endian).
class HilbertDims {
 public:
  HilbertDims() = default;
  explicit HilbertDims(std::vector<int> factors) : factors_(std::move(factors)) {
    for (int f : factors_) {
      if (f < 2) throw std::invalid_argument("HilbertDims: every factor must be >= 2");
    }
  }
  HilbertDims(std::initializer_list<int> factors) : HilbertDims(std::vector<int>(factors)) {}

  static HilbertDims qudits(int d, int count) { return HilbertDims(std::vector<int>(count, d)); }

  std::size_t size() const { return factors_.size(); }
  bool empty() const { return factors_.empty(); }
  int operator[](std::size_t i) const { return factors_.at(i); }
  const std::vector<int>& factors() const { return factors_; }

  Eigen::Index total() const {
    Eigen::Index t = 1;
    for (int f : factors_) t *= f;
    return t;
  }

  HilbertDims concat(const HilbertDims& other) const {
    std::vector<int> f = factors_;
    f.insert(f.end(), other.factors_.begin(), other.factors_.end());
    return HilbertDims(std::move(f));
  }

  HilbertDims select(std::span<const int> indices) const {
    std::vector<int> f;
    f.reserve(indices.size());
    for (int i : indices) f.push_back(factors_.at(static_cast<std::size_t>(i)));
    return HilbertDims(std::move(f));
  }

  /// Splits a flat index into per-factor digits.
  std::vector<int> digits(Eigen::Index flat) const {
    std::vector<int> out(factors_.size());
    for (std::size_t k = factors_.size(); k-- > 0;) {
      out[k] = static_cast<int>(flat % factors_[k]);
      flat /= factors_[k];
    }
    return out;
  }

  Eigen::Index flat(std::span<const int> digits) const {
    Eigen::Index idx = 0;
    for (std::size_t k = 0; k < factors_.size(); ++k) idx = idx * factors_[k] + digits[k];
    return idx;
  }

  friend bool operator==(const HilbertDims&, const HilbertDims&) = default;

 private:
  std::vector<int> factors_;
};

template <typename Real>
class DensityMatrix;

/// Normalized pure state over a tensor product of qudits.
template <typename Real>
class StateVector {
 public:
  StateVector(HilbertDims dims, CVector<Real> amplitudes)
      : dims_(std::move(dims)), amps_(std::move(amplitudes)) {
    if (amps_.size() != dims_.total())
      throw std::invalid_argument("StateVector: amplitude count does not match dimensions");
    if (std::abs(amps_.squaredNorm() - Real(1)) > tol::norm)
      throw std::invalid_argument("StateVector: state is not normalized");
  }

  /// Normalizes `amplitudes` first; throws on the zero vector.
  static StateVector normalized(HilbertDims dims, CVector<Real> amplitudes) {
    const Real n = amplitudes.norm();
    if (n == Real(0)) throw std::invalid_argument("StateVector: zero vector");
    amplitudes /= n;
    return StateVector(std::move(dims), std::move(amplitudes));
  }

  static StateVector basis(HilbertDims dims, Eigen::Index index) {
    CVector<Real> v = CVector<Real>::Zero(dims.total());
    v(index) = Real(1);
    return StateVector(std::move(dims), std::move(v));
  }

  static StateVector qubit(Complex<Real> alpha, Complex<Real> beta) {
    CVector<Real> v(2);
    v << alpha, beta;
    return normalized(HilbertDims{2}, std::move(v));
  }

  const HilbertDims& dims() const { return dims_; }
  const CVector<Real>& amplitudes() const { return amps_; }
  Eigen::Index dim() const { return amps_.size(); }

  DensityMatrix<Real> projector() const;

 private:
  HilbertDims dims_;
  CVector<Real> amps_;
};

/// Hermitian, positive semidefinite, unit-trace operator.
template <typename Real>
class DensityMatrix {
 public:
  DensityMatrix(HilbertDims dims, CMatrix<Real> matrix)
      : dims_(std::move(dims)), rho_(std::move(matrix)) {
    const Eigen::Index n = dims_.total();
    if (rho_.rows() != n || rho_.cols() != n)
      throw std::invalid_argument("DensityMatrix: matrix shape does not match dimensions");
    if ((rho_ - rho_.adjoint()).cwiseAbs().maxCoeff() > tol::hermitian)
      throw std::invalid_argument("DensityMatrix: matrix is not Hermitian");
    if (std::abs(rho_.trace() - Complex<Real>(1)) > tol::trace)
      throw std::invalid_argument("DensityMatrix: trace differs from 1");
    // Cholesky of rho + |floor| I succeeds iff min eigenvalue > floor.
    CMatrix<Real> shifted = rho_;
    shifted.diagonal().array() += Real(-tol::psd_floor);
    if (Eigen::LLT<CMatrix<Real>>(shifted).info() != Eigen::Success)
      throw std::invalid_argument("DensityMatrix: matrix has a negative eigenvalue");
  }

  static DensityMatrix maximally_mixed(HilbertDims dims) {
    const Eigen::Index n = dims.total();
    CMatrix<Real> m = CMatrix<Real>::Identity(n, n) / Real(n);
    return DensityMatrix(std::move(dims), std::move(m));
  }

  const HilbertDims& dims() const { return dims_; }
  const CMatrix<Real>& matrix() const { return rho_; }
  Eigen::Index dim() const { return rho_.rows(); }

 private:
  HilbertDims dims_;
  CMatrix<Real> rho_;
};

template <typename Real>
DensityMatrix<Real> StateVector<Real>::projector() const {
  return DensityMatrix<Real>(dims_, amps_ * amps_.adjoint());
}

/// Completely positive trace-preserving map in Kraus form.
template <typename Real>
class QuantumChannel {
 public:
  QuantumChannel(HilbertDims input, HilbertDims output, std::vector<CMatrix<Real>> kraus)
      : in_(std::move(input)), out_(std::move(output)), kraus_(std::move(kraus)) {
    if (kraus_.empty()) throw std::invalid_argument("QuantumChannel: no Kraus operators");
    const Eigen::Index n = in_.total();
    CMatrix<Real> sum = CMatrix<Real>::Zero(n, n);
    for (const auto& k : kraus_) {
      if (k.rows() != out_.total() || k.cols() != n)
        throw std::invalid_argument("QuantumChannel: Kraus operator has the wrong shape");
      sum += k.adjoint() * k;
    }
    if ((sum - CMatrix<Real>::Identity(n, n)).cwiseAbs().maxCoeff() > tol::kraus)
      throw std::invalid_argument("QuantumChannel: Kraus operators are not trace preserving");
  }

  /// Channel rho -> V rho V^dagger for an isometry V.
  static QuantumChannel isometry(HilbertDims input, HilbertDims output, CMatrix<Real> v) {
    return QuantumChannel(std::move(input), std::move(output), {std::move(v)});
  }

  static QuantumChannel identity(HilbertDims dims) {
    const Eigen::Index n = dims.total();
    return QuantumChannel(dims, dims, {CMatrix<Real>::Identity(n, n)});
  }

  const HilbertDims& input_dims() const { return in_; }
  const HilbertDims& output_dims() const { return out_; }
  const std::vector<CMatrix<Real>>& kraus() const { return kraus_; }

 private:
  HilbertDims in_;
  HilbertDims out_;
  std::vector<CMatrix<Real>> kraus_;
};

using StateVectord = StateVector<double>;
using DensityMatrixd = DensityMatrix<double>;
using QuantumChanneld = QuantumChannel<double>;

// ---------------------------------------------------------------------------
// Tensor products

template <typename Real>
StateVector<Real> tensor(const StateVector<Real>& a, const StateVector<Real>& b) {
  CVector<Real> v(a.dim() * b.dim());
  for (Eigen::Index i = 0; i < a.dim(); ++i)
    v.segment(i * b.dim(), b.dim()) = a.amplitudes()(i) * b.amplitudes();
  return StateVector<Real>(a.dims().concat(b.dims()), std::move(v));
}

template <typename Real>
CMatrix<Real> kron(const CMatrix<Real>& a, const CMatrix<Real>& b) {
  CMatrix<Real> out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

template <typename Real>
DensityMatrix<Real> tensor(const DensityMatrix<Real>& a, const DensityMatrix<Real>& b) {
  return DensityMatrix<Real>(a.dims().concat(b.dims()), kron<Real>(a.matrix(), b.matrix()));
}

/// |psi>^{(x) n}
template <typename Real>
StateVector<Real> tensor_power(const StateVector<Real>& psi, int n) {
  if (n < 1) throw std::invalid_argument("tensor_power: n must be >= 1");
  StateVector<Real> out = psi;
  for (int k = 1; k < n; ++k) out = tensor(out, psi);
  return out;
}

// ---------------------------------------------------------------------------
// Partial trace

/// Raw partial trace of a square matrix over the factors not listed in `keep`.
template <typename Real>
CMatrix<Real> partial_trace(const CMatrix<Real>& rho, const HilbertDims& dims,
                            std::vector<int> keep) {
  if (keep.empty()) throw std::invalid_argument("partial_trace: keep set is empty");
  std::sort(keep.begin(), keep.end());
  keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
  const int n = static_cast<int>(dims.size());
  for (int k : keep)
    if (k < 0 || k >= n) throw std::invalid_argument("partial_trace: subsystem index out of range");

  std::vector<int> traced;
  for (int k = 0; k < n; ++k)
    if (!std::binary_search(keep.begin(), keep.end(), k)) traced.push_back(k);

  const HilbertDims kept_dims = dims.select(keep);
  const Eigen::Index dk = kept_dims.total();
  Eigen::Index dt = 1;
  for (int t : traced) dt *= dims[static_cast<std::size_t>(t)];
  const HilbertDims traced_dims =
      traced.empty() ? HilbertDims() : dims.select(traced);

  // full[k][t] = flat index of (kept digits k, traced digits t)
  std::vector<Eigen::Index> full(static_cast<std::size_t>(dk * dt));
  std::vector<int> digits(static_cast<std::size_t>(n));
  for (Eigen::Index a = 0; a < dk; ++a) {
    const auto kd = kept_dims.digits(a);
    for (std::size_t i = 0; i < keep.size(); ++i) digits[static_cast<std::size_t>(keep[i])] = kd[i];
    for (Eigen::Index t = 0; t < dt; ++t) {
      if (!traced.empty()) {
        const auto td = traced_dims.digits(t);
        for (std::size_t i = 0; i < traced.size(); ++i)
          digits[static_cast<std::size_t>(traced[i])] = td[i];
      }
      full[static_cast<std::size_t>(a * dt + t)] = dims.flat(digits);
    }
  }

  CMatrix<Real> out = CMatrix<Real>::Zero(dk, dk);
  for (Eigen::Index a = 0; a < dk; ++a)
    for (Eigen::Index b = 0; b < dk; ++b) {
      Complex<Real> s(0);
      for (Eigen::Index t = 0; t < dt; ++t)
        s += rho(full[static_cast<std::size_t>(a * dt + t)], full[static_cast<std::size_t>(b * dt + t)]);
      out(a, b) = s;
    }
  return out;
}

template <typename Real>
DensityMatrix<Real> partial_trace(const DensityMatrix<Real>& rho, std::vector<int> keep) {
  if (keep.empty()) throw std::invalid_argument("partial_trace: keep set is empty");
  std::sort(keep.begin(), keep.end());
  keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
  CMatrix<Real> m = partial_trace<Real>(rho.matrix(), rho.dims(), keep);
  // Re-symmetrize accumulated rounding before validation.
  m = (m + m.adjoint()).eval() / Real(2);
  return DensityMatrix<Real>(rho.dims().select(keep), std::move(m));
}

// ---------------------------------------------------------------------------
// Fidelity, channels, entropy

template <typename Real>
Real fidelity_pure(const DensityMatrix<Real>& rho, const StateVector<Real>& psi) {
  if (rho.dim() != psi.dim()) throw std::invalid_argument("fidelity_pure: dimension mismatch");
  const Complex<Real> f = psi.amplitudes().dot(rho.matrix() * psi.amplitudes());
  return std::clamp(f.real(), Real(0), Real(1));
}

template <typename Real>
CMatrix<Real> apply_channel(const QuantumChannel<Real>& ch, const CMatrix<Real>& rho) {
  if (rho.rows() != ch.input_dims().total())
    throw std::invalid_argument("apply_channel: input dimension mismatch");
  const Eigen::Index n = ch.output_dims().total();
  CMatrix<Real> out = CMatrix<Real>::Zero(n, n);
  for (const auto& k : ch.kraus()) out += k * rho * k.adjoint();
  return out;
}

template <typename Real>
DensityMatrix<Real> apply_channel(const QuantumChannel<Real>& ch, const DensityMatrix<Real>& rho) {
  if (rho.dims().total() != ch.input_dims().total())
    throw std::invalid_argument("apply_channel: input dimension mismatch");
  CMatrix<Real> out = apply_channel(ch, rho.matrix());
  out = (out + out.adjoint()).eval() / Real(2);
  return DensityMatrix<Real>(ch.output_dims(), std::move(out));
}

/// Sequential composition: `second` after `first`.
template <typename Real>
QuantumChannel<Real> compose(const QuantumChannel<Real>& second, const QuantumChannel<Real>& first) {
  if (first.output_dims().total() != second.input_dims().total())
    throw std::invalid_argument("compose: dimension mismatch");
  std::vector<CMatrix<Real>> kraus;
  for (const auto& b : second.kraus())
    for (const auto& a : first.kraus()) kraus.push_back(b * a);
  return QuantumChannel<Real>(first.input_dims(), second.output_dims(), std::move(kraus));
}

/// Channel followed by a partial trace onto `keep`.
template <typename Real>
QuantumChannel<Real> marginal(const QuantumChannel<Real>& ch, std::vector<int> keep) {
  std::sort(keep.begin(), keep.end());
  const HilbertDims& out = ch.output_dims();
  std::vector<int> traced;
  for (int k = 0; k < static_cast<int>(out.size()); ++k)
    if (!std::binary_search(keep.begin(), keep.end(), k)) traced.push_back(k);
  const HilbertDims kept = out.select(keep);
  if (traced.empty()) return ch;
  const HilbertDims tr = out.select(traced);

  std::vector<CMatrix<Real>> kraus;
  std::vector<int> digits(out.size());
  for (Eigen::Index t = 0; t < tr.total(); ++t) {
    // <t|_traced as a map from the full output space onto the kept factors
    CMatrix<Real> bra = CMatrix<Real>::Zero(kept.total(), out.total());
    const auto td = tr.digits(t);
    for (Eigen::Index a = 0; a < kept.total(); ++a) {
      const auto kd = kept.digits(a);
      for (std::size_t i = 0; i < keep.size(); ++i) digits[static_cast<std::size_t>(keep[i])] = kd[i];
      for (std::size_t i = 0; i < traced.size(); ++i) digits[static_cast<std::size_t>(traced[i])] = td[i];
      bra(a, out.flat(digits)) = Real(1);
    }
    for (const auto& k : ch.kraus()) kraus.push_back(bra * k);
  }
  return QuantumChannel<Real>(ch.input_dims(), kept, std::move(kraus));
}

/// Von Neumann entropy in bits.
template <typename Real>
Real vn_entropy(const CMatrix<Real>& rho) {
  Eigen::SelfAdjointEigenSolver<CMatrix<Real>> es(rho, Eigen::EigenvaluesOnly);
  Real s = 0;
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
    const Real l = es.eigenvalues()(i);
    if (l > Real(0)) s -= l * std::log2(l);
  }
  return std::max(s, Real(0));
}

template <typename Real>
Real vn_entropy(const DensityMatrix<Real>& rho) {
  return vn_entropy<Real>(rho.matrix());
}

// ---------------------------------------------------------------------------
// Qubit helpers

template <typename Real>
struct Pauli {
  static CMatrix<Real> I() { return CMatrix<Real>::Identity(2, 2); }
  static CMatrix<Real> X() {
    CMatrix<Real> m(2, 2);
    m << 0, 1, 1, 0;
    return m;
  }
  static CMatrix<Real> Y() {
    CMatrix<Real> m(2, 2);
    m << 0, Complex<Real>(0, -1), Complex<Real>(0, 1), 0;
    return m;
  }
  static CMatrix<Real> Z() {
    CMatrix<Real> m(2, 2);
    m << 1, 0, 0, -1;
    return m;
  }
};

template <typename Real>
Eigen::Matrix<Real, 3, 1> bloch_vector(const CMatrix<Real>& rho) {
  if (rho.rows() != 2) throw std::invalid_argument("bloch_vector: not a qubit");
  Eigen::Matrix<Real, 3, 1> m;
  m << (rho * Pauli<Real>::X()).trace().real(), (rho * Pauli<Real>::Y()).trace().real(),
      (rho * Pauli<Real>::Z()).trace().real();
  return m;
}

template <typename Real>
Eigen::Matrix<Real, 3, 1> bloch_vector(const DensityMatrix<Real>& rho) {
  return bloch_vector<Real>(rho.matrix());
}

template <typename Real>
DensityMatrix<Real> from_bloch(const Eigen::Matrix<Real, 3, 1>& m) {
  CMatrix<Real> rho = (Pauli<Real>::I() + m(0) * Pauli<Real>::X() + m(1) * Pauli<Real>::Y() +
                       m(2) * Pauli<Real>::Z()) /
                      Real(2);
  return DensityMatrix<Real>(HilbertDims{2}, std::move(rho));
}

/// cos(theta/2)|0> + e^{i phi} sin(theta/2)|1>
template <typename Real>
StateVector<Real> bloch_state(Real theta, Real phi) {
  return StateVector<Real>::qubit(std::cos(theta / 2), std::polar(std::sin(theta / 2), phi));
}

/// Orthogonal qubit state alpha*|1> - beta*|0>.
template <typename Real>
StateVector<Real> qubit_perp(const StateVector<Real>& psi) {
  if (psi.dim() != 2) throw std::invalid_argument("qubit_perp: not a qubit");
  const auto& a = psi.amplitudes();
  return StateVector<Real>::qubit(-std::conj(a(1)), std::conj(a(0)));
}

/// Bell states on two qubits.
template <typename Real>
struct Bell {
  static StateVector<Real> phi_plus() { return make(1, 0, 0, 1); }
  static StateVector<Real> phi_minus() { return make(1, 0, 0, -1); }
  static StateVector<Real> psi_plus() { return make(0, 1, 1, 0); }
  static StateVector<Real> psi_minus() { return make(0, 1, -1, 0); }

 private:
  static StateVector<Real> make(Real a, Real b, Real c, Real d) {
    CVector<Real> v(4);
    v << a, b, c, d;
    return StateVector<Real>::normalized(HilbertDims{2, 2}, std::move(v));
  }
};

/// Maximally entangled state (1/sqrt(d)) sum_k |k>|k>.
template <typename Real>
StateVector<Real> max_entangled(int d) {
  CVector<Real> v = CVector<Real>::Zero(d * d);
  for (int k = 0; k < d; ++k) v(k * d + k) = Real(1) / std::sqrt(Real(d));
  return StateVector<Real>(HilbertDims{d, d}, std::move(v));
}

/// Pauli channel with probabilities (1-px-py-pz, px, py, pz).
template <typename Real>
QuantumChannel<Real> pauli_channel(Real px, Real py, Real pz) {
  const Real p0 = Real(1) - px - py - pz;
  if (p0 < Real(0) || px < Real(0) || py < Real(0) || pz < Real(0))
    throw std::invalid_argument("pauli_channel: invalid probabilities");
  std::vector<CMatrix<Real>> kraus{std::sqrt(p0) * Pauli<Real>::I(), std::sqrt(px) * Pauli<Real>::X(),
                                   std::sqrt(py) * Pauli<Real>::Y(), std::sqrt(pz) * Pauli<Real>::Z()};
  return QuantumChannel<Real>(HilbertDims{2}, HilbertDims{2}, std::move(kraus));
}

// ---------------------------------------------------------------------------
// Random sampling

/// Haar-random pure state (normalized complex Gaussian vector).
template <typename Real, typename Rng>
StateVector<Real> haar_state(const HilbertDims& dims, Rng& rng) {
  std::normal_distribution<Real> g(0, 1);
  CVector<Real> v(dims.total());
  for (Eigen::Index i = 0; i < v.size(); ++i) v(i) = Complex<Real>(g(rng), g(rng));
  return StateVector<Real>::normalized(dims, std::move(v));
}

/// Random CPTP map from a Haar-like isometry into output (x) environment.
template <typename Real, typename Rng>
QuantumChannel<Real> random_channel(const HilbertDims& input, const HilbertDims& output,
                                    int kraus_count, Rng& rng) {
  std::normal_distribution<Real> g(0, 1);
  const Eigen::Index din = input.total();
  const Eigen::Index dout = output.total();
  if (kraus_count < 1 || dout * kraus_count < din)
    throw std::invalid_argument("random_channel: need kraus_count * dim(output) >= dim(input)");
  CMatrix<Real> a(dout * kraus_count, din);
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) a(i, j) = Complex<Real>(g(rng), g(rng));
  Eigen::HouseholderQR<CMatrix<Real>> qr(a);
  const CMatrix<Real> v = qr.householderQ() * CMatrix<Real>::Identity(a.rows(), din);
  std::vector<CMatrix<Real>> kraus;
  for (int k = 0; k < kraus_count; ++k) kraus.push_back(v.block(k * dout, 0, dout, din));
  return QuantumChannel<Real>(input, output, std::move(kraus));
}

/// Largest |entry| of the difference of two matrices.
template <typename Real>
Real max_abs_diff(const CMatrix<Real>& a, const CMatrix<Real>& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

/// Global-phase-insensitive overlap |<u|w>|.
template <typename Real>
Real overlap_modulus(const CVector<Real>& u, const CVector<Real>& w) {
  return std::abs(u.dot(w));
}

}  // namespace clonekit

#endif  // CLONEKIT_QMATH_HPP
