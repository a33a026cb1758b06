#include "qfc/densmat.hpp"

#include "qfc/error.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace qfc {

namespace {

void require_valid_dim(Eigen::Index rows, Eigen::Index cols) {
  if (rows != cols || (rows != 2 && rows != 4)) {
    throw DimensionError("matrix must be 2x2 or 4x4, got " + std::to_string(rows) +
                         "x" + std::to_string(cols));
  }
}

void require_same_dim(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim() != b.dim()) {
    throw DimensionError("dimension mismatch: " + std::to_string(a.dim()) + " vs " +
                         std::to_string(b.dim()));
  }
}

// Eigenvalues of a 2x2 Hermitian matrix, ascending.
std::pair<double, double> qubit_eigenvalues(const Eigen::Matrix2cd& m) {
  const double a = m(0, 0).real();
  const double d = m(1, 1).real();
  const double mean = 0.5 * (a + d);
  const double half_gap = std::sqrt(0.25 * (a - d) * (a - d) + std::norm(m(0, 1)));
  return {mean - half_gap, mean + half_gap};
}

double entropy_term(double lambda) {
  return lambda > kEntropyCutoff ? -lambda * std::log(lambda) : 0.0;
}

}  // namespace

ComplexMatrix::ComplexMatrix(Eigen::Index dim) : m_(Storage::Zero(dim, dim)) {
  require_valid_dim(dim, dim);
}

ComplexMatrix::ComplexMatrix(Storage m) : m_(std::move(m)) {
  require_valid_dim(m_.rows(), m_.cols());
}

ComplexMatrix ComplexMatrix::identity(Eigen::Index dim) {
  require_valid_dim(dim, dim);
  return ComplexMatrix(Storage::Identity(dim, dim));
}

ComplexMatrix ComplexMatrix::diagonal(const std::vector<Complex>& entries) {
  const auto n = static_cast<Eigen::Index>(entries.size());
  ComplexMatrix out(n);
  for (Eigen::Index i = 0; i < n; ++i) out(i, i) = entries[static_cast<std::size_t>(i)];
  return out;
}

ComplexMatrix ComplexMatrix::adjoint() const { return ComplexMatrix(Storage(m_.adjoint())); }

double ComplexMatrix::max_abs_diff(const ComplexMatrix& other) const {
  require_same_dim(*this, other);
  return (m_ - other.m_).cwiseAbs().maxCoeff();
}

bool ComplexMatrix::approx_equal(const ComplexMatrix& other, double tol) const {
  return dim() == other.dim() && max_abs_diff(other) <= tol;
}

bool ComplexMatrix::is_hermitian(double tol) const {
  return (m_ - m_.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_dim(a, b);
  return ComplexMatrix(ComplexMatrix::Storage(a.m_ * b.m_));
}

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_dim(a, b);
  return ComplexMatrix(ComplexMatrix::Storage(a.m_ + b.m_));
}

ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_dim(a, b);
  return ComplexMatrix(ComplexMatrix::Storage(a.m_ - b.m_));
}

ComplexMatrix operator*(Complex s, const ComplexMatrix& a) {
  return ComplexMatrix(ComplexMatrix::Storage(s * a.m_));
}

DensityMatrix::DensityMatrix(ComplexMatrix m) : m_(std::move(m)) {
  if (!m_.is_hermitian(kMatrixTolerance)) {
    throw NumericalError("density matrix is not Hermitian");
  }
  if (std::abs(m_.trace() - Complex(1.0, 0.0)) > kMatrixTolerance) {
    throw NumericalError("density matrix trace differs from 1");
  }
  const Spectrum spec = hermitian_eig(m_);
  if (spec.eigenvalues.front() < -kMatrixTolerance) {
    throw NumericalError("density matrix has a negative eigenvalue " +
                         std::to_string(spec.eigenvalues.front()));
  }
}

double DensityMatrix::purity() const { return (m_.eigen() * m_.eigen()).trace().real(); }

Unitary::Unitary(ComplexMatrix m) : m_(std::move(m)) {
  const auto product = m_.adjoint() * m_;
  if (!product.approx_equal(ComplexMatrix::identity(m_.dim()), kMatrixTolerance)) {
    throw NumericalError("matrix is not unitary");
  }
}

DensityMatrix Unitary::apply(const DensityMatrix& rho) const {
  return DensityMatrix(m_ * rho.matrix() * m_.adjoint());
}

ComplexMatrix identity2() { return ComplexMatrix::identity(2); }

ComplexMatrix pauli_x() {
  ComplexMatrix m(2);
  m(0, 1) = 1.0;
  m(1, 0) = 1.0;
  return m;
}

ComplexMatrix pauli_y() {
  ComplexMatrix m(2);
  m(0, 1) = Complex(0.0, -1.0);
  m(1, 0) = Complex(0.0, 1.0);
  return m;
}

ComplexMatrix pauli_z() {
  ComplexMatrix m(2);
  m(0, 0) = 1.0;
  m(1, 1) = -1.0;
  return m;
}

ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim() != 2 || b.dim() != 2) {
    throw DimensionError("tensor expects two 2x2 factors");
  }
  ComplexMatrix out(4);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l) out(2 * i + k, 2 * j + l) = a(i, j) * b(k, l);
  return out;
}

DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b) {
  return DensityMatrix(tensor(a.matrix(), b.matrix()));
}

DensityMatrix partial_trace(const DensityMatrix& rho, Subsystem keep) {
  if (rho.dim() != 4) throw DimensionError("partial_trace expects a 4x4 state");
  ComplexMatrix out(2);
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      Complex acc = 0.0;
      for (int t = 0; t < 2; ++t) {
        acc += keep == Subsystem::S ? rho(2 * i + t, 2 * j + t) : rho(2 * t + i, 2 * t + j);
      }
      out(i, j) = acc;
    }
  }
  return DensityMatrix(std::move(out));
}

Spectrum hermitian_eig(const ComplexMatrix& m) {
  if (!m.is_hermitian(kMatrixTolerance)) {
    throw NumericalError("hermitian_eig: input is not Hermitian");
  }
  // Symmetrize so round-off in the lower triangle cannot leak in.
  const ComplexMatrix::Storage h = 0.5 * (m.eigen() + m.eigen().adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix::Storage> solver(h);
  if (solver.info() != Eigen::Success) {
    throw NumericalError("hermitian_eig: eigensolver failed");
  }
  const auto& values = solver.eigenvalues();
  return Spectrum{std::vector<double>(values.data(), values.data() + values.size()),
                  ComplexMatrix(ComplexMatrix::Storage(solver.eigenvectors()))};
}

double vn_entropy(const DensityMatrix& rho) {
  if (rho.dim() == 2) {
    return qubit_entropy(rho.matrix().eigen());
  }
  double s = 0.0;
  for (double lambda : hermitian_eig(rho.matrix()).eigenvalues) s += entropy_term(lambda);
  return s;
}

double qubit_entropy(const Eigen::Matrix2cd& rho) {
  const auto [lo, hi] = qubit_eigenvalues(rho);
  return entropy_term(lo) + entropy_term(hi);
}

double shannon_entropy(const std::vector<double>& probabilities) {
  double s = 0.0;
  for (double p : probabilities) s += entropy_term(p);
  return s;
}

ComplexMatrix psd_sqrt(const ComplexMatrix& m) {
  Spectrum spec = hermitian_eig(m);
  Eigen::VectorXd roots(static_cast<Eigen::Index>(spec.eigenvalues.size()));
  for (std::size_t i = 0; i < spec.eigenvalues.size(); ++i) {
    const double lambda = spec.eigenvalues[i];
    if (lambda < -kMatrixTolerance) {
      throw NumericalError("psd_sqrt: eigenvalue " + std::to_string(lambda) +
                           " is below the clamp window");
    }
    roots(static_cast<Eigen::Index>(i)) = std::sqrt(std::max(lambda, 0.0));
  }
  const auto& v = spec.eigenvectors.eigen();
  ComplexMatrix::Storage s = v * roots.cast<Complex>().asDiagonal() * v.adjoint();
  return ComplexMatrix(ComplexMatrix::Storage(0.5 * (s + s.adjoint())));
}

ComplexMatrix psd_sqrt(const DensityMatrix& rho) { return psd_sqrt(rho.matrix()); }

ComplexMatrix conjugate(const ComplexMatrix& m) {
  return ComplexMatrix(ComplexMatrix::Storage(m.eigen().conjugate()));
}

double expectation(const ComplexMatrix& h, const DensityMatrix& rho) {
  const Complex value = (h * rho.matrix()).trace();
  if (std::abs(value.imag()) > 1e-10) {
    throw NumericalError("expectation: imaginary part " + std::to_string(value.imag()) +
                         " exceeds 1e-10");
  }
  return value.real();
}

Eigen::Vector3d bloch_vector(const DensityMatrix& rho) {
  if (rho.dim() != 2) throw DimensionError("bloch_vector expects a 2x2 state");
  return {expectation(pauli_x(), rho), expectation(pauli_y(), rho),
          expectation(pauli_z(), rho)};
}

}  // namespace qfc
