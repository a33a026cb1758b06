#pragma once

// Dense one- and two-qubit linear algebra.
//
// Basis convention (used everywhere in the library): a single qubit has the
// computational basis {|0>, |1>} with sigma_z = diag(+1, -1). Two-qubit
// states live on S (register) x A (ancilla) with s-major ordering
// |s a> in {|00>, |01>, |10>, |11>}. All logarithms are natural (nats).

#include <Eigen/Dense>

#include <complex>
#include <vector>

namespace qfc {

using Complex = std::complex<double>;

inline constexpr double kMatrixTolerance = 1e-12;
inline constexpr double kEntropyCutoff = 1e-15;

enum class Subsystem { S, A };

/// Square complex matrix of dimension 2 or 4.
class ComplexMatrix {
 public:
  using Storage = Eigen::MatrixXcd;

  explicit ComplexMatrix(Eigen::Index dim);
  explicit ComplexMatrix(Storage m);

  static ComplexMatrix identity(Eigen::Index dim);
  static ComplexMatrix diagonal(const std::vector<Complex>& entries);

  [[nodiscard]] Eigen::Index dim() const { return m_.rows(); }
  [[nodiscard]] const Storage& eigen() const { return m_; }

  Complex& operator()(Eigen::Index r, Eigen::Index c) { return m_(r, c); }
  Complex operator()(Eigen::Index r, Eigen::Index c) const { return m_(r, c); }

  [[nodiscard]] ComplexMatrix adjoint() const;
  [[nodiscard]] Complex trace() const { return m_.trace(); }

  /// Largest elementwise |a_ij - b_ij|; dimensions must match.
  [[nodiscard]] double max_abs_diff(const ComplexMatrix& other) const;
  [[nodiscard]] bool approx_equal(const ComplexMatrix& other,
                                  double tol = kMatrixTolerance) const;
  [[nodiscard]] bool is_hermitian(double tol = kMatrixTolerance) const;

  friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
  friend ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b);
  friend ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b);
  friend ComplexMatrix operator*(Complex s, const ComplexMatrix& a);

 private:
  Storage m_;
};

/// Hermitian, unit-trace, positive semidefinite matrix. Validated on construction.
class DensityMatrix {
 public:
  explicit DensityMatrix(ComplexMatrix m);

  [[nodiscard]] const ComplexMatrix& matrix() const { return m_; }
  [[nodiscard]] Eigen::Index dim() const { return m_.dim(); }
  Complex operator()(Eigen::Index r, Eigen::Index c) const { return m_(r, c); }

  [[nodiscard]] double purity() const;

 private:
  ComplexMatrix m_;
};

/// Matrix with U^dagger U = I to kMatrixTolerance. Validated on construction.
class Unitary {
 public:
  explicit Unitary(ComplexMatrix m);

  [[nodiscard]] const ComplexMatrix& matrix() const { return m_; }
  [[nodiscard]] Eigen::Index dim() const { return m_.dim(); }

  /// U rho U^dagger.
  [[nodiscard]] DensityMatrix apply(const DensityMatrix& rho) const;

 private:
  ComplexMatrix m_;
};

struct Spectrum {
  std::vector<double> eigenvalues;  // ascending
  ComplexMatrix eigenvectors;       // columns, orthonormal
};

// Pauli matrices and single-qubit identity.
ComplexMatrix identity2();
ComplexMatrix pauli_x();
ComplexMatrix pauli_y();
ComplexMatrix pauli_z();

ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b);
DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b);

/// Reduced state of `keep`, tracing out the other qubit.
DensityMatrix partial_trace(const DensityMatrix& rho, Subsystem keep);

/// Throws NumericalError for non-Hermitian input.
Spectrum hermitian_eig(const ComplexMatrix& m);

/// Von Neumann entropy in nats; eigenvalues below kEntropyCutoff count as 0.
double vn_entropy(const DensityMatrix& rho);

/// Entropy of a 2x2 Hermitian PSD matrix of unit trace given as raw storage,
/// via its closed-form eigenvalues. No validation; used in inner loops.
double qubit_entropy(const Eigen::Matrix2cd& rho);

/// -sum p ln p with the same cutoff as vn_entropy.
double shannon_entropy(const std::vector<double>& probabilities);

/// Principal square root of a PSD matrix. Eigenvalues in [-1e-12, 0) are
/// clamped to zero; anything more negative throws NumericalError.
ComplexMatrix psd_sqrt(const ComplexMatrix& m);
ComplexMatrix psd_sqrt(const DensityMatrix& rho);

ComplexMatrix conjugate(const ComplexMatrix& m);

/// tr(H rho). Throws NumericalError if the imaginary part exceeds 1e-10.
double expectation(const ComplexMatrix& h, const DensityMatrix& rho);

/// (<sigma_x>, <sigma_y>, <sigma_z>) for a single-qubit state.
Eigen::Vector3d bloch_vector(const DensityMatrix& rho);

}  // namespace qfc
