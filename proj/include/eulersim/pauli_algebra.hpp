// Copyright 2026 The eulersim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace eulersim {

using Complex = std::complex<double>;

/// Largest qubit count accepted by the dense carrier (4096 x 4096).
inline constexpr std::size_t kDefaultDenseQubitLimit = 12;

/// Coefficients with magnitude below this are dropped on normalization.
inline constexpr double kCoefficientDropTolerance = 1e-14;

enum class Pauli : std::uint8_t { X = 1, Y = 2, Z = 3 };

char pauli_char(Pauli p);
Pauli pauli_from_char(char c);

/**
 * @brief Tensor product of single-qubit Pauli letters on n qubits.
 *
 * Qubits absent from the letter map carry the identity; the empty map is
 * the identity word. Qubit 0 is the leftmost tensor factor, i.e. the most
 * significant bit of a computational-basis index.
 */
class PauliWord {
 public:
  explicit PauliWord(std::size_t n_qubits);
  PauliWord(std::size_t n_qubits, std::map<std::size_t, Pauli> letters);

  /// Parses "X0 Z1", "X0Z1" or "I" (identity).
  static PauliWord parse(std::size_t n_qubits, std::string_view text);

  std::size_t n_qubits() const { return n_qubits_; }
  const std::map<std::size_t, Pauli>& letters() const { return letters_; }
  bool is_identity() const { return letters_.empty(); }
  std::optional<Pauli> at(std::size_t qubit) const;

  /// Bit masks with qubit q at bit (n-1-q): x set for X/Y, z set for Z/Y.
  std::uint64_t x_mask() const;
  std::uint64_t z_mask() const;

  /// Same letters on a register of `total_qubits`, shifted by `offset`.
  PauliWord embedded(std::size_t total_qubits, std::size_t offset) const;

  std::string to_string() const;

  friend bool operator==(const PauliWord&, const PauliWord&) = default;
  friend auto operator<=>(const PauliWord& a, const PauliWord& b) {
    return a.letters_ <=> b.letters_;
  }

 private:
  std::size_t n_qubits_;
  std::map<std::size_t, Pauli> letters_;
};

struct PauliTerm {
  double coeff;
  PauliWord word;
};

/**
 * @brief Hermitian operator stored as a real-weighted sum of Pauli words.
 *
 * Terms are kept normalized: sorted by word, duplicates merged and
 * coefficients below kCoefficientDropTolerance removed.
 */
class OperatorSum {
 public:
  explicit OperatorSum(std::size_t n_qubits);
  OperatorSum(std::size_t n_qubits, std::vector<PauliTerm> terms);

  /// Single-term convenience: OperatorSum::term(2, 1.0, "X0 X1").
  static OperatorSum term(std::size_t n_qubits, double coeff,
                          std::string_view word);

  std::size_t n_qubits() const { return n_qubits_; }
  const std::vector<PauliTerm>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }

  /// Coefficient of `word` (0 when absent).
  double coefficient(const PauliWord& word) const;

  /// Largest |coefficient|; 0 for the empty sum.
  double max_abs_coefficient() const;

  OperatorSum embedded(std::size_t total_qubits, std::size_t offset) const;

  std::string to_string() const;

  friend OperatorSum operator+(const OperatorSum& a, const OperatorSum& b);
  friend OperatorSum operator-(const OperatorSum& a, const OperatorSum& b);
  friend OperatorSum operator*(double s, const OperatorSum& a);
  friend bool operator==(const OperatorSum&, const OperatorSum&);

 private:
  void normalize();

  std::size_t n_qubits_;
  std::vector<PauliTerm> terms_;
};

/// Tensor product a (x) b, with a on the leading qubits.
OperatorSum tensor(const OperatorSum& a, const OperatorSum& b);

/// Max |coefficient difference| over the union of words.
double max_coefficient_difference(const OperatorSum& a, const OperatorSum& b);

/// Square complex matrix of dimension 2^n acting on n qubits.
class DenseOperator {
 public:
  DenseOperator(std::size_t n_qubits, Eigen::MatrixXcd matrix);

  static DenseOperator identity(std::size_t n_qubits);
  static DenseOperator zero(std::size_t n_qubits);

  std::size_t n_qubits() const { return n_qubits_; }
  Eigen::Index dim() const { return matrix_.rows(); }
  const Eigen::MatrixXcd& matrix() const { return matrix_; }

  DenseOperator adjoint() const;
  Complex trace() const { return matrix_.trace(); }

  friend DenseOperator operator+(const DenseOperator& a, const DenseOperator& b);
  friend DenseOperator operator-(const DenseOperator& a, const DenseOperator& b);
  friend DenseOperator operator*(const DenseOperator& a, const DenseOperator& b);
  friend DenseOperator operator*(Complex s, const DenseOperator& a);
  friend DenseOperator operator*(double s, const DenseOperator& a);

 private:
  std::size_t n_qubits_;
  Eigen::MatrixXcd matrix_;
};

/// Sum_k c_k P_k as a dense matrix.
DenseOperator to_dense(const OperatorSum& op,
                       std::size_t qubit_limit = kDefaultDenseQubitLimit);

/// Dense matrix of a single Pauli word.
DenseOperator to_dense(const PauliWord& word,
                       std::size_t qubit_limit = kDefaultDenseQubitLimit);

/// u^dagger a u. Throws NotUnitaryError when ||u^dagger u - I||_F > tol.
DenseOperator conjugate(const DenseOperator& a, const DenseOperator& u,
                        double unitarity_tol = 1e-10);

/// Expansion of a Hermitian matrix in the Pauli basis, c_w = tr(P_w a)/2^n.
/// Throws NotHermitianError when ||a - a^dagger||_F exceeds `hermitian_tol`
/// times max(1, ||a||_F).
OperatorSum pauli_coefficients(const DenseOperator& a,
                               double hermitian_tol = 1e-10);

/// exp(-i a t) for Hermitian a, via the spectral decomposition.
DenseOperator matrix_exp(const DenseOperator& a, double t);
DenseOperator matrix_exp(const OperatorSum& a, double t);

double frobenius_norm(const DenseOperator& a);
/// Largest singular value.
double operator_norm(const DenseOperator& a);

bool is_unitary(const DenseOperator& u, double tol = 1e-10);
bool is_hermitian(const DenseOperator& a, double tol = 1e-10);

/// u (x) I on `total_qubits` qubits, u on the leading qubits.
DenseOperator lift(const DenseOperator& u, std::size_t total_qubits);

/// Kronecker product a (x) b.
DenseOperator kron(const DenseOperator& a, const DenseOperator& b);

/// Cached spectral decomposition of a Hermitian operator, for repeated
/// evaluation of exp(-i a t) at many t.
class HermitianExponential {
 public:
  explicit HermitianExponential(const DenseOperator& a);

  DenseOperator at(double t) const;
  std::size_t n_qubits() const { return n_qubits_; }
  const Eigen::VectorXd& eigenvalues() const { return values_; }

 private:
  std::size_t n_qubits_;
  Eigen::MatrixXcd vectors_;
  Eigen::VectorXd values_;
};

}  // namespace eulersim
