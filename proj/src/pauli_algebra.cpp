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

#include "eulersim/pauli_algebra.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <bit>
#include <cctype>
#include <cmath>
#include <sstream>

#include "eulersim/errors.hpp"

namespace eulersim {

namespace {

void check_dense_limit(std::size_t n_qubits, std::size_t limit) {
  if (n_qubits > limit) {
    throw DimensionLimitError("dense carrier limited to " +
                              std::to_string(limit) + " qubits, got " +
                              std::to_string(n_qubits));
  }
}

std::uint64_t qubit_bit(std::size_t n_qubits, std::size_t qubit) {
  return std::uint64_t{1} << (n_qubits - 1 - qubit);
}

// i^k for integer k.
Complex i_power(unsigned k) {
  switch (k % 4) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

// Entry P[col ^ x, col] of the Pauli word with masks (x, z):
// i^{|x & z|} (-1)^{|z & col|}.
Complex pauli_entry(std::uint64_t x, std::uint64_t z, std::uint64_t col) {
  Complex v = i_power(static_cast<unsigned>(std::popcount(x & z)));
  return (std::popcount(z & col) % 2) ? -v : v;
}

}  // namespace

char pauli_char(Pauli p) {
  switch (p) {
    case Pauli::X: return 'X';
    case Pauli::Y: return 'Y';
    case Pauli::Z: return 'Z';
  }
  return '?';
}

Pauli pauli_from_char(char c) {
  switch (std::toupper(static_cast<unsigned char>(c))) {
    case 'X': return Pauli::X;
    case 'Y': return Pauli::Y;
    case 'Z': return Pauli::Z;
    default:
      throw ConfigError(std::string("unknown Pauli letter '") + c + "'");
  }
}

// ---------------------------------------------------------------- PauliWord

PauliWord::PauliWord(std::size_t n_qubits) : n_qubits_(n_qubits) {
  if (n_qubits == 0) throw ConfigError("PauliWord needs at least one qubit");
}

PauliWord::PauliWord(std::size_t n_qubits, std::map<std::size_t, Pauli> letters)
    : n_qubits_(n_qubits), letters_(std::move(letters)) {
  if (n_qubits == 0) throw ConfigError("PauliWord needs at least one qubit");
  for (const auto& [q, p] : letters_) {
    if (q >= n_qubits_) {
      throw ConfigError("qubit index " + std::to_string(q) +
                        " out of range for " + std::to_string(n_qubits_) +
                        " qubits");
    }
  }
}

PauliWord PauliWord::parse(std::size_t n_qubits, std::string_view text) {
  std::map<std::size_t, Pauli> letters;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c)) || c == '*') {
      ++i;
      continue;
    }
    if (c == 'I' && (i + 1 == text.size() || !std::isdigit(static_cast<unsigned char>(text[i + 1])))) {
      ++i;
      continue;
    }
    const Pauli p = pauli_from_char(c);
    ++i;
    std::size_t start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (start == i) {
      throw ConfigError("missing qubit index in Pauli word '" +
                        std::string(text) + "'");
    }
    const auto q = static_cast<std::size_t>(std::stoul(std::string(text.substr(start, i - start))));
    if (!letters.emplace(q, p).second) {
      throw ConfigError("qubit " + std::to_string(q) +
                        " repeated in Pauli word '" + std::string(text) + "'");
    }
  }
  return PauliWord(n_qubits, std::move(letters));
}

std::optional<Pauli> PauliWord::at(std::size_t qubit) const {
  auto it = letters_.find(qubit);
  if (it == letters_.end()) return std::nullopt;
  return it->second;
}

std::uint64_t PauliWord::x_mask() const {
  std::uint64_t m = 0;
  for (const auto& [q, p] : letters_) {
    if (p == Pauli::X || p == Pauli::Y) m |= qubit_bit(n_qubits_, q);
  }
  return m;
}

std::uint64_t PauliWord::z_mask() const {
  std::uint64_t m = 0;
  for (const auto& [q, p] : letters_) {
    if (p == Pauli::Z || p == Pauli::Y) m |= qubit_bit(n_qubits_, q);
  }
  return m;
}

PauliWord PauliWord::embedded(std::size_t total_qubits, std::size_t offset) const {
  std::map<std::size_t, Pauli> letters;
  for (const auto& [q, p] : letters_) letters.emplace(q + offset, p);
  return PauliWord(total_qubits, std::move(letters));
}

std::string PauliWord::to_string() const {
  if (letters_.empty()) return "I";
  std::string out;
  for (const auto& [q, p] : letters_) {
    if (!out.empty()) out += ' ';
    out += pauli_char(p);
    out += std::to_string(q);
  }
  return out;
}

// -------------------------------------------------------------- OperatorSum

OperatorSum::OperatorSum(std::size_t n_qubits) : n_qubits_(n_qubits) {
  if (n_qubits == 0) throw ConfigError("OperatorSum needs at least one qubit");
}

OperatorSum::OperatorSum(std::size_t n_qubits, std::vector<PauliTerm> terms)
    : n_qubits_(n_qubits), terms_(std::move(terms)) {
  if (n_qubits == 0) throw ConfigError("OperatorSum needs at least one qubit");
  for (const auto& t : terms_) {
    if (t.word.n_qubits() != n_qubits_) {
      throw DimensionMismatchError("term acts on " +
                                   std::to_string(t.word.n_qubits()) +
                                   " qubits, sum on " + std::to_string(n_qubits_));
    }
    if (!std::isfinite(t.coeff)) throw ConfigError("non-finite coefficient");
  }
  normalize();
}

OperatorSum OperatorSum::term(std::size_t n_qubits, double coeff,
                              std::string_view word) {
  return OperatorSum(n_qubits, {{coeff, PauliWord::parse(n_qubits, word)}});
}

void OperatorSum::normalize() {
  std::sort(terms_.begin(), terms_.end(),
            [](const PauliTerm& a, const PauliTerm& b) { return a.word < b.word; });
  std::vector<PauliTerm> merged;
  merged.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!merged.empty() && merged.back().word == t.word) {
      merged.back().coeff += t.coeff;
    } else {
      merged.push_back(std::move(t));
    }
  }
  std::erase_if(merged, [](const PauliTerm& t) {
    return std::abs(t.coeff) < kCoefficientDropTolerance;
  });
  terms_ = std::move(merged);
}

double OperatorSum::coefficient(const PauliWord& word) const {
  auto it = std::lower_bound(
      terms_.begin(), terms_.end(), word,
      [](const PauliTerm& t, const PauliWord& w) { return t.word < w; });
  if (it != terms_.end() && it->word == word) return it->coeff;
  return 0.0;
}

double OperatorSum::max_abs_coefficient() const {
  double m = 0.0;
  for (const auto& t : terms_) m = std::max(m, std::abs(t.coeff));
  return m;
}

OperatorSum OperatorSum::embedded(std::size_t total_qubits,
                                  std::size_t offset) const {
  std::vector<PauliTerm> terms;
  terms.reserve(terms_.size());
  for (const auto& t : terms_) {
    terms.push_back({t.coeff, t.word.embedded(total_qubits, offset)});
  }
  return OperatorSum(total_qubits, std::move(terms));
}

std::string OperatorSum::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  os.precision(12);
  bool first = true;
  for (const auto& t : terms_) {
    if (!first) os << (t.coeff < 0 ? " - " : " + ");
    else if (t.coeff < 0) os << "-";
    os << std::abs(t.coeff) << "*" << t.word.to_string();
    first = false;
  }
  return os.str();
}

OperatorSum operator+(const OperatorSum& a, const OperatorSum& b) {
  if (a.n_qubits_ != b.n_qubits_) {
    throw DimensionMismatchError("adding operators on different qubit counts");
  }
  std::vector<PauliTerm> terms = a.terms_;
  terms.insert(terms.end(), b.terms_.begin(), b.terms_.end());
  return OperatorSum(a.n_qubits_, std::move(terms));
}

OperatorSum operator*(double s, const OperatorSum& a) {
  std::vector<PauliTerm> terms = a.terms_;
  for (auto& t : terms) t.coeff *= s;
  return OperatorSum(a.n_qubits_, std::move(terms));
}

OperatorSum operator-(const OperatorSum& a, const OperatorSum& b) {
  return a + (-1.0) * b;
}

bool operator==(const OperatorSum& a, const OperatorSum& b) {
  if (a.n_qubits_ != b.n_qubits_ || a.terms_.size() != b.terms_.size()) {
    return false;
  }
  for (std::size_t k = 0; k < a.terms_.size(); ++k) {
    if (a.terms_[k].word != b.terms_[k].word ||
        a.terms_[k].coeff != b.terms_[k].coeff) {
      return false;
    }
  }
  return true;
}

OperatorSum tensor(const OperatorSum& a, const OperatorSum& b) {
  const std::size_t n = a.n_qubits() + b.n_qubits();
  std::vector<PauliTerm> terms;
  terms.reserve(a.size() * b.size());
  for (const auto& ta : a.terms()) {
    for (const auto& tb : b.terms()) {
      auto letters = ta.word.letters();
      for (const auto& [q, p] : tb.word.letters()) letters.emplace(q + a.n_qubits(), p);
      terms.push_back({ta.coeff * tb.coeff, PauliWord(n, std::move(letters))});
    }
  }
  return OperatorSum(n, std::move(terms));
}

double max_coefficient_difference(const OperatorSum& a, const OperatorSum& b) {
  return (a - b).max_abs_coefficient();
}

// ------------------------------------------------------------ DenseOperator

DenseOperator::DenseOperator(std::size_t n_qubits, Eigen::MatrixXcd matrix)
    : n_qubits_(n_qubits), matrix_(std::move(matrix)) {
  const Eigen::Index d = Eigen::Index{1} << n_qubits_;
  if (matrix_.rows() != d || matrix_.cols() != d) {
    throw DimensionMismatchError("matrix of size " +
                                 std::to_string(matrix_.rows()) + "x" +
                                 std::to_string(matrix_.cols()) +
                                 " does not act on " + std::to_string(n_qubits_) +
                                 " qubits");
  }
}

DenseOperator DenseOperator::identity(std::size_t n_qubits) {
  const Eigen::Index d = Eigen::Index{1} << n_qubits;
  return DenseOperator(n_qubits, Eigen::MatrixXcd::Identity(d, d));
}

DenseOperator DenseOperator::zero(std::size_t n_qubits) {
  const Eigen::Index d = Eigen::Index{1} << n_qubits;
  return DenseOperator(n_qubits, Eigen::MatrixXcd::Zero(d, d));
}

DenseOperator DenseOperator::adjoint() const {
  return DenseOperator(n_qubits_, matrix_.adjoint());
}

namespace {
void require_same_dim(const DenseOperator& a, const DenseOperator& b) {
  if (a.n_qubits() != b.n_qubits()) {
    throw DimensionMismatchError("operators act on " +
                                 std::to_string(a.n_qubits()) + " and " +
                                 std::to_string(b.n_qubits()) + " qubits");
  }
}
}  // namespace

DenseOperator operator+(const DenseOperator& a, const DenseOperator& b) {
  require_same_dim(a, b);
  return DenseOperator(a.n_qubits_, a.matrix_ + b.matrix_);
}

DenseOperator operator-(const DenseOperator& a, const DenseOperator& b) {
  require_same_dim(a, b);
  return DenseOperator(a.n_qubits_, a.matrix_ - b.matrix_);
}

DenseOperator operator*(const DenseOperator& a, const DenseOperator& b) {
  require_same_dim(a, b);
  return DenseOperator(a.n_qubits_, a.matrix_ * b.matrix_);
}

DenseOperator operator*(Complex s, const DenseOperator& a) {
  return DenseOperator(a.n_qubits_, s * a.matrix_);
}

DenseOperator operator*(double s, const DenseOperator& a) {
  return DenseOperator(a.n_qubits_, s * a.matrix_);
}

// ---------------------------------------------------------------- kernels

DenseOperator to_dense(const PauliWord& word, std::size_t qubit_limit) {
  return to_dense(OperatorSum(word.n_qubits(), {{1.0, word}}), qubit_limit);
}

DenseOperator to_dense(const OperatorSum& op, std::size_t qubit_limit) {
  check_dense_limit(op.n_qubits(), qubit_limit);
  const std::uint64_t d = std::uint64_t{1} << op.n_qubits();
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(d),
                                              static_cast<Eigen::Index>(d));
  for (const auto& t : op.terms()) {
    const std::uint64_t x = t.word.x_mask();
    const std::uint64_t z = t.word.z_mask();
    for (std::uint64_t col = 0; col < d; ++col) {
      m(static_cast<Eigen::Index>(col ^ x), static_cast<Eigen::Index>(col)) +=
          t.coeff * pauli_entry(x, z, col);
    }
  }
  return DenseOperator(op.n_qubits(), std::move(m));
}

bool is_unitary(const DenseOperator& u, double tol) {
  const auto& m = u.matrix();
  return (m.adjoint() * m - Eigen::MatrixXcd::Identity(m.rows(), m.cols()))
             .norm() <= tol;
}

bool is_hermitian(const DenseOperator& a, double tol) {
  const auto& m = a.matrix();
  return (m - m.adjoint()).norm() <= tol * std::max(1.0, m.norm());
}

DenseOperator conjugate(const DenseOperator& a, const DenseOperator& u,
                        double unitarity_tol) {
  require_same_dim(a, u);
  if (!is_unitary(u, unitarity_tol)) {
    throw NotUnitaryError("conjugate: operator is not unitary within tolerance");
  }
  return DenseOperator(a.n_qubits(), u.matrix().adjoint() * a.matrix() * u.matrix());
}

OperatorSum pauli_coefficients(const DenseOperator& a, double hermitian_tol) {
  if (!is_hermitian(a, hermitian_tol)) {
    throw NotHermitianError("pauli_coefficients: operator is not Hermitian");
  }
  const std::size_t n = a.n_qubits();
  const std::uint64_t d = std::uint64_t{1} << n;
  const auto& m = a.matrix();
  std::vector<PauliTerm> terms;
  for (std::uint64_t x = 0; x < d; ++x) {
    for (std::uint64_t z = 0; z < d; ++z) {
      Complex acc{0.0, 0.0};
      for (std::uint64_t col = 0; col < d; ++col) {
        acc += std::conj(pauli_entry(x, z, col)) *
               m(static_cast<Eigen::Index>(col ^ x), static_cast<Eigen::Index>(col));
      }
      const double c = acc.real() / static_cast<double>(d);
      if (std::abs(c) < kCoefficientDropTolerance) continue;
      std::map<std::size_t, Pauli> letters;
      for (std::size_t q = 0; q < n; ++q) {
        const std::uint64_t bit = qubit_bit(n, q);
        const bool xb = x & bit, zb = z & bit;
        if (xb && zb) letters.emplace(q, Pauli::Y);
        else if (xb) letters.emplace(q, Pauli::X);
        else if (zb) letters.emplace(q, Pauli::Z);
      }
      terms.push_back({c, PauliWord(n, std::move(letters))});
    }
  }
  return OperatorSum(n, std::move(terms));
}

HermitianExponential::HermitianExponential(const DenseOperator& a)
    : n_qubits_(a.n_qubits()) {
  if (!is_hermitian(a)) {
    throw NotHermitianError("matrix exponential requires a Hermitian operator");
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(a.matrix());
  if (solver.info() != Eigen::Success) {
    throw ConvergenceError("Hermitian eigendecomposition failed");
  }
  vectors_ = solver.eigenvectors();
  values_ = solver.eigenvalues();
}

DenseOperator HermitianExponential::at(double t) const {
  Eigen::VectorXcd phases(values_.size());
  for (Eigen::Index k = 0; k < values_.size(); ++k) {
    phases(k) = std::polar(1.0, -values_(k) * t);
  }
  return DenseOperator(n_qubits_,
                       vectors_ * phases.asDiagonal() * vectors_.adjoint());
}

DenseOperator matrix_exp(const DenseOperator& a, double t) {
  if (t == 0.0) return DenseOperator::identity(a.n_qubits());
  return HermitianExponential(a).at(t);
}

DenseOperator matrix_exp(const OperatorSum& a, double t) {
  return matrix_exp(to_dense(a), t);
}

double frobenius_norm(const DenseOperator& a) { return a.matrix().norm(); }

double operator_norm(const DenseOperator& a) {
  if (a.matrix().isZero(0.0)) return 0.0;
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(a.matrix());
  return svd.singularValues()(0);
}

DenseOperator kron(const DenseOperator& a, const DenseOperator& b) {
  const auto& ma = a.matrix();
  const auto& mb = b.matrix();
  Eigen::MatrixXcd out(ma.rows() * mb.rows(), ma.cols() * mb.cols());
  for (Eigen::Index i = 0; i < ma.rows(); ++i) {
    for (Eigen::Index j = 0; j < ma.cols(); ++j) {
      out.block(i * mb.rows(), j * mb.cols(), mb.rows(), mb.cols()) = ma(i, j) * mb;
    }
  }
  return DenseOperator(a.n_qubits() + b.n_qubits(), std::move(out));
}

DenseOperator lift(const DenseOperator& u, std::size_t total_qubits) {
  if (total_qubits < u.n_qubits()) {
    throw DimensionMismatchError("cannot lift operator to fewer qubits");
  }
  if (total_qubits == u.n_qubits()) return u;
  return kron(u, DenseOperator::identity(total_qubits - u.n_qubits()));
}

}  // namespace eulersim
