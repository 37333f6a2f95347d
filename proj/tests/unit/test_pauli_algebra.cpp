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

#include <gtest/gtest.h>

#include <random>

#include "eulersim/errors.hpp"
#include "eulersim/pauli_algebra.hpp"
#include "test_support.hpp"

namespace eulersim {
namespace {

using testing::Mat;
using testing::word_matrix;

TEST(PauliWord, ParsesSpacedAndCompactForms) {
  const auto a = PauliWord::parse(3, "X0 Z2");
  const auto b = PauliWord::parse(3, "X0Z2");
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.at(0), Pauli::X);
  EXPECT_FALSE(a.at(1).has_value());
  EXPECT_EQ(a.at(2), Pauli::Z);
  EXPECT_TRUE(PauliWord::parse(2, "I").is_identity());
  EXPECT_EQ(a.to_string(), "X0 Z2");
  EXPECT_EQ(PauliWord(2).to_string(), "I");
}

TEST(PauliWord, RejectsBadInput) {
  EXPECT_THROW(PauliWord::parse(2, "X2"), ConfigError);
  EXPECT_THROW(PauliWord::parse(2, "Q0"), ConfigError);
  EXPECT_THROW(PauliWord::parse(2, "X0 Z0"), ConfigError);
}

TEST(PauliWord, MasksPutQubitZeroOnTheHighBit) {
  const auto w = PauliWord::parse(3, "X0 Y1 Z2");
  EXPECT_EQ(w.x_mask(), 0b110u);
  EXPECT_EQ(w.z_mask(), 0b011u);
}

TEST(PauliWord, EmbeddingShiftsQubits) {
  const auto w = PauliWord::parse(2, "X0 Z1").embedded(4, 1);
  EXPECT_EQ(w, PauliWord::parse(4, "X1 Z2"));
}

TEST(OperatorSum, NormalizesDuplicatesAndZeros) {
  OperatorSum a(2, {{1.0, PauliWord::parse(2, "X0")},
                    {0.5, PauliWord::parse(2, "X0")},
                    {2.0, PauliWord::parse(2, "Z1")},
                    {-2.0, PauliWord::parse(2, "Z1")}});
  ASSERT_EQ(a.size(), 1u);
  EXPECT_DOUBLE_EQ(a.coefficient(PauliWord::parse(2, "X0")), 1.5);
  EXPECT_DOUBLE_EQ(a.coefficient(PauliWord::parse(2, "Z1")), 0.0);
}

TEST(OperatorSum, ArithmeticAndTensor) {
  const auto a = OperatorSum::term(1, 2.0, "X0");
  const auto b = OperatorSum::term(1, 3.0, "Z0");
  const auto t = tensor(a, b);
  EXPECT_EQ(t.n_qubits(), 2u);
  EXPECT_DOUBLE_EQ(t.coefficient(PauliWord::parse(2, "X0 Z1")), 6.0);
  const auto d = (a + b) - 2.0 * a;
  EXPECT_DOUBLE_EQ(d.coefficient(PauliWord::parse(1, "X0")), -2.0);
  EXPECT_DOUBLE_EQ(max_coefficient_difference(a, b), 3.0);
  EXPECT_THROW(a + OperatorSum(2), DimensionMismatchError);
}

TEST(ToDense, MatchesKroneckerOracle) {
  const char* words[] = {"XIZ", "YYI", "IZX", "ZXY", "III"};
  for (const char* letters : words) {
    std::map<std::size_t, Pauli> m;
    for (std::size_t q = 0; q < 3; ++q) {
      if (letters[q] != 'I') m[q] = pauli_from_char(letters[q]);
    }
    const Mat expected = word_matrix(letters);
    const Mat got = to_dense(PauliWord(3, m)).matrix();
    EXPECT_LT(testing::max_abs(got - expected), 1e-15) << letters;
  }
}

TEST(ToDense, RespectsQubitLimit) {
  EXPECT_THROW(to_dense(OperatorSum::term(5, 1.0, "X0"), 4), DimensionLimitError);
}

TEST(PauliCoefficients, RoundTripsRandomOperators) {
  std::mt19937_64 rng(101);
  for (int trial = 0; trial < 20; ++trial) {
    const auto op = testing::random_operator(rng, 3, 6);
    const auto back = pauli_coefficients(to_dense(op));
    EXPECT_LT(max_coefficient_difference(op, back), 1e-13);
  }
}

TEST(PauliCoefficients, RejectsNonHermitian) {
  Mat m = Mat::Zero(2, 2);
  m(0, 1) = 1.0;
  EXPECT_THROW(pauli_coefficients(DenseOperator(1, m)), NotHermitianError);
}

TEST(MatrixExp, MatchesTaylorOracle) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    const Mat h = testing::random_hermitian(rng, 8);
    const double t = 0.1 + 0.3 * trial;
    const Mat expected = testing::taylor_exp(h, t);
    EXPECT_LT(testing::max_abs(matrix_exp(DenseOperator(3, h), t).matrix() - expected), 1e-11);
    const HermitianExponential e(DenseOperator(3, h));
    EXPECT_LT(testing::max_abs(e.at(t).matrix() - expected), 1e-11);
  }
}

TEST(MatrixExp, PauliRotationClosedForm) {
  // exp(-i t X) = cos t I - i sin t X.
  const double t = 0.37;
  const Mat expected = std::cos(t) * Mat::Identity(2, 2) +
                       testing::C(0, -std::sin(t)) * word_matrix("X");
  EXPECT_LT(testing::max_abs(matrix_exp(OperatorSum::term(1, 1.0, "X0"), t).matrix() - expected),
            1e-15);
}

TEST(Conjugate, PauliFrameChange) {
  // exp(i pi/4 Z) X exp(-i pi/4 Z) = -Y, so with u = exp(-i pi/4 Z),
  // u^dagger X u = -Y.
  const auto u = matrix_exp(OperatorSum::term(1, 1.0, "Z0"), M_PI / 4);
  const auto c = pauli_coefficients(conjugate(to_dense(OperatorSum::term(1, 1.0, "X0")), u));
  EXPECT_NEAR(c.coefficient(PauliWord::parse(1, "Y0")), -1.0, 1e-14);
  EXPECT_EQ(c.size(), 1u);
}

TEST(Conjugate, RejectsNonUnitary) {
  const auto a = DenseOperator::identity(1);
  EXPECT_THROW(conjugate(a, 2.0 * a), NotUnitaryError);
  EXPECT_THROW(conjugate(a, DenseOperator::identity(2)), DimensionMismatchError);
}

TEST(Norms, FrobeniusAndSpectral) {
  const auto h = to_dense(OperatorSum::term(2, 1.0, "X0 X1") + OperatorSum::term(2, 1.0, "Y0 Y1") +
                          OperatorSum::term(2, 1.0, "Z0 Z1"));
  EXPECT_NEAR(frobenius_norm(h), std::sqrt(12.0), 1e-14);
  EXPECT_NEAR(operator_norm(h), 3.0, 1e-13);
  EXPECT_TRUE(is_hermitian(h));
  EXPECT_FALSE(is_unitary(h));
}

TEST(LiftAndKron, MatchOracle) {
  std::mt19937_64 rng(3);
  const Mat u = testing::random_unitary(rng, 2);
  const Mat v = testing::random_unitary(rng, 4);
  const auto k = kron(DenseOperator(1, u), DenseOperator(2, v));
  EXPECT_LT(testing::max_abs(k.matrix() - testing::kron2(u, v)), 1e-15);
  const auto l = lift(DenseOperator(1, u), 3);
  EXPECT_LT(testing::max_abs(l.matrix() - testing::kron2(u, Mat::Identity(4, 4))), 1e-15);
}

// Property: to_dense is linear and multiplicative up to the Pauli phase rule,
// so tr(P_a P_b) / 2^n = delta_ab for all words.
TEST(PauliProperty, WordsAreOrthonormal) {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 50; ++trial) {
    const auto a = testing::random_operator(rng, 3, 1);
    const auto b = testing::random_operator(rng, 3, 1);
    if (a.empty() || b.empty()) continue;
    const auto& wa = a.terms()[0].word;
    const auto& wb = b.terms()[0].word;
    const auto pa = to_dense(wa), pb = to_dense(wb);
    const Complex overlap = (pa.matrix() * pb.matrix()).trace() / 8.0;
    EXPECT_NEAR(std::abs(overlap), wa == wb ? 1.0 : 0.0, 1e-14);
  }
}

}  // namespace
}  // namespace eulersim
