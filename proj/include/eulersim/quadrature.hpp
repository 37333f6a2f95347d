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
#include <cstddef>
#include <functional>
#include <memory>
#include <utility>
#include <vector>

namespace eulersim {

/// Fixed-order Gauss-Legendre rule, with nodes and weights from GSL.
class GaussLegendre {
 public:
  explicit GaussLegendre(std::size_t order);

  std::size_t order() const { return nodes_.size(); }

  /// (node, weight) pairs mapped onto [a, b].
  std::vector<std::pair<double, double>> on(double a, double b) const;

 private:
  std::vector<double> nodes_;    // on [-1, 1]
  std::vector<double> weights_;
};

struct QuadratureOptions {
  std::size_t initial_order = 64;
  std::size_t max_order = 4096;
  /// Stop once successive results differ by less than this (max-abs entry).
  double tolerance = 1e-11;
};

/// Integral of a matrix-valued function over [a, b]: Gauss-Legendre with
/// the order doubled until two successive results agree. Returns the
/// higher-order result. Throws ConvergenceError past max_order.
Eigen::MatrixXcd integrate_matrix(
    const std::function<Eigen::MatrixXcd(double)>& f, double a, double b,
    const QuadratureOptions& options = {});

}  // namespace eulersim
