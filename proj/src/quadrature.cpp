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

#include "eulersim/quadrature.hpp"

#include <gsl/gsl_integration.h>

#include "eulersim/errors.hpp"

namespace eulersim {

GaussLegendre::GaussLegendre(std::size_t order) {
  if (order == 0) throw ConfigError("Gauss-Legendre order must be positive");
  std::unique_ptr<gsl_integration_glfixed_table,
                  decltype(&gsl_integration_glfixed_table_free)>
      table(gsl_integration_glfixed_table_alloc(order),
            &gsl_integration_glfixed_table_free);
  if (!table) throw Error("gsl_integration_glfixed_table_alloc failed");
  nodes_.resize(order);
  weights_.resize(order);
  for (std::size_t i = 0; i < order; ++i) {
    gsl_integration_glfixed_point(-1.0, 1.0, i, &nodes_[i], &weights_[i],
                                  table.get());
  }
}

std::vector<std::pair<double, double>> GaussLegendre::on(double a, double b) const {
  const double half = 0.5 * (b - a);
  const double mid = 0.5 * (a + b);
  std::vector<std::pair<double, double>> out;
  out.reserve(nodes_.size());
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    out.emplace_back(mid + half * nodes_[i], half * weights_[i]);
  }
  return out;
}

namespace {

Eigen::MatrixXcd apply_rule(const std::function<Eigen::MatrixXcd(double)>& f,
                            double a, double b, std::size_t order) {
  Eigen::MatrixXcd acc;
  for (const auto& [x, w] : GaussLegendre(order).on(a, b)) {
    if (acc.size() == 0) acc = w * f(x);
    else acc.noalias() += w * f(x);
  }
  return acc;
}

}  // namespace

Eigen::MatrixXcd integrate_matrix(
    const std::function<Eigen::MatrixXcd(double)>& f, double a, double b,
    const QuadratureOptions& options) {
  std::size_t order = options.initial_order;
  Eigen::MatrixXcd previous = apply_rule(f, a, b, order);
  if (a == b) return Eigen::MatrixXcd::Zero(previous.rows(), previous.cols());
  while (2 * order <= options.max_order) {
    order *= 2;
    Eigen::MatrixXcd current = apply_rule(f, a, b, order);
    const double change = (current - previous).cwiseAbs().maxCoeff();
    if (change < options.tolerance) return current;
    previous = std::move(current);
  }
  throw ConvergenceError("Gauss-Legendre quadrature did not converge by order " +
                         std::to_string(options.max_order));
}

}  // namespace eulersim
