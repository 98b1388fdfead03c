#pragma once

#include <vector>

#include <Eigen/Core>

#include "hin/corpus.hpp"
#include "hin/embedding.hpp"

namespace hin {

/// Equal-mass transportation LP instance: move `supply` onto `demand` at
/// per-route unit costs `cost` (|supply| x |demand|). Both marginals must
/// sum to the same mass (1 for nBOW inputs) within 1e-6.
struct TransportProblem {
  Eigen::VectorXd supply;
  Eigen::VectorXd demand;
  Eigen::MatrixXd cost;
};

struct TransportFlow {
  int src = 0;
  int dst = 0;
  double amount = 0;
};

/// Optimal basic solution: strictly positive flows only, at most
/// |supply| + |demand| - 1 of them; row/column sums reproduce the marginals
/// within 1e-7.
struct TransportSolution {
  std::vector<TransportFlow> flows;
  double objective = 0;
};

/// Exact transportation simplex (northwest-corner start, u-v optimality
/// iterations, epsilon-perturbed marginals against degenerate pivots).
/// The returned objective is the global LP minimum.
TransportSolution solve_transport(const TransportProblem& problem);

/// Word Mover's Distance between two non-degenerate nBOW vectors: the
/// minimum cumulative embedding-space cost of transporting one distribution
/// onto the other, restricted to the union of the two supports.
double wmd(const NbowVector& a, const NbowVector& b,
           const EmbeddingTable& table);

}  // namespace hin
