#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "cevian/simplex.hpp"

/// Floating-point search for a rank-(r+1) completion of the face matrix. A
/// completion certifies an r-dimensional linear space meeting every cevian
/// span; failing to find one proves nothing.
namespace cevian::rank_search {

struct RankSearchConfig {
  int r = 0;  // target projective dimension; matrix rank r + 1
  double tol = 1e-8;
  int max_iter = 500;
  int restarts = 10;
  std::uint64_t seed = 0;
};

/// InvalidArgument unless tol > 0, max_iter > 0, restarts > 0, r >= 0 and
/// r + 1 <= min(rows, n + 1).
void validate(const RankSearchConfig& cfg, const simplex::PartialMatrix& m);

enum class Status { Found, NotFoundWithinBudget };
std::string_view to_string(Status s) noexcept;

struct TransversalResult {
  Status status = Status::NotFoundWithinBudget;
  /// A B on success, rows x (n+1).
  std::optional<Eigen::MatrixXd> completion;
  /// r+1 orthonormal rows spanning the row space of B.
  std::optional<Eigen::MatrixXd> basis;
  /// Best masked relative residual seen over all restarts.
  double residual = 0.0;
  int restart = -1;  // restart that produced `residual`
  int iterations = 0;
};

/// Rows c_I B of a random full-rank (r+1) x (n+1) rational matrix B, with c_I
/// resampled until the entries in the columns of I are nonzero. Only those
/// entries are kept, so a rank-(r+1) completion exists by construction.
simplex::PartialMatrix construct_rank_instance(int n, int k, int r, std::uint64_t seed);

/// ||P(X - M)||_F / ||P(M)||_F over specified entries P.
double masked_relative_residual(const simplex::PartialMatrix& m, const Eigen::MatrixXd& completion);

/// Masked alternating least squares over A (rows x (r+1)) and B ((r+1) x (n+1))
/// with seeded random restarts. Runs on a row/column equilibrated copy, with a
/// decaying ridge in the early sweeps and extrapolated steps afterwards. Stops
/// at the first restart whose residual drops to cfg.tol.
TransversalResult low_rank_complete(const simplex::PartialMatrix& m, const RankSearchConfig& cfg);

struct SubsetCheck {
  IndexSet face;
  /// Sine of the smallest principal angle between the candidate space and the
  /// cevian span of this face.
  double sigma_min = 0.0;
  bool passes = false;
};

struct TransversalCheck {
  bool passes = false;
  std::vector<SubsetCheck> subsets;
};

/// Checks that span(basis rows) meets span(P_I, opposite face of I) for every
/// face, to tolerance `tol`. InvalidArgument for a rank-deficient basis.
TransversalCheck verify_transversal(const simplex::FaceInstance& inst, const Eigen::MatrixXd& basis, double tol);

}  // namespace cevian::rank_search
