#include "cevian/rank_search.hpp"

#include <cmath>
#include <limits>
#include <random>

#include "cevian/error.hpp"
#include "cevian/sampling.hpp"

namespace cevian::rank_search {

namespace {

struct Masked {
  Eigen::MatrixXd values;  // zeros where unspecified
  std::vector<std::vector<Eigen::Index>> row_cols;
  std::vector<std::vector<Eigen::Index>> col_rows;
};

// Diagonal scalings so that every row and column of the specified entries has
// comparable norm. Rank and the set of completions are unchanged.
struct Scaling {
  Eigen::VectorXd row;
  Eigen::VectorXd col;
};

Scaling equilibrate(const Masked& mask) {
  const auto rows = mask.values.rows();
  const auto cols = mask.values.cols();
  Scaling s{Eigen::VectorXd::Ones(rows), Eigen::VectorXd::Ones(cols)};
  for (int pass = 0; pass < 10; ++pass) {
    for (Eigen::Index r = 0; r < rows; ++r) {
      double sum = 0.0;
      for (auto c : mask.row_cols[static_cast<std::size_t>(r)]) sum += std::pow(mask.values(r, c) * s.col(c), 2);
      if (sum > 0.0) s.row(r) = std::sqrt(static_cast<double>(mask.row_cols[static_cast<std::size_t>(r)].size()) / sum);
    }
    for (Eigen::Index c = 0; c < cols; ++c) {
      double sum = 0.0;
      for (auto r : mask.col_rows[static_cast<std::size_t>(c)]) sum += std::pow(mask.values(r, c) * s.row(r), 2);
      if (sum > 0.0) s.col(c) = std::sqrt(static_cast<double>(mask.col_rows[static_cast<std::size_t>(c)].size()) / sum);
    }
  }
  return s;
}

Masked scaled(const Masked& mask, const Scaling& s) {
  Masked out = mask;
  out.values = s.row.asDiagonal() * mask.values * s.col.asDiagonal();
  return out;
}

Masked to_masked(const simplex::PartialMatrix& m) {
  const auto rows = static_cast<Eigen::Index>(m.rows());
  const auto cols = static_cast<Eigen::Index>(m.cols());
  Masked out{Eigen::MatrixXd::Zero(rows, cols), std::vector<std::vector<Eigen::Index>>(m.rows()),
             std::vector<std::vector<Eigen::Index>>(m.cols())};
  for (Eigen::Index r = 0; r < rows; ++r) {
    for (Eigen::Index c = 0; c < cols; ++c) {
      const auto& e = m(static_cast<std::size_t>(r), static_cast<std::size_t>(c));
      if (!e) continue;
      out.values(r, c) = to_double(*e);
      out.row_cols[static_cast<std::size_t>(r)].push_back(c);
      out.col_rows[static_cast<std::size_t>(c)].push_back(r);
    }
  }
  return out;
}

double residual_of(const Masked& mask, const Eigen::MatrixXd& x) {
  double err = 0.0, ref = 0.0;
  for (std::size_t r = 0; r < mask.row_cols.size(); ++r) {
    const auto ri = static_cast<Eigen::Index>(r);
    for (auto c : mask.row_cols[r]) {
      const double d = x(ri, c) - mask.values(ri, c);
      err += d * d;
      ref += mask.values(ri, c) * mask.values(ri, c);
    }
  }
  return ref > 0.0 ? std::sqrt(err / ref) : std::sqrt(err);
}

// Ridge weight for the first sweeps, decayed geometrically and then dropped.
constexpr double kRidgeStart = 1.0;
constexpr double kRidgeDecay = 0.8;
constexpr double kRidgeFloor = 1e-14;

// Minimum-norm least squares with an optional ridge, so under-determined rows
// and columns stay bounded.
Eigen::VectorXd solve_ls(Eigen::MatrixXd lhs, Eigen::VectorXd rhs, double ridge) {
  if (ridge > 0.0) {
    const auto n = lhs.rows();
    const auto k = lhs.cols();
    lhs.conservativeResize(n + k, Eigen::NoChange);
    lhs.bottomRows(k) = std::sqrt(ridge) * Eigen::MatrixXd::Identity(k, k);
    rhs.conservativeResize(n + k);
    rhs.tail(k).setZero();
  }
  return lhs.completeOrthogonalDecomposition().solve(rhs);
}

struct RestartOutcome {
  Eigen::MatrixXd a;
  Eigen::MatrixXd b;
  double residual = std::numeric_limits<double>::infinity();
  int iterations = 0;
};

void sweep(const Masked& mask, int rank, double ridge, Eigen::MatrixXd& a, Eigen::MatrixXd& b) {
  for (Eigen::Index r = 0; r < a.rows(); ++r) {
    const auto& idx = mask.row_cols[static_cast<std::size_t>(r)];
    Eigen::MatrixXd lhs(static_cast<Eigen::Index>(idx.size()), rank);
    Eigen::VectorXd rhs(static_cast<Eigen::Index>(idx.size()));
    for (std::size_t t = 0; t < idx.size(); ++t) {
      const auto ti = static_cast<Eigen::Index>(t);
      lhs.row(ti) = b.col(idx[t]).transpose();
      rhs(ti) = mask.values(r, idx[t]);
    }
    a.row(r) = solve_ls(std::move(lhs), std::move(rhs), ridge).transpose();
  }
  for (Eigen::Index c = 0; c < b.cols(); ++c) {
    const auto& idx = mask.col_rows[static_cast<std::size_t>(c)];
    Eigen::MatrixXd lhs(static_cast<Eigen::Index>(idx.size()), rank);
    Eigen::VectorXd rhs(static_cast<Eigen::Index>(idx.size()));
    for (std::size_t t = 0; t < idx.size(); ++t) {
      const auto ti = static_cast<Eigen::Index>(t);
      lhs.row(ti) = a.row(idx[t]);
      rhs(ti) = mask.values(idx[t], c);
    }
    b.col(c) = solve_ls(std::move(lhs), std::move(rhs), ridge);
  }
}

// Moves further along the last sweep's direction while that lowers the
// residual, with step it^(1/3) halved toward 1 on rejection.
void extrapolate(const Masked& mask, int it, const Eigen::MatrixXd& a0, const Eigen::MatrixXd& b0,
                 Eigen::MatrixXd& a, Eigen::MatrixXd& b) {
  const double base = residual_of(mask, a * b);
  double step = std::cbrt(static_cast<double>(it));
  for (int attempt = 0; attempt < 4 && step >= 1.05; ++attempt) {
    Eigen::MatrixXd ae = a0 + step * (a - a0);
    Eigen::MatrixXd be = b0 + step * (b - b0);
    if (residual_of(mask, ae * be) < base) {
      a = std::move(ae);
      b = std::move(be);
      return;
    }
    step = 1.0 + (step - 1.0) / 2.0;
  }
}

// ALS on the equilibrated matrix; factors and residual refer to the original.
RestartOutcome run_restart(const Masked& original, const Masked& mask, const Scaling& scaling, int rank,
                           const RankSearchConfig& cfg, std::uint64_t seed) {
  const auto rows = mask.values.rows();
  const auto cols = mask.values.cols();
  Rng rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  RestartOutcome out;
  out.a = Eigen::MatrixXd::NullaryExpr(rows, rank, [&]() { return normal(rng); });
  out.b = Eigen::MatrixXd::NullaryExpr(rank, cols, [&]() { return normal(rng); });
  const Eigen::VectorXd row_back = scaling.row.cwiseInverse();
  const Eigen::VectorXd col_back = scaling.col.cwiseInverse();

  double ridge = kRidgeStart;
  for (int it = 1; it <= cfg.max_iter; ++it) {
    const Eigen::MatrixXd a0 = out.a;
    const Eigen::MatrixXd b0 = out.b;
    sweep(mask, rank, ridge, out.a, out.b);
    if (ridge == 0.0) extrapolate(mask, it, a0, b0, out.a, out.b);
    ridge = ridge * kRidgeDecay < kRidgeFloor ? 0.0 : ridge * kRidgeDecay;

    out.iterations = it;
    out.residual = residual_of(original, row_back.asDiagonal() * (out.a * out.b) * col_back.asDiagonal());
    if (out.residual <= cfg.tol) break;
  }
  out.a = row_back.asDiagonal() * out.a;
  out.b = out.b * col_back.asDiagonal();
  return out;
}

Eigen::MatrixXd orthonormal_row_basis(const Eigen::MatrixXd& rows_in, Eigen::Index count) {
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(rows_in, Eigen::ComputeFullV);
  return svd.matrixV().leftCols(count).transpose();
}

}  // namespace

std::string_view to_string(Status s) noexcept { return s == Status::Found ? "Found" : "NotFoundWithinBudget"; }

void validate(const RankSearchConfig& cfg, const simplex::PartialMatrix& m) {
  if (!(cfg.tol > 0.0)) throw Error(ErrorCode::InvalidArgument, "tol must be positive");
  if (cfg.max_iter <= 0) throw Error(ErrorCode::InvalidArgument, "max_iter must be positive");
  if (cfg.restarts <= 0) throw Error(ErrorCode::InvalidArgument, "restarts must be positive");
  const auto limit = std::min(m.rows(), m.cols());
  if (cfg.r < 0 || static_cast<std::size_t>(cfg.r) + 1 > limit) {
    throw Error(ErrorCode::InvalidArgument,
                "r must satisfy 0 <= r and r+1 <= " + std::to_string(limit) + ", got r=" + std::to_string(cfg.r));
  }
}

simplex::PartialMatrix construct_rank_instance(int n, int k, int r, std::uint64_t seed) {
  if (r < 0 || r + 1 > n + 1) {
    throw Error(ErrorCode::InvalidArgument, "need 0 <= r <= n, got r=" + std::to_string(r));
  }
  const auto q = static_cast<std::size_t>(r) + 1;
  const auto cols = static_cast<std::size_t>(n) + 1;
  Rng rng(seed);

  RationalMatrix b(q, cols);
  do {
    for (std::size_t i = 0; i < q; ++i) {
      for (std::size_t j = 0; j < cols; ++j) b(i, j) = random_nonzero_rational(rng);
    }
  } while (rank(b) != q);

  std::vector<IndexSet> faces = subsets_of_size(n, k + 1);
  std::vector<std::vector<simplex::PartialMatrix::Entry>> rows;
  for (const auto& face : faces) {
    std::vector<simplex::PartialMatrix::Entry> row(cols);
    bool ok = false;
    while (!ok) {
      RationalVector coeff(q);
      for (auto& c : coeff) c = random_nonzero_rational(rng);
      ok = true;
      for (int j : face.members()) {
        Rational v = 0;
        for (std::size_t i = 0; i < q; ++i) v += coeff[i] * b(i, static_cast<std::size_t>(j));
        if (is_zero(v)) {
          ok = false;
          break;
        }
        row[static_cast<std::size_t>(j)] = std::move(v);
      }
    }
    rows.push_back(std::move(row));
  }
  return simplex::PartialMatrix(n, k, std::move(faces), std::move(rows));
}

double masked_relative_residual(const simplex::PartialMatrix& m, const Eigen::MatrixXd& completion) {
  if (completion.rows() != static_cast<Eigen::Index>(m.rows()) || completion.cols() != static_cast<Eigen::Index>(m.cols())) {
    throw Error(ErrorCode::DimensionMismatch, "completion shape differs from the partial matrix");
  }
  return residual_of(to_masked(m), completion);
}

TransversalResult low_rank_complete(const simplex::PartialMatrix& m, const RankSearchConfig& cfg) {
  validate(cfg, m);
  const Masked original = to_masked(m);
  const Scaling scaling = equilibrate(original);
  const Masked mask = scaled(original, scaling);
  const int rank = cfg.r + 1;

  TransversalResult result;
  result.residual = std::numeric_limits<double>::infinity();
  RestartOutcome best;
  for (int restart = 0; restart < cfg.restarts; ++restart) {
    const std::uint64_t restart_seed = cfg.seed ^ (0x9E3779B97F4A7C15ULL * static_cast<std::uint64_t>(restart + 1));
    RestartOutcome outcome = run_restart(original, mask, scaling, rank, cfg, restart_seed);
    // Strict comparison keeps the lowest restart index on ties.
    if (outcome.residual < result.residual) {
      result.residual = outcome.residual;
      result.restart = restart;
      result.iterations = outcome.iterations;
      best = std::move(outcome);
    }
    if (result.residual <= cfg.tol) break;
  }
  if (result.residual <= cfg.tol) {
    result.status = Status::Found;
    result.completion = best.a * best.b;
    result.basis = orthonormal_row_basis(best.b, rank);
  }
  return result;
}

TransversalCheck verify_transversal(const simplex::FaceInstance& inst, const Eigen::MatrixXd& basis, double tol) {
  const auto cols = static_cast<Eigen::Index>(inst.n()) + 1;
  if (basis.rows() == 0 || basis.cols() != cols) {
    throw Error(ErrorCode::InvalidArgument, "basis vectors must have n+1 coordinates");
  }
  if (basis.rows() > cols) throw Error(ErrorCode::InvalidArgument, "more basis vectors than coordinates");
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(basis, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  if (sv(sv.size() - 1) <= 1e-12 * sv(0)) throw Error(ErrorCode::InvalidArgument, "basis is linearly dependent");
  const Eigen::MatrixXd q = svd.matrixV().leftCols(basis.rows());  // (n+1) x (r+1)

  TransversalCheck check{true, {}};
  for (std::size_t f = 0; f < inst.faces().size(); ++f) {
    const auto& face = inst.faces()[f];
    const auto& p = inst.points()[f];
    const auto size = static_cast<Eigen::Index>(face.size());
    Eigen::VectorXd local(size);
    for (Eigen::Index i = 0; i < size; ++i) local(i) = to_double(p[static_cast<std::size_t>(i)]);

    // Orthonormal complement of P_I inside the face coordinates: the linear
    // forms cutting out span(P_I, opposite face).
    Eigen::HouseholderQR<Eigen::MatrixXd> qr(local.normalized());
    const Eigen::MatrixXd full_q = qr.householderQ();
    Eigen::MatrixXd forms = Eigen::MatrixXd::Zero(size - 1, cols);
    for (Eigen::Index i = 0; i < size; ++i) forms.col(face[static_cast<std::size_t>(i)]) = full_q.row(i).tail(size - 1).transpose();

    SubsetCheck sub{face, 0.0, true};
    if (basis.rows() <= size - 1) {
      const Eigen::MatrixXd restricted = forms * q;
      Eigen::JacobiSVD<Eigen::MatrixXd> angles(restricted);
      sub.sigma_min = angles.singularValues().minCoeff();
      sub.passes = sub.sigma_min <= tol;
    }
    check.passes = check.passes && sub.passes;
    check.subsets.push_back(std::move(sub));
  }
  return check;
}

}  // namespace cevian::rank_search
