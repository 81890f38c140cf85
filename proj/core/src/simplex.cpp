#include "cevian/simplex.hpp"

#include <algorithm>

#include "cevian/error.hpp"
#include "cevian/sampling.hpp"

namespace cevian::simplex {

namespace {

void check_arity(int n, int k) {
  if (n < 2 || k < 1 || k > n - 1) {
    throw Error(ErrorCode::InvalidArgument,
                "need n >= 2 and 1 <= k <= n-1, got n=" + std::to_string(n) + " k=" + std::to_string(k));
  }
}

void require_torus(bool on_torus) {
  if (!on_torus) {
    throw Error(ErrorCode::OffTorus,
                "a face coordinate vanishes; the algebraic criteria are stated only where every coordinate is nonzero "
                "(use the geometric oracle instead)");
  }
}

}  // namespace

std::size_t face_count(int n, int k) {
  std::size_t result = 1;
  for (int i = 1; i <= k + 1; ++i) {
    result = result * static_cast<std::size_t>(n + 1 - (k + 1) + i) / static_cast<std::size_t>(i);
  }
  return result;
}

FaceInstance::FaceInstance(int n, int k, std::vector<std::pair<IndexSet, ProjectivePoint>> entries) : n_(n), k_(k) {
  check_arity(n, k);
  if (entries.size() != face_count(n, k)) {
    throw Error(ErrorCode::InvalidArgument, "expected " + std::to_string(face_count(n, k)) + " faces, got " +
                                                std::to_string(entries.size()));
  }
  std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const auto& [face, point] = entries[i];
    face.check_within(n);
    if (face.size() != static_cast<std::size_t>(k) + 1) {
      throw Error(ErrorCode::InvalidArgument, "face " + to_string(face) + " does not have k+1 members");
    }
    if (i > 0 && entries[i - 1].first == face) {
      throw Error(ErrorCode::InvalidArgument, "face " + to_string(face) + " listed twice");
    }
    if (point.size() != face.size()) {
      throw Error(ErrorCode::InvalidArgument, "point on face " + to_string(face) + " must have " +
                                                  std::to_string(face.size()) + " coordinates");
    }
  }
  faces_.reserve(entries.size());
  points_.reserve(entries.size());
  for (auto& [face, point] : entries) {
    faces_.push_back(std::move(face));
    points_.push_back(std::move(point));
  }
}

std::size_t FaceInstance::index_of(const IndexSet& face) const {
  const auto it = std::lower_bound(faces_.begin(), faces_.end(), face);
  if (it == faces_.end() || *it != face) {
    throw Error(ErrorCode::InvalidIndexSet, to_string(face) + " is not a face of this instance");
  }
  return static_cast<std::size_t>(it - faces_.begin());
}

const ProjectivePoint& FaceInstance::point(const IndexSet& face) const { return points_[index_of(face)]; }

const Rational& FaceInstance::coordinate(const IndexSet& face, int j) const {
  const auto pos = face.position_of(j);
  if (!pos) throw Error(ErrorCode::InvalidIndexSet, std::to_string(j) + " is not in " + to_string(face));
  return point(face)[*pos];
}

bool FaceInstance::on_torus() const {
  return std::none_of(points_.begin(), points_.end(), [](const ProjectivePoint& p) { return p.has_zero_coordinate(); });
}

FaceInstance FaceInstance::with_point(const IndexSet& face, ProjectivePoint p) const {
  if (p.size() != face.size()) throw Error(ErrorCode::InvalidArgument, "replacement point has the wrong size");
  FaceInstance copy = *this;
  copy.points_[index_of(face)] = std::move(p);
  return copy;
}

PartialMatrix::PartialMatrix(int n, int k, std::vector<IndexSet> row_faces, std::vector<std::vector<Entry>> rows)
    : n_(n), k_(k), row_faces_(std::move(row_faces)), rows_(std::move(rows)) {
  check_arity(n, k);
  if (rows_.size() != row_faces_.size()) throw Error(ErrorCode::InvalidArgument, "row count differs from face count");
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    if (rows_[r].size() != cols()) throw Error(ErrorCode::InvalidArgument, "row length must be n+1");
    row_faces_[r].check_within(n);
    for (std::size_t c = 0; c < cols(); ++c) {
      if (rows_[r][c].has_value() != row_faces_[r].contains(static_cast<int>(c))) {
        throw Error(ErrorCode::InvalidArgument, "entry (" + to_string(row_faces_[r]) + ", " + std::to_string(c) +
                                                    ") must be specified exactly when the column is in the face");
      }
    }
    (void)row_point(r);  // rejects an all-zero row
  }
}

ProjectivePoint PartialMatrix::row_point(std::size_t r) const {
  RationalVector coords;
  for (const auto& e : rows_[r]) {
    if (e) coords.push_back(*e);
  }
  return ProjectivePoint(std::move(coords));
}

bool PartialMatrix::on_torus() const {
  for (const auto& row : rows_) {
    for (const auto& e : row) {
      if (e && is_zero(*e)) return false;
    }
  }
  return true;
}

PartialMatrix build_matrix(const FaceInstance& inst) { return build_matrix(inst, inst.faces()); }

PartialMatrix build_matrix(const FaceInstance& inst, std::span<const IndexSet> row_order) {
  if (row_order.size() != inst.faces().size()) {
    throw Error(ErrorCode::InvalidArgument, "row order must list every face once");
  }
  std::vector<IndexSet> faces(row_order.begin(), row_order.end());
  std::vector<std::vector<PartialMatrix::Entry>> rows;
  rows.reserve(faces.size());
  std::vector<bool> seen(faces.size(), false);
  for (const auto& face : faces) {
    const auto idx = static_cast<std::size_t>(std::lower_bound(inst.faces().begin(), inst.faces().end(), face) -
                                              inst.faces().begin());
    if (idx == inst.faces().size() || inst.faces()[idx] != face || seen[idx]) {
      throw Error(ErrorCode::InvalidArgument, "row order must be a permutation of the faces");
    }
    seen[idx] = true;
    const auto& p = inst.points()[idx];
    std::vector<PartialMatrix::Entry> row(static_cast<std::size_t>(inst.n()) + 1);
    for (std::size_t i = 0; i < face.size(); ++i) row[static_cast<std::size_t>(face[i])] = p[i];
    rows.push_back(std::move(row));
  }
  return PartialMatrix(inst.n(), inst.k(), std::move(faces), std::move(rows));
}

FaceInstance to_instance(const PartialMatrix& m) {
  std::vector<std::pair<IndexSet, ProjectivePoint>> entries;
  for (std::size_t r = 0; r < m.rows(); ++r) entries.emplace_back(m.row_face(r), m.row_point(r));
  return FaceInstance(m.n(), m.k(), std::move(entries));
}

std::vector<MinorWitness> specified_minors(const PartialMatrix& m) {
  std::vector<MinorWitness> out;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t s = r + 1; s < m.rows(); ++s) {
      const IndexSet common = set_intersection(m.row_face(r), m.row_face(s));
      for (std::size_t a = 0; a < common.size(); ++a) {
        for (std::size_t b = a + 1; b < common.size(); ++b) {
          const auto i = static_cast<std::size_t>(common[a]);
          const auto j = static_cast<std::size_t>(common[b]);
          Rational value = *m(r, i) * *m(s, j) - *m(r, j) * *m(s, i);
          out.push_back({m.row_face(r), m.row_face(s), common[a], common[b], std::move(value)});
        }
      }
    }
  }
  return out;
}

std::vector<TripleWitness> triple_products(const FaceInstance& inst) {
  if (inst.k() != 1) throw Error(ErrorCode::WrongArity, "triple ratios apply to k = 1 only");
  require_torus(inst.on_torus());
  std::vector<TripleWitness> out;
  const int n = inst.n();
  for (int a = 0; a <= n; ++a) {
    for (int b = a + 1; b <= n; ++b) {
      for (int c = b + 1; c <= n; ++c) {
        const auto& ab = inst.point(IndexSet{a, b});
        const auto& bc = inst.point(IndexSet{b, c});
        const auto& ac = inst.point(IndexSet{a, c});
        out.push_back({a, b, c, (ab[0] / ab[1]) * (bc[0] / bc[1]) * (ac[1] / ac[0])});
      }
    }
  }
  return out;
}

std::vector<TripleWitness> check_triples_k1(const FaceInstance& inst) {
  auto all = triple_products(inst);
  std::erase_if(all, [](const TripleWitness& t) { return t.product == 1; });
  return all;
}

std::string_view to_string(Criterion c) noexcept {
  return c == Criterion::TripleRatios ? "TripleRatios" : "Minors";
}

ConcurrencyReport decide_concurrent(const FaceInstance& inst) { return decide_concurrent(build_matrix(inst)); }

ConcurrencyReport decide_concurrent(const PartialMatrix& m) {
  require_torus(m.on_torus());
  ConcurrencyReport report;
  if (m.k() == 1) {
    report.criterion = Criterion::TripleRatios;
    for (auto& t : check_triples_k1(to_instance(m))) report.witnesses.emplace_back(std::move(t));
  } else {
    report.criterion = Criterion::Minors;
    for (auto& minor : specified_minors(m)) {
      if (!is_zero(minor.value)) report.witnesses.emplace_back(std::move(minor));
    }
  }
  report.verdict = report.witnesses.empty();
  if (report.verdict) report.common_point = complete_rank1(m);
  return report;
}

ProjectivePoint complete_rank1(const PartialMatrix& m) {
  const std::size_t cols = m.cols();
  RationalVector x(cols);
  x[0] = 1;
  for (std::size_t j = 1; j < cols; ++j) {
    std::size_t r = 0;
    while (r < m.rows() && !(m.row_face(r).contains(0) && m.row_face(r).contains(static_cast<int>(j)))) ++r;
    // Every pair {0, j} lies in some face because k >= 1.
    const Rational& anchor = *m(r, 0);
    if (is_zero(anchor)) {
      throw Error(ErrorCode::NotRankOneCompletable, "row " + to_string(m.row_face(r)) + " has x_0 = 0; no x_0 = 1 chart");
    }
    x[j] = *m(r, j) / anchor;
  }
  ProjectivePoint point(std::move(x));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (project(point, m.row_face(r)) != m.row_point(r)) {
      throw Error(ErrorCode::NotRankOneCompletable,
                  "row " + to_string(m.row_face(r)) + " is not proportional to " + to_string(point));
    }
  }
  return point;
}

RationalMatrix completed_matrix(const PartialMatrix& m, const ProjectivePoint& x) {
  if (x.size() != m.cols()) throw Error(ErrorCode::DimensionMismatch, "completion point has the wrong size");
  RationalMatrix out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    const auto& face = m.row_face(r);
    // Scale so the first specified entry matches.
    const auto first = static_cast<std::size_t>(face[0]);
    if (is_zero(x[first])) throw Error(ErrorCode::NotRankOneCompletable, "completion vanishes on a row anchor");
    const Rational scale = *m(r, first) / x[first];
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = scale * x[c];
  }
  return out;
}

LinearSubspace cevian_span(const FaceInstance& inst, const IndexSet& face) {
  const int n = inst.n();
  const ProjectivePoint placed = embed(inst.point(face), face, n);
  return span({placed, coordinate_subspace(opposite_face(face, n), n)});
}

std::optional<ProjectivePoint> OracleResult::point() const {
  if (kind != Kind::Point) return std::nullopt;
  return subspace->as_point();
}

OracleResult geometric_oracle(const FaceInstance& inst) {
  std::vector<LinearSubspace> spans;
  spans.reserve(inst.faces().size());
  for (const auto& face : inst.faces()) spans.push_back(cevian_span(inst, face));
  auto common = intersect(spans);
  if (!common) return {OracleResult::Kind::Empty, std::nullopt};
  const auto kind = common->proj_dim() == 0 ? OracleResult::Kind::Point : OracleResult::Kind::Subspace;
  return {kind, std::move(common)};
}

ConcurrencyReport decide_with_oracle(const FaceInstance& inst) {
  ConcurrencyReport report = decide_concurrent(inst);
  const OracleResult oracle = geometric_oracle(inst);
  const auto point = oracle.point();
  bool agrees = report.verdict == point.has_value();
  if (agrees && report.verdict) agrees = *point == *report.common_point;
  report.oracle_agrees = agrees;
  return report;
}

std::string_view to_string(InstanceKind kind) noexcept {
  return kind == InstanceKind::Positive ? "Positive" : "Perturbed";
}

FaceInstance random_instance(int n, int k, std::uint64_t seed, InstanceKind kind) {
  check_arity(n, k);
  Rng rng(seed);
  RationalVector x;
  for (int i = 0; i <= n; ++i) x.push_back(random_nonzero_rational(rng));
  const ProjectivePoint source(std::move(x));

  std::vector<std::pair<IndexSet, ProjectivePoint>> entries;
  for (const auto& face : subsets_of_size(n, k + 1)) {
    entries.emplace_back(face, project(source, face).scaled(random_nonzero_rational(rng)));
  }
  if (kind == InstanceKind::Perturbed) {
    auto& [face, point] = entries[static_cast<std::size_t>(uniform_int(rng, 0, static_cast<std::int64_t>(entries.size()) - 1))];
    RationalVector coords(point.coords().begin(), point.coords().end());
    coords[static_cast<std::size_t>(uniform_int(rng, 0, k))] *= random_rescale_factor(rng);
    point = ProjectivePoint(std::move(coords));
  }
  return FaceInstance(n, k, std::move(entries));
}

}  // namespace cevian::simplex
