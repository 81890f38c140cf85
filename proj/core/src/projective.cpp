#include "cevian/projective.hpp"

#include <algorithm>
#include <numeric>

#include "cevian/error.hpp"

namespace cevian {

namespace {

bool all_zero(std::span<const Rational> v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return is_zero(x); });
}

}  // namespace

ProjectivePoint::ProjectivePoint(RationalVector coords) : coords_(std::move(coords)) {
  if (coords_.empty() || all_zero(coords_)) {
    throw Error(ErrorCode::InvalidPoint, "homogeneous coordinates must not all vanish");
  }
}

ProjectivePoint ProjectivePoint::normalized() const {
  const auto lead = std::find_if(coords_.begin(), coords_.end(), [](const Rational& x) { return !is_zero(x); });
  const Rational inv = 1 / *lead;
  return scaled(inv);
}

ProjectivePoint ProjectivePoint::scaled(const Rational& factor) const {
  if (is_zero(factor)) throw Error(ErrorCode::InvalidPoint, "scaling by zero");
  RationalVector out(coords_);
  for (auto& x : out) x *= factor;
  return ProjectivePoint(std::move(out));
}

bool ProjectivePoint::has_zero_coordinate() const {
  return std::any_of(coords_.begin(), coords_.end(), [](const Rational& x) { return is_zero(x); });
}

bool operator==(const ProjectivePoint& a, const ProjectivePoint& b) {
  if (a.size() != b.size()) return false;
  // Proportional iff every 2x2 minor against a fixed nonzero index vanishes.
  const auto lead = static_cast<std::size_t>(
      std::find_if(a.coords_.begin(), a.coords_.end(), [](const Rational& x) { return !is_zero(x); }) -
      a.coords_.begin());
  if (is_zero(b[lead])) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] * b[lead] != b[i] * a[lead]) return false;
  }
  return true;
}

std::string to_string(const ProjectivePoint& p) {
  std::string out = "(";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) out += ':';
    out += to_string(p[i]);
  }
  return out + ")";
}

IndexSet::IndexSet(std::vector<int> members) : members_(std::move(members)) {
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (members_[i] < 0 || (i > 0 && members_[i] <= members_[i - 1])) {
      throw Error(ErrorCode::InvalidIndexSet, "members must be nonnegative and strictly increasing: " + to_string(*this));
    }
  }
}

bool IndexSet::contains(int j) const { return std::binary_search(members_.begin(), members_.end(), j); }

std::optional<std::size_t> IndexSet::position_of(int j) const {
  const auto it = std::lower_bound(members_.begin(), members_.end(), j);
  if (it == members_.end() || *it != j) return std::nullopt;
  return static_cast<std::size_t>(it - members_.begin());
}

bool IndexSet::is_subset_of(const IndexSet& other) const {
  return std::includes(other.members_.begin(), other.members_.end(), members_.begin(), members_.end());
}

void IndexSet::check_within(int n) const {
  if (!members_.empty() && members_.back() > n) {
    throw Error(ErrorCode::InvalidIndexSet, to_string(*this) + " is not contained in {0.." + std::to_string(n) + "}");
  }
}

std::string to_string(const IndexSet& set) {
  std::string out = "{";
  for (std::size_t i = 0; i < set.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(set[i]);
  }
  return out + "}";
}

IndexSet set_intersection(const IndexSet& a, const IndexSet& b) {
  std::vector<int> common;
  std::set_intersection(a.members().begin(), a.members().end(), b.members().begin(), b.members().end(),
                        std::back_inserter(common));
  return IndexSet(std::move(common));
}

std::vector<IndexSet> subsets_of_size(int n, int size) {
  if (n < 0 || size < 0 || size > n + 1) {
    throw Error(ErrorCode::InvalidArgument, "no subsets of size " + std::to_string(size) + " in {0.." + std::to_string(n) + "}");
  }
  std::vector<IndexSet> out;
  std::vector<int> current(static_cast<std::size_t>(size));
  std::iota(current.begin(), current.end(), 0);
  while (true) {
    out.emplace_back(current);
    // Advance to the next combination in lexicographic order.
    int i = size - 1;
    while (i >= 0 && current[static_cast<std::size_t>(i)] == n - (size - 1 - i)) --i;
    if (i < 0) break;
    ++current[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < size; ++j) {
      current[static_cast<std::size_t>(j)] = current[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
  return out;
}

LinearSubspace LinearSubspace::from_vectors(std::size_t ambient_dim, std::span<const RationalVector> vectors) {
  EchelonBasis basis(ambient_dim + 1);
  for (const auto& v : vectors) basis.add(v);
  if (basis.rank() == 0) throw Error(ErrorCode::InvalidArgument, "vectors span only the origin");
  return LinearSubspace(ambient_dim, basis.rows());
}

bool LinearSubspace::contains(const ProjectivePoint& p) const {
  if (p.ambient_dim() != ambient_dim_) throw Error(ErrorCode::DimensionMismatch, "point and subspace live in different spaces");
  EchelonBasis basis(ambient_dim_ + 1);
  for (const auto& v : basis_) basis.add(v);
  return basis.contains(p.coords());
}

bool LinearSubspace::contains(const LinearSubspace& other) const {
  if (other.ambient_dim_ != ambient_dim_) throw Error(ErrorCode::DimensionMismatch, "subspaces live in different spaces");
  EchelonBasis basis(ambient_dim_ + 1);
  for (const auto& v : basis_) basis.add(v);
  return std::all_of(other.basis_.begin(), other.basis_.end(), [&](const RationalVector& v) { return basis.contains(v); });
}

std::optional<ProjectivePoint> LinearSubspace::as_point() const {
  if (proj_dim() != 0) return std::nullopt;
  return ProjectivePoint(basis_.front()).normalized();
}

std::vector<RationalVector> LinearSubspace::annihilator() const {
  EchelonBasis basis(ambient_dim_ + 1);
  for (const auto& v : basis_) basis.add(v);
  return basis.annihilator();
}

LinearSubspace coordinate_subspace(const IndexSet& face, int n) {
  if (face.empty()) throw Error(ErrorCode::InvalidIndexSet, "coordinate subspace of the empty set");
  face.check_within(n);
  std::vector<RationalVector> basis;
  for (int i : face.members()) {
    RationalVector e(static_cast<std::size_t>(n) + 1);
    e[static_cast<std::size_t>(i)] = 1;
    basis.push_back(std::move(e));
  }
  return LinearSubspace::from_vectors(static_cast<std::size_t>(n), basis);
}

IndexSet opposite_face(const IndexSet& face, int n) {
  face.check_within(n);
  if (face.empty() || face.size() == static_cast<std::size_t>(n) + 1) {
    throw Error(ErrorCode::InvalidIndexSet, "opposite face needs a proper nonempty face, got " + to_string(face));
  }
  std::vector<int> rest;
  for (int j = 0; j <= n; ++j) {
    if (!face.contains(j)) rest.push_back(j);
  }
  return IndexSet(std::move(rest));
}

LinearSubspace span(std::span<const SpanItem> items) {
  if (items.empty()) throw Error(ErrorCode::InvalidArgument, "span of nothing");
  const auto dim_of = [](const SpanItem& item) {
    return std::visit([](const auto& x) { return x.ambient_dim(); }, item);
  };
  const std::size_t m = dim_of(items.front());
  EchelonBasis basis(m + 1);
  for (const auto& item : items) {
    if (dim_of(item) != m) throw Error(ErrorCode::DimensionMismatch, "span inputs live in different projective spaces");
    if (const auto* p = std::get_if<ProjectivePoint>(&item)) {
      basis.add(p->coords());
    } else {
      for (const auto& v : std::get<LinearSubspace>(item).basis()) basis.add(v);
    }
  }
  return LinearSubspace::from_vectors(m, basis.rows());
}

std::optional<LinearSubspace> intersect(std::span<const LinearSubspace> subspaces) {
  if (subspaces.empty()) throw Error(ErrorCode::InvalidArgument, "intersection of an empty family");
  const std::size_t m = subspaces.front().ambient_dim();
  // Stack annihilators; the intersection is the common kernel.
  EchelonBasis forms(m + 1);
  for (const auto& s : subspaces) {
    if (s.ambient_dim() != m) throw Error(ErrorCode::DimensionMismatch, "intersection inputs live in different projective spaces");
    for (const auto& a : s.annihilator()) {
      forms.add(a);
      if (forms.full()) return std::nullopt;
    }
  }
  const auto common = forms.annihilator();
  return LinearSubspace::from_vectors(m, common);
}

ProjectivePoint project(const ProjectivePoint& p, const IndexSet& face) {
  face.check_within(static_cast<int>(p.ambient_dim()));
  if (face.empty()) throw Error(ErrorCode::InvalidIndexSet, "projection onto the empty face");
  RationalVector out;
  out.reserve(face.size());
  for (int i : face.members()) out.push_back(p[static_cast<std::size_t>(i)]);
  if (all_zero(out)) {
    throw Error(ErrorCode::ProjectionUndefined, to_string(p) + " lies in the centre of projection onto " + to_string(face));
  }
  return ProjectivePoint(std::move(out));
}

ProjectivePoint embed(const ProjectivePoint& local, const IndexSet& face, int n) {
  face.check_within(n);
  if (local.size() != face.size()) {
    throw Error(ErrorCode::DimensionMismatch, "point has " + std::to_string(local.size()) + " coordinates, face " +
                                                  to_string(face) + " has " + std::to_string(face.size()));
  }
  RationalVector out(static_cast<std::size_t>(n) + 1);
  for (std::size_t i = 0; i < face.size(); ++i) out[static_cast<std::size_t>(face[i])] = local[i];
  return ProjectivePoint(std::move(out));
}

}  // namespace cevian
