#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "cevian/error.hpp"
#include "cevian/projective.hpp"
#include "support.hpp"

namespace cevian {
namespace {

using testing::pt;
using testing::q;

template <typename Fn>
ErrorCode code_of(Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected cevian::Error";
  return ErrorCode::InvalidArgument;
}

std::vector<RationalVector> rows_of(std::initializer_list<ProjectivePoint> points) {
  std::vector<RationalVector> out;
  for (const auto& p : points) out.emplace_back(p.coords().begin(), p.coords().end());
  return out;
}

TEST(ProjectivePoint, Normalize) {
  EXPECT_EQ(to_string(normalize(pt({2, 4, 6}))), "(1:2:3)");
  EXPECT_EQ(to_string(normalize(pt({0, -3, 6}))), "(0:1:-2)");
  EXPECT_EQ(to_string(normalize(pt({1, 0, 0}))), "(1:0:0)");
  EXPECT_EQ(code_of([] { pt({0, 0, 0}); }), ErrorCode::InvalidPoint);
}

TEST(ProjectivePoint, EqualityIsUpToScale) {
  EXPECT_EQ(pt({1, 2, 3}), pt({-2, -4, -6}));
  EXPECT_NE(pt({1, 2, 3}), pt({1, 2, 4}));
  EXPECT_NE(pt({1, 2}), pt({1, 2, 0}));
}

TEST(ProjectivePoint, NormalizeIsScaleInvariantAndIdempotent) {
  std::mt19937_64 rng(1);
  for (int i = 0; i < 300; ++i) {
    const auto p = testing::random_point(rng, 2 + rng() % 5, true);
    const Rational lambda = testing::small_rational(rng);
    const auto n = normalize(p);
    EXPECT_EQ(normalize(p.scaled(lambda)).coords().size(), n.coords().size());
    EXPECT_TRUE(std::ranges::equal(normalize(p.scaled(lambda)).coords(), n.coords()));
    EXPECT_TRUE(std::ranges::equal(normalize(n).coords(), n.coords()));
  }
}

TEST(IndexSet, Validation) {
  EXPECT_EQ(code_of([] { IndexSet({1, 1}); }), ErrorCode::InvalidIndexSet);
  EXPECT_EQ(code_of([] { IndexSet({2, 1}); }), ErrorCode::InvalidIndexSet);
  EXPECT_EQ(code_of([] { IndexSet({-1, 0}); }), ErrorCode::InvalidIndexSet);
  EXPECT_EQ(code_of([] { IndexSet({0, 4}).check_within(3); }), ErrorCode::InvalidIndexSet);
  EXPECT_TRUE(IndexSet({0, 2}) < IndexSet({1, 2}));
  EXPECT_TRUE(IndexSet({0, 1, 3}) < IndexSet({0, 2, 3}));
  EXPECT_EQ(IndexSet({1, 3}).position_of(3), 1u);
  EXPECT_FALSE(IndexSet({1, 3}).position_of(2).has_value());
}

TEST(IndexSet, SubsetsAreLexicographic) {
  const auto subsets = subsets_of_size(3, 2);
  ASSERT_EQ(subsets.size(), 6u);
  EXPECT_EQ(subsets.front(), IndexSet({0, 1}));
  EXPECT_EQ(subsets[2], IndexSet({0, 3}));
  EXPECT_EQ(subsets.back(), IndexSet({2, 3}));
  EXPECT_TRUE(std::ranges::is_sorted(subsets_of_size(6, 3)));
  EXPECT_EQ(subsets_of_size(6, 3).size(), 35u);
}

TEST(CoordinateSubspace, Examples) {
  const auto line = coordinate_subspace({0, 1}, 2);
  EXPECT_EQ(line.proj_dim(), 1);
  EXPECT_TRUE(line.contains(pt({3, -5, 0})));
  EXPECT_FALSE(line.contains(pt({0, 0, 1})));

  const auto vertex = coordinate_subspace({2}, 2);
  ASSERT_TRUE(vertex.as_point().has_value());
  EXPECT_EQ(*vertex.as_point(), pt({0, 0, 1}));

  const auto far_line = coordinate_subspace({2, 3}, 3);
  EXPECT_EQ(far_line.proj_dim(), 1);
  EXPECT_TRUE(far_line.contains(pt({0, 0, 1, 0})));
  EXPECT_TRUE(far_line.contains(pt({0, 0, 0, 1})));
  EXPECT_FALSE(far_line.contains(pt({1, 0, 0, 0})));

  EXPECT_EQ(code_of([] { coordinate_subspace(IndexSet(std::vector<int>{}), 2); }), ErrorCode::InvalidIndexSet);
}

TEST(OppositeFace, Examples) {
  EXPECT_EQ(opposite_face({0, 1}, 2), IndexSet({2}));
  EXPECT_EQ(opposite_face({2, 3}, 3), IndexSet({0, 1}));
  EXPECT_EQ(opposite_face({0}, 4), IndexSet({1, 2, 3, 4}));
  EXPECT_EQ(code_of([] { opposite_face({0, 1, 2}, 2); }), ErrorCode::InvalidIndexSet);
  EXPECT_EQ(code_of([] { opposite_face(IndexSet(std::vector<int>{}), 2); }), ErrorCode::InvalidIndexSet);
}

TEST(Span, Examples) {
  const auto s = span({pt({1, 0, 0}), pt({0, 1, 0})});
  EXPECT_EQ(s.proj_dim(), 1);
  EXPECT_EQ(s, coordinate_subspace({0, 1}, 2));

  const auto single = span({pt({1, 2, 3})});
  EXPECT_EQ(single.proj_dim(), 0);
  EXPECT_EQ(*single.as_point(), pt({1, 2, 3}));

  const auto plane = span({pt({1, 1, 1, 1}), coordinate_subspace({2, 3}, 3)});
  EXPECT_EQ(plane.proj_dim(), 2);
  EXPECT_TRUE(plane.contains(pt({1, 1, 0, 0})));

  EXPECT_EQ(code_of([] { span({pt({1, 0}), pt({1, 0, 0})}); }), ErrorCode::DimensionMismatch);
}

TEST(Intersect, Examples) {
  const auto x0 = LinearSubspace::from_vectors(2, rows_of({pt({0, 1, 0}), pt({0, 0, 1})}));
  const auto x1 = LinearSubspace::from_vectors(2, rows_of({pt({1, 0, 0}), pt({0, 0, 1})}));
  const auto meet = intersect({x0, x1});
  ASSERT_TRUE(meet.has_value());
  EXPECT_EQ(*meet->as_point(), pt({0, 0, 1}));

  const auto l1 = span({pt({1, 0, 0, 0}), pt({0, 1, 0, 0})});
  const auto l2 = span({pt({0, 0, 1, 0}), pt({1, 1, 1, 1})});
  EXPECT_FALSE(intersect({l1, l2}).has_value());

  EXPECT_EQ(code_of([] { intersect(std::span<const LinearSubspace>{}); }), ErrorCode::InvalidArgument);
}

TEST(Project, Examples) {
  EXPECT_EQ(project(pt({1, 2, 3, 4}), {2, 3}), pt({3, 4}));
  EXPECT_EQ(project(pt({5, 0, 7}), {0, 2}), pt({5, 7}));
  EXPECT_EQ(code_of([] { project(pt({1, 0, 0}), {1, 2}); }), ErrorCode::ProjectionUndefined);
  EXPECT_EQ(embed(pt({3, 4}), {1, 3}, 3), pt({0, 3, 0, 4}));
}

TEST(Project, CompatibleWithSubProjection) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 500; ++i) {
    const int n = 2 + static_cast<int>(rng() % 5);
    const auto p = testing::random_point(rng, n + 1);
    const auto faces = subsets_of_size(n, 1 + static_cast<int>(rng() % n));
    const auto& face = faces[rng() % faces.size()];
    const auto sub_faces = subsets_of_size(static_cast<int>(face.size()) - 1, 1 + static_cast<int>(rng() % face.size()));
    const auto& local = sub_faces[rng() % sub_faces.size()];
    std::vector<int> global;
    for (int m : local.members()) global.push_back(face[m]);
    EXPECT_EQ(project(project(p, face), local), project(p, IndexSet(global)));
  }
}

TEST(Project, AgreesWithGeometricProjection) {
  std::mt19937_64 rng(4);
  for (int i = 0; i < 300; ++i) {
    const int n = 2 + static_cast<int>(rng() % 4);
    const auto p = testing::random_point(rng, n + 1);
    const auto faces = subsets_of_size(n, 1 + static_cast<int>(rng() % n));
    const auto& face = faces[rng() % faces.size()];
    if (face.size() == static_cast<std::size_t>(n) + 1) continue;
    const auto cone = span({p, coordinate_subspace(opposite_face(face, n), n)});
    const auto meet = intersect({cone, coordinate_subspace(face, n)});
    ASSERT_TRUE(meet.has_value());
    ASSERT_EQ(meet->proj_dim(), 0);
    EXPECT_EQ(*meet->as_point(), embed(project(p, face), face, n));
  }
}

TEST(Subspaces, DimensionFormulaAndOrderIndependence) {
  std::mt19937_64 rng(5);
  int checked = 0;
  for (int i = 0; i < 300; ++i) {
    const std::size_t n = 2 + rng() % 4;
    auto random_subspace = [&] {
      std::vector<RationalVector> vs;
      const std::size_t count = 1 + rng() % n;
      for (std::size_t j = 0; j < count; ++j) {
        const auto p = testing::random_point(rng, n + 1, true);
        vs.emplace_back(p.coords().begin(), p.coords().end());
      }
      return LinearSubspace::from_vectors(n, vs);
    };
    const auto a = random_subspace();
    const auto b = random_subspace();
    EXPECT_EQ(span({a, b}), span({b, a}));
    const auto ab = intersect({a, b});
    EXPECT_EQ(ab, intersect({b, a}));
    if (!ab) continue;
    ++checked;
    EXPECT_EQ(span({a, b}).proj_dim() + ab->proj_dim(), a.proj_dim() + b.proj_dim());
    EXPECT_TRUE(a.contains(*ab));
    EXPECT_TRUE(b.contains(*ab));
  }
  EXPECT_GT(checked, 50);
}

}  // namespace
}  // namespace cevian
