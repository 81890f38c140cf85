#include "serialization.hpp"

#include <cstdint>
#include <cstdio>
#include <cstdlib>

#include "cevian/error.hpp"

namespace cevian::cli {

namespace {

[[noreturn]] void parse_fail(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

const json& require(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) parse_fail(std::string("missing key '") + key + "'");
  return j.at(key);
}

int require_int(const json& j, const char* key) {
  const json& v = require(j, key);
  if (!v.is_number_integer()) parse_fail(std::string("'") + key + "' must be an integer");
  return v.get<int>();
}

classic::Point2 point2_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2) parse_fail("plane points are [x, y] pairs");
  return {rational_from_json(j[0]), rational_from_json(j[1])};
}

json point2_json(const classic::Point2& p) { return json::array({cevian::to_string(p.x), cevian::to_string(p.y)}); }

json matrix_json(const Eigen::MatrixXd& m) {
  json rows = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(decimal_string(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

json to_json(const Rational& q) { return cevian::to_string(q); }

Rational rational_from_json(const json& j) {
  if (!j.is_string()) parse_fail("rationals are encoded as strings like \"3/4\", got " + j.dump());
  return parse_rational(j.get<std::string>());
}

json to_json(const ProjectivePoint& p) {
  json out = json::array();
  for (const auto& x : p.coords()) out.push_back(to_json(x));
  return out;
}

ProjectivePoint point_from_json(const json& j) {
  if (!j.is_array() || j.empty()) parse_fail("points are nonempty arrays of rational strings");
  RationalVector coords;
  for (const auto& x : j) coords.push_back(rational_from_json(x));
  return ProjectivePoint(std::move(coords));
}

json to_json(const IndexSet& s) { return json(std::vector<int>(s.members().begin(), s.members().end())); }

json to_json(const simplex::FaceInstance& inst) {
  json points = json::array();
  for (std::size_t i = 0; i < inst.faces().size(); ++i) {
    points.push_back({{"subset", to_json(inst.faces()[i])}, {"coords", to_json(inst.points()[i])}});
  }
  return {{"n", inst.n()}, {"k", inst.k()}, {"points", std::move(points)}};
}

simplex::FaceInstance face_instance_from_json(const json& j) {
  const int n = require_int(j, "n");
  const int k = require_int(j, "k");
  const json& points = require(j, "points");
  if (!points.is_array()) parse_fail("'points' must be an array");
  std::vector<std::pair<IndexSet, ProjectivePoint>> entries;
  for (const auto& entry : points) {
    const json& subset = require(entry, "subset");
    if (!subset.is_array()) parse_fail("'subset' must be an array of integers");
    std::vector<int> members;
    for (const auto& m : subset) {
      if (!m.is_number_integer()) parse_fail("'subset' must be an array of integers");
      members.push_back(m.get<int>());
    }
    entries.emplace_back(IndexSet(std::move(members)), point_from_json(require(entry, "coords")));
  }
  return simplex::FaceInstance(n, k, std::move(entries));
}

json to_json(const InstanceFile& file) {
  json out = std::visit(
      [](const auto& payload) -> json {
        using T = std::decay_t<decltype(payload)>;
        if constexpr (std::is_same_v<T, PlanarProblem>) {
          const auto& t = payload.triangle;
          return {{"triangle", {point2_json(t.a), point2_json(t.b), point2_json(t.c)}},
                  {"feet", {point2_json(payload.feet[0]), point2_json(payload.feet[1]), point2_json(payload.feet[2])}}};
        } else if constexpr (std::is_same_v<T, simplex::FaceInstance>) {
          return to_json(payload);
        } else {
          json j = {{"d", to_json(payload.d)}, {"e", to_json(payload.e)}, {"f", to_json(payload.f)}};
          if (payload.x) j["x"] = to_json(*payload.x);
          return j;
        }
      },
      file.payload);
  json ordered = {{"schema_version", file.schema_version}};
  ordered.update(out);
  return ordered;
}

InstanceFile instance_file_from_json(const json& j) {
  if (!j.is_object()) parse_fail("instance file must be a JSON object");
  const int version = require_int(j, "schema_version");
  if (version != kSchemaVersion) parse_fail("unsupported schema_version " + std::to_string(version));

  const bool planar = j.contains("triangle") || j.contains("feet");
  const bool faces = j.contains("n") || j.contains("k") || j.contains("points");
  const bool dp6 = j.contains("d") || j.contains("e") || j.contains("f") || j.contains("x");
  if (int(planar) + int(faces) + int(dp6) != 1) {
    parse_fail("exactly one payload kind (triangle/feet, n/k/points, or d/e/f) must be present");
  }
  if (planar) {
    const json& tri = require(j, "triangle");
    const json& feet = require(j, "feet");
    if (!tri.is_array() || tri.size() != 3 || !feet.is_array() || feet.size() != 3) {
      parse_fail("'triangle' and 'feet' each hold three [x, y] pairs");
    }
    PlanarProblem p{{point2_from_json(tri[0]), point2_from_json(tri[1]), point2_from_json(tri[2])},
                    {point2_from_json(feet[0]), point2_from_json(feet[1]), point2_from_json(feet[2])}};
    return {version, std::move(p)};
  }
  if (faces) return {version, face_instance_from_json(j)};
  DelPezzoProblem p{std::nullopt, point_from_json(require(j, "d")), point_from_json(require(j, "e")),
                    point_from_json(require(j, "f"))};
  if (j.contains("x")) p.x = point_from_json(j.at("x"));
  return {version, std::move(p)};
}

InstanceFile parse_instance_file(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    parse_fail(std::string("malformed JSON: ") + e.what());
  }
  return instance_file_from_json(j);
}

json to_json(const classic::CevaReport& report) {
  json out = {
      {"feet", {{"d", to_json(report.feet.d)}, {"e", to_json(report.feet.e)}, {"f", to_json(report.feet.f)}}},
      {"determinant", to_json(report.determinant)},
      {"ratio_product", classic::to_string(report.ratio_product)},
      {"concurrent", report.concurrent},
      {"common_point", nullptr},
  };
  if (report.common_point) {
    if (const auto affine = report.common_point_affine()) {
      out["common_point"] = point2_json(*affine);
    } else {
      out["common_point"] = {{"at_infinity", to_json(report.common_point->normalized())}};
    }
  }
  return out;
}

json to_json(const simplex::Witness& w) {
  return std::visit(
      [](const auto& v) -> json {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, simplex::TripleWitness>) {
          return {{"type", "triple"}, {"abc", {v.a, v.b, v.c}}, {"product", to_json(v.product)}};
        } else {
          return {{"type", "minor"},
                  {"rows", {to_json(v.row_i), to_json(v.row_j)}},
                  {"cols", {v.col_i, v.col_j}},
                  {"value", to_json(v.value)}};
        }
      },
      w);
}

json to_json(const simplex::ConcurrencyReport& report) {
  json witnesses = json::array();
  for (const auto& w : report.witnesses) witnesses.push_back(to_json(w));
  json out = {{"verdict", report.verdict},
              {"criterion", std::string(simplex::to_string(report.criterion))},
              {"witnesses", std::move(witnesses)},
              {"common_point", report.common_point ? to_json(report.common_point->normalized()) : json(nullptr)}};
  if (report.oracle_agrees) out["oracle_agrees"] = *report.oracle_agrees;
  return out;
}

json to_json(const simplex::OracleResult& oracle) {
  static constexpr const char* kNames[] = {"Empty", "Point", "Subspace"};
  json out = {{"kind", kNames[static_cast<int>(oracle.kind)]}};
  if (const auto p = oracle.point()) {
    out["point"] = to_json(*p);
  } else if (oracle.subspace) {
    json basis = json::array();
    for (const auto& v : oracle.subspace->basis()) basis.push_back(to_json(ProjectivePoint(v)));
    out["basis"] = std::move(basis);
  }
  return out;
}

json to_json(const rank_search::TransversalResult& result) {
  json out = {{"status", std::string(rank_search::to_string(result.status))},
              {"residual", decimal_string(result.residual)},
              {"restart", result.restart},
              {"iterations", result.iterations},
              {"basis", nullptr},
              {"completion", nullptr}};
  if (result.basis) out["basis"] = matrix_json(*result.basis);
  if (result.completion) out["completion"] = matrix_json(*result.completion);
  return out;
}

json to_json(const rank_search::TransversalCheck& check) {
  json subsets = json::array();
  for (const auto& s : check.subsets) {
    subsets.push_back({{"subset", to_json(s.face)}, {"sigma_min", decimal_string(s.sigma_min)}, {"passes", s.passes}});
  }
  return {{"passes", check.passes}, {"subsets", std::move(subsets)}};
}

std::string decimal_string(double value) {
  char buf[32];
  for (int precision = 15; precision <= 17; ++precision) {
    std::snprintf(buf, sizeof buf, "%.*g", precision, value);
    if (std::strtod(buf, nullptr) == value) break;
  }
  return buf;
}

std::string input_digest(const std::string& bytes) {
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    hash ^= c;
    hash *= 0x100000001b3ULL;
  }
  char buf[32];
  std::snprintf(buf, sizeof buf, "fnv1a64:%016llx", static_cast<unsigned long long>(hash));
  return buf;
}

}  // namespace cevian::cli
