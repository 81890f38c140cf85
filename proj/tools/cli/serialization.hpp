#pragma once

#include <array>
#include <optional>
#include <string>
#include <variant>

#include <nlohmann/json.hpp>

#include "cevian/classic.hpp"
#include "cevian/projective.hpp"
#include "cevian/rank_search.hpp"
#include "cevian/simplex.hpp"

// JSON surfaces of the command line tool. Exact data travels as strings
// ("p/q" or "p"); floats appear only in rank-search output.
namespace cevian::cli {

using nlohmann::json;

inline constexpr int kSchemaVersion = 1;

struct PlanarProblem {
  classic::Triangle2D triangle;
  std::array<classic::Point2, 3> feet;  // D on BC, E on AC, F on AB
};

struct DelPezzoProblem {
  std::optional<ProjectivePoint> x;
  ProjectivePoint d;
  ProjectivePoint e;
  ProjectivePoint f;
};

using Payload = std::variant<PlanarProblem, simplex::FaceInstance, DelPezzoProblem>;

struct InstanceFile {
  int schema_version = kSchemaVersion;
  Payload payload;
};

json to_json(const Rational& q);
Rational rational_from_json(const json& j);

json to_json(const ProjectivePoint& p);
ProjectivePoint point_from_json(const json& j);

json to_json(const IndexSet& s);
json to_json(const simplex::FaceInstance& inst);
simplex::FaceInstance face_instance_from_json(const json& j);

json to_json(const InstanceFile& file);
/// ParseError for malformed documents, unknown schema versions, or anything
/// other than exactly one payload kind.
InstanceFile instance_file_from_json(const json& j);
InstanceFile parse_instance_file(const std::string& text);

json to_json(const classic::CevaReport& report);
json to_json(const simplex::Witness& w);
json to_json(const simplex::ConcurrencyReport& report);
json to_json(const simplex::OracleResult& oracle);
json to_json(const rank_search::TransversalResult& result);
json to_json(const rank_search::TransversalCheck& check);

/// Shortest round-trip decimal form of a double.
std::string decimal_string(double value);

/// 64-bit FNV-1a of the raw input, rendered "fnv1a64:<16 hex digits>".
std::string input_digest(const std::string& bytes);

}  // namespace cevian::cli
