#include "commands.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <unistd.h>

#include "CLI11.hpp"

#include "cevian/classic.hpp"
#include "cevian/del_pezzo.hpp"
#include "cevian/error.hpp"
#include "cevian/rank_search.hpp"
#include "cevian/simplex.hpp"
#include "serialization.hpp"

namespace cevian::cli {

namespace {

namespace fs = std::filesystem;

struct Input {
  std::string bytes;
  InstanceFile file;
};

std::string read_source(const std::string& path) {
  std::ostringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::ParseError, "cannot read '" + path + "'");
    buf << in.rdbuf();
  }
  return buf.str();
}

Input load(const std::string& path) {
  std::string bytes = read_source(path);
  InstanceFile file = parse_instance_file(bytes);
  return {std::move(bytes), std::move(file)};
}

template <typename T>
const T& expect_payload(const InstanceFile& file, const char* what) {
  if (const auto* p = std::get_if<T>(&file.payload)) return *p;
  throw Error(ErrorCode::ParseError, std::string("this command needs a ") + what + " payload");
}

bool use_color(std::ostream& err) {
  if (std::getenv("NO_COLOR") != nullptr) return false;
  if (const char* mode = std::getenv("CEVIAN_COLOR")) {
    const std::string m(mode);
    if (m == "always") return true;
    if (m == "never") return false;
  }
  return &err == &std::cerr && ::isatty(STDERR_FILENO) != 0;
}

void status_line(std::ostream& err, bool good, const std::string& text) {
  if (use_color(err)) {
    err << (good ? "\033[32m" : "\033[31m") << text << "\033[0m\n";
  } else {
    err << text << '\n';
  }
}

json run_header(const std::string& command, const std::vector<std::string>& args, const std::string& bytes) {
  return {{"command", command}, {"args", args}, {"input_digest", input_digest(bytes)}};
}

void emit(std::ostream& out, json report, std::chrono::steady_clock::time_point start) {
  const auto elapsed = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start);
  report["wall_time_ms"] = elapsed.count();
  out << report.dump(2) << '\n';
}

int error_exit(std::ostream& err, const Error& e) {
  err << "error: " << e.what() << '\n';
  return kExitInputError;
}

// check2d -------------------------------------------------------------------

int cmd_check2d(const std::string& path, const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  const auto start = std::chrono::steady_clock::now();
  const Input input = load(path);
  const auto& problem = expect_payload<PlanarProblem>(input.file, "triangle/feet");
  const auto report = classic::check_ceva(problem.triangle, problem.feet[0], problem.feet[1], problem.feet[2]);

  json doc = run_header("check2d", args, input.bytes);
  doc["result"] = to_json(report);
  const bool agrees = report.concurrent == report.common_point.has_value();
  doc["oracle"] = {{"planes_meet", report.common_point.has_value()}, {"agrees", agrees}};
  emit(out, std::move(doc), start);
  if (!agrees) {
    status_line(err, false, "determinant and plane intersection disagree");
    return kExitDisagreement;
  }
  status_line(err, report.concurrent,
              report.concurrent ? "concurrent" : "not concurrent (determinant " + to_string(report.determinant) + ")");
  return report.concurrent ? kExitPositive : kExitNegative;
}

// check ---------------------------------------------------------------------

struct CheckOutcome {
  int exit_code;
  json result;
  json oracle;
};

CheckOutcome check_instance(const simplex::FaceInstance& inst, bool with_oracle) {
  simplex::ConcurrencyReport report =
      with_oracle ? simplex::decide_with_oracle(inst) : simplex::decide_concurrent(inst);
  CheckOutcome outcome{report.verdict ? kExitPositive : kExitNegative, to_json(report), nullptr};
  if (with_oracle) {
    outcome.oracle = to_json(simplex::geometric_oracle(inst));
    outcome.oracle["agrees"] = *report.oracle_agrees;
    if (!*report.oracle_agrees) outcome.exit_code = kExitDisagreement;
  }
  return outcome;
}

int cmd_check(const std::string& path, bool with_oracle, const std::vector<std::string>& args, std::ostream& out,
              std::ostream& err) {
  const auto start = std::chrono::steady_clock::now();
  const Input input = load(path);
  const auto& inst = expect_payload<simplex::FaceInstance>(input.file, "n/k/points");
  CheckOutcome outcome = check_instance(inst, with_oracle);

  json doc = run_header("check", args, input.bytes);
  doc["result"] = std::move(outcome.result);
  if (with_oracle) doc["oracle"] = std::move(outcome.oracle);
  emit(out, std::move(doc), start);
  switch (outcome.exit_code) {
    case kExitPositive: status_line(err, true, "concurrent"); break;
    case kExitNegative: status_line(err, false, "not concurrent"); break;
    default: status_line(err, false, "criterion and geometric oracle disagree"); break;
  }
  return outcome.exit_code;
}

int cmd_check_batch(const std::string& dir, bool with_oracle, const std::vector<std::string>& args,
                    std::ostream& out, std::ostream& err) {
  const auto start = std::chrono::steady_clock::now();
  if (!fs::is_directory(dir)) throw Error(ErrorCode::ParseError, "'" + dir + "' is not a directory");
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".json") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());

  json results = json::array();
  int concurrent = 0, not_concurrent = 0, errors = 0, disagreements = 0;
  for (const auto& file : files) {
    json entry = {{"file", file.filename().string()}};
    try {
      const Input input = load(file.string());
      const auto& inst = expect_payload<simplex::FaceInstance>(input.file, "n/k/points");
      CheckOutcome outcome = check_instance(inst, with_oracle);
      entry["exit"] = outcome.exit_code;
      entry["verdict"] = outcome.result["verdict"];
      if (with_oracle) entry["oracle_agrees"] = outcome.oracle["agrees"];
      switch (outcome.exit_code) {
        case kExitPositive: ++concurrent; break;
        case kExitNegative: ++not_concurrent; break;
        default: ++disagreements; break;
      }
    } catch (const Error& e) {
      entry["exit"] = static_cast<int>(kExitInputError);
      entry["error"] = std::string(to_string(e.code()));
      entry["message"] = e.what();
      ++errors;
    }
    results.push_back(std::move(entry));
  }

  json doc = run_header("check --batch", args, dir);
  doc["result"] = {{"files", std::move(results)},
                   {"concurrent", concurrent},
                   {"not_concurrent", not_concurrent},
                   {"errors", errors},
                   {"disagreements", disagreements}};
  emit(out, std::move(doc), start);
  status_line(err, disagreements == 0 && errors == 0,
              std::to_string(files.size()) + " files: " + std::to_string(concurrent) + " concurrent, " +
                  std::to_string(not_concurrent) + " not, " + std::to_string(errors) + " errors, " +
                  std::to_string(disagreements) + " disagreements");
  if (disagreements > 0) return kExitDisagreement;
  return errors > 0 ? kExitInputError : kExitPositive;
}

// random --------------------------------------------------------------------

struct RandomArgs {
  int n = 0;
  int k = 0;
  std::uint64_t seed = 0;
  std::string kind = "positive";
  int r = 1;
  std::string out_path;
};

int cmd_random(const RandomArgs& a, std::ostream& out, std::ostream& err) {
  simplex::FaceInstance inst = [&] {
    if (a.kind == "rank") return simplex::to_instance(rank_search::construct_rank_instance(a.n, a.k, a.r, a.seed));
    const auto kind = a.kind == "positive" ? simplex::InstanceKind::Positive : simplex::InstanceKind::Perturbed;
    return simplex::random_instance(a.n, a.k, a.seed, kind);
  }();
  const std::string text = to_json(InstanceFile{kSchemaVersion, inst}).dump(2) + "\n";

  json label = {{"kind", a.kind}, {"n", a.n}, {"k", a.k}, {"seed", a.seed}};
  if (a.kind == "rank") {
    label["completable_rank"] = a.r + 1;
  } else {
    label["expected_concurrent"] = a.kind == "positive";
  }
  if (a.out_path.empty()) {
    out << text;
    err << label.dump() << '\n';
  } else {
    std::ofstream file(a.out_path, std::ios::binary);
    if (!file) throw Error(ErrorCode::ParseError, "cannot write '" + a.out_path + "'");
    file << text;
    label["out"] = a.out_path;
    out << label.dump() << '\n';
  }
  return kExitPositive;
}

// dp6 -----------------------------------------------------------------------

int cmd_dp6_check(const std::string& path, const std::vector<std::string>& args, std::ostream& out,
                  std::ostream& err) {
  const auto start = std::chrono::steady_clock::now();
  const Input input = load(path);
  const auto& p = expect_payload<DelPezzoProblem>(input.file, "d/e/f");
  json result = {{"on_H", del_pezzo::on_H(p.d, p.e, p.f)}};
  bool all = result["on_H"].get<bool>();
  if (p.x) {
    const bool s = del_pezzo::on_S(*p.x, p.d, p.e, p.f);
    result["on_S"] = s;
    all = all && s;
  }
  json doc = run_header("dp6 check", args, input.bytes);
  doc["result"] = std::move(result);
  emit(out, std::move(doc), start);
  status_line(err, all, all ? "member" : "not a member");
  return all ? kExitPositive : kExitNegative;
}

int cmd_dp6_lift(const std::string& path, const std::vector<std::string>& args, std::ostream& out,
                 std::ostream& err) {
  const auto start = std::chrono::steady_clock::now();
  const Input input = load(path);
  const auto& p = expect_payload<DelPezzoProblem>(input.file, "d/e/f");
  const del_pezzo::HPoint h{p.d, p.e, p.f};
  json doc = run_header("dp6 lift", args, input.bytes);
  try {
    const auto s = del_pezzo::lift_H_to_S(h);
    const auto back = del_pezzo::project_S_to_H(s);
    const bool round_trip = back.d == h.d && back.e == h.e && back.f == h.f;
    doc["result"] = {{"x", to_json(s.x)}, {"on_S", del_pezzo::on_S(s)}, {"round_trip", round_trip}};
    emit(out, std::move(doc), start);
    status_line(err, true, "x = " + to_string(s.x));
    return kExitPositive;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NotOnH && e.code() != ErrorCode::NotInImage) throw;
    doc["result"] = {{"error", std::string(to_string(e.code()))}, {"message", e.what()}};
    if (e.code() == ErrorCode::NotInImage) {
      doc["result"]["excluded_point"] = is_zero(h.d[1]) ? "((1:0),(1:0),(1:0))" : "((0:1),(0:1),(0:1))";
    }
    emit(out, std::move(doc), start);
    status_line(err, false, std::string(to_string(e.code())));
    return kExitNegative;
  }
}

// rank-search ---------------------------------------------------------------

int cmd_rank_search(const std::string& path, const rank_search::RankSearchConfig& cfg, double verify_tol,
                    const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  const auto start = std::chrono::steady_clock::now();
  const Input input = load(path);
  const auto& inst = expect_payload<simplex::FaceInstance>(input.file, "n/k/points");
  const auto result = rank_search::low_rank_complete(simplex::build_matrix(inst), cfg);

  json doc = run_header("rank-search", args, input.bytes);
  doc["config"] = {{"r", cfg.r},
                   {"tol", decimal_string(cfg.tol)},
                   {"max_iter", cfg.max_iter},
                   {"restarts", cfg.restarts},
                   {"seed", cfg.seed},
                   {"verify_tol", decimal_string(verify_tol)}};
  doc["result"] = to_json(result);
  int code = kExitNegative;
  if (result.status == rank_search::Status::Found) {
    const auto check = rank_search::verify_transversal(inst, *result.basis, verify_tol);
    doc["verification"] = to_json(check);
    code = check.passes ? kExitPositive : kExitNegative;
    status_line(err, check.passes,
                check.passes ? "found a transversal " + std::to_string(cfg.r) + "-plane"
                             : "completion found but the transversal check failed");
  } else {
    doc["caveat"] = "NotFoundWithinBudget is not a proof that no rank-(r+1) completion exists";
    status_line(err, false, "no completion found within budget (this does not prove none exists)");
  }
  emit(out, std::move(doc), start);
  return code;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact concurrency tests for cevians of triangles and simplices", "cevian"};
  app.require_subcommand(1);

  std::string input;
  bool oracle = false;
  std::string batch_dir;

  auto* check2d = app.add_subcommand("check2d", "Ceva test for a triangle with three cevian feet");
  check2d->add_option("input", input, "instance file, or - for stdin")->required();

  auto* check = app.add_subcommand("check", "Concurrency of cevian spans for points in the k-faces of an n-simplex");
  auto* check_input = check->add_option("input", input, "instance file, or - for stdin");
  auto* batch_opt = check->add_option("--batch", batch_dir, "check every *.json file in a directory");
  check_input->excludes(batch_opt);
  check->add_flag("--oracle", oracle, "also intersect the cevian spans exactly and compare");

  RandomArgs random_args;
  auto* random = app.add_subcommand("random", "Write a seeded random face instance");
  random->add_option("--n", random_args.n, "simplex dimension")->required();
  random->add_option("--k", random_args.k, "face dimension")->required();
  random->add_option("--seed", random_args.seed, "generator seed");
  random->add_option("--kind", random_args.kind, "positive, perturbed or rank")
      ->check(CLI::IsMember({"positive", "perturbed", "rank"}));
  random->add_option("--r", random_args.r, "transversal dimension for --kind rank");
  random->add_option("--out", random_args.out_path, "output file (stdout if omitted)");

  auto* dp6 = app.add_subcommand("dp6", "Degree six del Pezzo surface S and hypersurface H");
  dp6->require_subcommand(1);
  auto* dp6_check = dp6->add_subcommand("check", "membership of (x, d, e, f) in S and of (d, e, f) in H");
  dp6_check->add_option("input", input, "instance file, or - for stdin")->required();
  auto* dp6_lift = dp6->add_subcommand("lift", "recover x from a point (d, e, f) of H");
  dp6_lift->add_option("input", input, "instance file, or - for stdin")->required();

  rank_search::RankSearchConfig cfg;
  double verify_tol = 1e-6;
  auto* rank = app.add_subcommand("rank-search", "Search for a rank-(r+1) completion of the face matrix");
  rank->add_option("input", input, "instance file, or - for stdin")->required();
  rank->add_option("--r", cfg.r, "dimension of the transversal linear space");
  rank->add_option("--tol", cfg.tol, "masked relative residual threshold");
  rank->add_option("--max-iter", cfg.max_iter, "iterations per restart");
  rank->add_option("--restarts", cfg.restarts, "random restarts");
  rank->add_option("--seed", cfg.seed, "initialisation seed");
  rank->add_option("--verify-tol", verify_tol, "principal-angle tolerance for the transversal check");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitPositive : kExitInputError;
  }

  try {
    if (check2d->parsed()) return cmd_check2d(input, args, out, err);
    if (check->parsed()) {
      if (!batch_dir.empty()) return cmd_check_batch(batch_dir, oracle, args, out, err);
      if (input.empty()) throw Error(ErrorCode::InvalidArgument, "check needs an input file or --batch DIR");
      return cmd_check(input, oracle, args, out, err);
    }
    if (random->parsed()) return cmd_random(random_args, out, err);
    if (dp6_check->parsed()) return cmd_dp6_check(input, args, out, err);
    if (dp6_lift->parsed()) return cmd_dp6_lift(input, args, out, err);
    if (rank->parsed()) return cmd_rank_search(input, cfg, verify_tol, args, out, err);
  } catch (const Error& e) {
    return error_exit(err, e);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }
  return kExitInputError;
}

}  // namespace cevian::cli
