#include <chrono>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "shk/analyze.hpp"
#include "shk/certify.hpp"
#include "shk/errors.hpp"
#include "shk/io.hpp"
#include "shk/verify.hpp"

namespace {

// Exit codes: 0 ok, 1 violation found / certificate rejected, 2 input error,
// 3 capacity error.
constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitInput = 2;
constexpr int kExitCapacity = 3;

std::vector<shk::FieldSpec> parse_fields(const std::string& list) {
  std::vector<shk::FieldSpec> fields;
  std::string token;
  auto flush = [&]() {
    if (token.empty()) return;
    auto f = shk::FieldSpec::parse(token);
    if (!f) throw shk::input_error("unknown field: " + token + " (use q, gf2, gf3, gf32003)");
    fields.push_back(*f);
    token.clear();
  };
  for (char ch : list) {
    if (ch == ',')
      flush();
    else
      token.push_back(ch);
  }
  flush();
  if (fields.empty()) throw shk::input_error("empty field list");
  return fields;
}

std::vector<std::string> split_list(const std::string& list) {
  std::vector<std::string> out;
  std::string token;
  for (char ch : list) {
    if (ch == ',') {
      if (!token.empty()) out.push_back(token);
      token.clear();
    } else {
      token.push_back(ch);
    }
  }
  if (!token.empty()) out.push_back(token);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"shk — decide combinatorial and homological properties of simplicial "
               "complexes and monomial ideals, with certificates"};
  app.require_subcommand(0, 1);

  // analyze
  auto* analyze = app.add_subcommand("analyze", "analyze a .cx, .mi, or .g file");
  std::string analyze_path;
  std::string props = "all";
  std::string fields = "q,gf2";
  bool exact = false;
  long long budget = 0;
  bool as_json = false;
  std::uint64_t seed = 0;
  std::string replay_path;
  analyze->add_option("path", analyze_path, "input file (.cx complex, .mi ideal, .g graph)");
  analyze->add_option("--props", props, "comma list: all, vd, vdism, shellable, scalable, wc, cm, icm, seqcm, depth, homology, fvec, dual, shedding:<v>, dismissing:<v>; ideals: divisible, splittable, lq, dq, betti, profile, dividing:<v>");
  analyze->add_option("--fields", fields, "comma list of coefficient fields (q, gf2, gf3, gf32003)");
  analyze->add_flag("--exact", exact, "exact mode (default)");
  analyze->add_option("--budget", budget, "heuristic mode: node budget per decision");
  analyze->add_flag("--json", as_json, "emit JSON");
  analyze->add_option("--seed", seed, "seed echoed into the report");
  analyze->add_option("--replay", replay_path, "validate an emitted certificate file and exit");

  // dualize
  auto* dualize = app.add_subcommand("dualize", "complex -> dual ideal, or squarefree ideal -> complex");
  std::string dualize_path;
  dualize->add_option("path", dualize_path, "input file (.cx or .mi)")->required();

  // verify
  auto* verify = app.add_subcommand("verify", "run randomized theorem batteries");
  shk::VerifyOptions vopts;
  std::string checks;
  bool verify_json = false;
  verify->add_option("--checks", checks,
                     "comma list: hierarchy, duality, skeletal, cycles, cochordal, mdim1, "
                     "truncation, polarization (default all)");
  verify->add_option("--vertices", vopts.vertices, "ambient vertex count for random instances");
  verify->add_option("--facets", vopts.facets, "faces sampled per random complex");
  verify->add_option("--trials", vopts.trials, "instances per check");
  verify->add_option("--seed", vopts.seed, "corpus seed");
  verify->add_option("--min-size", vopts.min_size, "minimum sampled face size");
  verify->add_option("--max-size", vopts.max_size, "maximum sampled face size (0 = auto)");
  verify->add_flag("--json", verify_json, "emit JSON");

  CLI11_PARSE(app, argc, argv);

  try {
    if (analyze->parsed()) {
      if (!replay_path.empty()) {
        shk::Json cert = shk::Json::parse(shk::read_file(replay_path));
        shk::ReplayResult result = shk::check_certificate(cert);
        if (result.accepted) {
          std::cout << "certificate accepted\n";
          return kExitOk;
        }
        std::cout << "certificate rejected: " << result.reason << "\n";
        return kExitViolation;
      }
      if (analyze_path.empty()) throw shk::input_error("analyze needs a path or --replay");
      shk::AnalyzeOptions opts;
      opts.props = split_list(props);
      opts.fields = parse_fields(fields);
      if (budget > 0) opts.budget = budget;
      if (exact) opts.budget.reset();
      opts.seed = seed;
      auto start = std::chrono::steady_clock::now();
      shk::Json report = shk::analyze_file(analyze_path, opts);
      auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                         std::chrono::steady_clock::now() - start)
                         .count();
      if (as_json) {
        std::cout << report.dump(2) << "\n";
        std::cerr << "elapsed_ms " << elapsed << "\n";
      } else {
        std::cout << shk::render_human(report);
        std::cout << "elapsed_ms: " << elapsed << "\n";
      }
      return kExitOk;
    }
    if (dualize->parsed()) {
      std::cout << shk::dualize_file(dualize_path);
      return kExitOk;
    }
    if (verify->parsed()) {
      if (!checks.empty()) vopts.checks = split_list(checks);
      shk::VerifyReport report = shk::run_verify(vopts);
      if (verify_json)
        std::cout << shk::verify_to_json(report).dump(2) << "\n";
      else
        std::cout << shk::verify_to_text(report);
      return report.ok() ? kExitOk : kExitViolation;
    }
    std::cout << app.help();
    return kExitOk;
  } catch (const shk::capacity_error& e) {
    std::cerr << "capacity error: " << e.what() << "\n";
    return kExitCapacity;
  } catch (const shk::input_error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const shk::Json::exception& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  }
}
