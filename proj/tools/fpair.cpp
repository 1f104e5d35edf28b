#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "fpair/cli.hpp"
#include "fpair/errors.hpp"

namespace {

std::string slurp(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw fpair::Error("E_IO", "cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int emit(const fpair::Outcome& out, bool json) {
  if (json) {
    std::cout << out.report.dump(2) << "\n";
  } else {
    std::cout << fpair::render_text(out.report);
  }
  return out.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Characteristic-p invariants of pairs (R, a^t)", "fpair"};
  std::vector<std::string> args;
  fpair::RunOptions opts;
  bool json = false;
  std::uint64_t e_max = 0, degree_bound = 0;
  std::string test_element, point;
  app.add_option("args", args, "[COMMAND] FILE  (FILE is a corpus for hunt; - reads stdin)")->required()->expected(1, 2);
  auto* o_e = app.add_option("--e-max", e_max, "level bound (e_cap for testideal)");
  auto* o_d = app.add_option("--degree-bound", degree_bound, "degree bound for the old-definition search");
  auto* o_t = app.add_option("--test-element", test_element, "test element c");
  auto* o_p = app.add_option("--point", point, "rational point c1,c2,... of the maximal ideal");
  app.add_option("--seed", opts.seed, "seed for randomized searches");
  app.add_flag("--json", json, "JSON report");
  app.add_flag("--timing", opts.timing, "add timing_ms to the report");
  CLI11_PARSE(app, argc, argv);
  if (*o_e) opts.e_max = e_max;
  if (*o_d) opts.degree_bound = degree_bound;
  if (*o_t) opts.test_element = test_element;
  if (*o_p) opts.point = point;

  try {
    std::string file = args.back();
    if (args.size() == 2) opts.cmd = args.front();
    if (opts.cmd && *opts.cmd == "hunt") {
      return emit(fpair::run_hunt(fpair::parse_corpus(slurp(file)), opts), json);
    }
    fpair::Problem pr = fpair::apply_options(fpair::parse_problem(slurp(file)), opts);
    if (pr.cmd == "hunt") throw fpair::ContractError("hunt takes a corpus: fpair hunt FILE");
    return emit(fpair::run_problem(pr, opts), json);
  } catch (const fpair::Error& e) {
    auto out = fpair::error_outcome(e.code(), e.what());
    if (json) return emit(out, true);
    std::cerr << "error: " << e.code() << ": " << e.what() << "\n";
    return out.exit_code;
  } catch (const std::exception& e) {
    auto out = fpair::error_outcome("E_INTERNAL", e.what());
    if (json) return emit(out, true);
    std::cerr << "error: E_INTERNAL: " << e.what() << "\n";
    return out.exit_code;
  }
}
