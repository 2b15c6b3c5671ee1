#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "mhag/session.hpp"

namespace {

constexpr int kInputError = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw mhag::SpecError("cannot read spec file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void emit(const std::string& text, const std::string& out) {
  if (out.empty()) {
    std::cout << text << '\n';
    return;
  }
  std::ofstream f(out, std::ios::binary);
  if (!f) throw mhag::SpecError("cannot write '" + out + "'");
  f << text << '\n';
}

std::vector<std::string> split_list(const std::string& list) {
  std::vector<std::string> out;
  std::stringstream ss(list);
  for (std::string item; std::getline(ss, item, ',');) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

struct Common {
  std::string spec;
  std::string out;
  std::optional<std::uint64_t> seed;
  std::optional<std::int64_t> window;

  mhag::Session load() const {
    mhag::Session s = mhag::parse_session(read_file(spec));
    auto& en = s.config.enumeration;
    if (seed) en.seed = *seed;
    if (window) {
      if (*window < 1) throw mhag::SpecError("--window: must be at least 1");
      en.window = *window;
    }
    return s;
  }
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--spec", c.spec, "JSON session spec")->required();
  cmd->add_option("--out", c.out, "write output to this file instead of stdout");
  cmd->add_option("--seed", c.seed, "override the sampling seed");
  cmd->add_option("--window", c.window, "override the sampling window for infinite instances");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Group-cograded multiplier Hopf algebra verifier"};
  app.require_subcommand(1);

  Common verify_opts;
  std::string suites = "hopf,cograded,crossing,quasitriangular,lemma42,oracle";
  auto* verify = app.add_subcommand("verify", "run axiom suites and print a JSON report");
  add_common(verify, verify_opts);
  verify->add_option("--suite", suites, "comma-separated suites");

  Common oracle_opts;
  auto* oracle = app.add_subcommand("oracle-compare", "compare the generic construction with closed forms");
  add_common(oracle, oracle_opts);

  Common eval_opts;
  mhag::EvalRequest req;
  auto* eval = app.add_subcommand("eval", "evaluate one operation on literal elements");
  add_common(eval, eval_opts);
  eval->add_option("--op", req.op,
                   "mul | delta-right | delta-left | delta-tilde-right | counit | antipode | antipode-inv | xi | "
                   "grading-mul | r-left | r-right")
      ->required();
  eval->add_option("--grading", req.gradings, "grading indices into the spec's list (repeatable)");
  eval->add_option("-x", req.x, "first argument, e.g. \"2*a|b + a2|b2\"; tensor legs separated by ';'");
  eval->add_option("-y", req.y, "second argument or cover");

  Common export_opts;
  std::size_t export_grading = 0;
  auto* exp = app.add_subcommand("export", "export structure constants of one graded component");
  add_common(exp, export_opts);
  exp->add_option("--grading", export_grading, "grading index into the spec's list");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kInputError;
  }

  try {
    if (*verify || *oracle) {
      const Common& c = *verify ? verify_opts : oracle_opts;
      const mhag::Session s = c.load();
      const auto names = *verify ? split_list(suites) : std::vector<std::string>{"oracle"};
      const mhag::VerifyResult r = mhag::run_verify(s, names);
      emit(r.report.dump(2), c.out);
      return r.exit_code;
    }
    if (*eval) {
      const mhag::Session s = eval_opts.load();
      emit(mhag::evaluate(s, req), eval_opts.out);
      return 0;
    }
    const mhag::Session s = export_opts.load();
    if (export_grading >= s.config.gradings.size()) throw mhag::SpecError("--grading: index out of range");
    emit(mhag::export_structure(s, s.config.gradings[export_grading]).dump(2), export_opts.out);
    return 0;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  }
}
