#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "mhag/session.hpp"

using namespace mhag;
namespace fs = std::filesystem;

namespace {

const char* const kZSpec =
    R"j({"instance":{"kind":"group","group":{"kind":"int"}},"gradings":[["identity","identity"],["identity","negation"],["negation","identity"],["negation","negation"]],"enum":{"mode":"sampled","count":200,"seed":42,"window":8}})j";
const char* const kS3Spec =
    R"j({"instance":{"kind":"group","group":{"kind":"perm","degree":3,"generators":[[1,0,2],[1,2,0]]}},"gradings":[["identity","identity"],[{"kind":"inner","by":"(12)"},{"kind":"inner","by":"(123)"}]]})j";
const char* const kZ2Spec = R"j({"instance":{"kind":"group","group":{"kind":"cyclic","n":2}}})j";

fs::path scratch_dir() {
  const fs::path dir = fs::temp_directory_path() / ("mhag_cli_test_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  return dir;
}

fs::path write(const std::string& name, const std::string& text) {
  const fs::path p = scratch_dir() / name;
  std::ofstream(p, std::ios::binary) << text;
  return p;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Runs the CLI with stdout to `out`; returns its exit status.
int run(const std::string& args, const fs::path& out, const std::string& env = "") {
  const std::string cmd = env + " " + std::string(MHAG_CLI_PATH) + " " + args + " > " + out.string() + " 2> " +
                          (out.string() + ".err");
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string spec_error(const std::string& text) {
  try {
    parse_session(text);
  } catch (const SpecError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_SUITE("session") {
  TEST_CASE("valid specs parse") {
    const Session z = parse_session(kZSpec);
    CHECK(z.config.gradings.size() == 4);
    CHECK(z.config.enumeration.mode == Enumeration::Mode::Sampled);
    CHECK(z.config.enumeration.seed == 42);
    const Session s = parse_session(kS3Spec);
    CHECK(s.config.gradings.size() == 2);
    CHECK(s.config.enumeration.mode == Enumeration::Mode::Exhaustive);
    const Session p = parse_session(R"j({"scalars":{"prime":7},"instance":{"kind":"drinfeld-double","group":{"kind":"symmetric","degree":3}}})j");
    CHECK(p.field.prime == 7u);
  }

  TEST_CASE("diagnostics name the offending field") {
    CHECK(spec_error("{").find("not valid JSON") != std::string::npos);
    CHECK(spec_error(R"j({"instance":{"kind":"group","group":{"kind":"int"}},"gradingz":[]})j").find("spec.gradingz") == 0);
    CHECK(spec_error(R"j({"instance":{"kind":"group","group":{"kind":"perm","degree":12,"generators":[[1,2,3,4,5,6,7,8,9,10,11,0],[1,0,2,3,4,5,6,7,8,9,10,11]]}}})j")
              .find("instance.group") == 0);
    CHECK(spec_error(R"j({"instance":{"kind":"group","group":{"kind":"perm","degree":3,"generators":[[1,1,2]]}}})j")
              .find("not a permutation") != std::string::npos);
    CHECK(spec_error(R"j({"instance":{"kind":"group","group":{"kind":"symmetric","degree":3}},"gradings":[[{"kind":"map","images":{"(12)":"(123)","(123)":"(123)"}},"identity"]]})j")
              .find("gradings[0][0]") == 0);
    CHECK(spec_error(R"j({"instance":{"kind":"group","group":{"kind":"int"}},"enum":{"mode":"exhaustive"}})j").find("enum.mode") == 0);
    CHECK(spec_error(R"j({"instance":{"kind":"group","group":{"kind":"int"}},"enum":{"window":0}})j").find("enum.window") == 0);
    CHECK(spec_error(R"j({"scalars":{"prime":8},"instance":{"kind":"group","group":{"kind":"int"}}})j").find("scalars.prime") == 0);
    CHECK(spec_error(R"j({"instance":{"kind":"group","group":{"kind":"int"}},"faults":["nope"]})j").find("faults") == 0);
  }

  TEST_CASE("structure constants failing coassociativity are refused with the basis triple") {
    const std::string bad =
        R"j({"instance":{"kind":"finite-dim-hopf","hopf":{"dim":2,"basis":["1","g"],"unit":["1","0"],)j"
        R"j("mul":[[0,0,0,"1"],[0,1,1,"1"],[1,0,1,"1"],[1,1,0,"1"]],)j"
        R"j("comul":[[0,0,0,"1"],[1,1,1,"1"],[1,0,1,"1"]],"counit":["1","1"],"antipode":[[0,0,"1"],[1,1,"1"]]}}})j";
    const std::string err = spec_error(bad);
    CHECK(err.find("instance") == 0);
    CHECK(err.find("not coassociative at g, basis triple") != std::string::npos);
  }

  TEST_CASE("a structure-constant instance verifies") {
    const std::string good =
        R"j({"instance":{"kind":"finite-dim-hopf","hopf":{"dim":2,"basis":["1","g"],"unit":["1","0"],)j"
        R"j("mul":[[0,0,0,"1"],[0,1,1,"1"],[1,0,1,"1"],[1,1,0,"1"]],)j"
        R"j("comul":[[0,0,0,"1"],[1,1,1,"1"]],"counit":["1","1"],"antipode":[[0,0,"1"],[1,1,"1"]]}}})j";
    const Session s = parse_session(good);
    const VerifyResult r = run_verify(s, all_suites());
    CHECK(r.exit_code == 0);
  }

  TEST_CASE("literal elements evaluate") {
    const Session z = parse_session(kZSpec);
    CHECK(evaluate(z, {"mul", {1}, "d1|2", "d5|3"}) == evaluate(z, {"mul", {1}, "d1|5", "unit|0"}));
    CHECK(evaluate(z, {"counit", {}, "2*d0|0 + 7*d1|3", ""}) == "2");
    CHECK_THROWS_AS(evaluate(z, {"mul", {9}, "d1|2", "d1|2"}), SpecError);
    CHECK_THROWS_AS(evaluate(z, {"frobnicate", {}, "", ""}), SpecError);
    CHECK_THROWS_AS(parse_crossed(z, "d1"), SpecError);
  }
}

TEST_SUITE("cli") {
  TEST_CASE("verify exit codes") {
    const fs::path out = scratch_dir() / "out.json";
    CHECK(run("verify --spec " + write("z.json", kZSpec).string(), out) == 0);
    CHECK(slurp(out).find("\"status\": \"pass\"") != std::string::npos);
    CHECK(run("verify --spec " + write("s3.json", kS3Spec).string(), out) == 0);
    CHECK(run("verify --spec " + write("bad.json", "{\"instance\":").string(), out) == 2);
    CHECK(run("verify --spec /nonexistent/spec.json", out) == 2);
    CHECK(run("verify --spec " + write("z.json", kZSpec).string() + " --suite nope", out) == 2);
    CHECK(run("verify --spec " + write("z.json", kZSpec).string() + " --window 0", out) == 2);
    CHECK(run("frobnicate", out) == 2);
  }

  TEST_CASE("a corrupted antipode fails with a named axiom and both sides") {
    std::string spec = kZSpec;
    spec.insert(spec.size() - 1, R"j(,"faults":["antipode_sign"])j");
    const fs::path out = scratch_dir() / "fault.json";
    CHECK(run("verify --suite hopf --spec " + write("zf.json", spec).string(), out) == 1);
    const Json report = Json::parse(slurp(out));
    CHECK(report["status"] == "fail");
    CHECK(report["first_failure"]["axiom"] == "antipode axiom");
    CHECK(report["first_failure"]["counterexample"].contains("lhs"));
    CHECK(report["first_failure"]["counterexample"].contains("rhs"));
  }

  TEST_CASE("reports are deterministic across runs and thread counts") {
    const fs::path spec = write("z.json", kZSpec);
    const fs::path a = scratch_dir() / "a.json", b = scratch_dir() / "b.json", c = scratch_dir() / "c.json";
    CHECK(run("verify --spec " + spec.string(), a) == 0);
    CHECK(run("verify --spec " + spec.string(), b, "MHAG_THREADS=1") == 0);
    CHECK(slurp(a) == slurp(b));
    CHECK(run("verify --spec " + spec.string() + " --seed 7", c) == 0);
    CHECK(slurp(a) != slurp(c));
  }

  TEST_CASE("export") {
    const fs::path spec = write("z2.json", kZ2Spec);
    const fs::path a = scratch_dir() / "e1.json", b = scratch_dir() / "e2.json";
    CHECK(run("export --spec " + spec.string() + " --out " + a.string(), scratch_dir() / "ignored") == 0);
    CHECK(run("export --spec " + spec.string() + " --out " + b.string(), scratch_dir() / "ignored") == 0);
    CHECK(slurp(a) == slurp(b));
    const Json e = Json::parse(slurp(a));
    CHECK(e["basis"].size() == 4);
    CHECK(e["mul"].size() <= 16);
    CHECK(!e["mul"].empty());
    const fs::path out = scratch_dir() / "zexp";
    CHECK(run("export --spec " + write("z.json", kZSpec).string(), out) == 2);
    CHECK(slurp(fs::path(out.string() + ".err")).find("infinite instance") != std::string::npos);
  }

  TEST_CASE("eval and oracle-compare") {
    const fs::path out = scratch_dir() / "eval.txt";
    CHECK(run("eval --spec " + write("z.json", kZSpec).string() + " --op antipode --grading 0 -x 'd3|2'", out) == 0);
    CHECK(slurp(out) == "(d-3 ⋈ -2)\n");
    CHECK(run("oracle-compare --spec " + write("s3.json", kS3Spec).string(), out) == 0);
    CHECK(run("eval --spec " + write("z.json", kZSpec).string() + " --op nope", out) == 2);
  }
}
