#include "mhag/session.hpp"

#include <algorithm>
#include <set>

#include "mhag/format.hpp"

namespace mhag {

namespace {

using Doc = nlohmann::json;

[[noreturn]] void fail(const std::string& path, const std::string& msg) { throw SpecError(path + ": " + msg); }

void allow_keys(const Doc& obj, const std::string& path, std::initializer_list<const char*> keys) {
  if (!obj.is_object()) fail(path, "expected an object");
  for (const auto& [k, v] : obj.items()) {
    if (std::none_of(keys.begin(), keys.end(), [&](const char* a) { return k == a; })) {
      fail(path + "." + k, "unknown field");
    }
  }
}

const Doc& need(const Doc& obj, const char* key, const std::string& path) {
  if (!obj.contains(key)) fail(path + "." + key, "missing field");
  return obj.at(key);
}

std::string text_of(const Doc& v, const std::string& path) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return std::to_string(v.get<std::int64_t>());
  fail(path, "expected a string or integer");
}

std::int64_t int_of(const Doc& v, const std::string& path) {
  if (!v.is_number_integer()) fail(path, "expected an integer");
  return v.get<std::int64_t>();
}

Scalar scalar_of(const Doc& v, const FieldSpec& field, const std::string& path) {
  try {
    return field.convert(Scalar::parse(text_of(v, path)));
  } catch (const SpecError&) {
    throw;
  } catch (const std::exception& e) {
    fail(path, e.what());
  }
}

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

GroupPtr parse_group(const Doc& g, const std::string& path) {
  try {
    const std::string kind = text_of(need(g, "kind", path), path + ".kind");
    if (kind == "int") {
      allow_keys(g, path, {"kind"});
      return Group::integers();
    }
    if (kind == "cyclic") {
      allow_keys(g, path, {"kind", "n"});
      return Group::cyclic(static_cast<int>(int_of(need(g, "n", path), path + ".n")));
    }
    if (kind == "symmetric") {
      allow_keys(g, path, {"kind", "degree"});
      return Group::symmetric(static_cast<int>(int_of(need(g, "degree", path), path + ".degree")));
    }
    if (kind == "table") {
      allow_keys(g, path, {"kind", "elements", "mul"});
      std::vector<std::string> names;
      for (const auto& e : need(g, "elements", path)) names.push_back(text_of(e, path + ".elements"));
      const std::size_t n = names.size();
      std::vector<std::vector<GroupElem>> table(n, std::vector<GroupElem>(n, -1));
      for (const auto& t : need(g, "mul", path)) {
        if (!t.is_array() || t.size() != 3) fail(path + ".mul", "entries must be [i, j, k]");
        const auto i = int_of(t[0], path + ".mul"), j = int_of(t[1], path + ".mul"), k = int_of(t[2], path + ".mul");
        if (i < 0 || j < 0 || static_cast<std::size_t>(i) >= n || static_cast<std::size_t>(j) >= n) {
          fail(path + ".mul", "index out of range");
        }
        table[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = k;
      }
      return Group::table(std::move(names), std::move(table));
    }
    if (kind == "perm") {
      allow_keys(g, path, {"kind", "degree", "generators"});
      const int degree = static_cast<int>(int_of(need(g, "degree", path), path + ".degree"));
      std::vector<Perm> gens;
      for (const auto& p : need(g, "generators", path)) {
        Perm perm;
        for (const auto& v : p) perm.push_back(static_cast<int>(int_of(v, path + ".generators")));
        // 1-based image lists are accepted as well.
        if (std::find(perm.begin(), perm.end(), 0) == perm.end()) {
          for (int& v : perm) --v;
        }
        gens.push_back(std::move(perm));
      }
      return Group::perm(degree, std::move(gens));
    }
    fail(path + ".kind", "unknown group kind '" + kind + "'");
  } catch (const GroupError& e) {
    fail(path, e.what());
  }
}

Automorphism parse_group_aut(const Doc& a, const GroupPtr& g, const std::string& path) {
  try {
    if (a.is_string()) {
      const std::string k = a.get<std::string>();
      if (k == "identity") return Automorphism::identity(g);
      if (k == "negation") return Automorphism::negation(g);
      fail(path, "unknown automorphism '" + k + "'");
    }
    const std::string kind = text_of(need(a, "kind", path), path + ".kind");
    if (kind == "identity" || kind == "negation") {
      allow_keys(a, path, {"kind"});
      return kind == "identity" ? Automorphism::identity(g) : Automorphism::negation(g);
    }
    if (kind == "inner") {
      allow_keys(a, path, {"kind", "by"});
      return Automorphism::inner(g, g->parse(text_of(need(a, "by", path), path + ".by")));
    }
    if (kind == "map") {
      allow_keys(a, path, {"kind", "images"});
      std::map<GroupElem, GroupElem> images;
      for (const auto& [k, v] : need(a, "images", path).items()) {
        images[g->parse(k)] = g->parse(text_of(v, path + ".images." + k));
      }
      if (g->finite() && images.size() == g->order()) {
        std::vector<GroupElem> table;
        for (const auto& [k, v] : images) table.push_back(v);
        return Automorphism::from_table(g, std::move(table));
      }
      std::vector<GroupElem> gen_images;
      for (GroupElem gen : g->generators()) {
        auto it = images.find(gen);
        if (it == images.end()) fail(path + ".images", "needs the image of every element or of generator " + g->name(gen));
        gen_images.push_back(it->second);
      }
      return Automorphism::from_generator_images(g, gen_images);
    }
    fail(path + ".kind", "unknown automorphism kind '" + kind + "'");
  } catch (const GroupError& e) {
    fail(path, e.what());
  }
}

HopfAut parse_aut(const Doc& a, const Session& s, const std::string& path) {
  const InstancePtr b = s.pairing->b_ptr();
  try {
    if (s.group) return HopfAut::from_group(b, parse_group_aut(a, s.group, path));
    if (a.is_string() && a.get<std::string>() == "identity") return HopfAut::identity(b);
    allow_keys(a, path, {"kind", "images"});
    const std::string kind = text_of(need(a, "kind", path), path + ".kind");
    if (kind == "identity") return HopfAut::identity(b);
    if (kind != "map") fail(path + ".kind", "structure-constant instances accept 'identity' or 'map'");
    std::vector<Elem> images(b->basis().size());
    std::vector<bool> seen(images.size(), false);
    for (const auto& [k, v] : need(a, "images", path).items()) {
      const Label src = b->parse_label(k);
      const std::string sub = path + ".images." + k;
      Elem img;
      if (v.is_object()) {
        for (const auto& [t, c] : v.items()) img.add(b->parse_label(t), scalar_of(c, s.field, sub + "." + t));
      } else {
        img = Elem::basis(b->parse_label(text_of(v, sub)), s.field.one());
      }
      images.at(static_cast<std::size_t>(src)) = img;
      seen.at(static_cast<std::size_t>(src)) = true;
    }
    if (std::find(seen.begin(), seen.end(), false) != seen.end()) fail(path + ".images", "every basis element needs an image");
    return HopfAut::from_images(b, std::move(images), "map");
  } catch (const MhaError& e) {
    fail(path, e.what());
  }
}

HopfStructure parse_hopf(const Doc& h, const FieldSpec& field, const std::string& path) {
  allow_keys(h, path, {"dim", "basis", "unit", "mul", "comul", "counit", "antipode"});
  HopfStructure s;
  const auto dim = int_of(need(h, "dim", path), path + ".dim");
  if (dim <= 0) fail(path + ".dim", "must be positive");
  const auto n = static_cast<std::size_t>(dim);
  for (const auto& v : need(h, "basis", path)) s.names.push_back(text_of(v, path + ".basis"));
  if (s.names.size() != n) fail(path + ".basis", "expected " + std::to_string(n) + " names");
  auto index = [&](const Doc& v, const std::string& p) {
    const auto i = int_of(v, p);
    if (i < 0 || static_cast<std::size_t>(i) >= n) fail(p, "basis index out of range");
    return static_cast<Label>(i);
  };
  const Doc& unit = need(h, "unit", path);
  if (!unit.is_array() || unit.size() != n) fail(path + ".unit", "expected " + std::to_string(n) + " coefficients");
  for (std::size_t i = 0; i < n; ++i) s.unit.add(static_cast<Label>(i), scalar_of(unit[i], field, path + ".unit"));
  s.mul.assign(n, std::vector<Elem>(n));
  for (const auto& t : need(h, "mul", path)) {
    if (!t.is_array() || t.size() != 4) fail(path + ".mul", "entries must be [i, j, k, \"q\"]");
    const Label i = index(t[0], path + ".mul"), j = index(t[1], path + ".mul"), k = index(t[2], path + ".mul");
    s.mul[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)].add(k, scalar_of(t[3], field, path + ".mul"));
  }
  s.comul.assign(n, Elem2{});
  for (const auto& t : need(h, "comul", path)) {
    if (!t.is_array() || t.size() != 4) fail(path + ".comul", "entries must be [i, j, k, \"q\"]");
    const Label i = index(t[0], path + ".comul"), j = index(t[1], path + ".comul"), k = index(t[2], path + ".comul");
    s.comul[static_cast<std::size_t>(i)].add(Key2{j, k}, scalar_of(t[3], field, path + ".comul"));
  }
  const Doc& counit = need(h, "counit", path);
  if (!counit.is_array() || counit.size() != n) fail(path + ".counit", "expected " + std::to_string(n) + " values");
  for (const auto& v : counit) s.counit.push_back(scalar_of(v, field, path + ".counit"));
  s.antipode.assign(n, Elem{});
  for (const auto& t : need(h, "antipode", path)) {
    if (!t.is_array() || t.size() != 3) fail(path + ".antipode", "entries must be [i, j, \"q\"]");
    const Label i = index(t[0], path + ".antipode"), j = index(t[1], path + ".antipode");
    s.antipode[static_cast<std::size_t>(i)].add(j, scalar_of(t[2], field, path + ".antipode"));
  }
  return s;
}

void build_instance(Session& s, const Doc& inst) {
  const std::string path = "instance";
  const std::string kind = text_of(need(inst, "kind", path), path + ".kind");
  try {
    if (kind == "group") {
      allow_keys(inst, path, {"kind", "group", "representation"});
      s.kind = InstanceKind::Group;
      s.group = parse_group(need(inst, "group", path), path + ".group");
      const std::string rep = inst.contains("representation") ? text_of(inst["representation"], path + ".representation")
                                                               : "function-algebra";
      if (rep == "function-algebra") {
        s.pairing = std::make_shared<Pairing>(std::make_shared<FunctionAlgebra>(s.group, s.field),
                                              std::make_shared<GroupAlgebra>(s.group, s.field));
      } else if (rep == "dual-basis") {
        if (!s.group->finite()) fail(path + ".representation", "dual-basis needs a finite group");
        auto b = FiniteDimHopf::group_algebra(s.group, s.field);
        s.pairing = std::make_shared<Pairing>(b->dual(), b);
      } else {
        fail(path + ".representation", "expected 'function-algebra' or 'dual-basis'");
      }
    } else if (kind == "drinfeld-double") {
      allow_keys(inst, path, {"kind", "group"});
      s.kind = InstanceKind::DrinfeldDouble;
      s.group = parse_group(need(inst, "group", path), path + ".group");
      if (!s.group->finite()) fail(path + ".group", "the double is supported for finite groups only");
      s.pairing = std::make_shared<Pairing>(FiniteDimHopf::drinfeld_double_dual(s.group, s.field),
                                            FiniteDimHopf::drinfeld_double(s.group, s.field));
    } else if (kind == "finite-dim-hopf") {
      allow_keys(inst, path, {"kind", "hopf"});
      s.kind = InstanceKind::FiniteDimHopf;
      auto b = std::make_shared<const FiniteDimHopf>("H", parse_hopf(need(inst, "hopf", path), s.field, path + ".hopf"));
      s.pairing = std::make_shared<Pairing>(b->dual("H*"), b);
    } else {
      fail(path + ".kind", "unknown instance kind '" + kind + "'");
    }
  } catch (const MhaError& e) {
    fail(path, e.what());
  }
}

Faults parse_faults(const Doc& v) {
  Faults f;
  if (!v.is_array()) fail("faults", "expected an array of names");
  for (const auto& n : v) {
    const std::string k = text_of(n, "faults");
    if (k == "antipode_sign") f.antipode_sign = true;
    else if (k == "drop_r_summand") f.drop_r_summand = true;
    else if (k == "swap_delta_legs") f.swap_delta_legs = true;
    else if (k == "wrong_pair_twist") f.wrong_pair_twist = true;
    else if (k == "wrong_xi") f.wrong_xi = true;
    else fail("faults", "unknown fault '" + k + "'");
  }
  return f;
}

Grading parse_grading(const Doc& g, const Session& s, const std::string& path) {
  if (!g.is_array() || g.size() != 2) fail(path, "a grading is a pair [alpha, beta]");
  return {parse_aut(g[0], s, path + "[0]"), parse_aut(g[1], s, path + "[1]")};
}

}  // namespace

void set_faults(Session& s, const Faults& f) {
  s.faults = f;
  s.algebra = std::make_shared<const DoubleAlgebra>(s.pairing, f);
}

Session parse_session(const std::string& text) {
  Doc doc;
  try {
    doc = Doc::parse(text);
  } catch (const Doc::parse_error& e) {
    throw SpecError(std::string("spec is not valid JSON: ") + e.what());
  }
  allow_keys(doc, "spec", {"scalars", "instance", "gradings", "enum", "faults", "r_form", "splits", "rank_limit"});
  Session s;
  if (doc.contains("scalars")) {
    const Doc& sc = doc["scalars"];
    if (sc.is_string() && sc.get<std::string>() == "rational") {
      // default
    } else if (sc.is_object()) {
      allow_keys(sc, "scalars", {"prime"});
      const auto p = int_of(need(sc, "prime", "scalars"), "scalars.prime");
      if (p <= 0 || !is_prime(static_cast<std::uint64_t>(p))) fail("scalars.prime", "must be a prime");
      s.field.prime = static_cast<std::uint64_t>(p);
    } else {
      fail("scalars", "expected \"rational\" or {\"prime\": p}");
    }
  }
  build_instance(s, need(doc, "instance", "spec"));
  const bool finite = s.pairing->a().finite_dimensional();

  if (doc.contains("gradings")) {
    const Doc& gs = doc["gradings"];
    if (!gs.is_array() || gs.empty()) fail("gradings", "expected a non-empty array");
    for (std::size_t i = 0; i < gs.size(); ++i) {
      Grading g = parse_grading(gs[i], s, "gradings[" + std::to_string(i) + "]");
      if (std::find(s.config.gradings.begin(), s.config.gradings.end(), g) == s.config.gradings.end()) {
        s.config.gradings.push_back(std::move(g));
      }
    }
  } else {
    const HopfAut id = HopfAut::identity(s.pairing->b_ptr());
    s.config.gradings.push_back({id, id});
  }

  Enumeration& en = s.config.enumeration;
  en.mode = finite ? Enumeration::Mode::Exhaustive : Enumeration::Mode::Sampled;
  if (doc.contains("enum")) {
    const Doc& e = doc["enum"];
    allow_keys(e, "enum", {"mode", "count", "seed", "window"});
    if (e.contains("mode")) {
      const std::string m = text_of(e["mode"], "enum.mode");
      if (m == "exhaustive") en.mode = Enumeration::Mode::Exhaustive;
      else if (m == "sampled") en.mode = Enumeration::Mode::Sampled;
      else fail("enum.mode", "expected 'exhaustive' or 'sampled'");
    }
    if (e.contains("count")) {
      const auto c = int_of(e["count"], "enum.count");
      if (c <= 0) fail("enum.count", "must be positive");
      en.count = static_cast<std::size_t>(c);
    }
    if (e.contains("seed")) en.seed = static_cast<std::uint64_t>(int_of(e["seed"], "enum.seed"));
    if (e.contains("window")) en.window = int_of(e["window"], "enum.window");
  }
  if (!finite && en.mode == Enumeration::Mode::Exhaustive) fail("enum.mode", "exhaustive needs a finite instance");
  if (!finite && en.window < 1) fail("enum.window", "must be at least 1 for an infinite instance");

  if (doc.contains("r_form")) {
    const std::string f = text_of(doc["r_form"], "r_form");
    if (f == "canonical") s.config.r_form = RForm::Canonical;
    else if (f == "literal") s.config.r_form = RForm::Literal;
    else fail("r_form", "expected 'canonical' or 'literal'");
    if (s.config.r_form == RForm::Literal && !finite) fail("r_form", "the literal form needs a finite instance");
  }
  if (doc.contains("rank_limit")) s.config.rank_dim_limit = static_cast<std::size_t>(int_of(doc["rank_limit"], "rank_limit"));
  Faults faults;
  if (doc.contains("faults")) faults = parse_faults(doc["faults"]);
  set_faults(s, faults);
  if (doc.contains("splits")) {
    const Doc& sp = doc["splits"];
    if (!sp.is_array()) fail("splits", "expected an array of grading pairs");
    for (std::size_t i = 0; i < sp.size(); ++i) {
      const std::string path = "splits[" + std::to_string(i) + "]";
      if (!sp[i].is_array() || sp[i].size() != 2) fail(path, "a split is [grading, grading]");
      s.splits.emplace_back(parse_grading(sp[i][0], s, path + "[0]"), parse_grading(sp[i][1], s, path + "[1]"));
    }
  }
  return s;
}

VerifyResult run_verify(const Session& s, const std::vector<std::string>& suites) {
  using SuiteFn = SuiteReport (*)(const DoubleAlgebra&, const SuiteConfig&);
  const std::map<std::string, SuiteFn> table{{"hopf", hopf_suite},         {"cograded", cograded_suite},
                                             {"crossing", crossing_suite}, {"quasitriangular", quasitriangular_suite},
                                             {"lemma42", lemma_suite},     {"oracle", oracle_suite}};
  for (const auto& name : suites) {
    if (!table.count(name)) throw SpecError("suite: unknown suite '" + name + "'");
  }
  VerifyResult r;
  Json per_suite = Json::object();
  Json first = nullptr;
  for (const auto& name : all_suites()) {
    if (std::find(suites.begin(), suites.end(), name) == suites.end()) continue;
    Json list = Json::array();
    for (const auto& rep : table.at(name)(*s.algebra, s.config)) {
      if (!rep.pass && first.is_null()) {
        first = Json{{"suite", name}, {"axiom", rep.axiom}, {"counterexample", rep.counterexample}};
      }
      list.push_back(to_json(rep));
    }
    per_suite[name] = list;
  }
  r.exit_code = first.is_null() ? 0 : 1;
  r.report["instance"] = s.pairing->a().name() + " / " + s.pairing->b().name();
  const Enumeration& en = s.config.enumeration;
  Json enumeration{{"mode", en.mode == Enumeration::Mode::Exhaustive ? "exhaustive" : "sampled"}};
  if (en.mode == Enumeration::Mode::Sampled) {
    enumeration["count"] = en.count;
    enumeration["seed"] = en.seed;
    if (!s.pairing->a().finite_dimensional()) enumeration["window"] = en.window;
  }
  r.report["enumeration"] = enumeration;
  Json gradings = Json::array();
  for (const auto& g : s.config.gradings) gradings.push_back(grading_str(g));
  r.report["gradings"] = gradings;
  r.report["status"] = first.is_null() ? "pass" : "fail";
  r.report["first_failure"] = first;
  r.report["suites"] = per_suite;
  return r;
}

Json export_structure(const Session& s, const Grading& p) {
  const DoubleAlgebra& d = *s.algebra;
  if (!d.a().finite_dimensional()) throw SpecError("export: infinite instance");
  const std::vector<Key2> basis = d.basis();
  std::map<Key2, std::size_t> index;
  for (std::size_t i = 0; i < basis.size(); ++i) index[basis[i]] = i;
  Json out;
  out["instance"] = d.a().name() + " / " + d.b().name();
  out["grading"] = grading_str(p);
  Json names = Json::array();
  for (const auto& k : basis) names.push_back(crossed_str(d, CrossedElem::basis(k)));
  out["basis"] = names;
  Json mul = Json::array();
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = 0; j < basis.size(); ++j) {
      for (const auto& [k, c] : d.mul(p, CrossedElem::basis(basis[i]), CrossedElem::basis(basis[j]))) {
        mul.push_back(Json::array({i, j, index.at(k), scalar_str(c)}));
      }
    }
  }
  out["mul"] = mul;
  std::vector<std::pair<Grading, Grading>> splits = s.splits;
  if (splits.empty()) splits = {{d.unit_grading(), p}, {p, d.unit_grading()}};
  Json js = Json::array();
  for (const auto& [q1, q2] : splits) {
    if (d.grading_mul(q1, q2) != p) throw SpecError("export: split " + grading_str(q1) + " * " + grading_str(q2) + " is not the exported grading");
    Json entries = Json::array();
    for (std::size_t x = 0; x < basis.size(); ++x) {
      for (std::size_t y = 0; y < basis.size(); ++y) {
        const CrossedPair img = d.delta_right(q1, q2, CrossedElem::basis(basis[x]), CrossedElem::basis(basis[y]));
        for (const auto& [k, c] : img) {
          entries.push_back(Json::array(
              {x, y, index.at(Key2{k[0], k[1]}), index.at(Key2{k[2], k[3]}), scalar_str(c)}));
        }
      }
    }
    js.push_back(Json{{"left", grading_str(q1)}, {"right", grading_str(q2)}, {"delta_right_cover", entries}});
  }
  out["splits"] = js;
  return out;
}

namespace {

template <std::size_t Legs>
LinComb<Key<2 * Legs>> parse_tensor(const Session& s, const std::string& text) {
  const DoubleAlgebra& d = *s.algebra;
  auto trim = [](std::string t) {
    const auto b = t.find_first_not_of(" \t");
    const auto e = t.find_last_not_of(" \t");
    return b == std::string::npos ? std::string() : t.substr(b, e - b + 1);
  };
  auto label = [&](const MhaInstance& inst, const std::string& t) -> Label {
    const std::string v = trim(t);
    if (v == "unit") return kUnit;
    try {
      const Label l = inst.parse_label(v);
      if (!inst.has_label(l)) throw SpecError("");
      return l;
    } catch (const std::exception&) {
      throw SpecError("element: '" + v + "' is not a label of " + inst.name());
    }
  };
  LinComb<Key<2 * Legs>> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t plus = text.find('+', pos);
    if (plus == std::string::npos) plus = text.size();
    std::string term = trim(text.substr(pos, plus - pos));
    pos = plus + 1;
    if (term.empty()) throw SpecError("element: empty term in '" + text + "'");
    Scalar c = s.field.one();
    if (auto star = term.find('*'); star != std::string::npos) {
      try {
        c = s.field.convert(Scalar::parse(trim(term.substr(0, star))));
      } catch (const std::exception& e) {
        throw SpecError(std::string("element: bad coefficient: ") + e.what());
      }
      term = term.substr(star + 1);
    }
    Key<2 * Legs> key{};
    std::size_t start = 0;
    for (std::size_t leg = 0; leg < Legs; ++leg) {
      std::size_t semi = term.find(';', start);
      if ((semi == std::string::npos) != (leg + 1 == Legs)) throw SpecError("element: expected " + std::to_string(Legs) + " legs in '" + term + "'");
      if (semi == std::string::npos) semi = term.size();
      const std::string part = term.substr(start, semi - start);
      const auto bar = part.find('|');
      if (bar == std::string::npos) throw SpecError("element: expected 'a|b' in '" + part + "'");
      key[2 * leg] = label(d.a(), part.substr(0, bar));
      key[2 * leg + 1] = label(d.b(), part.substr(bar + 1));
      start = semi + 1;
    }
    out.add(key, c);
    if (plus == text.size()) break;
  }
  return out;
}

}  // namespace

CrossedElem parse_crossed(const Session& s, const std::string& text) { return parse_tensor<1>(s, text); }
CrossedPair parse_crossed_pair(const Session& s, const std::string& text) { return parse_tensor<2>(s, text); }

std::string evaluate(const Session& s, const EvalRequest& r) {
  const DoubleAlgebra& d = *s.algebra;
  auto grading = [&](std::size_t i) -> const Grading& {
    if (i >= r.gradings.size()) throw SpecError("eval: operation '" + r.op + "' needs " + std::to_string(i + 1) + " grading indices");
    const std::size_t g = r.gradings[i];
    if (g >= s.config.gradings.size()) throw SpecError("eval: grading index " + std::to_string(g) + " out of range");
    return s.config.gradings[g];
  };
  auto x = [&] { return parse_crossed(s, r.x); };
  auto y = [&] { return parse_crossed(s, r.y); };
  if (r.op == "mul") return crossed_str(d, d.mul(grading(0), x(), y()));
  if (r.op == "delta-right") return crossed_str(d, d.delta_right(grading(0), grading(1), x(), y()));
  if (r.op == "delta-left") return crossed_str(d, d.delta_left(grading(0), grading(1), x(), y()));
  if (r.op == "delta-tilde-right") return crossed_str(d, d.delta_tilde_right(grading(0), grading(1), x(), y()));
  if (r.op == "counit") return scalar_str(d.counit(x()));
  if (r.op == "antipode") return crossed_str(d, d.antipode(grading(0), x()));
  if (r.op == "antipode-inv") return crossed_str(d, d.antipode_inv(grading(0), x()));
  if (r.op == "xi") return crossed_str(d, d.xi(grading(0), grading(1), x()));
  if (r.op == "grading-mul") return grading_str(d.grading_mul(grading(0), grading(1)));
  if (r.op == "r-left" || r.op == "r-right") {
    const RMatrix rm(d, s.config.r_form);
    const Side side = r.op == "r-left" ? Side::Left : Side::Right;
    return crossed_str(d, rm.apply(grading(0), grading(1), side, parse_crossed_pair(s, r.x)));
  }
  throw SpecError("eval: unknown operation '" + r.op + "'");
}

}  // namespace mhag
