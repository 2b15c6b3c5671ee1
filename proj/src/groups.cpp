#include "mhag/groups.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>

namespace mhag {

namespace {

Perm perm_mul(const Perm& s, const Perm& t) {
  Perm r(s.size());
  for (std::size_t x = 0; x < s.size(); ++x) r[x] = s[static_cast<std::size_t>(t[x])];
  return r;
}

Perm perm_identity(int n) {
  Perm p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  return p;
}

std::string cycle_string(const Perm& p) {
  std::vector<bool> seen(p.size(), false);
  std::string out;
  bool spaced = p.size() > 9;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i] || p[i] == static_cast<int>(i)) continue;
    out += "(";
    std::size_t j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = true;
      if (!first && spaced) out += " ";
      first = false;
      out += std::to_string(j + 1);
      j = static_cast<std::size_t>(p[j]);
    }
    out += ")";
  }
  return out.empty() ? "()" : out;
}

}  // namespace

GroupPtr Group::table(std::vector<std::string> names, std::vector<std::vector<GroupElem>> mul) {
  const std::size_t n = names.size();
  if (n == 0) throw GroupError("table group has no elements");
  if (mul.size() != n) throw GroupError("table group: multiplication table has wrong row count");
  for (const auto& row : mul) {
    if (row.size() != n) throw GroupError("table group: multiplication table has wrong column count");
    for (GroupElem v : row) {
      if (v < 0 || v >= static_cast<GroupElem>(n)) throw GroupError("table group: entry out of range");
    }
  }
  for (std::size_t x = 0; x < n; ++x) {
    if (mul[0][x] != static_cast<GroupElem>(x) || mul[x][0] != static_cast<GroupElem>(x)) {
      throw GroupError("table group: element 0 (" + names[0] + ") is not a two-sided identity");
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c) {
        auto ab = static_cast<std::size_t>(mul[a][b]);
        auto bc = static_cast<std::size_t>(mul[b][c]);
        if (mul[ab][c] != mul[a][bc]) {
          throw GroupError("table group: not associative at (" + names[a] + "," + names[b] + "," + names[c] + ")");
        }
      }
    }
  }
  auto g = std::shared_ptr<Group>(new Group());
  g->kind_ = Kind::Table;
  g->names_ = std::move(names);
  g->table_ = std::move(mul);
  g->inverse_.assign(n, -1);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (g->table_[a][b] == 0 && g->table_[b][a] == 0) g->inverse_[a] = static_cast<GroupElem>(b);
    }
    if (g->inverse_[a] < 0) throw GroupError("table group: element " + g->names_[a] + " has no inverse");
  }
  // Greedy generating set.
  std::set<GroupElem> span{0};
  for (std::size_t a = 0; a < n; ++a) {
    if (span.count(static_cast<GroupElem>(a))) continue;
    g->generators_.push_back(static_cast<GroupElem>(a));
    std::deque<GroupElem> todo(span.begin(), span.end());
    while (!todo.empty()) {
      GroupElem x = todo.front();
      todo.pop_front();
      for (GroupElem s : g->generators_) {
        GroupElem y = g->table_[static_cast<std::size_t>(x)][static_cast<std::size_t>(s)];
        if (span.insert(y).second) todo.push_back(y);
      }
    }
  }
  g->finish_finite();
  return g;
}

GroupPtr Group::perm(int degree, std::vector<Perm> generators, std::size_t max_order) {
  if (degree <= 0) throw GroupError("permutation group: degree must be positive");
  for (const auto& p : generators) {
    if (p.size() != static_cast<std::size_t>(degree)) throw GroupError("permutation group: generator of wrong length");
    Perm sorted = p;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != perm_identity(degree)) throw GroupError("permutation group: generator is not a permutation");
  }
  std::set<Perm> closure{perm_identity(degree)};
  std::deque<Perm> todo{perm_identity(degree)};
  while (!todo.empty()) {
    Perm x = todo.front();
    todo.pop_front();
    for (const auto& s : generators) {
      Perm y = perm_mul(x, s);
      if (closure.insert(y).second) {
        if (closure.size() > max_order) {
          throw GroupError("permutation group: generators do not close into a group of order <= " +
                           std::to_string(max_order));
        }
        todo.push_back(std::move(y));
      }
    }
  }
  auto g = std::shared_ptr<Group>(new Group());
  g->kind_ = Kind::Perm;
  g->degree_ = degree;
  g->perms_.assign(closure.begin(), closure.end());  // lexicographic; identity first
  const std::size_t n = g->perms_.size();
  for (std::size_t i = 0; i < n; ++i) g->perm_index_.emplace(g->perms_[i], static_cast<GroupElem>(i));
  g->table_.assign(n, std::vector<GroupElem>(n));
  g->inverse_.assign(n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) g->table_[a][b] = g->perm_index_.at(perm_mul(g->perms_[a], g->perms_[b]));
    Perm inv(static_cast<std::size_t>(degree));
    for (int x = 0; x < degree; ++x) inv[static_cast<std::size_t>(g->perms_[a][static_cast<std::size_t>(x)])] = x;
    g->inverse_[a] = g->perm_index_.at(inv);
    g->names_.push_back(cycle_string(g->perms_[a]));
  }
  for (const auto& s : generators) g->generators_.push_back(g->perm_index_.at(s));
  g->finish_finite();
  return g;
}

void Group::finish_finite() {
  const std::size_t n = names_.size();
  elements_.resize(n);
  std::iota(elements_.begin(), elements_.end(), 0);
  words_.assign(n, {});
  std::vector<bool> seen(n, false);
  seen[0] = true;
  std::deque<GroupElem> todo{0};
  while (!todo.empty()) {
    GroupElem x = todo.front();
    todo.pop_front();
    for (std::size_t i = 0; i < generators_.size(); ++i) {
      GroupElem y = table_[static_cast<std::size_t>(x)][static_cast<std::size_t>(generators_[i])];
      if (!seen[static_cast<std::size_t>(y)]) {
        seen[static_cast<std::size_t>(y)] = true;
        words_[static_cast<std::size_t>(y)] = words_[static_cast<std::size_t>(x)];
        words_[static_cast<std::size_t>(y)].push_back(static_cast<int>(i));
        todo.push_back(y);
      }
    }
  }
}

GroupPtr Group::integers() {
  auto g = std::shared_ptr<Group>(new Group());
  g->kind_ = Kind::Int;
  g->generators_ = {1};
  return g;
}

GroupPtr Group::cyclic(int n) {
  if (n <= 0) throw GroupError("cyclic group order must be positive");
  std::vector<std::string> names;
  std::vector<std::vector<GroupElem>> mul(static_cast<std::size_t>(n), std::vector<GroupElem>(static_cast<std::size_t>(n)));
  for (int a = 0; a < n; ++a) {
    names.push_back(std::to_string(a));
    for (int b = 0; b < n; ++b) mul[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = (a + b) % n;
  }
  return table(std::move(names), std::move(mul));
}

GroupPtr Group::symmetric(int degree) {
  std::vector<Perm> gens;
  if (degree >= 2) {
    Perm cycle(static_cast<std::size_t>(degree));
    for (int i = 0; i < degree; ++i) cycle[static_cast<std::size_t>(i)] = (i + 1) % degree;
    Perm swap = perm_identity(degree);
    std::swap(swap[0], swap[1]);
    gens = {cycle, swap};
  }
  return perm(degree, gens);
}

bool Group::abelian() const {
  if (kind_ == Kind::Int) return true;
  for (GroupElem a : elements_) {
    for (GroupElem b : elements_) {
      if (mul(a, b) != mul(b, a)) return false;
    }
  }
  return true;
}

void Group::check(GroupElem g) const {
  if (!contains(g)) throw GroupError("element " + std::to_string(g) + " not in group");
}

GroupElem Group::mul(GroupElem a, GroupElem b) const {
  if (kind_ == Kind::Int) return a + b;
  check(a);
  check(b);
  return table_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
}

GroupElem Group::inv(GroupElem a) const {
  if (kind_ == Kind::Int) return -a;
  check(a);
  return inverse_[static_cast<std::size_t>(a)];
}

std::string Group::name(GroupElem g) const {
  if (kind_ == Kind::Int) return std::to_string(g);
  check(g);
  return names_[static_cast<std::size_t>(g)];
}

GroupElem Group::from_perm(const Perm& p) const {
  if (kind_ != Kind::Perm) throw GroupError("not a permutation group");
  auto it = perm_index_.find(p);
  if (it == perm_index_.end()) throw GroupError("permutation not in group");
  return it->second;
}

GroupElem Group::parse(const std::string& text) const {
  switch (kind_) {
    case Kind::Int:
      try {
        std::size_t used = 0;
        GroupElem v = std::stoll(text, &used);
        if (used != text.size()) throw GroupError("bad integer element '" + text + "'");
        return v;
      } catch (const std::logic_error&) {
        throw GroupError("bad integer element '" + text + "'");
      }
    case Kind::Table:
      for (std::size_t i = 0; i < names_.size(); ++i) {
        if (names_[i] == text) return static_cast<GroupElem>(i);
      }
      throw GroupError("unknown element '" + text + "'");
    case Kind::Perm: {
      if (text == "e" || text == "()" || text.empty()) return 0;
      Perm p = perm_identity(degree_);
      std::size_t i = 0;
      while (i < text.size()) {
        if (std::isspace(static_cast<unsigned char>(text[i]))) {
          ++i;
          continue;
        }
        if (text[i] != '(') throw GroupError("bad cycle notation '" + text + "'");
        auto close = text.find(')', i);
        if (close == std::string::npos) throw GroupError("bad cycle notation '" + text + "'");
        std::string body = text.substr(i + 1, close - i - 1);
        std::vector<int> pts;
        if (body.find_first_of(" ,") != std::string::npos) {
          std::istringstream in(body);
          std::string tok;
          while (in >> tok) {
            tok.erase(std::remove(tok.begin(), tok.end(), ','), tok.end());
            if (!tok.empty()) pts.push_back(std::stoi(tok));
          }
        } else {
          for (char c : body) {
            if (!std::isdigit(static_cast<unsigned char>(c))) throw GroupError("bad cycle notation '" + text + "'");
            pts.push_back(c - '0');
          }
        }
        for (int x : pts) {
          if (x < 1 || x > degree_) throw GroupError("cycle point out of range in '" + text + "'");
        }
        // Cycles compose right-to-left as well.
        Perm c = perm_identity(degree_);
        for (std::size_t k = 0; k < pts.size(); ++k) {
          c[static_cast<std::size_t>(pts[k] - 1)] = pts[(k + 1) % pts.size()] - 1;
        }
        p = perm_mul(p, c);
        i = close + 1;
      }
      return from_perm(p);
    }
  }
  throw GroupError("unreachable");
}

// ---------------------------------------------------------------------------

void Automorphism::verify_table(const Group& g, const std::vector<GroupElem>& images) {
  const std::size_t n = g.order();
  if (images.size() != n) throw GroupError("automorphism table has wrong size");
  std::vector<bool> hit(n, false);
  for (GroupElem y : images) {
    if (!g.contains(y)) throw GroupError("automorphism image out of range");
    if (hit[static_cast<std::size_t>(y)]) throw GroupError("automorphism is not bijective");
    hit[static_cast<std::size_t>(y)] = true;
  }
  for (GroupElem a : g.elements()) {
    for (GroupElem b : g.elements()) {
      if (images[static_cast<std::size_t>(g.mul(a, b))] !=
          g.mul(images[static_cast<std::size_t>(a)], images[static_cast<std::size_t>(b)])) {
        throw GroupError("map is not a homomorphism at (" + g.name(a) + "," + g.name(b) + ")");
      }
    }
  }
}

Automorphism Automorphism::identity(GroupPtr g) {
  Automorphism a;
  a.kind_ = Kind::Identity;
  if (g->finite()) {
    a.images_ = std::make_shared<const std::vector<GroupElem>>(g->elements());
  }
  a.group_ = std::move(g);
  return a;
}

Automorphism Automorphism::inner(GroupPtr g, GroupElem by) {
  if (!g->contains(by)) throw GroupError("inner automorphism by a non-element");
  if (!g->finite()) return identity(std::move(g));  // Z is abelian
  std::vector<GroupElem> images;
  images.reserve(g->order());
  for (GroupElem x : g->elements()) images.push_back(g->conj(by, x));
  Automorphism a;
  a.kind_ = Kind::Inner;
  a.by_ = by;
  a.images_ = std::make_shared<const std::vector<GroupElem>>(std::move(images));
  a.group_ = std::move(g);
  if (a.is_identity()) {
    a.kind_ = Kind::Identity;
    a.by_.reset();
  }
  return a;
}

Automorphism Automorphism::negation(GroupPtr g) {
  if (g->kind() != Group::Kind::Int) throw GroupError("negation is only defined on Z");
  Automorphism a;
  a.kind_ = Kind::Negation;
  a.sign_ = -1;
  a.group_ = std::move(g);
  return a;
}

Automorphism Automorphism::from_generator_images(GroupPtr g, const std::vector<GroupElem>& images) {
  const auto& gens = g->generators();
  if (images.size() != gens.size()) throw GroupError("generator-map automorphism: wrong number of images");
  if (!g->finite()) {
    if (images[0] == 1) return identity(std::move(g));
    if (images[0] == -1) return negation(std::move(g));
    throw GroupError("generator-map on Z must send 1 to 1 or -1");
  }
  std::vector<GroupElem> table(g->order());
  for (GroupElem x : g->elements()) {
    GroupElem y = g->identity();
    for (int w : g->words()[static_cast<std::size_t>(x)]) y = g->mul(y, images.at(static_cast<std::size_t>(w)));
    table[static_cast<std::size_t>(x)] = y;
  }
  return from_table(std::move(g), std::move(table));
}

Automorphism Automorphism::from_table(GroupPtr g, std::vector<GroupElem> images) {
  if (!g->finite()) throw GroupError("table automorphisms need a finite backend");
  verify_table(*g, images);
  Automorphism a;
  a.kind_ = Kind::Map;
  a.images_ = std::make_shared<const std::vector<GroupElem>>(std::move(images));
  a.group_ = std::move(g);
  if (a.is_identity()) a.kind_ = Kind::Identity;
  return a;
}

GroupElem Automorphism::apply(GroupElem x) const {
  if (!group_->contains(x)) throw GroupError("element " + std::to_string(x) + " not in automorphism's backend");
  if (!group_->finite()) return sign_ * x;
  return (*images_)[static_cast<std::size_t>(x)];
}

bool Automorphism::is_identity() const {
  if (!group_->finite()) return sign_ == 1;
  for (std::size_t i = 0; i < images_->size(); ++i) {
    if ((*images_)[i] != static_cast<GroupElem>(i)) return false;
  }
  return true;
}

Automorphism Automorphism::inverse() const {
  if (!group_->finite()) return *this;
  Automorphism a = *this;
  std::vector<GroupElem> inv(images_->size());
  for (std::size_t i = 0; i < images_->size(); ++i) inv[static_cast<std::size_t>((*images_)[i])] = static_cast<GroupElem>(i);
  a.images_ = std::make_shared<const std::vector<GroupElem>>(std::move(inv));
  if (kind_ == Kind::Inner) a.by_ = group_->inv(*by_);
  return a;
}

Automorphism Automorphism::compose(const Automorphism& rhs) const {
  if (group_ != rhs.group_) throw GroupError("automorphisms over different backends");
  if (rhs.kind_ == Kind::Identity) return *this;
  if (kind_ == Kind::Identity) return rhs;
  Automorphism a;
  a.group_ = group_;
  if (!group_->finite()) {
    a.sign_ = sign_ * rhs.sign_;
    a.kind_ = a.sign_ == 1 ? Kind::Identity : Kind::Negation;
    return a;
  }
  std::vector<GroupElem> table(images_->size());
  for (std::size_t i = 0; i < table.size(); ++i) table[i] = (*images_)[static_cast<std::size_t>((*rhs.images_)[i])];
  a.images_ = std::make_shared<const std::vector<GroupElem>>(std::move(table));
  if (kind_ == Kind::Inner && rhs.kind_ == Kind::Inner) {
    a.kind_ = Kind::Inner;
    a.by_ = group_->mul(*by_, *rhs.by_);
  } else {
    a.kind_ = Kind::Map;
  }
  if (a.is_identity()) {
    a.kind_ = Kind::Identity;
    a.by_.reset();
  }
  return a;
}

std::string Automorphism::describe() const {
  switch (kind_) {
    case Kind::Identity:
      return "identity";
    case Kind::Inner:
      return "inner(" + group_->name(*by_) + ")";
    case Kind::Negation:
      return "negation";
    case Kind::Map: {
      std::string s = "map{";
      const auto& gens = group_->generators();
      for (std::size_t i = 0; i < gens.size(); ++i) {
        if (i) s += ", ";
        s += group_->name(gens[i]) + "->" + group_->name(apply(gens[i]));
      }
      return s + "}";
    }
  }
  return "?";
}

bool operator==(const Automorphism& a, const Automorphism& b) {
  if (a.group_ != b.group_) return false;
  if (!a.group_->finite()) return a.sign_ == b.sign_;
  return *a.images_ == *b.images_;
}

std::strong_ordering operator<=>(const Automorphism& a, const Automorphism& b) {
  if (a.group_ != b.group_) return a.group_.get() <=> b.group_.get();
  if (!a.group_->finite()) return b.sign_ <=> a.sign_;  // identity first
  return *a.images_ <=> *b.images_;
}

std::vector<Automorphism> inner_automorphisms(const GroupPtr& g) {
  if (!g->finite()) return {Automorphism::identity(g)};
  std::vector<Automorphism> out;
  for (GroupElem x : g->elements()) {
    Automorphism a = Automorphism::inner(g, x);
    if (std::find(out.begin(), out.end(), a) == out.end()) out.push_back(a);
  }
  return out;
}

}  // namespace mhag
