#include "mhag/instances.hpp"

#include <sstream>

#include "mhag/linalg.hpp"

namespace mhag {

// ---------------------------------------------------------------------------
// GroupAlgebra

GroupAlgebra::GroupAlgebra(GroupPtr group, FieldSpec field) : group_(std::move(group)), field_(field) {}

std::string GroupAlgebra::name() const { return group_->finite() ? "KH" : "KZ"; }

std::vector<Label> GroupAlgebra::basis() const {
  if (!group_->finite()) throw MhaError("KZ has an infinite basis");
  return group_->elements();
}

Elem GroupAlgebra::mul_basis(Label x, Label y) const { return Elem::basis(group_->mul(x, y), field_.one()); }

Elem2 GroupAlgebra::coproduct_basis(Label x, const LegFilter& /*filter*/) const {
  if (!group_->contains(x)) throw MhaError("label not in group");
  return Elem2::basis(Key2{x, x}, field_.one());
}

Scalar GroupAlgebra::counit_basis(Label x) const {
  if (!group_->contains(x)) throw MhaError("label not in group");
  return field_.one();
}

Elem GroupAlgebra::antipode_basis(Label x) const { return Elem::basis(group_->inv(x), field_.one()); }
Elem GroupAlgebra::antipode_inv_basis(Label x) const { return Elem::basis(group_->inv(x), field_.one()); }
std::optional<Elem> GroupAlgebra::unit() const { return Elem::basis(group_->identity(), field_.one()); }
std::optional<LabelSet> GroupAlgebra::window(const LabelSet& /*s*/) const { return std::nullopt; }

// ---------------------------------------------------------------------------
// FunctionAlgebra

FunctionAlgebra::FunctionAlgebra(GroupPtr group, FieldSpec field, bool force_filters)
    : group_(std::move(group)), field_(field), force_filters_(force_filters) {}

std::string FunctionAlgebra::name() const { return group_->finite() ? "K(H)" : "K(Z)"; }

std::vector<Label> FunctionAlgebra::basis() const {
  if (!group_->finite()) throw MhaError("K(Z) has an infinite basis");
  return group_->elements();
}

Label FunctionAlgebra::parse_label(const std::string& text) const {
  try {
    return group_->parse(text);
  } catch (const GroupError&) {
    if (!text.empty() && text[0] == 'd') return group_->parse(text.substr(1));
    throw;
  }
}

Elem FunctionAlgebra::mul_basis(Label x, Label y) const {
  if (!group_->contains(x) || !group_->contains(y)) throw MhaError("label not in group");
  return x == y ? Elem::basis(x, field_.one()) : Elem{};
}

Elem2 FunctionAlgebra::coproduct_basis(Label p, const LegFilter& filter) const {
  if (!group_->contains(p)) throw MhaError("label not in group");
  Elem2 r;
  const bool filtered = filter.first || filter.second;
  if (filtered && (!group_->finite() || force_filters_)) {
    if (filter.first) {
      for (Label x : *filter.first) {
        if (!group_->contains(x)) continue;
        Label y = group_->mul(group_->inv(x), p);
        if (filter.second && !filter.second->count(y)) continue;
        r.add(Key2{x, y}, field_.one());
      }
    } else {
      for (Label y : *filter.second) {
        if (!group_->contains(y)) continue;
        r.add(Key2{group_->mul(p, group_->inv(y)), y}, field_.one());
      }
    }
    return r;
  }
  if (!group_->finite()) throw MhaError("K(Z): coproduct of a basis element needs a covering leg filter");
  for (Label x : group_->elements()) r.add(Key2{x, group_->mul(group_->inv(x), p)}, field_.one());
  return r;
}

Scalar FunctionAlgebra::counit_basis(Label x) const {
  if (!group_->contains(x)) throw MhaError("label not in group");
  return x == group_->identity() ? field_.one() : Scalar(0);
}

Elem FunctionAlgebra::antipode_basis(Label x) const { return Elem::basis(group_->inv(x), field_.one()); }
Elem FunctionAlgebra::antipode_inv_basis(Label x) const { return Elem::basis(group_->inv(x), field_.one()); }

std::optional<Elem> FunctionAlgebra::unit() const {
  if (!group_->finite()) return std::nullopt;
  Elem u;
  for (Label x : group_->elements()) u.add(x, field_.one());
  return u;
}

Elem FunctionAlgebra::local_unit(const LabelSet& s) const {
  Elem u;
  for (Label x : s) {
    if (!group_->contains(x)) throw MhaError("label not in group");
    u.add(x, field_.one());
  }
  return u;
}

// ---------------------------------------------------------------------------
// FiniteDimHopf

namespace {

Elem2 tensor_mul(const MhaInstance& x, const Elem2& a, const Elem2& b) {
  Elem2 r;
  for (const auto& [ka, ca] : a) {
    for (const auto& [kb, cb] : b) {
      r.add(lc_tensor(x.mul(Elem::basis(ka[0]), Elem::basis(kb[0])), x.mul(Elem::basis(ka[1]), Elem::basis(kb[1]))),
            ca * cb);
    }
  }
  return r;
}

template <typename K>
std::string first_difference(const MhaInstance& x, const LinComb<K>& lhs, const LinComb<K>& rhs) {
  LinComb<K> d = lhs - rhs;
  if (d.empty()) return "";
  const K& k = d.begin()->first;
  std::string s = "(";
  for (std::size_t i = 0; i < k.size(); ++i) {
    if (i) s += ",";
    s += k[i] == kUnit ? std::string("1") : x.label_name(k[i]);
  }
  return s + ")";
}

}  // namespace

FiniteDimHopf::FiniteDimHopf(std::string name, HopfStructure s, Origin origin, GroupPtr group)
    : name_(std::move(name)), s_(std::move(s)), origin_(origin), group_(std::move(group)) {
  validate();
}

void FiniteDimHopf::check_label(Label l) const {
  if (!has_label(l)) throw MhaError(name_ + ": basis label " + std::to_string(l) + " out of range");
}

std::vector<Label> FiniteDimHopf::basis() const {
  std::vector<Label> b(dim());
  for (std::size_t i = 0; i < dim(); ++i) b[i] = static_cast<Label>(i);
  return b;
}

std::string FiniteDimHopf::label_name(Label l) const {
  check_label(l);
  return s_.names[static_cast<std::size_t>(l)];
}

Label FiniteDimHopf::parse_label(const std::string& text) const {
  for (std::size_t i = 0; i < dim(); ++i) {
    if (s_.names[i] == text) return static_cast<Label>(i);
  }
  throw MhaError(name_ + ": unknown basis element '" + text + "'");
}

Elem FiniteDimHopf::mul_basis(Label x, Label y) const {
  check_label(x);
  check_label(y);
  return s_.mul[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)];
}

Elem2 FiniteDimHopf::coproduct_basis(Label x, const LegFilter& /*filter*/) const {
  check_label(x);
  return s_.comul[static_cast<std::size_t>(x)];
}

Scalar FiniteDimHopf::counit_basis(Label x) const {
  check_label(x);
  return s_.counit[static_cast<std::size_t>(x)];
}

Elem FiniteDimHopf::antipode_basis(Label x) const {
  check_label(x);
  return s_.antipode[static_cast<std::size_t>(x)];
}

Elem FiniteDimHopf::antipode_inv_basis(Label x) const {
  check_label(x);
  return antipode_inv_[static_cast<std::size_t>(x)];
}

void FiniteDimHopf::validate() {
  const std::size_t n = s_.names.size();
  auto fail = [&](const std::string& what) { throw MhaError(name_ + ": " + what); };
  if (n == 0) fail("dimension must be positive");
  if (s_.mul.size() != n || s_.comul.size() != n || s_.counit.size() != n || s_.antipode.size() != n) {
    fail("structure tables do not match the dimension");
  }
  auto in_range = [&](Label l) { return l >= 0 && l < static_cast<Label>(n); };
  for (const auto& [k, c] : s_.unit) {
    if (!in_range(k)) fail("unit refers to an unknown basis element");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (s_.mul[i].size() != n) fail("multiplication table row has wrong length");
    for (std::size_t j = 0; j < n; ++j) {
      for (const auto& [k, c] : s_.mul[i][j]) {
        if (!in_range(k)) fail("multiplication refers to an unknown basis element");
      }
    }
    for (const auto& [k, c] : s_.comul[i]) {
      if (!in_range(k[0]) || !in_range(k[1])) fail("comultiplication refers to an unknown basis element");
    }
    for (const auto& [k, c] : s_.antipode[i]) {
      if (!in_range(k)) fail("antipode refers to an unknown basis element");
    }
  }
  auto nm = [&](std::size_t i) { return s_.names[i]; };
  const Elem& one = s_.unit;

  for (std::size_t i = 0; i < n; ++i) {
    Elem ei = Elem::basis(static_cast<Label>(i));
    if (mul(one, ei) != ei || mul(ei, one) != ei) fail("unit is not a two-sided identity at " + nm(i));
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        Elem lhs = mul(s_.mul[i][j], Elem::basis(static_cast<Label>(k)));
        Elem rhs = mul(Elem::basis(static_cast<Label>(i)), s_.mul[j][k]);
        if (lhs != rhs) fail("multiplication is not associative at (" + nm(i) + "," + nm(j) + "," + nm(k) + ")");
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    Elem3 left;
    Elem3 right;
    for (const auto& [uv, c] : s_.comul[i]) {
      for (const auto& [ab, d] : s_.comul[static_cast<std::size_t>(uv[0])]) left.add(Key3{ab[0], ab[1], uv[1]}, c * d);
      for (const auto& [ab, d] : s_.comul[static_cast<std::size_t>(uv[1])]) right.add(Key3{uv[0], ab[0], ab[1]}, c * d);
    }
    if (left != right) {
      fail("comultiplication is not coassociative at " + nm(i) + ", basis triple " + first_difference(*this, left, right));
    }
    Elem ei = Elem::basis(static_cast<Label>(i));
    Elem l_counit;
    Elem r_counit;
    Elem l_anti;
    Elem r_anti;
    for (const auto& [uv, c] : s_.comul[i]) {
      l_counit.add(uv[1], c * s_.counit[static_cast<std::size_t>(uv[0])]);
      r_counit.add(uv[0], c * s_.counit[static_cast<std::size_t>(uv[1])]);
      l_anti.add(mul(s_.antipode[static_cast<std::size_t>(uv[0])], Elem::basis(uv[1])), c);
      r_anti.add(mul(Elem::basis(uv[0]), s_.antipode[static_cast<std::size_t>(uv[1])]), c);
    }
    if (l_counit != ei || r_counit != ei) fail("counit law fails at " + nm(i));
    Elem eps_one = one.scaled(s_.counit[i]);
    if (l_anti != eps_one || r_anti != eps_one) fail("antipode law fails at " + nm(i));
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Elem2 lhs = coproduct(s_.mul[i][j]);
      Elem2 rhs = tensor_mul(*this, s_.comul[i], s_.comul[j]);
      if (lhs != rhs) fail("comultiplication is not multiplicative at (" + nm(i) + "," + nm(j) + ")");
      if (counit(s_.mul[i][j]) != s_.counit[i] * s_.counit[j]) {
        fail("counit is not multiplicative at (" + nm(i) + "," + nm(j) + ")");
      }
    }
  }
  if (coproduct(one) != lc_tensor(one, one)) fail("comultiplication does not preserve the unit");
  if (!(counit(one) - Scalar(1)).is_zero()) fail("counit of the unit is not 1");
  auto inv = invert_images(s_.antipode);
  if (!inv) fail("antipode is not invertible");
  antipode_inv_ = std::move(*inv);
}

std::vector<Label> FiniteDimHopf::lift_labels(const Automorphism& phi) const {
  if (!group_ || phi.group() != group_) throw MhaError(name_ + ": automorphism is not over this instance's group");
  const auto n = static_cast<Label>(group_->order());
  std::vector<Label> out(dim());
  for (std::size_t l = 0; l < dim(); ++l) {
    const auto v = static_cast<Label>(l);
    switch (origin_) {
      case Origin::GroupAlgebra:
      case Origin::FunctionAlgebra:
        out[l] = phi.apply(v);
        break;
      case Origin::Double:
      case Origin::DoubleDual:
        out[l] = phi.apply(v / n) * n + phi.apply(v % n);
        break;
      default:
        throw MhaError(name_ + ": no group-induced automorphisms");
    }
  }
  return out;
}

FiniteDimPtr FiniteDimHopf::group_algebra(const GroupPtr& h, FieldSpec field) {
  if (!h->finite()) throw MhaError("finite-dimensional group algebra needs a finite group");
  const std::size_t n = h->order();
  HopfStructure s;
  Scalar one = field.one();
  for (std::size_t g = 0; g < n; ++g) s.names.push_back(h->name(static_cast<GroupElem>(g)));
  s.unit = Elem::basis(h->identity(), one);
  s.mul.assign(n, std::vector<Elem>(n));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      s.mul[a][b] = Elem::basis(h->mul(static_cast<GroupElem>(a), static_cast<GroupElem>(b)), one);
    }
    const auto g = static_cast<Label>(a);
    s.comul.push_back(Elem2::basis(Key2{g, g}, one));
    s.counit.push_back(one);
    s.antipode.push_back(Elem::basis(h->inv(g), one));
  }
  return std::make_shared<const FiniteDimHopf>("KH", std::move(s), Origin::GroupAlgebra, h);
}

FiniteDimPtr FiniteDimHopf::drinfeld_double(const GroupPtr& h, FieldSpec field, bool printed_antipode) {
  if (!h->finite()) throw MhaError("the Drinfeld double instance needs a finite group");
  const auto n = static_cast<Label>(h->order());
  auto lab = [n](Label p, Label g) { return p * n + g; };
  Scalar one = field.one();
  HopfStructure s;
  s.names.resize(static_cast<std::size_t>(n * n));
  s.mul.assign(static_cast<std::size_t>(n * n), std::vector<Elem>(static_cast<std::size_t>(n * n)));
  s.comul.resize(static_cast<std::size_t>(n * n));
  s.counit.resize(static_cast<std::size_t>(n * n));
  s.antipode.resize(static_cast<std::size_t>(n * n));
  for (Label p = 0; p < n; ++p) {
    s.unit.add(lab(p, h->identity()), one);
    for (Label g = 0; g < n; ++g) {
      const auto x = static_cast<std::size_t>(lab(p, g));
      s.names[x] = "d" + h->name(p) + "|" + h->name(g);
      for (Label q = 0; q < n; ++q) {
        for (Label l = 0; l < n; ++l) {
          if (p == h->conj(g, q)) s.mul[x][static_cast<std::size_t>(lab(q, l))] = Elem::basis(lab(p, h->mul(g, l)), one);
        }
      }
      for (Label t = 0; t < n; ++t) {
        s.comul[x].add(Key2{lab(h->mul(h->inv(t), p), g), lab(t, g)}, one);
      }
      s.counit[x] = p == h->identity() ? one : Scalar(0);
      Label gi = h->inv(g);
      Label sp = printed_antipode ? h->conj(gi, p) : h->conj(gi, h->inv(p));
      s.antipode[x] = Elem::basis(lab(sp, gi), one);
    }
  }
  return std::make_shared<const FiniteDimHopf>("D(H)", std::move(s), Origin::Double, h);
}

FiniteDimPtr FiniteDimHopf::drinfeld_double_dual(const GroupPtr& h, FieldSpec field) {
  if (!h->finite()) throw MhaError("the Drinfeld double instance needs a finite group");
  const auto n = static_cast<Label>(h->order());
  auto lab = [n](Label g, Label p) { return g * n + p; };
  Scalar one = field.one();
  HopfStructure s;
  s.names.resize(static_cast<std::size_t>(n * n));
  s.mul.assign(static_cast<std::size_t>(n * n), std::vector<Elem>(static_cast<std::size_t>(n * n)));
  s.comul.resize(static_cast<std::size_t>(n * n));
  s.counit.resize(static_cast<std::size_t>(n * n));
  s.antipode.resize(static_cast<std::size_t>(n * n));
  for (Label p = 0; p < n; ++p) s.unit.add(lab(h->identity(), p), one);
  for (Label g = 0; g < n; ++g) {
    for (Label p = 0; p < n; ++p) {
      const auto x = static_cast<std::size_t>(lab(g, p));
      s.names[x] = h->name(g) + "|d" + h->name(p);
      for (Label l = 0; l < n; ++l) {
        s.mul[x][static_cast<std::size_t>(lab(l, p))] = Elem::basis(lab(h->mul(l, g), p), one);
      }
      for (Label t = 0; t < n; ++t) {
        Label ti = h->inv(t);
        s.comul[x].add(Key2{lab(g, t), lab(h->conj(ti, g), h->mul(ti, p))}, one);
      }
      s.counit[x] = p == h->identity() ? one : Scalar(0);
      Label pi = h->inv(p);
      s.antipode[x] = Elem::basis(lab(h->conj(pi, h->inv(g)), pi), one);
    }
  }
  return std::make_shared<const FiniteDimHopf>("D(H)^", std::move(s), Origin::DoubleDual, h);
}

FiniteDimPtr FiniteDimHopf::dual(std::string name) const {
  const std::size_t n = dim();
  HopfStructure d;
  Origin o = Origin::Dual;
  switch (origin_) {
    case Origin::GroupAlgebra:
      o = Origin::FunctionAlgebra;
      break;
    case Origin::FunctionAlgebra:
      o = Origin::GroupAlgebra;
      break;
    case Origin::Double:
      o = Origin::DoubleDual;
      break;
    case Origin::DoubleDual:
      o = Origin::Double;
      break;
    default:
      break;
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (o == Origin::FunctionAlgebra) {
      d.names.push_back("d" + s_.names[i]);
    } else if (o == Origin::DoubleDual && group_) {
      const auto m = static_cast<Label>(group_->order());
      const auto v = static_cast<Label>(i);
      d.names.push_back(group_->name(v / m) + "|d" + group_->name(v % m));
    } else {
      d.names.push_back("^" + s_.names[i]);
    }
  }
  d.mul.assign(n, std::vector<Elem>(n));
  d.comul.resize(n);
  d.counit.resize(n);
  d.antipode.resize(n);
  for (std::size_t k = 0; k < n; ++k) {
    for (const auto& [ij, c] : s_.comul[k]) {
      d.mul[static_cast<std::size_t>(ij[0])][static_cast<std::size_t>(ij[1])].add(static_cast<Label>(k), c);
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (const auto& [k, c] : s_.mul[i][j]) {
        d.comul[static_cast<std::size_t>(k)].add(Key2{static_cast<Label>(i), static_cast<Label>(j)}, c);
      }
    }
    d.counit[i] = s_.unit.coeff(static_cast<Label>(i));
    d.unit.add(static_cast<Label>(i), s_.counit[i]);
    for (const auto& [k, c] : s_.antipode[i]) d.antipode[static_cast<std::size_t>(k)].add(static_cast<Label>(i), c);
  }
  if (name.empty()) name = name_ + "^";
  return std::make_shared<const FiniteDimHopf>(std::move(name), std::move(d), o, group_);
}

// ---------------------------------------------------------------------------
// HopfAut

void HopfAut::finish() {
  std::ostringstream sig;
  if (group_) {
    const auto& g = group_->group();
    if (g->finite()) {
      sig << "g:";
      for (GroupElem x : g->elements()) sig << group_->apply(x) << ",";
    } else {
      sig << (group_->is_identity() ? "g:id" : "g:neg");
    }
    desc_ = group_->describe();
  } else {
    sig << "t:";
    for (const auto& img : *images_) sig << to_string(img) << ";";
    if (is_identity()) desc_ = "identity";
  }
  sig_ = sig.str();
}

HopfAut HopfAut::identity(InstancePtr b) {
  if (auto ga = std::dynamic_pointer_cast<const GroupAlgebra>(b)) return from_group(b, Automorphism::identity(ga->group()));
  if (!b->finite_dimensional()) throw MhaError(b->name() + ": no identity automorphism representation");
  std::vector<Elem> images;
  for (Label l : b->basis()) images.push_back(Elem::basis(l));
  HopfAut a;
  a.b_ = std::move(b);
  a.images_ = std::make_shared<const std::vector<Elem>>(images);
  a.inv_images_ = a.images_;
  a.desc_ = "identity";
  a.finish();
  return a;
}

HopfAut HopfAut::from_group(InstancePtr b, const Automorphism& phi) {
  HopfAut a;
  if (auto ga = std::dynamic_pointer_cast<const GroupAlgebra>(b)) {
    if (phi.group() != ga->group()) throw MhaError("automorphism is over a different group backend");
    a.b_ = std::move(b);
    a.group_ = phi;
    a.finish();
    return a;
  }
  if (auto fd = std::dynamic_pointer_cast<const FiniteDimHopf>(b)) {
    std::vector<Label> perm = fd->lift_labels(phi);
    std::vector<Elem> images;
    std::vector<Elem> inv(perm.size());
    for (std::size_t l = 0; l < perm.size(); ++l) {
      images.push_back(Elem::basis(perm[l]));
      inv[static_cast<std::size_t>(perm[l])] = Elem::basis(static_cast<Label>(l));
    }
    a.b_ = std::move(b);
    a.images_ = std::make_shared<const std::vector<Elem>>(std::move(images));
    a.inv_images_ = std::make_shared<const std::vector<Elem>>(std::move(inv));
    a.finish();
    a.desc_ = phi.describe();
    return a;
  }
  throw MhaError(b->name() + ": group automorphisms cannot be lifted to this instance");
}

HopfAut HopfAut::from_images(InstancePtr b, std::vector<Elem> images, std::string description) {
  if (!b->finite_dimensional()) throw MhaError("explicit automorphism tables need a finite-dimensional instance");
  if (images.size() != b->basis().size()) throw MhaError("automorphism table has the wrong size");
  auto inv = invert_images(images);
  if (!inv) throw MhaError("automorphism '" + description + "' is not bijective");
  HopfAut a;
  a.b_ = std::move(b);
  a.images_ = std::make_shared<const std::vector<Elem>>(std::move(images));
  a.inv_images_ = std::make_shared<const std::vector<Elem>>(std::move(*inv));
  a.finish();
  if (!a.is_identity()) a.desc_ = std::move(description);
  if (auto err = check_hopf_automorphism(*a.b_, a, a.b_->basis())) {
    throw MhaError("automorphism '" + a.desc_ + "' is not a Hopf automorphism: " + *err);
  }
  return a;
}

Elem HopfAut::apply_label(Label l) const {
  if (l == kUnit) return Elem::basis(kUnit);
  if (group_) return Elem::basis(group_->apply(l));
  if (!b_->has_label(l)) throw MhaError("label outside the automorphism's instance");
  return (*images_)[static_cast<std::size_t>(l)];
}

Elem HopfAut::apply(const Elem& x) const {
  Elem r;
  for (const auto& [k, c] : x) r.add(apply_label(k), c);
  return r;
}

Elem HopfAut::transpose(const Elem& a) const {
  Elem r;
  if (group_) {
    Automorphism inv = group_->inverse();
    for (const auto& [k, c] : a) r.add(k == kUnit ? kUnit : inv.apply(k), c);
    return r;
  }
  for (const auto& [k, c] : a) {
    if (k == kUnit) r.add(kUnit, c);
  }
  for (std::size_t j = 0; j < images_->size(); ++j) {
    Scalar s(0);
    for (const auto& [k, c] : a) {
      if (k != kUnit) s += c * (*images_)[j].coeff(k);
    }
    r.add(static_cast<Label>(j), s);
  }
  return r;
}

std::optional<LabelSet> HopfAut::transpose_candidates(const std::optional<LabelSet>& targets) const {
  if (!targets || !group_) return std::nullopt;
  LabelSet out;
  for (Label t : *targets) out.insert(group_->apply(t));
  return out;
}

HopfAut HopfAut::inverse() const {
  HopfAut a = *this;
  if (group_) {
    a.group_ = group_->inverse();
  } else {
    std::swap(a.images_, a.inv_images_);
  }
  std::string d = desc_;
  a.finish();
  if (!a.is_identity() && !group_) a.desc_ = "(" + d + ")^-1";
  return a;
}

HopfAut HopfAut::compose(const HopfAut& rhs) const {
  if (b_ != rhs.b_) throw MhaError("automorphisms over different instances");
  if (rhs.is_identity()) return *this;
  if (is_identity()) return rhs;
  HopfAut a;
  a.b_ = b_;
  if (group_) {
    a.group_ = group_->compose(*rhs.group_);
    a.finish();
    return a;
  }
  std::vector<Elem> images;
  std::vector<Elem> inv;
  for (const auto& img : *rhs.images_) images.push_back(apply(img));
  for (const auto& img : *inv_images_) inv.push_back(rhs.inverse().apply(img));
  a.images_ = std::make_shared<const std::vector<Elem>>(std::move(images));
  a.inv_images_ = std::make_shared<const std::vector<Elem>>(std::move(inv));
  a.finish();
  if (!a.is_identity()) a.desc_ = desc_ + "∘" + rhs.desc_;
  return a;
}

bool HopfAut::is_identity() const {
  if (group_) return group_->is_identity();
  for (std::size_t j = 0; j < images_->size(); ++j) {
    if ((*images_)[j] != Elem::basis(static_cast<Label>(j))) return false;
  }
  return true;
}

std::optional<std::string> check_hopf_automorphism(const MhaInstance& b, const HopfAut& phi,
                                                   const std::vector<Label>& labels) {
  auto nm = [&](Label l) { return b.label_name(l); };
  auto phi2 = [&](const Elem2& x) {
    Elem2 r;
    for (const auto& [k, c] : x) r.add(lc_tensor(phi.apply_label(k[0]), phi.apply_label(k[1])), c);
    return r;
  };
  for (Label x : labels) {
    Elem ex = Elem::basis(x);
    if (b.coproduct(phi.apply(ex)) != phi2(b.coproduct(ex))) return "comultiplication at " + nm(x);
    if (b.counit(phi.apply(ex)) != b.counit(ex)) return "counit at " + nm(x);
    if (b.antipode(phi.apply(ex)) != phi.apply(b.antipode(ex))) return "antipode at " + nm(x);
    for (Label y : labels) {
      Elem ey = Elem::basis(y);
      if (phi.apply(b.mul(ex, ey)) != b.mul(phi.apply(ex), phi.apply(ey))) {
        return "multiplication at (" + nm(x) + "," + nm(y) + ")";
      }
    }
  }
  return std::nullopt;
}

}  // namespace mhag
