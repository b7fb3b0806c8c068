#include "dpq/exactgeo.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <set>

namespace dpq {

// --- field ---

MultiQuadraticField::MultiQuadraticField(std::vector<long long> generators) : gens_(std::move(generators)) {
  if (gens_.size() > 6) throw Error("bad_field", "at most six generators are supported");
  std::set<long long> seen;
  for (long long d : gens_) {
    if (d == 0 || d == 1 || squarefree_part(d) != d)
      throw Error("bad_field", "generator " + std::to_string(d) + " is not a squarefree integer other than 0, 1");
    if (!seen.insert(d).second) throw Error("bad_field", "generator " + std::to_string(d) + " repeated");
  }
  const size_t n = degree();
  factor_.resize(n * n);
  for (unsigned a = 0; a < n; ++a)
    for (unsigned b = 0; b < n; ++b) {
      long long f = 1;
      for (size_t i = 0; i < gens_.size(); ++i)
        if ((a >> i) & (b >> i) & 1u) f *= gens_[i];
      factor_[a * n + b] = f;
    }
}

long long MultiQuadraticField::basis_square(unsigned mask) const { return product_factor(mask, mask); }

unsigned MultiQuadraticField::mask_of(const std::vector<long long>& gens) const {
  unsigned m = 0;
  for (long long d : gens) {
    auto it = std::find(gens_.begin(), gens_.end(), d);
    if (it == gens_.end()) throw Error("bad_field", "generator " + std::to_string(d) + " not in the field");
    m ^= 1u << (it - gens_.begin());
  }
  return m;
}

std::string MultiQuadraticField::basis_name(unsigned mask) const {
  if (mask == 0) return "1";
  std::vector<long long> negs;
  long long p = 1;
  for (size_t i = 0; i < gens_.size(); ++i)
    if ((mask >> i) & 1u) {
      if (gens_[i] < 0)
        negs.push_back(gens_[i]);
      else
        p *= gens_[i];
    }
  if (negs.size() > 1 || (negs.size() == 1 && negs[0] != -1)) {
    std::string out;
    for (size_t i = 0; i < gens_.size(); ++i)
      if ((mask >> i) & 1u) out += (out.empty() ? "" : "·") + ("√(" + std::to_string(gens_[i]) + ")");
    return out;
  }
  const long long s = squarefree_part(p);
  long long f = 1;
  while (f * f * s < p) ++f;
  std::string out = f > 1 ? std::to_string(f) : "";
  if (!negs.empty()) out += "i";
  if (s > 1) out += "√" + std::to_string(s);
  return out.empty() ? "1" : out;
}

FieldPtr make_field(std::vector<long long> generators) {
  return std::make_shared<const MultiQuadraticField>(std::move(generators));
}

FieldElement::FieldElement(FieldPtr f, const Rational& r) : field_(std::move(f)), c_(field_->degree(), Rational(0)) {
  c_[0] = r;
}

FieldElement FieldElement::basis(FieldPtr f, unsigned mask, const Rational& c) {
  FieldElement e(std::move(f));
  if (mask >= e.c_.size()) throw Error("bad_field", "basis index out of range");
  e.c_[mask] = c;
  return e;
}

void FieldElement::check_same(const FieldElement& o) const {
  if (!field_ || !o.field_ || (field_ != o.field_ && field_->generators() != o.field_->generators()))
    throw Error("field_mismatch", "operands live in different fields");
}

bool FieldElement::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const Rational& x) { return x == 0; });
}

bool FieldElement::is_rational() const {
  return std::all_of(c_.begin() + 1, c_.end(), [](const Rational& x) { return x == 0; });
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
  check_same(o);
  FieldElement r = *this;
  for (size_t i = 0; i < c_.size(); ++i) r.c_[i] += o.c_[i];
  return r;
}

FieldElement FieldElement::operator-(const FieldElement& o) const { return *this + (-o); }

FieldElement FieldElement::operator-() const {
  FieldElement r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
  check_same(o);
  FieldElement r(field_);
  const unsigned n = static_cast<unsigned>(c_.size());
  for (unsigned a = 0; a < n; ++a) {
    if (c_[a] == 0) continue;
    for (unsigned b = 0; b < n; ++b)
      if (o.c_[b] != 0) r.c_[a ^ b] += c_[a] * o.c_[b] * field_->product_factor(a, b);
  }
  return r;
}

FieldElement FieldElement::operator*(const Rational& k) const {
  FieldElement r = *this;
  for (auto& x : r.c_) x *= k;
  return r;
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw Error("division_by_zero", "inverse of zero");
  FieldElement p(field_, 1);
  for (unsigned s = 1; s < c_.size(); ++s) p = p * conjugate(s);
  const FieldElement norm = *this * p;
  if (!norm.is_rational()) throw Error("internal", "norm is not rational");
  return p * (1 / norm.c_[0]);
}

FieldElement FieldElement::conjugate(unsigned mask) const {
  FieldElement r = *this;
  for (unsigned i = 0; i < c_.size(); ++i)
    if (__builtin_popcount(i & mask) % 2) r.c_[i] = -r.c_[i];
  return r;
}

bool FieldElement::operator==(const FieldElement& o) const {
  check_same(o);
  return c_ == o.c_;
}

std::string FieldElement::to_string() const {
  std::string out;
  for (unsigned m = 0; m < c_.size(); ++m) {
    if (c_[m] == 0) continue;
    Rational c = c_[m];
    const bool neg = c < 0;
    if (neg) c = -c;
    std::string term;
    if (m == 0)
      term = dpq::to_string(c);
    else if (c == 1)
      term = field_->basis_name(m);
    else
      term = dpq::to_string(c) + "*" + field_->basis_name(m);
    if (out.empty())
      out = neg ? "-" + term : term;
    else
      out += (neg ? " - " : " + ") + term;
  }
  return out.empty() ? "0" : out;
}

namespace {

bool rational_square_root(const Rational& q, Rational* root) {
  if (q < 0) return false;
  const BigInt n = numerator(q), d = denominator(q);
  const BigInt rn = boost::multiprecision::sqrt(n), rd = boost::multiprecision::sqrt(d);
  if (rn * rn != n || rd * rd != d) return false;
  *root = Rational(rn, rd);
  return true;
}

}  // namespace

std::optional<FieldElement> sqrt_rational(const FieldPtr& f, const Rational& r) {
  if (r == 0) return FieldElement(f);
  for (unsigned m = 0; m < f->degree(); ++m) {
    Rational root;
    if (rational_square_root(r / f->basis_square(m), &root)) return FieldElement::basis(f, m, root);
  }
  return std::nullopt;
}

namespace {

class ElementParser {
 public:
  ElementParser(const FieldPtr& f, const std::string& s) : f_(f), s_(s) {}

  FieldElement parse() {
    FieldElement e = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return e;
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& why) const {
    throw Error("bad_element", "cannot parse '" + s_ + "': " + why, Json{{"text", s_}, {"position", pos_}});
  }
  FieldElement expr() {
    FieldElement e = term();
    for (;;) {
      if (eat('+'))
        e = e + term();
      else if (eat('-'))
        e = e - term();
      else
        return e;
    }
  }
  FieldElement term() {
    FieldElement e = factor();
    for (;;) {
      if (eat('*'))
        e = e * factor();
      else if (eat('/'))
        e = e / factor();
      else
        return e;
    }
  }
  BigInt integer() {
    skip();
    const size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a number");
    return BigInt(s_.substr(start, pos_ - start));
  }
  FieldElement factor() {
    if (eat('-')) return -factor();
    if (eat('(')) {
      FieldElement e = expr();
      if (!eat(')')) fail("missing ')'");
      return e;
    }
    skip();
    if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) return FieldElement(f_, Rational(integer()));
    if (s_.compare(pos_, 4, "sqrt") == 0) {
      pos_ += 4;
      const bool paren = eat('(');
      bool neg = eat('-');
      BigInt d = integer();
      if (paren && !eat(')')) fail("missing ')'");
      auto r = sqrt_rational(f_, Rational(neg ? -d : d));
      if (!r) fail("square root not in the field");
      return *r;
    }
    if (pos_ < s_.size() && s_[pos_] == 'i') {
      ++pos_;
      auto r = sqrt_rational(f_, -1);
      if (!r) fail("i not in the field");
      return *r;
    }
    fail("unexpected end");
  }

  const FieldPtr& f_;
  const std::string& s_;
  size_t pos_ = 0;
};

}  // namespace

FieldElement parse_element(const FieldPtr& f, const std::string& text) { return ElementParser(f, text).parse(); }

// --- projective points ---

ProjPoint normalize(const ProjPoint& p) {
  for (const auto& x : p)
    if (!x.is_zero()) {
      const FieldElement inv = x.inverse();
      ProjPoint r;
      for (const auto& y : p) r.push_back(y * inv);
      return r;
    }
  throw Error("zero_point", "all coordinates vanish");
}

bool same_point(const ProjPoint& a, const ProjPoint& b) {
  if (a.size() != b.size()) return false;
  const ProjPoint na = normalize(a), nb = normalize(b);
  for (size_t i = 0; i < na.size(); ++i)
    if (!(na[i] == nb[i])) return false;
  return true;
}

std::string point_string(const ProjPoint& p) {
  ProjPoint q = p;
  for (size_t i = p.size(); i-- > 0;)
    if (!p[i].is_zero()) {
      const FieldElement inv = p[i].inverse();
      for (auto& x : q) x = x * inv;
      break;
    }
  std::string s = "(";
  for (size_t i = 0; i < q.size(); ++i) s += (i ? " : " : "") + q[i].to_string();
  return s + ")";
}

int field_rank(std::vector<std::vector<FieldElement>> m) {
  if (m.empty()) return 0;
  const size_t cols = m[0].size();
  size_t r = 0;
  for (size_t c = 0; c < cols && r < m.size(); ++c) {
    size_t piv = r;
    while (piv < m.size() && m[piv][c].is_zero()) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[r], m[piv]);
    const FieldElement inv = m[r][c].inverse();
    for (size_t i = r + 1; i < m.size(); ++i) {
      if (m[i][c].is_zero()) continue;
      const FieldElement k = m[i][c] * inv;
      for (size_t j = c; j < cols; ++j) m[i][j] = m[i][j] - k * m[r][j];
    }
    ++r;
  }
  return static_cast<int>(r);
}

// --- signed permutations ---

SignedPermutation SignedPermutation::identity(int n) {
  SignedPermutation s;
  for (int i = 0; i < n; ++i) {
    s.perm.push_back(i);
    s.sign.push_back(1);
  }
  return s;
}

SignedPermutation SignedPermutation::flip(const std::string& word, int n) {
  SignedPermutation s = identity(n);
  if (word == "id") return s;
  if (word.size() < 2 || word[0] != 'i') throw Error("bad_map", "expected a flip word like i12, got '" + word + "'");
  for (size_t k = 1; k < word.size(); ++k) {
    const int c = word[k] - '1';
    if (c < 0 || c >= n) throw Error("bad_map", "coordinate out of range in '" + word + "'");
    s.sign[c] = -s.sign[c];
  }
  return s;
}

SignedPermutation SignedPermutation::from_json(const Json& j, int n) {
  if (j.is_string()) return flip(j.get<std::string>(), n);
  SignedPermutation s;
  for (int p : j.at("perm").get<std::vector<int>>()) s.perm.push_back(p - 1);
  s.sign = j.at("sign").get<std::vector<int>>();
  std::vector<int> sorted = s.perm;
  std::sort(sorted.begin(), sorted.end());
  if (static_cast<int>(s.perm.size()) != n || static_cast<int>(s.sign.size()) != n ||
      sorted != identity(n).perm ||
      std::any_of(s.sign.begin(), s.sign.end(), [](int x) { return x != 1 && x != -1; }))
    throw Error("bad_map", "not a signed permutation", j);
  return s;
}

ProjPoint SignedPermutation::apply(const ProjPoint& p) const {
  ProjPoint q;
  for (size_t k = 0; k < perm.size(); ++k) q.push_back(sign[k] == 1 ? p[perm[k]] : -p[perm[k]]);
  return q;
}

SignedPermutation SignedPermutation::after(const SignedPermutation& o) const {
  SignedPermutation r;
  for (size_t k = 0; k < perm.size(); ++k) {
    r.perm.push_back(o.perm[perm[k]]);
    r.sign.push_back(sign[k] * o.sign[perm[k]]);
  }
  return r;
}

bool SignedPermutation::diagonal() const {
  for (size_t k = 0; k < perm.size(); ++k)
    if (perm[k] != static_cast<int>(k)) return false;
  return true;
}

// --- surfaces and lines ---

QuarticSurface QuarticSurface::make(std::string id, FieldPtr f, RatVec a, RatVec b) {
  if (a.size() != 5 || b.size() != 5) throw Error("bad_surface", "forms need five coefficients");
  if (rank(RatMat{a, b}) != 2) throw Error("bad_surface", "forms are linearly dependent");
  for (int i = 0; i < 5; ++i) {
    if (a[i] == 0 && b[i] == 0) throw Error("bad_surface", "coordinate point lies on the surface");
    for (int j = i + 1; j < 5; ++j)
      if (a[i] * b[j] == a[j] * b[i])
        throw Error("bad_surface", "singular: coefficient pairs " + std::to_string(i + 1) + " and " +
                                       std::to_string(j + 1) + " are proportional");
  }
  QuarticSurface s;
  s.id = std::move(id);
  s.field = std::move(f);
  s.forms = {std::move(a), std::move(b)};
  return s;
}

FieldElement QuarticSurface::eval(int form, const ProjPoint& p) const { return polar(form, p, p); }

FieldElement QuarticSurface::polar(int form, const ProjPoint& p, const ProjPoint& q) const {
  FieldElement s(field);
  for (size_t i = 0; i < 5; ++i) s = s + p[i] * q[i] * forms[form][i];
  return s;
}

bool QuarticSurface::contains(const ProjPoint& p) const { return eval(0, p).is_zero() && eval(1, p).is_zero(); }

bool QuarticSurface::preserved_by(const SignedPermutation& s) const {
  // the pulled-back forms must stay in the pencil
  RatMat rows = forms;
  for (const auto& f : forms) {
    RatVec g(5);
    for (size_t k = 0; k < 5; ++k) g[s.perm[k]] = f[k];
    rows.push_back(g);
  }
  return rank(rows) == 2;
}

Json LineReport::to_json() const {
  return Json{{"ok", ok}, {"five_regular", five_regular}, {"errors", errors}, {"incidence", incidence}};
}

LineReport verify_lines(const QuarticSurface& s, const std::vector<LineOnSurface>& lines) {
  LineReport r;
  const size_t n = lines.size();
  if (n != 16) r.errors.push_back("expected 16 lines, got " + std::to_string(n));
  for (size_t i = 0; i < n; ++i) {
    const auto& l = lines[i];
    if (field_rank({l.p, l.q}) != 2) r.errors.push_back("line " + std::to_string(i) + ": spanning points coincide");
    for (int f = 0; f < 2; ++f) {
      const std::pair<const char*, FieldElement> vals[] = {
          {"p.p", s.polar(f, l.p, l.p)}, {"q.q", s.polar(f, l.q, l.q)}, {"p.q", s.polar(f, l.p, l.q)}};
      for (const auto& [what, v] : vals)
        if (!v.is_zero())
          r.errors.push_back("line " + std::to_string(i) + ": form " + std::to_string(f + 1) + " at " + what + " is " +
                             v.to_string());
    }
  }
  r.incidence.assign(n, std::vector<int>(n, 0));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j) {
      const int rk = field_rank({lines[i].p, lines[i].q, lines[j].p, lines[j].q});
      if (rk == 2) r.errors.push_back("lines " + std::to_string(i) + " and " + std::to_string(j) + " coincide");
      r.incidence[i][j] = r.incidence[j][i] = rk == 3;
    }
  r.five_regular = std::all_of(r.incidence.begin(), r.incidence.end(),
                               [](const std::vector<int>& row) { return std::count(row.begin(), row.end(), 1) == 5; });
  r.ok = r.errors.empty() && r.five_regular;
  return r;
}

const std::vector<DivisorClass>& dp4_line_classes() {
  static const std::vector<DivisorClass> c = enumerate_minus_one_curves(PicardLattice::del_pezzo(4));
  return c;
}

std::string Labeling::name(int line) const {
  static const PicardLattice lat = PicardLattice::del_pezzo(4);
  return curve_label(lat, dp4_line_classes()[class_of_line[line]]);
}

Json Labeling::to_json() const {
  Json names = Json::array();
  for (size_t i = 0; i < class_of_line.size(); ++i) names.push_back(name(static_cast<int>(i)));
  return Json{{"labels", names}, {"labelings", count}};
}

std::vector<std::vector<int>> all_labelings(const std::vector<std::vector<int>>& incidence) {
  static const PicardLattice lat = PicardLattice::del_pezzo(4);
  const auto& cls = dp4_line_classes();
  const int n = static_cast<int>(cls.size());
  if (static_cast<int>(incidence.size()) != n) return {};
  std::vector<std::vector<int>> meet(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) meet[a][b] = a != b && intersect(lat, cls[a], cls[b]) == 1;
  std::vector<std::vector<int>> out;
  std::vector<int> assign(n, -1);
  std::vector<bool> used(n, false);
  std::function<void(int)> go = [&](int i) {
    if (i == n) {
      out.push_back(assign);
      return;
    }
    for (int c = 0; c < n; ++c) {
      if (used[c]) continue;
      bool ok = true;
      for (int j = 0; j < i && ok; ++j) ok = meet[c][assign[j]] == incidence[i][j];
      if (!ok) continue;
      used[c] = true;
      assign[i] = c;
      go(i + 1);
      used[c] = false;
    }
  };
  go(0);
  return out;
}

Labeling label_lines(const std::vector<std::vector<int>>& incidence) {
  auto all = all_labelings(incidence);
  if (all.empty()) throw Error("not_dp4_line_graph", "incidence graph is not the line graph of a degree-4 del Pezzo surface");
  return Labeling{all.front(), all.size()};
}

namespace {

int find_line(const std::vector<LineOnSurface>& lines, const ProjPoint& p, const ProjPoint& q) {
  for (size_t j = 0; j < lines.size(); ++j)
    if (field_rank({p, q, lines[j].p, lines[j].q}) == 2) return static_cast<int>(j);
  return -1;
}

std::vector<int> permutation_from(const std::vector<LineOnSurface>& lines,
                                  const std::function<ProjPoint(const ProjPoint&)>& f) {
  std::vector<int> perm;
  for (const auto& l : lines) {
    const int j = find_line(lines, f(l.p), f(l.q));
    if (j < 0) throw Error("map_not_preserving", "image of a line is not among the sixteen lines");
    perm.push_back(j);
  }
  std::vector<int> sorted = perm;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw Error("map_not_preserving", "map is not a bijection on lines");
  return perm;
}

}  // namespace

std::vector<int> line_permutation(const std::vector<LineOnSurface>& lines, const SignedPermutation& s) {
  return permutation_from(lines, [&](const ProjPoint& p) { return s.apply(p); });
}

std::vector<int> line_permutation_galois(const std::vector<LineOnSurface>& lines, unsigned mask) {
  return permutation_from(lines, [&](const ProjPoint& p) {
    ProjPoint q;
    for (const auto& x : p) q.push_back(x.conjugate(mask));
    return q;
  });
}

IntMat lattice_action(const std::vector<int>& class_of_line, const std::vector<int>& line_perm) {
  static const PicardLattice lat = PicardLattice::del_pezzo(4);
  const auto& cls = dp4_line_classes();
  const int n = lat.rank();
  // L12, E1..E5 is a unimodular basis
  std::vector<int> basis_lines;
  for (const char* name : {"L12", "E1", "E2", "E3", "E4", "E5"}) {
    const DivisorClass c = named_class(lat, name);
    const int ci = static_cast<int>(std::find(cls.begin(), cls.end(), c) - cls.begin());
    basis_lines.push_back(static_cast<int>(std::find(class_of_line.begin(), class_of_line.end(), ci) - class_of_line.begin()));
  }
  RatMat src(n, RatVec(n)), dst(n, RatVec(n));
  for (int k = 0; k < n; ++k) {
    const DivisorClass& a = cls[class_of_line[basis_lines[k]]];
    const DivisorClass& b = cls[class_of_line[line_perm[basis_lines[k]]]];
    for (int r = 0; r < n; ++r) {
      src[r][k] = a[r];
      dst[r][k] = b[r];
    }
  }
  const RatMat inv = *inverse(src);
  IntMat m(n, IntVec(n));
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      Rational x = 0;
      for (int k = 0; k < n; ++k) x += dst[r][k] * inv[k][c];
      if (denominator(x) != 1) throw Error("not_lattice_realizable", "line permutation is not induced by an integral map");
      m[r][c] = static_cast<long long>(numerator(x));
    }
  for (size_t i = 0; i < line_perm.size(); ++i)
    if (mul(m, cls[class_of_line[i]]) != cls[class_of_line[line_perm[i]]])
      throw Error("not_lattice_realizable", "line permutation is not induced by a lattice map");
  if (!weyl_group(4).contains(m)) throw Error("not_lattice_realizable", "lattice map is not in W(D5)");
  return m;
}

LineAction action_on_lines(const QuarticSurface& s, const std::vector<LineOnSurface>& lines, const Labeling& lab,
                           const SignedPermutation& map) {
  if (!s.preserved_by(map)) throw Error("map_not_preserving", "coordinate map does not preserve " + s.id);
  LineAction a;
  a.permutation = line_permutation(lines, map);
  a.matrix = lattice_action(lab.class_of_line, a.permutation);
  return a;
}

LineAction action_on_lines(const std::vector<LineOnSurface>& lines, const Labeling& lab, unsigned galois_mask) {
  LineAction a;
  a.permutation = line_permutation_galois(lines, galois_mask);
  a.matrix = lattice_action(lab.class_of_line, a.permutation);
  return a;
}

Labeling calibrated_labeling(const QuarticSurface& s, const std::vector<LineOnSurface>& lines,
                             const std::vector<std::vector<int>>& incidence) {
  const auto& cls = dp4_line_classes();
  auto all = all_labelings(incidence);
  if (all.empty()) throw Error("not_dp4_line_graph", "incidence graph is not the line graph of a degree-4 del Pezzo surface");
  struct Flip {
    std::vector<int> line_perm;
    std::vector<int> class_perm;
  };
  std::vector<Flip> flips;
  for (int a = 1; a <= 5; ++a)
    for (int b = a + 1; b <= 5; ++b) {
      const SignedPermutation f = SignedPermutation::flip("i" + std::to_string(a) + std::to_string(b));
      if (!s.preserved_by(f)) throw Error("map_not_preserving", "sign flips must preserve a diagonal surface");
      Flip fl{line_permutation(lines, f), {}};
      const IntMat m = iota({a, b});
      for (const auto& c : cls)
        fl.class_perm.push_back(static_cast<int>(std::find(cls.begin(), cls.end(), mul(m, c)) - cls.begin()));
      flips.push_back(std::move(fl));
    }
  for (const auto& lab : all) {
    bool ok = true;
    for (const auto& f : flips)
      for (size_t i = 0; i < lab.size() && ok; ++i) ok = lab[f.line_perm[i]] == f.class_perm[lab[i]];
    if (ok) return Labeling{lab, all.size()};
  }
  throw Error("no_calibration", "no labeling turns the coordinate sign flips into the lattice involutions");
}

std::vector<ProjPoint> fixed_points(const QuarticSurface& s, const SignedPermutation& inv) {
  if (!inv.diagonal()) throw Error("unsupported_map", "fixed points are computed for diagonal involutions only");
  if (!s.preserved_by(inv)) throw Error("map_not_preserving", "involution does not preserve " + s.id);
  std::vector<ProjPoint> out;
  for (int eig : {1, -1}) {
    std::vector<int> t;
    for (int k = 0; k < 5; ++k)
      if (inv.sign[k] == eig) t.push_back(k);
    if (t.size() == 5) throw Error("curve_of_fixed_points", "identity map fixes the whole surface");
    if (t.size() == 4)
      throw Error("curve_of_fixed_points", "fixed locus contains a hyperplane section",
                  Json{{"eigenvalue", eig}, {"coordinates", t}});
    if (t.size() <= 1) continue;  // coordinate points are never on the surface
    // squares u_k of the coordinates satisfy two linear equations
    RatVec u(t.size(), Rational(0));
    const RatVec& a = s.forms[0];
    const RatVec& b = s.forms[1];
    if (t.size() == 3) {
      const int x = t[0], y = t[1], z = t[2];
      u = {a[y] * b[z] - a[z] * b[y], a[z] * b[x] - a[x] * b[z], a[x] * b[y] - a[y] * b[x]};
      if (std::all_of(u.begin(), u.end(), [](const Rational& r) { return r == 0; }))
        throw Error("curve_of_fixed_points", "fixed plane meets the surface in a curve");
    } else {
      const int x = t[0], y = t[1];
      if (a[x] * b[y] != a[y] * b[x]) continue;
      u = a[x] != 0 || a[y] != 0 ? RatVec{-a[y], a[x]} : RatVec{-b[y], b[x]};
    }
    int last = -1;
    for (size_t k = 0; k < u.size(); ++k)
      if (u[k] != 0) last = static_cast<int>(k);
    std::vector<FieldElement> root(t.size(), FieldElement(s.field));
    std::vector<size_t> free;
    for (size_t k = 0; k < u.size(); ++k) {
      auto r = sqrt_rational(s.field, u[k] / u[last]);
      if (!r) throw Error("not_in_field", "fixed points are not defined over the field", Json{{"square", dpq::to_json(u[k] / u[last])}});
      root[k] = *r;
      if (u[k] != 0 && static_cast<int>(k) != last) free.push_back(k);
    }
    for (unsigned signs = 0; signs < (1u << free.size()); ++signs) {
      ProjPoint p(5, FieldElement(s.field));
      for (size_t k = 0; k < t.size(); ++k) p[t[k]] = root[k];
      for (size_t f = 0; f < free.size(); ++f)
        if ((signs >> f) & 1u) p[t[free[f]]] = -p[t[free[f]]];
      if (!s.contains(p)) throw Error("internal", "computed fixed point is off the surface");
      out.push_back(p);
    }
  }
  return out;
}

SurfaceFixture load_surface(const std::string& id) {
  const Json j = load_json("surfaces/" + id + ".json");
  try {
    FieldPtr f = make_field(j.at("field").get<std::vector<long long>>());
    auto form = [&](int k) {
      RatVec v;
      for (const auto& x : j.at("forms").at(k)) v.push_back(rational_from_json(x));
      return v;
    };
    SurfaceFixture fx{QuarticSurface::make(j.at("id").get<std::string>(), f, form(0), form(1)), {}};
    auto point = [&](const Json& arr) {
      ProjPoint p;
      for (const auto& x : arr) p.push_back(parse_element(f, x.get<std::string>()));
      if (p.size() != 5) throw Error("bad_data", "points need five coordinates");
      return p;
    };
    if (j.contains("rational_point")) fx.surface.rational_point = point(j["rational_point"]);
    const ProjPoint p = point(j.at("line").at("p")), q = point(j.at("line").at("q"));
    for (const auto& sg : j.at("sign_patterns")) {
      LineOnSurface l;
      l.signs = sg.get<std::vector<int>>();
      for (size_t k = 0; k < 5; ++k) {
        l.p.push_back(l.signs[k] == 1 ? p[k] : -p[k]);
        l.q.push_back(l.signs[k] == 1 ? q[k] : -q[k]);
      }
      fx.lines.push_back(std::move(l));
    }
    return fx;
  } catch (const Json::exception& e) {
    throw Error("bad_data", "surface fixture " + id + ": " + e.what());
  }
}

}  // namespace dpq
