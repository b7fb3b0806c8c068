#include "dpq/quotient.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace dpq {

SingularityType SingularityType::make(long long m, long long q, std::vector<std::string>* warnings) {
  if (m < 2) throw Error("bad_singularity", "m must be at least 2, got " + std::to_string(m));
  const long long q0 = q;
  q = ((q % m) + m) % m;
  if (q == 0) throw Error("bad_singularity", "q must be a unit-free residue mod m, got q = " + std::to_string(q0));
  if (q != q0 && warnings) warnings->push_back("q reduced mod m: " + std::to_string(q0) + " -> " + std::to_string(q));
  const long long g = gcd_ll(m, q);
  if (g > 1) {
    if (warnings)
      warnings->push_back("1/" + std::to_string(m) + "(1," + std::to_string(q) + ") has gcd " + std::to_string(g) +
                          "; normalized to 1/" + std::to_string(m / g) + "(1," + std::to_string(q / g) + ")");
    m /= g;
    q /= g;
  }
  return {static_cast<int>(m), static_cast<int>(q)};
}

SingularityType SingularityType::canonical() const {
  const int qi = static_cast<int>(mod_inverse(q, m));
  return {m, std::min(q, qi)};
}

std::string SingularityType::name() const {
  if (du_val()) return "A" + std::to_string(m - 1);
  const SingularityType c = canonical();
  return "1/" + std::to_string(c.m) + "(1," + std::to_string(c.q) + ")";
}

std::vector<SingularityType> canonical_sorted(std::vector<SingularityType> v) {
  for (auto& s : v) s = s.canonical();
  std::sort(v.begin(), v.end());
  return v;
}

namespace {

RatMat chain_matrix(const std::vector<int>& a) {
  const size_t k = a.size();
  RatMat m(k, RatVec(k, Rational(0)));
  for (size_t i = 0; i < k; ++i) {
    m[i][i] = -a[i];
    if (i + 1 < k) m[i][i + 1] = m[i + 1][i] = 1;
  }
  return m;
}

std::vector<int> hj_chain(int m, int q) {
  std::vector<int> a;
  while (q > 0) {
    const int ai = (m + q - 1) / q;
    a.push_back(ai);
    const int r = ai * q - m;
    m = q;
    q = r;
  }
  return a;
}

}  // namespace

ResolutionData hj_resolve(const SingularityType& s) {
  ResolutionData r;
  r.type = s;
  r.chain = hj_chain(s.m, s.q);
  const size_t k = r.chain.size();
  RatMat mi = *inverse(chain_matrix(r.chain));
  // discrepancies: M d = (a_j - 2)
  RatVec rhs;
  for (int a : r.chain) rhs.emplace_back(a - 2);
  RatVec d = *solve(chain_matrix(r.chain), rhs);
  r.delta_K2 = 0;
  for (size_t i = 0; i < k; ++i) r.delta_K2 += d[i] * rhs[i];
  // pullback coefficient of a curve through the first (last) component is -M^-1 e
  r.delta_C2 = mi[0][0];
  r.delta_D2 = mi[k - 1][k - 1];
  return r;
}

ResolutionData hj_resolve(long long m, long long q) {
  std::vector<std::string> w;
  SingularityType s = SingularityType::make(m, q, &w);
  ResolutionData r = hj_resolve(s);
  r.warnings = w;
  return r;
}

Json ResolutionData::to_json() const {
  Json j;
  j["m"] = type.m;
  j["q"] = type.q;
  j["chain"] = chain;
  Json self = Json::array();
  for (int a : chain) self.push_back(-a);
  j["exceptional_self_intersections"] = self;
  j["delta_K2"] = dpq::to_json(delta_K2);
  j["delta_C2"] = dpq::to_json(delta_C2);
  j["delta_D2"] = dpq::to_json(delta_D2);
  if (!warnings.empty()) j["warnings"] = warnings;
  return j;
}

std::vector<ResolutionData> table1() {
  std::vector<ResolutionData> rows;
  for (auto [m, q] : std::vector<std::pair<int, int>>{{2, 1}, {3, 1}, {3, 2}, {4, 1}, {4, 3}, {5, 1}, {5, 2}, {5, 3}, {5, 4}})
    rows.push_back(hj_resolve(m, q));
  return rows;
}

Rational hurwitz_k2(const RamificationDatum& d) {
  if (d.group_order < 1) throw Error("bad_datum", "group order must be positive");
  DivisorClass v = d.lattice.canonical;
  for (const auto& b : d.curves) {
    if (b.cls.size() != v.size())
      throw Error("dimension_mismatch", "branch class length does not match the lattice rank",
                  Json{{"class", b.cls}, {"rank", v.size()}});
    if (b.ram_index < 2 || d.group_order % b.ram_index != 0)
      throw Error("bad_datum", "ramification index must be >= 2 and divide the group order",
                  Json{{"ram_index", b.ram_index}, {"group_order", d.group_order}});
    for (size_t i = 0; i < v.size(); ++i) v[i] -= static_cast<long long>(b.ram_index - 1) * b.multiplicity * b.cls[i];
  }
  return Rational(intersect(d.lattice, v, v), d.group_order);
}

Rational hurwitz_k2(const Rational& k2_upstairs, const RamificationDatum& d) {
  if (d.curves.empty()) {
    if (d.group_order < 1) throw Error("bad_datum", "group order must be positive");
    return k2_upstairs / d.group_order;
  }
  if (k2_upstairs != d.lattice.degree())
    throw Error("bad_datum", "upstairs K^2 disagrees with the lattice",
                Json{{"given", dpq::to_json(k2_upstairs)}, {"lattice", d.lattice.degree()}});
  return hurwitz_k2(d);
}

Rational resolve_all(const Rational& k2, const std::vector<SingularityType>& sings) {
  Rational r = k2;
  for (const auto& s : sings) r += hj_resolve(s).delta_K2;
  return r;
}

int CurveConfiguration::index(const std::string& label) const {
  auto it = std::find(labels.begin(), labels.end(), label);
  if (it == labels.end()) throw Error("unknown_curve", "no curve labelled '" + label + "'", Json{{"label", label}});
  return static_cast<int>(it - labels.begin());
}

void CurveConfiguration::add_curve(const std::string& label, const Rational& self_int) {
  if (std::find(labels.begin(), labels.end(), label) != labels.end())
    throw Error("duplicate_curve", "curve '" + label + "' already present");
  labels.push_back(label);
  for (auto& row : pairing) row.emplace_back(0);
  pairing.emplace_back(labels.size(), Rational(0));
  pairing.back().back() = self_int;
}

void CurveConfiguration::set(const std::string& a, const std::string& b, const Rational& v) {
  const int i = index(a), j = index(b);
  pairing[i][j] = pairing[j][i] = v;
}

const Rational& CurveConfiguration::get(const std::string& a, const std::string& b) const {
  return pairing[index(a)][index(b)];
}

Json CurveConfiguration::to_json() const {
  Json j;
  j["K2"] = dpq::to_json(K2);
  Json curves = Json::array();
  for (size_t i = 0; i < labels.size(); ++i)
    curves.push_back(Json{{"label", labels[i]}, {"self_int", dpq::to_json(pairing[i][i])}});
  j["curves"] = curves;
  Json meets = Json::array();
  for (size_t i = 0; i < labels.size(); ++i)
    for (size_t k = i + 1; k < labels.size(); ++k)
      if (pairing[i][k] != 0) meets.push_back(Json{labels[i], labels[k], dpq::to_json(pairing[i][k])});
  j["intersections"] = meets;
  return j;
}

CurveConfiguration contract_sequence(const CurveConfiguration& cfg, const std::vector<std::string>& labels) {
  CurveConfiguration c = cfg;
  for (const auto& l : labels) {
    const int e = c.index(l);
    if (c.pairing[e][e] != -1)
      throw Error("not_contractible",
                  "curve '" + l + "' has self-intersection " + to_string(c.pairing[e][e]) + " at its turn",
                  Json{{"label", l}, {"self_int", dpq::to_json(c.pairing[e][e])}});
    const size_t n = c.labels.size();
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j)
        if (static_cast<int>(i) != e && static_cast<int>(j) != e) c.pairing[i][j] += c.pairing[i][e] * c.pairing[j][e];
    c.labels.erase(c.labels.begin() + e);
    c.pairing.erase(c.pairing.begin() + e);
    for (auto& row : c.pairing) row.erase(row.begin() + e);
    c.K2 += 1;
  }
  return c;
}

CurveConfiguration resolve_configuration(const CurveConfiguration& singular, const std::vector<SingularPoint>& points) {
  CurveConfiguration out = singular;
  for (const auto& p : points) {
    ResolutionData rd = hj_resolve(p.type);
    const size_t k = rd.chain.size();
    RatMat mi = *inverse(chain_matrix(rd.chain));
    std::map<std::string, RatVec> t;
    for (const auto& b : p.branches) {
      out.index(b.curve);
      const int comp = b.component < 0 ? static_cast<int>(k) - 1 : b.component;
      if (comp >= static_cast<int>(k))
        throw Error("bad_configuration", "branch attaches beyond the chain at " + p.name);
      auto& v = t.try_emplace(b.curve, RatVec(k, Rational(0))).first->second;
      v[comp] += b.count;
    }
    std::map<std::string, RatVec> coef;  // pullback coefficients c = -M^-1 t
    for (const auto& [name, tv] : t) {
      RatVec c(k, Rational(0));
      for (size_t i = 0; i < k; ++i)
        for (size_t j = 0; j < k; ++j) c[i] -= mi[i][j] * tv[j];
      coef.emplace(name, c);
    }
    for (const auto& [a, ca] : coef)
      for (const auto& [b, tb] : t) {
        Rational corr = 0;
        for (size_t i = 0; i < k; ++i) corr += ca[i] * tb[i];
        const int ia = out.index(a), ib = out.index(b);
        out.pairing[ia][ib] -= corr;
      }
    std::vector<std::string> comps;
    for (size_t i = 0; i < k; ++i) {
      comps.push_back(p.name + ".E" + std::to_string(i + 1));
      out.add_curve(comps.back(), Rational(-rd.chain[i]));
      if (i > 0) out.set(comps[i - 1], comps[i], 1);
    }
    for (const auto& [name, tv] : t)
      for (size_t i = 0; i < k; ++i)
        if (tv[i] != 0) out.set(name, comps[i], tv[i]);
    out.K2 += rd.delta_K2;
  }
  return out;
}

Rational image_intersection(const ActionGroup& image, long long group_order, const DivisorClass& c, long long stab_c,
                            const DivisorClass& d, long long stab_d) {
  // f^* f(C) = (|N| / (|Stab C| |image|)) sum over the image of h C
  const auto& lat = image.lattice();
  const long long n = static_cast<long long>(image.order());
  auto orbit_sum = [&](const DivisorClass& x) {
    DivisorClass s(x.size(), 0);
    for (const auto& m : image.elements()) {
      DivisorClass y = mul(m, x);
      for (size_t i = 0; i < s.size(); ++i) s[i] += y[i];
    }
    return s;
  };
  if (group_order % n != 0) throw Error("bad_datum", "lattice image order must divide the group order");
  const Rational fc = Rational(group_order, stab_c * n), fd = Rational(group_order, stab_d * n);
  return fc * fd * intersect(lat, orbit_sum(c), orbit_sum(d)) / group_order;
}

// --- polyhedral groups acting on P1 ---
namespace {

using Perm = std::vector<int>;

Perm compose(const Perm& a, const Perm& b) {
  Perm c(a.size());
  for (size_t i = 0; i < a.size(); ++i) c[i] = a[b[i]];
  return c;
}

Perm cycle_perm(int n, const std::vector<std::vector<int>>& cycles) {
  Perm p(n);
  std::iota(p.begin(), p.end(), 0);
  for (const auto& c : cycles)
    for (size_t i = 0; i < c.size(); ++i) p[c[i]] = c[(i + 1) % c.size()];
  return p;
}

struct PermGroup {
  std::vector<Perm> elems;
  std::map<Perm, int> idx;

  PermGroup(int n, const std::vector<Perm>& gens) {
    Perm id(n);
    std::iota(id.begin(), id.end(), 0);
    elems.push_back(id);
    idx[id] = 0;
    for (size_t i = 0; i < elems.size(); ++i)
      for (const auto& g : gens) {
        Perm p = compose(g, elems[i]);
        if (idx.emplace(p, static_cast<int>(elems.size())).second) elems.push_back(p);
      }
  }
  int mul(int a, int b) const { return idx.at(compose(elems[a], elems[b])); }
  int inv(int a) const {
    Perm p(elems[a].size());
    for (size_t i = 0; i < p.size(); ++i) p[elems[a][i]] = static_cast<int>(i);
    return idx.at(p);
  }
  int power(int a, int k) const {
    int r = 0;
    for (int i = 0; i < k; ++i) r = mul(a, r);
    return r;
  }
  std::vector<int> cyclic(int a) const {
    std::set<int> s{0};
    for (int x = a; x != 0; x = mul(a, x)) s.insert(x);
    return {s.begin(), s.end()};
  }
  std::vector<int> conj(const std::vector<int>& h, int w) const {
    std::vector<int> out;
    for (int x : h) out.push_back(mul(mul(w, x), inv(w)));
    std::sort(out.begin(), out.end());
    return out;
  }
  bool conjugate_elements(int a, int b) const {
    for (int w = 0; w < static_cast<int>(elems.size()); ++w)
      if (mul(mul(w, a), inv(w)) == b) return true;
    return false;
  }
};

PermGroup polyhedral_model(const std::string& name) {
  auto num = [&](size_t from) {
    try {
      return std::stoi(name.substr(from));
    } catch (const std::exception&) {
      throw Error("unsupported_group", "unknown polyhedral group '" + name + "'");
    }
  };
  if (name == "A4") return PermGroup(4, {cycle_perm(4, {{0, 1, 2}}), cycle_perm(4, {{0, 1}, {2, 3}})});
  if (name == "S4") return PermGroup(4, {cycle_perm(4, {{0, 1, 2, 3}}), cycle_perm(4, {{0, 1}})});
  if (name == "A5") return PermGroup(5, {cycle_perm(5, {{0, 1, 2}}), cycle_perm(5, {{0, 1, 2, 3, 4}})});
  if (name == "V4" || name == "D4") return PermGroup(4, {cycle_perm(4, {{0, 1}, {2, 3}}), cycle_perm(4, {{0, 2}, {1, 3}})});
  if (!name.empty() && name[0] == 'C') {
    const int n = num(1);
    if (n < 2) throw Error("unsupported_group", "cyclic group needs order >= 2");
    std::vector<int> c(n);
    std::iota(c.begin(), c.end(), 0);
    return PermGroup(n, {cycle_perm(n, {c})});
  }
  if (!name.empty() && name[0] == 'D') {
    const int two_n = num(1);
    if (two_n < 6 || two_n % 2) throw Error("unsupported_group", "dihedral group D2n needs even order >= 4");
    const int n = two_n / 2;
    std::vector<int> c(n);
    std::iota(c.begin(), c.end(), 0);
    Perm s(n);
    for (int i = 0; i < n; ++i) s[i] = (n - i) % n;
    return PermGroup(n, {cycle_perm(n, {c}), s});
  }
  throw Error("unsupported_group", "unknown polyhedral group '" + name + "'");
}

}  // namespace

std::vector<SingularityType> p1xp1_quotient_singularities(const std::string& group, Pairing pairing) {
  if (pairing == Pairing::Twisted && group != "A5")
    throw Error("unsupported_pairing", "twisted pairing is only defined here for A5", Json{{"group", group}});
  const PermGroup g = polyhedral_model(group);
  const int n = static_cast<int>(g.elems.size());
  std::set<std::vector<int>> cyclics;
  for (int a = 1; a < n; ++a) cyclics.insert(g.cyclic(a));
  std::vector<std::vector<int>> maximal;
  for (const auto& z : cyclics) {
    bool inside = false;
    for (const auto& w : cyclics)
      if (w.size() > z.size() && std::includes(w.begin(), w.end(), z.begin(), z.end())) inside = true;
    if (!inside) maximal.push_back(z);
  }
  std::set<std::vector<int>> seen;
  std::vector<SingularityType> out;
  for (const auto& z : maximal) {
    if (seen.count(z)) continue;
    for (int w = 0; w < n; ++w) seen.insert(g.conj(z, w));
    const int k = static_cast<int>(z.size());
    int gen = -1;
    for (int x : z)
      if (x != 0 && static_cast<int>(g.cyclic(x).size()) == k) {
        gen = x;
        break;
      }
    int normalizer = 0;
    for (int w = 0; w < n; ++w) normalizer += g.conj(z, w) == z;
    int mu = 1;
    if (pairing == Pairing::Twisted) {
      // outer automorphism: conjugation by a transposition of S5
      const Perm t = cycle_perm(5, {{0, 1}});
      const int phi = g.idx.at(compose(compose(t, g.elems[gen]), t));
      mu = -1;
      for (int m = 1; m < k && mu < 0; ++m)
        if (std::gcd(m, k) == 1 && g.conjugate_elements(phi, g.power(gen, m))) mu = m;
    }
    // the fixed points of z on each ruling have rotation numbers +-1 (resp. +-mu);
    // the normalizer swaps them simultaneously when it is larger than z
    const int copies = normalizer > k ? 1 : 2;
    for (int c = 0; c < copies; ++c) {
      out.push_back(SingularityType::make(k, mu));
      out.push_back(SingularityType::make(k, k - mu));
    }
  }
  return canonical_sorted(out);
}

std::vector<DivisorClass> dp4c3_invariant_zero_curves(int rhs, int a_max) {
  // a L - b(E1+E2+E3) - c E4 - d E5 with C^2 = 0 and C.(K + C) = -2
  std::vector<DivisorClass> out;
  for (long long a = 1; a <= a_max; ++a)
    for (long long b = 0; b <= a; ++b)
      for (long long c = 0; c <= a; ++c)
        for (long long d = 0; d <= a; ++d)
          if (a * a - 3 * b * b - c * c - d * d == 0 && 3 * a - 3 * b - c - d == rhs)
            out.push_back({a, -b, -b, -b, -c, -d});
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace dpq
