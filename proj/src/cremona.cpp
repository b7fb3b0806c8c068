#include "dpq/exactgeo.hpp"

#include <array>
#include <map>

namespace dpq {

namespace {

// Homogeneous polynomials in x, y, z with integer coefficients.
using Mono = std::array<int, 3>;
using Poly = std::map<Mono, BigInt>;

Poly var(int k) {
  Mono m{0, 0, 0};
  m[k] = 1;
  return Poly{{m, BigInt(1)}};
}

Poly add(const Poly& a, const Poly& b, int sign = 1) {
  Poly r = a;
  for (const auto& [m, c] : b) {
    BigInt& t = r[m];
    t += sign * c;
    if (t == 0) r.erase(m);
  }
  return r;
}

Poly mul(const Poly& a, const Poly& b) {
  Poly r;
  for (const auto& [ma, ca] : a)
    for (const auto& [mb, cb] : b) {
      const Mono m{ma[0] + mb[0], ma[1] + mb[1], ma[2] + mb[2]};
      BigInt& t = r[m];
      t += ca * cb;
      if (t == 0) r.erase(m);
    }
  return r;
}

int degree(const Poly& p) { return p.empty() ? -1 : p.begin()->first[0] + p.begin()->first[1] + p.begin()->first[2]; }

Poly derivative(const Poly& p, int k) {
  Poly r;
  for (const auto& [m, c] : p)
    if (m[k] > 0) {
      Mono d = m;
      --d[k];
      r[d] += c * m[k];
    }
  return r;
}

FieldElement eval(const Poly& p, const ProjPoint& pt) {
  FieldElement s(pt[0].field());
  for (const auto& [m, c] : p) {
    FieldElement t(pt[0].field(), Rational(c));
    for (int k = 0; k < 3; ++k)
      for (int e = 0; e < m[k]; ++e) t = t * pt[k];
    s = s + t;
  }
  return s;
}

using Map = std::array<Poly, 3>;

// g o (P, Q, R) = ((Q - P) R, (R - P) Q, Q R)
Map apply_g(const Map& f) {
  return {mul(add(f[1], f[0], -1), f[2]), mul(add(f[2], f[0], -1), f[1]), mul(f[1], f[2])};
}

bool proportional_to_identity(const Map& f) {
  const Poly x = var(0), y = var(1), z = var(2);
  return !f[0].empty() && mul(x, f[1]) == mul(y, f[0]) && mul(x, f[2]) == mul(z, f[0]);
}

Json fe(const FieldElement& e) { return e.to_string(); }

}  // namespace

bool CremonaReport::ok() const {
  for (const auto& c : checks)
    if (c.assertion && !c.ok) return false;
  return true;
}

Json CremonaReport::to_json() const {
  Json arr = Json::array();
  for (const auto& c : checks) {
    Json e{{"name", c.name}, {"expected", c.expected}, {"computed", c.computed}, {"ok", c.ok}};
    if (!c.assertion) e["annotation"] = true;
    arr.push_back(e);
  }
  return Json{{"checks", arr}, {"ok", ok()}};
}

CremonaReport verify_cremona_order5() {
  CremonaReport r;
  auto check = [&](std::string name, Json expected, Json computed, bool assertion = true) {
    const bool ok = expected == computed;
    r.checks.push_back({std::move(name), assertion, std::move(expected), std::move(computed), ok});
  };

  const Map id{var(0), var(1), var(2)};
  Map f = id;
  int order = 0;
  for (int k = 1; k <= 5; ++k) {
    f = apply_g(f);
    if (order == 0 && proportional_to_identity(f)) order = k;
  }
  check("order of g", 5, order);
  check("g^5 is the identity up to a common factor", true, proportional_to_identity(f));
  r.checks.back().computed = Json{{"identity", proportional_to_identity(f)}, {"degree", degree(f[0])}};
  r.checks.back().expected = Json{{"identity", true}, {"degree", 32}};
  r.checks.back().ok = r.checks.back().expected == r.checks.back().computed;

  const FieldPtr q5 = make_field({5});
  const FieldElement s5 = FieldElement::basis(q5, 1), one(q5, 1), two(q5, 2);
  const Map g = apply_g(id);
  // expected: lambda^2 - ((sqrt5 - 1)/2) lambda + 1
  const FieldElement want_trace = (s5 - one) * Rational(1, 2), want_det = one;
  const std::vector<std::pair<std::string, ProjPoint>> pts{{"p1", {s5 - one, two, s5 + one}},
                                                           {"p2", {s5 + one, -two, s5 - one}}};
  for (const auto& [name, p] : pts) {
    ProjPoint gp{eval(g[0], p), eval(g[1], p), eval(g[2], p)};
    check("g fixes " + name + " = " + point_string(p), true, same_point(gp, p));
    // Jacobian of the affine map (x/z, y/z) -> (g1/g3, g2/g3)
    const FieldElement z = p[2];
    const ProjPoint a{p[0] / z, p[1] / z, one};
    const FieldElement h = eval(g[2], a);
    FieldElement j[2][2];
    for (int row = 0; row < 2; ++row)
      for (int col = 0; col < 2; ++col) {
        const FieldElement num = eval(derivative(g[row], col), a) * h - eval(g[row], a) * eval(derivative(g[2], col), a);
        j[row][col] = num / (h * h);
      }
    const FieldElement tr = j[0][0] + j[1][1], det = j[0][0] * j[1][1] - j[0][1] * j[1][0];
    check("Jacobian characteristic polynomial at " + name, Json{{"trace", fe(want_trace)}, {"det", fe(want_det)}},
          Json{{"trace", fe(tr)}, {"det", fe(det)}});
    // the square generates the same cyclic group of tangent actions
    const FieldElement tr2 = tr * tr - det * two, det2 = det * det;
    check("char poly of the squared Jacobian at " + name, Json{{"trace", fe(want_trace)}, {"det", fe(want_det)}},
          Json{{"trace", fe(tr2)}, {"det", fe(det2)}}, false);
  }
  return r;
}

}  // namespace dpq
