#include "dpq/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

namespace dpq {

PicardLattice PicardLattice::blowup_of_plane(int n) {
  if (n < 0 || n > 8) throw Error("bad_lattice", "blowup of the plane needs 0..8 points, got " + std::to_string(n));
  PicardLattice l;
  l.kind = LatticeKind::BlowupOfPlane;
  l.n_points = n;
  l.gram = identity(n + 1);
  for (int i = 1; i <= n; ++i) l.gram[i][i] = -1;
  l.canonical.assign(n + 1, 1);
  l.canonical[0] = -3;
  return l;
}

PicardLattice PicardLattice::quadric() {
  PicardLattice l;
  l.kind = LatticeKind::Quadric;
  l.gram = {{0, 1}, {1, 0}};
  l.canonical = {-2, -2};
  return l;
}

PicardLattice PicardLattice::del_pezzo(int degree, bool quadric) {
  if (degree < 1 || degree > 9) throw Error("bad_degree", "degree must be in 1..9, got " + std::to_string(degree));
  if (quadric) {
    if (degree != 8) throw Error("bad_degree", "the quadric has degree 8");
    return PicardLattice::quadric();
  }
  return blowup_of_plane(9 - degree);
}

long long PicardLattice::degree() const { return intersect(*this, canonical, canonical); }

std::string PicardLattice::descriptor() const {
  switch (kind) {
    case LatticeKind::BlowupOfPlane: return "BlowupOfPlane(" + std::to_string(n_points) + ")";
    case LatticeKind::Quadric: return "Quadric";
    case LatticeKind::Contracted:
      return "Contracted(" + origin + "," + std::to_string(contracted) + ")";
  }
  return "?";
}

std::string PicardLattice::surface_type() const {
  const long long d = degree();
  if (rank() == 1 && d == 9) return "P2";
  if (rank() == 2 && d == 8) {
    for (int i = 0; i < 2; ++i)
      if (gram[i][i] % 2 != 0) return "F1";
    return "P1xP1";
  }
  return "dP" + std::to_string(d);
}

Json PicardLattice::to_json() const {
  Json j;
  j["degree"] = degree();
  j["descriptor"] = descriptor();
  return j;
}

long long intersect(const PicardLattice& lat, const DivisorClass& a, const DivisorClass& b) {
  const size_t n = lat.gram.size();
  if (a.size() != n || b.size() != n)
    throw Error("dimension_mismatch", "class length does not match lattice rank",
                Json{{"rank", n}, {"a", a.size()}, {"b", b.size()}});
  long long s = 0;
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) s += a[i] * lat.gram[i][j] * b[j];
  return s;
}

std::vector<DivisorClass> enumerate_classes(const PicardLattice& lat, long long self_int, long long k_int) {
  // P(x) = 2(x.K)^2/d - x.x is positive definite (Hodge index on K-perp), and on
  // our targets P = 2t^2/d - s. Fincke-Pohst over the exact LDL form of P.
  const int n = lat.rank();
  const long long d = lat.degree();
  if (d <= 0) throw Error("bad_lattice", "enumeration needs K^2 > 0");
  IntVec gk = mul(lat.gram, lat.canonical);
  RatMat q(n, RatVec(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) q[i][j] = Rational(2 * gk[i] * gk[j], d) - lat.gram[i][j];
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      q[j][i] = q[i][j];
      q[i][j] /= q[i][i];
    }
    for (int k = i + 1; k < n; ++k)
      for (int l = k; l < n; ++l) q[k][l] -= q[k][i] * q[i][l];
  }
  const Rational budget = Rational(2 * k_int * k_int, d) - self_int;
  std::vector<DivisorClass> out;
  if (budget < 0) return out;
  DivisorClass x(n, 0);
  std::function<void(int, Rational)> rec = [&](int i, Rational left) {
    if (i < 0) {
      if (intersect(lat, x, x) == self_int && intersect(lat, x, lat.canonical) == k_int) out.push_back(x);
      return;
    }
    Rational c = 0;
    for (int j = i + 1; j < n; ++j) c -= q[i][j] * x[j];
    const double cd = c.convert_to<double>();
    const double w = std::sqrt((left / q[i][i]).convert_to<double>()) + 1.0;
    for (long long v = static_cast<long long>(std::floor(cd - w)); v <= static_cast<long long>(std::ceil(cd + w)); ++v) {
      Rational dev = Rational(v) - c;
      Rational used = q[i][i] * dev * dev;
      if (used > left) continue;
      x[i] = v;
      rec(i - 1, left - used);
    }
    x[i] = 0;
  };
  rec(n - 1, budget);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<DivisorClass> enumerate_minus_one_curves(const PicardLattice& lat) {
  return enumerate_classes(lat, -1, -1);
}

std::vector<DivisorClass> enumerate_roots(const PicardLattice& lat) { return enumerate_classes(lat, -2, 0); }

Blowdown blowdown(const PicardLattice& lat, const std::vector<DivisorClass>& curves) {
  for (const auto& c : curves) {
    if (intersect(lat, c, c) != -1 || intersect(lat, c, lat.canonical) != -1)
      throw Error("not_minus_one_curve", "class " + to_string(c) + " is not a (-1)-class",
                  Json{{"class", c}, {"self_intersection", intersect(lat, c, c)},
                       {"K_intersection", intersect(lat, c, lat.canonical)}});
  }
  for (size_t i = 0; i < curves.size(); ++i)
    for (size_t j = i + 1; j < curves.size(); ++j) {
      const long long m = intersect(lat, curves[i], curves[j]);
      if (m != 0)
        throw Error("not_disjoint",
                    "curves " + to_string(curves[i]) + " and " + to_string(curves[j]) + " meet with multiplicity " +
                        std::to_string(m),
                    Json{{"pair", Json::array({curves[i], curves[j]})}, {"intersection", m}});
    }
  const int n = lat.rank();
  IntMat a;
  for (const auto& c : curves) a.push_back(mul(transpose(lat.gram), c));
  IntMat rows = curves.empty() ? identity(n) : integer_kernel(a, n);
  const int r = static_cast<int>(rows.size());

  Blowdown out;
  out.basis = transpose(rows);
  IntMat gb = mul(lat.gram, out.basis);
  out.lattice.gram = mul(rows, gb);
  if (lat.kind == LatticeKind::Contracted) {
    out.lattice.origin = lat.origin;
    out.lattice.contracted = lat.contracted + static_cast<int>(curves.size());
  } else {
    out.lattice.origin = lat.descriptor();
    out.lattice.contracted = static_cast<int>(curves.size());
  }
  out.lattice.kind = curves.empty() ? lat.kind : LatticeKind::Contracted;
  if (curves.empty()) {
    out.lattice = lat;
    out.pushforward = identity(n);
    return out;
  }

  // x -> x + sum (x.C) C lands in the orthogonal sublattice; express in the new basis.
  RatMat b = to_rational(out.basis);
  auto push_old = [&](const DivisorClass& x) {
    DivisorClass y = x;
    for (const auto& c : curves) {
      const long long m = intersect(lat, x, c);
      for (int i = 0; i < n; ++i) y[i] += m * c[i];
    }
    return y;
  };
  auto coords = [&](const DivisorClass& y) {
    RatVec rhs(y.begin(), y.end());
    auto sol = solve(b, rhs);
    if (!sol) throw Error("internal", "pushforward left the orthogonal sublattice");
    IntVec z;
    for (const auto& v : *sol) {
      if (denominator(v) != 1) throw Error("internal", "pushforward is not integral");
      z.push_back(static_cast<long long>(numerator(v)));
    }
    return z;
  };
  out.pushforward.assign(r, IntVec(n, 0));
  for (int k = 0; k < n; ++k) {
    DivisorClass e(n, 0);
    e[k] = 1;
    IntVec z = coords(push_old(e));
    for (int i = 0; i < r; ++i) out.pushforward[i][k] = z[i];
  }
  out.lattice.canonical = coords(push_old(lat.canonical));
  return out;
}

DivisorClass named_class(const PicardLattice& lat, const std::string& name) {
  const int n = lat.rank();
  if (name == "K") return lat.canonical;
  if (lat.kind != LatticeKind::BlowupOfPlane)
    throw Error("unknown_class", "named classes need a plane-blowup lattice: " + name);
  DivisorClass c(n, 0);
  auto idx = [&](char ch) {
    int i = ch - '0';
    if (i < 1 || i > lat.n_points) throw Error("unknown_class", "index out of range in " + name);
    return i;
  };
  if (name == "L") {
    c[0] = 1;
  } else if (name == "Q" && lat.n_points == 5) {
    c = {2, -1, -1, -1, -1, -1};
  } else if (name.size() == 2 && name[0] == 'E') {
    c[idx(name[1])] = 1;
  } else if (name.size() == 3 && name[0] == 'L' && name[1] != name[2]) {
    c[0] = 1;
    c[idx(name[1])] = -1;
    c[idx(name[2])] = -1;
  } else {
    throw Error("unknown_class", "unknown class name '" + name + "'");
  }
  return c;
}

std::string curve_label(const PicardLattice& lat, const DivisorClass& c) {
  if (lat.kind == LatticeKind::BlowupOfPlane) {
    std::vector<std::string> names;
    for (int i = 1; i <= lat.n_points; ++i) names.push_back("E" + std::to_string(i));
    for (int i = 1; i <= lat.n_points; ++i)
      for (int j = i + 1; j <= lat.n_points; ++j) names.push_back("L" + std::to_string(i) + std::to_string(j));
    if (lat.n_points == 5) names.push_back("Q");
    for (const auto& nm : names)
      if (named_class(lat, nm) == c) return nm;
  }
  return to_string(c);
}

}  // namespace dpq
