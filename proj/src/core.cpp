#include "dpq/core.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace dpq {

Error::Error(std::string code, const std::string& message, Json detail)
    : std::runtime_error(message), code_(std::move(code)), detail_(std::move(detail)) {}

Json Error::to_json() const {
  Json j;
  j["error"] = code_;
  j["message"] = what();
  if (!detail_.empty()) j["detail"] = detail_;
  return j;
}

std::string to_string(const Rational& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

Rational parse_rational(std::string_view s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string_view::npos) return Rational(BigInt(std::string(s)));
    BigInt p(std::string(s.substr(0, slash)));
    BigInt q(std::string(s.substr(slash + 1)));
    if (q == 0) throw Error("bad_rational", "zero denominator in '" + std::string(s) + "'");
    return Rational(p, q);
  } catch (const Error&) {
    throw;
  } catch (const std::exception&) {
    throw Error("bad_rational", "cannot parse rational '" + std::string(s) + "'");
  }
}

Json to_json(const Rational& r) {
  if (denominator(r) == 1 && abs(numerator(r)) < BigInt(1) << 62)
    return static_cast<long long>(numerator(r));
  return to_string(r);
}

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw Error("bad_rational", "expected integer or \"p/q\" string, got " + j.dump());
}

Json to_json(const IntVec& v) { return Json(v); }

Json to_json(const IntMat& m) {
  Json j = Json::array();
  for (const auto& row : m) j.push_back(row);
  return j;
}

std::string to_string(const IntVec& v) {
  std::ostringstream os;
  os << '(';
  for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ')';
  return os.str();
}

IntMat identity(int n) {
  IntMat m(n, IntVec(n, 0));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

IntMat mul(const IntMat& a, const IntMat& b) {
  const size_t n = a.size(), k = b.size(), p = b.empty() ? 0 : b[0].size();
  IntMat c(n, IntVec(p, 0));
  for (size_t i = 0; i < n; ++i)
    for (size_t t = 0; t < k; ++t) {
      const long long x = a[i][t];
      if (x == 0) continue;
      for (size_t j = 0; j < p; ++j) c[i][j] += x * b[t][j];
    }
  return c;
}

IntVec mul(const IntMat& a, const IntVec& v) {
  IntVec r(a.size(), 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < v.size(); ++j) r[i] += a[i][j] * v[j];
  return r;
}

IntMat transpose(const IntMat& a) {
  if (a.empty()) return {};
  IntMat t(a[0].size(), IntVec(a.size()));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < a[i].size(); ++j) t[j][i] = a[i][j];
  return t;
}

long long dot(const IntVec& a, const IntVec& b) {
  long long s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

namespace {

long long floor_div(long long a, long long b) {
  long long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

void axpy_row(IntVec& dst, long long q, const IntVec& src) {
  for (size_t j = 0; j < dst.size(); ++j) dst[j] -= q * src[j];
}

// Integer row echelon on columns [0, pivot_cols). Returns number of pivot rows.
size_t echelon(IntMat& m, size_t pivot_cols, bool reduce_above) {
  size_t r = 0;
  for (size_t col = 0; col < pivot_cols && r < m.size(); ++col) {
    while (true) {
      size_t best = m.size();
      for (size_t i = r; i < m.size(); ++i)
        if (m[i][col] != 0 && (best == m.size() || std::llabs(m[i][col]) < std::llabs(m[best][col])))
          best = i;
      if (best == m.size()) break;
      std::swap(m[r], m[best]);
      bool done = true;
      for (size_t i = r + 1; i < m.size(); ++i) {
        if (m[i][col] == 0) continue;
        axpy_row(m[i], m[i][col] / m[r][col], m[r]);
        if (m[i][col] != 0) done = false;
      }
      if (done) break;
    }
    if (m[r][col] == 0) continue;
    if (m[r][col] < 0)
      for (auto& x : m[r]) x = -x;
    if (reduce_above)
      for (size_t i = 0; i < r; ++i) axpy_row(m[i], floor_div(m[i][col], m[r][col]), m[r]);
    ++r;
  }
  return r;
}

}  // namespace

IntMat hnf_rows(IntMat m) {
  if (m.empty()) return m;
  const size_t r = echelon(m, m[0].size(), true);
  m.resize(r);
  return m;
}

IntMat integer_kernel(const IntMat& a, int ncols) {
  // rows of [a^T | I]; rows whose a-part vanishes after elimination span the kernel
  const size_t m = a.size();
  IntMat aug(ncols, IntVec(m + ncols, 0));
  for (int i = 0; i < ncols; ++i) {
    for (size_t j = 0; j < m; ++j) aug[i][j] = a[j][i];
    aug[i][m + i] = 1;
  }
  const size_t r = echelon(aug, m, false);
  IntMat ker;
  for (size_t i = r; i < aug.size(); ++i) ker.emplace_back(aug[i].begin() + m, aug[i].end());
  return hnf_rows(ker);
}

RatMat to_rational(const IntMat& m) {
  RatMat r(m.size());
  for (size_t i = 0; i < m.size(); ++i)
    for (long long x : m[i]) r[i].emplace_back(x);
  return r;
}

namespace {

// Gauss-Jordan in place; returns pivot columns.
std::vector<size_t> rref(RatMat& m, size_t ncols) {
  std::vector<size_t> piv;
  size_t r = 0;
  for (size_t c = 0; c < ncols && r < m.size(); ++c) {
    size_t p = r;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[r], m[p]);
    const Rational inv = 1 / m[r][c];
    for (auto& x : m[r]) x *= inv;
    for (size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c] == 0) continue;
      const Rational f = m[i][c];
      for (size_t j = 0; j < m[i].size(); ++j) m[i][j] -= f * m[r][j];
    }
    piv.push_back(c);
    ++r;
  }
  return piv;
}

}  // namespace

int rank(RatMat m) {
  if (m.empty()) return 0;
  return static_cast<int>(rref(m, m[0].size()).size());
}

std::optional<RatVec> solve(const RatMat& a, const RatVec& b) {
  const size_t n = a.empty() ? 0 : a[0].size();
  RatMat aug = a;
  for (size_t i = 0; i < aug.size(); ++i) aug[i].push_back(b[i]);
  auto piv = rref(aug, n);
  for (size_t i = piv.size(); i < aug.size(); ++i)
    if (aug[i][n] != 0) return std::nullopt;
  RatVec x(n, Rational(0));
  for (size_t i = 0; i < piv.size(); ++i) x[piv[i]] = aug[i][n];
  return x;
}

std::optional<RatMat> inverse(const RatMat& a) {
  const size_t n = a.size();
  RatMat aug = a;
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) aug[i].emplace_back(i == j ? 1 : 0);
  auto piv = rref(aug, n);
  if (piv.size() != n) return std::nullopt;
  RatMat inv(n);
  for (size_t i = 0; i < n; ++i) inv[i].assign(aug[i].begin() + n, aug[i].end());
  return inv;
}

long long gcd_ll(long long a, long long b) {
  a = std::llabs(a);
  b = std::llabs(b);
  while (b) {
    a %= b;
    std::swap(a, b);
  }
  return a;
}

long long mod_inverse(long long a, long long m) {
  a = ((a % m) + m) % m;
  for (long long x = 1; x < m; ++x)
    if ((a * x) % m == 1) return x;
  throw Error("not_invertible", std::to_string(a) + " has no inverse mod " + std::to_string(m));
}

long long squarefree_part(long long n) {
  if (n == 0) return 0;
  long long sign = n < 0 ? -1 : 1, r = 1;
  n = std::llabs(n);
  for (long long p = 2; p * p <= n; ++p) {
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e % 2) r *= p;
  }
  return sign * r * n;
}

std::string data_path(const std::string& rel) {
  const char* env = std::getenv("DPQ_DATA_DIR");
  return std::string(env && *env ? env : DPQ_DATA_DIR) + "/" + rel;
}

Json load_json(const std::string& rel) {
  const std::string p = data_path(rel);
  std::ifstream in(p);
  if (!in) throw Error("missing_data", "cannot open " + p, Json{{"path", p}});
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw Error("bad_data", p + ": " + e.what(), Json{{"path", p}});
  }
}

}  // namespace dpq
