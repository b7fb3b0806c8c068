#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <json.hpp>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace dpq {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
using Json = nlohmann::ordered_json;

using IntVec = std::vector<long long>;
using IntMat = std::vector<IntVec>;  // row-major
using RatVec = std::vector<Rational>;
using RatMat = std::vector<RatVec>;

// Structured failure: a short machine code, a message, and a JSON payload.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message, Json detail = Json::object());
  const std::string& code() const { return code_; }
  const Json& detail() const { return detail_; }
  Json to_json() const;

 private:
  std::string code_;
  Json detail_;
};

// "p" when integral, otherwise "p/q".
std::string to_string(const Rational& r);
Rational parse_rational(std::string_view s);
// Integer JSON number when integral, otherwise the "p/q" string.
Json to_json(const Rational& r);
Rational rational_from_json(const Json& j);
Json to_json(const IntVec& v);
Json to_json(const IntMat& m);

std::string to_string(const IntVec& v);

// --- integer matrices ---
IntMat identity(int n);
IntMat mul(const IntMat& a, const IntMat& b);
IntVec mul(const IntMat& a, const IntVec& v);
IntMat transpose(const IntMat& a);
long long dot(const IntVec& a, const IntVec& b);

// Row Hermite normal form; zero rows are dropped.
IntMat hnf_rows(IntMat m);
// Basis (HNF rows) of {x in Z^n : a x = 0}, n = number of columns of a.
IntMat integer_kernel(const IntMat& a, int ncols);

// --- rational matrices ---
RatMat to_rational(const IntMat& m);
int rank(RatMat m);
// Some solution of a x = b, or nullopt when inconsistent.
std::optional<RatVec> solve(const RatMat& a, const RatVec& b);
std::optional<RatMat> inverse(const RatMat& a);

long long gcd_ll(long long a, long long b);
long long mod_inverse(long long a, long long m);  // throws when not invertible

// File under the shipped data directory; DPQ_DATA_DIR in the environment overrides it.
std::string data_path(const std::string& rel);
Json load_json(const std::string& rel);
long long squarefree_part(long long n);           // keeps sign

}  // namespace dpq
