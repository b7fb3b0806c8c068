#pragma once

#include "dpq/weyl.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace dpq {

// Q(sqrt d_1, ..., sqrt d_k); basis element of a subset S is prod_{i in S} sqrt d_i, d = -1 encodes i.
class MultiQuadraticField {
 public:
  explicit MultiQuadraticField(std::vector<long long> generators);
  const std::vector<long long>& generators() const { return gens_; }
  size_t degree() const { return size_t{1} << gens_.size(); }
  // Square of the basis element of `mask`.
  long long basis_square(unsigned mask) const;
  // Rational factor of e_a * e_b relative to e_{a xor b}.
  long long product_factor(unsigned a, unsigned b) const { return factor_[a * degree() + b]; }
  unsigned mask_of(const std::vector<long long>& gens) const;  // throws for a foreign generator
  std::string basis_name(unsigned mask) const;                  // "1", "i", "√2", "i√6"
  Json to_json() const { return gens_; }

 private:
  std::vector<long long> gens_;
  std::vector<long long> factor_;
};
using FieldPtr = std::shared_ptr<const MultiQuadraticField>;
FieldPtr make_field(std::vector<long long> generators);

class FieldElement {
 public:
  FieldElement() = default;
  explicit FieldElement(FieldPtr f, const Rational& r = 0);
  static FieldElement basis(FieldPtr f, unsigned mask, const Rational& c = 1);

  const FieldPtr& field() const { return field_; }
  const RatVec& coeffs() const { return c_; }
  bool is_zero() const;
  bool is_rational() const;

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator-() const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator*(const Rational& r) const;
  FieldElement operator/(const FieldElement& o) const { return *this * o.inverse(); }
  FieldElement inverse() const;  // product of the nontrivial conjugates over the norm
  // Flips the signs of the generators in `mask`.
  FieldElement conjugate(unsigned mask) const;
  bool operator==(const FieldElement& o) const;

  std::string to_string() const;

 private:
  void check_same(const FieldElement& o) const;
  FieldPtr field_;
  RatVec c_;
};

// x with x^2 = r, when the field has one.
std::optional<FieldElement> sqrt_rational(const FieldPtr& f, const Rational& r);
// "i*sqrt3", "-(1+sqrt6)/2", "2*sqrt2 + sqrt3".
FieldElement parse_element(const FieldPtr& f, const std::string& text);

using ProjPoint = std::vector<FieldElement>;
ProjPoint normalize(const ProjPoint& p);  // first nonzero coordinate becomes 1
bool same_point(const ProjPoint& a, const ProjPoint& b);
std::string point_string(const ProjPoint& p);  // scaled so the last nonzero coordinate is 1
int field_rank(std::vector<std::vector<FieldElement>> rows);

// Coordinate map x -> (sign_k * x_{perm_k})_k.
struct SignedPermutation {
  std::vector<int> perm;  // 0-based
  std::vector<int> sign;
  static SignedPermutation identity(int n);
  // "i12" flips x1, x2; "id".
  static SignedPermutation flip(const std::string& word, int n = 5);
  static SignedPermutation from_json(const Json& j, int n = 5);
  ProjPoint apply(const ProjPoint& p) const;
  SignedPermutation after(const SignedPermutation& o) const;  // this o o
  bool diagonal() const;
  bool operator==(const SignedPermutation&) const = default;
};

struct QuarticSurface {
  std::string id;
  FieldPtr field;
  std::vector<RatVec> forms;  // two diagonal forms, coefficient vectors
  ProjPoint rational_point;   // may be empty

  static QuarticSurface make(std::string id, FieldPtr f, RatVec a, RatVec b);
  FieldElement eval(int form, const ProjPoint& p) const;
  FieldElement polar(int form, const ProjPoint& p, const ProjPoint& q) const;
  bool contains(const ProjPoint& p) const;
  bool preserved_by(const SignedPermutation& s) const;
};

struct LineOnSurface {
  ProjPoint p, q;
  std::vector<int> signs;
};

struct LineReport {
  bool ok = true;
  std::vector<std::string> errors;
  std::vector<std::vector<int>> incidence;
  bool five_regular = false;
  Json to_json() const;
};
LineReport verify_lines(const QuarticSurface& s, const std::vector<LineOnSurface>& lines);

// The sixteen (-1)-classes of the degree-4 lattice, ascending.
const std::vector<DivisorClass>& dp4_line_classes();

struct Labeling {
  std::vector<int> class_of_line;  // index into dp4_line_classes()
  size_t count = 0;                // number of labelings of the graph
  std::string name(int line) const;
  Json to_json() const;
};
std::vector<std::vector<int>> all_labelings(const std::vector<std::vector<int>>& incidence);
// Lexicographically least labeling; throws when the graph is not the degree-4 line graph.
Labeling label_lines(const std::vector<std::vector<int>>& incidence);

std::vector<int> line_permutation(const std::vector<LineOnSurface>& lines, const SignedPermutation& s);
std::vector<int> line_permutation_galois(const std::vector<LineOnSurface>& lines, unsigned mask);
// Lattice matrix of a line permutation; must lie in W(D5).
IntMat lattice_action(const std::vector<int>& class_of_line, const std::vector<int>& line_perm);

struct LineAction {
  std::vector<int> permutation;
  IntMat matrix;
};
LineAction action_on_lines(const QuarticSurface& s, const std::vector<LineOnSurface>& lines, const Labeling& lab,
                           const SignedPermutation& map);
LineAction action_on_lines(const std::vector<LineOnSurface>& lines, const Labeling& lab, unsigned galois_mask);

// Least labeling under which every coordinate sign flip i_S acts as iota(S).
Labeling calibrated_labeling(const QuarticSurface& s, const std::vector<LineOnSurface>& lines,
                             const std::vector<std::vector<int>>& incidence);

// Isolated fixed points of a diagonal involution; throws "curve_of_fixed_points" for a hyperplane section.
std::vector<ProjPoint> fixed_points(const QuarticSurface& s, const SignedPermutation& involution);

struct CheckLine {
  std::string name;
  bool assertion = true;
  Json expected, computed;
  bool ok = true;
};

struct CremonaReport {
  std::vector<CheckLine> checks;
  bool ok() const;
  Json to_json() const;
};
CremonaReport verify_cremona_order5();

struct SurfaceFixture {
  QuarticSurface surface;
  std::vector<LineOnSurface> lines;
};
SurfaceFixture load_surface(const std::string& id);

struct ExampleReport {
  std::string id;
  std::vector<CheckLine> checks;
  std::string classification;
  Json to_json() const;
  bool ok() const;
};
const std::vector<std::string>& example_ids();
ExampleReport verify_example(const std::string& id);

}  // namespace dpq
