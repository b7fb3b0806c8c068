#pragma once

#include "dpq/weyl.hpp"

#include <compare>
#include <string>
#include <vector>

namespace dpq {

// 1/m(1,q) with 1 <= q < m and gcd(m,q) = 1.
struct SingularityType {
  int m = 2;
  int q = 1;

  // Reduces q mod m and divides out gcd(m,q); each adjustment appends a warning.
  static SingularityType make(long long m, long long q, std::vector<std::string>* warnings = nullptr);
  static SingularityType A(int n) { return {n + 1, n}; }
  // Same singularity with q replaced by min(q, q^-1 mod m).
  SingularityType canonical() const;
  bool du_val() const { return q == m - 1; }
  std::string name() const;  // "A2", "1/5(1,2)"
  auto operator<=>(const SingularityType&) const = default;
};
std::vector<SingularityType> canonical_sorted(std::vector<SingularityType> v);

struct ResolutionData {
  SingularityType type;
  std::vector<int> chain;  // a_i >= 2, exceptional curves have self-intersection -a_i
  Rational delta_K2, delta_C2, delta_D2;
  std::vector<std::string> warnings;
  Json to_json() const;
};
ResolutionData hj_resolve(const SingularityType& s);
ResolutionData hj_resolve(long long m, long long q);
// Rows of the m <= 5 table in its printed order.
std::vector<ResolutionData> table1();

struct BranchCurve {
  DivisorClass cls;
  int ram_index = 2;
  int multiplicity = 1;
};
struct RamificationDatum {
  PicardLattice lattice;
  std::vector<BranchCurve> curves;
  std::vector<SingularityType> isolated;
  long long group_order = 1;
};
// (K - sum (r-1) mult R)^2 / |N|
Rational hurwitz_k2(const RamificationDatum& d);
// Same, with the upstairs K^2 given explicitly; must agree with the lattice when curves are present.
Rational hurwitz_k2(const Rational& k2_upstairs, const RamificationDatum& d);
Rational resolve_all(const Rational& k2, const std::vector<SingularityType>& sings);

struct CurveConfiguration {
  Rational K2;
  std::vector<std::string> labels;
  RatMat pairing;  // diagonal holds self-intersections

  int index(const std::string& label) const;  // throws on unknown label
  void add_curve(const std::string& label, const Rational& self_int);
  void set(const std::string& a, const std::string& b, const Rational& v);
  const Rational& get(const std::string& a, const std::string& b) const;
  Json to_json() const;
};
CurveConfiguration contract_sequence(const CurveConfiguration& cfg, const std::vector<std::string>& labels);

// A curve through a singular point, attached to one chain component (0-based, -1 = last).
struct PointBranch {
  std::string curve;
  int component = 0;
  int count = 1;
};
struct SingularPoint {
  std::string name;
  SingularityType type;
  std::vector<PointBranch> branches;
};
// Minimal resolution of every point: proper transforms keep their labels, exceptional
// components are added as "<point>.E<k>".
CurveConfiguration resolve_configuration(const CurveConfiguration& singular, const std::vector<SingularPoint>& points);

// f(C).f(D) on X/N from the orbit sums upstairs; `image` is the action of N on the lattice,
// stabilizer orders are those of the curves inside N.
Rational image_intersection(const ActionGroup& image, long long group_order, const DivisorClass& c, long long stab_c,
                            const DivisorClass& d, long long stab_d);

enum class Pairing { Diagonal, Twisted };
// Singularities of (P1 x P1)/A when A acts on both rulings through the given polyhedral model.
std::vector<SingularityType> p1xp1_quotient_singularities(const std::string& group, Pairing pairing);

std::vector<DivisorClass> dp4c3_invariant_zero_curves(int rhs = 2, int a_max = 10);

struct ReplayStep {
  std::string op;
  bool assertion = true;  // false: recorded annotation, never fails the report
  Json inputs;
  Json expected;
  Json computed;
  bool ok = true;
};
struct LemmaReport {
  std::string lemma_id;
  std::vector<ReplayStep> steps;
  Json K2_resolved;
  std::string descriptor;
  bool ok() const;
  Json to_json() const;
};
const std::vector<std::string>& replay_ids();
LemmaReport replay(const std::string& lemma_id);

}  // namespace dpq
