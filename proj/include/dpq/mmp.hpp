#pragma once

#include "dpq/weyl.hpp"

#include <optional>
#include <string>
#include <vector>

namespace dpq {

struct EquivariantSurface {
  PicardLattice lattice;
  ActionGroup group;       // H: G together with the Galois image
  ActionGroup g_subgroup;  // G
  bool has_rational_point = false;
  std::vector<DivisorClass> curves;  // current (-1)-curves
  PicardLattice original;            // lattice before any contraction
  IntMat to_original;                // original coordinates of the current basis, as columns

  EquivariantSurface(PicardLattice lat, ActionGroup h, ActionGroup g, bool point);
  // Standard del Pezzo lattice of the degree with G and Galois given as words.
  static EquivariantSurface from_words(int degree, const std::vector<std::string>& g_words,
                                       const std::vector<std::string>& galois_words, bool has_point,
                                       bool quadric = false);

  DivisorClass in_original(const DivisorClass& c) const { return mul(to_original, c); }
  std::string label(const DivisorClass& c) const;
  int rho_h() const { return invariant_rank(group); }
  int rho_g() const { return invariant_rank(g_subgroup); }
};

struct Minimality {
  bool minimal = true;
  std::vector<Orbit> contractible;  // pairwise-disjoint orbits
  std::optional<Orbit> witness;     // smallest, then lexicographically least
};
Minimality is_minimal(const EquivariantSurface& s);

struct ReductionStep {
  std::vector<std::string> contracted;
  long long k2_before = 0, k2_after = 0;
  int rank_after = 0;
};
struct ReductionTrace {
  std::vector<ReductionStep> steps;
  EquivariantSurface final_surface;
  Json to_json() const;
};
ReductionTrace mmp_reduce(const EquivariantSurface& s);
EquivariantSurface contract_orbit(const EquivariantSurface& s, const std::vector<DivisorClass>& orbit);

struct CriteriaFlags {
  bool minimal = false;
  long long k2 = 0;
  int rho = 0;  // invariant rank under H
  bool has_point = false;
  bool iskovskikh_rational = false;
  bool toric_form = false;
  bool piccrit_rational = false;
  Json to_json() const;
};
CriteriaFlags rationality_criteria(const EquivariantSurface& s);
// Rule evaluation from raw numbers, for surfaces that exist only as invariants.
CriteriaFlags rationality_criteria(bool minimal, long long k2, int rho, bool has_point);

enum class VerdictKind { Rational, ExceptionalCase, OutOfScope };
std::string to_string(VerdictKind v);

struct Verdict {
  VerdictKind kind = VerdictKind::Rational;
  std::string exceptional_tag;
  std::vector<std::string> trace;
  Json flags = Json::object();
  Json to_json() const;
};
Verdict main_verdict(const EquivariantSurface& s);

// Degree-4 exceptional class of G ("trivial", "C2", "V4", "C4") or empty.
std::string dp4_exceptional_tag(const ActionGroup& g);

struct SweepReport {
  size_t subgroups = 0;
  size_t classes = 0;
  size_t realizable_classes = 0;
  std::vector<std::string> flagged;  // tags of exceptional realizable classes, one per class
  std::vector<Json> rows;
  Json to_json() const;
};
// All subgroups of W(D5) of order <= 4 up to conjugacy, through the filter and the verdict.
SweepReport dp4_verdict_sweep();
// Every subgroup of W(A4) with a k-point; flagged collects any verdict other than Rational.
SweepReport dp5_verdict_sweep();

}  // namespace dpq
