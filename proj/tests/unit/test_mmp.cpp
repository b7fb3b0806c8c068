#include "dpq/mmp.hpp"

#include <doctest.h>

#include <algorithm>

using namespace dpq;

namespace {
EquivariantSurface surf(int degree, std::vector<std::string> g, bool point = true) {
  return EquivariantSurface::from_words(degree, g, {}, point);
}
}  // namespace

TEST_CASE("minimality") {
  const Minimality m5 = is_minimal(surf(5, {"(12)(34)"}));
  CHECK_FALSE(m5.minimal);
  REQUIRE(m5.witness);
  const EquivariantSurface s5 = surf(5, {"(12)(34)"});
  bool e1e2 = false;
  for (const auto& o : m5.contractible) {
    std::vector<std::string> l;
    for (const auto& c : o.curves) l.push_back(s5.label(c));
    std::sort(l.begin(), l.end());
    e1e2 = e1e2 || l == std::vector<std::string>{"E1", "E2"};
  }
  CHECK(e1e2);

  const ActionGroup& w = weyl_group(4);
  CHECK(is_minimal(EquivariantSurface(w.lattice(), w, w, true)).minimal);
  CHECK_FALSE(is_minimal(surf(5, {})).minimal);
}

TEST_CASE("reduction") {
  const ReductionTrace t = mmp_reduce(surf(4, {"(12345)"}));
  REQUIRE(t.steps.size() == 1);
  CHECK(t.steps[0].contracted == std::vector<std::string>{"Q"});
  CHECK(t.final_surface.lattice.degree() == 5);

  CHECK(mmp_reduce(surf(5, {})).final_surface.lattice.degree() == 9);
  const ActionGroup& w = weyl_group(4);
  CHECK(mmp_reduce(EquivariantSurface(w.lattice(), w, w, true)).steps.empty());
}

TEST_CASE("rationality rules") {
  CHECK_FALSE(rationality_criteria(true, 4, 1, true).iskovskikh_rational);
  CHECK(rationality_criteria(true, 8, 2, true).piccrit_rational);
  const CriteriaFlags p2 = rationality_criteria(true, 9, 1, true);
  CHECK(p2.iskovskikh_rational);
  CHECK(p2.piccrit_rational);
  CHECK_FALSE(rationality_criteria(true, 9, 1, false).iskovskikh_rational);
}

TEST_CASE("main verdict") {
  const Verdict v4 = main_verdict(surf(4, {"i12", "i13"}));
  CHECK(v4.kind == VerdictKind::ExceptionalCase);
  CHECK(v4.exceptional_tag == "V4");
  CHECK(main_verdict(surf(4, {"(123)"})).kind == VerdictKind::Rational);
  CHECK(main_verdict(surf(4, {"(12)(34)i15"})).exceptional_tag == "C4");
  CHECK(main_verdict(surf(4, {"(12)"})).kind == VerdictKind::OutOfScope);
  CHECK(main_verdict(surf(4, {"i12"}, false)).kind == VerdictKind::OutOfScope);
  CHECK(main_verdict(surf(6, {})).kind == VerdictKind::Rational);
  CHECK(main_verdict(surf(4, {})).exceptional_tag == "trivial");
}

TEST_CASE("verdict sweeps") {
  const SweepReport d4 = dp4_verdict_sweep();
  CHECK(d4.subgroups == 1131);
  CHECK(d4.classes == 27);
  CHECK(d4.realizable_classes == 13);
  CHECK(d4.flagged == std::vector<std::string>{"C2", "C4", "V4", "trivial"});
  const SweepReport d5 = dp5_verdict_sweep();
  CHECK(d5.subgroups == 156);
  CHECK(d5.flagged.empty());
}
