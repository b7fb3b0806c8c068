// One line per acceptance criterion. `--expect-fail 10,...` exits 0 iff exactly those criteria fail.
#include "dpq/exactgeo.hpp"
#include "dpq/mmp.hpp"
#include "dpq/quotient.hpp"

#include <algorithm>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

using namespace dpq;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

Outcome weyl_orders() {
  const size_t a = generate_weyl(PicardLattice::del_pezzo(4)).order(), b = generate_weyl(PicardLattice::del_pezzo(5)).order();
  return {a == 1920 && b == 120, "orders " + std::to_string(a) + ", " + std::to_string(b)};
}

Outcome line_counts() {
  std::ostringstream s;
  bool ok = true;
  const std::vector<std::pair<int, size_t>> want{{4, 16}, {5, 10}, {6, 6}, {7, 3}};
  for (const auto& [d, n] : want) {
    const size_t got = enumerate_minus_one_curves(PicardLattice::del_pezzo(d)).size();
    ok = ok && got == n;
    s << got << (d == 7 ? "" : "/");
  }
  const PicardLattice lat = PicardLattice::del_pezzo(4);
  const auto c = enumerate_minus_one_curves(lat);
  bool regular = true;
  for (const auto& x : c) {
    int meets = 0;
    for (const auto& y : c) meets += intersect(lat, x, y) == 1;
    regular = regular && meets == 5;
  }
  s << (regular ? ", 5-regular" : ", not 5-regular");
  return {ok && regular, s.str()};
}

Outcome table_rows() {
  struct Row {
    int m, q;
    std::vector<int> chain;
    Rational k, c, d;
  };
  // as printed
  const std::vector<Row> want{{2, 1, {2}, 0, Rational(-1, 2), Rational(-1, 2)},
                              {3, 1, {3}, Rational(-1, 3), Rational(-1, 3), Rational(-1, 3)},
                              {3, 2, {2, 2}, 0, Rational(-2, 3), Rational(-2, 3)},
                              {4, 1, {4}, -1, Rational(-1, 4), Rational(-1, 4)},
                              {4, 3, {2, 2, 2}, 0, Rational(-3, 4), Rational(-3, 4)},
                              {5, 1, {5}, Rational(-9, 5), Rational(-1, 5), Rational(-1, 5)},
                              {5, 2, {3, 2}, Rational(-2, 5), Rational(-2, 5), Rational(-3, 5)},
                              {5, 3, {2, 3}, Rational(-2, 5), Rational(-3, 5), Rational(-2, 5)},
                              {5, 4, {2, 2, 2, 2}, 0, Rational(-4, 5), Rational(-4, 5)}};
  const auto got = table1();
  int match = 0;
  for (size_t i = 0; i < want.size() && i < got.size(); ++i) {
    const Row& w = want[i];
    const ResolutionData& g = got[i];
    match += g.type.m == w.m && g.type.q == w.q && g.chain == w.chain && g.delta_K2 == w.k && g.delta_C2 == w.c &&
             g.delta_D2 == w.d;
  }
  return {match == 9 && got.size() == 9, std::to_string(match) + "/9 rows"};
}

Outcome hurwitz_values() {
  const PicardLattice l4 = PicardLattice::del_pezzo(4);
  DivisorClass r = named_class(l4, "L");
  r[5] -= 1;
  const Rational a = hurwitz_k2(RamificationDatum{l4, {{r, 2, 1}}, {}, 2});
  const PicardLattice l5 = PicardLattice::del_pezzo(5);
  DivisorClass m9(l5.rank());
  for (int i = 0; i < l5.rank(); ++i) m9[i] = -9 * l5.canonical[i];
  const Rational b = hurwitz_k2(RamificationDatum{l5, {{m9, 2, 1}}, {}, 60});
  const Rational c = hurwitz_k2(RamificationDatum{PicardLattice::quadric(), {}, {}, 60});
  std::vector<Json> i1234;
  bool ok = a == 4 && b == Rational(25, 3) && c == Rational(2, 15);
  const std::vector<int> want{8, 9, 8, 9};
  for (int k = 1; k <= 4; ++k) {
    const LemmaReport rep = replay("dp4-i1234-" + std::to_string(k));
    i1234.push_back(rep.K2_resolved);
    ok = ok && rep.ok() && rep.K2_resolved == Json(want[k - 1]);
  }
  return {ok, to_string(a) + ", " + to_string(b) + ", " + to_string(c) + ", " + Json(i1234).dump()};
}

Outcome resolution_chains() {
  const auto A = [](int n) { return SingularityType::A(n); };
  const SingularityType t31 = SingularityType::make(3, 1), t51 = SingularityType::make(5, 1),
                        t52 = SingularityType::make(5, 2);
  const Rational d = resolve_all(Rational(2, 15), {A(1), A(1), A(2), t31, A(4), t51});
  const Rational t = resolve_all(Rational(2, 15), {A(1), A(1), A(2), t31, t52, t52});
  const LemmaReport rd = replay("dp8-a5-diag"), rt = replay("dp8-a5-twisted");
  const bool ok = d == -2 && t == -1 && rd.ok() && rt.ok() && rd.K2_resolved == Json(2) && rt.K2_resolved == Json(3);
  return {ok, "chains " + to_string(d) + ", " + to_string(t) + "; contracted K2 " + rd.K2_resolved.dump() + ", " +
                  rt.K2_resolved.dump()};
}

Outcome diophantine() {
  std::vector<DivisorClass> want{{2, -1, -1, -1, -1, 0}, {2, -1, -1, -1, 0, -1}, {1, 0, 0, 0, 0, -1}, {1, 0, 0, 0, -1, 0}};
  std::sort(want.begin(), want.end());
  auto got = dp4c3_invariant_zero_curves();
  std::sort(got.begin(), got.end());
  return {got == want, std::to_string(got.size()) + " classes"};
}

Outcome s5_lemma() {
  const S5LemmaReport r = verify_s5_normal_subgroup_lemma();
  return {r.ok && r.subgroups == 156,
          std::to_string(r.subgroups) + " subgroups, " + std::to_string(r.counterexamples.size()) + " without witness"};
}

Outcome explicit_surfaces() {
  int ok = 0, checks = 0;
  std::string bad;
  for (const auto& id : example_ids()) {
    const ExampleReport r = verify_example(id);
    for (const auto& c : r.checks) checks += c.assertion;
    if (r.ok()) ++ok;
    else bad += " " + id;
  }
  const int n = static_cast<int>(example_ids().size());
  return {ok == n, std::to_string(ok) + "/" + std::to_string(n) + " examples, " + std::to_string(checks) + " assertions" +
                       (bad.empty() ? "" : "; failing:" + bad)};
}

Outcome sweep() {
  const SweepReport d4 = dp4_verdict_sweep();
  const SweepReport d5 = dp5_verdict_sweep();
  const bool ok = d4.flagged == std::vector<std::string>{"C2", "C4", "V4", "trivial"} && d5.flagged.empty() &&
                  d5.subgroups == 156;
  return {ok, "degree 4 flagged " + Json(d4.flagged).dump() + " of " + std::to_string(d4.realizable_classes) +
                  " realizable classes; degree 5: " + std::to_string(d5.subgroups - d5.flagged.size()) + "/" +
                  std::to_string(d5.subgroups) + " Rational"};
}

Outcome cremona() {
  const CremonaReport r = verify_cremona_order5();
  std::string failed;
  for (const auto& c : r.checks)
    if (c.assertion && !c.ok) failed += "; " + c.name + ": computed " + c.computed.dump();
  return {r.ok(), failed.empty() ? "all checks hold" : failed.substr(2)};
}

Outcome properties() {
  std::mt19937_64 g(20241016);
  auto uni = [&](long long lo, long long hi) { return std::uniform_int_distribution<long long>(lo, hi)(g); };
  int bad = 0;
  // field axioms
  const std::vector<FieldPtr> fields{make_field({2, 3}), make_field({-1, 2, 3}), make_field({5})};
  for (int n = 0; n < 1000; ++n) {
    const FieldPtr& f = fields[uni(0, 2)];
    auto el = [&] {
      FieldElement x(f);
      for (unsigned m = 0; m < f->degree(); ++m) x = x + FieldElement::basis(f, m, Rational(uni(-9, 9), uni(1, 5)));
      return x;
    };
    const FieldElement a = el(), b = el(), c = el();
    bad += !(a * (b + c) == a * b + a * c) + !((a * b) * c == a * (b * c)) + !(a + b == b + a) + !(a * b == b * a);
    if (!a.is_zero()) bad += !(a * a.inverse() == FieldElement(f, 1));
  }
  // blowdowns
  for (int n = 0; n < 100; ++n) {
    const PicardLattice lat = PicardLattice::del_pezzo(static_cast<int>(uni(1, 8)));
    auto curves = enumerate_minus_one_curves(lat);
    std::shuffle(curves.begin(), curves.end(), g);
    std::vector<DivisorClass> pick;
    for (const auto& c : curves) {
      bool disjoint = true;
      for (const auto& p : pick) disjoint = disjoint && intersect(lat, c, p) == 0;
      if (disjoint && uni(0, 1)) pick.push_back(c);
    }
    if (pick.empty()) continue;
    const Blowdown b = blowdown(lat, pick);
    bad += b.lattice.degree() != lat.degree() + static_cast<long long>(pick.size());
    bad += b.push(lat.canonical) != b.lattice.canonical;
  }
  // reflections
  size_t roots = 0;
  for (int d = 1; d <= 8; ++d) {
    const PicardLattice lat = PicardLattice::del_pezzo(d);
    for (const auto& r : enumerate_roots(lat)) {
      const IntMat m = reflection(lat, r);
      bad += mul(transpose(m), mul(lat.gram, m)) != lat.gram;
      bad += mul(m, lat.canonical) != lat.canonical;
      ++roots;
    }
  }
  return {bad == 0, "1000 field samples, 100 blowdowns, " + std::to_string(roots) + " reflections; " +
                        std::to_string(bad) + " violations"};
}

}  // namespace

int main(int argc, char** argv) {
  std::set<int> expect_fail;
  for (int i = 1; i < argc; ++i) {
    const std::string a = argv[i];
    if (a == "--expect-fail" && i + 1 < argc) {
      std::stringstream ss(argv[++i]);
      for (std::string t; std::getline(ss, t, ',');) expect_fail.insert(std::stoi(t));
    } else {
      std::cerr << "usage: acceptance [--expect-fail N,M,...]\n";
      return 1;
    }
  }
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"Weyl orders", weyl_orders},
      {"line counts and 5-regularity", line_counts},
      {"resolution table", table_rows},
      {"Hurwitz values", hurwitz_values},
      {"resolution chains and contractions", resolution_chains},
      {"invariant zero curves", diophantine},
      {"S5 normal-subgroup lemma", s5_lemma},
      {"explicit surfaces", explicit_surfaces},
      {"verdict sweep", sweep},
      {"Cremona map of order 5", cremona},
      {"property suites", properties},
  };
  std::set<int> failed;
  for (size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("error: ") + e.what()};
    }
    const int n = static_cast<int>(i + 1);
    if (!o.pass) failed.insert(n);
    std::cout << (o.pass ? "PASS" : "FAIL") << " " << n << " " << criteria[i].first << ": " << o.detail << "\n";
  }
  if (failed == expect_fail) return 0;
  std::cout << "unexpected outcome: failing criteria differ from --expect-fail\n";
  return 2;
}
