#include "dpq/mmp.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>

namespace dpq {

EquivariantSurface::EquivariantSurface(PicardLattice lat, ActionGroup h, ActionGroup g, bool point)
    : lattice(std::move(lat)),
      group(std::move(h)),
      g_subgroup(std::move(g)),
      has_rational_point(point),
      curves(enumerate_minus_one_curves(lattice)),
      original(lattice),
      to_original(identity(lattice.rank())) {
  if (!group.contains(g_subgroup)) throw Error("bad_surface", "G is not contained in H");
}

EquivariantSurface EquivariantSurface::from_words(int degree, const std::vector<std::string>& g_words,
                                                  const std::vector<std::string>& galois_words, bool has_point,
                                                  bool quadric) {
  const ActionGroup& w = weyl_group(degree, quadric);
  ActionGroup g = subgroup_from_words(w, g_words);
  std::vector<std::string> all = g_words;
  all.insert(all.end(), galois_words.begin(), galois_words.end());
  ActionGroup h = subgroup_from_words(w, all);
  return EquivariantSurface(w.lattice(), std::move(h), std::move(g), has_point);
}

std::string EquivariantSurface::label(const DivisorClass& c) const { return curve_label(original, in_original(c)); }

namespace {

std::vector<DivisorClass> sorted_original(const EquivariantSurface& s, const Orbit& o) {
  std::vector<DivisorClass> v;
  for (const auto& c : o.curves) v.push_back(s.in_original(c));
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

Minimality is_minimal(const EquivariantSurface& s) {
  Minimality m;
  for (auto& o : orbits_on_curves(s.group, s.curves))
    if (o.pairwise_disjoint) m.contractible.push_back(std::move(o));
  m.minimal = m.contractible.empty();
  for (const auto& o : m.contractible) {
    if (!m.witness || o.curves.size() < m.witness->curves.size() ||
        (o.curves.size() == m.witness->curves.size() && sorted_original(s, o) < sorted_original(s, *m.witness)))
      m.witness = o;
  }
  return m;
}

EquivariantSurface contract_orbit(const EquivariantSurface& s, const std::vector<DivisorClass>& orbit) {
  Blowdown bd = blowdown(s.lattice, orbit);
  auto transport = [&](const ActionGroup& g) {
    std::vector<IntMat> gens;
    for (const auto& m : g.generators()) gens.push_back(mul(bd.pushforward, mul(m, bd.basis)));
    return ActionGroup(bd.lattice, std::move(gens), g.generator_words());
  };
  EquivariantSurface out(bd.lattice, transport(s.group), transport(s.g_subgroup), s.has_rational_point);
  out.original = s.original;
  out.to_original = mul(s.to_original, bd.basis);
  // surviving curves are the images of those missing every contracted one
  out.curves.clear();
  for (const auto& c : s.curves) {
    bool disjoint = true;
    for (const auto& e : orbit)
      if (intersect(s.lattice, c, e) != 0) disjoint = false;
    if (disjoint) out.curves.push_back(bd.push(c));
  }
  std::sort(out.curves.begin(), out.curves.end());
  return out;
}

ReductionTrace mmp_reduce(const EquivariantSurface& s) {
  ReductionTrace t{{}, s};
  while (true) {
    Minimality m = is_minimal(t.final_surface);
    if (m.minimal) break;
    ReductionStep step;
    for (const auto& c : m.witness->curves) step.contracted.push_back(t.final_surface.label(c));
    step.k2_before = t.final_surface.lattice.degree();
    t.final_surface = contract_orbit(t.final_surface, m.witness->curves);
    step.k2_after = t.final_surface.lattice.degree();
    step.rank_after = t.final_surface.lattice.rank();
    t.steps.push_back(std::move(step));
  }
  return t;
}

Json ReductionTrace::to_json() const {
  Json j;
  Json st = Json::array();
  for (const auto& s : steps)
    st.push_back(Json{{"contracted", s.contracted}, {"K2_before", s.k2_before}, {"K2_after", s.k2_after},
                      {"rank_after", s.rank_after}});
  j["steps"] = st;
  j["final_K2"] = final_surface.lattice.degree();
  j["final_surface"] = final_surface.lattice.surface_type();
  j["final_rho"] = final_surface.rho_h();
  return j;
}

CriteriaFlags rationality_criteria(bool minimal, long long k2, int rho, bool has_point) {
  CriteriaFlags f;
  f.minimal = minimal;
  f.k2 = k2;
  f.rho = rho;
  f.has_point = has_point;
  f.iskovskikh_rational = minimal && k2 >= 5 && has_point;
  f.toric_form = minimal && k2 >= 6;
  f.piccrit_rational = rho + k2 >= 7 && has_point;
  return f;
}

CriteriaFlags rationality_criteria(const EquivariantSurface& s) {
  return rationality_criteria(is_minimal(s).minimal, s.lattice.degree(), s.rho_h(), s.has_rational_point);
}

Json CriteriaFlags::to_json() const {
  return Json{{"minimal", minimal},
              {"K2", k2},
              {"rho", rho},
              {"has_point", has_point},
              {"iskovskikh_rational", iskovskikh_rational},
              {"toric_form", toric_form},
              {"piccrit_rational", piccrit_rational}};
}

std::string to_string(VerdictKind v) {
  switch (v) {
    case VerdictKind::Rational: return "Rational";
    case VerdictKind::ExceptionalCase: return "ExceptionalCase";
    case VerdictKind::OutOfScope: return "OutOfScope";
  }
  return "?";
}

Json Verdict::to_json() const {
  Json j;
  j["verdict"] = to_string(kind);
  j["trace"] = trace;
  j["flags"] = flags;
  if (kind == VerdictKind::ExceptionalCase) j["exceptional_tag"] = exceptional_tag;
  return j;
}

namespace {

struct Dp4Classes {
  GroupTable table;
  std::vector<std::pair<std::string, std::vector<int>>> exceptional;  // tag, canonical conjugate

  Dp4Classes() : table(weyl_group(4)) {
    const ActionGroup& w = weyl_group(4);
    const std::vector<std::pair<std::string, std::vector<std::string>>> reps{
        {"trivial", {}}, {"C2", {"i12"}}, {"V4", {"i12", "i13"}}, {"C4", {"(12)(34)i15"}}};
    for (const auto& [tag, words] : reps) {
      std::vector<int> gens;
      for (const auto& wd : words) gens.push_back(table.index(parse_word(w.lattice(), wd)));
      exceptional.emplace_back(tag, table.canonical_conjugate(table.closure(gens)));
    }
  }
};

Dp4Classes& dp4_classes() {
  static Dp4Classes c;
  return c;
}
std::mutex dp4_mu;  // the table fills lazily

std::string tag_of_canonical(const Dp4Classes& c, const std::vector<int>& canon) {
  for (const auto& [tag, rep] : c.exceptional)
    if (rep == canon) return tag;
  return "";
}

}  // namespace

std::string dp4_exceptional_tag(const ActionGroup& g) {
  std::lock_guard<std::mutex> lock(dp4_mu);
  Dp4Classes& c = dp4_classes();
  if (g.order() > 4) return "";
  std::vector<int> idx;
  for (const auto& m : g.elements()) idx.push_back(c.table.index(m));
  return tag_of_canonical(c, c.table.canonical_conjugate(idx));
}

Verdict main_verdict(const EquivariantSurface& s) {
  const long long d = s.lattice.degree();
  if (d < 4 || d > 9) throw Error("bad_degree", "verdicts cover degrees 4..9, got " + std::to_string(d));
  Verdict v;
  ReductionTrace red = mmp_reduce(s);
  for (const auto& st : red.steps) {
    std::string line = "contract {";
    for (size_t i = 0; i < st.contracted.size(); ++i) line += (i ? "," : "") + st.contracted[i];
    v.trace.push_back(line + "}: K2 " + std::to_string(st.k2_before) + " -> " + std::to_string(st.k2_after));
  }
  CriteriaFlags f = rationality_criteria(red.final_surface);
  v.flags = f.to_json();
  v.flags["rho_G"] = s.rho_g();
  v.flags["rho_H"] = s.rho_h();
  v.flags["degree"] = d;
  if (!s.has_rational_point) {
    v.kind = VerdictKind::OutOfScope;
    v.trace.push_back("no k-point given: the rationality statement assumes one");
    return v;
  }
  if (d >= 5) {
    v.kind = VerdictKind::Rational;
    v.trace.push_back("K2 = " + std::to_string(d) + " >= 5 with a k-point: quotient is k-rational");
    return v;
  }
  const ActionGroup& w = weyl_group(4);
  if (!s.lattice.same_form(w.lattice())) throw Error("bad_surface", "degree-4 verdict needs the standard lattice");
  if (!dp4_realizable(s.g_subgroup, w)) {
    v.kind = VerdictKind::OutOfScope;
    v.trace.push_back("G cannot act on a degree-4 del Pezzo surface: its S5 image contains a transposition or a "
                      "double-transposition V4");
    return v;
  }
  const std::string tag = dp4_exceptional_tag(s.g_subgroup);
  if (!tag.empty()) {
    v.kind = VerdictKind::ExceptionalCase;
    v.exceptional_tag = tag;
    v.trace.push_back("G is conjugate in W(D5) to the " + tag + " class: rationality depends on the surface");
    return v;
  }
  v.kind = VerdictKind::Rational;
  v.trace.push_back("degree 4, G of order " + std::to_string(s.g_subgroup.order()) +
                    " outside the four exceptional classes: quotient is k-rational");
  return v;
}

SweepReport dp4_verdict_sweep() {
  const ActionGroup& w = weyl_group(4);
  SweepReport rep;
  std::map<std::vector<int>, std::vector<IntMat>> classes;  // canonical conjugate -> elements of a representative
  {
    std::lock_guard<std::mutex> lock(dp4_mu);
    const GroupTable& t = dp4_classes().table;
    std::set<std::vector<int>> subs;
    std::vector<int> involutions;
    for (int a = 0; a < t.size(); ++a) {
      const int o = t.element_order(a);
      if (o <= 4) subs.insert(t.closure({a}));
      if (o == 2) involutions.push_back(a);
    }
    for (size_t i = 0; i < involutions.size(); ++i)
      for (size_t j = i + 1; j < involutions.size(); ++j) {
        const int a = involutions[i], b = involutions[j];
        if (t.mul(a, b) == t.mul(b, a)) subs.insert(t.closure({a, b}));
      }
    rep.subgroups = subs.size();
    for (const auto& h : subs) {
      auto canon = t.canonical_conjugate(h);
      if (classes.count(canon)) continue;
      std::vector<IntMat> el;
      for (int x : h) el.push_back(t.element(x));
      classes.emplace(std::move(canon), std::move(el));
    }
  }
  rep.classes = classes.size();
  for (const auto& [canon, elems] : classes) {
    ActionGroup g(w.lattice(), elems);
    const bool ok = dp4_realizable(g, w);
    Json row;
    row["order"] = elems.size();
    Json img = Json::array();
    for (const auto& p : s5_image(g, w)) img.push_back(perm5_string(p));
    row["s5_image"] = img;
    row["realizable"] = ok;
    if (ok) {
      ++rep.realizable_classes;
      Verdict v = main_verdict(EquivariantSurface(w.lattice(), g, g, true));
      row["verdict"] = to_string(v.kind);
      if (v.kind == VerdictKind::ExceptionalCase) {
        row["exceptional_tag"] = v.exceptional_tag;
        rep.flagged.push_back(v.exceptional_tag);
      }
    }
    rep.rows.push_back(row);
  }
  std::sort(rep.flagged.begin(), rep.flagged.end());
  return rep;
}

SweepReport dp5_verdict_sweep() {
  const ActionGroup& w = weyl_group(5);
  const GroupTable t(w);
  std::set<std::vector<int>> subs;
  for (int a = 0; a < t.size(); ++a)
    for (int b = a; b < t.size(); ++b) subs.insert(t.closure({a, b}));
  SweepReport rep;
  rep.subgroups = subs.size();
  std::set<std::vector<int>> seen;
  for (const auto& h : subs) {
    std::vector<IntMat> el;
    for (int x : h) el.push_back(t.element(x));
    ActionGroup g(w.lattice(), el);
    const Verdict v = main_verdict(EquivariantSurface(w.lattice(), g, g, true));
    if (v.kind != VerdictKind::Rational) rep.flagged.push_back(to_string(v.kind));
    if (!seen.insert(t.canonical_conjugate(h)).second) continue;
    ++rep.realizable_classes;
    rep.rows.push_back(Json{{"order", h.size()}, {"verdict", to_string(v.kind)}});
  }
  rep.classes = seen.size();
  return rep;
}

Json SweepReport::to_json() const {
  return Json{{"subgroups", subgroups},
              {"conjugacy_classes", classes},
              {"realizable_classes", realizable_classes},
              {"flagged", flagged},
              {"rows", rows}};
}

}  // namespace dpq
