#include "dpq/exactgeo.hpp"
#include "dpq/mmp.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <set>

namespace dpq {

namespace {

const Json& examples_data() {
  static const Json j = load_json("examples.json");
  return j;
}

const Json& example_entry(const std::string& id) {
  for (const auto& e : examples_data().at("examples"))
    if (e.at("id") == id) return e;
  throw Error("unknown_example", "no example " + id, Json{{"available", example_ids()}});
}

// Element of G x Gal acting on points: x -> s(conj_mask(x)).
struct PointMap {
  SignedPermutation s;
  unsigned mask = 0;
  bool operator==(const PointMap&) const = default;
  ProjPoint apply(const ProjPoint& p) const {
    ProjPoint q;
    for (const auto& x : p) q.push_back(x.conjugate(mask));
    return s.apply(q);
  }
  PointMap after(const PointMap& o) const { return {s.after(o.s), mask ^ o.mask}; }
  // Image of the hyperplane sum l_j x_j = 0.
  std::vector<FieldElement> map_form(const std::vector<FieldElement>& l) const {
    std::vector<FieldElement> n;
    for (size_t k = 0; k < l.size(); ++k) n.push_back(l[s.perm[k]].conjugate(mask) * Rational(s.sign[k]));
    return n;
  }
};

std::vector<PointMap> close(const std::vector<PointMap>& gens) {
  std::vector<PointMap> out{{SignedPermutation::identity(5), 0}};
  for (size_t i = 0; i < out.size(); ++i)
    for (const auto& g : gens) {
      PointMap h = g.after(out[i]);
      if (std::find(out.begin(), out.end(), h) == out.end()) out.push_back(h);
      if (out.size() > 4096) throw Error("internal", "point group too large");
    }
  return out;
}

bool same_point_set(const std::vector<ProjPoint>& a, const std::vector<ProjPoint>& b) {
  if (a.size() != b.size()) return false;
  for (const auto& p : a)
    if (std::none_of(b.begin(), b.end(), [&](const ProjPoint& q) { return same_point(p, q); })) return false;
  return true;
}

bool transitive(const std::vector<PointMap>& grp, const std::vector<ProjPoint>& pts) {
  if (pts.empty()) return false;
  for (const auto& p : pts)
    if (std::none_of(grp.begin(), grp.end(), [&](const PointMap& g) { return same_point(g.apply(pts[0]), p); }))
      return false;
  return true;
}

bool proportional(const std::vector<FieldElement>& a, const std::vector<FieldElement>& b) {
  return field_rank({a, b}) <= 1;
}

Json points_json(const std::vector<ProjPoint>& pts) {
  std::vector<std::string> s;
  for (const auto& p : pts) s.push_back(point_string(p));
  std::sort(s.begin(), s.end());
  return s;
}

struct LabeledSurface {
  SurfaceFixture fx;
  LineReport lines;
  std::optional<Labeling> lab;
};

// Labeling enumerates all 1920 candidates, so each surface is done once.
const LabeledSurface& labeled_surface(const std::string& id) {
  static std::mutex mu;
  static std::map<std::string, std::shared_ptr<LabeledSurface>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[id];
  if (!slot) {
    auto ls = std::make_shared<LabeledSurface>();
    ls->fx = load_surface(id);
    ls->lines = verify_lines(ls->fx.surface, ls->fx.lines);
    if (ls->lines.ok) ls->lab = calibrated_labeling(ls->fx.surface, ls->fx.lines, ls->lines.incidence);
    slot = ls;
  }
  return *slot;
}

bool same_group(const ActionGroup& a, const ActionGroup& b) { return a.order() == b.order() && a.contains(b); }

bool stable_set(const ActionGroup& g, const std::vector<DivisorClass>& set) {
  std::set<DivisorClass> s(set.begin(), set.end());
  for (const auto& m : g.elements())
    for (const auto& c : set)
      if (!s.count(mul(m, c))) return false;
  return true;
}

// A union of orbits of the given total size whose curves are pairwise disjoint.
bool stable_disjoint_set_exists(const ActionGroup& g, size_t size) {
  const PicardLattice& lat = g.lattice();
  std::vector<Orbit> orbits;
  for (auto& o : orbits_on_curves(g, enumerate_minus_one_curves(lat)))
    if (o.pairwise_disjoint && o.curves.size() <= size) orbits.push_back(std::move(o));
  std::vector<DivisorClass> chosen;
  std::function<bool(size_t)> rec = [&](size_t from) {
    if (chosen.size() == size) return true;
    for (size_t i = from; i < orbits.size(); ++i) {
      if (chosen.size() + orbits[i].curves.size() > size) continue;
      bool ok = true;
      for (const auto& a : orbits[i].curves)
        for (const auto& b : chosen) ok = ok && intersect(lat, a, b) == 0;
      if (!ok) continue;
      const size_t before = chosen.size();
      chosen.insert(chosen.end(), orbits[i].curves.begin(), orbits[i].curves.end());
      if (rec(i + 1)) return true;
      chosen.resize(before);
    }
    return false;
  };
  return rec(0);
}

}  // namespace

bool ExampleReport::ok() const {
  for (const auto& c : checks)
    if (c.assertion && !c.ok) return false;
  return true;
}

Json ExampleReport::to_json() const {
  Json arr = Json::array();
  for (const auto& c : checks) {
    Json e{{"name", c.name}, {"expected", c.expected}, {"computed", c.computed}, {"ok", c.ok}};
    if (!c.assertion) e["annotation"] = true;
    arr.push_back(e);
  }
  return Json{{"id", id}, {"checks", arr}, {"classification", classification}, {"ok", ok()}};
}

const std::vector<std::string>& example_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> v;
    for (const auto& e : examples_data().at("examples")) v.push_back(e.at("id").get<std::string>());
    return v;
  }();
  return ids;
}

ExampleReport verify_example(const std::string& id) {
  const Json& ex = example_entry(id);
  ExampleReport r;
  r.id = id;
  auto check = [&](std::string name, Json expected, Json computed, bool assertion = true) {
    const bool ok = expected == computed;
    r.checks.push_back({std::move(name), assertion, std::move(expected), std::move(computed), ok});
  };
  auto note = [&](std::string name, Json computed) {
    r.checks.push_back({std::move(name), false, nullptr, std::move(computed), true});
  };

  try {
    const LabeledSurface& ls = labeled_surface(ex.at("surface").get<std::string>());
    const SurfaceFixture& fx = ls.fx;
    const QuarticSurface& s = fx.surface;
    const FieldPtr& f = s.field;

    const LineReport& lines = ls.lines;
    check("16 lines on the surface, 5-regular incidence", Json{{"ok", true}, {"five_regular", true}},
          Json{{"ok", lines.ok}, {"five_regular", lines.five_regular}});
    if (!lines.ok) {
      r.classification = "unverified";
      return r;
    }
    const Labeling& lab = *ls.lab;
    check("labelings of the line graph", 1920, lab.count);

    const ActionGroup& w = weyl_group(4);
    const PicardLattice& lat = w.lattice();

    // G
    std::vector<SignedPermutation> g_maps;
    for (const auto& word : ex.at("group")) {
      const std::string ws = word.get<std::string>();
      g_maps.push_back(ws == "g" ? SignedPermutation::from_json(examples_data().at("c4_generator"))
                                 : SignedPermutation::flip(ws));
    }
    std::vector<IntMat> g_mats;
    for (const auto& m : g_maps) g_mats.push_back(action_on_lines(s, fx.lines, lab, m).matrix);

    // Galois
    std::vector<unsigned> masks;
    for (const auto& gen : ex.at("galois")) masks.push_back(f->mask_of(gen.get<std::vector<long long>>()));
    std::vector<IntMat> gal_mats;
    for (unsigned m : masks) gal_mats.push_back(action_on_lines(fx.lines, lab, m).matrix);
    const ActionGroup gal = subgroup_from_matrices(w, gal_mats);
    if (ex.contains("galois_image")) {
      const ActionGroup want = subgroup_from_words(w, ex["galois_image"].get<std::vector<std::string>>());
      check("Galois image on the lattice", ex["galois_image"],
            same_group(gal, want) ? ex["galois_image"] : Json{{"order", gal.order()}, {"generators", gal_mats.size()}});
    }
    std::vector<IntMat> all_mats = g_mats;
    all_mats.insert(all_mats.end(), gal_mats.begin(), gal_mats.end());
    const ActionGroup h = subgroup_from_matrices(w, all_mats);

    if (ex.contains("rho_X")) check("rho(X) over k", ex["rho_X"], invariant_rank(gal));
    else if (!masks.empty()) note("rho(X) over k", invariant_rank(gal));
    const int rho_h = invariant_rank(h);
    if (ex.contains("rho_XG")) check("rho(X)^G over k", ex["rho_XG"], rho_h);

    // k-point
    if (!s.rational_point.empty()) {
      bool fixed = s.contains(s.rational_point);
      for (unsigned m : masks) {
        ProjPoint q;
        for (const auto& x : s.rational_point) q.push_back(x.conjugate(m));
        fixed = fixed && same_point(q, s.rational_point);
      }
      check("k-point " + point_string(s.rational_point), true, fixed);
    }

    // fixed points
    const Json& fixed_data = examples_data().at("fixed_points").at(s.id);
    auto expected_points = [&](const std::string& word) {
      std::vector<ProjPoint> pts;
      for (const auto& p : fixed_data.at(word)) {
        ProjPoint q;
        for (const auto& x : p) q.push_back(parse_element(f, x.get<std::string>()));
        pts.push_back(q);
      }
      return pts;
    };
    if (ex.contains("check_fixed"))
      for (const auto& word : ex["check_fixed"]) {
        const std::string ws = word.get<std::string>();
        const auto got = fixed_points(s, SignedPermutation::flip(ws));
        const auto want = expected_points(ws);
        check("fixed points of " + ws, points_json(want), same_point_set(got, want) ? points_json(want) : points_json(got));
      }

    std::vector<PointMap> gens;
    for (const auto& m : g_maps) gens.push_back({m, 0});
    for (unsigned m : masks) gens.push_back({SignedPermutation::identity(5), m});
    const std::vector<PointMap> grp = close(gens);

    const std::string kind = ex.at("kind").get<std::string>();
    bool hyp = rho_h == 1;
    if (kind == "C2" || kind == "V4") {
      std::vector<std::string> words = kind == "C2" ? std::vector<std::string>{"i12"} : std::vector<std::string>{};
      if (kind == "V4") {
        // the three involutions of G
        const std::string a = ex["group"][0], b = ex["group"][1];
        const SignedPermutation ab = SignedPermutation::flip(a).after(SignedPermutation::flip(b));
        std::string c = "i";
        for (int k = 0; k < 5; ++k)
          if (ab.sign[k] == -1) c += std::to_string(k + 1);
        words = {a, b, c};
      }
      for (const auto& wd : words) {
        const bool t = transitive(grp, fixed_points(s, SignedPermutation::flip(wd)));
        if (ex.contains("transitive") && ex["transitive"].contains(wd))
          check("G x Gal transitive on the fixed points of " + wd, ex["transitive"][wd], t);
        else
          note("G x Gal transitive on the fixed points of " + wd, t);
        hyp = hyp && t;
      }
      if (kind == "C2")
        r.classification = hyp ? "non-rational quotient: minimal conic bundle with K²=2" : "k-rational quotient";
      else
        r.classification = hyp ? "non-rational quotient: minimal del Pezzo surface of degree 4" : "k-rational quotient";
    } else if (kind == "C4") {
      const SignedPermutation gen = g_maps.at(0);
      const SignedPermutation sq = gen.after(gen);
      check("g^2 acts as i12", true, same_point(sq.apply({FieldElement(f, 1), FieldElement(f, 2), FieldElement(f, 3), FieldElement(f, 5), FieldElement(f, 7)}),
                                                 SignedPermutation::flip("i12").apply({FieldElement(f, 1), FieldElement(f, 2), FieldElement(f, 3), FieldElement(f, 5), FieldElement(f, 7)})));
      std::vector<ProjPoint> pg;
      for (const auto& p : fixed_points(s, SignedPermutation::flip("i12")))
        if (same_point(gen.apply(p), p)) pg.push_back(p);
      check("points fixed by g", 2, pg.size());
      const std::vector<FieldElement> c1{FieldElement(f, 1), -FieldElement::basis(f, f->mask_of({-1})), FieldElement(f),
                                         FieldElement(f), FieldElement(f)};
      bool swap_keep = false, gal_swap = false;
      if (pg.size() == 2)
        for (const auto& e : grp)
          if (same_point(e.apply(pg[0]), pg[1])) {
            if (proportional(e.map_form(c1), c1)) swap_keep = true;
            if (e.s == SignedPermutation::identity(5)) gal_swap = true;
          }
      if (ex.contains("swap_p1_p2_keeping_C1"))
        check("some element of G x Gal swaps p1, p2 and keeps x1 = i x2", ex["swap_p1_p2_keeping_C1"], swap_keep);
      if (ex.contains("galois_swaps_p1_p2")) check("Galois swaps p1, p2", ex["galois_swaps_p1_p2"], gal_swap);
      hyp = hyp && swap_keep;
      r.classification = hyp ? "non-rational quotient: minimal conic bundle with K²=4" : "k-rational quotient";
    } else {
      r.classification = "construction";
    }

    if (ex.contains("defined_sets"))
      for (const auto& set : ex["defined_sets"]) {
        std::vector<DivisorClass> cls;
        std::string names;
        for (const auto& n : set) {
          cls.push_back(named_class(lat, n.get<std::string>()));
          names += (names.empty() ? "" : ",") + n.get<std::string>();
        }
        check("a Galois-stable disjoint set of " + std::to_string(cls.size()) + " lines exists", true,
              stable_disjoint_set_exists(gal, cls.size()));
        check("{" + names + "} is Galois-stable", true, stable_set(gal, cls), false);
      }

    if (!masks.empty()) {
      // X alone over k, with the trivial group
      EquivariantSurface xs(lat, gal, subgroup_from_words(w, {"id"}), !s.rational_point.empty());
      const ReductionTrace tr = mmp_reduce(xs);
      const CriteriaFlags fl = rationality_criteria(tr.final_surface);
      note("X over k after reduction", Json{{"K2", fl.k2}, {"rho", fl.rho}, {"rational", fl.iskovskikh_rational}});
    }

    if (ex.contains("classification")) check("classification", ex["classification"], r.classification);
  } catch (const Error& e) {
    check("computation", "completed", std::string(e.code()) + ": " + e.what());
    r.classification = "unverified";
  }
  return r;
}

}  // namespace dpq
