#include "dpq/weyl.hpp"

#include "test_support.hpp"

#include <doctest.h>

#include <algorithm>

using namespace dpq;

TEST_CASE("Weyl group orders agree with the independent closure") {
  for (const auto& [deg, n] : frozen()["weyl_orders"].items()) {
    CAPTURE(deg);
    CHECK(weyl_group(std::stoi(deg)).order() == n.get<size_t>());
  }
  CHECK(weyl_group(8, true).order() == 2);
  CHECK(weyl_group(9).order() == 1);
}

TEST_CASE("subgroups from words") {
  const ActionGroup& w = weyl_group(4);
  CHECK(subgroup_from_words(w, {"(12345)"}).order() == 5);
  CHECK(subgroup_from_words(w, {"i12", "i13"}).order() == 4);
  const ActionGroup c4 = subgroup_from_words(w, {"(12)(34)i15"});
  CHECK(c4.order() == 4);
  CHECK(subgroup_from_words(w, {"id"}).order() == 1);
  CHECK_THROWS_AS(subgroup_from_words(w, {"(16)"}), Error);
  CHECK_THROWS_AS(subgroup_from_words(w, {"i123"}), Error);
  CHECK_THROWS_AS(subgroup_from_words(w, {"bogus"}), Error);
}

TEST_CASE("words multiply in written order") {
  const PicardLattice& lat = weyl_group(4).lattice();
  CHECK(parse_word(lat, "(12)(23)") == mul(parse_word(lat, "(12)"), parse_word(lat, "(23)")));
  CHECK(parse_word(lat, "i12i12") == identity(lat.rank()));
}

TEST_CASE("orbits on lines") {
  const ActionGroup& w5 = weyl_group(5);
  const PicardLattice& l5 = w5.lattice();
  const ActionGroup g = subgroup_from_words(w5, {"(12)"});
  std::vector<std::string> fixed;
  for (const auto& o : orbits_on_curves(g, enumerate_minus_one_curves(l5)))
    if (o.curves.size() == 1) fixed.push_back(curve_label(l5, o.curves[0]));
  std::sort(fixed.begin(), fixed.end());
  CHECK(fixed == std::vector<std::string>{"E3", "E4", "L12", "L34"});

  const ActionGroup& w4 = weyl_group(4);
  const ActionGroup c5 = subgroup_from_words(w4, {"(12345)"});
  std::vector<std::string> fixed4;
  for (const auto& o : orbits_on_curves(c5, enumerate_minus_one_curves(w4.lattice())))
    if (o.curves.size() == 1) fixed4.push_back(curve_label(w4.lattice(), o.curves[0]));
  CHECK(fixed4 == std::vector<std::string>{"Q"});
  CHECK(orbits_on_curves(subgroup_from_words(w4, {"id"}), enumerate_minus_one_curves(w4.lattice())).size() == 16);
}

TEST_CASE("invariant ranks") {
  CHECK(invariant_rank(weyl_group(5)) == 1);
  CHECK(invariant_rank(subgroup_from_words(weyl_group(4), {"id"})) == 6);
  CHECK(invariant_rank(subgroup_from_words(weyl_group(4), {"i1345", "i15", "i45"})) == 2);
}

TEST_CASE("S5 image through the conic pairs") {
  const ActionGroup& w = weyl_group(4);
  CHECK(s5_image(subgroup_from_words(w, {"i12"}), w).size() == 1);
  auto img = s5_image(subgroup_from_words(w, {"(12)(34)i15"}), w);
  CHECK(img.size() == 2);
  CHECK(std::find(img.begin(), img.end(), perm5_parse("(12)(34)")) != img.end());
  CHECK(s5_image(w, w).size() == 120);
}

TEST_CASE("iota swaps exactly the named conic pairs") {
  const PicardLattice& lat = weyl_group(4).lattice();
  const IntMat m = iota({1, 2});
  CHECK(mul(m, m) == identity(lat.rank()));
  // L - E1 and -K - L + E1 form the first conic pair
  DivisorClass a = named_class(lat, "L"), k = lat.canonical;
  a[1] -= 1;
  DivisorClass b(lat.rank());
  for (int i = 0; i < lat.rank(); ++i) b[i] = -k[i] - named_class(lat, "L")[i];
  b[1] += 1;
  CHECK(mul(m, a) == b);
  DivisorClass c = named_class(lat, "L");
  c[3] -= 1;
  CHECK(mul(m, c) == c);
}

TEST_CASE("S5 normal-subgroup witnesses") {
  CHECK(s5_witness({perm5_parse("(12345)"), perm5_parse("(12)")}).witness.size() == 60);
  CHECK(s5_witness({perm5_parse("(12345)"), perm5_parse("(2354)")}).witness.size() == 5);
  const auto w3 = s5_witness({perm5_parse("(123)")});
  CHECK(w3.witness == w3.subgroup);
  const S5LemmaReport r = verify_s5_normal_subgroup_lemma();
  CHECK(r.ok);
  CHECK(r.subgroups == frozen()["s5"]["subgroups"].get<size_t>());
  CHECK(r.conjugacy_classes == frozen()["s5"]["classes"].get<size_t>());
}
