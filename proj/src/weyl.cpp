#include "dpq/weyl.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <mutex>
#include <set>

namespace dpq {

std::string matrix_key(const IntMat& m) {
  std::string k;
  for (const auto& row : m)
    for (long long x : row) {
      const auto v = static_cast<uint16_t>(static_cast<int16_t>(x));
      k.push_back(static_cast<char>(v & 0xff));
      k.push_back(static_cast<char>(v >> 8));
    }
  return k;
}

bool is_automorphism(const PicardLattice& lat, const IntMat& m) {
  const int n = lat.rank();
  if (static_cast<int>(m.size()) != n) return false;
  for (const auto& row : m)
    if (static_cast<int>(row.size()) != n) return false;
  return mul(transpose(m), mul(lat.gram, m)) == lat.gram && mul(m, lat.canonical) == lat.canonical;
}

IntMat reflection(const PicardLattice& lat, const DivisorClass& root) {
  // x -> x + (x.R) R
  const int n = lat.rank();
  IntVec gr = mul(lat.gram, root);
  IntMat m = identity(n);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) m[i][k] += root[i] * gr[k];
  return m;
}

ActionGroup::ActionGroup(PicardLattice lattice, std::vector<IntMat> generators, std::vector<std::string> words,
                         size_t cap)
    : lattice_(std::move(lattice)), generators_(std::move(generators)), words_(std::move(words)) {
  for (size_t i = 0; i < generators_.size(); ++i)
    if (!is_automorphism(lattice_, generators_[i]))
      throw Error("not_automorphism", "generator does not preserve the form and K",
                  Json{{"generator", i < words_.size() ? Json(words_[i]) : dpq::to_json(generators_[i])}});
  const IntMat id = identity(lattice_.rank());
  elements_.push_back(id);
  index_.emplace(matrix_key(id), 0);
  std::deque<size_t> queue{0};
  while (!queue.empty()) {
    const size_t e = queue.front();
    queue.pop_front();
    for (const auto& g : generators_) {
      IntMat p = mul(g, elements_[e]);
      std::string key = matrix_key(p);
      if (index_.count(key)) continue;
      if (elements_.size() >= cap)
        throw Error("group_too_large", "closure exceeded " + std::to_string(cap) + " elements");
      index_.emplace(std::move(key), elements_.size());
      elements_.push_back(std::move(p));
      queue.push_back(elements_.size() - 1);
    }
  }
}

std::optional<size_t> ActionGroup::index_of(const IntMat& m) const {
  auto it = index_.find(matrix_key(m));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool ActionGroup::contains(const ActionGroup& h) const {
  for (const auto& g : h.generators())
    if (!contains(g)) return false;
  return true;
}

Json ActionGroup::to_json() const {
  Json j;
  j["lattice"] = lattice_.to_json();
  j["order"] = order();
  j["generators"] = words_;
  return j;
}

ActionGroup generate_weyl(const PicardLattice& lat) {
  std::vector<IntMat> gens;
  std::vector<std::string> words;
  for (const auto& r : enumerate_roots(lat)) {
    auto first = std::find_if(r.begin(), r.end(), [](long long x) { return x != 0; });
    if (*first < 0) continue;  // one reflection per pair +-R
    gens.push_back(reflection(lat, r));
    std::string w = "s[";
    for (size_t i = 0; i < r.size(); ++i) w += (i ? "," : "") + std::to_string(r[i]);
    words.push_back(w + "]");
  }
  return ActionGroup(lat, std::move(gens), std::move(words));
}

const ActionGroup& weyl_group(int degree, bool quadric) {
  static std::mutex mu;
  static std::map<std::pair<int, bool>, std::unique_ptr<ActionGroup>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[{degree, quadric}];
  if (!slot) slot = std::make_unique<ActionGroup>(generate_weyl(PicardLattice::del_pezzo(degree, quadric)));
  return *slot;
}

namespace {

// Degree-5 lines as pairs from {1..5}: E_i ~ {i,5}, L_ij ~ complement of {i,j} in {1..4}.
// Two lines meet iff their pairs are disjoint, so S5 acts through the pairs.
DivisorClass petersen_line(const PicardLattice& lat, int a, int b) {
  if (a > b) std::swap(a, b);
  if (b == 5) return named_class(lat, "E" + std::to_string(a));
  std::vector<int> rest;
  for (int k = 1; k <= 4; ++k)
    if (k != a && k != b) rest.push_back(k);
  return named_class(lat, "L" + std::to_string(rest[0]) + std::to_string(rest[1]));
}

std::pair<int, int> petersen_pair(const PicardLattice& lat, int e_index, bool is_l12) {
  (void)lat;
  if (is_l12) return {3, 4};
  return {e_index, 5};
}

IntMat permutation_matrix(const PicardLattice& lat, const std::vector<int>& sigma /* 1-based, sigma[0] unused */) {
  const int n = lat.rank();
  if (lat.kind != LatticeKind::BlowupOfPlane)
    throw Error("unknown_word", "permutation words need a plane-blowup lattice");
  const int letters = static_cast<int>(sigma.size()) - 1;
  IntMat m(n, IntVec(n, 0));
  if (lat.n_points == 4 && letters == 5) {
    auto img = [&](std::pair<int, int> p) { return petersen_line(lat, sigma[p.first], sigma[p.second]); };
    std::vector<DivisorClass> cols(n);
    for (int i = 1; i <= 4; ++i) cols[i] = img(petersen_pair(lat, i, false));
    DivisorClass l = img(petersen_pair(lat, 0, true));
    for (int k = 0; k < n; ++k) l[k] += cols[1][k] + cols[2][k];
    cols[0] = l;
    for (int c = 0; c < n; ++c)
      for (int r = 0; r < n; ++r) m[r][c] = cols[c][r];
    return m;
  }
  if (letters > lat.n_points)
    throw Error("unknown_word", "permutation moves letter beyond E" + std::to_string(lat.n_points));
  m[0][0] = 1;
  for (int i = 1; i < n; ++i) m[i <= letters ? sigma[i] : i][i] = 1;
  return m;
}

}  // namespace

IntMat iota(const std::vector<int>& letters) {
  const ActionGroup& w = weyl_group(4);
  const PicardLattice& lat = w.lattice();
  std::vector<bool> swap(6, false);
  for (int l : letters) {
    if (l < 1 || l > 5 || swap[l]) throw Error("unknown_word", "bad iota index set");
    swap[l] = true;
  }
  if (letters.size() % 2 != 0) throw Error("unknown_word", "iota needs an even number of indices");
  for (const auto& m : w.elements()) {
    bool ok = true;
    for (int k = 1; k <= 5 && ok; ++k) {
      DivisorClass c = named_class(lat, "L");
      c[k] = -1;
      DivisorClass want = c;
      if (swap[k])
        for (int t = 0; t < 6; ++t) want[t] = -lat.canonical[t] - c[t];
      ok = mul(m, c) == want;
    }
    if (ok) return m;
  }
  throw Error("internal", "iota element not found in W(D5)");
}

IntMat parse_word(const PicardLattice& lat, const std::string& word) {
  const int n = lat.rank();
  IntMat acc = identity(n);
  size_t i = 0;
  auto fail = [&](const std::string& why) {
    throw Error("unknown_word", "cannot parse group word '" + word + "': " + why, Json{{"word", word}});
  };
  while (i < word.size()) {
    const char c = word[i];
    if (c == ' ' || c == '*' || c == '.') {
      ++i;
    } else if (word.compare(i, 2, "id") == 0) {
      i += 2;
    } else if (c == '(') {
      int letters = lat.kind == LatticeKind::BlowupOfPlane ? std::max(lat.n_points, lat.n_points == 4 ? 5 : 0) : 0;
      std::vector<int> sigma(letters + 1);
      for (int k = 0; k <= letters; ++k) sigma[k] = k;
      // consecutive cycles; rightmost acts first
      std::vector<std::vector<int>> cycles;
      while (i < word.size() && word[i] == '(') {
        ++i;
        std::vector<int> cyc;
        while (i < word.size() && word[i] != ')') {
          if (word[i] < '1' || word[i] > '9') fail("bad cycle letter");
          cyc.push_back(word[i] - '0');
          ++i;
        }
        if (i == word.size()) fail("unclosed cycle");
        ++i;
        for (int x : cyc)
          if (x > letters) fail("letter " + std::to_string(x) + " out of range");
        cycles.push_back(cyc);
      }
      for (auto it = cycles.rbegin(); it != cycles.rend(); ++it) {
        std::vector<int> cyc_map(letters + 1);
        for (int k = 0; k <= letters; ++k) cyc_map[k] = k;
        for (size_t t = 0; t < it->size(); ++t) cyc_map[(*it)[t]] = (*it)[(t + 1) % it->size()];
        for (int k = 1; k <= letters; ++k) sigma[k] = cyc_map[sigma[k]];
      }
      acc = mul(acc, permutation_matrix(lat, sigma));
    } else if (c == 'i') {
      ++i;
      std::vector<int> idx;
      while (i < word.size() && word[i] >= '0' && word[i] <= '9') idx.push_back(word[i++] - '0');
      if (lat.kind != LatticeKind::BlowupOfPlane || lat.n_points != 5) fail("iota elements live on degree 4");
      acc = mul(acc, iota(idx));
    } else if (c == 's' && i + 1 < word.size() && word[i + 1] == '[') {
      const size_t close = word.find(']', i);
      if (close == std::string::npos) fail("unclosed root");
      DivisorClass r;
      std::string body = word.substr(i + 2, close - i - 2);
      size_t p = 0;
      while (p < body.size()) {
        size_t q = body.find(',', p);
        if (q == std::string::npos) q = body.size();
        try {
          r.push_back(std::stoll(body.substr(p, q - p)));
        } catch (const std::exception&) {
          fail("bad root coordinate");
        }
        p = q + 1;
      }
      if (static_cast<int>(r.size()) != n || intersect(lat, r, r) != -2 || intersect(lat, r, lat.canonical) != 0)
        fail("not a root");
      acc = mul(acc, reflection(lat, r));
      i = close + 1;
    } else {
      fail(std::string("unexpected '") + c + "'");
    }
  }
  return acc;
}

ActionGroup subgroup_from_matrices(const ActionGroup& ambient, const std::vector<IntMat>& gens,
                                   std::vector<std::string> words) {
  for (size_t i = 0; i < gens.size(); ++i)
    if (!ambient.contains(gens[i]))
      throw Error("not_in_group", "element is not in the ambient group",
                  Json{{"generator", i < words.size() ? Json(words[i]) : dpq::to_json(gens[i])}});
  return ActionGroup(ambient.lattice(), gens, std::move(words));
}

ActionGroup subgroup_from_words(const ActionGroup& ambient, const std::vector<std::string>& words) {
  std::vector<IntMat> gens;
  std::vector<std::string> kept;
  for (const auto& w : words) {
    if (w.empty()) continue;
    gens.push_back(parse_word(ambient.lattice(), w));
    kept.push_back(w);
  }
  return subgroup_from_matrices(ambient, gens, kept);
}

std::vector<Orbit> orbits_on_curves(const ActionGroup& g, const std::vector<DivisorClass>& curves) {
  std::map<DivisorClass, size_t> pos;
  for (size_t i = 0; i < curves.size(); ++i) pos.emplace(curves[i], i);
  std::vector<bool> seen(curves.size(), false);
  std::vector<Orbit> out;
  const auto& lat = g.lattice();
  for (size_t i = 0; i < curves.size(); ++i) {
    if (seen[i]) continue;
    std::vector<size_t> members;
    for (const auto& m : g.elements()) {
      auto it = pos.find(mul(m, curves[i]));
      if (it == pos.end())
        throw Error("not_invariant", "curve set is not stable under the group", Json{{"curve", curves[i]}});
      if (!seen[it->second]) {
        seen[it->second] = true;
        members.push_back(it->second);
      }
    }
    std::sort(members.begin(), members.end());
    Orbit o;
    for (size_t k : members) o.curves.push_back(curves[k]);
    o.pairwise_disjoint = true;
    for (size_t a = 0; a < o.curves.size() && o.pairwise_disjoint; ++a)
      for (size_t b = a + 1; b < o.curves.size(); ++b)
        if (intersect(lat, o.curves[a], o.curves[b]) != 0) {
          o.pairwise_disjoint = false;
          break;
        }
    out.push_back(std::move(o));
  }
  return out;
}

int image_rank(const ActionGroup& g) {
  const int n = g.lattice().rank();
  RatMat rows;
  for (const auto& m : g.generators())
    for (int i = 0; i < n; ++i) {
      RatVec r(n);
      for (int j = 0; j < n; ++j) r[j] = m[i][j] - (i == j ? 1 : 0);
      rows.push_back(std::move(r));
    }
  return rank(rows);
}

int invariant_rank(const ActionGroup& g) { return g.lattice().rank() - image_rank(g); }

GroupTable::GroupTable(const ActionGroup& g) : group_(&g), n_(g.order()), inv_(n_), table_(n_ * n_, -1) {
  auto ginv = inverse(to_rational(g.lattice().gram));
  IntMat gi;
  for (const auto& row : *ginv) {
    IntVec r;
    for (const auto& x : row) r.push_back(static_cast<long long>(numerator(x)));
    gi.push_back(r);
  }
  for (size_t a = 0; a < n_; ++a) {
    const IntMat& m = g.elements()[a];
    inv_[a] = index(dpq::mul(gi, dpq::mul(transpose(m), g.lattice().gram)));
  }
}

int GroupTable::index(const IntMat& m) const {
  auto i = group_->index_of(m);
  if (!i) throw Error("internal", "element not in table group");
  return static_cast<int>(*i);
}

int GroupTable::mul(int a, int b) const {
  int& slot = table_[static_cast<size_t>(a) * n_ + b];
  if (slot < 0) slot = index(dpq::mul(group_->elements()[a], group_->elements()[b]));
  return slot;
}

std::vector<int> GroupTable::closure(const std::vector<int>& gens) const {
  std::vector<int> elems{0};
  std::vector<bool> in(n_, false);
  in[0] = true;
  for (size_t i = 0; i < elems.size(); ++i)
    for (int g : gens) {
      int p = mul(g, elems[i]);
      if (!in[p]) {
        in[p] = true;
        elems.push_back(p);
      }
    }
  std::sort(elems.begin(), elems.end());
  return elems;
}

std::vector<int> GroupTable::conjugate(const std::vector<int>& h, int w) const {
  std::vector<int> out;
  out.reserve(h.size());
  for (int x : h) out.push_back(mul(mul(w, x), inv_[w]));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> GroupTable::canonical_conjugate(const std::vector<int>& h) const {
  std::vector<int> best = h;
  std::sort(best.begin(), best.end());
  for (int w = 0; w < size(); ++w) best = std::min(best, conjugate(h, w));
  return best;
}

bool GroupTable::conjugate_subgroups(const std::vector<int>& a, const std::vector<int>& b) const {
  if (a.size() != b.size()) return false;
  std::vector<int> sb = b;
  std::sort(sb.begin(), sb.end());
  for (int w = 0; w < size(); ++w)
    if (conjugate(a, w) == sb) return true;
  return false;
}

int GroupTable::element_order(int a) const {
  int k = 1, x = a;
  while (x != 0) {
    x = mul(a, x);
    ++k;
  }
  return k;
}

// --- S5 ---

Perm5 perm5_identity() { return {0, 1, 2, 3, 4}; }

Perm5 perm5_compose(const Perm5& a, const Perm5& b) {
  Perm5 c{};
  for (int i = 0; i < 5; ++i) c[i] = a[b[i]];
  return c;
}

Perm5 perm5_parse(const std::string& s) {
  Perm5 p = perm5_identity();
  std::vector<std::vector<int>> cycles;
  size_t i = 0;
  while (i < s.size()) {
    if (s[i] == ' ') {
      ++i;
      continue;
    }
    if (s[i] != '(') throw Error("bad_permutation", "cannot parse permutation '" + s + "'");
    ++i;
    std::vector<int> cyc;
    while (i < s.size() && s[i] != ')') {
      if (s[i] < '1' || s[i] > '5') throw Error("bad_permutation", "letters must be 1..5 in '" + s + "'");
      cyc.push_back(s[i++] - '1');
    }
    if (i == s.size()) throw Error("bad_permutation", "unclosed cycle in '" + s + "'");
    ++i;
    cycles.push_back(cyc);
  }
  for (auto it = cycles.rbegin(); it != cycles.rend(); ++it) {
    Perm5 c = perm5_identity();
    for (size_t t = 0; t < it->size(); ++t) c[(*it)[t]] = (*it)[(t + 1) % it->size()];
    p = perm5_compose(c, p);
  }
  return p;
}

std::string perm5_string(const Perm5& p) {
  std::string out;
  std::array<bool, 5> seen{};
  for (int i = 0; i < 5; ++i) {
    if (seen[i] || p[i] == i) continue;
    out += '(';
    for (int j = i; !seen[j]; j = p[j]) {
      seen[j] = true;
      out += static_cast<char>('1' + j);
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

Perm5 conic_pair_permutation(const IntMat& m) {
  const PicardLattice lat = PicardLattice::blowup_of_plane(5);
  Perm5 p{};
  for (int a = 1; a <= 5; ++a) {
    DivisorClass c = named_class(lat, "L");
    c[a] = -1;
    DivisorClass y = mul(m, c);
    int hit = -1;
    for (int k = 1; k <= 5 && hit < 0; ++k) {
      DivisorClass ck = named_class(lat, "L");
      ck[k] = -1;
      DivisorClass dk(6);
      for (int t = 0; t < 6; ++t) dk[t] = -lat.canonical[t] - ck[t];
      if (y == ck || y == dk) hit = k;
    }
    if (hit < 0) throw Error("internal", "element does not permute the conic pairs");
    p[a - 1] = hit - 1;
  }
  return p;
}

std::vector<Perm5> s5_image(const ActionGroup& g, const ActionGroup& ambient) {
  const auto& lat = ambient.lattice();
  if (lat.kind != LatticeKind::BlowupOfPlane || lat.n_points != 5 || ambient.order() != 1920)
    throw Error("not_wd5", "s5_image needs the degree-4 Weyl group as ambient",
                Json{{"ambient_order", ambient.order()}, {"lattice", lat.descriptor()}});
  // the order-16 normal subgroup is the kernel of the action on conic pairs
  std::set<std::string> kernel;
  for (const auto& m : ambient.elements())
    if (conic_pair_permutation(m) == perm5_identity()) kernel.insert(matrix_key(m));
  if (kernel.size() != 16) throw Error("internal", "conic-pair kernel has wrong order");
  std::set<Perm5> img;
  for (const auto& m : g.elements()) {
    if (!ambient.contains(m)) throw Error("not_in_group", "element outside W(D5)");
    img.insert(conic_pair_permutation(m));
  }
  return {img.begin(), img.end()};
}

namespace {

int moved_points(const Perm5& p) {
  int k = 0;
  for (int i = 0; i < 5; ++i) k += p[i] != i;
  return k;
}

bool is_double_transposition(const Perm5& p) {
  return moved_points(p) == 4 && perm5_compose(p, p) == perm5_identity();
}

}  // namespace

bool dp4_realizable(const ActionGroup& g, const ActionGroup& ambient) {
  auto img = s5_image(g, ambient);
  for (const auto& p : img)
    if (moved_points(p) == 2) return false;
  std::vector<Perm5> dt;
  for (const auto& p : img)
    if (is_double_transposition(p)) dt.push_back(p);
  for (size_t a = 0; a < dt.size(); ++a)
    for (size_t b = a + 1; b < dt.size(); ++b) {
      Perm5 ab = perm5_compose(dt[a], dt[b]);
      if (ab == perm5_compose(dt[b], dt[a]) && is_double_transposition(ab)) return false;
    }
  return true;
}

// --- subgroups of S5 ---
namespace {

struct S5 {
  std::vector<Perm5> elems;
  std::map<Perm5, int> idx;
  std::vector<std::vector<int>> mul;
  std::vector<int> inv;

  S5() {
    Perm5 p = perm5_identity();
    do {
      idx[p] = static_cast<int>(elems.size());
      elems.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    const int n = static_cast<int>(elems.size());
    mul.assign(n, std::vector<int>(n));
    inv.assign(n, 0);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        mul[a][b] = idx.at(perm5_compose(elems[a], elems[b]));
        if (mul[a][b] == 0) inv[a] = b;
      }
  }

  std::vector<int> closure(const std::vector<int>& gens) const {
    std::vector<int> out{0};
    std::vector<bool> in(elems.size(), false);
    in[0] = true;
    for (size_t i = 0; i < out.size(); ++i)
      for (int g : gens) {
        int p = mul[g][out[i]];
        if (!in[p]) {
          in[p] = true;
          out.push_back(p);
        }
      }
    std::sort(out.begin(), out.end());
    return out;
  }

  std::vector<int> conj(const std::vector<int>& h, int w) const {
    std::vector<int> out;
    for (int x : h) out.push_back(mul[mul[w][x]][inv[w]]);
    std::sort(out.begin(), out.end());
    return out;
  }

  std::vector<int> canonical(const std::vector<int>& h) const {
    std::vector<int> best = h;
    for (int w = 0; w < static_cast<int>(elems.size()); ++w) best = std::min(best, conj(h, w));
    return best;
  }

  std::vector<Perm5> perms(const std::vector<int>& h) const {
    std::vector<Perm5> out;
    for (int x : h) out.push_back(elems[x]);
    return out;
  }
};

const S5& s5() {
  static const S5 g;
  return g;
}

std::vector<std::vector<int>> all_s5_subgroups() {
  const S5& g = s5();
  std::set<std::vector<int>> subs;
  for (int a = 0; a < static_cast<int>(g.elems.size()); ++a) subs.insert(g.closure({a}));
  // every subgroup is a join of cyclic ones
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<std::vector<int>> cur(subs.begin(), subs.end());
    for (size_t i = 0; i < cur.size(); ++i)
      for (size_t j = i + 1; j < cur.size(); ++j) {
        std::vector<int> gens = cur[i];
        gens.insert(gens.end(), cur[j].begin(), cur[j].end());
        if (subs.insert(g.closure(gens)).second) grew = true;
      }
  }
  return {subs.begin(), subs.end()};
}

const std::vector<std::vector<int>>& listed_canonical() {
  static const std::vector<std::vector<int>> v = [] {
    const S5& g = s5();
    auto gen = [&](std::initializer_list<const char*> ws) {
      std::vector<int> gens;
      for (const char* w : ws) gens.push_back(g.idx.at(perm5_parse(w)));
      return g.canonical(g.closure(gens));
    };
    return std::vector<std::vector<int>>{gen({"(12)"}),         gen({"(12)(34)"}),
                                         gen({"(123)"}),        gen({"(12)(34)", "(13)(24)"}),
                                         gen({"(12345)"}),      gen({"(123)", "(12345)"})};
  }();
  return v;
}

S5Witness witness_for(const std::vector<int>& h, const std::vector<std::vector<int>>& subs) {
  const S5& g = s5();
  const auto& listed = listed_canonical();
  S5Witness w;
  w.subgroup = g.perms(h);
  std::vector<int> best;
  for (const auto& k : subs) {
    if (k.size() < 2 || !std::includes(h.begin(), h.end(), k.begin(), k.end())) continue;
    bool normal = true;
    for (int x : h)
      if (g.conj(k, x) != k) {
        normal = false;
        break;
      }
    if (!normal) continue;
    auto c = g.canonical(k);
    for (int li = 0; li < static_cast<int>(listed.size()); ++li) {
      if (listed[li] != c) continue;
      if (w.witness_class < 0 || k.size() < best.size() || (k.size() == best.size() && li < w.witness_class)) {
        best = k;
        w.witness_class = li;
      }
    }
  }
  w.witness = g.perms(best);
  return w;
}

Json perms_json(const std::vector<Perm5>& v) {
  Json j = Json::array();
  for (const auto& p : v) j.push_back(perm5_string(p));
  return j;
}

}  // namespace

const std::vector<std::string>& s5_listed_class_names() {
  static const std::vector<std::string> names{"C2=<(12)>",          "C2=<(12)(34)>", "C3=<(123)>",
                                              "V4=<(12)(34),(13)(24)>", "C5=<(12345)>",  "A5"};
  return names;
}

S5Witness s5_witness(const std::vector<Perm5>& generators) {
  const S5& g = s5();
  std::vector<int> gens;
  for (const auto& p : generators) gens.push_back(g.idx.at(p));
  return witness_for(g.closure(gens), all_s5_subgroups());
}

S5LemmaReport verify_s5_normal_subgroup_lemma() {
  const S5& g = s5();
  auto subs = all_s5_subgroups();
  S5LemmaReport rep;
  rep.subgroups = subs.size();
  std::set<std::vector<int>> classes;
  for (const auto& h : subs) {
    auto c = g.canonical(h);
    const bool new_class = classes.insert(c).second;
    if (h.size() == 1) continue;
    S5Witness w = witness_for(h, subs);
    if (w.witness_class < 0) {
      rep.ok = false;
      rep.counterexamples.push_back(w);
    }
    if (new_class) {
      w.subgroup = g.perms(c);
      w = witness_for(c, subs);
      rep.class_rows.push_back(w);
    }
  }
  rep.conjugacy_classes = classes.size();
  std::sort(rep.class_rows.begin(), rep.class_rows.end(),
            [](const S5Witness& a, const S5Witness& b) { return a.subgroup.size() < b.subgroup.size(); });
  return rep;
}

Json S5LemmaReport::to_json() const {
  Json j;
  j["subgroups_checked"] = subgroups;
  j["conjugacy_classes"] = conjugacy_classes;
  j["ok"] = ok;
  Json rows = Json::array();
  for (const auto& r : class_rows) {
    Json row;
    row["order"] = r.subgroup.size();
    row["elements"] = perms_json(r.subgroup);
    row["witness"] = r.witness_class >= 0 ? Json(s5_listed_class_names()[r.witness_class]) : Json(nullptr);
    row["witness_elements"] = perms_json(r.witness);
    rows.push_back(row);
  }
  j["classes"] = rows;
  Json bad = Json::array();
  for (const auto& r : counterexamples) bad.push_back(perms_json(r.subgroup));
  j["counterexamples"] = bad;
  return j;
}

}  // namespace dpq
