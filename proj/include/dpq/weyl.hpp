#pragma once

#include "dpq/lattice.hpp"

#include <array>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace dpq {

using LatticeAutomorphism = IntMat;

class ActionGroup {
 public:
  ActionGroup() = default;
  // Breadth-first closure of the generators; throws past `cap` elements.
  ActionGroup(PicardLattice lattice, std::vector<IntMat> generators, std::vector<std::string> words = {},
              size_t cap = 10000);

  const PicardLattice& lattice() const { return lattice_; }
  const std::vector<IntMat>& elements() const { return elements_; }  // identity first
  const std::vector<IntMat>& generators() const { return generators_; }
  const std::vector<std::string>& generator_words() const { return words_; }
  size_t order() const { return elements_.size(); }
  std::optional<size_t> index_of(const IntMat& m) const;
  bool contains(const IntMat& m) const { return index_of(m).has_value(); }
  bool contains(const ActionGroup& h) const;
  Json to_json() const;

 private:
  PicardLattice lattice_;
  std::vector<IntMat> generators_;
  std::vector<std::string> words_;
  std::vector<IntMat> elements_;
  std::unordered_map<std::string, size_t> index_;
};

std::string matrix_key(const IntMat& m);
bool is_automorphism(const PicardLattice& lat, const IntMat& m);
IntMat reflection(const PicardLattice& lat, const DivisorClass& root);

ActionGroup generate_weyl(const PicardLattice& lat);
// Shared cached Weyl group of a standard lattice (degree 4..9 or the quadric).
const ActionGroup& weyl_group(int degree, bool quadric = false);

// Words: "id", "(12)(34)", "i12", "i1345", "s[1,-1,-1,0,0,0]" and concatenations,
// multiplied as matrices in written order.
IntMat parse_word(const PicardLattice& lat, const std::string& word);
ActionGroup subgroup_from_words(const ActionGroup& ambient, const std::vector<std::string>& words);
ActionGroup subgroup_from_matrices(const ActionGroup& ambient, const std::vector<IntMat>& gens,
                                   std::vector<std::string> words = {});

struct Orbit {
  std::vector<DivisorClass> curves;
  bool pairwise_disjoint = false;
};
std::vector<Orbit> orbits_on_curves(const ActionGroup& g, const std::vector<DivisorClass>& curves);

int invariant_rank(const ActionGroup& g);
int image_rank(const ActionGroup& g);  // rank of the stacked (g - id)

// Index-based view of a finite matrix group with a lazily filled Cayley table.
class GroupTable {
 public:
  explicit GroupTable(const ActionGroup& g);
  int size() const { return static_cast<int>(n_); }
  int mul(int a, int b) const;
  int inv(int a) const { return inv_[a]; }
  int index(const IntMat& m) const;
  const IntMat& element(int a) const { return group_->elements()[a]; }
  std::vector<int> closure(const std::vector<int>& gens) const;
  std::vector<int> conjugate(const std::vector<int>& h, int w) const;  // sorted
  std::vector<int> canonical_conjugate(const std::vector<int>& h) const;
  bool conjugate_subgroups(const std::vector<int>& a, const std::vector<int>& b) const;
  int element_order(int a) const;

 private:
  const ActionGroup* group_;
  size_t n_;
  std::vector<int> inv_;
  mutable std::vector<int> table_;
};

// --- S5 quotient of W(D5) ---
using Perm5 = std::array<int, 5>;  // 0-based images
Perm5 perm5_identity();
Perm5 perm5_compose(const Perm5& a, const Perm5& b);  // a after b
Perm5 perm5_parse(const std::string& cycles);        // "(12)(34)"
std::string perm5_string(const Perm5& p);            // cycle notation, "()" for identity

// Induced permutation of a degree-4 Weyl element on the conic pairs {L-E_m, -K-L+E_m}.
Perm5 conic_pair_permutation(const IntMat& m);
std::vector<Perm5> s5_image(const ActionGroup& g, const ActionGroup& ambient);
// Lattice realizability filter for degree-4 actions.
bool dp4_realizable(const ActionGroup& g, const ActionGroup& ambient);

// Degree-4 involution swapping exactly the conic pairs in `letters` (1-based).
IntMat iota(const std::vector<int>& letters);

struct S5Witness {
  std::vector<Perm5> subgroup;  // sorted elements
  std::vector<Perm5> witness;
  int witness_class = -1;       // index into s5_listed_class_names()
};
const std::vector<std::string>& s5_listed_class_names();
S5Witness s5_witness(const std::vector<Perm5>& generators);
struct S5LemmaReport {
  size_t subgroups = 0;
  size_t conjugacy_classes = 0;
  bool ok = true;
  std::vector<S5Witness> class_rows;  // one representative per conjugacy class
  std::vector<S5Witness> counterexamples;
  Json to_json() const;
};
S5LemmaReport verify_s5_normal_subgroup_lemma();

}  // namespace dpq
