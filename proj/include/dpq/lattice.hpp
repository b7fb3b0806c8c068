#pragma once

#include "dpq/core.hpp"

#include <string>
#include <vector>

namespace dpq {

using DivisorClass = IntVec;

enum class LatticeKind { BlowupOfPlane, Quadric, Contracted };

struct PicardLattice {
  LatticeKind kind = LatticeKind::BlowupOfPlane;
  int n_points = 0;        // BlowupOfPlane only
  std::string origin;      // Contracted: descriptor of the lattice we started from
  int contracted = 0;      // Contracted: total number of curves blown down
  IntMat gram;
  DivisorClass canonical;

  static PicardLattice blowup_of_plane(int n);
  static PicardLattice quadric();
  // Degree 8 is ambiguous; `quadric` picks P1xP1 over the one-point blowup.
  static PicardLattice del_pezzo(int degree, bool quadric = false);

  int rank() const { return static_cast<int>(gram.size()); }
  long long degree() const;  // K^2
  std::string descriptor() const;
  // "P2", "P1xP1", "F1" or "dP<d>" from the form alone.
  std::string surface_type() const;
  bool same_form(const PicardLattice& o) const { return gram == o.gram && canonical == o.canonical; }
  Json to_json() const;
};

long long intersect(const PicardLattice& lat, const DivisorClass& a, const DivisorClass& b);

// All x with x.x = self_int and x.K = k_int, sorted ascending. Needs K^2 > 0.
std::vector<DivisorClass> enumerate_classes(const PicardLattice& lat, long long self_int, long long k_int);
std::vector<DivisorClass> enumerate_minus_one_curves(const PicardLattice& lat);
std::vector<DivisorClass> enumerate_roots(const PicardLattice& lat);

struct Blowdown {
  PicardLattice lattice;
  IntMat basis;        // old coordinates of the new basis vectors, as columns (old_rank x new_rank)
  IntMat pushforward;  // new_rank x old_rank
  DivisorClass push(const DivisorClass& x) const { return mul(pushforward, x); }
  DivisorClass lift(const DivisorClass& y) const { return mul(basis, y); }
};

Blowdown blowdown(const PicardLattice& lat, const std::vector<DivisorClass>& curves);

// Named classes on BlowupOfPlane lattices: "L", "E3", "L12", "Q", "K".
DivisorClass named_class(const PicardLattice& lat, const std::string& name);
// Inverse of named_class for (-1)-curves; falls back to the coordinate tuple.
std::string curve_label(const PicardLattice& lat, const DivisorClass& c);

}  // namespace dpq
