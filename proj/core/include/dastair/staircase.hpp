#pragma once

#include <vector>

#include "dastair/multi_index.hpp"

namespace dastair {

/// A monotone (lower) subset X of N^d, stored through the minimal generators
/// of its complement N = N^d \ X. N is an upper set by construction, so the
/// complement-shift-invariance property N + e_j subset N holds automatically.
///
/// The generator list is reduced to a graded-lex sorted antichain on
/// construction; an empty list means X = N^d.
class StaircaseSet {
 public:
  StaircaseSet(int dimension, std::vector<MultiIndex> generators);

  /// X = N^d (no generators).
  static StaircaseSet full(int dimension);
  /// X = {0}; generators are the unit indices.
  static StaircaseSet point(int dimension);
  /// X = {n : n_axis <= n_max}; single generator (n_max+1) e_axis. axis is 0-based.
  static StaircaseSet slab(int dimension, int axis, int n_max);
  /// X = R_m = {n : n <= m componentwise}; generators (m_j+1) e_j.
  static StaircaseSet rectangle(const MultiIndex& m);

  int dimension() const { return dimension_; }
  const std::vector<MultiIndex>& generators() const { return generators_; }

  /// True iff no generator g satisfies g <= n, i.e. n lies in X.
  bool member(const MultiIndex& n) const;

  /// True iff every axis carries a pure-power generator; equivalent to X
  /// being a finite set (a finite union of rectangles).
  bool is_bounded() const;

  /// The maximal elements m_k of a bounded X under componentwise order;
  /// X is exactly the union of the rectangles R_{m_k}. Brute-force scan
  /// over the grid bounded by the generator components.
  std::vector<MultiIndex> maximal_elements() const;

  bool operator==(const StaircaseSet& other) const = default;

 private:
  int dimension_ = 1;
  std::vector<MultiIndex> generators_;
};

/// An arbitrary finite subset of a per-axis grid, not necessarily monotone.
/// Exists to drive exhaustive iff-style tests against StaircaseSet.
class ExplicitSet {
 public:
  /// grid[j] is the number of admissible values on axis j (components run
  /// through 0 .. grid[j]-1). Members are deduplicated and graded-lex sorted.
  ExplicitSet(std::vector<int> grid, std::vector<MultiIndex> members);

  int dimension() const { return static_cast<int>(grid_.size()); }
  const std::vector<int>& grid() const { return grid_; }
  const std::vector<MultiIndex>& members() const { return members_; }
  bool contains(const MultiIndex& n) const;

 private:
  std::vector<int> grid_;
  std::vector<MultiIndex> members_;
};

/// True iff S is downward closed: n in S and n_j > 0 imply n - e_j in S.
bool is_lower_set(const ExplicitSet& s);

/// The commutation shape condition: no configuration with n, n+e_i+e_j and
/// n+e_i inside the set but n+e_j outside. Scanned over all (n, i, j) whose
/// four points fit in the grid. Lower sets always satisfy it.
bool shape_condition(const ExplicitSet& s);
bool shape_condition(const StaircaseSet& x, const std::vector<int>& grid);

/// X intersected with the degree box, in graded-lex order.
std::vector<MultiIndex> truncate(const StaircaseSet& x, const DegreeBox& box);

/// All downward-closed subsets of the grid (including the empty set).
/// Guarded: the grid may hold at most 20 cells so the subset space stays
/// within 2^20.
std::vector<ExplicitSet> enumerate_lower_sets(const std::vector<int>& grid);

/// All grid points in graded-lex order.
std::vector<MultiIndex> enumerate_grid(const std::vector<int>& grid);

}  // namespace dastair
