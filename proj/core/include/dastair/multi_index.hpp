#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace dastair {

using BigInt = boost::multiprecision::cpp_int;

/// An element of N^d: a tuple of nonnegative integer exponents.
///
/// Multi-indices are the universal coordinate of the library: they index
/// Taylor coefficients, monomials, basis vectors and operator powers.
class MultiIndex {
 public:
  MultiIndex() = default;
  explicit MultiIndex(std::vector<int> components);

  static MultiIndex zero(int dimension);
  /// Unit index e_axis (axis is 0-based).
  static MultiIndex unit(int dimension, int axis);

  int dimension() const { return static_cast<int>(components_.size()); }
  /// Total degree |n| = sum of components.
  int degree() const;
  int operator[](int axis) const { return components_[axis]; }
  const std::vector<int>& components() const { return components_; }

  bool is_zero() const;
  MultiIndex plus(const MultiIndex& other) const;
  MultiIndex plus_unit(int axis) const;
  /// n - e_axis, or nullopt when the component is already zero.
  std::optional<MultiIndex> minus_unit(int axis) const;
  std::optional<MultiIndex> minus(const MultiIndex& other) const;
  /// Componentwise n_j <= other_j.
  bool leq(const MultiIndex& other) const;

  bool operator==(const MultiIndex& other) const = default;

  std::string to_string() const;  // "a,b,c"

 private:
  std::vector<int> components_;
};

/// Graded lexicographic order: by total degree, ties broken lexicographically.
/// The canonical basis order of the whole library; degree-truncated subspaces
/// are contiguous index ranges under it.
bool graded_lex_less(const MultiIndex& a, const MultiIndex& b);

struct GradedLexLess {
  bool operator()(const MultiIndex& a, const MultiIndex& b) const {
    return graded_lex_less(a, b);
  }
};

/// Truncation window {n : |n| <= max_degree}. Total-degree balls are lower
/// sets and invariant under every backshift, which keeps finite operator
/// models exact.
struct DegreeBox {
  int dimension = 1;
  int max_degree = 0;

  DegreeBox(int dimension, int max_degree);
  bool contains(const MultiIndex& n) const;
};

/// Exact multinomial weight |n|!/n!, kept as an arbitrary-precision integer.
/// Doubles appear only at the numerical boundary.
class Weight {
 public:
  Weight() = default;
  explicit Weight(BigInt value);

  const BigInt& value() const { return value_; }
  /// Nearest double; inexact once the value exceeds 2^53.
  double to_double() const;
  /// True when to_double() is exact (value <= 2^53).
  bool exact_in_double() const;

  bool operator==(const Weight& other) const = default;

 private:
  BigInt value_ = 1;
};

/// beta(n) = |n|!/n!, computed exactly.
Weight beta(const MultiIndex& n);

/// Sum of beta(m - e_j) over axes with m_j > 0; equals beta(m) by the Pascal
/// identity. Rejects m = 0.
Weight pascal_sum(const MultiIndex& m);

/// All n with |n| <= box.max_degree in graded-lex order.
/// The count is C(max_degree + dimension, dimension).
std::vector<MultiIndex> enumerate_box(const DegreeBox& box);

}  // namespace dastair
