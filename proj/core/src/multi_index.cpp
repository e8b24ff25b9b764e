#include "dastair/multi_index.hpp"

#include <algorithm>
#include <numeric>

namespace dastair {

MultiIndex::MultiIndex(std::vector<int> components) : components_(std::move(components)) {
  if (components_.empty()) throw std::invalid_argument("MultiIndex: dimension must be >= 1");
  for (int c : components_) {
    if (c < 0) throw std::invalid_argument("MultiIndex: components must be nonnegative");
  }
}

MultiIndex MultiIndex::zero(int dimension) {
  return MultiIndex(std::vector<int>(static_cast<size_t>(dimension), 0));
}

MultiIndex MultiIndex::unit(int dimension, int axis) {
  if (axis < 0 || axis >= dimension) throw std::invalid_argument("MultiIndex::unit: axis out of range");
  std::vector<int> c(static_cast<size_t>(dimension), 0);
  c[static_cast<size_t>(axis)] = 1;
  return MultiIndex(std::move(c));
}

int MultiIndex::degree() const {
  return std::accumulate(components_.begin(), components_.end(), 0);
}

bool MultiIndex::is_zero() const {
  return std::all_of(components_.begin(), components_.end(), [](int c) { return c == 0; });
}

MultiIndex MultiIndex::plus(const MultiIndex& other) const {
  if (other.dimension() != dimension()) throw std::invalid_argument("MultiIndex::plus: dimension mismatch");
  std::vector<int> c(components_);
  for (size_t j = 0; j < c.size(); ++j) c[j] += other.components_[j];
  return MultiIndex(std::move(c));
}

MultiIndex MultiIndex::plus_unit(int axis) const {
  std::vector<int> c(components_);
  c.at(static_cast<size_t>(axis)) += 1;
  return MultiIndex(std::move(c));
}

std::optional<MultiIndex> MultiIndex::minus_unit(int axis) const {
  if (components_.at(static_cast<size_t>(axis)) == 0) return std::nullopt;
  std::vector<int> c(components_);
  c[static_cast<size_t>(axis)] -= 1;
  return MultiIndex(std::move(c));
}

std::optional<MultiIndex> MultiIndex::minus(const MultiIndex& other) const {
  if (other.dimension() != dimension()) throw std::invalid_argument("MultiIndex::minus: dimension mismatch");
  std::vector<int> c(components_);
  for (size_t j = 0; j < c.size(); ++j) {
    c[j] -= other.components_[j];
    if (c[j] < 0) return std::nullopt;
  }
  return MultiIndex(std::move(c));
}

bool MultiIndex::leq(const MultiIndex& other) const {
  if (other.dimension() != dimension()) throw std::invalid_argument("MultiIndex::leq: dimension mismatch");
  for (size_t j = 0; j < components_.size(); ++j) {
    if (components_[j] > other.components_[j]) return false;
  }
  return true;
}

std::string MultiIndex::to_string() const {
  std::string s;
  for (size_t j = 0; j < components_.size(); ++j) {
    if (j > 0) s += ',';
    s += std::to_string(components_[j]);
  }
  return s;
}

bool graded_lex_less(const MultiIndex& a, const MultiIndex& b) {
  const int da = a.degree(), db = b.degree();
  if (da != db) return da < db;
  return std::lexicographical_compare(a.components().begin(), a.components().end(),
                                      b.components().begin(), b.components().end());
}

DegreeBox::DegreeBox(int dimension, int max_degree) : dimension(dimension), max_degree(max_degree) {
  if (dimension < 1) throw std::invalid_argument("DegreeBox: dimension must be >= 1");
  if (max_degree < 0) throw std::invalid_argument("DegreeBox: max_degree must be >= 0");
}

bool DegreeBox::contains(const MultiIndex& n) const {
  if (n.dimension() != dimension) throw std::invalid_argument("DegreeBox::contains: dimension mismatch");
  return n.degree() <= max_degree;
}

Weight::Weight(BigInt value) : value_(std::move(value)) {
  if (value_ <= 0) throw std::invalid_argument("Weight: value must be positive");
}

double Weight::to_double() const { return value_.convert_to<double>(); }

bool Weight::exact_in_double() const {
  static const BigInt limit = BigInt(1) << 53;
  return value_ <= limit;
}

Weight beta(const MultiIndex& n) {
  BigInt num = 1;
  for (int k = 2; k <= n.degree(); ++k) num *= k;
  for (int j = 0; j < n.dimension(); ++j) {
    for (int k = 2; k <= n[j]; ++k) num /= k;  // exact: |n|!/n! is an integer
  }
  return Weight(num);
}

Weight pascal_sum(const MultiIndex& m) {
  if (m.is_zero()) throw std::invalid_argument("pascal_sum: zero index rejected");
  BigInt sum = 0;
  for (int j = 0; j < m.dimension(); ++j) {
    if (auto prev = m.minus_unit(j)) sum += beta(*prev).value();
  }
  return Weight(sum);
}

namespace {

void compositions_of(int remaining, int axis, std::vector<int>& scratch,
                     std::vector<MultiIndex>& out) {
  const int d = static_cast<int>(scratch.size());
  if (axis == d - 1) {
    scratch[static_cast<size_t>(axis)] = remaining;
    out.emplace_back(scratch);
    return;
  }
  for (int v = 0; v <= remaining; ++v) {
    scratch[static_cast<size_t>(axis)] = v;
    compositions_of(remaining - v, axis + 1, scratch, out);
  }
}

}  // namespace

std::vector<MultiIndex> enumerate_box(const DegreeBox& box) {
  std::vector<MultiIndex> out;
  std::vector<int> scratch(static_cast<size_t>(box.dimension), 0);
  for (int k = 0; k <= box.max_degree; ++k) {
    compositions_of(k, 0, scratch, out);
  }
  return out;
}

}  // namespace dastair
