#pragma once

#include "affmon/scalar.hpp"

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace affmon {

/// An element of N0 ∪ {∞}. Infinity is a tag, never a sentinel value.
class ExtNat {
 public:
  ExtNat() = default;
  ExtNat(Integer value);  // NOLINT(google-explicit-constructor)
  ExtNat(long value) : ExtNat(Integer(value)) {}  // NOLINT(google-explicit-constructor)
  ExtNat(int value) : ExtNat(Integer(value)) {}   // NOLINT(google-explicit-constructor)

  static ExtNat infinity() {
    ExtNat x;
    x.infinite_ = true;
    return x;
  }

  bool is_infinite() const { return infinite_; }
  bool is_finite() const { return !infinite_; }
  bool is_zero() const { return !infinite_ && value_ == 0; }

  /// Finite value; throws std::domain_error on ∞.
  const Integer& value() const;

  ExtNat& operator+=(const ExtNat& other);
  friend ExtNat operator+(ExtNat a, const ExtNat& b) { return a += b; }

  /// Scaling by a nonnegative integer with 0·∞ = 0.
  friend ExtNat operator*(const Integer& c, const ExtNat& x);

  /// True when the value lies in m·N0*, i.e. it is ∞ or a finite multiple of m.
  bool in_multiples_of(const Integer& m) const;

  friend bool operator==(const ExtNat& a, const ExtNat& b) {
    return a.infinite_ == b.infinite_ && (a.infinite_ || a.value_ == b.value_);
  }
  friend std::strong_ordering operator<=>(const ExtNat& a, const ExtNat& b);

  /// Decimal digits, or `inf`.
  std::string to_string() const;
  static ExtNat parse(std::string_view token);

 private:
  bool infinite_ = false;
  Integer value_ = 0;
};

std::ostream& operator<<(std::ostream& os, const ExtNat& x);

/// Sorted, duplicate-free list of 0-based coordinate indices. Ordering of
/// index sets is lexicographic on the sorted lists.
using IndexSet = std::vector<std::size_t>;

IndexSet make_index_set(std::vector<std::size_t> items);
IndexSet full_index_set(std::size_t k);
bool contains(const IndexSet& s, std::size_t i);
bool is_subset(const IndexSet& a, const IndexSet& b);
IndexSet set_union(const IndexSet& a, const IndexSet& b);
IndexSet set_difference(const IndexSet& a, const IndexSet& b);
IndexSet complement(const IndexSet& s, std::size_t k);
IndexSet index_set_from_mask(unsigned long mask, std::size_t k);
/// Rendered with 1-based indices, e.g. `{1,3}`; the empty set is `{}`.
std::string to_string(const IndexSet& s);
/// Parses a comma-joined list of 1-based indices (braces optional).
IndexSet parse_index_set(std::string_view text, std::size_t k);

/// A vector of (N0*)^k.
class DimVector {
 public:
  DimVector() = default;
  explicit DimVector(std::size_t k) : entries_(k) {}
  DimVector(std::initializer_list<ExtNat> entries) : entries_(entries) {}
  explicit DimVector(std::vector<ExtNat> entries) : entries_(std::move(entries)) {}
  static DimVector from_integers(const IntVector& v);

  std::size_t size() const { return entries_.size(); }
  const ExtNat& operator[](std::size_t i) const { return entries_[i]; }
  ExtNat& operator[](std::size_t i) { return entries_[i]; }
  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }

  bool is_finite() const;
  /// Finite entries as an integer vector; throws if some entry is ∞.
  IntVector to_integers() const;

  DimVector& operator+=(const DimVector& other);
  friend DimVector operator+(DimVector a, const DimVector& b) { return a += b; }
  friend bool operator==(const DimVector& a, const DimVector& b) = default;
  /// Lexicographic with ∞ above every finite value (enumeration order).
  friend auto operator<=>(const DimVector& a, const DimVector& b) {
    return a.entries_ <=> b.entries_;
  }

  /// Space separated tokens, e.g. `2 inf 0`.
  std::string to_string() const;
  static DimVector parse(std::string_view text);

 private:
  std::vector<ExtNat> entries_;
};

std::ostream& operator<<(std::ostream& os, const DimVector& x);

void require_same_size(std::size_t expected, std::size_t actual, const char* what);

/// Σ row_i · x_i under the conventions ∞·0 = 0, ∞·n = ∞ (n > 0).
template <class Derived>
ExtNat dot(const Eigen::MatrixBase<Derived>& row, const DimVector& x) {
  require_same_size(static_cast<std::size_t>(row.size()), x.size(), "dot");
  ExtNat sum;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const Integer c = row(static_cast<Eigen::Index>(i));
    if (c < 0) throw std::invalid_argument("dot: negative coefficient");
    sum += c * x[i];
  }
  return sum;
}

struct SupportData {
  IndexSet support;
  IndexSet infinite_support;
};

SupportData support_data(const DimVector& x);
IndexSet support(const DimVector& x);
IndexSet infinite_support(const DimVector& x);

/// x*: ∞ on the infinite support of x, 0 elsewhere.
DimVector star(const DimVector& x);
/// ∞·x: ∞ wherever x is nonzero.
DimVector inf_scale(const DimVector& x);
/// The vector that is ∞ on `pattern` and 0 elsewhere.
DimVector pattern_vector(std::size_t k, const IndexSet& pattern);

/// Componentwise order of (N0*)^k.
bool componentwise_leq(const DimVector& a, const DimVector& b);

/// Drops the coordinates listed in `removed` (the projection p_I).
DimVector project_out(const DimVector& x, const IndexSet& removed);
IntVector project_out(const IntVector& x, const IndexSet& removed);
/// Drops the columns listed in `removed`.
IntMatrix drop_columns(const IntMatrix& m, const IndexSet& removed);
/// Inverse of drop_columns: re-inserts zero columns at `inserted`.
IntMatrix insert_zero_columns(const IntMatrix& m, const IndexSet& inserted, std::size_t k);

}  // namespace affmon
