#pragma once

// Ground sets, subsets as bitmasks, and exact-rational vectors over the three
// index families used throughout the library:
//
//   fam    pairs (a|B) with a in N, B nonempty subset of N\{a}
//   cai    subsets S of N with |S| >= 2
//   power  all subsets of N
//
// Reads outside an index family return zero (the extension conventions): a
// family vector reads 0 at (b|{}), a characteristic vector reads 0 at sets of
// size <= 1.

#include <bit>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace bnpoly {

using Rational = mpq_class;
using Integer = mpz_class;

inline constexpr int kMaxNodes = 16;

/// Subset of a ground set, stored as a membership mask over the canonical label order.
class Subset {
 public:
  constexpr Subset() = default;
  constexpr explicit Subset(std::uint32_t mask) : mask_(mask) {}

  static constexpr Subset singleton(int node) { return Subset(std::uint32_t{1} << node); }
  static constexpr Subset full(int n) { return Subset((std::uint32_t{1} << n) - 1); }

  constexpr std::uint32_t mask() const { return mask_; }
  constexpr bool empty() const { return mask_ == 0; }
  constexpr int size() const { return std::popcount(mask_); }
  constexpr bool contains(int node) const { return (mask_ >> node) & 1u; }
  constexpr bool is_subset_of(Subset other) const { return (mask_ & ~other.mask_) == 0; }

  constexpr Subset with(int node) const { return Subset(mask_ | (std::uint32_t{1} << node)); }
  constexpr Subset without(int node) const { return Subset(mask_ & ~(std::uint32_t{1} << node)); }

  friend constexpr Subset operator|(Subset x, Subset y) { return Subset(x.mask_ | y.mask_); }
  friend constexpr Subset operator&(Subset x, Subset y) { return Subset(x.mask_ & y.mask_); }
  /// Set difference.
  friend constexpr Subset operator-(Subset x, Subset y) { return Subset(x.mask_ & ~y.mask_); }

  friend constexpr bool operator==(Subset, Subset) = default;
  friend constexpr auto operator<=>(Subset, Subset) = default;

  /// Members in ascending order.
  std::vector<int> elements() const;

 private:
  std::uint32_t mask_ = 0;
};

/// Orders subsets by cardinality, then by mask.
struct BySizeThenMask {
  bool operator()(Subset x, Subset y) const {
    if (x.size() != y.size()) return x.size() < y.size();
    return x.mask() < y.mask();
  }
};

/// All subsets of `s`, ascending by mask.
std::vector<Subset> subsets_of(Subset s);

/// Finite, labelled ground set N. Labels are kept sorted; node i is the i-th label.
class GroundSet {
 public:
  explicit GroundSet(std::vector<std::string> labels);

  /// The ground set {a, b, c, ...} of size n.
  static GroundSet letters(int n);

  int size() const { return static_cast<int>(labels_.size()); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int node) const { return labels_.at(static_cast<std::size_t>(node)); }
  std::optional<int> index_of(std::string_view label) const;
  Subset full() const { return Subset::full(size()); }

  /// "abc" for single-character labels, "x1,x2" otherwise. The empty set formats as "".
  std::string format(Subset s) const;
  Subset parse_subset(std::string_view text) const;

  friend bool operator==(const GroundSet&, const GroundSet&) = default;

 private:
  std::vector<std::string> labels_;
  bool single_char_ = true;
};

/// Index (a|B) of a family variable.
struct FamilyIndex {
  int node = 0;
  Subset parents;

  friend constexpr bool operator==(const FamilyIndex&, const FamilyIndex&) = default;
  friend constexpr auto operator<=>(const FamilyIndex&, const FamilyIndex&) = default;
};

enum class IndexFamily { fam, cai, power_set };

const char* to_string(IndexFamily family);

/// The family-variable index set, ordered by node then parent mask. Size n(2^(n-1)-1).
std::vector<FamilyIndex> enumerate_family_indices(int n);
inline std::vector<FamilyIndex> enumerate_family_indices(const GroundSet& gs) {
  return enumerate_family_indices(gs.size());
}

/// Subsets of size >= 2 ascending by cardinality then mask. Size 2^n - n - 1.
std::vector<Subset> enumerate_cai(int n);
inline std::vector<Subset> enumerate_cai(const GroundSet& gs) { return enumerate_cai(gs.size()); }

/// All subsets ascending by mask.
std::vector<Subset> enumerate_power_set(int n);

std::string format_family_index(const GroundSet& gs, const FamilyIndex& index);
FamilyIndex parse_family_index(const GroundSet& gs, std::string_view text);

template <class Key>
struct IndexTraits;

template <>
struct IndexTraits<FamilyIndex> {
  static bool in_domain(const FamilyIndex& k, int n) {
    return k.node >= 0 && k.node < n && !k.parents.empty() && !k.parents.contains(k.node) &&
           k.parents.is_subset_of(Subset::full(n));
  }
};

template <>
struct IndexTraits<Subset> {};

/// Sparse exact-rational vector over an index family; absent keys read as zero
/// and zero values are never stored, so equality compares normalized forms.
template <class Key, IndexFamily Family>
class SparseVector {
 public:
  using key_type = Key;
  static constexpr IndexFamily family = Family;

  SparseVector() = default;
  explicit SparseVector(int n) : n_(n) {
    if (n < 1 || n > kMaxNodes) throw std::invalid_argument("ground set size out of range");
  }

  int ground_size() const { return n_; }

  static bool in_domain(const Key& key, int n) {
    if constexpr (Family == IndexFamily::fam) {
      return IndexTraits<FamilyIndex>::in_domain(key, n);
    } else if constexpr (Family == IndexFamily::cai) {
      return key.is_subset_of(Subset::full(n)) && key.size() >= 2;
    } else {
      return key.is_subset_of(Subset::full(n));
    }
  }

  /// Coordinate value; zero outside the index family.
  Rational at(const Key& key) const {
    auto it = coords_.find(key);
    return it == coords_.end() ? Rational(0) : it->second;
  }
  Rational operator[](const Key& key) const { return at(key); }

  void set(const Key& key, const Rational& value) {
    if (!in_domain(key, n_)) {
      if (value == 0) return;
      throw std::invalid_argument("coordinate outside the index family");
    }
    if (value == 0) {
      coords_.erase(key);
    } else {
      coords_[key] = value;
    }
  }

  void add(const Key& key, const Rational& delta) { set(key, at(key) + delta); }

  const std::map<Key, Rational>& nonzeros() const { return coords_; }
  bool is_zero() const { return coords_.empty(); }
  std::size_t support_size() const { return coords_.size(); }

  SparseVector& operator+=(const SparseVector& other) {
    check_same(other);
    for (const auto& [k, v] : other.coords_) add(k, v);
    return *this;
  }
  SparseVector& operator-=(const SparseVector& other) {
    check_same(other);
    for (const auto& [k, v] : other.coords_) add(k, -v);
    return *this;
  }
  SparseVector& operator*=(const Rational& factor) {
    if (factor == 0) {
      coords_.clear();
    } else {
      for (auto& [k, v] : coords_) v *= factor;
    }
    return *this;
  }
  friend SparseVector operator+(SparseVector x, const SparseVector& y) { return x += y; }
  friend SparseVector operator-(SparseVector x, const SparseVector& y) { return x -= y; }
  friend SparseVector operator*(const Rational& f, SparseVector x) { return x *= f; }
  friend SparseVector operator-(SparseVector x) { return x *= Rational(-1); }

  friend bool operator==(const SparseVector& x, const SparseVector& y) {
    return x.n_ == y.n_ && x.coords_ == y.coords_;
  }

  /// Values in the order given by `keys`.
  std::vector<Rational> to_dense(const std::vector<Key>& keys) const {
    std::vector<Rational> out;
    out.reserve(keys.size());
    for (const auto& k : keys) out.push_back(at(k));
    return out;
  }

  static SparseVector from_dense(int n, const std::vector<Key>& keys, const std::vector<Rational>& values) {
    if (keys.size() != values.size()) throw std::invalid_argument("dense vector length mismatch");
    SparseVector v(n);
    for (std::size_t i = 0; i < keys.size(); ++i) v.set(keys[i], values[i]);
    return v;
  }

  void check_same(const SparseVector& other) const {
    if (n_ != other.n_) throw std::invalid_argument("vectors over different ground sets");
  }

 private:
  int n_ = 0;
  std::map<Key, Rational> coords_;
};

using FamVector = SparseVector<FamilyIndex, IndexFamily::fam>;
using CharVector = SparseVector<Subset, IndexFamily::cai>;
using SetFunction = SparseVector<Subset, IndexFamily::power_set>;

/// Exact scalar product over a shared index family.
template <class Key, IndexFamily F>
Rational scalar_product(const SparseVector<Key, F>& x, const SparseVector<Key, F>& y) {
  x.check_same(y);
  const auto& small = x.support_size() <= y.support_size() ? x : y;
  const auto& large = x.support_size() <= y.support_size() ? y : x;
  Rational sum = 0;
  for (const auto& [k, v] : small.nonzeros()) sum += v * large.at(k);
  return sum;
}

/// Dense vector tagged with its index family; the runtime counterpart of the
/// sparse types, used where the family is only known at run time (CLI, files).
struct TaggedVector {
  IndexFamily family = IndexFamily::fam;
  int n = 0;
  std::vector<Rational> values;
};

/// Throws std::invalid_argument on index-family or ground-set mismatch.
Rational scalar_product(const TaggedVector& x, const TaggedVector& y);

/// Restriction of a set function to subsets of size >= 2.
CharVector to_char_vector(const SetFunction& m);
/// Zero extension of a characteristic vector to all subsets.
SetFunction to_set_function(const CharVector& m);

/// Canonical "p/q" (or "p") string.
std::string format_rational(const Rational& q);
Rational parse_rational(std::string_view text);

/// Indicator of a single subset (delta_A) as a set function.
SetFunction delta(int n, Subset a);

}  // namespace bnpoly
