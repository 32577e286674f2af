#pragma once

#include <algorithm>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace agraded {

/// Thrown when an argument violates an operation's contract (mismatched
/// lengths, unit ideal where forbidden, unpointed grading map, ...).
struct input_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline int checked_add(int a, int b) {
  int r = 0;
  if (__builtin_add_overflow(a, b, &r))
    throw std::overflow_error("exponent overflow");
  return r;
}

inline long long checked_addll(long long a, long long b) {
  long long r = 0;
  if (__builtin_add_overflow(a, b, &r))
    throw std::overflow_error("integer overflow");
  return r;
}

inline long long checked_mulll(long long a, long long b) {
  long long r = 0;
  if (__builtin_mul_overflow(a, b, &r))
    throw std::overflow_error("integer overflow");
  return r;
}

/// A subset of the coordinate positions {0,...,n-1}, n <= 64.
/// Used for the face of a standard pair and for supports of exponent vectors.
class Face {
 public:
  Face() = default;
  static Face from_mask(uint64_t bits) {
    Face f;
    f.bits_ = bits;
    return f;
  }
  static Face of(std::initializer_list<int> members) {
    Face f;
    for (int i : members) f = f.with(i);
    return f;
  }
  static Face full(int n) {
    check_index(n == 0 ? 0 : n - 1);
    return from_mask(n >= 64 ? ~uint64_t{0} : ((uint64_t{1} << n) - 1));
  }

  uint64_t mask() const { return bits_; }
  bool empty() const { return bits_ == 0; }
  int size() const { return __builtin_popcountll(bits_); }
  bool contains(int i) const { return (bits_ >> i) & 1; }
  Face with(int i) const {
    check_index(i);
    return from_mask(bits_ | (uint64_t{1} << i));
  }
  Face without(int i) const {
    check_index(i);
    return from_mask(bits_ & ~(uint64_t{1} << i));
  }
  bool subset_of(const Face& o) const { return (bits_ & ~o.bits_) == 0; }
  bool disjoint(const Face& o) const { return (bits_ & o.bits_) == 0; }
  Face intersect(const Face& o) const { return from_mask(bits_ & o.bits_); }
  Face unite(const Face& o) const { return from_mask(bits_ | o.bits_); }
  Face complement_in(int n) const {
    return from_mask(full(n).mask() & ~bits_);
  }

  std::vector<int> members() const {
    std::vector<int> m;
    for (int i = 0; i < 64; ++i)
      if (contains(i)) m.push_back(i);
    return m;
  }

  friend bool operator==(const Face& a, const Face& b) {
    return a.bits_ == b.bits_;
  }
  friend bool operator!=(const Face& a, const Face& b) { return !(a == b); }

  /// Canonical order: compare as sorted index lists, lexicographically.
  friend bool operator<(const Face& a, const Face& b) {
    uint64_t x = a.bits_, y = b.bits_;
    while (x && y) {
      int i = __builtin_ctzll(x), j = __builtin_ctzll(y);
      if (i != j) return i < j;
      x &= x - 1;
      y &= y - 1;
    }
    return !x && y;  // proper prefix comes first
  }

 private:
  static void check_index(int i) {
    if (i < 0 || i >= 64) throw input_error("coordinate index out of range (n <= 64)");
  }
  uint64_t bits_ = 0;
};

/// A point of Z_{>=0}^n: the exponent vector of a monomial in n variables.
/// Immutable after construction; all arithmetic is overflow-checked.
class ExponentVector {
 public:
  ExponentVector() = default;
  explicit ExponentVector(std::vector<int> coords) : c_(std::move(coords)) {
    if (c_.size() > 64) throw input_error("at most 64 variables supported");
    for (int v : c_)
      if (v < 0) throw input_error("exponents must be nonnegative");
  }
  static ExponentVector zero(int n) {
    return ExponentVector(std::vector<int>(static_cast<size_t>(n), 0));
  }
  static ExponentVector unit(int n, int i, int e = 1) {
    std::vector<int> c(static_cast<size_t>(n), 0);
    c.at(static_cast<size_t>(i)) = e;
    return ExponentVector(std::move(c));
  }

  int size() const { return static_cast<int>(c_.size()); }
  int operator[](int i) const { return c_[static_cast<size_t>(i)]; }
  const std::vector<int>& coords() const { return c_; }

  bool is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](int v) { return v == 0; });
  }

  int total_degree() const {
    int s = 0;
    for (int v : c_) s = checked_add(s, v);
    return s;
  }

  Face support() const {
    Face f;
    for (int i = 0; i < size(); ++i)
      if (c_[static_cast<size_t>(i)] > 0) f = f.with(i);
    return f;
  }

  ExponentVector operator+(const ExponentVector& o) const {
    require_same_length(o);
    std::vector<int> r(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) r[i] = checked_add(c_[i], o.c_[i]);
    return ExponentVector(std::move(r));
  }

  /// Componentwise <=, i.e. x^this divides x^a.
  bool divides(const ExponentVector& a) const {
    require_same_length(a);
    for (size_t i = 0; i < c_.size(); ++i)
      if (c_[i] > a.c_[i]) return false;
    return true;
  }

  ExponentVector with_coord(int i, int v) const {
    std::vector<int> r = c_;
    r.at(static_cast<size_t>(i)) = v;
    return ExponentVector(std::move(r));
  }

  void require_same_length(const ExponentVector& o) const {
    if (size() != o.size())
      throw input_error("exponent vectors of mixed lengths");
  }

  friend bool operator==(const ExponentVector& a, const ExponentVector& b) {
    return a.c_ == b.c_;
  }
  friend bool operator!=(const ExponentVector& a, const ExponentVector& b) {
    return !(a == b);
  }
  /// Canonical order: length, then lexicographic on coordinates.
  friend bool operator<(const ExponentVector& a, const ExponentVector& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.c_ < b.c_;
  }

  friend std::ostream& operator<<(std::ostream& os, const ExponentVector& a) {
    os << '(';
    for (int i = 0; i < a.size(); ++i) os << (i ? "," : "") << a[i];
    return os << ')';
  }

 private:
  std::vector<int> c_;
};

/// Graded lexicographic comparison: total degree first, then lex.
/// Fixes the canonical orientation of pure-difference binomials.
inline bool grlex_less(const ExponentVector& a, const ExponentVector& b) {
  a.require_same_length(b);
  int da = a.total_degree(), db = b.total_degree();
  if (da != db) return da < db;
  return a.coords() < b.coords();
}

/// Iterate every lattice point 0 <= a <= box (componentwise).
/// The callback may return void, or bool where `false` stops the sweep.
template <typename F>
void for_each_point(const ExponentVector& box, F&& f) {
  const int n = box.size();
  std::vector<int> a(static_cast<size_t>(n), 0);
  while (true) {
    if constexpr (std::is_same_v<decltype(f(a)), bool>) {
      if (!f(static_cast<const std::vector<int>&>(a))) return;
    } else {
      f(static_cast<const std::vector<int>&>(a));
    }
    int i = 0;
    while (i < n) {
      if (a[static_cast<size_t>(i)] < box[i]) {
        ++a[static_cast<size_t>(i)];
        std::fill(a.begin(), a.begin() + i, 0);
        break;
      }
      ++i;
    }
    if (i == n) return;
  }
}

inline std::vector<std::string> default_variable_names(int n) {
  std::vector<std::string> names;
  names.reserve(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) names.push_back("x" + std::to_string(i + 1));
  return names;
}

/// A monomial ideal, stored by its unique minimal generating set (an
/// antichain under componentwise <=). The zero ideal has no generators;
/// the unit ideal is generated by the zero vector.
class MonomialIdeal {
 public:
  MonomialIdeal(int n, std::vector<ExponentVector> gens,
                std::vector<std::string> names = {})
      : n_(n), names_(std::move(names)) {
    if (n < 0 || n > 64) throw input_error("variable count out of range");
    if (names_.empty()) names_ = default_variable_names(n);
    if (static_cast<int>(names_.size()) != n)
      throw input_error("variable name count does not match n");
    for (const auto& g : gens)
      if (g.size() != n) throw input_error("generator length does not match n");
    gens_ = minimal_subset(std::move(gens));
  }

  /// The unique minimal generating set of the ideal generated by `gens`.
  static MonomialIdeal minimalize(int n, std::vector<ExponentVector> gens,
                                  std::vector<std::string> names = {}) {
    return MonomialIdeal(n, std::move(gens), std::move(names));
  }

  int var_count() const { return n_; }
  const std::vector<std::string>& variable_names() const { return names_; }
  const std::vector<ExponentVector>& generators() const { return gens_; }

  bool is_zero_ideal() const { return gens_.empty(); }
  bool is_unit_ideal() const {
    return gens_.size() == 1 && gens_.front().is_zero();
  }

  /// Membership of the monomial x^a: some generator divides it.
  bool contains(const ExponentVector& a) const {
    if (a.size() != n_) throw input_error("exponent vector length does not match ideal");
    for (const auto& g : gens_)
      if (g.divides(a)) return true;
    return false;
  }

  /// Componentwise maximum of the generators (zero for variables absent
  /// from every generator). Bounds the staircase of the ideal.
  ExponentVector staircase_bounds() const {
    std::vector<int> d(static_cast<size_t>(n_), 0);
    for (const auto& g : gens_)
      for (int i = 0; i < n_; ++i)
        d[static_cast<size_t>(i)] = std::max(d[static_cast<size_t>(i)], g[i]);
    return ExponentVector(std::move(d));
  }

  /// Identity is positional; display names are I/O-only.
  friend bool operator==(const MonomialIdeal& a, const MonomialIdeal& b) {
    return a.n_ == b.n_ && a.gens_ == b.gens_;
  }
  friend bool operator!=(const MonomialIdeal& a, const MonomialIdeal& b) {
    return !(a == b);
  }

 private:
  static std::vector<ExponentVector> minimal_subset(std::vector<ExponentVector> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    std::vector<ExponentVector> out;
    for (size_t i = 0; i < v.size(); ++i) {
      bool divisible = false;
      for (size_t j = 0; j < v.size() && !divisible; ++j)
        if (j != i && v[j].divides(v[i])) divisible = true;
      if (!divisible) out.push_back(v[i]);
    }
    return out;
  }

  int n_ = 0;
  std::vector<std::string> names_;
  std::vector<ExponentVector> gens_;
};

}  // namespace agraded
