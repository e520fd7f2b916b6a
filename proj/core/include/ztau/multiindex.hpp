#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ztau/bigfloat.hpp"
#include "ztau/primes.hpp"

namespace ztau {

/// A finitely supported integer sequence n = (n_1, n_2, ...) in Z^inf.
///
/// Stored sparsely as (coordinate, exponent) pairs with 1-based coordinates
/// strictly increasing and no zero exponents, so equality is structural.
/// Coordinate k pairs with the k-th prime in every order-related operation.
class MultiIndex {
 public:
  using Coordinate = std::uint32_t;
  using Exponent = std::int64_t;
  using Entry = std::pair<Coordinate, Exponent>;

  MultiIndex() = default;

  /// Canonicalizes: sorts, merges repeated coordinates, drops zeros.
  static MultiIndex from_entries(std::vector<Entry> entries);
  /// Dense form (n_1, n_2, ...); trailing zeros are optional.
  static MultiIndex from_dense(std::span<const Exponent> dense);
  static MultiIndex from_dense(std::initializer_list<Exponent> dense) {
    return from_dense(std::span<const Exponent>(dense.begin(), dense.size()));
  }
  /// value * delta_k.
  static MultiIndex unit(Coordinate k, Exponent value = 1);

  std::span<const Entry> entries() const { return entries_; }
  bool is_zero() const { return entries_.empty(); }
  std::size_t support_size() const { return entries_.size(); }
  /// Largest coordinate with a nonzero entry; 0 for the zero index.
  Coordinate length() const { return entries_.empty() ? 0 : entries_.back().first; }
  Exponent operator[](Coordinate k) const;

  std::vector<Exponent> to_dense() const;
  /// "[2,-1,1]"; the zero index prints as "[]".
  std::string to_string() const;

  MultiIndex operator-() const;
  friend MultiIndex operator+(const MultiIndex& a, const MultiIndex& b);
  friend MultiIndex operator-(const MultiIndex& a, const MultiIndex& b) { return a + (-b); }
  friend bool operator==(const MultiIndex&, const MultiIndex&) = default;

 private:
  std::vector<Entry> entries_;
};

/// Storage order for associative containers. Deterministic but unrelated to
/// the tau order; use compare() for that.
struct StructuralLess {
  bool operator()(const MultiIndex& a, const MultiIndex& b) const {
    return std::lexicographical_compare(a.entries().begin(), a.entries().end(),
                                        b.entries().begin(), b.entries().end());
  }
};

struct MultiIndexHash {
  std::size_t operator()(const MultiIndex& n) const noexcept;
};

/// Exact positive rational num/den in lowest terms.
class OrdinalRational {
 public:
  OrdinalRational() : num_(1), den_(1) {}
  /// Reduces to lowest terms; throws NonPositiveRational unless num/den > 0.
  OrdinalRational(mpz_class num, mpz_class den);

  const mpz_class& num() const { return num_; }
  const mpz_class& den() const { return den_; }
  bool is_integer() const { return den_ == 1; }
  bool is_one() const { return num_ == 1 && den_ == 1; }
  OrdinalRational inverse() const;
  /// "20/3", or "7" when the denominator is 1.
  std::string to_string() const;
  /// Parses "a/b" or "a".
  static OrdinalRational parse(const std::string& text);

  friend OrdinalRational operator*(const OrdinalRational& a, const OrdinalRational& b);
  friend bool operator==(const OrdinalRational& a, const OrdinalRational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const OrdinalRational& a, const OrdinalRational& b);

 private:
  mpz_class num_;
  mpz_class den_;
};

/// The rational q = prod p_k^{n_k}, so that log q = tau(n) = sum n_k log p_k.
OrdinalRational ordinal(const MultiIndex& n);

/// Total order on Z^inf by tau, decided exactly by integer cross-multiplication.
std::strong_ordering compare(const MultiIndex& n, const MultiIndex& m);

/// n if tau(n) >= 0, else -n.
MultiIndex abs_index(const MultiIndex& n);

enum class IndexClass {
  InZplus,         // every coordinate >= 0
  InZtauPlusOnly,  // tau(n) >= 0 but some coordinate < 0
  Negative,        // tau(n) < 0
};

IndexClass classify(const MultiIndex& n);
bool in_zplus(const MultiIndex& n);

struct TauEstimate {
  BigFloat value;
  /// Absolute error bound on value; 0 when the result is exact.
  double abs_error;
};

/// tau(n) = log(num/den) at precision_bits (>= 53), computed through log1p of
/// the exact difference num - den when q is within a factor 2 of 1, so the
/// sign is always right. Reported bound: abs_error <= 2^{2-precision}*|tau|.
TauEstimate tau_float(const MultiIndex& n, int precision_bits = 128);

/// tau(n) rounded to double through a 128-bit evaluation.
double tau(const MultiIndex& n);

/// Inverse of ordinal(): factors num and den by trial division against the
/// primes below prime_bound. Throws NonPositiveRational for q <= 0 and
/// FactorizationLimit when a prime factor is not below prime_bound.
MultiIndex from_positive_rational(const mpz_class& num, const mpz_class& den,
                                  std::uint64_t prime_bound = primes::kDefaultPrimeBound);
MultiIndex from_positive_rational(const OrdinalRational& q,
                                  std::uint64_t prime_bound = primes::kDefaultPrimeBound);

}  // namespace ztau
