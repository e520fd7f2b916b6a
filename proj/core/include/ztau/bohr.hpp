#pragma once

#include <map>

#include "ztau/series.hpp"

namespace ztau {

/// Finite general Dirichlet series sum b_q q^{-s} over rationals q >= 1.
/// Frequencies are kept as exact rationals so that terms merge exactly.
class DirichletSeries {
 public:
  using Terms = std::map<OrdinalRational, Complex>;

  /// Throws NotAnalytic when q < 1.
  void add_term(const OrdinalRational& q, Complex b);
  Complex coefficient(const OrdinalRational& q) const;

  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }

  friend bool operator==(const DirichletSeries&, const DirichletSeries&) = default;

 private:
  Terms terms_;
};

/// Bohr transform: b_{q} = a_n with q = ordinal(n). Throws NotAnalytic
/// naming the first index with tau(n) < 0.
DirichletSeries to_dirichlet(const FourierSeries& f);

/// Inverse transform by prime factorization of each frequency.
FourierSeries from_dirichlet(const DirichletSeries& d,
                             std::uint64_t prime_bound = primes::kDefaultPrimeBound);

/// sum b_q q^{-sigma} e^{-i t log q} with log q at precision_bits;
/// sigma = +inf gives b_1.
Complex evaluate_halfplane(const DirichletSeries& d, double sigma, double t,
                           int precision_bits = 128);

/// True iff every frequency is an integer (the classical case).
bool is_classical(const DirichletSeries& d);

}  // namespace ztau
