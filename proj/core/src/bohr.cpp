#include "ztau/bohr.hpp"

#include <algorithm>
#include <cmath>

#include "ztau/error.hpp"

namespace ztau {

void DirichletSeries::add_term(const OrdinalRational& q, Complex b) {
  if (q.num() < q.den())
    throw Error(ErrorCode::NotAnalytic, "Dirichlet frequency " + q.to_string() + " is below 1");
  if (b == Complex{}) return;
  auto [it, inserted] = terms_.try_emplace(q, b);
  if (!inserted) {
    it->second += b;
    if (it->second == Complex{}) terms_.erase(it);
  }
}

Complex DirichletSeries::coefficient(const OrdinalRational& q) const {
  auto it = terms_.find(q);
  return it == terms_.end() ? Complex{} : it->second;
}

DirichletSeries to_dirichlet(const FourierSeries& f) {
  DirichletSeries d;
  for (const auto& [n, a] : f.terms()) {
    OrdinalRational q = ordinal(n);
    if (q.num() < q.den())
      throw Error(ErrorCode::NotAnalytic,
                  "index " + n.to_string() + " has negative ordinal log(" + q.to_string() + ")");
    d.add_term(q, a);
  }
  return d;
}

FourierSeries from_dirichlet(const DirichletSeries& d, std::uint64_t prime_bound) {
  FourierSeries f;
  for (const auto& [q, b] : d.terms()) f.add_term(from_positive_rational(q, prime_bound), b);
  return f;
}

Complex evaluate_halfplane(const DirichletSeries& d, double sigma, double t, int precision_bits) {
  if (std::isinf(sigma)) return d.coefficient(OrdinalRational{});
  if (!(sigma >= 0.0)) throw Error(ErrorCode::InvalidArgument, "half-plane evaluation needs sigma >= 0");

  const mpfr_prec_t bits = precision_bits;
  BigFloat log_q(bits), num(bits), scratch(bits), two_pi(bits);
  mpfr_const_pi(two_pi.get(), MPFR_RNDN);
  mpfr_mul_2ui(two_pi.get(), two_pi.get(), 1, MPFR_RNDN);

  Complex sum{};
  for (const auto& [q, b] : d.terms()) {
    if (q.is_one()) {
      sum += b;
      continue;
    }
    mpfr_set_z(num.get(), q.num().get_mpz_t(), MPFR_RNDN);
    mpfr_set_z(scratch.get(), q.den().get_mpz_t(), MPFR_RNDN);
    mpfr_div(log_q.get(), num.get(), scratch.get(), MPFR_RNDN);
    mpfr_log(log_q.get(), log_q.get(), MPFR_RNDN);

    mpfr_mul_d(scratch.get(), log_q.get(), -sigma, MPFR_RNDN);
    mpfr_exp(scratch.get(), scratch.get(), MPFR_RNDN);
    const double modulus = scratch.to_double();

    mpfr_mul_d(scratch.get(), log_q.get(), -t, MPFR_RNDN);
    mpfr_remainder(scratch.get(), scratch.get(), two_pi.get(), MPFR_RNDN);
    sum += b * std::polar(modulus, scratch.to_double());
  }
  return sum;
}

bool is_classical(const DirichletSeries& d) {
  return std::all_of(d.terms().begin(), d.terms().end(),
                     [](const auto& term) { return term.first.is_integer(); });
}

}  // namespace ztau
