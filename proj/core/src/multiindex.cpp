#include "ztau/multiindex.hpp"

#include <cmath>
#include <functional>
#include <sstream>

#include "ztau/error.hpp"

namespace ztau {

MultiIndex MultiIndex::from_entries(std::vector<Entry> entries) {
  std::sort(entries.begin(), entries.end(),
            [](const Entry& a, const Entry& b) { return a.first < b.first; });
  MultiIndex out;
  for (const auto& [k, v] : entries) {
    if (k == 0) throw Error(ErrorCode::InvalidArgument, "multi-index coordinates are 1-based");
    if (!out.entries_.empty() && out.entries_.back().first == k) {
      out.entries_.back().second += v;
    } else {
      out.entries_.emplace_back(k, v);
    }
  }
  std::erase_if(out.entries_, [](const Entry& e) { return e.second == 0; });
  return out;
}

MultiIndex MultiIndex::from_dense(std::span<const Exponent> dense) {
  MultiIndex out;
  for (std::size_t i = 0; i < dense.size(); ++i)
    if (dense[i] != 0) out.entries_.emplace_back(static_cast<Coordinate>(i + 1), dense[i]);
  return out;
}

MultiIndex MultiIndex::unit(Coordinate k, Exponent value) {
  return from_entries({{k, value}});
}

MultiIndex::Exponent MultiIndex::operator[](Coordinate k) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), k,
                             [](const Entry& e, Coordinate c) { return e.first < c; });
  return (it != entries_.end() && it->first == k) ? it->second : 0;
}

std::vector<MultiIndex::Exponent> MultiIndex::to_dense() const {
  std::vector<Exponent> dense(length(), 0);
  for (const auto& [k, v] : entries_) dense[k - 1] = v;
  return dense;
}

std::string MultiIndex::to_string() const {
  std::ostringstream os;
  os << '[';
  auto dense = to_dense();
  for (std::size_t i = 0; i < dense.size(); ++i) os << (i ? "," : "") << dense[i];
  os << ']';
  return os.str();
}

MultiIndex MultiIndex::operator-() const {
  MultiIndex out = *this;
  for (auto& e : out.entries_) e.second = -e.second;
  return out;
}

MultiIndex operator+(const MultiIndex& a, const MultiIndex& b) {
  MultiIndex out;
  auto& dst = out.entries_;
  dst.reserve(a.entries_.size() + b.entries_.size());
  auto i = a.entries_.begin();
  auto j = b.entries_.begin();
  while (i != a.entries_.end() || j != b.entries_.end()) {
    if (j == b.entries_.end() || (i != a.entries_.end() && i->first < j->first)) {
      dst.push_back(*i++);
    } else if (i == a.entries_.end() || j->first < i->first) {
      dst.push_back(*j++);
    } else {
      if (auto s = i->second + j->second; s != 0) dst.emplace_back(i->first, s);
      ++i;
      ++j;
    }
  }
  return out;
}

std::size_t MultiIndexHash::operator()(const MultiIndex& n) const noexcept {
  std::size_t h = 0xcbf29ce484222325ull;
  for (const auto& [k, v] : n.entries()) {
    h ^= std::hash<std::uint64_t>{}((static_cast<std::uint64_t>(k) << 40) ^
                                    static_cast<std::uint64_t>(v));
    h *= 0x100000001b3ull;
  }
  return h;
}

// ---------------------------------------------------------------------------

OrdinalRational::OrdinalRational(mpz_class num, mpz_class den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_ == 0 || sgn(num_) * sgn(den_) <= 0)
    throw Error(ErrorCode::NonPositiveRational,
                "ordinal rational must be positive, got " + num_.get_str() + "/" + den_.get_str());
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  mpz_class g = gcd(num_, den_);
  if (g != 1) {
    num_ /= g;
    den_ /= g;
  }
}

OrdinalRational OrdinalRational::inverse() const {
  OrdinalRational out;
  out.num_ = den_;
  out.den_ = num_;
  return out;
}

std::string OrdinalRational::to_string() const {
  return den_ == 1 ? num_.get_str() : num_.get_str() + "/" + den_.get_str();
}

OrdinalRational OrdinalRational::parse(const std::string& text) {
  auto slash = text.find('/');
  try {
    mpz_class num(text.substr(0, slash));
    mpz_class den = slash == std::string::npos ? mpz_class(1) : mpz_class(text.substr(slash + 1));
    return OrdinalRational(num, den);
  } catch (const std::invalid_argument&) {
    throw Error(ErrorCode::ParseError, "not a rational: '" + text + "'");
  }
}

OrdinalRational operator*(const OrdinalRational& a, const OrdinalRational& b) {
  return OrdinalRational(a.num_ * b.num_, a.den_ * b.den_);
}

std::strong_ordering operator<=>(const OrdinalRational& a, const OrdinalRational& b) {
  int c = cmp(a.num_ * b.den_, b.num_ * a.den_);
  return c < 0 ? std::strong_ordering::less
               : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

// ---------------------------------------------------------------------------

namespace {

mpz_class prime_power(MultiIndex::Coordinate k, std::uint64_t e) {
  mpz_class out;
  mpz_class p(static_cast<unsigned long>(primes::nth_prime(k)));
  mpz_pow_ui(out.get_mpz_t(), p.get_mpz_t(), e);
  return out;
}

}  // namespace

OrdinalRational ordinal(const MultiIndex& n) {
  mpz_class num = 1;
  mpz_class den = 1;
  for (const auto& [k, v] : n.entries()) {
    if (v > 0) {
      num *= prime_power(k, static_cast<std::uint64_t>(v));
    } else {
      den *= prime_power(k, static_cast<std::uint64_t>(-v));
    }
  }
  // Distinct primes: already coprime.
  return OrdinalRational(std::move(num), std::move(den));
}

std::strong_ordering compare(const MultiIndex& n, const MultiIndex& m) {
  if (n == m) return std::strong_ordering::equal;
  // ordinal(n)/ordinal(m) = ordinal(n - m); common prime factors cancel.
  OrdinalRational q = ordinal(n - m);
  int c = cmp(q.num(), q.den());
  return c < 0 ? std::strong_ordering::less
               : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

MultiIndex abs_index(const MultiIndex& n) {
  return compare(n, MultiIndex{}) == std::strong_ordering::less ? -n : n;
}

bool in_zplus(const MultiIndex& n) {
  return std::all_of(n.entries().begin(), n.entries().end(),
                     [](const MultiIndex::Entry& e) { return e.second > 0; });
}

IndexClass classify(const MultiIndex& n) {
  if (in_zplus(n)) return IndexClass::InZplus;
  return compare(n, MultiIndex{}) == std::strong_ordering::less ? IndexClass::Negative
                                                                : IndexClass::InZtauPlusOnly;
}

TauEstimate tau_float(const MultiIndex& n, int precision_bits) {
  if (precision_bits < 53)
    throw Error(ErrorCode::InvalidArgument, "tau_float needs at least 53 bits of precision");
  TauEstimate out{BigFloat(precision_bits), 0.0};
  if (n.is_zero()) return out;

  OrdinalRational q = ordinal(n);
  const mpfr_prec_t work = precision_bits + 16;
  BigFloat x(work);
  BigFloat y(work);
  const bool near_one = q.num() <= 2 * q.den() && q.den() <= 2 * q.num();
  if (near_one) {
    mpz_class diff = q.num() - q.den();
    mpfr_set_z(x.get(), diff.get_mpz_t(), MPFR_RNDN);
    mpfr_set_z(y.get(), q.den().get_mpz_t(), MPFR_RNDN);
    mpfr_div(x.get(), x.get(), y.get(), MPFR_RNDN);
    mpfr_log1p(x.get(), x.get(), MPFR_RNDN);
  } else {
    mpfr_set_z(x.get(), q.num().get_mpz_t(), MPFR_RNDN);
    mpfr_set_z(y.get(), q.den().get_mpz_t(), MPFR_RNDN);
    mpfr_div(x.get(), x.get(), y.get(), MPFR_RNDN);
    mpfr_log(x.get(), x.get(), MPFR_RNDN);
  }
  mpfr_set(out.value.get(), x.get(), MPFR_RNDN);
  out.abs_error = std::ldexp(std::fabs(out.value.to_double()), 2 - precision_bits);
  return out;
}

double tau(const MultiIndex& n) {
  return n.is_zero() ? 0.0 : tau_float(n, 128).value.to_double();
}

MultiIndex from_positive_rational(const mpz_class& num_in, const mpz_class& den_in,
                                  std::uint64_t prime_bound) {
  OrdinalRational q(num_in, den_in);
  mpz_class num = q.num();
  mpz_class den = q.den();
  std::vector<MultiIndex::Entry> entries;

  auto record_prime = [&](const mpz_class& p, MultiIndex::Exponent sign) {
    if (p >= prime_bound || !p.fits_ulong_p())
      throw Error(ErrorCode::FactorizationLimit,
                  "prime factor " + p.get_str() + " is beyond the factorization bound");
    auto k = primes::prime_index(p.get_ui());
    entries.emplace_back(static_cast<MultiIndex::Coordinate>(*k), sign);
  };

  mpz_class p_z;
  for (std::size_t k = 1; num > 1 || den > 1; ++k) {
    const std::uint64_t p = primes::nth_prime(k);
    if (p >= prime_bound) {
      throw Error(ErrorCode::FactorizationLimit,
                  "unfactored cofactor " + (num > 1 ? num : den).get_str() +
                      " has no prime factor below " + std::to_string(prime_bound));
    }
    p_z = static_cast<unsigned long>(p);
    for (auto [part, sign] : {std::pair<mpz_class*, int>{&num, 1}, {&den, -1}}) {
      if (*part == 1) continue;
      if (p_z * p_z > *part) {
        record_prime(*part, sign);
        *part = 1;
        continue;
      }
      auto e = mpz_remove(part->get_mpz_t(), part->get_mpz_t(), p_z.get_mpz_t());
      if (e) entries.emplace_back(static_cast<MultiIndex::Coordinate>(k),
                                  sign * static_cast<MultiIndex::Exponent>(e));
    }
  }
  return MultiIndex::from_entries(std::move(entries));
}

MultiIndex from_positive_rational(const OrdinalRational& q, std::uint64_t prime_bound) {
  return from_positive_rational(q.num(), q.den(), prime_bound);
}

}  // namespace ztau
