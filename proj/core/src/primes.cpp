#include "ztau/primes.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <shared_mutex>
#include <vector>

#include "ztau/error.hpp"

namespace ztau::primes {
namespace {

class PrimeTable {
 public:
  PrimeTable() { extend_locked(1024); }

  std::uint64_t nth(std::size_t k) {
    {
      std::shared_lock lock(mutex_);
      if (k <= primes_.size()) return primes_[k - 1];
    }
    std::unique_lock lock(mutex_);
    while (primes_.size() < k) extend_locked(limit_ * 2);
    return primes_[k - 1];
  }

  std::optional<std::size_t> index_of(std::uint64_t p) {
    {
      std::shared_lock lock(mutex_);
      if (p < limit_) return search(p);
    }
    std::unique_lock lock(mutex_);
    if (p >= limit_) extend_locked(std::max(limit_ * 2, p + 1));
    return search(p);
  }

  std::size_t size() {
    std::shared_lock lock(mutex_);
    return primes_.size();
  }

 private:
  std::optional<std::size_t> search(std::uint64_t p) const {
    auto it = std::lower_bound(primes_.begin(), primes_.end(), p);
    if (it == primes_.end() || *it != p) return std::nullopt;
    return static_cast<std::size_t>(it - primes_.begin()) + 1;
  }

  // Sieves [limit_, new_limit) using the base primes already in the table.
  void extend_locked(std::uint64_t new_limit) {
    if (new_limit <= limit_) return;
    auto root = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(new_limit))) + 1;
    if (root >= limit_ && limit_ > 2) extend_locked(root + 1);

    const std::uint64_t lo = std::max<std::uint64_t>(limit_, 2);
    std::vector<bool> composite(new_limit - lo, false);
    auto mark = [&](std::uint64_t p) {
      std::uint64_t start = std::max(p * p, (lo + p - 1) / p * p);
      for (std::uint64_t m = start; m < new_limit; m += p) composite[m - lo] = true;
    };
    if (primes_.empty()) {
      // Bootstrap: plain sieve over [2, new_limit).
      for (std::uint64_t i = lo; i * i < new_limit; ++i)
        if (!composite[i - lo]) mark(i);
    } else {
      for (std::uint64_t p : primes_) {
        if (p * p >= new_limit) break;
        mark(p);
      }
    }
    for (std::uint64_t i = lo; i < new_limit; ++i)
      if (!composite[i - lo]) primes_.push_back(i);
    limit_ = new_limit;
  }

  std::shared_mutex mutex_;
  std::vector<std::uint64_t> primes_;
  std::uint64_t limit_ = 0;
};

PrimeTable& table() {
  static PrimeTable instance;
  return instance;
}

}  // namespace

std::uint64_t nth_prime(std::size_t k) {
  if (k == 0) throw Error(ErrorCode::InvalidArgument, "prime coordinates are 1-based");
  return table().nth(k);
}

std::optional<std::size_t> prime_index(std::uint64_t p) {
  if (p < 2) return std::nullopt;
  return table().index_of(p);
}

std::size_t table_size() { return table().size(); }

}  // namespace ztau::primes
