#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>

namespace ztau::primes {

/// Default trial-division bound for factorization: primes below 10^6.
inline constexpr std::uint64_t kDefaultPrimeBound = 1'000'000;

/// The k-th prime, 1-based (nth_prime(1) == 2). The shared table is a
/// segmented sieve that grows on demand; safe to call from any thread.
std::uint64_t nth_prime(std::size_t k);

/// 1-based position of p in the prime sequence, or nullopt if p is not prime.
std::optional<std::size_t> prime_index(std::uint64_t p);

/// Number of primes currently held by the shared table.
std::size_t table_size();

}  // namespace ztau::primes
