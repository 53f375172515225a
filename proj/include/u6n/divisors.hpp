#ifndef U6N_DIVISORS_HPP
#define U6N_DIVISORS_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace u6n {

struct PrimePower {
  std::int64_t prime;
  int exponent;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Prime factorization with strictly increasing primes.
class Factorization {
 public:
  explicit Factorization(std::int64_t value) : value_(value) {
    if (value < 1) {
      throw std::invalid_argument("cannot factor " + std::to_string(value));
    }
    std::int64_t rest = value;
    for (std::int64_t p = 2; p * p <= rest; ++p) {
      int e = 0;
      while (rest % p == 0) {
        rest /= p;
        ++e;
      }
      if (e > 0) factors_.push_back({p, e});
    }
    if (rest > 1) factors_.push_back({rest, 1});
  }

  std::int64_t value() const noexcept { return value_; }
  const std::vector<PrimePower>& factors() const noexcept { return factors_; }

  int exponent_of(std::int64_t prime) const {
    for (const auto& f : factors_) {
      if (f.prime == prime) return f.exponent;
    }
    return 0;
  }

  std::int64_t divisor_count() const {
    std::int64_t c = 1;
    for (const auto& f : factors_) c *= f.exponent + 1;
    return c;
  }

  // Exponents of 2 and 3 followed by the sorted exponents of the remaining
  // primes. Two values with the same shape have isomorphic divisor lattices
  // with 2 and 3 kept in place.
  std::vector<int> shape() const {
    std::vector<int> rest;
    for (const auto& f : factors_) {
      if (f.prime != 2 && f.prime != 3) rest.push_back(f.exponent);
    }
    std::sort(rest.begin(), rest.end());
    std::vector<int> out{exponent_of(2), exponent_of(3)};
    out.insert(out.end(), rest.begin(), rest.end());
    return out;
  }

 private:
  std::int64_t value_;
  std::vector<PrimePower> factors_;
};

/// All divisors in increasing order, generated from exponent tuples of the
/// factorization.
inline std::vector<std::int64_t> divisors(const Factorization& f) {
  std::vector<std::int64_t> out{1};
  for (const auto& [prime, exponent] : f.factors()) {
    const std::size_t prev = out.size();
    std::int64_t pk = 1;
    for (int k = 1; k <= exponent; ++k) {
      pk *= prime;
      for (std::size_t i = 0; i < prev; ++i) out.push_back(out[i] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<std::int64_t> divisors(std::int64_t value) {
  return divisors(Factorization(value));
}

}  // namespace u6n

#endif  // U6N_DIVISORS_HPP
