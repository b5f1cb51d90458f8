#pragma once

#include <compare>
#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace zhodge {

using BigInt = mpz_class;

/// Returns `base^exp` exactly.
BigInt pow(const BigInt& base, unsigned long exp);

/// Three-way comparison for GMP integers (mpz_class has no operator<=>).
inline std::strong_ordering compare(const BigInt& a, const BigInt& b) {
  const int c = cmp(a, b);
  return c < 0 ? std::strong_ordering::less
               : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

/// A rational prime. Construction checks primality, so every Prime in
/// circulation is valid.
class Prime {
 public:
  /// Throws InputError if `value` is not prime.
  explicit Prime(const BigInt& value);
  explicit Prime(std::uint64_t value) : Prime(BigInt(static_cast<unsigned long>(value))) {}

  const BigInt& value() const noexcept { return value_; }
  std::string str() const { return value_.get_str(); }

  friend bool operator==(const Prime& a, const Prime& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Prime& a, const Prime& b) {
    return compare(a.value_, b.value_);
  }

 private:
  BigInt value_;
};

/// Miller-Rabin with enough rounds to be deterministic for the sizes we see.
bool is_prime(const BigInt& n);

}  // namespace zhodge
