#include "zhodge/prime.hpp"

#include "zhodge/errors.hpp"

namespace zhodge {

BigInt pow(const BigInt& base, unsigned long exp) {
  BigInt out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exp);
  return out;
}

bool is_prime(const BigInt& n) {
  if (n < 2) return false;
  return mpz_probab_prime_p(n.get_mpz_t(), 40) > 0;
}

Prime::Prime(const BigInt& value) : value_(value) {
  if (!is_prime(value_)) {
    throw InputError("not a prime: " + value_.get_str());
  }
}

}  // namespace zhodge
