#include "chowgen/integer.hpp"

#include "chowgen/error.hpp"

namespace chowgen {

Integer exact_div(const Integer& a, const Integer& b) {
  if (b == 0) throw InternalError("exact_div: division by zero");
  if (!mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t()))
    throw InternalError("exact_div: " + a.get_str() + " is not divisible by " + b.get_str());
  Integer q;
  mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Integer binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

Integer mod_floor(const Integer& a, const Integer& m) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

}  // namespace chowgen
