#ifndef MIXMULT_CHECKED_HPP
#define MIXMULT_CHECKED_HPP

#include <cstdint>

#include "mixmult/error.hpp"

namespace mixmult::checked {

// Overflow is a hard error everywhere; nothing in this library wraps around.

template <typename T>
T add(T a, T b) {
  T r;
  if (__builtin_add_overflow(a, b, &r)) throw InconsistencyError("integer overflow in addition");
  return r;
}

template <typename T>
T sub(T a, T b) {
  T r;
  if (__builtin_sub_overflow(a, b, &r)) throw InconsistencyError("integer overflow in subtraction");
  return r;
}

template <typename T>
T mul(T a, T b) {
  T r;
  if (__builtin_mul_overflow(a, b, &r)) throw InconsistencyError("integer overflow in multiplication");
  return r;
}

// C(n, k) read as the polynomial n(n-1)...(n-k+1)/k!, so negative n is allowed.
inline std::int64_t binomial(std::int64_t n, std::int64_t k) {
  if (k < 0) return 0;
  if (k == 0) return 1;
  if (n < 0) {
    // C(n, k) = (-1)^k C(k - n - 1, k)
    std::int64_t v = binomial(sub<std::int64_t>(k - 1, n), k);
    return (k % 2 == 0) ? v : -v;
  }
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  std::int64_t r = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    // r * (n - k + i) is divisible by i after the multiplication
    r = mul<std::int64_t>(r, n - k + i) / i;
  }
  return r;
}

}  // namespace mixmult::checked

#endif  // MIXMULT_CHECKED_HPP
