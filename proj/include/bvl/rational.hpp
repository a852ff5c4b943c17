#pragma once

// Exact rational arithmetic helpers on top of GMP's mpq_class.
//
// All combinatorial quantities (factorials, binomials) and every sphere/cycle
// moment in this library are exact rationals; doubles appear only at the
// boundary to the floating-point solver and to output formatting.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace bvl {

using Rat = mpq_class;
using Int = mpz_class;

inline Int factorial(long n) {
  if (n < 0) throw std::invalid_argument("factorial of negative argument");
  Int r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

// Binomial coefficient with the convention C(a,b) = 0 for b < 0 or b > a.
// The zero convention is load-bearing: several closed-form bound expressions
// contain terms like C(r-2, k-2) at k = 1 that must vanish.
inline Int binomial(long a, long b) {
  if (b < 0 || b > a || a < 0) return Int(0);
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(a),
               static_cast<unsigned long>(b));
  return r;
}

inline Rat rat_pow(const Rat& base, long e) {
  if (e < 0) {
    if (base == 0) throw std::invalid_argument("rat_pow: 0 to negative power");
    return rat_pow(Rat(1) / base, -e);
  }
  Rat acc(1), b(base);
  long k = e;
  while (k > 0) {
    if (k & 1) acc *= b;
    b *= b;
    k >>= 1;
  }
  return acc;
}

inline double to_double(const Rat& q) { return q.get_d(); }

// Exact double -> rational conversion (doubles are dyadic rationals).
inline Rat rat_from_double(double x) {
  Rat q;
  mpq_set_d(q.get_mpq_t(), x);
  return q;
}

// Renders a rational as a decimal string with `sig` significant digits
// (round half away from zero).  Values with decimal exponent in [-4, 20]
// are printed in plain positional notation, everything else as d.dddEe.
inline std::string rat_to_decimal(const Rat& q, int sig = 20) {
  if (q == 0) return "0";
  Int num = abs(q.get_num());
  Int den = q.get_den();
  bool neg = q < 0;

  // Decimal exponent e with 10^e <= num/den < 10^(e+1).
  long e = static_cast<long>(mpz_sizeinbase(num.get_mpz_t(), 10)) -
           static_cast<long>(mpz_sizeinbase(den.get_mpz_t(), 10));
  auto cmp_pow10 = [&](long p) {
    // sign of num/den - 10^p
    Int lhs = num, rhs = den;
    if (p >= 0)
      rhs *= rat_pow(Rat(10), p).get_num();
    else
      lhs *= rat_pow(Rat(10), -p).get_num();
    return cmp(lhs, rhs);
  };
  while (cmp_pow10(e) < 0) --e;
  while (cmp_pow10(e + 1) >= 0) ++e;

  // digits = round(num/den * 10^(sig-1-e))
  long shift = sig - 1 - e;
  Int a = num, b = den;
  if (shift >= 0)
    a *= rat_pow(Rat(10), shift).get_num();
  else
    b *= rat_pow(Rat(10), -shift).get_num();
  Int digits = (2 * a + b) / (2 * b);  // round half away from zero
  std::string ds = digits.get_str();
  if (static_cast<int>(ds.size()) > sig) {  // rounding carried over (e.g. 999->1000)
    ds.resize(sig);
    ++e;
  }

  std::string out;
  if (e >= 0 && e <= 20) {
    if (e + 1 >= static_cast<long>(ds.size())) {
      out = ds + std::string(e + 1 - ds.size(), '0');
    } else {
      out = ds.substr(0, e + 1) + "." + ds.substr(e + 1);
    }
  } else if (e < 0 && e >= -4) {
    out = "0." + std::string(-e - 1, '0') + ds;
  } else {
    out = ds.substr(0, 1) + "." + ds.substr(1) + "E" + std::to_string(e);
  }
  return neg ? "-" + out : out;
}

}  // namespace bvl
