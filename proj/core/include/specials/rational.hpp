#pragma once

#include <cstdint>
#include <numeric>
#include <ostream>
#include <stdexcept>

namespace specials {

// Exact rational on int64, always kept reduced with positive denominator.
struct rational {
  long long num = 0;
  long long den = 1;

  rational() = default;
  rational(long long n) : num(n), den(1) {}
  rational(long long n, long long d) : num(n), den(d) { reduce(); }

  void reduce() {
    if (den == 0) throw std::domain_error("rational: zero denominator");
    if (den < 0) { num = -num; den = -den; }
    long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) { num /= g; den /= g; }
  }

  friend rational operator+(const rational& a, const rational& b) {
    return rational(a.num * b.den + b.num * a.den, a.den * b.den);
  }
  friend rational operator-(const rational& a, const rational& b) {
    return rational(a.num * b.den - b.num * a.den, a.den * b.den);
  }
  friend rational operator*(const rational& a, const rational& b) {
    return rational(a.num * b.num, a.den * b.den);
  }
  friend rational operator/(const rational& a, const rational& b) {
    if (b.num == 0) throw std::domain_error("rational: division by zero");
    return rational(a.num * b.den, a.den * b.num);
  }
  friend bool operator==(const rational& a, const rational& b) {
    return a.num == b.num && a.den == b.den;
  }
  friend bool operator!=(const rational& a, const rational& b) { return !(a == b); }
  friend bool operator<(const rational& a, const rational& b) {
    return a.num * b.den < b.num * a.den;
  }
  friend bool operator>(const rational& a, const rational& b) { return b < a; }
  friend std::ostream& operator<<(std::ostream& os, const rational& q) {
    os << q.num;
    if (q.den != 1) os << '/' << q.den;
    return os;
  }
};

}  // namespace specials
