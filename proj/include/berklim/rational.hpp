#pragma once

#include <boost/rational.hpp>
#include <cstdint>
#include <numeric>
#include <string>

namespace berklim {

// Exact rational arithmetic for exponents, valuations and masses.
using Rat = boost::rational<long long>;

inline long long rat_num(const Rat& r) { return r.numerator(); }
inline long long rat_den(const Rat& r) { return r.denominator(); }

inline double to_double(const Rat& r) {
  return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

inline std::string to_string(const Rat& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

// Valuation of a series: an exact rational, or +infinity for the zero series.
struct Valuation {
  bool infinite = false;
  Rat value{0};

  static Valuation infinity() { return Valuation{true, Rat(0)}; }
  static Valuation of(const Rat& v) { return Valuation{false, v}; }

  bool is_finite() const { return !infinite; }

  friend bool operator==(const Valuation& a, const Valuation& b) {
    if (a.infinite || b.infinite) return a.infinite == b.infinite;
    return a.value == b.value;
  }
  friend bool operator<(const Valuation& a, const Valuation& b) {
    if (a.infinite) return false;
    if (b.infinite) return true;
    return a.value < b.value;
  }
  friend bool operator<=(const Valuation& a, const Valuation& b) {
    return a < b || a == b;
  }
  friend Valuation operator+(const Valuation& a, const Valuation& b) {
    if (a.infinite || b.infinite) return infinity();
    return of(a.value + b.value);
  }
};

inline Valuation min(const Valuation& a, const Valuation& b) { return a < b ? a : b; }

}  // namespace berklim
