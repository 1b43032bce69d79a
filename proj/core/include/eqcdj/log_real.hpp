// log_real.hpp — signed log-magnitude scalar for probabilities far outside double range

#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>

namespace eqcdj {

// A real number stored as sign * exp(ln_mag).  sign == 0 encodes exact zero,
// distinct from any representable small value; ln_mag is meaningless then.
// Multiplication is exact in the exponent; addition rescales both operands by
// the larger exponent before summing in the linear domain.
struct LogReal {
  int sign = 0;
  double ln_mag = 0.0;

  static LogReal zero() { return {0, 0.0}; }
  static LogReal one() { return {1, 0.0}; }

  static LogReal from_ln(int sign, double ln_mag) {
    if (sign == 0) return zero();
    return {sign > 0 ? 1 : -1, ln_mag};
  }

  static LogReal from_double(double x) {
    if (x == 0.0) return zero();
    return {x > 0.0 ? 1 : -1, std::log(std::abs(x))};
  }

  bool is_zero() const { return sign == 0; }

  // Saturates: exponents beyond double range come back as ±inf or ±0.
  double to_double() const {
    if (sign == 0) return 0.0;
    return static_cast<double>(sign) * std::exp(ln_mag);
  }

  // log10 of the magnitude; -inf for exact zero.  Callers printing CSV map
  // the -inf result to the "-inf" sentinel.
  double log10() const {
    if (sign == 0) return -std::numeric_limits<double>::infinity();
    return ln_mag / std::numbers::ln10;
  }

  LogReal operator*(const LogReal& o) const {
    if (sign == 0 || o.sign == 0) return zero();
    return {sign * o.sign, ln_mag + o.ln_mag};
  }

  LogReal operator+(const LogReal& o) const {
    if (sign == 0) return o;
    if (o.sign == 0) return *this;
    const double m = ln_mag > o.ln_mag ? ln_mag : o.ln_mag;
    const double s = sign * std::exp(ln_mag - m) + o.sign * std::exp(o.ln_mag - m);
    if (s == 0.0) return zero();
    return {s > 0.0 ? 1 : -1, m + std::log(std::abs(s))};
  }

  LogReal operator-(const LogReal& o) const { return *this + LogReal{-o.sign, o.ln_mag}; }

  // Integer power; e == 0 gives one, including for zero (empty product).
  LogReal pow_int(long long e) const {
    if (e == 0) return one();
    if (sign == 0) return zero();
    const int s = (sign < 0 && (e & 1)) ? -1 : 1;
    return {s, ln_mag * static_cast<double>(e)};
  }

  // Squared magnitude: always non-negative.
  LogReal abs_sq() const {
    if (sign == 0) return zero();
    return {1, 2.0 * ln_mag};
  }
};

// Signed accumulation of terms given as (sign, ln-magnitude): the running sum
// is kept in the linear domain rescaled by the largest exponent seen, with
// Kahan compensation.  Exact cancellation of the tracked sum yields zero().
class LogSum {
 public:
  void add(int sign, double ln_mag) {
    if (sign == 0) return;
    if (!started_) {
      started_ = true;
      scale_ = ln_mag;
      acc_ = static_cast<double>(sign);
      return;
    }
    if (ln_mag > scale_) {
      const double shrink = std::exp(scale_ - ln_mag);
      acc_ *= shrink;
      comp_ *= shrink;
      scale_ = ln_mag;
    }
    const double term = static_cast<double>(sign) * std::exp(ln_mag - scale_);
    const double y = term - comp_;
    const double t = acc_ + y;
    comp_ = (t - acc_) - y;
    acc_ = t;
  }

  void add(const LogReal& v) { add(v.sign, v.ln_mag); }

  LogReal value() const {
    if (!started_ || acc_ == 0.0) return LogReal::zero();
    return LogReal::from_ln(acc_ > 0.0 ? 1 : -1, scale_ + std::log(std::abs(acc_)));
  }

 private:
  bool started_ = false;
  double scale_ = 0.0;
  double acc_ = 0.0;
  double comp_ = 0.0;
};

}  // namespace eqcdj
