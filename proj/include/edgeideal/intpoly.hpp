#ifndef EDGEIDEAL_INTPOLY_HPP
#define EDGEIDEAL_INTPOLY_HPP

// Dense univariate polynomials over the integers, exact arithmetic via GMP.
// Coefficient overflow is not a failure mode here, and exact division (the
// only division we ever perform) either succeeds or throws; nothing is
// rounded, ever.

#include <gmpxx.h>

#include <string>
#include <vector>

namespace edgeideal {

class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<mpz_class> coeffs) : c_(std::move(coeffs)) {
    trim();
  }
  static IntPoly constant(long v) {
    return v == 0 ? IntPoly() : IntPoly({mpz_class(v)});
  }
  // 1 - t, the ubiquitous factor.
  static IntPoly one_minus_t() { return IntPoly({1, -1}); }

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 if zero

  const mpz_class& coeff(int i) const {
    static const mpz_class zero = 0;
    return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : zero;
  }
  const std::vector<mpz_class>& coeffs() const { return c_; }

  friend bool operator==(const IntPoly& a, const IntPoly& b) {
    return a.c_ == b.c_;
  }
  friend bool operator!=(const IntPoly& a, const IntPoly& b) {
    return !(a == b);
  }

  friend IntPoly operator+(const IntPoly& a, const IntPoly& b) {
    std::vector<mpz_class> r(std::max(a.c_.size(), b.c_.size()), mpz_class(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
    return IntPoly(std::move(r));
  }
  friend IntPoly operator-(const IntPoly& a, const IntPoly& b) {
    std::vector<mpz_class> r(std::max(a.c_.size(), b.c_.size()), mpz_class(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] -= b.c_[i];
    return IntPoly(std::move(r));
  }
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return IntPoly();
    std::vector<mpz_class> r(a.c_.size() + b.c_.size() - 1, mpz_class(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    return IntPoly(std::move(r));
  }

  // this * t^k.
  IntPoly shifted(int k) const {
    if (is_zero()) return IntPoly();
    std::vector<mpz_class> r(c_.size() + k, mpz_class(0));
    for (std::size_t i = 0; i < c_.size(); ++i) r[i + k] = c_[i];
    return IntPoly(std::move(r));
  }

  // Exact division by (1-t)^k; throws std::domain_error when the division
  // leaves a remainder (i.e. (1-t)^k does not divide this polynomial).
  IntPoly divided_by_one_minus_t(int k) const {
    IntPoly cur = *this;
    for (int round = 0; round < k; ++round) {
      if (cur.is_zero()) continue;
      // Divide by (1-t) via the recurrence q_i = c_0 + ... + c_i shifted:
      // (q0 + q1 t + ...)(1 - t) = c  =>  q_i = q_{i-1} + c_i, q_{-1} = 0,
      // and exactness demands q_deg == 0 at the top.
      std::vector<mpz_class> q(cur.c_.size(), mpz_class(0));
      mpz_class run = 0;
      for (std::size_t i = 0; i < cur.c_.size(); ++i) {
        run += cur.c_[i];
        q[i] = run;
      }
      if (run != 0)
        throw std::domain_error("exact division by (1-t) failed");
      q.pop_back();  // top accumulator was the (zero) remainder
      cur = IntPoly(std::move(q));
    }
    return cur;
  }

  mpz_class eval_at_one() const {
    mpz_class s = 0;
    for (const auto& x : c_) s += x;
    return s;
  }

  // Ascending-degree rendering: "1+3t-2t^2-t^3"; zero prints "0".
  std::string to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (c_[i] == 0) continue;
      mpz_class a = c_[i];
      if (out.empty()) {
        if (a < 0) out += "-";
      } else {
        out += (a < 0) ? "-" : "+";
      }
      mpz_class mag = abs(a);
      if (i == 0) {
        out += mag.get_str();
      } else {
        if (mag != 1) out += mag.get_str();
        out += "t";
        if (i > 1) out += "^" + std::to_string(i);
      }
    }
    return out;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::vector<mpz_class> c_;  // c_[i] is the t^i coefficient; no trailing 0s
};

// (1-t)^k, computed once and cached for small k by callers that care.
inline IntPoly one_minus_t_power(int k) {
  IntPoly p = IntPoly::constant(1);
  for (int i = 0; i < k; ++i) p = p * IntPoly::one_minus_t();
  return p;
}

}  // namespace edgeideal

#endif
