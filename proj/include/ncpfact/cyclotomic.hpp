#pragma once

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ncpfact/numeric.hpp"

namespace ncpfact {

inline unsigned euler_phi(unsigned n) {
  unsigned result = n;
  for (unsigned p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

namespace detail {

// Integer polynomials, ascending coefficients, used only to prepare the
// per-conductor reduction data.
using IntPoly = std::vector<Integer>;

inline void trim(IntPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Exact division of monic-divisor polynomials over Z.
inline IntPoly divide_exact(IntPoly num, const IntPoly& den) {
  IntPoly quot(num.size() >= den.size() ? num.size() - den.size() + 1 : 0, Integer(0));
  while (num.size() >= den.size() && !num.empty()) {
    Integer lead = num.back() / den.back();
    std::size_t shift = num.size() - den.size();
    quot[shift] = lead;
    for (std::size_t i = 0; i < den.size(); ++i) num[shift + i] -= lead * den[i];
    trim(num);
  }
  return quot;
}

// Phi_n, monic, computed as (x^n - 1) / prod_{d|n, d<n} Phi_d.
inline IntPoly cyclotomic_poly_uncached(unsigned n, const std::map<unsigned, IntPoly>& lower) {
  if (n == 1) return {Integer(-1), Integer(1)};
  IntPoly num(n + 1, Integer(0));
  num[0] = -1;
  num[n] = 1;
  for (unsigned d = 1; d < n; ++d)
    if (n % d == 0) num = divide_exact(std::move(num), lower.at(d));
  return num;
}

struct ConductorData {
  unsigned conductor = 0;
  unsigned degree = 0;           // phi(conductor)
  IntPoly poly;                  // Phi_conductor, monic
  std::vector<std::vector<Integer>> power;  // power[j] = x^(degree+j) mod Phi, j = 0..degree-2
};

inline const ConductorData& conductor_data(unsigned n) {
  static std::map<unsigned, ConductorData> cache;
  static std::map<unsigned, IntPoly> polys;
  static std::mutex mutex;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  if (n == 0) throw std::invalid_argument("conductor must be positive");
  for (unsigned d = 1; d <= n; ++d)
    if (n % d == 0 && !polys.count(d)) polys[d] = cyclotomic_poly_uncached(d, polys);

  ConductorData data;
  data.conductor = n;
  data.poly = polys[n];
  data.degree = static_cast<unsigned>(data.poly.size() - 1);
  if (data.degree != euler_phi(n)) throw std::logic_error("cyclotomic degree mismatch");

  // x^degree = -(low-order coefficients); higher powers by shift-and-reduce.
  if (data.degree >= 1) {
    std::vector<Integer> row(data.degree);
    for (unsigned i = 0; i < data.degree; ++i) row[i] = -data.poly[i];
    for (unsigned j = 0; j + 1 < data.degree; ++j) {
      data.power.push_back(row);
      std::vector<Integer> next(data.degree, Integer(0));
      Integer top = row[data.degree - 1];
      for (unsigned i = data.degree - 1; i >= 1; --i) next[i] = row[i - 1];
      if (top != 0)
        for (unsigned i = 0; i < data.degree; ++i) next[i] += top * -data.poly[i];
      row = std::move(next);
    }
  }
  auto [pos, _] = cache.emplace(n, std::move(data));
  return pos->second;
}

// Rational polynomials for the inversion routine.
using RatPoly = std::vector<Rational>;

inline void trim(RatPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline RatPoly poly_rem(RatPoly num, const RatPoly& den, RatPoly* quot_out) {
  RatPoly quot(num.size() >= den.size() ? num.size() - den.size() + 1 : 0, Rational(0));
  while (num.size() >= den.size() && !num.empty()) {
    Rational lead = num.back() / den.back();
    std::size_t shift = num.size() - den.size();
    quot[shift] = lead;
    for (std::size_t i = 0; i < den.size(); ++i) num[shift + i] -= lead * den[i];
    trim(num);
  }
  if (quot_out) *quot_out = std::move(quot);
  return num;
}

}  // namespace detail

/// The monic coefficients of the N-th cyclotomic polynomial (ascending).
inline const std::vector<Integer>& cyclotomic_polynomial(unsigned n) {
  return detail::conductor_data(n).poly;
}

/// An exact element of Q(zeta_N), stored as the residue modulo Phi_N in the
/// power basis 1, zeta, ..., zeta^(phi(N)-1). Coefficients are normalized
/// rationals, so equality is coefficient-wise and decidable.
class CyclotomicNumber {
 public:
  explicit CyclotomicNumber(unsigned conductor)
      : conductor_(conductor), coeffs_(detail::conductor_data(conductor).degree, Rational(0)) {}

  CyclotomicNumber(unsigned conductor, const Rational& value) : CyclotomicNumber(conductor) {
    coeffs_[0] = value;
  }

  CyclotomicNumber(unsigned conductor, long value)
      : CyclotomicNumber(conductor, Rational(value)) {}

  /// zeta_N^power, for any integer power (reduced mod N).
  static CyclotomicNumber zeta(unsigned conductor, long power = 1) {
    const auto& data = detail::conductor_data(conductor);
    long p = power % static_cast<long>(conductor);
    if (p < 0) p += conductor;
    CyclotomicNumber z(conductor);
    if (static_cast<unsigned>(p) < data.degree) {
      z.coeffs_[static_cast<unsigned>(p)] = 1;
      return z;
    }
    // Reduce x^p by multiplying by x one step at a time; p < conductor.
    std::vector<Rational> cur(data.degree, Rational(0));
    cur[0] = 1;
    for (long step = 0; step < p; ++step) {
      std::vector<Rational> next(data.degree, Rational(0));
      Rational top = cur[data.degree - 1];
      for (unsigned i = data.degree - 1; i >= 1; --i) next[i] = cur[i - 1];
      if (top != 0)
        for (unsigned i = 0; i < data.degree; ++i) next[i] += top * Rational(-data.poly[i]);
      cur = std::move(next);
    }
    z.coeffs_ = std::move(cur);
    return z;
  }

  unsigned conductor() const { return conductor_; }
  unsigned degree() const { return static_cast<unsigned>(coeffs_.size()); }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  bool is_zero() const {
    for (const auto& c : coeffs_)
      if (c != 0) return false;
    return true;
  }

  bool is_rational() const {
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
      if (coeffs_[i] != 0) return false;
    return true;
  }

  /// The value as a rational; only valid when is_rational().
  const Rational& rational_value() const {
    if (!is_rational()) throw std::domain_error("cyclotomic number is not rational");
    return coeffs_[0];
  }

  friend bool operator==(const CyclotomicNumber& a, const CyclotomicNumber& b) {
    return a.conductor_ == b.conductor_ && a.coeffs_ == b.coeffs_;
  }
  friend bool operator!=(const CyclotomicNumber& a, const CyclotomicNumber& b) {
    return !(a == b);
  }

  CyclotomicNumber& operator+=(const CyclotomicNumber& o) {
    check_same(o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    return *this;
  }

  CyclotomicNumber& operator-=(const CyclotomicNumber& o) {
    check_same(o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    return *this;
  }

  CyclotomicNumber operator-() const {
    CyclotomicNumber r(*this);
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }

  CyclotomicNumber& operator*=(const CyclotomicNumber& o) {
    check_same(o);
    *this = *this * o;
    return *this;
  }

  friend CyclotomicNumber operator+(CyclotomicNumber a, const CyclotomicNumber& b) {
    a += b;
    return a;
  }
  friend CyclotomicNumber operator-(CyclotomicNumber a, const CyclotomicNumber& b) {
    a -= b;
    return a;
  }

  friend CyclotomicNumber operator*(const CyclotomicNumber& a, const CyclotomicNumber& b) {
    a.check_same(b);
    const auto& data = detail::conductor_data(a.conductor_);
    const unsigned d = data.degree;
    CyclotomicNumber r(a.conductor_);
    // Sparse-aware convolution; group element entries are mostly rational.
    std::vector<Rational> conv(2 * d - 1, Rational(0));
    for (unsigned i = 0; i < d; ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (unsigned j = 0; j < d; ++j) {
        if (b.coeffs_[j] == 0) continue;
        conv[i + j] += a.coeffs_[i] * b.coeffs_[j];
      }
    }
    for (unsigned i = 0; i < d; ++i) r.coeffs_[i] = std::move(conv[i]);
    for (unsigned j = d; j < 2 * d - 1; ++j) {
      if (conv[j] == 0) continue;
      const auto& row = data.power[j - d];
      for (unsigned i = 0; i < d; ++i)
        if (row[i] != 0) r.coeffs_[i] += conv[j] * Rational(row[i]);
    }
    return r;
  }

  /// Multiplicative inverse via the extended Euclidean algorithm in Q[x]
  /// modulo Phi_N (irreducible over Q, so every nonzero element is a unit).
  CyclotomicNumber inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero cyclotomic number");
    const auto& data = detail::conductor_data(conductor_);
    detail::RatPoly r0(data.poly.size());
    for (std::size_t i = 0; i < data.poly.size(); ++i) r0[i] = Rational(data.poly[i]);
    detail::RatPoly r1(coeffs_.begin(), coeffs_.end());
    detail::trim(r1);
    detail::RatPoly t0{}, t1{Rational(1)};
    while (r1.size() > 1) {
      detail::RatPoly quot;
      detail::RatPoly rem = detail::poly_rem(std::move(r0), r1, &quot);
      r0 = std::move(r1);
      r1 = std::move(rem);
      // t_{k+1} = t_{k-1} - q * t_k
      detail::RatPoly tn(std::max(t0.size(), quot.size() + t1.size()), Rational(0));
      for (std::size_t i = 0; i < t0.size(); ++i) tn[i] = t0[i];
      for (std::size_t i = 0; i < quot.size(); ++i)
        for (std::size_t j = 0; j < t1.size(); ++j) tn[i + j] -= quot[i] * t1[j];
      detail::trim(tn);
      t0 = std::move(t1);
      t1 = std::move(tn);
    }
    if (r1.empty()) throw std::logic_error("gcd with cyclotomic polynomial not constant");
    CyclotomicNumber inv(conductor_);
    for (std::size_t i = 0; i < t1.size() && i < inv.coeffs_.size(); ++i)
      inv.coeffs_[i] = t1[i] / r1[0];
    return inv;
  }

  friend CyclotomicNumber operator/(const CyclotomicNumber& a, const CyclotomicNumber& b) {
    return a * b.inverse();
  }

  /// Reinterprets this number in Q(zeta_M) for N | M via zeta_N = zeta_M^(M/N).
  CyclotomicNumber promoted(unsigned to_conductor) const {
    if (to_conductor == conductor_) return *this;
    if (to_conductor % conductor_ != 0)
      throw std::invalid_argument("target conductor is not a multiple of the source");
    unsigned step = to_conductor / conductor_;
    CyclotomicNumber r(to_conductor);
    for (unsigned i = 0; i < coeffs_.size(); ++i) {
      if (coeffs_[i] == 0) continue;
      CyclotomicNumber term = zeta(to_conductor, static_cast<long>(i) * step);
      for (auto& c : term.coeffs_) c *= coeffs_[i];
      r += term;
    }
    return r;
  }

  /// Canonical text form "N:[c0,c1,...]"; round-trips byte-identically.
  std::string to_string() const {
    std::string s = std::to_string(conductor_);
    s += ":[";
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      if (i) s += ',';
      s += rational_to_string(coeffs_[i]);
    }
    s += ']';
    return s;
  }

  static CyclotomicNumber parse(std::string_view text) {
    auto colon = text.find(':');
    if (colon == std::string_view::npos || colon + 2 > text.size() || text[colon + 1] != '[' ||
        text.back() != ']')
      throw std::invalid_argument("malformed cyclotomic number: '" + std::string(text) + "'");
    unsigned conductor = 0;
    for (char ch : text.substr(0, colon)) {
      if (ch < '0' || ch > '9')
        throw std::invalid_argument("malformed conductor in '" + std::string(text) + "'");
      conductor = conductor * 10 + static_cast<unsigned>(ch - '0');
    }
    CyclotomicNumber r(conductor);
    std::string_view body = text.substr(colon + 2, text.size() - colon - 3);
    std::size_t index = 0;
    std::size_t start = 0;
    while (start <= body.size() && !body.empty()) {
      std::size_t comma = body.find(',', start);
      std::string_view piece =
          comma == std::string_view::npos ? body.substr(start) : body.substr(start, comma - start);
      if (index >= r.coeffs_.size())
        throw std::invalid_argument("too many coefficients in '" + std::string(text) + "'");
      r.coeffs_[index++] = parse_rational(piece);
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    if (index != r.coeffs_.size())
      throw std::invalid_argument("expected " + std::to_string(r.coeffs_.size()) +
                                  " coefficients in '" + std::string(text) + "'");
    return r;
  }

 private:
  void check_same(const CyclotomicNumber& o) const {
    if (conductor_ != o.conductor_)
      throw std::invalid_argument("conductor mismatch: " + std::to_string(conductor_) + " vs " +
                                  std::to_string(o.conductor_));
  }

  unsigned conductor_;
  std::vector<Rational> coeffs_;
};

}  // namespace ncpfact
