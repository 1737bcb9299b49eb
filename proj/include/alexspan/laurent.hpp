#ifndef ALEXSPAN_LAURENT_HPP_
#define ALEXSPAN_LAURENT_HPP_

#include <cstdint>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "alexspan/bigint.hpp"
#include "alexspan/errors.hpp"

namespace alexspan
{

/**
 * @brief Laurent polynomial in t^(1/2) with exact integer coefficients.
 *
 * Exponents are stored doubled: the key d stands for t^(d/2). Zero
 * coefficients are never stored, so the empty map is the zero polynomial.
 */
class HalfLaurent
{
public:
  using Terms = std::map<std::int64_t, BigInt>;

  HalfLaurent() = default;
  explicit HalfLaurent(const BigInt & constant) { add_term(0, constant); }

  static HalfLaurent monomial(const BigInt & coeff, std::int64_t doubled_exp)
  {
    HalfLaurent p;
    p.add_term(doubled_exp, coeff);
    return p;
  }

  const Terms & terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  BigInt coefficient(std::int64_t doubled_exp) const
  {
    auto it = terms_.find(doubled_exp);
    return it == terms_.end() ? BigInt(0) : it->second;
  }

  std::int64_t min_exponent() const { return terms_.begin()->first; }
  std::int64_t max_exponent() const { return terms_.rbegin()->first; }

  void add_term(std::int64_t doubled_exp, const BigInt & coeff)
  {
    if (coeff == 0) {return;}
    auto [it, inserted] = terms_.try_emplace(doubled_exp, coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second == 0) {terms_.erase(it);}
    }
  }

  HalfLaurent & operator+=(const HalfLaurent & o)
  {
    for (const auto & [d, c] : o.terms_) {add_term(d, c);}
    return *this;
  }

  HalfLaurent & operator-=(const HalfLaurent & o)
  {
    for (const auto & [d, c] : o.terms_) {add_term(d, -c);}
    return *this;
  }

  HalfLaurent & operator*=(const HalfLaurent & o)
  {
    *this = *this * o;
    return *this;
  }

  friend HalfLaurent operator+(HalfLaurent a, const HalfLaurent & b) { return a += b; }
  friend HalfLaurent operator-(HalfLaurent a, const HalfLaurent & b) { return a -= b; }

  friend HalfLaurent operator-(const HalfLaurent & a)
  {
    HalfLaurent r;
    for (const auto & [d, c] : a.terms_) {r.terms_.emplace(d, -c);}
    return r;
  }

  friend HalfLaurent operator*(const HalfLaurent & a, const HalfLaurent & b)
  {
    HalfLaurent r;
    for (const auto & [da, ca] : a.terms_) {
      for (const auto & [db, cb] : b.terms_) {
        r.add_term(da + db, ca * cb);
      }
    }
    return r;
  }

  bool operator==(const HalfLaurent &) const = default;

  /// Multiply by t^(d/2).
  HalfLaurent shifted(std::int64_t d) const
  {
    HalfLaurent r;
    for (const auto & [e, c] : terms_) {r.terms_.emplace(e + d, c);}
    return r;
  }

  /// Representative of the shift class with lowest doubled exponent 0.
  HalfLaurent shift_canonical() const
  {
    return is_zero() ? *this : shifted(-min_exponent());
  }

  /// Value at t = 1, the sum of the coefficients.
  BigInt eval_one() const
  {
    BigInt s = 0;
    for (const auto & [d, c] : terms_) {s += c;}
    return s;
  }

  /// Terms as (doubled exponent, coefficient), ascending by exponent.
  std::vector<std::pair<std::int64_t, BigInt>> machine_form() const
  {
    return {terms_.begin(), terms_.end()};
  }

  /// Canonical text: decreasing exponents, `2*t^{3/2} - t + 1 - t^-1`.
  std::string str() const
  {
    if (is_zero()) {return "0";}
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto d = it->first;
      BigInt c = it->second;
      const bool negative = c < 0;
      if (negative) {c = -c;}
      if (first) {
        if (negative) {os << '-';}
      } else {
        os << (negative ? " - " : " + ");
      }
      first = false;
      if (d == 0) {
        os << c;
        continue;
      }
      if (c != 1) {os << c << '*';}
      os << power_string(d);
    }
    return os.str();
  }

  static std::string power_string(std::int64_t d)
  {
    if (d % 2 != 0) {return "t^{" + std::to_string(d) + "/2}";}
    if (d == 2) {return "t";}
    return "t^" + std::to_string(d / 2);
  }

private:
  Terms terms_;
};

inline std::ostream & operator<<(std::ostream & os, const HalfLaurent & p)
{
  return os << p.str();
}

inline HalfLaurent monomial(const BigInt & coeff, std::int64_t doubled_exp)
{
  return HalfLaurent::monomial(coeff, doubled_exp);
}

/// [i] = t^((i-1)/2) + t^((i-3)/2) + ... + t^((1-i)/2).
inline HalfLaurent quantum_integer(std::int64_t i)
{
  if (i < 1) {
    throw InvalidInput("quantum integer [" + std::to_string(i) + "] needs i >= 1");
  }
  HalfLaurent p;
  for (std::int64_t d = i - 1; d >= 1 - i; d -= 2) {p.add_term(d, 1);}
  return p;
}

inline BigInt eval_one(const HalfLaurent & p) { return p.eval_one(); }

/// True iff q = p * t^(d/2) for some integer d. Zero is equivalent only to zero.
inline bool equal_up_to_shift(const HalfLaurent & p, const HalfLaurent & q)
{
  return p.shift_canonical() == q.shift_canonical();
}

}  // namespace alexspan

#endif  // ALEXSPAN_LAURENT_HPP_
