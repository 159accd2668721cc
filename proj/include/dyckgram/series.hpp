#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "dyckgram/bigint.hpp"
#include "dyckgram/error.hpp"

namespace dyckgram {

inline constexpr std::size_t kDefaultOrder = 32;

class SeriesError : public Error {
 public:
  using Error::Error;
};

// Formal power series truncated to `order` coefficients (indices 0..order-1).
// Coefficients are exact rationals; counting series are integral and can be
// read back through integers(), which refuses anything else.
class TruncatedSeries {
 public:
  explicit TruncatedSeries(std::size_t order = kDefaultOrder) : coeffs_(order) {}
  TruncatedSeries(std::size_t order, std::vector<Rational> coeffs);

  static TruncatedSeries constant(std::size_t order, const Rational& c);
  // c * z^k
  static TruncatedSeries monomial(std::size_t order, std::size_t k, const Rational& c = 1);
  static TruncatedSeries from_integers(std::size_t order, const std::vector<BigInt>& values);

  std::size_t order() const { return coeffs_.size(); }
  const Rational& operator[](std::size_t i) const { return coeffs_.at(i); }
  Rational& operator[](std::size_t i) { return coeffs_.at(i); }
  const std::vector<Rational>& coefficients() const { return coeffs_; }

  bool is_integral() const;
  // Throws SeriesError when a coefficient is not an integer.
  std::vector<BigInt> integers() const;
  // As integers(), additionally rejecting negative coefficients.
  std::vector<BigInt> counts() const;

  TruncatedSeries& operator+=(const TruncatedSeries& o);
  TruncatedSeries& operator-=(const TruncatedSeries& o);
  TruncatedSeries& operator*=(const TruncatedSeries& o);
  TruncatedSeries& operator*=(const Rational& c);

  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator*(TruncatedSeries a, const Rational& c) { return a *= c; }
  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

  // Multiply by z^k, staying at the same order.
  TruncatedSeries shifted_up(std::size_t k) const;
  // Divide by z^k. The first k coefficients must vanish; the order drops by k.
  TruncatedSeries shifted_down(std::size_t k) const;
  // Drop trailing coefficients.
  TruncatedSeries truncated(std::size_t order) const;

  std::string str() const;

 private:
  void check_order(const TruncatedSeries& o) const;
  std::vector<Rational> coeffs_;
};

struct SeriesOp {
  enum class Kind { Add, Sub, Mul, Pow };
  Kind kind;
  unsigned exponent = 0;  // Pow only

  static SeriesOp add() { return {Kind::Add}; }
  static SeriesOp sub() { return {Kind::Sub}; }
  static SeriesOp mul() { return {Kind::Mul}; }
  static SeriesOp power(unsigned k) { return {Kind::Pow, k}; }
};

// Pow ignores b and raises a to op.exponent.
TruncatedSeries arith(const TruncatedSeries& a, const TruncatedSeries& b, SeriesOp op);
TruncatedSeries pow(const TruncatedSeries& a, unsigned k);

// Requires a[0] = +-1; throws SeriesError otherwise.
TruncatedSeries reciprocal(const TruncatedSeries& a);
// Requires a[0] = 1; throws SeriesError otherwise.
TruncatedSeries sqrt(const TruncatedSeries& a);

// A polynomial in z and a set of unknowns with integer coefficients.
// Stored canonically: like terms combined, zero terms dropped.
class Polynomial {
 public:
  // (z-degree, exponents keyed by unknown name)
  struct Key {
    std::size_t z_degree = 0;
    std::map<std::string, unsigned> powers;
    friend auto operator<=>(const Key&, const Key&) = default;
  };

  Polynomial() = default;
  static Polynomial constant(const BigInt& c);
  static Polynomial z_power(std::size_t k);
  static Polynomial unknown(const std::string& name);

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial pow(const Polynomial& a, unsigned k);
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  const std::map<Key, BigInt>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  TruncatedSeries evaluate(const std::map<std::string, TruncatedSeries>& values, std::size_t order) const;

  // e.g. "1 + z*P + z^2*O*P"
  std::string str() const;

 private:
  void add_term(const Key& k, const BigInt& c);
  std::map<Key, BigInt> terms_;
};

class NotContractive : public SeriesError {
 public:
  using SeriesError::SeriesError;
};

class NoConvergence : public SeriesError {
 public:
  using SeriesError::SeriesError;
};

// One algebraic equation lhs = rhs, attached to the unknown it determines.
// The rearranged form used for iteration is X = rhs - (lhs - X), so lhs must
// contain the bare monomial X with coefficient 1.
struct SeriesEquation {
  std::string unknown;
  Polynomial lhs;
  Polynomial rhs;

  Polynomial fixed_point_form() const;
  std::string str() const;
  friend bool operator==(const SeriesEquation&, const SeriesEquation&) = default;
};

struct SeriesSystem {
  std::vector<SeriesEquation> equations;

  std::vector<std::string> unknowns() const;
  // Throws NotContractive unless every unknown-bearing monomial of every
  // fixed-point form has z-degree >= 1.
  void check_contractive() const;
  std::string str() const;
  friend bool operator==(const SeriesSystem&, const SeriesSystem&) = default;
};

using Solution = std::map<std::string, TruncatedSeries>;

// Iterates X <- Phi(X) from zero until it stabilises.
Solution solve(const SeriesSystem& system, std::size_t order = kDefaultOrder);

// lhs - rhs of every original equation, evaluated at the given values.
Solution residuals(const SeriesSystem& system, const Solution& values, std::size_t order);

}  // namespace dyckgram
