#include "dyckgram/series.hpp"

#include <set>

namespace dyckgram {

TruncatedSeries::TruncatedSeries(std::size_t order, std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  coeffs_.resize(order);
}

TruncatedSeries TruncatedSeries::constant(std::size_t order, const Rational& c) {
  TruncatedSeries s(order);
  if (order > 0) s.coeffs_[0] = c;
  return s;
}

TruncatedSeries TruncatedSeries::monomial(std::size_t order, std::size_t k, const Rational& c) {
  TruncatedSeries s(order);
  if (k < order) s.coeffs_[k] = c;
  return s;
}

TruncatedSeries TruncatedSeries::from_integers(std::size_t order, const std::vector<BigInt>& values) {
  if (values.size() < order)
    throw SeriesError("need " + std::to_string(order) + " coefficients, got " + std::to_string(values.size()));
  TruncatedSeries s(order);
  for (std::size_t i = 0; i < order; ++i) s.coeffs_[i] = Rational(values[i]);
  return s;
}

bool TruncatedSeries::is_integral() const {
  for (const auto& c : coeffs_)
    if (c.get_den() != 1) return false;
  return true;
}

std::vector<BigInt> TruncatedSeries::integers() const {
  std::vector<BigInt> out;
  out.reserve(coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].get_den() != 1)
      throw SeriesError("coefficient " + std::to_string(i) + " is not an integer: " + coeffs_[i].get_str());
    out.push_back(coeffs_[i].get_num());
  }
  return out;
}

std::vector<BigInt> TruncatedSeries::counts() const {
  auto out = integers();
  for (std::size_t i = 0; i < out.size(); ++i)
    if (out[i] < 0) throw SeriesError("coefficient " + std::to_string(i) + " is negative: " + out[i].get_str());
  return out;
}

void TruncatedSeries::check_order(const TruncatedSeries& o) const {
  if (o.order() != order())
    throw SeriesError("order mismatch: " + std::to_string(order()) + " vs " + std::to_string(o.order()));
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& o) {
  check_order(o);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& o) {
  check_order(o);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  a.check_order(b);
  const std::size_t n = a.order();
  TruncatedSeries out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (sgn(a.coeffs_[i]) == 0) continue;
    for (std::size_t j = 0; i + j < n; ++j) out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return out;
}

TruncatedSeries& TruncatedSeries::operator*=(const TruncatedSeries& o) { return *this = *this * o; }

TruncatedSeries& TruncatedSeries::operator*=(const Rational& c) {
  for (auto& x : coeffs_) x *= c;
  return *this;
}

TruncatedSeries TruncatedSeries::shifted_up(std::size_t k) const {
  TruncatedSeries out(order());
  for (std::size_t i = 0; i + k < order(); ++i) out.coeffs_[i + k] = coeffs_[i];
  return out;
}

TruncatedSeries TruncatedSeries::shifted_down(std::size_t k) const {
  if (k > order()) throw SeriesError("cannot divide by z^" + std::to_string(k) + " at order " + std::to_string(order()));
  for (std::size_t i = 0; i < k; ++i)
    if (sgn(coeffs_[i]) != 0)
      throw SeriesError("division by z^" + std::to_string(k) + " leaves a pole: coefficient " + std::to_string(i) +
                        " is " + coeffs_[i].get_str());
  return TruncatedSeries(order() - k, {coeffs_.begin() + static_cast<std::ptrdiff_t>(k), coeffs_.end()});
}

TruncatedSeries TruncatedSeries::truncated(std::size_t n) const {
  if (n > order()) throw SeriesError("cannot extend a series from order " + std::to_string(order()));
  return TruncatedSeries(n, {coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(n)});
}

std::string TruncatedSeries::str() const {
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (sgn(coeffs_[i]) == 0) continue;
    Rational c = coeffs_[i];
    bool negative = sgn(c) < 0;
    if (negative) c = -c;
    if (!out.empty())
      out += negative ? " - " : " + ";
    else if (negative)
      out += "-";
    bool unit = c == 1;
    if (!unit || i == 0) out += c.get_str();
    if (i > 0) {
      if (!unit) out += "*";
      out += "z";
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  if (out.empty()) out = "0";
  return out + " + O(z^" + std::to_string(order()) + ")";
}

TruncatedSeries pow(const TruncatedSeries& a, unsigned k) {
  TruncatedSeries result = TruncatedSeries::constant(a.order(), 1);
  TruncatedSeries base = a;
  while (k > 0) {
    if (k & 1U) result *= base;
    k >>= 1U;
    if (k > 0) base *= base;
  }
  return result;
}

TruncatedSeries arith(const TruncatedSeries& a, const TruncatedSeries& b, SeriesOp op) {
  switch (op.kind) {
    case SeriesOp::Kind::Add: return a + b;
    case SeriesOp::Kind::Sub: return a - b;
    case SeriesOp::Kind::Mul: return a * b;
    case SeriesOp::Kind::Pow: return pow(a, op.exponent);
  }
  throw SeriesError("unknown series operation");
}

TruncatedSeries reciprocal(const TruncatedSeries& a) {
  const std::size_t n = a.order();
  if (n == 0) return a;
  if (a[0] != 1 && a[0] != -1) throw SeriesError("reciprocal needs a unit constant term, got " + a[0].get_str());
  TruncatedSeries out(n);
  // a0 = +-1, so 1/a0 = a0.
  out[0] = a[0];
  for (std::size_t i = 1; i < n; ++i) {
    Rational acc = 0;
    for (std::size_t j = 1; j <= i; ++j) acc += a[j] * out[i - j];
    out[i] = -acc * a[0];
  }
  return out;
}

TruncatedSeries sqrt(const TruncatedSeries& a) {
  const std::size_t n = a.order();
  if (n == 0) return a;
  if (a[0] != 1) throw SeriesError("sqrt needs constant term 1, got " + a[0].get_str());
  TruncatedSeries out(n);
  out[0] = 1;
  // (r^2)_i = a_i  =>  2 r_i = a_i - sum_{0<j<i} r_j r_{i-j}
  for (std::size_t i = 1; i < n; ++i) {
    Rational acc = a[i];
    for (std::size_t j = 1; j < i; ++j) acc -= out[j] * out[i - j];
    out[i] = acc / 2;
  }
  return out;
}

// --- Polynomial ---

void Polynomial::add_term(const Key& k, const BigInt& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial Polynomial::constant(const BigInt& c) {
  Polynomial p;
  p.add_term({}, c);
  return p;
}

Polynomial Polynomial::z_power(std::size_t k) {
  Polynomial p;
  p.add_term({k, {}}, 1);
  return p;
}

Polynomial Polynomial::unknown(const std::string& name) {
  Polynomial p;
  p.add_term({0, {{name, 1U}}}, 1);
  return p;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, -c);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial out;
  for (const auto& [ka, ca] : a.terms_) {
    for (const auto& [kb, cb] : b.terms_) {
      Polynomial::Key k{ka.z_degree + kb.z_degree, ka.powers};
      for (const auto& [name, e] : kb.powers) k.powers[name] += e;
      out.add_term(k, ca * cb);
    }
  }
  return out;
}

Polynomial pow(const Polynomial& a, unsigned k) {
  Polynomial out = Polynomial::constant(1);
  for (unsigned i = 0; i < k; ++i) out = out * a;
  return out;
}

TruncatedSeries Polynomial::evaluate(const std::map<std::string, TruncatedSeries>& values, std::size_t order) const {
  TruncatedSeries out(order);
  for (const auto& [k, c] : terms_) {
    TruncatedSeries term = TruncatedSeries::monomial(order, k.z_degree, Rational(c));
    for (const auto& [name, e] : k.powers) {
      auto it = values.find(name);
      if (it == values.end()) throw SeriesError("no value for unknown " + name);
      term *= pow(it->second, e);
    }
    out += term;
  }
  return out;
}

std::string Polynomial::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [k, c] : terms_) {
    BigInt mag = abs(c);
    if (out.empty())
      out += c < 0 ? "-" : "";
    else
      out += c < 0 ? " - " : " + ";
    std::vector<std::string> factors;
    if (mag != 1 || (k.z_degree == 0 && k.powers.empty())) factors.push_back(mag.get_str());
    if (k.z_degree == 1) factors.emplace_back("z");
    if (k.z_degree > 1) factors.push_back("z^" + std::to_string(k.z_degree));
    for (const auto& [name, e] : k.powers) factors.push_back(e == 1 ? name : name + "^" + std::to_string(e));
    for (std::size_t i = 0; i < factors.size(); ++i) out += (i ? "*" : "") + factors[i];
  }
  return out;
}

// --- Systems ---

Polynomial SeriesEquation::fixed_point_form() const {
  Polynomial bare = Polynomial::unknown(unknown);
  auto it = lhs.terms().find(bare.terms().begin()->first);
  if (it == lhs.terms().end() || it->second != 1)
    throw NotContractive("left side of the equation for " + unknown + " must contain " + unknown +
                         " with coefficient 1");
  return rhs - (lhs - bare);
}

std::string SeriesEquation::str() const { return lhs.str() + " = " + rhs.str(); }

std::vector<std::string> SeriesSystem::unknowns() const {
  std::vector<std::string> out;
  for (const auto& eq : equations) out.push_back(eq.unknown);
  return out;
}

void SeriesSystem::check_contractive() const {
  std::set<std::string> declared;
  for (const auto& eq : equations)
    if (!declared.insert(eq.unknown).second) throw NotContractive("unknown " + eq.unknown + " defined twice");
  for (const auto& eq : equations) {
    auto phi = eq.fixed_point_form();
    for (const auto& [k, c] : phi.terms()) {
      for (const auto& [name, e] : k.powers)
        if (!declared.contains(name)) throw NotContractive("undeclared unknown " + name);
      if (!k.powers.empty() && k.z_degree == 0)
        throw NotContractive("monomial without a factor of z in the equation for " + eq.unknown);
    }
  }
}

std::string SeriesSystem::str() const {
  std::string out;
  for (const auto& eq : equations) out += eq.str() + "\n";
  return out;
}

Solution solve(const SeriesSystem& system, std::size_t order) {
  system.check_contractive();
  std::vector<Polynomial> phi;
  Solution current;
  for (const auto& eq : system.equations) {
    phi.push_back(eq.fixed_point_form());
    current.emplace(eq.unknown, TruncatedSeries(order));
  }
  // Each sweep fixes at least one more coefficient of every unknown.
  for (std::size_t sweep = 0; sweep <= order + 1; ++sweep) {
    Solution next;
    for (std::size_t i = 0; i < phi.size(); ++i)
      next.emplace(system.equations[i].unknown, phi[i].evaluate(current, order));
    if (next == current) return current;
    current = std::move(next);
  }
  throw NoConvergence("fixed-point iteration did not stabilise within " + std::to_string(order + 2) + " sweeps");
}

Solution residuals(const SeriesSystem& system, const Solution& values, std::size_t order) {
  Solution out;
  for (const auto& eq : system.equations)
    out.emplace(eq.unknown, eq.lhs.evaluate(values, order) - eq.rhs.evaluate(values, order));
  return out;
}

}  // namespace dyckgram
