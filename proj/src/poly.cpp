#include "bumpless/poly.hpp"

#include <algorithm>
#include <numeric>

#include "bumpless/error.hpp"

namespace bumpless {

Monomial Monomial::one(int n) {
  return {WeightVector(static_cast<std::size_t>(n), 0), WeightVector(static_cast<std::size_t>(n), 0)};
}

Monomial Monomial::x(int n, int i) {
  Monomial m = one(n);
  ++m.xexp[i - 1];
  return m;
}

Monomial Monomial::y(int n, int j) {
  Monomial m = one(n);
  ++m.yexp[j - 1];
  return m;
}

int Monomial::degree() const {
  return std::accumulate(xexp.begin(), xexp.end(), 0) + std::accumulate(yexp.begin(), yexp.end(), 0);
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial m = *this;
  for (std::size_t k = 0; k < xexp.size(); ++k) {
    m.xexp[k] += other.xexp[k];
    m.yexp[k] += other.yexp[k];
  }
  return m;
}

std::strong_ordering term_order(const Monomial& a, const Monomial& b) {
  for (std::size_t k = a.xexp.size(); k-- > 0;) {
    if (a.xexp[k] != b.xexp[k]) return a.xexp[k] <=> b.xexp[k];
  }
  for (std::size_t k = a.yexp.size(); k-- > 0;) {
    if (a.yexp[k] != b.yexp[k]) return a.yexp[k] <=> b.yexp[k];
  }
  return std::strong_ordering::equal;
}

std::string to_string(const Monomial& m) {
  std::string out;
  auto emit = [&](char var, const WeightVector& exps) {
    for (std::size_t k = 0; k < exps.size(); ++k) {
      if (exps[k] == 0) continue;
      out += var + std::to_string(k + 1);
      if (exps[k] != 1) out += "^" + std::to_string(exps[k]);
    }
  };
  emit('x', m.xexp);
  emit('y', m.yexp);
  return out.empty() ? "1" : out;
}

Polynomial Polynomial::constant(int n, const Integer& c) {
  return monomial(Monomial::one(n), c);
}

Polynomial Polynomial::monomial(const Monomial& m, const Integer& c) {
  Polynomial p(m.size());
  p.add_term(m, c);
  return p;
}

Integer Polynomial::coefficient(const Monomial& m) const {
  const auto it = terms_.find(m);
  return it == terms_.end() ? Integer(0) : it->second;
}

void Polynomial::add_term(const Monomial& m, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
  Polynomial p = *this;
  p += other;
  return p;
}

Polynomial Polynomial::operator-(const Polynomial& other) const {
  Polynomial p = *this;
  p -= other;
  return p;
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
  Polynomial p(n_);
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : other.terms_) p.add_term(ma * mb, ca * cb);
  }
  return p;
}

Polynomial Polynomial::operator-() const {
  return Polynomial(n_) - *this;
}

Polynomial Polynomial::drop_y() const {
  Polynomial p(n_);
  for (const auto& [m, c] : terms_) {
    if (std::all_of(m.yexp.begin(), m.yexp.end(), [](int e) { return e == 0; })) p.add_term(m, c);
  }
  return p;
}

Polynomial Polynomial::abs() const {
  Polynomial p(n_);
  for (const auto& [m, c] : terms_) p.add_term(m, c < 0 ? Integer(-c) : c);
  return p;
}

Polynomial weight_factor(int n, int i, int j, bool dbl) {
  Polynomial p = Polynomial::monomial(Monomial::x(n, i));
  if (dbl) {
    p += Polynomial::monomial(Monomial::y(n, j));
    p -= Polynomial::monomial(Monomial::x(n, i) * Monomial::y(n, j));
  }
  return p;
}

std::pair<Monomial, Integer> leading_monomial(const Polynomial& p) {
  if (p.is_zero()) throw Error(Errc::zero_polynomial, "leading monomial of 0");
  return *p.terms().begin();
}

namespace {

Polynomial degree_component(const Polynomial& p, bool top) {
  if (p.is_zero()) throw Error(Errc::zero_polynomial, "degree component of 0");
  int target = top ? 0 : p.terms().begin()->first.degree();
  for (const auto& [m, c] : p.terms()) target = top ? std::max(target, m.degree()) : std::min(target, m.degree());
  Polynomial out(p.size());
  for (const auto& [m, c] : p.terms()) {
    if (m.degree() == target) out += Polynomial::monomial(m, c);
  }
  return out;
}

}  // namespace

Polynomial top_degree_component(const Polynomial& p) { return degree_component(p, true); }

Polynomial lowest_degree_component(const Polynomial& p) { return degree_component(p, false); }

std::string to_string(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (const auto& [m, c] : p.terms()) {
    const bool negative = c < 0;
    const Integer magnitude = negative ? Integer(-c) : c;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    const std::string vars = to_string(m);
    if (vars == "1") {
      out += magnitude.str();
    } else {
      if (magnitude != 1) out += magnitude.str();
      out += vars;
    }
  }
  return out;
}

}  // namespace bumpless
