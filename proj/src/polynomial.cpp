#include "levelt/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace levelt {

Polynomial::Polynomial(GaussianRational constant) {
  if (!constant.is_zero()) coeffs_.push_back(std::move(constant));
}

Polynomial::Polynomial(std::vector<GaussianRational> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

Polynomial Polynomial::monomial(const GaussianRational& c, std::size_t degree) {
  if (c.is_zero()) return {};
  std::vector<GaussianRational> coeffs(degree + 1);
  coeffs[degree] = c;
  return Polynomial(std::move(coeffs));
}

Polynomial Polynomial::from_roots(std::span<const GaussianRational> roots) {
  Polynomial p(1);
  for (const auto& r : roots) p = p * Polynomial(std::vector<GaussianRational>{-r, 1});
  return p;
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

GaussianRational Polynomial::coefficient(std::size_t k) const {
  return k < coeffs_.size() ? coeffs_[k] : GaussianRational();
}

const GaussianRational& Polynomial::leading() const {
  if (coeffs_.empty()) throw std::domain_error("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

Polynomial Polynomial::monic() const {
  if (is_zero() || is_monic()) return *this;
  const GaussianRational lc = leading();
  Polynomial r = *this;
  for (auto& c : r.coeffs_) c /= lc;
  return r;
}

Polynomial Polynomial::derivative() const {
  std::vector<GaussianRational> d;
  for (std::size_t k = 1; k < coeffs_.size(); ++k) d.push_back(coeffs_[k] * GaussianRational(static_cast<long>(k)));
  return Polynomial(std::move(d));
}

GaussianRational Polynomial::operator()(const GaussianRational& at) const {
  GaussianRational acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + *it;
  return acc;
}

std::string Polynomial::str(std::string_view var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const auto& c = coeffs_[k];
    if (c.is_zero()) continue;
    std::string cs = c.str();
    if (!c.is_real() && sgn(c.re()) != 0) cs = "(" + cs + ")";
    bool negative = cs[0] == '-';
    if (!first) os << (negative ? "-" : "+");
    else if (negative) os << "-";
    if (negative) cs.erase(0, 1);
    first = false;
    if (k == 0) {
      os << cs;
      continue;
    }
    if (cs != "1") os << cs << "*";
    os << var;
    if (k > 1) os << "^" << k;
  }
  return os.str();
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  trim();
  return *this;
}

Polynomial operator-(const Polynomial& a) {
  Polynomial r = a;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<GaussianRational> c(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Polynomial(std::move(c));
}

PolynomialDivision divide(const Polynomial& p, const Polynomial& d) {
  if (d.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<GaussianRational> rem = p.coefficients();
  const int dd = d.degree();
  if (p.degree() < dd) return {Polynomial(), p};
  std::vector<GaussianRational> quot(static_cast<std::size_t>(p.degree() - dd + 1));
  const GaussianRational& lc = d.leading();
  for (int k = p.degree(); k >= dd; --k) {
    const GaussianRational& top = rem[static_cast<std::size_t>(k)];
    if (top.is_zero()) continue;
    GaussianRational factor = top / lc;
    for (int j = 0; j <= dd; ++j) {
      rem[static_cast<std::size_t>(k - dd + j)] -= factor * d.coefficients()[static_cast<std::size_t>(j)];
    }
    quot[static_cast<std::size_t>(k - dd)] = std::move(factor);
  }
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

bool divides(const Polynomial& d, const Polynomial& p) { return divide(p, d).remainder.is_zero(); }

Polynomial poly_gcd(const Polynomial& p, const Polynomial& q) {
  if (p.is_zero() && q.is_zero()) throw std::invalid_argument("poly_gcd: both inputs are zero");
  Polynomial a = p;
  Polynomial b = q;
  while (!b.is_zero()) {
    Polynomial r = divide(a, b).remainder;
    a = std::move(b);
    b = r.monic();
  }
  return a.monic();
}

RationalFunction::RationalFunction(Polynomial num, Polynomial den) {
  if (den.is_zero()) throw std::domain_error("rational function with zero denominator");
  if (num.is_zero()) return;
  const Polynomial g = poly_gcd(num, den);
  if (!g.is_constant()) {
    num = divide(num, g).quotient;
    den = divide(den, g).quotient;
  }
  const GaussianRational lc = den.leading();
  if (!lc.is_one()) {
    num = num * Polynomial(GaussianRational(1) / lc);
    den = den.monic();
  }
  num_ = std::move(num);
  den_ = std::move(den);
}

RationalFunction RationalFunction::z_power(long k) {
  if (k >= 0) return RationalFunction(Polynomial::monomial(1, static_cast<std::size_t>(k)));
  return RationalFunction(Polynomial(1), Polynomial::monomial(1, static_cast<std::size_t>(-k)));
}

RationalFunction RationalFunction::derivative() const {
  return RationalFunction(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

RationalFunction RationalFunction::theta_derivative() const {
  return RationalFunction(Polynomial::x() * (num_.derivative() * den_ - num_ * den_.derivative()), den_ * den_);
}

std::string RationalFunction::str(std::string_view var) const {
  if (is_polynomial()) return num_.str(var);
  return "(" + num_.str(var) + ")/(" + den_.str(var) + ")";
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  if (a.den_ == b.den_) return RationalFunction(a.num_ + b.num_, a.den_);
  return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.is_polynomial() && b.is_polynomial()) return RationalFunction(a.num_ * b.num_);
  return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
  if (b.is_zero()) throw std::domain_error("rational function division by zero");
  return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
}

}  // namespace levelt
