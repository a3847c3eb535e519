#include "levelt/theta_operator.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace levelt {

namespace {

GaussianRational binomial(unsigned n, unsigned k) {
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return GaussianRational(mpq_class(b));
}

std::string coefficient_prefix(const GaussianRational& c, bool has_factors) {
  if (!has_factors) return c.str();
  if (c.is_one()) return "";
  if (c == GaussianRational(-1)) return "-";
  std::string s = c.str();
  if (!c.is_real() && sgn(c.re()) != 0) s = "(" + s + ")";
  return s + "*";
}

class OperatorParser {
 public:
  explicit OperatorParser(std::string_view text) {
    for (char c : text) {
      if (!std::isspace(static_cast<unsigned char>(c))) text_.push_back(c);
    }
  }

  ThetaOperator run() {
    if (text_.empty()) fail("empty operator");
    ThetaOperator r = expr();
    if (pos_ != text_.size()) fail("unexpected character");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("operator parse error at position " + std::to_string(pos_) + " in '" + text_ +
                                "': " + what);
  }

  bool peek(char c) const { return pos_ < text_.size() && text_[pos_] == c; }

  ThetaOperator expr() {
    ThetaOperator acc;
    bool negate = false;
    if (peek('+') || peek('-')) negate = text_[pos_++] == '-';
    acc = term();
    if (negate) acc = -acc;
    while (peek('+') || peek('-')) {
      const bool minus = text_[pos_++] == '-';
      ThetaOperator t = term();
      acc = minus ? acc - t : acc + t;
    }
    return acc;
  }

  ThetaOperator term() {
    ThetaOperator acc = factor();
    while (peek('*')) {
      ++pos_;
      acc = op_mul(acc, factor());
    }
    return acc;
  }

  ThetaOperator factor() {
    ThetaOperator base = primary();
    if (!peek('^')) return base;
    ++pos_;
    bool negative = false;
    if (peek('-')) {
      negative = true;
      ++pos_;
    }
    const std::string digits = integer();
    const unsigned long k = std::stoul(digits);
    if (!negative) return op_pow(base, static_cast<unsigned>(k));
    if (base.terms().size() != 1 || base.theta_degree() != 0 || !base.terms().begin()->second.is_one()) {
      fail("negative exponent is only defined for z-powers");
    }
    return ThetaOperator::z(-base.z_degree() * static_cast<long>(k));
  }

  std::string integer() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    return text_.substr(start, pos_ - start);
  }

  ThetaOperator primary() {
    if (pos_ >= text_.size()) fail("unexpected end");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      ThetaOperator inner = expr();
      if (!peek(')')) fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (c == 'z') {
      ++pos_;
      return ThetaOperator::z();
    }
    if (c == 't') {
      ++pos_;
      return ThetaOperator::theta();
    }
    if (c == 'i') {
      ++pos_;
      return ThetaOperator(GaussianRational::i());
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string literal = integer();
      if (peek('/') && pos_ + 1 < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_ + 1]))) {
        ++pos_;
        literal += "/" + integer();
      }
      return ThetaOperator(GaussianRational::parse(literal));
    }
    fail(std::string("unexpected '") + c + "'");
  }

  std::string text_;
  std::size_t pos_ = 0;
};

}  // namespace

ThetaOperator::ThetaOperator(const GaussianRational& c) {
  if (!c.is_zero()) terms_.emplace(Key{0, 0}, c);
}

ThetaOperator ThetaOperator::term(const GaussianRational& c, long z_power, unsigned theta_power) {
  ThetaOperator r;
  r.add_term({z_power, theta_power}, c);
  return r;
}

ThetaOperator ThetaOperator::in_theta(const Polynomial& p) {
  ThetaOperator r;
  for (std::size_t k = 0; k < p.coefficients().size(); ++k) r.add_term({0, static_cast<unsigned>(k)}, p.coefficients()[k]);
  return r;
}

ThetaOperator ThetaOperator::theta_plus(const GaussianRational& c) { return theta() + ThetaOperator(c); }

ThetaOperator ThetaOperator::parse(std::string_view text) { return OperatorParser(text).run(); }

void ThetaOperator::add_term(const Key& key, const GaussianRational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(key, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

GaussianRational ThetaOperator::coefficient(long z_power, unsigned theta_power) const {
  auto it = terms_.find({z_power, theta_power});
  return it == terms_.end() ? GaussianRational() : it->second;
}

int ThetaOperator::theta_degree() const {
  if (terms_.empty()) return kMinusInfinity;
  unsigned d = 0;
  for (const auto& [key, c] : terms_) d = std::max(d, key.second);
  return static_cast<int>(d);
}

long ThetaOperator::z_degree() const { return terms_.empty() ? 0 : terms_.rbegin()->first.first; }
long ThetaOperator::z_valuation() const { return terms_.empty() ? 0 : terms_.begin()->first.first; }

std::string ThetaOperator::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, c] : terms_) {
    const auto [j, k] = key;
    std::string factors;
    if (j != 0) factors += j == 1 ? "z" : "z^" + std::to_string(j);
    if (k != 0) {
      if (!factors.empty()) factors += "*";
      factors += k == 1 ? "t" : "t^" + std::to_string(k);
    }
    std::string piece = coefficient_prefix(c, !factors.empty()) + factors;
    if (!first && piece[0] != '-') os << "+";
    os << piece;
    first = false;
  }
  return os.str();
}

ThetaOperator& ThetaOperator::operator+=(const ThetaOperator& o) {
  for (const auto& [key, c] : o.terms_) add_term(key, c);
  return *this;
}

ThetaOperator& ThetaOperator::operator-=(const ThetaOperator& o) {
  for (const auto& [key, c] : o.terms_) add_term(key, -c);
  return *this;
}

ThetaOperator operator-(const ThetaOperator& a) {
  ThetaOperator r = a;
  for (auto& [key, c] : r.terms_) c = -c;
  return r;
}

ThetaOperator operator*(const ThetaOperator& a, const ThetaOperator& b) {
  // (c z^i theta^k)(d z^j theta^l) = c d z^{i+j} (theta + j)^k theta^l
  ThetaOperator r;
  for (const auto& [ka, ca] : a.terms_) {
    const auto [i, k] = ka;
    for (const auto& [kb, cb] : b.terms_) {
      const auto [j, l] = kb;
      const GaussianRational cd = ca * cb;
      const GaussianRational shift(j);
      for (unsigned t = 0; t <= k; ++t) {
        GaussianRational coeff = cd * binomial(k, t) * pow(shift, k - t);
        r.add_term({i + j, t + l}, coeff);
      }
    }
  }
  return r;
}

ThetaOperator op_mul(const ThetaOperator& p, const ThetaOperator& q) { return p * q; }

ThetaOperator op_pow(const ThetaOperator& p, unsigned k) {
  ThetaOperator r(1);
  for (unsigned j = 0; j < k; ++j) r = r * p;
  return r;
}

RationalThetaOperator::RationalThetaOperator(const ThetaOperator& p) {
  if (p.is_zero()) return;
  const long low = std::min(0L, p.z_valuation());
  std::vector<std::vector<GaussianRational>> numerators(static_cast<std::size_t>(p.theta_degree()) + 1);
  for (const auto& [key, c] : p.terms()) {
    auto& num = numerators[key.second];
    const auto idx = static_cast<std::size_t>(key.first - low);
    if (num.size() <= idx) num.resize(idx + 1);
    num[idx] = c;
  }
  for (auto& num : numerators) {
    coeffs_.emplace_back(Polynomial(std::move(num)), Polynomial::monomial(1, static_cast<std::size_t>(-low)));
  }
  trim();
}

RationalThetaOperator::RationalThetaOperator(std::vector<RationalFunction> coefficients)
    : coeffs_(std::move(coefficients)) {
  trim();
}

void RationalThetaOperator::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

const RationalFunction& RationalThetaOperator::leading() const {
  if (coeffs_.empty()) throw std::domain_error("leading coefficient of the zero operator");
  return coeffs_.back();
}

RationalThetaOperator RationalThetaOperator::monic() const {
  if (is_zero()) return *this;
  const RationalFunction inv = RationalFunction(1) / leading();
  std::vector<RationalFunction> c;
  c.reserve(coeffs_.size());
  for (const auto& x : coeffs_) c.push_back(inv * x);
  return RationalThetaOperator(std::move(c));
}

std::optional<ThetaOperator> RationalThetaOperator::to_theta_operator() const {
  ThetaOperator r;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    const auto& den = coeffs_[k].denominator();
    if (den != Polynomial::monomial(1, static_cast<std::size_t>(den.degree()))) return std::nullopt;
    const long shift = den.degree();
    const auto& num = coeffs_[k].numerator().coefficients();
    for (std::size_t j = 0; j < num.size(); ++j) {
      r += ThetaOperator::term(num[j], static_cast<long>(j) - shift, static_cast<unsigned>(k));
    }
  }
  return r;
}

std::string RationalThetaOperator::str() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k].is_zero()) continue;
    if (!first) os << "+";
    first = false;
    os << "(" << coeffs_[k].str() << ")";
    if (k > 0) os << "*t" << (k > 1 ? "^" + std::to_string(k) : "");
  }
  return os.str();
}

RationalThetaOperator operator+(const RationalThetaOperator& a, const RationalThetaOperator& b) {
  std::vector<RationalFunction> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t k = 0; k < a.coeffs_.size(); ++k) c[k] = a.coeffs_[k];
  for (std::size_t k = 0; k < b.coeffs_.size(); ++k) c[k] = c[k] + b.coeffs_[k];
  return RationalThetaOperator(std::move(c));
}

RationalThetaOperator operator-(const RationalThetaOperator& a, const RationalThetaOperator& b) {
  std::vector<RationalFunction> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t k = 0; k < a.coeffs_.size(); ++k) c[k] = a.coeffs_[k];
  for (std::size_t k = 0; k < b.coeffs_.size(); ++k) c[k] = c[k] - b.coeffs_[k];
  return RationalThetaOperator(std::move(c));
}

RationalThetaOperator operator*(const RationalThetaOperator& a, const RationalThetaOperator& b) {
  // a_i theta^i * b_j theta^j = a_i sum_t C(i,t) theta^t(b_j) theta^{i-t+j}
  if (a.is_zero() || b.is_zero()) return {};
  const std::size_t max_i = a.coeffs_.size() - 1;
  std::vector<RationalFunction> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
    if (b.coeffs_[j].is_zero()) continue;
    std::vector<RationalFunction> derivs{b.coeffs_[j]};
    for (std::size_t t = 1; t <= max_i; ++t) derivs.push_back(derivs.back().theta_derivative());
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i].is_zero()) continue;
      for (std::size_t t = 0; t <= i; ++t) {
        if (derivs[t].is_zero()) continue;
        const RationalFunction term =
            a.coeffs_[i] * RationalFunction(binomial(static_cast<unsigned>(i), static_cast<unsigned>(t))) * derivs[t];
        out[i - t + j] = out[i - t + j] + term;
      }
    }
  }
  return RationalThetaOperator(std::move(out));
}

RightDivision right_divide(const RationalThetaOperator& p, const RationalThetaOperator& d) {
  if (d.is_zero()) throw std::invalid_argument("right_divide: division by the zero operator");
  RationalThetaOperator rem = p;
  RationalThetaOperator quot;
  const int dd = d.theta_degree();
  while (!rem.is_zero() && rem.theta_degree() >= dd) {
    const auto shift = static_cast<std::size_t>(rem.theta_degree() - dd);
    std::vector<RationalFunction> mono(shift + 1);
    mono[shift] = rem.leading() / d.leading();
    const RationalThetaOperator step(std::move(mono));
    quot = quot + step;
    rem = rem - step * d;
  }
  return {quot, rem};
}

RationalThetaOperator right_gcd(const RationalThetaOperator& p, const RationalThetaOperator& q) {
  if (p.is_zero() && q.is_zero()) throw std::invalid_argument("right_gcd: both operators are zero");
  RationalThetaOperator a = p;
  RationalThetaOperator b = q;
  while (!b.is_zero()) {
    RationalThetaOperator r = right_divide(a, b).remainder;
    a = std::move(b);
    b = r.monic();
  }
  return a.monic();
}

std::optional<ThetaOperator> left_factor_check(const ThetaOperator& p, const ThetaOperator& f) {
  if (f.is_zero()) throw std::invalid_argument("left_factor_check: zero factor");
  if (p.is_zero()) return ThetaOperator();
  // Left Euclidean division p = f * q + r; q is unique when it exists.
  const RationalThetaOperator fr(f);
  RationalThetaOperator rem(p);
  RationalThetaOperator quot;
  const int fd = fr.theta_degree();
  while (!rem.is_zero() && rem.theta_degree() >= fd) {
    const auto shift = static_cast<std::size_t>(rem.theta_degree() - fd);
    std::vector<RationalFunction> mono(shift + 1);
    mono[shift] = rem.leading() / fr.leading();
    const RationalThetaOperator step(std::move(mono));
    quot = quot + step;
    rem = rem - fr * step;
  }
  if (!rem.is_zero()) return std::nullopt;
  auto q = quot.to_theta_operator();
  if (!q || q->z_valuation() < std::min(0L, p.z_valuation())) return std::nullopt;
  return q;
}

}  // namespace levelt
