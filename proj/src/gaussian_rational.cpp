#include "levelt/gaussian_rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>
#include <string>

namespace levelt {

namespace {

mpq_class parse_rational(std::string_view text, std::string_view whole) {
  if (text.empty()) throw std::invalid_argument("empty rational in '" + std::string(whole) + "'");
  std::size_t pos = 0;
  if (text[0] == '+' || text[0] == '-') pos = 1;
  bool saw_digit = false;
  bool saw_slash = false;
  for (std::size_t k = pos; k < text.size(); ++k) {
    const char c = text[k];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      saw_digit = true;
    } else if (c == '/' && saw_digit && !saw_slash && k + 1 < text.size()) {
      saw_slash = true;
      saw_digit = false;
    } else {
      throw std::invalid_argument("malformed rational '" + std::string(text) + "' in '" +
                                  std::string(whole) + "'");
    }
  }
  if (!saw_digit) throw std::invalid_argument("malformed rational in '" + std::string(whole) + "'");
  std::string s(text[0] == '+' ? text.substr(1) : text);
  mpq_class q;
  if (q.set_str(s, 10) != 0) throw std::invalid_argument("malformed rational '" + s + "'");
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator in '" + std::string(whole) + "'");
  q.canonicalize();
  return q;
}

// An imaginary term: "<q>*i", "<q>i", "i", with optional sign (already included in text).
mpq_class parse_imaginary(std::string_view text, std::string_view whole) {
  std::string_view body = text.substr(0, text.size() - 1);  // drop 'i'
  if (!body.empty() && body.back() == '*') body.remove_suffix(1);
  if (body.empty() || body == "+") return 1;
  if (body == "-") return -1;
  return parse_rational(body, whole);
}

}  // namespace

GaussianRational::GaussianRational(long num, long den) {
  if (den == 0) throw std::domain_error("zero denominator");
  re_ = mpq_class(num, den);
  re_.canonicalize();
}

GaussianRational::GaussianRational(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
  re_.canonicalize();
  im_.canonicalize();
}

GaussianRational GaussianRational::parse(std::string_view raw) {
  std::string text;
  for (char c : raw) {
    if (!std::isspace(static_cast<unsigned char>(c))) text.push_back(c);
  }
  if (text.empty()) throw std::invalid_argument("empty scalar");
  std::string_view s(text);
  if (s.back() != 'i') return GaussianRational(parse_rational(s, raw), 0);
  // Find the sign separating real and imaginary parts (not at position 0).
  std::size_t split = std::string_view::npos;
  for (std::size_t k = s.size() - 1; k > 0; --k) {
    if ((s[k] == '+' || s[k] == '-') && s[k - 1] != '/') {
      split = k;
      break;
    }
  }
  if (split == std::string_view::npos) return GaussianRational(mpq_class(0), parse_imaginary(s, raw));
  return GaussianRational(parse_rational(s.substr(0, split), raw), parse_imaginary(s.substr(split), raw));
}

std::string GaussianRational::str() const {
  if (is_real()) return re_.get_str();
  const mpq_class magnitude = abs(im_);
  std::string imag = magnitude == 1 ? std::string("i") : magnitude.get_str() + "*i";
  if (sgn(re_) == 0) return (sgn(im_) < 0 ? "-" : "") + imag;
  return re_.get_str() + (sgn(im_) < 0 ? "-" : "+") + imag;
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  if (is_real() && o.is_real()) {
    re_ *= o.re_;
    return *this;
  }
  mpq_class re = re_ * o.re_ - im_ * o.im_;
  mpq_class im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  if (o.is_zero()) throw std::domain_error("division by zero");
  if (o.is_real()) {
    re_ /= o.re_;
    im_ /= o.re_;
    return *this;
  }
  const mpq_class n = o.norm();
  mpq_class re = (re_ * o.re_ + im_ * o.im_) / n;
  mpq_class im = (im_ * o.re_ - re_ * o.im_) / n;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& x) { return os << x.str(); }

GaussianRational pow(const GaussianRational& x, unsigned k) {
  GaussianRational result(1);
  GaussianRational base = x;
  while (k > 0) {
    if (k & 1U) result *= base;
    base *= base;
    k >>= 1U;
  }
  return result;
}

bool lex_less(const GaussianRational& a, const GaussianRational& b) {
  if (a.re() != b.re()) return a.re() < b.re();
  return a.im() < b.im();
}

}  // namespace levelt
