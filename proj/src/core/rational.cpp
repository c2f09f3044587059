#include "xrank/core/rational.hpp"

#include <cctype>

namespace xrank {

Rational::Rational(const mpz_class& n, const mpz_class& d) {
  if (d == 0) throw InvalidInput("rational with zero denominator");
  v_ = mpq_class(n, d);
  v_.canonicalize();
}

namespace {

bool parse_integer(std::string_view s, mpz_class& out, bool allow_sign) {
  if (s.empty()) return false;
  std::size_t i = 0;
  if (s[0] == '-' || s[0] == '+') {
    if (!allow_sign || s[0] == '+') return false;
    i = 1;
  }
  if (i == s.size()) return false;
  for (std::size_t j = i; j < s.size(); ++j)
    if (!std::isdigit(static_cast<unsigned char>(s[j]))) return false;
  // leading zeros are not canonical
  if (s.size() - i > 1 && s[i] == '0') return false;
  return out.set_str(std::string(s), 10) == 0;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  auto slash = text.find('/');
  mpz_class n, d(1);
  if (!parse_integer(text.substr(0, slash), n, true))
    throw InvalidInput("malformed rational '" + std::string(text) + "'");
  if (slash != std::string_view::npos) {
    if (!parse_integer(text.substr(slash + 1), d, false) || d == 0)
      throw InvalidInput("malformed rational '" + std::string(text) + "'");
  }
  if (text.substr(0, slash) == "-0")
    throw InvalidInput("non-canonical rational '" + std::string(text) + "'");
  mpq_class q(n, d);
  q.canonicalize();
  if (q.get_num() != n || q.get_den() != d)
    throw InvalidInput("non-canonical rational '" + std::string(text) + "'");
  return Rational(q);
}

Rational Rational::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero rational");
  return Rational(mpq_class(1 / v_));
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("division by zero rational");
  v_ /= o.v_;
  return *this;
}

std::string Rational::to_string() const {
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rational pow(const Rational& base, unsigned e) {
  mpz_class n, d;
  mpz_pow_ui(n.get_mpz_t(), base.num().get_mpz_t(), e);
  mpz_pow_ui(d.get_mpz_t(), base.den().get_mpz_t(), e);
  return Rational(n, d);
}

}  // namespace xrank
