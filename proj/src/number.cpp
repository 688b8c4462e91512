#include "pconvex/number.hpp"

#include <cctype>
#include <stdexcept>

#include "pconvex/errors.hpp"

namespace pconvex {

Rational snap(double x, int bits) {
  if (!std::isfinite(x)) throw InvalidInput("snap: non-finite value");
  const double scaled = std::nearbyint(std::ldexp(x, bits));
  mpz_class num(scaled);
  mpz_class den = mpz_class(1) << bits;
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational parse_rational(const std::string& text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  if (s.empty()) throw InvalidInput("empty number");
  try {
    if (s.find('/') != std::string::npos) {
      Rational q(s, 10);
      if (q.get_den() == 0) throw InvalidInput("zero denominator in '" + text + "'");
      q.canonicalize();
      return q;
    }
    std::size_t epos = s.find_first_of("eE");
    long exponent = 0;
    std::string mantissa = s;
    if (epos != std::string::npos) {
      exponent = std::stol(s.substr(epos + 1));
      mantissa = s.substr(0, epos);
    }
    bool negative = false;
    if (!mantissa.empty() && (mantissa[0] == '-' || mantissa[0] == '+')) {
      negative = mantissa[0] == '-';
      mantissa.erase(0, 1);
    }
    std::size_t dot = mantissa.find('.');
    std::string digits = mantissa;
    if (dot != std::string::npos) {
      digits = mantissa.substr(0, dot) + mantissa.substr(dot + 1);
      exponent -= static_cast<long>(mantissa.size() - dot - 1);
    }
    if (digits.empty()) throw InvalidInput("malformed number '" + text + "'");
    for (char c : digits) {
      if (!std::isdigit(static_cast<unsigned char>(c))) throw InvalidInput("malformed number '" + text + "'");
    }
    mpz_class n(digits, 10);
    if (negative) n = -n;
    mpz_class p10;
    mpz_ui_pow_ui(p10.get_mpz_t(), 10, static_cast<unsigned long>(exponent < 0 ? -exponent : exponent));
    Rational q = exponent >= 0 ? Rational(n * p10) : Rational(n, p10);
    q.canonicalize();
    return q;
  } catch (const std::invalid_argument&) {
    throw InvalidInput("malformed number '" + text + "'");
  } catch (const std::out_of_range&) {
    throw InvalidInput("number out of range '" + text + "'");
  }
}

std::string format_rational(const Rational& q) { return q.get_str(); }

Rational sqrt_upper(const Rational& x, int bits) {
  if (sgn(x) < 0) throw std::domain_error("sqrt_upper of negative");
  // ceil(sqrt(x) * 2^bits) via integer square root of ceil(x * 4^bits)
  mpz_class scaled_num = x.get_num() << (2 * bits);
  mpz_class q;
  mpz_cdiv_q(q.get_mpz_t(), scaled_num.get_mpz_t(), x.get_den().get_mpz_t());
  mpz_class root;
  mpz_sqrt(root.get_mpz_t(), q.get_mpz_t());
  if (root * root < q) root += 1;
  Rational out(root, mpz_class(1) << bits);
  out.canonicalize();
  return out;
}

Rational sqrt_lower(const Rational& x, int bits) {
  if (sgn(x) < 0) throw std::domain_error("sqrt_lower of negative");
  mpz_class scaled_num = x.get_num() << (2 * bits);
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), scaled_num.get_mpz_t(), x.get_den().get_mpz_t());
  mpz_class root;
  mpz_sqrt(root.get_mpz_t(), q.get_mpz_t());
  Rational out(root, mpz_class(1) << bits);
  out.canonicalize();
  return out;
}

}  // namespace pconvex
