#include "pconvex/surd.hpp"

#include <sstream>
#include <stdexcept>

namespace pconvex {

namespace {

// Strips small square factors so that merge checks run on smaller integers.
void strip_small_squares(mpq_class& coeff, mpz_class& n) {
  static constexpr unsigned long kPrimes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47};
  for (unsigned long p : kPrimes) {
    const unsigned long p2 = p * p;
    while (mpz_divisible_ui_p(n.get_mpz_t(), p2) != 0) {
      mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p2);
      coeff *= p;
    }
  }
  if (mpz_perfect_square_p(n.get_mpz_t()) != 0) {
    mpz_class root;
    mpz_sqrt(root.get_mpz_t(), n.get_mpz_t());
    coeff *= root;
    n = 1;
  }
}

}  // namespace

Surd::Surd(const mpq_class& value) {
  if (sgn(value) != 0) terms_.push_back({value, mpz_class(1)});
}

Surd Surd::sqrt(const mpq_class& x) {
  if (sgn(x) < 0) throw std::domain_error("Surd::sqrt of a negative rational");
  Surd out;
  if (sgn(x) == 0) return out;
  // sqrt(p/q) = sqrt(p*q) / q
  mpz_class n = x.get_num() * x.get_den();
  mpq_class coeff(1, x.get_den());
  coeff.canonicalize();
  strip_small_squares(coeff, n);
  out.terms_.push_back({coeff, n});
  return out;
}

void Surd::add_term(const mpq_class& coeff, const mpz_class& radicand) {
  if (sgn(coeff) == 0) return;
  for (auto it = terms_.begin(); it != terms_.end(); ++it) {
    if (it->radicand == radicand) {
      it->coeff += coeff;
      if (sgn(it->coeff) == 0) terms_.erase(it);
      return;
    }
  }
  // sqrt(N) = (s / R) sqrt(R) whenever N*R = s^2.
  mpz_class prod;
  for (auto it = terms_.begin(); it != terms_.end(); ++it) {
    prod = radicand * it->radicand;
    if (mpz_perfect_square_p(prod.get_mpz_t()) != 0) {
      mpz_class s;
      mpz_sqrt(s.get_mpz_t(), prod.get_mpz_t());
      mpq_class factor(s, it->radicand);
      factor.canonicalize();
      it->coeff += coeff * factor;
      if (sgn(it->coeff) == 0) terms_.erase(it);
      return;
    }
  }
  terms_.push_back({coeff, radicand});
}

Surd& Surd::operator+=(const Surd& o) {
  if (this == &o) {
    *this *= mpq_class(2);
    return *this;
  }
  for (const auto& t : o.terms_) add_term(t.coeff, t.radicand);
  return *this;
}

Surd& Surd::operator-=(const Surd& o) {
  if (this == &o) {
    terms_.clear();
    return *this;
  }
  for (const auto& t : o.terms_) add_term(-t.coeff, t.radicand);
  return *this;
}

Surd& Surd::operator*=(const mpq_class& s) {
  if (sgn(s) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coeff *= s;
  return *this;
}

Surd Surd::operator-() const {
  Surd out = *this;
  for (auto& t : out.terms_) t.coeff = -t.coeff;
  return out;
}

bool Surd::is_rational() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.front().radicand == 1);
}

std::pair<mpq_class, mpq_class> Surd::enclosure(unsigned bits) const {
  mpq_class lo(0);
  mpq_class hi(0);
  mpz_class scaled;
  mpz_class root;
  mpz_class scale = mpz_class(1) << bits;
  for (const auto& t : terms_) {
    if (t.radicand == 1) {
      lo += t.coeff;
      hi += t.coeff;
      continue;
    }
    scaled = t.radicand << (2 * bits);
    mpz_sqrt(root.get_mpz_t(), scaled.get_mpz_t());
    mpq_class r_lo(root, scale);
    mpq_class r_hi(root + 1, scale);
    r_lo.canonicalize();
    r_hi.canonicalize();
    if (sgn(t.coeff) > 0) {
      lo += t.coeff * r_lo;
      hi += t.coeff * r_hi;
    } else {
      lo += t.coeff * r_hi;
      hi += t.coeff * r_lo;
    }
  }
  return {lo, hi};
}

int Surd::sign() const {
  if (terms_.empty()) return 0;
  if (is_rational()) return sgn(terms_.front().coeff);
  for (unsigned bits = 64; bits <= (1u << 20); bits *= 2) {
    auto [lo, hi] = enclosure(bits);
    if (sgn(lo) > 0) return 1;
    if (sgn(hi) < 0) return -1;
  }
  throw std::runtime_error("Surd::sign: refinement did not separate from zero");
}

double Surd::to_double() const {
  if (terms_.empty()) return 0.0;
  auto [lo, hi] = enclosure(64);
  mpq_class mid = (lo + hi) / 2;
  return mid.get_d();
}

std::string Surd::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    if (!first) os << " + ";
    first = false;
    os << t.coeff.get_str();
    if (t.radicand != 1) os << "*sqrt(" << t.radicand.get_str() << ")";
  }
  return os.str();
}

}  // namespace pconvex
