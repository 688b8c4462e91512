#include "pconvex/polynomial.hpp"

#include <algorithm>

#include "pconvex/errors.hpp"

namespace pconvex {

template <class T>
UPoly<T> upoly_mul(const UPoly<T>& a, const UPoly<T>& b) {
  if (a.empty() || b.empty()) return {};
  UPoly<T> out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].exactly_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

template <class T>
void upoly_add_scaled(UPoly<T>& acc, const UPoly<T>& a, const Complex<T>& s) {
  if (acc.size() < a.size()) acc.resize(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) acc[i] += a[i] * s;
}

template <class T>
Complex<T> upoly_eval(const UPoly<T>& p, const T& t) {
  Complex<T> acc;
  for (std::size_t k = p.size(); k-- > 0;) {
    acc *= t;
    acc += p[k];
  }
  return acc;
}

template <class T>
Complex<T> upoly_integral01(const UPoly<T>& p) {
  Complex<T> acc;
  for (std::size_t k = 0; k < p.size(); ++k) {
    T inv = T(1) / T(static_cast<long>(k + 1));
    acc += p[k] * inv;
  }
  return acc;
}

template <class T>
CPolynomial<T> CPolynomial<T>::constant(std::size_t nvars, const Complex<T>& c) {
  CPolynomial p(nvars);
  p.add_term(Exponent(nvars, 0), c);
  return p;
}

template <class T>
CPolynomial<T> CPolynomial<T>::variable(std::size_t nvars, std::size_t j) {
  if (j >= nvars) throw InvalidInput("variable index out of range");
  Exponent a(nvars, 0);
  a[j] = 1;
  CPolynomial p(nvars);
  p.add_term(a, Complex<T>(T(1)));
  return p;
}

template <class T>
CPolynomial<T> CPolynomial<T>::monomial(const Exponent& a, const Complex<T>& c) {
  CPolynomial p(a.size());
  p.add_term(a, c);
  return p;
}

template <class T>
void CPolynomial<T>::add_term(const Exponent& a, const Complex<T>& c) {
  if (a.size() != nvars_) throw DimensionMismatch("exponent length differs from polynomial variable count");
  if (c.exactly_zero()) return;
  auto [it, inserted] = terms_.try_emplace(a, c);
  if (!inserted) {
    it->second += c;
    if (it->second.exactly_zero()) terms_.erase(it);
  }
}

template <class T>
unsigned CPolynomial<T>::degree() const {
  unsigned d = 0;
  for (const auto& [a, c] : terms_) {
    unsigned s = 0;
    for (unsigned e : a) s += e;
    d = std::max(d, s);
  }
  return d;
}

template <class T>
Complex<T> CPolynomial<T>::evaluate(std::span<const Complex<T>> z) const {
  if (z.size() != nvars_) throw DimensionMismatch("point dimension differs from polynomial variable count");
  Complex<T> acc;
  for (const auto& [a, c] : terms_) {
    Complex<T> m = c;
    for (std::size_t j = 0; j < nvars_; ++j) {
      for (unsigned k = 0; k < a[j]; ++k) m *= z[j];
    }
    acc += m;
  }
  return acc;
}

template <class T>
CPolynomial<T> CPolynomial<T>::derivative(std::size_t j) const {
  CPolynomial out(nvars_);
  for (const auto& [a, c] : terms_) {
    if (a[j] == 0) continue;
    Exponent b = a;
    b[j] -= 1;
    out.add_term(b, c * T(static_cast<long>(a[j])));
  }
  return out;
}

template <class T>
UPoly<T> CPolynomial<T>::along(std::span<const Complex<T>> base, std::span<const Complex<T>> dir) const {
  if (base.size() != nvars_ || dir.size() != nvars_) throw DimensionMismatch("segment dimension differs from polynomial");
  // powers[j][k] = (base_j + t dir_j)^k
  std::vector<std::vector<UPoly<T>>> powers(nvars_);
  for (std::size_t j = 0; j < nvars_; ++j) powers[j].push_back(UPoly<T>{Complex<T>(T(1))});
  UPoly<T> out;
  for (const auto& [a, c] : terms_) {
    UPoly<T> m{c};
    for (std::size_t j = 0; j < nvars_; ++j) {
      if (a[j] == 0) continue;
      auto& pj = powers[j];
      while (pj.size() <= a[j]) pj.push_back(upoly_mul(pj.back(), UPoly<T>{base[j], dir[j]}));
      m = upoly_mul(m, pj[a[j]]);
    }
    upoly_add_scaled(out, m, Complex<T>(T(1)));
  }
  return out;
}

template <class T>
CPolynomial<T>& CPolynomial<T>::operator+=(const CPolynomial& o) {
  if (o.nvars_ != nvars_) throw DimensionMismatch("adding polynomials in different variable counts");
  for (const auto& [a, c] : o.terms_) add_term(a, c);
  return *this;
}

template <class T>
CPolynomial<T>& CPolynomial<T>::operator*=(const Complex<T>& s) {
  if (s.exactly_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [a, c] : terms_) c *= s;
  return *this;
}

template <class T>
CPolynomial<T> CPolynomial<T>::times(const CPolynomial& o) const {
  if (o.nvars_ != nvars_) throw DimensionMismatch("multiplying polynomials in different variable counts");
  CPolynomial out(nvars_);
  for (const auto& [a, c] : terms_) {
    for (const auto& [b, d] : o.terms_) {
      Exponent e(nvars_);
      for (std::size_t j = 0; j < nvars_; ++j) e[j] = a[j] + b[j];
      out.add_term(e, c * d);
    }
  }
  return out;
}

template <class T>
template <class U>
CPolynomial<U> CPolynomial<T>::convert() const {
  CPolynomial<U> out(nvars_);
  for (const auto& [a, c] : terms_) {
    if constexpr (std::is_same_v<T, U>) {
      out.add_term(a, c);
    } else if constexpr (NumTraits<U>::exact) {
      out.add_term(a, Complex<U>(Rational(c.re), Rational(c.im)));
    } else {
      out.add_term(a, Complex<U>(to_double(c.re), to_double(c.im)));
    }
  }
  return out;
}

template <class T>
OneForm<T>::OneForm(std::vector<CPolynomial<T>> comps) : components(std::move(comps)) {
  for (const auto& p : components) {
    if (p.nvars() != components.size()) {
      throw DimensionMismatch("one-form components must be polynomials in as many variables as there are components");
    }
  }
}

template <class T>
OneForm<T> OneForm<T>::monomial(const Exponent& a, std::size_t j) {
  const std::size_t n = a.size();
  if (j >= n) throw InvalidInput("one-form component index out of range");
  std::vector<CPolynomial<T>> comps(n, CPolynomial<T>(n));
  comps[j] = CPolynomial<T>::monomial(a);
  return OneForm(std::move(comps));
}

template <class T>
OneForm<T> OneForm<T>::exact_differential(const CPolynomial<T>& p) {
  std::vector<CPolynomial<T>> comps;
  for (std::size_t j = 0; j < p.nvars(); ++j) comps.push_back(p.derivative(j));
  return OneForm(std::move(comps));
}

template <class T>
OneForm<T>& OneForm<T>::operator+=(const OneForm& o) {
  if (o.nvars() != nvars()) throw DimensionMismatch("adding one-forms of different dimension");
  for (std::size_t j = 0; j < nvars(); ++j) components[j] += o.components[j];
  return *this;
}

template <class T>
OneForm<T>& OneForm<T>::operator*=(const Complex<T>& s) {
  for (auto& p : components) p *= s;
  return *this;
}

template <class T>
template <class U>
OneForm<U> OneForm<T>::convert() const {
  std::vector<CPolynomial<U>> comps;
  for (const auto& p : components) comps.push_back(p.template convert<U>());
  return OneForm<U>(std::move(comps));
}

namespace {

void fill_exponents(std::size_t n, unsigned d, std::size_t pos, Exponent& cur, std::vector<Exponent>& out) {
  if (pos + 1 == n) {
    cur[pos] = d;
    out.push_back(cur);
    return;
  }
  for (unsigned k = d + 1; k-- > 0;) {
    cur[pos] = k;
    fill_exponents(n, d - k, pos + 1, cur, out);
  }
}

}  // namespace

std::vector<Exponent> exponents_of_degree(std::size_t n, unsigned d) {
  std::vector<Exponent> out;
  if (n == 0) return out;
  Exponent cur(n, 0);
  fill_exponents(n, d, 0, cur, out);
  return out;
}

template <class T>
std::vector<OneForm<T>> monomial_forms(std::size_t n, unsigned max_degree) {
  std::vector<OneForm<T>> out;
  for (unsigned d = 0; d <= max_degree; ++d) {
    const auto exps = exponents_of_degree(n, d);
    for (std::size_t j = 0; j < n; ++j) {
      for (const auto& a : exps) out.push_back(OneForm<T>::monomial(a, j));
    }
  }
  return out;
}

#define PCONVEX_INSTANTIATE(T)                                                    \
  template UPoly<T> upoly_mul<T>(const UPoly<T>&, const UPoly<T>&);               \
  template void upoly_add_scaled<T>(UPoly<T>&, const UPoly<T>&, const Complex<T>&); \
  template Complex<T> upoly_eval<T>(const UPoly<T>&, const T&);                   \
  template Complex<T> upoly_integral01<T>(const UPoly<T>&);                       \
  template class CPolynomial<T>;                                                  \
  template struct OneForm<T>;                                                     \
  template CPolynomial<double> CPolynomial<T>::convert<double>() const;           \
  template CPolynomial<Rational> CPolynomial<T>::convert<Rational>() const;       \
  template OneForm<double> OneForm<T>::convert<double>() const;                   \
  template OneForm<Rational> OneForm<T>::convert<Rational>() const;               \
  template std::vector<OneForm<T>> monomial_forms<T>(std::size_t, unsigned);

PCONVEX_INSTANTIATE(double)
PCONVEX_INSTANTIATE(Rational)

#undef PCONVEX_INSTANTIATE

}  // namespace pconvex
