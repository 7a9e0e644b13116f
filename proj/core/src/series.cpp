#include "magn/series.hpp"

#include <algorithm>
#include <ostream>

#include "magn/errors.hpp"

namespace magn {

Series::Series(std::vector<Rational> coeffs, std::size_t nmax) : coeffs_(std::move(coeffs)) {
  coeffs_.resize(nmax + 1, 0);
}

Series Series::constant(const Rational& c, std::size_t nmax) {
  Series s(nmax);
  s[0] = c;
  return s;
}

Series Series::variable(std::size_t nmax) {
  Series s(nmax);
  if (nmax >= 1) s[1] = 1;
  return s;
}

Series Series::truncated(std::size_t nmax) const {
  if (nmax > this->nmax()) throw DomainError("cannot extend a truncated series");
  return Series(std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(nmax + 1)), nmax);
}

Series& Series::operator+=(const Series& other) {
  coeffs_.resize(std::min(nmax(), other.nmax()) + 1);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += other.coeffs_[k];
  return *this;
}

Series& Series::operator-=(const Series& other) {
  coeffs_.resize(std::min(nmax(), other.nmax()) + 1);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= other.coeffs_[k];
  return *this;
}

Series& Series::operator*=(const Rational& scalar) {
  for (Rational& c : coeffs_) c *= scalar;
  return *this;
}

Series operator*(const Series& a, const Series& b) {
  std::size_t n = std::min(a.nmax(), b.nmax());
  Series out(n);
  for (std::size_t i = 0; i <= n; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; i + j <= n; ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

Series derivative(const Series& f) {
  if (f.nmax() == 0) throw DomainError("derivative of an order-0 series has no coefficients");
  Series out(f.nmax() - 1);
  for (std::size_t k = 1; k <= f.nmax(); ++k) out[k - 1] = f[k] * Rational(static_cast<unsigned long>(k));
  return out;
}

Series integrate(const Series& f) {
  Series out(f.nmax() + 1);
  for (std::size_t k = 0; k <= f.nmax(); ++k) out[k + 1] = f[k] / Rational(static_cast<unsigned long>(k + 1));
  return out;
}

namespace {

void require_zero_constant(const Series& f, const char* op) {
  if (f[0] != 0) throw DomainError(std::string(op) + " requires a zero constant term");
}

}  // namespace

Series reciprocal1p(const Series& f) {
  require_zero_constant(f, "reciprocal1p");
  Series r(f.nmax());
  r[0] = 1;
  for (std::size_t n = 1; n <= f.nmax(); ++n) {
    Rational acc = 0;
    for (std::size_t k = 1; k <= n; ++k) acc += f[k] * r[n - k];
    r[n] = -acc;
  }
  return r;
}

Series log1p(const Series& f) {
  require_zero_constant(f, "log1p");
  if (f.nmax() == 0) return Series(0);
  Series df = derivative(f);
  return integrate(df * reciprocal1p(f.truncated(df.nmax())));
}

Series sqrt1p(const Series& f) {
  require_zero_constant(f, "sqrt1p");
  std::size_t n = f.nmax();
  // s_{k+1} = (s_k + (1 + f) / s_k) / 2 doubles the number of correct terms
  Series s = Series::constant(1, n);
  Series one_plus_f = f;
  one_plus_f[0] = 1;
  std::size_t correct = 1;
  while (correct <= n) {
    correct = std::min(2 * correct, n + 1);
    std::size_t order = correct - 1;
    Series sk = s.truncated(order);
    Series g = sk;
    g[0] = 0;  // sk = 1 + g
    Series next = sk + one_plus_f.truncated(order) * reciprocal1p(g);
    next *= Rational(1, 2);
    s = Series(std::vector<Rational>(next.coefficients().begin(), next.coefficients().end()), n);
  }
  return s;
}

Series compose(const Series& f, const Series& g) {
  require_zero_constant(g, "compose");
  std::size_t n = std::min(f.nmax(), g.nmax());
  Series out = Series::constant(f[f.nmax()], n);
  Series gt = g.truncated(n);
  for (std::size_t k = f.nmax(); k-- > 0;) {
    out = out * gt;
    out[0] += f[k];
  }
  return out;
}

DerivedSequence log_derive_sequence(std::span<const Rational> a) {
  DerivedSequence out;
  std::size_t m = a.size();
  if (m == 0) return out;
  Series f(m);
  for (std::size_t n = 1; n <= m; ++n) f[n] = a[n - 1];
  Series logf = log1p(f);
  for (std::size_t n = 1; n <= m; ++n) {
    Rational v = logf[n] * Rational(static_cast<unsigned long>(n));
    if (!is_integral(v)) out.integral = false;
    out.values.push_back(std::move(v));
  }
  return out;
}

DerivedSequence log_derive_sequence(std::span<const Integer> a) {
  std::vector<Rational> q(a.begin(), a.end());
  return log_derive_sequence(q);
}

std::vector<Integer> bounded_sequence(ArityBound bound, std::size_t m) {
  std::vector<Integer> out;
  out.reserve(m);
  for (std::size_t n = 1; n <= m; ++n) out.push_back(c_bounded(bound, n));
  return out;
}

std::vector<Integer> catalan_sequence(std::size_t m) {
  std::vector<Integer> out;
  for (std::size_t n = 1; n <= m; ++n) out.push_back(catalan(n));
  return out;
}

std::vector<Integer> super_catalan_sequence(std::size_t m) { return bounded_sequence(ArityBound::omega(), m); }

std::vector<Integer> log_bounded_sequence(ArityBound bound, std::size_t m) {
  DerivedSequence d = log_derive_sequence(bounded_sequence(bound, m));
  if (!d.integral) throw DomainError("logarithmic derivative of tree counts is not integral");
  std::vector<Integer> out;
  out.reserve(m);
  for (const Rational& v : d.values) out.push_back(v.get_num());
  return out;
}

Series operad_generating_series(ArityBound bound, std::size_t nmax) {
  Series s(nmax);
  std::vector<Integer> c = bounded_sequence(bound, nmax);
  for (std::size_t n = 1; n <= nmax; ++n) s[n] = Rational(c[n - 1]);
  return s;
}

Series prim_generating_series(ArityBound bound, std::size_t nmax) { return log1p(operad_generating_series(bound, nmax)); }

std::vector<Rational> generators_from_counts(std::span<const Rational> c) {
  std::size_t m = c.size();
  Series f(m);
  for (std::size_t n = 1; n <= m; ++n) f[n] = c[n - 1];
  Series r = reciprocal1p(f);
  std::vector<Rational> e;
  e.reserve(m);
  for (std::size_t n = 1; n <= m; ++n) e.push_back(-r[n]);
  return e;
}

std::vector<Rational> generators_from_catalan(ArityBound bound, std::size_t nmax) {
  std::vector<Integer> c = bounded_sequence(bound, nmax);
  std::vector<Rational> q(c.begin(), c.end());
  return generators_from_counts(q);
}

std::string format_series(const Series& f) {
  std::string out;
  for (std::size_t k = 0; k <= f.nmax(); ++k) {
    const Rational& c = f[k];
    if (c == 0) continue;
    if (out.empty()) {
      out += to_string(c);
    } else {
      out += c < 0 ? " - " : " + ";
      out += to_string(Rational(abs(c)));
    }
    if (k == 1) out += "*t";
    if (k >= 2) out += "*t^" + std::to_string(k);
  }
  return out.empty() ? "0" : out;
}

std::ostream& operator<<(std::ostream& os, const Series& f) { return os << format_series(f); }

}  // namespace magn
