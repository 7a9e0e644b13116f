#include "magn/symfun.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <ostream>
#include <set>

#include "magn/errors.hpp"

namespace magn {

Partition::Partition(std::initializer_list<unsigned> parts) : Partition(std::vector<unsigned>(parts)) {}

Partition::Partition(std::vector<unsigned> parts) : parts_(std::move(parts)) {
  for (unsigned p : parts_) {
    if (p == 0) throw DomainError("partition parts must be positive");
    weight_ += p;
  }
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
}

unsigned Partition::multiplicity(unsigned i) const {
  return static_cast<unsigned>(std::count(parts_.begin(), parts_.end(), i));
}

std::string Partition::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out + "]";
}

std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
  if (auto c = a.weight_ <=> b.weight_; c != 0) return c;
  return b.parts_ <=> a.parts_;
}

std::ostream& operator<<(std::ostream& os, const Partition& p) { return os << p.to_string(); }

std::vector<Partition> partitions(unsigned n) {
  std::vector<Partition> out;
  std::vector<unsigned> cur;
  std::function<void(unsigned, unsigned)> rec = [&](unsigned rest, unsigned max_part) {
    if (rest == 0) {
      out.emplace_back(cur);
      return;
    }
    for (unsigned p = std::min(rest, max_part); p >= 1; --p) {
      cur.push_back(p);
      rec(rest - p, p);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

int mobius(unsigned d) {
  if (d == 0) throw DomainError("mobius requires d >= 1");
  int sign = 1;
  for (unsigned p = 2; p * p <= d; ++p) {
    if (d % p) continue;
    d /= p;
    if (d % p == 0) return 0;
    sign = -sign;
  }
  if (d > 1) sign = -sign;
  return sign;
}

Integer z_lambda(const Partition& lambda) {
  Integer z = 1;
  auto parts = lambda.parts();
  std::size_t i = 0;
  while (i < parts.size()) {
    std::size_t j = i;
    while (j < parts.size() && parts[j] == parts[i]) ++j;
    unsigned m = static_cast<unsigned>(j - i);
    Integer pw;
    mpz_ui_pow_ui(pw.get_mpz_t(), parts[i], m);
    z *= pw * factorial(m);
    i = j;
  }
  return z;
}

namespace {

// chi over a beta-set; removes the hooks lambda[idx..] in order.
Integer mn_beta(std::vector<unsigned>& beta, std::span<const unsigned> lambda, std::size_t idx) {
  if (idx == lambda.size()) return 1;
  unsigned r = lambda[idx];
  Integer total = 0;
  for (std::size_t i = 0; i < beta.size(); ++i) {
    unsigned b = beta[i];
    if (b < r) continue;
    unsigned nb = b - r;
    if (std::find(beta.begin(), beta.end(), nb) != beta.end()) continue;
    int between = 0;
    for (unsigned x : beta)
      if (x > nb && x < b) ++between;
    beta[i] = nb;
    Integer sub = mn_beta(beta, lambda, idx + 1);
    beta[i] = b;
    if (between % 2) total -= sub;
    else total += sub;
  }
  return total;
}

}  // namespace

Integer mn_character(const Partition& mu, const Partition& lambda) {
  if (mu.weight() != lambda.weight()) throw DomainError("character requires partitions of equal weight");
  std::size_t l = mu.length();
  std::vector<unsigned> beta(l);
  for (std::size_t i = 0; i < l; ++i) beta[i] = mu.parts()[i] + static_cast<unsigned>(l - 1 - i);
  return mn_beta(beta, lambda.parts(), 0);
}

Integer specht_dimension(const Partition& mu) {
  auto parts = mu.parts();
  Integer hooks = 1;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    for (unsigned j = 0; j < parts[i]; ++j) {
      unsigned arm = parts[i] - j - 1;
      unsigned leg = 0;
      for (std::size_t k = i + 1; k < parts.size() && parts[k] > j; ++k) ++leg;
      hooks *= arm + leg + 1;
    }
  }
  return factorial(mu.weight()) / hooks;
}

SymFunc SymFunc::power_sum(const Partition& lambda, const Rational& coeff) {
  SymFunc f;
  f.add_term(lambda, coeff);
  return f;
}

Rational SymFunc::coefficient(const Partition& lambda) const {
  auto it = terms_.find(lambda);
  return it == terms_.end() ? Rational(0) : it->second;
}

void SymFunc::add_term(const Partition& lambda, const Rational& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(lambda, coeff);
  if (inserted) return;
  it->second += coeff;
  if (it->second == 0) terms_.erase(it);
}

SymFunc SymFunc::homogeneous_part(unsigned weight) const {
  SymFunc out;
  for (const auto& [p, c] : terms_)
    if (p.weight() == weight) out.terms_.emplace(p, c);
  return out;
}

SymFunc SymFunc::truncated(unsigned max_weight) const {
  SymFunc out;
  for (const auto& [p, c] : terms_)
    if (p.weight() <= max_weight) out.terms_.emplace(p, c);
  return out;
}

bool SymFunc::is_homogeneous() const {
  return terms_.empty() || terms_.begin()->first.weight() == terms_.rbegin()->first.weight();
}

unsigned SymFunc::min_weight() const { return terms_.empty() ? 0 : terms_.begin()->first.weight(); }

SymFunc& SymFunc::operator+=(const SymFunc& other) {
  for (const auto& [p, c] : other.terms_) add_term(p, c);
  return *this;
}

SymFunc& SymFunc::operator-=(const SymFunc& other) {
  for (const auto& [p, c] : other.terms_) add_term(p, -c);
  return *this;
}

SymFunc& SymFunc::operator*=(const Rational& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [p, c] : terms_) c *= scalar;
  return *this;
}

namespace {

Partition merge(const Partition& a, const Partition& b) {
  std::vector<unsigned> parts(a.parts().begin(), a.parts().end());
  parts.insert(parts.end(), b.parts().begin(), b.parts().end());
  return Partition(std::move(parts));
}

}  // namespace

SymFunc multiply_truncated(const SymFunc& a, const SymFunc& b, unsigned max_weight) {
  SymFunc out;
  for (const auto& [pa, ca] : a.terms()) {
    if (pa.weight() > max_weight) break;
    for (const auto& [pb, cb] : b.terms()) {
      if (pa.weight() + pb.weight() > max_weight) break;
      out.add_term(merge(pa, pb), ca * cb);
    }
  }
  return out;
}

SymFunc operator*(const SymFunc& a, const SymFunc& b) {
  SymFunc out;
  for (const auto& [pa, ca] : a.terms())
    for (const auto& [pb, cb] : b.terms()) out.add_term(merge(pa, pb), ca * cb);
  return out;
}

SymFunc plethysm_power(unsigned d, const SymFunc& f) {
  if (d == 0) throw DomainError("plethysm by p_0 is undefined");
  SymFunc out;
  for (const auto& [p, c] : f.terms()) {
    std::vector<unsigned> parts(p.parts().begin(), p.parts().end());
    for (unsigned& x : parts) x *= d;
    out.add_term(Partition(std::move(parts)), c);
  }
  return out;
}

SymFunc sf_log(const SymFunc& f, unsigned max_weight) {
  if (f.is_zero()) return f;
  if (f.min_weight() == 0) throw DomainError("plethystic log requires no weight-0 term");
  unsigned w = f.min_weight();
  SymFunc out;
  for (unsigned d = 1; d * w <= max_weight; ++d) {
    int mu = mobius(d);
    if (mu == 0) continue;
    SymFunc g = plethysm_power(d, f).truncated(max_weight);
    SymFunc power = g;
    for (unsigned n = 1; n * d * w <= max_weight; ++n) {
      Rational coeff(mu * (n % 2 ? 1 : -1), static_cast<long>(d) * n);
      coeff.canonicalize();
      out += coeff * power;
      power = multiply_truncated(power, g, max_weight);
    }
  }
  return out;
}

SymFunc ch_operad(ArityBound bound, unsigned max_weight) {
  SymFunc out;
  std::vector<Integer> c = bounded_sequence(bound, max_weight);
  for (unsigned k = 1; k <= max_weight; ++k) out.add_term(Partition(std::vector<unsigned>(k, 1)), Rational(c[k - 1]));
  return out;
}

SymFunc ch_prim(unsigned n, ArityBound bound) {
  if (n == 0) throw DomainError("ch_prim requires n >= 1");
  std::vector<Integer> cp = log_bounded_sequence(bound, n);
  SymFunc out;
  for (unsigned d = 1; d <= n; ++d) {
    if (n % d) continue;
    int mu = mobius(d);
    if (mu == 0) continue;
    Rational coeff(Integer(mu) * cp[n / d - 1], n);
    coeff.canonicalize();
    out.add_term(Partition(std::vector<unsigned>(n / d, d)), coeff);
  }
  return out;
}

std::map<Partition, Rational> to_schur(const SymFunc& f) {
  if (!f.is_homogeneous()) throw DomainError("Schur expansion requires a homogeneous function");
  std::map<Partition, Rational> out;
  if (f.is_zero()) return out;
  unsigned n = f.min_weight();
  for (const Partition& mu : partitions(n)) {
    Rational s = 0;
    for (const auto& [lambda, c] : f.terms()) s += c * Rational(mn_character(mu, lambda));
    if (s != 0) out.emplace(mu, s);
  }
  return out;
}

SymFunc from_class_function(const std::map<Partition, Rational>& values) {
  SymFunc out;
  for (const auto& [lambda, v] : values) {
    Rational c = v / Rational(z_lambda(lambda));
    out.add_term(lambda, c);
  }
  return out;
}

Series rank_morphism(const SymFunc& f, std::size_t nmax) {
  Series s(nmax);
  for (const auto& [p, c] : f.terms()) {
    if (p.weight() > nmax) continue;
    if (p.length() == 0 || p.parts()[0] == 1) s[p.weight()] += c;
  }
  return s;
}

Integer witt_multigraded(std::span<const unsigned> multidegree, std::span<const unsigned> generators) {
  if (multidegree.size() != generators.size()) throw DomainError("multidegree and generator counts differ in length");
  unsigned total = 0;
  unsigned g = 0;
  for (unsigned x : multidegree) {
    total += x;
    g = std::gcd(g, x);
  }
  if (total == 0) throw DomainError("Witt formula requires a nonzero multidegree");
  std::vector<Integer> cp = log_bounded_sequence(ArityBound::finite(2), total);
  Integer sum = 0;
  for (unsigned k = 1; k <= g; ++k) {
    if (g % k) continue;
    int mu = mobius(k);
    if (mu == 0) continue;
    unsigned dt = total / k;
    Integer term = cp[dt - 1] * factorial(dt);
    for (std::size_t i = 0; i < multidegree.size(); ++i) {
      unsigned di = multidegree[i] / k;
      term /= factorial(di);
      Integer pw;
      mpz_ui_pow_ui(pw.get_mpz_t(), generators[i], di);
      term *= pw;
    }
    sum += mu * term;
  }
  if (sum % total != 0) throw DomainError("Witt formula produced a non-integral value");
  return sum / total;
}

namespace {

std::string format_terms(const std::map<Partition, Rational>& terms, char symbol) {
  std::string out;
  for (const auto& [p, c] : terms) {
    if (out.empty()) {
      out += to_string(c);
    } else {
      out += c < 0 ? " - " : " + ";
      out += to_string(Rational(abs(c)));
    }
    out += '*';
    out += symbol;
    out += p.to_string();
  }
  return out.empty() ? "0" : out;
}

}  // namespace

std::string format_symfunc(const SymFunc& f) { return format_terms(f.terms(), 'p'); }
std::string format_schur(const std::map<Partition, Rational>& coeffs) { return format_terms(coeffs, 's'); }

}  // namespace magn
