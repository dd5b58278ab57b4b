#include "bbgroup/field.hpp"

#include <string>

#include "bbgroup/error.hpp"

namespace bbgroup {

namespace {

bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

using Poly = std::vector<std::uint32_t>;  // lowest degree first

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  // p is prime and small: Fermat
  std::uint64_t r = 1, b = a % p;
  for (std::uint32_t e = p - 2; e; e >>= 1, b = b * b % p)
    if (e & 1) r = r * b % p;
  return static_cast<std::uint32_t>(r);
}

// remainder of a modulo a nonzero polynomial m
Poly poly_mod(Poly a, const Poly& m, std::uint32_t p) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  const std::uint32_t lead_inv = inv_mod(m.back(), p);
  while (a.size() > dm && !a.empty()) {
    const std::size_t shift = a.size() - 1 - dm;
    const std::uint32_t c = static_cast<std::uint32_t>(
        static_cast<std::uint64_t>(a.back()) * lead_inv % p);
    for (std::size_t j = 0; j <= dm; ++j) {
      const std::uint64_t sub = static_cast<std::uint64_t>(c) * m[j] % p;
      a[shift + j] = static_cast<std::uint32_t>((a[shift + j] + p - sub) % p);
    }
    trim(a);
  }
  return a;
}

std::uint32_t ipow(std::uint32_t base, std::uint32_t e) {
  std::uint64_t r = 1;
  for (std::uint32_t i = 0; i < e; ++i) r *= base;
  return static_cast<std::uint32_t>(r);
}

void check_size(std::uint32_t p, std::uint32_t k) {
  if (!is_prime(p))
    throw Error(ErrorKind::InvalidSpec, "field characteristic " +
                                            std::to_string(p) + " is not prime");
  if (k == 0) throw Error(ErrorKind::InvalidSpec, "field degree must be >= 1");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < k; ++i) {
    q *= p;
    if (q > (1u << 16))
      throw Error(ErrorKind::InvalidSpec, "field order exceeds 2^16");
  }
}

}  // namespace

bool is_irreducible(std::uint32_t p, const std::vector<std::uint32_t>& poly) {
  Poly f = poly;
  trim(f);
  if (f.size() < 2) return false;
  const std::size_t deg = f.size() - 1;
  if (deg == 1) return true;
  // every monic candidate divisor of degree d in 1..deg/2
  for (std::size_t d = 1; d <= deg / 2; ++d) {
    const std::uint32_t count = ipow(p, static_cast<std::uint32_t>(d));
    for (std::uint32_t code = 0; code < count; ++code) {
      Poly g(d + 1, 0);
      std::uint32_t c = code;
      for (std::size_t j = 0; j < d; ++j) {
        g[j] = c % p;
        c /= p;
      }
      g[d] = 1;
      if (poly_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

std::vector<std::uint32_t> default_poly(std::uint32_t p, std::uint32_t k) {
  check_size(p, k);
  if (k == 1) return {0, 1};
  if (p == 2 && k == 2) return {1, 1, 1};
  if (p == 2 && k == 3) return {1, 1, 0, 1};
  if (p == 2 && k == 4) return {1, 1, 0, 0, 1};
  const std::uint32_t count = ipow(p, k);
  for (std::uint32_t code = 0; code < count; ++code) {
    Poly f(k + 1, 0);
    std::uint32_t c = code;
    for (std::uint32_t j = 0; j < k; ++j) {
      f[j] = c % p;
      c /= p;
    }
    f[k] = 1;
    if (f[0] == 0 || !is_irreducible(p, f)) continue;
    // primitive iff the class of x has multiplicative order q-1
    GaloisField field(FieldSpec{p, k, f});
    const auto x = static_cast<GaloisField::Value>(p);
    std::uint32_t ord = 1;
    for (auto acc = x; acc != 1; acc = field.mul(acc, x)) ++ord;
    if (ord == field.order() - 1) return f;
  }
  throw Error(ErrorKind::InvalidSpec, "no primitive polynomial found");
}

GaloisField::GaloisField(FieldSpec spec) : spec_(std::move(spec)) {
  check_size(spec_.p, spec_.k);
  if (spec_.poly.empty()) spec_.poly = default_poly(spec_.p, spec_.k);
  if (spec_.poly.size() != spec_.k + 1)
    throw Error(ErrorKind::InvalidSpec,
                "field polynomial must have k+1 coefficients");
  for (auto c : spec_.poly)
    if (c >= spec_.p)
      throw Error(ErrorKind::InvalidSpec,
                  "field polynomial coefficient out of range");
  if (spec_.poly.back() != 1)
    throw Error(ErrorKind::InvalidSpec, "field polynomial must be monic");
  if (!is_irreducible(spec_.p, spec_.poly))
    throw Error(ErrorKind::InvalidSpec, "field polynomial is reducible");

  q_ = ipow(spec_.p, spec_.k);
  exp_.assign(q_ - 1, 0);
  log_.assign(q_, 0);

  if (q_ == 2) {
    exp_[0] = 1;
    log_[1] = 0;
    return;
  }
  for (std::uint32_t g = 2; g < q_; ++g) {
    Value acc = 1;
    std::uint32_t n = 0;
    bool primitive = true;
    for (; n < q_ - 1; ++n) {
      exp_[n] = acc;
      acc = slow_mul(acc, static_cast<Value>(g));
      if (acc == 1 && n + 1 < q_ - 1) {
        primitive = false;
        break;
      }
    }
    if (!primitive) continue;
    for (std::uint32_t e = 0; e < q_ - 1; ++e) log_[exp_[e]] = e;
    return;
  }
  throw Error(ErrorKind::InvalidSpec, "no primitive element found");
}

GaloisField::Value GaloisField::slow_mul(Value a, Value b) const {
  const std::uint32_t p = spec_.p, k = spec_.k;
  Poly pa(k), pb(k);
  for (std::uint32_t j = 0; j < k; ++j) {
    pa[j] = a % p;
    a = static_cast<Value>(a / p);
    pb[j] = b % p;
    b = static_cast<Value>(b / p);
  }
  Poly prod(2 * k, 0);
  for (std::uint32_t i = 0; i < k; ++i)
    for (std::uint32_t j = 0; j < k; ++j)
      prod[i + j] = static_cast<std::uint32_t>(
          (prod[i + j] + static_cast<std::uint64_t>(pa[i]) * pb[j]) % p);
  Poly r = poly_mod(std::move(prod), spec_.poly, p);
  std::uint32_t out = 0;
  for (std::size_t j = r.size(); j-- > 0;) out = out * p + r[j];
  return static_cast<Value>(out);
}

GaloisField::Value GaloisField::add(Value a, Value b) const {
  const std::uint32_t p = spec_.p;
  if (p == 2) return static_cast<Value>(a ^ b);
  std::uint32_t out = 0, scale = 1;
  for (std::uint32_t j = 0; j < spec_.k; ++j) {
    out += ((a % p + b % p) % p) * scale;
    a = static_cast<Value>(a / p);
    b = static_cast<Value>(b / p);
    scale *= p;
  }
  return static_cast<Value>(out);
}

GaloisField::Value GaloisField::neg(Value a) const {
  const std::uint32_t p = spec_.p;
  if (p == 2) return a;
  std::uint32_t out = 0, scale = 1;
  for (std::uint32_t j = 0; j < spec_.k; ++j) {
    out += ((p - a % p) % p) * scale;
    a = static_cast<Value>(a / p);
    scale *= p;
  }
  return static_cast<Value>(out);
}

GaloisField::Value GaloisField::sub(Value a, Value b) const {
  return add(a, neg(b));
}

GaloisField::Value GaloisField::mul(Value a, Value b) const {
  if (a == 0 || b == 0) return 0;
  return exp_[(log_[a] + log_[b]) % (q_ - 1)];
}

GaloisField::Value GaloisField::inv(Value a) const {
  if (a == 0) throw Error(ErrorKind::Precondition, "inverse of zero");
  return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

GaloisField::Value GaloisField::pow(Value a, std::uint64_t e) const {
  if (e == 0) return 1;
  if (a == 0) return 0;
  return exp_[(static_cast<std::uint64_t>(log_[a]) * (e % (q_ - 1))) % (q_ - 1)];
}

std::uint32_t GaloisField::log(Value a) const {
  if (a == 0 || a >= q_) throw Error(ErrorKind::Precondition, "log of zero");
  return log_[a];
}

}  // namespace bbgroup
