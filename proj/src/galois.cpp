#include "yaglom/galois.hpp"

#include "yaglom/errors.hpp"
#include "yaglom/primality.hpp"

#include <string>

namespace yaglom {

namespace {

int mod(std::int64_t v, int p) {
  const int r = int(v % p);
  return r < 0 ? r + p : r;
}

std::int64_t checked_power(int p, int k) {
  std::int64_t out = 1;
  for (int i = 0; i < k; ++i) {
    if (out > (std::int64_t(1) << 40) / p) throw UsageError("field GF(p^k) too large for desk-scale arithmetic");
    out *= p;
  }
  return out;
}

// Monic polynomial of the given degree whose lower coefficients are the base-p digits of `index`.
Polynomial monic_from_index(std::int64_t index, int degree, int p) {
  Polynomial f(degree + 1, 0);
  for (int i = 0; i < degree; ++i) {
    f[i] = int(index % p);
    index /= p;
  }
  f[degree] = 1;
  return f;
}

}  // namespace

Polynomial poly_trim(Polynomial f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
  return f;
}

Polynomial poly_mul(const Polynomial& a, const Polynomial& b, int p) {
  if (a.empty() || b.empty()) return {};
  Polynomial out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = mod(out[i + j] + std::int64_t(a[i]) * b[j], p);
  }
  return poly_trim(out);
}

int mod_inverse(int a, int p) {
  a = mod(a, p);
  if (a == 0) throw DomainError("zero has no inverse mod " + std::to_string(p));
  // extended Euclid
  int r0 = p, r1 = a, s0 = 0, s1 = 1;
  while (r1 != 0) {
    const int quot = r0 / r1;
    r0 -= quot * r1;
    std::swap(r0, r1);
    s0 -= quot * s1;
    std::swap(s0, s1);
  }
  return mod(s0, p);
}

Polynomial poly_mod(const Polynomial& a, const Polynomial& b, int p) {
  const Polynomial divisor = poly_trim(b);
  if (divisor.empty()) throw DomainError("polynomial division by zero");
  Polynomial rem = poly_trim(a);
  const int lead_inv = mod_inverse(divisor.back(), p);
  while (rem.size() >= divisor.size()) {
    const int factor = mod(std::int64_t(rem.back()) * lead_inv, p);
    const std::size_t shift = rem.size() - divisor.size();
    for (std::size_t i = 0; i < divisor.size(); ++i) {
      rem[shift + i] = mod(rem[shift + i] - std::int64_t(factor) * divisor[i], p);
    }
    rem = poly_trim(rem);
  }
  return rem;
}

bool is_irreducible(const Polynomial& f, int p) {
  const Polynomial g = poly_trim(f);
  const int degree = int(g.size()) - 1;
  if (degree < 1) return false;
  for (int d = 1; 2 * d <= degree; ++d) {
    const std::int64_t count = checked_power(p, d);
    for (std::int64_t idx = 0; idx < count; ++idx) {
      if (poly_mod(g, monic_from_index(idx, d, p), p).empty()) return false;
    }
  }
  return true;
}

GaloisField::GaloisField(int p, int k) : p_(p), k_(k), order_(0) {
  if (p < 2 || !is_probable_prime(BigInt(p))) throw DomainError(std::to_string(p) + " is not prime");
  if (k < 1) throw DomainError("extension degree must be positive");
  order_ = checked_power(p, k);
  const std::int64_t candidates = checked_power(p, k);
  for (std::int64_t idx = 0; idx < candidates; ++idx) {
    Polynomial f = monic_from_index(idx, k, p);
    if (is_irreducible(f, p)) {
      modulus_ = std::move(f);
      return;
    }
  }
  throw DomainError("no irreducible polynomial found");  // cannot happen over a finite field
}

FieldElement GaloisField::one() const {
  FieldElement e = zero();
  e.coeffs[0] = 1;
  return e;
}

FieldElement GaloisField::element(std::int64_t index) const {
  if (index < 0 || index >= order_) throw DomainError("field index out of range");
  FieldElement e = zero();
  for (int i = 0; i < k_; ++i) {
    e.coeffs[i] = int(index % p_);
    index /= p_;
  }
  return e;
}

std::int64_t GaloisField::index(const FieldElement& a) const {
  check(a);
  std::int64_t out = 0;
  for (int i = k_ - 1; i >= 0; --i) out = out * p_ + a.coeffs[i];
  return out;
}

bool GaloisField::is_zero(const FieldElement& a) const {
  for (int c : a.coeffs) {
    if (c != 0) return false;
  }
  return true;
}

void GaloisField::check(const FieldElement& a) const {
  if (int(a.coeffs.size()) != k_) throw DomainError("field element has the wrong number of coefficients");
  for (int c : a.coeffs) {
    if (c < 0 || c >= p_) throw DomainError("field element coefficient out of range");
  }
}

FieldElement GaloisField::add(const FieldElement& a, const FieldElement& b) const {
  FieldElement out = zero();
  for (int i = 0; i < k_; ++i) out.coeffs[i] = mod(a.coeffs[i] + b.coeffs[i], p_);
  return out;
}

FieldElement GaloisField::sub(const FieldElement& a, const FieldElement& b) const {
  FieldElement out = zero();
  for (int i = 0; i < k_; ++i) out.coeffs[i] = mod(a.coeffs[i] - b.coeffs[i], p_);
  return out;
}

FieldElement GaloisField::neg(const FieldElement& a) const { return sub(zero(), a); }

FieldElement GaloisField::scale(const FieldElement& a, int c) const {
  FieldElement out = zero();
  for (int i = 0; i < k_; ++i) out.coeffs[i] = mod(std::int64_t(a.coeffs[i]) * c, p_);
  return out;
}

FieldElement GaloisField::mul(const FieldElement& a, const FieldElement& b) const {
  std::vector<std::int64_t> wide(2 * k_ - 1, 0);
  for (int i = 0; i < k_; ++i) {
    if (a.coeffs[i] == 0) continue;
    for (int j = 0; j < k_; ++j) wide[i + j] += std::int64_t(a.coeffs[i]) * b.coeffs[j];
  }
  for (auto& w : wide) w = mod(w, p_);
  // reduce by the monic modulus from the top down
  for (int deg = 2 * k_ - 2; deg >= k_; --deg) {
    const std::int64_t lead = wide[deg];
    if (lead == 0) continue;
    for (int i = 0; i <= k_; ++i) wide[deg - k_ + i] = mod(wide[deg - k_ + i] - lead * modulus_[i], p_);
  }
  FieldElement out = zero();
  for (int i = 0; i < k_; ++i) out.coeffs[i] = int(wide[i]);
  return out;
}

FieldElement GaloisField::pow(FieldElement a, std::int64_t e) const {
  FieldElement out = one();
  while (e > 0) {
    if (e & 1) out = mul(out, a);
    a = mul(a, a);
    e >>= 1;
  }
  return out;
}

FieldElement GaloisField::inv(const FieldElement& a) const {
  if (is_zero(a)) throw DomainError("zero has no inverse");
  return pow(a, order_ - 2);
}

}  // namespace yaglom
