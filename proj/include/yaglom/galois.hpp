#pragma once

// Arithmetic in GF(p) polynomials and in the extension field GF(p^k).

#include <cstdint>
#include <vector>

namespace yaglom {

/// Polynomial over GF(p), coefficient of z^i at index i.
using Polynomial = std::vector<int>;

Polynomial poly_trim(Polynomial f);
Polynomial poly_mul(const Polynomial& a, const Polynomial& b, int p);
/// Remainder of a modulo a nonzero b.
Polynomial poly_mod(const Polynomial& a, const Polynomial& b, int p);
bool is_irreducible(const Polynomial& f, int p);
int mod_inverse(int a, int p);

/// Element of GF(p^k): a polynomial of degree < k over GF(p).
struct FieldElement {
  std::vector<int> coeffs;
  friend bool operator==(const FieldElement&, const FieldElement&) = default;
};

/// GF(p^k) = GF(p)[z] / (m(z)), where m is the first monic irreducible of
/// degree k when the non-leading coefficients (c_{k-1}, ..., c_0) are read
/// as a base-p number.
class GaloisField {
 public:
  GaloisField(int p, int k);

  int characteristic() const { return p_; }
  int degree() const { return k_; }
  std::int64_t order() const { return order_; }
  const Polynomial& modulus() const { return modulus_; }

  FieldElement zero() const { return FieldElement{std::vector<int>(k_, 0)}; }
  FieldElement one() const;
  /// Element whose coefficients are the base-p digits of `index` (c_0 least significant).
  FieldElement element(std::int64_t index) const;
  std::int64_t index(const FieldElement& a) const;
  bool is_zero(const FieldElement& a) const;

  FieldElement add(const FieldElement& a, const FieldElement& b) const;
  FieldElement sub(const FieldElement& a, const FieldElement& b) const;
  FieldElement neg(const FieldElement& a) const;
  FieldElement mul(const FieldElement& a, const FieldElement& b) const;
  FieldElement scale(const FieldElement& a, int c) const;
  FieldElement pow(FieldElement a, std::int64_t e) const;
  /// Throws DomainError for zero.
  FieldElement inv(const FieldElement& a) const;

  void check(const FieldElement& a) const;

 private:
  int p_;
  int k_;
  std::int64_t order_;
  Polynomial modulus_;
};

}  // namespace yaglom
