#pragma once

#include <vector>

namespace autorb {

/// Arithmetic tables for GF(q), q in {2,3,4,5,7,8,9,11}. Elements are encoded
/// as integers 0..q-1 whose base-p digits are the polynomial coefficients over
/// the prime subfield. Extension fields use fixed irreducible polynomials
/// (GF(4): x^2+x+1, GF(8): x^3+x+1, GF(9): x^2+1) so element encodings are
/// identical across runs and platforms.
class GaloisField {
 public:
  static const GaloisField& of(unsigned q);

  unsigned q() const { return q_; }
  unsigned p() const { return p_; }
  unsigned k() const { return k_; }

  unsigned add(unsigned a, unsigned b) const { return add_[a * q_ + b]; }
  unsigned mul(unsigned a, unsigned b) const { return mul_[a * q_ + b]; }
  unsigned neg(unsigned a) const { return neg_[a]; }
  unsigned inv(unsigned a) const;  // a != 0

  /// Smallest element generating the multiplicative group.
  unsigned primitive_element() const { return primitive_; }
  /// Encoding of the polynomial generator x (equals p for extension fields).
  unsigned poly_generator() const { return k_ == 1 ? 1 : p_; }

 private:
  GaloisField(unsigned p, unsigned k, std::vector<unsigned> modulus);

  unsigned p_ = 0, k_ = 0, q_ = 0;
  unsigned primitive_ = 0;
  std::vector<unsigned> add_, mul_, neg_, inv_;
};

}  // namespace autorb
