#include "autorb/gf.hpp"

#include <stdexcept>

namespace autorb {

namespace {

std::vector<unsigned> digits_of(unsigned value, unsigned p, unsigned k) {
  std::vector<unsigned> d(k);
  for (unsigned i = 0; i < k; ++i) {
    d[i] = value % p;
    value /= p;
  }
  return d;
}

unsigned value_of(const std::vector<unsigned>& d, unsigned p, unsigned k) {
  unsigned v = 0;
  for (unsigned i = k; i-- > 0;) v = v * p + d[i];
  return v;
}

}  // namespace

GaloisField::GaloisField(unsigned p, unsigned k, std::vector<unsigned> modulus)
    : p_(p), k_(k) {
  q_ = 1;
  for (unsigned i = 0; i < k; ++i) q_ *= p;

  add_.resize(q_ * q_);
  mul_.resize(q_ * q_);
  neg_.resize(q_);
  inv_.assign(q_, 0);

  for (unsigned a = 0; a < q_; ++a) {
    std::vector<unsigned> da = digits_of(a, p, k);
    std::vector<unsigned> nd(k);
    for (unsigned i = 0; i < k; ++i) nd[i] = (p - da[i]) % p;
    neg_[a] = value_of(nd, p, k);
    for (unsigned b = 0; b < q_; ++b) {
      std::vector<unsigned> db = digits_of(b, p, k);
      std::vector<unsigned> sum(k);
      for (unsigned i = 0; i < k; ++i) sum[i] = (da[i] + db[i]) % p;
      add_[a * q_ + b] = value_of(sum, p, k);

      // polynomial product reduced modulo the fixed irreducible
      std::vector<unsigned> prod(2 * k - 1, 0);
      for (unsigned i = 0; i < k; ++i)
        for (unsigned j = 0; j < k; ++j)
          prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
      for (unsigned deg = 2 * k - 2; deg >= k && deg < prod.size(); --deg) {
        unsigned coeff = prod[deg];
        if (coeff == 0) continue;
        prod[deg] = 0;
        // x^k = -(modulus below degree k), multiplied through by x^(deg-k)
        for (unsigned i = 0; i < k; ++i) {
          unsigned sub = (coeff * modulus[i]) % p;
          unsigned at = deg - k + i;
          prod[at] = (prod[at] + p - sub) % p;
        }
      }
      std::vector<unsigned> low(prod.begin(), prod.begin() + k);
      mul_[a * q_ + b] = value_of(low, p, k);
    }
  }

  for (unsigned a = 1; a < q_; ++a)
    for (unsigned b = 1; b < q_; ++b)
      if (mul_[a * q_ + b] == 1) {
        inv_[a] = b;
        break;
      }

  for (unsigned g = 1; g < q_; ++g) {
    unsigned x = g;
    unsigned order = 1;
    while (x != 1) {
      x = mul_[x * q_ + g];
      ++order;
    }
    if (order == q_ - 1) {
      primitive_ = g;
      break;
    }
  }
}

unsigned GaloisField::inv(unsigned a) const {
  if (a == 0) throw std::domain_error("zero has no multiplicative inverse");
  return inv_[a];
}

const GaloisField& GaloisField::of(unsigned q) {
  static const GaloisField gf2(2, 1, {0});
  static const GaloisField gf3(3, 1, {0});
  static const GaloisField gf4(2, 2, {1, 1});     // x^2 + x + 1
  static const GaloisField gf5(5, 1, {0});
  static const GaloisField gf7(7, 1, {0});
  static const GaloisField gf8(2, 3, {1, 1, 0});  // x^3 + x + 1
  static const GaloisField gf9(3, 2, {1, 0});     // x^2 + 1
  static const GaloisField gf11(11, 1, {0});
  switch (q) {
    case 2: return gf2;
    case 3: return gf3;
    case 4: return gf4;
    case 5: return gf5;
    case 7: return gf7;
    case 8: return gf8;
    case 9: return gf9;
    case 11: return gf11;
    default: throw std::invalid_argument("unsupported field size " + std::to_string(q));
  }
}

}  // namespace autorb
