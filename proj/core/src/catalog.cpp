#include "autorb/catalog.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <climits>
#include <stdexcept>

#include "autorb/errors.hpp"
#include "autorb/gf.hpp"

namespace autorb {

namespace {

bool is_prime(unsigned n) {
  if (n < 2) return false;
  for (unsigned d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

unsigned long long saturating_mul(unsigned long long a, unsigned long long b) {
  if (a != 0 && b > ULLONG_MAX / a) return ULLONG_MAX;
  return a * b;
}

unsigned long long checked_pow(unsigned long long base, unsigned exp) {
  unsigned long long r = 1;
  for (unsigned i = 0; i < exp; ++i) r = saturating_mul(r, base);
  return r;
}

// 2x2 matrix over GF(q), row-major.
struct Mat2 {
  unsigned a, b, c, d;
};

Permutation projective_action(const GaloisField& f, const Mat2& m) {
  // points 0..q-1 are [x:1] indexed by the encoding of x; point q is [1:0]
  unsigned q = f.q();
  std::vector<unsigned> images(q + 1);
  for (unsigned x = 0; x < q; ++x) {
    unsigned num = f.add(f.mul(m.a, x), m.b);
    unsigned den = f.add(f.mul(m.c, x), m.d);
    images[x] = den == 0 ? q : f.mul(num, f.inv(den));
  }
  images[q] = m.c == 0 ? q : f.mul(m.a, f.inv(m.c));
  return Permutation(std::move(images));
}

Permutation vector_action(const GaloisField& f, const Mat2& m) {
  // nonzero column vectors (x,y), indexed by rank of x*q+y among nonzero codes
  unsigned q = f.q();
  std::vector<unsigned> images(q * q - 1);
  auto code = [q](unsigned x, unsigned y) { return x * q + y; };
  for (unsigned x = 0; x < q; ++x)
    for (unsigned y = 0; y < q; ++y) {
      if (x == 0 && y == 0) continue;
      unsigned ix = f.add(f.mul(m.a, x), f.mul(m.b, y));
      unsigned iy = f.add(f.mul(m.c, x), f.mul(m.d, y));
      images[code(x, y) - 1] = code(ix, iy) - 1;
    }
  return Permutation(std::move(images));
}

std::vector<Mat2> sl2_generators(const GaloisField& f) {
  // transvections [[1,x^i],[0,1]] spanning the additive group, plus the
  // Weyl element [[0,1],[-1,0]]
  std::vector<Mat2> gens;
  unsigned t = 1;
  for (unsigned i = 0; i < f.k(); ++i) {
    gens.push_back({1, t, 0, 1});
    t = f.mul(t, f.poly_generator());
  }
  gens.push_back({0, 1, f.neg(1), 0});
  return gens;
}

}  // namespace

PermutationGroup cyclic(unsigned n) {
  if (n < 1) throw UnsupportedParameterError("C(n) requires n >= 1", 0);
  std::vector<unsigned> images(n);
  for (unsigned i = 0; i < n; ++i) images[i] = (i + 1) % n;
  return PermutationGroup({Permutation(std::move(images))});
}

PermutationGroup elementary_abelian(unsigned p, unsigned k) {
  if (!is_prime(p)) throw UnsupportedParameterError("EA(p,k) requires prime p", 0);
  if (k < 1) throw UnsupportedParameterError("EA(p,k) requires k >= 1", 0);
  unsigned long long degree = checked_pow(p, k);
  if (degree > 1u << 20)
    throw CapacityError(degree, 1u << 20);
  unsigned n = static_cast<unsigned>(degree);
  std::vector<Permutation> gens;
  unsigned step = 1;
  for (unsigned i = 0; i < k; ++i) {
    std::vector<unsigned> images(n);
    for (unsigned v = 0; v < n; ++v) {
      unsigned digit = (v / step) % p;
      images[v] = digit + 1 == p ? v - digit * step : v + step;
    }
    gens.emplace_back(std::move(images));
    step *= p;
  }
  return PermutationGroup(std::move(gens));
}

PermutationGroup dihedral(unsigned m) {
  if (m < 3) throw UnsupportedParameterError("D(m) requires m >= 3", 0);
  std::vector<unsigned> rot(m), refl(m);
  for (unsigned i = 0; i < m; ++i) {
    rot[i] = (i + 1) % m;
    refl[i] = (m - i) % m;
  }
  return PermutationGroup({Permutation(std::move(rot)), Permutation(std::move(refl))});
}

PermutationGroup quaternion8() {
  // <i, j> inside SL(2,3), acting on the eight nonzero vectors of F3^2
  const GaloisField& f = GaloisField::of(3);
  Mat2 i{0, f.neg(1), 1, 0};
  Mat2 j{1, 1, 1, f.neg(1)};
  return PermutationGroup({vector_action(f, i), vector_action(f, j)});
}

PermutationGroup symmetric(unsigned n) {
  if (n < 1) throw UnsupportedParameterError("Sym(n) requires n >= 1", 0);
  if (n == 1) return PermutationGroup({Permutation(1)});
  std::vector<unsigned> swap01(n), cycle(n);
  for (unsigned i = 0; i < n; ++i) {
    swap01[i] = i;
    cycle[i] = (i + 1) % n;
  }
  swap01[0] = 1;
  swap01[1] = 0;
  if (n == 2) return PermutationGroup({Permutation(std::move(swap01))});
  return PermutationGroup({Permutation(std::move(swap01)), Permutation(std::move(cycle))});
}

PermutationGroup alternating(unsigned n) {
  if (n < 1) throw UnsupportedParameterError("Alt(n) requires n >= 1", 0);
  if (n <= 2) return PermutationGroup({Permutation(std::max(1u, n))});
  std::vector<Permutation> gens;
  for (unsigned i = 2; i < n; ++i) {
    std::vector<unsigned> images(n);
    for (unsigned j = 0; j < n; ++j) images[j] = j;
    images[0] = 1;
    images[1] = i;
    images[i] = 0;
    gens.emplace_back(std::move(images));
  }
  return PermutationGroup(std::move(gens));
}

PermutationGroup psl2(unsigned q) {
  static constexpr std::array<unsigned, 6> supported{4, 5, 7, 8, 9, 11};
  if (std::find(supported.begin(), supported.end(), q) == supported.end())
    throw UnsupportedParameterError("PSL(2,q) supports q in {4,5,7,8,9,11}", 0);
  const GaloisField& f = GaloisField::of(q);
  std::vector<Permutation> gens;
  for (const Mat2& m : sl2_generators(f)) gens.push_back(projective_action(f, m));
  return PermutationGroup(std::move(gens));
}

PermutationGroup sl2(unsigned q) {
  if (q != 4 && q != 5)
    throw UnsupportedParameterError("SL(2,q) supports q in {4,5}", 0);
  const GaloisField& f = GaloisField::of(q);
  std::vector<Permutation> gens;
  for (const Mat2& m : sl2_generators(f)) gens.push_back(vector_action(f, m));
  return PermutationGroup(std::move(gens));
}

PermutationGroup asl2_4() {
  const GaloisField& f = GaloisField::of(4);
  unsigned q = 4;
  auto code = [q](unsigned x, unsigned y) { return x * q + y; };

  std::vector<Permutation> gens;
  for (const Mat2& m : sl2_generators(f)) {
    std::vector<unsigned> images(q * q);
    for (unsigned x = 0; x < q; ++x)
      for (unsigned y = 0; y < q; ++y)
        images[code(x, y)] =
            code(f.add(f.mul(m.a, x), f.mul(m.b, y)), f.add(f.mul(m.c, x), f.mul(m.d, y)));
    gens.emplace_back(std::move(images));
  }
  // one translation; its SL-conjugates reach the whole translation subgroup
  std::vector<unsigned> shift(q * q);
  for (unsigned x = 0; x < q; ++x)
    for (unsigned y = 0; y < q; ++y) shift[code(x, y)] = code(f.add(x, 1), y);
  gens.emplace_back(std::move(shift));
  return PermutationGroup(std::move(gens));
}

PermutationGroup heisenberg(unsigned p, unsigned n, std::size_t cap) {
  if (!is_prime(p)) throw UnsupportedParameterError("Heis(p,n) requires prime p", 0);
  if (n < 1) throw UnsupportedParameterError("Heis(p,n) requires n >= 1", 0);
  unsigned long long order = checked_pow(p, 2 * n + 1);
  if (order > cap) throw CapacityError(order, cap);
  unsigned size = static_cast<unsigned>(order);

  // element (a, b, c) with a, b in F_p^n and c in F_p;
  // (a,b,c)(a',b',c') = (a+a', b+b', c+c'+a.b')
  struct Codec {
    unsigned p, n;
    std::vector<unsigned> decode(unsigned v) const {
      std::vector<unsigned> digits(2 * n + 1);
      for (unsigned i = 0; i < 2 * n + 1; ++i) {
        digits[i] = v % p;
        v /= p;
      }
      return digits;  // [c, b_0..b_{n-1}, a_0..a_{n-1}]
    }
    unsigned encode(const std::vector<unsigned>& d) const {
      unsigned v = 0;
      for (unsigned i = 2 * n + 1; i-- > 0;) v = v * p + d[i];
      return v;
    }
  } codec{p, n};

  auto right_multiply_gen = [&](bool b_side, unsigned coord) {
    std::vector<unsigned> images(size);
    for (unsigned v = 0; v < size; ++v) {
      std::vector<unsigned> d = codec.decode(v);
      if (b_side) {
        // (a,b,c) * b_i: b_i += 1, c += a_i
        d[0] = (d[0] + d[1 + n + coord]) % p;
        d[1 + coord] = (d[1 + coord] + 1) % p;
      } else {
        d[1 + n + coord] = (d[1 + n + coord] + 1) % p;
      }
      images[v] = codec.encode(d);
    }
    return Permutation(std::move(images));
  };

  std::vector<Permutation> gens;
  for (unsigned i = 0; i < n; ++i) gens.push_back(right_multiply_gen(false, i));
  for (unsigned i = 0; i < n; ++i) gens.push_back(right_multiply_gen(true, i));
  return PermutationGroup(std::move(gens));
}

PermutationGroup direct_product(const PermutationGroup& a, const PermutationGroup& b) {
  unsigned degree = a.degree() + b.degree();
  std::vector<Permutation> gens;
  for (const Permutation& g : a.generators()) {
    std::vector<unsigned> images(degree);
    for (unsigned i = 0; i < a.degree(); ++i) images[i] = g[i];
    for (unsigned i = a.degree(); i < degree; ++i) images[i] = i;
    gens.emplace_back(std::move(images));
  }
  for (const Permutation& g : b.generators()) {
    std::vector<unsigned> images(degree);
    for (unsigned i = 0; i < a.degree(); ++i) images[i] = i;
    for (unsigned i = 0; i < b.degree(); ++i) images[a.degree() + i] = a.degree() + g[i];
    gens.emplace_back(std::move(images));
  }
  return PermutationGroup(std::move(gens));
}

namespace {

struct AtomInfo {
  const char* name;        // canonical casing
  AtomKind kind;
  unsigned arity;
};

constexpr std::array<AtomInfo, 10> kAtoms{{
    {"C", AtomKind::Cyclic, 1},
    {"EA", AtomKind::ElementaryAbelian, 2},
    {"D", AtomKind::Dihedral, 1},
    {"Q8", AtomKind::Quaternion8, 0},
    {"Sym", AtomKind::Symmetric, 1},
    {"Alt", AtomKind::Alternating, 1},
    {"PSL", AtomKind::Psl2, 2},
    {"SL", AtomKind::Sl2, 2},
    {"ASL", AtomKind::Asl2, 2},
    {"Heis", AtomKind::Heisenberg, 2},
}};

std::string lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

void validate_atom(const GroupSpec::Atom& atom, std::size_t pos) {
  const std::vector<unsigned>& p = atom.params;
  switch (atom.kind) {
    case AtomKind::Cyclic:
      if (p[0] < 1) throw UnsupportedParameterError("C(n) requires n >= 1", pos);
      break;
    case AtomKind::ElementaryAbelian:
      if (!is_prime(p[0])) throw UnsupportedParameterError("EA(p,k) requires prime p", pos);
      if (p[1] < 1) throw UnsupportedParameterError("EA(p,k) requires k >= 1", pos);
      break;
    case AtomKind::Dihedral:
      if (p[0] < 3) throw UnsupportedParameterError("D(m) requires m >= 3", pos);
      break;
    case AtomKind::Quaternion8:
      break;
    case AtomKind::Symmetric:
    case AtomKind::Alternating:
      if (p[0] < 1) throw UnsupportedParameterError("degree must be >= 1", pos);
      break;
    case AtomKind::Psl2:
      if (p[0] != 2 || (p[1] != 4 && p[1] != 5 && p[1] != 7 && p[1] != 8 && p[1] != 9 && p[1] != 11))
        throw UnsupportedParameterError("PSL(2,q) supports q in {4,5,7,8,9,11}", pos);
      break;
    case AtomKind::Sl2:
      if (p[0] != 2 || (p[1] != 4 && p[1] != 5))
        throw UnsupportedParameterError("SL(2,q) supports q in {4,5}", pos);
      break;
    case AtomKind::Asl2:
      if (p[0] != 2 || p[1] != 4)
        throw UnsupportedParameterError("only ASL(2,4) is supported", pos);
      break;
    case AtomKind::Heisenberg:
      if (!is_prime(p[0])) throw UnsupportedParameterError("Heis(p,n) requires prime p", pos);
      if (p[1] < 1) throw UnsupportedParameterError("Heis(p,n) requires n >= 1", pos);
      break;
  }
}

unsigned long long atom_order(const GroupSpec::Atom& atom) {
  const std::vector<unsigned>& p = atom.params;
  switch (atom.kind) {
    case AtomKind::Cyclic: return p[0];
    case AtomKind::ElementaryAbelian: return checked_pow(p[0], p[1]);
    case AtomKind::Dihedral: return 2ull * p[0];
    case AtomKind::Quaternion8: return 8;
    case AtomKind::Symmetric: {
      unsigned long long f = 1;
      for (unsigned i = 2; i <= p[0]; ++i) f = saturating_mul(f, i);
      return f;
    }
    case AtomKind::Alternating: {
      unsigned long long f = 1;
      for (unsigned i = 2; i <= p[0]; ++i) f = saturating_mul(f, i);
      return p[0] >= 2 ? f / 2 : 1;
    }
    case AtomKind::Psl2: {
      unsigned long long q = p[1];
      unsigned long long raw = q * (q * q - 1);
      return q % 2 == 0 ? raw : raw / 2;
    }
    case AtomKind::Sl2: {
      unsigned long long q = p[1];
      return q * (q * q - 1);
    }
    case AtomKind::Asl2: return 960;
    case AtomKind::Heisenberg: return checked_pow(p[0], 2 * p[1] + 1);
  }
  return 1;
}

PermutationGroup realize_atom(const GroupSpec::Atom& atom, std::size_t max_order) {
  const std::vector<unsigned>& p = atom.params;
  switch (atom.kind) {
    case AtomKind::Cyclic: return cyclic(p[0]);
    case AtomKind::ElementaryAbelian: return elementary_abelian(p[0], p[1]);
    case AtomKind::Dihedral: return dihedral(p[0]);
    case AtomKind::Quaternion8: return quaternion8();
    case AtomKind::Symmetric: return symmetric(p[0]);
    case AtomKind::Alternating: return alternating(p[0]);
    case AtomKind::Psl2: return psl2(p[1]);
    case AtomKind::Sl2: return sl2(p[1]);
    case AtomKind::Asl2: return asl2_4();
    case AtomKind::Heisenberg: return heisenberg(p[0], p[1], max_order);
  }
  throw std::logic_error("unhandled atom kind");
}

}  // namespace

std::string GroupSpec::canonical() const {
  std::string out;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i > 0) out += " x ";
    const Atom& atom = factors[i];
    for (const AtomInfo& info : kAtoms) {
      if (info.kind != atom.kind) continue;
      out += info.name;
      if (info.arity > 0) {
        out += '(';
        for (std::size_t j = 0; j < atom.params.size(); ++j) {
          if (j > 0) out += ',';
          out += std::to_string(atom.params[j]);
        }
        out += ')';
      }
      break;
    }
  }
  return out;
}

unsigned long long GroupSpec::order() const {
  unsigned long long total = 1;
  for (const Atom& atom : factors) total = saturating_mul(total, atom_order(atom));
  return total;
}

GroupSpec parse_spec(std::string_view text) {
  GroupSpec spec;
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };

  for (;;) {
    skip_ws();
    std::size_t name_start = pos;
    std::string name;
    while (pos < text.size() &&
           (std::isalnum(static_cast<unsigned char>(text[pos])))) {
      name += text[pos];
      ++pos;
    }
    if (name.empty()) throw ParseError("expected group atom name", pos);

    const AtomInfo* info = nullptr;
    std::string folded = lower(name);
    for (const AtomInfo& candidate : kAtoms)
      if (folded == lower(candidate.name)) {
        info = &candidate;
        break;
      }
    if (info == nullptr) throw ParseError("unknown group atom '" + name + "'", name_start);

    GroupSpec::Atom atom;
    atom.kind = info->kind;
    skip_ws();
    if (info->arity > 0) {
      if (pos >= text.size() || text[pos] != '(')
        throw ParseError("expected '(' after atom name", pos);
      ++pos;
      for (unsigned i = 0; i < info->arity; ++i) {
        skip_ws();
        if (i > 0) {
          if (pos >= text.size() || text[pos] != ',')
            throw ParseError("expected ',' between parameters", pos);
          ++pos;
          skip_ws();
        }
        if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
          throw ParseError("expected integer parameter", pos);
        unsigned long value = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
          value = value * 10 + static_cast<unsigned long>(text[pos] - '0');
          if (value > 1000000) throw UnsupportedParameterError("parameter too large", pos);
          ++pos;
        }
        atom.params.push_back(static_cast<unsigned>(value));
      }
      skip_ws();
      if (pos >= text.size() || text[pos] != ')')
        throw ParseError("expected ')' after parameters", pos);
      ++pos;
    }
    validate_atom(atom, name_start);
    spec.factors.push_back(std::move(atom));

    skip_ws();
    if (pos >= text.size()) break;
    if (std::tolower(static_cast<unsigned char>(text[pos])) != 'x')
      throw ParseError("expected 'x' between factors", pos);
    ++pos;
  }
  return spec;
}

PermutationGroup realize(const GroupSpec& spec, std::size_t max_order) {
  if (spec.factors.empty()) throw std::invalid_argument("empty group spec");
  unsigned long long total = spec.order();
  if (total > max_order) throw CapacityError(total, max_order);

  PermutationGroup group = realize_atom(spec.factors.front(), max_order);
  for (std::size_t i = 1; i < spec.factors.size(); ++i)
    group = direct_product(group, realize_atom(spec.factors[i], max_order));
  return group;
}

}  // namespace autorb
