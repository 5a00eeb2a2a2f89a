#ifndef SYMTRACE_FIELDS_HPP
#define SYMTRACE_FIELDS_HPP

#include <algorithm>
#include <map>
#include <memory>
#include <optional>
#include <sstream>

#include "symtrace/core.hpp"

namespace symtrace {

enum class FieldKind { PrimeField, Cyclotomic };

namespace detail {

using ZPoly = std::vector<BigInt>;  // coefficient of x^i at index i

inline void zpoly_trim(ZPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Exact division in Z[x]; the divisor must be monic and divide evenly.
inline ZPoly zpoly_divexact(ZPoly num, const ZPoly& den) {
  ZPoly q(num.size() >= den.size() ? num.size() - den.size() + 1 : 0, BigInt(0));
  while (num.size() >= den.size() && !num.empty()) {
    BigInt c = num.back();
    std::size_t shift = num.size() - den.size();
    q[shift] = c;
    for (std::size_t i = 0; i < den.size(); ++i) num[shift + i] -= c * den[i];
    zpoly_trim(num);
  }
  if (!num.empty()) fail(errc::bad_input, "polynomial division not exact");
  return q;
}

/// n-th cyclotomic polynomial: divide x^n - 1 by all lower-order factors.
inline const ZPoly& cyclotomic_polynomial(long n) {
  static std::map<long, ZPoly> memo;
  auto it = memo.find(n);
  if (it != memo.end()) return it->second;
  ZPoly xn1(static_cast<std::size_t>(n) + 1, BigInt(0));
  xn1[0] = -1;
  xn1.back() = 1;
  ZPoly acc = std::move(xn1);
  for (long d = 1; d < n; ++d) {
    if (n % d == 0) acc = zpoly_divexact(std::move(acc), cyclotomic_polynomial(d));
  }
  return memo.emplace(n, std::move(acc)).first->second;
}

}  // namespace detail

/// Field descriptor: a prime field GF(p) known to contain an n-th root of
/// unity, or the cyclotomic field Q(zeta_n) modeled as Q[x]/(Phi_n).
/// Immutable and cheap to copy.
class FieldCtx {
 public:
  static FieldCtx gf(std::uint64_t p, long n) {
    require(n >= 1, errc::out_of_range, "n must be positive");
    require(p != 2, errc::bad_characteristic, "characteristic 2 not supported");
    require(nt::is_prime(p), errc::not_prime, std::to_string(p) + " is not prime");
    require(static_cast<std::uint64_t>(n) % p != 0, errc::bad_characteristic,
            "p divides n: p=" + std::to_string(p));
    require(n == 1 || p % static_cast<std::uint64_t>(n) == 1, errc::no_root_of_unity,
            "p = " + std::to_string(p) + " is not 1 mod " + std::to_string(n));
    auto impl = std::make_shared<Impl>();
    impl->kind = FieldKind::PrimeField;
    impl->p = p;
    impl->n = n;
    return FieldCtx(std::move(impl));
  }

  static FieldCtx cyclo(long n) {
    require(n >= 1, errc::out_of_range, "n must be positive");
    auto impl = std::make_shared<Impl>();
    impl->kind = FieldKind::Cyclotomic;
    impl->p = 0;
    impl->n = n;
    impl->modulus = detail::cyclotomic_polynomial(n);
    return FieldCtx(std::move(impl));
  }

  FieldKind kind() const { return impl_->kind; }
  bool is_gf() const { return impl_->kind == FieldKind::PrimeField; }
  bool is_cyclo() const { return impl_->kind == FieldKind::Cyclotomic; }
  std::uint64_t p() const { return impl_->p; }
  long n() const { return impl_->n; }

  /// Dimension over the prime field / over Q: 1 for GF(p), phi(n) for Q(zeta_n).
  long degree() const {
    return is_gf() ? 1 : static_cast<long>(impl_->modulus.size()) - 1;
  }

  const detail::ZPoly& modulus() const {
    require(is_cyclo(), errc::unsupported, "modulus only defined for cyclotomic contexts");
    return impl_->modulus;
  }

  bool operator==(const FieldCtx& o) const {
    return impl_->kind == o.impl_->kind && impl_->p == o.impl_->p && impl_->n == o.impl_->n;
  }
  bool operator!=(const FieldCtx& o) const { return !(*this == o); }

  std::string str() const {
    return is_gf() ? "gf(" + std::to_string(p()) + ",n=" + std::to_string(n()) + ")"
                   : "cyclo(" + std::to_string(n()) + ")";
  }

 private:
  struct Impl {
    FieldKind kind;
    std::uint64_t p;
    long n;
    detail::ZPoly modulus;
  };
  explicit FieldCtx(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;
};

inline FieldCtx gf_create(std::uint64_t p, long n) { return FieldCtx::gf(p, n); }
inline FieldCtx cyclo_create(long n) { return FieldCtx::cyclo(n); }

namespace detail {

using CycVal = std::vector<Rational>;  // coordinates w.r.t. 1, zeta, ..., zeta^(phi-1)

// Reduce a polynomial in zeta (arbitrary degree) mod Phi_n, in place, and
// resize to exactly phi coordinates.
inline void cyc_reduce(CycVal& v, const ZPoly& modulus) {
  std::size_t phi = modulus.size() - 1;
  for (std::size_t d = v.size(); d-- > phi;) {
    Rational c = v[d];
    if (c == 0) continue;
    v[d] = 0;
    for (std::size_t i = 0; i < phi; ++i) v[d - phi + i] -= c * Rational(modulus[i]);
  }
  v.resize(phi, Rational(0));
}

struct gf_ops {
  std::uint64_t p;
  using value = std::uint64_t;
  value zero() const { return 0; }
  value one() const { return 1 % p; }
  bool is_zero(const value& a) const { return a == 0; }
  bool eq(const value& a, const value& b) const { return a == b; }
  value add(const value& a, const value& b) const { return nt::addmod(a, b, p); }
  value sub(const value& a, const value& b) const { return nt::submod(a, b, p); }
  value neg(const value& a) const { return a == 0 ? 0 : p - a; }
  value mul(const value& a, const value& b) const { return nt::mulmod(a, b, p); }
  value inv(const value& a) const {
    require(a != 0, errc::division_by_zero, "inverse of 0 in GF(p)");
    return nt::powmod(a, p - 2, p);
  }
  value div(const value& a, const value& b) const { return mul(a, inv(b)); }
  value from_int(long long v) const {
    long long r = v % static_cast<long long>(p);
    if (r < 0) r += static_cast<long long>(p);
    return static_cast<value>(r);
  }
};

struct cyclo_ops {
  FieldCtx ctx;
  using value = CycVal;
  std::size_t phi() const { return ctx.modulus().size() - 1; }
  value zero() const { return value(phi(), Rational(0)); }
  value one() const { return from_int(1); }
  bool is_zero(const value& a) const {
    return std::all_of(a.begin(), a.end(), [](const Rational& c) { return c == 0; });
  }
  bool eq(const value& a, const value& b) const { return a == b; }
  value add(const value& a, const value& b) const {
    value r(a);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
  }
  value sub(const value& a, const value& b) const {
    value r(a);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
    return r;
  }
  value neg(const value& a) const {
    value r(a);
    for (auto& c : r) c = -c;
    return r;
  }
  value mul(const value& a, const value& b) const {
    value prod(a.size() + b.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] == 0) continue;
      for (std::size_t j = 0; j < b.size(); ++j) {
        if (b[j] == 0) continue;
        prod[i + j] += a[i] * b[j];
      }
    }
    cyc_reduce(prod, ctx.modulus());
    return prod;
  }
  // Extended Euclid against Phi_n; Phi_n is irreducible over Q, so every
  // nonzero residue is invertible.
  value inv(const value& a) const {
    require(!is_zero(a), errc::division_by_zero, "inverse of 0 in " + ctx.str());
    using Poly = std::vector<Rational>;
    auto trim = [](Poly& f) {
      while (!f.empty() && f.back() == 0) f.pop_back();
    };
    Poly r0(ctx.modulus().size());
    for (std::size_t i = 0; i < r0.size(); ++i) r0[i] = Rational(ctx.modulus()[i]);
    Poly r1(a.begin(), a.end());
    trim(r1);
    Poly t0, t1{Rational(1)};
    while (!r1.empty()) {
      // divide r0 by r1
      Poly q(r0.size() >= r1.size() ? r0.size() - r1.size() + 1 : 0, Rational(0));
      Poly rem = r0;
      while (rem.size() >= r1.size() && !rem.empty()) {
        Rational c = rem.back() / r1.back();
        std::size_t shift = rem.size() - r1.size();
        q[shift] = c;
        for (std::size_t i = 0; i < r1.size(); ++i) rem[shift + i] -= c * r1[i];
        trim(rem);
      }
      // (r0, r1) <- (r1, rem); (t0, t1) <- (t1, t0 - q*t1)
      Poly qt(q.size() + t1.size(), Rational(0));
      if (!q.empty() && !t1.empty()) {
        for (std::size_t i = 0; i < q.size(); ++i) {
          if (q[i] == 0) continue;
          for (std::size_t j = 0; j < t1.size(); ++j) qt[i + j] += q[i] * t1[j];
        }
      }
      trim(qt);
      Poly tnext = t0;
      tnext.resize(std::max(tnext.size(), qt.size()), Rational(0));
      for (std::size_t i = 0; i < qt.size(); ++i) tnext[i] -= qt[i];
      trim(tnext);
      r0 = std::move(r1);
      r1 = std::move(rem);
      t0 = std::move(t1);
      t1 = std::move(tnext);
    }
    // r0 = gcd (a nonzero constant), t0 its Bezout coefficient for a
    require(r0.size() == 1, errc::division_by_zero, "residue not invertible");
    value out(t0.begin(), t0.end());
    for (auto& c : out) c /= r0[0];
    out.resize(phi() + 1, Rational(0));
    cyc_reduce(out, ctx.modulus());
    return out;
  }
  value div(const value& a, const value& b) const { return mul(a, inv(b)); }
  value from_int(long long v) const {
    value r = value(phi(), Rational(0));
    r[0] = Rational(v);
    return r;
  }
};

}  // namespace detail

/// An exact element of a FieldCtx: a residue mod p, or a rational coordinate
/// vector w.r.t. the power basis of zeta. Immutable value semantics.
class FieldElem {
 public:
  FieldElem(const FieldCtx& ctx, long long v) : ctx_(ctx) {
    if (ctx_.is_gf()) {
      g_ = detail::gf_ops{ctx_.p()}.from_int(v);
    } else {
      c_ = detail::cyclo_ops{ctx_}.from_int(v);
    }
  }

  static FieldElem zero(const FieldCtx& ctx) { return FieldElem(ctx, 0); }
  static FieldElem one(const FieldCtx& ctx) { return FieldElem(ctx, 1); }

  static FieldElem from_rational(const FieldCtx& ctx, const Rational& q) {
    require(ctx.is_cyclo(), errc::unsupported, "rational constants require a cyclotomic context");
    detail::CycVal v(static_cast<std::size_t>(ctx.degree()), Rational(0));
    v[0] = q;
    detail::cyc_reduce(v, ctx.modulus());
    return FieldElem(ctx, std::move(v));
  }

  static FieldElem from_coords(const FieldCtx& ctx, detail::CycVal coords) {
    require(ctx.is_cyclo(), errc::unsupported, "coordinates require a cyclotomic context");
    require(coords.size() == static_cast<std::size_t>(ctx.degree()), errc::bad_input,
            "coordinate vector must have length phi(n)");
    return FieldElem(ctx, std::move(coords));
  }

  static FieldElem from_gf_value(const FieldCtx& ctx, std::uint64_t v) {
    require(ctx.is_gf(), errc::unsupported, "residues require a prime-field context");
    return FieldElem(ctx, v % ctx.p(), 0);
  }

  const FieldCtx& ctx() const { return ctx_; }

  bool is_zero() const {
    return ctx_.is_gf() ? g_ == 0 : detail::cyclo_ops{ctx_}.is_zero(c_);
  }

  std::uint64_t gf_value() const {
    require(ctx_.is_gf(), errc::unsupported, "not a prime-field element");
    return g_;
  }

  const detail::CycVal& coords() const {
    require(ctx_.is_cyclo(), errc::unsupported, "not a cyclotomic element");
    return c_;
  }

  bool operator==(const FieldElem& o) const {
    return ctx_ == o.ctx_ && g_ == o.g_ && c_ == o.c_;
  }
  bool operator!=(const FieldElem& o) const { return !(*this == o); }

  friend FieldElem operator+(const FieldElem& a, const FieldElem& b) {
    return binop(a, b, [](auto ops, const auto& x, const auto& y) { return ops.add(x, y); });
  }
  friend FieldElem operator-(const FieldElem& a, const FieldElem& b) {
    return binop(a, b, [](auto ops, const auto& x, const auto& y) { return ops.sub(x, y); });
  }
  friend FieldElem operator*(const FieldElem& a, const FieldElem& b) {
    return binop(a, b, [](auto ops, const auto& x, const auto& y) { return ops.mul(x, y); });
  }
  friend FieldElem operator/(const FieldElem& a, const FieldElem& b) {
    return binop(a, b, [](auto ops, const auto& x, const auto& y) { return ops.div(x, y); });
  }
  FieldElem operator-() const {
    FieldElem r(*this);
    if (ctx_.is_gf())
      r.g_ = detail::gf_ops{ctx_.p()}.neg(g_);
    else
      r.c_ = detail::cyclo_ops{ctx_}.neg(c_);
    return r;
  }

  /// a^k with exact semantics; negative exponents require a nonzero base.
  friend FieldElem pow(const FieldElem& a, long long k) {
    if (k < 0) return pow(inverse(a), -k);
    FieldElem acc = FieldElem::one(a.ctx_);
    FieldElem base = a;
    unsigned long long e = static_cast<unsigned long long>(k);
    while (e > 0) {
      if (e & 1) acc = acc * base;
      base = base * base;
      e >>= 1;
    }
    return acc;
  }

  friend FieldElem inverse(const FieldElem& a) {
    FieldElem r(a);
    if (a.ctx_.is_gf())
      r.g_ = detail::gf_ops{a.ctx_.p()}.inv(a.g_);
    else
      r.c_ = detail::cyclo_ops{a.ctx_}.inv(a.c_);
    return r;
  }

  /// Rendered as a residue, or as a polynomial in w (the chosen root of unity).
  std::string str() const {
    if (ctx_.is_gf()) return std::to_string(g_);
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (c_[i] == 0) continue;
      Rational c = c_[i];
      if (!first) os << (c > 0 ? " + " : " - ");
      if (first && c < 0) os << "-";
      Rational ac = c < 0 ? Rational(-c) : c;
      bool unit = (ac == 1) && i > 0;
      if (!unit) {
        os << numerator(ac);
        if (denominator(ac) != 1) os << "/" << denominator(ac);
      }
      if (i > 0) {
        if (!unit) os << "*";
        os << "w";
        if (i > 1) os << "^" << i;
      }
      first = false;
    }
    if (first) os << "0";
    return os.str();
  }

 private:
  FieldElem(const FieldCtx& ctx, std::uint64_t g, int) : ctx_(ctx), g_(g) {}
  FieldElem(const FieldCtx& ctx, detail::CycVal c) : ctx_(ctx), c_(std::move(c)) {}

  template <class F>
  static FieldElem binop(const FieldElem& a, const FieldElem& b, F f) {
    require(a.ctx_ == b.ctx_, errc::context_mismatch,
            a.ctx_.str() + " vs " + b.ctx_.str());
    FieldElem r(a);
    if (a.ctx_.is_gf())
      r.g_ = f(detail::gf_ops{a.ctx_.p()}, a.g_, b.g_);
    else
      r.c_ = f(detail::cyclo_ops{a.ctx_}, a.c_, b.c_);
    return r;
  }

  FieldCtx ctx_;
  std::uint64_t g_ = 0;
  detail::CycVal c_;
};

/// True iff u^n = 1 and u^(n/q) != 1 for every prime q | n.
inline bool has_exact_order(const FieldElem& u, long n) {
  if (u.is_zero()) return false;
  if (pow(u, n) != FieldElem::one(u.ctx())) return false;
  for (auto [q, e] : nt::factorize(static_cast<std::uint64_t>(n))) {
    (void)e;
    if (pow(u, n / static_cast<long>(q)) == FieldElem::one(u.ctx())) return false;
  }
  return true;
}

/// The canonical primitive n-th root of unity of a context: g^((p-1)/n) for
/// the smallest primitive root g mod p, or the class of x in Q[x]/(Phi_n).
inline FieldElem primitive_root_of_unity(const FieldCtx& ctx) {
  if (ctx.is_gf()) {
    std::uint64_t g = nt::smallest_primitive_root(ctx.p());
    std::uint64_t w = nt::powmod(g, (ctx.p() - 1) / static_cast<std::uint64_t>(ctx.n()), ctx.p());
    return FieldElem::from_gf_value(ctx, w);
  }
  detail::CycVal x(static_cast<std::size_t>(ctx.degree()) + 1, Rational(0));
  x[1] = 1;
  detail::cyc_reduce(x, ctx.modulus());
  return FieldElem::from_coords(ctx, std::move(x));
}

/// A root of unity of exact order r inside ctx, when one exists.
inline FieldElem root_of_unity_of_order(const FieldCtx& ctx, long r) {
  require(r >= 1, errc::out_of_range, "order must be positive");
  if (ctx.is_gf()) {
    require((ctx.p() - 1) % static_cast<std::uint64_t>(r) == 0, errc::no_root_of_unity,
            "GF(" + std::to_string(ctx.p()) + ") has no element of order " + std::to_string(r));
    std::uint64_t g = nt::smallest_primitive_root(ctx.p());
    return FieldElem::from_gf_value(ctx, nt::powmod(g, (ctx.p() - 1) / static_cast<std::uint64_t>(r), ctx.p()));
  }
  require(ctx.n() % r == 0, errc::no_root_of_unity,
          ctx.str() + " has no root of unity of order " + std::to_string(r));
  return pow(primitive_root_of_unity(ctx), ctx.n() / r);
}

/// Euler criterion; 0 counts as a square. Prime fields only.
inline bool is_square(const FieldElem& u) {
  require(u.ctx().is_gf(), errc::unsupported, "square testing is only decidable over GF(p) here");
  std::uint64_t p = u.ctx().p();
  if (u.gf_value() == 0) return true;
  return nt::powmod(u.gf_value(), (p - 1) / 2, p) == 1;
}

/// Smallest quadratic nonresidue mod p.
inline FieldElem smallest_nonsquare(const FieldCtx& ctx) {
  require(ctx.is_gf(), errc::unsupported, "nonsquare search requires GF(p)");
  for (std::uint64_t c = 2; c < ctx.p(); ++c) {
    if (!is_square(FieldElem::from_gf_value(ctx, c))) return FieldElem::from_gf_value(ctx, c);
  }
  fail(errc::bad_input, "GF(p) with p > 2 must contain a nonsquare");
}

inline int legendre(long long i, std::uint64_t p) {
  require(p > 2 && nt::is_prime(p), errc::not_prime, "legendre symbol needs an odd prime");
  long long r = i % static_cast<long long>(p);
  if (r < 0) r += static_cast<long long>(p);
  if (r == 0) return 0;
  return nt::powmod(static_cast<std::uint64_t>(r), (p - 1) / 2, p) == 1 ? 1 : -1;
}

/// Level of the field: least number of squares summing to -1.
/// For GF(p) the value is computed and certified by an explicit witness.
/// For Q(zeta_n) the value is a table rule (rule_derived = true): 1 when a
/// 4th root of unity is present, 2 when the odd part of n is 3 or 5 mod 8,
/// otherwise only the upper bound 4 is asserted. For n <= 2 no finite value
/// is claimed.
struct Level {
  std::optional<int> value;  // empty: no finite level asserted
  bool exact = false;        // value is exact rather than an upper bound
  bool rule_derived = false; // deduced from the root-of-unity rule, not computed
};

inline Level level(const FieldCtx& ctx) {
  if (ctx.is_gf()) {
    std::uint64_t p = ctx.p();
    bool minus1_square = is_square(FieldElem(ctx, -1));
    int s = minus1_square ? 1 : 2;
    if (p <= 10000) {
      // cross-check with an explicit sum-of-squares witness
      if (minus1_square) {
        std::uint64_t g = nt::smallest_primitive_root(p);
        std::uint64_t t = nt::powmod(g, (p - 1) / 4, p);
        require(nt::mulmod(t, t, p) == p - 1, errc::path_disagreement, "level-1 witness failed");
      } else {
        bool found = false;
        for (std::uint64_t a = 0; a < p && !found; ++a) {
          std::uint64_t rest = nt::submod(p - 1, nt::mulmod(a, a, p), p);
          for (std::uint64_t b = a; b < p; ++b) {
            if (nt::mulmod(b, b, p) == rest) {
              found = true;
              break;
            }
          }
        }
        require(found, errc::path_disagreement, "level-2 witness search failed");
      }
    }
    return Level{s, true, false};
  }
  long m = ctx.n();
  if (m % 4 == 0) return Level{1, true, true};
  if (m % 2 == 0) m /= 2;  // Q(zeta_n) = Q(zeta_(n/2)) for odd n/2
  if (m <= 2) return Level{std::nullopt, false, true};
  long r = m % 8;
  if (r == 3 || r == 5) return Level{2, true, true};
  return Level{4, false, true};
}

/// Quadratic Gauss sum for an odd prime p evaluated at a given root of unity
/// of exact order p: sum of legendre(i,p) * omega^i over i = 1..p-1.
inline FieldElem gauss_sum_at(std::uint64_t p, const FieldElem& omega_p) {
  require(p > 2 && nt::is_prime(p), errc::not_prime, "gauss sum needs an odd prime");
  require(has_exact_order(omega_p, static_cast<long>(p)), errc::no_root_of_unity,
          "gauss sum root must have exact order p");
  FieldElem acc = FieldElem::zero(omega_p.ctx());
  FieldElem wi = FieldElem::one(omega_p.ctx());
  for (std::uint64_t i = 1; i < p; ++i) {
    wi = wi * omega_p;
    int chi = legendre(static_cast<long long>(i), p);
    acc = chi == 1 ? acc + wi : acc - wi;
  }
  return acc;
}

/// Gauss sum at the canonical order-p root of the context. Its square equals
/// (-1)^((p-1)/2) * p.
inline FieldElem gauss_sum_prime(std::uint64_t p, const FieldCtx& ctx) {
  return gauss_sum_at(p, root_of_unity_of_order(ctx, static_cast<long>(p)));
}

/// Explicit square root of (-1)^((n-1)/2) * n for odd n: the product of prime
/// Gauss sums over the factorization n = p_1 ... p_t (with multiplicity),
/// each evaluated at omega^(n/p_j) where omega has exact order n.
inline FieldElem square_root_of_signed_n(long n, const FieldCtx& ctx) {
  require(n >= 1 && n % 2 == 1, errc::even_input, "n must be odd");
  FieldElem acc = FieldElem::one(ctx);
  if (n == 1) return acc;
  FieldElem omega = root_of_unity_of_order(ctx, n);
  for (auto [q, e] : nt::factorize(static_cast<std::uint64_t>(n))) {
    FieldElem wq = pow(omega, n / static_cast<long>(q));
    FieldElem tau = gauss_sum_at(q, wq);
    for (int i = 0; i < e; ++i) acc = acc * tau;
  }
  return acc;
}

}  // namespace symtrace

#endif  // SYMTRACE_FIELDS_HPP
