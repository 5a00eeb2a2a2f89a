#ifndef SYMTRACE_QUADFORM_HPP
#define SYMTRACE_QUADFORM_HPP

#include <optional>
#include <variant>

#include "symtrace/fields.hpp"

namespace symtrace {

namespace detail {

// --- generic dense linear algebra over a field backend ---------------------

template <class Ops>
using flat = std::vector<typename Ops::value>;

template <class Ops>
typename Ops::value det_flat(const Ops& ops, flat<Ops> a, long n) {
  using V = typename Ops::value;
  V det = ops.one();
  bool negate = false;
  for (long c = 0; c < n; ++c) {
    long piv = -1;
    for (long r = c; r < n; ++r) {
      if (!ops.is_zero(a[r * n + c])) {
        piv = r;
        break;
      }
    }
    if (piv < 0) return ops.zero();
    if (piv != c) {
      for (long j = c; j < n; ++j) std::swap(a[piv * n + j], a[c * n + j]);
      negate = !negate;
    }
    det = ops.mul(det, a[c * n + c]);
    V pinv = ops.inv(a[c * n + c]);
    for (long r = c + 1; r < n; ++r) {
      if (ops.is_zero(a[r * n + c])) continue;
      V f = ops.mul(a[r * n + c], pinv);
      for (long j = c; j < n; ++j) a[r * n + j] = ops.sub(a[r * n + j], ops.mul(f, a[c * n + j]));
    }
  }
  return negate ? ops.neg(det) : det;
}

/// A nonzero kernel vector of a square matrix, if singular.
template <class Ops>
std::optional<flat<Ops>> kernel_vector_flat(const Ops& ops, flat<Ops> a, long n) {
  std::vector<long> pivot_col;
  long r = 0;
  for (long c = 0; c < n && r < n; ++c) {
    long piv = -1;
    for (long i = r; i < n; ++i) {
      if (!ops.is_zero(a[i * n + c])) {
        piv = i;
        break;
      }
    }
    if (piv < 0) continue;
    if (piv != r)
      for (long j = 0; j < n; ++j) std::swap(a[piv * n + j], a[r * n + j]);
    typename Ops::value pinv = ops.inv(a[r * n + c]);
    for (long j = 0; j < n; ++j) a[r * n + j] = ops.mul(a[r * n + j], pinv);
    for (long i = 0; i < n; ++i) {
      if (i == r || ops.is_zero(a[i * n + c])) continue;
      typename Ops::value f = a[i * n + c];
      for (long j = 0; j < n; ++j) a[i * n + j] = ops.sub(a[i * n + j], ops.mul(f, a[r * n + j]));
    }
    pivot_col.push_back(c);
    ++r;
  }
  if (r == n) return std::nullopt;
  long free_col = -1;
  for (long c = 0; c < n; ++c) {
    if (std::find(pivot_col.begin(), pivot_col.end(), c) == pivot_col.end()) {
      free_col = c;
      break;
    }
  }
  flat<Ops> x(static_cast<std::size_t>(n), ops.zero());
  x[free_col] = ops.one();
  for (long i = 0; i < r; ++i) x[pivot_col[i]] = ops.neg(a[i * n + free_col]);
  return x;
}

template <class Ops>
struct congruence_out {
  flat<Ops> entries;  // nonzero diagonal values, in pivot order
  long radical = 0;
  flat<Ops> basis;  // P with P G P^T = diag(entries, 0, ..., 0)
};

/// Symmetric congruence reduction. Pivot rule: smallest-index nonzero diagonal
/// entry; otherwise the lexicographically first nonzero off-diagonal (i, j)
/// and the basis change u_i <- u_i + u_j, which puts 2*G[i][j] on the diagonal.
template <class Ops>
congruence_out<Ops> congruence_diagonalize(const Ops& ops, flat<Ops> a, long n) {
  congruence_out<Ops> out;
  out.basis.assign(static_cast<std::size_t>(n) * n, ops.zero());
  for (long i = 0; i < n; ++i) out.basis[i * n + i] = ops.one();
  auto& P = out.basis;

  auto add_basis_row = [&](long i, long j) {  // u_i <- u_i + u_j
    for (long c = 0; c < n; ++c) {
      a[i * n + c] = ops.add(a[i * n + c], a[j * n + c]);
    }
    for (long rri = 0; rri < n; ++rri) {
      a[rri * n + i] = ops.add(a[rri * n + i], a[rri * n + j]);
    }
    for (long c = 0; c < n; ++c) P[i * n + c] = ops.add(P[i * n + c], P[j * n + c]);
  };
  auto swap_basis = [&](long i, long j) {
    for (long c = 0; c < n; ++c) {
      std::swap(a[i * n + c], a[j * n + c]);
    }
    for (long rri = 0; rri < n; ++rri) {
      std::swap(a[rri * n + i], a[rri * n + j]);
    }
    for (long c = 0; c < n; ++c) std::swap(P[i * n + c], P[j * n + c]);
  };

  for (long t = 0; t < n; ++t) {
    long r = -1;
    for (long i = t; i < n; ++i) {
      if (!ops.is_zero(a[i * n + i])) {
        r = i;
        break;
      }
    }
    if (r < 0) {
      long bi = -1, bj = -1;
      for (long i = t; i < n && bi < 0; ++i) {
        for (long j = i + 1; j < n; ++j) {
          if (!ops.is_zero(a[i * n + j])) {
            bi = i;
            bj = j;
            break;
          }
        }
      }
      if (bi < 0) {
        out.radical = n - t;
        break;
      }
      add_basis_row(bi, bj);
      r = bi;
    }
    if (r != t) swap_basis(r, t);
    typename Ops::value pinv = ops.inv(a[t * n + t]);
    for (long s = t + 1; s < n; ++s) {
      if (ops.is_zero(a[s * n + t])) continue;
      typename Ops::value f = ops.mul(a[s * n + t], pinv);
      for (long c = 0; c < n; ++c) a[s * n + c] = ops.sub(a[s * n + c], ops.mul(f, a[t * n + c]));
      for (long rr = 0; rr < n; ++rr) a[rr * n + s] = ops.sub(a[rr * n + s], ops.mul(f, a[rr * n + t]));
      for (long c = 0; c < n; ++c) P[s * n + c] = ops.sub(P[s * n + c], ops.mul(f, P[t * n + c]));
    }
    out.entries.push_back(a[t * n + t]);
  }
  return out;
}

}  // namespace detail

// --- Matrix -----------------------------------------------------------------

/// Dense matrix over a FieldCtx. Prime-field payloads are flat machine words;
/// cyclotomic payloads are exact rational coordinate vectors.
class Matrix {
 public:
  Matrix(const FieldCtx& ctx, long rows, long cols)
      : ctx_(ctx), rows_(rows), cols_(cols) {
    require(rows >= 0 && cols >= 0, errc::bad_input, "negative matrix shape");
    std::size_t sz = static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols);
    if (ctx.is_gf())
      data_ = std::vector<std::uint64_t>(sz, 0);
    else
      data_ = std::vector<detail::CycVal>(sz, detail::cyclo_ops{ctx}.zero());
  }

  static Matrix identity(const FieldCtx& ctx, long n) {
    Matrix m(ctx, n, n);
    for (long i = 0; i < n; ++i) m.set(i, i, FieldElem::one(ctx));
    return m;
  }

  const FieldCtx& ctx() const { return ctx_; }
  long rows() const { return rows_; }
  long cols() const { return cols_; }

  template <class F>
  decltype(auto) visit(F&& f) {
    if (ctx_.is_gf()) return f(detail::gf_ops{ctx_.p()}, std::get<0>(data_));
    return f(detail::cyclo_ops{ctx_}, std::get<1>(data_));
  }
  template <class F>
  decltype(auto) visit(F&& f) const {
    if (ctx_.is_gf()) return f(detail::gf_ops{ctx_.p()}, std::get<0>(data_));
    return f(detail::cyclo_ops{ctx_}, std::get<1>(data_));
  }

  FieldElem at(long r, long c) const {
    check_index(r, c);
    if (ctx_.is_gf())
      return FieldElem::from_gf_value(ctx_, std::get<0>(data_)[idx(r, c)]);
    return FieldElem::from_coords(ctx_, std::get<1>(data_)[idx(r, c)]);
  }

  void set(long r, long c, const FieldElem& v) {
    check_index(r, c);
    require(v.ctx() == ctx_, errc::context_mismatch, "entry from a different field");
    if (ctx_.is_gf())
      std::get<0>(data_)[idx(r, c)] = v.gf_value();
    else
      std::get<1>(data_)[idx(r, c)] = v.coords();
  }

  bool operator==(const Matrix& o) const {
    return ctx_ == o.ctx_ && rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }
  bool operator!=(const Matrix& o) const { return !(*this == o); }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    require(a.ctx_ == b.ctx_, errc::context_mismatch, "matrix product across fields");
    require(a.cols_ == b.rows_, errc::bad_input, "matrix shape mismatch");
    Matrix out(a.ctx_, a.rows_, b.cols_);
    a.visit([&](auto ops, const auto& da) {
      const auto& db = std::get<std::decay_t<decltype(da)>>(b.data_);
      auto& dc = std::get<std::decay_t<decltype(da)>>(out.data_);
      for (long i = 0; i < a.rows_; ++i) {
        for (long k = 0; k < a.cols_; ++k) {
          const auto& aik = da[i * a.cols_ + k];
          if (ops.is_zero(aik)) continue;
          for (long j = 0; j < b.cols_; ++j) {
            const auto& bkj = db[k * b.cols_ + j];
            if (ops.is_zero(bkj)) continue;
            auto& c = dc[i * b.cols_ + j];
            c = ops.add(c, ops.mul(aik, bkj));
          }
        }
      }
    });
    return out;
  }

  friend Matrix operator*(const FieldElem& s, const Matrix& m) {
    require(s.ctx() == m.ctx_, errc::context_mismatch, "scalar from a different field");
    Matrix out = m;
    out.visit([&](auto ops, auto& d) {
      auto sv = to_backend(ops, s);
      for (auto& v : d) v = ops.mul(sv, v);
    });
    return out;
  }

  Matrix transpose() const {
    Matrix out(ctx_, cols_, rows_);
    visit([&](auto ops, const auto& d) {
      (void)ops;
      auto& o = std::get<std::decay_t<decltype(d)>>(out.data_);
      for (long r = 0; r < rows_; ++r)
        for (long c = 0; c < cols_; ++c) o[c * rows_ + r] = d[r * cols_ + c];
    });
    return out;
  }

  FieldElem det() const {
    require(rows_ == cols_, errc::bad_input, "determinant of a non-square matrix");
    if (rows_ == 0) return FieldElem::one(ctx_);
    return visit([&](auto ops, const auto& d) {
      return from_backend(ctx_, detail::det_flat(ops, d, rows_));
    });
  }

  /// A nonzero kernel vector, if this square matrix is singular.
  std::optional<std::vector<FieldElem>> kernel_vector() const {
    require(rows_ == cols_, errc::bad_input, "kernel of a non-square matrix");
    return visit([&](auto ops, const auto& d) -> std::optional<std::vector<FieldElem>> {
      auto k = detail::kernel_vector_flat(ops, d, rows_);
      if (!k) return std::nullopt;
      std::vector<FieldElem> out;
      out.reserve(k->size());
      for (auto& v : *k) out.push_back(from_backend(ctx_, v));
      return out;
    });
  }

  using Storage = std::variant<std::vector<std::uint64_t>, std::vector<detail::CycVal>>;
  Storage& storage() { return data_; }
  const Storage& storage() const { return data_; }

  static std::uint64_t to_backend(const detail::gf_ops&, const FieldElem& e) { return e.gf_value(); }
  static const detail::CycVal& to_backend(const detail::cyclo_ops&, const FieldElem& e) {
    return e.coords();
  }
  static FieldElem from_backend(const FieldCtx& ctx, std::uint64_t v) {
    return FieldElem::from_gf_value(ctx, v);
  }
  static FieldElem from_backend(const FieldCtx& ctx, detail::CycVal v) {
    return FieldElem::from_coords(ctx, std::move(v));
  }

 private:
  std::size_t idx(long r, long c) const {
    return static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) + static_cast<std::size_t>(c);
  }
  void check_index(long r, long c) const {
    require(r >= 0 && r < rows_ && c >= 0 && c < cols_, errc::out_of_range, "matrix index");
  }

  FieldCtx ctx_;
  long rows_, cols_;
  Storage data_;
};

// --- quadratic forms ----------------------------------------------------------

/// Symmetric Gram matrix over a field. Dimension 0 is allowed.
class QuadForm {
 public:
  explicit QuadForm(Matrix gram) : gram_(std::move(gram)) {
    require(gram_.rows() == gram_.cols(), errc::bad_input, "Gram matrix must be square");
    gram_.visit([&](auto ops, const auto& d) {
      long n = gram_.rows();
      for (long i = 0; i < n; ++i)
        for (long j = i + 1; j < n; ++j)
          require(ops.eq(d[i * n + j], d[j * n + i]), errc::bad_input,
                  "Gram matrix must be symmetric");
    });
  }

  static QuadForm zero(const FieldCtx& ctx, long dim) { return QuadForm(Matrix(ctx, dim, dim)); }

  const FieldCtx& ctx() const { return gram_.ctx(); }
  long dim() const { return gram_.rows(); }
  FieldElem at(long i, long j) const { return gram_.at(i, j); }
  const Matrix& gram() const { return gram_; }
  Matrix& mutable_gram() { return gram_; }

  bool operator==(const QuadForm& o) const { return gram_ == o.gram_; }
  bool operator!=(const QuadForm& o) const { return !(*this == o); }

 private:
  Matrix gram_;
};

/// Diagonal presentation: nonzero entries plus the dimension of the radical.
struct DiagForm {
  FieldCtx ctx;
  std::vector<FieldElem> entries;
  long radical_dim = 0;

  DiagForm(const FieldCtx& c, std::vector<FieldElem> e, long radical = 0)
      : ctx(c), entries(std::move(e)), radical_dim(radical) {
    require(radical_dim >= 0, errc::bad_input, "negative radical");
    for (const auto& v : entries) {
      require(v.ctx() == ctx, errc::context_mismatch, "diagonal entry from a different field");
      require(!v.is_zero(), errc::bad_input, "diagonal entries must be nonzero");
    }
  }

  long rank() const { return static_cast<long>(entries.size()); }
  long dim() const { return rank() + radical_dim; }
};

inline QuadForm diag(const FieldCtx& ctx, const std::vector<FieldElem>& entries) {
  Matrix m(ctx, static_cast<long>(entries.size()), static_cast<long>(entries.size()));
  for (long i = 0; i < static_cast<long>(entries.size()); ++i) m.set(i, i, entries[i]);
  return QuadForm(std::move(m));
}

inline QuadForm to_quadform(const DiagForm& d) {
  Matrix m(d.ctx, d.dim(), d.dim());
  for (long i = 0; i < d.rank(); ++i) m.set(i, i, d.entries[i]);
  return QuadForm(std::move(m));
}

/// h copies of the hyperbolic plane, presented as diag(1, -1, ..., 1, -1).
inline QuadForm hyperbolic(const FieldCtx& ctx, long h) {
  require(h >= 0, errc::out_of_range, "negative hyperbolic count");
  std::vector<FieldElem> e;
  e.reserve(2 * h);
  for (long i = 0; i < h; ++i) {
    e.push_back(FieldElem::one(ctx));
    e.push_back(FieldElem(ctx, -1));
  }
  return diag(ctx, e);
}

inline QuadForm orth_sum(const QuadForm& a, const QuadForm& b) {
  require(a.ctx() == b.ctx(), errc::context_mismatch, "orthogonal sum across fields");
  Matrix m(a.ctx(), a.dim() + b.dim(), a.dim() + b.dim());
  for (long i = 0; i < a.dim(); ++i)
    for (long j = 0; j < a.dim(); ++j) m.set(i, j, a.at(i, j));
  for (long i = 0; i < b.dim(); ++i)
    for (long j = 0; j < b.dim(); ++j) m.set(a.dim() + i, a.dim() + j, b.at(i, j));
  return QuadForm(std::move(m));
}

inline QuadForm scale(const FieldElem& c, const QuadForm& f) {
  require(c.ctx() == f.ctx(), errc::context_mismatch, "scalar from a different field");
  require(!c.is_zero(), errc::zero_scalar, "scaling a form by zero");
  return QuadForm(c * f.gram());
}

inline QuadForm tensor(const QuadForm& a, const QuadForm& b) {
  require(a.ctx() == b.ctx(), errc::context_mismatch, "tensor product across fields");
  long da = a.dim(), db = b.dim();
  Matrix m(a.ctx(), da * db, da * db);
  for (long i = 0; i < da; ++i)
    for (long j = 0; j < da; ++j) {
      FieldElem aij = a.at(i, j);
      if (aij.is_zero()) continue;
      for (long k = 0; k < db; ++k)
        for (long l = 0; l < db; ++l) {
          FieldElem bkl = b.at(k, l);
          if (bkl.is_zero()) continue;
          m.set(i * db + k, j * db + l, aij * bkl);
        }
    }
  return QuadForm(std::move(m));
}

struct Diagonalization {
  DiagForm form;
  Matrix basis_change;  // P with P * G * P^T diagonal
};

inline Diagonalization diagonalize(const QuadForm& f) {
  long n = f.dim();
  return f.gram().visit([&](auto ops, const auto& d) {
    auto out = detail::congruence_diagonalize(ops, d, n);
    std::vector<FieldElem> entries;
    entries.reserve(out.entries.size());
    for (auto& v : out.entries) entries.push_back(Matrix::from_backend(f.ctx(), v));
    Matrix P(f.ctx(), n, n);
    for (long i = 0; i < n; ++i)
      for (long j = 0; j < n; ++j)
        P.set(i, j, Matrix::from_backend(f.ctx(), out.basis[i * n + j]));
    return Diagonalization{DiagForm(f.ctx(), std::move(entries), out.radical), std::move(P)};
  });
}

inline FieldElem determinant(const QuadForm& f) { return f.gram().det(); }

/// Signed determinant (-1)^(d(d-1)/2) * det.
inline FieldElem disc(const QuadForm& f) {
  FieldElem d = determinant(f);
  long dim = f.dim();
  return (dim * (dim - 1) / 2) % 2 == 1 ? -d : d;
}

// --- Witt decomposition over GF(p) -------------------------------------------

/// Witt invariants of the regular part of a form over GF(p). The radical is
/// stripped before classification. `anisotropic` is the canonical
/// representative (entries normalized to 1 or the smallest nonsquare).
struct WittClass {
  FieldCtx ctx;
  BigInt rank;
  BigInt witt_index;
  DiagForm anisotropic;
  bool disc_is_square;

  bool same_class(const WittClass& o) const {
    return ctx == o.ctx && rank == o.rank && witt_index == o.witt_index &&
           anisotropic.rank() == o.anisotropic.rank() && disc_is_square == o.disc_is_square;
  }
};

inline bool is_hyperbolic(const WittClass& w) {
  return w.anisotropic.rank() == 0 && w.rank % 2 == 0;
}

/// Square-class bit over GF(p): 0 for squares (including 0), 1 otherwise.
inline int square_class_bit(const FieldElem& u) { return is_square(u) ? 0 : 1; }

namespace detail {

inline int minus_one_class_bit(std::uint64_t p) { return p % 4 == 1 ? 0 : 1; }

inline FieldElem class_representative(const FieldCtx& ctx, int bit) {
  return bit == 0 ? FieldElem::one(ctx) : smallest_nonsquare(ctx);
}

// Canonical anisotropic binary form with determinant class -1 * nonsquare:
// <1,1> when -1 is a nonsquare, <1, ns> when -1 is a square.
inline std::vector<FieldElem> canonical_binary_anisotropic(const FieldCtx& ctx) {
  if (ctx.p() % 4 == 3) return {FieldElem::one(ctx), FieldElem::one(ctx)};
  return {FieldElem::one(ctx), smallest_nonsquare(ctx)};
}

}  // namespace detail

/// Finite-field classification: Witt invariants from rank and determinant
/// square class alone. Valid for arbitrarily large ranks.
inline WittClass witt_from_rank_det(const FieldCtx& ctx, const BigInt& rank, int det_cls) {
  require(ctx.is_gf(), errc::unsupported, "Witt classification requires GF(p)");
  require(rank >= 0, errc::bad_input, "negative rank");
  int m1 = detail::minus_one_class_bit(ctx.p());
  if (rank == 0) {
    return WittClass{ctx, 0, 0, DiagForm(ctx, {}), true};
  }
  BigInt iw;
  std::vector<FieldElem> anis;
  if (rank % 2 == 1) {
    iw = (rank - 1) / 2;
    int jw_par = static_cast<int>(iw % 2);
    int cls = det_cls ^ (m1 * jw_par);
    anis = {detail::class_representative(ctx, cls)};
  } else {
    BigInt m = rank / 2;
    int m_par = static_cast<int>(m % 2);
    int cond = det_cls ^ (m1 * m_par);  // class of (-1)^m * det
    if (cond == 0) {
      iw = m;
    } else {
      iw = m - 1;
      anis = detail::canonical_binary_anisotropic(ctx);
    }
  }
  int disc_par = static_cast<int>(((rank * (rank - 1)) / 2) % 2);
  bool disc_sq = (det_cls ^ (m1 * disc_par)) == 0;
  return WittClass{ctx, rank, iw, DiagForm(ctx, std::move(anis)), disc_sq};
}

namespace detail {

// Smallest-z square root table for GF(p); index is the residue, value -1 if
// the residue is a nonsquare.
inline std::vector<long> sqrt_table(std::uint64_t p) {
  std::vector<long> t(p, -1);
  for (std::uint64_t z = 0; z < p; ++z) {
    std::uint64_t s = nt::mulmod(z, z, p);
    if (t[s] < 0) t[s] = static_cast<long>(z);
  }
  return t;
}

struct constructive_split {
  long witt_index = 0;
  std::vector<std::uint64_t> anisotropic;  // at most two residues
};

// Constructive Witt decomposition of a regular diagonal form over GF(p),
// p <= 10^4. Splitting works on the leading three entries: an isotropic
// vector is found by lexicographic enumeration ((1, y, z) first, then
// (0, 1, z)), an explicit hyperbolic pair is built from it, and the
// one-dimensional orthogonal complement replaces the three entries.
inline constructive_split split_diagonal(std::uint64_t p, std::vector<std::uint64_t> e) {
  require(p <= 10000, errc::budget_exceeded, "constructive path requires p <= 10^4");
  gf_ops ops{p};
  auto sq = sqrt_table(p);
  constructive_split out;
  std::size_t head = 0;  // entries before head are already consumed by splits
  while (true) {
    std::size_t r = e.size() - head;
    if (r == 0) break;
    if (r == 1) {
      out.anisotropic = {e[head]};
      break;
    }
    if (r == 2) {
      std::uint64_t m = ops.neg(ops.mul(e[head], e[head + 1]));
      if (sq[m] >= 0) {
        ++out.witt_index;  // explicit isotropic vector (z, 1) with z^2 = -e1/e0
      } else {
        out.anisotropic = {e[head], e[head + 1]};
      }
      break;
    }
    // r >= 3: find isotropic (v0, v1, v2) for the three leading entries
    std::uint64_t a0 = e[head], a1 = e[head + 1], a2 = e[head + 2];
    long v0 = -1, v1 = -1, v2 = -1;
    std::uint64_t inv_a2 = ops.inv(a2);
    for (std::uint64_t y = 0; y < p && v0 < 0; ++y) {
      std::uint64_t rest = ops.neg(ops.add(a0, ops.mul(a1, ops.mul(y, y))));
      long z = sq[ops.mul(rest, inv_a2)];
      if (z >= 0) {
        v0 = 1;
        v1 = static_cast<long>(y);
        v2 = z;
      }
    }
    if (v0 < 0) {
      std::uint64_t rest = ops.neg(ops.mul(a1, inv_a2));
      long z = sq[rest];
      require(z >= 0, errc::path_disagreement, "regular ternary form must be isotropic");
      v0 = 0;
      v1 = 1;
      v2 = z;
    }
    // hyperbolic pair (v, u) inside <a0, a1, a2>, then the complement entry
    std::uint64_t v[3] = {static_cast<std::uint64_t>(v0), static_cast<std::uint64_t>(v1),
                          static_cast<std::uint64_t>(v2)};
    std::uint64_t ad[3] = {a0, a1, a2};
    int pi = v[0] != 0 ? 0 : 1;  // first nonzero coordinate of v is 1
    std::uint64_t B = ops.mul(ad[pi], v[pi]);
    std::uint64_t Binv = ops.inv(B);
    // w' = e_pi / B; u = w' - (Q(w')/2) v
    std::uint64_t qw = ops.mul(ad[pi], ops.mul(Binv, Binv));
    std::uint64_t half = ops.inv(2 % p);
    std::uint64_t lam = ops.mul(qw, half);
    std::uint64_t u[3] = {0, 0, 0};
    u[pi] = Binv;
    for (int i = 0; i < 3; ++i) u[i] = ops.sub(u[i], ops.mul(lam, v[i]));
    // project the standard basis onto the complement of span(v, u)
    std::uint64_t delta = 0;
    bool found = false;
    for (int s = 0; s < 3 && !found; ++s) {
      std::uint64_t fs[3];
      std::uint64_t bu = ops.mul(ad[s], u[s]);  // B(e_s, u)
      std::uint64_t bv = ops.mul(ad[s], v[s]);  // B(e_s, v)
      for (int i = 0; i < 3; ++i) {
        fs[i] = ops.sub(ops.sub(s == i ? ops.one() : 0, ops.mul(bu, v[i])), ops.mul(bv, u[i]));
      }
      std::uint64_t q = 0;
      for (int i = 0; i < 3; ++i) q = ops.add(q, ops.mul(ad[i], ops.mul(fs[i], fs[i])));
      if (q != 0) {
        delta = q;
        found = true;
      }
    }
    require(found, errc::path_disagreement, "rank-1 complement must have a nonzero vector");
    ++out.witt_index;
    head += 2;
    e[head] = delta;  // the 1-dimensional complement replaces the three entries
  }
  return out;
}

struct regular_invariants {
  long dim = 0;
  long radical = 0;
  std::vector<std::uint64_t> diag_entries;  // regular diagonal entries
  long pair_blocks = 0;                     // off-diagonal hyperbolic blocks found
  bool monomial = false;
};

// Extract regular-part data from a symmetric GF(p) Gram matrix. Matrices with
// at most one nonzero entry per row split visibly into diagonal entries plus
// hyperbolic blocks; anything else goes through congruence diagonalization.
inline regular_invariants extract_invariants(const QuadForm& f) {
  regular_invariants out;
  out.dim = f.dim();
  const std::uint64_t p = f.ctx().p();
  gf_ops ops{p};
  bool monomial = true;
  std::vector<long> partner(static_cast<std::size_t>(f.dim()), -1);
  f.gram().visit([&](auto o, const auto& d) {
    (void)o;
    if constexpr (std::is_same_v<std::decay_t<decltype(d)>, std::vector<std::uint64_t>>) {
      long n = f.dim();
      for (long i = 0; i < n && monomial; ++i) {
        long nz = -1;
        for (long j = 0; j < n; ++j) {
          if (d[i * n + j] != 0) {
            if (nz >= 0) {
              monomial = false;
              break;
            }
            nz = j;
          }
        }
        partner[i] = nz;
      }
      if (monomial) {
        for (long i = 0; i < n; ++i) {
          long j = partner[i];
          if (j < 0) {
            ++out.radical;
          } else if (j == i) {
            out.diag_entries.push_back(d[i * n + i]);
          } else if (j > i) {
            ++out.pair_blocks;  // the mirror entry exists by symmetry
          }
        }
        out.monomial = true;
      }
    } else {
      monomial = false;
    }
  });
  if (!out.monomial) {
    auto dg = diagonalize(f);
    out.radical = dg.form.radical_dim;
    for (const auto& e : dg.form.entries) out.diag_entries.push_back(e.gf_value());
    (void)ops;
  }
  return out;
}

}  // namespace detail

namespace detail {

// Shared tail of the two public entry points: classification by rank and
// determinant class, cross-checked against the constructive split whenever
// the enumeration bound allows it.
inline WittClass witt_of_entries(const FieldCtx& ctx, const std::vector<std::uint64_t>& entries,
                                 long pair_blocks) {
  int det_cls = 0;
  for (std::uint64_t e : entries) det_cls ^= square_class_bit(FieldElem::from_gf_value(ctx, e));
  // each off-diagonal block has determinant -c^2
  det_cls ^= minus_one_class_bit(ctx.p()) * static_cast<int>(pair_blocks % 2);
  BigInt rank = BigInt(entries.size()) + 2 * BigInt(pair_blocks);
  WittClass byclass = witt_from_rank_det(ctx, rank, det_cls);

  if (ctx.p() <= 10000) {
    auto split = split_diagonal(ctx.p(), entries);
    BigInt iw = BigInt(split.witt_index) + pair_blocks;
    int anis_cls = 0;
    for (std::uint64_t e : split.anisotropic)
      anis_cls ^= square_class_bit(FieldElem::from_gf_value(ctx, e));
    int ref_cls = 0;
    for (const auto& e : byclass.anisotropic.entries) ref_cls ^= square_class_bit(e);
    require(iw == byclass.witt_index &&
                static_cast<long>(split.anisotropic.size()) == byclass.anisotropic.rank() &&
                anis_cls == ref_cls,
            errc::path_disagreement, "constructive and classification paths disagree");
  }
  return byclass;
}

}  // namespace detail

/// Witt decomposition over GF(p). Two independent paths are executed and
/// compared when the enumeration budget allows it: a constructive split into
/// explicit hyperbolic planes, and the rank/determinant classification.
inline WittClass witt_decompose(const QuadForm& f) {
  require(f.ctx().is_gf(), errc::unsupported, "Witt decomposition requires GF(p)");
  auto inv = detail::extract_invariants(f);
  return detail::witt_of_entries(f.ctx(), inv.diag_entries, inv.pair_blocks);
}

/// Witt invariants straight from a diagonal presentation, without building
/// the dense Gram matrix. The radical is stripped.
inline WittClass witt_of_diagonal(const DiagForm& d) {
  require(d.ctx.is_gf(), errc::unsupported, "Witt decomposition requires GF(p)");
  std::vector<std::uint64_t> entries;
  entries.reserve(d.entries.size());
  for (const auto& e : d.entries) entries.push_back(e.gf_value());
  return detail::witt_of_entries(d.ctx, entries, 0);
}

inline bool is_hyperbolic(const QuadForm& f) {
  auto inv = detail::extract_invariants(f);
  if (inv.radical != 0) return false;
  return is_hyperbolic(witt_decompose(f));
}

/// Isometry over GF(p): equal dimension, equal radical, and equal regular
/// rank and determinant square class.
inline bool is_isometric(const QuadForm& a, const QuadForm& b) {
  require(a.ctx().is_gf() && b.ctx().is_gf(), errc::unsupported,
          "isometry testing requires GF(p)");
  require(a.ctx() == b.ctx(), errc::context_mismatch, "isometry across fields");
  if (a.dim() != b.dim()) return false;
  auto ia = detail::extract_invariants(a);
  auto ib = detail::extract_invariants(b);
  if (ia.radical != ib.radical) return false;
  auto cls = [&](const detail::regular_invariants& i) {
    int c = 0;
    for (std::uint64_t e : i.diag_entries) c ^= square_class_bit(FieldElem::from_gf_value(a.ctx(), e));
    c ^= detail::minus_one_class_bit(a.ctx().p()) * static_cast<int>(i.pair_blocks % 2);
    return c;
  };
  long rank_a = static_cast<long>(ia.diag_entries.size()) + 2 * ia.pair_blocks;
  long rank_b = static_cast<long>(ib.diag_entries.size()) + 2 * ib.pair_blocks;
  return rank_a == rank_b && cls(ia) == cls(ib);
}

/// Checks that the given index pairs exhibit visible hyperbolic planes: zero
/// diagonal, nonzero pairing entry, and no interaction with anything outside
/// the pair. Valid over any field.
inline bool hyperbolic_certificate(const QuadForm& f, const std::vector<std::pair<long, long>>& pairing) {
  std::vector<long> owner(static_cast<std::size_t>(f.dim()), -1);
  long id = 0;
  for (const auto& [i, j] : pairing) {
    require(i >= 0 && i < f.dim() && j >= 0 && j < f.dim() && i != j, errc::bad_pairing,
            "pair index out of range");
    require(owner[i] < 0 && owner[j] < 0, errc::bad_pairing, "pairs must be disjoint");
    owner[i] = id;
    owner[j] = id;
    ++id;
  }
  for (const auto& [i, j] : pairing) {
    if (!f.at(i, i).is_zero() || !f.at(j, j).is_zero() || f.at(i, j).is_zero()) return false;
    for (long v = 0; v < f.dim(); ++v) {
      if (owner[v] == owner[i]) continue;  // inside the same pair
      if (!f.at(i, v).is_zero() || !f.at(j, v).is_zero()) return false;
    }
  }
  return true;
}

}  // namespace symtrace

#endif  // SYMTRACE_QUADFORM_HPP
