#ifndef SYMTRACE_EXTERIOR_HPP
#define SYMTRACE_EXTERIOR_HPP

#include <thread>

#include "symtrace/quadform.hpp"

namespace symtrace {

/// C(r, s) as an exact big integer; 0 outside 0 <= s <= r.
inline BigInt binomial(long long r, long long s) {
  if (s < 0 || r < 0 || s > r) return 0;
  if (s > r - s) s = r - s;
  BigInt res = 1;
  for (long long i = 1; i <= s; ++i) {
    res *= r - s + i;
    res /= i;  // exact at every step
  }
  return res;
}

/// The basis of k-fold wedge products: strictly increasing k-tuples over
/// [0, m) in lexicographic order.
struct SubsetBasis {
  long m = 0;
  long k = 0;
  std::vector<std::vector<int>> subsets;

  static SubsetBasis build(long m, long k, long budget) {
    require(m >= 0 && k >= 0, errc::out_of_range, "negative subset parameters");
    SubsetBasis out;
    out.m = m;
    out.k = k;
    BigInt count = binomial(m, k);
    require(count <= budget, errc::budget_exceeded,
            "C(" + std::to_string(m) + "," + std::to_string(k) + ") exceeds the budget of " +
                std::to_string(budget));
    if (k > m) return out;
    std::vector<int> cur(static_cast<std::size_t>(k));
    for (long i = 0; i < k; ++i) cur[i] = static_cast<int>(i);
    while (true) {
      out.subsets.push_back(cur);
      long i = k - 1;
      while (i >= 0 && cur[i] == static_cast<int>(m - k + i)) --i;
      if (i < 0) break;
      ++cur[i];
      for (long j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
    }
    return out;
  }
};

namespace detail {

// Cofactor expansion along the first row, skipping zero entries. Used for
// small minors (k <= 4) and as the second route in the k = 5 cross-check.
template <class Ops>
typename Ops::value det_cofactor(const Ops& ops, const std::vector<typename Ops::value>& m, long k) {
  if (k == 0) return ops.one();
  if (k == 1) return m[0];
  if (k == 2) return ops.sub(ops.mul(m[0], m[3]), ops.mul(m[1], m[2]));
  typename Ops::value acc = ops.zero();
  std::vector<typename Ops::value> minor(static_cast<std::size_t>((k - 1) * (k - 1)));
  for (long c = 0; c < k; ++c) {
    if (ops.is_zero(m[c])) continue;
    for (long i = 1; i < k; ++i) {
      long t = 0;
      for (long j = 0; j < k; ++j) {
        if (j == c) continue;
        minor[(i - 1) * (k - 1) + t] = m[i * k + j];
        ++t;
      }
    }
    typename Ops::value term = ops.mul(m[c], det_cofactor(ops, minor, k - 1));
    acc = c % 2 == 0 ? ops.add(acc, term) : ops.sub(acc, term);
  }
  return acc;
}

// Fraction-free (Bareiss) elimination with column pivoting; divisions by the
// previous pivot are exact. Columns without a pivot end the computation early
// with a zero determinant.
template <class Ops>
typename Ops::value det_bareiss(const Ops& ops, std::vector<typename Ops::value> m, long k) {
  if (k == 0) return ops.one();
  typename Ops::value prev = ops.one();
  bool negate = false;
  for (long t = 0; t < k - 1; ++t) {
    long piv = -1;
    for (long r = t; r < k; ++r) {
      if (!ops.is_zero(m[r * k + t])) {
        piv = r;
        break;
      }
    }
    if (piv < 0) return ops.zero();
    if (piv != t) {
      for (long j = 0; j < k; ++j) std::swap(m[piv * k + j], m[t * k + j]);
      negate = !negate;
    }
    for (long i = t + 1; i < k; ++i) {
      for (long j = t + 1; j < k; ++j) {
        m[i * k + j] = ops.div(
            ops.sub(ops.mul(m[i * k + j], m[t * k + t]), ops.mul(m[i * k + t], m[t * k + j])),
            prev);
      }
      m[i * k + t] = ops.zero();
    }
    prev = m[t * k + t];
  }
  typename Ops::value det = m[(k - 1) * k + (k - 1)];
  return negate ? ops.neg(det) : det;
}

template <class Ops>
struct minor_scratch {
  std::vector<typename Ops::value> sub;
  std::vector<char> col_hit;
};

template <class Ops>
typename Ops::value minor_det(const Ops& ops, const std::vector<typename Ops::value>& gram,
                              long dim, const std::vector<int>& rows,
                              const std::vector<int>& cols, bool crosscheck,
                              minor_scratch<Ops>& scratch) {
  long k = static_cast<long>(rows.size());
  auto& sub = scratch.sub;
  auto& col_hit = scratch.col_hit;
  sub.assign(static_cast<std::size_t>(k) * k, ops.zero());
  col_hit.assign(static_cast<std::size_t>(k), 0);
  bool empty_line = false;
  for (long i = 0; i < k; ++i) {
    bool row_hit = false;
    for (long j = 0; j < k; ++j) {
      const auto& v = gram[static_cast<std::size_t>(rows[i]) * dim + cols[j]];
      if (!ops.is_zero(v)) {
        row_hit = true;
        col_hit[j] = 1;
      }
      sub[i * k + j] = v;
    }
    if (!row_hit) empty_line = true;
  }
  for (long j = 0; j < k; ++j)
    if (!col_hit[j]) empty_line = true;
  if (empty_line) return ops.zero();  // structurally singular
  if (k <= 4) return det_cofactor(ops, sub, k);
  typename Ops::value d = det_bareiss(ops, sub, k);
  if (crosscheck) {
    require(ops.eq(d, det_cofactor(ops, sub, k)), errc::path_disagreement,
            "fraction-free and cofactor minors disagree");
  }
  return d;
}

// Sparse-row column lists of a Gram matrix, or empty when the matrix is too
// dense for the pattern prefilter to pay off.
template <class Ops>
std::vector<std::vector<int>> sparse_rows(const Ops& ops,
                                          const std::vector<typename Ops::value>& gram, long d) {
  std::vector<std::vector<int>> rows(static_cast<std::size_t>(d));
  for (long i = 0; i < d; ++i) {
    for (long j = 0; j < d; ++j) {
      if (!ops.is_zero(gram[i * d + j])) {
        rows[i].push_back(static_cast<int>(j));
        if (rows[i].size() > 4) return {};  // dense row: prefilter not worthwhile
      }
    }
  }
  return rows;
}

// Pattern-level singularity test: every selected row must meet the selected
// columns and every selected column must be met.
inline bool pattern_nonsingular(const std::vector<std::vector<int>>& row_cols,
                                const std::vector<int>& rows, const std::vector<int>& cols,
                                std::vector<char>& cover) {
  long k = static_cast<long>(rows.size());
  cover.assign(static_cast<std::size_t>(k), 0);
  for (long i = 0; i < k; ++i) {
    bool hit = false;
    for (int c : row_cols[rows[i]]) {
      auto it = std::lower_bound(cols.begin(), cols.end(), c);
      if (it != cols.end() && *it == c) {
        hit = true;
        cover[it - cols.begin()] = 1;
      }
    }
    if (!hit) return false;
  }
  for (long j = 0; j < k; ++j)
    if (!cover[j]) return false;
  return true;
}

}  // namespace detail

/// Gram matrix of the k-fold exterior power: entry (I, J) is the determinant
/// of the k x k submatrix of the base Gram with rows I and columns J.
/// k = 0 yields <1>; k > dim yields the zero form of dimension 0. Instances
/// with C(dim, k) above the budget are refused. Entries are independent, so
/// the kernel may fan out across threads. At k = 5 a deterministic sample of
/// entries is recomputed by cofactor expansion and compared.
inline QuadForm exterior_power_bruteforce(const QuadForm& f, long k, long budget = 5000,
                                          int threads = 1) {
  require(k >= 0, errc::out_of_range, "negative exterior grade");
  const FieldCtx& ctx = f.ctx();
  if (k == 0) return diag(ctx, {FieldElem::one(ctx)});
  if (k > f.dim()) return QuadForm::zero(ctx, 0);
  SubsetBasis basis = SubsetBasis::build(f.dim(), k, budget);
  long d = static_cast<long>(basis.subsets.size());
  // cross-check budget: the full matrix for small instances, a prefix otherwise
  const long check_cap = 10000;
  long long checked = 0;

  Matrix out(ctx, d, d);
  f.gram().visit([&](auto ops, const auto& data) {
    auto& odata = std::get<std::decay_t<decltype(data)>>(out.storage());
    auto row_cols = detail::sparse_rows(ops, data, f.dim());
    auto work = [&](long ibegin, long istep, long long check_budget) {
      long long local_checked = 0;
      detail::minor_scratch<decltype(ops)> scratch;
      std::vector<char> cover;
      for (long i = ibegin; i < d; i += istep) {
        for (long j = i; j < d; ++j) {
          if (!row_cols.empty() &&
              !detail::pattern_nonsingular(row_cols, basis.subsets[i], basis.subsets[j], cover)) {
            odata[i * d + j] = ops.zero();
            odata[j * d + i] = ops.zero();
            continue;
          }
          bool cc = k == 5 && local_checked < check_budget;
          if (cc) ++local_checked;
          auto v = detail::minor_det(ops, data, f.dim(), basis.subsets[i], basis.subsets[j], cc,
                                     scratch);
          odata[i * d + j] = v;
          odata[j * d + i] = std::move(v);
        }
      }
      return local_checked;
    };
    int nthreads = std::max(1, threads);
    if (nthreads == 1 || d < 64) {
      checked = work(0, 1, check_cap);
    } else {
      std::vector<std::thread> pool;
      std::vector<long long> done(static_cast<std::size_t>(nthreads), 0);
      for (int t = 0; t < nthreads; ++t)
        pool.emplace_back([&, t] { done[t] = work(t, nthreads, check_cap / nthreads); });
      for (auto& th : pool) th.join();
      for (long long c : done) checked += c;
    }
  });
  (void)checked;
  return QuadForm(std::move(out));
}

/// Diagonal fast path: the exterior power of <a_1, ..., a_m> is the diagonal
/// form of all k-fold products a_{i_1} ... a_{i_k} in lexicographic subset
/// order. Requires a regular input.
inline DiagForm exterior_power_diagonal(const DiagForm& dform, long k, long budget = 200000) {
  require(k >= 0, errc::out_of_range, "negative exterior grade");
  require(dform.radical_dim == 0, errc::degenerate_input,
          "exterior powers of diagonal presentations need a regular form");
  const FieldCtx& ctx = dform.ctx;
  if (k == 0) return DiagForm(ctx, {FieldElem::one(ctx)});
  long m = dform.rank();
  if (k > m) return DiagForm(ctx, {});
  BigInt count = binomial(m, k);
  require(count <= budget, errc::budget_exceeded,
          "C(m,k) = " + count.str() + " exceeds the materialization budget");
  std::vector<FieldElem> entries;
  entries.reserve(static_cast<std::size_t>(count));
  std::vector<int> cur(static_cast<std::size_t>(k));
  for (long i = 0; i < k; ++i) cur[i] = static_cast<int>(i);
  while (true) {
    FieldElem prod = dform.entries[cur[0]];
    for (long i = 1; i < k; ++i) prod = prod * dform.entries[cur[i]];
    entries.push_back(std::move(prod));
    long i = k - 1;
    while (i >= 0 && cur[i] == static_cast<int>(m - k + i)) --i;
    if (i < 0) break;
    ++cur[i];
    for (long j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  return DiagForm(ctx, std::move(entries));
}

/// Witt class of the k-fold exterior power of a regular diagonal form over
/// GF(p), computed without materializing the C(m, k)-dimensional form:
/// the rank is C(m, k) and the determinant class is det^C(m-1, k-1).
inline WittClass exterior_witt_diagonal(const DiagForm& dform, long k) {
  require(dform.ctx.is_gf(), errc::unsupported, "Witt classification requires GF(p)");
  require(dform.radical_dim == 0, errc::degenerate_input, "regular form required");
  require(k >= 0, errc::out_of_range, "negative exterior grade");
  long m = dform.rank();
  BigInt rank = binomial(m, k);
  int det_cls = 0;
  if (binomial(m - 1, k - 1) % 2 != 0) {
    for (const auto& e : dform.entries) det_cls ^= square_class_bit(e);
  }
  return witt_from_rank_det(dform.ctx, rank, det_cls);
}

/// Expansion of the exterior power of an orthogonal sum: the orthogonal sum
/// over i + j = k of tensor products of the factors' exterior powers.
inline QuadForm exterior_sum_expand(const QuadForm& phi, const QuadForm& psi, long k,
                                    long budget = 5000) {
  require(phi.ctx() == psi.ctx(), errc::context_mismatch, "summands from different fields");
  require(k >= 0, errc::out_of_range, "negative exterior grade");
  QuadForm acc = QuadForm::zero(phi.ctx(), 0);
  for (long i = 0; i <= k; ++i) {
    long j = k - i;
    if (i > phi.dim() || j > psi.dim()) continue;
    QuadForm lhs = exterior_power_bruteforce(phi, i, budget);
    QuadForm rhs = exterior_power_bruteforce(psi, j, budget);
    acc = orth_sum(acc, tensor(lhs, rhs));
  }
  return acc;
}

/// Closed form for exterior powers of h hyperbolic planes: a hyperbolic form
/// for odd k; for k = 2l, C(h, l) copies of <(-1)^l> plus hyperbolic planes.
struct HyperbolicPowerForm {
  BigInt plus_ones;
  BigInt minus_ones;
  BigInt hyperbolic_count;

  BigInt dim() const { return plus_ones + minus_ones + 2 * hyperbolic_count; }
};

inline HyperbolicPowerForm hyperbolic_exterior_closed_form(long h, long k) {
  require(h >= 0 && k >= 0 && k <= 2 * h, errc::out_of_range,
          "grade must satisfy 0 <= k <= 2h");
  HyperbolicPowerForm out{0, 0, 0};
  if (k % 2 == 1) {
    BigInt total = binomial(2 * h, k);
    require(total % 2 == 0, errc::path_disagreement, "odd-grade dimension must be even");
    out.hyperbolic_count = total / 2;
    return out;
  }
  long l = k / 2;
  BigInt explicit_part = binomial(h, l);
  (l % 2 == 0 ? out.plus_ones : out.minus_ones) = explicit_part;
  BigInt rest = binomial(2 * h, k) - explicit_part;
  require(rest >= 0 && rest % 2 == 0, errc::path_disagreement,
          "hyperbolic remainder must be a non-negative even count");
  out.hyperbolic_count = rest / 2;
  return out;
}

/// Exhaustive verification of the binomial identities used by the closed-form
/// multiplicities, including exactness of the rational prefactors.
struct BinomialIdentityReport {
  long r_max = 0;
  long long checked = 0;
  std::vector<std::string> failures;
  bool all_pass() const { return failures.empty(); }
};

inline BinomialIdentityReport binomial_identities_check(long r_max) {
  BinomialIdentityReport rep;
  rep.r_max = r_max;
  auto record = [&](long r, long s, const char* which) {
    rep.failures.push_back("identity " + std::string(which) + " failed at r=" + std::to_string(r) +
                           ", s=" + std::to_string(s));
  };
  for (long r = 0; r <= r_max; ++r) {
    for (long s = 0; s <= r; ++s) {
      BigInt c = binomial(r, s);
      // C(r,s) + C(r,s-1) = C(r+1,s)
      if (c + binomial(r, s - 1) != binomial(r + 1, s)) record(r, s, "1");
      // C(r,s) - C(r,s-1) = (r+1-2s)/(r+1) * C(r+1,s), with an exact quotient
      BigInt num2 = BigInt(r + 1 - 2 * s) * binomial(r + 1, s);
      if (num2 % (r + 1) != 0 || c - binomial(r, s - 1) != num2 / (r + 1)) record(r, s, "2");
      // C(r,s) + C(r,s-2) = C(r+2,s) - 2 C(r,s-1)
      if (c + binomial(r, s - 2) != binomial(r + 2, s) - 2 * binomial(r, s - 1)) record(r, s, "3");
      // C(r,s) - C(r,s-2) = (r+2-2s)/(r+2) * C(r+2,s), with an exact quotient
      BigInt num4 = BigInt(r + 2 - 2 * s) * binomial(r + 2, s);
      if (num4 % (r + 2) != 0 || c - binomial(r, s - 2) != num4 / (r + 2)) record(r, s, "4");
      // C(r,s) = (r/s) * C(r-1,s-1), with an exact quotient
      if (s >= 1) {
        BigInt num5 = BigInt(r) * binomial(r - 1, s - 1);
        if (num5 % s != 0 || c != num5 / s) record(r, s, "5");
      }
      rep.checked += 5;
    }
  }
  return rep;
}

}  // namespace symtrace

#endif  // SYMTRACE_EXTERIOR_HPP
