#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "symtrace/quadform.hpp"

using namespace symtrace;

namespace {

QuadForm diag_ints(const FieldCtx& ctx, std::vector<long long> vals) {
  std::vector<FieldElem> e;
  for (long long v : vals) e.emplace_back(ctx, v);
  return diag(ctx, e);
}

QuadForm random_symmetric(const FieldCtx& ctx, long dim, std::mt19937_64& rng) {
  Matrix m(ctx, dim, dim);
  std::uniform_int_distribution<long long> dist(-20, 20);
  for (long i = 0; i < dim; ++i)
    for (long j = i; j < dim; ++j) {
      FieldElem v(ctx, dist(rng));
      m.set(i, j, v);
      m.set(j, i, v);
    }
  return QuadForm(std::move(m));
}

Matrix random_invertible(const FieldCtx& ctx, long dim, std::mt19937_64& rng) {
  std::uniform_int_distribution<long long> dist(-20, 20);
  while (true) {
    Matrix m(ctx, dim, dim);
    for (long i = 0; i < dim; ++i)
      for (long j = 0; j < dim; ++j) m.set(i, j, FieldElem(ctx, dist(rng)));
    if (!m.det().is_zero()) return m;
  }
}

bool is_diagonal_matrix(const Matrix& m) {
  for (long i = 0; i < m.rows(); ++i)
    for (long j = 0; j < m.cols(); ++j)
      if (i != j && !m.at(i, j).is_zero()) return false;
  return true;
}

}  // namespace

TEST_CASE("form constructors") {
  FieldCtx f7 = gf_create(7, 3);
  QuadForm d = diag_ints(f7, {1, -1});
  CHECK(d.at(0, 0) == FieldElem(f7, 1));
  CHECK(d.at(1, 1) == FieldElem(f7, 6));
  CHECK(d.at(0, 1).is_zero());

  CHECK(hyperbolic(f7, 0).dim() == 0);
  FieldCtx q3 = cyclo_create(3);
  QuadForm h2 = hyperbolic(q3, 2);
  CHECK(h2.dim() == 4);
  CHECK(h2.at(1, 1) == FieldElem(q3, -1));
  CHECK(h2.at(2, 2) == FieldElem(q3, 1));

  Matrix bad(f7, 2, 2);
  bad.set(0, 1, FieldElem(f7, 1));
  CHECK_THROWS_AS(QuadForm(std::move(bad)), error);
}

TEST_CASE("orthogonal sum, scaling, tensor product") {
  FieldCtx f7 = gf_create(7, 3);
  QuadForm s = scale(FieldElem(f7, 2), diag_ints(f7, {1, 3}));
  CHECK(s.at(0, 0) == FieldElem(f7, 2));
  CHECK(s.at(1, 1) == FieldElem(f7, 6));
  CHECK_THROWS_MATCHES(scale(FieldElem::zero(f7), s), error,
                       Catch::Matchers::Predicate<error>([](const error& e) {
                         return e.code() == errc::zero_scalar;
                       }));

  QuadForm t = tensor(diag_ints(f7, {3}), diag_ints(f7, {5}));
  CHECK(t.dim() == 1);
  CHECK(t.at(0, 0) == FieldElem(f7, 15 % 7));

  QuadForm h = orth_sum(diag_ints(f7, {1}), diag_ints(f7, {-1}));
  CHECK(h.dim() == 2);
  CHECK(is_hyperbolic(h));

  CHECK_THROWS_AS(orth_sum(diag_ints(f7, {1}), diag_ints(gf_create(13, 3), {1})), error);
}

TEST_CASE("diagonalization follows the deterministic pivot rule") {
  FieldCtx f13 = gf_create(13, 3);

  SECTION("off-diagonal block [[0,c],[c,0]]") {
    for (long long c : {1LL, 2LL, 5LL}) {
      Matrix m(f13, 2, 2);
      m.set(0, 1, FieldElem(f13, c));
      m.set(1, 0, FieldElem(f13, c));
      QuadForm f{std::move(m)};
      auto d = diagonalize(f);
      REQUIRE(d.form.rank() == 2);
      CHECK(d.form.radical_dim == 0);
      CHECK(d.form.entries[0] == FieldElem(f13, 2 * c));  // u <- u + v pivot
      CHECK(d.form.entries[1] == FieldElem(f13, c) / FieldElem(f13, -2));
      // product of entries is -c^2 times a square
      FieldElem prod = d.form.entries[0] * d.form.entries[1];
      CHECK(square_class_bit(prod) == square_class_bit(FieldElem(f13, -c * c)));
    }
  }

  SECTION("already diagonal input is returned as-is with identity basis") {
    QuadForm f = diag_ints(f13, {3, 5, 7});
    auto d = diagonalize(f);
    CHECK(d.form.entries == std::vector<FieldElem>{FieldElem(f13, 3), FieldElem(f13, 5),
                                                   FieldElem(f13, 7)});
    CHECK(d.basis_change == Matrix::identity(f13, 3));
  }

  SECTION("zero matrix is pure radical") {
    auto d = diagonalize(QuadForm::zero(f13, 3));
    CHECK(d.form.rank() == 0);
    CHECK(d.form.radical_dim == 3);
  }

  SECTION("P G P^T is diagonal with invertible P, both backends") {
    std::mt19937_64 rng(20240811);
    for (const FieldCtx& ctx : {gf_create(13, 3), gf_create(7, 3), cyclo_create(3), cyclo_create(4)}) {
      for (long dim = 1; dim <= (ctx.is_gf() ? 8 : 5); ++dim) {
        for (int rep = 0; rep < (ctx.is_gf() ? 8 : 3); ++rep) {
          QuadForm f = random_symmetric(ctx, dim, rng);
          auto d = diagonalize(f);
          Matrix lhs = d.basis_change * f.gram() * d.basis_change.transpose();
          CHECK(is_diagonal_matrix(lhs));
          CHECK_FALSE(d.basis_change.det().is_zero());
          CHECK(d.form.rank() + d.form.radical_dim == dim);
          for (long i = 0; i < d.form.rank(); ++i) CHECK(lhs.at(i, i) == d.form.entries[i]);
          for (long i = d.form.rank(); i < dim; ++i) CHECK(lhs.at(i, i).is_zero());
        }
      }
    }
  }
}

TEST_CASE("determinant and signed determinant") {
  FieldCtx f13 = gf_create(13, 3);
  QuadForm h = hyperbolic(f13, 1);
  CHECK(determinant(h) == FieldElem(f13, -1));
  CHECK(disc(h) == FieldElem(f13, 1));
  CHECK(determinant(QuadForm::zero(f13, 0)) == FieldElem(f13, 1));

  // det <1, a, b, -ab> = -(ab)^2: the square class of -1
  for (long long a : {1LL, 2LL, 5LL})
    for (long long b : {1LL, 3LL, 11LL}) {
      QuadForm q = diag_ints(f13, {1, a, b, -a * b});
      CHECK(square_class_bit(determinant(q)) == square_class_bit(FieldElem(f13, -1)));
    }
}

TEST_CASE("witt decomposition: worked examples") {
  FieldCtx f7 = gf_create(7, 3);
  FieldCtx f13 = gf_create(13, 3);

  WittClass w1 = witt_decompose(diag_ints(f7, {1, 1}));
  CHECK(w1.witt_index == 0);
  CHECK(w1.anisotropic.rank() == 2);

  WittClass w2 = witt_decompose(diag_ints(f13, {1, 1}));
  CHECK(w2.witt_index == 1);
  CHECK(w2.anisotropic.rank() == 0);

  for (const FieldCtx& ctx : {f7, f13}) {
    WittClass w = witt_decompose(hyperbolic(ctx, 2));
    CHECK(w.witt_index == 2);
    CHECK(is_hyperbolic(w));
  }

  CHECK_THROWS_MATCHES(witt_decompose(hyperbolic(cyclo_create(3), 1)), error,
                       Catch::Matchers::Predicate<error>([](const error& e) {
                         return e.code() == errc::unsupported;
                       }));
}

TEST_CASE("witt paths agree on all square-class patterns") {
  for (std::uint64_t p : {5ull, 7ull, 13ull}) {
    FieldCtx ctx = gf_create(p, 1);
    std::uint64_t ns = smallest_nonsquare(ctx).gf_value();
    for (long dim = 1; dim <= 6; ++dim) {
      for (unsigned mask = 0; mask < (1u << dim); ++mask) {
        std::vector<FieldElem> e;
        for (long i = 0; i < dim; ++i)
          e.push_back(FieldElem::from_gf_value(ctx, (mask >> i) & 1 ? ns : 1));
        // witt_decompose raises PathDisagreement internally if the
        // constructive and classification answers differ
        WittClass w = witt_decompose(diag(ctx, e));
        CHECK(2 * w.witt_index + w.anisotropic.rank() == dim);
        // anisotropic part must have no isotropic vector: enumerate
        if (w.anisotropic.rank() == 2) {
          std::uint64_t a = w.anisotropic.entries[0].gf_value();
          std::uint64_t b = w.anisotropic.entries[1].gf_value();
          for (std::uint64_t x = 0; x < p; ++x)
            for (std::uint64_t y = 0; y < p; ++y) {
              if (x == 0 && y == 0) continue;
              std::uint64_t q = nt::addmod(nt::mulmod(a, nt::mulmod(x, x, p), p),
                                           nt::mulmod(b, nt::mulmod(y, y, p), p), p);
              CHECK(q != 0);
            }
        }
      }
    }
  }
}

TEST_CASE("witt classification alone serves primes beyond the enumeration bound") {
  FieldCtx big = gf_create(100003, 1);  // constructive split is gated at 10^4
  WittClass w = witt_decompose(diag_ints(big, {1, 1, 1, 2}));
  CHECK(w.rank == 4);
  CHECK(2 * w.witt_index + w.anisotropic.rank() == 4);
  CHECK(is_hyperbolic(witt_decompose(hyperbolic(big, 3))));
}

TEST_CASE("witt decomposition handles visible hyperbolic pairings fast") {
  FieldCtx f13 = gf_create(13, 3);
  long n = 6;
  Matrix m(f13, n, n);
  m.set(0, 0, FieldElem(f13, 3));
  m.set(1, 2, FieldElem(f13, 5));
  m.set(2, 1, FieldElem(f13, 5));
  m.set(3, 4, FieldElem(f13, 7));
  m.set(4, 3, FieldElem(f13, 7));
  // index 5 is radical
  WittClass w = witt_decompose(QuadForm(std::move(m)));
  CHECK(w.rank == 5);
  CHECK(w.witt_index == 2);
  CHECK(w.anisotropic.rank() == 1);
}

TEST_CASE("isometry is square-class classification") {
  FieldCtx f13 = gf_create(13, 3);
  FieldCtx f7 = gf_create(7, 3);
  CHECK(is_isometric(diag_ints(f13, {3, 1}), diag_ints(f13, {1, 1})));
  CHECK_FALSE(is_isometric(diag_ints(f7, {3, 1}), diag_ints(f7, {1, 1})));
  QuadForm f = diag_ints(f13, {2, 5, 6});
  CHECK(is_isometric(f, f));
  CHECK_THROWS_AS(is_isometric(diag_ints(f13, {1}), diag_ints(f7, {1})), error);

  SECTION("invariance under diagonalize-basis change and H-stability") {
    std::mt19937_64 rng(77001);
    for (const FieldCtx& ctx : {f7, f13}) {
      for (int rep = 0; rep < 20; ++rep) {
        QuadForm a = random_symmetric(ctx, 4, rng);
        auto d = diagonalize(a);
        QuadForm b = orth_sum(to_quadform(d.form), QuadForm::zero(ctx, 0));
        CHECK(is_isometric(a, b));

        Matrix p = random_invertible(ctx, 4, rng);
        QuadForm conj(p * a.gram() * p.transpose());
        CHECK(is_isometric(a, conj));

        // Witt cancellation at the classification level
        QuadForm a2 = random_symmetric(ctx, 3, rng);
        bool plain = is_isometric(a, orth_sum(a2, diag_ints(ctx.is_gf() ? ctx : f7, {1})));
        (void)plain;  // dimensions differ; just exercising the path
        QuadForm ah = orth_sum(a, hyperbolic(ctx, 1));
        QuadForm bh = orth_sum(b, hyperbolic(ctx, 1));
        CHECK(is_isometric(ah, bh) == is_isometric(a, b));
      }
    }
  }
}

TEST_CASE("equivalence-relation sanity for isometry") {
  FieldCtx f5 = gf_create(5, 4);
  std::mt19937_64 rng(424242);
  std::vector<QuadForm> forms;
  for (int i = 0; i < 6; ++i) forms.push_back(random_symmetric(f5, 3, rng));
  for (const auto& a : forms) CHECK(is_isometric(a, a));
  for (const auto& a : forms)
    for (const auto& b : forms) CHECK(is_isometric(a, b) == is_isometric(b, a));
  for (const auto& a : forms)
    for (const auto& b : forms)
      for (const auto& c : forms)
        if (is_isometric(a, b) && is_isometric(b, c)) CHECK(is_isometric(a, c));
}

TEST_CASE("determinant is multiplicative over orthogonal sums and scaling") {
  FieldCtx f13 = gf_create(13, 3);
  std::mt19937_64 rng(99);
  for (int rep = 0; rep < 25; ++rep) {
    QuadForm a = random_symmetric(f13, 3, rng);
    QuadForm b = random_symmetric(f13, 2, rng);
    CHECK(determinant(orth_sum(a, b)) == determinant(a) * determinant(b));
    FieldElem c(f13, 4);
    CHECK(determinant(scale(c, a)) == pow(c, a.dim()) * determinant(a));
  }
}

TEST_CASE("hyperbolic pairing certificates") {
  FieldCtx q3 = cyclo_create(3);
  Matrix m(q3, 4, 4);
  m.set(0, 1, FieldElem(q3, 5));
  m.set(1, 0, FieldElem(q3, 5));
  m.set(2, 3, primitive_root_of_unity(q3));
  m.set(3, 2, primitive_root_of_unity(q3));
  QuadForm f{std::move(m)};
  CHECK(hyperbolic_certificate(f, {{0, 1}, {2, 3}}));
  CHECK(hyperbolic_certificate(f, {{0, 1}}));
  CHECK_FALSE(hyperbolic_certificate(f, {{0, 2}}));

  FieldCtx f7 = gf_create(7, 3);
  QuadForm id2 = diag_ints(f7, {1, 1});
  CHECK_FALSE(hyperbolic_certificate(id2, {{0, 1}}));

  Matrix blk(f7, 2, 2);
  blk.set(0, 1, FieldElem(f7, 3));
  blk.set(1, 0, FieldElem(f7, 3));
  CHECK(hyperbolic_certificate(QuadForm(std::move(blk)), {{0, 1}}));

  CHECK_THROWS_MATCHES(hyperbolic_certificate(id2, {{0, 0}}), error,
                       Catch::Matchers::Predicate<error>([](const error& e) {
                         return e.code() == errc::bad_pairing;
                       }));
  CHECK_THROWS_AS(hyperbolic_certificate(id2, {{0, 1}, {1, 0}}), error);
}
