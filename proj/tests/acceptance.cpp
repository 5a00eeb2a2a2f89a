// Acceptance suite: runs every top-level correctness criterion end to end and
// prints one PASS/FAIL line per criterion. Exit code 0 only if all pass.

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>

#include "symtrace/json_io.hpp"

using namespace symtrace;
using nlohmann::json;

namespace {

int g_threads = 1;
bool g_all_ok = true;

void criterion(int number, const std::string& name, double time_limit_s,
               const std::function<std::pair<bool, std::string>()>& body) {
  auto t0 = std::chrono::steady_clock::now();
  bool ok = false;
  std::string detail;
  try {
    auto [o, d] = body();
    ok = o;
    detail = d;
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (time_limit_s > 0 && secs > time_limit_s) {
    ok = false;
    detail += (detail.empty() ? "" : "; ") + std::string("time limit exceeded: ") +
              std::to_string(secs) + " s > " + std::to_string(time_limit_s) + " s";
  }
  g_all_ok = g_all_ok && ok;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", secs);
  std::cout << (ok ? "PASS" : "FAIL") << " criterion " << number << ": " << name << " (" << buf
            << " s)";
  if (!detail.empty()) std::cout << " -- " << detail;
  std::cout << "\n" << std::flush;
}

std::pair<bool, std::string> sweep(std::initializer_list<ClaimId> claims, int trials = 20) {
  long pass = 0, fail = 0;
  std::string first_failure;
  for (ClaimId id : claims) {
    VerifyOptions o;
    o.trials = trials;
    o.threads = g_threads;
    VerifyReport rep = verify(id, o);
    pass += rep.passed();
    fail += rep.failed();
    if (!rep.all_pass() && first_failure.empty()) {
      for (const auto& i : rep.instances)
        if (!i.pass) {
          first_failure = std::string(claim_name(id)) + " " + i.params + ": " + i.witness;
          break;
        }
    }
  }
  std::string detail = std::to_string(pass) + "/" + std::to_string(pass + fail) + " instances";
  if (fail > 0) detail += "; first failure: " + first_failure;
  return {fail == 0, detail};
}

std::filesystem::path source_root() {
  if (const char* src = std::getenv("SYMTRACE_SRC")) return src;
  return std::filesystem::current_path();
}

std::pair<long, long> parse_monomial(const std::string& label, long n) {
  if (label == "1") return {0, 0};
  long i = 0, j = 0;
  std::size_t pos = 0;
  while (pos < label.size()) {
    char var = label[pos++];
    long e = 1;
    if (pos < label.size() && label[pos] == '^') {
      ++pos;
      e = 0;
      while (pos < label.size() && std::isdigit(label[pos])) e = 10 * e + (label[pos++] - '0');
    }
    if (var == 'x') i = e;
    if (var == 'y') j = e;
    if (pos < label.size() && label[pos] == '*') ++pos;
  }
  return {i % n, j % n};
}

std::pair<bool, std::string> golden_matrix_criterion() {
  std::ifstream f(source_root() / "golden" / "n3_gram.json");
  if (!f.good()) return {false, "golden/n3_gram.json not found"};
  json golden;
  f >> golden;
  long n = golden.at("ctx").at("n").get<long>();
  FieldCtx ctx = ctx_from_json(golden.at("ctx"));
  FieldElem a(ctx, golden.at("a").get<long long>());
  FieldElem b(ctx, golden.at("b").get<long long>());
  SymbolAlgebra S = SymbolAlgebra::make(ctx, n, a, b);
  QuadForm T = trace_form(S);

  const auto& basis = golden.at("basis");
  std::vector<long> order;
  for (const auto& label : basis) {
    auto [i, j] = parse_monomial(label.get<std::string>(), n);
    order.push_back(S.index(i, j));
  }
  const auto& gram = golden.at("gram");
  for (long r = 0; r < T.dim(); ++r)
    for (long c = 0; c < T.dim(); ++c) {
      FieldElem expect = elem_from_json(ctx, gram[r][c]);
      if (T.at(order[r], order[c]) != expect)
        return {false, "entry mismatch at (" + std::to_string(r) + "," + std::to_string(c) + ")"};
    }

  std::vector<std::pair<long, long>> pairing;
  for (const auto& pr : golden.at("pairing")) {
    auto [i1, j1] = parse_monomial(pr[0].get<std::string>(), n);
    auto [i2, j2] = parse_monomial(pr[1].get<std::string>(), n);
    pairing.emplace_back(S.index(i1, j1), S.index(i2, j2));
  }
  if (!hyperbolic_certificate(T, pairing)) return {false, "pairing certificate rejected"};
  return {true, "81 entries, 4 hyperbolic pairs"};
}

// criterion 11: the randomized property batteries

bool field_laws() {
  std::mt19937_64 rng(0xacce55);
  const std::vector<FieldCtx> backends = {gf_create(13, 3), gf_create(9973, 1), cyclo_create(3),
                                          cyclo_create(5), cyclo_create(12)};
  for (const FieldCtx& ctx : backends) {
    long cases = ctx.is_gf() ? 600 : 350;
    for (long rep = 0; rep < cases; ++rep) {
      auto rand_elem = [&]() {
        if (ctx.is_gf()) {
          std::uniform_int_distribution<std::uint64_t> dist(0, ctx.p() - 1);
          return FieldElem::from_gf_value(ctx, dist(rng));
        }
        std::uniform_int_distribution<long long> num(-9, 9);
        std::uniform_int_distribution<long long> den(1, 9);
        detail::CycVal v;
        for (long i = 0; i < ctx.degree(); ++i) v.emplace_back(Rational(num(rng), den(rng)));
        return FieldElem::from_coords(ctx, std::move(v));
      };
      FieldElem u = rand_elem(), v = rand_elem(), w = rand_elem();
      if ((u * v) * w != u * (v * w)) return false;
      if (!u.is_zero() && u * inverse(u) != FieldElem::one(ctx)) return false;
    }
    if (ctx.is_cyclo() && pow(primitive_root_of_unity(ctx), ctx.n()) != FieldElem::one(ctx))
      return false;
  }
  return true;
}

bool witt_agreement_and_cancellation() {
  std::mt19937_64 rng(0xacce56);
  for (std::uint64_t p : {5ull, 7ull, 13ull}) {
    FieldCtx ctx = gf_create(p, 1);
    std::uniform_int_distribution<std::uint64_t> dist(1, p - 1);
    for (int rep = 0; rep < 120; ++rep) {
      long dim = 1 + static_cast<long>(rng() % 5);
      std::vector<FieldElem> ea, eb;
      for (long i = 0; i < dim; ++i) {
        ea.push_back(FieldElem::from_gf_value(ctx, dist(rng)));
        eb.push_back(FieldElem::from_gf_value(ctx, dist(rng)));
      }
      QuadForm a = diag(ctx, ea), b = diag(ctx, eb);
      WittClass w = witt_decompose(a);  // raises on internal path disagreement
      if (2 * w.witt_index + w.anisotropic.rank() != dim) return false;
      bool direct = is_isometric(a, b);
      bool stabilized =
          is_isometric(orth_sum(a, hyperbolic(ctx, 1)), orth_sum(b, hyperbolic(ctx, 1)));
      if (direct != stabilized) return false;
    }
  }
  return true;
}

bool exterior_basis_invariance() {
  std::mt19937_64 rng(0xacce57);
  for (std::uint64_t p : {5ull, 13ull}) {
    FieldCtx ctx = gf_create(p, 1);
    std::uniform_int_distribution<long long> dist(0, static_cast<long long>(p - 1));
    for (int rep = 0; rep < 25; ++rep) {
      long dim = 2 + static_cast<long>(rng() % 4);
      Matrix g(ctx, dim, dim);
      for (long i = 0; i < dim; ++i)
        for (long j = i; j < dim; ++j) {
          FieldElem v(ctx, dist(rng));
          g.set(i, j, v);
          g.set(j, i, v);
        }
      QuadForm f{std::move(g)};
      Matrix pm(ctx, dim, dim);
      do {
        for (long i = 0; i < dim; ++i)
          for (long j = 0; j < dim; ++j) pm.set(i, j, FieldElem(ctx, dist(rng)));
      } while (pm.det().is_zero());
      QuadForm conj(pm * f.gram() * pm.transpose());
      for (long k = 1; k <= std::min(dim, 3L); ++k)
        if (!is_isometric(exterior_power_bruteforce(f, k), exterior_power_bruteforce(conj, k)))
          return false;
    }
  }
  return true;
}

bool symalg_associativity() {
  std::mt19937_64 rng(0xacce58);
  for (long n = 2; n <= 6; ++n) {
    std::uint64_t p = nt::primes_one_mod(n, 1, std::max(n, 4L)).at(0);
    FieldCtx ctx = gf_create(p, n);
    SymbolAlgebra S = SymbolAlgebra::make(ctx, n, FieldElem(ctx, 2), FieldElem(ctx, 3));
    std::uniform_int_distribution<std::uint64_t> dist(0, p - 1);
    for (int rep = 0; rep < 10; ++rep) {
      std::vector<FieldElem> cu, cv, cw;
      for (long i = 0; i < S.dim(); ++i) {
        cu.push_back(FieldElem::from_gf_value(ctx, dist(rng)));
        cv.push_back(FieldElem::from_gf_value(ctx, dist(rng)));
        cw.push_back(FieldElem::from_gf_value(ctx, dist(rng)));
      }
      AlgElem u(S, cu), v(S, cv), w(S, cw);
      if ((u * v) * w != u * (v * w)) return false;
    }
  }
  return true;
}

}  // namespace

int main() {
  unsigned hw = std::thread::hardware_concurrency();
  g_threads = static_cast<int>(std::min(hw == 0 ? 1u : hw, 8u));
  std::cout << "acceptance suite (threads=" << g_threads << ")\n";

  criterion(1, "stored 9x9 trace-form matrix over Q(zeta_3)", 1.0, golden_matrix_criterion);

  criterion(2, "trace-form sweep, degrees 2..6, three primes each, vs split algebra", 30.0,
            [] { return sweep({ClaimId::P1i, ClaimId::P1ii}, 20); });

  criterion(3, "Gauss-sum square roots: odd n <= 21 and primes <= 23, both backends", 10.0,
            [] { return sweep({ClaimId::P2}); });

  criterion(4, "odd-degree unit-form splitting and the n^2 x <+-1> descriptor", 0,
            [] { return sweep({ClaimId::P3, ClaimId::Corollary, ClaimId::SplitRemark}); });

  criterion(5, "embedded quaternion generators, degrees {2,6,10}, rejection at 4", 0,
            [] { return sweep({ClaimId::P4}); });

  criterion(6, "division verdict tables and split-field consistency", 0,
            [] { return sweep({ClaimId::P5, ClaimId::P6}); });

  criterion(7, "exterior oracle: minors vs subset products, dims <= 6, exhaustive classes", 60.0,
            [] { return sweep({ClaimId::P41}); });

  criterion(8, "sum expansion and hyperbolic-power closed forms, h <= 4", 0,
            [] { return sweep({ClaimId::P73, ClaimId::P8, ClaimId::P9}); });

  criterion(9, "exterior powers of trace forms: degrees {2,3,4} all grades, {6,8,12} selected",
            120.0,
            [] { return sweep({ClaimId::P10, ClaimId::P11, ClaimId::S53Example,
                               ClaimId::S53Remarks}); });

  criterion(10, "binomial identities, exact big integers, r <= 100", 5.0,
            [] { return sweep({ClaimId::Binomials}); });

  criterion(11, "property suites: field laws, associativity, Witt paths, basis invariance", 0,
            []() -> std::pair<bool, std::string> {
              if (!field_laws()) return {false, "field laws"};
              if (!symalg_associativity()) return {false, "associativity"};
              if (!witt_agreement_and_cancellation()) return {false, "Witt paths/cancellation"};
              if (!exterior_basis_invariance()) return {false, "basis invariance"};
              return {true, "4 batteries"};
            });

  std::cout << (g_all_ok ? "all criteria passed\n" : "FAILURES present\n");
  return g_all_ok ? 0 : 1;
}
