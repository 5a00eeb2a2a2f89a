#ifndef SYMTRACE_JSON_IO_HPP
#define SYMTRACE_JSON_IO_HPP

#include <limits>

#include <json.hpp>

#include "symtrace/claims.hpp"

namespace symtrace {

using nlohmann::json;

/// Big integers render as JSON numbers while they fit in 64 bits and as
/// decimal strings beyond that.
inline json bigint_json(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() &&
      v <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(v);
  return v.str();
}

inline json to_json(const FieldCtx& ctx) {
  if (ctx.is_gf()) return json{{"kind", "gf"}, {"p", ctx.p()}, {"n", ctx.n()}};
  return json{{"kind", "cyclo"}, {"n", ctx.n()}};
}

inline FieldCtx ctx_from_json(const json& j) {
  std::string kind = j.at("kind").get<std::string>();
  if (kind == "gf") return gf_create(j.at("p").get<std::uint64_t>(), j.at("n").get<long>());
  if (kind == "cyclo") return cyclo_create(j.at("n").get<long>());
  fail(errc::bad_input, "unknown field kind: " + kind);
}

inline std::string rational_str(const Rational& q) {
  return numerator(q).str() + "/" + denominator(q).str();
}

inline Rational rational_from_str(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rational(BigInt(s));
  return Rational(BigInt(s.substr(0, slash)), BigInt(s.substr(slash + 1)));
}

/// Prime-field elements are plain integers; cyclotomic elements are arrays of
/// "num/den" strings of length phi(n).
inline json to_json(const FieldElem& e) {
  if (e.ctx().is_gf()) return e.gf_value();
  json arr = json::array();
  for (const auto& c : e.coords()) arr.push_back(rational_str(c));
  return arr;
}

inline FieldElem elem_from_json(const FieldCtx& ctx, const json& j) {
  if (ctx.is_gf()) {
    require(j.is_number_integer(), errc::bad_input, "prime-field element must be an integer");
    return FieldElem(ctx, j.get<long long>());
  }
  if (j.is_number_integer()) return FieldElem(ctx, j.get<long long>());
  require(j.is_array(), errc::bad_input, "cyclotomic element must be an array of rationals");
  detail::CycVal coords;
  for (const auto& c : j) {
    if (c.is_number_integer())
      coords.emplace_back(c.get<long long>());
    else
      coords.push_back(rational_from_str(c.get<std::string>()));
  }
  return FieldElem::from_coords(ctx, std::move(coords));
}

inline json matrix_json(const Matrix& m) {
  json rows = json::array();
  for (long i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (long j = 0; j < m.cols(); ++j) row.push_back(to_json(m.at(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline json to_json(const QuadForm& f) {
  return json{{"ctx", to_json(f.ctx())}, {"dim", f.dim()}, {"gram", matrix_json(f.gram())}};
}

inline QuadForm quadform_from_json(const json& j) {
  FieldCtx ctx = ctx_from_json(j.at("ctx"));
  long dim = j.at("dim").get<long>();
  const json& rows = j.at("gram");
  require(static_cast<long>(rows.size()) == dim, errc::bad_input, "gram row count != dim");
  Matrix m(ctx, dim, dim);
  for (long i = 0; i < dim; ++i) {
    require(static_cast<long>(rows[i].size()) == dim, errc::bad_input, "gram column count != dim");
    for (long jj = 0; jj < dim; ++jj) m.set(i, jj, elem_from_json(ctx, rows[i][jj]));
  }
  return QuadForm(std::move(m));
}

inline json to_json(const DiagForm& d) {
  json entries = json::array();
  for (const auto& e : d.entries) entries.push_back(to_json(e));
  return json{{"ctx", to_json(d.ctx)}, {"entries", std::move(entries)}, {"radical", d.radical_dim}};
}

inline json to_json(const WittClass& w) {
  json anis = json::array();
  for (const auto& e : w.anisotropic.entries) anis.push_back(to_json(e));
  return json{{"ctx", to_json(w.ctx)},
              {"rank", bigint_json(w.rank)},
              {"witt_index", bigint_json(w.witt_index)},
              {"anisotropic", std::move(anis)},
              {"disc_square", w.disc_is_square}};
}

inline json to_json(const SymbolAlgebra& s) {
  return json{{"ctx", to_json(s.ctx())},
              {"n", s.n()},
              {"a", to_json(s.a())},
              {"b", to_json(s.b())},
              {"omega", to_json(s.omega())}};
}

inline json to_json(const DivisionVerdict& v) {
  return json{{"verdict", verdict_name(v.verdict)}, {"facts", v.facts}};
}

inline json to_json(const Prediction& p) {
  json entries = json::array();
  for (const auto& [coef, mult] : p.form.entries)
    entries.push_back(json{{"coef", coef.str()}, {"count", bigint_json(mult)}});
  json j{{"prop", claim_name(p.claim)},
         {"n", p.n},
         {"dim", bigint_json(p.form.dim)},
         {"entries", std::move(entries)}};
  if (p.k >= 0) j["k"] = p.k;
  j["hyp"] = p.form.hyp ? bigint_json(*p.form.hyp) : json(nullptr);
  return j;
}

inline json to_json(const VerifyReport& r) {
  json instances = json::array();
  for (const auto& i : r.instances) {
    json inst{{"params", i.params}, {"pass", i.pass}};
    if (!i.witness.empty()) inst["witness"] = i.witness;
    instances.push_back(std::move(inst));
  }
  return json{{"prop", claim_name(r.claim)}, {"seed", r.seed},
              {"pass", r.passed()},          {"fail", r.failed()},
              {"instances", std::move(instances)}, {"elapsed_ms", r.elapsed_ms}};
}

// --- pretty rendering --------------------------------------------------------

inline std::string pretty(const DiagForm& d) {
  std::string s = "<";
  for (long i = 0; i < d.rank(); ++i) {
    if (i) s += ",";
    s += d.entries[i].str();
  }
  s += ">";
  if (d.radical_dim > 0) s += " + radical of dim " + std::to_string(d.radical_dim);
  return s;
}

inline std::string pretty(const WittClass& w) {
  std::string s;
  if (w.anisotropic.rank() > 0) {
    s += pretty(w.anisotropic);
    s += " _|_ ";
  }
  s += w.witt_index.str() + " x H";
  s += "  (rank " + w.rank.str() + ", disc " + (w.disc_is_square ? "square" : "nonsquare") + ")";
  return s;
}

inline std::string pretty(const Prediction& p) {
  std::string s;
  bool first = true;
  for (const auto& [coef, mult] : p.form.entries) {
    if (!first) s += " _|_ ";
    s += mult.str() + " x <" + coef.str() + ">";
    first = false;
  }
  if (p.form.hyp) {
    if (!first) s += " _|_ ";
    s += p.form.hyp->str() + " x H";
  } else {
    if (!first) s += " _|_ ";
    s += "Hyp";
  }
  s += "  (dim " + p.form.dim.str() + ")";
  return s;
}

inline std::string pretty_matrix(const QuadForm& f) {
  std::string s;
  for (long i = 0; i < f.dim(); ++i) {
    s += "[ ";
    for (long j = 0; j < f.dim(); ++j) {
      s += f.at(i, j).str();
      s += j + 1 < f.dim() ? "  " : " ";
    }
    s += "]\n";
  }
  return s;
}

}  // namespace symtrace

#endif  // SYMTRACE_JSON_IO_HPP
