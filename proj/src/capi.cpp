#include "octgi.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "octgi/algebra.hpp"
#include "octgi/checker.hpp"
#include "octgi/matrix.hpp"
#include "octgi/parse.hpp"
#include "octgi/rewrite.hpp"
#include "octgi/selftest.hpp"
#include "octgi/tideal.hpp"

using namespace octgi;

struct octgi_ctx {
  AlgebraParams params;
  std::string default_grading;
  CayleyDickson alg;

  explicit octgi_ctx(const AlgebraParams& p, std::string grading)
      : params(p), default_grading(std::move(grading)), alg(p) {}
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

int classify(const std::exception& e) {
  if (dynamic_cast<const ParseError*>(&e)) return OCTGI_ERR_PARSE;
  if (dynamic_cast<const InternalError*>(&e)) return OCTGI_ERR_INTERNAL;
  if (dynamic_cast<const Error*>(&e)) return OCTGI_ERR_ARG;
  return OCTGI_ERR_INTERNAL;
}

template <class F>
int guarded(F&& body) {
  try {
    return body();
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return classify(e);
  } catch (...) {
    g_last_error = "unknown error";
    return OCTGI_ERR_INTERNAL;
  }
}

Grading grading_for(const octgi_ctx* ctx, const char* name) {
  std::string g = name && *name ? name : ctx->default_grading;
  if (g.empty()) g = ctx->alg.rank() == 3 ? "z2_2" : "z2_1";
  if (g == "z2_3") {
    if (ctx->alg.rank() != 3) throw DomainError("grading z2_3 needs rank 3");
    return Grading::fine(3);
  }
  if (g == "z2_2") {
    if (ctx->alg.rank() == 3) return Grading::coarse(3);
    if (ctx->alg.rank() == 2) return Grading::fine(2);
    throw DomainError("grading z2_2 needs rank 2 or 3");
  }
  if (g == "z2_1") {
    if (ctx->alg.rank() != 2) throw DomainError("grading z2_1 needs rank 2");
    return Grading::coarse(2);
  }
  throw DomainError("unknown grading '" + g + "' (use z2_3 or z2_2)");
}

std::vector<Rule> gens_for(const octgi_ctx* ctx, const std::string& gens) {
  if (gens == "z2_3") return ruleset_z2_3(ctx->alg);
  if (gens == "I" || gens.empty()) return ruleset_I(ctx->alg);
  if (gens == "I16") {
    auto rules = ruleset_I(ctx->alg);
    auto der = derived_rules(ctx->alg);
    for (const auto& r : der)
      if (r.number == 16) rules.push_back(r);
    return rules;
  }
  throw DomainError("unknown generator set '" + gens + "' (use z2_3, I or I16)");
}

}  // namespace

extern "C" {

octgi_ctx* octgi_ctx_new(const char* config_text) {
  try {
    std::string text = config_text ? config_text : "";
    auto [params, grading] = parse_algebra_config(text);
    return new octgi_ctx(params, grading);
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return nullptr;
  }
}

void octgi_ctx_free(octgi_ctx* ctx) { delete ctx; }

const char* octgi_last_error(void) { return g_last_error.c_str(); }

void octgi_string_free(char* s) { std::free(s); }

const char* octgi_version(void) { return "octgi 1.0.0"; }

const char* octgi_default_grading(octgi_ctx* ctx) {
  return ctx->default_grading.empty() ? "" : ctx->default_grading.c_str();
}

int octgi_normalize(octgi_ctx* ctx, const char* grading, const char* expr, int trace,
                    char** out) {
  return guarded([&]() {
    if (!ctx || !expr || !out) throw DomainError("null argument");
    Grading g = grading_for(ctx, grading);
    Poly f = parse_poly(expr);
    for (const auto& v : poly_vars(f))
      if (v.grade.rank() != g.group_rank())
        throw DomainError("expression grades do not match grading " + g.name());
    std::string text;
    if (g.group_rank() == ctx->alg.rank()) {
      // fine grading: constructive normal form, one monomial at a time
      Poly acc;
      std::vector<RewriteStep> steps;
      for (const auto& [c, t] : f.monomials()) {
        NormalizeResult res = normalize_z2_3(t);
        acc = acc + Poly::monomial(c * res.coeff, res.word);
        steps.insert(steps.end(), res.trace.begin(), res.trace.end());
      }
      text = format_poly(acc) + "\n";
      if (trace)
        for (const auto& st : steps) text += st.rule + " @ " + st.pos + "\n";
    } else {
      RewriteResult res = rewrite_modulo_I(f, ctx->alg);
      text = format_poly(res.out) + "\n";
      if (!res.normal) text = "! non-normal: step budget exhausted\n" + text;
      if (trace)
        for (const auto& st : res.trace) text += st.rule + " @ " + st.pos + "\n";
    }
    *out = dup_string(text);
    return OCTGI_OK;
  });
}

int octgi_check_identity(octgi_ctx* ctx, const char* grading, const char* expr,
                         char** witness_out) {
  return guarded([&]() {
    if (!ctx || !expr) throw DomainError("null argument");
    Grading g = grading_for(ctx, grading);
    Poly f = parse_poly(expr);
    for (const auto& v : poly_vars(f))
      if (v.grade.rank() != g.group_rank())
        throw DomainError("expression grades do not match grading " + g.name());
    if (is_multilinear(f)) {
      MultilinearCheck chk = is_identity_multilinear(f, ctx->alg, g);
      if (chk.identity) return OCTGI_OK;
      if (witness_out) {
        std::string w = "witness:";
        for (std::size_t i = 0; i < chk.vars.size(); ++i)
          w += " " + chk.vars[i].str() + "=e" + std::to_string(chk.witness[i]);
        w += " -> " + elem_str(chk.value) + "\n";
        *witness_out = dup_string(w);
      }
      return OCTGI_CHECKED_FALSE;
    }
    bool ok = is_identity_generic(f, ctx->alg, g);
    if (!ok && witness_out)
      *witness_out = dup_string("generic evaluation is nonzero (non-multilinear input)\n");
    return ok ? OCTGI_OK : OCTGI_CHECKED_FALSE;
  });
}

int octgi_member(octgi_ctx* ctx, const char* gens, const char* expr, int max_degree) {
  return guarded([&]() {
    if (!ctx || !expr) throw DomainError("null argument");
    Poly f = parse_poly(expr);
    if (f.is_zero()) return OCTGI_OK;
    if (!is_multilinear(f)) throw DomainError("membership needs multilinear input");
    int deg = f.monomials().front().second.degree();
    if (max_degree > 0 && deg > max_degree)
      throw DomainError("expression degree exceeds --max-degree");
    auto rules = gens_for(ctx, gens ? gens : "I");
    return membership(f, rules) ? OCTGI_OK : OCTGI_CHECKED_FALSE;
  });
}

int octgi_certify(octgi_ctx* ctx, const char* grading, const char* gens, int max_degree,
                  int use_orbits, char** tsv_out) {
  return guarded([&]() {
    if (!ctx) throw DomainError("null argument");
    Grading g = grading_for(ctx, grading);
    std::string gen_name = gens && *gens ? gens : (g.name() == "z2_3" ? "z2_3" : "I");
    auto rules = gens_for(ctx, gen_name);
    if (max_degree < 1 || max_degree > 5)
      throw DomainError("certify needs 1 <= max-degree <= 5");
    CertifyReport report = certify_all(rules, max_degree, ctx->alg, g, use_orbits != 0);
    if (tsv_out) *tsv_out = dup_string(certify_tsv(report));
    return report.all_equal ? OCTGI_OK : OCTGI_CHECKED_FALSE;
  });
}

int octgi_mult_table(octgi_ctx* ctx, int as_quadruples, char** out) {
  return guarded([&]() {
    if (!ctx || !out) throw DomainError("null argument");
    const CayleyDickson& alg = ctx->alg;
    std::string text;
    auto label = [&](int b) {
      std::string s;
      for (int k = 0; k < alg.rank(); ++k) s += ((b >> k) & 1) ? '1' : '0';
      return s;
    };
    if (as_quadruples) {
      text = "i\tj\tcoefficient\tbasis\n";
      for (int i = 0; i < alg.dim(); ++i)
        for (int j = 0; j < alg.dim(); ++j) {
          const auto& t = alg.table(i, j);
          text += std::to_string(i) + "\t" + std::to_string(j) + "\t" + rat_str(t.coeff) +
                  "\t" + label(t.basis) + "\n";
        }
    } else {
      for (int i = 0; i < alg.dim(); ++i) {
        for (int j = 0; j < alg.dim(); ++j) {
          const auto& t = alg.table(i, j);
          if (j) text += "\t";
          if (t.coeff == 1)
            text += "e" + label(t.basis);
          else if (t.coeff == -1)
            text += "-e" + label(t.basis);
          else
            text += rat_str(t.coeff) + "e" + label(t.basis);
        }
        text += "\n";
      }
    }
    *out = dup_string(text);
    return OCTGI_OK;
  });
}

int octgi_derive_m2(octgi_ctx* ctx, char** out) {
  return guarded([&]() {
    if (!ctx || !out) throw DomainError("null argument");
    *out = dup_string(derive_m2_text());
    return OCTGI_OK;
  });
}

int octgi_selftest(octgi_ctx* ctx, uint64_t seed, int include_degree5, char** report_out) {
  return guarded([&]() {
    if (!ctx) throw DomainError("null argument");
    auto results = run_acceptance(seed, include_degree5 != 0);
    if (report_out) *report_out = dup_string(render_acceptance(results));
    return acceptance_all_pass(results) ? OCTGI_OK : OCTGI_CHECKED_FALSE;
  });
}

}  // extern "C"
