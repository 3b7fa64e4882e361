// octgi command-line tool. Links the C API only (octgi.h); all algebra and
// certification work happens behind the shared library.
//
// Exit codes: 0 success / checked-true; 1 checked-false (non-identity,
// non-member, deficit, acceptance failure); 2 usage or parse error;
// 3 internal invariant breach.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "octgi.h"

namespace {

struct CtxDeleter {
  void operator()(octgi_ctx* c) const { octgi_ctx_free(c); }
};
using CtxPtr = std::unique_ptr<octgi_ctx, CtxDeleter>;

struct StrDeleter {
  void operator()(char* s) const { octgi_string_free(s); }
};
using StrPtr = std::unique_ptr<char, StrDeleter>;

int map_exit(int code) {
  switch (code) {
    case OCTGI_OK: return 0;
    case OCTGI_CHECKED_FALSE: return 1;
    case OCTGI_ERR_PARSE: return 2;
    case OCTGI_ERR_ARG: return 2;
    default: return 3;
  }
}

CtxPtr make_ctx(const std::string& config_path) {
  std::string text;
  if (!config_path.empty()) {
    std::ifstream in(config_path);
    if (!in) {
      std::cerr << "error: cannot read config '" << config_path << "'\n";
      return nullptr;
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }
  CtxPtr ctx(octgi_ctx_new(text.c_str()));
  if (!ctx) std::cerr << "error: " << octgi_last_error() << "\n";
  return ctx;
}

void print_err(int code) {
  if (code == OCTGI_ERR_PARSE || code == OCTGI_ERR_ARG || code == OCTGI_ERR_INTERNAL)
    std::cerr << "error: " << octgi_last_error() << "\n";
}

// opt-in human-readable rendering of a TSV block: aligned columns
std::string prettify(const std::string& tsv) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(tsv);
  std::string line;
  std::vector<std::size_t> width;
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    std::istringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, '\t')) cells.push_back(cell);
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (width.size() <= i) width.push_back(0);
      width[i] = std::max(width[i], cells[i].size());
    }
    rows.push_back(std::move(cells));
  }
  std::ostringstream out;
  for (const auto& cells : rows) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) out << "  ";
      out << cells[i];
      if (i + 1 < cells.size())
        out << std::string(width[i] - cells[i].size(), ' ');
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact graded Cayley-Dickson algebras over Q: normal forms, identity checks,"
               " bounded-degree T-ideal certificates"};
  app.require_subcommand(1);

  std::string config, grading, expr, gens, out_path;
  bool trace = false, pretty = false, quadruples = false, orbits = false, degree5 = false;
  int max_degree = 0;
  std::uint64_t seed = 0;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--algebra", config, "algebra config file (key=value lines)");
  };

  auto* c_norm = app.add_subcommand("normalize", "rewrite an expression to normal form");
  add_common(c_norm);
  c_norm->add_option("--grading", grading, "z2_3 or z2_2")->required();
  c_norm->add_option("--expr", expr, "expression in the bracket grammar")->required();
  c_norm->add_flag("--trace", trace, "print one 'ruleName @ position' line per step");

  auto* c_check = app.add_subcommand("check-identity", "decide whether an expression is a graded identity");
  add_common(c_check);
  c_check->add_option("--grading", grading, "z2_3 or z2_2")->required();
  c_check->add_option("--expr", expr, "expression in the bracket grammar")->required();

  auto* c_member = app.add_subcommand("member", "multilinear membership in a T-ideal span");
  add_common(c_member);
  c_member->add_option("--gens", gens, "generator set: z2_3, I (default) or I16");
  c_member->add_option("--expr", expr, "multilinear expression")->required();
  c_member->add_option("--max-degree", max_degree, "reject inputs above this degree");

  auto* c_cert = app.add_subcommand("certify", "consequence span vs identity kernel, all grade assignments");
  add_common(c_cert);
  c_cert->add_option("--grading", grading, "z2_3 or z2_2")->required();
  c_cert->add_option("--gens", gens, "generator set: z2_3, I or I16 (default by grading)");
  c_cert->add_option("--max-degree", max_degree, "multilinear degrees 1..max (<= 5)")->required();
  c_cert->add_option("--out", out_path, "write the TSV report to this file");
  c_cert->add_flag("--orbits", orbits, "one representative per grade multiset");
  c_cert->add_flag("--pretty", pretty, "aligned human-readable table");

  auto* c_table = app.add_subcommand("mult-table", "structure-constant table of the algebra");
  add_common(c_table);
  c_table->add_flag("--quadruples", quadruples, "machine-readable (i, j, coefficient, basis) rows");
  c_table->add_flag("--pretty", pretty, "aligned human-readable table");

  auto* c_m2 = app.add_subcommand("derive-m2", "Z2-graded M_2 coda: restricted rules, memberships, isomorphism");
  add_common(c_m2);
  c_m2->add_flag("--pretty", pretty, "aligned human-readable table");

  auto* c_self = app.add_subcommand("selftest", "run the acceptance suite");
  add_common(c_self);
  c_self->add_option("--seed", seed, "seed for the randomized suites (default 0)");
  c_self->add_flag("--degree5", degree5, "extend the T-ideal certification to degree 5");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  CtxPtr ctx = make_ctx(config);
  if (!ctx) return 2;

  if (c_norm->parsed()) {
    char* out = nullptr;
    int code = octgi_normalize(ctx.get(), grading.c_str(), expr.c_str(), trace ? 1 : 0, &out);
    StrPtr guard(out);
    if (out) std::cout << out;
    print_err(code);
    return map_exit(code);
  }
  if (c_check->parsed()) {
    char* witness = nullptr;
    int code = octgi_check_identity(ctx.get(), grading.c_str(), expr.c_str(), &witness);
    StrPtr guard(witness);
    if (code == OCTGI_OK) std::cout << "identity\n";
    if (code == OCTGI_CHECKED_FALSE) {
      std::cout << "not an identity\n";
      if (witness) std::cout << witness;
    }
    print_err(code);
    return map_exit(code);
  }
  if (c_member->parsed()) {
    int code = octgi_member(ctx.get(), gens.c_str(), expr.c_str(), max_degree);
    if (code == OCTGI_OK) std::cout << "member\n";
    if (code == OCTGI_CHECKED_FALSE) std::cout << "not a member\n";
    print_err(code);
    return map_exit(code);
  }
  if (c_cert->parsed()) {
    char* tsv = nullptr;
    int code = octgi_certify(ctx.get(), grading.c_str(), gens.c_str(), max_degree,
                             orbits ? 1 : 0, &tsv);
    StrPtr guard(tsv);
    if (tsv) {
      if (!out_path.empty()) {
        std::ofstream out(out_path);
        out << tsv;
      }
      std::cout << (pretty ? prettify(tsv) : std::string(tsv));
    }
    print_err(code);
    return map_exit(code);
  }
  if (c_table->parsed()) {
    char* out = nullptr;
    int code = octgi_mult_table(ctx.get(), quadruples ? 1 : 0, &out);
    StrPtr guard(out);
    if (out) std::cout << (pretty ? prettify(out) : std::string(out));
    print_err(code);
    return map_exit(code);
  }
  if (c_m2->parsed()) {
    char* out = nullptr;
    int code = octgi_derive_m2(ctx.get(), &out);
    StrPtr guard(out);
    if (out) std::cout << (pretty ? prettify(out) : std::string(out));
    print_err(code);
    return map_exit(code);
  }
  if (c_self->parsed()) {
    char* report = nullptr;
    int code = octgi_selftest(ctx.get(), seed, degree5 ? 1 : 0, &report);
    StrPtr guard(report);
    if (report) std::cout << report;
    print_err(code);
    return map_exit(code);
  }
  return 2;
}
