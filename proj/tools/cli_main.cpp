#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "tricube/common.hpp"
#include "tricube/io.hpp"
#include "tricube/mpoly.hpp"
#include "tricube/parse.hpp"
#include "tricube/regchain.hpp"
#include "tricube/regops.hpp"
#include "tricube/scube.hpp"
#include "tricube/solver.hpp"
#include "tricube/subres.hpp"
#include "tricube/sysgen.hpp"

namespace {

using namespace tricube;
using nlohmann::json;

// 998244353 = 119 * 2^23 + 1: an NTT-friendly 30-bit prime with 2-adicity 23,
// large enough for every evaluation grid the bench degrees need.
constexpr uint64_t kBenchPrime = 998244353;

std::vector<std::string> split_csv(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, ',')) out.push_back(cur);
  if (!s.empty() && s.back() == ',') out.push_back("");
  return out;
}

CtxPtr ctx_from(uint64_t prime, const std::string& vars_csv) {
  if (prime == 0) throw precondition_error("--prime is required");
  if (vars_csv.empty()) throw precondition_error("--vars is required");
  return make_ctx(prime, split_csv(vars_csv));
}

RegularChain chain_from(const CtxPtr& ctx,
                        const std::vector<std::string>& exprs) {
  std::vector<MultiPoly> polys;
  polys.reserve(exprs.size());
  for (const auto& e : exprs) polys.push_back(parse_poly(e, ctx));
  return RegularChain::make(ctx, std::move(polys));
}

void emit(const std::string& out_path, const std::string& text) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) throw precondition_error("cannot open output file: " + out_path);
  f << text;
}

json doc_head(const CtxPtr& ctx) {
  json doc;
  doc["schema"] = "tricube-v1";
  doc["prime"] = ctx->field.modulus();
  doc["vars"] = ctx->vars;
  return doc;
}

json poly_json(const MultiPoly& f) { return json::parse(poly_to_json(f)); }

json chain_json(const RegularChain& T) {
  json arr = json::array();
  for (const auto& f : T.polys()) arr.push_back(poly_json(f));
  return arr;
}

struct CmdArgs {
  uint64_t prime = 0;
  std::string vars;
  std::string format = "text";
  std::string out;
  uint64_t seed = 0;
  bool assume_radical = false;
  std::vector<std::string> chain;
  std::vector<std::string> polys;
  std::string system_file;
  std::string dump_file;
  std::string degrees = "8,16,32";
  std::string family = "dense";
};

void add_common(CLI::App* sub, CmdArgs& a, bool with_chain) {
  sub->add_option("--prime", a.prime, "field characteristic (an odd prime)");
  sub->add_option("--vars", a.vars,
                  "comma-separated variable names, lowest first");
  sub->add_option("--seed", a.seed, "seed for randomized internals");
  sub->add_option("--format", a.format, "output format")
      ->check(CLI::IsMember({"text", "json"}));
  sub->add_option("--out", a.out, "write output to this file instead of stdout");
  sub->add_flag("--assume-radical", a.assume_radical,
                "skip the splitting passes that certify radicality");
  if (with_chain)
    sub->add_option("--chain", a.chain,
                    "regular chain entry (repeat, lowest variable first)")
        ->allow_extra_args(false);
}

// Orients (P, Q) so deg(P,y) >= deg(Q,y) and returns the swap sign of the
// resultant, (-1)^(deg P * deg Q).
bool orient(MultiPoly& P, MultiPoly& Q, int y) {
  if (P.degree(y) >= Q.degree(y)) return false;
  std::swap(P, Q);
  return (static_cast<long long>(P.degree(y)) * Q.degree(y)) % 2 != 0;
}

void run_resultant(const CmdArgs& a) {
  CtxPtr ctx = ctx_from(a.prime, a.vars);
  MultiPoly P = parse_poly(a.polys.at(0), ctx);
  MultiPoly Q = parse_poly(a.polys.at(1), ctx);
  int y = static_cast<int>(ctx->vars.size()) - 1;
  MultiPoly R = MultiPoly::zero(ctx);
  if (P.degree(y) >= 1 && Q.degree(y) >= 1) {
    bool flip = orient(P, Q, y);
    ScubeOptions opt;
    opt.seed = a.seed;
    auto prov = make_provider(P, Q, y, opt);
    R = prov->resultant();
    if (flip) R = -R;
  } else {
    R = resultant(P, Q, y);  // degenerate conventions live there
  }
  if (a.format == "json") {
    json doc = doc_head(ctx);
    doc["resultant"] = poly_json(R);
    emit(a.out, doc.dump(2) + "\n");
  } else {
    emit(a.out, to_text(R) + "\n");
  }
}

void run_scube(const CmdArgs& a) {
  CtxPtr ctx = ctx_from(a.prime, a.vars);
  MultiPoly P = parse_poly(a.polys.at(0), ctx);
  MultiPoly Q = parse_poly(a.polys.at(1), ctx);
  int y = static_cast<int>(ctx->vars.size()) - 1;
  if (P.degree(y) < 1 || Q.degree(y) < 1)
    throw precondition_error(
        "both polynomials must have positive degree in the top variable");
  if (orient(P, Q, y))
    std::cerr << "note: arguments swapped so deg(P) >= deg(Q)\n";

  ScubeOptions opt;
  opt.seed = a.seed;
  if (!a.dump_file.empty()) {
    Scube s = Scube::build(P, Q, y, opt);
    std::ofstream f(a.dump_file, std::ios::binary);
    if (!f)
      throw precondition_error("cannot open dump file: " + a.dump_file);
    s.dump(f);
    std::cerr << "wrote raw tables to " << a.dump_file << "\n";
    return;
  }

  auto prov = make_provider(P, Q, y, opt);
  int q = prov->degq();
  if (a.format == "json") {
    json doc = doc_head(ctx);
    doc["degp"] = prov->degp();
    doc["degq"] = q;
    json rows = json::array();
    for (int j = 0; j < q; ++j) {
      json row;
      row["index"] = j;
      row["full"] = poly_json(prov->full(j));
      row["principal"] = poly_json(prov->principal(j));
      rows.push_back(std::move(row));
    }
    doc["rows"] = std::move(rows);
    doc["top_principal"] = poly_json(prov->principal(q));
    emit(a.out, doc.dump(2) + "\n");
  } else {
    std::string text;
    for (int j = 0; j < q; ++j) {
      text += "S_" + std::to_string(j) + " = " + to_text(prov->full(j)) + "\n";
      text +=
          "lc_" + std::to_string(j) + " = " + to_text(prov->principal(j)) + "\n";
    }
    text += "lc_" + std::to_string(q) + " = " + to_text(prov->principal(q)) +
            "\n";
    emit(a.out, text);
  }
}

void run_reggcd(const CmdArgs& a) {
  CtxPtr ctx = ctx_from(a.prime, a.vars);
  MultiPoly P = parse_poly(a.polys.at(0), ctx);
  MultiPoly Q = parse_poly(a.polys.at(1), ctx);
  RegularChain T = chain_from(ctx, a.chain);
  RegOpts opts;
  opts.assume_radical = a.assume_radical;
  opts.seed = a.seed;
  RegOps eng(opts);
  RegularGcdSequence seq = eng.regular_gcd(P, Q, T);
  if (a.format == "json") {
    json doc = doc_head(ctx);
    json pairs = json::array();
    for (const auto& pr : seq) {
      json e;
      e["gcd"] = poly_json(pr.g);
      e["chain"] = chain_json(pr.chain);
      pairs.push_back(std::move(e));
    }
    doc["pairs"] = std::move(pairs);
    emit(a.out, doc.dump(2) + "\n");
  } else {
    std::string text;
    for (const auto& pr : seq)
      text += chain_to_text(pr.chain.polys()) + " : " + to_text(pr.g) + "\n";
    emit(a.out, text);
  }
}

void run_regularize(const CmdArgs& a) {
  CtxPtr ctx = ctx_from(a.prime, a.vars);
  MultiPoly P = parse_poly(a.polys.at(0), ctx);
  RegularChain T = chain_from(ctx, a.chain);
  RegOpts opts;
  opts.assume_radical = a.assume_radical;
  opts.seed = a.seed;
  RegOps eng(opts);
  SplitResult out = eng.regularize(P, T);
  if (a.format == "json") {
    json doc = doc_head(ctx);
    json branches = json::array();
    for (const auto& br : out) {
      json e;
      e["tag"] = br.tag == RegTag::null ? "null" : "regular";
      e["chain"] = chain_json(br.chain);
      branches.push_back(std::move(e));
    }
    doc["branches"] = std::move(branches);
    emit(a.out, doc.dump(2) + "\n");
  } else {
    std::string text;
    for (const auto& br : out)
      text += std::string(br.tag == RegTag::null ? "null" : "regular") + " " +
              chain_to_text(br.chain.polys()) + "\n";
    emit(a.out, text);
  }
}

void run_solve2(const CmdArgs& a, bool seed_given) {
  CtxPtr ctx;
  std::vector<MultiPoly> sys;
  uint64_t seed = a.seed;
  bool assume_radical = a.assume_radical;
  if (!a.system_file.empty()) {
    std::ifstream f(a.system_file);
    if (!f)
      throw precondition_error("cannot open system file: " + a.system_file);
    SystemFile sf = read_system(f);
    LoadedSystem ls = load_system(sf);
    if (ls.polys.size() != 2)
      throw precondition_error("solve2 needs exactly 2 polynomials; file has " +
                               std::to_string(ls.polys.size()));
    ctx = ls.ctx;
    sys = std::move(ls.polys);
    if (!seed_given && ls.has_seed) seed = ls.seed;
    assume_radical = assume_radical || ls.assume_radical;
  } else {
    ctx = ctx_from(a.prime, a.vars);
    sys.push_back(parse_poly(a.polys.at(0), ctx));
    sys.push_back(parse_poly(a.polys.at(1), ctx));
  }

  SolveOptions so;
  so.reg.seed = seed;
  so.reg.assume_radical = assume_radical;
  Decomposition dec = solve_two_eqs(sys[0], sys[1], so);

  if (a.format == "json") {
    std::vector<std::vector<MultiPoly>> chains;
    chains.reserve(dec.chains.size());
    for (const auto& T : dec.chains) chains.push_back(T.polys());
    emit(a.out, chains_to_json(ctx, chains));
  } else {
    std::string text;
    for (const auto& T : dec.chains) text += chain_to_text(T.polys()) + "\n";
    emit(a.out, text);
  }
}

void run_bench(const CmdArgs& a) {
  uint64_t prime = a.prime == 0 ? kBenchPrime : a.prime;
  std::vector<int> degrees;
  if (!a.degrees.empty()) {
    for (const std::string& tok : split_csv(a.degrees)) {
      if (tok.empty() ||
          tok.find_first_not_of("0123456789") != std::string::npos)
        throw parse_error("bad --degrees entry '" + tok + "'", 1, 1);
      degrees.push_back(std::stoi(tok));
    }
  }
  std::vector<std::string> families;
  if (a.family == "both") {
    families = {"dense", "noneq"};
  } else if (a.family == "dense" || a.family == "noneq") {
    families = {a.family};
  } else {
    throw precondition_error("--family must be dense, noneq or both");
  }

  CtxPtr ctx = make_ctx(prime, {"x1", "x2"});
  std::string csv = csv_header();
  for (int d : degrees) {
    for (const std::string& fam : families) {
      uint64_t sub_seed =
          a.seed * 1000003ull + static_cast<uint64_t>(d) * 2 +
          (fam == "noneq" ? 1 : 0);
      auto [P, Q] = fam == "dense"
                        ? random_dense_system(ctx, sub_seed, d)
                        : non_equiprojectable_system(ctx, sub_seed,
                                                     std::max(2, d));
      SolveOptions so;
      so.reg.seed = a.seed;
      auto t0 = std::chrono::steady_clock::now();
      Decomposition dec = solve_two_eqs(P, Q, so);
      std::chrono::duration<double> dt = std::chrono::steady_clock::now() - t0;
      csv += csv_row(fam, d, dt.count(), dec.chains.size());
    }
  }
  emit(a.out, csv);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "triangular decomposition toolkit over prime fields: subresultant "
      "tables, regular chain splitting and two-equation solving"};
  app.require_subcommand(1);

  CmdArgs ares, ascube, agcd, areg, asolve, abench;

  CLI::App* cres = app.add_subcommand(
      "resultant", "resultant of two polynomials in the top variable");
  add_common(cres, ares, false);
  cres->add_option("polys", ares.polys, "two polynomial expressions")
      ->expected(2);

  CLI::App* cscube = app.add_subcommand(
      "scube", "print the subresultant tables of a pair");
  add_common(cscube, ascube, false);
  cscube->add_option("polys", ascube.polys, "two polynomial expressions")
      ->expected(2);
  cscube->add_option("--dump", ascube.dump_file,
                     "write the raw grid tables to this file");

  CLI::App* cgcd = app.add_subcommand(
      "reggcd", "regular gcd sequence of a pair over a chain");
  add_common(cgcd, agcd, true);
  cgcd->add_option("polys", agcd.polys, "two polynomial expressions")
      ->expected(2);

  CLI::App* creg = app.add_subcommand(
      "regularize", "split a chain by the regularity of a polynomial");
  add_common(creg, areg, true);
  creg->add_option("poly", areg.polys, "polynomial expression")->expected(1);

  CLI::App* csolve = app.add_subcommand(
      "solve2", "triangular decomposition of a two-equation system");
  add_common(csolve, asolve, false);
  csolve->add_option("polys", asolve.polys, "two polynomial expressions")
      ->expected(0, 2);
  CLI::Option* osys = csolve->add_option(
      "--system", asolve.system_file,
      "read prime, variables and the two polynomials from this file");

  CLI::App* cbench = app.add_subcommand(
      "bench", "time the solver on generated families, CSV to stdout");
  add_common(cbench, abench, false);
  cbench->add_option("--degrees", abench.degrees,
                     "comma-separated total degrees (empty for header only)");
  cbench->add_option("--family", abench.family, "dense, noneq or both");

  try {
    app.parse(argc, argv);
    if (cres->parsed()) run_resultant(ares);
    if (cscube->parsed()) run_scube(ascube);
    if (cgcd->parsed()) run_reggcd(agcd);
    if (creg->parsed()) run_regularize(areg);
    if (csolve->parsed()) {
      if (asolve.system_file.empty() && asolve.polys.size() != 2)
        throw precondition_error("solve2 needs two polynomials or --system");
      if (!asolve.system_file.empty() && !asolve.polys.empty())
        throw precondition_error("--system excludes positional polynomials");
      run_solve2(asolve, csolve->count("--seed") > 0);
    }
    if (cbench->parsed()) run_bench(abench);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const tricube::parse_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const tricube::precondition_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const tricube::unsupported_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  (void)osys;
  return 0;
}
