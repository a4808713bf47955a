#include "tricube/io.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <istream>
#include <sstream>

#include "json.hpp"
#include "tricube/common.hpp"
#include "tricube/parse.hpp"

namespace tricube {

namespace {

using nlohmann::json;

void collect_terms(const MultiPoly& f, std::vector<int>& exps,
                   std::vector<std::pair<std::vector<int>, uint64_t>>& out) {
  if (f.is_zero()) return;
  if (f.is_constant()) {
    out.emplace_back(exps, f.constant_value().v);
    return;
  }
  int v = f.mvar();
  for (int k = f.degree(v); k >= 0; --k) {
    MultiPoly c = f.coeff_in(v, k);
    if (c.is_zero()) continue;
    exps[static_cast<std::size_t>(v)] = k;
    collect_terms(c, exps, out);
    exps[static_cast<std::size_t>(v)] = 0;
  }
}

std::string term_text(const CtxPtr& ctx, const std::vector<int>& exps,
                      uint64_t c) {
  std::vector<std::string> parts;
  bool have_var = false;
  for (std::size_t v = 0; v < exps.size(); ++v)
    if (exps[v] > 0) have_var = true;
  if (c != 1 || !have_var) parts.push_back(std::to_string(c));
  for (std::size_t v = 0; v < exps.size(); ++v) {
    if (exps[v] == 0) continue;
    std::string p = ctx->vars[v];
    if (exps[v] > 1) p += "^" + std::to_string(exps[v]);
    parts.push_back(std::move(p));
  }
  std::string s;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) s += "*";
    s += parts[i];
  }
  return s;
}

json poly_json(const MultiPoly& f, int v) {
  if (v < 0) return f.constant_value().v;
  json arr = json::array();
  int d = std::max(0, f.degree(v));
  for (int k = 0; k <= d; ++k) arr.push_back(poly_json(f.coeff_in(v, k), v - 1));
  return arr;
}

MultiPoly poly_from_json(const json& j, const CtxPtr& ctx, int v) {
  if (v < 0) {
    if (!j.is_number_unsigned())
      throw parse_error("polynomial leaf is not a nonnegative integer", 1, 1);
    uint64_t c = j.get<uint64_t>();
    if (c >= ctx->field.modulus())
      throw parse_error("coefficient out of range for the prime", 1, 1);
    return MultiPoly::constant(ctx, Fp{c});
  }
  if (!j.is_array() || j.empty())
    throw parse_error("polynomial level is not a nonempty array", 1, 1);
  std::vector<MultiPoly> coeffs;
  coeffs.reserve(j.size());
  for (const auto& e : j) coeffs.push_back(poly_from_json(e, ctx, v - 1));
  return MultiPoly::from_univar(ctx, v, std::move(coeffs));
}

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += "\"\"";
    else q.push_back(c);
  }
  q += "\"";
  return q;
}

std::string trim(const std::string& s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

bool valid_ident(const std::string& s) {
  if (s.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_')
    return false;
  for (char c : s)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return true;
}

uint64_t parse_uint_field(const std::string& s, const char* what, int lineno) {
  if (s.empty() ||
      !std::all_of(s.begin(), s.end(), [](char c) {
        return std::isdigit(static_cast<unsigned char>(c));
      }))
    throw parse_error(std::string("expected a nonnegative integer after '") +
                          what + "'",
                      lineno, 1);
  uint64_t v = 0;
  for (char c : s) {
    if (v > (UINT64_MAX - 9) / 10)
      throw parse_error(std::string("'") + what + "' value too large", lineno,
                        1);
    v = v * 10 + static_cast<uint64_t>(c - '0');
  }
  return v;
}

}  // namespace

std::string to_text(const MultiPoly& f) {
  if (f.is_zero()) return "0";
  std::vector<std::pair<std::vector<int>, uint64_t>> terms;
  std::vector<int> exps(f.ctx()->vars.size(), 0);
  collect_terms(f, exps, terms);
  std::string s;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (i) s += " + ";
    s += term_text(f.ctx(), terms[i].first, terms[i].second);
  }
  return s;
}

std::string chain_to_text(const std::vector<MultiPoly>& polys) {
  if (polys.empty()) return "{ }";
  std::string s = "{ ";
  for (std::size_t i = 0; i < polys.size(); ++i) {
    if (i) s += ", ";
    s += to_text(polys[i]);
  }
  s += " }";
  return s;
}

std::string poly_to_json(const MultiPoly& f) {
  return poly_json(f, static_cast<int>(f.ctx()->vars.size()) - 1).dump();
}

std::string chains_to_json(const CtxPtr& ctx,
                           const std::vector<std::vector<MultiPoly>>& chains) {
  json doc;
  doc["schema"] = "tricube-v1";
  doc["prime"] = ctx->field.modulus();
  doc["vars"] = ctx->vars;
  json cs = json::array();
  int top = static_cast<int>(ctx->vars.size()) - 1;
  for (const auto& chain : chains) {
    json c = json::array();
    for (const auto& f : chain) c.push_back(poly_json(f, top));
    cs.push_back(std::move(c));
  }
  doc["chains"] = std::move(cs);
  return doc.dump(2) + "\n";
}

ParsedChains chains_from_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw parse_error(std::string("invalid JSON: ") + e.what(), 1, 1);
  }
  if (!doc.is_object() || !doc.contains("schema") ||
      doc["schema"] != "tricube-v1")
    throw parse_error("missing or unknown schema tag (want tricube-v1)", 1, 1);
  if (!doc.contains("prime") || !doc["prime"].is_number_unsigned())
    throw parse_error("missing or invalid 'prime'", 1, 1);
  if (!doc.contains("vars") || !doc["vars"].is_array())
    throw parse_error("missing or invalid 'vars'", 1, 1);
  std::vector<std::string> vars;
  for (const auto& v : doc["vars"]) {
    if (!v.is_string()) throw parse_error("variable name is not a string", 1, 1);
    vars.push_back(v.get<std::string>());
  }
  ParsedChains out;
  out.ctx = make_ctx(doc["prime"].get<uint64_t>(), std::move(vars));
  if (!doc.contains("chains") || !doc["chains"].is_array())
    throw parse_error("missing or invalid 'chains'", 1, 1);
  int top = static_cast<int>(out.ctx->vars.size()) - 1;
  for (const auto& chain : doc["chains"]) {
    if (!chain.is_array())
      throw parse_error("chain entry is not an array", 1, 1);
    std::vector<MultiPoly> polys;
    for (const auto& e : chain)
      polys.push_back(poly_from_json(e, out.ctx, top));
    out.chains.push_back(std::move(polys));
  }
  return out;
}

SystemFile read_system(std::istream& in) {
  SystemFile sf;
  std::string line;
  int lineno = 0;
  int unnamed = 0;
  bool saw_p = false, saw_vars = false, header_done = false;
  while (std::getline(in, line)) {
    ++lineno;
    std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;

    std::istringstream ls(line);
    std::string word;
    ls >> word;
    if (!header_done && word == "p") {
      if (saw_p) throw parse_error("duplicate 'p' directive", lineno, 1);
      std::string rest;
      ls >> rest;
      std::string extra;
      if (ls >> extra)
        throw parse_error("trailing text after 'p' directive", lineno, 1);
      sf.prime = parse_uint_field(rest, "p", lineno);
      saw_p = true;
      continue;
    }
    if (!header_done && word == "vars") {
      if (saw_vars) throw parse_error("duplicate 'vars' directive", lineno, 1);
      std::string name;
      while (ls >> name) {
        if (!valid_ident(name))
          throw parse_error("invalid variable name '" + name + "'", lineno, 1);
        sf.vars.push_back(name);
      }
      if (sf.vars.empty())
        throw parse_error("'vars' directive lists no variables", lineno, 1);
      saw_vars = true;
      continue;
    }
    if (!header_done && word == "seed") {
      std::string rest;
      ls >> rest;
      sf.seed = parse_uint_field(rest, "seed", lineno);
      sf.has_seed = true;
      continue;
    }
    if (!header_done && word == "assume_radical") {
      sf.assume_radical = true;
      continue;
    }

    // A polynomial line.
    if (!saw_p || !saw_vars)
      throw parse_error("polynomial before 'p' and 'vars' directives", lineno,
                        1);
    header_done = true;
    std::size_t eq = line.find('=');
    std::string name, expr;
    if (eq != std::string::npos) {
      name = trim(line.substr(0, eq));
      expr = trim(line.substr(eq + 1));
      if (!valid_ident(name))
        throw parse_error("invalid polynomial name '" + name + "'", lineno, 1);
    } else {
      name = "e" + std::to_string(++unnamed);
      expr = line;
    }
    for (const auto& pr : sf.polys)
      if (pr.first == name)
        throw parse_error("duplicate polynomial name '" + name + "'", lineno,
                          1);
    if (expr.empty())
      throw parse_error("empty polynomial expression", lineno, 1);
    sf.polys.emplace_back(std::move(name), std::move(expr));
  }
  if (!saw_p) throw parse_error("missing 'p' directive", lineno, 1);
  if (!saw_vars) throw parse_error("missing 'vars' directive", lineno, 1);
  return sf;
}

SystemFile read_system_text(const std::string& text) {
  std::istringstream in(text);
  return read_system(in);
}

LoadedSystem load_system(const SystemFile& sf) {
  LoadedSystem ls;
  ls.ctx = make_ctx(sf.prime, sf.vars);
  ls.assume_radical = sf.assume_radical;
  ls.has_seed = sf.has_seed;
  ls.seed = sf.seed;
  for (const auto& pr : sf.polys) {
    ls.names.push_back(pr.first);
    try {
      ls.polys.push_back(parse_poly(pr.second, ls.ctx));
    } catch (const parse_error& e) {
      std::string m = e.what();
      std::size_t cut = m.rfind(" (line ");  // the ctor re-appends the position
      if (cut != std::string::npos) m.erase(cut);
      throw parse_error(m + " in polynomial '" + pr.first + "'", e.line(),
                        e.col());
    }
  }
  return ls;
}

std::string csv_header() { return "family,degree,seconds,chains\n"; }

std::string csv_row(const std::string& family, int degree, double seconds,
                    std::size_t chains) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", seconds);
  return csv_quote(family) + "," + std::to_string(degree) + "," + buf + "," +
         std::to_string(chains) + "\n";
}

}  // namespace tricube
