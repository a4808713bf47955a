#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "tricube/mpoly.hpp"

namespace tricube {

/// Canonical infix rendering. Terms appear in descending order of the
/// exponent of the highest variable, ties broken by the next variable down;
/// coefficients print as least nonnegative residues; no redundant "1*" or
/// "^1". parse_poly of the output reproduces the polynomial.
std::string to_text(const MultiPoly& f);

/// One triangular branch: "{ p1, p2 }", lowest main variable first.
std::string chain_to_text(const std::vector<MultiPoly>& polys);

/// Compact JSON value for one polynomial: nested coefficient arrays, one
/// nesting level per context variable, outermost index = exponent of the
/// highest variable, leaves = residues in [0, p). Constants still nest to
/// full depth so every polynomial of a document has the same shape.
std::string poly_to_json(const MultiPoly& f);

/// Versioned document
///   {"schema":"tricube-v1","prime":p,"vars":[...],"chains":[[poly...],...]}
/// using the nested-coefficient-array polynomial encoding.
std::string chains_to_json(const CtxPtr& ctx,
                           const std::vector<std::vector<MultiPoly>>& chains);

struct ParsedChains {
  CtxPtr ctx;
  std::vector<std::vector<MultiPoly>> chains;
};

/// Inverse of chains_to_json. Rejects documents whose schema tag is missing
/// or unknown; excess nesting depth and out-of-range residues are parse
/// errors.
ParsedChains chains_from_json(const std::string& text);

/// A system description file. Line oriented: '#' starts a comment, blank
/// lines are skipped. Directives, in any order before the first polynomial:
///   p 7
///   vars x1 x2
///   seed 42           (optional)
///   assume_radical    (optional)
/// then one polynomial per line, either "name = expr" or a bare expression
/// (unnamed entries get e1, e2, ...).
struct SystemFile {
  uint64_t prime = 0;
  std::vector<std::string> vars;
  std::vector<std::pair<std::string, std::string>> polys;  // name, expression
  bool assume_radical = false;
  bool has_seed = false;
  uint64_t seed = 0;
};

SystemFile read_system(std::istream& in);
SystemFile read_system_text(const std::string& text);

struct LoadedSystem {
  CtxPtr ctx;
  std::vector<std::string> names;
  std::vector<MultiPoly> polys;
  bool assume_radical = false;
  bool has_seed = false;
  uint64_t seed = 0;
};

/// Builds the field and variable context and parses every expression.
LoadedSystem load_system(const SystemFile& sf);

/// Benchmark CSV, RFC-4180 style: fields quoted only when they contain a
/// comma, quote or newline; rows end in '\n'. The schema is fixed so files
/// produced by different runs can be concatenated below one header.
std::string csv_header();
std::string csv_row(const std::string& family, int degree, double seconds,
                    std::size_t chains);

}  // namespace tricube
