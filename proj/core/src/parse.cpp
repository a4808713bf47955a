#include "tricube/parse.hpp"

#include <cctype>
#include <cstdint>

#include "tricube/common.hpp"

namespace tricube {

namespace {

bool ident_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}
bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

// Recursive-descent parser over raw characters; no separate token stream is
// needed because every token is self-delimiting under this grammar.
class Parser {
 public:
  Parser(const std::string& src, CtxPtr ctx)
      : src_(src), ctx_(std::move(ctx)) {}

  MultiPoly run() {
    MultiPoly f = expr();
    skip_ws();
    if (pos_ < src_.size()) fail(line_, col_, "unexpected character");
    return f;
  }

 private:
  // Exponents are syntactic literals; anything this large is a typo, not a
  // polynomial anyone can compute with.
  static constexpr uint64_t kMaxExp = 1u << 20;

  [[noreturn]] void fail(int line, int col, const std::string& msg) const {
    throw parse_error(msg, line, col);
  }

  void advance() {
    if (src_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  void skip_ws() {
    while (pos_ < src_.size() &&
           std::isspace(static_cast<unsigned char>(src_[pos_])))
      advance();
  }

  bool eat(char c) {
    if (pos_ < src_.size() && src_[pos_] == c) {
      advance();
      return true;
    }
    return false;
  }

  MultiPoly expr() {
    MultiPoly f = term();
    for (;;) {
      skip_ws();
      if (eat('+'))
        f = f + term();
      else if (eat('-'))
        f = f - term();
      else
        return f;
    }
  }

  MultiPoly term() {
    MultiPoly f = factor();
    for (;;) {
      skip_ws();
      if (eat('*'))
        f = f * factor();
      else
        return f;
    }
  }

  MultiPoly factor() {
    MultiPoly b = base();
    skip_ws();
    if (eat('^')) {
      skip_ws();
      int line = line_, col = col_;
      if (pos_ >= src_.size() ||
          !std::isdigit(static_cast<unsigned char>(src_[pos_])))
        fail(line, col, "expected a nonnegative integer exponent");
      uint64_t e = 0;
      while (pos_ < src_.size() &&
             std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
        e = e * 10 + static_cast<uint64_t>(src_[pos_] - '0');
        if (e > kMaxExp) fail(line, col, "exponent too large");
        advance();
      }
      return b.pow(e);
    }
    return b;
  }

  MultiPoly base() {
    skip_ws();
    int line = line_, col = col_;
    if (pos_ >= src_.size()) fail(line, col, "unexpected end of input");
    char c = src_[pos_];
    if (c == '-') {
      advance();
      return -base();
    }
    if (c == '(') {
      advance();
      MultiPoly f = expr();
      skip_ws();
      if (!eat(')')) fail(line_, col_, "expected ')'");
      return f;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const uint64_t p = ctx_->field.modulus();
      uint64_t v = 0;
      while (pos_ < src_.size() &&
             std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
        v = static_cast<uint64_t>(
            (static_cast<unsigned __int128>(v) * 10 +
             static_cast<unsigned>(src_[pos_] - '0')) %
            p);
        advance();
      }
      return MultiPoly::constant(ctx_, Fp{v});
    }
    if (ident_start(c)) {
      std::string name;
      while (pos_ < src_.size() && ident_char(src_[pos_])) {
        name.push_back(src_[pos_]);
        advance();
      }
      for (std::size_t i = 0; i < ctx_->vars.size(); ++i)
        if (ctx_->vars[i] == name)
          return MultiPoly::var(ctx_, static_cast<int>(i));
      fail(line, col, "undeclared variable '" + name + "'");
    }
    fail(line, col, "expected a number, a variable, '(' or '-'");
  }

  const std::string& src_;
  CtxPtr ctx_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

}  // namespace

MultiPoly parse_poly(const std::string& src, const CtxPtr& ctx) {
  return Parser(src, ctx).run();
}

}  // namespace tricube
