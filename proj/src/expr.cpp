#include "tms/expr.hpp"

#include <cctype>

#include "tms/error.hpp"

namespace tms {

PropertyExpr PropertyExpr::ident(int index) {
  PropertyExpr e;
  e.ident_ = index;
  return e;
}

PropertyExpr PropertyExpr::negate(PropertyExpr e) {
  PropertyExpr r;
  r.op_ = Op::kNot;
  r.args_.push_back(std::move(e));
  return r;
}

PropertyExpr PropertyExpr::conj(PropertyExpr a, PropertyExpr b) {
  PropertyExpr r;
  r.op_ = Op::kAnd;
  r.args_ = {std::move(a), std::move(b)};
  return r;
}

PropertyExpr PropertyExpr::disj(PropertyExpr a, PropertyExpr b) {
  PropertyExpr r;
  r.op_ = Op::kOr;
  r.args_ = {std::move(a), std::move(b)};
  return r;
}

PropertyExpr PropertyExpr::implies(PropertyExpr a, PropertyExpr b) {
  PropertyExpr r;
  r.op_ = Op::kImplies;
  r.args_ = {std::move(a), std::move(b)};
  return r;
}

bool PropertyExpr::eval(std::span<const bool> values) const {
  switch (op_) {
    case Op::kIdent: return values[static_cast<std::size_t>(ident_)];
    case Op::kNot: return !args_[0].eval(values);
    case Op::kAnd: return args_[0].eval(values) && args_[1].eval(values);
    case Op::kOr: return args_[0].eval(values) || args_[1].eval(values);
    case Op::kImplies: return !args_[0].eval(values) || args_[1].eval(values);
  }
  return false;
}

void PropertyExpr::collect_idents(std::vector<int>& out) const {
  if (op_ == Op::kIdent) out.push_back(ident_);
  for (const auto& a : args_) a.collect_idents(out);
}

namespace {

class ExprParser {
 public:
  ExprParser(std::string_view text, Vocabulary vocab) : text_(text), vocab_(vocab) {}

  PropertyExpr parse() {
    PropertyExpr e = implication();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return e;
  }

 private:
  PropertyExpr implication() {
    PropertyExpr lhs = disjunction();
    if (accept("->")) return PropertyExpr::implies(std::move(lhs), implication());
    return lhs;
  }

  PropertyExpr disjunction() {
    PropertyExpr e = conjunction();
    while (accept("|")) e = PropertyExpr::disj(std::move(e), conjunction());
    return e;
  }

  PropertyExpr conjunction() {
    PropertyExpr e = unary();
    while (accept("&")) e = PropertyExpr::conj(std::move(e), unary());
    return e;
  }

  PropertyExpr unary() {
    if (accept("!")) return PropertyExpr::negate(unary());
    if (accept("(")) {
      PropertyExpr e = implication();
      if (!accept(")")) fail("expected ')'");
      return e;
    }
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) ++pos_;
    if (start == pos_) fail(pos_ < text_.size() ? "unexpected '" + std::string(1, text_[pos_]) + "'" : "unexpected end of expression");
    const std::string_view name = text_.substr(start, pos_ - start);
    for (std::size_t i = 0; i < vocab_.size(); ++i)
      if (vocab_[i] == name) return PropertyExpr::ident(static_cast<int>(i));
    throw ParseError(ErrorCode::kExprUnknownIdent, 0, "unknown identifier '" + std::string(name) + "'");
  }

  bool accept(std::string_view tok) {
    skip_space();
    if (text_.substr(pos_, tok.size()) != tok) return false;
    pos_ += tok.size();
    return true;
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(ErrorCode::kExprSyntax, 0, msg + " at column " + std::to_string(pos_ + 1));
  }

  std::string_view text_;
  Vocabulary vocab_;
  std::size_t pos_ = 0;
};

int precedence(PropertyExpr::Op op) {
  switch (op) {
    case PropertyExpr::Op::kImplies: return 1;
    case PropertyExpr::Op::kOr: return 2;
    case PropertyExpr::Op::kAnd: return 3;
    case PropertyExpr::Op::kNot: return 4;
    case PropertyExpr::Op::kIdent: return 5;
  }
  return 0;
}

void render(const PropertyExpr& e, Vocabulary vocab, int min_prec, std::string& out) {
  const int p = precedence(e.op());
  const bool paren = p < min_prec;
  if (paren) out += '(';
  switch (e.op()) {
    case PropertyExpr::Op::kIdent: out += vocab[static_cast<std::size_t>(e.ident_index())]; break;
    case PropertyExpr::Op::kNot:
      out += '!';
      render(e.args()[0], vocab, 4, out);
      break;
    case PropertyExpr::Op::kAnd:
      render(e.args()[0], vocab, 3, out);
      out += " & ";
      render(e.args()[1], vocab, 4, out);
      break;
    case PropertyExpr::Op::kOr:
      render(e.args()[0], vocab, 2, out);
      out += " | ";
      render(e.args()[1], vocab, 3, out);
      break;
    case PropertyExpr::Op::kImplies:
      render(e.args()[0], vocab, 2, out);
      out += " -> ";
      render(e.args()[1], vocab, 1, out);
      break;
  }
  if (paren) out += ')';
}

}  // namespace

PropertyExpr parse_property_expr(std::string_view text, Vocabulary vocab) { return ExprParser(text, vocab).parse(); }

std::string to_string(const PropertyExpr& e, Vocabulary vocab) {
  std::string out;
  render(e, vocab, 0, out);
  return out;
}

bool eval_expr(const PropertyExpr& e, const PropertyReport& report) {
  const auto values = report.booleans();
  return e.eval(values);
}

}  // namespace tms
