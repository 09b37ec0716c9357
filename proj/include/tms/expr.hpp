#ifndef TMS_EXPR_HPP
#define TMS_EXPR_HPP

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tms/report.hpp"

namespace tms {

/// Identifier table an expression is resolved against.
using Vocabulary = std::span<const std::string_view>;

/// Boolean formula over property identifiers.
///
///     expr := expr "->" expr | expr "|" expr | expr "&" expr | "!" expr | "(" expr ")" | IDENT
///
/// Precedence ! > & > | > ->; "|" and "&" associate left, "->" right.
class PropertyExpr {
 public:
  enum class Op { kIdent, kNot, kAnd, kOr, kImplies };

  static PropertyExpr ident(int index);
  static PropertyExpr negate(PropertyExpr e);
  static PropertyExpr conj(PropertyExpr a, PropertyExpr b);
  static PropertyExpr disj(PropertyExpr a, PropertyExpr b);
  static PropertyExpr implies(PropertyExpr a, PropertyExpr b);

  Op op() const { return op_; }
  int ident_index() const { return ident_; }
  const std::vector<PropertyExpr>& args() const { return args_; }

  /// Evaluates with `values[i]` as the value of identifier i.
  bool eval(std::span<const bool> values) const;
  /// Adds every referenced identifier index to `out`.
  void collect_idents(std::vector<int>& out) const;

  friend bool operator==(const PropertyExpr&, const PropertyExpr&) = default;

 private:
  Op op_ = Op::kIdent;
  int ident_ = -1;
  std::vector<PropertyExpr> args_;
};

/// Throws ParseError with E_EXPR_SYNTAX or E_EXPR_UNKNOWN_IDENT (the message
/// names the offending identifier).
PropertyExpr parse_property_expr(std::string_view text, Vocabulary vocab = kPropertyNames);

/// Minimal-parenthesis rendering; parse_property_expr(to_string(e)) == e.
std::string to_string(const PropertyExpr& e, Vocabulary vocab = kPropertyNames);

/// Standard Boolean semantics over a report; IMPLIES(p, q) = !p | q.
bool eval_expr(const PropertyExpr& e, const PropertyReport& report);

}  // namespace tms

#endif  // TMS_EXPR_HPP
