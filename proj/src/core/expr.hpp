#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>

#include "core/errors.hpp"

namespace onecount {

enum class Basis : uint8_t { plus_times = 0, plus_times_minus = 1 };

enum class ExprKind : uint8_t { one, add, sub, mul };

class Expr;
using ExprPtr = std::shared_ptr<const Expr>;

/// Immutable expression tree over 1, +, * and -. Every well-formed value is
/// strictly positive; evaluation rejects non-positive subtractions and
/// 64-bit overflow instead of wrapping.
class Expr {
 public:
  static ExprPtr one();
  static ExprPtr add(ExprPtr lhs, ExprPtr rhs);
  static ExprPtr sub(ExprPtr lhs, ExprPtr rhs);
  static ExprPtr mul(ExprPtr lhs, ExprPtr rhs);
  /// Right-nested sum of `count` ones, e.g. ones(3) = (1+(1+1)).
  static ExprPtr ones(uint64_t count);

  ExprKind kind() const { return kind_; }
  const ExprPtr& lhs() const { return lhs_; }
  const ExprPtr& rhs() const { return rhs_; }

  uint64_t evaluate() const;
  uint64_t count_ones() const;
  /// True iff no node is forbidden by the basis and every subterm evaluates
  /// to a positive 64-bit integer.
  bool valid(Basis basis) const;
  /// Fully parenthesized infix text over the characters `1 + * - ( )`.
  std::string render() const;

  /// Inverse of render: expr := "1" | "(" expr op expr ")".
  static ExprPtr parse(std::string_view text);

 private:
  Expr(ExprKind kind, ExprPtr lhs, ExprPtr rhs)
      : kind_(kind), lhs_(std::move(lhs)), rhs_(std::move(rhs)) {}

  ExprKind kind_;
  ExprPtr lhs_;
  ExprPtr rhs_;
};

}  // namespace onecount
