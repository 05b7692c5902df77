#include "core/expr.hpp"

namespace onecount {

namespace {

constexpr int kMaxParseDepth = 10000;

struct Parser {
  std::string_view text;
  size_t pos = 0;

  char peek() const { return pos < text.size() ? text[pos] : '\0'; }
  char take() { return pos < text.size() ? text[pos++] : '\0'; }

  ExprPtr parse_expr(int depth) {
    if (depth > kMaxParseDepth) fail(errc::parse_error, "expression nests too deeply");
    char c = take();
    if (c == '1') return Expr::one();
    if (c != '(') fail(errc::parse_error, "expected '1' or '(' at offset " + std::to_string(pos - 1));
    ExprPtr lhs = parse_expr(depth + 1);
    char op = take();
    if (op != '+' && op != '*' && op != '-')
      fail(errc::parse_error, "expected operator at offset " + std::to_string(pos - 1));
    ExprPtr rhs = parse_expr(depth + 1);
    if (take() != ')') fail(errc::parse_error, "expected ')' at offset " + std::to_string(pos - 1));
    if (op == '+') return Expr::add(std::move(lhs), std::move(rhs));
    if (op == '*') return Expr::mul(std::move(lhs), std::move(rhs));
    return Expr::sub(std::move(lhs), std::move(rhs));
  }
};

}  // namespace

ExprPtr Expr::one() {
  static const ExprPtr instance(new Expr(ExprKind::one, nullptr, nullptr));
  return instance;
}

ExprPtr Expr::add(ExprPtr lhs, ExprPtr rhs) {
  if (!lhs || !rhs) fail(errc::invalid_argument, "null operand");
  return ExprPtr(new Expr(ExprKind::add, std::move(lhs), std::move(rhs)));
}

ExprPtr Expr::sub(ExprPtr lhs, ExprPtr rhs) {
  if (!lhs || !rhs) fail(errc::invalid_argument, "null operand");
  return ExprPtr(new Expr(ExprKind::sub, std::move(lhs), std::move(rhs)));
}

ExprPtr Expr::mul(ExprPtr lhs, ExprPtr rhs) {
  if (!lhs || !rhs) fail(errc::invalid_argument, "null operand");
  return ExprPtr(new Expr(ExprKind::mul, std::move(lhs), std::move(rhs)));
}

ExprPtr Expr::ones(uint64_t count) {
  if (count == 0) fail(errc::invalid_argument, "ones(0) has no representation");
  ExprPtr e = one();
  for (uint64_t i = 1; i < count; ++i) e = add(one(), std::move(e));
  return e;
}

uint64_t Expr::evaluate() const {
  switch (kind_) {
    case ExprKind::one:
      return 1;
    case ExprKind::add: {
      uint64_t a = lhs_->evaluate(), b = rhs_->evaluate(), r;
      if (__builtin_add_overflow(a, b, &r)) fail(errc::overflow, "addition overflows 64 bits");
      return r;
    }
    case ExprKind::mul: {
      uint64_t a = lhs_->evaluate(), b = rhs_->evaluate(), r;
      if (__builtin_mul_overflow(a, b, &r)) fail(errc::overflow, "product overflows 64 bits");
      return r;
    }
    case ExprKind::sub: {
      uint64_t a = lhs_->evaluate(), b = rhs_->evaluate();
      if (a <= b) fail(errc::nonpositive_subterm, "subtraction yields a non-positive value");
      return a - b;
    }
  }
  fail(errc::internal, "corrupt expression node");
}

uint64_t Expr::count_ones() const {
  if (kind_ == ExprKind::one) return 1;
  return lhs_->count_ones() + rhs_->count_ones();
}

bool Expr::valid(Basis basis) const {
  if (kind_ == ExprKind::sub && basis == Basis::plus_times) return false;
  if (kind_ != ExprKind::one && (!lhs_->valid(basis) || !rhs_->valid(basis))) return false;
  try {
    evaluate();
  } catch (const Error&) {
    return false;
  }
  return true;
}

static void render_into(const Expr& e, std::string& out) {
  switch (e.kind()) {
    case ExprKind::one:
      out += '1';
      return;
    case ExprKind::add:
    case ExprKind::sub:
    case ExprKind::mul:
      out += '(';
      render_into(*e.lhs(), out);
      out += e.kind() == ExprKind::add ? '+' : e.kind() == ExprKind::mul ? '*' : '-';
      render_into(*e.rhs(), out);
      out += ')';
      return;
  }
}

std::string Expr::render() const {
  std::string out;
  render_into(*this, out);
  return out;
}

ExprPtr Expr::parse(std::string_view text) {
  Parser p{text};
  ExprPtr e = p.parse_expr(0);
  if (p.pos != text.size()) fail(errc::parse_error, "trailing input after expression");
  return e;
}

}  // namespace onecount
