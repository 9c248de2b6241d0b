#ifndef SUBALG_ORDER_HPP
#define SUBALG_ORDER_HPP

#include <string>
#include <vector>

#include "subalg/monomial.hpp"

namespace subalg {

enum class OrderKind { Lex, DegLex, DegRevLex };

std::string order_kind_name(OrderKind k);

/// One comparison block: an order kind applied to a variable subset,
/// listed in precedence order (most significant first).
struct OrderBlock {
  OrderKind kind;
  std::vector<int> vars;
};

/// Total multiplicative order on exponent vectors with 1 minimal.
/// Composite (block) orders compare block by block; elimination orders
/// are blocks whose leading block dominates.
class TermOrder {
 public:
  TermOrder() = default;

  static TermOrder simple(OrderKind kind, int arity);
  static TermOrder simple(OrderKind kind, std::vector<int> precedence);
  static TermOrder composite(std::vector<OrderBlock> blocks);

  const std::vector<OrderBlock>& blocks() const { return blocks_; }
  int arity() const { return arity_; }

  /// -1, 0 or 1; throws on arity mismatch with the order's variable span.
  int compare(const Monomial& a, const Monomial& b) const;
  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }
  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

 private:
  std::vector<OrderBlock> blocks_;
  int arity_ = 0;
};

}  // namespace subalg

#endif
