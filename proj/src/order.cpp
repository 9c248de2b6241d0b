#include "subalg/order.hpp"

#include <numeric>
#include <stdexcept>

namespace subalg {

std::string order_kind_name(OrderKind k) {
  switch (k) {
    case OrderKind::Lex: return "lex";
    case OrderKind::DegLex: return "deglex";
    case OrderKind::DegRevLex: return "degrevlex";
  }
  return "?";
}

TermOrder TermOrder::simple(OrderKind kind, int arity) {
  std::vector<int> prec(arity);
  std::iota(prec.begin(), prec.end(), 0);
  return simple(kind, std::move(prec));
}

TermOrder TermOrder::simple(OrderKind kind, std::vector<int> precedence) {
  return composite({OrderBlock{kind, std::move(precedence)}});
}

TermOrder TermOrder::composite(std::vector<OrderBlock> blocks) {
  TermOrder o;
  o.blocks_ = std::move(blocks);
  int maxv = -1;
  for (const auto& b : o.blocks_)
    for (int v : b.vars)
      if (v > maxv) maxv = v;
  o.arity_ = maxv + 1;
  return o;
}

namespace {

int cmp_block(const OrderBlock& b, const Monomial& x, const Monomial& y) {
  switch (b.kind) {
    case OrderKind::Lex:
      for (int v : b.vars) {
        if (x[v] != y[v]) return x[v] > y[v] ? 1 : -1;
      }
      return 0;
    case OrderKind::DegLex: {
      unsigned long dx = 0, dy = 0;
      for (int v : b.vars) {
        dx += x[v];
        dy += y[v];
      }
      if (dx != dy) return dx > dy ? 1 : -1;
      for (int v : b.vars) {
        if (x[v] != y[v]) return x[v] > y[v] ? 1 : -1;
      }
      return 0;
    }
    case OrderKind::DegRevLex: {
      unsigned long dx = 0, dy = 0;
      for (int v : b.vars) {
        dx += x[v];
        dy += y[v];
      }
      if (dx != dy) return dx > dy ? 1 : -1;
      for (auto it = b.vars.rbegin(); it != b.vars.rend(); ++it) {
        if (x[*it] != y[*it]) return x[*it] < y[*it] ? 1 : -1;
      }
      return 0;
    }
  }
  return 0;
}

}  // namespace

int TermOrder::compare(const Monomial& a, const Monomial& b) const {
  if (a.arity() != b.arity() || a.arity() < arity_)
    throw std::invalid_argument("term order arity mismatch");
  for (const auto& blk : blocks_) {
    int c = cmp_block(blk, a, b);
    if (c != 0) return c;
  }
  return 0;
}

}  // namespace subalg
