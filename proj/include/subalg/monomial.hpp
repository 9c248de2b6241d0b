#ifndef SUBALG_MONOMIAL_HPP
#define SUBALG_MONOMIAL_HPP

#include <compare>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace subalg {

using Exponent = std::uint32_t;

/// Exponent vector of fixed arity. Comparisons here are structural
/// (container ordering); term orders live in TermOrder.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<Exponent> e) : e_(std::move(e)) {}

  static Monomial unit(int arity) { return Monomial(std::vector<Exponent>(arity, 0)); }
  static Monomial var(int arity, int index, Exponent deg = 1) {
    std::vector<Exponent> e(arity, 0);
    e.at(index) = deg;
    return Monomial(std::move(e));
  }

  int arity() const { return static_cast<int>(e_.size()); }
  Exponent operator[](int i) const { return e_[i]; }
  const std::vector<Exponent>& exps() const { return e_; }

  unsigned long total_degree() const {
    return std::accumulate(e_.begin(), e_.end(), 0ul);
  }
  bool is_unit() const {
    for (Exponent x : e_)
      if (x) return false;
    return true;
  }

  Monomial operator*(const Monomial& o) const {
    check_arity(o);
    std::vector<Exponent> r(e_.size());
    for (size_t i = 0; i < e_.size(); ++i) r[i] = e_[i] + o.e_[i];
    return Monomial(std::move(r));
  }

  /// Whether this divides m componentwise.
  bool divides(const Monomial& m) const {
    check_arity(m);
    for (size_t i = 0; i < e_.size(); ++i)
      if (e_[i] > m.e_[i]) return false;
    return true;
  }

  /// Exact quotient; precondition o.divides(*this).
  Monomial operator/(const Monomial& o) const {
    check_arity(o);
    std::vector<Exponent> r(e_.size());
    for (size_t i = 0; i < e_.size(); ++i) {
      if (o.e_[i] > e_[i]) throw std::invalid_argument("monomial quotient is not exact");
      r[i] = e_[i] - o.e_[i];
    }
    return Monomial(std::move(r));
  }

  friend Monomial lcm(const Monomial& a, const Monomial& b) {
    a.check_arity(b);
    std::vector<Exponent> r(a.e_.size());
    for (size_t i = 0; i < a.e_.size(); ++i) r[i] = a.e_[i] > b.e_[i] ? a.e_[i] : b.e_[i];
    return Monomial(std::move(r));
  }
  friend Monomial gcd(const Monomial& a, const Monomial& b) {
    a.check_arity(b);
    std::vector<Exponent> r(a.e_.size());
    for (size_t i = 0; i < a.e_.size(); ++i) r[i] = a.e_[i] < b.e_[i] ? a.e_[i] : b.e_[i];
    return Monomial(std::move(r));
  }

  bool operator==(const Monomial&) const = default;
  auto operator<=>(const Monomial&) const = default;

 private:
  void check_arity(const Monomial& o) const {
    if (e_.size() != o.e_.size()) throw std::invalid_argument("monomial arity mismatch");
  }
  std::vector<Exponent> e_;
};

}  // namespace subalg

#endif
