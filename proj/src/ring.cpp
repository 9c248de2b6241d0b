#include "subalg/ring.hpp"

#include <stdexcept>

namespace subalg {

std::string domain_name(Domain d) {
  return d == Domain::Integers ? "int" : "rat";
}

Int to_int(const Coeff& c) {
  if (!is_integral(c)) throw std::invalid_argument("coefficient is not an integer: " + coeff_to_string(c));
  return c.get_num();
}

Int gcd_ext(const Int& a, const Int& b, Int& s, Int& t) {
  Int g;
  mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

Int int_gcd(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

Int int_lcm(const Int& a, const Int& b) {
  Int l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

bool coeff_divides(Domain d, const Coeff& divisor, const Coeff& value) {
  if (value == 0) return true;
  if (divisor == 0) return false;
  if (d == Domain::Rationals) return true;
  Coeff q = value / divisor;
  return is_integral(q);
}

Coeff coeff_div(const Coeff& value, const Coeff& divisor) {
  if (divisor == 0) throw std::invalid_argument("division by zero coefficient");
  return value / divisor;
}

std::optional<std::vector<Coeff>> ideal_membership_witness(Domain d, const Coeff& value,
                                                           const std::vector<Coeff>& gens) {
  const size_t n = gens.size();
  std::vector<Coeff> w(n, Coeff(0));
  if (d == Domain::Rationals) {
    if (value == 0) return w;
    for (size_t i = 0; i < n; ++i) {
      if (gens[i] != 0) {
        w[i] = value / gens[i];
        return w;
      }
    }
    return std::nullopt;
  }
  // Integers. A single dividing generator gives the smallest witness; fall
  // back to a left fold of the extended Euclidean algorithm.
  Int c = to_int(value);
  if (c == 0) return w;
  for (size_t i = 0; i < n; ++i) {
    Int a = to_int(gens[i]);
    if (a != 0 && c % a == 0) {
      w[i] = Coeff(c / a);
      return w;
    }
  }
  Int g = 0;
  std::vector<Int> u(n, 0);
  for (size_t i = 0; i < n; ++i) {
    Int a = to_int(gens[i]);
    if (a == 0) continue;
    Int s, t;
    Int g2 = gcd_ext(g, a, s, t);
    for (size_t j = 0; j < i; ++j) u[j] *= s;
    u[i] = t;
    g = g2;
  }
  if (g == 0) {
    if (c == 0) return w;
    return std::nullopt;
  }
  if (c % g != 0) return std::nullopt;
  Int scale = c / g;
  for (size_t i = 0; i < n; ++i) w[i] = Coeff(u[i] * scale);
  return w;
}

std::vector<std::vector<Coeff>> constant_syzygy_generators(Domain d,
                                                           const std::vector<Coeff>& gens) {
  const size_t n = gens.size();
  std::vector<std::vector<Coeff>> out;
  auto unit_vec = [n](size_t i) {
    std::vector<Coeff> v(n, Coeff(0));
    v[i] = 1;
    return v;
  };
  if (d == Domain::Rationals) {
    size_t pivot = n;
    for (size_t i = 0; i < n; ++i) {
      if (gens[i] != 0) {
        pivot = i;
        break;
      }
    }
    for (size_t i = 0; i < n; ++i) {
      if (i == pivot) continue;
      if (gens[i] == 0) {
        out.push_back(unit_vec(i));
      } else {
        std::vector<Coeff> v(n, Coeff(0));
        v[i] = 1;
        v[pivot] = -(gens[i] / gens[pivot]);
        out.push_back(v);
      }
    }
    return out;
  }
  // Integers: zero entries give unit syzygies; the rest come from the
  // gcd fold, one generator per step.
  Int g = 0;
  std::vector<Int> u(n, 0);
  bool have_prev = false;
  for (size_t i = 0; i < n; ++i) {
    Int a = to_int(gens[i]);
    if (a == 0) {
      out.push_back(unit_vec(i));
      continue;
    }
    if (!have_prev) {
      g = a < 0 ? Int(-a) : a;
      u[i] = a < 0 ? -1 : 1;
      have_prev = true;
      continue;
    }
    Int s, t;
    Int g2 = gcd_ext(g, a, s, t);
    std::vector<Coeff> v(n, Coeff(0));
    Int fa = a / g2;
    Int fg = g / g2;
    for (size_t j = 0; j < i; ++j) v[j] = Coeff(fa * u[j]);
    v[i] = Coeff(-fg);
    out.push_back(v);
    for (size_t j = 0; j < i; ++j) u[j] *= s;
    u[i] = t;
    g = g2;
  }
  return out;
}

std::string coeff_to_string(const Coeff& c) {
  return c.get_str();
}

}  // namespace subalg
