#ifndef SUBALG_RING_HPP
#define SUBALG_RING_HPP

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

namespace subalg {

using Int = mpz_class;

/// Exact coefficient value. mpq_class keeps gcd(|num|, den) = 1 and den >= 1,
/// so equality is structural. Over Domain::Integers the denominator is always 1.
using Coeff = mpq_class;

enum class Domain { Integers, Rationals };

std::string domain_name(Domain d);

inline bool is_integral(const Coeff& c) { return c.get_den() == 1; }

/// Numerator of an integral coefficient; throws std::invalid_argument otherwise.
Int to_int(const Coeff& c);

/// gcd(a, b) >= 0 together with s, t such that s*a + t*b = gcd.
Int gcd_ext(const Int& a, const Int& b, Int& s, Int& t);

Int int_gcd(const Int& a, const Int& b);
Int int_lcm(const Int& a, const Int& b);

/// Whether `value` is an R-multiple of `divisor` (exact quotient in the domain).
bool coeff_divides(Domain d, const Coeff& divisor, const Coeff& value);

/// Exact quotient; precondition coeff_divides.
Coeff coeff_div(const Coeff& value, const Coeff& divisor);

/// Witness (r_1..r_N) with value = sum r_i * gens_i, when one exists.
/// Over the integers a witness exists iff gcd(gens) divides value; over the
/// rationals iff some generator is nonzero or value is 0.
std::optional<std::vector<Coeff>> ideal_membership_witness(Domain d, const Coeff& value,
                                                           const std::vector<Coeff>& gens);

/// Generators of { r in R^N : sum r_i * gens_i = 0 }.
std::vector<std::vector<Coeff>> constant_syzygy_generators(Domain d,
                                                           const std::vector<Coeff>& gens);

std::string coeff_to_string(const Coeff& c);

}  // namespace subalg

#endif
