#pragma once

#include <map>
#include <vector>

#include "holo/rational.hpp"

namespace holo::detail {

/// Prime factorization of |n|, n != 0. Trial division for small primes, then
/// Pollard-Brent rho on the cofactor.
std::map<Integer, unsigned> factor(const Integer& n);

/// All positive divisors of |n|, ascending.
std::vector<Integer> divisors(const Integer& n);

bool is_probable_prime(const Integer& n);

}  // namespace holo::detail
