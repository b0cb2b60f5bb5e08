#pragma once

#include "menhir/loop.hpp"
#include "menhir/scaling.hpp"

namespace menhir {

// The k-deformations M_k of the menhir loop: a [+]_k b = k[.]( a/k [+] b/k ).
// k = 1 is the menhir loop itself, k = 2 is relativistic velocity composition.

/// Halving map; carries the relativistic loop onto the menhir loop:
/// mu(a (+) b) = mu(a) [+] mu(b).
inline DiskPoint mu(const DiskPoint& a) noexcept { return box_half(a); }
inline DiskPoint mu_inv(const DiskPoint& a) noexcept { return box_double(a); }

/// Relativistic composition of velocities, mu_inv(mu(a) [+] mu(b)).
/// Agrees with Moller's vector formula under embed/project.
DiskPoint relativistic_add(const DiskPoint& a, const DiskPoint& b);

/// a [+]_k b for integer k >= 1.
DiskPoint k_add(int k, const DiskPoint& a, const DiskPoint& b);

/// Rapidity-vector sum from_rapidity(rho(a) + rho(b)).
///
/// Conjectured k -> infinity limit of k_add: the halved arguments a/k, b/k
/// shrink like rho/k, where the menhir product reduces to vector addition
/// up to O(1/k^2). Validated numerically only; the limit is not proved.
DiskPoint limit_add(const DiskPoint& a, const DiskPoint& b);

}  // namespace menhir
