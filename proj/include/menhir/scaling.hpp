#pragma once

#include "menhir/algebra.hpp"
#include "menhir/loop.hpp"

namespace menhir {

/// Inputs with |a| above this radius are rejected by the artanh-based maps.
inline constexpr double lightlike_radius_limit = 1.0 - 1e-12;

/// artanh(|a|) a/|a|: the additive coordinate on each ray through 0.
struct Rapidity {
  AlgebraElement vec;
};

/// 2 [.] a = a [+] a = 2a / (1 + |a|^2).
DiskPoint box_double(const DiskPoint& a) noexcept;

/// (1/2) [.] a = a / (1 + sqrt(1 - |a|^2)), the inverse of box_double.
DiskPoint box_half(const DiskPoint& a) noexcept;

/// k-fold menhir power a [+] a [+] ... [+] a, in closed form
/// tanh(k artanh|a|) a/|a|. k == 1 and k == 2 use the exact algebraic forms.
/// Throws std::invalid_argument for k < 1 and NearLightlike when |a| or the
/// result is too close to the unit sphere.
DiskPoint box_scale(int k, const DiskPoint& a);

/// Inverse of box_scale: tanh(artanh|a| / k) a/|a|.
DiskPoint box_unscale(int k, const DiskPoint& a);

Rapidity to_rapidity(const DiskPoint& a);
DiskPoint from_rapidity(const Rapidity& rho);

}  // namespace menhir
