#include "menhir/deformation.hpp"

namespace menhir {

DiskPoint relativistic_add(const DiskPoint& a, const DiskPoint& b) { return mu_inv(boxplus(mu(a), mu(b))); }

DiskPoint k_add(int k, const DiskPoint& a, const DiskPoint& b) {
  if (k == 1) {
    // box_scale/unscale(1) are identities; skip them so M_1 is bitwise the menhir loop.
    return boxplus(a, b);
  }
  return box_scale(k, boxplus(box_unscale(k, a), box_unscale(k, b)));
}

DiskPoint limit_add(const DiskPoint& a, const DiskPoint& b) {
  const auto ra = to_rapidity(a);
  const auto rb = to_rapidity(b);
  return from_rapidity({ra.vec + rb.vec});
}

}  // namespace menhir
