#pragma once

#include <cstdint>
#include <vector>

#include "klac/matrix.hpp"

namespace klac {

// Multi-index bases of the exterior algebra over a rank-r fiber.
// Degree-k basis elements are strictly increasing index tuples in 1..r,
// enumerated lexicographically; internally each tuple is a bitmask with
// bit (i-1) set for index i.
class ExteriorBasis {
  public:
    explicit ExteriorBasis(int r);

    int fiber_rank() const { return r_; }
    int dim(int k) const {
        return (k < 0 || k > r_) ? 0 : int(masks_[k].size());
    }

    const std::vector<std::uint32_t>& masks(int k) const { return masks_[k]; }
    std::uint32_t mask(int k, int pos) const { return masks_[k][pos]; }
    int position(int k, std::uint32_t m) const;  // -1 if absent

    std::uint32_t full_mask() const { return (r_ >= 32) ? ~0u : ((1u << r_) - 1u); }
    std::uint32_t complement(std::uint32_t m) const { return full_mask() & ~m; }

    std::vector<int> indices(std::uint32_t m) const;  // 1-based, increasing

    // Koszul sign of e^a ^ e^b for disjoint masks (+1/-1), 0 on overlap.
    static int wedge_sign(std::uint32_t a, std::uint32_t b);

    // Sign with e^I ^ e^{complement(I)} = sign * e^{1..r}.
    int top_sign(std::uint32_t m) const { return wedge_sign(m, complement(m)); }

  private:
    int r_;
    std::vector<std::vector<std::uint32_t>> masks_;     // per degree
    std::vector<std::vector<int>> pos_;                 // mask -> position per degree
};

}  // namespace klac
