#include "klac/multi_index.hpp"

#include <bit>

#include "klac/errors.hpp"

namespace klac {

ExteriorBasis::ExteriorBasis(int r) : r_(r) {
    if (r < 0 || r > 30) throw ModelError("fiber rank out of supported range");
    masks_.resize(r + 1);
    pos_.assign(r + 1, std::vector<int>(size_t(1) << r, -1));
    // lexicographic enumeration of k-combinations of {1..r}
    for (int k = 0; k <= r; ++k) {
        if (k == 0) {
            masks_[0].push_back(0u);
            pos_[0][0] = 0;
            continue;
        }
        std::vector<int> c(k);
        for (int i = 0; i < k; ++i) c[i] = i + 1;
        while (true) {
            std::uint32_t m = 0;
            for (int x : c) m |= (1u << (x - 1));
            pos_[k][m] = int(masks_[k].size());
            masks_[k].push_back(m);
            int i = k - 1;
            while (i >= 0 && c[i] == r - k + i + 1) --i;
            if (i < 0) break;
            ++c[i];
            for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
        }
    }
}

int ExteriorBasis::position(int k, std::uint32_t m) const {
    if (k < 0 || k > r_) return -1;
    return pos_[k][m];
}

std::vector<int> ExteriorBasis::indices(std::uint32_t m) const {
    std::vector<int> out;
    for (int i = 0; i < r_; ++i)
        if (m & (1u << i)) out.push_back(i + 1);
    return out;
}

int ExteriorBasis::wedge_sign(std::uint32_t a, std::uint32_t b) {
    if (a & b) return 0;
    // inversions: pairs (x in a, y in b) with x > y
    int inv = 0;
    std::uint32_t bb = b;
    while (bb) {
        const int y = std::countr_zero(bb);
        bb &= bb - 1;
        inv += std::popcount(a >> (y + 1));
    }
    return (inv % 2 == 0) ? 1 : -1;
}

}  // namespace klac
