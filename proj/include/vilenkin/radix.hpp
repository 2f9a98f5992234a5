#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <vector>

namespace vilenkin {

/// Mixed-radix number system: generating sequence m and cumulative
/// moduli M_0 = 1, M_{k+1} = m_k * M_k. Immutable after construction.
class RadixSystem {
public:
    static constexpr int kMaxRadix = 16;
    static constexpr int kMaxDepth = 24;

    explicit RadixSystem(std::vector<int> radices);

    static std::shared_ptr<const RadixSystem> constant(int radix, int depth);
    static std::shared_ptr<const RadixSystem> of(std::vector<int> radices);

    int depth() const noexcept { return static_cast<int>(m_.size()); }
    int radix(int j) const { return m_.at(static_cast<std::size_t>(j)); }
    const std::vector<int>& radices() const noexcept { return m_; }

    /// M_k for 0 <= k <= depth.
    std::int64_t modulus(int k) const { return M_.at(static_cast<std::size_t>(k)); }
    /// M_N, the number of finest cells (and representable frequencies).
    std::int64_t size() const noexcept { return M_.back(); }

    bool dyadic() const noexcept { return dyadic_; }

private:
    std::vector<int> m_;
    std::vector<std::int64_t> M_;  // length depth + 1
    bool dyadic_ = false;
};

using RadixRef = std::shared_ptr<const RadixSystem>;

/// Digits of n in the generalized number system, n = sum digits[j] * M_j.
struct DigitExpansion {
    std::int64_t value = 0;
    std::vector<int> digits;
    int order = 0;  // max nonzero digit index; 0 for n = 0
};

/// Element of the truncated group: coordinate j lives in Z_{m_j}.
struct GroupPoint {
    std::vector<int> coords;
};

DigitExpansion expand(const RadixSystem& rs, std::int64_t n);
std::int64_t compose(const RadixSystem& rs, const std::vector<int>& digits);

/// Bijection between depth-d cells and {0,...,M_d-1}; x_0 is the least
/// significant digit of the cell index.
std::int64_t cell_index(const RadixSystem& rs, const GroupPoint& x, int d);
GroupPoint point_of_cell(const RadixSystem& rs, std::int64_t c, int d);

GroupPoint group_add(const RadixSystem& rs, const GroupPoint& x, const GroupPoint& y);
GroupPoint basis_element(const RadixSystem& rs, int n);

}  // namespace vilenkin
