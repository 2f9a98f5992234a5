#include "vilenkin/radix.hpp"

#include <algorithm>

namespace vilenkin {

RadixSystem::RadixSystem(std::vector<int> radices) : m_(std::move(radices)) {
    if (m_.empty()) throw std::invalid_argument("RadixSystem: empty radix sequence");
    if (m_.size() > kMaxDepth) throw std::invalid_argument("RadixSystem: depth exceeds 24");
    M_.resize(m_.size() + 1);
    M_[0] = 1;
    for (std::size_t j = 0; j < m_.size(); ++j) {
        if (m_[j] < 2 || m_[j] > kMaxRadix)
            throw std::invalid_argument("RadixSystem: radix out of [2,16]");
        M_[j + 1] = M_[j] * m_[j];
    }
    if (M_.back() > (std::int64_t{1} << 24))
        throw std::invalid_argument("RadixSystem: M_N exceeds 2^24");
    dyadic_ = std::all_of(m_.begin(), m_.end(), [](int q) { return q == 2; });
}

RadixRef RadixSystem::constant(int radix, int depth) {
    return std::make_shared<const RadixSystem>(
        std::vector<int>(static_cast<std::size_t>(depth), radix));
}

RadixRef RadixSystem::of(std::vector<int> radices) {
    return std::make_shared<const RadixSystem>(std::move(radices));
}

DigitExpansion expand(const RadixSystem& rs, std::int64_t n) {
    if (n < 0 || n >= rs.size())
        throw std::out_of_range("expand: n outside [0, M_N)");
    DigitExpansion e;
    e.value = n;
    e.digits.assign(static_cast<std::size_t>(rs.depth()), 0);
    e.order = 0;
    std::int64_t rest = n;
    for (int j = 0; j < rs.depth(); ++j) {
        e.digits[static_cast<std::size_t>(j)] = static_cast<int>(rest % rs.radix(j));
        rest /= rs.radix(j);
        if (e.digits[static_cast<std::size_t>(j)] != 0) e.order = j;
    }
    return e;
}

std::int64_t compose(const RadixSystem& rs, const std::vector<int>& digits) {
    if (digits.size() > static_cast<std::size_t>(rs.depth()))
        throw std::invalid_argument("compose: more digits than depth");
    std::int64_t n = 0;
    for (std::size_t j = 0; j < digits.size(); ++j) {
        int dj = digits[j];
        if (dj < 0 || dj >= rs.radix(static_cast<int>(j)))
            throw std::invalid_argument("compose: digit out of range");
        n += dj * rs.modulus(static_cast<int>(j));
    }
    return n;
}

std::int64_t cell_index(const RadixSystem& rs, const GroupPoint& x, int d) {
    if (d > rs.depth()) throw std::out_of_range("cell_index: depth exceeds truncation");
    if (x.coords.size() < static_cast<std::size_t>(d))
        throw std::invalid_argument("cell_index: point has fewer coordinates than depth");
    std::int64_t c = 0;
    for (int j = 0; j < d; ++j) {
        int xj = x.coords[static_cast<std::size_t>(j)];
        if (xj < 0 || xj >= rs.radix(j))
            throw std::invalid_argument("cell_index: coordinate out of range");
        c += xj * rs.modulus(j);
    }
    return c;
}

GroupPoint point_of_cell(const RadixSystem& rs, std::int64_t c, int d) {
    if (d > rs.depth()) throw std::out_of_range("point_of_cell: depth exceeds truncation");
    if (c < 0 || c >= rs.modulus(d))
        throw std::out_of_range("point_of_cell: cell index outside [0, M_d)");
    GroupPoint x;
    x.coords.assign(static_cast<std::size_t>(rs.depth()), 0);
    for (int j = 0; j < d; ++j) {
        x.coords[static_cast<std::size_t>(j)] = static_cast<int>(c % rs.radix(j));
        c /= rs.radix(j);
    }
    return x;
}

GroupPoint group_add(const RadixSystem& rs, const GroupPoint& x, const GroupPoint& y) {
    if (x.coords.size() != static_cast<std::size_t>(rs.depth()) ||
        y.coords.size() != static_cast<std::size_t>(rs.depth()))
        throw std::invalid_argument("group_add: coordinate count mismatch");
    GroupPoint z;
    z.coords.resize(x.coords.size());
    for (int j = 0; j < rs.depth(); ++j) {
        auto sj = static_cast<std::size_t>(j);
        int xj = x.coords[sj], yj = y.coords[sj];
        if (xj < 0 || xj >= rs.radix(j) || yj < 0 || yj >= rs.radix(j))
            throw std::invalid_argument("group_add: coordinate out of range");
        z.coords[sj] = (xj + yj) % rs.radix(j);
    }
    return z;
}

GroupPoint basis_element(const RadixSystem& rs, int n) {
    if (n < 0 || n >= rs.depth()) throw std::out_of_range("basis_element: index exceeds depth");
    GroupPoint e;
    e.coords.assign(static_cast<std::size_t>(rs.depth()), 0);
    e.coords[static_cast<std::size_t>(n)] = 1;
    return e;
}

}  // namespace vilenkin
