#include "vilenkin/hardy.hpp"

#include <algorithm>
#include <cmath>

#include "vilenkin/operators.hpp"

namespace vilenkin {

std::vector<PartitionNode> dyadic_partition_tree(int m_n) {
    if (m_n < 2) throw std::invalid_argument("dyadic_partition_tree: radix below 2");
    std::vector<PartitionNode> tree;
    tree.push_back({IndexRange{0, m_n}, -1, -1});
    // Breadth-first split; first child takes floor(size/2) elements,
    // matching U_1 = {0,...,[m_n/2]-1}.
    for (std::size_t i = 0; i < tree.size(); ++i) {
        const IndexRange r = tree[i].range;
        if (r.size() < 2) continue;
        const int mid = r.lo + r.size() / 2;
        tree[i].left = static_cast<int>(tree.size());
        tree.push_back({IndexRange{r.lo, mid}, -1, -1});
        tree[i].right = static_cast<int>(tree.size());
        tree.push_back({IndexRange{mid, r.hi}, -1, -1});
    }
    return tree;
}

bool is_dyadic_range(int m_n, IndexRange r) {
    for (const auto& node : dyadic_partition_tree(m_n))
        if (node.range.lo == r.lo && node.range.hi == r.hi) return true;
    return false;
}

double Interval::measure() const {
    return static_cast<double>(u.size()) / static_cast<double>(rs->modulus(level + 1));
}

std::vector<bool> Interval::cell_mask(int depth) const {
    if (depth <= level) throw std::invalid_argument("Interval: mask depth must exceed level");
    const std::int64_t cells = rs->modulus(depth);
    const std::int64_t stride = rs->modulus(level);
    const std::int64_t base_idx = cell_index(*rs, base, level);
    std::vector<bool> mask(static_cast<std::size_t>(cells), false);
    for (std::int64_t c = 0; c < cells; ++c) {
        if (c % stride != base_idx) continue;
        const int digit = static_cast<int>((c / stride) % rs->radix(level));
        if (digit >= u.lo && digit < u.hi) mask[static_cast<std::size_t>(c)] = true;
    }
    return mask;
}

Interval full_cylinder(const RadixRef& rs, const GroupPoint& base, int n) {
    if (n >= rs->depth()) throw std::out_of_range("full_cylinder: level exceeds depth");
    return Interval{rs, base, n, IndexRange{0, rs->radix(n)}};
}

Atom Atom::unit_atom(RadixRef rs) {
    Atom a;
    a.unit = true;
    a.fn = CylinderFunction::constant(std::move(rs), 0, Complex{1.0, 0.0});
    return a;
}

Atom Atom::supported(CylinderFunction f, Interval i) {
    if (f.radix().get() != i.rs.get())
        throw std::invalid_argument("Atom: function and interval radix mismatch");
    Atom a;
    a.fn = std::move(f);
    a.support = std::move(i);
    return a;
}

CylinderFunction Atom::as_function(int depth) const {
    return refine(*fn, depth);
}

AtomCheck validate_atom(const Atom& a, double tol) {
    AtomCheck check;
    if (a.unit) return check;
    if (!a.fn || !a.support) {
        check.ok = false;
        check.violation = "support";
        return check;
    }
    const Interval& I = *a.support;
    if (!is_dyadic_range(I.rs->radix(I.level), I.u)) {
        check.ok = false;
        check.violation = "interval";
        return check;
    }
    const int depth = std::max(a.fn->depth(), I.level + 1);
    const CylinderFunction f = refine(*a.fn, depth);
    const std::vector<bool> mask = I.cell_mask(depth);

    double worst_outside = 0.0;
    std::int64_t worst_outside_at = -1;
    double sup = 0.0;
    std::int64_t sup_at = -1;
    Complex integral{0.0, 0.0};
    for (std::int64_t c = 0; c < f.cells(); ++c) {
        const double av = std::abs(f[c]);
        if (mask[static_cast<std::size_t>(c)]) {
            if (av > sup) { sup = av; sup_at = c; }
            integral += f[c];
        } else if (av > worst_outside) {
            worst_outside = av;
            worst_outside_at = c;
        }
    }
    integral /= static_cast<double>(f.cells());

    if (worst_outside > tol) {
        check.ok = false;
        check.violation = "support";
        check.residual = worst_outside;
        check.where = worst_outside_at;
        return check;
    }
    const double bound = 1.0 / I.measure();
    if (sup > bound * (1.0 + tol)) {
        check.ok = false;
        check.violation = "sup_bound";
        check.residual = sup - bound;
        check.where = sup_at;
        return check;
    }
    if (std::abs(integral) > tol) {
        check.ok = false;
        check.violation = "mean";
        check.residual = std::abs(integral);
        return check;
    }
    return check;
}

CylinderFunction AtomicDecomposition::assemble() const {
    CylinderFunction f = CylinderFunction::zero(rs, depth);
    for (const auto& [lambda, atom] : terms) f += lambda * atom.as_function(depth);
    return f;
}

double h1_upper_bound(const AtomicDecomposition& dec) {
    double sum = 0.0;
    for (const auto& [lambda, atom] : dec.terms) {
        const AtomCheck check = validate_atom(atom);
        if (!check.ok)
            throw std::invalid_argument("h1_upper_bound: invalid atom (" + check.violation + ")");
        sum += std::abs(lambda);
    }
    return sum;
}

double h1_proxy_norm(const CylinderFunction& f) {
    return lp_norm(maximal_partial(f), 1.0);
}

double h1_double_star_norm(const CylinderFunction& f) {
    const RadixSystem& rs = *f.radix();
    const int d = f.depth();
    for (int n = 0; n < d; ++n)
        if (rs.modulus(n + 1) > 4096)
            throw std::invalid_argument("h1_double_star_norm: grid too large for enumeration");

    const std::int64_t cells = f.cells();
    std::vector<double> fss(static_cast<std::size_t>(cells), 0.0);

    for (int n = 0; n < d; ++n) {
        const std::int64_t stride = rs.modulus(n);
        const std::int64_t fine = rs.modulus(n + 1);
        // depth-(n+1) cell averages
        std::vector<Complex> avg(static_cast<std::size_t>(fine), Complex{0.0, 0.0});
        for (std::int64_t c = 0; c < cells; ++c)
            avg[static_cast<std::size_t>(c % fine)] += f[c];
        const double scale = static_cast<double>(fine) / static_cast<double>(cells);
        for (auto& z : avg) z *= scale;

        const auto tree = dyadic_partition_tree(rs.radix(n));
        for (std::int64_t b = 0; b < stride; ++b) {
            for (const auto& node : tree) {
                Complex s{0.0, 0.0};
                for (int k = node.range.lo; k < node.range.hi; ++k)
                    s += avg[static_cast<std::size_t>(b + k * stride)];
                // |I|^{-1} |int_I f| = |sum of member-cell averages| / |U|
                const double ratio = std::abs(s) / node.range.size();
                for (std::int64_t c = 0; c < cells; ++c) {
                    if (c % stride != b) continue;
                    const int digit = static_cast<int>((c / stride) % rs.radix(n));
                    if (digit >= node.range.lo && digit < node.range.hi) {
                        auto sc = static_cast<std::size_t>(c);
                        fss[sc] = std::max(fss[sc], ratio);
                    }
                }
            }
        }
    }
    double sum = 0.0;
    for (double v : fss) sum += v;
    return sum / static_cast<double>(cells);
}

}  // namespace vilenkin
