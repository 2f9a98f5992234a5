#pragma once

#include <optional>
#include <string>
#include <utility>

#include "vilenkin/cylinder.hpp"

namespace vilenkin {

/// Contiguous index range [lo, hi) inside Z_{m_n}.
struct IndexRange {
    int lo = 0;
    int hi = 0;
    int size() const noexcept { return hi - lo; }
};

/// Node of the dyadic partition tree of Z_{m_n}; children split the parent
/// with first-child size floor(size/2). Leaves are singletons.
struct PartitionNode {
    IndexRange range;
    int left = -1;   // child indices into the tree vector, -1 for leaves
    int right = -1;
};

std::vector<PartitionNode> dyadic_partition_tree(int m_n);

/// True when [lo, hi) is a node of the dyadic partition tree of Z_{m_n}.
bool is_dyadic_range(int m_n, IndexRange r);

/// Interval: base point x, level n, dyadic index set U of Z_{m_n}. The
/// realized set is the union over k in U of the depth-(n+1) cylinders that
/// agree with x below level n and have coordinate n equal to k. A full
/// cylinder I_n(x) is the level-n interval with U = Z_{m_n}.
struct Interval {
    RadixRef rs;
    GroupPoint base;
    int level = 0;
    IndexRange u;

    double measure() const;  // |U| / M_{n+1}
    /// Cell mask at the given depth (> level): true on cells inside I.
    std::vector<bool> cell_mask(int depth) const;
};

Interval full_cylinder(const RadixRef& rs, const GroupPoint& base, int n);

/// Atom: the constant-1 function, or a mean-zero function supported on an
/// interval I with sup norm at most 1/|I|.
struct Atom {
    bool unit = false;
    std::optional<CylinderFunction> fn;
    std::optional<Interval> support;

    static Atom unit_atom(RadixRef rs);
    static Atom supported(CylinderFunction f, Interval i);
    CylinderFunction as_function(int depth) const;
};

struct AtomCheck {
    bool ok = true;
    std::string violation;   // empty when ok: "support" | "sup_bound" | "mean"
    double residual = 0.0;   // magnitude of the worst violation
    std::int64_t where = -1;  // offending cell, when applicable
};

AtomCheck validate_atom(const Atom& a, double tol = 1e-12);

struct AtomicDecomposition {
    RadixRef rs;
    int depth = 0;
    std::vector<std::pair<Complex, Atom>> terms;

    CylinderFunction assemble() const;
};

/// sum |lambda_i|; an upper bound for the H1 norm. Throws on invalid atoms.
double h1_upper_bound(const AtomicDecomposition& dec);

/// ||f*||_1, the maximal-function proxy for the H1 norm (valid surrogate
/// for bounded radix systems).
double h1_proxy_norm(const CylinderFunction& f);

/// ||f**||_1 by exhaustive interval enumeration; cross-check only, requires
/// M_{n+1} <= 4096 at every level.
double h1_double_star_norm(const CylinderFunction& f);

}  // namespace vilenkin
