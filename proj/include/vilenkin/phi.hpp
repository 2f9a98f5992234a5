#pragma once

#include <cstdint>
#include <map>
#include <string>

namespace vilenkin {

/// Nondecreasing weight phi: {2,3,...} -> [1, inf) used by the
/// phi-normalized strong sums.
class PhiFunction {
public:
    enum class Kind { Const, SqrtLog, LogOverLogLog, Table };

    static PhiFunction constant(double c = 1.0);
    /// phi_n = max(1, sqrt(ln n))
    static PhiFunction sqrt_log();
    /// phi_n = max(1, ln n / ln(max(2, ln n)))
    static PhiFunction log_over_loglog();
    static PhiFunction table(std::map<std::int64_t, double> values);
    static PhiFunction from_name(const std::string& name);

    double operator()(std::int64_t n) const;
    Kind kind() const noexcept { return kind_; }
    std::string name() const;

private:
    Kind kind_ = Kind::Const;
    double const_value_ = 1.0;
    std::map<std::int64_t, double> table_;
};

}  // namespace vilenkin
