#include "vilenkin/phi.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace vilenkin {

PhiFunction PhiFunction::constant(double c) {
    if (c < 1.0) throw std::invalid_argument("PhiFunction: constant below 1");
    PhiFunction phi;
    phi.kind_ = Kind::Const;
    phi.const_value_ = c;
    return phi;
}

PhiFunction PhiFunction::sqrt_log() {
    PhiFunction phi;
    phi.kind_ = Kind::SqrtLog;
    return phi;
}

PhiFunction PhiFunction::log_over_loglog() {
    PhiFunction phi;
    phi.kind_ = Kind::LogOverLogLog;
    return phi;
}

PhiFunction PhiFunction::table(std::map<std::int64_t, double> values) {
    if (values.empty()) throw std::invalid_argument("PhiFunction: empty table");
    double prev = 1.0;
    for (const auto& [n, v] : values) {
        if (n < 2) throw std::invalid_argument("PhiFunction: table index below 2");
        if (v < 1.0) throw std::invalid_argument("PhiFunction: table value below 1");
        if (v < prev) throw std::invalid_argument("PhiFunction: table not nondecreasing");
        prev = v;
    }
    PhiFunction phi;
    phi.kind_ = Kind::Table;
    phi.table_ = std::move(values);
    return phi;
}

PhiFunction PhiFunction::from_name(const std::string& name) {
    if (name == "const" || name == "one") return constant(1.0);
    if (name == "sqrt_log") return sqrt_log();
    if (name == "log_over_loglog2") return log_over_loglog();
    throw std::invalid_argument("PhiFunction: unknown kind '" + name + "'");
}

double PhiFunction::operator()(std::int64_t n) const {
    if (n < 2) throw std::invalid_argument("PhiFunction: n below 2");
    switch (kind_) {
        case Kind::Const:
            return const_value_;
        case Kind::SqrtLog:
            return std::max(1.0, std::sqrt(std::log(static_cast<double>(n))));
        case Kind::LogOverLogLog: {
            const double ln = std::log(static_cast<double>(n));
            return std::max(1.0, ln / std::log(std::max(2.0, ln)));
        }
        case Kind::Table: {
            // Step interpolation: value of the largest tabulated index <= n.
            auto it = table_.upper_bound(n);
            if (it == table_.begin())
                throw std::out_of_range("PhiFunction: n below first table entry");
            return std::prev(it)->second;
        }
    }
    throw std::logic_error("PhiFunction: bad kind");
}

std::string PhiFunction::name() const {
    switch (kind_) {
        case Kind::Const:
            return const_value_ == 1.0 ? "one" : "const";
        case Kind::SqrtLog:
            return "sqrt_log";
        case Kind::LogOverLogLog:
            return "log_over_loglog2";
        case Kind::Table:
            return "table";
    }
    return "?";
}

}  // namespace vilenkin
