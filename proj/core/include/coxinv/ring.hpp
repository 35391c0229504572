#pragma once
// Named, ordered variable rings.  A ring fixes the variable names (at most 5)
// and optionally a rational weight per variable for weighted-homogeneity
// queries.  All polynomial operations require operands over equal rings.

#include "coxinv/rational.hpp"

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace coxinv {

struct VarRing {
    std::vector<std::string> names;
    std::optional<std::vector<Rat>> weights;

    std::size_t size() const { return names.size(); }
    int index_of(const std::string& name) const {
        for (std::size_t i = 0; i < names.size(); ++i)
            if (names[i] == name) return static_cast<int>(i);
        return -1;
    }
    bool operator==(const VarRing& o) const {
        return names == o.names;  // weights are advisory metadata
    }
};

using RingPtr = std::shared_ptr<const VarRing>;

inline RingPtr make_ring(std::vector<std::string> names,
                         std::optional<std::vector<Rat>> weights = std::nullopt) {
    if (names.empty() || names.size() > 5)
        throw std::invalid_argument("variable rings support 1..5 variables");
    if (weights && weights->size() != names.size())
        throw std::invalid_argument("weight vector size mismatch");
    auto r = std::make_shared<VarRing>();
    r->names = std::move(names);
    r->weights = std::move(weights);
    return r;
}

inline bool same_ring(const RingPtr& a, const RingPtr& b) {
    return a == b || (a && b && *a == *b);
}

}  // namespace coxinv
