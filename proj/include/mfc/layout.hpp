#pragma once

#include <cstddef>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace mfc {

enum class SubsystemKind { Boson, TwoLevel };

struct Subsystem {
    std::string name;
    SubsystemKind kind = SubsystemKind::Boson;
    int dim = 0;
};

// Ordered list of quantum subsystems defining a tensor-product Hilbert space.
// The declaration order fixes the Kronecker ordering everywhere: slot 0 is the
// leftmost (most significant) factor. Immutable after construction.
class SubsystemLayout {
public:
    explicit SubsystemLayout(std::vector<Subsystem> subsystems)
        : subsystems_(std::move(subsystems)) {
        if (subsystems_.empty())
            throw std::invalid_argument("layout: no subsystems");
        total_dim_ = 1;
        for (const auto& s : subsystems_) {
            if (s.kind == SubsystemKind::TwoLevel && s.dim != 2)
                throw std::invalid_argument("layout: two-level subsystem '" + s.name +
                                            "' must have dim 2");
            if (s.kind == SubsystemKind::Boson && s.dim < 2)
                throw std::invalid_argument("layout: boson subsystem '" + s.name +
                                            "' must have dim >= 2");
            for (const auto& other : subsystems_)
                if (&other != &s && other.name == s.name)
                    throw std::invalid_argument("layout: duplicate subsystem name '" + s.name + "'");
            total_dim_ *= static_cast<std::size_t>(s.dim);
        }
    }

    std::size_t total_dim() const { return total_dim_; }
    std::size_t size() const { return subsystems_.size(); }
    const Subsystem& at(std::size_t i) const { return subsystems_.at(i); }
    const std::vector<Subsystem>& subsystems() const { return subsystems_; }

    std::size_t index_of(std::string_view name) const {
        for (std::size_t i = 0; i < subsystems_.size(); ++i)
            if (subsystems_[i].name == name) return i;
        throw std::invalid_argument("layout: unknown subsystem '" + std::string(name) + "'");
    }

    bool has(std::string_view name) const {
        for (const auto& s : subsystems_)
            if (s.name == name) return true;
        return false;
    }

    friend bool operator==(const SubsystemLayout& a, const SubsystemLayout& b) {
        if (a.subsystems_.size() != b.subsystems_.size()) return false;
        for (std::size_t i = 0; i < a.subsystems_.size(); ++i) {
            const auto& x = a.subsystems_[i];
            const auto& y = b.subsystems_[i];
            if (x.name != y.name || x.kind != y.kind || x.dim != y.dim) return false;
        }
        return true;
    }
    friend bool operator!=(const SubsystemLayout& a, const SubsystemLayout& b) {
        return !(a == b);
    }

private:
    std::vector<Subsystem> subsystems_;
    std::size_t total_dim_ = 1;
};

using LayoutPtr = std::shared_ptr<const SubsystemLayout>;

inline LayoutPtr make_layout(std::vector<Subsystem> subsystems) {
    return std::make_shared<const SubsystemLayout>(std::move(subsystems));
}

inline LayoutPtr single_boson(std::string name, int dim) {
    return make_layout({{std::move(name), SubsystemKind::Boson, dim}});
}

inline LayoutPtr single_two_level(std::string name = "tls") {
    return make_layout({{std::move(name), SubsystemKind::TwoLevel, 2}});
}

} // namespace mfc
