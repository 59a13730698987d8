#pragma once

#include <map>
#include <memory>

#include "burnside/slices.hpp"

namespace burnside {

struct Caps {
    unsigned max_order = kDefaultMaxOrder;
    size_t max_slices = kDefaultMaxSlices;
    int max_degree = 3;
};

// One group with its lattice and slice tables, built on demand. Tables are
// cached per degree; everything handed out is immutable.
class GroupCtx {
public:
    GroupCtx() = default;
    GroupCtx(GroupPtr g, Caps caps = {})
        : group_(std::move(g)), lattice_(make_lattice(group_)), caps_(caps) {}

    const GroupPtr& group() const { return group_; }
    const LatticePtr& lattice() const { return lattice_; }
    const Caps& caps() const { return caps_; }

    TablePtr table(int n) const {
        auto it = tables_.find(n);
        if (it != tables_.end())
            return it->second;
        auto t = make_table(lattice_, n, caps_.max_slices);
        tables_.emplace(n, t);
        return t;
    }

private:
    GroupPtr group_;
    LatticePtr lattice_;
    Caps caps_;
    mutable std::map<int, TablePtr> tables_;
};

inline GroupCtx make_context(const std::string& spec, Caps caps = {}) {
    return GroupCtx(named_group(spec, caps.max_order), caps);
}

} // namespace burnside
