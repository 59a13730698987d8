#pragma once

#include <string>
#include <vector>

#include "burnside/context.hpp"

namespace burnside::testing {

// Named groups used by the exhaustive property suites, keyed by order.
inline std::vector<std::string> named_groups_up_to(unsigned max_order) {
    static const std::vector<std::pair<std::string, unsigned>> roster = {
        {"C1", 1},      {"C2", 2},     {"C3", 3},     {"C4", 4},    {"C2xC2", 4},
        {"C5", 5},      {"C6", 6},     {"S3", 6},     {"C7", 7},    {"C8", 8},
        {"C2xC4", 8},   {"C2xC2xC2", 8}, {"D8", 8},   {"Q8", 8},    {"C9", 9},
        {"C3xC3", 9},   {"C10", 10},   {"D10", 10},   {"C12", 12},  {"C2xC6", 12},
        {"D12", 12},    {"A4", 12},    {"C2xS3", 12}, {"C16", 16},  {"C2xD8", 16},
        {"C2xQ8", 16},  {"C18", 18},   {"C3xS3", 18}, {"C20", 20},  {"C24", 24},
        {"S4", 24},     {"C2xA4", 24}, {"D24", 24},   {"C3xD8", 24}};
    std::vector<std::string> out;
    for (const auto& [name, order] : roster)
        if (order <= max_order)
            out.push_back(name);
    return out;
}

inline GroupCtx ctx_of(const std::string& spec) {
    return make_context(spec);
}

} // namespace burnside::testing

using burnside::testing::ctx_of;
