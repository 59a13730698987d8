#include "burnside/perm.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace burnside {

Perm perm_identity(unsigned deg) {
    Perm p(deg);
    for (unsigned i = 0; i < deg; ++i)
        p[i] = static_cast<uint16_t>(i);
    return p;
}

Perm perm_compose(const Perm& a, const Perm& b) {
    Perm r(a.size());
    for (size_t i = 0; i < a.size(); ++i)
        r[i] = a[b[i]];
    return r;
}

Perm perm_inverse(const Perm& a) {
    Perm r(a.size());
    for (size_t i = 0; i < a.size(); ++i)
        r[a[i]] = static_cast<uint16_t>(i);
    return r;
}

bool is_permutation(const Perm& a) {
    std::vector<bool> seen(a.size(), false);
    for (uint16_t v : a) {
        if (v >= a.size() || seen[v])
            return false;
        seen[v] = true;
    }
    return true;
}

Perm parse_cycles(const std::string& text, unsigned pad_to) {
    std::vector<std::vector<unsigned>> cycles;
    unsigned maxpt = pad_to;
    size_t i = 0;
    while (i < text.size()) {
        if (std::isspace(static_cast<unsigned char>(text[i]))) {
            ++i;
            continue;
        }
        if (text[i] != '(')
            throw std::invalid_argument("cycle notation: expected '(' in \"" + text + "\"");
        size_t close = text.find(')', i);
        if (close == std::string::npos)
            throw std::invalid_argument("cycle notation: missing ')' in \"" + text + "\"");
        std::istringstream in(text.substr(i + 1, close - i - 1));
        std::vector<unsigned> cyc;
        unsigned pt;
        while (in >> pt) {
            if (pt == 0)
                throw std::invalid_argument("cycle notation is 1-based");
            cyc.push_back(pt - 1);
            maxpt = std::max(maxpt, pt);
        }
        if (!in.eof())
            throw std::invalid_argument("cycle notation: bad point in \"" + text + "\"");
        if (cyc.size() > 1)
            cycles.push_back(cyc);
        i = close + 1;
    }
    Perm p = perm_identity(maxpt == 0 ? 1 : maxpt);
    for (const auto& cyc : cycles)
        for (size_t k = 0; k < cyc.size(); ++k) {
            unsigned from = cyc[k], to = cyc[(k + 1) % cyc.size()];
            if (p[from] != from)
                throw std::invalid_argument("cycles are not disjoint in \"" + text + "\"");
            p[from] = static_cast<uint16_t>(to);
        }
    if (!is_permutation(p))
        throw std::invalid_argument("not a permutation: \"" + text + "\"");
    return p;
}

std::string perm_to_cycles(const Perm& a) {
    std::ostringstream out;
    std::vector<bool> seen(a.size(), false);
    bool any = false;
    for (size_t i = 0; i < a.size(); ++i) {
        if (seen[i] || a[i] == i)
            continue;
        any = true;
        out << '(';
        size_t j = i;
        bool first = true;
        do {
            if (!first)
                out << ' ';
            out << j + 1;
            seen[j] = true;
            first = false;
            j = a[j];
        } while (j != i);
        out << ')';
    }
    return any ? out.str() : "()";
}

} // namespace burnside
