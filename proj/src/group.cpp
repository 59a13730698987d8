#include "burnside/group.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

namespace burnside {

unsigned FiniteGroup::element_order(uint16_t g) const {
    unsigned k = 1;
    uint16_t x = g;
    while (x != 0) {
        x = mul[x][g];
        ++k;
    }
    return k;
}

int FiniteGroup::index_of(const Perm& p) const {
    for (size_t i = 0; i < elements.size(); ++i)
        if (elements[i] == p)
            return static_cast<int>(i);
    return -1;
}

Bits FiniteGroup::cyclic_subgroup(uint16_t g) const {
    Bits b(order());
    uint16_t x = 0;
    do {
        b.set(x);
        x = mul[x][g];
    } while (x != 0);
    return b;
}

Bits FiniteGroup::full_bits() const {
    Bits b(order());
    for (unsigned i = 0; i < order(); ++i)
        b.set(i);
    return b;
}

Bits FiniteGroup::trivial_bits() const {
    Bits b(order());
    b.set(0);
    return b;
}

void FiniteGroup::check_table() const {
    unsigned n = order();
    if (n == 0 || elements[0] != perm_identity(degree))
        throw internal_error("group table: identity not at index 0");
    for (unsigned a = 0; a < n; ++a) {
        if (mul[0][a] != a || mul[a][0] != a)
            throw internal_error("group table: identity law fails");
        if (mul[a][inv[a]] != 0 || mul[inv[a]][a] != 0)
            throw internal_error("group table: inverse law fails");
    }
    for (unsigned a = 0; a < n; ++a)
        for (unsigned b = 0; b < n; ++b)
            for (unsigned c = 0; c < n; ++c)
                if (mul[mul[a][b]][c] != mul[a][mul[b][c]])
                    throw internal_error("group table: associativity fails");
    std::set<Perm> distinct(elements.begin(), elements.end());
    if (distinct.size() != n)
        throw internal_error("group table: duplicate elements");
}

namespace {

std::shared_ptr<FiniteGroup> build_from_perms(unsigned degree, std::vector<Perm> elems) {
    Perm id = perm_identity(degree);
    std::sort(elems.begin(), elems.end());
    auto it = std::find(elems.begin(), elems.end(), id);
    if (it == elems.end())
        throw internal_error("element set has no identity");
    elems.erase(it);
    elems.insert(elems.begin(), id);

    auto g = std::make_shared<FiniteGroup>();
    g->degree = degree;
    g->elements = std::move(elems);
    unsigned n = g->order();

    std::map<Perm, uint16_t> index;
    for (unsigned i = 0; i < n; ++i)
        index[g->elements[i]] = static_cast<uint16_t>(i);

    g->mul.assign(n, std::vector<uint16_t>(n));
    g->inv.assign(n, 0);
    for (unsigned a = 0; a < n; ++a) {
        for (unsigned b = 0; b < n; ++b) {
            auto f = index.find(perm_compose(g->elements[a], g->elements[b]));
            if (f == index.end())
                throw internal_error("element set is not closed under composition");
            g->mul[a][b] = f->second;
        }
        g->inv[a] = index.at(perm_inverse(g->elements[a]));
    }
    return g;
}

} // namespace

GroupPtr group_from_generators(const std::vector<Perm>& gens, unsigned max_order) {
    unsigned degree = gens.empty() ? 1 : static_cast<unsigned>(gens[0].size());
    for (const auto& p : gens) {
        if (p.size() != degree)
            throw input_error("generators act on different point sets");
        if (!is_permutation(p))
            throw input_error("generator is not a permutation");
    }
    std::set<Perm> seen;
    std::queue<Perm> todo;
    Perm id = perm_identity(degree);
    seen.insert(id);
    todo.push(id);
    while (!todo.empty()) {
        Perm cur = todo.front();
        todo.pop();
        for (const auto& gen : gens) {
            Perm next = perm_compose(cur, gen);
            if (seen.insert(next).second) {
                if (seen.size() > max_order)
                    throw size_cap_error("generated group exceeds order cap " +
                                         std::to_string(max_order));
                todo.push(next);
            }
        }
    }
    return build_from_perms(degree, std::vector<Perm>(seen.begin(), seen.end()));
}

namespace {

std::vector<Perm> named_generators(const std::string& tok, unsigned& degree) {
    auto bad = [&] { throw input_error("unrecognized group spec: \"" + tok + "\""); };
    if (tok.empty())
        bad();
    char kind = tok[0];
    if (tok == "Q8") {
        // Regular representation on {1,-1,i,-i,j,-j,k,-k}.
        degree = 8;
        return {Perm{2, 3, 1, 0, 6, 7, 5, 4}, Perm{4, 5, 7, 6, 1, 0, 2, 3}};
    }
    unsigned n = 0;
    for (size_t i = 1; i < tok.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(tok[i])))
            bad();
        n = n * 10 + (tok[i] - '0');
    }
    if (tok.size() < 2 || n == 0)
        bad();
    switch (kind) {
    case 'C': {
        degree = n;
        if (n == 1)
            return {};
        std::vector<unsigned> cyc(n);
        Perm p(n);
        for (unsigned i = 0; i < n; ++i)
            p[i] = static_cast<uint16_t>((i + 1) % n);
        return {p};
    }
    case 'S': {
        degree = n;
        if (n == 1)
            return {};
        Perm swap = perm_identity(n);
        swap[0] = 1;
        swap[1] = 0;
        Perm cyc(n);
        for (unsigned i = 0; i < n; ++i)
            cyc[i] = static_cast<uint16_t>((i + 1) % n);
        if (n == 2)
            return {swap};
        return {swap, cyc};
    }
    case 'A': {
        degree = std::max(n, 1u);
        if (n <= 2)
            return {};
        Perm three = perm_identity(n);
        three[0] = 1;
        three[1] = 2;
        three[2] = 0;
        if (n == 3)
            return {three};
        Perm big = perm_identity(n);
        if (n % 2 == 1) {
            for (unsigned i = 0; i < n; ++i)
                big[i] = static_cast<uint16_t>((i + 1) % n);
        } else {
            for (unsigned i = 1; i < n; ++i)
                big[i] = static_cast<uint16_t>(i % (n - 1) + 1);
        }
        return {three, big};
    }
    case 'D': {
        // Order n, n even >= 4: symmetries of the (n/2)-gon, with the
        // 2-gon case realized as two independent swaps.
        if (n % 2 != 0 || n < 4)
            bad();
        unsigned m = n / 2;
        if (m == 2) {
            degree = 4;
            return {Perm{1, 0, 2, 3}, Perm{0, 1, 3, 2}};
        }
        degree = m;
        Perm rot(m), ref(m);
        for (unsigned i = 0; i < m; ++i) {
            rot[i] = static_cast<uint16_t>((i + 1) % m);
            ref[i] = static_cast<uint16_t>((m - i) % m);
        }
        return {rot, ref};
    }
    default:
        bad();
    }
    return {};
}

} // namespace

GroupPtr named_group(const std::string& spec, unsigned max_order) {
    if (spec.rfind("perm:", 0) == 0) {
        std::string body = spec.substr(5);
        std::vector<std::string> parts;
        size_t start = 0, depth_guard = 0;
        (void)depth_guard;
        for (size_t i = 0; i <= body.size(); ++i) {
            if (i == body.size() || body[i] == ',') {
                if (i > start)
                    parts.push_back(body.substr(start, i - start));
                start = i + 1;
            }
        }
        if (parts.empty())
            throw input_error("perm: spec has no generators");
        unsigned degree = 0;
        std::vector<Perm> gens;
        for (const auto& p : parts)
            gens.push_back(parse_cycles(p));
        for (const auto& g : gens)
            degree = std::max(degree, static_cast<unsigned>(g.size()));
        for (auto& g : gens)
            while (g.size() < degree)
                g.push_back(static_cast<uint16_t>(g.size()));
        return group_from_generators(gens, max_order);
    }

    std::vector<std::string> factors;
    size_t start = 0;
    for (size_t i = 0; i <= spec.size(); ++i) {
        if (i == spec.size() || spec[i] == 'x') {
            if (i > start)
                factors.push_back(spec.substr(start, i - start));
            start = i + 1;
        }
    }
    if (factors.empty())
        throw input_error("empty group spec");

    // Concatenate the factor generators on a disjoint point set.
    std::vector<std::pair<std::vector<Perm>, unsigned>> built;
    unsigned total_degree = 0;
    for (const auto& tok : factors) {
        unsigned deg = 0;
        auto gens = named_generators(tok, deg);
        built.push_back({gens, deg});
        total_degree += deg;
    }
    std::vector<Perm> gens;
    unsigned offset = 0;
    for (const auto& [fgens, deg] : built) {
        for (const auto& fg : fgens) {
            Perm p = perm_identity(total_degree);
            for (unsigned i = 0; i < deg; ++i)
                p[offset + i] = static_cast<uint16_t>(offset + fg[i]);
            gens.push_back(p);
        }
        offset += deg;
    }
    return group_from_generators(gens, max_order);
}

SubgroupGroup subgroup_as_group(const GroupPtr& parent, const Bits& members) {
    std::vector<Perm> elems;
    for (int i = members.find_first(); i >= 0; i = members.find_next(i))
        elems.push_back(parent->elements[i]);

    // The member permutations already form a closed set.
    std::vector<Perm> sorted = elems;
    std::sort(sorted.begin(), sorted.end());
    Perm id = perm_identity(parent->degree);
    auto it = std::find(sorted.begin(), sorted.end(), id);
    if (it == sorted.end())
        throw internal_error("subgroup bits do not contain the identity");
    sorted.erase(it);
    sorted.insert(sorted.begin(), id);

    auto grp = std::make_shared<FiniteGroup>();
    grp->degree = parent->degree;
    grp->elements = sorted;
    unsigned n = grp->order();
    std::map<Perm, uint16_t> index;
    for (unsigned i = 0; i < n; ++i)
        index[grp->elements[i]] = static_cast<uint16_t>(i);
    grp->mul.assign(n, std::vector<uint16_t>(n));
    grp->inv.assign(n, 0);
    for (unsigned a = 0; a < n; ++a) {
        for (unsigned b = 0; b < n; ++b) {
            auto f = index.find(perm_compose(grp->elements[a], grp->elements[b]));
            if (f == index.end())
                throw internal_error("subgroup bits are not closed");
            grp->mul[a][b] = f->second;
        }
        grp->inv[a] = index.at(perm_inverse(grp->elements[a]));
    }

    SubgroupGroup out;
    out.group = grp;
    out.parent = parent;
    out.to_parent.resize(n);
    out.from_parent.assign(parent->order(), -1);
    for (unsigned i = 0; i < n; ++i) {
        int pi = parent->index_of(grp->elements[i]);
        if (pi < 0)
            throw internal_error("subgroup element missing from parent");
        out.to_parent[i] = static_cast<uint16_t>(pi);
        out.from_parent[pi] = static_cast<int>(i);
    }
    return out;
}

QuotientGroup quotient_group(const GroupPtr& parent, const Bits& normal_members) {
    unsigned n = parent->order();
    // Left cosets gN, labeled by least member index.
    std::vector<int> coset_of(n, -1);
    std::vector<uint16_t> coset_rep;
    for (unsigned g = 0; g < n; ++g) {
        if (coset_of[g] >= 0)
            continue;
        int c = static_cast<int>(coset_rep.size());
        coset_rep.push_back(static_cast<uint16_t>(g));
        for (int x = normal_members.find_first(); x >= 0; x = normal_members.find_next(x)) {
            uint16_t gx = parent->mul[g][x];
            if (coset_of[gx] >= 0 && coset_of[gx] != c)
                throw internal_error("quotient: coset overlap (N not a subgroup?)");
            coset_of[gx] = c;
        }
    }
    unsigned m = static_cast<unsigned>(coset_rep.size());

    // Verify normality via the induced action being well defined.
    std::vector<Perm> action(n);
    for (unsigned g = 0; g < n; ++g) {
        Perm p(m);
        for (unsigned c = 0; c < m; ++c)
            p[c] = static_cast<uint16_t>(coset_of[parent->mul[g][coset_rep[c]]]);
        action[g] = p;
    }
    for (unsigned g = 0; g < n; ++g)
        if (action[g] == perm_identity(m) && !normal_members.test(g))
            throw input_error("quotient: subgroup is not normal (kernel too large)");
    for (int x = normal_members.find_first(); x >= 0; x = normal_members.find_next(x))
        if (action[x] != perm_identity(m))
            throw input_error("quotient: subgroup is not normal");

    std::set<Perm> distinct(action.begin(), action.end());
    auto grp = std::make_shared<FiniteGroup>();
    {
        std::vector<Perm> elems(distinct.begin(), distinct.end());
        Perm id = perm_identity(m);
        auto it = std::find(elems.begin(), elems.end(), id);
        elems.erase(it);
        std::sort(elems.begin(), elems.end());
        elems.insert(elems.begin(), id);
        grp->degree = m;
        grp->elements = elems;
        std::map<Perm, uint16_t> index;
        for (unsigned i = 0; i < elems.size(); ++i)
            index[elems[i]] = static_cast<uint16_t>(i);
        unsigned q = static_cast<unsigned>(elems.size());
        grp->mul.assign(q, std::vector<uint16_t>(q));
        grp->inv.assign(q, 0);
        for (unsigned a = 0; a < q; ++a) {
            for (unsigned b = 0; b < q; ++b)
                grp->mul[a][b] = index.at(perm_compose(elems[a], elems[b]));
            grp->inv[a] = index.at(perm_inverse(elems[a]));
        }
    }

    QuotientGroup out;
    out.group = grp;
    out.parent = parent;
    out.proj.resize(n);
    std::map<Perm, uint16_t> index;
    for (unsigned i = 0; i < grp->order(); ++i)
        index[grp->elements[i]] = static_cast<uint16_t>(i);
    for (unsigned g = 0; g < n; ++g)
        out.proj[g] = index.at(action[g]);
    return out;
}

ProductGroup product_group(const GroupPtr& a, const GroupPtr& b, unsigned max_order) {
    unsigned na = a->order(), nb = b->order();
    if (static_cast<uint64_t>(na) * nb > max_order)
        throw size_cap_error("product group exceeds order cap");
    unsigned deg = a->degree + b->degree;

    std::vector<Perm> elems;
    elems.reserve(static_cast<size_t>(na) * nb);
    for (unsigned i = 0; i < na; ++i)
        for (unsigned j = 0; j < nb; ++j) {
            Perm p(deg);
            for (unsigned x = 0; x < a->degree; ++x)
                p[x] = a->elements[i][x];
            for (unsigned x = 0; x < b->degree; ++x)
                p[a->degree + x] = static_cast<uint16_t>(a->degree + b->elements[j][x]);
            elems.push_back(p);
        }

    auto grp = std::make_shared<FiniteGroup>();
    {
        std::sort(elems.begin(), elems.end());
        grp->degree = deg;
        grp->elements = elems;
        Perm id = perm_identity(deg);
        auto it = std::find(grp->elements.begin(), grp->elements.end(), id);
        grp->elements.erase(it);
        grp->elements.insert(grp->elements.begin(), id);
        std::map<Perm, uint16_t> index;
        unsigned q = grp->order();
        for (unsigned i = 0; i < q; ++i)
            index[grp->elements[i]] = static_cast<uint16_t>(i);
        grp->mul.assign(q, std::vector<uint16_t>(q));
        grp->inv.assign(q, 0);
        for (unsigned x = 0; x < q; ++x) {
            for (unsigned y = 0; y < q; ++y)
                grp->mul[x][y] = index.at(perm_compose(grp->elements[x], grp->elements[y]));
            grp->inv[x] = index.at(perm_inverse(grp->elements[x]));
        }
    }

    ProductGroup out;
    out.group = grp;
    out.left = a;
    out.right = b;
    out.factors.resize(grp->order());
    out.pair_index.assign(na, std::vector<uint16_t>(nb));
    for (unsigned e = 0; e < grp->order(); ++e) {
        const Perm& p = grp->elements[e];
        Perm pa(a->degree), pb(b->degree);
        for (unsigned x = 0; x < a->degree; ++x)
            pa[x] = p[x];
        for (unsigned x = 0; x < b->degree; ++x)
            pb[x] = static_cast<uint16_t>(p[a->degree + x] - a->degree);
        int ia = a->index_of(pa), ib = b->index_of(pb);
        if (ia < 0 || ib < 0)
            throw internal_error("product group: factor decomposition failed");
        out.factors[e] = {static_cast<uint16_t>(ia), static_cast<uint16_t>(ib)};
        out.pair_index[ia][ib] = static_cast<uint16_t>(e);
    }
    return out;
}

Bits ProductGroup::pair_bits(const Bits& a, const Bits& b) const {
    Bits r(group->order());
    for (int i = a.find_first(); i >= 0; i = a.find_next(i))
        for (int j = b.find_first(); j >= 0; j = b.find_next(j))
            r.set(pair_index[i][j]);
    return r;
}

GroupIso group_iso(const GroupPtr& src, const GroupPtr& dst,
                   const std::vector<uint16_t>& image_of_element) {
    if (image_of_element.size() != src->order() || src->order() != dst->order())
        throw input_error("iso: size mismatch");
    GroupIso iso;
    iso.src = src;
    iso.dst = dst;
    iso.fwd = image_of_element;
    iso.rev.assign(dst->order(), 0);
    std::vector<bool> hit(dst->order(), false);
    for (unsigned i = 0; i < src->order(); ++i) {
        if (hit[iso.fwd[i]])
            throw input_error("iso: not a bijection");
        hit[iso.fwd[i]] = true;
        iso.rev[iso.fwd[i]] = static_cast<uint16_t>(i);
    }
    if (iso.fwd[0] != 0)
        throw input_error("iso: identity not preserved");
    for (unsigned a = 0; a < src->order(); ++a)
        for (unsigned b = 0; b < src->order(); ++b)
            if (iso.fwd[src->mul[a][b]] != dst->mul[iso.fwd[a]][iso.fwd[b]])
                throw input_error("iso: not a homomorphism");
    return iso;
}

} // namespace burnside
