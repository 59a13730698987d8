#include <CLI11.hpp>

#include <iostream>

#include "burnside/biset.hpp"
#include "burnside/cokernel.hpp"
#include "burnside/idempotents.hpp"
#include "burnside/json_io.hpp"
#include "burnside/spectrum.hpp"
#include "burnside/verify.hpp"

namespace {

using namespace burnside;

struct Options {
    std::string group_spec;
    int n = 0;
    std::string format = "text";
    unsigned max_order = kDefaultMaxOrder;
    size_t max_slices = kDefaultMaxSlices;
    int max_degree = 3;
};

struct App {
    Options opt;
    GroupCtx ctx;

    void init() {
        if (opt.n < 0 || opt.n > opt.max_degree)
            throw input_error("degree must be in 0.." + std::to_string(opt.max_degree));
        Caps caps{opt.max_order, opt.max_slices, opt.max_degree};
        ctx = make_context(opt.group_spec, caps);
    }

    bool use_json() const { return opt.format == "json"; }

    json header(const SliceClassTable& t) const {
        json out;
        out["group"] = opt.group_spec;
        out["n"] = opt.n;
        out["classes"] = classes_json(t);
        return out;
    }

    void print_element(const BurnsideElt& x) const {
        if (x.is_zero()) {
            std::cout << "0\n";
            return;
        }
        bool first = true;
        for (const auto& [cls, c] : x.coeffs) {
            if (!first)
                std::cout << " + ";
            std::cout << c << "*[" << x.ctx->chain_string(cls) << "]";
            first = false;
        }
        std::cout << "\n";
    }

    void print_element(const QBurnsideElt& x) const {
        if (x.is_zero()) {
            std::cout << "0\n";
            return;
        }
        bool first = true;
        for (const auto& [cls, c] : x.coeffs) {
            if (!first)
                std::cout << " + ";
            std::cout << rat_str(c) << "*[" << x.ctx->chain_string(cls) << "]";
            first = false;
        }
        std::cout << "\n";
    }
};

int cmd_slices(App& app) {
    TablePtr t = app.ctx.table(app.opt.n);
    if (app.use_json()) {
        std::cout << app.header(*t).dump(2) << "\n";
        return 0;
    }
    std::cout << t->class_count() << " classes of " << app.opt.n << "-slices of "
              << app.opt.group_spec << "\n";
    for (size_t i = 0; i < t->class_count(); ++i) {
        std::cout << "  " << i << ": " << t->chain_string(static_cast<int>(i)) << "  orders (";
        for (size_t k = 0; k < t->classes[i].size(); ++k)
            std::cout << (k ? " " : "") << t->lattice->order_of(t->classes[i][k]);
        std::cout << ")  |W| = " << t->weyl[i]
                  << "  |N| = " << t->lattice->order_of(t->slice_normalizer[i]) << "\n";
    }
    return 0;
}

int cmd_marks(App& app) {
    TablePtr t = app.ctx.table(app.opt.n);
    Int det = mark_table_det(*t);
    Int prod = 1;
    for (const Int& w : t->weyl)
        prod *= w;
    if (app.use_json()) {
        json out = app.header(*t);
        out["matrix"] = matrix_json(t->marks);
        out["det"] = int_str(det);
        out["weyl_product"] = int_str(prod);
        std::cout << out.dump(2) << "\n";
        return 0;
    }
    std::cout << "table of marks (" << t->class_count() << " x " << t->class_count()
              << "), rows phi_S, columns <T>\n";
    for (size_t i = 0; i < t->class_count(); ++i) {
        for (size_t j = 0; j < t->class_count(); ++j)
            std::cout << (j ? " " : "") << t->marks[i][j];
        std::cout << "\n";
    }
    std::cout << "det " << det << ", prod |W| " << prod
              << (det == prod ? " (equal)" : " (MISMATCH)") << "\n";
    return det == prod ? 0 : 1;
}

int cmd_multiply(App& app, const std::string& lhs, const std::string& rhs) {
    TablePtr t = app.ctx.table(app.opt.n);
    BurnsideElt a = basis(t, t->class_of(t->parse_chain(lhs)));
    BurnsideElt b = basis(t, t->class_of(t->parse_chain(rhs)));
    BurnsideElt p = multiply(a, b);
    if (app.use_json()) {
        json out = app.header(*t);
        out["elements"] = json::array({element_json(a), element_json(b), element_json(p)});
        std::cout << out.dump(2) << "\n";
        return 0;
    }
    app.print_element(p);
    return 0;
}

int cmd_mobius(App& app, const std::string& lhs, const std::string& rhs) {
    TablePtr t = app.ctx.table(app.opt.n);
    Slice a = t->parse_chain(lhs);
    Slice b = t->parse_chain(rhs);
    Int product = mobius_pi(*t, a, b);
    Int recursive = mobius_pi_recursive(*t, a, b);
    if (app.use_json()) {
        json out = app.header(*t);
        out["mobius_product_formula"] = int_str(product);
        out["mobius_recursive"] = int_str(recursive);
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "mu_Pi = " << product << " (product formula), " << recursive
                  << " (recursive)\n";
    }
    return product == recursive ? 0 : 1;
}

int cmd_idempotents(App& app) {
    TablePtr t = app.ctx.table(app.opt.n);
    std::vector<QBurnsideElt> es = all_idempotents(t);
    if (app.use_json()) {
        json out = app.header(*t);
        json arr = json::array();
        for (size_t i = 0; i < es.size(); ++i) {
            json e = element_json(es[i]);
            e["class"] = static_cast<int>(i);
            e["chain"] = t->chain_string(static_cast<int>(i));
            arr.push_back(e);
        }
        out["elements"] = arr;
        out["verified"] = true; // all_idempotents throws otherwise
        std::cout << out.dump(2) << "\n";
        return 0;
    }
    std::cout << es.size() << " primitive idempotents (e^2 = e, orthogonal, sum = e_n)\n";
    for (size_t i = 0; i < es.size(); ++i) {
        std::cout << "  e[" << t->chain_string(static_cast<int>(i)) << "] = ";
        app.print_element(es[i]);
    }
    return 0;
}

int cmd_spectrum(App& app) {
    TablePtr t = app.ctx.table(app.opt.n);
    auto comps = connected_components(t);
    bool solvable = is_solvable(*app.ctx.lattice());
    if (app.use_json()) {
        json out = app.header(*t);
        json arr = json::array();
        for (size_t c = 0; c < comps.size(); ++c) {
            json comp;
            comp["component_id"] = static_cast<int>(c);
            json cl = json::array();
            for (int cls : comps[c])
                cl.push_back(t->chain_string(cls));
            comp["classes"] = cl;
            arr.push_back(comp);
        }
        out["components"] = arr;
        out["solvable"] = solvable;
        std::cout << out.dump(2) << "\n";
        return 0;
    }
    std::cout << comps.size() << (comps.size() == 1 ? " component" : " components")
              << "; group is " << (solvable ? "solvable" : "not solvable") << "\n";
    for (size_t c = 0; c < comps.size(); ++c) {
        std::cout << "  component " << c << ":";
        for (int cls : comps[c])
            std::cout << " [" << t->chain_string(cls) << "]";
        std::cout << "\n";
    }
    return 0;
}

int cmd_obs(App& app) {
    TablePtr t = app.ctx.table(app.opt.n);
    std::vector<Int> global = obs_moduli(t, std::nullopt);
    json reports = json::array();
    bool all_ok = true;
    for (unsigned p : prime_divisors(app.ctx.group()->order())) {
        SequenceReport rep = verify_exact_sequence(t, p);
        all_ok = all_ok && rep.all_pass();
        json r;
        r["p"] = p;
        r["checks"] = report_json(rep);
        json mod = json::array();
        for (const Int& m : obs_moduli(t, p))
            mod.push_back(int_str(m));
        r["moduli"] = mod;
        reports.push_back(r);
    }
    if (app.use_json()) {
        json out = app.header(*t);
        json mod = json::array();
        for (const Int& m : global)
            mod.push_back(int_str(m));
        out["moduli"] = mod;
        out["coker_order"] = int_str(cokernel_order(*t));
        out["exact_sequence"] = reports;
        std::cout << out.dump(2) << "\n";
        return all_ok ? 0 : 1;
    }
    std::cout << "Obs moduli |W_G(Sbar)|:";
    for (const Int& m : global)
        std::cout << " " << m;
    std::cout << "\n|coker Phi| = " << cokernel_order(*t) << "\n";
    for (const auto& r : reports) {
        std::cout << "p = " << r["p"] << ":";
        for (const auto& c : r["checks"])
            std::cout << " " << c["check"].get<std::string>() << "="
                      << (c["pass"].get<bool>() ? "pass" : "FAIL");
        std::cout << "\n";
    }
    return all_ok ? 0 : 1;
}

int cmd_face(App& app, const std::string& chain, int j) {
    TablePtr t = app.ctx.table(app.opt.n);
    TablePtr down = app.ctx.table(app.opt.n - 1);
    BurnsideElt x = basis(t, t->class_of(t->parse_chain(chain)));
    BurnsideElt y = face(x, j, down);
    if (app.use_json()) {
        json out = app.header(*down);
        out["elements"] = json::array({element_json(y)});
        std::cout << out.dump(2) << "\n";
        return 0;
    }
    app.print_element(y);
    return 0;
}

int cmd_degeneracy(App& app, const std::string& chain, int i) {
    TablePtr t = app.ctx.table(app.opt.n);
    TablePtr up = app.ctx.table(app.opt.n + 1);
    BurnsideElt x = basis(t, t->class_of(t->parse_chain(chain)));
    BurnsideElt y = degeneracy(x, i, up);
    if (app.use_json()) {
        json out = app.header(*up);
        out["elements"] = json::array({element_json(y)});
        std::cout << out.dump(2) << "\n";
        return 0;
    }
    app.print_element(y);
    return 0;
}

int cmd_restrict_induce(App& app, const std::string& sub_name, const std::string& chain,
                        bool restrict_mode) {
    TablePtr t = app.ctx.table(app.opt.n);
    int sub_rep = app.ctx.lattice()->class_by_name(sub_name);
    SubgroupCtx h = make_subgroup_ctx(app.ctx, sub_rep);
    BurnsideElt result(nullptr);
    if (restrict_mode) {
        BurnsideElt x = basis(t, t->class_of(t->parse_chain(chain)));
        result = restriction(app.ctx, h, x);
    } else {
        TablePtr ht = h.ctx.table(app.opt.n);
        BurnsideElt x = basis(ht, ht->class_of(ht->parse_chain(chain)));
        result = induction(app.ctx, h, x);
    }
    if (app.use_json()) {
        json out = app.header(*result.ctx);
        out["elements"] = json::array({element_json(result)});
        std::cout << out.dump(2) << "\n";
        return 0;
    }
    app.print_element(result);
    return 0;
}

int cmd_inflate_deflate(App& app, const std::string& normal_name, const std::string& chain,
                        bool inflate_mode) {
    TablePtr t = app.ctx.table(app.opt.n);
    int rep = app.ctx.lattice()->class_by_name(normal_name);
    QuotientCtx q = make_quotient_ctx(app.ctx, rep);
    BurnsideElt result(nullptr);
    if (inflate_mode) {
        TablePtr qt = q.ctx.table(app.opt.n);
        BurnsideElt x = basis(qt, qt->class_of(qt->parse_chain(chain)));
        result = inflation(app.ctx, q, x);
    } else {
        BurnsideElt x = basis(t, t->class_of(t->parse_chain(chain)));
        result = deflation(app.ctx, q, x);
    }
    if (app.use_json()) {
        json out = app.header(*result.ctx);
        out["elements"] = json::array({element_json(result)});
        std::cout << out.dump(2) << "\n";
        return 0;
    }
    app.print_element(result);
    return 0;
}

int cmd_verify(App& app, unsigned seed, int instances) {
    auto results = verify_all(app.ctx, app.opt.n, seed, instances);
    bool all = true;
    if (app.use_json()) {
        json arr = json::array();
        for (const auto& r : results) {
            arr.push_back(json{{"check", r.name}, {"pass", r.pass}, {"detail", r.detail}});
            all = all && r.pass;
        }
        json out;
        out["group"] = app.opt.group_spec;
        out["n"] = app.opt.n;
        out["checks"] = arr;
        std::cout << out.dump(2) << "\n";
    } else {
        for (const auto& r : results) {
            std::cout << (r.pass ? "[pass] " : "[FAIL] ") << r.name << ": " << r.detail
                      << "\n";
            all = all && r.pass;
        }
    }
    return all ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App cli{"n-simplicial Burnside ring calculator"};
    cli.require_subcommand(1);

    App app;
    cli.add_option("--group", app.opt.group_spec, "group spec (C6, S4, D8, Q8, C2xS3, perm:...)")
        ->required();
    cli.add_option("--n", app.opt.n, "simplicial degree")->default_val(0);
    cli.add_option("--format", app.opt.format, "text or json")
        ->check(CLI::IsMember({"text", "json"}))
        ->default_val("text");
    cli.add_option("--max-order", app.opt.max_order, "group order cap");
    cli.add_option("--max-slices", app.opt.max_slices, "slice count cap");
    cli.add_option("--max-degree", app.opt.max_degree, "largest usable degree");

    auto* slices = cli.add_subcommand("slices", "list slice classes");
    auto* marks = cli.add_subcommand("marks", "table of marks with det check");
    auto* multiply_cmd = cli.add_subcommand("multiply", "product of two basis elements");
    std::string lhs, rhs;
    multiply_cmd->add_option("lhs", lhs, "first chain, e.g. \"1 <= 2a\"")->required();
    multiply_cmd->add_option("rhs", rhs, "second chain")->required();
    auto* mobius_cmd = cli.add_subcommand("mobius", "Mobius function of the slice poset");
    mobius_cmd->add_option("lower", lhs, "lower chain")->required();
    mobius_cmd->add_option("upper", rhs, "upper chain")->required();
    auto* idem = cli.add_subcommand("idempotents", "primitive idempotents of QB_n(G)");
    auto* spectrum_cmd = cli.add_subcommand("spectrum", "components of Spec B_n(G)");
    auto* obs = cli.add_subcommand("obs", "cokernel moduli and exact sequence");
    auto* face_cmd = cli.add_subcommand("face", "face operator on a basis element");
    auto* degen_cmd = cli.add_subcommand("degeneracy", "degeneracy operator");
    int op_index = 1;
    std::string chain;
    face_cmd->add_option("chain", chain, "basis chain")->required();
    face_cmd->add_option("-j,--index", op_index, "face index (1..n)")->required();
    degen_cmd->add_option("chain", chain, "basis chain")->required();
    degen_cmd->add_option("-i,--index", op_index, "degeneracy index (0..n)")->required();
    auto* restrict_cmd = cli.add_subcommand("restrict", "restriction to a subgroup");
    auto* induce_cmd = cli.add_subcommand("induce", "induction from a subgroup");
    std::string sub_name;
    restrict_cmd->add_option("--subgroup", sub_name, "subgroup class name")->required();
    restrict_cmd->add_option("chain", chain, "basis chain over G")->required();
    induce_cmd->add_option("--subgroup", sub_name, "subgroup class name")->required();
    induce_cmd->add_option("chain", chain, "basis chain over the subgroup")->required();
    auto* inflate_cmd = cli.add_subcommand("inflate", "inflation from a quotient");
    auto* deflate_cmd = cli.add_subcommand("deflate", "deflation to a quotient");
    inflate_cmd->add_option("--normal", sub_name, "normal subgroup class name")->required();
    inflate_cmd->add_option("chain", chain, "basis chain over G/N")->required();
    deflate_cmd->add_option("--normal", sub_name, "normal subgroup class name")->required();
    deflate_cmd->add_option("chain", chain, "basis chain over G")->required();
    auto* verify_cmd = cli.add_subcommand("verify", "run the invariant suite");
    unsigned seed = 1;
    int instances = 25;
    verify_cmd->add_option("--seed", seed, "random seed");
    verify_cmd->add_option("--instances", instances, "random simplex count");

    CLI11_PARSE(cli, argc, argv);

    try {
        app.init();
        if (slices->parsed())
            return cmd_slices(app);
        if (marks->parsed())
            return cmd_marks(app);
        if (multiply_cmd->parsed())
            return cmd_multiply(app, lhs, rhs);
        if (mobius_cmd->parsed())
            return cmd_mobius(app, lhs, rhs);
        if (idem->parsed())
            return cmd_idempotents(app);
        if (spectrum_cmd->parsed())
            return cmd_spectrum(app);
        if (obs->parsed())
            return cmd_obs(app);
        if (face_cmd->parsed())
            return cmd_face(app, chain, op_index);
        if (degen_cmd->parsed())
            return cmd_degeneracy(app, chain, op_index);
        if (restrict_cmd->parsed())
            return cmd_restrict_induce(app, sub_name, chain, true);
        if (induce_cmd->parsed())
            return cmd_restrict_induce(app, sub_name, chain, false);
        if (inflate_cmd->parsed())
            return cmd_inflate_deflate(app, sub_name, chain, true);
        if (deflate_cmd->parsed())
            return cmd_inflate_deflate(app, sub_name, chain, false);
        if (verify_cmd->parsed())
            return cmd_verify(app, seed, instances);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
