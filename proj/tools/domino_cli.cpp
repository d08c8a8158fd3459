// Command-line front end: shape statistics, tableau enumeration, the
// growth-diagram correspondences, sign imbalance, the F/W weighted sums,
// and the identity verifier.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <domino/domino.hpp>

namespace {

using namespace domino;
using nlohmann::json;

void emit(const std::string& format, const json& j, const std::string& text) {
    if (format == "json") std::cout << j.dump(2) << "\n";
    else std::cout << text << "\n";
}

void dump_diagram(const std::string& path, const GrowthDiagram& g) {
    if (path.empty()) return;
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot open '" + path + "' for writing");
    out << json(g).dump(2) << "\n";
}

std::string report_text(const IdentityReport& r) {
    std::string out = r.identity + " [" + r.params.str() + "] " + (r.equal ? "equal" : "UNEQUAL");
    out += "  lhs = " + r.lhs.str() + "  rhs = " + r.rhs.str() + "  (" + std::to_string(r.millis) + " ms)";
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    using namespace domino;
    using nlohmann::json;

    CLI::App app{"exact combinatorics of domino tableaux, growth diagrams, and sign imbalance"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags like --format may follow the verb
    std::string format = "text";
    app.add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();

    std::string arg_shape, arg_alpha, arg_u, arg_v, arg_p, arg_q, arg_matrix, arg_rules = "domino", arg_kind = "sdt";
    std::string arg_convention = "relative", arg_dump, arg_identity;
    long long arg_n = 0;
    int bound_scale = 1;
    bool arg_symmetric = false;

    CLI::App* cmd_core = app.add_subcommand("core", "2-core of a partition");
    cmd_core->add_option("partition", arg_shape, "partition, e.g. 4,3,1")->required();

    CLI::App* cmd_stats = app.add_subcommand("stats", "cell statistics v/h/d of a skew or reversed shape");
    cmd_stats->add_option("shape", arg_shape, "shape, e.g. 4,3,1/2 or 2,2")->required();

    CLI::App* cmd_tableaux = app.add_subcommand("tableaux", "enumerate standard (domino) tableaux of a shape");
    cmd_tableaux->add_option("shape", arg_shape)->required();
    cmd_tableaux->add_option("--kind", arg_kind, "syt or sdt")->check(CLI::IsMember({"syt", "sdt"}))
        ->capture_default_str();

    CLI::App* cmd_spin = app.add_subcommand("spin-poly", "spin generating polynomial of a shape's domino tableaux");
    cmd_spin->add_option("shape", arg_shape)->required();

    CLI::App* cmd_imb = app.add_subcommand("imbalance", "sign imbalance of a skew or reversed shape");
    cmd_imb->add_option("shape", arg_shape)->required();
    cmd_imb->add_option("--convention", arg_convention)->check(CLI::IsMember({"relative", "book"}))
        ->capture_default_str();

    CLI::App* cmd_fpoly = app.add_subcommand("fpoly", "weighted imbalance sum F_n over shapes above/below alpha");
    cmd_fpoly->add_option("--alpha", arg_alpha, "base partition")->required();
    cmd_fpoly->add_option("--n", arg_n, "index n of F_n (negative sums below alpha)")->required();

    CLI::App* cmd_wpoly = app.add_subcommand("wpoly", "weighted spin sum W_n over shapes above/below alpha");
    cmd_wpoly->add_option("--alpha", arg_alpha, "base partition")->required();
    cmd_wpoly->add_option("--n", arg_n, "index n of W_n (negative sums below alpha)")->required();

    auto add_corr_options = [&](CLI::App* c, bool with_v) {
        c->add_option("--u", arg_u, "top boundary tableau as a partition chain, e.g. 0:2:2,2")->required();
        if (with_v) c->add_option("--v", arg_v, "left boundary tableau as a partition chain")->required();
        c->add_option("--matrix", arg_matrix, "matrix rows separated by ';', e.g. '0 1; -1 0'")->required();
        c->add_option("--dump-diagram", arg_dump, "write the filled growth diagram as JSON to this path");
    };
    CLI::App* cmd_phi = app.add_subcommand("phi", "domino correspondence (U, V, M) -> (P, Q)");
    add_corr_options(cmd_phi, true);
    CLI::App* cmd_rsphi = app.add_subcommand("rs-phi", "cell correspondence (U, V, M) -> (P, Q)");
    add_corr_options(cmd_rsphi, true);
    CLI::App* cmd_phisym = app.add_subcommand("phi-sym", "symmetric domino correspondence (U, M) -> P");
    add_corr_options(cmd_phisym, false);

    CLI::App* cmd_inv = app.add_subcommand("inverse", "invert a correspondence from (P, Q) or symmetric P");
    cmd_inv->add_option("--p", arg_p, "bottom tableau as a partition chain")->required();
    cmd_inv->add_option("--q", arg_q, "right tableau as a partition chain");
    cmd_inv->add_option("--rules", arg_rules, "domino or rs")->check(CLI::IsMember({"domino", "rs"}))
        ->capture_default_str();
    cmd_inv->add_flag("--symmetric", arg_symmetric, "invert the symmetric domino correspondence (needs only --p)");
    cmd_inv->add_option("--dump-diagram", arg_dump, "write the reconstructed growth diagram as JSON to this path");

    CLI::App* cmd_verify = app.add_subcommand("verify", "check one identity at a parameter point");
    cmd_verify->add_option("identity", arg_identity, "registry name, e.g. eq1, fnk_odd, sjss")->required();
    long long p_n = 0, p_m = 0, p_k = 0, p_j = 0, p_size = 0, p_order = 0;
    std::string p_alpha, p_beta;
    CLI::Option* o_n = cmd_verify->add_option("--n", p_n);
    CLI::Option* o_m = cmd_verify->add_option("--m", p_m);
    CLI::Option* o_k = cmd_verify->add_option("--k", p_k);
    CLI::Option* o_j = cmd_verify->add_option("--j", p_j);
    CLI::Option* o_size = cmd_verify->add_option("--size", p_size);
    CLI::Option* o_order = cmd_verify->add_option("--order", p_order, "series truncation order");
    CLI::Option* o_alpha = cmd_verify->add_option("--alpha", p_alpha);
    CLI::Option* o_beta = cmd_verify->add_option("--beta", p_beta);
    cmd_verify->add_option("--bound-scale", bound_scale, "stretch the registry's parameter bounds")
        ->check(CLI::PositiveNumber);

    CLI::App* cmd_all = app.add_subcommand("verify-all", "run every identity over its default parameter sweep");
    cmd_all->add_option("--bound-scale", bound_scale, "stretch bounds and sweeps")->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n\n" << app.help() << "\n";
        return 2;
    }

    try {
        if (*cmd_core) {
            Partition p = Partition::parse(arg_shape);
            Partition c = two_core(p);
            emit(format, json{{"partition", p}, {"core", c}}, c.str());
        } else if (*cmd_stats) {
            SkewShape s = SkewShape::parse(arg_shape);
            ShapeStats st = s.stats();
            emit(format, json{{"shape", s}, {"size", st.size}, {"v", st.v}, {"h", st.h}, {"d", st.d}},
                 "size=" + std::to_string(st.size) + " v=" + std::to_string(st.v) + " h=" + std::to_string(st.h) +
                     " d=" + std::to_string(st.d));
        } else if (*cmd_tableaux) {
            SkewShape s = SkewShape::parse(arg_shape);
            TableauKind kind = arg_kind == "syt" ? TableauKind::syt : TableauKind::sdt;
            std::vector<ChainTableau> ts = enumerate_tableaux(s, kind);
            std::string text;
            for (const ChainTableau& t : ts) text += t.rows_str() + "  " + t.chain_str() + "\n";
            text += "count=" + std::to_string(ts.size());
            emit(format, json{{"shape", s}, {"kind", arg_kind}, {"count", ts.size()}, {"tableaux", ts}}, text);
        } else if (*cmd_spin) {
            SkewShape s = SkewShape::parse(arg_shape);
            LaurentPoly f = spin_polynomial(s);
            emit(format, json{{"shape", s}, {"poly", f}}, f.str());
        } else if (*cmd_imb) {
            SkewShape s = SkewShape::parse(arg_shape);
            SignConvention conv = arg_convention == "book" ? SignConvention::book : SignConvention::relative;
            BigInt v = sign_imbalance(s, conv);
            emit(format, json{{"shape", s}, {"convention", arg_convention}, {"imbalance", v.str()}}, v.str());
        } else if (*cmd_fpoly) {
            LaurentPoly f = F_poly(Partition::parse(arg_alpha), static_cast<int>(arg_n));
            emit(format, json{{"alpha", Partition::parse(arg_alpha)}, {"n", arg_n}, {"poly", f}}, f.str());
        } else if (*cmd_wpoly) {
            LaurentPoly w = weighted_sum_W(Partition::parse(arg_alpha), static_cast<int>(arg_n));
            emit(format, json{{"alpha", Partition::parse(arg_alpha)}, {"n", arg_n}, {"poly", w}}, w.str());
        } else if (*cmd_phi || *cmd_rsphi) {
            TableauKind kind = *cmd_phi ? TableauKind::sdt : TableauKind::syt;
            ChainTableau u = ChainTableau::parse(kind, arg_u), v = ChainTableau::parse(kind, arg_v);
            IntMatrix m = IntMatrix::parse(arg_matrix);
            CorrespondenceResult r = *cmd_phi ? phi(u, v, m) : rs_phi(u, v, m);
            dump_diagram(arg_dump, r.diagram);
            emit(format, json{{"p", r.p}, {"q", r.q}},
                 "P: " + r.p.rows_str() + "  " + r.p.chain_str() + "\nQ: " + r.q.rows_str() + "  " + r.q.chain_str());
        } else if (*cmd_phisym) {
            ChainTableau u = ChainTableau::parse(TableauKind::sdt, arg_u);
            SymmetricResult r = phi_sym(u, IntMatrix::parse(arg_matrix));
            dump_diagram(arg_dump, r.diagram);
            emit(format, json{{"p", r.p}}, "P: " + r.p.rows_str() + "  " + r.p.chain_str());
        } else if (*cmd_inv) {
            if (arg_symmetric) {
                SymmetricInverse r = phi_sym_inverse(ChainTableau::parse(TableauKind::sdt, arg_p));
                dump_diagram(arg_dump, r.diagram);
                emit(format, json{{"u", r.u}, {"matrix", r.matrix}},
                     "U: " + r.u.rows_str() + "  " + r.u.chain_str() + "\nM: " + r.matrix.str());
            } else {
                if (arg_q.empty()) throw CLI::RequiredError("--q (or --symmetric)");
                TableauKind kind = arg_rules == "rs" ? TableauKind::syt : TableauKind::sdt;
                ChainTableau p = ChainTableau::parse(kind, arg_p), q = ChainTableau::parse(kind, arg_q);
                CorrespondenceInverse r = arg_rules == "rs" ? rs_phi_inverse(p, q) : phi_inverse(p, q);
                dump_diagram(arg_dump, r.diagram);
                emit(format, json{{"u", r.u}, {"v", r.v}, {"matrix", r.matrix}},
                     "U: " + r.u.rows_str() + "  " + r.u.chain_str() + "\nV: " + r.v.rows_str() + "  " +
                         r.v.chain_str() + "\nM: " + r.matrix.str());
            }
        } else if (*cmd_verify) {
            Params params;
            if (o_n->count()) params.set("n", p_n);
            if (o_m->count()) params.set("m", p_m);
            if (o_k->count()) params.set("k", p_k);
            if (o_j->count()) params.set("j", p_j);
            if (o_size->count()) params.set("size", p_size);
            if (o_order->count()) params.set("order", p_order);
            if (o_alpha->count()) params.set("alpha", Partition::parse(p_alpha));
            if (o_beta->count()) params.set("beta", Partition::parse(p_beta));
            IdentityReport r = verify_identity(arg_identity, params, bound_scale);
            emit(format, json(r), report_text(r));
            return r.equal ? 0 : 1;
        } else if (*cmd_all) {
            bool all_equal = true;
            for (const IdentityEntry& e : identity_registry())
                for (const IdentityReport& r : verify_sweep(e.name, bound_scale)) {
                    all_equal = all_equal && r.equal;
                    emit(format, json(r), report_text(r));
                }
            return all_equal ? 0 : 1;
        }
    } catch (const CLI::Error& e) {
        std::cerr << e.what() << "\n\n" << app.help() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n\n" << app.help() << "\n";
        return 2;
    }
    return 0;
}
