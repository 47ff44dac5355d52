#include "mfk/commands.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "mfk/specfile.hpp"
#include "mfk/syzygy.hpp"

namespace mfk {

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string row_text(const std::vector<RatExpr>& row) {
    std::string s = "[ ";
    for (size_t a = 0; a < row.size(); ++a) {
        if (a) s += "  ";
        s += row[a].to_string();
    }
    return s + " ]";
}

void cmd_check(const Frame& fr, std::ostream& out) {
    const SectionDiagnostics& d = fr.diagnostics();
    out << "r = " << d.r << "\n";
    out << "s = " << d.s << "\n";
    for (const auto& [k, rk] : d.ranks) out << "rank[" << k << "] = " << rk << "\n";
    out << "minimal_order = " << (d.minimal_order ? "yes" : "no") << "\n";
    out << "check: ok\n";
}

void cmd_prolong(const ActionSpecFile& spec, const std::string& name, int order,
                 std::ostream& out) {
    if (order < 0 || order > max_jet_order())
        throw ParseError("--order must lie in [0, " + std::to_string(max_jet_order()) +
                         "] (MFK_MAX_ORDER)");
    const Generator* g = nullptr;
    for (const Generator& cand : spec.generators)
        if (cand.name == name) g = &cand;
    if (!g) throw UnknownName("unknown generator '" + name + "'");
    JetContext ctx = spec.ctx();
    ProlongedGenerator pg = prolong(ctx, *g, order);
    for (int i = 1; i <= ctx.m; ++i)
        out << Indet::independent(i).to_string() << "\t" << pg.coeff_x(i).to_string() << "\n";
    for (int j = 1; j <= ctx.n; ++j)
        for (const MultiIndex& a : multi_indices_up_to(ctx.m, order))
            out << Indet::jet(j, a).to_string() << "\t" << pg.coeff_u(j, a).to_string() << "\n";
}

void cmd_mc(const Frame& fr, std::ostream& out) {
    const Matrix& k = fr.mc_matrix();
    if (k.size() == 1) {
        out << "K = " << row_text(k[0]) << "\n";
        return;
    }
    for (size_t i = 0; i < k.size(); ++i)
        out << "K[" << i + 1 << "] = " << row_text(k[i]) << "\n";
}

void cmd_comm(const Frame& fr, std::ostream& out) {
    int m = fr.ctx().m;
    for (int i = 1; i <= m; ++i)
        for (int j = i + 1; j <= m; ++j)
            for (int l = 1; l <= m; ++l)
                out << "L\t" << i << "," << j << "," << l << "\t"
                    << fr.iota_rules().reduce(fr.commutator_coeff(i, j, l)).to_string() << "\n";
}

void cmd_rewrite(const ActionSpecFile& spec, const Frame& fr, const std::string& target,
                 std::ostream& out) {
    ExprEnv env{spec.independents, spec.dependents, {}, false};
    RatExpr t = parse_expression(target, env);
    std::set<Indet> vs = t.vars();
    if (vs.size() != 1 || !vs.begin()->is_jet() || t != RatExpr::var(*vs.begin()))
        throw ParseError("--target must be a single jet coordinate like u[2,1]");
    Indet u = *vs.begin();
    if (u.alpha().order() > max_jet_order())
        throw ParseError("--target order exceeds " + std::to_string(max_jet_order()) +
                         " (MFK_MAX_ORDER)");
    MonoAlgebra alg(fr);
    out << Indet::inv(u).to_string() << " = "
        << alg.rewrite_to_normal(u.index(), u.alpha()).to_string() << "\n";
}

void cmd_edge(const Frame& fr, std::ostream& out) {
    GenSet edge = edge_invariants(fr);
    out << "minimal = " << (edge.minimal ? "yes" : "no") << "\n";
    for (const auto& [name, value] : edge.members)
        out << name << "\t" << value.to_string() << "\n";
}

int cmd_syz(const Frame& fr, bool verify, std::ostream& out, std::ostream& err) {
    MonoAlgebra alg(fr);
    std::vector<SyzygyRec> recs = gen_R(fr);
    for (SyzygyRec& rec : gen_S(alg)) recs.push_back(std::move(rec));
    for (SyzygyRec& rec : gen_T(alg)) recs.push_back(std::move(rec));
    for (const SyzygyRec& rec : recs) out << rec.dump_line() << "\n";
    if (!verify) return 0;
    int failures = 0;
    for (const SyzygyRec& rec : recs)
        if (!verify_zero(alg, rec)) {
            ++failures;
            err << "verification failed: " << rec.kind_string() << " " << rec.indices_string()
                << "\n";
        }
    if (failures) return 3;
    out << "verified " << recs.size() << " records\n";
    return 0;
}

} // namespace

int max_jet_order() {
    const char* env = std::getenv("MFK_MAX_ORDER");
    if (!env || !*env) return 12;
    try {
        int v = std::stoi(env);
        if (v < 1) throw std::out_of_range("nonpositive");
        return v;
    } catch (const std::exception&) {
        throw ParseError(std::string("MFK_MAX_ORDER is not a positive integer: '") + env + "'");
    }
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"moving-frame differential invariants engine"};
    app.require_subcommand(1);

    std::string file, gen_name, target;
    int order = 0;
    bool verify = false;
    auto with_file = [&](CLI::App* sub) {
        sub->add_option("spec", file, "action spec file")->required();
        return sub;
    };
    CLI::App* check = with_file(app.add_subcommand("check", "validate the cross-section"));
    CLI::App* prolong_cmd =
        with_file(app.add_subcommand("prolong", "prolong one generator to a jet order"));
    prolong_cmd->add_option("--gen", gen_name, "generator name")->required();
    prolong_cmd->add_option("--order", order, "jet order")->required();
    CLI::App* mc = with_file(app.add_subcommand("mc", "print the Maurer-Cartan matrix K"));
    CLI::App* comm = with_file(app.add_subcommand("comm", "print the commutator coefficients"));
    CLI::App* rewrite =
        with_file(app.add_subcommand("rewrite", "rewrite one invariantized jet coordinate"));
    rewrite->add_option("--target", target, "jet coordinate, e.g. u[2,1]")->required();
    CLI::App* edge = with_file(app.add_subcommand("edge", "print the edge invariants"));
    CLI::App* syz = with_file(app.add_subcommand("syz", "dump the syzygy records R/S/T"));
    syz->add_flag("--verify", verify, "check every record reduces to zero");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 1;
    }

    try {
        ActionSpecFile spec = parse_action_spec(read_file(file));
        if (prolong_cmd->parsed()) {
            install_names(spec);
            cmd_prolong(spec, gen_name, order, out);
            return 0;
        }
        Frame fr = build_frame(spec);
        if (check->parsed())
            cmd_check(fr, out);
        else if (mc->parsed())
            cmd_mc(fr, out);
        else if (comm->parsed())
            cmd_comm(fr, out);
        else if (rewrite->parsed())
            cmd_rewrite(spec, fr, target, out);
        else if (edge->parsed())
            cmd_edge(fr, out);
        else if (syz->parsed())
            return cmd_syz(fr, verify, out, err);
        return 0;
    } catch (const ParseError& e) {
        err << "input error: " << e.what() << "\n";
        return 1;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

} // namespace mfk
