#include "topo/continued_fraction.hpp"
#include "topo/fixtures.hpp"
#include "topo/lagrangian.hpp"
#include "topo/parser.hpp"
#include "topo/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>

using json = nlohmann::ordered_json;
using namespace topo;

namespace {

struct Options {
    std::string space = "bn";
    long long n = 2;
    bool as_json = false;
    std::string fixtures_dir;
};

FixtureProvider provider(const Options &opt)
{
    FixtureProvider fx;
    if (!opt.fixtures_dir.empty()) fx.dir = opt.fixtures_dir;
    return fx;
}

SteinSurgeryDiagram space_diagram(const FixtureProvider &fx, const std::string &space, const Int &n)
{
    if (space == "bn") return fx.bn(n);
    if (space == "cn") return fx.cn(n);
    if (space == "lens") return fx.lens(n);
    throw CLI::ValidationError("--space must be bn, cn, or lens");
}

std::string preferred_generator(const std::string &space)
{
    if (space == "bn") return "μ1";
    if (space == "cn") return "λ1";
    return "ν1";
}

std::size_t preferred_index(const std::string &space)
{
    return space == "lens" ? 1 : 0;  // U1's meridian for the lens chain
}

std::vector<std::string> spin_labels(const SpinStructure &s, const FramedLink &link)
{
    std::vector<std::string> out;
    for (std::size_t i = 0; i < s.members.size(); ++i)
        if (s.members[i]) out.push_back(link.labels[i]);
    return out;
}

int cmd_cf(const Options &opt, long long p, long long q)
{
    ContinuedFraction cf = neg_cf_expand(p, q);
    Rat v = cf_value(cf);
    if (opt.as_json) {
        json out{{"schema", 1}, {"p", p}, {"q", q}};
        json coeffs = json::array();
        for (const Int &c : cf.coefficients) coeffs.push_back(c.str());
        out["coefficients"] = coeffs;
        out["value"] = v.str();
        std::cout << out.dump(2) << '\n';
        return 0;
    }
    std::cout << '[';
    for (std::size_t i = 0; i < cf.coefficients.size(); ++i)
        std::cout << (i ? ", " : "") << cf.coefficients[i];
    std::cout << "] = " << v << '\n';
    return 0;
}

int cmd_h1(const Options &opt)
{
    FixtureProvider fx = provider(opt);
    H1Presentation h1 = boundary_h1(space_diagram(fx, opt.space, opt.n).link);
    if (opt.as_json) {
        json out{{"schema", 1}, {"space", opt.space}, {"n", opt.n}, {"group", h1.group_string()}};
        json factors = json::array();
        for (const Int &d : h1.invariant_factors()) factors.push_back(d.str());
        out["invariant_factors"] = factors;
        std::cout << out.dump(2) << '\n';
        return 0;
    }
    std::cout << h1.group_string() << '\n';
    return 0;
}

int cmd_spin(const Options &opt)
{
    FixtureProvider fx = provider(opt);
    FramedLink link = space_diagram(fx, opt.space, opt.n).link;
    std::vector<SpinStructure> spins = characteristic_sublinks(link);
    if (opt.as_json) {
        json out{{"schema", 1}, {"space", opt.space}, {"n", opt.n}};
        json list = json::array();
        for (const auto &s : spins) list.push_back(spin_labels(s, link));
        out["spin_structures"] = list;
        std::cout << out.dump(2) << '\n';
        return 0;
    }
    for (const auto &s : spins) std::cout << s.to_string(link) << '\n';
    return 0;
}

int cmd_gamma(const Options &opt)
{
    FixtureProvider fx = provider(opt);
    GammaResult result = opt.space == "lens" ? lens_gamma_fixture(opt.n)
                                             : gamma_all(space_diagram(fx, opt.space, opt.n));
    FramedLink link = space_diagram(fx, opt.space, opt.n).link;
    const std::size_t gen = preferred_index(opt.space);
    const std::string gen_name = preferred_generator(opt.space);

    std::vector<std::string> warnings;
    if (opt.space == "lens") warnings = discrepancy_notes();

    if (opt.as_json) {
        json out{{"schema", 1},
                 {"space", opt.space},
                 {"n", opt.n},
                 {"order", result.h1.order().str()}};
        json values = json::array();
        for (const auto &[spin, value] : result.values) {
            auto coeff = result.h1.coeff_wrt(value, gen);
            values.push_back(json{{"spin", spin_labels(spin, link)},
                                  {"coeff", coeff ? coeff->str() : "?"},
                                  {"generator", gen_name}});
        }
        out["values"] = values;
        if (!warnings.empty()) out["warnings"] = warnings;
        std::cout << out.dump(2) << '\n';
        return 0;
    }
    std::cout << result.h1.group_string();
    for (const auto &[spin, value] : result.values) {
        auto coeff = result.h1.coeff_wrt(value, gen);
        std::cout << "; spin " << spin.to_string(link) << ": "
                  << (coeff ? coeff->str() : "?") << "·" << gen_name;
    }
    std::cout << '\n';
    for (const auto &w : warnings) std::cerr << "warning: " << w << '\n';
    return 0;
}

int cmd_kirby(const Options &opt, const std::string &script_name)
{
    FixtureProvider fx = provider(opt);
    MoveScript script = script_name == "ball_to_lens" ? fx.ball_to_lens_script(opt.n)
                                                      : fx.ball_to_chain_script(opt.n);
    TrackedLink end = run_script(tracked(fx.bn(opt.n).link), script);
    H1Presentation h1 = end.h1();
    if (opt.as_json) {
        json out{{"schema", 1}, {"script", script_name}, {"n", opt.n},
                 {"endpoint", serialize_link(end.link)}, {"group", h1.group_string()}};
        json classes = json::object();
        for (std::size_t i = 0; i < end.class_names.size(); ++i) {
            json v = json::array();
            for (const Int &c : end.classes[i]) v.push_back(c.str());
            classes[end.class_names[i]] = v;
        }
        out["classes"] = classes;
        std::cout << out.dump(2) << '\n';
        return 0;
    }
    std::cout << serialize_link(end.link);
    std::cout << "group: " << h1.group_string() << '\n';
    for (std::size_t i = 0; i < end.class_names.size(); ++i) {
        std::cout << "class " << end.class_names[i] << " =";
        for (std::size_t j = 0; j < end.classes[i].size(); ++j)
            std::cout << ' ' << end.classes[i][j] << "·m(" << end.link.labels[j] << ')';
        std::cout << '\n';
    }
    return 0;
}

int cmd_symcheck(const Options &opt, const std::string &check, long long q,
                 const std::string &psi_name, double h)
{
    using namespace num;
    json out{{"schema", 1}, {"check", check}};
    bool ok = true;

    if (check == "lagrangian") {
        ImmersionModel m{int(opt.n), int(q), psi_by_name(psi_name)};
        double sharp = lagrangian_defect(
            [&](double t, double I) { return sigma_sharp(m.n, m.q, t, I); }, m, h);
        double general =
            lagrangian_defect([&](double t, double I) { return sigma_general(m, t, I); }, m, h);
        ok = sharp < 1e-9 && general < 1e-6;
        out["sharp_defect"] = sharp;
        out["general_defect"] = general;
    } else if (check == "flow") {
        Box4 box;
        json per = json::object();
        for (const auto &f : f_catalog()) {
            Map4 phi = [&f](const Point4 &p) { return flow_phi(FlowModel{f, 1.0}, p); };
            double sd = symplecto_defect(phi, box, h);
            double fd = flow_eq_defect(f, 0.5, box, h);
            ok = ok && sd < 1e-6 && fd < 1e-6;
            per[f.name] = json{{"symplectic", sd}, {"flow_equation", fd}};
        }
        out["defects"] = per;
    } else if (check == "cover") {
        ImmersionModel m{int(opt.n), int(q), psi_by_name(psi_name)};
        double d = cover_identity_defect(m, h);
        ok = d < 1e-6;
        out["cover_defect"] = d;
        json windings = json::array();
        for (double alpha : {0.0, 0.25, 0.5, 0.75, 1.0})
            windings.push_back(cover_winding(m, alpha, 0.1));
        out["windings"] = windings;
    } else if (check == "legendrian") {
        double d = legendrian_defect(int(opt.n), 0.01);
        ok = d < 1e-12;
        out["legendrian_defect"] = d;
    } else if (check == "stereo") {
        double d = stereo_identity_defect(1.0);
        double s = sphere_constraint_defect(1.0);
        ok = d < 1e-10 && s < 1e-12;
        out["stereo_defect"] = d;
        out["sphere_constraint_defect"] = s;
    } else if (check == "sharp") {
        // Closed-form vs general collar with the linear angle profile; the
        // two disagree by a factor of q unless q = 1.
        ImmersionModel m{int(opt.n), int(q), psi_by_name("linear")};
        double gap = 0.0;
        for (int i = 0; i <= m.grid_i; ++i) {
            double I = m.eps * i / m.grid_i;
            gap = std::max(gap, std::abs(sigma_general(m, 1.0, I).x - sigma_sharp(m.n, m.q, 1.0, I).x));
        }
        out["closed_form_gap"] = gap;
        out["note"] = "the closed form and the general formula agree only for q = 1";
        ok = (q == 1) ? gap < 1e-12 : true;
    } else {
        throw CLI::ValidationError("unknown --check '" + check + "'");
    }

    out["ok"] = ok;
    if (opt.as_json) std::cout << out.dump(2) << '\n';
    else {
        for (const auto &[key, value] : out.items())
            if (key != "schema") std::cout << key << ": " << value.dump() << '\n';
    }
    return ok ? 0 : 1;
}

int cmd_verify(const Options &opt, const std::string &range)
{
    auto dots = range.find("..");
    if (dots == std::string::npos) throw CLI::ValidationError("--n-range must look like A..B");
    Int lo(range.substr(0, dots)), hi(range.substr(dots + 2));
    if (lo < 2 || hi < lo) throw CLI::ValidationError("--n-range must satisfy 2 <= A <= B");

    FixtureProvider fx = provider(opt);
    bool all_ok = true;
    json table = json::array();
    for (Int n = lo; n <= hi; ++n) {
        for (const CheckResult &r : run_checks_for_n(fx, n)) {
            all_ok = all_ok && r.passed;
            if (opt.as_json)
                table.push_back(json{{"n", n.str()}, {"check", r.name}, {"passed", r.passed},
                                     {"detail", r.detail}});
            else
                std::cout << (r.passed ? "[PASS] " : "[FAIL] ") << "n=" << n << ' ' << r.name
                          << (r.passed ? "" : ": " + r.detail) << '\n';
        }
    }
    for (const CheckResult &r : run_numeric_checks()) {
        all_ok = all_ok && r.passed;
        if (opt.as_json)
            table.push_back(json{{"check", r.name}, {"passed", r.passed}, {"detail", r.detail}});
        else
            std::cout << (r.passed ? "[PASS] " : "[FAIL] ") << r.name
                      << (r.passed ? "" : ": " + r.detail) << '\n';
    }
    if (opt.as_json) {
        json out{{"schema", 1}, {"results", table}, {"ok", all_ok}};
        std::cout << out.dump(2) << '\n';
    } else {
        std::cout << (all_ok ? "all checks passed" : "some checks FAILED") << '\n';
    }
    for (const auto &w : discrepancy_notes()) std::cerr << "note: " << w << '\n';
    return all_ok ? 0 : 1;
}

int cmd_fixture_emit(const std::string &dirname, long long n_max)
{
    namespace fs = std::filesystem;
    fs::create_directories(dirname);
    auto write = [&](const std::string &name, const std::string &text) {
        std::ofstream out(dirname + "/" + name, std::ios::binary);
        out << text;
    };
    for (Int n = 2; n <= n_max; ++n) {
        write("bn_" + n.str() + ".link", bn_text(n));
        write("cn_" + n.str() + ".link", cn_text(n));
        write("lens_" + n.str() + ".link", lens_text(n));
        write("ball_to_chain_" + n.str() + ".moves", ball_to_chain_script_text(n));
        write("ball_to_lens_" + n.str() + ".moves", ball_to_lens_script_text(n));
    }
    std::cout << "wrote fixtures for n = 2.." << n_max << " to " << dirname << '\n';
    return 0;
}

}  // namespace

int main(int argc, char **argv)
{
    CLI::App app{"invariants of rational-blow-up boundaries: homology, spin structures, "
                 "2-plane-field data, move replay, and coordinate-formula checks"};
    app.require_subcommand(1);

    Options opt;
    app.add_flag("--json", opt.as_json, "structured output (schema 1)");
    app.add_option("--fixtures", opt.fixtures_dir, "directory overriding the built-in fixtures");

    long long p = 0, q_cf = 0;
    auto *cf = app.add_subcommand("cf", "negative continued-fraction expansion of -p/q");
    cf->add_option("--p", p)->required();
    cf->add_option("--q", q_cf)->required();

    auto add_space = [&](CLI::App *cmd) {
        cmd->add_option("--space", opt.space, "bn | cn | lens")
            ->check(CLI::IsMember({"bn", "cn", "lens"}));
        cmd->add_option("--n", opt.n)->check(CLI::Range(2LL, 1000LL))->required();
    };
    auto *h1 = app.add_subcommand("h1", "first homology of the surgery boundary");
    add_space(h1);
    auto *spin = app.add_subcommand("spin", "characteristic sublinks / spin structures");
    add_space(spin);
    auto *gamma_cmd = app.add_subcommand("gamma", "2-plane-field invariant per spin structure");
    add_space(gamma_cmd);

    std::string script_name = "ball_to_chain";
    auto *kirby = app.add_subcommand("kirby", "replay a move script with tracked classes");
    kirby->add_option("--script", script_name, "ball_to_chain | ball_to_lens")
        ->check(CLI::IsMember({"ball_to_chain", "ball_to_lens"}));
    kirby->add_option("--n", opt.n)->check(CLI::Range(2LL, 1000LL))->required();

    std::string check = "lagrangian", psi_name = "sin";
    long long q_sym = 1;
    double h = 1e-5;
    auto *symcheck = app.add_subcommand("symcheck", "numeric coordinate-identity checks");
    symcheck->add_option("--check", check, "lagrangian | flow | cover | legendrian | stereo | sharp")
        ->required();
    symcheck->add_option("--n", opt.n)->check(CLI::Range(2LL, 64LL));
    symcheck->add_option("--q", q_sym);
    symcheck->add_option("--psi", psi_name, "linear | sin | sin03");
    symcheck->add_option("--step", h, "finite-difference step");

    std::string range;
    auto *verify = app.add_subcommand("verify", "run the whole check battery over a range of n");
    verify->add_option("--n-range", range, "A..B with A >= 2")->required();

    std::string emit_dir = "fixtures";
    long long n_max = 12;
    auto *emit = app.add_subcommand("fixture-emit", "write the fixture data files");
    emit->add_option("--dir", emit_dir);
    emit->add_option("--n-max", n_max)->check(CLI::Range(2LL, 1000LL));

    // let global flags (--json, --fixtures) appear after the subcommand too
    for (CLI::App *sub : app.get_subcommands([](const CLI::App *) { return true; }))
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (cf->parsed()) return cmd_cf(opt, p, q_cf);
        if (h1->parsed()) return cmd_h1(opt);
        if (spin->parsed()) return cmd_spin(opt);
        if (gamma_cmd->parsed()) return cmd_gamma(opt);
        if (kirby->parsed()) return cmd_kirby(opt, script_name);
        if (symcheck->parsed()) return cmd_symcheck(opt, check, q_sym, psi_name, h);
        if (verify->parsed()) return cmd_verify(opt, range);
        if (emit->parsed()) return cmd_fixture_emit(emit_dir, n_max);
    } catch (const CLI::ValidationError &e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument &e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}
