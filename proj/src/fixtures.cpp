#include "topo/fixtures.hpp"

#include <fstream>
#include <sstream>

namespace topo {
namespace {

std::string read_file(const std::string &path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open fixture file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void require_n(const Int &n)
{
    if (n < 2) throw std::invalid_argument("fixtures require n >= 2");
}

}  // namespace

std::string bn_text(const Int &n)
{
    require_n(n);
    std::ostringstream out;
    out << "# Rational ball boundary: 0-framed former 1-handle K1, "
           "2-handle K2\n";
    out << "comp K1 0\n";
    out << "comp K2 " << Int(-(n + 1)) << "\n";
    out << "lk K1 K2 " << Int(-n) << "\n";
    out << "rot K2 1\n";
    out << "l0 K1\n";
    return out.str();
}

std::string cn_text(const Int &n)
{
    require_n(n);
    std::ostringstream out;
    out << "# Linear plumbing boundary: chain W1..W" << (n - 1) << "\n";
    for (Int i = 1; i <= n - 1; ++i)
        out << "comp W" << i << ' ' << (i == 1 ? Int(-(n + 2)) : Int(-2)) << "\n";
    for (Int i = 1; i <= n - 2; ++i)
        out << "lk W" << i << " W" << (i + 1) << " 1\n";
    out << "rot W1 " << Int(-n) << "\n";
    return out.str();
}

std::string lens_text(const Int &n)
{
    require_n(n);
    std::ostringstream out;
    out << "# Lens-space surgery chain U0..U" << (n + 1) << "\n";
    out << "comp U0 1\n";
    out << "comp U1 -1\n";
    for (Int i = 2; i <= n; ++i) out << "comp U" << i << " -2\n";
    out << "comp U" << (n + 1) << ' ' << Int(-n) << "\n";
    for (Int i = 0; i <= n; ++i) out << "lk U" << i << " U" << (i + 1) << " 1\n";
    return out.str();
}

std::string ball_to_chain_script_text(const Int &n)
{
    require_n(n);
    std::ostringstream out;
    out << "# Ball boundary to plumbing chain\n";
    out << "slide K1 K2 -\n";
    for (Int k = 1; k <= n - 2; ++k) {
        std::string prev = (k == 1) ? std::string("K2") : "E" + Int(k - 1).str();
        out << "blowup - E" << k << ' ' << prev << " -1 K1 -1\n";
    }
    out << "blowdown K1\n";
    return out.str();
}

std::string ball_to_lens_script_text(const Int &n)
{
    require_n(n);
    std::ostringstream out;
    out << "# Ball boundary to the (negated) lens chain\n";
    for (Int k = 1; k <= n; ++k) out << "blowup + P" << k << " K1 -1 K2 -1\n";
    for (Int k = n; k >= 2; --k) out << "slide P" << k << " P" << (k - 1) << " -\n";
    out << "blowdown K2\n";
    return out.str();
}

SteinSurgeryDiagram diagram_from_text(const std::string &text)
{
    ParsedDiagram parsed = parse_diagram(text);
    SteinSurgeryDiagram d;
    d.link = std::move(parsed.link);
    d.rot.assign(d.link.size(), 0);
    d.l0.assign(d.link.size(), 0);
    for (const auto &[label, r] : parsed.rot) d.rot[d.link.index_of(label)] = r;
    for (const auto &label : parsed.l0) d.l0[d.link.index_of(label)] = 1;
    d.validate();
    return d;
}

namespace {

std::string fixture_text(const std::optional<std::string> &dir, const std::string &name,
                         const std::string &generated)
{
    if (dir) return read_file(*dir + "/" + name);
    return generated;
}

std::string n_str(const Int &n)
{
    return n.str();
}

}  // namespace

SteinSurgeryDiagram FixtureProvider::bn(const Int &n) const
{
    return diagram_from_text(fixture_text(dir, "bn_" + n_str(n) + ".link", bn_text(n)));
}

SteinSurgeryDiagram FixtureProvider::cn(const Int &n) const
{
    return diagram_from_text(fixture_text(dir, "cn_" + n_str(n) + ".link", cn_text(n)));
}

SteinSurgeryDiagram FixtureProvider::lens(const Int &n) const
{
    return diagram_from_text(fixture_text(dir, "lens_" + n_str(n) + ".link", lens_text(n)));
}

MoveScript FixtureProvider::ball_to_lens_script(const Int &n) const
{
    return parse_script(
        fixture_text(dir, "ball_to_lens_" + n_str(n) + ".moves", ball_to_lens_script_text(n)));
}

MoveScript FixtureProvider::ball_to_chain_script(const Int &n) const
{
    return parse_script(
        fixture_text(dir, "ball_to_chain_" + n_str(n) + ".moves", ball_to_chain_script_text(n)));
}

GeneratorMap mu_lambda_map(const Int &n)
{
    FixtureProvider fx;
    H1Presentation src = boundary_h1(fx.bn(n).link);
    H1Presentation dst = boundary_h1(fx.cn(n).link);
    std::vector<std::vector<Int>> images(2, std::vector<Int>(dst.gens().size()));
    images[0][0] = n + 1;  // mu1 -> (n+1) lambda1
    images[1][0] = -n;     // mu2 -> -n lambda1
    return GeneratorMap{std::move(src), std::move(dst), std::move(images)};
}

GeneratorMap mu_nu_map(const Int &n)
{
    FixtureProvider fx;
    H1Presentation src = boundary_h1(fx.bn(n).link);
    H1Presentation dst = boundary_h1(fx.lens(n).link);
    const std::size_t last = dst.gens().size() - 1;  // U_{n+1}
    std::vector<std::vector<Int>> images(2, std::vector<Int>(dst.gens().size()));
    images[0][last] = 1;   // mu1 -> nu_{n+1}
    images[1][1] = 1;      // mu2 -> nu1 - nu_{n+1}
    images[1][last] = -1;
    return GeneratorMap{std::move(src), std::move(dst), std::move(images)};
}

GammaResult lens_gamma_fixture(const Int &n)
{
    FixtureProvider fx;
    FramedLink link = fx.lens(n).link;
    GammaResult out;
    out.h1 = boundary_h1(link);
    GroupElement nu1 = out.h1.generator(1);

    auto value = [&](const Int &c) { return out.h1.scale(c, nu1); };
    std::vector<SpinStructure> spins = characteristic_sublinks(link);

    if (n % 2 != 0) {
        if (spins.size() != 1) throw std::logic_error("odd n: expected a unique spin structure");
        out.values.emplace_back(spins[0], value((n * n - n) / 2));
        return out;
    }

    // Even n: {U0} carries (n^2-n)/2, the odd-index sublink (2n^2-n)/2.
    SpinStructure t1 = spin_from_labels(link, {"U0"});
    std::vector<std::string> odd_labels;
    for (Int i = 1; i <= n + 1; i += 2) odd_labels.push_back("U" + i.str());
    SpinStructure t2 = spin_from_labels(link, odd_labels);
    for (const SpinStructure &s : spins) {
        if (s == t1) out.values.emplace_back(s, value((n * n - n) / 2));
        else if (s == t2) out.values.emplace_back(s, value((2 * n * n - n) / 2));
        else throw std::logic_error("unexpected spin structure on the lens chain");
    }
    if (out.values.size() != 2) throw std::logic_error("even n: expected two spin structures");
    return out;
}

std::vector<std::string> discrepancy_notes()
{
    return {
        "lens chain, even n, odd-index spin structure: the literature states the value "
        "(n/2)*nu1, but the identification chain and the direct alternating-sum "
        "recomputation both give -(n/2)*nu1 = (2n^2-n)/2*nu1; the latter is used here "
        "and the difference is reported as a warning, never a failure.",
        "stereographic radial formulas: the stated denominator (r+1)^2 for the action "
        "coordinate fails the sphere constraint x^2 + 2*rho = a^2; (r^2+1)^2 satisfies "
        "it exactly and reproduces the target contact form, so it is used here.",
        "collar model with q > 1: the closed form lists x = -(q/n)*I while the general "
        "formula with the linear angle profile gives -(q^2/n)*I; these agree only for "
        "q = 1 (the case the construction uses). Both are implemented; the q > 1 gap "
        "is reported, not resolved.",
    };
}

}  // namespace topo
