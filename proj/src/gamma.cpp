#include "topo/gamma.hpp"

#include <sstream>

namespace topo {

void SteinSurgeryDiagram::validate() const
{
    link.validate();
    if (rot.size() != link.size() || l0.size() != link.size())
        throw std::invalid_argument("rot/l0 data does not match component count");
    for (std::size_t i = 0; i < link.size(); ++i)
        if (l0[i] && (link.framing(i) != 0 || rot[i] != 0))
            throw std::invalid_argument("surgered 1-handle '" + link.labels[i] +
                                        "' must have framing 0 and rot 0");
}

GroupElement gamma(const SteinSurgeryDiagram &diagram, const SpinStructure &spin)
{
    diagram.validate();
    if (!is_characteristic(diagram.link, spin))
        throw std::invalid_argument("spin structure is not characteristic for this diagram");

    const std::size_t n = diagram.link.size();
    std::vector<Int> coeffs(n);
    for (std::size_t i = 0; i < n; ++i) {
        // rot(K_i) + lk(K_i, L0 + sublink); components in both sets count twice.
        Int twice = diagram.rot[i];
        for (std::size_t j = 0; j < n; ++j) {
            if (diagram.l0[j]) twice += diagram.link.lk(i, j);
            if (spin.members[j]) twice += diagram.link.lk(i, j);
        }
        if (mod_floor(twice, 2) != 0)
            throw GammaIntegralityError("odd pairing at component '" + diagram.link.labels[i] +
                                        "': rot/spin data inconsistent");
        coeffs[i] = twice / 2;
    }
    return boundary_h1(diagram.link).reduce(std::move(coeffs));
}

GammaResult gamma_all(const SteinSurgeryDiagram &diagram)
{
    GammaResult out;
    out.h1 = boundary_h1(diagram.link);
    for (const SpinStructure &s : characteristic_sublinks(diagram.link))
        out.values.emplace_back(s, gamma(diagram, s));
    return out;
}

SpinMatch match_spins(const GammaResult &src, const GammaResult &dst, const GeneratorMap &iso)
{
    SpinMatch out;
    std::vector<int> used(dst.values.size(), 0);
    for (std::size_t i = 0; i < src.values.size(); ++i) {
        GroupElement image = iso.apply(src.values[i].second);
        std::vector<std::size_t> hits;
        for (std::size_t j = 0; j < dst.values.size(); ++j)
            if (dst.values[j].second == image) hits.push_back(j);
        if (hits.empty()) {
            out.detail = "source spin " + std::to_string(i) + " has no matching target value";
            return out;
        }
        if (hits.size() > 1) {
            out.ambiguous = true;
            out.detail = "source spin " + std::to_string(i) + " matches several target spins";
            return out;
        }
        if (used[hits[0]]++) {
            out.detail = "two source spins map to the same target spin";
            return out;
        }
        out.pairing.emplace_back(i, hits[0]);
    }
    if (out.pairing.size() != dst.values.size()) {
        out.detail = "spin-structure counts differ";
        return out;
    }
    out.ok = true;
    return out;
}

CompareReport compare_gamma(const GammaResult &a, const GammaResult &b, const GeneratorMap &iso)
{
    CompareReport report;
    report.match = match_spins(a, b, iso);
    // Dummy links for printing are not available here; print indices and
    // canonical coordinates instead.
    for (std::size_t i = 0; i < a.values.size(); ++i) {
        std::ostringstream line;
        line << "spin[" << i << "]: ";
        auto it = std::find_if(report.match.pairing.begin(), report.match.pairing.end(),
                               [&](const auto &p) { return p.first == i; });
        if (it != report.match.pairing.end())
            line << "value corresponds to target spin[" << it->second << "]";
        else
            line << "no corresponding target value";
        report.lines.push_back(line.str());
    }
    return report;
}

}  // namespace topo
