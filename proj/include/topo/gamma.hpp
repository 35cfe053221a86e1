#pragma once

#include "topo/framed_link.hpp"
#include "topo/homology.hpp"
#include "topo/spin.hpp"

#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace topo {

// A surgered Stein diagram: framed link with per-component rotation numbers
// and the set of former 1-handles (0-framed, rot 0).
struct SteinSurgeryDiagram {
    FramedLink link;
    std::vector<Int> rot;          // one per component
    std::vector<char> l0;          // one flag per component

    void validate() const;         // l0 members have framing 0 and rot 0
};

struct GammaIntegralityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// The invariant of the boundary 2-plane field for one spin structure:
// sum_i c_i * mu_i with c_i = (rot(K_i) + lk(K_i, L0 + sublink)) / 2,
// reduced in H1 of the boundary.
GroupElement gamma(const SteinSurgeryDiagram &diagram, const SpinStructure &spin);

struct GammaResult {
    H1Presentation h1;
    std::vector<std::pair<SpinStructure, GroupElement>> values;  // solver order
};

GammaResult gamma_all(const SteinSurgeryDiagram &diagram);

// Pairs each source spin structure with the unique target spin structure
// carrying the corresponding value under the identification.
struct SpinMatch {
    bool ok = false;
    bool ambiguous = false;
    std::vector<std::pair<std::size_t, std::size_t>> pairing;  // (src idx, dst idx)
    std::string detail;
};

SpinMatch match_spins(const GammaResult &src, const GammaResult &dst, const GeneratorMap &iso);

struct CompareReport {
    SpinMatch match;
    std::vector<std::string> lines;  // one human-readable line per source spin
    bool full_match() const { return match.ok; }
};

CompareReport compare_gamma(const GammaResult &a, const GammaResult &b, const GeneratorMap &iso);

}  // namespace topo
