#pragma once

#include "topo/framed_link.hpp"

#include <string>
#include <vector>

namespace topo {

// A spin structure of the surgery boundary, encoded as a characteristic
// sublink: for every component K, framing(K) = lk(K, sublink) mod 2, with
// lk(K, K) read as the framing.
struct SpinStructure {
    std::vector<char> members;  // one flag per component of the link

    bool operator==(const SpinStructure &o) const { return members == o.members; }
    std::string to_string(const FramedLink &link) const;  // "{K1, K2}", "{}" if empty
};

// Checks the defining congruence directly (independent of the solver).
bool is_characteristic(const FramedLink &link, const SpinStructure &spin);

// All solutions of the mod-2 system (linking mod 2) x = (framings mod 2),
// enumerated in lexicographic order of the free variables. Throws
// std::logic_error when the system is inconsistent (bad input: every closed
// surgery diagram admits a characteristic sublink).
std::vector<SpinStructure> characteristic_sublinks(const FramedLink &link);

SpinStructure spin_from_labels(const FramedLink &link, const std::vector<std::string> &labels);

}  // namespace topo
