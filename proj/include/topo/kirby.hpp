#pragma once

#include "topo/framed_link.hpp"
#include "topo/homology.hpp"

#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace topo {

// A framed link together with homology classes tracked through moves. Each
// tracked class is a coefficient vector over the *current* components'
// meridians; names remember what the class originally was.
struct TrackedLink {
    FramedLink link;
    std::vector<std::string> class_names;
    std::vector<std::vector<Int>> classes;  // per name, coeffs over link components
    std::vector<char> l0;                   // surgered 1-handle flags

    H1Presentation h1() const;
    std::vector<Int> &class_of(const std::string &name);
};

TrackedLink tracked(FramedLink link);  // tracks every meridian, no l0

struct MoveError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct BlowUp {
    int sign;                   // framing of the new component, +1 or -1
    std::string new_label;
    std::vector<std::pair<std::string, Int>> multiplicities;  // lk with existing comps
};
struct BlowDown {
    std::string label;          // framing must be +1 or -1
};
struct Slide {
    std::string moving, over;
    int sign;
};
struct Surger1Handle {
    std::string label;          // becomes 0-framed, joins l0
};

using Move = std::variant<BlowUp, BlowDown, Slide, Surger1Handle>;

struct MoveScript {
    std::vector<Move> moves;
};

// Applies one move in place. Blow-down of c with framing e rewrites classes by
// the substitution m_c -> -e * sum_j lk(c,j) m_j; a slide of i over j adds
// sign * (class coeff of j) to the coeff of i in every tracked class.
void apply_move(TrackedLink &t, const Move &move);

// Replays a script; after every move checks that the boundary group order is
// unchanged and that the tracked classes transport along an isomorphism.
// Throws MoveError with the step index on any violation.
TrackedLink run_script(TrackedLink start, const MoveScript &script);

// One move per line: "blowup <+|-> <label> [<label> <mult>]...",
// "blowdown <label>", "slide <moving> <over> <+|->", "surger <label>".
MoveScript parse_script(const std::string &text);
std::string serialize_script(const MoveScript &script);

}  // namespace topo
