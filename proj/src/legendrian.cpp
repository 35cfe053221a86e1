#include "topo/legendrian.hpp"

namespace topo {

void FrontData::validate() const
{
    if (left_up < 0 || left_down < 0 || right_up < 0 || right_down < 0 || handle_crossings < 0)
        throw InconsistentFront("negative count in front data");
    if (left_up + left_down != right_up + right_down)
        throw InconsistentFront("left and right cusp totals differ");
}

long long tb(const FrontData &front)
{
    front.validate();
    return front.writhe - (front.left_up + front.left_down);
}

long long rot(const FrontData &front)
{
    front.validate();
    // The two expressions for the rotation number must agree.
    if (front.left_down - front.right_up != front.right_down - front.left_up)
        throw InconsistentFront("cusp data inconsistent: the two rotation formulas disagree");
    return front.left_down - front.right_up + front.top_bottom;
}

long long stein_framing(const FrontData &front) { return tb(front) - 1; }

bool parity_ok(const FrontData &front)
{
    long long v = tb(front) + rot(front) + 1 - front.handle_crossings;
    return v % 2 == 0;
}

}  // namespace topo
