#include "topo/continued_fraction.hpp"

#include <boost/multiprecision/cpp_int.hpp>

namespace topo {

Rat cf_value(const ContinuedFraction &cf)
{
    if (cf.coefficients.empty()) throw MalformedContinuedFraction("empty continued fraction");
    Rat value = cf.coefficients.back();
    for (auto it = cf.coefficients.rbegin() + 1; it != cf.coefficients.rend(); ++it) {
        if (value == 0) throw MalformedContinuedFraction("division by zero during evaluation");
        value = Rat(*it) - 1 / value;
    }
    return value;
}

ContinuedFraction neg_cf_expand(const Int &p, const Int &q)
{
    if (!(q > 0 && q < p)) throw std::invalid_argument("neg_cf_expand requires 0 < q < p");
    if (boost::multiprecision::gcd(p, q) != 1)
        throw std::invalid_argument("neg_cf_expand requires gcd(p, q) = 1");

    // Expand p/q = b1 - 1/(p'/q') with b1 = ceil(p/q) >= 2, then negate every
    // coefficient so the result evaluates to -p/q (the surgery convention).
    ContinuedFraction cf;
    Int a = p, b = q;
    while (b > 0) {
        Int b1 = (a + b - 1) / b;  // ceil(a/b), a,b > 0
        cf.coefficients.push_back(-b1);
        Int next_a = b, next_b = b1 * b - a;
        a = next_a;
        b = next_b;
    }
    return cf;
}

}  // namespace topo
