#include "topo/homology.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <sstream>

namespace topo {
namespace {

// Truncated quotient: |a - q*b| < |b|.
Int quot(const Int &a, const Int &b) { return a / b; }

Int egcd(const Int &a, const Int &b, Int &x, Int &y)
{
    if (b == 0) {
        x = (a < 0) ? -1 : 1;
        y = 0;
        return boost::multiprecision::abs(a);
    }
    Int x1, y1;
    Int g = egcd(b, a % b, x1, y1);
    x = y1;
    y = x1 - (a / b) * y1;
    return g;
}

}  // namespace

SNF smith_normal_form(const Matrix &A)
{
    const std::size_t r = A.rows(), c = A.cols();
    Matrix D = A;
    Matrix U = Matrix::identity(r), V = Matrix::identity(c);

    auto row_sub = [&](std::size_t i, std::size_t k, const Int &q) {
        if (q == 0) return;
        for (std::size_t j = 0; j < c; ++j) D(i, j) -= q * D(k, j);
        for (std::size_t j = 0; j < r; ++j) U(i, j) -= q * U(k, j);
    };
    auto col_sub = [&](std::size_t j, std::size_t k, const Int &q) {
        if (q == 0) return;
        for (std::size_t i = 0; i < r; ++i) D(i, j) -= q * D(i, k);
        for (std::size_t i = 0; i < c; ++i) V(i, j) -= q * V(i, k);
    };
    auto row_swap = [&](std::size_t i, std::size_t k) {
        if (i == k) return;
        for (std::size_t j = 0; j < c; ++j) std::swap(D(i, j), D(k, j));
        for (std::size_t j = 0; j < r; ++j) std::swap(U(i, j), U(k, j));
    };
    auto col_swap = [&](std::size_t j, std::size_t k) {
        if (j == k) return;
        for (std::size_t i = 0; i < r; ++i) std::swap(D(i, j), D(i, k));
        for (std::size_t i = 0; i < c; ++i) std::swap(V(i, j), V(i, k));
    };

    const std::size_t steps = std::min(r, c);
    for (std::size_t k = 0; k < steps; ++k) {
        // Pivot: minimal absolute value in the trailing submatrix, row-major
        // tie-break, so the transforms are reproducible.
        bool found = false;
        std::size_t pi = k, pj = k;
        Int best;
        for (std::size_t i = k; i < r; ++i)
            for (std::size_t j = k; j < c; ++j) {
                if (D(i, j) == 0) continue;
                Int v = boost::multiprecision::abs(D(i, j));
                if (!found || v < best) {
                    found = true;
                    best = v;
                    pi = i;
                    pj = j;
                }
            }
        if (!found) break;
        row_swap(k, pi);
        col_swap(k, pj);

        for (;;) {
            bool clean = true;
            for (std::size_t i = k + 1; i < r; ++i) {
                if (D(i, k) == 0) continue;
                row_sub(i, k, quot(D(i, k), D(k, k)));
                if (D(i, k) != 0) {
                    row_swap(k, i);  // smaller remainder becomes the pivot
                    clean = false;
                }
            }
            for (std::size_t j = k + 1; j < c; ++j) {
                if (D(k, j) == 0) continue;
                col_sub(j, k, quot(D(k, j), D(k, k)));
                if (D(k, j) != 0) {
                    col_swap(k, j);
                    clean = false;
                }
            }
            if (!clean) continue;

            // Enforce the divisibility chain: fold any non-multiple into the
            // pivot's row and restart the clearing loop.
            bool divides = true;
            for (std::size_t i = k + 1; i < r && divides; ++i)
                for (std::size_t j = k + 1; j < c && divides; ++j)
                    if (D(i, j) % D(k, k) != 0) {
                        row_sub(k, i, Int(-1));
                        divides = false;
                    }
            if (divides) break;
        }
        if (D(k, k) < 0) {
            for (std::size_t j = 0; j < c; ++j) D(k, j) = -D(k, j);
            for (std::size_t j = 0; j < r; ++j) U(k, j) = -U(k, j);
        }
    }
    return SNF{std::move(U), std::move(D), std::move(V)};
}

bool GroupElement::is_zero() const
{
    return std::all_of(canonical.begin(), canonical.end(), [](const Int &v) { return v == 0; });
}

H1Presentation::H1Presentation(std::vector<std::string> gens, Matrix relations)
    : gens_(std::move(gens)), relations_(std::move(relations))
{
    if (relations_.cols() != gens_.size())
        throw std::invalid_argument("relation matrix width must equal generator count");
    snf_ = smith_normal_form(relations_.transposed());
    factors_.resize(gens_.size());
    const std::size_t rank_bound = std::min(snf_.D.rows(), snf_.D.cols());
    for (std::size_t i = 0; i < gens_.size(); ++i)
        factors_[i] = (i < rank_bound) ? snf_.D(i, i) : Int(0);
}

std::vector<Int> H1Presentation::invariant_factors() const
{
    std::vector<Int> out;
    for (const Int &d : factors_)
        if (d != 1) out.push_back(d);
    return out;
}

bool H1Presentation::is_finite() const
{
    return std::all_of(factors_.begin(), factors_.end(), [](const Int &d) { return d != 0; });
}

Int H1Presentation::order() const
{
    if (!is_finite()) throw std::logic_error("order of an infinite group");
    Int n = 1;
    for (const Int &d : factors_) n *= d;
    return n;
}

bool H1Presentation::is_cyclic() const { return invariant_factors().size() <= 1; }

GroupElement H1Presentation::reduce(std::vector<Int> coeffs) const
{
    if (coeffs.size() != gens_.size()) throw std::invalid_argument("coefficient vector size mismatch");
    const std::size_t g = gens_.size();
    std::vector<Int> canonical(g);
    for (std::size_t i = 0; i < g; ++i) {
        Int y = 0;
        for (std::size_t j = 0; j < g; ++j) y += snf_.U(i, j) * coeffs[j];
        canonical[i] = (factors_[i] > 0) ? mod_floor(y, factors_[i]) : y;
    }
    return GroupElement{std::move(coeffs), std::move(canonical)};
}

GroupElement H1Presentation::generator(std::size_t i) const
{
    std::vector<Int> coeffs(gens_.size());
    coeffs.at(i) = 1;
    return reduce(std::move(coeffs));
}

GroupElement H1Presentation::zero() const { return reduce(std::vector<Int>(gens_.size())); }

GroupElement H1Presentation::add(const GroupElement &a, const GroupElement &b) const
{
    std::vector<Int> coeffs(gens_.size());
    for (std::size_t i = 0; i < coeffs.size(); ++i) coeffs[i] = a.coeffs.at(i) + b.coeffs.at(i);
    return reduce(std::move(coeffs));
}

GroupElement H1Presentation::scale(const Int &k, const GroupElement &e) const
{
    std::vector<Int> coeffs(gens_.size());
    for (std::size_t i = 0; i < coeffs.size(); ++i) coeffs[i] = k * e.coeffs.at(i);
    return reduce(std::move(coeffs));
}

std::optional<Int> H1Presentation::coeff_wrt(const GroupElement &e, std::size_t gen_index) const
{
    if (!is_finite() || !is_cyclic()) return std::nullopt;
    const Int n = order();
    if (n == 1) return Int(0);
    // The single nontrivial canonical coordinate carries the whole group.
    std::size_t pos = 0;
    for (std::size_t i = 0; i < factors_.size(); ++i)
        if (factors_[i] != 1) pos = i;
    GroupElement g = generator(gen_index);
    Int gc = g.canonical[pos], ec = reduce(e.coeffs).canonical[pos];
    Int x, y;
    Int d = egcd(gc, n, x, y);
    if (d != 1) return std::nullopt;  // the chosen generator does not generate
    return mod_floor(x * ec, n);
}

std::string H1Presentation::group_string() const
{
    std::vector<Int> inv = invariant_factors();
    if (inv.empty()) return "0";
    std::ostringstream out;
    for (std::size_t i = 0; i < inv.size(); ++i) {
        if (i) out << " ⊕ ";
        if (inv[i] == 0) out << "Z";
        else out << "Z/" << inv[i];
    }
    return out.str();
}

H1Presentation boundary_h1(const FramedLink &link)
{
    return H1Presentation(link.labels, link.linking);
}

GroupElement reduce_element(const H1Presentation &p, const GroupElement &e)
{
    return p.reduce(e.coeffs);
}

GroupElement GeneratorMap::apply(const GroupElement &e) const
{
    if (e.coeffs.size() != src.gens().size()) throw std::invalid_argument("element/source size mismatch");
    std::vector<Int> out(dst.gens().size());
    for (std::size_t i = 0; i < e.coeffs.size(); ++i) {
        if (e.coeffs[i] == 0) continue;
        const auto &img = images.at(i);
        for (std::size_t j = 0; j < out.size(); ++j) out[j] += e.coeffs[i] * img.at(j);
    }
    return dst.reduce(std::move(out));
}

IsoVerdict verify_iso(const GeneratorMap &map)
{
    if (!map.src.is_finite() || !map.dst.is_finite())
        throw std::logic_error("verify_iso handles finite groups only");

    // Well-defined: every source relation must map to zero.
    const Matrix &rel = map.src.relations();
    for (std::size_t rrow = 0; rrow < rel.rows(); ++rrow) {
        std::vector<Int> coeffs(map.src.gens().size());
        for (std::size_t j = 0; j < coeffs.size(); ++j) coeffs[j] = rel(rrow, j);
        GroupElement image = map.apply(map.src.reduce(coeffs));
        if (!image.is_zero())
            return IsoVerdict{IsoVerdict::Kind::NotWellDefined,
                              "relation " + std::to_string(rrow) + " maps to a nonzero element"};
    }

    if (map.src.order() != map.dst.order())
        return IsoVerdict{IsoVerdict::Kind::NotBijective, "group orders differ"};

    // Surjective: generator images plus the target's invariant factors must
    // span everything — the cokernel of the stacked matrix must vanish.
    const std::size_t gd = map.dst.gens().size();
    const std::size_t gs = map.src.gens().size();
    Matrix span(gd, gs + gd);
    for (std::size_t i = 0; i < gs; ++i) {
        GroupElement img = map.apply(map.src.generator(i));
        for (std::size_t rrow = 0; rrow < gd; ++rrow) span(rrow, i) = img.canonical[rrow];
    }
    for (std::size_t i = 0; i < gd; ++i) span(i, gs + i) = map.dst.factors()[i];
    SNF s = smith_normal_form(span);
    for (std::size_t i = 0; i < gd; ++i)
        if (s.D(i, i) != 1)
            return IsoVerdict{IsoVerdict::Kind::NotBijective, "generator images do not span the target"};

    // Surjective between finite groups of equal order is bijective.
    return IsoVerdict{IsoVerdict::Kind::Iso, ""};
}

}  // namespace topo
