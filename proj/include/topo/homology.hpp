#pragma once

#include "topo/framed_link.hpp"
#include "topo/ints.hpp"

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace topo {

// Smith normal form U*A*V = D with U, V unimodular and D diagonal satisfying
// the divisibility chain d1 | d2 | ... (entries non-negative).
struct SNF {
    Matrix U, D, V;
};

// Pivot rule: minimal absolute value among nonzero entries of the remaining
// submatrix, ties broken in row-major order, so U and V are reproducible.
SNF smith_normal_form(const Matrix &A);

// An element of a finitely presented abelian group, stored both as a
// coefficient vector over the presentation's generators and in canonical
// invariant-factor coordinates (each reduced mod its factor).
struct GroupElement {
    std::vector<Int> coeffs;
    std::vector<Int> canonical;

    bool operator==(const GroupElement &o) const { return canonical == o.canonical; }
    bool operator!=(const GroupElement &o) const { return !(*this == o); }
    bool is_zero() const;
};

// Finitely presented abelian group: generators and a relation matrix with one
// row per relation. The SNF of the transposed relation matrix supplies the
// canonical coordinates.
class H1Presentation {
public:
    H1Presentation() = default;
    H1Presentation(std::vector<std::string> gens, Matrix relations);

    const std::vector<std::string> &gens() const { return gens_; }
    const Matrix &relations() const { return relations_; }
    const SNF &snf() const { return snf_; }

    // One entry per generator coordinate: the invariant factor (0 = free).
    const std::vector<Int> &factors() const { return factors_; }
    // Factors != 1, i.e. the nontrivial cyclic summands.
    std::vector<Int> invariant_factors() const;

    bool is_finite() const;
    Int order() const;  // throws std::logic_error when infinite
    bool is_cyclic() const;

    GroupElement reduce(std::vector<Int> coeffs) const;
    GroupElement generator(std::size_t i) const;
    GroupElement zero() const;
    GroupElement add(const GroupElement &a, const GroupElement &b) const;
    GroupElement scale(const Int &k, const GroupElement &e) const;

    // For a finite cyclic group: the coefficient c with e = c * gen, reduced
    // to [0, order). Empty when gen does not generate or e is outside <gen>.
    std::optional<Int> coeff_wrt(const GroupElement &e, std::size_t gen_index) const;

    std::string group_string() const;  // "Z/d1 (+) Z/d2 ...", "0" if trivial

private:
    std::vector<std::string> gens_;
    Matrix relations_;
    SNF snf_;                   // of relations^T
    std::vector<Int> factors_;  // length = #gens
};

// Rows of the linking matrix as relations, one per component; generators are
// the meridians, named after the component labels.
H1Presentation boundary_h1(const FramedLink &link);

GroupElement reduce_element(const H1Presentation &p, const GroupElement &e);

// A homomorphism given on generators of the source presentation.
struct GeneratorMap {
    H1Presentation src;
    H1Presentation dst;
    std::vector<std::vector<Int>> images;  // per src generator, coeffs over dst gens

    GroupElement apply(const GroupElement &e) const;  // needs e.coeffs over src gens
};

struct IsoVerdict {
    enum class Kind { Iso, NotWellDefined, NotBijective } kind;
    std::string witness;  // offending relation / missed summand, when not iso

    bool ok() const { return kind == Kind::Iso; }
};

// Checks that every source relation maps to zero and that the induced map on
// canonical forms is a bijection. Finite groups only.
IsoVerdict verify_iso(const GeneratorMap &map);

}  // namespace topo
