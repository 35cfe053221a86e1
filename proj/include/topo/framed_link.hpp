#pragma once

#include "topo/ints.hpp"

#include <optional>
#include <string>
#include <vector>

namespace topo {

// A framed link presented by its symmetric linking matrix. Diagonal entries
// are the framings; off-diagonal entries are pairwise linking numbers.
struct FramedLink {
    std::vector<std::string> labels;
    Matrix linking;  // square, symmetric, diagonal = framings

    std::size_t size() const { return labels.size(); }
    const Int &framing(std::size_t i) const { return linking(i, i); }
    Int &lk(std::size_t i, std::size_t j) { return linking(i, j); }
    const Int &lk(std::size_t i, std::size_t j) const { return linking(i, j); }

    std::optional<std::size_t> find(const std::string &label) const;
    std::size_t index_of(const std::string &label) const;  // throws if absent

    // Checks symmetry and label uniqueness; throws std::invalid_argument.
    void validate() const;
};

FramedLink make_link(std::vector<std::string> labels, Matrix linking);

// A linear plumbing: consecutive components link once, all other pairs are
// unlinked.
struct PlumbingChain {
    std::vector<Int> framings;
};

// Expands a plumbing chain into a framed link. Labels default to S1, S2, ...
FramedLink chain_to_link(const PlumbingChain &chain);
FramedLink chain_to_link(const PlumbingChain &chain, const std::vector<std::string> &labels);

// True when the linking matrix is a linear chain with the given off-diagonal
// value on the super/sub diagonal and zeros elsewhere.
bool is_chain_link(const FramedLink &link, const Int &off_diagonal);

FramedLink permuted(const FramedLink &link, const std::vector<std::size_t> &perm);

}  // namespace topo
