#include "topo/framed_link.hpp"

#include <set>

namespace topo {

std::optional<std::size_t> FramedLink::find(const std::string &label) const
{
    for (std::size_t i = 0; i < labels.size(); ++i)
        if (labels[i] == label) return i;
    return std::nullopt;
}

std::size_t FramedLink::index_of(const std::string &label) const
{
    auto i = find(label);
    if (!i) throw std::invalid_argument("no component named '" + label + "'");
    return *i;
}

void FramedLink::validate() const
{
    if (linking.rows() != labels.size() || linking.cols() != labels.size())
        throw std::invalid_argument("linking matrix shape does not match component count");
    if (!linking.is_symmetric()) throw std::invalid_argument("linking matrix not symmetric");
    std::set<std::string> seen;
    for (const auto &l : labels)
        if (!seen.insert(l).second) throw std::invalid_argument("duplicate label '" + l + "'");
}

FramedLink make_link(std::vector<std::string> labels, Matrix linking)
{
    FramedLink link{std::move(labels), std::move(linking)};
    link.validate();
    return link;
}

FramedLink chain_to_link(const PlumbingChain &chain)
{
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < chain.framings.size(); ++i)
        labels.push_back("S" + std::to_string(i + 1));
    return chain_to_link(chain, labels);
}

FramedLink chain_to_link(const PlumbingChain &chain, const std::vector<std::string> &labels)
{
    const std::size_t k = chain.framings.size();
    if (k == 0) throw std::invalid_argument("empty plumbing chain");
    if (labels.size() != k) throw std::invalid_argument("label count does not match chain length");
    Matrix m(k, k);
    for (std::size_t i = 0; i < k; ++i) {
        m(i, i) = chain.framings[i];
        if (i + 1 < k) m(i, i + 1) = m(i + 1, i) = 1;
    }
    return make_link(labels, std::move(m));
}

bool is_chain_link(const FramedLink &link, const Int &off_diagonal)
{
    const std::size_t k = link.size();
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j) {
            const Int want = (j == i + 1) ? off_diagonal : Int(0);
            if (link.lk(i, j) != want) return false;
        }
    return true;
}

FramedLink permuted(const FramedLink &link, const std::vector<std::size_t> &perm)
{
    const std::size_t k = link.size();
    if (perm.size() != k) throw std::invalid_argument("permutation size mismatch");
    std::vector<std::string> labels(k);
    Matrix m(k, k);
    for (std::size_t i = 0; i < k; ++i) {
        labels[i] = link.labels[perm[i]];
        for (std::size_t j = 0; j < k; ++j) m(i, j) = link.lk(perm[i], perm[j]);
    }
    return make_link(std::move(labels), std::move(m));
}

}  // namespace topo
