#include "topo/spin.hpp"

#include <sstream>
#include <stdexcept>

namespace topo {

std::string SpinStructure::to_string(const FramedLink &link) const
{
    std::ostringstream out;
    out << '{';
    bool first = true;
    for (std::size_t i = 0; i < members.size(); ++i) {
        if (!members[i]) continue;
        if (!first) out << ", ";
        out << link.labels[i];
        first = false;
    }
    out << '}';
    return out.str();
}

bool is_characteristic(const FramedLink &link, const SpinStructure &spin)
{
    const std::size_t n = link.size();
    if (spin.members.size() != n) return false;
    for (std::size_t i = 0; i < n; ++i) {
        Int sum = 0;  // lk(K_i, sublink), with lk(K,K) read as the framing
        for (std::size_t j = 0; j < n; ++j)
            if (spin.members[j]) sum += link.lk(i, j);
        if (mod_floor(link.framing(i) - sum, 2) != 0) return false;
    }
    return true;
}

std::vector<SpinStructure> characteristic_sublinks(const FramedLink &link)
{
    const std::size_t n = link.size();
    // Solve (linking mod 2) x = (framings mod 2) over GF(2).
    std::vector<std::vector<char>> a(n, std::vector<char>(n));
    std::vector<char> b(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            a[i][j] = static_cast<char>(mod_floor(link.lk(i, j), 2).convert_to<int>());
        b[i] = a[i][i];  // diagonal = framing
    }

    std::vector<std::size_t> pivot_col;
    std::size_t row = 0;
    for (std::size_t col = 0; col < n && row < n; ++col) {
        std::size_t p = row;
        while (p < n && !a[p][col]) ++p;
        if (p == n) continue;
        std::swap(a[p], a[row]);
        std::swap(b[p], b[row]);
        for (std::size_t i = 0; i < n; ++i) {
            if (i == row || !a[i][col]) continue;
            for (std::size_t j = 0; j < n; ++j) a[i][j] ^= a[row][j];
            b[i] ^= b[row];
        }
        pivot_col.push_back(col);
        ++row;
    }
    for (std::size_t i = row; i < n; ++i)
        if (b[i]) throw std::logic_error("characteristic-sublink system inconsistent (bad input)");

    std::vector<char> is_pivot(n, 0);
    for (std::size_t c : pivot_col) is_pivot[c] = 1;
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < n; ++c)
        if (!is_pivot[c]) free_cols.push_back(c);
    if (free_cols.size() > 20) throw std::logic_error("too many spin structures to enumerate");

    std::vector<SpinStructure> out;
    const std::size_t count = std::size_t(1) << free_cols.size();
    for (std::size_t mask = 0; mask < count; ++mask) {
        SpinStructure s;
        s.members.assign(n, 0);
        // Lexicographic enumeration: the first free variable is the most
        // significant bit.
        for (std::size_t k = 0; k < free_cols.size(); ++k)
            s.members[free_cols[k]] =
                static_cast<char>((mask >> (free_cols.size() - 1 - k)) & 1);
        for (std::size_t r = 0; r < pivot_col.size(); ++r) {
            char v = b[r];
            for (std::size_t c : free_cols) v ^= static_cast<char>(a[r][c] & s.members[c]);
            s.members[pivot_col[r]] = v;
        }
        if (!is_characteristic(link, s))
            throw std::logic_error("solver produced a non-characteristic sublink");
        out.push_back(std::move(s));
    }
    return out;
}

SpinStructure spin_from_labels(const FramedLink &link, const std::vector<std::string> &labels)
{
    SpinStructure s;
    s.members.assign(link.size(), 0);
    for (const auto &l : labels) s.members[link.index_of(l)] = 1;
    return s;
}

}  // namespace topo
