#ifndef MCS_POSET_HPP
#define MCS_POSET_HPP

#include "mcs/numeric.hpp"
#include "mcs/simplicial_complex.hpp"

#include <algorithm>
#include <string>
#include <vector>

namespace mcs {

/**
 * Finite poset on elements 0..n-1 with the order relation stored as a boolean
 * matrix. Reflexivity, antisymmetry and transitivity are checked on
 * construction.
 */
class FinitePoset {
public:
    FinitePoset(std::vector<std::vector<bool>> le, std::vector<std::string> labels)
        : le_(std::move(le)), labels_(std::move(labels))
    {
        const std::size_t n = le_.size();
        if (labels_.size() != n)
            throw Error("FinitePoset: label count mismatch");
        for (const auto& row : le_)
            if (row.size() != n)
                throw Error("FinitePoset: relation matrix is not square");
        for (std::size_t a = 0; a < n; ++a)
            if (!le_[a][a])
                throw Error("FinitePoset: relation is not reflexive");
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b) {
                if (a != b && le_[a][b] && le_[b][a])
                    throw Error("FinitePoset: relation is not antisymmetric");
                if (le_[a][b])
                    for (std::size_t c = 0; c < n; ++c)
                        if (le_[b][c] && !le_[a][c])
                            throw Error("FinitePoset: relation is not transitive");
            }
    }

    int size() const { return static_cast<int>(labels_.size()); }
    bool le(int a, int b) const
    {
        return le_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
    }
    const std::string& label(int a) const { return labels_[static_cast<std::size_t>(a)]; }
    const std::vector<std::string>& labels() const { return labels_; }

    // number of elements in a longest chain
    int longest_chain() const
    {
        const int n = size();
        std::vector<int> order(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i)
            order[static_cast<std::size_t>(i)] = i;
        // topological: sort by number of elements below
        std::vector<int> below(static_cast<std::size_t>(n), 0);
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                if (b != a && le(b, a))
                    ++below[static_cast<std::size_t>(a)];
        std::sort(order.begin(), order.end(),
                  [&](int a, int b) { return below[static_cast<std::size_t>(a)] < below[static_cast<std::size_t>(b)]; });
        std::vector<int> len(static_cast<std::size_t>(n), 1);
        int best = n == 0 ? 0 : 1;
        for (int idx = 0; idx < n; ++idx) {
            int a = order[static_cast<std::size_t>(idx)];
            for (int jdx = 0; jdx < idx; ++jdx) {
                int b = order[static_cast<std::size_t>(jdx)];
                if (b != a && le(b, a))
                    len[static_cast<std::size_t>(a)] =
                        std::max(len[static_cast<std::size_t>(a)], len[static_cast<std::size_t>(b)] + 1);
            }
            best = std::max(best, len[static_cast<std::size_t>(a)]);
        }
        return best;
    }

private:
    std::vector<std::vector<bool>> le_;
    std::vector<std::string> labels_;
};

struct FacePoset {
    FinitePoset poset;
    std::vector<Face> elements;  // element id -> face, sorted by (size, lex)
};

// Poset of nonempty faces ordered by inclusion; elements are enumerated
// deterministically by (cardinality, lex).
inline FacePoset face_poset(const SimplicialComplex& sc)
{
    std::vector<Face> faces = sc.sorted_faces();
    const std::size_t n = faces.size();
    std::vector<std::vector<bool>> le(n, std::vector<bool>(n, false));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            le[a][b] = std::includes(faces[b].begin(), faces[b].end(), faces[a].begin(), faces[a].end());
    std::vector<std::string> labels;
    labels.reserve(n);
    for (const auto& f : faces)
        labels.push_back(sc.face_label(f));
    return FacePoset{FinitePoset(std::move(le), std::move(labels)), std::move(faces)};
}

// chain 0 < 1 < ... < n-1, handy in tests
inline FinitePoset chain_poset(int n)
{
    std::vector<std::vector<bool>> le(static_cast<std::size_t>(n),
                                      std::vector<bool>(static_cast<std::size_t>(n), false));
    std::vector<std::string> labels;
    for (int a = 0; a < n; ++a) {
        labels.push_back(std::to_string(a + 1));
        for (int b = a; b < n; ++b)
            le[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = true;
    }
    return FinitePoset(std::move(le), std::move(labels));
}

inline FinitePoset antichain_poset(int n)
{
    std::vector<std::vector<bool>> le(static_cast<std::size_t>(n),
                                      std::vector<bool>(static_cast<std::size_t>(n), false));
    std::vector<std::string> labels;
    for (int a = 0; a < n; ++a) {
        labels.push_back(std::to_string(a + 1));
        le[static_cast<std::size_t>(a)][static_cast<std::size_t>(a)] = true;
    }
    return FinitePoset(std::move(le), std::move(labels));
}

}  // namespace mcs

#endif
