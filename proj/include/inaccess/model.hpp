#pragma once

#include <cstdint>
#include <set>
#include <stdexcept>
#include <vector>

#include "inaccess/access.hpp"

namespace inaccess {

// A model (D, d): D atoms, accessibility-depth d.
struct Model {
    std::int64_t dim = 1;    // D
    std::int64_t depth = 1;  // d

    Model(std::int64_t D, std::int64_t d) : dim(D), depth(d) {
        if (D < 1 || d < 1 || d > D) throw std::invalid_argument("Model: need 1 <= d <= D");
    }
    friend bool operator==(const Model& a, const Model& b) {
        return a.dim == b.dim && a.depth == b.depth;
    }
};

enum class ModelTag { Classical, Useless, Nontrivial };

struct ModelClass {
    ModelTag tag = ModelTag::Useless;
    std::int64_t m = 0;  // classical dimension: D for classical models, block count otherwise
};

// d = 1 recovers a classical model; at most one accessible block means the
// model carries no informative classical sub-lattice.
inline ModelClass classify(const Model& model) {
    if (model.depth == 1) return {ModelTag::Classical, model.dim};
    const std::int64_t blocks =
        (model.dim % model.depth == 0) ? model.dim / model.depth : model.dim / model.depth - 1;
    if (blocks <= 1) return {ModelTag::Useless, blocks};
    return {ModelTag::Nontrivial, blocks};
}

// Composition of two models: atoms are pairs, depths multiply. Atom (i, j)
// of the factors becomes atom i*D2 + j of the product, and accessible blocks
// of the factors stay accessible as cross-products.
struct ComposedModel {
    Model model;
    std::vector<std::vector<int>> blocks;  // inherited accessible level-(d1*d2) blocks

    static int pair_index(int i, int j, int D2) { return i * D2 + j; }
};

inline ComposedModel compose(const Model& m1, const Model& m2) {
    ComposedModel out{Model(m1.dim * m2.dim, m1.depth * m2.depth), {}};
    if (m1.dim > kMaxExplicitDim || m2.dim > kMaxExplicitDim) return out;  // blocks only at desk scale
    const auto b1 = ideal_blocks(static_cast<int>(m1.dim), static_cast<int>(m1.depth));
    const auto b2 = ideal_blocks(static_cast<int>(m2.dim), static_cast<int>(m2.depth));
    const int D2 = static_cast<int>(m2.dim);
    for (const Statement& x : b1) {
        for (const Statement& y : b2) {
            std::vector<int> block;
            for (int i : x.atom_indices())
                for (int j : y.atom_indices())
                    block.push_back(ComposedModel::pair_index(i, j, D2));
            out.blocks.push_back(std::move(block));
        }
    }
    return out;
}

// The inflation family: a classical model of dimension m maps to
// (m^(c+1), m^c) for c = 1, 2, ...
inline Model inflate(std::int64_t m, int c) {
    if (m < 2) throw std::invalid_argument("inflate: classical dimension must be >= 2");
    if (c < 1) throw std::invalid_argument("inflate: parameter c must be >= 1");
    std::int64_t depth = 1;
    for (int i = 0; i < c; ++i) depth *= m;
    return Model(depth * m, depth);
}

// All D such that the ideal configuration of (D, d) has exactly m accessible
// blocks at level d: {m*d} together with (m+1)*d + i for i = 1..d-1.
inline std::set<std::int64_t> allowed_inflations(std::int64_t m, std::int64_t d) {
    if (m < 1 || d < 1) throw std::invalid_argument("allowed_inflations: need m >= 1 and d >= 1");
    std::set<std::int64_t> out;
    out.insert(m * d);
    for (std::int64_t i = 1; i <= d - 1; ++i) out.insert((m + 1) * d + i);
    return out;
}

inline bool inflation_compatible_with_composition(std::int64_t m1, std::int64_t m2, int c) {
    const Model inflated_product = inflate(m1 * m2, c);
    const Model a = inflate(m1, c);
    const Model b = inflate(m2, c);
    return inflated_product == Model(a.dim * b.dim, a.depth * b.depth);
}

}  // namespace inaccess
