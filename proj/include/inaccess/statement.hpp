#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace inaccess {

// A statement over D mutually exclusive atoms, identified with the set of
// atoms whose disjunction it is. Meet, join and negation become intersection,
// union and complement of the atom sets; the level is the set cardinality,
// with bottom at level 0 and top at level D.
struct Statement {
    std::uint32_t atoms = 0;  // bit i set  <=>  atom i belongs to the statement
    int dim = 0;              // number of atoms D in the lattice

    Statement() = default;
    Statement(std::uint32_t atom_bits, int dimension) : atoms(atom_bits), dim(dimension) {
        if (dimension < 0 || dimension > 31)
            throw std::invalid_argument("Statement: dimension must be in [0, 31]");
        if ((std::uint64_t{atom_bits} >> dimension) != 0)
            throw std::invalid_argument("Statement: atom index out of range for dimension");
    }

    static Statement bottom(int dim) { return Statement(0u, dim); }
    static Statement top(int dim) {
        return Statement(dim == 0 ? 0u : (1u << dim) - 1u, dim);
    }
    static Statement atom(int index, int dim) {
        if (index < 0 || index >= dim) throw std::invalid_argument("Statement: bad atom index");
        return Statement(1u << index, dim);
    }
    static Statement from_atoms(const std::vector<int>& indices, int dim) {
        std::uint32_t bits = 0;
        for (int i : indices) {
            if (i < 0 || i >= dim) throw std::invalid_argument("Statement: bad atom index");
            bits |= 1u << i;
        }
        return Statement(bits, dim);
    }

    int level() const { return __builtin_popcount(atoms); }
    bool is_bottom() const { return atoms == 0; }
    bool is_top() const { return level() == dim; }
    bool contains_atom(int i) const { return (atoms >> i) & 1u; }

    std::vector<int> atom_indices() const {
        std::vector<int> out;
        for (int i = 0; i < dim; ++i)
            if (contains_atom(i)) out.push_back(i);
        return out;
    }

    // Node name used by the DOT export: atom indices joined by '|'.
    std::string name() const {
        std::string s;
        for (int i = 0; i < dim; ++i) {
            if (!contains_atom(i)) continue;
            if (!s.empty()) s += '|';
            s += std::to_string(i);
        }
        return s;
    }

    friend bool operator==(const Statement& a, const Statement& b) {
        return a.dim == b.dim && a.atoms == b.atoms;
    }
    friend bool operator!=(const Statement& a, const Statement& b) { return !(a == b); }
    friend bool operator<(const Statement& a, const Statement& b) {
        return a.dim != b.dim ? a.dim < b.dim : a.atoms < b.atoms;
    }
};

namespace detail {
inline void require_same_dim(const Statement& x, const Statement& y, const char* op) {
    if (x.dim != y.dim)
        throw std::invalid_argument(std::string(op) + ": statements have different dimensions");
}
}  // namespace detail

inline Statement meet(const Statement& x, const Statement& y) {
    detail::require_same_dim(x, y, "meet");
    return Statement(x.atoms & y.atoms, x.dim);
}

inline Statement join(const Statement& x, const Statement& y) {
    detail::require_same_dim(x, y, "join");
    return Statement(x.atoms | y.atoms, x.dim);
}

inline Statement negate(const Statement& x) {
    return Statement(Statement::top(x.dim).atoms & ~x.atoms, x.dim);
}

// x implies y  <=>  x ∧ y = x and x ∨ y = y, i.e. atom-set inclusion.
inline bool implies(const Statement& x, const Statement& y) {
    detail::require_same_dim(x, y, "implies");
    return (x.atoms & ~y.atoms) == 0;
}

// Number of distinct statements over D atoms, bottom and top included.
inline std::uint64_t statement_count(int dim) {
    if (dim < 0) throw std::invalid_argument("statement_count: negative dimension");
    return std::uint64_t{1} << dim;
}

// Truth is fixed by naming the single true atom; a statement is true exactly
// when it contains that atom. This reproduces the classical truth tables for
// meet, join and negation, and assigns false to bottom.
struct TruthAssignment {
    int true_atom = 0;
    int dim = 1;

    TruthAssignment(int atom_index, int dimension) : true_atom(atom_index), dim(dimension) {
        if (dimension < 1) throw std::invalid_argument("TruthAssignment: dimension must be >= 1");
        if (atom_index < 0 || atom_index >= dimension)
            throw std::invalid_argument("TruthAssignment: true atom out of range");
    }
};

inline bool truth_of(const TruthAssignment& t, const Statement& s) {
    if (s.dim != t.dim) throw std::invalid_argument("truth_of: dimension mismatch");
    return s.contains_atom(t.true_atom);
}

}  // namespace inaccess
