#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "inaccess/statement.hpp"

namespace inaccess {

enum class Access : std::uint8_t { Inaccessible = 0, Accessible = 1 };

// Explicit label maps are kept for every one of the 2^D statements; 2^20
// labels is about 1 MiB and keeps exhaustive admissibility checks tractable.
inline constexpr int kMaxExplicitDim = 20;

// Total accessibility labeling of a lattice with D atoms.
class AccessAssignment {
public:
    explicit AccessAssignment(int dim, Access fill = Access::Inaccessible)
        : dim_(dim) {
        if (dim < 0 || dim > kMaxExplicitDim)
            throw std::invalid_argument("AccessAssignment: dimension exceeds explicit-map limit");
        labels_.assign(std::size_t{1} << dim, static_cast<std::uint8_t>(fill));
    }

    int dim() const { return dim_; }
    std::size_t size() const { return labels_.size(); }

    Access label(const Statement& s) const {
        check(s);
        return static_cast<Access>(labels_[s.atoms]);
    }
    Access label_bits(std::uint32_t atoms) const { return static_cast<Access>(labels_[atoms]); }

    void set(const Statement& s, Access a) {
        check(s);
        labels_[s.atoms] = static_cast<std::uint8_t>(a);
    }
    void set_bits(std::uint32_t atoms, Access a) { labels_[atoms] = static_cast<std::uint8_t>(a); }

    bool accessible(const Statement& s) const { return label(s) == Access::Accessible; }

    std::vector<std::uint32_t> accessible_set() const {
        std::vector<std::uint32_t> out;
        for (std::uint32_t b = 0; b < labels_.size(); ++b)
            if (labels_[b]) out.push_back(b);
        return out;
    }

private:
    void check(const Statement& s) const {
        if (s.dim != dim_) throw std::invalid_argument("AccessAssignment: dimension mismatch");
    }

    int dim_;
    std::vector<std::uint8_t> labels_;
};

// A lattice with an accessibility-depth and a concrete labeling.
struct Configuration {
    int dim = 0;    // atom count D
    int depth = 1;  // accessibility-depth d, statements of level in (0, d) are never accessible
    AccessAssignment access;

    Configuration(int D, int d) : dim(D), depth(d), access(D) {
        if (d < 1 || d > D) throw std::invalid_argument("Configuration: depth must satisfy 1 <= d <= D");
    }
};

struct AdmissibilityReport {
    bool ok = true;
    std::vector<std::string> violations;
};

namespace detail {

inline std::string stmt_name(std::uint32_t bits, int dim) {
    Statement s(bits, dim);
    if (s.is_bottom()) return "bot";
    if (s.is_top()) return "top";
    return "{" + s.name() + "}";
}

// A-closure check via the subalgebra characterization: together with the
// negation rule, a set closed under meet and join is exactly the set of
// unions of blocks of a partition of the atoms (the cells). Used when the
// accessible set is too large for pairwise testing; cell(i) below is the meet
// of all accessible statements containing atom i.
inline void check_closure_large(const AccessAssignment& acc, AdmissibilityReport& rep) {
    const int D = acc.dim();
    const std::uint32_t top = Statement::top(D).atoms;
    const std::vector<std::uint32_t> acc_set = acc.accessible_set();

    std::vector<std::uint32_t> cell(static_cast<std::size_t>(D), top);
    for (std::uint32_t a : acc_set)
        for (int i = 0; i < D; ++i)
            if ((a >> i) & 1u) cell[i] &= a;

    int n_cells = 0;
    for (int i = 0; i < D; ++i) {
        const std::uint32_t c = cell[i];
        if (acc.label_bits(c) != Access::Accessible) {
            rep.ok = false;
            rep.violations.push_back("closure: " + stmt_name(c, D) +
                                     " is a meet of accessible statements but is not accessible");
            return;
        }
        for (int j = 0; j < D; ++j) {
            if ((cell[j] & c) != 0 && cell[j] != c) {
                rep.ok = false;
                rep.violations.push_back("closure: accessible set is not generated by a partition");
                return;
            }
        }
        if (i == __builtin_ctz(c)) ++n_cells;  // count each cell at its smallest atom
    }
    for (std::uint32_t a : acc_set) {
        std::uint32_t covered = 0;
        for (int i = 0; i < D; ++i)
            if ((a >> i) & 1u) covered |= cell[i];
        if (covered != a) {
            rep.ok = false;
            rep.violations.push_back("closure: " + stmt_name(a, D) +
                                     " is not a union of minimal accessible statements");
            return;
        }
    }
    if (acc_set.size() != (std::size_t{1} << n_cells)) {
        rep.ok = false;
        rep.violations.push_back("closure: accessible set is not closed under join");
    }
}

}  // namespace detail

// Checks the three admissibility rules on an explicit labeling:
// negation preserves the label, accessibility is closed under meet and join,
// and no statement of level strictly between 0 and d is accessible.
inline AdmissibilityReport is_admissible_access(const Configuration& cfg) {
    AdmissibilityReport rep;
    const int D = cfg.dim;
    const std::uint32_t top = Statement::top(D).atoms;
    const std::size_t n = std::size_t{1} << D;

    for (std::uint32_t b = 0; b < n; ++b) {
        const std::uint32_t nb = top & ~b;
        if (cfg.access.label_bits(b) != cfg.access.label_bits(nb) && b < nb) {
            rep.ok = false;
            rep.violations.push_back("negation: " + detail::stmt_name(b, D) + " and " +
                                     detail::stmt_name(nb, D) + " carry different labels");
        }
        const int lvl = __builtin_popcount(b);
        if (lvl > 0 && lvl < cfg.depth && cfg.access.label_bits(b) == Access::Accessible) {
            rep.ok = false;
            rep.violations.push_back("depth: " + detail::stmt_name(b, D) + " at level " +
                                     std::to_string(lvl) + " < d is accessible");
        }
    }

    const std::vector<std::uint32_t> acc_set = cfg.access.accessible_set();
    if (acc_set.size() <= 512) {
        for (std::size_t i = 0; i < acc_set.size(); ++i) {
            for (std::size_t j = i + 1; j < acc_set.size(); ++j) {
                const std::uint32_t m = acc_set[i] & acc_set[j];
                const std::uint32_t u = acc_set[i] | acc_set[j];
                if (cfg.access.label_bits(m) != Access::Accessible) {
                    rep.ok = false;
                    rep.violations.push_back("closure: meet of " + detail::stmt_name(acc_set[i], D) +
                                             " and " + detail::stmt_name(acc_set[j], D) + " = " +
                                             detail::stmt_name(m, D) + " is not accessible");
                }
                if (cfg.access.label_bits(u) != Access::Accessible) {
                    rep.ok = false;
                    rep.violations.push_back("closure: join of " + detail::stmt_name(acc_set[i], D) +
                                             " and " + detail::stmt_name(acc_set[j], D) + " = " +
                                             detail::stmt_name(u, D) + " is not accessible");
                }
                if (rep.violations.size() > 64) return rep;  // enough witnesses
            }
        }
    } else {
        detail::check_closure_large(cfg.access, rep);
    }
    return rep;
}

// Number of accessible level-d statements in an ideal configuration:
// D/d when d divides D, floor(D/d) - 1 otherwise.
inline int ideal_block_count(int D, int d) {
    if (d < 1 || d > D) throw std::invalid_argument("ideal_block_count: need 1 <= d <= D");
    return (D % d == 0) ? D / d : D / d - 1;
}

// Canonical choice of accessible level-d blocks: consecutive atom ranges
// {0..d-1}, {d..2d-1}, ... Any other ideal configuration is an atom
// permutation of this one.
inline std::vector<Statement> ideal_blocks(int D, int d) {
    std::vector<Statement> blocks;
    const int m = ideal_block_count(D, d);
    for (int k = 0; k < m; ++k) {
        std::uint32_t bits = 0;
        for (int i = k * d; i < (k + 1) * d; ++i) bits |= 1u << i;
        blocks.emplace_back(bits, D);
    }
    return blocks;
}

// Labels the Boolean closure of a statement family accessible and everything
// else inaccessible. The closure is the subalgebra generated by the family:
// its cells are the nonempty intersections of generators and complements, and
// the accessible set is every union of cells. This is the smallest labeling
// containing the family and top that the propagation rules allow, so a family
// is jointly accessible in some admissible configuration exactly when this
// one is admissible. For pairwise-disjoint blocks the cells are the blocks
// plus the residual atoms.
inline Configuration configuration_from_blocks(int D, int d, const std::vector<Statement>& blocks) {
    Configuration cfg(D, d);
    std::vector<std::uint32_t> cells = {Statement::top(D).atoms};
    for (const Statement& b : blocks) {
        if (b.dim != D) throw std::invalid_argument("configuration_from_blocks: dimension mismatch");
        std::vector<std::uint32_t> next;
        for (std::uint32_t c : cells) {
            if ((c & b.atoms) != 0) next.push_back(c & b.atoms);
            if ((c & ~b.atoms) != 0) next.push_back(c & ~b.atoms);
        }
        cells = std::move(next);
    }
    const std::size_t k = cells.size();
    for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
        std::uint32_t bits = 0;
        for (std::size_t i = 0; i < k; ++i)
            if ((mask >> i) & 1u) bits |= cells[i];
        cfg.access.set_bits(bits, Access::Accessible);
    }
    return cfg;
}

inline Configuration ideal_configuration(int D, int d) {
    return configuration_from_blocks(D, d, ideal_blocks(D, d));
}

// Closure predicate of the canonical ideal configuration, usable past the
// explicit-map limit (any D <= 31): accessible statements are exactly the
// unions of whole cells, the cells being the consecutive blocks plus the
// residual atoms.
inline bool ideal_accessible(int D, int d, const Statement& s) {
    if (s.dim != D) throw std::invalid_argument("ideal_accessible: dimension mismatch");
    const int m = ideal_block_count(D, d);
    std::uint32_t rest = s.atoms;
    for (int k = 0; k < m; ++k) {
        std::uint32_t block = 0;
        for (int i = k * d; i < (k + 1) * d; ++i) block |= 1u << i;
        const std::uint32_t hit = rest & block;
        if (hit != 0 && hit != block) return false;  // partial block
        rest &= ~block;
    }
    const std::uint32_t covered = static_cast<std::uint32_t>((std::uint64_t{1} << (m * d)) - 1u);
    const std::uint32_t residual = Statement::top(D).atoms & ~covered;
    return rest == 0 || rest == residual;
}

// Exhaustive oracle for the ideal block count. Admissibility of a block
// family is inherited by its subfamilies (removing a block only merges cells
// of the closure), so the search walks the family size k downward from the
// packing bound floor(D/d) and exhausts all families of size k before
// admitting a smaller answer. Each candidate is judged by the generic
// is_admissible_access check, not by the closed form.
inline int max_accessible_brute(int D, int d) {
    if (D > 12) throw std::invalid_argument("max_accessible_brute: D must be <= 12");
    if (d < 1 || d > D) throw std::invalid_argument("max_accessible_brute: need 1 <= d <= D");

    std::vector<std::uint32_t> level_d;
    const std::uint32_t top = Statement::top(D).atoms;
    for (std::uint32_t b = 0; b <= top; ++b)
        if (__builtin_popcount(b) == d) level_d.push_back(b);

    std::vector<Statement> chosen;
    // enumerate families of exactly k disjoint blocks; true once one passes
    auto exists_admissible = [&](auto&& self, std::size_t start, std::uint32_t used, int k) -> bool {
        if (static_cast<int>(chosen.size()) == k) {
            Configuration cfg = configuration_from_blocks(D, d, chosen);
            return is_admissible_access(cfg).ok;
        }
        for (std::size_t i = start; i < level_d.size(); ++i) {
            if ((level_d[i] & used) != 0) continue;
            chosen.emplace_back(level_d[i], D);
            const bool found = self(self, i + 1, used | level_d[i], k);
            chosen.pop_back();
            if (found) return true;
        }
        return false;
    };
    for (int k = D / d; k >= 1; --k) {
        chosen.clear();
        if (exists_admissible(exists_admissible, 0, 0u, k)) return k;
    }
    return 0;
}

// The accessible blocks of an ideal configuration, read back from the labels.
inline std::vector<Statement> accessible_level_d_statements(const Configuration& cfg) {
    std::vector<Statement> out;
    const std::size_t n = std::size_t{1} << cfg.dim;
    for (std::uint32_t b = 0; b < n; ++b)
        if (__builtin_popcount(b) == cfg.depth && cfg.access.label_bits(b) == Access::Accessible)
            out.emplace_back(b, cfg.dim);
    return out;
}

// The classical sub-lattice of an inflation: a Boolean lattice whose atoms
// are the accessible blocks. Needs at least two blocks to be informative.
struct ClassicalSublattice {
    int m = 0;                     // dimension of the classical lattice
    std::vector<Statement> atoms;  // the blocks, as statements of the host lattice
};

inline ClassicalSublattice classical_sublattice(const Configuration& cfg) {
    ClassicalSublattice sub;
    sub.atoms = accessible_level_d_statements(cfg);
    // For D = d the single "block" is top itself; a one-block family never
    // yields an informative classical lattice of dimension >= 2.
    if (sub.atoms.size() <= 1)
        throw std::domain_error("classical_sublattice: useless model, no classical sub-lattice of dimension >= 2");
    sub.m = static_cast<int>(sub.atoms.size());
    return sub;
}

// DOT export of the Hasse diagram: one rank per level, covering edges between
// consecutive levels, node attribute access="A"|"N".
inline std::string to_dot(const Configuration& cfg) {
    if (cfg.dim > 6) throw std::invalid_argument("to_dot: D must be <= 6");
    const int D = cfg.dim;
    const std::size_t n = std::size_t{1} << D;
    std::string out = "digraph lattice {\n  rankdir=BT;\n  node [shape=circle];\n";

    std::vector<std::vector<std::uint32_t>> by_level(D + 1);
    for (std::uint32_t b = 0; b < n; ++b) by_level[__builtin_popcount(b)].push_back(b);

    auto node = [&](std::uint32_t bits) { return "\"" + Statement(bits, D).name() + "\""; };

    for (int lvl = 0; lvl <= D; ++lvl) {
        out += "  { rank=same; ";
        for (std::uint32_t b : by_level[lvl]) {
            out += node(b) + " [access=\"";
            out += cfg.access.label_bits(b) == Access::Accessible ? 'A' : 'N';
            out += "\"]; ";
        }
        out += "}\n";
    }
    // covering relations: add one atom at a time
    for (int lvl = 0; lvl < D; ++lvl) {
        for (std::uint32_t b : by_level[lvl]) {
            for (int i = 0; i < D; ++i) {
                if ((b >> i) & 1u) continue;
                out += "  " + node(b) + " -> " + node(b | (1u << i)) + ";\n";
            }
        }
    }
    out += "}\n";
    return out;
}

}  // namespace inaccess
