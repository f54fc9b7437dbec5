#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "inaccess/mes.hpp"
#include "inaccess/numeric.hpp"
#include "inaccess/rng.hpp"
#include "inaccess/statement.hpp"

namespace inaccess {

// A quasi-probability valuation over a lattice with D atoms: the unique
// additive extension of the atom weights q, with value(top) = 1 and
// value(bottom) = 0. Entries of q may be negative or exceed 1.
struct Valuation {
    QuasiState q;
    int dim = 0;

    Valuation(QuasiState state, int D) : q(std::move(state)), dim(D) {
        if (static_cast<int>(q.size()) != D)
            throw std::invalid_argument("Valuation: state length must equal the atom count");
        if (std::abs(sum(q) - 1.0) > 1e-6)
            throw std::invalid_argument("Valuation: state must sum to 1");
    }
};

inline double value(const Valuation& v, const Statement& s) {
    if (s.dim != v.dim) throw std::invalid_argument("value: dimension mismatch");
    double out = 0.0;
    for (int i = 0; i < v.dim; ++i)
        if (s.contains_atom(i)) out += v.q[i];
    return out;
}

// Q(y | x) = value(x ∧ y) / value(x). Returns exactly 1 when x implies y and
// exactly 0 when x ∧ y is bottom. Conditioning on a zero-valued statement is
// an error; callers must filter.
inline double conditional(const Valuation& v, const Statement& y, const Statement& x) {
    const double vx = value(v, x);
    if (vx == 0.0) throw std::domain_error("conditional: conditioning statement has value 0");
    return value(v, meet(x, y)) / vx;
}

struct RuleReport {
    long long triples = 0;
    double sum_worst = 0.0;
    double product_worst = 0.0;
    double bayes_worst = 0.0;
    bool pass = false;
};

// Samples random statement triples (x, y, z) and checks the sum rule,
// the product rule and Bayes' theorem as numeric identities. Conditioning
// values below min_conditioning are rejected so that division noise stays
// well under the 1e-12 budget.
inline RuleReport check_rules(const Valuation& v, int trials, std::uint64_t seed,
                              double tolerance = 1e-12, double min_conditioning = 0.05) {
    if (trials < 1) throw std::invalid_argument("check_rules: need trials >= 1");
    RuleReport rep;
    Rng rng(seed);
    const std::uint32_t top = Statement::top(v.dim).atoms;
    int attempts_left = trials * 1000;
    while (rep.triples < trials && attempts_left-- > 0) {
        const Statement x(static_cast<std::uint32_t>(rng.next_u64()) & top, v.dim);
        const Statement y(static_cast<std::uint32_t>(rng.next_u64()) & top, v.dim);
        const Statement z(static_cast<std::uint32_t>(rng.next_u64()) & top, v.dim);
        const Statement xz = meet(x, z);
        const Statement yz = meet(y, z);
        if (std::abs(value(v, z)) < min_conditioning) continue;
        if (std::abs(value(v, xz)) < min_conditioning) continue;
        if (std::abs(value(v, yz)) < min_conditioning) continue;

        const double q_x = conditional(v, x, z);
        const double q_y = conditional(v, y, z);
        const double q_join = conditional(v, join(x, y), z);
        const double q_meet = conditional(v, meet(x, y), z);
        rep.sum_worst = std::max(rep.sum_worst, std::abs(q_join - (q_x + q_y - q_meet)));

        const double q_y_given_xz = conditional(v, y, xz);
        rep.product_worst = std::max(rep.product_worst, std::abs(q_meet - q_x * q_y_given_xz));

        const double bayes_rhs = q_y * conditional(v, x, yz) / q_x;
        rep.bayes_worst = std::max(rep.bayes_worst, std::abs(q_y_given_xz - bayes_rhs));

        ++rep.triples;
    }
    rep.pass = rep.triples == trials && rep.sum_worst <= tolerance &&
               rep.product_worst <= tolerance && rep.bayes_worst <= tolerance;
    return rep;
}

// True when the valuation restricts to genuine probabilities on the
// accessible sub-lattice, i.e. every MES block value lies in [0, 1].
inline bool accessible_restriction_ok(const MesModel& m, const Valuation& v, double tol = kDefaultTol) {
    if (v.dim != m.atom_count())
        throw std::invalid_argument("accessible_restriction_ok: valuation dimension must be d^2");
    for (const auto& part : m.partitions()) {
        for (const auto& block : part) {
            double s = 0.0;
            for (int atom : block) s += v.q[atom];
            if (s < -tol || s > 1.0 + tol) return false;
        }
    }
    return true;
}

// The one-parameter family of valuations on four atoms
//   q(x) = ( x(x-1)/4, (2-x)/4, -(x-1)^2/4, 3/4 ),  x in [1-sqrt(3), 1+sqrt(3)],
// with A = s1 ∨ s2, B = s1 ∨ s3, C = s1 ∨ s2 ∨ s3. The product rule
// Q(A ∧ B | C) = Q(B | C) · Q(A | B ∧ C) holds identically, yet on
// x < 1/2 the left side decreases while both factors increase: the
// combination function of a quasi-probability valuation need not be
// monotone in its arguments.
struct GCounterexample {
    QuasiState q;
    double qab_given_c = 0.0;  // Q(A ∧ B | C) = x(x-1)
    double qb_given_c = 0.0;   // Q(B | C)     = x - 1
    double qa_given_bc = 0.0;  // Q(A | B ∧ C) = x
};

inline GCounterexample g_counterexample(double x, double tol = kDefaultTol) {
    const double lo = 1.0 - std::sqrt(3.0);
    const double hi = 1.0 + std::sqrt(3.0);
    if (x < lo - tol || x > hi + tol)
        throw std::invalid_argument("g_counterexample: x must lie in [1-sqrt(3), 1+sqrt(3)]");
    GCounterexample out;
    out.q = {x * (x - 1.0) / 4.0, (2.0 - x) / 4.0, -(x - 1.0) * (x - 1.0) / 4.0, 0.75};
    const Valuation v(out.q, 4);
    const Statement A = Statement::from_atoms({0, 1}, 4);
    const Statement B = Statement::from_atoms({0, 2}, 4);
    const Statement C = Statement::from_atoms({0, 1, 2}, 4);
    // x = 1 gives value(B) = 0; conditional() then reports the error.
    out.qab_given_c = conditional(v, meet(A, B), C);
    out.qb_given_c = conditional(v, B, C);
    out.qa_given_bc = conditional(v, A, meet(B, C));
    return out;
}

}  // namespace inaccess
