#pragma once

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "inaccess/access.hpp"
#include "inaccess/inaccessibility.hpp"
#include "inaccess/json_writer.hpp"
#include "inaccess/mes.hpp"
#include "inaccess/model.hpp"
#include "inaccess/qubit.hpp"
#include "inaccess/quasiprob.hpp"
#include "inaccess/statement.hpp"

namespace inaccess {

// Desk-scale reproduction of one structural claim, paired with the brute
// oracle that checked it.
struct LemmaReport {
    std::string id;
    std::string title;
    std::string params;
    bool pass = false;
    double worst_dev = 0.0;
    std::string note;            // annotations that are not failures
    std::string counterexample;  // populated when pass is false
    double elapsed_seconds = 0.0;
};

// Timings are opt-in so that a fixed seed keeps the payload byte-identical.
inline std::string reports_to_json(const std::vector<LemmaReport>& reports, bool with_timings = false) {
    JsonWriter w;
    w.begin_array();
    for (const auto& r : reports) {
        w.begin_object();
        w.key("id").value(r.id);
        w.key("title").value(r.title);
        w.key("params").value(r.params);
        w.key("pass").value(r.pass);
        w.key("worst_deviation").value(r.worst_dev);
        if (!r.note.empty()) w.key("note").value(r.note);
        if (!r.counterexample.empty()) w.key("counterexample").value(r.counterexample);
        if (with_timings) w.key("elapsed_seconds").value(r.elapsed_seconds);
        w.end_object();
    }
    w.end_array();
    return w.str();
}

namespace detail {

struct Frac {
    long long n = 0;
    long long d = 1;

    void normalize() {
        if (d < 0) { n = -n; d = -d; }
        const long long g = std::gcd(n < 0 ? -n : n, d);
        if (g > 1) { n /= g; d /= g; }
        if (n == 0) d = 1;
    }
    friend Frac operator-(const Frac& a, const Frac& b) {
        Frac r{a.n * b.d - b.n * a.d, a.d * b.d};
        r.normalize();
        return r;
    }
    friend Frac operator*(const Frac& a, const Frac& b) {
        Frac r{a.n * b.n, a.d * b.d};
        r.normalize();
        return r;
    }
    friend Frac operator/(const Frac& a, const Frac& b) {
        Frac r{a.n * b.d, a.d * b.n};
        r.normalize();
        return r;
    }
    bool zero() const { return n == 0; }
};

inline int rank_rational(std::vector<std::vector<Frac>> m) {
    int rank = 0;
    const int rows = static_cast<int>(m.size());
    if (rows == 0) return 0;
    const int cols = static_cast<int>(m[0].size());
    for (int col = 0; col < cols && rank < rows; ++col) {
        int pivot = -1;
        for (int r = rank; r < rows; ++r)
            if (!m[r][col].zero()) { pivot = r; break; }
        if (pivot < 0) continue;
        std::swap(m[rank], m[pivot]);
        for (int r = rank + 1; r < rows; ++r) {
            if (m[r][col].zero()) continue;
            const Frac f = m[r][col] / m[rank][col];
            for (int cc = col; cc < cols; ++cc) m[r][cc] = m[r][cc] - f * m[rank][cc];
        }
        ++rank;
    }
    return rank;
}

inline int rank_double(std::vector<std::vector<double>> m, double pivot_tol = 1e-9) {
    int rank = 0;
    const int rows = static_cast<int>(m.size());
    if (rows == 0) return 0;
    const int cols = static_cast<int>(m[0].size());
    for (int col = 0; col < cols && rank < rows; ++col) {
        int pivot = rank;
        for (int r = rank + 1; r < rows; ++r)
            if (std::abs(m[r][col]) > std::abs(m[pivot][col])) pivot = r;
        if (std::abs(m[pivot][col]) <= pivot_tol) continue;
        std::swap(m[rank], m[pivot]);
        for (int r = rank + 1; r < rows; ++r) {
            const double f = m[r][col] / m[rank][col];
            if (f == 0.0) continue;
            for (int cc = col; cc < cols; ++cc) m[r][cc] -= f * m[rank][cc];
        }
        ++rank;
    }
    return rank;
}

// All label assignments compatible with the negation rule and top = N;
// fn sees every one that passes the full admissibility check.
template <typename Fn>
inline void for_each_top_n_config(int D, Fn&& fn) {
    const std::uint32_t top = Statement::top(D).atoms;
    std::vector<std::uint32_t> pairs;  // one representative per complement pair, {bottom, top} excluded
    for (std::uint32_t b = 0; b <= top; ++b) {
        const std::uint32_t nb = top & ~b;
        if (b < nb && b != 0) pairs.push_back(b);
    }
    const std::size_t n_assignments = std::size_t{1} << pairs.size();
    for (std::size_t mask = 0; mask < n_assignments; ++mask) {
        Configuration cfg(D, 1);  // depth 1: the claim is about the tables alone
        for (std::size_t i = 0; i < pairs.size(); ++i) {
            if ((mask >> i) & 1u) {
                cfg.access.set_bits(pairs[i], Access::Accessible);
                cfg.access.set_bits(top & ~pairs[i], Access::Accessible);
            }
        }
        if (!is_admissible_access(cfg).ok) continue;
        fn(cfg);
    }
}

// All families of exactly k pairwise-disjoint level-d statements.
template <typename Fn>
inline void for_each_disjoint_family(int D, int d, int k, Fn&& fn) {
    std::vector<std::uint32_t> level_d;
    const std::uint32_t top = Statement::top(D).atoms;
    for (std::uint32_t b = 0; b <= top; ++b)
        if (__builtin_popcount(b) == d) level_d.push_back(b);
    std::vector<std::uint32_t> chosen;
    auto rec = [&](auto&& self, std::size_t start, std::uint32_t used) -> void {
        if (static_cast<int>(chosen.size()) == k) {
            fn(chosen);
            return;
        }
        for (std::size_t i = start; i < level_d.size(); ++i) {
            if ((level_d[i] & used) != 0) continue;
            chosen.push_back(level_d[i]);
            self(self, i + 1, used | level_d[i]);
            chosen.pop_back();
        }
    };
    rec(rec, 0, 0u);
}

inline std::string family_to_string(const std::vector<std::uint32_t>& blocks, int D) {
    std::string s = "{";
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        if (i) s += ", ";
        s += "{" + Statement(blocks[i], D).name() + "}";
    }
    return s + "}";
}

// Atom permutation sending the family (blocks sorted by least atom, then the
// residual) onto the canonical consecutive layout.
inline std::vector<int> canonicalizing_permutation(int D, std::vector<std::uint32_t> blocks) {
    std::sort(blocks.begin(), blocks.end(), [](std::uint32_t a, std::uint32_t b) {
        return (a & -a) < (b & -b);  // by least atom
    });
    std::vector<int> perm(D, -1);
    int next = 0;
    for (std::uint32_t b : blocks)
        for (int i = 0; i < D; ++i)
            if ((b >> i) & 1u) perm[i] = next++;
    for (int i = 0; i < D; ++i)
        if (perm[i] < 0) perm[i] = next++;
    return perm;
}

inline std::uint32_t apply_permutation(std::uint32_t bits, const std::vector<int>& perm) {
    std::uint32_t out = 0;
    for (std::size_t i = 0; i < perm.size(); ++i)
        if ((bits >> i) & 1u) out |= 1u << perm[i];
    return out;
}

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
};

}  // namespace detail

// Rank of the linear map q -> concatenated block sums, restricted to the
// hyperplane sum q = 1 (zero-sum directions e_i - e_{n-1}). With all d+1
// partitions the rank is d^2 - 1; dropping any one partition loses it, so no
// partition of a MES model is redundant. Exact rational elimination for
// d <= 3, floating point with pivot tolerance 1e-9 above.
inline int rank_of_marginal_map(const MesModel& m, int drop_partition = -1) {
    const int n = m.atom_count();
    const bool exact = m.depth() <= 3;
    std::vector<std::vector<detail::Frac>> mq;
    std::vector<std::vector<double>> md;
    for (int k = 0; k < static_cast<int>(m.partitions().size()); ++k) {
        if (k == drop_partition) continue;
        for (const auto& block : m.partitions()[k]) {
            const bool has_last = std::find(block.begin(), block.end(), n - 1) != block.end();
            std::vector<detail::Frac> rowq;
            std::vector<double> rowd;
            for (int i = 0; i < n - 1; ++i) {
                const bool has_i = std::find(block.begin(), block.end(), i) != block.end();
                const int v = (has_i ? 1 : 0) - (has_last ? 1 : 0);
                if (exact)
                    rowq.push_back({v, 1});
                else
                    rowd.push_back(static_cast<double>(v));
            }
            if (exact)
                mq.push_back(std::move(rowq));
            else
                md.push_back(std::move(rowd));
        }
    }
    return exact ? detail::rank_rational(std::move(mq)) : detail::rank_double(std::move(md));
}

namespace detail {

inline LemmaReport check_L1(int max_D) {
    Timer t;
    LemmaReport r{"L1", "top inaccessible forces a fully inaccessible lattice", "", true, 0.0, "", "", 0.0};
    const int cap = std::min(max_D, 5);
    r.params = "exhaustive label search, 2 <= D <= " + std::to_string(cap);
    long long configs = 0;
    for (int D = 2; D <= cap; ++D) {
        for_each_top_n_config(D, [&](const Configuration& cfg) {
            ++configs;
            for (std::uint32_t b : cfg.access.accessible_set()) {
                r.pass = false;
                r.counterexample = "D=" + std::to_string(D) + ", accessible statement {" +
                                   Statement(b, D).name() + "} despite top being inaccessible";
            }
        });
    }
    r.note = std::to_string(configs) + " admissible top-N configurations scanned";
    r.elapsed_seconds = t.seconds();
    return r;
}

inline LemmaReport check_L2(int max_D) {
    Timer t;
    LemmaReport r{"L2", "accessible level-d statements are pairwise disjoint", "", true, 0.0, "", "", 0.0};
    const int cap = std::min(max_D, 8);
    r.params = "all intersecting level-d pairs, D <= " + std::to_string(cap);
    for (int D = 2; D <= cap; ++D) {
        for (int d = 2; d <= D; ++d) {
            std::vector<std::uint32_t> level_d;
            const std::uint32_t top = Statement::top(D).atoms;
            for (std::uint32_t b = 0; b <= top; ++b)
                if (__builtin_popcount(b) == d) level_d.push_back(b);
            for (std::size_t i = 0; i < level_d.size() && r.pass; ++i) {
                for (std::size_t j = i + 1; j < level_d.size(); ++j) {
                    const int overlap = __builtin_popcount(level_d[i] & level_d[j]);
                    if (overlap == 0 || overlap == d) continue;
                    Configuration cfg = configuration_from_blocks(
                        D, d, {Statement(level_d[i], D), Statement(level_d[j], D)});
                    if (is_admissible_access(cfg).ok) {
                        r.pass = false;
                        r.counterexample = "(" + std::to_string(D) + "," + std::to_string(d) +
                                           "): intersecting accessible pair " +
                                           family_to_string({level_d[i], level_d[j]}, D);
                        break;
                    }
                }
            }
        }
    }
    r.elapsed_seconds = t.seconds();
    return r;
}

inline LemmaReport check_L3(int max_D) {
    Timer t;
    LemmaReport r{"L3", "ideal block count is D/d, or floor(D/d)-1 when d does not divide D",
                  "", true, 0.0, "", "", 0.0};
    const int cap = std::min(max_D, 12);
    r.params = "brute-force search vs closed form, 1 <= d <= D <= " + std::to_string(cap);
    for (int D = 1; D <= cap && r.pass; ++D) {
        for (int d = 1; d <= D; ++d) {
            const int brute = max_accessible_brute(D, d);
            const int formula = ideal_block_count(D, d);
            if (brute != formula) {
                r.pass = false;
                r.counterexample = "(" + std::to_string(D) + "," + std::to_string(d) + "): brute " +
                                   std::to_string(brute) + " != formula " + std::to_string(formula);
                break;
            }
        }
    }
    r.elapsed_seconds = t.seconds();
    return r;
}

inline LemmaReport check_L4(int max_D) {
    Timer t;
    LemmaReport r{"L4", "ideal configurations are unique up to atom relabeling", "", true, 0.0, "", "", 0.0};
    const int cap = std::min(max_D, 8);
    r.params = "orbit check over all maximal families, D <= " + std::to_string(cap);
    for (int D = 2; D <= cap && r.pass; ++D) {
        for (int d = 1; d <= D && r.pass; ++d) {
            const int k = ideal_block_count(D, d);
            if (k == 0) continue;
            const Configuration canonical = ideal_configuration(D, d);
            const std::vector<std::uint32_t> canonical_acc = canonical.access.accessible_set();
            long long families = 0;
            for_each_disjoint_family(D, d, k, [&](const std::vector<std::uint32_t>& fam) {
                if (!r.pass) return;
                ++families;
                std::vector<Statement> blocks;
                for (std::uint32_t b : fam) blocks.emplace_back(b, D);
                Configuration cfg = configuration_from_blocks(D, d, blocks);
                if (!is_admissible_access(cfg).ok) {
                    r.pass = false;
                    r.counterexample = "(" + std::to_string(D) + "," + std::to_string(d) +
                                       "): maximal family " + family_to_string(fam, D) + " inadmissible";
                    return;
                }
                const std::vector<int> perm = canonicalizing_permutation(D, fam);
                std::vector<std::uint32_t> mapped;
                for (std::uint32_t b : cfg.access.accessible_set())
                    mapped.push_back(apply_permutation(b, perm));
                std::sort(mapped.begin(), mapped.end());
                if (mapped != canonical_acc) {
                    r.pass = false;
                    r.counterexample = "(" + std::to_string(D) + "," + std::to_string(d) + "): family " +
                                       family_to_string(fam, D) + " not relabelable to canonical";
                }
            });
        }
    }
    r.elapsed_seconds = t.seconds();
    return r;
}

inline LemmaReport check_L5(int max_D) {
    Timer t;
    LemmaReport r{"L5", "a classical model of dimension m inflates exactly to the (D,d) with m ideal blocks",
                  "", true, 0.0, "", "", 0.0};
    const int cap = std::min(max_D, 12);
    r.params = "counting criterion vs brute force, D <= " + std::to_string(cap);
    for (int d = 1; d <= cap && r.pass; ++d) {
        for (int m = 1; m * d <= cap && r.pass; ++m) {
            std::set<std::int64_t> expected;
            for (int D = d; D <= cap; ++D)
                if (max_accessible_brute(D, d) == m) expected.insert(D);
            std::set<std::int64_t> got;
            for (std::int64_t D : allowed_inflations(m, d))
                if (D <= cap) got.insert(D);
            if (got != expected) {
                r.pass = false;
                r.counterexample = "m=" + std::to_string(m) + ", d=" + std::to_string(d) +
                                   ": counting-criterion set disagrees with brute force";
            }
            // the printed union bound stops the residual index at m-1 instead
            // of d-1; record the first place the sets would differ
            if (r.note.empty() && d > m) {
                for (int i = m; i <= d - 1; ++i) {
                    const std::int64_t D = static_cast<std::int64_t>(m + 1) * d + i;
                    if (D <= cap && expected.count(D)) {
                        r.note = "printed union bound omits D=" + std::to_string(D) + " at m=" +
                                 std::to_string(m) + ", d=" + std::to_string(d) +
                                 "; the counting criterion includes it";
                        break;
                    }
                }
            }
        }
    }
    r.elapsed_seconds = t.seconds();
    return r;
}

inline LemmaReport check_L6() {
    Timer t;
    LemmaReport r{"L6", "inflation commutes with composition for the family m -> (m^(c+1), m^c)",
                  "m1, m2 in [2,5], c in [1,3]", true, 0.0, "", "", 0.0};
    for (int m1 = 2; m1 <= 5; ++m1)
        for (int m2 = 2; m2 <= 5; ++m2)
            for (int c = 1; c <= 3; ++c)
                if (!inflation_compatible_with_composition(m1, m2, c)) {
                    r.pass = false;
                    r.counterexample = "m1=" + std::to_string(m1) + ", m2=" + std::to_string(m2) +
                                       ", c=" + std::to_string(c);
                }
    r.elapsed_seconds = t.seconds();
    return r;
}

inline LemmaReport check_L7() {
    Timer t;
    LemmaReport r{"L7", "MES construction yields d+1 partitions with single-atom overlaps",
                  "d in {2, 3, 5, 7}", true, 0.0, "", "", 0.0};
    for (int d : {2, 3, 5, 7}) {
        const MesModel m = MesModel::build(d);
        bool ok = verify_overlaps(m);
        int blocks = 0;
        for (const auto& part : m.partitions()) blocks += static_cast<int>(part.size());
        ok = ok && blocks == d * (d + 1);
        for (int atom = 0; atom < m.atom_count() && ok; ++atom) {
            int hits = 0;
            for (const auto& part : m.partitions())
                for (const auto& block : part)
                    if (std::find(block.begin(), block.end(), atom) != block.end()) ++hits;
            ok = hits == d + 1;
        }
        if (!ok) {
            r.pass = false;
            r.counterexample = "d=" + std::to_string(d);
        }
    }
    r.elapsed_seconds = t.seconds();
    return r;
}

inline LemmaReport check_L8(std::uint64_t seed) {
    Timer t;
    LemmaReport r{"L8", "marginals determine the state, and every partition is needed",
                  "round-trip d in {2, 3, 5}; rank of the marginal map", true, 0.0, "", "", 0.0};
    for (int d : {2, 3, 5}) {
        const MesModel m = MesModel::build(d);
        Rng rng(Rng::subseed(seed, 80 + d));
        for (int trial = 0; trial < 200; ++trial) {
            QuasiState q(m.atom_count());
            double s = 0.0;
            for (double& x : q) {
                x = rng.uniform(-1.0, 2.0);
                s += x;
            }
            const double shift = (1.0 - s) / m.atom_count();
            for (double& x : q) x += shift;
            const QuasiState back = reconstruct(m, marginals(m, q), 1e-6);
            for (std::size_t i = 0; i < q.size(); ++i)
                r.worst_dev = std::max(r.worst_dev, std::abs(back[i] - q[i]));
        }
        if (r.worst_dev > 1e-12) {
            r.pass = false;
            r.counterexample = "d=" + std::to_string(d) + ": round-trip deviation " + format_double(r.worst_dev);
        }
        const int full = rank_of_marginal_map(m);
        if (full != d * d - 1) {
            r.pass = false;
            r.counterexample = "d=" + std::to_string(d) + ": full rank " + std::to_string(full);
        }
        for (int k = 0; k <= d; ++k) {
            const int dropped = rank_of_marginal_map(m, k);
            if (dropped >= d * d - 1) {
                r.pass = false;
                r.counterexample = "d=" + std::to_string(d) + ": dropping partition " + std::to_string(k) +
                                   " keeps rank " + std::to_string(dropped);
            }
        }
    }
    r.elapsed_seconds = t.seconds();
    return r;
}

inline LemmaReport check_examples_1_to_3() {
    Timer t;
    LemmaReport r{"E1-E3", "worked examples at D = 2, 3, 4", "", true, 0.0, "", "", 0.0};
    // D = 2 and D = 3: every depth gives a classical or useless model
    for (int D = 2; D <= 3; ++D) {
        for (int d = 1; d <= D; ++d) {
            const ModelClass cls = classify(Model(D, d));
            if (cls.tag == ModelTag::Nontrivial) {
                r.pass = false;
                r.counterexample = "(" + std::to_string(D) + "," + std::to_string(d) + ") classified nontrivial";
            }
        }
    }
    if (max_accessible_brute(3, 2) != 0) {
        r.pass = false;
        r.counterexample = "(3,2) admits an accessible level-2 statement";
    }
    // D = 4, d = 2: the first nontrivial model
    const ModelClass cls42 = classify(Model(4, 2));
    if (cls42.tag != ModelTag::Nontrivial || cls42.m != 2) {
        r.pass = false;
        r.counterexample = "(4,2) not recognized as nontrivial with m = 2";
    }
    {
        Configuration good = configuration_from_blocks(
            4, 2, {Statement::from_atoms({0, 1}, 4), Statement::from_atoms({2, 3}, 4)});
        if (!is_admissible_access(good).ok) {
            r.pass = false;
            r.counterexample = "(4,2) blocks {0,1},{2,3} rejected";
        }
        Configuration bad(4, 2);
        bad.access.set(Statement::top(4), Access::Accessible);
        bad.access.set(Statement::bottom(4), Access::Accessible);
        bad.access.set(Statement::from_atoms({0, 1}, 4), Access::Accessible);
        bad.access.set(Statement::from_atoms({0, 2}, 4), Access::Accessible);
        bad.access.set(Statement::from_atoms({2, 3}, 4), Access::Accessible);
        bad.access.set(Statement::from_atoms({1, 3}, 4), Access::Accessible);
        if (is_admissible_access(bad).ok) {
            r.pass = false;
            r.counterexample = "(4,2) with overlapping accessible pairs accepted";
        }
    }
    // exactly three ideal configurations, all one orbit
    {
        long long families = 0;
        for_each_disjoint_family(4, 2, 2, [&](const std::vector<std::uint32_t>&) { ++families; });
        if (families != 3) {
            r.pass = false;
            r.counterexample = "(4,2) ideal configuration count " + std::to_string(families) + " != 3";
        }
        r.note = "(4,2) has exactly 3 ideal configurations, one orbit";
    }
    r.elapsed_seconds = t.seconds();
    return r;
}

inline LemmaReport check_C3() {
    Timer t;
    LemmaReport r{"C3", "d=3 state on the inaccessibility sphere violating a block constraint",
                  "t = (3 + sqrt(33))/24", true, 0.0, "", "", 0.0};
    const double tt = (3.0 + std::sqrt(33.0)) / 24.0;
    const QuasiState q = {0.25 - tt, 0.0, 0.0, 0.25, 0.25, 0.25, 0.0, 0.0, tt};
    const MesModel m = MesModel::build(3);
    double s = 0.0;
    for (double x : q) s += x;
    if (s != 1.0) {
        r.pass = false;
        r.counterexample = "sum is " + format_double(s) + ", expected exactly 1";
    }
    const double sphere_dev = std::abs(sum_squares(q) - 1.0 / 3.0);
    r.worst_dev = sphere_dev;
    if (sphere_dev > 1e-12) {
        r.pass = false;
        r.counterexample = "sum of squares misses 1/3 by " + format_double(sphere_dev);
    }
    if (!(q[0] + q[1] + q[2] < 0.0)) {
        r.pass = false;
        r.counterexample = "block {0,1,2} sum is not negative";
    }
    if (in_mes_set(m, q, MembershipMode::BlocksOnly) || in_mes_set(m, q, MembershipMode::AllLevelD)) {
        r.pass = false;
        r.counterexample = "state accepted as a member despite the violated block";
    }
    r.elapsed_seconds = t.seconds();
    return r;
}

inline LemmaReport check_Q2(std::uint64_t seed) {
    Timer t;
    LemmaReport r{"Q2", "for d=2 the sphere constraint implies every pair-sum constraint",
                  "100000 states with sum q = 1, sum q^2 <= 1/2", true, 0.0, "", "", 0.0};
    const MesModel m = MesModel::build(2);
    const auto states = sample(m, 100000, Rng::subseed(seed, 17));
    for (const QuasiState& q : states) {
        for (int i = 0; i < 4; ++i) {
            for (int j = i + 1; j < 4; ++j) {
                const double s = q[i] + q[j];
                const double excess = std::max(-s, s - 1.0);
                r.worst_dev = std::max(r.worst_dev, excess);
                if (excess > 1e-9) {
                    r.pass = false;
                    r.counterexample = "pair (" + std::to_string(i) + "," + std::to_string(j) +
                                       ") sums to " + format_double(s);
                }
            }
        }
    }
    r.elapsed_seconds = t.seconds();
    return r;
}

inline LemmaReport check_B3() {
    Timer t;
    LemmaReport r{"B3", "product-rule combination decreasing while both arguments increase",
                  "100-point grid on [1 - sqrt(3), 1/2]", true, 0.0, "", "", 0.0};
    const double lo = 1.0 - std::sqrt(3.0);
    const double hi = 0.5;
    const int n = 100;
    double prev_ab = 0.0, prev_b = 0.0, prev_a = 0.0;
    for (int i = 0; i < n; ++i) {
        const double x = lo + (hi - lo) * i / (n - 1);
        const GCounterexample g = g_counterexample(x);
        const double dev = std::max({std::abs(g.qab_given_c - x * (x - 1.0)),
                                     std::abs(g.qb_given_c - (x - 1.0)),
                                     std::abs(g.qa_given_bc - x)});
        r.worst_dev = std::max(r.worst_dev, dev);
        if (dev > 1e-12) {
            r.pass = false;
            r.counterexample = "x=" + format_double(x) + ": closed form misses lattice value by " +
                               format_double(dev);
        }
        const double product_gap = std::abs(g.qab_given_c - g.qb_given_c * g.qa_given_bc);
        if (product_gap > 1e-12) {
            r.pass = false;
            r.counterexample = "x=" + format_double(x) + ": product rule off by " + format_double(product_gap);
        }
        if (i > 0) {
            if (!(g.qab_given_c < prev_ab) || !(g.qb_given_c > prev_b) || !(g.qa_given_bc > prev_a)) {
                r.pass = false;
                r.counterexample = "monotonicity pattern broken at x=" + format_double(x);
            }
        }
        prev_ab = g.qab_given_c;
        prev_b = g.qb_given_c;
        prev_a = g.qa_given_bc;
    }
    r.elapsed_seconds = t.seconds();
    return r;
}

}  // namespace detail

// Runs every desk-scale check and returns one report per claim, in a fixed
// order. Deterministic for a fixed seed.
inline std::vector<LemmaReport> run_all(int max_D, std::uint64_t seed) {
    if (max_D > 12) throw std::invalid_argument("run_all: max_D must be <= 12");
    if (max_D < 4) throw std::invalid_argument("run_all: max_D must be >= 4");
    std::vector<LemmaReport> out;
    out.push_back(detail::check_L1(max_D));
    out.push_back(detail::check_L2(max_D));
    out.push_back(detail::check_L3(max_D));
    out.push_back(detail::check_L4(max_D));
    out.push_back(detail::check_L5(max_D));
    out.push_back(detail::check_L6());
    out.push_back(detail::check_L7());
    out.push_back(detail::check_L8(seed));
    out.push_back(detail::check_examples_1_to_3());
    out.push_back(detail::check_C3());
    out.push_back(detail::check_Q2(seed));
    out.push_back(detail::check_B3());
    return out;
}

inline bool all_pass(const std::vector<LemmaReport>& reports) {
    for (const auto& r : reports)
        if (!r.pass) return false;
    return true;
}

}  // namespace inaccess
