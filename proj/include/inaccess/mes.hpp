#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "inaccess/numeric.hpp"
#include "inaccess/rng.hpp"

namespace inaccess {

using QuasiState = std::vector<double>;

// The d+1 accessible probability vectors of a MES model, one per partition.
struct AccessibleMarginals {
    std::vector<std::vector<double>> vectors;

    bool valid(double tol = kDefaultTol) const {
        for (const auto& p : vectors)
            if (!is_probability_vector(p, tol)) return false;
        return !vectors.empty();
    }
};

// A maximal expressive standard model for prime accessibility-depth d:
// d+1 partitions of the d^2 atoms into d blocks of d atoms, blocks from
// different partitions sharing exactly one atom.
class MesModel {
public:
    static MesModel build(int d);

    // Unchecked construction from explicit partitions; pair with
    // verify_overlaps when the partitions come from outside.
    static MesModel from_partitions(int d, std::vector<std::vector<std::vector<int>>> partitions) {
        MesModel m;
        m.d_ = d;
        m.partitions_ = std::move(partitions);
        m.index_blocks();
        return m;
    }

    int depth() const { return d_; }
    int atom_count() const { return d_ * d_; }
    const std::vector<std::vector<std::vector<int>>>& partitions() const { return partitions_; }

    // Index of the block of partition k that contains atom i.
    int block_of(int k, int i) const { return block_of_[static_cast<std::size_t>(k) * atom_count() + i]; }

private:
    void index_blocks() {
        block_of_.assign(partitions_.size() * static_cast<std::size_t>(atom_count()), -1);
        for (std::size_t k = 0; k < partitions_.size(); ++k)
            for (std::size_t b = 0; b < partitions_[k].size(); ++b)
                for (int atom : partitions_[k][b])
                    block_of_[k * atom_count() + atom] = static_cast<int>(b);
    }

    int d_ = 0;
    std::vector<std::vector<std::vector<int>>> partitions_;
    std::vector<int> block_of_;
};

// Partition 0 is the consecutive-blocks partition; for y = 0..d-1, block x of
// partition y+1 collects the atoms j with (floor(j/d)*y + j mod d) mod d = x.
// Primality of d makes any two blocks from different partitions meet in
// exactly one atom.
inline MesModel MesModel::build(int d) {
    if (!is_prime(d)) throw std::invalid_argument("MesModel: accessibility-depth must be prime");
    std::vector<std::vector<std::vector<int>>> parts;
    parts.reserve(d + 1);
    {
        std::vector<std::vector<int>> rows(d);
        for (int j = 0; j < d * d; ++j) rows[j / d].push_back(j);
        parts.push_back(std::move(rows));
    }
    for (int y = 0; y < d; ++y) {
        std::vector<std::vector<int>> blocks(d);
        for (int j = 0; j < d * d; ++j) {
            const int x = ((j / d) * y + (j % d)) % d;
            blocks[x].push_back(j);
        }
        parts.push_back(std::move(blocks));
    }
    return from_partitions(d, std::move(parts));
}

// Exhaustive check of the MES invariants: d+1 partitions of the atoms into
// d blocks of size d, and inter-partition block overlaps of at most one atom.
inline bool verify_overlaps(const MesModel& m) {
    const int d = m.depth();
    const int n = m.atom_count();
    if (static_cast<int>(m.partitions().size()) != d + 1) return false;
    for (const auto& part : m.partitions()) {
        if (static_cast<int>(part.size()) != d) return false;
        std::vector<bool> seen(n, false);
        for (const auto& block : part) {
            if (static_cast<int>(block.size()) != d) return false;
            for (int atom : block) {
                if (atom < 0 || atom >= n || seen[atom]) return false;
                seen[atom] = true;
            }
        }
        for (bool s : seen)
            if (!s) return false;
    }
    for (std::size_t k1 = 0; k1 < m.partitions().size(); ++k1) {
        for (std::size_t k2 = k1 + 1; k2 < m.partitions().size(); ++k2) {
            for (const auto& b1 : m.partitions()[k1]) {
                for (const auto& b2 : m.partitions()[k2]) {
                    int common = 0;
                    for (int a : b1)
                        if (std::find(b2.begin(), b2.end(), a) != b2.end()) ++common;
                    if (common > 1) return false;
                }
            }
        }
    }
    return true;
}

// The forward map Phi: block sums of q under every partition.
inline AccessibleMarginals marginals(const MesModel& m, const QuasiState& q) {
    if (static_cast<int>(q.size()) != m.atom_count())
        throw std::invalid_argument("marginals: state length must be d^2");
    AccessibleMarginals out;
    for (const auto& part : m.partitions()) {
        std::vector<double> p;
        p.reserve(part.size());
        for (const auto& block : part) {
            double s = 0.0;
            for (int atom : block) s += q[atom];
            p.push_back(s);
        }
        out.vectors.push_back(std::move(p));
    }
    return out;
}

// The inverse map: the d+1 blocks through atom i have marginal values summing
// to d*q_i + 1, so q_i = (sum - 1)/d. Inconsistent marginals are detected by
// mapping the reconstruction forward again.
inline QuasiState reconstruct(const MesModel& m, const AccessibleMarginals& am, double tol = kDefaultTol) {
    const int d = m.depth();
    if (static_cast<int>(am.vectors.size()) != d + 1)
        throw std::invalid_argument("reconstruct: expected d+1 marginal vectors");
    for (const auto& p : am.vectors) {
        if (static_cast<int>(p.size()) != d)
            throw std::invalid_argument("reconstruct: each marginal must have length d");
        if (std::abs(sum(p) - 1.0) > tol)
            throw std::invalid_argument("reconstruct: marginals must each sum to 1");
    }
    QuasiState q(m.atom_count(), 0.0);
    for (int i = 0; i < m.atom_count(); ++i) {
        double s = 0.0;
        for (int k = 0; k <= d; ++k) s += am.vectors[k][m.block_of(k, i)];
        q[i] = (s - 1.0) / d;
    }
    const AccessibleMarginals round = marginals(m, q);
    for (int k = 0; k <= d; ++k)
        for (int j = 0; j < d; ++j)
            if (std::abs(round.vectors[k][j] - am.vectors[k][j]) > tol)
                throw std::domain_error("reconstruct: marginals are inconsistent, no state reproduces them");
    return q;
}

enum class MembershipMode { BlocksOnly, AllLevelD };

namespace detail {
template <typename Fn>
inline bool for_each_level_d_subset(int n, int d, Fn&& fn) {
    std::vector<int> idx(d);
    for (int i = 0; i < d; ++i) idx[i] = i;
    while (true) {
        if (!fn(idx)) return false;
        int i = d - 1;
        while (i >= 0 && idx[i] == n - d + i) --i;
        if (i < 0) return true;
        ++idx[i];
        for (int j = i + 1; j < d; ++j) idx[j] = idx[j - 1] + 1;
    }
}
}  // namespace detail

// MES_d membership: the state sums to 1 and every block sum is a probability.
// AllLevelD additionally requires every size-d atom subset to sum into [0,1];
// that is only enumerable for small d.
inline bool in_mes_set(const MesModel& m, const QuasiState& q, MembershipMode mode = MembershipMode::BlocksOnly,
                       double tol = kDefaultTol) {
    if (static_cast<int>(q.size()) != m.atom_count())
        throw std::invalid_argument("in_mes_set: state length must be d^2");
    if (std::abs(sum(q) - 1.0) > tol) return false;
    for (const auto& part : m.partitions()) {
        for (const auto& block : part) {
            double s = 0.0;
            for (int atom : block) s += q[atom];
            if (s < -tol || s > 1.0 + tol) return false;
        }
    }
    if (mode == MembershipMode::AllLevelD) {
        if (m.depth() > 4)
            throw std::invalid_argument("in_mes_set: AllLevelD mode is infeasible for d > 4");
        return detail::for_each_level_d_subset(m.atom_count(), m.depth(), [&](const std::vector<int>& idx) {
            double s = 0.0;
            for (int i : idx) s += q[i];
            return s >= -tol && s <= 1.0 + tol;
        });
    }
    return true;
}

// The inaccessibility of a quasi-probability state, 1/sum q_i^2. This is the
// canonical extension of the order-2 measure from probability vectors to all
// real states summing to 1; chi2_from_marginals in inaccessibility.hpp is its
// marginal-route consistency oracle.
inline double chi(const QuasiState& q) {
    if (std::abs(sum(q) - 1.0) > 1e-6)
        throw std::invalid_argument("chi: state must sum to 1");
    return 1.0 / sum_squares(q);
}

// Admissible states: MES_d membership plus inaccessibility at least d.
inline bool in_state_space(const MesModel& m, const QuasiState& q, double tol = kDefaultTol) {
    return in_mes_set(m, q, MembershipMode::BlocksOnly, tol) && chi(q) >= m.depth() - tol;
}

// Pure states saturate the inaccessibility bound.
inline bool is_pure(const MesModel& m, const QuasiState& q, double tol = kDefaultTol) {
    if (!in_state_space(m, q, tol)) throw std::invalid_argument("is_pure: state is not admissible");
    return std::abs(chi(q) - m.depth()) <= tol;
}

// Draws n admissible states. For d = 2 the state space is the image of the
// closed unit ball of Bloch vectors, so sampling is exact. For d >= 3 a
// zero-sum Gaussian perturbation around the uniform state is clipped to the
// sphere sum q_i^2 <= 1/d and rejected against the block constraints.
inline std::vector<QuasiState> sample(const MesModel& m, int n, std::uint64_t seed,
                                      double tol = kDefaultTol, int max_attempts_per_state = 10000) {
    if (n < 1) throw std::invalid_argument("sample: need n >= 1");
    const int d = m.depth();
    std::vector<QuasiState> out;
    out.reserve(n);
    for (int s = 0; s < n; ++s) {
        Rng rng(Rng::subseed(seed, static_cast<std::uint64_t>(s)));
        if (d == 2) {
            double x = 0.0, y = 0.0, z = 0.0;
            unit_ball_point(rng, x, y, z);
            out.push_back({(1.0 + x + y + z) / 4.0, (1.0 + x - y - z) / 4.0,
                           (1.0 - x + y - z) / 4.0, (1.0 - x - y + z) / 4.0});
            continue;
        }
        const int n_atoms = m.atom_count();
        const double radius = std::sqrt(1.0 / d - 1.0 / (static_cast<double>(n_atoms)));
        const double sigma = radius / std::sqrt(static_cast<double>(n_atoms - 1));
        bool accepted = false;
        for (int attempt = 0; attempt < max_attempts_per_state && !accepted; ++attempt) {
            std::vector<double> u(n_atoms);
            double mean = 0.0;
            for (double& v : u) {
                v = sigma * rng.normal();
                mean += v;
            }
            mean /= n_atoms;
            QuasiState q(n_atoms);
            double norm2 = 0.0;
            for (int i = 0; i < n_atoms; ++i) {
                u[i] -= mean;
                norm2 += u[i] * u[i];
            }
            if (norm2 > radius * radius) continue;  // clip to the sphere by resampling
            for (int i = 0; i < n_atoms; ++i) q[i] = 1.0 / n_atoms + u[i];
            if (!in_mes_set(m, q, MembershipMode::BlocksOnly, tol)) continue;
            out.push_back(std::move(q));
            accepted = true;
        }
        if (!accepted)
            throw std::runtime_error("sample: rejection sampling failed after " +
                                     std::to_string(max_attempts_per_state) + " attempts");
    }
    return out;
}

}  // namespace inaccess
