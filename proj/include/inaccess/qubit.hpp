#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <stdexcept>

#include "inaccess/mes.hpp"
#include "inaccess/numeric.hpp"
#include "inaccess/rng.hpp"

namespace inaccess {

using Cx = std::complex<double>;

// 2x2 complex matrix with just the arithmetic the qubit dictionary needs.
struct Mat2 {
    Cx a{0.0, 0.0}, b{0.0, 0.0}, c{0.0, 0.0}, d{0.0, 0.0};  // [[a, b], [c, d]]

    friend Mat2 operator+(const Mat2& x, const Mat2& y) {
        return {x.a + y.a, x.b + y.b, x.c + y.c, x.d + y.d};
    }
    friend Mat2 operator-(const Mat2& x, const Mat2& y) {
        return {x.a - y.a, x.b - y.b, x.c - y.c, x.d - y.d};
    }
    friend Mat2 operator*(double s, const Mat2& x) { return {s * x.a, s * x.b, s * x.c, s * x.d}; }
    friend Mat2 operator*(const Mat2& x, const Mat2& y) {
        return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
                x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
    }

    Mat2 adjoint() const { return {std::conj(a), std::conj(c), std::conj(b), std::conj(d)}; }
    Cx trace() const { return a + d; }

    static Mat2 identity() { return {{1, 0}, {0, 0}, {0, 0}, {1, 0}}; }
    static Mat2 sigma_x() { return {{0, 0}, {1, 0}, {1, 0}, {0, 0}}; }
    static Mat2 sigma_y() { return {{0, 0}, {0, -1}, {0, 1}, {0, 0}}; }
    static Mat2 sigma_z() { return {{1, 0}, {0, 0}, {0, 0}, {-1, 0}}; }
};

using DensityMatrix = Mat2;

struct BlochVector {
    double x = 0.0, y = 0.0, z = 0.0;
    double norm() const { return std::sqrt(x * x + y * y + z * z); }
};

inline BlochVector bloch_of(const DensityMatrix& rho) {
    return {(rho * Mat2::sigma_x()).trace().real(),
            (rho * Mat2::sigma_y()).trace().real(),
            (rho * Mat2::sigma_z()).trace().real()};
}

inline DensityMatrix density_from_bloch(const BlochVector& r) {
    return 0.5 * (Mat2::identity() + r.x * Mat2::sigma_x() + r.y * Mat2::sigma_y() +
                  r.z * Mat2::sigma_z());
}

inline double purity(const DensityMatrix& rho) { return (rho * rho).trace().real(); }

inline bool is_hermitian(const Mat2& m, double tol = kDefaultTol) {
    const Mat2 diff = m - m.adjoint();
    return std::abs(diff.a) <= tol && std::abs(diff.b) <= tol && std::abs(diff.c) <= tol &&
           std::abs(diff.d) <= tol;
}

// Eigenvalues of a Bloch-parametrised matrix are (1 ± |r|)/2, so positive
// semidefiniteness is exactly |r| <= 1.
inline bool is_positive_semidefinite(const DensityMatrix& rho, double tol = kDefaultTol) {
    return (1.0 - bloch_of(rho).norm()) / 2.0 >= -tol;
}

inline bool is_valid_density(const DensityMatrix& rho, double tol = kDefaultTol) {
    return is_hermitian(rho, tol) && std::abs(rho.trace().real() - 1.0) <= tol &&
           std::abs(rho.trace().imag()) <= tol && is_positive_semidefinite(rho, tol);
}

// The four frame operators (identity ± sigma_x ± sigma_y ± sigma_z)/4 with an
// even number of minus signs. They sum to the identity and are orthogonal
// under the Hilbert-Schmidt product, so trace pairings against them
// coordinatise the qubit exactly.
struct FrameOps {
    std::array<Mat2, 4> ops;
};

inline FrameOps frame() {
    const Mat2 I = Mat2::identity();
    const Mat2 X = Mat2::sigma_x();
    const Mat2 Y = Mat2::sigma_y();
    const Mat2 Z = Mat2::sigma_z();
    return {{{0.25 * (I + X + Y + Z), 0.25 * (I + X - Y - Z),
              0.25 * (I - X + Y - Z), 0.25 * (I - X - Y + Z)}}};
}

// Spin projectors along the three axes, as sums of frame pairs.
inline Mat2 projector(int axis, bool up) {
    const FrameOps f = frame();
    switch (axis) {
        case 0: return up ? f.ops[0] + f.ops[1] : f.ops[2] + f.ops[3];  // x
        case 1: return up ? f.ops[0] + f.ops[2] : f.ops[1] + f.ops[3];  // y
        case 2: return up ? f.ops[0] + f.ops[3] : f.ops[1] + f.ops[2];  // z
        default: throw std::invalid_argument("projector: axis must be 0, 1 or 2");
    }
}

// The qubit -> state dictionary: q_i = tr(rho * F_i). The result is a real
// vector summing to tr(rho) = 1 whose MES d=2 block sums are the spin
// measurement probabilities along x, y and z.
inline QuasiState rho_to_q(const DensityMatrix& rho, double tol = kDefaultTol) {
    if (!is_hermitian(rho, tol)) throw std::invalid_argument("rho_to_q: matrix is not Hermitian");
    if (std::abs(rho.trace().real() - 1.0) > tol || std::abs(rho.trace().imag()) > tol)
        throw std::invalid_argument("rho_to_q: trace must be 1");
    const FrameOps f = frame();
    QuasiState q(4);
    for (int i = 0; i < 4; ++i) q[i] = (rho * f.ops[i]).trace().real();
    return q;
}

// The inverse dictionary: Bloch components are signed sums of q and
// rho = (identity + x sigma_x + y sigma_y + z sigma_z)/2. This is the unique
// linear inverse of rho_to_q; the result is positive semidefinite exactly
// when chi(q) >= 2.
inline DensityMatrix q_to_rho(const QuasiState& q, double tol = kDefaultTol) {
    if (q.size() != 4) throw std::invalid_argument("q_to_rho: state must have 4 entries");
    if (std::abs(sum(q) - 1.0) > tol) throw std::invalid_argument("q_to_rho: state must sum to 1");
    const BlochVector r{q[0] + q[1] - q[2] - q[3],
                        q[0] - q[1] + q[2] - q[3],
                        q[0] - q[1] - q[2] + q[3]};
    return density_from_bloch(r);
}

// chi_2 of the frame coordinates against 2/purity; the two agree identically.
struct PurityRelation {
    double chi2 = 0.0;
    double two_over_purity = 0.0;
};

inline PurityRelation purity_relation(const DensityMatrix& rho, double tol = kDefaultTol) {
    const QuasiState q = rho_to_q(rho, tol);
    return {chi(q), 2.0 / purity(rho)};
}

// The three spin marginals (tr rho P_up, tr rho P_down) along x, y, z. They
// coincide with marginals(MesModel::build(2), rho_to_q(rho)) entry for entry.
inline AccessibleMarginals mub_marginals(const DensityMatrix& rho) {
    AccessibleMarginals out;
    for (int axis = 0; axis < 3; ++axis) {
        out.vectors.push_back({(rho * projector(axis, true)).trace().real(),
                               (rho * projector(axis, false)).trace().real()});
    }
    return out;
}

enum class PurityMode { Pure, Mixed };

// Pure: uniform on the Bloch sphere surface. Mixed: uniform in the ball.
inline DensityMatrix random_density(std::uint64_t seed, PurityMode mode) {
    Rng rng(seed);
    BlochVector r;
    if (mode == PurityMode::Pure)
        unit_sphere_point(rng, r.x, r.y, r.z);
    else
        unit_ball_point(rng, r.x, r.y, r.z);
    return density_from_bloch(r);
}

}  // namespace inaccess
