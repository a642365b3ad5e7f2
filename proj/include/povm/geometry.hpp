// Copyright 2026 The povmkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// PSD regions of I/M + u G_mu + v G_nu in two-dimensional basis planes,
// the eigenvalue-simplex radii and the r_in^2/r_out^2 curve.

#include <array>
#include <cstdint>
#include <numeric>
#include <optional>
#include <vector>

#include "povm/bases.hpp"
#include "povm/conditions.hpp"
#include "povm/construct.hpp"

namespace povm {

/// n x n grid of the plane spanned by G_mu, G_nu around I/M.
///
/// Grid coordinates are (k - n/2) * (2r/n), k = 0..n-1 (integer division),
/// so the origin is always a grid point. Storage is row-major with the u
/// index outer: entry [i * n + j] is (u_i, v_j).
struct RegionScan {
    int d = 0;
    int M = 0;
    int mu = 0;
    int nu = 0;
    int n = 0;
    double r = 0.0;
    double tol = 0.0;
    double r_in = 0.0;
    double r_out = 0.0;
    std::vector<double> min_eig;
    std::vector<std::uint8_t> psd;
    std::vector<std::array<double, 2>> triangle;  // optional overlay

    double step() const { return 2.0 * r / n; }
    int origin_index() const { return n / 2; }
    double coordinate(int k) const { return (k - n / 2) * step(); }
    std::size_t flat(int i, int j) const { return static_cast<std::size_t>(i) * n + j; }
    bool psd_at(int i, int j) const { return psd[flat(i, j)] != 0; }
};

namespace detail {

inline double plane_min_eigenvalue(const CMatrix& centre, const CMatrix& a, const CMatrix& b, double u, double v) {
    const CMatrix m = centre + u * a + v * b;
    Eigen::SelfAdjointEigenSolver<CMatrix> solver(m, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) throw NumericError("eigensolver failed in plane scan", std::nan(""));
    return solver.eigenvalues()(0);
}

inline void check_plane(const OperatorBasis& basis, int mu, int nu) {
    const int top = basis.size();
    if (mu < 2 || mu > top || nu < 2 || nu > top || mu == nu) {
        throw IndexError("plane indices must satisfy 2 <= mu != nu <= " + std::to_string(top) + ", got (" +
                         std::to_string(mu) + "," + std::to_string(nu) + ")");
    }
}

}  // namespace detail

/// Scan half-width default: 1.1 r_out.
inline double default_scan_half_width(int d, int m_outcomes) { return 1.1 * std::sqrt(radii(d, m_outcomes).r_out_sq); }

inline RegionScan region_scan(const OperatorBasis& basis, int mu, int nu, int m_outcomes, int n = 512,
                              std::optional<double> half_width = std::nullopt, double tol = kPsdTol) {
    detail::check_plane(basis, mu, nu);
    if (n < 16) throw DomainError("scan resolution must be >= 16, got " + std::to_string(n));
    const int d = basis.dim;
    const auto rr = radii(d, m_outcomes);
    RegionScan s;
    s.d = d;
    s.M = m_outcomes;
    s.mu = mu;
    s.nu = nu;
    s.n = n;
    s.r = half_width ? *half_width : 1.1 * std::sqrt(rr.r_out_sq);
    if (!(s.r > 0)) throw DomainError("scan half-width must be positive");
    s.tol = tol;
    s.r_in = std::sqrt(rr.r_in_sq);
    s.r_out = std::sqrt(rr.r_out_sq);
    s.min_eig.resize(static_cast<std::size_t>(n) * n);
    s.psd.resize(static_cast<std::size_t>(n) * n);
    const CMatrix centre = CMatrix::Identity(d, d) / static_cast<double>(m_outcomes);
    const CMatrix& a = basis.at(mu).matrix();
    const CMatrix& b = basis.at(nu).matrix();
    for (int i = 0; i < n; ++i) {
        const double u = s.coordinate(i);
        for (int j = 0; j < n; ++j) {
            const double lo = detail::plane_min_eigenvalue(centre, a, b, u, s.coordinate(j));
            s.min_eig[s.flat(i, j)] = lo;
            s.psd[s.flat(i, j)] = lo >= -tol ? 1 : 0;
        }
    }
    return s;
}

/// Distance from the origin to the PSD boundary along direction (du, dv),
/// by bisection on the smallest eigenvalue. Infinite when the ray never
/// leaves the cone (within a radius of 1e6).
inline double boundary_radius(const OperatorBasis& basis, int mu, int nu, int m_outcomes, double du, double dv,
                              double tol = 1e-12) {
    detail::check_plane(basis, mu, nu);
    const double len = std::hypot(du, dv);
    if (!(len > 0)) throw DomainError("direction must be non-zero");
    const int d = basis.dim;
    const CMatrix centre = CMatrix::Identity(d, d) / static_cast<double>(m_outcomes);
    const CMatrix& a = basis.at(mu).matrix();
    const CMatrix& b = basis.at(nu).matrix();
    auto inside = [&](double s) {
        return detail::plane_min_eigenvalue(centre, a, b, s * du / len, s * dv / len) >= 0.0;
    };
    double lo = 0.0;
    double hi = 1.0;
    while (inside(hi)) {
        lo = hi;
        hi *= 2.0;
        if (hi > 1e6) return std::numeric_limits<double>::infinity();
    }
    while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        (inside(mid) ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

/// Overlays the triangle of an (N,3) block at parameter x rotated by
/// `angle` from the default simplex orientation.
inline void attach_triangle(RegionScan& scan, double x, double angle) {
    if (scan.M != 3) throw DomainError("triangle overlay needs M = 3");
    const auto prm = povm_params(scan.d, 1, 3, x);
    const RMatrix v = simplex_vertices(3) * rotation_2d(angle).transpose() * std::sqrt(prm.gamma);
    scan.triangle.clear();
    for (int a = 0; a < 3; ++a) scan.triangle.push_back({v(a, 0), v(a, 1)});
}

/// Grid points within `radius` of the origin that are not marked PSD.
inline int disc_violations(const RegionScan& scan, double radius) {
    int bad = 0;
    for (int i = 0; i < scan.n; ++i) {
        for (int j = 0; j < scan.n; ++j) {
            const double u = scan.coordinate(i), v = scan.coordinate(j);
            if (u * u + v * v <= radius * radius && !scan.psd_at(i, j)) ++bad;
        }
    }
    return bad;
}

/// Checks star-shapedness of the mask along every lattice ray from the
/// origin with direction (p, q), |p|, |q| <= max_step: walking outward, once
/// a non-PSD point is met no later point on the ray may be PSD. Returns the
/// number of offending points.
inline int star_shape_violations(const RegionScan& scan, int max_step = 4) {
    const int o = scan.origin_index();
    int bad = 0;
    for (int p = -max_step; p <= max_step; ++p) {
        for (int q = -max_step; q <= max_step; ++q) {
            if ((p == 0 && q == 0) || std::gcd(p, q) != 1) continue;
            bool left = false;
            for (int k = 1;; ++k) {
                const int i = o + k * p, j = o + k * q;
                if (i < 0 || j < 0 || i >= scan.n || j >= scan.n) break;
                if (!scan.psd_at(i, j)) {
                    left = true;
                } else if (left) {
                    ++bad;
                }
            }
        }
    }
    return bad;
}

struct SimplexRadiiReport {
    int d = 0;
    int M = 0;
    double trace = 0.0;                 // p = d/M
    double centroid_value = 0.0;        // p/d, the eigenvalue of the centroid
    double centroid_residual = 0.0;     // max entry |C_{d-1} - I/M|
    double r_in_sq_explicit = 0.0;      // Tr{(C_{d-1} - C_{d-2})^2} from the centroid operators
    double r_in_sq_bracket = 0.0;       // p^2 [(d-1)(1/d - 1/(d-1))^2 + 1/d^2]
    double r_in_sq_closed = 0.0;        // d / (M^2 (d-1))
    double agreement = 0.0;             // max pairwise difference of the three
    bool agree = false;                 // agreement <= 1e-14
};

/// Centroid and inradius of the simplex of PSD operators with trace d/M
/// sharing one eigenbasis, computed from explicit centroid operators.
inline SimplexRadiiReport simplex_radii(int d, int m_outcomes) {
    if (d < 2 || m_outcomes < 2) throw DomainError("simplex_radii: need d >= 2 and M >= 2");
    SimplexRadiiReport r;
    r.d = d;
    r.M = m_outcomes;
    const double dd = d;
    const double p = dd / m_outcomes;
    r.trace = p;
    r.centroid_value = p / dd;
    // Vertices p P_sigma; the facet opposite vertex 1 has centroid p/(d-1) sum_{sigma>1} P_sigma.
    RVector full = RVector::Constant(d, p / dd);
    RVector facet = RVector::Constant(d, p / (dd - 1));
    facet(0) = 0.0;
    r.centroid_residual = (full.array() - 1.0 / m_outcomes).abs().maxCoeff();
    r.r_in_sq_explicit = (full - facet).squaredNorm();
    const double t = 1.0 / dd - 1.0 / (dd - 1);
    r.r_in_sq_bracket = p * p * ((dd - 1) * t * t + 1.0 / (dd * dd));
    r.r_in_sq_closed = dd / (static_cast<double>(m_outcomes) * m_outcomes * (dd - 1));
    r.agreement = std::max({std::abs(r.r_in_sq_explicit - r.r_in_sq_bracket),
                            std::abs(r.r_in_sq_explicit - r.r_in_sq_closed),
                            std::abs(r.r_in_sq_bracket - r.r_in_sq_closed)});
    r.agree = r.agreement <= 1e-14;
    return r;
}

enum class RatioRule { M_ge_d, M_eq_2 };

inline RatioRule ratio_rule_from_string(const std::string& s) {
    if (s == "M_ge_d") return RatioRule::M_ge_d;
    if (s == "M_eq_2") return RatioRule::M_eq_2;
    throw DomainError("unknown ratio rule '" + s + "' (expected M_ge_d or M_eq_2)");
}

struct CurvePoint {
    int d = 0;
    int M = 0;
    double R = 0.0;
};

/// R(d) = r_in^2 / r_out^2 for d = 2..d_max, using M = d for the M >= d
/// branch and M = 2 for the other.
inline std::vector<CurvePoint> ratio_curve(int d_max, RatioRule rule) {
    if (d_max < 2) throw DomainError("ratio_curve: d_max must be >= 2");
    std::vector<CurvePoint> out;
    for (int d = 2; d <= d_max; ++d) {
        const int m = rule == RatioRule::M_ge_d ? d : 2;
        out.push_back({d, m, radii(d, m).ratio});
    }
    return out;
}

}  // namespace povm
