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

// Existence conditions for (N,M)-POVMs.
//
// Sufficient: every element with Tr{(Pi - I/M)^2} = x - d/M^2 <= r_in^2 is
// PSD, where r_in is the inradius of the eigenvalue simplex around I/M.
//
// Necessary (optimal x only):
//   M >= d      elements are rank one with eigenvalue d/M, and the operators
//               G = c (I + sqrt(M) Pi_{alpha,M} - sqrt(M)(sqrt(M)+1) Pi_{alpha,a})
//               form an isospectral orthonormal traceless set;
//   2 <= M < d  elements are projectors of rank d/M, so d/M must be integral;
//   M = 2       K = (Pi - I/2)/sqrt(d/4) has spectrum +-1/sqrt(d) with equal
//               multiplicities, K_{alpha,2} = -K_{alpha,1}, and the K_{alpha,1}
//               are orthonormal. This is also sufficient.

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "povm/model.hpp"

namespace povm {

struct RadiiReport {
    int d = 0;
    int M = 0;
    double r_in_sq = 0.0;           // d / (M^2 (d-1))
    double r_out_sq = 0.0;          // min(d(M-1)/M^2, d(d-1)/M^2)
    double ratio = 0.0;             // r_in_sq / r_out_sq
    double sufficient_x_max = 0.0;  // d/M^2 + r_in_sq
};

/// The ratio r_in^2 / r_out^2 in closed form: 1/(d-1)^2 for M >= d,
/// 1/((M-1)(d-1)) for 2 <= M < d.
inline double radius_ratio_closed_form(int d, int m_outcomes) {
    const double dm1 = d - 1;
    return m_outcomes >= d ? 1.0 / (dm1 * dm1) : 1.0 / ((m_outcomes - 1) * dm1);
}

inline RadiiReport radii(int d, int m_outcomes) {
    if (d < 2 || m_outcomes < 2) throw DomainError("radii: need d >= 2 and M >= 2");
    const double dd = d;
    const double mm = m_outcomes;
    RadiiReport r;
    r.d = d;
    r.M = m_outcomes;
    r.r_in_sq = dd / (mm * mm * (dd - 1));
    r.r_out_sq = std::min(dd * (mm - 1) / (mm * mm), dd * (dd - 1) / (mm * mm));
    r.ratio = r.r_in_sq / r.r_out_sq;
    r.sufficient_x_max = dd / (mm * mm) + r.r_in_sq;
    const double closed = radius_ratio_closed_form(d, m_outcomes);
    const double gap = std::abs(r.ratio - closed);
    if (gap > 1e-14 * std::max(1.0, closed)) throw NumericError("radius ratio disagrees with closed form", gap);
    return r;
}

/// x - d/M^2 <= r_in^2, within kOptimalityTol.
inline bool check_sufficient(const PovmParams& p) {
    return p.x <= radii(p.d, p.M).sufficient_x_max + kOptimalityTol;
}

/// Common spectrum of the isospectral operators extracted from an optimal
/// (N,M)-POVM with M >= d: c(1 + L+), c (d-2 fold), c(1 + L-) with
/// c = sqrt(M-1) / ((sqrt(M)+1) sqrt(d^2-d)) and
/// L+- = (-d +- sqrt(d^2 + 4 (d^2-d)/(sqrt(M)-1))) / 2.
inline Spectrum predicted_iso_spectrum(int d, int m_outcomes) {
    if (d < 2 || m_outcomes < d) {
        throw RegimeError("predicted_iso_spectrum needs M >= d >= 2, got d=" + std::to_string(d) +
                          " M=" + std::to_string(m_outcomes));
    }
    const double dd = d;
    const double sm = std::sqrt(static_cast<double>(m_outcomes));
    const double c = std::sqrt(m_outcomes - 1.0) / ((sm + 1.0) * std::sqrt(dd * dd - dd));
    const double disc = std::sqrt(dd * dd + 4.0 * (dd * dd - dd) / (sm - 1.0));
    const double l_plus = 0.5 * (-dd + disc);
    const double l_minus = 0.5 * (-dd - disc);
    Spectrum s;
    s.eigenvalues.push_back(c * (1.0 + l_plus));
    s.multiplicities.push_back(1);
    if (d > 2) {
        s.eigenvalues.push_back(c);
        s.multiplicities.push_back(d - 2);
    }
    s.eigenvalues.push_back(c * (1.0 + l_minus));
    s.multiplicities.push_back(1);
    return s;
}

enum class Regime { M_ge_d, M_between, M_eq_2 };

inline std::string to_string(Regime r) {
    switch (r) {
        case Regime::M_ge_d: return "M_ge_d";
        case Regime::M_between: return "M_between";
        case Regime::M_eq_2: return "M_eq_2";
    }
    return "unknown";
}

/// One diagnostic. `index` is a 1-based element or operator position, 0 when
/// the witness summarizes a whole family (then it names the worst offender
/// in `worst_index`).
struct Witness {
    std::string check;
    int index = 0;
    int worst_index = 0;
    double value = 0.0;
    double expected = 0.0;
    double residual = 0.0;
    double tolerance = 0.0;
    bool ok = true;
};

struct NecessaryReport {
    Regime regime = Regime::M_ge_d;
    bool passed = true;
    std::string reason;  // set on an immediate arithmetic failure
    std::vector<Witness> witnesses;
    std::vector<HermitianOperator> extracted_operators;

    void add(Witness w) {
        w.ok = w.residual <= w.tolerance;
        passed = passed && w.ok;
        witnesses.push_back(std::move(w));
    }
    void fail(std::string why, Witness w) {
        w.ok = false;
        passed = false;
        reason = std::move(why);
        witnesses.push_back(std::move(w));
    }
};

/// Eigenvalues below kRankRelTol * (d/M) count as zero.
inline constexpr double kRankRelTol = 1e-9;

namespace detail {

inline int numeric_rank(const std::vector<double>& ev, double scale) {
    int r = 0;
    for (double v : ev)
        if (v > kRankRelTol * scale) ++r;
    return r;
}

/// Tracks the maximum residual of a family of comparisons.
struct WorstCase {
    double residual = 0.0;
    double value = 0.0;
    int index = 0;
    void update(double res, double val, int idx) {
        if (index == 0 || res > residual) {
            residual = res;
            value = val;
            index = idx;
        }
    }
};

inline Witness summary(const std::string& check, const WorstCase& w, double expected, double tol) {
    Witness out;
    out.check = check;
    out.worst_index = w.index;
    out.value = w.value;
    out.expected = expected;
    out.residual = w.residual;
    out.tolerance = tol;
    return out;
}

}  // namespace detail

/// Necessary condition for optimal (N,M)-POVMs with M >= d.
inline NecessaryReport check_optimal_m_ge_d(const NMPovm& p, double tol = 1e-9) {
    const auto& prm = p.params();
    const int d = prm.d;
    const int M = prm.M;
    if (M < d) throw RegimeError("M >= d required, got d=" + std::to_string(d) + " M=" + std::to_string(M));
    if (!prm.optimal) throw RegimeError("POVM is not optimal: x gap " + std::to_string(prm.optimality_gap()));

    NecessaryReport rep;
    rep.regime = Regime::M_ge_d;
    const double top = static_cast<double>(d) / M;

    std::vector<CVector> states;
    for (int i = 0; i < p.size(); ++i) {
        const auto dec = eigen_decompose(p.elements()[static_cast<std::size_t>(i)]);
        const int rank = detail::numeric_rank(dec.values, top);
        Witness wr;
        wr.check = "rank";
        wr.index = i + 1;
        wr.value = rank;
        wr.expected = 1;
        wr.residual = std::abs(rank - 1);
        wr.tolerance = 0;
        rep.add(wr);
        Witness we;
        we.check = "eigenvalue";
        we.index = i + 1;
        we.value = dec.values.front();
        we.expected = top;
        we.residual = std::abs(dec.values.front() - top);
        we.tolerance = tol;
        rep.add(we);
        states.push_back(dec.vectors.col(0));
    }

    const double intra = std::sqrt((static_cast<double>(M) / d - 1.0) / (M - 1.0));
    const double inter = std::sqrt(1.0 / d);
    detail::WorstCase wi, wx;
    for (int i = 0; i < p.size(); ++i) {
        for (int j = i + 1; j < p.size(); ++j) {
            const double ov = std::abs(states[static_cast<std::size_t>(i)].dot(states[static_cast<std::size_t>(j)]));
            const bool same = i / M == j / M;
            (same ? wi : wx).update(std::abs(ov - (same ? intra : inter)), ov, i + 1);
        }
    }
    rep.add(detail::summary("overlap_intra", wi, intra, tol));
    if (prm.N > 1) rep.add(detail::summary("overlap_inter", wx, inter, tol));

    const double sm = std::sqrt(static_cast<double>(M));
    const double c = std::sqrt(M - 1.0) / ((sm + 1.0) * std::sqrt(static_cast<double>(d) * d - d));
    const CMatrix id = CMatrix::Identity(d, d);
    for (int alpha = 1; alpha <= prm.N; ++alpha) {
        const CMatrix& anchor = p.element(alpha, M).matrix();
        for (int a = 1; a < M; ++a) {
            const CMatrix aop = sm * anchor - sm * (sm + 1.0) * p.element(alpha, a).matrix();
            rep.extracted_operators.emplace_back(c * (id + aop), 1e-9);
        }
    }

    const Spectrum predicted = predicted_iso_spectrum(d, M);
    detail::WorstCase wt, ws;
    for (std::size_t k = 0; k < rep.extracted_operators.size(); ++k) {
        const auto& g = rep.extracted_operators[k];
        wt.update(std::abs(g.trace()), g.trace(), static_cast<int>(k) + 1);
        const auto ev = eigenvalues(g);
        const auto pe = predicted.expanded();
        double worst = 0.0;
        for (std::size_t j = 0; j < ev.size(); ++j) worst = std::max(worst, std::abs(ev[j] - pe[j]));
        ws.update(worst, ev.front(), static_cast<int>(k) + 1);
    }
    rep.add(detail::summary("extracted_trace", wt, 0.0, tol));
    const RMatrix gram = gram_matrix(rep.extracted_operators);
    detail::WorstCase wg;
    wg.update((gram - RMatrix::Identity(gram.rows(), gram.cols())).cwiseAbs().maxCoeff(), 0.0, 1);
    rep.add(detail::summary("extracted_orthonormality", wg, 0.0, tol));
    rep.add(detail::summary("extracted_spectrum", ws, predicted.eigenvalues.front(), tol));
    return rep;
}

/// Necessary condition for optimal (N,M)-POVMs with 2 <= M < d: every
/// element is a projector of rank d/M.
inline NecessaryReport check_optimal_m_between(const NMPovm& p, double tol = 1e-9) {
    const auto& prm = p.params();
    const int d = prm.d;
    const int M = prm.M;
    if (M < 2 || M >= d) throw RegimeError("2 <= M < d required, got d=" + std::to_string(d) + " M=" + std::to_string(M));
    if (!prm.optimal) throw RegimeError("POVM is not optimal: x gap " + std::to_string(prm.optimality_gap()));

    NecessaryReport rep;
    rep.regime = Regime::M_between;
    if (d % M != 0) {
        Witness w;
        w.check = "d/M integral";
        w.value = static_cast<double>(d) / M;
        w.expected = std::round(w.value);
        w.residual = std::abs(w.value - w.expected);
        std::ostringstream os;
        os << "d/M = " << d << "/" << M << " is not an integer";
        rep.fail(os.str(), w);
        return rep;
    }
    const int rank_expected = d / M;
    const double scale = static_cast<double>(d) / M;
    for (int i = 0; i < p.size(); ++i) {
        const auto& e = p.elements()[static_cast<std::size_t>(i)];
        const auto ev = eigenvalues(e);
        double off = 0.0;
        for (double v : ev) off = std::max(off, std::min(std::abs(v), std::abs(v - 1.0)));
        Witness we{"eigenvalues_in_0_1", i + 1, 0, off, 0.0, off, tol, true};
        rep.add(we);
        const int rank = detail::numeric_rank(ev, scale);
        Witness wr{"rank", i + 1, 0, static_cast<double>(rank), static_cast<double>(rank_expected),
                   static_cast<double>(std::abs(rank - rank_expected)), 0.0, true};
        rep.add(wr);
        const double idem = (e.matrix() * e.matrix() - e.matrix()).norm();
        Witness wi{"idempotence", i + 1, 0, idem, 0.0, idem, tol, true};
        rep.add(wi);
    }
    return rep;
}

/// Necessary and sufficient condition for optimal (N,2)-POVMs, N <= d^2-1.
inline NecessaryReport check_optimal_m2(const NMPovm& p, double tol = 1e-10) {
    const auto& prm = p.params();
    const int d = prm.d;
    if (prm.M != 2) throw RegimeError("M = 2 required, got M=" + std::to_string(prm.M));
    if (!prm.optimal) throw RegimeError("POVM is not optimal: x gap " + std::to_string(prm.optimality_gap()));
    if (prm.N > d * d - 1) throw RegimeError("N <= d^2-1 required");

    NecessaryReport rep;
    rep.regime = Regime::M_eq_2;
    if (d % 2 != 0) {
        Witness w;
        w.check = "d even";
        w.value = d;
        w.expected = 0;
        w.residual = 1;
        rep.fail("d odd", w);
        return rep;
    }
    const double norm = 1.0 / std::sqrt(d / 4.0);
    const CMatrix half_id = CMatrix::Identity(d, d) * 0.5;
    std::vector<HermitianOperator> k_ops;
    for (const auto& e : p.elements()) k_ops.emplace_back((e.matrix() - half_id) * norm);

    const double level = 1.0 / std::sqrt(static_cast<double>(d));
    detail::WorstCase ws, wt, wn, wa;
    for (std::size_t i = 0; i < k_ops.size(); ++i) {
        const auto ev = eigenvalues(k_ops[i]);
        double worst = 0.0;
        for (int j = 0; j < d; ++j) {
            const double want = j < d / 2 ? level : -level;
            worst = std::max(worst, std::abs(ev[static_cast<std::size_t>(j)] - want));
        }
        ws.update(worst, ev.front(), static_cast<int>(i) + 1);
        wt.update(std::abs(k_ops[i].trace()), k_ops[i].trace(), static_cast<int>(i) + 1);
        const double n2 = hs_inner(k_ops[i], k_ops[i]);
        wn.update(std::abs(n2 - 1.0), n2, static_cast<int>(i) + 1);
    }
    for (int alpha = 0; alpha < prm.N; ++alpha) {
        const auto& k1 = k_ops[static_cast<std::size_t>(2 * alpha)];
        const auto& k2 = k_ops[static_cast<std::size_t>(2 * alpha + 1)];
        wa.update(max_abs_diff(k2.matrix(), -k1.matrix()), 0.0, alpha + 1);
        rep.extracted_operators.push_back(k1);
    }
    rep.add(detail::summary("K_spectrum", ws, level, tol));
    rep.add(detail::summary("K_trace", wt, 0.0, tol));
    rep.add(detail::summary("K_normalization", wn, 1.0, tol));
    rep.add(detail::summary("K_antisymmetry", wa, 0.0, tol));

    const RMatrix gram = gram_matrix(rep.extracted_operators);
    detail::WorstCase wo;
    for (int i = 0; i < gram.rows(); ++i)
        for (int j = i + 1; j < gram.cols(); ++j) wo.update(std::abs(gram(i, j)), gram(i, j), i + 1);
    rep.add(detail::summary("K_orthogonality", wo, 0.0, tol));
    return rep;
}

/// Dispatches to the necessary-condition check of the POVM's regime:
/// M = 2 first, then 2 < M < d, then M >= d.
inline NecessaryReport check_necessary(const NMPovm& p) {
    const auto& prm = p.params();
    if (prm.M == 2) return check_optimal_m2(p);
    if (prm.M < prm.d) return check_optimal_m_between(p);
    return check_optimal_m_ge_d(p);
}

struct ScreenCheck {
    std::string name;
    bool passed = true;
    std::string detail;
};

/// Parameter-only screening of optimal (N,M)-POVMs. Never claims existence;
/// `excluded == false` means only that no necessary condition rules it out.
struct ScreenReport {
    int d = 0;
    int N = 0;
    int M = 0;
    Regime regime = Regime::M_ge_d;
    double x_optimal = 0.0;
    double gamma = 0.0;
    bool informationally_complete = false;  // (M-1) N + 1 == d^2
    std::optional<int> projector_rank;      // d/M for M < d when integral
    std::vector<ScreenCheck> checks;
    std::vector<std::string> reasons;       // one per failed check
    bool excluded = false;
    bool construction_known = false;        // M = 2, d = 2^k: Pauli construction exists
    std::string verdict;
};

inline ScreenReport feasibility_screen(int d, int n_povms, int m_outcomes) {
    if (d < 2 || n_povms < 1 || m_outcomes < 2) throw DomainError("screen needs d >= 2, N >= 1, M >= 2");
    ScreenReport r;
    r.d = d;
    r.N = n_povms;
    r.M = m_outcomes;
    r.regime = m_outcomes == 2 ? Regime::M_eq_2 : (m_outcomes < d ? Regime::M_between : Regime::M_ge_d);
    r.x_optimal = optimal_x(d, m_outcomes);
    const double mm = m_outcomes;
    r.gamma = (r.x_optimal * mm * mm - d) / (mm * (mm - 1));
    r.informationally_complete = (m_outcomes - 1) * n_povms + 1 == d * d;

    auto add = [&](std::string name, bool ok, std::string detail, std::string reason) {
        r.checks.push_back({std::move(name), ok, std::move(detail)});
        if (!ok) r.reasons.push_back(std::move(reason));
    };

    if (m_outcomes == 2) {
        add("d even", d % 2 == 0, "d = " + std::to_string(d), "d odd");
    }
    if (m_outcomes < d) {
        const bool integral = d % m_outcomes == 0;
        std::ostringstream os;
        os << "d/M = " << d << "/" << m_outcomes;
        if (integral) {
            r.projector_rank = d / m_outcomes;
            os << " = " << *r.projector_rank << " (elements are rank-" << *r.projector_rank << " projectors)";
        }
        add("d/M integral", integral, os.str(), "d/M not integral");
    } else {
        add("rank-one elements", true, "elements must be (d/M)|psi><psi|", "");
    }
    const long used = static_cast<long>(n_povms) * (m_outcomes - 1);
    add("dimension count", used <= static_cast<long>(d) * d - 1,
        "N(M-1) = " + std::to_string(used) + ", d^2-1 = " + std::to_string(d * d - 1), "N(M-1) > d^2-1");

    r.excluded = !r.reasons.empty();
    r.construction_known = !r.excluded && m_outcomes == 2 && (d & (d - 1)) == 0;
    r.verdict = r.excluded ? "excluded" : "not excluded";
    return r;
}

}  // namespace povm
