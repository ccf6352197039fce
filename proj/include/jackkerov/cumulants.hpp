#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "jackkerov/diagram.hpp"
#include "jackkerov/field.hpp"
#include "jackkerov/partition.hpp"

namespace jackkerov {

template <typename S>
struct Atom {
    S location;
    S mass;
};

/// Transition measure: one atom per outer corner o, with mass equal to the
/// residue prod_i (o - i) / prod_{o' != o} (o - o').
template <typename S>
std::vector<Atom<S>> transition_measure(const GeneralizedDiagram<S>& diagram)
{
    const auto outer = diagram.outer();
    const auto inner = diagram.inner();
    std::vector<Atom<S>> atoms;
    atoms.reserve(outer.size());
    for (std::size_t a = 0; a < outer.size(); ++a) {
        S mass(1);
        // Alternate numerator and denominator factors to keep doubles in range.
        std::size_t ii = 0;
        for (std::size_t b = 0; b < outer.size(); ++b) {
            if (b == a) continue;
            mass = S(mass / S(outer[a] - outer[b]));
            if (ii < inner.size()) mass = S(mass * S(outer[a] - inner[ii++]));
        }
        while (ii < inner.size()) mass = S(mass * S(outer[a] - inner[ii++]));
        atoms.push_back({outer[a], mass});
    }
    return atoms;
}

/// M_0..M_K of the transition measure.
template <typename S>
struct MomentSequence {
    std::vector<S> values;
    const S& operator[](int k) const { return values.at(static_cast<std::size_t>(k)); }
    int order() const { return static_cast<int>(values.size()) - 1; }
};

/// R_1..R_K; values[0] is an unused zero slot so that values[k] = R_k.
template <typename S>
struct CumulantSequence {
    std::vector<S> values;
    const S& operator[](int k) const
    {
        if (k < 1) throw std::out_of_range("free cumulants are indexed from 1");
        return values.at(static_cast<std::size_t>(k));
    }
    int order() const { return static_cast<int>(values.size()) - 1; }
};

/// M_k = h_k(O - I) from prod_i (1 - z i) / prod_o (1 - z o), truncated at z^K.
template <typename S>
MomentSequence<S> moments(const GeneralizedDiagram<S>& diagram, int order)
{
    const std::size_t len = static_cast<std::size_t>(order) + 1;
    std::vector<S> series(len, S(0));
    series[0] = S(1);
    for (const auto& i : diagram.inner())
        for (std::size_t k = len; k-- > 1;) series[k] = S(series[k] - i * series[k - 1]);
    for (const auto& o : diagram.outer())
        for (std::size_t k = 1; k < len; ++k) series[k] = S(series[k] + o * series[k - 1]);
    return {std::move(series)};
}

/// Moments directly from the atoms: sum mass * location^k.
template <typename S>
MomentSequence<S> moments_from_atoms(const std::vector<Atom<S>>& atoms, int order)
{
    std::vector<S> m(static_cast<std::size_t>(order) + 1, S(0));
    for (const auto& a : atoms) {
        S pw = a.mass;
        for (int k = 0; k <= order; ++k) {
            m[static_cast<std::size_t>(k)] += pw;
            pw = S(pw * a.location);
        }
    }
    return {std::move(m)};
}

/// Free cumulants via M_n = sum_{k=1}^n R_k [z^{n-k}] M(z)^k, M(z) = sum_i M_i z^i.
template <typename S>
CumulantSequence<S> free_cumulants(const MomentSequence<S>& m)
{
    if (m.values.empty() || !(m.values[0] == S(1))) throw std::invalid_argument("moment sequence must start with M_0 = 1");
    const int order = m.order();
    const std::size_t len = static_cast<std::size_t>(order) + 1;
    // powers[k] = M(z)^k truncated at z^order.
    std::vector<std::vector<S>> powers(len, std::vector<S>(len, S(0)));
    powers[0][0] = S(1);
    for (std::size_t k = 1; k < len; ++k)
        for (std::size_t a = 0; a < len; ++a) {
            if (powers[k - 1][a] == S(0)) continue;
            for (std::size_t b = 0; a + b < len; ++b)
                if (!(m.values[b] == S(0))) powers[k][a + b] += S(powers[k - 1][a] * m.values[b]);
        }
    std::vector<S> r(len, S(0));
    for (std::size_t n = 1; n < len; ++n) {
        S acc = m.values[n];
        for (std::size_t k = 1; k < n; ++k)
            if (!(r[k] == S(0))) acc -= S(r[k] * powers[k][n - k]);
        r[n] = acc;
    }
    return {std::move(r)};
}

/// Inverse relation: moments from free cumulants (R_1..R_K given in values[1..K]).
template <typename S>
MomentSequence<S> moments_from_cumulants(const CumulantSequence<S>& r)
{
    const int order = r.order();
    const std::size_t len = static_cast<std::size_t>(order) + 1;
    std::vector<S> m(len, S(0));
    m[0] = S(1);
    for (std::size_t n = 1; n < len; ++n) {
        // powers of the partial series with known M_0..M_{n-1}
        S acc(0);
        for (std::size_t k = 1; k <= n; ++k) {
            if (r.values[k] == S(0)) continue;
            // [z^{n-k}] M(z)^k using M_0..M_{n-k}; recomputed directly.
            std::vector<S> pw(n - k + 1, S(0));
            pw[0] = S(1);
            for (std::size_t rep = 0; rep < k; ++rep) {
                std::vector<S> next(n - k + 1, S(0));
                for (std::size_t a = 0; a <= n - k; ++a) {
                    if (pw[a] == S(0)) continue;
                    for (std::size_t b = 0; a + b <= n - k; ++b) next[a + b] += S(pw[a] * m[b]);
                }
                pw = std::move(next);
            }
            acc += S(r.values[k] * pw[n - k]);
        }
        m[n] = acc;
    }
    return {std::move(m)};
}

/// M_k^(alpha)(lambda) and R_k^(alpha)(lambda) in Q(t), from T_{t,1/t}(lambda).
struct AnisotropicMR {
    MomentSequence<FieldElement> moments;
    CumulantSequence<FieldElement> cumulants;
};
AnisotropicMR anisotropic_MR(const Partition& lambda, int order);

/// Moments of lambda^{(o)} from those of lambda after adding a box whose
/// corner has anisotropic content z_o:
///   M_k' - M_k = sum_{r>=1, s,t>=0, 2r+s+t<=k} z_o^{k-2r-s-t} C(k-t-1, 2r+s-1) C(r+s-1, s) (-gamma)^s M_t.
template <typename S>
MomentSequence<S> add_box_update(const MomentSequence<S>& m, const S& z_o, const S& gamma, int order)
{
    if (m.order() < order) throw std::invalid_argument("moment sequence shorter than requested order");
    auto binom = [](int n, int k) { return S(static_cast<long>(binomial(n, k).get_si())); };
    std::vector<S> zp(static_cast<std::size_t>(order) + 1, S(1));
    std::vector<S> gp(static_cast<std::size_t>(order) + 1, S(1));
    const S neg_gamma = S(S(0) - gamma);
    for (std::size_t i = 1; i < zp.size(); ++i) {
        zp[i] = S(zp[i - 1] * z_o);
        gp[i] = S(gp[i - 1] * neg_gamma);
    }
    MomentSequence<S> out;
    out.values.assign(m.values.begin(), m.values.begin() + order + 1);
    for (int k = 2; k <= order; ++k) {
        S delta(0);
        for (int r = 1; 2 * r <= k; ++r)
            for (int s = 0; 2 * r + s <= k; ++s)
                for (int t = 0; 2 * r + s + t <= k; ++t) {
                    if (m[t] == S(0)) continue;
                    const S c = S(binom(k - t - 1, 2 * r + s - 1) * binom(r + s - 1, s));
                    delta += S(S(c * zp[static_cast<std::size_t>(k - 2 * r - s - t)]) * S(gp[static_cast<std::size_t>(s)] * m[t]));
                }
        out.values[static_cast<std::size_t>(k)] += delta;
    }
    return out;
}

/// Per-k outcome of checking t^{k-2} M_k^(alpha)(lambda) in Z[t^2].
struct IntegralityRecord {
    int k;
    FieldElement scaled;  // t^{k-2} M_k
    bool passed;
};
struct IntegralityReport {
    Partition lambda;
    std::vector<IntegralityRecord> records;
    bool all_passed() const;
};
IntegralityReport integrality_check(const Partition& lambda, int order);

/// True when f is a polynomial in t with integer coefficients on even powers only.
bool is_integer_polynomial_in_alpha(const FieldElement& f);

/// CSV rows "k,M_k,R_k".
std::string moments_csv(const AnisotropicMR& mr);

}  // namespace jackkerov
