#pragma once

#include <cmath>
#include <cstddef>
#include <ostream>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "jackkerov/field.hpp"
#include "jackkerov/partition.hpp"
#include "jackkerov/symfunc.hpp"

namespace jackkerov {

/// Scalars with a total order (Rational, double). Q(t) has none, so checks that
/// need signs are skipped for it.
template <typename S>
inline constexpr bool is_ordered_scalar = std::is_same_v<S, Rational> || std::is_same_v<S, double>;

/// Zigzag line from (0, ys[0]) on the y-axis to (xs.back(), 0) on the x-axis.
/// Outer corner j sits at (xs[j], ys[j]); inner corner j at (xs[j+1], ys[j]).
/// Contents are x - y, so outer = xs[j] - ys[j] and inner = xs[j+1] - ys[j].
template <typename S>
class GeneralizedDiagram {
public:
    GeneralizedDiagram() : xs_{S(0)}, ys_{S(0)} {}
    /// xs strictly increasing from 0, ys strictly decreasing to 0 (checked for
    /// ordered scalars).
    GeneralizedDiagram(std::vector<S> xs, std::vector<S> ys) : xs_(std::move(xs)), ys_(std::move(ys))
    {
        if (xs_.empty() || xs_.size() != ys_.size()) throw std::invalid_argument("corner lists must be non-empty and equal length");
        if (!(xs_.front() == S(0)) || !(ys_.back() == S(0))) throw std::invalid_argument("zigzag must start on the y-axis and end on the x-axis");
        if constexpr (is_ordered_scalar<S>) {
            for (std::size_t j = 0; j + 1 < xs_.size(); ++j)
                if (!(xs_[j] < xs_[j + 1]) || !(ys_[j] > ys_[j + 1])) throw std::invalid_argument("corners are not interlacing");
        }
    }

    std::size_t corner_count() const { return xs_.size(); }
    const std::vector<S>& xs() const { return xs_; }
    const std::vector<S>& ys() const { return ys_; }

    std::vector<S> outer() const
    {
        std::vector<S> o;
        o.reserve(xs_.size());
        for (std::size_t j = 0; j < xs_.size(); ++j) o.push_back(S(xs_[j] - ys_[j]));
        return o;
    }
    std::vector<S> inner() const
    {
        std::vector<S> in;
        for (std::size_t j = 0; j + 1 < xs_.size(); ++j) in.push_back(S(xs_[j + 1] - ys_[j]));
        return in;
    }
    /// Height x + y of outer corner j (value of the profile there).
    S outer_height(std::size_t j) const { return S(xs_[j] + ys_[j]); }
    S inner_height(std::size_t j) const { return S(xs_[j + 1] + ys_[j]); }

    /// T_{s,u}: (x, y) -> (s x, u y).
    GeneralizedDiagram stretched(const S& s, const S& u) const
    {
        if constexpr (is_ordered_scalar<S>) {
            if (!(s > S(0)) || !(u > S(0))) throw std::invalid_argument("stretch factors must be positive");
        } else {
            if (s == S(0) || u == S(0)) throw std::invalid_argument("stretch factors must be non-zero");
        }
        GeneralizedDiagram out = *this;
        for (auto& x : out.xs_) x = S(x * s);
        for (auto& y : out.ys_) y = S(y * u);
        return out;
    }

    template <typename T, typename Convert>
    GeneralizedDiagram<T> cast(Convert convert) const
    {
        std::vector<T> xs, ys;
        for (const auto& x : xs_) xs.push_back(convert(x));
        for (const auto& y : ys_) ys.push_back(convert(y));
        return GeneralizedDiagram<T>(std::move(xs), std::move(ys));
    }

private:
    std::vector<S> xs_;
    std::vector<S> ys_;
};

/// Border of lambda, French convention, exact integer coordinates.
GeneralizedDiagram<Rational> corners(const Partition& lambda);
GeneralizedDiagram<FieldElement> corners_symbolic(const Partition& lambda);
GeneralizedDiagram<double> corners_double(const Partition& lambda);

/// Rebuilds the corner coordinates from interlacing contents
/// o_1 < i_1 < ... < i_{m-1} < o_m with sum(o) = sum(i).
template <typename S>
GeneralizedDiagram<S> diagram_from_contents(const std::vector<S>& outer, const std::vector<S>& inner)
{
    static_assert(is_ordered_scalar<S>, "contents-based construction needs an ordered scalar");
    if (outer.empty() || inner.size() + 1 != outer.size()) throw std::invalid_argument("need |outer| = |inner| + 1");
    S balance(0);
    for (std::size_t j = 0; j < outer.size(); ++j) {
        balance += outer[j];
        if (j < inner.size()) {
            balance -= inner[j];
            if (!(outer[j] < inner[j]) || !(inner[j] < outer[j + 1])) throw std::invalid_argument("contents are not interlacing");
        }
    }
    if (!(balance == S(0))) throw std::invalid_argument("sum of outer contents differs from sum of inner contents");
    // Height at a corner is sum_o |c - o| - sum_i |c - i|.
    auto height = [&](const S& c) {
        S h(0);
        for (const auto& o : outer) h += (c > o) ? S(c - o) : S(o - c);
        for (const auto& i : inner) h -= (c > i) ? S(c - i) : S(i - c);
        return h;
    };
    std::vector<S> xs, ys;
    for (const auto& o : outer) {
        S h = height(o);
        xs.push_back(S((h + o) / S(2)));
        ys.push_back(S((h - o) / S(2)));
    }
    return GeneralizedDiagram<S>(std::move(xs), std::move(ys));
}

/// T_{s,u}(L); D_s(L) is stretch(L, s, s).
template <typename S>
GeneralizedDiagram<S> stretch(const GeneralizedDiagram<S>& diagram, const S& s, const S& u)
{
    return diagram.stretched(s, u);
}

/// T_{t, 1/t}(lambda) with t = sqrt(alpha) symbolic.
GeneralizedDiagram<FieldElement> anisotropic_symbolic(const Partition& lambda);
/// T_{s, u}(lambda) evaluated in double precision.
GeneralizedDiagram<double> stretched_double(const Partition& lambda, double s, double u);

/// p_k(O - I) = sum o^k - sum i^k.
template <typename S>
S power_sum(const GeneralizedDiagram<S>& diagram, int k)
{
    S acc(0);
    for (const auto& o : diagram.outer()) {
        S v(1);
        for (int i = 0; i < k; ++i) v = S(v * o);
        acc += v;
    }
    for (const auto& in : diagram.inner()) {
        S v(1);
        for (int i = 0; i < k; ++i) v = S(v * in);
        acc -= v;
    }
    return acc;
}

/// f(O - I) through the power-sum expansion of f.
FieldElement eval_difference_alphabet(const SymFun& f, const GeneralizedDiagram<FieldElement>& diagram);
FieldElement eval_difference_alphabet(const SymFun& f, const GeneralizedDiagram<Rational>& diagram);
/// Coefficients of f are specialised at t = t_value.
double eval_difference_alphabet(const SymFun& f, const GeneralizedDiagram<double>& diagram, double t_value);

/// Piecewise-linear profile: breakpoints sorted by content, |x| outside.
class Profile {
public:
    Profile() = default;
    explicit Profile(std::vector<std::pair<double, double>> breakpoints);

    const std::vector<std::pair<double, double>>& breakpoints() const { return points_; }
    double operator()(double x) const;
    /// Smallest interval outside which the profile equals |x|.
    std::pair<double, double> support() const;
    /// "x,omega" rows preceded by a header line.
    void write_csv(std::ostream& out) const;

private:
    std::vector<std::pair<double, double>> points_;
};

/// Profile of a diagram: minima at outer contents, maxima at inner contents.
template <typename S>
Profile profile(const GeneralizedDiagram<S>& diagram)
{
    static_assert(is_ordered_scalar<S>, "profiles need an ordered scalar");
    auto to_d = [](const S& v) {
        if constexpr (std::is_same_v<S, Rational>) return v.get_d();
        else return static_cast<double>(v);
    };
    std::vector<std::pair<double, double>> pts;
    const std::size_t m = diagram.corner_count();
    for (std::size_t j = 0; j < m; ++j) {
        pts.emplace_back(to_d(S(diagram.xs()[j] - diagram.ys()[j])), to_d(diagram.outer_height(j)));
        if (j + 1 < m) pts.emplace_back(to_d(S(diagram.xs()[j + 1] - diagram.ys()[j])), to_d(diagram.inner_height(j)));
    }
    return Profile(std::move(pts));
}

/// Exact profile value at x for rational diagrams: sum_o |x-o| - sum_i |x-i|.
Rational profile_value(const GeneralizedDiagram<Rational>& diagram, const Rational& x);

/// The limit curve Omega.
struct LimitShape {
    double operator()(double x) const;
};
double omega_curve(double x);

/// sup |f - g| over the union of supports, evaluated at every breakpoint and on
/// a uniform grid of the given step; both sides are 1-Lipschitz, so the result
/// is within step/2 of the true supremum.
double sup_distance(const Profile& f, const Profile& g, double grid_step = 1e-3);
double sup_distance(const Profile& f, const LimitShape& g, double grid_step = 1e-3);

/// Omega sampled on [lo, hi] as "x,omega" CSV rows.
void write_limit_shape_csv(std::ostream& out, double lo, double hi, double step);

}  // namespace jackkerov
