#include "jackkerov/diagram.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace jackkerov {

GeneralizedDiagram<Rational> corners(const Partition& lambda)
{
    std::vector<Rational> xs{Rational(0)};
    std::vector<Rational> ys{Rational(lambda.length())};
    const auto& parts = lambda.parts();
    for (auto it = parts.rbegin(); it != parts.rend(); ++it) {
        if (*it == xs.back()) continue;
        xs.emplace_back(*it);
        int above = 0;
        for (int p : parts)
            if (p > *it) ++above;
        ys.emplace_back(above);
    }
    return GeneralizedDiagram<Rational>(std::move(xs), std::move(ys));
}

GeneralizedDiagram<FieldElement> corners_symbolic(const Partition& lambda)
{
    return corners(lambda).cast<FieldElement>([](const Rational& q) { return FieldElement(q); });
}

GeneralizedDiagram<double> corners_double(const Partition& lambda)
{
    return corners(lambda).cast<double>([](const Rational& q) { return q.get_d(); });
}

GeneralizedDiagram<FieldElement> anisotropic_symbolic(const Partition& lambda)
{
    const FieldElement t = FieldElement::t();
    return corners_symbolic(lambda).stretched(t, t.inverse());
}

GeneralizedDiagram<double> stretched_double(const Partition& lambda, double s, double u)
{
    return corners_double(lambda).stretched(s, u);
}

namespace {

template <typename S, typename Coef>
S eval_via_power_sums(const SymFun& f, const GeneralizedDiagram<S>& diagram, Coef coef)
{
    const SymFun fp = convert(f, Basis::p);
    std::vector<S> pk(static_cast<std::size_t>(f.degree()) + 1, S(0));
    for (int k = 1; k <= f.degree(); ++k) pk[static_cast<std::size_t>(k)] = power_sum(diagram, k);
    S acc(0);
    for (const auto& [rho, c] : fp.coeffs()) {
        S term = coef(c);
        for (int part : rho.parts()) term = S(term * pk[static_cast<std::size_t>(part)]);
        acc += term;
    }
    return acc;
}

}  // namespace

FieldElement eval_difference_alphabet(const SymFun& f, const GeneralizedDiagram<FieldElement>& diagram)
{
    return eval_via_power_sums(f, diagram, [](const FieldElement& c) { return c; });
}

FieldElement eval_difference_alphabet(const SymFun& f, const GeneralizedDiagram<Rational>& diagram)
{
    return eval_difference_alphabet(f, diagram.cast<FieldElement>([](const Rational& q) { return FieldElement(q); }));
}

double eval_difference_alphabet(const SymFun& f, const GeneralizedDiagram<double>& diagram, double t_value)
{
    return eval_via_power_sums(f, diagram, [t_value](const FieldElement& c) { return c.evaluate(t_value); });
}

Profile::Profile(std::vector<std::pair<double, double>> breakpoints) : points_(std::move(breakpoints))
{
    std::sort(points_.begin(), points_.end());
}

double Profile::operator()(double x) const
{
    if (points_.empty() || x <= points_.front().first || x >= points_.back().first) return std::abs(x);
    auto hi = std::upper_bound(points_.begin(), points_.end(), x,
                               [](double v, const std::pair<double, double>& p) { return v < p.first; });
    auto lo = std::prev(hi);
    const double span = hi->first - lo->first;
    if (span <= 0) return lo->second;
    const double w = (x - lo->first) / span;
    return lo->second + w * (hi->second - lo->second);
}

std::pair<double, double> Profile::support() const
{
    if (points_.empty()) return {0.0, 0.0};
    return {points_.front().first, points_.back().first};
}

void Profile::write_csv(std::ostream& out) const
{
    out << "x,omega\n";
    for (const auto& [x, y] : points_) out << x << ',' << y << '\n';
}

Rational profile_value(const GeneralizedDiagram<Rational>& diagram, const Rational& x)
{
    Rational h = 0;
    for (const auto& o : diagram.outer()) h += abs(x - o);
    for (const auto& i : diagram.inner()) h -= abs(x - i);
    return h;
}

double omega_curve(double x)
{
    if (std::abs(x) >= 2.0) return std::abs(x);
    return 2.0 / std::numbers::pi * (x * std::asin(x / 2.0) + std::sqrt(4.0 - x * x));
}

double LimitShape::operator()(double x) const { return omega_curve(x); }

namespace {

template <typename G>
double sup_distance_impl(const Profile& f, const G& g, std::pair<double, double> g_support,
                         const std::vector<double>& g_breaks, double step)
{
    if (!(step > 0)) throw std::invalid_argument("grid step must be positive");
    auto [flo, fhi] = f.support();
    const double lo = std::min(flo, g_support.first);
    const double hi = std::max(fhi, g_support.second);
    double best = 0.0;
    auto probe = [&](double x) { best = std::max(best, std::abs(f(x) - g(x))); };
    for (const auto& [x, y] : f.breakpoints()) probe(x);
    for (double x : g_breaks) probe(x);
    const auto steps = static_cast<long>(std::ceil((hi - lo) / step));
    for (long k = 0; k <= steps; ++k) probe(std::min(hi, lo + static_cast<double>(k) * step));
    return best;
}

}  // namespace

double sup_distance(const Profile& f, const Profile& g, double grid_step)
{
    std::vector<double> breaks;
    for (const auto& [x, y] : g.breakpoints()) breaks.push_back(x);
    return sup_distance_impl(f, g, g.support(), breaks, grid_step);
}

double sup_distance(const Profile& f, const LimitShape& g, double grid_step)
{
    return sup_distance_impl(f, g, {-2.0, 2.0}, {-2.0, 0.0, 2.0}, grid_step);
}

void write_limit_shape_csv(std::ostream& out, double lo, double hi, double step)
{
    out << "x,omega\n";
    const auto steps = static_cast<long>(std::floor((hi - lo) / step + 1e-9));
    for (long k = 0; k <= steps; ++k) {
        const double x = lo + static_cast<double>(k) * step;
        out << x << ',' << omega_curve(x) << '\n';
    }
}

}  // namespace jackkerov
