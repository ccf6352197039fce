#include "jackkerov/plancherel.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <map>
#include <memory>
#include <mutex>
#include <ostream>
#include <random>
#include <stdexcept>
#include <thread>

#include "json.hpp"
#include "jackkerov/cumulants.hpp"
#include "jackkerov/diagram.hpp"
#include "jackkerov/errors.hpp"
#include "jackkerov/kerov.hpp"

namespace jackkerov {

namespace {

// Pairwise summation keeps intermediate denominators small.
template <typename S>
S tree_sum(std::vector<S> xs)
{
    if (xs.empty()) return S(0L);
    while (xs.size() > 1) {
        std::vector<S> next;
        next.reserve((xs.size() + 1) / 2);
        for (std::size_t i = 0; i + 1 < xs.size(); i += 2) next.push_back(xs[i] + xs[i + 1]);
        if (xs.size() % 2) next.push_back(xs.back());
        xs = std::move(next);
    }
    return xs.front();
}

void check_cap(int n, int cap)
{
    if (n < 0) throw std::invalid_argument("negative size");
    if (n > cap) throw CapExceeded("enumeration size " + std::to_string(n) + " exceeds cap " + std::to_string(cap));
}

// Box hooks as (a, l) pairs.
template <typename F>
void for_each_box(const Partition& lambda, F&& f)
{
    const Partition conj = lambda.conjugate();
    for (int i = 0; i < lambda.length(); ++i)
        for (int j = 0; j < lambda.part(i); ++j) f(lambda.part(i) - j - 1, conj.part(j) - i - 1);
}

// P_n in the variable alpha (held in the t slot), cached per n.
const std::vector<std::pair<Partition, FieldElement>>& dist_alpha(int n)
{
    static std::mutex mutex;
    static std::map<int, std::shared_ptr<std::vector<std::pair<Partition, FieldElement>>>> cache;
    std::lock_guard lock(mutex);
    auto& slot = cache[n];
    if (!slot) {
        slot = std::make_shared<std::vector<std::pair<Partition, FieldElement>>>();
        const Polynomial top = Polynomial::monomial(Rational(factorial(n)), n);
        std::vector<FieldElement> terms;
        for (auto& lambda : enumerate_partitions(n)) {
            FieldElement p(top, jack_hook(lambda).value);
            terms.push_back(p);
            slot->emplace_back(std::move(lambda), std::move(p));
        }
        if (!tree_sum(std::move(terms)).is_one())
            throw std::logic_error("Jack-Plancherel probabilities do not sum to 1 at n = " + std::to_string(n));
    }
    return *slot;
}

const std::vector<std::pair<Partition, FieldElement>>& dist_t(int n)
{
    static std::mutex mutex;
    static std::map<int, std::shared_ptr<std::vector<std::pair<Partition, FieldElement>>>> cache;
    const auto& base = dist_alpha(n);
    std::lock_guard lock(mutex);
    auto& slot = cache[n];
    if (!slot) {
        slot = std::make_shared<std::vector<std::pair<Partition, FieldElement>>>();
        for (const auto& [lambda, p] : base) slot->emplace_back(lambda, p.substitute_square());
    }
    return *slot;
}

// Outer corners sit at alpha*lambda_q - q (row q addable), inner corners at
// alpha*lambda_q - (q+1) (row q removable); this is T_{sqrt(alpha), 1/sqrt(alpha)}
// scaled by sqrt(alpha), which leaves transition-measure masses unchanged.
template <typename S>
std::vector<std::pair<int, S>> kernel_generic(const Partition& lambda, const S& alpha)
{
    const auto add = lambda.addable_rows();
    const auto rem = lambda.removable_rows();
    std::vector<S> outer, inner;
    for (int q : add) outer.push_back(S(alpha * S(static_cast<long>(lambda.part(q))) - S(static_cast<long>(q))));
    for (int q : rem) inner.push_back(S(alpha * S(static_cast<long>(lambda.part(q))) - S(static_cast<long>(q + 1))));
    std::vector<std::pair<int, S>> out;
    for (std::size_t a = 0; a < outer.size(); ++a) {
        S mass(1L);
        std::size_t ii = 0;
        for (std::size_t b = 0; b < outer.size(); ++b) {
            if (b == a) continue;
            mass = S(mass / S(outer[a] - outer[b]));
            if (ii < inner.size()) mass = S(mass * S(outer[a] - inner[ii++]));
        }
        while (ii < inner.size()) mass = S(mass * S(outer[a] - inner[ii++]));
        out.emplace_back(add[a], std::move(mass));
    }
    return out;
}

std::string fmt(double v)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

struct Corner {
    int row;
    double pos;
    double mass;
};

class Grower {
public:
    Grower(double alpha, std::uint64_t seed) : alpha_(alpha), rng_(seed)
    {
        if (!(alpha > 0) || !std::isfinite(alpha)) throw std::invalid_argument("alpha must be positive");
        corners_.push_back({0, 0.0, 1.0});
    }

    void step()
    {
        if (steps_++ % 256 == 0) recompute();
        double total = 0;
        for (const auto& c : corners_) total += c.mass;
        const double u = std::uniform_real_distribution<double>(0.0, 1.0)(rng_) * total;
        std::size_t a = 0;
        double acc = corners_[0].mass;
        while (a + 1 < corners_.size() && acc <= u) acc += corners_[++a].mass;

        const int r = corners_[a].row;
        const double o = corners_[a].pos;
        const int old = len(r);
        if (r == static_cast<int>(rows_.size()))
            rows_.push_back(1);
        else
            ++rows_[static_cast<std::size_t>(r)];

        for (std::size_t b = 0; b < corners_.size(); ++b) {
            if (b == a) continue;
            const double d = corners_[b].pos - o;
            corners_[b].mass *= d * (d - alpha_ + 1.0) / ((d - alpha_) * (d + 1.0));
        }
        std::vector<Corner> fresh;
        if (r == 0 || len(r - 1) > old + 1) fresh.push_back({r, o + alpha_, 0.0});
        if (len(r + 1) == old) fresh.push_back({r + 1, o - 1.0, 0.0});
        corners_.erase(corners_.begin() + static_cast<std::ptrdiff_t>(a));
        corners_.insert(corners_.begin() + static_cast<std::ptrdiff_t>(a), fresh.begin(), fresh.end());
        const auto inner = inner_positions();
        for (std::size_t k = 0; k < fresh.size(); ++k) corners_[a + k].mass = full_mass(a + k, inner);
    }

    const std::vector<int>& rows() const { return rows_; }

private:
    int len(int q) const { return q >= 0 && q < static_cast<int>(rows_.size()) ? rows_[static_cast<std::size_t>(q)] : 0; }

    std::vector<double> inner_positions() const
    {
        std::vector<double> inner;
        for (std::size_t j = 1; j < corners_.size(); ++j) {
            const int q = corners_[j].row - 1;
            inner.push_back(alpha_ * len(q) - corners_[j].row);
        }
        return inner;
    }

    double full_mass(std::size_t a, const std::vector<double>& inner) const
    {
        double mass = 1.0;
        std::size_t ii = 0;
        const double x = corners_[a].pos;
        for (std::size_t b = 0; b < corners_.size(); ++b) {
            if (b == a) continue;
            mass /= x - corners_[b].pos;
            if (ii < inner.size()) mass *= x - inner[ii++];
        }
        while (ii < inner.size()) mass *= x - inner[ii++];
        return mass;
    }

    void recompute()
    {
        const auto inner = inner_positions();
        for (std::size_t a = 0; a < corners_.size(); ++a) corners_[a].mass = full_mass(a, inner);
    }

    double alpha_;
    std::mt19937_64 rng_;
    std::vector<int> rows_;
    std::vector<Corner> corners_;
    std::uint64_t steps_ = 0;
};

double quantile(const std::vector<double>& sorted, double q)
{
    if (sorted.empty()) return 0.0;
    const double pos = q * static_cast<double>(sorted.size() - 1);
    const auto lo = static_cast<std::size_t>(std::floor(pos));
    const std::size_t hi = std::min(lo + 1, sorted.size() - 1);
    return sorted[lo] + (pos - static_cast<double>(lo)) * (sorted[hi] - sorted[lo]);
}

nlohmann::ordered_json summary_json(const Summary& s)
{
    return {{"mean", s.mean}, {"median", s.median}, {"q05", s.q05}, {"q25", s.q25},
            {"q75", s.q75},   {"q95", s.q95},       {"min", s.min}, {"max", s.max}};
}

}  // namespace

JackHook jack_hook(const Partition& lambda)
{
    Polynomial value(Rational(1));
    for_each_box(lambda, [&](int a, int l) {
        value *= Polynomial(std::vector<Rational>{Rational(l + 1), Rational(a)});
        value *= Polynomial(std::vector<Rational>{Rational(l), Rational(a + 1)});
    });
    return {lambda, std::move(value)};
}

template <typename S>
const S& PlancherelDist<S>::at(const Partition& lambda) const
{
    for (const auto& [mu, p] : probs)
        if (mu == lambda) return p;
    throw std::out_of_range("partition of the wrong size");
}

template struct PlancherelDist<FieldElement>;
template struct PlancherelDist<Rational>;
template struct PlancherelDist<double>;

PlancherelDist<FieldElement> plancherel_dist_symbolic(int n, const EnumerationCaps& caps)
{
    check_cap(n, caps.exact);
    return {n, dist_t(n)};
}

PlancherelDist<Rational> plancherel_dist(int n, const Rational& alpha, const EnumerationCaps& caps)
{
    check_cap(n, caps.exact);
    if (alpha <= 0) throw std::invalid_argument("alpha must be positive");
    PlancherelDist<Rational> out{n, {}};
    Rational top(factorial(n));
    for (int i = 0; i < n; ++i) top *= alpha;
    Rational sum(0);
    for (auto& lambda : enumerate_partitions(n)) {
        Rational j(1);
        for_each_box(lambda, [&](int a, int l) { j *= (alpha * a + l + 1) * (alpha * a + l + alpha); });
        Rational p = top / j;
        sum += p;
        out.probs.emplace_back(std::move(lambda), std::move(p));
    }
    if (sum != 1) throw std::logic_error("Jack-Plancherel probabilities do not sum to 1");
    return out;
}

PlancherelDist<double> plancherel_dist(int n, double alpha, const EnumerationCaps& caps)
{
    check_cap(n, caps.floating);
    if (!(alpha > 0)) throw std::invalid_argument("alpha must be positive");
    PlancherelDist<double> out{n, {}};
    const double log_top = n * std::log(alpha) + std::lgamma(n + 1.0);
    double sum = 0;
    for (auto& lambda : enumerate_partitions(n)) {
        double log_j = 0;
        for_each_box(lambda, [&](int a, int l) { log_j += std::log((alpha * a + l + 1) * (alpha * a + l + alpha)); });
        const double p = std::exp(log_top - log_j);
        sum += p;
        out.probs.emplace_back(std::move(lambda), p);
    }
    if (std::abs(sum - 1.0) > 1e-9) throw std::logic_error("Jack-Plancherel probabilities do not sum to 1");
    return out;
}

FieldElement exact_expectation(const std::function<FieldElement(const Partition&)>& f, int n, const EnumerationCaps& caps)
{
    check_cap(n, caps.exact);
    std::vector<FieldElement> terms;
    for (const auto& [lambda, p] : dist_t(n)) {
        FieldElement v = f(lambda);
        if (!v.is_zero()) terms.push_back(p * v);
    }
    return tree_sum(std::move(terms));
}

ExpectationDegreeReport expectation_degree_check(const Partition& rho, int n_lo, int n_hi, const EnumerationCaps& caps)
{
    for (int part : rho.parts())
        if (part < 2) throw std::invalid_argument("rho must have parts >= 2");
    ExpectationDegreeReport report;
    report.rho = rho;
    report.degree_bound = rho.size() / 2;
    if (n_lo < 0 || n_hi - n_lo + 1 <= report.degree_bound + 1)
        throw std::invalid_argument("range too short to test the degree bound");
    const int order = std::max(2, rho.empty() ? 2 : rho.part(0));
    for (int n = n_lo; n <= n_hi; ++n) {
        report.ns.push_back(n);
        report.values.push_back(exact_expectation(
            [&](const Partition& lambda) {
                const auto& m = cached_moments(lambda, order);
                FieldElement v(1L);
                for (int part : rho.parts()) v *= m[part];
                return v;
            },
            n, caps));
    }
    const std::size_t fit = static_cast<std::size_t>(report.degree_bound) + 1;
    report.passed = true;
    for (std::size_t k = fit; k < report.ns.size(); ++k) {
        FieldElement interp;
        for (std::size_t j = 0; j < fit; ++j) {
            Rational w(1);
            for (std::size_t i = 0; i < fit; ++i)
                if (i != j) w *= Rational(report.ns[k] - report.ns[i]) / Rational(report.ns[j] - report.ns[i]);
            interp += report.values[j] * FieldElement(w);
        }
        if (!(interp == report.values[k])) report.passed = false;
    }
    if (!report.passed)
        throw TheoremViolation("E[M_" + rho.to_string() + "] is not a polynomial in n of degree <= " +
                               std::to_string(report.degree_bound));
    return report;
}

std::vector<std::pair<int, FieldElement>> growth_kernel_symbolic(const Partition& lambda)
{
    auto k = kernel_generic<FieldElement>(lambda, FieldElement::t());
    for (auto& [row, p] : k) p = p.substitute_square();
    return k;
}

std::vector<std::pair<int, Rational>> growth_kernel(const Partition& lambda, const Rational& alpha)
{
    if (alpha <= 0) throw std::invalid_argument("alpha must be positive");
    return kernel_generic<Rational>(lambda, alpha);
}

std::vector<std::pair<int, double>> growth_kernel(const Partition& lambda, double alpha)
{
    if (!(alpha > 0)) throw std::invalid_argument("alpha must be positive");
    return kernel_generic<double>(lambda, alpha);
}

bool kernel_consistency_check(int m)
{
    std::map<Partition, std::vector<FieldElement>> flow;
    for (const auto& [lambda, p] : dist_alpha(m))
        for (const auto& [row, mass] : kernel_generic<FieldElement>(lambda, FieldElement::t()))
            flow[lambda.with_box_in_row(row)].push_back(p * mass);
    for (const auto& [nu, p] : dist_alpha(m + 1)) {
        auto it = flow.find(nu);
        if (it == flow.end() || !(tree_sum(it->second) == p)) return false;
    }
    return true;
}

Partition grow_partition(int n, double alpha, std::uint64_t seed)
{
    if (n < 0) throw std::invalid_argument("negative size");
    Grower g(alpha, seed);
    for (int i = 0; i < n; ++i) g.step();
    return Partition(g.rows());
}

GrowthSample grow_sample(int n, double alpha, std::uint64_t seed)
{
    if (n < 0) throw std::invalid_argument("negative size");
    Grower g(alpha, seed);
    GrowthSample s;
    s.trajectory.emplace_back();
    for (int i = 0; i < n; ++i) {
        g.step();
        s.trajectory.emplace_back(g.rows());
    }
    return s;
}

std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t index)
{
    std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

SampleStats sample_stats(const Partition& lambda, double alpha, double grid_step)
{
    const double n = lambda.size();
    if (n <= 0) throw std::invalid_argument("empty partition");
    const auto diagram = stretched_double(lambda, std::sqrt(alpha / n), 1.0 / std::sqrt(n * alpha));
    SampleStats s;
    s.sup_distance = sup_distance(profile(diagram), LimitShape{}, grid_step);
    const auto r = free_cumulants(moments(diagram, 6));
    for (int k = 2; k <= 6; ++k) s.r.push_back(r[k]);
    s.rows_scaled = lambda.length() / std::sqrt(n);
    s.cols_scaled = lambda.part(0) / std::sqrt(n);
    return s;
}

Summary summarize(std::vector<double> xs)
{
    Summary s;
    if (xs.empty()) return s;
    std::sort(xs.begin(), xs.end());
    double total = 0;
    for (double x : xs) total += x;
    s.mean = total / static_cast<double>(xs.size());
    s.median = quantile(xs, 0.5);
    s.q05 = quantile(xs, 0.05);
    s.q25 = quantile(xs, 0.25);
    s.q75 = quantile(xs, 0.75);
    s.q95 = quantile(xs, 0.95);
    s.min = xs.front();
    s.max = xs.back();
    return s;
}

LimitShapeReport limit_shape_report(int n, double alpha, int samples, std::uint64_t seed, int threads, double grid_step)
{
    if (n < 1) throw std::invalid_argument("n must be positive");
    if (samples < 1) throw std::invalid_argument("need at least one sample");
    if (!(alpha > 0)) throw std::invalid_argument("alpha must be positive");
    LimitShapeReport report;
    report.n = n;
    report.alpha = alpha;
    report.seed = seed;
    report.samples.resize(static_cast<std::size_t>(samples));

    std::atomic<int> next{0};
    auto worker = [&] {
        for (int i = next++; i < samples; i = next++) {
            const std::uint64_t s = substream_seed(seed, static_cast<std::uint64_t>(i));
            SampleStats st = sample_stats(grow_partition(n, alpha, s), alpha, grid_step);
            st.seed = s;
            report.samples[static_cast<std::size_t>(i)] = std::move(st);
        }
    };
    const int workers = std::max(1, std::min(threads, samples));
    std::vector<std::thread> pool;
    for (int w = 1; w < workers; ++w) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();

    std::vector<double> sup, rows, cols;
    std::vector<std::vector<double>> r(5);
    for (const auto& s : report.samples) {
        sup.push_back(s.sup_distance);
        rows.push_back(s.rows_scaled);
        cols.push_back(s.cols_scaled);
        for (std::size_t k = 0; k < 5; ++k) r[k].push_back(s.r[k]);
    }
    report.sup_distance = summarize(sup);
    report.rows_scaled = summarize(rows);
    report.cols_scaled = summarize(cols);
    for (auto& v : r) report.r.push_back(summarize(v));
    return report;
}

void LimitShapeReport::write_csv(std::ostream& out) const
{
    out << "n,alpha,seed,sup_dist,R2,R3,R4,R5,R6,rows_scaled,cols_scaled\n";
    for (const auto& s : samples) {
        out << n << ',' << fmt(alpha) << ',' << s.seed << ',' << fmt(s.sup_distance);
        for (double v : s.r) out << ',' << fmt(v);
        out << ',' << fmt(s.rows_scaled) << ',' << fmt(s.cols_scaled) << '\n';
    }
}

std::string LimitShapeReport::to_json() const
{
    nlohmann::ordered_json doc;
    doc["n"] = n;
    doc["alpha"] = alpha;
    doc["seed"] = seed;
    doc["samples"] = samples.size();
    doc["sup_distance"] = summary_json(sup_distance);
    for (std::size_t k = 0; k < r.size(); ++k) doc["R" + std::to_string(k + 2)] = summary_json(r[k]);
    doc["rows_scaled"] = summary_json(rows_scaled);
    doc["cols_scaled"] = summary_json(cols_scaled);
    return doc.dump(2);
}

}  // namespace jackkerov
