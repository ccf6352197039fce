#include "jackkerov/kerov.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

#include "json.hpp"
#include "jackkerov/errors.hpp"
#include "jackkerov/jack.hpp"
#include "jackkerov/linsolve.hpp"

namespace jackkerov {

namespace {

using RPoly = std::map<Partition, Rational>;

RPoly multiply(const RPoly& a, const RPoly& b)
{
    RPoly out;
    for (const auto& [ra, ca] : a)
        for (const auto& [rb, cb] : b) {
            Rational& slot = out[ra + rb];
            slot += ca * cb;
        }
    for (auto it = out.begin(); it != out.end();)
        it = it->second == 0 ? out.erase(it) : std::next(it);
    return out;
}

void add_scaled(RPoly& acc, const RPoly& x, const Rational& s)
{
    for (const auto& [rho, c] : x) {
        Rational& slot = acc[rho];
        slot += s * c;
        if (slot == 0) acc.erase(rho);
    }
}

bool comes_first(const Partition& a, const Partition& b)
{
    if (a.size() != b.size()) return a.size() > b.size();
    return b < a;
}

std::vector<Partition> display_order(const KerovPolynomial& poly)
{
    std::vector<Partition> keys;
    for (const auto& [rho, c] : poly.terms) keys.push_back(rho);
    std::sort(keys.begin(), keys.end(), comes_first);
    return keys;
}

std::string monomial_string(KerovBasis basis, const Partition& rho)
{
    std::string out;
    const auto& parts = rho.parts();
    for (std::size_t i = 0; i < parts.size();) {
        std::size_t j = i;
        while (j < parts.size() && parts[j] == parts[i]) ++j;
        if (!out.empty()) out += '*';
        out += kerov_letter(basis) + std::to_string(parts[i]);
        if (j - i > 1) out += '^' + std::to_string(j - i);
        i = j;
    }
    return out;
}

// Integer factors are written flush against what follows ("2g", "4R4").
std::string scalar_prefix(const Rational& magnitude)
{
    if (magnitude == 1) return "";
    if (magnitude.get_den() == 1) return magnitude.get_str();
    return magnitude.get_str() + "*";
}

std::string gamma_monomial(const Rational& magnitude, int j)
{
    std::string s = scalar_prefix(magnitude);
    if (j == 0) return magnitude == 1 ? "1" : magnitude.get_str();
    s += 'g';
    if (j > 1) s += '^' + std::to_string(j);
    return s;
}

// Ascending powers of g, "1 + 2g^2".
std::string gamma_string(const GammaPolynomial& c)
{
    if (c.is_zero()) return "0";
    std::string out;
    for (int j : c.support()) {
        const Rational& q = c.coefficient(j);
        const bool neg = q < 0;
        if (out.empty())
            out = neg ? "-" : "";
        else
            out += neg ? " - " : " + ";
        out += gamma_monomial(abs(q), j);
    }
    return out;
}

struct Term {
    bool negative;
    std::string body;
};

Term render_term(const GammaPolynomial& c, const std::string& mono)
{
    const auto support = c.support();
    if (support.size() == 1) {
        const int j = support.front();
        const Rational q = c.coefficient(j);
        const bool neg = q < 0;
        const Rational mag = abs(q);
        if (mono.empty()) return {neg, gamma_monomial(mag, j)};
        if (j == 0) return {neg, scalar_prefix(mag) + mono};
        return {neg, gamma_monomial(mag, j) + "*" + mono};
    }
    bool all_negative = true;
    for (int j : support)
        if (c.coefficient(j) > 0) all_negative = false;
    const std::string inner = "(" + gamma_string(all_negative ? -c : c) + ")";
    return {all_negative, mono.empty() ? inner : inner + "*" + mono};
}

std::mutex& moment_mutex()
{
    static std::mutex m;
    return m;
}

struct MomentEntry {
    MomentSequence<FieldElement> moments;
    CumulantSequence<FieldElement> cumulants;
};

MomentEntry& moment_entry(const Partition& lambda, int order)
{
    static std::map<Partition, MomentEntry> cache;
    auto it = cache.find(lambda);
    if (it == cache.end() || it->second.moments.order() < order) {
        auto mr = anisotropic_MR(lambda, order);
        MomentEntry e{std::move(mr.moments), std::move(mr.cumulants)};
        if (it == cache.end())
            it = cache.emplace(lambda, std::move(e)).first;
        else
            it->second = std::move(e);
    }
    return it->second;
}

FieldElement monomial_value(const Partition& rho, const std::vector<FieldElement>& values)
{
    FieldElement v(1L);
    for (int part : rho.parts()) v *= values.at(static_cast<std::size_t>(part));
    return v;
}

// Solves ch(mu, lambda) = sum_rho a_rho prod X_{rho_i}(lambda), with X = M or R.
KerovPolynomial solve_kerov(const Partition& mu, KerovBasis basis, const KerovOptions& options)
{
    const int d = mu.size() + mu.length();
    if (d > options.degree_cap)
        throw CapExceeded("|mu| + l(mu) = " + std::to_string(d) + " exceeds Kerov cap " + std::to_string(options.degree_cap));
    const auto columns = kerov_monomials(d);

    ExactSolution sol;
    for (int attempt = 0;; ++attempt) {
        const int size = d + attempt;
        const auto rows = partitions_up_to(size);
        Matrix<FieldElement> a(rows.size(), columns.size());
        std::vector<FieldElement> b(rows.size());
        for (std::size_t r = 0; r < rows.size(); ++r) {
            std::vector<FieldElement> values;
            {
                std::lock_guard lock(moment_mutex());
                const auto& e = moment_entry(rows[r], std::max(d, 1));
                values = basis == KerovBasis::M ? e.moments.values : e.cumulants.values;
            }
            for (std::size_t c = 0; c < columns.size(); ++c) a(r, c) = monomial_value(columns[c], values);
            b[r] = ch(mu, rows[r]);
        }
        try {
            sol = solve_exact(std::move(a), std::move(b));
            break;
        } catch (const RankDeficient&) {
            if (attempt >= options.max_enlargements) throw;
        }
    }

    KerovPolynomial out;
    out.basis = basis;
    out.mu = mu;
    for (std::size_t c = 0; c < columns.size(); ++c) {
        if (sol.x[c].is_zero()) continue;
        auto g = to_gamma(sol.x[c]);
        if (!g)
            throw PolynomialityViolation("coefficient of " + std::string(1, kerov_letter(basis)) + "[" + columns[c].to_string() +
                                         "] in mu = " + mu.to_string() + " is not a polynomial in gamma: " + sol.x[c].to_string());
        out.terms.emplace(columns[c], std::move(*g));
    }
    if (!mu.empty() && out.terms.count(Partition()))
        throw TheoremViolation("nonzero constant term for mu = " + mu.to_string());
    return out;
}

bool parity_ok(const GammaPolynomial& c, int target)
{
    for (int j : c.support())
        if ((j - target) % 2 != 0) return false;
    return true;
}

}  // namespace

char kerov_letter(KerovBasis b) { return b == KerovBasis::M ? 'M' : 'R'; }

GammaPolynomial KerovPolynomial::coefficient(const Partition& rho) const
{
    auto it = terms.find(rho);
    return it == terms.end() ? GammaPolynomial() : it->second;
}

std::string KerovPolynomial::to_string() const
{
    if (terms.empty()) return "0";
    std::string out;
    for (const auto& rho : display_order(*this)) {
        const Term t = render_term(terms.at(rho), monomial_string(basis, rho));
        if (out.empty())
            out = (t.negative ? "-" : "") + t.body;
        else
            out += (t.negative ? " - " : " + ") + t.body;
    }
    return out;
}

std::string KerovPolynomial::display() const
{
    return std::string(basis == KerovBasis::R ? "K" : "L") + "[" + mu.to_string() + "] = " + to_string();
}

std::string KerovPolynomial::to_json() const
{
    nlohmann::ordered_json doc;
    doc["mu"] = mu.to_string();
    doc["basis"] = std::string(1, kerov_letter(basis));
    nlohmann::ordered_json t = nlohmann::ordered_json::object();
    for (const auto& rho : display_order(*this)) t[rho.to_string()] = gamma_string(terms.at(rho));
    doc["terms"] = std::move(t);
    return doc.dump();
}

const MomentSequence<FieldElement>& cached_moments(const Partition& lambda, int order)
{
    std::lock_guard lock(moment_mutex());
    return moment_entry(lambda, order).moments;
}

const CumulantSequence<FieldElement>& cached_cumulants(const Partition& lambda, int order)
{
    std::lock_guard lock(moment_mutex());
    return moment_entry(lambda, order).cumulants;
}

std::vector<Partition> kerov_monomials(int d) { return partitions_up_to(d, 2); }

KerovPolynomial compute_L(const Partition& mu, const KerovOptions& options)
{
    return solve_kerov(mu, KerovBasis::M, options);
}

KerovPolynomial compute_K(const Partition& mu, const KerovOptions& options)
{
    return moments_to_cumulants(compute_L(mu, options));
}

KerovPolynomial compute_K_direct(const Partition& mu, const KerovOptions& options)
{
    return solve_kerov(mu, KerovBasis::R, options);
}

std::map<Partition, Rational> moment_in_cumulants(int k)
{
    if (k < 0) throw std::invalid_argument("negative moment index");
    static std::mutex mutex;
    static std::vector<RPoly> memo{RPoly{{Partition(), Rational(1)}}, RPoly{}};
    std::lock_guard lock(mutex);
    // M_n = sum_{j>=2} R_j [z^{n-j}] M(z)^j, with M_0 = 1 and M_1 = 0.
    while (static_cast<int>(memo.size()) <= k) {
        const int n = static_cast<int>(memo.size());
        RPoly mn;
        for (int j = 2; j <= n; ++j) {
            const int want = n - j;
            std::vector<RPoly> pw(static_cast<std::size_t>(want) + 1);
            pw[0] = RPoly{{Partition(), Rational(1)}};
            for (int rep = 0; rep < j; ++rep) {
                std::vector<RPoly> next(pw.size());
                for (int a = 0; a <= want; ++a) {
                    if (pw[static_cast<std::size_t>(a)].empty()) continue;
                    for (int b = 0; a + b <= want; ++b)
                        add_scaled(next[static_cast<std::size_t>(a + b)],
                                   multiply(pw[static_cast<std::size_t>(a)], memo[static_cast<std::size_t>(b)]), Rational(1));
                }
                pw = std::move(next);
            }
            add_scaled(mn, multiply(RPoly{{Partition{j}, Rational(1)}}, pw[static_cast<std::size_t>(want)]), Rational(1));
        }
        memo.push_back(std::move(mn));
    }
    return memo[static_cast<std::size_t>(k)];
}

KerovPolynomial moments_to_cumulants(const KerovPolynomial& l)
{
    if (l.basis != KerovBasis::M) throw std::invalid_argument("expected a polynomial in moments");
    std::map<Partition, GammaPolynomial> acc;
    for (const auto& [rho, coef] : l.terms) {
        RPoly expansion{{Partition(), Rational(1)}};
        for (int part : rho.parts()) expansion = multiply(expansion, moment_in_cumulants(part));
        for (const auto& [sigma, q] : expansion) acc[sigma] += coef * q;
    }
    KerovPolynomial k;
    k.basis = KerovBasis::R;
    k.mu = l.mu;
    for (auto& [sigma, c] : acc)
        if (!c.is_zero()) k.terms.emplace(sigma, std::move(c));
    return k;
}

FieldElement evaluate(const KerovPolynomial& poly, const std::vector<FieldElement>& values)
{
    FieldElement acc;
    for (const auto& [rho, c] : poly.terms) acc += c.to_field() * monomial_value(rho, values);
    return acc;
}

double evaluate(const KerovPolynomial& poly, const std::vector<double>& values, double gamma)
{
    double acc = 0.0;
    for (const auto& [rho, c] : poly.terms) {
        double v = c.evaluate(gamma);
        for (int part : rho.parts()) v *= values.at(static_cast<std::size_t>(part));
        acc += v;
    }
    return acc;
}

bool DegreeReport::passed() const
{
    for (const auto& r : records)
        if (!r.parity_ok || !r.within_bound) return false;
    return true;
}

std::string DegreeReport::to_string() const
{
    std::ostringstream out;
    for (const auto& r : records)
        out << kerov_letter(r.basis) << '[' << r.rho.to_string() << "] degree " << r.degree << " bound " << r.bound
            << " parity " << (r.parity_ok ? "ok" : "FAIL") << (r.within_bound ? "" : " BOUND FAIL") << '\n';
    return out.str();
}

std::vector<DegreeRecord> degree_records(const KerovPolynomial& poly)
{
    const Partition& mu = poly.mu;
    std::vector<DegreeRecord> out;
    for (const auto& rho : display_order(poly)) {
        const auto& c = poly.terms.at(rho);
        const int target = mu.size() + mu.length() - rho.size();
        const int bound = std::min(target, mu.size() - mu.length() - (rho.size() - 2 * rho.length()));
        out.push_back({poly.basis, rho, c.degree(), bound, parity_ok(c, target), c.degree() <= bound});
    }
    return out;
}

DegreeReport verify_degree_bounds(const KerovPolynomial& l, const KerovPolynomial& k)
{
    DegreeReport report{l.mu, {}};
    for (const auto* poly : {&l, &k})
        for (auto& r : degree_records(*poly)) report.records.push_back(std::move(r));
    for (const auto& r : report.records)
        if (!r.parity_ok || !r.within_bound)
            throw TheoremViolation("degree/parity bound fails for mu = " + l.mu.to_string() + ", rho = " + r.rho.to_string() +
                                   " in the " + kerov_letter(r.basis) + " basis");
    return report;
}

DegreeReport verify_degree_bounds(const Partition& mu, const KerovOptions& options)
{
    const auto l = compute_L(mu, options);
    return verify_degree_bounds(l, moments_to_cumulants(l));
}

int gradation_degree(const KerovPolynomial& poly)
{
    int deg = -1;
    for (const auto& [rho, c] : poly.terms)
        if (!c.is_zero()) deg = std::max(deg, rho.size());
    return deg;
}

int gradation_degree(const std::map<Partition, FieldElement>& ch_combination)
{
    int deg = -1;
    for (const auto& [mu, c] : ch_combination)
        if (!c.is_zero()) deg = std::max(deg, mu.size() + mu.length());
    return deg;
}

TopTermReport top_term_check(const KerovPolynomial& k)
{
    if (k.basis != KerovBasis::R) throw std::invalid_argument("top-term check needs the free-cumulant basis");
    TopTermReport report;
    report.top = k.mu.shifted_parts(1);
    report.top_coefficient_is_one = k.coefficient(report.top) == GammaPolynomial(1);
    KerovPolynomial rest = k;
    rest.terms.erase(report.top);
    report.remainder_degree = gradation_degree(rest);
    const int d = k.mu.size() + k.mu.length();
    report.passed = report.top_coefficient_is_one && report.remainder_degree <= d - 1;
    if (!report.passed)
        throw TheoremViolation("top term of K[" + k.mu.to_string() + "] is not " + monomial_string(KerovBasis::R, report.top) +
                               " plus lower-degree terms");
    return report;
}

FieldElement assemble_z_theta(const KerovPolynomial& l, const Partition& lambda)
{
    if (l.basis != KerovBasis::M) throw std::invalid_argument("expected a polynomial in moments");
    const Partition& mu = l.mu;
    int order = 2;
    for (const auto& [rho, c] : l.terms)
        if (!rho.empty()) order = std::max(order, rho.part(0));
    const auto values = cached_moments(lambda, order).values;
    FieldElement acc;
    for (const auto& [rho, c] : l.terms) {
        FieldElement term = c.to_field() * FieldElement::t_power(mu.size() - mu.length() - (rho.size() - 2 * rho.length()));
        for (int part : rho.parts()) term *= FieldElement::t_power(part - 2) * values.at(static_cast<std::size_t>(part));
        acc += term;
    }
    return acc;
}

bool has_nonnegative_integer_coefficients(const KerovPolynomial& poly)
{
    for (const auto& [rho, c] : poly.terms)
        for (const auto& q : c.coefficients())
            if (q < 0 || q.get_den() != 1) return false;
    return true;
}

}  // namespace jackkerov
