#include "jackkerov/jack.hpp"

#include <cstdlib>
#include <fstream>
#include <stdexcept>

#include "json.hpp"

namespace jackkerov {

namespace {

// All Gram-Schmidt arithmetic happens in the variable alpha (stored in the
// FieldElement slot of t) and is lifted with t -> t^2 at the end; this halves
// every polynomial degree along the way.
std::vector<JackExpansion> gram_schmidt(int n)
{
    auto tables = degree_tables(n);
    // Increasing lexicographic order = reverse of the table order.
    std::vector<Partition> order(tables->partitions.rbegin(), tables->partitions.rend());
    const std::size_t dim = order.size();
    auto table_row = [&](std::size_t i) { return tables->index.at(order[i]); };

    // Gram matrix of the monomial basis: sum_rho A[mu][rho] A[nu][rho] z_rho alpha^{l(rho)}.
    std::vector<FieldElement> weight(dim);
    for (std::size_t r = 0; r < dim; ++r) {
        const Partition& rho = tables->partitions[r];
        weight[r] = FieldElement(Polynomial::monomial(Rational(z_mu(rho)), rho.length()));
    }
    Matrix<FieldElement> gram(dim, dim);
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j <= i; ++j) {
            FieldElement acc;
            const std::size_t ri = table_row(i), rj = table_row(j);
            for (std::size_t r = 0; r < dim; ++r) {
                const Rational& a = tables->m_to_p(ri, r);
                const Rational& b = tables->m_to_p(rj, r);
                if (a == 0 || b == 0) continue;
                acc += weight[r] * FieldElement(Rational(a * b));
            }
            gram(i, j) = acc;
            gram(j, i) = acc;
        }

    // P[i] holds m-coordinates (indices <= i) of the monic orthogonal element.
    std::vector<std::vector<FieldElement>> basis(dim);
    std::vector<FieldElement> norms(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        std::vector<FieldElement> v(i + 1);
        v[i] = FieldElement(1L);
        for (std::size_t j = 0; j < i; ++j) {
            FieldElement proj;
            for (std::size_t k = 0; k <= j; ++k)
                if (!basis[j][k].is_zero()) proj += gram(i, k) * basis[j][k];
            if (proj.is_zero()) continue;
            const FieldElement c = proj / norms[j];
            for (std::size_t k = 0; k <= j; ++k)
                if (!basis[j][k].is_zero()) v[k] -= c * basis[j][k];
        }
        FieldElement norm;
        for (std::size_t k = 0; k <= i; ++k)
            if (!v[k].is_zero()) norm += gram(i, k) * v[k];
        norms[i] = norm;
        basis[i] = std::move(v);
    }

    const FieldElement n_factorial(Rational(factorial(n)));
    std::vector<JackExpansion> out;
    out.reserve(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        const Partition& lambda = order[i];
        for (std::size_t k = 0; k <= i; ++k)
            if (!basis[i][k].is_zero() && !dominance_leq(order[k], lambda))
                throw std::logic_error("Gram-Schmidt output is not dominance-triangular for " + lambda.to_string());
        // order[0] is 1^n.
        const FieldElement scale = n_factorial / basis[i][0];
        JackExpansion e;
        e.lambda = lambda;
        e.in_m = SymFun(Basis::m, n);
        e.in_p = SymFun(Basis::p, n);
        std::vector<FieldElement> p_coords(dim);
        for (std::size_t k = 0; k <= i; ++k) {
            if (basis[i][k].is_zero()) continue;
            const FieldElement c = scale * basis[i][k];
            e.in_m.add(order[k], c.substitute_square());
            const std::size_t rk = table_row(k);
            for (std::size_t r = 0; r < dim; ++r)
                if (tables->m_to_p(rk, r) != 0) p_coords[r] += c * FieldElement(tables->m_to_p(rk, r));
        }
        for (std::size_t r = 0; r < dim; ++r) e.in_p.add(tables->partitions[r], p_coords[r].substitute_square());
        out.push_back(std::move(e));
    }
    return out;
}

nlohmann::json field_to_json(const FieldElement& f)
{
    auto coeffs = [](const Polynomial& p) {
        nlohmann::json a = nlohmann::json::array();
        for (const auto& c : p.coefficients()) a.push_back(c.get_str());
        return a;
    };
    return {{"num", coeffs(f.num())}, {"den", coeffs(f.den())}};
}

FieldElement field_from_json(const nlohmann::json& j)
{
    auto poly = [](const nlohmann::json& a) {
        std::vector<Rational> c;
        for (const auto& s : a) c.push_back(parse_rational(s.get<std::string>()));
        return Polynomial(std::move(c));
    };
    return FieldElement(poly(j.at("num")), poly(j.at("den")));
}

nlohmann::json symfun_to_json(const SymFun& f)
{
    nlohmann::json o = nlohmann::json::object();
    for (const auto& [rho, c] : f.coeffs()) o[rho.to_string()] = field_to_json(c);
    return o;
}

SymFun symfun_from_json(const nlohmann::json& j, Basis basis, int n)
{
    SymFun f(basis, n);
    for (const auto& [key, value] : j.items()) f.add(Partition::parse(key), field_from_json(value));
    return f;
}

}  // namespace

std::vector<JackExpansion> compute_jack_degree(int n)
{
    if (n < 0) throw std::invalid_argument("negative degree");
    return gram_schmidt(n);
}

JackCache::JackCache(int degree_cap, std::optional<std::filesystem::path> disk_dir)
    : cap_(degree_cap), disk_dir_(std::move(disk_dir))
{
    if (cap_ < 0) throw std::invalid_argument("degree cap must be non-negative");
}

JackCache& JackCache::global()
{
    static JackCache instance = [] {
        std::optional<std::filesystem::path> dir;
        if (const char* env = std::getenv("JACKKEROV_CACHE_DIR"); env && *env) dir = std::filesystem::path(env);
        return JackCache(10, dir);
    }();
    return instance;
}

void JackCache::set_degree_cap(int cap)
{
    if (cap < 0) throw std::invalid_argument("degree cap must be non-negative");
    std::lock_guard lock(mutex_);
    cap_ = cap;
}

std::shared_ptr<const std::vector<JackExpansion>> JackCache::load_or_build(int n)
{
    std::filesystem::path file;
    if (disk_dir_) {
        file = *disk_dir_ / ("jack_degree_" + std::to_string(n) + ".json");
        std::ifstream in(file);
        if (in) {
            try {
                nlohmann::json doc = nlohmann::json::parse(in);
                auto v = std::make_shared<std::vector<JackExpansion>>();
                for (const auto& entry : doc.at("jacks")) {
                    JackExpansion e;
                    e.lambda = Partition::parse(entry.at("lambda").get<std::string>());
                    e.in_p = symfun_from_json(entry.at("p"), Basis::p, n);
                    e.in_m = symfun_from_json(entry.at("m"), Basis::m, n);
                    v->push_back(std::move(e));
                }
                return v;
            } catch (const std::exception&) {
                // unreadable cache entries are recomputed and overwritten
            }
        }
    }
    auto v = std::make_shared<std::vector<JackExpansion>>(compute_jack_degree(n));
    if (disk_dir_) {
        std::error_code ec;
        std::filesystem::create_directories(*disk_dir_, ec);
        nlohmann::json doc;
        doc["degree"] = n;
        doc["jacks"] = nlohmann::json::array();
        for (const auto& e : *v)
            doc["jacks"].push_back({{"lambda", e.lambda.to_string()}, {"p", symfun_to_json(e.in_p)}, {"m", symfun_to_json(e.in_m)}});
        std::ofstream out(file);
        if (out) out << doc.dump();
    }
    return v;
}

std::shared_ptr<const std::vector<JackExpansion>> JackCache::degree(int n)
{
    std::lock_guard lock(mutex_);
    if (n > cap_) throw CapExceeded("Jack degree " + std::to_string(n) + " exceeds cap " + std::to_string(cap_));
    auto& slot = degrees_[n];
    if (!slot) slot = load_or_build(n);
    return slot;
}

const JackExpansion& JackCache::jack(const Partition& lambda)
{
    auto all = degree(lambda.size());
    // Entries are in increasing lexicographic order.
    auto it = std::lower_bound(all->begin(), all->end(), lambda,
                               [](const JackExpansion& e, const Partition& p) { return e.lambda < p; });
    if (it == all->end() || it->lambda != lambda) throw std::logic_error("missing Jack polynomial");
    return *it;
}

const JackExpansion& jack(const Partition& lambda) { return JackCache::global().jack(lambda); }

FieldElement theta(const Partition& lambda, const Partition& rho)
{
    if (lambda.size() != rho.size()) throw std::invalid_argument("theta needs |rho| = |lambda|");
    return jack(lambda).in_p.coefficient(rho);
}

FieldElement ch(const Partition& mu, const Partition& lambda)
{
    if (lambda.size() < mu.size()) return FieldElement();
    const int extra = lambda.size() - mu.size();
    const int m1 = mu.multiplicity(1);
    const FieldElement th = theta(lambda, mu.with_ones(extra));
    if (th.is_zero()) return th;
    const Rational scale(binomial(extra + m1, m1) * z_mu(mu));
    return th * FieldElement(scale) * FieldElement::t_power(-(mu.size() - mu.length()));
}

}  // namespace jackkerov
