#include "jackkerov/symfunc.hpp"

#include <functional>
#include <mutex>
#include <stdexcept>

namespace jackkerov {

char basis_letter(Basis b)
{
    switch (b) {
    case Basis::m: return 'm';
    case Basis::p: return 'p';
    case Basis::h: return 'h';
    case Basis::e: return 'e';
    }
    return '?';
}

Basis parse_basis(std::string_view s)
{
    if (s == "m") return Basis::m;
    if (s == "p") return Basis::p;
    if (s == "h") return Basis::h;
    if (s == "e") return Basis::e;
    throw std::invalid_argument("unknown basis: " + std::string(s));
}

SymFun SymFun::basis_element(Basis basis, const Partition& lambda)
{
    SymFun f(basis, lambda.size());
    f.add(lambda, FieldElement(1L));
    return f;
}

FieldElement SymFun::coefficient(const Partition& lambda) const
{
    auto it = coeffs_.find(lambda);
    return it == coeffs_.end() ? FieldElement() : it->second;
}

void SymFun::add(const Partition& lambda, const FieldElement& c)
{
    if (lambda.size() != degree_) throw std::invalid_argument("partition size differs from degree");
    if (c.is_zero()) return;
    auto [it, inserted] = coeffs_.try_emplace(lambda, c);
    if (inserted) return;
    it->second += c;
    if (it->second.is_zero()) coeffs_.erase(it);
}

void SymFun::require_same_space(const SymFun& o) const
{
    if (basis_ != o.basis_ || degree_ != o.degree_)
        throw std::invalid_argument("symmetric functions in different bases or degrees");
}

SymFun& SymFun::operator+=(const SymFun& o)
{
    require_same_space(o);
    for (const auto& [lambda, c] : o.coeffs_) add(lambda, c);
    return *this;
}

SymFun& SymFun::operator-=(const SymFun& o)
{
    require_same_space(o);
    for (const auto& [lambda, c] : o.coeffs_) add(lambda, -c);
    return *this;
}

SymFun& SymFun::operator*=(const FieldElement& c)
{
    if (c.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    for (auto& [lambda, v] : coeffs_) v *= c;
    return *this;
}

std::string SymFun::to_string() const
{
    std::vector<RenderedTerm> terms;
    for (const auto& [lambda, c] : coeffs_) {
        std::string mono;
        if (!lambda.empty()) mono = std::string(1, basis_letter(basis_)) + "[" + lambda.to_string() + "]";
        terms.push_back(make_term(c, mono));
    }
    return render_sum(terms);
}

// ---------------------------------------------------------------------------

Integer power_sum_monomial_coefficient(const Partition& rho, const Partition& lambda)
{
    if (rho.size() != lambda.size()) return 0;
    // Memoised on (next part, multiset of remaining row capacities).
    std::map<std::pair<std::size_t, std::vector<int>>, Integer> memo;
    std::function<Integer(std::size_t, std::vector<int>)> count = [&](std::size_t i, std::vector<int> caps) -> Integer {
        if (i == rho.parts().size()) {
            for (int c : caps)
                if (c != 0) return 0;
            return 1;
        }
        std::sort(caps.begin(), caps.end(), std::greater<>());
        auto key = std::make_pair(i, caps);
        if (auto it = memo.find(key); it != memo.end()) return it->second;
        Integer total = 0;
        const int part = rho.parts()[i];
        std::size_t j = 0;
        while (j < caps.size()) {
            std::size_t k = j;
            while (k < caps.size() && caps[k] == caps[j]) ++k;
            if (caps[j] >= part) {
                std::vector<int> next = caps;
                next[j] -= part;
                total += Integer(static_cast<long>(k - j)) * count(i + 1, next);
            }
            j = k;
        }
        memo.emplace(std::move(key), total);
        return total;
    };
    return count(0, lambda.parts());
}

namespace {

using PExpansion = std::map<Partition, Rational>;

PExpansion multiply(const PExpansion& a, const PExpansion& b)
{
    PExpansion out;
    for (const auto& [ra, ca] : a)
        for (const auto& [rb, cb] : b) {
            Rational& slot = out[ra + rb];
            slot += ca * cb;
        }
    for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
    return out;
}

// Newton identities: n h_n = sum_k p_k h_{n-k}, n e_n = sum_k (-1)^{k-1} p_k e_{n-k}.
std::vector<PExpansion> newton_series(int n, bool elementary)
{
    std::vector<PExpansion> series(static_cast<std::size_t>(n) + 1);
    series[0][Partition()] = 1;
    for (int d = 1; d <= n; ++d) {
        PExpansion acc;
        for (int k = 1; k <= d; ++k) {
            Rational sign = (elementary && k % 2 == 0) ? -1 : 1;
            for (const auto& [rho, c] : series[static_cast<std::size_t>(d - k)])
                acc[rho + Partition{k}] += sign * c / d;
        }
        series[static_cast<std::size_t>(d)] = std::move(acc);
    }
    return series;
}

Matrix<Rational> product_basis_to_p(const std::vector<Partition>& parts, const std::map<Partition, std::size_t>& index,
                                    const std::vector<PExpansion>& single)
{
    const std::size_t n = parts.size();
    Matrix<Rational> m(n, n);
    for (std::size_t r = 0; r < n; ++r) {
        PExpansion acc{{Partition(), Rational(1)}};
        for (int part : parts[r].parts()) acc = multiply(acc, single[static_cast<std::size_t>(part)]);
        for (const auto& [rho, c] : acc) m(r, index.at(rho)) = c;
    }
    return m;
}

std::shared_ptr<const DegreeTables> build_tables(int degree)
{
    auto t = std::make_shared<DegreeTables>();
    t->degree = degree;
    t->partitions = enumerate_partitions(degree);
    for (std::size_t i = 0; i < t->partitions.size(); ++i) t->index[t->partitions[i]] = i;
    const std::size_t n = t->partitions.size();

    t->p_to_m = Matrix<Rational>(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) {
            Integer v = power_sum_monomial_coefficient(t->partitions[r], t->partitions[c]);
            if (v != 0) t->p_to_m(r, c) = Rational(v);
        }
    t->m_to_p = inverse(t->p_to_m);
    t->h_to_p = product_basis_to_p(t->partitions, t->index, newton_series(degree, false));
    t->p_to_h = inverse(t->h_to_p);
    t->e_to_p = product_basis_to_p(t->partitions, t->index, newton_series(degree, true));
    t->p_to_e = inverse(t->e_to_p);
    return t;
}

}  // namespace

const Matrix<Rational>& DegreeTables::to_p(Basis b) const
{
    switch (b) {
    case Basis::m: return m_to_p;
    case Basis::h: return h_to_p;
    case Basis::e: return e_to_p;
    case Basis::p: break;
    }
    throw std::logic_error("no p -> p table");
}

const Matrix<Rational>& DegreeTables::from_p(Basis b) const
{
    switch (b) {
    case Basis::m: return p_to_m;
    case Basis::h: return p_to_h;
    case Basis::e: return p_to_e;
    case Basis::p: break;
    }
    throw std::logic_error("no p -> p table");
}

std::shared_ptr<const DegreeTables> degree_tables(int degree)
{
    static std::mutex mutex;
    static std::map<int, std::shared_ptr<const DegreeTables>> cache;
    std::lock_guard lock(mutex);
    auto& slot = cache[degree];
    if (!slot) slot = build_tables(degree);
    return slot;
}

namespace {

SymFun apply(const SymFun& f, const Matrix<Rational>& m, const DegreeTables& t, Basis target)
{
    const std::size_t n = t.partitions.size();
    std::vector<FieldElement> out(n);
    for (const auto& [lambda, c] : f.coeffs()) {
        const std::size_t r = t.index.at(lambda);
        for (std::size_t col = 0; col < n; ++col)
            if (m(r, col) != 0) out[col] += c * FieldElement(m(r, col));
    }
    SymFun g(target, f.degree());
    for (std::size_t col = 0; col < n; ++col) g.add(t.partitions[col], out[col]);
    return g;
}

}  // namespace

SymFun convert(const SymFun& f, Basis target)
{
    if (f.basis() == target) return f;
    auto tables = degree_tables(f.degree());
    SymFun in_p = f.basis() == Basis::p ? f : apply(f, tables->to_p(f.basis()), *tables, Basis::p);
    if (target == Basis::p) return in_p;
    return apply(in_p, tables->from_p(target), *tables, target);
}

FieldElement hall_inner(const SymFun& f, const SymFun& g)
{
    if (f.degree() != g.degree()) throw std::invalid_argument("hall_inner of different degrees");
    const SymFun fp = convert(f, Basis::p);
    const SymFun gp = convert(g, Basis::p);
    FieldElement acc;
    for (const auto& [rho, c] : fp.coeffs()) {
        auto it = gp.coeffs().find(rho);
        if (it == gp.coeffs().end()) continue;
        acc += c * it->second * FieldElement(Rational(z_mu(rho))) * FieldElement::t_power(2 * rho.length());
    }
    return acc;
}

}  // namespace jackkerov
