#include "jackkerov/cumulants.hpp"

#include <sstream>

namespace jackkerov {

AnisotropicMR anisotropic_MR(const Partition& lambda, int order)
{
    auto m = moments(anisotropic_symbolic(lambda), order);
    auto r = free_cumulants(m);
    return {std::move(m), std::move(r)};
}

bool is_integer_polynomial_in_alpha(const FieldElement& f)
{
    if (!f.is_polynomial()) return false;
    const auto& c = f.num().coefficients();
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i] == 0) continue;
        if (i % 2 != 0 || c[i].get_den() != 1) return false;
    }
    return true;
}

bool IntegralityReport::all_passed() const
{
    for (const auto& r : records)
        if (!r.passed) return false;
    return true;
}

IntegralityReport integrality_check(const Partition& lambda, int order)
{
    IntegralityReport report{lambda, {}};
    const auto mr = anisotropic_MR(lambda, order);
    for (int k = 2; k <= order; ++k) {
        FieldElement scaled = mr.moments[k] * FieldElement::t_power(k - 2);
        const bool ok = is_integer_polynomial_in_alpha(scaled);
        report.records.push_back({k, std::move(scaled), ok});
    }
    return report;
}

std::string moments_csv(const AnisotropicMR& mr)
{
    std::ostringstream out;
    out << "k,M_k,R_k\n";
    for (int k = 1; k <= mr.moments.order(); ++k)
        out << k << ',' << mr.moments[k].to_string() << ',' << mr.cumulants[k].to_string() << '\n';
    return out.str();
}

}  // namespace jackkerov
