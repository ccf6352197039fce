#pragma once

#include <map>
#include <string>
#include <vector>

#include "jackkerov/cumulants.hpp"
#include "jackkerov/field.hpp"
#include "jackkerov/partition.hpp"

namespace jackkerov {

/// Moments (M) or free cumulants (R) as the variables of a Kerov polynomial.
enum class KerovBasis { M, R };

char kerov_letter(KerovBasis b);

/// Polynomial in M_2, M_3, ... (or R_2, R_3, ...). A monomial prod_i X_{rho_i}
/// is keyed by rho (parts >= 2); the empty partition keys the constant term.
struct KerovPolynomial {
    KerovBasis basis = KerovBasis::R;
    Partition mu;
    std::map<Partition, GammaPolynomial> terms;

    GammaPolynomial coefficient(const Partition& rho) const;
    /// "R3 + g*R2"; terms by decreasing |rho|, then decreasing rho.
    std::string to_string() const;
    /// "K[2] = R3 + g*R2" or "L[2] = M3 + g*M2".
    std::string display() const;
    /// {"mu": "2", "basis": "R", "terms": {"3": "1", "2": "g"}} as a JSON string.
    std::string to_json() const;
};

struct KerovOptions {
    /// Largest |mu| + l(mu) accepted.
    int degree_cap = 8;
    /// Extra fitting sizes tried when the evaluation matrix is rank-deficient.
    int max_enlargements = 3;
};

/// Moments of T_{t,1/t}(lambda) up to `order`, cached across calls.
const MomentSequence<FieldElement>& cached_moments(const Partition& lambda, int order);
const CumulantSequence<FieldElement>& cached_cumulants(const Partition& lambda, int order);

/// Index set of the unknowns: partitions with parts >= 2 and size <= d
/// (the empty partition included).
std::vector<Partition> kerov_monomials(int d);

/// L_mu by exact evaluation-and-solve against Ch_mu on all lambda with
/// |lambda| <= |mu| + l(mu). Throws CapExceeded, RankDeficient (after the
/// allowed enlargements) or PolynomialityViolation.
KerovPolynomial compute_L(const Partition& mu, const KerovOptions& options = {});
/// K_mu from L_mu by rewriting each moment in free cumulants.
KerovPolynomial compute_K(const Partition& mu, const KerovOptions& options = {});
/// K_mu solved directly against products of free cumulants; an independent
/// route used to cross-check compute_K.
KerovPolynomial compute_K_direct(const Partition& mu, const KerovOptions& options = {});

/// M_k as a polynomial in R_2, ..., R_k (sum over non-crossing partitions of
/// [k] without singletons).
std::map<Partition, Rational> moment_in_cumulants(int k);
/// Rewrites an M-basis Kerov polynomial in the R basis.
KerovPolynomial moments_to_cumulants(const KerovPolynomial& l);

/// sum_rho coef_rho(gamma(t)) prod_i values[rho_i].
FieldElement evaluate(const KerovPolynomial& poly, const std::vector<FieldElement>& values);
double evaluate(const KerovPolynomial& poly, const std::vector<double>& values, double gamma);

struct DegreeRecord {
    KerovBasis basis;
    Partition rho;
    int degree;        // degree in gamma
    int bound;         // min(|mu|+l(mu)-|rho|, |mu|-l(mu)-(|rho|-2l(rho)))
    bool parity_ok;    // every gamma exponent has the parity of |mu|+l(mu)-|rho|
    bool within_bound;
};

struct DegreeReport {
    Partition mu;
    std::vector<DegreeRecord> records;
    bool passed() const;
    std::string to_string() const;
};

/// Degree and parity records for every nonzero term of `poly`.
std::vector<DegreeRecord> degree_records(const KerovPolynomial& poly);
/// Computes L_mu and K_mu and checks both; throws TheoremViolation naming
/// (mu, rho) on the first violation.
DegreeReport verify_degree_bounds(const Partition& mu, const KerovOptions& options = {});
DegreeReport verify_degree_bounds(const KerovPolynomial& l, const KerovPolynomial& k);

/// Max |rho| over nonzero terms.
int gradation_degree(const KerovPolynomial& poly);
/// Max |mu| + l(mu) over nonzero terms of sum_mu a_mu Ch_mu.
int gradation_degree(const std::map<Partition, FieldElement>& ch_combination);

struct TopTermReport {
    Partition top;               // (mu_1 + 1, ..., mu_l + 1)
    bool top_coefficient_is_one = false;
    int remainder_degree = 0;    // gradation degree of K_mu - R_top
    bool passed = false;
};
/// Checks K_mu = prod R_{mu_i+1} + terms of degree <= |mu|+l(mu)-1; throws
/// TheoremViolation on failure.
TopTermReport top_term_check(const KerovPolynomial& k);

/// z_mu theta_mu(lambda) rebuilt from L_mu as
/// sum_rho t^{|mu|-l(mu)-(|rho|-2l(rho))} a_rho prod_i t^{rho_i-2} M_{rho_i}(lambda).
FieldElement assemble_z_theta(const KerovPolynomial& l, const Partition& lambda);

/// True when every coefficient is a polynomial in gamma with non-negative integer coefficients.
bool has_nonnegative_integer_coefficients(const KerovPolynomial& poly);

}  // namespace jackkerov
