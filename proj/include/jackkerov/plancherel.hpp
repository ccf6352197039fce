#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "jackkerov/field.hpp"
#include "jackkerov/partition.hpp"

namespace jackkerov {

/// j_lambda = prod_boxes (alpha*a + l + 1)(alpha*a + l + alpha), as a polynomial in alpha.
struct JackHook {
    Partition lambda;
    Polynomial value;
};
JackHook jack_hook(const Partition& lambda);

/// Jack-Plancherel probabilities alpha^n n! / j_lambda over all lambda of size n,
/// in reverse lexicographic order of lambda.
template <typename S>
struct PlancherelDist {
    int n = 0;
    std::vector<std::pair<Partition, S>> probs;
    const S& at(const Partition& lambda) const;
};

struct EnumerationCaps {
    int exact = 30;
    int floating = 60;
};

/// Symbolic alpha = t^2; probabilities in Q(t). Asserts the sum is exactly 1.
PlancherelDist<FieldElement> plancherel_dist_symbolic(int n, const EnumerationCaps& caps = {});
/// Rational alpha > 0; asserts the sum is exactly 1.
PlancherelDist<Rational> plancherel_dist(int n, const Rational& alpha, const EnumerationCaps& caps = {});
/// Floating alpha > 0; asserts |sum - 1| < 1e-9.
PlancherelDist<double> plancherel_dist(int n, double alpha, const EnumerationCaps& caps = {});

/// sum_{lambda |- n} P(lambda) F(lambda) in Q(t).
FieldElement exact_expectation(const std::function<FieldElement(const Partition&)>& f, int n,
                               const EnumerationCaps& caps = {});

struct ExpectationDegreeReport {
    Partition rho;
    std::vector<int> ns;
    std::vector<FieldElement> values;  // E_{P_n}[prod_i M_{rho_i}]
    int degree_bound = 0;              // floor(|rho| / 2)
    bool passed = false;
};
/// Interpolates n -> E_{P_n}[prod M_{rho_i}] through the first floor(|rho|/2)+1
/// points of [n_lo, n_hi] and checks the rest lie on it; throws TheoremViolation otherwise.
ExpectationDegreeReport expectation_degree_check(const Partition& rho, int n_lo, int n_hi,
                                                 const EnumerationCaps& caps = {});

/// Growth step from lambda: (row receiving the box, probability). The
/// probability is the transition-measure mass of the anisotropic diagram at
/// that row's outer corner.
std::vector<std::pair<int, FieldElement>> growth_kernel_symbolic(const Partition& lambda);
std::vector<std::pair<int, Rational>> growth_kernel(const Partition& lambda, const Rational& alpha);
std::vector<std::pair<int, double>> growth_kernel(const Partition& lambda, double alpha);

/// Checks sum_{lambda -> nu} P_m(lambda) kernel(lambda -> nu) = P_{m+1}(nu) in Q(t)
/// for every nu of size m + 1.
bool kernel_consistency_check(int m);

struct GrowthSample {
    std::vector<Partition> trajectory;  // lambda^0 = empty, ..., lambda^n
};

/// Corner growth in double precision, deterministic for a given seed.
Partition grow_partition(int n, double alpha, std::uint64_t seed);
GrowthSample grow_sample(int n, double alpha, std::uint64_t seed);

/// Seed of sample `index` in a run started from `seed`.
std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t index);

struct SampleStats {
    std::uint64_t seed = 0;
    double sup_distance = 0;
    std::vector<double> r;  // r[k-2] = R_k for k = 2..6 of the rescaled anisotropic diagram
    double rows_scaled = 0;
    double cols_scaled = 0;
};

/// Statistics of one partition of size n at parameter alpha.
SampleStats sample_stats(const Partition& lambda, double alpha, double grid_step = 1e-3);

struct Summary {
    double mean = 0, median = 0, q05 = 0, q25 = 0, q75 = 0, q95 = 0, min = 0, max = 0;
};
Summary summarize(std::vector<double> xs);

struct LimitShapeReport {
    int n = 0;
    double alpha = 0;
    std::uint64_t seed = 0;
    std::vector<SampleStats> samples;
    Summary sup_distance;
    std::vector<Summary> r;  // R_2..R_6
    Summary rows_scaled;
    Summary cols_scaled;

    void write_csv(std::ostream& out) const;
    std::string to_json() const;
};

LimitShapeReport limit_shape_report(int n, double alpha, int samples, std::uint64_t seed, int threads = 1,
                                    double grid_step = 1e-3);

}  // namespace jackkerov
