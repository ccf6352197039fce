#pragma once

#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "jackkerov/symfunc.hpp"

namespace jackkerov {

/// J_lambda^(alpha) in the J normalisation ([m_{1^n}] J = n!), coefficients in Q(t).
struct JackExpansion {
    Partition lambda;
    SymFun in_p{Basis::p, 0};
    SymFun in_m{Basis::m, 0};
};

/// Per-degree store of Jack polynomials. A degree is computed once (all
/// lambda of that size together) and then shared read-only.
class JackCache {
public:
    explicit JackCache(int degree_cap = 10, std::optional<std::filesystem::path> disk_dir = std::nullopt);

    /// Process-wide instance; honours JACKKEROV_CACHE_DIR for on-disk reuse.
    static JackCache& global();

    int degree_cap() const { return cap_; }
    void set_degree_cap(int cap);

    /// Throws CapExceeded when |lambda| exceeds the cap.
    const JackExpansion& jack(const Partition& lambda);
    /// All J_lambda with |lambda| = n, in increasing lexicographic order of lambda.
    std::shared_ptr<const std::vector<JackExpansion>> degree(int n);

private:
    std::shared_ptr<const std::vector<JackExpansion>> load_or_build(int n);

    int cap_;
    std::optional<std::filesystem::path> disk_dir_;
    std::mutex mutex_;
    std::map<int, std::shared_ptr<const std::vector<JackExpansion>>> degrees_;
};

/// Gram-Schmidt of the monomial basis along increasing lexicographic order
/// under the alpha-deformed Hall product, rescaled to [m_{1^n}] = n!.
/// Throws std::logic_error if the result fails dominance-triangularity.
std::vector<JackExpansion> compute_jack_degree(int n);

const JackExpansion& jack(const Partition& lambda);
/// theta_rho(lambda) = [p_rho] J_lambda; throws std::invalid_argument if |rho| != |lambda|.
FieldElement theta(const Partition& lambda, const Partition& rho);
/// Ch_mu(lambda); zero when |lambda| < |mu|.
FieldElement ch(const Partition& mu, const Partition& lambda);

}  // namespace jackkerov
