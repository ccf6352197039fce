#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "jackkerov/field.hpp"
#include "jackkerov/linsolve.hpp"
#include "jackkerov/partition.hpp"

namespace jackkerov {

enum class Basis { m, p, h, e };

char basis_letter(Basis b);
Basis parse_basis(std::string_view s);

/// Homogeneous symmetric function of a fixed degree with coefficients in Q(t).
/// Zero coefficients are never stored.
class SymFun {
public:
    SymFun(Basis basis, int degree) : basis_(basis), degree_(degree) {}
    /// Single basis element b_lambda.
    static SymFun basis_element(Basis basis, const Partition& lambda);

    Basis basis() const { return basis_; }
    int degree() const { return degree_; }
    const std::map<Partition, FieldElement>& coeffs() const { return coeffs_; }
    /// Zero when lambda is absent.
    FieldElement coefficient(const Partition& lambda) const;

    /// Adds c * b_lambda; throws std::invalid_argument if |lambda| != degree.
    void add(const Partition& lambda, const FieldElement& c);

    SymFun& operator+=(const SymFun& o);
    SymFun& operator-=(const SymFun& o);
    SymFun& operator*=(const FieldElement& c);
    friend SymFun operator+(SymFun a, const SymFun& b) { return a += b; }
    friend SymFun operator-(SymFun a, const SymFun& b) { return a -= b; }
    friend SymFun operator*(SymFun a, const FieldElement& c) { return a *= c; }
    friend bool operator==(const SymFun& a, const SymFun& b)
    {
        return a.basis_ == b.basis_ && a.degree_ == b.degree_ && a.coeffs_ == b.coeffs_;
    }

    /// "p[1,1] + t^2*p[2]" with partitions in increasing lexicographic order.
    std::string to_string() const;

private:
    void require_same_space(const SymFun& o) const;

    Basis basis_;
    int degree_;
    std::map<Partition, FieldElement> coeffs_;
};

/// Rational transition matrices for one degree. Row index = source basis
/// element, column index = target basis element, both in `partitions` order.
struct DegreeTables {
    int degree = 0;
    std::vector<Partition> partitions;  // reverse lexicographic
    std::map<Partition, std::size_t> index;
    Matrix<Rational> p_to_m, m_to_p, h_to_p, p_to_h, e_to_p, p_to_e;

    const Matrix<Rational>& to_p(Basis b) const;
    const Matrix<Rational>& from_p(Basis b) const;
};

/// Tables are built once per degree behind a mutex and shared read-only.
std::shared_ptr<const DegreeTables> degree_tables(int degree);

/// Number of ways of distributing the parts of rho into rows of sizes lambda,
/// i.e. the coefficient of m_lambda in p_rho.
Integer power_sum_monomial_coefficient(const Partition& rho, const Partition& lambda);

SymFun convert(const SymFun& f, Basis target);

/// <p_lambda, p_mu> = delta z_lambda alpha^{l(lambda)}, alpha = t^2.
FieldElement hall_inner(const SymFun& f, const SymFun& g);

}  // namespace jackkerov
