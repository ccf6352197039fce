#pragma once

#include <compare>
#include <initializer_list>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "jackkerov/polynomial.hpp"

namespace jackkerov {

/// Integer partition, parts stored weakly decreasing. Construction sorts the
/// input and drops zero parts; negative parts are rejected.
class Partition {
public:
    Partition() = default;
    Partition(std::initializer_list<int> parts);
    explicit Partition(std::vector<int> parts);

    /// "3,1" or "-" (also accepts "" and "0" for the empty partition).
    static Partition parse(std::string_view text);
    /// (k, k, ..., k) with `count` copies.
    static Partition rectangle(int k, int count);

    int size() const { return size_; }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    const std::vector<int>& parts() const { return parts_; }
    /// 0-based; returns 0 past the last part.
    int part(int i) const { return i < length() ? parts_[static_cast<std::size_t>(i)] : 0; }
    int multiplicity(int value) const;

    Partition conjugate() const;
    /// Union of multisets of parts.
    Partition operator+(const Partition& other) const;
    /// Appends `count` parts equal to 1.
    Partition with_ones(int count) const;
    /// Every part increased by `delta` (parts must stay positive).
    Partition shifted_parts(int delta) const;
    /// Adds a box at the end of row `row` (0-based; row == length() opens a new row).
    Partition with_box_in_row(int row) const;
    /// Rows whose last box can be removed while staying a partition.
    std::vector<int> removable_rows() const;
    /// Rows that can receive a box.
    std::vector<int> addable_rows() const;

    std::string to_string() const;

    friend bool operator==(const Partition&, const Partition&) = default;
    /// Lexicographic on the part sequence; restricted to one size this is a
    /// linear extension of dominance, e.g. (1,1) < (2).
    friend std::strong_ordering operator<=>(const Partition& a, const Partition& b)
    {
        return a.parts_ <=> b.parts_;
    }

private:
    std::vector<int> parts_;
    int size_ = 0;
};

/// All partitions of n, reverse lexicographic: (n), (n-1,1), ..., (1^n).
std::vector<Partition> enumerate_partitions(int n);
/// All partitions of size <= n with every part >= min_part, by increasing size.
std::vector<Partition> partitions_up_to(int n, int min_part = 1);

/// z_mu = prod_i i^{m_i} m_i!.
Integer z_mu(const Partition& mu);

/// Arm and leg of box (row, col), both 1-based, French convention (leg counts
/// boxes above in the same column). Throws std::out_of_range outside lambda.
std::pair<int, int> arm_leg(const Partition& lambda, int row, int col);

/// Dominance order mu <= lambda; throws std::invalid_argument on size mismatch.
bool dominance_leq(const Partition& mu, const Partition& lambda);

Integer factorial(int n);
Integer binomial(int n, int k);

}  // namespace jackkerov
