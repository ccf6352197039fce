#include "jackkerov/partition.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <stdexcept>

namespace jackkerov {

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts))
{
    for (int p : parts_)
        if (p < 0) throw std::invalid_argument("negative part in partition");
    std::sort(parts_.begin(), parts_.end(), std::greater<>());
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (int p : parts_) size_ += p;
}

Partition Partition::parse(std::string_view text)
{
    if (text.empty() || text == "-" || text == "0") return {};
    std::vector<int> parts;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        if (comma == std::string_view::npos) comma = text.size();
        std::string_view tok = text.substr(pos, comma - pos);
        while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
        while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
        int v = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size())
            throw std::invalid_argument("malformed partition: " + std::string(text));
        parts.push_back(v);
        pos = comma + 1;
    }
    return Partition(std::move(parts));
}

Partition Partition::rectangle(int k, int count)
{
    return Partition(std::vector<int>(static_cast<std::size_t>(count), k));
}

int Partition::multiplicity(int value) const
{
    return static_cast<int>(std::count(parts_.begin(), parts_.end(), value));
}

Partition Partition::conjugate() const
{
    std::vector<int> c(static_cast<std::size_t>(part(0)), 0);
    for (int p : parts_)
        for (int j = 0; j < p; ++j) ++c[static_cast<std::size_t>(j)];
    return Partition(std::move(c));
}

Partition Partition::operator+(const Partition& other) const
{
    std::vector<int> v = parts_;
    v.insert(v.end(), other.parts_.begin(), other.parts_.end());
    return Partition(std::move(v));
}

Partition Partition::with_ones(int count) const
{
    std::vector<int> v = parts_;
    v.insert(v.end(), static_cast<std::size_t>(count), 1);
    return Partition(std::move(v));
}

Partition Partition::shifted_parts(int delta) const
{
    std::vector<int> v = parts_;
    for (int& p : v) p += delta;
    for (int p : v)
        if (p <= 0) throw std::invalid_argument("shift makes a part non-positive");
    return Partition(std::move(v));
}

Partition Partition::with_box_in_row(int row) const
{
    if (row < 0 || row > length()) throw std::out_of_range("row outside partition");
    if (row > 0 && part(row - 1) == part(row)) throw std::invalid_argument("row is not addable");
    Partition p = *this;
    if (row == length()) p.parts_.push_back(1);
    else ++p.parts_[static_cast<std::size_t>(row)];
    ++p.size_;
    return p;
}

std::vector<int> Partition::removable_rows() const
{
    std::vector<int> rows;
    for (int r = 0; r < length(); ++r)
        if (part(r) > part(r + 1)) rows.push_back(r);
    return rows;
}

std::vector<int> Partition::addable_rows() const
{
    std::vector<int> rows;
    for (int r = 0; r <= length(); ++r)
        if (r == 0 || part(r - 1) > part(r)) rows.push_back(r);
    return rows;
}

std::string Partition::to_string() const
{
    if (parts_.empty()) return "-";
    std::string s;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(parts_[i]);
    }
    return s;
}

std::vector<Partition> enumerate_partitions(int n)
{
    std::vector<Partition> out;
    if (n < 0) return out;
    if (n == 0) {
        out.emplace_back();
        return out;
    }
    // Successor in reverse lexicographic order.
    std::vector<int> a{n};
    for (;;) {
        out.emplace_back(a);
        int ones = 0;
        while (!a.empty() && a.back() == 1) {
            a.pop_back();
            ++ones;
        }
        if (a.empty()) break;
        int k = --a.back();
        int rest = ones + 1;
        while (rest > 0) {
            int piece = std::min(k, rest);
            a.push_back(piece);
            rest -= piece;
        }
    }
    return out;
}

std::vector<Partition> partitions_up_to(int n, int min_part)
{
    std::vector<Partition> out;
    for (int k = 0; k <= n; ++k)
        for (auto& p : enumerate_partitions(k)) {
            if (!p.empty() && p.parts().back() < min_part) continue;
            out.push_back(std::move(p));
        }
    return out;
}

Integer factorial(int n)
{
    Integer f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    return f;
}

Integer binomial(int n, int k)
{
    if (k < 0 || n < 0 || k > n) return 0;
    Integer b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return b;
}

Integer z_mu(const Partition& mu)
{
    Integer z = 1;
    const auto& p = mu.parts();
    std::size_t i = 0;
    while (i < p.size()) {
        std::size_t j = i;
        while (j < p.size() && p[j] == p[i]) ++j;
        const int m = static_cast<int>(j - i);
        Integer pw;
        mpz_ui_pow_ui(pw.get_mpz_t(), static_cast<unsigned long>(p[i]), static_cast<unsigned long>(m));
        z *= pw * factorial(m);
        i = j;
    }
    return z;
}

std::pair<int, int> arm_leg(const Partition& lambda, int row, int col)
{
    if (row < 1 || row > lambda.length() || col < 1 || col > lambda.part(row - 1))
        throw std::out_of_range("box outside partition");
    const int arm = lambda.part(row - 1) - col;
    int leg = 0;
    for (int r = row; r < lambda.length(); ++r)
        if (lambda.part(r) >= col) ++leg;
    return {arm, leg};
}

bool dominance_leq(const Partition& mu, const Partition& lambda)
{
    if (mu.size() != lambda.size()) throw std::invalid_argument("dominance between partitions of different sizes");
    int a = 0, b = 0;
    const int len = std::max(mu.length(), lambda.length());
    for (int i = 0; i < len; ++i) {
        a += mu.part(i);
        b += lambda.part(i);
        if (a > b) return false;
    }
    return true;
}

}  // namespace jackkerov
