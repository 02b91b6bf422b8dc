#include "pleth/lambda.hpp"

#include <algorithm>
#include <charconv>
#include <functional>

#include "pleth/errors.hpp"

namespace pleth {

PartitionVector PartitionVector::canonical(std::span<const std::uint32_t> raw) {
    PartitionVector v;
    for (std::size_t i = 0; i < raw.size(); ++i)
        if (raw[i] != 0) v.entries_.emplace_back(static_cast<std::uint32_t>(i + 1), raw[i]);
    return v;
}

PartitionVector PartitionVector::unit(std::uint32_t k, std::uint32_t mult) {
    if (k == 0) throw PreconditionError("partition vector index must be >= 1");
    PartitionVector v;
    if (mult != 0) v.entries_.emplace_back(k, mult);
    return v;
}

std::uint32_t PartitionVector::operator[](std::uint32_t k) const {
    auto it = std::lower_bound(entries_.begin(), entries_.end(), k,
                               [](const Entry& e, std::uint32_t key) { return e.first < key; });
    return (it != entries_.end() && it->first == k) ? it->second : 0;
}

std::vector<std::uint32_t> PartitionVector::dense() const {
    std::vector<std::uint32_t> out(max_index(), 0);
    for (const auto& [k, m] : entries_) out[k - 1] = m;
    return out;
}

std::uint64_t PartitionVector::length() const {
    std::uint64_t s = 0;
    for (const auto& e : entries_) s += e.second;
    return s;
}

std::uint64_t PartitionVector::weight() const {
    std::uint64_t s = 0;
    for (const auto& [k, m] : entries_) s += std::uint64_t{k} * m;
    return s;
}

std::strong_ordering operator<=>(const PartitionVector& a, const PartitionVector& b) {
    if (auto c = a.weight() <=> b.weight(); c != 0) return c;
    // Walk both sparse supports in index order; the first differing index
    // decides, larger entry first.
    auto ia = a.entries_.begin(), ib = b.entries_.begin();
    while (ia != a.entries_.end() || ib != b.entries_.end()) {
        const std::uint32_t ka = ia != a.entries_.end() ? ia->first : UINT32_MAX;
        const std::uint32_t kb = ib != b.entries_.end() ? ib->first : UINT32_MAX;
        const std::uint32_t k = std::min(ka, kb);
        const std::uint32_t va = ka == k ? ia->second : 0;
        const std::uint32_t vb = kb == k ? ib->second : 0;
        if (va != vb) return vb <=> va;
        if (ka == k) ++ia;
        if (kb == k) ++ib;
    }
    return std::strong_ordering::equal;
}

std::uint64_t length(const PartitionVector& v) { return v.length(); }
std::uint64_t weight(const PartitionVector& v) { return v.weight(); }

Integer autiv(const PartitionVector& v) {
    Integer r = 1;
    for (const auto& [k, m] : v.entries()) {
        Integer kf = factorial(k);
        Integer p;
        mpz_pow_ui(p.get_mpz_t(), kf.get_mpz_t(), m);
        r *= p * factorial(m);
    }
    return r;
}

PartitionVector verschiebung(std::uint32_t n, const PartitionVector& v) {
    if (n == 0) throw PreconditionError("Verschiebung order must be >= 1");
    std::vector<std::uint32_t> dense(std::size_t{v.max_index()} * n, 0);
    for (const auto& [k, m] : v.entries()) dense[std::size_t{k} * n - 1] = m;
    return PartitionVector::canonical(dense);
}

PartitionVector vec_add(const PartitionVector& a, const PartitionVector& b) {
    std::vector<std::uint32_t> dense(std::max(a.max_index(), b.max_index()), 0);
    for (const auto& [k, m] : a.entries()) dense[k - 1] += m;
    for (const auto& [k, m] : b.entries()) dense[k - 1] += m;
    return PartitionVector::canonical(dense);
}

bool dominated_by(const PartitionVector& a, const PartitionVector& b) {
    for (const auto& [k, m] : a.entries())
        if (b[k] < m) return false;
    return true;
}

PartitionVector vec_sub(const PartitionVector& b, const PartitionVector& a) {
    if (!dominated_by(a, b)) throw PreconditionError("vec_sub: subtrahend not dominated");
    std::vector<std::uint32_t> dense = b.dense();
    for (const auto& [k, m] : a.entries()) dense[k - 1] -= m;
    return PartitionVector::canonical(dense);
}

std::string encode(const PartitionVector& v) {
    if (v.is_zero()) return "0";
    std::string out;
    for (std::uint32_t x : v.dense()) {
        if (!out.empty()) out += ',';
        out += std::to_string(x);
    }
    return out;
}

PartitionVector decode_vector(std::string_view text) {
    auto trim = [](std::string_view s) {
        while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
        while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
        return s;
    };
    text = trim(text);
    if (text.empty()) throw FormatError("empty partition vector encoding");
    std::vector<std::uint32_t> raw;
    while (true) {
        const auto comma = text.find(',');
        const auto field = trim(text.substr(0, comma));
        std::uint32_t value = 0;
        auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
        if (field.empty() || ec != std::errc{} || ptr != field.data() + field.size())
            throw FormatError("malformed partition vector entry '" + std::string(field) + "'");
        raw.push_back(value);
        if (comma == std::string_view::npos) break;
        text.remove_prefix(comma + 1);
    }
    return PartitionVector::canonical(raw);
}

// ---------------------------------------------------------------------------

VectorMultiset::VectorMultiset(std::vector<PartitionVector> elements) : elements_(std::move(elements)) {
    for (const auto& e : elements_)
        if (e.is_zero()) throw PreconditionError("vector multisets cannot contain the zero vector");
    std::sort(elements_.begin(), elements_.end());
}

std::uint64_t VectorMultiset::weight() const {
    std::uint64_t s = 0;
    for (const auto& e : elements_) s += e.weight();
    return s;
}

std::vector<std::pair<PartitionVector, std::uint32_t>> VectorMultiset::grouped() const {
    std::vector<std::pair<PartitionVector, std::uint32_t>> out;
    for (const auto& e : elements_) {
        if (!out.empty() && out.back().first == e)
            ++out.back().second;
        else
            out.emplace_back(e, 1);
    }
    return out;
}

VectorMultiset operator+(const VectorMultiset& a, const VectorMultiset& b) {
    VectorMultiset r;
    r.elements_.reserve(a.size() + b.size());
    std::merge(a.elements_.begin(), a.elements_.end(), b.elements_.begin(), b.elements_.end(),
               std::back_inserter(r.elements_));
    return r;
}

std::strong_ordering operator<=>(const VectorMultiset& a, const VectorMultiset& b) {
    if (auto c = a.weight() <=> b.weight(); c != 0) return c;
    if (auto c = a.size() <=> b.size(); c != 0) return c;
    return std::lexicographical_compare_three_way(a.elements_.begin(), a.elements_.end(),
                                                  b.elements_.begin(), b.elements_.end());
}

Integer rep_count(const VectorMultiset& m) {
    Integer r = 1;
    for (const auto& [v, mult] : m.grouped()) r *= factorial(mult);
    return r;
}

Integer multiset_autiv(const VectorMultiset& m) {
    Integer r = rep_count(m);
    for (const auto& e : m.elements()) r *= autiv(e);
    return r;
}

// ---------------------------------------------------------------------------

std::vector<PartitionVector> enumerate_vectors(std::uint32_t w, WeightMode mode) {
    std::vector<PartitionVector> out;
    std::vector<std::uint32_t> dense;
    // Integer partitions of `total` into parts <= max_part, recorded as
    // multiplicities in `dense`.
    std::function<void(std::uint32_t, std::uint32_t)> rec = [&](std::uint32_t remaining, std::uint32_t max_part) {
        if (remaining == 0) {
            out.push_back(PartitionVector::canonical(dense));
            return;
        }
        for (std::uint32_t part = std::min(remaining, max_part); part >= 1; --part) {
            ++dense[part - 1];
            rec(remaining - part, part);
            --dense[part - 1];
        }
    };
    const std::uint32_t lo = mode == WeightMode::exact ? w : 1;
    for (std::uint32_t total = std::max<std::uint32_t>(lo, 1); total <= w; ++total) {
        dense.assign(total, 0);
        rec(total, total);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<PartitionVector> enumerate_subvectors(const PartitionVector& bound, std::uint32_t n) {
    if (n == 0) throw PreconditionError("enumerate_subvectors: n must be >= 1");
    // Coordinates k with bound_{n k} > 0.
    std::vector<std::pair<std::uint32_t, std::uint32_t>> caps;
    for (const auto& [i, m] : bound.entries())
        if (i % n == 0) caps.emplace_back(i / n, m);
    std::vector<PartitionVector> out;
    const std::uint32_t len = caps.empty() ? 0 : caps.back().first;
    std::vector<std::uint32_t> dense(len, 0);
    std::function<void(std::size_t)> rec = [&](std::size_t idx) {
        if (idx == caps.size()) {
            out.push_back(PartitionVector::canonical(dense));
            return;
        }
        for (std::uint32_t x = 0; x <= caps[idx].second; ++x) {
            dense[caps[idx].first - 1] = x;
            rec(idx + 1);
        }
        dense[caps[idx].first - 1] = 0;
    };
    rec(0);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace pleth
