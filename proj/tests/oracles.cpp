#include "oracles.hpp"

#include <algorithm>
#include <numeric>

namespace oracle {

Z partition_count(std::uint32_t w) {
    std::vector<Z> p(w + 1, 0);
    p[0] = 1;
    for (std::uint32_t n = 1; n <= w; ++n) {
        for (std::int64_t k = 1;; ++k) {
            const std::int64_t g1 = k * (3 * k - 1) / 2;
            const std::int64_t g2 = k * (3 * k + 1) / 2;
            if (g1 > n) break;
            const int sign = (k % 2 == 1) ? 1 : -1;
            p[n] += sign * p[n - g1];
            if (g2 <= n) p[n] += sign * p[n - g2];
        }
    }
    return p[w];
}

Z brute_automorphisms(const Exponents& lambda) {
    std::vector<std::uint32_t> fiber;
    std::uint32_t next = 0;
    for (std::size_t k = 0; k < lambda.size(); ++k)
        for (std::uint32_t j = 0; j < lambda[k]; ++j, ++next)
            for (std::size_t i = 0; i <= k; ++i) fiber.push_back(next);
    std::vector<std::uint32_t> perm(fiber.size());
    std::iota(perm.begin(), perm.end(), 0u);
    Z count = 0;
    do {
        bool ok = true;
        for (std::size_t x = 0; x < perm.size() && ok; ++x)
            for (std::size_t y = 0; y < perm.size() && ok; ++y)
                ok = (fiber[x] == fiber[y]) == (fiber[perm[x]] == fiber[perm[y]]);
        if (ok) ++count;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return count;
}

std::uint32_t weight(const Exponents& e) {
    std::uint32_t w = 0;
    for (std::size_t k = 0; k < e.size(); ++k) w += static_cast<std::uint32_t>(k + 1) * e[k];
    return w;
}

namespace {

Exponents trim(Exponents e) {
    while (!e.empty() && e.back() == 0) e.pop_back();
    return e;
}

void add_to(std::map<Exponents, Q>& m, const Exponents& e, const Q& c) {
    Q& slot = m[e];
    slot += c;
    if (slot == 0) m.erase(e);
}

Z fact(std::uint32_t n) {
    Z r = 1;
    for (std::uint32_t i = 2; i <= n; ++i) r *= i;
    return r;
}

}  // namespace

Series multiply(const Series& a, const Series& b) {
    Series out{a.truncation, {}};
    for (const auto& [ea, ca] : a.raw)
        for (const auto& [eb, cb] : b.raw) {
            Exponents e(std::max(ea.size(), eb.size()), 0);
            for (std::size_t i = 0; i < ea.size(); ++i) e[i] += ea[i];
            for (std::size_t i = 0; i < eb.size(); ++i) e[i] += eb[i];
            if (weight(e) <= a.truncation) add_to(out.raw, trim(e), ca * cb);
        }
    return out;
}

Series plethysm(const Series& g, const Series& f) {
    Series out{g.truncation, {}};
    for (const auto& [lambda, c] : g.raw) {
        Series term{g.truncation, {{Exponents{}, c}}};
        for (std::size_t k0 = 0; k0 < lambda.size(); ++k0) {
            const std::uint32_t k = static_cast<std::uint32_t>(k0 + 1);
            Series fk{g.truncation, {}};
            for (const auto& [e, cf] : f.raw) {
                Exponents d(e.size() * k, 0);
                for (std::size_t j = 0; j < e.size(); ++j) d[(j + 1) * k - 1] = e[j];
                if (weight(d) <= g.truncation) add_to(fk.raw, trim(d), cf);
            }
            for (std::uint32_t m = 0; m < lambda[k0]; ++m) term = multiply(term, fk);
        }
        for (const auto& [e, ct] : term.raw) add_to(out.raw, e, ct);
    }
    return out;
}

Z autiv(const Exponents& e) {
    Z r = 1;
    for (std::size_t k = 0; k < e.size(); ++k) {
        Z kf = fact(static_cast<std::uint32_t>(k + 1));
        for (std::uint32_t j = 0; j < e[k]; ++j) r *= kf;
        r *= fact(e[k]);
    }
    return r;
}

std::map<std::pair<std::vector<std::uint32_t>, std::uint32_t>, Q> faa_di_bruno(std::uint32_t n) {
    std::map<std::pair<std::vector<std::uint32_t>, std::uint32_t>, Q> out;
    std::vector<std::uint32_t> parts;
    auto rec = [&](auto&& self, std::uint32_t remaining) -> void {
        if (remaining == 0) {
            Z multinomial = fact(n);
            for (auto p : parts) multinomial /= fact(p);
            std::vector<std::uint32_t> sorted = parts;
            std::sort(sorted.begin(), sorted.end());
            const auto k = static_cast<std::uint32_t>(parts.size());
            out[{sorted, k}] += Q(multinomial, fact(k));
            return;
        }
        for (std::uint32_t p = 1; p <= remaining; ++p) {
            parts.push_back(p);
            self(self, remaining - p);
            parts.pop_back();
        }
    };
    rec(rec, n);
    for (auto& [key, q] : out) q.canonicalize();
    return out;
}

std::map<Exponents, Q> bell(std::uint32_t n, std::uint32_t k) {
    // Series in t up to t^n whose coefficients are polynomials in x_1..x_n.
    using Poly = std::map<Exponents, Q>;
    std::vector<Poly> base(n + 1), power(n + 1);
    for (std::uint32_t j = 1; j <= n; ++j) {
        Exponents e(j, 0);
        e[j - 1] = 1;
        base[j][e] = Q(1, fact(j));
    }
    power[0][Exponents{}] = 1;
    for (std::uint32_t step = 0; step < k; ++step) {
        std::vector<Poly> next(n + 1);
        for (std::uint32_t a = 0; a <= n; ++a)
            for (std::uint32_t b = 1; a + b <= n; ++b)
                for (const auto& [ea, ca] : power[a])
                    for (const auto& [eb, cb] : base[b]) {
                        Exponents e(std::max(ea.size(), eb.size()), 0);
                        for (std::size_t i = 0; i < ea.size(); ++i) e[i] += ea[i];
                        for (std::size_t i = 0; i < eb.size(); ++i) e[i] += eb[i];
                        add_to(next[a + b], trim(e), ca * cb);
                    }
        power = std::move(next);
    }
    Poly out;
    for (const auto& [e, c] : power[n]) add_to(out, e, c * Q(fact(n), fact(k)));
    for (auto& [e, q] : out) q.canonicalize();
    return out;
}

Relation relation_of_labels(const std::vector<std::uint32_t>& label) {
    const auto n = label.size();
    Relation r(n, std::vector<bool>(n, false));
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) r[x][y] = label[x] == label[y];
    return r;
}

Relation transitive_closure(Relation r) {
    const auto n = r.size();
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (r[i][k] && r[k][j]) r[i][j] = true;
    return r;
}

Relation relation_join(const Relation& a, const Relation& b) {
    Relation u = a;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j) u[i][j] = a[i][j] || b[i][j];
    return transitive_closure(u);
}

Relation relation_meet(const Relation& a, const Relation& b) {
    Relation m = a;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j) m[i][j] = a[i][j] && b[i][j];
    return m;
}

Relation compose(const Relation& a, const Relation& b) {
    const auto n = a.size();
    Relation c(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n && !c[i][j]; ++k) c[i][j] = a[i][k] && b[k][j];
    return c;
}

std::vector<std::vector<std::uint32_t>> all_labellings(std::uint32_t n) {
    std::vector<std::vector<std::uint32_t>> out;
    std::vector<std::uint32_t> l(n, 0);
    // every function n -> n, kept when it is a restricted growth string
    while (true) {
        bool rgs = true;
        std::uint32_t top = 0;
        for (std::uint32_t i = 0; i < n && rgs; ++i) {
            if (l[i] > top) rgs = false;
            if (l[i] == top) ++top;
        }
        if (rgs) out.push_back(l);
        std::uint32_t i = 0;
        while (i < n && ++l[i] == n) l[i++] = 0;
        if (i == n) break;
    }
    return out;
}

}  // namespace oracle
