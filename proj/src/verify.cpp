#include "pleth/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>

#include "pleth/bialgebra.hpp"
#include "pleth/errors.hpp"
#include "pleth/io.hpp"
#include "pleth/partition.hpp"
#include "pleth/setmodel.hpp"

namespace pleth::verify {

void Report::add(std::string name, bool passed, std::string detail) {
    checks.push_back(Check{std::move(name), passed, passed ? std::string() : std::move(detail)});
}

bool Report::all_passed() const { return failures() == 0; }

std::size_t Report::failures() const {
    return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const Check& c) { return !c.passed; }));
}

nlohmann::ordered_json Report::to_json() const {
    auto arr = nlohmann::ordered_json::array();
    for (const auto& c : checks) {
        nlohmann::ordered_json j{{"name", c.name}, {"passed", c.passed}};
        if (!c.passed) j["detail"] = c.detail;
        arr.push_back(std::move(j));
    }
    return {{"suite", suite}, {"passed", all_passed()}, {"checks", std::move(arr)}};
}

std::string Report::to_text() const {
    std::ostringstream out;
    for (const auto& c : checks) {
        out << (c.passed ? "PASS " : "FAIL ") << c.name << "\n";
        if (!c.passed) out << "     " << c.detail << "\n";
    }
    out << suite << ": " << (checks.size() - failures()) << "/" << checks.size() << " passed\n";
    return out.str();
}

TruncatedSeries random_series(std::mt19937_64& rng, std::uint32_t truncation, bool with_constant) {
    std::uniform_int_distribution<int> coeff(-3, 3);
    std::vector<std::pair<PartitionVector, Rational>> pairs;
    if (with_constant) pairs.emplace_back(PartitionVector{}, Rational(coeff(rng)));
    for (const auto& lambda : enumerate_vectors(truncation, WeightMode::upto))
        pairs.emplace_back(lambda, Rational(coeff(rng)));
    return TruncatedSeries::from_f_coefficients(pairs, truncation);
}

namespace {

std::string str(const PartitionVector& v) { return "(" + encode(v) + ")"; }

std::string tensor_diff(const PTensor& a, const PTensor& b) {
    std::ostringstream out;
    std::map<PTensor::Key, std::pair<Rational, Rational>> diff;
    for (const auto& [k, c] : a.terms()) diff[k].first = c;
    for (const auto& [k, c] : b.terms()) diff[k].second = c;
    int shown = 0;
    for (const auto& [k, cs] : diff) {
        if (cs.first == cs.second) continue;
        if (shown++ == 4) {
            out << " ...";
            break;
        }
        out << " [" << io::to_text(k.first) << " (x) " << io::to_text(k.second) << ": " << to_fraction_string(cs.first)
            << " vs " << to_fraction_string(cs.second) << "]";
    }
    return out.str();
}

// Runs body, turning a thrown library error into a failed check.
void guarded(Report& r, const std::string& name, const std::function<std::string()>& body) {
    try {
        const std::string detail = body();
        r.add(name, detail.empty(), detail);
    } catch (const std::exception& e) {
        r.add(name, false, std::string("exception: ") + e.what());
    }
}

}  // namespace

Report duality(const Bounds& b) {
    Report r{"duality", {}};
    std::mt19937_64 rng(b.seed);
    const auto sigmas = enumerate_vectors(b.truncation, WeightMode::upto);
    for (std::uint32_t i = 0; i < b.pairs; ++i) {
        const TruncatedSeries f = random_series(rng, b.truncation, false);
        const TruncatedSeries g = random_series(rng, b.truncation, true);
        guarded(r, "pair " + std::to_string(i) + ": <Delta(A_sigma), F (x) G> = A_sigma(G o F), " +
                       std::to_string(sigmas.size()) + " sigma",
                [&] {
                    const TruncatedSeries gf = plethysm(g, f);
                    for (const auto& sigma : sigmas) {
                        const Rational lhs = pair_tensor(delta_generator(sigma), f, g);
                        const Rational rhs = gf.coefficient(sigma);
                        if (lhs != rhs)
                            return "sigma=" + str(sigma) + ": " + to_fraction_string(lhs) + " vs " +
                                   to_fraction_string(rhs);
                    }
                    return std::string();
                });
    }
    return r;
}

Report green(const Bounds& b) {
    Report r{"green", {}};
    for (std::uint32_t w = 1; w <= b.truncation; ++w)
        guarded(r, "Delta(A) = sum_k A^k (x) a_k, W=" + std::to_string(w), [&] {
            const auto [left, right] = green_delta(w);
            return left == right ? std::string() : "differences:" + tensor_diff(left, right);
        });
    return r;
}

Report coalgebra(const Bounds& b) {
    Report r{"coalgebra", {}};
    for (const auto& sigma : enumerate_vectors(b.truncation, WeightMode::upto)) {
        guarded(r, "tuple route = multiset route, sigma=" + str(sigma), [&] {
            const PTensor a = delta_generator(sigma);
            const PTensor m = delta_generator_multiset(sigma);
            return a == m ? std::string() : "differences:" + tensor_diff(a, m);
        });
        guarded(r, "coassociativity, sigma=" + str(sigma), [&] {
            return coassociator_left(sigma) == coassociator_right(sigma) ? std::string()
                                                                         : std::string("triple tensors differ");
        });
        guarded(r, "counit, sigma=" + str(sigma), [&] {
            const PElement gen = PElement::generator(sigma);
            if (!(counit_left(sigma) == gen)) return "(eps (x) id) Delta gives " + io::to_text(counit_left(sigma));
            if (!(counit_right(sigma) == gen)) return "(id (x) eps) Delta gives " + io::to_text(counit_right(sigma));
            return std::string();
        });
    }
    return r;
}

Report objective(const Bounds& b) {
    Report r{"objective", {}};
    for (const auto& sigma : t1_iso_classes(b.size_bound)) {
        if (!sigma.connected()) continue;
        const PartitionVector cls = fiber_profile(sigma.down);
        guarded(r, "objective_delta = delta_generator, sigma=" + str(cls), [&] {
            const PTensor lhs = objective_delta(sigma);
            const PTensor rhs = delta_generator(cls);
            return lhs == rhs ? std::string() : "differences:" + tensor_diff(lhs, rhs);
        });
    }
    return r;
}

Report automorphisms(const Bounds& b) {
    Report r{"automorphisms", {}};
    std::map<std::uint32_t, std::pair<std::size_t, std::string>> by_size;  // t01 -> (cells, first failure)
    for (const auto& c : enumerate_t1_cells(b.size_bound)) {
        auto& [count, failure] = by_size[c.t01()];
        ++count;
        if (!failure.empty()) continue;
        const Integer brute = aut_count(c);
        const Integer formula = multiset_autiv(t1_class(c));
        if (brute != formula)
            failure = io::dump(io::to_json(c)) + " aut_count=" + brute.get_str() + " multiset_autiv=" + formula.get_str();
    }
    for (const auto& [n, entry] : by_size)
        r.add("aut_count = multiset_autiv, |t01|=" + std::to_string(n) + " (" + std::to_string(entry.first) + " cells)",
              entry.second.empty(), entry.second);
    for (std::uint32_t k = 1; k <= b.size_bound; ++k) {
        const Integer brute = aut_count(connected_cell(FinSurjection::to_point(k)));
        r.add("|aut(" + std::to_string(k) + " ->> 1)| = " + std::to_string(k) + "!", brute == factorial(k),
              "got " + brute.get_str());
    }
    return r;
}

Report partitions(const Bounds& b) {
    Report r{"partitions", {}};
    for (std::uint32_t n = 1; n <= b.size_bound; ++n) {
        const auto all = enumerate_partitions(n);
        const std::string at = " n=" + std::to_string(n);
        const auto pairwise = [&](const std::string& name, const std::function<void(const Partition&, const Partition&)>& f) {
            guarded(r, name + at + " (" + std::to_string(all.size() * all.size()) + " pairs)", [&] {
                for (const auto& pi : all)
                    for (const auto& tau : all) f(pi, tau);
                return std::string();
            });
        };
        pairwise("join agrees", [](const Partition& p, const Partition& t) { (void)join(p, t); });
        pairwise("meet agrees", [](const Partition& p, const Partition& t) { (void)meet(p, t); });
        pairwise("refines agrees", [](const Partition& p, const Partition& t) { (void)refines(p, t); });
        pairwise("commute agrees", [](const Partition& p, const Partition& t) { (void)commute(p, t); });
        pairwise("independent agrees", [](const Partition& p, const Partition& t) { (void)independent(p, t); });
        guarded(r, "phi injective iff meet is discrete" + at, [&] {
            for (const auto& pi : all)
                for (const auto& tau : all) {
                    const auto d = partition_diagram(pi, tau);
                    std::vector<std::uint32_t> image = d.phi;
                    std::sort(image.begin(), image.end());
                    const bool injective = std::adjacent_find(image.begin(), image.end()) == image.end();
                    if (injective != (meet(pi, tau) == Partition::discrete(n)))
                        return io::to_text(pi) + " " + io::to_text(tau);
                }
            return std::string();
        });
        std::size_t triples = 0, transversals = 0;
        guarded(r, "transversal agrees, connected T2 on success" + at, [&] {
            for (const auto& pi : all)
                for (const auto& sigma : all) {
                    if (!blockwise::refines(pi, sigma)) continue;
                    for (const auto& tau : all) {
                        ++triples;
                        if (!is_transversal(sigma, pi, tau)) continue;
                        ++transversals;
                        const auto t = diagrammatic::transversal_simplex(sigma, pi, tau);
                        if (!t->is_valid() || !t->connected())
                            return "bad simplex for " + io::to_text(sigma) + " " + io::to_text(pi) + " " +
                                   io::to_text(tau);
                    }
                }
            return std::string();
        });
        r.checks.back().name += " (" + std::to_string(triples) + " triples, " + std::to_string(transversals) + " true)";
    }
    return r;
}

namespace {

std::string simplicial_identities(const Simplex& x) {
    const std::uint32_t n = x.dim();
    if (!x.is_valid()) return "simplex invalid";
    for (std::uint32_t j = 0; j <= n; ++j) {
        const Simplex s = x.degeneracy(j);
        if (!s.is_valid()) return "s" + std::to_string(j) + " invalid";
        for (std::uint32_t i = 0; i <= n + 1; ++i) {
            const Simplex lhs = s.face(i);
            bool ok;
            if (i < j)
                ok = lhs == x.face(i).degeneracy(j - 1);
            else if (i == j || i == j + 1)
                ok = lhs == x;
            else
                ok = lhs == x.face(i - 1).degeneracy(j);
            if (!ok) return "d" + std::to_string(i) + " s" + std::to_string(j);
        }
        for (std::uint32_t i = 0; i <= j; ++i)
            if (!(x.degeneracy(j).degeneracy(i) == x.degeneracy(i).degeneracy(j + 1)))
                return "s" + std::to_string(i) + " s" + std::to_string(j);
    }
    if (n >= 1)
        for (std::uint32_t j = 0; j <= n; ++j) {
            const Simplex f = x.face(j);
            if (!f.is_valid()) return "d" + std::to_string(j) + " invalid";
            for (std::uint32_t i = 0; i < j && n >= 2; ++i)
                if (!(f.face(i) == x.face(i).face(j - 1)))
                    return "d" + std::to_string(i) + " d" + std::to_string(j);
        }
    return {};
}

std::uint32_t largest_set(const Simplex& x) {
    std::uint32_t m = 0;
    for (std::uint32_t i = 0; i <= x.dim(); ++i)
        for (std::uint32_t j = i; j <= x.dim(); ++j) m = std::max(m, x.size(i, j));
    return m;
}

std::uint32_t apex_size(const T1Cell& a, const T1Cell& b) {
    const auto rf = a.right.fibers();
    const auto df = b.down.fibers();
    std::uint32_t s = 0;
    for (std::size_t r = 0; r < rf.size(); ++r) s += static_cast<std::uint32_t>(rf[r].size() * df[r].size());
    return s;
}

Square apex_square(const Simplex& t) { return Square{t.left(0, 2), t.right(0, 2), t.right(0, 1), t.left(1, 2)}; }

Square relabel_apex(const Square& sq, const std::vector<std::uint32_t>& perm) {
    return Square{relabel_source(sq.to_left, perm), relabel_source(sq.to_right, perm), sq.left, sq.right};
}

// Every commuting square of surjections with all four sets of size <= bound.
std::vector<Square> commuting_squares(std::uint32_t bound) {
    std::vector<Square> out;
    for (std::uint32_t c = 1; c <= bound; ++c)
        for (std::uint32_t a = c; a <= bound; ++a)
            for (std::uint32_t b = c; b <= bound; ++b)
                for (std::uint32_t p = std::max(a, b); p <= bound; ++p)
                    for (const auto& left : enumerate_surjections(a, c))
                        for (const auto& right : enumerate_surjections(b, c))
                            for (const auto& tl : enumerate_surjections(p, a))
                                for (const auto& tr : enumerate_surjections(p, b)) {
                                    bool commutes = true;
                                    for (std::uint32_t x = 0; x < p && commutes; ++x) commutes = left(tl(x)) == right(tr(x));
                                    if (commutes) out.push_back(Square{tl, tr, left, right});
                                }
    return out;
}

}  // namespace

Report simplicial(const Bounds& b) {
    Report r{"simplicial", {}};
    const std::uint32_t bound = b.size_bound;

    const auto cells = enumerate_t1_cells(bound);
    guarded(r, "simplicial identities on T1 (" + std::to_string(cells.size()) + " cells)", [&] {
        for (const auto& c : cells) {
            const auto e = simplicial_identities(Simplex::from_t1(c));
            if (!e.empty()) return e + " on " + io::dump(io::to_json(c));
            const auto f = faces(degeneracies(c)[0]);
            if (!(f[1] == c) || !(f[2] == c)) return "d0 s0 or d1 s0 differs from the cell " + io::dump(io::to_json(c));
        }
        return std::string();
    });

    const auto classes = t1_iso_classes(bound);
    std::vector<Simplex> t2s;
    for (const auto& a : classes)
        for (const auto& c : classes)
            if (a.t11() == c.t00() && apex_size(a, c) <= bound) t2s.push_back(segal_completion(a, c));
    guarded(r, "simplicial identities on T2 (" + std::to_string(t2s.size()) + " completions)", [&] {
        for (const auto& t : t2s) {
            const auto e = simplicial_identities(t);
            if (!e.empty()) return e;
        }
        return std::string();
    });

    std::size_t t3_count = 0;
    guarded(r, "simplicial identities on T3", [&] {
        for (const auto& t : t2s)
            for (const auto& c : classes) {
                if (c.t00() != t.size(2, 2) || c.t01() > bound) continue;
                if (apex_size(T1Cell(t.left(1, 2), t.right(1, 2)), c) > bound) continue;
                const Simplex x = t.extend(c);
                if (largest_set(x) > bound) continue;
                ++t3_count;
                const auto e = simplicial_identities(x);
                if (!e.empty()) return e;
            }
        return std::string();
    });
    r.checks.back().name += " (" + std::to_string(t3_count) + " simplices)";

    guarded(r, "identity squares are pullbacks", [&] {
        for (std::uint32_t n = 0; n <= bound; ++n)
            for (const auto& s : enumerate_set_partitions(n)) {
                const auto id_a = FinSurjection::identity(s.source_size());
                const auto id_c = FinSurjection::identity(s.target_size());
                if (!is_pullback_square(Square{id_a, s, s, id_c}) || !is_pullback_square(Square{s, id_a, id_c, s}))
                    return "fails for " + io::dump(io::to_json(s));
            }
        return std::string();
    });

    std::size_t pastings = 0;
    guarded(r, "pasting of pullbacks is a pullback", [&] {
        const std::uint32_t small = std::min<std::uint32_t>(bound, 3);
        for (std::uint32_t c = 1; c <= small; ++c)
            for (std::uint32_t a = c; a <= small; ++a)
                for (std::uint32_t bb = c; bb <= small; ++bb)
                    for (std::uint32_t d = bb; d <= small; ++d)
                        for (const auto& s : enumerate_surjections(a, c))
                            for (const auto& t : enumerate_surjections(bb, c))
                                for (const auto& u : enumerate_surjections(d, bb)) {
                                    const Square inner = pullback(s, t);
                                    if (inner.to_left.source_size() > bound) continue;
                                    const Square outer = pullback(inner.to_right, u);
                                    if (outer.to_left.source_size() > bound) continue;
                                    ++pastings;
                                    if (!is_pullback_square(inner) || !is_pullback_square(outer)) return std::string("canonical pullback rejected");
                                    const Square pasted{compose(inner.to_left, outer.to_left), outer.to_right, s, compose(t, u)};
                                    if (!is_pullback_square(pasted)) return std::string("pasted square is not a pullback");
                                }
        return std::string();
    });
    r.checks.back().name += " (" + std::to_string(pastings) + " pastings)";

    guarded(r, "Segal completion is a pullback, unique up to unique isomorphism", [&] {
        for (const auto& t : t2s) {
            const Square sq = apex_square(t);
            if (!is_pullback_square(sq)) return std::string("apex square is not a pullback");
            const std::uint32_t n = sq.to_left.source_size();
            std::vector<std::uint32_t> rev(n), rot(n);
            for (std::uint32_t i = 0; i < n; ++i) {
                rev[i] = n - 1 - i;
                rot[i] = (i + 1) % n;
            }
            for (const auto* perm : {&rev, &rot}) {
                const Square other = relabel_apex(sq, *perm);
                if (!is_pullback_square(other)) return std::string("relabelled apex rejected");
                const auto isos = count_apex_isomorphisms(sq, other);
                if (isos != 1) return "found " + std::to_string(isos) + " comparison isomorphisms";
            }
        }
        return std::string();
    });

    const std::uint32_t component = std::min<std::uint32_t>(bound, 3);
    const auto squares = commuting_squares(component);
    guarded(r, "sum of squares is a pullback iff both summands are (" + std::to_string(squares.size()) +
                   " squares, component sizes <= " + std::to_string(component) + ")",
            [&] {
                std::vector<bool> pb;
                for (const auto& s : squares) pb.push_back(is_pullback_square(s));
                for (std::size_t i = 0; i < squares.size(); ++i)
                    for (std::size_t j = 0; j < squares.size(); ++j)
                        if (is_pullback_square(square_sum(squares[i], squares[j])) != (pb[i] && pb[j]))
                            return "squares " + std::to_string(i) + " and " + std::to_string(j);
                return std::string();
            });
    return r;
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"duality",       "green",      "coalgebra", "objective",
                                                "automorphisms", "partitions", "simplicial"};
    return names;
}

Report run(const std::string& suite, const Bounds& b) {
    if (suite == "duality") return duality(b);
    if (suite == "green") return green(b);
    if (suite == "coalgebra") return coalgebra(b);
    if (suite == "objective") return objective(b);
    if (suite == "automorphisms") return automorphisms(b);
    if (suite == "partitions") return partitions(b);
    if (suite == "simplicial") return simplicial(b);
    throw PreconditionError("unknown suite: " + suite);
}

}  // namespace pleth::verify
