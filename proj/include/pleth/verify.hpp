#pragma once

// Invariant suites. Each check records pass/fail and, on failure, the exact
// mismatch. The command line and the acceptance binary both run these.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include <json.hpp>

#include "pleth/series.hpp"

namespace pleth::verify {

struct Check {
    std::string name;
    bool passed = true;
    std::string detail;  // empty on success
};

struct Report {
    std::string suite;
    std::vector<Check> checks;

    void add(std::string name, bool passed, std::string detail = {});
    bool all_passed() const;
    std::size_t failures() const;
    nlohmann::ordered_json to_json() const;
    std::string to_text() const;
};

struct Bounds {
    std::uint32_t truncation = 3;
    std::uint32_t size_bound = 4;
    std::uint64_t seed = 1;
    std::uint32_t pairs = 20;
};

/// f-coefficients uniform in {-3..3} on every lambda with weight <= W; the
/// constant term is drawn only when with_constant is set.
TruncatedSeries random_series(std::mt19937_64& rng, std::uint32_t truncation, bool with_constant);

/// <Delta(A_sigma), F (x) G> = A_sigma(G o F) for every nonzero sigma with
/// weight <= truncation, on `pairs` seeded random (F, G).
Report duality(const Bounds& b);
/// green_delta(w) sides agree for 1 <= w <= truncation.
Report green(const Bounds& b);
/// Tuple route = multiset route, coassociativity and counit, weight <=
/// truncation.
Report coalgebra(const Bounds& b);
/// objective_delta(sigma) = delta_generator(class(sigma)) for every connected
/// class with |t01| <= size_bound.
Report objective(const Bounds& b);
/// aut_count = multiset_autiv(t1_class) for every cell with |t01| <=
/// size_bound, and |aut(k ->> 1)| = k!.
Report automorphisms(const Bounds& b);
/// Block-level and diagram routes agree on all pairs (and transversal
/// triples) over ground sets of size <= size_bound.
Report partitions(const Bounds& b);
/// Simplicial identities, pullback axioms, unique Segal completion and
/// sum-splitting, total sizes <= size_bound.
Report simplicial(const Bounds& b);

/// Dispatch by name; PreconditionError on an unknown suite.
Report run(const std::string& suite, const Bounds& b);
const std::vector<std::string>& suite_names();

}  // namespace pleth::verify
