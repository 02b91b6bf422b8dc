#include "pleth/cli.hpp"

#include <algorithm>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pleth/bialgebra.hpp"
#include "pleth/errors.hpp"
#include "pleth/io.hpp"
#include "pleth/partition.hpp"
#include "pleth/series.hpp"
#include "pleth/verify.hpp"

namespace pleth::cli {

namespace {

enum class Format { json, text };

struct RunConfig {
    std::optional<std::uint32_t> truncation;
    std::uint32_t size_bound = 4;
    std::uint64_t seed = 1;
    Format format = Format::json;
    std::string output;
};

struct Result {
    std::string body;
    int status = 0;
};

TruncatedSeries load_series(const std::string& path, const RunConfig& cfg) {
    TruncatedSeries s = io::series_from_json(io::parse_json(io::read_file(path)));
    if (!cfg.truncation || *cfg.truncation == s.truncation()) return s;
    if (*cfg.truncation > s.truncation())
        throw PreconditionError(path + " is truncated at " + std::to_string(s.truncation()) +
                                ", below the requested " + std::to_string(*cfg.truncation));
    return TruncatedSeries::from_raw_coefficients({s.raw_terms().begin(), s.raw_terms().end()}, *cfg.truncation);
}

PartitionVector nonzero_vector(const std::string& text, const char* what) {
    PartitionVector v = decode_vector(text);
    if (v.is_zero()) throw PreconditionError(std::string(what) + " must be nonzero");
    return v;
}

io::Json count_json(const Integer& n) {
    if (n.fits_ulong_p()) return io::Json(n.get_ui());
    return io::Json(n.get_str());
}

Result emit(const RunConfig& cfg, const io::Json& j, const std::string& text) {
    return Result{cfg.format == Format::json ? io::dump(j) : text, 0};
}

Result cmd_plethysm(const RunConfig& cfg, const std::string& g_path, const std::string& f_path) {
    const TruncatedSeries g = load_series(g_path, cfg);
    const TruncatedSeries f = load_series(f_path, cfg);
    const TruncatedSeries h = plethysm(g, f);
    return emit(cfg, io::to_json(h), io::to_text(h));
}

Result cmd_compose1(const RunConfig& cfg, const std::string& g_path, const std::string& f_path) {
    const TruncatedSeries g = load_series(g_path, cfg);
    const TruncatedSeries f = load_series(f_path, cfg);
    if (g.truncation() != f.truncation()) throw PreconditionError("truncation mismatch");
    if (f.has_constant_term()) throw PreconditionError("inner series has a nonzero constant term");
    const auto h = compose_univariate(restrict_univariate(g), restrict_univariate(f));
    io::Json coeffs = io::Json::array();
    std::ostringstream text;
    text << "truncation " << g.truncation() << "\n";
    for (std::size_t n = 0; n < h.size(); ++n) {
        coeffs.push_back(to_fraction_string(h[n]));
        text << "f(" << n + 1 << ") = " << to_fraction_string(h[n]) << "\n";
    }
    return emit(cfg, io::Json{{"truncation", g.truncation()}, {"coefficients", coeffs}}, text.str());
}

Result cmd_delta(const RunConfig& cfg, const std::string& sigma) {
    const PTensor t = delta_generator(nonzero_vector(sigma, "sigma"));
    return emit(cfg, io::to_json(t), io::to_text(t));
}

Result cmd_bell(const RunConfig& cfg, const std::string& sigma, const std::string& lambda) {
    const PElement x = bell(nonzero_vector(sigma, "sigma"), nonzero_vector(lambda, "lambda"));
    return emit(cfg, io::to_json(x), io::to_text(x));
}

Result cmd_placements(const RunConfig& cfg, const std::string& sigma, const std::string& lambda,
                      const std::string& mu) {
    const Integer n =
        count_placements(nonzero_vector(sigma, "sigma"), nonzero_vector(lambda, "lambda"), io::parse_multiset(mu));
    return emit(cfg, io::Json{{"count", count_json(n)}}, n.get_str() + "\n");
}

Result cmd_green(const RunConfig& cfg) {
    const std::uint32_t w = cfg.truncation.value_or(3);
    const auto [left, right] = green_delta(w);
    const bool equal = left == right;
    io::Json j{{"truncation", w}, {"equal", equal}, {"left", io::to_json(left)}, {"right", io::to_json(right)}};
    std::string text = "sum_k A^k (x) a_k, truncation " + std::to_string(w) + "\n" + io::to_text(right) +
                       (equal ? "equal to Delta(A)\n" : "DIFFERS from Delta(A)\n");
    Result r = emit(cfg, j, text);
    if (!equal) r.status = 4;
    return r;
}

Result cmd_partition(const RunConfig& cfg, const std::string& op, const std::vector<std::string>& args) {
    const std::size_t want = op == "transversal" ? 3 : 2;
    if (args.size() != want)
        throw FormatError("partition " + op + " takes " + std::to_string(want) + " partitions, got " +
                          std::to_string(args.size()));
    std::vector<Partition> ps;
    std::vector<std::int64_t> labels, first_labels;
    for (std::size_t i = 0; i < args.size(); ++i) {
        ps.push_back(io::partition_from_json(io::parse_json(args[i]), &labels));
        if (i == 0)
            first_labels = labels;
        else if (labels != first_labels)
            throw PreconditionError("ground-set mismatch between partition arguments");
    }
    const auto boolean = [&](bool v) {
        return emit(cfg, io::Json{{"op", op}, {"result", v}}, std::string(v ? "true" : "false") + "\n");
    };
    const auto blocks = [&](const Partition& p) {
        const io::Json j = io::to_json(p, first_labels);
        return emit(cfg, io::Json{{"op", op}, {"result", j}}, j.dump() + "\n");
    };
    if (op == "join") return blocks(join(ps[0], ps[1]));
    if (op == "meet") return blocks(meet(ps[0], ps[1]));
    if (op == "commute") return boolean(commute(ps[0], ps[1]));
    if (op == "independent") return boolean(independent(ps[0], ps[1]));
    return boolean(is_transversal(ps[0], ps[1], ps[2]));
}

Result cmd_verify(const RunConfig& cfg, const std::string& suite) {
    verify::Bounds b;
    b.truncation = cfg.truncation.value_or(3);
    b.size_bound = cfg.size_bound;
    b.seed = cfg.seed;
    const verify::Report report = verify::run(suite, b);
    Result r = emit(cfg, report.to_json(), report.to_text());
    if (!report.all_passed()) r.status = 4;
    return r;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact plethystic calculus: substitution, comultiplication and finite-set models"};
    app.require_subcommand(1);
    app.fallthrough();

    RunConfig cfg;
    std::uint32_t truncation = 0;
    auto* trunc_opt = app.add_option("--truncation,-W", truncation, "truncation weight W")->check(CLI::PositiveNumber);
    app.add_option("--size-bound,-n", cfg.size_bound, "enumeration size bound")->check(CLI::PositiveNumber);
    app.add_option("--seed", cfg.seed, "seed for generated series");
    std::map<std::string, Format> formats{{"json", Format::json}, {"text", Format::text}};
    app.add_option("--format", cfg.format, "json or text")->transform(CLI::CheckedTransformer(formats, CLI::ignore_case))
        ->option_text("json|text");
    app.add_option("--output,-o", cfg.output, "write the result here instead of standard output");

    std::string a, b, c, op;
    std::vector<std::string> rest;
    std::function<Result()> action;

    auto* pleth = app.add_subcommand("plethysm", "G o F from two series files");
    pleth->add_option("G", a)->required();
    pleth->add_option("F", b)->required();
    pleth->callback([&] { action = [&] { return cmd_plethysm(cfg, a, b); }; });

    auto* comp = app.add_subcommand("compose1", "one-variable composition of the x_1 restrictions");
    comp->add_option("G", a)->required();
    comp->add_option("F", b)->required();
    comp->callback([&] { action = [&] { return cmd_compose1(cfg, a, b); }; });

    auto* delta = app.add_subcommand("delta", "Delta(A_sigma)");
    delta->add_option("sigma", a, "vector encoding, e.g. 0,1")->required();
    delta->callback([&] { action = [&] { return cmd_delta(cfg, a); }; });

    auto* bell_cmd = app.add_subcommand("bell", "plethystic Bell polynomial P_{sigma,lambda}");
    bell_cmd->add_option("sigma", a)->required();
    bell_cmd->add_option("lambda", b)->required();
    bell_cmd->callback([&] { action = [&] { return cmd_bell(cfg, a, b); }; });

    auto* place = app.add_subcommand("placements", "|T_{sigma,lambda}^mu|");
    place->add_option("sigma", a)->required();
    place->add_option("lambda", b)->required();
    place->add_option("mu", c, "multiset, e.g. {(1),(2)}")->required();
    place->callback([&] { action = [&] { return cmd_placements(cfg, a, b, c); }; });

    auto* green = app.add_subcommand("green", "both sides of Delta(A) = sum_k A^k (x) a_k");
    green->callback([&] { action = [&] { return cmd_green(cfg); }; });

    auto* part = app.add_subcommand("partition", "partition dictionary");
    part->add_option("op", op)
        ->required()
        ->check(CLI::IsMember({"join", "meet", "commute", "independent", "transversal"}));
    // Separate scalar positionals: CLI11 would split a bracketed argument
    // meant for a vector option.
    part->add_option("first", a, "block list, e.g. [[1,2],[3]]")->required();
    part->add_option("second", b, "block list")->required();
    part->add_option("third", c, "block list (transversal only)");
    part->callback([&] {
        rest = {a, b};
        if (!c.empty()) rest.push_back(c);
        action = [&] { return cmd_partition(cfg, op, rest); };
    });

    auto* ver = app.add_subcommand("verify", "run an invariant suite");
    ver->add_option("suite", a)->required()->check(CLI::IsMember(verify::suite_names()));
    ver->callback([&] { action = [&] { return cmd_verify(cfg, a); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    if (trunc_opt->count() > 0) cfg.truncation = truncation;

    try {
        const Result r = action();
        if (cfg.output.empty())
            out << r.body;
        else
            io::write_file_atomic(cfg.output, r.body);
        return r.status;
    } catch (const FormatError& e) {
        err << "format error: " << e.what() << "\n";
        return 2;
    } catch (const PreconditionError& e) {
        err << "precondition violated: " << e.what() << "\n";
        return 3;
    } catch (const InvariantError& e) {
        err << "invariant failure: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 4;
    }
}

}  // namespace pleth::cli
