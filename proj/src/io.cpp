#include "pleth/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <system_error>

#include "pleth/errors.hpp"

namespace pleth::io {

namespace {

const Json& field(const Json& j, const char* key) {
    if (!j.is_object()) throw FormatError(std::string("expected an object with key \"") + key + "\"");
    auto it = j.find(key);
    if (it == j.end()) throw FormatError(std::string("missing key \"") + key + "\"");
    return *it;
}

const Json& array_field(const Json& j, const char* key) {
    const Json& a = field(j, key);
    if (!a.is_array()) throw FormatError(std::string("\"") + key + "\" must be an array");
    return a;
}

std::uint32_t as_index(const Json& j, const char* what) {
    if (!j.is_number_integer() || j.get<std::int64_t>() < 0 || j.get<std::int64_t>() > UINT32_MAX)
        throw FormatError(std::string(what) + " must be a nonnegative integer");
    return static_cast<std::uint32_t>(j.get<std::int64_t>());
}

Rational coeff_from_json(const Json& j) {
    if (j.is_string()) return parse_fraction(j.get<std::string>());
    if (j.is_number_integer()) return Rational(Integer(std::to_string(j.get<std::int64_t>())));
    throw FormatError("coefficient must be a fraction string or an integer");
}

std::vector<std::uint32_t> assignment_from_json(const Json& j, const char* what) {
    if (!j.is_array()) throw FormatError(std::string(what) + " must be an array");
    std::vector<std::uint32_t> out;
    for (const auto& v : j) out.push_back(as_index(v, what));
    return out;
}

}  // namespace

Json parse_json(std::string_view text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw FormatError(std::string("invalid JSON: ") + e.what());
    }
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json to_json(const PartitionVector& v) { return Json(v.dense()); }

PartitionVector vector_from_json(const Json& j) {
    if (j.is_string()) return decode_vector(j.get<std::string>());
    return PartitionVector::canonical(assignment_from_json(j, "lambda entry"));
}

Json to_json(const TruncatedSeries& s) {
    Json terms = Json::array();
    for (const auto& [lambda, f] : s.f_terms())
        terms.push_back(Json{{"lambda", to_json(lambda)}, {"coeff", to_fraction_string(f)}});
    return Json{{"truncation", s.truncation()}, {"normalization", "f"}, {"terms", std::move(terms)}};
}

TruncatedSeries series_from_json(const Json& j) {
    const std::uint32_t w = as_index(field(j, "truncation"), "truncation");
    if (w == 0) throw FormatError("truncation must be >= 1");
    std::string norm = "f";
    if (j.contains("normalization")) {
        if (!j["normalization"].is_string()) throw FormatError("normalization must be \"f\" or \"raw\"");
        norm = j["normalization"].get<std::string>();
        if (norm != "f" && norm != "raw") throw FormatError("normalization must be \"f\" or \"raw\"");
    }
    std::vector<std::pair<PartitionVector, Rational>> pairs;
    for (const auto& t : array_field(j, "terms")) {
        PartitionVector lambda = vector_from_json(field(t, "lambda"));
        if (lambda.weight() > w)
            throw FormatError("term " + encode(lambda) + " lies above truncation " + std::to_string(w));
        pairs.emplace_back(std::move(lambda), coeff_from_json(field(t, "coeff")));
    }
    return norm == "f" ? TruncatedSeries::from_f_coefficients(pairs, w)
                       : TruncatedSeries::from_raw_coefficients(pairs, w);
}

Json to_json(const PMonomial& m) {
    Json a = Json::array();
    for (const auto& mu : m.elements()) a.push_back(encode(mu));
    return a;
}

PMonomial monomial_from_json(const Json& j) {
    if (!j.is_array()) throw FormatError("monomial must be an array of vector encodings");
    std::vector<PartitionVector> elems;
    for (const auto& e : j) {
        if (!e.is_string()) throw FormatError("monomial entries must be vector encodings");
        PartitionVector mu = decode_vector(e.get<std::string>());
        if (mu.is_zero()) throw FormatError("monomial contains the zero vector");
        elems.push_back(std::move(mu));
    }
    return PMonomial(std::move(elems));
}

Json to_json(const PElement& x) {
    Json terms = Json::array();
    for (const auto& [m, c] : x.terms()) terms.push_back(Json{{"monomial", to_json(m)}, {"coeff", to_fraction_string(c)}});
    return Json{{"terms", std::move(terms)}};
}

PElement element_from_json(const Json& j) {
    PElement x;
    for (const auto& t : array_field(j, "terms"))
        x.add_term(monomial_from_json(field(t, "monomial")), coeff_from_json(field(t, "coeff")));
    return x;
}

Json to_json(const PTensor& t) {
    Json terms = Json::array();
    for (const auto& [key, c] : t.terms())
        terms.push_back(
            Json{{"left", to_json(key.first)}, {"right", to_json(key.second)}, {"coeff", to_fraction_string(c)}});
    return Json{{"terms", std::move(terms)}};
}

PTensor tensor_from_json(const Json& j) {
    PTensor t;
    for (const auto& term : array_field(j, "terms"))
        t.add_term(monomial_from_json(field(term, "left")), monomial_from_json(field(term, "right")),
                   coeff_from_json(field(term, "coeff")));
    return t;
}

Json to_json(const FinSurjection& s) { return Json(s.assignment()); }

Json to_json(const T1Cell& c) {
    return Json{{"t01", c.t01()}, {"t00", c.t00()}, {"down", to_json(c.down)},
                {"t11", c.t11()}, {"right", to_json(c.right)}};
}

T1Cell t1_from_json(const Json& j) {
    const auto t01 = as_index(field(j, "t01"), "t01");
    const auto t00 = as_index(field(j, "t00"), "t00");
    const auto t11 = as_index(field(j, "t11"), "t11");
    auto down = assignment_from_json(field(j, "down"), "down");
    auto right = assignment_from_json(field(j, "right"), "right");
    if (down.size() != t01 || right.size() != t01) throw FormatError("map arrays must have t01 entries");
    return T1Cell(FinSurjection(t00, std::move(down)), FinSurjection(t11, std::move(right)));
}

Json to_json(const Partition& p) { return Json(p.blocks()); }

Json to_json(const Partition& p, const std::vector<std::int64_t>& labels) {
    Json out = Json::array();
    for (const auto& b : p.blocks()) {
        Json block = Json::array();
        for (auto x : b) block.push_back(labels.at(x));
        out.push_back(std::move(block));
    }
    return out;
}

Partition partition_from_json(const Json& j, std::vector<std::int64_t>* labels_out) {
    if (!j.is_array()) throw FormatError("partition must be an array of blocks");
    std::vector<std::vector<std::int64_t>> raw;
    std::set<std::int64_t> labels;
    for (const auto& b : j) {
        if (!b.is_array()) throw FormatError("partition block must be an array");
        auto& block = raw.emplace_back();
        for (const auto& e : b) {
            if (!e.is_number_integer()) throw FormatError("partition labels must be integers");
            block.push_back(e.get<std::int64_t>());
            if (!labels.insert(block.back()).second)
                throw PreconditionError("label " + std::to_string(block.back()) + " appears twice");
        }
    }
    std::map<std::int64_t, std::uint32_t> rename;
    for (auto l : labels) rename.emplace(l, static_cast<std::uint32_t>(rename.size()));
    if (labels_out) labels_out->assign(labels.begin(), labels.end());
    std::vector<std::vector<std::uint32_t>> blocks;
    for (const auto& b : raw) {
        auto& out = blocks.emplace_back();
        for (auto l : b) out.push_back(rename.at(l));
    }
    return Partition(static_cast<std::uint32_t>(labels.size()), std::move(blocks));
}

VectorMultiset parse_multiset(std::string_view text) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
    if (s.size() < 2 || s.front() != '{' || s.back() != '}')
        throw FormatError("multiset must be written {(..),(..)}: " + std::string(text));
    std::vector<PartitionVector> elems;
    std::size_t i = 1;
    const std::size_t end = s.size() - 1;
    while (i < end) {
        if (s[i] != '(') throw FormatError("expected '(' in multiset: " + std::string(text));
        const auto close = s.find(')', i);
        if (close == std::string::npos || close > end) throw FormatError("unclosed '(' in multiset: " + std::string(text));
        PartitionVector mu = decode_vector(std::string_view(s).substr(i + 1, close - i - 1));
        if (mu.is_zero()) throw FormatError("multiset contains the zero vector");
        elems.push_back(std::move(mu));
        i = close + 1;
        if (i < end) {
            if (s[i] != ',') throw FormatError("expected ',' in multiset: " + std::string(text));
            ++i;
            if (i == end) throw FormatError("trailing ',' in multiset: " + std::string(text));
        }
    }
    return VectorMultiset(std::move(elems));
}

std::string to_text(const TruncatedSeries& s) {
    std::ostringstream out;
    out << "truncation " << s.truncation() << "\n";
    for (const auto& [lambda, f] : s.f_terms()) out << "f(" << encode(lambda) << ") = " << to_fraction_string(f) << "\n";
    return out.str();
}

std::string to_text(const PMonomial& m) {
    if (m.empty()) return "1";
    std::string out;
    for (const auto& mu : m.elements()) {
        if (!out.empty()) out += " ";
        out += "A(" + encode(mu) + ")";
    }
    return out;
}

std::string to_text(const PElement& x) {
    std::ostringstream out;
    if (x.is_zero()) out << "0\n";
    for (const auto& [m, c] : x.terms()) out << to_fraction_string(c) << " * " << to_text(m) << "\n";
    return out.str();
}

std::string to_text(const PTensor& t) {
    std::ostringstream out;
    if (t.is_zero()) out << "0\n";
    for (const auto& [key, c] : t.terms())
        out << to_fraction_string(c) << " * " << to_text(key.first) << " (x) " << to_text(key.second) << "\n";
    return out.str();
}

std::string to_text(const Partition& p) {
    std::string out = "{";
    for (std::size_t b = 0; b < p.blocks().size(); ++b) {
        if (b) out += ",";
        out += "{";
        for (std::size_t i = 0; i < p.blocks()[b].size(); ++i) {
            if (i) out += ",";
            out += std::to_string(p.blocks()[b][i]);
        }
        out += "}";
    }
    return out + "}";
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw FormatError("cannot read " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file_atomic(const std::filesystem::path& path, std::string_view content) {
    auto tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw FormatError("cannot write " + tmp.string());
        out.write(content.data(), static_cast<std::streamsize>(content.size()));
        if (!out) throw FormatError("write failed: " + tmp.string());
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        std::filesystem::remove(tmp, ec);
        throw FormatError("cannot replace " + path.string());
    }
}

}  // namespace pleth::io
