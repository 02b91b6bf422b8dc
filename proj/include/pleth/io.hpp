#pragma once

// JSON and text forms of every value the command line reads or writes.
// Malformed input raises FormatError; well-formed input describing an
// invalid object (a non-surjective map, an overlapping partition) raises
// PreconditionError from the constructor that rejects it.

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "pleth/bialgebra.hpp"
#include "pleth/partition.hpp"
#include "pleth/series.hpp"
#include "pleth/setmodel.hpp"

namespace pleth::io {

using Json = nlohmann::ordered_json;

Json parse_json(std::string_view text);
/// Canonical JSON text: two-space indent, trailing newline.
std::string dump(const Json& j);

Json to_json(const PartitionVector& v);  // dense array
PartitionVector vector_from_json(const Json& j);

/// {"truncation": W, "normalization": "f", "terms": [...]}. The reader also
/// takes "normalization": "raw".
Json to_json(const TruncatedSeries& s);
TruncatedSeries series_from_json(const Json& j);

Json to_json(const PMonomial& m);  // sorted list of encodings
PMonomial monomial_from_json(const Json& j);

Json to_json(const PElement& x);
PElement element_from_json(const Json& j);
Json to_json(const PTensor& t);
PTensor tensor_from_json(const Json& j);

Json to_json(const FinSurjection& s);  // assignment array
Json to_json(const T1Cell& c);
T1Cell t1_from_json(const Json& j);

/// Blocks of 0-based indices.
Json to_json(const Partition& p);
/// Blocks of arbitrary distinct integer labels; labels are sorted and
/// renamed 0, 1, ... so "[[1,2],[3]]" and "[[0,1],[2]]" give the same
/// partition. The sorted original labels are stored in labels if given.
Partition partition_from_json(const Json& j, std::vector<std::int64_t>* labels = nullptr);
/// Blocks written with the given labels in place of 0, 1, ...
Json to_json(const Partition& p, const std::vector<std::int64_t>& labels);

/// "{(1),(2)}", "{(0,1),(1)}", "{}".
VectorMultiset parse_multiset(std::string_view text);

std::string to_text(const TruncatedSeries& s);
std::string to_text(const PMonomial& m);
std::string to_text(const PElement& x);
std::string to_text(const PTensor& t);
std::string to_text(const Partition& p);

std::string read_file(const std::filesystem::path& path);
/// Writes to a sibling temporary file, then renames over path.
void write_file_atomic(const std::filesystem::path& path, std::string_view content);

}  // namespace pleth::io
