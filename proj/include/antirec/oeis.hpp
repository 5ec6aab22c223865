#pragma once

/**
 * @file oeis.hpp
 * @brief OEIS b-files: parsing, rendering, comparison and an optional fetch client.
 *
 * A b-file is plain text: '#' comment lines and "<index> <value>" data lines.
 * Values are read as arbitrary-precision integers and only narrowed to 64
 * bits when compared.
 */

#include <boost/multiprecision/cpp_int.hpp>
#include <chrono>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "antirec/audit.hpp"
#include "antirec/forms.hpp"

namespace antirec {

using BigInt = boost::multiprecision::cpp_int;

struct BFileEntry {
    std::int64_t index = 0;
    BigInt value;

    bool operator==(const BFileEntry&) const = default;
};

struct BFile {
    std::string id;
    std::vector<BFileEntry> entries;
    std::vector<std::string> comments;  // without the leading '#'

    bool operator==(const BFile&) const = default;
};

// ParseError (with line number) on malformed lines or indices that do not
// strictly increase. Blank lines are skipped.
BFile parse_bfile(std::string_view text, std::string id = {});
std::string render(const BFile& b);

// Generated value for an index, nullopt outside the generated range.
using SequenceFn = std::function<std::optional<std::int64_t>(std::int64_t)>;

// Checks seq(i + index_shift) == value for every entry (i, value) that seq
// covers; range is the number of entries compared.
AuditReport compare(const SequenceFn& seq, const BFile& b, std::int64_t index_shift = 0);

// One entry of data/oeis/manifest.json.
struct FixtureEntry {
    std::string id;
    std::string file;
    // A, A-diff, B, B1, B2, period-doubling, choral
    std::string kind;
    std::optional<LinearForm> form;
    bool zero_term = false;  // the sequence starts with A_0 = 0
    std::int64_t offset = 1;
    std::int64_t index_shift = 0;
    std::string source;
};

std::map<std::string, FixtureEntry> load_manifest(const std::filesystem::path& dir);

// Generated counterpart of a fixture, covering OEIS indices up to max_index.
SequenceFn reference_sequence(const FixtureEntry& e, std::int64_t max_index);

// ValidationError unless id is 'A' followed by six digits.
void validate_id(std::string_view id);
// "/A075326/b075326.txt"
std::string bfile_path(std::string_view id);

struct FetchOptions {
    std::filesystem::path cache_dir;  // empty: default_cache_dir()
    bool online = false;
    std::string server = "https://oeis.org";
    std::chrono::seconds timeout{30};
};

// $ANTIREC_OEIS_CACHE, else ./oeis-cache
std::filesystem::path default_cache_dir();

// Reads <cache>/<id>.txt when present. Otherwise downloads the b-file if
// online is set and stores it in the cache; RetrievalError when offline or
// when the request fails.
BFile fetch(std::string_view id, const FetchOptions& opts = {});

}  // namespace antirec
