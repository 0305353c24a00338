#pragma once

#include "wsets/construction.hpp"

#include <optional>

namespace wsets {

struct VersionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CatalogEntry {
    std::string name;
    IntervalSet set;
    std::string note;
};

// [-2pi, -pi) u [pi, 2pi).
IntervalSet shannon();
// [-32pi/7, -4pi) u [-pi, -4pi/7) u [4pi/7, pi) u [4pi, 32pi/7).
IntervalSet journe();

std::vector<CatalogEntry> catalog();

// Extra header carried by saved truncations.
struct TruncationHeader {
    int n = 0;
    int depth = 0;
    Scalar excess = Scalar::zero();
};

struct Document {
    IntervalSet set;
    std::optional<TruncationHeader> truncation;
    bool non_canonical = false;  // set by load when input needed re-normalizing
};

// Version-1 document, field order fixed for reproducible bytes.
std::string to_json_text(const IntervalSet& s,
                         const std::optional<TruncationHeader>& header = std::nullopt);
Document from_json_text(const std::string& text);

void save(const IntervalSet& s, const std::string& path,
          const std::optional<TruncationHeader>& header = std::nullopt);
Document load(const std::string& path);

}  // namespace wsets
