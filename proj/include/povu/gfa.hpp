#pragma once

#include <cstddef>
#include <istream>
#include <map>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace povu {

enum class Orientation : char { Forward = '+', Reverse = '-' };

constexpr Orientation flip(Orientation o) {
    return o == Orientation::Forward ? Orientation::Reverse : Orientation::Forward;
}

constexpr char to_char(Orientation o) { return static_cast<char>(o); }

struct GfaSegment {
    std::string name;
    std::string sequence;  // "*" when absent

    bool operator==(const GfaSegment&) const = default;
};

struct GfaLink {
    std::string from_name;
    Orientation from_orient = Orientation::Forward;
    std::string to_name;
    Orientation to_orient = Orientation::Forward;
    std::string overlap = "*";

    bool operator==(const GfaLink&) const = default;
};

/// Segments and links of a GFA v1 file. Links are stored in canonical form
/// (see canonical_link) and are unique.
struct GfaDocument {
    std::vector<GfaSegment> segments;
    std::vector<GfaLink> links;
    /// Record kinds that were read but not retained ("H", "P", "W", "C",
    /// "tag" for optional fields on S/L lines, "#" for comments, ...).
    std::map<std::string, std::size_t> skipped_line_kinds;
    std::size_t duplicate_links = 0;
    /// Links whose overlap is neither "0M" nor "*". Kept, overlap ignored.
    std::size_t nonblunt_overlaps = 0;
};

enum class GfaErrorKind { MalformedRecord, DuplicateSegment, DanglingLink };

class GfaError : public std::runtime_error {
public:
    GfaError(GfaErrorKind kind, std::size_t line, const std::string& what);

    GfaErrorKind kind() const noexcept { return kind_; }
    /// 1-based line number of the offending record.
    std::size_t line() const noexcept { return line_; }

private:
    GfaErrorKind kind_;
    std::size_t line_;
};

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// "L a x b y" and "L b ~y a ~x" describe the same adjacency; returns the
/// lexicographically smaller of the two on (from, from_orient, to, to_orient).
GfaLink canonical_link(GfaLink link);

/// True for "A", "C", "G", "T", "N" strings (either case) and for "*".
bool valid_sequence(std::string_view seq);

GfaDocument parse_gfa(std::istream& in);
GfaDocument parse_gfa(std::string_view text);

void write_gfa(const GfaDocument& doc, std::ostream& out);
std::string write_gfa(const GfaDocument& doc);

}  // namespace povu
