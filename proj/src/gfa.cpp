#include "povu/gfa.hpp"

#include <sstream>
#include <tuple>
#include <unordered_map>
#include <unordered_set>

namespace povu {

GfaError::GfaError(GfaErrorKind kind, std::size_t line, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ": " + what), kind_(kind), line_(line) {}

GfaLink canonical_link(GfaLink link) {
    GfaLink rev{link.to_name, flip(link.to_orient), link.from_name, flip(link.from_orient), link.overlap};
    auto key = [](const GfaLink& l) {
        return std::tie(l.from_name, l.from_orient, l.to_name, l.to_orient);
    };
    if (key(rev) < key(link)) {
        return rev;
    }
    return link;
}

bool valid_sequence(std::string_view seq) {
    if (seq == "*") {
        return true;
    }
    if (seq.empty()) {
        return false;
    }
    for (char c : seq) {
        switch (c) {
        case 'A': case 'C': case 'G': case 'T': case 'N':
        case 'a': case 'c': case 'g': case 't': case 'n':
            break;
        default:
            return false;
        }
    }
    return true;
}

namespace {

void split_tabs(std::string_view line, std::vector<std::string_view>& fields) {
    fields.clear();
    std::size_t start = 0;
    while (true) {
        std::size_t tab = line.find('\t', start);
        if (tab == std::string_view::npos) {
            fields.push_back(line.substr(start));
            return;
        }
        fields.push_back(line.substr(start, tab - start));
        start = tab + 1;
    }
}

Orientation parse_orient(std::string_view field, std::size_t line_no) {
    if (field == "+") {
        return Orientation::Forward;
    }
    if (field == "-") {
        return Orientation::Reverse;
    }
    throw GfaError(GfaErrorKind::MalformedRecord, line_no,
                   "bad orientation '" + std::string(field) + "' (expected + or -)");
}

std::string link_key(const GfaLink& l) {
    std::string key;
    key.reserve(l.from_name.size() + l.to_name.size() + 4);
    key += l.from_name;
    key += '\t';
    key += to_char(l.from_orient);
    key += l.to_name;
    key += '\t';
    key += to_char(l.to_orient);
    return key;
}

}  // namespace

GfaDocument parse_gfa(std::istream& in) {
    GfaDocument doc;
    std::unordered_map<std::string, std::size_t> segment_line;
    std::unordered_set<std::string> seen_links;
    std::vector<std::size_t> link_lines;

    std::string line;
    std::vector<std::string_view> fields;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (line.empty()) {
            continue;
        }
        if (line.front() == '#') {
            ++doc.skipped_line_kinds["#"];
            continue;
        }
        split_tabs(line, fields);
        const std::string_view kind = fields[0];
        if (kind == "S") {
            if (fields.size() < 3) {
                throw GfaError(GfaErrorKind::MalformedRecord, line_no,
                               "S record needs name and sequence fields");
            }
            if (fields[1].empty()) {
                throw GfaError(GfaErrorKind::MalformedRecord, line_no, "empty segment name");
            }
            if (!valid_sequence(fields[2])) {
                throw GfaError(GfaErrorKind::MalformedRecord, line_no,
                               "sequence of segment '" + std::string(fields[1]) +
                                   "' has characters outside ACGTN");
            }
            std::string name(fields[1]);
            auto [it, inserted] = segment_line.emplace(name, line_no);
            if (!inserted) {
                throw GfaError(GfaErrorKind::DuplicateSegment, line_no,
                               "duplicate segment '" + name + "' (first declared on line " +
                                   std::to_string(it->second) + ")");
            }
            if (fields.size() > 3) {
                doc.skipped_line_kinds["tag"] += fields.size() - 3;
            }
            doc.segments.push_back({std::move(name), std::string(fields[2])});
        } else if (kind == "L") {
            if (fields.size() < 6) {
                throw GfaError(GfaErrorKind::MalformedRecord, line_no,
                               "L record needs from, orient, to, orient and overlap fields");
            }
            if (fields[1].empty() || fields[3].empty()) {
                throw GfaError(GfaErrorKind::MalformedRecord, line_no, "empty segment name in link");
            }
            GfaLink link{std::string(fields[1]), parse_orient(fields[2], line_no),
                         std::string(fields[3]), parse_orient(fields[4], line_no),
                         std::string(fields[5])};
            if (fields.size() > 6) {
                doc.skipped_line_kinds["tag"] += fields.size() - 6;
            }
            if (link.overlap != "0M" && link.overlap != "*") {
                ++doc.nonblunt_overlaps;
            }
            link = canonical_link(std::move(link));
            if (!seen_links.insert(link_key(link)).second) {
                ++doc.duplicate_links;
                continue;
            }
            doc.links.push_back(std::move(link));
            link_lines.push_back(line_no);
        } else {
            ++doc.skipped_line_kinds[std::string(kind)];
        }
    }
    if (in.bad()) {
        throw IoError("read error after line " + std::to_string(line_no));
    }

    // Links may precede the segments they name, so resolve at the end.
    for (std::size_t i = 0; i < doc.links.size(); ++i) {
        const GfaLink& l = doc.links[i];
        for (const std::string* name : {&l.from_name, &l.to_name}) {
            if (!segment_line.contains(*name)) {
                throw GfaError(GfaErrorKind::DanglingLink, link_lines[i],
                               "link references unknown segment '" + *name + "'");
            }
        }
    }
    return doc;
}

GfaDocument parse_gfa(std::string_view text) {
    std::istringstream in{std::string(text)};
    return parse_gfa(in);
}

void write_gfa(const GfaDocument& doc, std::ostream& out) {
    out << "H\tVN:Z:1.0\n";
    for (const GfaSegment& s : doc.segments) {
        out << "S\t" << s.name << '\t' << s.sequence << '\n';
    }
    for (const GfaLink& l : doc.links) {
        out << "L\t" << l.from_name << '\t' << to_char(l.from_orient) << '\t' << l.to_name << '\t'
            << to_char(l.to_orient) << '\t' << l.overlap << '\n';
    }
    out.flush();
    if (!out) {
        throw IoError("failed writing GFA output");
    }
}

std::string write_gfa(const GfaDocument& doc) {
    std::ostringstream out;
    write_gfa(doc, out);
    return out.str();
}

}  // namespace povu
