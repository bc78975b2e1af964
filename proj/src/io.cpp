#include "polyfacet/io.hpp"

#include "polyfacet/error.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <string_view>
#include <vector>

namespace polyfacet {

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

[[noreturn]] void parse_error(std::size_t line, const std::string& what) {
    throw Error(ErrorCode::ParseError, "line " + std::to_string(line) + ": " + what);
}

std::vector<std::string> tokens(std::string_view line) {
    std::vector<std::string> out;
    std::istringstream ss{std::string(line)};
    std::string tok;
    while (ss >> tok) out.push_back(tok);
    return out;
}

double parse_real(const std::string& tok, std::size_t line) {
    double value = 0.0;
    const char* first = tok.data();
    const char* last = first + tok.size();
    if (first != last && *first == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last || !std::isfinite(value)) {
        parse_error(line, "not a real number: '" + tok + "'");
    }
    return value;
}

std::size_t parse_count(const std::string& tok, std::size_t line) {
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size()) {
        parse_error(line, "not a count: '" + tok + "'");
    }
    return value;
}

struct Block {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<std::vector<double>> data;
    std::vector<std::size_t> lines;
};

// Shared cdd grammar: header keyword, begin, "rows cols type", rows, end.
Block parse_block(std::istream& in, std::string_view representation, std::string_view other) {
    std::string raw;
    std::size_t line = 0;
    bool seen_kind = false;
    bool in_body = false;
    bool have_size = false;
    bool ended = false;
    Block block;

    while (std::getline(in, raw)) {
        ++line;
        const std::string_view text = trim(raw);
        if (text.empty()) continue;
        if (!in_body) {
            if (text.front() == '*') continue;
            if (text == representation) {
                seen_kind = true;
                continue;
            }
            if (text == other) parse_error(line, "expected " + std::string(representation) + ", found " + std::string(other));
            if (text == "begin") {
                if (!seen_kind) parse_error(line, "missing '" + std::string(representation) + "' before begin");
                in_body = true;
                continue;
            }
            parse_error(line, "unexpected line before begin: '" + std::string(text) + "'");
        }
        if (!have_size) {
            const auto toks = tokens(text);
            if (toks.size() != 3) parse_error(line, "expected 'rows cols real'");
            block.rows = parse_count(toks[0], line);
            block.cols = parse_count(toks[1], line);
            if (toks[2] != "real" && toks[2] != "integer") {
                parse_error(line, "unsupported number type '" + toks[2] + "'");
            }
            if (block.cols < 2) parse_error(line, "column count must be at least 2");
            have_size = true;
            continue;
        }
        if (text == "end") {
            ended = true;
            break;
        }
        const auto toks = tokens(text);
        if (toks.size() != block.cols) {
            parse_error(line, "expected " + std::to_string(block.cols) + " numbers, found " + std::to_string(toks.size()));
        }
        if (block.data.size() == block.rows) {
            parse_error(line, "more data lines than the declared " + std::to_string(block.rows));
        }
        std::vector<double> row;
        row.reserve(toks.size());
        for (const auto& tok : toks) row.push_back(parse_real(tok, line));
        block.data.push_back(std::move(row));
        block.lines.push_back(line);
    }
    if (!in_body) parse_error(line, "missing 'begin'");
    if (!have_size) parse_error(line, "missing size line");
    if (!ended) parse_error(line, "missing 'end'");
    if (block.data.size() != block.rows) {
        parse_error(line, "declared " + std::to_string(block.rows) + " rows but found " + std::to_string(block.data.size()));
    }
    return block;
}

std::ifstream open_in(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::IoError, "cannot open '" + path.string() + "'");
    return in;
}

std::ofstream open_out(const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw Error(ErrorCode::IoError, "cannot write '" + path.string() + "'");
    return out;
}

}  // namespace

std::string format_number(double value) {
    if (value == 0.0) return "0";  // also folds -0
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
    std::string shortest(buf, ptr);
    if (std::trunc(value) == value && std::abs(value) < 1e17) {
        auto [p2, ec2] = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::fixed);
        return std::string(buf, p2);
    }
    return shortest;
}

VertexMatrix parse_ext(std::istream& in) {
    const Block block = parse_block(in, "V-representation", "H-representation");
    const auto d = static_cast<Eigen::Index>(block.cols - 1);
    Matrix rows(static_cast<Eigen::Index>(block.rows), d);
    for (std::size_t r = 0; r < block.rows; ++r) {
        if (block.data[r][0] != 1.0) {
            throw Error(ErrorCode::RaysUnsupported,
                        "line " + std::to_string(block.lines[r]) + ": leading marker must be 1 (rays are not supported)");
        }
        for (Eigen::Index c = 0; c < d; ++c) rows(static_cast<Eigen::Index>(r), c) = block.data[r][static_cast<std::size_t>(c + 1)];
    }
    try {
        return VertexMatrix(std::move(rows));
    } catch (const Error& e) {
        throw Error(ErrorCode::ParseError, e.what());
    }
}

VertexMatrix read_ext(const std::filesystem::path& path) {
    auto in = open_in(path);
    return parse_ext(in);
}

void format_ext(std::ostream& out, const VertexMatrix& V) {
    out << "V-representation\nbegin\n" << V.count() << ' ' << V.dim() + 1 << " real\n";
    for (Index r = 0; r < V.count(); ++r) {
        out << '1';
        for (Index c = 0; c < V.dim(); ++c) {
            out << ' ' << format_number(V.rows()(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)));
        }
        out << '\n';
    }
    out << "end\n";
}

void write_ext(const std::filesystem::path& path, const VertexMatrix& V) {
    auto out = open_out(path);
    format_ext(out, V);
    if (!out) throw Error(ErrorCode::IoError, "failed writing '" + path.string() + "'");
}

HalfSpaces parse_ine(std::istream& in) {
    const Block block = parse_block(in, "H-representation", "V-representation");
    const auto m = static_cast<Eigen::Index>(block.rows);
    const auto d = static_cast<Eigen::Index>(block.cols - 1);
    HalfSpaces out{Matrix(m, d), Vector(m)};
    for (Eigen::Index r = 0; r < m; ++r) {
        const auto& row = block.data[static_cast<std::size_t>(r)];
        out.b[r] = row[0];
        for (Eigen::Index c = 0; c < d; ++c) out.H(r, c) = -row[static_cast<std::size_t>(c + 1)];
    }
    return out;
}

HalfSpaces read_ine(const std::filesystem::path& path) {
    auto in = open_in(path);
    return parse_ine(in);
}

void format_ine(std::ostream& out, const Matrix& H, const Vector& b) {
    out << "H-representation\nbegin\n" << H.rows() << ' ' << H.cols() + 1 << " real\n";
    for (Eigen::Index r = 0; r < H.rows(); ++r) {
        out << format_number(b[r]);
        for (Eigen::Index c = 0; c < H.cols(); ++c) out << ' ' << format_number(-H(r, c));
        out << '\n';
    }
    out << "end\n";
}

void write_ine(const std::filesystem::path& path, const HRepresentation& hrep) {
    if (hrep.facet_count() == 0) {
        throw Error(ErrorCode::InvalidArgument, "refusing to write an H-representation without facets");
    }
    auto out = open_out(path);
    format_ine(out, hrep.H, hrep.b);
    if (!out) throw Error(ErrorCode::IoError, "failed writing '" + path.string() + "'");
}

}  // namespace polyfacet
