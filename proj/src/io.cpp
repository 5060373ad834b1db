#include "alcove/io.hpp"

#include <fstream>
#include <sstream>

namespace alcove {

std::vector<ProjLine> parse_line_file(std::istream& in) {
    std::vector<ProjLine> lines;
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        auto hash = raw.find('#');
        if (hash != std::string::npos) raw.erase(hash);
        std::istringstream row(raw);
        std::string ta, tb, tc;
        if (!(row >> ta)) continue;  // blank or comment-only
        if (!(row >> tb >> tc))
            throw ParseError("line " + std::to_string(lineno) + ": expected three rationals");
        std::string extra;
        if (row >> extra)
            throw ParseError("line " + std::to_string(lineno) + ": trailing token '" + extra + "'");
        lines.emplace_back(parse_rational(ta), parse_rational(tb), parse_rational(tc));
    }
    return lines;
}

std::vector<ProjLine> load_line_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open line file: " + path);
    return parse_line_file(in);
}

}  // namespace alcove
