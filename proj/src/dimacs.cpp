#include "hdline/dimacs.hpp"

#include <sstream>

#include "hdline/error.hpp"

namespace hdline::dimacs {

routing::Cnf parse(std::string_view text)
{
    routing::Cnf cnf;
    std::istringstream lines{std::string(text)};
    std::string line;
    bool have_header = false;
    long declared_clauses = 0;
    std::vector<routing::Literal> current;
    int line_no = 0;
    while (std::getline(lines, line)) {
        ++line_no;
        std::istringstream tokens(line);
        std::string first;
        if (!(tokens >> first)) continue;
        if (first[0] == 'c' || first == "%") continue;
        if (first == "p") {
            std::string kind;
            if (have_header || !(tokens >> kind >> cnf.num_vars >> declared_clauses) || kind != "cnf") {
                throw Error(ErrorCode::ParseError, "bad DIMACS header on line " + std::to_string(line_no));
            }
            have_header = true;
            continue;
        }
        if (!have_header) throw Error(ErrorCode::ParseError, "clause before the 'p cnf' header");
        std::istringstream all(line);
        long lit = 0;
        while (all >> lit) {
            if (lit == 0) {
                cnf.clauses.push_back(std::move(current));
                current.clear();
                continue;
            }
            const long var = lit < 0 ? -lit : lit;
            current.push_back({static_cast<int>(var), lit < 0});
        }
        if (!all.eof()) throw Error(ErrorCode::ParseError, "bad token on line " + std::to_string(line_no));
    }
    if (!have_header) throw Error(ErrorCode::ParseError, "missing 'p cnf' header");
    if (!current.empty()) throw Error(ErrorCode::ParseError, "last clause is not terminated by 0");
    if (static_cast<long>(cnf.clauses.size()) != declared_clauses) {
        throw Error(ErrorCode::ParseError, "header declares " + std::to_string(declared_clauses) + " clauses, found " +
                                               std::to_string(cnf.clauses.size()));
    }
    cnf.validate();
    return cnf;
}

std::string format(const routing::Cnf& cnf)
{
    std::ostringstream os;
    os << "p cnf " << cnf.num_vars << " " << cnf.clauses.size() << "\n";
    for (const auto& clause : cnf.clauses) {
        for (const auto& lit : clause) os << (lit.negated ? "-" : "") << lit.var << " ";
        os << "0\n";
    }
    return os.str();
}

} // namespace hdline::dimacs
