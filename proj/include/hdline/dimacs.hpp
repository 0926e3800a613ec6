#ifndef HDLINE_DIMACS_HPP
#define HDLINE_DIMACS_HPP

#include <string>
#include <string_view>

#include "hdline/routing.hpp"

namespace hdline::dimacs {

// "p cnf <vars> <clauses>" header, 'c' comment lines, clauses terminated by 0.
routing::Cnf parse(std::string_view text);

std::string format(const routing::Cnf& cnf);

} // namespace hdline::dimacs

#endif
