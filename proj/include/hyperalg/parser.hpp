#ifndef HYPERALG_PARSER_HPP
#define HYPERALG_PARSER_HPP

#include <string>

#include "hyperalg/element.hpp"

namespace halg {

struct ParseError : std::runtime_error {
    size_t pos;
    ParseError(const std::string& msg, size_t at)
        : std::runtime_error(msg + " at position " + std::to_string(at)), pos(at) {}
};

// Grammar: sums of products of atoms.  Atoms are integer literals,
// X(m), Y(m), H(n), mu(a), mu(a,r), B(bits;pairs), E(pairs), and
// parenthesized subexpressions.  Pairs are written a:2j.
// Round-trips the canonical Element text form.
Element parse_element(const std::string& text, uint32_t p);

}  // namespace halg

#endif
