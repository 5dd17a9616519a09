#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

#include "hallp1/hall_global.hpp"
#include "hallp1/pbw.hpp"

namespace hallp1 {

struct ParseError : std::runtime_error {
    std::size_t pos;
    ParseError(const std::string& msg, std::size_t at)
        : std::runtime_error(msg + " (at position " + std::to_string(at) + ")"), pos(at) {}
};

// Whole-string parsers; all reject trailing garbage.
//
// Element grammar:
//   expr     := ['-'] term (('+' | '-') term)*
//   term     := factor (('*' | '.') factor)*      '*' twisted product, '.' plain product
//   factor   := '(' expr ')' | class | scalar
//   class    := 'O' '(' int ')' ['^' uint] | 'T' '(' point ',' partition ')'
//   point    := 'inf' | '[' int (',' int)* ']'    constant coefficient first
//   scalar   := uint ['/' uint] | 'v' ['^' ['-'] uint]
Partition parse_partition(const std::string& s);
ClosedPoint parse_point(const std::string& s, long q);
HallElement parse_element_expr(const std::string& s, long q);

// Generator words: whitespace-separated letters "g<int>" / "h<uint>", e.g. "h1 g0 g-2".
GenWord parse_gen_word(const std::string& s);

}  // namespace hallp1
