#pragma once

#include <string>

#include "subhardy/symbol.hpp"

namespace subhardy {

// Symbol-expression grammar:
//   expr    := term (('+'|'*') term)*          (flat left-associative chain)
//   term    := 'poly:' c0,c1,...
//            | 'const:' c
//            | 'blaschke:' a
//            | 'recip(' expr ')'
//            | 'scale:' c '(' expr ')'
//   complex := re | re+imi | re-imi
//
// recip is applied eagerly (the class is closed under exact reciprocals), so
// parsed trees contain no recip node. Throws ParseError with the byte
// position on syntax errors; semantic errors (|a| >= 1, zero in the disk)
// surface as the constructors' exceptions.
AnalyticSymbol parse_symbol(const std::string& text);

// Canonical printer; parse_symbol(print_symbol(f)) == f (flattened-form
// equality). Composite right children are wrapped in scale:1(...) because
// the flat chain grammar has no other grouping parentheses.
std::string print_symbol(const AnalyticSymbol& f);

// 17-significant-digit complex literal, matching the grammar.
std::string print_complex(cx v);

}  // namespace subhardy
