#pragma once

#include <iosfwd>
#include <string>
#include <variant>

#include "dpath/core.hpp"
#include "dpath/nfa.hpp"
#include "dpath/reductions.hpp"

namespace dpath {

// The six instance kinds understood by the text format. Files are
// line-oriented: the first meaningful line names the kind, '#' starts a
// comment, and blank lines are ignored. parse_instance throws ParseError on
// malformed input and SemanticError on well-formed but inconsistent data.
using Instance =
    std::variant<DPEDInstance, DpeInstance, LCDInstance, MssInstance, UnitIntervalPce, NfaQuery>;

Instance parse_instance(std::istream& in);
Instance parse_instance_file(const std::string& path);

std::string kind_of(const Instance& inst);

void serialize_instance(const Instance& inst, std::ostream& out);
std::string serialize_instance(const Instance& inst);

}  // namespace dpath
