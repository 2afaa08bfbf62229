#pragma once

#include <string>

#include "nchopf/combinatorics.hpp"
#include "nchopf/scalars.hpp"

namespace nchopf::test {

inline LabeledSetPartition lsp(const std::string& text) { return LabeledSetPartition::parse(text); }
inline SetPartition sp(const std::string& text) { return SetPartition::parse(text); }
inline CycRational cyc(int q, long value) { return CycRational(q, Rational(value)); }

}  // namespace nchopf::test
