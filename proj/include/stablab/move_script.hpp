#pragma once

#include <string_view>
#include <vector>

#include "stablab/tietze.hpp"

namespace stablab {

/// Line-oriented Tietze move script. Blank lines and lines starting with '#'
/// are skipped. Words on each line are read over the generators in effect
/// after the preceding moves.
///
///   add_generator c = a*b
///   remove_generator c via 2
///   add_relator ([a,b])^2 by r0; r0
///   remove_relator 1 by a : r0^-1
///
/// A certificate is a ';'-separated factor list, each `[conjugator :] r<i>[^-1]`;
/// an empty list (or no `by` clause) is the empty product.
/// Throws ParseError with the byte offset into the script; CertificateError
/// when a move is rejected while tracking the alphabet.
std::vector<TietzeMove> parse_move_script(std::string_view script, const Presentation& start);

}  // namespace stablab
