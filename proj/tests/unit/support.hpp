#pragma once

#include <string>

#include "tvb/word.hpp"

inline tvb::Word W(const std::string& text, int n, tvb::Alphabet a = tvb::Alphabet::Ambient) {
  return tvb::parse_word(text, n, a);
}

inline std::string F(const tvb::Word& w) { return tvb::format_word(w); }
