#include "holant/rational.hpp"

#include <cctype>

#include "holant/cyclo.hpp"
#include "holant/errors.hpp"

namespace holant {

std::string to_string(const Rat& r) { return r.get_str(10); }

Rat parse_rat(std::string_view text) {
  std::size_t start = 0;
  while (start < text.size() && std::isspace(static_cast<unsigned char>(text[start]))) ++start;
  for (std::size_t k = start; k < text.size(); ++k) {
    char c = text[k];
    bool ok = std::isdigit(static_cast<unsigned char>(c)) || c == '/' ||
              std::isspace(static_cast<unsigned char>(c)) || (c == '-' && k == start);
    if (!ok) throw Error(ErrorKind::Syntax, "not a rational: \"" + std::string(text) + "\"");
  }
  return parse_cyc(text).rational();
}

}  // namespace holant
