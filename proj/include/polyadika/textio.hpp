#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace polyadika::textio {

// Whitespace-tokenized non-empty lines with '#' comments removed.
std::vector<std::vector<std::string>> lines(const std::string& text);

long long to_int(const std::string& tok, const std::string& what);

// Expects `line` to be exactly {key, value} and returns the integer value.
long long keyed_int(const std::vector<std::string>& line, const std::string& key);

} // namespace polyadika::textio
