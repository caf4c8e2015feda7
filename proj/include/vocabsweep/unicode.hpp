#pragma once

#include <string>
#include <string_view>

namespace vocabsweep::unicode {

/// Strips leading and trailing Unicode White_Space code points from UTF-8 text.
std::string trim(std::string_view utf8);

/// Full Unicode case folding (ICU default folding options).
std::string case_fold(std::string_view utf8);

}  // namespace vocabsweep::unicode
