#pragma once

#include <span>
#include <string_view>

namespace dgad {

/// 200 common English words (3-10 lowercase letters each), embedded so the
/// dictionary and natural generators run offline and reproducibly.
std::span<const std::string_view> embedded_wordlist();

} // namespace dgad
