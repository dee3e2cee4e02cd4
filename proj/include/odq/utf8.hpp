#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace odq::utf8 {

/// Byte offset of the first malformed sequence, or nullopt when `s` is valid.
std::optional<std::size_t> find_invalid(std::string_view s);

/// Decodes one code point starting at `pos` and advances `pos`. Input is
/// assumed valid; malformed bytes decode as themselves.
char32_t next(std::string_view s, std::size_t& pos);

std::u32string decode(std::string_view s);
void append(std::string& out, char32_t cp);

std::size_t length(std::string_view s);

/// Simple case fold covering ASCII, Latin-1 and Latin Extended-A.
char32_t fold(char32_t cp);

bool iequals(std::string_view a, std::string_view b);

}  // namespace odq::utf8
