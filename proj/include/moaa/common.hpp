#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace moaa {

/// FNV-1a 64-bit running hash. Field separators are mixed in by the callers.
class Fnv1a {
 public:
  Fnv1a& update(std::string_view data) {
    for (unsigned char c : data) {
      hash_ ^= c;
      hash_ *= 0x100000001b3ULL;
    }
    return *this;
  }
  Fnv1a& update_u64(uint64_t v);
  Fnv1a& separator() { return update(std::string_view("\x1f", 1)); }
  uint64_t value() const { return hash_; }

 private:
  uint64_t hash_ = 0xcbf29ce484222325ULL;
};

std::string hex64(uint64_t value);
std::string hex8(uint64_t value);  // first 8 hex digits, used for short tags

/// Whitespace-word count; stands in for token counts on mock endpoints.
int64_t approx_token_count(std::string_view text);

std::string format_double(double value, const char* fmt = "%.9g");

std::string read_text_file(const std::string& path);        // io_error on failure
void write_text_file(const std::string& path, std::string_view content);
void atomic_write_text_file(const std::string& path, std::string_view content);
bool file_exists(const std::string& path);

std::vector<std::string> split_lines(std::string_view text);
std::string trim(std::string_view text);
std::string lowercase(std::string_view text);
bool contains(std::string_view haystack, std::string_view needle);

std::string now_iso8601();

}  // namespace moaa
