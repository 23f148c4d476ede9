#ifndef LSC_HASH_HPP
#define LSC_HASH_HPP

#include <cstdint>
#include <string>
#include <string_view>

namespace lsc {

// FNV-1a 64-bit; content digests for reports and input hashes. Not
// cryptographic, just a stable fingerprint.
inline std::uint64_t fnv1a64(std::string_view data,
                             std::uint64_t seed = 0xcbf29ce484222325ULL) {
  std::uint64_t h = seed;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

inline std::string hex64(std::uint64_t v) {
  static const char* digits = "0123456789abcdef";
  std::string s(16, '0');
  for (int i = 15; i >= 0; --i) {
    s[static_cast<std::size_t>(i)] = digits[v & 0xf];
    v >>= 4;
  }
  return s;
}

}  // namespace lsc

#endif
