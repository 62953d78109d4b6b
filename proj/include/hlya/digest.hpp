#pragma once

#include <cstdint>
#include <string>

namespace hlya {

/* FNV-1a, 64-bit. Fast content fingerprint for certificates so reruns can be
   tied to their inputs. Not cryptographic; collisions merely weaken the
   fingerprint, they cannot corrupt any computation. */
inline std::uint64_t fnv1a64(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

inline std::string fnv1a64_hex(const std::string& bytes) {
  static const char* digits = "0123456789abcdef";
  std::uint64_t h = fnv1a64(bytes);
  std::string s(16, '0');
  for (int i = 15; i >= 0; --i) {
    s[i] = digits[h & 0xf];
    h >>= 4;
  }
  return s;
}

}  // namespace hlya
