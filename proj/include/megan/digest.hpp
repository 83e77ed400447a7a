#pragma once

#include <cstdint>
#include <fstream>
#include <sstream>
#include <string>

#include "megan/errors.hpp"

namespace megan {

inline uint64_t fnv1a64(const void* data, size_t n, uint64_t h = 0xcbf29ce484222325ULL) {
  const auto* p = static_cast<const unsigned char*>(data);
  for (size_t i = 0; i < n; ++i) {
    h ^= p[i];
    h *= 0x100000001b3ULL;
  }
  return h;
}

inline std::string digest_hex(uint64_t h) {
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return std::string(buf);
}

inline std::string digest_of_bytes(const std::string& bytes) {
  return digest_hex(fnv1a64(bytes.data(), bytes.size()));
}

inline std::string digest_of_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw io_error("cannot open for digest: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return digest_of_bytes(ss.str());
}

}  // namespace megan
