#include "bnpoly/cache.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace bnpoly {

std::uint64_t content_hash(std::string_view text) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::optional<std::filesystem::path> cache_directory() {
  const char* dir = std::getenv(kCacheEnv);
  if (dir == nullptr || *dir == '\0') return std::nullopt;
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) return std::nullopt;
  return std::filesystem::path(dir);
}

namespace {
std::optional<std::filesystem::path> entry_path(std::string_view kind, std::string_view input) {
  auto dir = cache_directory();
  if (!dir) return std::nullopt;
  char name[32];
  std::snprintf(name, sizeof name, "%016llx", static_cast<unsigned long long>(content_hash(input)));
  return *dir / (std::string(kind) + "-" + name + ".txt");
}
}  // namespace

std::optional<std::string> cache_load(std::string_view kind, std::string_view input) {
  const auto path = entry_path(kind, input);
  if (!path) return std::nullopt;
  std::ifstream in(*path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream body;
  body << in.rdbuf();
  // The first line records the input length, a cheap guard against hash collisions.
  std::string text = body.str();
  const auto eol = text.find('\n');
  if (eol == std::string::npos) return std::nullopt;
  if (text.substr(0, eol) != std::to_string(input.size())) return std::nullopt;
  return text.substr(eol + 1);
}

void cache_store(std::string_view kind, std::string_view input, std::string_view value) {
  const auto path = entry_path(kind, input);
  if (!path) return;
  auto tmp = *path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary);
    if (!out) return;
    out << input.size() << '\n' << value;
    if (!out) return;
  }
  std::error_code ec;
  std::filesystem::rename(tmp, *path, ec);
}

}  // namespace bnpoly
