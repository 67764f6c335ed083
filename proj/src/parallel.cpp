#include "wreath_id/parallel.hpp"

#include <charconv>
#include <cstdlib>
#include <string_view>

namespace wreath_id {
namespace {

std::atomic<std::size_t> g_override{0};

std::size_t from_environment() {
  const char* raw = std::getenv("WREATH_ID_THREADS");
  if (raw == nullptr) return 0;
  std::string_view text(raw);
  std::size_t value = 0;
  auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || end != text.data() + text.size()) return 0;
  return value;
}

}  // namespace

std::size_t worker_count() {
  std::size_t wanted = g_override.load();
  if (wanted == 0) wanted = from_environment();
  if (wanted == 0) wanted = std::thread::hardware_concurrency();
  return wanted == 0 ? 1 : wanted;
}

void set_worker_count(std::size_t threads) { g_override.store(threads); }

}  // namespace wreath_id
