#include "defect_robust/charge.hpp"

#include <charconv>
#include <cmath>
#include <stdexcept>

namespace defect_robust {
namespace {

double parse_number(std::string_view text) {
  double value = 0;
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end)
    throw std::invalid_argument("not a number: '" + std::string(text) + "'");
  return value;
}

}  // namespace

Charge Charge::parse(std::string_view text) {
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  double value = 0;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    const double den = parse_number(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator in charge");
    value = parse_number(text.substr(0, slash)) / den;
  } else {
    value = parse_number(text);
  }
  const double halves = 2 * value;
  if (!std::isfinite(halves) || halves != std::round(halves) || std::abs(halves) > 1e6)
    throw std::invalid_argument("charge must be a multiple of 1/2: '" + std::string(text) + "'");
  return Charge(static_cast<int>(halves));
}

std::string Charge::to_string() const {
  if (is_integer()) return std::to_string(halves_ / 2);
  return std::to_string(halves_) + "/2";
}

}  // namespace defect_robust
