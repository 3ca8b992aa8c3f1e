#include "lpm/walk.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace lpm {

bool LatticePoint::is_origin() const {
  return std::all_of(coords.begin(), coords.end(), [](int c) { return c == 0; });
}

void Walk::validate() const {
  auto ok = [this](int s) { return s >= 1 && s <= dim; };
  if (!std::all_of(up.begin(), up.end(), ok) || !std::all_of(down.begin(), down.end(), ok)) {
    throw std::invalid_argument("walk direction outside [1, " + std::to_string(dim) + "]");
  }
}

namespace {

std::vector<int> parse_half(std::string_view text, bool comma_separated) {
  std::vector<int> out;
  if (text.empty()) return out;
  if (!comma_separated) {
    for (char c : text) {
      if (c < '1' || c > '9') throw std::invalid_argument("bad walk step '" + std::string(1, c) + "'");
      out.push_back(c - '0');
    }
    return out;
  }
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto next = std::min(text.find(',', pos), text.size());
    const auto tok = text.substr(pos, next - pos);
    int v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc{} || ptr != tok.data() + tok.size() || v < 1) {
      throw std::invalid_argument("bad walk step '" + std::string(tok) + "'");
    }
    out.push_back(v);
    pos = next + 1;
  }
  return out;
}

void append_half(std::string& out, const std::vector<int>& half, bool compact) {
  for (std::size_t i = 0; i < half.size(); ++i) {
    if (!compact && i > 0) out += ',';
    out += std::to_string(half[i]);
  }
}

}  // namespace

Walk parse_walk(std::string_view text, int dim) {
  const auto bar = text.find('|');
  if (bar == std::string_view::npos || text.find('|', bar + 1) != std::string_view::npos) {
    throw std::invalid_argument("walk must contain exactly one '|'");
  }
  const bool commas = text.find(',') != std::string_view::npos;
  Walk w;
  w.up = parse_half(text.substr(0, bar), commas);
  w.down = parse_half(text.substr(bar + 1), commas);
  int top = 0;
  for (int s : w.up) top = std::max(top, s);
  for (int s : w.down) top = std::max(top, s);
  w.dim = dim > 0 ? dim : top;
  w.validate();
  return w;
}

std::string format_walk(const Walk& w) {
  const bool compact = std::all_of(w.up.begin(), w.up.end(), [](int s) { return s < 10; }) &&
                       std::all_of(w.down.begin(), w.down.end(), [](int s) { return s < 10; });
  std::string out;
  append_half(out, w.up, compact);
  out += '|';
  append_half(out, w.down, compact);
  return out;
}

std::string format_point(const LatticePoint& p) {
  std::string out = "(";
  for (std::size_t i = 0; i < p.coords.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(p.coords[i]);
  }
  return out + ")";
}

}  // namespace lpm
