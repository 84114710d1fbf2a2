#include "sepclass/partition.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

#include "sepclass/errors.hpp"

namespace sepclass {

bool is_partition_sequence(std::span<const Part> parts) {
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] == 0) return false;
    if (i > 0 && parts[i - 1] < parts[i]) return false;
  }
  return true;
}

bool is_canonical_overpartition(std::span<const OverPart> parts, Convention convention) {
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i].magnitude == 0) return false;
    if (i == 0) continue;
    const auto& prev = parts[i - 1];
    const auto& cur = parts[i];
    if (prev.magnitude < cur.magnitude) return false;
    if (prev.magnitude == cur.magnitude) {
      // First: an overline may only open a run; Last: it may only close one.
      if (convention == Convention::First && cur.overlined) return false;
      if (convention == Convention::Last && prev.overlined) return false;
    }
  }
  return true;
}

Partition::Partition(std::vector<Part> parts) : parts_(std::move(parts)) {
  if (!is_partition_sequence(parts_)) {
    throw InvalidArgument("not a partition (parts must be positive and non-increasing): " +
                          to_string());
  }
}

std::uint64_t Partition::weight() const {
  return std::accumulate(parts_.begin(), parts_.end(), std::uint64_t{0});
}

std::string Partition::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out + ")";
}

Overpartition::Overpartition(std::vector<OverPart> parts, Convention convention)
    : parts_(std::move(parts)), convention_(convention) {
  if (!is_canonical_overpartition(parts_, convention_)) {
    throw InvalidArgument("not a canonical " + sepclass::to_string(convention_) +
                          "-occurrence overpartition: " + to_string());
  }
}

Overpartition Overpartition::canonicalize(std::vector<OverPart> parts, Convention convention) {
  std::stable_sort(parts.begin(), parts.end(),
                   [](const OverPart& x, const OverPart& y) { return x.magnitude > y.magnitude; });
  for (std::size_t lo = 0; lo < parts.size();) {
    if (parts[lo].magnitude == 0) throw InvalidArgument("overpartition parts must be positive");
    std::size_t hi = lo;
    std::size_t overlines = 0;
    while (hi < parts.size() && parts[hi].magnitude == parts[lo].magnitude) {
      overlines += parts[hi].overlined ? 1 : 0;
      parts[hi].overlined = false;
      ++hi;
    }
    if (overlines > 1) {
      throw InvalidArgument("magnitude " + std::to_string(parts[lo].magnitude) +
                            " is overlined more than once");
    }
    if (overlines == 1) parts[convention == Convention::First ? lo : hi - 1].overlined = true;
    lo = hi;
  }
  return Overpartition(std::move(parts), convention);
}

std::uint64_t Overpartition::weight() const {
  std::uint64_t w = 0;
  for (const auto& p : parts_) w += p.magnitude;
  return w;
}

std::size_t Overpartition::overline_count() const {
  return static_cast<std::size_t>(
      std::count_if(parts_.begin(), parts_.end(), [](const OverPart& p) { return p.overlined; }));
}

std::string Overpartition::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i].magnitude);
    if (parts_[i].overlined) out += '\'';
  }
  return out + ")";
}

std::uint64_t weight(const Partition& p) { return p.weight(); }
std::uint64_t weight(const Overpartition& p) { return p.weight(); }
std::uint64_t weight(const ClassObject& obj) {
  return std::visit([](const auto& o) { return o.weight(); }, obj);
}

std::size_t residue_count(const Partition& p, std::uint32_t k, std::uint32_t d) {
  if (k == 0) throw InvalidArgument("residue_count: modulus must be positive");
  const auto target = d % k;
  return static_cast<std::size_t>(std::count_if(p.parts().begin(), p.parts().end(),
                                                [&](Part x) { return x % k == target; }));
}

std::string to_string(const ClassObject& obj) {
  return std::visit([](const auto& o) { return o.to_string(); }, obj);
}

std::string to_string(Convention convention) {
  return convention == Convention::First ? "first" : "last";
}

namespace {

std::vector<std::string> split_items(const std::string& text) {
  std::string cleaned;
  for (char ch : text) {
    if (ch == '(' || ch == ')' || ch == ' ' || ch == '\t') continue;
    cleaned += ch;
  }
  std::vector<std::string> items;
  if (cleaned.empty()) return items;
  std::stringstream in(cleaned);
  std::string item;
  while (std::getline(in, item, ',')) items.push_back(item);
  if (cleaned.back() == ',') items.emplace_back();
  return items;
}

Part parse_magnitude(std::string_view digits, const std::string& text) {
  Part value = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (digits.empty() || ec != std::errc() || ptr != digits.data() + digits.size()) {
    throw InvalidArgument("cannot parse parts list: \"" + text + "\"");
  }
  return value;
}

}  // namespace

Partition parse_partition(const std::string& text) {
  std::vector<Part> parts;
  for (const auto& item : split_items(text)) parts.push_back(parse_magnitude(item, text));
  return Partition(std::move(parts));
}

Overpartition parse_overpartition(const std::string& text, Convention convention) {
  std::vector<OverPart> parts;
  for (const auto& item : split_items(text)) {
    std::string_view digits = item;
    bool over = false;
    if (!digits.empty() && digits.back() == '\'') {
      over = true;
      digits.remove_suffix(1);
    }
    parts.push_back(OverPart{parse_magnitude(digits, text), over});
  }
  return Overpartition(std::move(parts), convention);
}

}  // namespace sepclass
